use serde_json::{json, Value};
use std::io::Write;

use mip_core::families::FamilySpec;
use mip_core::gfq::FiniteField;
use mip_core::group::FiniteGroup;
use mip_core::invariants::{compare, fingerprint, Fingerprint};
use mip_core::iso::{
    group_isomorphic, nilpotent_algebra_iso, verify_witness, IsoObject, IsoOutcome, IsoWitness,
};
use mip_core::modalg::{GroupAlgebra, QuotientAlgebra};
use mip_core::{Caps, Error};

use crate::args::{Cli, Command, Format};
use crate::tables::run_table;
use crate::{exit, CliError};

/// Runs one command, writing its output to `out`, and returns the exit code.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<i32, CliError> {
    let caps = match &cli.caps {
        Some(path) => Caps::from_file(path)?,
        None => Caps::default(),
    };
    let format = cli.command.format();
    match &cli.command {
        Command::Report { spec, field, .. } => {
            let g = build(spec, &caps)?;
            let f = resolve_field(field.as_deref(), &g, &caps)?;
            let fp = fingerprint(&g, &f, &caps)?;
            match format {
                Some(Format::Csv) => write_csv(&fp, out)?,
                _ => writeln!(out, "{}", fp.to_json()).map_err(io)?,
            }
            Ok(exit::OK)
        }
        Command::Compare {
            spec1,
            spec2,
            field,
            assert_distinguished,
        } => {
            let g = build(spec1, &caps)?;
            let h = build(spec2, &caps)?;
            let f = resolve_field(field.as_deref(), &g, &caps)?;
            let verdict = compare(&fingerprint(&g, &f, &caps)?, &fingerprint(&h, &f, &caps)?)?;
            let body = json!({ "left": spec1, "right": spec2, "field": f.to_string(), "verdict": verdict });
            writeln!(
                out,
                "{}",
                serde_json::to_string_pretty(&body).expect("json")
            )
            .map_err(io)?;
            Ok(if *assert_distinguished && !verdict.is_distinguished() {
                exit::CHECK_FAILED
            } else {
                exit::OK
            })
        }
        Command::Tables { name, json } => {
            let table = run_table(name, &caps)?;
            if *json {
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&table).expect("json")
                )
                .map_err(io)?;
            } else {
                write!(out, "{}", table.render()).map_err(io)?;
            }
            Ok(if table.passed() {
                exit::OK
            } else {
                exit::CHECK_FAILED
            })
        }
        Command::KernelSize {
            spec,
            i,
            j,
            k,
            field,
        } => {
            let g = build(spec, &caps)?;
            let f = resolve_field(field.as_deref(), &g, &caps)?;
            let result =
                section(g, &f, *i, *j, &caps).and_then(|q| q.kernel_size(*k, caps.enumeration));
            match result {
                Ok(ks) => {
                    let body = json!({
                        "spec": spec, "field": f.to_string(), "section": [i, j], "k": k,
                        "kernel": ks.kernel, "nonzero": ks.nonzero,
                    });
                    writeln!(
                        out,
                        "{}",
                        serde_json::to_string_pretty(&body).expect("json")
                    )
                    .map_err(io)?;
                    Ok(exit::OK)
                }
                Err(e) if e.is_cap() => cap_exceeded(out, &e),
                Err(e) => Err(e.into()),
            }
        }
        Command::Iso {
            spec1,
            spec2,
            mode,
            field,
        } => {
            let g = build(spec1, &caps)?;
            let h = build(spec2, &caps)?;
            if mode == "group" {
                return match group_isomorphic(&g, &h, caps.iso_search) {
                    Ok(outcome) => iso_report(out, "group", &outcome, |w| {
                        let verified =
                            verify_witness(w, IsoObject::Group(&g), IsoObject::Group(&h))?;
                        Ok(json!({ "images": group_images(&g, &h, w), "verified": verified }))
                    }),
                    Err(e) if e.is_cap() => cap_exceeded(out, &e),
                    Err(e) => Err(e.into()),
                };
            }
            let (i, j) = parse_algebra_mode(mode)?;
            let Some(field) = field else {
                return Err(CliError::Usage("--mode algebra needs --field".into()));
            };
            let f = FiniteField::parse(field, caps.field_size)?;
            let sections =
                section(g, &f, i, j, &caps).and_then(|a| Ok((a, section(h, &f, i, j, &caps)?)));
            let (a, b) = match sections {
                Ok(ab) => ab,
                Err(e) if e.is_cap() => return cap_exceeded(out, &e),
                Err(e) => return Err(e.into()),
            };
            match nilpotent_algebra_iso(&a, &b, caps.iso_search) {
                Ok(outcome) => iso_report(out, &format!("algebra:{i},{j}"), &outcome, |w| {
                    let verified =
                        verify_witness(w, IsoObject::Algebra(&a), IsoObject::Algebra(&b))?;
                    let mut body = serde_json::to_value(w).expect("json");
                    body["verified"] = Value::Bool(verified);
                    Ok(body)
                }),
                Err(e) if e.is_cap() => cap_exceeded(out, &e),
                Err(e) => Err(e.into()),
            }
        }
    }
}

fn io(e: std::io::Error) -> CliError {
    CliError::Core(e.into())
}

fn build(spec: &str, caps: &Caps) -> Result<FiniteGroup, CliError> {
    Ok(FamilySpec::parse(spec)?.build(caps)?)
}

fn resolve_field(
    field: Option<&str>,
    g: &FiniteGroup,
    caps: &Caps,
) -> Result<FiniteField, CliError> {
    match field {
        Some(text) => Ok(FiniteField::parse(text, caps.field_size)?),
        None => {
            let p = g.require_p_group()?;
            Ok(FiniteField::with_cap(p, 1, caps.field_size)?)
        }
    }
}

fn section(
    g: FiniteGroup,
    f: &FiniteField,
    i: usize,
    j: usize,
    caps: &Caps,
) -> mip_core::Result<QuotientAlgebra> {
    if g.order() > caps.algebra_order {
        return Err(Error::OrderCap {
            order: g.order(),
            cap: caps.algebra_order,
            what: "group algebra",
        });
    }
    let fg = GroupAlgebra::with_caps(g, f.clone(), caps)?;
    let powers = fg.augmentation_powers();
    fg.power_section(&powers, i, j)
}

fn parse_algebra_mode(mode: &str) -> Result<(usize, usize), CliError> {
    let bad = || {
        CliError::Usage(format!(
            "mode must be `group` or `algebra:i,j`, got `{mode}`"
        ))
    };
    let rest = mode.strip_prefix("algebra:").ok_or_else(bad)?;
    let (i, j) = rest.split_once(',').ok_or_else(bad)?;
    Ok((
        i.trim().parse().map_err(|_| bad())?,
        j.trim().parse().map_err(|_| bad())?,
    ))
}

fn cap_exceeded(out: &mut dyn Write, e: &Error) -> Result<i32, CliError> {
    let body = json!({ "outcome": "cap_exceeded", "error": e.to_string() });
    writeln!(
        out,
        "{}",
        serde_json::to_string_pretty(&body).expect("json")
    )
    .map_err(io)?;
    Ok(exit::CAP_EXCEEDED)
}

fn iso_report(
    out: &mut dyn Write,
    mode: &str,
    outcome: &IsoOutcome,
    describe: impl FnOnce(&IsoWitness) -> mip_core::Result<Value>,
) -> Result<i32, CliError> {
    let (body, code) = match outcome {
        IsoOutcome::Isomorphic(w) => (
            json!({ "mode": mode, "outcome": "isomorphic", "witness": describe(w)? }),
            exit::OK,
        ),
        IsoOutcome::NotIsomorphic => (
            json!({ "mode": mode, "outcome": "not_isomorphic" }),
            exit::NOT_ISOMORPHIC,
        ),
    };
    writeln!(
        out,
        "{}",
        serde_json::to_string_pretty(&body).expect("json")
    )
    .map_err(io)?;
    Ok(code)
}

/// Generator images written as words in the target's generators.
fn group_images(g: &FiniteGroup, h: &FiniteGroup, w: &IsoWitness) -> Value {
    let IsoWitness::Group { images, .. } = w else {
        return Value::Null;
    };
    let names = g
        .presentation()
        .map(|p| p.generators().to_vec())
        .unwrap_or_default();
    images
        .iter()
        .enumerate()
        .map(|(k, &y)| {
            let name = names.get(k).cloned().unwrap_or_else(|| format!("g{k}"));
            json!({ "generator": name, "image": h.label(y) })
        })
        .collect()
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// One `entry,value` line per fingerprint entry, with each kernel-size
/// section on its own line and values in compact JSON.
fn write_csv(fp: &Fingerprint, out: &mut dyn Write) -> Result<(), CliError> {
    let v = serde_json::to_value(fp).expect("json");
    writeln!(out, "entry,value").map_err(io)?;
    for name in Fingerprint::ENTRIES {
        if name == "kernel_sizes" {
            for e in &fp.kernel_sizes {
                let value = serde_json::to_string(&e.counts).expect("json");
                writeln!(
                    out,
                    "{},{}",
                    csv_field(&format!("kernel_sizes({},{},{})", e.i, e.j, e.k)),
                    csv_field(&value)
                )
                .map_err(io)?;
            }
        } else {
            writeln!(out, "{},{}", name, csv_field(&v[name].to_string())).map_err(io)?;
        }
    }
    Ok(())
}
