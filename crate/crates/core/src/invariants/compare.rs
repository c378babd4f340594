use serde::Serialize;
use serde_json::Value;

use super::Fingerprint;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Difference {
    pub entry: String,
    pub left: Value,
    pub right: Value,
}

/// Outcome of comparing two fingerprints over the same field. `compared`
/// lists exactly the entries that were available on both sides; `notes`
/// explains every entry that was skipped.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum Verdict {
    Distinguished {
        differences: Vec<Difference>,
        compared: Vec<String>,
        notes: Vec<String>,
    },
    Indistinguishable {
        compared: Vec<String>,
        notes: Vec<String>,
    },
}

impl Verdict {
    pub fn is_distinguished(&self) -> bool {
        matches!(self, Verdict::Distinguished { .. })
    }

    pub fn differences(&self) -> &[Difference] {
        match self {
            Verdict::Distinguished { differences, .. } => differences,
            Verdict::Indistinguishable { .. } => &[],
        }
    }

    pub fn compared(&self) -> &[String] {
        match self {
            Verdict::Distinguished { compared, .. }
            | Verdict::Indistinguishable { compared, .. } => compared,
        }
    }

    pub fn notes(&self) -> &[String] {
        match self {
            Verdict::Distinguished { notes, .. } | Verdict::Indistinguishable { notes, .. } => {
                notes
            }
        }
    }
}

fn unavailable(v: &Value) -> Option<&str> {
    v.as_object()
        .filter(|o| o.len() == 1)
        .and_then(|o| o.get("unavailable"))
        .and_then(Value::as_str)
}

/// Compares every entry available on both sides. Unavailable entries are
/// skipped, never treated as equal. The nilpotency class is compared only
/// when it is known to be an invariant for the pair: exponent `p` or cyclic
/// `G′` on either side, or class two / maximal class on both sides.
pub fn compare(a: &Fingerprint, b: &Fingerprint) -> Result<Verdict> {
    if a.field != b.field {
        return Err(Error::FieldMismatch(
            format!("{}^{}", a.field.p, a.field.k),
            format!("{}^{}", b.field.p, b.field.k),
        ));
    }
    let va = serde_json::to_value(a)?;
    let vb = serde_json::to_value(b)?;
    let mut t = Tally::default();

    for name in Fingerprint::ENTRIES {
        match name {
            "field" => {}
            "kernel_sizes" => {
                for ka in &a.kernel_sizes {
                    let entry = format!("kernel_sizes({},{},{})", ka.i, ka.j, ka.k);
                    match b
                        .kernel_sizes
                        .iter()
                        .find(|kb| (kb.i, kb.j, kb.k) == (ka.i, ka.j, ka.k))
                    {
                        Some(kb) => t.check(
                            entry,
                            &serde_json::to_value(&ka.counts)?,
                            &serde_json::to_value(&kb.counts)?,
                        ),
                        None => t
                            .notes
                            .push(format!("{entry}: not compared (missing on one side)")),
                    }
                }
            }
            "nilpotency_class" => {
                let (ca, cb) = (&a.nilpotency_class, &b.nilpotency_class);
                let licence = if ca.exponent_p || cb.exponent_p {
                    Some("exponent p")
                } else if ca.derived_cyclic || cb.derived_cyclic {
                    Some("cyclic derived subgroup")
                } else if ca.class_two && cb.class_two {
                    Some("class two")
                } else if ca.maximal_class && cb.maximal_class {
                    Some("maximal class")
                } else {
                    None
                };
                match licence {
                    Some(why) => {
                        t.notes.push(format!("nilpotency_class: compared ({why})"));
                        t.check(
                            name.to_string(),
                            &Value::from(ca.class),
                            &Value::from(cb.class),
                        );
                    }
                    None => {
                        if ca.class_two != cb.class_two || ca.maximal_class != cb.maximal_class {
                            t.notes.push(
                                "nilpotency_class: not compared (class two or maximal class holds on one side only)"
                                    .to_string(),
                            );
                        } else {
                            t.notes.push(
                                "nilpotency_class: not compared (no licensing condition holds)"
                                    .to_string(),
                            );
                        }
                    }
                }
            }
            _ => t.check(name.to_string(), &va[name], &vb[name]),
        }
    }
    let Tally {
        compared,
        differences,
        notes,
    } = t;
    Ok(if differences.is_empty() {
        Verdict::Indistinguishable { compared, notes }
    } else {
        Verdict::Distinguished {
            differences,
            compared,
            notes,
        }
    })
}

#[derive(Default)]
struct Tally {
    compared: Vec<String>,
    differences: Vec<Difference>,
    notes: Vec<String>,
}

impl Tally {
    fn check(&mut self, name: String, x: &Value, y: &Value) {
        match (unavailable(x), unavailable(y)) {
            (None, None) => {
                if x != y {
                    self.differences.push(Difference {
                        entry: name.clone(),
                        left: x.clone(),
                        right: y.clone(),
                    });
                }
                self.compared.push(name);
            }
            (ra, rb) => {
                let reason = ra.or(rb).unwrap();
                self.notes
                    .push(format!("{name}: not compared (unavailable: {reason})"));
            }
        }
    }
}
