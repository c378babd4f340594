//! Constructors for the concrete group families, plus a compact textual
//! spec language used by the command line.
//!
//! | spec              | group                                              |
//! |-------------------|----------------------------------------------------|
//! | `D8`, `Q8`        | dihedral and quaternion groups of order 8           |
//! | `C:n`             | cyclic group of order `n`                          |
//! | `Ab:4,2`          | abelian group `C4 × C2`                            |
//! | `EA:p,r`          | elementary abelian group of order `p^r`            |
//! | `Meta:p,m,n,s,r`  | `⟨a,b | a^{p^m}, b^{p^n} = a^{p^{m-s}}, a^b = a^r⟩` |
//! | `T:i,n`           | 3-group of maximal class `T_i` of order `3^n`      |
//! | `B1G:m`, `B1H:m`  | two-generated class-two 2-groups, first case       |
//! | `B2G:m,n`, `B2H:m,n` | two-generated class-two 2-groups, second case   |
//! | `X:s*t*…`         | direct product                                     |
//! | `Pres:path`       | presentation read from a JSON file                 |

use std::fmt;
use std::path::PathBuf;

use crate::group::FiniteGroup;
use crate::words::{todd_coxeter, Presentation};
use crate::{Caps, Error, Result};

/// Which group of a pair of class-two 2-groups to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    G,
    H,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    D8,
    Q8,
    Cyclic(usize),
    Abelian(Vec<usize>),
    ElemAbelian {
        p: u32,
        r: u32,
    },
    Metacyclic {
        p: u32,
        m: u32,
        n: u32,
        s: u32,
        r: u64,
    },
    MaxClass3 {
        i: u8,
        n: u32,
    },
    BrocheCase1 {
        variant: Variant,
        m: u32,
    },
    BrocheCase2 {
        variant: Variant,
        m: u32,
        n: u32,
    },
    DirectProduct(Vec<FamilySpec>),
    Presented(PathBuf),
}

/// The pairs of groups whose algebras are compared.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComparisonPair {
    D8Q8,
    Broche1 { m: u32 },
    Broche2 { m: u32, n: u32 },
    T2T3 { n: u32 },
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameters(msg.into())
}

fn checked_pow(base: u64, exp: u32) -> Result<u64> {
    base.checked_pow(exp)
        .ok_or_else(|| invalid("order overflows"))
}

fn is_prime(p: u32) -> bool {
    crate::gfq::is_prime(p as u64)
}

/// `(-3)^e` as a signed exponent.
fn neg3_pow(e: u32) -> i64 {
    (-3i64).pow(e)
}

impl FamilySpec {
    /// Parses the spec language described in the module docs.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        let (head, args) = match text.split_once(':') {
            Some((h, a)) => (h, Some(a)),
            None => (text, None),
        };
        let nums = |expected: usize| -> Result<Vec<u64>> {
            let a = args.ok_or_else(|| Error::parse(0, format!("`{head}` needs parameters")))?;
            let v = a
                .split(',')
                .map(|s| {
                    s.trim()
                        .parse::<u64>()
                        .map_err(|_| Error::parse(head.len() + 1, format!("bad number `{s}`")))
                })
                .collect::<Result<Vec<_>>>()?;
            if expected != 0 && v.len() != expected {
                return Err(Error::parse(
                    head.len() + 1,
                    format!("`{head}` takes {expected} parameters, got {}", v.len()),
                ));
            }
            Ok(v)
        };
        let small = |x: u64| -> Result<u32> {
            u32::try_from(x).map_err(|_| invalid("parameter too large"))
        };
        let spec = match head {
            "D8" if args.is_none() => FamilySpec::D8,
            "Q8" if args.is_none() => FamilySpec::Q8,
            "C" => FamilySpec::Cyclic(nums(1)?[0] as usize),
            "Ab" => FamilySpec::Abelian(nums(0)?.into_iter().map(|x| x as usize).collect()),
            "EA" => {
                let v = nums(2)?;
                FamilySpec::ElemAbelian {
                    p: small(v[0])?,
                    r: small(v[1])?,
                }
            }
            "Meta" => {
                let v = nums(5)?;
                FamilySpec::Metacyclic {
                    p: small(v[0])?,
                    m: small(v[1])?,
                    n: small(v[2])?,
                    s: small(v[3])?,
                    r: v[4],
                }
            }
            "T" => {
                let v = nums(2)?;
                FamilySpec::MaxClass3 {
                    i: u8::try_from(v[0]).map_err(|_| invalid("family index out of range"))?,
                    n: small(v[1])?,
                }
            }
            "B1G" | "B1H" => {
                let variant = if head == "B1G" {
                    Variant::G
                } else {
                    Variant::H
                };
                FamilySpec::BrocheCase1 {
                    variant,
                    m: small(nums(1)?[0])?,
                }
            }
            "B2G" | "B2H" => {
                let variant = if head == "B2G" {
                    Variant::G
                } else {
                    Variant::H
                };
                let v = nums(2)?;
                FamilySpec::BrocheCase2 {
                    variant,
                    m: small(v[0])?,
                    n: small(v[1])?,
                }
            }
            "X" => {
                let a = args.ok_or_else(|| Error::parse(0, "`X` needs factors"))?;
                let parts = a
                    .split('*')
                    .map(FamilySpec::parse)
                    .collect::<Result<Vec<_>>>()?;
                if parts.is_empty() {
                    return Err(Error::parse(2, "empty direct product"));
                }
                FamilySpec::DirectProduct(parts)
            }
            "Pres" => {
                let a = args.ok_or_else(|| Error::parse(0, "`Pres` needs a path"))?;
                FamilySpec::Presented(PathBuf::from(a))
            }
            _ => return Err(Error::parse(0, format!("unknown family `{text}`"))),
        };
        Ok(spec)
    }

    /// The order the constructed group must have, when known in advance.
    pub fn expected_order(&self) -> Result<Option<u64>> {
        Ok(Some(match self {
            FamilySpec::D8 | FamilySpec::Q8 => 8,
            FamilySpec::Cyclic(n) => *n as u64,
            FamilySpec::Abelian(v) => v.iter().try_fold(1u64, |acc, &x| {
                acc.checked_mul(x as u64)
                    .ok_or_else(|| invalid("order overflows"))
            })?,
            FamilySpec::ElemAbelian { p, r } => checked_pow(*p as u64, *r)?,
            FamilySpec::Metacyclic { p, m, n, .. } => checked_pow(*p as u64, m + n)?,
            FamilySpec::MaxClass3 { n, .. } => checked_pow(3, *n)?,
            FamilySpec::BrocheCase1 { m, .. } => checked_pow(2, 3 * m)?,
            FamilySpec::BrocheCase2 { m, n, .. } => checked_pow(2, n + 2 * m)?,
            FamilySpec::DirectProduct(parts) => {
                let mut acc = 1u64;
                for s in parts {
                    match s.expected_order()? {
                        Some(o) => {
                            acc = acc
                                .checked_mul(o)
                                .ok_or_else(|| invalid("order overflows"))?
                        }
                        None => return Ok(None),
                    }
                }
                acc
            }
            FamilySpec::Presented(_) => return Ok(None),
        }))
    }

    fn validate(&self) -> Result<()> {
        match self {
            FamilySpec::Cyclic(n) if *n == 0 => Err(invalid("cyclic order must be positive")),
            FamilySpec::Abelian(v) if v.is_empty() || v.contains(&0) => {
                Err(invalid("abelian orders must be positive"))
            }
            FamilySpec::ElemAbelian { p, r } if !is_prime(*p) || *r == 0 => {
                Err(invalid("EA needs a prime and a positive rank"))
            }
            FamilySpec::Metacyclic { p, m, n, s, r } => {
                if !is_prime(*p) {
                    Err(invalid(format!("{p} is not prime")))
                } else if *m == 0 || *n == 0 || s > m {
                    Err(invalid("metacyclic parameters need m, n ≥ 1 and 0 ≤ s ≤ m"))
                } else if r % *p as u64 == 0 {
                    Err(invalid("metacyclic r must be coprime to p"))
                } else {
                    Ok(())
                }
            }
            FamilySpec::MaxClass3 { i, n } => {
                if !(1..=7).contains(i) {
                    Err(invalid("maximal-class family index must be in 1..=7"))
                } else if *n < 4 || (*i >= 5 && *n < 5) {
                    Err(invalid(format!("T{i} is not defined for n = {n}")))
                } else {
                    Ok(())
                }
            }
            FamilySpec::BrocheCase1 { m, .. } if *m == 0 => Err(invalid("case 1 needs m ≥ 1")),
            FamilySpec::BrocheCase2 { m, n, .. } if *m == 0 || n <= m => {
                Err(invalid("case 2 needs n > m ≥ 1"))
            }
            FamilySpec::DirectProduct(parts) => parts.iter().try_for_each(|s| s.validate()),
            _ => Ok(()),
        }
    }

    /// The defining presentation.
    pub fn presentation(&self) -> Result<Presentation> {
        self.validate()?;
        match self {
            FamilySpec::D8 => Presentation::parse(&["r", "s"], &["r^4", "s^2", "(s*r)^2"]),
            FamilySpec::Q8 => Presentation::parse(&["i", "j"], &["i^4", "j^2*i^-2", "j^-1*i*j*i"]),
            FamilySpec::Cyclic(n) => Presentation::parse(&["a".to_string()], &[format!("a^{n}")]),
            FamilySpec::Abelian(orders) => abelian_presentation(orders),
            FamilySpec::ElemAbelian { p, r } => {
                abelian_presentation(&vec![*p as usize; *r as usize])
            }
            FamilySpec::Metacyclic { p, m, n, s, r } => {
                let p = *p as u64;
                let am = p.pow(*m);
                let bn = p.pow(*n);
                let ams = p.pow(m - s);
                let r = r % am;
                Presentation::parse(
                    &["a", "b"],
                    &[
                        format!("a^{am}").as_str(),
                        format!("b^{bn}*a^-{ams}").as_str(),
                        format!("b^-1*a*b*a^-{r}").as_str(),
                    ],
                )
            }
            FamilySpec::MaxClass3 { i, n } => max_class_presentation(*i, *n),
            FamilySpec::BrocheCase1 { variant, m } => {
                let e = 1u64 << m;
                let h = 1u64 << (m - 1);
                let last = match variant {
                    Variant::G => format!("b^{e}*[b,a]^-{h}"),
                    Variant::H => format!("b^{e}"),
                };
                class_two_presentation(&[format!("a^{e}*[b,a]^-{h}"), last], *m)
            }
            FamilySpec::BrocheCase2 { variant, m, n } => {
                let e = 1u64 << m;
                let h = 1u64 << (m - 1);
                let last = match variant {
                    Variant::G => format!("b^{e}*[b,a]^-{h}"),
                    Variant::H => format!("b^{e}"),
                };
                class_two_presentation(&[format!("a^{}", 1u64 << n), last], *m)
            }
            FamilySpec::DirectProduct(parts) => {
                let mut acc = parts[0].presentation()?;
                for (k, s) in parts.iter().enumerate().skip(1) {
                    acc = acc.direct_product(&s.presentation()?, k + 1)?;
                }
                Ok(acc)
            }
            FamilySpec::Presented(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
                Presentation::from_json(&text)
            }
        }
    }

    /// Builds the group by coset enumeration and checks its order.
    pub fn build(&self, caps: &Caps) -> Result<FiniteGroup> {
        let expected = self.expected_order()?;
        if let Some(o) = expected {
            if o > caps.group_order as u64 {
                return Err(Error::OrderCap {
                    order: o.min(usize::MAX as u64) as usize,
                    cap: caps.group_order,
                    what: "group construction",
                });
            }
        }
        let p = self.presentation()?;
        let g = todd_coxeter(&p, caps.coset)?;
        if let Some(o) = expected {
            if g.order() as u64 != o {
                return Err(Error::OrderMismatch {
                    expected: o as usize,
                    found: g.order(),
                });
            }
        }
        if g.order() > caps.group_order {
            return Err(Error::OrderCap {
                order: g.order(),
                cap: caps.group_order,
                what: "group construction",
            });
        }
        Ok(g)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        match self {
            FamilySpec::D8 => write!(f, "D8"),
            FamilySpec::Q8 => write!(f, "Q8"),
            FamilySpec::Cyclic(n) => write!(f, "C:{n}"),
            FamilySpec::Abelian(v) => write!(f, "Ab:{}", join(v)),
            FamilySpec::ElemAbelian { p, r } => write!(f, "EA:{p},{r}"),
            FamilySpec::Metacyclic { p, m, n, s, r } => write!(f, "Meta:{p},{m},{n},{s},{r}"),
            FamilySpec::MaxClass3 { i, n } => write!(f, "T:{i},{n}"),
            FamilySpec::BrocheCase1 { variant, m } => write!(f, "B1{variant:?}:{m}"),
            FamilySpec::BrocheCase2 { variant, m, n } => write!(f, "B2{variant:?}:{m},{n}"),
            FamilySpec::DirectProduct(parts) => {
                write!(f, "X:")?;
                for (i, s) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, "*")?;
                    }
                    write!(f, "{s}")?;
                }
                Ok(())
            }
            FamilySpec::Presented(p) => write!(f, "Pres:{}", p.display()),
        }
    }
}

/// Builds a group from the spec language.
pub fn build(spec: &FamilySpec, caps: &Caps) -> Result<FiniteGroup> {
    spec.build(caps)
}

fn abelian_presentation(orders: &[usize]) -> Result<Presentation> {
    let gens: Vec<String> = (1..=orders.len()).map(|i| format!("g{i}")).collect();
    let mut rels: Vec<String> = orders
        .iter()
        .enumerate()
        .map(|(i, o)| format!("g{}^{o}", i + 1))
        .collect();
    for i in 0..orders.len() {
        for j in i + 1..orders.len() {
            rels.push(format!("[g{},g{}]", i + 1, j + 1));
        }
    }
    Presentation::parse(&gens, &rels)
}

/// Two-generated class-two presentation: `[b,a]` of order dividing `2^m`
/// and central, plus the two given power relators.
fn class_two_presentation(powers: &[String], m: u32) -> Result<Presentation> {
    let mut rels = vec![
        format!("[b,a]^{}", 1u64 << m),
        "[[b,a],a]".into(),
        "[[b,a],b]".into(),
    ];
    rels.extend(powers.iter().cloned());
    Presentation::parse(&["a".to_string(), "b".to_string()], &rels)
}

/// The central element `z` of `T_i(n)` written as a power of `c` or `d`,
/// raised to `e`.
fn z_power(n: u32, e: i64) -> String {
    if n.is_multiple_of(2) {
        format!("d^{}", neg3_pow((n - 4) / 2) * e)
    } else {
        format!("c^{}", neg3_pow((n - 3) / 2) * e)
    }
}

/// `T_i(n)` on generators `a, b, c, d` with `c = [b,a]`, `d = [c,a]`.
fn max_class_presentation(i: u8, n: u32) -> Result<Presentation> {
    let (ce, de) = if n.is_multiple_of(2) {
        (3u64.pow((n - 2) / 2), 3u64.pow((n - 2) / 2))
    } else {
        (3u64.pow((n - 1) / 2), 3u64.pow((n - 3) / 2))
    };
    // Exponent of z in a^3, b^3 (beyond c^-3 d^-1) and [c,b].
    let (a3, b3, cb): (i64, i64, i64) = match i {
        1 => (0, 0, 0),
        2 => (0, 1, 0),
        3 => (0, -1, 0),
        4 => (1, 0, 0),
        5 => (0, 0, -1),
        6 => (1, 0, -1),
        7 => (-1, 0, -1),
        _ => unreachable!("validated"),
    };
    let rels = vec![
        "c^-1*[b,a]".to_string(),
        "d^-1*[c,a]".to_string(),
        "[d,a]*d^3*c^3".to_string(),
        "[d,b]".to_string(),
        "[d,c]".to_string(),
        format!("c^{ce}"),
        format!("d^{de}"),
        // a^3 = z^a3
        format!("a^3*{}", z_power(n, -a3)),
        // b^3 = c^-3 d^-1 z^b3
        format!("b^3*{}*d*c^3", z_power(n, -b3)),
        // [c,b] = z^cb
        format!("[c,b]*{}", z_power(n, -cb)),
    ];
    Presentation::parse(&["a", "b", "c", "d"].map(String::from), &rels)
}

impl ComparisonPair {
    pub fn specs(&self) -> (FamilySpec, FamilySpec) {
        match *self {
            ComparisonPair::D8Q8 => (FamilySpec::D8, FamilySpec::Q8),
            ComparisonPair::Broche1 { m } => (
                FamilySpec::BrocheCase1 {
                    variant: Variant::G,
                    m,
                },
                FamilySpec::BrocheCase1 {
                    variant: Variant::H,
                    m,
                },
            ),
            ComparisonPair::Broche2 { m, n } => (
                FamilySpec::BrocheCase2 {
                    variant: Variant::G,
                    m,
                    n,
                },
                FamilySpec::BrocheCase2 {
                    variant: Variant::H,
                    m,
                    n,
                },
            ),
            ComparisonPair::T2T3 { n } => (
                FamilySpec::MaxClass3 { i: 2, n },
                FamilySpec::MaxClass3 { i: 3, n },
            ),
        }
    }
}

/// Builds both groups of a compared pair, first group first.
pub fn comparison_pair(pair: ComparisonPair, caps: &Caps) -> Result<(FiniteGroup, FiniteGroup)> {
    let (a, b) = pair.specs();
    Ok((a.build(caps)?, b.build(caps)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_roundtrip() {
        for s in [
            "D8",
            "Q8",
            "C:8",
            "Ab:4,2",
            "EA:3,2",
            "Meta:2,3,1,0,5",
            "T:4,5",
            "B1G:2",
            "B2H:1,2",
            "X:C:2*D8",
        ] {
            let spec = FamilySpec::parse(s).unwrap();
            assert_eq!(spec.to_string(), s);
        }
        assert!(FamilySpec::parse("Z:3").is_err());
        assert!(FamilySpec::parse("T:4").is_err());
        assert!(FamilySpec::parse("C:x").is_err());
    }

    #[test]
    fn z_words() {
        assert_eq!(z_power(4, 1), "d^1");
        assert_eq!(z_power(5, 1), "c^-3");
        assert_eq!(z_power(6, -1), "d^3");
        assert_eq!(z_power(7, 1), "c^9");
    }

    #[test]
    fn parameter_checks() {
        let caps = Caps::default();
        assert!(FamilySpec::MaxClass3 { i: 5, n: 4 }.build(&caps).is_err());
        assert!(FamilySpec::MaxClass3 { i: 8, n: 5 }.build(&caps).is_err());
        assert!(FamilySpec::BrocheCase2 {
            variant: Variant::G,
            m: 2,
            n: 2
        }
        .build(&caps)
        .is_err());
        assert!(FamilySpec::Metacyclic {
            p: 2,
            m: 3,
            n: 1,
            s: 0,
            r: 4
        }
        .build(&caps)
        .is_err());
        assert!(FamilySpec::MaxClass3 { i: 1, n: 8 }
            .build(&caps)
            .unwrap_err()
            .is_cap());
    }

    #[test]
    fn small_orders() {
        let caps = Caps::default();
        for (s, o) in [
            ("D8", 8),
            ("Q8", 8),
            ("Ab:4,2", 8),
            ("EA:3,2", 9),
            ("Meta:2,3,1,0,5", 16),
            ("X:C:2*D8", 16),
        ] {
            assert_eq!(
                FamilySpec::parse(s).unwrap().build(&caps).unwrap().order(),
                o,
                "{s}"
            );
        }
    }

    #[test]
    fn broche_small_pair() {
        let (g, h) =
            comparison_pair(ComparisonPair::Broche2 { m: 1, n: 2 }, &Caps::default()).unwrap();
        assert_eq!(g.order(), 16);
        assert_eq!(h.order(), 16);
        assert_eq!(g.nilpotency_class().unwrap(), 2);
    }
}
