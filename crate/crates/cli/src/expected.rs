//! Reference values reproduced by `mip tables`.
//!
//! Everything in this file is transcribed data: closed forms and table
//! entries stated in the published analysis of these families. None of it is
//! computed by the library; the tables module compares computed values
//! against these and never edits them. Where a published value has been
//! found to be wrong, the stated value is kept and the correction is listed
//! separately in [`CORRECTIONS`] together with its justification.

/// Groups `T_i(n)` covered by the tables: `T1`–`T4` for `n ≥ 4`, `T5`–`T7`
/// for `n ≥ 5`.
pub const T_FAMILIES: [u8; 7] = [1, 2, 3, 4, 5, 6, 7];
pub const T_ORDERS: [u32; 3] = [4, 5, 6];

pub fn t_defined(i: u8, n: u32) -> bool {
    n >= 4 && (i <= 4 || n >= 5)
}

fn pow3(e: u32) -> u64 {
    3u64.pow(e)
}

/// Closed forms for `dim HH¹(F T_i(n))`.
///
/// * T1: 16 + 2·3^{n−2}
/// * T2: 12 + 2·3^{n−2}, except 38 for n = 4
/// * T3: 12 + 2·3^{n−2}
/// * T4: 10 + 2·3^{n−2}
/// * T5: 12 + 22·3^{n−5}
/// * T6: 10 + 22·3^{n−5}
/// * T7: 14 + 22·3^{n−5}
pub fn hh1(i: u8, n: u32) -> u64 {
    match i {
        1 => 16 + 2 * pow3(n - 2),
        2 if n == 4 => 38,
        2 | 3 => 12 + 2 * pow3(n - 2),
        4 => 10 + 2 * pow3(n - 2),
        5 => 12 + 22 * pow3(n - 5),
        6 => 10 + 22 * pow3(n - 5),
        7 => 14 + 22 * pow3(n - 5),
        _ => unreachable!("no family T{i}"),
    }
}

/// Shape of the centraliser of an element of a region.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Centralizer {
    /// The whole group.
    Whole,
    /// `N = ⟨b, c, d⟩`.
    N,
    /// `⟨g, M⟩` with `M = ⟨c³, d⟩`.
    GenM,
    /// `⟨g, Z(G)⟩`.
    GenZ,
}

impl Centralizer {
    pub fn label(self) -> &'static str {
        match self {
            Centralizer::Whole => "G",
            Centralizer::N => "N",
            Centralizer::GenM => "<g,M>",
            Centralizer::GenZ => "<g,Z(G)>",
        }
    }
}

/// One column of the class tables: a region of `G` closed under
/// conjugation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Region {
    pub name: &'static str,
    pub elements: u64,
    pub classes: u64,
    pub class_length: u64,
    pub centralizer_order: u64,
    pub centralizer: Centralizer,
}

/// Classes of `T1`–`T4`: regions `Z(G)`, `N \ Z(G)`, `G \ N`.
pub fn classes_t1_t4(n: u32) -> [Region; 3] {
    [
        Region {
            name: "Z(G)",
            elements: 3,
            classes: 3,
            class_length: 1,
            centralizer_order: pow3(n),
            centralizer: Centralizer::Whole,
        },
        Region {
            name: "N\\Z(G)",
            elements: pow3(n - 1) - 3,
            classes: pow3(n - 2) - 1,
            class_length: 3,
            centralizer_order: pow3(n - 1),
            centralizer: Centralizer::N,
        },
        Region {
            name: "G\\N",
            elements: pow3(n) - pow3(n - 1),
            classes: 6,
            class_length: pow3(n - 2),
            centralizer_order: 9,
            centralizer: Centralizer::GenZ,
        },
    ]
}

/// Classes of `T5`–`T7`: regions `Z(G)`, `M \ Z(G)`, `N \ M`, `G \ N`.
pub fn classes_t5_t7(n: u32) -> [Region; 4] {
    [
        Region {
            name: "Z(G)",
            elements: 3,
            classes: 3,
            class_length: 1,
            centralizer_order: pow3(n),
            centralizer: Centralizer::Whole,
        },
        Region {
            name: "M\\Z(G)",
            elements: pow3(n - 3) - 3,
            classes: pow3(n - 4) - 1,
            class_length: 3,
            centralizer_order: pow3(n - 1),
            centralizer: Centralizer::N,
        },
        Region {
            name: "N\\M",
            elements: pow3(n - 1) - pow3(n - 3),
            classes: pow3(n - 3) - pow3(n - 5),
            class_length: 9,
            centralizer_order: pow3(n - 2),
            centralizer: Centralizer::GenM,
        },
        Region {
            name: "G\\N",
            elements: pow3(n) - pow3(n - 1),
            classes: 6,
            class_length: pow3(n - 2),
            centralizer_order: 9,
            centralizer: Centralizer::GenZ,
        },
    ]
}

/// Contributions to `dim HH¹` by class type: centraliser `G`, `N`,
/// `⟨g, M⟩`, `⟨g, Z(G)⟩`. `None` marks a type that does not occur.
pub fn hh1_by_type(i: u8, n: u32) -> [Option<u64>; 4] {
    let type2 = match i {
        2 if n == 4 => 3 * (pow3(n - 2) - 1),
        1..=4 => 2 * (pow3(n - 2) - 1),
        _ => 2 * (pow3(n - 4) - 1),
    };
    let type3 = (i >= 5).then(|| 2 * (pow3(n - 3) - pow3(n - 5)));
    let type4 = match i {
        1 => 12,
        2 | 3 | 5 => 8,
        4 | 6 => 6,
        7 => 10,
        _ => unreachable!("no family T{i}"),
    };
    [Some(2 * 3), Some(type2), type3, Some(type4)]
}

/// Nilpotent algebras `Δ/Δ³` of `F₂D₈` (Λ) and `F₂Q₈` (Γ): elements with
/// nonzero square.
pub const LAMBDA_NONZERO_SQUARES: u64 = 4;
pub const GAMMA_NONZERO_SQUARES: u64 = 8;

/// `dim HH¹` of the group algebras of `D₈` and `Q₈`.
pub const HH1_D8: u64 = 9;
pub const HH1_Q8: u64 = 7;

/// Second family of two-generated class-two 2-groups: parameters `(m, n)`
/// and the orders of `D_{2^m}(U)` for the `G` and `H` members, where
/// `U = Ω_m(G : G′)`.
pub const BROCHE_CASE2: [(u32, u32); 3] = [(1, 2), (1, 3), (2, 3)];
pub const BROCHE_CASE2_ORDERS: (u64, u64) = (2, 1);

/// First family: parameters `m`; both members have `Z = G′` cyclic of order
/// `2^m` and `G/Z` of type `[2^m, 2^m]`.
pub const BROCHE_CASE1: [u32; 2] = [1, 2];

/// A published value that has been shown to be wrong.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Correction {
    /// Cell the correction applies to, as `table/row/column`.
    pub cell: &'static str,
    pub stated: u64,
    pub corrected: u64,
    pub reason: &'static str,
}

pub const CORRECTIONS: [Correction; 1] = [Correction {
    cell: "example-d8q8/F2/Gamma nonzero squares",
    stated: GAMMA_NONZERO_SQUARES,
    corrected: 12,
    reason: "x² = y² = (x+y)² ≠ 0 in Γ, so all three cosets x+Γ², y+Γ², x+y+Γ² \
             (4 elements each) have nonzero square; the stated count omits x+y+Γ²",
}];

pub fn correction(cell: &str) -> Option<&'static Correction> {
    CORRECTIONS.iter().find(|c| c.cell == cell)
}
