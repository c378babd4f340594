use mip_core::families::{comparison_pair, ComparisonPair, FamilySpec, Variant};
use mip_core::Caps;

fn t(i: u8, n: u32) -> mip_core::group::FiniteGroup {
    FamilySpec::MaxClass3 { i, n }
        .build(&Caps::default())
        .unwrap()
}

#[test]
fn maximal_class_orders_and_centres() {
    for n in 4..=6u32 {
        for i in 1..=7u8 {
            if i >= 5 && n < 5 {
                continue;
            }
            let g = t(i, n);
            assert_eq!(g.order(), 3usize.pow(n));
            let cs = g.char_series().unwrap();
            assert_eq!(cs.nilpotency_class, n as usize - 1, "T{i}({n})");
            assert_eq!(cs.center.order(), 3, "T{i}({n})");
        }
    }
}

#[test]
fn max_class_z_is_central_generator() {
    // z = d for n = 4 and c^-3 for n = 5
    let g = t(1, 4);
    let p = g.presentation().unwrap();
    let z = g.eval(&p.word("d").unwrap());
    assert_eq!(g.center(), g.subgroup_generated(&[z]));
    let g = t(5, 5);
    let p = g.presentation().unwrap();
    let z = g.eval(&p.word("c^-3").unwrap());
    assert_eq!(g.center(), g.subgroup_generated(&[z]));
}

#[test]
fn n_has_index_three() {
    let g = t(1, 4);
    let n = g.subgroup_generated(&g.generators()[1..]);
    assert_eq!(n.order(), 27);
}

#[test]
fn broche_case_one_centre_is_derived() {
    for m in 1..=2 {
        for variant in [Variant::G, Variant::H] {
            let g = FamilySpec::BrocheCase1 { variant, m }
                .build(&Caps::default())
                .unwrap();
            assert_eq!(g.order(), 1 << (3 * m));
            let cs = g.char_series().unwrap();
            assert_eq!(cs.center, cs.derived);
            assert_eq!(g.subgroup_type(&cs.center).unwrap().orders(), &[1 << m]);
            let q = g.quotient(&cs.center).unwrap().group;
            assert_eq!(q.abelian_type().unwrap().orders(), &[1 << m, 1 << m]);
        }
    }
}

#[test]
fn case_one_m1_is_quaternion_and_dihedral() {
    let (g, h) = comparison_pair(ComparisonPair::Broche1 { m: 1 }, &Caps::default()).unwrap();
    let caps = Caps::default();
    assert_eq!(
        g.maximal_elem_abelian_classes(caps.elem_abelian)
            .unwrap()
            .len(),
        1
    );
    assert_eq!(h.exponent(), 4);
}

#[test]
fn metacyclic_constructor_orders() {
    let caps = Caps::default();
    let q8 = FamilySpec::Metacyclic {
        p: 2,
        m: 2,
        n: 1,
        s: 1,
        r: 3,
    }
    .build(&caps)
    .unwrap();
    assert_eq!(q8.order(), 8);
    assert_eq!(q8.omega_of(&q8.whole(), 1).order(), 2);
    let bad = FamilySpec::Metacyclic {
        p: 2,
        m: 3,
        n: 1,
        s: 0,
        r: 3,
    }
    .build(&caps);
    assert!(bad.is_ok());
    let inconsistent = FamilySpec::Metacyclic {
        p: 3,
        m: 2,
        n: 1,
        s: 0,
        r: 2,
    }
    .build(&caps);
    assert!(inconsistent.is_err());
}
