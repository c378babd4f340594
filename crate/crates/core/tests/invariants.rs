use mip_core::families::FamilySpec;
use mip_core::gfq::FiniteField;
use mip_core::group::FiniteGroup;
use mip_core::invariants::{compare, fingerprint, hh1_dimension, Avail, Fingerprint};
use mip_core::Caps;

fn build(s: &str) -> FiniteGroup {
    FamilySpec::parse(s)
        .unwrap()
        .build(&Caps::default())
        .unwrap()
}

fn field(p: u32, k: u32) -> FiniteField {
    FiniteField::new(p, k).unwrap()
}

#[test]
fn dihedral_quaternion_battery() {
    let caps = Caps::default();
    let fd = fingerprint(&build("D8"), &field(2, 1), &caps).unwrap();
    let fq = fingerprint(&build("Q8"), &field(2, 1), &caps).unwrap();
    assert_eq!(fd.abelianization, fq.abelianization);
    assert_eq!(fd.center_type, fq.center_type);
    assert_eq!(fd.jennings_factors, fq.jennings_factors);
    assert_eq!(fd.hh1_dim, 9);
    assert_eq!(fq.hh1_dim, 7);
    let v = compare(&fd, &fq).unwrap();
    let names: Vec<&str> = v.differences().iter().map(|d| d.entry.as_str()).collect();
    for n in ["max_elem_ab_classes", "hh1_dim", "kernel_sizes(1,3,1)"] {
        assert!(names.contains(&n), "{n} missing from {names:?}");
    }
    let w = compare(&fq, &fd).unwrap();
    let mut back: Vec<&str> = w.differences().iter().map(|d| d.entry.as_str()).collect();
    let mut fwd = names.clone();
    back.sort();
    fwd.sort();
    assert_eq!(fwd, back);
    assert!(!compare(&fd, &fd).unwrap().is_distinguished());
}

#[test]
fn json_round_trip_and_key_order() {
    let f = fingerprint(&build("T:1,4"), &field(3, 1), &Caps::default()).unwrap();
    assert_eq!(f.hh1_dim, 34);
    let text = f.to_json();
    assert_eq!(Fingerprint::from_json(&text).unwrap(), f);
    let mut last = 0;
    for name in Fingerprint::ENTRIES {
        let pos = text.find(&format!("\"{name}\":")).unwrap();
        assert!(pos > last || last == 0);
        last = pos;
    }
}

#[test]
fn caps_mark_entries_unavailable() {
    let caps = Caps {
        algebra_order: 4,
        elem_abelian: 1,
        ..Caps::default()
    };
    let f = fingerprint(&build("D8"), &field(2, 1), &caps).unwrap();
    assert_eq!(f.jennings_dims, Avail::unavailable("algebra_order"));
    assert_eq!(f.max_elem_ab_classes, Avail::unavailable("elem_abelian"));
    let json = f.to_json();
    assert!(json.contains("\"unavailable\": \"algebra_order\""));
    let full = fingerprint(&build("D8"), &field(2, 1), &Caps::default()).unwrap();
    let v = compare(&f, &full).unwrap();
    assert!(!v.compared().iter().any(|c| c == "jennings_dims"));
}

#[test]
fn t2_t3_even_indistinguishable() {
    let caps = Caps::default();
    let f = field(3, 1);
    let a = fingerprint(&build("T:2,6"), &f, &caps).unwrap();
    let b = fingerprint(&build("T:3,6"), &f, &caps).unwrap();
    let v = compare(&a, &b).unwrap();
    assert!(!v.is_distinguished(), "{:?}", v.differences());
    assert_eq!(hh1_dimension(&build("T:2,6")).unwrap(), 174);
}

#[test]
fn isomorphic_presentations_are_indistinguishable() {
    let caps = Caps::default();
    let pairs = [
        ("Q8", "Meta:2,2,1,1,3", 2),
        ("D8", "Meta:2,2,1,0,3", 2),
        ("X:C:2*D8", "X:D8*C:2", 2),
        ("X:C:4*Q8", "X:Q8*C:4", 2),
        ("Ab:4,2", "X:C:2*C:4", 2),
        ("T:2,5", "T:3,5", 3),
    ];
    for (a, b, p) in pairs {
        let fa = fingerprint(&build(a), &field(p, 1), &caps).unwrap();
        let fb = fingerprint(&build(b), &field(p, 1), &caps).unwrap();
        let v = compare(&fa, &fb).unwrap();
        assert!(!v.is_distinguished(), "{a} vs {b}: {:?}", v.differences());
        for entry in [
            "hh1_dim",
            "jennings_dims",
            "kernel_sizes(1,3,1)",
            "small_group_ring_dim",
        ] {
            assert!(v.compared().iter().any(|c| c == entry), "{a}: {entry}");
        }
    }
}

#[test]
fn algebra_entries_cover_order_243() {
    let f = fingerprint(&build("T:5,5"), &field(3, 1), &Caps::default()).unwrap();
    assert_eq!(f.order, 243);
    assert_eq!(f.hh1_dim, 34);
    for entry in ["jennings_dims", "small_group_ring_dim", "zassenhaus_dims"] {
        assert!(!f
            .to_json()
            .contains(&format!("\"{entry}\": {{\n    \"unavailable\"")));
    }
    let Avail::Value(dims) = &f.jennings_dims else {
        panic!("jennings_dims unavailable");
    };
    assert_eq!(1 + dims.iter().sum::<usize>(), 243);
    let six = fingerprint(&build("T:5,6"), &field(3, 1), &Caps::default()).unwrap();
    assert_eq!(six.jennings_dims, Avail::unavailable("algebra_order"));
}

#[test]
fn hh1_counts_outer_derivations() {
    for (name, g) in mip_oracles::groups(16) {
        let p = g.prime().unwrap();
        for k in [1, 2] {
            assert_eq!(
                hh1_dimension(&g).unwrap(),
                mip_oracles::hh1::hh1_dimension(&g, &field(p, k)),
                "{name} over F{}^{k}",
                p
            );
        }
    }
}

#[test]
fn class_power_stats_against_brute_force() {
    use mip_core::invariants::class_power_stats;
    use std::collections::BTreeSet;
    for (name, g) in mip_oracles::groups(64) {
        let p = g.prime().unwrap() as i64;
        let classes = mip_oracles::group::conjugacy_classes(&g);
        for k in 1..=2u32 {
            let e = p.pow(k);
            let images: Vec<BTreeSet<usize>> = classes
                .iter()
                .map(|c| c.iter().map(|&x| g.pow(x, e)).collect())
                .collect();
            let sets: BTreeSet<&BTreeSet<usize>> = images.iter().collect();
            let preserving: BTreeSet<&BTreeSet<usize>> = images
                .iter()
                .zip(&classes)
                .filter(|(i, c)| i.len() == c.len())
                .map(|(i, _)| i)
                .collect();
            let s = class_power_stats(&g, k).unwrap();
            assert_eq!(s.sets, sets.len(), "{name} k={k}");
            assert_eq!(s.size_preserving, preserving.len(), "{name} k={k}");
        }
    }
}
