use mip_core::families::FamilySpec;
use mip_core::group::FiniteGroup;
use mip_core::Caps;

/// Small p-groups of order at most 128 used across the cross-checks:
/// cyclic, abelian, metacyclic (several split and non-split extensions),
/// maximal-class 3-groups, class-two 2-groups and direct products.
pub const CORPUS: &[&str] = &[
    "C:2",
    "C:4",
    "C:8",
    "C:16",
    "C:3",
    "C:9",
    "C:27",
    "Ab:2,2",
    "Ab:4,2",
    "Ab:4,4",
    "Ab:8,2",
    "Ab:8,8",
    "Ab:16,4",
    "Ab:3,3",
    "Ab:9,3",
    "D8",
    "Q8",
    "Meta:2,3,1,0,5",
    "Meta:2,3,1,0,7",
    "Meta:2,3,1,0,3",
    "Meta:2,3,1,1,7",
    "Meta:2,4,1,0,15",
    "Meta:2,4,1,1,15",
    "Meta:2,4,1,0,7",
    "Meta:2,3,2,0,5",
    "Meta:2,3,2,0,3",
    "Meta:2,4,2,0,5",
    "Meta:2,3,3,0,3",
    "Meta:2,4,3,0,3",
    "Meta:2,5,2,0,9",
    "Meta:3,2,1,0,4",
    "Meta:3,2,1,1,4",
    "Meta:3,3,1,0,10",
    "Meta:3,2,2,0,4",
    "B1G:1",
    "B1H:1",
    "B2G:1,2",
    "B2H:1,2",
    "EA:2,3",
    "EA:2,4",
    "EA:3,3",
    "EA:3,4",
    "Ab:4,2,2",
    "Ab:4,4,2",
    "Ab:9,3,3",
    "X:C:2*D8",
    "X:C:2*Q8",
    "X:C:4*D8",
    "X:C:2*C:2*D8",
    "X:C:2*Meta:2,3,1,0,5",
    "X:D8*D8",
    "X:Q8*Q8",
    "X:D8*Meta:2,3,1,0,5",
    "X:C:3*Meta:3,2,1,0,4",
    "B2G:1,3",
    "B2H:1,3",
    "B1G:2",
    "B1H:2",
    "T:1,4",
    "T:2,4",
    "T:3,4",
    "T:4,4",
];

pub fn build(spec: &str) -> FiniteGroup {
    FamilySpec::parse(spec)
        .and_then(|s| s.build(&Caps::default()))
        .unwrap_or_else(|e| panic!("{spec}: {e}"))
}

/// Corpus groups with `|G| ≤ max_order`, built in list order.
pub fn groups(max_order: usize) -> Vec<(&'static str, FiniteGroup)> {
    CORPUS
        .iter()
        .map(|&s| (s, build(s)))
        .filter(|(_, g)| g.order() <= max_order)
        .collect()
}
