use std::collections::BTreeSet;

use degen_core::identity::catalog;

fn listed_anchors() -> BTreeSet<String> {
    include_str!("data/anchors.txt")
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(String::from)
        .collect()
}

#[test]
fn every_listed_anchor_has_a_case() {
    let covered: BTreeSet<String> = catalog()
        .iter()
        .flat_map(|c| c.anchors.iter().map(|a| a.to_string()))
        .collect();
    let missing: Vec<String> = listed_anchors()
        .into_iter()
        .filter(|a| !covered.contains(a))
        .collect();
    assert!(missing.is_empty(), "no catalog case for {missing:?}");
}

#[test]
fn every_case_anchor_is_listed() {
    let listed = listed_anchors();
    for case in catalog() {
        for anchor in &case.anchors {
            assert!(
                listed.contains(*anchor),
                "{} cites unlisted {anchor}",
                case.id
            );
        }
        if case.anchors.is_empty() {
            assert!(case.sampled, "{} has no anchors", case.id);
        }
    }
}
