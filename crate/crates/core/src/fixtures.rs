//! Small named frameworks bundled with the crate.

use crate::framework::Framework;
use crate::io::parse_tgf;

/// Name and TGF source of each bundled framework.
pub const FIXTURES: &[(&str, &str)] = &[
    ("chain", include_str!("../fixtures/chain.tgf")),
    ("rebuttal", include_str!("../fixtures/rebuttal.tgf")),
    ("odd_cycle", include_str!("../fixtures/odd_cycle.tgf")),
    ("self_attack", include_str!("../fixtures/self_attack.tgf")),
    ("floating", include_str!("../fixtures/floating.tgf")),
    (
        "rebuttal_into_cycle",
        include_str!("../fixtures/rebuttal_into_cycle.tgf"),
    ),
    ("cycle_tail", include_str!("../fixtures/cycle_tail.tgf")),
    (
        "closed_cycle_tail",
        include_str!("../fixtures/closed_cycle_tail.tgf"),
    ),
    (
        "loop_with_branch",
        include_str!("../fixtures/loop_with_branch.tgf"),
    ),
    (
        "loop_with_branch_attacked",
        include_str!("../fixtures/loop_with_branch_attacked.tgf"),
    ),
    (
        "self_attack_chain",
        include_str!("../fixtures/self_attack_chain.tgf"),
    ),
    (
        "precedence_cycle",
        include_str!("../fixtures/precedence_cycle.tgf"),
    ),
    (
        "split_weak_grounded",
        include_str!("../fixtures/split_weak_grounded.tgf"),
    ),
];

/// Panics on an unknown name; the set is fixed at compile time.
pub fn fixture(name: &str) -> Framework {
    let (_, text) = FIXTURES
        .iter()
        .find(|(n, _)| *n == name)
        .unwrap_or_else(|| panic!("no fixture named {name}"));
    parse_tgf(text).expect("bundled fixtures parse")
}

pub fn all() -> Vec<(&'static str, Framework)> {
    FIXTURES
        .iter()
        .map(|(n, text)| (*n, parse_tgf(text).expect("bundled fixtures parse")))
        .collect()
}
