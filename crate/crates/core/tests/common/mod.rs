#![allow(dead_code)]

use proptest::prelude::*;
use wcarg::Framework;

/// Frameworks with `lo..=hi` arguments named x0.. and each ordered pair attacked with the
/// drawn probability.
pub fn framework(lo: usize, hi: usize) -> impl Strategy<Value = Framework> {
    (lo..=hi, prop::sample::select(vec![0.1, 0.2, 0.3, 0.5]))
        .prop_flat_map(|(n, p)| {
            (
                Just(n),
                prop::collection::vec(prop::bool::weighted(p), n * n),
            )
        })
        .prop_map(|(n, bits)| {
            let names: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
            let attacks: Vec<(String, String)> = bits
                .iter()
                .enumerate()
                .filter(|(_, &b)| b)
                .map(|(k, _)| (names[k / n].clone(), names[k % n].clone()))
                .collect();
            Framework::new(&names, attacks).unwrap()
        })
}
