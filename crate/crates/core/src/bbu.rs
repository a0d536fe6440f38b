use std::collections::{BTreeSet, HashMap};
use std::rc::Rc;

use crate::argset::ArgSet;
use crate::config::Config;
use crate::error::Result;
use crate::framework::Framework;

/// Deduplicated argument sets in ascending order.
pub type ExtensionSet = BTreeSet<ArgSet>;

/// Where an unanswered attacker of a candidate set has to sit relative to the weakly
/// admissible sets of the candidate's reduct.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Polarity {
    /// The attacker belongs to none of them.
    OutsideReductSets,
    /// The attacker belongs to at least one of them.
    InsideReductSets,
}

/// With `OutsideReductSets` a self-attacker cannot stop its target, matching the reference
/// examples; the other polarity lets every self-attacker veto its targets.
pub const REDUCT_POLARITY: Polarity = Polarity::OutsideReductSets;

/// The framework left after removing `e` and everything `e` attacks.
pub fn reduct(fw: &Framework, e: &ArgSet) -> Framework {
    fw.restrict(&reduct_frame(fw, &ArgSet::full(fw.len()), e))
}

fn reduct_frame(fw: &Framework, frame: &ArgSet, e: &ArgSet) -> ArgSet {
    let mut rest = frame.difference(e);
    for a in e.iter() {
        for &b in fw.attacked_by(a) {
            rest.remove(b);
        }
    }
    rest
}

/// Conflict-free subsets of `frame`, each grown from a conflict-free prefix, so no superset of
/// a conflicting set is ever built.
pub(crate) fn conflict_free_subsets(fw: &Framework, frame: &ArgSet) -> Vec<ArgSet> {
    fn grow(fw: &Framework, pool: &[usize], from: usize, cur: &mut ArgSet, out: &mut Vec<ArgSet>) {
        out.push(cur.clone());
        for (k, &a) in pool.iter().enumerate().skip(from) {
            let clash = fw.attacks_arg(a, a)
                || cur
                    .iter()
                    .any(|b| fw.attacks_arg(a, b) || fw.attacks_arg(b, a));
            if clash {
                continue;
            }
            cur.insert(a);
            grow(fw, pool, k + 1, cur, out);
            cur.remove(a);
        }
    }
    let pool: Vec<usize> = frame.iter().collect();
    let mut out = Vec::new();
    grow(fw, &pool, 0, &mut ArgSet::empty(fw.len()), &mut out);
    out
}

/// Memoised weak admissibility over sub-frames of one framework. Frames are argument sets
/// in the original indexing, so reducts never need to be materialised.
struct Engine<'a> {
    fw: &'a Framework,
    cfg: &'a Config,
    polarity: Polarity,
    memo: HashMap<ArgSet, Rc<(Vec<ArgSet>, ArgSet)>>,
}

impl<'a> Engine<'a> {
    fn new(fw: &'a Framework, cfg: &'a Config, polarity: Polarity) -> Result<Self> {
        cfg.check_bbu_size(fw.len())?;
        Ok(Engine {
            fw,
            cfg,
            polarity,
            memo: HashMap::new(),
        })
    }

    /// Weakly admissible sets of the frame and their union.
    fn sets(&mut self, frame: &ArgSet) -> Result<Rc<(Vec<ArgSet>, ArgSet)>> {
        if let Some(hit) = self.memo.get(frame) {
            return Ok(hit.clone());
        }
        self.cfg.check_deadline()?;
        let mut found = Vec::new();
        let mut union = ArgSet::empty(self.fw.len());
        for e in conflict_free_subsets(self.fw, frame) {
            if !e.is_empty() && !self.admits(frame, &e)? {
                continue;
            }
            union.union_with(&e);
            found.push(e);
        }
        let entry = Rc::new((found, union));
        self.memo.insert(frame.clone(), entry.clone());
        Ok(entry)
    }

    fn admits(&mut self, frame: &ArgSet, e: &ArgSet) -> Result<bool> {
        let rest = reduct_frame(self.fw, frame, e);
        let inner = self.sets(&rest)?;
        let fw = self.fw;
        let ok = e.iter().all(|x| {
            fw.attackers(x)
                .iter()
                .filter(|&&y| frame.contains(y))
                .all(|&y| match self.polarity {
                    Polarity::OutsideReductSets => !inner.1.contains(y),
                    Polarity::InsideReductSets => inner.1.contains(y),
                })
        });
        Ok(ok)
    }

    fn defends(&mut self, e: &ArgSet, x: &ArgSet) -> Result<bool> {
        let fw = self.fw;
        let rest = reduct_frame(fw, &ArgSet::full(fw.len()), e);
        let inner = self.sets(&rest)?;
        let remainder = x.difference(e);
        let extends = inner.0.iter().any(|s| remainder.is_subset(s));
        for a in x.iter() {
            for &y in fw.attackers(a) {
                if fw.attackers(y).iter().any(|&z| e.contains(z)) {
                    continue;
                }
                if e.contains(y) || inner.1.contains(y) || !extends {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    fn complete(&mut self) -> Result<ExtensionSet> {
        let n = self.fw.len();
        let all = self.sets(&ArgSet::full(n))?;
        let mut out = ExtensionSet::new();
        for e in &all.0 {
            let mut closed = true;
            for d in 0..n {
                if e.contains(d) {
                    continue;
                }
                let mut bigger = e.clone();
                bigger.insert(d);
                if self.defends(e, &bigger)? {
                    closed = false;
                    break;
                }
            }
            if closed {
                out.insert(e.clone());
            }
        }
        Ok(out)
    }
}

pub fn weakly_admissible_sets(fw: &Framework) -> Result<ExtensionSet> {
    weakly_admissible_with(fw, &Config::default())
}

pub fn weakly_admissible_with(fw: &Framework, cfg: &Config) -> Result<ExtensionSet> {
    weakly_admissible_polarity(fw, cfg, REDUCT_POLARITY)
}

pub fn weakly_admissible_polarity(
    fw: &Framework,
    cfg: &Config,
    polarity: Polarity,
) -> Result<ExtensionSet> {
    let mut engine = Engine::new(fw, cfg, polarity)?;
    Ok(engine
        .sets(&ArgSet::full(fw.len()))?
        .0
        .iter()
        .cloned()
        .collect())
}

/// Whether `e` weakly defends `x`: every attacker y of `x` is attacked by `e`, or y is outside
/// `e`, belongs to no weakly admissible set of the `e`-reduct, and the part of `x` outside `e`
/// fits in one of those sets.
pub fn weakly_defends(fw: &Framework, e: &ArgSet, x: &ArgSet) -> Result<bool> {
    Engine::new(fw, &Config::default(), REDUCT_POLARITY)?.defends(e, x)
}

/// Weakly admissible sets that weakly defend no argument outside themselves. Weak defence of
/// a superset implies weak defence of each one-argument extension, so those are the only
/// supersets checked.
pub fn bbu_complete(fw: &Framework) -> Result<ExtensionSet> {
    bbu_complete_with(fw, &Config::default())
}

pub fn bbu_complete_with(fw: &Framework, cfg: &Config) -> Result<ExtensionSet> {
    Engine::new(fw, cfg, REDUCT_POLARITY)?.complete()
}

/// Inclusion-maximal weakly admissible sets.
pub fn bbu_preferred(fw: &Framework) -> Result<ExtensionSet> {
    bbu_preferred_with(fw, &Config::default())
}

pub fn bbu_preferred_with(fw: &Framework, cfg: &Config) -> Result<ExtensionSet> {
    Ok(maximal(&weakly_admissible_with(fw, cfg)?))
}

/// Inclusion-minimal BBU complete sets. There can be several.
pub fn bbu_grounded(fw: &Framework) -> Result<ExtensionSet> {
    bbu_grounded_with(fw, &Config::default())
}

pub fn bbu_grounded_with(fw: &Framework, cfg: &Config) -> Result<ExtensionSet> {
    Ok(minimal(&bbu_complete_with(fw, cfg)?))
}

pub fn maximal(sets: &ExtensionSet) -> ExtensionSet {
    sets.iter()
        .filter(|s| !sets.iter().any(|t| s.is_strict_subset(t)))
        .cloned()
        .collect()
}

pub fn minimal(sets: &ExtensionSet) -> ExtensionSet {
    sets.iter()
        .filter(|s| !sets.iter().any(|t| t.is_strict_subset(s)))
        .cloned()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn named(fw: &Framework, sets: &ExtensionSet) -> Vec<Vec<String>> {
        sets.iter()
            .map(|s| fw.names_of(s).into_iter().map(String::from).collect())
            .collect()
    }

    fn self_attacker() -> Framework {
        Framework::new(["a", "b"], [("a", "a"), ("a", "b")]).unwrap()
    }

    #[test]
    fn reduct_removes_range() {
        let fw = self_attacker();
        let r = reduct(&fw, &fw.set_of(["b"]).unwrap());
        assert_eq!(r, Framework::new(["a"], [("a", "a")]).unwrap());
        assert_eq!(reduct(&fw, &ArgSet::empty(2)), fw);
    }

    #[test]
    fn polarity_matches_self_attacker_example() {
        let fw = self_attacker();
        let cfg = Config::default();
        let chosen = weakly_admissible_polarity(&fw, &cfg, REDUCT_POLARITY).unwrap();
        assert_eq!(named(&fw, &chosen), vec![vec![], vec!["b".to_string()]]);
        let other = weakly_admissible_polarity(&fw, &cfg, Polarity::InsideReductSets).unwrap();
        assert_ne!(other, chosen);
    }

    #[test]
    fn unattacked_argument() {
        let fw = Framework::new(["a"], Vec::<(&str, &str)>::new()).unwrap();
        assert_eq!(weakly_admissible_sets(&fw).unwrap().len(), 2);
    }

    #[test]
    fn conflict_free_enumeration_skips_conflicts() {
        let fw = Framework::new(["a", "b", "c"], [("a", "b"), ("c", "c")]).unwrap();
        let subsets = conflict_free_subsets(&fw, &ArgSet::full(3));
        // {}, {a}, {b}
        assert_eq!(subsets.len(), 3);
    }

    #[test]
    fn guard_is_explicit() {
        let names: Vec<String> = (0..21).map(|i| format!("x{i}")).collect();
        let fw = Framework::new(&names, Vec::<(&str, &str)>::new()).unwrap();
        assert!(weakly_admissible_sets(&fw).unwrap_err().is_limit());
    }
}
