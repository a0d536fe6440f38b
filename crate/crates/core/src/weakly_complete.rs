use std::collections::{BTreeSet, HashSet};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use crate::argset::ArgSet;
use crate::config::Config;
use crate::error::Result;
use crate::framework::Framework;
use crate::labelling::{Discovery, Label, Labelling, LabellingSet};
use crate::par;
use crate::propagation::{grounded_labelling, in_out_fw, Propagation};

/// Everything the ground-based search found.
#[derive(Debug, Clone)]
pub struct Search {
    pub labellings: LabellingSet,
    /// In-sets of labellings with no consistent single-ground extension.
    pub terminal: BTreeSet<ArgSet>,
}

struct Shared<'a> {
    fw: &'a Framework,
    cfg: &'a Config,
    seen: Mutex<HashSet<ArgSet>>,
    count: AtomicUsize,
}

impl Shared<'_> {
    fn first_visit(&self, key: &ArgSet) -> Result<bool> {
        let fresh = self.seen.lock().unwrap().insert(key.clone());
        if fresh {
            let n = self.count.fetch_add(1, Ordering::Relaxed) + 1;
            self.cfg.check_count(n)?;
        }
        Ok(fresh)
    }
}

#[derive(Default)]
struct Branch {
    found: Vec<Labelling>,
    terminal: Vec<ArgSet>,
    trace: Option<Vec<Discovery>>,
}

fn consistent_children(fw: &Framework, l: &Labelling) -> Result<Vec<(usize, Labelling)>> {
    let mut out = Vec::new();
    for c in l.undec_set().iter() {
        let ground = ArgSet::from_indices(fw.len(), [c]);
        if let Propagation::Consistent(next) = in_out_fw(fw, &ground, l)? {
            out.push((c, next));
        }
    }
    Ok(out)
}

fn explore(
    shared: &Shared<'_>,
    l: &Labelling,
    path: &mut Vec<usize>,
    branch: &mut Branch,
) -> Result<()> {
    shared.cfg.check_deadline()?;
    let children = consistent_children(shared.fw, l)?;
    if children.is_empty() {
        branch.terminal.push(l.in_set());
    }
    for (c, next) in children {
        descend(shared, c, next, path, branch)?;
    }
    Ok(())
}

fn descend(
    shared: &Shared<'_>,
    ground: usize,
    next: Labelling,
    path: &mut Vec<usize>,
    branch: &mut Branch,
) -> Result<()> {
    path.push(ground);
    let key = next.in_set();
    if let Some(trace) = branch.trace.as_mut() {
        trace.push(Discovery {
            grounds: path.clone(),
            in_set: key.clone(),
        });
    }
    if shared.first_visit(&key)? {
        explore(shared, &next, path, branch)?;
        branch.found.push(next);
    }
    path.pop();
    Ok(())
}

fn search(fw: &Framework, cfg: &Config, trace: bool) -> Result<(Search, Option<Vec<Discovery>>)> {
    cfg.check_size(fw.len(), "weakly complete enumeration")?;
    let root = grounded_labelling(fw);
    let shared = Shared {
        fw,
        cfg,
        seen: Mutex::new(HashSet::new()),
        count: AtomicUsize::new(0),
    };
    shared.first_visit(&root.in_set())?;

    let children = consistent_children(fw, &root)?;
    let mut branches = if trace || !cfg.execution.is_parallel() {
        let mut branch = Branch {
            trace: trace.then(|| {
                vec![Discovery {
                    grounds: Vec::new(),
                    in_set: root.in_set(),
                }]
            }),
            ..Branch::default()
        };
        let mut path = Vec::new();
        for (c, next) in children.iter().cloned() {
            descend(&shared, c, next, &mut path, &mut branch)?;
        }
        vec![branch]
    } else {
        par::map_vec(cfg.execution, children.clone(), |(c, next)| {
            let mut branch = Branch::default();
            descend(&shared, c, next, &mut Vec::new(), &mut branch).map(|_| branch)
        })
        .into_iter()
        .collect::<Result<Vec<_>>>()?
    };

    let mut labellings = LabellingSet::new();
    let mut terminal = BTreeSet::new();
    if children.is_empty() {
        terminal.insert(root.in_set());
    }
    labellings.insert(root);
    let mut discoveries = None;
    for branch in &mut branches {
        labellings.extend(branch.found.drain(..));
        terminal.extend(branch.terminal.drain(..));
        if let Some(t) = branch.trace.take() {
            discoveries = Some(t);
        }
    }
    Ok((
        Search {
            labellings,
            terminal,
        },
        discoveries,
    ))
}

/// Ground-based enumeration of every weakly complete labelling.
///
/// Depth-first from the grounded labelling, trying each undec argument as a ground in index
/// order. A labelling already expanded is not expanded again. Under
/// [`Execution::Parallel`](crate::Execution) the children of the grounded labelling are
/// explored concurrently with a shared visited table.
pub fn ground_based_search(fw: &Framework, cfg: &Config) -> Result<Search> {
    Ok(search(fw, cfg, false)?.0)
}

/// Sequential search that also records every consistent step: the ground sequence taken
/// along the branch and the in-set it reached, duplicates included. The grounded labelling
/// is the first entry, with no grounds.
pub fn ground_based_trace(fw: &Framework, cfg: &Config) -> Result<LabellingSet> {
    let (found, trace) = search(fw, cfg, true)?;
    let mut set = found.labellings;
    set.set_provenance(trace.unwrap_or_default());
    Ok(set)
}

pub fn weakly_complete_labellings(fw: &Framework) -> Result<LabellingSet> {
    weakly_complete_with(fw, &Config::default())
}

pub fn weakly_complete_with(fw: &Framework, cfg: &Config) -> Result<LabellingSet> {
    Ok(ground_based_search(fw, cfg)?.labellings)
}

/// Weakly complete labellings with inclusion-maximal in-sets.
pub fn weakly_preferred_labellings(fw: &Framework) -> Result<LabellingSet> {
    weakly_preferred_with(fw, &Config::default())
}

pub fn weakly_preferred_with(fw: &Framework, cfg: &Config) -> Result<LabellingSet> {
    Ok(weakly_complete_with(fw, cfg)?.maximal_in())
}

/// Maximising undec over weakly complete labellings gives back the grounded labelling.
pub fn weakly_grounded_labelling(fw: &Framework) -> Labelling {
    grounded_labelling(fw)
}

pub fn weakly_stable_labellings(fw: &Framework) -> Result<LabellingSet> {
    weakly_stable_with(fw, &Config::default())
}

pub fn weakly_stable_with(fw: &Framework, cfg: &Config) -> Result<LabellingSet> {
    Ok(weakly_complete_with(fw, cfg)?.filtered(|l| l.undec_set().is_empty()))
}

/// Every in argument has all its attackers out.
pub fn is_admissible_labelling(fw: &Framework, l: &Labelling) -> bool {
    (0..fw.len())
        .filter(|&a| l.get(a) == Label::In)
        .all(|a| fw.attackers(a).iter().all(|&b| l.get(b) == Label::Out))
}

pub fn dung_complete_labellings(fw: &Framework) -> Result<LabellingSet> {
    dung_complete_with(fw, &Config::default())
}

pub fn dung_complete_with(fw: &Framework, cfg: &Config) -> Result<LabellingSet> {
    Ok(weakly_complete_with(fw, cfg)?.filtered(|l| is_admissible_labelling(fw, l)))
}

pub fn dung_preferred_with(fw: &Framework, cfg: &Config) -> Result<LabellingSet> {
    Ok(dung_complete_with(fw, cfg)?.maximal_in())
}

/// Whether some weakly complete labelling accepts argument `a`, in time linear in the
/// framework size.
pub fn credulous_wc_at(fw: &Framework, a: usize) -> bool {
    let grounded = grounded_labelling(fw);
    credulous_from_grounded(fw, &grounded, a)
}

pub(crate) fn credulous_from_grounded(fw: &Framework, grounded: &Labelling, a: usize) -> bool {
    match grounded.get(a) {
        Label::In => true,
        Label::Out => false,
        Label::Undec => matches!(
            in_out_fw(fw, &ArgSet::from_indices(fw.len(), [a]), grounded),
            Ok(Propagation::Consistent(_))
        ),
    }
}

pub fn credulous_wc(fw: &Framework, name: &str) -> Result<bool> {
    Ok(credulous_wc_at(fw, fw.arg(name)?))
}

/// All credulously accepted arguments, sharing one grounded computation.
pub fn credulous_set(fw: &Framework) -> ArgSet {
    let grounded = grounded_labelling(fw);
    ArgSet::from_indices(
        fw.len(),
        (0..fw.len()).filter(|&a| credulous_from_grounded(fw, &grounded, a)),
    )
}

/// Whether every weakly complete labelling accepts `name`. The grounded labelling is one of
/// them and every other one accepts a superset of it, so this is just its label.
pub fn skeptical_wc(fw: &Framework, name: &str) -> Result<bool> {
    Ok(grounded_labelling(fw).get(fw.arg(name)?) == Label::In)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn in_sets(fw: &Framework, set: &LabellingSet) -> Vec<Vec<String>> {
        set.in_sets()
            .map(|s| fw.names_of(s).into_iter().map(String::from).collect())
            .collect()
    }

    #[test]
    fn self_attacker_blocks_undecidedness() {
        let fw = Framework::new(["a", "b"], [("a", "a"), ("a", "b")]).unwrap();
        let wc = weakly_complete_labellings(&fw).unwrap();
        assert_eq!(in_sets(&fw, &wc), vec![vec![], vec!["b".to_string()]]);
        assert_eq!(dung_complete_labellings(&fw).unwrap().len(), 1);
        assert!(!skeptical_wc(&fw, "b").unwrap());
    }

    #[test]
    fn odd_cycle_has_only_grounded() {
        let fw = Framework::new(["a", "b", "c"], [("a", "b"), ("b", "c"), ("c", "a")]).unwrap();
        assert_eq!(weakly_complete_labellings(&fw).unwrap().len(), 1);
        assert!(!credulous_wc(&fw, "a").unwrap());
        assert!(weakly_stable_labellings(&fw).unwrap().is_empty());
    }

    #[test]
    fn size_guard_is_explicit() {
        let names: Vec<String> = (0..30).map(|i| format!("x{i}")).collect();
        let fw = Framework::new(&names, Vec::<(&str, &str)>::new()).unwrap();
        assert!(weakly_complete_labellings(&fw).unwrap_err().is_limit());
        let open = Config::default().with_max_args(None);
        assert_eq!(weakly_complete_with(&fw, &open).unwrap().len(), 1);
    }

    #[test]
    fn labelling_cap_is_explicit() {
        let fw = Framework::new(["a", "b"], [("a", "b"), ("b", "a")]).unwrap();
        let cfg = Config {
            max_labellings: Some(2),
            ..Config::sequential()
        };
        assert!(weakly_complete_with(&fw, &cfg).unwrap_err().is_limit());
    }

    #[test]
    fn empty_framework_has_one_labelling() {
        let wc = weakly_complete_labellings(&Framework::empty()).unwrap();
        assert_eq!(wc.len(), 1);
    }
}
