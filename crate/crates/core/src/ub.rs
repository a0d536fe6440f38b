use std::collections::BTreeSet;

use crate::argset::ArgSet;
use crate::config::Config;
use crate::error::Result;
use crate::framework::Framework;
use crate::labelling::{Label, Labelling, LabellingSet};
use crate::propagation::grounded_labelling;
use crate::weakly_complete::{credulous_set, weakly_complete_with, weakly_preferred_with};

/// Which arguments precedence is allowed to relate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PrecedenceScope {
    /// Only pairs inside one strongly connected component.
    SameComponent,
    /// Any pair of arguments.
    #[default]
    Global,
}

/// `pairs` holds (a, b) when a is credulously accepted and every weakly complete labelling
/// accepting a decides b. `strict` keeps the pairs whose reverse is absent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrecedenceRelation {
    pub scope: PrecedenceScope,
    pub pairs: BTreeSet<(usize, usize)>,
    pub strict: BTreeSet<(usize, usize)>,
}

impl PrecedenceRelation {
    pub fn strict_named<'a>(&self, fw: &'a Framework) -> Vec<(&'a str, &'a str)> {
        self.strict
            .iter()
            .map(|&(a, b)| (fw.name(a), fw.name(b)))
            .collect()
    }
}

/// How each strongly connected piece is labelled by the schema.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum UbBase {
    Grounded,
    WeaklyComplete,
    WeaklyPreferred,
    /// Weakly preferred labellings whose overlap with the named arguments is maximal.
    Precedence(BTreeSet<String>),
}

impl UbBase {
    fn apply(&self, fw: &Framework, cfg: &Config) -> Result<Vec<Labelling>> {
        Ok(match self {
            UbBase::Grounded => vec![grounded_labelling(fw)],
            UbBase::WeaklyComplete => weakly_complete_with(fw, cfg)?.into_vec(),
            UbBase::WeaklyPreferred => weakly_preferred_with(fw, cfg)?.into_vec(),
            UbBase::Precedence(favoured) => {
                let local = ArgSet::from_indices(
                    fw.len(),
                    (0..fw.len()).filter(|&i| favoured.contains(fw.name(i))),
                );
                let candidates = weakly_preferred_with(fw, cfg)?.into_vec();
                let scores: Vec<ArgSet> = candidates
                    .iter()
                    .map(|l| l.in_set().intersection(&local))
                    .collect();
                candidates
                    .into_iter()
                    .enumerate()
                    .filter(|(i, _)| !scores.iter().any(|s| scores[*i].is_strict_subset(s)))
                    .map(|(_, l)| l)
                    .collect()
            }
        })
    }
}

/// Component-by-component labelling in topological order.
///
/// Arguments of a component attacked from outside by an in argument become out. The rest of
/// the component is labelled by running the schema again on its restriction, which hands a
/// single strongly connected framework to the base function. Undec attackers from outside are
/// ignored. Bases with several labellings branch, and branches multiply across components.
pub(crate) fn ub_labellings(fw: &Framework, base: &UbBase, cfg: &Config) -> Result<LabellingSet> {
    Ok(schema(fw, base, cfg)?.into_iter().collect())
}

fn schema(fw: &Framework, base: &UbBase, cfg: &Config) -> Result<Vec<Labelling>> {
    if fw.is_empty() {
        return Ok(vec![Labelling::all_undec(0)]);
    }
    cfg.check_deadline()?;
    let scc = fw.scc_decomposition();
    if scc.len() == 1 {
        return base.apply(fw, cfg);
    }
    let mut branches = vec![Labelling::all_undec(fw.len())];
    for (pos, component) in scc.components().iter().enumerate() {
        let mut next = Vec::new();
        for branch in branches {
            let mut branch = branch;
            let mut rest = ArgSet::empty(fw.len());
            for &a in component {
                let hit = fw
                    .attackers(a)
                    .iter()
                    .any(|&y| scc.component_of(y) != pos && branch.get(y) == Label::In);
                if hit {
                    branch.set(a, Label::Out);
                } else {
                    rest.insert(a);
                }
            }
            if rest.is_empty() {
                next.push(branch);
                continue;
            }
            let (sub, map) = fw.restrict_with_map(&rest);
            for local in schema(&sub, base, cfg)? {
                let mut merged = branch.clone();
                for (j, &orig) in map.iter().enumerate() {
                    merged.set(orig, local.get(j));
                }
                next.push(merged);
            }
        }
        cfg.check_count(next.len())?;
        branches = next;
    }
    Ok(branches)
}

/// The single labelling produced by the schema with the grounded base.
pub fn ub_grounded_labelling(fw: &Framework) -> Labelling {
    let cfg = Config::default().with_max_args(None);
    let mut all = schema(fw, &UbBase::Grounded, &cfg).expect("grounded base never fails");
    debug_assert_eq!(all.len(), 1);
    all.pop().expect("schema yields one labelling")
}

/// Schema with the weakly complete labellings as base.
pub fn ub_complete_labellings(fw: &Framework, cfg: &Config) -> Result<LabellingSet> {
    ub_labellings(fw, &UbBase::WeaklyComplete, cfg)
}

/// Schema with the weakly preferred labellings as base.
pub fn ub_weakly_preferred_labellings(fw: &Framework, cfg: &Config) -> Result<LabellingSet> {
    ub_labellings(fw, &UbBase::WeaklyPreferred, cfg)
}

pub fn semantic_precedence(fw: &Framework) -> Result<PrecedenceRelation> {
    semantic_precedence_with(fw, PrecedenceScope::SameComponent, &Config::default())
}

pub fn semantic_precedence_with(
    fw: &Framework,
    scope: PrecedenceScope,
    cfg: &Config,
) -> Result<PrecedenceRelation> {
    let wc = weakly_complete_with(fw, cfg)?;
    let credulous = credulous_set(fw);
    let scc = fw.scc_decomposition();
    let mut pairs = BTreeSet::new();
    for a in credulous.iter() {
        for b in 0..fw.len() {
            if a == b {
                continue;
            }
            if scope == PrecedenceScope::SameComponent && scc.component_of(a) != scc.component_of(b)
            {
                continue;
            }
            let decides = wc
                .iter()
                .filter(|l| l.get(a) == Label::In)
                .all(|l| l.get(b) != Label::Undec);
            if decides {
                pairs.insert((a, b));
            }
        }
    }
    let strict = pairs
        .iter()
        .filter(|&&(a, b)| !pairs.contains(&(b, a)))
        .copied()
        .collect();
    Ok(PrecedenceRelation {
        scope,
        pairs,
        strict,
    })
}

/// Credulously accepted arguments with no strict predecessor.
pub fn precedence_initial_set(fw: &Framework) -> Result<ArgSet> {
    precedence_initial_set_with(fw, PrecedenceScope::default(), &Config::default())
}

pub fn precedence_initial_set_with(
    fw: &Framework,
    scope: PrecedenceScope,
    cfg: &Config,
) -> Result<ArgSet> {
    let rel = semantic_precedence_with(fw, scope, cfg)?;
    let mut set = credulous_set(fw);
    for &(_, b) in &rel.strict {
        set.remove(b);
    }
    Ok(set)
}

pub fn ub_preferred_labellings(fw: &Framework) -> Result<LabellingSet> {
    ub_preferred_with(fw, PrecedenceScope::default(), &Config::default())
}

/// Schema whose base keeps, among the weakly preferred labellings of each piece, those
/// maximising the accepted part of the precedence-initial set. That set is computed once on
/// `fw` and matched by name inside each piece.
pub fn ub_preferred_with(
    fw: &Framework,
    scope: PrecedenceScope,
    cfg: &Config,
) -> Result<LabellingSet> {
    let initial = precedence_initial_set_with(fw, scope, cfg)?;
    let favoured = fw
        .names_of(&initial)
        .into_iter()
        .map(String::from)
        .collect();
    ub_labellings(fw, &UbBase::Precedence(favoured), cfg)
}
