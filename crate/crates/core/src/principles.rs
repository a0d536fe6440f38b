//! Principle checks over sampled frameworks.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::argset::ArgSet;
use crate::config::Config;
use crate::error::{Error, Result};
use crate::fixtures;
use crate::framework::Framework;
use crate::labelling::{Label, Labelling, LabellingSet};
use crate::par;
use crate::semantics::{labellings, Semantics};

/// Per-labelling properties.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LabellingFlags {
    /// No in argument attacks another in argument.
    pub conflict_free: bool,
    /// Every in argument has all attackers out.
    pub admissible: bool,
    /// Every argument with all attackers out is in.
    pub reinstatement: bool,
    /// Every argument with an in attacker is out.
    pub rejection: bool,
}

pub fn check_labelling_principles(fw: &Framework, l: &Labelling) -> LabellingFlags {
    let mut flags = LabellingFlags {
        conflict_free: true,
        admissible: true,
        reinstatement: true,
        rejection: true,
    };
    for a in 0..fw.len() {
        let attackers = fw.attackers(a);
        let some_in = attackers.iter().any(|&b| l.get(b) == Label::In);
        let all_out = attackers.iter().all(|&b| l.get(b) == Label::Out);
        if l.get(a) == Label::In {
            flags.conflict_free &= !some_in;
            flags.admissible &= all_out;
        }
        flags.reinstatement &= !all_out || l.get(a) == Label::In;
        flags.rejection &= !some_in || l.get(a) == Label::Out;
    }
    flags
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Principle {
    ConflictFree,
    Admissible,
    Reinstatement,
    Rejection,
    Directionality,
    Abstention,
    Cardinality,
    IMaximality,
    CycleHomogeneity,
    /// Arguments on no cycle are never undec.
    AcyclicDecided,
}

impl Principle {
    pub const ALL: [Principle; 10] = [
        Principle::ConflictFree,
        Principle::Admissible,
        Principle::Reinstatement,
        Principle::Rejection,
        Principle::Directionality,
        Principle::Abstention,
        Principle::Cardinality,
        Principle::IMaximality,
        Principle::CycleHomogeneity,
        Principle::AcyclicDecided,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Principle::ConflictFree => "conflict-free",
            Principle::Admissible => "admissible",
            Principle::Reinstatement => "reinstatement",
            Principle::Rejection => "rejection",
            Principle::Directionality => "directionality",
            Principle::Abstention => "abstention",
            Principle::Cardinality => "cardinality",
            Principle::IMaximality => "i-maximality",
            Principle::CycleHomogeneity => "cycle-homogeneity",
            Principle::AcyclicDecided => "acyclic-decided",
        }
    }
}

impl fmt::Display for Principle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A framework together with the labellings that break a principle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub source: String,
    pub framework: Framework,
    pub labellings: Vec<Labelling>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    HoldsOnSample,
    Refuted(Box<Counterexample>),
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::HoldsOnSample)
    }

    fn refuted(fw: &Framework, labellings: Vec<Labelling>, detail: String) -> Self {
        Verdict::Refuted(Box::new(Counterexample {
            source: String::new(),
            framework: fw.clone(),
            labellings,
            detail,
        }))
    }
}

/// Fails a per-labelling principle on the first labelling lacking it.
fn check_each(fw: &Framework, set: &LabellingSet, principle: Principle) -> Verdict {
    for l in set.iter() {
        let flags = check_labelling_principles(fw, l);
        let ok = match principle {
            Principle::ConflictFree => flags.conflict_free,
            Principle::Admissible => flags.admissible,
            Principle::Reinstatement => flags.reinstatement,
            Principle::Rejection => flags.rejection,
            Principle::AcyclicDecided => {
                (0..fw.len()).all(|a| l.get(a) != Label::Undec || !fw.is_acyclic_argument(a))
            }
            _ => unreachable!("not a per-labelling principle"),
        };
        if !ok {
            return Verdict::refuted(fw, vec![l.clone()], format!("labelling fails {principle}"));
        }
    }
    Verdict::HoldsOnSample
}

/// For each unattacked strongly connected component U, the in-sets of the semantics on U
/// alone must equal the in-sets of the whole framework cut down to U.
pub fn check_directionality(fw: &Framework, sem: Semantics, cfg: &Config) -> Result<Verdict> {
    let all = labellings(fw, sem, cfg)?;
    directionality_of(fw, sem, &all, cfg)
}

fn directionality_of(
    fw: &Framework,
    sem: Semantics,
    all: &LabellingSet,
    cfg: &Config,
) -> Result<Verdict> {
    let scc = fw.scc_decomposition();
    for pos in scc.initial_components(fw) {
        let u = scc.component_set(pos);
        let (sub, map) = fw.restrict_with_map(&u);
        let local: BTreeSet<ArgSet> = labellings(&sub, sem, cfg)?
            .in_sets()
            .map(|s| ArgSet::from_indices(fw.len(), s.iter().map(|j| map[j])))
            .collect();
        let projected: BTreeSet<ArgSet> = all.in_sets().map(|s| s.intersection(&u)).collect();
        if local != projected {
            let show = |sets: &BTreeSet<ArgSet>| {
                sets.iter()
                    .map(|s| format!("{{{}}}", fw.names_of(s).join(",")))
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            return Ok(Verdict::refuted(
                fw,
                all.iter().cloned().collect(),
                format!(
                    "component {{{}}}: alone gives {} but the whole framework projects to {}",
                    fw.names_of(&u).join(","),
                    show(&local),
                    show(&projected)
                ),
            ));
        }
    }
    Ok(Verdict::HoldsOnSample)
}

/// An argument accepted by one labelling and rejected by another must be undec in a third.
pub fn check_abstention(fw: &Framework, sem: Semantics, cfg: &Config) -> Result<Verdict> {
    Ok(abstention_of(fw, &labellings(fw, sem, cfg)?))
}

fn abstention_of(fw: &Framework, set: &LabellingSet) -> Verdict {
    for a in 0..fw.len() {
        let with = |label| set.iter().find(|l| l.get(a) == label);
        if let (Some(i), Some(o), None) = (with(Label::In), with(Label::Out), with(Label::Undec)) {
            return Verdict::refuted(
                fw,
                vec![i.clone(), o.clone()],
                format!("{} is in and out but never undec", fw.name(a)),
            );
        }
    }
    Verdict::HoldsOnSample
}

/// No in-set strictly contained in another.
pub fn check_i_maximality(fw: &Framework, set: &LabellingSet) -> Verdict {
    for small in set.iter() {
        let s = small.in_set();
        if let Some(big) = set.iter().find(|l| s.is_strict_subset(&l.in_set())) {
            return Verdict::refuted(
                fw,
                vec![small.clone(), big.clone()],
                "one in-set strictly contains another".to_string(),
            );
        }
    }
    Verdict::HoldsOnSample
}

/// The pure directed cycle c0 -> c1 -> ... -> c(len-1) -> c0.
pub fn pure_cycle(len: usize) -> Framework {
    let names: Vec<String> = (0..len).map(|i| format!("c{i}")).collect();
    Framework::from_indices(names, (0..len).map(|i| (i, (i + 1) % len)).collect())
}

/// On every pure cycle with 2..=max_len arguments, each argument gets one label across all
/// labellings.
pub fn check_cycle_homogeneity(sem: Semantics, max_len: usize, cfg: &Config) -> Result<Verdict> {
    if max_len < 2 {
        return Err(Error::Invalid(
            "cycle length bound must be at least 2".into(),
        ));
    }
    for len in 2..=max_len {
        let fw = pure_cycle(len);
        let set = labellings(&fw, sem, cfg)?;
        let mut verdict = homogeneity_of(&fw, &set);
        if let Verdict::Refuted(c) = &mut verdict {
            c.source = format!("cycle{len}");
            return Ok(verdict);
        }
    }
    Ok(Verdict::HoldsOnSample)
}

fn homogeneity_of(fw: &Framework, set: &LabellingSet) -> Verdict {
    for a in 0..fw.len() {
        let mut seen = set.iter().map(|l| (l.get(a), l));
        if let Some((first, l1)) = seen.next() {
            if let Some((_, l2)) = seen.find(|(lab, _)| *lab != first) {
                return Verdict::refuted(
                    fw,
                    vec![l1.clone(), l2.clone()],
                    format!("{} changes label between labellings", fw.name(a)),
                );
            }
        }
    }
    Verdict::HoldsOnSample
}

/// Each ordered pair, self-loops included, is an attack with probability `p`.
pub fn random_framework(n: usize, p: f64, seed: u64) -> Framework {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let names: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
    let mut attacks = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if rng.random_bool(p.clamp(0.0, 1.0)) {
                attacks.push((a, b));
            }
        }
    }
    Framework::from_indices(names, attacks)
}

/// What a row is expected to show.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Expected {
    Yes,
    No,
    /// Known open.
    Unknown,
    /// Exactly one labelling on every framework.
    One,
    AtLeastOne,
    AtLeastZero,
    /// No stated expectation.
    Unstated,
}

impl Expected {
    pub fn as_str(self) -> &'static str {
        match self {
            Expected::Yes => "yes",
            Expected::No => "no",
            Expected::Unknown => "?",
            Expected::One => "=1",
            Expected::AtLeastOne => ">=1",
            Expected::AtLeastZero => ">=0",
            Expected::Unstated => "-",
        }
    }
}

/// Reference outcomes. Weakly preferred directionality and abstention are expected to fail
/// (two rebutting arguments refute both), and ub-grounded is single-status so abstention holds.
pub fn expected(sem: Semantics, principle: Principle) -> Expected {
    use Expected::*;
    use Semantics as S;
    let col = match sem {
        S::Complete => 0,
        S::Grounded | S::WeaklyGrounded => 1,
        S::Preferred => 2,
        S::Stable | S::WeaklyStable => 3,
        S::WeaklyComplete => 4,
        S::WeaklyPreferred => 5,
        S::UbGrounded => 6,
        S::UbPreferred => 7,
        S::BbuComplete => 8,
        S::BbuGrounded => 9,
        S::BbuPreferred => 10,
    };
    let row: [Expected; 11] = match principle {
        Principle::ConflictFree | Principle::Reinstatement | Principle::Rejection => [Yes; 11],
        Principle::Admissible => [Yes, Yes, Yes, Yes, No, No, No, No, No, No, No],
        Principle::Directionality => [Yes, Yes, Yes, No, Yes, No, Yes, Yes, No, No, Unknown],
        Principle::Abstention => [Yes, Yes, No, No, Yes, No, Yes, No, No, No, No],
        Principle::Cardinality => [
            AtLeastOne,
            One,
            AtLeastOne,
            AtLeastZero,
            AtLeastOne,
            AtLeastOne,
            One,
            AtLeastOne,
            AtLeastOne,
            AtLeastOne,
            AtLeastOne,
        ],
        Principle::IMaximality => [No, Yes, Yes, Yes, No, Yes, Yes, Yes, No, Yes, Yes],
        Principle::CycleHomogeneity => [No, Yes, No, No, No, No, Yes, No, No, No, No],
        Principle::AcyclicDecided => [
            Unstated, Unstated, Unstated, Unstated, Unstated, Unstated, Yes, Yes, Unstated,
            Unstated, Unstated,
        ],
    };
    row[col]
}

/// Rows whose expectation comes from outside this crate's own semantics and is only noted.
pub fn expectation_is_external(sem: Semantics) -> bool {
    sem.is_extension_based()
}

#[derive(Debug, Clone, PartialEq)]
pub struct SampleSpec {
    /// Sampled frameworks have 1..=max_n arguments.
    pub max_n: usize,
    pub probabilities: Vec<f64>,
    pub samples: usize,
    pub seed: u64,
    pub max_cycle_len: usize,
}

impl Default for SampleSpec {
    fn default() -> Self {
        SampleSpec {
            max_n: 6,
            probabilities: vec![0.1, 0.3, 0.5],
            samples: 300,
            seed: 0,
            max_cycle_len: 7,
        }
    }
}

impl SampleSpec {
    /// Bundled frameworks first, then the random sample.
    pub fn frameworks(&self) -> Vec<(String, Framework)> {
        let mut out: Vec<(String, Framework)> = fixtures::all()
            .into_iter()
            .map(|(n, fw)| (n.to_string(), fw))
            .collect();
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        for i in 0..self.samples {
            let n = rng.random_range(1..=self.max_n.max(1));
            let p = self.probabilities[i % self.probabilities.len().max(1)];
            let seed = rng.random::<u64>();
            out.push((
                format!("random(n={n},p={p},seed={seed})"),
                random_framework(n, p, seed),
            ));
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Row {
    pub verdict: Verdict,
    pub expected: Expected,
    /// Fewest and most labellings seen, for the cardinality row.
    pub counts: Option<(usize, usize)>,
}

impl Row {
    /// Whether the observation is compatible with the expectation: a refutation contradicts
    /// "yes", and for "no" a sample that never refutes is inconclusive rather than wrong.
    pub fn agrees(&self) -> Option<bool> {
        match (self.expected, self.counts) {
            (Expected::One, Some(_)) => Some(self.verdict.holds()),
            (Expected::AtLeastOne, Some((min, _))) => Some(min >= 1),
            (Expected::AtLeastZero, _) => Some(true),
            (Expected::Yes, _) => Some(self.verdict.holds()),
            (Expected::No, _) if !self.verdict.holds() => Some(true),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PrincipleReport {
    pub sample: SampleSpec,
    pub frameworks: usize,
    pub rows: BTreeMap<(Semantics, Principle), Row>,
}

impl PrincipleReport {
    pub fn row(&self, sem: Semantics, principle: Principle) -> Option<&Row> {
        self.rows.get(&(sem, principle))
    }

    /// Rows where a semantics of this crate refutes an expected "yes" or misses a count.
    pub fn contradictions(&self) -> Vec<(Semantics, Principle)> {
        self.rows
            .iter()
            .filter(|((sem, _), row)| !expectation_is_external(*sem) && row.agrees() == Some(false))
            .map(|(k, _)| *k)
            .collect()
    }
}

struct PerFramework {
    verdicts: Vec<(Principle, Verdict)>,
    count: usize,
}

fn evaluate_one(name: &str, fw: &Framework, sem: Semantics, cfg: &Config) -> Result<PerFramework> {
    let set = labellings(fw, sem, cfg)?;
    let mut verdicts = Vec::new();
    for p in [
        Principle::ConflictFree,
        Principle::Admissible,
        Principle::Reinstatement,
        Principle::Rejection,
        Principle::AcyclicDecided,
    ] {
        verdicts.push((p, check_each(fw, &set, p)));
    }
    verdicts.push((
        Principle::Directionality,
        directionality_of(fw, sem, &set, cfg)?,
    ));
    verdicts.push((Principle::Abstention, abstention_of(fw, &set)));
    verdicts.push((Principle::IMaximality, check_i_maximality(fw, &set)));
    let cardinality = if set.len() == 1 {
        Verdict::HoldsOnSample
    } else {
        Verdict::refuted(
            fw,
            set.iter().cloned().collect(),
            format!("{} labellings", set.len()),
        )
    };
    verdicts.push((Principle::Cardinality, cardinality));
    for (_, v) in &mut verdicts {
        if let Verdict::Refuted(c) = v {
            c.source = name.to_string();
        }
    }
    Ok(PerFramework {
        verdicts,
        count: set.len(),
    })
}

/// Checks every principle for every semantics over the sample. Counterexamples are the first
/// refuting framework in sample order, so reports are reproducible from the seed.
pub fn principle_report(
    semantics: &[Semantics],
    spec: &SampleSpec,
    cfg: &Config,
) -> Result<PrincipleReport> {
    if spec.probabilities.is_empty() || spec.probabilities.iter().any(|p| !(0.0..=1.0).contains(p))
    {
        return Err(Error::Invalid(
            "edge probabilities must lie in [0, 1]".into(),
        ));
    }
    let frameworks = spec.frameworks();
    let mut rows = BTreeMap::new();
    for &sem in semantics {
        let results = par::map_vec(cfg.execution, frameworks.iter().collect(), |(name, fw)| {
            evaluate_one(name, fw, sem, cfg)
        })
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
        let mut merged: BTreeMap<Principle, Verdict> = BTreeMap::new();
        let (mut min, mut max) = (usize::MAX, 0);
        for r in results {
            min = min.min(r.count);
            max = max.max(r.count);
            for (p, v) in r.verdicts {
                let slot = merged.entry(p).or_insert(Verdict::HoldsOnSample);
                if slot.holds() {
                    *slot = v;
                }
            }
        }
        merged.insert(
            Principle::CycleHomogeneity,
            check_cycle_homogeneity(sem, spec.max_cycle_len, cfg)?,
        );
        for (p, verdict) in merged {
            rows.insert(
                (sem, p),
                Row {
                    verdict,
                    expected: expected(sem, p),
                    counts: (p == Principle::Cardinality).then_some((min, max)),
                },
            );
        }
    }
    Ok(PrincipleReport {
        sample: spec.clone(),
        frameworks: frameworks.len(),
        rows,
    })
}
