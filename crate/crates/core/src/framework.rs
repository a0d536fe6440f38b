use std::collections::HashMap;
use std::fmt;

use crate::argset::ArgSet;
use crate::error::{Error, Result};
use crate::scc::SccDecomposition;

/// A finite attack graph over named arguments.
///
/// Arguments keep their declaration order and are addressed internally by a dense index.
/// Attack lists are sorted and free of duplicates.
#[derive(Clone)]
pub struct Framework {
    names: Vec<String>,
    index: HashMap<String, usize>,
    attacks: Vec<(usize, usize)>,
    attackers: Vec<Vec<usize>>,
    targets: Vec<Vec<usize>>,
}

impl Framework {
    /// Builds a framework, rejecting empty or duplicate identifiers and undeclared endpoints.
    /// Repeated attack pairs collapse into one.
    pub fn new<A, S, T, U>(arguments: A, attacks: T) -> Result<Self>
    where
        A: IntoIterator<Item = S>,
        S: AsRef<str>,
        T: IntoIterator<Item = (U, U)>,
        U: AsRef<str>,
    {
        let mut names = Vec::new();
        let mut index = HashMap::new();
        for name in arguments {
            let name = name.as_ref();
            if name.is_empty() {
                return Err(Error::EmptyArgumentId);
            }
            if index.insert(name.to_string(), names.len()).is_some() {
                return Err(Error::DuplicateArgument(name.to_string()));
            }
            names.push(name.to_string());
        }
        let lookup = |n: &str| {
            index
                .get(n)
                .copied()
                .ok_or_else(|| Error::UnknownArgument(n.to_string()))
        };
        let mut pairs = Vec::new();
        for (a, b) in attacks {
            pairs.push((lookup(a.as_ref())?, lookup(b.as_ref())?));
        }
        Ok(Self::from_parts(names, index, pairs))
    }

    pub(crate) fn from_indices(names: Vec<String>, attacks: Vec<(usize, usize)>) -> Self {
        let index = names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), i))
            .collect();
        Self::from_parts(names, index, attacks)
    }

    fn from_parts(
        names: Vec<String>,
        index: HashMap<String, usize>,
        mut attacks: Vec<(usize, usize)>,
    ) -> Self {
        attacks.sort_unstable();
        attacks.dedup();
        let n = names.len();
        let mut attackers = vec![Vec::new(); n];
        let mut targets = vec![Vec::new(); n];
        for &(a, b) in &attacks {
            targets[a].push(b);
            attackers[b].push(a);
        }
        for list in &mut attackers {
            list.sort_unstable();
        }
        Framework {
            names,
            index,
            attacks,
            attackers,
            targets,
        }
    }

    /// The framework with no arguments. Only reachable through restriction or explicitly;
    /// semantics treat it as having a single empty labelling.
    pub fn empty() -> Self {
        Self::from_indices(Vec::new(), Vec::new())
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    /// Index of the argument called `name`.
    pub fn arg(&self, name: &str) -> Result<usize> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownArgument(name.to_string()))
    }

    pub fn set_of<S: AsRef<str>>(&self, names: impl IntoIterator<Item = S>) -> Result<ArgSet> {
        let mut set = ArgSet::empty(self.len());
        for n in names {
            set.insert(self.arg(n.as_ref())?);
        }
        Ok(set)
    }

    pub fn names_of(&self, set: &ArgSet) -> Vec<&str> {
        set.iter().map(|i| self.name(i)).collect()
    }

    /// Attack pairs as indices, sorted.
    pub fn attacks(&self) -> &[(usize, usize)] {
        &self.attacks
    }

    pub fn attack_names(&self) -> impl Iterator<Item = (&str, &str)> + '_ {
        self.attacks
            .iter()
            .map(|&(a, b)| (self.name(a), self.name(b)))
    }

    pub fn attackers(&self, a: usize) -> &[usize] {
        &self.attackers[a]
    }

    pub fn attacked_by(&self, a: usize) -> &[usize] {
        &self.targets[a]
    }

    pub fn attacks_arg(&self, a: usize, b: usize) -> bool {
        self.targets[a].binary_search(&b).is_ok()
    }

    pub fn attacker_set(&self, name: &str) -> Result<ArgSet> {
        let a = self.arg(name)?;
        Ok(ArgSet::from_indices(
            self.len(),
            self.attackers(a).iter().copied(),
        ))
    }

    pub fn attacked_set(&self, name: &str) -> Result<ArgSet> {
        let a = self.arg(name)?;
        Ok(ArgSet::from_indices(
            self.len(),
            self.attacked_by(a).iter().copied(),
        ))
    }

    pub fn initial_arguments(&self) -> ArgSet {
        ArgSet::from_indices(
            self.len(),
            (0..self.len()).filter(|&a| self.attackers[a].is_empty()),
        )
    }

    /// Everything attacked by some member of `set`.
    pub fn range_of(&self, set: &ArgSet) -> ArgSet {
        let mut out = ArgSet::empty(self.len());
        for a in set.iter() {
            for &b in &self.targets[a] {
                out.insert(b);
            }
        }
        out
    }

    /// First attack found inside `set`, if any.
    pub fn internal_attack(&self, set: &ArgSet) -> Option<(usize, usize)> {
        set.iter().find_map(|a| {
            self.targets[a]
                .iter()
                .find(|&&b| set.contains(b))
                .map(|&b| (a, b))
        })
    }

    pub fn is_conflict_free(&self, set: &ArgSet) -> bool {
        self.internal_attack(set).is_none()
    }

    /// The subgraph induced by `keep`.
    pub fn restrict(&self, keep: &ArgSet) -> Framework {
        self.restrict_with_map(keep).0
    }

    /// Like [`restrict`](Self::restrict), also returning the original index of each
    /// argument of the restriction.
    pub fn restrict_with_map(&self, keep: &ArgSet) -> (Framework, Vec<usize>) {
        let old: Vec<usize> = keep.iter().filter(|&i| i < self.len()).collect();
        let mut new_of = vec![usize::MAX; self.len()];
        for (j, &i) in old.iter().enumerate() {
            new_of[i] = j;
        }
        let names = old.iter().map(|&i| self.names[i].clone()).collect();
        let attacks = self
            .attacks
            .iter()
            .filter(|&&(a, b)| new_of[a] != usize::MAX && new_of[b] != usize::MAX)
            .map(|&(a, b)| (new_of[a], new_of[b]))
            .collect();
        (Framework::from_indices(names, attacks), old)
    }

    /// Restriction to a set given by name.
    pub fn restrict_names<S: AsRef<str>>(
        &self,
        keep: impl IntoIterator<Item = S>,
    ) -> Result<Framework> {
        Ok(self.restrict(&self.set_of(keep)?))
    }

    pub fn scc_decomposition(&self) -> SccDecomposition {
        SccDecomposition::new(self)
    }

    /// True when `a` lies on no cycle, self-attacks included.
    pub fn is_acyclic_argument(&self, a: usize) -> bool {
        if self.attacks_arg(a, a) {
            return false;
        }
        let scc = self.scc_decomposition();
        scc.components()[scc.component_of(a)].len() == 1
    }
}

impl PartialEq for Framework {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.attacks == other.attacks
    }
}

impl Eq for Framework {}

impl fmt::Debug for Framework {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let attacks: Vec<String> = self
            .attack_names()
            .map(|(a, b)| format!("{a}->{b}"))
            .collect();
        f.debug_struct("Framework")
            .field("arguments", &self.names)
            .field("attacks", &attacks)
            .finish()
    }
}
