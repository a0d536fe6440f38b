use std::collections::BTreeMap;
use std::fmt;

use crate::argset::ArgSet;
use crate::error::{Error, Result};
use crate::framework::Framework;

/// Declaration order doubles as the order used by the exhaustive scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    In,
    Out,
    Undec,
}

impl Label {
    pub const ALL: [Label; 3] = [Label::In, Label::Out, Label::Undec];

    pub fn as_str(self) -> &'static str {
        match self {
            Label::In => "in",
            Label::Out => "out",
            Label::Undec => "undec",
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A total assignment of labels, indexed like the framework it belongs to.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Labelling(Vec<Label>);

impl Labelling {
    pub fn all_undec(n: usize) -> Self {
        Labelling(vec![Label::Undec; n])
    }

    pub fn from_labels(labels: Vec<Label>) -> Self {
        Labelling(labels)
    }

    /// The labelling whose in-set is `in_set`: its targets are out, the rest undec.
    pub fn from_in_set(fw: &Framework, in_set: &ArgSet) -> Result<Self> {
        if let Some((a, b)) = fw.internal_attack(in_set) {
            return Err(Error::NotConflictFree(
                fw.name(a).to_string(),
                fw.name(b).to_string(),
            ));
        }
        let mut labels = vec![Label::Undec; fw.len()];
        for a in in_set.iter() {
            for &b in fw.attacked_by(a) {
                labels[b] = Label::Out;
            }
        }
        for a in in_set.iter() {
            labels[a] = Label::In;
        }
        Ok(Labelling(labels))
    }

    /// Builds a labelling from named in and out sets; everything else is undec.
    pub fn from_names<S: AsRef<str>>(
        fw: &Framework,
        ins: impl IntoIterator<Item = S>,
        outs: impl IntoIterator<Item = S>,
    ) -> Result<Self> {
        let mut labels = vec![Label::Undec; fw.len()];
        for a in ins {
            labels[fw.arg(a.as_ref())?] = Label::In;
        }
        for a in outs {
            labels[fw.arg(a.as_ref())?] = Label::Out;
        }
        Ok(Labelling(labels))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, a: usize) -> Label {
        self.0[a]
    }

    pub fn set(&mut self, a: usize, label: Label) {
        self.0[a] = label;
    }

    pub fn labels(&self) -> &[Label] {
        &self.0
    }

    pub fn with_label(&self, label: Label) -> ArgSet {
        ArgSet::from_indices(
            self.0.len(),
            self.0
                .iter()
                .enumerate()
                .filter(|(_, &l)| l == label)
                .map(|(i, _)| i),
        )
    }

    pub fn in_set(&self) -> ArgSet {
        self.with_label(Label::In)
    }

    pub fn out_set(&self) -> ArgSet {
        self.with_label(Label::Out)
    }

    pub fn undec_set(&self) -> ArgSet {
        self.with_label(Label::Undec)
    }

    pub(crate) fn check_size(&self, fw: &Framework) -> Result<()> {
        if self.len() != fw.len() {
            return Err(Error::LabellingSize {
                expected: fw.len(),
                found: self.len(),
            });
        }
        Ok(())
    }

    /// Named view with each list sorted by name.
    pub fn named<'a>(&self, fw: &'a Framework) -> NamedLabelling<'a> {
        let mut named = NamedLabelling::default();
        for (i, &l) in self.0.iter().enumerate() {
            let bucket = match l {
                Label::In => &mut named.ins,
                Label::Out => &mut named.outs,
                Label::Undec => &mut named.undecs,
            };
            bucket.push(fw.name(i));
        }
        named.ins.sort_unstable();
        named.outs.sort_unstable();
        named.undecs.sort_unstable();
        named
    }
}

impl fmt::Debug for Labelling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Labelling(in={:?}, out={:?}, undec={:?})",
            self.in_set(),
            self.out_set(),
            self.undec_set()
        )
    }
}

#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct NamedLabelling<'a> {
    pub ins: Vec<&'a str>,
    pub outs: Vec<&'a str>,
    pub undecs: Vec<&'a str>,
}

/// One step of the ground-based search: the grounds accepted along the branch, and the in-set
/// reached.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Discovery {
    pub grounds: Vec<usize>,
    pub in_set: ArgSet,
}

/// Labellings keyed by in-set, which identifies a weakly complete labelling uniquely.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LabellingSet {
    items: BTreeMap<ArgSet, Labelling>,
    provenance: Option<Vec<Discovery>>,
}

impl LabellingSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Returns false when a labelling with the same in-set was already present.
    pub fn insert(&mut self, labelling: Labelling) -> bool {
        let key = labelling.in_set();
        if self.items.contains_key(&key) {
            return false;
        }
        self.items.insert(key, labelling);
        true
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    /// Members in ascending in-set order.
    pub fn iter(&self) -> impl Iterator<Item = &Labelling> {
        self.items.values()
    }

    pub fn in_sets(&self) -> impl Iterator<Item = &ArgSet> {
        self.items.keys()
    }

    pub fn get(&self, in_set: &ArgSet) -> Option<&Labelling> {
        self.items.get(in_set)
    }

    pub fn contains(&self, labelling: &Labelling) -> bool {
        self.items.get(&labelling.in_set()) == Some(labelling)
    }

    pub fn provenance(&self) -> Option<&[Discovery]> {
        self.provenance.as_deref()
    }

    pub(crate) fn set_provenance(&mut self, discoveries: Vec<Discovery>) {
        self.provenance = Some(discoveries);
    }

    pub fn retain(&mut self, mut keep: impl FnMut(&Labelling) -> bool) {
        self.items.retain(|_, l| keep(l));
        self.provenance = None;
    }

    pub fn filtered(&self, keep: impl FnMut(&Labelling) -> bool) -> LabellingSet {
        let mut out = self.clone();
        out.retain(keep);
        out
    }

    /// Members whose in-set is not strictly contained in another member's.
    pub fn maximal_in(&self) -> LabellingSet {
        let keys: Vec<&ArgSet> = self.items.keys().collect();
        self.filtered(|l| {
            let s = l.in_set();
            !keys.iter().any(|k| s.is_strict_subset(k))
        })
    }

    pub fn into_vec(self) -> Vec<Labelling> {
        self.items.into_values().collect()
    }
}

impl FromIterator<Labelling> for LabellingSet {
    fn from_iter<I: IntoIterator<Item = Labelling>>(iter: I) -> Self {
        let mut set = LabellingSet::new();
        for l in iter {
            set.insert(l);
        }
        set
    }
}

impl Extend<Labelling> for LabellingSet {
    fn extend<I: IntoIterator<Item = Labelling>>(&mut self, iter: I) {
        for l in iter {
            self.insert(l);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn scc() -> Framework {
        Framework::new(
            ["a", "b", "c", "d", "e"],
            [("a", "b"), ("b", "c"), ("c", "a"), ("c", "d"), ("d", "e")],
        )
        .unwrap()
    }

    #[test]
    fn from_in_set_marks_targets_out() {
        let fw = scc();
        let l = Labelling::from_in_set(&fw, &fw.set_of(["d"]).unwrap()).unwrap();
        let named = l.named(&fw);
        assert_eq!(named.ins, ["d"]);
        assert_eq!(named.outs, ["e"]);
        assert_eq!(named.undecs, ["a", "b", "c"]);
        let empty = Labelling::from_in_set(&fw, &ArgSet::empty(5)).unwrap();
        assert_eq!(empty, Labelling::all_undec(5));
    }

    #[test]
    fn from_in_set_rejects_conflicts() {
        let fw = scc();
        let err = Labelling::from_in_set(&fw, &fw.set_of(["a", "b"]).unwrap()).unwrap_err();
        assert_eq!(err, Error::NotConflictFree("a".into(), "b".into()));
    }

    #[test]
    fn set_dedups_by_in_set() {
        let mut set = LabellingSet::new();
        assert!(set.insert(Labelling::all_undec(2)));
        assert!(!set.insert(Labelling::from_labels(vec![Label::Out, Label::Undec])));
        assert_eq!(set.len(), 1);
    }
}
