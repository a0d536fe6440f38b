use std::collections::VecDeque;

use crate::argset::ArgSet;
use crate::error::{Error, Result};
use crate::framework::Framework;
use crate::labelling::{Label, Labelling};

/// Result of a forward propagation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Propagation {
    Consistent(Labelling),
    /// Propagation would have to label `clash` both in and out. The input is left untouched.
    Inconsistent {
        clash: usize,
    },
}

impl Propagation {
    pub fn is_consistent(&self) -> bool {
        matches!(self, Propagation::Consistent(_))
    }

    pub fn labelling(self) -> Option<Labelling> {
        match self {
            Propagation::Consistent(l) => Some(l),
            Propagation::Inconsistent { .. } => None,
        }
    }
}

const UNSEEN: u32 = u32::MAX;

/// Labels `grounds` in, their targets out, and promotes any undec argument whose attackers
/// are all out, until nothing changes.
///
/// Each argument keeps a lazily initialised count of attackers that are not yet out, so the
/// total work is linear in the number of attacks touched. Existing in and out labels are never
/// changed; if the fixpoint would need an argument to be both in and out the call reports the
/// clash and discards its work.
pub fn in_out_fw(fw: &Framework, grounds: &ArgSet, labelling: &Labelling) -> Result<Propagation> {
    labelling.check_size(fw)?;
    for g in grounds.iter() {
        if g >= fw.len() || labelling.get(g) != Label::Undec {
            return Err(Error::GroundNotUndec(
                fw.names().get(g).cloned().unwrap_or_else(|| g.to_string()),
            ));
        }
    }
    if grounds.is_empty() {
        return Ok(Propagation::Consistent(labelling.clone()));
    }

    let mut work = labelling.clone();
    let mut pending = vec![UNSEEN; fw.len()];
    let mut queue: VecDeque<usize> = grounds.iter().collect();
    for a in 0..fw.len() {
        if work.get(a) == Label::Undec
            && !grounds.contains(a)
            && fw.attackers(a).iter().all(|&b| work.get(b) == Label::Out)
        {
            queue.push_back(a);
        }
    }

    while let Some(x) = queue.pop_front() {
        match work.get(x) {
            Label::In => continue,
            Label::Out => return Ok(Propagation::Inconsistent { clash: x }),
            Label::Undec => {}
        }
        if fw.attackers(x).iter().any(|&y| work.get(y) == Label::In) {
            return Ok(Propagation::Inconsistent { clash: x });
        }
        work.set(x, Label::In);
        for &t in fw.attacked_by(x) {
            match work.get(t) {
                Label::In => return Ok(Propagation::Inconsistent { clash: t }),
                Label::Out => continue,
                Label::Undec => {}
            }
            work.set(t, Label::Out);
            for &u in fw.attacked_by(t) {
                if work.get(u) != Label::Undec {
                    continue;
                }
                if pending[u] == UNSEEN {
                    pending[u] = fw
                        .attackers(u)
                        .iter()
                        .filter(|&&y| work.get(y) != Label::Out)
                        .count() as u32;
                } else {
                    pending[u] -= 1;
                }
                if pending[u] == 0 {
                    queue.push_back(u);
                }
            }
        }
    }
    Ok(Propagation::Consistent(work))
}

/// The grounded labelling: propagation from the unattacked arguments.
pub fn grounded_labelling(fw: &Framework) -> Labelling {
    let start = Labelling::all_undec(fw.len());
    match in_out_fw(fw, &fw.initial_arguments(), &start) {
        Ok(Propagation::Consistent(l)) => l,
        // unattacked arguments cannot clash
        _ => unreachable!("propagation from initial arguments is always consistent"),
    }
}

/// See [`Labelling::from_in_set`].
pub fn labelling_from_in_set(fw: &Framework, in_set: &ArgSet) -> Result<Labelling> {
    Labelling::from_in_set(fw, in_set)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fw(args: &[&str], attacks: &[(&str, &str)]) -> Framework {
        Framework::new(args.iter().copied(), attacks.iter().copied()).unwrap()
    }

    #[test]
    fn chain_from_first() {
        let f = fw(&["a", "b", "c"], &[("a", "b"), ("b", "c")]);
        let out = in_out_fw(&f, &f.set_of(["a"]).unwrap(), &Labelling::all_undec(3))
            .unwrap()
            .labelling()
            .unwrap();
        assert_eq!(f.names_of(&out.in_set()), ["a", "c"]);
        assert_eq!(f.names_of(&out.out_set()), ["b"]);
        assert_eq!(grounded_labelling(&f), out);
    }

    #[test]
    fn odd_cycle_clashes() {
        let f = fw(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("c", "a")]);
        let r = in_out_fw(&f, &f.set_of(["a"]).unwrap(), &Labelling::all_undec(3)).unwrap();
        assert_eq!(r, Propagation::Inconsistent { clash: 0 });
        assert_eq!(grounded_labelling(&f), Labelling::all_undec(3));
    }

    #[test]
    fn self_attacker_as_ground_clashes() {
        let f = fw(&["a"], &[("a", "a")]);
        let r = in_out_fw(&f, &f.set_of(["a"]).unwrap(), &Labelling::all_undec(1)).unwrap();
        assert!(!r.is_consistent());
    }

    #[test]
    fn ground_must_be_undec() {
        let f = fw(&["a", "b"], &[("a", "b")]);
        let g = grounded_labelling(&f);
        let err = in_out_fw(&f, &f.set_of(["b"]).unwrap(), &g).unwrap_err();
        assert_eq!(err, Error::GroundNotUndec("b".into()));
    }

    #[test]
    fn empty_grounds_is_identity() {
        let f = fw(&["a", "b"], &[("a", "b")]);
        let l = Labelling::all_undec(2);
        assert_eq!(
            in_out_fw(&f, &ArgSet::empty(2), &l).unwrap(),
            Propagation::Consistent(l)
        );
    }
}
