//! Deliberately naive reference implementations, used as ground truth in tests.

use std::collections::BTreeSet;

use crate::argset::ArgSet;
use crate::config::Execution;
use crate::error::{Error, Result};
use crate::framework::Framework;
use crate::labelling::{Label, Labelling, LabellingSet};
use crate::par;

pub const DEFAULT_CAP: usize = 12;

/// Checks every condition pointwise against the definition, without propagation.
#[derive(Debug, Clone, Copy)]
pub struct Oracle {
    cap: usize,
    execution: Execution,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle::new(DEFAULT_CAP)
    }
}

impl Oracle {
    /// `cap` bounds the number of arguments accepted by the exhaustive scans.
    pub fn new(cap: usize) -> Self {
        Oracle {
            cap,
            execution: Execution::default(),
        }
    }

    pub fn with_execution(mut self, execution: Execution) -> Self {
        self.execution = execution;
        self
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    fn check_cap(&self, fw: &Framework) -> Result<()> {
        if fw.len() > self.cap {
            return Err(Error::Limit(format!(
                "oracle scan refuses {} arguments (cap {})",
                fw.len(),
                self.cap
            )));
        }
        Ok(())
    }

    /// Every labelling, in lexicographic order (in < out < undec, first argument most
    /// significant), that satisfies `keep`.
    pub fn scan<F>(&self, fw: &Framework, keep: F) -> Result<Vec<Labelling>>
    where
        F: Fn(&Framework, &Labelling) -> bool + Sync + Send,
    {
        self.check_cap(fw)?;
        let n = fw.len();
        let total = 3usize.pow(n as u32);
        // split on the first few arguments so each worker scans a contiguous block
        let prefix = n.min(4);
        let blocks = 3usize.pow(prefix as u32);
        let per_block = total / blocks;
        let found = par::map_range(self.execution, blocks, |b| {
            let mut hits = Vec::new();
            for k in b * per_block..(b + 1) * per_block {
                let l = decode(k, n);
                if keep(fw, &l) {
                    hits.push(l);
                }
            }
            hits
        });
        Ok(found.into_iter().flatten().collect())
    }

    pub fn brute_force_weakly_complete(&self, fw: &Framework) -> Result<LabellingSet> {
        Ok(self.scan(fw, is_weakly_complete)?.into_iter().collect())
    }

    pub fn brute_force_complete(&self, fw: &Framework) -> Result<LabellingSet> {
        Ok(self.scan(fw, is_complete)?.into_iter().collect())
    }

    /// Complete labellings with no undec argument.
    pub fn brute_force_stable(&self, fw: &Framework) -> Result<LabellingSet> {
        Ok(self
            .scan(fw, |f, l| is_complete(f, l) && l.undec_set().is_empty())?
            .into_iter()
            .collect())
    }

    pub fn brute_force_credulous(&self, fw: &Framework, name: &str) -> Result<bool> {
        let a = fw.arg(name)?;
        Ok(self
            .brute_force_weakly_complete(fw)?
            .iter()
            .any(|l| l.get(a) == Label::In))
    }
}

fn decode(mut k: usize, n: usize) -> Labelling {
    let mut labels = vec![Label::Undec; n];
    for slot in labels.iter_mut().rev() {
        *slot = Label::ALL[k % 3];
        k /= 3;
    }
    Labelling::from_labels(labels)
}

fn count(fw: &Framework, l: &Labelling, a: usize, label: Label) -> usize {
    fw.attackers(a)
        .iter()
        .filter(|&&b| l.get(b) == label)
        .count()
}

/// in: no attacker in. out: some attacker in. undec: no attacker in, some attacker undec.
pub fn is_weakly_complete(fw: &Framework, l: &Labelling) -> bool {
    l.len() == fw.len()
        && (0..fw.len()).all(|a| {
            let ins = count(fw, l, a, Label::In);
            match l.get(a) {
                Label::In => ins == 0,
                Label::Out => ins > 0,
                Label::Undec => ins == 0 && count(fw, l, a, Label::Undec) > 0,
            }
        })
}

/// in: every attacker out. out: some attacker in. undec: no attacker in, not every attacker out.
pub fn is_complete(fw: &Framework, l: &Labelling) -> bool {
    l.len() == fw.len()
        && (0..fw.len()).all(|a| {
            let ins = count(fw, l, a, Label::In);
            let outs = count(fw, l, a, Label::Out);
            let all_out = outs == fw.attackers(a).len();
            match l.get(a) {
                Label::In => all_out,
                Label::Out => ins > 0,
                Label::Undec => ins == 0 && !all_out,
            }
        })
}

/// Components as classes of mutual reachability, computed from the transitive closure.
/// Each component is sorted and the list is ordered by least member.
pub fn reachability_components(fw: &Framework) -> Vec<Vec<usize>> {
    let n = fw.len();
    let mut reach = vec![vec![false; n]; n];
    for (a, row) in reach.iter_mut().enumerate() {
        row[a] = true;
    }
    for &(a, b) in fw.attacks() {
        reach[a][b] = true;
    }
    for k in 0..n {
        let via = reach[k].clone();
        for row in reach.iter_mut().filter(|row| row[k]) {
            for (cell, &hop) in row.iter_mut().zip(&via) {
                *cell |= hop;
            }
        }
    }
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for a in 0..n {
        if seen[a] {
            continue;
        }
        let class: Vec<usize> = (0..n).filter(|&b| reach[a][b] && reach[b][a]).collect();
        for &b in &class {
            seen[b] = true;
        }
        out.push(class);
    }
    out
}

/// Weak admissibility straight from the recursive definition: materialises every reduct,
/// tries every subset, remembers nothing.
pub fn naive_weakly_admissible(fw: &Framework) -> BTreeSet<ArgSet> {
    let n = fw.len();
    let mut out = BTreeSet::new();
    for mask in 0u64..(1u64 << n) {
        let e = ArgSet::from_indices(n, (0..n).filter(|&i| mask >> i & 1 == 1));
        if !fw.is_conflict_free(&e) {
            continue;
        }
        if e.is_empty() {
            // no attackers to answer, and its reduct is the framework itself
            out.insert(e);
            continue;
        }
        let mut gone = e.clone();
        gone.union_with(&fw.range_of(&e));
        let (red, map) = fw.restrict_with_map(&ArgSet::full(n).difference(&gone));
        let mut inner = ArgSet::empty(n);
        for s in naive_weakly_admissible(&red) {
            for j in s.iter() {
                inner.insert(map[j]);
            }
        }
        let ok = e
            .iter()
            .all(|x| fw.attackers(x).iter().all(|&y| !inner.contains(y)));
        if ok {
            out.insert(e);
        }
    }
    out
}
