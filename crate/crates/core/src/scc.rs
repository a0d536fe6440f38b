use std::cmp::Reverse;
use std::collections::BinaryHeap;

use petgraph::algo::tarjan_scc;
use petgraph::graph::{DiGraph, NodeIndex};

use crate::argset::ArgSet;
use crate::framework::Framework;

/// Strongly connected components listed in a topological order of the condensation:
/// attacks between components only go from earlier to later ones.
///
/// Among components that are ready at the same time, the one holding the smallest argument
/// index comes first, so the order is a function of the framework alone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SccDecomposition {
    components: Vec<Vec<usize>>,
    component_of: Vec<usize>,
}

impl SccDecomposition {
    pub fn new(fw: &Framework) -> Self {
        let n = fw.len();
        let mut graph = DiGraph::<(), ()>::with_capacity(n, fw.attacks().len());
        for _ in 0..n {
            graph.add_node(());
        }
        for &(a, b) in fw.attacks() {
            graph.add_edge(NodeIndex::new(a), NodeIndex::new(b), ());
        }
        let mut raw: Vec<Vec<usize>> = tarjan_scc(&graph)
            .into_iter()
            .map(|c| {
                let mut c: Vec<usize> = c.into_iter().map(|x| x.index()).collect();
                c.sort_unstable();
                c
            })
            .collect();
        raw.sort_unstable_by_key(|c| c[0]);

        let mut owner = vec![0; n];
        for (ci, c) in raw.iter().enumerate() {
            for &a in c {
                owner[a] = ci;
            }
        }
        let k = raw.len();
        let mut succ = vec![Vec::new(); k];
        let mut indeg = vec![0usize; k];
        for &(a, b) in fw.attacks() {
            let (ca, cb) = (owner[a], owner[b]);
            if ca != cb {
                succ[ca].push(cb);
            }
        }
        for s in &mut succ {
            s.sort_unstable();
            s.dedup();
            for &t in s.iter() {
                indeg[t] += 1;
            }
        }
        // raw is sorted by least member, so the component index doubles as the tie-break key
        let mut ready: BinaryHeap<Reverse<usize>> =
            (0..k).filter(|&c| indeg[c] == 0).map(Reverse).collect();
        let mut order = Vec::with_capacity(k);
        while let Some(Reverse(c)) = ready.pop() {
            order.push(c);
            for &t in &succ[c] {
                indeg[t] -= 1;
                if indeg[t] == 0 {
                    ready.push(Reverse(t));
                }
            }
        }
        let mut components = Vec::with_capacity(k);
        let mut component_of = vec![0; n];
        for (pos, &c) in order.iter().enumerate() {
            for &a in &raw[c] {
                component_of[a] = pos;
            }
            components.push(std::mem::take(&mut raw[c]));
        }
        SccDecomposition {
            components,
            component_of,
        }
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// Position in [`components`](Self::components) of the component holding `a`.
    pub fn component_of(&self, a: usize) -> usize {
        self.component_of[a]
    }

    pub fn component_set(&self, pos: usize) -> ArgSet {
        ArgSet::from_indices(
            self.component_of.len(),
            self.components[pos].iter().copied(),
        )
    }

    /// Components with no attacker outside themselves.
    pub fn initial_components(&self, fw: &Framework) -> Vec<usize> {
        (0..self.components.len())
            .filter(|&pos| {
                self.components[pos]
                    .iter()
                    .all(|&a| fw.attackers(a).iter().all(|&b| self.component_of[b] == pos))
            })
            .collect()
    }

    pub fn named<'a>(&self, fw: &'a Framework) -> Vec<Vec<&'a str>> {
        self.components
            .iter()
            .map(|c| c.iter().map(|&a| fw.name(a)).collect())
            .collect()
    }
}
