//! Hamiltonicity: Ore's sufficient condition with a constructive cycle,
//! refutation through specific non-1-tough vertex splits, and an exact
//! backtracking search under a node budget.

use serde::{Deserialize, Serialize};

use super::components_after_removal;
use crate::graph::{BitSet, ThetaGraph};
use crate::numtheory::is_one_or_prime;

pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HamiltonStatus {
    Yes,
    No,
    Inconclusive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HamiltonMethod {
    ExactSearch,
    OreSufficient,
    ToughnessRefuted,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HamiltonianVerdict {
    pub status: HamiltonStatus,
    pub cycle: Option<Vec<usize>>,
    pub method: HamiltonMethod,
    pub nodes_explored: u64,
    /// Vertex set whose removal leaves more components than its size.
    pub toughness_witness: Option<Vec<usize>>,
    pub witness_components: Option<usize>,
}

impl HamiltonianVerdict {
    fn yes(cycle: Vec<usize>, method: HamiltonMethod, nodes_explored: u64) -> Self {
        HamiltonianVerdict {
            status: HamiltonStatus::Yes,
            cycle: Some(cycle),
            method,
            nodes_explored,
            toughness_witness: None,
            witness_components: None,
        }
    }

    fn searched(status: HamiltonStatus, nodes_explored: u64) -> Self {
        HamiltonianVerdict {
            status,
            cycle: None,
            method: HamiltonMethod::ExactSearch,
            nodes_explored,
            toughness_witness: None,
            witness_components: None,
        }
    }
}

/// Checks that `cycle` visits every vertex once with consecutive vertices
/// (and the two ends) adjacent.
pub fn validate_cycle(t: &ThetaGraph, cycle: &[usize]) -> bool {
    let n = t.n_vertices();
    if cycle.len() != n || n < 3 {
        return false;
    }
    let mut seen = BitSet::new(n);
    for &v in cycle {
        if v >= n || seen.contains(v) {
            return false;
        }
        seen.insert(v);
    }
    (0..n).all(|i| t.has_edge(cycle[i], cycle[(i + 1) % n]))
}

fn ore_condition(t: &ThetaGraph) -> bool {
    let n = t.n_vertices();
    let deg = t.degrees();
    for u in 0..n {
        for w in (u + 1)..n {
            if !t.has_edge(u, w) && deg[u] + deg[w] < n {
                return false;
            }
        }
    }
    true
}

/// Closes gaps in a cyclic vertex order by segment reversal. Under Ore's
/// condition every gap `(s0, s1)` has a `j` with `s0 ~ sj` and `s1 ~ s(j+1)`.
fn ore_cycle(t: &ThetaGraph) -> Option<Vec<usize>> {
    let n = t.n_vertices();
    let mut seq: Vec<usize> = (0..n).collect();
    for _ in 0..n * n {
        let Some(gap) = (0..n).find(|&i| !t.has_edge(seq[i], seq[(i + 1) % n])) else {
            return Some(seq);
        };
        seq.rotate_left(gap);
        let j = (2..n - 1).find(|&j| t.has_edge(seq[0], seq[j]) && t.has_edge(seq[1], seq[j + 1]))?;
        seq[1..=j].reverse();
    }
    None
}

/// Vertex sets whose removal could break 1-toughness: the complement of each
/// class of elements sharing one composite order (such a class is
/// independent), and `S(G)` itself.
fn toughness_candidates(t: &ThetaGraph) -> Vec<Vec<usize>> {
    let n = t.n_vertices();
    let mut orders: Vec<u64> = (0..n).map(|v| t.order_of(v)).filter(|&o| !is_one_or_prime(o)).collect();
    orders.sort_unstable();
    orders.dedup();
    let mut out: Vec<Vec<usize>> = orders
        .into_iter()
        .map(|o| (0..n).filter(|&v| t.order_of(v) != o).collect())
        .collect();
    out.push(t.prime_order_set().indices);
    out
}

struct Search<'a> {
    t: &'a ThetaGraph,
    start: usize,
    budget: u64,
    nodes: u64,
    path: Vec<usize>,
    unvisited: BitSet,
    order: Vec<Vec<usize>>,
}

enum Outcome {
    Found,
    Exhausted,
    OutOfBudget,
}

impl Search<'_> {
    fn feasible(&self, tail: usize) -> bool {
        // every unvisited vertex keeps two usable neighbors
        for u in self.unvisited.iter() {
            let row = self.t.row(u);
            let mut usable = row.intersection_count(&self.unvisited);
            if row.contains(tail) {
                usable += 1;
            }
            if row.contains(self.start) && tail != self.start {
                usable += 1;
            }
            if usable < 2 {
                return false;
            }
        }
        // unvisited vertices all reachable from the tail through unvisited ones
        let remaining = self.unvisited.count();
        if remaining == 0 {
            return true;
        }
        let mut seen = BitSet::new(self.t.n_vertices());
        let mut stack = vec![tail];
        let mut reached = 0;
        while let Some(u) = stack.pop() {
            for w in self.t.neighbors(u) {
                if self.unvisited.contains(w) && !seen.contains(w) {
                    seen.insert(w);
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached == remaining
    }

    fn extend(&mut self, tail: usize) -> Outcome {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Outcome::OutOfBudget;
        }
        if self.unvisited.is_empty() {
            return if self.t.has_edge(tail, self.start) {
                Outcome::Found
            } else {
                Outcome::Exhausted
            };
        }
        if !self.feasible(tail) {
            return Outcome::Exhausted;
        }
        for k in 0..self.order[tail].len() {
            let w = self.order[tail][k];
            if !self.unvisited.contains(w) {
                continue;
            }
            self.unvisited.remove(w);
            self.path.push(w);
            match self.extend(w) {
                Outcome::Exhausted => {}
                other => return other,
            }
            self.path.pop();
            self.unvisited.insert(w);
        }
        Outcome::Exhausted
    }
}

/// Decides Hamiltonicity. `node_budget` bounds the backtracking search only;
/// the Ore and toughness stages are polynomial.
pub fn is_hamiltonian(t: &ThetaGraph, node_budget: u64) -> HamiltonianVerdict {
    let n = t.n_vertices();
    if n < 3 {
        return HamiltonianVerdict::searched(HamiltonStatus::No, 0);
    }

    if ore_condition(t) {
        if let Some(cycle) = ore_cycle(t) {
            debug_assert!(validate_cycle(t, &cycle));
            return HamiltonianVerdict::yes(cycle, HamiltonMethod::OreSufficient, 0);
        }
    }

    for removed in toughness_candidates(t) {
        let components = components_after_removal(t, &removed);
        if components > removed.len() {
            return HamiltonianVerdict {
                status: HamiltonStatus::No,
                cycle: None,
                method: HamiltonMethod::ToughnessRefuted,
                nodes_explored: 0,
                toughness_witness: Some(removed),
                witness_components: Some(components),
            };
        }
    }

    let deg = t.degrees();
    let start = (0..n).min_by_key(|&v| (deg[v], v)).unwrap();
    let order = (0..n)
        .map(|v| {
            let mut nb: Vec<usize> = t.neighbors(v).collect();
            nb.sort_by_key(|&w| (deg[w], w));
            nb
        })
        .collect();
    let mut unvisited = BitSet::full(n);
    unvisited.remove(start);
    let mut search = Search {
        t,
        start,
        budget: node_budget,
        nodes: 0,
        path: vec![start],
        unvisited,
        order,
    };
    match search.extend(start) {
        Outcome::Found => {
            let nodes = search.nodes;
            HamiltonianVerdict::yes(search.path, HamiltonMethod::ExactSearch, nodes)
        }
        Outcome::Exhausted => HamiltonianVerdict::searched(HamiltonStatus::No, search.nodes),
        Outcome::OutOfBudget => HamiltonianVerdict::searched(HamiltonStatus::Inconclusive, search.nodes),
    }
}
