//! Exact decision procedures for the structural properties of a prime coprime
//! graph.
//!
//! Where a property has a group-theoretic characterization, both sides are
//! computed: the graph computation and the criterion on element orders. The
//! strict entry points (`is_eulerian`, `is_complete`, ...) return a
//! [`ThetaError::Consistency`] when the two disagree.

mod connectivity;
mod hamilton;
mod planarity;

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

pub use connectivity::{local_connectivity, vertex_connectivity, ConnectivityMethod, ConnectivityResult};
pub use hamilton::{
    is_hamiltonian, validate_cycle, HamiltonMethod, HamiltonStatus, HamiltonianVerdict,
    DEFAULT_NODE_BUDGET,
};
pub use planarity::{is_planar, is_planar_graph};

use crate::error::{Result, ThetaError};
use crate::graph::{BitSet, ThetaGraph};
use crate::numtheory::{is_one_or_prime, is_prime};

/// BFS distances from `src`, `None` for unreachable vertices.
fn bfs_distances(t: &ThetaGraph, src: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; t.n_vertices()];
    dist[src] = Some(0);
    let mut queue = VecDeque::from([src]);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].unwrap();
        for w in t.neighbors(u) {
            if dist[w].is_none() {
                dist[w] = Some(du + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

pub fn is_connected(t: &ThetaGraph) -> bool {
    t.n_vertices() == 0 || bfs_distances(t, 0).iter().all(Option::is_some)
}

pub fn diameter(t: &ThetaGraph) -> Result<usize> {
    let mut best = 0;
    for v in 0..t.n_vertices() {
        for d in bfs_distances(t, v) {
            match d {
                Some(d) => best = best.max(d),
                None => {
                    return Err(ThetaError::Domain(
                        "diameter is undefined for a disconnected graph".into(),
                    ))
                }
            }
        }
    }
    Ok(best)
}

/// Length of a shortest cycle, `None` for forests.
pub fn girth(t: &ThetaGraph) -> Option<usize> {
    let n = t.n_vertices();
    let mut best: Option<usize> = None;
    for root in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            if best.is_some_and(|b| 2 * dist[u] + 1 >= b) {
                break;
            }
            for w in t.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    let len = dist[u] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
        if best == Some(3) {
            break;
        }
    }
    best
}

/// Connected components of the subgraph induced on `V \ removed`.
pub fn components_after_removal(t: &ThetaGraph, removed: &[usize]) -> usize {
    let n = t.n_vertices();
    let mut gone = BitSet::new(n);
    for &v in removed {
        gone.insert(v);
    }
    let mut seen = gone.clone();
    let mut components = 0;
    for start in 0..n {
        if seen.contains(start) {
            continue;
        }
        components += 1;
        seen.insert(start);
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for w in t.neighbors(u) {
                if !seen.contains(w) {
                    seen.insert(w);
                    stack.push(w);
                }
            }
        }
    }
    components
}

/// Both Eulerian criteria: `(graph, group)`.
///
/// The graph side is connectivity plus even degrees; the group side is odd
/// group order with every non-identity element of prime order.
pub fn eulerian_criteria(t: &ThetaGraph) -> (bool, bool) {
    let graph = is_connected(t) && t.degrees().iter().all(|d| d % 2 == 0);
    let group = t.n_vertices() % 2 == 1
        && (0..t.n_vertices())
            .filter(|&v| v != t.identity())
            .all(|v| is_prime(t.order_of(v)));
    (graph, group)
}

pub fn is_eulerian(t: &ThetaGraph) -> Result<bool> {
    let (graph, group) = eulerian_criteria(t);
    if graph != group {
        return Err(ThetaError::consistency(
            "eulerian",
            format!("degree criterion says {graph}, order criterion says {group}"),
        ));
    }
    Ok(graph)
}

/// Both completeness criteria: `(graph, group)`.
pub fn completeness_criteria(t: &ThetaGraph) -> (bool, bool) {
    let n = t.n_vertices();
    let graph = t.edge_count() == n * n.saturating_sub(1) / 2;
    let group = (0..n).all(|v| is_one_or_prime(t.order_of(v)));
    (graph, group)
}

pub fn is_complete(t: &ThetaGraph) -> Result<bool> {
    let (graph, group) = completeness_criteria(t);
    if graph != group {
        return Err(ThetaError::consistency(
            "completeness",
            format!("edge count says {graph}, composite-order criterion says {group}"),
        ));
    }
    Ok(graph)
}

/// Whether `{v}` dominates the graph; checked both as a row scan and as the
/// order criterion `o(v) ∈ {1} ∪ primes`.
pub fn is_singleton_dominating(t: &ThetaGraph, v: usize) -> Result<bool> {
    let by_row = t.degree(v)? + 1 == t.n_vertices();
    let by_order = is_one_or_prime(t.order_of(v));
    if by_row != by_order {
        return Err(ThetaError::consistency(
            "domination",
            format!(
                "vertex {v} (order {}): row scan says {by_row}, order criterion says {by_order}",
                t.order_of(v)
            ),
        ));
    }
    Ok(by_row)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Domination {
    pub number: usize,
    pub witness: Vec<usize>,
}

/// The identity dominates every prime coprime graph.
pub fn domination_number(t: &ThetaGraph) -> Result<Domination> {
    let e = t.identity();
    if !is_singleton_dominating(t, e)? {
        return Err(ThetaError::consistency(
            "domination",
            format!("identity vertex {e} does not dominate"),
        ));
    }
    Ok(Domination {
        number: 1,
        witness: vec![e],
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OpenProblemClass {
    Complete,
    #[serde(rename = "kappa_equals_S")]
    KappaEqualsS,
    #[serde(rename = "kappa_exceeds_S")]
    KappaExceedsS,
    /// Not expected for any group: every element of `S(G)` is a universal
    /// vertex. Reported as a finding if it ever shows up.
    #[serde(rename = "kappa_below_S")]
    KappaBelowS,
}

impl OpenProblemClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            OpenProblemClass::Complete => "complete",
            OpenProblemClass::KappaEqualsS => "kappa_equals_S",
            OpenProblemClass::KappaExceedsS => "kappa_exceeds_S",
            OpenProblemClass::KappaBelowS => "kappa_below_S",
        }
    }

    pub fn from_counts(complete: bool, kappa: usize, s_size: usize) -> Self {
        if complete {
            OpenProblemClass::Complete
        } else {
            match kappa.cmp(&s_size) {
                std::cmp::Ordering::Equal => OpenProblemClass::KappaEqualsS,
                std::cmp::Ordering::Greater => OpenProblemClass::KappaExceedsS,
                std::cmp::Ordering::Less => OpenProblemClass::KappaBelowS,
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OpenProblemResult {
    pub class: OpenProblemClass,
    pub complete: bool,
    pub kappa: usize,
    pub s_size: usize,
}

/// Compares the vertex connectivity with `|S(G)|`.
pub fn open_problem_classify(t: &ThetaGraph) -> Result<OpenProblemResult> {
    let complete = is_complete(t)?;
    let kappa = vertex_connectivity(t)?.kappa;
    let s_size = t.prime_order_set().len();
    let class = OpenProblemClass::from_counts(complete, kappa, s_size);
    if class == OpenProblemClass::KappaBelowS {
        if matches!(t.group().family(), crate::groups::GroupFamily::Cyclic { .. }) {
            return Err(ThetaError::consistency(
                "connectivity",
                format!("kappa {kappa} < |S| = {s_size} on a cyclic group"),
            ));
        }
        log::warn!("finding: kappa {kappa} < |S(G)| = {s_size} for {}", t.group().family());
    }
    Ok(OpenProblemResult {
        class,
        complete,
        kappa,
        s_size,
    })
}
