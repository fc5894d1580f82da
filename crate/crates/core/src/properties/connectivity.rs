//! Vertex connectivity through Menger's theorem: unit-capacity max-flow on the
//! vertex-split digraph, minimized over the pairs prescribed by the
//! Esfahanian–Hakimi reduction.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::{components_after_removal, is_connected};
use crate::error::{Result, ThetaError};
use crate::graph::ThetaGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConnectivityMethod {
    CompleteRule,
    MaxFlow,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectivityResult {
    pub kappa: usize,
    /// Minimum separating set; absent for complete graphs.
    pub witness_cut: Option<Vec<usize>>,
    pub method: ConnectivityMethod,
}

const INF: u32 = u32::MAX / 2;

/// Residual network over split vertices: `v_in = 2v`, `v_out = 2v + 1`.
struct SplitNetwork {
    head: Vec<usize>,
    to: Vec<usize>,
    cap: Vec<u32>,
    next: Vec<usize>,
}

impl SplitNetwork {
    const NONE: usize = usize::MAX;

    fn new(t: &ThetaGraph, s: usize, sink: usize) -> Self {
        let n = t.n_vertices();
        let mut net = SplitNetwork {
            head: vec![Self::NONE; 2 * n],
            to: Vec::new(),
            cap: Vec::new(),
            next: Vec::new(),
        };
        for v in 0..n {
            let c = if v == s || v == sink { INF } else { 1 };
            net.arc(2 * v, 2 * v + 1, c);
        }
        for (u, w) in t.edges() {
            net.arc(2 * u + 1, 2 * w, INF);
            net.arc(2 * w + 1, 2 * u, INF);
        }
        net
    }

    fn arc(&mut self, a: usize, b: usize, c: u32) {
        for (x, y, cc) in [(a, b, c), (b, a, 0)] {
            self.to.push(y);
            self.cap.push(cc);
            self.next.push(self.head[x]);
            self.head[x] = self.to.len() - 1;
        }
    }

    /// Augments along BFS paths until `limit` units flow or none remain.
    fn max_flow(&mut self, source: usize, sink: usize, limit: usize) -> usize {
        let mut flow = 0;
        let nodes = self.head.len();
        while flow < limit {
            let mut via = vec![Self::NONE; nodes];
            let mut seen = vec![false; nodes];
            seen[source] = true;
            let mut queue = VecDeque::from([source]);
            'bfs: while let Some(x) = queue.pop_front() {
                let mut e = self.head[x];
                while e != Self::NONE {
                    let y = self.to[e];
                    if self.cap[e] > 0 && !seen[y] {
                        seen[y] = true;
                        via[y] = e;
                        if y == sink {
                            break 'bfs;
                        }
                        queue.push_back(y);
                    }
                    e = self.next[e];
                }
            }
            if !seen[sink] {
                break;
            }
            let mut y = sink;
            while y != source {
                let e = via[y];
                self.cap[e] -= 1;
                self.cap[e ^ 1] += 1;
                y = self.to[e ^ 1];
            }
            flow += 1;
        }
        flow
    }

    fn residual_reachable(&self, source: usize) -> Vec<bool> {
        let mut seen = vec![false; self.head.len()];
        seen[source] = true;
        let mut stack = vec![source];
        while let Some(x) = stack.pop() {
            let mut e = self.head[x];
            while e != Self::NONE {
                let y = self.to[e];
                if self.cap[e] > 0 && !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
                e = self.next[e];
            }
        }
        seen
    }
}

/// Local connectivity of non-adjacent `s`, `t`, capped at `limit`, with the
/// separating set from the residual min cut when the flow stays below the cap.
fn local_cut(g: &ThetaGraph, s: usize, t: usize, limit: usize) -> (usize, Option<Vec<usize>>) {
    let mut net = SplitNetwork::new(g, s, t);
    let source = 2 * s + 1;
    let sink = 2 * t;
    let flow = net.max_flow(source, sink, limit);
    if flow >= limit {
        return (flow, None);
    }
    let reach = net.residual_reachable(source);
    let cut = (0..g.n_vertices())
        .filter(|&v| reach[2 * v] && !reach[2 * v + 1])
        .collect();
    (flow, Some(cut))
}

/// Maximum number of internally vertex-disjoint `s`-`t` paths for
/// non-adjacent `s != t`.
pub fn local_connectivity(g: &ThetaGraph, s: usize, t: usize) -> Result<usize> {
    if s == t || g.adjacent(s, t)? {
        return Err(ThetaError::Domain(format!(
            "local connectivity needs distinct non-adjacent vertices, got {s} and {t}"
        )));
    }
    Ok(local_cut(g, s, t, usize::MAX).0)
}

pub fn vertex_connectivity(g: &ThetaGraph) -> Result<ConnectivityResult> {
    let n = g.n_vertices();
    if g.edge_count() == n * n.saturating_sub(1) / 2 {
        return Ok(ConnectivityResult {
            kappa: n.saturating_sub(1),
            witness_cut: None,
            method: ConnectivityMethod::CompleteRule,
        });
    }
    if !is_connected(g) {
        return Ok(ConnectivityResult {
            kappa: 0,
            witness_cut: Some(Vec::new()),
            method: ConnectivityMethod::MaxFlow,
        });
    }

    let deg = g.degrees();
    let v = (0..n).min_by_key(|&x| (deg[x], x)).unwrap();
    let mut pairs: Vec<(usize, usize)> = (0..n).filter(|&u| u != v && !g.has_edge(v, u)).map(|u| (v, u)).collect();
    let nbrs: Vec<usize> = g.neighbors(v).collect();
    for (i, &x) in nbrs.iter().enumerate() {
        for &y in &nbrs[i + 1..] {
            if !g.has_edge(x, y) {
                pairs.push((x, y));
            }
        }
    }

    let mut best = g.min_degree() + 1;
    let mut best_cut: Option<Vec<usize>> = None;
    for (s, t) in pairs {
        let (k, cut) = local_cut(g, s, t, best);
        if k < best {
            best = k;
            best_cut = cut;
        }
    }
    let cut = best_cut.ok_or_else(|| {
        ThetaError::consistency("connectivity", "no separating pair found on a non-complete graph")
    })?;
    if best > g.min_degree() {
        return Err(ThetaError::consistency(
            "connectivity",
            format!("kappa {best} exceeds minimum degree {}", g.min_degree()),
        ));
    }
    if cut.len() != best || components_after_removal(g, &cut) < 2 {
        return Err(ThetaError::consistency(
            "connectivity",
            format!("witness cut {cut:?} does not separate the graph"),
        ));
    }
    Ok(ConnectivityResult {
        kappa: best,
        witness_cut: Some(cut),
        method: ConnectivityMethod::MaxFlow,
    })
}
