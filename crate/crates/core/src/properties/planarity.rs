//! Left-right planarity test (Brandes' formulation of the de Fraysseix and
//! Rosenstiehl criterion). Decision only, no embedding is built.
//!
//! The graph is oriented by a DFS that records lowpoints and a nesting depth
//! per oriented edge. A second DFS, visiting outgoing edges by nesting depth,
//! maintains a stack of conflict pairs of return-edge intervals and fails as
//! soon as two intervals must lie on the same side.

use std::collections::HashSet;

use crate::graph::ThetaGraph;

type Edge = usize;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
struct Interval {
    low: Option<Edge>,
    high: Option<Edge>,
}

impl Interval {
    fn is_empty(&self) -> bool {
        self.low.is_none() && self.high.is_none()
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
struct ConflictPair {
    left: Interval,
    right: Interval,
}

impl ConflictPair {
    fn swap(&mut self) {
        std::mem::swap(&mut self.left, &mut self.right);
    }
}

struct LrState {
    adj: Vec<Vec<usize>>,
    height: Vec<Option<usize>>,
    parent_edge: Vec<Option<Edge>>,
    // oriented edges
    src: Vec<usize>,
    dst: Vec<usize>,
    lowpt: Vec<usize>,
    lowpt2: Vec<usize>,
    nesting_depth: Vec<usize>,
    out: Vec<Vec<Edge>>,
    // testing phase
    refs: Vec<Option<Edge>>,
    lowpt_edge: Vec<Option<Edge>>,
    stack_bottom: Vec<usize>,
    stack: Vec<ConflictPair>,
}

impl LrState {
    fn new(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        LrState {
            adj,
            height: vec![None; n],
            parent_edge: vec![None; n],
            src: Vec::new(),
            dst: Vec::new(),
            lowpt: Vec::new(),
            lowpt2: Vec::new(),
            nesting_depth: Vec::new(),
            out: vec![Vec::new(); n],
            refs: Vec::new(),
            lowpt_edge: Vec::new(),
            stack_bottom: Vec::new(),
            stack: Vec::new(),
        }
    }

    fn orient(&mut self, v: usize, oriented: &mut HashSet<(usize, usize)>) {
        let e = self.parent_edge[v];
        let hv = self.height[v].unwrap();
        for idx in 0..self.adj[v].len() {
            let w = self.adj[v][idx];
            if !oriented.insert((v.min(w), v.max(w))) {
                continue;
            }
            let vw = self.src.len();
            self.src.push(v);
            self.dst.push(w);
            self.lowpt.push(hv);
            self.lowpt2.push(hv);
            self.nesting_depth.push(0);
            self.out[v].push(vw);

            match self.height[w] {
                None => {
                    self.parent_edge[w] = Some(vw);
                    self.height[w] = Some(hv + 1);
                    self.orient(w, oriented);
                }
                Some(hw) => self.lowpt[vw] = hw,
            }

            self.nesting_depth[vw] = 2 * self.lowpt[vw] + usize::from(self.lowpt2[vw] < hv);

            if let Some(e) = e {
                let (lv, l2v) = (self.lowpt[vw], self.lowpt2[vw]);
                if lv < self.lowpt[e] {
                    self.lowpt2[e] = self.lowpt[e].min(l2v);
                    self.lowpt[e] = lv;
                } else if lv > self.lowpt[e] {
                    self.lowpt2[e] = self.lowpt2[e].min(lv);
                } else {
                    self.lowpt2[e] = self.lowpt2[e].min(l2v);
                }
            }
        }
    }

    fn conflicting(&self, iv: &Interval, b: Edge) -> bool {
        !iv.is_empty() && self.lowpt[iv.high.unwrap()] > self.lowpt[b]
    }

    fn lowest(&self, p: &ConflictPair) -> usize {
        if p.left.is_empty() {
            return self.lowpt[p.right.low.unwrap()];
        }
        if p.right.is_empty() {
            return self.lowpt[p.left.low.unwrap()];
        }
        self.lowpt[p.left.low.unwrap()].min(self.lowpt[p.right.low.unwrap()])
    }

    fn add_constraints(&mut self, ei: Edge, e: Edge) -> bool {
        let mut p = ConflictPair::default();
        // merge return edges of ei into p.right
        loop {
            let mut q = self.stack.pop().expect("conflict stack underflow");
            if !q.left.is_empty() {
                q.swap();
            }
            if !q.left.is_empty() {
                return false;
            }
            if self.lowpt[q.right.low.unwrap()] > self.lowpt[e] {
                if p.right.is_empty() {
                    p.right = q.right;
                } else {
                    self.refs[p.right.low.unwrap()] = q.right.high;
                }
                p.right.low = q.right.low;
            } else {
                self.refs[q.right.low.unwrap()] = self.lowpt_edge[e];
            }
            if self.stack.len() == self.stack_bottom[ei] {
                break;
            }
        }
        // merge conflicting return edges of earlier siblings into p.left
        while let Some(top) = self.stack.last() {
            if !(self.conflicting(&top.left, ei) || self.conflicting(&top.right, ei)) {
                break;
            }
            let mut q = self.stack.pop().unwrap();
            if self.conflicting(&q.right, ei) {
                q.swap();
            }
            if self.conflicting(&q.right, ei) {
                return false;
            }
            if let Some(low) = p.right.low {
                self.refs[low] = q.right.high;
            }
            if q.right.low.is_some() {
                p.right.low = q.right.low;
            }
            if p.left.is_empty() {
                p.left = q.left;
            } else {
                self.refs[p.left.low.unwrap()] = q.left.high;
            }
            p.left.low = q.left.low;
        }
        if !(p.left.is_empty() && p.right.is_empty()) {
            self.stack.push(p);
        }
        true
    }

    fn remove_back_edges(&mut self, e: Edge) {
        let u = self.src[e];
        let hu = self.height[u].unwrap();
        while let Some(top) = self.stack.last() {
            if self.lowest(top) != hu {
                break;
            }
            self.stack.pop();
        }
        if let Some(mut p) = self.stack.pop() {
            while let Some(h) = p.left.high {
                if self.dst[h] != u {
                    break;
                }
                p.left.high = self.refs[h];
            }
            if p.left.high.is_none() && p.left.low.is_some() {
                self.refs[p.left.low.unwrap()] = p.right.low;
                p.left.low = None;
            }
            while let Some(h) = p.right.high {
                if self.dst[h] != u {
                    break;
                }
                p.right.high = self.refs[h];
            }
            if p.right.high.is_none() && p.right.low.is_some() {
                self.refs[p.right.low.unwrap()] = p.left.low;
                p.right.low = None;
            }
            self.stack.push(p);
        }
        if self.lowpt[e] < hu {
            if let Some(top) = self.stack.last() {
                let (hl, hr) = (top.left.high, top.right.high);
                self.refs[e] = match (hl, hr) {
                    (Some(l), None) => Some(l),
                    (Some(l), Some(r)) if self.lowpt[l] > self.lowpt[r] => Some(l),
                    _ => hr,
                };
            }
        }
    }

    fn test(&mut self, v: usize) -> bool {
        let e = self.parent_edge[v];
        let hv = self.height[v].unwrap();
        let outgoing = self.out[v].clone();
        for (k, &ei) in outgoing.iter().enumerate() {
            let w = self.dst[ei];
            self.stack_bottom[ei] = self.stack.len();
            if self.parent_edge[w] == Some(ei) {
                if !self.test(w) {
                    return false;
                }
            } else {
                self.lowpt_edge[ei] = Some(ei);
                self.stack.push(ConflictPair {
                    left: Interval::default(),
                    right: Interval {
                        low: Some(ei),
                        high: Some(ei),
                    },
                });
            }
            if self.lowpt[ei] < hv {
                if k == 0 {
                    if let Some(e) = e {
                        self.lowpt_edge[e] = self.lowpt_edge[ei];
                    }
                } else if !self.add_constraints(ei, e.expect("non-root has a parent edge")) {
                    return false;
                }
            }
        }
        if let Some(e) = e {
            self.remove_back_edges(e);
        }
        true
    }
}

/// Planarity of a simple undirected graph given as an edge list.
pub fn is_planar_graph(n: usize, edges: &[(usize, usize)]) -> bool {
    let m = edges.len();
    if n > 2 && m > 3 * n - 6 {
        return false;
    }
    let mut st = LrState::new(n, edges);
    let mut oriented = HashSet::with_capacity(m);
    let mut roots = Vec::new();
    for v in 0..n {
        if st.height[v].is_none() {
            st.height[v] = Some(0);
            roots.push(v);
            st.orient(v, &mut oriented);
        }
    }
    for v in 0..n {
        let mut out = std::mem::take(&mut st.out[v]);
        out.sort_by_key(|&e| st.nesting_depth[e]);
        st.out[v] = out;
    }
    let me = st.src.len();
    st.refs = vec![None; me];
    st.lowpt_edge = vec![None; me];
    st.stack_bottom = vec![0; me];
    roots.into_iter().all(|r| {
        st.stack.clear();
        st.test(r)
    })
}

/// Exact planarity of a prime coprime graph. Graphs with more than
/// `3|V| - 6` edges are rejected before the full test.
pub fn is_planar(t: &ThetaGraph) -> bool {
    let edges: Vec<(usize, usize)> = t.edges().collect();
    is_planar_graph(t.n_vertices(), &edges)
}
