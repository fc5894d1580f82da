//! The prime coprime graph of a group: vertices are group elements, and two
//! distinct elements are adjacent when the gcd of their orders is 1 or prime.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Result, ThetaError};
use crate::groups::{GroupFamily, GroupSpec, Warning};
use crate::numtheory::{gcd, is_one_or_prime};

/// Fixed-size bit set over vertex indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BitSet {
    words: Vec<u64>,
    len: usize,
}

impl BitSet {
    pub fn new(len: usize) -> Self {
        BitSet {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    pub fn full(len: usize) -> Self {
        let mut s = BitSet::new(len);
        for i in 0..len {
            s.insert(i);
        }
        s
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    #[inline]
    pub fn toggle(&mut self, i: usize) {
        self.words[i / 64] ^= 1 << (i % 64);
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Size of the intersection with `other`.
    pub fn intersection_count(&self, other: &BitSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + b)
            })
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeOrderSet {
    pub indices: Vec<usize>,
    pub includes_identity: bool,
}

impl PrimeOrderSet {
    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }
}

#[derive(Debug, Clone)]
pub struct ThetaGraph {
    group: GroupSpec,
    rows: Vec<BitSet>,
    degrees: Vec<usize>,
    warnings: Vec<Warning>,
}

/// Adjacency predicate on two element orders.
pub fn orders_adjacent(a: u64, b: u64) -> bool {
    is_one_or_prime(gcd(a, b))
}

impl ThetaGraph {
    pub fn build(group: &GroupSpec) -> ThetaGraph {
        let orders: Vec<u64> = group.orders().collect();
        let n = orders.len();
        let mut rows = vec![BitSet::new(n); n];
        for i in 0..n {
            for j in (i + 1)..n {
                if orders_adjacent(orders[i], orders[j]) {
                    rows[i].insert(j);
                    rows[j].insert(i);
                }
            }
        }
        let mut warnings = Vec::new();
        if n <= 2 {
            let w = Warning::new(
                "small_group",
                format!("group has {n} element(s); the graph is defined for |G| > 2"),
            );
            log::info!("{}", w.message);
            warnings.push(w);
        }
        ThetaGraph::from_rows(group.clone(), rows, warnings)
    }

    fn from_rows(group: GroupSpec, rows: Vec<BitSet>, warnings: Vec<Warning>) -> ThetaGraph {
        let degrees = rows.iter().map(BitSet::count).collect();
        ThetaGraph {
            group,
            rows,
            degrees,
            warnings,
        }
    }

    /// Returns a copy with the edge `{i, j}` flipped. The result no longer
    /// satisfies the adjacency predicate; it exists to exercise the
    /// consistency checks with a known-bad graph.
    pub fn with_toggled_edge(&self, i: usize, j: usize) -> Result<ThetaGraph> {
        self.check_index(i)?;
        self.check_index(j)?;
        if i == j {
            return Err(ThetaError::Domain("cannot toggle a self-loop".into()));
        }
        let mut rows = self.rows.clone();
        rows[i].toggle(j);
        rows[j].toggle(i);
        Ok(ThetaGraph::from_rows(self.group.clone(), rows, self.warnings.clone()))
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    pub fn warnings(&self) -> &[Warning] {
        &self.warnings
    }

    pub fn n_vertices(&self) -> usize {
        self.rows.len()
    }

    pub fn order_of(&self, v: usize) -> u64 {
        self.group.elements()[v].order
    }

    pub fn identity(&self) -> usize {
        self.group.identity_index()
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i >= self.n_vertices() {
            return Err(ThetaError::Domain(format!(
                "vertex {i} out of range (graph has {} vertices)",
                self.n_vertices()
            )));
        }
        Ok(())
    }

    pub fn adjacent(&self, i: usize, j: usize) -> Result<bool> {
        self.check_index(i)?;
        self.check_index(j)?;
        Ok(self.has_edge(i, j))
    }

    /// Unchecked adjacency for algorithm inner loops.
    #[inline]
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.rows[i].contains(j)
    }

    pub fn row(&self, i: usize) -> &BitSet {
        &self.rows[i]
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.rows[i].iter()
    }

    pub fn degree(&self, i: usize) -> Result<usize> {
        self.check_index(i)?;
        Ok(self.degrees[i])
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn min_degree(&self) -> usize {
        self.degrees.iter().copied().min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.degrees.iter().copied().max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.degrees.iter().sum::<usize>() / 2
    }

    /// Edges `(i, j)` with `i < j`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n_vertices()).flat_map(move |i| self.rows[i].iter().filter(move |&j| j > i).map(move |j| (i, j)))
    }

    /// `S(G)`: the identity together with every element of prime order.
    pub fn prime_order_set(&self) -> PrimeOrderSet {
        let indices = (0..self.n_vertices())
            .filter(|&v| is_one_or_prime(self.order_of(v)))
            .collect();
        PrimeOrderSet {
            indices,
            includes_identity: true,
        }
    }

    pub fn export_dot(&self) -> String {
        let mut out = String::new();
        writeln!(out, "graph {{").unwrap();
        for (i, e) in self.group.elements().iter().enumerate() {
            writeln!(
                out,
                "  {i} [label=\"{}\", order={}];",
                escape_dot(&e.label),
                e.order
            )
            .unwrap();
        }
        for (i, j) in self.edges() {
            writeln!(out, "  {i} -- {j};").unwrap();
        }
        out.push_str("}\n");
        out
    }

    pub fn to_document(&self) -> GraphDocument {
        GraphDocument {
            group: GroupDescriptor::of(&self.group),
            labels: self.group.labels().map(str::to_string).collect(),
            orders: self.group.orders().collect(),
            identity_index: self.identity(),
            vertex_count: self.n_vertices(),
            edge_count: self.edge_count(),
            edges: self.edges().map(|(i, j)| [i, j]).collect(),
            degrees: self.degrees.clone(),
            warnings: self.warnings.clone(),
        }
    }

    pub fn export_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_document()).expect("graph document serializes")
    }

    /// Rebuilds a graph from an exported document, keeping the stored edge
    /// list as-is (no re-derivation from orders).
    pub fn from_document(doc: &GraphDocument) -> Result<ThetaGraph> {
        let group = GroupSpec::from_orders(doc.labels.clone(), doc.orders.clone())?;
        let n = group.order();
        let mut rows = vec![BitSet::new(n); n];
        for &[i, j] in &doc.edges {
            if i >= n || j >= n || i == j {
                return Err(ThetaError::Validation(format!("bad edge [{i}, {j}]")));
            }
            rows[i].insert(j);
            rows[j].insert(i);
        }
        let g = ThetaGraph::from_rows(group, rows, doc.warnings.clone());
        if g.edge_count() != doc.edge_count {
            return Err(ThetaError::Validation(format!(
                "edge_count {} does not match {} listed edges",
                doc.edge_count,
                g.edge_count()
            )));
        }
        Ok(g)
    }

    pub fn from_json(text: &str) -> Result<ThetaGraph> {
        let doc: GraphDocument = serde_json::from_str(text)?;
        ThetaGraph::from_document(&doc)
    }
}

fn escape_dot(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Group identification shared by graph exports, reports and search records.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupDescriptor {
    pub family: String,
    pub params: String,
    pub name: String,
    pub size: usize,
    pub spec: GroupFamily,
}

impl GroupDescriptor {
    pub fn of(group: &GroupSpec) -> Self {
        GroupDescriptor {
            family: group.family().tag().to_string(),
            params: group.family().params(),
            name: group.family().to_string(),
            size: group.order(),
            spec: group.family().clone(),
        }
    }
}

/// JSON export of a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub group: GroupDescriptor,
    pub labels: Vec<String>,
    pub orders: Vec<u64>,
    pub identity_index: usize,
    pub vertex_count: usize,
    pub edge_count: usize,
    pub edges: Vec<[usize; 2]>,
    pub degrees: Vec<usize>,
    #[serde(default)]
    pub warnings: Vec<Warning>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(n: u64) -> ThetaGraph {
        ThetaGraph::build(&GroupSpec::cyclic(n).unwrap())
    }

    #[test]
    fn cyclic_six_is_k6_minus_one_edge() {
        let t = cyc(6);
        for i in 0..6 {
            for j in 0..6 {
                let expected = i != j && !((i, j) == (1, 5) || (i, j) == (5, 1));
                assert_eq!(t.adjacent(i, j).unwrap(), expected, "({i},{j})");
            }
        }
        assert_eq!(t.edge_count(), 14);
    }

    #[test]
    fn prime_cyclic_is_complete() {
        let t = cyc(7);
        assert_eq!(t.edge_count(), 21);
    }

    #[test]
    fn dihedral_reflections_see_all_rotations() {
        let t = ThetaGraph::build(&GroupSpec::dihedral(4).unwrap());
        for r in 0..4 {
            for s in 4..8 {
                assert!(t.has_edge(r, s));
            }
        }
    }

    #[test]
    fn adjacency_examples() {
        let t = cyc(12);
        assert_eq!((t.order_of(2), t.order_of(3)), (6, 4));
        assert!(t.adjacent(2, 3).unwrap());
        assert!(!t.adjacent(1, 5).unwrap());
        assert!(!t.adjacent(4, 4).unwrap());
        assert!(matches!(t.adjacent(0, 12), Err(ThetaError::Domain(_))));
        assert!(t.degree(99).is_err());
    }

    #[test]
    fn prime_order_sets() {
        assert_eq!(cyc(12).prime_order_set().indices, vec![0, 4, 6, 8]);
        for (p, q) in [(2, 3), (2, 5), (3, 5), (3, 7), (5, 7)] {
            assert_eq!(cyc(p * q).prime_order_set().len() as u64, p + q - 1);
        }
        for (p, m) in [(2, 3), (3, 2), (5, 2), (2, 5)] {
            assert_eq!(cyc(u64::pow(p, m)).prime_order_set().len() as u64, p);
        }
    }

    #[test]
    fn degrees() {
        for q in [3u64, 5, 7, 11] {
            let t = cyc(2 * q);
            assert_eq!(t.degree(1).unwrap() as u64, q + 1);
        }
        let t = cyc(8);
        assert_eq!(t.degree(0).unwrap(), 7);
        assert_eq!(t.degrees().iter().filter(|&&d| d == 7).count(), 2);
        assert_eq!(cyc(9).min_degree(), 3);
    }

    #[test]
    fn dot_export() {
        let dot = cyc(3).export_dot();
        assert!(dot.starts_with("graph {"));
        assert_eq!(dot.matches(" -- ").count(), 3);
        assert_eq!(dot.matches("[label=").count(), 3);
        let dot4 = cyc(4).export_dot();
        assert_eq!(dot4.matches(" -- ").count(), 5);
        assert!(!dot4.contains("1 -- 3;"));
    }

    #[test]
    fn json_export() {
        let t = cyc(6);
        let doc = t.to_document();
        assert_eq!(doc.edge_count, 14);
        let d6 = ThetaGraph::build(&GroupSpec::dihedral(6).unwrap());
        assert_eq!(d6.to_document().edge_count, 65);
        let back = ThetaGraph::from_json(&d6.export_json()).unwrap();
        assert_eq!(back.rows, d6.rows);
        assert_eq!(back.group().labels().collect::<Vec<_>>(), d6.group().labels().collect::<Vec<_>>());
    }

    #[test]
    fn tiny_groups_warn() {
        assert_eq!(cyc(1).warnings().len(), 1);
        assert_eq!(cyc(2).warnings()[0].code, "small_group");
        assert!(cyc(3).warnings().is_empty());
    }

    #[test]
    fn toggled_edge() {
        let t = cyc(5);
        let bad = t.with_toggled_edge(0, 4).unwrap();
        assert!(!bad.has_edge(0, 4) && !bad.has_edge(4, 0));
        assert_eq!(bad.edge_count(), 9);
        assert!(t.with_toggled_edge(2, 2).is_err());
    }

    #[test]
    fn bitset_ops() {
        let mut s = BitSet::new(130);
        s.insert(0);
        s.insert(64);
        s.insert(129);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 64, 129]);
        s.remove(64);
        assert_eq!(s.count(), 2);
        assert_eq!(BitSet::full(70).count(), 70);
    }
}
