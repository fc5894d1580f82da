//! Finite groups reduced to labeled element-order profiles.
//!
//! Adjacency in the prime coprime graph depends only on element orders, so a
//! group is stored as its element labels and their orders. Orders come from
//! closed formulas for the cyclic, dihedral and dicyclic families and from
//! explicit multiplication for the unitriangular matrix groups.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Result, ThetaError};
use crate::numtheory::{gcd, is_prime, lcm};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum GroupFamily {
    Cyclic { n: u64 },
    Dihedral { n: u64 },
    Dicyclic { n: u64 },
    ElementaryAbelian { p: u64, m: u32 },
    Heisenberg { p: u64 },
    Product { left: Box<GroupFamily>, right: Box<GroupFamily> },
    Custom,
}

impl GroupFamily {
    pub fn tag(&self) -> &'static str {
        match self {
            GroupFamily::Cyclic { .. } => "cyclic",
            GroupFamily::Dihedral { .. } => "dihedral",
            GroupFamily::Dicyclic { .. } => "dicyclic",
            GroupFamily::ElementaryAbelian { .. } => "elementary_abelian",
            GroupFamily::Heisenberg { .. } => "heisenberg",
            GroupFamily::Product { .. } => "product",
            GroupFamily::Custom => "custom",
        }
    }

    /// Parameter string used in search output, e.g. `n=6` or `p=3;m=2`.
    pub fn params(&self) -> String {
        match self {
            GroupFamily::Cyclic { n } | GroupFamily::Dihedral { n } | GroupFamily::Dicyclic { n } => {
                format!("n={n}")
            }
            GroupFamily::ElementaryAbelian { p, m } => format!("p={p};m={m}"),
            GroupFamily::Heisenberg { p } => format!("p={p}"),
            GroupFamily::Product { left, right } => format!("{left}x{right}"),
            GroupFamily::Custom => String::new(),
        }
    }
}

impl fmt::Display for GroupFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupFamily::Cyclic { n } => write!(f, "Z{n}"),
            GroupFamily::Dihedral { n } => write!(f, "D{n}"),
            GroupFamily::Dicyclic { n } => write!(f, "Dic{n}"),
            GroupFamily::ElementaryAbelian { p, m } => write!(f, "(Z{p})^{m}"),
            GroupFamily::Heisenberg { p } => write!(f, "UT(3,{p})"),
            GroupFamily::Product { left, right } => write!(f, "({left} x {right})"),
            GroupFamily::Custom => write!(f, "custom"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Element {
    pub label: String,
    pub order: u64,
}

/// Machine-readable warning attached to a group or a report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Warning {
    pub code: String,
    pub message: String,
}

impl Warning {
    pub fn new(code: &str, message: impl Into<String>) -> Self {
        Warning {
            code: code.to_string(),
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSpec {
    family: GroupFamily,
    elements: Vec<Element>,
    identity_index: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    warnings: Vec<Warning>,
}

/// Multiset of element orders, ascending by order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderProfile(pub BTreeMap<u64, usize>);

impl OrderProfile {
    pub fn count(&self, order: u64) -> usize {
        self.0.get(&order).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.0.values().sum()
    }

    pub fn from_pairs(pairs: &[(u64, usize)]) -> Self {
        OrderProfile(pairs.iter().copied().collect())
    }
}

impl fmt::Display for OrderProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (o, c)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{o}:{c}")?;
        }
        write!(f, "}}")
    }
}

fn power_label(base: &str, k: u64) -> String {
    match k {
        0 => String::new(),
        1 => base.to_string(),
        _ => format!("{base}^{k}"),
    }
}

impl GroupSpec {
    pub fn family(&self) -> &GroupFamily {
        &self.family
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn identity_index(&self) -> usize {
        self.identity_index
    }

    pub fn warnings(&self) -> &[Warning] {
        &self.warnings
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn orders(&self) -> impl Iterator<Item = u64> + '_ {
        self.elements.iter().map(|e| e.order)
    }

    pub fn labels(&self) -> impl Iterator<Item = &str> + '_ {
        self.elements.iter().map(|e| e.label.as_str())
    }

    pub fn order_profile(&self) -> OrderProfile {
        let mut map = BTreeMap::new();
        for e in &self.elements {
            *map.entry(e.order).or_insert(0) += 1;
        }
        OrderProfile(map)
    }

    /// Integers 0..n under addition; `k` has order `n / gcd(n, k)`.
    pub fn cyclic(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(ThetaError::Domain("cyclic group needs n >= 1".into()));
        }
        let elements = (0..n)
            .map(|k| Element {
                label: k.to_string(),
                order: n / gcd(n, k),
            })
            .collect();
        Ok(GroupSpec {
            family: GroupFamily::Cyclic { n },
            elements,
            identity_index: 0,
            warnings: Vec::new(),
        })
    }

    /// Symmetries of the n-gon: rotations `r^i` then reflections `sr^i`.
    pub fn dihedral(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(ThetaError::Domain("dihedral group needs n >= 1".into()));
        }
        let mut elements = Vec::with_capacity(2 * n as usize);
        for i in 0..n {
            let label = if i == 0 { "1".to_string() } else { power_label("r", i) };
            elements.push(Element {
                label,
                order: n / gcd(n, i),
            });
        }
        for i in 0..n {
            elements.push(Element {
                label: format!("s{}", power_label("r", i)),
                order: 2,
            });
        }
        Ok(GroupSpec {
            family: GroupFamily::Dihedral { n },
            elements,
            identity_index: 0,
            warnings: Vec::new(),
        })
    }

    /// `<a, x | a^{2n} = 1, x^2 = a^n, x^{-1} a x = a^{-1}>`, order 4n.
    ///
    /// `(x a^k)^2 = x^2 = a^n`, which has order 2, so every `x a^k` has order 4.
    pub fn dicyclic(n: u64) -> Result<Self> {
        if n < 2 {
            return Err(ThetaError::Domain(format!(
                "dicyclic group needs n >= 2, got {n}"
            )));
        }
        let m = 2 * n;
        let mut elements = Vec::with_capacity(2 * m as usize);
        for k in 0..m {
            let label = if k == 0 { "1".to_string() } else { power_label("a", k) };
            elements.push(Element {
                label,
                order: m / gcd(m, k),
            });
        }
        for k in 0..m {
            elements.push(Element {
                label: format!("x{}", power_label("a", k)),
                order: 4,
            });
        }
        Ok(GroupSpec {
            family: GroupFamily::Dicyclic { n },
            elements,
            identity_index: 0,
            warnings: Vec::new(),
        })
    }

    /// `(Z_p)^m`, vectors enumerated in lexicographic order.
    pub fn elementary_abelian(p: u64, m: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(ThetaError::Domain(format!("{p} is not prime")));
        }
        if m == 0 {
            return Err(ThetaError::Domain("elementary abelian group needs m >= 1".into()));
        }
        let size = p
            .checked_pow(m)
            .ok_or_else(|| ThetaError::Domain(format!("{p}^{m} overflows")))?;
        let elements = (0..size)
            .map(|mut idx| {
                let mut digits = vec![0u64; m as usize];
                for d in digits.iter_mut().rev() {
                    *d = idx % p;
                    idx /= p;
                }
                let label = format!(
                    "({})",
                    digits.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
                );
                let order = if digits.iter().all(|&d| d == 0) { 1 } else { p };
                Element { label, order }
            })
            .collect();
        Ok(GroupSpec {
            family: GroupFamily::ElementaryAbelian { p, m },
            elements,
            identity_index: 0,
            warnings: Vec::new(),
        })
    }

    /// Upper unitriangular 3x3 matrices over the field with `p` elements.
    ///
    /// The matrix with entries `a` (1,2), `b` (1,3), `c` (2,3) is stored as
    /// `(a, b, c)`; orders come from repeated multiplication.
    pub fn heisenberg(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(ThetaError::Domain(format!("{p} is not prime")));
        }
        let mul = |x: (u64, u64, u64), y: (u64, u64, u64)| {
            ((x.0 + y.0) % p, (x.1 + y.1 + x.0 * y.2) % p, (x.2 + y.2) % p)
        };
        let mut elements = Vec::with_capacity((p * p * p) as usize);
        for a in 0..p {
            for b in 0..p {
                for c in 0..p {
                    let g = (a, b, c);
                    let mut acc = g;
                    let mut order = 1;
                    while acc != (0, 0, 0) {
                        acc = mul(acc, g);
                        order += 1;
                    }
                    elements.push(Element {
                        label: format!("[{a},{b},{c}]"),
                        order,
                    });
                }
            }
        }
        Ok(GroupSpec {
            family: GroupFamily::Heisenberg { p },
            elements,
            identity_index: 0,
            warnings: Vec::new(),
        })
    }

    /// Pairs `(g, h)` in row-major order; `o(g, h) = lcm(o(g), o(h))`.
    pub fn direct_product(g: &GroupSpec, h: &GroupSpec) -> GroupSpec {
        let mut elements = Vec::with_capacity(g.order() * h.order());
        for x in &g.elements {
            for y in &h.elements {
                elements.push(Element {
                    label: format!("({},{})", x.label, y.label),
                    order: lcm(x.order, y.order),
                });
            }
        }
        let mut warnings = g.warnings.clone();
        warnings.extend(h.warnings.iter().cloned());
        GroupSpec {
            family: GroupFamily::Product {
                left: Box::new(g.family.clone()),
                right: Box::new(h.family.clone()),
            },
            elements,
            identity_index: g.identity_index * h.order() + h.identity_index,
            warnings,
        }
    }

    /// A user-supplied order list. Lagrange violations are recorded as
    /// warnings since an order list alone cannot prove it comes from a group.
    pub fn from_orders(labels: Vec<String>, orders: Vec<u64>) -> Result<Self> {
        if labels.is_empty() {
            return Err(ThetaError::Validation("empty element list".into()));
        }
        if labels.len() != orders.len() {
            return Err(ThetaError::Validation(format!(
                "{} labels but {} orders",
                labels.len(),
                orders.len()
            )));
        }
        if let Some(i) = orders.iter().position(|&o| o == 0) {
            return Err(ThetaError::Validation(format!(
                "element {:?} has order 0",
                labels[i]
            )));
        }
        let identities: Vec<usize> = (0..orders.len()).filter(|&i| orders[i] == 1).collect();
        let identity_index = match identities.as_slice() {
            [i] => *i,
            [] => return Err(ThetaError::Validation("no element of order 1".into())),
            many => {
                return Err(ThetaError::Validation(format!(
                    "{} elements of order 1 ({})",
                    many.len(),
                    many.iter()
                        .map(|&i| labels[i].as_str())
                        .collect::<Vec<_>>()
                        .join(", ")
                )))
            }
        };
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(ThetaError::Validation(format!("duplicate label {l:?}")));
            }
        }
        let size = labels.len() as u64;
        let mut warnings = Vec::new();
        for (l, &o) in labels.iter().zip(&orders) {
            if !size.is_multiple_of(o) {
                warnings.push(Warning::new(
                    "lagrange",
                    format!("order {o} of {l:?} does not divide group size {size}"),
                ));
            }
        }
        for w in &warnings {
            log::warn!("{}", w.message);
        }
        let elements = labels
            .into_iter()
            .zip(orders)
            .map(|(label, order)| Element { label, order })
            .collect();
        Ok(GroupSpec {
            family: GroupFamily::Custom,
            elements,
            identity_index,
            warnings,
        })
    }
}

/// Built-in family tags accepted by [`family_members`].
pub const FAMILY_TAGS: [&str; 5] = ["cyclic", "dihedral", "dicyclic", "elementary_abelian", "heisenberg"];

/// Members of a built-in family with `min_order <= |G| <= max_order`, by
/// ascending parameters. Elementary abelian groups start at rank 2 so that
/// they do not repeat the cyclic groups of prime order.
pub fn family_members(tag: &str, min_order: usize, max_order: usize) -> Result<Vec<GroupSpec>> {
    let (lo, hi) = (min_order as u64, max_order as u64);
    let in_range = |size: u64| size >= lo && size <= hi;
    let mut out = Vec::new();
    match tag {
        "cyclic" => {
            for n in 1..=hi {
                if in_range(n) {
                    out.push(GroupSpec::cyclic(n)?);
                }
            }
        }
        "dihedral" => {
            for n in 1..=hi / 2 {
                if in_range(2 * n) {
                    out.push(GroupSpec::dihedral(n)?);
                }
            }
        }
        "dicyclic" => {
            for n in 2..=hi / 4 {
                if in_range(4 * n) {
                    out.push(GroupSpec::dicyclic(n)?);
                }
            }
        }
        "elementary_abelian" => {
            for p in (2..=hi).filter(|&p| is_prime(p)) {
                let mut m = 2u32;
                while let Some(size) = p.checked_pow(m).filter(|&s| s <= hi) {
                    if in_range(size) {
                        out.push(GroupSpec::elementary_abelian(p, m)?);
                    }
                    m += 1;
                }
            }
        }
        "heisenberg" => {
            for p in (2..=hi).filter(|&p| is_prime(p)).take_while(|&p| p * p * p <= hi) {
                if in_range(p * p * p) {
                    out.push(GroupSpec::heisenberg(p)?);
                }
            }
        }
        other => {
            return Err(ThetaError::Validation(format!(
                "unknown family {other:?}; expected one of {}",
                FAMILY_TAGS.join(", ")
            )))
        }
    }
    Ok(out)
}
