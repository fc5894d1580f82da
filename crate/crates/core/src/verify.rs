//! Theorem cross-checks: every structural and spectral statement about the
//! prime coprime graph is recomputed from scratch on a battery of groups and
//! compared with its closed-form prediction.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Result, ThetaError};
use crate::graph::{orders_adjacent, ThetaGraph};
use crate::groups::{family_members, GroupSpec, FAMILY_TAGS};
use crate::numtheory::{factorize, is_prime};
use crate::properties::{
    components_after_removal, diameter, domination_number, girth, is_complete, is_connected,
    is_eulerian, is_hamiltonian, is_planar, is_singleton_dominating, open_problem_classify,
    validate_cycle, vertex_connectivity, HamiltonMethod, HamiltonStatus, OpenProblemClass,
    DEFAULT_NODE_BUDGET,
};
use crate::spectra::{
    build_q, closed_form_quotient, closed_form_spectrum, eig_sym, is_equitable, quotient_matrix,
    spectra_equal, spectrum_contains, theorem_partition, NumberShape, SpectrumFamily,
    SpectrumResult, DEFAULT_COMPARE_TOL, DEFAULT_JACOBI_TOL,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Spectra,
    Connectivity,
    Eulerian,
    Completeness,
    Planarity,
    Hamiltonian,
    Structure,
    Equitable,
    All,
}

impl Suite {
    const EACH: [Suite; 8] = [
        Suite::Spectra,
        Suite::Connectivity,
        Suite::Eulerian,
        Suite::Completeness,
        Suite::Planarity,
        Suite::Hamiltonian,
        Suite::Structure,
        Suite::Equitable,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Spectra => "spectra",
            Suite::Connectivity => "connectivity",
            Suite::Eulerian => "eulerian",
            Suite::Completeness => "completeness",
            Suite::Planarity => "planarity",
            Suite::Hamiltonian => "hamiltonian",
            Suite::Structure => "structure",
            Suite::Equitable => "equitable",
            Suite::All => "all",
        }
    }
}

/// Deliberate damage applied to every graph the battery builds: the edge
/// `{i, j}` is flipped whenever both endpoints exist.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct VerifyOptions {
    pub toggle_edge: Option<(usize, usize)>,
}

impl VerifyOptions {
    fn graph(&self, g: &GroupSpec) -> ThetaGraph {
        let t = ThetaGraph::build(g);
        match self.toggle_edge {
            Some((i, j)) if i != j && i.max(j) < t.n_vertices() => {
                t.with_toggled_edge(i, j).expect("indices checked")
            }
            _ => t,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckRow {
    pub suite: String,
    pub theorem: String,
    pub groups: Vec<String>,
    pub failures: Vec<String>,
}

impl CheckRow {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub rows: Vec<CheckRow>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(CheckRow::passed)
    }

    pub fn failing_theorems(&self) -> Vec<&str> {
        self.rows.iter().filter(|r| !r.passed()).map(|r| r.theorem.as_str()).collect()
    }

    pub fn row(&self, theorem: &str) -> Option<&CheckRow> {
        self.rows.iter().find(|r| r.theorem == theorem)
    }

    /// Turns the first failure into a consistency error naming its theorem.
    pub fn into_result(self) -> Result<VerifyReport> {
        match self.rows.iter().find(|r| !r.passed()) {
            Some(r) => Err(ThetaError::consistency(&r.theorem, r.failures[0].clone())),
            None => Ok(self),
        }
    }
}

fn summarize_groups(groups: &[String]) -> String {
    const SHOWN: usize = 6;
    if groups.len() <= SHOWN {
        groups.join(", ")
    } else {
        format!(
            "{}, ... {} ({} groups)",
            groups[..SHOWN - 1].join(", "),
            groups[groups.len() - 1],
            groups.len()
        )
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.rows.iter().map(|r| r.theorem.len()).max().unwrap_or(7).max(7);
        writeln!(f, "{:<width$}  {:<6}  groups tested", "theorem", "result")?;
        for r in &self.rows {
            let result = if r.passed() { "PASS" } else { "FAIL" };
            writeln!(f, "{:<width$}  {:<6}  {}", r.theorem, result, summarize_groups(&r.groups))?;
            for failure in &r.failures {
                writeln!(f, "{:<width$}          {failure}", "")?;
            }
        }
        let failed = self.rows.iter().filter(|r| !r.passed()).count();
        write!(f, "{} checks, {} passed, {} failed", self.rows.len(), self.rows.len() - failed, failed)
    }
}

type Outcome = std::result::Result<(), String>;

/// Runs `case` on every item in parallel; failures are kept in item order.
fn check<T: Sync>(
    suite: Suite,
    theorem: &str,
    items: &[T],
    name: impl Fn(&T) -> String + Sync,
    case: impl Fn(&T) -> Outcome + Sync,
) -> CheckRow {
    let results: Vec<(String, Outcome)> = items.par_iter().map(|x| (name(x), case(x))).collect();
    CheckRow {
        suite: suite.name().to_string(),
        theorem: theorem.to_string(),
        groups: results.iter().map(|(n, _)| n.clone()).collect(),
        failures: results
            .into_iter()
            .filter_map(|(n, r)| r.err().map(|e| format!("{n}: {e}")))
            .collect(),
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn render(s: &SpectrumResult) -> String {
    let parts: Vec<String> = s
        .entries
        .iter()
        .map(|e| format!("{:.9}:{}", e.value.value(), e.multiplicity))
        .collect();
    format!("{{{}}}", parts.join(", "))
}

fn family_group(family: SpectrumFamily, n: u64) -> GroupSpec {
    match family {
        SpectrumFamily::Cyclic => GroupSpec::cyclic(n),
        SpectrumFamily::Dihedral => GroupSpec::dihedral(n),
    }
    .expect("n >= 1")
}

fn family_name(family: SpectrumFamily, n: u64) -> String {
    match family {
        SpectrumFamily::Cyclic => format!("Z{n}"),
        SpectrumFamily::Dihedral => format!("D{n}"),
    }
}

/// Parameter sets of the spectral battery.
pub const CYCLIC_PQ: [u64; 7] = [6, 10, 14, 15, 21, 33, 35];
pub const CYCLIC_PRIME_POWER: [u64; 8] = [4, 8, 16, 32, 9, 27, 25, 49];
pub const CYCLIC_PRIME: [u64; 6] = [2, 3, 5, 7, 11, 13];
pub const DIHEDRAL_PQ: [u64; 4] = [6, 10, 15, 21];
pub const DIHEDRAL_PRIME_POWER: [u64; 5] = [4, 8, 9, 27, 25];
pub const DIHEDRAL_PRIME: [u64; 4] = [2, 3, 5, 7];
pub const HAMILTONIAN_PQ: [u64; 4] = [6, 10, 14, 22];
pub const NON_HAMILTONIAN_PQ: [u64; 4] = [15, 21, 33, 35];

/// Closed form against the Jacobi spectrum: sorted values within the
/// comparison tolerance and identical multiplicity patterns.
pub fn spectrum_case(family: SpectrumFamily, n: u64, opts: &VerifyOptions) -> Outcome {
    let t = opts.graph(&family_group(family, n));
    let exact = closed_form_spectrum(family, n).map_err(|e| e.to_string())?;
    let numeric = eig_sym(&build_q(&t), DEFAULT_JACOBI_TOL).map_err(|e| e.to_string())?;
    let mult = |s: &SpectrumResult| s.entries.iter().map(|e| e.multiplicity).collect::<Vec<_>>();
    ensure(
        spectra_equal(&exact, &numeric, DEFAULT_COMPARE_TOL) && mult(&exact) == mult(&numeric),
        || format!("closed form {} but eigensolver gives {}", render(&exact), render(&numeric)),
    )
}

fn trace_case(t: &ThetaGraph) -> Outcome {
    let q = build_q(t);
    let s = eig_sym(&q, DEFAULT_JACOBI_TOL).map_err(|e| e.to_string())?;
    let trace = q.trace();
    ensure(trace == 2.0 * t.edge_count() as f64, || {
        format!("trace {trace} but 2|E| = {}", 2 * t.edge_count())
    })?;
    ensure((s.sum() - trace).abs() <= 1e-8 * trace.max(1.0), || {
        format!("eigenvalue sum {} but trace {trace}", s.sum())
    })?;
    let min = s.min_value().unwrap_or(0.0);
    ensure(min >= -1e-9, || format!("negative eigenvalue {min}"))
}

/// The rotation block of `Q(Θ(D_n))` equals `Q(Θ(Z_n)) + nI`.
pub fn block_identity_case(n: u64, opts: &VerifyOptions) -> Outcome {
    let qd = build_q(&opts.graph(&GroupSpec::dihedral(n).expect("n >= 1")));
    let qz = build_q(&opts.graph(&GroupSpec::cyclic(n).expect("n >= 1")));
    let n_ = n as usize;
    for i in 0..n_ {
        for j in 0..n_ {
            let want = qz.get(i, j) + if i == j { n as f64 } else { 0.0 };
            if qd.get(i, j) != want {
                return Err(format!("entry ({i}, {j}) is {} but expected {want}", qd.get(i, j)));
            }
        }
    }
    Ok(())
}

fn spectra_rows(opts: &VerifyOptions) -> Vec<CheckRow> {
    use SpectrumFamily::{Cyclic, Dihedral};
    let s = Suite::Spectra;
    let batteries: [(&str, SpectrumFamily, &[u64]); 6] = [
        ("spectrum_cyclic_prime", Cyclic, &CYCLIC_PRIME),
        ("spectrum_cyclic_pq", Cyclic, &CYCLIC_PQ),
        ("spectrum_cyclic_prime_power", Cyclic, &CYCLIC_PRIME_POWER),
        ("spectrum_dihedral_prime", Dihedral, &DIHEDRAL_PRIME),
        ("spectrum_dihedral_pq", Dihedral, &DIHEDRAL_PQ),
        ("spectrum_dihedral_prime_power", Dihedral, &DIHEDRAL_PRIME_POWER),
    ];
    let mut rows: Vec<CheckRow> = batteries
        .iter()
        .map(|&(theorem, family, ns)| {
            check(s, theorem, ns, |&n| family_name(family, n), |&n| spectrum_case(family, n, opts))
        })
        .collect();
    let all: Vec<(SpectrumFamily, u64)> = batteries
        .iter()
        .flat_map(|&(_, family, ns)| ns.iter().map(move |&n| (family, n)))
        .collect();
    rows.push(check(
        s,
        "spectrum_trace_and_sign",
        &all,
        |&(f, n)| family_name(f, n),
        |&(f, n)| trace_case(&opts.graph(&family_group(f, n))),
    ));
    let ns: Vec<u64> = (1..=30).collect();
    rows.push(check(
        s,
        "dihedral_rotation_block",
        &ns,
        |&n| format!("D{n}"),
        |&n| block_identity_case(n, opts),
    ));
    rows
}

/// `|S(Z_n)| = 1 + Σ_{p | n} (p - 1)`.
pub fn cyclic_s_size(n: u64) -> usize {
    match factorize(n) {
        Ok(f) => 1 + f.factors().iter().map(|&(p, _)| (p - 1) as usize).sum::<usize>(),
        Err(_) => 1,
    }
}

fn kappa_of(t: &ThetaGraph) -> std::result::Result<usize, String> {
    vertex_connectivity(t).map(|c| c.kappa).map_err(|e| e.to_string())
}

fn connectivity_rows(opts: &VerifyOptions) -> Vec<CheckRow> {
    let s = Suite::Connectivity;
    let primes: Vec<u64> = (2..=31).filter(|&n| is_prime(n)).collect();
    let composites: Vec<u64> = (4..=60).filter(|&n| !is_prime(n)).collect();
    let zname = |&n: &u64| format!("Z{n}");
    let cyc = |n: u64| opts.graph(&GroupSpec::cyclic(n).expect("n >= 1"));
    let mut rows = vec![
        check(s, "connectivity_cyclic_prime", &primes, zname, |&n| {
            let k = kappa_of(&cyc(n))?;
            ensure(k as u64 == n - 1, || format!("kappa {k}, expected {}", n - 1))
        }),
        check(s, "connectivity_cyclic_composite", &composites, zname, |&n| {
            let t = cyc(n);
            let k = kappa_of(&t)?;
            let want = cyclic_s_size(n);
            let s_size = t.prime_order_set().len();
            ensure(s_size == want, || format!("|S| = {s_size} but the divisor count gives {want}"))?;
            ensure(k == want, || format!("kappa {k}, expected |S| = {want}"))
        }),
    ];
    let shaped = |pick: fn(NumberShape) -> Option<u64>| -> Vec<(u64, u64)> {
        composites
            .iter()
            .filter_map(|&n| NumberShape::of(n).ok().and_then(pick).map(|want| (n, want)))
            .collect()
    };
    let pq = shaped(|s| match s {
        NumberShape::TwoPrimes(p, q) => Some(p + q - 1),
        _ => None,
    });
    let pm = shaped(|s| match s {
        NumberShape::PrimePower(p, _) => Some(p),
        _ => None,
    });
    for (theorem, items) in [("connectivity_pq", pq), ("connectivity_prime_power", pm)] {
        rows.push(check(s, theorem, &items, |&(n, _)| format!("Z{n}"), |&(n, want)| {
            let k = kappa_of(&cyc(n))?;
            ensure(k as u64 == want, || format!("kappa {k}, expected {want}"))
        }));
    }
    rows.push(check(s, "dicyclic3_counterexample", &[3u64], |n| format!("Dic{n}"), |&n| {
        let t = opts.graph(&GroupSpec::dicyclic(n).expect("n >= 2"));
        let r = open_problem_classify(&t).map_err(|e| e.to_string())?;
        ensure(
            r.kappa == 6 && r.s_size == 4 && r.class == OpenProblemClass::KappaExceedsS,
            || format!("kappa {}, |S| {}, class {}", r.kappa, r.s_size, r.class.as_str()),
        )
    }));
    rows
}

/// Every group of the built-in families with at most `max_order` elements.
pub fn catalog(max_order: usize) -> Vec<GroupSpec> {
    FAMILY_TAGS
        .iter()
        .flat_map(|tag| family_members(tag, 1, max_order).expect("built-in family"))
        .collect()
}

fn gname(g: &GroupSpec) -> String {
    g.family().to_string()
}

fn eulerian_predicted(g: &GroupSpec) -> bool {
    g.order() % 2 == 1
        && g.elements()
            .iter()
            .enumerate()
            .all(|(i, e)| i == g.identity_index() || is_prime(e.order))
}

fn eulerian_rows(opts: &VerifyOptions) -> Vec<CheckRow> {
    let s = Suite::Eulerian;
    let groups = catalog(200);
    let mut rows = vec![check(s, "eulerian_iff", &groups, gname, |g| {
        let got = is_eulerian(&opts.graph(g)).map_err(|e| e.to_string())?;
        let want = eulerian_predicted(g);
        ensure(got == want, || format!("eulerian {got}, theorem predicts {want}"))
    })];
    let anchors = vec![
        (GroupSpec::cyclic(5).unwrap(), true),
        (GroupSpec::elementary_abelian(3, 2).unwrap(), true),
        (GroupSpec::heisenberg(3).unwrap(), true),
        (GroupSpec::cyclic(9).unwrap(), false),
    ];
    let dihedral: Vec<(GroupSpec, bool)> = family_members("dihedral", 1, 200)
        .expect("built-in family")
        .into_iter()
        .map(|g| (g, false))
        .collect();
    for (theorem, items) in [("eulerian_anchors", anchors), ("eulerian_dihedral_never", dihedral)] {
        rows.push(check(s, theorem, &items, |(g, _)| gname(g), |(g, want)| {
            let got = is_eulerian(&opts.graph(g)).map_err(|e| e.to_string())?;
            ensure(got == *want, || format!("eulerian {got}, expected {want}"))
        }));
    }
    rows
}

fn completeness_rows(opts: &VerifyOptions) -> Vec<CheckRow> {
    let s = Suite::Completeness;
    let complete_iff_prime = |g: &GroupSpec, n: u64| -> Outcome {
        let got = is_complete(&opts.graph(g)).map_err(|e| e.to_string())?;
        ensure(got == is_prime(n), || format!("complete {got} for n = {n}"))
    };
    let cyclic: Vec<u64> = (2..=100).collect();
    let dihedral: Vec<u64> = (2..=50).collect();
    let mut elementary: Vec<GroupSpec> = family_members("elementary_abelian", 1, 256).expect("built-in family");
    elementary.extend([2u64, 3, 5, 7].map(|p| GroupSpec::elementary_abelian(p, 1).unwrap()));
    elementary.push(GroupSpec::heisenberg(3).unwrap());
    vec![
        check(s, "complete_cyclic_iff_prime", &cyclic, |n| format!("Z{n}"), |&n| {
            complete_iff_prime(&GroupSpec::cyclic(n).unwrap(), n)
        }),
        check(s, "complete_dihedral_iff_prime", &dihedral, |n| format!("D{n}"), |&n| {
            complete_iff_prime(&GroupSpec::dihedral(n).unwrap(), n)
        }),
        check(s, "complete_prime_exponent", &elementary, gname, |g| {
            let got = is_complete(&opts.graph(g)).map_err(|e| e.to_string())?;
            ensure(got, || "graph is not complete".to_string())
        }),
    ]
}

fn planarity_rows(opts: &VerifyOptions) -> Vec<CheckRow> {
    let ns: Vec<u64> = (1..=64).collect();
    vec![check(Suite::Planarity, "planar_cyclic_iff", &ns, |n| format!("Z{n}"), |&n| {
        let t = opts.graph(&GroupSpec::cyclic(n).unwrap());
        let got = is_planar(&t);
        if n <= 2 {
            ensure(got, || "degenerate graph reported non-planar".into())?;
            return ensure(t.warnings().iter().any(|w| w.code == "small_group"), || {
                "degenerate group carries no warning".into()
            });
        }
        let want = n == 3 || n.is_power_of_two();
        ensure(got == want, || format!("planar {got}, theorem predicts {want}"))
    })]
}

fn hamiltonian_rows(opts: &VerifyOptions) -> Vec<CheckRow> {
    let s = Suite::Hamiltonian;
    let zname = |n: &u64| format!("Z{n}");
    vec![
        check(s, "hamiltonian_pq_even", &HAMILTONIAN_PQ, zname, |&n| {
            let t = opts.graph(&GroupSpec::cyclic(n).unwrap());
            let v = is_hamiltonian(&t, DEFAULT_NODE_BUDGET);
            ensure(v.status == HamiltonStatus::Yes, || format!("status {:?}", v.status))?;
            let cycle = v.cycle.unwrap_or_default();
            ensure(validate_cycle(&t, &cycle), || format!("certificate {cycle:?} does not validate"))
        }),
        check(s, "hamiltonian_pq_odd_refuted", &NON_HAMILTONIAN_PQ, zname, |&n| {
            let t = opts.graph(&GroupSpec::cyclic(n).unwrap());
            let v = is_hamiltonian(&t, DEFAULT_NODE_BUDGET);
            ensure(
                v.status == HamiltonStatus::No && v.method == HamiltonMethod::ToughnessRefuted,
                || format!("status {:?} via {:?}", v.status, v.method),
            )?;
            let w = v.toughness_witness.unwrap_or_default();
            let c = components_after_removal(&t, &w);
            ensure(c > w.len() && Some(c) == v.witness_components, || {
                format!("witness of size {} leaves {c} components", w.len())
            })
        }),
    ]
}

/// Connected, diameter at most 2, a triangle when `|G| > 2`, and the
/// identity alone dominates.
pub fn structure_case(t: &ThetaGraph) -> Outcome {
    ensure(is_connected(t), || "graph is disconnected".into())?;
    let d = diameter(t).map_err(|e| e.to_string())?;
    ensure(d <= 2, || format!("diameter {d}"))?;
    if t.n_vertices() > 2 {
        let g = girth(t);
        ensure(g == Some(3), || format!("girth {g:?}"))?;
    }
    let dom = domination_number(t).map_err(|e| e.to_string())?;
    ensure(dom.number == 1 && dom.witness == [t.identity()], || {
        format!("domination {} with witness {:?}", dom.number, dom.witness)
    })
}

/// A few direct products on top of the family catalog.
pub fn product_catalog() -> Vec<GroupSpec> {
    let c = |n| GroupSpec::cyclic(n).unwrap();
    let pairs = [
        (c(2), c(2)),
        (c(2), c(4)),
        (c(3), c(3)),
        (c(4), c(6)),
        (c(6), c(6)),
        (GroupSpec::dihedral(3).unwrap(), c(2)),
        (GroupSpec::dicyclic(3).unwrap(), c(2)),
        (GroupSpec::dihedral(5).unwrap(), c(3)),
        (GroupSpec::heisenberg(3).unwrap(), c(3)),
        (GroupSpec::dicyclic(2).unwrap(), GroupSpec::dihedral(4).unwrap()),
    ];
    pairs.iter().map(|(g, h)| GroupSpec::direct_product(g, h)).collect()
}

fn structure_rows(opts: &VerifyOptions) -> Vec<CheckRow> {
    let mut groups = catalog(200);
    groups.extend(product_catalog());
    vec![check(Suite::Structure, "structure_universal", &groups, gname, |g| {
        let t = opts.graph(g);
        structure_case(&t)?;
        let e = t.identity();
        let dominating = is_singleton_dominating(&t, e).map_err(|err| err.to_string())?;
        ensure(dominating, || "identity does not dominate".into())
    })]
}

/// The theorem partition is equitable, its quotient is the closed-form
/// matrix, and the quotient spectrum sits inside the full spectrum.
pub fn equitable_case(family: SpectrumFamily, n: u64, opts: &VerifyOptions) -> Outcome {
    let t = opts.graph(&family_group(family, n));
    let blocks = theorem_partition(family, n).map_err(|e| e.to_string())?;
    let check = is_equitable(&t, &blocks).map_err(|e| e.to_string())?;
    ensure(check.is_equitable(), || format!("partition not equitable: {check:?}"))?;
    let ep = quotient_matrix(&t, &blocks).map_err(|e| e.to_string())?;
    let printed = closed_form_quotient(family, n).map_err(|e| e.to_string())?;
    ensure(ep.quotient == printed, || {
        format!("quotient {:?} but closed form {printed:?}", ep.quotient)
    })?;
    let sub = ep.spectrum().map_err(|e| e.to_string())?;
    let full = eig_sym(&build_q(&t), DEFAULT_JACOBI_TOL).map_err(|e| e.to_string())?;
    ensure(spectrum_contains(&sub, &full, DEFAULT_COMPARE_TOL), || {
        format!("quotient spectrum {} not inside {}", render(&sub), render(&full))
    })
}

fn equitable_rows(opts: &VerifyOptions) -> Vec<CheckRow> {
    use SpectrumFamily::{Cyclic, Dihedral};
    let items: Vec<(SpectrumFamily, u64)> = CYCLIC_PQ
        .iter()
        .chain(&CYCLIC_PRIME_POWER)
        .map(|&n| (Cyclic, n))
        .chain(DIHEDRAL_PQ.iter().chain(&DIHEDRAL_PRIME_POWER).map(|&n| (Dihedral, n)))
        .collect();
    vec![check(
        Suite::Equitable,
        "equitable_quotient",
        &items,
        |&(f, n)| family_name(f, n),
        |&(f, n)| equitable_case(f, n, opts),
    )]
}

pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> VerifyReport {
    let rows = match suite {
        Suite::All => Suite::EACH.iter().flat_map(|s| run_suite(*s, opts).rows).collect(),
        Suite::Spectra => spectra_rows(opts),
        Suite::Connectivity => connectivity_rows(opts),
        Suite::Eulerian => eulerian_rows(opts),
        Suite::Completeness => completeness_rows(opts),
        Suite::Planarity => planarity_rows(opts),
        Suite::Hamiltonian => hamiltonian_rows(opts),
        Suite::Structure => structure_rows(opts),
        Suite::Equitable => equitable_rows(opts),
    };
    VerifyReport { rows }
}

/// Checks that hold for the prime coprime graph of any group, run on a
/// single stored graph (for example one loaded from an export).
pub fn verify_graph(t: &ThetaGraph) -> VerifyReport {
    let suite = Suite::All.name();
    let name = vec![t.group().family().to_string()];
    let row = |theorem: &str, outcome: Outcome| CheckRow {
        suite: suite.to_string(),
        theorem: theorem.to_string(),
        groups: name.clone(),
        failures: outcome.err().map(|e| format!("{}: {e}", name[0])).into_iter().collect(),
    };
    let n = t.n_vertices();
    let adjacency = (|| {
        for i in 0..n {
            for j in (i + 1)..n {
                let want = orders_adjacent(t.order_of(i), t.order_of(j));
                if t.has_edge(i, j) != want {
                    return Err(format!(
                        "edge {{{i}, {j}}} is {} but orders {} and {} say {}",
                        if t.has_edge(i, j) { "present" } else { "absent" },
                        t.order_of(i),
                        t.order_of(j),
                        if want { "adjacent" } else { "not adjacent" }
                    ));
                }
            }
        }
        Ok(())
    })();
    let connectivity = (|| {
        let complete = is_complete(t).map_err(|e| e.to_string())?;
        let k = kappa_of(t)?;
        let s = t.prime_order_set().len();
        ensure(complete || k >= s, || format!("kappa {k} below |S| = {s}"))
    })();
    VerifyReport {
        rows: vec![
            row("adjacency_rule", adjacency),
            row("eulerian_iff", is_eulerian(t).map(drop).map_err(|e| e.to_string())),
            row("completeness_iff", is_complete(t).map(drop).map_err(|e| e.to_string())),
            row("structure_universal", structure_case(t)),
            row("connectivity_lower_bound", connectivity),
            row("spectrum_trace_and_sign", trace_case(t)),
        ],
    }
}
