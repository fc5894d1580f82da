//! End-to-end acceptance battery. Each criterion prints one PASS/FAIL line;
//! the process exits nonzero if any criterion failed.
//!
//! Reference values come from independent computations where possible:
//! adjacency rebuilt from element orders, nalgebra eigenvalues, neighbor
//! counts taken by hand, and `|S(Z_n)|` by trial division.

use std::collections::VecDeque;
use std::fs;
use std::process::Command;
use std::time::{Duration, Instant};

use nalgebra::DMatrix;

use theta_core::graph::ThetaGraph;
use theta_core::groups::GroupSpec;
use theta_core::properties::{
    completeness_criteria, components_after_removal, domination_number, eulerian_criteria, girth,
    is_complete, is_connected, is_eulerian, is_hamiltonian, is_planar, open_problem_classify,
    validate_cycle, vertex_connectivity, HamiltonStatus, OpenProblemClass, DEFAULT_NODE_BUDGET,
};
use theta_core::spectra::{
    build_q, closed_form_quotient, closed_form_spectrum, eig_sym, quotient_matrix, spectra_equal,
    spectrum_contains, theorem_partition, SpectrumFamily, SpectrumResult, DEFAULT_COMPARE_TOL,
    DEFAULT_JACOBI_TOL,
};
use theta_core::verify::{catalog, product_catalog};

type Check = Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

struct Battery {
    failed: Vec<usize>,
}

impl Battery {
    fn run(&mut self, id: usize, title: &str, budget: Option<Duration>, f: impl FnOnce() -> Check) {
        let start = Instant::now();
        let mut outcome = f();
        let took = start.elapsed();
        if let (Ok(()), Some(b)) = (&outcome, budget) {
            if took > b {
                outcome = Err(format!("took {took:.2?}, bound {b:.2?}"));
            }
        }
        match outcome {
            Ok(()) => println!("PASS [{id:>2}] {title} ({took:.2?})"),
            Err(e) => {
                println!("FAIL [{id:>2}] {title} ({took:.2?}): {e}");
                self.failed.push(id);
            }
        }
    }
}

fn trial_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn euclid(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        euclid(b, a % b)
    }
}

fn joined(a: u64, b: u64) -> bool {
    let g = euclid(a, b);
    g == 1 || trial_prime(g)
}

/// Adjacency lists rebuilt from the element orders alone.
fn oracle_adjacency(g: &GroupSpec) -> Vec<Vec<usize>> {
    let o: Vec<u64> = g.orders().collect();
    (0..o.len())
        .map(|i| (0..o.len()).filter(|&j| j != i && joined(o[i], o[j])).collect())
        .collect()
}

fn oracle_q(g: &GroupSpec) -> DMatrix<f64> {
    let adj = oracle_adjacency(g);
    let n = adj.len();
    let mut q = DMatrix::zeros(n, n);
    for (i, row) in adj.iter().enumerate() {
        q[(i, i)] = row.len() as f64;
        for &j in row {
            q[(i, j)] = 1.0;
        }
    }
    q
}

fn sorted_eigs(m: DMatrix<f64>) -> Vec<f64> {
    let mut ev: Vec<f64> = m.symmetric_eigen().eigenvalues.iter().copied().collect();
    ev.sort_by(|a, b| b.total_cmp(a));
    ev
}

fn group_of(family: SpectrumFamily, n: u64) -> GroupSpec {
    match family {
        SpectrumFamily::Cyclic => GroupSpec::cyclic(n).unwrap(),
        SpectrumFamily::Dihedral => GroupSpec::dihedral(n).unwrap(),
    }
}

fn name(family: SpectrumFamily, n: u64) -> String {
    match family {
        SpectrumFamily::Cyclic => format!("Z{n}"),
        SpectrumFamily::Dihedral => format!("D{n}"),
    }
}

/// Closed form against the oracle eigenvalues, value by value, and against
/// the library eigensolver with multiplicities compared exactly.
fn spectrum_matches(family: SpectrumFamily, n: u64) -> Check {
    let g = group_of(family, n);
    let closed = closed_form_spectrum(family, n).map_err(|e| format!("{}: {e}", name(family, n)))?;
    let want = sorted_eigs(oracle_q(&g));
    let got = closed.expanded();
    ensure(got.len() == want.len(), || {
        format!("{}: closed form has {} values, matrix has {}", name(family, n), got.len(), want.len())
    })?;
    for (a, b) in got.iter().zip(&want) {
        ensure((a - b).abs() <= DEFAULT_COMPARE_TOL, || {
            format!("{}: closed form {a} vs eigenvalue {b}", name(family, n))
        })?;
    }
    let numeric = eig_sym(&build_q(&ThetaGraph::build(&g)), DEFAULT_JACOBI_TOL).map_err(|e| e.to_string())?;
    let mults = |s: &SpectrumResult| s.pairs().into_iter().map(|(_, m)| m).collect::<Vec<_>>();
    ensure(mults(&numeric) == mults(&closed), || {
        format!("{}: multiplicities {:?} vs {:?}", name(family, n), mults(&numeric), mults(&closed))
    })?;
    ensure(spectra_equal(&closed, &numeric, DEFAULT_COMPARE_TOL), || {
        format!("{}: spectra differ", name(family, n))
    })
}

fn s_size_formula(n: u64) -> usize {
    1 + prime_divisors(n).iter().map(|p| (p - 1) as usize).sum::<usize>()
}

fn bfs(adj: &[Vec<usize>], src: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; adj.len()];
    dist[src] = Some(0);
    let mut queue = VecDeque::from([src]);
    while let Some(u) = queue.pop_front() {
        let d = dist[u].unwrap();
        for &v in &adj[u] {
            if dist[v].is_none() {
                dist[v] = Some(d + 1);
                queue.push_back(v);
            }
        }
    }
    dist
}

fn has_triangle(adj: &[Vec<usize>]) -> bool {
    adj.iter().enumerate().any(|(u, row)| {
        row.iter().any(|&v| v > u && row.iter().any(|&w| w > v && adj[v].contains(&w)))
    })
}

fn c1_cyclic_pq() -> Check {
    [6u64, 10, 14, 15, 21, 33, 35].iter().try_for_each(|&n| spectrum_matches(SpectrumFamily::Cyclic, n))
}

fn c2_cyclic_prime_power() -> Check {
    [4u64, 8, 16, 32, 9, 27, 25, 49]
        .iter()
        .try_for_each(|&n| spectrum_matches(SpectrumFamily::Cyclic, n))?;
    let z9 = closed_form_spectrum(SpectrumFamily::Cyclic, 9).map_err(|e| e.to_string())?;
    let pairs = z9.pairs();
    let anchor = [(12.0, 1), (7.0, 2), (3.0, 5), (1.0, 1)];
    ensure(
        pairs.len() == anchor.len()
            && pairs.iter().zip(&anchor).all(|(a, b)| (a.0 - b.0).abs() < 1e-12 && a.1 == b.1),
        || format!("Z9 spectrum {pairs:?}"),
    )
}

fn c3_dihedral() -> Check {
    for n in [6u64, 10, 15, 21, 4, 8, 9, 27, 25] {
        spectrum_matches(SpectrumFamily::Dihedral, n)?;
        let closed = closed_form_spectrum(SpectrumFamily::Dihedral, n).map_err(|e| e.to_string())?;
        let edges: usize = oracle_adjacency(&group_of(SpectrumFamily::Dihedral, n)).iter().map(Vec::len).sum();
        let trace = edges as f64;
        ensure((closed.sum() - trace).abs() <= 1e-8 * trace, || {
            format!("D{n}: eigenvalue sum {} vs 2|E| = {trace}", closed.sum())
        })?;
    }
    Ok(())
}

fn c4_block_identity() -> Check {
    for n in 1..=30u64 {
        let qd = oracle_q(&GroupSpec::dihedral(n).unwrap());
        let qz = oracle_q(&GroupSpec::cyclic(n).unwrap());
        let lib = build_q(&ThetaGraph::build(&GroupSpec::dihedral(n).unwrap()));
        let n_ = n as usize;
        for i in 0..n_ {
            for j in 0..n_ {
                let want = qz[(i, j)] as i64 + if i == j { n as i64 } else { 0 };
                ensure(qd[(i, j)] as i64 == want && lib.get(i, j) as i64 == want, || {
                    format!("D{n} entry ({i},{j}): {} vs {want}", lib.get(i, j))
                })?;
            }
        }
    }
    Ok(())
}

fn kappa(n: u64) -> Result<usize, String> {
    let t = ThetaGraph::build(&GroupSpec::cyclic(n).unwrap());
    vertex_connectivity(&t).map(|c| c.kappa).map_err(|e| e.to_string())
}

fn c5_connectivity() -> Check {
    for n in (2..=31u64).filter(|&n| trial_prime(n)) {
        let k = kappa(n)?;
        ensure(k as u64 == n - 1, || format!("Z{n}: kappa {k}, expected {}", n - 1))?;
    }
    for n in (4..=60u64).filter(|&n| !trial_prime(n)) {
        let k = kappa(n)?;
        let s = s_size_formula(n);
        ensure(k == s, || format!("Z{n}: kappa {k}, |S| = {s}"))?;
    }
    for (p, q) in [(2u64, 3u64), (2, 5), (3, 5), (3, 7), (5, 7), (2, 29), (3, 11)] {
        let k = kappa(p * q)?;
        ensure(k as u64 == p + q - 1 && k == s_size_formula(p * q), || {
            format!("Z{}: kappa {k}, expected {}", p * q, p + q - 1)
        })?;
    }
    for (p, m) in [(2u64, 2u32), (2, 5), (3, 2), (3, 3), (5, 2), (7, 2)] {
        let n = p.pow(m);
        let k = kappa(n)?;
        ensure(k as u64 == p && k == s_size_formula(n), || format!("Z{n}: kappa {k}, expected {p}"))?;
    }
    Ok(())
}

fn c6_dicyclic() -> Check {
    let t = ThetaGraph::build(&GroupSpec::dicyclic(3).unwrap());
    let r = open_problem_classify(&t).map_err(|e| e.to_string())?;
    let s_oracle = t.group().orders().filter(|&o| o == 1 || trial_prime(o)).count();
    ensure(r.kappa == 6 && r.s_size == 4 && s_oracle == 4, || {
        format!("kappa {}, |S| {}, oracle |S| {s_oracle}", r.kappa, r.s_size)
    })?;
    ensure(r.class == OpenProblemClass::KappaExceedsS && !r.complete, || format!("class {:?}", r.class))
}

fn eulerian_theorem(g: &GroupSpec) -> bool {
    let e = g.identity_index();
    g.order() % 2 == 1 && g.orders().enumerate().all(|(i, o)| i == e || trial_prime(o))
}

fn c7_eulerian() -> Check {
    for g in catalog(200) {
        let t = ThetaGraph::build(&g);
        let (a, b) = eulerian_criteria(&t);
        let even = oracle_adjacency(&g).iter().all(|r| r.len() % 2 == 0);
        let want = eulerian_theorem(&g);
        ensure(a == b && a == want && even == want, || {
            format!("{}: criteria ({a}, {b}), degree parity {even}, theorem {want}", g.family())
        })?;
    }
    let anchors = [
        (GroupSpec::cyclic(5).unwrap(), true),
        (GroupSpec::elementary_abelian(3, 2).unwrap(), true),
        (GroupSpec::heisenberg(3).unwrap(), true),
        (GroupSpec::cyclic(9).unwrap(), false),
    ];
    let dihedral = (1..=100u64).map(|n| (GroupSpec::dihedral(n).unwrap(), false));
    for (g, want) in anchors.into_iter().chain(dihedral) {
        let got = is_eulerian(&ThetaGraph::build(&g)).map_err(|e| e.to_string())?;
        ensure(got == want, || format!("{}: eulerian {got}, expected {want}", g.family()))?;
    }
    Ok(())
}

fn complete_by_count(g: &GroupSpec) -> bool {
    let n = g.order();
    oracle_adjacency(g).iter().all(|r| r.len() == n - 1)
}

fn c8_completeness() -> Check {
    let cases = (1..=100u64)
        .map(|n| (GroupSpec::cyclic(n).unwrap(), trial_prime(n) || n == 1))
        .chain((1..=50u64).map(|n| (GroupSpec::dihedral(n).unwrap(), trial_prime(n) || n == 1)))
        .chain(
            [(2u64, 2u32), (2, 3), (2, 5), (3, 2), (3, 4), (5, 3), (7, 2), (11, 2)]
                .iter()
                .map(|&(p, m)| (GroupSpec::elementary_abelian(p, m).unwrap(), true)),
        )
        .chain([(GroupSpec::heisenberg(3).unwrap(), true)]);
    for (g, want) in cases {
        let t = ThetaGraph::build(&g);
        let (a, b) = completeness_criteria(&t);
        let got = is_complete(&t).map_err(|e| e.to_string())?;
        ensure(a == b && got == want && complete_by_count(&g) == want, || {
            format!("{}: complete {got}, criteria ({a}, {b}), expected {want}", g.family())
        })?;
    }
    Ok(())
}

fn c9_planarity() -> Check {
    let expected = [3u64, 4, 8, 16, 32, 64];
    for n in 1..=64u64 {
        let t = ThetaGraph::build(&GroupSpec::cyclic(n).unwrap());
        let planar = is_planar(&t);
        if n <= 2 {
            ensure(planar, || format!("Z{n} reported nonplanar"))?;
            ensure(t.warnings().iter().any(|w| w.code == "small_group"), || {
                format!("Z{n} carries no degenerate-size warning")
            })?;
            continue;
        }
        let want = expected.contains(&n);
        ensure(planar == want, || format!("Z{n}: planar {planar}, expected {want}"))?;
    }
    Ok(())
}

fn c10_hamiltonian() -> Check {
    for (n, want) in [(6u64, true), (10, true), (14, true), (22, true), (15, false), (21, false), (33, false), (35, false)] {
        let t = ThetaGraph::build(&GroupSpec::cyclic(n).unwrap());
        let v = is_hamiltonian(&t, DEFAULT_NODE_BUDGET);
        if want {
            ensure(v.status == HamiltonStatus::Yes, || format!("Z{n}: {:?}", v.status))?;
            let c = v.cycle.as_ref().ok_or_else(|| format!("Z{n}: no cycle"))?;
            let adj = oracle_adjacency(t.group());
            let mut seen = c.clone();
            seen.sort_unstable();
            seen.dedup();
            let closed = (0..c.len()).all(|i| adj[c[i]].contains(&c[(i + 1) % c.len()]));
            ensure(seen.len() == n as usize && c.len() == n as usize && closed && validate_cycle(&t, c), || {
                format!("Z{n}: cycle {c:?} does not check")
            })?;
        } else {
            ensure(v.status == HamiltonStatus::No, || format!("Z{n}: {:?}", v.status))?;
            let w = v.toughness_witness.as_ref().ok_or_else(|| format!("Z{n}: no toughness witness"))?;
            // count components of the remainder independently
            let adj = oracle_adjacency(t.group());
            let mut alive = vec![true; adj.len()];
            for &x in w {
                alive[x] = false;
            }
            let mut comps = 0;
            for s in 0..adj.len() {
                if !alive[s] {
                    continue;
                }
                comps += 1;
                let mut stack = vec![s];
                alive[s] = false;
                while let Some(u) = stack.pop() {
                    for &x in &adj[u] {
                        if alive[x] {
                            alive[x] = false;
                            stack.push(x);
                        }
                    }
                }
            }
            ensure(comps > w.len() && components_after_removal(&t, w) == comps, || {
                format!("Z{n}: removing {} vertices leaves {comps} components", w.len())
            })?;
        }
    }
    Ok(())
}

fn c11_structure() -> Check {
    let mut groups = catalog(200);
    groups.extend(product_catalog());
    for g in groups {
        let t = ThetaGraph::build(&g);
        let adj = oracle_adjacency(&g);
        let n = adj.len();
        let ecc = (0..n)
            .map(|s| bfs(&adj, s).iter().map(|d| d.unwrap_or(usize::MAX)).max().unwrap_or(0))
            .max()
            .unwrap_or(0);
        ensure(is_connected(&t) && ecc <= 2, || format!("{}: connected/diameter {ecc}", g.family()))?;
        if n > 2 {
            ensure(girth(&t) == Some(3) && has_triangle(&adj), || format!("{}: girth {:?}", g.family(), girth(&t)))?;
        }
        let dom = domination_number(&t).map_err(|e| e.to_string())?;
        let e = g.identity_index();
        ensure(dom.number == 1 && dom.witness == vec![e] && adj[e].len() == n - 1, || {
            format!("{}: domination {:?}", g.family(), dom)
        })?;
    }
    Ok(())
}

/// Block-to-block neighbor counts taken directly from the adjacency lists.
fn counted_quotient(adj: &[Vec<usize>], blocks: &[Vec<usize>]) -> Result<Vec<Vec<i64>>, String> {
    let mut owner = vec![usize::MAX; adj.len()];
    for (b, block) in blocks.iter().enumerate() {
        for &v in block {
            owner[v] = b;
        }
    }
    let k = blocks.len();
    let mut out = vec![vec![0i64; k]; k];
    for (i, block) in blocks.iter().enumerate() {
        let counts = |v: usize| {
            let mut c = vec![0i64; k];
            for &u in &adj[v] {
                c[owner[u]] += 1;
            }
            c
        };
        let first = counts(block[0]);
        if let Some(&v) = block.iter().find(|&&v| counts(v) != first) {
            return Err(format!("block {i} not equitable at vertex {v}"));
        }
        let row_sum: i64 = first.iter().sum();
        for j in 0..k {
            out[i][j] = first[j] + if i == j { row_sum } else { 0 };
        }
    }
    Ok(out)
}

fn c12_equitable() -> Check {
    let cases = [6u64, 10, 14, 15, 21, 33, 35, 4, 8, 16, 32, 9, 27, 25, 49]
        .iter()
        .map(|&n| (SpectrumFamily::Cyclic, n))
        .chain([6u64, 10, 15, 21, 4, 8, 9, 27, 25].iter().map(|&n| (SpectrumFamily::Dihedral, n)));
    for (family, n) in cases {
        let g = group_of(family, n);
        let t = ThetaGraph::build(&g);
        let blocks = theorem_partition(family, n).map_err(|e| e.to_string())?;
        let part = quotient_matrix(&t, &blocks).map_err(|e| format!("{}: {e}", name(family, n)))?;
        let printed = closed_form_quotient(family, n).map_err(|e| e.to_string())?;
        let counted = counted_quotient(&oracle_adjacency(&g), &blocks).map_err(|e| format!("{}: {e}", name(family, n)))?;
        ensure(part.quotient == printed && counted == printed, || {
            format!("{}: quotient {:?}, counted {counted:?}, printed {printed:?}", name(family, n), part.quotient)
        })?;
        let sub = part.spectrum().map_err(|e| e.to_string())?;
        let full = eig_sym(&build_q(&t), DEFAULT_JACOBI_TOL).map_err(|e| e.to_string())?;
        ensure(spectrum_contains(&sub, &full, DEFAULT_COMPARE_TOL), || {
            format!("{}: quotient spectrum not contained", name(family, n))
        })?;
        // oracle: quotient eigenvalues from nalgebra on the non-symmetric matrix
        let k = printed.len();
        let m = DMatrix::from_fn(k, k, |i, j| printed[i][j] as f64);
        let full_oracle = sorted_eigs(oracle_q(&g));
        for ev in m.complex_eigenvalues().iter() {
            ensure(ev.im.abs() < 1e-9 && full_oracle.iter().any(|x| (x - ev.re).abs() <= DEFAULT_COMPARE_TOL), || {
                format!("{}: quotient eigenvalue {ev} missing", name(family, n))
            })?;
        }
    }
    let z6 = closed_form_quotient(SpectrumFamily::Cyclic, 6).map_err(|e| e.to_string())?;
    ensure(z6 == vec![vec![8, 2], vec![4, 4]], || format!("Z6 quotient {z6:?}"))
}

fn c13_negative_control() -> Check {
    let bin = env!("CARGO_BIN_EXE_theta");
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let path = dir.path().join("corrupted.json");
    let bad = ThetaGraph::build(&GroupSpec::cyclic(6).unwrap()).with_toggled_edge(1, 5).map_err(|e| e.to_string())?;
    fs::write(&path, bad.export_json()).map_err(|e| e.to_string())?;
    let out = Command::new(bin)
        .args(["verify", "--fixture", path.to_str().unwrap()])
        .env("THETA_LOG", "error")
        .output()
        .map_err(|e| e.to_string())?;
    let err = String::from_utf8_lossy(&out.stderr);
    ensure(out.status.code() == Some(2) && err.contains("adjacency_rule"), || {
        format!("fixture: exit {:?}, stderr {err:?}", out.status.code())
    })?;
    let out = Command::new(bin)
        .args(["verify", "--suite", "structure", "--corrupt-edge", "0", "2"])
        .env("THETA_LOG", "error")
        .output()
        .map_err(|e| e.to_string())?;
    let err = String::from_utf8_lossy(&out.stderr);
    ensure(out.status.code() == Some(2) && err.contains("structure_universal"), || {
        format!("corrupt-edge: exit {:?}, stderr {err:?}", out.status.code())
    })
}

fn main() {
    let secs = Duration::from_secs;
    let mut b = Battery { failed: Vec::new() };
    b.run(1, "cyclic pq spectra", Some(secs(1)), c1_cyclic_pq);
    b.run(2, "cyclic prime-power spectra", None, c2_cyclic_prime_power);
    b.run(3, "dihedral spectra and trace", None, c3_dihedral);
    b.run(4, "dihedral rotation block", None, c4_block_identity);
    b.run(5, "vertex connectivity", Some(secs(30)), c5_connectivity);
    b.run(6, "Dic3 exceeds |S|", None, c6_dicyclic);
    b.run(7, "eulerian iff", None, c7_eulerian);
    b.run(8, "completeness iff", None, c8_completeness);
    b.run(9, "planarity iff", Some(secs(5)), c9_planarity);
    b.run(10, "hamiltonian pq", None, c10_hamiltonian);
    b.run(11, "structural universals", None, c11_structure);
    b.run(12, "equitable quotients", None, c12_equitable);
    b.run(13, "corrupted fixture rejected", None, c13_negative_control);
    let total = 13;
    println!("{} of {total} criteria passed", total - b.failed.len());
    if !b.failed.is_empty() {
        eprintln!("failing criteria: {:?}", b.failed);
        std::process::exit(1);
    }
}
