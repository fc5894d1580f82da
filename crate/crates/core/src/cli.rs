//! The `theta` command line: analyze, spectrum, verify, search and export.

use std::collections::{BTreeMap, HashSet};
use std::ffi::OsString;
use std::fs::{self, File, OpenOptions};
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::time::{Instant, SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Result, ThetaError};
use crate::graph::{GroupDescriptor, ThetaGraph};
use crate::groups::{family_members, GroupFamily, GroupSpec, OrderProfile, Warning, FAMILY_TAGS};
use crate::properties::{
    completeness_criteria, diameter, domination_number, eulerian_criteria, girth, is_complete,
    is_connected, is_eulerian, is_hamiltonian, is_planar, open_problem_classify,
    vertex_connectivity, ConnectivityResult, HamiltonianVerdict, OpenProblemClass,
    OpenProblemResult, DEFAULT_NODE_BUDGET,
};
use crate::spectra::{
    build_q, closed_form_spectrum, eig_sym, spectra_equal, SpectrumEntryDoc, SpectrumFamily,
    SpectrumResult, DEFAULT_COMPARE_TOL, DEFAULT_JACOBI_TOL,
};
use crate::verify::{run_suite, verify_graph, Suite, VerifyOptions};

pub const REPORT_VERSION: u32 = 1;

#[derive(Debug, Parser)]
#[command(name = "theta", version, about = "Prime coprime graphs of finite groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Full property report for one group, as JSON.
    Analyze(AnalyzeArgs),
    /// Numeric and closed-form signless Laplacian spectrum, as JSON.
    Spectrum(SpectrumArgs),
    /// Run the theorem cross-check battery.
    Verify(VerifyArgs),
    /// Classify every small group by connectivity against |S(G)|.
    Search(SearchArgs),
    /// Write the graph as DOT or JSON.
    Export(ExportArgs),
}

/// Exactly one group selector.
#[derive(Debug, Clone, Args)]
#[group(required = true, multiple = false)]
pub struct Selector {
    #[arg(long, value_name = "N")]
    pub cyclic: Option<u64>,
    #[arg(long, value_name = "N")]
    pub dihedral: Option<u64>,
    #[arg(long, value_name = "N")]
    pub dicyclic: Option<u64>,
    #[arg(long = "elem-abelian", num_args = 2, value_names = ["P", "M"])]
    pub elem_abelian: Option<Vec<u64>>,
    #[arg(long, value_name = "P")]
    pub heisenberg: Option<u64>,
    /// Two factors written as FAMILY:PARAMS, e.g. `cyclic:4 dihedral:3` or `elem-abelian:2,3`.
    #[arg(long, num_args = 2, value_names = ["SEL", "SEL"])]
    pub product: Option<Vec<String>>,
    /// JSON file {"labels": [...], "orders": [...]}.
    #[arg(long, value_name = "PATH")]
    pub custom: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    #[command(flatten)]
    pub selector: Selector,
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// Node budget for the Hamiltonian cycle search.
    #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
    pub budget: u64,
    #[arg(long)]
    pub no_timestamp: bool,
}

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    #[command(flatten)]
    pub selector: Selector,
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value = "all")]
    pub suite: Suite,
    /// Check a stored graph export instead of the built-in battery.
    #[arg(long, value_name = "PATH", conflicts_with = "corrupt_edge")]
    pub fixture: Option<PathBuf>,
    /// Flip the edge {I, J} in every graph the battery builds.
    #[arg(long, num_args = 2, value_names = ["I", "J"])]
    pub corrupt_edge: Option<Vec<usize>>,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[arg(long, value_name = "N")]
    pub max_order: usize,
    /// Comma-separated: cyclic, dihedral, dicyclic, elementary_abelian,
    /// heisenberg, product. Default: all of them.
    #[arg(long, value_delimiter = ',')]
    pub families: Vec<String>,
    /// CSV output; a JSON-lines twin is written next to it.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// Keep records already present in the output and append the rest.
    #[arg(long, requires = "out")]
    pub skip_completed: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExportFormat {
    Dot,
    Json,
}

#[derive(Debug, Args)]
pub struct ExportArgs {
    #[command(flatten)]
    pub selector: Selector,
    #[arg(long, value_enum, default_value = "dot")]
    pub format: ExportFormat,
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CustomGroupFile {
    pub labels: Vec<String>,
    pub orders: Vec<u64>,
}

fn parse_params(family: &str, params: &str, count: usize) -> Result<Vec<u64>> {
    let values: Vec<u64> = params
        .split(',')
        .map(|p| p.trim().parse::<u64>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| ThetaError::Validation(format!("bad parameters {params:?} for {family}")))?;
    if values.len() != count {
        return Err(ThetaError::Validation(format!(
            "{family} takes {count} parameter(s), got {params:?}"
        )));
    }
    Ok(values)
}

fn small_m(m: u64) -> Result<u32> {
    u32::try_from(m).map_err(|_| ThetaError::Domain(format!("rank {m} is too large")))
}

/// Parses one `--product` factor such as `cyclic:4` or `elem-abelian:2,3`.
pub fn parse_factor(sel: &str) -> Result<GroupSpec> {
    let (family, params) = sel
        .split_once(':')
        .ok_or_else(|| ThetaError::Validation(format!("expected FAMILY:PARAMS, got {sel:?}")))?;
    match family.trim().to_ascii_lowercase().replace('-', "_").as_str() {
        "cyclic" => GroupSpec::cyclic(parse_params(family, params, 1)?[0]),
        "dihedral" => GroupSpec::dihedral(parse_params(family, params, 1)?[0]),
        "dicyclic" => GroupSpec::dicyclic(parse_params(family, params, 1)?[0]),
        "heisenberg" => GroupSpec::heisenberg(parse_params(family, params, 1)?[0]),
        "elem_abelian" | "elementary_abelian" => {
            let v = parse_params(family, params, 2)?;
            GroupSpec::elementary_abelian(v[0], small_m(v[1])?)
        }
        other => Err(ThetaError::Validation(format!(
            "unknown family {other:?} in {sel:?}; expected cyclic, dihedral, dicyclic, elem-abelian or heisenberg"
        ))),
    }
}

pub fn load_custom(path: &Path) -> Result<GroupSpec> {
    let text = fs::read_to_string(path)?;
    let file: CustomGroupFile = serde_json::from_str(&text)?;
    GroupSpec::from_orders(file.labels, file.orders)
}

impl Selector {
    pub fn build(&self) -> Result<GroupSpec> {
        if let Some(n) = self.cyclic {
            GroupSpec::cyclic(n)
        } else if let Some(n) = self.dihedral {
            GroupSpec::dihedral(n)
        } else if let Some(n) = self.dicyclic {
            GroupSpec::dicyclic(n)
        } else if let Some(v) = &self.elem_abelian {
            GroupSpec::elementary_abelian(v[0], small_m(v[1])?)
        } else if let Some(p) = self.heisenberg {
            GroupSpec::heisenberg(p)
        } else if let Some(v) = &self.product {
            Ok(GroupSpec::direct_product(&parse_factor(&v[0])?, &parse_factor(&v[1])?))
        } else if let Some(path) = &self.custom {
            load_custom(path)
        } else {
            Err(ThetaError::Validation("no group selector given".into()))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GroupSection {
    #[serde(flatten)]
    pub descriptor: GroupDescriptor,
    pub order_profile: OrderProfile,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphStats {
    pub vertices: usize,
    pub edges: usize,
    pub degree_min: usize,
    pub degree_max: usize,
}

/// A property value with the method that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tagged<T> {
    pub value: T,
    pub method: String,
}

fn tagged<T>(value: T, method: &str) -> Tagged<T> {
    Tagged {
        value,
        method: method.to_string(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeOrderSection {
    pub size: usize,
    pub members: Vec<usize>,
    pub includes_identity: bool,
    pub method: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DominationSection {
    pub number: usize,
    pub witness: Vec<usize>,
    pub method: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Properties {
    pub connected: Tagged<bool>,
    pub diameter: Tagged<Option<usize>>,
    pub girth: Tagged<Option<usize>>,
    pub eulerian: Tagged<bool>,
    pub complete: Tagged<bool>,
    pub planar: Tagged<bool>,
    pub hamiltonian: HamiltonianVerdict,
    pub connectivity: ConnectivityResult,
    pub prime_order_set: PrimeOrderSection,
    pub domination: DominationSection,
    pub open_problem: OpenProblemResult,
}

/// Either the closed-form entries or the string `"unsupported"`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ClosedFormField {
    Entries(Vec<SpectrumEntryDoc>),
    Unsupported(String),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumSection {
    pub dimension: usize,
    pub numeric: Vec<SpectrumEntryDoc>,
    pub closed_form: ClosedFormField,
    #[serde(rename = "match")]
    pub matches: Option<bool>,
    pub tolerance: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub report_version: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generated_at_unix_ms: Option<u64>,
    pub group: GroupSection,
    pub graph: GraphStats,
    pub properties: Properties,
    pub spectrum: SpectrumSection,
    pub warnings: Vec<Warning>,
}

fn now_ms() -> u64 {
    SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_millis() as u64)
        .unwrap_or(0)
}

fn closed_form_family(family: &GroupFamily) -> Option<(SpectrumFamily, u64)> {
    match *family {
        GroupFamily::Cyclic { n } => Some((SpectrumFamily::Cyclic, n)),
        GroupFamily::Dihedral { n } => Some((SpectrumFamily::Dihedral, n)),
        _ => None,
    }
}

fn multiplicities(s: &SpectrumResult) -> Vec<usize> {
    s.entries.iter().map(|e| e.multiplicity).collect()
}

/// Numeric spectrum, plus the closed form and a match flag where one exists.
/// A mismatch is a consistency error.
pub fn spectrum_section(t: &ThetaGraph) -> Result<SpectrumSection> {
    let numeric = eig_sym(&build_q(t), DEFAULT_JACOBI_TOL)?;
    let exact = closed_form_family(t.group().family())
        .and_then(|(family, n)| closed_form_spectrum(family, n).ok());
    let (closed_form, matches) = match &exact {
        Some(exact) => {
            let ok = spectra_equal(exact, &numeric, DEFAULT_COMPARE_TOL)
                && multiplicities(exact) == multiplicities(&numeric);
            if !ok {
                return Err(ThetaError::consistency(
                    "spectrum",
                    format!("closed form for {} disagrees with the eigensolver", t.group().family()),
                ));
            }
            (ClosedFormField::Entries(exact.to_docs()), Some(true))
        }
        None => (ClosedFormField::Unsupported("unsupported".into()), None),
    };
    Ok(SpectrumSection {
        dimension: numeric.dimension(),
        numeric: numeric.to_docs(),
        closed_form,
        matches,
        tolerance: DEFAULT_COMPARE_TOL,
    })
}

/// Runs a dual-criterion check. Built-in families must agree; for custom
/// order lists, which need not come from a group, disagreement becomes a
/// warning and the graph-side answer is kept.
fn dual_check(
    result: Result<bool>,
    graph_side: bool,
    custom: bool,
    code: &str,
    warnings: &mut Vec<Warning>,
) -> Result<bool> {
    match result {
        Err(ThetaError::Consistency { detail, .. }) if custom => {
            warnings.push(Warning::new(code, detail));
            Ok(graph_side)
        }
        other => other,
    }
}

pub fn analyze(group: &GroupSpec, budget: u64, timestamp: bool) -> Result<AnalysisReport> {
    let t = ThetaGraph::build(group);
    let custom = matches!(group.family(), GroupFamily::Custom);
    let mut warnings: Vec<Warning> = group.warnings().to_vec();
    warnings.extend(t.warnings().iter().cloned());

    let connected = is_connected(&t);
    let diam = diameter(&t).ok();
    let g = girth(&t);
    if g.is_none() {
        let w = Warning::new("acyclic", "graph has no cycle; girth is infinite");
        log::info!("finding: {} for {}", w.message, group.family());
        warnings.push(w);
    }
    let eulerian = dual_check(
        is_eulerian(&t),
        eulerian_criteria(&t).0,
        custom,
        "eulerian_criteria_disagree",
        &mut warnings,
    )?;
    let complete = dual_check(
        is_complete(&t),
        completeness_criteria(&t).0,
        custom,
        "completeness_criteria_disagree",
        &mut warnings,
    )?;
    let hamiltonian = is_hamiltonian(&t, budget);
    let connectivity = vertex_connectivity(&t)?;
    let s = t.prime_order_set();
    let domination = domination_number(&t)?;
    let open_problem = if custom {
        OpenProblemResult {
            class: OpenProblemClass::from_counts(complete, connectivity.kappa, s.len()),
            complete,
            kappa: connectivity.kappa,
            s_size: s.len(),
        }
    } else {
        open_problem_classify(&t)?
    };

    Ok(AnalysisReport {
        report_version: REPORT_VERSION,
        generated_at_unix_ms: timestamp.then(now_ms),
        group: GroupSection {
            descriptor: GroupDescriptor::of(group),
            order_profile: group.order_profile(),
        },
        graph: GraphStats {
            vertices: t.n_vertices(),
            edges: t.edge_count(),
            degree_min: t.min_degree(),
            degree_max: t.max_degree(),
        },
        properties: Properties {
            connected: tagged(connected, "bfs"),
            diameter: tagged(diam, "bfs_all_sources"),
            girth: tagged(g, "bfs_shortest_cycle"),
            eulerian: tagged(eulerian, "degree_parity_and_order_criterion"),
            complete: tagged(complete, "edge_count_and_order_criterion"),
            planar: tagged(is_planar(&t), "left_right"),
            hamiltonian,
            connectivity,
            prime_order_set: PrimeOrderSection {
                size: s.len(),
                members: s.indices.clone(),
                includes_identity: s.includes_identity,
                method: "order_scan".into(),
            },
            domination: DominationSection {
                number: domination.number,
                witness: domination.witness,
                method: "universal_vertex".into(),
            },
            open_problem,
        },
        spectrum: spectrum_section(&t)?,
        warnings,
    })
}

/// One row of the open-problem search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchRecord {
    pub family: String,
    pub params: String,
    pub order: usize,
    pub complete: bool,
    pub kappa: usize,
    pub s_size: usize,
    pub class: OpenProblemClass,
    pub ms: u64,
}

pub fn search_record(group: &GroupSpec) -> Result<SearchRecord> {
    let start = Instant::now();
    let t = ThetaGraph::build(group);
    let r = open_problem_classify(&t)?;
    Ok(SearchRecord {
        family: group.family().tag().to_string(),
        params: group.family().params(),
        order: group.order(),
        complete: r.complete,
        kappa: r.kappa,
        s_size: r.s_size,
        class: r.class,
        ms: start.elapsed().as_millis() as u64,
    })
}

fn normalize_family(name: &str) -> Result<&'static str> {
    let key = name.trim().to_ascii_lowercase().replace('-', "_");
    match key.as_str() {
        "elem_abelian" => return Ok("elementary_abelian"),
        "product" | "products" => return Ok("product"),
        _ => {}
    }
    FAMILY_TAGS
        .iter()
        .find(|t| **t == key)
        .copied()
        .ok_or_else(|| {
            ThetaError::Validation(format!(
                "unknown family {name:?}; expected one of {}, product",
                FAMILY_TAGS.join(", ")
            ))
        })
}

/// Groups visited by `search`, in output order: each selected family by
/// ascending parameters, then direct products `A x B` of family members
/// (`A` not after `B` in that order) with `|A|, |B| >= 2`.
pub fn search_groups(max_order: usize, families: &[String]) -> Result<Vec<GroupSpec>> {
    let mut selected: HashSet<&'static str> = HashSet::new();
    for f in families {
        selected.insert(normalize_family(f)?);
    }
    if selected.is_empty() {
        selected.extend(FAMILY_TAGS);
        selected.insert("product");
    }
    let mut out = Vec::new();
    for tag in FAMILY_TAGS.iter().filter(|t| selected.contains(**t)) {
        out.extend(family_members(tag, 3, max_order)?);
    }
    if selected.contains("product") {
        let base_tags: Vec<&str> = {
            let chosen: Vec<&str> = FAMILY_TAGS.iter().copied().filter(|t| selected.contains(t)).collect();
            if chosen.is_empty() {
                FAMILY_TAGS.to_vec()
            } else {
                chosen
            }
        };
        let mut base = Vec::new();
        for tag in base_tags {
            base.extend(family_members(tag, 2, max_order / 2)?);
        }
        for i in 0..base.len() {
            for j in i..base.len() {
                if base[i].order() * base[j].order() <= max_order {
                    out.push(GroupSpec::direct_product(&base[i], &base[j]));
                }
            }
        }
    }
    Ok(out)
}

fn twin_paths(out: &Path) -> (PathBuf, PathBuf) {
    if out.extension().is_some_and(|e| e == "jsonl") {
        (out.with_extension("csv"), out.to_path_buf())
    } else {
        (out.to_path_buf(), out.with_extension("jsonl"))
    }
}

/// `(family, params)` keys already present in a search CSV.
fn completed_keys(csv_path: &Path) -> Result<HashSet<(String, String)>> {
    let mut keys = HashSet::new();
    if !csv_path.exists() {
        return Ok(keys);
    }
    let mut reader = csv::Reader::from_path(csv_path).map_err(csv_error)?;
    for row in reader.records() {
        let row = row.map_err(csv_error)?;
        if let (Some(f), Some(p)) = (row.get(0), row.get(1)) {
            keys.insert((f.to_string(), p.to_string()));
        }
    }
    Ok(keys)
}

fn csv_error(e: csv::Error) -> ThetaError {
    match e.into_kind() {
        csv::ErrorKind::Io(io) => ThetaError::Io(io),
        other => ThetaError::Validation(format!("csv: {other:?}")),
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SearchSummary {
    pub evaluated: usize,
    pub skipped: usize,
    pub by_class: BTreeMap<&'static str, usize>,
}

pub fn run_search(args: &SearchArgs, stdout: &mut dyn Write) -> Result<SearchSummary> {
    if args.max_order < 3 {
        return Err(ThetaError::Validation("--max-order must be at least 3".into()));
    }
    let mut groups = search_groups(args.max_order, &args.families)?;
    let mut summary = SearchSummary::default();
    let (mut csv_out, mut jsonl) = match &args.out {
        None => (csv::Writer::from_writer(Box::new(stdout) as Box<dyn Write + '_>), None),
        Some(out) => {
            let (csv_path, jsonl_path) = twin_paths(out);
            if args.skip_completed {
                let done = completed_keys(&csv_path)?;
                let before = groups.len();
                groups.retain(|g| !done.contains(&(g.family().tag().to_string(), g.family().params())));
                summary.skipped = before - groups.len();
            }
            let open = |p: &Path| -> Result<File> {
                let mut o = OpenOptions::new();
                o.create(true);
                if args.skip_completed {
                    o.append(true);
                } else {
                    o.write(true).truncate(true);
                }
                Ok(o.open(p)?)
            };
            let csv_file = open(&csv_path)?;
            let fresh = csv_file.metadata()?.len() == 0;
            let jsonl_file = open(&jsonl_path)?;
            let writer = csv::WriterBuilder::new()
                .has_headers(fresh)
                .from_writer(Box::new(BufWriter::new(csv_file)) as Box<dyn Write + '_>);
            (writer, Some(BufWriter::new(jsonl_file)))
        }
    };
    write_chunks(&groups, &mut csv_out, &mut jsonl, &mut summary)?;
    csv_out.flush()?;
    Ok(summary)
}

/// Evaluates groups in parallel chunks and writes each chunk in order, so
/// an interrupted run leaves a valid prefix to resume from.
fn write_chunks(
    groups: &[GroupSpec],
    csv_out: &mut csv::Writer<Box<dyn Write + '_>>,
    jsonl: &mut Option<BufWriter<File>>,
    summary: &mut SearchSummary,
) -> Result<()> {
    let chunk = 4 * rayon::current_num_threads().max(1);
    for part in groups.chunks(chunk) {
        let records: Vec<Result<SearchRecord>> = part.par_iter().map(search_record).collect();
        for r in records {
            let r = r?;
            csv_out.serialize(&r).map_err(csv_error)?;
            if let Some(j) = jsonl.as_mut() {
                serde_json::to_writer(&mut *j, &r)?;
                j.write_all(b"\n")?;
            }
            summary.evaluated += 1;
            *summary.by_class.entry(r.class.as_str()).or_default() += 1;
        }
        csv_out.flush()?;
        if let Some(j) = jsonl.as_mut() {
            j.flush()?;
        }
    }
    Ok(())
}

fn emit(out: Option<&Path>, text: &str, stdout: &mut dyn Write) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

pub fn exit_code(e: &ThetaError) -> i32 {
    match e {
        ThetaError::Consistency { .. } => 2,
        _ => 1,
    }
}

/// Executes a parsed command, returning the process exit code.
pub fn execute(cli: Cli, stdout: &mut dyn Write) -> Result<i32> {
    match cli.command {
        Command::Analyze(a) => {
            let group = a.selector.build()?;
            let report = analyze(&group, a.budget, !a.no_timestamp)?;
            emit(a.out.as_deref(), &to_json(&report), stdout)?;
        }
        Command::Spectrum(a) => {
            let group = a.selector.build()?;
            let section = spectrum_section(&ThetaGraph::build(&group))?;
            emit(a.out.as_deref(), &to_json(&section), stdout)?;
        }
        Command::Export(a) => {
            let t = ThetaGraph::build(&a.selector.build()?);
            let text = match a.format {
                ExportFormat::Dot => t.export_dot(),
                ExportFormat::Json => t.export_json() + "\n",
            };
            emit(a.out.as_deref(), &text, stdout)?;
        }
        Command::Verify(a) => {
            let report = match &a.fixture {
                Some(path) => verify_graph(&ThetaGraph::from_json(&fs::read_to_string(path)?)?),
                None => {
                    let opts = VerifyOptions {
                        toggle_edge: a.corrupt_edge.as_ref().map(|v| (v[0], v[1])),
                    };
                    run_suite(a.suite, &opts)
                }
            };
            writeln!(stdout, "{report}")?;
            if !report.passed() {
                eprintln!("verification failed: {}", report.failing_theorems().join(", "));
                return Ok(2);
            }
        }
        Command::Search(a) => {
            let summary = run_search(&a, stdout)?;
            let classes: Vec<String> = [
                OpenProblemClass::Complete,
                OpenProblemClass::KappaEqualsS,
                OpenProblemClass::KappaExceedsS,
                OpenProblemClass::KappaBelowS,
            ]
            .iter()
            .map(|c| format!("{}={}", c.as_str(), summary.by_class.get(c.as_str()).unwrap_or(&0)))
            .collect();
            eprintln!(
                "searched {} groups ({} already complete): {}",
                summary.evaluated,
                summary.skipped,
                classes.join(" ")
            );
        }
    }
    Ok(0)
}

fn init_logging() {
    let env = env_logger::Env::new().filter_or("THETA_LOG", "warn");
    let _ = env_logger::Builder::from_env(env).format_timestamp(None).try_init();
}

/// Entry point shared by the binary and tests.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    init_logging();
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let stdout = io::stdout();
    let mut lock = stdout.lock();
    match execute(cli, &mut lock) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}
