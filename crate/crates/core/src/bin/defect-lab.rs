use clap::{Parser, Subcommand, ValueEnum};
use defect_lab::census::{
    self, default_cache_dir, fetch_dataset, read_graph6_file, run_census, CensusOptions, Conjecture, FetchMode,
    GraphInput, Pass,
};
use defect_lab::colouring::{boundary_patterns, classify_4pole};
use defect_lab::constructions::{
    build_heavy_cluster_snark, build_z_hexapole, example_34, petersen_isochromatic_pole, validate_heavy_cluster_snark,
    OutputWiring,
};
use defect_lab::graph::{parse_graph6, parse_native, to_graph6, to_native, CubicGraph};
use defect_lab::reduction::{format_trace, normalize};
use defect_lab::{Error, Result};
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

#[derive(Parser)]
#[command(name = "defect-lab", version, about = "Colouring defect analysis of cubic graphs and snarks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyse graph6 files and summarise them by order.
    Census {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long, value_delimiter = ',', default_value = "defect,hexagons")]
        passes: Vec<Pass>,
        /// Worker threads, 0 for all cores.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Seconds allowed per budgeted pass and graph.
        #[arg(long, default_value_t = 10)]
        timeout: u64,
        /// Also run the passes on trivial snarks.
        #[arg(long)]
        all_snarks: bool,
        #[arg(long)]
        jsonl: Option<PathBuf>,
        /// Defect table.
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Hexagon table.
        #[arg(long)]
        hexagon_csv: Option<PathBuf>,
    },
    /// Everything about one graph: a graph6 string, a graph6 file or a
    /// multipole file.
    Analyze { input: String },
    /// Reduce a defect-3 snark and print the steps.
    Reduce { input: String },
    /// Print a construction.
    Construct {
        #[arg(value_enum)]
        which: Construction,
        /// Index into the valid output wirings, for `gn`.
        #[arg(long, default_value_t = 0)]
        wiring: usize,
    },
    /// Look for counterexamples in census files.
    Scan {
        #[arg(value_enum)]
        conjecture: ScanTarget,
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// Download a graph6 list into the cache and print its local path.
    Fetch {
        source: String,
        #[arg(long)]
        offline: bool,
        #[arg(long, conflicts_with = "offline")]
        refresh: bool,
        /// Defaults to DEFECT_LAB_CACHE or ~/.cache/defect-lab.
        #[arg(long)]
        cache_dir: Option<PathBuf>,
    },
    /// Print the snarks among the input graphs as graph6.
    Filter {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long)]
        nontrivial: bool,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Construction {
    /// Heavy-cluster snark from three Petersen isochromatic poles.
    Gn,
    /// The central hexapole in multipole format.
    Z,
    /// The 34-vertex heavy-cluster snark of defect 4.
    Snark34,
}

#[derive(Clone, Copy, ValueEnum)]
enum ScanTarget {
    All,
    CriticalDefect,
    CriticalDoubleCore,
    IrreducibleDefect,
    AllSingleCore,
    NonRemovableNonCore,
}

impl ScanTarget {
    fn conjectures(self) -> Vec<Conjecture> {
        match self {
            ScanTarget::All => Conjecture::ALL.to_vec(),
            ScanTarget::CriticalDefect => vec![Conjecture::CriticalDefect],
            ScanTarget::CriticalDoubleCore => vec![Conjecture::CriticalDoubleCore],
            ScanTarget::IrreducibleDefect => vec![Conjecture::IrreducibleDefect],
            ScanTarget::AllSingleCore => vec![Conjecture::AllSingleCore],
            ScanTarget::NonRemovableNonCore => vec![Conjecture::NonRemovableNonCore],
        }
    }
}

fn read_inputs(files: &[PathBuf]) -> Result<Vec<GraphInput>> {
    let mut all = Vec::new();
    for f in files {
        all.extend(read_graph6_file(f)?);
    }
    Ok(all)
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text)?;
    Ok(())
}

/// Graphs named by a graph6 string or a file of them.
fn load_graphs(input: &str) -> Result<Vec<CubicGraph>> {
    let p = Path::new(input);
    if !p.is_file() {
        return Ok(vec![parse_graph6(input)?]);
    }
    read_graph6_file(p)?.iter().map(|i| parse_graph6(&i.graph6)).collect()
}

fn json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serialisable")
}

fn census_cmd(
    files: &[PathBuf],
    opts: &CensusOptions,
    jsonl: Option<&Path>,
    csv: Option<&Path>,
    hexagon_csv: Option<&Path>,
) -> Result<()> {
    let inputs = read_inputs(files)?;
    let (records, report) = run_census(&inputs, opts)?;
    if let Some(p) = jsonl {
        let mut f = std::io::BufWriter::new(std::fs::File::create(p)?);
        census::write_jsonl(&records, &mut f)?;
        f.flush()?;
    }
    let defects = report.defect_csv()?;
    let hexagons = report.hexagon_csv()?;
    match csv {
        Some(p) => write_file(p, &defects)?,
        None => print!("{defects}"),
    }
    match hexagon_csv {
        Some(p) => write_file(p, &hexagons)?,
        None => print!("\n{hexagons}"),
    }
    for v in report.violations() {
        eprintln!("row check failed: {v}");
    }
    for row in report.rows.values() {
        for id in &row.without_double_core {
            eprintln!("defect-3 snark without a double-core hexagon: {id}");
        }
        if row.errors + row.inconclusive > 0 {
            eprintln!("order {}: {} errors, {} inconclusive", row.order, row.errors, row.inconclusive);
        }
    }
    Ok(())
}

fn analyze_cmd(input: &str) -> Result<()> {
    let p = Path::new(input);
    if p.is_file() {
        let text = std::fs::read_to_string(p)?;
        if let Ok(m) = parse_native(&text) {
            if !m.graph().is_closed() {
                println!("shape {:?}", m.shape());
                let patterns = boundary_patterns(&m)?;
                println!("boundary patterns {}", patterns.len());
                if m.graph().semiedge_count() == 4 {
                    println!("{:?}", classify_4pole(&m)?);
                }
                return Ok(());
            }
            return analyze_graphs(&[m.into_graph()]);
        }
    }
    analyze_graphs(&load_graphs(input)?)
}

fn analyze_graphs(graphs: &[CubicGraph]) -> Result<()> {
    let opts = CensusOptions {
        passes: vec![Pass::Defect, Pass::Hexagons, Pass::Pi, Pass::Clusters, Pass::Reduce],
        include_trivial: true,
        ..Default::default()
    };
    for (i, g) in graphs.iter().enumerate() {
        let input = GraphInput { id: format!("input:{}", i + 1), graph6: to_graph6(g)? };
        println!("{}", json(&census::analyze_input(&input, &opts)));
    }
    Ok(())
}

fn reduce_cmd(input: &str) -> Result<()> {
    for g in load_graphs(input)? {
        let nf = normalize(&g)?;
        print!("{}", format_trace(&nf.trace));
        println!("status {}", json(&nf.status).trim_matches('"'));
        if let Some(t) = nf.essential_triangle {
            println!("essential triangle {t:?}");
        }
        println!("{}", to_graph6(&nf.graph)?);
    }
    Ok(())
}

fn construct_cmd(which: Construction, wiring: usize) -> Result<()> {
    match which {
        Construction::Z => print!("{}", to_native(&build_z_hexapole())),
        Construction::Gn => {
            let all = OutputWiring::all();
            let w = *all.get(wiring).ok_or_else(|| Error::Precondition(format!("wiring index {wiring} of {}", all.len())))?;
            let pole = petersen_isochromatic_pole();
            let s = build_heavy_cluster_snark([&pole, &pole, &pole], w)?;
            let (report, d) = validate_heavy_cluster_snark(&s)?;
            println!("{}", to_graph6(&s.graph)?);
            println!("{}", json(&report));
            println!("defect witness {:?}", d.witness.members().map(|m| m.to_vec()));
        }
        Construction::Snark34 => {
            let (s, report) = example_34()?;
            println!("{}", to_graph6(&s.graph)?);
            println!("{}", json(&report));
        }
    }
    Ok(())
}

fn scan_cmd(target: ScanTarget, files: &[PathBuf], jobs: usize) -> Result<bool> {
    let inputs = read_inputs(files)?;
    let opts = CensusOptions { jobs, ..Default::default() };
    let (records, _) = run_census(&inputs, &opts)?;
    let mut clean = true;
    for c in target.conjectures() {
        let rep = census::scan(c, &records);
        println!("{}", rep.summary());
        for w in &rep.counterexamples {
            println!("  {} {}", w.id, w.graph6);
        }
        clean &= rep.counterexamples.is_empty();
    }
    Ok(clean)
}

fn filter_cmd(files: &[PathBuf], nontrivial: bool, jobs: usize) -> Result<()> {
    let inputs = read_inputs(files)?;
    let opts = CensusOptions { passes: vec![], jobs, ..Default::default() };
    let (records, _) = run_census(&inputs, &opts)?;
    let mut out = std::io::BufWriter::new(std::io::stdout().lock());
    for r in records {
        let keep = if nontrivial { r.nontrivial == Some(true) } else { r.snark == Some(true) };
        if keep {
            writeln!(out, "{}", r.graph6)?;
        }
    }
    out.flush()?;
    Ok(())
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Census { files, passes, jobs, timeout, all_snarks, jsonl, csv, hexagon_csv } => {
            let opts = CensusOptions { passes, jobs, timeout: Duration::from_secs(timeout), include_trivial: all_snarks };
            census_cmd(&files, &opts, jsonl.as_deref(), csv.as_deref(), hexagon_csv.as_deref())?;
        }
        Command::Analyze { input } => analyze_cmd(&input)?,
        Command::Reduce { input } => reduce_cmd(&input)?,
        Command::Construct { which, wiring } => construct_cmd(which, wiring)?,
        Command::Scan { conjecture, files, jobs } => return scan_cmd(conjecture, &files, jobs),
        Command::Fetch { source, offline, refresh, cache_dir } => {
            let mode = if offline {
                FetchMode::Offline
            } else if refresh {
                FetchMode::Refresh
            } else {
                FetchMode::Online
            };
            let dir = cache_dir.unwrap_or_else(default_cache_dir);
            println!("{}", fetch_dataset(&source, &dir, mode)?.display());
        }
        Command::Filter { files, nontrivial, jobs } => filter_cmd(&files, nontrivial, jobs)?,
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
