//! Batch analysis of graph6 collections: per-graph records, per-order
//! summary tables, and conjecture scans.

mod fetch;
mod scan;

pub use fetch::{default_cache_dir, fetch_dataset, FetchMode};
pub use scan::{scan, Conjecture, ScanReport, Witness};

use crate::budget::Budget;
use crate::clusters::five_clusters;
use crate::colouring::{classify_snark, graph_is_colourable, SnarkClass};
use crate::covers::{perfect_matching_index_within, CoverIndex};
use crate::error::{Error, Result};
use crate::graph::{cyclic_edge_connectivity, girth, induced_cycles, is_two_connected, parse_graph6, CubicGraph, CyclicConnectivity};
use crate::matching::{classify_hexagon, defect, oddness, HexagonClass};
use crate::reduction::{normalize, NormalStatus};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;
use std::io::Write;
use std::path::Path;
use std::time::Duration;

/// Optional per-graph analyses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Pass {
    Defect,
    Hexagons,
    Pi,
    Clusters,
    Reduce,
}

#[derive(Clone, Debug)]
pub struct CensusOptions {
    pub passes: Vec<Pass>,
    /// Worker threads; 0 picks the number of cores.
    pub jobs: usize,
    /// Wall-clock budget for each budgeted pass on one graph.
    pub timeout: Duration,
    /// Also run the passes on snarks that are not nontrivial.
    pub include_trivial: bool,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions {
            passes: vec![Pass::Defect, Pass::Hexagons],
            jobs: 0,
            timeout: Duration::from_secs(10),
            include_trivial: false,
        }
    }
}

impl CensusOptions {
    fn runs(&self, p: Pass) -> bool {
        self.passes.contains(&p)
    }
}

/// One graph of the input with its source position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphInput {
    pub id: String,
    pub graph6: String,
}

/// Reads a newline-separated graph6 list. Ids are `name:line`, 1-based.
pub fn read_graph6_file(path: &Path) -> Result<Vec<GraphInput>> {
    let text = std::fs::read_to_string(path)?;
    let name = path.file_name().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    Ok(graph6_inputs(&name, &text))
}

pub fn graph6_inputs(name: &str, text: &str) -> Vec<GraphInput> {
    text.lines()
        .enumerate()
        .filter_map(|(i, line)| {
            let s = line.trim().trim_start_matches(">>graph6<<");
            (!s.is_empty()).then(|| GraphInput { id: format!("{name}:{}", i + 1), graph6: s.to_string() })
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Connectivity {
    Exact(usize),
    /// No cycle-separating cut of at most this many edges.
    Above(usize),
}

const CONNECTIVITY_CAP: usize = 6;

/// How the 6-cycles of a defect-3 snark split into kinds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HexagonProfile {
    /// Every 6-cycle double-core.
    DoubleCore,
    DoubleCoreRemovable,
    DoubleCoreSingleCore,
    DoubleCoreSingleCoreRemovable,
    /// A non-core hexagon, or no double-core one.
    Other,
}

impl HexagonProfile {
    pub const TABLE: [HexagonProfile; 4] = [
        HexagonProfile::DoubleCore,
        HexagonProfile::DoubleCoreRemovable,
        HexagonProfile::DoubleCoreSingleCore,
        HexagonProfile::DoubleCoreSingleCoreRemovable,
    ];
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct HexagonCounts {
    pub double_core: usize,
    pub single_core: usize,
    pub non_core: usize,
    pub removable: usize,
}

impl HexagonCounts {
    pub fn total(&self) -> usize {
        self.double_core + self.single_core + self.non_core + self.removable
    }

    pub fn profile(&self) -> HexagonProfile {
        if self.double_core == 0 || self.non_core > 0 {
            return HexagonProfile::Other;
        }
        match (self.single_core > 0, self.removable > 0) {
            (false, false) => HexagonProfile::DoubleCore,
            (false, true) => HexagonProfile::DoubleCoreRemovable,
            (true, false) => HexagonProfile::DoubleCoreSingleCore,
            (true, true) => HexagonProfile::DoubleCoreSingleCoreRemovable,
        }
    }
}

pub fn hexagon_counts(g: &CubicGraph) -> Result<HexagonCounts> {
    let mut c = HexagonCounts::default();
    for h in induced_cycles(g, 6) {
        match classify_hexagon(g, &h)? {
            HexagonClass::DoubleCore => c.double_core += 1,
            HexagonClass::SingleCore => c.single_core += 1,
            HexagonClass::NonCore => c.non_core += 1,
            HexagonClass::Removable => c.removable += 1,
        }
    }
    Ok(c)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ClusterSummary {
    pub count: usize,
    pub heavy: usize,
}

/// Everything learned about one input graph. Absent fields belong to passes
/// that did not run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphRecord {
    pub id: String,
    pub graph6: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub girth: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cyclic_connectivity: Option<Connectivity>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub snark: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nontrivial: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub critical: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bicritical: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub defect: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oddness: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hexagons: Option<HexagonCounts>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hexagon_profile: Option<HexagonProfile>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pi: Option<CoverIndex>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub clusters: Option<ClusterSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub normal_form: Option<NormalStatus>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub inconclusive: Vec<Pass>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub errors: Vec<String>,
}

impl GraphRecord {
    fn new(input: &GraphInput) -> Self {
        GraphRecord {
            id: input.id.clone(),
            graph6: input.graph6.clone(),
            order: None,
            girth: None,
            cyclic_connectivity: None,
            snark: None,
            nontrivial: None,
            critical: None,
            bicritical: None,
            defect: None,
            oddness: None,
            hexagons: None,
            hexagon_profile: None,
            pi: None,
            clusters: None,
            normal_form: None,
            inconclusive: Vec::new(),
            errors: Vec::new(),
        }
    }
}

/// Analyses one graph. Failures of individual passes are recorded, not raised.
pub fn analyze_input(input: &GraphInput, opts: &CensusOptions) -> GraphRecord {
    let mut r = GraphRecord::new(input);
    let g = match parse_graph6(&input.graph6) {
        Ok(g) => g,
        Err(e) => {
            r.errors.push(e.to_string());
            return r;
        }
    };
    if let Err(e) = analyze_into(&g, opts, &mut r) {
        r.errors.push(e.to_string());
    }
    r
}

fn analyze_into(g: &CubicGraph, opts: &CensusOptions, r: &mut GraphRecord) -> Result<()> {
    r.order = Some(g.vertex_count());
    r.girth = girth(g);
    if !is_two_connected(g) {
        r.snark = Some(false);
        r.nontrivial = Some(false);
        return Ok(());
    }
    // most inputs of a raw cubic list are colourable; skip the cut search for them
    if graph_is_colourable(g) {
        r.snark = Some(false);
        r.nontrivial = Some(false);
        return Ok(());
    }
    r.cyclic_connectivity = Some(match cyclic_edge_connectivity(g, CONNECTIVITY_CAP) {
        Ok(CyclicConnectivity::Exact { value, .. }) => Connectivity::Exact(value),
        Ok(CyclicConnectivity::AboveCap(c)) => Connectivity::Above(c),
        Err(Error::NoCycleSeparatingCut) => Connectivity::Above(g.edge_count()),
        Err(e) => return Err(e),
    });
    let class = classify_snark(g)?;
    r.snark = Some(class.is_snark());
    let cc4 = match r.cyclic_connectivity {
        Some(Connectivity::Exact(k)) => k >= 4,
        _ => true,
    };
    let nontrivial = class.is_snark() && cc4 && r.girth.is_some_and(|x| x >= 5);
    r.nontrivial = Some(nontrivial);
    let SnarkClass::Snark { critical, bicritical } = class else { return Ok(()) };
    if !nontrivial && !opts.include_trivial {
        return Ok(());
    }
    r.critical = Some(critical);
    r.bicritical = Some(bicritical);
    if opts.runs(Pass::Defect) {
        let d = defect(g)?.value;
        let w = oddness(g)?;
        r.defect = Some(d);
        r.oddness = Some(w);
        let gi = r.girth.unwrap_or(0);
        if d < gi.div_ceil(2) || d < (3 * w).div_ceil(2) {
            r.errors.push(format!("defect {d} below the girth or oddness bound"));
        }
    }
    if opts.runs(Pass::Hexagons) {
        let c = hexagon_counts(g)?;
        r.hexagons = Some(c);
        if r.defect.is_none_or(|d| d == 3) {
            r.hexagon_profile = Some(c.profile());
        }
    }
    if opts.runs(Pass::Pi) {
        match perfect_matching_index_within(g, 5, Budget::within(opts.timeout)) {
            Ok(p) => r.pi = Some(p),
            Err(Error::Timeout) => r.inconclusive.push(Pass::Pi),
            Err(e) => return Err(e),
        }
    }
    if opts.runs(Pass::Clusters) {
        let cs = five_clusters(g)?;
        r.clusters = Some(ClusterSummary { count: cs.len(), heavy: cs.iter().filter(|c| c.heavy).count() });
    }
    if opts.runs(Pass::Reduce) && r.defect.is_none_or(|d| d == 3) {
        match normalize(g) {
            Ok(nf) => r.normal_form = Some(nf.status),
            Err(Error::Precondition(_)) => {}
            Err(e) => r.errors.push(e.to_string()),
        }
    }
    Ok(())
}

/// Analyses every input on a pool of `opts.jobs` workers. Records come back
/// in input order.
pub fn run_census(inputs: &[GraphInput], opts: &CensusOptions) -> Result<(Vec<GraphRecord>, CensusReport)> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs)
        .build()
        .map_err(|e| Error::Precondition(e.to_string()))?;
    let records: Vec<GraphRecord> = pool.install(|| inputs.par_iter().map(|i| analyze_input(i, opts)).collect());
    let report = CensusReport::from_records(&records);
    Ok((records, report))
}

/// Table rows for one order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct OrderRow {
    pub order: usize,
    pub graphs: usize,
    pub snarks: usize,
    pub nontrivial: usize,
    pub critical: usize,
    /// Nontrivial snarks by defect.
    pub defects: BTreeMap<usize, usize>,
    /// Defect-3 nontrivial snarks by hexagon profile.
    pub profiles: BTreeMap<HexagonProfile, usize>,
    pub inconclusive: usize,
    pub errors: usize,
    /// Defect-3 nontrivial snarks without a double-core hexagon.
    pub without_double_core: Vec<String>,
}

impl OrderRow {
    pub fn defect_count(&self, d: usize) -> usize {
        self.defects.get(&d).copied().unwrap_or(0)
    }

    pub fn profile_count(&self, p: HexagonProfile) -> usize {
        self.profiles.get(&p).copied().unwrap_or(0)
    }

    /// Broken row sums, if any.
    pub fn violations(&self) -> Vec<String> {
        let mut v = Vec::new();
        let with_defect: usize = self.defects.values().sum();
        if with_defect != 0 && with_defect != self.nontrivial {
            v.push(format!("order {}: defect counts sum to {with_defect}, nontrivial {}", self.order, self.nontrivial));
        }
        let profiled: usize = self.profiles.values().sum();
        if profiled != 0 && !self.defects.is_empty() && profiled != self.defect_count(3) {
            v.push(format!("order {}: hexagon profiles sum to {profiled}, defect 3 count {}", self.order, self.defect_count(3)));
        }
        v
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub rows: BTreeMap<usize, OrderRow>,
}

impl CensusReport {
    pub fn from_records(records: &[GraphRecord]) -> Self {
        let mut rows: BTreeMap<usize, OrderRow> = BTreeMap::new();
        for r in records {
            let Some(n) = r.order else { continue };
            let row = rows.entry(n).or_insert_with(|| OrderRow { order: n, ..Default::default() });
            row.graphs += 1;
            row.errors += usize::from(!r.errors.is_empty());
            row.inconclusive += usize::from(!r.inconclusive.is_empty());
            if r.snark == Some(true) {
                row.snarks += 1;
            }
            if r.nontrivial != Some(true) {
                continue;
            }
            row.nontrivial += 1;
            row.critical += usize::from(r.critical == Some(true));
            if let Some(d) = r.defect {
                *row.defects.entry(d).or_default() += 1;
            }
            if let Some(p) = r.hexagon_profile {
                *row.profiles.entry(p).or_default() += 1;
                if r.hexagons.is_some_and(|h| h.double_core == 0) {
                    row.without_double_core.push(r.id.clone());
                }
            }
        }
        CensusReport { rows }
    }

    pub fn row(&self, order: usize) -> Option<&OrderRow> {
        self.rows.get(&order)
    }

    pub fn violations(&self) -> Vec<String> {
        self.rows.values().flat_map(|r| r.violations()).collect()
    }

    /// Nontrivial snarks by defect, one line per order.
    pub fn defect_csv(&self) -> Result<String> {
        #[derive(Serialize)]
        struct Line {
            order: usize,
            nontrivial: usize,
            critical: usize,
            df3: usize,
            df4: usize,
            df5: usize,
            df6: usize,
            df_higher: usize,
        }
        let lines = self.rows.values().map(|r| Line {
            order: r.order,
            nontrivial: r.nontrivial,
            critical: r.critical,
            df3: r.defect_count(3),
            df4: r.defect_count(4),
            df5: r.defect_count(5),
            df6: r.defect_count(6),
            df_higher: r.defects.range(7..).map(|(_, c)| c).sum(),
        });
        to_csv(lines)
    }

    /// Defect-3 nontrivial snarks by hexagon profile, one line per order.
    pub fn hexagon_csv(&self) -> Result<String> {
        #[derive(Serialize)]
        struct Line {
            order: usize,
            nontrivial: usize,
            critical: usize,
            double_core: usize,
            double_core_removable: usize,
            double_core_single_core: usize,
            double_core_single_core_removable: usize,
            other: usize,
        }
        let lines = self.rows.values().map(|r| Line {
            order: r.order,
            nontrivial: r.nontrivial,
            critical: r.critical,
            double_core: r.profile_count(HexagonProfile::DoubleCore),
            double_core_removable: r.profile_count(HexagonProfile::DoubleCoreRemovable),
            double_core_single_core: r.profile_count(HexagonProfile::DoubleCoreSingleCore),
            double_core_single_core_removable: r.profile_count(HexagonProfile::DoubleCoreSingleCoreRemovable),
            other: r.profile_count(HexagonProfile::Other),
        });
        to_csv(lines)
    }
}

fn to_csv<T: Serialize>(lines: impl Iterator<Item = T>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for l in lines {
        w.serialize(l).map_err(|e| Error::Io(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

/// One JSON object per record and line.
pub fn write_jsonl(records: &[GraphRecord], out: &mut impl Write) -> Result<()> {
    for r in records {
        let line = serde_json::to_string(r).map_err(|e| Error::Io(e.to_string()))?;
        writeln!(out, "{line}")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn petersen_input() -> GraphInput {
        GraphInput { id: "p:1".into(), graph6: "ICOf@pSb?".into() }
    }

    #[test]
    fn petersen_record() {
        let opts = CensusOptions { passes: vec![Pass::Defect, Pass::Hexagons, Pass::Pi, Pass::Clusters, Pass::Reduce], ..Default::default() };
        let r = analyze_input(&petersen_input(), &opts);
        assert!(r.errors.is_empty(), "{:?}", r.errors);
        assert_eq!(r.order, Some(10));
        assert_eq!(r.cyclic_connectivity, Some(Connectivity::Exact(5)));
        assert_eq!(r.nontrivial, Some(true));
        assert_eq!(r.critical, Some(true));
        assert_eq!(r.defect, Some(3));
        assert_eq!(r.oddness, Some(2));
        assert_eq!(r.hexagons.unwrap().double_core, 10);
        assert_eq!(r.hexagon_profile, Some(HexagonProfile::DoubleCore));
        assert_eq!(r.pi, Some(CoverIndex::Exact(5)));
        assert_eq!(r.clusters, Some(ClusterSummary { count: 1, heavy: 1 }));
        assert_eq!(r.normal_form, Some(NormalStatus::NontrivialDefect3));
    }

    #[test]
    fn absent_passes_leave_no_fields() {
        let opts = CensusOptions { passes: vec![], ..Default::default() };
        let r = analyze_input(&petersen_input(), &opts);
        let json = serde_json::to_string(&r).unwrap();
        assert!(!json.contains("defect"));
        assert!(json.contains("\"nontrivial\":true"));
    }

    #[test]
    fn bad_lines_become_errors() {
        let inputs = graph6_inputs("x", ">>graph6<<ICOf@pSb?\n\n!!\n");
        assert_eq!(inputs.len(), 2);
        assert_eq!(inputs[1].id, "x:3");
        let (recs, report) = run_census(&inputs, &CensusOptions { jobs: 1, ..Default::default() }).unwrap();
        assert!(!recs[1].errors.is_empty());
        let row = report.row(10).unwrap();
        assert_eq!((row.nontrivial, row.defect_count(3)), (1, 1));
        assert!(report.violations().is_empty());
        assert!(report.defect_csv().unwrap().starts_with("order,nontrivial,critical,df3,df4,df5,df6,df_higher\n10,1,1,1,0,0,0,0\n"));
    }
}
