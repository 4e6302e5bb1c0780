//! Acceptance suite. Prints one line per criterion; a computed mismatch
//! fails the target, missing census data is reported as not run.

#![allow(clippy::absurd_extreme_comparisons)]

mod common;

use common::{census, census_path, defect_three_seeds, isomorphic, oracle_defect, synthesize};
use defect_lab::census::{read_graph6_file, run_census, write_jsonl, CensusOptions, CensusReport, HexagonProfile, Pass};
use defect_lab::clusters::{five_clusters, heavy_inflation_survey};
use defect_lab::colouring::{classify_snark, kaszonyi};
use defect_lab::constructions::{
    build_heavy_cluster_snark, example_34, petersen_isochromatic_pole, validate_heavy_cluster_snark, OutputWiring, Wiring,
};
use defect_lab::covers::{check_sum_index, perfect_matching_index, CoverIndex};
use defect_lab::graph::{contract, cyclic_edge_connectivity, girth, induced_cycles, CubicGraph};
use defect_lab::matching::{classify_hexagon, core_of, defect, defect_is_three, oddness, HexagonClass};
use defect_lab::named;
use defect_lab::reduction::{normalize_with, NormalStatus, NormalizeOptions, Verification};
use rand::SeedableRng;
use std::time::{Duration, Instant};

/// Every count below is compared exactly.
const COUNT_TOLERANCE: usize = 0;

const ORDERS: [usize; 7] = [10, 18, 20, 22, 24, 26, 28];
const NONTRIVIAL: [usize; 7] = [1, 2, 6, 20, 38, 280, 2900];
const CRITICAL: [usize; 7] = [1, 2, 1, 2, 0, 111, 33];
/// Double-core, with removable, with single-core, with both.
const PROFILES: [[usize; 4]; 7] = [
    [1, 0, 0, 0],
    [2, 0, 0, 0],
    [1, 0, 5, 0],
    [3, 0, 17, 0],
    [1, 6, 22, 9],
    [112, 63, 21, 84],
    [126, 706, 1374, 693],
];
const DF5_AT_28: usize = 1;

const SYNTHESISED: usize = 200;
const SUM_INSTANCES: usize = 20;

const BUDGET_PETERSEN: Duration = Duration::from_secs(1);
const BUDGET_ORACLE: Duration = Duration::from_secs(300);
const BUDGET_TABLES: Duration = Duration::from_secs(1800);
const BUDGET_REDUCTION: Duration = Duration::from_secs(300);
const BUDGET_INFLATION: Duration = Duration::from_secs(600);
const BUDGET_CONSTRUCTION: Duration = Duration::from_secs(120);
const BUDGET_SUMS: Duration = Duration::from_secs(600);

type Criterion<'a> = Box<dyn Fn() -> Result<Verdict, Verdict> + 'a>;

enum Verdict {
    Pass(String),
    Fail(String),
    NotRun(String),
}

fn within(detail: String, start: Instant, budget: Duration) -> Verdict {
    let t = start.elapsed();
    if t <= budget {
        Verdict::Pass(format!("{detail}, {:.1}s", t.as_secs_f64()))
    } else {
        Verdict::Fail(format!("{detail}, took {:.1}s of {}s", t.as_secs_f64(), budget.as_secs()))
    }
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), Verdict> {
    if cond {
        Ok(())
    } else {
        Err(Verdict::Fail(msg()))
    }
}

fn available_orders() -> (Vec<usize>, Vec<usize>) {
    ORDERS.iter().partition(|&&o| census_path(o).is_file())
}

fn missing_note(missing: &[usize]) -> String {
    format!("missing census data for orders {missing:?}")
}

fn petersen_suite() -> Result<Verdict, Verdict> {
    let start = Instant::now();
    let p = named::petersen();
    let d = defect(&p).unwrap();
    check(d.value == 3, || format!("defect {}", d.value))?;
    let core = core_of(&p, &d.witness).unwrap();
    check(core.single_circuit(6).is_some(), || "optimal core is not a 6-cycle".into())?;
    let hexagons = induced_cycles(&p, 6);
    check(hexagons.len() == 10, || format!("{} hexagons", hexagons.len()))?;
    for c in &hexagons {
        let k = classify_hexagon(&p, c).unwrap();
        check(k == HexagonClass::DoubleCore, || format!("hexagon {:?} is {k:?}", c.vertices))?;
    }
    for e in 0..p.edge_count() {
        let psi = kaszonyi(&p, e).unwrap();
        check(psi == 1, || format!("kaszonyi({e}) = {psi}"))?;
    }
    let pi = perfect_matching_index(&p, 6).unwrap();
    check(pi == CoverIndex::Exact(5), || format!("pi {pi:?}"))?;
    let w = oddness(&p).unwrap();
    check(w == 2 && 2 * d.value >= 3 * w, || format!("oddness {w}"))?;
    Ok(within("df 3, 10 double-core hexagons, kaszonyi 1 on 15 edges, pi 5, oddness 2".into(), start, BUDGET_PETERSEN))
}

fn fixture_snarks(order: usize) -> Vec<CubicGraph> {
    census(order).unwrap_or_default().into_iter().filter(|g| classify_snark(g).map(|c| c.is_snark()).unwrap_or(false)).collect()
}

fn oracle_equivalence() -> Result<Verdict, Verdict> {
    let start = Instant::now();
    let (have, missing) = available_orders();
    let mut n = 0;
    for &o in have.iter().filter(|&&o| o <= 26) {
        for g in fixture_snarks(o) {
            let brute = oracle_defect(&g);
            let fast = defect_is_three(&g).unwrap().is_some();
            check((brute == Some(3)) == fast, || format!("order {o}: oracle {brute:?}, hexagon test {fast}"))?;
            n += 1;
        }
    }
    let detail = format!("{n} snarks agree");
    let missing: Vec<usize> = missing.into_iter().filter(|&o| o <= 26).collect();
    if !missing.is_empty() {
        return Ok(Verdict::NotRun(format!("{detail}; {}", missing_note(&missing))));
    }
    Ok(within(detail, start, BUDGET_ORACLE))
}

struct CensusRun {
    report: CensusReport,
    elapsed: Duration,
}

fn census_run(orders: &[usize]) -> CensusRun {
    let start = Instant::now();
    let mut inputs = Vec::new();
    for &o in orders {
        inputs.extend(read_graph6_file(&census_path(o)).unwrap());
    }
    let opts = CensusOptions { passes: vec![Pass::Defect, Pass::Hexagons], ..Default::default() };
    let (_, report) = run_census(&inputs, &opts).unwrap();
    CensusRun { report, elapsed: start.elapsed() }
}

fn table_one(run: &CensusRun, have: &[usize], missing: &[usize]) -> Result<Verdict, Verdict> {
    check(run.report.violations().is_empty(), || format!("{:?}", run.report.violations()))?;
    for &o in have {
        let i = ORDERS.iter().position(|&x| x == o).unwrap();
        let row = run.report.row(o).cloned().unwrap_or_default();
        let df5 = if o == 28 { DF5_AT_28 } else { 0 };
        let df3 = NONTRIVIAL[i] - df5;
        let got = (row.nontrivial, row.critical, row.defect_count(3), row.defect_count(5));
        let want = (NONTRIVIAL[i], CRITICAL[i], df3, df5);
        let close = |a: usize, b: usize| a.abs_diff(b) <= COUNT_TOLERANCE;
        check(
            close(got.0, want.0) && close(got.1, want.1) && close(got.2, want.2) && close(got.3, want.3),
            || format!("order {o}: nontrivial/critical/df3/df5 {got:?}, expected {want:?}"),
        )?;
    }
    let detail = format!("orders {have:?} match");
    if !missing.is_empty() {
        return Ok(Verdict::NotRun(format!("{detail}; {}", missing_note(missing))));
    }
    Ok(if run.elapsed <= BUDGET_TABLES { Verdict::Pass(detail) } else { Verdict::Fail(format!("{detail}, too slow")) })
}

fn table_two(run: &CensusRun, have: &[usize], missing: &[usize]) -> Result<Verdict, Verdict> {
    for &o in have {
        let i = ORDERS.iter().position(|&x| x == o).unwrap();
        let row = run.report.row(o).cloned().unwrap_or_default();
        let got = HexagonProfile::TABLE.map(|p| row.profile_count(p));
        let close = got.iter().zip(&PROFILES[i]).all(|(a, b)| a.abs_diff(*b) <= COUNT_TOLERANCE);
        check(close, || format!("order {o}: {got:?}, expected {:?}", PROFILES[i]))?;
        check(row.without_double_core.is_empty(), || format!("order {o}: {:?}", row.without_double_core))?;
    }
    let detail = format!("orders {have:?} match");
    if !missing.is_empty() {
        return Ok(Verdict::NotRun(format!("{detail}; {}", missing_note(missing))));
    }
    Ok(if run.elapsed <= BUDGET_TABLES { Verdict::Pass(detail) } else { Verdict::Fail(format!("{detail}, too slow")) })
}

fn reduction_soundness() -> Result<Verdict, Verdict> {
    let start = Instant::now();
    let seeds = defect_three_seeds();
    let mut rng = rand::rngs::StdRng::seed_from_u64(0x5eed);
    let opts = NormalizeOptions { verification: Verification::Exhaustive, check_lemmas: true };
    let (mut accepted, mut tried, mut triangle_forms) = (0, 0, 0);
    let mut kinds: std::collections::BTreeMap<&str, usize> = Default::default();
    while accepted < SYNTHESISED {
        tried += 1;
        check(tried <= 50 * SYNTHESISED, || format!("only {accepted} defect-3 graphs in {tried} attempts"))?;
        let g = synthesize(&seeds, &mut rng);
        if oracle_defect(&g) != Some(3) {
            continue;
        }
        accepted += 1;
        let nf = normalize_with(&g, opts).map_err(|e| Verdict::Fail(format!("graph {accepted}: {e}")))?;
        for s in &nf.trace {
            let d = oracle_defect(&s.after);
            check(d == Some(3), || format!("graph {accepted}: {} step gives defect {d:?}", s.kind.as_str()))?;
        }
        for s in &nf.trace {
            *kinds.entry(s.kind.as_str()).or_default() += 1;
        }
        match nf.status {
            NormalStatus::NontrivialDefect3 => {
                let ok = girth(&nf.graph).unwrap_or(0) >= 5 && cyclic_edge_connectivity(&nf.graph, 4).unwrap().at_least(4);
                check(ok, || format!("graph {accepted}: normal form is not nontrivial"))?;
            }
            NormalStatus::EssentialTriangleForm => {
                triangle_forms += 1;
                let k = contract(&nf.graph, &nf.essential_triangle.unwrap()).unwrap().graph;
                check(oracle_defect(&k).unwrap_or(0) >= 4, || format!("graph {accepted}: triangle is not essential"))?;
            }
        }
    }
    let detail = format!("{accepted} graphs from {tried} attempts, steps {kinds:?}, {triangle_forms} essential-triangle forms, 0 violations");
    Ok(within(detail, start, BUDGET_REDUCTION))
}

fn inflation_biconditional() -> Result<Verdict, Verdict> {
    let start = Instant::now();
    let (s, report) = example_34().unwrap();
    let d = defect(&s.graph).unwrap().value;
    let cc = cyclic_edge_connectivity(&s.graph, 6).unwrap().value();
    check(d == 4 && cc == Some(4) && report.z_heavy, || format!("df {d}, cc {cc:?}, heavy {}", report.z_heavy))?;
    let survey = heavy_inflation_survey(&s.graph).unwrap();
    let disagree: Vec<usize> = (0..survey.len()).filter(|&v| !survey[v].agrees()).collect();
    check(disagree.is_empty(), || format!("disagreement at vertices {disagree:?}"))?;
    let heavy = survey.iter().filter(|c| c.predicted).count();
    Ok(within(format!("{} vertices agree, {heavy} in heavy clusters; no order-28 defect-5 fixture supplied", survey.len()), start, BUDGET_INFLATION))
}

fn construction_validation() -> Result<Verdict, Verdict> {
    let start = Instant::now();
    let pole = petersen_isochromatic_pole();
    let wirings = OutputWiring::all();
    for &w in &wirings {
        let s = build_heavy_cluster_snark([&pole, &pole, &pole], w).unwrap();
        let (r, d) = validate_heavy_cluster_snark(&s).unwrap();
        check(r.passes() && d.value == 4, || format!("wiring {w:?}: {r:?}"))?;
        let z_in_heavy = five_clusters(&s.graph).unwrap().iter().any(|c| c.heavy && s.z_vertices.iter().all(|v| c.vertices.contains(v)));
        check(z_in_heavy, || format!("wiring {w:?}: hexapole not in a heavy cluster"))?;
    }
    Ok(within(format!("{} wirings: snark, nontrivial, no core inside Z, df 4, Z heavy", wirings.len()), start, BUDGET_CONSTRUCTION))
}

fn sum_instances() -> Result<Verdict, Verdict> {
    let start = Instant::now();
    let (have, missing) = available_orders();
    let p = named::petersen();
    let mut fixtures = 0;
    for &o in have.iter().filter(|&&o| o <= 26) {
        for g in fixture_snarks(o) {
            if defect_is_three(&g).unwrap().is_none() {
                continue;
            }
            fixtures += 1;
            let pi = perfect_matching_index(&g, 6).unwrap();
            check(matches!(pi, CoverIndex::Exact(4) | CoverIndex::Exact(5)), || format!("order {o}: pi {pi:?}"))?;
            if cyclic_edge_connectivity(&g, 6).unwrap().at_least(4) && !isomorphic(&g, &p) {
                check(pi == CoverIndex::Exact(4), || format!("order {o}: cyclically 4-connected with pi {pi:?}"))?;
            }
        }
    }
    let hs = [named::k33(), named::k4(), named::prism(), named::cube(), named::k33()];
    let mut instances = 0;
    for (i, h) in hs.iter().enumerate() {
        for v in [0, i % h.vertex_count()] {
            for w in Wiring::all().into_iter().take(3) {
                let r = check_sum_index(&p, (i * 3) % 10, h, v, w).unwrap();
                check(r.agree, || format!("sum with {h:?} at {v}: {r:?}"))?;
                instances += 1;
            }
        }
    }
    check(instances >= SUM_INSTANCES, || format!("only {instances} sum instances"))?;
    let detail = format!("{fixtures} defect-3 fixtures with pi in {{4,5}}, {instances} sums agree");
    let missing: Vec<usize> = missing.into_iter().filter(|&o| o <= 26).collect();
    if !missing.is_empty() {
        return Ok(Verdict::NotRun(format!("{detail}; {}", missing_note(&missing))));
    }
    Ok(within(detail, start, BUDGET_SUMS))
}

fn determinism() -> Result<Verdict, Verdict> {
    let mut inputs = Vec::new();
    for o in [18, 20, 22] {
        inputs.extend(read_graph6_file(&census_path(o)).unwrap());
    }
    let bytes = |jobs: usize| {
        let opts = CensusOptions {
            passes: vec![Pass::Defect, Pass::Hexagons, Pass::Pi, Pass::Clusters],
            jobs,
            ..Default::default()
        };
        let (records, report) = run_census(&inputs, &opts).unwrap();
        let mut out = Vec::new();
        write_jsonl(&records, &mut out).unwrap();
        out.extend(report.defect_csv().unwrap().bytes());
        out.extend(report.hexagon_csv().unwrap().bytes());
        out
    };
    let first = bytes(1);
    for jobs in [8, 1, 8] {
        check(bytes(jobs) == first, || format!("output differs with {jobs} jobs"))?;
    }
    Ok(Verdict::Pass(format!("{} graphs, {} bytes identical over jobs 1, 8, 1, 8", inputs.len(), first.len())))
}

fn main() {
    let (have, missing) = available_orders();
    let run = census_run(&have);
    let criteria: Vec<(&str, Criterion)> = vec![
        ("Petersen suite", Box::new(petersen_suite)),
        ("defect oracle equivalence", Box::new(oracle_equivalence)),
        ("defect table", Box::new(|| table_one(&run, &have, &missing))),
        ("hexagon table", Box::new(|| table_two(&run, &have, &missing))),
        ("reduction soundness", Box::new(reduction_soundness)),
        ("heavy inflation biconditional", Box::new(inflation_biconditional)),
        ("construction validation", Box::new(construction_validation)),
        ("matching index instances", Box::new(sum_instances)),
        ("census determinism", Box::new(determinism)),
    ];
    let mut mismatches = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let v = f().unwrap_or_else(|e| e);
        let line = match v {
            Verdict::Pass(d) => format!("PASS  {d}"),
            Verdict::NotRun(d) => format!("FAIL  (not run) {d}"),
            Verdict::Fail(d) => {
                mismatches += 1;
                format!("FAIL  {d}")
            }
        };
        println!("criterion {} {name}: {line}", i + 1);
    }
    if mismatches > 0 {
        eprintln!("{mismatches} criteria failed");
        std::process::exit(1);
    }
}
