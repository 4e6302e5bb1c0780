use super::{GraphRecord, HexagonCounts};
use serde::Serialize;

/// Open statements checked against census records.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Conjecture {
    /// Every critical snark has defect 3.
    CriticalDefect,
    /// In a critical snark every hexagon is double-core.
    CriticalDoubleCore,
    /// Every irreducible snark has defect 3.
    IrreducibleDefect,
    /// A nontrivial defect-3 snark whose core hexagons are all single-core.
    AllSingleCore,
    /// A non-removable hexagon that is not a core.
    NonRemovableNonCore,
}

impl Conjecture {
    pub const ALL: [Conjecture; 5] = [
        Conjecture::CriticalDefect,
        Conjecture::CriticalDoubleCore,
        Conjecture::IrreducibleDefect,
        Conjecture::AllSingleCore,
        Conjecture::NonRemovableNonCore,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Conjecture::CriticalDefect => "critical-defect",
            Conjecture::CriticalDoubleCore => "critical-double-core",
            Conjecture::IrreducibleDefect => "irreducible-defect",
            Conjecture::AllSingleCore => "all-single-core",
            Conjecture::NonRemovableNonCore => "non-removable-non-core",
        }
    }

    /// `Some(true)` for a counterexample, `None` when the record lacks data.
    fn refutes(self, r: &GraphRecord) -> Option<bool> {
        if r.nontrivial != Some(true) {
            return Some(false);
        }
        let hex = |f: fn(&HexagonCounts) -> bool| r.hexagons.as_ref().map(f);
        match self {
            Conjecture::CriticalDefect => match r.critical? {
                false => Some(false),
                true => Some(r.defect? != 3),
            },
            Conjecture::IrreducibleDefect => match r.bicritical? {
                false => Some(false),
                true => Some(r.defect? != 3),
            },
            Conjecture::CriticalDoubleCore => match r.critical? {
                false => Some(false),
                true => hex(|h| h.double_core != h.total()),
            },
            Conjecture::AllSingleCore => match r.defect? {
                3 => hex(|h| h.double_core == 0 && h.single_core > 0),
                _ => Some(false),
            },
            Conjecture::NonRemovableNonCore => hex(|h| h.non_core > 0),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub id: String,
    pub graph6: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub conjecture: Conjecture,
    /// Nontrivial snarks examined.
    pub checked: usize,
    pub max_order: Option<usize>,
    pub counterexamples: Vec<Witness>,
    /// Records missing the data the statement needs.
    pub undecided: Vec<String>,
}

impl ScanReport {
    pub fn summary(&self) -> String {
        let upto = self.max_order.map_or("-".to_string(), |n| n.to_string());
        if self.counterexamples.is_empty() {
            format!(
                "{}: no counterexample among {} nontrivial snarks up to order {upto} ({} undecided)",
                self.conjecture.name(),
                self.checked,
                self.undecided.len()
            )
        } else {
            format!("{}: {} counterexamples, first {}", self.conjecture.name(), self.counterexamples.len(), self.counterexamples[0].id)
        }
    }
}

pub fn scan(conjecture: Conjecture, records: &[GraphRecord]) -> ScanReport {
    let mut rep = ScanReport { conjecture, checked: 0, max_order: None, counterexamples: Vec::new(), undecided: Vec::new() };
    for r in records.iter().filter(|r| r.nontrivial == Some(true)) {
        rep.checked += 1;
        rep.max_order = rep.max_order.max(r.order);
        match conjecture.refutes(r) {
            Some(true) => rep.counterexamples.push(Witness { id: r.id.clone(), graph6: r.graph6.clone() }),
            Some(false) => {}
            None => rep.undecided.push(r.id.clone()),
        }
    }
    rep
}
