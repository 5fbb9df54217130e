//! Run reports: one serde structure per command, rendered either as JSON or
//! as plain text from the same data.

mod text;

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::basis::{HilbertReport, IrrEnumeration};
use crate::freealg::{Alphabet, Poly};
use crate::presentation::PresentationBundle;
use crate::rewrite::{Completion, CompletionStatus, CompositionRecord, GsReport, ReductionTrace, RewriteSystem};
use crate::uq::TriangularCheck;

pub use text::render_text;

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct RunReport {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<InputSummary>,
    /// Overall verdict of commands that decide something.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gs: Option<GsSection>,
    /// One entry per reading of the full `U_q(A_N)` relation set.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub modes: Vec<ModeSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub completion: Option<CompletionSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub normal_form: Option<NormalFormSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub irr: Option<IrrSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hilbert: Option<HilbertSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub census: Option<CensusSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<Vec<Timing>>,
}

impl RunReport {
    pub fn new(command: impl Into<String>) -> Self {
        RunReport {
            command: command.into(),
            input: None,
            verdict: None,
            gs: None,
            modes: Vec::new(),
            completion: None,
            normal_form: None,
            irr: None,
            hilbert: None,
            census: None,
            timings: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn time(&mut self, phase: impl Into<String>, d: std::time::Duration) {
        self.timings.get_or_insert_with(Vec::new).push(Timing {
            phase: phase.into(),
            millis: d.as_secs_f64() * 1e3,
        });
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct InputSummary {
    pub name: String,
    /// SHA-256 of the exported text of the bundle.
    pub digest: String,
    pub generators: usize,
    pub relations: usize,
}

impl InputSummary {
    pub fn of(b: &PresentationBundle) -> Self {
        InputSummary {
            name: b.name.clone(),
            digest: digest(&b.export()),
            generators: b.alphabet.len(),
            relations: b.relations.len(),
        }
    }
}

pub fn digest(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct Timing {
    pub phase: String,
    pub millis: f64,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct StepEntry {
    pub relation: usize,
    pub position: usize,
    pub left: String,
    pub right: String,
    pub coeff: String,
}

pub fn trace_entries(t: &ReductionTrace, a: &Alphabet) -> Vec<StepEntry> {
    t.steps
        .iter()
        .map(|s| StepEntry {
            relation: s.relation,
            position: s.position,
            left: a.render(&s.a),
            right: a.render(&s.b),
            coeff: s.coeff.to_string(),
        })
        .collect()
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct CompositionEntry {
    pub kind: String,
    pub left: usize,
    pub right: usize,
    pub w: String,
    /// `trivial` when the composition reduces to zero, else `nontrivial`.
    pub status: String,
    pub normal_form: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<Vec<StepEntry>>,
}

impl CompositionEntry {
    pub fn of(r: &CompositionRecord, a: &Alphabet) -> Self {
        let c = &r.composition;
        CompositionEntry {
            kind: c.kind.as_str().to_string(),
            left: c.left,
            right: c.right,
            w: a.render(&c.w),
            status: if r.is_trivial() { "trivial" } else { "nontrivial" }.to_string(),
            normal_form: r.normal_form.render(a),
            trace: r.trace.as_ref().map(|t| trace_entries(t, a)),
        }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct GsSection {
    pub verdict: bool,
    pub compositions: usize,
    pub nontrivial: usize,
    pub records: Vec<CompositionEntry>,
}

impl GsSection {
    pub fn of(r: &GsReport, a: &Alphabet) -> Self {
        GsSection {
            verdict: r.verdict,
            compositions: r.records.len(),
            nontrivial: r.failures().count(),
            records: r.records.iter().map(|x| CompositionEntry::of(x, a)).collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct TriangularSection {
    pub cap: usize,
    pub holds: bool,
    pub irr_counts: Vec<u64>,
    pub product_counts: Vec<u64>,
    pub misfits: Vec<String>,
}

impl TriangularSection {
    pub fn of(t: &TriangularCheck, cap: usize, a: &Alphabet) -> Self {
        TriangularSection {
            cap,
            holds: t.holds(),
            irr_counts: t.irr_counts.clone(),
            product_counts: t.product_counts.clone(),
            misfits: t.misfits.iter().map(|w| a.render(w)).collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ModeSection {
    pub mode: String,
    pub input: InputSummary,
    /// How the extended relation set was closed: complete, truncated or round-limit.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub completion: Option<String>,
    pub gs: GsSection,
    /// Present only when the mode verifies.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub triangular: Option<TriangularSection>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct CompletionSection {
    /// complete, truncated or round-limit.
    pub status: String,
    pub rounds: usize,
    pub discarded: usize,
    pub added: Vec<String>,
    pub relations: Vec<String>,
}

impl CompletionSection {
    pub fn of(c: &Completion) -> Self {
        let a = c.system.alphabet();
        CompletionSection {
            status: match c.status {
                CompletionStatus::Complete => "complete",
                CompletionStatus::Truncated => "truncated",
            }
            .to_string(),
            rounds: c.rounds,
            discarded: c.discarded,
            added: c.added.iter().map(|p| p.render(a)).collect(),
            relations: c.system.polys().iter().map(|p| p.render(a)).collect(),
        }
    }

    pub fn round_limit(rounds: usize, partial: &RewriteSystem) -> Self {
        let a = partial.alphabet();
        CompletionSection {
            status: "round-limit".to_string(),
            rounds,
            discarded: 0,
            added: Vec::new(),
            relations: partial.polys().iter().map(|p| p.render(a)).collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct NormalFormSection {
    pub input: String,
    pub normal_form: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<Vec<StepEntry>>,
}

impl NormalFormSection {
    pub fn of(input: &Poly, t: &ReductionTrace, a: &Alphabet, with_trace: bool) -> Self {
        NormalFormSection {
            input: input.render(a),
            normal_form: t.result.render(a),
            trace: with_trace.then(|| trace_entries(t, a)),
        }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct DegreeWords {
    pub degree: u64,
    pub count: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub words: Option<Vec<String>>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct IrrSection {
    pub weights: Vec<u32>,
    pub cap: u64,
    pub degrees: Vec<DegreeWords>,
}

impl IrrSection {
    pub fn of(e: &IrrEnumeration, a: &Alphabet, list: bool) -> Self {
        IrrSection {
            weights: e.weights.clone(),
            cap: e.cap,
            degrees: e
                .by_degree
                .iter()
                .enumerate()
                .map(|(d, ws)| DegreeWords {
                    degree: d as u64,
                    count: ws.len() as u64,
                    words: list.then(|| ws.iter().map(|w| a.render(w)).collect()),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct HilbertSection {
    pub weights: Vec<u32>,
    pub cap: u64,
    pub counts: Vec<u64>,
}

impl HilbertSection {
    pub fn of(h: &HilbertReport, cap: u64) -> Self {
        HilbertSection {
            weights: h.weights.clone(),
            cap,
            counts: h.counts(),
        }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct CensusRow {
    pub case: u8,
    pub subcase: String,
    pub count: usize,
    pub trivial: usize,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct CensusSection {
    pub n: usize,
    pub compositions: usize,
    /// Every composition reduced to zero.
    pub all_trivial: bool,
    /// Number of distinct cases with at least one composition.
    pub cases_covered: usize,
    pub rows: Vec<CensusRow>,
    /// Compositions matching no table row, described verbatim.
    pub unclassifiable: Vec<String>,
}
