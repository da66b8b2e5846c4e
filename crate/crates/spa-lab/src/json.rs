//! JSON shapes for matrices, witness parameters, SPA reports, search outcomes
//! and verification dossiers.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use spa_lab_core::catalog::{Detection, StageResult};
use spa_lab_core::{
    BipartiteMatrix, CaseSolution, ProductVector, SearchOutcome, SpaReport, VerificationDossier,
    WitnessParams,
};

use crate::{Error, Result};

/// A Hermitian operator on `C^m ⊗ C^n`, entries row-major as `[re, im]`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub m: usize,
    pub n: usize,
    pub entries: Vec<[f64; 2]>,
}

impl From<&BipartiteMatrix> for MatrixJson {
    fn from(w: &BipartiteMatrix) -> Self {
        let (m, n) = w.dims();
        let d = w.dim();
        let entries = (0..d)
            .flat_map(|i| (0..d).map(move |j| (i, j)))
            .map(|(i, j)| {
                let z = w.entry(i, j);
                [z.re, z.im]
            })
            .collect();
        Self { m, n, entries }
    }
}

impl MatrixJson {
    pub fn to_matrix(&self) -> Result<BipartiteMatrix> {
        let d = self.m * self.n;
        if self.entries.len() != d * d {
            return Err(Error::EntryCount { m: self.m, n: self.n, expected: d * d, found: self.entries.len() });
        }
        let entries = self.entries.iter().map(|&[re, im]| Complex64::new(re, im)).collect();
        Ok(BipartiteMatrix::from_entries(self.m, self.n, entries)?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ParamsJson {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub theta: f64,
}

impl From<&WitnessParams> for ParamsJson {
    fn from(p: &WitnessParams) -> Self {
        Self { a: p.a, b: p.b, c: p.c, theta: p.theta }
    }
}

impl ParamsJson {
    pub fn to_params(self) -> Result<WitnessParams> {
        Ok(WitnessParams::new(self.a, self.b, self.c, self.theta)?)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClosedFormJson {
    pub alpha: f64,
    pub beta: f64,
    #[serde(rename = "type")]
    pub witness_type: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpaReportJson {
    pub alpha: f64,
    pub beta: f64,
    #[serde(rename = "type")]
    pub witness_type: String,
    pub rank: [usize; 2],
    pub spa: MatrixJson,
    pub spa_is_ppt: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub closed_form: Option<ClosedFormJson>,
}

impl From<&SpaReport> for SpaReportJson {
    fn from(r: &SpaReport) -> Self {
        Self {
            alpha: r.alpha,
            beta: r.beta,
            witness_type: r.witness_type.as_str().to_owned(),
            rank: [r.rank_signature.0, r.rank_signature.1],
            spa: MatrixJson::from(&r.spa_matrix),
            spa_is_ppt: r.spa_is_ppt,
            closed_form: None,
        }
    }
}

fn vector_json(v: &[Complex64]) -> Vec<[f64; 2]> {
    v.iter().map(|z| [z.re, z.im]).collect()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProductJson {
    pub phi: Vec<[f64; 2]>,
    pub psi: Vec<[f64; 2]>,
}

impl From<&ProductVector> for ProductJson {
    fn from(v: &ProductVector) -> Self {
        Self { phi: vector_json(v.phi()), psi: vector_json(v.psi()) }
    }
}

impl ProductJson {
    pub fn to_vector(&self) -> Result<ProductVector> {
        let back = |v: &[[f64; 2]]| v.iter().map(|&[re, im]| Complex64::new(re, im)).collect();
        Ok(ProductVector::new(back(&self.phi), back(&self.psi))?)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MinimumJson {
    pub value: f64,
    #[serde(flatten)]
    pub vector: ProductJson,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchOutcomeJson {
    pub best_value: f64,
    pub argmin: ProductJson,
    pub restarts_used: usize,
    pub converged_minima: Vec<MinimumJson>,
}

impl From<&SearchOutcome> for SearchOutcomeJson {
    fn from(o: &SearchOutcome) -> Self {
        Self {
            best_value: o.best_value,
            argmin: ProductJson::from(&o.argmin),
            restarts_used: o.restarts_used,
            converged_minima: o
                .converged_minima
                .iter()
                .map(|(value, v)| MinimumJson { value: *value, vector: ProductJson::from(v) })
                .collect(),
        }
    }
}

/// Non-finite values become `null`.
fn finite(x: f64) -> Option<f64> {
    x.is_finite().then_some(x)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StageJson {
    pub name: String,
    /// `null` when the stage is informational.
    pub pass: Option<bool>,
    pub value: Option<f64>,
    pub tolerance: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl From<&StageResult> for StageJson {
    fn from(s: &StageResult) -> Self {
        Self {
            name: s.name.to_owned(),
            pass: s.pass,
            value: finite(s.value),
            tolerance: s.tolerance,
            note: s.note.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DetectionJson {
    pub state: ParamsJson,
    pub pairing: f64,
    pub trace_pairing: f64,
}

impl From<&Detection> for DetectionJson {
    fn from(d: &Detection) -> Self {
        Self { state: ParamsJson::from(&d.state), pairing: d.pairing, trace_pairing: d.trace_pairing }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DossierJson {
    pub case: String,
    pub p: f64,
    pub theta: f64,
    pub params: ParamsJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub partner: Option<ParamsJson>,
    pub passed: bool,
    pub alpha: f64,
    pub beta: f64,
    pub rank: [usize; 2],
    pub edge_residual: Option<f64>,
    pub spa_entangled: String,
    pub detected_ppt_state: Option<DetectionJson>,
    pub spanning: [usize; 2],
    pub stages: Vec<StageJson>,
    pub notes: Vec<String>,
}

impl From<&VerificationDossier> for DossierJson {
    fn from(d: &VerificationDossier) -> Self {
        let s: &CaseSolution = &d.solution;
        let r = &d.classification;
        Self {
            case: s.case_tag.as_str().to_owned(),
            p: s.p,
            theta: s.theta,
            params: ParamsJson::from(&s.params),
            partner: s.partner_params.as_ref().map(ParamsJson::from),
            passed: d.passed(),
            alpha: r.alpha,
            beta: r.beta,
            rank: [r.rank_signature.0, r.rank_signature.1],
            edge_residual: finite(d.edge_residual),
            spa_entangled: d.spa_entangled.as_str().to_owned(),
            detected_ppt_state: d.detected_ppt_state.as_ref().map(DetectionJson::from),
            spanning: [d.spanning.0, d.spanning.1],
            stages: d.stages.iter().map(StageJson::from).collect(),
            notes: d.notes.clone(),
        }
    }
}
