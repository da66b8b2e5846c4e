//! Searches over product vectors `φ⊗ψ`.
//!
//! Every objective here is a Hermitian form that is quadratic in `φ` for
//! fixed `ψ` and in `ψ` for fixed `φ`. Each half-step therefore has a
//! closed-form global optimum (the lowest eigenvector of a small contracted
//! matrix), and alternating the two half-steps never increases the value.
//! Restarts are seeded independently per restart index, so results do not
//! depend on how restarts are scheduled.

use alloc::vec::Vec;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::hermitian::{BipartiteMatrix, RANK_THRESHOLD, UNIT_NORM_TOL};
use crate::linalg::{self, DenseMatrix};

/// Minima at or below this value count as zeros of the form.
pub const ZERO_TOL: f64 = 1e-8;
/// Edge-state residual above which a PPT state is certified entangled.
pub const EDGE_THRESHOLD: f64 = 1e-6;
/// Minimum restart budget for an entanglement certificate.
pub const CERTIFY_RESTARTS: usize = 200;
/// Default budget for block-positivity oracles.
pub const ORACLE_RESTARTS: usize = 50;
/// Relative singular-value cutoff for [`spanning_rank`].
pub const SPAN_RANK_THRESHOLD: f64 = 1e-6;
/// Two product vectors with `|⟨φ⊗ψ|φ'⊗ψ'⟩|` above this are the same zero.
pub const DEDUP_FIDELITY: f64 = 1.0 - 1e-6;
/// Tolerance on the positivity precondition of [`edge_state_residual`].
pub const PPT_TOL: f64 = 1e-9;

/// Unit vectors `φ ∈ C^m`, `ψ ∈ C^n`, each with its first nonzero component
/// real and nonnegative.
#[derive(Clone, Debug, PartialEq)]
pub struct ProductVector {
    phi: Vec<Complex64>,
    psi: Vec<Complex64>,
}

impl ProductVector {
    pub fn new(phi: Vec<Complex64>, psi: Vec<Complex64>) -> Result<Self> {
        for v in [&phi, &psi] {
            let n = linalg::norm(v);
            if (n - 1.0).abs() > UNIT_NORM_TOL {
                return Err(Error::NotUnit(n));
            }
        }
        Ok(Self::gauge_fixed(phi, psi))
    }

    /// Normalizes both factors first; zero vectors are rejected.
    pub fn from_unnormalized(phi: Vec<Complex64>, psi: Vec<Complex64>) -> Result<Self> {
        Self::new(normalize(phi)?, normalize(psi)?)
    }

    fn gauge_fixed(mut phi: Vec<Complex64>, mut psi: Vec<Complex64>) -> Self {
        gauge_fix(&mut phi);
        gauge_fix(&mut psi);
        Self { phi, psi }
    }

    pub fn phi(&self) -> &[Complex64] {
        &self.phi
    }

    pub fn psi(&self) -> &[Complex64] {
        &self.psi
    }

    pub fn tensor(&self) -> Vec<Complex64> {
        linalg::kron(&self.phi, &self.psi)
    }

    /// `φ ⊗ ψ̄`, the vector whose expectation in `W^Γ` equals that of
    /// `φ ⊗ ψ` in `W`.
    pub fn partial_conjugate(&self) -> Self {
        Self::gauge_fixed(self.phi.clone(), self.psi.iter().map(|z| z.conj()).collect())
    }

    /// `|⟨φ⊗ψ|φ'⊗ψ'⟩|`.
    pub fn fidelity(&self, other: &Self) -> f64 {
        linalg::inner(&self.phi, &other.phi).norm() * linalg::inner(&self.psi, &other.psi).norm()
    }
}

fn normalize(mut v: Vec<Complex64>) -> Result<Vec<Complex64>> {
    let n = linalg::norm(&v);
    if !(n > 0.0 && n.is_finite()) {
        return Err(Error::NotUnit(n));
    }
    v.iter_mut().for_each(|z| *z /= n);
    Ok(v)
}

fn gauge_fix(v: &mut [Complex64]) {
    if let Some(lead) = v.iter().copied().find(|z| z.norm() > 1e-12) {
        let phase = lead.conj() / lead.norm();
        v.iter_mut().for_each(|z| *z *= phase);
    }
}

/// `f(φ, ψ) = ⟨φ⊗ψ|D|φ⊗ψ⟩ + ⟨φ⊗ψ̄|C|φ⊗ψ̄⟩` on `C^m ⊗ C^n`.
#[derive(Clone, Debug)]
pub struct ProductForm {
    dims: (usize, usize),
    direct: Option<DenseMatrix>,
    conjugated: Option<DenseMatrix>,
}

impl ProductForm {
    /// `⟨φ⊗ψ|W|φ⊗ψ⟩`.
    pub fn expectation(w: &BipartiteMatrix) -> Self {
        Self { dims: w.dims(), direct: Some(w.matrix().clone()), conjugated: None }
    }

    pub fn new(dims: (usize, usize), direct: Option<DenseMatrix>, conjugated: Option<DenseMatrix>) -> Self {
        Self { dims, direct, conjugated }
    }

    pub fn dims(&self) -> (usize, usize) {
        self.dims
    }

    pub fn value(&self, phi: &[Complex64], psi: &[Complex64]) -> f64 {
        let mut v = 0.0;
        if let Some(d) = &self.direct {
            v += d.quadratic_form(&linalg::kron(phi, psi));
        }
        if let Some(c) = &self.conjugated {
            let psi_bar: Vec<_> = psi.iter().map(|z| z.conj()).collect();
            v += c.quadratic_form(&linalg::kron(phi, &psi_bar));
        }
        v
    }

    /// `m × m` matrix `A` with `f(φ, ψ) = φ† A φ` for fixed `ψ`.
    pub fn for_first(&self, psi: &[Complex64]) -> DenseMatrix {
        let mut acc = DenseMatrix::zeros(self.dims.0);
        if let Some(d) = &self.direct {
            acc.add_assign(&contract_second(d, self.dims, psi));
        }
        if let Some(c) = &self.conjugated {
            let psi_bar: Vec<_> = psi.iter().map(|z| z.conj()).collect();
            acc.add_assign(&contract_second(c, self.dims, &psi_bar));
        }
        acc
    }

    /// `n × n` matrix `B` with `f(φ, ψ) = ψ† B ψ` for fixed `φ`.
    pub fn for_second(&self, phi: &[Complex64]) -> DenseMatrix {
        let mut acc = DenseMatrix::zeros(self.dims.1);
        if let Some(d) = &self.direct {
            acc.add_assign(&contract_first(d, self.dims, phi));
        }
        if let Some(c) = &self.conjugated {
            // ψ̄† C_φ ψ̄ = ψ† conj(C_φ) ψ
            acc.add_assign(&contract_first(c, self.dims, phi).conj());
        }
        acc
    }
}

/// `A_ij = Σ_kl ψ̄_k M[(i,k),(j,l)] ψ_l`.
fn contract_second(m: &DenseMatrix, (da, db): (usize, usize), psi: &[Complex64]) -> DenseMatrix {
    DenseMatrix::from_fn(da, |i, j| {
        let mut s = Complex64::new(0.0, 0.0);
        for k in 0..db {
            for l in 0..db {
                s += psi[k].conj() * m[(i * db + k, j * db + l)] * psi[l];
            }
        }
        s
    })
}

/// `B_kl = Σ_ij φ̄_i M[(i,k),(j,l)] φ_j`.
fn contract_first(m: &DenseMatrix, (da, db): (usize, usize), phi: &[Complex64]) -> DenseMatrix {
    DenseMatrix::from_fn(db, |k, l| {
        let mut s = Complex64::new(0.0, 0.0);
        for i in 0..da {
            for j in 0..da {
                s += phi[i].conj() * m[(i * db + k, j * db + l)] * phi[j];
            }
        }
        s
    })
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SearchConfig {
    pub restarts: usize,
    pub seed: u64,
    pub max_iterations: usize,
    /// A sweep that lowers the value by less than this ends the descent.
    pub stop_decrease: f64,
}

impl SearchConfig {
    pub fn new(restarts: usize, seed: u64) -> Self {
        Self { restarts, seed, max_iterations: 20_000, stop_decrease: 1e-13 }
    }
}

/// Result of one alternating descent.
#[derive(Clone, Debug, PartialEq)]
pub struct LocalMinimum {
    pub restart: usize,
    pub value: f64,
    pub vector: ProductVector,
    pub iterations: usize,
    /// Largest increase seen over any half-step; zero up to eigensolver noise.
    pub max_increase: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SearchOutcome {
    pub best_value: f64,
    pub argmin: ProductVector,
    pub restarts_used: usize,
    pub converged_minima: Vec<(f64, ProductVector)>,
}

impl SearchOutcome {
    /// Merges per-restart results in restart order; ties go to the lowest
    /// restart index.
    pub fn from_minima(mut minima: Vec<LocalMinimum>) -> Self {
        assert!(!minima.is_empty(), "at least one restart");
        minima.sort_by_key(|m| m.restart);
        let best = minima.iter().fold(&minima[0], |b, m| if m.value < b.value { m } else { b });
        let (best_value, argmin) = (best.value, best.vector.clone());
        let restarts_used = minima.len();
        let converged_minima = minima.into_iter().map(|m| (m.value, m.vector)).collect();
        Self { best_value, argmin, restarts_used, converged_minima }
    }
}

/// Runs independent restarts. Implementations may run them in any order or
/// in parallel; the merge sorts by restart index.
pub trait RestartExecutor: Sync {
    fn run(&self, restarts: usize, job: &(dyn Fn(usize) -> LocalMinimum + Sync)) -> Vec<LocalMinimum>;
}

/// Runs restarts one after another on the calling thread.
#[derive(Clone, Copy, Debug, Default)]
pub struct Sequential;

impl RestartExecutor for Sequential {
    fn run(&self, restarts: usize, job: &(dyn Fn(usize) -> LocalMinimum + Sync)) -> Vec<LocalMinimum> {
        (0..restarts).map(job).collect()
    }
}

/// Random unit vector, rotation-invariant (normalized complex Gaussian).
fn random_unit(dim: usize, rng: &mut ChaCha8Rng) -> Vec<Complex64> {
    loop {
        let v: Vec<Complex64> = (0..dim)
            .map(|_| Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)))
            .collect();
        if let Ok(u) = normalize(v) {
            return u;
        }
    }
}

/// Starting point of restart `index` under `seed`.
pub fn restart_start(dims: (usize, usize), seed: u64, index: usize) -> (Vec<Complex64>, Vec<Complex64>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    let phi = random_unit(dims.0, &mut rng);
    let psi = random_unit(dims.1, &mut rng);
    (phi, psi)
}

/// Alternating descent from `(phi, psi)`: `ψ ← argmin ψ†B(φ)ψ`, then
/// `φ ← argmin φ†A(ψ)φ`, until a sweep gains less than `stop_decrease`.
pub fn descend(
    form: &ProductForm,
    phi: Vec<Complex64>,
    psi: Vec<Complex64>,
    cfg: &SearchConfig,
    restart: usize,
) -> LocalMinimum {
    let mut phi = phi;
    let mut psi = psi;
    let mut value = form.value(&phi, &psi);
    let mut max_increase = f64::NEG_INFINITY;
    let mut iterations = 0;
    loop {
        iterations += 1;
        let second = linalg::eigh(&form.for_second(&phi)).expect("contracted form is Hermitian");
        psi = second.vector(0);
        let mid = second.values[0];
        let first = linalg::eigh(&form.for_first(&psi)).expect("contracted form is Hermitian");
        phi = first.vector(0);
        let next = first.values[0];

        max_increase = max_increase.max(mid - value).max(next - mid);
        let gained = value - next;
        value = next;
        if gained < cfg.stop_decrease || iterations >= cfg.max_iterations {
            break;
        }
    }
    let vector = ProductVector::gauge_fixed(phi, psi);
    let value = form.value(vector.phi(), vector.psi());
    LocalMinimum { restart, value, vector, iterations, max_increase }
}

/// Multi-start minimizer bound to a configuration and an executor.
#[derive(Clone, Copy)]
pub struct Searcher<'a> {
    pub config: SearchConfig,
    pub executor: &'a dyn RestartExecutor,
}

impl core::fmt::Debug for Searcher<'_> {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("Searcher").field("config", &self.config).finish_non_exhaustive()
    }
}

impl<'a> Searcher<'a> {
    pub fn new(config: SearchConfig, executor: &'a dyn RestartExecutor) -> Self {
        Self { config, executor }
    }

    pub fn sequential(restarts: usize, seed: u64) -> Searcher<'static> {
        Searcher { config: SearchConfig::new(restarts, seed), executor: &Sequential }
    }

    pub fn with_restarts(&self, restarts: usize) -> Self {
        Self { config: SearchConfig { restarts, ..self.config }, executor: self.executor }
    }

    pub fn minimize_form(&self, form: &ProductForm) -> Result<SearchOutcome> {
        if self.config.restarts < 1 {
            return Err(Error::NoRestarts);
        }
        let cfg = self.config;
        let job = |index: usize| {
            let (phi, psi) = restart_start(form.dims(), cfg.seed, index);
            descend(form, phi, psi, &cfg, index)
        };
        Ok(SearchOutcome::from_minima(self.executor.run(cfg.restarts, &job)))
    }

    pub fn minimize(&self, w: &BipartiteMatrix) -> Result<SearchOutcome> {
        self.minimize_form(&ProductForm::expectation(w))
    }

    /// Distinct converged minima with value `<= zero_tol`.
    pub fn zeros(&self, w: &BipartiteMatrix, zero_tol: f64) -> Result<Vec<ProductVector>> {
        let outcome = self.minimize(w)?;
        Ok(dedup(outcome.converged_minima.into_iter().filter(|(v, _)| *v <= zero_tol).map(|(_, p)| p)))
    }

    /// Minimum over unit `e, f` of the squared distance of `e⊗f` from the
    /// range of `rho` plus that of `e⊗f̄` from the range of `rho^Γ`.
    pub fn edge_residual(&self, rho: &BipartiteMatrix) -> Result<f64> {
        let gamma = rho.partial_transpose();
        let worst = rho.min_eigenvalue().min(gamma.min_eigenvalue());
        if worst < -PPT_TOL {
            return Err(Error::NotPpt(worst));
        }
        let projector = |m: &BipartiteMatrix| {
            let ker = m.kernel(RANK_THRESHOLD);
            (!ker.is_empty()).then(|| {
                let mut p = DenseMatrix::zeros(m.dim());
                ker.iter().for_each(|k| p.add_assign(&DenseMatrix::outer(k)));
                p
            })
        };
        let (direct, conjugated) = (projector(rho), projector(&gamma));
        if direct.is_none() && conjugated.is_none() {
            return Ok(0.0);
        }
        let form = ProductForm::new(rho.dims(), direct, conjugated);
        Ok(self.minimize_form(&form)?.best_value.max(0.0))
    }

    /// Runs at least [`CERTIFY_RESTARTS`] restarts.
    pub fn edge_verdict(&self, rho: &BipartiteMatrix) -> Result<EdgeVerdict> {
        let searcher = self.with_restarts(self.config.restarts.max(CERTIFY_RESTARTS));
        let residual = searcher.edge_residual(rho)?;
        Ok(if residual > EDGE_THRESHOLD { EdgeVerdict::EntangledEdge } else { EdgeVerdict::Inconclusive })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EdgeVerdict {
    EntangledEdge,
    /// A small residual is not evidence of separability.
    Inconclusive,
}

impl EdgeVerdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::EntangledEdge => "EntangledEdge",
            Self::Inconclusive => "Inconclusive",
        }
    }
}

fn dedup(vectors: impl IntoIterator<Item = ProductVector>) -> Vec<ProductVector> {
    let mut kept: Vec<ProductVector> = Vec::new();
    for v in vectors {
        if kept.iter().all(|k| k.fidelity(&v) <= DEDUP_FIDELITY) {
            kept.push(v);
        }
    }
    kept
}

pub fn minimize_product_expectation(w: &BipartiteMatrix, restarts: usize, seed: u64) -> Result<SearchOutcome> {
    Searcher::sequential(restarts, seed).minimize(w)
}

pub fn zero_product_vectors(
    w: &BipartiteMatrix,
    restarts: usize,
    seed: u64,
    zero_tol: f64,
) -> Result<Vec<ProductVector>> {
    Searcher::sequential(restarts, seed).zeros(w, zero_tol)
}

/// Numerical rank of the span of `{φ⊗ψ}`: singular values above
/// [`SPAN_RANK_THRESHOLD`] times the largest.
pub fn spanning_rank(vectors: &[ProductVector]) -> usize {
    let Some(first) = vectors.first() else {
        return 0;
    };
    let dim = first.phi.len() * first.psi.len();
    let mut gram = DenseMatrix::zeros(dim);
    for v in vectors {
        gram.add_assign(&DenseMatrix::outer(&v.tensor()));
    }
    let values = linalg::eigvalsh(&gram).expect("Gram matrix is Hermitian");
    let singular: Vec<f64> = values.iter().map(|x| libm::sqrt(x.max(0.0))).collect();
    let top = singular.iter().fold(0.0_f64, |m, &s| m.max(s));
    singular.iter().filter(|&&s| s > SPAN_RANK_THRESHOLD * top).count()
}

pub fn edge_state_residual(rho: &BipartiteMatrix, restarts: usize, seed: u64) -> Result<f64> {
    Searcher::sequential(restarts, seed).edge_residual(rho)
}

pub fn is_entangled_by_edge_criterion(rho: &BipartiteMatrix, restarts: usize, seed: u64) -> Result<EdgeVerdict> {
    Searcher::sequential(restarts, seed).edge_verdict(rho)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::witness::{build_witness, WitnessParams};
    use alloc::vec;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn basis(k: usize) -> Vec<Complex64> {
        let mut v = vec![c(0.0); 3];
        v[k] = c(1.0);
        v
    }

    fn catalog_witness() -> BipartiteMatrix {
        let theta = libm::acos(2.0 / 3.0);
        build_witness(&WitnessParams::new(2.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0, theta).unwrap())
    }

    #[test]
    fn identity_minimum_is_one() {
        let out = minimize_product_expectation(&BipartiteMatrix::identity(3, 3), 5, 1).unwrap();
        assert!((out.best_value - 1.0).abs() < 1e-12);
        assert_eq!(out.restarts_used, 5);
        assert!(zero_product_vectors(&BipartiteMatrix::identity(3, 3), 5, 1, ZERO_TOL).unwrap().is_empty());
    }

    #[test]
    fn zero_restarts_rejected() {
        assert_eq!(
            minimize_product_expectation(&BipartiteMatrix::identity(3, 3), 0, 1),
            Err(Error::NoRestarts)
        );
    }

    #[test]
    fn diagonal_entry_as_expectation() {
        // index (0,1) of the family diagonal is c
        let p = WitnessParams::new(0.3, 0.7, 1.9, 0.4).unwrap();
        let w = build_witness(&p);
        assert!((w.product_expectation(&basis(0), &basis(1)).unwrap() - 1.9).abs() < 1e-15);
    }

    #[test]
    fn boundary_witness_has_zero_minimum() {
        let out = minimize_product_expectation(&catalog_witness(), 50, 3).unwrap();
        assert!(out.best_value.abs() < 1e-9, "{}", out.best_value);
    }

    #[test]
    fn perturbed_witness_goes_negative() {
        let w = build_witness(&WitnessParams::new(1.0, 0.5, 0.5, 0.0).unwrap());
        let shifted = BipartiteMatrix::new(3, 3, w.matrix().lincomb(1.0, &DenseMatrix::identity(9), -0.01))
            .unwrap();
        let out = minimize_product_expectation(&shifted, 50, 3).unwrap();
        assert!(out.best_value < 0.0);
    }

    #[test]
    fn descent_is_monotone() {
        let w = catalog_witness();
        let form = ProductForm::expectation(&w);
        let cfg = SearchConfig::new(1, 0);
        for index in 0..30 {
            let (phi, psi) = restart_start((3, 3), 17, index);
            let m = descend(&form, phi, psi, &cfg, index);
            assert!(m.max_increase <= 1e-13, "increase {}", m.max_increase);
        }
    }

    #[test]
    fn gauge_phase_of_start_is_irrelevant() {
        let w = catalog_witness();
        let form = ProductForm::expectation(&w);
        let cfg = SearchConfig::new(1, 0);
        for index in 0..10 {
            let (phi, psi) = restart_start((3, 3), 9, index);
            let phase = Complex64::from_polar(1.0, 1.234);
            let rotated: Vec<_> = phi.iter().map(|z| z * phase).collect();
            let a = descend(&form, phi, psi.clone(), &cfg, index).value;
            let b = descend(&form, rotated, psi, &cfg, index).value;
            assert!((a - b).abs() < 1e-10);
        }
    }

    #[test]
    fn deterministic_for_fixed_seed() {
        let w = catalog_witness();
        let a = minimize_product_expectation(&w, 20, 42).unwrap();
        let b = minimize_product_expectation(&w, 20, 42).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.best_value.to_bits(), b.best_value.to_bits());
    }

    #[test]
    fn spanning_rank_basics() {
        let basis_vectors: Vec<_> = (0..3)
            .flat_map(|i| (0..3).map(move |k| ProductVector::new(basis(i), basis(k)).unwrap()))
            .collect();
        assert_eq!(spanning_rank(&basis_vectors), 9);
        assert_eq!(spanning_rank(&basis_vectors[..1]), 1);
        let dup = vec![basis_vectors[4].clone(), basis_vectors[4].clone(), basis_vectors[2].clone()];
        assert_eq!(spanning_rank(&dup), 2);
        assert_eq!(spanning_rank(&[]), 0);
    }

    #[test]
    fn product_vector_gauge_and_validation() {
        let i = Complex64::new(0.0, 1.0);
        let v = ProductVector::new(vec![i, c(0.0), c(0.0)], basis(1)).unwrap();
        assert_eq!(v.phi()[0], c(1.0));
        assert!(ProductVector::new(vec![c(2.0), c(0.0), c(0.0)], basis(1)).is_err());
        assert!(ProductVector::from_unnormalized(vec![c(0.0); 3], basis(1)).is_err());
    }

    #[test]
    fn partial_conjugation_links_w_and_gamma() {
        let w = catalog_witness();
        let g = w.partial_transpose();
        for index in 0..10 {
            let (phi, psi) = restart_start((3, 3), 23, index);
            let v = ProductVector::new(phi, psi).unwrap();
            let u = v.partial_conjugate();
            let lhs = w.product_expectation(v.phi(), v.psi()).unwrap();
            let rhs = g.product_expectation(u.phi(), u.psi()).unwrap();
            assert!((lhs - rhs).abs() < 1e-13);
        }
    }

    #[test]
    fn edge_residual_trivial_cases() {
        let mixed = BipartiteMatrix::identity(3, 3).scale(1.0 / 9.0);
        assert_eq!(edge_state_residual(&mixed, 5, 0).unwrap(), 0.0);
        assert_eq!(is_entangled_by_edge_criterion(&mixed, 5, 0).unwrap(), EdgeVerdict::Inconclusive);

        // pure product state mixed into a rank-deficient diagonal: e0⊗e1 is in both ranges
        let pure = DenseMatrix::outer(&linalg::kron(&basis(0), &basis(1)));
        let diag = DenseMatrix::from_real_diagonal(&[0.0, 0.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 0.0]);
        let rho = BipartiteMatrix::new(3, 3, diag.lincomb(1.0, &pure, 1.0)).unwrap();
        assert!(edge_state_residual(&rho, 20, 0).unwrap() < 1e-12);
    }

    #[test]
    fn edge_residual_rejects_npt() {
        let w = build_witness(&WitnessParams::new(1.0, 1.0, 1.0, 0.0).unwrap());
        assert!(matches!(edge_state_residual(&w, 5, 0), Err(Error::NotPpt(_))));
    }
}
