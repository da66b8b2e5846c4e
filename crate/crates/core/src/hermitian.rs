//! Hermitian matrices on a bipartite space `C^m ⊗ C^n`.
//!
//! Basis index of `e_i ⊗ e_k` is `i * n + k`, so the matrix is an `m × m`
//! array of `n × n` blocks. The partial transpose acts on the second factor.

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{self, DenseMatrix, EigenConfig, Eigh};

pub type ComplexScalar = Complex64;

/// Anti-Hermitian residue tolerated (and symmetrized away) at construction.
pub const ANTI_HERMITIAN_REJECT: f64 = 1e-9;
/// Input vectors to expectation values must be unit norm to this tolerance.
pub const UNIT_NORM_TOL: f64 = 1e-12;
/// Default relative threshold for numerical rank and kernels.
pub const RANK_THRESHOLD: f64 = 1e-7;

/// Dense Hermitian matrix with its bipartite dimensions `(m, n)`.
#[derive(Clone, Debug, PartialEq)]
pub struct BipartiteMatrix {
    dim_a: usize,
    dim_b: usize,
    matrix: DenseMatrix,
}

/// Eigenvalues in ascending order.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    pub eigenvalues: Vec<f64>,
}

impl Spectrum {
    pub fn min(&self) -> f64 {
        self.eigenvalues[0]
    }

    pub fn max(&self) -> f64 {
        *self.eigenvalues.last().unwrap()
    }

    pub fn sum(&self) -> f64 {
        self.eigenvalues.iter().sum()
    }

    /// Count of eigenvalues with `|λ| > rel * max |λ|`.
    pub fn numerical_rank(&self, rel: f64) -> usize {
        let scale = self.eigenvalues.iter().fold(0.0_f64, |m, x| m.max(x.abs()));
        if scale == 0.0 {
            return 0;
        }
        self.eigenvalues.iter().filter(|x| x.abs() > rel * scale).count()
    }
}

impl BipartiteMatrix {
    /// Wraps `matrix`, replacing it by its Hermitian part. Rejects inputs whose
    /// anti-Hermitian part exceeds [`ANTI_HERMITIAN_REJECT`].
    pub fn new(dim_a: usize, dim_b: usize, matrix: DenseMatrix) -> Result<Self> {
        if dim_a == 0 || dim_b == 0 {
            return Err(Error::EmptyDimension);
        }
        if matrix.dim() != dim_a * dim_b {
            return Err(Error::DimensionMismatch { expected: dim_a * dim_b, found: matrix.dim() });
        }
        let skew = matrix.anti_hermitian_norm();
        if skew > ANTI_HERMITIAN_REJECT {
            return Err(Error::NotHermitian(skew));
        }
        Ok(Self { dim_a, dim_b, matrix: matrix.hermitian_part() })
    }

    /// Row-major entries, `(mn)^2` of them.
    pub fn from_entries(dim_a: usize, dim_b: usize, entries: Vec<Complex64>) -> Result<Self> {
        let n = dim_a * dim_b;
        Self::new(dim_a, dim_b, DenseMatrix::from_vec(n, entries)?)
    }

    /// Caller guarantees exact Hermiticity and consistent dimensions.
    pub(crate) fn from_hermitian_unchecked(dim_a: usize, dim_b: usize, matrix: DenseMatrix) -> Self {
        debug_assert_eq!(matrix.dim(), dim_a * dim_b);
        debug_assert!(matrix.anti_hermitian_norm() <= ANTI_HERMITIAN_REJECT);
        Self { dim_a, dim_b, matrix }
    }

    pub fn identity(dim_a: usize, dim_b: usize) -> Self {
        assert!(dim_a > 0 && dim_b > 0, "identity needs positive dimensions");
        Self { dim_a, dim_b, matrix: DenseMatrix::identity(dim_a * dim_b) }
    }

    /// Kronecker product `A ⊗ B`.
    pub fn tensor(a: &DenseMatrix, b: &DenseMatrix) -> Result<Self> {
        let (m, n) = (a.dim(), b.dim());
        let kron = DenseMatrix::from_fn(m * n, |r, c| {
            let (i, k) = (r / n, r % n);
            let (j, l) = (c / n, c % n);
            a[(i, j)] * b[(k, l)]
        });
        Self::new(m, n, kron)
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.dim_a, self.dim_b)
    }

    /// Total dimension `mn`.
    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn matrix(&self) -> &DenseMatrix {
        &self.matrix
    }

    pub fn entry(&self, i: usize, j: usize) -> Complex64 {
        self.matrix[(i, j)]
    }

    pub fn trace(&self) -> f64 {
        self.matrix.trace().re
    }

    /// Transpose on the second factor: `((i,k),(j,l)) ↦ ((i,l),(j,k))`.
    /// A pure permutation of entries, so it is an exact involution.
    pub fn partial_transpose(&self) -> Self {
        let n = self.dim_b;
        let out = DenseMatrix::from_fn(self.dim(), |r, c| {
            let (i, l) = (r / n, r % n);
            let (j, k) = (c / n, c % n);
            self.matrix[(i * n + k, j * n + l)]
        });
        Self { dim_a: self.dim_a, dim_b: self.dim_b, matrix: out }
    }

    pub fn scale(&self, s: f64) -> Self {
        Self { matrix: self.matrix.scale(s), dim_a: self.dim_a, dim_b: self.dim_b }
    }

    /// `(1 - t)·1 + t·self`.
    pub fn toward_identity(&self, t: f64) -> Self {
        let id = DenseMatrix::identity(self.dim());
        Self { matrix: id.lincomb(1.0 - t, &self.matrix, t), dim_a: self.dim_a, dim_b: self.dim_b }
    }

    /// Trace-one rescaling; `None` for traceless input.
    pub fn normalized(&self) -> Option<Self> {
        let tr = self.trace();
        (tr != 0.0).then(|| self.scale(1.0 / tr))
    }

    pub fn eigh(&self) -> Eigh {
        self.eigh_with(&EigenConfig::default())
    }

    pub fn eigh_with(&self, cfg: &EigenConfig) -> Eigh {
        linalg::eigh_with(&self.matrix, cfg).expect("BipartiteMatrix is Hermitian by construction")
    }

    pub fn spectrum(&self) -> Spectrum {
        Spectrum { eigenvalues: self.eigh().values }
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.spectrum().min()
    }

    pub fn is_psd(&self, tol: f64) -> bool {
        self.min_eigenvalue() >= -tol
    }

    pub fn numerical_rank(&self, rel: f64) -> usize {
        self.spectrum().numerical_rank(rel)
    }

    /// Orthonormal basis of the numerical kernel (`|λ| <= rel * max |λ|`).
    pub fn kernel(&self, rel: f64) -> Vec<Vec<Complex64>> {
        let e = self.eigh();
        let scale = e.values.iter().fold(0.0_f64, |m, x| m.max(x.abs()));
        (0..e.values.len())
            .filter(|&k| e.values[k].abs() <= rel * scale)
            .map(|k| e.vector(k))
            .collect()
    }

    /// `Tr(AB)`; real for Hermitian arguments.
    pub fn trace_pairing(&self, other: &Self) -> Result<f64> {
        if self.dims() != other.dims() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: other.dim() });
        }
        let n = self.dim();
        let mut acc = Complex64::new(0.0, 0.0);
        for i in 0..n {
            for j in 0..n {
                acc += self.matrix[(i, j)] * other.matrix[(j, i)];
            }
        }
        Ok(acc.re)
    }

    /// `⟨φ⊗ψ|W|φ⊗ψ⟩` for unit `φ ∈ C^m`, `ψ ∈ C^n`.
    pub fn product_expectation(&self, phi: &[Complex64], psi: &[Complex64]) -> Result<f64> {
        check_unit(phi, self.dim_a)?;
        check_unit(psi, self.dim_b)?;
        Ok(self.matrix.quadratic_form(&linalg::kron(phi, psi)))
    }
}

fn check_unit(v: &[Complex64], dim: usize) -> Result<()> {
    if v.len() != dim {
        return Err(Error::DimensionMismatch { expected: dim, found: v.len() });
    }
    let nrm = linalg::norm(v);
    if (nrm - 1.0).abs() > UNIT_NORM_TOL {
        return Err(Error::NotUnit(nrm));
    }
    Ok(())
}
