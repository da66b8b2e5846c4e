//! The family `W[a,b,c;θ]` on `M_3 ⊗ M_3` and its closed-form predicates.
//!
//! Layout (row-major over `(i,k)`, `i,k ∈ {0,1,2}`): the diagonal is
//! `(a, c, b, b, a, c, c, b, a)`; the only off-diagonal entries sit on the
//! indices `{0, 4, 8}` of `e_i ⊗ e_i`, with `-e^{iθ}` at `(0,4)`, `(4,8)`,
//! `(8,0)` and `-e^{-iθ}` at the transposed positions.

use core::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::hermitian::BipartiteMatrix;
use crate::linalg::DenseMatrix;

/// Tie tolerance for declaring a family member of PPT type.
pub const PPT_TYPE_TIE: f64 = 1e-10;
/// Slack on the block-positivity inequalities, so that points constructed on
/// the boundary (the catalog, scan planes) are not lost to rounding.
pub const BLOCK_POSITIVE_SLACK: f64 = 1e-12;

const TWO_THIRDS_PI: f64 = 2.0 * PI / 3.0;
const CORE: [usize; 3] = [0, 4, 8];

/// Parameters `(a, b, c, θ)` with `a, b, c >= 0` and `θ ∈ [-π, π]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WitnessParams {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub theta: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WitnessType {
    PositiveType,
    CopositiveType,
    PptType,
    NotAWitness,
}

impl WitnessType {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::PositiveType => "PositiveType",
            Self::CopositiveType => "CopositiveType",
            Self::PptType => "PPTType",
            Self::NotAWitness => "NotAWitness",
        }
    }

    /// The type of the partial transpose.
    pub fn mirrored(self) -> Self {
        match self {
            Self::PositiveType => Self::CopositiveType,
            Self::CopositiveType => Self::PositiveType,
            other => other,
        }
    }
}

impl core::fmt::Display for WitnessType {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FamilyClassification {
    pub is_ppt_matrix: bool,
    pub is_block_positive: bool,
    pub witness_type: WitnessType,
    pub p_theta: f64,
}

/// Wraps `theta` into `[-π, π]`.
pub fn normalize_theta(theta: f64) -> f64 {
    if (-PI..=PI).contains(&theta) {
        return theta;
    }
    let wrapped = theta - 2.0 * PI * libm::round(theta / (2.0 * PI));
    wrapped.clamp(-PI, PI)
}

impl WitnessParams {
    pub fn new(a: f64, b: f64, c: f64, theta: f64) -> Result<Self> {
        for (name, value) in [("a", a), ("b", b), ("c", c)] {
            if !(value >= 0.0 && value.is_finite()) {
                return Err(Error::InvalidParameter { name, value });
            }
        }
        if !theta.is_finite() {
            return Err(Error::InvalidParameter { name: "theta", value: theta });
        }
        Ok(Self { a, b, c, theta: normalize_theta(theta) })
    }

    /// Same `(a, b, c)` with `θ` chosen so that `p_θ = p`.
    pub fn with_p(a: f64, b: f64, c: f64, p: f64) -> Result<Self> {
        Self::new(a, b, c, theta_for_p(p)?)
    }

    pub fn p_theta(&self) -> f64 {
        p_theta(self.theta)
    }

    /// `(p_θ - a + b)(p_θ - a + c) - 1`; zero exactly on the PPT-type locus
    /// of the regime `a < p_θ`, `bc < 1`.
    pub fn type_gap(&self) -> f64 {
        let p = self.p_theta();
        (p - self.a + self.b) * (p - self.a + self.c) - 1.0
    }

    /// `b ↔ c`.
    pub fn swapped(&self) -> Self {
        Self { b: self.c, c: self.b, ..*self }
    }
}

/// `q_θ = e^{iθ} + e^{-iθ} = 2 cos θ`.
pub fn q_theta(theta: f64) -> f64 {
    2.0 * libm::cos(theta)
}

/// `max{q_{θ-2π/3}, q_θ, q_{θ+2π/3}}`, always in `[1, 2]`.
pub fn p_theta(theta: f64) -> f64 {
    q_theta(theta - TWO_THIRDS_PI).max(q_theta(theta)).max(q_theta(theta + TWO_THIRDS_PI))
}

/// `θ = arccos(p/2) ∈ [0, π/3]`, the inverse of [`p_theta`] on that branch.
pub fn theta_for_p(p: f64) -> Result<f64> {
    if !(1.0..=2.0).contains(&p) {
        return Err(Error::InvalidParameter { name: "p", value: p });
    }
    Ok(libm::acos(p / 2.0))
}

pub fn build_witness(p: &WitnessParams) -> BipartiteMatrix {
    let WitnessParams { a, b, c, theta } = *p;
    let diag = [a, c, b, b, a, c, c, b, a];
    let mut m = DenseMatrix::from_real_diagonal(&diag);
    let e = Complex64::from_polar(1.0, theta);
    for k in 0..3 {
        let (i, j) = (CORE[k], CORE[(k + 1) % 3]);
        m[(i, j)] = -e;
        m[(j, i)] = -e.conj();
    }
    BipartiteMatrix::from_hermitian_unchecked(3, 3, m)
}

/// PPT test `a >= p_θ ∧ bc >= 1`, exact on the inputs.
pub fn is_ppt_closed_form(p: &WitnessParams) -> bool {
    p.a >= p.p_theta() && p.b * p.c >= 1.0
}

/// Block-positivity: `a + b + c >= p_θ` and `a <= 1 ⟹ bc >= (1 - a)^2`,
/// each with [`BLOCK_POSITIVE_SLACK`].
pub fn is_block_positive_closed_form(p: &WitnessParams) -> bool {
    is_block_positive_with_slack(p, BLOCK_POSITIVE_SLACK)
}

pub fn is_block_positive_with_slack(p: &WitnessParams, slack: f64) -> bool {
    let sum_ok = p.a + p.b + p.c >= p.p_theta() - slack;
    let corner_ok = p.a > 1.0 || p.b * p.c >= (1.0 - p.a) * (1.0 - p.a) - slack;
    sum_ok && corner_ok
}

/// `α_W = min(1, 1/(p_θ + 1 - a))`.
pub fn alpha_closed_form(p: &WitnessParams) -> Result<f64> {
    if !is_block_positive_closed_form(p) {
        return Err(Error::NotBlockPositive);
    }
    let pt = p.p_theta();
    if p.a >= pt {
        return Ok(1.0);
    }
    Ok(1.0 / (pt + 1.0 - p.a))
}

/// `F(t) = (b + c - bc) t^2 - (b + c - 2) t - 1`; `W_t` is copositive iff
/// `F(t) <= 0`.
pub fn copositivity_polynomial(p: &WitnessParams, t: f64) -> f64 {
    let (b, c) = (p.b, p.c);
    (b + c - b * c) * t * t - (b + c - 2.0) * t - 1.0
}

/// `β_W`: 1 when `bc >= 1`, otherwise the root of `F` in `(0, 1)`.
pub fn beta_closed_form(p: &WitnessParams) -> Result<f64> {
    if !is_block_positive_closed_form(p) {
        return Err(Error::NotBlockPositive);
    }
    let (b, c) = (p.b, p.c);
    if b * c >= 1.0 {
        return Ok(1.0);
    }
    let quad = b + c - b * c;
    let lin = 2.0 - b - c;
    let disc = (lin * lin + 4.0 * quad).max(0.0);
    let root = libm::sqrt(disc);
    // quad > 0 whenever lin < 0 (b + c > 2 with bc < 1)
    Ok(if lin >= 0.0 { 2.0 / (lin + root) } else { (root - lin) / (2.0 * quad) })
}

pub fn classify_family(p: &WitnessParams) -> FamilyClassification {
    let p_theta = p.p_theta();
    let is_ppt_matrix = is_ppt_closed_form(p);
    let is_block_positive = is_block_positive_closed_form(p);

    let witness_type = if !is_block_positive {
        WitnessType::NotAWitness
    } else if p.a < p_theta && p.b * p.c < 1.0 {
        let gap = p.type_gap();
        if gap > PPT_TYPE_TIE {
            WitnessType::CopositiveType
        } else if gap < -PPT_TYPE_TIE {
            WitnessType::PositiveType
        } else {
            WitnessType::PptType
        }
    } else {
        // at least one of α, β equals 1 here
        let alpha = alpha_closed_form(p).expect("block-positive");
        let beta = beta_closed_form(p).expect("block-positive");
        type_from_distances(alpha, beta, PPT_TYPE_TIE)
    };

    FamilyClassification { is_ppt_matrix, is_block_positive, witness_type, p_theta }
}

/// Positive type iff `α >= β`, copositive type iff `α <= β`; ties within
/// `tie` are PPT type.
pub fn type_from_distances(alpha: f64, beta: f64, tie: f64) -> WitnessType {
    if (alpha - beta).abs() <= tie {
        WitnessType::PptType
    } else if alpha > beta {
        WitnessType::PositiveType
    } else {
        WitnessType::CopositiveType
    }
}

/// SPA as `scale · W[p_θ, p_θ - a + b, p_θ - a + c; θ]`.
pub fn spa_closed_form(p: &WitnessParams) -> Result<(f64, WitnessParams)> {
    if !is_block_positive_closed_form(p) {
        return Err(Error::NotBlockPositive);
    }
    let pt = p.p_theta();
    if p.a >= pt {
        return Err(Error::AlreadyPositive);
    }
    let shift = pt - p.a;
    let scale = 1.0 / (pt + 1.0 - p.a);
    Ok((scale, WitnessParams { a: pt, b: shift + p.b, c: shift + p.c, theta: p.theta }))
}

pub fn spa_matrix_closed_form(p: &WitnessParams) -> Result<BipartiteMatrix> {
    let (scale, q) = spa_closed_form(p)?;
    Ok(build_witness(&q).scale(scale))
}

/// `Tr(W[a,b,c;θ] W[a',b',c';θ']) = 3(aa' + bb' + cc') + 6 cos(θ - θ')`.
pub fn family_pairing(w: &WitnessParams, v: &WitnessParams) -> f64 {
    3.0 * (w.a * v.a + w.b * v.b + w.c * v.c) + 6.0 * libm::cos(w.theta - v.theta)
}

/// Checks `W_t = t · W[a_t/t, b_t/t, c_t/t; θ]` entrywise to `1e-12`, where
/// `x_t = 1 - t + t x`.
pub fn scaling_identity_check(p: &WitnessParams, t: f64) -> Result<bool> {
    if !(t > 0.0 && t <= 1.0) {
        return Err(Error::SegmentOutOfRange(t));
    }
    let shifted = |x: f64| (1.0 - t + t * x) / t;
    let rescaled = WitnessParams { a: shifted(p.a), b: shifted(p.b), c: shifted(p.c), theta: p.theta };
    let lhs = build_witness(p).toward_identity(t);
    let rhs = build_witness(&rescaled).scale(t);
    let n = lhs.dim();
    let ok = (0..n).all(|i| (0..n).all(|j| (lhs.entry(i, j) - rhs.entry(i, j)).norm() <= 1e-12));
    Ok(ok)
}
