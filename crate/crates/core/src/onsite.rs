//! The single-site anharmonic oscillator.
//!
//! Energies are in units of `hbar * Omega`, lengths in units of the harmonic
//! oscillator length `sqrt(hbar / (m Omega))`. The on-site Hamiltonian is
//!
//! ```text
//! h = P^2/2 + X^2/2 + A3 X^3 + A4 X^4
//! ```
//!
//! and is diagonalized in the lowest `M` harmonic-oscillator states.
//! [`semiclassical_levels`] provides an independent estimate of the same
//! spectrum by Bohr-Sommerfeld quantization of the classical action.

use std::f64::consts::{FRAC_PI_2, PI};

use faer::Mat;
use serde::{Deserialize, Serialize};

use crate::linalg::{eigh_real, tolerant_order};
use crate::{Error, Result};

/// Oscillator dimension used when none is requested explicitly.
pub fn default_osc_dim(ncut: usize) -> usize {
    40.max(4 * ncut)
}

/// Dimensional lattice parameters.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PhysicalParams {
    pub mass: f64,
    pub a2: f64,
    pub a3: f64,
    pub a4: f64,
    /// Intersite spring constant.
    pub c: f64,
    pub hbar: f64,
}

/// Result of [`reduce_physical`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Reduced {
    pub omega: f64,
    pub a4: f64,
    pub coupling: f64,
}

/// Maps physical coefficients to the frequency unit and the dimensionless
/// quartic and coupling constants.
pub fn reduce_physical(p: &PhysicalParams) -> Result<Reduced> {
    if !(p.mass > 0.0) || !(p.hbar > 0.0) {
        return Err(Error::InvalidParams(format!(
            "mass and hbar must be positive (m = {}, hbar = {})",
            p.mass, p.hbar
        )));
    }
    let omega_sq = 2.0 * (p.a2 - 2.0 * p.c) / p.mass;
    if !(omega_sq > 0.0) {
        return Err(Error::InvalidStiffness { omega_sq });
    }
    let omega = omega_sq.sqrt();
    Ok(Reduced {
        omega,
        a4: p.a4 * p.hbar / (p.mass * p.mass * omega.powi(3)),
        coupling: 4.0 * p.c / (p.mass * omega_sq),
    })
}

/// Dimensionless model definition shared by every stage of the pipeline.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ModelParams {
    pub a4: f64,
    pub a3: f64,
    /// Dimensionless intersite coupling `C`.
    pub coupling: f64,
    /// Number of lattice sites `N`.
    pub sites: usize,
    /// Bound on the total excitation order, `sum_i alpha_i <= ncut`.
    pub ncut: usize,
    /// Harmonic-basis truncation `M` of the on-site problem.
    pub osc_dim: usize,
}

impl ModelParams {
    /// Quartic-only model with the default oscillator dimension.
    pub fn new(a4: f64, coupling: f64, sites: usize, ncut: usize) -> Self {
        Self {
            a4,
            a3: 0.0,
            coupling,
            sites,
            ncut,
            osc_dim: default_osc_dim(ncut),
        }
    }

    pub fn with_a3(mut self, a3: f64) -> Self {
        self.a3 = a3;
        self
    }

    pub fn with_osc_dim(mut self, osc_dim: usize) -> Self {
        self.osc_dim = osc_dim;
        self
    }

    pub fn with_coupling(mut self, coupling: f64) -> Self {
        self.coupling = coupling;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidParams(msg));
        if !(self.a4.is_finite() && self.a3.is_finite() && self.coupling.is_finite()) {
            return bad("a4, a3 and c must be finite".into());
        }
        if self.sites < 2 {
            return bad(format!("lattice needs at least 2 sites (got N = {})", self.sites));
        }
        if self.ncut < 1 {
            return bad("ncut must be at least 1".into());
        }
        if self.osc_dim <= self.ncut + 2 {
            return bad(format!(
                "oscillator dimension M = {} must exceed ncut + 2 = {}",
                self.osc_dim,
                self.ncut + 2
            ));
        }
        if self.a3 == 0.0 && self.a4 < 0.0 {
            return bad(format!("a4 = {} gives an unbounded on-site potential", self.a4));
        }
        if self.a3 != 0.0 && !(self.a4 > 0.0) {
            return bad(format!(
                "a cubic term (a3 = {}) needs a4 > 0 to keep the potential bounded",
                self.a3
            ));
        }
        Ok(())
    }
}

/// Position and momentum operators in the harmonic basis `|n>`, `n < M`.
#[derive(Clone, Debug)]
pub struct OscillatorOperators {
    pub x: Mat<f64>,
    /// `P^2` (not `P^2/2`).
    pub p2: Mat<f64>,
    pub x2: Mat<f64>,
    pub x3: Mat<f64>,
    pub x4: Mat<f64>,
}

fn position_matrix(dim: usize) -> Mat<f64> {
    Mat::from_fn(dim, dim, |i, j| {
        if j == i + 1 {
            (j as f64 / 2.0).sqrt()
        } else if i == j + 1 {
            (i as f64 / 2.0).sqrt()
        } else {
            0.0
        }
    })
}

/// Builds `X`, `P^2` and the powers of `X` in dimension `dim`.
///
/// The powers are formed in dimension `dim + 4` and truncated afterwards, so
/// every retained matrix element equals the exact infinite-basis value.
pub fn build_oscillator_operators(dim: usize) -> Result<OscillatorOperators> {
    if dim < 2 {
        return Err(Error::InvalidParams(format!(
            "oscillator dimension must be at least 2 (got {dim})"
        )));
    }
    let big = dim + 4;
    let xb = position_matrix(big);
    let x2b = &xb * &xb;
    let x3b = &x2b * &xb;
    let x4b = &x2b * &x2b;
    let truncate = |m: &Mat<f64>| m.as_ref().submatrix(0, 0, dim, dim).to_owned();

    let p2 = Mat::from_fn(dim, dim, |i, j| {
        let (lo, hi) = (i.min(j), i.max(j));
        if i == j {
            i as f64 + 0.5
        } else if hi == lo + 2 {
            -(((lo + 1) * (lo + 2)) as f64).sqrt() / 2.0
        } else {
            0.0
        }
    });

    Ok(OscillatorOperators {
        x: truncate(&xb),
        p2,
        x2: truncate(&x2b),
        x3: truncate(&x3b),
        x4: truncate(&x4b),
    })
}

/// Eigen-solution of the on-site oscillator.
#[derive(Clone, Debug)]
pub struct OnSiteSolution {
    pub a3: f64,
    pub a4: f64,
    /// Eigenvalues `gamma[alpha]`, ascending, in units of `hbar Omega`.
    pub gamma: Vec<f64>,
    /// Columns are eigenvectors expressed in the harmonic basis.
    pub transform: Mat<f64>,
    /// `X` in the eigenbasis.
    pub x: Mat<f64>,
    /// `P^2/2` in the eigenbasis.
    pub kinetic: Mat<f64>,
    /// False when doubling `M` moved one of the levels used by the lattice.
    pub converged: bool,
}

impl OnSiteSolution {
    pub fn dim(&self) -> usize {
        self.gamma.len()
    }
}

/// Shift of any retained level tolerated when `M` is doubled.
pub const CONVERGENCE_TOL: f64 = 1e-10;

/// Solves the on-site problem at `params.osc_dim` and checks convergence by
/// re-solving at twice that dimension.
pub fn solve_onsite(params: &ModelParams) -> Result<OnSiteSolution> {
    params.validate()?;
    let mut sol = solve_onsite_dim(params.a3, params.a4, params.osc_dim)?;
    let check = solve_onsite_dim(params.a3, params.a4, 2 * params.osc_dim)?;
    let levels = (params.ncut + 3).min(sol.dim());
    let drift = (0..levels)
        .map(|a| (sol.gamma[a] - check.gamma[a]).abs())
        .fold(0.0, f64::max);
    if drift > CONVERGENCE_TOL {
        log::warn!(
            "on-site levels not converged at M = {}: doubling M moves them by {drift:.3e}",
            params.osc_dim
        );
        sol.converged = false;
    }
    Ok(sol)
}

/// Diagonalizes the on-site Hamiltonian in a harmonic basis of dimension `dim`
/// without any convergence check.
pub fn solve_onsite_dim(a3: f64, a4: f64, dim: usize) -> Result<OnSiteSolution> {
    let ops = build_oscillator_operators(dim)?;
    let h = Mat::from_fn(dim, dim, |i, j| {
        0.5 * ops.p2[(i, j)] + 0.5 * ops.x2[(i, j)] + a3 * ops.x3[(i, j)] + a4 * ops.x4[(i, j)]
    });
    let (values, vectors) = eigh_real(&h, "on-site oscillator")?;

    let order = tolerant_order(&values, 1e-12);
    let gamma: Vec<f64> = order.iter().map(|&i| values[i]).collect();
    let mut transform = Mat::from_fn(dim, dim, |r, c| vectors[(r, order[c])]);
    for c in 0..dim {
        let mut pivot = 0;
        for r in 1..dim {
            if transform[(r, c)].abs() > transform[(pivot, c)].abs() {
                pivot = r;
            }
        }
        if transform[(pivot, c)] < 0.0 {
            for r in 0..dim {
                transform[(r, c)] = -transform[(r, c)];
            }
        }
    }

    let half_p2 = Mat::from_fn(dim, dim, |i, j| 0.5 * ops.p2[(i, j)]);
    let x = similarity(&transform, &ops.x);
    let kinetic = similarity(&transform, &half_p2);
    Ok(OnSiteSolution {
        a3,
        a4,
        gamma,
        transform,
        x,
        kinetic,
        converged: true,
    })
}

/// `U^T A U`, symmetrized to remove rounding asymmetry.
fn similarity(u: &Mat<f64>, a: &Mat<f64>) -> Mat<f64> {
    let m = u.transpose() * a * u;
    Mat::from_fn(m.nrows(), m.ncols(), |i, j| 0.5 * (m[(i, j)] + m[(j, i)]))
}

// ---------------------------------------------------------------------------
// Semiclassical quantization
// ---------------------------------------------------------------------------

const GAUSS_POINTS: usize = 64;
const ENERGY_TOL: f64 = 1e-10;

/// On-site potential `x^2/2 + a3 x^3 + a4 x^4`.
#[derive(Clone, Copy, Debug)]
pub struct Potential {
    pub a3: f64,
    pub a4: f64,
}

impl Potential {
    pub fn value(&self, x: f64) -> f64 {
        let x2 = x * x;
        0.5 * x2 + self.a3 * x2 * x + self.a4 * x2 * x2
    }

    /// Critical points other than the minimum at the origin.
    fn extra_critical_points(&self) -> Vec<f64> {
        // V'(x) = x (1 + 3 a3 x + 4 a4 x^2)
        let (a, b, c) = (4.0 * self.a4, 3.0 * self.a3, 1.0);
        if a == 0.0 {
            return if b == 0.0 { vec![] } else { vec![-c / b] };
        }
        let disc = b * b - 4.0 * a * c;
        if disc < 0.0 {
            return vec![];
        }
        let s = disc.sqrt();
        vec![(-b - s) / (2.0 * a), (-b + s) / (2.0 * a)]
    }

    /// Classical turning points `(x_left, x_right)` at energy `e > 0`.
    pub fn turning_points(&self, e: f64) -> Result<(f64, f64)> {
        if self.a4 < 0.0 || (self.a4 == 0.0 && self.a3 != 0.0) {
            return Err(Error::UnsupportedPotential(
                "potential is unbounded below".into(),
            ));
        }
        let extras = self.extra_critical_points();
        // The barrier nearest the origin on each side caps the search.
        let mut right_cap = f64::INFINITY;
        let mut left_cap = f64::NEG_INFINITY;
        for &x in &extras {
            if x > 0.0 {
                right_cap = right_cap.min(x);
            } else if x < 0.0 {
                left_cap = left_cap.max(x);
            }
        }
        for cap in [left_cap, right_cap] {
            if cap.is_finite() {
                let barrier = self.value(cap);
                if e >= barrier {
                    return Err(Error::UnsupportedPotential(format!(
                        "energy {e} reaches the barrier {barrier} at x = {cap}"
                    )));
                }
            }
        }
        // Any other local minimum below e is a second classically allowed region.
        if extras.len() == 2 {
            let outer = if extras[0].abs() > extras[1].abs() { extras[0] } else { extras[1] };
            if extras[0] * extras[1] > 0.0 && self.value(outer) < e {
                return Err(Error::UnsupportedPotential(format!(
                    "double well: second minimum at x = {outer} lies below E = {e}"
                )));
            }
        }
        let right = self.bracket_root(e, 1.0, right_cap);
        let left = self.bracket_root(e, -1.0, -left_cap);
        Ok((left, right))
    }

    /// Root of `V(x) = e` along direction `sign`, searching `|x| < cap`.
    fn bracket_root(&self, e: f64, sign: f64, cap: f64) -> f64 {
        let mut lo = 0.0;
        let mut hi = if cap.is_finite() { cap } else { 1.0 };
        if !cap.is_finite() {
            while self.value(sign * hi) < e {
                lo = hi;
                hi *= 2.0;
            }
        }
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid == lo || mid == hi {
                break;
            }
            if self.value(sign * mid) < e {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        sign * 0.5 * (lo + hi)
    }

    /// Reduced action `I(E) = (1/pi) * integral of sqrt(2 (E - V)) dx` over
    /// the classically allowed interval.
    pub fn action(&self, e: f64) -> Result<f64> {
        if e <= 0.0 {
            return Ok(0.0);
        }
        let (left, right) = self.turning_points(e)?;
        let rule = gauss_legendre(GAUSS_POINTS);
        // x = x_t sin(theta) removes the square-root endpoint singularity.
        let side = |xt: f64| -> f64 {
            rule.iter()
                .map(|&(node, weight)| {
                    let theta = FRAC_PI_2 * 0.5 * (node + 1.0);
                    let x = xt * theta.sin();
                    let kin = (2.0 * (e - self.value(x))).max(0.0);
                    weight * kin.sqrt() * xt.abs() * theta.cos()
                })
                .sum::<f64>()
                * FRAC_PI_2
                * 0.5
        };
        Ok((side(left) + side(right)) / PI)
    }
}

/// Gauss-Legendre nodes and weights on `[-1, 1]`.
pub fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    let mut rule = Vec::with_capacity(n);
    for i in 0..n {
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        rule.push((x, 2.0 / ((1.0 - x * x) * dp * dp)));
    }
    rule
}

/// Bohr-Sommerfeld levels `I(E_n) = n + 1/2` for `n = 0..levels`.
pub fn semiclassical_levels(a3: f64, a4: f64, levels: usize) -> Result<Vec<f64>> {
    let pot = Potential { a3, a4 };
    let mut out = Vec::with_capacity(levels);
    let mut lo: f64 = 0.0;
    for n in 0..levels {
        let target = n as f64 + 0.5;
        let mut hi = (lo * 2.0).max(1.0);
        while pot.action(hi)? < target {
            lo = hi;
            hi *= 2.0;
        }
        while hi - lo > ENERGY_TOL {
            let mid = 0.5 * (lo + hi);
            if pot.action(mid)? < target {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let e = 0.5 * (lo + hi);
        out.push(e);
        lo = e;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn reduction_identity_cases() {
        let r = reduce_physical(&PhysicalParams { mass: 1.0, a2: 0.5, a3: 0.0, a4: 0.0, c: 0.0, hbar: 1.0 })
            .unwrap();
        assert_eq!((r.omega, r.a4, r.coupling), (1.0, 0.0, 0.0));

        let r = reduce_physical(&PhysicalParams { mass: 1.0, a2: 1.0, a3: 0.0, a4: 0.0, c: 0.25, hbar: 1.0 })
            .unwrap();
        assert_abs_diff_eq!(r.omega, 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(r.coupling, 1.0, epsilon = 1e-15);
    }

    #[test]
    fn reduction_general_case() {
        let r = reduce_physical(&PhysicalParams { mass: 2.0, a2: 5.0, a3: 0.0, a4: 0.3, c: 1.0, hbar: 1.0 })
            .unwrap();
        assert_abs_diff_eq!(r.omega, 3f64.sqrt(), epsilon = 1e-15);
        assert_abs_diff_eq!(r.a4, 0.3 / (4.0 * 3.0 * 3f64.sqrt()), epsilon = 1e-15);
        assert_abs_diff_eq!(r.coupling, 2.0 / 3.0, epsilon = 1e-15);
    }

    #[test]
    fn reduction_rejects_soft_chain() {
        let err = reduce_physical(&PhysicalParams { mass: 1.0, a2: 0.5, a3: 0.0, a4: 0.0, c: 0.25, hbar: 1.0 })
            .unwrap_err();
        assert!(matches!(err, Error::InvalidStiffness { .. }));
    }

    #[test]
    fn ladder_elements() {
        let ops = build_oscillator_operators(2).unwrap();
        assert_abs_diff_eq!(ops.x[(0, 1)], std::f64::consts::FRAC_1_SQRT_2, epsilon = 1e-15);
        for m in [2, 5, 17] {
            assert_eq!(build_oscillator_operators(m).unwrap().p2[(0, 0)], 0.5);
        }
        assert!(build_oscillator_operators(1).is_err());
    }

    #[test]
    fn powers_match_enlarged_product() {
        // brute force: explicit 6x6 ladder matrix, multiplied, then cut to 4x4
        let n = 6;
        let mut x = vec![vec![0.0; n]; n];
        for i in 0..n - 1 {
            x[i][i + 1] = ((i + 1) as f64 / 2.0).sqrt();
            x[i + 1][i] = x[i][i + 1];
        }
        let mut x2 = vec![vec![0.0; n]; n];
        for i in 0..n {
            for j in 0..n {
                x2[i][j] = (0..n).map(|k| x[i][k] * x[k][j]).sum();
            }
        }
        let ops = build_oscillator_operators(4).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                assert_abs_diff_eq!(ops.x2[(i, j)], x2[i][j], epsilon = 1e-14);
            }
        }
        assert_abs_diff_eq!(ops.x2[(0, 0)], 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(ops.x2[(0, 2)], 0.5f64.sqrt(), epsilon = 1e-15);
        // the edge element needs the enlarged intermediate: <3|X^2|3> = 3 + 1/2
        assert_abs_diff_eq!(ops.x2[(3, 3)], 3.5, epsilon = 1e-14);
        assert_abs_diff_eq!(ops.x4[(0, 0)], 0.75, epsilon = 1e-14);
    }

    #[test]
    fn harmonic_onsite_is_exact() {
        let sol = solve_onsite_dim(0.0, 0.0, 12).unwrap();
        for (a, g) in sol.gamma.iter().enumerate() {
            assert_abs_diff_eq!(*g, a as f64 + 0.5, epsilon = 1e-12);
        }
        let ops = build_oscillator_operators(12).unwrap();
        for i in 0..12 {
            for j in 0..12 {
                let id = if i == j { 1.0 } else { 0.0 };
                assert_abs_diff_eq!(sol.transform[(i, j)].abs(), id, epsilon = 1e-12);
                assert_abs_diff_eq!(sol.x[(i, j)].abs(), ops.x[(i, j)].abs(), epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn quartic_levels_converge() {
        let s40 = solve_onsite_dim(0.0, 0.2, 40).unwrap();
        let s80 = solve_onsite_dim(0.0, 0.2, 80).unwrap();
        let s120 = solve_onsite_dim(0.0, 0.2, 120).unwrap();
        assert!(s40.gamma[1] - s40.gamma[0] > 1.0);
        for a in 0..=8 {
            assert_abs_diff_eq!(s80.gamma[a], s120.gamma[a], epsilon = 1e-10);
            // M = 40 is only good to a few 1e-6 at the top of this range
            assert_abs_diff_eq!(s40.gamma[a], s120.gamma[a], epsilon = 1e-5);
        }
        assert_abs_diff_eq!(s40.gamma[4], s120.gamma[4], epsilon = 1e-8);
        let p = ModelParams::new(0.2, 0.0, 4, 6).with_osc_dim(80);
        assert!(solve_onsite(&p).unwrap().converged);
        let p = ModelParams::new(0.2, 0.0, 4, 6);
        assert!(!solve_onsite(&p).unwrap().converged);
    }

    #[test]
    fn convergence_warning_flags_small_basis() {
        let p = ModelParams::new(0.4, 0.0, 4, 6).with_osc_dim(10);
        assert!(!solve_onsite(&p).unwrap().converged);
    }

    #[test]
    fn solution_invariants() {
        let sol = solve_onsite_dim(0.0, 0.2, 30).unwrap();
        let n = sol.dim();
        let utu = sol.transform.transpose() * &sol.transform;
        for i in 0..n {
            for j in 0..n {
                let id = if i == j { 1.0 } else { 0.0 };
                assert_abs_diff_eq!(utu[(i, j)], id, epsilon = 1e-12);
                assert_abs_diff_eq!(sol.x[(i, j)], sol.x[(j, i)], epsilon = 1e-12);
                assert_abs_diff_eq!(sol.kinetic[(i, j)], sol.kinetic[(j, i)], epsilon = 1e-12);
                if (i + j) % 2 == 0 {
                    assert!(sol.x[(i, j)].abs() < 1e-12, "parity violated at ({i},{j})");
                }
            }
        }
        for w in sol.gamma.windows(2) {
            assert!(w[1] > w[0]);
        }
        // trace is preserved by the similarity transform
        let ops = build_oscillator_operators(30).unwrap();
        let trace: f64 = (0..30).map(|i| 0.5 * ops.p2[(i, i)] + 0.5 * ops.x2[(i, i)] + 0.2 * ops.x4[(i, i)]).sum();
        let sum: f64 = sol.gamma.iter().sum();
        assert!(((sum - trace) / trace).abs() < 1e-9);
    }

    #[test]
    fn variational_monotonicity() {
        let small = solve_onsite_dim(0.0, 0.4, 14).unwrap();
        let large = solve_onsite_dim(0.0, 0.4, 22).unwrap();
        for a in 0..8 {
            assert!(small.gamma[a] >= large.gamma[a] - 1e-13);
        }
    }

    #[test]
    fn gauss_legendre_integrates_polynomials() {
        let rule = gauss_legendre(64);
        let total: f64 = rule.iter().map(|&(_, w)| w).sum();
        assert_abs_diff_eq!(total, 2.0, epsilon = 1e-13);
        let x6: f64 = rule.iter().map(|&(x, w)| w * x.powi(6)).sum();
        assert_abs_diff_eq!(x6, 2.0 / 7.0, epsilon = 1e-13);
    }

    #[test]
    fn harmonic_action_is_exact() {
        let levels = semiclassical_levels(0.0, 0.0, 6).unwrap();
        for (n, e) in levels.iter().enumerate() {
            assert_abs_diff_eq!(*e, n as f64 + 0.5, epsilon = 1e-8);
        }
    }

    #[test]
    fn semiclassical_tracks_quantum_levels() {
        for a4 in [0.2, 0.4] {
            let sc = semiclassical_levels(0.0, a4, 9).unwrap();
            let q = solve_onsite_dim(0.0, a4, 120).unwrap();
            let rel: Vec<f64> = (0..9).map(|n| (sc[n] - q.gamma[n]).abs() / q.gamma[n]).collect();
            // the ground state is the worst case of the leading-order rule
            assert!(rel[0] < 0.1);
            for n in 2..9 {
                assert!(rel[n] < 0.03, "a4 = {a4}, n = {n}: rel = {}", rel[n]);
                assert!(rel[n] < rel[n - 1]);
            }
            assert!(sc.iter().zip(&q.gamma).all(|(s, g)| s < g));
            for w in sc.windows(2) {
                assert!(w[1] > w[0]);
            }
        }
    }

    #[test]
    fn action_is_increasing() {
        let pot = Potential { a3: 0.0, a4: 0.2 };
        let mut prev = 0.0;
        for i in 1..40 {
            let i_e = pot.action(0.25 * i as f64).unwrap();
            assert!(i_e > prev);
            prev = i_e;
        }
    }

    #[test]
    fn double_well_is_rejected() {
        // 4 a4 x^2 + 3 a3 x + 1 has real roots for a3 = -1, a4 = 0.5
        let pot = Potential { a3: -1.0, a4: 0.5 };
        assert!(matches!(pot.turning_points(5.0), Err(Error::UnsupportedPotential(_))));
        assert!(semiclassical_levels(-1.0, 0.5, 20).is_err());
        // a weak cubic term keeps a single well
        assert!(semiclassical_levels(0.05, 0.2, 5).is_ok());
    }

    #[test]
    fn model_params_validation() {
        assert!(ModelParams::new(0.2, 0.05, 13, 6).validate().is_ok());
        assert!(ModelParams::new(0.2, 0.05, 1, 6).validate().is_err());
        assert!(ModelParams::new(0.2, 0.05, 4, 0).validate().is_err());
        assert!(ModelParams::new(-0.1, 0.05, 4, 2).validate().is_err());
        assert!(ModelParams::new(0.0, 0.05, 4, 2).with_a3(0.1).validate().is_err());
        assert!(ModelParams::new(0.2, 0.05, 4, 6).with_osc_dim(8).validate().is_err());
        assert_eq!(ModelParams::new(0.2, 0.05, 4, 20).osc_dim, 80);
    }
}
