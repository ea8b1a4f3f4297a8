//! Quantum breathers: time-dependent Wannier states of a bound band.
//!
//! For a complete band `psi_alpha(q)` the Wannier state centered at site `k0`
//! is
//!
//! ```text
//! W(t) = N^{-1/2} sum_q exp(i q k0 - i E_alpha(q) t) psi_alpha(q)
//! ```
//!
//! With the Bloch convention of [`crate::symbasis`] (translation moves site `i`
//! to `i + 1`), this phase places the excitation at `k0`. The on-site kinetic
//! energy is evaluated from the cross-momentum matrices
//! `K_j[q', q] = <psi(q')|P_j^2/2|psi(q)>`, so each time point costs `O(N^2)`
//! per site. Times are in units of `1/Omega`, energies in `hbar Omega`.

use faer::Mat;
use serde::{Deserialize, Serialize};

use crate::bands::BoundBand;
use crate::lattice::LatticeSpectrum;
use crate::onsite::OnSiteSolution;
use crate::qham::apply_hamiltonian;
use crate::symbasis::{momentum, LatticeBasis, MomentumSector};
use crate::{Error, Result, C64};

/// Largest imaginary part tolerated in an expectation value.
pub const IMAG_TOL: f64 = 1e-10;

/// Expands a sector eigenvector over all configurations of `basis`.
pub fn expand_to_configurations(
    amplitudes: &[C64],
    basis: &LatticeBasis,
    sector: &MomentumSector,
) -> Vec<C64> {
    assert_eq!(amplitudes.len(), sector.len());
    let n = basis.sites as f64;
    let q = sector.q();
    let mut out = vec![C64::new(0.0, 0.0); basis.configs.len()];
    for (i, config) in basis.configs.iter().enumerate() {
        let key = basis.key(&config.0);
        let loc = basis
            .locate(key)
            .expect("every configuration belongs to an orbit");
        let Some(b) = sector.position(loc.orbit) else {
            continue;
        };
        // N / p coinciding translates share the phase exp(-i q shift)
        let period = basis.orbits[loc.orbit].period as f64;
        let weight = (n / period) / sector.norms[b].sqrt();
        out[i] = amplitudes[b] * C64::from_polar(weight, -q * loc.shift as f64);
    }
    out
}

/// `K_j[k', k]` for every site `j`.
#[derive(Clone, Debug)]
pub struct CrossMomentumKinetic {
    pub per_site: Vec<Mat<C64>>,
}

impl CrossMomentumKinetic {
    pub fn sites(&self) -> usize {
        self.per_site.len()
    }
}

/// Keys and totals of all configurations, cached for operator application.
struct ConfigTable {
    keys: Vec<u128>,
    totals: Vec<usize>,
}

impl ConfigTable {
    fn new(basis: &LatticeBasis) -> Self {
        Self {
            keys: basis.configs.iter().map(|c| basis.key(&c.0)).collect(),
            totals: basis.configs.iter().map(|c| c.total()).collect(),
        }
    }
}

/// `(P_j^2/2) psi`, projected on the truncated space.
fn apply_site_kinetic(
    basis: &LatticeBasis,
    table: &ConfigTable,
    onsite: &OnSiteSolution,
    site: usize,
    psi: &[C64],
) -> Vec<C64> {
    let w = basis.weight(site);
    let mut out = vec![C64::new(0.0, 0.0); psi.len()];
    for (i, config) in basis.configs.iter().enumerate() {
        let amp = psi[i];
        if amp == C64::new(0.0, 0.0) {
            continue;
        }
        let a = config.0[site] as usize;
        let room = basis.ncut - (table.totals[i] - a);
        let base = table.keys[i] - a as u128 * w;
        for a2 in 0..=room {
            let m = onsite.kinetic[(a2, a)];
            if m == 0.0 {
                continue;
            }
            let j = basis
                .config_index(base + a2 as u128 * w)
                .expect("images within the cutoff are in the basis");
            out[j] += amp * m;
        }
    }
    out
}

fn inner(a: &[C64], b: &[C64]) -> C64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

/// Gram-type matrix `M[k', k] = <vecs[k'] | ops[k]>`.
fn cross_matrix(vecs: &[Vec<C64>], ops: &[Vec<C64>]) -> Mat<C64> {
    let n = vecs.len();
    Mat::from_fn(n, n, |kp, k| inner(&vecs[kp], &ops[k]))
}

/// Contracts the configuration-space band states with `P_j^2/2` on every site.
pub fn kinetic_cross_elements(
    band: &BoundBand,
    expansions: &[Vec<C64>],
    basis: &LatticeBasis,
    onsite: &OnSiteSolution,
) -> Result<CrossMomentumKinetic> {
    if !band.complete {
        return Err(Error::BandIncomplete {
            alpha: band.alpha,
            missing: band.missing(),
        });
    }
    assert_eq!(expansions.len(), basis.sites);
    let table = ConfigTable::new(basis);
    let per_site = (0..basis.sites)
        .map(|j| {
            let applied: Vec<Vec<C64>> = expansions
                .iter()
                .map(|psi| apply_site_kinetic(basis, &table, onsite, j, psi))
                .collect();
            cross_matrix(expansions, &applied)
        })
        .collect();
    Ok(CrossMomentumKinetic { per_site })
}

/// Time grid specification, in units of `1/Omega`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum TimeGrid {
    /// `steps + 1` equally spaced points on `[0, t_max]`.
    Linear { t_max: f64, steps: usize },
    /// `t = 0` followed by `t_min * 10^(i / per_decade)`, `i = 0..=decades * per_decade`.
    Geometric {
        t_min: f64,
        decades: usize,
        per_decade: usize,
    },
}

impl TimeGrid {
    pub fn points(&self) -> Result<Vec<f64>> {
        match *self {
            TimeGrid::Linear { t_max, steps } => {
                if steps == 0 {
                    return Err(Error::EmptyGrid);
                }
                if !(t_max > 0.0) {
                    return Err(Error::InvalidParams(format!("t_max = {t_max} must be positive")));
                }
                Ok((0..=steps).map(|i| t_max * i as f64 / steps as f64).collect())
            }
            TimeGrid::Geometric { t_min, decades, per_decade } => {
                if decades == 0 || per_decade == 0 {
                    return Err(Error::EmptyGrid);
                }
                if !(t_min > 0.0) {
                    return Err(Error::InvalidParams(format!("t_min = {t_min} must be positive")));
                }
                let mut pts = vec![0.0];
                pts.extend(
                    (0..=decades * per_decade)
                        .map(|i| t_min * 10f64.powf(i as f64 / per_decade as f64)),
                );
                Ok(pts)
            }
        }
    }
}

/// Site-resolved kinetic energy of one Wannier state over a time grid.
#[derive(Clone, Debug, Serialize)]
pub struct BreatherRun {
    pub alpha: usize,
    pub center: usize,
    pub times: Vec<f64>,
    /// `kinetic[site][t]`.
    pub kinetic: Vec<Vec<f64>>,
    /// Band mean energy `sum_q E(q) / N`.
    pub mean_energy: f64,
    /// Central-site excess over the background at `t = 0`.
    pub initial_excess: f64,
    /// `None` when the contrast never drops to the threshold on the grid.
    pub lifetime: Option<f64>,
    pub recurrences: Vec<f64>,
    pub max_norm_error: f64,
    pub max_energy_error: f64,
}

impl BreatherRun {
    pub fn sites(&self) -> usize {
        self.kinetic.len()
    }

    /// Contrast `rho(t)` on the grid.
    pub fn contrast(&self) -> Vec<f64> {
        (0..self.times.len())
            .map(|i| {
                let profile: Vec<f64> = self.kinetic.iter().map(|s| s[i]).collect();
                excess(&profile, self.center) / self.initial_excess
            })
            .collect()
    }
}

/// Central-site kinetic energy minus the mean over all other sites.
pub fn excess(profile: &[f64], center: usize) -> f64 {
    let n = profile.len();
    let others: f64 = profile.iter().enumerate().filter(|&(j, _)| j != center).map(|(_, e)| e).sum();
    profile[center] - others / (n - 1) as f64
}

/// `c_k = exp(i q k0 - i E_k t) / sqrt N`.
fn wannier_coefficients(energies: &[f64], center: usize, t: f64) -> Vec<C64> {
    let n = energies.len();
    let norm = 1.0 / (n as f64).sqrt();
    energies
        .iter()
        .enumerate()
        .map(|(k, &e)| C64::from_polar(norm, momentum(k, n) * center as f64 - e * t))
        .collect()
}

fn bilinear(m: &Mat<C64>, c: &[C64]) -> C64 {
    let n = c.len();
    let mut acc = C64::new(0.0, 0.0);
    for k in 0..n {
        let mut col = C64::new(0.0, 0.0);
        for kp in 0..n {
            col += c[kp].conj() * m[(kp, k)];
        }
        acc += col * c[k];
    }
    acc
}

fn kinetic_profile(kin: &CrossMomentumKinetic, energies: &[f64], center: usize, t: f64) -> Result<Vec<f64>> {
    let c = wannier_coefficients(energies, center, t);
    kin.per_site
        .iter()
        .enumerate()
        .map(|(j, m)| {
            let z = bilinear(m, &c);
            if z.im.abs() > IMAG_TOL {
                return Err(Error::Inconsistent(format!(
                    "kinetic energy at site {j}, t = {t} has imaginary part {:e}",
                    z.im
                )));
            }
            Ok(z.re)
        })
        .collect()
}

fn check_center(center: usize, sites: usize) -> Result<()> {
    if center >= sites {
        return Err(Error::InvalidParams(format!(
            "center site {center} outside the lattice of {sites} sites"
        )));
    }
    Ok(())
}

/// Evaluates the on-site kinetic energies on `times`. Lifetime and
/// recurrences are left empty; see [`lifetime`] and [`recurrence_events`].
pub fn evolve_breather(
    kin: &CrossMomentumKinetic,
    band: &BoundBand,
    center: usize,
    times: &[f64],
) -> Result<BreatherRun> {
    if times.is_empty() {
        return Err(Error::EmptyGrid);
    }
    let energies = band.energies()?;
    check_center(center, energies.len())?;
    let n = energies.len();
    let mut kinetic = vec![Vec::with_capacity(times.len()); n];
    for &t in times {
        for (j, e) in kinetic_profile(kin, &energies, center, t)?.into_iter().enumerate() {
            kinetic[j].push(e);
        }
    }
    let initial = kinetic_profile(kin, &energies, center, 0.0)?;
    Ok(BreatherRun {
        alpha: band.alpha,
        center,
        times: times.to_vec(),
        kinetic,
        mean_energy: energies.iter().sum::<f64>() / n as f64,
        initial_excess: excess(&initial, center),
        lifetime: None,
        recurrences: Vec::new(),
        max_norm_error: f64::NAN,
        max_energy_error: f64::NAN,
    })
}

fn first_crossing(rho: &[f64], threshold: f64) -> Option<usize> {
    rho.iter().position(|&r| r <= threshold)
}

/// First time the contrast falls to `threshold`, linearly interpolated
/// between grid points.
pub fn lifetime(run: &BreatherRun, threshold: f64) -> Result<Option<f64>> {
    if !(run.initial_excess > 0.0) {
        return Err(Error::NoInitialLocalization(run.initial_excess));
    }
    let rho = run.contrast();
    let Some(i) = first_crossing(&rho, threshold) else {
        return Ok(None);
    };
    if i == 0 {
        return Ok(Some(run.times[0]));
    }
    let (t0, t1) = (run.times[i - 1], run.times[i]);
    let (r0, r1) = (rho[i - 1], rho[i]);
    Ok(Some(t0 + (t1 - t0) * (r0 - threshold) / (r0 - r1)))
}

/// Local maxima of the contrast above `threshold` after the first decay.
pub fn recurrence_events(run: &BreatherRun, threshold: f64) -> Vec<f64> {
    let rho = run.contrast();
    let Some(start) = first_crossing(&rho, threshold) else {
        return Vec::new();
    };
    (start.max(1)..rho.len().saturating_sub(1))
        .filter(|&i| rho[i] > threshold && rho[i] > rho[i - 1] && rho[i] >= rho[i + 1])
        .map(|i| run.times[i])
        .collect()
}

/// Everything needed to evaluate a breather at arbitrary times.
pub struct BreatherModel {
    pub alpha: usize,
    pub band: BoundBand,
    pub energies: Vec<f64>,
    pub mean_energy: f64,
    pub kinetic: CrossMomentumKinetic,
    /// `<psi(q')|psi(q)>` from the configuration-space expansions.
    pub gram: Mat<C64>,
    /// `<psi(q')|H|psi(q)>` with `H` applied in configuration space.
    pub hamiltonian: Mat<C64>,
    pub expansions: Vec<Vec<C64>>,
}

impl BreatherModel {
    pub fn new(spectrum: &LatticeSpectrum, alpha: usize) -> Result<Self> {
        let band = spectrum.band(alpha)?;
        let energies = band.energies()?;
        let n = spectrum.params.sites;
        let expansions: Vec<Vec<C64>> = (0..n)
            .map(|k| {
                let amps = spectrum
                    .band_state(alpha, k)
                    .ok_or_else(|| Error::Inconsistent(format!("missing band state alpha = {alpha}, k = {k}")))?;
                Ok(expand_to_configurations(amps, &spectrum.basis, &spectrum.sectors[k]))
            })
            .collect::<Result<_>>()?;
        let kinetic = kinetic_cross_elements(&band, &expansions, &spectrum.basis, &spectrum.onsite)?;
        let applied: Vec<Vec<C64>> = expansions
            .iter()
            .map(|psi| apply_hamiltonian(&spectrum.basis, &spectrum.onsite, spectrum.params.coupling, psi))
            .collect::<Result<_>>()?;
        Ok(Self {
            alpha,
            mean_energy: energies.iter().sum::<f64>() / n as f64,
            energies,
            kinetic,
            gram: cross_matrix(&expansions, &expansions),
            hamiltonian: cross_matrix(&expansions, &applied),
            expansions,
            band,
        })
    }

    pub fn sites(&self) -> usize {
        self.energies.len()
    }

    pub fn kinetic_at(&self, center: usize, t: f64) -> Result<Vec<f64>> {
        kinetic_profile(&self.kinetic, &self.energies, center, t)
    }

    pub fn contrast_at(&self, center: usize, t: f64, initial_excess: f64) -> Result<f64> {
        Ok(excess(&self.kinetic_at(center, t)?, center) / initial_excess)
    }

    pub fn norm_at(&self, center: usize, t: f64) -> f64 {
        bilinear(&self.gram, &wannier_coefficients(&self.energies, center, t)).re
    }

    pub fn energy_at(&self, center: usize, t: f64) -> f64 {
        bilinear(&self.hamiltonian, &wannier_coefficients(&self.energies, center, t)).re
    }

    /// The Wannier state expanded over all configurations.
    pub fn wannier_state(&self, center: usize, t: f64) -> Vec<C64> {
        let c = wannier_coefficients(&self.energies, center, t);
        let mut out = vec![C64::new(0.0, 0.0); self.expansions[0].len()];
        for (ck, psi) in c.iter().zip(&self.expansions) {
            for (o, p) in out.iter_mut().zip(psi) {
                *o += ck * p;
            }
        }
        out
    }

    /// Full simulation: kinetic energies, conservation checks, refined
    /// lifetime and recurrence events.
    pub fn simulate(&self, center: usize, times: &[f64], threshold: f64) -> Result<BreatherRun> {
        let mut run = evolve_breather(&self.kinetic, &self.band, center, times)?;
        run.max_norm_error = 0.0;
        run.max_energy_error = 0.0;
        for &t in times {
            run.max_norm_error = run.max_norm_error.max((self.norm_at(center, t) - 1.0).abs());
            run.max_energy_error = run
                .max_energy_error
                .max((self.energy_at(center, t) - self.mean_energy).abs());
        }
        run.lifetime = self.refine_lifetime(&run, threshold)?;
        run.recurrences = recurrence_events(&run, threshold);
        Ok(run)
    }

    /// [`lifetime`] refined on a linear sub-grid and by bisection between the
    /// two grid points that bracket the first crossing.
    pub fn refine_lifetime(&self, run: &BreatherRun, threshold: f64) -> Result<Option<f64>> {
        if !(run.initial_excess > 0.0) {
            return Err(Error::NoInitialLocalization(run.initial_excess));
        }
        let rho = run.contrast();
        let Some(i) = first_crossing(&rho, threshold) else {
            return Ok(None);
        };
        if i == 0 {
            return Ok(Some(run.times[0]));
        }
        let rho_at = |t: f64| self.contrast_at(run.center, t, run.initial_excess);
        let (mut lo, mut hi) = (run.times[i - 1], run.times[i]);
        const SUBDIV: usize = 32;
        let step = (hi - lo) / SUBDIV as f64;
        for s in 1..=SUBDIV {
            let t = lo + step * s as f64;
            if s == SUBDIV || rho_at(t)? <= threshold {
                hi = t;
                lo = t - step;
                break;
            }
        }
        for _ in 0..60 {
            let mid = 0.5 * (lo + hi);
            if rho_at(mid)? <= threshold {
                hi = mid;
            } else {
                lo = mid;
            }
            if hi - lo <= 1e-12 * hi {
                break;
            }
        }
        Ok(Some(0.5 * (lo + hi)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::SpectrumOptions;
    use crate::onsite::ModelParams;
    use approx::assert_abs_diff_eq;

    fn spectrum(n: usize, ncut: usize, a4: f64, c: f64) -> LatticeSpectrum {
        LatticeSpectrum::compute(&ModelParams::new(a4, c, n, ncut), &SpectrumOptions::default()).unwrap()
    }

    #[test]
    fn decoupled_expansion_is_a_plane_wave() {
        let s = spectrum(5, 3, 0.2, 0.0);
        let k = 2;
        let psi = expand_to_configurations(s.band_state(2, k).unwrap(), &s.basis, &s.sectors[k]);
        let q = momentum(k, 5);
        for j in 0..5 {
            let mut c = vec![0u8; 5];
            c[j] = 2;
            let idx = s.basis.config_index(s.basis.key(&c)).unwrap();
            let expected = C64::from_polar(1.0 / 5f64.sqrt(), -q * j as f64);
            assert!((psi[idx] - expected).norm() < 1e-12);
        }
        let norm: f64 = psi.iter().map(|z| z.norm_sqr()).sum();
        assert_abs_diff_eq!(norm, 1.0, epsilon = 1e-12);
    }

    #[test]
    fn vacuum_expansion() {
        let basis = LatticeBasis::new(4, 2).unwrap();
        let sector = basis.sector(0);
        let mut amps = vec![C64::new(0.0, 0.0); sector.len()];
        amps[0] = C64::new(1.0, 0.0);
        let psi = expand_to_configurations(&amps, &basis, &sector);
        assert_eq!(psi[0], C64::new(1.0, 0.0));
        assert!(psi[1..].iter().all(|z| z.norm() == 0.0));
    }

    #[test]
    fn expansions_have_unit_norm() {
        let s = spectrum(6, 4, 0.2, 0.3);
        for k in 0..6 {
            let psi = expand_to_configurations(s.band_state(1, k).unwrap(), &s.basis, &s.sectors[k]);
            let norm: f64 = psi.iter().map(|z| z.norm_sqr()).sum();
            assert_abs_diff_eq!(norm, 1.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn kinetic_matrices_are_hermitian_and_covariant() {
        let s = spectrum(5, 4, 0.2, 0.1);
        let m = BreatherModel::new(&s, 2).unwrap();
        let n = 5;
        for j in 0..n {
            let kj = &m.kinetic.per_site[j];
            let next = &m.kinetic.per_site[(j + 1) % n];
            for k in 0..n {
                for kp in 0..n {
                    assert!((kj[(kp, k)] - kj[(k, kp)].conj()).norm() < 1e-12);
                    let phase = C64::from_polar(1.0, -(momentum(k, n) - momentum(kp, n)));
                    assert!((next[(kp, k)] - phase * kj[(kp, k)]).norm() < 1e-10);
                }
            }
        }
        for k in 0..n {
            let total: C64 = (0..n).map(|j| m.kinetic.per_site[j][(k, k)]).sum();
            assert!(total.im.abs() < 1e-12 && total.re > 0.0);
        }
    }

    #[test]
    fn decoupled_breather_is_stationary() {
        let s = spectrum(5, 3, 0.2, 0.0);
        let m = BreatherModel::new(&s, 2).unwrap();
        let times = TimeGrid::Linear { t_max: 100.0, steps: 20 }.points().unwrap();
        let run = m.simulate(2, &times, 0.5).unwrap();
        let g = &s.onsite;
        for j in 0..5 {
            let expected = if j == 2 { g.kinetic[(2, 2)] } else { g.kinetic[(0, 0)] };
            for &e in &run.kinetic[j] {
                assert_abs_diff_eq!(e, expected, epsilon = 1e-12);
            }
            let spread = run.kinetic[j].iter().fold(0.0f64, |a, &e| a.max((e - run.kinetic[j][0]).abs()));
            assert!(spread < 1e-10);
        }
        assert_eq!(run.lifetime, None);
        assert!(run.recurrences.is_empty());
    }

    #[test]
    fn conservation_and_reflection_symmetry() {
        let s = spectrum(7, 4, 0.2, 0.3);
        let m = BreatherModel::new(&s, 1).unwrap();
        let times = TimeGrid::Linear { t_max: 30.0, steps: 60 }.points().unwrap();
        let center = 3;
        let run = m.simulate(center, &times, 0.5).unwrap();
        assert!(run.max_norm_error < 1e-10);
        assert!(run.max_energy_error < 1e-10);
        for d in 1..=3 {
            for i in 0..times.len() {
                let a = run.kinetic[(center + d) % 7][i];
                let b = run.kinetic[(center + 7 - d) % 7][i];
                assert!((a - b).abs() < 1e-9);
            }
        }
        // the excitation sits at the requested center at t = 0
        let profile = m.kinetic_at(center, 0.0).unwrap();
        let peak = (0..7).max_by(|&a, &b| profile[a].total_cmp(&profile[b])).unwrap();
        assert_eq!(peak, center);
        assert!(run.lifetime.unwrap() > 0.0);
    }

    #[test]
    fn refined_lifetime_brackets_interpolated_value() {
        let s = spectrum(7, 3, 0.2, 0.3);
        let m = BreatherModel::new(&s, 1).unwrap();
        let times = TimeGrid::Linear { t_max: 20.0, steps: 20 }.points().unwrap();
        let run = m.simulate(3, &times, 0.5).unwrap();
        let coarse = lifetime(&run, 0.5).unwrap().unwrap();
        let fine = run.lifetime.unwrap();
        assert!((coarse - fine).abs() < 1.0);
        assert_abs_diff_eq!(m.contrast_at(3, fine, run.initial_excess).unwrap(), 0.5, epsilon = 1e-8);
    }

    #[test]
    fn grids() {
        assert_eq!(TimeGrid::Linear { t_max: 2.0, steps: 4 }.points().unwrap(), [0.0, 0.5, 1.0, 1.5, 2.0]);
        let g = TimeGrid::Geometric { t_min: 1.0, decades: 2, per_decade: 2 }.points().unwrap();
        assert_eq!(g.len(), 6);
        assert_abs_diff_eq!(g[5], 100.0, epsilon = 1e-12);
        assert!(matches!(TimeGrid::Linear { t_max: 1.0, steps: 0 }.points(), Err(Error::EmptyGrid)));
    }

    #[test]
    fn incomplete_band_has_no_wannier_state() {
        let band = BoundBand {
            alpha: 3,
            threshold: 0.5,
            entries: vec![None, None],
            complete: false,
            ambiguous: vec![],
        };
        let kin = CrossMomentumKinetic { per_site: vec![] };
        assert!(matches!(
            evolve_breather(&kin, &band, 0, &[0.0]),
            Err(Error::BandIncomplete { .. })
        ));
    }

    #[test]
    fn empty_grid_is_rejected() {
        let s = spectrum(4, 2, 0.2, 0.1);
        let m = BreatherModel::new(&s, 1).unwrap();
        assert!(matches!(m.simulate(0, &[], 0.5), Err(Error::EmptyGrid)));
    }

    #[test]
    fn flat_profile_has_no_localization() {
        let run = BreatherRun {
            alpha: 1,
            center: 0,
            times: vec![0.0],
            kinetic: vec![vec![1.0], vec![1.0]],
            mean_energy: 0.0,
            initial_excess: 0.0,
            lifetime: None,
            recurrences: vec![],
            max_norm_error: 0.0,
            max_energy_error: 0.0,
        };
        assert!(matches!(lifetime(&run, 0.5), Err(Error::NoInitialLocalization(_))));
    }
}
