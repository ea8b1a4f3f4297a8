//! Self-check battery behind `kgbreather validate`.

use serde::Serialize;

use crate::bands::lattice_momenta;
use crate::breather::{BreatherModel, TimeGrid};
use crate::lattice::{LatticeSpectrum, SpectrumOptions};
use crate::onsite::ModelParams;
use crate::oracle::dense_hamiltonian;
use crate::qham::assemble_qblock;
use crate::{Result, C64};

pub const SPECTRAL_TOL: f64 = 1e-10;
pub const EVOLUTION_TOL: f64 = 1e-8;
pub const CONSERVATION_TOL: f64 = 1e-10;
pub const HERMITICITY_TOL: f64 = 1e-12;
pub const DISPERSION_TOL: f64 = 1e-3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Fault {
    /// Adds an anti-Hermitian perturbation to one sector block.
    Hermiticity,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub value: f64,
    pub tolerance: f64,
    pub passed: bool,
}

impl Check {
    fn at_most(name: String, value: f64, tolerance: f64) -> Self {
        Self {
            name,
            value,
            tolerance,
            passed: value <= tolerance,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Battery {
    pub sites: usize,
    pub ncut: usize,
    pub osc_dim: Option<usize>,
    pub a4_values: Vec<f64>,
    pub couplings: Vec<f64>,
    pub threshold: f64,
    pub serial: bool,
    pub fault: Option<Fault>,
    /// Lattice size of the harmonic-dispersion check.
    pub dispersion_sites: usize,
}

fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

/// Sector path against the dense oracle at one parameter point.
fn oracle_checks(b: &Battery, a4: f64, c: f64, out: &mut Vec<Check>) -> Result<()> {
    let tag = format!("n={},ncut={},a4={a4},c={c}", b.sites, b.ncut);
    let mut params = ModelParams::new(a4, c, b.sites, b.ncut);
    if let Some(m) = b.osc_dim {
        params = params.with_osc_dim(m);
    }
    let opts = SpectrumOptions {
        threshold: b.threshold,
        alpha_max: None,
        serial: b.serial,
    };
    let spectrum = LatticeSpectrum::compute(&params, &opts)?;

    let mut herm: f64 = 0.0;
    for sector in &spectrum.sectors {
        let mut block = assemble_qblock(&spectrum.basis, sector, &spectrum.onsite, c)?;
        if b.fault == Some(Fault::Hermiticity) && block.dim() > 1 {
            block.matrix[(0, 1)] += C64::new(1e-6, 0.0);
        }
        herm = herm.max(block.hermiticity_error());
    }
    out.push(Check::at_most(format!("sector-hermiticity[{tag}]"), herm, HERMITICITY_TOL));

    let dense = dense_hamiltonian(b.sites, b.ncut, &spectrum.onsite, c)?;
    let mut union: Vec<f64> = spectrum.energies.iter().flatten().copied().collect();
    union.sort_by(f64::total_cmp);
    let spectral = if union.len() == dense.dim() {
        max_abs_diff(&union, &dense.energies)
    } else {
        f64::INFINITY
    };
    out.push(Check::at_most(format!("spectral-equivalence[{tag}]"), spectral, SPECTRAL_TOL));

    let sector_trace: f64 = spectrum.diagnostics.iter().map(|d| d.trace).sum();
    let dense_trace = dense.trace();
    out.push(Check::at_most(
        format!("trace[{tag}]"),
        (sector_trace - dense_trace).abs() / dense_trace.abs().max(1.0),
        SPECTRAL_TOL,
    ));

    let center = b.sites / 2;
    let times = TimeGrid::Linear { t_max: 25.0, steps: 49 }.points()?;
    for alpha in 1..=b.ncut {
        let band = spectrum.band(alpha)?;
        if alpha == 1 {
            out.push(Check {
                name: format!("band-complete[{tag},alpha=1]"),
                value: band.missing().len() as f64,
                tolerance: 0.0,
                passed: band.complete,
            });
        }
        if !band.complete {
            log::info!("{tag}: band alpha = {alpha} incomplete, skipped");
            continue;
        }
        let e = band.energies()?;
        let n = e.len();
        let sym = (0..n).map(|k| (e[k] - e[(n - k) % n]).abs()).fold(0.0, f64::max);
        out.push(Check::at_most(format!("band-symmetry[{tag},alpha={alpha}]"), sym, SPECTRAL_TOL));

        let model = BreatherModel::new(&spectrum, alpha)?;
        let run = model.simulate(center, &times, b.threshold)?;
        out.push(Check::at_most(
            format!("norm-conservation[{tag},alpha={alpha}]"),
            run.max_norm_error,
            CONSERVATION_TOL,
        ));
        out.push(Check::at_most(
            format!("energy-conservation[{tag},alpha={alpha}]"),
            run.max_energy_error,
            CONSERVATION_TOL,
        ));
        if c == 0.0 {
            let drift = run
                .kinetic
                .iter()
                .map(|s| s.iter().map(|e| (e - s[0]).abs()).fold(0.0, f64::max))
                .fold(0.0, f64::max);
            out.push(Check::at_most(format!("stationarity[{tag},alpha={alpha}]"), drift, CONSERVATION_TOL));
        }

        let w0 = model.wannier_state(center, 0.0);
        let initial = dense.embed(&spectrum.basis.configs, &w0)?;
        let direct = dense.direct_evolution(&initial, &times)?;
        let dev = (0..n)
            .map(|j| max_abs_diff(&run.kinetic[j], &direct[j]))
            .fold(0.0, f64::max);
        out.push(Check::at_most(format!("evolution-equivalence[{tag},alpha={alpha}]"), dev, EVOLUTION_TOL));
    }
    Ok(())
}

/// Maximum deviation of the one-phonon band from the harmonic-chain branch.
pub fn harmonic_dispersion_deviation(sites: usize, ncut: usize, coupling: f64, serial: bool) -> Result<f64> {
    let params = ModelParams::new(0.0, coupling, sites, ncut);
    let opts = SpectrumOptions {
        serial,
        alpha_max: Some(1),
        ..Default::default()
    };
    let spectrum = LatticeSpectrum::compute(&params, &opts)?;
    let ground = spectrum.ground_energy();
    let band = spectrum.band(1)?.energies()?;
    let branch = crate::bands::dispersion_compare(coupling, &lattice_momenta(sites))?;
    Ok(band
        .iter()
        .zip(&branch)
        .map(|(e, p)| (e - ground - p.harmonic).abs())
        .fold(0.0, f64::max))
}

fn dispersion_check(b: &Battery, out: &mut Vec<Check>) -> Result<()> {
    let devs: Vec<f64> = [2, 4, 6]
        .iter()
        .map(|&nc| harmonic_dispersion_deviation(b.dispersion_sites, nc, 0.1, b.serial))
        .collect::<Result<_>>()?;
    let monotone = devs.windows(2).all(|w| w[1] < w[0]);
    out.push(Check {
        name: format!("harmonic-dispersion[n={},c=0.1,ncut=2/4/6]", b.dispersion_sites),
        value: devs[2],
        tolerance: DISPERSION_TOL,
        passed: monotone && devs[2] < DISPERSION_TOL,
    });
    Ok(())
}

pub fn run_battery(b: &Battery) -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for &a4 in &b.a4_values {
        for &c in &b.couplings {
            oracle_checks(b, a4, c, &mut checks)?;
        }
    }
    dispersion_check(b, &mut checks)?;
    Ok(checks)
}
