//! Bound-state bands.
//!
//! An eigenstate `psi_lambda(q)` is attributed to the `alpha`-phonon band when
//! its overlap `V = |<psi_lambda(q)|B_alpha(q)>|` with the single-excitation
//! Bloch wave exceeds a threshold (0.5 by default). Since the Bloch basis is
//! orthonormal, `V` is the modulus of one eigenvector component.

use serde::Serialize;

use crate::qham::SpectrumBlock;
use crate::symbasis::{momentum, LatticeBasis, MomentumSector};
use crate::{Error, Result};

pub const DEFAULT_THRESHOLD: f64 = 0.5;

/// Sector basis index of `B_alpha(q)`.
pub fn single_excitation_index(
    basis: &LatticeBasis,
    sector: &MomentumSector,
    alpha: usize,
) -> Result<usize> {
    let orbit = basis.single_excitation_orbit(alpha)?;
    sector.position(orbit).ok_or_else(|| {
        Error::Inconsistent(format!(
            "single-excitation orbit {alpha} not admitted at k = {}",
            sector.k
        ))
    })
}

/// `V[k][alpha - 1][lambda]` for `alpha = 1..=alpha_max`.
#[derive(Clone, Debug, Default)]
pub struct OverlapTable {
    pub alpha_max: usize,
    pub per_k: Vec<Vec<Vec<f64>>>,
}

impl OverlapTable {
    pub fn get(&self, k: usize, alpha: usize) -> &[f64] {
        &self.per_k[k][alpha - 1]
    }
}

/// Overlaps of every eigenvector of one block with `B_1 .. B_alpha_max`.
pub fn compute_overlaps(
    spectrum: &SpectrumBlock,
    basis: &LatticeBasis,
    sector: &MomentumSector,
    alpha_max: usize,
) -> Result<Vec<Vec<f64>>> {
    (1..=alpha_max)
        .map(|alpha| {
            let idx = single_excitation_index(basis, sector, alpha)?;
            Ok((0..spectrum.energies.len())
                .map(|lambda| spectrum.vectors[(idx, lambda)].norm())
                .collect())
        })
        .collect()
}

/// Picks the state with the largest overlap above `threshold`. Also returns
/// how many states passed the threshold.
pub fn select_state(overlaps: &[f64], threshold: f64) -> (Option<usize>, usize) {
    let mut best: Option<usize> = None;
    let mut hits = 0;
    for (lambda, &v) in overlaps.iter().enumerate() {
        if v > threshold {
            hits += 1;
            if best.is_none_or(|b| v > overlaps[b]) {
                best = Some(lambda);
            }
        }
    }
    (best, hits)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct BandEntry {
    pub k: usize,
    pub lambda: usize,
    pub energy: f64,
    pub overlap: f64,
}

/// The `alpha`-phonon band over the Brillouin zone.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundBand {
    pub alpha: usize,
    pub threshold: f64,
    /// One slot per momentum index.
    pub entries: Vec<Option<BandEntry>>,
    pub complete: bool,
    /// Momenta where more than one state passed the threshold.
    pub ambiguous: Vec<usize>,
}

impl BoundBand {
    pub fn sites(&self) -> usize {
        self.entries.len()
    }

    pub fn missing(&self) -> Vec<usize> {
        (0..self.entries.len()).filter(|&k| self.entries[k].is_none()).collect()
    }

    /// Band energies per momentum; fails when the band is incomplete.
    pub fn energies(&self) -> Result<Vec<f64>> {
        if !self.complete {
            return Err(Error::BandIncomplete {
                alpha: self.alpha,
                missing: self.missing(),
            });
        }
        Ok(self.entries.iter().map(|e| e.unwrap().energy).collect())
    }
}

/// Selects the `alpha` band from the overlap table.
pub fn identify_band(
    overlaps: &OverlapTable,
    energies: &[Vec<f64>],
    alpha: usize,
    threshold: f64,
) -> Result<BoundBand> {
    if alpha == 0 {
        return Err(Error::NotAnExcitation);
    }
    if alpha > overlaps.alpha_max {
        return Err(Error::OrderBeyondCutoff { alpha, ncut: overlaps.alpha_max });
    }
    let mut entries = Vec::with_capacity(energies.len());
    let mut ambiguous = Vec::new();
    for (k, e_k) in energies.iter().enumerate() {
        let row = overlaps.get(k, alpha);
        let (best, hits) = select_state(row, threshold);
        if hits > 1 {
            log::warn!("alpha = {alpha}, k = {k}: {hits} states exceed the overlap threshold");
            ambiguous.push(k);
        }
        entries.push(best.map(|lambda| BandEntry {
            k,
            lambda,
            energy: e_k[lambda],
            overlap: row[lambda],
        }));
    }
    let complete = entries.iter().all(Option::is_some);
    Ok(BoundBand {
        alpha,
        threshold,
        entries,
        complete,
        ambiguous,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct BandStatistics {
    /// `max_q E - min_q E`.
    pub width: f64,
    /// `sum_q E(q) / N`.
    pub mean: f64,
    pub min: f64,
    pub max: f64,
}

pub fn band_statistics(band: &BoundBand) -> Result<BandStatistics> {
    let e = band.energies()?;
    let min = e.iter().copied().fold(f64::INFINITY, f64::min);
    let max = e.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let mean = e.iter().sum::<f64>() / e.len() as f64;
    Ok(BandStatistics {
        width: max - min,
        mean,
        min,
        max,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct DispersionPoint {
    pub q: f64,
    /// Boson-Hubbard single-phonon branch `1 + C cos q`.
    pub hubbard: f64,
    /// Harmonic-chain branch `sqrt(1 + 2 C cos q)`.
    pub harmonic: f64,
}

pub fn dispersion_compare(coupling: f64, qs: &[f64]) -> Result<Vec<DispersionPoint>> {
    qs.iter()
        .map(|&q| {
            let radicand = 1.0 + 2.0 * coupling * q.cos();
            if !(radicand > 0.0) {
                return Err(Error::UnstableHarmonicChain { q, value: radicand });
            }
            Ok(DispersionPoint {
                q,
                hubbard: 1.0 + coupling * q.cos(),
                harmonic: radicand.sqrt(),
            })
        })
        .collect()
}

/// The `N` lattice momenta `2 pi k / N`.
pub fn lattice_momenta(sites: usize) -> Vec<f64> {
    (0..sites).map(|k| momentum(k, sites)).collect()
}
