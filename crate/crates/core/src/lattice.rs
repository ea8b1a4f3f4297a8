//! End-to-end spectrum of a lattice: every momentum sector assembled,
//! diagonalized and reduced to energies, overlaps and band eigenvectors.
//!
//! Full eigenvector matrices are dropped once a sector is processed; only the
//! columns selected for a bound band are kept.

use rayon::prelude::*;

use crate::bands::{compute_overlaps, identify_band, select_state, BoundBand, OverlapTable};
use crate::onsite::{solve_onsite, ModelParams, OnSiteSolution};
use crate::qham::{assemble_qblock, diagonalize_qblock, Gauge, SpectrumBlock};
use crate::symbasis::{LatticeBasis, MomentumSector};
use crate::{Result, C64};

#[derive(Clone, Copy, Debug)]
pub struct SpectrumOptions {
    pub threshold: f64,
    /// Highest band order to track; defaults to `ncut`.
    pub alpha_max: Option<usize>,
    pub serial: bool,
}

impl Default for SpectrumOptions {
    fn default() -> Self {
        Self {
            threshold: crate::bands::DEFAULT_THRESHOLD,
            alpha_max: None,
            serial: false,
        }
    }
}

/// Diagnostics for one solved sector.
#[derive(Clone, Copy, Debug, Default)]
pub struct SectorDiagnostics {
    pub dim: usize,
    pub dropped: usize,
    pub non_hermiticity: f64,
    pub trace: f64,
}

struct SectorResult {
    k: usize,
    energies: Vec<f64>,
    overlaps: Vec<Vec<f64>>,
    /// Selected eigenvector per band order, in the sector basis.
    selected: Vec<Option<Vec<C64>>>,
    diagnostics: SectorDiagnostics,
}

/// Assembles and diagonalizes one sector with the Bloch-anchored gauge.
pub fn solve_sector(
    basis: &LatticeBasis,
    sector: &MomentumSector,
    onsite: &OnSiteSolution,
    coupling: f64,
    threshold: f64,
) -> Result<(SpectrumBlock, SectorDiagnostics)> {
    let block = assemble_qblock(basis, sector, onsite, coupling)?;
    let diagnostics = SectorDiagnostics {
        dim: block.dim(),
        dropped: block.dropped,
        non_hermiticity: block.hermiticity_error(),
        trace: block.trace(),
    };
    let gauge = Gauge::bloch(basis, sector, threshold)?;
    Ok((diagonalize_qblock(&block, &gauge)?, diagnostics))
}

pub struct LatticeSpectrum {
    pub params: ModelParams,
    pub onsite: OnSiteSolution,
    pub basis: LatticeBasis,
    pub sectors: Vec<MomentumSector>,
    pub threshold: f64,
    /// `energies[k][lambda]`, ascending in `lambda`.
    pub energies: Vec<Vec<f64>>,
    pub overlaps: OverlapTable,
    pub diagnostics: Vec<SectorDiagnostics>,
    band_states: Vec<Vec<Option<Vec<C64>>>>,
}

impl LatticeSpectrum {
    pub fn compute(params: &ModelParams, opts: &SpectrumOptions) -> Result<Self> {
        params.validate()?;
        let onsite = solve_onsite(params)?;
        let basis = LatticeBasis::new(params.sites, params.ncut)?;
        let sectors = basis.sectors();
        let n = params.sites;
        let alpha_max = opts.alpha_max.unwrap_or(params.ncut).min(params.ncut);

        let reduce = |k: usize| -> Result<SectorResult> {
            let sector = &sectors[k];
            let (spectrum, diagnostics) =
                solve_sector(&basis, sector, &onsite, params.coupling, opts.threshold)?;
            let overlaps = compute_overlaps(&spectrum, &basis, sector, alpha_max)?;
            let selected = overlaps
                .iter()
                .map(|row| select_state(row, opts.threshold).0.map(|l| spectrum.column(l)))
                .collect();
            Ok(SectorResult {
                k,
                energies: spectrum.energies,
                overlaps,
                selected,
                diagnostics,
            })
        };

        // H_{N-k} is the complex conjugate of H_k, so only k <= N/2 is solved.
        let independent: Vec<usize> = (0..=n / 2).collect();
        let solved: Vec<SectorResult> = if opts.serial {
            independent.iter().map(|&k| reduce(k)).collect::<Result<_>>()?
        } else {
            independent.par_iter().map(|&k| reduce(k)).collect::<Result<_>>()?
        };

        let mut per_k: Vec<Option<SectorResult>> = (0..n).map(|_| None).collect();
        for res in solved {
            let mirror = (n - res.k) % n;
            if mirror != res.k {
                per_k[mirror] = Some(SectorResult {
                    k: mirror,
                    energies: res.energies.clone(),
                    overlaps: res.overlaps.clone(),
                    selected: res
                        .selected
                        .iter()
                        .map(|v| v.as_ref().map(|v| v.iter().map(|z| z.conj()).collect()))
                        .collect(),
                    diagnostics: res.diagnostics,
                });
            }
            let k = res.k;
            per_k[k] = Some(res);
        }

        let mut energies = Vec::with_capacity(n);
        let mut overlap_rows = Vec::with_capacity(n);
        let mut diagnostics = Vec::with_capacity(n);
        let mut band_states = vec![Vec::with_capacity(n); alpha_max];
        for res in per_k.into_iter().map(Option::unwrap) {
            energies.push(res.energies);
            overlap_rows.push(res.overlaps);
            diagnostics.push(res.diagnostics);
            for (a, v) in res.selected.into_iter().enumerate() {
                band_states[a].push(v);
            }
        }

        Ok(Self {
            params: *params,
            onsite,
            basis,
            sectors,
            threshold: opts.threshold,
            energies,
            overlaps: OverlapTable {
                alpha_max,
                per_k: overlap_rows,
            },
            diagnostics,
            band_states,
        })
    }

    pub fn alpha_max(&self) -> usize {
        self.overlaps.alpha_max
    }

    pub fn band(&self, alpha: usize) -> Result<BoundBand> {
        identify_band(&self.overlaps, &self.energies, alpha, self.threshold)
    }

    /// Eigenvector (sector basis) of the `alpha` band member at `k`.
    pub fn band_state(&self, alpha: usize, k: usize) -> Option<&[C64]> {
        self.band_states.get(alpha.checked_sub(1)?)?.get(k)?.as_deref()
    }

    pub fn ground_energy(&self) -> f64 {
        self.energies
            .iter()
            .filter_map(|e| e.first().copied())
            .fold(f64::INFINITY, f64::min)
    }

    pub fn dropped_images(&self) -> usize {
        self.diagnostics.iter().map(|d| d.dropped).sum()
    }

    pub fn max_non_hermiticity(&self) -> f64 {
        self.diagnostics.iter().map(|d| d.non_hermiticity).fold(0.0, f64::max)
    }
}
