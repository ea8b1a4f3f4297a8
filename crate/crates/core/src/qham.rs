//! Hamiltonian blocks in the momentum sectors.
//!
//! In units of `hbar Omega` the lattice Hamiltonian is
//!
//! ```text
//! H = sum_l h_l + C sum_l X_l X_{l+1}      (periodic, one term per bond)
//! ```
//!
//! and is expanded in the product basis of on-site eigenstates. Because `H`
//! commutes with translations, each momentum sector is assembled from the
//! action of `H` on orbit representatives only:
//!
//! ```text
//! H_q[r', r] = sum_{c = T^l r'} <c|H|r> exp(i q l) sqrt(p_r / p_r')
//! ```

use faer::Mat;

use crate::linalg::{eigh_complex, max_abs_non_hermiticity, tolerant_order};
use crate::onsite::OnSiteSolution;
use crate::symbasis::{LatticeBasis, MomentumSector};
use crate::{Error, Result, C64};

/// Name of the eigenvector phase convention, recorded in run manifests.
pub const GAUGE_TAG: &str = "bloch-overlap-real-positive";

/// Hamiltonian restricted to one momentum sector.
#[derive(Clone, Debug)]
pub struct QBlock {
    pub k: usize,
    pub matrix: Mat<C64>,
    /// Bond-term images that left the `sum alpha <= ncut` subspace.
    pub dropped: usize,
}

impl QBlock {
    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn hermiticity_error(&self) -> f64 {
        max_abs_non_hermiticity(&self.matrix)
    }

    pub fn trace(&self) -> f64 {
        (0..self.dim()).map(|i| self.matrix[(i, i)].re).sum()
    }
}

/// One term `amp * |image>` of the bond operator acting on a configuration.
pub(crate) struct BondImage {
    pub key: u128,
    pub amp: f64,
}

/// Calls `emit` for every image of `config` under `sum_l X_l X_{l+1}` that
/// stays inside the cutoff; returns the number of images dropped by it.
pub(crate) fn for_each_bond_image(
    basis: &LatticeBasis,
    onsite: &OnSiteSolution,
    config: &[u8],
    mut emit: impl FnMut(BondImage),
) -> usize {
    let n = basis.sites;
    let ncut = basis.ncut;
    let total: usize = config.iter().map(|&a| a as usize).sum();
    let key = basis.key(config);
    let mut dropped = 0;
    for l in 0..n {
        let r = (l + 1) % n;
        let (a, b) = (config[l] as usize, config[r] as usize);
        let rest = total - a - b;
        let (wl, wr) = (basis.weight(l), basis.weight(r));
        let base = key - a as u128 * wl - b as u128 * wr;
        for a2 in 0..=ncut {
            let xa = onsite.x[(a2, a)];
            if xa == 0.0 {
                continue;
            }
            for b2 in 0..=ncut {
                let amp = xa * onsite.x[(b2, b)];
                if amp == 0.0 {
                    continue;
                }
                if rest + a2 + b2 > ncut {
                    dropped += 1;
                    continue;
                }
                emit(BondImage {
                    key: base + a2 as u128 * wl + b2 as u128 * wr,
                    amp,
                });
            }
        }
    }
    dropped
}

fn onsite_energy(onsite: &OnSiteSolution, config: &[u8]) -> f64 {
    config.iter().map(|&a| onsite.gamma[a as usize]).sum()
}

/// Builds `H_q` for one sector.
pub fn assemble_qblock(
    basis: &LatticeBasis,
    sector: &MomentumSector,
    onsite: &OnSiteSolution,
    coupling: f64,
) -> Result<QBlock> {
    if onsite.dim() <= basis.ncut {
        return Err(Error::InvalidParams(format!(
            "on-site solution has {} levels, cutoff needs {}",
            onsite.dim(),
            basis.ncut + 1
        )));
    }
    let dim = sector.len();
    let q = sector.q();
    let mut matrix = Mat::<C64>::zeros(dim, dim);
    let mut dropped = 0;
    for (col, &orbit) in sector.orbits.iter().enumerate() {
        let rep = &basis.orbits[orbit].representative.0;
        let period = basis.orbits[orbit].period as f64;
        matrix[(col, col)] += C64::new(onsite_energy(onsite, rep), 0.0);
        if coupling == 0.0 {
            continue;
        }
        let mut missing = None;
        dropped += for_each_bond_image(basis, onsite, rep, |img| {
            let Some(loc) = basis.locate(img.key) else {
                missing = Some(img.key);
                return;
            };
            let Some(row) = sector.position(loc.orbit) else {
                // orbits not admitted at this k cancel in the Bloch sum
                return;
            };
            let ratio = (period / basis.orbits[loc.orbit].period as f64).sqrt();
            let phase = C64::from_polar(1.0, q * loc.shift as f64);
            matrix[(row, col)] += phase * (coupling * img.amp * ratio);
        });
        if let Some(key) = missing {
            return Err(Error::Inconsistent(format!(
                "bond image with key {key} is inside the cutoff but not in the basis"
            )));
        }
    }
    Ok(QBlock {
        k: sector.k,
        matrix,
        dropped,
    })
}

/// Applies `H` to a state expanded over all configurations of `basis`.
pub fn apply_hamiltonian(
    basis: &LatticeBasis,
    onsite: &OnSiteSolution,
    coupling: f64,
    psi: &[C64],
) -> Result<Vec<C64>> {
    assert_eq!(psi.len(), basis.configs.len());
    let mut out = vec![C64::new(0.0, 0.0); psi.len()];
    for (i, config) in basis.configs.iter().enumerate() {
        let amp = psi[i];
        out[i] += amp * onsite_energy(onsite, &config.0);
        if coupling == 0.0 || amp == C64::new(0.0, 0.0) {
            continue;
        }
        let mut missing = None;
        for_each_bond_image(basis, onsite, &config.0, |img| match basis.config_index(img.key) {
            Some(j) => out[j] += amp * (coupling * img.amp),
            None => missing = Some(img.key),
        });
        if let Some(key) = missing {
            return Err(Error::Inconsistent(format!("configuration key {key} not in basis")));
        }
    }
    Ok(out)
}

/// How an eigenvector's global phase was fixed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GaugeTag {
    /// Overlap with the single-excitation Bloch wave of this order is real positive.
    Bloch { alpha: usize },
    /// Largest-magnitude amplitude is real positive.
    Largest,
}

/// Anchors for the phase convention: sector indices of the single-excitation
/// Bloch waves and the overlap above which they take precedence.
#[derive(Clone, Debug, Default)]
pub struct Gauge {
    pub anchors: Vec<(usize, usize)>,
    pub threshold: f64,
}

impl Gauge {
    pub fn largest_component() -> Self {
        Self::default()
    }

    /// Anchors on `B_alpha(q)` for every `alpha = 1..=ncut`.
    pub fn bloch(basis: &LatticeBasis, sector: &MomentumSector, threshold: f64) -> Result<Self> {
        let mut anchors = Vec::with_capacity(basis.ncut);
        for alpha in 1..=basis.ncut {
            let orbit = basis.single_excitation_orbit(alpha)?;
            let index = sector.position(orbit).ok_or_else(|| {
                Error::Inconsistent(format!("B_{alpha} not admitted at k = {}", sector.k))
            })?;
            anchors.push((alpha, index));
        }
        Ok(Self { anchors, threshold })
    }
}

/// Eigenpairs of one sector block.
#[derive(Clone, Debug)]
pub struct SpectrumBlock {
    pub k: usize,
    /// Ascending, in units of `hbar Omega`.
    pub energies: Vec<f64>,
    /// Columns are eigenvectors in the sector basis.
    pub vectors: Mat<C64>,
    pub gauge: Vec<GaugeTag>,
}

impl SpectrumBlock {
    /// The block at `N - k`: `H_{-q}` is the complex conjugate of `H_q`.
    pub fn conjugate(&self, k: usize) -> SpectrumBlock {
        SpectrumBlock {
            k,
            energies: self.energies.clone(),
            vectors: Mat::from_fn(self.vectors.nrows(), self.vectors.ncols(), |i, j| {
                self.vectors[(i, j)].conj()
            }),
            gauge: self.gauge.clone(),
        }
    }

    pub fn column(&self, lambda: usize) -> Vec<C64> {
        (0..self.vectors.nrows()).map(|i| self.vectors[(i, lambda)]).collect()
    }
}

fn is_diagonal(m: &Mat<C64>) -> bool {
    let n = m.nrows();
    (0..n).all(|j| (0..n).all(|i| i == j || m[(i, j)] == C64::new(0.0, 0.0)))
}

/// Dense Hermitian diagonalization with the phase convention of `gauge`.
pub fn diagonalize_qblock(block: &QBlock, gauge: &Gauge) -> Result<SpectrumBlock> {
    let n = block.dim();
    let (values, vectors) = if is_diagonal(&block.matrix) {
        let diag: Vec<f64> = (0..n).map(|i| block.matrix[(i, i)].re).collect();
        (diag, Mat::<C64>::identity(n, n))
    } else {
        eigh_complex(&block.matrix, &format!("sector k = {}", block.k))?
    };
    let order = tolerant_order(&values, 1e-12);
    let energies: Vec<f64> = order.iter().map(|&i| values[i]).collect();
    let mut vectors = Mat::from_fn(n, n, |r, c| vectors[(r, order[c])]);

    let mut tags = Vec::with_capacity(n);
    for c in 0..n {
        let mut pivot = None;
        let mut best = gauge.threshold;
        for &(alpha, idx) in &gauge.anchors {
            let v = vectors[(idx, c)].norm();
            if v > best {
                best = v;
                pivot = Some((alpha, idx));
            }
        }
        let (tag, idx) = match pivot {
            Some((alpha, idx)) => (GaugeTag::Bloch { alpha }, idx),
            None => {
                let mut idx = 0;
                for r in 1..n {
                    if vectors[(r, c)].norm() > vectors[(idx, c)].norm() {
                        idx = r;
                    }
                }
                (GaugeTag::Largest, idx)
            }
        };
        let amp = vectors[(idx, c)];
        if amp.norm() > 0.0 {
            let phase = amp.conj() / amp.norm();
            for r in 0..n {
                vectors[(r, c)] *= phase;
            }
            vectors[(idx, c)] = C64::new(vectors[(idx, c)].norm(), 0.0);
        }
        tags.push(tag);
    }
    Ok(SpectrumBlock {
        k: block.k,
        energies,
        vectors,
        gauge: tags,
    })
}
