//! Brute-force reference solver for small lattices.
//!
//! Builds the dense real Hamiltonian on the full configuration space, without
//! any use of translation symmetry, and evolves states by exact eigenphases.
//! The enumeration and operator action here are written independently of
//! [`crate::symbasis`] and [`crate::qham`] so the two paths cross-check.

use std::collections::HashMap;

use faer::Mat;

use crate::linalg::{eigh_real, max_abs_asymmetry};
use crate::onsite::OnSiteSolution;
use crate::symbasis::Configuration;
use crate::{Error, Result, C64};

pub const DENSE_DIM_CAP: usize = 20_000;

/// Dense Hamiltonian and its full eigen-decomposition.
pub struct DenseProblem {
    pub sites: usize,
    pub ncut: usize,
    pub coupling: f64,
    /// Every string with `sum alpha <= ncut`, lexicographic.
    pub configs: Vec<Vec<u8>>,
    pub hamiltonian: Mat<f64>,
    pub energies: Vec<f64>,
    pub vectors: Mat<f64>,
    onsite: OnSiteSolution,
    index: HashMap<Vec<u8>, usize>,
}

fn all_configurations(sites: usize, ncut: usize) -> Vec<Vec<u8>> {
    // grow from the vacuum by adding one quantum at a time
    let mut all = vec![vec![0u8; sites]];
    let mut shell = all.clone();
    for _ in 0..ncut {
        let mut next: std::collections::BTreeSet<Vec<u8>> = Default::default();
        for c in &shell {
            for i in 0..sites {
                let mut d = c.clone();
                d[i] += 1;
                next.insert(d);
            }
        }
        shell = next.into_iter().collect();
        all.extend(shell.iter().cloned());
    }
    all.sort();
    all
}

pub fn dense_hamiltonian(
    sites: usize,
    ncut: usize,
    onsite: &OnSiteSolution,
    coupling: f64,
) -> Result<DenseProblem> {
    let expected = crate::symbasis::binomial((sites + ncut) as u128, sites as u128);
    if expected > DENSE_DIM_CAP as u128 {
        return Err(Error::DimensionGuard {
            dim: usize::try_from(expected).unwrap_or(usize::MAX),
            cap: DENSE_DIM_CAP,
        });
    }
    let configs = all_configurations(sites, ncut);
    let dim = configs.len();
    let index: HashMap<Vec<u8>, usize> = configs.iter().cloned().zip(0..).collect();
    let mut h = Mat::<f64>::zeros(dim, dim);
    for (col, c) in configs.iter().enumerate() {
        h[(col, col)] += c.iter().map(|&a| onsite.gamma[a as usize]).sum::<f64>();
        for l in 0..sites {
            let r = (l + 1) % sites;
            for a in 0..=ncut {
                for b in 0..=ncut {
                    let mut image = c.clone();
                    image[l] = a as u8;
                    image[r] = b as u8;
                    let Some(&row) = index.get(&image) else {
                        continue;
                    };
                    let amp = onsite.x[(a, c[l] as usize)] * onsite.x[(b, c[r] as usize)];
                    h[(row, col)] += coupling * amp;
                }
            }
        }
    }
    let (energies, vectors) = eigh_real(&h, "dense oracle")?;
    Ok(DenseProblem {
        sites,
        ncut,
        coupling,
        configs,
        hamiltonian: h,
        energies,
        vectors,
        onsite: onsite.clone(),
        index,
    })
}

impl DenseProblem {
    pub fn dim(&self) -> usize {
        self.configs.len()
    }

    pub fn index_of(&self, config: &[u8]) -> Option<usize> {
        self.index.get(config).copied()
    }

    pub fn asymmetry(&self) -> f64 {
        max_abs_asymmetry(&self.hamiltonian)
    }

    pub fn trace(&self) -> f64 {
        (0..self.dim()).map(|i| self.hamiltonian[(i, i)]).sum()
    }

    /// Reorders a state given over `configs` into this problem's ordering.
    pub fn embed(&self, configs: &[Configuration], psi: &[C64]) -> Result<Vec<C64>> {
        if configs.len() != self.dim() || psi.len() != configs.len() {
            return Err(Error::Inconsistent(format!(
                "state over {} configurations does not match the dense space of {}",
                psi.len(),
                self.dim()
            )));
        }
        let mut out = vec![C64::new(0.0, 0.0); self.dim()];
        for (c, &amp) in configs.iter().zip(psi) {
            let i = self
                .index_of(&c.0)
                .ok_or_else(|| Error::Inconsistent(format!("configuration {c} missing from dense space")))?;
            out[i] = amp;
        }
        Ok(out)
    }

    /// `P_j^2/2` as a dense matrix on the truncated space.
    pub fn site_kinetic(&self, site: usize) -> Mat<f64> {
        let dim = self.dim();
        let mut m = Mat::<f64>::zeros(dim, dim);
        for (col, c) in self.configs.iter().enumerate() {
            for a in 0..=self.ncut {
                let mut image = c.clone();
                image[site] = a as u8;
                if let Some(&row) = self.index.get(&image) {
                    m[(row, col)] += self.onsite.kinetic[(a, c[site] as usize)];
                }
            }
        }
        m
    }

    /// Evolves `initial` (in this problem's configuration order) by exact
    /// eigenphases and returns `kinetic[site][t]`.
    pub fn direct_evolution(&self, initial: &[C64], times: &[f64]) -> Result<Vec<Vec<f64>>> {
        direct_evolution(self, initial, times)
    }
}

pub fn direct_evolution(dense: &DenseProblem, initial: &[C64], times: &[f64]) -> Result<Vec<Vec<f64>>> {
    if times.is_empty() {
        return Err(Error::EmptyGrid);
    }
    let dim = dense.dim();
    assert_eq!(initial.len(), dim);
    let norm: f64 = initial.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    if (norm - 1.0).abs() > 1e-8 {
        return Err(Error::InitialStateNorm(norm));
    }
    let v = &dense.vectors;
    let coeffs: Vec<C64> = (0..dim)
        .map(|n| (0..dim).map(|i| initial[i] * v[(i, n)]).sum())
        .collect();
    let kinetic: Vec<Mat<f64>> = (0..dense.sites).map(|j| dense.site_kinetic(j)).collect();
    let mut out = vec![Vec::with_capacity(times.len()); dense.sites];
    for &t in times {
        let evolved: Vec<C64> = (0..dim)
            .map(|i| {
                (0..dim)
                    .map(|n| v[(i, n)] * coeffs[n] * C64::from_polar(1.0, -dense.energies[n] * t))
                    .sum()
            })
            .collect();
        for (j, kj) in kinetic.iter().enumerate() {
            let mut acc = C64::new(0.0, 0.0);
            for col in 0..dim {
                let mut row_sum = C64::new(0.0, 0.0);
                for row in 0..dim {
                    row_sum += evolved[row].conj() * kj[(row, col)];
                }
                acc += row_sum * evolved[col];
            }
            out[j].push(acc.re);
        }
    }
    Ok(out)
}
