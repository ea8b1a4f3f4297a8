use kgbreather::breather::{BreatherModel, TimeGrid};
use kgbreather::lattice::{LatticeSpectrum, SpectrumOptions};
use kgbreather::onsite::ModelParams;
use kgbreather::oracle::dense_hamiltonian;
use kgbreather::C64;

fn spectrum(n: usize, ncut: usize, a4: f64, c: f64) -> LatticeSpectrum {
    LatticeSpectrum::compute(&ModelParams::new(a4, c, n, ncut), &SpectrumOptions::default()).unwrap()
}

#[test]
fn sector_spectra_match_dense_spectrum() {
    for n in 2..=4 {
        for ncut in 1..=3 {
            for a4 in [0.0, 0.2] {
                for c in [0.0, 0.05, 0.3] {
                    let s = spectrum(n, ncut, a4, c);
                    let dense = dense_hamiltonian(n, ncut, &s.onsite, c).unwrap();
                    let mut union: Vec<f64> = s.energies.iter().flatten().copied().collect();
                    union.sort_by(f64::total_cmp);
                    assert_eq!(union.len(), dense.dim());
                    for (x, y) in union.iter().zip(&dense.energies) {
                        assert!((x - y).abs() < 1e-10, "n={n} ncut={ncut} a4={a4} c={c}: {x} vs {y}");
                    }
                    let trace: f64 = s.diagnostics.iter().map(|d| d.trace).sum();
                    assert!((trace - dense.trace()).abs() < 1e-10 * dense.trace().abs().max(1.0));
                }
            }
        }
    }
}

#[test]
fn cubic_term_sector_spectra_match_dense_spectrum() {
    let p = ModelParams::new(0.2, 0.1, 4, 3).with_a3(0.1);
    let s = LatticeSpectrum::compute(&p, &SpectrumOptions::default()).unwrap();
    let dense = dense_hamiltonian(4, 3, &s.onsite, 0.1).unwrap();
    let mut union: Vec<f64> = s.energies.iter().flatten().copied().collect();
    union.sort_by(f64::total_cmp);
    for (x, y) in union.iter().zip(&dense.energies) {
        assert!((x - y).abs() < 1e-10);
    }
}

#[test]
fn cross_momentum_kinetic_matches_dense_contraction() {
    let s = spectrum(4, 3, 0.2, 0.1);
    let dense = dense_hamiltonian(4, 3, &s.onsite, 0.1).unwrap();
    for alpha in 1..=2 {
        let model = BreatherModel::new(&s, alpha).unwrap();
        let states: Vec<Vec<C64>> = model
            .expansions
            .iter()
            .map(|psi| dense.embed(&s.basis.configs, psi).unwrap())
            .collect();
        for j in 0..4 {
            let kj = dense.site_kinetic(j);
            for kp in 0..4 {
                for k in 0..4 {
                    let mut z = C64::new(0.0, 0.0);
                    for row in 0..dense.dim() {
                        for col in 0..dense.dim() {
                            z += states[kp][row].conj() * kj[(row, col)] * states[k][col];
                        }
                    }
                    let got = model.kinetic.per_site[j][(kp, k)];
                    assert!((got - z).norm() < 1e-10, "alpha={alpha} j={j} ({kp},{k})");
                }
            }
        }
    }
}

#[test]
fn breather_evolution_matches_direct_evolution() {
    let times = TimeGrid::Linear { t_max: 40.0, steps: 49 }.points().unwrap();
    assert_eq!(times.len(), 50);
    for (a4, c) in [(0.2, 0.0), (0.2, 0.05), (0.2, 0.3), (0.0, 0.3)] {
        let s = spectrum(4, 3, a4, c);
        let dense = dense_hamiltonian(4, 3, &s.onsite, c).unwrap();
        for alpha in 1..=3 {
            let Ok(model) = BreatherModel::new(&s, alpha) else {
                assert!(a4 == 0.0 && alpha > 1, "band {alpha} missing at a4={a4}, c={c}");
                continue;
            };
            let run = model.simulate(2, &times, 0.5).unwrap();
            let w0 = dense.embed(&s.basis.configs, &model.wannier_state(2, 0.0)).unwrap();
            let direct = dense.direct_evolution(&w0, &times).unwrap();
            for j in 0..4 {
                for (x, y) in run.kinetic[j].iter().zip(&direct[j]) {
                    assert!((x - y).abs() < 1e-8, "a4={a4} c={c} alpha={alpha} site {j}");
                }
                // static expectation at t = 0
                assert!((run.kinetic[j][0] - direct[j][0]).abs() < 1e-10);
            }
        }
    }
}

#[test]
fn wannier_state_evolves_like_dense_state() {
    // the time-dependent Wannier state is itself an exact solution
    let s = spectrum(3, 3, 0.2, 0.3);
    let dense = dense_hamiltonian(3, 3, &s.onsite, 0.3).unwrap();
    let model = BreatherModel::new(&s, 2).unwrap();
    let t = 7.3;
    let w0 = dense.embed(&s.basis.configs, &model.wannier_state(1, 0.0)).unwrap();
    let wt = dense.embed(&s.basis.configs, &model.wannier_state(1, t)).unwrap();
    let v = &dense.vectors;
    let d = dense.dim();
    for i in 0..d {
        let mut z = C64::new(0.0, 0.0);
        for m in 0..d {
            let proj: C64 = (0..d).map(|l| w0[l] * v[(l, m)]).sum();
            z += v[(i, m)] * proj * C64::from_polar(1.0, -dense.energies[m] * t);
        }
        assert!((z - wt[i]).norm() < 1e-10);
    }
}
