use kgbreather::breather::{BreatherModel, TimeGrid};
use kgbreather::lattice::{LatticeSpectrum, SpectrumOptions};
use kgbreather::onsite::ModelParams;
use kgbreather::qham::assemble_qblock;
use proptest::prelude::*;

fn config() -> ProptestConfig {
    ProptestConfig {
        cases: 24,
        ..ProptestConfig::default()
    }
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn blocks_are_hermitian_and_bands_symmetric(
        n in 2usize..=6,
        ncut in 1usize..=3,
        a4 in 0.05f64..0.5,
        c in 0.0f64..0.3,
    ) {
        let p = ModelParams::new(a4, c, n, ncut);
        let s = LatticeSpectrum::compute(&p, &SpectrumOptions::default()).unwrap();
        for sector in &s.sectors {
            let block = assemble_qblock(&s.basis, sector, &s.onsite, c).unwrap();
            prop_assert!(block.hermiticity_error() < 1e-12);
        }
        for alpha in 1..=ncut {
            let band = s.band(alpha).unwrap();
            if let Ok(e) = band.energies() {
                for k in 0..n {
                    prop_assert!((e[k] - e[(n - k) % n]).abs() < 1e-10);
                }
            }
        }
    }

    #[test]
    fn breather_invariants(
        n in 3usize..=7,
        a4 in 0.1f64..0.4,
        c in 0.0f64..0.3,
        alpha in 1usize..=2,
        center_frac in 0.0f64..1.0,
    ) {
        let p = ModelParams::new(a4, c, n, 3);
        let s = LatticeSpectrum::compute(&p, &SpectrumOptions::default()).unwrap();
        let Ok(model) = BreatherModel::new(&s, alpha) else { return Ok(()) };
        let center = ((center_frac * n as f64) as usize).min(n - 1);
        let times = TimeGrid::Linear { t_max: 30.0, steps: 30 }.points().unwrap();
        let run = model.simulate(center, &times, 0.5).unwrap();
        prop_assert!(run.max_norm_error < 1e-10);
        prop_assert!(run.max_energy_error < 1e-10);
        for (kp, k) in (0..n).flat_map(|a| (0..n).map(move |b| (a, b))) {
            for j in 0..n {
                let m = &model.kinetic.per_site[j];
                prop_assert!((m[(kp, k)] - m[(k, kp)].conj()).norm() < 1e-10);
            }
        }
        // reflection about the center
        for d in 1..n {
            let (l, r) = ((center + n - d) % n, (center + d) % n);
            for i in 0..times.len() {
                prop_assert!((run.kinetic[l][i] - run.kinetic[r][i]).abs() < 1e-9);
            }
        }
        // translation moves the profile rigidly
        let shifted = model.simulate((center + 1) % n, &times, 0.5).unwrap();
        for j in 0..n {
            for i in 0..times.len() {
                prop_assert!((run.kinetic[j][i] - shifted.kinetic[(j + 1) % n][i]).abs() < 1e-9);
            }
        }
    }
}
