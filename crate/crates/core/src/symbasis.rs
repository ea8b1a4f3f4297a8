//! Excitation configurations, translation orbits and momentum sectors.
//!
//! A configuration assigns an on-site excitation order `alpha_i` to every
//! site, with `sum_i alpha_i <= ncut`. The cyclic translation `T` moves the
//! content of site `i` to site `i + 1 (mod N)`. Configurations related by
//! translations form an orbit; the Bloch state
//!
//! ```text
//! |r>_q = A^{-1/2} sum_{j=0}^{N-1} exp(-i q j) T^j |r>,   A = N^2 / p
//! ```
//!
//! built from an orbit of period `p` is non-zero only when `k p = 0 (mod N)`,
//! with `q = 2 pi k / N`.

use std::collections::HashMap;
use std::f64::consts::TAU;

use crate::{Error, Result};

/// Default cap on the number of configurations.
pub const DEFAULT_BASIS_CAP: u128 = 5_000_000;

/// On-site excitation orders, one per site.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Configuration(pub Vec<u8>);

impl Configuration {
    pub fn sites(&self) -> usize {
        self.0.len()
    }

    pub fn total(&self) -> usize {
        self.0.iter().map(|&a| a as usize).sum()
    }

    /// `T^shift` applied to this configuration.
    pub fn shifted(&self, shift: usize) -> Configuration {
        let n = self.0.len();
        let shift = shift % n;
        Configuration((0..n).map(|s| self.0[(s + n - shift) % n]).collect())
    }

    /// Mixed-radix key with site 0 as the least significant digit.
    pub fn key(&self, radix: u128) -> u128 {
        self.0.iter().rev().fold(0u128, |acc, &a| acc * radix + a as u128)
    }
}

impl std::fmt::Display for Configuration {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for a in &self.0 {
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

/// `n choose k` in 128-bit arithmetic, saturating on overflow.
pub fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul(n - i) {
            Some(v) => v / (i + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// All configurations with `sum_i alpha_i <= ncut`, in lexicographic order
/// of `(alpha_0, alpha_1, ...)`.
pub fn enumerate_configurations(sites: usize, ncut: usize) -> Result<Vec<Configuration>> {
    enumerate_configurations_capped(sites, ncut, DEFAULT_BASIS_CAP)
}

pub fn enumerate_configurations_capped(
    sites: usize,
    ncut: usize,
    cap: u128,
) -> Result<Vec<Configuration>> {
    if sites < 2 || ncut < 1 {
        return Err(Error::InvalidParams(format!(
            "need N >= 2 and ncut >= 1 (got N = {sites}, ncut = {ncut})"
        )));
    }
    if ncut > u8::MAX as usize {
        return Err(Error::InvalidParams(format!("ncut = {ncut} exceeds 255")));
    }
    let count = binomial((sites + ncut) as u128, sites as u128);
    if count > cap {
        return Err(Error::BasisTooLarge { count, cap });
    }
    let mut out = Vec::with_capacity(count as usize);
    let mut current = vec![0u8; sites];
    fill(&mut current, 0, ncut, &mut out);
    debug_assert_eq!(out.len() as u128, count);
    Ok(out)
}

fn fill(current: &mut [u8], site: usize, budget: usize, out: &mut Vec<Configuration>) {
    if site == current.len() {
        out.push(Configuration(current.to_vec()));
        return;
    }
    for a in 0..=budget {
        current[site] = a as u8;
        fill(current, site + 1, budget - a, out);
    }
    current[site] = 0;
}

/// A translation orbit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    /// Member with the smallest mixed-radix key, i.e. the lexicographic
    /// minimum read from the last site down to site 0.
    pub representative: Configuration,
    /// Smallest `p > 0` with `T^p r = r`.
    pub period: usize,
}

impl Orbit {
    /// Number of distinct configurations in the orbit.
    pub fn size(&self) -> usize {
        self.period
    }
}

fn canonical(config: &Configuration, radix: u128) -> (Configuration, usize) {
    let n = config.sites();
    let mut best = config.clone();
    let mut best_key = config.key(radix);
    let mut period = n;
    for s in 1..n {
        let shifted = config.shifted(s);
        if shifted == *config {
            period = period.min(s);
        }
        let key = shifted.key(radix);
        if key < best_key {
            best_key = key;
            best = shifted;
        }
    }
    (best, period)
}

/// Partitions a complete configuration list into translation orbits, ordered
/// by the first appearance of any member in `configs`.
pub fn find_orbits(configs: &[Configuration]) -> Vec<Orbit> {
    let Some(first) = configs.first() else {
        return Vec::new();
    };
    let radix = configs.iter().flat_map(|c| c.0.iter()).copied().max().unwrap_or(0) as u128 + 1;
    let n = first.sites();
    let mut seen: std::collections::HashSet<u128> = std::collections::HashSet::with_capacity(configs.len());
    let mut orbits = Vec::new();
    for c in configs {
        if seen.contains(&c.key(radix)) {
            continue;
        }
        let (representative, period) = canonical(c, radix);
        for s in 0..n {
            seen.insert(c.shifted(s).key(radix));
        }
        orbits.push(Orbit { representative, period });
    }
    orbits
}

/// The Bloch states admitted at one momentum.
#[derive(Clone, Debug)]
pub struct MomentumSector {
    /// Momentum index, `q = 2 pi k / N`.
    pub k: usize,
    pub sites: usize,
    /// Admitted orbit ids, in orbit order.
    pub orbits: Vec<usize>,
    /// Normalization `A = N^2 / p` per admitted orbit.
    pub norms: Vec<f64>,
    position: Vec<Option<usize>>,
}

impl MomentumSector {
    pub fn q(&self) -> f64 {
        momentum(self.k, self.sites)
    }

    pub fn len(&self) -> usize {
        self.orbits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orbits.is_empty()
    }

    /// Sector basis index of an orbit, if the orbit is admitted.
    pub fn position(&self, orbit: usize) -> Option<usize> {
        self.position.get(orbit).copied().flatten()
    }
}

/// `q = 2 pi k / N`.
pub fn momentum(k: usize, sites: usize) -> f64 {
    TAU * k as f64 / sites as f64
}

/// Admits every orbit with `k p = 0 (mod N)`.
pub fn build_sector(orbits: &[Orbit], k: usize, sites: usize) -> MomentumSector {
    assert!(k < sites, "momentum index {k} out of range for N = {sites}");
    let mut admitted = Vec::new();
    let mut norms = Vec::new();
    let mut position = vec![None; orbits.len()];
    for (id, orbit) in orbits.iter().enumerate() {
        if (k * orbit.period).is_multiple_of(sites) {
            position[id] = Some(admitted.len());
            admitted.push(id);
            norms.push((sites * sites) as f64 / orbit.period as f64);
        }
    }
    MomentumSector {
        k,
        sites,
        orbits: admitted,
        norms,
        position,
    }
}

/// Where a configuration sits in the orbit table: `c = T^shift(rep[orbit])`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Location {
    pub orbit: usize,
    pub shift: usize,
}

/// Configurations, orbits and a key lookup for the whole truncated space.
#[derive(Clone, Debug)]
pub struct LatticeBasis {
    pub sites: usize,
    pub ncut: usize,
    pub configs: Vec<Configuration>,
    pub orbits: Vec<Orbit>,
    radix: u128,
    config_index: HashMap<u128, usize>,
    locate: HashMap<u128, Location>,
}

impl LatticeBasis {
    pub fn new(sites: usize, ncut: usize) -> Result<Self> {
        Self::with_cap(sites, ncut, DEFAULT_BASIS_CAP)
    }

    pub fn with_cap(sites: usize, ncut: usize, cap: u128) -> Result<Self> {
        let radix = ncut as u128 + 1;
        if radix.checked_pow(sites as u32).is_none() {
            return Err(Error::InvalidParams(format!(
                "configuration keys overflow 128 bits for N = {sites}, ncut = {ncut}"
            )));
        }
        let configs = enumerate_configurations_capped(sites, ncut, cap)?;
        let orbits = find_orbits(&configs);
        let config_index = configs
            .iter()
            .enumerate()
            .map(|(i, c)| (c.key(radix), i))
            .collect();
        let mut locate = HashMap::with_capacity(configs.len());
        for (id, orbit) in orbits.iter().enumerate() {
            for shift in 0..orbit.period {
                let key = orbit.representative.shifted(shift).key(radix);
                locate.insert(key, Location { orbit: id, shift });
            }
        }
        if locate.len() != configs.len() {
            return Err(Error::Inconsistent(format!(
                "orbits cover {} configurations, expected {}",
                locate.len(),
                configs.len()
            )));
        }
        Ok(Self {
            sites,
            ncut,
            configs,
            orbits,
            radix,
            config_index,
            locate,
        })
    }

    pub fn radix(&self) -> u128 {
        self.radix
    }

    pub fn key(&self, config: &[u8]) -> u128 {
        config.iter().rev().fold(0u128, |acc, &a| acc * self.radix + a as u128)
    }

    pub fn config_index(&self, key: u128) -> Option<usize> {
        self.config_index.get(&key).copied()
    }

    pub fn locate(&self, key: u128) -> Option<Location> {
        self.locate.get(&key).copied()
    }

    /// `radix^site`, the key weight of one site.
    pub fn weight(&self, site: usize) -> u128 {
        self.radix.pow(site as u32)
    }

    pub fn sector(&self, k: usize) -> MomentumSector {
        build_sector(&self.orbits, k, self.sites)
    }

    pub fn sectors(&self) -> Vec<MomentumSector> {
        (0..self.sites).map(|k| self.sector(k)).collect()
    }

    /// Orbit id of the configuration with `alpha` at site 0 and vacuum elsewhere.
    pub fn single_excitation_orbit(&self, alpha: usize) -> Result<usize> {
        if alpha == 0 {
            return Err(Error::NotAnExcitation);
        }
        if alpha > self.ncut {
            return Err(Error::OrderBeyondCutoff { alpha, ncut: self.ncut });
        }
        let loc = self.locate(alpha as u128).ok_or_else(|| {
            Error::Inconsistent(format!("single excitation {alpha} missing from the basis"))
        })?;
        Ok(loc.orbit)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn configs_as_strings(sites: usize, ncut: usize) -> Vec<String> {
        enumerate_configurations(sites, ncut)
            .unwrap()
            .iter()
            .map(|c| c.to_string())
            .collect()
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(configs_as_strings(4, 1).len(), 5);
        let mut two = configs_as_strings(2, 2);
        assert_eq!(two, ["00", "01", "02", "10", "11", "20"]);
        two.sort_by_key(|s| s.chars().map(|c| c as u32 - 48).sum::<u32>());
        assert_eq!(two.len(), 6);
    }

    #[test]
    fn large_lattice_census() {
        // brute force: count every string over {0..6}^13 with digit sum <= 6
        // via the digit-sum distribution, independent of the recursive enumerator
        let mut dist = vec![0u128; 7];
        dist[0] = 1;
        for _ in 0..13 {
            let mut next = vec![0u128; 7];
            for (s, &c) in dist.iter().enumerate() {
                for a in 0..=6 - s {
                    next[s + a] += c;
                }
            }
            dist = next;
        }
        let brute: u128 = dist.iter().sum();
        assert_eq!(brute, 27132);
        assert_eq!(binomial(19, 6), 27132);

        let basis = LatticeBasis::new(13, 6).unwrap();
        assert_eq!(basis.configs.len(), 27132);
        assert_eq!(basis.orbits.len(), 2088);
        assert_eq!(basis.orbits.iter().filter(|o| o.period == 1).count(), 1);
        let sizes: Vec<usize> = basis.sectors().iter().map(|s| s.len()).collect();
        assert_eq!(sizes[0], 2088);
        assert!(sizes[1..].iter().all(|&s| s == 2087));
        assert_eq!(sizes.iter().sum::<usize>(), 27132);
    }

    #[test]
    fn tiny_orbits() {
        let orbits = find_orbits(&enumerate_configurations(4, 1).unwrap());
        assert_eq!(orbits.len(), 2);
        assert_eq!(orbits[0].period, 1);
        assert_eq!(orbits[1].period, 4);

        let orbits = find_orbits(&enumerate_configurations(2, 2).unwrap());
        let mut found: Vec<(String, usize)> = orbits
            .iter()
            .map(|o| (o.representative.to_string(), o.period))
            .collect();
        found.sort();
        assert_eq!(
            found,
            [("00".into(), 1), ("10".into(), 2), ("11".into(), 1), ("20".into(), 2)]
        );
    }

    #[test]
    fn small_sectors() {
        let basis = LatticeBasis::new(4, 1).unwrap();
        let sizes: Vec<usize> = basis.sectors().iter().map(|s| s.len()).collect();
        assert_eq!(sizes, [2, 1, 1, 1]);
        let s0 = basis.sector(0);
        assert_eq!(s0.norms[0], 16.0);
        assert_eq!(s0.norms[1], 4.0);
    }

    #[test]
    fn single_excitation_representative() {
        let basis = LatticeBasis::new(13, 6).unwrap();
        let id = basis.single_excitation_orbit(2).unwrap();
        let mut expected = vec![0u8; 13];
        expected[0] = 2;
        assert_eq!(basis.orbits[id].representative.0, expected);
        assert_eq!(basis.orbits[id].period, 13);
        assert!(matches!(basis.single_excitation_orbit(0), Err(Error::NotAnExcitation)));
        assert!(matches!(
            basis.single_excitation_orbit(7),
            Err(Error::OrderBeyondCutoff { .. })
        ));
    }

    #[test]
    fn cap_guard() {
        assert!(matches!(
            enumerate_configurations_capped(13, 6, 1000),
            Err(Error::BasisTooLarge { count: 27132, .. })
        ));
        assert!(matches!(
            enumerate_configurations(40, 10),
            Err(Error::BasisTooLarge { .. })
        ));
    }

    proptest! {
        #[test]
        fn sector_completeness(sites in 2usize..=8, ncut in 1usize..=4) {
            let basis = LatticeBasis::new(sites, ncut).unwrap();
            let total = binomial((sites + ncut) as u128, sites as u128) as usize;
            prop_assert_eq!(basis.configs.len(), total);
            let sum: usize = basis.sectors().iter().map(|s| s.len()).sum();
            prop_assert_eq!(sum, total);
            let covered: usize = basis.orbits.iter().map(|o| o.size()).sum();
            prop_assert_eq!(covered, total);
            for s in basis.sectors() {
                for &id in &s.orbits {
                    prop_assert_eq!((s.k * basis.orbits[id].period) % sites, 0);
                }
            }
        }

        #[test]
        fn orbit_canonicality(sites in 2usize..=7, ncut in 1usize..=4, shift in 0usize..7) {
            let basis = LatticeBasis::new(sites, ncut).unwrap();
            let radix = basis.radix();
            for orbit in &basis.orbits {
                let rep = &orbit.representative;
                prop_assert_eq!(sites % orbit.period, 0);
                let distinct: std::collections::HashSet<_> =
                    (0..sites).map(|s| rep.shifted(s)).collect();
                prop_assert_eq!(distinct.len(), orbit.period);
                let min = distinct.iter().map(|c| c.key(radix)).min().unwrap();
                prop_assert_eq!(rep.key(radix), min);
                let (again, p) = canonical(&rep.shifted(shift), radix);
                prop_assert_eq!(&again, rep);
                prop_assert_eq!(p, orbit.period);
            }
            for c in &basis.configs {
                let loc = basis.locate(c.key(radix)).unwrap();
                prop_assert_eq!(&basis.orbits[loc.orbit].representative.shifted(loc.shift), c);
            }
        }
    }
}
