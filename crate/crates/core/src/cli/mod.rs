//! The `kgbreather` command-line tool.
//!
//! Every subcommand resolves its options from the command line and an
//! optional `--config` run file (command-line values win), validates them,
//! and writes plot-ready tables plus a `manifest.json` holding every input
//! that affects the numbers. Output is byte-identical across runs with
//! `--serial`.

mod config;
mod output;
mod validate;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::bands::{band_statistics, dispersion_compare, lattice_momenta, BoundBand};
use crate::breather::{BreatherModel, TimeGrid};
use crate::lattice::{LatticeSpectrum, SpectrumOptions};
use crate::onsite::{default_osc_dim, semiclassical_levels, solve_onsite_dim, ModelParams};
use crate::qham::GAUGE_TAG;
use crate::symbasis::momentum;
use crate::{Error, Result};

pub use config::ConfigFile;
pub use output::{emit, format_float, Cell, Format, Table};
pub use validate::{harmonic_dispersion_deviation, run_battery, Battery, Check, Fault};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Exit status for a completed `validate` run with failing checks.
pub const EXIT_VALIDATION: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "kgbreather", version, about = "Quantum breathers in a nonlinear Klein-Gordon lattice")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Single-oscillator levels from basis diagonalization and action quantization.
    Onsite(RunArgs),
    /// Full lattice spectrum per momentum with bound-state tags.
    Spectrum(RunArgs),
    /// Bound-state bands and their widths.
    Band(RunArgs),
    /// Site-resolved kinetic energy of a Wannier breather.
    Breather(RunArgs),
    /// One-phonon branch of the boson-Hubbard and harmonic chains.
    DispersionCompare(RunArgs),
    /// Oracle equivalence and invariant checks.
    Validate(RunArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GridKind {
    Linear,
    Geometric,
}

impl std::str::FromStr for GridKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "linear" => Ok(GridKind::Linear),
            "geometric" => Ok(GridKind::Geometric),
            _ => Err(format!("expected linear or geometric, got `{s}`")),
        }
    }
}

#[derive(Args, Debug, Clone, Default)]
pub struct RunArgs {
    /// Number of lattice sites.
    #[arg(long)]
    pub n: Option<usize>,
    /// Bound on the total number of on-site quanta.
    #[arg(long)]
    pub ncut: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    pub a4: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub a3: Option<f64>,
    /// Dimensionless intersite coupling.
    #[arg(long, allow_hyphen_values = true)]
    pub c: Option<f64>,
    /// Harmonic-basis size of the on-site problem.
    #[arg(long)]
    pub osc_dim: Option<usize>,
    /// Band order(s), comma separated.
    #[arg(long, value_delimiter = ',')]
    pub alpha: Vec<usize>,
    /// Breather center site (default N/2).
    #[arg(long)]
    pub center: Option<usize>,
    #[arg(long)]
    pub t_max: Option<f64>,
    #[arg(long)]
    pub steps: Option<usize>,
    #[arg(long, value_enum)]
    pub grid: Option<GridKind>,
    /// First nonzero time of a geometric grid.
    #[arg(long)]
    pub t_min: Option<f64>,
    #[arg(long)]
    pub decades: Option<usize>,
    #[arg(long)]
    pub per_decade: Option<usize>,
    /// Overlap threshold for bound-state identification and lifetime contrast.
    #[arg(long)]
    pub threshold: Option<f64>,
    /// Output directory.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Single-threaded, bitwise reproducible run.
    #[arg(long)]
    pub serial: bool,
    /// `key = value` run file; command-line flags override it.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Number of on-site levels (onsite).
    #[arg(long)]
    pub levels: Option<usize>,
    /// Coupling sweep, comma separated (spectrum, validate).
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub c_values: Vec<f64>,
    /// Add the computed one-phonon band (dispersion-compare).
    #[arg(long)]
    pub with_lattice: bool,
    #[arg(long, value_enum, hide = true)]
    pub inject_fault: Option<Fault>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CommandKind {
    Onsite,
    Spectrum,
    Band,
    Breather,
    DispersionCompare,
    Validate,
}

impl CommandKind {
    pub fn name(self) -> &'static str {
        match self {
            CommandKind::Onsite => "onsite",
            CommandKind::Spectrum => "spectrum",
            CommandKind::Band => "band",
            CommandKind::Breather => "breather",
            CommandKind::DispersionCompare => "dispersion-compare",
            CommandKind::Validate => "validate",
        }
    }
}

/// Fully resolved and validated run settings.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub command: CommandKind,
    pub params: ModelParams,
    /// True when `a4` or `c` were set explicitly.
    pub a4_given: bool,
    pub c_given: bool,
    pub alphas: Vec<usize>,
    pub center: usize,
    pub grid: TimeGrid,
    pub threshold: f64,
    pub out: PathBuf,
    pub format: Format,
    pub serial: bool,
    pub levels: usize,
    pub c_values: Vec<f64>,
    pub with_lattice: bool,
    pub fault: Option<Fault>,
}

fn list<T>(file: &ConfigFile, cli: &[T], key: &str) -> Result<Vec<T>>
where
    T: Clone + std::str::FromStr,
    T::Err: std::fmt::Display,
{
    if cli.is_empty() {
        Ok(file.get_list(key)?.unwrap_or_default())
    } else {
        Ok(cli.to_vec())
    }
}

fn usage(msg: impl Into<String>) -> Error {
    Error::InvalidParams(msg.into())
}

impl RunConfig {
    pub fn resolve(command: CommandKind, args: &RunArgs) -> Result<Self> {
        let file = match &args.config {
            Some(path) => ConfigFile::load(path)?,
            None => ConfigFile::default(),
        };
        macro_rules! pick {
            ($field:ident, $key:literal) => {
                match args.$field {
                    Some(v) => Some(v),
                    None => file.get($key)?,
                }
            };
        }
        let flag = |cli: bool, key: &str| -> Result<bool> {
            Ok(cli || file.get::<bool>(key)?.unwrap_or(false))
        };

        let small = command == CommandKind::Validate;
        let n: usize = pick!(n, "n").unwrap_or(if small { 4 } else { 13 });
        let ncut: usize = pick!(ncut, "ncut").unwrap_or(if small { 3 } else { 6 });
        let a4: Option<f64> = pick!(a4, "a4");
        let c: Option<f64> = pick!(c, "c");
        let a3: f64 = pick!(a3, "a3").unwrap_or(0.0);
        let levels: usize = pick!(levels, "levels").unwrap_or(9);
        let osc_default = if command == CommandKind::Onsite {
            default_osc_dim(levels)
        } else {
            default_osc_dim(ncut)
        };
        let osc_dim: usize = pick!(osc_dim, "osc-dim").unwrap_or(osc_default);
        let params = ModelParams::new(a4.unwrap_or(0.2), c.unwrap_or(0.05), n, ncut)
            .with_a3(a3)
            .with_osc_dim(osc_dim);

        let threshold: f64 = pick!(threshold, "threshold").unwrap_or(crate::bands::DEFAULT_THRESHOLD);
        if !(threshold > 0.0 && threshold < 1.0) {
            return Err(usage(format!("threshold {threshold} must lie in (0, 1)")));
        }

        let grid_kind: GridKind = pick!(grid, "grid").unwrap_or(GridKind::Linear);
        let t_max: Option<f64> = pick!(t_max, "t-max");
        let steps: Option<usize> = pick!(steps, "steps");
        let t_min: Option<f64> = pick!(t_min, "t-min");
        let decades: Option<usize> = pick!(decades, "decades");
        let per_decade: Option<usize> = pick!(per_decade, "per-decade");
        let grid = match grid_kind {
            GridKind::Linear => {
                if t_min.is_some() || decades.is_some() || per_decade.is_some() {
                    return Err(usage("--t-min, --decades and --per-decade need --grid geometric"));
                }
                TimeGrid::Linear {
                    t_max: t_max.unwrap_or(100.0),
                    steps: steps.unwrap_or(1000),
                }
            }
            GridKind::Geometric => {
                if t_max.is_some() || steps.is_some() {
                    return Err(usage("--t-max and --steps apply to --grid linear only"));
                }
                TimeGrid::Geometric {
                    t_min: t_min.unwrap_or(0.1),
                    decades: decades.unwrap_or(6),
                    per_decade: per_decade.unwrap_or(40),
                }
            }
        };

        let mut alphas: Vec<usize> = list(&file, &args.alpha, "alpha")?;
        if alphas.is_empty() {
            alphas = match command {
                CommandKind::Breather => vec![1],
                _ => (1..=ncut).collect(),
            };
        }
        let center: usize = pick!(center, "center").unwrap_or(n / 2);
        let out: PathBuf = match &args.out {
            Some(p) => p.clone(),
            None => file.get::<PathBuf>("out")?.unwrap_or_else(|| PathBuf::from(".")),
        };
        let format: Format = pick!(format, "format").unwrap_or(Format::Csv);
        let c_values: Vec<f64> = list(&file, &args.c_values, "c-values")?;

        let cfg = Self {
            command,
            params,
            a4_given: a4.is_some(),
            c_given: c.is_some(),
            alphas,
            center,
            grid,
            threshold,
            out,
            format,
            serial: flag(args.serial, "serial")?,
            levels,
            c_values,
            with_lattice: flag(args.with_lattice, "with-lattice")?,
            fault: args.inject_fault,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    fn validate(&self) -> Result<()> {
        let p = &self.params;
        match self.command {
            CommandKind::Onsite => {
                if self.levels == 0 {
                    return Err(usage("--levels must be at least 1"));
                }
                if p.osc_dim < self.levels {
                    return Err(usage(format!(
                        "--osc-dim {} is smaller than --levels {}",
                        p.osc_dim, self.levels
                    )));
                }
                // lattice fields are ignored here
                ModelParams { sites: 2, ncut: 1, ..*p }.validate()?;
            }
            CommandKind::DispersionCompare if !self.with_lattice => {
                if p.sites < 1 {
                    return Err(usage("--n must be at least 1"));
                }
            }
            _ => p.validate()?,
        }
        for &a in &self.alphas {
            if a == 0 {
                return Err(Error::NotAnExcitation);
            }
            if a > p.ncut && matches!(self.command, CommandKind::Band | CommandKind::Breather) {
                return Err(Error::OrderBeyondCutoff { alpha: a, ncut: p.ncut });
            }
        }
        if self.command == CommandKind::Breather {
            if self.alphas.len() != 1 {
                return Err(usage("breather takes a single --alpha"));
            }
            if self.center >= p.sites {
                return Err(usage(format!(
                    "--center {} outside the lattice of {} sites",
                    self.center, p.sites
                )));
            }
            self.grid.points()?;
        }
        if self.c_values.iter().any(|c| !c.is_finite()) {
            return Err(usage("--c-values must be finite"));
        }
        Ok(())
    }

    fn params_json(&self) -> Value {
        let p = &self.params;
        json!({
            "n": p.sites,
            "ncut": p.ncut,
            "a4": p.a4,
            "a3": p.a3,
            "c": p.coupling,
            "osc_dim": p.osc_dim,
        })
    }

    fn manifest(&self, extra: Value) -> Value {
        let mut m = json!({
            "tool": "kgbreather",
            "version": VERSION,
            "command": self.command.name(),
            "params": self.params_json(),
            "threshold": self.threshold,
            "gauge": GAUGE_TAG,
            "serial": self.serial,
        });
        if let (Value::Object(m), Value::Object(extra)) = (&mut m, extra) {
            m.extend(extra);
        }
        m
    }

    fn spectrum_options(&self, alpha_max: Option<usize>) -> SpectrumOptions {
        SpectrumOptions {
            threshold: self.threshold,
            alpha_max,
            serial: self.serial,
        }
    }
}

fn band_summary(band: &BoundBand) -> Value {
    let stats = band_statistics(band).ok();
    json!({
        "alpha": band.alpha,
        "complete": band.complete,
        "missing_k": band.missing(),
        "ambiguous_k": band.ambiguous,
        "width": stats.map(|s| s.width),
        "mean": stats.map(|s| s.mean),
        "min": stats.map(|s| s.min),
        "max": stats.map(|s| s.max),
    })
}

fn spectrum_diagnostics(spectrum: &LatticeSpectrum) -> Value {
    json!({
        "ground_energy": spectrum.ground_energy(),
        "dropped_images": spectrum.dropped_images(),
        "max_non_hermiticity": spectrum.max_non_hermiticity(),
        "onsite_converged": spectrum.onsite.converged,
        "configurations": spectrum.basis.configs.len(),
        "orbits": spectrum.basis.orbits.len(),
    })
}

fn cmd_onsite(cfg: &RunConfig) -> Result<(Value, Vec<Table>)> {
    let p = &cfg.params;
    let sol = solve_onsite_dim(p.a3, p.a4, p.osc_dim)?;
    let check = solve_onsite_dim(p.a3, p.a4, 2 * p.osc_dim)?;
    let drift = (0..cfg.levels)
        .map(|n| (sol.gamma[n] - check.gamma[n]).abs())
        .fold(0.0, f64::max);
    if drift > crate::onsite::CONVERGENCE_TOL {
        log::warn!("on-site levels move by {drift:.3e} when M is doubled; consider a larger --osc-dim");
    }
    let semi = semiclassical_levels(p.a3, p.a4, cfg.levels)?;
    let mut table = Table::new("onsite", &["n", "E_quantum", "E_semiclassical", "delta"]);
    for (n, (&q, &s)) in sol.gamma.iter().zip(&semi).enumerate() {
        table.push(vec![n.into(), q.into(), s.into(), (s - q).into()]);
    }
    let manifest = json!({
        "tool": "kgbreather",
        "version": VERSION,
        "command": "onsite",
        "params": { "a4": p.a4, "a3": p.a3, "osc_dim": p.osc_dim },
        "levels": cfg.levels,
        "doubling_drift": drift,
    });
    Ok((manifest, vec![table]))
}

fn spectrum_tables(spectrum: &LatticeSpectrum) -> Result<(Vec<Table>, Vec<Value>)> {
    let n = spectrum.params.sites;
    let mut bound = vec![vec![0usize; 0]; n];
    for (k, e) in spectrum.energies.iter().enumerate() {
        bound[k] = vec![0; e.len()];
    }
    let mut summaries = Vec::new();
    for alpha in 1..=spectrum.alpha_max() {
        let band = spectrum.band(alpha)?;
        for e in band.entries.iter().flatten() {
            bound[e.k][e.lambda] = alpha;
        }
        summaries.push(band_summary(&band));
    }
    let mut table = Table::new("spectrum", &["k", "q", "lambda", "energy", "bound_alpha"]);
    let mut sectors = Table::new("sectors", &["k", "sector_size"]);
    for (k, e_k) in spectrum.energies.iter().enumerate() {
        let q = momentum(k, n);
        for (lambda, &e) in e_k.iter().enumerate() {
            table.push(vec![k.into(), q.into(), lambda.into(), e.into(), bound[k][lambda].into()]);
        }
        sectors.push(vec![k.into(), spectrum.sectors[k].len().into()]);
    }
    Ok((vec![table, sectors], summaries))
}

fn cmd_spectrum(cfg: &RunConfig) -> Result<Vec<PathBuf>> {
    let sweep = !cfg.c_values.is_empty();
    let couplings = if sweep { cfg.c_values.clone() } else { vec![cfg.params.coupling] };
    let mut written = Vec::new();
    for c in couplings {
        let mut run = cfg.clone();
        run.params = cfg.params.with_coupling(c);
        let spectrum = LatticeSpectrum::compute(&run.params, &run.spectrum_options(None))?;
        let (tables, bands) = spectrum_tables(&spectrum)?;
        let manifest = run.manifest(json!({
            "bands": bands,
            "diagnostics": spectrum_diagnostics(&spectrum),
        }));
        let dir = if sweep {
            cfg.out.join(format!("c_{}", format_float(c)))
        } else {
            cfg.out.clone()
        };
        written.extend(emit(&dir, "spectrum", cfg.format, &manifest, &tables)?);
    }
    Ok(written)
}

fn cmd_band(cfg: &RunConfig) -> Result<(Value, Vec<Table>)> {
    let alpha_max = cfg.alphas.iter().copied().max();
    let spectrum = LatticeSpectrum::compute(&cfg.params, &cfg.spectrum_options(alpha_max))?;
    let n = cfg.params.sites;
    let bands: Vec<BoundBand> = cfg.alphas.iter().map(|&a| spectrum.band(a)).collect::<Result<_>>()?;
    let mut table = Table::new(
        "bands",
        &["k", "q", "alpha", "lambda", "energy", "overlap", "complete_flag"],
    );
    for k in 0..n {
        let mut rows: Vec<(Option<usize>, Vec<Cell>)> = bands
            .iter()
            .map(|b| {
                let e = b.entries[k];
                let row = vec![
                    k.into(),
                    momentum(k, n).into(),
                    b.alpha.into(),
                    e.map(|e| e.lambda).into(),
                    e.map(|e| e.energy).into(),
                    e.map(|e| e.overlap).into(),
                    b.complete.into(),
                ];
                (e.map(|e| e.lambda), row)
            })
            .collect();
        // identified states by lambda, unidentified last
        rows.sort_by_key(|(l, _)| l.unwrap_or(usize::MAX));
        for (_, row) in rows {
            table.push(row);
        }
    }
    let manifest = cfg.manifest(json!({
        "alphas": cfg.alphas,
        "bands": bands.iter().map(band_summary).collect::<Vec<_>>(),
        "diagnostics": spectrum_diagnostics(&spectrum),
    }));
    Ok((manifest, vec![table]))
}

fn cmd_breather(cfg: &RunConfig) -> Result<(Value, Vec<Table>)> {
    let alpha = cfg.alphas[0];
    let spectrum = LatticeSpectrum::compute(&cfg.params, &cfg.spectrum_options(Some(alpha)))?;
    let model = BreatherModel::new(&spectrum, alpha)?;
    let times = cfg.grid.points()?;
    let run = model.simulate(cfg.center, &times, cfg.threshold)?;
    let mut table = Table::new("breather", &["t", "site", "kinetic_energy"]);
    for (i, &t) in run.times.iter().enumerate() {
        for (j, site) in run.kinetic.iter().enumerate() {
            table.push(vec![t.into(), j.into(), site[i].into()]);
        }
    }
    let manifest = cfg.manifest(json!({
        "alpha": alpha,
        "center": cfg.center,
        "grid": cfg.grid,
        "lifetime": run.lifetime,
        "lifetime_within_grid": run.lifetime.is_some(),
        "recurrences": run.recurrences,
        "mean_energy": run.mean_energy,
        "initial_excess": run.initial_excess,
        "max_norm_error": run.max_norm_error,
        "max_energy_error": run.max_energy_error,
        "band": band_summary(&model.band),
        "diagnostics": spectrum_diagnostics(&spectrum),
    }));
    Ok((manifest, vec![table]))
}

fn cmd_dispersion(cfg: &RunConfig) -> Result<(Value, Vec<Table>)> {
    let n = cfg.params.sites;
    let qs = lattice_momenta(n);
    let branch = dispersion_compare(cfg.params.coupling, &qs)?;
    let lattice = if cfg.with_lattice {
        let spectrum = LatticeSpectrum::compute(&cfg.params, &cfg.spectrum_options(Some(1)))?;
        let ground = spectrum.ground_energy();
        Some(spectrum.band(1)?.energies()?.into_iter().map(|e| e - ground).collect::<Vec<_>>())
    } else {
        None
    };
    let header: &[&'static str] = if lattice.is_some() {
        &["k", "q", "hubbard", "harmonic", "lattice"]
    } else {
        &["k", "q", "hubbard", "harmonic"]
    };
    let mut table = Table::new("dispersion", header);
    for (k, p) in branch.iter().enumerate() {
        let mut row = vec![k.into(), p.q.into(), p.hubbard.into(), p.harmonic.into()];
        if let Some(l) = &lattice {
            row.push(l[k].into());
        }
        table.push(row);
    }
    let manifest = cfg.manifest(json!({ "with_lattice": cfg.with_lattice }));
    Ok((manifest, vec![table]))
}

fn cmd_validate(cfg: &RunConfig) -> Result<bool> {
    let p = &cfg.params;
    let mut a4_values = vec![0.0];
    if p.a4 != 0.0 {
        a4_values.push(p.a4);
    }
    let couplings = if !cfg.c_values.is_empty() {
        cfg.c_values.clone()
    } else if cfg.c_given {
        vec![p.coupling]
    } else {
        vec![0.0, 0.05, 0.3]
    };
    let battery = Battery {
        sites: p.sites,
        ncut: p.ncut,
        osc_dim: Some(p.osc_dim),
        a4_values: a4_values.clone(),
        couplings: couplings.clone(),
        threshold: cfg.threshold,
        serial: cfg.serial,
        fault: cfg.fault,
        dispersion_sites: 7,
    };
    let checks = run_battery(&battery)?;
    let passed = checks.iter().all(|c| c.passed);
    for c in &checks {
        println!(
            "{} {} value={} tol={}",
            if c.passed { "PASS" } else { "FAIL" },
            c.name,
            format_float(c.value),
            format_float(c.tolerance)
        );
    }
    let report = json!({
        "manifest": cfg.manifest(json!({
            "a4_values": a4_values,
            "couplings": couplings,
            "fault": cfg.fault,
        })),
        "passed": passed,
        "failed": checks.iter().filter(|c| !c.passed).map(|c| c.name.clone()).collect::<Vec<_>>(),
        "checks": checks,
    });
    std::fs::create_dir_all(&cfg.out).map_err(|e| Error::io(&cfg.out, e))?;
    let path = cfg.out.join("validate.json");
    std::fs::write(&path, serde_json::to_string_pretty(&report)? + "\n").map_err(|e| Error::io(&path, e))?;
    println!("{}", path.display());
    Ok(passed)
}

fn report(paths: &[PathBuf]) {
    for p in paths {
        println!("{}", p.display());
    }
}

fn emit_one(cfg: &RunConfig, (manifest, tables): (Value, Vec<Table>)) -> Result<()> {
    report(&emit(&cfg.out, cfg.command.name(), cfg.format, &manifest, &tables)?);
    Ok(())
}

/// Runs one parsed invocation and returns the process exit code.
pub fn run(cli: Cli) -> Result<i32> {
    let (kind, args) = match &cli.command {
        Command::Onsite(a) => (CommandKind::Onsite, a),
        Command::Spectrum(a) => (CommandKind::Spectrum, a),
        Command::Band(a) => (CommandKind::Band, a),
        Command::Breather(a) => (CommandKind::Breather, a),
        Command::DispersionCompare(a) => (CommandKind::DispersionCompare, a),
        Command::Validate(a) => (CommandKind::Validate, a),
    };
    let cfg = RunConfig::resolve(kind, args)?;
    if cfg.serial {
        faer::set_global_parallelism(faer::Par::Seq);
    }
    match kind {
        CommandKind::Onsite => emit_one(&cfg, cmd_onsite(&cfg)?)?,
        CommandKind::Spectrum => report(&cmd_spectrum(&cfg)?),
        CommandKind::Band => emit_one(&cfg, cmd_band(&cfg)?)?,
        CommandKind::Breather => emit_one(&cfg, cmd_breather(&cfg)?)?,
        CommandKind::DispersionCompare => emit_one(&cfg, cmd_dispersion(&cfg)?)?,
        CommandKind::Validate => {
            if !cmd_validate(&cfg)? {
                return Ok(EXIT_VALIDATION);
            }
        }
    }
    Ok(0)
}

/// Parses `argv` and runs it; usage errors map to exit code 1.
pub fn main_with_args<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
