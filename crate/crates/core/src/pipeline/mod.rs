//! End-to-end run: load, take the largest component, compute statistics and
//! profiles, and write the CSV, SVG and manifest bundle.

pub mod svg;

use std::collections::BTreeSet;
use std::fs::{self, File};
use std::io::{BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use rayon::prelude::*;

use crate::bounds::{spectral_lower_bound, DEFAULT_BOUND_TOL};
use crate::error::{parameter, Result};
use crate::flow::{ncp_flow, FlowNcpConfig};
use crate::generators::{default_swap_attempts, rewire};
use crate::graph::{largest_connected_component, Graph};
use crate::io::load_edge_list;
use crate::local_spectral::{ncp_local_spectral, SpectralNcpConfig, DEFAULT_ALPHA};
use crate::profile::{Method, NcpProfile};
use crate::stats::graph_stats;
use crate::whiskers::{bag_of_whiskers, decompose_whiskers};

/// Iteration cap for the bound inside a run; slow-mixing graphs hit it and
/// the bound is then reported as an error instead of a number.
pub const RUN_BOUND_ITER: usize = 200_000;
/// Allowed slack when checking the bound against profile points.
const BOUND_SLACK: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub input: PathBuf,
    pub out_dir: PathBuf,
    /// Any of spectral, flow, whiskers.
    pub methods: BTreeSet<Method>,
    pub rewired: bool,
    pub alpha: f64,
    pub eps_grid: Option<Vec<f64>>,
    pub swap_attempts: Option<usize>,
    pub seed: u64,
    pub path_samples: usize,
    pub witnesses: bool,
}

impl RunConfig {
    pub fn new(input: impl Into<PathBuf>, out_dir: impl Into<PathBuf>) -> RunConfig {
        RunConfig {
            input: input.into(),
            out_dir: out_dir.into(),
            methods: [Method::Spectral, Method::Flow, Method::Whiskers].into(),
            rewired: false,
            alpha: DEFAULT_ALPHA,
            eps_grid: None,
            swap_attempts: None,
            seed: 0,
            path_samples: 10_000,
            witnesses: false,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.methods.is_empty() {
            return parameter("at least one method must be selected");
        }
        if let Some(m) = self
            .methods
            .iter()
            .find(|m| !matches!(m, Method::Spectral | Method::Flow | Method::Whiskers))
        {
            return parameter(format!("{m} is not an NCP engine"));
        }
        Ok(())
    }

    fn spectral(&self) -> SpectralNcpConfig {
        SpectralNcpConfig {
            alpha: self.alpha,
            eps_grid: self.eps_grid.clone(),
            rng_seed: self.seed,
            ..Default::default()
        }
    }
}

/// What a run produced. Failures of single steps land in `errors` and the
/// rest of the bundle is still written.
#[derive(Debug, Default)]
pub struct RunReport {
    pub files: Vec<PathBuf>,
    pub errors: Vec<String>,
    pub warnings: Vec<String>,
    pub profiles: Vec<(Method, NcpProfile)>,
    pub merged: NcpProfile,
    pub rewired: Option<NcpProfile>,
    pub bound: Option<f64>,
}

/// Runs the selected engines on `g` and returns per-method profiles in
/// method order. Engines run concurrently.
pub fn run_engines(
    g: &Graph,
    methods: &BTreeSet<Method>,
    spectral: &SpectralNcpConfig,
    flow: &FlowNcpConfig,
) -> Vec<(Method, std::result::Result<NcpProfile, String>)> {
    let list: Vec<Method> = methods.iter().copied().collect();
    list.par_iter()
        .map(|&m| {
            let r = match m {
                Method::Spectral => ncp_local_spectral(g, spectral).map_err(|e| e.to_string()),
                Method::Flow => Ok(ncp_flow(g, flow)),
                Method::Whiskers => decompose_whiskers(g)
                    .map(|ws| bag_of_whiskers(&ws).profile)
                    .map_err(|e| e.to_string()),
                other => Err(format!("{other} is not an NCP engine")),
            };
            (m, r)
        })
        .collect()
}

fn create(dir: &Path, name: &str, report: &mut RunReport) -> Result<BufWriter<File>> {
    let path = dir.join(name);
    let f = File::create(&path)?;
    report.files.push(path);
    Ok(BufWriter::new(f))
}

fn write_profile(
    dir: &Path,
    name: &str,
    g: &Graph,
    ids: &[u64],
    profile: &NcpProfile,
    bound: Option<f64>,
    cfg: &RunConfig,
    report: &mut RunReport,
) -> Result<()> {
    let comment = format!("seed={}", cfg.seed);
    let mut out = create(dir, &format!("{name}.csv"), report)?;
    profile.write_csv(g, bound, Some(&comment), &mut out)?;
    out.flush()?;
    if cfg.witnesses {
        let wdir = dir.join("witnesses").join(name);
        fs::create_dir_all(&wdir)?;
        profile.for_each_witness(Some(ids), |id, body| {
            fs::write(wdir.join(format!("{id}.txt")), body)?;
            Ok(())
        })?;
    }
    Ok(())
}

fn check_bound(bound: f64, label: &str, profile: &NcpProfile, report: &mut RunReport) {
    if let Some((k, p)) = profile.global_min() {
        if p.phi + BOUND_SLACK < bound {
            report.errors.push(format!(
                "{label}: point at k={k} has phi {} below the spectral bound {bound}",
                p.phi
            ));
        }
    }
}

/// Executes `cfg` and writes the bundle into `cfg.out_dir`:
/// `stats.csv`, `ncp_<method>.csv`, `ncp_merged.csv`, optionally
/// `ncp_rewired.csv`, `ncp.svg` and `manifest.txt`.
pub fn run(cfg: &RunConfig) -> Result<RunReport> {
    cfg.validate()?;
    fs::create_dir_all(&cfg.out_dir)?;
    let dir = cfg.out_dir.as_path();
    let loaded = load_edge_list(BufReader::new(File::open(&cfg.input)?))?;
    let (g, map) = largest_connected_component(&loaded.graph)?;
    let ids: Vec<u64> = map.iter().map(|&v| loaded.ids[v]).collect();
    let mut report = RunReport::default();
    if g.node_count() < loaded.graph.node_count() {
        report.warnings.push(format!(
            "kept the largest component: {} of {} nodes",
            g.node_count(),
            loaded.graph.node_count()
        ));
    }
    let name = cfg
        .input
        .file_stem()
        .map_or("graph".to_string(), |s| s.to_string_lossy().into_owned());

    match graph_stats(&g, cfg.seed, cfg.path_samples) {
        Ok(s) => {
            let mut out = create(dir, "stats.csv", &mut report)?;
            writeln!(out, "# seed={}", cfg.seed)?;
            s.write_csv(&name, &mut out)?;
            out.flush()?;
        }
        Err(e) => report.errors.push(format!("stats: {e}")),
    }

    let bound = match spectral_lower_bound(&g, DEFAULT_BOUND_TOL, RUN_BOUND_ITER) {
        Ok(b) => Some(b.bound),
        Err(e) => {
            report.errors.push(format!("spectral bound: {e}"));
            None
        }
    };
    report.bound = bound;

    let flow_cfg = FlowNcpConfig::default();
    for (m, r) in run_engines(&g, &cfg.methods, &cfg.spectral(), &flow_cfg) {
        match r {
            Ok(p) => {
                if p.is_empty() {
                    report.warnings.push(format!("{m}: empty profile"));
                }
                write_profile(
                    dir,
                    &format!("ncp_{m}"),
                    &g,
                    &ids,
                    &p,
                    None,
                    cfg,
                    &mut report,
                )?;
                if let Some(b) = bound {
                    check_bound(b, m.tag(), &p, &mut report);
                }
                report.merged.merge(&p);
                report.profiles.push((m, p));
            }
            Err(e) => report.errors.push(format!("{m}: {e}")),
        }
    }
    let merged = report.merged.clone();
    write_profile(
        dir,
        "ncp_merged",
        &g,
        &ids,
        &merged,
        bound,
        cfg,
        &mut report,
    )?;

    if cfg.rewired {
        let attempts = cfg
            .swap_attempts
            .unwrap_or_else(|| default_swap_attempts(&g));
        let r = rewire(&g, attempts, cfg.seed);
        let (rg, rmap) = largest_connected_component(&r)?;
        let rids: Vec<u64> = rmap.iter().map(|&v| ids[v]).collect();
        let mut env = NcpProfile::new();
        for (m, res) in run_engines(&rg, &cfg.methods, &cfg.spectral(), &flow_cfg) {
            match res {
                Ok(p) => env.merge(&p),
                Err(e) => report.errors.push(format!("rewired {m}: {e}")),
            }
        }
        let env = env.retagged(Method::Rewired);
        write_profile(dir, "ncp_rewired", &rg, &rids, &env, None, cfg, &mut report)?;
        report.rewired = Some(env);
    }

    let mut curves: Vec<(String, Vec<(usize, f64)>)> = report
        .profiles
        .iter()
        .filter(|(_, p)| !p.is_empty())
        .map(|(m, p)| (m.tag().to_string(), p.series()))
        .collect();
    if let Some(r) = &report.rewired {
        curves.push(("rewired".to_string(), r.series()));
    }
    let mut out = create(dir, "ncp.svg", &mut report)?;
    out.write_all(svg::render(&curves, bound).as_bytes())?;
    out.flush()?;

    let mut out = create(dir, "manifest.txt", &mut report)?;
    writeln!(out, "seed={}", cfg.seed)?;
    writeln!(out, "input={}", cfg.input.display())?;
    let methods: Vec<&str> = cfg.methods.iter().map(|m| m.tag()).collect();
    writeln!(out, "methods={}", methods.join(","))?;
    writeln!(out, "alpha={}", cfg.alpha)?;
    writeln!(out, "rewired={}", cfg.rewired)?;
    writeln!(out, "nodes={} edges={}", g.node_count(), g.edge_count())?;
    for w in &report.warnings {
        writeln!(out, "warning: {w}")?;
    }
    for e in &report.errors {
        writeln!(out, "error: {e}")?;
    }
    out.flush()?;
    for w in &report.warnings {
        log::warn!("{w}");
    }
    Ok(report)
}
