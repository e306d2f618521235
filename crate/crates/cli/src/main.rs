use std::collections::{BTreeSet, HashMap};
use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use ncp_core::bounds::{spectral_lower_bound, DEFAULT_BOUND_ITER, DEFAULT_BOUND_TOL};
use ncp_core::generators::{
    default_swap_attempts, gen_chung_lu_powerlaw, gen_clique, gen_copying, gen_forest_fire,
    gen_grid, gen_preferential_attachment, gen_toy_tree, rewire, ChungLuParams, ForestFireParams,
    ToyTreeParams,
};
use ncp_core::graph::{largest_connected_component, Graph};
use ncp_core::groups::{group_profile, groups_from_labels};
use ncp_core::io::{load_edge_list, load_labels, write_edge_list};
use ncp_core::oracle::brute_force_ncp;
use ncp_core::pipeline::{run, RunConfig};
use ncp_core::stats::graph_stats;
use ncp_core::whiskers::decompose_whiskers;
use ncp_core::Method;

#[derive(Parser)]
#[command(
    name = "ncp",
    version,
    about = "Network community profiles of undirected graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Summary statistics of the largest component, as one CSV row.
    Stats {
        file: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// BFS sources for the average path length.
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
    },
    /// Full NCP run: per-method and merged CSVs, SVG plot, manifest.
    Ncp(NcpArgs),
    /// Whisker inventory of the largest component.
    Whiskers { file: PathBuf },
    /// Write a synthetic graph as an edge list, plus a `.params` sidecar.
    Generate {
        #[command(subcommand)]
        model: Model,
        #[arg(short, long, global = true)]
        output: Option<PathBuf>,
        #[arg(long, default_value_t = 0, global = true)]
        seed: u64,
    },
    /// Degree-preserving randomization by double-edge swaps.
    Rewire {
        file: PathBuf,
        /// Swap attempts; defaults to 100 times the edge count.
        #[arg(long)]
        attempts: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Spectral lower bound on the conductance of any cut.
    Bound {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_BOUND_TOL)]
        tol: f64,
        #[arg(long, default_value_t = DEFAULT_BOUND_ITER)]
        max_iter: usize,
    },
    /// Profile of labelled groups; label lines are `node_id group_id`.
    Groups {
        file: PathBuf,
        #[arg(long)]
        labels: PathBuf,
    },
    /// Exact profile by exhaustive enumeration (at most 20 nodes).
    Oracle { file: PathBuf },
}

#[derive(Args)]
struct NcpArgs {
    file: PathBuf,
    /// Comma-separated: spectral, flow, whiskers, all.
    #[arg(long, value_delimiter = ',', default_value = "all")]
    methods: Vec<String>,
    /// Also profile a degree-preserving rewired copy.
    #[arg(long)]
    rewired: bool,
    #[arg(long, default_value_t = ncp_core::local_spectral::DEFAULT_ALPHA)]
    alpha: f64,
    /// Comma-separated push thresholds replacing the default grid.
    #[arg(long, value_delimiter = ',')]
    eps_grid: Option<Vec<f64>>,
    #[arg(long)]
    attempts: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 10_000)]
    samples: usize,
    /// Dump each profile point's node set.
    #[arg(long)]
    witnesses: bool,
    #[arg(short, long, default_value = "ncp_out")]
    out: PathBuf,
}

#[derive(Subcommand)]
enum Model {
    ForestFire {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        pf: f64,
        #[arg(long)]
        pr: f64,
    },
    ChungLu {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2.5)]
        beta: f64,
        /// Average expected degree.
        #[arg(long)]
        w: f64,
        /// Maximum expected degree.
        #[arg(long)]
        wmax: f64,
    },
    Pa {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        m: usize,
    },
    Copying {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        m: usize,
        #[arg(long)]
        copy_beta: f64,
    },
    /// Lattice with the given side lengths, e.g. `--dims 50,50`.
    Grid {
        #[arg(long, value_delimiter = ',')]
        dims: Vec<usize>,
    },
    Clique {
        #[arg(long)]
        n: usize,
    },
    ToyTree {
        /// Nodes in the top subtree.
        #[arg(long)]
        top: usize,
        /// Children per node on each level below the top; nondecreasing.
        #[arg(long, value_delimiter = ',')]
        branching: Option<Vec<usize>>,
    },
}

fn load(path: &Path) -> Result<(Graph, Vec<u64>)> {
    let file = File::open(path).with_context(|| format!("opening {}", path.display()))?;
    let loaded = load_edge_list(BufReader::new(file))?;
    let (g, map) = largest_connected_component(&loaded.graph)?;
    if g.node_count() < loaded.graph.node_count() {
        log::warn!(
            "using the largest component: {} of {} nodes",
            g.node_count(),
            loaded.graph.node_count()
        );
    }
    let ids = map.iter().map(|&v| loaded.ids[v]).collect();
    Ok((g, ids))
}

fn sink(path: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).with_context(|| format!("creating {}", p.display()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn parse_methods(list: &[String]) -> Result<BTreeSet<Method>> {
    let mut out = BTreeSet::new();
    for m in list {
        match m.as_str() {
            "all" => out.extend([Method::Spectral, Method::Flow, Method::Whiskers]),
            "spectral" | "flow" | "whiskers" => {
                out.insert(Method::from_tag(m).expect("known tag"));
            }
            other => bail!("unknown method {other}; expected spectral, flow, whiskers or all"),
        }
    }
    Ok(out)
}

fn generate(model: &Model, seed: u64) -> Result<(Graph, Vec<(String, String)>)> {
    let kv = |pairs: &[(&str, String)]| -> Vec<(String, String)> {
        let mut v: Vec<(String, String)> = pairs
            .iter()
            .map(|(k, x)| (k.to_string(), x.clone()))
            .collect();
        v.push(("seed".into(), seed.to_string()));
        v
    };
    Ok(match model {
        Model::ForestFire { n, pf, pr } => {
            let p = ForestFireParams {
                n: *n,
                p_forward: *pf,
                p_backward: *pr,
            };
            let pairs = [
                ("model", "forest-fire".into()),
                ("n", n.to_string()),
                ("pf", pf.to_string()),
                ("pr", pr.to_string()),
            ];
            (gen_forest_fire(&p, seed)?, kv(&pairs))
        }
        Model::ChungLu { n, beta, w, wmax } => {
            let p = ChungLuParams {
                n: *n,
                beta: *beta,
                avg_degree: *w,
                max_degree: *wmax,
            };
            let pairs = [
                ("model", "chung-lu".into()),
                ("n", n.to_string()),
                ("beta", beta.to_string()),
                ("w", w.to_string()),
                ("wmax", wmax.to_string()),
            ];
            (gen_chung_lu_powerlaw(&p, seed)?, kv(&pairs))
        }
        Model::Pa { n, m } => {
            let pairs = [
                ("model", "pa".into()),
                ("n", n.to_string()),
                ("m", m.to_string()),
            ];
            (gen_preferential_attachment(*n, *m, seed)?, kv(&pairs))
        }
        Model::Copying { n, m, copy_beta } => {
            let pairs = [
                ("model", "copying".into()),
                ("n", n.to_string()),
                ("m", m.to_string()),
                ("copy_beta", copy_beta.to_string()),
            ];
            (gen_copying(*n, *m, *copy_beta, seed)?, kv(&pairs))
        }
        Model::Grid { dims } => {
            if dims.is_empty() || dims.contains(&0) {
                bail!("grid needs positive side lengths");
            }
            let d: Vec<String> = dims.iter().map(|x| x.to_string()).collect();
            (
                gen_grid(dims),
                kv(&[("model", "grid".into()), ("dims", d.join(","))]),
            )
        }
        Model::Clique { n } => (
            gen_clique(*n),
            kv(&[("model", "clique".into()), ("n", n.to_string())]),
        ),
        Model::ToyTree { top, branching } => {
            let mut p = ToyTreeParams::with_top(*top);
            if let Some(b) = branching {
                p.branching = b.clone();
            }
            let b: Vec<String> = p.branching.iter().map(|x| x.to_string()).collect();
            let pairs = [
                ("model", "toy-tree".into()),
                ("top", top.to_string()),
                ("branching", b.join(",")),
                ("close_core", p.close_core.to_string()),
            ];
            (gen_toy_tree(&p)?.graph, kv(&pairs))
        }
    })
}

fn main() -> Result<()> {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match cli.command {
        Command::Stats {
            file,
            seed,
            samples,
        } => {
            let (g, _) = load(&file)?;
            let name = file
                .file_stem()
                .map_or("graph".into(), |s| s.to_string_lossy().into_owned());
            let mut out = sink(None)?;
            writeln!(out, "# seed={seed}")?;
            graph_stats(&g, seed, samples)?.write_csv(&name, &mut out)?;
            out.flush()?;
        }
        Command::Ncp(a) => {
            let mut cfg = RunConfig::new(&a.file, &a.out);
            cfg.methods = parse_methods(&a.methods)?;
            cfg.rewired = a.rewired;
            cfg.alpha = a.alpha;
            cfg.eps_grid = a.eps_grid;
            cfg.swap_attempts = a.attempts;
            cfg.seed = a.seed;
            cfg.path_samples = a.samples;
            cfg.witnesses = a.witnesses;
            let report = run(&cfg)?;
            for f in &report.files {
                println!("{}", f.display());
            }
            for e in &report.errors {
                eprintln!("error: {e}");
            }
            if !report.errors.is_empty() {
                std::process::exit(2);
            }
        }
        Command::Whiskers { file } => {
            let (g, ids) = load(&file)?;
            let ws = decompose_whiskers(&g)?;
            if ws.whiskers.is_empty() {
                log::warn!("graph has no whiskers");
            }
            eprintln!(
                "core: {} nodes ({:.3}), {} edges ({:.3}); {} whiskers",
                ws.core.len(),
                ws.core_node_fraction(),
                ws.core_edges,
                ws.core_edge_fraction(),
                ws.whiskers.len()
            );
            let mut out = sink(None)?;
            ws.write_csv(Some(&ids), &mut out)?;
            out.flush()?;
        }
        Command::Generate {
            model,
            output,
            seed,
        } => {
            let (g, params) = generate(&model, seed)?;
            let mut out = sink(output.as_deref())?;
            write_edge_list(&g, None, &mut out)?;
            out.flush()?;
            if let Some(path) = output {
                let mut side = path.clone().into_os_string();
                side.push(".params");
                let mut f = BufWriter::new(File::create(PathBuf::from(side))?);
                for (k, v) in params {
                    writeln!(f, "{k}={v}")?;
                }
                writeln!(f, "nodes={}", g.node_count())?;
                writeln!(f, "edges={}", g.edge_count())?;
                f.flush()?;
            }
        }
        Command::Rewire {
            file,
            attempts,
            seed,
            output,
        } => {
            let file_in =
                File::open(&file).with_context(|| format!("opening {}", file.display()))?;
            let loaded = load_edge_list(BufReader::new(file_in))?;
            let attempts = attempts.unwrap_or_else(|| default_swap_attempts(&loaded.graph));
            let r = rewire(&loaded.graph, attempts, seed);
            let mut out = sink(output.as_deref())?;
            write_edge_list(&r, Some(&loaded.ids), &mut out)?;
            out.flush()?;
        }
        Command::Bound {
            file,
            tol,
            max_iter,
        } => {
            let (g, _) = load(&file)?;
            let b = spectral_lower_bound(&g, tol, max_iter)?;
            println!("lambda,bound,residual");
            println!("{},{},{}", b.lambda, b.bound, b.residual);
        }
        Command::Groups { file, labels } => {
            let (g, ids) = load(&file)?;
            let f = File::open(&labels).with_context(|| format!("opening {}", labels.display()))?;
            let labels = load_labels(BufReader::new(f))?;
            let index: HashMap<u64, usize> =
                ids.iter().enumerate().map(|(i, &id)| (id, i)).collect();
            let groups = groups_from_labels(&labels, &index);
            let p = group_profile(&g, &groups);
            let mut out = sink(None)?;
            p.write_csv(&g, None, None, &mut out)?;
            out.flush()?;
        }
        Command::Oracle { file } => {
            let (g, _) = load(&file)?;
            let p = brute_force_ncp(&g)?;
            let mut out = sink(None)?;
            p.write_csv(&g, None, None, &mut out)?;
            out.flush()?;
        }
    }
    Ok(())
}
