//! Command-line interface.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::bitset::Bitset;
use crate::corpus::{graph_corpus, Exclusions};
use crate::cosplit::{
    cosplit, cosplit_size_bound, two_cosplit, two_cosplit_bipartite, validate_cosplit, validate_two_cosplit,
};
use crate::error::{Error, Result};
use crate::graph::enumerate::nonisomorphic_connected_graphs;
use crate::graph::generate::*;
use crate::graph::io::{bipartite_to_dot, graph_to_dot, parse_graph_json, GraphJson};
use crate::graph::{BipartiteGraph, Graph};
use crate::gyarfas;
use crate::patterns::{
    bipartite_index, chromatic_number, clique_number, degeneracy, find_in_bipartite, find_induced,
    find_semi_induced, homogeneous_set, independence_number, longest_induced_path, strong_index, treedepth,
    SearchCaps,
};
use crate::sparsify::{decode, encode, report, sparsify_pipeline, ColoredGraph};
use crate::tree_model::{build_cotree, random_tree_model};

pub const EXIT_OK: u8 = 0;
pub const EXIT_INVALID: u8 = 1;
pub const EXIT_PRECONDITION: u8 = 2;
pub const EXIT_CAP: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "shrubdepth", version, about = "Decompositions and sparsification of graphs excluding paths and half-graphs")]
pub struct Cli {
    /// JSON file with default parameters; flags take precedence.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Write the main output here instead of stdout.
    #[arg(short, long, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

/// Parameters shared by several commands.
#[derive(clap::Args, Debug, Clone, Default, Serialize, Deserialize)]
pub struct Params {
    #[arg(long)]
    #[serde(default)]
    pub t: Option<usize>,
    #[arg(long)]
    #[serde(default)]
    pub k: Option<usize>,
    #[arg(long)]
    #[serde(default)]
    pub h: Option<usize>,
    #[arg(long)]
    #[serde(default)]
    pub seed: Option<u64>,
}

impl Params {
    fn merged(&self, file: &Params) -> Params {
        Params {
            t: self.t.or(file.t),
            k: self.k.or(file.k),
            h: self.h.or(file.h),
            seed: self.seed.or(file.seed),
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Generate a graph as JSON.
    Gen {
        family: Family,
        #[arg(long, default_value_t = 10)]
        n: usize,
        /// Second side size for bipartite families.
        #[arg(long, default_value_t = 5)]
        r: usize,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[command(flatten)]
        params: Params,
    },
    /// Search for a pattern, or compute an index with `sind` / `bind`.
    Detect {
        graph: PathBuf,
        /// `path:T`, `co-path:T`, `cycle:N`, `complete:N`, `threshold:K`,
        /// `half-graph:K`, `bipath:T`, `bipath-co:T`, `sind` or `bind`.
        pattern: String,
        #[arg(long, value_enum, default_value_t = DetectMode::Induced)]
        mode: DetectMode,
    },
    /// Decompose a graph and validate the result.
    Decompose {
        graph: PathBuf,
        #[arg(long, value_enum)]
        mode: DecomposeMode,
        /// Also write a DOT rendering here.
        #[arg(long)]
        dot: Option<PathBuf>,
        #[command(flatten)]
        params: Params,
    },
    /// Encode a graph as a colored graph of small treedepth.
    Sparsify {
        graph: PathBuf,
        /// Write the measurement report here.
        #[arg(long)]
        report: Option<PathBuf>,
        #[command(flatten)]
        params: Params,
    },
    /// Decode a colored graph produced by `sparsify`.
    Desparsify { colored: PathBuf },
    /// Run an experiment over a corpus and print CSV.
    Verify {
        experiment: Experiment,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 12)]
        n_max: usize,
        #[command(flatten)]
        params: Params,
    },
    /// Render a graph as DOT.
    ExportDot { graph: PathBuf },
    /// Exact invariants of a small graph.
    Stats { graph: PathBuf },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Path,
    Cycle,
    Complete,
    Edgeless,
    CompleteBipartite,
    Matching,
    HalfGraph,
    Threshold,
    Random,
    RandomBipartite,
    TreeModel,
    LexC5,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum DetectMode {
    Induced,
    SemiInduced,
    /// Side-respecting search in a graph with recorded sides.
    Bipartite,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum DecomposeMode {
    Gyarfas,
    Cosplit,
    Cosplit2,
    Sparsify,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Experiment {
    ChiBound,
    Homogeneous,
    HeightBounds,
    Roundtrip,
}

/// Output text and exit code of a successful run.
pub struct Outcome {
    pub output: String,
    pub code: u8,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Self { output, code: EXIT_OK }
    }
}

pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::CapExceeded { .. } => EXIT_CAP,
        _ => EXIT_PRECONDITION,
    }
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    let file = match &cli.config {
        Some(p) => serde_json::from_str(&fs::read_to_string(p)?)?,
        None => Params::default(),
    };
    match &cli.command {
        Command::Gen { family, n, r, p, params } => gen(*family, *n, *r, *p, &params.merged(&file)),
        Command::Detect { graph, pattern, mode } => detect(&read_graph(graph)?, pattern, *mode),
        Command::Decompose { graph, mode, dot, params } => {
            decompose(&read_graph(graph)?, *mode, dot.as_deref(), &params.merged(&file))
        }
        Command::Sparsify { graph, report, params } => {
            let params = params.merged(&file);
            let g = read_graph(graph)?.to_graph()?;
            let (c, r) = sparsify_pipeline(&g, params.t.unwrap_or(5), params.k.unwrap_or(2))?;
            if let Some(path) = report {
                fs::write(path, serde_json::to_string_pretty(&r)? + "\n")?;
            }
            let code = if r.round_trip { EXIT_OK } else { EXIT_INVALID };
            Ok(Outcome {
                output: pretty(&c.to_json())?,
                code,
            })
        }
        Command::Desparsify { colored } => {
            let c = ColoredGraph::from_json(&serde_json::from_str(&fs::read_to_string(colored)?)?)?;
            Ok(Outcome::ok(pretty(&GraphJson::from_graph(&decode(&c)?))?))
        }
        Command::Verify { experiment, count, n_max, params } => {
            verify(*experiment, *count, *n_max, &params.merged(&file))
        }
        Command::ExportDot { graph } => {
            let j = read_graph(graph)?;
            Ok(Outcome::ok(match &j.sides {
                Some(_) => bipartite_to_dot(&j.to_bipartite()?),
                None => graph_to_dot(&j.to_graph()?, j.labels.as_deref()),
            }))
        }
        Command::Stats { graph } => stats(&read_graph(graph)?),
    }
}

fn read_graph(path: &Path) -> Result<GraphJson> {
    parse_graph_json(&fs::read_to_string(path)?)
}

fn pretty<T: Serialize>(x: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(x)? + "\n")
}

fn gen(family: Family, n: usize, r: usize, p: f64, params: &Params) -> Result<Outcome> {
    let seed = params.seed.unwrap_or(0);
    let t = params.t.unwrap_or(n);
    let k = params.k.unwrap_or(2);
    let j = match family {
        Family::Path => GraphJson::from_graph(&path(t)?),
        Family::Cycle => GraphJson::from_graph(&cycle(n)?),
        Family::Complete => GraphJson::from_graph(&complete(n)),
        Family::Edgeless => GraphJson::from_graph(&edgeless(n)),
        Family::CompleteBipartite => GraphJson::from_bipartite(&complete_bipartite(n, r)),
        Family::Matching => GraphJson::from_graph(&matching(n)),
        Family::HalfGraph => GraphJson::from_bipartite(&half_graph(k)?),
        Family::Threshold => GraphJson::from_graph(&universal_threshold(k)?),
        Family::Random => GraphJson::from_graph(&random_graph(n, p, seed)?),
        Family::RandomBipartite => GraphJson::from_bipartite(&random_bipartite(n, r, p, seed)?),
        Family::TreeModel => {
            let m = random_tree_model(k, params.h.unwrap_or(2), n, seed)?;
            GraphJson::from_graph(&m.evaluate()?)
        }
        Family::LexC5 => {
            let c5 = cycle(5)?;
            GraphJson::from_graph(&c5.lexicographic_product(&c5))
        }
    };
    Ok(Outcome::ok(pretty(&j)?))
}

fn pattern_graph(spec: &str) -> Result<(Option<Graph>, Option<BipartiteGraph>)> {
    let (name, arg) = spec
        .split_once(':')
        .ok_or_else(|| Error::InvalidParameter(format!("pattern {spec} needs a size, as in path:5")))?;
    let m: usize = arg
        .parse()
        .map_err(|_| Error::InvalidParameter(format!("bad pattern size {arg}")))?;
    Ok(match name {
        "path" => (Some(path(m)?), None),
        "co-path" => (Some(path(m)?.complement()), None),
        "cycle" => (Some(cycle(m)?), None),
        "complete" => (Some(complete(m)), None),
        "threshold" => (Some(universal_threshold(m)?), None),
        "half-graph" => (None, Some(half_graph(m)?)),
        "bipath" => (None, Some(bipartite_path(m)?)),
        "bipath-co" => (None, Some(bipartite_path_complement(m)?)),
        _ => return Err(Error::InvalidParameter(format!("unknown pattern {name}"))),
    })
}

fn detect(j: &GraphJson, spec: &str, mode: DetectMode) -> Result<Outcome> {
    match spec {
        "sind" => {
            let (k, w) = strong_index(&j.to_graph()?)?;
            return Ok(Outcome::ok(pretty(&json!({ "index": "strong", "value": k, "witness": w }))?));
        }
        "bind" => {
            let (k, w) = bipartite_index(&j.to_bipartite()?)?;
            return Ok(Outcome::ok(pretty(&json!({ "index": "bipartite", "value": k, "witness": w }))?));
        }
        _ => {}
    }
    let (plain, bip) = pattern_graph(spec)?;
    let witness = match (mode, plain, bip) {
        (DetectMode::Induced, Some(p), _) => find_induced(&j.to_graph()?, &p)?,
        (DetectMode::Induced, None, Some(b)) => find_induced(&j.to_graph()?, b.graph())?,
        (DetectMode::SemiInduced, _, Some(b)) => find_semi_induced(&j.to_graph()?, &b)?,
        (DetectMode::Bipartite, _, Some(b)) => find_in_bipartite(&j.to_bipartite()?, &b)?,
        _ => {
            return Err(Error::InvalidParameter(format!(
                "pattern {spec} has no sides, which {mode:?} search needs"
            )))
        }
    };
    let found = witness.is_some();
    Ok(Outcome {
        output: pretty(&json!({ "pattern": spec, "found": found, "witness": witness }))?,
        code: if found { EXIT_PRECONDITION } else { EXIT_OK },
    })
}

fn decompose(j: &GraphJson, mode: DecomposeMode, dot: Option<&Path>, params: &Params) -> Result<Outcome> {
    let g = j.to_graph()?;
    let t = params.t.unwrap_or(5);
    let (value, ok, rendering) = match mode {
        DecomposeMode::Gyarfas => {
            let y = gyarfas::build(&g);
            let check = y.validate(&g);
            let v = json!({
                "height": y.height(),
                "decomposition": y.to_json(),
                "valid": check.is_ok(),
                "violation": check.as_ref().err().map(|e| e.to_string()),
            });
            (v, check.is_ok(), y.to_dot(&g))
        }
        DecomposeMode::Cosplit => {
            let s = cosplit(&g, t, params.k)?;
            let r = validate_cosplit(&g, &s, None, None);
            let bound = strong_index(&g).ok().map(|(k, _)| cosplit_size_bound(t, k).to_string());
            let ok = r.ok();
            let v = json!({ "cosplit": s.to_json(), "validation": r, "size_bound": bound });
            (v, ok, part_dot(&g, &s.parts))
        }
        DecomposeMode::Cosplit2 => {
            let (s, sides) = match &j.sides {
                Some(_) => {
                    let b = j.to_bipartite()?;
                    (two_cosplit_bipartite(&b, t, params.k)?, Some(b.left().clone()))
                }
                None => (two_cosplit(&g, t, params.k.unwrap_or(2))?, None),
            };
            let r = validate_two_cosplit(&g, &s, sides.as_ref(), None, None);
            let ok = r.ok();
            let v = json!({ "two_cosplit": s.to_json(), "validation": r });
            (v, ok, part_dot(&g, &s.parts))
        }
        DecomposeMode::Sparsify => {
            let s = two_cosplit(&g, t, params.k.unwrap_or(2))?;
            let c = encode(&g, &s)?;
            let r = report(&g, &s, &c)?;
            let ok = r.round_trip;
            let v = json!({ "colored": c.to_json(), "report": r });
            (v, ok, graph_to_dot(&c.graph, None))
        }
    };
    if let Some(path) = dot {
        fs::write(path, rendering)?;
    }
    Ok(Outcome {
        output: pretty(&value)?,
        code: if ok { EXIT_OK } else { EXIT_INVALID },
    })
}

fn part_dot(g: &Graph, parts: &[Bitset]) -> String {
    let labels: Vec<String> = g
        .vertices()
        .map(|v| {
            let p = parts.iter().position(|p| p.contains(v)).unwrap_or(usize::MAX);
            format!("{v}/P{p}")
        })
        .collect();
    graph_to_dot(g, Some(&labels))
}

fn verify(experiment: Experiment, count: usize, n_max: usize, params: &Params) -> Result<Outcome> {
    let seed = params.seed.unwrap_or(1);
    let t = params.t.unwrap_or(5);
    let k = params.k.unwrap_or(2);
    let mut csv = String::new();
    let mut failures = 0;
    let mut row = |csv: &mut String, fields: String, pass: bool| {
        failures += usize::from(!pass);
        let _ = writeln!(csv, "{fields},{pass}");
    };
    match experiment {
        Experiment::ChiBound => {
            csv.push_str("instance,n,chi,omega,cosplit_size,pass\n");
            let corpus = graph_corpus(seed, count, 2, n_max, &Exclusions::induced_class(t, k)?)?;
            for (i, g) in corpus.iter().enumerate() {
                let s = cosplit(g, t, None)?;
                let (chi, omega) = (chromatic_number(g)?, clique_number(g)?);
                row(&mut csv, format!("{i},{},{chi},{omega},{}", g.n(), s.size()), chi <= s.size() * omega);
            }
        }
        Experiment::Homogeneous => {
            csv.push_str("instance,n,homogeneous,bound,pass\n");
            let ex = Exclusions {
                induced: vec![universal_threshold(k)?],
                ..Exclusions::default()
            };
            for (i, g) in graph_corpus(seed, count, 1, n_max, &ex)?.iter().enumerate() {
                let size = homogeneous_set(g)?.len();
                let bound = (g.n() as f64).powf(1.0 / (2 * k) as f64) / 4.0;
                row(&mut csv, format!("{i},{},{size},{bound:.4}", g.n()), size as f64 >= bound);
            }
        }
        Experiment::HeightBounds => {
            csv.push_str("n,graph,height,pass\n");
            let pt = path(t)?;
            for n in 1..=n_max.min(8) {
                for (i, g) in nonisomorphic_connected_graphs(n).iter().enumerate() {
                    if find_induced(g, &pt)?.is_some() {
                        continue;
                    }
                    let y = gyarfas::build(g);
                    let pass = y.validate(g).is_ok() && y.height() + 2 <= t;
                    row(&mut csv, format!("{n},{i},{}", y.height()), pass);
                }
            }
        }
        Experiment::Roundtrip => {
            csv.push_str("instance,n,parts,encoded_edges,pass\n");
            let corpus = graph_corpus(seed, count, 1, n_max, &Exclusions::semi_induced_class(t, k)?)?;
            for (i, g) in corpus.iter().enumerate() {
                let s = two_cosplit(g, t, k)?;
                let c = encode(g, &s)?;
                let pass = decode(&c)? == *g;
                row(&mut csv, format!("{i},{},{},{}", g.n(), s.size(), c.graph.edge_count()), pass);
            }
        }
    }
    Ok(Outcome {
        output: csv,
        code: if failures == 0 { EXIT_OK } else { EXIT_INVALID },
    })
}

fn stats(j: &GraphJson) -> Result<Outcome> {
    let g = j.to_graph()?;
    let caps = SearchCaps::default();
    let small = |cap: usize| g.n() <= cap;
    let bind = match &j.sides {
        Some(_) if small(caps.index) => Some(bipartite_index(&j.to_bipartite()?)?.0),
        _ => None,
    };
    let v = json!({
        "n": g.n(),
        "edges": g.edge_count(),
        "degeneracy": degeneracy(&g),
        "clique_number": if small(caps.clique) { Some(clique_number(&g)?) } else { None },
        "independence_number": if small(caps.clique) { Some(independence_number(&g)?) } else { None },
        "chromatic_number": if small(caps.chromatic) { Some(chromatic_number(&g)?) } else { None },
        "treedepth": if small(caps.treedepth) { Some(treedepth(&g)?) } else { None },
        "longest_induced_path": if small(caps.treedepth) { Some(longest_induced_path(&g)?) } else { None },
        "strong_index": if small(caps.index) { Some(strong_index(&g)?.0) } else { None },
        "bipartite_index": bind,
        "cotree_height": build_cotree(&g).map(|t| t.height()),
    });
    Ok(Outcome::ok(pretty(&v)?))
}
