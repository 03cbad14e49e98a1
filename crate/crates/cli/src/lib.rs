//! Command-line front end: every subcommand runs one experiment and returns
//! its certificate, rendered as JSON, CSV or a table.

use clap::{Args, Parser, Subcommand, ValueEnum};
use hnn_patterns::analysis::certificate::Certificate;
use hnn_patterns::analysis::{convex, fellow, fftp, nonreg, strips, AnalysisError};
use hnn_patterns::cayley::{BallLimits, CayleyError, DistanceMap};
use hnn_patterns::patterns::{
    enumerate_reachable, format_sequence, EnumerateMode, EnumerateOptions, Reachable,
};
use hnn_patterns::presentation::{GroupPresentation, PresentationError, PresentationFile};
use serde_json::{json, Value};
use std::path::{Path, PathBuf};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Bad invocation: exit code 2.
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Analysis(#[from] AnalysisError),
    #[error("cannot write {path}: {source}")]
    Write { path: PathBuf, source: std::io::Error },
}

impl From<CayleyError> for CliError {
    fn from(e: CayleyError) -> Self {
        CliError::Analysis(e.into())
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

/// Options shared by every subcommand.
#[derive(Clone, Debug, Args)]
pub struct RunConfig {
    /// Built-in name (g11, gw) or path to a presentation file.
    #[arg(long, global = true, default_value = "g11")]
    pub presentation: String,
    /// Ball radius N.
    #[arg(long, global = true)]
    pub radius: Option<u32>,
    /// Write the rendered output here instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Seed for randomized sampling.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Clone, Debug, Parser)]
#[command(name = "hnnpat", version, about = "Strip sequences, patterns and geodesic experiments for multiple HNN extensions of Z^n")]
pub struct Cli {
    #[command(flatten)]
    pub config: RunConfig,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Debug, Subcommand)]
pub enum Command {
    /// Build the ball B(N), print sphere sizes and write the ball cache.
    Ball {
        /// Cache file; defaults to `<name>-r<N>.ball` in the current directory.
        #[arg(long)]
        cache: Option<PathBuf>,
        #[arg(long)]
        no_cache: bool,
    },
    /// Strip sequences within B(N) with conjectured-form verdicts.
    Sequences {
        /// Only strips leaving planes up to this depth.
        #[arg(long)]
        depth: Option<usize>,
    },
    /// Patterns (or sequences) reachable by moves, with genealogies.
    Moves {
        #[arg(long, default_value_t = 3)]
        depth: usize,
        #[arg(long, value_enum, default_value_t = Mode::Pattern)]
        mode: Mode,
        /// Also cut inside repeated words.
        #[arg(long)]
        inner_cuts: bool,
    },
    /// Cut points of the geodesic family b' s^n a^k.
    Nonreg {
        #[arg(long, default_value_t = 3)]
        n_max: u32,
        /// Confirm each cut point with a ball along the witness branch.
        #[arg(long)]
        confirm: bool,
    },
    /// Unique-geodesic word pairs and their synchronous distance, n = 1..=N.
    Fellow {
        #[arg(long, default_value_t = 2)]
        n: u32,
    },
    /// Almost-convexity audit of S(1) .. S(N).
    Ac {
        /// Base falsification constant; measured when omitted.
        #[arg(long)]
        k: Option<u64>,
        /// Largest allowed joining path; defaults to 10k + 2.
        #[arg(long)]
        cap: Option<u64>,
    },
    /// Falsification by fellow traveller in the base group.
    Fftp {
        /// Constant to check; the smallest passing one up to `k_max` is found when omitted.
        #[arg(long)]
        k: Option<u64>,
        #[arg(long, default_value_t = 4)]
        k_max: u64,
        /// Exhaustive word length bound.
        #[arg(long, default_value_t = fftp::FFTP_EXHAUSTIVE_LENGTH)]
        length: usize,
        /// Random words checked beyond the exhaustive bound.
        #[arg(long, default_value_t = 0)]
        samples: u64,
        #[arg(long, default_value_t = 16)]
        sample_length: usize,
    },
    /// Normal form and distance of a word.
    Normalize { word: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Pattern,
    Sequence,
}

/// Loads a presentation by built-in name or file path.
pub fn load_presentation(spec: &str) -> Result<GroupPresentation, CliError> {
    let path = Path::new(spec);
    let r = if path.is_file() { PresentationFile::load(path).and_then(GroupPresentation::from_file) } else { GroupPresentation::builtin(spec) };
    r.map_err(|e| CliError::Usage(e.to_string()))
}

fn usage(e: PresentationError) -> CliError {
    CliError::Usage(e.to_string())
}

pub fn execute(cli: &Cli) -> Result<Certificate, CliError> {
    let cfg = &cli.config;
    let p = load_presentation(&cfg.presentation)?;
    let base = |name: &str| Certificate::new(name, &p).param("seed", cfg.seed);
    let cert = match &cli.command {
        Command::Ball { cache, no_cache } => {
            let radius = cfg.radius.unwrap_or(6);
            let ball = DistanceMap::build(&p, radius, BallLimits::default())?;
            let mut c = base("ball").param("radius", radius);
            c.radius = Some(radius);
            let sizes = ball.sphere_sizes();
            c.table(&["radius", "sphere_size"], sizes.iter().enumerate().map(|(i, s)| vec![json!(i), json!(s)]).collect());
            let total: u64 = sizes.iter().sum();
            c.check("sphere sizes add up to the ball", total == ball.len() as u64, format!("{total} elements"));
            if !no_cache {
                let path = cache.clone().unwrap_or_else(|| PathBuf::from(format!("{}-r{radius}.ball", p.file().name)));
                ball.save(&path)?;
                c.notes.push(format!("ball cached at {}", path.display()));
            }
            c
        }
        Command::Sequences { depth } => {
            let radius = cfg.radius.unwrap_or(6);
            let rows = strips::sequence_table(&p, radius, *depth)?;
            let mut c = base("sequences").param("radius", radius).param("depth", depth);
            c.radius = Some(radius);
            let bad: u64 = rows.iter().filter(|r| !r.conjectured).map(|r| r.strips).sum();
            let total: u64 = rows.iter().map(|r| r.strips).sum();
            c.check("conjectured form", bad == 0, format!("{bad} of {total} strips violate it"));
            c.notes.push("isomorphic planes are explored once, so counts are per plane class".into());
            c.table(
                &["sequence", "strips", "min_depth", "conjectured"],
                rows.iter().map(|r| vec![json!(r.sequence), json!(r.strips), json!(r.min_depth), json!(r.conjectured)]).collect(),
            );
            c.set_results(&rows)?;
            c
        }
        Command::Moves { depth, mode, inner_cuts } => {
            let mode = match mode {
                Mode::Pattern => EnumerateMode::Pattern,
                Mode::Sequence => EnumerateMode::Sequence,
            };
            let r = enumerate_reachable(mode, EnumerateOptions { depth: *depth, inner_cuts: *inner_cuts })
                .map_err(|e| CliError::Usage(e.to_string()))?;
            let mut c = base("moves")
                .param("depth", depth)
                .param("mode", format!("{mode:?}").to_lowercase())
                .param("inner_cuts", inner_cuts);
            let rows: Vec<Vec<Value>> = match &r {
                Reachable::Patterns(v) => v
                    .iter()
                    .map(|x| {
                        let g: Vec<String> = x.moves.iter().map(|m| m.to_string()).collect();
                        vec![json!(x.item.to_string()), json!(x.depth), json!(g.join(" ")), json!(x.item.is_conjectured_form())]
                    })
                    .collect(),
                Reachable::Sequences(v) => v
                    .iter()
                    .map(|x| {
                        let g: Vec<String> = x.moves.iter().map(|m| m.to_string()).collect();
                        vec![json!(format_sequence(&x.item)), json!(x.depth), json!(g.join(" ")), json!(x.item.is_conjectured_form())]
                    })
                    .collect(),
            };
            let bad = rows.iter().filter(|r| r[3] != json!(true)).count();
            c.check("conjectured form", bad == 0, format!("{bad} of {} items violate it", rows.len()));
            c.table(&["item", "depth", "genealogy", "conjectured"], rows);
            c
        }
        Command::Nonreg { n_max, confirm } => {
            let reports = nonreg::nonregularity_cutpoints(&p, *n_max, *confirm)?;
            let mut c = base("nonreg").param("n_max", n_max).param("confirm", confirm);
            for r in &reports {
                c.check(
                    &format!("cut point n={}", r.n),
                    r.agrees && r.ball_confirmed != Some(false),
                    format!("largest k = {}, expected 2^n - 1 = {}", r.max_geodesic_k, r.expected),
                );
            }
            c.check("strictly increasing", nonreg::strictly_increasing(&reports), "cut points grow with n");
            c.notes.push("finite evidence: cut points for the computed n only".into());
            c.table(
                &["n", "max_geodesic_k", "expected", "agrees", "c_direction_max_k", "ball_confirmed"],
                reports
                    .iter()
                    .map(|r| {
                        vec![json!(r.n), json!(r.max_geodesic_k), json!(r.expected), json!(r.agrees), json!(r.c_direction_max_k), json!(r.ball_confirmed)]
                    })
                    .collect(),
            );
            c.set_results(&reports)?;
            c
        }
        Command::Fellow { n } => {
            let reports: Vec<_> = (1..=*n).map(|i| fellow::fellow_traveler_audit(&p, i)).collect::<Result<_, _>>()?;
            let mut c = base("fellow").param("n", n);
            for r in &reports {
                c.check(
                    &format!("unique geodesics n={}", r.n),
                    r.both_unique,
                    format!("{} and {} geodesics", r.w_geodesics, r.w_prime_geodesics),
                );
                c.check(
                    &format!("endpoints adjacent n={}", r.n),
                    r.endpoint_distance <= 1,
                    format!("endpoint distance {}", r.endpoint_distance),
                );
            }
            if reports.len() > 1 {
                let grows = reports.windows(2).all(|w| w[0].sync_constant < w[1].sync_constant);
                let seq: Vec<String> = reports.iter().map(|r| r.sync_constant.to_string()).collect();
                c.check("synchronous constant grows", grows, seq.join(", "));
            }
            c.notes.push("synchronous fellow travelling; finite evidence for the computed n only".into());
            c.table(
                &["n", "w", "w_prime", "both_unique", "endpoint_distance", "sync_constant"],
                reports
                    .iter()
                    .map(|r| vec![json!(r.n), json!(r.w), json!(r.w_prime), json!(r.both_unique), json!(r.endpoint_distance), json!(r.sync_constant)])
                    .collect(),
            );
            c.set_results(&reports)?;
            c
        }
        Command::Ac { k, cap } => {
            let radius = cfg.radius.unwrap_or(4);
            let k = match k {
                Some(k) => *k,
                None => fftp::fftp_constant(&p, 4, fftp::FFTP_EXHAUSTIVE_LENGTH)?
                    .0
                    .ok_or_else(|| CliError::Usage("no base falsification constant up to 4; pass --k".into()))?,
            };
            let cap = cap.unwrap_or(10 * k + 2);
            let ball = DistanceMap::build(&p, radius, BallLimits::default())?;
            let reports: Vec<_> = (1..=radius).map(|r| convex::almost_convex_audit(&p, &ball, r, k, cap)).collect::<Result<_, _>>()?;
            let mut c = base("ac").param("radius", radius).param("k", k).param("cap", cap);
            c.radius = Some(radius);
            for r in &reports {
                c.check(
                    &format!("S({}) joined within {cap}", r.radius),
                    r.passed,
                    format!("worst joining length {}", r.min_connecting_length),
                );
            }
            c.table(
                &["N", "sphere_size", "pairs_distance_one", "pairs_distance_two", "detour_pairs", "worst_length", "bound"],
                reports
                    .iter()
                    .map(|r| {
                        vec![
                            json!(r.radius),
                            json!(r.sphere_size),
                            json!(r.pairs_distance_one),
                            json!(r.pairs_distance_two),
                            json!(r.detour_pairs),
                            json!(r.min_connecting_length),
                            json!(r.bound_claimed),
                        ]
                    })
                    .collect(),
            );
            c.set_results(&reports)?;
            c
        }
        Command::Fftp { k, k_max, length, samples, sample_length } => {
            let reports = match k {
                Some(k) => vec![fftp::fftp_base_check(&p, *k, *length, *samples, *sample_length, cfg.seed)?],
                None => {
                    let (found, mut tried) = fftp::fftp_constant(&p, *k_max, *length)?;
                    if let (Some(k), true) = (found, *samples > 0) {
                        tried.pop();
                        tried.push(fftp::fftp_base_check(&p, k, *length, *samples, *sample_length, cfg.seed)?);
                    }
                    tried
                }
            };
            let mut c = base("fftp")
                .param("k", k)
                .param("k_max", k_max)
                .param("length", length)
                .param("samples", samples)
                .param("sample_length", sample_length);
            let last = reports.last().expect("at least one constant tried");
            c.check(
                "falsification by fellow traveller",
                last.passed,
                match &last.counterexample {
                    None => format!("k = {} passes", last.k),
                    Some(w) => format!("k = {} fails on {w}", last.k),
                },
            );
            c.table(
                &["k", "passed", "states", "sampled", "counterexample"],
                reports
                    .iter()
                    .map(|r| vec![json!(r.k), json!(r.passed), json!(r.states), json!(r.sampled), json!(r.counterexample)])
                    .collect(),
            );
            c.set_results(&reports)?;
            c
        }
        Command::Normalize { word } => {
            let w = p.parse_word(word).map_err(usage)?;
            let nf = p.normalize(&w);
            let mut c = base("normalize").param("word", word);
            let oracle = hnn_patterns::cayley::planes::PlaneOracle::new(&p).ok();
            let d = oracle.map(|o| o.distance(&nf));
            c.table(
                &["word", "normal_form", "length", "distance"],
                vec![vec![json!(p.format_word(&w)), json!(p.format_word(&nf.to_word(&p))), json!(w.len()), json!(d)]],
            );
            c.set_results(&nf)?;
            c
        }
    };
    Ok(cert)
}

pub fn render(cert: &Certificate, format: Format) -> Result<String, CliError> {
    Ok(match format {
        Format::Json => cert.to_json()?,
        Format::Csv => cert.to_csv()?,
        Format::Table => cert.to_table(),
    })
}

/// Runs a parsed command line, writes the rendering and returns the exit code.
pub fn run(cli: &Cli) -> i32 {
    let result = execute(cli).and_then(|c| Ok((render(&c, cli.config.format)?, c.passed)));
    match result {
        Ok((text, passed)) => {
            let written = match &cli.config.output {
                Some(path) => std::fs::write(path, &text).map_err(|source| CliError::Write { path: path.clone(), source }),
                None => {
                    print!("{text}");
                    Ok(())
                }
            };
            match written {
                Ok(()) if passed => 0,
                Ok(()) => 1,
                Err(e) => {
                    eprintln!("error: {e}");
                    e.exit_code()
                }
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
