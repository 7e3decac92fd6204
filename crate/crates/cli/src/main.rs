//! `mrsd` command-line tool.
//!
//! Exit codes: 0 success, 1 usage error, 2 input or validation error,
//! 3 size guard exceeded.

use std::fmt::Display;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use mrsd_core::image::{self, DEFAULT_MAX_PIXELS};
use mrsd_core::io::{parse_matrix, parse_pnm, write_pgm, write_ppm, ResultFile};
use mrsd_core::{
    brute_force_mrsd, build_image_matrix, complete_linkage, mrsd_bipartition, mrsd_multipartition,
    single_linkage, validate_metric, ClusteringResult, DissimilarityMatrix, Error, MetricCheck,
    MrsdConfig,
};

#[derive(Parser, Debug)]
#[command(
    name = "mrsd",
    version,
    about = "Clustering by maximum split-to-diameter ratio"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Cluster a dissimilarity matrix.
    Cluster {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        restarts: usize,
        /// Defaults to exact for k = 2 and approx otherwise.
        #[arg(long, value_enum)]
        algo: Option<Algo>,
        #[arg(long, value_enum, default_value_t = Metric::Warn)]
        metric: Metric,
        /// Replace each mirrored pair with its maximum before validation.
        #[arg(long)]
        symmetrize: bool,
        #[arg(long)]
        output: PathBuf,
    },
    /// Exhaustive optimum (small inputs only).
    Oracle {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        symmetrize: bool,
        #[arg(long)]
        output: PathBuf,
    },
    /// Single- or complete-linkage baseline.
    Baseline {
        #[arg(long, value_enum)]
        algo: Linkage,
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        symmetrize: bool,
        #[arg(long)]
        output: PathBuf,
    },
    /// Segment a PGM/PPM image.
    Segment {
        #[arg(long)]
        image: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_MAX_PIXELS)]
        max_pixels: usize,
        #[arg(long)]
        out_labels: PathBuf,
        #[arg(long)]
        out_color: Option<PathBuf>,
    },
    /// Report triangle-inequality violations.
    Validate {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        symmetrize: bool,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Algo {
    Exact,
    Approx,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Metric {
    Warn,
    Error,
    Skip,
}

impl From<Metric> for MetricCheck {
    fn from(m: Metric) -> Self {
        match m {
            Metric::Warn => MetricCheck::Warn,
            Metric::Error => MetricCheck::Error,
            Metric::Skip => MetricCheck::Skip,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Linkage {
    Single,
    Complete,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Input(String),
    Size(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Input(_) => 2,
            Failure::Size(_) => 3,
        }
    }
}

impl Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Usage(m) | Failure::Input(m) | Failure::Size(m) => f.write_str(m),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::SizeGuard(_) | Error::ImageTooLarge { .. } => Failure::Size(e.to_string()),
            Error::InvalidK { .. } | Error::InvalidRestarts => Failure::Usage(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

fn read_matrix(path: &Path, symmetrize: bool) -> Result<DissimilarityMatrix, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    parse_matrix(&text, symmetrize).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, bytes: impl AsRef<[u8]>) -> Result<(), Failure> {
    std::fs::write(path, bytes).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn print_summary(r: &ClusteringResult) {
    println!("cost: {}", r.cost);
    println!("split: {}", r.split);
    println!("diameter: {}", r.diameter);
}

fn write_result(
    path: &Path,
    r: &ClusteringResult,
    algorithm: &str,
    seed: Option<u64>,
) -> Result<(), Failure> {
    write_file(path, ResultFile::from_result(r, algorithm, seed).to_json())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Cluster {
            input,
            k,
            seed,
            restarts,
            algo,
            metric,
            symmetrize,
            output,
        } => {
            let algo = algo.unwrap_or(if k == 2 { Algo::Exact } else { Algo::Approx });
            if algo == Algo::Exact && k != 2 {
                return Err(Failure::Usage(
                    "the exact algorithm only handles k = 2; use --algo approx".into(),
                ));
            }
            let d = read_matrix(&input, symmetrize)?;
            let (r, name, seed) = match algo {
                Algo::Exact => (mrsd_bipartition(&d)?, "mrsd-exact", None),
                Algo::Approx => {
                    let cfg = MrsdConfig::new(k)
                        .with_seed(seed)
                        .with_restarts(restarts)
                        .with_metric_check(metric.into());
                    (mrsd_multipartition(&d, &cfg)?, "mrsd-approx", Some(seed))
                }
            };
            write_result(&output, &r, name, seed)?;
            print_summary(&r);
        }
        Command::Oracle {
            input,
            k,
            symmetrize,
            output,
        } => {
            let d = read_matrix(&input, symmetrize)?;
            let r = brute_force_mrsd(&d, k)?;
            write_result(&output, &r, "oracle", None)?;
            print_summary(&r);
        }
        Command::Baseline {
            algo,
            input,
            k,
            symmetrize,
            output,
        } => {
            let d = read_matrix(&input, symmetrize)?;
            let (p, name) = match algo {
                Linkage::Single => (single_linkage(&d, k)?, "single-linkage"),
                Linkage::Complete => (complete_linkage(&d, k)?, "complete-linkage"),
            };
            let r = ClusteringResult::evaluate(p, &d)?;
            write_result(&output, &r, name, None)?;
            print_summary(&r);
        }
        Command::Segment {
            image: path,
            k,
            seed,
            max_pixels,
            out_labels,
            out_color,
        } => {
            let bytes = std::fs::read(&path)
                .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
            let img = parse_pnm(&bytes)?;
            let d = build_image_matrix(&img, max_pixels)?;
            let r = if k == 2 {
                mrsd_bipartition(&d)?
            } else {
                // Pixel dissimilarities are metric by construction.
                let cfg = MrsdConfig::new(k)
                    .with_seed(seed)
                    .with_metric_check(MetricCheck::Skip);
                mrsd_multipartition(&d, &cfg)?
            };
            let (w, h) = (img.width(), img.height());
            write_file(
                &out_labels,
                write_pgm(w, h, &image::label_map(&r.partition)),
            )?;
            if let Some(path) = out_color {
                write_file(&path, write_ppm(w, h, &image::color_overlay(&r.partition)))?;
            }
            print_summary(&r);
        }
        Command::Validate { input, symmetrize } => {
            let d = read_matrix(&input, symmetrize)?;
            let violations = validate_metric(&d);
            println!("n: {}", d.len());
            if violations.is_empty() {
                println!("metric: yes");
            } else {
                println!("metric: no ({} violating triples)", violations.len());
                for &(i, j, w) in violations.iter().take(10) {
                    println!(
                        "  d({i},{j}) = {} > d({i},{w}) + d({w},{j}) = {}",
                        d.get(i, j),
                        d.get(i, w) + d.get(w, j)
                    );
                }
                return Err(Failure::Input("triangle inequality violated".into()));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {f}");
            ExitCode::from(f.code())
        }
    }
}
