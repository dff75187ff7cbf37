use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use graphon_calculus::calculus::{gateaux_exact, gateaux_fd, DerivativeRequest};
use graphon_calculus::classpoly::{decompose_t, decompose_tinj_mixed};
use graphon_calculus::harness::{l1_density_demo, verify_if, verify_only_if, CatalogTarget};
use graphon_calculus::homdensity::{t, t_inj};
use graphon_calculus::io;
use graphon_calculus::multigraph::enumerate;
use graphon_calculus::norms::{cut_distance_perm, cut_norm_exact, l1_distance, CUT_DISTANCE_LIMIT};
use graphon_calculus::scalar::{format_rational, parse_rational};
use graphon_calculus::weighted_graph::random_direction_with;
use graphon_calculus::{Error, Multigraph, Rational, RationalDirection};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Parser)]
#[command(name = "graphon", version, about = "Exact calculus on step graphons")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write the machine-readable output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    T,
    Tinj,
}

#[derive(Subcommand)]
enum Command {
    /// List isomorphism classes of loopless multigraphs with a given edge count.
    Enumerate {
        #[arg(long)]
        edges: u32,
        #[arg(long)]
        max_vertices: Option<usize>,
    },
    /// Homomorphism density of a multigraph in a weighted matrix.
    Density {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long, value_enum, default_value = "t")]
        kind: Kind,
    },
    /// Decompose a class function into density coefficients.
    Decompose {
        #[arg(long)]
        poly: PathBuf,
        #[arg(long, value_enum, default_value = "t")]
        kind: Kind,
        /// Maximum edge count; required for the `t` basis.
        #[arg(long = "N")]
        max_edges: Option<u32>,
    },
    /// Mixed Gateaux derivative of an edge polynomial.
    Derive(DeriveArgs),
    /// Exact cut norm of a matrix.
    Cutnorm {
        #[arg(long)]
        matrix: PathBuf,
    },
    /// L1 distance between two step graphons, with a cut-distance upper bound.
    L1 {
        #[arg(long, num_args = 2, value_names = ["A", "B"], required = true)]
        matrix: Vec<PathBuf>,
        /// Also minimize the cut norm over relabelings (equal sizes, n <= 8).
        #[arg(long)]
        cut_distance: bool,
    },
    /// Check that a density combination has vanishing derivatives of order N+1.
    VerifyIf {
        #[arg(long)]
        coeffs: PathBuf,
        #[arg(long = "N")]
        max_edges: u32,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 4)]
        trials: usize,
    },
    /// Recover density coefficients of a class function with vanishing derivatives.
    VerifyOnlyIf {
        #[arg(long)]
        poly: PathBuf,
        #[arg(long = "N")]
        max_edges: u32,
        #[arg(long, default_value_t = 2)]
        blowup: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Densities of discretized catalog graphons against closed forms.
    DemoL1 {
        /// `xy`, `min`, or `const:p`.
        #[arg(long)]
        target: String,
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
    },
}

#[derive(Args)]
struct DeriveArgs {
    #[arg(long)]
    poly: PathBuf,
    #[arg(long)]
    matrix: PathBuf,
    /// Direction matrix file; repeat once per direction.
    #[arg(long)]
    direction: Vec<PathBuf>,
    /// Number of seeded random directions when no `--direction` is given.
    #[arg(long, requires = "seed", conflicts_with = "direction")]
    order: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    /// Also report the exact iterated difference with this rational step.
    #[arg(long)]
    step: Option<String>,
}

/// Output of a successful run; `ok` is false for a refuted verdict.
struct Outcome {
    stdout: String,
    summary: String,
    ok: bool,
}

impl Outcome {
    fn success(stdout: String, summary: String) -> Self {
        Outcome {
            stdout,
            summary,
            ok: true,
        }
    }
}

#[derive(Debug)]
struct Failure(String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(e.to_string())
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn load<T>(path: &Path, parse: impl Fn(&str) -> graphon_calculus::Result<T>) -> Result<T, Failure> {
    let text = read(path)?;
    parse(&text).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn run(command: Command) -> Result<Outcome, Failure> {
    match command {
        Command::Enumerate {
            edges,
            max_vertices,
        } => {
            let graphs = enumerate(edges, max_vertices);
            Ok(Outcome::success(
                io::write_multigraphs(&graphs),
                format!("{} multigraphs with {edges} edges", graphs.len()),
            ))
        }
        Command::Density {
            graph,
            matrix,
            kind,
        } => {
            let h = load(&graph, Multigraph::from_text)?;
            let a = load(&matrix, io::parse_matrix)?;
            let (value, name) = match kind {
                Kind::T => (t(&h, &a), "t"),
                Kind::Tinj => (t_inj(&h, &a), "tinj"),
            };
            Ok(Outcome::success(
                format!("{}\n", format_rational(&value)),
                format!("{name}({h}, a) on n = {}", a.size()),
            ))
        }
        Command::Decompose {
            poly,
            kind,
            max_edges,
        } => {
            let f = load(&poly, io::parse_polynomial)?;
            let coeffs = match kind {
                Kind::Tinj => decompose_tinj_mixed(&f)?,
                Kind::T => {
                    let n =
                        max_edges.ok_or_else(|| Failure("--N is required for --kind t".into()))?;
                    decompose_t(&f, n)?
                }
            };
            Ok(Outcome::success(
                io::write_coefficients(&coeffs),
                format!("{} nonzero coefficients", coeffs.len()),
            ))
        }
        Command::Derive(args) => derive(args),
        Command::Cutnorm { matrix } => {
            let a = load(&matrix, io::parse_matrix)?;
            let r = cut_norm_exact(&a)?;
            Ok(Outcome::success(
                io::write_cut_norm(&r),
                format!("cut norm {} on n = {}", format_rational(&r.value), a.size()),
            ))
        }
        Command::L1 {
            matrix,
            cut_distance,
        } => {
            let a = load(&matrix[0], io::parse_matrix)?;
            let b = load(&matrix[1], io::parse_matrix)?;
            let l1 = l1_distance(&a, &b);
            let cut = if cut_distance {
                if a.size() > CUT_DISTANCE_LIMIT {
                    return Err(Error::SizeOverLimit {
                        size: a.size(),
                        limit: CUT_DISTANCE_LIMIT,
                    }
                    .into());
                }
                Some(cut_distance_perm(&a, &b)?)
            } else {
                None
            };
            Ok(Outcome::success(
                io::write_distances(&l1, cut.as_ref()),
                format!("L1 distance {}", format_rational(&l1.full)),
            ))
        }
        Command::VerifyIf {
            coeffs,
            max_edges,
            seed,
            trials,
        } => {
            let c = load(&coeffs, io::parse_coefficients)?;
            let report = verify_if(&c, max_edges, trials, seed)?;
            Ok(report_outcome(&report))
        }
        Command::VerifyOnlyIf {
            poly,
            max_edges,
            blowup,
            seed,
        } => {
            let f = load(&poly, io::parse_polynomial)?;
            let report = verify_only_if(&f, max_edges, blowup, seed)?;
            Ok(report_outcome(&report))
        }
        Command::DemoL1 {
            target,
            graph,
            sizes,
        } => {
            let target = CatalogTarget::parse(&target)?;
            let h = load(&graph, Multigraph::from_text)?;
            let rows = l1_density_demo(&target, &h, &sizes)?;
            let summary = match rows.last().and_then(|r| r.gap.as_ref()) {
                Some(gap) => format!(
                    "gap {} at n = {}",
                    format_rational(gap),
                    rows.last().unwrap().n
                ),
                None => "no closed form for this graph".to_string(),
            };
            Ok(Outcome::success(
                io::write_demo(&target, &h, &rows),
                summary,
            ))
        }
    }
}

fn report_outcome(report: &graphon_calculus::harness::TheoremReport) -> Outcome {
    let summary = match &report.reason {
        Some(reason) => format!("{}: {reason}", report.verdict.name()),
        None => report.verdict.name().to_string(),
    };
    Outcome {
        stdout: io::write_report(report),
        summary,
        ok: report.is_verified(),
    }
}

fn derive(args: DeriveArgs) -> Result<Outcome, Failure> {
    let f = load(&args.poly, io::parse_polynomial)?;
    let a = load(&args.matrix, io::parse_matrix)?;
    let directions: Vec<RationalDirection> = match args.order {
        Some(order) => {
            let seed = args.seed.expect("clap enforces --seed with --order");
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..order)
                .map(|_| random_direction_with(a.size(), &mut rng))
                .collect()
        }
        None => args
            .direction
            .iter()
            .map(|p| load(p, io::parse_direction))
            .collect::<Result<_, _>>()?,
    };
    let req = DerivativeRequest::new(a, directions)?;
    let exact = gateaux_exact(&f, &req)?;
    let fd = match &args.step {
        Some(text) => {
            let step: Rational = parse_rational(text)
                .ok_or_else(|| Failure(format!("--step: `{text}` is not a rational")))?;
            Some(gateaux_fd(
                |b| f.evaluate(b).expect("sizes agree"),
                &req,
                step,
            )?)
        }
        None => None,
    };
    let mut summary = format!(
        "order-{} derivative {}",
        req.order(),
        format_rational(&exact.value)
    );
    if !exact.admissible {
        summary.push_str(" (some direction is not admissible at the base point)");
    }
    Ok(Outcome::success(
        io::write_derivative(req.order(), &exact, fd.as_ref()),
        summary,
    ))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(outcome) => {
            if let Some(path) = &cli.out {
                if let Err(e) = fs::write(path, &outcome.stdout) {
                    eprintln!("error: {}: {e}", path.display());
                    return ExitCode::from(1);
                }
            } else {
                print!("{}", outcome.stdout);
            }
            eprintln!("{}", outcome.summary);
            if outcome.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}
