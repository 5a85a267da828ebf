use clap::{Parser, Subcommand, ValueEnum};
use hexatile::closed_forms::{fixed_count, proportion, total_count, AsymptoticParams};
use hexatile::hexagon::{build_region, normalize, HexagonSpec, RegionKind};
use hexatile::oracle::{Enumerator, DEFAULT_CELL_LIMIT};
use hexatile::sweep::{emit, parse_n_list, sweep, SweepFormat};
use hexatile::verify::{run_suite, Bounds, Suite};
use std::process::ExitCode;

/// Exact rhombus tiling counts for hexagons with sides A, M, A, A, M, A.
#[derive(Parser)]
#[command(name = "hexatile", version)]
struct Cli {
    /// Largest region (in unit triangles) the brute-force enumerator accepts.
    #[arg(long, global = true, default_value_t = DEFAULT_CELL_LIMIT)]
    max_cells: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Total number of tilings.
    Count {
        #[arg(long, num_args = 2, value_names = ["A", "M"])]
        sides: Vec<u32>,
    },
    /// Tilings containing the l-th rhombus on the symmetry axis.
    Fixed {
        #[arg(long, num_args = 2, value_names = ["A", "M"])]
        sides: Vec<u32>,
        #[arg(long)]
        l: u32,
        #[arg(long)]
        json: bool,
    },
    /// Run a cross-check suite; exits with 1 if any case fails.
    Verify {
        #[arg(long)]
        suite: Suite,
        #[arg(long)]
        max_n: Option<u32>,
        #[arg(long)]
        max_m: Option<u32>,
        #[arg(long)]
        max_a: Option<u32>,
        /// Print only failing cases and the summary.
        #[arg(long)]
        quiet: bool,
    },
    /// Exact proportions against the arcsine limit for m ~ aN, l ~ bN.
    Sweep {
        #[arg(long)]
        a: f64,
        #[arg(long)]
        b: f64,
        /// Comma list `10,20,30` or range `start:end:step`.
        #[arg(long = "n")]
        n_list: String,
        #[arg(long, default_value = "csv")]
        format: SweepFormat,
    },
    /// Dump the cells of the hexagon or one of its halves.
    Region {
        #[arg(long, num_args = 2, value_names = ["A", "M"])]
        sides: Vec<u32>,
        #[arg(long, value_enum, default_value_t = KindArg::Full)]
        kind: KindArg,
        #[arg(long)]
        l: Option<u32>,
    },
    /// Dump every tiling of the hexagon by brute force.
    Tilings {
        #[arg(long, num_args = 2, value_names = ["A", "M"])]
        sides: Vec<u32>,
        /// Keep only tilings containing this axis rhombus.
        #[arg(long)]
        l: Option<u32>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Full,
    UpperPrime,
    Upper,
    Lower,
}

impl From<KindArg> for RegionKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Full => RegionKind::FullHexagon,
            KindArg::UpperPrime => RegionKind::UpperPrime,
            KindArg::Upper => RegionKind::UpperTrimmed,
            KindArg::Lower => RegionKind::Lower,
        }
    }
}

enum Failure {
    Usage(String),
    Verification,
}

impl From<hexatile::Error> for Failure {
    fn from(e: hexatile::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn hexagon(sides: &[u32]) -> hexatile::Result<HexagonSpec> {
    HexagonSpec::new(sides[0], sides[1])
}

fn run(cli: Cli) -> Result<(), Failure> {
    let oracle = Enumerator::with_limit(cli.max_cells);
    match cli.command {
        Command::Count { sides } => println!("{}", total_count(hexagon(&sides)?)),
        Command::Fixed { sides, l, json } => {
            let spec = hexagon(&sides)?;
            let params = normalize(spec);
            let axis = params.axis(l)?;
            let total = total_count(spec);
            let fixed = fixed_count(&params, axis)?;
            let ratio = proportion(&params, axis)?;
            if json {
                let v = serde_json::json!({
                    "total": total.to_string(),
                    "fixed": fixed.to_string(),
                    "proportion": ratio.to_string(),
                });
                println!("{v}");
            } else {
                println!("total {total}\nfixed {fixed}\nproportion {ratio}");
            }
        }
        Command::Verify {
            suite,
            max_n,
            max_m,
            max_a,
            quiet,
        } => {
            let bounds = Bounds {
                max_n,
                max_m,
                max_a,
                max_cells: Some(cli.max_cells),
            };
            let report = run_suite(suite, &bounds, &mut |case| {
                if !quiet || !matches!(case.outcome, hexatile::verify::Outcome::Pass) {
                    println!("{case}");
                }
            });
            println!("{}", report.summary());
            if !report.ok() {
                return Err(Failure::Verification);
            }
        }
        Command::Sweep {
            a,
            b,
            n_list,
            format,
        } => {
            let ap = AsymptoticParams::new(a, b)?;
            let rows = sweep(ap, &parse_n_list(&n_list)?)?;
            print!("{}", emit(&rows, format)?);
        }
        Command::Region { sides, kind, l } => {
            let params = normalize(hexagon(&sides)?);
            let axis = l.map(|l| params.axis(l)).transpose()?;
            print!(
                "{}",
                build_region(params, kind.into(), axis)?.to_cell_list()
            );
        }
        Command::Tilings { sides, l } => {
            let spec = hexagon(&sides)?;
            let params = normalize(spec);
            let axis = l.map(|l| params.axis(l)).transpose()?;
            let region = build_region(params, RegionKind::FullHexagon, axis)?;
            let mut shown = 0usize;
            for tiling in oracle.enumerate_tilings(&region)? {
                if region.marked.is_some_and(|(p, q)| !tiling.contains(p, q)) {
                    continue;
                }
                shown += 1;
                println!("# tiling {shown}");
                print!("{}", tiling.to_text());
            }
            eprintln!("{shown} tilings");
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
