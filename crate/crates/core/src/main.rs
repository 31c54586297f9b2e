use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use distinct_triangles::commands::{
    cmd_classify, cmd_count, cmd_ngon, cmd_search, Format, Report, SearchGoal,
};
use distinct_triangles::record::RunRecord;
use distinct_triangles::svg::render_svg;
use distinct_triangles::verify::{run_suite, Suite, VerifyOptions};
use distinct_triangles::{Error, GroundKind, PointFile, SearchOptions};

#[derive(Parser)]
#[command(
    name = "dtri",
    version,
    about = "Count distinct triangles of planar point sets"
)]
struct Cli {
    #[arg(long, value_enum, global = true, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    /// Append a JSON record of this run to the given file.
    #[arg(long, global = true)]
    log: Option<PathBuf>,
    /// Seed for the randomized verification suites.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads for searches.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Count the distinct triangles of a point file.
    Count {
        file: PathBuf,
        /// List every class.
        #[arg(long)]
        classes: bool,
    },
    /// Classify four points and compare with the case bound.
    Classify { file: PathBuf },
    /// Partitions of n into three parts against round(n^2/12).
    Ngon {
        n: u64,
        #[arg(long)]
        list: bool,
    },
    /// Search a ground set for subsets with few triangles.
    Search(SearchArgs),
    /// Run a verification suite: lemma, theorem1, theorem2 or conjectures.
    Verify { suite: String },
    /// Draw a point file as SVG.
    Render {
        file: PathBuf,
        /// Output path; standard output when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
#[command(group(clap::ArgGroup::new("ground").required(true).args(["grid", "circle", "lattice"])))]
#[command(group(clap::ArgGroup::new("goal").required(true).args(["n", "exactly"])))]
struct SearchArgs {
    /// k x k integer grid.
    #[arg(long, value_name = "K")]
    grid: Option<usize>,
    /// D equally spaced points on a circle.
    #[arg(long, value_name = "D")]
    circle: Option<usize>,
    /// Add the circle's center (with --circle).
    #[arg(long, requires = "circle")]
    center: bool,
    /// Triangular lattice points of norm at most r^2.
    #[arg(long, value_name = "R")]
    lattice: Option<usize>,
    /// Subset size to minimize over.
    #[arg(long)]
    n: Option<usize>,
    /// Find the largest subset with exactly this many classes.
    #[arg(long, value_name = "T")]
    exactly: Option<usize>,
    /// Stop after this many search nodes.
    #[arg(long)]
    budget: Option<u64>,
    /// Ignore subsets whose points are all collinear.
    #[arg(long)]
    noncollinear: bool,
    /// Maximum number of witnesses to report.
    #[arg(long, default_value_t = 4)]
    witnesses: usize,
}

impl SearchArgs {
    fn kind(&self) -> GroundKind {
        match (self.grid, self.circle, self.lattice) {
            (Some(k), _, _) => GroundKind::RationalGrid { k },
            (_, Some(d), _) => GroundKind::CircleDivisions {
                d,
                with_center: self.center,
            },
            (_, _, Some(r)) => GroundKind::EisensteinBall { r },
            _ => unreachable!("clap requires a ground"),
        }
    }

    fn goal(&self) -> SearchGoal {
        match (self.n, self.exactly) {
            (Some(n), _) => SearchGoal::Size(n),
            (_, Some(t)) => SearchGoal::Exactly(t),
            _ => unreachable!("clap requires a goal"),
        }
    }
}

/// What a command produced: text for stdout, the logged payload and the
/// exit code.
struct Outcome {
    stdout: String,
    name: &'static str,
    params: Value,
    result: Value,
    code: u8,
}

fn read_points(path: &Path) -> Result<PointFile, Error> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    PointFile::parse(&text)
}

fn report<R: Report>(r: &R, format: Format, params: Value, code: u8) -> Outcome {
    Outcome {
        stdout: r.render(format),
        name: R::COMMAND,
        params,
        result: r.json(),
        code,
    }
}

fn run(cli: &Cli) -> Result<Outcome, Error> {
    let format = match cli.format {
        OutputFormat::Text => Format::Text,
        OutputFormat::Json => Format::Json,
    };
    match &cli.command {
        Command::Count { file, classes } => {
            let r = cmd_count(&read_points(file)?, *classes)?;
            Ok(report(
                &r,
                format,
                json!({"file": file, "classes": classes}),
                0,
            ))
        }
        Command::Classify { file } => {
            let r = cmd_classify(&read_points(file)?)?;
            Ok(report(&r, format, json!({"file": file}), 0))
        }
        Command::Ngon { n, list } => {
            let r = cmd_ngon(*n, *list)?;
            Ok(report(&r, format, json!({"n": n, "list": list}), 0))
        }
        Command::Search(args) => {
            let opts = SearchOptions {
                budget: args.budget,
                max_witnesses: args.witnesses,
                prune: true,
                jobs: cli.jobs.max(1),
                noncollinear_only: args.noncollinear,
            };
            let r = cmd_search(args.kind(), args.goal(), &opts)?;
            let params = json!({
                "ground": args.kind(),
                "n": args.n,
                "exactly": args.exactly,
                "budget": args.budget,
                "witnesses": args.witnesses,
                "noncollinear": args.noncollinear,
                "jobs": opts.jobs,
            });
            Ok(report(&r, format, params, 0))
        }
        Command::Verify { suite } => {
            let suite: Suite = suite.parse()?;
            let opts = VerifyOptions {
                seed: cli.seed,
                jobs: cli.jobs.max(1),
                ..VerifyOptions::default()
            };
            let r = run_suite(suite, &opts)?;
            let code = if r.passed { 0 } else { 1 };
            let params = json!({"suite": suite, "seed": cli.seed, "jobs": opts.jobs});
            Ok(report(&r, format, params, code))
        }
        Command::Render { file, output } => {
            let f = read_points(file)?;
            let svg = render_svg(&f)?;
            let result = json!({"points": f.len(), "bytes": svg.len()});
            let stdout = match output {
                Some(path) => {
                    std::fs::write(path, &svg)
                        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
                    String::new()
                }
                None => svg,
            };
            Ok(Outcome {
                stdout,
                name: "render",
                params: json!({"file": file, "output": output}),
                result,
                code: 0,
            })
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    if e.is_parse() {
        2
    } else {
        3
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let outcome = run(&cli);
    let elapsed = start.elapsed().as_millis() as u64;

    let (code, log_entry) = match outcome {
        Ok(o) => {
            print!("{}", o.stdout);
            (o.code, RunRecord::new(o.name, o.params, o.result, elapsed))
        }
        Err(e) => {
            eprintln!("error: {e}");
            let code = exit_code(&e);
            let rec = RunRecord::new(
                command_name(&cli.command),
                Value::Null,
                json!({"error": e.to_string(), "exit_code": code}),
                elapsed,
            );
            (code, rec)
        }
    };
    if let Some(path) = &cli.log {
        if let Err(e) = log_entry.append_to(path) {
            eprintln!("error: cannot write log: {e}");
            return ExitCode::from(3);
        }
    }
    ExitCode::from(code)
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Count { .. } => "count",
        Command::Classify { .. } => "classify",
        Command::Ngon { .. } => "ngon",
        Command::Search(_) => "search",
        Command::Verify { .. } => "verify",
        Command::Render { .. } => "render",
    }
}
