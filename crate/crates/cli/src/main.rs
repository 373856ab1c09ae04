use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use naivetri::hull::{purple_from_colors, HullLoop};
use naivetri::{
    exhaust_grid, fuzz_axioms, generate_points, parse_point_file, render_point_file, render_svg, verify_all,
    verify_mesh, verify_steps, Document, Error, Point, PointTable, Triangulation, VerificationReport, VerifyOptions,
};

#[derive(Parser)]
#[command(name = "naivetri", version, about = "Naive incremental triangulation with exact predicates")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Triangulate a point file and write the document.
    Triangulate {
        #[arg(long)]
        input: PathBuf,
        /// Document path; standard output if omitted.
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Triangulate a point file and run every correctness check.
    Verify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Check this document against the input instead of triangulating.
        #[arg(long, value_name = "PATH")]
        check_document: Option<PathBuf>,
        /// Run the checks after every insertion step.
        #[arg(long, conflicts_with = "check_document")]
        steps: bool,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// Color the hull edges against a query point.
    Classify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, num_args = 2, value_names = ["X", "Y"], allow_negative_numbers = true, required = true)]
        point: Vec<i64>,
    },
    /// Fuzz the orientation axioms and the left-of-segment lemma.
    FuzzAxioms {
        #[arg(long, default_value_t = 100_000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        bound: i64,
        /// Also check every ordered 5-tuple of the grid [0, MAX]².
        #[arg(long, value_name = "MAX")]
        grid: Option<i64>,
    },
    /// Write random points in general position.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1_000_000)]
        bound: i64,
        /// Point file path; standard output if omitted.
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Summary,
}

enum Failure {
    /// I/O and parse errors, failed verification.
    Usage(String),
    Library(Error),
    /// Already reported on standard output.
    Silent,
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Usage(_) | Failure::Silent => 1,
            Failure::Library(e) if e.is_internal() => 3,
            Failure::Library(_) => 2,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Library(e)
    }
}

type CmdResult = Result<(), Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn write(path: Option<&Path>, text: &str) -> CmdResult {
    match path {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load_table(path: &Path) -> Result<PointTable, Failure> {
    let coords = parse_point_file(&read(path)?).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    Ok(PointTable::from_coords(&coords)?)
}

fn triangulate(input: &Path, output: Option<&Path>, svg: Option<&Path>) -> CmdResult {
    let table = load_table(input)?;
    let t = Triangulation::triangulate(&table)?;
    write(output, &Document::from_triangulation(&table, &t)?.render())?;
    if let Some(svg) = svg {
        write(Some(svg), &render_svg(&table, &t)?)?;
    }
    Ok(())
}

fn print_report(report: &VerificationReport, format: ReportFormat) -> CmdResult {
    match format {
        ReportFormat::Text => print!("{}", report.render_text()),
        ReportFormat::Summary => print!("{}", report.render_summary()),
    }
    if report.overall() {
        Ok(())
    } else {
        Err(Failure::Silent)
    }
}

fn verify(input: &Path, opts: VerifyOptions, document: Option<&Path>, steps: bool, format: ReportFormat) -> CmdResult {
    let table = load_table(input)?;
    let report = match document {
        Some(path) => {
            let doc = Document::parse(&read(path)?).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            let points: Vec<[i64; 2]> = table.points().iter().map(|p| [p.x(), p.y()]).collect();
            if doc.points != points {
                return Err(Failure::Usage(format!("{}: point list differs from {}", path.display(), input.display())));
            }
            verify_mesh(&table, &doc.raw_triangles(), &doc.hull_ids(), &opts)?
        }
        None if steps => verify_steps(&table, &opts)?,
        None => verify_all(&table, &opts)?,
    };
    print_report(&report, format)
}

fn classify(input: &Path, x: i64, y: i64) -> CmdResult {
    let table = load_table(input)?;
    let d = Point::new(x, y)?;
    let t = Triangulation::triangulate(&table)?;
    if let Some(tri) = t.find_containing(&table, &d)? {
        println!("INSIDE: triangle {tri}");
        return Ok(());
    }
    let hull = HullLoop::from_triangulation(&t, &table)?;
    let colors = hull.classify_edges(&t, &table, &d)?;
    for ((a, b), color) in hull.edges().zip(&colors) {
        println!("{color} {a} {b}");
    }
    let purple = purple_from_colors(&hull, &colors)?;
    println!("p1={} p2={} n_r={}", purple.p1, purple.p2, purple.red_run);
    Ok(())
}

fn fuzz(trials: u64, seed: u64, bound: i64, grid: Option<i64>) -> CmdResult {
    let mut violations = 0;
    let report = fuzz_axioms(trials, seed, bound)?;
    println!("{report}");
    violations += report.violations();
    if let Some(max) = grid {
        let report = exhaust_grid(max)?;
        println!("grid [0, {max}]²:");
        println!("{report}");
        violations += report.violations();
    }
    if violations == 0 {
        Ok(())
    } else {
        Err(Failure::Silent)
    }
}

fn generate(n: usize, seed: u64, bound: i64, output: Option<&Path>) -> CmdResult {
    let points = generate_points(n, seed, bound)?;
    write(output, &render_point_file(&points))
}

fn run(cli: Cli) -> CmdResult {
    match cli.command {
        Command::Triangulate { input, output, svg } => triangulate(&input, output.as_deref(), svg.as_deref()),
        Command::Verify { input, samples, seed, check_document, steps, format } => {
            let opts = VerifyOptions { samples, seed, ..VerifyOptions::default() };
            verify(&input, opts, check_document.as_deref(), steps, format)
        }
        Command::Classify { input, point } => classify(&input, point[0], point[1]),
        Command::FuzzAxioms { trials, seed, bound, grid } => fuzz(trials, seed, bound, grid),
        Command::Gen { n, seed, bound, output } => generate(n, seed, bound, output.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            match &failure {
                Failure::Usage(msg) => eprintln!("error: {msg}"),
                Failure::Library(e) => eprintln!("error: {e}"),
                Failure::Silent => {}
            }
            ExitCode::from(failure.exit_code())
        }
    }
}
