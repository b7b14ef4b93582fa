//! `agcodec`: construct codes, encode, decode, simulate and inspect bases.

mod arrayfile;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use agcodec_core::bms::BmsError;
use agcodec_core::codec::{encode, encode_systematic_extended, syndromes};
use agcodec_core::sim::{run_trial, Outcome, Summary, Trial};
use agcodec_core::{
    bms_with_voting, decode, Array2D, BivariatePoly, CodeKind, CodeSpec, CodecError, CurveSpec, Elt, Field,
    GroebnerBasis, Mode, PartialArray,
};
use clap::{Args, Parser, Subcommand, ValueEnum};

use arrayfile::ArrayFile;

const AFTER_HELP: &str = "\
Array files hold q-1 rows of q-1 integers in log notation: -1 is zero and k is a^k.
Row index is the x-log, column index the y-log. A code symbol at the point
(a^i, a^j) sits in row i, column j; Reed-Solomon symbols sit in column 0.
Lines starting with '#' are comments. Extended words append zero-point values
as '(xlog, ylog): vlog' lines.

Information placement:
  nonsystematic  at the cells of the defining set outside Phi_m
  systematic     at the cells of the information points

Exit codes: 0 ok, 2 usage or input, 3 construction failure, 4 decoding failure.
On failure the first token written is the reason code.";

#[derive(Parser)]
#[command(name = "agcodec", version, about = "Fourier-domain codec for algebraic-geometry, HCRS and RS codes", after_help = AFTER_HELP)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a code and print its parameters.
    Info {
        #[command(flatten)]
        code: CodeArgs,
        /// Write the constructed code to this file for later `--spec` use.
        #[arg(long)]
        save: Option<PathBuf>,
    },
    /// Encode an information array.
    Encode {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long, value_enum, default_value_t = ModeArg::Systematic)]
        mode: ModeArg,
        /// Also encode the zero-coordinate points, whose information is read
        /// from the trailer. Systematic mode only.
        #[arg(long)]
        extended: bool,
        #[arg(long = "in")]
        input: PathBuf,
        /// Output codeword; `<out>.check` receives the Phi_m syndromes.
        #[arg(long)]
        out: PathBuf,
    },
    /// Correct a received word.
    Decode {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long, value_enum, default_value_t = ModeArg::Systematic)]
        mode: ModeArg,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        info_out: Option<PathBuf>,
    },
    /// Run random-error decoding trials.
    Simulate {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long, value_enum, default_value_t = ModeArg::Systematic)]
        mode: ModeArg,
        /// Errors per trial.
        #[arg(long)]
        errors: usize,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        /// Trial i draws from a generator seeded with seed + i.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write per-trial rows here instead of stdout.
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Worker threads; results do not depend on it.
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Print a Gröbner basis.
    Groebner {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long, value_enum)]
        ideal: Ideal,
        /// Array whose values on Phi_m are the syndromes (`errors` ideal).
        #[arg(long, conflicts_with = "received")]
        syndromes: Option<PathBuf>,
        /// Received word whose syndromes are used (`errors` ideal).
        #[arg(long)]
        received: Option<PathBuf>,
    },
}

#[derive(Args)]
struct CodeArgs {
    /// Code file written by `info --save`.
    #[arg(long, conflicts_with_all = ["preset", "field", "kind"])]
    spec: Option<PathBuf>,
    /// hermitian-q9, hcrs-q9 or rs-q9.
    #[arg(long, conflicts_with_all = ["field", "kind"])]
    preset: Option<String>,
    /// Custom field as p,m,c0,c1,...,cm (primitive polynomial, low degree first).
    #[arg(long, requires = "kind")]
    field: Option<String>,
    #[arg(long, value_enum, requires_all = ["field", "m"])]
    kind: Option<KindArg>,
    /// Design parameter: m for curves and HCRS, the redundancy for RS.
    #[arg(long)]
    m: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Hermitian,
    Hcrs,
    Rs,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Systematic,
    Nonsystematic,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Systematic => Mode::Systematic,
            ModeArg::Nonsystematic => Mode::Nonsystematic,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Ideal {
    Wp,
    All,
    Errors,
}

/// A failure: exit code and a message led by its reason code.
#[derive(Debug)]
struct Fail {
    code: u8,
    message: String,
}

impl Fail {
    fn usage(reason: &str, detail: impl std::fmt::Display) -> Fail {
        Fail { code: 2, message: format!("{reason}: {detail}") }
    }
}

impl From<CodecError> for Fail {
    fn from(e: CodecError) -> Fail {
        let code = match &e {
            CodecError::NonGenericSupport
            | CodecError::RankDeficient
            | CodecError::NotAZeroPoint(_)
            | CodecError::EncodingInvariant(_) => 3,
            CodecError::DecodingFailure(_) | CodecError::Bms(BmsError::DecodingFailure(_)) => 4,
            CodecError::Bms(BmsError::ZeroCoordinatePoint(_) | BmsError::IncompleteCover(_)) => 3,
            _ => 2,
        };
        Fail { code, message: e.to_string() }
    }
}

impl From<BmsError> for Fail {
    fn from(e: BmsError) -> Fail {
        CodecError::from(e).into()
    }
}

fn read(path: &Path) -> Result<String, Fail> {
    std::fs::read_to_string(path).map_err(|e| Fail::usage("IoError", format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Fail> {
    std::fs::write(path, text).map_err(|e| Fail::usage("IoError", format!("{}: {e}", path.display())))
}

fn read_array(path: &Path, field: &Field) -> Result<ArrayFile, Fail> {
    ArrayFile::parse(&read(path)?, field).map_err(|e| Fail::usage("BadArrayFile", format!("{}: {e}", path.display())))
}

fn parse_field(text: &str) -> Result<Field, Fail> {
    let nums = text
        .split(',')
        .map(|t| t.trim().parse::<u32>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| Fail::usage("BadField", format!("'{text}' is not a comma-separated list of integers")))?;
    if nums.len() < 3 {
        return Err(Fail::usage("BadField", "expected p,m,c0,...,cm"));
    }
    Field::new(nums[0], nums[1], &nums[2..]).map_err(|e| CodecError::from(e).into())
}

fn load_code(args: &CodeArgs) -> Result<CodeSpec, Fail> {
    if let Some(path) = &args.spec {
        if args.m.is_some() {
            return Err(Fail::usage("UsageError", "--m cannot override a saved code"));
        }
        return Ok(CodeSpec::from_text(&read(path)?)?);
    }
    if let Some(name) = &args.preset {
        return Ok(CodeSpec::preset(name, args.m)?);
    }
    let (Some(field), Some(kind), Some(m)) = (&args.field, args.kind, args.m) else {
        return Err(Fail::usage("UsageError", "give --spec, --preset, or --field with --kind and --m"));
    };
    let field = parse_field(field)?;
    let kind = match kind {
        KindArg::Hermitian => CodeKind::Curve { curve: CurveSpec::hermitian(&field).map_err(CodecError::from)?, m },
        KindArg::Hcrs => CodeKind::Hcrs { m },
        KindArg::Rs => CodeKind::Rs { redundancy: m },
    };
    Ok(CodeSpec::new(field, kind)?)
}

fn cell_list(cells: impl IntoIterator<Item = (usize, usize)>) -> String {
    cells.into_iter().map(|(i, j)| format!("({i},{j})")).collect::<Vec<_>>().join(" ")
}

fn basis_summary(out: &mut String, name: &str, basis: &GroebnerBasis) {
    let order = basis.order();
    writeln!(
        out,
        "basis {name}: elements={} staircase={} leading={}",
        basis.elements().len(),
        basis.delta_set().len(),
        cell_list(basis.leading_cells())
    )
    .unwrap();
    for g in basis.elements() {
        writeln!(out, "  {}", g.display(order)).unwrap();
    }
}

fn cmd_info(code: &CodeArgs, save: Option<&Path>) -> Result<String, Fail> {
    let spec = load_code(code)?;
    let f = spec.field();
    let mut out = String::new();
    writeln!(
        out,
        "OK kind={} n={} k={} t={} phi_m={}",
        spec.kind().name(),
        spec.n(),
        spec.k(),
        spec.capability(),
        spec.phi_m().len()
    )
    .unwrap();
    let poly: Vec<String> = f.primitive_poly().iter().map(u32::to_string).collect();
    writeln!(out, "field p={} m={} poly={}", f.p(), f.m(), poly.join(",")).unwrap();
    match spec.kind() {
        CodeKind::Curve { curve, m } => {
            writeln!(out, "curve {} = 0 genus={} m={m}", curve.poly().display(&curve.order()), curve.genus()).unwrap()
        }
        CodeKind::Hcrs { m } => writeln!(out, "hcrs m={m}").unwrap(),
        CodeKind::Rs { redundancy } => writeln!(out, "rs redundancy={redundancy}").unwrap(),
    }
    writeln!(out, "phi_m {}", cell_list(spec.phi_m().iter())).unwrap();
    let cells = |idx: &[usize]| cell_list(idx.iter().map(|&k| spec.points()[k].cell().expect("code point")));
    writeln!(out, "wp {}", cells(spec.wp())).unwrap();
    writeln!(out, "wp' {}", cells(spec.wp_prime())).unwrap();
    if !spec.zero_points().is_empty() {
        let zs: Vec<String> = spec.zero_points().iter().map(|p| format!("({},{})", p.x.log(), p.y.log())).collect();
        writeln!(out, "zero points {}", zs.join(" ")).unwrap();
    }
    basis_summary(&mut out, "wp", spec.basis_wp());
    basis_summary(&mut out, "all", spec.basis_all());
    if let Some(path) = save {
        write(path, &spec.to_text())?;
    }
    Ok(out)
}

fn word_to_grid(spec: &CodeSpec, word: &[Elt]) -> Array2D {
    let mut grid = Array2D::for_field(spec.field());
    for (p, &v) in spec.points().iter().zip(word) {
        grid[p.cell().expect("code point")] = v;
    }
    grid
}

/// Reads the values at `carriers`; every other cell must be zero.
fn gather(grid: &Array2D, carriers: &[(usize, usize)], what: &str) -> Result<Vec<Elt>, Fail> {
    if let Some(c) = grid.cells().find(|c| !grid[*c].is_zero() && !carriers.contains(c)) {
        return Err(Fail::usage("BadInput", format!("{what} has a nonzero value at {c:?}, which carries no symbol")));
    }
    Ok(carriers.iter().map(|&c| grid[c]).collect())
}

fn info_cells(spec: &CodeSpec, mode: Mode) -> Vec<(usize, usize)> {
    match mode {
        Mode::Nonsystematic => spec.info_cells().to_vec(),
        Mode::Systematic => spec.wp_prime().iter().map(|&k| spec.points()[k].cell().expect("code point")).collect(),
    }
}

fn point_cells(spec: &CodeSpec) -> Vec<(usize, usize)> {
    spec.points().iter().map(|p| p.cell().expect("code point")).collect()
}

fn check_file(spec: &CodeSpec, word: &[Elt]) -> Result<ArrayFile, Fail> {
    let syn = syndromes(spec, word)?;
    let mut grid = Array2D::for_field(spec.field());
    for c in spec.phi_m().iter() {
        grid[c] = syn.full[c];
    }
    Ok(ArrayFile::new(grid))
}

fn cmd_encode(code: &CodeArgs, mode: Mode, extended: bool, input: &Path, out: &Path) -> Result<String, Fail> {
    let spec = load_code(code)?;
    let file = read_array(input, spec.field())?;
    let mut info = gather(&file.grid, &info_cells(&spec, mode), "information array")?;
    let mut result = ArrayFile::new(Array2D::for_field(spec.field()));
    let word = if extended {
        if mode != Mode::Systematic {
            return Err(Fail::usage("UsageError", "--extended requires systematic mode"));
        }
        if spec.zero_points().is_empty() {
            return Err(Fail::usage("UsageError", "this code has no zero-coordinate points"));
        }
        for (p, _) in &file.trailer {
            if !spec.zero_points().contains(p) {
                return Err(CodecError::NotAZeroPoint(*p).into());
            }
        }
        for z in spec.zero_points() {
            info.push(file.trailer.iter().find(|(p, _)| p == z).map_or(Elt::ZERO, |&(_, v)| v));
        }
        let full = encode_systematic_extended(&spec, &info)?;
        let (body, tail) = full.split_at(spec.n());
        result.trailer = spec.zero_points().iter().copied().zip(tail.iter().copied()).collect();
        body.to_vec()
    } else {
        if !file.trailer.is_empty() {
            return Err(Fail::usage("BadInput", "trailer values need --extended"));
        }
        encode(&spec, mode, &info)?
    };
    result.grid = word_to_grid(&spec, &word);
    write(out, &result.render())?;
    let check = check_file(&spec, &word)?;
    let mut check_path = out.as_os_str().to_owned();
    check_path.push(".check");
    write(Path::new(&check_path), &check.render())?;
    Ok(format!("OK n={} k={}\n", spec.n(), spec.k()))
}

fn cmd_decode(code: &CodeArgs, mode: Mode, input: &Path, out: &Path, info_out: Option<&Path>) -> Result<String, Fail> {
    let spec = load_code(code)?;
    let file = read_array(input, spec.field())?;
    if !file.trailer.is_empty() {
        return Err(CodecError::ExtendedDecodeUnsupported.into());
    }
    let received = gather(&file.grid, &point_cells(&spec), "received word")?;
    let d = decode(&spec, mode, &received)?;
    write(out, &ArrayFile::new(word_to_grid(&spec, &d.codeword)).render())?;
    if let Some(path) = info_out {
        let mut grid = Array2D::for_field(spec.field());
        for (c, v) in info_cells(&spec, mode).into_iter().zip(&d.info) {
            grid[c] = *v;
        }
        write(path, &ArrayFile::new(grid).render())?;
    }
    let cells = cell_list(d.error_positions.iter().map(|&k| spec.points()[k].cell().expect("code point")));
    Ok(format!("OK corrected={} voted={} positions={}\n", d.error_positions.len(), d.voted, cells))
}

fn run_trials(spec: &CodeSpec, mode: Mode, t: usize, trials: u64, seed: u64, threads: usize) -> Vec<Trial> {
    let threads = threads.max(1) as u64;
    let chunk = trials.div_ceil(threads).max(1);
    std::thread::scope(|s| {
        let handles: Vec<_> = (0..trials)
            .step_by(chunk as usize)
            .map(|lo| {
                let hi = (lo + chunk).min(trials);
                s.spawn(move || (lo..hi).map(|i| run_trial(spec, mode, t, seed, i)).collect::<Vec<_>>())
            })
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("trial worker panicked")).collect()
    })
}

fn cmd_simulate(
    code: &CodeArgs,
    mode: Mode,
    t: usize,
    trials: u64,
    seed: u64,
    csv: Option<&Path>,
    threads: usize,
) -> Result<String, Fail> {
    let spec = load_code(code)?;
    if t > spec.n() {
        return Err(Fail::usage("BadErrorCount", format!("{t} errors exceed length {}", spec.n())));
    }
    let start = Instant::now();
    let results = run_trials(&spec, mode, t, trials, seed, threads);
    eprintln!("wall_ms={}", start.elapsed().as_millis());
    let s = Summary::of(&results);
    let mut out = format!(
        "OK trials={} errors={t} successes={} failures={} miscorrections={} voted={}\n",
        s.trials, s.successes, s.failures, s.miscorrections, s.voted
    );
    let mut rows = String::from("trial,errors,outcome,voted\n");
    for r in &results {
        let outcome = match r.outcome {
            Outcome::Success => "success",
            Outcome::Failure => "failure",
            Outcome::Miscorrection => "miscorrection",
        };
        writeln!(rows, "{},{},{outcome},{}", r.index, r.errors, r.voted).unwrap();
    }
    match csv {
        Some(path) => write(path, &rows)?,
        None => out.push_str(&rows),
    }
    Ok(out)
}

/// Coefficient logs laid out by exponent, as in the array files.
fn support_array(poly: &BivariatePoly) -> String {
    let (mi, mj) = poly.terms().fold((0, 0), |(a, b), ((i, j), _)| (a.max(i), b.max(j)));
    let mut out = String::new();
    for i in 0..=mi {
        let row: Vec<String> = (0..=mj).map(|j| format!("{:>2}", poly.coeff((i, j)).log())).collect();
        writeln!(out, "    {}", row.join(" ")).unwrap();
    }
    out
}

fn cmd_groebner(code: &CodeArgs, ideal: Ideal, syn: Option<&Path>, received: Option<&Path>) -> Result<String, Fail> {
    let spec = load_code(code)?;
    let f = spec.field();
    let basis = match ideal {
        Ideal::Wp => spec.basis_wp().clone(),
        Ideal::All => spec.basis_all().clone(),
        Ideal::Errors => {
            let values = match (syn, received) {
                (Some(path), _) => read_array(path, f)?.grid,
                (None, Some(path)) => {
                    let word = gather(&read_array(path, f)?.grid, &point_cells(&spec), "received word")?;
                    syndromes(&spec, &word)?.full
                }
                (None, None) => return Err(Fail::usage("UsageError", "--ideal errors needs --syndromes or --received")),
            };
            let partial = PartialArray::on(&values, spec.phi_m().clone());
            bms_with_voting(&partial, spec.domain(), spec.capability(), f)?.0
        }
    };
    let order = basis.order();
    let mut out = format!("OK elements={} staircase={}\n", basis.elements().len(), basis.delta_set().len());
    for (k, g) in basis.elements().iter().enumerate() {
        writeln!(out, "element {k}: {}", g.display(order)).unwrap();
        out.push_str(&support_array(g));
        for ((i, j), v) in g.sorted_terms(order) {
            writeln!(out, "    term {i} {j} {}", v.log()).unwrap();
        }
    }
    Ok(out)
}

fn run(cli: Cli) -> Result<String, Fail> {
    match cli.command {
        Command::Info { code, save } => cmd_info(&code, save.as_deref()),
        Command::Encode { code, mode, extended, input, out } => cmd_encode(&code, mode.into(), extended, &input, &out),
        Command::Decode { code, mode, input, out, info_out } => {
            cmd_decode(&code, mode.into(), &input, &out, info_out.as_deref())
        }
        Command::Simulate { code, mode, errors, trials, seed, csv, threads } => {
            cmd_simulate(&code, mode.into(), errors, trials, seed, csv.as_deref(), threads)
        }
        Command::Groebner { code, ideal, syndromes, received } => {
            cmd_groebner(&code, ideal, syndromes.as_deref(), received.as_deref())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let first = e.to_string().lines().next().unwrap_or("").trim_start_matches("error: ").to_string();
            eprintln!("UsageError: {first}");
            return ExitCode::from(2);
        }
    };
    match run(cli) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(fail) => {
            eprintln!("{}", fail.message);
            ExitCode::from(fail.code)
        }
    }
}
