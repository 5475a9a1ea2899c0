use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use kfq::abgrp::{colimit_structure, ColimitTower, DEFAULT_CAP, DEFAULT_WINDOW};
use kfq::exactla::{BigInt, IntMatrix};
use kfq::ffield::Field;
use kfq::finmodel::{induced_iota_matrix, DEFAULT_SIZE_CAP};
use kfq::funcfield::irreducibles_normalized;
use kfq::kring::{closed_form, compare, ring_table};
use kfq::pvengine::{tower, TowerOptions};
use kfq::symcross::DEFAULT_PRECISION;
use kfq::verify::{run_suite, VerifyOptions};
use kfq::Error;

use kfq_cli::report::*;

const MAX_M: usize = 16;

#[derive(Parser)]
#[command(name = "kfq", version, about = "Exact K-theory computations for the ring C*-algebra of F_q[T]")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct Common {
    /// prime power q
    #[arg(long)]
    q: u64,
    /// stabilization cap for colimit computations
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: usize,
    /// largest finite-model dimension
    #[arg(long, default_value_t = DEFAULT_SIZE_CAP)]
    size_cap: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// write the report here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// K-groups of the tower at level m, compared with the closed form
    Kgroups {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 0)]
        m: usize,
    },
    /// Connecting matrix of the finite models at level n
    ConnectingMatrix {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 1)]
        n: usize,
    },
    /// Exact identity checks on the named elements
    Verify {
        #[command(flatten)]
        common: Common,
        /// truncation precision N
        #[arg(long, default_value_t = DEFAULT_PRECISION)]
        precision: usize,
        /// number of irreducibles for the invariance checks
        #[arg(long, default_value_t = 5)]
        irreducibles: usize,
        /// finite-model levels for the partial isometry checks
        #[arg(long, default_value_t = 2)]
        mvn_levels: usize,
        /// negative control: perturb w_chi so unitarity must fail
        #[arg(long)]
        corrupt_w: bool,
    },
    /// First m irreducibles f_1, ..., f_m in canonical order
    Irreducibles {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 5)]
        m: usize,
    },
    /// Colimit of Z^r -A-> Z^r -A-> ... and the level-n images
    Colimit {
        #[command(flatten)]
        common: Common,
        /// level whose basis images are listed
        #[arg(long, default_value_t = 1)]
        n: usize,
        /// rows separated by ';', entries by ','; default: the finite-model connecting matrix
        #[arg(long)]
        matrix: Option<String>,
    },
    /// Multiplication table of basis classes with short words
    RingTable {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 1)]
        m: usize,
        /// longest exterior word included
        #[arg(long, default_value_t = 2)]
        max_len: usize,
    },
}

enum Failure {
    Invalid(String),
    Cap(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::StabilizationCap { .. } | Error::SizeCapExceeded { .. } => Failure::Cap(e.to_string()),
            _ => Failure::Invalid(e.to_string()),
        }
    }
}

struct Output {
    text: String,
    json: String,
    ok: bool,
}

fn output<T: Serialize>(report: &T, text: String, ok: bool) -> Output {
    Output { text, json: serde_json::to_string_pretty(report).expect("reports serialize"), ok }
}

fn ms(start: Instant) -> u64 {
    start.elapsed().as_millis() as u64
}

fn check_q(q: u64) -> Result<Field, Failure> {
    Ok(Field::with_order(q)?)
}

fn show_matrix(a: &IntMatrix) -> Vec<Vec<String>> {
    (0..a.rows()).map(|i| a.row(i).iter().map(ToString::to_string).collect()).collect()
}

fn text_matrix(rows: &[Vec<String>]) -> String {
    let inner: Vec<String> = rows.iter().map(|r| format!("[{}]", r.join(", "))).collect();
    format!("[{}]", inner.join(", "))
}

fn kgroups(c: &Common, m: usize) -> Result<Output, Failure> {
    let start = Instant::now();
    check_q(c.q)?;
    if m > MAX_M {
        return Err(Failure::Invalid(format!("m = {m} exceeds the supported maximum {MAX_M}")));
    }
    let opts = TowerOptions { window: DEFAULT_WINDOW, cap: c.cap, size_cap: c.size_cap };
    let run = tower(c.q, m, opts)?;
    let top = run.top();
    let cmp = compare(top, &closed_form(c.q, m)?);
    let (r0, r1) = top.ranks();
    let generators: Vec<Generator> = (0..2).flat_map(|d| top.ledger(d).iter().map(Generator::from_symbol)).collect();
    let report = KGroupReport {
        q: c.q,
        m,
        degrees: vec![
            DegreeReport { degree: 0, rank: r0, torsion: Vec::new() },
            DegreeReport { degree: 1, rank: r1, torsion: Vec::new() },
        ],
        generators,
        comparison: cmp.clone(),
        connecting_source: format!("{:?}", run.connecting_source),
        elapsed_ms: ms(start),
    };
    let mut t = String::new();
    writeln!(t, "q = {}, m = {m}", c.q).unwrap();
    writeln!(t, "K0: Z^{r0}").unwrap();
    writeln!(t, "K1: Z^{r1}").unwrap();
    for d in 0..2 {
        for g in report.generators.iter().filter(|g| g.degree == d) {
            writeln!(t, "  K{d} {}", g.label).unwrap();
        }
    }
    let status = if cmp.success { "success" } else { "FAILURE" };
    writeln!(t, "closed form comparison: {status}").unwrap();
    for u in cmp.unmatched_tower.iter().chain(&cmp.unmatched_closed) {
        writeln!(t, "  unmatched {u}").unwrap();
    }
    Ok(output(&report, t, cmp.success))
}

fn connecting(c: &Common, n: usize) -> Result<Output, Failure> {
    let start = Instant::now();
    check_q(c.q)?;
    let a = induced_iota_matrix(c.q, n, c.size_cap)?;
    let r = (c.q - 1) as usize;
    let expected = IntMatrix::from_rows((0..r).map(|i| (0..r).map(|j| BigInt::from(1 + i64::from(i == j))).collect()).collect());
    let pass = a == expected;
    let report = ConnectingReport { q: c.q, n, matrix: show_matrix(&a), pass, elapsed_ms: ms(start) };
    let text = format!("{}\n{} (against I + J of size {r})\n", text_matrix(&report.matrix), if pass { "PASS" } else { "FAIL" });
    Ok(output(&report, text, pass))
}

fn verify(c: &Common, precision: usize, irreducibles: usize, mvn_levels: usize, corrupt_w: bool) -> Result<Output, Failure> {
    let start = Instant::now();
    check_q(c.q)?;
    if precision == 0 {
        return Err(Failure::Invalid("precision must be at least 1".into()));
    }
    let opts = VerifyOptions { precision, irreducibles, mvn_levels, size_cap: c.size_cap, corrupt_w };
    let checks = run_suite(c.q, &opts)?;
    let passed = checks.iter().all(|x| x.passed);
    let mut t = String::new();
    for x in &checks {
        let tag = if x.passed { "PASS" } else { "FAIL" };
        match &x.detail {
            Some(d) => writeln!(t, "{tag} {} ({d})", x.name).unwrap(),
            None => writeln!(t, "{tag} {}", x.name).unwrap(),
        }
    }
    let failed = checks.iter().filter(|x| !x.passed).count();
    writeln!(t, "{} checks, {failed} failed", checks.len()).unwrap();
    let report = VerifyReport { q: c.q, precision, corrupted: corrupt_w, passed, checks, elapsed_ms: ms(start) };
    Ok(output(&report, t, passed))
}

fn irreducibles(c: &Common, m: usize) -> Result<Output, Failure> {
    let f = check_q(c.q)?;
    let list: Vec<String> = irreducibles_normalized(&f, m).iter().map(|p| p.display(&f).to_string()).collect();
    let mut t = String::new();
    for (i, p) in list.iter().enumerate() {
        writeln!(t, "f_{} = {p}", i + 1).unwrap();
    }
    let report = IrreduciblesReport { q: c.q, count: m, irreducibles: list };
    Ok(output(&report, t, true))
}

fn parse_matrix(s: &str) -> Result<IntMatrix, Failure> {
    let rows: Vec<Vec<i64>> = s
        .split(';')
        .map(|r| r.split(',').map(|x| x.trim().parse::<i64>()).collect::<Result<Vec<_>, _>>())
        .collect::<Result<_, _>>()
        .map_err(|e| Failure::Invalid(format!("bad matrix entry: {e}")))?;
    if rows.is_empty() || rows.iter().any(|r| r.len() != rows[0].len()) {
        return Err(Failure::Invalid("matrix rows differ in length".into()));
    }
    Ok(IntMatrix::from_i64_rows(&rows))
}

fn colimit(c: &Common, n: usize, matrix: Option<&str>) -> Result<Output, Failure> {
    check_q(c.q)?;
    let a = match matrix {
        Some(s) => parse_matrix(s)?,
        None => induced_iota_matrix(c.q, 1, c.size_cap)?,
    };
    let col = colimit_structure(&ColimitTower::new(a.clone(), c.q)?, DEFAULT_WINDOW, c.cap)?;
    let s = col.summary();
    let images = (0..a.rows())
        .map(|i| Ok(LevelImage { basis: i, coords: col.iota_image(n, i)?.iter().map(ToString::to_string).collect() }))
        .collect::<Result<Vec<_>, Error>>()?;
    let report = ColimitReport {
        q: c.q,
        matrix: show_matrix(&a),
        divisible_rank: s.divisible_rank,
        lattice_rank: s.lattice_rank,
        divisible_generators: s.divisible_generators,
        lattice_generators: s.lattice_generators,
        level: n,
        images,
    };
    let mut t = String::new();
    writeln!(t, "A = {}", text_matrix(&report.matrix)).unwrap();
    writeln!(t, "colimit: Z[1/{}]^{} + Z^{}", c.q, report.divisible_rank, report.lattice_rank).unwrap();
    for g in &report.divisible_generators {
        writeln!(t, "  divisible ({})", g.join(", ")).unwrap();
    }
    for g in &report.lattice_generators {
        writeln!(t, "  lattice   ({})", g.join(", ")).unwrap();
    }
    for im in &report.images {
        writeln!(t, "iota_{n}(e_{}) = ({})", im.basis, im.coords.join(", ")).unwrap();
    }
    Ok(output(&report, t, true))
}

fn ring(c: &Common, m: usize, max_len: usize) -> Result<Output, Failure> {
    check_q(c.q)?;
    if m > 8 {
        return Err(Failure::Invalid("ring-table supports m <= 8".into()));
    }
    let entries = ring_table(c.q, m, max_len)?;
    let mut t = String::new();
    for e in &entries {
        writeln!(t, "{} * {} = {}", e.left, e.right, e.product).unwrap();
    }
    let report = RingTableReport { q: c.q, m, max_len, entries };
    Ok(output(&report, t, true))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (common, result) = match &cli.command {
        Command::Kgroups { common, m } => (common, kgroups(common, *m)),
        Command::ConnectingMatrix { common, n } => (common, connecting(common, *n)),
        Command::Verify { common, precision, irreducibles, mvn_levels, corrupt_w } => {
            (common, verify(common, *precision, *irreducibles, *mvn_levels, *corrupt_w))
        }
        Command::Irreducibles { common, m } => (common, irreducibles(common, *m)),
        Command::Colimit { common, n, matrix } => (common, colimit(common, *n, matrix.as_deref())),
        Command::RingTable { common, m, max_len } => (common, ring(common, *m, *max_len)),
    };
    let out = match result {
        Ok(o) => o,
        Err(Failure::Invalid(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
        Err(Failure::Cap(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(3);
        }
    };
    let body = match common.format {
        Format::Text => out.text,
        Format::Json => out.json + "\n",
    };
    match &common.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, body) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{body}"),
    }
    if out.ok { ExitCode::SUCCESS } else { ExitCode::from(1) }
}
