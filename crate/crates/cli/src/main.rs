use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};

use qlie_core::builder::Gauge;
use qlie_core::export::{verify_document, ExportDocument};
use qlie_core::pipeline::{Construction, Options, Report};
use qlie_core::report::classical::{classical_rows, ClassicalOracle};
use qlie_core::report::{Check, Status};
use qlie_core::scalar::{pretty_q, RadScalar, Scalar};
use qlie_core::uq::AlgebraKind;

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const CAP_VAR: &str = "QLIE_DEGREE_CAP";

#[derive(Parser)]
#[command(name = "qlie", version, about = "Quantum Lie algebras inside U_h(g) for sl2, a2 and c2")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the basis and print its tables or write a JSON document.
    Construct {
        algebra: AlgebraKind,
        #[arg(long, default_value = "paper")]
        gauge: Gauge,
        /// Write the document here (`-` for standard output).
        #[arg(long)]
        json: Option<PathBuf>,
        /// Root order D of v = q^{1/D}; a multiple of the algebra default.
        #[arg(long = "d-override")]
        d_override: Option<u32>,
    },
    /// Run the relation suite, golden tables and classical limit.
    Verify {
        #[arg(required_unless_present = "from", conflicts_with = "from")]
        algebra: Option<AlgebraKind>,
        /// Re-verify an exported document instead of constructing.
        #[arg(long)]
        from: Option<PathBuf>,
        /// Comma separated relation ids, or `all`.
        #[arg(long, default_value = "all")]
        relations: String,
        #[arg(long, default_value = "paper")]
        gauge: Gauge,
    },
    /// Expand [a ∘ b] over the basis.
    Bracket {
        algebra: AlgebraKind,
        a: String,
        b: String,
        #[arg(long, default_value = "paper")]
        gauge: Gauge,
    },
    /// Structure constants at q = 1 beside the classical Weyl-basis values.
    Classical { algebra: AlgebraKind },
}

enum Failure {
    Usage(String),
    Run(String),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match degree_cap() {
        Ok(cap) => run(cli.command, cap),
        Err(e) => Err(e),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(m)) => {
            eprintln!("error: {}", m);
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Run(m)) => {
            eprintln!("error: {}", m);
            ExitCode::from(EXIT_FAIL)
        }
    }
}

fn degree_cap() -> Result<Option<usize>, Failure> {
    match std::env::var(CAP_VAR) {
        Err(_) => Ok(None),
        Ok(s) => match s.trim().parse::<usize>() {
            Ok(n) if (1..=32).contains(&n) => Ok(Some(n)),
            _ => Err(Failure::Usage(format!("{} must be an integer between 1 and 32, got `{}`", CAP_VAR, s))),
        },
    }
}

fn run(command: Command, cap: Option<usize>) -> Result<u8, Failure> {
    match command {
        Command::Construct { algebra, gauge, json, d_override } => {
            let opts = options(algebra, d_override, cap)?;
            let t0 = Instant::now();
            let report = build(algebra, gauge, &opts)?;
            match json {
                Some(path) => {
                    let doc = ExportDocument::new(&report, report.verification());
                    write_output(&path, &doc.to_json())?;
                    if path.as_os_str() != "-" {
                        eprintln!("wrote {} ({:.2?})", path.display(), t0.elapsed());
                    }
                }
                None => print_tables(&report),
            }
            Ok(0)
        }
        Command::Verify { algebra, from, relations, gauge } => {
            let (checks, consistency) = match (algebra, from) {
                (_, Some(path)) => {
                    let text = std::fs::read_to_string(&path).map_err(|e| Failure::Usage(format!("{}: {}", path.display(), e)))?;
                    let doc = ExportDocument::from_json(&text).map_err(|e| Failure::Usage(e.to_string()))?;
                    let v = verify_document(&doc, cap).map_err(|e| Failure::Run(e.to_string()))?;
                    (v.checks, Some((v.constants_match, v.verdicts_match)))
                }
                (Some(kind), None) => (build(kind, gauge, &options(kind, None, cap)?)?.verification(), None),
                (None, None) => return Err(Failure::Usage("give an algebra or --from PATH".into())),
            };
            let selected = select(&checks, &relations)?;
            for c in &selected {
                println!("{}", c);
            }
            let mut ok = selected.iter().all(|c| c.status != Status::Fail);
            if let Some((constants, verdicts)) = consistency {
                println!("document constants {}", if constants { "match the recomputation" } else { "DIFFER from the recomputation" });
                println!("document verdicts {}", if verdicts { "match the recomputation" } else { "DIFFER from the recomputation" });
                ok &= constants && verdicts;
            }
            Ok(if ok { 0 } else { EXIT_FAIL })
        }
        Command::Bracket { algebra, a, b, gauge } => {
            let report = build(algebra, gauge, &options(algebra, None, cap)?)?;
            let sc = &report.constants;
            let find = |l: &str| {
                sc.labels
                    .iter()
                    .position(|x| x == l)
                    .ok_or_else(|| Failure::Usage(format!("unknown basis label `{}` (expected one of {})", l, sc.labels.join(", "))))
            };
            let (i, j) = (find(&a)?, find(&b)?);
            println!("{}", expansion(&sc.brackets[i][j], &sc.labels, sc.context.d()));
            Ok(0)
        }
        Command::Classical { algebra } => {
            let report = build(algebra, Gauge::Canonical, &options(algebra, None, cap)?)?;
            let oracle = ClassicalOracle::new(algebra);
            let rows =
                classical_rows(&report.constants, &oracle).ok_or_else(|| Failure::Run("canonical basis is not normalized".into()))?;
            let width = rows.iter().map(|r| r.quantity.chars().count()).max().unwrap_or(0);
            for r in &rows {
                println!(
                    "{:<width$}  q=1: {:<24} classical: {:<24} {}",
                    r.quantity,
                    r.quantum,
                    r.classical,
                    if r.agrees { "ok" } else { "MISMATCH" },
                    width = width
                );
            }
            let bad = rows.iter().filter(|r| !r.agrees).count();
            println!("{} of {} quantities agree", rows.len() - bad, rows.len());
            if rows.iter().any(|r| r.quantum.contains("pole")) {
                return Err(Failure::Run("pole at q = 1".into()));
            }
            Ok(if bad == 0 { 0 } else { EXIT_FAIL })
        }
    }
}

fn options(kind: AlgebraKind, d: Option<u32>, cap: Option<usize>) -> Result<Options, Failure> {
    if let Some(d) = d {
        let base = qlie_core::uq::CartanData::new(kind).default_root_order;
        if d == 0 || d % base != 0 {
            return Err(Failure::Usage(format!("--d-override must be a positive multiple of {} for {}", base, kind)));
        }
    }
    Ok(Options { d, cap })
}

fn build(kind: AlgebraKind, gauge: Gauge, opts: &Options) -> Result<Report, Failure> {
    let c = Construction::new(kind, opts).map_err(|e| Failure::Run(format!("construction of {} failed: {}", kind, e)))?;
    c.report_gauge(gauge).map_err(|e| Failure::Run(format!("{} gauge for {} failed: {}", gauge, kind, e)))
}

fn write_output(path: &PathBuf, text: &str) -> Result<(), Failure> {
    if path.as_os_str() == "-" {
        print!("{}", text);
        Ok(())
    } else {
        std::fs::write(path, text).map_err(|e| Failure::Run(format!("{}: {}", path.display(), e)))
    }
}

fn select(checks: &[Check], relations: &str) -> Result<Vec<Check>, Failure> {
    if relations == "all" {
        return Ok(checks.to_vec());
    }
    let mut out = Vec::new();
    for id in relations.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        match checks.iter().find(|c| c.relation_id == id) {
            Some(c) => out.push(c.clone()),
            None => {
                let known: Vec<&str> = checks.iter().map(|c| c.relation_id.as_str()).collect();
                return Err(Failure::Usage(format!("unknown relation `{}` (known: {})", id, known.join(", "))));
            }
        }
    }
    Ok(out)
}

/// `pretty_q` with binary minus signs as `−`.
fn show(s: &Scalar, d: u32) -> String {
    pretty_q(s, d).replace(" - ", " − ")
}

fn is_atom(s: &str) -> bool {
    !s.contains(" + ") && !s.contains(" − ") && !s.contains('/')
}

fn wrap(s: String) -> String {
    if is_atom(&s) {
        s
    } else {
        format!("({})", s)
    }
}

fn coefficient(x: &RadScalar, d: u32) -> String {
    let (a, b) = (x.rational_part(), x.radical_part());
    if b.is_zero() {
        show(a, d)
    } else if a.is_zero() {
        if b.is_one() {
            "C".into()
        } else {
            format!("{}·C", wrap(show(b, d)))
        }
    } else {
        format!("{} + {}·C", wrap(show(a, d)), wrap(show(b, d)))
    }
}

/// `c·label` with the coefficient parenthesized when it is a sum.
fn term(x: &RadScalar, label: &str, d: u32) -> String {
    let (a, b) = (x.rational_part(), x.radical_part());
    if b.is_zero() {
        match show(a, d).as_str() {
            "1" => label.to_string(),
            "-1" => format!("−{}", label),
            c => format!("{}·{}", wrap(c.to_string()), label),
        }
    } else if a.is_zero() {
        format!("{}·{}", coefficient(x, d), label)
    } else {
        format!("({})·{}", coefficient(x, d), label)
    }
}

/// `c_1·label_1 + c_2·label_2 + ...`, or `0`.
fn expansion(coeffs: &[RadScalar], labels: &[String], d: u32) -> String {
    let terms: Vec<String> = coeffs.iter().zip(labels).filter(|(x, _)| !x.is_zero()).map(|(x, l)| term(x, l, d)).collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

fn print_tables(report: &Report) {
    let basis = &report.basis;
    let sc = &report.constants;
    let d = basis.context.d();
    println!("{} in the {} gauge, v = q^(1/{})", basis.kind, basis.gauge, d);
    if let Some(r) = basis.context.radical_square() {
        println!("C^2 = {}", show(r, d));
    }
    println!();
    println!("basis:");
    for k in 0..basis.dim() {
        let s = &basis.scales[k];
        let radicals: String = (0..8).filter(|b| s.radicals & (1 << b) != 0).map(|b| format!("·sqrt(R{})", b)).collect();
        println!("  {} = ({}){} · {}", basis.labels[k], show(&s.rational, d), radicals, basis.elements[k].render(d));
    }
    println!();
    println!("brackets:");
    for a in 0..sc.dim() {
        for b in 0..sc.dim() {
            let e = expansion(&sc.brackets[a][b], &sc.labels, d);
            if e != "0" {
                println!("  [{}∘{}] = {}", sc.labels[a], sc.labels[b], e);
            }
        }
    }
    println!();
    println!("Killing form:");
    for a in 0..sc.dim() {
        for b in 0..sc.dim() {
            if !sc.killing[a][b].is_zero() {
                println!("  B({}, {}) = {}", sc.labels[a], sc.labels[b], coefficient(&sc.killing[a][b], d));
            }
        }
    }
}
