//! Command-line front end: validate quandle tables, enumerate the orders
//! that keep one-sided multiplication continuous, re-derive the built-in
//! example catalogue, and run the full self-audit.
//!
//! Exit codes: 0 success, 1 input error, 2 verification mismatch.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use quandle_topology::{
    enumerate_left_orders, enumerate_right_orders, reproduce_tables_capped,
    run_full_verification, ContinuityReport, DedupMode, Quandle, Side, FULL_DIHEDRAL_HALF,
    FULL_SWEEP_ORDER,
};

#[derive(Parser)]
#[command(
    name = "qtop",
    version,
    about = "Finite quandles and the partial orders on which they act continuously"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the quandle axioms and report the orbit structure.
    Validate {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// List the strict orders making right (or left) multiplication
    /// continuous.
    Enumerate {
        #[command(flatten)]
        input: InputArgs,
        /// Which multiplications must stay continuous.
        #[arg(long, value_enum, default_value_t = SideOpt::Right)]
        side: SideOpt,
        /// Collapse the order list: none, iso, iso-dual, quandle-aut.
        #[arg(long, default_value = "none")]
        dedup: DedupMode,
        /// Refuse quandles larger than this before any search starts.
        #[arg(long)]
        max_order: Option<usize>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Re-derive every catalogue row and diff against the expected tables.
    ReproduceTables {
        /// Restrict the diff to quandles of at most this order.
        #[arg(long)]
        max_order: Option<usize>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run the full self-audit: dual-route enumeration agreement,
    /// structural claims, closed-form counts, catalogue diff.
    Verify {
        /// Cap the census sweeps (full run: 5).
        #[arg(long)]
        max_order: Option<usize>,
        /// Cap the even dihedral family checks (full run: 8).
        #[arg(long)]
        dihedral_half: Option<usize>,
        /// Also audit this quandle file alongside the built-in sweep.
        #[arg(long)]
        input: Option<PathBuf>,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Args)]
#[command(group(ArgGroup::new("source").required(true).args(["input", "builtin"])))]
struct InputArgs {
    /// Quandle file: JSON {"n":..,"table":[[..]]} or text (order line,
    /// then one row per line).
    #[arg(long)]
    input: Option<PathBuf>,
    /// Built-in constructor: trivial:N, dihedral:M, alexander:N:T, or
    /// table:T:I for catalogue entry I of table T.
    #[arg(long)]
    builtin: Option<String>,
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum SideOpt {
    Right,
    Left,
    Both,
}

impl SideOpt {
    fn sides(self) -> Vec<Side> {
        match self {
            SideOpt::Right => vec![Side::Right],
            SideOpt::Left => vec![Side::Left],
            SideOpt::Both => vec![Side::Right, Side::Left],
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

/// What went wrong, mapped onto the exit code contract.
enum Failure {
    /// Bad input or unusable configuration: exit 1.
    Input(String),
    /// A verification pass found a real mismatch: exit 2.
    Mismatch,
}

fn input_err(msg: impl Into<String>) -> Failure {
    Failure::Input(msg.into())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Mismatch) => ExitCode::from(2),
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Validate { input, output } => cmd_validate(&input, &output),
        Command::Enumerate { input, side, dedup, max_order, output } => {
            cmd_enumerate(&input, side, dedup, max_order, &output)
        }
        Command::ReproduceTables { max_order, output } => cmd_reproduce(max_order, &output),
        Command::Verify { max_order, dihedral_half, input, output } => {
            cmd_verify(max_order, dihedral_half, input.as_deref(), &output)
        }
    }
}

fn load_quandle(input: &InputArgs) -> Result<Quandle, Failure> {
    if let Some(spec) = &input.builtin {
        return builtin_quandle(spec);
    }
    let path = input.input.as_ref().expect("clap enforces one source");
    let text = fs::read_to_string(path)
        .map_err(|e| input_err(format!("{}: {e}", path.display())))?;
    let parsed = if text.trim_start().starts_with('{') {
        Quandle::parse_json(&text)
    } else {
        Quandle::parse_text(&text)
    };
    parsed.map_err(|e| input_err(format!("{}: {e}", path.display())))
}

fn builtin_quandle(spec: &str) -> Result<Quandle, Failure> {
    let parts: Vec<&str> = spec.split(':').collect();
    let arg = |i: usize| -> Result<usize, Failure> {
        parts
            .get(i)
            .ok_or_else(|| input_err(format!("builtin {spec:?}: missing argument {i}")))?
            .parse()
            .map_err(|_| input_err(format!("builtin {spec:?}: argument {i} is not a number")))
    };
    let expect_len = |l: usize| -> Result<(), Failure> {
        if parts.len() == l {
            Ok(())
        } else {
            Err(input_err(format!("builtin {spec:?}: expected {} argument(s)", l - 1)))
        }
    };
    match parts[0] {
        "trivial" => {
            expect_len(2)?;
            let n = arg(1)?;
            if n == 0 {
                return Err(input_err("trivial:N needs N >= 1"));
            }
            Ok(Quandle::trivial(n))
        }
        "dihedral" => {
            expect_len(2)?;
            let m = arg(1)?;
            if m == 0 {
                return Err(input_err("dihedral:M needs M >= 1"));
            }
            Ok(Quandle::dihedral(m))
        }
        "alexander" => {
            expect_len(3)?;
            Quandle::alexander(arg(1)?, arg(2)?).map_err(|e| input_err(e.to_string()))
        }
        "table" => {
            expect_len(3)?;
            let (t, i) = (arg(1)?, arg(2)?);
            quandle_topology::catalogue()
                .into_iter()
                .find(|p| (p.table as usize, p.index) == (t, i))
                .map(|p| p.quandle)
                .ok_or_else(|| input_err(format!("no catalogue entry table:{t}:{i}")))
        }
        other => Err(input_err(format!(
            "unknown builtin {other:?}, expected trivial|dihedral|alexander|table"
        ))),
    }
}

fn emit(output: &OutputArgs, content: &str) -> Result<(), Failure> {
    match &output.out {
        None => {
            print!("{content}");
            Ok(())
        }
        Some(path) => fs::write(path, content)
            .map_err(|e| input_err(format!("{}: {e}", path.display()))),
    }
}

fn cmd_validate(input: &InputArgs, output: &OutputArgs) -> Result<(), Failure> {
    if output.format == Format::Dot {
        return Err(input_err("dot output applies to enumerate only"));
    }
    let q = load_quandle(input)?;
    let orbits = q.orbits();
    let content = match output.format {
        Format::Json => {
            let v = serde_json::json!({
                "valid": true,
                "order": q.order(),
                "quandle": q.encode(),
                "orbits": orbits.blocks(),
                "connected": q.is_connected(),
                "latin": q.is_latin(),
            });
            format!("{v:#}\n")
        }
        _ => {
            let blocks: Vec<String> = orbits
                .blocks()
                .iter()
                .map(|b| {
                    let inner: Vec<String> = b.iter().map(|x| x.to_string()).collect();
                    format!("{{{}}}", inner.join(","))
                })
                .collect();
            format!(
                "valid\norder: {}\norbits: {}\nconnected: {}\nlatin: {}\n",
                q.order(),
                blocks.join(","),
                q.is_connected(),
                q.is_latin()
            )
        }
    };
    emit(output, &content)
}

fn cmd_enumerate(
    input: &InputArgs,
    side: SideOpt,
    dedup: DedupMode,
    max_order: Option<usize>,
    output: &OutputArgs,
) -> Result<(), Failure> {
    let q = load_quandle(input)?;
    if let Some(cap) = max_order {
        if q.order() > cap {
            return Err(input_err(format!(
                "quandle order {} exceeds --max-order {cap}",
                q.order()
            )));
        }
    }
    let mut reports = Vec::new();
    for s in side.sides() {
        let report = match s {
            Side::Right => enumerate_right_orders(&q, dedup),
            Side::Left => enumerate_left_orders(&q, dedup),
        }
        .map_err(|e| input_err(e.to_string()))?;
        reports.push(report);
    }
    let content = match output.format {
        Format::Json => {
            if reports.len() == 1 {
                format!("{}\n", serde_json::to_string_pretty(&reports[0]).expect("serializable"))
            } else {
                format!("{}\n", serde_json::to_string_pretty(&reports).expect("serializable"))
            }
        }
        Format::Dot => {
            let mut s = String::new();
            for r in &reports {
                for (i, o) in r.orders.iter().enumerate() {
                    s.push_str(&o.to_dot(&format!("{}_{}", r.side, i)));
                }
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for r in &reports {
                s.push_str(&render_report(r));
            }
            s
        }
    };
    emit(output, &content)
}

fn render_report(r: &ContinuityReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "quandle: {}", r.quandle);
    let _ = writeln!(s, "side: {}", r.side);
    let _ = writeln!(s, "dedup: {}", r.dedup);
    let _ = writeln!(s, "orders ({}):", r.orders.len());
    for o in &r.orders {
        let _ = writeln!(s, "  {o}");
    }
    let _ = writeln!(s, "iso classes: {}", r.iso_classes.len());
    s
}

fn cmd_reproduce(max_order: Option<usize>, output: &OutputArgs) -> Result<(), Failure> {
    if output.format == Format::Dot {
        return Err(input_err("dot output applies to enumerate only"));
    }
    let report = reproduce_tables_capped(max_order.unwrap_or(usize::MAX));
    let content = match output.format {
        Format::Json => {
            format!("{}\n", serde_json::to_string_pretty(&report).expect("serializable"))
        }
        _ => report.to_text(),
    };
    emit(output, &content)?;
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}

fn cmd_verify(
    max_order: Option<usize>,
    dihedral_half: Option<usize>,
    extra_input: Option<&std::path::Path>,
    output: &OutputArgs,
) -> Result<(), Failure> {
    if output.format == Format::Dot {
        return Err(input_err("dot output applies to enumerate only"));
    }
    // An injected quandle must parse before any verification starts.
    let extra = match extra_input {
        None => None,
        Some(path) => {
            let args = InputArgs { input: Some(path.to_path_buf()), builtin: None };
            Some(load_quandle(&args)?)
        }
    };
    let suite = run_full_verification(
        max_order.unwrap_or(FULL_SWEEP_ORDER),
        dihedral_half.unwrap_or(FULL_DIHEDRAL_HALF),
    )
    .map_err(|e| input_err(e.to_string()))?;
    let extra_report = extra
        .map(|q| quandle_topology::verify_quandle_theorems(&q).map_err(|e| input_err(e.to_string())))
        .transpose()?;
    let mut passed = suite.all_passed();
    let content = match output.format {
        Format::Json => {
            let v = match &extra_report {
                None => serde_json::to_value(&suite),
                Some(r) => serde_json::to_value(serde_json::json!({
                    "suite": suite,
                    "input_quandle": r,
                })),
            }
            .expect("serializable");
            format!("{:#}\n", v)
        }
        _ => {
            let mut s = suite.to_text();
            if let Some(r) = &extra_report {
                let _ = writeln!(
                    s,
                    "[{}] input-quandle-structure: {}",
                    if r.all_passed() { "pass" } else { "FAIL" },
                    r.quandle
                );
            }
            s
        }
    };
    if let Some(r) = &extra_report {
        passed &= r.all_passed();
    }
    emit(output, &content)?;
    if passed {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}
