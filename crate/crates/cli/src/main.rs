use std::fmt::Write as _;
use std::process::ExitCode;

use adlv_core::enumerate::extended_ball;
use adlv_core::reduction::{build_reduction_tree, tilde_reachable, ReductionTree, DEFAULT_BUDGET};
use adlv_core::verify::{self, SuiteConfig, DEFAULT_SEED};
use adlv_core::{
    demazure, predict, AffineElt, AffineWeylGroup, BasicClassData, CartanType, Error, Prediction,
    Status,
};
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

const EXIT_EMPTY: u8 = 1;
const EXIT_OUTSIDE: u8 = 2;
const EXIT_VERIFY_FAILED: u8 = 3;
const EXIT_USAGE: u8 = 64;

/// Extended affine Weyl group combinatorics and affine Deligne-Lusztig
/// predictions for basic σ-conjugacy classes.
#[derive(Parser, Debug)]
#[command(name = "adlv", version)]
struct Cli {
    /// Cartan type: A1.., B2.., C2.., D3.., G2 (case-insensitive).
    #[arg(long = "type", short = 't', global = true)]
    cartan_type: Option<String>,

    #[arg(long, short = 'f', global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Node budget for searches and reduction trees.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: usize,

    /// Seed for sampled verification suites.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,

    /// Basic class: "1" or "pgl:n:r".
    #[arg(long, global = true, default_value = "1")]
    b: String,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Tsv,
    Dot,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Length, canonical decomposition, η, κ and d(x) of an element.
    Eval { expr: String },
    /// Emptiness and dimension prediction for X_x(b).
    Predict { expr: String },
    /// Predictions for every x with ℓ(x) <= max-length.
    Sweep {
        max_length: usize,
        /// Worker threads; output does not depend on it.
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Deligne-Lusztig reduction tree.
    Tree { expr: String },
    /// Run verification suites: SUITE [TYPE] [BOUND].
    Verify {
        suite: String,
        cartan_type: Option<String>,
        bound: Option<usize>,
    },
    /// Demazure product x * y.
    Star { x: String, y: String },
    /// Everything reachable from x by non-increasing conjugations.
    Reachable {
        expr: String,
        /// Drop elements shorter than this.
        #[arg(long, default_value_t = 0)]
        floor: usize,
    },
}

#[derive(Debug)]
struct Failure {
    code: u8,
    msg: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: EXIT_USAGE,
            msg: e.to_string(),
        }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        msg: msg.into(),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}

fn group(name: Option<&str>) -> Result<AffineWeylGroup, Failure> {
    let name = name.ok_or_else(|| usage("missing --type (e.g. --type A2)"))?;
    let ty: CartanType = name.parse()?;
    Ok(AffineWeylGroup::new(ty))
}

fn run(cli: &Cli) -> Result<u8, Failure> {
    if let Command::Verify {
        suite,
        cartan_type,
        bound,
    } = &cli.command
    {
        let g = group(cartan_type.as_deref().or(cli.cartan_type.as_deref()))?;
        return cmd_verify(cli, &g, suite, *bound);
    }
    let g = group(cli.cartan_type.as_deref())?;
    let b = BasicClassData::parse(&g, &cli.b)?;
    let mut out = String::new();
    let code = match &cli.command {
        Command::Eval { expr } => cmd_eval(cli, &g, &b, &g.parse(expr)?, &mut out),
        Command::Predict { expr } => cmd_predict(cli, &g, &b, &g.parse(expr)?, &mut out),
        Command::Sweep {
            max_length,
            threads,
        } => cmd_sweep(cli, &g, &b, *max_length, *threads, &mut out)?,
        Command::Tree { expr } => cmd_tree(cli, &g, &g.parse(expr)?, &mut out),
        Command::Star { x, y } => {
            let z = demazure::star(&g, &g.parse(x)?, &g.parse(y)?);
            match cli.format {
                Format::Json => emit_json(&mut out, &element_json(&g, &z)),
                _ => writeln!(out, "{}", g.format(&z)).unwrap(),
            }
            0
        }
        Command::Reachable { expr, floor } => {
            let x = g.parse(expr)?;
            let r = tilde_reachable(&g, &x, *floor, cli.budget);
            if r.partial {
                eprintln!("warning: budget of {} exhausted, result is partial", cli.budget);
            }
            match cli.format {
                Format::Json => emit_json(
                    &mut out,
                    &json!({
                        "partial": r.partial,
                        "elements": r.elements.iter().map(|y| element_json(&g, y)).collect::<Vec<_>>(),
                    }),
                ),
                _ => {
                    for y in &r.elements {
                        writeln!(out, "{}\t{}", g.format(y), g.length(y)).unwrap();
                    }
                }
            }
            0
        }
        Command::Verify { .. } => unreachable!("handled above"),
    };
    print!("{out}");
    Ok(code)
}

fn emit_json(out: &mut String, v: &Value) {
    out.push_str(&serde_json::to_string_pretty(v).expect("serializable"));
    out.push('\n');
}

fn element_json(g: &AffineWeylGroup, x: &AffineElt) -> Value {
    json!({
        "element": g.format(x),
        "word": g.format_word(x),
        "length": g.length(x),
    })
}

fn cmd_eval(cli: &Cli, g: &AffineWeylGroup, b: &BasicClassData, x: &AffineElt, out: &mut String) -> u8 {
    let w = g.weyl();
    let d = g.canonical_decomposition(x);
    let eta = g.eta(x);
    let dim = g.virtual_dim(x, b.defect);
    let fields: Vec<(&str, Value)> = vec![
        ("element", g.format(x).into()),
        ("word", g.format_word(x).into()),
        ("length", g.length(x).into()),
        ("decomposition", g.format_decomposition(x).into()),
        ("v", w.format(&d.v).into()),
        ("mu", d.mu.to_string().into()),
        ("w", w.format(&d.w).into()),
        ("kappa", g.kappa(x).to_string().into()),
        ("eta1", w.format(&g.eta1(x)).into()),
        ("eta2", w.format(&g.eta2(x)).into()),
        ("eta", w.format(&eta).into()),
        ("eta_length", w.length(&eta).into()),
        ("shrunken", g.is_shrunken(x).into()),
        ("defect", b.defect.into()),
        ("dim_times_2", dim.twice().into()),
        ("virtual_dim", dim.to_string().into()),
    ];
    match cli.format {
        Format::Json => emit_json(out, &Value::Object(fields.into_iter().map(|(k, v)| (k.into(), v)).collect())),
        Format::Tsv => {
            let names: Vec<&str> = fields.iter().map(|(k, _)| *k).collect();
            writeln!(out, "{}", names.join("\t")).unwrap();
            let vals: Vec<String> = fields.iter().map(|(_, v)| plain(v)).collect();
            writeln!(out, "{}", vals.join("\t")).unwrap();
        }
        _ => {
            for (k, v) in fields {
                writeln!(out, "{k:<14}{}", plain(&v)).unwrap();
            }
        }
    }
    0
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

const TSV_COLUMNS: [&str; 10] = [
    "element",
    "type",
    "kappa",
    "shrunken",
    "eta",
    "eta_length",
    "defect",
    "status",
    "dim_times_2",
    "flags",
];

fn prediction_row(g: &AffineWeylGroup, b: &BasicClassData, x: &AffineElt) -> (Prediction, Vec<Value>) {
    let w = g.weyl();
    let p = predict(g, x, b);
    let eta = g.eta(x);
    let row = vec![
        g.format(x).into(),
        g.cartan_type().to_string().into(),
        g.kappa(x).to_string().into(),
        p.shrunken.into(),
        w.format(&eta).into(),
        w.length(&eta).into(),
        b.defect.into(),
        p.status.to_string().into(),
        p.dim.map_or(Value::Null, |d| d.twice().into()),
        p.flags.to_string().into(),
    ];
    (p, row)
}

fn row_json(row: Vec<Value>) -> Value {
    Value::Object(TSV_COLUMNS.iter().map(|k| k.to_string()).zip(row).collect())
}

fn row_tsv(row: &[Value]) -> String {
    row.iter()
        .map(|v| if v.is_null() { "-".to_string() } else { plain(v) })
        .collect::<Vec<_>>()
        .join("\t")
}

fn exit_for(status: Status) -> u8 {
    match status {
        Status::Nonempty => 0,
        Status::Empty => EXIT_EMPTY,
        Status::OutsideTheoremScope => EXIT_OUTSIDE,
    }
}

fn cmd_predict(cli: &Cli, g: &AffineWeylGroup, b: &BasicClassData, x: &AffineElt, out: &mut String) -> u8 {
    let (p, row) = prediction_row(g, b, x);
    if g.kappa(x) != b.kappa {
        eprintln!("note: {}", p.note.as_deref().unwrap_or_default());
    }
    match cli.format {
        Format::Json => emit_json(out, &row_json(row)),
        Format::Tsv => {
            writeln!(out, "{}", TSV_COLUMNS.join("\t")).unwrap();
            writeln!(out, "{}", row_tsv(&row)).unwrap();
        }
        _ => {
            for (k, v) in TSV_COLUMNS.iter().zip(&row) {
                writeln!(out, "{k:<12}{}", if v.is_null() { "-".into() } else { plain(v) }).unwrap();
            }
            if let Some(d) = p.dim {
                writeln!(out, "{:<12}{d}", "dim").unwrap();
            }
            if let Some(note) = &p.note {
                writeln!(out, "{:<12}{note}", "note").unwrap();
            }
        }
    }
    exit_for(p.status)
}

fn cmd_sweep(
    cli: &Cli,
    g: &AffineWeylGroup,
    b: &BasicClassData,
    max_length: usize,
    threads: Option<usize>,
    out: &mut String,
) -> Result<u8, Failure> {
    let elements = extended_ball(g, max_length);
    let compute = || -> Vec<Vec<Value>> {
        elements.par_iter().map(|x| prediction_row(g, b, x).1).collect()
    };
    let rows = match threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| usage(e.to_string()))?
            .install(compute),
        None => compute(),
    };
    match cli.format {
        Format::Json => emit_json(out, &Value::Array(rows.into_iter().map(row_json).collect())),
        _ => {
            writeln!(out, "{}", TSV_COLUMNS.join("\t")).unwrap();
            for row in &rows {
                writeln!(out, "{}", row_tsv(row)).unwrap();
            }
        }
    }
    Ok(0)
}

fn cmd_tree(cli: &Cli, g: &AffineWeylGroup, x: &AffineElt, out: &mut String) -> u8 {
    let tree = build_reduction_tree(g, x, cli.budget);
    if tree.partial {
        eprintln!("warning: budget of {} exhausted, tree is partial", cli.budget);
    }
    match cli.format {
        Format::Dot => out.push_str(&tree.to_dot(g)),
        Format::Json => emit_json(out, &tree.to_json(g)),
        _ => write_tree_text(g, &tree, 0, 0, None, &mut vec![false; tree.nodes.len()], out),
    }
    0
}

fn write_tree_text(
    g: &AffineWeylGroup,
    tree: &ReductionTree,
    k: usize,
    depth: usize,
    via: Option<String>,
    seen: &mut Vec<bool>,
    out: &mut String,
) {
    let n = &tree.nodes[k];
    let prefix = via.map(|v| format!("[{v}] ")).unwrap_or_default();
    let mark = if n.minimal { " minimal" } else { "" };
    let again = if seen[k] { " (see above)" } else { "" };
    writeln!(
        out,
        "{:indent$}{prefix}{}  ℓ={} ℓ(η)={}{mark}{again}",
        "",
        g.format(&n.element),
        n.length,
        n.eta_length,
        indent = 2 * depth
    )
    .unwrap();
    if seen[k] {
        return;
    }
    seen[k] = true;
    for e in &n.edges {
        let label = format!("{} +{}", e.kind, e.increment);
        write_tree_text(g, tree, e.target, depth + 1, Some(label), seen, out);
    }
}

fn cmd_verify(cli: &Cli, g: &AffineWeylGroup, suite: &str, bound: Option<usize>) -> Result<u8, Failure> {
    let cfg = SuiteConfig {
        bound: bound.unwrap_or(6),
        seed: cli.seed,
        budget: cli.budget,
    };
    let reports = verify::run(suite, g, &cfg)?;
    let failed = reports.iter().any(|r| !r.passed());
    match cli.format {
        Format::Json => {
            let v: Vec<Value> = reports
                .iter()
                .map(|r| {
                    json!({
                        "suite": r.name,
                        "passed": r.passed(),
                        "checked": r.checked,
                        "counterexample": r.counterexample,
                        "notes": r.notes,
                    })
                })
                .collect();
            println!("{}", serde_json::to_string_pretty(&v).expect("serializable"));
        }
        _ => {
            for r in &reports {
                println!("{r}");
            }
        }
    }
    Ok(if failed { EXIT_VERIFY_FAILED } else { 0 })
}
