use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use motzkin_core::cellmod::{
    character, gram_det_direct, gram_det_formula, gram_matrix, is_semisimple,
};
use motzkin_core::combinatorics::{
    catalan, enumerate_paths, m_count, m_via_temperley_lieb, motzkin_number,
};
use motzkin_core::diagrams::{enumerate_diagrams, factor_rtl};
use motzkin_core::scalars::{chebyshev_shifted_roots, parse_rational};

mod input;
mod suites;

use suites::Suite;

const DEFAULT_SEED: u64 = 20_240_601;

#[derive(Parser, Debug)]
#[command(
    name = "motzkin",
    version,
    about = "Exact computations in the Motzkin algebra"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Worker threads for parallel assembly (0 = rayon default).
    #[arg(long, env = "MOTZKIN_THREADS", default_value_t = 0, global = true)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Motzkin and Catalan numbers and the table m_{k,r}.
    Count {
        #[arg(long)]
        k: usize,
    },
    /// List all k-diagrams, or the Motzkin paths of length k.
    Enumerate {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        paths: bool,
        /// Restrict paths to this rank.
        #[arg(long, requires = "paths")]
        r: Option<usize>,
    },
    /// Product of two diagrams (JSON file, inline JSON or edge list like T1-B2,T2-T3).
    Multiply {
        a: String,
        b: String,
        /// Size for inline edge lists.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Factor a diagram as r t l.
    Factor {
        d: String,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Gram matrix of the cell module C_k^(r).
    Gram {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: usize,
    },
    /// Gram determinant, computed directly and by the product formula.
    Gramdet {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: usize,
    },
    /// Semisimplicity of M_k(x) at a rational x.
    Semisimple {
        #[arg(long)]
        k: usize,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
    },
    /// Characters chi_r(1_{l,k}) for all r, l.
    Characters {
        #[arg(long)]
        k: usize,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

/// A failure together with its exit code.
struct Failure {
    code: u8,
    message: String,
}

fn bad_args(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

impl From<motzkin_core::Error> for Failure {
    fn from(e: motzkin_core::Error) -> Self {
        bad_args(e.to_string())
    }
}

/// What a command produced: JSON and text renderings, and whether a
/// verification failed.
struct Output {
    json: Value,
    text: String,
    failed: bool,
}

impl Output {
    fn new(json: Value, text: String) -> Self {
        Output {
            json,
            text,
            failed: false,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            if json_requested() {
                eprintln!(
                    "{}",
                    json!({"error": e.kind().to_string(), "message": e.to_string().trim()})
                );
            } else {
                let _ = e.print();
            }
            return ExitCode::from(2);
        }
    };
    if cli.threads > 0 {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.threads)
            .build_global()
        {
            eprintln!("warning: could not configure thread pool: {e}");
        }
    }
    match run(&cli.command) {
        Ok(out) => {
            let body = match cli.format {
                Format::Json => serde_json::to_string_pretty(&out.json).expect("serializable"),
                Format::Text => out.text.trim_end().to_string(),
            };
            // a closed pipe (e.g. `| head`) is not an error
            let _ = writeln!(std::io::stdout().lock(), "{body}");
            if out.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(f) => {
            match cli.format {
                Format::Json => eprintln!("{}", json!({"error": f.message})),
                Format::Text => eprintln!("error: {}", f.message),
            }
            ExitCode::from(f.code)
        }
    }
}

/// Whether the raw arguments ask for JSON, for errors raised before parsing
/// completes.
fn json_requested() -> bool {
    let args: Vec<String> = std::env::args().collect();
    args.iter().any(|a| a == "--format=json")
        || args
            .windows(2)
            .any(|w| w[0] == "--format" && w[1] == "json")
}

fn big(n: num_bigint::BigUint) -> Value {
    match u64::try_from(&n) {
        Ok(v) => json!(v),
        Err(_) => json!(n.to_string()),
    }
}

fn run(cmd: &Command) -> Result<Output, Failure> {
    match cmd {
        Command::Count { k } => count(*k),
        Command::Enumerate { k, paths, r } => enumerate(*k, *paths, *r),
        Command::Multiply { a, b, k } => {
            let a = input::parse_diagram(a, *k).map_err(bad_args)?;
            let b = input::parse_diagram(b, *k).map_err(bad_args)?;
            let prod = a.multiply(&b)?;
            Ok(Output::new(
                json!({"loops": prod.loops, "product": prod.diagram.to_json()}),
                format!("loops: {}\n{}", prod.loops, prod.diagram.render()),
            ))
        }
        Command::Factor { d, k } => {
            let d = input::parse_diagram(d, *k).map_err(bad_args)?;
            let (r, t, l) = factor_rtl(&d);
            let check = r.multiply(&t)?.diagram.multiply(&l)?;
            let recomposes = check.loops == 0 && check.diagram == d;
            let mut out = Output::new(
                json!({"r": r.to_json(), "t": t.to_json(), "l": l.to_json(), "recomposes": recomposes}),
                format!(
                    "r:\n{}\n\nt:\n{}\n\nl:\n{}\n\nrecomposes: {recomposes}",
                    r.render(),
                    t.render(),
                    l.render()
                ),
            );
            out.failed = !recomposes;
            Ok(out)
        }
        Command::Gram { k, r } => {
            check_rank(*k, *r)?;
            let g = gram_matrix(*k, *r);
            let mut text = format!(
                "paths: {}\n",
                g.paths
                    .iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            );
            for row in &g.entries {
                text.push_str(
                    &row.iter()
                        .map(|e| e.to_string())
                        .collect::<Vec<_>>()
                        .join("\t"),
                );
                text.push('\n');
            }
            Ok(Output::new(g.to_json(), text))
        }
        Command::Gramdet { k, r } => {
            check_rank(*k, *r)?;
            let direct = gram_det_direct(*k, *r);
            let formula = gram_det_formula(*k, *r)?;
            let equal = direct == formula;
            let mut out = Output::new(
                json!({"k": k, "r": r, "direct": direct.to_string(), "formula": formula.to_string(), "equal": equal}),
                format!("direct:  {direct}\nformula: {formula}\nequal: {equal}"),
            );
            out.failed = !equal;
            Ok(out)
        }
        Command::Semisimple { k, x } => semisimple(*k, x),
        Command::Characters { k } => {
            let mut table = Vec::new();
            let mut text = String::from("r\\l");
            for l in 0..=*k {
                text.push_str(&format!("\t{l}"));
            }
            text.push('\n');
            for r in 0..=*k {
                let row = (0..=*k)
                    .map(|l| character(*k, r, l))
                    .collect::<Result<Vec<_>, _>>()?;
                text.push_str(&format!("{r}"));
                for c in &row {
                    text.push_str(&format!("\t{c}"));
                }
                text.push('\n');
                table.push(row.into_iter().map(big).collect::<Vec<_>>());
            }
            Ok(Output::new(json!({"k": k, "table": table}), text))
        }
        Command::Verify { suite, k, seed } => {
            let (lo, hi) = suite.k_range();
            if *k < lo || *k > hi {
                return Err(bad_args(format!(
                    "suite {} takes {lo} <= k <= {hi}, got {k}",
                    suite.name()
                )));
            }
            let outcome = suites::run(*suite, *k, *seed)?;
            let json = json!({"k": k, "check": suite.name(), "pass": outcome.pass, "details": outcome.details});
            let text = format!(
                "{} k={k}: {}\n{}",
                suite.name(),
                if outcome.pass { "PASS" } else { "FAIL" },
                serde_json::to_string_pretty(&outcome.details).expect("serializable")
            );
            Ok(Output {
                json,
                text,
                failed: !outcome.pass,
            })
        }
    }
}

fn check_rank(k: usize, r: usize) -> Result<(), Failure> {
    if r > k {
        return Err(bad_args(format!("rank r = {r} exceeds k = {k}")));
    }
    Ok(())
}

fn count(k: usize) -> Result<Output, Failure> {
    let m: Vec<_> = (0..=k).map(|r| m_count(k, r)).collect();
    let agree = (0..=k).all(|r| m_via_temperley_lieb(k, r) == m[r]);
    let mut text = format!(
        "k = {k}\ndiagrams M_{{2k}} = {}\nMotzkin M_k = {}\nCatalan C_k = {}\n",
        motzkin_number(2 * k),
        motzkin_number(k),
        catalan(k)
    );
    text.push_str("r\tm_{k,r}\n");
    for (r, c) in m.iter().enumerate() {
        text.push_str(&format!("{r}\t{c}\n"));
    }
    Ok(Output::new(
        json!({
            "k": k,
            "diagrams": big(motzkin_number(2 * k)),
            "motzkin": big(motzkin_number(k)),
            "catalan": big(catalan(k)),
            "m": m.into_iter().map(big).collect::<Vec<_>>(),
            "m_agrees_with_temperley_lieb": agree,
        }),
        text,
    ))
}

fn enumerate(k: usize, paths: bool, r: Option<usize>) -> Result<Output, Failure> {
    if paths {
        let ps = enumerate_paths(k, r);
        let json: Vec<Value> = ps.iter().map(|p| json!(p.steps())).collect();
        let text = ps
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join("\n");
        return Ok(Output::new(
            json!({"k": k, "count": ps.len(), "paths": json}),
            text,
        ));
    }
    let ds = enumerate_diagrams(k);
    let json: Vec<Value> = ds.iter().map(|d| d.to_json()).collect();
    let text = ds
        .iter()
        .map(|d| d.render())
        .collect::<Vec<_>>()
        .join("\n\n");
    Ok(Output::new(
        json!({"k": k, "count": ds.len(), "diagrams": json}),
        text,
    ))
}

fn semisimple(k: usize, x: &str) -> Result<Output, Failure> {
    let xv = parse_rational(x)?;
    let report = is_semisimple(k, &xv);
    let xf = x_as_f64(&xv);
    let nearest: Vec<Value> = (1..k)
        .map(|j| {
            let root = chebyshev_shifted_roots(j)
                .into_iter()
                .min_by(|a, b| (a - xf).abs().total_cmp(&(b - xf).abs()))
                .expect("j >= 1 has roots");
            json!({"j": j, "root": root})
        })
        .collect();
    let mut json = serde_json::to_value(&report).expect("serializable");
    json["nearest_roots"] = Value::Array(nearest.clone());
    let mut text = format!(
        "M_{k}({}) semisimple: {}\nfailing j: {:?}\n",
        report.x, report.semisimple, report.failing_j
    );
    for n in &nearest {
        text.push_str(&format!(
            "nearest root of u_{}(x-1): {:.6}\n",
            n["j"],
            n["root"].as_f64().unwrap_or(f64::NAN)
        ));
    }
    Ok(Output::new(json, text))
}

fn x_as_f64(x: &motzkin_core::scalars::Rational) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or(f64::NAN)
}
