//! `fcp`: counting, enumeration, verification suites and table output for
//! fully complementary partitions and plane partition symmetry classes.

use std::fmt::Write as _;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use fcp_core::conjecture::{compute_count, eval_conjecture, formula, ConjectureClass, CountTable};
use fcp_core::fcp::{count_fcp, enumerate_fcp, fcp_to_path, path_to_fcp, Fcp, LatticePath};
use fcp_core::series::{expand_fcp_genfun, expand_qs_genfun, macmahon_box_q, TruncatedSeries};
use fcp_core::symmetry::{count_class, ClassTag, SymmetryClass, DEFAULT_BUDGET};
use fcp_core::verify::{self, SuiteReport};
use fcp_core::{BoxDims, PartitionArray};
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(name = "fcp", version, about = "Fully complementary partitions and plane partition symmetry classes")]
struct Cli {
    /// Worker threads (default: one per core). Output does not depend on it.
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Node budget for each brute-force search.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Count FCPs or a plane partition symmetry class.
    #[command(subcommand)]
    Count(CountCmd),
    /// List every FCP of a box.
    #[command(subcommand)]
    Enumerate(EnumerateCmd),
    /// Convert between FCPs and lattice paths.
    #[command(subcommand)]
    Path(PathCmd),
    /// Expand a generating function.
    #[command(subcommand)]
    Series(SeriesCmd),
    /// Run verification suites. Exit status 1 when a check fails.
    #[command(subcommand)]
    Verify(VerifyCmd),
    /// Emit a count table as CSV or JSON.
    Table(TableArgs),
}

#[derive(Subcommand, Debug)]
enum CountCmd {
    /// |FCP(n)|. The box is given by its half-lengths n_1,..,n_k; the
    /// partitions live in the (2n_1,..,2n_k)-box.
    Fcp {
        #[arg(long = "box", value_delimiter = ',', required = true)]
        dims: Vec<usize>,
    },
    /// Size of a symmetry class in the raw (a,b,c)-box.
    Class {
        /// SYM, QSYM, SC, TC, QTC, QTC2, SQTC2, CYC, QS_QCPP, SC_QCPP, QTC_QCPP.
        #[arg(long)]
        class: String,
        /// Raw side lengths a,b,c.
        #[arg(long = "box", value_delimiter = ',', required = true)]
        dims: Vec<usize>,
    },
}

#[derive(Subcommand, Debug)]
enum EnumerateCmd {
    /// Every FCP for half-lengths n_1,..,n_k.
    Fcp {
        #[arg(long = "box", value_delimiter = ',', required = true)]
        dims: Vec<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Subcommand, Debug)]
enum PathCmd {
    /// FCP to lattice path. The array is nested JSON, e.g. [[2,0],[2,0]].
    To {
        /// Half-lengths n_1,..,n_k.
        #[arg(long = "box", value_delimiter = ',', required = true)]
        dims: Vec<usize>,
        /// Omit for the empty FCP.
        #[arg(long)]
        array: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Lattice path to FCP. Steps are 1-based axis indices.
    From {
        #[arg(long, value_delimiter = ',', required = true)]
        start: Vec<usize>,
        #[arg(long, value_delimiter = ',')]
        steps: Vec<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Subcommand, Debug)]
enum SeriesCmd {
    /// FCP generating function in d+1 variables, truncated at total degree `cap`.
    Fcp {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        cap: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Quasi-symmetric QCPP generating function in two variables.
    Qs {
        #[arg(long)]
        cap: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// MacMahon's q-product for the raw (a,b,c)-box, one coefficient per line.
    Macmahon {
        #[arg(long = "box", value_delimiter = ',', required = true)]
        dims: Vec<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Args, Debug)]
struct VerifyOpts {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Print every check, not only failures.
    #[arg(long)]
    verbose: bool,
}

#[derive(Subcommand, Debug)]
enum VerifyCmd {
    /// Every suite at its standard range.
    All {
        #[command(flatten)]
        opts: VerifyOpts,
    },
    /// FCPs of the (2,2,2,2)-box against filtered order ideals.
    Baseline {
        #[command(flatten)]
        opts: VerifyOpts,
    },
    /// Generating function against the recursion and exhaustive search.
    Genfun {
        #[arg(long, default_value_t = 8)]
        max_degree: usize,
        #[arg(long, default_value_t = 4096)]
        max_cells: usize,
        #[arg(long, default_value_t = 216)]
        listing_cells: usize,
        #[command(flatten)]
        opts: VerifyOpts,
    },
    /// Path bijection round trips.
    Paths {
        #[arg(long, default_value_t = 6)]
        max_total: usize,
        #[arg(long, default_value_t = 3)]
        max_dim: usize,
        #[command(flatten)]
        opts: VerifyOpts,
    },
    /// Odd-side vanishing and odd-layer deletion.
    Parity {
        #[arg(long, default_value_t = 64)]
        max_cells: usize,
        #[command(flatten)]
        opts: VerifyOpts,
    },
    /// Quasi-symmetric, self- and transpose-complementary QCPP counts.
    Qcpp {
        #[arg(long, default_value_t = 3)]
        max_side: usize,
        #[arg(long, default_value_t = 6)]
        qs_total: usize,
        #[command(flatten)]
        opts: VerifyOpts,
    },
    /// QTC(n,n,c) = SYM(n,n,c) = symmetric product formula.
    QtcSpp {
        #[arg(long, default_value_t = 4)]
        n_max: usize,
        #[arg(long, default_value_t = 5)]
        c_max: usize,
        #[command(flatten)]
        opts: VerifyOpts,
    },
    /// 2^(n-1) TC(n,n,2c) = SPP(n-1,n-1,2c+1) for 2 <= n <= n-max, 1 <= c <= c-max.
    TcSpp {
        #[arg(long, default_value_t = 3)]
        n_max: usize,
        #[arg(long, default_value_t = 2)]
        c_max: usize,
        #[command(flatten)]
        opts: VerifyOpts,
    },
    /// Hat-map weights, determinants and the product evaluation.
    Dets {
        #[arg(long, default_value_t = 4)]
        n_max: usize,
        #[arg(long, default_value_t = 2)]
        c_max: usize,
        #[command(flatten)]
        opts: VerifyOpts,
    },
    /// Brute force, closed formulas and the embedded reference table.
    Conjectures {
        /// Restrict to one class; the default runs the standard ranges.
        #[arg(long)]
        class: Option<ConjectureClass>,
        #[arg(long, default_value_t = 3)]
        a_max: usize,
        #[arg(long, default_value_t = 4)]
        c_max: usize,
        #[command(flatten)]
        opts: VerifyOpts,
    },
    /// MacMahon q-product against q-enumeration.
    Macmahon {
        #[arg(long, default_value_t = 3)]
        max_side: usize,
        #[command(flatten)]
        opts: VerifyOpts,
    },
}

#[derive(Args, Debug)]
struct TableArgs {
    class: ConjectureClass,
    #[arg(long, default_value_t = 3)]
    a_max: usize,
    #[arg(long, default_value_t = 4)]
    c_max: usize,
    #[arg(long, value_enum, default_value_t = Source::Computed)]
    source: Source,
    #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
    format: TableFormat,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Source {
    /// Brute-force enumeration.
    Computed,
    /// Closed formula.
    Formula,
    /// Embedded reference table; missing cells are skipped.
    Table,
}

enum Outcome {
    Ok(String),
    Failed(String),
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(Outcome::Ok(out)) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Ok(Outcome::Failed(out)) => {
            print!("{out}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            let budget = e
                .chain()
                .any(|c| matches!(c.downcast_ref::<fcp_core::Error>(), Some(fcp_core::Error::BudgetExceeded(_))));
            ExitCode::from(if budget { 3 } else { 2 })
        }
    }
}

fn run(cli: &Cli) -> Result<Outcome> {
    let budget = cli.budget;
    let out = match &cli.command {
        Command::Count(CountCmd::Fcp { dims }) => format!("{}\n", count_fcp(&BoxDims::new(dims.clone())?)),
        Command::Count(CountCmd::Class { class, dims }) => {
            let tag: ClassTag = class.parse()?;
            let class = SymmetryClass::new(tag, BoxDims::new(dims.clone())?)?;
            format!("{}\n", count_class(&class, budget)?)
        }
        Command::Enumerate(EnumerateCmd::Fcp { dims, format }) => {
            let all = enumerate_fcp(&BoxDims::new(dims.clone())?);
            match format {
                Format::Text => {
                    let blocks: Vec<String> = all.iter().map(fcp_text).collect();
                    let mut s = format!("{} FCPs\n", all.len());
                    for b in blocks {
                        s.push('\n');
                        s.push_str(&b);
                        s.push('\n');
                    }
                    s
                }
                Format::Json => {
                    let items: Vec<Value> = all.iter().map(fcp_json).collect();
                    pretty(&json!({ "count": all.len(), "fcps": items }))?
                }
            }
        }
        Command::Path(PathCmd::To { dims, array, format }) => {
            let n = BoxDims::new(dims.clone())?;
            let pi = match array {
                None => Fcp::Empty,
                Some(text) => Fcp::Array(parse_array(text, 2 * n.height() as u32)?),
            };
            let path = fcp_to_path(&pi, &n)?;
            match format {
                Format::Text => format!("{path}\n"),
                Format::Json => pretty(&serde_json::to_value(&path)?)?,
            }
        }
        Command::Path(PathCmd::From { start, steps, format }) => {
            let path = LatticePath::new(start.clone(), steps.clone())?;
            let pi = path_to_fcp(&path)?;
            match format {
                Format::Text => format!("box {:?}\n{}\n", path.end(), fcp_text(&pi)),
                Format::Json => pretty(&json!({ "box": path.end(), "fcp": fcp_json(&pi) }))?,
            }
        }
        Command::Series(SeriesCmd::Fcp { dim, cap, format }) => {
            if *dim == 0 {
                bail!("--dim must be at least 1");
            }
            series_out(&expand_fcp_genfun(*dim, *cap)?, *format)?
        }
        Command::Series(SeriesCmd::Qs { cap, format }) => series_out(&expand_qs_genfun(*cap)?, *format)?,
        Command::Series(SeriesCmd::Macmahon { dims, format }) => {
            let [a, b, c] = three(dims)?;
            let q = macmahon_box_q(a, b, c)?;
            match format {
                Format::Text => {
                    let mut s = String::new();
                    for (k, v) in q.coeffs().iter().enumerate() {
                        writeln!(s, "{k} {v}")?;
                    }
                    s
                }
                Format::Json => {
                    let coeffs: Vec<String> = q.coeffs().iter().map(ToString::to_string).collect();
                    pretty(&json!({ "box": [a, b, c], "coefficients": coeffs }))?
                }
            }
        }
        Command::Verify(cmd) => return verify_cmd(cmd, budget),
        Command::Table(args) => table(args, budget)?,
    };
    Ok(Outcome::Ok(out))
}

fn three(dims: &[usize]) -> Result<[usize; 3]> {
    <[usize; 3]>::try_from(dims).map_err(|_| anyhow!("--box needs three sides a,b,c, got {}", dims.len()))
}

fn pretty(v: &Value) -> Result<String> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

fn fcp_text(pi: &Fcp) -> String {
    match pi {
        Fcp::Empty => "empty".to_string(),
        Fcp::Array(p) => p.to_string(),
    }
}

fn fcp_json(pi: &Fcp) -> Value {
    match pi {
        Fcp::Empty => Value::Null,
        Fcp::Array(p) => nest(p.shape(), p.entries()),
    }
}

fn nest(shape: &[usize], entries: &[u32]) -> Value {
    match shape {
        [] => json!(entries[0]),
        [_] => json!(entries),
        [rows, rest @ ..] => {
            let inner: usize = rest.iter().product();
            Value::Array((0..*rows).map(|i| nest(rest, &entries[i * inner..(i + 1) * inner])).collect())
        }
    }
}

fn parse_array(text: &str, height_cap: u32) -> Result<PartitionArray> {
    fn walk(v: &Value, depth: usize, shape: &mut Vec<usize>, entries: &mut Vec<u32>) -> Result<()> {
        match v {
            Value::Array(items) => {
                if shape.len() == depth {
                    shape.push(items.len());
                } else if shape.get(depth) != Some(&items.len()) {
                    bail!("ragged array at depth {depth}");
                }
                for item in items {
                    walk(item, depth + 1, shape, entries)?;
                }
                Ok(())
            }
            Value::Number(n) => {
                if depth != shape.len() {
                    bail!("entry at depth {depth}, expected depth {}", shape.len());
                }
                let x = n.as_u64().and_then(|x| u32::try_from(x).ok()).ok_or_else(|| anyhow!("bad entry {n}"))?;
                entries.push(x);
                Ok(())
            }
            other => bail!("unexpected {other} in array"),
        }
    }
    let value: Value = serde_json::from_str(text).context("--array is not valid JSON")?;
    let (mut shape, mut entries) = (Vec::new(), Vec::new());
    walk(&value, 0, &mut shape, &mut entries)?;
    Ok(PartitionArray::new(shape, entries, height_cap)?)
}

fn series_out(s: &TruncatedSeries, format: Format) -> Result<String> {
    match format {
        Format::Text => {
            let mut out = String::new();
            for (exp, c) in s.terms() {
                let e: Vec<String> = exp.iter().map(ToString::to_string).collect();
                writeln!(out, "{} {c}", e.join(","))?;
            }
            Ok(out)
        }
        Format::Json => Ok(s.to_json() + "\n"),
    }
}

fn verify_cmd(cmd: &VerifyCmd, budget: u64) -> Result<Outcome> {
    let (reports, opts) = match cmd {
        VerifyCmd::All { opts } => (verify::all_suites(budget)?, opts),
        VerifyCmd::Baseline { opts } => (vec![verify::fcp_baseline()], opts),
        VerifyCmd::Genfun {
            max_degree,
            max_cells,
            listing_cells,
            opts,
        } => (vec![verify::genfun_suite(*max_degree, *max_cells, *listing_cells)?], opts),
        VerifyCmd::Paths { max_total, max_dim, opts } => (vec![verify::path_suite(*max_total, *max_dim)?], opts),
        VerifyCmd::Parity { max_cells, opts } => (vec![verify::parity_suite(*max_cells)?], opts),
        VerifyCmd::Qcpp { max_side, qs_total, opts } => {
            (vec![verify::qcpp_suite(*max_side, *qs_total, budget)?], opts)
        }
        VerifyCmd::QtcSpp { n_max, c_max, opts } => (vec![verify::qtc_spp_suite(*n_max, *c_max, budget)?], opts),
        VerifyCmd::TcSpp { n_max, c_max, opts } => {
            let points: Vec<(usize, usize)> = (2..=*n_max).flat_map(|n| (1..=*c_max).map(move |c| (n, c))).collect();
            (vec![verify::tc_spp_suite(&points, budget)?], opts)
        }
        VerifyCmd::Dets { n_max, c_max, opts } => {
            let kr_n = n_max + 2;
            let kr_c = 2 * c_max;
            let hat_c = 2 * c_max + 1;
            (
                vec![verify::determinant_suite(*n_max, hat_c, *n_max, *c_max, kr_n, kr_c, budget)?],
                opts,
            )
        }
        VerifyCmd::Conjectures {
            class,
            a_max,
            c_max,
            opts,
        } => {
            let ranges = match class {
                Some(c) => vec![(*c, *a_max, *c_max)],
                None => verify::standard_conjecture_ranges(),
            };
            (vec![verify::conjecture_suite(&ranges, budget)], opts)
        }
        VerifyCmd::Macmahon { max_side, opts } => (vec![verify::macmahon_suite(*max_side)?], opts),
    };
    let ok = reports.iter().all(SuiteReport::passed);
    let out = match opts.format {
        Format::Json => pretty(&serde_json::to_value(&reports)?)?,
        Format::Text => {
            let mut s = String::new();
            for r in &reports {
                let failed = r.failures().count();
                let verdict = if failed == 0 { "PASS" } else { "FAIL" };
                writeln!(s, "{verdict} {}: {} checks, {failed} failed", r.suite, r.checks.len())?;
                for c in &r.checks {
                    if opts.verbose || !c.passed {
                        let mark = if c.passed { "ok" } else { "FAIL" };
                        writeln!(s, "  {mark} {}: expected {}, got {}", c.label, c.expected, c.actual)?;
                    }
                }
            }
            s
        }
    };
    Ok(if ok { Outcome::Ok(out) } else { Outcome::Failed(out) })
}

fn table(args: &TableArgs, budget: u64) -> Result<String> {
    let reference = CountTable::reference();
    let mut rows = Vec::new();
    for a in 1..=args.a_max {
        let f = formula(args.class, a);
        for c in 0..=args.c_max {
            let value = match args.source {
                Source::Computed => compute_count(args.class, a, c, budget)?.to_string(),
                Source::Formula => {
                    let f = f.as_ref().ok_or_else(|| anyhow!("no closed formula for {} at a = {a}", args.class))?;
                    eval_conjecture(f, c)?.to_string()
                }
                Source::Table => match reference.get(args.class, a, c) {
                    Some(v) => v.to_string(),
                    None => continue,
                },
            };
            rows.push((a, c, value));
        }
    }
    match args.format {
        TableFormat::Csv => {
            let mut s = String::from("a,c,value\n");
            for (a, c, v) in &rows {
                writeln!(s, "{a},{c},{v}")?;
            }
            Ok(s)
        }
        TableFormat::Json => {
            let rows: Vec<Value> = rows.iter().map(|(a, c, v)| json!({ "a": a, "c": c, "value": v })).collect();
            pretty(&json!({ "class": args.class.name(), "rows": rows }))
        }
    }
}
