//! `compshuffle` command-line front end.
//!
//! Exit codes: 0 on success, 1 when a verification check fails, 2 on usage
//! errors (malformed literals, out-of-range sizes).

use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{CommandFactory, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use compshuffle::creation::{build_b, build_c, e_nk, hall_littlewood_qp};
use compshuffle::dyck::{combinatorial_side, enumerate_paths, Flavor, PathFilter, Side};
use compshuffle::macdonald::{macd_basis, nabla, nabla_pair, nabla_q1};
use compshuffle::verify::{catalog_ids, render_table, run_suite, Status};
use compshuffle::{Basis, Composition, Partition, Scalar, Sym};

/// Largest degree accepted for plain expansions.
const MAX_EXPAND: u32 = 10;
/// Largest degree accepted where the Macdonald basis has to be built.
const MAX_MACD: u32 = 7;
/// Largest path size accepted for enumeration.
const MAX_PATHS: u32 = 12;
/// Largest `--nmax` accepted by `verify`.
const MAX_VERIFY: u32 = 8;

#[derive(Parser)]
#[command(name = "compshuffle", version, about = "Composition-indexed Hall-Littlewood families, nabla and Dyck path statistics")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Expand a family member in a basis.
    ///
    /// FAMILY is one of B, C (composition index), E (index [n,k]),
    /// Q (modified Hall-Littlewood, partition index), H (modified Macdonald,
    /// partition index) or a basis letter e, h, s, p, m (partition index).
    Expand {
        family: Family,
        index: String,
        #[arg(long, default_value = "s", value_parser = parse_basis)]
        basis: Basis,
    },
    /// Apply nabla to a family member, optionally pairing the result with a basis element.
    Nabla {
        family: Family,
        index: String,
        #[arg(long, default_value = "s", value_parser = parse_basis)]
        basis: Basis,
        /// Pair the result with this element, e.g. `e3` or `s[2,1]`.
        #[arg(long, value_parser = parse_element)]
        pair: Option<Sym>,
        /// Use the q = 1 specialization of nabla.
        #[arg(long)]
        q1: bool,
    },
    /// List Dyck paths of size N with their statistics as TSV.
    Paths {
        n: u32,
        /// Keep only paths whose touch composition equals this one.
        #[arg(long, value_parser = parse_composition, conflicts_with = "below")]
        touch: Option<Composition>,
        /// Keep only paths weakly below the path of this composition.
        #[arg(long, value_parser = parse_composition)]
        below: Option<Composition>,
        /// Composition used for the doff column (defaults to the filter's).
        #[arg(long, value_parser = parse_composition)]
        doff: Option<Composition>,
    },
    /// Print a q,t-polynomial table.
    Table {
        #[arg(ignore_case = true)]
        kind: TableKind,
        n: u32,
    },
    /// Run the verification catalog.
    Verify {
        #[arg(long, default_value_t = 5)]
        nmax: u32,
        /// Comma-separated check ids.
        #[arg(long, value_delimiter = ',')]
        only: Option<Vec<String>>,
    },
    /// Print the modified Macdonald basis of degree N.
    Macd {
        n: u32,
        #[arg(long, default_value = "s", value_parser = parse_basis)]
        basis: Basis,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableKind {
    /// `nabla e_n` paired with `e_n`, for n = 1..N.
    NablaCatalan,
    /// Schur coefficients of B_α over all compositions of N.
    B,
    /// Schur coefficients of C_α over all compositions of N.
    C,
    /// Path-side q,t-polynomial of the B conjecture for each composition of N.
    ConjB,
    /// Path-side q,t-polynomial of the C conjecture for each composition of N.
    ConjC,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Family {
    B,
    C,
    E,
    Q,
    H,
    Basis(Basis),
}

impl std::str::FromStr for Family {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "B" => Family::B,
            "C" => Family::C,
            "E" => Family::E,
            "Q" => Family::Q,
            "H" => Family::H,
            other => Family::Basis(
                other.parse().map_err(|_| format!("unknown family `{other}` (expected B, C, E, Q, H, e, h, s, p or m)"))?,
            ),
        })
    }
}

fn parse_basis(s: &str) -> Result<Basis, String> {
    s.parse().map_err(|e: compshuffle::Error| e.to_string())
}

fn parse_composition(s: &str) -> Result<Composition, String> {
    s.parse().map_err(|e: compshuffle::Error| e.to_string())
}

/// `e3`, `h[2,1]`, `s[2,1]`: a basis letter followed by a part or a partition.
fn parse_element(s: &str) -> Result<Sym, String> {
    let s = s.trim();
    let (letter, rest) = s.split_at(s.chars().next().map_or(0, char::len_utf8));
    let basis = parse_basis(letter)?;
    let lambda: Partition = if rest.starts_with('[') {
        rest.parse().map_err(|e: compshuffle::Error| e.to_string())?
    } else {
        let n: u32 = rest.parse().map_err(|_| format!("expected `{letter}N` or `{letter}[..]`, got `{s}`"))?;
        Partition::new(if n == 0 { vec![] } else { vec![n] }).map_err(|e| e.to_string())?
    };
    if lambda.size() > MAX_EXPAND {
        return Err(format!("degree {} exceeds the limit {MAX_EXPAND}", lambda.size()));
    }
    Ok(Sym::basis_element(basis, lambda))
}

fn usage(msg: impl std::fmt::Display) -> ! {
    Cli::command().error(ErrorKind::ValueValidation, msg).exit()
}

fn check_size(what: &str, n: u32, max: u32) {
    if n > max {
        usage(format!("{what} {n} exceeds the limit {max}"));
    }
}

/// Validates `index` against `family` and builds the element.
fn member(family: Family, index: &str, max: u32) -> Sym {
    let comp = || index.parse::<Composition>().unwrap_or_else(|e| usage(e));
    let part = || index.parse::<Partition>().unwrap_or_else(|e| usage(e));
    match family {
        Family::B | Family::C => {
            let alpha = comp();
            check_size("degree", alpha.size(), max);
            if family == Family::B {
                build_b(&alpha)
            } else {
                build_c(&alpha)
            }
        }
        Family::E => {
            let nums: Option<Vec<u32>> = index
                .trim()
                .strip_prefix('[')
                .and_then(|r| r.strip_suffix(']'))
                .and_then(|inner| inner.split(',').map(|x| x.trim().parse::<u32>().ok()).collect());
            let Some(&[n, k]) = nums.as_deref() else { usage(format!("E takes an index `[n,k]`, got `{index}`")) };
            check_size("degree", n, max);
            if k > n {
                usage(format!("E index needs k <= n, got `{index}`"));
            }
            e_nk(n, k).unwrap_or_else(|e| usage(e))
        }
        Family::Q => {
            let lambda = part();
            check_size("degree", lambda.size(), max);
            hall_littlewood_qp(&lambda)
        }
        Family::H => {
            let mu = part();
            check_size("degree", mu.size(), max.min(MAX_MACD));
            macd_basis(mu.size()).get(&mu).expect("partition of the table's degree")
        }
        Family::Basis(b) => {
            let lambda = part();
            check_size("degree", lambda.size(), max);
            Sym::basis_element(b, lambda)
        }
    }
}

fn sym_value(f: &Sym, basis: Basis, format: Format) -> (String, Value) {
    let g = f.to_basis(basis);
    match format {
        Format::Text => (g.to_string(), Value::Null),
        Format::Json => (String::new(), g.to_json()),
    }
}

fn emit(format: Format, text: String, value: Value) {
    let out = match format {
        Format::Text => text,
        Format::Json => serde_json::to_string_pretty(&value).expect("json values serialize"),
    };
    // A closed pipe (`| head`) is not an error worth a panic.
    let _ = writeln!(std::io::stdout().lock(), "{out}");
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    match cli.command {
        Command::Expand { family, index, basis } => {
            let f = member(family, &index, MAX_EXPAND);
            let (text, value) = sym_value(&f, basis, format);
            emit(format, text, json!({ "index": index, "value": value }));
        }
        Command::Nabla { family, index, basis, pair, q1 } => {
            let f = member(family, &index, MAX_MACD);
            let g = if q1 { nabla_q1(&f).unwrap_or_else(|e| usage(e)) } else { nabla(&f) };
            match pair {
                Some(p) => {
                    let v = if q1 { g.hall_inner(&p) } else { nabla_pair(&f, &p) };
                    emit(format, v.to_string(), json!({ "index": index, "pair": v.to_string() }));
                }
                None => {
                    let (text, value) = sym_value(&g, basis, format);
                    emit(format, text, json!({ "index": index, "value": value }));
                }
            }
        }
        Command::Paths { n, touch, below, doff } => {
            check_size("path size", n, MAX_PATHS);
            for alpha in [&touch, &below, &doff].into_iter().flatten() {
                if alpha.size() != n {
                    usage(format!("composition {alpha} is not of size {n}"));
                }
            }
            let filter = match (&touch, &below) {
                (Some(a), _) => PathFilter::TouchEq(a.clone()),
                (_, Some(a)) => PathFilter::Below(a.clone()),
                _ => PathFilter::All,
            };
            let doff_alpha = doff.or(touch).or(below);
            let paths = enumerate_paths(n, &filter).expect("sizes validated above");
            let rows: Vec<(String, u64, u64, String, Option<u64>)> = paths
                .iter()
                .map(|d| {
                    let arm = format!("({})", d.arm().iter().map(u32::to_string).collect::<Vec<_>>().join(","));
                    let doff = doff_alpha.as_ref().and_then(|a| d.doff(a).ok());
                    (arm, d.area(), d.dinv(), d.touch().to_string(), doff)
                })
                .collect();
            let mut text = String::from("arm\tarea\tdinv\ttouch\tdoff");
            for (arm, area, dinv, touch, doff) in &rows {
                let doff = doff.map_or_else(|| "-".to_string(), |v| v.to_string());
                text.push_str(&format!("\n{arm}\t{area}\t{dinv}\t{touch}\t{doff}"));
            }
            let value: Vec<Value> = rows
                .iter()
                .map(|(arm, area, dinv, touch, doff)| json!({ "arm": arm, "area": area, "dinv": dinv, "touch": touch, "doff": doff }))
                .collect();
            emit(format, text, Value::Array(value));
        }
        Command::Table { kind, n } => {
            check_size("degree", n, if kind == TableKind::NablaCatalan { MAX_MACD } else { MAX_EXPAND });
            let (text, value) = table(kind, n);
            emit(format, text, value);
        }
        Command::Verify { nmax, only } => {
            check_size("nmax", nmax, MAX_VERIFY);
            let known = catalog_ids();
            if let Some(ids) = &only {
                if let Some(bad) = ids.iter().find(|id| !known.contains(&id.as_str())) {
                    usage(format!("unknown check `{bad}` (known: {})", known.join(", ")));
                }
            }
            let ids: Option<Vec<&str>> = only.as_ref().map(|v| v.iter().map(String::as_str).collect());
            let reports = run_suite(nmax, ids.as_deref()).unwrap_or_else(|e| usage(e));
            let value = Value::Array(reports.iter().map(|r| r.to_json()).collect());
            emit(format, render_table(&reports).trim_end().to_string(), value);
            if reports.iter().any(|r| r.status == Status::Fail) {
                return ExitCode::from(1);
            }
        }
        Command::Macd { n, basis } => {
            check_size("degree", n, MAX_MACD);
            let table = macd_basis(n);
            let mut text = Vec::new();
            let mut rows = Vec::new();
            for (mu, h) in table.rows() {
                let (t, v) = sym_value(&h, basis, format);
                text.push(format!("H{mu} = {t}"));
                rows.push(json!({ "mu": mu.parts(), "value": v }));
            }
            emit(format, text.join("\n"), json!({ "degree": n, "rows": rows }));
        }
    }
    ExitCode::SUCCESS
}

fn table(kind: TableKind, n: u32) -> (String, Value) {
    match kind {
        TableKind::NablaCatalan => {
            let rows: Vec<(u32, Scalar)> = (1..=n)
                .map(|k| {
                    let e = Sym::e(k as i64);
                    (k, nabla_pair(&e, &e))
                })
                .collect();
            let text = rows.iter().map(|(k, v)| format!("{k}\t{v}")).collect::<Vec<_>>().join("\n");
            let value = rows.iter().map(|(k, v)| json!({ "n": k, "value": v.to_string() })).collect();
            (text, Value::Array(value))
        }
        TableKind::B | TableKind::C => {
            let cols = Partition::all(n);
            let mut text = std::iter::once("alpha".to_string()).chain(cols.iter().map(|c| c.to_string())).collect::<Vec<_>>().join("\t");
            let mut rows = Vec::new();
            for alpha in Composition::all(n) {
                let f = if kind == TableKind::B { build_b(&alpha) } else { build_c(&alpha) }.to_basis(Basis::S);
                let cells: Vec<String> = cols.iter().map(|c| f.coeff(c).to_string()).collect();
                text.push_str(&format!("\n{alpha}\t{}", cells.join("\t")));
                rows.push(json!({ "alpha": alpha.parts(), "coeffs": cells }));
            }
            let cols: Vec<&[u32]> = cols.iter().map(Partition::parts).collect();
            (text, json!({ "columns": cols, "rows": rows }))
        }
        TableKind::ConjB | TableKind::ConjC => {
            let flavor = if kind == TableKind::ConjB { Flavor::BScalar } else { Flavor::CScalar };
            let mut text = String::from("alpha\tvalue");
            let mut rows = Vec::new();
            for alpha in Composition::all(n) {
                let Ok(Side::Scalar(v)) = combinatorial_side(&alpha, flavor) else { unreachable!("scalar flavor") };
                text.push_str(&format!("\n{alpha}\t{v}"));
                rows.push(json!({ "alpha": alpha.parts(), "value": v.to_string() }));
            }
            (text, Value::Array(rows))
        }
    }
}

