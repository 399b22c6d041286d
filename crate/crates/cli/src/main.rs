mod input;
mod verify;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use hullkit::tables::{table_rows, TableKind, TableRow};
use hullkit::{
    eaqecc_from_code, hull, information_set, make_lcd, min_distance, propagate_eaqecc, propagate_subsystem,
    subsystem_from_code, BoundVerdict, Budget, DeriveMode, EaqeccParams, Error, InnerProduct, LinearCode, ParamRecord,
    PropagateOptions, SubsystemParams,
};
use input::{construction_text, load_code, IndexList};
use serde_json::json;

#[derive(Parser)]
#[command(name = "qctl", version, about = "Hermitian hulls, propagation rules and quantum code tables")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Ip {
    Euclid,
    Hermitian,
}

impl From<Ip> for InnerProduct {
    fn from(ip: Ip) -> Self {
        match ip {
            Ip::Euclid => InnerProduct::Euclidean,
            Ip::Hermitian => InnerProduct::Hermitian,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Puncture,
    Shorten,
}

impl From<Mode> for DeriveMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Puncture => DeriveMode::Puncture,
            Mode::Shorten => DeriveMode::Shorten,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum QuantumKind {
    Eaqecc,
    Subsystem,
}

#[derive(Args)]
struct Common {
    /// Output format.
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Write output here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Maximum number of codewords visited by a weight search.
    #[arg(long)]
    budget: Option<u64>,
}

impl Common {
    fn budget(&self) -> Budget {
        self.budget.map(Budget).unwrap_or_default()
    }
}

/// Coordinates to delete: an explicit `--S` list, or the first `--s`
/// coordinates of a Hermitian hull information set.
#[derive(Args)]
struct Coords {
    #[arg(long)]
    s: Option<usize>,
    /// Explicit comma-separated index list (0-based).
    #[arg(long = "S")]
    set: Option<IndexList>,
}

impl Coords {
    fn resolve(&self, code: &LinearCode) -> Result<Vec<usize>> {
        match (&self.set, self.s) {
            (Some(set), _) => Ok(set.0.clone()),
            (None, Some(s)) => {
                let h = hull(code, InnerProduct::Hermitian)?;
                if s > h.ell {
                    bail!(Error::SOutOfRange { s, ell: h.ell });
                }
                Ok(information_set(&h.hull)[..s].to_vec())
            }
            (None, None) => bail!("give --s or --S"),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Build a GRS code, e.g. `construct grscon3 q=4 k=3` or `construct grscon1 --q 2`.
    Construct {
        #[arg(required = true, num_args = 1..)]
        spec: Vec<String>,
        #[arg(long)]
        q: Option<u32>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Length, dimension, distance and both hulls of a code.
    Inspect {
        /// Code file, construction string, or `fixture28`.
        code: String,
        #[command(flatten)]
        common: Common,
    },
    /// The hull of a code.
    Hull {
        code: String,
        #[arg(long, value_enum, default_value = "hermitian")]
        ip: Ip,
        #[command(flatten)]
        common: Common,
    },
    /// Delete coordinates.
    Puncture {
        code: String,
        #[command(flatten)]
        coords: Coords,
        #[command(flatten)]
        common: Common,
    },
    /// Keep the codewords vanishing on the coordinates, then delete them.
    Shorten {
        code: String,
        #[command(flatten)]
        coords: Coords,
        #[command(flatten)]
        common: Common,
    },
    /// Remove the whole hull by puncturing or shortening.
    Lcd {
        code: String,
        #[arg(long, value_enum, default_value = "puncture")]
        mode: Mode,
        #[arg(long, value_enum, default_value = "hermitian")]
        ip: Ip,
        #[command(flatten)]
        common: Common,
    },
    /// Entanglement-assisted code parameters of a code over GF(q^2).
    Eaqecc {
        code: String,
        #[command(flatten)]
        common: Common,
    },
    /// Subsystem code parameters of a code over GF(q^2).
    Subsystem {
        code: String,
        #[command(flatten)]
        common: Common,
    },
    /// Apply a propagation rule and report the new quantum parameters.
    Propagate {
        code: String,
        #[arg(long, value_enum, default_value = "eaqecc")]
        kind: QuantumKind,
        #[arg(long, value_enum)]
        mode: Mode,
        #[arg(long)]
        s: Option<usize>,
        /// Explicit index set inside a hull information set.
        #[arg(long = "S")]
        set: Option<IndexList>,
        /// Run the shortening rule on an impure source (distance not guaranteed).
        #[arg(long)]
        allow_impure: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Optimal entanglement-assisted code families.
    Table1(TableArgs),
    /// Optimal subsystem code families.
    Table2(TableArgs),
    /// Check the shortened-hull counterexample on the built-in [28,10,9] code.
    VerifyCounterexample {
        /// Alternative code (defaults to the built-in fixture).
        #[arg(long)]
        code: Option<String>,
        #[arg(long = "S")]
        set: Option<IndexList>,
        #[command(flatten)]
        common: Common,
    },
    /// Annotate parameters with matching known families.
    CompareKnown {
        /// JSON parameter record (as written by `eaqecc --format json`).
        #[arg(long, conflicts_with_all = ["n", "kappa", "delta", "c", "r"])]
        record: Option<PathBuf>,
        #[arg(long)]
        q: Option<u32>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        kappa: Option<usize>,
        #[arg(long)]
        delta: Option<usize>,
        #[arg(long, conflicts_with = "r")]
        c: Option<usize>,
        #[arg(long)]
        r: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args)]
struct TableArgs {
    #[arg(long)]
    q: u32,
    /// Largest k for the k-indexed families.
    #[arg(long)]
    kmax: Option<usize>,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    budget: Option<u64>,
}

/// Process outcome: 0 verified, 2 something left unverified.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Status {
    Verified,
    Unverified,
}

fn emit(out: Option<&PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn code_json(code: &LinearCode) -> serde_json::Value {
    let rows: Vec<Vec<String>> =
        (0..code.k()).map(|i| code.gen().row(i).iter().map(ToString::to_string).collect()).collect();
    json!({"field": code.field().name(), "n": code.n(), "k": code.k(), "rows": rows})
}

fn emit_code(code: &LinearCode, common: &Common) -> Result<Status> {
    let text = match common.format {
        Format::Json => format!("{:#}\n", code_json(code)),
        _ => code.to_text(),
    };
    emit(common.out.as_ref(), &text)?;
    Ok(Status::Verified)
}

fn bound_lines(bounds: &[BoundVerdict]) -> Vec<String> {
    bounds
        .iter()
        .map(|b| {
            let tight = match b.tight {
                Some(true) => ", tight",
                Some(false) => "",
                None => ", tightness unknown",
            };
            let state = if b.satisfied { "ok" } else { "VIOLATED" };
            format!("  {}: {state}, slack {}{tight}", b.bound_id, b.slack)
        })
        .collect()
}

enum Quantum {
    Ea(EaqeccParams),
    Sub(SubsystemParams),
}

impl Quantum {
    fn record(&self) -> ParamRecord {
        match self {
            Quantum::Ea(p) => p.record(),
            Quantum::Sub(p) => p.record(),
        }
    }

    fn exact(&self) -> bool {
        match self {
            Quantum::Ea(p) => p.delta_exact.is_some(),
            Quantum::Sub(p) => p.delta_exact.is_some(),
        }
    }
}

fn emit_quantum(p: &Quantum, common: &Common) -> Result<Status> {
    let (shown, bounds, provenance) = match p {
        Quantum::Ea(p) => (p.to_string(), p.check_bounds(), &p.provenance),
        Quantum::Sub(p) => (p.to_string(), p.check_bounds(), &p.provenance),
    };
    let text = match common.format {
        Format::Json => {
            let mut v = serde_json::to_value(p.record())?;
            v["bounds"] = serde_json::to_value(&bounds)?;
            format!("{v:#}\n")
        }
        _ => {
            let record = p.record();
            let (pure, optimal) = match &record {
                ParamRecord::Eaqecc { pure, optimal, .. } | ParamRecord::Subsystem { pure, optimal, .. } => {
                    (*pure, *optimal)
                }
            };
            let pure = pure.map_or("unknown".to_string(), |b| b.to_string());
            let mut lines = vec![shown, format!("pure: {pure}"), format!("optimal: {optimal}")];
            lines.push("bounds:".into());
            lines.extend(bound_lines(&bounds));
            lines.extend(provenance.iter().map(|s| format!("# {s}")));
            lines.join("\n") + "\n"
        }
    };
    emit(common.out.as_ref(), &text)?;
    Ok(if p.exact() { Status::Verified } else { Status::Unverified })
}

fn inspect(code: &LinearCode, common: &Common) -> Result<Status> {
    let budget = common.budget();
    let d = match min_distance(code, budget) {
        Ok(d) => json!({"exact": d}),
        Err(Error::BudgetExceeded { upper_bound, lower_bound }) => {
            json!({"lower": lower_bound, "upper": upper_bound})
        }
        Err(Error::NoNonzeroCodewords) => json!(null),
        Err(e) => return Err(e.into()),
    };
    let mut hulls = serde_json::Map::new();
    for ip in [InnerProduct::Euclidean, InnerProduct::Hermitian] {
        let name = match ip {
            InnerProduct::Euclidean => "euclidean",
            InnerProduct::Hermitian => "hermitian",
        };
        let entry = match hull(code, ip) {
            Ok(mut h) => {
                let d2 = match h.compute_d2(budget) {
                    Ok(d) => json!(d),
                    Err(Error::BudgetExceeded { lower_bound, .. }) => json!({"lower": lower_bound}),
                    Err(Error::NoNonzeroCodewords) => json!(null),
                    Err(e) => return Err(e.into()),
                };
                json!({"dimension": h.ell, "dual_distance": d2})
            }
            Err(Error::NotQuadraticExtension { .. }) => continue,
            Err(e) => return Err(e.into()),
        };
        hulls.insert(name.into(), entry);
    }
    let exact = d.get("exact").is_some();
    let v = json!({"field": code.field().name(), "n": code.n(), "k": code.k(), "d": d, "hulls": hulls});
    let text = match common.format {
        Format::Json => format!("{v:#}\n"),
        _ => {
            let d = match (&v["d"]["exact"], &v["d"]["lower"]) {
                (serde_json::Value::Number(n), _) => n.to_string(),
                (_, serde_json::Value::Number(lo)) => format!("between {lo} and {}", v["d"]["upper"]),
                _ => "undefined".into(),
            };
            let mut lines = vec![
                format!("[{}, {}] code over {}", code.n(), code.k(), code.field().name()),
                format!("minimum distance: {d}"),
            ];
            for (name, h) in &hulls {
                lines.push(format!("{name} hull: dimension {}, dual distance {}", h["dimension"], h["dual_distance"]));
            }
            lines.join("\n") + "\n"
        }
    };
    emit(common.out.as_ref(), &text)?;
    Ok(if exact { Status::Verified } else { Status::Unverified })
}

fn table(kind: TableKind, args: &TableArgs) -> Result<Status> {
    let budget = args.budget.map(Budget).unwrap_or_default();
    let rows = table_rows(kind, args.q, args.kmax, budget)?;
    let text = render_rows(&rows, args.format)?;
    emit(args.out.as_ref(), &text)?;
    Ok(if rows.iter().all(TableRow::verified) { Status::Verified } else { Status::Unverified })
}

fn render_rows(rows: &[TableRow], format: Format) -> Result<String> {
    Ok(match format {
        Format::Json => {
            let v: Vec<serde_json::Value> = rows.iter().map(TableRow::to_json).collect();
            format!("{:#}\n", serde_json::Value::Array(v))
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(TableRow::CSV_HEADER)?;
            for r in rows {
                w.write_record(r.csv_fields())?;
            }
            String::from_utf8(w.into_inner()?)?
        }
        Format::Text => rows
            .iter()
            .map(|r| {
                let m = r.m.map_or(String::new(), |m| format!(" m={m}"));
                let note = if r.verified() { "" } else { "  (unverified)" };
                format!("family {:>2} q={} k={}{m} s={}: {}{note}\n", r.family, r.q, r.k, r.s, r.params)
            })
            .collect(),
    })
}

fn compare_known(record: ParamRecord, common: &Common) -> Result<Status> {
    let matches = hullkit::known::compare_known(&record);
    let text = match common.format {
        Format::Json => format!("{:#}\n", json!({"record": record, "matches": matches})),
        _ if matches.is_empty() => "no known-family match\n".to_string(),
        _ => matches.iter().map(|m| format!("{m}\n")).collect(),
    };
    emit(common.out.as_ref(), &text)?;
    Ok(Status::Verified)
}

fn run(cli: Cli) -> Result<Status> {
    match cli.command {
        Command::Construct { spec, q, k, m, common } => {
            let code = input::construct(&construction_text(&spec, q, k, m))?;
            emit_code(&code, &common)
        }
        Command::Inspect { code, common } => inspect(&load_code(&code)?, &common),
        Command::Hull { code, ip, common } => emit_code(&hull(&load_code(&code)?, ip.into())?.hull, &common),
        Command::Puncture { code, coords, common } => {
            let c = load_code(&code)?;
            emit_code(&hullkit::puncture(&c, &coords.resolve(&c)?)?, &common)
        }
        Command::Shorten { code, coords, common } => {
            let c = load_code(&code)?;
            emit_code(&hullkit::shorten(&c, &coords.resolve(&c)?)?, &common)
        }
        Command::Lcd { code, mode, ip, common } => {
            emit_code(&make_lcd(&load_code(&code)?, mode.into(), ip.into())?, &common)
        }
        Command::Eaqecc { code, common } => {
            let p = eaqecc_from_code(&load_code(&code)?, common.budget())?;
            emit_quantum(&Quantum::Ea(p), &common)
        }
        Command::Subsystem { code, common } => {
            let p = subsystem_from_code(&load_code(&code)?, common.budget())?;
            emit_quantum(&Quantum::Sub(p), &common)
        }
        Command::Propagate { code, kind, mode, s, set, allow_impure, common } => {
            let c = load_code(&code)?;
            let s = match (s, &set) {
                (Some(s), _) => s,
                (None, Some(set)) => set.0.len(),
                (None, None) => bail!("give --s or --S"),
            };
            let opts = PropagateOptions { index_set: set.map(|l| l.0), allow_impure };
            let p = match kind {
                QuantumKind::Eaqecc => Quantum::Ea(propagate_eaqecc(&c, s, mode.into(), common.budget(), &opts)?),
                QuantumKind::Subsystem => {
                    Quantum::Sub(propagate_subsystem(&c, s, mode.into(), common.budget(), &opts)?)
                }
            };
            emit_quantum(&p, &common)
        }
        Command::Table1(args) => table(TableKind::Eaqecc, &args),
        Command::Table2(args) => table(TableKind::Subsystem, &args),
        Command::VerifyCounterexample { code, set, common } => {
            let c = match &code {
                Some(arg) => load_code(arg)?,
                None => hullkit::fixtures::fixture28(),
            };
            let report = verify::run(&c, set.as_ref().map(|l| l.0.as_slice()), common.budget())?;
            let text = match common.format {
                Format::Json => format!("{:#}\n", report.json),
                _ => {
                    let mut lines = report.lines.clone();
                    lines.extend(report.mismatches.iter().map(|m| format!("MISMATCH {m}")));
                    lines.push(if report.passed() { "PASS".into() } else { "FAIL".into() });
                    lines.join("\n") + "\n"
                }
            };
            emit(common.out.as_ref(), &text)?;
            if !report.passed() {
                bail!(Error::ContractViolation(format!(
                    "counterexample check failed: {}",
                    report.mismatches.join("; ")
                )));
            }
            Ok(Status::Verified)
        }
        Command::CompareKnown { record, q, n, kappa, delta, c, r, common } => {
            let rec = match record {
                Some(path) => {
                    let text = std::fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?;
                    serde_json::from_str(&text).context("parsing parameter record")?
                }
                None => {
                    let need = |v: Option<usize>, name: &str| v.with_context(|| format!("missing --{name}"));
                    let q = q.context("missing --q")?;
                    let (n, kappa, delta) = (need(n, "n")?, need(kappa, "kappa")?, need(delta, "delta")?);
                    match (c, r) {
                        (Some(c), None) => ParamRecord::Eaqecc {
                            q,
                            n,
                            kappa,
                            delta,
                            delta_exact: true,
                            c,
                            pure: None,
                            optimal: false,
                            provenance: vec![],
                        },
                        (None, Some(r)) => ParamRecord::Subsystem {
                            q,
                            n,
                            kappa,
                            r,
                            delta,
                            delta_exact: true,
                            pure: None,
                            optimal: false,
                            provenance: vec![],
                        },
                        _ => bail!("give exactly one of --c (EAQECC) or --r (subsystem)"),
                    }
                }
            };
            compare_known(rec, &common)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(Status::Verified) => ExitCode::SUCCESS,
        Ok(Status::Unverified) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
