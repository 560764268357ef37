use std::fmt::Write as _;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use tribo_core::genfunc::{gf_vs_direct, q_gf, w_gf, GFVariant, XMode};
use tribo_core::incomplete::{incomplete_tl_poly, incomplete_tribonacci_poly, IncompleteFamily, TlMethod};
use tribo_core::poly::parse_rational;
use tribo_core::sequences::{tribonacci_lucas_numbers, tribonacci_lucas_poly, tribonacci_numbers, tribonacci_poly};
use tribo_core::verify::{self, SweepRange};
use tribo_core::{Error as CoreError, Rational};

mod render;

/// Output schema version stamped into every JSON document.
const SCHEMA_VERSION: u32 = 1;

#[derive(Parser)]
#[command(name = "tribo", version, about = "Tribonacci and Tribonacci-Lucas families, exactly")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print T_n or K_n for from <= n <= to.
    Seq {
        family: SeqFamily,
        from: usize,
        to: usize,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Print T_n(x) or K_n(x).
    Poly {
        family: PolyFamily,
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Reproduce one of the four tables.
    Table {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=4))]
        which: u8,
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u64).range(1..))]
        rows: u64,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Incomplete polynomial, or its exact value at x.
    Incomplete {
        family: PolyFamily,
        n: usize,
        s: usize,
        #[arg(long, value_parser = rational_arg)]
        x: Option<Rational>,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Expand a generating function and compare it with the direct values.
    Gf {
        family: GfFamily,
        s: usize,
        order: usize,
        #[arg(long, value_enum, default_value_t = Variant::Corrected)]
        variant: Variant,
        #[arg(long, value_parser = rational_arg)]
        x: Option<Rational>,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Run the identity suite.
    Verify {
        /// Identity to run; repeatable. All identities when absent.
        #[arg(long = "id")]
        ids: Vec<String>,
        /// List the catalog and exit.
        #[arg(long)]
        list: bool,
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long)]
        n_max_poly: Option<usize>,
        #[arg(long)]
        s_max: Option<usize>,
        #[arg(long)]
        h_max: Option<usize>,
        #[arg(long)]
        order: Option<usize>,
        /// Comma-separated evaluation points, e.g. `1,2,1/2`.
        #[arg(long, value_delimiter = ',', value_parser = rational_arg)]
        x_points: Option<Vec<Rational>>,
        #[arg(long)]
        no_symbolic: bool,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Print the documented discrepancies of the printed formulas.
    Errata {
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
    Csv,
    Bfile,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SeqFamily {
    Tribonacci,
    TribonacciLucas,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PolyFamily {
    Tribonacci,
    Tl,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GfFamily {
    IncTribonacci,
    IncTl,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Variant {
    Corrected,
    Printed,
}

fn rational_arg(text: &str) -> Result<Rational, String> {
    parse_rational(text).ok_or_else(|| format!("expected an integer or p/q, got `{text}`"))
}

/// Bad input detected after argument parsing; exits with status 2.
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    Usage(msg.into()).into()
}

/// Domain errors from the library are the caller's fault.
fn lift(err: CoreError) -> anyhow::Error {
    match err {
        CoreError::Domain(m) => usage(m),
        CoreError::UnknownIdentity(id) => usage(format!("unknown identity id `{id}`")),
        other => other.into(),
    }
}

fn no_format<T>(format: Format, cmd: &str) -> anyhow::Result<T> {
    Err(usage(format!("--format {} is not available for `{cmd}`", format.to_possible_value().unwrap().get_name())))
}

fn with_schema(mut v: serde_json::Value) -> String {
    if let Some(map) = v.as_object_mut() {
        map.insert("schema_version".into(), json!(SCHEMA_VERSION));
    }
    let mut text = serde_json::to_string_pretty(&v).expect("json values always serialize");
    text.push('\n');
    text
}

fn cmd_seq(family: SeqFamily, from: usize, to: usize, format: Format) -> anyhow::Result<String> {
    if from > to {
        return Err(usage(format!("empty range: from ({from}) exceeds to ({to})")));
    }
    let all = match family {
        SeqFamily::Tribonacci => tribonacci_numbers(to + 1),
        SeqFamily::TribonacciLucas => tribonacci_lucas_numbers(to + 1),
    };
    let values: Vec<String> = all[from..].iter().map(ToString::to_string).collect();
    let name = family.to_possible_value().unwrap().get_name().to_string();
    Ok(match format {
        Format::Plain => values.join(" ") + "\n",
        Format::Json => with_schema(json!({ "family": name, "from": from, "to": to, "values": values })),
        Format::Csv => {
            let mut out = String::from("n,value\n");
            for (k, v) in values.iter().enumerate() {
                let _ = writeln!(out, "{},{v}", from + k);
            }
            out
        }
        Format::Bfile => {
            let mut out = String::new();
            for (k, v) in values.iter().enumerate() {
                let _ = writeln!(out, "{} {v}", from + k);
            }
            out
        }
    })
}

fn cmd_poly(family: PolyFamily, n: usize, format: Format) -> anyhow::Result<String> {
    let p = match family {
        PolyFamily::Tribonacci => tribonacci_poly(n),
        PolyFamily::Tl => tribonacci_lucas_poly(n),
    };
    let coeffs: Vec<String> = p.coeffs().iter().map(ToString::to_string).collect();
    Ok(match format {
        Format::Plain => format!("{p}\n"),
        // The exact shape `{"coeffs":[...]}` is part of the interface.
        Format::Json => serde_json::to_string(&json!({ "coeffs": coeffs }))? + "\n",
        Format::Csv => {
            let mut out = String::from("power,coeff\n");
            for (k, c) in coeffs.iter().enumerate() {
                let _ = writeln!(out, "{k},{c}");
            }
            out
        }
        Format::Bfile => return no_format(format, "poly"),
    })
}

fn cmd_table(which: u8, rows: usize, format: Format) -> anyhow::Result<String> {
    let table = render::build_table(which, rows).map_err(lift)?;
    Ok(match format {
        Format::Plain => table.plain(),
        Format::Csv => table.csv(),
        Format::Json => with_schema(table.json()),
        Format::Bfile => return no_format(format, "table"),
    })
}

fn cmd_incomplete(
    family: PolyFamily,
    n: usize,
    s: usize,
    x: Option<Rational>,
    format: Format,
) -> anyhow::Result<String> {
    let p = match family {
        PolyFamily::Tribonacci => incomplete_tribonacci_poly(n, s),
        PolyFamily::Tl => incomplete_tl_poly(n, s, TlMethod::TriangleSum),
    }
    .map_err(lift)?;
    let value = match &x {
        Some(v) => p.eval(v).to_string(),
        None => p.to_string(),
    };
    Ok(match format {
        Format::Plain => value + "\n",
        Format::Json => with_schema(json!({
            "family": family.to_possible_value().unwrap().get_name(),
            "n": n,
            "s": s,
            "x": x.map(|v| v.to_string()),
            "value": value,
        })),
        other => return no_format(other, "incomplete"),
    })
}

fn cmd_gf(
    family: GfFamily,
    s: usize,
    order: usize,
    variant: Variant,
    x: Option<Rational>,
    format: Format,
) -> anyhow::Result<String> {
    if order == 0 {
        return Err(usage("order must be >= 1"));
    }
    let variant = match variant {
        Variant::Corrected => GFVariant::Corrected,
        Variant::Printed => GFVariant::AsPrinted,
    };
    let mode = x.map_or(XMode::Symbolic, XMode::AtValue);
    let (fam, gf) = match family {
        GfFamily::IncTribonacci => (IncompleteFamily::IncTribonacci, q_gf(s, variant, &mode)),
        GfFamily::IncTl => {
            if s == 0 {
                return Err(usage("inc-tl needs s >= 1"));
            }
            (IncompleteFamily::IncTribonacciLucas, w_gf(s, variant, &mode).map_err(lift)?)
        }
    };
    let report = gf_vs_direct(fam, s, variant, &mode, order).map_err(lift)?;
    Ok(match format {
        Format::Plain => format!(
            "{}\nmatches_direct={}\n",
            render::bracketed(&report.expansion),
            report.matches()
        ),
        Format::Json => with_schema(json!({
            "family": family.to_possible_value().unwrap().get_name(),
            "s": s,
            "order": order,
            "variant": variant,
            "x": mode.to_string(),
            "coefficients": report.expansion,
            "matches_direct": report.matches(),
            "mismatches": report.mismatches,
            "gf": gf,
        })),
        other => return no_format(other, "gf"),
    })
}

fn cmd_verify(
    ids: Vec<String>,
    list: bool,
    range: SweepRange,
    format: Format,
) -> anyhow::Result<(String, bool)> {
    if list {
        let catalog = verify::list_identities();
        let text = match format {
            Format::Json => with_schema(json!({
                "identities": catalog
                    .iter()
                    .map(|e| json!({ "id": e.id, "description": e.description, "location": e.location }))
                    .collect::<Vec<_>>(),
            })),
            _ => catalog.iter().fold(String::new(), |mut out, e| {
                let _ = writeln!(out, "{:<30} {} [{}]", e.id, e.description, e.location);
                out
            }),
        };
        return Ok((text, true));
    }
    let reports = if ids.is_empty() {
        verify::run_all(&range).map_err(lift)?
    } else {
        ids.iter().map(|id| verify::run_identity(id, &range)).collect::<Result<Vec<_>, _>>().map_err(lift)?
    };
    let ok = verify::all_ok(&reports);
    let text = match format {
        Format::Plain => verify::render_table(&reports),
        Format::Json => with_schema(json!({ "range": range, "reports": reports, "ok": ok })),
        other => return no_format(other, "verify"),
    };
    Ok((text, ok))
}

fn cmd_errata(format: Format) -> anyhow::Result<String> {
    let report = verify::errata_report().context("building the errata report")?;
    Ok(match format {
        Format::Plain => report.to_string(),
        Format::Json => with_schema(serde_json::to_value(&report)?),
        other => return no_format(other, "errata"),
    })
}

fn run(cli: Cli) -> anyhow::Result<(String, bool)> {
    let done = |text: String| (text, true);
    Ok(match cli.command {
        Command::Seq { family, from, to, format } => done(cmd_seq(family, from, to, format)?),
        Command::Poly { family, n, format } => done(cmd_poly(family, n, format)?),
        Command::Table { which, rows, format } => done(cmd_table(which, rows as usize, format)?),
        Command::Incomplete { family, n, s, x, format } => done(cmd_incomplete(family, n, s, x, format)?),
        Command::Gf { family, s, order, variant, x, format } => done(cmd_gf(family, s, order, variant, x, format)?),
        Command::Verify { ids, list, n_max, n_max_poly, s_max, h_max, order, x_points, no_symbolic, format } => {
            let d = SweepRange::default();
            let range = SweepRange {
                n_max: n_max.unwrap_or(d.n_max),
                n_max_poly: n_max_poly.unwrap_or(d.n_max_poly),
                s_max: s_max.unwrap_or(d.s_max),
                h_max: h_max.unwrap_or(d.h_max),
                order: order.unwrap_or(d.order),
                x_points: x_points.unwrap_or(d.x_points),
                include_symbolic: !no_symbolic,
            };
            cmd_verify(ids, list, range, format)?
        }
        Command::Errata { format } => done(cmd_errata(format)?),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((text, ok)) => {
            print!("{text}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            if err.is::<Usage>() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
