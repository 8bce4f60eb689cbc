use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use colored_eulerian::colored_perms::{
    binomial_eulerian, binomial_eulerian_pm, derangement_poly, eulerian_poly, gamma_tilde_formula, DerangementMethod,
    Statistic,
};
use colored_eulerian::polyring::{gamma_expansion, IntPolynomial};
use colored_eulerian::simplicial::{SimplicialComplex, Triangulation};
use colored_eulerian::symfunc::{named_series, SeriesName, SymF, ZSeries};
use colored_eulerian::util::{check_budget, DEFAULT_BUDGET};
use colored_eulerian::verify::{self, Bounds, Suite};
use colored_eulerian::Error;

#[derive(Parser)]
#[command(
    name = "coleuler",
    version,
    about = "Colored Eulerian polynomials, triangulations and symmetric-function series"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    /// Largest group order `r^n n!` that may be enumerated
    #[arg(long, default_value_t = DEFAULT_BUDGET, global = true)]
    budget: u128,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Print one polynomial
    Poly {
        #[arg(value_enum)]
        kind: PolyKind,
        #[arg(short)]
        n: usize,
        #[arg(short, default_value_t = 1)]
        r: usize,
        /// Complex used by `h` and `local-h`
        #[arg(long, value_enum, default_value_t = ComplexKind::GammaNr)]
        complex: ComplexKind,
        /// Also print the gamma-vector when the polynomial is palindromic
        #[arg(long)]
        gamma: bool,
    },
    /// Expand a named generating function
    Series {
        name: String,
        #[arg(short, default_value_t = 1)]
        r: usize,
        /// Truncation order in z
        #[arg(short = 'N', default_value_t = 6)]
        truncation: usize,
        #[arg(long, value_enum, default_value_t = Basis::P)]
        basis: Basis,
        /// Print `n! ex*` of each coefficient instead of the symmetric functions
        #[arg(long)]
        exstar: bool,
    },
    /// Run a verification suite
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        #[arg(long, default_value_t = 3)]
        max_r: usize,
        #[arg(short = 'N', default_value_t = 5)]
        truncation: usize,
    },
    /// Dump the facets of a complex
    Complex {
        #[arg(value_enum)]
        kind: ComplexKind,
        #[arg(short)]
        n: usize,
        #[arg(short, default_value_t = 1)]
        r: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PolyKind {
    Eulerian,
    Derangement,
    Binomial,
    BinomialPlus,
    BinomialMinus,
    H,
    LocalH,
    Gamma,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ComplexKind {
    Simplex,
    Barycentric,
    GammaNr,
    DeltaGamma,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Basis {
    P,
    S,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Enumerative,
    Geometric,
    Equivariant,
    All,
}

enum Failure {
    Usage(String),
    Internal(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotDivisible { .. } => Failure::Internal(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type CmdResult = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Poly { kind, n, r, complex, gamma } => cmd_poly(kind, n, r, complex, gamma, &cli.common),
        Command::Series { name, r, truncation, basis, exstar } => {
            cmd_series(&name, r, truncation, basis, exstar, &cli.common)
        }
        Command::Verify { suite, max_n, max_r, truncation } => {
            cmd_verify(suite, Bounds { max_n, max_r, truncation }, &cli.common)
        }
        Command::Complex { kind, n, r } => cmd_complex(kind, n, r, &cli.common),
    };
    match result {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Verification(out)) => {
            print!("{out}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal identity failure: {msg}");
            ExitCode::from(3)
        }
    }
}

fn to_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable output");
    s.push('\n');
    s
}

fn csv(rows: &[(usize, usize, String, String)]) -> String {
    let mut out = String::from("n,r,statistic,polynomial\n");
    for (n, r, stat, poly) in rows {
        writeln!(out, "{n},{r},{stat},{poly}").expect("writing to a String");
    }
    out
}

fn list_field(v: &[impl ToString]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(";")
}

/// Center `m` such that `p` is palindromic about `m/2`, read off its support.
fn palindromic_center(p: &IntPolynomial) -> Option<usize> {
    let m = p.low_degree()? + p.degree()?;
    p.is_palindromic(m).then_some(m)
}

fn build_triangulation(kind: ComplexKind, n: usize, r: usize) -> Result<Triangulation, Failure> {
    match kind {
        ComplexKind::Simplex => Ok(Triangulation::simplex(n)),
        ComplexKind::Barycentric => Ok(Triangulation::barycentric(n)),
        ComplexKind::GammaNr => Ok(Triangulation::gamma_nr(n, r)?),
        ComplexKind::DeltaGamma => {
            Err(Failure::Usage("delta-gamma is a sphere, not a triangulation of a simplex".into()))
        }
    }
}

fn build_complex(kind: ComplexKind, n: usize, r: usize) -> Result<SimplicialComplex, Failure> {
    match kind {
        ComplexKind::DeltaGamma => Ok(Triangulation::gamma_nr(n, r)?.delta_of()?),
        _ => Ok(build_triangulation(kind, n, r)?.complex().clone()),
    }
}

fn cmd_poly(kind: PolyKind, n: usize, r: usize, complex: ComplexKind, want_gamma: bool, common: &Common) -> CmdResult {
    let enumerated = if matches!(kind, PolyKind::Gamma) { n + 1 } else { n };
    check_budget(enumerated, r, common.budget)?;
    let name = kind.to_possible_value().expect("no skipped variants").get_name().to_string();

    if kind == PolyKind::Gamma {
        let (plus, minus) = gamma_tilde_formula(n, r)?;
        return Ok(match common.format {
            Format::Json => to_json(&json!({
                "kind": name,
                "n": n,
                "r": r,
                "plus": plus.iter().map(ToString::to_string).collect::<Vec<_>>(),
                "minus": minus.iter().map(ToString::to_string).collect::<Vec<_>>(),
            })),
            Format::Csv => {
                csv(&[(n, r, "gamma-plus".into(), list_field(&plus)), (n, r, "gamma-minus".into(), list_field(&minus))])
            }
        });
    }

    let p = match kind {
        PolyKind::Eulerian => eulerian_poly(n, r, Statistic::Des)?,
        PolyKind::Derangement => derangement_poly(n, r, DerangementMethod::Direct)?,
        PolyKind::Binomial => binomial_eulerian(n, r)?,
        PolyKind::BinomialPlus => binomial_eulerian_pm(n, r)?.0,
        PolyKind::BinomialMinus => binomial_eulerian_pm(n, r)?.1,
        PolyKind::H => build_complex(complex, n, r)?.h_polynomial()?,
        PolyKind::LocalH => build_triangulation(complex, n, r)?.local_h()?,
        PolyKind::Gamma => unreachable!("handled above"),
    };
    let gamma = if want_gamma { palindromic_center(&p).map(|m| gamma_expansion(&p, m)).transpose()? } else { None };

    Ok(match common.format {
        Format::Json => {
            let mut out = json!({ "kind": name, "n": n, "r": r, "coeffs": p.to_decimal_strings() });
            if matches!(kind, PolyKind::H | PolyKind::LocalH) {
                out["complex"] = json!(complex.to_possible_value().expect("no skipped variants").get_name());
            }
            if want_gamma {
                out["gamma"] = serde_json::to_value(&gamma).expect("serializable gamma");
            }
            to_json(&out)
        }
        Format::Csv => {
            let mut rows = vec![(n, r, name.clone(), p.to_csv_field())];
            if let Some(g) = &gamma {
                rows.push((n, r, format!("{name}-gamma"), list_field(&g.gammas)));
            }
            csv(&rows)
        }
    })
}

fn sym_value(f: &SymF, basis: Basis) -> Value {
    match basis {
        Basis::P => serde_json::to_value(f).expect("serializable symmetric function"),
        Basis::S => {
            let s: BTreeMap<String, String> =
                f.schur_expansion().into_iter().map(|(l, c)| (l.to_string(), c.to_string())).collect();
            json!({ "s": s })
        }
    }
}

fn cmd_series(name: &str, r: usize, truncation: usize, basis: Basis, exstar: bool, common: &Common) -> CmdResult {
    let series_name: SeriesName = name.parse()?;
    let series: ZSeries = named_series(series_name, r, truncation)?;
    if exstar {
        let shadows = series
            .terms()
            .iter()
            .map(|t| t.dimension_shadow())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| Failure::Internal(e.to_string()))?;
        return Ok(match common.format {
            Format::Json => to_json(&json!({
                "name": series_name.as_str(),
                "r": r,
                "truncation": truncation,
                "exstar": shadows.iter().map(IntPolynomial::to_decimal_strings).collect::<Vec<_>>(),
            })),
            Format::Csv => csv(&shadows
                .iter()
                .enumerate()
                .map(|(m, p)| (m, r, format!("{series_name}-exstar"), p.to_csv_field()))
                .collect::<Vec<_>>()),
        });
    }
    if common.format == Format::Csv {
        return Err(Failure::Usage("csv output of a series needs --exstar".into()));
    }
    let terms: Vec<Value> = series
        .terms()
        .iter()
        .enumerate()
        .map(|(m, t)| json!({ "z": m, "t": t.coeffs().iter().map(|f| sym_value(f, basis)).collect::<Vec<_>>() }))
        .collect();
    let basis_name = match basis {
        Basis::P => "p",
        Basis::S => "s",
    };
    Ok(to_json(&json!({
        "name": series_name.as_str(),
        "r": r,
        "truncation": truncation,
        "basis": basis_name,
        "terms": terms,
    })))
}

fn cmd_verify(suite: SuiteArg, bounds: Bounds, common: &Common) -> CmdResult {
    check_budget(bounds.max_n + 1, bounds.max_r, common.budget)?;
    let suite = match suite {
        SuiteArg::Enumerative => Suite::Enumerative,
        SuiteArg::Geometric => Suite::Geometric,
        SuiteArg::Equivariant => Suite::Equivariant,
        SuiteArg::All => Suite::All,
    };
    let report = verify::run(suite, bounds).map_err(|e| Failure::Internal(e.to_string()))?;
    let out = match common.format {
        Format::Json => to_json(&serde_json::to_value(&report).expect("serializable report")),
        Format::Csv => {
            let mut out = String::from("kind,id,params,pass,witness\n");
            for (kind, list) in [("check", &report.checks), ("observation", &report.observations)] {
                for c in list.iter() {
                    let witness = c.witness.as_deref().unwrap_or("").replace(['\n', ','], " ");
                    writeln!(out, "{kind},{},{},{},{witness}", c.id, c.params, c.pass).expect("writing to a String");
                }
            }
            out
        }
    };
    if report.passed() {
        Ok(out)
    } else {
        Err(Failure::Verification(out))
    }
}

fn cmd_complex(kind: ComplexKind, n: usize, r: usize, common: &Common) -> CmdResult {
    check_budget(n, r, common.budget)?;
    let c = build_complex(kind, n, r)?;
    Ok(match common.format {
        Format::Json => {
            let h = c.h_polynomial().ok().map(|h| h.to_decimal_strings());
            to_json(&json!({
                "kind": kind.to_possible_value().expect("no skipped variants").get_name(),
                "n": n,
                "r": r,
                "complex": c,
                "f_vector": c.f_vector(),
                "h": h,
            }))
        }
        Format::Csv => {
            let mut out = String::from("facet\n");
            for line in c.to_facet_text().lines() {
                writeln!(out, "{}", line.replace(' ', ";")).expect("writing to a String");
            }
            out
        }
    })
}
