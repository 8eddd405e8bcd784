//! Command-line front end for the hypergeometric Appell polynomial toolkit.
//!
//! Exit codes: 0 on success, 1 when a verified identity fails against its
//! oracle, 2 on flag or input errors, 3 on domain violations (bad lower
//! parameters, k = 0, reductions at the wrong order).

mod render;

use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hyperappell::{
    check_addition, check_appell_derivative, check_composed_derivative, check_convolution,
    check_corollary1, check_index_interchange, check_multiplication, check_parity,
    connection_coefficients, reduce_spec, ConnectionDirection, FamilySpec, HyperParams,
    IdentityReport, LaurentPoly, Rational, ReductionKind,
};

use render::{FamilyJson, PolyJson, ReduceJson};

fn parse_rational(s: &str) -> Result<Rational, hyperappell::Error> {
    s.parse()
}

#[derive(Parser)]
#[command(
    name = "hyperappell",
    version,
    about = "Exact construction and verification of hypergeometric Appell polynomials"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct FamilyArgs {
    /// Upper hypergeometric parameters, comma-separated rationals
    #[arg(long, value_delimiter = ',', value_parser = parse_rational, allow_hyphen_values = true)]
    a: Vec<Rational>,

    /// Lower hypergeometric parameters; none may be zero or a negative integer
    #[arg(long, value_delimiter = ',', value_parser = parse_rational, allow_hyphen_values = true)]
    b: Vec<Rational>,

    /// Family order, a positive integer
    #[arg(long)]
    k: u32,

    /// The rational constant m fixing the family
    #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
    m: Rational,
}

impl FamilyArgs {
    fn to_spec(&self) -> Result<FamilySpec, Failure> {
        let params = HyperParams::new(self.a.clone(), self.b.clone()).map_err(Failure::Domain)?;
        FamilySpec::new(params, self.k, self.m.clone()).map_err(Failure::Domain)
    }

    fn to_json(&self) -> FamilyJson {
        FamilyJson {
            a: self.a.iter().map(|x| x.to_string()).collect(),
            b: self.b.iter().map(|x| x.to_string()).collect(),
            k: self.k,
            m: self.m.to_string(),
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Latex,
    Csv,
    Plain,
}

#[derive(Args)]
struct OutputArgs {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Write the output to this file instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum IdentityName {
    /// Derivative rule A_n' = n*A_{n-1}
    #[value(name = "appell")]
    Appell,
    /// Derivative identity between the hypergeometric forms
    #[value(name = "corollary1")]
    Corollary1,
    /// Binomial addition formula in two variables
    #[value(name = "addition")]
    Addition,
    /// Argument-scaling formula A_n(m, Mx)
    #[value(name = "multiplication")]
    Multiplication,
    /// Interchange of two family orders inside a binomial convolution
    #[value(name = "interchange")]
    Interchange,
    /// Alternating self-convolution collapses to a constant
    #[value(name = "convolution")]
    Convolution,
    /// Sign law under argument negation
    #[value(name = "parity")]
    Parity,
    /// Chain rule for members composed over an inner polynomial
    #[value(name = "composed")]
    Composed,
}

impl IdentityName {
    fn min_n(self) -> u32 {
        match self {
            IdentityName::Appell | IdentityName::Corollary1 | IdentityName::Composed => 1,
            _ => 0,
        }
    }

    fn as_str(self) -> &'static str {
        match self {
            IdentityName::Appell => "appell",
            IdentityName::Corollary1 => "corollary1",
            IdentityName::Addition => "addition",
            IdentityName::Multiplication => "multiplication",
            IdentityName::Interchange => "interchange",
            IdentityName::Convolution => "convolution",
            IdentityName::Parity => "parity",
            IdentityName::Composed => "composed",
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Direction {
    /// Expand family members over the monomials
    FamilyOverMonomials,
    /// Expand monomials over the family members
    MonomialsOverFamily,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum ReduceKind {
    Hermite,
    GouldHopper,
}

#[derive(Subcommand)]
enum Command {
    /// Standard-basis coefficients of the n-th family member
    Coeffs {
        #[command(flatten)]
        family: FamilyArgs,

        /// Member index
        #[arg(long)]
        n: u32,

        #[command(flatten)]
        output: OutputArgs,
    },

    /// Evaluate the n-th member at an exact rational point
    Eval {
        #[command(flatten)]
        family: FamilyArgs,

        /// Member index
        #[arg(long)]
        n: u32,

        /// Evaluation point
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        x: Rational,

        /// Write the output to this file instead of standard output
        #[arg(long)]
        out: Option<PathBuf>,
    },

    /// Check one of the family's identities, one verdict line per index
    Verify {
        /// Identity to check
        #[arg(value_enum)]
        identity: IdentityName,

        #[command(flatten)]
        family: FamilyArgs,

        /// Check this single index
        #[arg(long)]
        n: Option<u32>,

        /// Check every index from the identity's smallest meaningful one up to this bound
        #[arg(long)]
        n_max: Option<u32>,

        /// Second family order (interchange only)
        #[arg(long)]
        k2: Option<u32>,

        /// Argument scale (multiplication only)
        #[arg(long = "M", value_parser = parse_rational, allow_hyphen_values = true)]
        m_scale: Option<Rational>,

        /// Inner polynomial for the composed rule: ascending coefficients
        /// from x^0 (default 1,0,1, i.e. x^2 + 1)
        #[arg(long, value_delimiter = ',', value_parser = parse_rational, allow_hyphen_values = true)]
        f: Option<Vec<Rational>>,

        /// Write the verdict lines to this file instead of standard output
        #[arg(long)]
        out: Option<PathBuf>,
    },

    /// Coefficients of the exponential generating series A(t)
    Genfun {
        #[command(flatten)]
        family: FamilyArgs,

        /// Truncation order
        #[arg(long)]
        order: u32,

        /// Write the output to this file instead of standard output
        #[arg(long)]
        out: Option<PathBuf>,
    },

    /// Connection coefficients between the family and the monomial basis
    Connect {
        #[command(flatten)]
        family: FamilyArgs,

        /// Largest coefficient index
        #[arg(long)]
        order: u32,

        /// Which basis is expanded over which
        #[arg(long, value_enum, default_value_t = Direction::FamilyOverMonomials)]
        direction: Direction,

        /// Write the output to this file instead of standard output
        #[arg(long)]
        out: Option<PathBuf>,
    },

    /// Family spec of a named special case
    Reduce {
        /// Special case to instantiate
        #[arg(value_enum)]
        kind: ReduceKind,

        /// Family order (defaults to 2 for hermite; required for gould-hopper)
        #[arg(long)]
        k: Option<u32>,

        /// Gould-Hopper weight h (ignored by hermite)
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        h: Option<Rational>,

        /// Write the output to this file instead of standard output
        #[arg(long)]
        out: Option<PathBuf>,
    },

    /// Re-emit a polynomial JSON document in another format
    Export {
        /// Input JSON path (standard input when omitted)
        #[arg(long = "in")]
        input: Option<PathBuf>,

        #[command(flatten)]
        output: OutputArgs,
    },
}

enum Failure {
    Usage(String),
    Domain(hyperappell::Error),
    Identity,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Identity) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Coeffs { family, n, output } => {
            let spec = family.to_spec()?;
            let poly = spec.polynomial(n);
            let text = render_poly(&family.to_json(), n, &poly, output.format);
            emit(&text, &output.out)
        }
        Command::Eval { family, n, x, out } => {
            let spec = family.to_spec()?;
            let value = spec.polynomial(n).eval(&x).map_err(Failure::Domain)?;
            emit(&value.to_string(), &out)
        }
        Command::Verify {
            identity,
            family,
            n,
            n_max,
            k2,
            m_scale,
            f,
            out,
        } => run_verify(identity, &family, n, n_max, k2, m_scale, f, &out),
        Command::Genfun { family, order, out } => {
            let spec = family.to_spec()?;
            let series = spec.generating_series(order as usize);
            let coeffs = series.scalar_coefficients().expect("scalar series");
            emit(&render::scalar_array(&coeffs), &out)
        }
        Command::Connect {
            family,
            order,
            direction,
            out,
        } => {
            let spec = family.to_spec()?;
            let dir = match direction {
                Direction::FamilyOverMonomials => ConnectionDirection::FamilyOverMonomials,
                Direction::MonomialsOverFamily => ConnectionDirection::MonomialsOverFamily,
            };
            let alphas = connection_coefficients(&spec, order, dir).map_err(Failure::Domain)?;
            emit(&render::scalar_array(&alphas), &out)
        }
        Command::Reduce { kind, k, h, out } => {
            let spec = match kind {
                ReduceKind::Hermite => {
                    let k = k.unwrap_or(2);
                    reduce_spec(ReductionKind::Hermite, k, &Rational::zero())
                        .map_err(Failure::Domain)?
                }
                ReduceKind::GouldHopper => {
                    let k = k.ok_or_else(|| {
                        Failure::Usage("--k is required for gould-hopper".to_string())
                    })?;
                    let h = h.ok_or_else(|| {
                        Failure::Usage("--h is required for gould-hopper".to_string())
                    })?;
                    reduce_spec(ReductionKind::GouldHopper, k, &h).map_err(Failure::Domain)?
                }
            };
            let doc = ReduceJson {
                k: spec.k(),
                m: spec.m().to_string(),
                a: spec.params().upper().iter().map(|x| x.to_string()).collect(),
                b: spec.params().lower().iter().map(|x| x.to_string()).collect(),
            };
            emit(&serde_json::to_string(&doc).expect("schema serializes"), &out)
        }
        Command::Export { input, output } => {
            let text = match &input {
                Some(path) => fs::read_to_string(path).map_err(|e| {
                    Failure::Usage(format!("cannot read --in {}: {e}", path.display()))
                })?,
                None => {
                    let mut buf = String::new();
                    std::io::stdin()
                        .read_to_string(&mut buf)
                        .map_err(|e| Failure::Usage(format!("cannot read standard input: {e}")))?;
                    buf
                }
            };
            let doc: PolyJson = serde_json::from_str(&text)
                .map_err(|e| Failure::Usage(format!("cannot parse input JSON: {e}")))?;
            let coeffs = doc
                .coeffs
                .iter()
                .map(|s| s.parse::<Rational>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(Failure::Domain)?;
            let poly = LaurentPoly::new(doc.min_exponent, coeffs);
            let text = render_poly(&doc.family, doc.n, &poly, output.format);
            emit(&text, &output.out)
        }
    }
}

fn render_poly(family: &FamilyJson, n: u32, poly: &LaurentPoly, format: Format) -> String {
    match format {
        Format::Json => render::poly_to_json(family, n, poly),
        Format::Latex => render::poly_to_latex(poly),
        Format::Csv => render::poly_to_csv(poly),
        Format::Plain => render::poly_to_plain(poly),
    }
}

#[allow(clippy::too_many_arguments)]
fn run_verify(
    identity: IdentityName,
    family: &FamilyArgs,
    n: Option<u32>,
    n_max: Option<u32>,
    k2: Option<u32>,
    m_scale: Option<Rational>,
    f: Option<Vec<Rational>>,
    out: &Option<PathBuf>,
) -> Result<(), Failure> {
    let spec = family.to_spec()?;
    let min_n = identity.min_n();
    let indices: Vec<u32> = match (n, n_max) {
        (Some(_), Some(_)) => {
            return Err(Failure::Usage(
                "give exactly one of --n and --n-max".to_string(),
            ))
        }
        (None, None) => {
            return Err(Failure::Usage(
                "one of --n or --n-max is required".to_string(),
            ))
        }
        (Some(single), None) => {
            if single < min_n {
                return Err(Failure::Usage(format!(
                    "identity {} needs n >= {min_n}",
                    identity.as_str()
                )));
            }
            vec![single]
        }
        (None, Some(max)) => (min_n..=max).collect(),
    };

    let check: Box<dyn Fn(u32) -> IdentityReport> = match identity {
        IdentityName::Appell => Box::new(move |i| check_appell_derivative(&spec, i)),
        IdentityName::Corollary1 => Box::new(move |i| check_corollary1(&spec, i)),
        IdentityName::Addition => Box::new(move |i| check_addition(&spec, i)),
        IdentityName::Multiplication => {
            let m_scale = m_scale.ok_or_else(|| {
                Failure::Usage("--M is required for multiplication".to_string())
            })?;
            Box::new(move |i| check_multiplication(&spec, i, &m_scale))
        }
        IdentityName::Interchange => {
            let k2 = k2
                .ok_or_else(|| Failure::Usage("--k2 is required for interchange".to_string()))?;
            if k2 == 0 {
                return Err(Failure::Domain(hyperappell::Error::ZeroFamilyOrder));
            }
            Box::new(move |i| {
                check_index_interchange(spec.params(), spec.m(), spec.k(), k2, i)
            })
        }
        IdentityName::Convolution => Box::new(move |i| check_convolution(&spec, i)),
        IdentityName::Parity => Box::new(move |i| check_parity(&spec, i)),
        IdentityName::Composed => {
            let coeffs = f.unwrap_or_else(|| {
                vec![Rational::one(), Rational::zero(), Rational::one()]
            });
            let inner = LaurentPoly::new(0, coeffs);
            Box::new(move |i| check_composed_derivative(&spec, i, &inner))
        }
    };

    let mut lines = Vec::new();
    let mut all_hold = true;
    for i in indices {
        let report = check(i);
        all_hold &= report.holds;
        lines.push(verdict_line(&report, i));
    }

    if !lines.is_empty() || out.is_some() {
        emit(&lines.join("\n"), out)?;
    }
    if all_hold {
        Ok(())
    } else {
        Err(Failure::Identity)
    }
}

/// One line per checked index: "{identity} n={n}: {verdict}[; {note}]".
/// The convolution verdict is "holds vs oracle" since its ground truth is
/// the series product, not the recorded closed form.
fn verdict_line(report: &IdentityReport, n: u32) -> String {
    let verdict = match (report.identity_name.as_str(), report.holds) {
        ("convolution", true) => "holds vs oracle",
        ("convolution", false) => "FAILS vs oracle",
        (_, true) => "holds",
        (_, false) => "FAILS",
    };
    let mut line = format!("{} n={n}: {verdict}", report.identity_name);
    if !report.note.is_empty() {
        line.push_str("; ");
        line.push_str(&report.note);
    }
    line
}

fn emit(text: &str, out: &Option<PathBuf>) -> Result<(), Failure> {
    let mut payload = text.to_string();
    if !payload.ends_with('\n') {
        payload.push('\n');
    }
    match out {
        None => {
            print!("{payload}");
            Ok(())
        }
        Some(path) => fs::write(path, payload)
            .map_err(|e| Failure::Usage(format!("cannot write --out {}: {e}", path.display()))),
    }
}
