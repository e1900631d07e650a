//! Command-line front end. [`run`] takes the argument vector and the three
//! standard streams and returns the process exit code:
//! 0 on success, 1 on a domain error (for example a non-symmetric input),
//! 2 on a usage or syntax error.

use std::io::{Read, Write};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use symdecomp::elementary::VietaDisplay;
use symdecomp::{
    common_root, decompose, expand_sigma, monic_from_roots, parse_poly, parse_rational,
    parse_sigma, power_roots_symbolic, power_roots_transform, print_monomial, print_poly,
    print_rational_pq, print_sigma, print_univariate, resultant_vs_roots, spreadiness_lemma_report,
    symmetry_witness, vieta_coefficients, Algorithm, DecompositionTrace, ExprSource, Metric,
    MonicPoly, ParseError, Polynomial, Rational, RationalFunction, RationalOptions,
    SigmaPolynomial,
};

#[derive(Debug, Parser)]
#[command(
    name = "symdecomp",
    version,
    about = "Rewrite symmetric polynomials in elementary symmetric polynomials"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Report whether a polynomial is symmetric, with a witness if not.
    CheckSym {
        /// Polynomial in x1..xn, or `-` to read it from stdin.
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(short = 'n')]
        n: Option<usize>,
    },
    /// Write a symmetric polynomial in s1..sn.
    Decompose {
        /// Polynomial in x1..xn, or `-` to read it from stdin.
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(short = 'n')]
        n: Option<usize>,
        #[arg(long, value_enum, default_value_t = AlgoChoice::Lex)]
        algo: AlgoChoice,
        /// Print every reduction step.
        #[arg(long)]
        trace: bool,
        /// One JSON object per algorithm, one per line.
        #[arg(long)]
        json: bool,
    },
    /// Multiply out a polynomial in s1..sn.
    Expand {
        /// Polynomial in s1..sn, or `-` to read it from stdin.
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(short = 'n')]
        n: Option<usize>,
    },
    /// The generic monic polynomial of degree n, or the one with given roots.
    Vieta {
        #[arg(
            short = 'n',
            required_unless_present = "roots",
            conflicts_with = "roots"
        )]
        n: Option<usize>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        roots: Option<Vec<String>>,
    },
    /// Monic polynomial whose roots are the m-th powers of the input's roots.
    PowerRoots {
        /// Coefficients c1,...,cn of z^n + c1 z^(n-1) + ... + cn.
        #[arg(
            long,
            value_delimiter = ',',
            allow_hyphen_values = true,
            required_unless_present = "n"
        )]
        coeffs: Option<Vec<String>>,
        /// Print the generic degree-n answer in s1..sn instead.
        #[arg(short = 'n', conflicts_with = "coeffs")]
        n: Option<usize>,
        #[arg(short = 'm')]
        m: u32,
    },
    /// Decide whether two polynomials share a root, without finding roots.
    CommonRoot {
        /// Coefficients c1,...,cn of the monic z^n + c1 z^(n-1) + ... + cn.
        #[arg(
            long = "f",
            value_delimiter = ',',
            allow_hyphen_values = true,
            required = true
        )]
        f: Vec<String>,
        /// All coefficients of g, highest degree first.
        #[arg(
            long = "g",
            value_delimiter = ',',
            allow_hyphen_values = true,
            required = true
        )]
        g: Vec<String>,
        /// Also print the product of g over the roots of f.
        #[arg(long)]
        value: bool,
    },
    /// Write a symmetric rational function P / Q over s1..sn.
    RationalDecompose {
        /// `P / Q` as three arguments.
        #[arg(num_args = 3, required = true)]
        parts: Vec<String>,
        #[arg(short = 'n')]
        n: Option<usize>,
    },
    /// Check that the most spread-out terms of a σ-product are the
    /// rearrangements of its leading monomial.
    LemmaCheck {
        #[arg(long, value_delimiter = ',', required = true)]
        partition: Vec<u32>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AlgoChoice {
    Lex,
    Spread,
    Both,
}

impl AlgoChoice {
    fn algorithms(self) -> &'static [Algorithm] {
        match self {
            AlgoChoice::Lex => &[Algorithm::Lex],
            AlgoChoice::Spread => &[Algorithm::Spreadiness],
            AlgoChoice::Both => &[Algorithm::Lex, Algorithm::Spreadiness],
        }
    }
}

enum Failure {
    Usage(String),
    Syntax {
        source: String,
        error: ParseError,
    },
    Domain {
        code: &'static str,
        message: String,
    },
    /// Already reported on stdout; exit 1 without an error line.
    Negative,
}

impl Failure {
    fn domain(code: &'static str, message: impl ToString) -> Self {
        Failure::Domain {
            code,
            message: message.to_string(),
        }
    }
}

macro_rules! domain {
    ($e:expr) => {
        $e.map_err(|e| Failure::domain(e.code(), &e))
    };
}

struct Io<'a> {
    stdin: Option<&'a mut dyn Read>,
    out: &'a mut dyn Write,
}

impl Io<'_> {
    /// Resolves the `-` placeholder. Stdin can be consumed once.
    fn text(&mut self, arg: &str) -> Result<String, Failure> {
        if arg != "-" {
            return Ok(arg.to_string());
        }
        let stdin = self
            .stdin
            .take()
            .ok_or_else(|| Failure::Usage("stdin can be read only once".into()))?;
        let mut buf = String::new();
        stdin
            .read_to_string(&mut buf)
            .map_err(|e| Failure::Usage(format!("reading stdin: {e}")))?;
        Ok(buf.trim_end_matches(['\n', '\r']).to_string())
    }

    fn line(&mut self, s: impl AsRef<str>) {
        let _ = writeln!(self.out, "{}", s.as_ref());
    }
}

pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{rendered}")
            } else {
                write!(out, "{rendered}")
            };
            return code;
        }
    };
    let mut io = Io {
        stdin: Some(stdin),
        out,
    };
    match execute(cli.command, &mut io) {
        Ok(()) => 0,
        Err(Failure::Negative) => 1,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error[usage]: {msg}");
            2
        }
        Err(Failure::Syntax { source, error }) => {
            let _ = writeln!(err, "error[{}]: {error}", error.code());
            let _ = writeln!(err, "  {source}");
            let _ = writeln!(err, "  {}^", " ".repeat(error.offset));
            2
        }
        Err(Failure::Domain { code, message }) => {
            let _ = writeln!(err, "error[{code}]: {message}");
            1
        }
    }
}

fn source(text: String, n: Option<usize>) -> ExprSource {
    ExprSource { text, ambient_n: n }
}

fn poly(text: String, n: Option<usize>) -> Result<Polynomial, Failure> {
    let src = source(text, n);
    parse_poly(&src).map_err(|error| Failure::Syntax {
        source: src.text,
        error,
    })
}

fn sigma(text: String, n: Option<usize>) -> Result<SigmaPolynomial, Failure> {
    let src = source(text, n);
    parse_sigma(&src).map_err(|error| Failure::Syntax {
        source: src.text,
        error,
    })
}

fn rationals(values: &[String]) -> Result<Vec<Rational>, Failure> {
    values
        .iter()
        .map(|v| {
            parse_rational(v).map_err(|error| Failure::Syntax {
                source: v.clone(),
                error,
            })
        })
        .collect()
}

fn execute(command: Command, io: &mut Io) -> Result<(), Failure> {
    match command {
        Command::CheckSym { expr, n } => {
            let f = poly(io.text(&expr)?, n)?;
            match symmetry_witness(&f) {
                None => io.line("symmetric"),
                Some(w) => {
                    io.line("not symmetric");
                    io.line(format!(
                        "swapping x{} and x{} sends {} (coefficient {}) to {} (coefficient {})",
                        w.transposition,
                        w.transposition + 1,
                        print_monomial(&w.monomial, 'x'),
                        w.coefficient,
                        print_monomial(&w.image, 'x'),
                        w.image_coefficient,
                    ));
                    return Err(Failure::Negative);
                }
            }
        }
        Command::Decompose {
            expr,
            n,
            algo,
            trace,
            json,
        } => {
            let text = io.text(&expr)?;
            let f = poly(text.clone(), n)?;
            let mut results = Vec::new();
            for &a in algo.algorithms() {
                let (g, steps) = domain!(decompose(&f, a))?;
                if json {
                    io.line(json_result(&text, &f, &g, &steps).to_string());
                } else {
                    io.line(g.to_string());
                    if trace {
                        print_trace(io, &steps);
                    }
                }
                results.push(g);
            }
            if results.windows(2).any(|w| w[0] != w[1]) {
                return Err(Failure::domain(
                    "cli::algorithms_disagree",
                    "lex and spreadiness results differ",
                ));
            }
        }
        Command::Expand { expr, n } => {
            let g = sigma(io.text(&expr)?, n)?;
            io.line(print_poly(&expand_sigma(&g)));
        }
        Command::Vieta { n, roots } => match (n, roots) {
            (_, Some(roots)) => io.line(print_univariate(&monic_from_roots(&rationals(&roots)?))),
            (Some(0), None) => return Err(Failure::Usage("-n must be at least 1".into())),
            (Some(n), None) => io.line(VietaDisplay(&vieta_coefficients(n)).to_string()),
            (None, None) => unreachable!("clap requires -n or --roots"),
        },
        Command::PowerRoots { coeffs, n, m } => match (coeffs, n) {
            (Some(c), _) => {
                let f = MonicPoly::new(rationals(&c)?);
                let h = domain!(power_roots_transform(&f, m))?;
                io.line(print_univariate(&h.to_full()));
            }
            (None, Some(n)) => {
                let coefficients = domain!(power_roots_symbolic(n, m))?;
                io.line(print_sigma_univariate(&coefficients));
            }
            (None, None) => unreachable!("clap requires --coeffs or -n"),
        },
        Command::CommonRoot { f, g, value } => {
            let f = MonicPoly::new(rationals(&f)?);
            let g = rationals(&g)?;
            if f.degree() == 0 {
                return Err(Failure::Usage("--f needs at least one coefficient".into()));
            }
            let shared = domain!(common_root(&f, &g))?;
            io.line(if shared {
                "common root"
            } else {
                "no common root"
            });
            if value {
                io.line(format!(
                    "resultant: {}",
                    domain!(resultant_vs_roots(&f, &g))?
                ));
            }
        }
        Command::RationalDecompose { parts, n } => {
            if parts[1] != "/" {
                return Err(Failure::Usage(format!(
                    "expected `P / Q`, found {:?} between the parts",
                    parts[1]
                )));
            }
            let (p_text, q_text) = (io.text(&parts[0])?, io.text(&parts[2])?);
            // without -n both parts must agree on the inferred variable count
            let n = match n {
                Some(n) => n,
                None => poly(p_text.clone(), None)?
                    .ambient_n()
                    .max(poly(q_text.clone(), None)?.ambient_n()),
            };
            let f = domain!(RationalFunction::new(
                poly(p_text, Some(n))?,
                poly(q_text, Some(n))?
            ))?;
            let g = domain!(symdecomp::decompose_rational(
                &f,
                RationalOptions::default()
            ))?;
            io.line(format!("({}) / ({})", g.numerator, g.denominator));
        }
        Command::LemmaCheck { partition } => {
            let report = domain!(spreadiness_lemma_report(
                &partition,
                symdecomp::decompose::DEFAULT_LEMMA_MAX_DEGREE
            ))?;
            let shown: Vec<String> = partition.iter().map(u32::to_string).collect();
            let verdict = if report.holds() { "holds" } else { "fails" };
            io.line(format!(
                "{verdict} for {}: {} terms, max spreadiness {}, {} maximizers, {} rearrangements",
                shown.join(","),
                report.term_count,
                report.max_spreadiness,
                report.argmax.len(),
                report.orbit.len(),
            ));
            if !report.holds() {
                return Err(Failure::Negative);
            }
        }
    }
    Ok(())
}

/// `z^n + (g1)*z^(n-1) + ... + (gn)`, skipping zero coefficients.
fn print_sigma_univariate(coefficients: &[SigmaPolynomial]) -> String {
    let n = coefficients.len();
    let mut out = match n {
        0 => "1".to_string(),
        1 => "z".to_string(),
        n => format!("z^{n}"),
    };
    for (i, g) in coefficients.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        match n - 1 - i {
            0 => out.push_str(&format!(" + ({g})")),
            1 => out.push_str(&format!(" + ({g})*z")),
            p => out.push_str(&format!(" + ({g})*z^{p}")),
        }
    }
    out
}

fn print_trace(io: &mut Io, trace: &DecompositionTrace) {
    io.line(format!("trace ({}):", trace.algorithm.name()));
    for (i, s) in trace.steps.iter().enumerate() {
        io.line(format!(
            "  {}. degree {}: {} * {} -> {}; {} -> {}",
            i + 1,
            s.degree,
            s.coefficient,
            print_monomial(&s.selected, 'x'),
            print_sigma(&s.sigma_exponent.to_sigma_polynomial()),
            metric_text(&s.metric_before),
            metric_text(&s.metric_after),
        ));
    }
}

fn metric_text(m: &Metric) -> String {
    match m {
        Metric::Lex(Some(t)) => print_monomial(t, 'x'),
        Metric::Spread(Some(l)) => format!("({}, {})", l.max, l.count),
        Metric::Lex(None) | Metric::Spread(None) => "0".into(),
    }
}

fn metric_json(m: &Metric) -> Value {
    match m {
        Metric::Lex(Some(t)) => Value::String(print_monomial(t, 'x')),
        Metric::Spread(Some(l)) => json!({ "max_spreadiness": l.max, "count": l.count }),
        Metric::Lex(None) | Metric::Spread(None) => Value::Null,
    }
}

fn json_result(
    input: &str,
    f: &Polynomial,
    g: &SigmaPolynomial,
    trace: &DecompositionTrace,
) -> Value {
    let steps: Vec<Value> = trace
        .steps
        .iter()
        .map(|s| {
            json!({
                "selected": print_monomial(&s.selected, 'x'),
                "coefficient": print_rational_pq(&s.coefficient),
                "sigma_exponent": s.sigma_exponent.exponents(),
                "metric_before": metric_json(&s.metric_before),
                "metric_after": metric_json(&s.metric_after),
            })
        })
        .collect();
    json!({
        "input": input,
        "n": f.ambient_n(),
        "algorithm": trace.algorithm.name(),
        "result": print_sigma(g),
        "trace": steps,
    })
}
