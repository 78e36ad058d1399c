//! Command-line front end: `plethy <subcommand> ...`.
//!
//! Exit codes: 0 on success or an equal verdict, 1 when a verification or
//! cross-check fails, 2 on usage, parse or evaluation errors.

use std::collections::BTreeMap;
use std::io::Write;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};

use crate::cycle_index::{power_product, qnr_recursive, zn, zn_evaluate};
use crate::expr::parse;
use crate::identities::{self, parse_caps, parse_params, parse_rational, IdentityCase, IdentityId, Verdict};
use crate::partitions::colored_partition_series;
use crate::permutations::{average_power_bruteforce, DEFAULT_ENUMERATION_CAP};
use crate::plethystic;
use crate::series::{render_rational, Rational, Series, SeriesRing, TruncationCaps, VariableSet};

const DEFAULT_CAP: u32 = 10;

#[derive(Debug, Parser)]
#[command(
    name = "plethy",
    version,
    about = "Exact plethystic calculus on truncated power series"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Plethystic exponential of an expression, optionally y-inserted.
    Pe {
        #[arg(long, allow_hyphen_values = true)]
        expr: String,
        /// Comma-separated variable names.
        #[arg(long)]
        vars: String,
        /// Per-variable caps such as `x=10,y=6`; unlisted variables get 10.
        #[arg(long, default_value = "")]
        caps: String,
        /// Multiply the expression by this variable before exponentiating.
        #[arg(long)]
        insert: Option<String>,
    },
    /// Plethystic logarithm of an expression with constant term 1.
    Pl {
        #[arg(long, allow_hyphen_values = true)]
        expr: String,
        #[arg(long)]
        vars: String,
        #[arg(long, default_value = "")]
        caps: String,
    },
    /// Average over S_n of prod_i det(I - x_i M)^(r_i).
    Qnr {
        #[arg(long)]
        n: u32,
        /// Exponents `r1,r2,...`; one exponent uses variable `x`, several use `x1, x2, ...`.
        #[arg(long, allow_hyphen_values = true)]
        r: String,
        #[arg(long, default_value = "")]
        caps: String,
        #[arg(long, value_enum, default_value_t = Mode::Recursive)]
        mode: Mode,
        /// Compute every mode and require them to agree.
        #[arg(long)]
        cross_check: bool,
    },
    /// Verify a catalog identity at the given caps.
    Verify {
        #[arg(long)]
        identity: Option<String>,
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        params: String,
        #[arg(long, default_value = "")]
        caps: String,
        #[arg(long)]
        json: bool,
        /// List the catalog instead of verifying.
        #[arg(long, conflicts_with_all = ["identity", "json"])]
        list: bool,
    },
    /// Residue at y = 1 of the average-power generating function.
    Residue {
        #[arg(long, allow_hyphen_values = true)]
        r: String,
        #[arg(long)]
        cap: u32,
    },
    /// Integer sequences from partition generating functions.
    Sequence {
        #[arg(long, value_enum)]
        name: SequenceName,
        #[arg(long, default_value_t = 2)]
        colors: u32,
        #[arg(long)]
        terms: u32,
    },
    /// Cycle index of S_n.
    Zn {
        #[arg(long)]
        n: u32,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Brute,
    Cycle,
    Recursive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SequenceName {
    Euler,
    Macmahon,
    Colored,
}

/// Failure of a subcommand, mapped to an exit code.
enum Failure {
    Usage(String),
    Mismatch(String),
}

impl<E: std::error::Error> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Mismatch(msg)) => {
            let _ = writeln!(err, "{msg}");
            1
        }
    }
}

fn ring_from(vars: &str, caps: &str) -> Result<Arc<SeriesRing>, Failure> {
    let names: Vec<&str> = vars.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
    let vars = VariableSet::new(names)?;
    ring_with_defaults(vars, caps)
}

fn ring_with_defaults(vars: VariableSet, caps: &str) -> Result<Arc<SeriesRing>, Failure> {
    let given: BTreeMap<String, u32> = parse_caps(caps)?;
    if let Some(unknown) = given.keys().find(|k| vars.index_of(k).is_err()) {
        return Err(Failure::Usage(format!("--caps names unknown variable {unknown:?}")));
    }
    let resolved = vars
        .names()
        .iter()
        .map(|n| given.get(n).copied().unwrap_or(DEFAULT_CAP))
        .collect();
    Ok(SeriesRing::new(vars, TruncationCaps::new(resolved))?)
}

fn eval_expr(text: &str, ring: &Arc<SeriesRing>) -> Result<Series, Failure> {
    let e = parse(text, ring.vars())?;
    Ok(e.eval(ring)?)
}

fn rational_arg(flag: &str, text: &str) -> Result<Rational, Failure> {
    parse_rational(text).ok_or_else(|| Failure::Usage(format!("{flag} expects p or p/q, got {text:?}")))
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Pe {
            expr,
            vars,
            caps,
            insert,
        } => {
            let ring = ring_from(&vars, &caps)?;
            let f = eval_expr(&expr, &ring)?;
            let result = match insert {
                Some(y) => {
                    let y_idx = ring.index_of(&y)?;
                    if f.involves(y_idx) {
                        return Err(Failure::Usage(format!(
                            "expression must not involve the inserted variable {y:?}"
                        )));
                    }
                    plethystic::pe(&f.mul(&Series::variable(&ring, &y)?)?)?
                }
                None => plethystic::pe(&f)?,
            };
            writeln!(out, "{result}")?;
        }
        Command::Pl { expr, vars, caps } => {
            let ring = ring_from(&vars, &caps)?;
            let f = eval_expr(&expr, &ring)?;
            writeln!(out, "{}", plethystic::pl(&f)?)?;
        }
        Command::Qnr {
            n,
            r,
            caps,
            mode,
            cross_check,
        } => {
            let rs: Vec<Rational> = r
                .split(',')
                .map(|t| rational_arg("--r", t.trim()))
                .collect::<Result<_, _>>()?;
            let vars = if rs.len() == 1 {
                VariableSet::new(["x"])?
            } else {
                VariableSet::indexed("x", rs.len())?
            };
            let ring = ring_with_defaults(vars, &caps)?;
            let exps: Vec<(usize, Rational)> = rs.into_iter().enumerate().collect();
            let compute = |m: Mode| -> Result<Series, Failure> {
                Ok(match m {
                    Mode::Brute => average_power_bruteforce(n, &ring, &exps)?,
                    Mode::Cycle => zn_evaluate(n, &power_product(&ring, &exps)?)?,
                    Mode::Recursive => qnr_recursive(n, &ring, &exps)?,
                })
            };
            let primary = compute(mode)?;
            if cross_check {
                let mut modes = vec![Mode::Cycle, Mode::Recursive];
                if n <= DEFAULT_ENUMERATION_CAP {
                    modes.insert(0, Mode::Brute);
                }
                for m in modes {
                    let other = compute(m)?;
                    if let Some((mono, a, b)) = primary.first_difference(&other) {
                        return Err(Failure::Mismatch(format!(
                            "cross-check failed: {:?} and {:?} differ at {}: {} != {}",
                            mode,
                            m,
                            ring.render_monomial(&mono),
                            render_rational(&a),
                            render_rational(&b)
                        )));
                    }
                }
            }
            writeln!(out, "{primary}")?;
        }
        Command::Verify {
            identity,
            params,
            caps,
            json,
            list,
        } => {
            if list {
                for id in IdentityId::ALL {
                    writeln!(
                        out,
                        "{:<15} [{}] {}",
                        id.as_str(),
                        id.parameters().join(","),
                        id.summary()
                    )?;
                }
                return Ok(0);
            }
            let identity = identity.ok_or_else(|| Failure::Usage("--identity is required".into()))?;
            let id: IdentityId = identity.parse()?;
            let case = IdentityCase::new(id, parse_params(&params)?, &parse_caps(&caps)?)?;
            let report = identities::verify(&case)?;
            if json {
                writeln!(out, "{}", report.to_json())?;
            } else {
                writeln!(out, "{report}")?;
            }
            return Ok(match report.verdict {
                Verdict::Equal => 0,
                Verdict::Unequal(_) => 1,
            });
        }
        Command::Residue { r, cap } => {
            let r = rational_arg("--r", &r)?;
            writeln!(out, "{}", identities::residue_phi(&r, cap)?)?;
        }
        Command::Sequence { name, colors, terms } => {
            if terms == 0 {
                return Err(Failure::Usage("--terms must be positive".into()));
            }
            let cap = terms - 1;
            let series = match name {
                SequenceName::Euler => colored_partition_series(1, cap),
                SequenceName::Colored => {
                    if colors == 0 {
                        return Err(Failure::Usage("--colors must be positive".into()));
                    }
                    colored_partition_series(colors, cap)
                }
                SequenceName::Macmahon => {
                    let ring = SeriesRing::of(&[("x", cap)])?;
                    plethystic::pe(&eval_expr("x/(1-x)^2", &ring)?)?
                }
            };
            let items: Vec<String> = series.coefficients_along(0).iter().map(render_rational).collect();
            writeln!(out, "{}", items.join(" "))?;
        }
        Command::Zn { n } => {
            writeln!(out, "{}", zn(n))?;
        }
    }
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("plethy").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn documented_invocations() {
        assert_eq!(
            run_str(&["sequence", "--name", "colored", "--colors", "2", "--terms", "7"]),
            (0, "1 2 6 14 33 70 149\n".into(), String::new())
        );
        assert_eq!(run_str(&["qnr", "--n", "3", "--r", "1"]).1, "1 - x\n");
        let (code, _, _) = run_str(&[
            "verify",
            "--identity",
            "thm-1.1",
            "--params",
            "r=-1",
            "--caps",
            "x=8,y=5",
        ]);
        assert_eq!(code, 0);
    }

    #[test]
    fn negative_and_fractional_arguments() {
        let (code, out, _) = run_str(&["residue", "--r", "-2", "--cap", "6"]);
        assert_eq!(code, 0);
        assert_eq!(out, "-1 - 2*x - 6*x^2 - 14*x^3 - 33*x^4 - 70*x^5 - 149*x^6\n");
        let (code, out, _) = run_str(&["qnr", "--n", "2", "--r", "-1/2", "--caps", "x=2", "--cross-check"]);
        assert_eq!(code, 0);
        assert_eq!(out, "1 + 1/2*x + 3/4*x^2\n");
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run_str(&["pe", "--expr", "1-", "--vars", "x"]).0, 2);
        assert_eq!(run_str(&["pe", "--expr", "x", "--vars", "x", "--bogus"]).0, 2);
        assert_eq!(run_str(&["verify", "--identity", "nope"]).0, 2);
        assert_eq!(
            run_str(&["verify", "--identity", "thm-1.1-finite", "--params", "r=1/2"]).0,
            2
        );
        assert_eq!(run_str(&["pl", "--expr", "2+x", "--vars", "x"]).0, 2);
        assert_eq!(run_str(&["pe", "--expr", "x", "--vars", "x", "--caps", "z=3"]).0, 2);
        assert_eq!(run_str(&["frobnicate"]).0, 2);
        assert_eq!(run_str(&["--help"]).0, 0);
    }

    #[test]
    fn pe_and_pl() {
        let (_, out, _) = run_str(&["pe", "--expr", "x/(1-x)", "--vars", "x", "--caps", "x=5"]);
        assert_eq!(out, "1 + x + 2*x^2 + 3*x^3 + 5*x^4 + 7*x^5\n");
        let (_, out, _) = run_str(&[
            "pe", "--expr", "2*x", "--vars", "x,y", "--caps", "x=2,y=2", "--insert", "y",
        ]);
        assert_eq!(out, "1 + 2*x*y + 3*x^2*y^2\n");
        let (_, out, _) = run_str(&["pl", "--expr", "1+x", "--vars", "x", "--caps", "x=4"]);
        assert_eq!(out, "x - x^2\n");
        assert_eq!(run_str(&["pe", "--expr", "y", "--vars", "x,y", "--insert", "y"]).0, 2);
    }

    #[test]
    fn sequences_and_cycle_index() {
        assert_eq!(
            run_str(&["sequence", "--name", "euler", "--terms", "7"]).1,
            "1 1 2 3 5 7 11\n"
        );
        assert_eq!(
            run_str(&["sequence", "--name", "macmahon", "--terms", "7"]).1,
            "1 1 3 6 13 24 48\n"
        );
        assert_eq!(run_str(&["zn", "--n", "3"]).1, "1/6*p1^3 + 1/2*p1*p2 + 1/3*p3\n");
    }
}
