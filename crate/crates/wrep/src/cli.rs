//! The `wrep` command line.
//!
//! Exit codes: 0 success, 1 mathematical failure (violated relation, mismatch, failed
//! check), 2 usage, input or schema error.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use wrep_core::longmoody::{lm_apply, lm_iteration_report, Golden, LMConfig};
use wrep_core::reps::{make_catalog_rep, twist, CatalogName, MatrixRep, RepReport, Status};
use wrep_core::ring::Vars;
use wrep_core::welded::{
    check_cond1, wada_extends, words_equal, ActionKind, ActionSpec, WeldedGen, WeldedWord, XiKind, XiSpec,
};

use crate::error::{Result, WrepError};
use crate::json::{load_fixture, matrix_to_json, rep_from_json, rep_to_json, report_to_json, to_string};
use crate::latex::{gen_latex, matrix_latex, rep_latex};
use crate::par::verify_rep_par;
use crate::suites::{reproduce, Theorem};
use crate::text::parse_poly;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "wrep", version, about = "Exact representations of welded braid groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Latex,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print a catalog representation.
    Catalog {
        #[command(flatten)]
        rep: RepArgs,
        /// Only this generator, e.g. `s1` or `t2`.
        #[arg(long)]
        generator: Option<String>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Check every defining relation on a catalog representation or a JSON bundle.
    Verify {
        #[command(flatten)]
        rep: RepArgs,
        /// Representation bundle to check instead of a catalog entry.
        #[arg(long, conflicts_with = "name")]
        file: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Decide whether two words are equal in wB_n.
    WordEq {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        lhs: String,
        #[arg(long)]
        rhs: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Test whether a Wada action extends to wB_n.
    Wada {
        /// Wada type, 1 to 7.
        #[arg(long = "type")]
        ty: u8,
        /// Parameter of type 4.
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        h: i64,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Check the compatibility condition for an action and an embedding.
    Cond1 {
        #[command(flatten)]
        cfg: ConfigArgs,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Apply the Long-Moody construction to a representation of wB_{n+1}.
    Lm {
        #[command(flatten)]
        cfg: ConfigArgs,
        /// Catalog input on n+1 strands.
        #[arg(long = "input", default_value = "onedim")]
        input: String,
        /// Input parameter.
        #[arg(long, default_value = "t", allow_hyphen_values = true)]
        param: String,
        /// Comma-separated variable names.
        #[arg(long, default_value = "t")]
        vars: String,
        /// Representation bundle to use as input instead of a catalog entry.
        #[arg(long)]
        file: Option<PathBuf>,
        /// Multiply the input by this unit before the construction.
        #[arg(long, allow_hyphen_values = true)]
        pre_twist: Option<String>,
        /// Multiply the output by this unit.
        #[arg(long, allow_hyphen_values = true)]
        post_twist: Option<String>,
        /// Skip the compatibility gate.
        #[arg(long)]
        unchecked: bool,
        #[arg(long)]
        generator: Option<String>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Run a theorem-reproduction suite.
    Reproduce {
        #[arg(long)]
        theorem: Theorem,
        #[arg(long)]
        n: usize,
        /// Directory with lm12_sigma{1,2}.json and lm9_sigma{1,2}.json replacing the
        /// built-in golden matrices (iter only).
        #[arg(long)]
        fixtures: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

#[derive(Args, Debug)]
pub struct RepArgs {
    /// Catalog name: burau, reduced_burau, dual_burau, dual_reduced_burau, tym, dual_tym,
    /// permutation, onedim.
    #[arg(long = "rep")]
    pub name: Option<String>,
    #[arg(long)]
    pub n: Option<usize>,
    /// The parameter (a unit), e.g. `t`, `q*t`, `-t^-1`.
    #[arg(long, default_value = "t", allow_hyphen_values = true)]
    pub param: String,
    /// Comma-separated variable names.
    #[arg(long, default_value = "t")]
    pub vars: String,
}

#[derive(Args, Debug)]
pub struct ConfigArgs {
    /// `artin` or `wada1` … `wada7`.
    #[arg(long, default_value = "artin")]
    pub alpha: String,
    /// Parameter of wada4.
    #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
    pub h: i64,
    /// `xi1` or `trivial`.
    #[arg(long, default_value = "xi1")]
    pub xi: String,
    #[arg(long)]
    pub n: usize,
}

fn usage(msg: impl Into<String>) -> WrepError {
    WrepError::Core(wrep_core::Error::InvalidArgument(msg.into()))
}

fn vars_arg(s: &str) -> Result<Vars> {
    let names: Vec<&str> = s.split(',').map(str::trim).filter(|x| !x.is_empty()).collect();
    if names.is_empty() {
        return Err(usage("empty --vars"));
    }
    Ok(Vars::new(&names))
}

fn catalog_rep(name: &str, n: usize, param: &str, vars: &str) -> Result<MatrixRep> {
    let name: CatalogName = name.parse()?;
    let vars = vars_arg(vars)?;
    let p = parse_poly(&vars, param)?;
    Ok(make_catalog_rep(name, n, &p)?)
}

impl RepArgs {
    fn build(&self) -> Result<MatrixRep> {
        let name = self.name.as_deref().ok_or_else(|| usage("--rep is required"))?;
        let n = self.n.ok_or_else(|| usage("--n is required"))?;
        catalog_rep(name, n, &self.param, &self.vars)
    }
}

fn action_kind(name: &str, h: i64) -> Result<ActionKind> {
    if name == "artin" {
        return Ok(ActionKind::Artin);
    }
    let ty = name
        .strip_prefix("wada")
        .and_then(|d| d.parse::<u8>().ok())
        .ok_or_else(|| usage(format!("unknown action `{name}`")))?;
    Ok(ActionKind::from_type(ty, h)?)
}

fn xi_kind(name: &str) -> Result<XiKind> {
    match name {
        "xi1" => Ok(XiKind::Xi1),
        "trivial" => Ok(XiKind::Trivial),
        _ => Err(usage(format!("unknown embedding `{name}`"))),
    }
}

fn read_json(path: &Path) -> Result<Value> {
    let text = std::fs::read_to_string(path).map_err(|source| WrepError::Io { path: path.to_owned(), source })?;
    if text.trim().is_empty() {
        return Err(WrepError::Schema(format!("{} is empty", path.display())));
    }
    Ok(serde_json::from_str(&text)?)
}

fn emit_rep(rep: &MatrixRep, generator: Option<&str>, format: Format) -> Result<String> {
    if let Some(g) = generator {
        let g = WeldedGen::parse(g)?;
        let m = rep.image(g)?;
        return Ok(match format {
            Format::Json => to_string(&matrix_to_json(m)),
            Format::Latex => format!("{}\n", matrix_latex(m)),
            Format::Text => format!("{g} =\n{m}\n"),
        });
    }
    Ok(match format {
        Format::Json => to_string(&rep_to_json(rep)),
        Format::Latex => rep_latex(rep),
        Format::Text => {
            let mut s = format!("{} on wB_{}, dimension {}\n", rep.name, rep.n(), rep.dim());
            for g in WeldedGen::generators(rep.n()) {
                s.push_str(&format!("{g} =\n{}\n", rep.image(g)?));
            }
            s
        }
    })
}

fn emit_report(r: &RepReport, format: Format) -> String {
    match format {
        Format::Json => to_string(&report_to_json(r)),
        Format::Latex | Format::Text => {
            let mut s = format!("{}: {}\n", r.check, r.status);
            if let Some(m) = &r.matched_candidate {
                s.push_str(&format!("matched: {m}\n"));
            }
            if let Some(c) = &r.counterexample {
                s.push_str(&format!("counterexample: {c}\n"));
            }
            if r.fixtures_compared > 0 {
                s.push_str(&format!("fixtures compared: {}\n", r.fixtures_compared));
            }
            for d in &r.details {
                s.push_str(&format!("  {d}\n"));
            }
            for c in &r.certificates {
                let c = match format {
                    Format::Latex => format!(
                        "\\mathrm{{{}}}({}) : {} \\neq {}",
                        c.invariant.as_str(),
                        gen_latex(WeldedGen::parse(&c.generator).expect("generator names round trip")),
                        wrep_core::ring::latex(&c.left),
                        wrep_core::ring::latex(&c.right)
                    ),
                    _ => c.to_string(),
                };
                s.push_str(&format!("  certificate {c}\n"));
            }
            s
        }
    }
}

fn status_code(s: Status) -> i32 {
    match s {
        Status::Pass => EXIT_OK,
        Status::Fail | Status::Inconclusive => EXIT_FAIL,
    }
}

fn load_golden(dir: &Path) -> Result<Golden> {
    let single = |name: &str| -> Result<_> {
        let mut v = load_fixture(&dir.join(name))?;
        if v.len() != 1 {
            return Err(WrepError::Schema(format!("{name}: expected one matrix, found {}", v.len())));
        }
        Ok(v.remove(0))
    };
    Ok(Golden {
        lm_sigma: vec![single("lm12_sigma1.json")?, single("lm12_sigma2.json")?],
        quotient_sigma: vec![single("lm9_sigma1.json")?, single("lm9_sigma2.json")?],
    })
}

/// Runs one parsed command, writing its output to `out`; returns the exit code.
pub fn execute(cmd: &Command, out: &mut dyn Write) -> Result<i32> {
    let (text, code) = match cmd {
        Command::Catalog { rep, generator, format } => (emit_rep(&rep.build()?, generator.as_deref(), *format)?, EXIT_OK),
        Command::Verify { rep, file, format } => {
            let rep = match file {
                Some(p) => rep_from_json(&read_json(p)?)?,
                None => rep.build()?,
            };
            let bad = verify_rep_par(&rep)?;
            let mut r = RepReport::new(format!("verify {} n={}", rep.name, rep.n()), Status::Pass);
            r.note(format!("dimension {}", rep.dim()));
            for rel in &bad {
                r.require(false, format!("relation {rel} fails"));
            }
            if bad.is_empty() {
                r.note("every defining relation holds");
            }
            (emit_report(&r, *format), status_code(r.status))
        }
        Command::WordEq { n, lhs, rhs, format } => {
            let (a, b) = (WeldedWord::parse(*n, lhs)?, WeldedWord::parse(*n, rhs)?);
            let eq = words_equal(&a, &b)?;
            let text = match format {
                Format::Json => to_string(&json!({ "equal": eq, "lhs": a.to_string(), "n": n, "rhs": b.to_string() })),
                _ => format!("{}\n", if eq { "equal" } else { "different" }),
            };
            (text, if eq { EXIT_OK } else { EXIT_FAIL })
        }
        Command::Wada { ty, h, n, format } => {
            let kind = ActionKind::from_type(*ty, *h)?;
            let w = wada_extends(kind, *n)?;
            let mut r = RepReport::new(format!("wada {kind} n={n}"), Status::Pass);
            for v in w.violated_strings() {
                r.require(false, format!("relation {v} fails"));
            }
            if w.extends {
                r.note("every defining relation holds");
            }
            (emit_report(&r, *format), status_code(r.status))
        }
        Command::Cond1 { cfg, format } => {
            let spec = ActionSpec::new(action_kind(&cfg.alpha, cfg.h)?)?;
            let xi = XiSpec::new(xi_kind(&cfg.xi)?, cfg.n);
            let c = check_cond1(&spec, &xi, cfg.n)?;
            let mut r = RepReport::new(format!("cond1 {} {} n={}", spec.kind(), xi.kind, cfg.n), Status::Pass);
            r.note(format!("{} (generator, letter) pairs checked", c.pairs_checked));
            match c.counterexample {
                Some((g, k)) => r.require(false, format!("fails at ({g}, x{k})")),
                None => r.require(c.pass, "holds"),
            }
            (emit_report(&r, *format), status_code(r.status))
        }
        Command::Lm { cfg, input, param, vars, file, pre_twist, post_twist, unchecked, generator, format } => {
            let n = cfg.n;
            let spec = ActionSpec::new(action_kind(&cfg.alpha, cfg.h)?)?;
            let xi = xi_kind(&cfg.xi)?;
            let config = if *unchecked { LMConfig::new_unchecked(spec, xi, n) } else { LMConfig::new(spec, xi, n)? };
            let mut rep = match file {
                Some(p) => rep_from_json(&read_json(p)?)?,
                None => catalog_rep(input, n + 1, param, vars)?,
            };
            if let Some(tw) = pre_twist {
                rep = twist(&parse_poly(rep.vars(), tw)?, &rep)?;
            }
            let mut lm = lm_apply(&config, &rep)?;
            if let Some(tw) = post_twist {
                lm = twist(&parse_poly(lm.vars(), tw)?, &lm)?;
            }
            (emit_rep(&lm, generator.as_deref(), *format)?, EXIT_OK)
        }
        Command::Reproduce { theorem, n, fixtures, format } => {
            let r = match fixtures {
                Some(dir) => {
                    if *theorem != Theorem::Iter {
                        return Err(usage("--fixtures only applies to --theorem iter"));
                    }
                    if *n != 3 {
                        return Err(usage("the golden matrices are for n = 3"));
                    }
                    lm_iteration_report(*n, Some(&load_golden(dir)?))?
                }
                None => reproduce(*theorem, *n)?,
            };
            (emit_report(&r, *format), status_code(r.status))
        }
    };
    out.write_all(text.as_bytes()).map_err(|source| WrepError::Io { path: PathBuf::from("<stdout>"), source })?;
    Ok(code)
}

/// Parses `argv` (program name first) and runs it.
pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(rendered.as_bytes()) } else { out.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    match execute(&cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "wrep: {e}");
            error_code(&e)
        }
    }
}

/// Errors that state a mathematical fact about valid input map to 1, the rest to 2.
pub fn error_code(e: &WrepError) -> i32 {
    use wrep_core::Error as E;
    match e {
        WrepError::Core(E::Cond1Violation { .. } | E::BadInverse(_) | E::ClosureFailure { .. }) => EXIT_FAIL,
        _ => EXIT_USAGE,
    }
}
