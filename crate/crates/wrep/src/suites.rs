//! Theorem-reproduction suites run by `wrep reproduce`, with the golden matrices
//! compiled in.

use std::fmt;
use std::str::FromStr;

use wrep_core::longmoody::{
    lm_direct_sum_check, lm_dual_input_report, lm_iteration_report, lm_onedim_survey,
    lm_reproduce_burau, Golden, LMConfig,
};
use wrep_core::reps::{
    burau, conjugate, dual_burau, dual_reduced_burau, dual_tym, onedim, rep_certificates, twist, tym,
    RepReport, Status,
};
use wrep_core::ring::{LaurentPoly, MatrixLP, Vars};
use wrep_core::welded::{ActionSpec, XiKind};

use crate::error::{Result, WrepError};
use crate::json::parse_fixture;

const LM12_SIGMA1: &str = include_str!("../fixtures/lm12_sigma1.json");
const LM12_SIGMA2: &str = include_str!("../fixtures/lm12_sigma2.json");
const LM9_SIGMA1: &str = include_str!("../fixtures/lm9_sigma1.json");
const LM9_SIGMA2: &str = include_str!("../fixtures/lm9_sigma2.json");

fn one(text: &str) -> Result<MatrixLP> {
    let mut v = parse_fixture(text)?;
    if v.len() != 1 {
        return Err(WrepError::Schema(format!("expected one matrix, found {}", v.len())));
    }
    Ok(v.remove(0))
}

/// The built-in 12×12 and 9×9 matrices for the `n = 3` iteration.
pub fn golden() -> Result<Golden> {
    Ok(Golden {
        lm_sigma: vec![one(LM12_SIGMA1)?, one(LM12_SIGMA2)?],
        quotient_sigma: vec![one(LM9_SIGMA1)?, one(LM9_SIGMA2)?],
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Theorem {
    /// `t^{-1} LM(t)` is Burau.
    RecBur,
    /// Iteration on the twisted dual Burau representation.
    Iter,
    /// Iteration on the twisted Burau representation.
    Dual,
    DirectSum,
    /// No implemented configuration yields TYM.
    NoTym,
    /// Trace and determinant certificates of non-equivalence.
    Certs,
}

impl Theorem {
    pub const ALL: [Theorem; 6] =
        [Theorem::RecBur, Theorem::Iter, Theorem::Dual, Theorem::DirectSum, Theorem::NoTym, Theorem::Certs];

    pub fn as_str(self) -> &'static str {
        match self {
            Theorem::RecBur => "recbur",
            Theorem::Iter => "iter",
            Theorem::Dual => "dual",
            Theorem::DirectSum => "directsum",
            Theorem::NoTym => "notym",
            Theorem::Certs => "certs",
        }
    }

    pub fn min_n(self) -> usize {
        match self {
            Theorem::Iter | Theorem::Dual => 3,
            _ => 2,
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Theorem {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| format!("unknown theorem `{s}`"))
    }
}

fn tq() -> (Vars, LaurentPoly, LaurentPoly) {
    let v = Vars::new(&["t", "q"]);
    let t = LaurentPoly::var(&v, "t").expect("t in context");
    let q = LaurentPoly::var(&v, "q").expect("q in context");
    (v, t, q)
}

/// Folds sub-reports into one: fails if any part fails.
fn merge(check: String, parts: Vec<RepReport>) -> RepReport {
    let mut r = RepReport::new(check, Status::Pass);
    for p in parts {
        r.require(p.status != Status::Fail, format!("{}: {}", p.check, p.status));
        if p.status == Status::Inconclusive && r.status == Status::Pass {
            r.status = Status::Inconclusive;
        }
        r.details.extend(p.details.into_iter().map(|d| format!("  {d}")));
        r.certificates.extend(p.certificates);
        r.fixtures_compared += p.fixtures_compared;
    }
    r
}

/// The three direct-sum instances on `wB_{n+1}` inputs.
pub fn direct_sum_suite(n: usize) -> Result<RepReport> {
    let (v, t, q) = tq();
    let cfg = LMConfig::new(ActionSpec::artin(), XiKind::Xi1, n)?;
    let one = LaurentPoly::one(&v);
    let d = n + 1;
    let red = twist(&q, &dual_reduced_burau(d, &t)?)?.with_name("q·dual_reduced_burau");
    let line = onedim(d, &q)?.with_name("onedim(q)");
    let mut parts = vec![
        lm_direct_sum_check(&cfg, &onedim(d, &t)?.with_name("onedim(t)"), &onedim(d, &q)?.with_name("onedim(q)"))?,
        lm_direct_sum_check(&cfg, &onedim(d, &one)?.with_name("onedim(1)"), &onedim(d, &one)?.with_name("onedim(1)"))?,
        lm_direct_sum_check(&cfg, &red, &line)?,
    ];
    // the split itself: q·dual_burau in the r^{-T} basis, trivial line last
    let rit = MatrixLP::lower_ones(d, &v).inverse()?.transpose();
    let split = conjugate(&twist(&q, &dual_burau(d, &t)?)?, &rit)?;
    let mut off = 0;
    for m in split.sigma().iter().chain(split.tau()) {
        off += (0..d - 1).filter(|&c| !m.get(d - 1, c).is_zero()).count();
    }
    if let Some(last) = parts.last_mut() {
        last.note(format!(
            "q·dual_burau in the r^(-T) basis has {off} nonzero entries coupling the line to the rest"
        ));
    }
    Ok(merge(format!("directsum n={n}"), parts))
}

/// Trace separates Burau from TYM, determinant separates TYM from its dual.
pub fn certificates_suite(n: usize) -> Result<RepReport> {
    let v = Vars::new(&["t"]);
    let t = LaurentPoly::var(&v, "t")?;
    let a = rep_certificates(&burau(n, &t)?, &tym(n, &t)?)?;
    let b = rep_certificates(&tym(n, &t)?, &dual_tym(n, &t)?)?;
    let mut r = merge(format!("certs n={n}"), vec![a.clone(), b.clone()]);
    use wrep_core::reps::Invariant;
    let has = |rep: &RepReport, inv: Invariant| rep.certificates.iter().any(|c| c.invariant == inv);
    r.require(has(&a, Invariant::Trace), "a trace certificate separates burau from tym");
    r.require(has(&b, Invariant::Det), "a determinant certificate separates tym from dual_tym");
    Ok(r)
}

pub fn reproduce(theorem: Theorem, n: usize) -> Result<RepReport> {
    if n < theorem.min_n() {
        return Err(WrepError::Core(wrep_core::Error::InvalidArgument(format!(
            "{theorem} needs n >= {}, got {n}",
            theorem.min_n()
        ))));
    }
    Ok(match theorem {
        Theorem::RecBur => lm_reproduce_burau(n, XiKind::Xi1)?,
        Theorem::Iter => {
            let g = if n == 3 { Some(golden()?) } else { None };
            lm_iteration_report(n, g.as_ref())?
        }
        Theorem::Dual => lm_dual_input_report(n)?,
        Theorem::DirectSum => direct_sum_suite(n)?,
        Theorem::NoTym => lm_onedim_survey(n)?.0,
        Theorem::Certs => certificates_suite(n)?,
    })
}
