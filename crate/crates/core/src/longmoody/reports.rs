use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::{lm_apply, LMConfig};
use crate::reps::{
    burau, conjugate, coordinate_subquotient, direct_sum, dual_burau, dual_rep, dual_tym, lift_rep,
    onedim, permutation, substitute_rep, tensor_rep, twist, tym, verify_rep, DualVariant, MatrixRep,
    RepReport, Status,
};
use crate::ring::{LaurentPoly, MatrixLP, Vars};
use crate::welded::{check_cond1, wada_extends, ActionKind, ActionSpec, XiKind, XiSpec};
use crate::{Error, Result};

/// Stored golden matrices for the `n = 3` iteration: the two `σ` images of the
/// 12-dimensional output and of its 9-dimensional quotient.
#[derive(Clone, Debug)]
pub struct Golden {
    pub lm_sigma: Vec<MatrixLP>,
    pub quotient_sigma: Vec<MatrixLP>,
}

fn tq() -> (Vars, LaurentPoly, LaurentPoly) {
    let v = Vars::new(&["t", "q"]);
    let t = LaurentPoly::var(&v, "t").expect("t in context");
    let q = LaurentPoly::var(&v, "q").expect("q in context");
    (v, t, q)
}

/// Basis order putting the slots `m ∈ first` (0-based) of every column block first, in
/// increasing `k`, followed by every other index in increasing order.
pub fn slot_order(n: usize, d: usize, first: &[usize]) -> Vec<usize> {
    let mut head: Vec<usize> = (0..n).flat_map(|k| first.iter().map(move |&m| k * d + m)).collect();
    head.sort_unstable();
    let tail = (0..n * d).filter(|i| !head.contains(i));
    let mut out = head.clone();
    out.extend(tail);
    out
}

/// `Bur ⊗ Bur*` and `Bur* ⊗ Bur` in both variable orders, all on `n` strands over `{t, q}`.
pub fn tensor_candidates(n: usize) -> Result<Vec<(String, MatrixRep)>> {
    let (_, t, q) = tq();
    let mut out = Vec::new();
    for (x, y, xs, ys) in [(&t, &q, "t", "q"), (&q, &t, "q", "t")] {
        out.push((format!("bur({xs}) ⊗ bur*({ys})"), tensor_rep(&burau(n, x)?, &dual_burau(n, y)?)?));
        out.push((format!("bur*({xs}) ⊗ bur({ys})"), tensor_rep(&dual_burau(n, x)?, &burau(n, y)?)?));
    }
    Ok(out)
}

/// A catalog family at the parameter `u`, rewritten over `{t, q}` with `u = qt`.
fn in_qt(build: impl Fn(usize, &LaurentPoly) -> Result<MatrixRep>, n: usize) -> Result<MatrixRep> {
    let (v, t, q) = tq();
    let uv = Vars::new(&["u"]);
    let u = LaurentPoly::var(&uv, "u")?;
    substitute_rep(&build(n, &u)?, &v, &[&q * &t])
}

fn matching(rep: &MatrixRep, cands: &[(String, MatrixRep)]) -> Vec<String> {
    cands
        .iter()
        .filter(|(_, c)| c.dim() == rep.dim() && c.same_images(rep))
        .map(|(name, _)| name.clone())
        .collect()
}

/// Compares two matrices entrywise and records each differing entry (1-based).
fn compare(report: &mut RepReport, label: &str, got: &MatrixLP, want: &MatrixLP) -> Result<bool> {
    let vars = got.vars().union(want.vars());
    let (g, w) = (got.lift(&vars)?, want.lift(&vars)?);
    if g.dims() != w.dims() {
        report.require(false, format!("{label}: shape {:?} vs fixture {:?}", g.dims(), w.dims()));
        return Ok(false);
    }
    let diffs = g.diff_positions(&w);
    for &(r, c) in &diffs {
        report.note(format!(
            "{label}: entry ({}, {}) computed {} vs stored {}",
            r + 1,
            c + 1,
            g.get(r, c),
            w.get(r, c)
        ));
    }
    report.require(diffs.is_empty(), format!("{label}: {} mismatching entries", diffs.len()));
    Ok(diffs.is_empty())
}

/// `t^{-1} LM(t)` against the Burau representation, with `τ` images checked to be the
/// permutation matrices.
pub fn lm_reproduce_burau(n: usize, xi: XiKind) -> Result<RepReport> {
    let v = Vars::new(&["t"]);
    let t = LaurentPoly::var(&v, "t")?;
    let cfg = LMConfig::new(ActionSpec::artin(), xi, n)?;
    let out = twist(&t.unit_inverse()?, &lm_apply(&cfg, &onedim(n + 1, &t)?)?)?;
    let bur = burau(n, &t)?;
    let perm = permutation(n, &v)?;
    let mut r = RepReport::new(format!("recbur n={n} xi={xi}"), Status::Pass);
    for i in 0..n - 1 {
        let s = &out.sigma()[i];
        r.require(s == &bur.sigma()[i], format!("s{} equals burau, {} differing entries", i + 1, s.diff_positions(&bur.sigma()[i]).len()));
        r.require(out.tau()[i] == perm.tau()[i], format!("t{} is the transposition", i + 1));
    }
    if r.passed() {
        r.matched_candidate = Some(String::from("burau"));
    }
    Ok(r)
}

/// Iterating on the twisted dual Burau representation of `wB_{n+1}`.
///
/// Checks that the `e_1`-slots span a subrepresentation equal to Burau at `qt`, finds
/// which tensor orientation the quotient equals and, given golden matrices, compares
/// them entrywise (`τ` images against the golden `σ` images at `t = q = 1`).
pub fn lm_iteration_report(n: usize, golden: Option<&Golden>) -> Result<RepReport> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("iteration needs n >= 2, got {n}")));
    }
    let (v, t, q) = tq();
    let cfg = LMConfig::new(ActionSpec::artin(), XiKind::Xi1, n)?;
    let input = twist(&q, &dual_burau(n + 1, &t)?)?;
    let lm = twist(&q.unit_inverse()?, &lm_apply(&cfg, &input)?)?;
    let d = n + 1;
    let mut r = RepReport::new(format!("iter n={n}"), Status::Pass);
    r.require(verify_rep(&lm)?.is_empty(), format!("{}-dimensional output satisfies every relation", lm.dim()));

    let order = slot_order(n, d, &[0]);
    r.note(format!("e_1 slots (1-based): {:?}", order[..n].iter().map(|i| i + 1).collect::<Vec<_>>()));
    let p = MatrixLP::permutation(&order, &v)?;
    let (sub, quot) = match coordinate_subquotient(&lm, &p, n) {
        Ok(x) => x,
        Err(e @ Error::ClosureFailure { .. }) => {
            r.require(false, format!("e_1-slot closure: {e}"));
            return Ok(r);
        }
        Err(e) => return Err(e),
    };
    r.require(true, "e_1-slot span is closed");
    r.require(sub.same_images(&in_qt(burau, n)?), "sub equals burau at u = qt");

    let cands = tensor_candidates(n)?;
    let hits = matching(&quot, &cands);
    r.require(hits.len() == 1, format!("quotient matches exactly one orientation: {hits:?}"));
    if !hits.is_empty() {
        r.matched_candidate = Some(hits.join(", "));
    }

    if let Some(g) = golden {
        let one = LaurentPoly::one(&v);
        let at_one = [("t", one.clone()), ("q", one)];
        for (i, want) in g.lm_sigma.iter().enumerate() {
            compare(&mut r, &format!("s{} ({}x{})", i + 1, lm.dim(), lm.dim()), &lm.sigma()[i], want)?;
            let want = want.lift(&v)?.try_map(&v, |e| e.specialize(&at_one))?;
            compare(&mut r, &format!("t{} vs s{} at t=q=1", i + 1, i + 1), &lm.tau()[i], &want)?;
            r.fixtures_compared += 1;
        }
        for (i, want) in g.quotient_sigma.iter().enumerate() {
            compare(&mut r, &format!("quotient s{}", i + 1), &quot.sigma()[i], want)?;
            r.fixtures_compared += 1;
        }
    }
    Ok(r)
}

/// The same pipeline on the twisted Burau representation: the span of the slots
/// `e_2, …, e_{n+1}` should be closed with quotient the dual Burau representation at `qt`.
pub fn lm_dual_input_report(n: usize) -> Result<RepReport> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("iteration needs n >= 2, got {n}")));
    }
    let (v, t, q) = tq();
    let cfg = LMConfig::new(ActionSpec::artin(), XiKind::Xi1, n)?;
    let input = twist(&q, &burau(n + 1, &t)?)?;
    let lm = twist(&q.unit_inverse()?, &lm_apply(&cfg, &input)?)?;
    let d = n + 1;
    let mut r = RepReport::new(format!("dual n={n}"), Status::Pass);
    let rest: Vec<usize> = (1..d).collect();
    let order = slot_order(n, d, &rest);
    let p = MatrixLP::permutation(&order, &v)?;
    let (sub, quot) = match coordinate_subquotient(&lm, &p, n * n) {
        Ok(x) => x,
        Err(e @ Error::ClosureFailure { .. }) => {
            r.require(false, format!("complementary closure: {e}"));
            return Ok(r);
        }
        Err(e) => return Err(e),
    };
    r.require(true, "span of slots e_2..e_{n+1} is closed");

    let mut cands = tensor_candidates(n)?;
    for (x, y, xs, ys) in [(&t, &q, "t", "q"), (&q, &t, "q", "t")] {
        cands.push((format!("bur({xs}) ⊗ bur({ys})"), tensor_rep(&burau(n, x)?, &burau(n, y)?)?));
    }
    let sub_hits = matching(&sub, &cands);
    r.note(format!("sub matches {sub_hits:?}"));

    let qt = |b: fn(usize, &LaurentPoly) -> Result<MatrixRep>| in_qt(b, n);
    let bur_qt = qt(burau)?;
    let variants = vec![
        (String::from("dual_burau(qt)"), qt(dual_burau)?),
        (String::from("burau(qt)"), bur_qt.clone()),
        (String::from("transpose-inverse of burau(qt)"), dual_rep(&bur_qt, DualVariant::TransposeInverse)?),
    ];
    let hits = matching(&quot, &variants);
    r.note(format!("quotient matches {hits:?}"));
    r.matched_candidate = Some(format!("quotient: {hits:?}; sub: {sub_hits:?}"));
    r.require(hits.iter().any(|h| h == "dual_burau(qt)"), "quotient equals dual_burau at u = qt");
    Ok(r)
}

/// `LM(ρ1 ⊕ ρ2)` against `P (LM(ρ1) ⊕ LM(ρ2)) P^T` for the interleaving permutation `P`.
pub fn lm_direct_sum_check(cfg: &LMConfig, a: &MatrixRep, b: &MatrixRep) -> Result<RepReport> {
    let n = cfg.n();
    let vars = a.vars().union(b.vars());
    let (a, b) = (lift_rep(a, &vars)?, lift_rep(b, &vars)?);
    let whole = lm_apply(cfg, &direct_sum(&a, &b)?)?;
    let parts = direct_sum(&lm_apply(cfg, &a)?, &lm_apply(cfg, &b)?)?;
    let (d1, d2) = (a.dim(), b.dim());
    let order: Vec<usize> = (0..n)
        .flat_map(|k| {
            (0..d1 + d2).map(move |m| if m < d1 { k * d1 + m } else { n * d1 + k * d2 + (m - d1) })
        })
        .collect();
    let p = MatrixLP::permutation(&order, &vars)?;
    let moved = conjugate(&parts, &p)?;
    let mut r = RepReport::new(format!("directsum {} ⊕ {}", a.name, b.name), Status::Pass);
    r.note(format!("interleaving (new index <- old index, 1-based): {:?}", order.iter().map(|i| i + 1).collect::<Vec<_>>()));
    r.require(whole.same_images(&moved), "LM of the sum equals the permuted sum of LMs");
    Ok(r)
}

/// One row of [`lm_onedim_survey`].
#[derive(Clone, Debug)]
pub struct SurveyEntry {
    pub alpha: ActionKind,
    pub xi: XiKind,
    pub extends: bool,
    pub cond1: bool,
    /// Name of the first catalog representation equal to `t^{-1} LM(t)`, `"other"` if
    /// none; `None` when the pair is not a valid configuration.
    pub class: Option<String>,
    pub sigma1: Option<MatrixLP>,
}

/// Actions tried by [`lm_onedim_survey`].
pub const SURVEY_ACTIONS: [ActionKind; 11] = [
    ActionKind::Artin,
    ActionKind::Wada1,
    ActionKind::Wada2,
    ActionKind::Wada3,
    ActionKind::Wada4(-1),
    ActionKind::Wada4(0),
    ActionKind::Wada4(2),
    ActionKind::Wada4(3),
    ActionKind::Wada5,
    ActionKind::Wada6,
    ActionKind::Wada7,
];

/// Runs `t^{-1} LM(t)` over every implemented `(α, ξ)` with `α` extending to `wB_n` and
/// the compatibility condition holding, and classifies the outputs entrywise.
///
/// Passes iff no output is TYM or its dual and every output is Burau or the
/// permutation representation.
pub fn lm_onedim_survey(n: usize) -> Result<(RepReport, Vec<SurveyEntry>)> {
    let v = Vars::new(&["t"]);
    let t = LaurentPoly::var(&v, "t")?;
    let ti = t.unit_inverse()?;
    let bur = burau(n, &t)?;
    let trivial_n = MatrixRep::new(
        "trivial",
        n,
        vec![MatrixLP::identity(n, &v); n - 1],
        vec![MatrixLP::identity(n, &v); n - 1],
    )?;
    let known = [(String::from("burau"), bur.clone()),
        (String::from("permutation"), permutation(n, &v)?),
        (String::from("trivial"), trivial_n),
        (String::from("dual_burau"), dual_burau(n, &t)?),
        (String::from("transpose-inverse burau"), dual_rep(&bur, DualVariant::TransposeInverse)?),
        (String::from("tym"), tym(n, &t)?),
        (String::from("dual_tym"), dual_tym(n, &t)?)];
    let mut entries = Vec::new();
    let mut r = RepReport::new(format!("notym n={n}"), Status::Pass);
    let mut bad_class = Vec::new();
    let mut tym_hit = false;
    for kind in SURVEY_ACTIONS {
        let extends = wada_extends(kind, n)?.extends;
        let spec = ActionSpec::new(kind)?;
        for xi in [XiKind::Xi1, XiKind::Trivial] {
            let cond1 = check_cond1(&spec, &XiSpec::new(xi, n), n)?.pass;
            let mut e = SurveyEntry { alpha: kind, xi, extends, cond1, class: None, sigma1: None };
            if extends && cond1 {
                let cfg = LMConfig::new(spec, xi, n)?;
                let out = twist(&ti, &lm_apply(&cfg, &onedim(n + 1, &t)?)?)?;
                let class = known
                    .iter()
                    .find(|(_, k)| k.same_images(&out))
                    .map(|(name, _)| name.clone())
                    .unwrap_or_else(|| String::from("other"));
                if class == "tym" || class == "dual_tym" {
                    tym_hit = true;
                }
                if class != "burau" && class != "permutation" {
                    bad_class.push(format!("{kind} + {xi}: {class}"));
                }
                r.note(format!("{kind} + {xi}: {class}; s1 = {}", out.sigma()[0]));
                e.sigma1 = Some(out.sigma()[0].clone());
                e.class = Some(class);
            } else {
                r.note(format!("{kind} + {xi}: skipped (extends={extends}, cond1={cond1})"));
            }
            entries.push(e);
        }
    }
    r.require(!tym_hit, "no valid configuration produces tym or dual_tym");
    r.require(
        bad_class.is_empty(),
        format!("every valid output is burau or permutation; exceptions: {bad_class:?}"),
    );
    Ok((r, entries))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slot_order_e1_first() {
        assert_eq!(slot_order(3, 4, &[0])[..3], [0, 4, 8]);
        let o = slot_order(2, 3, &[1, 2]);
        assert_eq!(o, vec![1, 2, 4, 5, 0, 3]);
    }

    #[test]
    fn recbur_small() {
        assert!(lm_reproduce_burau(2, XiKind::Xi1).unwrap().passed());
        assert!(!lm_reproduce_burau(3, XiKind::Trivial).unwrap().passed());
    }

    #[test]
    fn direct_sum_onedims() {
        let (v, t, q) = tq();
        let cfg = LMConfig::new(ActionSpec::artin(), XiKind::Xi1, 3).unwrap();
        let r = lm_direct_sum_check(&cfg, &onedim(4, &t).unwrap(), &onedim(4, &q).unwrap()).unwrap();
        assert!(r.passed(), "{:?}", r.details);
        let one = LaurentPoly::one(&v);
        let r = lm_direct_sum_check(&cfg, &onedim(4, &one).unwrap(), &onedim(4, &one).unwrap()).unwrap();
        assert!(r.passed());
    }
}
