//! The Long-Moody construction: representations of `wB_{n+1}` to representations of
//! `wB_n` of `n` times the dimension.
//!
//! The output acts on `I_{F_n} ⊗_{F_n} V`, a free module with basis
//! `(x_k - 1) ⊗ e_m`; that basis vector sits at index `(k-1)·d + m` (1-based `k`, `m`).
//! For a generator `g`, the block in row block `j`, column block `k` is
//! `ρ̂(c_{jk}) · ρ(id_1 * g)` where `α(g)(x_k) - 1 = Σ_j (x_j - 1) c_{jk}` and
//! `ρ̂(Σ a_w w) = Σ a_w ρ(ξ(w))`.

mod reports;

pub use reports::{
    lm_direct_sum_check, lm_dual_input_report, lm_iteration_report, lm_onedim_survey,
    lm_reproduce_burau, slot_order, tensor_candidates, Golden, SurveyEntry,
};

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::freegroup::{ideal_coordinates, FreeWord, GroupRingElem};
use crate::reps::MatrixRep;
use crate::ring::{LaurentPoly, MatrixLP};
use crate::welded::{check_cond1, ActionSpec, WeldedGen, XiKind, XiSpec};
use crate::{Error, Result};

/// The pair `(α, ξ)` on `F_n`, for inputs on `wB_{n+1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LMConfig {
    alpha: ActionSpec,
    xi: XiSpec,
    n: usize,
    checked: bool,
}

impl LMConfig {
    /// Fails with `Cond1Violation` unless the compatibility condition holds.
    pub fn new(alpha: ActionSpec, xi: XiKind, n: usize) -> Result<Self> {
        let xi = XiSpec::new(xi, n);
        let rep = check_cond1(&alpha, &xi, n)?;
        if let Some((g, k)) = rep.counterexample {
            return Err(Error::Cond1Violation { generator: g.to_string(), letter: k });
        }
        Ok(LMConfig { alpha, xi, n, checked: true })
    }

    /// Skips the compatibility check; the output need not be a representation.
    pub fn new_unchecked(alpha: ActionSpec, xi: XiKind, n: usize) -> Self {
        LMConfig { alpha, xi: XiSpec::new(xi, n), n, checked: false }
    }

    pub fn alpha(&self) -> ActionSpec {
        self.alpha
    }

    pub fn xi(&self) -> XiSpec {
        self.xi
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_checked(&self) -> bool {
        self.checked
    }
}

/// `ρ̂` on group-ring elements, memoised on reduced words.
pub struct RhoHat<'a> {
    rep: &'a MatrixRep,
    xi: XiSpec,
    memo: BTreeMap<FreeWord, MatrixLP>,
}

impl<'a> RhoHat<'a> {
    pub fn new(rep: &'a MatrixRep, xi: XiSpec) -> Self {
        RhoHat { rep, xi, memo: BTreeMap::new() }
    }

    /// `ρ(ξ(w))`.
    pub fn word(&mut self, w: &FreeWord) -> Result<MatrixLP> {
        if let Some(m) = self.memo.get(w) {
            return Ok(m.clone());
        }
        let m = match w.letters().split_last() {
            None => MatrixLP::identity(self.rep.dim(), self.rep.vars()),
            Some((&last, init)) => {
                let head = FreeWord::from_letters(w.rank(), init.iter().copied())?;
                let tail = FreeWord::from_letters(w.rank(), [last])?;
                let tail_img = self.rep.evaluate(&self.xi.image(&tail)?)?;
                self.word(&head)?.mul(&tail_img)?
            }
        };
        self.memo.insert(w.clone(), m.clone());
        Ok(m)
    }

    pub fn elem(&mut self, c: &GroupRingElem) -> Result<MatrixLP> {
        let vars = self.rep.vars().clone();
        let mut acc = MatrixLP::zero(self.rep.dim(), self.rep.dim(), &vars);
        for (w, a) in c.terms() {
            if a.is_zero() {
                continue;
            }
            let m = self.word(w)?;
            acc = acc.add(&m.scale(&LaurentPoly::constant(&vars, a.clone()))?)?;
        }
        Ok(acc)
    }
}

fn check_input(cfg: &LMConfig, rep: &MatrixRep) -> Result<()> {
    if rep.n() != cfg.n + 1 {
        return Err(Error::GroupMismatch { left: cfg.n + 1, right: rep.n() });
    }
    Ok(())
}

/// The `n·d`-square image of one generator of `wB_n`.
pub fn lm_generator_matrix(cfg: &LMConfig, rep: &MatrixRep, g: WeldedGen) -> Result<MatrixLP> {
    check_input(cfg, rep)?;
    let mut hat = RhoHat::new(rep, cfg.xi);
    generator_matrix(cfg, &mut hat, g)
}

fn generator_matrix(cfg: &LMConfig, hat: &mut RhoHat<'_>, g: WeldedGen) -> Result<MatrixLP> {
    let n = cfg.n;
    let rep = hat.rep;
    let d = rep.dim();
    let vars = rep.vars().clone();
    let endo = cfg.alpha.generator_endo(n, g)?;
    let right = rep.image(g.shift())?.clone();
    let mut out = MatrixLP::zero(n * d, n * d, &vars);
    for k in 1..=n {
        let coords = ideal_coordinates(endo.image(k));
        for (j, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let block = hat.elem(c)?.mul(&right)?;
            for r in 0..d {
                for s in 0..d {
                    out.set(j * d + r, (k - 1) * d + s, block.get(r, s).clone());
                }
            }
        }
    }
    Ok(out)
}

/// Applies the construction to a representation of `wB_{n+1}`.
///
/// `σ_i^{-1}` images are built from the closed-form inverse action, and the result is
/// rejected with `BadInverse` if they fail to invert the `σ_i` images.
pub fn lm_apply(cfg: &LMConfig, rep: &MatrixRep) -> Result<MatrixRep> {
    check_input(cfg, rep)?;
    let n = cfg.n;
    let mut hat = RhoHat::new(rep, cfg.xi);
    let mut sigma = Vec::with_capacity(n - 1);
    let mut sigma_inv = Vec::with_capacity(n - 1);
    let mut tau = Vec::with_capacity(n - 1);
    for i in 1..n {
        sigma.push(generator_matrix(cfg, &mut hat, WeldedGen::Sigma(i))?);
        sigma_inv.push(generator_matrix(cfg, &mut hat, WeldedGen::SigmaInv(i))?);
        tau.push(generator_matrix(cfg, &mut hat, WeldedGen::Tau(i))?);
    }
    let name = format!("LM[{}, {}]({})", cfg.alpha, cfg.xi.kind, rep.name);
    MatrixRep::with_inverses(name, n, sigma, sigma_inv, tau)
}

/// A Long-Moody output has `n·d` dimensions, so `target_dim` must be a multiple of `n`.
pub fn lm_dimension_guard(target_dim: usize, n: usize) -> bool {
    n > 0 && target_dim.is_multiple_of(n)
}
