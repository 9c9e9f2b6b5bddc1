use alloc::vec::Vec;
use core::fmt;

use super::{act, words_equal, ActionSpec, WeldedGen, WeldedWord};
use crate::freegroup::{FreeEndo, FreeWord};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum XiKind {
    /// `x_i ↦ (τ_{i-1}⋯τ_1)^{-1} (σ_i τ_i) (τ_{i-1}⋯τ_1)`.
    Xi1,
    /// Every `x_i` goes to the identity.
    Trivial,
}

impl fmt::Display for XiKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            XiKind::Xi1 => "xi1",
            XiKind::Trivial => "trivial",
        })
    }
}

/// A group morphism `F_n -> wB_{n+1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct XiSpec {
    pub kind: XiKind,
    pub n: usize,
}

impl XiSpec {
    pub fn new(kind: XiKind, n: usize) -> Self {
        XiSpec { kind, n }
    }

    /// Image of the generator `x_k` in `wB_{n+1}`.
    pub fn generator_image(&self, k: usize) -> Result<WeldedWord> {
        if k == 0 || k > self.n {
            return Err(Error::IndexOutOfRange { index: k, bound: self.n });
        }
        match self.kind {
            XiKind::Trivial => Ok(WeldedWord::identity(self.n + 1)),
            XiKind::Xi1 => {
                // τ_1 ⋯ τ_{k-1} σ_k τ_k τ_{k-1} ⋯ τ_1
                let mut gens: Vec<WeldedGen> = (1..k).map(WeldedGen::Tau).collect();
                gens.push(WeldedGen::Sigma(k));
                gens.push(WeldedGen::Tau(k));
                gens.extend((1..k).rev().map(WeldedGen::Tau));
                WeldedWord::new(self.n + 1, gens)
            }
        }
    }

    /// Multiplicative extension to arbitrary reduced words.
    pub fn image(&self, w: &FreeWord) -> Result<WeldedWord> {
        if w.rank() != self.n {
            return Err(Error::RankMismatch { left: self.n, right: w.rank() });
        }
        let mut out = WeldedWord::identity(self.n + 1);
        for l in w.letters() {
            let g = self.generator_image(l.gen)?;
            out = out.mul(&if l.inv { g.inverse() } else { g })?;
        }
        Ok(out)
    }
}

/// Result of checking `(id_1 * λ) ∘ ξ(x) = ξ(α(λ)(x)) ∘ (id_1 * λ)` on generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cond1Report {
    pub pass: bool,
    pub pairs_checked: usize,
    /// First failing pair `(λ, k)` meaning generator `λ` of `wB_n` against `x_k`.
    pub counterexample: Option<(WeldedGen, usize)>,
}

/// Checks the compatibility condition on all pairs `(λ, x_k)` with `λ ∈ {σ_i, τ_i}`.
///
/// Both sides are multiplicative in `x` and satisfy the same crossed rule in `λ`, so
/// agreement on generators gives agreement on the whole of `F_n ⋊ wB_n`.
pub fn check_cond1(alpha: &ActionSpec, xi: &XiSpec, n: usize) -> Result<Cond1Report> {
    if n < 2 {
        return Err(Error::InvalidArgument(alloc::format!("compatibility needs n >= 2, got {n}")));
    }
    if xi.n != n {
        return Err(Error::RankMismatch { left: n, right: xi.n });
    }
    let mut checked = 0;
    for g in WeldedGen::generators(n) {
        let lam = WeldedWord::from_gen(n, g)?;
        let shifted = lam.shift();
        let endo = act(alpha, &lam)?;
        for k in 1..=n {
            checked += 1;
            let x = FreeWord::generator(n, k)?;
            let lhs = shifted.mul(&xi.image(&x)?)?;
            let rhs = xi.image(&endo.apply(&x)?)?.mul(&shifted)?;
            if !words_equal(&lhs, &rhs)? {
                return Ok(Cond1Report {
                    pass: false,
                    pairs_checked: checked,
                    counterexample: Some((g, k)),
                });
            }
        }
    }
    Ok(Cond1Report { pass: true, pairs_checked: checked, counterexample: None })
}

/// Whether the Artin image of `ξ_{n,1}(x_i)` in `wB_{n+1}` is `ε_{i+1,1}`:
/// `x_1 ↦ x_{i+1}^{-1} x_1 x_{i+1}`, all other generators fixed.
pub fn epsilon_check(n: usize, i: usize) -> Result<bool> {
    let xi = XiSpec::new(XiKind::Xi1, n);
    let img = xi.image(&FreeWord::generator(n, i)?)?;
    let endo = act(&ActionSpec::artin(), &img)?;
    let rank = n + 1;
    let x1 = FreeWord::generator(rank, 1)?;
    let xk = FreeWord::generator(rank, i + 1)?;
    let expected = FreeEndo::with_overrides(rank, &[(1, xk.inverse().mul(&x1)?.mul(&xk)?)])?;
    Ok(endo == expected)
}
