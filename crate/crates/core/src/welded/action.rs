use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::{defining_relations, Relation, WeldedGen, WeldedWord};
use crate::freegroup::{FreeEndo, FreeWord, Letter};
use crate::{Error, Result};

/// Local actions of `σ_i` on `F_n`: the Artin action and Wada's seven types.
///
/// Each type fixes `x_j` for `j ∉ {i, i+1}` and sends `(x_i, x_{i+1})` to a pair of
/// words `(u, v)` in `a = x_i`, `b = x_{i+1}`:
///
/// | kind        | `u`               | `v`                   |
/// |-------------|-------------------|-----------------------|
/// | `Wada1`     | `a`               | `b`                   |
/// | `Wada2`     | `b^-1`            | `a`                   |
/// | `Wada3`     | `b^-1`            | `a^-1`                |
/// | `Wada4(h)`  | `b`               | `b^-h a b^h`          |
/// | `Wada5`     | `b`               | `b a^-1 b`            |
/// | `Wada6`     | `b^-1`            | `b a b`               |
/// | `Wada7`     | `a b^-1 a^-1`     | `a b^2`               |
///
/// `Artin` is `Wada4(1)`. `τ_i` always acts by swapping `x_i` and `x_{i+1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ActionKind {
    Artin,
    Wada1,
    Wada2,
    Wada3,
    Wada4(i64),
    Wada5,
    Wada6,
    Wada7,
}

impl ActionKind {
    /// Wada type number, with the Artin action reported as type 4.
    pub fn wada_type(self) -> u8 {
        match self {
            ActionKind::Wada1 => 1,
            ActionKind::Wada2 => 2,
            ActionKind::Wada3 => 3,
            ActionKind::Artin | ActionKind::Wada4(_) => 4,
            ActionKind::Wada5 => 5,
            ActionKind::Wada6 => 6,
            ActionKind::Wada7 => 7,
        }
    }

    pub fn from_type(ty: u8, h: i64) -> Result<Self> {
        Ok(match ty {
            1 => ActionKind::Wada1,
            2 => ActionKind::Wada2,
            3 => ActionKind::Wada3,
            4 => ActionKind::Wada4(h),
            5 => ActionKind::Wada5,
            6 => ActionKind::Wada6,
            7 => ActionKind::Wada7,
            _ => return Err(Error::InvalidArgument(alloc::format!("no Wada type {ty}"))),
        })
    }

    /// Images `(u, v)` of `σ_i` and `(u', v')` of `σ_i^{-1}` as letter strings in
    /// `a`, `b`; `±1` encodes `a^{±1}`, `±2` encodes `b^{±1}`.
    fn local_words(self) -> [Vec<i8>; 4] {
        use alloc::vec;
        match self {
            ActionKind::Artin => ActionKind::Wada4(1).local_words(),
            ActionKind::Wada1 => [vec![1], vec![2], vec![1], vec![2]],
            ActionKind::Wada2 => [vec![-2], vec![1], vec![2], vec![-1]],
            ActionKind::Wada3 => [vec![-2], vec![-1], vec![-2], vec![-1]],
            ActionKind::Wada4(h) => {
                let pw = |g: i8, k: i64| -> Vec<i8> {
                    let l = if k < 0 { -g } else { g };
                    vec![l; k.unsigned_abs() as usize]
                };
                let mut v = pw(2, -h);
                v.push(1);
                v.extend(pw(2, h));
                let mut ui = pw(1, h);
                ui.push(2);
                ui.extend(pw(1, -h));
                [vec![2], v, ui, vec![1]]
            }
            ActionKind::Wada5 => [vec![2], vec![2, -1, 2], vec![1, -2, 1], vec![1]],
            ActionKind::Wada6 => [vec![-2], vec![2, 1, 2], vec![1, 2, 1], vec![-1]],
            ActionKind::Wada7 => [vec![1, -2, -1], vec![1, 2, 2], vec![1, 1, 2], vec![-2, -1, 2]],
        }
    }
}

impl fmt::Display for ActionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ActionKind::Artin => f.write_str("artin"),
            ActionKind::Wada4(h) => write!(f, "wada4(h={h})"),
            k => write!(f, "wada{}", k.wada_type()),
        }
    }
}

/// A per-generator action of `wB_n` on `F_n`, with closed-form inverse images for `σ_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ActionSpec {
    kind: ActionKind,
}

impl ActionSpec {
    /// Validates that the stored `σ^{-1}` images invert the `σ` images on both sides.
    pub fn new(kind: ActionKind) -> Result<Self> {
        let spec = ActionSpec { kind };
        let fwd = spec.generator_endo(2, WeldedGen::Sigma(1))?;
        let inv = spec.generator_endo(2, WeldedGen::SigmaInv(1))?;
        if !fwd.compose(&inv)?.is_identity() || !inv.compose(&fwd)?.is_identity() {
            return Err(Error::BadInverse(alloc::format!("{kind}")));
        }
        Ok(spec)
    }

    pub fn artin() -> Self {
        ActionSpec { kind: ActionKind::Artin }
    }

    pub fn kind(&self) -> ActionKind {
        self.kind
    }

    /// Endomorphism of `F_n` attached to a single generator of `wB_n`.
    pub fn generator_endo(&self, n: usize, g: WeldedGen) -> Result<FreeEndo> {
        let i = g.index();
        if i == 0 || i >= n {
            return Err(Error::IndexOutOfRange { index: i, bound: n.saturating_sub(1) });
        }
        let word = |code: &[i8]| {
            FreeWord::from_letters(
                n,
                code.iter().map(|&c| Letter::new(i + c.unsigned_abs() as usize - 1, c < 0)),
            )
        };
        let (u, v) = match g {
            WeldedGen::Tau(_) => (word(&[2])?, word(&[1])?),
            WeldedGen::Sigma(_) => {
                let [u, v, _, _] = self.kind.local_words();
                (word(&u)?, word(&v)?)
            }
            WeldedGen::SigmaInv(_) => {
                let [_, _, u, v] = self.kind.local_words();
                (word(&u)?, word(&v)?)
            }
        };
        FreeEndo::with_overrides(n, &[(i, u), (i + 1, v)])
    }
}

impl fmt::Display for ActionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.kind.fmt(f)
    }
}

/// Composite of the per-generator endomorphisms, leftmost outermost.
pub fn act(spec: &ActionSpec, w: &WeldedWord) -> Result<FreeEndo> {
    let n = w.n();
    let mut acc = FreeEndo::identity(n);
    for &g in w.gens() {
        acc = acc.compose(&spec.generator_endo(n, g)?)?;
    }
    Ok(acc)
}

/// Equality in `wB_n`, decided by comparing Artin images.
pub fn words_equal(w1: &WeldedWord, w2: &WeldedWord) -> Result<bool> {
    if w1.n() != w2.n() {
        return Err(Error::GroupMismatch { left: w1.n(), right: w2.n() });
    }
    let artin = ActionSpec::artin();
    Ok(act(&artin, w1)? == act(&artin, w2)?)
}

/// Outcome of testing whether a Wada action respects every defining relation.
#[derive(Clone, Debug)]
pub struct WadaReport {
    pub kind: ActionKind,
    pub n: usize,
    pub extends: bool,
    pub violated: Vec<Relation>,
}

impl WadaReport {
    pub fn violated_strings(&self) -> Vec<String> {
        self.violated.iter().map(|r| alloc::format!("{r}")).collect()
    }
}

/// Checks every defining relation of `wB_n` as an equality of endomorphisms under
/// `kind`, with `τ_i` acting by permutation.
pub fn wada_extends(kind: ActionKind, n: usize) -> Result<WadaReport> {
    let spec = ActionSpec::new(kind)?;
    let mut violated = Vec::new();
    for rel in defining_relations(n)? {
        if act(&spec, &rel.lhs)? != act(&spec, &rel.rhs)? {
            violated.push(rel);
        }
    }
    Ok(WadaReport { kind, n, extends: violated.is_empty(), violated })
}
