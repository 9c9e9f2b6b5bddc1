//! Welded braid groups `wB_n`.
//!
//! A [`WeldedWord`] lists generators left to right and denotes their composite, so
//! `t1 s2 s1` is `τ_1 ∘ σ_2 ∘ σ_1`. Equality of words is decided through the Artin
//! action on `F_n`, which is injective.

mod action;
mod xi;

pub use action::{act, wada_extends, words_equal, ActionKind, ActionSpec, WadaReport};
pub use xi::{check_cond1, epsilon_check, Cond1Report, XiKind, XiSpec};

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// A generator of `wB_n` or the inverse of a braid generator. `τ_i` is an involution.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum WeldedGen {
    Sigma(usize),
    SigmaInv(usize),
    Tau(usize),
}

impl WeldedGen {
    pub fn index(self) -> usize {
        match self {
            WeldedGen::Sigma(i) | WeldedGen::SigmaInv(i) | WeldedGen::Tau(i) => i,
        }
    }

    pub fn inverse(self) -> Self {
        match self {
            WeldedGen::Sigma(i) => WeldedGen::SigmaInv(i),
            WeldedGen::SigmaInv(i) => WeldedGen::Sigma(i),
            WeldedGen::Tau(i) => WeldedGen::Tau(i),
        }
    }

    /// Stabilisation `id_1 * -`: adds a strand on the left.
    pub fn shift(self) -> Self {
        match self {
            WeldedGen::Sigma(i) => WeldedGen::Sigma(i + 1),
            WeldedGen::SigmaInv(i) => WeldedGen::SigmaInv(i + 1),
            WeldedGen::Tau(i) => WeldedGen::Tau(i + 1),
        }
    }

    /// `+1` for `σ_i`, `-1` for `σ_i^{-1}`, `0` for `τ_i`.
    pub fn sigma_exponent(self) -> i64 {
        match self {
            WeldedGen::Sigma(_) => 1,
            WeldedGen::SigmaInv(_) => -1,
            WeldedGen::Tau(_) => 0,
        }
    }

    pub fn parse(tok: &str) -> Result<Self> {
        let mut chars = tok.chars();
        let kind = chars.next().ok_or_else(|| Error::Parse("empty generator".to_string()))?;
        let idx: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::Parse(alloc::format!("bad generator `{tok}`")))?;
        match kind {
            's' => Ok(WeldedGen::Sigma(idx)),
            'S' => Ok(WeldedGen::SigmaInv(idx)),
            't' | 'T' => Ok(WeldedGen::Tau(idx)),
            _ => Err(Error::Parse(alloc::format!("bad generator `{tok}`"))),
        }
    }

    /// The generators `σ_i`, `τ_i` of `wB_n`.
    pub fn generators(n: usize) -> impl Iterator<Item = WeldedGen> {
        (1..n).flat_map(|i| [WeldedGen::Sigma(i), WeldedGen::Tau(i)])
    }
}

impl fmt::Display for WeldedGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeldedGen::Sigma(i) => write!(f, "s{i}"),
            WeldedGen::SigmaInv(i) => write!(f, "S{i}"),
            WeldedGen::Tau(i) => write!(f, "t{i}"),
        }
    }
}

/// A word in the generators of `wB_n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WeldedWord {
    n: usize,
    gens: Vec<WeldedGen>,
}

impl WeldedWord {
    pub fn identity(n: usize) -> Self {
        WeldedWord { n, gens: Vec::new() }
    }

    pub fn new(n: usize, gens: Vec<WeldedGen>) -> Result<Self> {
        for g in &gens {
            let i = g.index();
            if i == 0 || i >= n {
                return Err(Error::IndexOutOfRange { index: i, bound: n.saturating_sub(1) });
            }
        }
        Ok(WeldedWord { n, gens })
    }

    pub fn from_gen(n: usize, g: WeldedGen) -> Result<Self> {
        Self::new(n, vec![g])
    }

    /// Parses whitespace-separated `s<i>`, `S<i>`, `t<i>` tokens; leftmost is applied last.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let gens = text
            .split_whitespace()
            .filter(|t| *t != "1")
            .map(WeldedGen::parse)
            .collect::<Result<_>>()?;
        Self::new(n, gens)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[WeldedGen] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    fn check_group(&self, other: &Self) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::GroupMismatch { left: self.n, right: other.n })
        }
    }

    /// Concatenation: `self ∘ other`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_group(other)?;
        let mut gens = self.gens.clone();
        gens.extend_from_slice(&other.gens);
        Ok(WeldedWord { n: self.n, gens })
    }

    pub fn inverse(&self) -> Self {
        WeldedWord { n: self.n, gens: self.gens.iter().rev().map(|g| g.inverse()).collect() }
    }

    /// Image under `wB_n -> wB_{n+1}`, `σ_i ↦ σ_{i+1}`, `τ_i ↦ τ_{i+1}`.
    pub fn shift(&self) -> Self {
        WeldedWord { n: self.n + 1, gens: self.gens.iter().map(|g| g.shift()).collect() }
    }

    /// Cancels adjacent inverse pairs, including `τ_i τ_i`.
    pub fn free_cancel(&self) -> Self {
        let mut out: Vec<WeldedGen> = Vec::with_capacity(self.gens.len());
        for &g in &self.gens {
            if out.last() == Some(&g.inverse()) {
                out.pop();
            } else {
                out.push(g);
            }
        }
        WeldedWord { n: self.n, gens: out }
    }

    /// Sum of σ exponents, the image under `wB_n -> Z`.
    pub fn sigma_exponent(&self) -> i64 {
        self.gens.iter().map(|g| g.sigma_exponent()).sum()
    }
}

impl fmt::Display for WeldedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return f.write_str("1");
        }
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for WeldedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeldedWord[wB{}]({})", self.n, self)
    }
}

/// One instance of a defining relation `lhs = rhs`, tagged with its family (1..=8).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub family: u8,
    pub lhs: WeldedWord,
    pub rhs: WeldedWord,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}

/// All instances of the eight relation families of `wB_n`:
///
/// 1. `σ_i σ_k = σ_k σ_i`, `|i-k| ≥ 2`
/// 2. `σ_i σ_{i+1} σ_i = σ_{i+1} σ_i σ_{i+1}`
/// 3. `τ_i τ_k = τ_k τ_i`, `|i-k| ≥ 2`
/// 4. `τ_i τ_{i+1} τ_i = τ_{i+1} τ_i τ_{i+1}`
/// 5. `τ_i² = 1`
/// 6. `σ_i τ_k = τ_k σ_i`, `|i-k| ≥ 2`
/// 7. `τ_i σ_{i+1} σ_i = σ_{i+1} σ_i τ_{i+1}`
/// 8. `σ_i τ_{i+1} τ_i = τ_{i+1} τ_i σ_{i+1}`
///
/// Commutation families 1 and 3 use unordered pairs `i < k`; family 6 uses ordered pairs.
pub fn defining_relations(n: usize) -> Result<Vec<Relation>> {
    use WeldedGen::{Sigma as S, Tau as T};
    if n < 2 {
        return Err(Error::InvalidArgument(alloc::format!("wB_{n} needs n >= 2")));
    }
    let mut out = Vec::new();
    let mut push = |family: u8, lhs: Vec<WeldedGen>, rhs: Vec<WeldedGen>| {
        out.push(Relation {
            family,
            lhs: WeldedWord { n, gens: lhs },
            rhs: WeldedWord { n, gens: rhs },
        });
    };
    let far = |i: usize, k: usize| i.abs_diff(k) >= 2;
    for i in 1..n {
        for k in i + 1..n {
            if far(i, k) {
                push(1, vec![S(i), S(k)], vec![S(k), S(i)]);
            }
        }
    }
    for i in 1..n.saturating_sub(1) {
        push(2, vec![S(i), S(i + 1), S(i)], vec![S(i + 1), S(i), S(i + 1)]);
    }
    for i in 1..n {
        for k in i + 1..n {
            if far(i, k) {
                push(3, vec![T(i), T(k)], vec![T(k), T(i)]);
            }
        }
    }
    for i in 1..n.saturating_sub(1) {
        push(4, vec![T(i), T(i + 1), T(i)], vec![T(i + 1), T(i), T(i + 1)]);
    }
    for i in 1..n {
        push(5, vec![T(i), T(i)], vec![]);
    }
    for i in 1..n {
        for k in 1..n {
            if far(i, k) {
                push(6, vec![S(i), T(k)], vec![T(k), S(i)]);
            }
        }
    }
    for i in 1..n.saturating_sub(1) {
        push(7, vec![T(i), S(i + 1), S(i)], vec![S(i + 1), S(i), T(i + 1)]);
    }
    for i in 1..n.saturating_sub(1) {
        push(8, vec![S(i), T(i + 1), T(i)], vec![T(i + 1), T(i), S(i + 1)]);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn relation_counts() {
        assert_eq!(defining_relations(2).unwrap().len(), 1);
        let r3 = defining_relations(3).unwrap();
        let per_family: Vec<usize> =
            (1..=8).map(|f| r3.iter().filter(|r| r.family == f).count()).collect();
        assert_eq!(per_family, [0, 1, 0, 1, 2, 0, 1, 1]);
        assert!(defining_relations(1).is_err());
    }

    #[test]
    fn n2_has_only_tau_squared() {
        let r = defining_relations(2).unwrap();
        assert_eq!(r[0].family, 5);
        assert_eq!(r[0].to_string(), "t1 t1 = 1");
    }

    #[test]
    fn expected_instances_present() {
        let r3: Vec<_> = defining_relations(3).unwrap().iter().map(|r| r.to_string()).collect();
        assert!(r3.contains(&"s1 s2 s1 = s2 s1 s2".into()));
        let r4: Vec<_> = defining_relations(4).unwrap().iter().map(|r| r.to_string()).collect();
        assert!(r4.contains(&"s1 t3 = t3 s1".into()));
    }

    #[test]
    fn shift_examples() {
        let w = WeldedWord::parse(3, "s1").unwrap();
        assert_eq!(w.shift(), WeldedWord::parse(4, "s2").unwrap());
        assert_eq!(WeldedWord::parse(3, "t2").unwrap().shift().gens(), &[WeldedGen::Tau(3)]);
        assert!(WeldedWord::identity(3).shift().is_empty());
        assert_eq!(WeldedWord::identity(3).shift().n(), 4);
    }

    #[test]
    fn parse_and_display() {
        let w = WeldedWord::parse(3, "t1 s2 S1").unwrap();
        assert_eq!(w.gens(), &[WeldedGen::Tau(1), WeldedGen::Sigma(2), WeldedGen::SigmaInv(1)]);
        assert_eq!(w.to_string(), "t1 s2 S1");
        assert!(WeldedWord::parse(3, "s3").is_err());
        assert!(WeldedWord::parse(3, "x1").is_err());
    }

    #[test]
    fn inverse_and_cancel() {
        let w = WeldedWord::parse(3, "s1 t2").unwrap();
        assert!(w.mul(&w.inverse()).unwrap().free_cancel().is_empty());
        assert_eq!(w.inverse().to_string(), "t2 S1");
    }
}
