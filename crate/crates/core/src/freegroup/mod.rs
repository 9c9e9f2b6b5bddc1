//! Free groups `F_n = <x_1, …, x_n>`: reduced words, endomorphisms given by generator
//! images, and the integral group ring `Z[F_n]`.

mod endo;
mod group_ring;

pub use endo::FreeEndo;
pub use group_ring::{ideal_coordinates, reconstruct_from_coordinates, GroupRingElem};

use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// A generator `x_gen` (1-based) or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub gen: usize,
    pub inv: bool,
}

impl Letter {
    pub fn new(gen: usize, inv: bool) -> Self {
        Letter { gen, inv }
    }

    pub fn inverse(self) -> Self {
        Letter { gen: self.gen, inv: !self.inv }
    }

    /// `+1` or `-1`.
    pub fn sign(self) -> i32 {
        if self.inv {
            -1
        } else {
            1
        }
    }
}

/// Freely reduced word in `F_rank`; the empty word is the identity.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FreeWord {
    rank: usize,
    letters: Vec<Letter>,
}

impl FreeWord {
    pub fn identity(rank: usize) -> Self {
        FreeWord { rank, letters: Vec::new() }
    }

    pub fn generator(rank: usize, gen: usize) -> Result<Self> {
        Self::from_letters(rank, [Letter::new(gen, false)])
    }

    /// Reduces the given letter sequence.
    pub fn from_letters(rank: usize, letters: impl IntoIterator<Item = Letter>) -> Result<Self> {
        let mut w = Self::identity(rank);
        for l in letters {
            if l.gen == 0 || l.gen > rank {
                return Err(Error::IndexOutOfRange { index: l.gen, bound: rank });
            }
            w.push(l);
        }
        Ok(w)
    }

    /// Letters given as `(generator, ±1)` pairs.
    pub fn from_signed(rank: usize, letters: &[(usize, i32)]) -> Result<Self> {
        let mut out = Vec::with_capacity(letters.len());
        for &(g, s) in letters {
            if s != 1 && s != -1 {
                return Err(Error::InvalidArgument(alloc::format!("letter exponent {s} is not ±1")));
            }
            out.push(Letter::new(g, s < 0));
        }
        Self::from_letters(rank, out)
    }

    /// Parses `x1 x2^-1 x1`; `1` or an empty string is the identity.
    pub fn parse(rank: usize, text: &str) -> Result<Self> {
        let mut letters = Vec::new();
        for tok in text.split_whitespace() {
            if tok == "1" {
                continue;
            }
            let (body, inv) = match tok.strip_suffix("^-1") {
                Some(b) => (b, true),
                None => (tok, false),
            };
            let idx = body
                .strip_prefix('x')
                .and_then(|d| d.parse::<usize>().ok())
                .ok_or_else(|| Error::Parse(alloc::format!("bad free group letter `{tok}`")))?;
            letters.push(Letter::new(idx, inv));
        }
        Self::from_letters(rank, letters)
    }

    fn push(&mut self, l: Letter) {
        if self.letters.last() == Some(&l.inverse()) {
            self.letters.pop();
        } else {
            self.letters.push(l);
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub(crate) fn check_rank(&self, other: &FreeWord) -> Result<()> {
        if self.rank == other.rank {
            Ok(())
        } else {
            Err(Error::RankMismatch { left: self.rank, right: other.rank })
        }
    }

    pub fn mul(&self, other: &FreeWord) -> Result<FreeWord> {
        self.check_rank(other)?;
        let mut out = self.clone();
        for &l in &other.letters {
            out.push(l);
        }
        Ok(out)
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord {
            rank: self.rank,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    pub fn pow(&self, k: i64) -> FreeWord {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Self::identity(self.rank);
        for _ in 0..k.unsigned_abs() {
            for &l in &base.letters {
                out.push(l);
            }
        }
        out
    }

    /// Sum of exponents of generator `gen`.
    pub fn exponent_sum(&self, gen: usize) -> i64 {
        self.letters.iter().filter(|l| l.gen == gen).map(|l| l.sign() as i64).sum()
    }

    /// If the word is syntactically `w^{-1} x_k w`, returns `(k, w)`.
    pub fn as_conjugate_of_generator(&self) -> Option<(usize, FreeWord)> {
        let len = self.letters.len();
        if len.is_multiple_of(2) {
            return None;
        }
        let mid = len / 2;
        let centre = self.letters[mid];
        if centre.inv {
            return None;
        }
        let (left, right) = (&self.letters[..mid], &self.letters[mid + 1..]);
        let mirrored = left.iter().rev().zip(right).all(|(a, b)| a.inverse() == *b);
        mirrored.then(|| (centre.gen, FreeWord { rank: self.rank, letters: right.to_vec() }))
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "x{}", l.gen)?;
            if l.inv {
                f.write_str("^-1")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FreeWord[F{}]({})", self.rank, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn w(text: &str) -> FreeWord {
        FreeWord::parse(3, text).unwrap()
    }

    #[test]
    fn generator_times_inverse() {
        let x1 = w("x1");
        assert!(x1.mul(&x1.inverse()).unwrap().is_identity());
    }

    #[test]
    fn inverse_reverses() {
        assert_eq!(w("x1 x2").inverse(), w("x2^-1 x1^-1"));
    }

    #[test]
    fn reduction_on_construction() {
        assert!(w("x2^-1 x1 x1^-1 x2").is_identity());
        assert_eq!(w("x1 x2 x2^-1 x3").len(), 2);
    }

    #[test]
    fn rank_checks() {
        let a = FreeWord::generator(2, 1).unwrap();
        let b = FreeWord::generator(3, 1).unwrap();
        assert!(matches!(a.mul(&b), Err(Error::RankMismatch { .. })));
        assert!(FreeWord::generator(2, 3).is_err());
        assert!(FreeWord::parse(2, "y1").is_err());
    }

    #[test]
    fn conjugate_detection() {
        let (k, c) = w("x3^-1 x2^-1 x1 x2 x3").as_conjugate_of_generator().unwrap();
        assert_eq!(k, 1);
        assert_eq!(c, w("x2 x3"));
        assert!(w("x1 x2").as_conjugate_of_generator().is_none());
    }

    #[test]
    fn display_round_trip() {
        let v = w("x1 x2^-1 x1");
        assert_eq!(v.to_string(), "x1 x2^-1 x1");
        assert_eq!(w(&v.to_string()), v);
        assert_eq!(FreeWord::identity(2).to_string(), "1");
    }
}
