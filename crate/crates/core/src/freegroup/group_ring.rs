use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{FreeWord, Letter};
use crate::{Error, Result};

/// Element of the integral group ring `Z[F_rank]`: a finite formal sum of reduced words.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupRingElem {
    rank: usize,
    terms: BTreeMap<FreeWord, BigInt>,
}

impl GroupRingElem {
    pub fn zero(rank: usize) -> Self {
        GroupRingElem { rank, terms: BTreeMap::new() }
    }

    pub fn one(rank: usize) -> Self {
        Self::from_word(&FreeWord::identity(rank))
    }

    pub fn from_word(w: &FreeWord) -> Self {
        Self::term(w, BigInt::one())
    }

    pub fn term(w: &FreeWord, c: BigInt) -> Self {
        let mut e = Self::zero(w.rank());
        e.add_term(w.clone(), c);
        e
    }

    /// `x_gen - 1`.
    pub fn generator_minus_one(rank: usize, gen: usize) -> Result<Self> {
        let x = Self::from_word(&FreeWord::generator(rank, gen)?);
        x.sub(&Self::one(rank))
    }

    fn add_term(&mut self, w: FreeWord, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(w).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FreeWord, &BigInt)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn check_rank(&self, other: &Self) -> Result<()> {
        if self.rank == other.rank {
            Ok(())
        } else {
            Err(Error::RankMismatch { left: self.rank, right: other.rank })
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        GroupRingElem {
            rank: self.rank,
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let mut out = Self::zero(self.rank);
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(u.mul(v)?, a * b);
            }
        }
        Ok(out)
    }

    /// Right multiplication by a group element.
    pub fn mul_word(&self, w: &FreeWord) -> Result<Self> {
        if w.rank() != self.rank {
            return Err(Error::RankMismatch { left: self.rank, right: w.rank() });
        }
        let mut out = Self::zero(self.rank);
        for (u, c) in &self.terms {
            out.add_term(u.mul(w)?, c.clone());
        }
        Ok(out)
    }

    /// The augmentation `Z[F_n] -> Z`: sum of coefficients.
    pub fn augmentation(&self) -> BigInt {
        self.terms.values().sum()
    }
}

impl fmt::Display for GroupRingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if i > 0 {
                f.write_str(if neg { " - " } else { " + " })?;
            } else if neg {
                f.write_str("-")?;
            }
            let abs = c.abs();
            match (abs.is_one(), w.is_identity()) {
                (true, _) => write!(f, "{w}")?,
                (false, true) => write!(f, "{abs}")?,
                (false, false) => write!(f, "{abs}·{w}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for GroupRingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupRingElem[F{}]({})", self.rank, self)
    }
}

/// Right coordinates of `w - 1` in the augmentation ideal.
///
/// Returns `(c_1, …, c_n)` with `w - 1 = Σ_j (x_j - 1) c_j` in `Z[F_n]`, built letter by
/// letter from `coords(u x_j) = coords(u) x_j + e_j` and
/// `coords(u x_j^{-1}) = coords(u) x_j^{-1} - e_j x_j^{-1}`.
pub fn ideal_coordinates(w: &FreeWord) -> Vec<GroupRingElem> {
    let rank = w.rank();
    let mut coords = alloc::vec![GroupRingElem::zero(rank); rank];
    for &l in w.letters() {
        let step = FreeWord::from_letters(rank, [l]).expect("letter of a valid word");
        for c in coords.iter_mut() {
            *c = c.mul_word(&step).expect("same rank");
        }
        let j = l.gen - 1;
        let unit = if l.inv {
            GroupRingElem::term(&FreeWord::from_letters(rank, [Letter::new(l.gen, true)]).unwrap(), -BigInt::one())
        } else {
            GroupRingElem::one(rank)
        };
        coords[j] = coords[j].add(&unit).expect("same rank");
    }
    coords
}

/// `Σ_j (x_j - 1) c_j`; inverse of [`ideal_coordinates`] up to the `- 1`.
pub fn reconstruct_from_coordinates(rank: usize, coords: &[GroupRingElem]) -> Result<GroupRingElem> {
    if coords.len() != rank {
        return Err(Error::InvalidArgument(alloc::format!(
            "{} coordinates for rank {rank}",
            coords.len()
        )));
    }
    let mut acc = GroupRingElem::zero(rank);
    for (j, c) in coords.iter().enumerate() {
        acc = acc.add(&GroupRingElem::generator_minus_one(rank, j + 1)?.mul(c)?)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(rank: usize, s: &str) -> FreeWord {
        FreeWord::parse(rank, s).unwrap()
    }

    fn g(rank: usize, s: &str) -> GroupRingElem {
        GroupRingElem::from_word(&w(rank, s))
    }

    #[test]
    fn add_one_back() {
        let x1m1 = GroupRingElem::generator_minus_one(2, 1).unwrap();
        assert_eq!(x1m1.add(&GroupRingElem::one(2)).unwrap(), g(2, "x1"));
    }

    #[test]
    fn distribute_and_reduce() {
        // (x2 - 1)(1 - x2^-1 x1 x2) = x2 - x1 x2 - 1 + x2^-1 x1 x2
        let r = 3;
        let a = GroupRingElem::generator_minus_one(r, 2).unwrap();
        let b = GroupRingElem::one(r).sub(&g(r, "x2^-1 x1 x2")).unwrap();
        let prod = a.mul(&b).unwrap();
        let expected = g(r, "x2")
            .sub(&g(r, "x1 x2"))
            .unwrap()
            .sub(&GroupRingElem::one(r))
            .unwrap()
            .add(&g(r, "x2^-1 x1 x2"))
            .unwrap();
        assert_eq!(prod, expected);
        assert!(prod.augmentation().is_zero());
    }

    #[test]
    fn zero_annihilates() {
        let a = g(2, "x1 x2");
        assert!(GroupRingElem::zero(2).mul(&a).unwrap().is_zero());
    }

    #[test]
    fn augmentation_values() {
        assert!(GroupRingElem::generator_minus_one(3, 2).unwrap().augmentation().is_zero());
        let three = GroupRingElem::term(&w(2, "x1 x2"), BigInt::from(3));
        assert_eq!(three.augmentation(), BigInt::from(3));
    }

    #[test]
    fn coordinates_of_generator_and_inverse() {
        let c = ideal_coordinates(&w(3, "x2"));
        assert_eq!(c[1], GroupRingElem::one(3));
        assert!(c[0].is_zero() && c[2].is_zero());

        let c = ideal_coordinates(&w(3, "x2^-1"));
        assert_eq!(c[1], g(3, "x2^-1").neg());
        assert!(c[0].is_zero() && c[2].is_zero());
    }

    #[test]
    fn coordinates_of_conjugate() {
        // x_{i+1}^{-1} x_i x_{i+1} - 1 = (x_i - 1) x_{i+1} + (x_{i+1} - 1)(1 - x_{i+1}^{-1} x_i x_{i+1})
        let c = ideal_coordinates(&w(3, "x3^-1 x2 x3"));
        assert!(c[0].is_zero());
        assert_eq!(c[1], g(3, "x3"));
        assert_eq!(c[2], GroupRingElem::one(3).sub(&g(3, "x3^-1 x2 x3")).unwrap());
    }

    #[test]
    fn identity_has_zero_coordinates() {
        assert!(ideal_coordinates(&FreeWord::identity(2)).iter().all(GroupRingElem::is_zero));
    }
}
