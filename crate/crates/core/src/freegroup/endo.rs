use alloc::vec::Vec;
use core::fmt;

use super::{FreeWord, Letter};
use crate::{Error, Result};

/// Endomorphism of `F_rank` given by the images of the generators.
#[derive(Clone, PartialEq, Eq)]
pub struct FreeEndo {
    rank: usize,
    images: Vec<FreeWord>,
}

impl FreeEndo {
    pub fn identity(rank: usize) -> Self {
        FreeEndo {
            rank,
            images: (1..=rank).map(|i| FreeWord::generator(rank, i).unwrap()).collect(),
        }
    }

    pub fn from_images(rank: usize, images: Vec<FreeWord>) -> Result<Self> {
        if images.len() != rank {
            return Err(Error::InvalidArgument(alloc::format!(
                "{} images for a free group of rank {rank}",
                images.len()
            )));
        }
        if let Some(bad) = images.iter().find(|w| w.rank() != rank) {
            return Err(Error::RankMismatch { left: rank, right: bad.rank() });
        }
        Ok(FreeEndo { rank, images })
    }

    /// Identity except on the listed generators.
    pub fn with_overrides(rank: usize, overrides: &[(usize, FreeWord)]) -> Result<Self> {
        let mut e = Self::identity(rank);
        for (i, w) in overrides {
            if *i == 0 || *i > rank {
                return Err(Error::IndexOutOfRange { index: *i, bound: rank });
            }
            if w.rank() != rank {
                return Err(Error::RankMismatch { left: rank, right: w.rank() });
            }
            e.images[i - 1] = w.clone();
        }
        Ok(e)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Image of `x_i` (1-based).
    pub fn image(&self, i: usize) -> &FreeWord {
        &self.images[i - 1]
    }

    pub fn images(&self) -> &[FreeWord] {
        &self.images
    }

    fn apply_letter(&self, l: Letter) -> FreeWord {
        let img = &self.images[l.gen - 1];
        if l.inv {
            img.inverse()
        } else {
            img.clone()
        }
    }

    /// Letter-by-letter substitution followed by free reduction.
    pub fn apply(&self, w: &FreeWord) -> Result<FreeWord> {
        if w.rank() != self.rank {
            return Err(Error::RankMismatch { left: self.rank, right: w.rank() });
        }
        let mut out = FreeWord::identity(self.rank);
        for &l in w.letters() {
            out = out.mul(&self.apply_letter(l))?;
        }
        Ok(out)
    }

    /// `self ∘ other`: first `other`, then `self`.
    pub fn compose(&self, other: &FreeEndo) -> Result<FreeEndo> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch { left: self.rank, right: other.rank });
        }
        let images = other.images.iter().map(|w| self.apply(w)).collect::<Result<_>>()?;
        Ok(FreeEndo { rank: self.rank, images })
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, w)| w.letters() == [Letter::new(i + 1, false)])
    }
}

impl fmt::Display for FreeEndo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, w) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "x{} -> {}", i + 1, w)?;
        }
        Ok(())
    }
}

impl fmt::Debug for FreeEndo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FreeEndo[F{}]({})", self.rank, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(rank: usize, s: &str) -> FreeWord {
        FreeWord::parse(rank, s).unwrap()
    }

    /// Artin image of σ_i written out directly from the substitution table.
    fn artin_sigma(rank: usize, i: usize) -> FreeEndo {
        let a = FreeWord::generator(rank, i).unwrap();
        let b = FreeWord::generator(rank, i + 1).unwrap();
        let conj = b.inverse().mul(&a).unwrap().mul(&b).unwrap();
        FreeEndo::with_overrides(rank, &[(i, b), (i + 1, conj)]).unwrap()
    }

    fn tau(rank: usize, i: usize) -> FreeEndo {
        let a = FreeWord::generator(rank, i).unwrap();
        let b = FreeWord::generator(rank, i + 1).unwrap();
        FreeEndo::with_overrides(rank, &[(i, b), (i + 1, a)]).unwrap()
    }

    #[test]
    fn apply_artin_sigma() {
        let s = artin_sigma(4, 2);
        assert_eq!(s.apply(&w(4, "x2")).unwrap(), w(4, "x3"));
        assert_eq!(s.apply(&w(4, "x3")).unwrap(), w(4, "x3^-1 x2 x3"));
        assert_eq!(tau(4, 2).apply(&w(4, "x4")).unwrap(), w(4, "x4"));
    }

    #[test]
    fn composite_of_three_generators() {
        // σ_2 ∘ σ_1 ∘ τ_2 on F_3
        let c = artin_sigma(3, 2).compose(&artin_sigma(3, 1)).unwrap().compose(&tau(3, 2)).unwrap();
        assert_eq!(c.image(1), &w(3, "x3"));
        assert_eq!(c.image(2), &w(3, "x3^-1 x2 x3"));
        assert_eq!(c.image(3), &w(3, "x3^-1 x1 x3"));
    }

    #[test]
    fn compose_with_identity_and_involution() {
        let s = artin_sigma(3, 1);
        assert_eq!(s.compose(&FreeEndo::identity(3)).unwrap(), s);
        assert!(tau(3, 1).compose(&tau(3, 1)).unwrap().is_identity());
    }

    #[test]
    fn rank_mismatch() {
        assert!(matches!(
            artin_sigma(3, 1).apply(&w(2, "x1")),
            Err(Error::RankMismatch { .. })
        ));
        assert!(artin_sigma(3, 1).compose(&FreeEndo::identity(4)).is_err());
    }
}
