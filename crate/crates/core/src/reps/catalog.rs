use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::ops::{dual_rep, DualVariant};
use super::MatrixRep;
use crate::ring::{LaurentPoly, MatrixLP, Vars};
use crate::{Error, Result};

/// Names accepted by [`make_catalog_rep`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CatalogName {
    Burau,
    ReducedBurau,
    DualBurau,
    DualReducedBurau,
    Tym,
    DualTym,
    Permutation,
    OneDim,
}

impl CatalogName {
    pub const ALL: [CatalogName; 8] = [
        CatalogName::Burau,
        CatalogName::ReducedBurau,
        CatalogName::DualBurau,
        CatalogName::DualReducedBurau,
        CatalogName::Tym,
        CatalogName::DualTym,
        CatalogName::Permutation,
        CatalogName::OneDim,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CatalogName::Burau => "burau",
            CatalogName::ReducedBurau => "reduced_burau",
            CatalogName::DualBurau => "dual_burau",
            CatalogName::DualReducedBurau => "dual_reduced_burau",
            CatalogName::Tym => "tym",
            CatalogName::DualTym => "dual_tym",
            CatalogName::Permutation => "permutation",
            CatalogName::OneDim => "onedim",
        }
    }

    /// Smallest supported group index.
    pub fn min_n(self) -> usize {
        2
    }
}

impl fmt::Display for CatalogName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CatalogName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CatalogName::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::InvalidArgument(alloc::format!("unknown representation `{s}`")))
    }
}

/// Builds a catalog representation of `wB_n` with parameter `param`.
///
/// `param` plays the role of `t` (of `r` for `onedim`) and fixes the ring context; it
/// must be a unit. `permutation` ignores its value but still takes its context.
pub fn make_catalog_rep(name: CatalogName, n: usize, param: &LaurentPoly) -> Result<MatrixRep> {
    match name {
        CatalogName::Burau => burau(n, param),
        CatalogName::ReducedBurau => reduced_burau(n, param),
        CatalogName::DualBurau => dual_burau(n, param),
        CatalogName::DualReducedBurau => dual_reduced_burau(n, param),
        CatalogName::Tym => tym(n, param),
        CatalogName::DualTym => dual_tym(n, param),
        CatalogName::Permutation => permutation(n, param.vars()),
        CatalogName::OneDim => onedim(n, param),
    }
}

fn check_n(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidArgument(alloc::format!("need n >= 2, got {n}")));
    }
    Ok(())
}

fn check_unit(p: &LaurentPoly) -> Result<()> {
    if p.is_unit() {
        Ok(())
    } else {
        Err(Error::NotAUnit(p.to_string()))
    }
}

/// `Id_{at} ⊕ block ⊕ Id`, total size `dim`.
fn local(dim: usize, at: usize, block: &[[&LaurentPoly; 2]; 2]) -> MatrixLP {
    let vars = block[0][0].vars();
    let mut m = MatrixLP::identity(dim, vars);
    for (r, row) in block.iter().enumerate() {
        for (c, e) in row.iter().enumerate() {
            m.set(at + r, at + c, (*e).clone());
        }
    }
    m
}

fn refs(b: &[[LaurentPoly; 2]; 2]) -> [[&LaurentPoly; 2]; 2] {
    [[&b[0][0], &b[0][1]], [&b[1][0], &b[1][1]]]
}

/// Builds images `σ_i ↦ local(f(p))`, `τ_i ↦ local(f(1))` for a 2x2 block family.
fn local_family(
    name: &str,
    n: usize,
    p: &LaurentPoly,
    block: impl Fn(&LaurentPoly) -> [[LaurentPoly; 2]; 2],
) -> Result<MatrixRep> {
    check_n(n)?;
    check_unit(p)?;
    let one = LaurentPoly::one(p.vars());
    let bs = block(p);
    let bt = block(&one);
    let sigma = (0..n - 1).map(|i| local(n, i, &refs(&bs))).collect();
    let tau = (0..n - 1).map(|i| local(n, i, &refs(&bt))).collect();
    MatrixRep::new(name, n, sigma, tau)
}

/// `σ_i ↦ Id_{i-1} ⊕ [[0, t], [1, 1-t]] ⊕ Id_{n-i-1}`, `τ_i` the transposition.
pub fn burau(n: usize, t: &LaurentPoly) -> Result<MatrixRep> {
    let v = t.vars().clone();
    local_family("burau", n, t, |p| {
        [[LaurentPoly::zero(&v), p.clone()], [LaurentPoly::one(&v), &LaurentPoly::one(&v) - p]]
    })
}

/// Block `[[1-t, t], [1, 0]]`: the transpose-inverse of Burau at `t^{-1}`.
pub fn dual_burau(n: usize, t: &LaurentPoly) -> Result<MatrixRep> {
    let v = t.vars().clone();
    local_family("dual_burau", n, t, |p| {
        [[&LaurentPoly::one(&v) - p, p.clone()], [LaurentPoly::one(&v), LaurentPoly::zero(&v)]]
    })
}

/// `σ_i ↦ Id_{i-1} ⊕ [[0, 1], [t, 0]] ⊕ Id_{n-i-1}`, `τ_i` the transposition.
pub fn tym(n: usize, t: &LaurentPoly) -> Result<MatrixRep> {
    let v = t.vars().clone();
    local_family("tym", n, t, |p| {
        [[LaurentPoly::zero(&v), LaurentPoly::one(&v)], [p.clone(), LaurentPoly::zero(&v)]]
    })
}

/// Plain transpose-inverse of [`tym`], block `[[0, 1], [t^{-1}, 0]]`.
pub fn dual_tym(n: usize, t: &LaurentPoly) -> Result<MatrixRep> {
    Ok(dual_rep(&tym(n, t)?, DualVariant::TransposeInverse)?.with_name("dual_tym"))
}

/// Both families go to permutation matrices.
pub fn permutation(n: usize, vars: &Vars) -> Result<MatrixRep> {
    let one = LaurentPoly::one(vars);
    let zero = LaurentPoly::zero(vars);
    local_family("permutation", n, &one, |_| [[zero.clone(), one.clone()], [one.clone(), zero.clone()]])
}

/// `σ_i ↦ [r]`, `τ_i ↦ [1]`.
pub fn onedim(n: usize, r: &LaurentPoly) -> Result<MatrixRep> {
    check_n(n)?;
    check_unit(r)?;
    let v = r.vars();
    let s = MatrixLP::new(1, 1, v, alloc::vec![r.clone()])?;
    let t = MatrixLP::identity(1, v);
    MatrixRep::new(
        "onedim",
        n,
        (0..n - 1).map(|_| s.clone()).collect(),
        (0..n - 1).map(|_| t.clone()).collect(),
    )
}

/// The `(n-1)`-dimensional reduced Burau representation in the basis obtained by
/// conjugating [`burau`] with the lower-triangular all-ones matrix `r_n`.
///
/// Row `i` of `σ_i` reads `(…, 1, -t, t, …)` in columns `i-1, i, i+1` (entries falling
/// outside the matrix are dropped); `τ_i` is the same at `t = 1`. For `n = 2` this is
/// `σ_1 ↦ [-t]`, `τ_1 ↦ [-1]`.
pub fn reduced_burau(n: usize, t: &LaurentPoly) -> Result<MatrixRep> {
    check_n(n)?;
    check_unit(t)?;
    let v = t.vars();
    let d = n - 1;
    let image = |i: usize, p: &LaurentPoly| {
        let mut m = MatrixLP::identity(d, v);
        let row = i - 1;
        if i >= 2 {
            m.set(row, i - 2, LaurentPoly::one(v));
        }
        m.set(row, i - 1, -p);
        if i + 1 < n {
            m.set(row, i, p.clone());
        }
        m
    };
    let one = LaurentPoly::one(v);
    let sigma: Vec<_> = (1..n).map(|i| image(i, t)).collect();
    let tau: Vec<_> = (1..n).map(|i| image(i, &one)).collect();
    MatrixRep::new("reduced_burau", n, sigma, tau)
}

/// Transpose-inverse of [`reduced_burau`] at `t^{-1}`, matching [`dual_burau`].
pub fn dual_reduced_burau(n: usize, t: &LaurentPoly) -> Result<MatrixRep> {
    check_unit(t)?;
    let base = reduced_burau(n, &t.unit_inverse()?)?;
    Ok(dual_rep(&base, DualVariant::TransposeInverse)?.with_name(String::from("dual_reduced_burau")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reps::{conjugate, verify_rep};

    fn ctx() -> (Vars, LaurentPoly) {
        let v = Vars::new(&["t"]);
        let t = LaurentPoly::var(&v, "t").unwrap();
        (v, t)
    }

    fn ints(v: &Vars, t: &LaurentPoly, rows: &[&[(i64, i64)]]) -> MatrixLP {
        // each entry is a + b·t
        let rows = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&(a, b)| &LaurentPoly::constant(v, a) + &t.scale(&b.into()))
                    .collect()
            })
            .collect();
        MatrixLP::from_rows(v, rows).unwrap()
    }

    #[test]
    fn burau_3_sigma1() {
        let (v, t) = ctx();
        let b = burau(3, &t).unwrap();
        let want = ints(&v, &t, &[&[(0, 0), (0, 1), (0, 0)], &[(1, 0), (1, -1), (0, 0)], &[(0, 0), (0, 0), (1, 0)]]);
        assert_eq!(b.sigma()[0], want);
        assert!(b.tau()[0].is_permutation());
    }

    #[test]
    fn tym_3_sigma2() {
        let (v, t) = ctx();
        let rep = tym(3, &t).unwrap();
        let m = &rep.sigma()[1];
        let want = ints(&v, &t, &[&[(1, 0), (0, 0), (0, 0)], &[(0, 0), (0, 0), (1, 0)], &[(0, 0), (0, 1), (0, 0)]]);
        assert_eq!(m, &want);
    }

    #[test]
    fn reduced_burau_4_sigma2() {
        let (v, t) = ctx();
        let rep = reduced_burau(4, &t).unwrap();
        let m = &rep.sigma()[1];
        let want = ints(&v, &t, &[&[(1, 0), (0, 0), (0, 0)], &[(1, 0), (0, -1), (0, 1)], &[(0, 0), (0, 0), (1, 0)]]);
        assert_eq!(m, &want);
    }

    #[test]
    fn reduced_burau_ends() {
        let (v, t) = ctx();
        let r = reduced_burau(4, &t).unwrap();
        let s1 = ints(&v, &t, &[&[(0, -1), (0, 1), (0, 0)], &[(0, 0), (1, 0), (0, 0)], &[(0, 0), (0, 0), (1, 0)]]);
        let s3 = ints(&v, &t, &[&[(1, 0), (0, 0), (0, 0)], &[(0, 0), (1, 0), (0, 0)], &[(0, 0), (1, 0), (0, -1)]]);
        assert_eq!(r.sigma()[0], s1);
        assert_eq!(r.sigma()[2], s3);
        let two = reduced_burau(2, &t).unwrap();
        assert_eq!(two.sigma()[0].get(0, 0), &-&t);
        assert_eq!(two.tau()[0].get(0, 0), &LaurentPoly::constant(&v, -1));
    }

    #[test]
    fn reduced_is_corner_of_r_conjugate() {
        let (v, t) = ctx();
        for n in 2..=5 {
            let c = conjugate(&burau(n, &t).unwrap(), &MatrixLP::lower_ones(n, &v)).unwrap();
            let red = reduced_burau(n, &t).unwrap();
            for i in 0..n - 1 {
                let s = &c.sigma()[i];
                assert_eq!(s.block(0..n - 1, 0..n - 1), red.sigma()[i]);
                assert!(s.block(n - 1..n, 0..n - 1).is_zero());
                assert!(s.get(n - 1, n - 1).is_one());
                // last column above the corner: only t in the final slot, for σ_{n-1}
                for r in 0..n - 1 {
                    let e = s.get(r, n - 1);
                    if i == n - 2 && r == n - 2 {
                        assert_eq!(e, &t);
                    } else {
                        assert!(e.is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn dual_burau_block_is_bar_variant() {
        let (_, t) = ctx();
        let d = dual_burau(3, &t).unwrap();
        let via = dual_rep(&burau(3, &t).unwrap(), DualVariant::TransposeInverseBar).unwrap();
        assert!(d.same_images(&via));
    }

    #[test]
    fn dual_tym_block() {
        let (v, t) = ctx();
        let d = dual_tym(2, &t).unwrap();
        let ti = t.unit_inverse().unwrap();
        let want = MatrixLP::from_rows(&v, alloc::vec![
            alloc::vec![LaurentPoly::zero(&v), LaurentPoly::one(&v)],
            alloc::vec![ti, LaurentPoly::zero(&v)],
        ])
        .unwrap();
        assert_eq!(d.sigma()[0], want);
    }

    #[test]
    fn catalog_verifies_small() {
        let (_, t) = ctx();
        for name in CatalogName::ALL {
            for n in 2..=4 {
                let rep = make_catalog_rep(name, n, &t).unwrap();
                assert!(verify_rep(&rep).unwrap().is_empty(), "{name} n={n}");
            }
        }
    }

    #[test]
    fn parse_names() {
        assert_eq!("dual_tym".parse::<CatalogName>().unwrap(), CatalogName::DualTym);
        assert!("lawrence".parse::<CatalogName>().is_err());
        let (_, t) = ctx();
        assert!(burau(1, &t).is_err());
        let (v, _) = ctx();
        assert!(burau(3, &LaurentPoly::constant(&v, 2)).is_err());
    }
}
