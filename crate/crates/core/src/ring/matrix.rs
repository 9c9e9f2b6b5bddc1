use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::{LaurentPoly, Vars};
use crate::{Error, Result};

/// Dense row-major matrix over a Laurent polynomial ring.
///
/// Zero-sized matrices are allowed so that trivial sub- and quotient representations
/// can be expressed without special cases.
#[derive(Clone, PartialEq, Eq)]
pub struct MatrixLP {
    rows: usize,
    cols: usize,
    vars: Vars,
    data: Vec<LaurentPoly>,
}

/// Below this size the determinant is computed by cofactor expansion.
const COFACTOR_LIMIT: usize = 5;

impl MatrixLP {
    pub fn new(rows: usize, cols: usize, vars: &Vars, data: Vec<LaurentPoly>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::InvalidArgument(alloc::format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        for p in &data {
            vars.check_same(p.vars())?;
        }
        Ok(MatrixLP { rows, cols, vars: vars.clone(), data })
    }

    pub fn from_rows(vars: &Vars, rows: Vec<Vec<LaurentPoly>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::InvalidArgument("ragged rows".to_string()));
        }
        Self::new(r, c, vars, rows.into_iter().flatten().collect())
    }

    /// Matrix of integer constants.
    pub fn from_ints(vars: &Vars, rows: &[&[i64]]) -> Self {
        let data = rows
            .iter()
            .map(|row| row.iter().map(|&x| LaurentPoly::constant(vars, x)).collect())
            .collect();
        Self::from_rows(vars, data).expect("rectangular integer matrix")
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        vars: &Vars,
        mut f: impl FnMut(usize, usize) -> LaurentPoly,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        MatrixLP { rows, cols, vars: vars.clone(), data }
    }

    pub fn zero(rows: usize, cols: usize, vars: &Vars) -> Self {
        Self::from_fn(rows, cols, vars, |_, _| LaurentPoly::zero(vars))
    }

    pub fn identity(n: usize, vars: &Vars) -> Self {
        Self::from_fn(n, n, vars, |r, c| {
            if r == c {
                LaurentPoly::one(vars)
            } else {
                LaurentPoly::zero(vars)
            }
        })
    }

    /// Permutation matrix `P` with `P[new][order[new]] = 1`, so that
    /// `(P M P^T)[a][b] = M[order[a]][order[b]]`.
    pub fn permutation(order: &[usize], vars: &Vars) -> Result<Self> {
        let n = order.len();
        let mut seen = vec![false; n];
        for &o in order {
            if o >= n || seen[o] {
                return Err(Error::InvalidArgument(alloc::format!(
                    "{order:?} is not a permutation"
                )));
            }
            seen[o] = true;
        }
        Ok(Self::from_fn(n, n, vars, |r, c| {
            if order[r] == c {
                LaurentPoly::one(vars)
            } else {
                LaurentPoly::zero(vars)
            }
        }))
    }

    /// The lower-triangular all-ones matrix: entry `(i, j)` is 1 iff `j <= i`.
    pub fn lower_ones(n: usize, vars: &Vars) -> Self {
        Self::from_fn(n, n, vars, |r, c| LaurentPoly::constant(vars, (c <= r) as i64))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    /// Entry at 0-based `(r, c)`.
    pub fn get(&self, r: usize, c: usize) -> &LaurentPoly {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, p: LaurentPoly) {
        assert_eq!(p.vars(), &self.vars);
        self.data[r * self.cols + c] = p;
    }

    pub fn row(&self, r: usize) -> &[LaurentPoly] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn entries(&self) -> impl Iterator<Item = &LaurentPoly> {
        self.data.iter()
    }

    pub fn map(&self, f: impl Fn(&LaurentPoly) -> LaurentPoly) -> Self {
        MatrixLP {
            rows: self.rows,
            cols: self.cols,
            vars: self.vars.clone(),
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn try_map(&self, target: &Vars, f: impl Fn(&LaurentPoly) -> Result<LaurentPoly>) -> Result<Self> {
        let data = self.data.iter().map(f).collect::<Result<Vec<_>>>()?;
        Self::new(self.rows, self.cols, target, data)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(LaurentPoly::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    let e = self.get(r, c);
                    if r == c {
                        e.is_one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.vars.check_same(&other.vars)?;
        if self.cols != other.rows {
            return Err(Error::DimMismatch { op: "mul", left: self.dims(), right: other.dims() });
        }
        let mut out = Self::zero(self.rows, other.cols, &self.vars);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = r * out.cols + c;
                    out.data[idx] = &out.data[idx] + &(a * b);
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, "add", |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, "sub", |a, b| a - b)
    }

    fn zip_with(
        &self,
        other: &Self,
        op: &'static str,
        f: impl Fn(&LaurentPoly, &LaurentPoly) -> LaurentPoly,
    ) -> Result<Self> {
        self.vars.check_same(&other.vars)?;
        if self.dims() != other.dims() {
            return Err(Error::DimMismatch { op, left: self.dims(), right: other.dims() });
        }
        Ok(MatrixLP {
            rows: self.rows,
            cols: self.cols,
            vars: self.vars.clone(),
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub fn scale(&self, s: &LaurentPoly) -> Result<Self> {
        self.vars.check_same(s.vars())?;
        Ok(self.map(|p| p * s))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, &self.vars, |r, c| self.get(c, r).clone())
    }

    /// Kronecker product in row-major block order: block `(i, j)` is `a[i][j] * b`.
    pub fn kron(&self, other: &Self) -> Result<Self> {
        self.vars.check_same(&other.vars)?;
        let (br, bc) = other.dims();
        Ok(Self::from_fn(self.rows * br, self.cols * bc, &self.vars, |r, c| {
            self.get(r / br, c / bc) * other.get(r % br, c % bc)
        }))
    }

    /// Block diagonal `self ⊕ other`.
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        self.vars.check_same(&other.vars)?;
        let (r1, c1) = self.dims();
        Ok(Self::from_fn(r1 + other.rows, c1 + other.cols, &self.vars, |r, c| {
            match (r < r1, c < c1) {
                (true, true) => self.get(r, c).clone(),
                (false, false) => other.get(r - r1, c - c1).clone(),
                _ => LaurentPoly::zero(&self.vars),
            }
        }))
    }

    /// Submatrix on the half-open row and column ranges.
    pub fn block(&self, rows: core::ops::Range<usize>, cols: core::ops::Range<usize>) -> Self {
        let (r0, c0) = (rows.start, cols.start);
        Self::from_fn(rows.len(), cols.len(), &self.vars, |r, c| self.get(r0 + r, c0 + c).clone())
    }

    /// Lifts every entry into a context containing the current one.
    pub fn lift(&self, target: &Vars) -> Result<Self> {
        if &self.vars == target {
            return Ok(self.clone());
        }
        self.try_map(target, |p| p.lift(target))
    }

    pub fn trace(&self) -> Result<LaurentPoly> {
        self.require_square()?;
        Ok((0..self.rows).fold(LaurentPoly::zero(&self.vars), |acc, i| &acc + self.get(i, i)))
    }

    fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::NotSquare { rows: self.rows, cols: self.cols })
        }
    }

    /// Exact determinant: cofactor expansion for small matrices, Berkowitz otherwise.
    pub fn det(&self) -> Result<LaurentPoly> {
        self.require_square()?;
        if self.rows < COFACTOR_LIMIT {
            Ok(self.det_cofactor())
        } else {
            self.det_berkowitz()
        }
    }

    pub fn det_cofactor(&self) -> LaurentPoly {
        let idx: Vec<usize> = (0..self.rows).collect();
        self.cofactor_rec(0, &idx)
    }

    fn cofactor_rec(&self, row: usize, cols: &[usize]) -> LaurentPoly {
        match cols.len() {
            0 => LaurentPoly::one(&self.vars),
            1 => self.get(row, cols[0]).clone(),
            _ => {
                let mut acc = LaurentPoly::zero(&self.vars);
                for (k, &c) in cols.iter().enumerate() {
                    let a = self.get(row, c);
                    if a.is_zero() {
                        continue;
                    }
                    let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
                    let minor = a * &self.cofactor_rec(row + 1, &rest);
                    acc = if k % 2 == 0 { &acc + &minor } else { &acc - &minor };
                }
                acc
            }
        }
    }

    pub fn det_berkowitz(&self) -> Result<LaurentPoly> {
        let p = self.charpoly()?;
        let c = p[self.rows].clone();
        Ok(if self.rows.is_multiple_of(2) { c } else { -c })
    }

    /// Coefficients of `det(λI - M)`, leading coefficient first, via the
    /// division-free Berkowitz recursion.
    pub fn charpoly(&self) -> Result<Vec<LaurentPoly>> {
        self.require_square()?;
        let n = self.rows;
        let vars = &self.vars;
        let mut p = vec![LaurentPoly::one(vars)];
        for k in (0..n).rev() {
            let m = n - k - 1;
            let mut t = Vec::with_capacity(m + 2);
            t.push(LaurentPoly::one(vars));
            t.push(-self.get(k, k));
            // v runs through A^j C where A is the trailing block and C the column below (k, k).
            let mut v: Vec<LaurentPoly> = (k + 1..n).map(|r| self.get(r, k).clone()).collect();
            for _ in 2..m + 2 {
                let rc = (k + 1..n)
                    .zip(&v)
                    .fold(LaurentPoly::zero(vars), |acc, (c, x)| &acc + &(self.get(k, c) * x));
                t.push(-rc);
                v = (k + 1..n)
                    .map(|r| {
                        (k + 1..n)
                            .zip(&v)
                            .fold(LaurentPoly::zero(vars), |acc, (c, x)| &acc + &(self.get(r, c) * x))
                    })
                    .collect();
            }
            let mut np = vec![LaurentPoly::zero(vars); m + 2];
            for (i, slot) in np.iter_mut().enumerate() {
                for (l, pl) in p.iter().enumerate() {
                    if l <= i && i - l < t.len() {
                        *slot = &*slot + &(&t[i - l] * pl);
                    }
                }
            }
            p = np;
        }
        Ok(p)
    }

    /// Exact inverse; the determinant must be a unit.
    ///
    /// Uses Cayley-Hamilton: with `det(λI - M) = Σ p_i λ^{n-i}`,
    /// `M^{-1} = -(Σ_{i<n} p_i M^{n-1-i}) / p_n`.
    pub fn inverse(&self) -> Result<Self> {
        self.require_square()?;
        let n = self.rows;
        if n == 0 {
            return Ok(self.clone());
        }
        let p = self.charpoly()?;
        let minus_pn = -&p[n];
        let scale = minus_pn
            .unit_inverse()
            .map_err(|_| Error::NotAUnit(alloc::format!("determinant of {n}x{n} matrix")))?;
        let id = Self::identity(n, &self.vars);
        let mut b = id.clone();
        for coeff in &p[1..n] {
            b = self.mul(&b)?.add(&id.scale(coeff)?)?;
        }
        b.scale(&scale)
    }

    /// Whether every entry is 0 or 1 with exactly one 1 per row and column.
    pub fn is_permutation(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        let mut col_hits = vec![0usize; self.cols];
        for r in 0..self.rows {
            let mut hits = 0;
            for (c, ch) in col_hits.iter_mut().enumerate() {
                let e = self.get(r, c);
                if e.is_one() {
                    hits += 1;
                    *ch += 1;
                } else if !e.is_zero() {
                    return false;
                }
            }
            if hits != 1 {
                return false;
            }
        }
        col_hits.iter().all(|&h| h == 1)
    }

    /// Positions `(row, col)` (0-based) where two equally sized matrices differ.
    pub fn diff_positions(&self, other: &Self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        if self.dims() != other.dims() {
            return out;
        }
        for r in 0..self.rows {
            for c in 0..self.cols {
                if self.get(r, c) != other.get(r, c) {
                    out.push((r, c));
                }
            }
        }
        out
    }
}

impl fmt::Display for MatrixLP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            f.write_str("[")?;
            for c in 0..self.cols {
                if c > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            f.write_str("]\n")?;
        }
        Ok(())
    }
}

impl fmt::Debug for MatrixLP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MatrixLP {}x{} over {:?}\n{}", self.rows, self.cols, self.vars, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> Vars {
        Vars::new(&["t"])
    }

    fn t() -> LaurentPoly {
        LaurentPoly::var(&ctx(), "t").unwrap()
    }

    fn c(x: i64) -> LaurentPoly {
        LaurentPoly::constant(&ctx(), x)
    }

    fn burau_block() -> MatrixLP {
        MatrixLP::from_rows(&ctx(), vec![vec![c(0), t()], vec![c(1), &c(1) - &t()]]).unwrap()
    }

    #[test]
    fn identity_is_neutral() {
        let id = MatrixLP::identity(2, &ctx());
        assert_eq!(id.mul(&burau_block()).unwrap(), burau_block());
    }

    #[test]
    fn swap_squares_to_identity() {
        let s = MatrixLP::from_ints(&ctx(), &[&[0, 1], &[1, 0]]);
        assert!(s.mul(&s).unwrap().is_identity());
    }

    #[test]
    fn burau_block_squared() {
        // 2x2 product by hand: [[t, t - t^2], [1 - t, 1 - t + t^2]]
        let b = burau_block();
        let t2 = &t() * &t();
        let expected = MatrixLP::from_rows(
            &ctx(),
            vec![
                vec![t(), &t() - &t2],
                vec![&c(1) - &t(), &(&c(1) - &t()) + &t2],
            ],
        )
        .unwrap();
        assert_eq!(b.mul(&b).unwrap(), expected);
    }

    #[test]
    fn determinants() {
        assert!(MatrixLP::identity(6, &ctx()).det().unwrap().is_one());
        let s = MatrixLP::from_ints(&ctx(), &[&[0, 1], &[1, 0]]);
        assert_eq!(s.det().unwrap(), c(-1));
        assert_eq!(burau_block().det().unwrap(), -t());
    }

    #[test]
    fn berkowitz_agrees_with_cofactor() {
        let m = MatrixLP::from_fn(4, 4, &ctx(), |r, col| {
            LaurentPoly::monomial(&ctx(), vec![(r as i32) - (col as i32)], (r * 3 + col * 5 + 1) as i64 % 7 - 3)
        });
        assert_eq!(m.det_berkowitz().unwrap(), m.det_cofactor());
    }

    #[test]
    fn inverse_examples() {
        let m = MatrixLP::from_rows(&ctx(), vec![vec![c(0), c(1)], vec![t(), c(0)]]).unwrap();
        let expected =
            MatrixLP::from_rows(&ctx(), vec![vec![c(0), t().unit_inverse().unwrap()], vec![c(1), c(0)]])
                .unwrap();
        assert_eq!(m.inverse().unwrap(), expected);
        assert!(MatrixLP::identity(3, &ctx()).inverse().unwrap().is_identity());
        let singular = MatrixLP::from_ints(&ctx(), &[&[1, 1], &[1, 1]]);
        assert!(matches!(singular.inverse(), Err(Error::NotAUnit(_))));
    }

    #[test]
    fn traces() {
        assert_eq!(MatrixLP::identity(5, &ctx()).trace().unwrap(), c(5));
        assert_eq!(burau_block().trace().unwrap(), &c(1) - &t());
        let rect = MatrixLP::zero(2, 3, &ctx());
        assert!(matches!(rect.trace(), Err(Error::NotSquare { .. })));
        assert!(matches!(rect.det(), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn kron_dims_and_blocks() {
        let s = MatrixLP::from_ints(&ctx(), &[&[0, 1], &[1, 0]]);
        let k = s.kron(&burau_block()).unwrap();
        assert_eq!(k.dims(), (4, 4));
        assert_eq!(k.block(0..2, 2..4), burau_block());
        assert!(k.block(0..2, 0..2).is_zero());
    }

    #[test]
    fn mul_dimension_mismatch() {
        let a = MatrixLP::zero(2, 3, &ctx());
        assert!(matches!(a.mul(&a), Err(Error::DimMismatch { .. })));
    }

    #[test]
    fn permutation_conjugation_reorders() {
        let m = MatrixLP::from_fn(3, 3, &ctx(), |r, col| c((r * 3 + col) as i64));
        let order = [2, 0, 1];
        let p = MatrixLP::permutation(&order, &ctx()).unwrap();
        let conj = p.mul(&m).unwrap().mul(&p.transpose()).unwrap();
        for a in 0..3 {
            for b in 0..3 {
                assert_eq!(conj.get(a, b), m.get(order[a], order[b]));
            }
        }
        assert!(p.is_permutation());
        assert!(MatrixLP::permutation(&[0, 0, 1], &ctx()).is_err());
    }
}
