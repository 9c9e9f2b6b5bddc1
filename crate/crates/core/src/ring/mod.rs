//! Exact arithmetic in `Z[x_1^{±1}, …, x_k^{±1}]` and dense matrices over it.

mod matrix;

pub use matrix::MatrixLP;

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Exponent vector, one signed exponent per variable of the context.
pub type Exponents = Vec<i32>;

/// An ordered list of variable names shared by every polynomial of a computation.
#[derive(Clone)]
pub struct Vars(Arc<[String]>);

impl Vars {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Self {
        Vars(names.iter().map(|s| s.as_ref().to_string()).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn position(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|v| v == name)
    }

    /// Variables of `self` followed by those of `other` not already present.
    pub fn union(&self, other: &Vars) -> Vars {
        if self == other {
            return self.clone();
        }
        let mut names: Vec<String> = self.0.to_vec();
        for v in other.0.iter() {
            if !names.contains(v) {
                names.push(v.clone());
            }
        }
        Vars(names.into())
    }

    fn joined(&self) -> String {
        self.0.join(",")
    }

    pub(crate) fn check_same(&self, other: &Vars) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::VarsMismatch { left: self.joined(), right: other.joined() })
        }
    }
}

impl PartialEq for Vars {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for Vars {}

impl fmt::Debug for Vars {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

/// Sparse Laurent polynomial with arbitrary-precision integer coefficients.
///
/// Terms are kept in a `BTreeMap` keyed by exponent vector, so the representation is
/// canonical: no zero coefficients are stored and structural equality is ring equality.
#[derive(Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    vars: Vars,
    terms: BTreeMap<Exponents, BigInt>,
}

impl LaurentPoly {
    pub fn zero(vars: &Vars) -> Self {
        LaurentPoly { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn one(vars: &Vars) -> Self {
        Self::constant(vars, 1)
    }

    pub fn constant(vars: &Vars, c: impl Into<BigInt>) -> Self {
        Self::monomial(vars, vec![0; vars.len()], c)
    }

    pub fn monomial(vars: &Vars, exps: Exponents, c: impl Into<BigInt>) -> Self {
        assert_eq!(exps.len(), vars.len(), "exponent vector length must match the context");
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        LaurentPoly { vars: vars.clone(), terms }
    }

    /// The variable `name` itself.
    pub fn var(vars: &Vars, name: &str) -> Result<Self> {
        let idx = vars.position(name).ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        let mut e = vec![0; vars.len()];
        e[idx] = 1;
        Ok(Self::monomial(vars, e, 1))
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, collecting like terms.
    pub fn from_terms<I, C>(vars: &Vars, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Exponents, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            if e.len() != vars.len() {
                return Err(Error::InvalidArgument(alloc::format!(
                    "exponent vector of length {} in a context of {} variables",
                    e.len(),
                    vars.len()
                )));
            }
            p.add_term(e, c.into());
        }
        Ok(p)
    }

    fn add_term(&mut self, e: Exponents, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.iter().all(|(e, c)| e.iter().all(|&x| x == 0) && c.is_one())
    }

    /// Units of the Laurent ring are exactly `±monomial`.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms.values().all(|c| c.abs().is_one())
    }

    pub fn unit_inverse(&self) -> Result<Self> {
        if !self.is_unit() {
            return Err(Error::NotAUnit(self.to_string()));
        }
        let (e, c) = self.terms.iter().next().unwrap();
        Ok(Self::monomial(&self.vars, e.iter().map(|x| -x).collect(), c.clone()))
    }

    /// Integer power; negative exponents need a unit.
    pub fn pow(&self, k: i64) -> Result<Self> {
        let base = if k < 0 { self.unit_inverse()? } else { self.clone() };
        let mut acc = Self::one(&self.vars);
        for _ in 0..k.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Coefficient sum, i.e. the value at all variables equal to 1.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.vars.check_same(&other.vars)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.vars.check_same(&other.vars)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.vars.check_same(&other.vars)?;
        let mut out = Self::zero(&self.vars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    /// Ring homomorphism sending the `i`-th variable to `images[i]`.
    ///
    /// Every image must be a unit so that negative exponents substitute soundly; the
    /// images share the target context.
    pub fn substitute(&self, target: &Vars, images: &[LaurentPoly]) -> Result<Self> {
        if images.len() != self.vars.len() {
            return Err(Error::InvalidArgument(alloc::format!(
                "{} images for {} variables",
                images.len(),
                self.vars.len()
            )));
        }
        let mut inverses = Vec::with_capacity(images.len());
        for img in images {
            target.check_same(&img.vars)?;
            inverses.push(img.unit_inverse()?);
        }
        let mut out = Self::zero(target);
        for (e, c) in &self.terms {
            let mut term = Self::constant(target, c.clone());
            for (i, &k) in e.iter().enumerate() {
                let base = if k < 0 { &inverses[i] } else { &images[i] };
                for _ in 0..k.unsigned_abs() {
                    term = &term * base;
                }
            }
            out = &out + &term;
        }
        Ok(out)
    }

    /// Substitutes the named variables and keeps the others; the context is unchanged.
    pub fn specialize(&self, assignment: &[(&str, LaurentPoly)]) -> Result<Self> {
        let mut images = Vec::with_capacity(self.vars.len());
        for name in self.vars.names() {
            match assignment.iter().find(|(v, _)| v == name) {
                Some((_, img)) => images.push(img.clone()),
                None => images.push(Self::var(&self.vars, name)?),
            }
        }
        for (v, _) in assignment {
            if self.vars.position(v).is_none() {
                return Err(Error::UnknownVariable(v.to_string()));
            }
        }
        self.substitute(&self.vars, &images)
    }

    /// Lifts into a larger context that contains every variable of `self`.
    pub fn lift(&self, target: &Vars) -> Result<Self> {
        if &self.vars == target {
            return Ok(self.clone());
        }
        let map: Vec<usize> = self
            .vars
            .names()
            .iter()
            .map(|v| target.position(v).ok_or_else(|| Error::UnknownVariable(v.clone())))
            .collect::<Result<_>>()?;
        let mut out = Self::zero(target);
        for (e, c) in &self.terms {
            let mut ne = vec![0; target.len()];
            for (i, &k) in e.iter().enumerate() {
                ne[map[i]] = k;
            }
            out.add_term(ne, c.clone());
        }
        Ok(out)
    }

    /// Replaces every variable by its inverse.
    pub fn bar(&self) -> Self {
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.iter().map(|x| -x).collect(), c.clone())).collect(),
        }
    }

    /// Terms sorted by total degree, then exponents: the order used for display.
    pub fn display_terms(&self) -> Vec<(&Exponents, &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| {
            let da: i64 = a.0.iter().map(|&x| x as i64).sum();
            let db: i64 = b.0.iter().map(|&x| x as i64).sum();
            da.cmp(&db).then_with(|| a.0.cmp(b.0))
        });
        v
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl $tr<&LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            /// Panics when the variable contexts differ; use the `checked_*` methods
            /// for fallible arithmetic.
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                self.$checked(rhs).expect("Laurent polynomial arithmetic across contexts")
            }
        }

        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

/// Writes the monomial part of a term; `pow` renders an exponent other than 1.
pub(crate) fn write_monomial(
    f: &mut dyn fmt::Write,
    vars: &Vars,
    e: &[i32],
    pow: impl Fn(&mut dyn fmt::Write, &str, i32) -> fmt::Result,
) -> fmt::Result {
    for (name, &k) in vars.names().iter().zip(e) {
        match k {
            0 => {}
            1 => f.write_str(name)?,
            _ => pow(f, name, k)?,
        }
    }
    Ok(())
}

/// Renders a polynomial with `pow` controlling exponent notation.
pub(crate) fn write_poly(
    f: &mut dyn fmt::Write,
    p: &LaurentPoly,
    pow: &dyn Fn(&mut dyn fmt::Write, &str, i32) -> fmt::Result,
) -> fmt::Result {
    if p.is_zero() {
        return f.write_str("0");
    }
    for (i, (e, c)) in p.display_terms().into_iter().enumerate() {
        let constant = e.iter().all(|&x| x == 0);
        let neg = c.is_negative();
        let abs = c.abs();
        if i == 0 {
            if neg {
                f.write_str("-")?;
            }
        } else {
            f.write_str(if neg { "-" } else { "+" })?;
        }
        if constant || !abs.is_one() {
            write!(f, "{abs}")?;
        }
        write_monomial(f, &p.vars, e, pow)?;
    }
    Ok(())
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(f, self, &|f, name, k| write!(f, "{name}^{k}"))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

/// LaTeX rendering of a single polynomial, e.g. `1-t` or `qt^{-1}`.
pub fn latex(p: &LaurentPoly) -> String {
    let mut s = String::new();
    write_poly(&mut s, p, &|f, name, k| write!(f, "{name}^{{{k}}}")).unwrap();
    s
}
