//! Matrix representations of `wB_n` over Laurent polynomial rings.

mod catalog;
mod ops;
mod report;

pub use catalog::{
    burau, dual_burau, dual_reduced_burau, dual_tym, make_catalog_rep, onedim, permutation,
    reduced_burau, tym, CatalogName,
};
pub use ops::{
    conjugate, coordinate_subquotient, direct_sum, dual_rep, lift_rep, specialize_rep, substitute_rep,
    tensor_rep, twist, DualVariant,
};
pub use report::{rep_certificates, Certificate, Invariant, RepReport, Status};

use alloc::string::String;
use alloc::vec::Vec;

use crate::ring::{MatrixLP, Vars};
use crate::welded::{defining_relations, Relation, WeldedGen, WeldedWord};
use crate::{Error, Result};

/// Images of the generators of `wB_n` as invertible `dim x dim` matrices.
///
/// The inverses of the `σ_i` images are stored alongside, so evaluating arbitrary words
/// never needs a matrix inversion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixRep {
    pub name: String,
    n: usize,
    dim: usize,
    vars: Vars,
    sigma: Vec<MatrixLP>,
    sigma_inv: Vec<MatrixLP>,
    tau: Vec<MatrixLP>,
}

impl MatrixRep {
    /// Builds a representation, inverting every `σ_i` image; fails with `NotAUnit` if
    /// some image is not invertible.
    pub fn new(name: impl Into<String>, n: usize, sigma: Vec<MatrixLP>, tau: Vec<MatrixLP>) -> Result<Self> {
        let sigma_inv = sigma.iter().map(MatrixLP::inverse).collect::<Result<Vec<_>>>()?;
        Self::with_inverses(name, n, sigma, sigma_inv, tau)
    }

    /// Builds a representation from images and precomputed inverses, checking
    /// `σ_i σ_i^{-1} = 1`.
    pub fn with_inverses(
        name: impl Into<String>,
        n: usize,
        sigma: Vec<MatrixLP>,
        sigma_inv: Vec<MatrixLP>,
        tau: Vec<MatrixLP>,
    ) -> Result<Self> {
        let gens = n.saturating_sub(1);
        if sigma.len() != gens || sigma_inv.len() != gens || tau.len() != gens {
            return Err(Error::InvalidArgument(alloc::format!(
                "wB_{n} needs {gens} images per generator family"
            )));
        }
        let Some(first) = sigma.first() else {
            return Err(Error::InvalidArgument(alloc::format!(
                "representations of wB_{n} need n >= 2"
            )));
        };
        let dim = first.rows();
        let vars = first.vars().clone();
        for m in sigma.iter().chain(&sigma_inv).chain(&tau) {
            vars.check_same(m.vars())?;
            if m.dims() != (dim, dim) {
                return Err(Error::DimMismatch { op: "representation", left: (dim, dim), right: m.dims() });
            }
        }
        for (s, si) in sigma.iter().zip(&sigma_inv) {
            if !s.mul(si)?.is_identity() {
                return Err(Error::BadInverse(String::from("sigma image times stored inverse")));
            }
        }
        Ok(MatrixRep { name: name.into(), n, dim, vars, sigma, sigma_inv, tau })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn sigma(&self) -> &[MatrixLP] {
        &self.sigma
    }

    pub fn sigma_inv(&self) -> &[MatrixLP] {
        &self.sigma_inv
    }

    pub fn tau(&self) -> &[MatrixLP] {
        &self.tau
    }

    pub fn image(&self, g: WeldedGen) -> Result<&MatrixLP> {
        let i = g.index();
        if i == 0 || i >= self.n {
            return Err(Error::IndexOutOfRange { index: i, bound: self.n - 1 });
        }
        Ok(match g {
            WeldedGen::Sigma(_) => &self.sigma[i - 1],
            WeldedGen::SigmaInv(_) => &self.sigma_inv[i - 1],
            WeldedGen::Tau(_) => &self.tau[i - 1],
        })
    }

    /// Image of a word: the ordered product of generator images.
    pub fn evaluate(&self, w: &WeldedWord) -> Result<MatrixLP> {
        if w.n() != self.n {
            return Err(Error::GroupMismatch { left: self.n, right: w.n() });
        }
        let mut acc = MatrixLP::identity(self.dim, &self.vars);
        for &g in w.gens() {
            acc = acc.mul(self.image(g)?)?;
        }
        Ok(acc)
    }

    /// Same generator images (names are ignored).
    pub fn same_images(&self, other: &MatrixRep) -> bool {
        self.n == other.n && self.sigma == other.sigma && self.tau == other.tau
    }

    /// Whether a single relation holds exactly.
    pub fn satisfies(&self, rel: &Relation) -> Result<bool> {
        Ok(self.evaluate(&rel.lhs)? == self.evaluate(&rel.rhs)?)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }
}

/// Defining relations that fail as matrix identities; empty iff `rep` is a representation.
pub fn verify_rep(rep: &MatrixRep) -> Result<Vec<Relation>> {
    let mut bad = Vec::new();
    for rel in defining_relations(rep.n)? {
        if !rep.satisfies(&rel)? {
            bad.push(rel);
        }
    }
    Ok(bad)
}
