use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use super::MatrixRep;
use crate::ring::{LaurentPoly, MatrixLP, Vars};
use crate::welded::WeldedGen;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DualVariant {
    /// `M ↦ (M^{-1})^T`.
    TransposeInverse,
    /// `M ↦ bar((M^{-1})^T)`, where bar inverts every variable.
    TransposeInverseBar,
}

pub fn dual_rep(rep: &MatrixRep, variant: DualVariant) -> Result<MatrixRep> {
    let fix = |m: &MatrixLP| match variant {
        DualVariant::TransposeInverse => m.transpose(),
        DualVariant::TransposeInverseBar => m.transpose().map(LaurentPoly::bar),
    };
    // (σ^{-1})^T is the new σ and σ^T its inverse
    let sigma = rep.sigma_inv().iter().map(fix).collect();
    let sigma_inv = rep.sigma().iter().map(fix).collect();
    let tau = rep
        .tau()
        .iter()
        .map(|m| Ok(fix(&m.inverse()?)))
        .collect::<Result<Vec<_>>>()?;
    let suffix = match variant {
        DualVariant::TransposeInverse => "*",
        DualVariant::TransposeInverseBar => "*bar",
    };
    MatrixRep::with_inverses(format!("{}{suffix}", rep.name), rep.n(), sigma, sigma_inv, tau)
}

fn same_group(a: &MatrixRep, b: &MatrixRep) -> Result<()> {
    if a.n() != b.n() {
        return Err(Error::GroupMismatch { left: a.n(), right: b.n() });
    }
    Ok(())
}

fn lift_all(ms: &[MatrixLP], vars: &Vars) -> Result<Vec<MatrixLP>> {
    ms.iter().map(|m| m.lift(vars)).collect()
}

/// Moves a representation into a larger ring context.
pub fn lift_rep(rep: &MatrixRep, vars: &Vars) -> Result<MatrixRep> {
    if rep.vars() == vars {
        return Ok(rep.clone());
    }
    MatrixRep::with_inverses(
        rep.name.clone(),
        rep.n(),
        lift_all(rep.sigma(), vars)?,
        lift_all(rep.sigma_inv(), vars)?,
        lift_all(rep.tau(), vars)?,
    )
}

fn pairwise(
    a: &MatrixRep,
    b: &MatrixRep,
    name: alloc::string::String,
    f: impl Fn(&MatrixLP, &MatrixLP) -> Result<MatrixLP>,
) -> Result<MatrixRep> {
    same_group(a, b)?;
    let vars = a.vars().union(b.vars());
    let a = lift_rep(a, &vars)?;
    let b = lift_rep(b, &vars)?;
    let zip = |x: &[MatrixLP], y: &[MatrixLP]| {
        x.iter().zip(y).map(|(m, k)| f(m, k)).collect::<Result<Vec<_>>>()
    };
    MatrixRep::with_inverses(
        name,
        a.n(),
        zip(a.sigma(), b.sigma())?,
        zip(a.sigma_inv(), b.sigma_inv())?,
        zip(a.tau(), b.tau())?,
    )
}

/// `g ↦ ρ1(g) ⊗ ρ2(g)` over the union of the two variable contexts.
pub fn tensor_rep(a: &MatrixRep, b: &MatrixRep) -> Result<MatrixRep> {
    pairwise(a, b, format!("{} ⊗ {}", a.name, b.name), |m, k| m.kron(k))
}

/// `g ↦ ρ1(g) ⊕ ρ2(g)`.
pub fn direct_sum(a: &MatrixRep, b: &MatrixRep) -> Result<MatrixRep> {
    pairwise(a, b, format!("{} ⊕ {}", a.name, b.name), |m, k| m.direct_sum(k))
}

/// Scales the `σ` images by the unit `r`; `τ` images are untouched.
pub fn twist(r: &LaurentPoly, rep: &MatrixRep) -> Result<MatrixRep> {
    if !r.is_unit() {
        return Err(Error::NotAUnit(r.to_string()));
    }
    let vars = rep.vars().union(r.vars());
    let r = r.lift(&vars)?;
    let ri = r.unit_inverse()?;
    let rep = lift_rep(rep, &vars)?;
    let scale = |ms: &[MatrixLP], s: &LaurentPoly| ms.iter().map(|m| m.scale(s)).collect::<Result<Vec<_>>>();
    MatrixRep::with_inverses(
        format!("({r})·{}", rep.name),
        rep.n(),
        scale(rep.sigma(), &r)?,
        scale(rep.sigma_inv(), &ri)?,
        rep.tau().to_vec(),
    )
}

/// `g ↦ M ρ(g) M^{-1}`.
pub fn conjugate(rep: &MatrixRep, m: &MatrixLP) -> Result<MatrixRep> {
    let vars = rep.vars().union(m.vars());
    let m = m.lift(&vars)?;
    if m.dims() != (rep.dim(), rep.dim()) {
        return Err(Error::DimMismatch { op: "conjugate", left: (rep.dim(), rep.dim()), right: m.dims() });
    }
    let mi = m.inverse()?;
    let rep = lift_rep(rep, &vars)?;
    let conj = |ms: &[MatrixLP]| ms.iter().map(|x| m.mul(x)?.mul(&mi)).collect::<Result<Vec<_>>>();
    MatrixRep::with_inverses(
        rep.name.clone(),
        rep.n(),
        conj(rep.sigma())?,
        conj(rep.sigma_inv())?,
        conj(rep.tau())?,
    )
}

/// Splits `P ρ P^{-1}` at `split`: the first `split` coordinates must span a
/// subrepresentation, i.e. every image has a zero lower-left block.
///
/// Returns the restriction to that span and the induced action on the quotient. `P` may
/// be any invertible matrix; a permutation matrix just reorders the basis.
pub fn coordinate_subquotient(rep: &MatrixRep, p: &MatrixLP, split: usize) -> Result<(MatrixRep, MatrixRep)> {
    let d = rep.dim();
    if split > d {
        return Err(Error::IndexOutOfRange { index: split, bound: d });
    }
    let c = conjugate(rep, p)?;
    let gens: Vec<_> = WeldedGen::generators(rep.n()).collect();
    for g in &gens {
        let m = c.image(*g)?;
        for row in split..d {
            for col in 0..split {
                if !m.get(row, col).is_zero() {
                    return Err(Error::ClosureFailure { generator: g.to_string(), row, col });
                }
            }
        }
    }
    let part = |ms: &[MatrixLP], r: core::ops::Range<usize>| ms.iter().map(|m| m.block(r.clone(), r.clone())).collect::<Vec<_>>();
    let build = |r: core::ops::Range<usize>, label: &str| {
        MatrixRep::with_inverses(
            format!("{label}({})", rep.name),
            rep.n(),
            part(c.sigma(), r.clone()),
            part(c.sigma_inv(), r.clone()),
            part(c.tau(), r),
        )
    };
    Ok((build(0..split, "sub")?, build(split..d, "quot")?))
}

/// Entrywise substitution of named variables; the context is kept.
pub fn specialize_rep(rep: &MatrixRep, assignment: &[(&str, LaurentPoly)]) -> Result<MatrixRep> {
    let vars = rep.vars().clone();
    let f = |ms: &[MatrixLP]| {
        ms.iter()
            .map(|m| m.try_map(&vars, |p| p.specialize(assignment)))
            .collect::<Result<Vec<_>>>()
    };
    MatrixRep::with_inverses(rep.name.clone(), rep.n(), f(rep.sigma())?, f(rep.sigma_inv())?, f(rep.tau())?)
}

/// Entrywise ring homomorphism into `target`, sending the `i`-th variable to `images[i]`.
pub fn substitute_rep(rep: &MatrixRep, target: &Vars, images: &[LaurentPoly]) -> Result<MatrixRep> {
    let f = |ms: &[MatrixLP]| {
        ms.iter()
            .map(|m| m.try_map(target, |p| p.substitute(target, images)))
            .collect::<Result<Vec<_>>>()
    };
    MatrixRep::with_inverses(rep.name.clone(), rep.n(), f(rep.sigma())?, f(rep.sigma_inv())?, f(rep.tau())?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reps::{burau, dual_burau, onedim, permutation, reduced_burau, tym, verify_rep};

    fn tq() -> (Vars, LaurentPoly, LaurentPoly) {
        let v = Vars::new(&["t", "q"]);
        let t = LaurentPoly::var(&v, "t").unwrap();
        let q = LaurentPoly::var(&v, "q").unwrap();
        (v, t, q)
    }

    #[test]
    fn onedim_dual_and_twist() {
        let (v, t, _) = tq();
        let ti = t.unit_inverse().unwrap();
        let d = dual_rep(&onedim(3, &t).unwrap(), DualVariant::TransposeInverse).unwrap();
        assert!(d.same_images(&onedim(3, &ti).unwrap()));
        let triv = twist(&ti, &onedim(3, &t).unwrap()).unwrap();
        assert!(triv.same_images(&onedim(3, &LaurentPoly::one(&v)).unwrap()));
    }

    #[test]
    fn permutation_is_self_dual() {
        let (v, _, _) = tq();
        let p = permutation(4, &v).unwrap();
        for var in [DualVariant::TransposeInverse, DualVariant::TransposeInverseBar] {
            assert!(dual_rep(&p, var).unwrap().same_images(&p));
        }
    }

    #[test]
    fn tensor_with_onedim_is_twist() {
        let (_, t, q) = tq();
        let b = burau(3, &t).unwrap();
        let a = tensor_rep(&onedim(3, &q).unwrap(), &b).unwrap();
        assert!(a.same_images(&twist(&q, &b).unwrap()));
        assert_eq!(tensor_rep(&b, &b).unwrap().dim(), 9);
        assert!(tensor_rep(&b, &burau(4, &t).unwrap()).is_err());
    }

    #[test]
    fn twist_round_trip_and_unit_check() {
        let (v, t, q) = tq();
        let b = dual_burau(4, &t).unwrap();
        let back = twist(&q, &twist(&q.unit_inverse().unwrap(), &b).unwrap()).unwrap();
        assert!(back.same_images(&b));
        assert!(twist(&(&q + &LaurentPoly::one(&v)), &b).is_err());
        let tw = twist(&q, &b).unwrap();
        assert_eq!(tw.sigma()[0].get(0, 1), &(&q * &t));
        assert_eq!(tw.tau()[0], b.tau()[0]);
    }

    #[test]
    fn operations_preserve_relations() {
        let (_, t, q) = tq();
        let b = burau(3, &t).unwrap();
        let ty = tym(3, &q).unwrap();
        for rep in [
            dual_rep(&b, DualVariant::TransposeInverse).unwrap(),
            dual_rep(&b, DualVariant::TransposeInverseBar).unwrap(),
            twist(&q, &b).unwrap(),
            tensor_rep(&b, &ty).unwrap(),
            direct_sum(&b, &ty).unwrap(),
        ] {
            assert!(verify_rep(&rep).unwrap().is_empty(), "{}", rep.name);
        }
    }

    #[test]
    fn conjugation_invariants() {
        let (v, t, _) = tq();
        let b = burau(3, &t).unwrap();
        assert!(conjugate(&b, &MatrixLP::identity(3, &v)).unwrap().same_images(&b));
        let c = conjugate(&b, &MatrixLP::lower_ones(3, &v)).unwrap();
        for (x, y) in b.sigma().iter().zip(c.sigma()) {
            assert_eq!(x.trace().unwrap(), y.trace().unwrap());
            assert_eq!(x.det().unwrap(), y.det().unwrap());
        }
        assert!(conjugate(&b, &MatrixLP::identity(2, &v)).is_err());
    }

    #[test]
    fn burau_splits_by_r() {
        let (v, t, _) = tq();
        for n in 2..=5 {
            let b = burau(n, &t).unwrap();
            let (sub, quot) = coordinate_subquotient(&b, &MatrixLP::lower_ones(n, &v), n - 1).unwrap();
            assert!(sub.same_images(&reduced_burau(n, &t).unwrap()));
            assert!(quot.same_images(&onedim(n, &LaurentPoly::one(&v)).unwrap()));
        }
    }

    #[test]
    fn split_zero_and_failure() {
        let (v, t, _) = tq();
        let b = burau(3, &t).unwrap();
        let (sub, quot) = coordinate_subquotient(&b, &MatrixLP::identity(3, &v), 0).unwrap();
        assert_eq!(sub.dim(), 0);
        assert!(quot.same_images(&b));
        let err = coordinate_subquotient(&b, &MatrixLP::identity(3, &v), 1).unwrap_err();
        assert!(matches!(err, Error::ClosureFailure { .. }));
    }

    #[test]
    fn specialize_to_permutation() {
        let (v, t, _) = tq();
        let one = LaurentPoly::one(&v);
        let p = permutation(4, &v).unwrap();
        for rep in [burau(4, &t).unwrap(), tym(4, &t).unwrap()] {
            assert!(specialize_rep(&rep, &[("t", one.clone())]).unwrap().same_images(&p));
        }
        let r = specialize_rep(&reduced_burau(4, &t).unwrap(), &[("t", one)]).unwrap();
        assert_eq!(r.sigma(), r.tau());
    }
}
