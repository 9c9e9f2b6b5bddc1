use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use super::MatrixRep;
use crate::ring::LaurentPoly;
use crate::welded::WeldedGen;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Inconclusive => "inconclusive",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Invariant {
    Trace,
    Det,
}

impl Invariant {
    pub fn as_str(self) -> &'static str {
        match self {
            Invariant::Trace => "trace",
            Invariant::Det => "det",
        }
    }
}

/// A conjugation invariant that differs on one generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub generator: String,
    pub invariant: Invariant,
    pub left: LaurentPoly,
    pub right: LaurentPoly,
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({}): {} vs {}", self.invariant.as_str(), self.generator, self.left, self.right)
    }
}

/// Outcome of a named check, with enough detail to rerun it by hand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepReport {
    pub check: String,
    pub status: Status,
    pub counterexample: Option<String>,
    pub matched_candidate: Option<String>,
    /// Number of stored golden matrices this report was compared against.
    pub fixtures_compared: usize,
    pub details: Vec<String>,
    pub certificates: Vec<Certificate>,
}

impl RepReport {
    pub fn new(check: impl Into<String>, status: Status) -> Self {
        RepReport {
            check: check.into(),
            status,
            counterexample: None,
            matched_candidate: None,
            fixtures_compared: 0,
            details: Vec::new(),
            certificates: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn note(&mut self, line: impl Into<String>) {
        self.details.push(line.into());
    }

    /// Downgrades to `Fail` unless `ok`, recording `line` either way.
    pub fn require(&mut self, ok: bool, line: impl Into<String>) {
        let line = line.into();
        self.details.push(format!("[{}] {line}", if ok { "ok" } else { "FAIL" }));
        if !ok {
            if self.counterexample.is_none() {
                self.counterexample = Some(line);
            }
            self.status = Status::Fail;
        }
    }
}

/// Compares per-generator traces and determinants.
///
/// `Pass` means a certificate of non-equivalence was found, `Fail` that the images are
/// identical, `Inconclusive` that every invariant agrees on distinct images.
pub fn rep_certificates(a: &MatrixRep, b: &MatrixRep) -> Result<RepReport> {
    if a.n() != b.n() {
        return Err(Error::GroupMismatch { left: a.n(), right: b.n() });
    }
    if a.dim() != b.dim() {
        return Err(Error::DimMismatch {
            op: "certificates",
            left: (a.dim(), a.dim()),
            right: (b.dim(), b.dim()),
        });
    }
    let vars = a.vars().union(b.vars());
    let check = format!("nonequivalence {} vs {}", a.name, b.name);
    if a.same_images(b) {
        let mut r = RepReport::new(check, Status::Fail);
        r.note("identical generator images");
        return Ok(r);
    }
    let mut certs = Vec::new();
    for g in WeldedGen::generators(a.n()) {
        let (x, y) = (a.image(g)?.lift(&vars)?, b.image(g)?.lift(&vars)?);
        for (inv, l, r) in [
            (Invariant::Trace, x.trace()?, y.trace()?),
            (Invariant::Det, x.det()?, y.det()?),
        ] {
            if l != r {
                certs.push(Certificate { generator: g.to_string(), invariant: inv, left: l, right: r });
            }
        }
    }
    let mut r = RepReport::new(check, if certs.is_empty() { Status::Inconclusive } else { Status::Pass });
    r.note(if certs.is_empty() {
        String::from("traces and determinants agree on every generator")
    } else {
        format!("{} separating invariant(s)", certs.len())
    });
    r.certificates = certs;
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reps::{burau, conjugate, dual_tym, tym};
    use crate::ring::{MatrixLP, Vars};

    fn t() -> (Vars, LaurentPoly) {
        let v = Vars::new(&["t"]);
        let t = LaurentPoly::var(&v, "t").unwrap();
        (v, t)
    }

    #[test]
    fn burau_vs_tym_by_trace() {
        let (v, t) = t();
        let r = rep_certificates(&burau(4, &t).unwrap(), &tym(4, &t).unwrap()).unwrap();
        assert_eq!(r.status, Status::Pass);
        let c = r
            .certificates
            .iter()
            .find(|c| c.invariant == Invariant::Trace && c.generator == "s1")
            .unwrap();
        assert_eq!(c.left, &LaurentPoly::constant(&v, 3) - &t);
        assert_eq!(c.right, LaurentPoly::constant(&v, 2));
    }

    #[test]
    fn tym_vs_dual_by_det() {
        let (_, t) = t();
        let r = rep_certificates(&tym(4, &t).unwrap(), &dual_tym(4, &t).unwrap()).unwrap();
        assert_eq!(r.status, Status::Pass);
        let c = r
            .certificates
            .iter()
            .find(|c| c.invariant == Invariant::Det && c.generator == "s2")
            .unwrap();
        assert_eq!(c.left, -&t);
        assert_eq!(c.right, -&t.unit_inverse().unwrap());
    }

    #[test]
    fn conjugate_is_inconclusive() {
        let (v, t) = t();
        let b = burau(3, &t).unwrap();
        let c = conjugate(&b, &MatrixLP::lower_ones(3, &v)).unwrap();
        assert_eq!(rep_certificates(&b, &c).unwrap().status, Status::Inconclusive);
        assert_eq!(rep_certificates(&b, &b).unwrap().status, Status::Fail);
    }
}
