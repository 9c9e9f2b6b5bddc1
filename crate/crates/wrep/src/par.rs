//! Relation checks spread over a rayon pool sized by `WREP_THREADS`.

use rayon::prelude::*;
use wrep_core::reps::MatrixRep;
use wrep_core::welded::{defining_relations, Relation};

use crate::error::{Result, WrepError};

/// A pool with `WREP_THREADS` workers, or rayon's default when unset.
pub fn pool() -> Result<rayon::ThreadPool> {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Ok(v) = std::env::var("WREP_THREADS") {
        let k: usize = v
            .trim()
            .parse()
            .ok()
            .filter(|&k| k > 0)
            .ok_or_else(|| WrepError::Schema(format!("WREP_THREADS must be a positive integer, got `{v}`")))?;
        b = b.num_threads(k);
    }
    b.build().map_err(|e| WrepError::Schema(e.to_string()))
}

/// Same result as `wrep_core::reps::verify_rep`, in the same order.
pub fn verify_rep_par(rep: &MatrixRep) -> Result<Vec<Relation>> {
    let rels = defining_relations(rep.n())?;
    let checks: Vec<_> = pool()?.install(|| {
        rels.par_iter().map(|r| rep.satisfies(r).map(|ok| (!ok).then(|| r.clone()))).collect()
    });
    let mut out = Vec::new();
    for c in checks {
        if let Some(r) = c? {
            out.push(r);
        }
    }
    Ok(out)
}
