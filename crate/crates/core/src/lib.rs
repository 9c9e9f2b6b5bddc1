//! Exact linear representations of welded braid groups.
//!
//! The crate is `no_std` and only needs `alloc`. It provides
//!
//! - [`ring`]: sparse Laurent polynomials over `Z` and small dense matrices over them,
//! - [`freegroup`]: reduced words in free groups, endomorphisms and the integral group ring,
//! - [`welded`]: welded braid words, their defining relations, Artin/Wada actions and the
//!   compatibility condition for Long-Moody parameters,
//! - [`reps`]: a catalog of matrix representations together with structural operations,
//! - [`longmoody`]: the Long-Moody functor and the reports that reproduce its known outputs.
//!
//! Composition of welded braid words reads from right to left: the word `t1 s2 s1`
//! is the composite `τ_1 ∘ σ_2 ∘ σ_1`, so `σ_1` acts first.

#![no_std]

extern crate alloc;

mod error;

pub mod freegroup;
pub mod longmoody;
pub mod reps;
pub mod ring;
pub mod welded;

pub use error::{Error, Result};
