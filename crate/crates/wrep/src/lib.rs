//! File formats, fixtures, parallel checks and the command-line front end for
//! `wrep-core`.

pub mod cli;
pub mod error;
pub mod json;
pub mod latex;
pub mod par;
pub mod suites;
pub mod text;

pub use error::{Result, WrepError};
