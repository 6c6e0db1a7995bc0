//! Exact computations with Artin L-series prefixes of Galois extensions of ℚ
//! described by a polynomial and an explicit permutation group on its roots.
//!
//! The crate is `no_std` with `alloc`; file formats, threads and the command
//! line live in the companion workbench crate.

#![no_std]
extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod arith;
pub mod builtin;
pub mod character;
pub mod cyclo;
pub mod error;
pub mod galois;
pub mod group;
pub mod lseries;
pub mod mapper;
pub mod poly;
pub mod verifier;

pub use error::{Error, Result};
