//! Exact mod-2 computational backend for verifying the finite calculations
//! behind a 30-dimensional Arf-Kervaire manifold construction.
//!
//! Everything here is integer or GF(2) arithmetic except the octonion
//! homotopy checks in [`cayley`], which carry an exact-rational mode and a
//! tolerance-pinned binary-float mode. No randomness is generated
//! internally: callers pass a seeded generator and results are
//! reproducible byte for byte.
//!
//! The crate is `no_std` (with `alloc`); IO, file formats and the
//! command-line surface live in the companion `kervaire-cli` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod cayley;
pub mod f2;
pub mod grouphom;
pub mod jones;
pub mod mfldcoh;
pub mod quadform;
pub mod report;
pub mod steenrod;
pub mod verify;
