//! Exact-arithmetic verification toolkit for finite unitary matrix groups
//! and three-qubit entanglement invariants.
//!
//! The crate is organised bottom-up:
//!
//! - [`dyadic`]: the scalar ring of complex numbers `(a + b*sqrt2 + i(c + d*sqrt2)) / 2^k`
//!   with arbitrary-precision integer numerators. Every matrix entry in the
//!   catalogue lives in this ring, so products, conjugates and norms are exact.
//! - [`matrix`]: dense square matrices and vectors over that ring, with
//!   exact unitarity checks and a canonical serialization used for hashing.
//! - [`catalogue`]: the built-in named generator matrices, checksum-guarded.
//! - [`io`]: JSON import and export for matrices.
//! - [`group`]: orbits, permutation images, closure enumeration, a
//!   deterministic Schreier-Sims engine, fingerprints and identification.
//! - [`tangle`]: three-qubit states, reduced density matrices, concurrence,
//!   tangles and the entanglement classifier.
//! - [`claims`]: the registry of verification claims and the runner that
//!   evaluates them into a report.

pub mod catalogue;
pub mod claims;
pub mod group;
pub mod io;
pub mod dyadic;
pub mod matrix;
pub mod tangle;
