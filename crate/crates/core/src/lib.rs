//! Exact-arithmetic toolkit for multiplicity bounds of graded ideals.
//!
//! The library computes, over any field realized combinatorially:
//!
//! - monomial ideal arithmetic with canonical minimal generators
//!   ([`monomial`]);
//! - Hilbert series numerators, codimension and multiplicity ([`hilbert`]);
//! - minimal graded Betti numbers by two independent routes — simplicial
//!   homology over the lcm lattice, and the closed formula for stable
//!   ideals — plus the derived shift/regularity/purity invariants
//!   ([`resolution`]);
//! - the multiplicity bound conjectures, the improved tightness variant, the
//!   pure-resolution multiplicity formula, and a Vandermonde-determinant
//!   certificate for the upper bound ([`bounds`]);
//! - shift-profile propagation under adjoining regular sequences
//!   ([`regseq`]);
//! - the determinantal (maximal minor) calculus: multiplicities, shifts,
//!   bounds and duality driven by the degree array ([`determinantal`]);
//! - empirics for powers `I^k`: regularity slopes, asymptotic multiplicity,
//!   limiting bound ratios ([`powers`]).
//!
//! All arithmetic is exact (arbitrary-precision integers and rationals);
//! no floating point enters any decision.

pub mod bounds;
pub mod config;
pub mod determinantal;
pub mod error;
pub mod hilbert;
pub mod monomial;
pub mod powers;
pub mod regseq;
pub mod resolution;

pub use config::Caps;
pub use error::{Error, Result};
pub use monomial::{parse_ideal, Monomial, MonomialIdeal};
pub use resolution::BettiTable;
