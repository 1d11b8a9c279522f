//! Noncommutative invariants of `SL(2)` acting on binary forms.
//!
//! The space of invariant `m`-linear forms on binary forms of degree `d` has a
//! basis indexed by the `m`-partite noncrossing pair partitions of `[md]`.
//! This crate builds that basis exactly, checks its invariance, rewrites
//! arbitrary bracket products into it, and computes the dimension series in
//! three independent ways.
//!
//! | module | contents |
//! |---|---|
//! | [`partition`] | set partitions, `NC(n)`, Möbius function, thickening |
//! | [`bracket`] | bracket monomials and Plücker crossing removal |
//! | [`symbolic`] | noncommutative polynomials, restitution, the noncrossing basis |
//! | [`action`] | exact `SL(2, Q)` action and the invariance check |
//! | [`free_prob`] | free cumulants and the mixed-moment formula |
//! | [`hilbert`] | dimension series by enumeration, Chebyshev moments, quadrature |
//! | [`cli`] | the `ncinv` command line and its result cache |

pub mod action;
pub mod bracket;
pub mod cli;
pub mod error;
pub mod free_prob;
pub mod hilbert;
pub mod partition;
pub mod symbolic;

pub use error::{Error, Result};

pub type Rational = num_rational::BigRational;
