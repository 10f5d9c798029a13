//! Exact arithmetic for Chern-class invariants of coherent sheaves on
//! projective space.
//!
//! Everything here is computed over the rationals with arbitrary-precision
//! integers; there is no floating point anywhere. The crate provides:
//!
//! * truncated power series and polynomials over `Q` ([`series`], [`poly`]),
//! * Chern data of sheaves on `P^N` with Whitney products, twists, duals and
//!   hyperplane restriction ([`chern`]),
//! * Euler characteristics via Chern character and Todd class
//!   ([`riemann_roch`]),
//! * splitting types, global-section types and the extremal no-gap
//!   construction ([`splitting`]),
//! * evaluators for section-count, second-Chern-class, discriminant and
//!   cohomology bounds ([`bounds`]),
//! * a catalog of sheaf descriptors with ground-truth invariants and a
//!   verifier that runs every applicable bound against them ([`catalog`]).

pub mod bounds;
pub mod catalog;
pub mod chern;
pub mod poly;
pub mod rational;
pub mod riemann_roch;
pub mod series;
pub mod splitting;

pub use chern::ChernData;
pub use poly::Polynomial;
pub use rational::Rational;
pub use series::TruncatedSeries;
pub use splitting::SplittingType;
