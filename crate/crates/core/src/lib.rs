//! Exact construction and certification of a two-parameter family of
//! bidouble covers of a rational surface with eight nodes, giving minimal
//! surfaces of general type with `p_g = 0` and `K^2 = 7`.
//!
//! Everything is finite rational linear algebra: the plane configuration is
//! built over the rationals, linear systems with assigned (and infinitely
//! near) base points are solved by interpolation, and the surface invariants
//! reduce to intersection arithmetic on the Picard lattice of the blowup.

#![allow(clippy::result_large_err, clippy::needless_range_loop)]

pub mod qalg;
pub mod plane;
pub mod linsys;
pub mod config;
pub mod picard;
pub mod fibration;
pub mod bidouble;
pub mod certify;
