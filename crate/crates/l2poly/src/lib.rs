//! Exact polyhedral descriptions of Minkowski sums of L-convex sets.
//!
//! An L-convex polyhedron is a difference-constraint polyhedron
//! `{x | x_j - x_i <= gamma_ij}`.  The sum `P = P1 + P2` of two such
//! polyhedra is described by inequalities `x(J) - x(I) <= gamma_IJ` over
//! disjoint index sets with `|I| = |J|`.  This crate computes that
//! description three independent ways and cross-checks them against
//! brute-force lattice enumeration:
//!
//! * [`minkowski::l2_describe_fm`] projects the combined inequality
//!   system by exact Fourier-Motzkin elimination,
//! * [`graphrep::l2_describe_graph`] evaluates the bounds as shortest-path
//!   assignments (`pairs` mode) or enumerates alternate directed cycles
//!   (`cycles` mode),
//! * [`oracle`] enumerates integer points directly.
//!
//! All arithmetic is arbitrary-precision integer; there is no floating
//! point anywhere in the crate.

pub mod error;
pub mod extint;
pub mod fm;
pub mod graphrep;
pub mod index_set;
pub mod ineq;
pub mod lconvex;
pub mod minkowski;
pub mod oracle;

pub use error::Error;
pub use extint::ExtInt;
pub use index_set::IndexSet;
pub use ineq::{InequalitySystem, LinearInequality, Var};
pub use lconvex::{GammaSystem, LnatSystem};
pub use minkowski::{L2Description, L2Instance};

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;
