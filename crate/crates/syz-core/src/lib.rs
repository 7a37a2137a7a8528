//! Computational SYZ mirror symmetry for A_n-resolutions.
//!
//! The surface under study is the affine hypersurface
//! `Y = {(u, v, z) ∈ ℂ² × ℂ^× | u·v = f(z)}` for a polynomial `f` with
//! distinct nonzero roots of strictly increasing modulus. This crate builds
//! the Lagrangian torus fibration on `Y`, the wall structure and
//! instanton-corrected coordinate gluing on its base, the toric mirror
//! (the A_n-resolution minus a hypersurface), and the transform taking
//! Lagrangian branes on `Y` to coherent-sheaf data on the mirror. The
//! `categories` module verifies the resulting morphism-space dimension
//! match and carries the K-theoretic braid action by spherical twists.
//!
//! Everything here is pure computation over `f64` and exact integers; no
//! IO. The companion CLI crate carries file formats and diagram output.
//!
//! Modules follow the geometry:
//!
//! - [`geometry`]: the surface `Y`, its symplectic form, moment map,
//!   fibration, and numeric Lagrangian checks.
//! - [`affine`]: the base `B = ℝ²` with singular points, chart regions,
//!   semi-flat coordinates, monodromy, and wall-crossing corrections.
//! - [`toric`]: exact lattice fans, chart transitions, intersection
//!   numbers, and the fan-from-triangulation builder.
//! - [`branes`]: admissible paths in the universal cover, winding numbers,
//!   and conormal branes with flat connections.
//! - [`transform`]: the brane-to-sheaf transform on objects.
//! - [`categories`]: graded hom tables on both sides, the dimension-level
//!   equivalence check, Euler form, and spherical twists.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod affine;
pub mod branes;
pub mod categories;
pub mod geometry;
pub mod matrix;
pub mod toric;
pub mod transform;

pub use num_complex::Complex64;

/// Default tolerance for geometric membership tests.
pub const DEFAULT_TOL: f64 = 1e-9;

/// One turn. The angular coordinate θ of a lifted path is measured in
/// radians; winding integers are θ-differences divided by this.
pub const TAU: f64 = core::f64::consts::TAU;
