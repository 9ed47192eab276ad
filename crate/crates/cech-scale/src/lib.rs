//! Smallest-common-point scales for systems of disks with distinct radii.
//!
//! A system of disks in the plane, each with its own radius, is rescaled by a
//! common factor λ ≥ 0. This crate computes the smallest λ at which the
//! rescaled disks share a point (their *Čech scale*), a witness point in the
//! intersection, and the weighted simplicial complexes that filtration
//! induces:
//!
//! - [`cech_scale`] / [`cech_scale_naive`] — the minimal common-point scale
//!   with a witness, by a maximum over triplets or by direct bisection;
//! - [`rho`] — the signed feasibility function whose root the solvers find;
//! - [`build_complex`] — the filtered complex up to a chosen dimension;
//! - [`two_skeleton`] — vertices, edges, and triangles for systems in R^d,
//!   via an isometric reduction of each triplet to the plane
//!   ([`affine_project`]);
//! - [`miniball`] — smallest enclosing ball of a planar point cloud, as the
//!   Čech data of the unit-radius system on the points;
//! - [`oracle_cech_scale`] — a slow, independent grid minimizer used to
//!   cross-check everything else;
//! - disk/filtration file formats ([`io`]), SVG rendering ([`svg`]), and a
//!   seeded timing harness ([`bench`]).
//!
//! ```
//! use cech_scale::{cech_scale, DiskSystem};
//!
//! // Three pairwise tangent unit disks: the common point appears at 2/√3.
//! let m = DiskSystem::from_planar(&[
//!     (0.0, 0.0, 1.0),
//!     (2.0, 0.0, 1.0),
//!     (1.0, 3f64.sqrt(), 1.0),
//! ])
//! .unwrap();
//! let result = cech_scale(&m).unwrap();
//! assert!((result.cech_scale - 2.0 / 3f64.sqrt()).abs() < 1e-9);
//! ```

pub mod bench;
mod complex;
mod error;
mod geometry;
mod highdim;
pub mod io;
mod miniball;
mod oracle;
mod rho;
mod solver;
pub mod svg;

pub use complex::{build_complex, filtration_steps, Simplex, WeightedComplex};
pub use error::Error;
pub use geometry::{
    containment_scale, d_point, pair_scale, rips_scale, vietoris_rips_bound, Containment, Disk,
    DiskSystem, Point2, Scale,
};
pub use highdim::{affine_project, two_skeleton, AffineTriple};
pub use miniball::{miniball, Ball};
pub use oracle::{
    oracle_cech_scale, oracle_cech_scale_from_window, oracle_cech_scale_triplet_dplane,
    oracle_feasible, OracleResult,
};
pub use rho::{bisection_root, rho, signed_distance, RhoValue, DEFAULT_TOLERANCE};
pub use solver::{
    cech_scale, cech_scale_naive, cech_scale_naive_with, cech_scale_triplet,
    cech_scale_triplet_with, cech_scale_with, ScaleResult, SolveStatus, SolverOptions,
};
