//! Triangles of d-dimensional disk systems via congruent planar placement.
//!
//! Three balls in `R^d` share a point exactly when their traces on the
//! affine plane of the centers do, and that plane can be laid out in `R²`
//! without changing any center distance or radius. The planar solvers then
//! answer the three-ball question in any dimension, which is all the
//! 2-skeleton needs.

use crate::complex::{Simplex, WeightedComplex};
use crate::error::Error;
use crate::geometry::{pair_scale_raw, Disk, DiskSystem, Scale};
use crate::solver::cech_scale_triplet;
use rayon::prelude::*;
use std::collections::BTreeMap;

/// A congruent planar copy of three d-dimensional disks.
#[derive(Debug, Clone, PartialEq)]
pub struct AffineTriple {
    /// The planar system: first center at the origin, second on the positive
    /// x-axis, third in the closed upper half-plane. Radii unchanged.
    pub planar_system: DiskSystem,
    /// Indices of the source disks in the originating system; (0, 1, 2)
    /// when the triple was projected directly.
    pub source_indices: (usize, usize, usize),
}

/// Lays three d-dimensional disks out in the plane, preserving all pairwise
/// center distances and every radius.
///
/// The first center goes to the origin and the second to (‖c₂−c₁‖, 0); the
/// third lands at angle θ with cos θ clamped into [−1, 1] so near-collinear
/// centers cannot produce a negative value under the square root, and
/// sin θ ≥ 0 picks the upper half-plane. A center coinciding with the first
/// maps to the origin as well.
pub fn affine_project(a: &Disk, b: &Disk, c: &Disk) -> Result<AffineTriple, Error> {
    let dim = a.dimension();
    for d in [b, c] {
        if d.dimension() != dim {
            return Err(Error::DimensionMismatch {
                left: dim,
                right: d.dimension(),
            });
        }
    }
    if dim < 2 {
        return Err(Error::UnsupportedDimension {
            required: 2,
            found: dim,
        });
    }
    let ab: Vec<f64> = b
        .center()
        .iter()
        .zip(a.center())
        .map(|(x, y)| x - y)
        .collect();
    let ac: Vec<f64> = c
        .center()
        .iter()
        .zip(a.center())
        .map(|(x, y)| x - y)
        .collect();
    let lab = ab.iter().map(|v| v * v).sum::<f64>().sqrt();
    let lac = ac.iter().map(|v| v * v).sum::<f64>().sqrt();
    let (tx, ty) = if lac == 0.0 {
        (0.0, 0.0) // coincides with the first center, so with the origin
    } else if lab == 0.0 {
        (lac, 0.0) // the angle is arbitrary when the first two centers coincide
    } else {
        let cos = (ab.iter().zip(&ac).map(|(x, y)| x * y).sum::<f64>() / (lab * lac))
            .clamp(-1.0, 1.0);
        let sin = (1.0 - cos * cos).max(0.0).sqrt();
        (lac * cos, lac * sin)
    };
    let planar_system = DiskSystem::new(vec![
        Disk::planar(0.0, 0.0, a.radius())?,
        Disk::planar(lab, 0.0, b.radius())?,
        Disk::planar(tx, ty, c.radius())?,
    ])?;
    Ok(AffineTriple {
        planar_system,
        source_indices: (0, 1, 2),
    })
}

/// Builds the 2-skeleton of the weighted complex for disks in any `R^d`.
///
/// Edges get their pair scale, which needs no projection; each triangle's
/// weight is the common-point scale of its congruent planar copy. For d = 2
/// the planar copy is skipped and the solver runs on the disks themselves,
/// so the result is bit-for-bit the ≤ 2-dimensional part of
/// [`crate::complex::build_complex`].
pub fn two_skeleton(system: &DiskSystem, lambda: Scale) -> Result<WeightedComplex, Error> {
    if system.dimension() < 2 {
        return Err(Error::UnsupportedDimension {
            required: 2,
            found: system.dimension(),
        });
    }
    assert!(
        lambda.is_finite() && lambda >= 0.0,
        "complex scale must be finite and nonnegative, got {lambda}"
    );
    let m = system.len();
    let disks = system.disks();
    let mut entries: BTreeMap<Simplex, f64> = BTreeMap::new();
    for i in 0..m {
        entries.insert(Simplex::from_sorted(vec![i]), 0.0);
    }
    let mut edges: Vec<[usize; 2]> = Vec::new();
    for i in 0..m {
        for j in (i + 1)..m {
            let s = pair_scale_raw(&disks[i], &disks[j]);
            if s <= lambda {
                entries.insert(Simplex::from_sorted(vec![i, j]), s);
                edges.push([i, j]);
            }
        }
    }
    // A triangle {k, i, j} with k < i < j arises from the edge {i, j} and a
    // shared λ-close lower disk k — each triangle exactly once.
    let mut candidates: Vec<[usize; 3]> = Vec::new();
    for &[i, j] in &edges {
        for k in 0..i {
            if pair_scale_raw(&disks[k], &disks[i]) <= lambda
                && pair_scale_raw(&disks[k], &disks[j]) <= lambda
            {
                candidates.push([k, i, j]);
            }
        }
    }
    let weights: Vec<Result<f64, Error>> = candidates
        .par_iter()
        .map(|&[k, i, j]| {
            let solved = if system.dimension() == 2 {
                cech_scale_triplet(&system.subsystem(&[k, i, j])?)?
            } else {
                let mut triple = affine_project(&disks[k], &disks[i], &disks[j])?;
                triple.source_indices = (k, i, j);
                cech_scale_triplet(&triple.planar_system)?
            };
            Ok(solved.cech_scale)
        })
        .collect();
    for (verts, weight) in candidates.into_iter().zip(weights) {
        let weight = weight?;
        if weight <= lambda {
            entries.insert(Simplex::from_sorted(verts.to_vec()), weight);
        }
    }
    Ok(WeightedComplex::from_entries(entries, 2))
}
