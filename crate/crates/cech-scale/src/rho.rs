//! The feasibility functional ρ and its root bracketing.
//!
//! For a planar system of at least three disks, ρ(M, λ) measures how far the
//! rescaled system is from having a common point: it is nonnegative exactly
//! when the intersection of all rescaled disks is nonempty. Its construction
//! runs over ordered pairs (i, j): the directed boundary point of the pair is
//! tested against every other disk, the worst other disk is recorded, and the
//! best ordered pair wins.

use crate::error::Error;
use crate::geometry::{d_point, ensure_planar_system, rips_scale, DiskSystem, Scale};
use rayon::prelude::*;

/// Signed distance of the directed boundary point of pair (i, j) from the
/// boundary of disk k, positive inside: λ·r_k − ‖d_ij(λ) − c_k‖.
pub fn signed_distance(
    system: &DiskSystem,
    i: usize,
    j: usize,
    k: usize,
    lambda: Scale,
) -> Result<f64, Error> {
    ensure_planar_system(system)?;
    let len = system.len();
    for &idx in &[i, j, k] {
        if idx >= len {
            return Err(Error::IndexOutOfBounds { index: idx, len });
        }
    }
    if i == j || i == k || j == k {
        return Err(Error::IndicesNotDistinct);
    }
    let p = d_point(system.disk(i), system.disk(j), lambda)?;
    let other = system.disk(k);
    let gap = ((p[0] - other.center()[0]).powi(2) + (p[1] - other.center()[1]).powi(2)).sqrt();
    Ok(lambda * other.radius() - gap)
}

/// The value of ρ together with the pair and disk that realize it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RhoValue {
    /// max over ordered pairs of the min over remaining disks.
    pub value: f64,
    /// The ordered pair (i, j) attaining the outer max (lexicographically
    /// first among ties).
    pub argmax_pair: (usize, usize),
    /// The disk index attaining the inner min for that pair (smallest among
    /// ties).
    pub min_index: usize,
}

/// Row count from which the outer loop of ρ moves onto the thread pool.
const PARALLEL_MIN_DISKS: usize = 64;

/// Evaluates ρ(M, λ) for a planar system of at least three disks.
///
/// Defined only from the scale at which all disks pairwise intersect; below
/// it some directed boundary point does not exist.
pub fn rho(system: &DiskSystem, lambda: Scale) -> Result<RhoValue, Error> {
    ensure_planar_system(system)?;
    let m = system.len();
    if m < 3 {
        return Err(Error::TooFewDisks(m));
    }
    let rips = rips_scale(system);
    if lambda < rips {
        return Err(Error::ScaleBelowRips {
            scale: lambda,
            rips,
        });
    }
    let best = if m >= PARALLEL_MIN_DISKS {
        // Rows are independent; the merge below runs in row order so ties
        // resolve exactly as in the sequential loop.
        let rows: Vec<Result<Option<RhoValue>, Error>> = (0..m)
            .into_par_iter()
            .map(|i| {
                let mut local = None;
                rho_row(system, lambda, i, &mut local)?;
                Ok(local)
            })
            .collect();
        let mut best: Option<RhoValue> = None;
        for row in rows {
            if let Some(c) = row? {
                if best.as_ref().map_or(true, |b| c.value > b.value) {
                    best = Some(c);
                }
            }
        }
        best
    } else {
        let mut best: Option<RhoValue> = None;
        for i in 0..m {
            rho_row(system, lambda, i, &mut best)?;
        }
        best
    };
    Ok(best.expect("at least one ordered pair exists"))
}

/// Scans the ordered pairs (i, ·) and folds them into `best`.
///
/// The inner minimum is abandoned as soon as it drops below the incumbent:
/// such a pair can no longer win the outer maximum, and ties are immune
/// because only a strict drop abandons and only a strict rise replaces.
fn rho_row(
    system: &DiskSystem,
    lambda: Scale,
    i: usize,
    best: &mut Option<RhoValue>,
) -> Result<(), Error> {
    let disks = system.disks();
    let m = disks.len();
    let first = &disks[i];
    for j in 0..m {
        if j == i {
            continue;
        }
        let p = d_point(first, &disks[j], lambda)?;
        let floor = best.as_ref().map_or(f64::NEG_INFINITY, |b| b.value);
        let mut worst = f64::INFINITY;
        let mut worst_k = usize::MAX;
        for (k, other) in disks.iter().enumerate() {
            if k == i || k == j {
                continue;
            }
            let dx = p[0] - other.center()[0];
            let dy = p[1] - other.center()[1];
            let margin = lambda * other.radius() - (dx * dx + dy * dy).sqrt();
            if margin < worst {
                worst = margin;
                worst_k = k;
                if worst < floor {
                    break;
                }
            }
        }
        if worst > floor {
            *best = Some(RhoValue {
                value: worst,
                argmax_pair: (i, j),
                min_index: worst_k,
            });
        }
    }
    Ok(())
}

/// Default interval width at which bisection stops.
pub const DEFAULT_TOLERANCE: f64 = 1e-12;

/// Bisection for the smallest root of a monotone-feasibility objective.
///
/// Requires f(lo) ≤ 0 ≤ f(hi); maintains the invariant f(a) < 0 ≤ f(b) and
/// returns the midpoint of the final bracket, which is then within `tol` of
/// a sign change. When f(lo) is already ≥ 0 the bracket degenerates and `lo`
/// itself is returned.
pub fn bisection_root<F>(mut f: F, lo: f64, hi: f64, tol: f64) -> Result<f64, Error>
where
    F: FnMut(f64) -> f64,
{
    if !(lo < hi) {
        return Err(Error::InvalidBracket { lo, hi });
    }
    let flo = f(lo);
    if flo >= 0.0 {
        return Ok(lo);
    }
    let fhi = f(hi);
    if fhi < 0.0 {
        return Err(Error::NoRootBracketed { lo, hi });
    }
    let mut a = lo;
    let mut b = hi;
    while b - a > tol {
        let mid = 0.5 * (a + b);
        if mid <= a || mid >= b {
            break; // interval no longer splittable in f64
        }
        if f(mid) >= 0.0 {
            b = mid;
        } else {
            a = mid;
        }
    }
    Ok(0.5 * (a + b))
}
