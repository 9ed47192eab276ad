//! Čech-scale solvers.
//!
//! Three routes to the smallest rescaling factor with a common point:
//!
//! * [`cech_scale_triplet`] — three disks, one bracketed root of ρ.
//! * [`cech_scale_naive`] — bisection of ρ over the whole system, plus the
//!   witness-multiplicity replay that guards against landing on a root that
//!   is not the smallest one.
//! * [`cech_scale`] — the main solver: by Helly's theorem a planar family of
//!   convex sets has a common point exactly when every triple does, so the
//!   system scale is the maximum of the triplet scales. Triplets whose upper
//!   bound cannot beat the incumbent are pruned.
//!
//! All three return the scale, the witness point of the rescaled system, and
//! diagnostics.

use crate::error::Error;
use crate::geometry::{
    d_point, dist, ensure_planar_system, pair_scale_raw, rips_scale, vietoris_rips_bound,
    Disk, DiskSystem, Point2, Scale,
};
use crate::rho::{bisection_root, rho, DEFAULT_TOLERANCE};
use rayon::prelude::*;
use std::sync::atomic::{AtomicU64, Ordering};

/// How the returned scale was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveStatus {
    /// The system already has a common point at its Vietoris-Rips scale; no
    /// root-finding ran.
    RipsEqualsCech,
    /// The scale is a root of ρ strictly above the Vietoris-Rips scale.
    RootFound,
}

/// A computed Čech scale with its witness point and solver diagnostics.
#[derive(Debug, Clone, PartialEq)]
pub struct ScaleResult {
    /// The smallest factor at which the rescaled disks share a point.
    pub cech_scale: Scale,
    /// The common point of the system rescaled to `cech_scale` (unique at
    /// exactly that scale).
    pub witness: Point2,
    /// The smallest factor at which the disks pairwise intersect.
    pub rips_scale: Scale,
    /// Bracketed root resolutions performed. Zero whenever the Rips scale is
    /// already feasible. With pruning enabled this count depends on thread
    /// scheduling; the scale and witness never do.
    pub bisection_calls: usize,
    pub status: SolveStatus,
}

/// Solver knobs. `Default` gives the documented behavior.
#[derive(Debug, Clone, Copy)]
pub struct SolverOptions {
    /// Bisection interval width at which root-finding stops.
    pub tolerance: f64,
    /// Skip triplets whose sandwich upper bound cannot beat the incumbent
    /// scale. Never changes the result, only the work done.
    pub prune: bool,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            tolerance: DEFAULT_TOLERANCE,
            prune: true,
        }
    }
}

/// Two witness candidates closer than this are the same point, up to
/// bisection noise.
const WITNESS_CLUSTER_TOL: f64 = 1e-7;
/// Relative membership slack for "lies in the rescaled disk".
const MEMBERSHIP_TOL: f64 = 1e-9;
/// Interior grid densities tried when hunting for a strictly positive ρ
/// value below a suspect root: start, then double up to the cap.
const SCAN_INITIAL_DENSITY: usize = 32;
const SCAN_DENSITY_CAP: usize = 1 << 14;
/// Hard stop for the multiplicity replay; each pass strictly shrinks the
/// bracket, so this is unreachable in practice.
const MULTIPLICITY_ROUNDS: usize = 32;

/// Absolute half-width of the zero dead-band for endpoint evaluations of ρ.
///
/// ρ values are differences of quantities of size ~(λ·r_max + center spread),
/// so a handful of ulps at that magnitude must count as zero: at a saturated
/// bracket the mathematically-nonnegative endpoint can evaluate a few ulps
/// negative, and treating that as a genuine sign would either reject a valid
/// bracket or bisect pure rounding noise.
fn feasibility_band(system: &DiskSystem, at_scale: f64) -> f64 {
    let mut max_r = 0.0f64;
    let mut min_x = f64::INFINITY;
    let mut max_x = f64::NEG_INFINITY;
    let mut min_y = f64::INFINITY;
    let mut max_y = f64::NEG_INFINITY;
    for d in system.disks() {
        max_r = max_r.max(d.radius());
        min_x = min_x.min(d.center()[0]);
        max_x = max_x.max(d.center()[0]);
        min_y = min_y.min(d.center()[1]);
        max_y = max_y.max(d.center()[1]);
    }
    let spread = ((max_x - min_x).powi(2) + (max_y - min_y).powi(2)).sqrt();
    1e-12 * (1.0 + at_scale * max_r + spread)
}

fn contains_point(disk: &Disk, p: &Point2, lambda: Scale) -> bool {
    let r = lambda * disk.radius();
    dist(p, disk.center()) <= r + MEMBERSHIP_TOL * (1.0 + r)
}

fn member_of_all(system: &DiskSystem, p: &Point2, lambda: Scale) -> bool {
    system.disks().iter().all(|d| contains_point(d, p, lambda))
}

/// The directed boundary point of ρ's maximizing pair at `lambda` — the
/// witness once ρ(λ) ≈ 0.
fn witness_at(system: &DiskSystem, lambda: Scale) -> Result<Point2, Error> {
    let r = rho(system, lambda)?;
    d_point(
        system.disk(r.argmax_pair.0),
        system.disk(r.argmax_pair.1),
        lambda,
    )
}

struct BracketOutcome {
    rips: Scale,
    scale: Scale,
    calls: usize,
    status: SolveStatus,
}

/// Shared core: feasibility check at the Rips scale, then one bracketed root
/// resolution on [ν, √(4/3)·ν] if needed.
fn solve_bracket(system: &DiskSystem, opts: &SolverOptions) -> Result<BracketOutcome, Error> {
    let rips = rips_scale(system);
    let hi = vietoris_rips_bound(2) * rips;
    let band = feasibility_band(system, hi);
    let at_rips = rho(system, rips)?.value;
    if at_rips >= -band {
        return Ok(BracketOutcome {
            rips,
            scale: rips,
            calls: 0,
            status: SolveStatus::RipsEqualsCech,
        });
    }
    let at_hi = rho(system, hi)?.value;
    let scale = if at_hi >= 0.0 {
        bisection_root(
            |lam| rho(system, lam).expect("scale within bracket").value,
            rips,
            hi,
            opts.tolerance,
        )?
    } else if at_hi >= -band {
        // The root sits exactly on the sandwich bound (attained by
        // pairwise-tangent equal disks); the endpoint evaluated a few ulps
        // negative. The bound itself is the root.
        hi
    } else {
        return Err(Error::NoRootBracketed { lo: rips, hi });
    };
    Ok(BracketOutcome {
        rips,
        scale,
        calls: 1,
        status: SolveStatus::RootFound,
    })
}

fn small_system(system: &DiskSystem) -> Result<Option<ScaleResult>, Error> {
    match system.len() {
        1 => {
            let c = system.disk(0).center();
            Ok(Some(ScaleResult {
                cech_scale: 0.0,
                witness: [c[0], c[1]],
                rips_scale: 0.0,
                bisection_calls: 0,
                status: SolveStatus::RipsEqualsCech,
            }))
        }
        2 => {
            let scale = pair_scale_raw(system.disk(0), system.disk(1));
            let witness = d_point(system.disk(0), system.disk(1), scale)?;
            Ok(Some(ScaleResult {
                cech_scale: scale,
                witness,
                rips_scale: scale,
                bisection_calls: 0,
                status: SolveStatus::RipsEqualsCech,
            }))
        }
        _ => Ok(None),
    }
}

/// Čech scale of exactly three planar disks, with default options.
pub fn cech_scale_triplet(system: &DiskSystem) -> Result<ScaleResult, Error> {
    cech_scale_triplet_with(system, &SolverOptions::default())
}

/// Čech scale of exactly three planar disks.
///
/// If ρ is already nonnegative at the Vietoris-Rips scale ν the answer is ν;
/// otherwise ρ has a unique root in [ν, √(4/3)·ν] and bisection finds it.
pub fn cech_scale_triplet_with(
    system: &DiskSystem,
    opts: &SolverOptions,
) -> Result<ScaleResult, Error> {
    ensure_planar_system(system)?;
    if system.len() != 3 {
        return Err(Error::NotATriplet(system.len()));
    }
    let out = solve_bracket(system, opts)?;
    let witness = witness_at(system, out.scale)?;
    Ok(ScaleResult {
        cech_scale: out.scale,
        witness,
        rips_scale: out.rips,
        bisection_calls: out.calls,
        status: out.status,
    })
}

/// All directed boundary points at `lambda` that lie in every rescaled disk.
fn witness_points(system: &DiskSystem, lambda: Scale) -> Result<Vec<Point2>, Error> {
    let m = system.len();
    let mut points = Vec::new();
    for i in 0..m {
        for j in 0..m {
            if i == j {
                continue;
            }
            let p = d_point(system.disk(i), system.disk(j), lambda)?;
            if member_of_all(system, &p, lambda) {
                points.push(p);
            }
        }
    }
    Ok(points)
}

/// Number of tolerance-clusters among candidate witness points.
fn cluster_count(points: &[Point2], tol: f64) -> usize {
    let mut reps: Vec<Point2> = Vec::new();
    for p in points {
        if !reps.iter().any(|r| dist(r, p) <= tol) {
            reps.push(*p);
        }
    }
    reps.len()
}

/// A scale strictly inside (lo, hi) where ρ is strictly positive, found on
/// uniform interior grids of doubling density. `None` when ρ ≤ 0 everywhere
/// sampled up to the density cap — then `hi` is already the smallest root.
fn scan_positive(
    system: &DiskSystem,
    lo: Scale,
    hi: Scale,
) -> Result<Option<Scale>, Error> {
    let mut density = SCAN_INITIAL_DENSITY;
    loop {
        for t in 1..=density {
            let x = lo + (hi - lo) * (t as f64) / (density as f64 + 1.0);
            if rho(system, x)?.value > 0.0 {
                return Ok(Some(x));
            }
        }
        if density >= SCAN_DENSITY_CAP {
            return Ok(None);
        }
        density *= 2;
    }
}

/// Čech scale by global bisection, with default options.
pub fn cech_scale_naive(system: &DiskSystem) -> Result<ScaleResult, Error> {
    cech_scale_naive_with(system, &SolverOptions::default())
}

/// Čech scale by bisection of ρ over the whole system.
///
/// ρ can have roots above the smallest one (internal tangencies freeze the
/// boundary points, flattening ρ to zero on whole intervals), so after each
/// root the candidate witness set is inspected: more than one cluster means
/// the wrong root, and the bracket is replayed below a strictly positive
/// interior value of ρ.
pub fn cech_scale_naive_with(
    system: &DiskSystem,
    opts: &SolverOptions,
) -> Result<ScaleResult, Error> {
    ensure_planar_system(system)?;
    if let Some(result) = small_system(system)? {
        return Ok(result);
    }
    let out = solve_bracket(system, opts)?;
    let rips = out.rips;
    let mut scale = out.scale;
    let mut calls = out.calls;
    if out.status == SolveStatus::RootFound {
        for _ in 0..MULTIPLICITY_ROUNDS {
            let candidates = witness_points(system, scale)?;
            if cluster_count(&candidates, WITNESS_CLUSTER_TOL) <= 1 {
                break;
            }
            // Multiple distinct common points: the true scale is smaller.
            // Re-bracket below some strictly positive interior value.
            let Some(positive) = scan_positive(system, rips, scale)? else {
                break; // ρ ≤ 0 below: this root is already the smallest
            };
            let replay = bisection_root(
                |lam| rho(system, lam).expect("scale within bracket").value,
                rips,
                positive,
                opts.tolerance,
            )?;
            calls += 1;
            if replay >= scale - opts.tolerance {
                break;
            }
            scale = replay;
        }
    }
    let witness = witness_at(system, scale)?;
    Ok(ScaleResult {
        cech_scale: scale,
        witness,
        rips_scale: rips,
        bisection_calls: calls,
        status: out.status,
    })
}

/// Čech scale via the triplet decomposition, with default options.
pub fn cech_scale(system: &DiskSystem) -> Result<ScaleResult, Error> {
    cech_scale_with(system, &SolverOptions::default())
}

struct TripletBest {
    scale: Scale,
    witness: Point2,
}

/// Čech scale via the triplet decomposition.
///
/// For planar systems the scale is the maximum of the triplet scales, so the
/// solver sweeps triplets in index order, pruning any whose sandwich bound
/// √(4/3)·ν already falls short of the incumbent. The sweep runs on the
/// thread pool; rows merge in index order, so the result is deterministic.
pub fn cech_scale_with(
    system: &DiskSystem,
    opts: &SolverOptions,
) -> Result<ScaleResult, Error> {
    ensure_planar_system(system)?;
    if let Some(result) = small_system(system)? {
        return Ok(result);
    }
    let m = system.len();
    let rips = rips_scale(system);
    let hi = vietoris_rips_bound(2) * rips;
    let band = feasibility_band(system, hi);
    let at_rips = rho(system, rips)?;
    if at_rips.value >= -band {
        let witness = d_point(
            system.disk(at_rips.argmax_pair.0),
            system.disk(at_rips.argmax_pair.1),
            rips,
        )?;
        return Ok(ScaleResult {
            cech_scale: rips,
            witness,
            rips_scale: rips,
            bisection_calls: 0,
            status: SolveStatus::RipsEqualsCech,
        });
    }

    // Pair scales once; triplet Rips scales are then three lookups.
    let pair: Vec<f64> = {
        let disks = system.disks();
        let mut table = vec![0.0; m * m];
        for i in 0..m {
            for j in (i + 1)..m {
                let s = pair_scale_raw(&disks[i], &disks[j]);
                table[i * m + j] = s;
                table[j * m + i] = s;
            }
        }
        table
    };

    let bound = vietoris_rips_bound(2);
    // Incumbent shared across rows for pruning. Scales are nonnegative, so
    // the IEEE bit patterns order like the values and an integer max works.
    let best_bits = AtomicU64::new(rips.to_bits());
    let rows: Vec<Result<(Option<TripletBest>, usize), Error>> = (0..m)
        .into_par_iter()
        .map(|i| {
            let mut local: Option<TripletBest> = None;
            let mut calls = 0;
            for j in (i + 1)..m {
                for k in (j + 1)..m {
                    let nu = pair[i * m + j]
                        .max(pair[i * m + k])
                        .max(pair[j * m + k]);
                    if opts.prune {
                        // Racy read: the incumbent only grows, and ties are
                        // never pruned (strict <), so a pruned triplet can
                        // never carry the final maximum.
                        let incumbent = f64::from_bits(best_bits.load(Ordering::Relaxed));
                        let floor = local
                            .as_ref()
                            .map_or(incumbent, |l| incumbent.max(l.scale));
                        if bound * nu < floor {
                            continue;
                        }
                    }
                    let sub = system.subsystem(&[i, j, k])?;
                    let solved = cech_scale_triplet_with(&sub, opts)?;
                    calls += solved.bisection_calls;
                    if local
                        .as_ref()
                        .map_or(true, |l| solved.cech_scale > l.scale)
                    {
                        best_bits.fetch_max(solved.cech_scale.to_bits(), Ordering::Relaxed);
                        local = Some(TripletBest {
                            scale: solved.cech_scale,
                            witness: solved.witness,
                        });
                    }
                }
            }
            Ok((local, calls))
        })
        .collect();

    let mut best: Option<TripletBest> = None;
    let mut calls = 0;
    for row in rows {
        let (local, row_calls) = row?;
        calls += row_calls;
        if let Some(c) = local {
            if best.as_ref().map_or(true, |b| c.scale > b.scale) {
                best = Some(c);
            }
        }
    }
    // The triplet containing the maximal pair has ν equal to the system's
    // Rips scale and is never pruned, so a candidate always exists.
    let best = best.expect("some triplet is always evaluated");
    let mut witness = best.witness;
    if !member_of_all(system, &witness, best.scale) {
        // The maximizing triplet's witness should be the global common
        // point; fall back to the maximizing-pair extraction if rounding
        // ever says otherwise.
        witness = witness_at(system, best.scale)?;
    }
    let status = if best.scale > rips {
        SolveStatus::RootFound
    } else {
        SolveStatus::RipsEqualsCech
    };
    Ok(ScaleResult {
        cech_scale: best.scale,
        witness,
        rips_scale: rips,
        bisection_calls: calls,
        status,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::oracle_cech_scale;

    fn equilateral() -> DiskSystem {
        DiskSystem::from_planar(&[
            (0.0, 0.0, 1.0),
            (2.0, 0.0, 1.0),
            (1.0, 3f64.sqrt(), 1.0),
        ])
        .unwrap()
    }

    /// Centers (-3,4), (1,3), (2,-1) with radii 4, 3, 2: the far pair is
    /// tangent at its own pair scale and that tangency point lies inside the
    /// middle disk, so the Rips and Čech scales coincide.
    fn heterogeneous_triple() -> DiskSystem {
        DiskSystem::from_planar(&[(-3.0, 4.0, 4.0), (1.0, 3.0, 3.0), (2.0, -1.0, 2.0)]).unwrap()
    }

    #[test]
    fn triplet_equilateral_saturates_the_sandwich_bound() {
        let r = cech_scale_triplet(&equilateral()).unwrap();
        let mu = 2.0 / 3f64.sqrt();
        assert!((r.cech_scale - mu).abs() < 1e-9, "got {}", r.cech_scale);
        assert_eq!(r.status, SolveStatus::RootFound);
        assert!(r.bisection_calls >= 1);
        assert!((r.cech_scale - vietoris_rips_bound(2) * r.rips_scale).abs() < 1e-9);
        assert!((r.witness[0] - 1.0).abs() < 1e-6);
        assert!((r.witness[1] - 1.0 / 3f64.sqrt()).abs() < 1e-6);
    }

    #[test]
    fn triplet_collinear_centers_need_no_root_finding() {
        let m =
            DiskSystem::from_planar(&[(0.0, 0.0, 1.0), (1.0, 0.0, 1.0), (2.0, 0.0, 1.0)])
                .unwrap();
        let r = cech_scale_triplet(&m).unwrap();
        assert_eq!(r.status, SolveStatus::RipsEqualsCech);
        assert_eq!(r.bisection_calls, 0);
        assert_eq!(r.cech_scale, 1.0); // far pair tangent at (1, 0)
        assert!((r.witness[0] - 1.0).abs() < 1e-12 && r.witness[1].abs() < 1e-12);
    }

    #[test]
    fn triplet_heterogeneous_tangency_dominates() {
        let m = heterogeneous_triple();
        let r = cech_scale_triplet(&m).unwrap();
        let expected = 50f64.sqrt() / 6.0;
        assert!((r.cech_scale - expected).abs() < 1e-12);
        assert_eq!(r.status, SolveStatus::RipsEqualsCech);
        assert_eq!(r.bisection_calls, 0);
        // Tangency point of the far pair.
        assert!((r.witness[0] - 1.0 / 3.0).abs() < 1e-6);
        assert!((r.witness[1] - 2.0 / 3.0).abs() < 1e-6);
        let o = oracle_cech_scale(&m).unwrap();
        assert!((o.scale - r.cech_scale).abs() < 1e-6);
    }

    #[test]
    fn triplet_rejects_other_cardinalities() {
        let m = DiskSystem::from_planar(&[(0.0, 0.0, 1.0), (1.0, 0.0, 1.0)]).unwrap();
        assert!(matches!(
            cech_scale_triplet(&m),
            Err(Error::NotATriplet(2))
        ));
    }

    #[test]
    fn naive_single_disk() {
        let m = DiskSystem::from_planar(&[(4.0, -1.0, 2.5)]).unwrap();
        let r = cech_scale_naive(&m).unwrap();
        assert_eq!(r.cech_scale, 0.0);
        assert_eq!(r.witness, [4.0, -1.0]);
    }

    #[test]
    fn naive_two_tangent_disks() {
        let m = DiskSystem::from_planar(&[(0.0, 0.0, 1.0), (2.0, 0.0, 1.0)]).unwrap();
        let r = cech_scale_naive(&m).unwrap();
        assert_eq!(r.cech_scale, 1.0);
        assert!((r.witness[0] - 1.0).abs() < 1e-12 && r.witness[1].abs() < 1e-12);
        assert_eq!(r.bisection_calls, 0);
    }

    #[test]
    fn naive_matches_triplet_on_three_disks() {
        for m in [equilateral(), heterogeneous_triple()] {
            let a = cech_scale_naive(&m).unwrap();
            let b = cech_scale_triplet(&m).unwrap();
            assert!((a.cech_scale - b.cech_scale).abs() < 1e-9);
        }
    }

    /// Five heterogeneous disks used across the complex tests.
    fn five_disks() -> DiskSystem {
        DiskSystem::from_planar(&[
            (2.99, 0.56, 1.5),
            (0.99, 0.11, 1.0),
            (1.69, 1.30, 0.6),
            (1.07, 1.93, 0.4),
            (1.96, 2.64, 0.8),
        ])
        .unwrap()
    }

    #[test]
    fn main_solver_agrees_with_naive_and_oracle() {
        let m = five_disks();
        let fast = cech_scale(&m).unwrap();
        let slow = cech_scale_naive(&m).unwrap();
        assert!(
            (fast.cech_scale - slow.cech_scale).abs() < 1e-9,
            "triplet {} vs naive {}",
            fast.cech_scale,
            slow.cech_scale
        );
        let o = oracle_cech_scale(&m).unwrap();
        assert!((fast.cech_scale - o.scale).abs() < 1e-6);
        assert!(member_of_all(&m, &fast.witness, fast.cech_scale));
        assert!(fast.rips_scale <= fast.cech_scale);
        assert!(fast.cech_scale <= vietoris_rips_bound(2) * fast.rips_scale + 1e-9);
    }

    #[test]
    fn covering_disk_does_not_move_the_scale() {
        // The tangent triple decides the scale; a tiny fourth disk whose
        // rescaled copy covers the witness changes nothing.
        let m = DiskSystem::from_planar(&[
            (0.0, 0.0, 1.0),
            (2.0, 0.0, 1.0),
            (1.0, 3f64.sqrt(), 1.0),
            (1.0, 1.0 / 3f64.sqrt(), 0.1),
        ])
        .unwrap();
        let r = cech_scale(&m).unwrap();
        let mu = 2.0 / 3f64.sqrt();
        assert!((r.cech_scale - mu).abs() < 1e-9, "got {}", r.cech_scale);
        assert!((r.witness[0] - 1.0).abs() < 1e-6);
        assert!((r.witness[1] - 1.0 / 3f64.sqrt()).abs() < 1e-6);
        assert_eq!(r.status, SolveStatus::RootFound);
        let o = oracle_cech_scale(&m).unwrap();
        assert!((r.cech_scale - o.scale).abs() < 1e-6);
    }

    #[test]
    fn pruning_does_not_change_results() {
        let opts_on = SolverOptions::default();
        let opts_off = SolverOptions {
            prune: false,
            ..SolverOptions::default()
        };
        for m in [
            five_disks(),
            equilateral(),
            DiskSystem::from_planar(&[
                (0.0, 0.0, 1.0),
                (2.0, 0.0, 1.0),
                (1.0, 3f64.sqrt(), 1.0),
                (1.0, 1.0 / 3f64.sqrt(), 0.1),
            ])
            .unwrap(),
        ] {
            let a = cech_scale_with(&m, &opts_on).unwrap();
            let b = cech_scale_with(&m, &opts_off).unwrap();
            assert_eq!(a.cech_scale, b.cech_scale);
            assert_eq!(a.witness, b.witness);
        }
    }

    /// Collinear triple with a duplicated disk: ρ vanishes identically on a
    /// whole interval of scales, whose left endpoint is the true answer.
    fn flat_rho_triple() -> (DiskSystem, f64) {
        let nu = 0.8947;
        let rd = 1.0 / nu - 1.0;
        let m = DiskSystem::from_planar(&[(0.0, 0.0, 1.0), (1.0, 0.0, rd), (1.0, 0.0, rd)])
            .unwrap();
        (m, nu)
    }

    #[test]
    fn flat_zero_interval_returns_its_left_end() {
        let (m, nu) = flat_rho_triple();
        assert!((rips_scale(&m) - nu).abs() < 1e-12);
        // ρ is zero from ν up to 1 (the duplicated pair's margin λ·1 − 1
        // crosses zero there) — both ends are roots.
        assert!(rho(&m, nu).unwrap().value.abs() < 1e-12);
        assert!(rho(&m, 1.0).unwrap().value.abs() < 1e-12);
        assert!(rho(&m, 1.2).unwrap().value > 0.0);
        let naive = cech_scale_naive(&m).unwrap();
        assert!(
            (naive.cech_scale - nu).abs() < 1e-9,
            "naive must take the smaller root, got {}",
            naive.cech_scale
        );
        let fast = cech_scale(&m).unwrap();
        assert!((fast.cech_scale - nu).abs() < 1e-9);
        let o = oracle_cech_scale(&m).unwrap();
        assert!((o.scale - nu).abs() < 1e-6);
    }

    #[test]
    fn witness_point_candidates_cluster_as_expected() {
        let m = equilateral();
        // Above the meeting scale the feasible region has three corner
        // points, one per pair, each appearing once from its ordered pair.
        let wide = witness_points(&m, 1.2).unwrap();
        assert_eq!(wide.len(), 3);
        assert_eq!(cluster_count(&wide, WITNESS_CLUSTER_TOL), 3);
        // At the meeting scale the corners collapse onto the circumcenter.
        let tight = witness_points(&m, 2.0 / 3f64.sqrt() + 1e-13).unwrap();
        assert!(!tight.is_empty());
        assert_eq!(cluster_count(&tight, WITNESS_CLUSTER_TOL), 1);
    }

    #[test]
    fn positive_scan_finds_and_refuses_correctly() {
        let m = equilateral();
        // ρ turns positive above 2/√3 ≈ 1.1547, so the interval (1, 1.3)
        // contains strictly positive values…
        let hit = scan_positive(&m, 1.0, 1.3).unwrap();
        let hit = hit.expect("interval contains positive values");
        assert!(rho(&m, hit).unwrap().value > 0.0);
        // …while (1, 1.05) does not.
        assert!(scan_positive(&m, 1.0, 1.05).unwrap().is_none());
    }

    #[test]
    fn zero_bisection_calls_when_rips_is_feasible() {
        let m = heterogeneous_triple();
        for r in [cech_scale(&m).unwrap(), cech_scale_naive(&m).unwrap()] {
            assert_eq!(r.bisection_calls, 0);
            assert_eq!(r.status, SolveStatus::RipsEqualsCech);
        }
    }
}
