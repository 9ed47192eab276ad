//! Helpers shared by the integration suites: seeded random instances,
//! brute-force reference constructions, and random isometries.
#![allow(dead_code)]

use cech_scale::{pair_scale, Disk, DiskSystem, Point2};
use rand::Rng;

/// Random planar system with centers in [0, 10]² and radii in [0.2, 3],
/// the instance family used throughout the randomized suites.
pub fn random_system(rng: &mut impl Rng, m: usize) -> DiskSystem {
    cech_scale::bench::random_disk_system(rng, m, 2)
}

pub fn random_points(rng: &mut impl Rng, n: usize) -> Vec<Point2> {
    (0..n)
        .map(|_| [rng.gen_range(0.0..10.0), rng.gen_range(0.0..10.0)])
        .collect()
}

fn dist(a: Point2, b: Point2) -> f64 {
    ((a[0] - b[0]).powi(2) + (a[1] - b[1]).powi(2)).sqrt()
}

/// Circumcircle of three points; None when they are (numerically) collinear.
pub fn circumcircle(a: Point2, b: Point2, c: Point2) -> Option<(Point2, f64)> {
    let d = 2.0 * (a[0] * (b[1] - c[1]) + b[0] * (c[1] - a[1]) + c[0] * (a[1] - b[1]));
    if d.abs() < 1e-12 {
        return None;
    }
    let a2 = a[0] * a[0] + a[1] * a[1];
    let b2 = b[0] * b[0] + b[1] * b[1];
    let c2 = c[0] * c[0] + c[1] * c[1];
    let ux = (a2 * (b[1] - c[1]) + b2 * (c[1] - a[1]) + c2 * (a[1] - b[1])) / d;
    let uy = (a2 * (c[0] - b[0]) + b2 * (a[0] - c[0]) + c2 * (b[0] - a[0])) / d;
    let center = [ux, uy];
    Some((center, dist(center, a)))
}

/// Smallest enclosing ball by support-set enumeration: in the plane the
/// minimal ball is determined by two diametral points or by three points on
/// its boundary, so trying every pair and triple and keeping the smallest
/// enclosing candidate is exact (and fine for clouds of a dozen points).
pub fn brute_miniball(points: &[Point2]) -> (Point2, f64) {
    assert!(!points.is_empty());
    if points.len() == 1 {
        return (points[0], 0.0);
    }
    let contains_all = |center: Point2, radius: f64| {
        points
            .iter()
            .all(|&p| dist(center, p) <= radius + 1e-9 * (1.0 + radius))
    };
    let mut best: Option<(Point2, f64)> = None;
    let mut consider = |center: Point2, radius: f64| {
        if contains_all(center, radius) && best.map_or(true, |(_, r)| radius < r) {
            best = Some((center, radius));
        }
    };
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            let center = [
                0.5 * (points[i][0] + points[j][0]),
                0.5 * (points[i][1] + points[j][1]),
            ];
            consider(center, 0.5 * dist(points[i], points[j]));
            for k in j + 1..points.len() {
                if let Some((center, radius)) = circumcircle(points[i], points[j], points[k]) {
                    consider(center, radius);
                }
            }
        }
    }
    best.expect("some candidate ball encloses the cloud")
}

/// Standard normal via Box–Muller.
pub fn gaussian(rng: &mut impl Rng) -> f64 {
    let u: f64 = rng.gen_range(f64::EPSILON..1.0);
    let v: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
    (-2.0 * u.ln()).sqrt() * v.cos()
}

/// Random rotation of R^d: Gram–Schmidt on Gaussian vectors (which are in
/// general position with probability one, and re-drawn otherwise).
pub fn random_rotation(rng: &mut impl Rng, d: usize) -> Vec<Vec<f64>> {
    let mut basis: Vec<Vec<f64>> = Vec::with_capacity(d);
    while basis.len() < d {
        let mut v: Vec<f64> = (0..d).map(|_| gaussian(rng)).collect();
        for b in &basis {
            let dot: f64 = v.iter().zip(b).map(|(x, y)| x * y).sum();
            for (x, y) in v.iter_mut().zip(b) {
                *x -= dot * y;
            }
        }
        let norm: f64 = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm > 1e-6 {
            v.iter_mut().for_each(|x| *x /= norm);
            basis.push(v);
        }
    }
    basis
}

/// Applies the rotation rows `q` and then the translation `t` to the disk
/// center; the radius is untouched.
pub fn apply_isometry(disk: &Disk, q: &[Vec<f64>], t: &[f64]) -> Disk {
    let c = disk.center();
    let center: Vec<f64> = q
        .iter()
        .zip(t)
        .map(|(row, &shift)| row.iter().zip(c).map(|(a, b)| a * b).sum::<f64>() + shift)
        .collect();
    Disk::new(center, disk.radius()).unwrap()
}

/// Vertices, edges, and triangles of the Vietoris–Rips complex at λ: cliques
/// of the pairwise-meeting graph, directly from the pair scales.
pub fn rips_two_skeleton(system: &DiskSystem, lambda: f64) -> Vec<Vec<usize>> {
    let m = system.len();
    let meets = |i: usize, j: usize| {
        pair_scale(system.disk(i), system.disk(j)).unwrap() <= lambda
    };
    let mut simplices: Vec<Vec<usize>> = (0..m).map(|i| vec![i]).collect();
    for i in 0..m {
        for j in i + 1..m {
            if meets(i, j) {
                simplices.push(vec![i, j]);
                for k in j + 1..m {
                    if meets(i, k) && meets(j, k) {
                        simplices.push(vec![i, j, k]);
                    }
                }
            }
        }
    }
    simplices
}
