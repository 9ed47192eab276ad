//! Timing harness comparing the two scale solvers and the planar
//! reduction used by the 2-skeleton builder.
//!
//! Systems are drawn from a seeded stream so that two runs with the same
//! configuration time exactly the same inputs.

use crate::geometry::{Disk, DiskSystem, Scale};
use crate::highdim::affine_project;
use crate::solver::{cech_scale, cech_scale_naive, cech_scale_triplet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt::Write as _;
use std::time::Instant;

/// What a benchmark run should cover.
#[derive(Debug, Clone)]
pub struct BenchConfig {
    /// Largest planar system size; sizes run 10, 20, … up to this value.
    pub max_disks: usize,
    /// Systems timed per size (the mean is reported).
    pub repeats: usize,
    /// Ambient dimensions for the triplet-projection timing, if any.
    pub dims: Vec<usize>,
    pub seed: u64,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            max_disks: 100,
            repeats: 3,
            dims: Vec::new(),
            seed: 7,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BenchAlgorithm {
    /// Bisection on the whole system.
    Naive,
    /// Maximum over triplet scales with pruning.
    Triplets,
    /// Plane reduction of one triplet in R^d followed by the triplet solve.
    Skeleton2Preprocess,
}

impl BenchAlgorithm {
    pub fn name(self) -> &'static str {
        match self {
            BenchAlgorithm::Naive => "naive",
            BenchAlgorithm::Triplets => "triplets",
            BenchAlgorithm::Skeleton2Preprocess => "skeleton2-preprocess",
        }
    }
}

#[derive(Debug, Clone)]
pub struct BenchRow {
    /// Number of disks for the planar solvers, ambient dimension for the
    /// projection rows.
    pub size: usize,
    pub algorithm: BenchAlgorithm,
    pub mean_seconds: f64,
}

/// Draws a system of `m` disks in ambient dimension `dim` with centers in
/// [0, 10]^dim and radii in [0.2, 3].
pub fn random_disk_system(rng: &mut impl Rng, m: usize, dim: usize) -> DiskSystem {
    let disks = (0..m)
        .map(|_| {
            let center = (0..dim).map(|_| rng.gen_range(0.0..10.0)).collect();
            let radius = rng.gen_range(0.2..=3.0);
            Disk::new(center, radius).expect("generated disk is valid")
        })
        .collect();
    DiskSystem::new(disks).expect("generated system is valid")
}

fn time_over<F: FnMut(&DiskSystem) -> Scale>(systems: &[DiskSystem], mut f: F) -> f64 {
    let start = Instant::now();
    let mut sink = 0.0;
    for m in systems {
        sink += f(m);
    }
    let elapsed = start.elapsed().as_secs_f64();
    assert!(sink.is_finite());
    elapsed / systems.len() as f64
}

/// Runs the configured sweep and returns one row per (size, algorithm).
pub fn run_benchmark(config: &BenchConfig) -> Vec<BenchRow> {
    assert!(config.repeats > 0, "repeats must be positive");
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut rows = Vec::new();
    let mut size = 10;
    while size <= config.max_disks {
        let systems: Vec<DiskSystem> = (0..config.repeats)
            .map(|_| random_disk_system(&mut rng, size, 2))
            .collect();
        rows.push(BenchRow {
            size,
            algorithm: BenchAlgorithm::Naive,
            mean_seconds: time_over(&systems, |m| {
                cech_scale_naive(m).expect("solver succeeds").cech_scale
            }),
        });
        rows.push(BenchRow {
            size,
            algorithm: BenchAlgorithm::Triplets,
            mean_seconds: time_over(&systems, |m| {
                cech_scale(m).expect("solver succeeds").cech_scale
            }),
        });
        size += 10;
    }
    for &dim in &config.dims {
        let triples: Vec<DiskSystem> = (0..config.repeats)
            .map(|_| random_disk_system(&mut rng, 3, dim))
            .collect();
        rows.push(BenchRow {
            size: dim,
            algorithm: BenchAlgorithm::Skeleton2Preprocess,
            mean_seconds: time_over(&triples, |m| {
                let projected =
                    affine_project(m.disk(0), m.disk(1), m.disk(2)).expect("projection succeeds");
                cech_scale_triplet(&projected.planar_system)
                    .expect("solver succeeds")
                    .cech_scale
            }),
        });
    }
    rows
}

/// Formats rows as CSV with a `size,algorithm,mean_seconds` header.
pub fn write_csv(rows: &[BenchRow]) -> String {
    let mut out = String::from("size,algorithm,mean_seconds\n");
    for row in rows {
        let _ = writeln!(
            out,
            "{},{},{:.9}",
            row.size,
            row.algorithm.name(),
            row.mean_seconds
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeded_stream_is_reproducible() {
        let mut a = ChaCha8Rng::seed_from_u64(11);
        let mut b = ChaCha8Rng::seed_from_u64(11);
        let x = random_disk_system(&mut a, 8, 2);
        let y = random_disk_system(&mut b, 8, 2);
        for (dx, dy) in x.disks().iter().zip(y.disks()) {
            assert_eq!(dx.center(), dy.center());
            assert_eq!(dx.radius(), dy.radius());
        }
    }

    #[test]
    fn sweep_produces_expected_rows() {
        let config = BenchConfig {
            max_disks: 20,
            repeats: 1,
            dims: vec![3],
            seed: 5,
        };
        let rows = run_benchmark(&config);
        let labels: Vec<(usize, &str)> = rows
            .iter()
            .map(|r| (r.size, r.algorithm.name()))
            .collect();
        assert_eq!(
            labels,
            vec![
                (10, "naive"),
                (10, "triplets"),
                (20, "naive"),
                (20, "triplets"),
                (3, "skeleton2-preprocess"),
            ]
        );
        assert!(rows.iter().all(|r| r.mean_seconds >= 0.0));
    }

    #[test]
    fn csv_layout() {
        let rows = vec![BenchRow {
            size: 10,
            algorithm: BenchAlgorithm::Naive,
            mean_seconds: 0.25,
        }];
        let csv = write_csv(&rows);
        assert_eq!(csv, "size,algorithm,mean_seconds\n10,naive,0.250000000\n");
    }

    #[test]
    fn random_systems_respect_bounds() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let m = random_disk_system(&mut rng, 20, 4);
        assert_eq!(m.dimension(), 4);
        for d in m.disks() {
            assert!(d.center().iter().all(|&c| (0.0..=10.0).contains(&c)));
            assert!((0.2..=3.0).contains(&d.radius()));
        }
    }
}
