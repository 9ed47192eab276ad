use thiserror::Error;

/// Errors produced by disk-system operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("disk center must have at least one coordinate")]
    EmptyCenter,
    #[error("center coordinates must be finite")]
    NonFiniteCoordinate,
    #[error("disk radius must be positive and finite, got {0}")]
    InvalidRadius(f64),
    #[error("disk system must contain at least one disk")]
    EmptySystem,
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("operation requires dimension {required}, system has dimension {found}")]
    UnsupportedDimension { required: usize, found: usize },
    #[error("index {index} out of bounds for system of {len} disks")]
    IndexOutOfBounds { index: usize, len: usize },
    #[error("indices must be pairwise distinct")]
    IndicesNotDistinct,
    #[error("rho requires at least three disks, got {0}")]
    TooFewDisks(usize),
    #[error("scale {scale} is below the Vietoris-Rips scale {rips}")]
    ScaleBelowRips { scale: f64, rips: f64 },
    #[error("disks disjoint at this scale (scale {scale}, boundaries meet from {required})")]
    DisksDisjoint { scale: f64, required: f64 },
    #[error("invalid bracket: lo {lo} must lie strictly below hi {hi}")]
    InvalidBracket { lo: f64, hi: f64 },
    #[error("no sign change of the objective on [{lo}, {hi}]")]
    NoRootBracketed { lo: f64, hi: f64 },
    #[error("expected exactly three disks, got {0}")]
    NotATriplet(usize),
    #[error("skeleton dimension must be at least 1")]
    InvalidSkeletonDim,
    #[error("simplex vertices must be nonempty and pairwise distinct")]
    InvalidSimplex,
    #[error("point cloud must be nonempty")]
    EmptyPointCloud,
}
