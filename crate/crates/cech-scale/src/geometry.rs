//! Disk-system primitives.
//!
//! A disk system is a finite, ordered collection of closed balls in `R^d`,
//! all sharing one ambient dimension. Rescaling multiplies every radius by a
//! common factor λ while keeping the centers fixed; the questions answered by
//! the rest of the crate are always "at which λ does the rescaled system
//! acquire property X".

use crate::error::Error;

/// Rescaling factor applied to every radius of a disk system. Nonnegative.
pub type Scale = f64;

/// A point in the plane.
pub type Point2 = [f64; 2];

/// A closed ball in `R^d` with positive radius.
#[derive(Debug, Clone, PartialEq)]
pub struct Disk {
    center: Vec<f64>,
    radius: f64,
}

impl Disk {
    /// Builds a disk, rejecting empty or non-finite centers and radii ≤ 0.
    pub fn new(center: Vec<f64>, radius: f64) -> Result<Self, Error> {
        if center.is_empty() {
            return Err(Error::EmptyCenter);
        }
        if !center.iter().all(|c| c.is_finite()) {
            return Err(Error::NonFiniteCoordinate);
        }
        if !radius.is_finite() || radius <= 0.0 {
            return Err(Error::InvalidRadius(radius));
        }
        Ok(Disk { center, radius })
    }

    /// Convenience constructor for a planar disk.
    pub fn planar(x: f64, y: f64, radius: f64) -> Result<Self, Error> {
        Disk::new(vec![x, y], radius)
    }

    pub fn center(&self) -> &[f64] {
        &self.center
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn dimension(&self) -> usize {
        self.center.len()
    }

    /// Rescaled copy. Bypasses the radius check so that factor 0 is allowed
    /// to produce a degenerate point-disk.
    fn scaled(&self, factor: f64) -> Disk {
        Disk {
            center: self.center.clone(),
            radius: self.radius * factor,
        }
    }
}

/// A nonempty, ordered collection of disks of one common dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct DiskSystem {
    disks: Vec<Disk>,
    dimension: usize,
}

impl DiskSystem {
    pub fn new(disks: Vec<Disk>) -> Result<Self, Error> {
        let first = disks.first().ok_or(Error::EmptySystem)?;
        let dimension = first.dimension();
        for d in &disks {
            if d.dimension() != dimension {
                return Err(Error::DimensionMismatch {
                    left: dimension,
                    right: d.dimension(),
                });
            }
        }
        Ok(DiskSystem { disks, dimension })
    }

    /// Builds a planar system from `(x, y, radius)` triples.
    pub fn from_planar(spec: &[(f64, f64, f64)]) -> Result<Self, Error> {
        let disks = spec
            .iter()
            .map(|&(x, y, r)| Disk::planar(x, y, r))
            .collect::<Result<Vec<_>, _>>()?;
        DiskSystem::new(disks)
    }

    pub fn disks(&self) -> &[Disk] {
        &self.disks
    }

    /// Indexed access; panics when out of bounds, like slice indexing.
    pub fn disk(&self, index: usize) -> &Disk {
        &self.disks[index]
    }

    pub fn len(&self) -> usize {
        self.disks.len()
    }

    pub fn is_empty(&self) -> bool {
        false // systems are nonempty by construction
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    /// The system with every radius multiplied by `factor`.
    ///
    /// Factor 0 is allowed and degenerates every disk to its center point;
    /// negative or non-finite factors are a contract violation and panic.
    pub fn rescale(&self, factor: Scale) -> DiskSystem {
        assert!(
            factor.is_finite() && factor >= 0.0,
            "rescale factor must be finite and nonnegative, got {factor}"
        );
        DiskSystem {
            disks: self.disks.iter().map(|d| d.scaled(factor)).collect(),
            dimension: self.dimension,
        }
    }

    /// The subsystem picked out by `indices`, in the given order.
    pub fn subsystem(&self, indices: &[usize]) -> Result<DiskSystem, Error> {
        let disks = indices
            .iter()
            .map(|&i| {
                self.disks
                    .get(i)
                    .cloned()
                    .ok_or(Error::IndexOutOfBounds {
                        index: i,
                        len: self.disks.len(),
                    })
            })
            .collect::<Result<Vec<_>, _>>()?;
        DiskSystem::new(disks)
    }
}

pub(crate) fn dist(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

/// Unchecked pair scale; callers guarantee equal dimensions.
pub(crate) fn pair_scale_raw(a: &Disk, b: &Disk) -> Scale {
    let d = dist(&a.center, &b.center);
    if d == 0.0 {
        0.0
    } else {
        d / (a.radius + b.radius)
    }
}

/// The smallest factor at which the two rescaled disks intersect:
/// ‖c_i − c_j‖ / (r_i + r_j). Zero exactly for concentric disks.
pub fn pair_scale(a: &Disk, b: &Disk) -> Result<Scale, Error> {
    if a.dimension() != b.dimension() {
        return Err(Error::DimensionMismatch {
            left: a.dimension(),
            right: b.dimension(),
        });
    }
    Ok(pair_scale_raw(a, b))
}

/// The Vietoris-Rips scale: the smallest factor at which all disks pairwise
/// intersect, i.e. the maximum pair scale. Zero for a single disk.
pub fn rips_scale(system: &DiskSystem) -> Scale {
    let disks = system.disks();
    let mut max = 0.0f64;
    for i in 0..disks.len() {
        for j in (i + 1)..disks.len() {
            max = max.max(pair_scale_raw(&disks[i], &disks[j]));
        }
    }
    max
}

/// Scale past which one rescaled disk contains the other.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Containment {
    /// Boundaries separate at this factor (0 for concentric disks).
    At(Scale),
    /// Equal radii over distinct centers: the boundaries always meet once the
    /// disks intersect at all.
    Never,
}

/// The factor beyond which the rescaled boundaries stop intersecting because
/// the smaller disk is swallowed by the larger: ‖c_i − c_j‖ / |r_i − r_j|.
pub fn containment_scale(a: &Disk, b: &Disk) -> Result<Containment, Error> {
    if a.dimension() != b.dimension() {
        return Err(Error::DimensionMismatch {
            left: a.dimension(),
            right: b.dimension(),
        });
    }
    let d = dist(&a.center, &b.center);
    if d == 0.0 {
        return Ok(Containment::At(0.0));
    }
    if a.radius == b.radius {
        return Ok(Containment::Never);
    }
    Ok(Containment::At(d / (a.radius - b.radius).abs()))
}

/// The directed boundary-intersection point of two rescaled planar disks.
///
/// Of the (up to) two points of ∂D_i(λr_i) ∩ ∂D_j(λr_j), returns the one on
/// the left of the vector c_j − c_i; swapping the arguments yields the mirror
/// point. Once λ exceeds the containment scale the boundaries separate and
/// the point stays frozen at its last position (the internal tangency point);
/// concentric disks always map to c_i.
pub fn d_point(first: &Disk, second: &Disk, lambda: Scale) -> Result<Point2, Error> {
    ensure_planar(first)?;
    ensure_planar(second)?;
    let cx = first.center[0];
    let cy = first.center[1];
    let dx = second.center[0] - cx;
    let dy = second.center[1] - cy;
    let delta = (dx * dx + dy * dy).sqrt();
    if delta == 0.0 {
        return Ok([cx, cy]);
    }
    let meet = delta / (first.radius + second.radius);
    if lambda < meet {
        return Err(Error::DisksDisjoint {
            scale: lambda,
            required: meet,
        });
    }
    // Freeze the construction at the containment scale: past it the boundary
    // circles no longer intersect and the last tangency point is kept.
    let effective = if first.radius != second.radius {
        lambda.min(delta / (first.radius - second.radius).abs())
    } else {
        lambda
    };
    let ri = effective * first.radius;
    let rj = effective * second.radius;
    let along = (delta * delta + ri * ri - rj * rj) / (2.0 * delta);
    let height = (ri * ri - along * along).max(0.0).sqrt();
    let ux = dx / delta;
    let uy = dy / delta;
    Ok([cx + along * ux - height * uy, cy + along * uy + height * ux])
}

/// The tight upper bound on Čech/Vietoris-Rips scale ratios in `R^d`:
/// √(2d / (d + 1)). In the plane this is √(4/3).
pub fn vietoris_rips_bound(dimension: usize) -> f64 {
    assert!(dimension >= 1, "ambient dimension must be at least 1");
    let d = dimension as f64;
    (2.0 * d / (d + 1.0)).sqrt()
}

pub(crate) fn ensure_planar(disk: &Disk) -> Result<(), Error> {
    if disk.dimension() != 2 {
        return Err(Error::UnsupportedDimension {
            required: 2,
            found: disk.dimension(),
        });
    }
    Ok(())
}

pub(crate) fn ensure_planar_system(system: &DiskSystem) -> Result<(), Error> {
    if system.dimension() != 2 {
        return Err(Error::UnsupportedDimension {
            required: 2,
            found: system.dimension(),
        });
    }
    Ok(())
}
