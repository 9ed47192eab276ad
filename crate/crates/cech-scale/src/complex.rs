//! Weighted simplicial complexes over disk systems.
//!
//! The complex at scale λ has one simplex per subsystem whose rescaled disks
//! share a common point, and every simplex carries the smallest such scale
//! as its weight. Sublevel sets of the weight function therefore reproduce
//! the complexes at all smaller scales — the filtration.

use crate::error::Error;
use crate::geometry::{ensure_planar_system, pair_scale_raw, DiskSystem, Scale};
use crate::solver::cech_scale_triplet;
use std::collections::BTreeMap;

/// A nonempty, strictly increasing tuple of disk indices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Simplex(Vec<usize>);

impl Simplex {
    /// Builds a simplex from vertices in any order; duplicates are an error.
    pub fn new(mut vertices: Vec<usize>) -> Result<Self, Error> {
        vertices.sort_unstable();
        if vertices.is_empty() || vertices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidSimplex);
        }
        Ok(Simplex(vertices))
    }

    /// Wraps vertices that are already sorted and distinct.
    pub(crate) fn from_sorted(vertices: Vec<usize>) -> Self {
        debug_assert!(!vertices.is_empty() && vertices.windows(2).all(|w| w[0] < w[1]));
        Simplex(vertices)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    /// Topological dimension: vertex count minus one.
    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    /// All faces obtained by dropping one vertex; empty for a vertex.
    pub fn facets(&self) -> Vec<Simplex> {
        if self.0.len() < 2 {
            return Vec::new();
        }
        (0..self.0.len())
            .map(|drop| {
                let mut v = self.0.clone();
                v.remove(drop);
                Simplex(v)
            })
            .collect()
    }
}

/// A finite simplicial complex with a weight per simplex.
///
/// Built downward closed and weight-monotone; the checking predicates exist
/// so tests can assert those invariants rather than trust them.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedComplex {
    entries: BTreeMap<Simplex, f64>,
    max_dim: usize,
}

impl WeightedComplex {
    pub(crate) fn from_entries(entries: BTreeMap<Simplex, f64>, max_dim: usize) -> Self {
        WeightedComplex { entries, max_dim }
    }

    pub fn weight(&self, simplex: &Simplex) -> Option<f64> {
        self.entries.get(simplex).copied()
    }

    pub fn contains(&self, simplex: &Simplex) -> bool {
        self.entries.contains_key(simplex)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The dimension cap the complex was built with.
    pub fn max_dim(&self) -> usize {
        self.max_dim
    }

    /// Simplices with their weights, ordered by vertex tuple.
    pub fn iter(&self) -> impl Iterator<Item = (&Simplex, f64)> {
        self.entries.iter().map(|(s, &w)| (s, w))
    }

    /// The subcomplex of weights ≤ `lambda`.
    pub fn sublevel(&self, lambda: Scale) -> WeightedComplex {
        WeightedComplex {
            entries: self
                .entries
                .iter()
                .filter(|(_, &w)| w <= lambda)
                .map(|(s, &w)| (s.clone(), w))
                .collect(),
            max_dim: self.max_dim,
        }
    }

    /// Every facet of every stored simplex is stored.
    pub fn is_downward_closed(&self) -> bool {
        self.entries
            .keys()
            .all(|s| s.facets().iter().all(|f| self.entries.contains_key(f)))
    }

    /// No simplex is lighter than any of its facets.
    pub fn is_weight_monotone(&self) -> bool {
        self.entries.iter().all(|(s, &w)| {
            s.facets()
                .iter()
                .all(|f| self.entries.get(f).map_or(true, |&fw| fw <= w))
        })
    }
}

/// Lower-indexed disks within pair scale λ of disk `i`, ascending.
pub fn lower_nbrs(system: &DiskSystem, i: usize, lambda: Scale) -> Vec<usize> {
    let disks = system.disks();
    (0..i)
        .filter(|&j| pair_scale_raw(&disks[j], &disks[i]) <= lambda)
        .collect()
}

/// Builds the `dim`-skeleton of the weighted complex at scale λ.
///
/// Vertices enter at weight 0 and each level expands the previous one: a
/// simplex grows by every disk below all its vertices that is λ-close to all
/// of them. Pairs weigh their pair scale and triples their exact common-point
/// scale; larger simplices inherit the maximum facet weight, which in the
/// plane is their common-point scale as well because planar convex sets
/// intersect as soon as all triples do.
pub fn build_complex(
    system: &DiskSystem,
    lambda: Scale,
    dim: usize,
) -> Result<WeightedComplex, Error> {
    ensure_planar_system(system)?;
    if dim < 1 {
        return Err(Error::InvalidSkeletonDim);
    }
    assert!(
        lambda.is_finite() && lambda >= 0.0,
        "complex scale must be finite and nonnegative, got {lambda}"
    );
    let m = system.len();
    let mut entries: BTreeMap<Simplex, f64> = BTreeMap::new();
    let mut level: Vec<Vec<usize>> = Vec::with_capacity(m);
    for i in 0..m {
        entries.insert(Simplex::from_sorted(vec![i]), 0.0);
        level.push(vec![i]);
    }
    for _ in 0..dim {
        let mut next = Vec::new();
        for simplex in &level {
            // Candidates sit below every vertex and within λ of each; they
            // are exactly the lower neighbors of the smallest vertex that
            // are also λ-close to the rest.
            'candidate: for cand in lower_nbrs(system, simplex[0], lambda) {
                for &v in &simplex[1..] {
                    if pair_scale_raw(system.disk(cand), system.disk(v)) > lambda {
                        continue 'candidate;
                    }
                }
                let mut verts = Vec::with_capacity(simplex.len() + 1);
                verts.push(cand);
                verts.extend_from_slice(simplex);
                let weight = match verts.len() {
                    2 => pair_scale_raw(system.disk(verts[0]), system.disk(verts[1])),
                    3 => {
                        let sub = system.subsystem(&verts)?;
                        cech_scale_triplet(&sub)?.cech_scale
                    }
                    _ => {
                        let mut worst = 0.0f64;
                        let mut all_present = true;
                        for facet in Simplex::from_sorted(verts.clone()).facets() {
                            match entries.get(&facet) {
                                Some(&w) => worst = worst.max(w),
                                None => {
                                    all_present = false;
                                    break;
                                }
                            }
                        }
                        if !all_present {
                            continue;
                        }
                        worst
                    }
                };
                if weight <= lambda {
                    entries.insert(Simplex::from_sorted(verts.clone()), weight);
                    next.push(verts);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        level = next;
    }
    Ok(WeightedComplex {
        entries,
        max_dim: dim,
    })
}

/// The complex flattened to filtration order: by weight, then dimension,
/// then vertex tuple. Every prefix of the result is itself a complex.
pub fn filtration_steps(complex: &WeightedComplex) -> Vec<(f64, Simplex)> {
    let mut steps: Vec<(f64, Simplex)> = complex
        .iter()
        .map(|(s, w)| (w, s.clone()))
        .collect();
    steps.sort_by(|(wa, sa), (wb, sb)| {
        wa.total_cmp(wb)
            .then(sa.dim().cmp(&sb.dim()))
            .then(sa.cmp(sb))
    });
    steps
}
