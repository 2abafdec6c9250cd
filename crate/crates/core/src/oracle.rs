//! Independent brute-force polyhedral computations, used as ground truth on
//! desk-scale instances.
//!
//! Facets are found by sheer enumeration: every d-subset of the input points
//! that spans a hyperplane is kept iff all points lie in one closed
//! halfspace. This is trivially correct by construction and easy to audit;
//! the exponential cost is acceptable because the oracle only ever runs on
//! small instances. Faces are then generated as the closure of the facet
//! incidence sets under pairwise intersection. Nothing here shares code
//! with the closed-form construction it is meant to check.

use crate::exact::{affine_rank, solve_hyperplane, Hyperplane, HyperplaneFit, Int, LpOutcome, Rat};
use crate::exact::{linear_feasible, ExactError};
use itertools::Itertools;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("point cloud is empty")]
    Empty,
    #[error("points have inconsistent dimensions")]
    DimensionMismatch,
    #[error("duplicate point at indices {0} and {1}")]
    DuplicatePoint(usize, usize),
    #[error("points are not full-dimensional (affine rank {rank} < {dim})")]
    NotFullDimensional { rank: usize, dim: usize },
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// An indexed set of distinct rational points; the index of a point is its
/// stable label everywhere in this module.
#[derive(Clone, Debug)]
pub struct PointCloud {
    points: Vec<Vec<Rat>>,
}

impl PointCloud {
    pub fn new(points: Vec<Vec<Rat>>) -> Result<Self, OracleError> {
        let dim = points.first().ok_or(OracleError::Empty)?.len();
        if points.iter().any(|p| p.len() != dim) {
            return Err(OracleError::DimensionMismatch);
        }
        let mut seen: BTreeMap<&Vec<Rat>, usize> = BTreeMap::new();
        for (i, p) in points.iter().enumerate() {
            if let Some(&j) = seen.get(p) {
                return Err(OracleError::DuplicatePoint(j, i));
            }
            seen.insert(p, i);
        }
        Ok(PointCloud { points })
    }

    pub fn points(&self) -> &[Vec<Rat>] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.points[0].len()
    }
}

/// A facet of the convex hull: the supporting hyperplane oriented so that
/// `normal . x >= offset` holds on the whole cloud, plus the sorted indices
/// of all incident points.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct BruteFacet {
    pub normal: Vec<Int>,
    pub offset: Int,
    pub incident: Vec<usize>,
}

/// All facets of the convex hull of a full-dimensional point cloud, by
/// hyperplane enumeration over d-subsets. Output is sorted by
/// `(normal, offset)`, so it is deterministic regardless of parallelism.
pub fn brute_facets(cloud: &PointCloud) -> Result<Vec<BruteFacet>, OracleError> {
    let dim = cloud.dim();
    let rank = affine_rank(cloud.points())?;
    if rank != dim {
        return Err(OracleError::NotFullDimensional { rank, dim });
    }

    let subsets: Vec<Vec<usize>> = (0..cloud.len()).combinations(dim).collect();
    let found: BTreeSet<BruteFacet> = subsets
        .par_iter()
        .filter_map(|subset| {
            let pts: Vec<Vec<Rat>> = subset.iter().map(|&i| cloud.points[i].clone()).collect();
            let h = match solve_hyperplane(&pts) {
                Ok(HyperplaneFit::Unique(h)) => h,
                Ok(HyperplaneFit::Degenerate) => return None,
                Err(_) => unreachable!("subset size equals dimension"),
            };
            one_sided_incidence(cloud, &h)
        })
        .collect();
    Ok(found.into_iter().collect())
}

/// Check whether all cloud points lie in one closed halfspace of `h`; if so
/// return the facet with inward orientation and full incidence set. Bails
/// out as soon as both signs have been seen.
fn one_sided_incidence(cloud: &PointCloud, h: &Hyperplane) -> Option<BruteFacet> {
    let mut pos = false;
    let mut neg = false;
    let mut incident = Vec::new();
    for (i, p) in cloud.points.iter().enumerate() {
        let v = h.eval(p);
        if v.is_zero() {
            incident.push(i);
        } else if v.is_positive() {
            pos = true;
        } else {
            neg = true;
        }
        if pos && neg {
            return None;
        }
    }
    // Full-dimensional cloud: not every point can be incident.
    debug_assert!(pos || neg);
    let (normal, offset) = if neg {
        (
            h.normal.iter().map(|v| -v.clone()).collect(),
            -h.offset.clone(),
        )
    } else {
        (h.normal.clone(), h.offset.clone())
    };
    Some(BruteFacet {
        normal,
        offset,
        incident,
    })
}

/// Faces of the convex hull grouped by dimension, with the f-vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BruteLattice {
    /// `f_0, ..., f_d`; the last entry is 1 for the polytope itself.
    pub f_vector: Vec<u64>,
    /// `faces_by_dim[k]` lists the vertex-index sets of the k-faces, sorted.
    pub faces_by_dim: Vec<Vec<Vec<usize>>>,
}

/// Generate every proper face as an intersection of facet incidence sets
/// (iterated to a fixed point), measure dimensions by affine rank, and
/// count. The empty intersection is discarded.
pub fn brute_face_lattice(cloud: &PointCloud) -> Result<BruteLattice, OracleError> {
    let dim = cloud.dim();
    let facets = brute_facets(cloud)?;
    let mut faces: BTreeSet<Vec<usize>> = facets.iter().map(|f| f.incident.clone()).collect();
    loop {
        let snapshot: Vec<Vec<usize>> = faces.iter().cloned().collect();
        let mut grew = false;
        for (a, b) in snapshot.iter().tuple_combinations() {
            let meet: Vec<usize> = intersect_sorted(a, b);
            if !meet.is_empty() && faces.insert(meet) {
                grew = true;
            }
        }
        if !grew {
            break;
        }
    }

    let mut faces_by_dim: Vec<Vec<Vec<usize>>> = vec![Vec::new(); dim + 1];
    for face in faces {
        let pts: Vec<Vec<Rat>> = face.iter().map(|&i| cloud.points[i].clone()).collect();
        let k = affine_rank(&pts)?;
        faces_by_dim[k].push(face);
    }
    let mut f_vector: Vec<u64> = faces_by_dim.iter().map(|v| v.len() as u64).collect();
    f_vector[dim] = 1;
    faces_by_dim[dim] = vec![(0..cloud.len()).collect()];
    Ok(BruteLattice {
        f_vector,
        faces_by_dim,
    })
}

fn intersect_sorted(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Exact extremality test: point `i` is a vertex of the hull iff it is not
/// a convex combination of the remaining points.
pub fn is_vertex(i: usize, cloud: &PointCloud) -> bool {
    let others: Vec<Vec<Rat>> = cloud
        .points
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != i)
        .map(|(_, p)| p.clone())
        .collect();
    match linear_feasible(&others, &cloud.points[i]) {
        Ok(LpOutcome::Infeasible) => true,
        Ok(LpOutcome::Witness(_)) => false,
        Err(_) => unreachable!("dimensions come from one cloud"),
    }
}

/// Set equality of two families of vertex-index sets, ignoring order.
pub fn same_facet_family(a: &[Vec<usize>], b: &[Vec<usize>]) -> bool {
    let canon = |fam: &[Vec<usize>]| -> BTreeSet<Vec<usize>> {
        fam.iter()
            .map(|s| {
                let mut s = s.clone();
                s.sort_unstable();
                s
            })
            .collect()
    };
    canon(a) == canon(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat_int;
    use crate::polytope::{facets, vertex_points};

    fn int_cloud(pts: &[&[i64]]) -> PointCloud {
        PointCloud::new(
            pts.iter()
                .map(|p| p.iter().map(|&v| rat_int(v)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn unit_square_has_four_facets() {
        let cloud = int_cloud(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let facets = brute_facets(&cloud).unwrap();
        assert_eq!(facets.len(), 4);
        for f in &facets {
            assert_eq!(f.incident.len(), 2);
        }
    }

    #[test]
    fn cube_lattice() {
        let corners: Vec<Vec<Rat>> = (0..8)
            .map(|m| (0..3).map(|b| rat_int((m >> b) & 1)).collect())
            .collect();
        let cloud = PointCloud::new(corners).unwrap();
        let lat = brute_face_lattice(&cloud).unwrap();
        assert_eq!(lat.f_vector, vec![8, 12, 6, 1]);
    }

    #[test]
    fn degenerate_cloud_is_rejected() {
        // Simplex vertices in R^3 span only a plane.
        let cloud = int_cloud(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(
            brute_facets(&cloud).unwrap_err(),
            OracleError::NotFullDimensional { rank: 2, dim: 3 }
        );
    }

    #[test]
    fn rejects_duplicates_and_ragged_input() {
        let pts = vec![vec![rat_int(1)], vec![rat_int(1)]];
        assert_eq!(
            PointCloud::new(pts).unwrap_err(),
            OracleError::DuplicatePoint(0, 1)
        );
        assert!(PointCloud::new(vec![]).is_err());
        let ragged = vec![vec![rat_int(1)], vec![rat_int(1), rat_int(2)]];
        assert_eq!(
            PointCloud::new(ragged).unwrap_err(),
            OracleError::DimensionMismatch
        );
    }

    #[test]
    fn prime_power_polytope_facets_match_closed_form() {
        let t = rat_int(2);
        let cloud = PointCloud::new(vertex_points(3, 2, &t).unwrap()).unwrap();
        let brute = brute_facets(&cloud).unwrap();
        assert_eq!(brute.len(), 8);
        let brute_family: Vec<Vec<usize>> = brute.iter().map(|f| f.incident.clone()).collect();
        let closed_family: Vec<Vec<usize>> = facets(3, 2, &t)
            .unwrap()
            .into_iter()
            .map(|f| f.vertex_indices)
            .collect();
        assert!(same_facet_family(&brute_family, &closed_family));
    }

    #[test]
    fn polygon_lattice() {
        let t = rat_int(2);
        let cloud = PointCloud::new(vertex_points(2, 3, &t).unwrap()).unwrap();
        let lat = brute_face_lattice(&cloud).unwrap();
        assert_eq!(lat.f_vector, vec![4, 4, 1]);
        let cloud = PointCloud::new(vertex_points(3, 2, &t).unwrap()).unwrap();
        let lat = brute_face_lattice(&cloud).unwrap();
        assert_eq!(lat.f_vector, vec![6, 12, 8, 1]);
    }

    #[test]
    fn vertex_tests() {
        let triangle = int_cloud(&[&[0, 0], &[2, 0], &[0, 2]]);
        assert!(is_vertex(0, &triangle));
        let with_midpoint = int_cloud(&[&[0, 0], &[2, 0], &[1, 0]]);
        assert!(!is_vertex(2, &with_midpoint));
        assert!(is_vertex(0, &with_midpoint));
        // Both diagonal completions for the 2x2 tridiagonal unimodular case
        // are extreme (a two-point set).
        let pair = int_cloud(&[&[-1, 0], &[0, -1]]);
        assert!(is_vertex(0, &pair) && is_vertex(1, &pair));
    }

    #[test]
    fn family_comparison_ignores_order() {
        let a = vec![vec![0, 1], vec![2, 3]];
        let b = vec![vec![3, 2], vec![1, 0]];
        assert!(same_facet_family(&a, &b));
        let c = vec![vec![0, 1]];
        assert!(!same_facet_family(&a, &c));
    }

    #[test]
    fn every_factorization_point_is_a_vertex() {
        let t = rat_int(2);
        for (d, e) in [(2usize, 3usize), (3, 2), (3, 3)] {
            let cloud = PointCloud::new(vertex_points(d, e, &t).unwrap()).unwrap();
            for i in 0..cloud.len() {
                assert!(is_vertex(i, &cloud), "point {i} of (d={d}, e={e})");
            }
        }
    }
}
