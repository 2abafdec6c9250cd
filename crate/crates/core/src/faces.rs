//! Closed-form f-vectors and the explicit face catalogue.
//!
//! Face counts (`f_k` = number of k-dimensional faces):
//!
//! ```text
//! f_0 = C(e+d-1, d-1)
//! f_1 = C(d,2) + C(d,2) C(e+d-2, d-1)
//! f_k = C(d+1, k+1) + C(d, k+1) C(e+d-1, d) - C(d, k+1) C(e-k+d-1, d)
//!       for 2 <= k < d
//! f_d = 1
//! ```
//!
//! Faces are also constructed explicitly. A k-face with `k >= 1` is either
//!
//! - *regular*: determined by a support `T` of `k+1` coordinates, a type
//!   `lambda <= min(k, e)` and a base composition `m` of `e - lambda`, with
//!   vertices `{ m + eps : supp(eps) in T, sum(eps) = lambda }`,
//! - a face of the simplex facet where `sum x_i` is maximal: any nonempty
//!   subset of its `d` corners,
//! - or, for `k >= 2`, the intersection of `d - k` of the facets `x_i = 1`.
//!
//! The parametrization is expected to be injective; the enumeration
//! deduplicates by vertex set anyway and reports any collision as a
//! counting anomaly, which the tests assert to be zero.

use crate::factor::{binomial, compositions, ExponentVector};
use itertools::Itertools;
use std::collections::{BTreeMap, HashMap};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FaceError {
    #[error("need d >= 2 and e >= 2, got d={d}, e={e}")]
    BadParameters { d: usize, e: usize },
}

/// The face-count vector `(f_0, ..., f_d)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FVector(Vec<u64>);

impl FVector {
    pub fn new(counts: Vec<u64>) -> Self {
        FVector(counts)
    }

    pub fn counts(&self) -> &[u64] {
        &self.0
    }

    /// The polytope dimension `d`.
    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    /// `sum_{k<d} (-1)^k f_k == 1 - (-1)^d`.
    pub fn euler_holds(&self) -> bool {
        let d = self.dim();
        let lhs: i64 = self.0[..d]
            .iter()
            .enumerate()
            .map(|(k, &f)| {
                if k.is_multiple_of(2) {
                    f as i64
                } else {
                    -(f as i64)
                }
            })
            .sum();
        lhs == 1 - if d.is_multiple_of(2) { 1 } else { -1 }
    }
}

fn check_params(d: usize, e: usize) -> Result<(), FaceError> {
    if d < 2 || e < 2 {
        return Err(FaceError::BadParameters { d, e });
    }
    Ok(())
}

/// Evaluate the closed face-count formulas exactly.
pub fn f_vector_formula(d: usize, e: usize) -> Result<FVector, FaceError> {
    check_params(d, e)?;
    let mut f = Vec::with_capacity(d + 1);
    f.push(binomial(e + d - 1, d - 1));
    if d >= 2 {
        f.push(binomial(d, 2) * (1 + binomial(e + d - 2, d - 1)));
    }
    for k in 2..d {
        let regular = binomial(d, k + 1) * (binomial(e + d - 1, d) - binomial(e + d - 1 - k, d));
        f.push(binomial(d + 1, k + 1) + regular);
    }
    f.push(1);
    Ok(FVector(f))
}

/// How a face arises in the constructive enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FaceClass {
    /// A single vertex.
    Vertex,
    /// Regular face: support, type, and base composition of `e - lambda`.
    Regular {
        support: Vec<usize>,
        lambda: usize,
        base: Vec<usize>,
    },
    /// Subface of the simplex facet, given by the coordinates of its corners.
    Upper { corners: Vec<usize> },
    /// Intersection of the facets `x_i = 1` for `i` in `fixed`.
    Lower { fixed: Vec<usize> },
}

/// A face given by the sorted indices of its vertices in the canonical
/// vertex order, its dimension, and how it was constructed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub vertex_indices: Vec<usize>,
    pub dim: usize,
    pub class: FaceClass,
}

/// Result of the constructive enumeration: all proper faces of dimension
/// `0..=d-1`, deduplicated by vertex set, sorted by dimension then vertex
/// indices. `counting_anomalies` is the number of parameter choices that
/// collided with an earlier face; the closed-form counts are only correct
/// if it is zero.
#[derive(Clone, Debug)]
pub struct FaceEnumeration {
    pub faces: Vec<Face>,
    pub counting_anomalies: usize,
}

/// Construct every proper face with its explicit vertex set.
pub fn enumerate_faces(d: usize, e: usize) -> Result<FaceEnumeration, FaceError> {
    check_params(d, e)?;
    let vertex_list: Vec<ExponentVector> = compositions(e, d).expect("d >= 1").collect();
    let index_of: HashMap<&ExponentVector, usize> = vertex_list
        .iter()
        .enumerate()
        .map(|(i, ev)| (ev, i))
        .collect();
    let lookup = |beta: Vec<usize>| -> usize {
        *index_of
            .get(&ExponentVector::new(beta))
            .expect("constructed vertex exists")
    };

    let mut seen: BTreeMap<Vec<usize>, Face> = BTreeMap::new();
    let mut counting_anomalies = 0usize;
    let mut insert = |indices: Vec<usize>, dim: usize, class: FaceClass| {
        debug_assert!(indices.windows(2).all(|w| w[0] < w[1]));
        if seen.contains_key(&indices) {
            counting_anomalies += 1;
        } else {
            seen.insert(
                indices.clone(),
                Face {
                    vertex_indices: indices,
                    dim,
                    class,
                },
            );
        }
    };

    for i in 0..vertex_list.len() {
        insert(vec![i], 0, FaceClass::Vertex);
    }

    for k in 1..d {
        // Regular k-faces.
        for support in (0..d).combinations(k + 1) {
            for lambda in 1..=k.min(e) {
                for m in compositions(e - lambda, d).expect("d >= 1") {
                    let mut indices: Vec<usize> = support
                        .iter()
                        .copied()
                        .combinations(lambda)
                        .map(|eps| {
                            let mut beta = m.entries().to_vec();
                            for i in eps {
                                beta[i] += 1;
                            }
                            lookup(beta)
                        })
                        .collect();
                    indices.sort_unstable();
                    let class = FaceClass::Regular {
                        support: support.clone(),
                        lambda,
                        base: m.entries().to_vec(),
                    };
                    insert(indices, k, class);
                }
            }
        }
        // Subfaces of the simplex facet: k+1 of its d corners.
        for corners in (0..d).combinations(k + 1) {
            let mut indices: Vec<usize> = corners
                .iter()
                .map(|&i| {
                    let mut beta = vec![0; d];
                    beta[i] = e;
                    lookup(beta)
                })
                .collect();
            indices.sort_unstable();
            insert(indices, k, FaceClass::Upper { corners });
        }
        // Intersections of d-k of the coordinate facets.
        if k >= 2 {
            for fixed in (0..d).combinations(d - k) {
                let free: Vec<usize> = (0..d).filter(|i| !fixed.contains(i)).collect();
                let mut indices: Vec<usize> = compositions(e, free.len())
                    .expect("k >= 2")
                    .map(|ev| {
                        let mut beta = vec![0; d];
                        for (&pos, &val) in free.iter().zip(ev.entries()) {
                            beta[pos] = val;
                        }
                        lookup(beta)
                    })
                    .collect();
                indices.sort_unstable();
                insert(indices, k, FaceClass::Lower { fixed });
            }
        }
    }

    let mut faces: Vec<Face> = seen.into_values().collect();
    faces.sort_by(|a, b| (a.dim, &a.vertex_indices).cmp(&(b.dim, &b.vertex_indices)));
    Ok(FaceEnumeration {
        faces,
        counting_anomalies,
    })
}

/// Count faces per dimension and append the polytope itself (`f_d = 1`).
pub fn f_vector_from_faces(faces: &[Face]) -> FVector {
    let d = faces.iter().map(|f| f.dim).max().map_or(0, |k| k + 1);
    let mut counts = vec![0u64; d + 1];
    for f in faces {
        counts[f.dim] += 1;
    }
    counts[d] = 1;
    FVector(counts)
}

/// The face lattice: faces ordered by vertex-set inclusion, graded by
/// dimension. Cover relations connect consecutive dimensions only.
#[derive(Clone, Debug)]
pub struct FaceLattice {
    faces: Vec<Face>,
    /// For each face, indices of the (dim+1)-faces containing it.
    covers_up: Vec<Vec<usize>>,
}

/// Build the lattice from a deduplicated face list.
pub fn face_lattice(faces: &[Face]) -> FaceLattice {
    let mut sorted: Vec<Face> = faces.to_vec();
    sorted.sort_by(|a, b| (a.dim, &a.vertex_indices).cmp(&(b.dim, &b.vertex_indices)));
    let mut covers_up = vec![Vec::new(); sorted.len()];
    for (i, low) in sorted.iter().enumerate() {
        for (j, high) in sorted.iter().enumerate() {
            if high.dim == low.dim + 1 && is_subset(&low.vertex_indices, &high.vertex_indices) {
                covers_up[i].push(j);
            }
        }
    }
    FaceLattice {
        faces: sorted,
        covers_up,
    }
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    let mut it = b.iter();
    'outer: for x in a {
        for y in it.by_ref() {
            match y.cmp(x) {
                std::cmp::Ordering::Less => continue,
                std::cmp::Ordering::Equal => continue 'outer,
                std::cmp::Ordering::Greater => return false,
            }
        }
        return false;
    }
    true
}

impl FaceLattice {
    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    /// Indices of the faces of dimension `dim + 1` covering face `i`.
    pub fn covering(&self, i: usize) -> &[usize] {
        &self.covers_up[i]
    }

    pub fn faces_of_dim(&self, dim: usize) -> impl Iterator<Item = (usize, &Face)> {
        self.faces
            .iter()
            .enumerate()
            .filter(move |(_, f)| f.dim == dim)
    }
}
