//! H-representation, facets, sharpness and minimality certificates for the
//! polytope of d-dimensional vector-factorisations of `t^e`.
//!
//! For `d >= 2`, `e >= 2` and any base `t > 1` the polytope is cut out by
//!
//! - one upper inequality `sum x_i <= (d-1) + t^e`,
//! - `d` lower inequalities `x_i >= 1`,
//! - one regular inequality `sum t^{alpha_i} x_i >= lambda t^{mu+1} +
//!   (d-lambda) t^mu` per regular vector `alpha` of type `lambda`.
//!
//! The list is minimal for `d >= 3`; for `d = 2` the two lower inequalities
//! are implied by the rest and are emitted with a `redundant` flag so the
//! output shape stays uniform. Inequalities carry exponent-level data plus
//! the base and evaluate on demand, mirroring the vertex representation: one
//! combinatorial object serves every base, and facet identity is a set of
//! vertex indices, so cross-module comparisons are purely combinatorial.
//! Bases in `(0, 1)` would flip every inequality's orientation and are
//! rejected outright.

use crate::exact::{affine_rank, rat_pow, Rat};
use crate::factor::{compositions, ExponentVector};
use crate::regular::{enumerate_regular, RegularVector};
use itertools::Itertools;
use num_traits::{One, Signed, Zero};
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolytopeError {
    #[error("need d >= 2 and e >= 2, got d={d}, e={e}")]
    BadParameters { d: usize, e: usize },
    #[error("base t must be strictly greater than 1")]
    BaseNotAboveOne,
    #[error("point dimension {got} does not match d={expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("operation requires a regular facet")]
    NotRegularFacet,
    #[error("hypersimplex parameter {lambda} outside 1..={dm1}")]
    BadHypersimplex { lambda: usize, dm1: usize },
}

/// The `(d-1)`-dimensional hypersimplex of parameter `lambda`: the convex
/// hull of the 0/1 vectors of coordinate sum `lambda`. Every regular facet
/// is affinely equivalent to one of these.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Hypersimplex {
    d: usize,
    lambda: usize,
}

impl Hypersimplex {
    pub fn new(d: usize, lambda: usize) -> Result<Self, PolytopeError> {
        if d < 2 || lambda == 0 || lambda > d - 1 {
            return Err(PolytopeError::BadHypersimplex {
                lambda,
                dm1: d.saturating_sub(1),
            });
        }
        Ok(Hypersimplex { d, lambda })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn lambda(&self) -> usize {
        self.lambda
    }

    /// Supports of the vertices: the `lambda`-subsets of `{0, ..., d-1}` in
    /// lexicographic order.
    pub fn vertex_supports(&self) -> Vec<Vec<usize>> {
        (0..self.d).combinations(self.lambda).collect()
    }

    /// Vertices as exact 0/1 points, sorted lexicographically.
    pub fn vertices(&self) -> Vec<Vec<Rat>> {
        let mut out: Vec<Vec<Rat>> = self
            .vertex_supports()
            .into_iter()
            .map(|s| {
                let mut v = vec![Rat::zero(); self.d];
                for i in s {
                    v[i] = Rat::one();
                }
                v
            })
            .collect();
        out.sort();
        out
    }
}

/// Which of the three families an inequality belongs to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IneqKind {
    /// `sum t^{alpha_i} x_i >= lambda t^{mu+1} + (d-lambda) t^mu`.
    Regular(RegularVector),
    /// `sum x_i <= (d-1) + t^e`.
    Upper,
    /// `x_i >= 1` (0-based coordinate).
    Lower(usize),
}

/// One facet inequality of the polytope for parameters `(d, e)` at base `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Inequality {
    kind: IneqKind,
    d: usize,
    e: usize,
    base: Rat,
    redundant: bool,
}

impl Inequality {
    pub fn kind(&self) -> &IneqKind {
        &self.kind
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn e(&self) -> usize {
        self.e
    }

    pub fn base(&self) -> &Rat {
        &self.base
    }

    /// True for the `x_i >= 1` inequalities when `d = 2`: they hold but are
    /// implied by the others.
    pub fn redundant(&self) -> bool {
        self.redundant
    }

    /// Slack `lhs - rhs` oriented so the inequality reads `slack >= 0`.
    pub fn slack(&self, x: &[Rat]) -> Result<Rat, PolytopeError> {
        if x.len() != self.d {
            return Err(PolytopeError::DimensionMismatch {
                expected: self.d,
                got: x.len(),
            });
        }
        let t = &self.base;
        Ok(match &self.kind {
            IneqKind::Regular(rv) => {
                let mut acc = Rat::zero();
                for (&a, xi) in rv.alpha().iter().zip(x) {
                    acc += rat_pow(t, a) * xi;
                }
                let lambda = rv.lambda();
                let rhs = rat_pow(t, rv.mu() + 1) * Rat::from_integer(lambda.into())
                    + rat_pow(t, rv.mu()) * Rat::from_integer((self.d - lambda).into());
                acc - rhs
            }
            IneqKind::Upper => {
                let bound = Rat::from_integer((self.d - 1).into()) + rat_pow(t, self.e);
                bound - x.iter().sum::<Rat>()
            }
            IneqKind::Lower(i) => x[*i].clone() - Rat::one(),
        })
    }

    pub fn satisfied(&self, x: &[Rat]) -> Result<bool, PolytopeError> {
        Ok(!self.slack(x)?.is_negative())
    }

    pub fn sharp_at(&self, x: &[Rat]) -> Result<bool, PolytopeError> {
        Ok(self.slack(x)?.is_zero())
    }

    /// The inequality as a cdd-style row `(b, a)` meaning `b + a.x >= 0`.
    pub fn halfspace_row(&self) -> (Rat, Vec<Rat>) {
        let t = &self.base;
        match &self.kind {
            IneqKind::Regular(rv) => {
                let lambda = rv.lambda();
                let b = -(rat_pow(t, rv.mu() + 1) * Rat::from_integer(lambda.into())
                    + rat_pow(t, rv.mu()) * Rat::from_integer((self.d - lambda).into()));
                (b, rv.alpha().iter().map(|&a| rat_pow(t, a)).collect())
            }
            IneqKind::Upper => {
                let b = Rat::from_integer((self.d - 1).into()) + rat_pow(t, self.e);
                (b, vec![-Rat::one(); self.d])
            }
            IneqKind::Lower(i) => {
                let mut a = vec![Rat::zero(); self.d];
                a[*i] = Rat::one();
                (-Rat::one(), a)
            }
        }
    }
}

fn check_params(d: usize, e: usize) -> Result<(), PolytopeError> {
    if d < 2 || e < 2 {
        return Err(PolytopeError::BadParameters { d, e });
    }
    Ok(())
}

fn check_base(t: &Rat) -> Result<(), PolytopeError> {
    if *t <= Rat::one() {
        return Err(PolytopeError::BaseNotAboveOne);
    }
    Ok(())
}

/// The vertex list in its canonical lexicographic order.
pub fn vertices(d: usize, e: usize) -> Result<Vec<ExponentVector>, PolytopeError> {
    check_params(d, e)?;
    Ok(compositions(e, d).expect("d >= 2").collect())
}

/// The vertices evaluated at base `t`, in the canonical order.
pub fn vertex_points(d: usize, e: usize, t: &Rat) -> Result<Vec<Vec<Rat>>, PolytopeError> {
    check_base(t)?;
    Ok(vertices(d, e)?
        .iter()
        .map(|ev| ev.evaluate(t).expect("t > 1 is positive"))
        .collect())
}

/// The complete inequality description: one upper, `d` lower, and the
/// regular inequalities ordered by type ascending, then by the lexicographic
/// order of the underlying compositions of `e - lambda`.
pub fn hrep(d: usize, e: usize, t: &Rat) -> Result<Vec<Inequality>, PolytopeError> {
    check_params(d, e)?;
    check_base(t)?;
    let mut out = Vec::new();
    out.push(Inequality {
        kind: IneqKind::Upper,
        d,
        e,
        base: t.clone(),
        redundant: false,
    });
    for i in 0..d {
        out.push(Inequality {
            kind: IneqKind::Lower(i),
            d,
            e,
            base: t.clone(),
            redundant: d == 2,
        });
    }
    for lambda in 1..=e.min(d - 1) {
        for rv in enumerate_regular(d, e, lambda).expect("parameters validated") {
            out.push(Inequality {
                kind: IneqKind::Regular(rv),
                d,
                e,
                base: t.clone(),
                redundant: false,
            });
        }
    }
    Ok(out)
}

/// Exact membership test against an inequality system.
pub fn contains(x: &[Rat], system: &[Inequality]) -> Result<bool, PolytopeError> {
    for ineq in system {
        if !ineq.satisfied(x)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The set of vertices on which an inequality is tight, as exponent vectors
/// in lexicographic order.
///
/// For a regular inequality of vector `alpha` this is
/// `{ (mu - alpha_i + eps_i)_i : eps a vertex of Delta(lambda) }`; for the
/// upper inequality the `d` vectors `e * e_i`; for `x_i >= 1` all exponent
/// vectors with `beta_i = 0`.
pub fn sharp_set(ineq: &Inequality) -> Vec<ExponentVector> {
    let d = ineq.d;
    let e = ineq.e;
    let mut out: Vec<ExponentVector> = match &ineq.kind {
        IneqKind::Regular(rv) => {
            let base: Vec<usize> = rv.alpha().iter().map(|&a| rv.mu() - a).collect();
            Hypersimplex::new(d, rv.lambda())
                .expect("regular type is a valid hypersimplex parameter")
                .vertex_supports()
                .into_iter()
                .map(|support| {
                    let mut beta = base.clone();
                    for i in support {
                        beta[i] += 1;
                    }
                    ExponentVector::new(beta)
                })
                .collect()
        }
        IneqKind::Upper => (0..d)
            .map(|i| {
                let mut beta = vec![0; d];
                beta[i] = e;
                ExponentVector::new(beta)
            })
            .collect(),
        IneqKind::Lower(i) => compositions(e, d - 1)
            .expect("d >= 2")
            .map(|ev| {
                let mut beta = ev.entries().to_vec();
                beta.insert(*i, 0);
                ExponentVector::new(beta)
            })
            .collect(),
    };
    out.sort();
    out
}

/// Facet classification mirroring the inequality families.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FacetClass {
    Regular { lambda: usize },
    Upper,
    Lower(usize),
}

/// A facet given combinatorially: its inequality plus the sorted indices of
/// its vertices in the canonical vertex list.
#[derive(Clone, Debug)]
pub struct FacetDescriptor {
    pub inequality: Inequality,
    pub vertex_indices: Vec<usize>,
    pub class: FacetClass,
}

/// All facets: every non-redundant inequality paired with its sharp set.
/// For `d >= 3` that is all of `hrep`; for `d = 2` the two lower
/// inequalities drop out and the polygon has `e + 1` edges.
pub fn facets(d: usize, e: usize, t: &Rat) -> Result<Vec<FacetDescriptor>, PolytopeError> {
    let index_of: HashMap<ExponentVector, usize> = vertices(d, e)?
        .into_iter()
        .enumerate()
        .map(|(i, ev)| (ev, i))
        .collect();
    let mut out = Vec::new();
    for ineq in hrep(d, e, t)? {
        if ineq.redundant() {
            continue;
        }
        let class = match ineq.kind() {
            IneqKind::Regular(rv) => FacetClass::Regular {
                lambda: rv.lambda(),
            },
            IneqKind::Upper => FacetClass::Upper,
            IneqKind::Lower(i) => FacetClass::Lower(*i),
        };
        let mut vertex_indices: Vec<usize> = sharp_set(&ineq)
            .iter()
            .map(|ev| *index_of.get(ev).expect("sharp vertices are vertices"))
            .collect();
        vertex_indices.sort_unstable();
        out.push(FacetDescriptor {
            inequality: ineq,
            vertex_indices,
            class,
        });
    }
    Ok(out)
}

/// Apply the coordinatewise affine map
/// `x_i -> (x_i - t^{m_i}) / (t^{m_i+1} - t^{m_i})`
/// to a regular facet's evaluated vertices, where `m` is the coordinate
/// minimum of the facet's exponent vectors. The image is exactly the vertex
/// set of the hypersimplex of the facet's type, independently of `t`.
pub fn normalize_facet(facet: &FacetDescriptor) -> Result<Vec<Vec<Rat>>, PolytopeError> {
    let rv = match facet.inequality.kind() {
        IneqKind::Regular(rv) => rv,
        _ => return Err(PolytopeError::NotRegularFacet),
    };
    let t = facet.inequality.base();
    let sharp = sharp_set(&facet.inequality);
    let m: Vec<usize> = rv.alpha().iter().map(|&a| rv.mu() - a).collect();
    let scale: Vec<Rat> = m
        .iter()
        .map(|&mi| rat_pow(t, mi + 1) - rat_pow(t, mi))
        .collect();
    Ok(sharp
        .iter()
        .map(|ev| {
            let x = ev.evaluate(t).expect("t > 1 is positive");
            x.into_iter()
                .zip(&m)
                .zip(&scale)
                .map(|((xi, &mi), s)| (xi - rat_pow(t, mi)) / s)
                .collect()
        })
        .collect())
}

/// Outcome of the facet-centroid certificate for one inequality.
#[derive(Clone, Debug)]
pub struct CertificateReport {
    /// Position in the `hrep` order.
    pub index: usize,
    pub kind: IneqKind,
    /// Affine rank of the evaluated sharp set (`d - 1` for a true facet).
    pub sharp_affine_rank: usize,
    /// Centroid of the sharp set lies on the inequality's hyperplane.
    pub equality_on_self: bool,
    /// Centroid is strictly inside every other inequality.
    pub strict_on_others: bool,
    /// Whether the certificate is expected to pass: everything for `d >= 3`,
    /// everything except the lower inequalities for `d = 2`.
    pub expected_facet: bool,
}

impl CertificateReport {
    pub fn passed(&self) -> bool {
        self.equality_on_self && self.strict_on_others
    }

    /// True when the outcome matches the prediction.
    pub fn as_predicted(&self) -> bool {
        self.passed() == self.expected_facet
    }
}

/// Certify minimality of the inequality list: for every inequality, the
/// centroid of its sharp vertices must satisfy it with equality and satisfy
/// every other inequality strictly, which exhibits the inequality as
/// facet-defining and hence non-removable. For `d = 2` the two lower
/// inequalities are predicted to fail strictness (their sharp set is a
/// single vertex).
pub fn minimality_certificate(
    d: usize,
    e: usize,
    t: &Rat,
) -> Result<Vec<CertificateReport>, PolytopeError> {
    let system = hrep(d, e, t)?;
    let mut reports = Vec::with_capacity(system.len());
    for (index, ineq) in system.iter().enumerate() {
        let sharp = sharp_set(ineq);
        let points: Vec<Vec<Rat>> = sharp
            .iter()
            .map(|ev| ev.evaluate(t).expect("t > 1 is positive"))
            .collect();
        let n = Rat::from_integer(points.len().into());
        let centroid: Vec<Rat> = (0..d)
            .map(|k| points.iter().map(|p| &p[k]).sum::<Rat>() / &n)
            .collect();
        let equality_on_self = ineq.sharp_at(&centroid)?;
        let mut strict_on_others = true;
        for (j, other) in system.iter().enumerate() {
            if j != index && !other.slack(&centroid)?.is_positive() {
                strict_on_others = false;
                break;
            }
        }
        reports.push(CertificateReport {
            index,
            kind: ineq.kind().clone(),
            sharp_affine_rank: affine_rank(&points).expect("sharp set is nonempty"),
            equality_on_self,
            strict_on_others,
            expected_facet: !ineq.redundant(),
        });
    }
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, rat_int};
    use crate::factor::binomial;
    use std::collections::BTreeSet;

    fn t2() -> Rat {
        rat_int(2)
    }

    fn expected_facet_count(d: usize, e: usize) -> u64 {
        let regular: u64 = (1..=e.min(d - 1))
            .map(|l| binomial(e - l + d - 1, d - 1))
            .sum();
        let exceptional = if d == 2 { 1 } else { d as u64 + 1 };
        exceptional + regular
    }

    #[test]
    fn hrep_counts_and_flags() {
        let h = hrep(3, 2, &t2()).unwrap();
        assert_eq!(h.len(), 8);
        assert!(h.iter().all(|i| !i.redundant()));

        let h = hrep(2, 3, &t2()).unwrap();
        assert_eq!(h.len(), 6);
        let redundant: Vec<_> = h.iter().filter(|i| i.redundant()).collect();
        assert_eq!(redundant.len(), 2);
        assert!(redundant
            .iter()
            .all(|i| matches!(i.kind(), IneqKind::Lower(_))));

        assert_eq!(
            hrep(3, 2, &rat_int(1)).unwrap_err(),
            PolytopeError::BaseNotAboveOne
        );
        assert_eq!(
            hrep(3, 2, &rat(1, 2)).unwrap_err(),
            PolytopeError::BaseNotAboveOne
        );
        assert!(hrep(1, 2, &t2()).is_err());
    }

    #[test]
    fn regular_type_two_inequality_of_3_2() {
        // alpha = (0,0,0), mu = 0: x1 + x2 + x3 >= 2t + 1.
        let h = hrep(3, 2, &t2()).unwrap();
        let ineq = h
            .iter()
            .find(|i| match i.kind() {
                IneqKind::Regular(rv) => rv.lambda() == 2,
                _ => false,
            })
            .unwrap();
        let (b, a) = ineq.halfspace_row();
        assert_eq!(b, rat_int(-5));
        assert_eq!(a, vec![rat_int(1), rat_int(1), rat_int(1)]);
    }

    #[test]
    fn membership_examples() {
        let h = hrep(3, 2, &t2()).unwrap();
        let pts = vertex_points(3, 2, &t2()).unwrap();
        for p in &pts {
            assert!(contains(p, &h).unwrap());
        }
        assert!(!contains(&[rat_int(1), rat_int(1), rat_int(1)], &h).unwrap());
        let n = Rat::from_integer(pts.len().into());
        let centroid: Vec<Rat> = (0..3)
            .map(|k| pts.iter().map(|p| &p[k]).sum::<Rat>() / &n)
            .collect();
        assert!(contains(&centroid, &h).unwrap());
        assert!(contains(&[rat_int(1)], &h).is_err());
    }

    #[test]
    fn sharp_set_examples() {
        let h = hrep(3, 2, &t2()).unwrap();
        let regular = h
            .iter()
            .find(|i| matches!(i.kind(), IneqKind::Regular(rv) if rv.alpha() == [1, 1, 0]))
            .unwrap();
        let sharp: BTreeSet<Vec<usize>> = sharp_set(regular)
            .iter()
            .map(|ev| ev.entries().to_vec())
            .collect();
        let expect: BTreeSet<Vec<usize>> = [vec![0, 1, 1], vec![1, 0, 1], vec![0, 0, 2]]
            .into_iter()
            .collect();
        assert_eq!(sharp, expect);

        let upper = h
            .iter()
            .find(|i| matches!(i.kind(), IneqKind::Upper))
            .unwrap();
        let sharp: BTreeSet<Vec<usize>> = sharp_set(upper)
            .iter()
            .map(|ev| ev.entries().to_vec())
            .collect();
        let expect: BTreeSet<Vec<usize>> = [vec![2, 0, 0], vec![0, 2, 0], vec![0, 0, 2]]
            .into_iter()
            .collect();
        assert_eq!(sharp, expect);

        let lower = h
            .iter()
            .find(|i| matches!(i.kind(), IneqKind::Lower(0)))
            .unwrap();
        let sharp = sharp_set(lower);
        assert_eq!(sharp.len(), 3);
        assert!(sharp.iter().all(|ev| ev.entries()[0] == 0));
    }

    #[test]
    fn sharpness_is_exact_on_every_vertex() {
        for (d, e) in [(2usize, 2usize), (2, 4), (3, 2), (3, 3), (4, 2), (4, 3)] {
            for t in [rat_int(2), rat(5, 2)] {
                let verts = vertices(d, e).unwrap();
                let pts = vertex_points(d, e, &t).unwrap();
                for ineq in hrep(d, e, &t).unwrap() {
                    let sharp: BTreeSet<ExponentVector> = sharp_set(&ineq).into_iter().collect();
                    for (ev, p) in verts.iter().zip(&pts) {
                        let slack = ineq.slack(p).unwrap();
                        assert!(!slack.is_negative(), "violated at {ev:?} (d={d} e={e})");
                        assert_eq!(
                            slack.is_zero(),
                            sharp.contains(ev),
                            "sharpness mismatch at {ev:?} for {:?} (d={d} e={e})",
                            ineq.kind()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn facet_counts_and_rank() {
        assert_eq!(facets(3, 2, &t2()).unwrap().len(), 8);
        assert_eq!(facets(3, 3, &t2()).unwrap().len(), 13);
        assert_eq!(facets(4, 2, &t2()).unwrap().len(), 10);
        assert_eq!(facets(2, 3, &t2()).unwrap().len(), 4);
        for (d, e) in [(2usize, 3usize), (3, 2), (3, 4), (4, 2), (5, 2)] {
            let fs = facets(d, e, &t2()).unwrap();
            assert_eq!(fs.len() as u64, expected_facet_count(d, e), "d={d} e={e}");
            let pts = vertex_points(d, e, &t2()).unwrap();
            for f in &fs {
                let facet_pts: Vec<Vec<Rat>> =
                    f.vertex_indices.iter().map(|&i| pts[i].clone()).collect();
                assert_eq!(affine_rank(&facet_pts).unwrap(), d - 1);
            }
        }
    }

    #[test]
    fn facet_indices_do_not_depend_on_base() {
        for (d, e) in [(2usize, 4usize), (3, 3), (4, 2)] {
            let families: Vec<Vec<Vec<usize>>> = [rat_int(2), rat_int(3), rat(5, 2)]
                .iter()
                .map(|t| {
                    facets(d, e, t)
                        .unwrap()
                        .into_iter()
                        .map(|f| f.vertex_indices)
                        .collect()
                })
                .collect();
            assert_eq!(families[0], families[1]);
            assert_eq!(families[0], families[2]);
        }
    }

    #[test]
    fn normalization_hits_hypersimplex_vertices() {
        for t in [rat_int(2), rat_int(3), rat(5, 2)] {
            for f in facets(3, 2, &t).unwrap() {
                let lambda = match &f.class {
                    FacetClass::Regular { lambda } => *lambda,
                    _ => {
                        assert!(normalize_facet(&f).is_err());
                        continue;
                    }
                };
                let mut image = normalize_facet(&f).unwrap();
                image.sort();
                assert_eq!(image, Hypersimplex::new(3, lambda).unwrap().vertices());
            }
        }
    }

    #[test]
    fn minimality_certificates() {
        let reports = minimality_certificate(3, 2, &t2()).unwrap();
        assert_eq!(reports.len(), 8);
        assert!(reports.iter().all(|r| r.passed() && r.as_predicted()));
        assert!(reports.iter().all(|r| r.sharp_affine_rank == 2));

        let reports = minimality_certificate(4, 3, &t2()).unwrap();
        assert!(reports.iter().all(|r| r.passed() && r.as_predicted()));

        let reports = minimality_certificate(2, 3, &t2()).unwrap();
        for r in &reports {
            match r.kind {
                IneqKind::Lower(_) => {
                    assert!(!r.passed() && r.as_predicted());
                    assert!(r.equality_on_self);
                    assert!(!r.strict_on_others);
                    assert_eq!(r.sharp_affine_rank, 0);
                }
                _ => assert!(r.passed() && r.as_predicted()),
            }
        }
    }

    #[test]
    fn hypersimplex_vertices_are_binary_with_fixed_sum() {
        let hs = Hypersimplex::new(4, 2).unwrap();
        let vs = hs.vertices();
        assert_eq!(vs.len() as u64, binomial(4, 2));
        for v in &vs {
            assert!(v.iter().all(|c| c.is_zero() || c.is_one()));
            assert_eq!(v.iter().sum::<Rat>(), rat_int(2));
        }
        assert!(Hypersimplex::new(3, 0).is_err());
        assert!(Hypersimplex::new(3, 3).is_err());
    }
}
