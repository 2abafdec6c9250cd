//! Exact-arithmetic polytopes of vector-factorisations of prime powers.
//!
//! A *d-dimensional vector-factorisation* of `p^e` is a tuple of positive
//! integers whose product is `p^e`; its convex hull is a `d`-dimensional
//! lattice polytope once `e >= 2` and `d >= 2`. This crate constructs those
//! polytopes both ways:
//!
//! - as vertex sets, encoded by exponent vectors so the combinatorics stays
//!   independent of the base ([`factor`]),
//! - as facet-inequality systems indexed by regular vectors ([`regular`],
//!   [`polytope`]),
//!
//! computes their f-vectors and face lattices in closed form ([`faces`]),
//! and certifies every closed-form result against an independent brute-force
//! polyhedral oracle in exact rational arithmetic ([`oracle`]). The
//! [`general`] module extends the construction to arbitrary integers and to
//! diagonal completions of symmetric integer matrices with prescribed
//! determinant.
//!
//! All computations are exact: no floating point anywhere.
//!
//! ```
//! use primepoly::exact::rat_int;
//! use primepoly::faces::f_vector_formula;
//! use primepoly::polytope::{facets, hrep, vertices};
//!
//! // The polytope of 3-dimensional factorisations of p^2 is an octahedron-
//! // like solid with 6 vertices and 8 facets, for every base.
//! assert_eq!(vertices(3, 2).unwrap().len(), 6);
//! assert_eq!(hrep(3, 2, &rat_int(2)).unwrap().len(), 8);
//! assert_eq!(facets(3, 2, &rat_int(2)).unwrap().len(), 8);
//! assert_eq!(f_vector_formula(3, 2).unwrap().counts(), &[6, 12, 8, 1]);
//! ```

pub mod exact;
pub mod faces;
pub mod factor;
pub mod general;
pub mod oracle;
pub mod polytope;
pub mod regular;

pub use exact::{Int, Rat};
