//! Regular vectors: the combinatorial index set of the non-obvious facet
//! inequalities.
//!
//! For `e >= 2`, `d >= 2` and a type `lambda` in `{1, ..., min(e, d-1)}`, a
//! regular vector is an `alpha` in `N^d` with
//!
//! - `min(alpha) = 0`,
//! - `max(alpha) * d < e + sum(alpha)`,
//! - `e + sum(alpha) == lambda  (mod d)`.
//!
//! Its level `mu` satisfies `mu*d + lambda = e + sum(alpha)`. The map
//! `alpha -> (mu - alpha_1, ..., mu - alpha_d)` is a bijection onto the
//! exponent vectors of sum `e - lambda`, with inverse
//! `beta -> (B - beta_1, ..., B - beta_d)` where `B = max(beta)`; regular
//! vectors are therefore enumerated through that bijection rather than by
//! filtering a search box, which is output-linear and doubles as a
//! cross-check against the direct filter in the tests.

use crate::factor::{compositions, ExponentVector};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RegularError {
    #[error("need d >= 2 and e >= 2, got d={d}, e={e}")]
    BadParameters { d: usize, e: usize },
    #[error("type lambda={lambda} outside 1..=min(e={e}, d-1={dm1})")]
    LambdaOutOfRange { lambda: usize, e: usize, dm1: usize },
}

/// Why a vector fails to be regular.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NotRegularReason {
    /// `min(alpha) != 0`.
    MinNotZero,
    /// `max(alpha) * d >= e + sum(alpha)`.
    MaxTooLarge,
    /// `e + sum(alpha)` is divisible by `d`, so no admissible type exists.
    ResidueZero,
    /// The residue exceeds `min(e, d-1)`.
    ResidueTooLarge,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Classification {
    Regular(RegularVector),
    NotRegular(NotRegularReason),
}

/// A validated regular vector together with its type and level.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RegularVector {
    alpha: Vec<usize>,
    lambda: usize,
    mu: usize,
}

impl RegularVector {
    pub fn alpha(&self) -> &[usize] {
        &self.alpha
    }

    pub fn dim(&self) -> usize {
        self.alpha.len()
    }

    /// Type `lambda` in `{1, ..., min(e, d-1)}`.
    pub fn lambda(&self) -> usize {
        self.lambda
    }

    /// Level `mu` with `mu*d + lambda = e + sum(alpha)`.
    pub fn mu(&self) -> usize {
        self.mu
    }
}

/// Check the three defining conditions for `alpha` against `(d, e)` and, on
/// success, fill in the type and level.
pub fn classify(alpha: &[usize], e: usize) -> Result<Classification, RegularError> {
    let d = alpha.len();
    if d < 2 || e < 2 {
        return Err(RegularError::BadParameters { d, e });
    }
    let min = *alpha.iter().min().expect("nonempty");
    let max = *alpha.iter().max().expect("nonempty");
    let total = e + alpha.iter().sum::<usize>();
    if min != 0 {
        return Ok(Classification::NotRegular(NotRegularReason::MinNotZero));
    }
    let lambda = total % d;
    if lambda == 0 {
        return Ok(Classification::NotRegular(NotRegularReason::ResidueZero));
    }
    if lambda > e.min(d - 1) {
        return Ok(Classification::NotRegular(
            NotRegularReason::ResidueTooLarge,
        ));
    }
    if max * d >= total {
        return Ok(Classification::NotRegular(NotRegularReason::MaxTooLarge));
    }
    let mu = total / d;
    Ok(Classification::Regular(RegularVector {
        alpha: alpha.to_vec(),
        lambda,
        mu,
    }))
}

/// The forward map: `beta_i = mu - alpha_i`, an exponent vector of sum
/// `e - lambda`.
pub fn phi(rv: &RegularVector) -> ExponentVector {
    ExponentVector::new(rv.alpha.iter().map(|&a| rv.mu - a).collect())
}

/// The inverse map: `alpha_i = B - beta_i` with `B = max(beta)`, a regular
/// vector of type `lambda = e - sum(beta)` and level `mu = B`.
pub fn psi(beta: &ExponentVector, e: usize) -> Result<RegularVector, RegularError> {
    let d = beta.dim();
    if d < 2 || e < 2 {
        return Err(RegularError::BadParameters { d, e });
    }
    let sum = beta.degree();
    let dm1 = d - 1;
    if sum >= e || e - sum > e.min(dm1) {
        let lambda = e.saturating_sub(sum);
        return Err(RegularError::LambdaOutOfRange { lambda, e, dm1 });
    }
    let lambda = e - sum;
    let b = *beta.entries().iter().max().expect("nonempty");
    let alpha: Vec<usize> = beta.entries().iter().map(|&v| b - v).collect();
    Ok(RegularVector {
        alpha,
        lambda,
        mu: b,
    })
}

/// All regular vectors of type `lambda`, produced as `psi` of the
/// compositions of `e - lambda` in lexicographic order. There are
/// `C(e-lambda+d-1, d-1)` of them.
pub fn enumerate_regular(
    d: usize,
    e: usize,
    lambda: usize,
) -> Result<impl Iterator<Item = RegularVector>, RegularError> {
    if d < 2 || e < 2 {
        return Err(RegularError::BadParameters { d, e });
    }
    if lambda == 0 || lambda > e.min(d - 1) {
        return Err(RegularError::LambdaOutOfRange {
            lambda,
            e,
            dm1: d - 1,
        });
    }
    let comps = compositions(e - lambda, d).expect("d >= 2");
    Ok(comps.map(move |beta| psi(&beta, e).expect("compositions of e-lambda are in range")))
}
