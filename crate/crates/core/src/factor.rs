//! Enumeration of vector-factorisations.
//!
//! A d-dimensional vector-factorisation of `p^e` is determined by its
//! exponent vector `beta` with `sum beta_i = e`, i.e. a weak composition of
//! `e` into `d` parts. Everything downstream works in exponent space and
//! only evaluates to geometric coordinates `(t^{beta_1}, ..., t^{beta_d})`
//! on demand, since the combinatorics does not depend on the base.
//!
//! Enumeration order is lexicographic throughout, so vertex indices are
//! stable across runs and across modules.

use crate::exact::{rat_pow, Int, Rat};
use num_traits::Signed;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FactorError {
    #[error("dimension must be at least 1")]
    ZeroDimension,
    #[error("base must be positive")]
    NonPositiveBase,
    #[error("integer must be at least 2")]
    TooSmall,
}

/// Exponent vector of a vector-factorisation of `p^e`: nonnegative entries
/// summing to `e`. Ordering is lexicographic on the entries.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExponentVector {
    beta: Vec<usize>,
}

impl ExponentVector {
    pub fn new(beta: Vec<usize>) -> Self {
        ExponentVector { beta }
    }

    pub fn dim(&self) -> usize {
        self.beta.len()
    }

    /// The exponent sum `e`.
    pub fn degree(&self) -> usize {
        self.beta.iter().sum()
    }

    pub fn entries(&self) -> &[usize] {
        &self.beta
    }

    /// Evaluate to the point `(t^{beta_1}, ..., t^{beta_d})`, exactly.
    pub fn evaluate(&self, t: &Rat) -> Result<Vec<Rat>, FactorError> {
        if !t.is_positive() {
            return Err(FactorError::NonPositiveBase);
        }
        Ok(self.beta.iter().map(|&b| rat_pow(t, b)).collect())
    }
}

/// Binomial coefficient `C(n, k)`; zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    u64::try_from(acc).expect("binomial fits in u64 at desk scale")
}

/// All weak compositions of `e` into `d` parts, in ascending lexicographic
/// order, starting at `(0, ..., 0, e)` and ending at `(e, 0, ..., 0)`.
/// There are `C(e+d-1, d-1)` of them.
pub fn compositions(e: usize, d: usize) -> Result<Compositions, FactorError> {
    if d == 0 {
        return Err(FactorError::ZeroDimension);
    }
    let mut first = vec![0; d];
    first[d - 1] = e;
    Ok(Compositions { next: Some(first) })
}

#[derive(Debug)]
pub struct Compositions {
    next: Option<Vec<usize>>,
}

impl Iterator for Compositions {
    type Item = ExponentVector;

    fn next(&mut self) -> Option<ExponentVector> {
        let current = self.next.take()?;
        let d = current.len();
        // Lexicographic successor: bump the rightmost entry (excluding the
        // last) that has weight strictly to its right, then move all of that
        // weight minus one to the last position.
        let mut suffix: usize = current[d - 1];
        for i in (0..d.saturating_sub(1)).rev() {
            if suffix > 0 {
                let mut next = current.clone();
                next[i] += 1;
                for v in next[i + 1..].iter_mut() {
                    *v = 0;
                }
                next[d - 1] = suffix - 1;
                self.next = Some(next);
                break;
            }
            suffix += current[i];
        }
        Some(ExponentVector::new(current))
    }
}

/// Exponent vectors with weakly decreasing entries: one per partition of `e`
/// into at most `d` parts.
pub fn decreasing_factorizations(
    e: usize,
    d: usize,
) -> Result<impl Iterator<Item = ExponentVector>, FactorError> {
    Ok(compositions(e, d)?.filter(|ev| ev.entries().windows(2).all(|w| w[0] >= w[1])))
}

/// Sorted prime factorization of `n >= 2` by trial division (desk scale).
pub fn prime_factorize(n: u64) -> Result<Vec<(u64, u32)>, FactorError> {
    if n < 2 {
        return Err(FactorError::TooSmall);
    }
    let mut n = n;
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut mult = 0;
            while n.is_multiple_of(p) {
                n /= p;
                mult += 1;
            }
            out.push((p, mult));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    Ok(out)
}

/// One d-dimensional vector-factorisation of a general integer: an exponent
/// vector per prime divisor.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GeneralFactorization {
    factors: Vec<(u64, ExponentVector)>,
}

impl GeneralFactorization {
    pub fn factors(&self) -> &[(u64, ExponentVector)] {
        &self.factors
    }

    /// The factorisation as a point of `N^d`: coordinate `i` is the product
    /// of `p^{beta_i}` over all prime divisors.
    pub fn point(&self) -> Vec<Int> {
        let d = self.factors[0].1.dim();
        let mut coords = vec![Int::from(1u32); d];
        for (p, ev) in &self.factors {
            for (c, &b) in coords.iter_mut().zip(ev.entries()) {
                *c *= Int::from(*p).pow(b as u32);
            }
        }
        coords
    }
}

/// All d-dimensional vector-factorisations of `n >= 2`: the cartesian
/// product of the per-prime compositions, first prime outermost. The total
/// count is the product of `C(e_j+d-1, d-1)` over the prime multiplicities.
pub fn vector_factorizations(
    n: u64,
    d: usize,
) -> Result<impl Iterator<Item = GeneralFactorization>, FactorError> {
    if d == 0 {
        return Err(FactorError::ZeroDimension);
    }
    let primes = prime_factorize(n)?;
    let per_prime: Vec<(u64, Vec<ExponentVector>)> = primes
        .into_iter()
        .map(|(p, e)| Ok((p, compositions(e as usize, d)?.collect())))
        .collect::<Result<_, FactorError>>()?;
    let slots = per_prime.len();
    Ok(CartesianFactorizations {
        per_prime,
        odometer: Some(vec![0; slots]),
    })
}

struct CartesianFactorizations {
    per_prime: Vec<(u64, Vec<ExponentVector>)>,
    odometer: Option<Vec<usize>>,
}

impl Iterator for CartesianFactorizations {
    type Item = GeneralFactorization;

    fn next(&mut self) -> Option<GeneralFactorization> {
        let idx = self.odometer.take()?;
        let item = GeneralFactorization {
            factors: self
                .per_prime
                .iter()
                .zip(&idx)
                .map(|((p, list), &i)| (*p, list[i].clone()))
                .collect(),
        };
        // Advance with the last prime fastest, keeping overall order
        // lexicographic in the concatenated exponent tuple.
        let mut next = idx;
        for pos in (0..next.len()).rev() {
            next[pos] += 1;
            if next[pos] < self.per_prime[pos].1.len() {
                self.odometer = Some(next);
                break;
            }
            next[pos] = 0;
        }
        Some(item)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, rat_int};
    use std::collections::BTreeSet;

    #[test]
    fn composition_base_cases() {
        let zero: Vec<_> = compositions(0, 3).unwrap().collect();
        assert_eq!(zero, vec![ExponentVector::new(vec![0, 0, 0])]);
        let basis: Vec<_> = compositions(1, 3).unwrap().collect();
        assert_eq!(
            basis,
            vec![
                ExponentVector::new(vec![0, 0, 1]),
                ExponentVector::new(vec![0, 1, 0]),
                ExponentVector::new(vec![1, 0, 0]),
            ]
        );
        assert_eq!(compositions(2, 3).unwrap().count(), 6);
        assert_eq!(compositions(3, 0).unwrap_err(), FactorError::ZeroDimension);
    }

    #[test]
    fn composition_counts_match_binomial() {
        for e in 0..=8 {
            for d in 1..=6 {
                let count = compositions(e, d).unwrap().count() as u64;
                assert_eq!(count, binomial(e + d - 1, d - 1), "e={e} d={d}");
            }
        }
    }

    #[test]
    fn compositions_are_strictly_lex_increasing() {
        let all: Vec<_> = compositions(5, 4).unwrap().collect();
        for w in all.windows(2) {
            assert!(w[0] < w[1]);
        }
        assert!(all.iter().all(|ev| ev.degree() == 5));
    }

    #[test]
    fn evaluate_examples() {
        let t2 = rat_int(2);
        let zero = ExponentVector::new(vec![0, 0, 0]);
        assert_eq!(
            zero.evaluate(&t2).unwrap(),
            vec![rat_int(1), rat_int(1), rat_int(1)]
        );
        let squared = ExponentVector::new(vec![2, 0, 0]);
        assert_eq!(
            squared.evaluate(&t2).unwrap(),
            vec![rat_int(4), rat_int(1), rat_int(1)]
        );
        let th = rat(3, 2);
        let mixed = ExponentVector::new(vec![1, 1, 0]);
        assert_eq!(
            mixed.evaluate(&th).unwrap(),
            vec![rat(3, 2), rat(3, 2), rat_int(1)]
        );
        assert_eq!(
            mixed.evaluate(&rat_int(0)),
            Err(FactorError::NonPositiveBase)
        );
    }

    #[test]
    fn evaluate_is_injective_for_fixed_base_above_one() {
        for t in [rat_int(2), rat(3, 2)] {
            let mut seen = BTreeSet::new();
            for ev in compositions(4, 3).unwrap() {
                assert!(seen.insert(ev.evaluate(&t).unwrap()), "collision at {ev:?}");
            }
        }
    }

    #[test]
    fn factorizations_of_six() {
        let pts: Vec<Vec<Int>> = vector_factorizations(6, 2)
            .unwrap()
            .map(|f| f.point())
            .collect();
        let expect: BTreeSet<Vec<Int>> = [[1, 6], [2, 3], [3, 2], [6, 1]]
            .iter()
            .map(|p| p.iter().map(|&v| Int::from(v)).collect())
            .collect();
        assert_eq!(pts.len(), 4);
        assert_eq!(pts.into_iter().collect::<BTreeSet<_>>(), expect);
    }

    #[test]
    fn factorization_counts() {
        assert_eq!(vector_factorizations(4, 2).unwrap().count(), 3);
        assert_eq!(vector_factorizations(7, 3).unwrap().count(), 3);
        // Count is multiplicative over prime powers: 12 = 2^2 * 3.
        assert_eq!(
            vector_factorizations(12, 2).unwrap().count() as u64,
            binomial(3, 1) * binomial(2, 1)
        );
        assert!(vector_factorizations(1, 2).is_err());
    }

    #[test]
    fn factorization_products_recover_n() {
        for n in [6u64, 12, 30, 60] {
            for d in 1..=3 {
                for f in vector_factorizations(n, d).unwrap() {
                    let prod: Int = f.point().into_iter().product();
                    assert_eq!(prod, Int::from(n));
                }
            }
        }
    }

    /// Independent oracle: partitions of `n` into at most `k` parts via the
    /// standard recurrence p(n,k) = p(n-k,k) + p(n,k-1).
    fn partitions_at_most(n: usize, k: usize) -> u64 {
        if n == 0 {
            return 1;
        }
        if k == 0 {
            return 0;
        }
        let tail = if n >= k {
            partitions_at_most(n - k, k)
        } else {
            0
        };
        tail + partitions_at_most(n, k - 1)
    }

    #[test]
    fn decreasing_factorizations_match_partition_counts() {
        let got: Vec<_> = decreasing_factorizations(4, 2).unwrap().collect();
        assert_eq!(
            got,
            vec![
                ExponentVector::new(vec![2, 2]),
                ExponentVector::new(vec![3, 1]),
                ExponentVector::new(vec![4, 0]),
            ]
        );
        assert_eq!(decreasing_factorizations(3, 3).unwrap().count(), 3);
        assert_eq!(decreasing_factorizations(1, 5).unwrap().count(), 1);
        for e in 0..=10 {
            for d in 1..=6 {
                let count = decreasing_factorizations(e, d).unwrap().count() as u64;
                assert_eq!(count, partitions_at_most(e, d), "e={e} d={d}");
            }
        }
    }

    #[test]
    fn prime_factorize_examples() {
        assert_eq!(prime_factorize(12).unwrap(), vec![(2, 2), (3, 1)]);
        assert_eq!(prime_factorize(8).unwrap(), vec![(2, 3)]);
        assert_eq!(prime_factorize(97).unwrap(), vec![(97, 1)]);
        assert_eq!(prime_factorize(1).unwrap_err(), FactorError::TooSmall);
    }
}
