//! Exact integer and rational arithmetic plus the small set of exact
//! linear-algebra primitives everything else is built on: fraction-free
//! determinants, affine rank, hyperplane fitting through point sets, and a
//! rational phase-1 simplex for convex-combination feasibility.
//!
//! Arbitrary-precision integers and rationals are [`num_bigint::BigInt`] and
//! [`num_rational::BigRational`]; the latter keeps values in lowest terms
//! with a positive denominator by construction.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Arbitrary-precision signed integer.
pub type Int = BigInt;
/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rat = BigRational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExactError {
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("matrix entry at ({row},{col}) is not an integer")]
    NonIntegerEntry { row: usize, col: usize },
    #[error("rows have inconsistent lengths")]
    RaggedRows,
    #[error("empty point list")]
    EmptyInput,
    #[error("points have inconsistent dimensions")]
    DimensionMismatch,
    #[error("expected exactly {expected} points, got {got}")]
    WrongPointCount { expected: usize, got: usize },
    #[error("cannot parse rational from {0:?}")]
    ParseRational(String),
}

/// Rational from an integer.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

/// Rational `n/d`. Panics if `d == 0`; intended for literals.
pub fn rat(n: i64, d: i64) -> Rat {
    assert!(d != 0, "zero denominator");
    Rat::new(Int::from(n), Int::from(d))
}

/// Parse a rational from `"num"` or `"num/den"` decimal strings.
pub fn parse_rat(s: &str) -> Result<Rat, ExactError> {
    let err = || ExactError::ParseRational(s.to_string());
    let mut parts = s.splitn(2, '/');
    let num: Int = parts
        .next()
        .ok_or_else(err)?
        .trim()
        .parse()
        .map_err(|_| err())?;
    match parts.next() {
        None => Ok(Rat::from_integer(num)),
        Some(d) => {
            let den: Int = d.trim().parse().map_err(|_| err())?;
            if den.is_zero() {
                return Err(err());
            }
            Ok(Rat::new(num, den))
        }
    }
}

/// `t^k` for a nonnegative exponent.
pub fn rat_pow(t: &Rat, k: usize) -> Rat {
    let mut acc = Rat::one();
    for _ in 0..k {
        acc *= t;
    }
    acc
}

/// Dense rational matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl Matrix {
    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<Self, ExactError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(ExactError::RaggedRows);
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_int_rows(rows: &[Vec<i64>]) -> Self {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| rat_int(v)).collect())
                .collect(),
        )
        .expect("literal rows are rectangular")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> &Rat {
        &self.data[row * self.cols + col]
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }
}

/// Exact determinant of a square integer matrix by Bareiss fraction-free
/// elimination: every intermediate value is an integer (a minor of the
/// input), so there is no rounding and no coefficient blow-up from naive
/// fraction arithmetic.
pub fn det_fraction_free(m: &Matrix) -> Result<Int, ExactError> {
    if !m.is_square() {
        return Err(ExactError::NonSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let mut grid = Vec::with_capacity(m.rows);
    for i in 0..m.rows {
        let mut row = Vec::with_capacity(m.cols);
        for j in 0..m.cols {
            let v = m.get(i, j);
            if !v.is_integer() {
                return Err(ExactError::NonIntegerEntry { row: i, col: j });
            }
            row.push(v.to_integer());
        }
        grid.push(row);
    }
    Ok(det_int(grid))
}

/// Bareiss determinant of an integer grid. Row swaps flip the sign; a zero
/// pivot column means the determinant is zero.
pub(crate) fn det_int(mut m: Vec<Vec<Int>>) -> Int {
    let n = m.len();
    if n == 0 {
        return Int::one();
    }
    debug_assert!(m.iter().all(|r| r.len() == n));
    let mut negate = false;
    let mut prev = Int::one();
    for k in 0..n.saturating_sub(1) {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return Int::zero(),
            }
        }
        let pivot_row = m[k].clone();
        let pivot = pivot_row[k].clone();
        for row in m.iter_mut().skip(k + 1) {
            let lead = std::mem::replace(&mut row[k], Int::zero());
            for j in k + 1..n {
                let num = &row[j] * &pivot - &lead * &pivot_row[j];
                // Exact: Bareiss guarantees divisibility by the previous pivot.
                row[j] = num / &prev;
            }
        }
        prev = pivot;
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Rank of an integer grid via division-free row elimination. Rows are
/// reduced by their gcd after each update to keep entries small.
pub(crate) fn int_rank(mut m: Vec<Vec<Int>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot_row = m[rank].clone();
        for row in m.iter_mut().skip(rank + 1) {
            if row[col].is_zero() {
                continue;
            }
            let lead = row[col].clone();
            for c in 0..cols {
                row[c] = &row[c] * &pivot_row[col] - &lead * &pivot_row[c];
            }
            reduce_row_gcd(row);
        }
        rank += 1;
    }
    rank
}

fn reduce_row_gcd(row: &mut [Int]) {
    let mut g = Int::zero();
    for v in row.iter() {
        g = g.gcd(v);
        if g.is_one() {
            return;
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for v in row.iter_mut() {
        *v = &*v / &g;
    }
}

/// Scale a rational row by the lcm of its denominators, yielding integers.
/// Row scaling by a positive rational preserves kernels, spans and signs.
pub(crate) fn clear_denominators(row: &[Rat]) -> Vec<Int> {
    let mut lcm = Int::one();
    for v in row {
        lcm = lcm.lcm(v.denom());
    }
    row.iter().map(|v| (v * &lcm).to_integer()).collect()
}

/// Dimension of the affine hull of a nonempty point set (0 for one point).
pub fn affine_rank(points: &[Vec<Rat>]) -> Result<usize, ExactError> {
    let first = points.first().ok_or(ExactError::EmptyInput)?;
    let dim = first.len();
    if points.iter().any(|p| p.len() != dim) {
        return Err(ExactError::DimensionMismatch);
    }
    let diffs: Vec<Vec<Int>> = points[1..]
        .iter()
        .map(|p| {
            let row: Vec<Rat> = p.iter().zip(first).map(|(a, b)| a - b).collect();
            clear_denominators(&row)
        })
        .collect();
    Ok(int_rank(diffs))
}

/// Hyperplane `normal . x = offset` with integer, jointly coprime
/// coefficients whose first nonzero normal entry is positive. The
/// normalization makes equality of hyperplanes a plain `==` test.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Hyperplane {
    pub normal: Vec<Int>,
    pub offset: Int,
}

impl Hyperplane {
    /// Evaluate `normal . x - offset`.
    pub fn eval(&self, x: &[Rat]) -> Rat {
        let mut acc = Rat::from_integer(-self.offset.clone());
        for (a, v) in self.normal.iter().zip(x) {
            acc += Rat::from_integer(a.clone()) * v;
        }
        acc
    }
}

/// Result of fitting a hyperplane through `d` points in dimension `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HyperplaneFit {
    /// The points affinely span a unique hyperplane.
    Unique(Hyperplane),
    /// Affine rank below `d - 1`: no unique hyperplane.
    Degenerate,
}

/// Fit the hyperplane through exactly `d` points of `Q^d`.
///
/// Each point contributes the homogeneous row `[x_1 .. x_d, -1]` acting on
/// `(a_1 .. a_d, c)`; the kernel vector of the resulting `d x (d+1)` integer
/// matrix is read off from its signed maximal minors. All minors zero means
/// the points do not span a hyperplane.
pub fn solve_hyperplane(points: &[Vec<Rat>]) -> Result<HyperplaneFit, ExactError> {
    let first = points.first().ok_or(ExactError::EmptyInput)?;
    let d = first.len();
    if points.len() != d {
        return Err(ExactError::WrongPointCount {
            expected: d,
            got: points.len(),
        });
    }
    if points.iter().any(|p| p.len() != d) {
        return Err(ExactError::DimensionMismatch);
    }
    let rows: Vec<Vec<Int>> = points
        .iter()
        .map(|p| {
            let mut row: Vec<Rat> = p.clone();
            row.push(-Rat::one());
            clear_denominators(&row)
        })
        .collect();

    let mut kernel = Vec::with_capacity(d + 1);
    let mut all_zero = true;
    for skip in 0..d + 1 {
        let minor: Vec<Vec<Int>> = rows
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != skip)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let mut v = det_int(minor);
        if skip % 2 == 1 {
            v = -v;
        }
        all_zero &= v.is_zero();
        kernel.push(v);
    }
    if all_zero {
        return Ok(HyperplaneFit::Degenerate);
    }

    let offset = kernel.pop().expect("kernel has d+1 entries");
    match normalize_hyperplane(kernel, offset) {
        Some(h) => Ok(HyperplaneFit::Unique(h)),
        None => Ok(HyperplaneFit::Degenerate),
    }
}

/// Divide `(normal, offset)` by their common gcd and orient so the first
/// nonzero normal entry is positive. Returns `None` for a zero normal.
pub(crate) fn normalize_hyperplane(mut normal: Vec<Int>, mut offset: Int) -> Option<Hyperplane> {
    let mut g = offset.abs();
    for v in &normal {
        g = g.gcd(v);
    }
    if !g.is_zero() && !g.is_one() {
        for v in normal.iter_mut() {
            *v = &*v / &g;
        }
        offset = &offset / &g;
    }
    let lead = normal.iter().find(|v| !v.is_zero())?;
    if lead.is_negative() {
        for v in normal.iter_mut() {
            *v = -v.clone();
        }
        offset = -offset;
    }
    Some(Hyperplane { normal, offset })
}

/// Outcome of the convex-combination feasibility problem.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    /// Coefficients `lambda` with `sum lambda_j v_j = w`, `sum lambda_j = 1`,
    /// `lambda_j >= 0`, all exact.
    Witness(Vec<Rat>),
    Infeasible,
}

/// Decide exactly whether `target` is a convex combination of `points`, via
/// a phase-1 simplex over the rationals. Bland's smallest-index pivot rule
/// guarantees termination; there are no tolerances anywhere.
pub fn linear_feasible(points: &[Vec<Rat>], target: &[Rat]) -> Result<LpOutcome, ExactError> {
    let d = target.len();
    if points.iter().any(|p| p.len() != d) {
        return Err(ExactError::DimensionMismatch);
    }
    let n = points.len();
    if n == 0 {
        return Ok(LpOutcome::Infeasible);
    }
    let m = d + 1;

    // Tableau rows: coordinate constraints then the sum-to-one row; columns:
    // n lambda variables, m artificials, rhs.
    let width = n + m + 1;
    let mut tab: Vec<Vec<Rat>> = Vec::with_capacity(m);
    for k in 0..m {
        let mut row = vec![Rat::zero(); width];
        for (j, p) in points.iter().enumerate() {
            row[j] = if k < d { p[k].clone() } else { Rat::one() };
        }
        row[width - 1] = if k < d { target[k].clone() } else { Rat::one() };
        if row[width - 1].is_negative() {
            for v in row.iter_mut() {
                *v = -v.clone();
            }
        }
        row[n + k] = Rat::one();
        tab.push(row);
    }
    let mut basis: Vec<usize> = (n..n + m).collect();

    // Phase-1 objective: minimize the sum of artificials. Reduced costs for
    // the artificial basis are the negated column sums.
    let mut obj = vec![Rat::zero(); width];
    for j in (0..n).chain([width - 1]) {
        let mut s = Rat::zero();
        for row in &tab {
            s += &row[j];
        }
        obj[j] = -s;
    }

    // Bland: entering column = smallest index with negative reduced cost.
    // Artificial columns never re-enter.
    while let Some(enter) = (0..n).find(|&j| obj[j].is_negative()) {
        // Leaving row: minimum ratio, ties broken by smallest basis index.
        let mut leave: Option<(usize, Rat)> = None;
        for (i, row) in tab.iter().enumerate() {
            if !row[enter].is_positive() {
                continue;
            }
            let ratio = &row[width - 1] / &row[enter];
            let better = match &leave {
                None => true,
                Some((cur, best)) => ratio < *best || (ratio == *best && basis[i] < basis[*cur]),
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        let (pivot_row, _) =
            leave.expect("phase-1 objective is bounded below, a pivot row always exists");

        let pivot = tab[pivot_row][enter].clone();
        for v in tab[pivot_row].iter_mut() {
            *v /= &pivot;
        }
        let prow = tab[pivot_row].clone();
        for (i, row) in tab.iter_mut().enumerate() {
            if i == pivot_row || row[enter].is_zero() {
                continue;
            }
            let f = row[enter].clone();
            for (v, pv) in row.iter_mut().zip(&prow) {
                *v -= &f * pv;
            }
        }
        if !obj[enter].is_zero() {
            let f = obj[enter].clone();
            for (v, pv) in obj.iter_mut().zip(&prow) {
                *v -= &f * pv;
            }
        }
        basis[pivot_row] = enter;
    }

    // Objective value is -obj[rhs]; zero iff all artificials were driven out.
    if !obj[width - 1].is_zero() {
        return Ok(LpOutcome::Infeasible);
    }
    let mut lambda = vec![Rat::zero(); n];
    for (i, &b) in basis.iter().enumerate() {
        if b < n {
            lambda[b] = tab[i][width - 1].clone();
        }
    }
    Ok(LpOutcome::Witness(lambda))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn det_cofactor(m: &[Vec<i64>]) -> i64 {
        let n = m.len();
        if n == 0 {
            return 1;
        }
        if n == 1 {
            return m[0][0];
        }
        let mut acc = 0i64;
        for j in 0..n {
            let minor: Vec<Vec<i64>> = m[1..]
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|&(c, _)| c != j)
                        .map(|(_, &v)| v)
                        .collect()
                })
                .collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            acc += sign * m[0][j] * det_cofactor(&minor);
        }
        acc
    }

    #[test]
    fn det_examples() {
        let id3 = Matrix::from_int_rows(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        assert_eq!(det_fraction_free(&id3).unwrap(), Int::from(1));
        let cartan2 = Matrix::from_int_rows(&[vec![2, -1], vec![-1, 2]]);
        assert_eq!(det_fraction_free(&cartan2).unwrap(), Int::from(3));
        let singular = Matrix::from_int_rows(&[vec![1, 1], vec![1, 1]]);
        assert_eq!(det_fraction_free(&singular).unwrap(), Int::from(0));
    }

    #[test]
    fn det_rejects_bad_input() {
        let rect = Matrix::from_int_rows(&[vec![1, 2, 3], vec![4, 5, 6]]);
        assert_eq!(
            det_fraction_free(&rect),
            Err(ExactError::NonSquare { rows: 2, cols: 3 })
        );
        let frac = Matrix::from_rows(vec![vec![rat(1, 2)]]).unwrap();
        assert_eq!(
            det_fraction_free(&frac),
            Err(ExactError::NonIntegerEntry { row: 0, col: 0 })
        );
    }

    #[test]
    fn det_matches_cofactor_expansion_on_random_small_matrices() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        for _ in 0..1200 {
            let n = rng.gen_range(1..=4);
            let m: Vec<Vec<i64>> = (0..n)
                .map(|_| (0..n).map(|_| rng.gen_range(-3..=3)).collect())
                .collect();
            let expected = det_cofactor(&m);
            let got = det_fraction_free(&Matrix::from_int_rows(&m)).unwrap();
            assert_eq!(got, Int::from(expected), "matrix {m:?}");
        }
    }

    #[test]
    fn affine_rank_examples() {
        let single = vec![vec![rat_int(1), rat_int(1), rat_int(1)]];
        assert_eq!(affine_rank(&single).unwrap(), 0);
        let two = vec![vec![rat_int(1), rat_int(0)], vec![rat_int(0), rat_int(1)]];
        assert_eq!(affine_rank(&two).unwrap(), 1);
        // Standard simplex vertices in R^3 span a plane.
        let simplex = vec![
            vec![rat_int(1), rat_int(0), rat_int(0)],
            vec![rat_int(0), rat_int(1), rat_int(0)],
            vec![rat_int(0), rat_int(0), rat_int(1)],
        ];
        assert_eq!(affine_rank(&simplex).unwrap(), 2);
        assert_eq!(affine_rank(&[]), Err(ExactError::EmptyInput));
    }

    #[test]
    fn hyperplane_examples() {
        let fit = solve_hyperplane(&[vec![rat_int(1), rat_int(0)], vec![rat_int(0), rat_int(1)]])
            .unwrap();
        assert_eq!(
            fit,
            HyperplaneFit::Unique(Hyperplane {
                normal: vec![Int::from(1), Int::from(1)],
                offset: Int::from(1),
            })
        );
        let fit = solve_hyperplane(&[vec![rat_int(0), rat_int(0)], vec![rat_int(1), rat_int(0)]])
            .unwrap();
        assert_eq!(
            fit,
            HyperplaneFit::Unique(Hyperplane {
                normal: vec![Int::from(0), Int::from(1)],
                offset: Int::from(0),
            })
        );
        let repeated =
            solve_hyperplane(&[vec![rat_int(1), rat_int(1)], vec![rat_int(1), rat_int(1)]])
                .unwrap();
        assert_eq!(repeated, HyperplaneFit::Degenerate);
        assert!(matches!(
            solve_hyperplane(&[vec![rat_int(1), rat_int(0)]]),
            Err(ExactError::WrongPointCount {
                expected: 2,
                got: 1
            })
        ));
    }

    #[test]
    fn hyperplane_is_exact_and_deterministic_on_random_inputs() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let d = rng.gen_range(2..=4);
            let pts: Vec<Vec<Rat>> = (0..d)
                .map(|_| {
                    (0..d)
                        .map(|_| rat(rng.gen_range(-6..=6), rng.gen_range(1..=3)))
                        .collect()
                })
                .collect();
            let fit = solve_hyperplane(&pts).unwrap();
            if let HyperplaneFit::Unique(h) = fit {
                for p in &pts {
                    assert_eq!(h.eval(p), Rat::zero());
                }
                // Scaling all equations must yield the same normalized output.
                let again = solve_hyperplane(&pts).unwrap();
                assert_eq!(again, HyperplaneFit::Unique(h));
            }
        }
    }

    #[test]
    fn feasible_midpoint_has_exact_witness() {
        let pts = vec![vec![rat_int(0), rat_int(0)], vec![rat_int(2), rat_int(2)]];
        let w = vec![rat_int(1), rat_int(1)];
        match linear_feasible(&pts, &w).unwrap() {
            LpOutcome::Witness(lambda) => {
                assert_eq!(lambda, vec![rat(1, 2), rat(1, 2)]);
            }
            LpOutcome::Infeasible => panic!("midpoint must be feasible"),
        }
    }

    #[test]
    fn infeasible_outside_segment() {
        let pts = vec![vec![rat_int(0), rat_int(0)], vec![rat_int(1), rat_int(1)]];
        let w = vec![rat_int(3), rat_int(0)];
        assert_eq!(linear_feasible(&pts, &w).unwrap(), LpOutcome::Infeasible);
    }

    #[test]
    fn polygon_vertex_is_not_a_combination_of_the_others() {
        // P(4,2) has vertices (1,4), (2,2), (4,1); the middle one is extreme.
        let others = vec![vec![rat_int(1), rat_int(4)], vec![rat_int(4), rat_int(1)]];
        let w = vec![rat_int(2), rat_int(2)];
        assert_eq!(linear_feasible(&others, &w).unwrap(), LpOutcome::Infeasible);
    }

    #[test]
    fn witness_reconstructs_target_exactly() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for _ in 0..200 {
            let d = rng.gen_range(1..=3);
            let n = rng.gen_range(1..=6);
            let pts: Vec<Vec<Rat>> = (0..n)
                .map(|_| (0..d).map(|_| rat_int(rng.gen_range(-4..=4))).collect())
                .collect();
            let w: Vec<Rat> = (0..d).map(|_| rat(rng.gen_range(-8..=8), 2)).collect();
            if let LpOutcome::Witness(lambda) = linear_feasible(&pts, &w).unwrap() {
                assert!(lambda.iter().all(|l| !l.is_negative()));
                assert_eq!(lambda.iter().sum::<Rat>(), Rat::one());
                for k in 0..d {
                    let coord: Rat = lambda.iter().zip(&pts).map(|(l, p)| l * &p[k]).sum();
                    assert_eq!(coord, w[k]);
                }
            }
        }
    }

    #[test]
    fn parse_rat_accepts_both_forms() {
        assert_eq!(parse_rat("2").unwrap(), rat_int(2));
        assert_eq!(parse_rat("5/2").unwrap(), rat(5, 2));
        assert_eq!(parse_rat("-7/3").unwrap(), rat(-7, 3));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("abc").is_err());
    }
}
