//! Characteristic-vector enumeration in the diagonal lattice ⟨1⟩ ⊕ m⟨−1⟩.
//!
//! A characteristic vector has all coordinates odd in the diagonal basis
//! e₀, e₁, …, e_m (e₀² = 1, eᵢ² = −1). Fixing the square
//! `x₀² − x₁² − ⋯ − x_m² = S` and imposing the half-space cut
//! `x₀ ≥ 0, x₀ − a·x₁ < 0` for a rational 0 ≤ a < 1 leaves only finitely
//! many vectors, and the finiteness is certified by explicit bounds:
//!
//! - `a·x₁ > x₀ ≥ 0` with `a < 1` forces `x₁ > x₀`, and oddness sharpens
//!   this to `x₁ ≥ x₀ + 2`;
//! - hence `x₁² − x₀² ≥ 4x₀ + 4`, while the tail budget
//!   `Σ_{i≥2} x_i² = x₀² − x₁² − S` needs at least m−1 (one per odd
//!   coordinate), giving `x₀ ≤ (−S − m − 3)/4`;
//! - `x₁ ≤ √(x₀² − S − (m−1))` and every tail coordinate is bounded by the
//!   remaining exact budget.
//!
//! The derived box is then searched exhaustively. Each bound is reported so
//! a failed expectation can be audited against the derivation.

use std::collections::HashMap;

use num_rational::Rational64;
use num_traits::Zero;
use thiserror::Error;

use crate::Rational;

/// Largest m accepted by [`count_basic_classes_bound`].
pub const COUNT_M_LIMIT: usize = 6;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LatticeError {
    /// m must be ≥ 1 and a must lie in [0, 1).
    #[error("invalid parameter: {reason}")]
    InvalidParameter { reason: String },
    /// Counting is capped at m ≤ [`COUNT_M_LIMIT`].
    #[error("m = {m} exceeds the counting limit {limit}")]
    Intractable { m: usize, limit: usize },
}

/// A sign-flip enumeration problem: dimension, square, and half-space slope.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeProblem {
    m: usize,
    square: i64,
    a: Rational,
}

impl LatticeProblem {
    /// `square` is the required value of x₀² − Σ_{i≥1} x_i².
    pub fn new(m: usize, square: i64, a: Rational) -> Result<Self, LatticeError> {
        if m < 1 {
            return Err(LatticeError::InvalidParameter {
                reason: "m must be at least 1".into(),
            });
        }
        if a < Rational64::zero() || a >= Rational64::from_integer(1) {
            return Err(LatticeError::InvalidParameter {
                reason: format!("a = {a} must satisfy 0 <= a < 1"),
            });
        }
        Ok(LatticeProblem { m, square, a })
    }

    /// Fix the square through the expected dimension n: square = 4n − m + 9.
    pub fn from_expected_dimension(m: usize, n: i64, a: Rational) -> Result<Self, LatticeError> {
        Self::new(m, 4 * n - m as i64 + 9, a)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn square(&self) -> i64 {
        self.square
    }

    pub fn slope(&self) -> Rational {
        self.a
    }

    /// The derived search box, with the derivation spelled out line by line.
    pub fn bounds(&self) -> SearchBounds {
        let s = self.square;
        let m = self.m as i64;
        let x0_numerator = -s - m - 3;
        let x0_max = if self.a.is_zero() || x0_numerator < 0 {
            -1
        } else {
            x0_numerator / 4
        };
        let x1_max = if x0_max < 0 {
            -1
        } else {
            isqrt(x0_max * x0_max - s - (m - 1))
        };
        let tail_max = if x0_max < 0 { -1 } else { isqrt((-s).max(0)) };
        let derivation = vec![
            format!("constraints: all x_i odd, x0 >= 0, x0 - ({})*x1 < 0, x0^2 - sum x_i^2 = {s}", self.a),
            if self.a.is_zero() {
                "a = 0 forces x0 < 0, contradicting x0 >= 0: no solutions".to_string()
            } else {
                format!(
                    "a < 1 forces x1 >= x0 + 2, so x1^2 - x0^2 >= 4*x0 + 4; tail needs >= m-1 = {}: x0 <= (-S - m - 3)/4 = {x0_max}",
                    m - 1
                )
            },
            format!("x1 <= sqrt(x0_max^2 - S - (m-1)) = {x1_max}"),
            format!("|x_i| <= sqrt(-S) = {tail_max} for i >= 2"),
        ];
        SearchBounds {
            x0_max,
            x1_max,
            tail_max,
            derivation,
        }
    }

    /// Direct re-substitution of all four defining constraints.
    pub fn satisfies(&self, x: &[i64]) -> bool {
        if x.len() != self.m + 1 {
            return false;
        }
        let all_odd = x.iter().all(|&v| v.rem_euclid(2) == 1);
        let square: i64 = x[0] * x[0] - x[1..].iter().map(|&v| v * v).sum::<i64>();
        let half_space = Rational64::from_integer(x[0]) < self.a * Rational64::from_integer(x[1]);
        all_odd && square == self.square && x[0] >= 0 && half_space
    }
}

/// The derived box for a [`LatticeProblem`], with its derivation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchBounds {
    /// Largest admissible x₀ (−1 when the problem is empty outright).
    pub x0_max: i64,
    /// Largest admissible x₁.
    pub x1_max: i64,
    /// Bound on |x_i| for the tail coordinates i ≥ 2.
    pub tail_max: i64,
    /// Human-readable derivation, one line per bound.
    pub derivation: Vec<String>,
}

/// The complete, sorted list of characteristic vectors satisfying the square
/// and half-space constraints of the problem.
pub fn enumerate_sign_flips(problem: &LatticeProblem) -> Vec<Vec<i64>> {
    let bounds = problem.bounds();
    let mut out = Vec::new();
    if bounds.x0_max < 0 {
        return out;
    }
    let m = problem.m;
    let s = problem.square;
    let mut x0 = 1;
    while x0 <= bounds.x0_max {
        let mut x1 = x0 + 2;
        loop {
            let tail_budget = x0 * x0 - x1 * x1 - s;
            if tail_budget < m as i64 - 1 {
                break;
            }
            let chamber =
                Rational64::from_integer(x0) < problem.a * Rational64::from_integer(x1);
            if chamber {
                let mut prefix = vec![x0, x1];
                push_tails(m - 1, tail_budget, &mut prefix, &mut out);
            }
            x1 += 2;
        }
        x0 += 2;
    }
    for x in &out {
        debug_assert!(problem.satisfies(x));
    }
    out.sort();
    out
}

/// Extend `prefix` by `count` odd coordinates whose squares sum to `budget`,
/// exactly.
fn push_tails(count: usize, budget: i64, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    if count == 0 {
        if budget == 0 {
            out.push(prefix.clone());
        }
        return;
    }
    let reserve = count as i64 - 1;
    let mut v = 1;
    while v * v <= budget - reserve {
        for signed in [v, -v] {
            prefix.push(signed);
            push_tails(count - 1, budget - v * v, prefix, out);
            prefix.pop();
        }
        v += 2;
    }
}

/// Count all odd vectors (x₀, …, x_m) with x₀² − Σ x_i² = `square` inside the
/// counting box |x_i| ≤ |square| + m + 1 — the desk-scale certificate that
/// only finitely many characteristic squares hit a fixed value there.
pub fn count_basic_classes_bound(m: usize, square: i64) -> Result<u64, LatticeError> {
    if m > COUNT_M_LIMIT {
        return Err(LatticeError::Intractable {
            m,
            limit: COUNT_M_LIMIT,
        });
    }
    let bound = square.abs() + m as i64 + 1;
    let mut memo: HashMap<(usize, i64), u64> = HashMap::new();
    let mut total = 0u64;
    let mut x0 = 1;
    while x0 <= bound {
        let budget = x0 * x0 - square;
        // x0 and −x0 contribute symmetrically.
        total += 2 * count_tails(m, budget, bound, &mut memo);
        x0 += 2;
    }
    Ok(total)
}

fn count_tails(count: usize, budget: i64, bound: i64, memo: &mut HashMap<(usize, i64), u64>) -> u64 {
    if count == 0 {
        return u64::from(budget == 0);
    }
    if budget < count as i64 {
        return 0;
    }
    if let Some(&c) = memo.get(&(count, budget)) {
        return c;
    }
    let mut acc = 0u64;
    let mut v = 1;
    while v <= bound && v * v <= budget - (count as i64 - 1) {
        acc += 2 * count_tails(count - 1, budget - v * v, bound, memo);
        v += 2;
    }
    memo.insert((count, budget), acc);
    acc
}

fn isqrt(n: i64) -> i64 {
    if n < 0 {
        return -1;
    }
    let mut r = (n as f64).sqrt() as i64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ratio(p: i64, q: i64) -> Rational {
        Rational64::new(p, q)
    }

    #[test]
    fn problem_validation() {
        assert!(LatticeProblem::new(0, -8, ratio(0, 1)).is_err());
        assert!(LatticeProblem::new(2, -8, ratio(1, 1)).is_err());
        assert!(LatticeProblem::new(2, -8, ratio(-1, 4)).is_err());
        assert!(LatticeProblem::new(2, -8, ratio(3, 4)).is_ok());
        let p = LatticeProblem::from_expected_dimension(1, -4, ratio(0, 1)).unwrap();
        assert_eq!(p.square(), -8);
    }

    #[test]
    fn zero_slope_is_empty() {
        let p = LatticeProblem::new(1, -8, ratio(0, 1)).unwrap();
        assert!(enumerate_sign_flips(&p).is_empty());
    }

    #[test]
    fn zero_square_half_slope_is_empty() {
        // x0^2 = x1^2 with x0 < x1/2 has no odd solutions with x0 >= 0.
        let p = LatticeProblem::new(1, 0, ratio(1, 2)).unwrap();
        assert!(enumerate_sign_flips(&p).is_empty());
    }

    #[test]
    fn m2_square_minus_nine() {
        let p = LatticeProblem::new(2, -9, ratio(3, 4)).unwrap();
        let sols = enumerate_sign_flips(&p);
        assert_eq!(sols, vec![vec![1, 3, -1], vec![1, 3, 1]]);
        for x in &sols {
            assert!(p.satisfies(x));
        }
    }

    /// Deliberately dumb scan over a generous box, sharing nothing with the
    /// production enumeration beyond the (sound) outer bounds.
    fn brute_force(p: &LatticeProblem) -> Vec<Vec<i64>> {
        let s = p.square();
        let m = p.m();
        let b0 = (s.abs() + m as i64 + 3) / 4 + 2;
        let b1 = isqrt(b0 * b0 + s.abs()) + 2;
        let bt = isqrt(s.abs()) + 2;
        let mut out = Vec::new();
        let mut x = vec![0i64; m + 1];
        scan(p, 0, b0, b1, bt, &mut x, &mut out);
        out.sort();
        out
    }

    fn scan(
        p: &LatticeProblem,
        idx: usize,
        b0: i64,
        b1: i64,
        bt: i64,
        x: &mut Vec<i64>,
        out: &mut Vec<Vec<i64>>,
    ) {
        if idx == x.len() {
            if p.satisfies(x) {
                out.push(x.clone());
            }
            return;
        }
        let bound = match idx {
            0 => b0,
            1 => b1,
            _ => bt,
        };
        let mut v = -bound;
        while v <= bound {
            x[idx] = v;
            scan(p, idx + 1, b0, b1, bt, x, out);
            v += 1;
        }
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for m in 1..=3usize {
            for square in [-25i64, -16, -9, -8, -1, 0, 3] {
                for (num, den) in [(0i64, 1i64), (1, 4), (1, 2), (3, 4)] {
                    let p = LatticeProblem::new(m, square, ratio(num, den)).unwrap();
                    assert_eq!(
                        enumerate_sign_flips(&p),
                        brute_force(&p),
                        "m={m} square={square} a={num}/{den}"
                    );
                }
            }
        }
    }

    #[test]
    fn enlarging_the_slope_keeps_solutions() {
        let slopes = [ratio(0, 1), ratio(1, 4), ratio(1, 2), ratio(3, 4)];
        for m in 1..=3usize {
            for square in [-25i64, -16, -9] {
                let mut previous: Vec<Vec<i64>> = Vec::new();
                for a in slopes {
                    let p = LatticeProblem::new(m, square, a).unwrap();
                    let sols = enumerate_sign_flips(&p);
                    for x in &previous {
                        assert!(x[1] <= 0 || sols.contains(x), "lost {x:?} at a={a}");
                    }
                    previous = sols;
                }
            }
        }
    }

    #[test]
    fn count_examples() {
        // x0^2 - x1^2 = -8 over odd values: (±1, ±3) only.
        assert_eq!(count_basic_classes_bound(1, -8), Ok(4));
        // Differences of odd squares are divisible by 8.
        assert_eq!(count_basic_classes_bound(1, 1), Ok(0));
        assert_eq!(
            count_basic_classes_bound(7, -8),
            Err(LatticeError::Intractable { m: 7, limit: 6 })
        );
    }

    #[test]
    fn count_matches_dumb_scan_small() {
        for m in 1..=2usize {
            for square in -20i64..=10 {
                let bound = square.abs() + m as i64 + 1;
                let mut expected = 0u64;
                let mut x = vec![0i64; m + 1];
                dumb_count(m, square, bound, 0, &mut x, &mut expected);
                assert_eq!(
                    count_basic_classes_bound(m, square),
                    Ok(expected),
                    "m={m} square={square}"
                );
            }
        }
    }

    fn dumb_count(m: usize, square: i64, bound: i64, idx: usize, x: &mut Vec<i64>, acc: &mut u64) {
        if idx == m + 1 {
            let all_odd = x.iter().all(|&v| v.rem_euclid(2) == 1);
            let value = x[0] * x[0] - x[1..].iter().map(|&v| v * v).sum::<i64>();
            if all_odd && value == square {
                *acc += 1;
            }
            return;
        }
        let mut v = -bound;
        while v <= bound {
            x[idx] = v;
            dumb_count(m, square, bound, idx + 1, x, acc);
            v += 1;
        }
    }

    #[test]
    fn characteristic_residue_obstruction() {
        // Odd squares are 1 mod 8, so x0^2 - sum x_i^2 is 1 - m mod 8; any
        // other residue admits no solutions.
        for m in 1..=3usize {
            for square in -20i64..=20 {
                if (square - (1 - m as i64)).rem_euclid(8) != 0 {
                    assert_eq!(count_basic_classes_bound(m, square), Ok(0));
                }
            }
        }
    }
}
