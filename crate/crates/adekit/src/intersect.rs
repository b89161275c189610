//! The trilinear intersection form on the 4-cycles of an ADE family and the
//! cubic polynomial `f` it induces on root coordinates.
//!
//! Sweeping each sphere S_i around the base 2-sphere produces a 4-cycle S̃_i
//! in the total space. The symmetric trilinear table on these generators is
//!
//! - `T(i,i,i) = 8`,
//! - `T(i,j,j) = −w_{i,j}` when `{i,j}` is a diagram edge (one copy of `i`,
//!   two of `j`),
//! - `0` in every other case: distinct spheres meet pairwise in single
//!   points and have no triple points, so a triple product with two distinct
//!   non-adjacent indices, or three distinct indices, vanishes.
//!
//! The first Pontryagin pairing against each generator is likewise 8. For an
//! integer class t the combination `4·(S̃_t)³ − ⟨p₁, S̃_t⟩` expands to
//!
//! ```text
//! f(t) = Σ_i 8(4t_i³ − t_i) − Σ_{edges {i,j}} 12·t_i·t_j·(t_i·w_{j,i} + t_j·w_{i,j})
//! ```
//!
//! `f` is odd, constant along single-coordinate steps between roots, and
//! equals +24 on every positive root and −24 on every negative root.

use thiserror::Error;

use crate::rootsys::{DynkinDiagram, RootVector};
use crate::weights::{propagate_weights, WeightAssignment};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IntersectError {
    /// Mixed triple products are defined only across diagram edges.
    #[error("vertices {i} and {j} are not adjacent")]
    NotAdjacent { i: usize, j: usize },
    /// The coordinate vector does not match the diagram rank.
    #[error("expected a vector of length {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
}

/// The trilinear table of a diagram together with its weight data.
#[derive(Debug, Clone)]
pub struct TripleForm {
    diagram: DynkinDiagram,
    weights: WeightAssignment,
}

impl TripleForm {
    pub fn new(diagram: &DynkinDiagram) -> Self {
        TripleForm {
            diagram: diagram.clone(),
            weights: propagate_weights(diagram),
        }
    }

    pub fn diagram(&self) -> &DynkinDiagram {
        &self.diagram
    }

    pub fn weights(&self) -> &WeightAssignment {
        &self.weights
    }

    /// Triple self-intersection S̃_i·S̃_i·S̃_i = 4(a_i + b_i) = 8.
    pub fn triple_self(&self, i: usize) -> i64 {
        let (a, b) = self.weights.vertex(i);
        4 * (a + b)
    }

    /// Mixed product S̃_i·S̃_j·S̃_j = −w_{i,j} across the edge `{i,j}`.
    pub fn triple_mixed(&self, i: usize, j: usize) -> Result<i64, IntersectError> {
        if !self.diagram.adjacent(i, j) {
            return Err(IntersectError::NotAdjacent { i, j });
        }
        Ok(-self.weights.edge(i, j))
    }

    /// Pairing of the vertical first Pontryagin class with S̃_i; equals the
    /// triple self-intersection, hence 8.
    pub fn p1_pairing(&self, i: usize) -> i64 {
        self.triple_self(i)
    }

    /// The full symmetric table entry T(i,j,k) for arbitrary vertex indices.
    pub fn entry(&self, i: usize, j: usize, k: usize) -> i64 {
        if i == j && j == k {
            return self.triple_self(i);
        }
        let (single, double) = if i == j {
            (k, i)
        } else if i == k {
            (j, i)
        } else if j == k {
            (i, j)
        } else {
            return 0;
        };
        self.triple_mixed(single, double).unwrap_or(0)
    }

    /// Exact evaluation of the cubic `f` at an arbitrary integer vector.
    pub fn f(&self, t: &[i64]) -> Result<i64, IntersectError> {
        self.check_len(t)?;
        let vertex_sum: i64 = t.iter().map(|&x| 8 * (4 * x * x * x - x)).sum();
        let mut edge_sum = 0i64;
        for e in self.diagram.edges() {
            let ti = t[e.i - 1];
            let tj = t[e.j - 1];
            let wij = self.weights.edge(e.i, e.j);
            let wji = self.weights.edge(e.j, e.i);
            edge_sum += 12 * ti * tj * (ti * wji + tj * wij);
        }
        Ok(vertex_sum - edge_sum)
    }

    /// Trilinear expansion Σ t_i·t_j·t_k·T(i,j,k) of the class Σ t_i·[S̃_i].
    pub fn triple_of_class(&self, t: &[i64]) -> Result<i64, IntersectError> {
        self.check_len(t)?;
        let mut acc: i64 = t.iter().map(|&x| 8 * x * x * x).sum();
        for e in self.diagram.edges() {
            let ti = t[e.i - 1];
            let tj = t[e.j - 1];
            let wij = self.weights.edge(e.i, e.j);
            let wji = self.weights.edge(e.j, e.i);
            acc -= 3 * ti * tj * (tj * wij + ti * wji);
        }
        Ok(acc)
    }

    /// Evaluate `f` on every root and re-check invariance along a descent
    /// path for every positive root.
    pub fn verify_f_on_roots(&self) -> VerifyReport {
        let roots = self.diagram.enumerate_roots();
        let root_set: std::collections::BTreeSet<Vec<i64>> = roots
            .iter()
            .map(|r| r.coords().to_vec())
            .collect();
        let mut report = VerifyReport {
            root_count: roots.len(),
            positive_count: 0,
            negative_count: 0,
            f_failures: Vec::new(),
            hasse_failures: Vec::new(),
        };
        for r in &roots {
            let value = self.f(r.coords()).expect("roots have the diagram rank");
            let expected = if r.is_positive() {
                report.positive_count += 1;
                24
            } else {
                assert!(r.is_negative(), "every root is positive or negative");
                report.negative_count += 1;
                -24
            };
            if value != expected {
                report.f_failures.push((r.clone(), value));
            }
            if r.is_positive() {
                let path = self
                    .diagram
                    .hasse_path_in(r, &root_set)
                    .expect("positive roots admit descent paths");
                for pair in path.windows(2) {
                    let fa = self.f(pair[0].coords()).unwrap();
                    let fb = self.f(pair[1].coords()).unwrap();
                    if fa != fb {
                        report
                            .hasse_failures
                            .push((pair[0].clone(), pair[1].clone()));
                    }
                }
            }
        }
        report
    }

    fn check_len(&self, t: &[i64]) -> Result<(), IntersectError> {
        if t.len() != self.diagram.rank() {
            return Err(IntersectError::DimensionMismatch {
                expected: self.diagram.rank(),
                got: t.len(),
            });
        }
        Ok(())
    }
}

/// Outcome of evaluating `f` over the full root set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub root_count: usize,
    pub positive_count: usize,
    pub negative_count: usize,
    /// Roots where f missed its expected ±24 value, with the value found.
    pub f_failures: Vec<(RootVector, i64)>,
    /// Consecutive descent-path entries with differing f values.
    pub hasse_failures: Vec<(RootVector, RootVector)>,
}

impl VerifyReport {
    pub fn all_pass(&self) -> bool {
        self.f_failures.is_empty() && self.hasse_failures.is_empty()
    }

    pub fn summary(&self) -> String {
        if self.all_pass() {
            format!("{} roots, all |f|=24", self.root_count)
        } else {
            format!(
                "{} roots, {} f violations, {} path violations",
                self.root_count,
                self.f_failures.len(),
                self.hasse_failures.len()
            )
        }
    }
}
