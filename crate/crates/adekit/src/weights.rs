//! Circle-action weights on ADE plumbings.
//!
//! Each sphere S_i in the plumbing carries a circle action determined by its
//! weight pair `(a_i, b_i)` at the marked point `0` — first component the
//! base direction, second the fiber direction, oriented complexly. Plumbing
//! two disk bundles swaps base and fiber directions, which drives the whole
//! recursion:
//!
//! - at `∞` the same action has weights `(−a, 2a+b)`;
//! - plumbing at `0 ← ∞` along a chain forces `(a', b') = (2a+b, −a)`;
//! - a branch attachment at the point `1` forces the action to be trivial on
//!   the sphere, pinning `(0, k)` on the trunk and `(k, 0)` on the leaf.
//!
//! Anchors: D/E types have `(0, 2)` at the 3-valent vertex; A_n is pinned by
//! the isotropy of the two singular Seifert fibers, `b_1 = 2a_n + b_n = n+1`.
//! The recursion reproduces the closed forms
//!
//! ```text
//! A_n: (a_i, b_i) = (−n+2i−1, n−2i+3)
//! D_n: (a_i, b_i) = (−2n+2i+4, 2n−2i−2) for i ≤ n−1,  (a_n, b_n) = (2, 0)
//! E_n: (a_i, b_i) = (−2n+2i+6, 2n−2i−4) for i ≤ n−1,  (a_n, b_n) = (2, 0)
//! ```
//!
//! and the two are cross-checked on every call.
//!
//! Directed edge weights `w_{i,j}` (the rotation weight on the tangent line
//! of S_i at its intersection with S_j) follow from the attachment tags, and
//! always satisfy `w_{i,j} + w_{j,i} = a + b = 2`.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::rootsys::{Attach, DynkinDiagram, Family};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WeightsError {
    /// An edge endpoint has no vertex weight to derive its tangent weight from.
    #[error("no weight pair supplied for vertex {vertex}")]
    MissingVertexWeight { vertex: usize },
}

/// Weight pairs per vertex plus tangent weights per directed edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightAssignment {
    vertex_weights: BTreeMap<usize, (i64, i64)>,
    edge_weights: BTreeMap<(usize, usize), i64>,
}

impl WeightAssignment {
    /// The pair `(a_i, b_i)` at vertex `i` (1-based).
    pub fn vertex(&self, i: usize) -> (i64, i64) {
        self.vertex_weights[&i]
    }

    /// The weight `w_{i,j}` on the tangent line of sphere `i` at its
    /// intersection with sphere `j`. Panics if `{i,j}` is not an edge.
    pub fn edge(&self, i: usize, j: usize) -> i64 {
        self.edge_weights[&(i, j)]
    }

    pub fn vertex_weights(&self) -> &BTreeMap<usize, (i64, i64)> {
        &self.vertex_weights
    }

    pub fn edge_weights(&self) -> &BTreeMap<(usize, usize), i64> {
        &self.edge_weights
    }
}

/// Weight pair of the action `(a, b)` at the opposite marked point `∞`.
pub fn weight_at_infinity(a: i64, b: i64) -> (i64, i64) {
    (-a, 2 * a + b)
}

/// Weight pair of the next sphere in a chain plumbed at `0 ← ∞`.
pub fn plumb_step(a: i64, b: i64) -> (i64, i64) {
    (2 * a + b, -a)
}

/// Inverse of [`plumb_step`]: the previous chain sphere's weight pair.
fn plumb_step_back(a_next: i64, b_next: i64) -> (i64, i64) {
    (-b_next, a_next + 2 * b_next)
}

/// The closed-form weight pair for vertex `i` (1-based) of `(family, n)`.
fn closed_form(family: Family, n: usize, i: usize) -> (i64, i64) {
    let n = n as i64;
    let i = i as i64;
    match family {
        Family::A => (-n + 2 * i - 1, n - 2 * i + 3),
        Family::D if i == n => (2, 0),
        Family::D => (-2 * n + 2 * i + 4, 2 * n - 2 * i - 2),
        Family::E if i == n => (2, 0),
        Family::E => (-2 * n + 2 * i + 6, 2 * n - 2 * i - 4),
    }
}

/// Compute all vertex weight pairs by recursion from the anchor conditions,
/// then the directed edge weights. The recursion output is checked against
/// the closed forms and the `a + b = 2`, `w_{i,j} + w_{j,i} = 2` identities.
pub fn propagate_weights(diagram: &DynkinDiagram) -> WeightAssignment {
    let n = diagram.rank();
    let mut vw: BTreeMap<usize, (i64, i64)> = BTreeMap::new();
    match diagram.family() {
        Family::A => {
            // The two singular-fiber conditions b_1 = n+1 and 2a_n + b_n = n+1
            // pin the start of the chain: the recursion preserves s = a + b
            // and steps a by s, so a_n = a_1 + (n−1)s and the pair of
            // conditions solves to a_1 = 1 − n (hence s = 2).
            let rank = n as i64;
            let mut pair = (1 - rank, rank + 1);
            for i in 1..=n {
                vw.insert(i, pair);
                pair = plumb_step(pair.0, pair.1);
            }
        }
        Family::D | Family::E => {
            let branch = diagram.branch_vertex().expect("D/E have a branch vertex");
            // Regular Seifert fibers have isotropy Z/2: the 3-valent vertex
            // carries (0, 2) in the complex orientation.
            vw.insert(branch, (0, 2));
            let mut pair = (0, 2);
            for i in (1..branch).rev() {
                pair = plumb_step_back(pair.0, pair.1);
                vw.insert(i, pair);
            }
            pair = (0, 2);
            for i in branch + 1..n {
                pair = plumb_step(pair.0, pair.1);
                vw.insert(i, pair);
            }
            // Branch attachment at the point 1: trunk (0, k) forces leaf (k, 0).
            let k = vw[&branch].1;
            vw.insert(n, (k, 0));
        }
    }

    for i in 1..=n {
        let (a, b) = vw[&i];
        assert_eq!(a + b, 2, "weight pair at vertex {i} must sum to 2");
        assert_eq!(
            (a, b),
            closed_form(diagram.family(), n, i),
            "recursion disagrees with the closed form at vertex {i}"
        );
    }

    let ew = edge_weights(diagram, &vw).expect("all vertex weights are present");
    WeightAssignment {
        vertex_weights: vw,
        edge_weights: ew,
    }
}

/// Directed tangent weights from vertex weight pairs and attachment tags:
/// the weight on T S_i at the intersection point is `a_i` when the edge
/// attaches at `0`, `−a_i` at `∞`, and `0` at `1` (where the action fixes
/// the sphere pointwise).
pub fn edge_weights(
    diagram: &DynkinDiagram,
    vertex_weights: &BTreeMap<usize, (i64, i64)>,
) -> Result<BTreeMap<(usize, usize), i64>, WeightsError> {
    let mut out = BTreeMap::new();
    for e in diagram.edges() {
        for (v, other, tag) in [(e.i, e.j, e.tag_i), (e.j, e.i, e.tag_j)] {
            let &(a, _) = vertex_weights
                .get(&v)
                .ok_or(WeightsError::MissingVertexWeight { vertex: v })?;
            let w = match tag {
                Attach::Zero => a,
                Attach::Infinity => -a,
                Attach::One => 0,
            };
            out.insert((v, other), w);
        }
        let sum = out[&(e.i, e.j)] + out[&(e.j, e.i)];
        assert_eq!(sum, 2, "w_{{i,j}} + w_{{j,i}} = 2 on edge ({}, {})", e.i, e.j);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::Family;
    use proptest::prelude::*;

    fn diagram(f: Family, n: usize) -> DynkinDiagram {
        DynkinDiagram::new(f, n).unwrap()
    }

    #[test]
    fn weight_at_infinity_examples() {
        assert_eq!(weight_at_infinity(0, 1), (0, 1));
        assert_eq!(weight_at_infinity(1, -1), (-1, 1));
        assert_eq!(weight_at_infinity(0, 2), (0, 2));
    }

    #[test]
    fn plumb_step_examples() {
        assert_eq!(plumb_step(0, 2), (2, 0));
        assert_eq!(plumb_step(-2, 4), (0, 2));
        assert_eq!(plumb_step(0, 0), (0, 0));
    }

    #[test]
    fn plumb_step_back_inverts() {
        for a in -5..=5 {
            for b in -5..=5 {
                let (x, y) = plumb_step(a, b);
                assert_eq!(plumb_step_back(x, y), (a, b));
            }
        }
    }

    #[test]
    fn a1_weights() {
        let w = propagate_weights(&diagram(Family::A, 1));
        assert_eq!(w.vertex(1), (0, 2));
    }

    #[test]
    fn a3_weights() {
        let w = propagate_weights(&diagram(Family::A, 3));
        assert_eq!(w.vertex(1), (-2, 4));
        assert_eq!(w.vertex(2), (0, 2));
        assert_eq!(w.vertex(3), (2, 0));
    }

    #[test]
    fn d4_weights() {
        let w = propagate_weights(&diagram(Family::D, 4));
        assert_eq!(w.vertex(1), (-2, 4));
        assert_eq!(w.vertex(2), (0, 2));
        assert_eq!(w.vertex(3), (2, 0));
        assert_eq!(w.vertex(4), (2, 0));
    }

    #[test]
    fn a2_edge_weights() {
        let w = propagate_weights(&diagram(Family::A, 2));
        assert_eq!(w.vertex(1), (-1, 3));
        assert_eq!(w.vertex(2), (1, 1));
        assert_eq!(w.edge(1, 2), 1);
        assert_eq!(w.edge(2, 1), 1);
    }

    #[test]
    fn d4_branch_edge_weights() {
        let w = propagate_weights(&diagram(Family::D, 4));
        assert_eq!(w.edge(2, 4), 0);
        assert_eq!(w.edge(4, 2), 2);
    }

    #[test]
    fn all_ranks_match_closed_forms_and_identities() {
        let mut diagrams = Vec::new();
        for n in 1..=12 {
            diagrams.push(diagram(Family::A, n));
        }
        for n in 4..=12 {
            diagrams.push(diagram(Family::D, n));
        }
        for n in 6..=8 {
            diagrams.push(diagram(Family::E, n));
        }
        for d in diagrams {
            let w = propagate_weights(&d);
            for i in 1..=d.rank() {
                let (a, b) = w.vertex(i);
                assert_eq!(a + b, 2);
                assert_eq!((a, b), closed_form(d.family(), d.rank(), i));
            }
            for e in d.edges() {
                assert_eq!(w.edge(e.i, e.j) + w.edge(e.j, e.i), 2);
            }
            // Consecutive chain vertices obey the plumbing step.
            let chain_end = match d.family() {
                Family::A => d.rank(),
                Family::D | Family::E => d.rank() - 1,
            };
            for i in 1..chain_end {
                let (a, b) = w.vertex(i);
                assert_eq!(w.vertex(i + 1), plumb_step(a, b));
            }
            if d.family() == Family::A {
                let n = d.rank() as i64;
                let (an, bn) = w.vertex(d.rank());
                assert_eq!(w.vertex(1).1, n + 1);
                assert_eq!(2 * an + bn, n + 1);
            }
        }
    }

    #[test]
    fn edge_weights_reports_missing_vertex() {
        let d = diagram(Family::A, 2);
        let mut partial = BTreeMap::new();
        partial.insert(1usize, (-1i64, 3i64));
        assert_eq!(
            edge_weights(&d, &partial),
            Err(WeightsError::MissingVertexWeight { vertex: 2 })
        );
    }

    proptest! {
        #[test]
        fn step_and_infinity_preserve_the_weight_sum(a in -100i64..=100, b in -100i64..=100) {
            let (x, y) = plumb_step(a, b);
            prop_assert_eq!(x + y, a + b);
            let (u, v) = weight_at_infinity(a, b);
            prop_assert_eq!(u + v, a + b);
        }
    }
}
