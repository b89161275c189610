//! ADE Dynkin diagrams, plumbing intersection forms, and root enumeration.
//!
//! A diagram of type A_n (n ≥ 1), D_n (n ≥ 4) or E_n (n ∈ {6,7,8}) is a tree
//! with vertices 1..n and at most one 3-valent vertex. Vertices follow the
//! chain convention: vertices 1..n−1 form the chain and, for D and E types,
//! vertex n is the branch leaf. Each edge endpoint carries an attachment tag
//! recording which marked point of the sphere the plumbing identifies:
//!
//! - chain edge (i, i+1): attached at `∞` on sphere i and `0` on sphere i+1;
//! - D_n branch edge (n−2, n): attached at `1` on sphere n−2 and `0` on n;
//! - E_n branch edge (n−3, n): attached at `1` on sphere n−3 and `0` on n.
//!
//! The associated intersection form has −2 on the diagonal and 1 exactly on
//! edges; it is negative definite. Roots are the integer vectors of square
//! −2, enumerated two ways: a bounded exhaustive search (complete over the
//! box |t_i| ≤ 6, which contains every ADE root) and an independent closure
//! under simple reflections.

use std::collections::BTreeSet;
use std::fmt;

use num_rational::Rational64;
use num_traits::Zero;
use thiserror::Error;

/// Every coordinate of every ADE root is at most 6 in absolute value (the
/// extreme is attained by the highest root of E₈), so searching this box is
/// exhaustive for root enumeration.
pub const ROOT_SEARCH_BOX: i64 = 6;

/// Errors from diagram construction and root queries.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum RootSysError {
    /// The (family, rank) pair is outside the ADE classification.
    #[error("invalid rank {rank} for family {family}")]
    InvalidRank { family: Family, rank: usize },
    /// The vector handed to a positive-root operation is not a positive root.
    #[error("not a positive root of this diagram")]
    NotAPositiveRoot,
}

/// The three simply-laced families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    D,
    E,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::A => write!(f, "A"),
            Family::D => write!(f, "D"),
            Family::E => write!(f, "E"),
        }
    }
}

/// Marked point of a sphere at which a plumbing edge attaches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Attach {
    Zero,
    One,
    Infinity,
}

/// An unordered diagram edge with an attachment tag per endpoint.
///
/// By construction `i < j`; `tag_i` is the attachment point on sphere `i`
/// and `tag_j` the one on sphere `j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub i: usize,
    pub j: usize,
    pub tag_i: Attach,
    pub tag_j: Attach,
}

/// A validated ADE Dynkin diagram with canonical edge tags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DynkinDiagram {
    family: Family,
    rank: usize,
    edges: Vec<Edge>,
}

/// An integer root coordinate vector in the basis of the plumbing spheres.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootVector(Vec<i64>);

impl RootVector {
    pub fn new(coords: Vec<i64>) -> Self {
        RootVector(coords)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<i64> {
        self.0
    }

    /// All coordinates nonnegative and at least one positive.
    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&t| t >= 0) && self.0.iter().any(|&t| t > 0)
    }

    /// All coordinates nonpositive and at least one negative.
    pub fn is_negative(&self) -> bool {
        self.0.iter().all(|&t| t <= 0) && self.0.iter().any(|&t| t < 0)
    }

    pub fn negated(&self) -> Self {
        RootVector(self.0.iter().map(|&t| -t).collect())
    }

    /// Coordinate sum; equals the usual height on positive roots.
    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Exactly one coordinate equal to 1, the rest 0.
    pub fn is_simple(&self) -> bool {
        self.0.iter().filter(|&&t| t != 0).count() == 1 && self.0.iter().sum::<i64>() == 1
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (idx, t) in self.0.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{t}")?;
        }
        write!(f, ")")
    }
}

/// The plumbing intersection form: −2 diagonal, 1 on edges, 0 elsewhere.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionForm {
    n: usize,
    entries: Vec<Vec<i64>>,
}

impl IntersectionForm {
    pub fn rank(&self) -> usize {
        self.n
    }

    /// Matrix entry for vertices `i`, `j` (1-based).
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i - 1][j - 1]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.entries
    }

    /// Q(t) = tᵀ·M·t, exactly.
    pub fn evaluate(&self, t: &[i64]) -> i64 {
        assert_eq!(t.len(), self.n, "vector length must equal the rank");
        let mut acc = 0i64;
        for (i, row) in self.entries.iter().enumerate() {
            for (j, &m) in row.iter().enumerate() {
                acc += m * t[i] * t[j];
            }
        }
        acc
    }

    /// Exact determinant by fraction-free elimination.
    pub fn determinant(&self) -> i64 {
        bareiss_determinant(&self.entries, self.n) as i64
    }

    /// Negative definiteness via the leading principal minors: the k-th
    /// minor must have sign (−1)^k.
    pub fn is_negative_definite(&self) -> bool {
        (1..=self.n).all(|k| {
            let minor = bareiss_determinant(&self.entries, k);
            if k % 2 == 0 {
                minor > 0
            } else {
                minor < 0
            }
        })
    }
}

/// Determinant of the leading k×k block, exactly (Bareiss elimination).
fn bareiss_determinant(m: &[Vec<i64>], k: usize) -> i128 {
    if k == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = (0..k)
        .map(|i| (0..k).map(|j| m[i][j] as i128).collect())
        .collect();
    let mut prev = 1i128;
    let mut sign = 1i128;
    for col in 0..k - 1 {
        if a[col][col] == 0 {
            // pivot search; a zero column means determinant 0
            let swap = (col + 1..k).find(|&r| a[r][col] != 0);
            match swap {
                Some(r) => {
                    a.swap(col, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in col + 1..k {
            for j in col + 1..k {
                a[i][j] = (a[i][j] * a[col][col] - a[i][col] * a[col][j]) / prev;
            }
        }
        prev = a[col][col];
    }
    sign * a[k - 1][k - 1]
}

impl DynkinDiagram {
    /// Build the canonical diagram for `(family, rank)`.
    ///
    /// Valid ranks: A_n for n ≥ 1, D_n for n ≥ 4, E_n for n ∈ {6, 7, 8}.
    pub fn new(family: Family, rank: usize) -> Result<Self, RootSysError> {
        let valid = match family {
            Family::A => rank >= 1,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
        };
        if !valid {
            return Err(RootSysError::InvalidRank { family, rank });
        }
        let chain_end = match family {
            Family::A => rank.saturating_sub(1),
            Family::D | Family::E => rank - 2,
        };
        let mut edges: Vec<Edge> = (1..=chain_end)
            .map(|i| Edge {
                i,
                j: i + 1,
                tag_i: Attach::Infinity,
                tag_j: Attach::Zero,
            })
            .collect();
        match family {
            Family::A => {}
            Family::D => edges.push(Edge {
                i: rank - 2,
                j: rank,
                tag_i: Attach::One,
                tag_j: Attach::Zero,
            }),
            Family::E => edges.push(Edge {
                i: rank - 3,
                j: rank,
                tag_i: Attach::One,
                tag_j: Attach::Zero,
            }),
        }
        Ok(DynkinDiagram {
            family,
            rank,
            edges,
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Vertex labels 1..=n.
    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        1..=self.rank
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.edges
            .iter()
            .any(|e| (e.i == i && e.j == j) || (e.i == j && e.j == i))
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|e| {
                if e.i == v {
                    Some(e.j)
                } else if e.j == v {
                    Some(e.i)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).len()
    }

    /// The 3-valent vertex, if any (v_{n−2} for D, v_{n−3} for E).
    pub fn branch_vertex(&self) -> Option<usize> {
        match self.family {
            Family::A => None,
            Family::D => Some(self.rank - 2),
            Family::E => Some(self.rank - 3),
        }
    }

    pub fn intersection_form(&self) -> IntersectionForm {
        let n = self.rank;
        let mut entries = vec![vec![0i64; n]; n];
        for (i, row) in entries.iter_mut().enumerate() {
            row[i] = -2;
        }
        for e in &self.edges {
            entries[e.i - 1][e.j - 1] = 1;
            entries[e.j - 1][e.i - 1] = 1;
        }
        IntersectionForm { n, entries }
    }

    /// The Cartan matrix, i.e. the negative of the intersection form.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        self.intersection_form()
            .rows()
            .iter()
            .map(|row| row.iter().map(|&m| -m).collect())
            .collect()
    }

    /// All integer vectors t with tᵀ·M·t = −2, sorted lexicographically.
    ///
    /// The search is an exhaustive scan of the box |t_i| ≤ [`ROOT_SEARCH_BOX`]
    /// pruned through the completed-square decomposition of the (positive
    /// definite) Cartan form, so no box point with square −2 can be missed.
    pub fn enumerate_roots(&self) -> Vec<RootVector> {
        let n = self.rank;
        let q = quadratic_completion(&self.cartan_matrix());
        let mut coords = vec![0i64; n];
        let mut out = Vec::new();
        enumerate_rec(
            &q,
            n,
            &mut coords,
            Rational64::from_integer(2),
            &mut out,
        );
        let mut roots: Vec<RootVector> = out.into_iter().map(RootVector).collect();
        roots.sort();
        roots
    }

    /// Independent root enumeration: close the simple roots under the n
    /// simple reflections t ↦ t − (tᵀ·C·e_k)·e_k.
    pub fn reflection_closure_roots(&self) -> Vec<RootVector> {
        let n = self.rank;
        let cartan = self.cartan_matrix();
        let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut queue: Vec<Vec<i64>> = Vec::new();
        for k in 0..n {
            let mut e = vec![0i64; n];
            e[k] = 1;
            seen.insert(e.clone());
            queue.push(e);
        }
        while let Some(t) = queue.pop() {
            for k in 0..n {
                let pairing: i64 = (0..n).map(|j| cartan[k][j] * t[j]).sum();
                let mut s = t.clone();
                s[k] -= pairing;
                if seen.insert(s.clone()) {
                    queue.push(s);
                }
            }
        }
        seen.into_iter().map(RootVector).collect()
    }

    /// A descent path from `root` to a simple root through positive roots,
    /// each step decrementing a single coordinate by 1. Deterministic: the
    /// lowest coordinate index that still yields a root is decremented first.
    pub fn hasse_path(&self, root: &RootVector) -> Result<Vec<RootVector>, RootSysError> {
        let roots: BTreeSet<Vec<i64>> = self
            .enumerate_roots()
            .into_iter()
            .map(RootVector::into_coords)
            .collect();
        self.hasse_path_in(root, &roots)
    }

    /// Same as [`hasse_path`](Self::hasse_path) with a precomputed root set.
    pub fn hasse_path_in(
        &self,
        root: &RootVector,
        roots: &BTreeSet<Vec<i64>>,
    ) -> Result<Vec<RootVector>, RootSysError> {
        if root.coords().len() != self.rank
            || !root.is_positive()
            || !roots.contains(root.coords())
        {
            return Err(RootSysError::NotAPositiveRoot);
        }
        let mut path = vec![root.clone()];
        let mut current = root.coords().to_vec();
        while !RootVector(current.clone()).is_simple() {
            let mut stepped = false;
            for k in 0..self.rank {
                if current[k] == 0 {
                    continue;
                }
                current[k] -= 1;
                if roots.contains(&current) {
                    path.push(RootVector(current.clone()));
                    stepped = true;
                    break;
                }
                current[k] += 1;
            }
            assert!(
                stepped,
                "every positive non-simple root admits a descent step"
            );
        }
        Ok(path)
    }
}

/// Complete-the-square data for a positive definite integer matrix C:
/// returns q with Q(x) = Σ_i q[i][i]·(x_i + Σ_{j>i} q[i][j]·x_j)².
fn quadratic_completion(cartan: &[Vec<i64>]) -> Vec<Vec<Rational64>> {
    let n = cartan.len();
    let mut q: Vec<Vec<Rational64>> = cartan
        .iter()
        .map(|row| row.iter().map(|&c| Rational64::from_integer(c)).collect())
        .collect();
    for i in 0..n {
        let pivot = q[i][i];
        assert!(pivot > Rational64::zero(), "form must be positive definite");
        for cell in q[i].iter_mut().skip(i + 1) {
            *cell /= pivot;
        }
        // Schur complement of the pivot: column i below the diagonal still
        // holds the undivided symmetric entries.
        for k in i + 1..n {
            for l in k..n {
                let delta = q[k][i] * q[i][l];
                q[k][l] -= delta;
                q[l][k] = q[k][l];
            }
        }
    }
    q
}

/// Choose coordinates from the last index down; `remaining` is the budget
/// 2 − Σ(cost of chosen levels). Records every full assignment that exhausts
/// the budget exactly.
fn enumerate_rec(
    q: &[Vec<Rational64>],
    level: usize,
    coords: &mut [i64],
    remaining: Rational64,
    out: &mut Vec<Vec<i64>>,
) {
    if level == 0 {
        if remaining.is_zero() {
            out.push(coords.to_vec());
        }
        return;
    }
    let i = level - 1;
    let n = coords.len();
    let mut shift = Rational64::zero();
    for j in i + 1..n {
        shift += q[i][j] * Rational64::from_integer(coords[j]);
    }
    for x in -ROOT_SEARCH_BOX..=ROOT_SEARCH_BOX {
        let u = Rational64::from_integer(x) + shift;
        let cost = q[i][i] * u * u;
        if cost > remaining {
            continue;
        }
        coords[i] = x;
        enumerate_rec(q, i, coords, remaining - cost, out);
    }
    coords[i] = 0;
}
