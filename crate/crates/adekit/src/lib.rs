//! # adekit
//!
//! Exact combinatorial invariants of ADE plumbings and the families of
//! 4-manifolds built from them.
//!
//! Everything here is integer or rational arithmetic — no floats anywhere.
//! The crate computes:
//!
//! - **Root systems** ([`rootsys`]): A/D/E Dynkin diagrams, their plumbing
//!   intersection forms (−2 on the diagonal, 1 on edges), complete root
//!   enumeration by two independent algorithms, and walks down the Hasse
//!   structure on positive roots.
//! - **Circle-action weights** ([`weights`]): the rotation weight pair
//!   `(a_i, b_i)` at the marked fixed point of each sphere in the plumbing,
//!   propagated by the plumbing recursion and cross-checked against closed
//!   forms, plus the per-edge tangent weights `w_{i,j}`.
//! - **Triple intersections** ([`intersect`]): the trilinear form on the
//!   4-cycles swept out by the spheres, the first-Pontryagin pairing, and the
//!   cubic polynomial `f` whose value on every root is ±24.
//! - **Family index arithmetic** ([`index`]): the degree-1 characteristic
//!   number `(c₁³ − p₁·c₁)/48` of a family Dirac operator, the sphere-family
//!   formula `n(n−k)(n+k)/(24k)`, expected dimensions, and chamber
//!   classification over the 2-sphere base.
//! - **Lattice enumeration** ([`lattice`]): characteristic vectors of
//!   `⟨1⟩ ⊕ m⟨−1⟩` subject to a square constraint and a half-space cut, with
//!   explicit search-bound derivations.
//! - **Graded-module bookkeeping** ([`floer`]): rank-1 graded modules over a
//!   formal variable `U`, cobordism arrows as (grading shift, coefficient)
//!   pairs, and the gluing / switching / wall-crossing / pull-back rules
//!   evaluated as exact scalar arithmetic.
//! - **CLI** ([`cli`]): a thin command-line front end emitting deterministic
//!   JSON or TSV tables.
//!
//! ## Quick start
//!
//! ```rust
//! use adekit::rootsys::{DynkinDiagram, Family};
//! use adekit::intersect::TripleForm;
//!
//! let e8 = DynkinDiagram::new(Family::E, 8).unwrap();
//! let roots = e8.enumerate_roots();
//! assert_eq!(roots.len(), 240);
//!
//! // f evaluates to +24 on positive roots and −24 on negative roots.
//! let form = TripleForm::new(&e8);
//! for r in &roots {
//!     assert_eq!(form.f(r.coords()).unwrap().abs(), 24);
//! }
//! ```
//!
//! Runnable walkthroughs for each capability live in `examples/`; see the
//! README for the list.

#![forbid(unsafe_code)]

pub mod cli;
pub mod floer;
pub mod index;
pub mod intersect;
pub mod lattice;
pub mod rootsys;
pub mod weights;

/// Exact rational scalar used throughout the crate.
pub type Rational = num_rational::Rational64;

pub use intersect::TripleForm;
pub use rootsys::{DynkinDiagram, Family, RootVector};
pub use weights::WeightAssignment;
