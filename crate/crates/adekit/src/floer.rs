//! Rank-1 graded-module bookkeeping over a formal variable U.
//!
//! For the 3-manifolds in scope (the 3-sphere and L-spaces) the three
//! flavors of the monopole Floer package reduce to rank-1 graded modules
//! over Q[U], so every map in sight is a pair (grading shift, rational
//! coefficient) and every formula becomes exact scalar arithmetic:
//!
//! - `Bar` is a full Laurent tower `Q[U, U⁻¹]` with generators ē_k at
//!   gradings k ∈ −2h + 2Z (h the Frøyshov invariant of the space);
//! - `Hat` is the downward tower with top generator at grading −2h−1;
//! - `Check` is the upward tower with bottom generator at grading −2h.
//!
//! The U-action lowers gradings by 2. A family cobordism arrow carries a
//! shift `d = (c₁² − σ)/4 + dim Q` and a scalar coefficient which is forced
//! to zero whenever the fiber has b⁺ > 0 or the base is odd-dimensional.
//! Pairing, switching, wall-crossing, and pull-back are all evaluated here
//! exactly; orientation signs are always explicit inputs, never inferred.

use num_rational::Rational64;
use num_traits::Zero;
use thiserror::Error;

use crate::Rational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FloerError {
    /// The Frøyshov invariant must be a half-integer (2h ∈ Z).
    #[error("2h must be an integer, got h = {h}")]
    InvalidFroyshov { h: Rational },
    /// Grading outside the legal support of the requested flavor.
    #[error("grading {grading} is not in the {flavor:?} support for h = {h}")]
    GradingOutOfRange {
        flavor: Flavor,
        grading: Rational,
        h: Rational,
    },
    /// The U-action would push a Hat/Check element out of its support.
    #[error("U-action underflows the {flavor:?} support at grading {grading}")]
    GradingUnderflow { flavor: Flavor, grading: Rational },
    /// A Bar-flavored element was required.
    #[error("expected a Bar-flavored element, got {got:?}")]
    WrongFlavor { got: Flavor },
    /// Chamber indices other than 0 only exist in the b⁺ = 3 regime.
    #[error("chamber index {j} requires b+ = 3, got b+ = {b_plus}")]
    InvalidChamberIndex { j: i64, b_plus: i64 },
    /// The detection matrix needs every declared cross term to vanish.
    #[error("sphere {row} does not declare vanishing cross terms")]
    InconsistentVanishingFlags { row: usize },
}

/// Which tower an element lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Flavor {
    Bar,
    Hat,
    Check,
}

/// A scalar multiple of the canonical generator in one grading.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedElement {
    pub flavor: Flavor,
    pub grading: Rational,
    pub coefficient: Rational,
}

impl GradedElement {
    pub fn new(flavor: Flavor, grading: Rational, coefficient: Rational) -> Self {
        GradedElement {
            flavor,
            grading,
            coefficient,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coefficient.is_zero()
    }
}

/// An L-space, reduced to the single datum that fixes where its canonical
/// generators live.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LSpaceData {
    froyshov: Rational,
}

impl LSpaceData {
    pub fn new(froyshov: Rational) -> Result<Self, FloerError> {
        if !(froyshov * Rational64::from_integer(2)).is_integer() {
            return Err(FloerError::InvalidFroyshov { h: froyshov });
        }
        Ok(LSpaceData { froyshov })
    }

    /// The 3-sphere: h = 0.
    pub fn s3() -> Self {
        LSpaceData {
            froyshov: Rational64::zero(),
        }
    }

    pub fn froyshov(&self) -> Rational {
        self.froyshov
    }

    /// Top grading of the Hat tower: −2h − 1.
    pub fn hat_top(&self) -> Rational {
        -Rational64::from_integer(2) * self.froyshov - 1
    }

    /// Bottom grading of the Check tower: −2h.
    pub fn check_bottom(&self) -> Rational {
        -Rational64::from_integer(2) * self.froyshov
    }

    fn in_support(&self, flavor: Flavor, grading: Rational) -> bool {
        let offset = match flavor {
            Flavor::Bar | Flavor::Check => self.check_bottom(),
            Flavor::Hat => self.hat_top(),
        };
        let step = (grading - offset) / Rational64::from_integer(2);
        if !step.is_integer() {
            return false;
        }
        match flavor {
            Flavor::Bar => true,
            Flavor::Hat => grading <= self.hat_top(),
            Flavor::Check => grading >= self.check_bottom(),
        }
    }

    /// The canonical Bar generator ē_k (any k ∈ −2h + 2Z).
    pub fn bar_generator(&self, grading: Rational) -> Result<GradedElement, FloerError> {
        self.generator(Flavor::Bar, grading)
    }

    /// The canonical Hat generator ê_k (k ∈ −2h−1 − 2Z≥0).
    pub fn hat_generator(&self, grading: Rational) -> Result<GradedElement, FloerError> {
        self.generator(Flavor::Hat, grading)
    }

    /// The canonical Check generator ě_k (k ∈ −2h + 2Z≥0).
    pub fn check_generator(&self, grading: Rational) -> Result<GradedElement, FloerError> {
        self.generator(Flavor::Check, grading)
    }

    fn generator(&self, flavor: Flavor, grading: Rational) -> Result<GradedElement, FloerError> {
        if !self.in_support(flavor, grading) {
            return Err(FloerError::GradingOutOfRange {
                flavor,
                grading,
                h: self.froyshov,
            });
        }
        Ok(GradedElement::new(
            flavor,
            grading,
            Rational64::from_integer(1),
        ))
    }

    /// Multiply by U: same flavor and coefficient, grading lowered by 2.
    /// Hat and Check elements must stay inside their supports.
    pub fn u_action(&self, x: &GradedElement) -> Result<GradedElement, FloerError> {
        let grading = x.grading - 2;
        match x.flavor {
            Flavor::Bar => {}
            Flavor::Hat | Flavor::Check => {
                if !self.in_support(x.flavor, grading) {
                    return Err(FloerError::GradingUnderflow {
                        flavor: x.flavor,
                        grading: x.grading,
                    });
                }
            }
        }
        Ok(GradedElement::new(x.flavor, grading, x.coefficient))
    }
}

/// Base-dimension parity of a family cobordism.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

/// A family cobordism reduced to its scalar action on rank-1 towers:
/// grading shift d, coefficient c, and the two data that can force c to 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CobordismArrow {
    pub shift: Rational,
    pub coefficient: Rational,
    pub b_plus: u32,
    pub parity: Parity,
}

impl CobordismArrow {
    pub fn new(shift: Rational, coefficient: Rational, b_plus: u32, parity: Parity) -> Self {
        CobordismArrow {
            shift,
            coefficient,
            b_plus,
            parity,
        }
    }

    /// The coefficient actually applied: 0 when b⁺ > 0 or the base is
    /// odd-dimensional, the declared coefficient otherwise.
    pub fn effective_coefficient(&self) -> Rational {
        if self.b_plus > 0 || self.parity == Parity::Odd {
            Rational64::zero()
        } else {
            self.coefficient
        }
    }

    /// Compose two arrows over the same base: shifts add, coefficients
    /// multiply, b⁺ accumulates.
    pub fn compose(&self, then: &CobordismArrow) -> CobordismArrow {
        assert_eq!(
            self.parity, then.parity,
            "arrows over the same base share the base parity"
        );
        CobordismArrow {
            shift: self.shift + then.shift,
            coefficient: self.coefficient * then.coefficient,
            b_plus: self.b_plus + then.b_plus,
            parity: self.parity,
        }
    }
}

/// Action of an arrow on the Bar tower: ē_n ↦ c·ē_{n+d}.
pub fn hm_bar_map(arrow: &CobordismArrow, x: &GradedElement) -> Result<GradedElement, FloerError> {
    if x.flavor != Flavor::Bar {
        return Err(FloerError::WrongFlavor { got: x.flavor });
    }
    Ok(GradedElement::new(
        Flavor::Bar,
        x.grading + arrow.shift,
        arrow.effective_coefficient() * x.coefficient,
    ))
}

/// Image of the S³ generator 1̂ under a cobordism arrow into an L-space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HatImage {
    pub element: GradedElement,
    /// Set when the target tower cannot receive the image grading, which
    /// forces the arrow coefficient to vanish for consistency.
    pub chern_must_vanish: bool,
}

/// Apply an arrow out of S³ to 1̂ (grading −1): the image is c·ê_{d−1} when
/// the base is even-dimensional, b⁺ = 0 and −2h ≥ d−1; it is zero when the
/// parity is odd or b⁺ > 0; and when −2h < d−1 the image is zero with a flag
/// recording that c itself must vanish.
pub fn hm_hat_of_generator(arrow: &CobordismArrow, target: &LSpaceData) -> HatImage {
    let grading = -Rational64::from_integer(1) + arrow.shift;
    let out_of_support = grading > target.check_bottom();
    let coefficient = if out_of_support {
        Rational64::zero()
    } else {
        arrow.effective_coefficient()
    };
    HatImage {
        element: GradedElement::new(Flavor::Hat, grading, coefficient),
        chern_must_vanish: out_of_support && !arrow.effective_coefficient().is_zero(),
    }
}

/// Convention for the pairing between homology and cohomology towers: the
/// pairing of gradings g (left) and g′ (dual side) is nonzero exactly when
/// g − g′ equals the offset. The default −1 is pinned by the S³
/// normalization ⟨1̂, 1̌⟩ with gradings −1 and 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairingRule {
    pub offset: Rational,
}

impl Default for PairingRule {
    fn default() -> Self {
        PairingRule {
            offset: -Rational64::from_integer(1),
        }
    }
}

/// Evaluate the canonical pairing: the product of the coefficients when the
/// gradings match under the rule, zero otherwise.
pub fn evaluate_gluing(
    left: &GradedElement,
    right_dual: &GradedElement,
    rule: &PairingRule,
) -> Rational {
    if left.grading - right_dual.grading == rule.offset {
        left.coefficient * right_dual.coefficient
    } else {
        Rational64::zero()
    }
}

/// The switching rule: chern·sw when the cut-off piece has b⁺ = 0, and 0
/// when it has b⁺ > 0. The second b⁺ only selects which canonical chamber
/// the output lives in and does not change the arithmetic.
pub fn switching(chern: Rational, sw_fiber: Rational, b_plus_m1: u32, _b_plus_m2: u32) -> Rational {
    if b_plus_m1 > 0 {
        Rational64::zero()
    } else {
        chern * sw_fiber
    }
}

/// Wall crossing over S²: the invariant in chamber j differs from the
/// canonical one by j·C, and nonzero j only exists when b⁺ = 3.
pub fn wall_crossing(
    fsw_canonical: Rational,
    j: i64,
    wall_crossing_number: Rational,
    b_plus: i64,
) -> Result<Rational, FloerError> {
    if j != 0 && b_plus != 3 {
        return Err(FloerError::InvalidChamberIndex { j, b_plus });
    }
    Ok(fsw_canonical + Rational64::from_integer(j) * wall_crossing_number)
}

/// Pull-back along a base map of the given degree.
pub fn pullback(fsw: Rational, degree: i64) -> Rational {
    Rational64::from_integer(degree) * fsw
}

/// Explicit orientation sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(&self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// One sphere feeding the detection matrix: its diagonal sign and the
/// declaration that all off-diagonal invariants it meets vanish.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SphereRow {
    pub sign: Sign,
    pub cross_terms_vanish: bool,
}

/// The matrix of twist invariants against the twisted structures: diagonal
/// entries ±sw_base, off-diagonal zero under the declared vanishing. Errors
/// out if any row fails to declare its cross terms vanishing, since nothing
/// can then be said about the off-diagonal entries.
pub fn detection_matrix(
    sw_base: Rational,
    spheres: &[SphereRow],
) -> Result<Vec<Vec<Rational>>, FloerError> {
    if let Some(row) = spheres.iter().position(|s| !s.cross_terms_vanish) {
        return Err(FloerError::InconsistentVanishingFlags { row });
    }
    let n = spheres.len();
    let mut matrix = vec![vec![Rational64::zero(); n]; n];
    for (i, sphere) in spheres.iter().enumerate() {
        matrix[i][i] = Rational64::from_integer(sphere.sign.value()) * sw_base;
    }
    Ok(matrix)
}

/// Rank over Q by exact Gaussian elimination.
pub fn matrix_rank(matrix: &[Vec<Rational>]) -> usize {
    let rows = matrix.len();
    if rows == 0 {
        return 0;
    }
    let cols = matrix[0].len();
    let mut work: Vec<Vec<Rational>> = matrix.to_vec();
    let mut rank = 0;
    for col in 0..cols {
        let pivot = (rank..rows).find(|&r| !work[r][col].is_zero());
        let Some(pivot) = pivot else { continue };
        work.swap(rank, pivot);
        let lead = work[rank][col];
        let pivot_row = work[rank].clone();
        for (r, row) in work.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let factor = row[col] / lead;
                for (cell, pivot_cell) in row.iter_mut().zip(&pivot_row).skip(col) {
                    *cell -= factor * pivot_cell;
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}
