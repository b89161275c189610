//! Degree-1 family index arithmetic, expected dimensions, and chamber
//! classification over a 2-sphere base.
//!
//! For a family of spin-c 4-manifolds over S², the first Chern number of the
//! index bundle of the family Dirac operator reduces to the exact rational
//!
//! ```text
//! ⟨c₁³ − p₁·c₁, [M̃]⟩ / 48
//! ```
//!
//! For the ADE family with c₁ = 2·PD[S̃_r] this equals f(r)/24 ∈ {+1, −1};
//! for the blown-up family with c₁ = −3·PD[S̃] it equals −1. A tubular
//! neighborhood of a single sphere of self-intersection k ∈ {−1, −2} admits
//! the closed form `n(n−k)(n+k)/(24k)` where n is the pairing of c₁ with the
//! sphere. All divisions are exact; nothing is ever rounded.
//!
//! The sign of the ADE value depends on the orientation conventions fixed in
//! [`crate::weights`]; the magnitude is convention-independent.

use num_rational::Rational64;
use thiserror::Error;

use crate::intersect::{IntersectError, TripleForm};
use crate::Rational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IndexError {
    /// Sphere self-intersection outside {−1, −2}.
    #[error("self-intersection k must be -1 or -2, got {k}")]
    InvalidSelfIntersection { k: i64 },
    /// k and n must have the same parity.
    #[error("n = {n} and k = {k} must have the same parity")]
    ParityMismatch { k: i64, n: i64 },
    /// c₁² − 3σ − 2χ must be divisible by 4 for genuine spin-c data.
    #[error("c1^2 - 3*sigma - 2*chi = {numerator} is not divisible by 4")]
    NotDivisibleBy4 { numerator: i64 },
    /// Chamber classification needs b⁺ ≥ 1.
    #[error("b+ must be at least 1, got {b_plus}")]
    InvalidBPlus { b_plus: i64 },
    #[error(transparent)]
    Intersect(#[from] IntersectError),
}

/// The two characteristic numbers feeding the degree-1 index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilyIndexInput {
    /// ⟨c₁³, [M̃]⟩
    pub c1_cubed: i64,
    /// ⟨p₁(TM̃/Q)·c₁, [M̃]⟩
    pub p1_dot_c1: i64,
}

impl FamilyIndexInput {
    pub fn new(c1_cubed: i64, p1_dot_c1: i64) -> Self {
        FamilyIndexInput { c1_cubed, p1_dot_c1 }
    }

    /// Characteristic numbers of the ADE family with c₁ = 2·PD[S̃_t]:
    /// c₁³ = 8·(S̃_t)³ and p₁·c₁ = 2·Σᵢ tᵢ·⟨p₁, S̃ᵢ⟩ = 16·Σᵢ tᵢ.
    pub fn for_ade_class(form: &TripleForm, t: &[i64]) -> Result<Self, IndexError> {
        let triple = form.triple_of_class(t)?;
        let total: i64 = t.iter().sum();
        let input = FamilyIndexInput {
            c1_cubed: 8 * triple,
            p1_dot_c1: 16 * total,
        };
        assert_eq!(
            (input.c1_cubed - input.p1_dot_c1).rem_euclid(48),
            0,
            "library-generated index inputs are divisible by 48"
        );
        Ok(input)
    }

    /// Characteristic numbers of the blown-up family with c₁ = −3·PD[S̃]:
    /// the swept exceptional sphere has S̃·S̃·S̃ = 2 and ⟨p₁, S̃⟩ = 2, so
    /// c₁³ = −27·2 and p₁·c₁ = −3·2.
    pub fn blown_up() -> Self {
        let input = FamilyIndexInput {
            c1_cubed: -54,
            p1_dot_c1: -6,
        };
        debug_assert_eq!((input.c1_cubed - input.p1_dot_c1) % 48, 0);
        input
    }
}

/// The degree-1 characteristic number (c₁³ − p₁·c₁)/48, exactly.
pub fn degree1_index(input: FamilyIndexInput) -> Rational {
    Rational64::new(input.c1_cubed - input.p1_dot_c1, 48)
}

/// A sphere of self-intersection k ∈ {−1, −2} with pairing data n ≡ k (mod 2).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpherePair {
    k: i64,
    n: i64,
}

impl SpherePair {
    pub fn new(k: i64, n: i64) -> Result<Self, IndexError> {
        if k != -1 && k != -2 {
            return Err(IndexError::InvalidSelfIntersection { k });
        }
        if (n - k) % 2 != 0 {
            return Err(IndexError::ParityMismatch { k, n });
        }
        Ok(SpherePair { k, n })
    }

    /// Derive n = k + 2 − 2·(S₀·S₁) from the intersection with a second sphere.
    pub fn from_spheres(k: i64, s0_dot_s1: i64) -> Result<Self, IndexError> {
        Self::new(k, k + 2 - 2 * s0_dot_s1)
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn n(&self) -> i64 {
        self.n
    }
}

/// Index of the family built from a single sphere: n(n−k)(n+k)/(24k), exactly.
pub fn sphere_family_index(p: SpherePair) -> Rational {
    Rational64::new(p.n * (p.n - p.k) * (p.n + p.k), 24 * p.k)
}

/// Numerical inputs for expected-dimension arithmetic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ManifoldData {
    pub c1_squared: i64,
    pub sigma: i64,
    pub chi: i64,
    pub b_plus: i64,
    pub dim_q: i64,
}

/// Fiberwise and family expected dimensions:
/// d = (c₁² − 3σ − 2χ)/4 and d + dim Q. The divisibility by 4 is a hard
/// gate — a failure signals non-characteristic input data.
pub fn expected_dimension(m: ManifoldData) -> Result<(i64, i64), IndexError> {
    let numerator = m.c1_squared - 3 * m.sigma - 2 * m.chi;
    if numerator.rem_euclid(4) != 0 {
        return Err(IndexError::NotDivisibleBy4 { numerator });
    }
    let fiber = numerator / 4;
    Ok((fiber, fiber + m.dim_q))
}

/// The dimension polynomial d(l) = k·l² + n·l − 2 of the twisted classes.
pub fn dimension_polynomial(k: i64, n: i64, l: i64) -> i64 {
    k * l * l + n * l - 2
}

/// Homotopy classes of maps from S² into the positive cone of a 4-manifold
/// with the given b⁺.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChamberSet {
    /// A single (canonical) chamber: b⁺ ∉ {1, 3}.
    Single,
    /// Two chambers distinguished by a sign: b⁺ = 1.
    TwoSigned,
    /// A Z worth of chambers indexed by mapping degree: b⁺ = 3.
    IntegerFamily,
}

/// Classify the chamber set over the base S².
pub fn classify_chambers(b_plus: i64) -> Result<ChamberSet, IndexError> {
    if b_plus <= 0 {
        return Err(IndexError::InvalidBPlus { b_plus });
    }
    Ok(match b_plus {
        1 => ChamberSet::TwoSigned,
        3 => ChamberSet::IntegerFamily,
        _ => ChamberSet::Single,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{DynkinDiagram, Family};
    use num_traits::Signed;
    use proptest::prelude::*;

    #[test]
    fn degree1_index_zero_input() {
        assert_eq!(
            degree1_index(FamilyIndexInput::new(0, 0)),
            Rational64::from_integer(0)
        );
    }

    #[test]
    fn degree1_index_blown_up_is_minus_one() {
        assert_eq!(
            degree1_index(FamilyIndexInput::blown_up()),
            Rational64::from_integer(-1)
        );
    }

    #[test]
    fn degree1_index_on_ade_roots_is_f_over_24() {
        for (family, rank) in [(Family::A, 3), (Family::D, 4), (Family::E, 6)] {
            let d = DynkinDiagram::new(family, rank).unwrap();
            let form = TripleForm::new(&d);
            for r in d.enumerate_roots() {
                let input = FamilyIndexInput::for_ade_class(&form, r.coords()).unwrap();
                let idx = degree1_index(input);
                let f = form.f(r.coords()).unwrap();
                assert_eq!(idx, Rational64::new(f, 24));
                assert_eq!(idx.abs(), Rational64::from_integer(1));
            }
        }
    }

    #[test]
    fn sphere_family_index_examples() {
        let p = SpherePair::new(-1, 3).unwrap();
        assert_eq!(sphere_family_index(p), Rational64::from_integer(-1));
        let p = SpherePair::new(-2, 0).unwrap();
        assert_eq!(sphere_family_index(p), Rational64::from_integer(0));
        let p = SpherePair::new(-2, -4).unwrap();
        assert_eq!(sphere_family_index(p), Rational64::from_integer(1));
    }

    #[test]
    fn sphere_pair_validation() {
        assert_eq!(
            SpherePair::new(-3, 3),
            Err(IndexError::InvalidSelfIntersection { k: -3 })
        );
        assert_eq!(
            SpherePair::new(-2, 3),
            Err(IndexError::ParityMismatch { k: -2, n: 3 })
        );
        assert_eq!(SpherePair::from_spheres(-2, 1).unwrap().n(), -2);
    }

    #[test]
    fn sphere_index_matches_a1_root_index() {
        // For the rank-1 diagram and c₁ = 2·PD[S̃_r] with r = (t), the pairing
        // against the core sphere is n = −4t.
        let d = DynkinDiagram::new(Family::A, 1).unwrap();
        let form = TripleForm::new(&d);
        for t in [1i64, -1] {
            let input = FamilyIndexInput::for_ade_class(&form, &[t]).unwrap();
            let via_f = degree1_index(input);
            let p = SpherePair::new(-2, -4 * t).unwrap();
            assert_eq!(sphere_family_index(p), via_f);
        }
    }

    #[test]
    fn expected_dimension_gate() {
        let bad = ManifoldData {
            c1_squared: -1,
            sigma: -9,
            chi: 12,
            b_plus: 2,
            dim_q: 2,
        };
        assert_eq!(
            expected_dimension(bad),
            Err(IndexError::NotDivisibleBy4 { numerator: 2 })
        );
        let ok = ManifoldData {
            c1_squared: 0,
            sigma: 0,
            chi: 4,
            b_plus: 1,
            dim_q: 2,
        };
        assert_eq!(expected_dimension(ok), Ok((-2, 0)));
        let zero = ManifoldData {
            c1_squared: 3 * 5 + 2 * 7,
            sigma: 5,
            chi: 7,
            b_plus: 2,
            dim_q: 2,
        };
        assert_eq!(expected_dimension(zero), Ok((0, 2)));
    }

    #[test]
    fn dimension_polynomial_examples() {
        assert_eq!(dimension_polynomial(-1, 3, 1), 0);
        assert_eq!(dimension_polynomial(-2, 4, 1), 0);
        assert_eq!(dimension_polynomial(-2, 4, 0), -2);
    }

    #[test]
    fn chamber_classification() {
        assert_eq!(classify_chambers(2), Ok(ChamberSet::Single));
        assert_eq!(classify_chambers(1), Ok(ChamberSet::TwoSigned));
        assert_eq!(classify_chambers(3), Ok(ChamberSet::IntegerFamily));
        assert_eq!(classify_chambers(4), Ok(ChamberSet::Single));
        assert_eq!(classify_chambers(0), Err(IndexError::InvalidBPlus { b_plus: 0 }));
    }

    proptest! {
        #[test]
        fn ade_inputs_always_satisfy_the_divisibility_gate(
            t in proptest::collection::vec(-60i64..=60, 4)
        ) {
            // f is divisible by 24 on every integer vector, so c1^3 - p1.c1
            // = 2f is divisible by 48 and the index is integer-valued.
            let d = DynkinDiagram::new(Family::D, 4).unwrap();
            let form = TripleForm::new(&d);
            let input = FamilyIndexInput::for_ade_class(&form, &t).unwrap();
            prop_assert!(degree1_index(input).is_integer());
        }

        #[test]
        fn sphere_index_is_odd_in_n(n in -40i64..=40) {
            for k in [-1i64, -2] {
                let n = if (n - k) % 2 == 0 { n } else { n + 1 };
                let plus = sphere_family_index(SpherePair::new(k, n).unwrap());
                let minus = sphere_family_index(SpherePair::new(k, -n).unwrap());
                prop_assert_eq!(plus, -minus);
            }
        }

        #[test]
        fn dimension_polynomial_difference(k in -5i64..=5, n in -10i64..=10, l in -10i64..=10) {
            let diff = dimension_polynomial(k, n, l) - dimension_polynomial(k, n, 0);
            prop_assert_eq!(diff, l * (k * l + n));
        }
    }
}
