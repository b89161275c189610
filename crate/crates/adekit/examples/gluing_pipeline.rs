//! The full gluing pipeline in library code: an index computation feeds a
//! cobordism arrow, the arrow maps the standard generator, the pairing
//! produces the family invariant, and the switching rule cross-checks it.
//!
//! ```bash
//! cargo run --example gluing_pipeline
//! ```

use adekit::floer::{
    evaluate_gluing, hm_hat_of_generator, switching, CobordismArrow, Flavor, GradedElement,
    LSpaceData, PairingRule, Parity,
};
use adekit::index::{degree1_index, FamilyIndexInput};
use adekit::intersect::TripleForm;
use adekit::rootsys::{DynkinDiagram, Family, RootVector};
use num_rational::Rational64;

fn main() {
    let diagram = DynkinDiagram::new(Family::A, 2).unwrap();
    let form = TripleForm::new(&diagram);
    let root = RootVector::new(vec![1, 1]);

    // Stage 1: the degree-1 index of the twisted family.
    let input = FamilyIndexInput::for_ade_class(&form, root.coords()).unwrap();
    let chern = degree1_index(input);
    println!("stage 1: index of the A2 family twisted by {root} = {chern}");

    // Stage 2: the arrow out of the 3-sphere carries that scalar.
    let s3 = LSpaceData::s3();
    let arrow = CobordismArrow::new(Rational64::from_integer(0), chern, 0, Parity::Even);
    let image = hm_hat_of_generator(&arrow, &s3);
    println!(
        "stage 2: image of the standard generator = {} * e_hat({})",
        image.element.coefficient, image.element.grading
    );

    // Stage 3: pair against the dual side, whose coefficient is the fiber
    // invariant (taken to be 1 here).
    let sw_fiber = Rational64::from_integer(1);
    let dual = GradedElement::new(Flavor::Check, Rational64::from_integer(0), sw_fiber);
    let fsw = evaluate_gluing(&image.element, &dual, &PairingRule::default());
    println!("stage 3: glued family invariant = {fsw}");

    // The switching rule computes the same number in one step.
    let switched = switching(chern, sw_fiber, 0, 2);
    println!("switching rule: {switched}  (agreement: {})", fsw == switched);

    // A cut piece with b+ > 0 kills the invariant along both routes.
    let blocked = CobordismArrow::new(Rational64::from_integer(0), chern, 1, Parity::Even);
    let blocked_image = hm_hat_of_generator(&blocked, &s3);
    println!(
        "with b+ = 1 on the cut piece: glued = {}, switched = {}",
        evaluate_gluing(&blocked_image.element, &dual, &PairingRule::default()),
        switching(chern, sw_fiber, 1, 2)
    );
}
