//! Degree-1 characteristic numbers of family Dirac operators.
//!
//! ```bash
//! cargo run --example family_index
//! ```

use adekit::index::{
    degree1_index, expected_dimension, sphere_family_index, FamilyIndexInput, ManifoldData,
    SpherePair,
};
use adekit::intersect::TripleForm;
use adekit::rootsys::{DynkinDiagram, Family};

fn main() {
    // ADE family twisted by a root class: the index is always +1 or -1.
    let e6 = DynkinDiagram::new(Family::E, 6).unwrap();
    let form = TripleForm::new(&e6);
    println!("E6 root classes and their family indices:");
    for root in e6.enumerate_roots().iter().take(5) {
        let input = FamilyIndexInput::for_ade_class(&form, root.coords()).unwrap();
        println!(
            "  root {root}: (c1^3, p1.c1) = ({}, {}), index = {}",
            input.c1_cubed,
            input.p1_dot_c1,
            degree1_index(input)
        );
    }

    // The blown-up family: c1^3 = -54, p1.c1 = -6, index -1.
    let blowup = FamilyIndexInput::blown_up();
    println!(
        "\nblown-up family: (c1^3, p1.c1) = ({}, {}), index = {}",
        blowup.c1_cubed,
        blowup.p1_dot_c1,
        degree1_index(blowup)
    );

    // The single-sphere closed form n(n-k)(n+k)/(24k).
    println!("\nsingle-sphere indices:");
    for (k, n) in [(-1i64, 3i64), (-1, 5), (-2, -4), (-2, 0), (-2, 6)] {
        let pair = SpherePair::new(k, n).unwrap();
        println!("  k = {k}, n = {n}: {}", sphere_family_index(pair));
    }

    // Expected dimensions with the divisibility gate.
    let data = ManifoldData {
        c1_squared: 0,
        sigma: 0,
        chi: 4,
        b_plus: 1,
        dim_q: 2,
    };
    let (fiber, family) = expected_dimension(data).unwrap();
    println!("\nexpected dimensions for (c1^2, sigma, chi) = (0, 0, 4): fiber {fiber}, family {family}");
}
