//! Enumerate characteristic vectors of ⟨1⟩ ⊕ m⟨−1⟩ under a square constraint
//! and a half-space cut, with the finiteness bounds printed.
//!
//! ```bash
//! cargo run --example lattice_search
//! ```

use adekit::lattice::{count_basic_classes_bound, enumerate_sign_flips, LatticeProblem};
use num_rational::Rational64;

fn main() {
    let problem = LatticeProblem::new(2, -9, Rational64::new(3, 4)).unwrap();
    println!(
        "problem: m = {}, square = {}, a = {}",
        problem.m(),
        problem.square(),
        problem.slope()
    );
    println!("\nbound derivation:");
    for line in &problem.bounds().derivation {
        println!("  {line}");
    }
    println!("\nsolutions:");
    for x in enumerate_sign_flips(&problem) {
        println!("  {x:?}  (re-substitution check: {})", problem.satisfies(&x));
    }

    // A slope of zero empties the half-space outright.
    let empty = LatticeProblem::new(1, -8, Rational64::from_integer(0)).unwrap();
    println!(
        "\nwith a = 0 the constraint x0 < 0 is unsatisfiable: {} solutions",
        enumerate_sign_flips(&empty).len()
    );

    // Counting odd vectors with a fixed square inside the standard box.
    println!("\ncharacteristic counts per square (m = 1):");
    for square in [-24i64, -16, -8, 0, 1, 8] {
        println!(
            "  square {square}: {} vectors",
            count_basic_classes_bound(1, square).unwrap()
        );
    }
}
