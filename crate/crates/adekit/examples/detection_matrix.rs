//! The detection matrix: with a nonzero base invariant and vanishing cross
//! terms, twists along n distinct spheres produce a rank-n matrix, so the
//! twists are linearly independent.
//!
//! ```bash
//! cargo run --example detection_matrix
//! ```

use adekit::floer::{detection_matrix, matrix_rank, Sign, SphereRow};
use num_rational::Rational64;

fn main() {
    let spheres: Vec<SphereRow> = (0..10)
        .map(|i| SphereRow {
            sign: if i % 3 == 0 { Sign::Minus } else { Sign::Plus },
            cross_terms_vanish: true,
        })
        .collect();

    let sw_base = Rational64::from_integer(1);
    let matrix = detection_matrix(sw_base, &spheres).unwrap();
    println!("detection matrix for 10 spheres with base invariant {sw_base}:");
    for row in &matrix {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:>2}")).collect();
        println!("  [{}]", cells.join(" "));
    }
    println!("rank over the rationals: {}", matrix_rank(&matrix));

    let zero = detection_matrix(Rational64::from_integer(0), &spheres).unwrap();
    println!("with a vanishing base invariant the rank drops to {}", matrix_rank(&zero));

    let undeclared = [SphereRow {
        sign: Sign::Plus,
        cross_terms_vanish: false,
    }];
    println!(
        "rows without vanishing cross terms are rejected: {:?}",
        detection_matrix(sw_base, &undeclared)
    );
}
