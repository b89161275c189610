//! Chamber classification over the 2-sphere base and the wall-crossing and
//! pull-back rules.
//!
//! ```bash
//! cargo run --example chambers_and_walls
//! ```

use adekit::floer::{pullback, wall_crossing};
use adekit::index::classify_chambers;
use num_rational::Rational64;

fn main() {
    println!("chamber sets over the 2-sphere base:");
    for b_plus in 1..=5 {
        println!("  b+ = {b_plus}: {:?}", classify_chambers(b_plus).unwrap());
    }

    // In the b+ = 3 regime the chambers form a Z-family and the invariant
    // changes by j*C across j walls.
    let canonical = Rational64::from_integer(-1);
    let c = Rational64::from_integer(3);
    println!("\nwall crossing from the canonical value {canonical} with C = {c}:");
    for j in -2..=2 {
        println!(
            "  chamber {j}: {}",
            wall_crossing(canonical, j, c, 3).unwrap()
        );
    }
    println!(
        "  nonzero chamber index at b+ = 2 is rejected: {:?}",
        wall_crossing(canonical, 1, c, 2)
    );

    // Pulling back along a base map multiplies by its degree.
    let fsw = Rational64::from_integer(2);
    println!("\npull-backs of an invariant with value {fsw}:");
    for degree in [-1i64, 0, 1, 3] {
        println!("  degree {degree}: {}", pullback(fsw, degree));
    }
}
