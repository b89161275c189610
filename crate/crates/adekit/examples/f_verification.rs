//! Verify that the cubic f evaluates to +24 on every positive root and −24
//! on every negative root, for all diagrams of rank at most 8.
//!
//! ```bash
//! cargo run --example f_verification
//! ```

use adekit::intersect::TripleForm;
use adekit::rootsys::{DynkinDiagram, Family};

fn main() {
    let mut diagrams = Vec::new();
    for n in 1..=8 {
        diagrams.push(DynkinDiagram::new(Family::A, n).unwrap());
    }
    for n in 4..=8 {
        diagrams.push(DynkinDiagram::new(Family::D, n).unwrap());
    }
    for n in 6..=8 {
        diagrams.push(DynkinDiagram::new(Family::E, n).unwrap());
    }

    for diagram in diagrams {
        let report = TripleForm::new(&diagram).verify_f_on_roots();
        println!(
            "{}{}: {}  ({} positive / {} negative)",
            diagram.family(),
            diagram.rank(),
            report.summary(),
            report.positive_count,
            report.negative_count
        );
    }

    // A small slice of the actual table.
    let a2 = DynkinDiagram::new(Family::A, 2).unwrap();
    let form = TripleForm::new(&a2);
    println!("\nf on the roots of A2:");
    for root in a2.enumerate_roots() {
        println!("  f{root} = {}", form.f(root.coords()).unwrap());
    }
}
