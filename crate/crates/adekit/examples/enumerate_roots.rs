//! Enumerate the roots of ADE diagrams two independent ways and compare.
//!
//! ```bash
//! cargo run --example enumerate_roots
//! ```

use adekit::rootsys::{DynkinDiagram, Family};

fn main() {
    for (family, rank) in [
        (Family::A, 3),
        (Family::D, 4),
        (Family::E, 6),
        (Family::E, 7),
        (Family::E, 8),
    ] {
        let diagram = DynkinDiagram::new(family, rank).unwrap();
        let boxed = diagram.enumerate_roots();
        let reflected = diagram.reflection_closure_roots();
        println!(
            "{family}{rank}: {} roots (box search), {} roots (reflection closure), agree: {}",
            boxed.len(),
            reflected.len(),
            boxed == reflected
        );
    }

    let a2 = DynkinDiagram::new(Family::A, 2).unwrap();
    println!("\nall roots of A2:");
    for root in a2.enumerate_roots() {
        println!("  {root}  Q = {}", a2.intersection_form().evaluate(root.coords()));
    }

    let d4 = DynkinDiagram::new(Family::D, 4).unwrap();
    let highest = adekit::rootsys::RootVector::new(vec![1, 2, 1, 1]);
    println!("\ndescent path from the highest root of D4:");
    for step in d4.hasse_path(&highest).unwrap() {
        println!("  {step}");
    }
}
