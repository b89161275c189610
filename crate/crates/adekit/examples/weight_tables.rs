//! Print the circle-action weight tables of some ADE plumbings.
//!
//! ```bash
//! cargo run --example weight_tables
//! ```

use adekit::rootsys::{DynkinDiagram, Family};
use adekit::weights::{plumb_step, propagate_weights, weight_at_infinity};

fn main() {
    println!("a single plumbing step sends (a, b) to (2a+b, -a):");
    println!("  (0, 2) -> {:?}", plumb_step(0, 2));
    println!("  and the weight at the far pole of (0, 2) is {:?}", weight_at_infinity(0, 2));

    for (family, rank) in [(Family::A, 5), (Family::D, 6), (Family::E, 8)] {
        let diagram = DynkinDiagram::new(family, rank).unwrap();
        let assignment = propagate_weights(&diagram);
        println!("\n{family}{rank} vertex weights (a_i, b_i):");
        for v in diagram.vertices() {
            let (a, b) = assignment.vertex(v);
            println!("  v{v}: ({a}, {b})");
        }
        println!("{family}{rank} directed edge weights w_ij:");
        for e in diagram.edges() {
            println!(
                "  w[{} -> {}] = {}, w[{} -> {}] = {}  (sum 2)",
                e.i,
                e.j,
                assignment.edge(e.i, e.j),
                e.j,
                e.i,
                assignment.edge(e.j, e.i)
            );
        }
    }
}
