//! The three rank-1 towers of an L-space and the U-action on them.
//!
//! ```bash
//! cargo run --example graded_towers
//! ```

use adekit::floer::{hm_bar_map, CobordismArrow, LSpaceData, Parity};
use num_rational::Rational64;

fn rat(n: i64) -> Rational64 {
    Rational64::from_integer(n)
}

fn main() {
    // An L-space with Frøyshov invariant 1/2: the towers sit at
    // Bar: ..., -5, -3, -1, 1, ...   Hat: -2, -4, ...   Check: -1, 1, 3, ...
    let space = LSpaceData::new(Rational64::new(1, 2)).unwrap();
    println!(
        "L-space with h = {}: Hat top = {}, Check bottom = {}",
        space.froyshov(),
        space.hat_top(),
        space.check_bottom()
    );

    let mut bar = space.bar_generator(rat(3)).unwrap();
    print!("U-orbit in the Bar tower starting at grading 3:");
    for _ in 0..4 {
        print!(" {}", bar.grading);
        bar = space.u_action(&bar).unwrap();
    }
    println!(" ...");

    // The Check tower has a bottom; U errors out rather than leaving it.
    let bottom = space.check_generator(space.check_bottom()).unwrap();
    println!(
        "U on the Check bottom element: {:?}",
        space.u_action(&bottom)
    );

    // A cobordism arrow acts on the Bar tower by its shift and coefficient.
    let s3 = LSpaceData::s3();
    let e = s3.bar_generator(rat(-2)).unwrap();
    let arrow = CobordismArrow::new(rat(2), rat(-1), 0, Parity::Even);
    let image = hm_bar_map(&arrow, &e).unwrap();
    println!(
        "arrow (d = {}, c = {}) sends e_bar(-2) to {} * e_bar({})",
        arrow.shift, arrow.coefficient, image.coefficient, image.grading
    );

    // Arrows with b+ > 0 or an odd-dimensional base act by zero.
    let blocked = CobordismArrow::new(rat(2), rat(-1), 1, Parity::Even);
    let odd = CobordismArrow::new(rat(2), rat(-1), 0, Parity::Odd);
    println!(
        "blocked arrows: b+ > 0 gives coefficient {}, odd base gives {}",
        hm_bar_map(&blocked, &e).unwrap().coefficient,
        hm_bar_map(&odd, &e).unwrap().coefficient
    );
}
