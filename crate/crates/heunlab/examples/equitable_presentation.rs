//! The chain Racah -> reduced -> equitable: affine changes of generators,
//! the symmetric relations, and the exact round trip back to the K's.

use heunlab::exact::{int, rat, rat_str};
use heunlab::racah::{
    racah_realization, to_equitable, to_reduced, RacahParams, Truncation,
};

fn main() {
    let params = RacahParams::new(
        rat(1, 3),
        rat(-21, 5),
        rat(2, 7),
        rat(1, 5),
        3,
        Truncation::BetaDelta,
    )
    .expect("valid truncation");
    let real = racah_realization(&params).expect("grid closes");

    let (red, mut report) = to_reduced(&real).expect("a1, a2 nonzero");
    println!("reduced scalars:");
    println!("  d  = {}", rat_str(&red.d));
    println!("  e1 = {}", rat_str(&red.e1));
    println!("  e2 = {}", rat_str(&red.e2));

    let (eq, sub) = to_equitable(&real, &red);
    report.merge(sub);
    report.stamp("racah", None);

    // V1 + V2 + V3 is the central scalar 2d
    let i = real.eye();
    let sum = &(&eq.v1 + &eq.v2) + &eq.v3;
    assert_eq!(sum, i.scale(&(int(2) * &red.d)));
    println!("\nV1 + V2 + V3 = 2d I with 2d = {}", rat_str(&(int(2) * &red.d)));

    println!("\n{report}");
    std::process::exit(if report.has_hard_failure() { 1 } else { 0 });
}
