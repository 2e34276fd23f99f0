//! Builds the Racah bispectral pair on a small grid, verifies the defining
//! relations, and refits the structure constants from the matrices alone.

use heunlab::exact::{int, rat, rat_str};
use heunlab::racah::{racah_realization, verify_racah, RacahParams, Truncation};

fn main() {
    let params = RacahParams::new(int(-3), rat(1, 2), rat(1, 2), rat(1, 3), 2, Truncation::Alpha)
        .expect("valid truncation");
    let real = racah_realization(&params).expect("grid closes");

    println!("grid lambda(x) for x = 0..{}:", params.n);
    for (x, l) in real.grid.lambda.iter().enumerate() {
        println!("  lambda({x}) = {}", rat_str(l));
    }
    println!("\nX = diag(lambda):\n{}", real.x.to_csv());
    println!("Y (difference operator):\n{}", real.y.to_csv());

    let c = &real.constants;
    println!("realization constants:");
    for (name, v) in [
        ("a1", &c.a1),
        ("a2", &c.a2),
        ("b", &c.b),
        ("c1", &c.c1),
        ("c2", &c.c2),
        ("d1", &c.d1),
        ("d2", &c.d2),
    ] {
        println!("  {name} = {}", rat_str(v));
    }

    let mut report = verify_racah(&real);
    report.stamp("racah", None);
    println!("\n{report}");
    std::process::exit(if report.has_hard_failure() { 1 } else { 0 });
}
