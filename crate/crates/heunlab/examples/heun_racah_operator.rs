//! The Heun-Racah operator: truncation closing the grid, degree raising
//! with the exact leading coefficient, and the degree-preserving monic
//! specialization collapsing to the Racah operator.

use heunlab::exact::{int, rat};
use heunlab::heun_racah::{
    apply_racah_truncation, build_heun_racah, specialize_to_racah, verify_degree_raising,
};
use heunlab::racah::{racah_realization, RacahParams, Truncation};

fn main() {
    let params = RacahParams::new(int(-4), rat(1, 2), rat(2, 7), rat(1, 5), 3, Truncation::Alpha)
        .expect("valid truncation");
    let real = racah_realization(&params).expect("grid closes");

    // seven free coefficients; v0 and v1 are forced by the truncation
    let p = apply_racah_truncation(
        rat(1, 2),
        int(2),
        int(-1),
        rat(1, 3),
        int(1),
        rat(-1, 2),
        int(1),
        &params.gamma,
        &params.delta,
        params.n,
    )
    .expect("N >= 1");
    let w = build_heun_racah(&p, &real.grid).expect("coefficients regular");

    let mut report = verify_degree_raising(&w, &real.grid, &p);
    report.stamp("heun_racah", None);
    println!("{report}");

    let sp = specialize_to_racah(&params).expect("N >= 1");
    let wy = build_heun_racah(&sp, &real.grid).expect("coefficients regular");
    println!(
        "monic degree-preserving specialization equals Y: {}",
        wy.matrix == real.y
    );
    std::process::exit(if report.has_hard_failure() || wy.matrix != real.y { 1 } else { 0 });
}
