//! The Heun-Bannai-Ito operator: truncation constraints with exactly seven
//! free coefficients, degree raising, the dictionary from the bilinear
//! form, the cubic relations, and the central Lambda element.

use heunlab::bannai_ito::{bi_realization, BIParams};
use heunlab::exact::{int, rat, rat_str};
use heunlab::grids::BICase;
use heunlab::heun_bi::{
    algebraic_heun_bi, apply_bi_truncation_constraints, build_hbi, hbi_constants_from_psi,
    lambda_element, tau_to_p, truncation_constraint_freedom, verify_hbi_algebra,
    verify_hbi_degree_raising, HBIParams,
};
use heunlab::heun_racah::TauParams;

fn main() {
    let params = BIParams::new(rat(1, 3), rat(3, 5), rat(4, 3), rat(2, 3), 3, BICase::OddR)
        .expect("truncation holds");
    let real = bi_realization(&params).expect("grid closes");

    println!(
        "truncation constraints leave {} free coefficients",
        truncation_constraint_freedom(&real.grid)
    );

    let mut free = HBIParams::zero();
    free.p1_0 = rat(2, 3);
    free.p1_1 = int(1);
    free.p2_1 = int(2);
    free.p2_2 = rat(5, 7);
    free.p3_2 = rat(1, 5);
    free.p3_3 = int(-2);
    let p = apply_bi_truncation_constraints(&free, &real.grid).expect("distinct roots");
    println!(
        "constrained: p3_0 = {}, p3_1 = {}",
        rat_str(&p.p3_0),
        rat_str(&p.p3_1)
    );
    let w = build_hbi(&p, &real.grid).expect("grid closes");
    let mut report = verify_hbi_degree_raising(&w, &real.grid);

    let tau = TauParams {
        tau0: rat(1, 2),
        tau1: int(2),
        tau2: rat(-1, 3),
        tau3: int(1),
        tau4: rat(3, 4),
    };
    let alg = algebraic_heun_bi(&real, &tau).matrix;
    let dict = build_hbi(&tau_to_p(&tau, &real), &real.grid).expect("grid closes");
    println!("dictionary matches bilinear form: {}", dict.matrix == alg);

    let hc = hbi_constants_from_psi(&real.constants, &tau);
    report.merge(verify_hbi_algebra(&real.b1, &alg, &hc));
    report.merge(lambda_element(&real.b1, &alg, &hc, &real.constants, &tau).1);
    report.stamp("heun_bi", None);
    println!("\n{report}");
    std::process::exit(if report.has_hard_failure() || dict.matrix != alg { 1 } else { 0 });
}
