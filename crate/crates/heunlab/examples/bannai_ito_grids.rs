//! Bannai-Ito grids and truncations: the two odd-N cases close as stated,
//! and the even-N identity is enumerated over all its index choices.

use heunlab::bannai_ito::{bi_realization, verify_bi, verify_bi_spectrum, BIParams};
use heunlab::exact::{rat, rat_str};
use heunlab::grids::BICase;

fn main() {
    let mut clean = true;
    for (label, params) in [
        (
            "odd rho",
            BIParams::new(rat(-7, 3), rat(1, 3), rat(1, 5), rat(2, 7), 3, BICase::OddRho),
        ),
        (
            "odd r",
            BIParams::new(rat(1, 3), rat(3, 5), rat(4, 3), rat(2, 3), 3, BICase::OddR),
        ),
    ] {
        let real = bi_realization(&params.expect("truncation holds")).expect("grid closes");
        println!("{label} grid:");
        for (s, x) in real.grid.x.iter().enumerate() {
            println!("  x_{s} = {}", rat_str(x));
        }
        let mut report = verify_bi(&real);
        report.merge(verify_bi_spectrum(&real));
        report.stamp("bannai_ito", None);
        print!("{report}");
        clean &= !report.has_hard_failure();
        println!();
    }

    // even N: try every (form, i, j, anchor) choice of the truncation
    println!("even-N closure, 2(r_i -+ rho_j) = N + 1 anchored at rho_1 or rho_2:");
    for difference_form in [false, true] {
        for i in [1u8, 2] {
            for j in [1u8, 2] {
                for anchor in [1u8, 2] {
                    let case = BICase::EvenRhoR { i, j, anchor, difference_form };
                    let rho1 = rat(1, 3);
                    let rho2 = rat(2, 5);
                    let rj = if j == 1 { rho1.clone() } else { rho2.clone() };
                    let ri = if difference_form { rat(5, 2) + &rj } else { rat(5, 2) - &rj };
                    let (r1, r2) = if i == 1 { (ri, rat(3, 7)) } else { (rat(3, 7), ri) };
                    let ok = BIParams::new(rho1, rho2, r1, r2, 4, case)
                        .and_then(|p| bi_realization(&p))
                        .is_ok();
                    let form = if difference_form { "difference" } else { "sum" };
                    println!("  {form:10} i={i} j={j} anchor={anchor}: {}", if ok { "closes" } else { "open" });
                }
            }
        }
    }
    std::process::exit(if clean { 0 } else { 1 });
}
