//! The composite map Upsilon: expand the image of the Heun-Racah operator
//! over the displayed basis by an exact linear solve. The restricted
//! (verbatim) expansion and the augmented one are both reported; with the
//! same tau on both sides the restricted form has no exact solution.

use heunlab::bannai_ito::{bi_realization, racah_in_bi, BIParams};
use heunlab::exact::{int, rat};
use heunlab::grids::BICase;
use heunlab::heun_bi::fit_upsilon;
use heunlab::heun_racah::TauParams;

fn main() {
    let params = BIParams::new(rat(-7, 3), rat(1, 3), rat(1, 5), rat(2, 7), 3, BICase::OddRho)
        .expect("truncation holds");
    let real = bi_realization(&params).expect("grid closes");
    let (emb, _) = racah_in_bi(&real);
    let tau = TauParams {
        tau0: rat(1, 2),
        tau1: int(2),
        tau2: rat(-1, 3),
        tau3: int(1),
        tau4: rat(3, 4),
    };

    let mut report = fit_upsilon(
        &real,
        &emb,
        &tau,
        &tau,
        &int(-2),
        &int(-2),
        &rat(3, 2),
        &rat(-5, 3),
    );
    report.stamp("upsilon", None);
    println!("{report}");
    std::process::exit(if report.has_hard_failure() { 1 } else { 0 });
}
