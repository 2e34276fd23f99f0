//! The Racah algebra inside the Bannai-Ito one: quadratic combinations
//! A, B, C with equal pairwise commutators, the central Gamma, and the
//! embedding constants checked both as displayed and corrected.

use heunlab::bannai_ito::{bi_realization, racah_in_bi, BIParams};
use heunlab::exact::{comm, rat};
use heunlab::grids::BICase;

fn main() {
    let params = BIParams::new(rat(-7, 3), rat(1, 3), rat(1, 5), rat(2, 7), 3, BICase::OddRho)
        .expect("truncation holds");
    let real = bi_realization(&params).expect("grid closes");

    let (emb, mut report) = racah_in_bi(&real);
    report.stamp("bannai_ito", None);

    let c12 = comm(&emb.a, &emb.b);
    assert_eq!(c12, comm(&emb.b, &emb.c));
    assert_eq!(c12, comm(&emb.c, &emb.a));
    println!("[A,B] = [B,C] = [C,A] = 2P, P =\n{}", emb.p.to_csv());

    println!("{report}");
    std::process::exit(if report.has_hard_failure() { 1 } else { 0 });
}
