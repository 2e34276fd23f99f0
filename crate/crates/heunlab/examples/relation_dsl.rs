//! The relation DSL: parse a presentation, evaluate residuals on matrices,
//! and fit unknown structure constants exactly.

use heunlab::exact::{rat_str, RatMatrix};
use heunlab::racah::{racah_realization, RacahParams, Truncation, RACAH_REL};
use heunlab::relalg::{self, Assignment, FitOutcome};
use heunlab::exact::{int, rat};

fn main() {
    let pres = relalg::parse(RACAH_REL).expect("builtin presentation parses");
    println!("parsed {} relations over {:?}", pres.relations.len(), pres.generators);
    println!("printer round trip:\n{}", relalg::print(&pres));

    let params = RacahParams::new(int(-3), rat(1, 2), rat(1, 2), rat(1, 3), 2, Truncation::Alpha)
        .expect("valid truncation");
    let real = racah_realization(&params).expect("grid closes");
    let mut asg = Assignment::new(3)
        .matrix("K1", real.y.clone())
        .matrix("K2", real.x.clone())
        .matrix("K3", real.k3.clone());
    for s in &pres.scalars {
        asg = asg.unknown(s);
    }

    match relalg::fit_constants(&pres, &asg).expect("affine system") {
        FitOutcome::Fit { names, values } => {
            println!("fitted constants:");
            for (n, v) in names.iter().zip(&values) {
                println!("  {n} = {}", rat_str(v));
            }
            // with the fitted values every residual is the zero matrix
            for (k, v) in names.iter().zip(&values) {
                asg = asg.scalar(k, v.clone());
            }
            let zero = RatMatrix::zero(3);
            for rel in &pres.relations {
                assert_eq!(relalg::evaluate(rel, &asg).expect("evaluates"), zero);
            }
            println!("all residuals exactly zero");
        }
        other => {
            println!("unexpected fit outcome: {other:?}");
            std::process::exit(1);
        }
    }
}
