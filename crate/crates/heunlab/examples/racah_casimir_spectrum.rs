//! The Racah Casimir element and the spectrum of the difference operator,
//! checked exactly on several random parameter sets.

use heunlab::cli::Sampler;
use heunlab::exact::rat_str;
use heunlab::racah::{casimir_racah, verify_racah_spectrum};

fn main() {
    let mut sampler = Sampler::new(7, 0, 12, 6);
    let mut clean = true;
    for n in 2..=5 {
        let real = sampler.racah(n).expect("sampling succeeds");
        let (cm, mut report) = casimir_racah(&real);
        report.merge(verify_racah_spectrum(&real));
        report.stamp("racah", None);

        println!("N = {n}, truncation {:?}:", real.params.truncation);
        match cm.as_scalar() {
            Some(s) => println!("  Casimir scalar = {}", rat_str(&s)),
            None => println!("  Casimir is not scalar"),
        }
        let eig = real.params.eigenvalues();
        let shown: Vec<String> = eig.iter().map(|e| rat_str(e)).collect();
        println!("  Y spectrum = {{{}}}", shown.join(", "));
        print!("{report}");
        clean &= !report.has_hard_failure();
    }
    std::process::exit(if clean { 0 } else { 1 });
}
