//! Acceptance suite: one test per criterion, exact zero-tolerance equality
//! throughout. Stated-form defects are expected to fail as claim entries
//! and are asserted to fail; everything load-bearing must pass.

use heunlab::bannai_ito::{
    bi_realization, racah_in_bi, verify_bi, verify_bi_spectrum, BIParams,
};
use heunlab::cli::{run, Category, CheckReport, Config, Sampler, Suite, Verdict};
use heunlab::exact::{acomm, comm, int, poly_from_roots, rat, Rat, RatMatrix};
use heunlab::grids::{degree_on_grid, BICase};
use heunlab::heun_bi::{
    algebraic_heun_bi, apply_bi_truncation_constraints, build_hbi, fit_upsilon,
    hbi_constants_from_psi, lambda_element, tau_to_p, truncation_constraint_freedom,
    verify_hbi_algebra, verify_hbi_degree_raising,
};
use heunlab::heun_racah::{
    algebraic_heun_racah, apply_racah_truncation, build_heun_racah, hr_constants_from_phi, omega,
    specialize_to_racah, tau_to_pi, verify_degree_raising, verify_heun_racah_algebra, TauParams,
};
use heunlab::racah::{casimir_racah, to_equitable, to_reduced, verify_racah, verify_racah_spectrum};
use heunlab::relalg::{self, Assignment, Expr, ExprKind, FitOutcome, Pos, Presentation};

const TRIALS: usize = 25;

fn racah_samples(stream: u64) -> Vec<heunlab::racah::RacahRealization> {
    let mut s = Sampler::new(20240817, stream, 12, 6);
    (0..TRIALS).map(|t| s.racah(2 + t % 5).expect("sampling")).collect()
}

fn bi_samples(stream: u64) -> Vec<heunlab::bannai_ito::BIRealization> {
    let mut s = Sampler::new(20240817, stream, 12, 6);
    (0..TRIALS).map(|t| s.bannai_ito(3 + 2 * (t % 2)).expect("sampling")).collect()
}

fn entry<'a>(rep: &'a CheckReport, name: &str) -> &'a heunlab::cli::CheckEntry {
    rep.entries
        .iter()
        .find(|e| e.name == name)
        .unwrap_or_else(|| panic!("missing entry {name}"))
}

fn pass_line(n: usize, what: &str) {
    println!("criterion {n:02} ({what}): pass");
}

#[test]
fn criterion_01_racah_relations() {
    for real in racah_samples(1) {
        let rep = verify_racah(&real);
        assert!(!rep.has_hard_failure(), "{rep}");
        assert_eq!(real.constants.a1, int(-2));
        assert_eq!(real.constants.a2, int(-2));
        assert_eq!(entry(&rep, "fitted-a1").verdict, Verdict::Pass);
        assert_eq!(entry(&rep, "fitted-a2").verdict, Verdict::Pass);
        // the bracketed variant of b is a stated-form defect: it must fail
        // as a claim and carry both values
        let b = entry(&rep, "b-bracketed-variant");
        assert_eq!(b.category, Category::Claim);
        assert_eq!(b.verdict, Verdict::Fail);
        assert!(b.witness.as_ref().unwrap().contains("vs"));
    }
    pass_line(1, "racah relations, 25 samples, fitted a1 = a2 = -2");
}

#[test]
fn criterion_02_racah_casimir() {
    for real in racah_samples(2) {
        let (cm, rep) = casimir_racah(&real);
        assert!(!rep.has_hard_failure(), "{rep}");
        assert!(relalg::check_central(&cm, &[&real.y, &real.x, &real.k3]).is_ok());
        assert!(cm.as_scalar().is_some());
        let claim = entry(&rep, "casimir-closed-form");
        assert_eq!(claim.category, Category::Claim);
        assert_eq!(claim.verdict, Verdict::Pass);
    }
    pass_line(2, "casimir central, scalar, closed form agrees");
}

#[test]
fn criterion_03_racah_spectrum() {
    for real in racah_samples(3) {
        assert_eq!(
            real.y.char_poly(),
            poly_from_roots(&real.params.eigenvalues())
        );
        assert!(verify_racah_spectrum(&real).all_passed());
    }
    pass_line(3, "char_poly(Y) = prod(t - n(n+alpha+beta+1))");
}

#[test]
fn criterion_04_reduced_and_equitable() {
    for real in racah_samples(4) {
        let (red, rep) = to_reduced(&real).expect("a1, a2 nonzero");
        assert!(!rep.has_hard_failure(), "{rep}");
        let (eq, rep2) = to_equitable(&real, &red);
        assert!(rep2.all_passed(), "{rep2}");
        let sum = &(&eq.v1 + &eq.v2) + &eq.v3;
        assert_eq!(sum, real.eye().scale(&(int(2) * &red.d)));
    }
    pass_line(4, "reduced and equitable residuals zero, chi round-trips");
}

#[test]
fn criterion_05_heun_racah_degree_raising() {
    let mut s = Sampler::new(20240817, 50, 12, 6);
    for real in racah_samples(5).into_iter().take(5) {
        let p = &real.params;
        for _ in 0..10 {
            let f = s.hr_free();
            let hp = apply_racah_truncation(
                f[0].clone(),
                f[1].clone(),
                f[2].clone(),
                f[3].clone(),
                f[4].clone(),
                f[5].clone(),
                f[6].clone(),
                &p.gamma,
                &p.delta,
                p.n,
            )
            .unwrap();
            if let Ok(w) = build_heun_racah(&hp, &real.grid) {
                assert!(verify_degree_raising(&w, &real.grid, &hp).all_passed());
            }
        }
        // t1 = u2 = v3 = 0 preserves degree
        let hp = apply_racah_truncation(
            s.rat(),
            int(0),
            s.rat(),
            s.rat(),
            int(0),
            s.rat(),
            int(0),
            &p.gamma,
            &p.delta,
            p.n,
        )
        .unwrap();
        if let Ok(w) = build_heun_racah(&hp, &real.grid) {
            assert!(verify_degree_raising(&w, &real.grid, &hp).all_passed());
            for n in 0..p.n {
                let mono: Vec<Rat> = real
                    .grid
                    .lambda
                    .iter()
                    .map(|l| num::pow::Pow::pow(l.clone(), n))
                    .collect();
                let (deg, _) = degree_on_grid(&w.matrix.apply(&mono), &real.grid.lambda).unwrap();
                assert!(deg.map_or(true, |d| d <= n));
            }
        }
    }
    pass_line(5, "degree raising with exact leading coefficient");
}

#[test]
fn criterion_06_bilinear_equivalence() {
    let mut s = Sampler::new(20240817, 60, 12, 6);
    for real in racah_samples(6).into_iter().take(5) {
        let p = &real.params;
        for _ in 0..10 {
            let tau = s.tau();
            let hp = tau_to_pi(&tau, p).unwrap();
            let w = build_heun_racah(&hp, &real.grid).expect("dictionary closes");
            assert_eq!(w.matrix, algebraic_heun_racah(&real, &tau).matrix);
        }
        // tau = (0,0,0,0,1) is the Racah operator itself
        let tau = TauParams {
            tau0: int(0),
            tau1: int(0),
            tau2: int(0),
            tau3: int(0),
            tau4: int(1),
        };
        let hp = tau_to_pi(&tau, p).unwrap();
        assert_eq!(
            build_heun_racah(&hp, &real.grid).unwrap().matrix,
            real.y
        );
        let sp = specialize_to_racah(p).unwrap();
        let (a, b, g, d) = (&p.alpha, &p.beta, &p.gamma, &p.delta);
        assert_eq!(sp.u0, (a + int(1)) * (g + int(1)) * (b + d + int(1)) / int(2));
        assert_eq!(sp.u1, (a + b + int(2)) / int(2));
    }
    pass_line(6, "bilinear dictionary matches, specialization values agree");
}

#[test]
fn criterion_07_heun_racah_algebra() {
    let mut s = Sampler::new(20240817, 70, 12, 6);
    for real in racah_samples(7).into_iter().take(10) {
        let tau = s.tau();
        let w = algebraic_heun_racah(&real, &tau).matrix;
        let hc = hr_constants_from_phi(&real.constants, &tau);
        let rep = verify_heun_racah_algebra(&real.x, &w, &hc);
        assert!(!rep.has_hard_failure(), "{rep}");
        let (om, rep2) = omega(&real, &tau, &hc);
        assert!(!rep2.has_hard_failure(), "{rep2}");
        let z = comm(&w, &real.x);
        assert!(relalg::check_central(&om, &[&real.x, &w, &z]).is_ok());
        assert!(om.as_scalar().is_some());
    }
    pass_line(7, "heun-racah relations hold, omega central with exact image");
}

#[test]
fn criterion_08_bannai_ito() {
    for real in bi_samples(8) {
        let rep = verify_bi(&real);
        assert!(rep.all_passed(), "{rep}");
        let q = &real.constants.q;
        assert_eq!(
            (&(&real.b1.pow(2) + &real.b2.pow(2)) + &real.b3.pow(2)).as_scalar(),
            Some(q.clone())
        );
        let rep = verify_bi_spectrum(&real);
        assert!(!rep.has_hard_failure(), "{rep}");
        assert_eq!(
            real.btilde2.char_poly(),
            poly_from_roots(&real.params.btilde2_eigenvalues())
        );
        // the displayed attribution of the spectrum belongs to B2, not
        // Btilde2; that claim fails and both oracles pass
        assert_eq!(entry(&rep, "spectrum-btilde2-as-displayed").verdict, Verdict::Fail);
        assert_eq!(entry(&rep, "spectrum-b2").verdict, Verdict::Pass);
    }
    // the even-N enumeration functions and records its verdicts
    let mut cfg = Config::default();
    cfg.sampling.trials = 0;
    let rep = run(&cfg, &[Suite::BannaiIto]).unwrap();
    assert_eq!(entry(&rep, "even/even-closure-corrected").verdict, Verdict::Pass);
    assert_eq!(entry(&rep, "even/even-sum-form-closes").verdict, Verdict::Fail);
    pass_line(8, "bannai-ito relations, casimir scalar, spectra, even closure");
}

#[test]
fn criterion_09_racah_in_bi() {
    for real in bi_samples(9) {
        let (emb, rep) = racah_in_bi(&real);
        assert!(!rep.has_hard_failure(), "{rep}");
        let c12 = comm(&emb.a, &emb.b);
        assert_eq!(c12, comm(&emb.b, &emb.c));
        assert_eq!(c12, comm(&emb.c, &emb.a));
        assert!(relalg::check_central(&emb.gamma, &[&emb.a, &emb.b, &emb.c]).is_ok());
        let i = real.eye();
        let q = i.scale(&real.constants.q);
        let lhs = (&(&emb.a + &emb.b) + &emb.c).scale(&int(4));
        let rhs = &(&q - &emb.gamma) - &i.scale(&rat(15, 4));
        assert_eq!(lhs, rhs);
        for name in ["r-in-bi-1", "r-in-bi-2", "r-in-bi-3"] {
            assert_eq!(entry(&rep, name).verdict, Verdict::Pass);
        }
    }
    pass_line(9, "embedded racah generators satisfy all identities");
}

#[test]
fn criterion_10_heun_bi() {
    let mut s = Sampler::new(20240817, 100, 12, 6);
    // the four closing even grids alongside the odd samples
    let mut reals = bi_samples(10).into_iter().take(6).collect::<Vec<_>>();
    for (i, j) in [(1u8, 1u8), (1, 2), (2, 1), (2, 2)] {
        let case = BICase::EvenRhoR { i, j, anchor: j, difference_form: true };
        let rho1 = rat(1, 3);
        let rho2 = rat(2, 5);
        let rj = if j == 1 { rho1.clone() } else { rho2.clone() };
        let ri = rat(5, 2) + &rj;
        let (r1, r2) = if i == 1 { (ri, rat(3, 7)) } else { (rat(3, 7), ri) };
        let p = BIParams::new(rho1, rho2, r1, r2, 4, case).unwrap();
        reals.push(bi_realization(&p).unwrap());
    }
    for real in &reals {
        assert_eq!(truncation_constraint_freedom(&real.grid), 7);
        for _ in 0..10 {
            let tau = s.tau();
            let alg = algebraic_heun_bi(real, &tau).matrix;
            let dict = build_hbi(&tau_to_p(&tau, real), &real.grid).unwrap();
            assert_eq!(dict.matrix, alg);
            let hc = hbi_constants_from_psi(&real.constants, &tau);
            let z = acomm(&real.b1, &alg);
            let i = real.eye();
            let rel2 = &acomm(&z, &real.b1)
                - &(&(&(&i.scale(&hc.x0) + &real.b1.scale(&hc.x1))
                    + &real.b1.pow(2).scale(&hc.x2))
                    + &(&real.b1.pow(3).scale(&hc.x3) + &alg.scale(&hc.x4)));
            assert!(rel2.is_zero());
        }
        let tau = s.tau();
        let alg = algebraic_heun_bi(real, &tau).matrix;
        let hc = hbi_constants_from_psi(&real.constants, &tau);
        let rep = verify_hbi_algebra(&real.b1, &alg, &hc);
        assert!(!rep.has_hard_failure(), "{rep}");
        let (lam, rep2) = lambda_element(&real.b1, &alg, &hc, &real.constants, &tau);
        assert!(rep2.all_passed(), "{rep2}");
        assert!(lam.as_scalar().is_some());
        let free = s.hbi_free();
        if let Ok(p) = apply_bi_truncation_constraints(&free, &real.grid) {
            let w = build_hbi(&p, &real.grid).unwrap();
            assert!(verify_hbi_degree_raising(&w, &real.grid).all_passed());
        }
    }
    pass_line(10, "heun-bi relations, lambda, dictionary, constraints rank 7");
}

#[test]
fn criterion_11_upsilon_fit() {
    let mut s = Sampler::new(20240817, 110, 12, 6);
    for real in bi_samples(11).into_iter().take(8) {
        let (emb, _) = racah_in_bi(&real);
        let rep = fit_upsilon(
            &real,
            &emb,
            &s.tau(),
            &s.tau(),
            &int(-2),
            &int(-2),
            &rat(3, 2),
            &rat(-5, 3),
        );
        assert!(!rep.has_hard_failure(), "{rep}");
        let aug = entry(&rep, "upsilon-augmented");
        assert_eq!(aug.verdict, Verdict::Pass);
        let w = aug.witness.as_ref().unwrap();
        assert!(
            w.starts_with("solution")
                || w.starts_with("no solution")
                || w.starts_with("underdetermined"),
            "{w}"
        );
    }
    // determinism: the suite is byte-identical under a fixed seed
    let cfg = Config::default();
    let a = run(&cfg, &[Suite::Upsilon]).unwrap().to_json();
    let b = run(&cfg, &[Suite::Upsilon]).unwrap().to_json();
    assert_eq!(a, b);
    pass_line(11, "upsilon solve reports exact outcome, deterministic");
}

#[test]
fn criterion_12_relation_dsl() {
    // shipped fixtures parse, print and reparse to the same presentation
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures");
    let mut count = 0;
    for f in std::fs::read_dir(&dir).unwrap() {
        let path = f.unwrap().path();
        if path.extension().and_then(|e| e.to_str()) != Some("rel") {
            continue;
        }
        let src = std::fs::read_to_string(&path).unwrap();
        let p1 = relalg::parse(&src).unwrap_or_else(|e| panic!("{path:?}: {e}"));
        let txt = relalg::print(&p1);
        let p2 = relalg::parse(&txt).unwrap();
        assert!(relalg::same_presentation(&p1, &p2), "{path:?}");
        count += 1;
    }
    assert!(count >= 8, "expected the shipped fixtures, found {count}");

    // 100 randomized well-formed expressions survive the round trip
    let mut s = Sampler::new(20240817, 120, 9, 4);
    for k in 0..100 {
        let expr = random_expr(&mut s, 0, k);
        let pres = Presentation {
            generators: vec!["A".into(), "B".into()],
            scalars: vec!["s".into()],
            relations: vec![relalg::Relation {
                lhs: expr,
                rhs: num_expr(int(0)),
            }],
        };
        let txt = relalg::print(&pres);
        let back = relalg::parse(&txt).unwrap_or_else(|e| panic!("{txt}\n{e}"));
        assert!(relalg::same_presentation(&pres, &back), "{txt}");
    }

    // malformed inputs fail with positions
    for bad in ["gens A; scalars s;\nA = [A,;", "gens A; scalars s; A = s^x;"] {
        match relalg::parse(bad) {
            Err(relalg::RelError::Syntax { pos, .. }) => assert!(pos.line >= 1),
            other => panic!("expected syntax error, got {other:?}"),
        }
    }

    // hand 2x2 oracle
    let pres = relalg::parse("gens X W Z; scalars x0 x4; [X,Z] = x0 + x4*W").unwrap();
    let x = RatMatrix::diag(&[int(1), int(2)]);
    let w = RatMatrix::from_rows(vec![vec![int(0), int(1)], vec![int(1), int(0)]]);
    let z = comm(&w, &x);
    let asg = Assignment::new(2)
        .matrix("X", x)
        .matrix("W", w)
        .matrix("Z", z)
        .unknown("x0")
        .unknown("x4");
    match relalg::fit_constants(&pres, &asg).unwrap() {
        FitOutcome::Fit { names, values } => {
            let get = |n: &str| values[names.iter().position(|v| v == n).unwrap()].clone();
            assert_eq!(get("x0"), int(0));
            assert_eq!(get("x4"), int(-1));
        }
        other => panic!("{other:?}"),
    }
    pass_line(12, "dsl fixpoint, positioned errors, toy fit oracle");
}

#[test]
fn fixtures_match_builtin_presentations() {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures");
    for (file, builtin) in [
        ("racah.rel", heunlab::racah::RACAH_REL),
        ("heun_racah.rel", heunlab::heun_racah::HEUN_RACAH_REL),
        ("bannai_ito.rel", heunlab::bannai_ito::BANNAI_ITO_REL),
        ("heun_bi.rel", heunlab::heun_bi::HEUN_BI_REL),
    ] {
        let src = std::fs::read_to_string(dir.join(file)).unwrap();
        let a = relalg::parse(&src).unwrap();
        let b = relalg::parse(builtin).unwrap();
        assert!(relalg::same_presentation(&a, &b), "{file} drifted");
    }
}

fn num_expr(v: Rat) -> Expr {
    Expr {
        kind: ExprKind::Num(v),
        pos: Pos { line: 1, col: 1 },
    }
}

fn name_expr(n: &str) -> Expr {
    Expr {
        kind: ExprKind::Name(n.into()),
        pos: Pos { line: 1, col: 1 },
    }
}

/// Random expression over gens A, B and scalar s, depth-bounded.
fn random_expr(s: &mut Sampler, depth: usize, salt: usize) -> Expr {
    let pick = {
        let v = s.rat();
        // deterministic small selector from the sampled rational
        let num: i64 = (v.numer() % num::BigInt::from(7i64))
            .try_into()
            .unwrap_or(0);
        (num.unsigned_abs() as usize + salt) % 7
    };
    let boxed = |e: Expr| Box::new(e);
    if depth >= 3 || pick == 0 {
        return match salt % 3 {
            0 => name_expr("A"),
            1 => name_expr("B"),
            _ => num_expr(s.rat()),
        };
    }
    let a = boxed(random_expr(s, depth + 1, salt + 1));
    let b = boxed(random_expr(s, depth + 1, salt + 2));
    let kind = match pick {
        1 => ExprKind::Add(a, b),
        2 => ExprKind::Sub(a, b),
        3 => ExprKind::Mul(a, b),
        4 => ExprKind::Comm(a, b),
        5 => ExprKind::Acomm(a, b),
        _ => ExprKind::Pow(a, 2),
    };
    Expr {
        kind,
        pos: Pos { line: 1, col: 1 },
    }
}
