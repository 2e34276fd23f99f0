//! The Heun-Racah operator and algebra.
//!
//! The operator is the generic degree-raising second-order difference
//! operator on the Racah grid, parametrized by three polynomials π1, π2, π3
//! of degrees 1, 2, 3. It is matched against the bilinear combination
//! τ1 XY + τ2 YX + τ3 X + τ4 Y + τ0 in the Racah realization, and the
//! Heun-Racah algebra relations are verified with constants produced by the
//! embedding map Φ.
//!
//! The stated closed form for the image of the central element Ω reads
//! Ω ↦ uC + v with an inverted prefactor and several corrupted
//! coefficients in the v bracket; it is claim-checked verbatim and fails on
//! generic parameters. The identity that does hold, with den the inverse of
//! the stated u,
//!
//!   ω = den·C + B(τ),
//!
//! is verified exactly; the coefficients of B are frozen from an
//! independent polynomial fit over many parameter samples and held-out
//! grids.

use crate::cli::report::{Category, CheckReport};
use crate::exact::{acomm, comm, int, rat_str, Rat, RatMatrix};
use crate::grids::{build_difference_operator, degree_on_grid, GridError, GridOperator, RacahGrid};
use crate::racah::{RacahConstants, RacahParams, RacahRealization};
use crate::relalg::{self, Assignment, FitOutcome};
use num::Zero;

#[derive(Debug, thiserror::Error)]
pub enum HeunRacahError {
    #[error("truncation needs N >= 1")]
    DegenerateGrid,
    #[error(transparent)]
    Grid(#[from] GridError),
}

/// Coefficients of π1 (t), π2 (u) and π3 (v).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeunRacahParams {
    pub t0: Rat,
    pub t1: Rat,
    pub u0: Rat,
    pub u1: Rat,
    pub u2: Rat,
    pub v0: Rat,
    pub v1: Rat,
    pub v2: Rat,
    pub v3: Rat,
}

impl HeunRacahParams {
    fn pi1(&self, z: &Rat) -> Rat {
        &self.t0 + &self.t1 * z
    }
    fn pi2(&self, z: &Rat) -> Rat {
        &self.u0 + &self.u1 * z + &self.u2 * z * z
    }
    fn pi3(&self, z: &Rat) -> Rat {
        &self.v0 + &self.v1 * z + &self.v2 * z * z + &self.v3 * z * z * z
    }
}

/// τ parameters of the bilinear form τ1 XY + τ2 YX + τ3 X + τ4 Y + τ0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TauParams {
    pub tau0: Rat,
    pub tau1: Rat,
    pub tau2: Rat,
    pub tau3: Rat,
    pub tau4: Rat,
}

/// Structure constants of the Heun-Racah algebra. x0, x1, x2, y0, y1, y2
/// are scalars of central elements in this realization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HRConstants {
    pub x0: Rat,
    pub x1: Rat,
    pub x2: Rat,
    pub x3: Rat,
    pub x4: Rat,
    pub x5: Rat,
    pub y0: Rat,
    pub y1: Rat,
    pub y2: Rat,
    pub y3: Rat,
}

impl HRConstants {
    /// Coefficient of W in the third relation, fixed by the Jacobi identity.
    pub fn w_coeff(&self) -> Rat {
        &self.x1 - &self.x3 * &self.x4
    }
    /// Coefficient of {X,W} in the third relation.
    pub fn xw_coeff(&self) -> Rat {
        &self.x2 - &self.x3 * &self.x5
    }
}

/// Assembles W = A1 T⁺ + A2 T⁻ + A0 on the grid, with A1, A2 solved from
/// π2, π3 and A0 = π1(λ) − A1 − A2. Closure requires A1(N) = A2(0) = 0.
pub fn build_heun_racah(
    p: &HeunRacahParams,
    grid: &RacahGrid,
) -> Result<GridOperator, HeunRacahError> {
    let n = grid.n;
    let mut a1 = Vec::with_capacity(n + 1);
    let mut a2 = Vec::with_capacity(n + 1);
    let mut diag = Vec::with_capacity(n + 1);
    for x in 0..=n {
        let th = &grid.theta[x];
        let lam = &grid.lambda[x];
        let p2 = p.pi2(lam);
        let p3 = p.pi3(lam);
        let a1x = (&p3 + th * &p2) / ((th + int(1)) * (th + int(2)));
        let a2x = (&p3 - (th + int(2)) * &p2) / (th * (th + int(1)));
        // diagonal of W: the full coefficient A1 + A2 + A0 = pi1(lambda)
        diag.push(p.pi1(lam));
        a1.push(a1x);
        a2.push(a2x);
    }
    let base = build_difference_operator(&a1, &a2, grid)?;
    // base is A1Δ − A2∇ with diagonal −A1−A2; adding π1(λ) on the diagonal
    // gives A1 T⁺ + A2 T⁻ + A0 with A0 = π1(λ) − A1 − A2
    let mut m = base.matrix;
    for x in 0..=n {
        let v = m.get(x, x) + &diag[x];
        m.set(x, x, v);
    }
    Ok(GridOperator {
        matrix: m,
        label: "heun-racah".into(),
    })
}

/// Fills v0 and v1 from the seven free parameters so that the operator
/// closes on the grid of size N.
#[allow(clippy::too_many_arguments)]
pub fn apply_racah_truncation(
    t0: Rat,
    t1: Rat,
    u0: Rat,
    u1: Rat,
    u2: Rat,
    v2: Rat,
    v3: Rat,
    gamma: &Rat,
    delta: &Rat,
    n: usize,
) -> Result<HeunRacahParams, HeunRacahError> {
    if n == 0 {
        return Err(HeunRacahError::DegenerateGrid);
    }
    let gd = gamma + delta;
    let nn = int(n as i64);
    let v0 = &u0 * (&gd + int(2));
    let m = &nn + &gd + int(1);
    let v1 = -int(2) * &u0 / &nn
        - &m * &m * &nn * &nn * &v3
        - &m * &nn * &v2
        - (int(2) * &nn * (&nn + int(1)) + (int(3) * &nn + &gd + int(1)) * &gd) * &nn * &u2
        - (int(2) * &nn + &gd) * &u1;
    Ok(HeunRacahParams {
        t0,
        t1,
        u0,
        u1,
        u2,
        v0,
        v1,
        v2,
        v3,
    })
}

/// Acts W on the monomials λⁿ for n = 0..N−1 and checks the degree bound
/// and the exact leading coefficient t1 + 2n·u2 + n(n−1)·v3.
pub fn verify_degree_raising(
    w: &GridOperator,
    grid: &RacahGrid,
    p: &HeunRacahParams,
) -> CheckReport {
    let mut report = CheckReport::new("heun_racah");
    let nmax = grid.n;
    for n in 0..nmax {
        let mono: Vec<Rat> = grid
            .lambda
            .iter()
            .map(|l| num::pow::Pow::pow(l.clone(), n))
            .collect();
        let image = w.matrix.apply(&mono);
        let (deg, coeffs) = match degree_on_grid(&image, &grid.lambda) {
            Ok(r) => r,
            Err(e) => {
                report.check(
                    &format!("degree-raising-n{n}"),
                    "gen-mon-sol",
                    Category::Oracle,
                    false,
                    Some(format!("interpolation failed: {e}")),
                );
                continue;
            }
        };
        let ni = int(n as i64);
        let lead = &p.t1 + int(2) * &ni * &p.u2 + &ni * (&ni - int(1)) * &p.v3;
        let deg_ok = deg.map_or(true, |d| d <= n + 1);
        let lead_ok = coeffs[n + 1] == lead;
        report.check(
            &format!("degree-raising-n{n}"),
            "gen-mon-sol",
            Category::Oracle,
            deg_ok && lead_ok,
            if deg_ok && lead_ok {
                None
            } else {
                Some(format!(
                    "degree {deg:?}, leading coeff {} vs {}",
                    rat_str(&coeffs[n + 1]),
                    rat_str(&lead)
                ))
            },
        );
    }
    report
}

/// The degree-preserving, monic, identity-free specialization; its operator
/// equals the Racah Y matrix on the same grid.
pub fn specialize_to_racah(params: &RacahParams) -> Result<HeunRacahParams, HeunRacahError> {
    let (a, b, g, d) = (&params.alpha, &params.beta, &params.gamma, &params.delta);
    let u0 = (a + int(1)) * (g + int(1)) * (b + d + int(1)) / int(2);
    let u1 = (a + b + int(2)) / int(2);
    apply_racah_truncation(
        int(0),
        int(0),
        u0,
        u1,
        int(0),
        int(1),
        int(0),
        g,
        d,
        params.n,
    )
}

/// The bilinear operator τ1 XY + τ2 YX + τ3 X + τ4 Y + τ0 in the Racah
/// realization.
pub fn algebraic_heun_racah(real: &RacahRealization, tau: &TauParams) -> GridOperator {
    let (x, y) = (&real.x, &real.y);
    let mut m = (x * y).scale(&tau.tau1);
    m = &m + &(y * x).scale(&tau.tau2);
    m = &m + &x.scale(&tau.tau3);
    m = &m + &y.scale(&tau.tau4);
    m = &m + &real.eye().scale(&tau.tau0);
    GridOperator {
        matrix: m,
        label: "algebraic-heun".into(),
    }
}

/// Dictionary from τ parameters to π coefficients; v0, v1 are filled by the
/// truncation so the two constructions agree as matrices.
pub fn tau_to_pi(tau: &TauParams, params: &RacahParams) -> Result<HeunRacahParams, HeunRacahError> {
    let (a, b, g, d) = (&params.alpha, &params.beta, &params.gamma, &params.delta);
    let phi = (a + int(1)) * (g + int(1)) * (b + d + int(1)) / int(2);
    let psi = a * (b + (g + d) / int(2) + int(2))
        + b * ((g - d) / int(2) + int(2))
        + (g * d + g + d + int(3));
    let t12 = &tau.tau1 + &tau.tau2;
    let ab2 = (a + b + int(2)) / int(2);
    let u0 = (&tau.tau2 * (g + d + int(2)) + &tau.tau4) * &phi;
    let t0 = int(2) * &tau.tau2 * &phi + &tau.tau0;
    let u1 = &t12 * &phi + &tau.tau2 * &psi + &tau.tau4 * &ab2;
    let t1 = &tau.tau2 * (a + b + int(2)) + &tau.tau3;
    let u2 = &t12 * &ab2 + &tau.tau2;
    let v3 = t12.clone();
    let v2 = &t12 * &psi + int(2) * &tau.tau2 * (a + b + int(3)) + &tau.tau4;
    apply_racah_truncation(t0, t1, u0, u1, u2, v2, v3, g, d, params.n)
}

/// The embedding map Φ: structure constants of the Heun-Racah algebra as
/// functions of the Racah constants and τ.
pub fn hr_constants_from_phi(rc: &RacahConstants, tau: &TauParams) -> HRConstants {
    let (a1, a2, b, c1, c2, d1, d2, cc) = (
        &rc.a1, &rc.a2, &rc.b, &rc.c1, &rc.c2, &rc.d1, &rc.d2, &rc.casimir,
    );
    let (t0, t1, t2, t3, t4) = (&tau.tau0, &tau.tau1, &tau.tau2, &tau.tau3, &tau.tau4);
    let t12 = t1 + t2;
    HRConstants {
        x3: a2 * &t12,
        x4: c1.clone(),
        x5: a1.clone(),
        y3: int(2) * a2 * a2 * t1 * t2 - int(4) * a2 * t3 * &t12 + int(2) * c2 * &t12 * &t12,
        x0: t4 * d1 - c1 * t0,
        x1: &t12 * d1 + t4 * b - int(2) * a1 * t0 - c1 * t3,
        x2: b * &t12 + t4 * a2 - int(2) * a1 * t3,
        y0: (a1 * cc + b * d1 + (a1 * a1 - c1) * d2) * t1 * t2
            + ((a2 * c1 - d1) * t0 - (cc + a2 * d1 + a1 * d2) * t4) * &t12
            + a1 * t0 * t0
            + (d2 * t4 - b * t0) * t4
            + (c1 * t0 - d1 * t4) * t3,
        y1: (b * b + a1 * a1 * c2 + int(2) * a2 * d1 - c1 * c2 - a1 * (a2 * b + int(4) * d2))
            * t1
            * t2
            - (cc + a2 * d1 + a1 * d2) * &t12 * &t12
            + (int(4) * a1 * t0 - int(2) * b * t4 + c1 * t3) * t3
            + ((int(2) * a1 * a2 - int(2) * b) * t0
                + (int(4) * d2 - a1 * c2) * t4
                + (a2 * c1 - int(2) * d1) * t3)
                * &t12
            + (c2 * t4 - int(2) * a2 * t0) * t4,
        y2: (int(3) * d2 - a1 * c2) * &t12 * &t12
            + (int(3) * a2 * b - int(3) * a1 * c2 - a1 * a2 * a2) * t1 * t2
            + ((int(2) * a1 * a2 - int(3) * b) * t3 - int(3) * a2 * t0 + int(3) * c2 * t4) * &t12
            + int(3) * (a1 * t3 - a2 * t4) * t3,
    }
}

/// Defining relations as a DSL fixture (kept in sync with
/// fixtures/heun_racah.rel). The W, {X,W} and XWX coefficients of the third
/// relation are fit as free unknowns and compared with x1−x3x4, x2−x3x5 and
/// 3x3 afterwards, keeping every relation affine in the unknowns.
pub const HEUN_RACAH_REL: &str = "\
gens X W Z; scalars x0 x1 x2 x3 x4 x5 y0 y1 y2 y3 wc ac tc;
[W, X] = Z;
[X, Z] = x0 + x1 X + x2 X^2 + x3 X^3 + x4 W + x5{X, W};
[Z, W] = y0 + y1 X + y2 X^2 + y3 X^3 + wc W + x5 W^2 + ac{X, W} + tc X W X;
";

/// Evaluates both bracket relations with the supplied constants, refits all
/// constants from the matrices, and runs the Jacobi control.
pub fn verify_heun_racah_algebra(x: &RatMatrix, w: &RatMatrix, hc: &HRConstants) -> CheckReport {
    let mut report = CheckReport::new("heun_racah");
    let z = comm(w, x);
    let i = RatMatrix::identity(x.dim());

    let rel2 = &comm(x, &z)
        - &(&(&(&i.scale(&hc.x0) + &x.scale(&hc.x1)) + &x.pow(2).scale(&hc.x2))
            + &(&(&x.pow(3).scale(&hc.x3) + &w.scale(&hc.x4)) + &acomm(x, w).scale(&hc.x5)));
    report.check(
        "relation-2-constants",
        "hralgebra",
        Category::Oracle,
        rel2.is_zero(),
        None,
    );
    let xwx = &(x * w) * x;
    let rel3 = &comm(&z, w)
        - &(&(&(&i.scale(&hc.y0) + &x.scale(&hc.y1))
            + &(&x.pow(2).scale(&hc.y2) + &x.pow(3).scale(&hc.y3)))
            + &(&(&w.scale(&hc.w_coeff()) + &w.pow(2).scale(&hc.x5))
                + &(&acomm(x, w).scale(&hc.xw_coeff()) + &xwx.scale(&(int(3) * &hc.x3)))));
    report.check(
        "relation-3-constants",
        "hralgebra",
        Category::Oracle,
        rel3.is_zero(),
        None,
    );

    let jac = &(&comm(&comm(x, &z), w) + &comm(&comm(&z, w), x)) + &comm(&comm(w, x), &z);
    report.check(
        "jacobi-control",
        "hralgebra",
        Category::Structural,
        jac.is_zero(),
        None,
    );

    let pres = relalg::parse(HEUN_RACAH_REL).expect("builtin presentation parses");
    let mut asg = Assignment::new(x.dim())
        .matrix("X", x.clone())
        .matrix("W", w.clone())
        .matrix("Z", z);
    for name in [
        "x0", "x1", "x2", "x3", "x4", "x5", "y0", "y1", "y2", "y3", "wc", "ac", "tc",
    ] {
        asg = asg.unknown(name);
    }
    match relalg::fit_constants(&pres, &asg) {
        Ok(FitOutcome::Fit { names, values }) => {
            let get = |n: &str| values[names.iter().position(|x| x == n).unwrap()].clone();
            let expect: Vec<(&str, Rat)> = vec![
                ("x0", hc.x0.clone()),
                ("x1", hc.x1.clone()),
                ("x2", hc.x2.clone()),
                ("x3", hc.x3.clone()),
                ("x4", hc.x4.clone()),
                ("x5", hc.x5.clone()),
                ("y0", hc.y0.clone()),
                ("y1", hc.y1.clone()),
                ("y2", hc.y2.clone()),
                ("y3", hc.y3.clone()),
                ("wc", hc.w_coeff()),
                ("ac", hc.xw_coeff()),
                ("tc", int(3) * &hc.x3),
            ];
            for (name, want) in &expect {
                let got = get(name);
                report.check(
                    &format!("fitted-{name}"),
                    "hralgebra",
                    Category::Oracle,
                    &got == want,
                    Some(format!(
                        "supplied {} vs fitted {}",
                        rat_str(want),
                        rat_str(&got)
                    )),
                );
            }
            // consistency probe: does this sample sit in the degenerate
            // locus where the relations collapse to the Racah algebra
            let collapses = get("x3").is_zero() && get("y2").is_zero() && get("y3").is_zero();
            report.check(
                "collapse-to-racah-probe",
                "collapse-to-racah",
                Category::Structural,
                true,
                Some(if collapses {
                    "x3 = y2 = y3 = 0: relations collapse to the Racah algebra".into()
                } else {
                    "generic point: no collapse".into()
                }),
            );
        }
        Ok(FitOutcome::Underdetermined { free_directions, .. }) => {
            // small dimensions leave the fit underdetermined (X^3 depends
            // on lower powers of X at dim 3); the supplied constants are
            // then validated through the residual checks above
            report.check(
                "fitted-constants",
                "hralgebra",
                Category::Oracle,
                rel2.is_zero() && rel3.is_zero(),
                Some(format!(
                    "solution space has {} free directions at this dimension; \
                     supplied constants verified by residuals",
                    free_directions.len()
                )),
            );
        }
        other => {
            report.check(
                "fitted-constants",
                "hralgebra",
                Category::Oracle,
                false,
                Some(format!("fit did not produce a unique solution: {other:?}")),
            );
        }
    }
    report
}

/// Central-element coefficients e1..e9 from the structure constants.
pub fn omega_coefficients(hc: &HRConstants) -> [Rat; 9] {
    let (x0, x1, x2, x3, x4, x5) = (&hc.x0, &hc.x1, &hc.x2, &hc.x3, &hc.x4, &hc.x5);
    let (y0, y1, y2, y3) = (&hc.y0, &hc.y1, &hc.y2, &hc.y3);
    [
        x5 * y1 + x4 * y2 / int(3) + x4 * x5 * y3 / int(6) - y0,
        x2 * x4 - int(3) * x0 - x3 * x4 * x5,
        x3 * x4 + x2 * x5 - x3 * x5 * x5 - x1,
        int(4) * x3 * x5 - x2,
        int(-3) * x5,
        x5 * x5 * y3 / int(6) + int(4) * x5 * y2 / int(3) + x4 * y3 / int(2),
        int(-2) * x4,
        (int(5) * x5 * y3 + y2) / int(3),
        y3 / int(2),
    ]
}

/// Assembles the central element Ω in the realization, checks centrality
/// and scalarity, and tests the image formula against the Casimir scalar:
/// the stated uC + v display verbatim as a claim, and the corrected
/// identity ω = den·C + B(τ) as the oracle.
pub fn omega(
    real: &RacahRealization,
    tau: &TauParams,
    hc: &HRConstants,
) -> (RatMatrix, CheckReport) {
    let mut report = CheckReport::new("heun_racah");
    let x = &real.x;
    let w = algebraic_heun_racah(real, tau).matrix;
    let z = comm(&w, x);
    let e = omega_coefficients(hc);

    let mut om = x.scale(&e[0]);
    om = &om + &w.scale(&e[1]);
    om = &om + &acomm(x, &w).scale(&e[2]);
    om = &om + &(&(x * &w) * x).scale(&e[3]);
    om = &om + &(&(&w * x) * &w).scale(&e[4]);
    om = &om + &x.pow(2).scale(&e[5]);
    om = &om + &w.pow(2).scale(&e[6]);
    om = &om - &(&z * &z);
    om = &om + &comm(&(x * &w), &(&w * x));
    om = &om + &x.pow(3).scale(&e[7]);
    om = &om + &x.pow(4).scale(&e[8]);

    report.check(
        "omega-central",
        "heun-racah-casimir",
        Category::Oracle,
        relalg::check_central(&om, &[x, &w, &z]).is_ok(),
        None,
    );
    let scalar = om.as_scalar();
    report.check(
        "omega-scalar",
        "heun-racah-casimir",
        Category::Oracle,
        scalar.is_some(),
        None,
    );

    let rc = &real.constants;
    let (a1, a2, b, c1, c2, d1, d2) = (
        &rc.a1, &rc.a2, &rc.b, &rc.c1, &rc.c2, &rc.d1, &rc.d2,
    );
    let _ = c2;
    let (t0, t1, t2, t3, t4) = (&tau.tau0, &tau.tau1, &tau.tau2, &tau.tau3, &tau.tau4);
    let t12 = t1 + t2;
    let den = (c1 - a1 * a1) * t1 * t2 + a1 * &t12 * t4 - t4 * t4;
    let (omega_scalar, c_scalar) = match (scalar, real.casimir_scalar()) {
        (Some(s), Some(c)) => (s, c),
        _ => {
            report.skip(
                "omega-image",
                "phi-omega",
                Category::Oracle,
                "omega or Casimir not scalar; image comparison unavailable",
            );
            return (om, report);
        }
    };
    if den.is_zero() {
        report.skip(
            "omega-image",
            "phi-omega",
            Category::Oracle,
            "u denominator vanishes for this tau; image comparison skipped",
        );
        return (om, report);
    }

    // stated display, verbatim: u is the inverse of den and v carries u
    let bracket = t1 * t2 * (a1 * b * d1 - a1 * c1 * d2 - a2 * c1 * d1 + a2 * a1 * a1 * d1 - d1 * d1)
        + ((a1 * a2 * c1 - b * c1) * t0 + (c1 * d2 - int(2) * a1 * a2 * d1) * t4) * &t12
        + (int(2) * a1 * c1 * t0 - int(2) * a1 * d1 * t4) * t3
        + (int(2) * a2 * d1 * t4 + (int(2) * d1 - a2 * c1) * t0) * t4
        - c1 * t0 * t0;
    let u = int(1) / &den;
    let v = &u * &bracket + a2 * d1 - a1 * d2;
    let printed = &u * &c_scalar + v;
    report.check(
        "omega-image-stated",
        "phi-omega",
        Category::Claim,
        omega_scalar == printed,
        Some(format!(
            "omega scalar {} vs stated uC+v {}",
            rat_str(&omega_scalar),
            rat_str(&printed)
        )),
    );

    // corrected identity; the B coefficients below are frozen from an
    // independent polynomial fit over the realization, where a1 = a2 = -2
    let bform = c1 * t0 * t0
        + (b - int(4)) * c1 * t0 * &t12
        + int(4) * c1 * t0 * t3
        + (int(-2) * c1 - int(2) * d1) * t0 * t4
        + (d1 * d1 + int(2) * b * d1 + int(8) * d2 - int(4) * c1 * d2) * t1 * t2
        + (int(4) * d1 + int(4) * d2 - c1 * d2) * &t12 * t4
        + int(-4) * d1 * t3 * t4
        + (int(2) * d1 + int(2) * d2) * t4 * t4;
    let corrected = &den * &c_scalar + bform;
    report.check(
        "omega-image-corrected",
        "phi-omega",
        Category::Oracle,
        omega_scalar == corrected,
        Some(format!(
            "omega scalar {} vs den*C + B {}",
            rat_str(&omega_scalar),
            rat_str(&corrected)
        )),
    );
    (om, report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::racah::tests::canonical;

    fn zero_params() -> HeunRacahParams {
        HeunRacahParams {
            t0: int(0),
            t1: int(0),
            u0: int(0),
            u1: int(0),
            u2: int(0),
            v0: int(0),
            v1: int(0),
            v2: int(0),
            v3: int(0),
        }
    }

    fn sample_tau() -> TauParams {
        TauParams {
            tau0: rat(1, 2),
            tau1: int(2),
            tau2: rat(-1, 3),
            tau3: int(1),
            tau4: rat(3, 4),
        }
    }

    #[test]
    fn degenerate_operators() {
        let real = canonical();
        let w = build_heun_racah(&zero_params(), &real.grid).unwrap();
        assert!(w.matrix.is_zero());
        let mut p = zero_params();
        p.t0 = int(1);
        let w = build_heun_racah(&p, &real.grid).unwrap();
        assert_eq!(w.matrix, RatMatrix::identity(3));
    }

    #[test]
    fn truncation_formulas() {
        // v0 = u0(gamma+delta+2) with gamma=delta=0, u0=1
        let p = apply_racah_truncation(
            int(0),
            int(0),
            int(1),
            int(0),
            int(0),
            int(0),
            int(0),
            &int(0),
            &int(0),
            1,
        )
        .unwrap();
        assert_eq!(p.v0, int(2));
        // only the -2u0/N term survives with vanishing u1, u2, v2, v3
        let p = apply_racah_truncation(
            int(0),
            int(0),
            int(1),
            int(0),
            int(0),
            int(0),
            int(0),
            &int(1),
            &int(1),
            1,
        )
        .unwrap();
        assert_eq!(p.v1, int(-2));
        assert!(matches!(
            apply_racah_truncation(
                int(0),
                int(0),
                int(1),
                int(0),
                int(0),
                int(0),
                int(0),
                &int(1),
                &int(1),
                0
            ),
            Err(HeunRacahError::DegenerateGrid)
        ));
    }

    #[test]
    fn racah_specialization() {
        let real = canonical();
        let p = specialize_to_racah(&real.params).unwrap();
        assert_eq!(p.u1, rat(-1, 4));
        let w = build_heun_racah(&p, &real.grid).unwrap();
        assert_eq!(w.matrix, real.y);
    }

    #[test]
    fn bilinear_equivalence() {
        let real = canonical();
        for tau in [
            sample_tau(),
            TauParams {
                tau0: int(0),
                tau1: int(0),
                tau2: int(0),
                tau3: int(0),
                tau4: int(1),
            },
            TauParams {
                tau0: int(0),
                tau1: int(1),
                tau2: int(-1),
                tau3: int(0),
                tau4: int(0),
            },
        ] {
            let alg = algebraic_heun_racah(&real, &tau);
            let p = tau_to_pi(&tau, &real.params).unwrap();
            let built = build_heun_racah(&p, &real.grid).unwrap();
            assert_eq!(alg.matrix, built.matrix, "tau {tau:?}");
        }
    }

    #[test]
    fn degree_raising() {
        let real = canonical();
        let tau = sample_tau();
        let p = tau_to_pi(&tau, &real.params).unwrap();
        let w = build_heun_racah(&p, &real.grid).unwrap();
        assert!(verify_degree_raising(&w, &real.grid, &p).all_passed());
    }

    #[test]
    fn algebra_relations() {
        let real = canonical();
        let tau = sample_tau();
        let hc = hr_constants_from_phi(&real.constants, &tau);
        let w = algebraic_heun_racah(&real, &tau).matrix;
        let rep = verify_heun_racah_algebra(&real.x, &w, &hc);
        assert!(!rep.has_hard_failure(), "{rep:?}");
    }

    #[test]
    fn algebra_relations_unique_fit() {
        // at N=3 the powers of X are independent and the fit is unique
        let params = crate::racah::RacahParams::new(
            rat(1, 3),
            rat(-21, 5),
            rat(2, 7),
            rat(1, 5),
            3,
            crate::racah::Truncation::BetaDelta,
        )
        .unwrap();
        let real = crate::racah::racah_realization(&params).unwrap();
        let tau = sample_tau();
        let hc = hr_constants_from_phi(&real.constants, &tau);
        let w = algebraic_heun_racah(&real, &tau).matrix;
        let rep = verify_heun_racah_algebra(&real.x, &w, &hc);
        assert!(!rep.has_hard_failure(), "{rep:?}");
        assert!(rep.entries.iter().any(|e| e.name == "fitted-y2"));
    }

    #[test]
    fn omega_checks() {
        let real = canonical();
        let tau = sample_tau();
        let hc = hr_constants_from_phi(&real.constants, &tau);
        let (_, rep) = omega(&real, &tau, &hc);
        assert!(!rep.has_hard_failure(), "{rep:?}");
        // the stated uC+v display fails on generic parameters
        let stated = rep
            .entries
            .iter()
            .find(|e| e.name == "omega-image-stated")
            .unwrap();
        assert_eq!(stated.verdict, crate::cli::report::Verdict::Fail);
        let corrected = rep
            .entries
            .iter()
            .find(|e| e.name == "omega-image-corrected")
            .unwrap();
        assert_eq!(corrected.verdict, crate::cli::report::Verdict::Pass);
    }
}
