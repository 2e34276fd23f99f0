//! Exact rational scalars and dense exact linear algebra.
//!
//! Everything downstream runs on [`Rat`] (arbitrary-precision rationals) and
//! [`RatMatrix`] (dense square matrices of rationals). No floating point
//! appears anywhere: every identity checked by this crate is polynomial in
//! rational data, so exact equality is attainable and tolerances are
//! unnecessary.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Arbitrary-precision rational; always in lowest terms, denominator > 0.
pub type Rat = BigRational;

/// Rational from an integer pair. Panics on zero denominator.
pub fn rat(num: i64, den: i64) -> Rat {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Rational from an integer.
pub fn int(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ExactError {
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("cannot parse rational from {0:?}")]
    BadRational(String),
}

/// Parses "p/q" or "p" (optionally signed). Output of [`rat_str`] round-trips.
pub fn parse_rat(s: &str) -> Result<Rat, ExactError> {
    let t = s.trim();
    let bad = || ExactError::BadRational(s.to_string());
    match t.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
        None => {
            let p: BigInt = t.parse().map_err(|_| bad())?;
            Ok(BigRational::from_integer(p))
        }
    }
}

/// Canonical text form: "p/q" in lowest terms, or "p" when the denominator is 1.
pub fn rat_str(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Dense square matrix of rationals, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct RatMatrix {
    dim: usize,
    data: Vec<Rat>,
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RatMatrix {}x{} [", self.dim, self.dim)?;
        for i in 0..self.dim {
            let row: Vec<String> = (0..self.dim).map(|j| rat_str(self.get(i, j))).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl RatMatrix {
    pub fn zero(dim: usize) -> Self {
        RatMatrix {
            dim,
            data: vec![Rat::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m.set(i, i, Rat::one());
        }
        m
    }

    pub fn diag(values: &[Rat]) -> Self {
        let mut m = Self::zero(values.len());
        for (i, v) in values.iter().enumerate() {
            m.set(i, i, v.clone());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let dim = rows.len();
        assert!(rows.iter().all(|r| r.len() == dim), "rows must be square");
        RatMatrix {
            dim,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.data[i * self.dim + j] = v;
    }

    pub fn add_assign_at(&mut self, i: usize, j: usize, v: &Rat) {
        let idx = i * self.dim + j;
        self.data[idx] = &self.data[idx] + v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// Scalar multiple of the identity if the matrix is one, else None.
    pub fn as_scalar(&self) -> Option<Rat> {
        let s = self.get(0, 0).clone();
        for i in 0..self.dim {
            for j in 0..self.dim {
                let expect = if i == j { &s } else { &Rat::zero() } as &Rat;
                if self.get(i, j) != expect {
                    return None;
                }
            }
        }
        Some(s)
    }

    pub fn scale(&self, s: &Rat) -> Self {
        RatMatrix {
            dim: self.dim,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = RatMatrix::identity(self.dim);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn trace(&self) -> Rat {
        (0..self.dim).map(|i| self.get(i, i).clone()).sum()
    }

    /// Matrix-vector product (value vectors of grid functions).
    pub fn apply(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.dim, "vector length mismatch");
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.get(i, j) * &v[j]).sum())
            .collect()
    }

    /// Coefficients of the monic characteristic polynomial, index k holding
    /// the coefficient of t^k (so index dim is 1). Faddeev-LeVerrier.
    pub fn char_poly(&self) -> Vec<Rat> {
        let n = self.dim;
        let mut coeffs = vec![Rat::zero(); n + 1];
        coeffs[n] = Rat::one();
        let mut m = RatMatrix::zero(n);
        for k in 1..=n {
            // M_k = A*M_{k-1} + c_{n-k+1}*I ; c_{n-k} = -tr(A*M_k)/k
            let c_prev = coeffs[n - k + 1].clone();
            let mut mk = self * &m;
            for i in 0..n {
                mk.add_assign_at(i, i, &c_prev);
            }
            let am = self * &mk;
            coeffs[n - k] = -(am.trace() / int(k as i64));
            m = mk;
        }
        coeffs
    }

    /// One CSV line per row; entries in canonical rational text.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for i in 0..self.dim {
            let row: Vec<String> = (0..self.dim).map(|j| rat_str(self.get(i, j))).collect();
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }
}

impl Add for &RatMatrix {
    type Output = RatMatrix;
    fn add(self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch in +");
        RatMatrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &RatMatrix {
    type Output = RatMatrix;
    fn sub(self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch in -");
        RatMatrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &RatMatrix {
    type Output = RatMatrix;
    fn neg(self) -> RatMatrix {
        RatMatrix {
            dim: self.dim,
            data: self.data.iter().map(|a| -a).collect(),
        }
    }
}

impl Mul for &RatMatrix {
    type Output = RatMatrix;
    fn mul(self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch in *");
        let n = self.dim;
        let mut out = RatMatrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.add_assign_at(i, j, &(a * b));
                    }
                }
            }
        }
        out
    }
}

/// [a,b] = ab - ba.
pub fn commutator(a: &RatMatrix, b: &RatMatrix) -> Result<RatMatrix, ExactError> {
    if a.dim() != b.dim() {
        return Err(ExactError::DimensionMismatch(a.dim(), b.dim()));
    }
    Ok(&(a * b) - &(b * a))
}

/// {a,b} = ab + ba.
pub fn anticommutator(a: &RatMatrix, b: &RatMatrix) -> Result<RatMatrix, ExactError> {
    if a.dim() != b.dim() {
        return Err(ExactError::DimensionMismatch(a.dim(), b.dim()));
    }
    Ok(&(a * b) + &(b * a))
}

/// Infallible commutator for equal-dimension operands (internal hot path).
pub fn comm(a: &RatMatrix, b: &RatMatrix) -> RatMatrix {
    commutator(a, b).expect("dimension mismatch")
}

/// Infallible anticommutator for equal-dimension operands.
pub fn acomm(a: &RatMatrix, b: &RatMatrix) -> RatMatrix {
    anticommutator(a, b).expect("dimension mismatch")
}

/// Monic polynomial with the given roots; same coefficient order as char_poly.
pub fn poly_from_roots(roots: &[Rat]) -> Vec<Rat> {
    let mut coeffs = vec![Rat::one()];
    for r in roots {
        // multiply by (t - r)
        let mut next = vec![Rat::zero(); coeffs.len() + 1];
        for (k, c) in coeffs.iter().enumerate() {
            next[k + 1] = &next[k + 1] + c;
            next[k] = &next[k] - &(c * r);
        }
        coeffs = next;
    }
    coeffs
}

/// Outcome of an exact rectangular linear solve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveOutcome {
    /// Unique exact solution.
    Solution(Vec<Rat>),
    /// Provably inconsistent; `row` is an original equation index whose
    /// reduced form reads 0 = residual with residual != 0.
    NoSolution { row: usize, residual: Rat },
    /// Consistent but rank-deficient: one particular solution plus a basis
    /// of the homogeneous solution space.
    Underdetermined {
        particular: Vec<Rat>,
        free_directions: Vec<Vec<Rat>>,
    },
}

/// Exact Gaussian elimination with full pivoting on a rectangular system.
/// `rows` is the coefficient matrix (each row one equation), `rhs` the
/// right-hand sides.
pub fn solve_exact(rows: &[Vec<Rat>], rhs: &[Rat]) -> Result<SolveOutcome, ExactError> {
    let m = rows.len();
    if rhs.len() != m {
        return Err(ExactError::DimensionMismatch(m, rhs.len()));
    }
    let n = if m == 0 { 0 } else { rows[0].len() };
    for r in rows {
        if r.len() != n {
            return Err(ExactError::DimensionMismatch(n, r.len()));
        }
    }

    let mut a: Vec<Vec<Rat>> = rows.to_vec();
    let mut b: Vec<Rat> = rhs.to_vec();
    let mut row_origin: Vec<usize> = (0..m).collect();
    let mut col_perm: Vec<usize> = (0..n).collect(); // col_perm[k] = original column in slot k

    let mut rank = 0;
    while rank < m && rank < n {
        // full pivot: largest |entry| in the untouched block (any nonzero works;
        // magnitude keeps intermediate numbers tame)
        let mut best: Option<(usize, usize)> = None;
        for i in rank..m {
            for j in rank..n {
                if !a[i][j].is_zero() {
                    match &best {
                        Some((bi, bj)) if a[*bi][*bj].abs() >= a[i][j].abs() => {}
                        _ => best = Some((i, j)),
                    }
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(rank, pi);
        b.swap(rank, pi);
        row_origin.swap(rank, pi);
        if pj != rank {
            for row in a.iter_mut() {
                row.swap(rank, pj);
            }
            col_perm.swap(rank, pj);
        }
        let pivot = a[rank][rank].clone();
        for i in 0..m {
            if i == rank || a[i][rank].is_zero() {
                continue;
            }
            let factor = &a[i][rank] / &pivot;
            for j in rank..n {
                let v = &a[rank][j] * &factor;
                a[i][j] = &a[i][j] - &v;
            }
            let v = &b[rank] * &factor;
            b[i] = &b[i] - &v;
        }
        rank += 1;
    }

    // inconsistency: a zeroed-out row with nonzero rhs
    for i in rank..m {
        if !b[i].is_zero() {
            return Ok(SolveOutcome::NoSolution {
                row: row_origin[i],
                residual: b[i].clone(),
            });
        }
    }

    // back-substitute (matrix is diagonal on the pivot block after full
    // elimination above)
    let mut x_perm = vec![Rat::zero(); n];
    for k in 0..rank {
        x_perm[k] = &b[k] / &a[k][k];
    }
    let unpermute = |xp: &[Rat]| {
        let mut x = vec![Rat::zero(); n];
        for (slot, &orig) in col_perm.iter().enumerate() {
            x[orig] = xp[slot].clone();
        }
        x
    };
    let particular = unpermute(&x_perm);

    if rank == n {
        Ok(SolveOutcome::Solution(particular))
    } else {
        let mut dirs = Vec::new();
        for free in rank..n {
            let mut d = vec![Rat::zero(); n];
            d[free] = Rat::one();
            for k in 0..rank {
                d[k] = -(&a[k][free] / &a[k][k]);
            }
            dirs.push(unpermute(&d));
        }
        Ok(SolveOutcome::Underdetermined {
            particular,
            free_directions: dirs,
        })
    }
}
