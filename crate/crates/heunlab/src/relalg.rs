//! A small relation DSL and an exact structure-constant fitter.
//!
//! Algebra presentations live in `.rel` text files: a `gens` header, a
//! `scalars` header, then relations `lhs = rhs` separated by semicolons.
//! Expressions support sums, differences, products (juxtaposition or `*`),
//! integer powers `^`, commutators `[a,b]`, anticommutators `{a,b}` and
//! rational literals. Comments start with `#`.
//!
//! The fitter treats selected scalar symbols as unknowns and solves the
//! exact linear system that makes all relation residuals vanish on a given
//! matrix assignment. Every presentation in scope is affine in its scalar
//! symbols; nonlinearity is detected by sampling and rejected.

use crate::exact::{int, rat_str, solve_exact, Rat, RatMatrix, SolveOutcome};
use num::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Debug, thiserror::Error)]
pub enum RelError {
    #[error("{pos}: {msg}")]
    Syntax { pos: Pos, msg: String },
    #[error("{pos}: undeclared identifier {name:?}")]
    Undeclared { pos: Pos, name: String },
    #[error("duplicate name {0:?}")]
    DuplicateName(String),
    #[error("scalar {0:?} has no value")]
    UnknownScalar(String),
    #[error("generator {0:?} has no matrix")]
    MissingGenerator(String),
    #[error("relation {0} is not affine in the unknown scalars")]
    NonAffine(usize),
    #[error(transparent)]
    Exact(#[from] crate::exact::ExactError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExprKind {
    Num(Rat),
    Name(String),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    Comm(Box<Expr>, Box<Expr>),
    Acomm(Box<Expr>, Box<Expr>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expr {
    pub kind: ExprKind,
    pub pos: Pos,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub lhs: Expr,
    pub rhs: Expr,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub generators: Vec<String>,
    pub scalars: Vec<String>,
    pub relations: Vec<Relation>,
}

// ---------------------------------------------------------------- lexer

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Name(String),
    Num(Rat),
    Plus,
    Minus,
    Star,
    Caret,
    LBrack,
    RBrack,
    LBrace,
    RBrace,
    LParen,
    RParen,
    Comma,
    Eq,
    Semi,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Tok::Name(n) => return write!(f, "{n}"),
            Tok::Num(r) => return write!(f, "{}", rat_str(r)),
            Tok::Plus => "+",
            Tok::Minus => "-",
            Tok::Star => "*",
            Tok::Caret => "^",
            Tok::LBrack => "[",
            Tok::RBrack => "]",
            Tok::LBrace => "{",
            Tok::RBrace => "}",
            Tok::LParen => "(",
            Tok::RParen => ")",
            Tok::Comma => ",",
            Tok::Eq => "=",
            Tok::Semi => ";",
        };
        write!(f, "{s}")
    }
}

fn lex(src: &str) -> Result<Vec<(Tok, Pos)>, RelError> {
    let mut out = Vec::new();
    for (lineno, line) in src.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("");
        let chars: Vec<char> = line.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let pos = Pos {
                line: lineno + 1,
                col: i + 1,
            };
            if c.is_whitespace() {
                i += 1;
                continue;
            }
            let single = match c {
                '+' => Some(Tok::Plus),
                '-' => Some(Tok::Minus),
                '*' => Some(Tok::Star),
                '^' => Some(Tok::Caret),
                '[' => Some(Tok::LBrack),
                ']' => Some(Tok::RBrack),
                '{' => Some(Tok::LBrace),
                '}' => Some(Tok::RBrace),
                '(' => Some(Tok::LParen),
                ')' => Some(Tok::RParen),
                ',' => Some(Tok::Comma),
                '=' => Some(Tok::Eq),
                ';' => Some(Tok::Semi),
                _ => None,
            };
            if let Some(t) = single {
                out.push((t, pos));
                i += 1;
            } else if c.is_ascii_digit() {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let mut text: String = chars[start..i].iter().collect();
                // a '/' directly followed by digits extends the literal to p/q
                if i + 1 < chars.len() && chars[i] == '/' && chars[i + 1].is_ascii_digit() {
                    i += 1;
                    let dstart = i;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                    text.push('/');
                    text.extend(&chars[dstart..i]);
                }
                let r = crate::exact::parse_rat(&text).map_err(|_| RelError::Syntax {
                    pos,
                    msg: format!("bad rational literal {text:?}"),
                })?;
                out.push((Tok::Num(r), pos));
            } else if c.is_ascii_alphabetic() || c == '_' {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push((Tok::Name(chars[start..i].iter().collect()), pos));
            } else {
                return Err(RelError::Syntax {
                    pos,
                    msg: format!("unexpected character {c:?}"),
                });
            }
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------- parser

struct Parser {
    toks: Vec<(Tok, Pos)>,
    i: usize,
    names: Vec<String>,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.i).map(|(t, _)| t)
    }

    fn pos(&self) -> Pos {
        self.toks
            .get(self.i)
            .or_else(|| self.toks.last())
            .map(|(_, p)| *p)
            .unwrap_or(Pos { line: 1, col: 1 })
    }

    fn bump(&mut self) -> Option<(Tok, Pos)> {
        let t = self.toks.get(self.i).cloned();
        self.i += 1;
        t
    }

    fn expect(&mut self, want: &Tok) -> Result<Pos, RelError> {
        match self.bump() {
            Some((t, p)) if &t == want => Ok(p),
            Some((t, p)) => Err(RelError::Syntax {
                pos: p,
                msg: format!("expected {want}, found {t}"),
            }),
            None => Err(RelError::Syntax {
                pos: self.pos(),
                msg: format!("expected {want}, found end of input"),
            }),
        }
    }

    fn expr(&mut self) -> Result<Expr, RelError> {
        let pos = self.pos();
        // optional leading unary minus: folded into a literal when possible,
        // otherwise desugared to 0 - term
        let mut acc = if matches!(self.peek(), Some(Tok::Minus)) {
            self.bump();
            let t = self.term()?;
            match t.kind {
                ExprKind::Num(r) => Expr {
                    kind: ExprKind::Num(-r),
                    pos,
                },
                _ => Expr {
                    kind: ExprKind::Sub(
                        Box::new(Expr {
                            kind: ExprKind::Num(Rat::zero()),
                            pos,
                        }),
                        Box::new(t),
                    ),
                    pos,
                },
            }
        } else {
            self.term()?
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    let rhs = self.term()?;
                    acc = Expr {
                        kind: ExprKind::Add(Box::new(acc), Box::new(rhs)),
                        pos,
                    };
                }
                Some(Tok::Minus) => {
                    self.bump();
                    let rhs = self.term()?;
                    acc = Expr {
                        kind: ExprKind::Sub(Box::new(acc), Box::new(rhs)),
                        pos,
                    };
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn starts_factor(&self) -> bool {
        matches!(
            self.peek(),
            Some(Tok::Name(_))
                | Some(Tok::Num(_))
                | Some(Tok::LBrack)
                | Some(Tok::LBrace)
                | Some(Tok::LParen)
        )
    }

    fn term(&mut self) -> Result<Expr, RelError> {
        let pos = self.pos();
        let mut acc = self.factor()?;
        loop {
            if matches!(self.peek(), Some(Tok::Star)) {
                self.bump();
                let rhs = self.factor()?;
                acc = Expr {
                    kind: ExprKind::Mul(Box::new(acc), Box::new(rhs)),
                    pos,
                };
            } else if self.starts_factor() {
                let rhs = self.factor()?;
                acc = Expr {
                    kind: ExprKind::Mul(Box::new(acc), Box::new(rhs)),
                    pos,
                };
            } else {
                break;
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Expr, RelError> {
        let base = self.atom()?;
        if matches!(self.peek(), Some(Tok::Caret)) {
            self.bump();
            let (t, p) = self.bump().ok_or_else(|| RelError::Syntax {
                pos: self.pos(),
                msg: "expected exponent, found end of input".into(),
            })?;
            match t {
                Tok::Num(r) if r.is_integer() && !r.numer().sign().eq(&num::bigint::Sign::Minus) => {
                    let e: u32 = r.numer().try_into().map_err(|_| RelError::Syntax {
                        pos: p,
                        msg: "exponent too large".into(),
                    })?;
                    let pos = base.pos;
                    Ok(Expr {
                        kind: ExprKind::Pow(Box::new(base), e),
                        pos,
                    })
                }
                other => Err(RelError::Syntax {
                    pos: p,
                    msg: format!("expected unsigned integer exponent, found {other}"),
                }),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Expr, RelError> {
        match self.bump() {
            Some((Tok::Num(r), pos)) => Ok(Expr {
                kind: ExprKind::Num(r),
                pos,
            }),
            Some((Tok::Name(n), pos)) => {
                if !self.names.contains(&n) {
                    return Err(RelError::Undeclared { pos, name: n });
                }
                Ok(Expr {
                    kind: ExprKind::Name(n),
                    pos,
                })
            }
            Some((Tok::LBrack, pos)) => {
                let a = self.expr()?;
                self.expect(&Tok::Comma)?;
                let b = self.expr()?;
                self.expect(&Tok::RBrack)?;
                Ok(Expr {
                    kind: ExprKind::Comm(Box::new(a), Box::new(b)),
                    pos,
                })
            }
            Some((Tok::LBrace, pos)) => {
                let a = self.expr()?;
                self.expect(&Tok::Comma)?;
                let b = self.expr()?;
                self.expect(&Tok::RBrace)?;
                Ok(Expr {
                    kind: ExprKind::Acomm(Box::new(a), Box::new(b)),
                    pos,
                })
            }
            Some((Tok::LParen, _)) => {
                let e = self.expr()?;
                self.expect(&Tok::RParen)?;
                Ok(e)
            }
            Some((t, p)) => Err(RelError::Syntax {
                pos: p,
                msg: format!("expected an atom, found {t}"),
            }),
            None => Err(RelError::Syntax {
                pos: self.pos(),
                msg: "expected an atom, found end of input".into(),
            }),
        }
    }
}

/// Parses a presentation: `gens` and `scalars` headers, then relations
/// separated by semicolons.
pub fn parse(src: &str) -> Result<Presentation, RelError> {
    let toks = lex(src)?;
    let mut p = Parser {
        toks,
        i: 0,
        names: Vec::new(),
    };

    let mut generators = Vec::new();
    let mut scalars = Vec::new();
    for (header, sink) in [("gens", &mut generators), ("scalars", &mut scalars)] {
        match p.bump() {
            Some((Tok::Name(n), _)) if n == header => {}
            Some((t, pos)) => {
                return Err(RelError::Syntax {
                    pos,
                    msg: format!("expected header {header:?}, found {t}"),
                })
            }
            None => {
                return Err(RelError::Syntax {
                    pos: p.pos(),
                    msg: format!("expected header {header:?}, found end of input"),
                })
            }
        }
        while let Some(Tok::Name(_)) = p.peek() {
            if let Some((Tok::Name(n), _)) = p.bump() {
                sink.push(n);
            }
        }
        p.expect(&Tok::Semi)?;
    }

    let mut all = generators.clone();
    all.extend(scalars.iter().cloned());
    for (i, n) in all.iter().enumerate() {
        if all[..i].contains(n) {
            return Err(RelError::DuplicateName(n.clone()));
        }
    }
    p.names = all;

    let mut relations = Vec::new();
    while p.peek().is_some() {
        let lhs = p.expr()?;
        p.expect(&Tok::Eq)?;
        let rhs = p.expr()?;
        relations.push(Relation { lhs, rhs });
        match p.peek() {
            Some(Tok::Semi) => {
                p.bump();
            }
            None => break,
            Some(t) => {
                let t = t.clone();
                return Err(RelError::Syntax {
                    pos: p.pos(),
                    msg: format!("expected ; or end of input, found {t}"),
                });
            }
        }
    }
    Ok(Presentation {
        generators,
        scalars,
        relations,
    })
}

// ---------------------------------------------------------------- printer

fn prec(e: &Expr) -> u8 {
    match &e.kind {
        // negative literals only parse in leading position, so force
        // parentheses everywhere else
        ExprKind::Num(r) if r < &Rat::zero() => 0,
        ExprKind::Add(..) | ExprKind::Sub(..) => 1,
        ExprKind::Mul(..) => 2,
        ExprKind::Pow(..) => 3,
        _ => 4,
    }
}

fn print_expr(e: &Expr, out: &mut String) {
    let wrap = |child: &Expr, min: u8, out: &mut String| {
        if prec(child) < min {
            out.push('(');
            print_expr(child, out);
            out.push(')');
        } else {
            print_expr(child, out);
        }
    };
    match &e.kind {
        ExprKind::Num(r) => out.push_str(&rat_str(r)),
        ExprKind::Name(n) => out.push_str(n),
        ExprKind::Add(a, b) => {
            wrap(a, 1, out);
            out.push_str(" + ");
            wrap(b, 2, out);
        }
        ExprKind::Sub(a, b) => {
            wrap(a, 1, out);
            out.push_str(" - ");
            wrap(b, 2, out);
        }
        ExprKind::Mul(a, b) => {
            wrap(a, 2, out);
            out.push_str(" * ");
            wrap(b, 3, out);
        }
        ExprKind::Pow(a, e2) => {
            wrap(a, 4, out);
            out.push('^');
            out.push_str(&e2.to_string());
        }
        ExprKind::Comm(a, b) => {
            out.push('[');
            print_expr(a, out);
            out.push_str(", ");
            print_expr(b, out);
            out.push(']');
        }
        ExprKind::Acomm(a, b) => {
            out.push('{');
            print_expr(a, out);
            out.push_str(", ");
            print_expr(b, out);
            out.push('}');
        }
    }
}

/// Canonical text form; `parse(print(p))` yields a structurally identical
/// presentation (positions aside).
pub fn print(p: &Presentation) -> String {
    let mut out = String::new();
    out.push_str("gens");
    for g in &p.generators {
        out.push(' ');
        out.push_str(g);
    }
    out.push_str(";\nscalars");
    for s in &p.scalars {
        out.push(' ');
        out.push_str(s);
    }
    out.push_str(";\n");
    for r in &p.relations {
        print_expr(&r.lhs, &mut out);
        out.push_str(" = ");
        print_expr(&r.rhs, &mut out);
        out.push_str(";\n");
    }
    out
}

/// Structural equality of expressions ignoring source positions.
pub fn same_shape(a: &Expr, b: &Expr) -> bool {
    match (&a.kind, &b.kind) {
        (ExprKind::Num(x), ExprKind::Num(y)) => x == y,
        (ExprKind::Name(x), ExprKind::Name(y)) => x == y,
        (ExprKind::Add(p, q), ExprKind::Add(r, s))
        | (ExprKind::Sub(p, q), ExprKind::Sub(r, s))
        | (ExprKind::Mul(p, q), ExprKind::Mul(r, s))
        | (ExprKind::Comm(p, q), ExprKind::Comm(r, s))
        | (ExprKind::Acomm(p, q), ExprKind::Acomm(r, s)) => {
            same_shape(p, r) && same_shape(q, s)
        }
        (ExprKind::Pow(p, m), ExprKind::Pow(r, n)) => m == n && same_shape(p, r),
        _ => false,
    }
}

pub fn same_presentation(a: &Presentation, b: &Presentation) -> bool {
    a.generators == b.generators
        && a.scalars == b.scalars
        && a.relations.len() == b.relations.len()
        && a.relations
            .iter()
            .zip(&b.relations)
            .all(|(x, y)| same_shape(&x.lhs, &y.lhs) && same_shape(&x.rhs, &y.rhs))
}

// ---------------------------------------------------------------- evaluator

/// Values bound to a presentation: matrices for generators, rationals (or
/// `None` = unknown, fitter target) for scalar symbols.
#[derive(Debug, Clone)]
pub struct Assignment {
    pub dim: usize,
    pub matrices: BTreeMap<String, RatMatrix>,
    pub scalars: BTreeMap<String, Option<Rat>>,
}

impl Assignment {
    pub fn new(dim: usize) -> Self {
        Assignment {
            dim,
            matrices: BTreeMap::new(),
            scalars: BTreeMap::new(),
        }
    }

    pub fn matrix(mut self, name: &str, m: RatMatrix) -> Self {
        assert_eq!(m.dim(), self.dim, "matrix dimension mismatch");
        self.matrices.insert(name.to_string(), m);
        self
    }

    pub fn scalar(mut self, name: &str, v: Rat) -> Self {
        self.scalars.insert(name.to_string(), Some(v));
        self
    }

    pub fn unknown(mut self, name: &str) -> Self {
        self.scalars.insert(name.to_string(), None);
        self
    }
}

fn eval_expr(e: &Expr, asg: &Assignment) -> Result<RatMatrix, RelError> {
    match &e.kind {
        ExprKind::Num(r) => Ok(RatMatrix::identity(asg.dim).scale(r)),
        ExprKind::Name(n) => {
            if let Some(m) = asg.matrices.get(n) {
                Ok(m.clone())
            } else if let Some(s) = asg.scalars.get(n) {
                match s {
                    Some(v) => Ok(RatMatrix::identity(asg.dim).scale(v)),
                    None => Err(RelError::UnknownScalar(n.clone())),
                }
            } else {
                Err(RelError::MissingGenerator(n.clone()))
            }
        }
        ExprKind::Add(a, b) => Ok(&eval_expr(a, asg)? + &eval_expr(b, asg)?),
        ExprKind::Sub(a, b) => Ok(&eval_expr(a, asg)? - &eval_expr(b, asg)?),
        ExprKind::Mul(a, b) => Ok(&eval_expr(a, asg)? * &eval_expr(b, asg)?),
        ExprKind::Pow(a, e2) => Ok(eval_expr(a, asg)?.pow(*e2)),
        ExprKind::Comm(a, b) => Ok(crate::exact::comm(&eval_expr(a, asg)?, &eval_expr(b, asg)?)),
        ExprKind::Acomm(a, b) => Ok(crate::exact::acomm(
            &eval_expr(a, asg)?,
            &eval_expr(b, asg)?,
        )),
    }
}

/// Residual matrix lhs - rhs; the relation holds iff this is zero.
pub fn evaluate(rel: &Relation, asg: &Assignment) -> Result<RatMatrix, RelError> {
    Ok(&eval_expr(&rel.lhs, asg)? - &eval_expr(&rel.rhs, asg)?)
}

/// Result of fitting unknown scalars against a matrix assignment.
#[derive(Debug, Clone)]
pub enum FitOutcome {
    /// Exact values for the unknowns, in the order given by `names`.
    Fit {
        names: Vec<String>,
        values: Vec<Rat>,
    },
    /// No scalar values satisfy the relations; residual witness attached.
    NoFit { residual: Rat },
    /// Solution space has positive dimension; particular values plus free
    /// directions in the unknown coordinates.
    Underdetermined {
        names: Vec<String>,
        particular: Vec<Rat>,
        free_directions: Vec<Vec<Rat>>,
    },
}

/// Solves for the unknown scalars (those assigned `None`) that make every
/// relation residual exactly zero. Relations must be affine in the
/// unknowns, which is verified by sampling and rejected otherwise.
pub fn fit_constants(pres: &Presentation, asg: &Assignment) -> Result<FitOutcome, RelError> {
    let unknowns: Vec<String> = asg
        .scalars
        .iter()
        .filter(|(_, v)| v.is_none())
        .map(|(k, _)| k.clone())
        .collect();
    let dim = asg.dim;

    let eval_all = |vals: &BTreeMap<String, Rat>| -> Result<Vec<RatMatrix>, RelError> {
        let mut a = asg.clone();
        for (k, v) in vals {
            a.scalars.insert(k.clone(), Some(v.clone()));
        }
        pres.relations.iter().map(|r| evaluate(r, &a)).collect()
    };

    let zeros: BTreeMap<String, Rat> = unknowns
        .iter()
        .map(|u| (u.clone(), Rat::zero()))
        .collect();
    let base = eval_all(&zeros)?;

    // column for unknown u: residual(u=1, rest 0) - residual(all 0);
    // affineness checked with u=2 (catches squares) and all-ones (catches
    // cross products)
    let mut columns: Vec<Vec<RatMatrix>> = Vec::new();
    for u in &unknowns {
        let mut one = zeros.clone();
        one.insert(u.clone(), Rat::one());
        let at_one = eval_all(&one)?;
        let mut two = zeros.clone();
        two.insert(u.clone(), int(2));
        let at_two = eval_all(&two)?;
        let col: Vec<RatMatrix> = at_one
            .iter()
            .zip(&base)
            .map(|(a, b)| a - b)
            .collect();
        for (ri, ((t, b), c)) in at_two.iter().zip(&base).zip(&col).enumerate() {
            if &(t - b) != &c.scale(&int(2)) {
                return Err(RelError::NonAffine(ri));
            }
        }
        columns.push(col);
    }
    if !unknowns.is_empty() {
        let ones: BTreeMap<String, Rat> =
            unknowns.iter().map(|u| (u.clone(), Rat::one())).collect();
        let at_ones = eval_all(&ones)?;
        for ri in 0..pres.relations.len() {
            let mut pred = base[ri].clone();
            for col in &columns {
                pred = &pred + &col[ri];
            }
            if at_ones[ri] != pred {
                return Err(RelError::NonAffine(ri));
            }
        }
    }

    // stack entries of all relation residuals into one linear system
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for ri in 0..pres.relations.len() {
        for i in 0..dim {
            for j in 0..dim {
                let row: Vec<Rat> = columns.iter().map(|c| c[ri].get(i, j).clone()).collect();
                rows.push(row);
                rhs.push(-base[ri].get(i, j));
            }
        }
    }

    match solve_exact(&rows, &rhs)? {
        SolveOutcome::Solution(values) => Ok(FitOutcome::Fit {
            names: unknowns,
            values,
        }),
        SolveOutcome::NoSolution { residual, .. } => Ok(FitOutcome::NoFit { residual }),
        SolveOutcome::Underdetermined {
            particular,
            free_directions,
        } => Ok(FitOutcome::Underdetermined {
            names: unknowns,
            particular,
            free_directions,
        }),
    }
}

/// Checks exact commutation of `candidate` with each generator matrix.
/// On failure returns the first offending generator index and entry.
pub fn check_central(
    candidate: &RatMatrix,
    generators: &[&RatMatrix],
) -> Result<(), (usize, (usize, usize))> {
    for (gi, g) in generators.iter().enumerate() {
        let c = crate::exact::comm(candidate, g);
        if !c.is_zero() {
            for i in 0..c.dim() {
                for j in 0..c.dim() {
                    if !c.get(i, j).is_zero() {
                        return Err((gi, (i, j)));
                    }
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{comm, int, rat};

    #[test]
    fn parse_basic_presentations() {
        let p = parse("gens K1 K2 K3; scalars ; [K1,K2] = K3").unwrap();
        assert_eq!(p.generators, vec!["K1", "K2", "K3"]);
        assert!(p.scalars.is_empty());
        assert_eq!(p.relations.len(), 1);

        let p = parse("gens B1 B2 B3; scalars w1; {B1,B2} = B3 + w1").unwrap();
        assert_eq!(p.scalars, vec!["w1"]);
        assert_eq!(p.relations.len(), 1);
    }

    #[test]
    fn syntax_error_positions() {
        let e = parse("gens K1 K2; scalars ; [K1,K2").unwrap_err();
        match e {
            RelError::Syntax { pos, .. } => assert_eq!(pos.line, 1),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse("gens K1; scalars ; [K1, Q] = K1"),
            Err(RelError::Undeclared { .. })
        ));
    }

    #[test]
    fn print_parse_fixpoint() {
        let src = "gens X W Z; scalars x0 x4;\n[W,X] = Z; [Z,X] = x0 + x4*W + 1/2 X^2";
        let p1 = parse(src).unwrap();
        let txt = print(&p1);
        let p2 = parse(&txt).unwrap();
        assert!(same_presentation(&p1, &p2));
        assert_eq!(print(&p2), txt);
    }

    fn toy() -> (Presentation, Assignment) {
        // X=diag(1,2), W=flip, Z=[W,X]; then [X,Z] = -W (hand 2x2 oracle)
        let pres = parse("gens X W Z; scalars x0 x4; [X,Z] = x0 + x4*W").unwrap();
        let x = RatMatrix::diag(&[int(1), int(2)]);
        let w = RatMatrix::from_rows(vec![vec![int(0), int(1)], vec![int(1), int(0)]]);
        let z = comm(&w, &x);
        let asg = Assignment::new(2)
            .matrix("X", x)
            .matrix("W", w)
            .matrix("Z", z)
            .unknown("x0")
            .unknown("x4");
        (pres, asg)
    }

    #[test]
    fn evaluate_residuals() {
        let (pres, asg) = toy();
        let mut solved = asg.clone();
        solved.scalars.insert("x0".into(), Some(int(0)));
        solved.scalars.insert("x4".into(), Some(int(-1)));
        let r = evaluate(&pres.relations[0], &solved).unwrap();
        assert!(r.is_zero());
        assert!(matches!(
            evaluate(&pres.relations[0], &asg),
            Err(RelError::UnknownScalar(_))
        ));
    }

    #[test]
    fn fit_toy_system() {
        let (pres, asg) = toy();
        match fit_constants(&pres, &asg).unwrap() {
            FitOutcome::Fit { names, values } => {
                let get = |n: &str| {
                    values[names.iter().position(|x| x == n).unwrap()].clone()
                };
                assert_eq!(get("x0"), int(0));
                assert_eq!(get("x4"), int(-1));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn fit_rejects_nonlinear() {
        let pres = parse("gens X; scalars s; s*s*X = X").unwrap();
        let asg = Assignment::new(1)
            .matrix("X", RatMatrix::identity(1))
            .unknown("s");
        assert!(matches!(
            fit_constants(&pres, &asg),
            Err(RelError::NonAffine(0))
        ));
    }

    #[test]
    fn fit_inconsistent_and_underdetermined() {
        // I = s*0 has no solution; I = s*I + t*I is underdetermined
        let pres = parse("gens X; scalars s; X = s*(X - X)").unwrap();
        let asg = Assignment::new(2)
            .matrix("X", RatMatrix::identity(2))
            .unknown("s");
        assert!(matches!(
            fit_constants(&pres, &asg).unwrap(),
            FitOutcome::NoFit { .. }
        ));

        let pres = parse("gens X; scalars s t; X = s*X + t*X").unwrap();
        let asg = Assignment::new(2)
            .matrix("X", RatMatrix::identity(2))
            .unknown("s")
            .unknown("t");
        match fit_constants(&pres, &asg).unwrap() {
            FitOutcome::Underdetermined {
                free_directions, ..
            } => assert_eq!(free_directions.len(), 1),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn centrality_check() {
        let a = RatMatrix::diag(&[int(1), int(2)]);
        let b = RatMatrix::from_rows(vec![vec![int(0), int(1)], vec![int(1), int(0)]]);
        assert!(check_central(&RatMatrix::identity(2), &[&a, &b]).is_ok());
        assert!(check_central(&RatMatrix::identity(2).scale(&rat(3, 7)), &[&a, &b]).is_ok());
        assert!(check_central(&a, &[&a, &b]).is_err());
    }
}
