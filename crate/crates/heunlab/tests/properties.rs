//! Property tests for the spec-level invariants: printer/parser fixpoint,
//! exact solver correctness, characteristic polynomial similarity
//! invariance, and sampler bounds.

use heunlab::cli::Sampler;
use heunlab::exact::{int, rat, solve_exact, Rat, RatMatrix, SolveOutcome};
use heunlab::relalg::{self, Expr, ExprKind, Pos, Presentation, Relation};
use proptest::prelude::*;

fn arb_rat() -> impl Strategy<Value = Rat> {
    (-40i64..=40, 1i64..=9).prop_map(|(n, d)| rat(n, d))
}

fn arb_expr() -> impl Strategy<Value = Expr> {
    let pos = Pos { line: 1, col: 1 };
    let leaf = prop_oneof![
        Just(ExprKind::Name("A".into())),
        Just(ExprKind::Name("B".into())),
        Just(ExprKind::Name("s".into())),
        arb_rat().prop_map(ExprKind::Num),
    ]
    .prop_map(move |kind| Expr { kind, pos });
    leaf.prop_recursive(3, 24, 2, move |inner| {
        prop_oneof![
            (inner.clone(), inner.clone())
                .prop_map(move |(a, b)| Expr { kind: ExprKind::Add(Box::new(a), Box::new(b)), pos }),
            (inner.clone(), inner.clone())
                .prop_map(move |(a, b)| Expr { kind: ExprKind::Sub(Box::new(a), Box::new(b)), pos }),
            (inner.clone(), inner.clone())
                .prop_map(move |(a, b)| Expr { kind: ExprKind::Mul(Box::new(a), Box::new(b)), pos }),
            (inner.clone(), inner.clone())
                .prop_map(move |(a, b)| Expr { kind: ExprKind::Comm(Box::new(a), Box::new(b)), pos }),
            (inner.clone(), inner.clone())
                .prop_map(move |(a, b)| Expr { kind: ExprKind::Acomm(Box::new(a), Box::new(b)), pos }),
            (inner, 1u32..=4)
                .prop_map(move |(a, e)| Expr { kind: ExprKind::Pow(Box::new(a), e), pos }),
        ]
    })
}

fn arb_matrix(dim: usize) -> impl Strategy<Value = RatMatrix> {
    proptest::collection::vec(arb_rat(), dim * dim).prop_map(move |v| {
        RatMatrix::from_rows(v.chunks(dim).map(|c| c.to_vec()).collect())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn print_parse_fixpoint(lhs in arb_expr(), rhs in arb_expr()) {
        let pres = Presentation {
            generators: vec!["A".into(), "B".into()],
            scalars: vec!["s".into()],
            relations: vec![Relation { lhs, rhs }],
        };
        let txt = relalg::print(&pres);
        let back = relalg::parse(&txt).expect("printed text parses");
        prop_assert!(relalg::same_presentation(&pres, &back), "{txt}");
        // and the printed form is already canonical
        prop_assert_eq!(relalg::print(&back), txt);
    }

    #[test]
    fn solve_roundtrip(m in arb_matrix(4), x in proptest::collection::vec(arb_rat(), 4)) {
        // rhs constructed from a known solution: the solver must return a
        // vector with zero residual (not necessarily x when rank-deficient)
        let rhs = m.apply(&x);
        let rows: Vec<Vec<Rat>> = (0..4).map(|i| (0..4).map(|j| m.get(i, j).clone()).collect()).collect();
        let got = match solve_exact(&rows, &rhs).unwrap() {
            SolveOutcome::Solution(v) => v,
            SolveOutcome::Underdetermined { particular, .. } => particular,
            SolveOutcome::NoSolution { .. } => return Err(TestCaseError::fail("consistent system reported unsolvable")),
        };
        prop_assert_eq!(m.apply(&got), rhs);
    }

    #[test]
    fn char_poly_similarity_invariant(m in arb_matrix(4), c in arb_rat(), i in 0usize..4, j in 0usize..4) {
        prop_assume!(i != j);
        // conjugation by the shear E = I + c e_ij preserves char_poly
        let mut e = RatMatrix::identity(4);
        e.set(i, j, c.clone());
        let mut einv = RatMatrix::identity(4);
        einv.set(i, j, -c);
        let conj = &(&einv * &m) * &e;
        prop_assert_eq!(conj.char_poly(), m.char_poly());
    }

    #[test]
    fn char_poly_constant_term_vs_trace(m in arb_matrix(3)) {
        // coefficient of t^(n-1) is -trace
        let cp = m.char_poly();
        prop_assert_eq!(cp.len(), 4);
        prop_assert_eq!(cp[2].clone(), -m.trace());
    }

    #[test]
    fn sampler_respects_bounds(seed in any::<u64>(), nb in 1i64..=20, db in 1i64..=8) {
        let mut s = Sampler::new(seed, 0, nb, db);
        for _ in 0..32 {
            let v = s.rat();
            prop_assert!(v >= int(-nb) && v <= int(nb));
            prop_assert!(v.denom() <= &num::BigInt::from(db));
        }
    }
}
