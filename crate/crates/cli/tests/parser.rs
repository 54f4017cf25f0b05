//! Pretty-printing a parsed expression and parsing it again gives the same
//! tree, for trees drawn from the grammar.

use num_complex::Complex64;
use proptest::prelude::*;

use semidirect_cli::expr::{parse, parse_alg, Alg, Expr, GroupExpr};

/// Finite reals with a mix of short literals, signs, and full-precision
/// values.
fn real() -> impl Strategy<Value = f64> {
    prop_oneof![
        (-20i32..20).prop_map(f64::from),
        (-5i32..5).prop_map(|k| f64::from(k) / 4.0),
        -1e3..1e3f64,
        (1e-8..1e-6f64),
    ]
}

fn complex() -> impl Strategy<Value = Complex64> {
    prop_oneof![
        real().prop_map(|x| Complex64::new(x, 0.0)),
        real().prop_map(|y| Complex64::new(0.0, y)),
        (real(), real()).prop_map(|(x, y)| Complex64::new(x, y)),
    ]
}

fn alg() -> impl Strategy<Value = Alg> {
    let leaf = prop_oneof![
        complex().prop_map(Alg::Scalar),
        (0usize..4).prop_map(Alg::Sigma),
        proptest::array::uniform2(proptest::array::uniform2(complex())).prop_map(Alg::Matrix),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            (complex(), inner.clone()).prop_map(|(z, a)| Alg::Scale(z, Box::new(a))),
            (inner.clone(), inner).prop_map(|(a, b)| Alg::Sum(Box::new(a), Box::new(b))),
        ]
    })
}

fn group() -> impl Strategy<Value = GroupExpr> {
    let leaf = prop_oneof![
        alg().prop_map(GroupExpr::Shift),
        alg().prop_map(GroupExpr::Left),
        alg().prop_map(GroupExpr::Right),
        (alg(), alg()).prop_map(|(b, l)| GroupExpr::Pair(b, l)),
        (alg(), alg(), alg()).prop_map(|(b, l, r)| GroupExpr::Triple(b, l, r)),
        (1usize..4, real()).prop_map(|(k, x)| GroupExpr::Boost(k, x)),
        (1usize..4, real()).prop_map(|(k, x)| GroupExpr::Rotation(k, x)),
    ];
    leaf.prop_recursive(4, 16, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(|g| GroupExpr::Star(Box::new(g))),
            inner.clone().prop_map(|g| GroupExpr::Inverse(Box::new(g))),
            (inner.clone(), inner).prop_map(|(a, b)| GroupExpr::Compose(Box::new(a), Box::new(b))),
        ]
    })
}

fn expr() -> impl Strategy<Value = Expr> {
    prop_oneof![
        group().prop_map(Expr::Group),
        (group(), alg()).prop_map(|(g, a)| Expr::Apply(g, a)),
        alg().prop_map(Expr::Element),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn printed_expressions_reparse_to_the_same_tree(e in expr()) {
        let printed = e.to_string();
        let parsed = parse(&printed).map_err(|err| TestCaseError::fail(format!("{printed}: {err}")))?;
        prop_assert_eq!(&parsed, &e);
    }

    #[test]
    fn printed_elements_reparse_alone(a in alg()) {
        let printed = a.to_string();
        prop_assert_eq!(parse_alg(&printed).unwrap(), a);
    }
}
