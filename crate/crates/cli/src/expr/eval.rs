use std::sync::Arc;

use num_complex::Complex64;
use semidirect::spacetime::SpinPoincareElement;
use semidirect::{pauli_spec, AlgebraElement, AlgebraSpec, DElement, Result, SquareMatrix, TElement};

use super::ast::{Alg, Expr, GroupExpr};

/// Result of evaluating an [`Expr`].
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Group(TElement),
    Element(AlgebraElement),
}

pub fn eval_alg(spec: &Arc<AlgebraSpec>, a: &Alg) -> Result<AlgebraElement> {
    match a {
        Alg::Scalar(z) => AlgebraElement::scalar(spec, *z),
        Alg::Sigma(k) => Ok(AlgebraElement::basis(spec, *k)),
        Alg::Matrix(m) => {
            let rows: Vec<Vec<Complex64>> = m.iter().map(|r| r.to_vec()).collect();
            AlgebraElement::from_matrix(spec, &SquareMatrix::from_rows(rows)?)
        }
        Alg::Scale(z, a) => eval_alg(spec, a)?.scale(*z),
        Alg::Sum(a, b) => eval_alg(spec, a)?.add(&eval_alg(spec, b)?),
    }
}

pub fn eval_group(spec: &Arc<AlgebraSpec>, g: &GroupExpr) -> Result<TElement> {
    match g {
        GroupExpr::Shift(b) => Ok(TElement::shift(eval_alg(spec, b)?)),
        GroupExpr::Left(l) => TElement::left_mult(eval_alg(spec, l)?),
        GroupExpr::Right(r) => TElement::right_mult(eval_alg(spec, r)?),
        GroupExpr::Pair(b, l) => Ok(DElement::new(eval_alg(spec, b)?, eval_alg(spec, l)?)?.into()),
        GroupExpr::Triple(b, l, r) => {
            TElement::new(eval_alg(spec, b)?, eval_alg(spec, l)?, eval_alg(spec, r)?)
        }
        GroupExpr::Star(g) => eval_group(spec, g)?.star(),
        GroupExpr::Boost(k, eta) => SpinPoincareElement::boost(*k, *eta)?.to_triple(spec),
        GroupExpr::Rotation(k, theta) => SpinPoincareElement::rotation(*k, *theta)?.to_triple(spec),
        GroupExpr::Compose(a, b) => eval_group(spec, a)?.compose(&eval_group(spec, b)?),
        GroupExpr::Inverse(g) => eval_group(spec, g)?.inverse(),
    }
}

/// Evaluates over the Pauli algebra.
pub fn eval(expr: &Expr) -> Result<Value> {
    let spec = pauli_spec();
    match expr {
        Expr::Group(g) => Ok(Value::Group(eval_group(&spec, g)?)),
        Expr::Apply(g, a) => Ok(Value::Element(eval_group(&spec, g)?.apply(&eval_alg(&spec, a)?)?)),
        Expr::Element(a) => Ok(Value::Element(eval_alg(&spec, a)?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse;

    fn run(src: &str) -> Value {
        eval(&parse(src).unwrap()).unwrap()
    }

    fn sigma(k: usize) -> AlgebraElement {
        AlgebraElement::basis(&pauli_spec(), k)
    }

    #[test]
    fn shift_after_left_multiplication() {
        let Value::Element(e) = run("S[sigma1] * L[sigma3] @ sigma0") else {
            panic!("expected an element");
        };
        assert!(e.approx_eq(&sigma(3).add(&sigma(1)).unwrap(), 1e-12));
    }

    #[test]
    fn pair_with_unit_is_identity() {
        assert_eq!(
            run("D(0,sigma0)"),
            Value::Group(TElement::identity(&pauli_spec()))
        );
    }

    #[test]
    fn sigma1_triple_is_self_inverse() {
        let Value::Group(t) = run("T(0,sigma1,sigma1)^-1") else {
            panic!("expected a group element");
        };
        let expected = TElement::new(AlgebraElement::zero(&pauli_spec()), sigma(1), sigma(1)).unwrap();
        assert!(t.approx_eq(&expected, 1e-12));
    }

    #[test]
    fn right_operator_divides_on_the_right() {
        let Value::Element(e) = run("R[2*sigma0] @ sigma2") else {
            panic!("expected an element");
        };
        assert!(e.approx_eq(&sigma(2).scale(Complex64::new(0.5, 0.0)).unwrap(), 1e-12));
    }

    #[test]
    fn singular_constructor_is_an_error() {
        assert!(eval(&parse("L[sigma0 + sigma3]").unwrap()).is_err());
        assert!(eval(&parse("boost(4, 1)").unwrap()).is_err());
    }
}
