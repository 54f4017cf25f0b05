use std::fmt;

use num_complex::Complex64;

/// An algebra-element expression over the Pauli algebra.
#[derive(Clone, Debug, PartialEq)]
pub enum Alg {
    /// `λ`, read as `λ·1`.
    Scalar(Complex64),
    /// `sigma0` .. `sigma3`.
    Sigma(usize),
    /// `[[a, b], [c, d]]`.
    Matrix([[Complex64; 2]; 2]),
    /// `λ * a`.
    Scale(Complex64, Box<Alg>),
    Sum(Box<Alg>, Box<Alg>),
}

/// A group-valued expression; every value is a triple `(B, L, R)`.
#[derive(Clone, Debug, PartialEq)]
pub enum GroupExpr {
    /// `S[b]`: translation by `b`.
    Shift(Alg),
    /// `L[l]`: `a -> l a`.
    Left(Alg),
    /// `R[r]`: `a -> a r^-1`.
    Right(Alg),
    /// `D(b, l)`.
    Pair(Alg, Alg),
    /// `T(b, l, r)`.
    Triple(Alg, Alg, Alg),
    Star(Box<GroupExpr>),
    /// `boost(k, eta)`: `exp(eta sigma_k / 2)` as a spinor element.
    Boost(usize, f64),
    /// `rot(k, theta)`: `exp(-i theta sigma_k / 2)` as a spinor element.
    Rotation(usize, f64),
    Compose(Box<GroupExpr>, Box<GroupExpr>),
    Inverse(Box<GroupExpr>),
}

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Group(GroupExpr),
    /// `g @ a`.
    Apply(GroupExpr, Alg),
    Element(Alg),
}

/// Shortest text that reads back as the same `f64`.
fn real(x: f64) -> String {
    format!("{x:?}")
}

pub fn complex_literal(z: Complex64) -> String {
    if z.im == 0.0 {
        real(z.re)
    } else if z.re == 0.0 {
        format!("{}i", real(z.im))
    } else if z.im < 0.0 {
        format!("{}-{}i", real(z.re), real(-z.im))
    } else {
        format!("{}+{}i", real(z.re), real(z.im))
    }
}

impl Alg {
    /// Whether the printed form starts with an unsigned imaginary literal,
    /// which a preceding `real +` would absorb into one complex number.
    fn starts_with_imaginary(&self) -> bool {
        match self {
            Alg::Scalar(z) | Alg::Scale(z, _) => z.re == 0.0 && z.im > 0.0,
            Alg::Sum(a, _) => a.starts_with_imaginary(),
            Alg::Sigma(_) | Alg::Matrix(_) => false,
        }
    }
}

impl fmt::Display for Alg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Alg::Scalar(z) => f.write_str(&complex_literal(*z)),
            Alg::Sigma(k) => write!(f, "sigma{k}"),
            Alg::Matrix(m) => write!(
                f,
                "[[{}, {}], [{}, {}]]",
                complex_literal(m[0][0]),
                complex_literal(m[0][1]),
                complex_literal(m[1][0]),
                complex_literal(m[1][1])
            ),
            Alg::Scale(z, a) => match **a {
                Alg::Sum(..) => write!(f, "{}*({a})", complex_literal(*z)),
                _ => write!(f, "{}*{a}", complex_literal(*z)),
            },
            Alg::Sum(a, b) => {
                let wrap = matches!(**b, Alg::Sum(..)) || b.starts_with_imaginary();
                if wrap {
                    write!(f, "{a} + ({b})")
                } else {
                    write!(f, "{a} + {b}")
                }
            }
        }
    }
}

impl fmt::Display for GroupExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupExpr::Shift(a) => write!(f, "S[{a}]"),
            GroupExpr::Left(a) => write!(f, "L[{a}]"),
            GroupExpr::Right(a) => write!(f, "R[{a}]"),
            GroupExpr::Pair(b, l) => write!(f, "D({b}, {l})"),
            GroupExpr::Triple(b, l, r) => write!(f, "T({b}, {l}, {r})"),
            GroupExpr::Star(g) => write!(f, "star({g})"),
            GroupExpr::Boost(k, eta) => write!(f, "boost({k}, {})", real(*eta)),
            GroupExpr::Rotation(k, theta) => write!(f, "rot({k}, {})", real(*theta)),
            GroupExpr::Compose(a, b) => match **b {
                GroupExpr::Compose(..) => write!(f, "{a} * ({b})"),
                _ => write!(f, "{a} * {b}"),
            },
            GroupExpr::Inverse(g) => match **g {
                GroupExpr::Compose(..) => write!(f, "({g})^-1"),
                _ => write!(f, "{g}^-1"),
            },
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Group(g) => write!(f, "{g}"),
            Expr::Apply(g, a) => write!(f, "{g} @ {a}"),
            Expr::Element(a) => write!(f, "{a}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_literals() {
        assert_eq!(complex_literal(Complex64::new(1.0, 0.0)), "1.0");
        assert_eq!(complex_literal(Complex64::new(0.0, -2.5)), "-2.5i");
        assert_eq!(complex_literal(Complex64::new(0.0, 2.5)), "2.5i");
        assert_eq!(complex_literal(Complex64::new(-1.0, 2.0)), "-1.0+2.0i");
        assert_eq!(complex_literal(Complex64::new(3.0, -1e-7)), "3.0-1e-7i");
    }
}
