use num_complex::Complex64;

use super::ast::{Alg, Expr, GroupExpr};
use super::lexer::{tokenize, Token, TokenKind};
use super::ParseError;

const GROUP_STARTS: [&str; 9] = [
    "'S['", "'L['", "'R['", "'D('", "'T('", "'star('", "'boost('", "'rot('", "'('",
];
const ALG_STARTS: [&str; 4] = [
    "a complex number",
    "'sigma0'..'sigma3'",
    "a matrix literal",
    "'('",
];

struct Parser {
    tokens: Vec<Token>,
    idx: usize,
}

impl Parser {
    fn peek(&self) -> &TokenKind {
        &self.tokens[self.idx].kind
    }

    fn peek_at(&self, offset: usize) -> &TokenKind {
        let i = (self.idx + offset).min(self.tokens.len() - 1);
        &self.tokens[i].kind
    }

    fn pos(&self) -> usize {
        self.tokens[self.idx].pos
    }

    fn advance(&mut self) -> TokenKind {
        let kind = self.tokens[self.idx].kind.clone();
        if self.idx + 1 < self.tokens.len() {
            self.idx += 1;
        }
        kind
    }

    fn error(&self, expected: &[&str]) -> ParseError {
        ParseError::new(
            self.pos(),
            expected.iter().map(|s| s.to_string()).collect(),
            self.peek().describe(),
        )
    }

    fn expect(&mut self, kind: TokenKind) -> Result<(), ParseError> {
        if *self.peek() == kind {
            self.advance();
            Ok(())
        } else {
            Err(self.error(&[&kind.describe()]))
        }
    }

    fn expect_eof(&mut self, also: &[&str]) -> Result<(), ParseError> {
        if *self.peek() == TokenKind::Eof {
            Ok(())
        } else {
            let mut expected = also.to_vec();
            expected.push("end of input");
            Err(self.error(&expected))
        }
    }

    fn group_chain(&mut self) -> Result<GroupExpr, ParseError> {
        let mut lhs = self.group_term()?;
        while *self.peek() == TokenKind::Star {
            self.advance();
            let rhs = self.group_term()?;
            lhs = GroupExpr::Compose(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn group_term(&mut self) -> Result<GroupExpr, ParseError> {
        let mut g = self.group_atom()?;
        while *self.peek() == TokenKind::Inverse {
            self.advance();
            g = GroupExpr::Inverse(Box::new(g));
        }
        Ok(g)
    }

    fn bracketed_alg(&mut self) -> Result<Alg, ParseError> {
        self.expect(TokenKind::LBracket)?;
        let a = self.alg()?;
        self.expect(TokenKind::RBracket)?;
        Ok(a)
    }

    fn group_atom(&mut self) -> Result<GroupExpr, ParseError> {
        let name = match self.peek() {
            TokenKind::Ident(name) => name.clone(),
            TokenKind::LParen => {
                self.advance();
                let g = self.group_chain()?;
                self.expect(TokenKind::RParen)?;
                return Ok(g);
            }
            _ => return Err(self.error(&GROUP_STARTS)),
        };
        match name.as_str() {
            "S" | "L" | "R" => {
                self.advance();
                let a = self.bracketed_alg()?;
                Ok(match name.as_str() {
                    "S" => GroupExpr::Shift(a),
                    "L" => GroupExpr::Left(a),
                    _ => GroupExpr::Right(a),
                })
            }
            "D" => {
                self.advance();
                self.expect(TokenKind::LParen)?;
                let b = self.alg()?;
                self.expect(TokenKind::Comma)?;
                let l = self.alg()?;
                self.expect(TokenKind::RParen)?;
                Ok(GroupExpr::Pair(b, l))
            }
            "T" => {
                self.advance();
                self.expect(TokenKind::LParen)?;
                let b = self.alg()?;
                self.expect(TokenKind::Comma)?;
                let l = self.alg()?;
                self.expect(TokenKind::Comma)?;
                let r = self.alg()?;
                self.expect(TokenKind::RParen)?;
                Ok(GroupExpr::Triple(b, l, r))
            }
            "star" => {
                self.advance();
                self.expect(TokenKind::LParen)?;
                let g = self.group_chain()?;
                self.expect(TokenKind::RParen)?;
                Ok(GroupExpr::Star(Box::new(g)))
            }
            "boost" | "rot" => {
                self.advance();
                self.expect(TokenKind::LParen)?;
                let axis = self.axis()?;
                self.expect(TokenKind::Comma)?;
                let param = self.signed_real()?;
                self.expect(TokenKind::RParen)?;
                Ok(if name == "boost" {
                    GroupExpr::Boost(axis, param)
                } else {
                    GroupExpr::Rotation(axis, param)
                })
            }
            _ => Err(self.error(&GROUP_STARTS)),
        }
    }

    fn axis(&mut self) -> Result<usize, ParseError> {
        match *self.peek() {
            TokenKind::Number(x) if x.fract() == 0.0 && (0.0..=1e6).contains(&x) => {
                self.advance();
                Ok(x as usize)
            }
            _ => Err(self.error(&["an axis 1, 2 or 3"])),
        }
    }

    fn signed_real(&mut self) -> Result<f64, ParseError> {
        let negative = *self.peek() == TokenKind::Minus;
        if negative {
            self.advance();
        }
        match *self.peek() {
            TokenKind::Number(x) => {
                self.advance();
                Ok(if negative { -x } else { x })
            }
            _ => Err(self.error(&["a real number"])),
        }
    }

    fn starts_complex(&self) -> bool {
        matches!(
            self.peek(),
            TokenKind::Minus | TokenKind::Number(_) | TokenKind::Imag(_)
        )
    }

    /// `[-] real [(+|-) imag]` or `[-] imag`.
    fn complex(&mut self) -> Result<Complex64, ParseError> {
        let negative = *self.peek() == TokenKind::Minus;
        if negative {
            self.advance();
        }
        let sign = if negative { -1.0 } else { 1.0 };
        match *self.peek() {
            TokenKind::Imag(y) => {
                self.advance();
                Ok(Complex64::new(0.0, sign * y))
            }
            TokenKind::Number(x) => {
                self.advance();
                let re = sign * x;
                let im_sign = match self.peek() {
                    TokenKind::Plus => 1.0,
                    TokenKind::Minus => -1.0,
                    _ => return Ok(Complex64::new(re, 0.0)),
                };
                if let TokenKind::Imag(y) = *self.peek_at(1) {
                    self.advance();
                    self.advance();
                    Ok(Complex64::new(re, im_sign * y))
                } else {
                    Ok(Complex64::new(re, 0.0))
                }
            }
            _ => Err(self.error(&["a number"])),
        }
    }

    fn alg(&mut self) -> Result<Alg, ParseError> {
        let mut lhs = self.alg_term()?;
        while *self.peek() == TokenKind::Plus {
            self.advance();
            let rhs = self.alg_term()?;
            lhs = Alg::Sum(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn alg_term(&mut self) -> Result<Alg, ParseError> {
        if self.starts_complex() {
            let z = self.complex()?;
            if *self.peek() == TokenKind::Star {
                self.advance();
                let a = self.alg_term()?;
                return Ok(Alg::Scale(z, Box::new(a)));
            }
            return Ok(Alg::Scalar(z));
        }
        self.alg_primary()
    }

    fn alg_primary(&mut self) -> Result<Alg, ParseError> {
        match self.peek().clone() {
            TokenKind::Ident(name) => {
                let k = match name.as_str() {
                    "sigma0" => 0,
                    "sigma1" => 1,
                    "sigma2" => 2,
                    "sigma3" => 3,
                    _ => return Err(self.error(&ALG_STARTS)),
                };
                self.advance();
                Ok(Alg::Sigma(k))
            }
            TokenKind::LBracket => Ok(Alg::Matrix(self.matrix()?)),
            TokenKind::LParen => {
                self.advance();
                let a = self.alg()?;
                self.expect(TokenKind::RParen)?;
                Ok(a)
            }
            _ => Err(self.error(&ALG_STARTS)),
        }
    }

    fn matrix_row(&mut self) -> Result<[Complex64; 2], ParseError> {
        self.expect(TokenKind::LBracket)?;
        let a = self.complex()?;
        self.expect(TokenKind::Comma)?;
        let b = self.complex()?;
        self.expect(TokenKind::RBracket)?;
        Ok([a, b])
    }

    fn matrix(&mut self) -> Result<[[Complex64; 2]; 2], ParseError> {
        self.expect(TokenKind::LBracket)?;
        let r0 = self.matrix_row()?;
        self.expect(TokenKind::Comma)?;
        let r1 = self.matrix_row()?;
        self.expect(TokenKind::RBracket)?;
        Ok([r0, r1])
    }
}

fn farther(a: ParseError, b: ParseError) -> ParseError {
    use std::cmp::Ordering;
    match a.pos.cmp(&b.pos) {
        Ordering::Greater => a,
        Ordering::Less => b,
        Ordering::Equal => {
            let mut expected = a.expected;
            for e in b.expected {
                if !expected.contains(&e) {
                    expected.push(e);
                }
            }
            ParseError { expected, ..a }
        }
    }
}

/// Parses a full expression: a group expression, optionally applied to an
/// algebra element with `@`, or a bare algebra element.
pub fn parse(src: &str) -> Result<Expr, ParseError> {
    let tokens = tokenize(src)?;
    let mut p = Parser {
        tokens: tokens.clone(),
        idx: 0,
    };
    let group_attempt = (|| {
        let g = p.group_chain()?;
        if *p.peek() == TokenKind::At {
            p.advance();
            let a = p.alg()?;
            p.expect_eof(&["'+'"])?;
            return Ok(Expr::Apply(g, a));
        }
        p.expect_eof(&["'*'", "'^-1'", "'@'"])?;
        Ok(Expr::Group(g))
    })();
    let group_err = match group_attempt {
        Ok(e) => return Ok(e),
        Err(e) => e,
    };
    let mut p = Parser { tokens, idx: 0 };
    let alg_attempt = (|| {
        let a = p.alg()?;
        p.expect_eof(&["'+'"])?;
        Ok(Expr::Element(a))
    })();
    alg_attempt.map_err(|alg_err| farther(group_err, alg_err))
}

/// Parses an algebra-element expression only.
pub fn parse_alg(src: &str) -> Result<Alg, ParseError> {
    let mut p = Parser {
        tokens: tokenize(src)?,
        idx: 0,
    };
    let a = p.alg()?;
    p.expect_eof(&["'+'"])?;
    Ok(a)
}

/// Parses `(v0, v1, v2, v3)` with complex entries.
pub fn parse_vec4(src: &str) -> Result<[Complex64; 4], ParseError> {
    let mut p = Parser {
        tokens: tokenize(src)?,
        idx: 0,
    };
    p.expect(TokenKind::LParen)?;
    let mut out = [Complex64::new(0.0, 0.0); 4];
    for (i, slot) in out.iter_mut().enumerate() {
        if i > 0 {
            p.expect(TokenKind::Comma)?;
        }
        *slot = p.complex()?;
    }
    p.expect(TokenKind::RParen)?;
    p.expect_eof(&[])?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn application_of_a_composition() {
        let e = parse("S[sigma1] * L[sigma3] @ sigma0").unwrap();
        assert_eq!(
            e,
            Expr::Apply(
                GroupExpr::Compose(
                    Box::new(GroupExpr::Shift(Alg::Sigma(1))),
                    Box::new(GroupExpr::Left(Alg::Sigma(3)))
                ),
                Alg::Sigma(0)
            )
        );
    }

    #[test]
    fn complex_literals_are_greedy() {
        assert_eq!(
            parse_alg("1+2i*sigma1").unwrap(),
            Alg::Scale(c(1.0, 2.0), Box::new(Alg::Sigma(1)))
        );
        assert_eq!(
            parse_alg("1 + sigma1").unwrap(),
            Alg::Sum(Box::new(Alg::Scalar(c(1.0, 0.0))), Box::new(Alg::Sigma(1)))
        );
        assert_eq!(parse_alg("-2.5i").unwrap(), Alg::Scalar(c(0.0, -2.5)));
    }

    #[test]
    fn inverse_binds_tighter_than_composition() {
        let e = parse("T(0,sigma1,sigma1)^-1").unwrap();
        let t = GroupExpr::Triple(Alg::Scalar(c(0.0, 0.0)), Alg::Sigma(1), Alg::Sigma(1));
        assert_eq!(e, Expr::Group(GroupExpr::Inverse(Box::new(t))));
    }

    #[test]
    fn matrix_literal() {
        let a = parse_alg("[[1+1i, 0], [0, -1]]").unwrap();
        assert_eq!(
            a,
            Alg::Matrix([[c(1.0, 1.0), c(0.0, 0.0)], [c(0.0, 0.0), c(-1.0, 0.0)]])
        );
    }

    #[test]
    fn errors_report_position_and_expectations() {
        let err = parse("S[sigma1] * ").unwrap_err();
        assert_eq!(err.pos, 12);
        assert!(err.expected.iter().any(|e| e == "'S['"), "{err}");
        let err = parse("D(sigma1 sigma2)").unwrap_err();
        assert_eq!(err.pos, 9);
        assert!(err.expected.contains(&"','".to_string()), "{err}");
        let err = parse("sigma5").unwrap_err();
        assert_eq!(err.pos, 0);
    }

    #[test]
    fn bare_elements_and_vectors() {
        assert_eq!(
            parse("2*sigma3").unwrap(),
            Expr::Element(Alg::Scale(c(2.0, 0.0), Box::new(Alg::Sigma(3))))
        );
        assert_eq!(
            parse_vec4("(1, 0, -0.5, 2i)").unwrap(),
            [c(1.0, 0.0), c(0.0, 0.0), c(-0.5, 0.0), c(0.0, 2.0)]
        );
        assert!(parse_vec4("(1, 2, 3)").is_err());
    }
}
