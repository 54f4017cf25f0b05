//! The expression language for group elements over the Pauli algebra.
//!
//! ```text
//! expr  := chain ['@' alg] | alg
//! chain := term ('*' term)*
//! term  := atom ('^-1')*
//! atom  := 'S[' alg ']' | 'L[' alg ']' | 'R[' alg ']'
//!        | 'D(' alg ',' alg ')' | 'T(' alg ',' alg ',' alg ')'
//!        | 'star(' chain ')' | 'boost(' k ',' eta ')' | 'rot(' k ',' theta ')'
//!        | '(' chain ')'
//! alg   := aterm ('+' aterm)*
//! aterm := complex '*' aterm | complex | 'sigma0'..'sigma3'
//!        | '[[' c ',' c '],[' c ',' c ']]' | '(' alg ')'
//! ```
//!
//! `R[r]` is the inverse-twisted right operator `a -> a r^-1`, the triple
//! `(0, 1, r)`. A complex literal is `x`, `yi`, `x+yi` or `x-yi`.

mod ast;
mod eval;
mod lexer;
mod parser;

use std::fmt;

pub use ast::{complex_literal, Alg, Expr, GroupExpr};
pub use eval::{eval, eval_alg, eval_group, Value};
pub use parser::{parse, parse_alg, parse_vec4};

/// A parse failure at byte offset `pos`.
#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub struct ParseError {
    pub pos: usize,
    pub expected: Vec<String>,
    pub found: String,
}

impl ParseError {
    pub fn new(pos: usize, expected: Vec<String>, found: String) -> Self {
        Self { pos, expected, found }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "parse error at column {}: expected {}; found {}",
            self.pos + 1,
            self.expected.join(" or "),
            self.found
        )
    }
}
