use super::ParseError;

#[derive(Clone, Debug, PartialEq)]
pub enum TokenKind {
    Ident(String),
    /// Unsigned real literal.
    Number(f64),
    /// Unsigned imaginary literal, `2i` or a bare `i`.
    Imag(f64),
    LBracket,
    RBracket,
    LParen,
    RParen,
    Comma,
    Star,
    Plus,
    Minus,
    At,
    /// `^-1`
    Inverse,
    Eof,
}

impl TokenKind {
    pub fn describe(&self) -> String {
        match self {
            TokenKind::Ident(s) => format!("'{s}'"),
            TokenKind::Number(x) => format!("number {x}"),
            TokenKind::Imag(x) => format!("imaginary number {x}i"),
            TokenKind::LBracket => "'['".into(),
            TokenKind::RBracket => "']'".into(),
            TokenKind::LParen => "'('".into(),
            TokenKind::RParen => "')'".into(),
            TokenKind::Comma => "','".into(),
            TokenKind::Star => "'*'".into(),
            TokenKind::Plus => "'+'".into(),
            TokenKind::Minus => "'-'".into(),
            TokenKind::At => "'@'".into(),
            TokenKind::Inverse => "'^-1'".into(),
            TokenKind::Eof => "end of input".into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Token {
    pub kind: TokenKind,
    /// Byte offset in the source.
    pub pos: usize,
}

pub fn tokenize(src: &str) -> Result<Vec<Token>, ParseError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let single = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'[' => Some(TokenKind::LBracket),
            b']' => Some(TokenKind::RBracket),
            b'(' => Some(TokenKind::LParen),
            b')' => Some(TokenKind::RParen),
            b',' => Some(TokenKind::Comma),
            b'*' => Some(TokenKind::Star),
            b'+' => Some(TokenKind::Plus),
            b'-' => Some(TokenKind::Minus),
            b'@' => Some(TokenKind::At),
            _ => None,
        };
        if let Some(kind) = single {
            out.push(Token { kind, pos: start });
            i += 1;
            continue;
        }
        if c == b'^' {
            if src[i..].starts_with("^-1") {
                out.push(Token {
                    kind: TokenKind::Inverse,
                    pos: start,
                });
                i += 3;
                continue;
            }
            return Err(ParseError::new(start, vec!["'^-1'".into()], "'^'".into()));
        }
        if c.is_ascii_digit() || (c == b'.' && bytes.get(i + 1).is_some_and(u8::is_ascii_digit)) {
            i = scan_number(bytes, i);
            let text = &src[start..i];
            let value: f64 = text
                .parse()
                .map_err(|_| ParseError::new(start, vec!["a number".into()], format!("'{text}'")))?;
            let imaginary = bytes.get(i) == Some(&b'i')
                && !bytes
                    .get(i + 1)
                    .is_some_and(|b| b.is_ascii_alphanumeric() || *b == b'_');
            if imaginary {
                i += 1;
                out.push(Token {
                    kind: TokenKind::Imag(value),
                    pos: start,
                });
            } else {
                out.push(Token {
                    kind: TokenKind::Number(value),
                    pos: start,
                });
            }
            continue;
        }
        if c.is_ascii_alphabetic() || c == b'_' {
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            let word = &src[start..i];
            let kind = if word == "i" {
                TokenKind::Imag(1.0)
            } else {
                TokenKind::Ident(word.to_string())
            };
            out.push(Token { kind, pos: start });
            continue;
        }
        let ch = src[start..].chars().next().unwrap_or('?');
        return Err(ParseError::new(start, vec!["a token".into()], format!("'{ch}'")));
    }
    out.push(Token {
        kind: TokenKind::Eof,
        pos: src.len(),
    });
    Ok(out)
}

/// Digits, optional fraction, optional exponent.
fn scan_number(bytes: &[u8], mut i: usize) -> usize {
    while i < bytes.len() && bytes[i].is_ascii_digit() {
        i += 1;
    }
    if i < bytes.len() && bytes[i] == b'.' {
        i += 1;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
    }
    if i < bytes.len() && (bytes[i] == b'e' || bytes[i] == b'E') {
        let mut j = i + 1;
        if j < bytes.len() && (bytes[j] == b'+' || bytes[j] == b'-') {
            j += 1;
        }
        if j < bytes.len() && bytes[j].is_ascii_digit() {
            while j < bytes.len() && bytes[j].is_ascii_digit() {
                j += 1;
            }
            i = j;
        }
    }
    i
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kinds(src: &str) -> Vec<TokenKind> {
        tokenize(src).unwrap().into_iter().map(|t| t.kind).collect()
    }

    #[test]
    fn numbers_and_imaginaries() {
        assert_eq!(
            kinds("1.5+2i - i 3e-2"),
            vec![
                TokenKind::Number(1.5),
                TokenKind::Plus,
                TokenKind::Imag(2.0),
                TokenKind::Minus,
                TokenKind::Imag(1.0),
                TokenKind::Number(0.03),
                TokenKind::Eof
            ]
        );
    }

    #[test]
    fn inverse_and_identifiers() {
        assert_eq!(
            kinds("L[sigma3]^-1"),
            vec![
                TokenKind::Ident("L".into()),
                TokenKind::LBracket,
                TokenKind::Ident("sigma3".into()),
                TokenKind::RBracket,
                TokenKind::Inverse,
                TokenKind::Eof
            ]
        );
        assert!(tokenize("x^2").is_err());
        assert_eq!(tokenize("a $").unwrap_err().pos, 2);
    }
}
