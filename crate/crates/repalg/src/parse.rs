//! Text syntax for free-group words and automorphism words.
//!
//! Word literals: whitespace-separated atoms `x<index>`, commutator
//! shorthand `[a,b]` with arbitrary nesting, and an optional integer
//! exponent suffix `^e` on any atom (`x1 x2^-1 [x1,[x2,x3]]^2`).
//!
//! Automorphism words: whitespace-separated generator symbols `P`, `Q`,
//! `S`, `U`, `K<i><j>`, `K<i><j><l>` with single-digit indices, each with
//! an optional `^-1` suffix.

use thiserror::Error;

use crate::words::{AutGen, NielsenName, Word};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("unexpected character {0:?} at byte {1}")]
    Unexpected(char, usize),
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("invalid number at byte {0}")]
    BadNumber(usize),
    #[error("generator index must be at least 1 (byte {0})")]
    ZeroIndex(usize),
    #[error("unknown generator symbol {0:?}")]
    UnknownSymbol(String),
    #[error("bad index digits in {0:?}")]
    BadIndices(String),
    #[error("exponent of an automorphism symbol must be 1 or -1, got {0:?}")]
    BadAutExponent(String),
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.bump();
        }
    }

    fn number(&mut self) -> Result<i64, ParseError> {
        let start = self.pos;
        let neg = if self.peek() == Some('-') {
            self.bump();
            true
        } else {
            false
        };
        let mut digits = 0u32;
        let mut value: i64 = 0;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            let d = self.bump().unwrap() as i64 - '0' as i64;
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add(d))
                .ok_or(ParseError::BadNumber(start))?;
            digits += 1;
        }
        if digits == 0 {
            return Err(ParseError::BadNumber(start));
        }
        Ok(if neg { -value } else { value })
    }
}

/// Parse a word literal into a reduced free-group word.
pub fn parse_word(src: &str) -> Result<Word, ParseError> {
    let mut cur = Cursor::new(src);
    let mut out = Word::identity();
    loop {
        cur.skip_ws();
        if cur.peek().is_none() {
            return Ok(out);
        }
        let atom = parse_atom(&mut cur)?;
        out = out.mul(&atom);
    }
}

fn parse_atom(cur: &mut Cursor) -> Result<Word, ParseError> {
    cur.skip_ws();
    let base = match cur.peek() {
        Some('x') => {
            cur.bump();
            let pos = cur.pos;
            let idx = cur.number()?;
            if idx < 1 || idx > u16::MAX as i64 {
                return Err(ParseError::ZeroIndex(pos));
            }
            Word::gen(idx as u16)
        }
        // the identity word prints as a bare "1"
        Some('1') => {
            cur.bump();
            Word::identity()
        }
        Some('[') => {
            cur.bump();
            let a = parse_atom(cur)?;
            cur.skip_ws();
            match cur.bump() {
                Some(',') => {}
                Some(c) => return Err(ParseError::Unexpected(c, cur.pos - c.len_utf8())),
                None => return Err(ParseError::UnexpectedEnd),
            }
            let b = parse_atom(cur)?;
            cur.skip_ws();
            match cur.bump() {
                Some(']') => {}
                Some(c) => return Err(ParseError::Unexpected(c, cur.pos - c.len_utf8())),
                None => return Err(ParseError::UnexpectedEnd),
            }
            Word::commutator(&a, &b)
        }
        Some(c) => return Err(ParseError::Unexpected(c, cur.pos)),
        None => return Err(ParseError::UnexpectedEnd),
    };
    if cur.peek() == Some('^') {
        cur.bump();
        let e = cur.number()?;
        let e = i32::try_from(e).map_err(|_| ParseError::BadNumber(cur.pos))?;
        Ok(base.pow(e))
    } else {
        Ok(base)
    }
}

/// Parse an automorphism word into generator symbols with exponents ±1.
pub fn parse_aut(src: &str) -> Result<Vec<(AutGen, i8)>, ParseError> {
    let mut out = Vec::new();
    for token in src.split_whitespace() {
        let (sym, exp) = match token.split_once('^') {
            None => (token, 1i8),
            Some((sym, "-1")) => (sym, -1),
            Some((sym, "1")) => (sym, 1),
            Some((_, e)) => return Err(ParseError::BadAutExponent(e.to_string())),
        };
        let g = match sym {
            "P" => AutGen::Nielsen(NielsenName::P),
            "Q" => AutGen::Nielsen(NielsenName::Q),
            "S" => AutGen::Nielsen(NielsenName::S),
            "U" => AutGen::Nielsen(NielsenName::U),
            _ => {
                let Some(digits) = sym.strip_prefix('K') else {
                    return Err(ParseError::UnknownSymbol(sym.to_string()));
                };
                let idx: Vec<u16> = digits
                    .chars()
                    .map(|c| c.to_digit(10).map(|d| d as u16))
                    .collect::<Option<_>>()
                    .ok_or_else(|| ParseError::BadIndices(sym.to_string()))?;
                if idx.iter().any(|&d| d == 0) {
                    return Err(ParseError::BadIndices(sym.to_string()));
                }
                match idx.as_slice() {
                    [i, j] => AutGen::Kij(*i, *j),
                    [i, j, l] => AutGen::Kijl(*i, *j, *l),
                    _ => return Err(ParseError::BadIndices(sym.to_string())),
                }
            }
        };
        out.push((g, exp));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn word_examples() {
        assert_eq!(parse_word("x1 x2^-1 x1").unwrap().to_string(), "x1 x2^-1 x1");
        assert_eq!(
            parse_word("[x1,x2]").unwrap(),
            Word::commutator(&Word::gen(1), &Word::gen(2))
        );
        assert_eq!(parse_word("x1 x1^-1").unwrap(), Word::identity());
        assert_eq!(parse_word("").unwrap(), Word::identity());
        assert_eq!(parse_word("x2^3").unwrap(), Word::gen(2).pow(3));
        // nesting and exponents on brackets
        let w = parse_word("[x1,[x2,x3]]^-1").unwrap();
        let inner = Word::commutator(&Word::gen(2), &Word::gen(3));
        assert_eq!(w, Word::commutator(&Word::gen(1), &inner).inv());
    }

    #[test]
    fn word_errors() {
        assert!(parse_word("y1").is_err());
        assert!(parse_word("x0").is_err());
        assert!(parse_word("x").is_err());
        assert!(parse_word("[x1 x2]").is_err());
        assert!(parse_word("[x1,x2").is_err());
        assert!(parse_word("x1^").is_err());
        assert!(parse_word("x99999999999999999999").is_err());
    }

    #[test]
    fn aut_examples() {
        assert_eq!(
            parse_aut("P Q^-1 S U").unwrap(),
            vec![
                (AutGen::Nielsen(NielsenName::P), 1),
                (AutGen::Nielsen(NielsenName::Q), -1),
                (AutGen::Nielsen(NielsenName::S), 1),
                (AutGen::Nielsen(NielsenName::U), 1),
            ]
        );
        assert_eq!(
            parse_aut("K12 K123^-1").unwrap(),
            vec![(AutGen::Kij(1, 2), 1), (AutGen::Kijl(1, 2, 3), -1)]
        );
        assert!(parse_aut("").unwrap().is_empty());
    }

    #[test]
    fn aut_errors() {
        assert!(parse_aut("X").is_err());
        assert!(parse_aut("K1").is_err());
        assert!(parse_aut("K1234").is_err());
        assert!(parse_aut("K102").is_err());
        assert!(parse_aut("S^2").is_err());
        assert!(parse_aut("Kab").is_err());
    }

    proptest! {
        #[test]
        fn display_roundtrip(letters in proptest::collection::vec((1u16..5, prop_oneof![Just(1i8), Just(-1i8)]), 0..12)) {
            let mut w = Word::identity();
            for (l, s) in letters {
                let step = if s > 0 { Word::gen(l) } else { Word::gen_inv(l) };
                w = w.mul(&step);
            }
            let parsed = parse_word(&w.to_string()).unwrap();
            prop_assert_eq!(parsed, w);
        }

        #[test]
        fn parse_word_never_panics(s in "\\PC{0,40}") {
            let _ = parse_word(&s);
        }

        #[test]
        fn parse_aut_never_panics(s in "\\PC{0,40}") {
            let _ = parse_aut(&s);
        }
    }
}
