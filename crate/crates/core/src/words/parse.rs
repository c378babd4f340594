use super::{Letter, Word};
use crate::{Error, Result};

const MAX_EXPONENT: i64 = 1 << 20;
const MAX_WORD_LEN: usize = 1 << 24;

/// Parses a word in the presentation language.
///
/// ```text
/// word   := term { '*' term }
/// term   := factor [ '^' signed-integer ]
/// factor := name | '1' | '(' word ')' | '[' word ',' word ']'
/// ```
///
/// `[x, y]` expands to `x^-1 y^-1 x y`. Whitespace is ignored. The result is
/// freely reduced.
pub fn parse_word(text: &str, gens: &[String]) -> Result<Word> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        gens,
    };
    let w = p.word()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(Error::parse(
            p.pos,
            format!("unexpected `{}`", p.src[p.pos] as char),
        ));
    }
    Ok(w)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    gens: &'a [String],
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        match self.peek() {
            Some(x) if x == c => {
                self.pos += 1;
                Ok(())
            }
            Some(x) => Err(Error::parse(
                self.pos,
                format!("expected `{}`, found `{}`", c as char, x as char),
            )),
            None => Err(Error::parse(
                self.pos,
                format!("expected `{}`, found end", c as char),
            )),
        }
    }

    fn word(&mut self) -> Result<Word> {
        let mut w = self.term()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let t = self.term()?;
            if w.len() + t.len() > MAX_WORD_LEN {
                return Err(Error::parse(self.pos, "word too long"));
            }
            w = w.mul(&t);
        }
        Ok(w)
    }

    fn term(&mut self) -> Result<Word> {
        let f = self.factor()?;
        if self.peek() != Some(b'^') {
            return Ok(f);
        }
        self.pos += 1;
        let e = self.integer()?;
        if (f.len() as u128) * (e.unsigned_abs() as u128) > MAX_WORD_LEN as u128 {
            return Err(Error::parse(self.pos, "exponent overflow"));
        }
        Ok(f.pow(e))
    }

    fn integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        if matches!(self.src.get(self.pos), Some(b'-') | Some(b'+')) {
            self.pos += 1;
        }
        let digits = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == digits {
            return Err(Error::parse(start, "expected integer exponent"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        match text.parse::<i64>() {
            Ok(e) if e.abs() <= MAX_EXPONENT => Ok(e),
            _ => Err(Error::parse(start, "exponent overflow")),
        }
    }

    fn factor(&mut self) -> Result<Word> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let w = self.word()?;
                self.expect(b')')?;
                Ok(w)
            }
            Some(b'[') => {
                self.pos += 1;
                let x = self.word()?;
                self.expect(b',')?;
                let y = self.word()?;
                self.expect(b']')?;
                Ok(Word::commutator(&x, &y))
            }
            Some(b'1') => {
                self.pos += 1;
                Ok(Word::identity())
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                let g = self
                    .gens
                    .iter()
                    .position(|n| n == name)
                    .ok_or_else(|| Error::UnknownGenerator(name.to_string()))?;
                Ok(Word::from_letters([Letter::new(g as u32, false)]))
            }
            Some(c) => Err(Error::parse(
                self.pos,
                format!("unexpected `{}`", c as char),
            )),
            None => Err(Error::parse(self.pos, "unexpected end of input")),
        }
    }
}
