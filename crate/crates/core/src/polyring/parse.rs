use num_bigint::BigInt;

use super::field::{Field, FieldElement};
use super::monomial::Monomial;
use super::poly::Polynomial;
use crate::error::{Error, Result};

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse { line: 1, column: self.pos + 1, message: message.into() }
    }

    fn digits(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(text.parse().expect("ascii digits"))
    }

    fn small(&mut self) -> Result<u32> {
        let start = self.pos;
        let n = self.digits()?;
        u32::try_from(n).map_err(|_| Error::Parse {
            line: 1,
            column: start + 1,
            message: "exponent too large".into(),
        })
    }
}

impl Polynomial {
    /// Parses the text form, e.g. `x*y + z^2`, `3*x^2`, `-y`.
    ///
    /// Coefficients are integers, optionally written as fractions `a/b`;
    /// whitespace is ignored.
    pub fn parse(text: &str, field: Field) -> Result<Polynomial> {
        let mut cur = Cursor { src: text.as_bytes(), pos: 0 };
        let mut terms = Vec::new();
        let mut first = true;
        loop {
            let sign = match cur.peek() {
                None if first => return Err(cur.error("empty polynomial")),
                None => break,
                Some(b'+') => {
                    cur.pos += 1;
                    1
                }
                Some(b'-') => {
                    cur.pos += 1;
                    -1
                }
                Some(_) if first => 1,
                Some(c) => return Err(cur.error(format!("expected '+' or '-', found '{}'", c as char))),
            };
            first = false;
            terms.push(parse_term(&mut cur, field, sign)?);
        }
        Ok(Polynomial::from_terms(field, terms))
    }
}

fn parse_term(cur: &mut Cursor<'_>, field: Field, sign: i64) -> Result<(Monomial, FieldElement)> {
    let mut coeff = FieldElement::from_i64(field, sign);
    let mut exps = [0u32; 3];
    if cur.peek().is_some_and(|c| c.is_ascii_digit()) {
        let start = cur.pos;
        let num = cur.digits()?;
        let den = if cur.peek() == Some(b'/') {
            cur.pos += 1;
            cur.digits()?
        } else {
            BigInt::from(1)
        };
        let c = FieldElement::from_fraction(field, &num, &den).map_err(|_| Error::Parse {
            line: 1,
            column: start + 1,
            message: format!("denominator vanishes in {field}"),
        })?;
        coeff = coeff.mul(&c);
        if cur.peek() != Some(b'*') {
            return Ok((Monomial::ONE, coeff));
        }
        cur.pos += 1;
    }
    let mut need_factor = true;
    while need_factor {
        let l = match cur.peek() {
            Some(b'x') => 0,
            Some(b'y') => 1,
            Some(b'z') => 2,
            Some(c) => return Err(cur.error(format!("expected a variable x, y or z, found '{}'", c as char))),
            None => return Err(cur.error("expected a variable x, y or z")),
        };
        cur.pos += 1;
        let e = if cur.peek() == Some(b'^') {
            cur.pos += 1;
            cur.small()?
        } else {
            1
        };
        exps[l] = exps[l].checked_add(e).ok_or_else(|| cur.error("exponent too large"))?;
        if exps.iter().map(|&e| e as u64).sum::<u64>() > 0xffff {
            return Err(cur.error("degree too large"));
        }
        need_factor = cur.peek() == Some(b'*');
        if need_factor {
            cur.pos += 1;
        }
    }
    Ok((Monomial::new(exps), coeff))
}
