//! Expression reader shared by the `FromStr` impls of `LaurentPoly` and
//! `RatFn`: sums, products, quotients, integer powers and parentheses over
//! rational constants and the named variables.

use super::poly::{parse_rational, LaurentPoly, Var};
use super::ratfn::RatFn;
use super::AlgebraError;

struct Reader<'a> {
    s: &'a [u8],
    pos: usize,
}

fn fail(msg: String) -> AlgebraError {
    AlgebraError::Parse(msg)
}

impl<'a> Reader<'a> {
    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn take_while(&mut self, f: impl Fn(u8) -> bool) -> &'a str {
        let start = self.pos;
        while self.peek().is_some_and(&f) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.s[start..self.pos]).unwrap()
    }

    fn expr(&mut self) -> Result<RatFn, AlgebraError> {
        let neg = self.eat(b'-');
        if !neg {
            self.eat(b'+');
        }
        let mut acc = self.term()?;
        if neg {
            acc = -&acc;
        }
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<RatFn, AlgebraError> {
        let mut acc = self.power()?;
        loop {
            if self.eat(b'*') {
                acc = &acc * &self.power()?;
            } else if self.eat(b'/') {
                let d = self.power()?;
                if d.is_zero() {
                    return Err(AlgebraError::ZeroDenominator);
                }
                acc = &acc / &d;
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<RatFn, AlgebraError> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let neg = self.eat(b'-');
        let digits = self.take_while(|c| c.is_ascii_digit());
        let e: i32 = digits.parse().map_err(|_| fail(format!("bad exponent at byte {}", self.pos)))?;
        base.pow(if neg { -e } else { e })
    }

    fn atom(&mut self) -> Result<RatFn, AlgebraError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(b')') {
                    return Err(fail("unbalanced parentheses".into()));
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.take_while(|c| c.is_ascii_digit());
                Ok(RatFn::constant(parse_rational(n)?))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let name = self.take_while(|c| c.is_ascii_alphanumeric());
                let v = Var::parse(name).ok_or_else(|| fail(format!("unknown variable `{name}`")))?;
                Ok(RatFn::from_poly(LaurentPoly::var(v)))
            }
            Some(c) => Err(fail(format!("unexpected `{}` at byte {}", c as char, self.pos))),
            None => Err(fail("unexpected end of input".into())),
        }
    }
}

pub(crate) fn parse_ratfn(s: &str) -> Result<RatFn, AlgebraError> {
    let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if text.is_empty() {
        return Err(fail("empty input".into()));
    }
    let mut r = Reader { s: text.as_bytes(), pos: 0 };
    let v = r.expr()?;
    if r.pos != text.len() {
        return Err(fail(format!("unexpected `{}` at byte {}", &text[r.pos..], r.pos)));
    }
    Ok(v)
}

pub(crate) fn parse_poly(s: &str) -> Result<LaurentPoly, AlgebraError> {
    let r = parse_ratfn(s)?.cancelled();
    match r.to_poly() {
        Some(p) => Ok(p),
        None => r.num().exact_divide(&r.den_poly()),
    }
}
