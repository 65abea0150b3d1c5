//! Text form of polynomials: `x1^2 - 3*x2*x3`.
//!
//! Terms are separated by `+` or `-`. A term is an optional integer
//! coefficient followed by `*`-separated factors `xK` or `xK^E`
//! (`1 <= K <= r`, `E >= 1`). Whitespace is ignored.

use num_bigint::BigInt;
use num_traits::One;

use super::monomial::Monomial;
use super::polynomial::Polynomial;
use crate::error::{Error, Result};
use crate::field::FieldSpec;

struct Cursor<'a> {
    chars: Vec<(usize, char)>,
    at: usize,
    source: &'a str,
}

impl<'a> Cursor<'a> {
    fn new(source: &'a str) -> Self {
        let chars = source.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
        Cursor { chars, at: 0, source }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.at).map(|&(_, c)| c)
    }

    fn pos(&self) -> usize {
        self.chars.get(self.at).map_or(self.source.len(), |&(p, _)| p)
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        self.at += 1;
        c
    }

    fn error(&self, msg: impl Into<String>) -> Error {
        Error::Syntax { pos: self.pos(), msg: msg.into() }
    }

    fn digits(&mut self) -> Option<String> {
        let mut s = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            s.push(c);
            self.at += 1;
        }
        (!s.is_empty()).then_some(s)
    }
}

pub fn parse_polynomial(text: &str, r: usize, field: FieldSpec) -> Result<Polynomial> {
    let mut cur = Cursor::new(text);
    let mut terms = Vec::new();
    let mut first = true;
    loop {
        let negative = match cur.peek() {
            Some('+') => {
                cur.bump();
                false
            }
            Some('-') => {
                cur.bump();
                true
            }
            None if first => return Err(cur.error("empty polynomial")),
            _ if first => false,
            Some(c) => return Err(cur.error(format!("expected + or -, found {c:?}"))),
            None => break,
        };
        first = false;
        let (m, c) = parse_term(&mut cur, r)?;
        terms.push((m, if negative { -c } else { c }));
        if cur.peek().is_none() {
            break;
        }
    }
    Polynomial::new(field, r, terms)
}

fn parse_term(cur: &mut Cursor<'_>, r: usize) -> Result<(Monomial, BigInt)> {
    let coeff = match cur.digits() {
        Some(d) => {
            let c: BigInt = d.parse().expect("ascii digits");
            match cur.peek() {
                Some('*') => {
                    cur.bump();
                    if cur.peek() != Some('x') {
                        return Err(cur.error("expected a variable after '*'"));
                    }
                }
                Some('x') => {}
                _ => return Ok((Monomial::one(r), c)),
            }
            c
        }
        None => BigInt::one(),
    };
    let mut exponents = vec![0u32; r];
    loop {
        if cur.peek() != Some('x') {
            return Err(cur.error("expected a variable or coefficient"));
        }
        cur.bump();
        let index_pos = cur.pos();
        let index: usize = cur
            .digits()
            .ok_or_else(|| cur.error("expected a variable index after 'x'"))?
            .parse()
            .map_err(|_| Error::Syntax { pos: index_pos, msg: "variable index too large".into() })?;
        if index == 0 || index > r {
            return Err(Error::UnknownVariable { index, vars: r });
        }
        let mut exp = 1u32;
        if cur.peek() == Some('^') {
            cur.bump();
            let exp_pos = cur.pos();
            exp = cur
                .digits()
                .ok_or_else(|| cur.error("expected an exponent after '^'"))?
                .parse()
                .map_err(|_| Error::Syntax { pos: exp_pos, msg: "exponent too large".into() })?;
            if exp == 0 {
                return Err(Error::Syntax { pos: exp_pos, msg: "exponent must be at least 1".into() });
            }
        }
        exponents[index - 1] += exp;
        if cur.peek() == Some('*') {
            cur.bump();
        } else {
            break;
        }
    }
    Ok((Monomial::new(exponents), coeff))
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn parses_forms() {
        let p = parse_polynomial("x1^2 - 3*x2*x3", 3, Q).unwrap();
        assert_eq!(p.degree(), 2);
        assert_eq!(p.len(), 2);
        assert_eq!(p.to_string(), "x1^2 - 3*x2*x3");
        let q = parse_polynomial(" - x1 + 2 x2 +x1", 2, Q).unwrap();
        assert_eq!(q.to_string(), "2*x2");
        let r = parse_polynomial("x1*x1*x2^2", 2, Q).unwrap();
        assert_eq!(r.to_string(), "x1^2*x2^2");
        assert_eq!(parse_polynomial("7", 2, Q).unwrap().degree(), 0);
    }

    #[test]
    fn reduces_mod_p() {
        let p = parse_polynomial("x1 - x2", 2, FieldSpec::PrimeField(5)).unwrap();
        assert_eq!(p.to_string(), "x1 + 4*x2");
        assert_eq!(parse_polynomial("5*x1", 1, FieldSpec::PrimeField(5)), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn errors() {
        assert_eq!(parse_polynomial("x1 + x2^2", 2, Q), Err(Error::NotHomogeneous));
        assert_eq!(parse_polynomial("x4", 3, Q), Err(Error::UnknownVariable { index: 4, vars: 3 }));
        assert_eq!(parse_polynomial("x0", 3, Q), Err(Error::UnknownVariable { index: 0, vars: 3 }));
        assert!(matches!(parse_polynomial("x1 +", 2, Q), Err(Error::Syntax { pos: 4, .. })));
        assert!(matches!(parse_polynomial("x1 x2", 2, Q), Err(Error::Syntax { pos: 3, .. })));
        assert!(matches!(parse_polynomial("y", 2, Q), Err(Error::Syntax { pos: 0, .. })));
        assert!(matches!(parse_polynomial("x1^", 2, Q), Err(Error::Syntax { .. })));
        assert!(matches!(parse_polynomial("3*", 2, Q), Err(Error::Syntax { .. })));
        assert!(matches!(parse_polynomial("", 2, Q), Err(Error::Syntax { .. })));
    }
}
