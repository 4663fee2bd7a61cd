//! Class expressions for the command line.
//!
//!   expr := term ('+' term)*
//!   term := atom ('*' atom)*
//!   atom := INT | 'a' ('^' INT)? | ('e' | 'z') INT ('^' INT)?
//!
//! 'a' is the field generator (so it needs a field of degree > 1); e<i> and
//! z<i> are the degree-one and degree-two cohomology generators, 1-based.
//! Scalar atoms multiply into the coefficient, generator atoms cup-multiply.
//! Every summand must land in the same degree.

use hopflab::{Algebra, CohClass, Error, Field, Result, Scalar};

pub fn parse_class(alg: &Algebra, src: &str) -> Result<CohClass> {
    let mut p = Parser {
        src: src.as_bytes(),
        pos: 0,
    };
    let first = p.term(alg)?;
    let mut sum = first;
    loop {
        p.skip_ws();
        if !p.eat(b'+') {
            break;
        }
        p.skip_ws();
        let at = p.pos;
        let next = p.term(alg)?;
        sum = sum.add(&next).map_err(|e| match e {
            Error::MixedDegree(a, b) => {
                Error::parse(at, format!("mixed degrees in sum: {a} vs {b}"))
            }
            other => other,
        })?;
    }
    p.expect_end()?;
    Ok(sum)
}

/// Scalar-only expressions, e.g. "a", "a^2", "1+a", "2*a+1".
pub fn parse_scalar(f: &Field, src: &str) -> Result<Scalar> {
    let mut p = Parser {
        src: src.as_bytes(),
        pos: 0,
    };
    let mut sum = p.scalar_term(f)?;
    loop {
        p.skip_ws();
        if !p.eat(b'+') {
            break;
        }
        sum = f.add(sum, p.scalar_term(f)?);
    }
    p.expect_end()?;
    Ok(sum)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

enum Atom {
    Num(Scalar),
    Class(CohClass),
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.src.get(self.pos) == Some(&b' ') {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect_end(&mut self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(c) => Err(Error::parse(
                self.pos,
                format!("unexpected character '{}'", c as char),
            )),
        }
    }

    fn int(&mut self) -> Result<usize> {
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(Error::parse(start, "expected a number"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| Error::parse(start, "number out of range"))
    }

    fn exponent(&mut self) -> Result<usize> {
        if self.eat(b'^') {
            self.skip_ws();
            self.int()
        } else {
            Ok(1)
        }
    }

    fn atom(&mut self, alg: &Algebra) -> Result<Atom> {
        let f = alg.field();
        let at = self.pos;
        match self.peek() {
            Some(c) if c.is_ascii_digit() => Ok(Atom::Num(f.from_int(self.int()? as i64))),
            Some(b'a') => {
                self.pos += 1;
                if f.n() == 1 {
                    return Err(Error::parse(
                        at,
                        format!("GF({}) has no generator 'a'", f.q()),
                    ));
                }
                Ok(Atom::Num(f.pow(f.gen(), self.exponent()? as u64)))
            }
            Some(c @ (b'e' | b'z')) => {
                self.pos += 1;
                let ipos = self.pos;
                let i = self.int()?;
                if i == 0 || i > alg.r() {
                    return Err(Error::parse(
                        ipos,
                        format!("generator index {i} outside 1..={}", alg.r()),
                    ));
                }
                let gen = if c == b'e' {
                    CohClass::eta(alg, i - 1)
                } else {
                    CohClass::zeta(alg, i - 1)
                };
                let mut out = CohClass::unit(alg);
                for _ in 0..self.exponent()? {
                    out = out.cup(&gen);
                }
                Ok(Atom::Class(out))
            }
            Some(c) => Err(Error::parse(
                at,
                format!("unexpected character '{}'", c as char),
            )),
            None => Err(Error::parse(at, "unexpected end of expression")),
        }
    }

    fn term(&mut self, alg: &Algebra) -> Result<CohClass> {
        let f = alg.field();
        let mut coeff = Scalar::ONE;
        let mut class: Option<CohClass> = None;
        loop {
            match self.atom(alg)? {
                Atom::Num(c) => coeff = f.mul(coeff, c),
                Atom::Class(c) => {
                    class = Some(match class {
                        None => c,
                        Some(k) => k.cup(&c),
                    })
                }
            }
            if !self.eat(b'*') {
                break;
            }
        }
        let base = class.unwrap_or_else(|| CohClass::unit(alg));
        Ok(base.scale(coeff))
    }

    fn scalar_term(&mut self, f: &Field) -> Result<Scalar> {
        let mut coeff = Scalar::ONE;
        loop {
            let at = self.pos;
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    coeff = f.mul(coeff, f.from_int(self.int()? as i64))
                }
                Some(b'a') => {
                    self.pos += 1;
                    if f.n() == 1 {
                        return Err(Error::parse(
                            at,
                            format!("GF({}) has no generator 'a'", f.q()),
                        ));
                    }
                    coeff = f.mul(coeff, f.pow(f.gen(), self.exponent()? as u64));
                }
                Some(c) => {
                    return Err(Error::parse(
                        at,
                        format!("expected a scalar, found '{}'", c as char),
                    ))
                }
                None => return Err(Error::parse(at, "unexpected end of expression")),
            }
            if !self.eat(b'*') {
                break;
            }
        }
        Ok(coeff)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use hopflab::{AlgebraCtx, FieldCtx};

    fn alg(p: u32, n: usize, r: usize) -> Algebra {
        AlgebraCtx::new(&FieldCtx::new(p, n).unwrap(), r).unwrap()
    }

    #[test]
    fn class_expressions_cover_the_grammar() {
        let a = alg(3, 1, 2);
        let c = parse_class(&a, "z1 + 2*z2").unwrap();
        assert_eq!(c.degree(), 2);
        assert_eq!(c.support().count(), 2);

        let sq = parse_class(&a, "z1^2 + z1*z2").unwrap();
        assert_eq!(sq.degree(), 4);
        assert!(sq.in_s());

        let odd = parse_class(&a, "e1*z2").unwrap();
        assert_eq!(odd.degree(), 3);
        assert!(!odd.in_s());

        let f4 = alg(2, 2, 2);
        let scaled = parse_class(&f4, "a^2*e1 + e2").unwrap();
        assert_eq!(scaled.degree(), 1);

        // scalar-only expression lands in degree zero
        assert_eq!(parse_class(&a, "2").unwrap().degree(), 0);
    }

    #[test]
    fn class_expression_errors_carry_positions() {
        let a = alg(3, 1, 2);
        match parse_class(&a, "z1 + e1") {
            Err(Error::Parse { pos, msg }) => {
                assert_eq!(pos, 5);
                assert!(msg.contains("mixed degrees"));
            }
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(matches!(
            parse_class(&a, "z3"),
            Err(Error::Parse { pos: 1, .. })
        ));
        assert!(matches!(
            parse_class(&a, "a*z1"),
            Err(Error::Parse { pos: 0, .. })
        ));
        assert!(matches!(
            parse_class(&a, "z1 z2"),
            Err(Error::Parse { pos: 3, .. })
        ));
        assert!(matches!(parse_class(&a, ""), Err(Error::Parse { .. })));
    }

    #[test]
    fn scalar_expressions_parse_field_elements() {
        let f = FieldCtx::new(2, 2).unwrap();
        let a = f.gen();
        assert_eq!(parse_scalar(&f, "a").unwrap(), a);
        assert_eq!(parse_scalar(&f, "a^2").unwrap(), f.mul(a, a));
        assert_eq!(parse_scalar(&f, "1+a").unwrap(), f.add(Scalar::ONE, a));
        assert_eq!(parse_scalar(&f, "0").unwrap(), Scalar::ZERO);
        assert!(matches!(parse_scalar(&f, "z1"), Err(Error::Parse { .. })));
        let f2 = FieldCtx::new(2, 1).unwrap();
        assert!(matches!(parse_scalar(&f2, "a"), Err(Error::Parse { .. })));
    }
}
