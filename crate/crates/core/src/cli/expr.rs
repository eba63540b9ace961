//! Expressions over a generator alphabet:
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := '-'? factor ('*' factor)*
//! factor := scalar | gen ('^' int)? | '(' expr ')'
//! scalar := int ('/' int)? | 'q' ('^' int)?
//! ```

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::algebra::{AlgebraId, Element, Gen, Monomial};
use crate::error::{Error, Result};
use crate::scalars::QScalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScalarLit {
    Int(BigInt),
    Ratio(BigInt, BigInt),
    QPow(i64),
}

impl ScalarLit {
    pub fn value(&self) -> QScalar {
        match self {
            ScalarLit::Int(n) => QScalar::from_rational(BigRational::from_integer(n.clone())),
            ScalarLit::Ratio(p, r) => {
                QScalar::from_rational(BigRational::new(p.clone(), r.clone()))
            }
            ScalarLit::QPow(k) => QScalar::q_pow(*k),
        }
    }
}

impl fmt::Display for ScalarLit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarLit::Int(n) => write!(f, "{n}"),
            ScalarLit::Ratio(p, r) => write!(f, "{p}/{r}"),
            ScalarLit::QPow(1) => write!(f, "q"),
            ScalarLit::QPow(k) => write!(f, "q^{k}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expression {
    Scalar(ScalarLit),
    /// `g^k`; `k = 1` prints as the bare generator.
    Power(Gen, i64),
    Group(Box<Expression>),
    Neg(Box<Expression>),
    Mul(Box<Expression>, Box<Expression>),
    Add(Box<Expression>, Box<Expression>),
    Sub(Box<Expression>, Box<Expression>),
}

impl fmt::Display for Expression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expression::Scalar(s) => write!(f, "{s}"),
            Expression::Power(g, 1) => write!(f, "{g}"),
            Expression::Power(g, k) => write!(f, "{g}^{k}"),
            Expression::Group(e) => write!(f, "({e})"),
            Expression::Neg(e) => write!(f, "-{e}"),
            Expression::Mul(a, b) => write!(f, "{a}*{b}"),
            Expression::Add(a, b) => write!(f, "{a} + {b}"),
            Expression::Sub(a, b) => write!(f, "{a} - {b}"),
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    alg: AlgebraId,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(char::is_whitespace) {
            self.pos += self.src[self.pos..]
                .chars()
                .next()
                .map_or(1, char::len_utf8);
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn error(&self, msg: impl Into<String>) -> Error {
        Error::Syntax {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{c}`")))
        }
    }

    fn digits(&mut self) -> &str {
        let start = self.pos;
        let len = self.src[start..]
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(self.src.len() - start);
        self.pos += len;
        &self.src[start..self.pos]
    }

    fn natural(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let d = self.digits();
        if d.is_empty() {
            return Err(self.error("expected an integer"));
        }
        Ok(d.parse().expect("ascii digits"))
    }

    fn exponent(&mut self) -> Result<i64> {
        let neg = self.eat('-');
        self.skip_ws();
        let start = self.pos;
        let d = self.digits();
        if d.is_empty() {
            self.pos = start;
            return Err(self.error("exponents must be integer literals"));
        }
        let k: i64 = d.parse().map_err(|_| Error::Syntax {
            pos: start,
            msg: "exponent out of range".into(),
        })?;
        Ok(if neg { -k } else { k })
    }

    fn expr(&mut self) -> Result<Expression> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = Expression::Add(Box::new(acc), Box::new(self.term()?));
            } else if self.eat('-') {
                acc = Expression::Sub(Box::new(acc), Box::new(self.term()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Expression> {
        let neg = self.eat('-');
        let mut acc = self.factor()?;
        while self.eat('*') {
            acc = Expression::Mul(Box::new(acc), Box::new(self.factor()?));
        }
        Ok(if neg {
            Expression::Neg(Box::new(acc))
        } else {
            acc
        })
    }

    fn factor(&mut self) -> Result<Expression> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(Expression::Group(Box::new(e)))
            }
            Some(c) if c.is_ascii_digit() => {
                let p = self.natural()?;
                if self.eat('/') {
                    let at = self.pos;
                    let r = self.natural()?;
                    if r.is_zero() {
                        return Err(Error::Syntax {
                            pos: at,
                            msg: "zero denominator".into(),
                        });
                    }
                    Ok(Expression::Scalar(ScalarLit::Ratio(p, r)))
                } else {
                    Ok(Expression::Scalar(ScalarLit::Int(p)))
                }
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                let len = self.src[start..]
                    .find(|c: char| !c.is_ascii_alphanumeric())
                    .unwrap_or(self.src.len() - start);
                self.pos += len;
                let name = &self.src[start..self.pos];
                let k = if self.eat('^') { self.exponent()? } else { 1 };
                if name == "q" {
                    return Ok(Expression::Scalar(ScalarLit::QPow(k)));
                }
                let gen = Gen::from_name(name)
                    .filter(|g| self.alg.generators().contains(g))
                    .ok_or_else(|| Error::UnknownGenerator {
                        name: name.to_string(),
                        algebra: self.alg,
                    })?;
                Ok(Expression::Power(gen, k))
            }
            Some(c) => Err(self.error(format!("unexpected `{c}`"))),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

/// `parseExpression` over the generator alphabet of `alg`.
pub fn parse_expression(text: &str, alg: AlgebraId) -> Result<Expression> {
    let mut p = Parser {
        src: text,
        pos: 0,
        alg,
    };
    let e = p.expr()?;
    if p.peek().is_some() {
        return Err(p.error("trailing input"));
    }
    Ok(e)
}

fn generator(alg: AlgebraId, g: Gen, inverse: bool) -> Element {
    let cross = |k, l| {
        &Element::monomial(alg, Monomial::Cross(0, k, l))
            + &Element::monomial(alg, Monomial::Cross(1, k, l))
    };
    let sign = if inverse { -1 } else { 1 };
    match (alg, g) {
        (AlgebraId::Bicross, Gen::D0) => Element::monomial(alg, Monomial::Cross(0, 0, 0)),
        (AlgebraId::Bicross, Gen::D1) => Element::monomial(alg, Monomial::Cross(1, 0, 0)),
        (AlgebraId::Bicross, Gen::U) => cross(sign, 0),
        (AlgebraId::Bicross, Gen::V) => cross(0, sign),
        (_, Gen::U | Gen::X) => Element::monomial(alg, Monomial::Torus(sign, 0)),
        (_, Gen::V | Gen::Y) => Element::monomial(alg, Monomial::Torus(0, sign)),
        (_, Gen::Det) if inverse => Element::gen(alg, Gen::DetInv),
        (_, Gen::DetInv) if inverse => Element::gen(alg, Gen::Det),
        _ => Element::gen(alg, g),
    }
}

impl Expression {
    /// Evaluates in `alg`, reducing to normal form.
    pub fn eval(&self, alg: AlgebraId) -> Result<Element> {
        Ok(match self {
            Expression::Scalar(s) => Element::scalar(alg, s.value()),
            Expression::Power(g, k) => {
                if *k < 0 && !g.invertible() {
                    return Err(Error::NegativePower(g.name().to_string()));
                }
                generator(alg, *g, *k < 0).pow(
                    k.unsigned_abs()
                        .try_into()
                        .map_err(|_| Error::InvalidParams(format!("exponent {k} too large")))?,
                )
            }
            Expression::Group(e) => e.eval(alg)?,
            Expression::Neg(e) => e.eval(alg)?.scale(&QScalar::from_int(-1)),
            Expression::Mul(a, b) => a.eval(alg)?.checked_mul(&b.eval(alg)?)?,
            Expression::Add(a, b) => a.eval(alg)?.checked_add(&b.eval(alg)?)?,
            Expression::Sub(a, b) => a.eval(alg)?.checked_sub(&b.eval(alg)?)?,
        })
    }
}

/// Parses and evaluates in one step.
pub fn parse_element(text: &str, alg: AlgebraId) -> Result<Element> {
    parse_expression(text, alg)?.eval(alg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const ALG: AlgebraId = AlgebraId::ADTq;

    #[test]
    fn examples() {
        let e = parse_expression("q^-2*b*a^2", ALG).unwrap();
        assert_eq!(e.to_string(), "q^-2*b*a^2");
        assert!(matches!(
            parse_expression("D*z - D", ALG).unwrap(),
            Expression::Sub(..)
        ));
        match parse_expression("a^(1/2)", ALG) {
            Err(Error::Syntax { pos, .. }) => assert_eq!(pos, 2),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse_expression("a*u", ALG),
            Err(Error::UnknownGenerator { .. })
        ));
    }

    #[test]
    fn printed_elements_reparse() {
        let x = parse_element("(a + q*b)^1*(c - 1/2*D^-1)", ALG);
        assert!(x.is_err(), "groups cannot be raised to powers");
        let x = parse_element("(a + q*b)*(c - 1/2*Dinv) - 3*z", ALG).unwrap();
        assert_eq!(parse_element(&x.to_string(), ALG).unwrap(), x);
    }

    fn gen() -> impl Strategy<Value = Gen> {
        prop::sample::select(vec![
            Gen::A,
            Gen::B,
            Gen::C,
            Gen::D,
            Gen::Det,
            Gen::DetInv,
            Gen::Z,
        ])
    }

    fn factor() -> impl Strategy<Value = Expression> {
        prop_oneof![
            (0u32..50).prop_map(|n| Expression::Scalar(ScalarLit::Int(n.into()))),
            (0u32..20, 1u32..20)
                .prop_map(|(p, r)| Expression::Scalar(ScalarLit::Ratio(p.into(), r.into()))),
            (-5i64..5).prop_map(|k| Expression::Scalar(ScalarLit::QPow(k))),
            (gen(), -3i64..4).prop_map(|(g, k)| Expression::Power(g, k)),
        ]
    }

    fn expression() -> impl Strategy<Value = Expression> {
        factor().prop_recursive(4, 24, 3, |inner| {
            let product =
                prop::collection::vec(inner.clone().prop_filter("factor", is_factor), 1..3)
                    .prop_map(|fs| {
                        fs.into_iter()
                            .reduce(|a, b| Expression::Mul(Box::new(a), Box::new(b)))
                            .unwrap()
                    });
            let term = (any::<bool>(), product).prop_map(|(neg, p)| {
                if neg {
                    Expression::Neg(Box::new(p))
                } else {
                    p
                }
            });
            prop_oneof![
                inner.clone().prop_map(|e| Expression::Group(Box::new(e))),
                (
                    term.clone(),
                    prop::collection::vec((any::<bool>(), term), 0..3)
                )
                    .prop_map(|(head, rest)| {
                        rest.into_iter().fold(head, |acc, (plus, t)| {
                            if plus {
                                Expression::Add(Box::new(acc), Box::new(t))
                            } else {
                                Expression::Sub(Box::new(acc), Box::new(t))
                            }
                        })
                    }),
            ]
        })
    }

    fn is_factor(e: &Expression) -> bool {
        matches!(
            e,
            Expression::Scalar(_) | Expression::Power(..) | Expression::Group(_)
        )
    }

    proptest! {
        #[test]
        fn print_parse_round_trip(e in expression()) {
            let printed = e.to_string();
            let parsed = parse_expression(&printed, ALG).unwrap();
            prop_assert_eq!(parsed.to_string(), printed.clone());
            prop_assert_eq!(parse_expression(&parsed.to_string(), ALG).unwrap(), parsed);
        }
    }
}
