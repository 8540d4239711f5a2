//! Surface syntax for elements and coefficients.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := ('+' | '-')? factor (('*' | '/') factor)*
//! factor := atom ('^' '-'? int)?
//! atom   := gen | int | 'q' | '(' expr ')'
//! gen    := ('E' | 'F' | 'K' | 'Kb') index | 'J'
//! ```
//!
//! Division and negative powers are allowed only for scalars.

use num_bigint::BigInt;
use thiserror::Error;

use crate::algebra::{Element, Letter};
use crate::coeff::{Coeff, LaurentPoly, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown generator '{name}' at {pos}")]
    UnknownGenerator { pos: usize, name: String },
    #[error("index {index} at {pos} is out of range for rank {rank}")]
    IndexOutOfRank { pos: usize, index: usize, rank: usize },
    #[error("'{op}' at {pos} needs a scalar operand")]
    NotScalar { pos: usize, op: char },
    #[error("division by zero at {pos}")]
    DivisionByZero { pos: usize },
}

/// Parsed expression tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt),
    Q,
    Gen { letter: Letter, pos: usize },
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>, usize),
    Pow(Box<Expr>, i32, usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut out = Vec::new();
    let mut k = 0;
    while k < chars.len() {
        let (pos, c) = chars[k];
        if c.is_whitespace() {
            k += 1;
        } else if c.is_ascii_digit() {
            let start = k;
            while k < chars.len() && chars[k].1.is_ascii_digit() {
                k += 1;
            }
            let s: String = chars[start..k].iter().map(|x| x.1).collect();
            out.push((Tok::Int(s.parse().expect("digits")), pos));
        } else if c.is_ascii_alphabetic() {
            let start = k;
            while k < chars.len() && chars[k].1.is_ascii_alphabetic() {
                k += 1;
            }
            while k < chars.len() && chars[k].1.is_ascii_digit() {
                k += 1;
            }
            let s: String = chars[start..k].iter().map(|x| x.1).collect();
            out.push((Tok::Ident(s), pos));
        } else if "+-*/^()".contains(c) {
            out.push((Tok::Sym(c), pos));
            k += 1;
        } else {
            return Err(ParseError::Syntax {
                pos,
                msg: format!("unexpected character '{c}'"),
            });
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.0)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map(|t| t.1).unwrap_or(self.end)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn err<T>(&self, msg: &str) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            pos: self.pos(),
            msg: msg.to_string(),
        })
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let neg = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        let mut lhs = self.factor()?;
        loop {
            if self.eat('*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
            } else if self.peek() == Some(&Tok::Sym('/')) {
                let pos = self.pos();
                self.at += 1;
                lhs = Expr::Div(Box::new(lhs), Box::new(self.factor()?), pos);
            } else {
                break;
            }
        }
        Ok(if neg { Expr::Neg(Box::new(lhs)) } else { lhs })
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Sym('^')) {
            return Ok(base);
        }
        let pos = self.pos();
        self.at += 1;
        let neg = self.eat('-');
        match self.peek().cloned() {
            Some(Tok::Int(k)) => {
                self.at += 1;
                let k: i32 = match i32::try_from(&k) {
                    Ok(k) => k,
                    Err(_) => return self.err("exponent too large"),
                };
                Ok(Expr::Pow(Box::new(base), if neg { -k } else { k }, pos))
            }
            _ => self.err("expected an integer exponent"),
        }
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let pos = self.pos();
        match self.peek().cloned() {
            Some(Tok::Int(k)) => {
                self.at += 1;
                Ok(Expr::Int(k))
            }
            Some(Tok::Ident(name)) => {
                self.at += 1;
                if name == "q" {
                    return Ok(Expr::Q);
                }
                let letter: Letter = name
                    .parse()
                    .ok()
                    .filter(|l| *l != Letter::H)
                    .ok_or(ParseError::UnknownGenerator { pos, name })?;
                Ok(Expr::Gen { letter, pos })
            }
            Some(Tok::Sym('(')) => {
                self.at += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected ')'");
                }
                Ok(e)
            }
            Some(_) => self.err("expected a generator, number, 'q' or '('"),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses text into an expression tree.
pub fn parse_expr(text: &str) -> Result<Expr, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks,
        at: 0,
        end: text.len(),
    };
    let e = p.expr()?;
    if p.at != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(e)
}

impl Expr {
    /// Evaluates in the free algebra of the given rank (no normalization).
    pub fn eval(&self, rank: usize) -> Result<Element, ParseError> {
        Ok(match self {
            Expr::Int(k) => Element::scalar(Coeff::from(Rational::from_integer(k.clone()))),
            Expr::Q => Element::scalar(Coeff::q_pow(1)),
            Expr::Gen { letter, pos } => {
                if let Some(i) = letter.index() {
                    if i > rank {
                        return Err(ParseError::IndexOutOfRank {
                            pos: *pos,
                            index: i,
                            rank,
                        });
                    }
                }
                Element::letter(*letter)
            }
            Expr::Neg(x) => x.eval(rank)?.neg(),
            Expr::Add(x, y) => x.eval(rank)?.add(&y.eval(rank)?),
            Expr::Sub(x, y) => x.eval(rank)?.sub(&y.eval(rank)?),
            Expr::Mul(x, y) => x.eval(rank)?.mul(&y.eval(rank)?),
            Expr::Div(x, y, pos) => {
                let d = y
                    .eval(rank)?
                    .as_scalar()
                    .ok_or(ParseError::NotScalar { pos: *pos, op: '/' })?;
                let inv = d.inv().map_err(|_| ParseError::DivisionByZero { pos: *pos })?;
                x.eval(rank)?.scale(&inv)
            }
            Expr::Pow(x, k, pos) => {
                let b = x.eval(rank)?;
                if *k >= 0 {
                    b.pow(*k as u32)
                } else {
                    let s = b.as_scalar().ok_or(ParseError::NotScalar { pos: *pos, op: '^' })?;
                    let p = s.pow(*k).map_err(|_| ParseError::DivisionByZero { pos: *pos })?;
                    Element::scalar(p)
                }
            }
        })
    }
}

/// Parses an element of the free algebra of rank `rank`.
pub fn parse_element(text: &str, rank: usize) -> Result<Element, ParseError> {
    parse_expr(text)?.eval(rank)
}

/// Parses a coefficient in `Q(q)`.
pub fn parse_scalar(text: &str) -> Result<Coeff, ParseError> {
    let e = parse_element(text, 0)?;
    e.as_scalar().ok_or(ParseError::NotScalar { pos: 0, op: '=' })
}

/// Parses a plain rational such as `-3/2`.
pub fn parse_rational(text: &str) -> Result<Rational, ParseError> {
    let c = parse_scalar(text)?;
    match c.as_laurent() {
        Some(p) if p.is_zero() => Ok(Rational::from_integer(0.into())),
        Some(p) if p.low_exp() == 0 && p.high_exp() == 0 => Ok(p.coeff(0)),
        _ => Err(ParseError::Syntax {
            pos: 0,
            msg: format!("'{text}' is not a rational number"),
        }),
    }
}

/// Convenience for tests and examples: a Laurent polynomial as a coefficient.
pub fn laurent(terms: &[(i32, i64)]) -> Coeff {
    LaurentPoly::from_terms(terms.iter().map(|&(e, c)| (e, crate::coeff::rat_int(c)))).into()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::rat;

    #[test]
    fn parses_generators_and_scalars() {
        let x = parse_element("E1*F1 - F1*E1", 1).unwrap();
        assert_eq!(x.len(), 2);
        assert_eq!(x.to_string(), "E1*F1 - F1*E1");
        let y = parse_element("(q - q^-1)^-1 * (K1 - Kb1)", 1).unwrap();
        assert_eq!(y.to_string(), "(q - q^-1)^-1*K1 - (q - q^-1)^-1*Kb1");
        assert_eq!(parse_element("2*J^2", 1).unwrap().to_string(), "2*J*J");
        assert_eq!(parse_rational("-3/2").unwrap(), rat(-3, 2));
        assert_eq!(parse_scalar("q + q^-1").unwrap(), laurent(&[(1, 1), (-1, 1)]));
    }

    #[test]
    fn reports_errors() {
        assert!(matches!(
            parse_element("E3", 2),
            Err(ParseError::IndexOutOfRank { index: 3, .. })
        ));
        assert!(matches!(
            parse_element("E1 +", 1),
            Err(ParseError::Syntax { pos: 4, .. })
        ));
        assert!(matches!(
            parse_element("X1", 1),
            Err(ParseError::UnknownGenerator { .. })
        ));
        assert!(matches!(
            parse_element("E0", 1),
            Err(ParseError::UnknownGenerator { .. })
        ));
        assert!(matches!(
            parse_element("E1/E1", 1),
            Err(ParseError::NotScalar { .. })
        ));
        assert!(matches!(
            parse_element("E1^-1", 1),
            Err(ParseError::NotScalar { .. })
        ));
        assert!(matches!(
            parse_element("1/(q - q)", 1),
            Err(ParseError::DivisionByZero { .. })
        ));
        assert!(parse_element("h", 1).is_err());
    }

    #[test]
    fn printed_coefficients_parse_back() {
        for text in [
            "(q - q^-1)^-1",
            "(q + q^-1)/(q - q^-1)",
            "3/2*q^2 - 1",
            "-(q^2 + 1)^-1",
            "q^-3",
        ] {
            let c = parse_scalar(text).unwrap();
            assert_eq!(parse_scalar(&c.to_string()).unwrap(), c, "{text} -> {c}");
        }
    }
}
