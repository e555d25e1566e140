//! Recursive-descent parser for generating-function expressions.
//!
//! ```text
//! Expr   := Term (('+' | '-') Term)*
//! Term   := Unary (('*' | '/') Unary)*
//! Unary  := '-' Unary | Power
//! Power  := Atom ('^' UInt)*
//! Atom   := 'sqrt' '(' Expr ')' | '(' Expr ')' | UInt | 'x'
//! ```
//!
//! A rational literal `p/q` is read as the division of two integers, which
//! gives the same value. Expressions are parsed once and then evaluated at
//! whatever working order the divisions by powers of `x` require.

use num_bigint::BigInt;

use super::Series;
use crate::error::{Error, Result};
use crate::rat::Rat;

#[derive(Clone, Debug, PartialEq)]
enum Expr {
    Num(BigInt),
    X,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    Sqrt(Box<Expr>),
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    X,
    Sqrt,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn syntax(pos: usize, msg: impl Into<String>) -> Error {
    Error::Syntax {
        pos,
        msg: msg.into(),
    }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'x' => Tok::X,
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = text[start..i].parse().expect("ascii digits");
                out.push((start, Tok::Num(n)));
                continue;
            }
            _ if text[i..].starts_with("sqrt") => {
                out.push((i, Tok::Sqrt));
                i += 4;
                continue;
            }
            _ => {
                let ch = text[i..].chars().next().unwrap_or('?');
                return Err(syntax(i, format!("unexpected character `{ch}`")));
            }
        };
        out.push((i, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn eat(&mut self, want: &Tok) -> bool {
        if self.peek() == Some(want) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<()> {
        if self.eat(&want) {
            Ok(())
        } else {
            Err(syntax(self.offset(), format!("expected {what}")))
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            if self.eat(&Tok::Plus) {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat(&Tok::Minus) {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat(&Tok::Star) {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat(&Tok::Slash) {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat(&Tok::Minus) {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let mut base = self.atom()?;
        while self.eat(&Tok::Caret) {
            let at = self.offset();
            match self.peek().cloned() {
                Some(Tok::Num(n)) => {
                    self.pos += 1;
                    let e = u32::try_from(&n).map_err(|_| syntax(at, "exponent too large"))?;
                    base = Expr::Pow(Box::new(base), e);
                }
                _ => return Err(syntax(at, "expected unsigned integer exponent")),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr> {
        let at = self.offset();
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(Expr::Num(n))
            }
            Some(Tok::X) => {
                self.pos += 1;
                Ok(Expr::X)
            }
            Some(Tok::Sqrt) => {
                self.pos += 1;
                self.expect(Tok::LParen, "`(` after sqrt")?;
                let inner = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(Expr::Sqrt(Box::new(inner)))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(inner)
            }
            Some(_) => Err(syntax(at, "expected a number, `x`, `sqrt` or `(`")),
            None => Err(syntax(at, "unexpected end of input")),
        }
    }
}

fn parse_expr(text: &str) -> Result<Expr> {
    let toks = tokenize(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: text.len(),
    };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(syntax(p.offset(), "unexpected trailing input"));
    }
    Ok(e)
}

// Outcome of one evaluation attempt at a fixed working order.
enum Eval {
    Done(Series),
    // A divisor vanished to the working order; a deeper order may resolve it.
    NeedsMoreTerms,
}

fn eval(e: &Expr, order: usize) -> Result<Eval> {
    macro_rules! sub {
        ($e:expr) => {
            match eval($e, order)? {
                Eval::Done(s) => s,
                Eval::NeedsMoreTerms => return Ok(Eval::NeedsMoreTerms),
            }
        };
    }
    let s = match e {
        Expr::Num(n) => Series::constant(Rat::from_integer(n.clone()), order),
        Expr::X => Series::x(order),
        Expr::Neg(a) => -&sub!(a),
        Expr::Add(a, b) => &sub!(a) + &sub!(b),
        Expr::Sub(a, b) => &sub!(a) - &sub!(b),
        Expr::Mul(a, b) => &sub!(a) * &sub!(b),
        Expr::Div(a, b) => {
            let num = sub!(a);
            let den = sub!(b);
            if den.is_zero() {
                return Ok(Eval::NeedsMoreTerms);
            }
            num.div(&den)?
        }
        Expr::Pow(a, k) => sub!(a).pow(*k),
        Expr::Sqrt(a) => sub!(a).sqrt()?,
    };
    Ok(Eval::Done(s))
}

/// Parses `text` and evaluates it to order `order`.
///
/// Division by a series with zero constant term is allowed exactly when the
/// numerator vanishes to the same depth, as in `(1-sqrt(1-4*x))/(2*x)`.
pub fn parse(text: &str, order: usize) -> Result<Series> {
    let expr = parse_expr(text)?;
    // Each division by x^v costs v orders; widen the working order until the
    // result reaches the requested one.
    let limit = 2 * order + 64;
    let mut working = order;
    loop {
        match eval(&expr, working)? {
            Eval::Done(s) if s.order() >= order => return Ok(s.truncate(order)),
            Eval::Done(s) => working += order - s.order(),
            Eval::NeedsMoreTerms => working = working * 2 + 1,
        }
        if working > limit {
            return Err(Error::NotInvertible);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{frac, int};
    use crate::series::catalog::{catalog, CatalogEntry};

    #[test]
    fn worked_examples() {
        assert_eq!(parse("1/(1-x)", 4).unwrap(), Series::from_ints(&[1; 5]));
        assert_eq!(parse("x", 2).unwrap(), Series::from_ints(&[0, 1, 0]));
        assert_eq!(
            parse("(1-sqrt(1-4*x))/(2*x)", 5).unwrap(),
            Series::from_ints(&[1, 1, 2, 5, 14, 42])
        );
    }

    #[test]
    fn precedence_and_unary_minus() {
        assert_eq!(
            parse("1+2*x^2", 3).unwrap(),
            Series::from_ints(&[1, 0, 2, 0])
        );
        assert_eq!(parse("-x^2", 2).unwrap(), Series::from_ints(&[0, 0, -1]));
        assert_eq!(
            parse("(1+x)^2", 3).unwrap(),
            Series::from_ints(&[1, 2, 1, 0])
        );
        assert_eq!(
            parse("x^2^2", 4).unwrap(),
            Series::from_ints(&[0, 0, 0, 0, 1])
        );
        assert_eq!(parse("1 - x - x", 1).unwrap(), Series::from_ints(&[1, -2]));
        assert_eq!(parse("3/8", 0).unwrap().coeffs(), &[frac(3, 8)]);
        assert_eq!(parse("1/2*x", 1).unwrap().coeffs(), &[int(0), frac(1, 2)]);
    }

    #[test]
    fn higher_x_powers_in_divisor() {
        // (x^2 + x^3) / x^2 = 1 + x
        assert_eq!(
            parse("(x^2+x^3)/x^2", 3).unwrap(),
            Series::from_ints(&[1, 1, 0, 0])
        );
        // divisor that vanishes at the requested order
        assert_eq!(parse("x^5/x^5", 1).unwrap(), Series::from_ints(&[1, 0]));
    }

    #[test]
    fn matches_catalog() {
        assert_eq!(
            parse("1/sqrt(1-x)", 20).unwrap(),
            catalog(&CatalogEntry::Half, 20).unwrap()
        );
        assert_eq!(
            parse("1/sqrt(1-4*x)", 10).unwrap(),
            catalog(&CatalogEntry::CentralBinomial, 10).unwrap()
        );
    }

    #[test]
    fn errors_have_positions() {
        assert_eq!(
            parse("1 + ", 3).unwrap_err(),
            Error::Syntax {
                pos: 4,
                msg: "unexpected end of input".into()
            }
        );
        assert!(matches!(
            parse("1 $ x", 3),
            Err(Error::Syntax { pos: 2, .. })
        ));
        assert!(matches!(
            parse("(1-x", 3),
            Err(Error::Syntax { pos: 4, .. })
        ));
        assert!(matches!(parse("x^y", 3), Err(Error::Syntax { pos: 2, .. })));
        assert!(matches!(parse("1 x", 3), Err(Error::Syntax { pos: 2, .. })));
        assert!(matches!(parse("sqrt 2", 3), Err(Error::Syntax { .. })));
        assert!(matches!(parse("", 3), Err(Error::Syntax { pos: 0, .. })));
    }

    #[test]
    fn semantic_errors() {
        assert_eq!(parse("1/x", 3), Err(Error::NonZeroLowTerms { power: 1 }));
        assert_eq!(parse("1/0", 3), Err(Error::NotInvertible));
        assert_eq!(parse("1/(x-x)", 3), Err(Error::NotInvertible));
        assert!(matches!(parse("sqrt(2-x)", 3), Err(Error::NotSquare(_))));
    }
}
