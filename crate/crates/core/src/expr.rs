//! A small expression language for rational functions of named variables.
//!
//! ```text
//! expr     := term (('+' | '-') term)*
//! term     := factor (('*' | '/') factor)*
//! factor   := '-' factor | atom ['^' exponent]
//! atom     := rational | ident | '(' expr ')'
//! exponent := ['-'] rational | '(' ['-'] rational ')'
//! rational := integer ['/' positive-integer]
//! ```
//!
//! Implicit multiplication is rejected and `a^b^c` is a syntax error.
//! An integer literal directly to the right of `/` is never fused with a
//! following `/int`, so `x/3/4` is `(x/3)/4`. Inside an exponent the
//! fusion always applies: `x^1/2` is `x^(1/2)`.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::series::{render_rational, Rational, Series, SeriesError, SeriesRing, VariableSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Rational(Rational),
    Var(String),
    Neg(Box<Expr>),
    Sum(Box<Expr>, Box<Expr>),
    Difference(Box<Expr>, Box<Expr>),
    Product(Box<Expr>, Box<Expr>),
    Quotient(Box<Expr>, Box<Expr>),
    Power(Box<Expr>, Rational),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown identifier {name:?} at position {position}")]
    UnknownIdentifier { name: String, position: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("cannot divide by {subexpr}: its constant term is zero")]
    ZeroConstantDenominator { subexpr: String },
    #[error("cannot evaluate {subexpr}: {source}")]
    Power { subexpr: String, source: SeriesError },
    #[error(transparent)]
    Series(#[from] SeriesError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

impl Token {
    fn describe(&self) -> String {
        match self {
            Token::Int(n) => format!("integer {n}"),
            Token::Ident(s) => format!("identifier {s:?}"),
            Token::Plus => "'+'".into(),
            Token::Minus => "'-'".into(),
            Token::Star => "'*'".into(),
            Token::Slash => "'/'".into(),
            Token::Caret => "'^'".into(),
            Token::LParen => "'('".into(),
            Token::RParen => "')'".into(),
            Token::End => "end of input".into(),
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<(Token, usize)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            '+' => Token::Plus,
            '-' => Token::Minus,
            '*' => Token::Star,
            '/' => Token::Slash,
            '^' => Token::Caret,
            '(' => Token::LParen,
            ')' => Token::RParen,
            d if d.is_ascii_digit() => {
                while i + 1 < chars.len() && chars[i + 1].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..=i].iter().collect();
                Token::Int(digits.parse().expect("ascii digits"))
            }
            a if a.is_ascii_alphabetic() || a == '_' => {
                while i + 1 < chars.len() && (chars[i + 1].is_ascii_alphanumeric() || chars[i + 1] == '_') {
                    i += 1;
                }
                Token::Ident(chars[start..=i].iter().collect())
            }
            other => {
                return Err(ParseError::Syntax {
                    position: start,
                    message: format!("unexpected character {other:?}"),
                })
            }
        };
        out.push((tok, start));
        i += 1;
    }
    out.push((Token::End, chars.len()));
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<(Token, usize)>,
    pos: usize,
    vars: &'a VariableSet,
}

impl Parser<'_> {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos].0
    }

    fn peek_at(&self, offset: usize) -> &Token {
        let i = (self.pos + offset).min(self.tokens.len() - 1);
        &self.tokens[i].0
    }

    fn position(&self) -> usize {
        self.tokens[self.pos].1
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.pos].0.clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            position: self.position(),
            message: message.into(),
        })
    }

    fn expect(&mut self, want: Token) -> Result<(), ParseError> {
        if *self.peek() == want {
            self.bump();
            Ok(())
        } else {
            self.error(format!(
                "expected {}, found {}",
                want.describe(),
                self.peek().describe()
            ))
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Token::Plus => {
                    self.bump();
                    lhs = Expr::Sum(Box::new(lhs), Box::new(self.term()?));
                }
                Token::Minus => {
                    self.bump();
                    lhs = Expr::Difference(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.factor(true)?;
        loop {
            match self.peek() {
                Token::Star => {
                    self.bump();
                    lhs = Expr::Product(Box::new(lhs), Box::new(self.factor(true)?));
                }
                Token::Slash => {
                    self.bump();
                    lhs = Expr::Quotient(Box::new(lhs), Box::new(self.factor(false)?));
                }
                Token::Ident(_) | Token::Int(_) | Token::LParen => {
                    return self.error("implicit multiplication is not allowed; use '*'")
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn factor(&mut self, fuse_literal: bool) -> Result<Expr, ParseError> {
        if *self.peek() == Token::Minus {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.factor(fuse_literal)?)));
        }
        let base = self.atom(fuse_literal)?;
        if *self.peek() != Token::Caret {
            return Ok(base);
        }
        self.bump();
        let exponent = self.exponent()?;
        if *self.peek() == Token::Caret {
            return self.error("'^' is not associative; parenthesize the base");
        }
        Ok(Expr::Power(Box::new(base), exponent))
    }

    fn exponent(&mut self) -> Result<Rational, ParseError> {
        let parenthesized = *self.peek() == Token::LParen;
        if parenthesized {
            self.bump();
        }
        let negative = *self.peek() == Token::Minus;
        if negative {
            self.bump();
        }
        let value = match self.peek().clone() {
            Token::Int(n) => {
                self.bump();
                self.literal_tail(n, true)?
            }
            other => {
                return self.error(format!(
                    "exponent must be a rational literal, found {}",
                    other.describe()
                ))
            }
        };
        if parenthesized {
            self.expect(Token::RParen)?;
        }
        Ok(if negative { -value } else { value })
    }

    /// Completes `int ['/' positive-int]` after the integer was consumed.
    fn literal_tail(&mut self, numer: BigInt, fuse: bool) -> Result<Rational, ParseError> {
        if fuse && *self.peek() == Token::Slash {
            if let Token::Int(d) = self.peek_at(1).clone() {
                self.bump();
                if d.is_zero() {
                    return self.error("denominator of a rational literal must be positive");
                }
                self.bump();
                return Ok(Rational::new(numer, d));
            }
        }
        Ok(Rational::from_integer(numer))
    }

    fn atom(&mut self, fuse_literal: bool) -> Result<Expr, ParseError> {
        let position = self.position();
        match self.peek().clone() {
            Token::Int(n) => {
                self.bump();
                Ok(Expr::Rational(self.literal_tail(n, fuse_literal)?))
            }
            Token::Ident(name) => {
                if self.vars.index_of(&name).is_err() {
                    return Err(ParseError::UnknownIdentifier { name, position });
                }
                self.bump();
                Ok(Expr::Var(name))
            }
            Token::LParen => {
                self.bump();
                let inner = self.expr()?;
                self.expect(Token::RParen)?;
                Ok(inner)
            }
            other => self.error(format!(
                "expected a number, variable or '(', found {}",
                other.describe()
            )),
        }
    }
}

/// Parses `text` against the declared variables.
pub fn parse(text: &str, vars: &VariableSet) -> Result<Expr, ParseError> {
    let tokens = tokenize(text)?;
    let mut parser = Parser { tokens, pos: 0, vars };
    if *parser.peek() == Token::End {
        return parser.error("empty expression");
    }
    let e = parser.expr()?;
    if *parser.peek() != Token::End {
        return parser.error(format!("unexpected {}", parser.peek().describe()));
    }
    Ok(e)
}

impl Expr {
    fn is_additive(&self) -> bool {
        matches!(self, Expr::Sum(..) | Expr::Difference(..))
    }

    fn is_multiplicative(&self) -> bool {
        matches!(self, Expr::Product(..) | Expr::Quotient(..))
    }

    /// Evaluates to a truncated series in `ring`.
    pub fn eval(&self, ring: &Arc<SeriesRing>) -> Result<Series, EvalError> {
        Ok(match self {
            Expr::Rational(r) => Series::constant(ring, r.clone()),
            Expr::Var(name) => Series::variable(ring, name)?,
            Expr::Neg(e) => e.eval(ring)?.negate(),
            Expr::Sum(a, b) => a.eval(ring)?.add(&b.eval(ring)?)?,
            Expr::Difference(a, b) => a.eval(ring)?.sub(&b.eval(ring)?)?,
            Expr::Product(a, b) => a.eval(ring)?.mul(&b.eval(ring)?)?,
            Expr::Quotient(a, b) => {
                let denom = b
                    .eval(ring)?
                    .inverse()
                    .map_err(|_| EvalError::ZeroConstantDenominator { subexpr: b.to_string() })?;
                a.eval(ring)?.mul(&denom)?
            }
            Expr::Power(base, r) => base.eval(ring)?.pow(r).map_err(|source| EvalError::Power {
                subexpr: self.to_string(),
                source,
            })?,
        })
    }
}

fn render_exponent(r: &Rational) -> String {
    if r.is_integer() && !r.is_negative() {
        render_rational(r)
    } else {
        format!("({})", render_rational(r))
    }
}

impl Expr {
    /// Whether the rendering ends in an integer that a following `/int`
    /// would absorb, either as a rational literal or into an exponent.
    /// `fuse` is false for the operand right of `/`.
    fn absorbs_slash(&self, fuse: bool) -> bool {
        match self {
            Expr::Rational(r) => fuse && r.is_integer() && !r.is_negative(),
            Expr::Var(_) => false,
            Expr::Neg(e) => !(e.is_additive() || e.is_multiplicative()) && e.absorbs_slash(fuse),
            Expr::Sum(_, b) | Expr::Difference(_, b) => !b.is_additive() && b.absorbs_slash(true),
            Expr::Product(_, b) => !(b.is_additive() || b.is_multiplicative()) && b.absorbs_slash(true),
            Expr::Quotient(_, b) => !self.wraps_divisor() && b.absorbs_slash(false),
            Expr::Power(_, r) => r.is_integer() && !r.is_negative(),
        }
    }

    fn wraps_divisor(&self) -> bool {
        let Expr::Quotient(a, b) = self else { return false };
        let leading_digit = b.to_string().starts_with(|c: char| c.is_ascii_digit());
        let fraction = matches!(&**b, Expr::Rational(r) if !r.is_integer());
        b.is_additive()
            || b.is_multiplicative()
            || fraction
            || (leading_digit && !a.is_additive() && a.absorbs_slash(true))
    }
}

impl fmt::Display for Expr {
    /// Canonical rendering; parsing it back yields the same tree.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |e: &Expr, needed: bool| if needed { format!("({e})") } else { e.to_string() };
        match self {
            Expr::Rational(r) if r.is_negative() => write!(f, "({})", render_rational(r)),
            Expr::Rational(r) => write!(f, "{}", render_rational(r)),
            Expr::Var(name) => write!(f, "{name}"),
            Expr::Neg(e) => {
                let fraction = matches!(&**e, Expr::Rational(r) if !r.is_integer());
                write!(f, "-{}", wrap(e, e.is_additive() || e.is_multiplicative() || fraction))
            }
            Expr::Sum(a, b) => write!(f, "{} + {}", a, wrap(b, b.is_additive())),
            Expr::Difference(a, b) => write!(f, "{} - {}", a, wrap(b, b.is_additive())),
            Expr::Product(a, b) => write!(
                f,
                "{}*{}",
                wrap(a, a.is_additive()),
                wrap(b, b.is_additive() || b.is_multiplicative())
            ),
            Expr::Quotient(a, b) => write!(f, "{}/{}", wrap(a, a.is_additive()), wrap(b, self.wraps_divisor())),
            Expr::Power(base, r) => {
                let plain = match &**base {
                    Expr::Var(_) => true,
                    Expr::Rational(q) => q.is_integer() && !q.is_negative(),
                    _ => false,
                };
                write!(f, "{}^{}", wrap(base, !plain), render_exponent(r))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{int, rat};

    fn vars() -> VariableSet {
        VariableSet::new(["x", "q", "y"]).unwrap()
    }

    fn ring(cap: u32) -> Arc<SeriesRing> {
        SeriesRing::of(&[("x", cap), ("q", cap), ("y", cap)]).unwrap()
    }

    #[test]
    fn parses_examples() {
        let e = parse("(1-x)^2*(1-q)^-1", &vars()).unwrap();
        assert!(matches!(e, Expr::Product(..)));
        let half = parse("(1-x)^(1/2)", &vars()).unwrap();
        assert_eq!(
            half,
            Expr::Power(
                Box::new(Expr::Difference(
                    Box::new(Expr::Rational(int(1))),
                    Box::new(Expr::Var("x".into()))
                )),
                rat(1, 2)
            )
        );
        assert_eq!(parse("x^1/2", &vars()).unwrap(), parse("x^(1/2)", &vars()).unwrap());
        assert_eq!(parse("2/3", &vars()).unwrap(), Expr::Rational(rat(2, 3)));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        assert_eq!(
            parse("1-", &vars()),
            Err(ParseError::Syntax {
                position: 2,
                message: "expected a number, variable or '(', found end of input".into()
            })
        );
        assert!(matches!(
            parse("", &vars()),
            Err(ParseError::Syntax { position: 0, .. })
        ));
        assert!(matches!(
            parse("2x", &vars()),
            Err(ParseError::Syntax { position: 1, .. })
        ));
        assert!(matches!(
            parse("x^2^3", &vars()),
            Err(ParseError::Syntax { position: 3, .. })
        ));
        assert!(matches!(
            parse("x^y", &vars()),
            Err(ParseError::Syntax { position: 2, .. })
        ));
        assert!(matches!(
            parse("(x", &vars()),
            Err(ParseError::Syntax { position: 2, .. })
        ));
        assert!(matches!(
            parse("x $ 1", &vars()),
            Err(ParseError::Syntax { position: 2, .. })
        ));
        assert!(matches!(parse("1/0", &vars()), Err(ParseError::Syntax { .. })));
        assert_eq!(
            parse("1 + z", &vars()),
            Err(ParseError::UnknownIdentifier {
                name: "z".into(),
                position: 4
            })
        );
    }

    #[test]
    fn precedence_and_associativity() {
        let r = ring(6);
        let eval = |s: &str| parse(s, &vars()).unwrap().eval(&r).unwrap();
        assert_eq!(eval("-x^2"), eval("0 - x*x"));
        assert_eq!(eval("x/3/4"), eval("x/12"));
        assert_eq!(eval("1 - x - q"), eval("1 - (x + q)"));
        assert_eq!(eval("2*x^3"), eval("x*x*x*2"));
    }

    #[test]
    fn evaluation_examples() {
        let r = SeriesRing::of(&[("x", 5)]).unwrap();
        let xvars = VariableSet::new(["x"]).unwrap();
        let s = parse("x/(1-x)", &xvars).unwrap().eval(&r).unwrap();
        assert_eq!(s.to_string(), "x + x^2 + x^3 + x^4 + x^5");
        let m = parse("x*(2-x)/(1-x)^2", &xvars).unwrap().eval(&r).unwrap();
        assert_eq!(m.to_string(), "2*x + 3*x^2 + 4*x^3 + 5*x^4 + 6*x^5");
        assert_eq!(
            parse("1/x", &xvars).unwrap().eval(&r),
            Err(EvalError::ZeroConstantDenominator { subexpr: "x".into() })
        );
        assert!(matches!(
            parse("(2-x)^(1/2)", &xvars).unwrap().eval(&r),
            Err(EvalError::Power { .. })
        ));
    }

    #[test]
    fn rendering_round_trips() {
        for s in [
            "(1-x)^2*(1-q)^-1",
            "(1)/2",
            "x/3/4",
            "-(x*q)",
            "--x",
            "1/2*x - (q - y)",
            "(x/(1 - q))^(-1/2)",
            "(2/3)^2 + 3^2",
            "x*(q*y)",
            "x/(q/y)",
            "x/-(1/2)",
            "0/(0^0)/(0)",
            "x*3/(2^2)",
            "-(1/2/(1/2))",
            "x^2/(3)",
        ] {
            let e = parse(s, &vars()).unwrap();
            assert_eq!(parse(&e.to_string(), &vars()).unwrap(), e, "{s} -> {e}");
        }
    }
}
