//! Recursive-descent parser for polynomial expressions in `x` and `y`.
//!
//! Grammar, tightest first: `^` (integer exponents on atoms), unary `-`,
//! `*`, then `+`/`-`. Rational literals are `p` or `p/q` with no spaces
//! around the slash; there is no division operator. Errors carry the byte
//! offset of the offending token.

use hilbcurve::multipoly::{xy_vars, SparseMultiPoly};
use hilbcurve::rational::Rational;
use hilbcurve::scalar::Scalar;
use hilbcurve::unipoly::UniPoly;
use num_bigint::BigInt;
use std::fmt;
use std::sync::Arc;

const MAX_EXPONENT: u32 = 4096;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "syntax error at byte {}: {}", self.offset, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variable {
    X,
    Y,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolyExpr {
    Num(Rational),
    Var(Variable),
    Add(Box<PolyExpr>, Box<PolyExpr>),
    Sub(Box<PolyExpr>, Box<PolyExpr>),
    Neg(Box<PolyExpr>),
    Mul(Box<PolyExpr>, Box<PolyExpr>),
    Pow(Box<PolyExpr>, u32),
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(Rational),
    Var(Variable),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    End,
}

struct Lexer {
    tokens: Vec<(Tok, usize)>,
    pos: usize,
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = text.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                tokens.push((Tok::Plus, i));
                i += 1;
            }
            '-' | '\u{2212}' => {
                tokens.push((Tok::Minus, i));
                i += c.len_utf8();
            }
            '*' => {
                tokens.push((Tok::Star, i));
                i += 1;
            }
            '^' => {
                tokens.push((Tok::Caret, i));
                i += 1;
            }
            '(' => {
                tokens.push((Tok::LParen, i));
                i += 1;
            }
            ')' => {
                tokens.push((Tok::RParen, i));
                i += 1;
            }
            'x' => {
                tokens.push((Tok::Var(Variable::X), i));
                i += 1;
            }
            'y' => {
                tokens.push((Tok::Var(Variable::Y), i));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let numer: BigInt = text[start..i].parse().unwrap();
                // a slash directly after an integer continues a rational literal
                if i < bytes.len() && bytes[i] == b'/' {
                    let slash = i;
                    i += 1;
                    let dstart = i;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    if dstart == i {
                        return Err(ParseError {
                            offset: slash,
                            message: "expected a denominator after '/'".into(),
                        });
                    }
                    let denom: BigInt = text[dstart..i].parse().unwrap();
                    if denom == BigInt::from(0) {
                        return Err(ParseError {
                            offset: dstart,
                            message: "denominator must be nonzero".into(),
                        });
                    }
                    tokens.push((Tok::Num(Rational::new(numer, denom)), start));
                } else {
                    tokens.push((Tok::Num(Rational::from_integer(numer)), start));
                }
            }
            _ => {
                return Err(ParseError {
                    offset: i,
                    message: format!("unexpected character '{c}'"),
                })
            }
        }
    }
    tokens.push((Tok::End, bytes.len()));
    Ok(tokens)
}

impl Lexer {
    fn peek(&self) -> &(Tok, usize) {
        &self.tokens[self.pos]
    }

    fn next(&mut self) -> (Tok, usize) {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }
}

pub fn parse_poly(text: &str) -> Result<PolyExpr, ParseError> {
    let mut lx = Lexer {
        tokens: lex(text)?,
        pos: 0,
    };
    let expr = parse_expr(&mut lx)?;
    let (tok, offset) = lx.peek().clone();
    if tok != Tok::End {
        return Err(ParseError {
            offset,
            message: "unexpected trailing input".into(),
        });
    }
    Ok(expr)
}

fn parse_expr(lx: &mut Lexer) -> Result<PolyExpr, ParseError> {
    let mut acc = parse_term(lx)?;
    loop {
        match lx.peek().0 {
            Tok::Plus => {
                lx.next();
                let rhs = parse_term(lx)?;
                acc = PolyExpr::Add(Box::new(acc), Box::new(rhs));
            }
            Tok::Minus => {
                lx.next();
                let rhs = parse_term(lx)?;
                acc = PolyExpr::Sub(Box::new(acc), Box::new(rhs));
            }
            _ => return Ok(acc),
        }
    }
}

fn parse_term(lx: &mut Lexer) -> Result<PolyExpr, ParseError> {
    let mut acc = parse_unary(lx)?;
    while lx.peek().0 == Tok::Star {
        lx.next();
        let rhs = parse_unary(lx)?;
        acc = PolyExpr::Mul(Box::new(acc), Box::new(rhs));
    }
    Ok(acc)
}

fn parse_unary(lx: &mut Lexer) -> Result<PolyExpr, ParseError> {
    if lx.peek().0 == Tok::Minus {
        lx.next();
        let inner = parse_unary(lx)?;
        return Ok(PolyExpr::Neg(Box::new(inner)));
    }
    parse_power(lx)
}

fn parse_power(lx: &mut Lexer) -> Result<PolyExpr, ParseError> {
    let base = parse_atom(lx)?;
    if lx.peek().0 != Tok::Caret {
        return Ok(base);
    }
    lx.next();
    let exponent = parse_exponent(lx)?;
    let (tok, offset) = lx.peek().clone();
    if tok == Tok::Caret {
        return Err(ParseError {
            offset,
            message: "an exponent applies to a single atom; parenthesize the base".into(),
        });
    }
    Ok(PolyExpr::Pow(Box::new(base), exponent))
}

fn parse_exponent(lx: &mut Lexer) -> Result<u32, ParseError> {
    // an optionally parenthesized, optionally signed integer
    let (tok, offset) = lx.next();
    match tok {
        Tok::Num(r) => exponent_value(r, false, offset),
        Tok::Minus => {
            let (tok, off2) = lx.next();
            match tok {
                Tok::Num(r) => exponent_value(r, true, offset),
                _ => Err(ParseError {
                    offset: off2,
                    message: "expected an integer exponent".into(),
                }),
            }
        }
        Tok::LParen => {
            let value = parse_exponent(lx)?;
            let (tok, off2) = lx.next();
            if tok != Tok::RParen {
                return Err(ParseError {
                    offset: off2,
                    message: "expected ')'".into(),
                });
            }
            Ok(value)
        }
        _ => Err(ParseError {
            offset,
            message: "expected an integer exponent".into(),
        }),
    }
}

fn exponent_value(r: Rational, negated: bool, offset: usize) -> Result<u32, ParseError> {
    if negated {
        return Err(ParseError {
            offset,
            message: "negative exponent".into(),
        });
    }
    if !num_traits::One::is_one(r.denom()) {
        return Err(ParseError {
            offset,
            message: "exponent must be a nonnegative integer".into(),
        });
    }
    let v: u32 = r.numer().try_into().map_err(|_| ParseError {
        offset,
        message: "exponent too large".into(),
    })?;
    if v > MAX_EXPONENT {
        return Err(ParseError {
            offset,
            message: "exponent too large".into(),
        });
    }
    Ok(v)
}

fn parse_atom(lx: &mut Lexer) -> Result<PolyExpr, ParseError> {
    let (tok, offset) = lx.next();
    match tok {
        Tok::Num(r) => Ok(PolyExpr::Num(r)),
        Tok::Var(v) => Ok(PolyExpr::Var(v)),
        Tok::LParen => {
            let inner = parse_expr(lx)?;
            let (tok, off2) = lx.next();
            if tok != Tok::RParen {
                return Err(ParseError {
                    offset: off2,
                    message: "expected ')'".into(),
                });
            }
            Ok(inner)
        }
        Tok::End => Err(ParseError {
            offset,
            message: "unexpected end of input".into(),
        }),
        _ => Err(ParseError {
            offset,
            message: "expected a number, variable or '('".into(),
        }),
    }
}

impl PolyExpr {
    /// Lowers to a sparse polynomial over the variables {x, y}.
    pub fn to_multi(&self) -> SparseMultiPoly {
        let vars = xy_vars();
        self.lower(&vars)
    }

    fn lower(&self, vars: &Arc<hilbcurve::multipoly::VarSet>) -> SparseMultiPoly {
        match self {
            PolyExpr::Num(r) => SparseMultiPoly::constant(Arc::clone(vars), r.clone()),
            PolyExpr::Var(Variable::X) => SparseMultiPoly::var(Arc::clone(vars), "x").unwrap(),
            PolyExpr::Var(Variable::Y) => SparseMultiPoly::var(Arc::clone(vars), "y").unwrap(),
            PolyExpr::Add(a, b) => a.lower(vars).add(&b.lower(vars)),
            PolyExpr::Sub(a, b) => a.lower(vars).sub(&b.lower(vars)),
            PolyExpr::Neg(a) => a.lower(vars).neg(),
            PolyExpr::Mul(a, b) => a.lower(vars).mul(&b.lower(vars)),
            PolyExpr::Pow(a, e) => a.lower(vars).pow(*e),
        }
    }

    /// Lowers to a univariate polynomial in x; fails if y occurs.
    pub fn to_uni_x(&self) -> Result<UniPoly, ParseError> {
        let multi = self.to_multi();
        let ydeg = multi.degree_in("y").unwrap().unwrap_or(0);
        if ydeg > 0 {
            return Err(ParseError {
                offset: 0,
                message: "expected a polynomial in x only".into(),
            });
        }
        let xi = multi.vars().index_of("x").unwrap();
        let deg = multi.degree_in("x").unwrap().unwrap_or(0) as usize;
        let mut coeffs = vec![<Rational as Scalar>::zero(); deg + 1];
        for (exps, c) in multi.terms() {
            coeffs[exps[xi] as usize] = c.clone();
        }
        Ok(UniPoly::from_coeffs(coeffs))
    }

    fn precedence(&self) -> u8 {
        match self {
            PolyExpr::Add(..) | PolyExpr::Sub(..) => 1,
            PolyExpr::Mul(..) => 2,
            PolyExpr::Neg(..) => 3,
            PolyExpr::Pow(..) => 4,
            PolyExpr::Num(_) | PolyExpr::Var(_) => 5,
        }
    }

    fn fmt_child(&self, f: &mut fmt::Formatter<'_>, min_prec: u8) -> fmt::Result {
        if self.precedence() < min_prec {
            write!(f, "(")?;
            write!(f, "{self}")?;
            write!(f, ")")
        } else {
            write!(f, "{self}")
        }
    }
}

impl fmt::Display for PolyExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyExpr::Num(r) => write!(f, "{}", hilbcurve::rational::rational_to_string(r)),
            PolyExpr::Var(Variable::X) => write!(f, "x"),
            PolyExpr::Var(Variable::Y) => write!(f, "y"),
            PolyExpr::Add(a, b) => {
                a.fmt_child(f, 1)?;
                write!(f, " + ")?;
                b.fmt_child(f, 2)
            }
            PolyExpr::Sub(a, b) => {
                a.fmt_child(f, 1)?;
                write!(f, " - ")?;
                b.fmt_child(f, 2)
            }
            PolyExpr::Mul(a, b) => {
                a.fmt_child(f, 2)?;
                write!(f, "*")?;
                // right child must bind tighter to reparse left-associatively
                b.fmt_child(f, 3)
            }
            PolyExpr::Neg(a) => {
                write!(f, "-")?;
                a.fmt_child(f, 3)
            }
            PolyExpr::Pow(a, e) => {
                a.fmt_child(f, 5)?;
                write!(f, "^{e}")
            }
        }
    }
}
