//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expr     := "-"? term (("+" | "-") term)*
//! term     := factor ("*" factor)*
//! factor   := base ("^" uint)?
//! base     := rational | variable | "(" expr ")"
//! rational := int ("/" uint)?
//! variable := ("x" | "s" | "σ") uint
//! ```
//!
//! Whitespace is ignored. Multiplication must be written explicitly.
//! Error offsets count characters (not bytes) from the start of the source.

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::decompose::SigmaPolynomial;
use crate::poly::{Polynomial, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExprSource {
    pub text: String,
    /// Ambient variable count; inferred as the highest index used (at least
    /// 1) when absent.
    pub ambient_n: Option<usize>,
}

impl ExprSource {
    pub fn new(text: impl Into<String>) -> Self {
        ExprSource {
            text: text.into(),
            ambient_n: None,
        }
    }

    pub fn with_ambient(text: impl Into<String>, n: usize) -> Self {
        ExprSource {
            text: text.into(),
            ambient_n: Some(n),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnexpectedChar(char),
    UnexpectedEnd,
    /// Found something other than what the grammar allows here.
    Expected(&'static str),
    ExponentNegative,
    ExponentTooLarge,
    VariableIndexZero,
    IndexExceedsAmbient {
        index: usize,
        ambient: usize,
    },
    MixedVariableKinds,
    /// An `x` variable where only `s` is allowed, or vice versa.
    WrongVariableKind {
        expected: char,
    },
    ZeroDenominator,
    ZeroAmbient,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{} at offset {offset}", describe(.kind))]
pub struct ParseError {
    pub kind: ParseErrorKind,
    /// 0-based character offset into the source.
    pub offset: usize,
}

fn describe(kind: &ParseErrorKind) -> String {
    match kind {
        ParseErrorKind::UnexpectedChar(c) => format!("unexpected character {c:?}"),
        ParseErrorKind::UnexpectedEnd => "unexpected end of input".into(),
        ParseErrorKind::Expected(what) => format!("expected {what}"),
        ParseErrorKind::ExponentNegative => "exponents must be nonnegative integers".into(),
        ParseErrorKind::ExponentTooLarge => "exponent too large".into(),
        ParseErrorKind::VariableIndexZero => "variable indices start at 1".into(),
        ParseErrorKind::IndexExceedsAmbient { index, ambient } => {
            format!("variable index {index} exceeds the declared {ambient} variables")
        }
        ParseErrorKind::MixedVariableKinds => "x and s variables cannot be mixed".into(),
        ParseErrorKind::WrongVariableKind { expected } => {
            format!("only {expected} variables are allowed here")
        }
        ParseErrorKind::ZeroDenominator => "division by zero".into(),
        ParseErrorKind::ZeroAmbient => "ambient variable count must be positive".into(),
    }
}

impl ParseError {
    pub fn code(&self) -> &'static str {
        match self.kind {
            ParseErrorKind::UnexpectedChar(_)
            | ParseErrorKind::UnexpectedEnd
            | ParseErrorKind::Expected(_) => "parse::syntax",
            ParseErrorKind::ExponentNegative => "parse::exponent_negative",
            ParseErrorKind::ExponentTooLarge => "parse::exponent_too_large",
            ParseErrorKind::VariableIndexZero => "parse::variable_index_zero",
            ParseErrorKind::IndexExceedsAmbient { .. } => "parse::index_exceeds_ambient",
            ParseErrorKind::MixedVariableKinds => "parse::mixed_variable_kinds",
            ParseErrorKind::WrongVariableKind { .. } => "parse::wrong_variable_kind",
            ParseErrorKind::ZeroDenominator => "parse::zero_denominator",
            ParseErrorKind::ZeroAmbient => "parse::zero_ambient",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum VarKind {
    X,
    S,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Var(VarKind, usize),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
    End,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    offset: usize,
}

fn lex(text: &str) -> Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let digits = |start: usize| {
        let mut j = start;
        while j < chars.len() && chars[j].is_ascii_digit() {
            j += 1;
        }
        j
    };
    while i < chars.len() {
        let c = chars[i];
        let offset = i;
        let simple = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '^' => Some(Tok::Caret),
            '/' => Some(Tok::Slash),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(tok) = simple {
            out.push(Token { tok, offset });
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let end = digits(i);
            let s: String = chars[i..end].iter().collect();
            out.push(Token {
                tok: Tok::Int(s.parse().expect("digits")),
                offset,
            });
            i = end;
        } else if matches!(c, 'x' | 's' | 'σ') {
            let end = digits(i + 1);
            if end == i + 1 {
                return Err(ParseError {
                    kind: ParseErrorKind::Expected("variable index"),
                    offset: (i + 1).min(chars.len() - 1),
                });
            }
            let s: String = chars[i + 1..end].iter().collect();
            let index: usize = s.parse().map_err(|_| ParseError {
                kind: ParseErrorKind::Expected("smaller variable index"),
                offset,
            })?;
            if index == 0 {
                return Err(ParseError {
                    kind: ParseErrorKind::VariableIndexZero,
                    offset,
                });
            }
            let kind = if c == 'x' { VarKind::X } else { VarKind::S };
            out.push(Token {
                tok: Tok::Var(kind, index),
                offset,
            });
            i = end;
        } else {
            return Err(ParseError {
                kind: ParseErrorKind::UnexpectedChar(c),
                offset,
            });
        }
    }
    // End points at the last character so every offset lies inside the source.
    out.push(Token {
        tok: Tok::End,
        offset: chars.len().saturating_sub(1),
    });
    Ok(out)
}

#[derive(Debug, Clone)]
enum Expr {
    Const(Rational),
    Var {
        kind: VarKind,
        index: usize,
        offset: usize,
    },
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn unexpected(&self, what: &'static str) -> ParseError {
        let t = self.peek();
        let kind = match t.tok {
            Tok::End => ParseErrorKind::UnexpectedEnd,
            _ => ParseErrorKind::Expected(what),
        };
        ParseError {
            kind,
            offset: t.offset,
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = if self.peek().tok == Tok::Minus {
            self.bump();
            Expr::Neg(Box::new(self.term()?))
        } else {
            self.term()?
        };
        loop {
            match self.peek().tok {
                Tok::Plus => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.factor()?;
        while self.peek().tok == Tok::Star {
            self.bump();
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let base = self.base()?;
        if self.peek().tok != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let t = self.bump();
        match t.tok {
            Tok::Int(v) => {
                let e = u32::try_from(v).map_err(|_| ParseError {
                    kind: ParseErrorKind::ExponentTooLarge,
                    offset: t.offset,
                })?;
                Ok(Expr::Pow(Box::new(base), e))
            }
            Tok::Minus => Err(ParseError {
                kind: ParseErrorKind::ExponentNegative,
                offset: t.offset,
            }),
            Tok::End => Err(ParseError {
                kind: ParseErrorKind::UnexpectedEnd,
                offset: t.offset,
            }),
            _ => Err(ParseError {
                kind: ParseErrorKind::Expected("nonnegative integer exponent"),
                offset: t.offset,
            }),
        }
    }

    fn base(&mut self) -> Result<Expr, ParseError> {
        match self.peek().tok.clone() {
            Tok::Int(num) => {
                self.bump();
                if self.peek().tok != Tok::Slash {
                    return Ok(Expr::Const(Rational::from_integer(num)));
                }
                self.bump();
                let t = self.bump();
                match t.tok {
                    Tok::Int(den) if den.is_zero() => Err(ParseError {
                        kind: ParseErrorKind::ZeroDenominator,
                        offset: t.offset,
                    }),
                    Tok::Int(den) => Ok(Expr::Const(Rational::new(num, den))),
                    Tok::End => Err(ParseError {
                        kind: ParseErrorKind::UnexpectedEnd,
                        offset: t.offset,
                    }),
                    _ => Err(ParseError {
                        kind: ParseErrorKind::Expected("unsigned denominator"),
                        offset: t.offset,
                    }),
                }
            }
            Tok::Var(kind, index) => {
                let offset = self.bump().offset;
                Ok(Expr::Var {
                    kind,
                    index,
                    offset,
                })
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                if self.peek().tok != Tok::RParen {
                    return Err(self.unexpected("')'"));
                }
                self.bump();
                Ok(inner)
            }
            _ => Err(self.unexpected("number, variable or '('")),
        }
    }
}

fn visit_vars(e: &Expr, f: &mut impl FnMut(VarKind, usize, usize)) {
    match e {
        Expr::Const(_) => {}
        Expr::Var {
            kind,
            index,
            offset,
        } => f(*kind, *index, *offset),
        Expr::Neg(a) | Expr::Pow(a, _) => visit_vars(a, f),
        Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) => {
            visit_vars(a, f);
            visit_vars(b, f);
        }
    }
}

fn build(e: &Expr, n: usize) -> Polynomial {
    match e {
        Expr::Const(c) => Polynomial::constant(c.clone(), n),
        Expr::Var { index, .. } => Polynomial::variable(index - 1, n).expect("index checked"),
        Expr::Neg(a) => -build(a, n),
        Expr::Add(a, b) => build(a, n) + build(b, n),
        Expr::Sub(a, b) => build(a, n) - build(b, n),
        Expr::Mul(a, b) => build(a, n) * build(b, n),
        Expr::Pow(a, k) => build(a, n).pow(*k),
    }
}

fn parse_with_kind(src: &ExprSource, want: VarKind) -> Result<Polynomial, ParseError> {
    let tokens = lex(&src.text)?;
    let mut parser = Parser { tokens, pos: 0 };
    let ast = parser.expr()?;
    if parser.peek().tok != Tok::End {
        let t = parser.peek();
        let kind = match t.tok {
            Tok::RParen => ParseErrorKind::UnexpectedChar(')'),
            _ => ParseErrorKind::Expected("operator or end of input"),
        };
        return Err(ParseError {
            kind,
            offset: t.offset,
        });
    }

    let mut first: [Option<usize>; 2] = [None, None];
    let mut max_index = 0;
    let mut too_big = None;
    visit_vars(&ast, &mut |kind, index, offset| {
        let slot = &mut first[kind as usize];
        if slot.is_none() {
            *slot = Some(offset);
        }
        max_index = max_index.max(index);
        if let Some(n) = src.ambient_n {
            if index > n && too_big.is_none() {
                too_big = Some(ParseError {
                    kind: ParseErrorKind::IndexExceedsAmbient { index, ambient: n },
                    offset,
                });
            }
        }
    });
    if let (Some(a), Some(b)) = (first[0], first[1]) {
        return Err(ParseError {
            kind: ParseErrorKind::MixedVariableKinds,
            offset: a.max(b),
        });
    }
    let other = match want {
        VarKind::X => first[VarKind::S as usize],
        VarKind::S => first[VarKind::X as usize],
    };
    if let Some(offset) = other {
        let expected = if want == VarKind::X { 'x' } else { 's' };
        return Err(ParseError {
            kind: ParseErrorKind::WrongVariableKind { expected },
            offset,
        });
    }
    if let Some(err) = too_big {
        return Err(err);
    }
    let n = match src.ambient_n {
        Some(0) => {
            return Err(ParseError {
                kind: ParseErrorKind::ZeroAmbient,
                offset: 0,
            })
        }
        Some(n) => n,
        None => max_index.max(1),
    };
    Ok(build(&ast, n))
}

/// Parses an expression in `x1, x2, ...`.
pub fn parse_poly(src: &ExprSource) -> Result<Polynomial, ParseError> {
    parse_with_kind(src, VarKind::X)
}

/// Parses an expression in `s1, s2, ...` (or `σ1, σ2, ...`).
pub fn parse_sigma(src: &ExprSource) -> Result<SigmaPolynomial, ParseError> {
    parse_with_kind(src, VarKind::S).map(SigmaPolynomial::from_polynomial)
}

/// Parses a rational literal `p` or `p/q` with an optional leading sign.
pub fn parse_rational(text: &str) -> Result<Rational, ParseError> {
    let trimmed = text.trim();
    let (neg, body) = match trimmed.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, trimmed),
    };
    let tokens = lex(body)?;
    let mut p = Parser { tokens, pos: 0 };
    let value = match p.base()? {
        Expr::Const(c) => c,
        _ => {
            return Err(ParseError {
                kind: ParseErrorKind::Expected("rational number"),
                offset: 0,
            })
        }
    };
    if p.peek().tok != Tok::End {
        return Err(ParseError {
            kind: ParseErrorKind::Expected("end of number"),
            offset: p.peek().offset,
        });
    }
    Ok(if neg { -value } else { value })
}

impl std::str::FromStr for Polynomial {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_poly(&ExprSource::new(s))
    }
}

impl std::str::FromStr for SigmaPolynomial {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_sigma(&ExprSource::new(s))
    }
}
