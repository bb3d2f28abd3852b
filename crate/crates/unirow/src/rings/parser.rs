//! Text input: polynomial expressions and ring descriptions.
//!
//! Polynomial grammar: integer and `p/q` rational literals, declared
//! variables, `+ - *`, parentheses, and `^` with a non-negative integer
//! literal exponent. Multiplication is always explicit. Printing a polynomial
//! and parsing it back reproduces the same canonical form.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use super::context::RingContext;
use super::monomial::MonomialOrder;
use super::polynomial::Polynomial;
use super::Rational;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum TokKind {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

#[derive(Debug, Clone)]
struct Token {
    kind: TokKind,
    pos: usize,
}

fn err(position: usize, message: impl Into<String>) -> Error {
    Error::Parse { position, message: message.into() }
}

fn lex(src: &str) -> Result<Vec<Token>> {
    let bytes = src.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let pos = i;
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
            }
            '+' => {
                toks.push(Token { kind: TokKind::Plus, pos });
                i += 1;
            }
            '-' => {
                toks.push(Token { kind: TokKind::Minus, pos });
                i += 1;
            }
            '*' => {
                toks.push(Token { kind: TokKind::Star, pos });
                i += 1;
            }
            '/' => {
                toks.push(Token { kind: TokKind::Slash, pos });
                i += 1;
            }
            '^' => {
                toks.push(Token { kind: TokKind::Caret, pos });
                i += 1;
            }
            '(' => {
                toks.push(Token { kind: TokKind::LParen, pos });
                i += 1;
            }
            ')' => {
                toks.push(Token { kind: TokKind::RParen, pos });
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let digits = &src[start..i];
                let value = digits
                    .parse::<BigInt>()
                    .map_err(|_| err(start, "invalid integer literal"))?;
                toks.push(Token { kind: TokKind::Int(value), pos });
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len()
                    && ((bytes[i] as char).is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                toks.push(Token {
                    kind: TokKind::Ident(src[start..i].to_string()),
                    pos,
                });
            }
            other => return Err(err(pos, format!("unexpected character '{other}'"))),
        }
    }
    Ok(toks)
}

struct Parser<'a> {
    toks: Vec<Token>,
    i: usize,
    vars: &'a Arc<[String]>,
    len: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.toks.get(self.i)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.toks.get(self.i).cloned();
        if t.is_some() {
            self.i += 1;
        }
        t
    }

    fn end_pos(&self) -> usize {
        self.len
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = if matches!(self.peek().map(|t| &t.kind), Some(TokKind::Minus)) {
            self.bump();
            self.term()?.neg()
        } else {
            self.term()?
        };
        loop {
            match self.peek().map(|t| t.kind.clone()) {
                Some(TokKind::Plus) => {
                    self.bump();
                    acc = acc.try_add(&self.term()?)?;
                }
                Some(TokKind::Minus) => {
                    self.bump();
                    acc = acc.try_sub(&self.term()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(t) if t.kind == TokKind::Star => {
                    self.bump();
                    acc = acc.try_mul(&self.factor()?)?;
                }
                Some(t) if t.kind == TokKind::Slash => {
                    return Err(err(t.pos, "'/' is only allowed between integer literals"));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial> {
        if matches!(self.peek().map(|t| &t.kind), Some(TokKind::Minus)) {
            self.bump();
            return Ok(self.factor()?.neg());
        }
        let base = self.primary()?;
        if matches!(self.peek().map(|t| &t.kind), Some(TokKind::Caret)) {
            self.bump();
            let tok = self
                .bump()
                .ok_or_else(|| err(self.end_pos(), "expected exponent after '^'"))?;
            let TokKind::Int(ref n) = tok.kind else {
                return Err(err(tok.pos, "exponent must be a non-negative integer literal"));
            };
            let e = u32::try_from(n.clone())
                .map_err(|_| err(tok.pos, "exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Polynomial> {
        let tok = self
            .bump()
            .ok_or_else(|| err(self.end_pos(), "expected a value"))?;
        match tok.kind {
            TokKind::Int(numer) => {
                if matches!(self.peek().map(|t| &t.kind), Some(TokKind::Slash)) {
                    self.bump();
                    let den_tok = self
                        .bump()
                        .ok_or_else(|| err(self.end_pos(), "expected integer after '/'"))?;
                    let TokKind::Int(denom) = den_tok.kind else {
                        return Err(err(den_tok.pos, "expected integer after '/'"));
                    };
                    if denom.is_zero() {
                        return Err(err(den_tok.pos, "zero denominator"));
                    }
                    return Ok(Polynomial::constant(
                        self.vars.clone(),
                        Rational::new(numer, denom),
                    ));
                }
                Ok(Polynomial::constant(self.vars.clone(), Rational::from(numer)))
            }
            TokKind::Ident(name) => {
                let idx = self
                    .vars
                    .iter()
                    .position(|v| v == &name)
                    .ok_or_else(|| err(tok.pos, format!("unknown variable '{name}'")))?;
                Ok(Polynomial::variable(self.vars.clone(), idx))
            }
            TokKind::LParen => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(t) if t.kind == TokKind::RParen => Ok(inner),
                    Some(t) => Err(err(t.pos, "expected ')'")),
                    None => Err(err(self.end_pos(), "unclosed '('")),
                }
            }
            other => Err(err(tok.pos, format!("unexpected token {}", describe(&other)))),
        }
    }
}

fn describe(kind: &TokKind) -> String {
    match kind {
        TokKind::Int(n) => format!("'{n}'"),
        TokKind::Ident(s) => format!("'{s}'"),
        TokKind::Plus => "'+'".into(),
        TokKind::Minus => "'-'".into(),
        TokKind::Star => "'*'".into(),
        TokKind::Slash => "'/'".into(),
        TokKind::Caret => "'^'".into(),
        TokKind::LParen => "'('".into(),
        TokKind::RParen => "')'".into(),
    }
}

/// Parse a polynomial over the given ambient variable list.
pub fn parse_polynomial(src: &str, vars: &Arc<[String]>) -> Result<Polynomial> {
    let toks = lex(src)?;
    if toks.is_empty() {
        return Err(err(0, "empty input"));
    }
    let mut parser = Parser { toks, i: 0, vars, len: src.len() };
    let poly = parser.expr()?;
    if let Some(t) = parser.peek() {
        let hint = match t.kind {
            TokKind::Int(_) | TokKind::Ident(_) | TokKind::LParen => {
                " (multiplication must be written with '*')"
            }
            _ => "",
        };
        return Err(err(t.pos, format!("unexpected token {}{hint}", describe(&t.kind))));
    }
    Ok(poly)
}

struct Cursor<'a> {
    bytes: &'a [u8],
    i: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.i < self.bytes.len() && (self.bytes[self.i] as char).is_ascii_whitespace() {
            self.i += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.bytes.get(self.i).map(|&b| b as char)
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.peek() == Some(c) {
            self.i += 1;
            Ok(())
        } else {
            Err(err(self.i, format!("expected '{c}'")))
        }
    }

    fn ident(&mut self) -> Result<String> {
        let start = self.i;
        match self.peek() {
            Some(c) if c.is_ascii_alphabetic() || c == '_' => self.i += 1,
            _ => return Err(err(self.i, "expected variable name")),
        }
        while let Some(c) = self.peek() {
            if c.is_ascii_alphanumeric() || c == '_' {
                self.i += 1;
            } else {
                break;
            }
        }
        Ok(std::str::from_utf8(&self.bytes[start..self.i])
            .expect("ascii identifier")
            .to_string())
    }
}

/// Parse a ring description: `Z`, `Q`, `Q[x,y]`, or `Q[x,y]/(modulus)`,
/// using the graded order for quotient normal forms.
pub fn parse_ring(src: &str) -> Result<RingContext> {
    parse_ring_with_order(src, MonomialOrder::DegLex)
}

/// [`parse_ring`] with an explicit order for quotient normal forms.
pub fn parse_ring_with_order(src: &str, order: MonomialOrder) -> Result<RingContext> {
    let mut cur = Cursor { bytes: src.as_bytes(), i: 0 };
    cur.skip_ws();
    match cur.peek() {
        Some('Z') => {
            cur.i += 1;
            cur.skip_ws();
            if cur.i != cur.bytes.len() {
                return Err(err(cur.i, "unexpected input after 'Z'"));
            }
            Ok(RingContext::Integers)
        }
        Some('Q') => {
            cur.i += 1;
            cur.skip_ws();
            if cur.i == cur.bytes.len() {
                return Ok(RingContext::Rationals);
            }
            cur.expect('[')?;
            let mut names = Vec::new();
            loop {
                cur.skip_ws();
                names.push(cur.ident()?);
                cur.skip_ws();
                match cur.peek() {
                    Some(',') => cur.i += 1,
                    Some(']') => {
                        cur.i += 1;
                        break;
                    }
                    _ => return Err(err(cur.i, "expected ',' or ']'")),
                }
            }
            cur.skip_ws();
            if cur.i == cur.bytes.len() {
                return RingContext::polynomial_ring(&names);
            }
            cur.expect('/')?;
            cur.skip_ws();
            cur.expect('(')?;
            let open = cur.i;
            let mut depth = 1usize;
            let mut close = None;
            while cur.i < cur.bytes.len() {
                match cur.peek() {
                    Some('(') => depth += 1,
                    Some(')') => {
                        depth -= 1;
                        if depth == 0 {
                            close = Some(cur.i);
                            cur.i += 1;
                            break;
                        }
                    }
                    _ => {}
                }
                cur.i += 1;
            }
            let close = close.ok_or_else(|| err(src.len(), "unclosed '(' in modulus"))?;
            cur.skip_ws();
            if cur.i != cur.bytes.len() {
                return Err(err(cur.i, "unexpected input after modulus"));
            }
            let vars: Arc<[String]> = names.clone().into();
            let body = std::str::from_utf8(&cur.bytes[open..close]).expect("ascii input");
            let modulus = parse_polynomial(body, &vars).map_err(|e| match e {
                Error::Parse { position, message } => Error::Parse { position: position + open, message },
                other => other,
            })?;
            RingContext::quotient(&names, modulus, order)
        }
        _ => Err(err(cur.i, "expected ring 'Z', 'Q', 'Q[vars]', or 'Q[vars]/(modulus)'")),
    }
}
