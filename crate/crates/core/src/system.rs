//! Plain-text polynomial systems.
//!
//! ```text
//! # comment
//! vars: x y
//! order: lex
//! p: x^2 - 3/2*y^2
//! p: 2*x*y + 3*y^2
//! ```

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::monomial::{Monomial, VarSet};
use crate::ordering::{OrderKind, OrderingSpec};
use crate::polynomial::{Polynomial, Rational, Term};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SystemFile {
    pub ordering: OrderingSpec,
    pub polynomials: Vec<Polynomial>,
}

impl SystemFile {
    pub fn vars(&self) -> &VarSet {
        self.ordering.vars()
    }

    /// Re-canonicalizes every polynomial under another ordering kind.
    pub fn with_order(&self, kind: OrderKind) -> SystemFile {
        let ordering = self.ordering.with_kind(kind);
        let polynomials = self
            .polynomials
            .iter()
            .map(|p| Polynomial::from_terms(p.terms().iter().cloned(), &ordering))
            .collect();
        SystemFile { ordering, polynomials }
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        writeln!(out, "vars: {}", self.vars().names().join(" ")).unwrap();
        writeln!(out, "order: {}", self.ordering.kind()).unwrap();
        for p in &self.polynomials {
            writeln!(out, "p: {}", p.render(self.vars())).unwrap();
        }
        out
    }
}

pub fn parse_system(text: &str) -> Result<SystemFile> {
    let mut vars: Option<VarSet> = None;
    let mut order = OrderKind::DegRevLex;
    let mut order_seen = false;
    let mut raw: Vec<(usize, Vec<Term>)> = Vec::new();

    for (n, line) in text.lines().enumerate() {
        let lineno = n + 1;
        let line = line.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let (key, rest) = line
            .split_once(':')
            .ok_or_else(|| Error::parse(lineno, "expected 'vars:', 'order:' or 'p:'"))?;
        match key.trim() {
            "vars" => {
                if vars.is_some() {
                    return Err(Error::parse(lineno, "duplicate 'vars:' line"));
                }
                let names: Vec<&str> = rest.split_whitespace().collect();
                for name in &names {
                    if !is_identifier(name) {
                        return Err(Error::parse(lineno, format!("invalid variable name '{name}'")));
                    }
                }
                vars = Some(VarSet::new(&names).map_err(|e| Error::parse(lineno, e.to_string()))?);
            }
            "order" => {
                if order_seen {
                    return Err(Error::parse(lineno, "duplicate 'order:' line"));
                }
                order_seen = true;
                order = match rest.trim() {
                    "lex" => OrderKind::Lex,
                    "degrevlex" => OrderKind::DegRevLex,
                    other => return Err(Error::parse(lineno, format!("unknown ordering '{other}'"))),
                };
            }
            "p" => {
                let vs = vars
                    .as_ref()
                    .ok_or_else(|| Error::parse(lineno, "'p:' before 'vars:'"))?;
                let terms = parse_polynomial(rest, vs).map_err(|m| Error::parse(lineno, m))?;
                raw.push((lineno, terms));
            }
            other => return Err(Error::parse(lineno, format!("unknown directive '{other}'"))),
        }
    }

    let vars = vars.ok_or_else(|| Error::parse(1, "missing 'vars:' line"))?;
    let ordering = OrderingSpec::new(order, vars);
    let mut polynomials = Vec::with_capacity(raw.len());
    for (lineno, terms) in raw {
        let p = Polynomial::from_terms(terms, &ordering);
        if p.is_zero() {
            return Err(Error::parse(lineno, "zero polynomial"));
        }
        polynomials.push(p);
    }
    if polynomials.is_empty() {
        return Err(Error::parse(text.lines().count().max(1), "empty system"));
    }
    Ok(SystemFile { ordering, polynomials })
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
}

fn tokenize(s: &str) -> std::result::Result<Vec<Token>, String> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let single = match c {
            '+' => Some(Token::Plus),
            '-' => Some(Token::Minus),
            '*' => Some(Token::Star),
            '/' => Some(Token::Slash),
            '^' => Some(Token::Caret),
            _ => None,
        };
        if let Some(t) = single {
            out.push(t);
            i += 1;
            continue;
        }
        let start = i;
        if c.is_ascii_digit() {
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push(Token::Int(digits.parse().unwrap()));
        } else if c.is_ascii_alphabetic() || c == '_' {
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Token::Ident(chars[start..i].iter().collect()));
        } else {
            return Err(format!("unexpected character '{c}'"));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    vars: &'a VarSet,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn term(&mut self, negative: bool) -> std::result::Result<Term, String> {
        let mut coeff = if negative { -Rational::one() } else { Rational::one() };
        let mut exps = vec![0u32; self.vars.len()];
        loop {
            match self.next() {
                Some(Token::Int(n)) => {
                    let mut q = Rational::from_integer(n);
                    if self.peek() == Some(&Token::Slash) {
                        self.pos += 1;
                        match self.next() {
                            Some(Token::Int(d)) if !d.is_zero() => q /= Rational::from_integer(d),
                            Some(Token::Int(_)) => return Err("zero denominator".into()),
                            _ => return Err("malformed rational".into()),
                        }
                    }
                    coeff *= q;
                }
                Some(Token::Ident(name)) => {
                    let v = self
                        .vars
                        .index_of(&name)
                        .ok_or_else(|| format!("unknown variable '{name}'"))?;
                    let mut power = 1u32;
                    if self.peek() == Some(&Token::Caret) {
                        self.pos += 1;
                        match self.next() {
                            Some(Token::Int(e)) => {
                                power = u32::try_from(&e)
                                    .ok()
                                    .filter(|&e| e > 0)
                                    .ok_or_else(|| format!("invalid exponent {e}"))?;
                            }
                            _ => return Err("expected exponent after '^'".into()),
                        }
                    }
                    exps[v] = exps[v]
                        .checked_add(power)
                        .ok_or_else(|| "exponent overflow".to_string())?;
                }
                Some(t) => return Err(format!("unexpected token {t:?}")),
                None => return Err("unexpected end of polynomial".into()),
            }
            if self.peek() == Some(&Token::Star) {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok(Term {
            coeff,
            mono: Monomial::new(exps),
        })
    }
}

fn parse_polynomial(s: &str, vars: &VarSet) -> std::result::Result<Vec<Term>, String> {
    let tokens = tokenize(s)?;
    if tokens.is_empty() {
        return Err("empty polynomial".into());
    }
    let mut p = Parser { tokens, pos: 0, vars };
    let mut terms = Vec::new();
    let mut negative = match p.peek() {
        Some(Token::Minus) => {
            p.pos += 1;
            true
        }
        Some(Token::Plus) => {
            p.pos += 1;
            false
        }
        _ => false,
    };
    loop {
        terms.push(p.term(negative)?);
        match p.next() {
            None => break,
            Some(Token::Plus) => negative = false,
            Some(Token::Minus) => negative = true,
            Some(t) => return Err(format!("unexpected token {t:?}")),
        }
    }
    Ok(terms)
}
