//! Text format for series.
//!
//! A series `1 + f_1 t + ... + f_T t^T` is written in substitution form,
//! as a polynomial in `t` whose `t^(k+1)` term carries the slot-`k`
//! coefficient:
//!
//! ```text
//! t + e*t^2 - (1/2)*e*v*t^3 + 2*v*t^4
//! ```
//!
//! Grammar:
//!
//! * the series variable `t` is reserved; the leading `t` term (coefficient
//!   one) is mandatory and stands for the loop unit;
//! * every other term is `[rational *] label {* label} * t^p` with `p >= 2`,
//!   read into slot `p - 1`; the rational may be parenthesized and defaults
//!   to `1`; terms are joined by `+` or `-`;
//! * labels are identifiers (letters, digits, `_`, starting with a letter)
//!   resolving to basis labels — for free algebras, to generators, so a word
//!   like `a*b*a` is the corresponding basis word;
//! * repeated powers accumulate.
//!
//! Errors carry 1-based line/column positions.  Printing emits the same
//! grammar and round-trips exactly.

use std::fmt;
use std::fmt::Write as _;
use std::sync::Arc;

use crate::algebra::{AlgElt, Algebra};
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::series::Series;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    Slash,
    Int(String),
    Ident(String),
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(text: &str) -> Result<Vec<Spanned>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0usize;
    let mut line = 1usize;
    let mut col = 1usize;
    while i < chars.len() {
        let c = chars[i];
        let (tline, tcol) = (line, col);
        let advance = |i: &mut usize, line: &mut usize, col: &mut usize| {
            if chars[*i] == '\n' {
                *line += 1;
                *col = 1;
            } else {
                *col += 1;
            }
            *i += 1;
        };
        if c.is_whitespace() {
            advance(&mut i, &mut line, &mut col);
            continue;
        }
        let simple = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            '/' => Some(Tok::Slash),
            _ => None,
        };
        if let Some(tok) = simple {
            advance(&mut i, &mut line, &mut col);
            out.push(Spanned { tok, line: tline, col: tcol });
        } else if c.is_ascii_digit() {
            let mut s = String::new();
            while i < chars.len() && chars[i].is_ascii_digit() {
                s.push(chars[i]);
                advance(&mut i, &mut line, &mut col);
            }
            out.push(Spanned { tok: Tok::Int(s), line: tline, col: tcol });
        } else if c.is_ascii_alphabetic() {
            let mut s = String::new();
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                s.push(chars[i]);
                advance(&mut i, &mut line, &mut col);
            }
            out.push(Spanned { tok: Tok::Ident(s), line: tline, col: tcol });
        } else {
            return Err(Error::ParseError {
                line: tline,
                col: tcol,
                msg: format!("unexpected character `{c}`"),
            });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Spanned>,
    pos: usize,
    algebra: &'a Arc<Algebra>,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Spanned> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Spanned> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn here(&self) -> (usize, usize) {
        match self.toks.get(self.pos) {
            Some(s) => (s.line, s.col),
            None => match self.toks.last() {
                Some(s) => (s.line, s.col + 1),
                None => (1, 1),
            },
        }
    }

    fn err(&self, msg: &str) -> Error {
        let (line, col) = self.here();
        Error::ParseError {
            line,
            col,
            msg: msg.to_string(),
        }
    }

    fn expect_int(&mut self, what: &str) -> Result<(i64, usize, usize)> {
        match self.next() {
            Some(Spanned { tok: Tok::Int(s), line, col }) => {
                let v = s.parse::<i64>().map_err(|_| Error::ParseError {
                    line,
                    col,
                    msg: format!("integer out of range in {what}"),
                })?;
                Ok((v, line, col))
            }
            _ => {
                self.pos = self.pos.saturating_sub(1);
                Err(self.err(&format!("expected an integer in {what}")))
            }
        }
    }

    /// One additive term; returns `(slot, contribution)` with slot 0 meaning
    /// the bare unit term.
    fn term(&mut self, negative: bool) -> Result<(usize, Option<AlgElt>)> {
        let mut coef = if negative {
            -Rational::one()
        } else {
            Rational::one()
        };
        let mut explicit_coef = false;
        let mut word: Option<AlgElt> = None;
        let mut power: Option<(i64, usize, usize)> = None;

        loop {
            match self.peek().map(|s| s.tok.clone()) {
                Some(Tok::LParen) => {
                    if explicit_coef || word.is_some() || power.is_some() {
                        return Err(self.err("unexpected `(`"));
                    }
                    self.next();
                    let (num, _, _) = self.expect_int("a rational coefficient")?;
                    let mut val = Rational::int(num);
                    if matches!(self.peek().map(|s| &s.tok), Some(Tok::Slash)) {
                        self.next();
                        let (den, dl, dc) = self.expect_int("a rational coefficient")?;
                        val = Rational::new(num, den).map_err(|_| Error::ParseError {
                            line: dl,
                            col: dc,
                            msg: "zero denominator".into(),
                        })?;
                    }
                    match self.next() {
                        Some(Spanned { tok: Tok::RParen, .. }) => {}
                        _ => {
                            self.pos = self.pos.saturating_sub(1);
                            return Err(self.err("expected `)`"));
                        }
                    }
                    coef *= &val;
                    explicit_coef = true;
                }
                Some(Tok::Int(_)) => {
                    if explicit_coef || word.is_some() || power.is_some() {
                        return Err(self.err("a coefficient must come first in its term"));
                    }
                    let (num, _, _) = self.expect_int("a coefficient")?;
                    let mut val = Rational::int(num);
                    if matches!(self.peek().map(|s| &s.tok), Some(Tok::Slash)) {
                        self.next();
                        let (den, dl, dc) = self.expect_int("a coefficient")?;
                        val = Rational::new(num, den).map_err(|_| Error::ParseError {
                            line: dl,
                            col: dc,
                            msg: "zero denominator".into(),
                        })?;
                    }
                    coef *= &val;
                    explicit_coef = true;
                }
                Some(Tok::Ident(name)) => {
                    let Spanned { line, col, .. } = self.next().unwrap();
                    if power.is_some() {
                        return Err(Error::ParseError {
                            line,
                            col,
                            msg: "the power of t must end its term".into(),
                        });
                    }
                    if name == "t" {
                        let p = if matches!(self.peek().map(|s| &s.tok), Some(Tok::Caret)) {
                            self.next();
                            let (p, pl, pc) = self.expect_int("the power of t")?;
                            if p < 1 {
                                return Err(Error::ParseError {
                                    line: pl,
                                    col: pc,
                                    msg: "powers of t start at 1".into(),
                                });
                            }
                            p
                        } else {
                            1
                        };
                        power = Some((p, line, col));
                    } else {
                        let factor =
                            AlgElt::from_label(self.algebra, &name).map_err(|_| {
                                Error::UnknownSymbol { name: name.clone(), line, col }
                            })?;
                        word = Some(match word {
                            None => factor,
                            Some(w) => w.mul(&factor).expect("same algebra"),
                        });
                    }
                }
                _ => break,
            }
            // Factors are joined by `*`; a missing star ends the term.
            if matches!(self.peek().map(|s| &s.tok), Some(Tok::Star)) {
                self.next();
            } else {
                break;
            }
        }

        let Some((p, pl, pc)) = power else {
            return Err(self.err("every term needs a power of t"));
        };
        if p == 1 {
            if explicit_coef || word.is_some() || negative {
                return Err(Error::ParseError {
                    line: pl,
                    col: pc,
                    msg: "the unit term must be a bare `t` with coefficient one".into(),
                });
            }
            return Ok((0, None));
        }
        let Some(word) = word else {
            return Err(Error::ParseError {
                line: pl,
                col: pc,
                msg: "a t^p term needs at least one basis label".into(),
            });
        };
        Ok(((p - 1) as usize, Some(word.scale(&coef))))
    }
}

/// Parses the text format into a series over the given algebra.
pub fn parse_series(
    algebra: &Arc<Algebra>,
    trunc: usize,
    graded: bool,
    text: &str,
) -> Result<Series> {
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0, algebra };
    if p.peek().is_none() {
        return Err(p.err("empty input; the unit series is written `t`"));
    }

    let mut unit_seen = false;
    let mut series = Series::unit(algebra, trunc, graded)?;
    let mut first = true;
    loop {
        let negative = match p.peek().map(|s| s.tok.clone()) {
            None => break,
            Some(Tok::Plus) => {
                if first {
                    return Err(p.err("a series cannot start with `+`"));
                }
                p.next();
                false
            }
            Some(Tok::Minus) => {
                p.next();
                true
            }
            Some(_) if first => false,
            Some(_) => return Err(p.err("expected `+` or `-` between terms")),
        };
        let (slot, contrib) = p.term(negative)?;
        match contrib {
            None => {
                if unit_seen {
                    return Err(p.err("duplicate unit term `t`"));
                }
                unit_seen = true;
            }
            Some(value) => {
                if slot > trunc {
                    let (line, col) = p.here();
                    return Err(Error::ParseError {
                        line,
                        col,
                        msg: format!(
                            "t^{} exceeds the truncation order {} (slots end at t^{})",
                            slot + 1,
                            trunc,
                            trunc + 1
                        ),
                    });
                }
                let sum = series.coeff(slot).add(&value)?;
                series.set_coeff(slot, sum)?;
            }
        }
        first = false;
    }
    if !unit_seen {
        return Err(Error::ParseError {
            line: 1,
            col: 1,
            msg: "the leading unit term `t` is mandatory".into(),
        });
    }
    Ok(series)
}

/// Prints a series in the text grammar; `parse_series` reads it back
/// exactly.
pub fn print_series(s: &Series) -> String {
    let mut out = String::from("t");
    for k in s.occupied_slots() {
        let c = s.coeff(k);
        for (i, coef) in c.terms() {
            let label = s.algebra().label(i);
            let (sep, mag) = if coef.is_negative() {
                (" - ", -coef)
            } else {
                (" + ", coef.clone())
            };
            out.push_str(sep);
            if !mag.is_one() {
                let text = mag.to_string();
                if text.contains('/') {
                    let _ = write!(out, "({text})*");
                } else {
                    let _ = write!(out, "{text}*");
                }
            }
            let _ = write!(out, "{label}*t^{}", k + 1);
        }
    }
    out
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_series(self))
    }
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Series[T={}{}] {}",
            self.truncation(),
            if self.is_graded() { ", graded" } else { "" },
            print_series(self)
        )
    }
}
