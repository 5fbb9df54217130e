use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::freealg::{Alphabet, Poly, Word};
use crate::scalar::Scalar;

use super::{ParseError, PresentationBundle};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Name(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(n) => format!("`{n}`"),
            Tok::Name(s) => format!("`{s}`"),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Caret => "`^`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::End => "end of line".into(),
        }
    }
}

struct Lexer {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    line: usize,
}

fn lex(src: &str, line: usize, col0: usize) -> Result<Lexer, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = col0 + i;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let single = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(t) = single {
            toks.push((t, col));
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            toks.push((Tok::Int(s.parse().expect("digits")), col));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            toks.push((Tok::Name(chars[start..i].iter().collect()), col));
        } else {
            return Err(ParseError::Syntax {
                line,
                column: col,
                expected: vec!["a term".into()],
                found: format!("`{c}`"),
            });
        }
    }
    toks.push((Tok::End, col0 + chars.len()));
    Ok(Lexer { toks, pos: 0, line })
}

impl Lexer {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn col(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn fail<T>(&self, expected: &[&str]) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            line: self.line,
            column: self.col(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: self.peek().describe(),
        })
    }

    fn invalid<T>(&self, message: &str) -> Result<T, ParseError> {
        Err(ParseError::Invalid {
            line: self.line,
            message: format!("column {}: {message}", self.col()),
        })
    }
}

const TERM_START: [&str; 4] = ["a number", "`q`", "a generator", "`(`"];

struct ExprParser<'a> {
    lx: Lexer,
    alphabet: &'a Alphabet,
}

impl ExprParser<'_> {
    fn expr(&mut self) -> Result<Poly, ParseError> {
        let mut acc = match self.lx.peek() {
            Tok::Minus => {
                self.lx.bump();
                self.term()?.neg()
            }
            Tok::Plus => {
                self.lx.bump();
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.lx.peek() {
                Tok::Plus => {
                    self.lx.bump();
                    acc = acc.add(&self.term()?);
                }
                Tok::Minus => {
                    self.lx.bump();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn starts_factor(&self) -> bool {
        matches!(self.lx.peek(), Tok::Int(_) | Tok::Name(_) | Tok::LParen)
    }

    fn term(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.lx.peek() {
                Tok::Star => {
                    self.lx.bump();
                    acc = acc.mul(&self.factor()?);
                }
                Tok::Slash => {
                    self.lx.bump();
                    let d = self.factor()?;
                    let Some(c) = d.as_constant() else {
                        return self.lx.invalid("can only divide by a scalar");
                    };
                    match acc.div_scalar(&c) {
                        Ok(p) => acc = p,
                        Err(_) => return self.lx.invalid("division by zero"),
                    }
                }
                _ if self.starts_factor() => {
                    if acc.as_constant().is_none() {
                        return self.lx.fail(&["`*`", "`+`", "`-`", "end of line"]);
                    }
                    acc = acc.mul(&self.factor()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Poly, ParseError> {
        let base = self.atom()?;
        if *self.lx.peek() != Tok::Caret {
            return Ok(base);
        }
        self.lx.bump();
        let neg = match self.lx.peek() {
            Tok::Minus => {
                self.lx.bump();
                true
            }
            Tok::Plus => {
                self.lx.bump();
                false
            }
            _ => false,
        };
        let Tok::Int(e) = self.lx.peek().clone() else {
            return self.lx.fail(&["an integer exponent"]);
        };
        let Ok(e) = i64::try_from(&e) else {
            return self.lx.invalid("exponent too large");
        };
        if e > u32::MAX as i64 {
            return self.lx.invalid("exponent too large");
        }
        self.lx.bump();
        let e = if neg { -e } else { e };
        if e >= 0 {
            return Ok(base.pow(e as u32));
        }
        match base.as_constant().map(|c| c.pow(e)) {
            Some(Ok(c)) => Ok(Poly::constant(c)),
            Some(Err(_)) => self.lx.invalid("zero raised to a negative power"),
            None => self.lx.invalid("negative powers apply only to scalars"),
        }
    }

    fn atom(&mut self) -> Result<Poly, ParseError> {
        let col = self.lx.col();
        match self.lx.peek().clone() {
            Tok::Int(n) => {
                self.lx.bump();
                Ok(Poly::constant(Scalar::from_bigint(n)))
            }
            Tok::Name(n) if n == "q" => {
                self.lx.bump();
                Ok(Poly::constant(Scalar::q()))
            }
            Tok::Name(n) => match self.alphabet.letter(&n) {
                Some(l) => {
                    self.lx.bump();
                    Ok(Poly::monomial(Word::letter(l)))
                }
                None => Err(ParseError::UnknownGenerator {
                    line: self.lx.line,
                    column: col,
                    name: n,
                }),
            },
            Tok::LParen => {
                self.lx.bump();
                let p = self.expr()?;
                if *self.lx.peek() != Tok::RParen {
                    return self.lx.fail(&["`)`"]);
                }
                self.lx.bump();
                Ok(p)
            }
            _ => self.lx.fail(&TERM_START),
        }
    }
}

fn parse_expr_at(src: &str, alphabet: &Alphabet, line: usize, col0: usize) -> Result<Poly, ParseError> {
    let lx = lex(src, line, col0)?;
    let mut p = ExprParser { lx, alphabet };
    let out = p.expr()?;
    if *p.lx.peek() != Tok::End {
        return p.lx.fail(&["`+`", "`-`", "`*`", "end of line"]);
    }
    Ok(out)
}

/// Parses a polynomial expression over `alphabet`.
pub fn parse_poly(src: &str, alphabet: &Alphabet) -> Result<Poly, ParseError> {
    parse_expr_at(src, alphabet, 1, 1)
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

pub fn parse_presentation(text: &str) -> Result<PresentationBundle, ParseError> {
    let mut name = String::new();
    let mut metadata = BTreeMap::new();
    let mut alphabet: Option<Alphabet> = None;
    let mut rels = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = strip_comment(raw);
        if body.trim().is_empty() {
            continue;
        }
        let Some(colon) = body.find(':') else {
            let col = body.len() - body.trim_start().len() + 1;
            return Err(ParseError::Syntax {
                line,
                column: col,
                expected: vec!["`name:`, `field:`, `meta:`, `generators:`, `weights:` or `rel:`".into()],
                found: format!("`{}`", body.trim()),
            });
        };
        let key = body[..colon].trim();
        let value = &body[colon + 1..];
        let vcol = colon + 2;
        let invalid = |message: String| ParseError::Invalid { line, message };
        match key {
            "name" => name = value.trim().to_string(),
            "field" => {
                if value.trim() != "Q(q)" {
                    return Err(invalid(format!("unsupported field `{}`", value.trim())));
                }
            }
            "meta" => {
                let Some((k, v)) = value.split_once('=') else {
                    return Err(invalid("expected `meta: key = value`".into()));
                };
                metadata.insert(k.trim().to_string(), v.trim().to_string());
            }
            "generators" => {
                if alphabet.is_some() {
                    return Err(invalid("generators declared twice".into()));
                }
                let names: Vec<&str> = if value.trim().is_empty() {
                    Vec::new()
                } else {
                    value.split('<').map(str::trim).collect()
                };
                let a = Alphabet::new(names).map_err(|e| invalid(e.to_string()))?;
                alphabet = Some(a);
            }
            "weights" => {
                let a = alphabet
                    .as_ref()
                    .ok_or_else(|| invalid("`weights:` before `generators:`".into()))?;
                let mut ws = vec![None; a.len()];
                for item in value.split(',') {
                    let Some((n, w)) = item.split_once('=') else {
                        return Err(invalid(format!("expected `name=weight`, found `{}`", item.trim())));
                    };
                    let n = n.trim();
                    let l = a.letter(n).ok_or_else(|| ParseError::UnknownGenerator {
                        line,
                        column: vcol,
                        name: n.to_string(),
                    })?;
                    let w: u32 = w
                        .trim()
                        .parse()
                        .map_err(|_| invalid(format!("bad weight `{}`", w.trim())))?;
                    ws[l as usize] = Some(w);
                }
                let ws: Vec<u32> = ws
                    .into_iter()
                    .enumerate()
                    .map(|(i, w)| w.ok_or_else(|| invalid(format!("no weight for `{}`", a.name(i as u32)))))
                    .collect::<Result<_, _>>()?;
                alphabet = Some(a.reweighted(ws).map_err(|e| invalid(e.to_string()))?);
            }
            "rel" => {
                let a = alphabet.as_ref().ok_or(ParseError::MissingGenerators)?;
                let p = parse_expr_at(value, a, line, vcol)?;
                if p.is_zero() {
                    return Err(ParseError::ZeroRelation { line });
                }
                rels.push(p);
            }
            other => {
                return Err(ParseError::Syntax {
                    line,
                    column: 1,
                    expected: vec!["a known header".into()],
                    found: format!("`{other}:`"),
                })
            }
        }
    }
    let alphabet = alphabet.ok_or(ParseError::MissingGenerators)?;
    Ok(PresentationBundle {
        name,
        alphabet,
        relations: rels,
        metadata,
    })
}
