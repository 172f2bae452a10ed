//! Expression language for `witt eval`.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary ('*' unary)*
//! unary   := '-' unary | 'V' ('^' num)? unary | 'F' unary
//!          | 'gh' unary | 'gh_' num unary | 'rgh_' num unary | power
//! power   := atom ('^' num)?
//! atom    := '(' c0, c1, … ')' | '<' g0, g1, … '>' | '[' elem ']'
//!          | '(' expr ')' | number | identifier
//! ```
//!
//! A parenthesized group containing a top-level comma is a Witt vector
//! literal; `(a,)` is a literal of length one.

use std::sync::Arc;

use witt_core::witt::{GhostVector, WittRing, WittVector};
use witt_core::{Elem, Result, WittError};

#[derive(Clone, Debug)]
pub enum Value {
    Witt(WittVector),
    Ghost(GhostVector),
    /// Element of the base ring `R₀`.
    Scalar(Elem),
    /// Element of the algebra `A`.
    Elem(Elem),
}

pub struct Evaluator {
    ring: Arc<WittRing>,
    chars: Vec<char>,
    pos: usize,
}

fn parse_err(pos: usize, msg: impl Into<String>) -> WittError {
    WittError::Parse { pos, msg: msg.into() }
}

fn type_err(msg: &str) -> WittError {
    parse_err(0, format!("type error: {msg}"))
}

impl Evaluator {
    pub fn new(ring: Arc<WittRing>, src: &str) -> Evaluator {
        Evaluator { ring, chars: src.chars().collect(), pos: 0 }
    }

    pub fn run(mut self) -> Result<Value> {
        let v = self.expr()?;
        self.skip_ws();
        if self.pos != self.chars.len() {
            return Err(parse_err(self.pos, "trailing input"));
        }
        Ok(v)
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn number(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        text.parse().map_err(|_| parse_err(start, "expected a number"))
    }

    /// Identifier at the cursor, without consuming it.
    fn ident(&mut self) -> Option<String> {
        self.skip_ws();
        let mut end = self.pos;
        while end < self.chars.len() && (self.chars[end].is_alphanumeric() || self.chars[end] == '_') {
            end += 1;
        }
        if end == self.pos || self.chars[self.pos].is_ascii_digit() {
            return None;
        }
        Some(self.chars[self.pos..end].iter().collect())
    }

    fn expr(&mut self) -> Result<Value> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                let rhs = self.term()?;
                acc = self.binary(acc, rhs, '+')?;
            } else if self.peek() == Some('-') || self.peek() == Some('−') {
                self.pos += 1;
                let rhs = self.term()?;
                acc = self.binary(acc, rhs, '-')?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Value> {
        let mut acc = self.unary()?;
        while self.eat('*') {
            let rhs = self.unary()?;
            acc = self.binary(acc, rhs, '*')?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Value> {
        if self.eat('-') || self.eat('−') {
            let v = self.unary()?;
            return self.negate(v);
        }
        if let Some(id) = self.ident() {
            let len = id.chars().count();
            let keyword = match id.as_str() {
                "V" | "F" | "gh" => true,
                s => {
                    (s.starts_with("gh_") && s[3..].parse::<usize>().is_ok())
                        || (s.starts_with("rgh_") && s[4..].parse::<usize>().is_ok())
                }
            };
            if keyword {
                self.pos += len;
                return match id.as_str() {
                    "V" => {
                        let j = if self.eat('^') { self.number()? as usize } else { 1 };
                        match self.unary()? {
                            Value::Witt(w) => Ok(Value::Witt(w.verschiebung(j))),
                            _ => Err(type_err("V applies to Witt vectors")),
                        }
                    }
                    "F" => match self.unary()? {
                        Value::Witt(w) => Ok(Value::Witt(w.frobenius()?)),
                        _ => Err(type_err("F applies to Witt vectors")),
                    },
                    "gh" => match self.unary()? {
                        Value::Witt(w) => Ok(Value::Ghost(w.ghost())),
                        Value::Ghost(g) => Ok(Value::Witt(g.unghost()?)),
                        _ => Err(type_err("gh applies to Witt or ghost vectors")),
                    },
                    s => {
                        let reduced = s.starts_with('r');
                        let i: usize = s.rsplit('_').next().unwrap().parse().unwrap();
                        match self.unary()? {
                            Value::Witt(w) => Ok(Value::Elem(w.ghost_component(i, reduced)?)),
                            _ => Err(type_err("ghost components apply to Witt vectors")),
                        }
                    }
                };
            }
        }
        self.power()
    }

    fn power(&mut self) -> Result<Value> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let e = self.number()?;
        Ok(match base {
            Value::Witt(w) => Value::Witt(w.pow(e)),
            Value::Scalar(s) => Value::Scalar(self.ring.ctx.base.ring().pow(&s, e)),
            Value::Elem(a) => Value::Elem(self.ring.alg.ring.pow(&a, e)),
            Value::Ghost(g) => {
                let r = &self.ring.alg.ring;
                let entries = g.entries().iter().map(|x| r.pow(x, e)).collect();
                Value::Ghost(g.ring().ghost_vector(entries)?)
            }
        })
    }

    /// Text between the cursor (just after `open`) and the matching `close`,
    /// split at top-level commas, with their offsets.
    fn delimited(&mut self, open: usize, close: char) -> Result<(Vec<(usize, String)>, bool)> {
        let mut parts = Vec::new();
        let mut depth = 0i32;
        let mut start = self.pos;
        let mut had_comma = false;
        while self.pos < self.chars.len() {
            let c = self.chars[self.pos];
            match c {
                c if c == close && depth == 0 => {
                    let last: String = self.chars[start..self.pos].iter().collect();
                    if !(had_comma && last.trim().is_empty()) {
                        parts.push((start, last));
                    }
                    self.pos += 1;
                    return Ok((parts, had_comma));
                }
                '(' | '[' => depth += 1,
                ')' | ']' => depth -= 1,
                ',' if depth == 0 => {
                    parts.push((start, self.chars[start..self.pos].iter().collect()));
                    had_comma = true;
                    start = self.pos + 1;
                }
                _ => {}
            }
            self.pos += 1;
        }
        Err(parse_err(open, format!("unclosed '{}'", self.chars[open])))
    }

    fn parse_in_algebra(&self, offset: usize, text: &str) -> Result<Elem> {
        self.ring.alg.ring.parse(text.trim()).map_err(|e| match e {
            WittError::Parse { pos, msg } => parse_err(offset + pos, msg),
            other => other,
        })
    }

    fn witt_literal(&self, parts: &[(usize, String)]) -> Result<WittVector> {
        let comps = parts
            .iter()
            .map(|(off, t)| self.parse_in_algebra(*off, t))
            .collect::<Result<Vec<_>>>()?;
        let ring = self.ring.with_len(comps.len() - 1);
        ring.vector(comps)
    }

    fn atom(&mut self) -> Result<Value> {
        let at = self.pos;
        match self.peek() {
            Some('(') => {
                let open = self.pos;
                self.pos += 1;
                let save = self.pos;
                let (parts, literal) = self.delimited(open, ')')?;
                if literal {
                    return Ok(Value::Witt(self.witt_literal(&parts)?));
                }
                // grouping: evaluate the inner text in place
                self.pos = save;
                let v = self.expr()?;
                if !self.eat(')') {
                    return Err(parse_err(self.pos, "expected ')'"));
                }
                Ok(v)
            }
            Some('<') => {
                let open = self.pos;
                self.pos += 1;
                let (parts, _) = self.delimited(open, '>')?;
                let entries = parts
                    .iter()
                    .map(|(off, t)| self.parse_in_algebra(*off, t))
                    .collect::<Result<Vec<_>>>()?;
                if entries.is_empty() {
                    return Err(parse_err(open, "empty ghost vector"));
                }
                let ring = self.ring.with_len(entries.len() - 1);
                Ok(Value::Ghost(ring.ghost_vector(entries)?))
            }
            Some('[') => {
                let open = self.pos;
                self.pos += 1;
                let (parts, comma) = self.delimited(open, ']')?;
                if comma || parts.len() != 1 {
                    return Err(parse_err(open, "Teichmüller lift takes one element"));
                }
                let a = self.parse_in_algebra(parts[0].0, &parts[0].1)?;
                Ok(Value::Witt(self.ring.teichmuller(&a)))
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.number()?;
                Ok(Value::Scalar(self.ring.ctx.base.ring().from_i64(n as i64)))
            }
            Some(_) => {
                let id = self.ident().ok_or_else(|| parse_err(at, "unexpected character"))?;
                self.pos += id.chars().count();
                if let Ok(s) = self.ring.ctx.base.parse_element(&id) {
                    return Ok(Value::Scalar(s));
                }
                self.ring
                    .alg
                    .ring
                    .variable(&id)
                    .map(Value::Elem)
                    .ok_or_else(|| parse_err(at, format!("unknown identifier '{id}'")))
            }
            None => Err(parse_err(at, "unexpected end of input")),
        }
    }

    fn negate(&self, v: Value) -> Result<Value> {
        Ok(match v {
            Value::Witt(w) => Value::Witt(w.neg()),
            Value::Scalar(s) => Value::Scalar(self.ring.ctx.base.ring().neg(&s)),
            Value::Elem(a) => Value::Elem(self.ring.alg.ring.neg(&a)),
            Value::Ghost(g) => {
                let r = &self.ring.alg.ring;
                Value::Ghost(g.ring().ghost_vector(g.entries().iter().map(|x| r.neg(x)).collect())?)
            }
        })
    }

    fn binary(&self, a: Value, b: Value, op: char) -> Result<Value> {
        let r0 = self.ring.ctx.base.ring();
        let ar = &self.ring.alg.ring;
        let b = if op == '-' { self.negate(b)? } else { b };
        let op = if op == '-' { '+' } else { op };
        Ok(match (a, b) {
            (Value::Witt(x), Value::Witt(y)) => Value::Witt(if op == '+' { x.add(&y)? } else { x.mul(&y)? }),
            (Value::Witt(w), Value::Scalar(s)) | (Value::Scalar(s), Value::Witt(w)) => Value::Witt(if op == '+' {
                w.add(&w.ring().scalar_vector(&s))?
            } else {
                w.scale(&s)
            }),
            (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(if op == '+' { r0.add(&x, &y) } else { r0.mul(&x, &y) }),
            (Value::Elem(x), Value::Elem(y)) => Value::Elem(if op == '+' { ar.add(&x, &y) } else { ar.mul(&x, &y) }),
            (Value::Elem(x), Value::Scalar(s)) | (Value::Scalar(s), Value::Elem(x)) => {
                let y = self.ring.alg.scalar(&s);
                Value::Elem(if op == '+' { ar.add(&x, &y) } else { ar.mul(&x, &y) })
            }
            (Value::Ghost(g), Value::Ghost(h)) => {
                if g.ring() != h.ring() {
                    return Err(WittError::ContextMismatch("ghost vectors of different lengths".into()));
                }
                let entries = g
                    .entries()
                    .iter()
                    .zip(h.entries())
                    .map(|(x, y)| if op == '+' { ar.add(x, y) } else { ar.mul(x, y) })
                    .collect();
                Value::Ghost(g.ring().ghost_vector(entries)?)
            }
            (Value::Ghost(g), Value::Scalar(s)) | (Value::Scalar(s), Value::Ghost(g)) => {
                let y = self.ring.alg.scalar(&s);
                let entries = g
                    .entries()
                    .iter()
                    .map(|x| if op == '+' { ar.add(x, &y) } else { ar.mul(x, &y) })
                    .collect();
                Value::Ghost(g.ring().ghost_vector(entries)?)
            }
            _ => return Err(type_err("operands of incompatible kinds (use gh to convert, [a] for Teichmüller lifts)")),
        })
    }
}
