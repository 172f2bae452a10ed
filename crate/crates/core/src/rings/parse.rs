//! Text syntax for ring elements (`3*t^2 + 1`) and ring descriptors
//! (`Z`, `Z/4`, `F3`, `F2[t]`, `F2[t]/(t^2)`, `Z[x,y]`, `F3[t][x]`).

use num_bigint::BigInt;

use super::{Elem, FpPoly, Ring};
use crate::error::{Result, WittError};

#[derive(Debug, Clone, PartialEq)]
pub(crate) enum Tok {
    Num(BigInt),
    Ident(String),
    Sym(char),
}

pub(crate) fn tokenize(s: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            out.push((start, Tok::Num(text.parse().unwrap())));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((start, Tok::Ident(chars[start..i].iter().collect())));
        } else if "+-*^()[]<>,/".contains(c) || c == '−' {
            out.push((i, Tok::Sym(if c == '−' { '-' } else { c })));
            i += 1;
        } else {
            return Err(WittError::parse(i, format!("unexpected character '{c}'")));
        }
    }
    Ok(out)
}

struct ElemParser<'a> {
    ring: &'a Ring,
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl ElemParser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|(o, _)| *o).unwrap_or(self.end)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Elem> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                let t = self.term()?;
                acc = self.ring.add(&acc, &t);
            } else if self.eat('-') {
                let t = self.term()?;
                acc = self.ring.sub(&acc, &t);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Elem> {
        let mut acc = self.unary()?;
        while self.eat('*') {
            let f = self.unary()?;
            acc = self.ring.mul(&acc, &f);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Elem> {
        if self.eat('-') {
            let v = self.unary()?;
            return Ok(self.ring.neg(&v));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Elem> {
        let base = self.atom()?;
        if self.eat('^') {
            let at = self.offset();
            match self.toks.get(self.pos).cloned() {
                Some((_, Tok::Num(n))) => {
                    self.pos += 1;
                    let e: u64 = n
                        .try_into()
                        .map_err(|_| WittError::parse(at, "exponent too large"))?;
                    return Ok(self.ring.pow(&base, e));
                }
                _ => return Err(WittError::parse(at, "expected a nonnegative exponent")),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Elem> {
        let at = self.offset();
        match self.toks.get(self.pos).cloned() {
            Some((_, Tok::Num(n))) => {
                self.pos += 1;
                Ok(self.ring.from_int(&n))
            }
            Some((_, Tok::Ident(name))) => {
                self.pos += 1;
                // applied names such as theta_1(x)
                if let (Some((_, Tok::Sym('('))), Some((_, Tok::Ident(arg))), Some((_, Tok::Sym(')')))) = (
                    self.toks.get(self.pos),
                    self.toks.get(self.pos + 1),
                    self.toks.get(self.pos + 2),
                ) {
                    if let Some(v) = self.ring.variable(&format!("{name}({arg})")) {
                        self.pos += 3;
                        return Ok(v);
                    }
                }
                self.ring
                    .variable(&name)
                    .ok_or_else(|| WittError::parse(at, format!("unknown variable '{name}'")))
            }
            Some((_, Tok::Sym('('))) => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(')') {
                    return Err(WittError::parse(self.offset(), "expected ')'"));
                }
                Ok(v)
            }
            Some(_) => Err(WittError::parse(at, "unexpected token")),
            None => Err(WittError::parse(at, "unexpected end of input")),
        }
    }
}

/// Parses an element written in polynomial syntax.
pub fn parse_element(ring: &Ring, s: &str) -> Result<Elem> {
    let toks = tokenize(s)?;
    let mut p = ElemParser { ring, toks, pos: 0, end: s.chars().count() };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(WittError::parse(p.offset(), "trailing input"));
    }
    Ok(v)
}

/// Parses a ring descriptor.
pub fn parse_ring(s: &str) -> Result<Ring> {
    let s = s.trim();
    let err = |msg: &str| WittError::parse(0, format!("{msg}: '{s}'"));
    let (head, mut rest) = split_head(s);
    let mut ring = match head {
        "Z" | "ZZ" => Ring::Integers,
        h if h.starts_with("GF(") && h.ends_with(')') => {
            let p: u64 = h[3..h.len() - 1].parse().map_err(|_| err("bad field size"))?;
            Ring::prime_field(p)?
        }
        h if h.starts_with('F') => {
            let p: u64 = h[1..].parse().map_err(|_| err("bad field size"))?;
            Ring::prime_field(p)?
        }
        _ => return Err(err("unknown ring")),
    };
    if let (Ring::Integers, Some(m)) = (&ring, rest.strip_prefix('/')) {
        if !m.starts_with('(') {
            let m: BigInt = m.trim().parse().map_err(|_| err("bad modulus"))?;
            return Ring::integers_mod(m);
        }
    }
    while let Some(r) = rest.strip_prefix('[') {
        let close = r.find(']').ok_or_else(|| err("missing ']'"))?;
        let vars: Vec<String> = r[..close].split(',').map(|v| v.trim().to_string()).collect();
        if vars.iter().any(|v| v.is_empty() || !v.chars().all(|c| c.is_alphanumeric() || c == '_'))
        {
            return Err(err("bad variable list"));
        }
        rest = &r[close + 1..];
        ring = match (&ring, vars.len()) {
            (Ring::PrimeField(p), 1) => Ring::poly(*p, &vars[0])?,
            _ => Ring::multi(ring, vars)?,
        };
    }
    if let Some(m) = rest.strip_prefix('/') {
        let m = m.trim();
        let inner = m
            .strip_prefix('(')
            .and_then(|x| x.strip_suffix(')'))
            .ok_or_else(|| err("quotient modulus must be parenthesized"))?;
        let Ring::Poly { p, var } = &ring else {
            return Err(err("quotients are supported only for F_p[t]"));
        };
        let f = parse_element(&ring, inner)?;
        return Ring::quotient(*p, var, f.as_poly().clone());
    }
    if !rest.trim().is_empty() {
        return Err(err("trailing input"));
    }
    Ok(ring)
}

fn split_head(s: &str) -> (&str, &str) {
    if s.starts_with("GF(") {
        let end = s.find(')').map(|i| i + 1).unwrap_or(s.len());
        return s.split_at(end);
    }
    let end = s.find(['[', '/']).unwrap_or(s.len());
    (s[..end].trim(), &s[end..])
}

/// Parses a polynomial over `F_p` in the given variable name.
pub fn parse_fp_poly(p: u64, var: &str, s: &str) -> Result<FpPoly> {
    let r = Ring::poly(p, var)?;
    Ok(parse_element(&r, s)?.as_poly().clone())
}
