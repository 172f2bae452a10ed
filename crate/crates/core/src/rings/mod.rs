//! Exact coefficient rings.
//!
//! A [`Ring`] is a runtime descriptor that performs arithmetic on plain
//! [`Elem`] values. Elements are always kept in canonical form, so derived
//! equality on [`Elem`] is ring equality.

pub mod algebra;
pub mod fp_poly;
pub mod mpoly;
pub mod parse;

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Result, WittError};
use crate::witt::WittRing;
pub use algebra::{is_prime_element, reduce_mod_power, residue_cardinality, Algebra, BaseRing};
pub use fp_poly::FpPoly;
pub use mpoly::{MPoly, Mono};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Elem {
    /// Integers and residues (canonical in `[0, m)` for quotients of ℤ).
    Int(BigInt),
    /// Elements of `F_p[t]` and its quotients.
    Poly(FpPoly),
    Multi(MPoly),
    /// Components of a Witt vector, when a Witt ring is used as a coefficient ring.
    Witt(Vec<Elem>),
}

impl Elem {
    pub fn int(n: i64) -> Elem {
        Elem::Int(BigInt::from(n))
    }

    pub fn as_int(&self) -> &BigInt {
        match self {
            Elem::Int(n) => n,
            other => panic!("expected an integer element, got {other:?}"),
        }
    }

    pub fn as_poly(&self) -> &FpPoly {
        match self {
            Elem::Poly(f) => f,
            other => panic!("expected a polynomial element, got {other:?}"),
        }
    }

    pub fn as_multi(&self) -> &MPoly {
        match self {
            Elem::Multi(f) => f,
            other => panic!("expected a multivariate element, got {other:?}"),
        }
    }

    pub fn as_witt(&self) -> &[Elem] {
        match self {
            Elem::Witt(c) => c,
            other => panic!("expected a Witt element, got {other:?}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuotientRing {
    pub p: u64,
    pub var: String,
    /// Monic, degree at least 1.
    pub modulus: FpPoly,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiRing {
    pub base: Ring,
    pub vars: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Ring {
    Integers,
    IntegersMod(BigInt),
    PrimeField(u64),
    /// `F_p[var]`
    Poly { p: u64, var: String },
    Quotient(Arc<QuotientRing>),
    Multi(Arc<MultiRing>),
    Witt(Arc<WittRing>),
}

pub(crate) fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn is_prime_big(n: &BigInt) -> bool {
    n.to_u64().is_some_and(is_prime_u64)
}

fn big_mod(a: &BigInt, m: &BigInt) -> BigInt {
    a.mod_floor(m)
}

/// Solves `b·c ≡ a (mod m)`, returning the least nonnegative solution.
fn solve_linear_congruence(a: &BigInt, b: &BigInt, m: &BigInt) -> Option<BigInt> {
    let g = b.gcd(m);
    if !a.mod_floor(&g).is_zero() {
        return None;
    }
    let m2 = m / &g;
    if m2.is_one() {
        return Some(BigInt::zero());
    }
    let b2 = (b / &g).mod_floor(&m2);
    let inv = b2.modinv(&m2)?;
    Some(((a / &g) * inv).mod_floor(&m2))
}

impl Ring {
    pub fn integers_mod(m: impl Into<BigInt>) -> Result<Ring> {
        let m = m.into();
        if m < BigInt::from(2) {
            return Err(WittError::InvalidContext(format!("modulus {m} must be at least 2")));
        }
        Ok(Ring::IntegersMod(m))
    }

    pub fn prime_field(p: u64) -> Result<Ring> {
        if !is_prime_u64(p) {
            return Err(WittError::InvalidContext(format!("{p} is not prime")));
        }
        Ok(Ring::PrimeField(p))
    }

    pub fn poly(p: u64, var: &str) -> Result<Ring> {
        if !is_prime_u64(p) {
            return Err(WittError::InvalidContext(format!("{p} is not prime")));
        }
        Ok(Ring::Poly { p, var: var.to_string() })
    }

    pub fn quotient(p: u64, var: &str, modulus: FpPoly) -> Result<Ring> {
        if !is_prime_u64(p) {
            return Err(WittError::InvalidContext(format!("{p} is not prime")));
        }
        if modulus.degree().unwrap_or(0) == 0 {
            return Err(WittError::InvalidContext("quotient modulus must be nonconstant".into()));
        }
        Ok(Ring::Quotient(Arc::new(QuotientRing {
            p,
            var: var.to_string(),
            modulus: modulus.monic(p),
        })))
    }

    pub fn multi(base: Ring, vars: Vec<String>) -> Result<Ring> {
        match base {
            Ring::Integers | Ring::PrimeField(_) | Ring::Poly { .. } => {}
            ref other => {
                return Err(WittError::InvalidContext(format!(
                    "multivariate base must be Z, F_p or F_p[t], got {other}"
                )))
            }
        }
        let mut seen = std::collections::HashSet::new();
        for v in &vars {
            if !seen.insert(v.as_str()) || base.variable_names().contains(v) {
                return Err(WittError::InvalidContext(format!("duplicate variable {v}")));
            }
        }
        Ok(Ring::Multi(Arc::new(MultiRing { base, vars })))
    }

    /// Polynomial ring over `self` in fresh variables (always a [`Ring::Multi`]).
    pub fn multi_vars(base: Ring, vars: &[&str]) -> Result<Ring> {
        Ring::multi(base, vars.iter().map(|s| s.to_string()).collect())
    }

    pub fn zero(&self) -> Elem {
        match self {
            Ring::Integers | Ring::IntegersMod(_) | Ring::PrimeField(_) => Elem::Int(BigInt::zero()),
            Ring::Poly { .. } | Ring::Quotient(_) => Elem::Poly(FpPoly::zero()),
            Ring::Multi(_) => Elem::Multi(MPoly::zero()),
            Ring::Witt(w) => Elem::Witt(vec![w.alg.ring.zero(); w.ctx.n + 1]),
        }
    }

    pub fn one(&self) -> Elem {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Elem {
        self.from_int(&BigInt::from(n))
    }

    /// Image of an integer under the unique ring map ℤ → self.
    pub fn from_int(&self, n: &BigInt) -> Elem {
        match self {
            Ring::Integers => Elem::Int(n.clone()),
            Ring::IntegersMod(m) => Elem::Int(big_mod(n, m)),
            Ring::PrimeField(p) => Elem::Int(big_mod(n, &BigInt::from(*p))),
            Ring::Poly { p, .. } => {
                Elem::Poly(FpPoly::constant(big_mod(n, &BigInt::from(*p)).to_u64().unwrap(), *p))
            }
            Ring::Quotient(q) => {
                Elem::Poly(FpPoly::constant(big_mod(n, &BigInt::from(q.p)).to_u64().unwrap(), q.p))
            }
            Ring::Multi(mr) => {
                Elem::Multi(MPoly::constant(&mr.base, mr.base.from_int(n), mr.vars.len()))
            }
            Ring::Witt(w) => w.from_int(n),
        }
    }

    pub fn is_zero(&self, a: &Elem) -> bool {
        match a {
            Elem::Int(n) => n.is_zero(),
            Elem::Poly(f) => f.is_zero(),
            Elem::Multi(f) => f.is_empty(),
            Elem::Witt(c) => match self {
                Ring::Witt(w) => c.iter().all(|x| w.alg.ring.is_zero(x)),
                _ => unreachable!("Witt element outside a Witt ring"),
            },
        }
    }

    pub fn is_one(&self, a: &Elem) -> bool {
        *a == self.one()
    }

    pub fn add(&self, a: &Elem, b: &Elem) -> Elem {
        match self {
            Ring::Integers => Elem::Int(a.as_int() + b.as_int()),
            Ring::IntegersMod(m) => Elem::Int(big_mod(&(a.as_int() + b.as_int()), m)),
            Ring::PrimeField(p) => {
                Elem::Int(big_mod(&(a.as_int() + b.as_int()), &BigInt::from(*p)))
            }
            Ring::Poly { p, .. } => Elem::Poly(a.as_poly().add(b.as_poly(), *p)),
            Ring::Quotient(q) => Elem::Poly(a.as_poly().add(b.as_poly(), q.p)),
            Ring::Multi(mr) => Elem::Multi(a.as_multi().add(b.as_multi(), &mr.base)),
            Ring::Witt(w) => w.add_elems(a, b),
        }
    }

    pub fn neg(&self, a: &Elem) -> Elem {
        match self {
            Ring::Integers => Elem::Int(-a.as_int()),
            Ring::IntegersMod(m) => Elem::Int(big_mod(&-a.as_int(), m)),
            Ring::PrimeField(p) => Elem::Int(big_mod(&-a.as_int(), &BigInt::from(*p))),
            Ring::Poly { p, .. } => Elem::Poly(a.as_poly().neg(*p)),
            Ring::Quotient(q) => Elem::Poly(a.as_poly().neg(q.p)),
            Ring::Multi(mr) => Elem::Multi(a.as_multi().neg(&mr.base)),
            Ring::Witt(w) => w.neg_elem(a),
        }
    }

    pub fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        match self {
            Ring::Integers => Elem::Int(a.as_int() - b.as_int()),
            Ring::Multi(mr) => Elem::Multi(a.as_multi().sub(b.as_multi(), &mr.base)),
            _ => self.add(a, &self.neg(b)),
        }
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        match self {
            Ring::Integers => Elem::Int(a.as_int() * b.as_int()),
            Ring::IntegersMod(m) => Elem::Int(big_mod(&(a.as_int() * b.as_int()), m)),
            Ring::PrimeField(p) => {
                Elem::Int(big_mod(&(a.as_int() * b.as_int()), &BigInt::from(*p)))
            }
            Ring::Poly { p, .. } => Elem::Poly(a.as_poly().mul(b.as_poly(), *p)),
            Ring::Quotient(q) => {
                Elem::Poly(a.as_poly().mul(b.as_poly(), q.p).rem(&q.modulus, q.p))
            }
            Ring::Multi(mr) => Elem::Multi(a.as_multi().mul(b.as_multi(), &mr.base)),
            Ring::Witt(w) => w.mul_elems(a, b),
        }
    }

    /// The characteristic, when it is a prime number.
    pub fn prime_characteristic(&self) -> Option<u64> {
        match self {
            Ring::Integers | Ring::Witt(_) => None,
            Ring::IntegersMod(m) => {
                if is_prime_big(m) {
                    m.to_u64()
                } else {
                    None
                }
            }
            Ring::PrimeField(p) | Ring::Poly { p, .. } => Some(*p),
            Ring::Quotient(q) => Some(q.p),
            Ring::Multi(mr) => mr.base.prime_characteristic(),
        }
    }

    /// `a^p` where `p` is the prime characteristic.
    fn frobenius(&self, a: &Elem, p: u64) -> Elem {
        match self {
            Ring::IntegersMod(_) | Ring::PrimeField(_) => a.clone(),
            Ring::Poly { .. } => Elem::Poly(a.as_poly().frobenius(p)),
            Ring::Quotient(q) => Elem::Poly(a.as_poly().frobenius(p).rem(&q.modulus, p)),
            Ring::Multi(mr) => Elem::Multi(a.as_multi().frobenius(&mr.base, p)),
            Ring::Integers | Ring::Witt(_) => unreachable!("no prime characteristic"),
        }
    }

    pub fn pow(&self, a: &Elem, e: u64) -> Elem {
        if e == 0 {
            return self.one();
        }
        if e == 1 {
            return a.clone();
        }
        match self {
            Ring::Integers => return Elem::Int(num_traits::Pow::pow(a.as_int(), e)),
            Ring::IntegersMod(m) => return Elem::Int(a.as_int().modpow(&BigInt::from(e), m)),
            Ring::PrimeField(p) => {
                return Elem::Int(a.as_int().modpow(&BigInt::from(e), &BigInt::from(*p)))
            }
            Ring::Poly { p, .. } => return Elem::Poly(a.as_poly().pow(e, *p)),
            _ => {}
        }
        if self.is_zero(a) {
            return self.zero();
        }
        let char_p = self.prime_characteristic();
        let mut base = a.clone();
        let mut result = self.one();
        let mut e = e;
        while e > 0 {
            if let Some(p) = char_p {
                if e.is_multiple_of(p) {
                    base = self.frobenius(&base, p);
                    e /= p;
                    continue;
                }
            }
            if e & 1 == 1 {
                result = self.mul(&result, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        result
    }

    /// Returns `c` with `b·c = a`, or `DivisionInexact`.
    pub fn exact_div(&self, a: &Elem, b: &Elem) -> Result<Elem> {
        let fail = || WittError::inexact(self.format(a), self.format(b));
        match self {
            Ring::Integers => {
                let (a, b) = (a.as_int(), b.as_int());
                if b.is_zero() {
                    return Err(fail());
                }
                let (q, r) = a.div_rem(b);
                if r.is_zero() {
                    Ok(Elem::Int(q))
                } else {
                    Err(fail())
                }
            }
            Ring::IntegersMod(m) => solve_linear_congruence(a.as_int(), b.as_int(), m)
                .map(Elem::Int)
                .ok_or_else(fail),
            Ring::PrimeField(p) => {
                if b.as_int().is_zero() {
                    return Err(fail());
                }
                solve_linear_congruence(a.as_int(), b.as_int(), &BigInt::from(*p))
                    .map(Elem::Int)
                    .ok_or_else(fail)
            }
            Ring::Poly { p, .. } => {
                let b = b.as_poly();
                if b.is_zero() {
                    return Err(fail());
                }
                let (q, r) = a.as_poly().div_rem(b, *p);
                if r.is_zero() {
                    Ok(Elem::Poly(q))
                } else {
                    Err(fail())
                }
            }
            Ring::Quotient(qr) => {
                let p = qr.p;
                let (a, b) = (a.as_poly(), b.as_poly());
                if b.is_zero() {
                    return if a.is_zero() { Ok(self.zero()) } else { Err(fail()) };
                }
                let g = b.gcd(&qr.modulus, p);
                let (a_g, r) = a.div_rem(&g, p);
                if !r.is_zero() {
                    return Err(fail());
                }
                let m2 = qr.modulus.div_rem(&g, p).0;
                if m2.degree() == Some(0) {
                    return Ok(self.zero());
                }
                let inv = b.div_rem(&g, p).0.inverse_mod(&m2, p).ok_or_else(fail)?;
                Ok(Elem::Poly(a_g.mul(&inv, p).rem(&m2, p)))
            }
            Ring::Multi(mr) => Ok(Elem::Multi(a.as_multi().exact_div(b.as_multi(), &mr.base)?)),
            Ring::Witt(w) => w.exact_div_elems(a, b),
        }
    }

    pub fn is_unit(&self, a: &Elem) -> bool {
        match self {
            Ring::Integers => a.as_int().abs().is_one(),
            Ring::IntegersMod(m) => a.as_int().gcd(m).is_one(),
            Ring::PrimeField(_) => !a.as_int().is_zero(),
            Ring::Poly { .. } => a.as_poly().degree() == Some(0),
            Ring::Quotient(q) => a.as_poly().gcd(&q.modulus, q.p).is_one(),
            Ring::Multi(mr) => a.as_multi().as_constant(&mr.base).is_some_and(|c| mr.base.is_unit(&c)),
            Ring::Witt(_) => self.exact_div(&self.one(), a).is_ok(),
        }
    }

    /// Whether multiplication by `a` is injective.
    pub fn is_nonzerodivisor(&self, a: &Elem) -> bool {
        match self {
            Ring::Integers | Ring::PrimeField(_) | Ring::Poly { .. } => !self.is_zero(a),
            Ring::IntegersMod(_) | Ring::Quotient(_) => self.is_unit(a),
            Ring::Multi(mr) => match a.as_multi().as_constant(&mr.base) {
                Some(c) => mr.base.is_nonzerodivisor(&c),
                // the supported bases are domains
                None => true,
            },
            Ring::Witt(w) => w.is_nonzerodivisor(a),
        }
    }

    /// Every element, for finite rings.
    pub fn elements(&self) -> Option<Vec<Elem>> {
        match self {
            Ring::IntegersMod(m) => {
                let m = m.to_u64()?;
                Some((0..m).map(|k| Elem::Int(BigInt::from(k))).collect())
            }
            Ring::PrimeField(p) => Some((0..*p).map(|k| Elem::Int(BigInt::from(k))).collect()),
            Ring::Quotient(q) => Some(
                FpPoly::all_below_degree(q.modulus.degree().unwrap(), q.p)
                    .into_iter()
                    .map(Elem::Poly)
                    .collect(),
            ),
            _ => None,
        }
    }

    pub fn cardinality(&self) -> Option<u64> {
        match self {
            Ring::IntegersMod(m) => m.to_u64(),
            Ring::PrimeField(p) => Some(*p),
            Ring::Quotient(q) => q.p.checked_pow(q.modulus.degree().unwrap() as u32),
            _ => None,
        }
    }

    /// Names of the polynomial variables visible in element syntax.
    pub fn variable_names(&self) -> Vec<String> {
        match self {
            Ring::Poly { var, .. } => vec![var.clone()],
            Ring::Quotient(q) => vec![q.var.clone()],
            Ring::Multi(mr) => {
                let mut v = mr.vars.clone();
                v.extend(mr.base.variable_names());
                v
            }
            _ => Vec::new(),
        }
    }

    /// The element named by a variable.
    pub fn variable(&self, name: &str) -> Option<Elem> {
        match self {
            Ring::Poly { var, .. } if var == name => Some(Elem::Poly(FpPoly::monomial(1))),
            Ring::Quotient(q) if q.var == name => {
                Some(Elem::Poly(FpPoly::monomial(1).rem(&q.modulus, q.p)))
            }
            Ring::Multi(mr) => {
                if let Some(i) = mr.vars.iter().position(|v| v == name) {
                    let one = mr.base.one();
                    return Some(Elem::Multi(MPoly::monomial(
                        &mr.base,
                        Mono::var(mr.vars.len(), i),
                        one,
                    )));
                }
                let c = mr.base.variable(name)?;
                Some(Elem::Multi(MPoly::constant(&mr.base, c, mr.vars.len())))
            }
            _ => None,
        }
    }

    /// The `i`-th generator of a multivariate ring.
    pub fn gen(&self, i: usize) -> Elem {
        match self {
            Ring::Multi(mr) => Elem::Multi(MPoly::monomial(
                &mr.base,
                Mono::var(mr.vars.len(), i),
                mr.base.one(),
            )),
            Ring::Poly { .. } if i == 0 => Elem::Poly(FpPoly::monomial(1)),
            other => panic!("{other} has no generator {i}"),
        }
    }

    pub fn multi_ring(&self) -> Option<&MultiRing> {
        match self {
            Ring::Multi(mr) => Some(mr),
            _ => None,
        }
    }

    /// Embeds a coefficient of a multivariate ring as a constant polynomial.
    pub fn constant(&self, c: Elem) -> Elem {
        match self {
            Ring::Multi(mr) => Elem::Multi(MPoly::constant(&mr.base, c, mr.vars.len())),
            _ => c,
        }
    }

    /// Canonical representative of `a` modulo the principal ideal `(h)`.
    pub fn reduce_mod_principal(&self, a: &Elem, h: &Elem) -> Result<Elem> {
        Ok(match self {
            Ring::Integers => {
                let h = h.as_int().abs();
                if h.is_zero() {
                    a.clone()
                } else {
                    Elem::Int(a.as_int().mod_floor(&h))
                }
            }
            Ring::IntegersMod(m) => Elem::Int(a.as_int().mod_floor(&h.as_int().gcd(m))),
            Ring::PrimeField(p) => {
                Elem::Int(a.as_int().mod_floor(&h.as_int().gcd(&BigInt::from(*p))))
            }
            Ring::Poly { p, .. } => {
                if h.as_poly().is_zero() {
                    a.clone()
                } else {
                    Elem::Poly(a.as_poly().rem(h.as_poly(), *p))
                }
            }
            Ring::Quotient(q) => {
                let g = h.as_poly().gcd(&q.modulus, q.p);
                Elem::Poly(a.as_poly().rem(&g, q.p))
            }
            Ring::Multi(mr) => {
                let hc = h.as_multi().as_constant(&mr.base).ok_or_else(|| {
                    WittError::InvalidContext("reduction modulo a nonconstant polynomial".into())
                })?;
                let terms = a
                    .as_multi()
                    .terms()
                    .iter()
                    .map(|(m, c)| Ok((m.clone(), mr.base.reduce_mod_principal(c, &hc)?)))
                    .collect::<Result<Vec<_>>>()?;
                Elem::Multi(MPoly::from_terms(&mr.base, terms))
            }
            Ring::Witt(_) => {
                return Err(WittError::InvalidContext(
                    "reduction of Witt-ring coefficients is not supported".into(),
                ))
            }
        })
    }

    /// Checks that `a` is a canonical element of this ring.
    pub fn contains(&self, a: &Elem) -> bool {
        match (self, a) {
            (Ring::Integers, Elem::Int(_)) => true,
            (Ring::IntegersMod(m), Elem::Int(n)) => !n.is_negative() && n < m,
            (Ring::PrimeField(p), Elem::Int(n)) => !n.is_negative() && *n < BigInt::from(*p),
            (Ring::Poly { p, .. }, Elem::Poly(f)) => f.coeffs().iter().all(|c| c < p),
            (Ring::Quotient(q), Elem::Poly(f)) => {
                f.coeffs().iter().all(|c| *c < q.p) && f.degree() < q.modulus.degree()
            }
            (Ring::Multi(mr), Elem::Multi(f)) => f.terms().iter().all(|(m, c)| {
                m.0.len() == mr.vars.len() && mr.base.contains(c) && !mr.base.is_zero(c)
            }),
            (Ring::Witt(w), Elem::Witt(c)) => {
                c.len() == w.ctx.n + 1 && c.iter().all(|x| w.alg.ring.contains(x))
            }
            _ => false,
        }
    }

    pub fn format(&self, a: &Elem) -> String {
        match self {
            Ring::Integers | Ring::IntegersMod(_) | Ring::PrimeField(_) => a.as_int().to_string(),
            Ring::Poly { var, .. } => a.as_poly().format(var),
            Ring::Quotient(q) => a.as_poly().format(&q.var),
            Ring::Multi(mr) => format_multi(mr, a.as_multi()),
            Ring::Witt(w) => {
                let parts: Vec<String> =
                    a.as_witt().iter().map(|c| w.alg.ring.format(c)).collect();
                format!("({})", parts.join(","))
            }
        }
    }

    pub fn parse(&self, s: &str) -> Result<Elem> {
        parse::parse_element(self, s)
    }
}

fn format_multi(mr: &MultiRing, f: &MPoly) -> String {
    if f.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (idx, (m, c)) in f.terms().iter().enumerate() {
        let ms = m.format(&mr.vars);
        let (negative, cs) = match (&mr.base, c) {
            (Ring::Integers, Elem::Int(n)) => (n.is_negative(), n.abs().to_string()),
            _ => (false, mr.base.format(c)),
        };
        let cs = if cs.contains(' ') && !ms.is_empty() { format!("({cs})") } else { cs };
        let body = match (cs.as_str(), ms.is_empty()) {
            (_, true) => cs.clone(),
            ("1", false) => ms,
            (_, false) => format!("{cs}*{ms}"),
        };
        match (idx, negative) {
            (0, true) => out.push_str(&format!("-{body}")),
            (0, false) => out.push_str(&body),
            (_, true) => out.push_str(&format!(" - {body}")),
            (_, false) => out.push_str(&format!(" + {body}")),
        }
    }
    out
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Integers => write!(f, "Z"),
            Ring::IntegersMod(m) => write!(f, "Z/{m}"),
            Ring::PrimeField(p) => write!(f, "F{p}"),
            Ring::Poly { p, var } => write!(f, "F{p}[{var}]"),
            Ring::Quotient(q) => {
                write!(f, "F{}[{}]/({})", q.p, q.var, q.modulus.format(&q.var))
            }
            Ring::Multi(mr) => write!(f, "{}[{}]", mr.base, mr.vars.join(",")),
            Ring::Witt(w) => write!(f, "W_{}({})", w.ctx.n, w.alg.ring),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: i64) -> Elem {
        Elem::int(n)
    }

    #[test]
    fn integer_exact_division() {
        let r = Ring::Integers;
        assert_eq!(r.exact_div(&z(6), &z(3)).unwrap(), z(2));
        assert!(matches!(r.exact_div(&z(5), &z(2)), Err(WittError::DivisionInexact { .. })));
        assert!(r.exact_div(&z(5), &z(0)).is_err());
    }

    #[test]
    fn polynomial_exact_division() {
        let r = Ring::poly(2, "t").unwrap();
        let a = r.parse("t^2 + t").unwrap();
        let b = r.parse("t").unwrap();
        assert_eq!(r.exact_div(&a, &b).unwrap(), r.parse("t + 1").unwrap());
    }

    #[test]
    fn modular_exact_division() {
        let r = Ring::integers_mod(8).unwrap();
        let c = r.exact_div(&z(6), &z(2)).unwrap();
        assert_eq!(r.mul(&c, &z(2)), z(6));
        assert!(r.exact_div(&z(3), &z(2)).is_err());
    }

    #[test]
    fn quotient_exact_division() {
        let r = Ring::quotient(2, "t", FpPoly::monomial(2)).unwrap();
        let t = r.parse("t").unwrap();
        // t / t in F2[t]/(t^2) has the solutions 1 and 1 + t
        let c = r.exact_div(&t, &t).unwrap();
        assert_eq!(r.mul(&c, &t), t);
        assert!(r.exact_div(&r.one(), &t).is_err());
    }

    #[test]
    fn multivariate_exact_division() {
        let r = Ring::multi_vars(Ring::Integers, &["x", "y"]).unwrap();
        let a = r.parse("x^2 - y^2").unwrap();
        let b = r.parse("x + y").unwrap();
        assert_eq!(r.exact_div(&a, &b).unwrap(), r.parse("x - y").unwrap());
        assert!(r.exact_div(&r.parse("x^2 + 1").unwrap(), &b).is_err());
        assert!(r.exact_div(&r.parse("3*x + 1").unwrap(), &r.from_i64(3)).is_err());
    }

    #[test]
    fn frobenius_power_in_characteristic_p() {
        let r = Ring::multi_vars(Ring::poly(3, "t").unwrap(), &["x", "y"]).unwrap();
        let f = r.parse("t*x + y + 1").unwrap();
        let mut slow = r.one();
        for _ in 0..9 {
            slow = r.mul(&slow, &f);
        }
        assert_eq!(r.pow(&f, 9), slow);
    }

    #[test]
    fn formatting_round_trips() {
        let r = Ring::multi_vars(Ring::Integers, &["a0", "b0"]).unwrap();
        let f = r.parse("a0 + b0 - a0*b0").unwrap();
        assert_eq!(r.format(&f), "-a0*b0 + a0 + b0");
        assert_eq!(r.parse(&r.format(&f)).unwrap(), f);
        let s = Ring::multi_vars(Ring::poly(2, "t").unwrap(), &["x"]).unwrap();
        let g = s.parse("(t + 1)*x^2 + t").unwrap();
        assert_eq!(s.format(&g), "(t + 1)*x^2 + t");
    }
}
