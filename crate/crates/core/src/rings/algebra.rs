//! Base contexts `R₀ ∈ {ℤ, F_p[t]}` and `R₀`-algebra structures.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use super::{is_prime_u64, Elem, FpPoly, MPoly, Mono, Ring};
use crate::error::{Result, WittError};
use crate::witt::WittRing;

/// The ring of scalars `R₀` over which Witt functors are defined.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BaseRing {
    Integers,
    /// `F_p[t]`
    FpT(u64),
}

impl BaseRing {
    pub fn fpt(p: u64) -> Result<BaseRing> {
        if !is_prime_u64(p) {
            return Err(WittError::InvalidContext(format!("{p} is not prime")));
        }
        Ok(BaseRing::FpT(p))
    }

    pub fn ring(&self) -> Ring {
        match self {
            BaseRing::Integers => Ring::Integers,
            BaseRing::FpT(p) => Ring::Poly { p: *p, var: "t".into() },
        }
    }

    /// Accepts `Z`, `Fp[t]:p` and `F<p>[t]`.
    pub fn parse(s: &str) -> Result<BaseRing> {
        let s = s.trim();
        if s == "Z" || s == "ZZ" {
            return Ok(BaseRing::Integers);
        }
        let p = if let Some(p) = s.strip_prefix("Fp[t]:") {
            p
        } else if let Some(p) = s.strip_prefix('F').and_then(|r| r.strip_suffix("[t]")) {
            p
        } else {
            return Err(WittError::parse(0, format!("unknown base '{s}' (use Z or Fp[t]:p)")));
        };
        let p: u64 = p.parse().map_err(|_| WittError::parse(0, format!("bad prime in '{s}'")))?;
        BaseRing::fpt(p)
    }

    pub fn parse_element(&self, s: &str) -> Result<Elem> {
        self.ring().parse(s)
    }

    pub fn format(&self, a: &Elem) -> String {
        self.ring().format(a)
    }

    pub fn is_unit(&self, a: &Elem) -> bool {
        self.ring().is_unit(a)
    }
}

impl fmt::Display for BaseRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseRing::Integers => write!(f, "Z"),
            BaseRing::FpT(p) => write!(f, "F{p}[t]"),
        }
    }
}

/// Whether `(π)` is a maximal ideal of `R₀` with finite residue field.
pub fn is_prime_element(base: &BaseRing, pi: &Elem) -> bool {
    match (base, pi) {
        (BaseRing::Integers, Elem::Int(n)) => n.abs().to_u64().is_some_and(is_prime_u64),
        (BaseRing::FpT(p), Elem::Poly(f)) => f.is_irreducible(*p),
        _ => false,
    }
}

/// `|R₀/(π)|`
pub fn residue_cardinality(base: &BaseRing, pi: &Elem) -> Result<u64> {
    if !is_prime_element(base, pi) {
        return Err(WittError::NotPrimeElement { element: base.format(pi), ring: base.to_string() });
    }
    match base {
        BaseRing::Integers => Ok(pi.as_int().abs().to_u64().unwrap()),
        BaseRing::FpT(p) => {
            let d = pi.as_poly().degree().unwrap() as u32;
            p.checked_pow(d).ok_or_else(|| {
                WittError::InvalidContext("residue field too large".into())
            })
        }
    }
}

/// Canonical representative of `a` modulo `π^k A`.
pub fn reduce_mod_power(a: &Elem, pi: &Elem, k: u32, alg: &Algebra) -> Result<Elem> {
    if k == 0 {
        return Ok(alg.ring.zero());
    }
    let h = alg.ring.pow(&alg.scalar(pi), k as u64);
    alg.ring.reduce_mod_principal(a, &h)
}

/// An `R₀`-algebra: a coefficient ring together with its structure map.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Algebra {
    pub base: BaseRing,
    pub ring: Ring,
    /// Image of `t` when `R₀ = F_p[t]`.
    pub t_image: Option<Elem>,
}

impl Algebra {
    pub fn over_integers(ring: Ring) -> Algebra {
        Algebra { base: BaseRing::Integers, ring, t_image: None }
    }

    pub fn over_fpt(p: u64, ring: Ring, t_image: Elem) -> Result<Algebra> {
        if ring.prime_characteristic() != Some(p) && !matches!(ring, Ring::Witt(_)) {
            return Err(WittError::InvalidContext(format!(
                "{ring} is not an algebra over F{p}[t]"
            )));
        }
        if !ring.contains(&t_image) {
            return Err(WittError::InvalidContext("image of t is not an element".into()));
        }
        Ok(Algebra { base: BaseRing::FpT(p), ring, t_image: Some(t_image) })
    }

    /// `R₀` as an algebra over itself.
    pub fn base_itself(base: &BaseRing) -> Algebra {
        match base {
            BaseRing::Integers => Algebra::over_integers(Ring::Integers),
            BaseRing::FpT(_) => Algebra {
                base: base.clone(),
                ring: base.ring(),
                t_image: Some(Elem::Poly(FpPoly::monomial(1))),
            },
        }
    }

    /// Structure map chosen by convention: over `F_p[t]`, `t` maps to the ring's
    /// variable named `t` when there is one and to `0` otherwise.
    pub fn new(base: &BaseRing, ring: Ring) -> Result<Algebra> {
        match base {
            BaseRing::Integers => Ok(Algebra::over_integers(ring)),
            BaseRing::FpT(p) => {
                let t = ring.variable("t").unwrap_or_else(|| ring.zero());
                Algebra::over_fpt(*p, ring, t)
            }
        }
    }

    /// Polynomial ring over `R₀` in the given variables, as an `R₀`-algebra.
    pub fn polynomial(base: &BaseRing, vars: Vec<String>) -> Result<Algebra> {
        let ring = Ring::multi(base.ring(), vars)?;
        Ok(match base {
            BaseRing::Integers => Algebra::over_integers(ring),
            BaseRing::FpT(_) => {
                let t = ring.variable("t").unwrap();
                Algebra { base: base.clone(), ring, t_image: Some(t) }
            }
        })
    }

    /// The algebra `W(A)` for a Witt ring over this algebra.
    pub fn witt(ring: Arc<WittRing>) -> Algebra {
        let base = ring.ctx.base.clone();
        let t_image = match &base {
            BaseRing::Integers => None,
            BaseRing::FpT(_) => Some(ring.scalar(&Elem::Poly(FpPoly::monomial(1)))),
        };
        Algebra { base, ring: Ring::Witt(ring), t_image }
    }

    /// Image of `r ∈ R₀` under the structure map.
    pub fn scalar(&self, r: &Elem) -> Elem {
        match &self.base {
            BaseRing::Integers => self.ring.from_int(r.as_int()),
            BaseRing::FpT(_) => {
                let t = self.t_image.as_ref().expect("F_p[t]-algebra without image of t");
                let mut acc = self.ring.zero();
                for &c in r.as_poly().coeffs().iter().rev() {
                    acc = self.ring.mul(&acc, t);
                    acc = self.ring.add(&acc, &self.ring.from_i64(c as i64));
                }
                acc
            }
        }
    }

    /// Whether multiplication by `π` is injective on the algebra.
    pub fn is_torsion_free(&self, pi: &Elem) -> bool {
        self.ring.is_nonzerodivisor(&self.scalar(pi))
    }

    /// A torsion-free algebra surjecting onto this one, when one is known.
    pub fn cover(&self) -> Option<Algebra> {
        match (&self.base, &self.ring) {
            (BaseRing::Integers, Ring::IntegersMod(_) | Ring::PrimeField(_)) => {
                Some(Algebra::over_integers(Ring::Integers))
            }
            (BaseRing::Integers, Ring::Poly { var, .. }) => {
                Some(Algebra::over_integers(Ring::multi(Ring::Integers, vec![var.clone()]).ok()?))
            }
            (BaseRing::Integers, Ring::Quotient(q)) => Some(Algebra::over_integers(
                Ring::multi(Ring::Integers, vec![q.var.clone()]).ok()?,
            )),
            (BaseRing::Integers, Ring::Multi(mr)) if matches!(mr.base, Ring::PrimeField(_)) => {
                Some(Algebra::over_integers(Ring::multi(Ring::Integers, mr.vars.clone()).ok()?))
            }
            (BaseRing::FpT(_), Ring::PrimeField(_)) => Some(Algebra::base_itself(&self.base)),
            (BaseRing::FpT(p), Ring::Quotient(q)) => {
                let ring = Ring::Poly { p: *p, var: q.var.clone() };
                let t = self.t_image.clone()?;
                Some(Algebra { base: self.base.clone(), ring, t_image: Some(t) })
            }
            _ => None,
        }
    }

    /// Lifts an element to [`Algebra::cover`].
    pub fn lift(&self, a: &Elem) -> Elem {
        match (&self.base, &self.ring) {
            (BaseRing::Integers, Ring::IntegersMod(_) | Ring::PrimeField(_)) => a.clone(),
            (BaseRing::Integers, Ring::Poly { .. } | Ring::Quotient(_)) => {
                let base = Ring::Integers;
                let terms = a.as_poly().coeffs().iter().enumerate().map(|(i, &c)| {
                    (Mono(vec![i as u32].into_boxed_slice()), Elem::Int(BigInt::from(c)))
                });
                Elem::Multi(MPoly::from_terms(&base, terms))
            }
            (BaseRing::Integers, Ring::Multi(_)) => Elem::Multi(
                a.as_multi().map_coeffs(&Ring::Integers, |c| c.clone()),
            ),
            (BaseRing::FpT(p), Ring::PrimeField(_)) => {
                Elem::Poly(FpPoly::constant(a.as_int().to_u64().unwrap(), *p))
            }
            (BaseRing::FpT(_), Ring::Quotient(_)) => a.clone(),
            _ => panic!("no cover for {}", self.ring),
        }
    }

    /// Maps an element of [`Algebra::cover`] down to this algebra.
    pub fn reduce_from_cover(&self, b: &Elem) -> Elem {
        match (&self.base, &self.ring) {
            (BaseRing::Integers, Ring::IntegersMod(_) | Ring::PrimeField(_)) => {
                self.ring.from_int(b.as_int())
            }
            (BaseRing::Integers, Ring::Poly { .. } | Ring::Quotient(_)) => {
                let mut acc = self.ring.zero();
                let x = self.ring.variable(&self.ring.variable_names()[0]).unwrap();
                for (m, c) in b.as_multi().terms() {
                    let term = self.ring.mul(
                        &self.ring.from_int(c.as_int()),
                        &self.ring.pow(&x, m.0[0] as u64),
                    );
                    acc = self.ring.add(&acc, &term);
                }
                acc
            }
            (BaseRing::Integers, Ring::Multi(mr)) => Elem::Multi(
                b.as_multi().map_coeffs(&mr.base, |c| mr.base.from_int(c.as_int())),
            ),
            (BaseRing::FpT(p), Ring::PrimeField(_)) => {
                let c = self.t_image.as_ref().unwrap().as_int().to_u64().unwrap();
                Elem::Int(BigInt::from(b.as_poly().eval(c, *p)))
            }
            (BaseRing::FpT(_), Ring::Quotient(q)) => Elem::Poly(b.as_poly().rem(&q.modulus, q.p)),
            _ => panic!("no cover for {}", self.ring),
        }
    }
}
