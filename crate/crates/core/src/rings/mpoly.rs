//! Sparse multivariate polynomials with coefficients in an arbitrary [`Ring`].
//!
//! Terms are kept sorted by descending graded-lexicographic order with no zero
//! coefficients, so structural equality is mathematical equality.

use std::cmp::Ordering;
use std::collections::HashMap;

use super::{Elem, Ring};
use crate::error::{Result, WittError};

/// Exponent vector; its length is the variable count of the owning ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mono(pub Box<[u32]>);

impl Mono {
    pub fn one(nvars: usize) -> Self {
        Mono(vec![0; nvars].into_boxed_slice())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Mono(e.into_boxed_slice())
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        Mono(self.0.iter().zip(other.0.iter()).map(|(a, b)| a + b).collect())
    }

    pub fn scale(&self, k: u32) -> Mono {
        Mono(self.0.iter().map(|a| a * k).collect())
    }

    pub fn divide(&self, other: &Mono) -> Option<Mono> {
        self.0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(|v| Mono(v.into_boxed_slice()))
    }

    /// Graded lexicographic comparison (total degree first, then the first
    /// variable with a larger exponent wins).
    pub fn grlex_cmp(&self, other: &Mono) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }

    pub fn format(&self, vars: &[String]) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .zip(vars)
            .filter(|(e, _)| **e > 0)
            .map(|(&e, v)| if e == 1 { v.clone() } else { format!("{v}^{e}") })
            .collect();
        parts.join("*")
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MPoly {
    terms: Vec<(Mono, Elem)>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly { terms: Vec::new() }
    }

    pub fn terms(&self) -> &[(Mono, Elem)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Builds a canonical polynomial from arbitrary terms (duplicates are summed).
    pub fn from_terms(base: &Ring, terms: impl IntoIterator<Item = (Mono, Elem)>) -> Self {
        let mut acc: HashMap<Mono, Elem> = HashMap::new();
        for (m, c) in terms {
            accumulate(base, &mut acc, m, c);
        }
        Self::from_map(base, acc)
    }

    fn from_map(base: &Ring, acc: HashMap<Mono, Elem>) -> Self {
        let mut terms: Vec<(Mono, Elem)> =
            acc.into_iter().filter(|(_, c)| !base.is_zero(c)).collect();
        terms.sort_unstable_by(|a, b| b.0.grlex_cmp(&a.0));
        MPoly { terms }
    }

    pub fn constant(base: &Ring, c: Elem, nvars: usize) -> Self {
        if base.is_zero(&c) {
            return MPoly::zero();
        }
        MPoly { terms: vec![(Mono::one(nvars), c)] }
    }

    pub fn monomial(base: &Ring, m: Mono, c: Elem) -> Self {
        if base.is_zero(&c) {
            return MPoly::zero();
        }
        MPoly { terms: vec![(m, c)] }
    }

    /// The constant coefficient if the polynomial is constant.
    pub fn as_constant(&self, base: &Ring) -> Option<Elem> {
        match self.terms.as_slice() {
            [] => Some(base.zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn add(&self, other: &MPoly, base: &Ring) -> MPoly {
        // merge of two descending sorted lists
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            match ma.grlex_cmp(mb) {
                Ordering::Greater => {
                    out.push((ma.clone(), ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((mb.clone(), cb.clone()));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = base.add(ca, cb);
                    if !base.is_zero(&c) {
                        out.push((ma.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        MPoly { terms: out }
    }

    pub fn neg(&self, base: &Ring) -> MPoly {
        MPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), base.neg(c))).collect() }
    }

    pub fn sub(&self, other: &MPoly, base: &Ring) -> MPoly {
        self.add(&other.neg(base), base)
    }

    pub fn scale(&self, c: &Elem, base: &Ring) -> MPoly {
        let terms = self
            .terms
            .iter()
            .map(|(m, a)| (m.clone(), base.mul(a, c)))
            .filter(|(_, a)| !base.is_zero(a))
            .collect();
        MPoly { terms }
    }

    pub fn mul(&self, other: &MPoly, base: &Ring) -> MPoly {
        if self.is_empty() || other.is_empty() {
            return MPoly::zero();
        }
        if self.terms.len() == 1 || other.terms.len() == 1 {
            let (single, many) =
                if self.terms.len() == 1 { (self, other) } else { (other, self) };
            let (sm, sc) = &single.terms[0];
            // monomial multiplication preserves the order
            let terms = many
                .terms
                .iter()
                .map(|(m, c)| (m.mul(sm), base.mul(c, sc)))
                .filter(|(_, c)| !base.is_zero(c))
                .collect();
            return MPoly { terms };
        }
        let mut acc: HashMap<Mono, Elem> =
            HashMap::with_capacity(self.terms.len().max(other.terms.len()) * 4);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                accumulate(base, &mut acc, ma.mul(mb), base.mul(ca, cb));
            }
        }
        Self::from_map(base, acc)
    }

    /// `f ↦ f^p` in characteristic `p`, computed termwise.
    pub fn frobenius(&self, base: &Ring, p: u64) -> MPoly {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.scale(p as u32), base.pow(c, p)))
            .filter(|(_, c)| !base.is_zero(c))
            .collect();
        // scaling exponents by p preserves grlex order
        MPoly { terms }
    }

    pub fn leading(&self) -> Option<&(Mono, Elem)> {
        self.terms.first()
    }

    /// Exact division; the divisor may be a scalar or a general polynomial over a
    /// base integral domain.
    pub fn exact_div(&self, divisor: &MPoly, base: &Ring) -> Result<MPoly> {
        if divisor.is_empty() {
            return Err(WittError::inexact("polynomial", "0"));
        }
        if let [(m, c)] = divisor.terms.as_slice() {
            if m.is_one() {
                let terms = self
                    .terms
                    .iter()
                    .map(|(mm, a)| base.exact_div(a, c).map(|q| (mm.clone(), q)))
                    .collect::<Result<Vec<_>>>()?;
                return Ok(MPoly { terms });
            }
        }
        let (lm, lc) = divisor.leading().unwrap().clone();
        let mut rem = self.clone();
        let mut quotient = Vec::new();
        while let Some((rm, rc)) = rem.leading().cloned() {
            let qm = rm
                .divide(&lm)
                .ok_or_else(|| WittError::inexact("polynomial", "polynomial"))?;
            let qc = base.exact_div(&rc, &lc)?;
            let step = MPoly { terms: vec![(qm.clone(), qc.clone())] };
            rem = rem.sub(&step.mul(divisor, base), base);
            quotient.push((qm, qc));
        }
        Ok(MPoly::from_terms(base, quotient))
    }

    pub fn total_degree(&self) -> u64 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    /// Degree in variable `i`.
    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.iter().map(|(m, _)| m.0[i]).max().unwrap_or(0)
    }

    pub fn map_coeffs(&self, base: &Ring, f: impl Fn(&Elem) -> Elem) -> MPoly {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), f(c)))
            .filter(|(_, c)| !base.is_zero(c))
            .collect();
        MPoly { terms }
    }
}

fn accumulate(base: &Ring, acc: &mut HashMap<Mono, Elem>, m: Mono, c: Elem) {
    use std::collections::hash_map::Entry;
    match acc.entry(m) {
        Entry::Occupied(mut e) => {
            let s = base.add(e.get(), &c);
            *e.get_mut() = s;
        }
        Entry::Vacant(e) => {
            e.insert(c);
        }
    }
}

/// Evaluates `f` at `values` inside `target`, mapping each coefficient with
/// `coeff`. Powers of each variable are cached.
pub fn evaluate(
    f: &MPoly,
    target: &Ring,
    values: &[Elem],
    coeff: impl Fn(&Elem) -> Elem,
) -> Elem {
    let mut cache: HashMap<(usize, u32), Elem> = HashMap::new();
    let mut total = target.zero();
    for (m, c) in f.terms() {
        let mut term = coeff(c);
        for (i, &e) in m.0.iter().enumerate() {
            if e == 0 || target.is_zero(&term) {
                continue;
            }
            let pw = cache
                .entry((i, e))
                .or_insert_with(|| target.pow(&values[i], e as u64))
                .clone();
            term = target.mul(&term, &pw);
        }
        total = target.add(&total, &term);
    }
    total
}
