//! Single-prime truncated Witt vectors `W_n` relative to a uniformizer `π`.
//!
//! Indexing is normalized: `W_n` has `n + 1` components (traditionally this
//! ring is called `W_{n+1}`).

mod disk_cache;
pub mod structural;

use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};
use std::collections::HashMap;

use num_bigint::BigInt;

use crate::error::{Result, WittError};
use crate::rings::mpoly::evaluate;
use crate::rings::{
    reduce_mod_power, residue_cardinality, Algebra, BaseRing, Elem, FpPoly, Ring,
};
pub use structural::{structural_polys, OpKind, StructuralPolynomialSet};

/// `(R₀, π, q, n)`: one principal single-prime Witt functor truncated at length `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WittContext {
    pub base: BaseRing,
    pub pi: Elem,
    pub q: u64,
    pub n: usize,
}

impl WittContext {
    pub fn new(base: BaseRing, pi: Elem, n: usize) -> Result<WittContext> {
        let q = residue_cardinality(&base, &pi)?;
        Ok(WittContext { base, pi, q, n })
    }

    /// p-typical context over ℤ.
    pub fn integers(p: i64, n: usize) -> Result<WittContext> {
        WittContext::new(BaseRing::Integers, Elem::int(p), n)
    }

    /// Context over `F_p[t]` with the uniformizer given in text syntax.
    pub fn fpt(p: u64, pi: &str, n: usize) -> Result<WittContext> {
        let base = BaseRing::fpt(p)?;
        let pi = base.parse_element(pi)?;
        WittContext::new(base, pi, n)
    }

    pub fn with_len(&self, n: usize) -> WittContext {
        WittContext { n, ..self.clone() }
    }

    pub fn pi_string(&self) -> String {
        self.base.format(&self.pi)
    }
}

impl fmt::Display for WittContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "W_{}[{}, pi={}, q={}]", self.n, self.base, self.pi_string(), self.q)
    }
}

/// How ring operations on Witt components are evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Strategy {
    /// Ghost arithmetic when torsion-free, ghost arithmetic in a torsion-free
    /// cover when one is known, structural polynomials otherwise.
    Auto,
    Structural,
    Ghost,
    Lifted,
}

/// The ring `W_n(A)` for a context and an `R₀`-algebra `A`.
#[derive(Debug)]
pub struct WittRing {
    pub ctx: WittContext,
    pub alg: Algebra,
    pi_image: Elem,
    torsion_free: bool,
    cover: OnceLock<Option<Arc<WittRing>>>,
    scalars: Mutex<HashMap<Elem, Elem>>,
}

impl PartialEq for WittRing {
    fn eq(&self, other: &Self) -> bool {
        self.ctx == other.ctx && self.alg == other.alg
    }
}

impl Eq for WittRing {}

impl std::hash::Hash for WittRing {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.ctx.hash(state);
        self.alg.hash(state);
    }
}

impl WittRing {
    pub fn new(ctx: WittContext, alg: Algebra) -> Result<Arc<WittRing>> {
        if ctx.base != alg.base {
            return Err(WittError::ContextMismatch(format!(
                "algebra over {} used with context over {}",
                alg.base, ctx.base
            )));
        }
        let pi_image = alg.scalar(&ctx.pi);
        let torsion_free = alg.is_torsion_free(&ctx.pi);
        Ok(Arc::new(WittRing {
            ctx,
            alg,
            pi_image,
            torsion_free,
            cover: OnceLock::new(),
            scalars: Mutex::new(HashMap::new()),
        }))
    }

    /// `W_n(R₀)`.
    pub fn over_base(ctx: WittContext) -> Arc<WittRing> {
        let alg = Algebra::base_itself(&ctx.base);
        WittRing::new(ctx, alg).expect("base is an algebra over itself")
    }

    pub fn with_len(&self, n: usize) -> Arc<WittRing> {
        WittRing::new(self.ctx.with_len(n), self.alg.clone()).unwrap()
    }

    pub fn len(&self) -> usize {
        self.ctx.n + 1
    }

    pub fn is_torsion_free(&self) -> bool {
        self.torsion_free
    }

    pub fn ring(self: &Arc<Self>) -> Ring {
        Ring::Witt(self.clone())
    }

    fn coeff_ring(&self) -> &Ring {
        &self.alg.ring
    }

    fn cover_ring(&self) -> Option<&Arc<WittRing>> {
        self.cover
            .get_or_init(|| {
                let cover = self.alg.cover()?;
                let ring = WittRing::new(self.ctx.clone(), cover).ok()?;
                ring.torsion_free.then_some(ring)
            })
            .as_ref()
    }

    fn resolve(&self, strategy: Strategy) -> Result<Strategy> {
        match strategy {
            Strategy::Auto => Ok(if self.torsion_free {
                Strategy::Ghost
            } else if self.cover_ring().is_some() {
                Strategy::Lifted
            } else {
                Strategy::Structural
            }),
            Strategy::Ghost if !self.torsion_free => {
                Err(WittError::TorsionNotSupported(self.alg.ring.to_string()))
            }
            Strategy::Lifted if self.cover_ring().is_none() => Err(
                WittError::TorsionNotSupported(format!("no torsion-free cover of {}", self.alg.ring)),
            ),
            s => Ok(s),
        }
    }

    pub fn vector(self: &Arc<Self>, comps: Vec<Elem>) -> Result<WittVector> {
        if comps.len() != self.len() {
            return Err(WittError::ContextMismatch(format!(
                "expected {} components, got {}",
                self.len(),
                comps.len()
            )));
        }
        if let Some(bad) = comps.iter().find(|c| !self.alg.ring.contains(c)) {
            return Err(WittError::ContextMismatch(format!(
                "{bad:?} is not an element of {}",
                self.alg.ring
            )));
        }
        Ok(WittVector { ring: self.clone(), comps })
    }

    /// Parses components written in the algebra's element syntax.
    pub fn parse_vector(self: &Arc<Self>, comps: &[&str]) -> Result<WittVector> {
        let comps =
            comps.iter().map(|s| self.alg.ring.parse(s)).collect::<Result<Vec<_>>>()?;
        self.vector(comps)
    }

    pub fn zero(self: &Arc<Self>) -> WittVector {
        WittVector { ring: self.clone(), comps: vec![self.alg.ring.zero(); self.len()] }
    }

    pub fn one(self: &Arc<Self>) -> WittVector {
        self.teichmuller(&self.alg.ring.one())
    }

    /// `[a] = (a, 0, …, 0)`
    pub fn teichmuller(self: &Arc<Self>, a: &Elem) -> WittVector {
        let mut comps = vec![self.alg.ring.zero(); self.len()];
        comps[0] = a.clone();
        WittVector { ring: self.clone(), comps }
    }

    /// Image of `r ∈ R₀` under the `R₀`-algebra structure of `W_n(A)`: the
    /// vector whose ghost components are all `r`.
    pub fn scalar(&self, r: &Elem) -> Elem {
        if let Some(v) = self.scalars.lock().unwrap().get(r) {
            return v.clone();
        }
        let base_alg = Algebra::base_itself(&self.ctx.base);
        let entries = vec![r.clone(); self.len()];
        let pi = self.ctx.pi.clone();
        let comps = unghost_entries(&base_alg.ring, &pi, self.ctx.q, &entries)
            .expect("constant ghost vectors over R0 are integral");
        let v = Elem::Witt(comps.iter().map(|c| self.alg.scalar(c)).collect());
        self.scalars.lock().unwrap().insert(r.clone(), v.clone());
        v
    }

    pub fn scalar_vector(self: &Arc<Self>, r: &Elem) -> WittVector {
        WittVector { ring: self.clone(), comps: self.scalar(r).as_witt().to_vec() }
    }

    pub(crate) fn from_int(&self, n: &BigInt) -> Elem {
        let r = self.ctx.base.ring().from_int(n);
        self.scalar(&r)
    }

    pub fn ghost_of(&self, comps: &[Elem]) -> Vec<Elem> {
        ghost_entries(self.coeff_ring(), &self.pi_image, self.ctx.q, comps)
    }

    /// Solves for components from ghost entries; needs a torsion-free algebra.
    pub fn unghost_of(&self, entries: &[Elem]) -> Result<Vec<Elem>> {
        if !self.torsion_free {
            return Err(WittError::TorsionNotSupported(format!(
                "{} has {}-torsion",
                self.alg.ring,
                self.ctx.pi_string()
            )));
        }
        unghost_entries(self.coeff_ring(), &self.pi_image, self.ctx.q, entries)
    }

    pub fn ghost_vector(self: &Arc<Self>, entries: Vec<Elem>) -> Result<GhostVector> {
        if entries.len() != self.len() {
            return Err(WittError::ContextMismatch("wrong number of ghost entries".into()));
        }
        Ok(GhostVector { ring: self.clone(), entries })
    }

    /// Applies a ring operation to component lists with an explicit strategy.
    pub fn apply(
        &self,
        op: OpKind,
        a: &[Elem],
        b: Option<&[Elem]>,
        strategy: Strategy,
    ) -> Result<Vec<Elem>> {
        if op == OpKind::Frobenius && self.ctx.n == 0 {
            return Err(WittError::LengthZero);
        }
        match self.resolve(strategy)? {
            Strategy::Ghost => {
                let ga = self.ghost_of(a);
                let gb = b.map(|b| self.ghost_of(b));
                let ring = self.coeff_ring();
                let target: Vec<Elem> = match op {
                    OpKind::Sum => {
                        ga.iter().zip(gb.unwrap()).map(|(x, y)| ring.add(x, &y)).collect()
                    }
                    OpKind::Product => {
                        ga.iter().zip(gb.unwrap()).map(|(x, y)| ring.mul(x, &y)).collect()
                    }
                    OpKind::Negation => ga.iter().map(|x| ring.neg(x)).collect(),
                    OpKind::Frobenius => ga[1..].to_vec(),
                };
                unghost_entries(ring, &self.pi_image, self.ctx.q, &target).map_err(|e| {
                    WittError::InternalIntegrity(format!("ghost image not closed: {e}"))
                })
            }
            Strategy::Lifted => {
                let cover = self.cover_ring().unwrap();
                let lift = |v: &[Elem]| v.iter().map(|c| self.alg.lift(c)).collect::<Vec<_>>();
                let la = lift(a);
                let lb = b.map(lift);
                let out = cover.apply(op, &la, lb.as_deref(), Strategy::Ghost)?;
                Ok(out.iter().map(|c| self.alg.reduce_from_cover(c)).collect())
            }
            Strategy::Structural => {
                let set = structural_polys(&self.ctx, op)?;
                let mut values = a.to_vec();
                if let Some(b) = b {
                    values.extend_from_slice(b);
                }
                Ok(set.evaluate(&self.alg, &values))
            }
            Strategy::Auto => unreachable!(),
        }
    }

    pub(crate) fn add_elems(&self, a: &Elem, b: &Elem) -> Elem {
        Elem::Witt(self.apply(OpKind::Sum, a.as_witt(), Some(b.as_witt()), Strategy::Auto).unwrap())
    }

    pub(crate) fn mul_elems(&self, a: &Elem, b: &Elem) -> Elem {
        Elem::Witt(
            self.apply(OpKind::Product, a.as_witt(), Some(b.as_witt()), Strategy::Auto).unwrap(),
        )
    }

    pub(crate) fn neg_elem(&self, a: &Elem) -> Elem {
        Elem::Witt(self.apply(OpKind::Negation, a.as_witt(), None, Strategy::Auto).unwrap())
    }

    pub(crate) fn exact_div_elems(&self, a: &Elem, b: &Elem) -> Result<Elem> {
        if !self.torsion_free {
            return Err(WittError::TorsionNotSupported("division in a Witt ring".into()));
        }
        let ring = self.coeff_ring();
        let ga = self.ghost_of(a.as_witt());
        let gb = self.ghost_of(b.as_witt());
        let quot =
            ga.iter().zip(&gb).map(|(x, y)| ring.exact_div(x, y)).collect::<Result<Vec<_>>>()?;
        self.unghost_of(&quot).map(Elem::Witt).map_err(|_| {
            WittError::inexact(Ring::Witt(Arc::new(self.shallow())).format(a), "divisor")
        })
    }

    fn shallow(&self) -> WittRing {
        WittRing {
            ctx: self.ctx.clone(),
            alg: self.alg.clone(),
            pi_image: self.pi_image.clone(),
            torsion_free: self.torsion_free,
            cover: OnceLock::new(),
            scalars: Mutex::new(HashMap::new()),
        }
    }

    pub(crate) fn is_nonzerodivisor(&self, a: &Elem) -> bool {
        self.torsion_free
            && self.ghost_of(a.as_witt()).iter().all(|g| self.coeff_ring().is_nonzerodivisor(g))
    }
}

/// `gh_k = Σ_{i≤k} π^i x_i^{q^{k−i}}` for every `k`.
pub(crate) fn ghost_entries(ring: &Ring, pi: &Elem, q: u64, comps: &[Elem]) -> Vec<Elem> {
    let mut pows: Vec<Elem> = Vec::with_capacity(comps.len());
    let mut pi_pows: Vec<Elem> = Vec::with_capacity(comps.len());
    let mut out = Vec::with_capacity(comps.len());
    for (k, x) in comps.iter().enumerate() {
        for p in pows.iter_mut() {
            *p = ring.pow(p, q);
        }
        pows.push(x.clone());
        pi_pows.push(if k == 0 { ring.one() } else { ring.mul(&pi_pows[k - 1], pi) });
        let mut entry = ring.zero();
        for (pp, xp) in pi_pows.iter().zip(&pows) {
            entry = ring.add(&entry, &ring.mul(pp, xp));
        }
        out.push(entry);
    }
    out
}

/// Inverts [`ghost_entries`] by successive exact division by `π^k`.
pub(crate) fn unghost_entries(
    ring: &Ring,
    pi: &Elem,
    q: u64,
    entries: &[Elem],
) -> Result<Vec<Elem>> {
    let mut xs: Vec<Elem> = Vec::with_capacity(entries.len());
    let mut pows: Vec<Elem> = Vec::with_capacity(entries.len());
    let mut pi_pow = ring.one();
    let mut pi_pows: Vec<Elem> = Vec::with_capacity(entries.len());
    for (k, g) in entries.iter().enumerate() {
        for p in pows.iter_mut() {
            *p = ring.pow(p, q);
        }
        let mut rest = g.clone();
        for (pp, xp) in pi_pows.iter().zip(&pows) {
            rest = ring.sub(&rest, &ring.mul(pp, xp));
        }
        if k > 0 {
            pi_pow = ring.mul(&pi_pow, pi);
        }
        let x = ring.exact_div(&rest, &pi_pow).map_err(|e| WittError::CongruenceViolation {
            index: k,
            detail: e.to_string(),
        })?;
        xs.push(x.clone());
        pows.push(x);
        pi_pows.push(pi_pow.clone());
    }
    Ok(xs)
}

/// An element `(x₀, …, x_n)_π` of `W_n(A)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WittVector {
    ring: Arc<WittRing>,
    comps: Vec<Elem>,
}

/// Ghost components `⟨w₀, …, w_n⟩`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GhostVector {
    ring: Arc<WittRing>,
    entries: Vec<Elem>,
}

impl GhostVector {
    pub fn entries(&self) -> &[Elem] {
        &self.entries
    }

    pub fn ring(&self) -> &Arc<WittRing> {
        &self.ring
    }

    pub fn unghost(&self) -> Result<WittVector> {
        let comps = self.ring.unghost_of(&self.entries)?;
        Ok(WittVector { ring: self.ring.clone(), comps })
    }

    pub fn format(&self) -> String {
        let parts: Vec<String> =
            self.entries.iter().map(|e| self.ring.alg.ring.format(e)).collect();
        format!("<{}>", parts.join(","))
    }
}

impl WittVector {
    pub fn ring(&self) -> &Arc<WittRing> {
        &self.ring
    }

    pub fn ctx(&self) -> &WittContext {
        &self.ring.ctx
    }

    pub fn alg(&self) -> &Algebra {
        &self.ring.alg
    }

    pub fn components(&self) -> &[Elem] {
        &self.comps
    }

    pub fn into_components(self) -> Vec<Elem> {
        self.comps
    }

    pub fn as_elem(&self) -> Elem {
        Elem::Witt(self.comps.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|c| self.ring.alg.ring.is_zero(c))
    }

    fn check_same(&self, other: &WittVector) -> Result<()> {
        if Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring {
            Ok(())
        } else {
            Err(WittError::ContextMismatch(format!(
                "{} over {} vs {} over {}",
                self.ring.ctx, self.ring.alg.ring, other.ring.ctx, other.ring.alg.ring
            )))
        }
    }

    pub fn ghost(&self) -> GhostVector {
        GhostVector { ring: self.ring.clone(), entries: self.ring.ghost_of(&self.comps) }
    }

    pub fn add_with(&self, other: &WittVector, strategy: Strategy) -> Result<WittVector> {
        self.check_same(other)?;
        let comps = self.ring.apply(OpKind::Sum, &self.comps, Some(&other.comps), strategy)?;
        Ok(WittVector { ring: self.ring.clone(), comps })
    }

    pub fn mul_with(&self, other: &WittVector, strategy: Strategy) -> Result<WittVector> {
        self.check_same(other)?;
        let comps = self.ring.apply(OpKind::Product, &self.comps, Some(&other.comps), strategy)?;
        Ok(WittVector { ring: self.ring.clone(), comps })
    }

    pub fn neg_with(&self, strategy: Strategy) -> Result<WittVector> {
        let comps = self.ring.apply(OpKind::Negation, &self.comps, None, strategy)?;
        Ok(WittVector { ring: self.ring.clone(), comps })
    }

    pub fn add(&self, other: &WittVector) -> Result<WittVector> {
        self.add_with(other, Strategy::Auto)
    }

    pub fn mul(&self, other: &WittVector) -> Result<WittVector> {
        self.mul_with(other, Strategy::Auto)
    }

    pub fn neg(&self) -> WittVector {
        self.neg_with(Strategy::Auto).expect("negation is total")
    }

    pub fn sub(&self, other: &WittVector) -> Result<WittVector> {
        self.add(&other.neg())
    }

    pub fn pow(&self, e: u64) -> WittVector {
        let r = self.ring.ring();
        WittVector { ring: self.ring.clone(), comps: r.pow(&self.as_elem(), e).as_witt().to_vec() }
    }

    /// Multiplication by `r ∈ R₀` through the algebra structure.
    pub fn scale(&self, r: &Elem) -> WittVector {
        let s = self.ring.scalar_vector(r);
        s.mul(self).unwrap()
    }

    /// `[a]·w`, computed componentwise as `a^{q^i} b_i`.
    pub fn teich_scale(&self, a: &Elem) -> WittVector {
        let ring = &self.ring.alg.ring;
        let mut factor = a.clone();
        let mut comps = Vec::with_capacity(self.comps.len());
        for (i, b) in self.comps.iter().enumerate() {
            if i > 0 {
                factor = ring.pow(&factor, self.ring.ctx.q);
            }
            comps.push(ring.mul(&factor, b));
        }
        WittVector { ring: self.ring.clone(), comps }
    }

    /// `V^j`: prepends `j` zero components, landing in `W_{n+j}`.
    pub fn verschiebung(&self, j: usize) -> WittVector {
        let ring = self.ring.with_len(self.ring.ctx.n + j);
        let mut comps = vec![self.ring.alg.ring.zero(); j];
        comps.extend(self.comps.iter().cloned());
        WittVector { ring, comps }
    }

    /// The Witt vector Frobenius `W_n → W_{n−1}`.
    pub fn frobenius_with(&self, strategy: Strategy) -> Result<WittVector> {
        let comps = self.ring.apply(OpKind::Frobenius, &self.comps, None, strategy)?;
        Ok(WittVector { ring: self.ring.with_len(self.ring.ctx.n - 1), comps })
    }

    pub fn frobenius(&self) -> Result<WittVector> {
        self.frobenius_with(Strategy::Auto)
    }

    /// Projection `W_n → W_j`.
    pub fn truncate(&self, j: usize) -> Result<WittVector> {
        if j > self.ring.ctx.n {
            return Err(WittError::IndexOutOfRange { index: j, len: self.ring.ctx.n });
        }
        Ok(WittVector { ring: self.ring.with_len(j), comps: self.comps[..=j].to_vec() })
    }

    /// Ghost component `i`; with `reduced`, any `i` is allowed and the value is
    /// taken modulo `π^{n+1}`.
    pub fn ghost_component(&self, i: usize, reduced: bool) -> Result<Elem> {
        if !reduced {
            if i > self.ring.ctx.n {
                return Err(WittError::IndexOutOfRange { index: i, len: self.ring.ctx.n });
            }
            return Ok(self.ghost_entry(&self.comps[..=i], None));
        }
        self.reduced_ghost_with_tail(i, &[])
    }

    /// Reduced ghost component computed from the components extended by `tail`
    /// (then zeros). The result does not depend on `tail`.
    pub fn reduced_ghost_with_tail(&self, i: usize, tail: &[Elem]) -> Result<Elem> {
        let alg = &self.ring.alg;
        let n = self.ring.ctx.n;
        let mut comps = self.comps.clone();
        comps.extend(tail.iter().cloned());
        comps.resize(comps.len().max(i + 1), alg.ring.zero());
        comps.truncate(i + 1);
        let modulus = alg.ring.pow(&self.ring.pi_image, (n + 1) as u64);
        let reduce = |x: &Elem| alg.ring.reduce_mod_principal(x, &modulus);
        let value = self.ghost_entry_reducing(&comps, &reduce)?;
        reduce_mod_power(&value, &self.ring.ctx.pi, (n + 1) as u32, alg)
    }

    fn ghost_entry(&self, comps: &[Elem], _hint: Option<()>) -> Elem {
        ghost_entries(&self.ring.alg.ring, &self.ring.pi_image, self.ring.ctx.q, comps)
            .pop()
            .unwrap()
    }

    /// Last ghost entry of `comps`, reducing after every multiplication.
    fn ghost_entry_reducing(
        &self,
        comps: &[Elem],
        reduce: &dyn Fn(&Elem) -> Result<Elem>,
    ) -> Result<Elem> {
        let ring = &self.ring.alg.ring;
        let k = comps.len() - 1;
        let mut total = ring.zero();
        let mut pi_pow = ring.one();
        for (i, x) in comps.iter().enumerate() {
            if i > 0 {
                pi_pow = reduce(&ring.mul(&pi_pow, &self.ring.pi_image))?;
            }
            if ring.is_zero(&pi_pow) {
                break;
            }
            let mut pw = reduce(x)?;
            for _ in 0..(k - i) {
                pw = reduce(&ring.pow(&pw, self.ring.ctx.q))?;
            }
            total = reduce(&ring.add(&total, &ring.mul(&pi_pow, &pw)))?;
        }
        Ok(total)
    }

    /// Re-expresses the vector relative to the uniformizer `u·π`.
    pub fn rebase_uniformizer(&self, u: &Elem) -> Result<WittVector> {
        let change = structural::rebase_polys(&self.ring.ctx, u)?;
        let comps = change.evaluate(&self.ring.alg, &self.comps);
        let ring = WittRing::new(change.target.clone(), self.ring.alg.clone())?;
        Ok(WittVector { ring, comps })
    }

    /// Same as [`WittVector::rebase_uniformizer`] but by ghost transport; only
    /// for torsion-free algebras.
    pub fn rebase_uniformizer_ghost(&self, u: &Elem) -> Result<WittVector> {
        let target = structural::rebased_context(&self.ring.ctx, u)?;
        let ring = WittRing::new(target, self.ring.alg.clone())?;
        if !ring.torsion_free {
            return Err(WittError::TorsionNotSupported(self.ring.alg.ring.to_string()));
        }
        let comps = ring.unghost_of(&self.ring.ghost_of(&self.comps))?;
        Ok(WittVector { ring, comps })
    }

    pub fn format(&self) -> String {
        self.ring.ring().format(&self.as_elem())
    }
}

impl fmt::Display for WittVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format())
    }
}

/// Uniformizer `t` of `F_p[t]`, handy for building contexts.
pub fn t_uniformizer() -> Elem {
    Elem::Poly(FpPoly::monomial(1))
}

pub(crate) fn evaluate_polys(polys: &[Elem], alg: &Algebra, values: &[Elem]) -> Vec<Elem> {
    polys
        .iter()
        .map(|f| evaluate(f.as_multi(), &alg.ring, values, |c| alg.scalar(c)))
        .collect()
}

#[cfg(test)]
mod tests;
