//! Multi-prime Witt vectors `W_{π_r,n_r}(⋯W_{π_1,n_1}(A)⋯)` for a finite family
//! of pairwise coprime principal primes, and big Witt vectors over ℤ on
//! truncation sets of the form `{d : d | N}`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Result, WittError};
use crate::rings::{residue_cardinality, Algebra, BaseRing, Elem, Ring};
use crate::witt::{WittContext, WittRing};

/// Pairwise coprime prime elements of `R₀`, kept in canonical order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PrimeFamily {
    base: BaseRing,
    primes: Vec<(Elem, u64)>,
}

fn ideal_key(base: &BaseRing, pi: &Elem) -> (usize, Vec<u64>) {
    match base {
        BaseRing::Integers => (0, vec![pi.as_int().abs().to_u64().unwrap()]),
        BaseRing::FpT(p) => {
            let f = pi.as_poly().monic(*p);
            let mut c = f.coeffs().to_vec();
            c.reverse();
            (f.degree().unwrap_or(0), c)
        }
    }
}

impl PrimeFamily {
    pub fn new(base: BaseRing, pis: Vec<Elem>) -> Result<PrimeFamily> {
        let mut primes = Vec::with_capacity(pis.len());
        for pi in pis {
            let q = residue_cardinality(&base, &pi)?;
            primes.push((pi, q));
        }
        primes.sort_by_key(|(pi, _)| ideal_key(&base, pi));
        for w in primes.windows(2) {
            if ideal_key(&base, &w[0].0) == ideal_key(&base, &w[1].0) {
                return Err(WittError::InvalidContext(format!(
                    "{} occurs twice in the prime family",
                    base.format(&w[0].0)
                )));
            }
        }
        Ok(PrimeFamily { base, primes })
    }

    pub fn integers(ps: &[i64]) -> Result<PrimeFamily> {
        PrimeFamily::new(BaseRing::Integers, ps.iter().map(|&p| Elem::int(p)).collect())
    }

    pub fn base(&self) -> &BaseRing {
        &self.base
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    pub fn pi(&self, alpha: usize) -> &Elem {
        &self.primes[alpha].0
    }

    pub fn q(&self, alpha: usize) -> u64 {
        self.primes[alpha].1
    }

    /// Position of a prime element in the canonical order.
    pub fn position(&self, pi: &Elem) -> Option<usize> {
        let key = ideal_key(&self.base, pi);
        self.primes.iter().position(|(p, _)| ideal_key(&self.base, p) == key)
    }

    pub fn context(&self, alpha: usize, n: usize) -> WittContext {
        WittContext { base: self.base.clone(), pi: self.pi(alpha).clone(), q: self.q(alpha), n }
    }

    pub fn labels(&self) -> Vec<String> {
        self.primes.iter().map(|(p, _)| self.base.format(p)).collect()
    }
}

/// Multi-index `n ∈ ℕ^E`, one entry per prime in canonical family order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiIndex(pub Vec<usize>);

impl MultiIndex {
    /// All `i ≤ n` pointwise, lexicographically.
    pub fn box_below(&self) -> Vec<MultiIndex> {
        let mut out = vec![Vec::new()];
        for &n in &self.0 {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    (0..=n).map(move |j| {
                        let mut v = prefix.clone();
                        v.push(j);
                        v
                    })
                })
                .collect();
        }
        out.into_iter().map(MultiIndex).collect()
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|i| i.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// The nested ring for a family, a multi-index and a nesting order.
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct MultiWittRing {
    pub family: PrimeFamily,
    pub index: MultiIndex,
    /// Family positions from innermost to outermost.
    pub ordering: Vec<usize>,
    pub alg: Algebra,
    levels: Vec<Arc<WittRing>>,
}

impl MultiWittRing {
    /// Canonical nesting: smallest prime innermost.
    pub fn new(family: PrimeFamily, index: MultiIndex, alg: Algebra) -> Result<Arc<MultiWittRing>> {
        let ordering = (0..family.len()).collect();
        MultiWittRing::with_ordering(family, index, alg, ordering)
    }

    pub fn with_ordering(
        family: PrimeFamily,
        index: MultiIndex,
        alg: Algebra,
        ordering: Vec<usize>,
    ) -> Result<Arc<MultiWittRing>> {
        if index.0.len() != family.len() {
            return Err(WittError::ContextMismatch("multi-index does not match family".into()));
        }
        let mut sorted = ordering.clone();
        sorted.sort_unstable();
        if sorted != (0..family.len()).collect::<Vec<_>>() {
            return Err(WittError::InvalidContext("ordering is not a permutation".into()));
        }
        if alg.base != *family.base() {
            return Err(WittError::ContextMismatch("algebra over a different base".into()));
        }
        let mut levels: Vec<Arc<WittRing>> = Vec::with_capacity(family.len());
        let mut current = alg.clone();
        for &alpha in &ordering {
            let ring = WittRing::new(family.context(alpha, index.0[alpha]), current)?;
            current = Algebra::witt(ring.clone());
            levels.push(ring);
        }
        Ok(Arc::new(MultiWittRing { family, index, ordering, alg, levels }))
    }

    pub fn is_torsion_free(&self) -> bool {
        self.levels.iter().all(|l| l.is_torsion_free())
    }

    /// The ring holding the nested value (the outermost level), or the base
    /// algebra for an empty family.
    pub fn value_ring(&self) -> Ring {
        match self.levels.last() {
            Some(l) => l.ring(),
            None => self.alg.ring.clone(),
        }
    }

    pub fn levels(&self) -> &[Arc<WittRing>] {
        &self.levels
    }

    pub fn zero(self: &Arc<Self>) -> MultiWittVector {
        MultiWittVector { ring: self.clone(), value: self.value_ring().zero() }
    }

    pub fn one(self: &Arc<Self>) -> MultiWittVector {
        self.teichmuller(&self.alg.ring.one())
    }

    /// Iterated Teichmüller lift.
    pub fn teichmuller(self: &Arc<Self>, a: &Elem) -> MultiWittVector {
        let mut value = a.clone();
        for level in &self.levels {
            value = level.teichmuller(&value).as_elem();
        }
        MultiWittVector { ring: self.clone(), value }
    }

    /// Builds a vector from flattened components indexed in family order.
    pub fn from_components(
        self: &Arc<Self>,
        comps: &BTreeMap<MultiIndex, Elem>,
    ) -> Result<MultiWittVector> {
        let mut level_map = HashMap::new();
        for i in self.index.box_below() {
            let c = comps.get(&i).ok_or_else(|| {
                WittError::ContextMismatch(format!("missing component at {i}"))
            })?;
            if !self.alg.ring.contains(c) {
                return Err(WittError::ContextMismatch(format!("component at {i} not in {}", self.alg.ring)));
            }
            level_map.insert(self.to_level(&i), c.clone());
        }
        let value = self.assemble(self.levels.len(), &mut Vec::new(), &level_map);
        Ok(MultiWittVector { ring: self.clone(), value })
    }

    fn to_level(&self, i: &MultiIndex) -> Vec<usize> {
        self.ordering.iter().map(|&alpha| i.0[alpha]).collect()
    }

    fn from_level(&self, idx: &[usize]) -> MultiIndex {
        let mut out = vec![0; self.family.len()];
        for (k, &alpha) in self.ordering.iter().enumerate() {
            out[alpha] = idx[k];
        }
        MultiIndex(out)
    }

    /// Level-indexed maps use `[i_0 (innermost), …, i_{r−1}]`; `suffix` holds
    /// the already fixed outer indices, outermost first.
    fn assemble(&self, k: usize, suffix: &mut Vec<usize>, map: &HashMap<Vec<usize>, Elem>) -> Elem {
        if k == 0 {
            let key: Vec<usize> = suffix.iter().rev().cloned().collect();
            return map[&key].clone();
        }
        let n = self.levels[k - 1].ctx.n;
        let mut comps = Vec::with_capacity(n + 1);
        for j in 0..=n {
            suffix.push(j);
            comps.push(self.assemble(k - 1, suffix, map));
            suffix.pop();
        }
        Elem::Witt(comps)
    }

    fn flatten(&self, k: usize, value: &Elem, suffix: &mut Vec<usize>, out: &mut Vec<(Vec<usize>, Elem)>) {
        if k == 0 {
            out.push((suffix.iter().rev().cloned().collect(), value.clone()));
            return;
        }
        for (j, c) in value.as_witt().iter().enumerate() {
            suffix.push(j);
            self.flatten(k - 1, c, suffix, out);
            suffix.pop();
        }
    }

    fn ghost_rec(&self, k: usize, value: &Elem, suffix: &mut Vec<usize>, out: &mut Vec<(Vec<usize>, Elem)>) {
        if k == 0 {
            out.push((suffix.iter().rev().cloned().collect(), value.clone()));
            return;
        }
        for (j, g) in self.levels[k - 1].ghost_of(value.as_witt()).iter().enumerate() {
            suffix.push(j);
            self.ghost_rec(k - 1, g, suffix, out);
            suffix.pop();
        }
    }

    fn unghost_rec(
        &self,
        k: usize,
        suffix: &mut Vec<usize>,
        map: &HashMap<Vec<usize>, Elem>,
    ) -> Result<Elem> {
        if k == 0 {
            let key: Vec<usize> = suffix.iter().rev().cloned().collect();
            return Ok(map[&key].clone());
        }
        let level = &self.levels[k - 1];
        let mut entries = Vec::with_capacity(level.len());
        for j in 0..level.len() {
            suffix.push(j);
            entries.push(self.unghost_rec(k - 1, suffix, map)?);
            suffix.pop();
        }
        Ok(Elem::Witt(level.unghost_of(&entries)?))
    }

    /// Inverse of [`MultiWittVector::multi_ghost`] on a torsion-free algebra.
    pub fn multi_unghost(self: &Arc<Self>, ghost: &BTreeMap<MultiIndex, Elem>) -> Result<MultiWittVector> {
        if !self.is_torsion_free() {
            return Err(WittError::TorsionNotSupported(self.alg.ring.to_string()));
        }
        let mut map = HashMap::new();
        for i in self.index.box_below() {
            let g = ghost
                .get(&i)
                .ok_or_else(|| WittError::ContextMismatch(format!("missing ghost entry at {i}")))?;
            map.insert(self.to_level(&i), g.clone());
        }
        let value = self.unghost_rec(self.levels.len(), &mut Vec::new(), &map)?;
        Ok(MultiWittVector { ring: self.clone(), value })
    }
}

/// An element of a [`MultiWittRing`], stored as the nested outer vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiWittVector {
    ring: Arc<MultiWittRing>,
    value: Elem,
}

impl MultiWittVector {
    pub fn ring(&self) -> &Arc<MultiWittRing> {
        &self.ring
    }

    pub fn value(&self) -> &Elem {
        &self.value
    }

    /// Flattened components indexed in family order.
    pub fn components(&self) -> BTreeMap<MultiIndex, Elem> {
        let mut out = Vec::new();
        self.ring.flatten(self.ring.levels.len(), &self.value, &mut Vec::new(), &mut out);
        out.into_iter().map(|(idx, c)| (self.ring.from_level(&idx), c)).collect()
    }

    pub fn multi_ghost(&self) -> BTreeMap<MultiIndex, Elem> {
        let mut out = Vec::new();
        self.ring.ghost_rec(self.ring.levels.len(), &self.value, &mut Vec::new(), &mut out);
        out.into_iter().map(|(idx, c)| (self.ring.from_level(&idx), c)).collect()
    }

    fn check_same(&self, other: &MultiWittVector) -> Result<()> {
        if Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring {
            Ok(())
        } else {
            Err(WittError::ContextMismatch("different multi-prime rings".into()))
        }
    }

    pub fn add(&self, other: &MultiWittVector) -> Result<MultiWittVector> {
        self.check_same(other)?;
        let value = self.ring.value_ring().add(&self.value, &other.value);
        Ok(MultiWittVector { ring: self.ring.clone(), value })
    }

    pub fn mul(&self, other: &MultiWittVector) -> Result<MultiWittVector> {
        self.check_same(other)?;
        let value = self.ring.value_ring().mul(&self.value, &other.value);
        Ok(MultiWittVector { ring: self.ring.clone(), value })
    }

    pub fn neg(&self) -> MultiWittVector {
        MultiWittVector { ring: self.ring.clone(), value: self.ring.value_ring().neg(&self.value) }
    }

    /// The same element in another nesting order.
    pub fn reorder(&self, ordering: Vec<usize>) -> Result<MultiWittVector> {
        let r = &self.ring;
        let target = MultiWittRing::with_ordering(
            r.family.clone(),
            r.index.clone(),
            r.alg.clone(),
            ordering,
        )?;
        if target.ordering == r.ordering {
            return Ok(MultiWittVector { ring: target, value: self.value.clone() });
        }
        if r.is_torsion_free() {
            return target.multi_unghost(&self.multi_ghost());
        }
        let change = reorder_polys(&r.family, &r.index, &r.ordering, &target.ordering)?;
        let comps = self.components();
        let values: Vec<Elem> = r.index.box_below().iter().map(|i| comps[i].clone()).collect();
        let new: BTreeMap<MultiIndex, Elem> = change
            .iter()
            .map(|(i, f)| {
                let v = crate::rings::mpoly::evaluate(f.as_multi(), &r.alg.ring, &values, |c| {
                    r.alg.scalar(c)
                });
                (i.clone(), v)
            })
            .collect();
        target.from_components(&new)
    }

    /// Frobenius for the prime at family position `alpha`, lowering `n_α` by one.
    pub fn frobenius_at(&self, alpha: usize) -> Result<MultiWittVector> {
        self.at_outer(alpha, |outer| outer.frobenius())
    }

    /// `V^j` for the prime at family position `alpha`, raising `n_α` by `j`.
    pub fn verschiebung_at(&self, alpha: usize, j: usize) -> Result<MultiWittVector> {
        self.at_outer(alpha, |outer| Ok(outer.verschiebung(j)))
    }

    fn at_outer(
        &self,
        alpha: usize,
        op: impl Fn(&crate::witt::WittVector) -> Result<crate::witt::WittVector>,
    ) -> Result<MultiWittVector> {
        let r = &self.ring;
        if alpha >= r.family.len() {
            return Err(WittError::IndexOutOfRange { index: alpha, len: r.family.len() });
        }
        let mut ordering: Vec<usize> = r.ordering.iter().cloned().filter(|&a| a != alpha).collect();
        ordering.push(alpha);
        let moved = self.reorder(ordering.clone())?;
        let outer_ring = moved.ring.levels.last().unwrap().clone();
        let outer = outer_ring.vector(moved.value.as_witt().to_vec())?;
        let result = op(&outer)?;
        let mut index = r.index.clone();
        index.0[alpha] = result.ctx().n;
        let ring = MultiWittRing::with_ordering(r.family.clone(), index, r.alg.clone(), ordering)?;
        let v = MultiWittVector { ring, value: result.as_elem() };
        v.reorder(r.ordering.clone())
    }

    pub fn format(&self) -> String {
        self.ring.value_ring().format(&self.value)
    }
}

/// New components as polynomials in the old flattened components (listed in
/// `index.box_below()` order), for a change of nesting order.
pub fn reorder_polys(
    family: &PrimeFamily,
    index: &MultiIndex,
    from: &[usize],
    to: &[usize],
) -> Result<Vec<(MultiIndex, Elem)>> {
    let boxed = index.box_below();
    let vars: Vec<String> = boxed
        .iter()
        .map(|i| format!("x{}", i.0.iter().map(|k| k.to_string()).collect::<Vec<_>>().join("_")))
        .collect();
    let alg = Algebra::polynomial(family.base(), vars)?;
    let generic: BTreeMap<MultiIndex, Elem> =
        boxed.iter().enumerate().map(|(k, i)| (i.clone(), alg.ring.gen(k))).collect();
    let src = MultiWittRing::with_ordering(family.clone(), index.clone(), alg.clone(), from.to_vec())?;
    let dst = MultiWittRing::with_ordering(family.clone(), index.clone(), alg, to.to_vec())?;
    let w = src.from_components(&generic)?;
    let moved = dst.multi_unghost(&w.multi_ghost()).map_err(|e| {
        WittError::InternalIntegrity(format!("symbolic reordering failed: {e}"))
    })?;
    Ok(moved.components().into_iter().collect())
}

/// Divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

fn factor(mut n: u64) -> Vec<(u64, usize)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// A rectangular truncation set `{d : d | N}` viewed as a prime family over ℤ
/// with multi-index `(ord_p N)_p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncationSet {
    pub n: u64,
    pub family: PrimeFamily,
    pub index: MultiIndex,
}

impl TruncationSet {
    pub fn divisors_of(n: u64) -> Result<TruncationSet> {
        if n == 0 {
            return Err(WittError::InvalidContext("truncation sets contain positive integers".into()));
        }
        let fac = factor(n);
        let family = PrimeFamily::integers(&fac.iter().map(|&(p, _)| p as i64).collect::<Vec<_>>())?;
        let index = MultiIndex(fac.iter().map(|&(_, e)| e).collect());
        Ok(TruncationSet { n, family, index })
    }

    pub fn elements(&self) -> Vec<u64> {
        divisors(self.n)
    }

    pub fn divisor_of(&self, i: &MultiIndex) -> u64 {
        i.0.iter()
            .enumerate()
            .map(|(a, &e)| (self.family.q(a)).pow(e as u32))
            .product()
    }

    pub fn index_of(&self, d: u64) -> MultiIndex {
        MultiIndex(
            (0..self.family.len())
                .map(|a| {
                    let p = self.family.q(a);
                    let mut e = 0;
                    let mut m = d;
                    while m.is_multiple_of(p) {
                        m /= p;
                        e += 1;
                    }
                    e
                })
                .collect(),
        )
    }
}

/// Checks that `t` is finite, divisor-closed and equal to the divisors of its
/// least common multiple.
pub fn truncation_set_context(t: &BTreeSet<u64>) -> Result<TruncationSet> {
    if t.is_empty() || t.contains(&0) {
        return Err(WittError::InvalidContext("truncation sets are nonempty sets of positive integers".into()));
    }
    for &m in t {
        if let Some(&d) = divisors(m).iter().find(|d| !t.contains(d)) {
            return Err(WittError::NotDivisorClosed(d));
        }
    }
    let n = t.iter().fold(1u64, |acc, &m| acc.lcm(&m));
    if divisors(n).len() != t.len() {
        return Err(WittError::NotRectangular(n));
    }
    TruncationSet::divisors_of(n)
}

/// `w_m = Σ_{d|m} d·x_d^{m/d}` for every `m ∈ T`, in any commutative ring.
pub fn classical_big_ghost(ring: &Ring, comps: &BTreeMap<u64, Elem>) -> BTreeMap<u64, Elem> {
    comps
        .keys()
        .map(|&m| {
            let mut acc = ring.zero();
            for d in divisors(m) {
                let term = ring.pow(&comps[&d], m / d);
                acc = ring.add(&acc, &ring.mul(&ring.from_int(&BigInt::from(d)), &term));
            }
            (m, acc)
        })
        .collect()
}

/// Inverse of [`classical_big_ghost`] over a torsion-free ring.
pub fn classical_big_unghost(ring: &Ring, ghost: &BTreeMap<u64, Elem>) -> Result<BTreeMap<u64, Elem>> {
    let mut comps: BTreeMap<u64, Elem> = BTreeMap::new();
    for (&m, g) in ghost {
        let mut rest = g.clone();
        for d in divisors(m).into_iter().filter(|&d| d < m) {
            let c = comps.get(&d).ok_or(WittError::NotDivisorClosed(d))?;
            let term = ring.mul(&ring.from_int(&BigInt::from(d)), &ring.pow(c, m / d));
            rest = ring.sub(&rest, &term);
        }
        let x = ring.exact_div(&rest, &ring.from_int(&BigInt::from(m))).map_err(|e| {
            WittError::CongruenceViolation { index: m as usize, detail: e.to_string() }
        })?;
        comps.insert(m, x);
    }
    Ok(comps)
}

/// Polynomial coordinate change between classical big Witt coordinates
/// `(x_d)_{d∈T}` and nested multi-prime coordinates, both over ℤ.
#[derive(Clone, Debug)]
pub struct BigWittChange {
    pub set: TruncationSet,
    /// `ℤ[x_d]`
    pub classical_ring: Ring,
    /// `ℤ[y_i]` with `i` running over the box in lexicographic order.
    pub nested_ring: Ring,
    pub to_nested: BTreeMap<MultiIndex, Elem>,
    pub to_classical: BTreeMap<u64, Elem>,
}

impl BigWittChange {
    pub fn new(set: &TruncationSet) -> Result<BigWittChange> {
        let ds = set.elements();
        let classical_ring =
            Ring::multi(Ring::Integers, ds.iter().map(|d| format!("x{d}")).collect())?;
        let boxed = set.index.box_below();
        let nested_ring = Ring::multi(
            Ring::Integers,
            boxed.iter().map(|i| format!("y{}", set.divisor_of(i))).collect(),
        )?;
        let integrity = |e: WittError| WittError::InternalIntegrity(format!("big Witt change: {e}"));

        let x: BTreeMap<u64, Elem> =
            ds.iter().enumerate().map(|(k, &d)| (d, classical_ring.gen(k))).collect();
        let ghost = classical_big_ghost(&classical_ring, &x);
        let alg = Algebra::over_integers(classical_ring.clone());
        let mring = MultiWittRing::new(set.family.clone(), set.index.clone(), alg)?;
        let relabeled: BTreeMap<MultiIndex, Elem> =
            ghost.iter().map(|(&d, g)| (set.index_of(d), g.clone())).collect();
        let to_nested = mring.multi_unghost(&relabeled).map_err(integrity)?.components();

        let nalg = Algebra::over_integers(nested_ring.clone());
        let nring = MultiWittRing::new(set.family.clone(), set.index.clone(), nalg)?;
        let y: BTreeMap<MultiIndex, Elem> =
            boxed.iter().enumerate().map(|(k, i)| (i.clone(), nested_ring.gen(k))).collect();
        let g = nring.from_components(&y)?.multi_ghost();
        let by_divisor: BTreeMap<u64, Elem> =
            g.into_iter().map(|(i, e)| (set.divisor_of(&i), e)).collect();
        let to_classical = classical_big_unghost(&nested_ring, &by_divisor).map_err(integrity)?;
        Ok(BigWittChange { set: set.clone(), classical_ring, nested_ring, to_nested, to_classical })
    }

    /// Nested components of the vector with classical components `x`.
    pub fn classical_to_nested(&self, x: &BTreeMap<u64, Elem>, target: &Ring) -> BTreeMap<MultiIndex, Elem> {
        let values: Vec<Elem> = self.set.elements().iter().map(|d| x[d].clone()).collect();
        self.to_nested
            .iter()
            .map(|(i, f)| (i.clone(), eval_int_poly(f, target, &values)))
            .collect()
    }

    pub fn nested_to_classical(&self, y: &BTreeMap<MultiIndex, Elem>, target: &Ring) -> BTreeMap<u64, Elem> {
        let values: Vec<Elem> = self.set.index.box_below().iter().map(|i| y[i].clone()).collect();
        self.to_classical
            .iter()
            .map(|(&d, f)| (d, eval_int_poly(f, target, &values)))
            .collect()
    }
}

fn eval_int_poly(f: &Elem, target: &Ring, values: &[Elem]) -> Elem {
    crate::rings::mpoly::evaluate(f.as_multi(), target, values, |c| target.from_int(c.as_int()))
}

/// `a_j ≡ a_{pj} mod p^{1+ord_p(j)}` for every `j, pj ∈ T`; returns the
/// violating `(j, p)` pairs.
pub fn big_ghost_congruence_failures(ghost: &BTreeMap<u64, BigInt>) -> Vec<(u64, u64)> {
    let mut fails = Vec::new();
    for (&j, a) in ghost {
        for (p, _) in factor(ghost.keys().cloned().max().unwrap_or(1)) {
            if let Some(b) = ghost.get(&(p * j)) {
                let mut ord = 0;
                let mut m = j;
                while m % p == 0 {
                    m /= p;
                    ord += 1;
                }
                let modulus = BigInt::from(p).pow(1 + ord);
                if !((a - b) % &modulus).is_zero() {
                    fails.push((j, p));
                }
            }
        }
    }
    fails
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Elem> {
        v.iter().map(|&x| Elem::int(x)).collect()
    }

    fn z_multi(ps: &[i64], n: &[usize]) -> Arc<MultiWittRing> {
        MultiWittRing::new(
            PrimeFamily::integers(ps).unwrap(),
            MultiIndex(n.to_vec()),
            Algebra::over_integers(Ring::Integers),
        )
        .unwrap()
    }

    fn vector(ring: &Arc<MultiWittRing>, vals: &[i64]) -> MultiWittVector {
        let comps = ring.index.box_below().into_iter().zip(ints(vals)).collect();
        ring.from_components(&comps).unwrap()
    }

    #[test]
    fn family_is_canonically_ordered() {
        let f = PrimeFamily::integers(&[3, 2]).unwrap();
        assert_eq!(f.labels(), vec!["2", "3"]);
        assert!(PrimeFamily::integers(&[2, -2]).is_err());
        assert!(PrimeFamily::integers(&[4]).is_err());
        let base = BaseRing::FpT(2);
        let f = PrimeFamily::new(
            base.clone(),
            vec![base.parse_element("t^2 + t + 1").unwrap(), base.parse_element("t + 1").unwrap()],
        )
        .unwrap();
        assert_eq!(f.labels(), vec!["t + 1", "t^2 + t + 1"]);
    }

    #[test]
    fn index_box_matches_divisors() {
        let set = truncation_set_context(&[1, 2, 3, 6].into_iter().collect()).unwrap();
        assert_eq!(set.family.labels(), vec!["2", "3"]);
        assert_eq!(set.index, MultiIndex(vec![1, 1]));
        let ds: Vec<u64> = set.index.box_below().iter().map(|i| set.divisor_of(i)).collect();
        assert_eq!(ds, vec![1, 3, 2, 6]);
        let set = truncation_set_context(&[1, 2, 4].into_iter().collect()).unwrap();
        assert_eq!(set.index, MultiIndex(vec![2]));
        assert_eq!(
            truncation_set_context(&[1, 2, 3, 4].into_iter().collect()).unwrap_err(),
            WittError::NotRectangular(12)
        );
        assert_eq!(
            truncation_set_context(&[1, 4].into_iter().collect()).unwrap_err(),
            WittError::NotDivisorClosed(2)
        );
        let trivial = truncation_set_context(&[1].into_iter().collect()).unwrap();
        assert!(trivial.family.is_empty());
    }

    #[test]
    fn singleton_family_matches_single_prime() {
        let m = z_multi(&[3], &[2]);
        let single = WittRing::over_base(WittContext::integers(3, 2).unwrap());
        let a = vector(&m, &[2, -1, 5]);
        let b = vector(&m, &[1, 4, -3]);
        let sa = single.vector(ints(&[2, -1, 5])).unwrap();
        let sb = single.vector(ints(&[1, 4, -3])).unwrap();
        let prod = a.mul(&b).unwrap();
        assert_eq!(prod.value().as_witt(), sa.mul(&sb).unwrap().components());
        let g: Vec<Elem> = a.multi_ghost().into_values().collect();
        assert_eq!(g, sa.ghost().entries());
    }

    #[test]
    fn teichmuller_tower_ghost() {
        let m = z_multi(&[2, 3], &[1, 1]);
        let t = m.teichmuller(&Elem::int(2));
        let g = t.multi_ghost();
        assert_eq!(g[&MultiIndex(vec![1, 1])], Elem::int(64));
        assert_eq!(g[&MultiIndex(vec![0, 1])], Elem::int(8));
        let one = m.one();
        let w = vector(&m, &[1, -2, 3, 0]);
        assert_eq!(w.mul(&one).unwrap(), w);
    }

    #[test]
    fn ghost_is_additive_and_reorder_round_trips() {
        let m = z_multi(&[2, 3], &[1, 1]);
        let a = vector(&m, &[1, -2, 3, 0]);
        let b = vector(&m, &[-3, 2, 2, 1]);
        let s = a.add(&b).unwrap().multi_ghost();
        let (ga, gb) = (a.multi_ghost(), b.multi_ghost());
        for (i, v) in &s {
            assert_eq!(*v, Ring::Integers.add(&ga[i], &gb[i]));
        }
        let r = a.reorder(vec![1, 0]).unwrap();
        assert_eq!(r.multi_ghost(), a.multi_ghost());
        assert_eq!(r.reorder(vec![0, 1]).unwrap(), a);
    }

    #[test]
    fn symbolic_reorder_on_torsion_algebra() {
        let fam = PrimeFamily::integers(&[2, 3]).unwrap();
        let z8 = Algebra::over_integers(Ring::integers_mod(8).unwrap());
        let m = MultiWittRing::new(fam.clone(), MultiIndex(vec![1, 1]), z8.clone()).unwrap();
        let w = vector(&m, &[1, 6, 3, 5]);
        let r = w.reorder(vec![1, 0]).unwrap();
        // compare with reduction of the ℤ computation
        let mz = z_multi(&[2, 3], &[1, 1]);
        let rz = vector(&mz, &[1, 6, 3, 5]).reorder(vec![1, 0]).unwrap();
        for (i, c) in rz.components() {
            assert_eq!(r.components()[&i], z8.ring.from_int(c.as_int()));
        }
        assert_eq!(r.reorder(vec![0, 1]).unwrap(), w);
    }

    #[test]
    fn per_prime_frobenius() {
        let m = z_multi(&[2, 3], &[1, 1]);
        let w = vector(&m, &[1, -2, 3, 0]);
        let f = w.frobenius_at(0).unwrap();
        assert_eq!(f.ring().index, MultiIndex(vec![0, 1]));
        let g = w.multi_ghost();
        for (i, v) in f.multi_ghost() {
            assert_eq!(v, g[&MultiIndex(vec![i.0[0] + 1, i.0[1]])]);
        }
        let v = w.verschiebung_at(1, 1).unwrap();
        assert_eq!(v.ring().index, MultiIndex(vec![1, 2]));
    }

    #[test]
    fn classical_ghost_example() {
        let r = Ring::multi(Ring::Integers, ["x1", "x2", "x3", "x6"].map(String::from).to_vec()).unwrap();
        let x: BTreeMap<u64, Elem> = [1, 2, 3, 6].iter().enumerate().map(|(k, &d)| (d, r.gen(k))).collect();
        let w = classical_big_ghost(&r, &x);
        assert_eq!(w[&1], r.parse("x1").unwrap());
        assert_eq!(w[&6], r.parse("x1^6 + 2*x2^3 + 3*x3^2 + 6*x6").unwrap());
    }

    #[test]
    fn big_witt_change_is_consistent() {
        let set = TruncationSet::divisors_of(6).unwrap();
        let change = BigWittChange::new(&set).unwrap();
        let x: BTreeMap<u64, Elem> = [(1, 2), (2, -1), (3, 5), (6, 7)]
            .into_iter()
            .map(|(d, v)| (d, Elem::int(v)))
            .collect();
        let nested = change.classical_to_nested(&x, &Ring::Integers);
        let m = MultiWittRing::new(set.family.clone(), set.index.clone(), Algebra::over_integers(Ring::Integers)).unwrap();
        let g = m.from_components(&nested).unwrap().multi_ghost();
        let classical = classical_big_ghost(&Ring::Integers, &x);
        for (i, v) in g {
            assert_eq!(v, classical[&set.divisor_of(&i)]);
        }
        assert_eq!(change.nested_to_classical(&nested, &Ring::Integers), x);
    }
}
