//! Universal polynomials over `R₀[a₀…a_n, b₀…b_n]` describing Witt vector
//! operations, obtained by inverting the ghost map symbolically.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, LazyLock, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use super::{disk_cache, evaluate_polys, WittContext};
use crate::error::{Result, WittError};
use crate::rings::{Algebra, Elem, Ring};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OpKind {
    Sum,
    Product,
    Negation,
    Frobenius,
}

impl OpKind {
    pub const ALL: [OpKind; 4] = [OpKind::Sum, OpKind::Product, OpKind::Negation, OpKind::Frobenius];

    pub fn name(self) -> &'static str {
        match self {
            OpKind::Sum => "sum",
            OpKind::Product => "product",
            OpKind::Negation => "negation",
            OpKind::Frobenius => "frobenius",
        }
    }

    pub fn parse(s: &str) -> Result<OpKind> {
        OpKind::ALL
            .into_iter()
            .find(|op| op.name() == s)
            .ok_or_else(|| WittError::parse(0, format!("unknown operation '{s}'")))
    }

    pub fn is_binary(self) -> bool {
        matches!(self, OpKind::Sum | OpKind::Product)
    }

    /// Number of output components for input length `n`.
    pub fn output_len(self, n: usize) -> usize {
        match self {
            OpKind::Frobenius => n,
            _ => n + 1,
        }
    }
}

impl fmt::Display for OpKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Work limit for one synthesis, counted in coefficient multiplications.
pub const DEFAULT_BUDGET: u64 = 3_000_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructuralPolynomialSet {
    pub op: OpKind,
    pub ctx: WittContext,
    /// `R₀[a₀…a_n]` or `R₀[a₀…a_n, b₀…b_n]`.
    pub ring: Ring,
    pub polys: Vec<Elem>,
}

impl StructuralPolynomialSet {
    pub fn variable_names(&self) -> Vec<String> {
        self.ring.multi_ring().unwrap().vars.clone()
    }

    pub fn evaluate(&self, alg: &Algebra, values: &[Elem]) -> Vec<Elem> {
        evaluate_polys(&self.polys, alg, values)
    }

    pub fn format(&self, i: usize) -> String {
        self.ring.format(&self.polys[i])
    }

    pub fn term_count(&self) -> usize {
        self.polys.iter().map(|p| p.as_multi().len()).sum()
    }

    /// Recomputes ghost components of the polynomials (by direct powering) and
    /// compares them with the target ghost expression.
    pub fn verify_ghost_compatibility(&self) -> bool {
        let ring = &self.ring;
        let q = self.ctx.q;
        let pi = ring.constant(self.ctx.pi.clone());
        let n = self.ctx.n;
        let ghost_direct = |comps: &[Elem], k: usize| -> Elem {
            let mut acc = ring.zero();
            let mut pi_pow = ring.one();
            for (i, x) in comps.iter().take(k + 1).enumerate() {
                let e = q.checked_pow((k - i) as u32).expect("exponent overflow");
                acc = ring.add(&acc, &ring.mul(&pi_pow, &ring.pow(x, e)));
                pi_pow = ring.mul(&pi_pow, &pi);
            }
            acc
        };
        let a: Vec<Elem> = (0..=n).map(|i| ring.gen(i)).collect();
        let b: Vec<Elem> = if self.op.is_binary() {
            (0..=n).map(|i| ring.gen(n + 1 + i)).collect()
        } else {
            Vec::new()
        };
        (0..self.polys.len()).all(|k| {
            let lhs = ghost_direct(&self.polys, k);
            let rhs = match self.op {
                OpKind::Sum => ring.add(&ghost_direct(&a, k), &ghost_direct(&b, k)),
                OpKind::Product => ring.mul(&ghost_direct(&a, k), &ghost_direct(&b, k)),
                OpKind::Negation => ring.neg(&ghost_direct(&a, k)),
                OpKind::Frobenius => ghost_direct(&a, k + 1),
            };
            lhs == rhs
        })
    }
}

/// Multiplication and powering with a shared work counter.
struct Budgeted<'a> {
    ring: &'a Ring,
    base: Ring,
    char_p: Option<u64>,
    used: u64,
    limit: u64,
    what: String,
}

impl Budgeted<'_> {
    fn mul(&mut self, a: &Elem, b: &Elem) -> Result<Elem> {
        let cost = (a.as_multi().len() as u64).saturating_mul(b.as_multi().len() as u64);
        self.used = self.used.saturating_add(cost);
        if self.used > self.limit {
            return Err(WittError::BudgetExceeded(format!(
                "{} needs more than {} coefficient products",
                self.what, self.limit
            )));
        }
        Ok(self.ring.mul(a, b))
    }

    fn pow(&mut self, a: &Elem, mut e: u64) -> Result<Elem> {
        let mut base = a.clone();
        let mut result = self.ring.one();
        while e > 0 {
            if let Some(p) = self.char_p {
                if e.is_multiple_of(p) {
                    base = Elem::Multi(base.as_multi().frobenius(&self.base, p));
                    e /= p;
                    continue;
                }
            }
            if e & 1 == 1 {
                result = self.mul(&result, &base)?;
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base)?;
            }
        }
        Ok(result)
    }

    fn ghost(&mut self, pi: &Elem, q: u64, comps: &[Elem]) -> Result<Vec<Elem>> {
        let ring = self.ring;
        let mut pows: Vec<Elem> = Vec::new();
        let mut pi_pows: Vec<Elem> = Vec::new();
        let mut out = Vec::new();
        for (k, x) in comps.iter().enumerate() {
            for p in pows.iter_mut() {
                *p = self.pow(p, q)?;
            }
            pows.push(x.clone());
            pi_pows.push(if k == 0 { ring.one() } else { ring.mul(&pi_pows[k - 1], pi) });
            let mut entry = ring.zero();
            for (pp, xp) in pi_pows.iter().zip(&pows) {
                entry = ring.add(&entry, &ring.mul(pp, xp));
            }
            out.push(entry);
        }
        Ok(out)
    }

    fn unghost(&mut self, pi: &Elem, q: u64, entries: &[Elem]) -> Result<Vec<Elem>> {
        let ring = self.ring;
        let mut xs: Vec<Elem> = Vec::new();
        let mut pows: Vec<Elem> = Vec::new();
        let mut pi_pows: Vec<Elem> = Vec::new();
        let mut pi_pow = ring.one();
        for (k, g) in entries.iter().enumerate() {
            for p in pows.iter_mut() {
                *p = self.pow(p, q)?;
            }
            let mut rest = g.clone();
            for (pp, xp) in pi_pows.iter().zip(&pows) {
                rest = ring.sub(&rest, &ring.mul(pp, xp));
            }
            if k > 0 {
                pi_pow = ring.mul(&pi_pow, pi);
            }
            let x = ring.exact_div(&rest, &pi_pow).map_err(|e| {
                WittError::InternalIntegrity(format!("{}: component {k}: {e}", self.what))
            })?;
            xs.push(x.clone());
            pows.push(x);
            pi_pows.push(pi_pow.clone());
        }
        Ok(xs)
    }
}

fn var_names(prefix: &str, n: usize) -> Vec<String> {
    (0..=n).map(|i| format!("{prefix}{i}")).collect()
}

/// Synthesizes the polynomial set without consulting any cache.
pub fn synthesize(ctx: &WittContext, op: OpKind, budget: u64) -> Result<StructuralPolynomialSet> {
    let n = ctx.n;
    if op == OpKind::Frobenius && n == 0 {
        return Err(WittError::LengthZero);
    }
    let mut vars = var_names("a", n);
    if op.is_binary() {
        vars.extend(var_names("b", n));
    }
    let alg = Algebra::polynomial(&ctx.base, vars)?;
    let ring = alg.ring.clone();
    let base = ctx.base.ring();
    let pi = ring.constant(ctx.pi.clone());
    let mut work = Budgeted {
        ring: &ring,
        base: base.clone(),
        char_p: base.prime_characteristic(),
        used: 0,
        limit: budget,
        what: format!("{op} polynomials for {ctx}"),
    };
    let a: Vec<Elem> = (0..=n).map(|i| ring.gen(i)).collect();
    let ga = work.ghost(&pi, ctx.q, &a)?;
    let target: Vec<Elem> = match op {
        OpKind::Sum | OpKind::Product => {
            let b: Vec<Elem> = (0..=n).map(|i| ring.gen(n + 1 + i)).collect();
            let gb = work.ghost(&pi, ctx.q, &b)?;
            if op == OpKind::Sum {
                ga.iter().zip(&gb).map(|(x, y)| ring.add(x, y)).collect()
            } else {
                ga.iter().zip(&gb).map(|(x, y)| work.mul(x, y)).collect::<Result<_>>()?
            }
        }
        OpKind::Negation => ga.iter().map(|x| ring.neg(x)).collect(),
        OpKind::Frobenius => ga[1..].to_vec(),
    };
    let polys = work.unghost(&pi, ctx.q, &target)?;
    Ok(StructuralPolynomialSet { op, ctx: ctx.clone(), ring, polys })
}

type Slot<T> = Arc<OnceLock<Result<Arc<T>>>>;

static CACHE: LazyLock<Mutex<HashMap<(OpKind, WittContext), Slot<StructuralPolynomialSet>>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// Memoized [`synthesize`]; concurrent callers for the same key wait for a
/// single synthesis. Honors `WITT_CACHE_DIR` for an on-disk cache.
pub fn structural_polys(ctx: &WittContext, op: OpKind) -> Result<Arc<StructuralPolynomialSet>> {
    let slot = {
        let mut cache = CACHE.lock().unwrap();
        cache.entry((op, ctx.clone())).or_default().clone()
    };
    slot.get_or_init(|| {
        if let Some(set) = disk_cache::load(ctx, op) {
            return Ok(Arc::new(set));
        }
        let set = synthesize(ctx, op, DEFAULT_BUDGET)?;
        disk_cache::store(&set);
        Ok(Arc::new(set))
    })
    .clone()
}

/// The context with uniformizer `u·π`.
pub fn rebased_context(ctx: &WittContext, u: &Elem) -> Result<WittContext> {
    if !ctx.base.is_unit(u) {
        return Err(WittError::NotAUnit(ctx.base.format(u)));
    }
    let r = ctx.base.ring();
    WittContext::new(ctx.base.clone(), r.mul(u, &ctx.pi), ctx.n)
}

/// Polynomials `y_i(x₀…x_n)` with `(x₀,…)_π = (y₀,…)_{uπ}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RebasePolys {
    pub source: WittContext,
    pub target: WittContext,
    pub u: Elem,
    pub ring: Ring,
    pub polys: Vec<Elem>,
}

impl RebasePolys {
    pub fn evaluate(&self, alg: &Algebra, values: &[Elem]) -> Vec<Elem> {
        evaluate_polys(&self.polys, alg, values)
    }
}

static REBASE_CACHE: LazyLock<Mutex<HashMap<(WittContext, Elem), Slot<RebasePolys>>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

pub fn rebase_polys(ctx: &WittContext, u: &Elem) -> Result<Arc<RebasePolys>> {
    let target = rebased_context(ctx, u)?;
    let slot = {
        let mut cache = REBASE_CACHE.lock().unwrap();
        cache.entry((ctx.clone(), u.clone())).or_default().clone()
    };
    slot.get_or_init(|| {
        let alg = Algebra::polynomial(&ctx.base, var_names("x", ctx.n))?;
        let ring = alg.ring.clone();
        let x: Vec<Elem> = (0..=ctx.n).map(|i| ring.gen(i)).collect();
        let base = ctx.base.ring();
        let mut work = Budgeted {
            ring: &ring,
            base: base.clone(),
            char_p: base.prime_characteristic(),
            used: 0,
            limit: DEFAULT_BUDGET,
            what: format!("uniformizer change for {ctx}"),
        };
        let g = work.ghost(&ring.constant(ctx.pi.clone()), ctx.q, &x)?;
        let polys = work.unghost(&ring.constant(target.pi.clone()), ctx.q, &g)?;
        Ok(Arc::new(RebasePolys {
            source: ctx.clone(),
            target: target.clone(),
            u: u.clone(),
            ring,
            polys,
        }))
    })
    .clone()
}
