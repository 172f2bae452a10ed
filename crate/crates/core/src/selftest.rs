//! Seeded verification batteries. Each claim is a [`Report`]; suites are
//! groups of claims run in parallel and returned sorted by claim id.

use std::collections::{BTreeMap, HashSet};
use std::sync::Arc;

use num_bigint::BigInt;
use rand::Rng as _;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::delta::{check_delta_axioms, FrobeniusLiftSpec};
use crate::descent::{battery_reports, FiniteAlgebra};
use crate::error::{Result, WittError};
use crate::multi::{
    big_ghost_congruence_failures, classical_big_ghost, BigWittChange, MultiIndex, MultiWittRing,
    PrimeFamily, TruncationSet,
};
use crate::presentations::{coord_change, delta_expand, theta_expand, verify_wn_presentation};
use crate::report::Report;
use crate::rings::mpoly::evaluate;
use crate::rings::{Algebra, BaseRing, Elem, FpPoly, Ring};
use crate::witt::{structural_polys, OpKind, WittContext, WittRing, WittVector};

pub const SUITES: [&str; 10] = [
    "ring-axioms",
    "ghost",
    "verschiebung",
    "frobenius",
    "teichmuller",
    "delta-axioms",
    "descent",
    "multi-prime",
    "presentations",
    "all",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Size {
    Small,
    Medium,
}

impl Size {
    pub fn parse(s: &str) -> Result<Size> {
        match s {
            "small" => Ok(Size::Small),
            "medium" => Ok(Size::Medium),
            _ => Err(WittError::parse(0, format!("unknown size {s:?}"))),
        }
    }

    fn samples(self) -> usize {
        match self {
            Size::Small => 100,
            Size::Medium => 1000,
        }
    }
}

/// Random element of `A`.
pub fn sample_elem(ring: &Ring, rng: &mut ChaCha8Rng) -> Elem {
    match ring {
        Ring::Integers => Elem::int(rng.gen_range(-20..=20)),
        Ring::Poly { p, .. } => {
            let deg = rng.gen_range(0..=3);
            Elem::Poly(FpPoly::from_coeffs((0..=deg).map(|_| rng.gen_range(0..*p)).collect(), *p))
        }
        _ => {
            let elems = ring.elements().expect("sampling needs Z, F_p[t] or a finite ring");
            elems[rng.gen_range(0..elems.len())].clone()
        }
    }
}

pub fn sample_vector(ring: &Arc<WittRing>, rng: &mut ChaCha8Rng) -> WittVector {
    let comps = (0..ring.len()).map(|_| sample_elem(&ring.alg.ring, rng)).collect();
    ring.vector(comps).unwrap()
}

/// The contexts with `q ∈ {2,3,4,5}` and `n ≤ max_n` over ℤ and `F_p[t]`.
pub fn standard_contexts(max_n: usize) -> Vec<WittContext> {
    let mut out = Vec::new();
    for n in 0..=max_n {
        for p in [2, 3, 5] {
            out.push(WittContext::integers(p, n).unwrap());
        }
        out.push(WittContext::fpt(2, "t", n).unwrap());
        out.push(WittContext::fpt(3, "t", n).unwrap());
        out.push(WittContext::fpt(2, "t^2 + t + 1", n).unwrap());
        out.push(WittContext::fpt(5, "t", n).unwrap());
    }
    out
}

/// Algebras paired with a context for operator identities: ℤ and ℤ/8 over
/// ℤ; `F₂[t]/(t²)` in characteristic 2, and `F_p[t]` itself otherwise.
pub fn operator_algebras(ctx: &WittContext) -> Vec<Algebra> {
    match &ctx.base {
        BaseRing::Integers => vec![
            Algebra::over_integers(Ring::Integers),
            Algebra::over_integers(Ring::integers_mod(8).unwrap()),
        ],
        BaseRing::FpT(2) => vec![FiniteAlgebra::truncated_poly(2, 2).unwrap().alg],
        base => vec![Algebra::base_itself(base)],
    }
}

fn par_reports(jobs: Vec<Box<dyn Fn() -> Result<Report> + Send + Sync>>) -> Result<Vec<Report>> {
    let mut reports = jobs.par_iter().map(|j| j()).collect::<Result<Vec<_>>>()?;
    reports.sort_by(|a, b| a.claim_id.cmp(&b.claim_id));
    Ok(reports)
}

/// `k ↦ k·[1]` is a ring isomorphism `ℤ/p^{n+1} → W_n(F_p)`.
pub fn wn_fp_isomorphism(p: u64, n: usize) -> Result<Report> {
    let ring = WittRing::new(
        WittContext::integers(p as i64, n)?,
        Algebra::over_integers(Ring::prime_field(p)?),
    )?;
    let modulus = p.pow(n as u32 + 1);
    let mut report = Report::new(format!("wn-fp-iso[p={p}, n={n}]"), "W_n(F_p) = Z/p^(n+1)");
    let one = ring.one();
    let mut images = vec![ring.zero()];
    for k in 1..modulus {
        let next = images[k as usize - 1].add(&one)?;
        images.push(next);
    }
    let distinct: HashSet<Vec<Elem>> = images.iter().map(|w| w.components().to_vec()).collect();
    report.check(distinct.len() as u64 == modulus, || format!("{} distinct images", distinct.len()));
    report.check(images[modulus as usize - 1].add(&one)?.is_zero(), || "p^(n+1)·[1] is not zero".into());
    for a in 0..modulus {
        for b in 0..modulus {
            let (x, y) = (&images[a as usize], &images[b as usize]);
            report.check(x.add(y)? == images[((a + b) % modulus) as usize], || format!("{a} + {b}"));
            report.check(x.mul(y)? == images[((a * b) % modulus) as usize], || format!("{a} * {b}"));
        }
    }
    Ok(report)
}

/// Over ℤ with `p = 2`, `n = 2`: unghost succeeds on `⟨a0,a1,a2⟩` with
/// entries in `[−8, 8]` exactly when `a0 ≡ a1 mod 2` and `a1 ≡ a2 mod 4`.
pub fn ghost_congruence_exhaustive() -> Result<Report> {
    let ring = WittRing::over_base(WittContext::integers(2, 2)?);
    let mut report = Report::new("ghost-image-congruence[Z, p=2, n=2]", "a_n = a_(n+1) mod p^(n+1)");
    for a0 in -8i64..=8 {
        for a1 in -8i64..=8 {
            for a2 in -8i64..=8 {
                let expected = (a0 - a1).rem_euclid(2) == 0 && (a1 - a2).rem_euclid(4) == 0;
                let got = ring.ghost_vector(vec![Elem::int(a0), Elem::int(a1), Elem::int(a2)])?.unghost();
                let ok = match &got {
                    Ok(_) => expected,
                    Err(WittError::CongruenceViolation { .. }) => !expected,
                    Err(_) => false,
                };
                report.check(ok, || format!("<{a0},{a1},{a2}>: {got:?}"));
            }
        }
    }
    Ok(report)
}

/// Ring axioms on sampled triples.
pub fn ring_axioms(ring: &Arc<WittRing>, samples: usize, seed: u64) -> Result<Report> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = Report::new(format!("ring-axioms[{}; {}]", ring.ctx, ring.alg.ring), "W_n(A) is a commutative ring");
    let (zero, one) = (ring.zero(), ring.one());
    for _ in 0..samples {
        let a = sample_vector(ring, &mut rng);
        let b = sample_vector(ring, &mut rng);
        let c = sample_vector(ring, &mut rng);
        let w = || format!("a = {a}, b = {b}, c = {c}");
        report.check(a.add(&b)?.add(&c)? == a.add(&b.add(&c)?)?, w);
        report.check(a.add(&b)? == b.add(&a)?, w);
        report.check(a.mul(&b)?.mul(&c)? == a.mul(&b.mul(&c)?)?, w);
        report.check(a.mul(&b)? == b.mul(&a)?, w);
        report.check(a.mul(&b.add(&c)?)? == a.mul(&b)?.add(&a.mul(&c)?)?, w);
        report.check(a.add(&zero)? == a && a.mul(&one)? == a, w);
        report.check(a.add(&a.neg())?.is_zero(), w);
    }
    Ok(report)
}

/// Ghost map is additive and multiplicative, and unghost inverts it.
pub fn ghost_homomorphism(ring: &Arc<WittRing>, samples: usize, seed: u64) -> Result<Report> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = Report::new(format!("ghost-hom[{}; {}]", ring.ctx, ring.alg.ring), "gh_k = sum pi^i x_i^(q^(k-i)) is a ring map");
    let r = &ring.alg.ring;
    for _ in 0..samples {
        let a = sample_vector(ring, &mut rng);
        let b = sample_vector(ring, &mut rng);
        let (ga, gb) = (a.ghost(), b.ghost());
        let sum: Vec<Elem> = ga.entries().iter().zip(gb.entries()).map(|(x, y)| r.add(x, y)).collect();
        let prod: Vec<Elem> = ga.entries().iter().zip(gb.entries()).map(|(x, y)| r.mul(x, y)).collect();
        report.check(a.add(&b)?.ghost().entries() == sum.as_slice(), || format!("a = {a}, b = {b}"));
        report.check(a.mul(&b)?.ghost().entries() == prod.as_slice(), || format!("a = {a}, b = {b}"));
        if ring.is_torsion_free() {
            report.check(ga.unghost()? == a, || format!("unghost(ghost({a}))"));
        }
    }
    Ok(report)
}

/// Reduced ghost components do not depend on the unseen tail.
pub fn reduced_ghost_tail(ring: &Arc<WittRing>, samples: usize, seed: u64) -> Result<Report> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = Report::new(format!("reduced-ghost[{}; {}]", ring.ctx, ring.alg.ring), "rgh_i well defined mod pi^(n+1)");
    for _ in 0..samples {
        let a = sample_vector(ring, &mut rng);
        let tail: Vec<Elem> = (0..3).map(|_| sample_elem(&ring.alg.ring, &mut rng)).collect();
        for i in 0..ring.len() + 3 {
            report.check(a.ghost_component(i, true)? == a.reduced_ghost_with_tail(i, &tail)?, || {
                format!("a = {a}, i = {i}")
            });
        }
    }
    Ok(report)
}

/// ψV = π, V(x)z = V(xψ(z)), V(x)V(y) = πV(xy) and additivity of V, on
/// `x, y ∈ W_{n−1}(A)`, `z ∈ W_n(A)`.
pub fn verschiebung_identities(ring: &Arc<WittRing>, samples: usize, seed: u64) -> Result<Report> {
    let mut report = Report::new(
        format!("verschiebung[{}; {}]", ring.ctx, ring.alg.ring),
        "psi V = pi, V(x) z = V(x psi(z)), V(x) V(y) = pi V(xy)",
    );
    let n = ring.ctx.n;
    if n == 0 {
        return Ok(report);
    }
    let lower = ring.with_len(n - 1);
    let pi = &ring.ctx.pi;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let x = sample_vector(&lower, &mut rng);
        let y = sample_vector(&lower, &mut rng);
        let z = sample_vector(ring, &mut rng);
        let (vx, vy) = (x.verschiebung(1), y.verschiebung(1));
        let w = || format!("x = {x}, y = {y}, z = {z}");
        report.check(vx.frobenius()? == x.scale(pi), w);
        report.check(vx.mul(&z)? == x.mul(&z.frobenius()?)?.verschiebung(1), w);
        report.check(vx.mul(&vy)? == x.mul(&y)?.verschiebung(1).scale(pi), w);
        report.check(x.add(&y)?.verschiebung(1) == vx.add(&vy)?, w);
    }
    Ok(report)
}

/// ψ is a ring map, `ψ[a] = [a^q]`, and `ψ(x)_0 ≡ x_0^q mod π`.
pub fn frobenius_identities(ring: &Arc<WittRing>, samples: usize, seed: u64) -> Result<Report> {
    let mut report = Report::new(
        format!("frobenius[{}; {}]", ring.ctx, ring.alg.ring),
        "psi: W_n -> W_(n-1) ring map, psi[a] = [a^q]",
    );
    if ring.ctx.n == 0 {
        return Ok(report);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let lower = ring.with_len(ring.ctx.n - 1);
    let r = &ring.alg.ring;
    for _ in 0..samples {
        let a = sample_vector(ring, &mut rng);
        let b = sample_vector(ring, &mut rng);
        let s = sample_elem(r, &mut rng);
        let w = || format!("a = {a}, b = {b}, s = {}", r.format(&s));
        report.check(a.add(&b)?.frobenius()? == a.frobenius()?.add(&b.frobenius()?)?, w);
        report.check(a.mul(&b)?.frobenius()? == a.frobenius()?.mul(&b.frobenius()?)?, w);
        report.check(ring.teichmuller(&s).frobenius()? == lower.teichmuller(&r.pow(&s, ring.ctx.q)), w);
        let f0 = a.frobenius()?.components()[0].clone();
        let diff = r.sub(&f0, &r.pow(&a.components()[0], ring.ctx.q));
        let reduced = crate::rings::reduce_mod_power(&diff, &ring.ctx.pi, 1, &ring.alg)?;
        report.check(r.is_zero(&reduced), w);
    }
    report.check(ring.one().frobenius()? == lower.one(), || "psi(1) != 1".into());
    Ok(report)
}

/// `[a][b] = [ab]`, `teich_scale(a, w) = [a]·w`, ghost of `[a]` is
/// `(a, a^q, a^{q²}, …)`.
pub fn teichmuller_identities(ring: &Arc<WittRing>, samples: usize, seed: u64) -> Result<Report> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = Report::new(
        format!("teichmuller[{}; {}]", ring.ctx, ring.alg.ring),
        "[a][b] = [ab], gh_k[a] = a^(q^k)",
    );
    let r = &ring.alg.ring;
    for _ in 0..samples {
        let a = sample_elem(r, &mut rng);
        let b = sample_elem(r, &mut rng);
        let z = sample_vector(ring, &mut rng);
        let w = || format!("a = {}, b = {}, z = {z}", r.format(&a), r.format(&b));
        report.check(ring.teichmuller(&a).mul(&ring.teichmuller(&b))? == ring.teichmuller(&r.mul(&a, &b)), w);
        report.check(z.teich_scale(&a) == ring.teichmuller(&a).mul(&z)?, w);
        let gh = ring.teichmuller(&a).ghost();
        let ok = gh.entries().iter().enumerate().all(|(k, g)| *g == r.pow(&a, ring.ctx.q.pow(k as u32)));
        report.check(ok, w);
    }
    report.check(ring.teichmuller(&r.one()) == ring.one(), || "[1] != 1".into());
    Ok(report)
}

/// Operator identities for one context and algebra.
pub fn operator_identities(ctx: &WittContext, alg: &Algebra, samples: usize, seed: u64) -> Result<Vec<Report>> {
    let ring = WittRing::new(ctx.clone(), alg.clone())?;
    let mut out = vec![
        verschiebung_identities(&ring, samples, seed)?,
        teichmuller_identities(&ring, samples, seed ^ 0x5eed)?,
    ];
    if ring.is_torsion_free() {
        out.push(ghost_homomorphism(&ring, samples, seed ^ 0x9057)?);
    }
    Ok(out)
}

/// Structural polynomials synthesize and are ghost compatible.
pub fn structural_integrity(ctx: &WittContext, op: OpKind) -> Report {
    let mut report = Report::new(format!("structural[{ctx}; {}]", op.name()), "ghost(op(a,b)) = op(ghost a, ghost b)");
    match structural_polys(ctx, op) {
        Ok(set) => report.check(set.verify_ghost_compatibility(), || "ghost compatibility fails".into()),
        Err(WittError::LengthZero) if op == OpKind::Frobenius => {}
        Err(e) => report.check(false, || format!("synthesis failed: {e}")),
    }
    report
}

/// Coaction is a ring map with the expected ghost components.
pub fn coaction_report(spec: &FrobeniusLiftSpec, n: usize, samples: usize, seed: u64) -> Result<Report> {
    let ring = &spec.alg.ring;
    let mut report = Report::new(
        format!("coaction[{} psi={:?}; n={n}]", spec.base(), spec.psi.iter().map(|v| v.iter().map(|e| ring.format(e)).collect::<Vec<_>>()).collect::<Vec<_>>()),
        "A -> W_n(A), gh_k = psi^k",
    );
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let a = spec.sample(&mut rng);
        let b = spec.sample(&mut rng);
        let w = || format!("a = {}, b = {}", ring.format(&a), ring.format(&b));
        let (ca, cb) = (spec.coaction(0, &a, n)?, spec.coaction(0, &b, n)?);
        let mut psi = a.clone();
        let mut ok = true;
        for g in ca.ghost().entries() {
            ok &= *g == psi;
            psi = spec.apply_psi(0, &psi);
        }
        report.check(ok, w);
        report.check(spec.coaction(0, &ring.add(&a, &b), n)? == ca.add(&cb)?, w);
        report.check(spec.coaction(0, &ring.mul(&a, &b), n)? == ca.mul(&cb)?, w);
    }
    Ok(report)
}

/// The δ-specs used by the delta battery.
pub fn delta_battery() -> Vec<FrobeniusLiftSpec> {
    let z = BaseRing::Integers;
    let mut out = Vec::new();
    for p in ["2", "3", "5"] {
        out.push(FrobeniusLiftSpec::parse(&z, &[p], &[], &[&[]]).unwrap());
    }
    for (p, a, b) in [("2", "x^2", "x^2 + 2"), ("3", "x^3", "x^3 + 3"), ("5", "x^5", "x^5 + 5")] {
        out.push(FrobeniusLiftSpec::parse(&z, &[p], &["x"], &[&[a]]).unwrap());
        out.push(FrobeniusLiftSpec::parse(&z, &[p], &["x"], &[&[b]]).unwrap());
    }
    out.push(FrobeniusLiftSpec::parse(&BaseRing::FpT(3), &["t"], &["x"], &[&["x^3"]]).unwrap());
    out.push(FrobeniusLiftSpec::parse(&z, &["2", "3"], &[], &[&[], &[]]).unwrap());
    out
}

fn delta_suite(size: Size, seed: u64) -> Result<Vec<Report>> {
    let mut jobs: Vec<Box<dyn Fn() -> Result<Report> + Send + Sync>> = Vec::new();
    for (k, spec) in delta_battery().into_iter().enumerate() {
        let spec = Arc::new(spec);
        let s = spec.clone();
        jobs.push(Box::new(move || {
            let r = check_delta_axioms(&s, size.samples(), seed + k as u64)?;
            let mut total = Report::new(
                format!("delta-axioms[{k:02}; {} primes {}]", s.base(), s.family.labels().join(",")),
                "delta axioms (1)-(4) with C_a, C_ab",
            );
            for part in r.reports {
                let id = part.claim_id.clone();
                let failures = part.failures.clone();
                total.universe_size += part.universe_size;
                total.failure_count += part.failure_count;
                total.failures.extend(failures.into_iter().take(3).map(|f| format!("{id}: {f}")));
            }
            Ok(total)
        }));
        let s = spec.clone();
        jobs.push(Box::new(move || {
            let mut r = s.check_frobenius_lift();
            r.claim_id = format!("{}[{k:02}]", r.claim_id);
            Ok(r)
        }));
    }
    let z = BaseRing::Integers;
    let id2 = Arc::new(FrobeniusLiftSpec::parse(&z, &["2"], &[], &[&[]])?);
    for n in 0..=3 {
        let s = id2.clone();
        jobs.push(Box::new(move || coaction_report(&s, n, size.samples() / 4, seed)));
    }
    let lift = Arc::new(FrobeniusLiftSpec::parse(&z, &["2"], &["x"], &[&["x^2 + 2"]])?);
    for n in 0..=2 {
        let s = lift.clone();
        jobs.push(Box::new(move || coaction_report(&s, n, size.samples() / 4, seed)));
    }
    jobs.push(Box::new(|| {
        let mut r = Report::new("coaction-teichmuller", "psi(x) = x^p => coaction(x) = [x]");
        for p in ["2", "3"] {
            let s = FrobeniusLiftSpec::parse(&BaseRing::Integers, &[p], &["x"], &[&[&format!("x^{p}")]])?;
            let x = s.alg.ring.gen(0);
            for n in 0..=3 {
                let w = s.coaction(0, &x, n)?;
                r.check(w == w.ring().teichmuller(&x), || format!("p = {p}, n = {n}: {w}"));
            }
        }
        Ok(r)
    }));
    par_reports(jobs)
}

/// Multi-prime composition, ordering independence, classical/nested
/// agreement and big-Witt ghost congruences.
fn multi_suite(size: Size, seed: u64) -> Result<Vec<Report>> {
    let mut jobs: Vec<Box<dyn Fn() -> Result<Report> + Send + Sync>> = Vec::new();
    jobs.push(Box::new(move || {
        let mut r = Report::new("multi-composition[E={p}]", "W_E for E = {p} is W_n");
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for p in [2i64, 3] {
            for n in 0..=2 {
                let fam = PrimeFamily::integers(&[p])?;
                let m = MultiWittRing::new(fam, MultiIndex(vec![n]), Algebra::over_integers(Ring::Integers))?;
                let single = WittRing::over_base(WittContext::integers(p, n)?);
                for _ in 0..size.samples() / 10 {
                    let a = sample_vector(&single, &mut rng);
                    let b = sample_vector(&single, &mut rng);
                    let to_multi = |w: &WittVector| {
                        let comps: BTreeMap<MultiIndex, Elem> =
                            w.components().iter().enumerate().map(|(i, c)| (MultiIndex(vec![i]), c.clone())).collect();
                        m.from_components(&comps)
                    };
                    let (ma, mb) = (to_multi(&a)?, to_multi(&b)?);
                    r.check(ma.add(&mb)? == to_multi(&a.add(&b)?)?, || format!("{a} + {b}"));
                    r.check(ma.mul(&mb)? == to_multi(&a.mul(&b)?)?, || format!("{a} * {b}"));
                }
            }
        }
        Ok(r)
    }));
    jobs.push(Box::new(|| {
        let mut r = Report::new("multi-ordering[E={2,3}, n=(1,1)]", "W_E independent of the ordering");
        let fam = PrimeFamily::integers(&[2, 3])?;
        let idx = MultiIndex(vec![1, 1]);
        let ring = MultiWittRing::new(fam, idx.clone(), Algebra::over_integers(Ring::Integers))?;
        let boxed = idx.box_below();
        let range: Vec<i64> = (-3..=3).collect();
        for a in &range {
            for b in &range {
                for c in &range {
                    for d in &range {
                        let comps: BTreeMap<MultiIndex, Elem> =
                            boxed.iter().cloned().zip([a, b, c, d].map(|v| Elem::int(*v))).collect();
                        let w = ring.from_components(&comps)?;
                        let there = w.reorder(vec![1, 0])?;
                        r.check(there.multi_ghost() == w.multi_ghost(), || w.format().to_string());
                        r.check(there.reorder(vec![0, 1])? == w, || w.format().to_string());
                    }
                }
            }
        }
        Ok(r)
    }));
    jobs.push(Box::new(move || {
        let mut r = Report::new("big-witt-classical[T=div(6)]", "classical big Witt agrees with W_E");
        let set = TruncationSet::divisors_of(6)?;
        let change = BigWittChange::new(&set)?;
        let ring = MultiWittRing::new(set.family.clone(), set.index.clone(), Algebra::over_integers(Ring::Integers))?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..size.samples() {
            let x: BTreeMap<u64, Elem> =
                set.elements().into_iter().map(|d| (d, Elem::int(rng.gen_range(-9..=9)))).collect();
            let nested = change.classical_to_nested(&x, &Ring::Integers);
            let w = ring.from_components(&nested)?;
            let classical = classical_big_ghost(&Ring::Integers, &x);
            let relabeled: BTreeMap<u64, Elem> =
                w.multi_ghost().into_iter().map(|(i, g)| (set.divisor_of(&i), g)).collect();
            r.check(classical == relabeled, || format!("x = {x:?}"));
            r.check(change.nested_to_classical(&nested, &Ring::Integers) == x, || format!("round trip {x:?}"));
            let ints: BTreeMap<u64, BigInt> = relabeled.iter().map(|(&d, g)| (d, g.as_int().clone())).collect();
            r.check(big_ghost_congruence_failures(&ints).is_empty(), || format!("congruence at {x:?}"));
        }
        Ok(r)
    }));
    jobs.push(Box::new(move || {
        let mut r = Report::new("multi-ghost-congruence[T=div(12)]", "a_j = a_(pj) mod p^(1+ord_p(j))");
        let set = TruncationSet::divisors_of(12)?;
        let ring = MultiWittRing::new(set.family.clone(), set.index.clone(), Algebra::over_integers(Ring::Integers))?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 12);
        for _ in 0..size.samples() / 2 {
            let comps: BTreeMap<MultiIndex, Elem> =
                set.index.box_below().into_iter().map(|i| (i, Elem::int(rng.gen_range(-5..=5)))).collect();
            let w = ring.from_components(&comps)?;
            let ghost: BTreeMap<u64, BigInt> =
                w.multi_ghost().into_iter().map(|(i, g)| (set.divisor_of(&i), g.as_int().clone())).collect();
            let fails = big_ghost_congruence_failures(&ghost);
            r.check(fails.is_empty(), || format!("{}: {fails:?}", w.format()));
        }
        Ok(r)
    }));
    par_reports(jobs)
}

fn presentation_suite(size: Size) -> Result<Vec<Report>> {
    let mut jobs: Vec<Box<dyn Fn() -> Result<Report> + Send + Sync>> = Vec::new();
    for p in [2, 3] {
        for n in 0..=4 {
            jobs.push(Box::new(move || verify_wn_presentation(&WittContext::integers(p, n)?)));
        }
    }
    for n in 0..=3 {
        jobs.push(Box::new(move || verify_wn_presentation(&WittContext::fpt(3, "t", n)?)));
    }
    jobs.push(Box::new(|| coordinate_change_report(&WittContext::integers(2, 2)?)));
    jobs.push(Box::new(|| coordinate_change_report(&WittContext::integers(3, 2)?)));
    let max_n = if size == Size::Small { 1 } else { 2 };
    jobs.push(Box::new(move || expansion_consistency(&[2, 3], max_n)));
    par_reports(jobs)
}

/// `δ_0 = θ_0`, `δ_1 = θ_1`, `δ_2 ≠ θ_2`, and the maps are mutually inverse.
pub fn coordinate_change_report(ctx: &WittContext) -> Result<Report> {
    let cc = coord_change(ctx)?;
    let mut r = Report::new(format!("coord-change[{ctx}]"), "delta^0 = theta_0, delta^1 = theta_1, delta^2 != theta_2");
    let differing = cc.differing();
    r.check(!differing.contains(&0) && !differing.contains(&1), || format!("differing indices {differing:?}"));
    if ctx.n >= 2 {
        r.check(differing.contains(&2), || "delta^2 = theta_2".into());
    }
    let tr = cc.theta.ring();
    let thetas: Vec<Elem> = (0..=ctx.n).map(|i| cc.theta.gen(i, 0)).collect();
    r.check(cc.to_theta(tr, &cc.to_delta(tr, &thetas)) == thetas, || "round trip fails".into());
    Ok(r)
}

/// θ and δ expansions agree through the coordinate change, and θ expansion
/// is additive and multiplicative.
pub fn expansion_consistency(primes: &[i64], max_n: usize) -> Result<Report> {
    let mut r = Report::new("presentation-styles", "coord_change(delta_expand f) = theta_expand f");
    let vars = vec!["x".to_string(), "y".to_string()];
    let pr = Ring::multi(Ring::Integers, vars.clone())?;
    let polys = ["x*y + 1", "x^2 - 2*y", "x + y", "3*x"];
    for &p in primes {
        for n in 0..=max_n {
            let ctx = WittContext::integers(p, n)?;
            let cc = coord_change(&ctx)?;
            for s in polys {
                let f = pr.parse(s)?;
                let (dc, de) = delta_expand(&f, &vars, &ctx)?;
                let (_, te) = theta_expand(&f, &vars, &ctx)?;
                let dr = dc.ring().clone();
                let subst: Vec<Elem> = (0..vars.len())
                    .flat_map(|j| {
                        let ds: Vec<Elem> = (0..=n).map(|i| dc.gen(i, j)).collect();
                        cc.to_theta(&dr, &ds)
                    })
                    .collect();
                let via_theta: Vec<Elem> = te
                    .iter()
                    .map(|g| evaluate(g.as_multi(), &dr, &subst, |c| dr.constant(c.clone())))
                    .collect();
                r.check(cc.to_theta(&dr, &de) == via_theta, || format!("p = {p}, n = {n}, f = {s}"));
            }
            for (s, t) in [("x", "y"), ("x + 1", "x*y")] {
                let (f, g) = (pr.parse(s)?, pr.parse(t)?);
                let (tc, ef) = theta_expand(&f, &vars, &ctx)?;
                let (_, eg) = theta_expand(&g, &vars, &ctx)?;
                let (_, efg) = theta_expand(&pr.mul(&f, &g), &vars, &ctx)?;
                let (_, esum) = theta_expand(&pr.add(&f, &g), &vars, &ctx)?;
                let w = WittRing::new(ctx.clone(), tc.alg.clone())?;
                let (vf, vg) = (w.vector(ef)?, w.vector(eg)?);
                r.check(vf.mul(&vg)?.components() == efg.as_slice(), || format!("p = {p}, n = {n}, ({s})({t})"));
                r.check(vf.add(&vg)?.components() == esum.as_slice(), || format!("p = {p}, n = {n}, ({s})+({t})"));
            }
        }
    }
    Ok(r)
}

fn sampled_contexts(size: Size) -> Vec<(WittContext, Algebra)> {
    let max_n = if size == Size::Small { 2 } else { 3 };
    let mut out = Vec::new();
    for ctx in standard_contexts(max_n) {
        if ctx.n == 0 {
            continue;
        }
        for alg in operator_algebras(&ctx) {
            out.push((ctx.clone(), alg));
        }
    }
    out
}

type Check = fn(&Arc<WittRing>, usize, u64) -> Result<Report>;

fn per_context(size: Size, seed: u64, checks: &[Check]) -> Result<Vec<Report>> {
    let mut jobs: Vec<Box<dyn Fn() -> Result<Report> + Send + Sync>> = Vec::new();
    for (k, (ctx, alg)) in sampled_contexts(size).into_iter().enumerate() {
        let ring = WittRing::new(ctx, alg)?;
        for &check in checks {
            let ring = ring.clone();
            jobs.push(Box::new(move || check(&ring, size.samples() / 4, seed.wrapping_add(k as u64))));
        }
    }
    par_reports(jobs)
}

fn ring_axiom_suite(size: Size, seed: u64) -> Result<Vec<Report>> {
    let mut reports = per_context(size, seed, &[ring_axioms])?;
    for p in [2, 3, 5] {
        for n in 0..=if size == Size::Small { 2 } else { 3 } {
            reports.push(wn_fp_isomorphism(p, n)?);
        }
    }
    reports.sort_by(|a, b| a.claim_id.cmp(&b.claim_id));
    Ok(reports)
}

fn ghost_suite(size: Size, seed: u64) -> Result<Vec<Report>> {
    let mut reports = per_context(size, seed, &[ghost_homomorphism_if_torsion_free, reduced_ghost_tail])?;
    reports.push(ghost_congruence_exhaustive()?);
    reports.sort_by(|a, b| a.claim_id.cmp(&b.claim_id));
    Ok(reports)
}

fn ghost_homomorphism_if_torsion_free(ring: &Arc<WittRing>, samples: usize, seed: u64) -> Result<Report> {
    if ring.is_torsion_free() {
        ghost_homomorphism(ring, samples, seed)
    } else {
        // ghost map on the torsion-free cover
        let cover = ring.alg.cover().ok_or_else(|| WittError::TorsionNotSupported(ring.alg.ring.to_string()))?;
        ghost_homomorphism(&WittRing::new(ring.ctx.clone(), cover)?, samples, seed)
    }
}

/// Runs one named suite; `all` runs every suite.
pub fn run_suite(name: &str, size: Size, seed: u64) -> Result<Vec<Report>> {
    let mut reports = match name {
        "ring-axioms" => ring_axiom_suite(size, seed)?,
        "ghost" => ghost_suite(size, seed)?,
        "verschiebung" => per_context(size, seed, &[verschiebung_identities])?,
        "frobenius" => per_context(size, seed, &[frobenius_identities])?,
        "teichmuller" => per_context(size, seed, &[teichmuller_identities])?,
        "delta-axioms" => delta_suite(size, seed)?,
        "descent" => match size {
            Size::Small => battery_reports(1, 1)?,
            Size::Medium => battery_reports(2, 2)?,
        },
        "multi-prime" => multi_suite(size, seed)?,
        "presentations" => presentation_suite(size)?,
        "all" => {
            let parts = SUITES[..SUITES.len() - 1]
                .par_iter()
                .map(|s| run_suite(s, size, seed))
                .collect::<Result<Vec<_>>>()?;
            parts.into_iter().flatten().collect()
        }
        other => return Err(WittError::parse(0, format!("unknown suite {other:?}"))),
    };
    reports.sort_by(|a, b| a.claim_id.cmp(&b.claim_id));
    Ok(reports)
}
