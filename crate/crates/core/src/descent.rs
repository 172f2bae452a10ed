//! Exhaustive verifiers over finite algebras: the map
//! `α_n: W_n(A) → W_{n−1}(A) × A`, its kernel, its image as an equalizer,
//! the Verschiebung exact sequences, and surjectivity of `W_n(φ)`.

use std::collections::HashSet;
use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{Result, WittError};
use crate::report::Report;
use crate::rings::algebra::reduce_mod_power;
use crate::rings::{Algebra, BaseRing, Elem, FpPoly, Ring};
use crate::witt::{WittContext, WittRing, WittVector};

/// `(truncate(w, n−1), gh_n(w))`
pub fn alpha_map(w: &WittVector) -> Result<(WittVector, Elem)> {
    let n = w.ctx().n;
    if n == 0 {
        return Err(WittError::LengthZero);
    }
    Ok((w.truncate(n - 1)?, w.ghost_component(n, false)?))
}

/// Every vector of `W_n(A)` for finite `A`.
pub fn enumerate(ring: &Arc<WittRing>) -> Result<Vec<WittVector>> {
    let elems = ring.alg.ring.elements().ok_or_else(|| {
        WittError::InvalidContext(format!("{} is not finite", ring.alg.ring))
    })?;
    let mut tuples: Vec<Vec<Elem>> = vec![Vec::new()];
    for _ in 0..ring.len() {
        tuples = tuples
            .into_iter()
            .flat_map(|t| {
                elems.iter().map(move |e| {
                    let mut t = t.clone();
                    t.push(e.clone());
                    t
                })
            })
            .collect();
    }
    tuples.into_iter().map(|c| ring.vector(c)).collect()
}

fn key(w: &WittVector) -> Vec<Elem> {
    w.components().to_vec()
}

fn merge(mut a: Report, b: Report) -> Report {
    a.absorb(b);
    a
}

fn fmt(w: &WittVector) -> String {
    w.format()
}

/// A named finite algebra over a principal base, with the uniformizer used
/// for its Witt vectors.
#[derive(Clone, Debug)]
pub struct FiniteAlgebra {
    pub name: String,
    pub pi: Elem,
    pub alg: Algebra,
}

impl FiniteAlgebra {
    pub fn integers_mod(m: u64, p: i64) -> Result<FiniteAlgebra> {
        let ring = if m == p as u64 { Ring::prime_field(m)? } else { Ring::integers_mod(m)? };
        Ok(FiniteAlgebra {
            name: format!("Z/{m}, pi={p}"),
            pi: Elem::int(p),
            alg: Algebra::over_integers(ring),
        })
    }

    /// `F_p[t]/(t^k)` over `F_p[t]` with `π = t`.
    pub fn truncated_poly(p: u64, k: usize) -> Result<FiniteAlgebra> {
        let base = BaseRing::fpt(p)?;
        let ring = Ring::quotient(p, "t", FpPoly::monomial(k))?;
        Ok(FiniteAlgebra {
            name: format!("F{p}[t]/(t^{k}), pi=t"),
            pi: Elem::Poly(FpPoly::monomial(1)),
            alg: Algebra::new(&base, ring)?,
        })
    }

    /// The standard battery: ℤ/4, ℤ/8, ℤ/9, F₂, F₃, F₂[t]/(t²).
    pub fn battery() -> Vec<FiniteAlgebra> {
        vec![
            FiniteAlgebra::integers_mod(4, 2).unwrap(),
            FiniteAlgebra::integers_mod(8, 2).unwrap(),
            FiniteAlgebra::integers_mod(9, 3).unwrap(),
            FiniteAlgebra::integers_mod(2, 2).unwrap(),
            FiniteAlgebra::integers_mod(3, 3).unwrap(),
            FiniteAlgebra::truncated_poly(2, 2).unwrap(),
        ]
    }

    pub fn witt(&self, n: usize) -> Result<Arc<WittRing>> {
        WittRing::new(WittContext::new(self.alg.base.clone(), self.pi.clone(), n)?, self.alg.clone())
    }

    fn size(&self) -> u64 {
        self.alg.ring.cardinality().unwrap()
    }
}

/// `ker α_n = {(0,…,0,a) : π^n a = 0}` and `(ker α_n)² = 0`.
pub fn kernel_report(ring: &Arc<WittRing>) -> Result<Report> {
    let n = ring.ctx.n;
    if n == 0 {
        return Err(WittError::LengthZero);
    }
    let mut report = Report::new(
        format!("descent-kernel[{}; {}]", ring.ctx, ring.alg.ring),
        "ker(alpha_n) = {(0,..,0,a) : pi^n a = 0}, square-zero",
    );
    let all = enumerate(ring)?;
    let kernel: Vec<&WittVector> = all
        .iter()
        .filter(|w| {
            let (head, g) = alpha_map(w).unwrap();
            head.is_zero() && ring.alg.ring.is_zero(&g)
        })
        .collect();
    let a_ring = &ring.alg.ring;
    let pi_n = a_ring.pow(&ring.alg.scalar(&ring.ctx.pi), n as u64);
    let expected: HashSet<Vec<Elem>> = a_ring
        .elements()
        .unwrap()
        .into_iter()
        .filter(|a| a_ring.is_zero(&a_ring.mul(&pi_n, a)))
        .map(|a| {
            let mut c = vec![a_ring.zero(); n];
            c.push(a);
            c
        })
        .collect();
    let found: HashSet<Vec<Elem>> = kernel.iter().map(|w| key(w)).collect();
    for w in &kernel {
        report.check(expected.contains(&key(w)), || format!("{} is in the kernel but not of the form (0,..,0,a)", fmt(w)));
    }
    for c in &expected {
        report.check(found.contains(c), || format!("{c:?} has pi^n a = 0 but is not in the kernel"));
    }
    let products = kernel
        .par_iter()
        .map(|x| {
            let mut r = Report::new("", "");
            for y in &kernel {
                let prod = x.mul(y);
                r.check(matches!(&prod, Ok(z) if z.is_zero()), || {
                    format!("{} * {} is not zero", fmt(x), fmt(y))
                });
            }
            r
        })
        .reduce(|| Report::new("", ""), merge);
    report.absorb(products);
    Ok(report)
}

/// `im α_n` equals `{(a, b) : rgh_n(a) ≡ b mod π^n}`.
pub fn equalizer_report(ring: &Arc<WittRing>) -> Result<Report> {
    let n = ring.ctx.n;
    if n == 0 {
        return Err(WittError::LengthZero);
    }
    let mut report = Report::new(
        format!("descent-equalizer[{}; {}]", ring.ctx, ring.alg.ring),
        "im(alpha_n) = equalizer of rgh_n o pr1 and pr2 mod pi^n",
    );
    let image: HashSet<(Vec<Elem>, Elem)> = enumerate(ring)?
        .par_iter()
        .map(|w| {
            let (head, g) = alpha_map(w).unwrap();
            (key(&head), g)
        })
        .collect();
    let lower = ring.with_len(n - 1);
    let alg = &ring.alg;
    let elems = alg.ring.elements().unwrap();
    let mut equalizer = HashSet::new();
    for a in enumerate(&lower)? {
        let r = a.ghost_component(n, true)?;
        for b in &elems {
            if reduce_mod_power(b, &ring.ctx.pi, n as u32, alg)? == r {
                equalizer.insert((key(&a), b.clone()));
            }
        }
    }
    for pair in &image {
        report.check(equalizer.contains(pair), || format!("alpha image {pair:?} is outside the equalizer"));
    }
    for pair in &equalizer {
        report.check(image.contains(pair), || format!("equalizer element {pair:?} is not in the image"));
    }
    Ok(report)
}

/// `α_n` preserves sums and products, over all pairs.
pub fn alpha_homomorphism_report(ring: &Arc<WittRing>) -> Result<Report> {
    if ring.ctx.n == 0 {
        return Err(WittError::LengthZero);
    }
    let all = enumerate(ring)?;
    let a_ring = &ring.alg.ring;
    let alphas: Vec<(WittVector, Elem)> = all.iter().map(|w| alpha_map(w).unwrap()).collect();
    let body = (0..all.len())
        .into_par_iter()
        .map(|i| {
            let mut r = Report::new("", "");
            let (x, (xh, xg)) = (&all[i], &alphas[i]);
            for (y, (yh, yg)) in all.iter().zip(&alphas) {
                let ok = (|| -> Result<bool> {
                    let (sh, sg) = alpha_map(&x.add(y)?)?;
                    let (ph, pg) = alpha_map(&x.mul(y)?)?;
                    Ok(sh == xh.add(yh)?
                        && sg == a_ring.add(xg, yg)
                        && ph == xh.mul(yh)?
                        && pg == a_ring.mul(xg, yg))
                })();
                r.check(ok == Ok(true), || format!("x = {}, y = {}", fmt(x), fmt(y)));
            }
            r
        })
        .reduce(|| Report::new("", ""), merge);
    let mut report = Report::new(
        format!("descent-alpha-hom[{}; {}]", ring.ctx, ring.alg.ring),
        "alpha_n is a ring map W_n(A) -> W_(n-1)(A) x A",
    );
    report.absorb(body);
    Ok(report)
}

/// `gh_i(w) ≡ x_0^{q^i} mod π` for every `w` and `i ≤ n`.
pub fn nilpotence_report(ring: &Arc<WittRing>) -> Result<Report> {
    let alg = &ring.alg;
    let mut report = Report::new(
        format!("descent-ghost-congruence[{}; {}]", ring.ctx, alg.ring),
        "gh_i(w) = x_0^(q^i) mod pi",
    );
    for w in enumerate(ring)? {
        let x0 = &w.components()[0];
        for i in 0..=ring.ctx.n {
            let lhs = reduce_mod_power(&w.ghost_component(i, false)?, &ring.ctx.pi, 1, alg)?;
            let rhs = reduce_mod_power(&alg.ring.pow(x0, ring.ctx.q.pow(i as u32)), &ring.ctx.pi, 1, alg)?;
            report.check(lhs == rhs, || format!("w = {}, i = {i}", fmt(&w)));
        }
    }
    Ok(report)
}

/// The sequence `0 → W_n(A) →V^j W_{n+j}(A) → W_{j−1}(A) → 0` is exact, and
/// each graded piece `ker(W_i → W_{i−1})` has `|A|` elements.
pub fn v_sequence_report(ring: &Arc<WittRing>, j: usize) -> Result<Report> {
    let n = ring.ctx.n;
    let size = ring.alg.ring.cardinality().unwrap();
    let mut report = Report::new(
        format!("descent-v-sequence[{}; {}; j={j}]", ring.ctx, ring.alg.ring),
        "0 -> W_n -V^j-> W_(n+j) -> W_(j-1) -> 0 exact",
    );
    let small = enumerate(ring)?;
    let images: Vec<WittVector> = small.iter().map(|x| x.verschiebung(j)).collect();
    if j == 0 {
        for (x, v) in small.iter().zip(&images) {
            report.check(x == v, || format!("V^0({}) = {}", fmt(x), fmt(v)));
        }
        return Ok(report);
    }
    let image_set: HashSet<Vec<Elem>> = images.iter().map(key).collect();
    report.check(image_set.len() == small.len(), || {
        format!("V^{j} is not injective: {} images of {} vectors", image_set.len(), small.len())
    });
    let big = ring.with_len(n + j);
    let mut quotient = HashSet::new();
    for w in enumerate(&big)? {
        let t = w.truncate(j - 1)?;
        let in_kernel = t.is_zero();
        report.check(in_kernel == image_set.contains(&key(&w)), || {
            if in_kernel {
                format!("{} is in the truncation kernel but not in im V^{j}", fmt(&w))
            } else {
                format!("{} is in im V^{j} but truncates to {}", fmt(&w), fmt(&t))
            }
        });
        quotient.insert(key(&t));
    }
    report.check(quotient.len() as u64 == size.pow(j as u32), || {
        format!("truncation to W_{} hits {} of {} vectors", j - 1, quotient.len(), size.pow(j as u32))
    });
    for i in 1..=n + j {
        let count = enumerate(&ring.with_len(i))?
            .iter()
            .filter(|w| w.truncate(i - 1).unwrap().is_zero())
            .count() as u64;
        report.check(count == size, || format!("|ker(W_{i} -> W_{})| = {count}, expected {size}", i - 1));
    }
    Ok(report)
}

/// A ring map between finite algebras over the same base.
#[derive(Clone)]
pub struct FiniteMap {
    pub source: FiniteAlgebra,
    pub target: FiniteAlgebra,
    map: Arc<dyn Fn(&Elem) -> Elem + Send + Sync>,
}

impl std::fmt::Debug for FiniteMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} -> {}", self.source.name, self.target.name)
    }
}

impl FiniteMap {
    /// The structure map `source → target` determined by integers and, over
    /// `F_p[t]`, by `t ↦ t_image`. Rejects maps that are not surjective.
    pub fn canonical(source: FiniteAlgebra, target: FiniteAlgebra) -> Result<FiniteMap> {
        let tr = target.alg.ring.clone();
        let t_image = target.alg.t_image.clone();
        let map: Arc<dyn Fn(&Elem) -> Elem + Send + Sync> = Arc::new(move |a: &Elem| match a {
            Elem::Int(k) => tr.from_int(k),
            Elem::Poly(f) => {
                let t = t_image.clone().unwrap_or_else(|| tr.zero());
                let mut acc = tr.zero();
                for c in f.coeffs().iter().rev() {
                    acc = tr.add(&tr.mul(&acc, &t), &tr.from_int(&(*c).into()));
                }
                acc
            }
            other => other.clone(),
        });
        let fm = FiniteMap { source, target, map };
        let image: HashSet<Elem> = fm.source.alg.ring.elements().unwrap().iter().map(|a| fm.apply(a)).collect();
        if image.len() as u64 != fm.target.size() {
            return Err(WittError::NotSurjective(format!("{fm:?}")));
        }
        Ok(fm)
    }

    pub fn apply(&self, a: &Elem) -> Elem {
        (self.map)(a)
    }
}

/// `W_n(φ)` is onto when `φ` is.
pub fn surjectivity_report(phi: &FiniteMap, n: usize) -> Result<Report> {
    let src = phi.source.witt(n)?;
    let tgt = phi.target.witt(n)?;
    let mut report = Report::new(
        format!("descent-surjective[{:?}; n={n}]", phi),
        "phi onto => W_n(phi) onto",
    );
    let mut image = HashSet::new();
    for w in enumerate(&src)? {
        image.insert(w.components().iter().map(|c| phi.apply(c)).collect::<Vec<_>>());
    }
    let all = enumerate(&tgt)?;
    for w in &all {
        report.check(image.contains(&key(w)), || format!("{} has no preimage", fmt(w)));
    }
    Ok(report)
}

/// All descent reports over the standard battery with `n ≤ max_n` and
/// `j ≤ max_j`.
pub fn battery_reports(max_n: usize, max_j: usize) -> Result<Vec<Report>> {
    let mut jobs: Vec<Box<dyn Fn() -> Result<Report> + Send + Sync>> = Vec::new();
    for fa in FiniteAlgebra::battery() {
        for n in 0..=max_n {
            let ring = fa.witt(n)?;
            if n >= 1 {
                let r = ring.clone();
                jobs.push(Box::new(move || kernel_report(&r)));
                let r = ring.clone();
                jobs.push(Box::new(move || equalizer_report(&r)));
                let r = ring.clone();
                jobs.push(Box::new(move || alpha_homomorphism_report(&r)));
            }
            let r = ring.clone();
            jobs.push(Box::new(move || nilpotence_report(&r)));
            for j in 0..=max_j {
                let r = ring.clone();
                jobs.push(Box::new(move || v_sequence_report(&r, j)));
            }
        }
    }
    let maps = vec![
        (FiniteAlgebra::integers_mod(4, 2)?, FiniteAlgebra::integers_mod(2, 2)?),
        (FiniteAlgebra::integers_mod(8, 2)?, FiniteAlgebra::integers_mod(4, 2)?),
        (FiniteAlgebra::integers_mod(9, 3)?, FiniteAlgebra::integers_mod(3, 3)?),
        (FiniteAlgebra::integers_mod(4, 2)?, FiniteAlgebra::integers_mod(4, 2)?),
        (FiniteAlgebra::truncated_poly(2, 2)?, residue_field_f2()?),
    ];
    for (a, b) in maps {
        let phi = FiniteMap::canonical(a, b)?;
        for n in 0..=max_n {
            let phi = phi.clone();
            jobs.push(Box::new(move || surjectivity_report(&phi, n)));
        }
    }
    let mut reports = jobs.par_iter().map(|job| job()).collect::<Result<Vec<_>>>()?;
    reports.sort_by(|a, b| a.claim_id.cmp(&b.claim_id));
    Ok(reports)
}

/// `F₂` as an `F₂[t]`-algebra with `t ↦ 0`.
pub fn residue_field_f2() -> Result<FiniteAlgebra> {
    Ok(FiniteAlgebra {
        name: "F2[t]/(t), pi=t".into(),
        pi: Elem::Poly(FpPoly::monomial(1)),
        alg: Algebra::over_fpt(2, Ring::prime_field(2)?, Elem::int(0))?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Elem> {
        v.iter().map(|&x| Elem::int(x)).collect()
    }

    #[test]
    fn alpha_examples() {
        let z = WittRing::over_base(WittContext::integers(2, 1).unwrap());
        let (h, g) = alpha_map(&z.vector(ints(&[3, 5])).unwrap()).unwrap();
        assert_eq!(h.components(), ints(&[3]).as_slice());
        assert_eq!(g, Elem::int(9 + 10));
        let (h, g) = alpha_map(&z.zero()).unwrap();
        assert!(h.is_zero() && g == Elem::int(0));
        let z3 = WittRing::over_base(WittContext::integers(3, 2).unwrap());
        let (h, g) = alpha_map(&z3.teichmuller(&Elem::int(2))).unwrap();
        assert_eq!(h, z3.with_len(1).teichmuller(&Elem::int(2)));
        assert_eq!(g, Elem::int(512));
        assert_eq!(alpha_map(&z.with_len(0).one()).unwrap_err(), WittError::LengthZero);
    }

    #[test]
    fn kernels_of_small_rings() {
        let z4 = FiniteAlgebra::integers_mod(4, 2).unwrap().witt(1).unwrap();
        let r = kernel_report(&z4).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
        let kernel: Vec<_> = enumerate(&z4)
            .unwrap()
            .into_iter()
            .filter(|w| { let (h, g) = alpha_map(w).unwrap(); h.is_zero() && g == Elem::int(0) })
            .map(|w| w.components().to_vec())
            .collect();
        assert_eq!(kernel, vec![ints(&[0, 0]), ints(&[0, 2])]);
        let f2 = FiniteAlgebra::integers_mod(2, 2).unwrap().witt(1).unwrap();
        assert!(kernel_report(&f2).unwrap().passed());
    }

    #[test]
    fn equalizer_counts() {
        let f3 = FiniteAlgebra::integers_mod(3, 3).unwrap().witt(1).unwrap();
        let r = equalizer_report(&f3).unwrap();
        assert!(r.passed());
        // the image has 3 elements; both inclusions are checked
        assert_eq!(r.universe_size, 6);
        assert!(equalizer_report(&FiniteAlgebra::integers_mod(4, 2).unwrap().witt(1).unwrap())
            .unwrap()
            .passed());
    }

    #[test]
    fn v_sequences() {
        let z4 = FiniteAlgebra::integers_mod(4, 2).unwrap().witt(1).unwrap();
        for j in 0..=2 {
            assert!(v_sequence_report(&z4, j).unwrap().passed());
        }
        let poly = FiniteAlgebra::truncated_poly(2, 2).unwrap().witt(1).unwrap();
        assert!(v_sequence_report(&poly, 1).unwrap().passed());
    }

    #[test]
    fn surjectivity() {
        let phi = FiniteMap::canonical(
            FiniteAlgebra::integers_mod(4, 2).unwrap(),
            FiniteAlgebra::integers_mod(2, 2).unwrap(),
        )
        .unwrap();
        for n in 0..=2 {
            assert!(surjectivity_report(&phi, n).unwrap().passed());
        }
        let phi = FiniteMap::canonical(FiniteAlgebra::truncated_poly(2, 2).unwrap(), residue_field_f2().unwrap()).unwrap();
        assert!(surjectivity_report(&phi, 2).unwrap().passed());
        let err = FiniteMap::canonical(
            FiniteAlgebra::integers_mod(2, 2).unwrap(),
            FiniteAlgebra::integers_mod(4, 2).unwrap(),
        );
        assert!(matches!(err, Err(WittError::NotSurjective(_))));
    }

    #[test]
    fn nilpotence_and_homomorphism() {
        let r = FiniteAlgebra::truncated_poly(2, 2).unwrap().witt(2).unwrap();
        assert!(nilpotence_report(&r).unwrap().passed());
        assert!(alpha_homomorphism_report(&r).unwrap().passed());
    }
}
