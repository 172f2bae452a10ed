//! Commuting Frobenius lifts on free `R₀`-algebras, the δ-operators they
//! determine, the identities those operators satisfy, and the coaction
//! `A → W_n(A)`.

use std::collections::BTreeMap;
use std::sync::Arc;

use rand::Rng as _;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Deserialize;

use crate::error::{Result, WittError};
use crate::multi::{MultiIndex, MultiWittRing, MultiWittVector, PrimeFamily};
use crate::report::Report;
use crate::rings::mpoly::evaluate;
use crate::rings::{Algebra, BaseRing, Elem, FpPoly, MPoly, Ring};
use crate::witt::{WittRing, WittVector};

/// A free `R₀`-algebra (possibly `R₀` itself) with one endomorphism per prime,
/// given by the images of the generators. Each lift fixes `R₀`.
#[derive(Clone, Debug)]
pub struct FrobeniusLiftSpec {
    pub family: PrimeFamily,
    pub alg: Algebra,
    pub generators: Vec<String>,
    /// `psi[α][j]` is the image of generator `j` under the lift for prime `α`.
    pub psi: Vec<Vec<Elem>>,
}

#[derive(Deserialize)]
struct SpecFile {
    base: String,
    primes: Vec<String>,
    #[serde(default)]
    generators: Vec<String>,
    #[serde(default)]
    psi: BTreeMap<String, BTreeMap<String, String>>,
    #[serde(default)]
    relations: Vec<String>,
}

impl FrobeniusLiftSpec {
    /// `images[k]` lists generator images for `primes[k]`.
    pub fn new(
        base: BaseRing,
        primes: Vec<Elem>,
        generators: Vec<String>,
        images: Vec<Vec<Elem>>,
    ) -> Result<FrobeniusLiftSpec> {
        let alg = if generators.is_empty() {
            Algebra::base_itself(&base)
        } else {
            Algebra::polynomial(&base, generators.clone())?
        };
        let family = PrimeFamily::new(base.clone(), primes.clone())?;
        let mut psi = vec![Vec::new(); family.len()];
        for (pi, imgs) in primes.iter().zip(images) {
            if imgs.len() != generators.len() {
                return Err(WittError::InvalidContext("one image per generator is required".into()));
            }
            if let Some(bad) = imgs.iter().find(|e| !alg.ring.contains(e)) {
                return Err(WittError::InvalidContext(format!("{bad:?} is not in {}", alg.ring)));
            }
            psi[family.position(pi).unwrap()] = imgs;
        }
        Ok(FrobeniusLiftSpec { family, alg, generators, psi })
    }

    /// Builds a spec whose images are written in element syntax.
    pub fn parse(
        base: &BaseRing,
        primes: &[&str],
        generators: &[&str],
        images: &[&[&str]],
    ) -> Result<FrobeniusLiftSpec> {
        let gens: Vec<String> = generators.iter().map(|s| s.to_string()).collect();
        let ring = if gens.is_empty() {
            base.ring()
        } else {
            Ring::multi(base.ring(), gens.clone())?
        };
        let primes = primes.iter().map(|p| base.parse_element(p)).collect::<Result<Vec<_>>>()?;
        let images = images
            .iter()
            .map(|row| row.iter().map(|s| ring.parse(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        FrobeniusLiftSpec::new(base.clone(), primes, gens, images)
    }

    /// Reads `{base, primes, generators, psi: {prime: {generator: poly}}}`.
    /// A prime without a `psi` entry is only accepted when there are no
    /// generators.
    pub fn from_json(text: &str) -> Result<FrobeniusLiftSpec> {
        let file: SpecFile = serde_json::from_str(text)
            .map_err(|e| WittError::parse(e.column(), format!("spec file: {e}")))?;
        if !file.relations.is_empty() {
            return Err(WittError::UnsupportedPresentation(
                "only free polynomial algebras are supported".into(),
            ));
        }
        let base = BaseRing::parse(&file.base)?;
        let gens: Vec<&str> = file.generators.iter().map(|s| s.as_str()).collect();
        let mut rows: Vec<Vec<&str>> = Vec::new();
        for p in &file.primes {
            let map = file.psi.get(p);
            let mut row = Vec::new();
            for g in &gens {
                let img = map.and_then(|m| m.get(*g)).ok_or_else(|| {
                    WittError::InvalidContext(format!("no image of {g} under the lift for {p}"))
                })?;
                row.push(img.as_str());
            }
            rows.push(row);
        }
        let primes: Vec<&str> = file.primes.iter().map(|s| s.as_str()).collect();
        let row_refs: Vec<&[&str]> = rows.iter().map(|r| r.as_slice()).collect();
        FrobeniusLiftSpec::parse(&base, &primes, &gens, &row_refs)
    }

    pub fn base(&self) -> &BaseRing {
        self.family.base()
    }

    fn ring(&self) -> &Ring {
        &self.alg.ring
    }

    fn pi_image(&self, alpha: usize) -> Elem {
        self.alg.scalar(self.family.pi(alpha))
    }

    /// `ψ_α(a)`
    pub fn apply_psi(&self, alpha: usize, a: &Elem) -> Elem {
        if self.generators.is_empty() {
            return a.clone();
        }
        let ring = self.ring();
        evaluate(a.as_multi(), ring, &self.psi[alpha], |c| ring.constant(c.clone()))
    }

    /// `ψ^m(a)`, composing the lifts in family order.
    pub fn apply_psi_power(&self, m: &MultiIndex, a: &Elem) -> Elem {
        let mut out = a.clone();
        for (alpha, &k) in m.0.iter().enumerate() {
            for _ in 0..k {
                out = self.apply_psi(alpha, &out);
            }
        }
        out
    }

    /// `δ_α(a) = (ψ_α(a) − a^{q_α}) / π_α`
    pub fn delta_apply(&self, alpha: usize, a: &Elem) -> Result<Elem> {
        let ring = self.ring();
        let num = ring.sub(&self.apply_psi(alpha, a), &ring.pow(a, self.family.q(alpha)));
        ring.exact_div(&num, &self.pi_image(alpha)).map_err(|_| {
            WittError::LiftViolation(format!(
                "psi_{}({}) is not congruent to its q-th power",
                self.family.labels()[alpha],
                ring.format(a)
            ))
        })
    }

    /// Checks the Frobenius congruence on generators (and on `t` over
    /// `F_p[t]`) and commutation of the lifts.
    pub fn check_frobenius_lift(&self) -> Report {
        let mut report = Report::new("frobenius-lift", "psi_a(x) = x^(q_a) mod pi_a, psi_a psi_b = psi_b psi_a");
        let ring = self.ring();
        let mut probes: Vec<Elem> = (0..self.generators.len()).map(|j| ring.gen(j)).collect();
        if let BaseRing::FpT(_) = self.base() {
            probes.push(self.alg.scalar(&Elem::Poly(FpPoly::monomial(1))));
        }
        let labels = self.family.labels();
        for alpha in 0..self.family.len() {
            for x in &probes {
                report.check(self.delta_apply(alpha, x).is_ok(), || {
                    format!("psi_{}({}) fails the Frobenius congruence", labels[alpha], ring.format(x))
                });
            }
        }
        for a in 0..self.family.len() {
            for b in a + 1..self.family.len() {
                for x in &probes {
                    let ab = self.apply_psi(a, &self.apply_psi(b, x));
                    let ba = self.apply_psi(b, &self.apply_psi(a, x));
                    report.check(ab == ba, || {
                        format!("psi_{} and psi_{} do not commute on {}", labels[a], labels[b], ring.format(x))
                    });
                }
            }
        }
        report
    }

    /// Random element for sampled checks.
    pub fn sample(&self, rng: &mut ChaCha8Rng) -> Elem {
        let ring = self.ring();
        let scalar = |rng: &mut ChaCha8Rng| -> Elem {
            match self.base() {
                BaseRing::Integers => Elem::int(rng.gen_range(-6..=6)),
                BaseRing::FpT(p) => {
                    let deg = rng.gen_range(0..=2);
                    Elem::Poly(FpPoly::from_coeffs((0..=deg).map(|_| rng.gen_range(0..*p)).collect(), *p))
                }
            }
        };
        if self.generators.is_empty() {
            return match self.base() {
                BaseRing::Integers => Elem::int(rng.gen_range(-40..=40)),
                _ => scalar(rng),
            };
        }
        let mut acc = ring.zero();
        for _ in 0..rng.gen_range(1..=3) {
            let mut term = ring.constant(scalar(rng));
            for j in 0..self.generators.len() {
                let e = rng.gen_range(0..=1);
                term = ring.mul(&term, &ring.pow(&ring.gen(j), e));
            }
            acc = ring.add(&acc, &term);
        }
        acc
    }

    /// Degree-bounded symbolic battery: generators, generator + 1, pairwise
    /// products, and `π·x`.
    fn symbolic_inputs(&self) -> Vec<Elem> {
        let ring = self.ring();
        let gens: Vec<Elem> = (0..self.generators.len()).map(|j| ring.gen(j)).collect();
        let mut out = Vec::new();
        for (j, g) in gens.iter().enumerate() {
            out.push(g.clone());
            out.push(ring.add(g, &ring.one()));
            for h in &gens[j..] {
                out.push(ring.mul(g, h));
            }
            for alpha in 0..self.family.len() {
                out.push(ring.mul(g, &self.pi_image(alpha)));
            }
        }
        out
    }

    /// Single-prime coaction `a ↦ w` with `gh_k(w) = ψ_α^k(a)`.
    pub fn coaction(&self, alpha: usize, a: &Elem, n: usize) -> Result<WittVector> {
        let ring = WittRing::new(self.family.context(alpha, n), self.alg.clone())?;
        let mut entries = vec![a.clone()];
        for k in 1..=n {
            entries.push(self.apply_psi(alpha, &entries[k - 1]));
        }
        let comps = ring.unghost_of(&entries).map_err(|e| match e {
            WittError::CongruenceViolation { index, detail } => WittError::LiftViolation(format!(
                "component {index} of the coaction is not integral: {detail}"
            )),
            other => other,
        })?;
        ring.vector(comps)
    }

    /// Multi-prime coaction with multi-ghost entries `ψ^m(a)`.
    pub fn coaction_multi(&self, a: &Elem, n: &MultiIndex) -> Result<MultiWittVector> {
        let ring = self.multi_ring(n)?;
        let ghost: BTreeMap<MultiIndex, Elem> =
            n.box_below().into_iter().map(|m| { let v = self.apply_psi_power(&m, a); (m, v) }).collect();
        ring.multi_unghost(&ghost).map_err(|e| match e {
            WittError::CongruenceViolation { detail, .. } => WittError::LiftViolation(detail),
            other => other,
        })
    }

    pub fn multi_ring(&self, n: &MultiIndex) -> Result<Arc<MultiWittRing>> {
        MultiWittRing::new(self.family.clone(), n.clone(), self.alg.clone())
    }
}

/// `C_α(x,y)` and, for a pair of primes, `C_{α,α'}(x,y,z)`.
#[derive(Clone, Debug)]
pub struct CPolynomials {
    pub ring2: Ring,
    pub ring3: Ring,
    /// One per prime of the family.
    pub c: Vec<Elem>,
    /// Keyed by `(α, α')` with `α ≠ α'`.
    pub c_pair: BTreeMap<(usize, usize), Elem>,
}

/// `(x^q + y^q − (x+y)^q) / π` over `R₀[x,y]`.
pub fn c_alpha(base: &BaseRing, pi: &Elem, q: u64) -> Result<(Ring, Elem)> {
    let ring = Ring::multi(base.ring(), vec!["x".into(), "y".into()])?;
    let (x, y) = (ring.gen(0), ring.gen(1));
    let num = ring.sub(&ring.add(&ring.pow(&x, q), &ring.pow(&y, q)), &ring.pow(&ring.add(&x, &y), q));
    let c = ring.exact_div(&num, &ring.constant(pi.clone()))?;
    Ok((ring, c))
}

fn subst(f: &Elem, target: &Ring, values: &[Elem]) -> Elem {
    evaluate(f.as_multi(), target, values, |c| target.constant(c.clone()))
}

/// The polynomials for every prime and ordered pair of the family.
pub fn c_polynomials(family: &PrimeFamily) -> Result<CPolynomials> {
    let base = family.base();
    let r0 = base.ring();
    let ring3 = Ring::multi(r0.clone(), vec!["x".into(), "y".into(), "z".into()])?;
    let mut ring2 = Ring::multi(r0.clone(), vec!["x".into(), "y".into()])?;
    let mut c = Vec::new();
    for alpha in 0..family.len() {
        let (r, p) = c_alpha(base, family.pi(alpha), family.q(alpha))?;
        ring2 = r;
        c.push(p);
    }
    let integrity = |e: WittError| WittError::InternalIntegrity(format!("C-polynomial: {e}"));
    let mut c_pair = BTreeMap::new();
    let (x, y, z) = (ring3.gen(0), ring3.gen(1), ring3.gen(2));
    for a in 0..family.len() {
        for b in 0..family.len() {
            if a == b {
                continue;
            }
            let (pa, pb) = (family.pi(a).clone(), family.pi(b).clone());
            let (qa, qb) = (family.q(a), family.q(b));
            let pa3 = ring3.constant(pa.clone());
            let pb3 = ring3.constant(pb.clone());
            // C_b(x^{q_a}, π_a y) / π_a
            let t1 = subst(&c[b], &ring3, &[ring3.pow(&x, qa), ring3.mul(&pa3, &y)]);
            let t1 = ring3.exact_div(&t1, &pa3).map_err(integrity)?;
            // C_a(x^{q_b}, π_b z) / π_b
            let t2 = subst(&c[a], &ring3, &[ring3.pow(&x, qb), ring3.mul(&pb3, &z)]);
            let t2 = ring3.exact_div(&t2, &pb3).map_err(integrity)?;
            // δ_a(π_b)/π_b and δ_b(π_a)/π_a with ψ = id on R₀
            let da_pb = r0.exact_div(&r0.sub(&pb, &r0.pow(&pb, qa)), &pa).map_err(integrity)?;
            let k_ab = r0.exact_div(&da_pb, &pb).map_err(integrity)?;
            let db_pa = r0.exact_div(&r0.sub(&pa, &r0.pow(&pa, qb)), &pb).map_err(integrity)?;
            let k_ba = r0.exact_div(&db_pa, &pa).map_err(integrity)?;
            let t3 = ring3.mul(&ring3.constant(k_ab), &ring3.pow(&z, qa));
            let t4 = ring3.mul(&ring3.constant(k_ba), &ring3.pow(&y, qb));
            let total = ring3.add(&ring3.sub(&ring3.sub(&t1, &t2), &t3), &t4);
            c_pair.insert((a, b), total);
        }
    }
    Ok(CPolynomials { ring2, ring3, c, c_pair })
}

/// Result of [`check_delta_axioms`], one report per axiom.
#[derive(Clone, Debug)]
pub struct AxiomReport {
    pub reports: Vec<Report>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.reports.iter().all(|r| r.passed())
    }

    pub fn first_failure(&self) -> Option<&str> {
        self.reports.iter().flat_map(|r| r.failures.iter()).next().map(|s| s.as_str())
    }
}

/// Checks axioms (1)–(4) on `samples` random elements and, for free
/// polynomial algebras, on a degree-bounded symbolic battery.
pub fn check_delta_axioms(spec: &FrobeniusLiftSpec, samples: usize, seed: u64) -> Result<AxiomReport> {
    let cp = c_polynomials(&spec.family)?;
    let ring = spec.alg.ring.clone();
    let labels = spec.family.labels();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut inputs: Vec<(Elem, Elem)> =
        (0..samples).map(|_| (spec.sample(&mut rng), spec.sample(&mut rng))).collect();
    let symbolic = spec.symbolic_inputs();
    for a in &symbolic {
        for b in &symbolic {
            inputs.push((a.clone(), b.clone()));
        }
    }
    let base = spec.base().clone();
    let scalars: Vec<Elem> = (0..samples.max(1))
        .map(|_| match &base {
            BaseRing::Integers => Elem::int(rng.gen_range(-1000..=1000)),
            BaseRing::FpT(p) => {
                let deg = rng.gen_range(0..=4);
                Elem::Poly(FpPoly::from_coeffs((0..=deg).map(|_| rng.gen_range(0..*p)).collect(), *p))
            }
        })
        .collect();

    let fmt = |e: &Elem| ring.format(e);
    let eval_c = |alpha: usize, x: &Elem, y: &Elem| -> Elem {
        evaluate(cp.c[alpha].as_multi(), &ring, &[x.clone(), y.clone()], |c| spec.alg.scalar(c))
    };
    let mut reports = Vec::new();
    for alpha in 0..spec.family.len() {
        let q = spec.family.q(alpha);
        let pi = spec.pi_image(alpha);
        let l = &labels[alpha];
        let delta = |a: &Elem| spec.delta_apply(alpha, a);

        let mut r1 = Report::new(format!("delta-axiom-1[{l}]"), "delta(r) = (r - r^q)/pi on R0");
        let r0 = base.ring();
        for r in &scalars {
            let expect = r0.exact_div(&r0.sub(r, &r0.pow(r, q)), spec.family.pi(alpha));
            let got = delta(&spec.alg.scalar(r));
            r1.check(
                matches!((&expect, &got), (Ok(e), Ok(g)) if spec.alg.scalar(e) == *g),
                || format!("r = {}", r0.format(r)),
            );
        }
        reports.push(r1);

        let mut r2 = Report::new(format!("delta-axiom-2[{l}]"), "delta(a+b) = delta(a) + delta(b) + C(a,b)");
        let mut r3 = Report::new(
            format!("delta-axiom-3[{l}]"),
            "delta(ab) = delta(a) b^q + a^q delta(b) + pi delta(a) delta(b)",
        );
        for (a, b) in &inputs {
            let (da, db) = match (delta(a), delta(b)) {
                (Ok(da), Ok(db)) => (da, db),
                _ => {
                    r2.fail(format!("delta undefined at a = {}, b = {}", fmt(a), fmt(b)));
                    continue;
                }
            };
            let lhs = delta(&ring.add(a, b));
            let rhs = ring.add(&ring.add(&da, &db), &eval_c(alpha, a, b));
            r2.check(lhs.as_ref() == Ok(&rhs), || format!("a = {}, b = {}", fmt(a), fmt(b)));
            let lhs = delta(&ring.mul(a, b));
            let rhs = ring.add(
                &ring.add(&ring.mul(&da, &ring.pow(b, q)), &ring.mul(&ring.pow(a, q), &db)),
                &ring.mul(&pi, &ring.mul(&da, &db)),
            );
            r3.check(lhs.as_ref() == Ok(&rhs), || format!("a = {}, b = {}", fmt(a), fmt(b)));
        }
        reports.push(r2);
        reports.push(r3);
    }
    for (&(a, b), cab) in &cp.c_pair {
        let mut r4 = Report::new(
            format!("delta-axiom-4[{},{}]", labels[a], labels[b]),
            "delta_a delta_b(x) = delta_b delta_a(x) + C_ab(x, delta_a x, delta_b x)",
        );
        for (x, _) in &inputs {
            let result = (|| -> Result<bool> {
                let dax = spec.delta_apply(a, x)?;
                let dbx = spec.delta_apply(b, x)?;
                let lhs = spec.delta_apply(a, &dbx)?;
                let c = evaluate(cab.as_multi(), &ring, &[x.clone(), dax.clone(), dbx.clone()], |c| {
                    spec.alg.scalar(c)
                });
                let rhs = ring.add(&spec.delta_apply(b, &dax)?, &c);
                Ok(lhs == rhs)
            })();
            r4.check(result == Ok(true), || format!("x = {}", fmt(x)));
        }
        reports.push(r4);
    }
    Ok(AxiomReport { reports })
}

/// Polynomial helper for callers building symbolic inputs.
pub fn constant_poly(ring: &Ring, c: Elem) -> Elem {
    match ring {
        Ring::Multi(mr) => Elem::Multi(MPoly::constant(&mr.base, c, mr.vars.len())),
        _ => c,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z_spec(primes: &[&str], gens: &[&str], images: &[&[&str]]) -> FrobeniusLiftSpec {
        FrobeniusLiftSpec::parse(&BaseRing::Integers, primes, gens, images).unwrap()
    }

    #[test]
    fn lift_checks() {
        assert!(z_spec(&["2"], &[], &[&[]]).check_frobenius_lift().passed());
        assert!(!z_spec(&["2"], &["x"], &[&["x^2 + 5"]]).check_frobenius_lift().passed());
        assert!(z_spec(&["2", "3"], &["x"], &[&["x^2"], &["x^3"]]).check_frobenius_lift().passed());
        let noncommuting = z_spec(&["2", "3"], &["x"], &[&["x^2 + 2"], &["x^3"]]);
        let r = noncommuting.check_frobenius_lift();
        assert!(!r.passed());
        assert!(r.failures[0].contains("commute"));
    }

    #[test]
    fn delta_values() {
        let s = z_spec(&["2"], &[], &[&[]]);
        assert_eq!(s.delta_apply(0, &Elem::int(2)).unwrap(), Elem::int(-1));
        assert_eq!(s.delta_apply(0, &Elem::int(1)).unwrap(), Elem::int(0));
        let s = z_spec(&["3"], &["x"], &[&["x^3"]]);
        assert_eq!(s.delta_apply(0, &s.alg.ring.gen(0)).unwrap(), s.alg.ring.zero());
        let bad = z_spec(&["2"], &["x"], &[&["x^2 + 1"]]);
        assert!(matches!(bad.delta_apply(0, &bad.alg.ring.gen(0)), Err(WittError::LiftViolation(_))));
    }

    #[test]
    fn c_polynomial_examples() {
        let (r, c) = c_alpha(&BaseRing::Integers, &Elem::int(2), 2).unwrap();
        assert_eq!(c, r.parse("-x*y").unwrap());
        let (r, c) = c_alpha(&BaseRing::Integers, &Elem::int(3), 3).unwrap();
        assert_eq!(c, r.parse("-x^2*y - x*y^2").unwrap());
        let swapped = subst(&c, &r, &[r.gen(1), r.gen(0)]);
        assert_eq!(swapped, c);
        assert_eq!(subst(&c, &r, &[r.gen(0), r.zero()]), r.zero());
    }

    #[test]
    fn two_prime_axiom_at_six() {
        let s = z_spec(&["2", "3"], &[], &[&[], &[]]);
        let cp = c_polynomials(&s.family).unwrap();
        let x = Elem::int(6);
        let d2 = s.delta_apply(0, &x).unwrap();
        let d3 = s.delta_apply(1, &x).unwrap();
        let lhs = s.delta_apply(0, &d3).unwrap();
        let c = subst(&cp.c_pair[&(0, 1)], &Ring::Integers, &[x, d2.clone(), d3]);
        assert_eq!(lhs, Ring::Integers.add(&s.delta_apply(1, &d2).unwrap(), &c));
    }

    #[test]
    fn axiom_suite_passes() {
        let specs = vec![
            z_spec(&["2"], &[], &[&[]]),
            z_spec(&["3"], &["x"], &[&["x^3 + 3"]]),
            z_spec(&["2", "3"], &[], &[&[], &[]]),
            FrobeniusLiftSpec::parse(&BaseRing::FpT(3), &["t"], &["x"], &[&["x^3"]]).unwrap(),
        ];
        for s in specs {
            let r = check_delta_axioms(&s, 50, 1).unwrap();
            assert!(r.passed(), "{:?}", r.first_failure());
        }
    }

    #[test]
    fn coaction_examples() {
        let s = z_spec(&["2"], &[], &[&[]]);
        let w = s.coaction(0, &Elem::int(2), 1).unwrap();
        assert_eq!(w.components(), &[Elem::int(2), Elem::int(-1)]);
        let s = z_spec(&["2"], &["x"], &[&["x^2 + 2"]]);
        let x = s.alg.ring.gen(0);
        let w = s.coaction(0, &x, 1).unwrap();
        assert_eq!(w.components(), &[x.clone(), s.alg.ring.one()]);
        let s = z_spec(&["3"], &["x"], &[&["x^3"]]);
        let x = s.alg.ring.gen(0);
        let w = s.coaction(0, &x, 3).unwrap();
        assert_eq!(w, w.ring().teichmuller(&x));
        let bad = z_spec(&["2"], &["x"], &[&["x^2 + 1"]]);
        assert!(matches!(bad.coaction(0, &bad.alg.ring.gen(0), 1), Err(WittError::LiftViolation(_))));
    }

    #[test]
    fn spec_files() {
        let s = FrobeniusLiftSpec::from_json(
            r#"{"base": "Z", "primes": ["2", "3"], "generators": ["x"],
                "psi": {"2": {"x": "x^2"}, "3": {"x": "x^3"}}}"#,
        )
        .unwrap();
        assert!(s.check_frobenius_lift().passed());
        let m = s.coaction_multi(&s.alg.ring.gen(0), &MultiIndex(vec![1, 1])).unwrap();
        assert_eq!(m, m.ring().teichmuller(&s.alg.ring.gen(0)));
        assert!(matches!(
            FrobeniusLiftSpec::from_json(r#"{"base": "Z", "primes": ["2"], "generators": ["x"], "psi": {}, "relations": ["x^2"]}"#),
            Err(WittError::UnsupportedPresentation(_))
        ));
    }
}
