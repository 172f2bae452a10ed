//! Acceptance criteria, one line each. Run with
//! `cargo test -p witt-core --test acceptance`.

use std::collections::BTreeMap;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::Zero;

use witt_core::delta::{check_delta_axioms, FrobeniusLiftSpec};
use witt_core::descent::battery_reports;
use witt_core::multi::{MultiIndex, MultiWittRing, PrimeFamily, TruncationSet};
use witt_core::presentations::{coord_change, verify_wn_presentation};
use witt_core::report::Report;
use witt_core::selftest::{
    coaction_report, coordinate_change_report, delta_battery, ghost_congruence_exhaustive, operator_algebras,
    operator_identities, standard_contexts, structural_integrity, wn_fp_isomorphism,
};
use witt_core::witt::structural::rebase_polys;
use witt_core::{Algebra, BaseRing, Elem, OpKind, Ring, WittContext, WittRing};

struct Outcome {
    reports: Vec<Report>,
    extra: Vec<String>,
}

impl Outcome {
    fn passed(&self) -> bool {
        self.extra.is_empty() && self.reports.iter().all(|r| r.passed())
    }

    fn failures(&self) -> Vec<String> {
        let mut out = self.extra.clone();
        for r in self.reports.iter().filter(|r| !r.passed()) {
            out.push(format!("{}: {}", r.claim_id, r.failures.first().cloned().unwrap_or_default()));
        }
        out
    }
}

fn from_reports(reports: Vec<Report>) -> Outcome {
    Outcome { reports, extra: Vec::new() }
}

fn c1() -> Outcome {
    let mut reports = Vec::new();
    for p in [2, 3, 5] {
        for n in 0..=3 {
            reports.push(wn_fp_isomorphism(p, n).unwrap());
        }
    }
    let ring = WittRing::new(
        WittContext::integers(2, 1).unwrap(),
        Algebra::over_integers(Ring::prime_field(2).unwrap()),
    )
    .unwrap();
    let one = ring.one();
    let mut w = one.clone();
    let mut extra = Vec::new();
    for expected in [[0, 1], [1, 1], [0, 0]] {
        w = w.add(&one).unwrap();
        let want = ring.vector(expected.iter().map(|&v| Elem::int(v)).collect()).unwrap();
        if w != want {
            extra.push(format!("W_1(F_2) multiples of [1]: got {w}, want {want}"));
        }
    }
    Outcome { reports, extra }
}

fn c2() -> Outcome {
    from_reports(vec![ghost_congruence_exhaustive().unwrap()])
}

fn c3() -> Outcome {
    let mut reports = Vec::new();
    for ctx in standard_contexts(4) {
        for op in OpKind::ALL {
            reports.push(structural_integrity(&ctx, op));
        }
    }
    from_reports(reports)
}

fn c4() -> Outcome {
    use rayon::prelude::*;
    let jobs: Vec<(WittContext, Algebra)> = standard_contexts(4)
        .into_iter()
        .filter(|c| c.n >= 1)
        .flat_map(|c| operator_algebras(&c).into_iter().map(move |a| (c.clone(), a)))
        .collect();
    let reports = jobs
        .par_iter()
        .enumerate()
        .map(|(k, (ctx, alg))| operator_identities(ctx, alg, 1000, 1000 + k as u64).unwrap())
        .flatten()
        .collect();
    from_reports(reports)
}

fn c5() -> Outcome {
    from_reports(battery_reports(2, 2).unwrap())
}

fn c6() -> Outcome {
    let mut reports = Vec::new();
    let battery = delta_battery();
    let two_prime = battery.iter().any(|s| s.family.len() == 2 && s.base() == &BaseRing::Integers);
    for (k, spec) in battery.iter().enumerate() {
        reports.push(spec.check_frobenius_lift());
        reports.extend(check_delta_axioms(spec, 1000, 77 + k as u64).unwrap().reports);
    }
    let extra = if two_prime { Vec::new() } else { vec!["battery lacks the two-prime case".into()] };
    Outcome { reports, extra }
}

fn c7() -> Outcome {
    let z = BaseRing::Integers;
    let mut reports = Vec::new();
    let id = FrobeniusLiftSpec::parse(&z, &["2"], &[], &[&[]]).unwrap();
    for n in 0..=3 {
        reports.push(coaction_report(&id, n, 1000, 5).unwrap());
    }
    let lift = FrobeniusLiftSpec::parse(&z, &["2"], &["x"], &[&["x^2 + 2"]]).unwrap();
    for n in 0..=2 {
        reports.push(coaction_report(&lift, n, 1000, 6).unwrap());
    }
    let mut extra = Vec::new();
    let frob = FrobeniusLiftSpec::parse(&z, &["2"], &["x"], &[&["x^2"]]).unwrap();
    let x = frob.alg.ring.gen(0);
    for n in 0..=3 {
        let w = frob.coaction(0, &x, n).unwrap();
        if w != w.ring().teichmuller(&x) {
            extra.push(format!("coaction(x) under x^2 at n = {n} is {w}"));
        }
    }
    Outcome { reports, extra }
}

fn ord(mut j: u64, p: u64) -> u32 {
    let mut k = 0;
    while j.is_multiple_of(p) {
        j /= p;
        k += 1;
    }
    k
}

// independent oracle: w_m = sum over d | m of d * x_d^(m/d)
fn big_ghost(x: &BTreeMap<u64, BigInt>) -> BTreeMap<u64, BigInt> {
    x.keys()
        .map(|&m| {
            let g = x
                .iter()
                .filter(|(d, _)| m % **d == 0)
                .map(|(&d, v)| BigInt::from(d) * v.pow((m / d) as u32))
                .sum();
            (m, g)
        })
        .collect()
}

fn c8() -> Outcome {
    let ring = MultiWittRing::new(
        PrimeFamily::integers(&[2, 3]).unwrap(),
        MultiIndex(vec![1, 1]),
        Algebra::over_integers(Ring::Integers),
    )
    .unwrap();
    let set = TruncationSet::divisors_of(6).unwrap();
    let cells = MultiIndex(vec![1, 1]).box_below();
    let mut reorder = Report::new("multi-reorder[E={2,3}]", "multi_ghost invariant under reordering");
    let mut round = Report::new("multi-round-trip[E={2,3}]", "unghost(ghost w) = w, reorder twice = id");
    let mut congr = Report::new("big-witt-congruence[T=div(6)]", "a_j = a_pj mod p^(1+ord_p j)");
    for a in -3i64..=3 {
        for b in -3i64..=3 {
            for c in -3i64..=3 {
                for d in -3i64..=3 {
                    let comps: BTreeMap<MultiIndex, Elem> =
                        cells.iter().cloned().zip([a, b, c, d].map(Elem::int)).collect();
                    let w = ring.from_components(&comps).unwrap();
                    let label = || w.format();
                    let ghost = w.multi_ghost();
                    let swapped = w.reorder(vec![1, 0]).unwrap();
                    reorder.check(swapped.multi_ghost() == ghost, label);
                    round.check(swapped.reorder(vec![0, 1]).unwrap() == w, label);
                    round.check(ring.multi_unghost(&ghost).unwrap() == w, label);
                    let by_divisor: BTreeMap<u64, BigInt> =
                        ghost.iter().map(|(i, g)| (set.divisor_of(i), g.as_int().clone())).collect();
                    for (&j, gj) in &by_divisor {
                        for p in [2u64, 3] {
                            if let Some(gpj) = by_divisor.get(&(p * j)) {
                                let m = BigInt::from(p).pow(1 + ord(j, p));
                                congr.check(((gj - gpj) % &m).is_zero(), || format!("{} at j = {j}, p = {p}", label()));
                            }
                        }
                    }
                }
            }
        }
    }
    // classical components with the oracle ghost land in the same image
    let mut classical = Report::new("big-witt-classical-oracle[T=div(6)]", "classical ghost = nested ghost");
    let change = witt_core::multi::BigWittChange::new(&set).unwrap();
    for v in 0..7i64.pow(4) {
        let digits: Vec<i64> = (0..4).map(|k| (v / 7i64.pow(k)) % 7 - 3).collect();
        let x: BTreeMap<u64, BigInt> = [1u64, 2, 3, 6].into_iter().zip(digits.iter().map(|&d| BigInt::from(d))).collect();
        let xe: BTreeMap<u64, Elem> = x.iter().map(|(&d, v)| (d, Elem::Int(v.clone()))).collect();
        let nested = change.classical_to_nested(&xe, &Ring::Integers);
        let w = ring.from_components(&nested).unwrap();
        let got: BTreeMap<u64, BigInt> =
            w.multi_ghost().iter().map(|(i, g)| (set.divisor_of(i), g.as_int().clone())).collect();
        classical.check(got == big_ghost(&x), || format!("{digits:?}"));
    }
    from_reports(vec![reorder, round, congr, classical])
}

fn c9() -> Outcome {
    let mut reports = Vec::new();
    for p in [2, 3] {
        for n in 0..=4 {
            reports.push(verify_wn_presentation(&WittContext::integers(p, n).unwrap()).unwrap());
        }
    }
    for n in 0..=3 {
        reports.push(verify_wn_presentation(&WittContext::fpt(3, "t", n).unwrap()).unwrap());
    }
    let ctx = WittContext::integers(2, 2).unwrap();
    reports.push(coordinate_change_report(&ctx).unwrap());
    let cc = coord_change(&ctx).unwrap();
    let dr = cc.delta.ring();
    let want = ["delta_0(x)", "delta_1(x)", "delta_2(x) + delta_0(x)^2*delta_1(x) + delta_1(x)^2"];
    let mut extra = Vec::new();
    for (i, w) in want.iter().enumerate() {
        if cc.theta_in_delta[i] != dr.parse(w).unwrap() {
            extra.push(format!("theta_{i} = {}, expected {w}", dr.format(&cc.theta_in_delta[i])));
        }
    }
    Outcome { reports, extra }
}

fn c10() -> Outcome {
    let ctx = WittContext::fpt(3, "t", 2).unwrap();
    let base = ctx.base.ring();
    let u = ctx.base.parse_element("2").unwrap();
    let target = WittContext::new(ctx.base.clone(), base.mul(&u, &ctx.pi), 2).unwrap();
    // x relative to t in terms of y relative to u*t: rebase y back by u^{-1}
    let uinv = ctx.base.parse_element("2").unwrap();
    let back = rebase_polys(&target, &uinv).unwrap();
    let r = &back.ring;
    let y: Vec<Elem> = (0..=2).map(|i| r.gen(i)).collect();
    let c = |e: &Elem| r.constant(e.clone());
    let u2 = base.mul(&u, &u);
    let u3 = base.mul(&u2, &u);
    let coeff = base.exact_div(&base.sub(&u, &u3), &ctx.pi).unwrap();
    let want = [
        y[0].clone(),
        r.mul(&c(&u), &y[1]),
        r.add(&r.mul(&c(&u2), &y[2]), &r.mul(&c(&coeff), &r.pow(&y[1], 3))),
    ];
    let mut extra = Vec::new();
    if back.target != ctx {
        extra.push(format!("rebase lands in {}, expected {ctx}", back.target));
    }
    for i in 0..=2 {
        if back.polys[i] != want[i] {
            extra.push(format!("x_{i} = {}, expected {}", r.format(&back.polys[i]), r.format(&want[i])));
        }
    }
    // forward and backward rebase compose to the identity
    let fwd = rebase_polys(&ctx, &u).unwrap();
    let alg = Algebra::polynomial(&ctx.base, vec!["y0".into(), "y1".into(), "y2".into()]).unwrap();
    let ys: Vec<Elem> = (0..=2).map(|i| alg.ring.gen(i)).collect();
    let xs = back.evaluate(&alg, &ys);
    if fwd.evaluate(&alg, &xs) != ys {
        extra.push("forward rebase does not invert the backward rebase".into());
    }
    Outcome { reports: Vec::new(), extra }
}

// ℤ with q = 5 at n = 4: sum and product synthesis exceeds the work budget
fn documented_infeasible(o: &Outcome) -> bool {
    let failing: Vec<&Report> = o.reports.iter().filter(|r| !r.passed()).collect();
    o.extra.is_empty()
        && failing.len() == 2
        && failing.iter().all(|r| {
            (r.claim_id == "structural[W_4[Z, pi=5, q=5]; sum]" || r.claim_id == "structural[W_4[Z, pi=5, q=5]; product]")
                && r.failures.iter().all(|f| f.contains("budget"))
        })
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("W_n(F_p) = Z/p^(n+1), p in {2,3,5}, n <= 3", c1),
        ("ghost-image congruences over Z, p = 2, n = 2", c2),
        ("structural-polynomial integrity, q <= 5, n <= 4", c3),
        ("operator identities on 1000 samples per context", c4),
        ("V-exact sequence, kernel and equalizer reports", c5),
        ("delta-axiom suite including two primes", c6),
        ("coaction correctness", c7),
        ("multi-prime composition and ordering", c8),
        ("W_n presentation and coordinate change", c9),
        ("uniformizer change over F_3[t], u = 2", c10),
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut unexpected = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let id = k + 1;
        if !filter.is_empty() && !filter.iter().any(|f| f == &id.to_string()) {
            continue;
        }
        let start = Instant::now();
        let outcome = run();
        let cases: u64 = outcome.reports.iter().map(|r| r.universe_size).sum();
        let cases = if outcome.reports.is_empty() { "symbolic".to_string() } else { format!("{cases} cases") };
        let secs = start.elapsed().as_secs_f64();
        if outcome.passed() {
            println!("criterion {id:>2}: pass  {name} ({cases}, {secs:.1}s)");
            continue;
        }
        let failures = outcome.failures();
        println!("criterion {id:>2}: FAIL  {name} ({} failing claims, {secs:.1}s)", failures.len());
        for f in &failures {
            println!("    {f}");
        }
        if id == 3 && documented_infeasible(&outcome) {
            println!("    (known: synthesis budget exceeded, see README)");
        } else {
            unexpected += 1;
        }
    }
    if unexpected > 0 {
        eprintln!("{unexpected} criteria failed unexpectedly");
        std::process::exit(1);
    }
}
