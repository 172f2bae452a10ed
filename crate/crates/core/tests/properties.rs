use std::collections::BTreeMap;

use num_bigint::BigInt;
use proptest::prelude::*;

use witt_core::delta::FrobeniusLiftSpec;
use witt_core::multi::{MultiIndex, MultiWittRing, PrimeFamily};
use witt_core::{Algebra, BaseRing, Elem, Ring, Strategy, WittContext, WittRing};

fn ints(v: &[i64]) -> Vec<Elem> {
    v.iter().map(|&x| Elem::int(x)).collect()
}

fn comps(len: usize) -> impl proptest::strategy::Strategy<Value = Vec<i64>> {
    proptest::collection::vec(-40i64..40, len)
}

// x_i^(q^(k-i)) summed with weights p^i, straight from the definition
fn ghost_oracle(p: i64, x: &[i64]) -> Vec<BigInt> {
    (0..x.len())
        .map(|k| {
            (0..=k)
                .map(|i| BigInt::from(p).pow(i as u32) * BigInt::from(x[i]).pow((p as u32).pow((k - i) as u32)))
                .sum()
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ghost_matches_definition(p in prop::sample::select(vec![2i64, 3, 5]), x in comps(3)) {
        let ring = WittRing::over_base(WittContext::integers(p, 2).unwrap());
        let w = ring.vector(ints(&x)).unwrap();
        let got: Vec<BigInt> = w.ghost().entries().iter().map(|e| e.as_int().clone()).collect();
        prop_assert_eq!(got, ghost_oracle(p, &x));
        prop_assert_eq!(w.ghost().unghost().unwrap(), w);
    }

    #[test]
    fn ghost_is_a_ring_map(p in prop::sample::select(vec![2i64, 3]), x in comps(3), y in comps(3)) {
        let ring = WittRing::over_base(WittContext::integers(p, 2).unwrap());
        let (a, b) = (ring.vector(ints(&x)).unwrap(), ring.vector(ints(&y)).unwrap());
        let (ga, gb) = (a.ghost(), b.ghost());
        let sum = a.add(&b).unwrap().ghost();
        let prod = a.mul(&b).unwrap().ghost();
        for k in 0..3 {
            let (u, v) = (ga.entries()[k].as_int(), gb.entries()[k].as_int());
            prop_assert_eq!(sum.entries()[k].as_int(), &(u + v));
            prop_assert_eq!(prod.entries()[k].as_int(), &(u * v));
        }
    }

    #[test]
    fn strategies_agree_on_torsion(x in comps(3), y in comps(3)) {
        let ring = WittRing::new(
            WittContext::integers(2, 2).unwrap(),
            Algebra::over_integers(Ring::integers_mod(8).unwrap()),
        ).unwrap();
        let r = ring.alg.ring.clone();
        let elems = |v: &[i64]| v.iter().map(|&e| r.from_i64(e)).collect::<Vec<_>>();
        let a = ring.vector(elems(&x)).unwrap();
        let b = ring.vector(elems(&y)).unwrap();
        prop_assert_eq!(a.add_with(&b, Strategy::Lifted).unwrap(), a.add_with(&b, Strategy::Structural).unwrap());
        prop_assert_eq!(a.mul_with(&b, Strategy::Lifted).unwrap(), a.mul_with(&b, Strategy::Structural).unwrap());
    }

    #[test]
    fn ring_axioms_mod_9(x in comps(3), y in comps(3), z in comps(3)) {
        let ring = WittRing::new(
            WittContext::integers(3, 2).unwrap(),
            Algebra::over_integers(Ring::integers_mod(9).unwrap()),
        ).unwrap();
        let r = ring.alg.ring.clone();
        let make = |v: &[i64]| ring.vector(v.iter().map(|&e| r.from_i64(e)).collect()).unwrap();
        let (a, b, c) = (make(&x), make(&y), make(&z));
        prop_assert_eq!(a.add(&b).unwrap().add(&c).unwrap(), a.add(&b.add(&c).unwrap()).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        prop_assert_eq!(
            a.mul(&b.add(&c).unwrap()).unwrap(),
            a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
        );
        prop_assert!(a.add(&a.neg()).unwrap().is_zero());
    }

    #[test]
    fn verschiebung_scales_ghost(x in comps(3)) {
        let ring = WittRing::over_base(WittContext::fpt(3, "t", 2).unwrap());
        let r = ring.alg.ring.clone();
        let w = ring.vector(x.iter().map(|&v| r.from_i64(v)).collect()).unwrap();
        let g = w.verschiebung(1).ghost();
        let t = ring.ctx.pi.clone();
        let expected: Vec<Elem> = std::iter::once(r.zero())
            .chain(w.ghost().entries().iter().map(|e| r.mul(&t, e)))
            .collect();
        prop_assert_eq!(g.entries(), expected.as_slice());
    }

    #[test]
    fn polynomial_canonical_form(a in -9i64..9, b in -9i64..9, c in -9i64..9) {
        let r = Ring::multi(Ring::Integers, vec!["x".into(), "y".into()]).unwrap();
        let (x, y) = (r.gen(0), r.gen(1));
        let f = r.add(&r.mul(&r.from_i64(a), &x), &r.from_i64(b));
        let g = r.add(&r.mul(&r.from_i64(c), &y), &x);
        prop_assert_eq!(r.mul(&f, &g), r.mul(&g, &f));
        let lhs = r.add(&r.add(&f, &g), &r.mul(&f, &g));
        let rhs = r.add(&r.mul(&g, &f), &r.add(&g, &f));
        prop_assert_eq!(&lhs, &rhs);
        prop_assert_eq!(r.parse(&r.format(&lhs)).unwrap(), lhs);
    }

    #[test]
    fn coaction_is_a_ring_map(a in -20i64..20, b in -20i64..20, c in -20i64..20) {
        let spec = FrobeniusLiftSpec::parse(&BaseRing::Integers, &["2"], &["x"], &[&["x^2 + 2"]]).unwrap();
        let r = &spec.alg.ring;
        let f = r.parse(&format!("{a}*x^2 + {b}*x + {c}")).unwrap();
        let g = r.parse(&format!("{b}*x + {a}")).unwrap();
        let (cf, cg) = (spec.coaction(0, &f, 2).unwrap(), spec.coaction(0, &g, 2).unwrap());
        prop_assert_eq!(spec.coaction(0, &r.add(&f, &g), 2).unwrap(), cf.add(&cg).unwrap());
        prop_assert_eq!(spec.coaction(0, &r.mul(&f, &g), 2).unwrap(), cf.mul(&cg).unwrap());
    }

    #[test]
    fn multi_prime_order_independence(v in comps(4), u in comps(4)) {
        let ring = MultiWittRing::new(
            PrimeFamily::integers(&[2, 3]).unwrap(),
            MultiIndex(vec![1, 1]),
            Algebra::over_integers(Ring::Integers),
        ).unwrap();
        let cells = MultiIndex(vec![1, 1]).box_below();
        let make = |xs: &[i64]| {
            let m: BTreeMap<MultiIndex, Elem> = cells.iter().cloned().zip(ints(xs)).collect();
            ring.from_components(&m).unwrap()
        };
        let (a, b) = (make(&v), make(&u));
        let sum = a.add(&b).unwrap();
        let swapped = a.reorder(vec![1, 0]).unwrap().add(&b.reorder(vec![1, 0]).unwrap()).unwrap();
        prop_assert_eq!(swapped.multi_ghost(), sum.multi_ghost());
        prop_assert_eq!(swapped.reorder(vec![0, 1]).unwrap(), sum);
    }
}
