use super::*;
use crate::rings::FpPoly;

fn z_ring(p: i64, n: usize) -> Arc<WittRing> {
    WittRing::over_base(WittContext::integers(p, n).unwrap())
}

fn ints(v: &[i64]) -> Vec<Elem> {
    v.iter().map(|&x| Elem::int(x)).collect()
}

fn over(p: i64, n: usize, ring: Ring) -> Arc<WittRing> {
    WittRing::new(WittContext::integers(p, n).unwrap(), Algebra::over_integers(ring)).unwrap()
}

#[test]
fn ghost_examples() {
    let w = z_ring(2, 1).vector(ints(&[1, 1])).unwrap();
    assert_eq!(w.ghost().entries(), ints(&[1, 3]).as_slice());

    let ctx = WittContext::fpt(3, "t", 1).unwrap();
    let r = WittRing::over_base(ctx);
    let w = r.parse_vector(&["1", "1"]).unwrap();
    let expect = vec![r.alg.ring.parse("1").unwrap(), r.alg.ring.parse("t + 1").unwrap()];
    assert_eq!(w.ghost().entries(), expect.as_slice());
}

#[test]
fn unghost_examples() {
    let r = z_ring(2, 1);
    let g = r.ghost_vector(ints(&[1, 3])).unwrap();
    assert_eq!(g.unghost().unwrap().components(), ints(&[1, 1]).as_slice());
    let bad = r.ghost_vector(ints(&[1, 2])).unwrap();
    assert!(matches!(bad.unghost(), Err(WittError::CongruenceViolation { index: 1, .. })));
    let torsion = over(2, 1, Ring::integers_mod(4).unwrap());
    let g = torsion.ghost_vector(ints(&[1, 3])).unwrap();
    assert!(matches!(g.unghost(), Err(WittError::TorsionNotSupported(_))));
}

#[test]
fn teichmuller_ghost_is_power_sequence() {
    let r = z_ring(3, 3);
    let w = r.teichmuller(&Elem::int(2));
    assert_eq!(w.ghost().entries(), ints(&[2, 8, 512, 134217728]).as_slice());
    let back = r.ghost_vector(ints(&[2, 8, 512, 134217728])).unwrap().unghost().unwrap();
    assert_eq!(back, w);
}

#[test]
fn small_structural_polynomials() {
    let ctx = WittContext::integers(2, 1).unwrap();
    let s = structural_polys(&ctx, OpKind::Sum).unwrap();
    assert_eq!(s.format(0), "a0 + b0");
    assert_eq!(s.format(1), "-a0*b0 + a1 + b1");
    let p = structural_polys(&ctx, OpKind::Product).unwrap();
    assert_eq!(p.format(0), "a0*b0");
    assert_eq!(p.ring.parse("a0^2*b1 + a1*b0^2 + 2*a1*b1").unwrap(), p.polys[1]);
    let f = structural_polys(&ctx, OpKind::Frobenius).unwrap();
    assert_eq!(f.polys.len(), 1);
    assert_eq!(f.format(0), "a0^2 + 2*a1");
    let neg = structural_polys(&WittContext::fpt(2, "t", 2).unwrap(), OpKind::Negation).unwrap();
    assert_eq!(neg.format(0), "a0");
    for op in OpKind::ALL {
        assert!(structural_polys(&WittContext::integers(3, 2).unwrap(), op)
            .unwrap()
            .verify_ghost_compatibility());
    }
}

#[test]
fn frobenius_needs_positive_length() {
    let r = z_ring(2, 0);
    assert_eq!(r.one().frobenius().unwrap_err(), WittError::LengthZero);
    assert_eq!(
        structural_polys(&r.ctx, OpKind::Frobenius).unwrap_err(),
        WittError::LengthZero
    );
}

#[test]
fn arithmetic_in_small_quotients() {
    let f2 = over(2, 1, Ring::PrimeField(2));
    let one = f2.one();
    assert_eq!(one.add(&one).unwrap().components(), ints(&[0, 1]).as_slice());

    let z4 = over(2, 1, Ring::integers_mod(4).unwrap());
    let one = z4.one();
    assert_eq!(one.add(&one).unwrap().components(), ints(&[2, 3]).as_slice());

    let z = z_ring(2, 1);
    assert_eq!(z.one().neg().components(), ints(&[-1, -1]).as_slice());
}

#[test]
fn evaluation_strategies_agree() {
    let ring = over(2, 2, Ring::integers_mod(8).unwrap());
    let elems = ring.alg.ring.elements().unwrap();
    let pick = |i: usize| elems[i % elems.len()].clone();
    for i in 0..40 {
        let a = ring.vector(vec![pick(i), pick(3 * i + 1), pick(5 * i + 2)]).unwrap();
        let b = ring.vector(vec![pick(7 * i + 3), pick(i / 2), pick(i * i)]).unwrap();
        let s1 = a.add_with(&b, Strategy::Structural).unwrap();
        let s2 = a.add_with(&b, Strategy::Lifted).unwrap();
        assert_eq!(s1, s2);
        let p1 = a.mul_with(&b, Strategy::Structural).unwrap();
        let p2 = a.mul_with(&b, Strategy::Lifted).unwrap();
        assert_eq!(p1, p2);
        assert_eq!(
            a.frobenius_with(Strategy::Structural).unwrap(),
            a.frobenius_with(Strategy::Lifted).unwrap()
        );
    }
    let z = z_ring(3, 2);
    let a = z.vector(ints(&[2, -1, 4])).unwrap();
    let b = z.vector(ints(&[5, 3, -7])).unwrap();
    assert_eq!(a.mul_with(&b, Strategy::Ghost).unwrap(), a.mul_with(&b, Strategy::Structural).unwrap());
    assert!(matches!(
        ring.one().add_with(&ring.one(), Strategy::Ghost),
        Err(WittError::TorsionNotSupported(_))
    ));
}

#[test]
fn fpt_quotient_arithmetic_uses_cover() {
    let ctx = WittContext::fpt(2, "t", 2).unwrap();
    let q = Ring::quotient(2, "t", FpPoly::monomial(2)).unwrap();
    let alg = Algebra::new(&ctx.base, q.clone()).unwrap();
    let ring = WittRing::new(ctx, alg).unwrap();
    assert!(!ring.is_torsion_free());
    let elems = q.elements().unwrap();
    for a0 in &elems {
        for b1 in &elems {
            let a = ring.vector(vec![a0.clone(), b1.clone(), a0.clone()]).unwrap();
            let b = ring.vector(vec![b1.clone(), a0.clone(), q.one()]).unwrap();
            assert_eq!(
                a.mul_with(&b, Strategy::Structural).unwrap(),
                a.mul_with(&b, Strategy::Lifted).unwrap()
            );
            assert_eq!(
                a.add_with(&b, Strategy::Structural).unwrap(),
                a.add_with(&b, Strategy::Lifted).unwrap()
            );
        }
    }
}

#[test]
fn context_mismatch_is_reported() {
    let a = z_ring(2, 1).one();
    let b = z_ring(3, 1).one();
    assert!(matches!(a.add(&b), Err(WittError::ContextMismatch(_))));
}

#[test]
fn teich_scale_example() {
    let r = z_ring(2, 2);
    let w = r.vector(ints(&[1, 1, 1])).unwrap();
    let scaled = w.teich_scale(&Elem::int(3));
    assert_eq!(scaled.components(), ints(&[3, 9, 81]).as_slice());
    assert_eq!(scaled, r.teichmuller(&Elem::int(3)).mul(&w).unwrap());
}

#[test]
fn verschiebung_and_truncation() {
    let r = z_ring(2, 1);
    let y = r.vector(ints(&[3, 5])).unwrap();
    let v = y.verschiebung(1);
    assert_eq!(v.components(), ints(&[0, 3, 5]).as_slice());
    assert_eq!(v.ghost().entries(), ints(&[0, 6, 2 * 9 + 4 * 5]).as_slice());
    assert!(v.truncate(0).unwrap().is_zero());
    assert_eq!(v.frobenius().unwrap(), y.scale(&Elem::int(2)));
    assert!(matches!(y.truncate(2), Err(WittError::IndexOutOfRange { .. })));
}

#[test]
fn frobenius_examples() {
    let r = z_ring(2, 1);
    let f = r.vector(ints(&[1, 1])).unwrap().frobenius().unwrap();
    assert_eq!(f.components(), ints(&[3]).as_slice());
    let a = Elem::int(5);
    let t = r.teichmuller(&a).frobenius().unwrap();
    assert_eq!(t, r.with_len(0).teichmuller(&Elem::int(25)));
}

#[test]
fn reduced_ghost_components() {
    let r = z_ring(2, 1);
    let w = r.vector(ints(&[3, 1])).unwrap();
    assert_eq!(w.ghost_component(0, true).unwrap(), Elem::int(3));
    assert_eq!(w.ghost_component(1, false).unwrap(), Elem::int(11));
    assert!(matches!(w.ghost_component(2, false), Err(WittError::IndexOutOfRange { .. })));
    // rgh_5 of a Teichmüller vector is a^{2^5} mod 4
    let t = r.teichmuller(&Elem::int(3));
    assert_eq!(t.ghost_component(5, true).unwrap(), Elem::int(1));
    let junk = ints(&[7, -2, 11, 5]);
    for i in 0..6 {
        assert_eq!(
            w.ghost_component(i, true).unwrap(),
            w.reduced_ghost_with_tail(i, &junk).unwrap()
        );
    }
}

#[test]
fn uniformizer_change() {
    let ctx = WittContext::fpt(3, "t", 2).unwrap();
    let change = structural::rebase_polys(&ctx, &ctx.base.parse_element("2").unwrap()).unwrap();
    assert_eq!(change.target.pi_string(), "2*t");
    let ring = &change.ring;
    // y relative to 2t: y0 = x0, y1 = 2^{-1} x1 = 2 x1, y2 = x2 (u^2 = 1, u - u^3 = 0)
    assert_eq!(change.polys[0], ring.parse("x0").unwrap());
    assert_eq!(change.polys[1], ring.parse("2*x1").unwrap());
    assert_eq!(change.polys[2], ring.parse("x2").unwrap());

    let z = z_ring(3, 2);
    let w = z.vector(ints(&[2, 5, -1])).unwrap();
    let minus = Elem::int(-1);
    assert_eq!(w.rebase_uniformizer(&minus).unwrap(), w.rebase_uniformizer_ghost(&minus).unwrap());
    assert_eq!(w.rebase_uniformizer(&Elem::int(1)).unwrap().components(), w.components());
    assert!(matches!(w.rebase_uniformizer(&Elem::int(2)), Err(WittError::NotAUnit(_))));
}

#[test]
fn scalars_have_constant_ghost() {
    let r = z_ring(2, 2);
    let s = r.scalar_vector(&Elem::int(3));
    assert_eq!(s.ghost().entries(), ints(&[3, 3, 3]).as_slice());
    let f = WittRing::over_base(WittContext::fpt(2, "t", 2).unwrap());
    let t = f.ctx.base.parse_element("t").unwrap();
    let s = f.scalar_vector(&t);
    assert!(s.ghost().entries().iter().all(|g| *g == t));
}
