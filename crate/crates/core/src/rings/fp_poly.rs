//! Dense univariate polynomials over a prime field `F_p`.
//!
//! The modulus is not stored in the value; every operation takes `p`
//! explicitly so that values stay small and hashable.

use std::cmp::Ordering;

/// Coefficients in increasing degree, reduced mod `p`, no trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FpPoly {
    coeffs: Vec<u64>,
}

#[inline]
fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn inv_mod(a: u64, p: u64) -> Option<u64> {
    let (mut r0, mut r1) = (p as i128, (a % p) as i128);
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    if r0 != 1 {
        return None;
    }
    Some(s0.rem_euclid(p as i128) as u64)
}

impl FpPoly {
    pub fn zero() -> Self {
        FpPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: u64, p: u64) -> Self {
        FpPoly::from_coeffs(vec![c % p], p)
    }

    /// `t^k`
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = 1;
        FpPoly { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<u64>, p: u64) -> Self {
        for c in coeffs.iter_mut() {
            *c %= p;
        }
        let mut f = FpPoly { coeffs };
        f.trim();
        f
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn add(&self, other: &Self, p: u64) -> Self {
        let (long, short) =
            if self.coeffs.len() >= other.coeffs.len() { (self, other) } else { (other, self) };
        let mut coeffs = long.coeffs.clone();
        for (c, d) in coeffs.iter_mut().zip(&short.coeffs) {
            *c = (*c + d) % p;
        }
        let mut f = FpPoly { coeffs };
        f.trim();
        f
    }

    pub fn neg(&self, p: u64) -> Self {
        FpPoly { coeffs: self.coeffs.iter().map(|&c| if c == 0 { 0 } else { p - c }).collect() }
    }

    pub fn sub(&self, other: &Self, p: u64) -> Self {
        self.add(&other.neg(p), p)
    }

    pub fn scale(&self, c: u64, p: u64) -> Self {
        let c = c % p;
        if c == 0 {
            return FpPoly::zero();
        }
        FpPoly { coeffs: self.coeffs.iter().map(|&a| mulmod(a, c, p)).collect() }
    }

    pub fn mul(&self, other: &Self, p: u64) -> Self {
        if self.is_zero() || other.is_zero() {
            return FpPoly::zero();
        }
        let mut acc = vec![0u128; self.coeffs.len() + other.coeffs.len() - 1];
        let pp = p as u128;
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                let slot = &mut acc[i + j];
                *slot += a as u128 * b as u128;
                if *slot >= 1u128 << 120 {
                    *slot %= pp;
                }
            }
        }
        let coeffs = acc.into_iter().map(|c| (c % pp) as u64).collect();
        let mut f = FpPoly { coeffs };
        f.trim();
        f
    }

    /// Frobenius `f ↦ f^p`, which on `F_p[t]` is `f(t) ↦ f(t^p)`.
    pub fn frobenius(&self, p: u64) -> Self {
        if self.is_zero() {
            return FpPoly::zero();
        }
        let step = p as usize;
        let mut coeffs = vec![0; (self.coeffs.len() - 1) * step + 1];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[i * step] = c;
        }
        FpPoly { coeffs }
    }

    pub fn pow(&self, mut e: u64, p: u64) -> Self {
        let mut base = self.clone();
        let mut result = FpPoly::constant(1, p);
        while e > 0 {
            if e.is_multiple_of(p) {
                base = base.frobenius(p);
                e /= p;
                continue;
            }
            if e & 1 == 1 {
                result = result.mul(&base, p);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base, p);
            }
        }
        result
    }

    /// Euclidean division; `divisor` must be nonzero.
    pub fn div_rem(&self, divisor: &Self, p: u64) -> (Self, Self) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let inv = inv_mod(divisor.lead(), p).expect("p must be prime");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (FpPoly::zero(), self.clone());
        }
        let mut quot = vec![0u64; rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let c = mulmod(rem[k], inv, p);
            if c == 0 {
                continue;
            }
            quot[k - dd] = c;
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                let idx = k - dd + j;
                rem[idx] = (rem[idx] + p - mulmod(c, d, p)) % p;
            }
        }
        rem.truncate(dd);
        let mut q = FpPoly { coeffs: quot };
        q.trim();
        let mut r = FpPoly { coeffs: rem };
        r.trim();
        (q, r)
    }

    pub fn rem(&self, divisor: &Self, p: u64) -> Self {
        self.div_rem(divisor, p).1
    }

    pub fn monic(&self, p: u64) -> Self {
        if self.is_zero() {
            return FpPoly::zero();
        }
        let inv = inv_mod(self.lead(), p).expect("p must be prime");
        self.scale(inv, p)
    }

    pub fn gcd(&self, other: &Self, p: u64) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b, p);
            a = b;
            b = r;
        }
        a.monic(p)
    }

    /// Inverse of `self` modulo `modulus`, if it exists.
    pub fn inverse_mod(&self, modulus: &Self, p: u64) -> Option<Self> {
        let (mut r0, mut r1) = (modulus.clone(), self.rem(modulus, p));
        let (mut s0, mut s1) = (FpPoly::zero(), FpPoly::constant(1, p));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1, p);
            let s2 = s0.sub(&q.mul(&s1, p), p);
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s2;
        }
        if r0.degree() != Some(0) {
            return None;
        }
        let inv = inv_mod(r0.lead(), p)?;
        Some(s0.scale(inv, p).rem(modulus, p))
    }

    /// Horner evaluation at an element of `F_p`.
    pub fn eval(&self, x: u64, p: u64) -> u64 {
        self.coeffs.iter().rev().fold(0, |acc, &c| (mulmod(acc, x, p) + c) % p)
    }

    /// All polynomials of degree `< deg` (including zero), in a fixed order.
    pub fn all_below_degree(deg: usize, p: u64) -> Vec<FpPoly> {
        let count = (p as usize).pow(deg as u32);
        (0..count)
            .map(|mut idx| {
                let mut coeffs = Vec::with_capacity(deg);
                for _ in 0..deg {
                    coeffs.push((idx % p as usize) as u64);
                    idx /= p as usize;
                }
                FpPoly::from_coeffs(coeffs, p)
            })
            .collect()
    }

    /// Trial division against every monic polynomial of degree `1..=deg/2`.
    pub fn is_irreducible(&self, p: u64) -> bool {
        let Some(d) = self.degree() else { return false };
        if d == 0 {
            return false;
        }
        for k in 1..=d / 2 {
            for low in FpPoly::all_below_degree(k, p) {
                let mut coeffs = low.coeffs.clone();
                coeffs.resize(k, 0);
                coeffs.push(1);
                let cand = FpPoly { coeffs };
                if self.rem(&cand, p).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Largest `k` with `t^k | self`; `None` for zero.
    pub fn t_adic_valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|&c| c != 0)
    }

    pub fn truncate_below(&self, k: usize) -> Self {
        let mut coeffs: Vec<u64> = self.coeffs.iter().take(k).copied().collect();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        FpPoly { coeffs }
    }

    /// Formats with the given variable name, highest degree first.
    pub fn format(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !out.is_empty() {
                out.push_str(" + ");
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            match (c, mono.is_empty()) {
                (_, true) => out.push_str(&c.to_string()),
                (1, false) => out.push_str(&mono),
                (_, false) => out.push_str(&format!("{c}*{mono}")),
            }
        }
        out
    }

    /// Order used for canonical sorting of prime elements: degree, then coefficients
    /// from the top down.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[u64], p: u64) -> FpPoly {
        FpPoly::from_coeffs(c.to_vec(), p)
    }

    #[test]
    fn division_by_monomial_factor() {
        // (t^2 + t) / t = t + 1 over F_2
        let (q, r) = poly(&[0, 1, 1], 2).div_rem(&poly(&[0, 1], 2), 2);
        assert_eq!(q, poly(&[1, 1], 2));
        assert!(r.is_zero());
    }

    #[test]
    fn irreducibility_small_cases() {
        assert!(poly(&[1, 1, 1], 2).is_irreducible(2));
        assert!(!poly(&[1, 0, 1], 2).is_irreducible(2)); // (t+1)^2
        assert!(poly(&[1, 0, 1], 3).is_irreducible(3)); // t^2 + 1 over F_3
        assert!(!poly(&[1], 3).is_irreducible(3));
        assert!(!FpPoly::zero().is_irreducible(3));
    }

    #[test]
    fn frobenius_matches_power() {
        let f = poly(&[2, 1, 0, 1], 3);
        assert_eq!(f.frobenius(3), f.mul(&f, 3).mul(&f, 3));
        assert_eq!(f.pow(9, 3), f.frobenius(3).frobenius(3));
        assert_eq!(f.pow(5, 3), f.mul(&f, 3).mul(&f, 3).mul(&f, 3).mul(&f, 3));
    }

    #[test]
    fn inverse_modulo() {
        let m = poly(&[1, 1, 1], 2);
        let a = poly(&[0, 1], 2);
        let inv = a.inverse_mod(&m, 2).unwrap();
        assert!(a.mul(&inv, 2).rem(&m, 2).is_one());
        assert!(poly(&[1, 1], 2).inverse_mod(&poly(&[1, 0, 1], 2), 2).is_none());
    }

    #[test]
    fn formatting() {
        assert_eq!(poly(&[1, 0, 3], 5).format("t"), "3*t^2 + 1");
        assert_eq!(poly(&[0, 1], 5).format("t"), "t");
    }
}
