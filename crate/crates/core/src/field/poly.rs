//! Dense univariate polynomials over GF(2^n), coefficient `i` at index `i`.
//!
//! Only what the characteristic-polynomial analysis needs: evaluation, root
//! search, reduction, an irreducibility test, and the multiplicative order of
//! `x` modulo a polynomial.

use super::{data, order_by_descent, FieldContext, FieldElement};
use crate::arith::prime_factors;

pub type Poly = Vec<FieldElement>;

fn trim(p: &mut Poly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

/// Degree of `p`, `None` for the zero polynomial.
pub fn degree(p: &[FieldElement]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

pub fn eval(f: &FieldContext, p: &[FieldElement], x: FieldElement) -> FieldElement {
    p.iter().rev().fold(FieldElement::ZERO, |acc, &c| f.mul(acc, x) + c)
}

/// All roots of `p` lying in the field itself, by exhaustive search.
pub fn roots_in_field(f: &FieldContext, p: &[FieldElement]) -> Vec<FieldElement> {
    f.elements().filter(|&x| eval(f, p, x).is_zero()).collect()
}

fn mul(f: &FieldContext, a: &[FieldElement], b: &[FieldElement]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![FieldElement::ZERO; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += f.mul(x, y);
        }
    }
    trim(&mut out);
    out
}

/// Remainder of `a` modulo `m` (`m` non-zero).
pub fn rem(f: &FieldContext, a: &[FieldElement], m: &[FieldElement]) -> Poly {
    let dm = degree(m).expect("division by the zero polynomial");
    let lead_inv = f.inv(m[dm]).expect("leading coefficient is non-zero");
    let mut r: Poly = a.to_vec();
    trim(&mut r);
    while let Some(dr) = degree(&r) {
        if dr < dm {
            break;
        }
        let c = f.mul(r[dr], lead_inv);
        let shift = dr - dm;
        for (i, &mi) in m[..=dm].iter().enumerate() {
            r[i + shift] += f.mul(c, mi);
        }
        trim(&mut r);
    }
    r
}

fn mulmod(f: &FieldContext, a: &[FieldElement], b: &[FieldElement], m: &[FieldElement]) -> Poly {
    rem(f, &mul(f, a, b), m)
}

/// `base^k mod m`.
pub fn powmod(f: &FieldContext, base: &[FieldElement], mut k: u128, m: &[FieldElement]) -> Poly {
    let mut acc = rem(f, &[FieldElement::ONE], m);
    let mut b = rem(f, base, m);
    while k > 0 {
        if k & 1 == 1 {
            acc = mulmod(f, &acc, &b, m);
        }
        b = mulmod(f, &b, &b, m);
        k >>= 1;
    }
    acc
}

pub fn gcd(f: &FieldContext, a: &[FieldElement], b: &[FieldElement]) -> Poly {
    let mut a: Poly = a.to_vec();
    let mut b: Poly = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    while degree(&b).is_some() {
        let r = rem(f, &a, &b);
        a = b;
        b = r;
    }
    if let Some(d) = degree(&a) {
        let inv = f.inv(a[d]).unwrap();
        for c in a.iter_mut() {
            *c = f.mul(*c, inv);
        }
    }
    a
}

const X: [FieldElement; 2] = [FieldElement::ZERO, FieldElement::ONE];

/// `x^(q^k) mod m` where `q` is the field size, via `k * n` squarings.
fn frobenius_x(f: &FieldContext, k: u32, m: &[FieldElement]) -> Poly {
    let mut h = rem(f, &X, m);
    for _ in 0..k * f.degree() {
        h = mulmod(f, &h, &h, m);
    }
    h
}

/// Rabin's test over GF(q): `p` of degree `d` is irreducible iff
/// `x^(q^d) = x mod p` and `gcd(x^(q^(d/r)) - x, p) = 1` for each prime `r | d`.
pub fn is_irreducible(f: &FieldContext, p: &[FieldElement]) -> bool {
    let Some(d) = degree(p) else { return false };
    if d == 0 {
        return false;
    }
    if d == 1 {
        return true;
    }
    let x = rem(f, &X, p);
    if frobenius_x(f, d as u32, p) != x {
        return false;
    }
    prime_factors(d as u64).into_iter().all(|r| {
        let mut h = frobenius_x(f, (d as u64 / r) as u32, p);
        if h.len() < 2 {
            h.resize(2, FieldElement::ZERO);
        }
        h[1] += FieldElement::ONE;
        let g = gcd(f, &h, p);
        degree(&g) == Some(0)
    })
}

/// Multiplicative order of `x` in `GF(q)[x]/(p)`, where `p(0) != 0`.
///
/// The unit group's exponent divides `2^a * lcm(q^k - 1, k <= deg p)` with
/// `2^a >= deg p`; the order is found by descending from that bound. Returns
/// `None` if `p(0) = 0` or the extension degrees exceed the factor table.
pub fn x_order_mod(f: &FieldContext, p: &[FieldElement]) -> Option<u64> {
    let d = degree(p)?;
    if d == 0 || p[0].is_zero() {
        return None;
    }
    let e = f.degree() as usize;
    let mut bound: u128 = 1;
    let mut primes: Vec<u64> = Vec::new();
    for k in 1..=d {
        let n = k * e;
        if n > data::MERSENNE_PRIME_FACTORS.len() {
            return None;
        }
        let v = (1u128 << n) - 1;
        bound = bound / num_integer::gcd(bound, v) * v;
        primes.extend_from_slice(data::MERSENNE_PRIME_FACTORS[n - 1]);
    }
    let two_part = (d as u128).next_power_of_two();
    bound = bound.checked_mul(two_part)?;
    primes.push(2);
    primes.sort_unstable();
    primes.dedup();
    let one = rem(f, &[FieldElement::ONE], p);
    let is_one = |k: u128| powmod(f, &X, k, p) == one;
    if !is_one(bound) {
        return None;
    }
    Some(order_by_descent(bound, &primes, is_one) as u64)
}
