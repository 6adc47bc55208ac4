//! Arithmetic in GF(2^n) with a polynomial-basis bit representation.
//!
//! A [`FieldContext`] fixes the degree and the reduction polynomial; elements
//! are plain `Copy` words ([`FieldElement`]) interpreted relative to a context.
//! Suzuki contexts have odd degree `e` and carry the twisted automorphism
//! `theta: a -> a^(2^((e+1)/2))`, whose square is the Frobenius map.
//!
//! Moduli come from a fixed table (the lexicographically smallest irreducible
//! polynomial of each degree), so every result is bit-reproducible. Degree 3
//! uses `t^3 + t + 1`.

mod data;
pub mod poly;

use std::fmt;

use crate::arith::divisors;
use crate::error::{Error, Result};

pub use data::MERSENNE_PRIME_FACTORS;

/// Default upper bound on the Suzuki exponent `e`.
pub const DEFAULT_MAX_EXPONENT: u32 = 31;

/// Largest field degree the one-word representation can hold.
pub const MAX_FIELD_DEGREE: u32 = 63;

/// Environment variable overriding [`DEFAULT_MAX_EXPONENT`].
pub const MAX_EXPONENT_ENV: &str = "SUZUKI_CENSUS_MAX_E";

/// Degrees up to this use log/antilog tables for multiplication.
const TABLE_DEGREE_LIMIT: u32 = 16;

/// The supported-exponent bound, honouring `SUZUKI_CENSUS_MAX_E` when set to a
/// positive integer. Never exceeds [`MAX_FIELD_DEGREE`].
pub fn max_exponent() -> u32 {
    std::env::var(MAX_EXPONENT_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<u32>().ok())
        .filter(|&v| v >= 1)
        .unwrap_or(DEFAULT_MAX_EXPONENT)
        .min(MAX_FIELD_DEGREE)
}

/// Checks that `e` is an admissible Suzuki exponent: odd, positive and within
/// [`max_exponent`].
pub fn check_exponent(e: u32) -> Result<()> {
    let max = max_exponent();
    if e == 0 || e > max {
        return Err(Error::UnsupportedExponent { e, max });
    }
    if e.is_multiple_of(2) {
        return Err(Error::EvenExponent(e));
    }
    Ok(())
}

/// An element of GF(2^n): bit `i` is the coefficient of `t^i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FieldElement(u64);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    // Addition in characteristic 2 needs no context.
    #[allow(clippy::should_implement_trait)]
    pub fn add(self, other: FieldElement) -> FieldElement {
        FieldElement(self.0 ^ other.0)
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F({:#x})", self.0)
    }
}

impl std::ops::Add for FieldElement {
    type Output = FieldElement;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: FieldElement) -> FieldElement {
        FieldElement(self.0 ^ rhs.0)
    }
}

impl std::ops::AddAssign for FieldElement {
    #[allow(clippy::suspicious_op_assign_impl)]
    fn add_assign(&mut self, rhs: FieldElement) {
        self.0 ^= rhs.0;
    }
}

#[derive(Clone)]
struct LogTables {
    /// `exp[i] = g^i` for `i < 2(2^n - 1)`, doubled so sums of logs index directly.
    exp: Vec<u32>,
    /// `log[a]` for `a != 0`.
    log: Vec<u32>,
}

/// GF(2^n) with a fixed irreducible modulus. Immutable after construction.
#[derive(Clone)]
pub struct FieldContext {
    degree: u32,
    modulus: u64,
    r_exp: u32,
    tables: Option<LogTables>,
}

impl fmt::Debug for FieldContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldContext")
            .field("degree", &self.degree)
            .field("modulus", &format_args!("{:#x}", self.modulus))
            .field("r_exp", &self.r_exp)
            .finish()
    }
}

impl PartialEq for FieldContext {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.modulus == other.modulus
    }
}

impl Eq for FieldContext {}

impl FieldContext {
    /// The Suzuki field GF(2^e) for odd `e` within the supported bound.
    pub fn new(e: u32) -> Result<Self> {
        check_exponent(e)?;
        Self::binary(e)
    }

    /// GF(2^n) for any `1 <= n <= 63`. Used for extension fields such as
    /// GF(2^12); `theta` is only the Suzuki twist when `n` is odd.
    pub fn binary(n: u32) -> Result<Self> {
        if n == 0 || n > MAX_FIELD_DEGREE {
            return Err(Error::UnsupportedExponent { e: n, max: MAX_FIELD_DEGREE });
        }
        let modulus = data::MODULI[n as usize - 1];
        assert!(
            is_irreducible_gf2(modulus),
            "built-in modulus for degree {n} is reducible"
        );
        let mut ctx = FieldContext { degree: n, modulus, r_exp: n.div_ceil(2), tables: None };
        if n <= TABLE_DEGREE_LIMIT {
            ctx.tables = Some(ctx.build_tables());
        }
        Ok(ctx)
    }

    fn build_tables(&self) -> LogTables {
        let size = 1usize << self.degree;
        let group = size - 1;
        let gen = (2..size as u64)
            .map(FieldElement)
            .find(|&a| self.mult_order(a).unwrap() == group as u64)
            .unwrap_or(FieldElement::ONE); // GF(2): the only unit is 1
        let mut exp = vec![0u32; 2 * group.max(1)];
        let mut log = vec![0u32; size];
        let mut x = FieldElement::ONE;
        for i in 0..group.max(1) {
            exp[i] = x.0 as u32;
            log[x.0 as usize] = i as u32;
            x = self.mul_slow(x, gen);
        }
        for i in group.max(1)..exp.len() {
            exp[i] = exp[i - group.max(1)];
        }
        LogTables { exp, log }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Reduction polynomial, bit `i` = coefficient of `t^i` (bit `degree` set).
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// `theta` is the `2^r_exp` power map.
    pub fn r_exp(&self) -> u32 {
        self.r_exp
    }

    /// Number of elements, `2^degree`.
    pub fn size(&self) -> u64 {
        1u64 << self.degree
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement::ZERO
    }

    pub fn one(&self) -> FieldElement {
        FieldElement::ONE
    }

    /// The class of `t`, a root of the modulus.
    pub fn t(&self) -> FieldElement {
        if self.degree == 1 {
            FieldElement::ONE
        } else {
            FieldElement(2)
        }
    }

    /// Wraps raw bits, rejecting set coefficients at index `>= degree`.
    pub fn element(&self, bits: u64) -> Result<FieldElement> {
        if self.degree < 64 && bits >> self.degree != 0 {
            return Err(Error::InvalidInput(format!(
                "{bits:#x} has coefficients beyond degree {}",
                self.degree
            )));
        }
        Ok(FieldElement(bits))
    }

    /// Every element, in increasing bit order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.size()).map(FieldElement)
    }

    /// Every non-zero element.
    pub fn units(&self) -> impl Iterator<Item = FieldElement> {
        (1..self.size()).map(FieldElement)
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        a + b
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        match &self.tables {
            Some(t) => {
                if a.0 == 0 || b.0 == 0 {
                    FieldElement::ZERO
                } else {
                    let i = t.log[a.0 as usize] + t.log[b.0 as usize];
                    FieldElement(t.exp[i as usize] as u64)
                }
            }
            None => self.mul_slow(a, b),
        }
    }

    /// Carry-less multiply followed by reduction by the modulus.
    fn mul_slow(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let mut prod: u128 = 0;
        let a_wide = a.0 as u128;
        let mut b_bits = b.0;
        let mut shift = 0;
        while b_bits != 0 {
            if b_bits & 1 == 1 {
                prod ^= a_wide << shift;
            }
            b_bits >>= 1;
            shift += 1;
        }
        FieldElement(reduce_gf2(prod, self.modulus, self.degree))
    }

    pub fn square(&self, a: FieldElement) -> FieldElement {
        self.mul(a, a)
    }

    pub fn pow(&self, a: FieldElement, mut k: u128) -> FieldElement {
        let mut base = a;
        let mut acc = FieldElement::ONE;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// `a^(2^k)`, by `k` squarings.
    pub fn frobenius(&self, a: FieldElement, k: u32) -> FieldElement {
        let mut x = a;
        for _ in 0..k % self.degree {
            x = self.square(x);
        }
        x
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            return Err(Error::ZeroInverse);
        }
        Ok(match &self.tables {
            Some(t) => {
                let group = (self.size() - 1) as u32;
                let l = t.log[a.0 as usize];
                FieldElement(t.exp[((group - l) % group) as usize] as u64)
            }
            None => self.pow(a, (self.size() - 2) as u128),
        })
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// The twisted automorphism `a -> a^(2^((n+1)/2))`.
    pub fn theta(&self, a: FieldElement) -> FieldElement {
        self.frobenius(a, self.r_exp)
    }

    /// Multiplicative order, found by descending from `2^n - 1` through its
    /// prime factors.
    pub fn mult_order(&self, a: FieldElement) -> Result<u64> {
        if a.is_zero() {
            return Err(Error::ZeroElement);
        }
        let group = self.size() - 1;
        let factors = data::MERSENNE_PRIME_FACTORS[self.degree as usize - 1];
        Ok(order_by_descent(group as u128, factors, |k| self.pow(a, k) == FieldElement::ONE)
            as u64)
    }

    /// Smallest `f | n` such that every element of the set is fixed by
    /// `x -> x^(2^f)`, i.e. the degree of the subfield the set generates.
    pub fn subfield_level<I>(&self, elements: I) -> u32
    where
        I: IntoIterator<Item = FieldElement>,
    {
        let elements: Vec<FieldElement> = elements.into_iter().collect();
        divisors(self.degree as u64)
            .into_iter()
            .map(|f| f as u32)
            .find(|&f| elements.iter().all(|&x| self.frobenius(x, f) == x))
            .unwrap_or(self.degree)
    }

    /// A generator of the multiplicative group.
    pub fn primitive_element(&self) -> FieldElement {
        let group = self.size() - 1;
        self.units()
            .find(|&a| self.mult_order(a).unwrap() == group)
            .expect("finite fields have primitive elements")
    }
}

/// Least `k` dividing `full` with `is_identity(k)`, given that
/// `is_identity(full)` holds and `primes` lists the prime factors of `full`.
pub(crate) fn order_by_descent<F>(full: u128, primes: &[u64], is_identity: F) -> u128
where
    F: Fn(u128) -> bool,
{
    let mut n = full;
    for &p in primes {
        let p = p as u128;
        while n.is_multiple_of(p) && is_identity(n / p) {
            n /= p;
        }
    }
    n
}

fn reduce_gf2(mut value: u128, modulus: u64, degree: u32) -> u64 {
    let m = modulus as u128;
    let mut top = 127 - value.leading_zeros() as i32;
    while value != 0 && top >= degree as i32 {
        if (value >> top) & 1 == 1 {
            value ^= m << (top as u32 - degree);
        }
        top -= 1;
    }
    value as u64
}

fn gf2_mulmod(a: u64, b: u64, modulus: u64, degree: u32) -> u64 {
    let mut prod: u128 = 0;
    let mut b = b;
    let mut shift = 0;
    while b != 0 {
        if b & 1 == 1 {
            prod ^= (a as u128) << shift;
        }
        b >>= 1;
        shift += 1;
    }
    reduce_gf2(prod, modulus, degree)
}

fn gf2_gcd(mut a: u64, mut b: u64) -> u64 {
    fn deg(x: u64) -> i32 {
        63 - x.leading_zeros() as i32
    }
    while b != 0 {
        while a != 0 && deg(a) >= deg(b) {
            a ^= b << (deg(a) - deg(b));
        }
        std::mem::swap(&mut a, &mut b);
    }
    a
}

/// Rabin's irreducibility test for a polynomial over GF(2) (bit `i` is the
/// coefficient of `t^i`).
pub fn is_irreducible_gf2(poly: u64) -> bool {
    if poly < 2 {
        return false;
    }
    let n = 63 - poly.leading_zeros();
    if n == 1 {
        return true;
    }
    // t^(2^k) mod poly
    let frob = |k: u32| {
        let mut x = 2u64;
        for _ in 0..k {
            x = gf2_mulmod(x, x, poly, n);
        }
        x
    };
    if frob(n) != 2 {
        return false;
    }
    crate::arith::prime_factors(n as u64).into_iter().all(|p| {
        let h = frob(n / p as u32) ^ 2;
        gf2_gcd(poly, h) == 1
    })
}
