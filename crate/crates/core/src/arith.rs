//! Integer helpers shared by the table and census layers: the classical
//! Möbius function, divisor lists, and exact big-integer conversions.

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision non-negative count.
pub type Count = BigUint;

/// Exact rational used for intermediate sums.
pub type Ratio = BigRational;

/// The number-theoretic Möbius function.
pub fn classical_mobius(n: u64) -> i32 {
    assert!(n >= 1, "Möbius function is defined on positive integers");
    let mut n = n;
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// All positive divisors of `n`, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Distinct prime factors of `n` by trial division. Only used on values
/// below 2^33 or so, where this is instant.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn pow2(k: u32) -> BigInt {
    BigInt::one() << k
}

/// Converts an exact rational to a non-negative count, failing if it is
/// fractional or negative.
pub fn ratio_to_count(value: &Ratio, what: &str) -> Result<Count> {
    if !value.is_integer() {
        return Err(Error::IntegralityViolation(format!("{what} = {value}")));
    }
    int_to_count(&value.to_integer(), what)
}

pub fn int_to_count(value: &BigInt, what: &str) -> Result<Count> {
    if value.is_negative() {
        return Err(Error::NegativeCount(format!("{what} = {value}")));
    }
    Ok(value.magnitude().clone())
}

/// Divides exactly, failing on a non-zero remainder.
pub fn exact_div(num: &BigInt, den: &BigInt, what: &str) -> Result<BigInt> {
    debug_assert!(!den.is_zero());
    let (q, r) = num_integer::Integer::div_rem(num, den);
    if !r.is_zero() {
        return Err(Error::IntegralityViolation(format!("{what}: {num} / {den}")));
    }
    Ok(q)
}

pub fn count_to_int(c: &Count) -> BigInt {
    BigInt::from_biguint(Sign::Plus, c.clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mobius_small_values() {
        assert_eq!(classical_mobius(1), 1);
        assert_eq!(classical_mobius(9), 0);
        assert_eq!(classical_mobius(15), 1);
        assert_eq!(classical_mobius(3), -1);
        assert_eq!(classical_mobius(30), -1);
    }

    #[test]
    fn mobius_sums_to_zero_over_divisors() {
        for n in 2..200u64 {
            let s: i32 = divisors(n).into_iter().map(classical_mobius).sum();
            assert_eq!(s, 0, "n = {n}");
        }
    }

    #[test]
    fn divisors_and_factors() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(prime_factors(1025), vec![5, 41]);
        assert_eq!(prime_factors(29120), vec![2, 5, 7, 13]);
    }

    #[test]
    fn exact_conversions() {
        let r = Ratio::new(BigInt::from(6), BigInt::from(3));
        assert_eq!(ratio_to_count(&r, "x").unwrap(), Count::from(2u32));
        let r = Ratio::new(BigInt::from(7), BigInt::from(3));
        assert!(matches!(ratio_to_count(&r, "x"), Err(Error::IntegralityViolation(_))));
        let r = Ratio::from_integer(BigInt::from(-2));
        assert!(matches!(ratio_to_count(&r, "x"), Err(Error::NegativeCount(_))));
    }
}
