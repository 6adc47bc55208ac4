//! The 4x4 matrix model of the Suzuki group G(e) = Sz(2^e) over GF(2^e).
//!
//! G(e) is generated by the lower unitriangular matrices `(a, b)` forming the
//! Sylow 2-subgroup Q(e), the diagonal torus A0(e), and the antidiagonal
//! permutation `tau`. Matrices are row-major; products are the usual
//! row-by-column product.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive};

use crate::arith::{divisors, pow2, Count};
use crate::error::{Error, Result};
use crate::field::{check_exponent, poly, FieldContext, FieldElement};

/// A 4x4 matrix over GF(2^n). Carries no context; operations take the field.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupMatrix {
    entries: [[FieldElement; 4]; 4],
}

impl fmt::Debug for GroupMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, row) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            let bits: Vec<String> = row.iter().map(|x| format!("{:x}", x.bits())).collect();
            f.write_str(&bits.join(" "))?;
        }
        f.write_str("]")
    }
}

impl GroupMatrix {
    pub fn identity() -> Self {
        let mut entries = [[FieldElement::ZERO; 4]; 4];
        for (i, row) in entries.iter_mut().enumerate() {
            row[i] = FieldElement::ONE;
        }
        GroupMatrix { entries }
    }

    pub fn from_rows(entries: [[FieldElement; 4]; 4]) -> Self {
        GroupMatrix { entries }
    }

    /// The matrix sending basis vector `i` to basis vector `perm[i]`.
    pub fn permutation(perm: [usize; 4]) -> Self {
        let mut entries = [[FieldElement::ZERO; 4]; 4];
        for (i, &j) in perm.iter().enumerate() {
            entries[j][i] = FieldElement::ONE;
        }
        GroupMatrix { entries }
    }

    pub fn diagonal(d: [FieldElement; 4]) -> Self {
        let mut entries = [[FieldElement::ZERO; 4]; 4];
        for i in 0..4 {
            entries[i][i] = d[i];
        }
        GroupMatrix { entries }
    }

    pub fn entry(&self, row: usize, col: usize) -> FieldElement {
        self.entries[row][col]
    }

    pub fn rows(&self) -> &[[FieldElement; 4]; 4] {
        &self.entries
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    pub fn is_lower_triangular(&self) -> bool {
        (0..4).all(|i| (i + 1..4).all(|j| self.entries[i][j].is_zero()))
    }

    pub fn mul(&self, other: &GroupMatrix, f: &FieldContext) -> GroupMatrix {
        let mut out = [[FieldElement::ZERO; 4]; 4];
        for (i, row) in self.entries.iter().enumerate() {
            for (k, &a) in row.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for j in 0..4 {
                    out[i][j] += f.mul(a, other.entries[k][j]);
                }
            }
        }
        GroupMatrix { entries: out }
    }

    pub fn pow(&self, mut k: u64, f: &FieldContext) -> GroupMatrix {
        let mut acc = Self::identity();
        let mut base = *self;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base, f);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base, f);
            }
        }
        acc
    }

    /// Gauss-Jordan inverse; `None` for a singular matrix.
    pub fn inverse(&self, f: &FieldContext) -> Option<GroupMatrix> {
        let mut a = self.entries;
        let mut inv = Self::identity().entries;
        for col in 0..4 {
            let pivot = (col..4).find(|&r| !a[r][col].is_zero())?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let scale = f.inv(a[col][col]).ok()?;
            for j in 0..4 {
                a[col][j] = f.mul(a[col][j], scale);
                inv[col][j] = f.mul(inv[col][j], scale);
            }
            for r in 0..4 {
                if r != col && !a[r][col].is_zero() {
                    let factor = a[r][col];
                    for j in 0..4 {
                        let (x, y) = (f.mul(factor, a[col][j]), f.mul(factor, inv[col][j]));
                        a[r][j] += x;
                        inv[r][j] += y;
                    }
                }
            }
        }
        Some(GroupMatrix { entries: inv })
    }

    /// `g^-1 * self * g`.
    pub fn conjugate_by(&self, g: &GroupMatrix, g_inv: &GroupMatrix, f: &FieldContext) -> Self {
        g_inv.mul(self, f).mul(g, f)
    }

    /// Characteristic polynomial `det(lambda I - M)`, coefficients ascending
    /// (index 4 is the leading 1). Expanded over all 24 permutations; signs
    /// vanish in characteristic 2.
    pub fn char_poly(&self, f: &FieldContext) -> [FieldElement; 5] {
        let mut out = [FieldElement::ZERO; 5];
        for perm in PERMS_4 {
            let mut prod: Vec<FieldElement> = vec![FieldElement::ONE];
            for (i, &j) in perm.iter().enumerate() {
                // entry of lambda*I + M at (i, j): M_ij + [i == j] lambda
                let lin = [self.entries[i][j], if i == j { FieldElement::ONE } else { FieldElement::ZERO }];
                let mut next = vec![FieldElement::ZERO; prod.len() + 1];
                for (k, &c) in prod.iter().enumerate() {
                    next[k] += f.mul(c, lin[0]);
                    next[k + 1] += f.mul(c, lin[1]);
                }
                prod = next;
            }
            for (k, c) in prod.into_iter().enumerate() {
                out[k] += c;
            }
        }
        out
    }

    pub fn determinant(&self, f: &FieldContext) -> FieldElement {
        self.char_poly(f)[0]
    }

    /// Canonical fixed-width encoding: entry `(i, j)` occupies bits
    /// `[(4i + j) n, (4i + j + 1) n)` for field degree `n`.
    pub fn encode(&self, degree: u32) -> Result<u128> {
        if 16 * degree > 128 {
            return Err(Error::EncodingTooWide(degree));
        }
        let mut key: u128 = 0;
        for (idx, x) in self.entries.iter().flatten().enumerate() {
            key |= (x.bits() as u128) << (idx as u32 * degree);
        }
        Ok(key)
    }
}

const PERMS_4: [[usize; 4]; 24] = [
    [0, 1, 2, 3], [0, 1, 3, 2], [0, 2, 1, 3], [0, 2, 3, 1], [0, 3, 1, 2], [0, 3, 2, 1],
    [1, 0, 2, 3], [1, 0, 3, 2], [1, 2, 0, 3], [1, 2, 3, 0], [1, 3, 0, 2], [1, 3, 2, 0],
    [2, 0, 1, 3], [2, 0, 3, 1], [2, 1, 0, 3], [2, 1, 3, 0], [2, 3, 0, 1], [2, 3, 1, 0],
    [3, 0, 1, 2], [3, 0, 2, 1], [3, 1, 0, 2], [3, 1, 2, 0], [3, 2, 0, 1], [3, 2, 1, 0],
];

/// The sign `chi(e)`: +1 when `e = ±1 (mod 8)`, -1 when `e = ±3 (mod 8)`.
pub fn chi(e: u32) -> i8 {
    match e % 8 {
        1 | 7 => 1,
        3 | 5 => -1,
        _ => panic!("chi is defined for odd exponents only (got {e})"),
    }
}

/// `a1(e) = 2^e + chi(e) 2^((e+1)/2) + 1`, the order of A1; always divisible by 5.
pub fn a1(e: u32) -> BigUint {
    a_value(e, chi(e))
}

/// `a2(e) = 2^e - chi(e) 2^((e+1)/2) + 1`, the order of A2; never divisible by 5.
pub fn a2(e: u32) -> BigUint {
    a_value(e, -chi(e))
}

fn a_value(e: u32, sign: i8) -> BigUint {
    let v = pow2(e) + BigInt::from(sign) * pow2(e.div_ceil(2)) + BigInt::one();
    v.to_biguint().expect("a_i(e) is positive")
}

/// Numeric data of G(e): its order and the exceptional cyclic orders.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupOrders {
    pub e: u32,
    /// `q^2 (q^2 + 1)(q - 1)`
    pub group_order: Count,
    pub a1: Count,
    pub a2: Count,
    pub chi: i8,
}

pub fn suzuki_orders(e: u32) -> Result<SubgroupOrders> {
    check_exponent(e)?;
    let q = BigUint::one() << e;
    let group_order = &q * &q * (&q * &q + 1u32) * (&q - 1u32);
    Ok(SubgroupOrders { e, group_order, a1: a1(e), a2: a2(e), chi: chi(e) })
}

/// Sz(2^e) as a matrix group over its field, with the constructors for the
/// generating families and element-order machinery.
#[derive(Debug, Clone)]
pub struct Suzuki {
    field: FieldContext,
    orders: SubgroupOrders,
    /// Union of the divisors of 4, q - 1, a1 and a2, ascending. Every element
    /// order divides one of those four numbers.
    order_candidates: Vec<u64>,
}

impl Suzuki {
    pub fn new(e: u32) -> Result<Self> {
        let field = FieldContext::new(e)?;
        let orders = suzuki_orders(e)?;
        let q = 1u64 << e;
        let mut candidates: Vec<u64> = [4, q - 1, orders.a1.to_u64().unwrap(), orders.a2.to_u64().unwrap()]
            .into_iter()
            .flat_map(divisors)
            .collect();
        candidates.sort_unstable();
        candidates.dedup();
        Ok(Suzuki { field, orders, order_candidates: candidates })
    }

    pub fn field(&self) -> &FieldContext {
        &self.field
    }

    pub fn e(&self) -> u32 {
        self.orders.e
    }

    pub fn q(&self) -> u64 {
        self.field.size()
    }

    pub fn orders(&self) -> &SubgroupOrders {
        &self.orders
    }

    /// The matrix `(a, b)` of Q(e):
    ///
    /// ```text
    /// 1
    /// a                       1
    /// a^(th+1) + b            a^th   1
    /// a^(th+2) + ab + b^th    b      a   1
    /// ```
    pub fn q_element(&self, a: FieldElement, b: FieldElement) -> GroupMatrix {
        let f = &self.field;
        let a_th = f.theta(a);
        let a_th1 = f.mul(a_th, a);
        let a_th2 = f.mul(a_th1, a);
        let z = FieldElement::ZERO;
        let o = FieldElement::ONE;
        GroupMatrix::from_rows([
            [o, z, z, z],
            [a, o, z, z],
            [a_th1 + b, a_th, o, z],
            [a_th2 + f.mul(a, b) + f.theta(b), b, a, o],
        ])
    }

    /// `diag(a^(1+th), a, a^-1, a^(-1-th))`, an element of the torus A0(e).
    pub fn torus_element(&self, a: FieldElement) -> Result<GroupMatrix> {
        let f = &self.field;
        let a_inv = f.inv(a).map_err(|_| Error::ZeroElement)?;
        let top = f.mul(a, f.theta(a));
        let bottom = f.inv(top)?;
        Ok(GroupMatrix::diagonal([top, a, a_inv, bottom]))
    }

    /// The antidiagonal involution.
    pub fn tau(&self) -> GroupMatrix {
        GroupMatrix::permutation([3, 2, 1, 0])
    }

    pub fn mul(&self, x: &GroupMatrix, y: &GroupMatrix) -> GroupMatrix {
        x.mul(y, &self.field)
    }

    /// Generators of the whole group: `(t^i, 0)`, `(0, t^i)` for `i < e`, a
    /// torus generator, and `tau`.
    pub fn generators(&self) -> Vec<GroupMatrix> {
        let f = &self.field;
        let g = f.primitive_element();
        let mut gens = self.q_generators();
        if f.size() > 2 {
            gens.push(self.torus_element(g).expect("primitive element is non-zero"));
        }
        gens.push(self.tau());
        gens
    }

    /// Generators of Q(e): `(t^i, 0)` and `(0, t^i)` for `i < e`.
    pub fn q_generators(&self) -> Vec<GroupMatrix> {
        let f = &self.field;
        let z = FieldElement::ZERO;
        let mut gens = Vec::new();
        let mut x = FieldElement::ONE;
        for _ in 0..self.e() {
            gens.push(self.q_element(x, z));
            gens.push(self.q_element(z, x));
            x = f.mul(x, f.t());
        }
        gens.sort();
        gens.dedup();
        gens
    }

    /// Least `n >= 1` with `m^n = 1`. Tries the divisors of 4, q - 1, a1, a2 in
    /// ascending order; falls back to repeated multiplication for matrices
    /// outside the group.
    pub fn element_order(&self, m: &GroupMatrix) -> u64 {
        let f = &self.field;
        for &d in &self.order_candidates {
            if m.pow(d, f).is_identity() {
                return d;
            }
        }
        let mut x = *m;
        let mut n = 1;
        while !x.is_identity() {
            x = x.mul(m, f);
            n += 1;
        }
        n
    }

    /// The product `(0, b) * tau`.
    pub fn beta_tau(&self, b: FieldElement) -> GroupMatrix {
        self.mul(&self.q_element(FieldElement::ZERO, b), &self.tau())
    }

    /// Characteristic polynomial of `(0, b) * tau` in closed form:
    /// `l^4 + b^th l^3 + b^2 l^2 + b^th l + 1`, coefficients ascending.
    pub fn beta_tau_char_poly(&self, b: FieldElement) -> Result<[FieldElement; 5]> {
        if b.is_zero() {
            return Err(Error::ZeroElement);
        }
        let f = &self.field;
        let bt = f.theta(b);
        Ok([FieldElement::ONE, bt, f.square(b), bt, FieldElement::ONE])
    }

    /// Order of `(0, b) * tau` read off its characteristic polynomial: the
    /// order of `x` in `GF(q)[x]/(p)`. Independent of matrix powering; valid
    /// because these elements have odd order and so are semisimple.
    pub fn beta_tau_order_via_char_poly(&self, b: FieldElement) -> Result<u64> {
        let p = self.beta_tau_char_poly(b)?;
        poly::x_order_mod(&self.field, &p).ok_or_else(|| {
            Error::InvalidInput(format!("extension degree too large for e = {}", self.e()))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sz8() -> Suzuki {
        Suzuki::new(3).unwrap()
    }

    #[test]
    fn q_element_identity_and_product_law() {
        let g = sz8();
        let f = g.field();
        let z = FieldElement::ZERO;
        assert!(g.q_element(z, z).is_identity());
        for a in f.elements() {
            for b in f.elements() {
                let x = g.q_element(a, b);
                for c in f.elements() {
                    for d in f.elements() {
                        let expected = g.q_element(a + c, f.mul(a, f.theta(c)) + b + d);
                        assert_eq!(g.mul(&x, &g.q_element(c, d)), expected);
                    }
                }
            }
        }
    }

    #[test]
    fn center_elements_are_involutions() {
        let g = sz8();
        for b in g.field().units() {
            let x = g.q_element(FieldElement::ZERO, b);
            assert!(g.mul(&x, &x).is_identity());
        }
    }

    #[test]
    fn q_element_orders() {
        let g = sz8();
        let f = g.field();
        let mut involutions = 0;
        for a in f.elements() {
            for b in f.elements() {
                let ord = g.element_order(&g.q_element(a, b));
                assert!([1, 2, 4].contains(&ord));
                if !a.is_zero() {
                    assert_eq!(ord, 4);
                }
                if ord == 2 {
                    involutions += 1;
                }
            }
        }
        assert_eq!(involutions, g.q() - 1);
    }

    #[test]
    fn torus_is_a_monomorphism() {
        let g = sz8();
        let f = g.field();
        assert!(g.torus_element(FieldElement::ONE).unwrap().is_identity());
        assert_eq!(g.torus_element(FieldElement::ZERO), Err(Error::ZeroElement));
        for a in f.units() {
            let ta = g.torus_element(a).unwrap();
            assert_eq!(ta.determinant(f), FieldElement::ONE);
            for b in f.units() {
                let tb = g.torus_element(b).unwrap();
                assert_eq!(g.mul(&ta, &tb), g.torus_element(f.mul(a, b)).unwrap());
                if a != b {
                    assert_ne!(ta, tb);
                }
            }
        }
        let t = f.t();
        assert_eq!(g.element_order(&g.torus_element(t).unwrap()), 7);
        let t2 = f.square(t);
        assert_eq!(
            g.mul(&g.torus_element(t).unwrap(), &g.torus_element(t2).unwrap()),
            g.torus_element(f.mul(t, t2)).unwrap()
        );
    }

    #[test]
    fn tau_properties() {
        let g = sz8();
        let f = g.field();
        let tau = g.tau();
        assert!(g.mul(&tau, &tau).is_identity());
        assert!(!tau.is_lower_triangular());
        for a in f.units() {
            let t = g.torus_element(a).unwrap();
            let conj = t.conjugate_by(&tau, &tau, f);
            assert_eq!(conj, g.torus_element(f.inv(a).unwrap()).unwrap());
        }
    }

    #[test]
    fn element_orders_of_special_products() {
        let g = sz8();
        assert_eq!(g.element_order(&GroupMatrix::identity()), 1);
        assert_eq!(g.element_order(&g.beta_tau(FieldElement::ONE)), 5);
    }

    #[test]
    fn inverse_round_trip() {
        let g = sz8();
        let f = g.field();
        let x = g.mul(&g.q_element(f.t(), FieldElement::ONE), &g.tau());
        let y = x.inverse(f).unwrap();
        assert!(g.mul(&x, &y).is_identity());
        let singular = GroupMatrix::diagonal([FieldElement::ONE, FieldElement::ZERO, FieldElement::ONE, FieldElement::ONE]);
        assert!(singular.inverse(f).is_none());
    }

    #[test]
    fn closed_form_char_poly_matches_matrix() {
        for e in [3, 5] {
            let g = Suzuki::new(e).unwrap();
            for b in g.field().units() {
                assert_eq!(g.beta_tau_char_poly(b).unwrap(), g.beta_tau(b).char_poly(g.field()));
            }
        }
        assert_eq!(sz8().beta_tau_char_poly(FieldElement::ZERO), Err(Error::ZeroElement));
    }

    #[test]
    fn beta_one_gives_cyclotomic_polynomial() {
        let g = sz8();
        let one = FieldElement::ONE;
        assert_eq!(g.beta_tau_char_poly(one).unwrap(), [one; 5]);
    }

    fn min_poly_is(f: &FieldContext, b: FieldElement, low: [u64; 3]) -> bool {
        // b^3 + low[2] b^2 + low[1] b + low[0] = 0 over GF(2)
        let b2 = f.square(b);
        let b3 = f.mul(b2, b);
        let mut v = b3;
        if low[2] == 1 {
            v += b2;
        }
        if low[1] == 1 {
            v += b;
        }
        if low[0] == 1 {
            v += FieldElement::ONE;
        }
        v.is_zero()
    }

    #[test]
    fn char_poly_splitting_over_gf8() {
        let g = sz8();
        let f = g.field();
        for b in f.units().filter(|&b| b != FieldElement::ONE) {
            let p = g.beta_tau_char_poly(b).unwrap();
            let roots = poly::roots_in_field(f, &p);
            if min_poly_is(f, b, [1, 1, 0]) {
                // t^3 + t + 1: four roots b+1, b^2, b^2+b, b^2+b+1, all of order 7
                let b2 = f.square(b);
                let mut expected = vec![b + FieldElement::ONE, b2, b2 + b, b2 + b + FieldElement::ONE];
                expected.sort();
                assert_eq!(roots, expected);
                for r in roots {
                    assert_eq!(f.mult_order(r).unwrap(), 7);
                }
                assert_eq!(g.element_order(&g.beta_tau(b)), 7);
            } else {
                assert!(min_poly_is(f, b, [1, 0, 1]));
                assert!(roots.is_empty());
                assert!(poly::is_irreducible(f, &p));
                assert_eq!(g.beta_tau_order_via_char_poly(b).unwrap(), 13);
                assert_eq!(g.element_order(&g.beta_tau(b)), 13);
            }
        }
    }

    #[test]
    fn char_poly_route_agrees_with_matrix_powering() {
        for e in [3, 5, 7] {
            let g = Suzuki::new(e).unwrap();
            for b in g.field().units() {
                assert_eq!(
                    g.beta_tau_order_via_char_poly(b).unwrap(),
                    g.element_order(&g.beta_tau(b)),
                    "e={e} b={b:?}"
                );
            }
        }
    }

    #[test]
    fn suzuki_orders_examples() {
        let o = suzuki_orders(1).unwrap();
        assert_eq!((o.a1.clone(), o.a2.clone(), o.group_order.clone()), (5u32.into(), 1u32.into(), 20u32.into()));
        let o = suzuki_orders(3).unwrap();
        assert_eq!(o.chi, -1);
        assert_eq!((o.a1.clone(), o.a2.clone()), (5u32.into(), 13u32.into()));
        assert_eq!(o.group_order, 29120u32.into());
        let o = suzuki_orders(5).unwrap();
        assert_eq!(o.chi, -1);
        assert_eq!((o.a1.clone(), o.a2.clone()), (25u32.into(), 41u32.into()));
        assert_eq!(o.group_order, 32537600u32.into());
        assert_eq!(&o.a1 * &o.a2, 1025u32.into());
        assert_eq!(suzuki_orders(4).unwrap_err(), Error::EvenExponent(4));
    }

    #[test]
    fn a_values_divide_along_divisors() {
        for e in (1..=31u32).step_by(2) {
            let o = suzuki_orders(e).unwrap();
            let q2 = BigUint::one() << (2 * e);
            assert_eq!(&o.a1 * &o.a2, q2 + 1u32);
            assert_eq!(&o.a1 % 5u32, BigUint::from(0u32));
            assert_ne!(&o.a2 % 5u32, BigUint::from(0u32));
            assert_eq!(num_integer::Integer::gcd(&o.a1, &o.a2), BigUint::one());
            for fdiv in divisors(e as u64) {
                let fdiv = fdiv as u32;
                assert_eq!(&o.a1 % a1(fdiv), BigUint::from(0u32), "a1({fdiv}) | a1({e})");
                assert_eq!(&o.a2 % a2(fdiv), BigUint::from(0u32), "a2({fdiv}) | a2({e})");
            }
        }
    }

    #[test]
    fn encoding_is_injective_on_q() {
        let g = sz8();
        let f = g.field();
        let mut keys = std::collections::HashSet::new();
        for a in f.elements() {
            for b in f.elements() {
                keys.insert(g.q_element(a, b).encode(3).unwrap());
            }
        }
        assert_eq!(keys.len(), 64);
        assert_eq!(GroupMatrix::identity().encode(9), Err(Error::EncodingTooWide(9)));
    }
}
