//! The subgroup classes of Sz(2^e) on which the Möbius function is non-zero,
//! with their conjugate counts, Möbius values, element counts of orders 2, 4
//! and 5, and irreducible character degrees.
//!
//! Rows are generated from formula records evaluated at `(e, f)`; nothing is
//! entered per exponent. Classes with Möbius value zero (for instance the
//! centres Z(f)) are not represented.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::arith::{classical_mobius, count_to_int, divisors, Count};
use crate::error::{Error, Result};
use crate::field::check_exponent;
use crate::group::{a1, a2, suzuki_orders};

/// Conjugacy class families of subgroups with non-zero Möbius value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassLabel {
    /// Subfield subgroups G(f) = Sz(2^f).
    G,
    /// Point stabilisers F(f) = Q(f) A0(f).
    F,
    /// Dihedral normalisers B0(f) of the tori.
    B0,
    /// Tori A0(f), cyclic of order 2^f - 1.
    A0,
    /// Frobenius groups B1(f) = A1(f) : 4.
    B1,
    /// Frobenius groups B2(f) = A2(f) : 4.
    B2,
    /// B2(1), cyclic of order 4.
    B2One,
    /// B0(1), generated by one involution.
    B0One,
    /// The trivial subgroup.
    Identity,
}

impl ClassLabel {
    fn stem(self) -> &'static str {
        match self {
            ClassLabel::G => "G",
            ClassLabel::F => "F",
            ClassLabel::B0 | ClassLabel::B0One => "B0",
            ClassLabel::A0 => "A0",
            ClassLabel::B1 => "B1",
            ClassLabel::B2 | ClassLabel::B2One => "B2",
            ClassLabel::Identity => "I",
        }
    }
}

/// One row of the Möbius table, instantiated at a fixed `e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupClassRecord {
    pub label: ClassLabel,
    pub e: u32,
    /// Subfield degree; 1 for the three fixed rows.
    pub f: u32,
    pub order: Count,
    pub num_conjugates: Count,
    pub mu: BigInt,
}

impl SubgroupClassRecord {
    /// `G(3)`, `B2(1)`, `I`, ...
    pub fn name(&self) -> String {
        match self.label {
            ClassLabel::Identity => "I".to_string(),
            _ => format!("{}({})", self.label.stem(), self.f),
        }
    }

    /// `num_conjugates * mu`, the row's weight in a Möbius sum.
    pub fn weight(&self) -> BigInt {
        count_to_int(&self.num_conjugates) * &self.mu
    }
}

impl fmt::Display for SubgroupClassRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: |H| = {}, conjugates = {}, mu = {}",
            self.name(),
            self.order,
            self.num_conjugates,
            self.mu
        )
    }
}

fn p2(k: u32) -> BigUint {
    BigUint::one() << k
}

fn suzuki_order(f: u32) -> BigUint {
    let s = p2(f);
    &s * &s * (&s * &s + 1u32) * (&s - 1u32)
}

fn check_table_exponent(e: u32) -> Result<()> {
    check_exponent(e)?;
    if e == 1 {
        return Err(Error::ExponentOne);
    }
    Ok(())
}

/// All rows of the Möbius table for odd `e > 1`: six parametric rows for every
/// divisor `1 < f | e`, then B2(1), B0(1) and I.
pub fn mobius_rows(e: u32) -> Result<Vec<SubgroupClassRecord>> {
    check_table_exponent(e)?;
    let g_order = suzuki_orders(e)?.group_order;
    let q = p2(e);
    let mu_e = BigInt::from(classical_mobius(e as u64));
    let mut rows = Vec::new();
    let by_index = |order: &BigUint| -> BigUint { &g_order / order };

    for f in divisors(e as u64).into_iter().map(|f| f as u32).filter(|&f| f > 1) {
        let mu = BigInt::from(classical_mobius((e / f) as u64));
        let s = p2(f);
        let mut push = |label, order: BigUint, num_conjugates: BigUint, mu: BigInt| {
            rows.push(SubgroupClassRecord { label, e, f, order, num_conjugates, mu });
        };
        let order = suzuki_order(f);
        push(ClassLabel::G, order.clone(), by_index(&order), mu.clone());
        let order = &s * &s * (&s - 1u32);
        push(ClassLabel::F, order.clone(), by_index(&order), -mu.clone());
        let order = (&s - 1u32) * 2u32;
        push(ClassLabel::B0, order.clone(), by_index(&order), -mu.clone());
        // A0(f) is counted by the index of its normaliser B0, |G| / 2(q - 1),
        // independently of f; this row does not follow the |G|/|H| pattern.
        let a0_mu = BigInt::from(2u32) * count_to_int(&((&q - 1u32) / (&s - 1u32))) * &mu;
        push(ClassLabel::A0, &s - 1u32, &g_order / ((&q - 1u32) * 2u32), a0_mu);
        let order = a1(f) * 4u32;
        push(ClassLabel::B1, order.clone(), by_index(&order), -mu.clone());
        let order = a2(f) * 4u32;
        push(ClassLabel::B2, order.clone(), by_index(&order), -mu);
    }

    rows.push(SubgroupClassRecord {
        label: ClassLabel::B2One,
        e,
        f: 1,
        order: BigUint::from(4u32),
        num_conjugates: &g_order / (&q * 2u32),
        mu: -count_to_int(&q) * &mu_e,
    });
    rows.push(SubgroupClassRecord {
        label: ClassLabel::B0One,
        e,
        f: 1,
        order: BigUint::from(2u32),
        num_conjugates: &g_order / (&q * &q),
        mu: -count_to_int(&p2(2 * e - 1)) * &mu_e,
    });
    rows.push(SubgroupClassRecord {
        label: ClassLabel::Identity,
        e,
        f: 1,
        order: BigUint::one(),
        num_conjugates: BigUint::one(),
        mu: count_to_int(&g_order) * &mu_e,
    });
    Ok(rows)
}

/// Number of elements of order `k` in the row's subgroup, for `k` in {2, 4, 5}.
pub fn element_counts(row: &SubgroupClassRecord, k: u32) -> Result<Count> {
    if ![2, 4, 5].contains(&k) {
        return Err(Error::UnsupportedOrder(k));
    }
    let f = row.f;
    let s = p2(f);
    let s1 = &s - 1u32;
    let n = |v: u32| BigUint::from(v);
    let value = match (row.label, k) {
        (ClassLabel::G, 2) => &s1 * (&s * &s + 1u32),
        (ClassLabel::G, 4) => &s * (&s * &s + 1u32) * &s1,
        (ClassLabel::G, _) => &s * &s * &s1 * a2(f),
        (ClassLabel::F, 2) => s1,
        (ClassLabel::F, 4) => &s * &s1,
        (ClassLabel::F, _) => n(0),
        (ClassLabel::B0, 2) => s1,
        (ClassLabel::B0, _) => n(0),
        (ClassLabel::A0, _) => n(0),
        (ClassLabel::B1, 2) => a1(f),
        (ClassLabel::B1, 4) => a1(f) * 2u32,
        (ClassLabel::B1, _) => n(4),
        (ClassLabel::B2, 2) => a2(f),
        (ClassLabel::B2, 4) => a2(f) * 2u32,
        (ClassLabel::B2, _) => n(0),
        (ClassLabel::B2One, 2) => n(1),
        (ClassLabel::B2One, 4) => n(2),
        (ClassLabel::B2One, _) => n(0),
        (ClassLabel::B0One, 2) => n(1),
        (ClassLabel::B0One, _) => n(0),
        (ClassLabel::Identity, _) => n(0),
    };
    Ok(value)
}

/// A row together with its element counts of orders 2, 4 and 5.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementCountRow {
    pub record: SubgroupClassRecord,
    pub count2: Count,
    pub count4: Count,
    pub count5: Count,
}

pub fn element_count_rows(e: u32) -> Result<Vec<ElementCountRow>> {
    mobius_rows(e)?
        .into_iter()
        .map(|record| {
            Ok(ElementCountRow {
                count2: element_counts(&record, 2)?,
                count4: element_counts(&record, 4)?,
                count5: element_counts(&record, 5)?,
                record,
            })
        })
        .collect()
}

/// Irreducible character degrees of a row's subgroup as `(degree, multiplicity)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterDegreeSpec {
    pub record: SubgroupClassRecord,
    pub degrees: Vec<(Count, Count)>,
}

impl CharacterDegreeSpec {
    pub fn num_characters(&self) -> Count {
        self.degrees.iter().map(|(_, m)| m.clone()).sum()
    }

    pub fn sum_of_squares(&self) -> Count {
        self.degrees.iter().map(|(d, m)| d * d * m).sum()
    }
}

/// Character degrees with `s = 2^f`, `t = 2^((f+1)/2)` and
/// `k_i = (a_i(f) - 1) / 4`.
pub fn character_degrees(row: &SubgroupClassRecord) -> CharacterDegreeSpec {
    let f = row.f;
    let s = p2(f);
    let t = p2(f.div_ceil(2));
    let s1 = &s - 1u32;
    let n = |v: u32| BigUint::from(v);
    let k = |a: BigUint| (a - 1u32) / 4u32;
    let half_t = &s1 * &t / 2u32;
    let raw: Vec<(BigUint, BigUint)> = match row.label {
        ClassLabel::G => vec![
            (n(1), n(1)),
            (&s * &s, n(1)),
            (half_t, n(2)),
            (&s * &s + 1u32, (&s - 2u32) / 2u32),
            (&s1 * a1(f), k(a2(f))),
            (&s1 * a2(f), k(a1(f))),
        ],
        ClassLabel::F => vec![(n(1), s1.clone()), (s1.clone(), n(1)), (half_t, n(2))],
        ClassLabel::B0 => vec![(n(1), n(2)), (n(2), (&s - 2u32) / 2u32)],
        ClassLabel::A0 => vec![(n(1), s1)],
        ClassLabel::B1 => vec![(n(1), n(4)), (n(4), k(a1(f)))],
        ClassLabel::B2 => vec![(n(1), n(4)), (n(4), k(a2(f)))],
        ClassLabel::B2One => vec![(n(1), n(4))],
        ClassLabel::B0One => vec![(n(1), n(2))],
        ClassLabel::Identity => vec![(n(1), n(1))],
    };
    let degrees = raw.into_iter().filter(|(_, m)| !m.is_zero()).collect();
    CharacterDegreeSpec { record: row.clone(), degrees }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row<'a>(rows: &'a [SubgroupClassRecord], name: &str) -> &'a SubgroupClassRecord {
        rows.iter().find(|r| r.name() == name).unwrap_or_else(|| panic!("no row {name}"))
    }

    fn u(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn rows_at_e3() {
        let rows = mobius_rows(3).unwrap();
        assert_eq!(rows.len(), 9);
        let i = row(&rows, "I");
        assert_eq!((i.order.clone(), i.num_conjugates.clone(), i.mu.clone()), (u(1), u(1), BigInt::from(-29120)));
        let a0 = row(&rows, "A0(3)");
        assert_eq!((a0.order.clone(), a0.num_conjugates.clone(), a0.mu.clone()), (u(7), u(2080), BigInt::from(2)));
        // Signed contributions num_conjugates * mu, row by row.
        let weights: Vec<BigInt> = rows.iter().map(|r| r.weight()).collect();
        let expected: Vec<BigInt> = [1, -65, -2080, 4160, -1456, -560, 14560, 14560, -29120]
            .into_iter()
            .map(BigInt::from)
            .collect();
        assert_eq!(weights, expected);
    }

    #[test]
    fn rows_at_e9_skip_parametric_f1() {
        let rows = mobius_rows(9).unwrap();
        let fs: Vec<u32> = rows.iter().filter(|r| r.label == ClassLabel::G).map(|r| r.f).collect();
        assert_eq!(fs, vec![3, 9]);
        assert_eq!(rows.len(), 2 * 6 + 3);
        // mu(9) = 0 kills the three f = 1 rows.
        assert!(rows[12..].iter().all(|r| r.mu.is_zero()));
    }

    #[test]
    fn invalid_exponents() {
        assert_eq!(mobius_rows(1).unwrap_err(), Error::ExponentOne);
        assert_eq!(mobius_rows(4).unwrap_err(), Error::EvenExponent(4));
    }

    #[test]
    fn element_counts_at_e3() {
        let rows = mobius_rows(3).unwrap();
        let g = row(&rows, "G(3)");
        assert_eq!(element_counts(g, 2).unwrap(), u(455));
        assert_eq!(element_counts(g, 4).unwrap(), u(3640));
        assert_eq!(element_counts(g, 5).unwrap(), u(5824));
        for k in [2, 4, 5] {
            assert_eq!(element_counts(row(&rows, "A0(3)"), k).unwrap(), u(0));
        }
        assert_eq!(element_counts(g, 7), Err(Error::UnsupportedOrder(7)));
    }

    #[test]
    fn degrees_at_e3() {
        let rows = mobius_rows(3).unwrap();
        let g = character_degrees(row(&rows, "G(3)"));
        let expected: Vec<(BigUint, BigUint)> =
            [(1, 1), (64, 1), (14, 2), (65, 3), (35, 3), (91, 1)].iter().map(|&(d, m)| (u(d), u(m))).collect();
        assert_eq!(g.degrees, expected);
        assert_eq!(g.sum_of_squares(), u(29120));
        assert_eq!(g.num_characters(), u(11));

        let b01 = character_degrees(row(&rows, "B0(1)"));
        assert_eq!(b01.degrees, vec![(u(1), u(2))]);

        let f = character_degrees(row(&rows, "F(3)"));
        assert_eq!(f.degrees, vec![(u(1), u(7)), (u(7), u(1)), (u(14), u(2))]);
        assert_eq!(f.sum_of_squares(), u(448));
    }

    #[test]
    fn row_invariants_hold_for_all_small_exponents() {
        for e in (3..=15).step_by(2) {
            let g_order = suzuki_orders(e).unwrap().group_order;
            let rows = mobius_rows(e).unwrap();
            let total: BigInt = rows.iter().map(|r| r.weight()).sum();
            assert!(total.is_zero(), "Möbius sum at e={e} is {total}");
            for r in &rows {
                let spec = character_degrees(r);
                assert_eq!(spec.sum_of_squares(), r.order, "degrees of {} at e={e}", r.name());
                assert!(spec.num_characters() > u(0));
                if r.label != ClassLabel::A0 {
                    assert!((&g_order % (&r.num_conjugates * &r.order)).is_zero(), "{}", r.name());
                }
                let c2 = element_counts(r, 2).unwrap();
                let c4 = element_counts(r, 4).unwrap();
                let c5 = element_counts(r, 5).unwrap();
                if r.order > u(1) {
                    assert!(&c2 + &c4 < r.order, "{}", r.name());
                    assert!(c5 < r.order);
                }
            }
        }
    }
}
