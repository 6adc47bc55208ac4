//! Closed-form census counts for Sz(2^e), each cross-checked against an
//! independent Möbius inversion over the subgroup table, plus the regular-map
//! type census and surface-covering counts.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::arith::{classical_mobius, count_to_int, divisors, exact_div, int_to_count, pow2, ratio_to_count, Count, Ratio};
use crate::counting::{
    hom_count_free, mobius_invert, smooth_hom_c2_c2_c2, smooth_hom_cinf_c2, smooth_hom_ck_c2, surface_hom_count,
};
use crate::error::{Error, Result};
use crate::field::{check_exponent, FieldElement};
use crate::group::{a2, suzuki_orders, Suzuki};
use crate::tables::{character_degrees, element_counts, mobius_rows, ClassLabel, SubgroupClassRecord};

/// Largest exponent accepted by [`regular_map_type_census`].
pub const TYPE_CENSUS_MAX_E: u32 = 9;

/// What is being counted. Regular objects with automorphism group (or
/// orientation-preserving automorphism group) isomorphic to Sz(2^e).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ObjectKind {
    OrientedHypermaps,
    RegularHypermaps,
    ChiralHypermaps,
    OrientedMaps,
    RegularMaps,
    ChiralMaps,
    OrientedMapsValency4,
    OrientedMapsValency5,
    SelfDualOrientedMaps,
    /// Regular coverings of the closed orientable surface of this genus.
    Coverings(u32),
}

impl ObjectKind {
    pub const ALL_SIMPLE: [ObjectKind; 9] = [
        ObjectKind::OrientedHypermaps,
        ObjectKind::RegularHypermaps,
        ObjectKind::ChiralHypermaps,
        ObjectKind::OrientedMaps,
        ObjectKind::RegularMaps,
        ObjectKind::ChiralMaps,
        ObjectKind::OrientedMapsValency4,
        ObjectKind::OrientedMapsValency5,
        ObjectKind::SelfDualOrientedMaps,
    ];

    /// Snake-case name used in serialized output.
    pub fn name(self) -> &'static str {
        match self {
            ObjectKind::OrientedHypermaps => "oriented_hypermaps",
            ObjectKind::RegularHypermaps => "regular_hypermaps",
            ObjectKind::ChiralHypermaps => "chiral_hypermaps",
            ObjectKind::OrientedMaps => "oriented_maps",
            ObjectKind::RegularMaps => "regular_maps",
            ObjectKind::ChiralMaps => "chiral_maps",
            ObjectKind::OrientedMapsValency4 => "oriented_maps_valency4",
            ObjectKind::OrientedMapsValency5 => "oriented_maps_valency5",
            ObjectKind::SelfDualOrientedMaps => "self_dual_oriented_maps",
            ObjectKind::Coverings(_) => "coverings",
        }
    }

    pub fn genus(self) -> Option<u32> {
        match self {
            ObjectKind::Coverings(g) => Some(g),
            _ => None,
        }
    }
}

impl fmt::Display for ObjectKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusReport {
    pub e: u32,
    pub object_kind: ObjectKind,
    pub count: Count,
}

/// Computes the count for `kind` at exponent `e`.
pub fn census(e: u32, kind: ObjectKind) -> Result<CensusReport> {
    let count = match kind {
        ObjectKind::OrientedHypermaps => count_oriented_hypermaps(e)?,
        ObjectKind::RegularHypermaps => count_regular_hypermaps(e)?,
        ObjectKind::ChiralHypermaps => count_chiral_hypermaps(e)?,
        ObjectKind::OrientedMaps => count_oriented_maps(e)?,
        ObjectKind::RegularMaps => count_regular_maps(e)?,
        ObjectKind::ChiralMaps => count_chiral_maps(e)?,
        ObjectKind::OrientedMapsValency4 => count_oriented_maps_valency(e, 4)?,
        ObjectKind::OrientedMapsValency5 => count_oriented_maps_valency(e, 5)?,
        ObjectKind::SelfDualOrientedMaps => count_self_dual_oriented_maps(e)?,
        ObjectKind::Coverings(g) => count_orientable_coverings(e, g)?,
    };
    Ok(CensusReport { e, object_kind: kind, count })
}

/// The six enumeration formulas. Each has a closed-form summand in `f` and a
/// homomorphism count per subgroup-table row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Formula {
    OrientedHypermaps,
    RegularHypermaps,
    OrientedMaps,
    RegularMaps,
    OrientedMapsValency4,
    OrientedMapsValency5,
}

impl Formula {
    pub const ALL: [Formula; 6] = [
        Formula::OrientedHypermaps,
        Formula::RegularHypermaps,
        Formula::OrientedMaps,
        Formula::RegularMaps,
        Formula::OrientedMapsValency4,
        Formula::OrientedMapsValency5,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Formula::OrientedHypermaps => "H+",
            Formula::RegularHypermaps => "H",
            Formula::OrientedMaps => "M+",
            Formula::RegularMaps => "M",
            Formula::OrientedMapsValency4 => "M4+",
            Formula::OrientedMapsValency5 => "M5+",
        }
    }

    /// The term evaluated at each divisor `f` of `e`.
    pub fn summand(self, f: u32) -> BigInt {
        let p = pow2;
        let s = p(f);
        match self {
            Formula::OrientedHypermaps => &s * (p(4 * f) - p(3 * f) - 9),
            Formula::RegularHypermaps => &s * (p(3 * f) - p(2 * f + 1) + p(f + 1) - 5),
            Formula::OrientedMaps => &s * (p(2 * f) - &s - 3),
            Formula::RegularMaps => (&s - 1) * (&s - 2),
            Formula::OrientedMapsValency4 => &s * (&s - 2),
            Formula::OrientedMapsValency5 => (&s - 1) * count_to_int(&a2(f)),
        }
    }

    /// Homomorphisms from the parent group into the row's subgroup that the
    /// inversion path sums over.
    ///
    /// For regular maps only triples `(r0, r1, r2)` with `r0 != r2` commuting
    /// involutions and `r1` outside the normaliser of the Sylow 2-subgroup
    /// containing them are counted. Such triples never lie in a proper
    /// non-subfield subgroup, so only the G(f) rows contribute.
    pub fn hom_of_row(self, row: &SubgroupClassRecord) -> Result<Count> {
        let inv = element_counts(row, 2)?;
        Ok(match self {
            Formula::OrientedHypermaps => hom_count_free(2, &row.order),
            Formula::RegularHypermaps => smooth_hom_c2_c2_c2(&inv),
            Formula::OrientedMaps => smooth_hom_cinf_c2(&row.order, &inv),
            Formula::OrientedMapsValency4 => smooth_hom_ck_c2(&element_counts(row, 4)?, &inv),
            Formula::OrientedMapsValency5 => smooth_hom_ck_c2(&element_counts(row, 5)?, &inv),
            Formula::RegularMaps => {
                if row.label != ClassLabel::G {
                    return Ok(Count::zero());
                }
                let s = Count::one() << row.f;
                let s1 = &s - 1u32;
                let klein_pairs = (&s * &s + 1u32) * &s1 * (&s - 2u32);
                let outside = &s * &s * &s1;
                klein_pairs * outside
            }
        })
    }
}

fn check_census_exponent(e: u32) -> Result<()> {
    check_exponent(e)?;
    if e == 1 {
        return Err(Error::ExponentOne);
    }
    Ok(())
}

/// `(1/e) sum_{f | e} mu(e/f) summand(f)`.
pub fn closed_form(formula: Formula, e: u32) -> Result<Count> {
    check_census_exponent(e)?;
    let mut total = BigInt::zero();
    for f in divisors(e as u64) {
        let mu = classical_mobius(e as u64 / f);
        if mu != 0 {
            total += BigInt::from(mu) * formula.summand(f as u32);
        }
    }
    let what = format!("closed form {} at e = {e}", formula.name());
    int_to_count(&exact_div(&total, &BigInt::from(e), &what)?, &what)
}

/// The same count via Möbius inversion over the subgroup table.
pub fn via_inversion(formula: Formula, e: u32) -> Result<Count> {
    let rows = mobius_rows(e)?;
    mobius_invert(&rows, |row| formula.hom_of_row(row), &aut_order(e)?)
}

/// Evaluates both paths and fails unless they agree.
pub fn checked(formula: Formula, e: u32) -> Result<Count> {
    let a = closed_form(formula, e)?;
    let b = via_inversion(formula, e)?;
    if a != b {
        return Err(Error::VerificationFailure(format!(
            "{} at e = {e}: closed form {a}, inversion {b}",
            formula.name()
        )));
    }
    Ok(a)
}

/// `|Aut Sz(2^e)| = e |Sz(2^e)|`.
pub fn aut_order(e: u32) -> Result<Count> {
    Ok(suzuki_orders(e)?.group_order * e)
}

pub fn count_oriented_hypermaps(e: u32) -> Result<Count> {
    checked(Formula::OrientedHypermaps, e)
}

pub fn count_regular_hypermaps(e: u32) -> Result<Count> {
    checked(Formula::RegularHypermaps, e)
}

pub fn count_oriented_maps(e: u32) -> Result<Count> {
    checked(Formula::OrientedMaps, e)
}

pub fn count_regular_maps(e: u32) -> Result<Count> {
    checked(Formula::RegularMaps, e)
}

pub fn count_oriented_maps_valency(e: u32, k: u32) -> Result<Count> {
    match k {
        4 => checked(Formula::OrientedMapsValency4, e),
        5 => checked(Formula::OrientedMapsValency5, e),
        _ => Err(Error::UnsupportedValency(k)),
    }
}

/// Self-dual oriented maps are in bijection with oriented maps of valency 4.
pub fn count_self_dual_oriented_maps(e: u32) -> Result<Count> {
    count_oriented_maps_valency(e, 4)
}

fn chiral(oriented: Count, regular: Count, what: &str) -> Result<Count> {
    int_to_count(&(count_to_int(&oriented) - count_to_int(&regular)), what)
}

pub fn count_chiral_hypermaps(e: u32) -> Result<Count> {
    chiral(count_oriented_hypermaps(e)?, count_regular_hypermaps(e)?, "chiral hypermaps")
}

pub fn count_chiral_maps(e: u32) -> Result<Count> {
    chiral(count_oriented_maps(e)?, count_regular_maps(e)?, "chiral maps")
}

/// Counts indexed by a type `{m, n}` over a fixed axis of element orders.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeCensus {
    axis: Vec<u64>,
    cells: BTreeMap<(u64, u64), Count>,
}

impl TypeCensus {
    pub fn new(axis: Vec<u64>) -> Self {
        let mut axis = axis;
        axis.sort_unstable();
        axis.dedup();
        TypeCensus { axis, cells: BTreeMap::new() }
    }

    pub fn from_cells(axis: Vec<u64>, cells: &[((u64, u64), u64)]) -> Result<Self> {
        let mut t = TypeCensus::new(axis);
        for &((m, n), c) in cells {
            t.add(m, n, Count::from(c))?;
        }
        Ok(t)
    }

    pub fn axis(&self) -> &[u64] {
        &self.axis
    }

    pub fn add(&mut self, m: u64, n: u64, count: Count) -> Result<()> {
        if !self.axis.contains(&m) || !self.axis.contains(&n) {
            return Err(Error::InvalidInput(format!("type {{{m},{n}}} is off the axis {:?}", self.axis)));
        }
        *self.cells.entry((m, n)).or_default() += count;
        Ok(())
    }

    pub fn get(&self, m: u64, n: u64) -> Count {
        self.cells.get(&(m, n)).cloned().unwrap_or_default()
    }

    pub fn row_total(&self, m: u64) -> Count {
        self.axis.iter().map(|&n| self.get(m, n)).sum()
    }

    pub fn column_total(&self, n: u64) -> Count {
        self.axis.iter().map(|&m| self.get(m, n)).sum()
    }

    pub fn total(&self) -> Count {
        self.cells.values().sum()
    }

    pub fn is_symmetric(&self) -> bool {
        self.axis.iter().all(|&m| self.axis.iter().all(|&n| self.get(m, n) == self.get(n, m)))
    }

    /// Cell-wise `self - other`; both must share an axis and every cell of
    /// `other` must be bounded by `self`.
    pub fn difference(&self, other: &TypeCensus) -> Result<TypeCensus> {
        if self.axis != other.axis {
            return Err(Error::InvalidInput("type censuses have different axes".into()));
        }
        let mut out = TypeCensus::new(self.axis.clone());
        for &m in &self.axis {
            for &n in &self.axis {
                let d = count_to_int(&self.get(m, n)) - count_to_int(&other.get(m, n));
                let d = int_to_count(&d, &format!("type {{{m},{n}}} difference"))?;
                if !d.is_zero() {
                    out.add(m, n, d)?;
                }
            }
        }
        Ok(out)
    }

    /// Mismatching cells as `(m, n, self, other)`.
    pub fn mismatches(&self, other: &TypeCensus) -> Vec<(u64, u64, Count, Count)> {
        let axis: BTreeSet<u64> = self.axis.iter().chain(&other.axis).copied().collect();
        let mut out = Vec::new();
        for &m in &axis {
            for &n in &axis {
                let (a, b) = (self.get(m, n), other.get(m, n));
                if a != b {
                    out.push((m, n, a, b));
                }
            }
        }
        out
    }

    /// Square table with a header row of `n` values, row and column totals.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("m\\n");
        for n in &self.axis {
            out.push_str(&format!(",{n}"));
        }
        out.push_str(",total\n");
        for &m in &self.axis {
            out.push_str(&m.to_string());
            for &n in &self.axis {
                out.push_str(&format!(",{}", self.get(m, n)));
            }
            out.push_str(&format!(",{}\n", self.row_total(m)));
        }
        out.push_str("total");
        for &n in &self.axis {
            out.push_str(&format!(",{}", self.column_total(n)));
        }
        out.push_str(&format!(",{}\n", self.total()));
        out
    }
}

/// Orders above 2 that an element of Sz(2^e) can have: divisors of 4, q - 1,
/// a1 and a2.
pub fn type_axis(e: u32) -> Result<Vec<u64>> {
    let o = suzuki_orders(e)?;
    let q = 1u64 << e;
    let bound = |c: &Count| c.to_u64().ok_or(Error::UnsupportedExponent { e, max: 63 });
    let mut axis: Vec<u64> = [4, q - 1, bound(&o.a1)?, bound(&o.a2)?]
        .into_iter()
        .flat_map(divisors)
        .filter(|&d| d > 2)
        .collect();
    axis.sort_unstable();
    axis.dedup();
    Ok(axis)
}

/// Regular maps with automorphism group Sz(2^e), broken down by type.
///
/// With `r1` fixed to `tau`, a map is an ordered pair of distinct `b0, b2` in
/// GF(q)* whose entries generate GF(q); the type is the pair of orders of
/// `(0, b0) tau` and `(0, b2) tau`. Maps are the orbits of the Galois group,
/// one canonical pair per orbit.
pub fn regular_map_type_census(e: u32) -> Result<TypeCensus> {
    check_census_exponent(e)?;
    if e > TYPE_CENSUS_MAX_E {
        return Err(Error::UnsupportedExponent { e, max: TYPE_CENSUS_MAX_E });
    }
    let g = Suzuki::new(e)?;
    let f = g.field();
    let units: Vec<FieldElement> = f.units().collect();
    let order_of: BTreeMap<u64, u64> =
        units.iter().map(|&b| (b.bits(), g.element_order(&g.beta_tau(b)))).collect();

    let mut census = TypeCensus::new(type_axis(e)?);
    for &b0 in &units {
        for &b2 in &units {
            if b0 == b2 || f.subfield_level([b0, b2]) != e {
                continue;
            }
            let orbit: Vec<(u64, u64)> =
                (0..e).map(|k| (f.frobenius(b0, k).bits(), f.frobenius(b2, k).bits())).collect();
            let distinct: BTreeSet<_> = orbit.iter().collect();
            if distinct.len() != e as usize {
                return Err(Error::VerificationFailure(format!(
                    "Galois orbit of ({}, {}) has length {}, expected {e}",
                    b0.bits(),
                    b2.bits(),
                    distinct.len()
                )));
            }
            if orbit.iter().min() != Some(&(b0.bits(), b2.bits())) {
                continue;
            }
            let m = order_of[&b0.bits()];
            let n = order_of[&b2.bits()];
            census.add(m, n, Count::one())?;
        }
    }
    let expected = count_regular_maps(e)?;
    if census.total() != expected {
        return Err(Error::VerificationFailure(format!(
            "type census total {} differs from the regular map count {expected}",
            census.total()
        )));
    }
    Ok(census)
}

/// Regular coverings of the closed orientable surface of genus `g >= 1` with
/// covering group Sz(2^e).
pub fn count_orientable_coverings(e: u32, g: u32) -> Result<Count> {
    check_census_exponent(e)?;
    if g == 0 {
        return Err(Error::InvalidGenus(g));
    }
    let rows = mobius_rows(e)?;
    mobius_invert(
        &rows,
        |row| surface_hom_count(&character_degrees(row).degrees, &row.order, g),
        &aut_order(e)?,
    )
}

/// Closed form of the Sz(8) covering count, with `n = 2g - 2`.
pub fn sz8_coverings_closed_form(g: u32) -> Result<Count> {
    if g == 0 {
        return Err(Error::InvalidGenus(g));
    }
    let n = 2 * g as i32 - 2;
    let r = |v: i64| Ratio::from_integer(BigInt::from(v));
    let pw = |base: i64, exp: i32| r(base).pow(exp);
    let first = pw(29120, n)
        * (r(1) + r(2) * pw(14, -n) + r(3) * pw(35, -n) + pw(64, -n) + r(3) * pw(65, -n) + pw(91, -n));
    let second = pw(448, n) * (r(7) + pw(7, -n) + r(2) * pw(14, -n));
    let third = pw(14, n) * (r(2) + r(3) * pw(2, -n));
    let fourth = r(7) * pw(7, n);
    let fifth = pw(52, n) * (r(4) + r(3) * pw(4, -n));
    let sixth = pw(20, n) * (r(4) + pw(4, -n));
    let tail = r(8) * pw(4, n) + r(2) * pw(2, n) - r(1);
    let total = (first - second - third + fourth - fifth - sixth + tail) / r(3);
    ratio_to_count(&total, "Sz(8) covering closed form")
}

/// `r_g / (|G|^(2g-2) / 3)` for Sz(8), exactly.
pub fn sz8_coverings_asymptotic_ratio(g: u32) -> Result<Ratio> {
    let r = count_orientable_coverings(3, g)?;
    let n = 2 * g - 2;
    let leading = num_traits::pow(BigInt::from(29120), n as usize);
    Ok(Ratio::new(count_to_int(&r) * 3, leading))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(v: u64) -> Count {
        Count::from(v)
    }

    #[test]
    fn sz8_headline_counts() {
        assert_eq!(count_oriented_hypermaps(3).unwrap(), u(9534));
        assert_eq!(count_regular_hypermaps(3).unwrap(), u(1054));
        assert_eq!(count_chiral_hypermaps(3).unwrap(), u(8480));
        assert_eq!(count_oriented_maps(3).unwrap(), u(142));
        assert_eq!(count_regular_maps(3).unwrap(), u(14));
        assert_eq!(count_chiral_maps(3).unwrap(), u(128));
        assert_eq!(count_oriented_maps_valency(3, 4).unwrap(), u(16));
        assert_eq!(count_oriented_maps_valency(3, 5).unwrap(), u(30));
        assert_eq!(count_self_dual_oriented_maps(3).unwrap(), u(16));
    }

    #[test]
    fn sz32_oriented_hypermaps() {
        assert_eq!(closed_form(Formula::OrientedHypermaps, 5).unwrap(), u(6501114));
        assert_eq!(via_inversion(Formula::OrientedHypermaps, 5).unwrap(), u(6501114));
    }

    #[test]
    fn bad_exponents() {
        assert_eq!(count_oriented_maps(4), Err(Error::EvenExponent(4)));
        assert_eq!(count_oriented_maps(1), Err(Error::ExponentOne));
        assert_eq!(count_oriented_maps_valency(3, 7), Err(Error::UnsupportedValency(7)));
        assert_eq!(regular_map_type_census(11), Err(Error::UnsupportedExponent { e: 11, max: 9 }));
        assert_eq!(count_orientable_coverings(3, 0), Err(Error::InvalidGenus(0)));
    }

    #[test]
    fn sz8_regular_types() {
        let t = regular_map_type_census(3).unwrap();
        assert_eq!(t.axis(), &[4, 5, 7, 13]);
        let expected = TypeCensus::from_cells(
            vec![4, 5, 7, 13],
            &[((5, 7), 1), ((7, 5), 1), ((5, 13), 1), ((13, 5), 1), ((7, 7), 2), ((7, 13), 3), ((13, 7), 3), ((13, 13), 2)],
        )
        .unwrap();
        assert!(t.mismatches(&expected).is_empty(), "{}", t.to_csv());
        assert!(t.is_symmetric());
    }

    #[test]
    fn type_census_larger_exponents() {
        for e in [5, 7] {
            let t = regular_map_type_census(e).unwrap();
            assert!(t.is_symmetric());
            assert!(t.row_total(4).is_zero());
            assert!(t.axis().iter().all(|&m| t.row_total(m).is_zero() || m % 2 == 1));
        }
    }

    #[test]
    fn beta_one_has_order_five() {
        for e in [3, 5, 7, 9] {
            let g = Suzuki::new(e).unwrap();
            assert_eq!(g.element_order(&g.beta_tau(FieldElement::ONE)), 5);
        }
    }

    #[test]
    fn coverings_sz8() {
        assert_eq!(count_orientable_coverings(3, 1).unwrap(), u(0));
        assert_eq!(count_orientable_coverings(3, 2).unwrap(), u(286063776));
        for g in 1..=5 {
            assert_eq!(count_orientable_coverings(3, g).unwrap(), sz8_coverings_closed_form(g).unwrap());
        }
    }

    #[test]
    fn csv_layout() {
        let t = TypeCensus::from_cells(vec![5, 7], &[((5, 7), 1), ((7, 5), 1), ((7, 7), 2)]).unwrap();
        assert_eq!(t.to_csv(), "m\\n,5,7,total\n5,0,1,1\n7,1,2,3\ntotal,1,3,4\n");
        let d = t.difference(&TypeCensus::from_cells(vec![5, 7], &[((7, 7), 1)]).unwrap()).unwrap();
        assert_eq!(d.total(), u(3));
        assert!(t.difference(&TypeCensus::from_cells(vec![5, 7], &[((5, 5), 1)]).unwrap()).is_err());
    }
}
