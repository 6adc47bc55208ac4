//! Homomorphism counts from character data, and Möbius inversion over the
//! subgroup table.
//!
//! All arithmetic is exact: sums are accumulated as rationals (complex
//! rationals for character values) and every result is checked to be a
//! non-negative integer before it is returned.

use num_bigint::BigInt;
use num_complex::Complex;
use num_traits::{One, Signed, Zero};

use crate::arith::{count_to_int, exact_div, int_to_count, ratio_to_count, Count, Ratio};
use crate::error::{Error, Result};
use crate::tables::SubgroupClassRecord;

/// A character value in Q(i). Enough for groups whose character tables are
/// rational or Gaussian (S3, AGL1(5)); larger tables are not needed because
/// Sz(8) class counts come from the oracle directly.
pub type CharValue = Complex<Ratio>;

pub fn char_value(re: i64, im: i64) -> CharValue {
    Complex::new(Ratio::from_integer(re.into()), Ratio::from_integer(im.into()))
}

/// Class sizes and a character table. Class 0 must be the identity class.
#[derive(Debug, Clone)]
pub struct ClassData {
    pub class_sizes: Vec<Count>,
    /// `char_values[chi][class]`
    pub char_values: Vec<Vec<CharValue>>,
    pub degrees: Vec<Count>,
    pub group_order: Count,
}

impl ClassData {
    pub fn new(class_sizes: Vec<Count>, char_values: Vec<Vec<CharValue>>, group_order: Count) -> Result<Self> {
        let total: Count = class_sizes.iter().sum();
        if total != group_order {
            return Err(Error::InvalidInput(format!(
                "class sizes sum to {total}, group order is {group_order}"
            )));
        }
        if class_sizes.first() != Some(&Count::one()) {
            return Err(Error::InvalidInput("class 0 must be the identity class".into()));
        }
        let mut degrees = Vec::with_capacity(char_values.len());
        for row in &char_values {
            if row.len() != class_sizes.len() {
                return Err(Error::InvalidInput("character row length differs from class count".into()));
            }
            let d = &row[0];
            if !d.im.is_zero() || !d.re.is_integer() || !d.re.is_positive() {
                return Err(Error::InvalidInput(format!("character degree {d} is not a positive integer")));
            }
            degrees.push(ratio_to_count(&d.re, "degree")?);
        }
        Ok(ClassData { class_sizes, char_values, degrees, group_order })
    }

    pub fn num_classes(&self) -> usize {
        self.class_sizes.len()
    }
}

fn complex_to_count(z: &CharValue, what: &str) -> Result<Count> {
    if !z.im.is_zero() {
        return Err(Error::IntegralityViolation(format!("{what} has imaginary part {}", z.im)));
    }
    ratio_to_count(&z.re, what)
}

/// Number of solutions of `x1 x2 x3 = 1` with `x_i` in class `i_k`:
/// `|C1||C2||C3| / |H| * sum_chi chi(x1) chi(x2) chi(x3) / chi(1)`.
pub fn triangle_solutions(data: &ClassData, i1: usize, i2: usize, i3: usize) -> Result<Count> {
    let n = data.num_classes();
    if i1 >= n || i2 >= n || i3 >= n {
        return Err(Error::InvalidInput(format!("class index out of range (have {n} classes)")));
    }
    let mut sum = CharValue::zero();
    for (row, degree) in data.char_values.iter().zip(&data.degrees) {
        let term = &row[i1] * &row[i2] * &row[i3];
        let d = Ratio::from_integer(count_to_int(degree));
        sum += CharValue::new(term.re / &d, term.im / &d);
    }
    let sizes = count_to_int(&(&data.class_sizes[i1] * &data.class_sizes[i2] * &data.class_sizes[i3]));
    let scale = Ratio::new(sizes, count_to_int(&data.group_order));
    let total = CharValue::new(sum.re * &scale, sum.im * &scale);
    complex_to_count(&total, "triangle count")
}

fn check_degree_sum(degrees: &[(Count, Count)], group_order: &Count) -> Result<()> {
    let sum: Count = degrees.iter().map(|(d, m)| d * d * m).sum();
    if &sum != group_order {
        return Err(Error::DegreeSumMismatch { expected: group_order.to_string(), got: sum.to_string() });
    }
    Ok(())
}

fn signed_pow(base: &Count, exp: i64) -> Ratio {
    let b = Ratio::from_integer(count_to_int(base));
    b.pow(i32::try_from(exp).expect("exponent fits in i32"))
}

/// `|Hom(Pi_g, H)| = |H|^(2g-1) sum_chi chi(1)^(2-2g)`, from `(degree,
/// multiplicity)` pairs. `g = 0` is accepted: Pi_0 is trivial and the formula
/// gives 1.
pub fn surface_hom_count(degrees: &[(Count, Count)], group_order: &Count, g: u32) -> Result<Count> {
    check_degree_sum(degrees, group_order)?;
    let g = g as i64;
    let mut sum = Ratio::zero();
    for (d, m) in degrees {
        sum += signed_pow(d, 2 - 2 * g) * Ratio::from_integer(count_to_int(m));
    }
    ratio_to_count(&(signed_pow(group_order, 2 * g - 1) * sum), "surface homomorphism count")
}

/// A character described by its degree and Frobenius–Schur indicator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealityData {
    pub degree: Count,
    /// 1, -1 or 0
    pub indicator: i8,
    pub multiplicity: Count,
}

/// Solutions of `a1^2 ... ag^2 = 1`:
/// `|H|^(g-1) sum_chi c_chi^g chi(1)^(2-g)`, for `g >= 1`.
pub fn nonorientable_hom_count(chars: &[RealityData], group_order: &Count, g: u32) -> Result<Count> {
    if g == 0 {
        return Err(Error::InvalidGenus(0));
    }
    if let Some(c) = chars.iter().find(|c| !(-1..=1).contains(&c.indicator)) {
        return Err(Error::InvalidInput(format!("indicator {} not in {{-1, 0, 1}}", c.indicator)));
    }
    let pairs: Vec<(Count, Count)> = chars.iter().map(|c| (c.degree.clone(), c.multiplicity.clone())).collect();
    check_degree_sum(&pairs, group_order)?;
    let g = g as i64;
    let mut sum = Ratio::zero();
    for c in chars {
        let ind = Ratio::from_integer(BigInt::from(c.indicator)).pow(g as i32);
        sum += ind * signed_pow(&c.degree, 2 - g) * Ratio::from_integer(count_to_int(&c.multiplicity));
    }
    ratio_to_count(&(signed_pow(group_order, g - 1) * sum), "non-orientable homomorphism count")
}

/// `|Hom(F_r, H)| = |H|^r`.
pub fn hom_count_free(rank: u32, group_order: &Count) -> Count {
    num_traits::pow(group_order.clone(), rank as usize)
}

/// Smooth homomorphisms `C2 * C2 * C2 -> H`: `|H|_2^3`.
pub fn smooth_hom_c2_c2_c2(involutions: &Count) -> Count {
    involutions * involutions * involutions
}

/// Smooth homomorphisms `C_inf * C2 -> H`: `|H| |H|_2`.
pub fn smooth_hom_cinf_c2(group_order: &Count, involutions: &Count) -> Count {
    group_order * involutions
}

/// Smooth homomorphisms `C_k * C2 -> H`: `|H|_k |H|_2`.
pub fn smooth_hom_ck_c2(order_k_elements: &Count, involutions: &Count) -> Count {
    order_k_elements * involutions
}

/// `n(G) = (1/|Aut G|) sum_rows num_conjugates * mu * Hom(row)`.
pub fn mobius_invert<F>(rows: &[SubgroupClassRecord], hom_of_row: F, aut_order: &Count) -> Result<Count>
where
    F: Fn(&SubgroupClassRecord) -> Result<Count>,
{
    let mut total = BigInt::zero();
    for row in rows {
        let hom = hom_of_row(row)?;
        if !row.mu.is_zero() {
            total += row.weight() * count_to_int(&hom);
        }
    }
    let quotient = exact_div(&total, &count_to_int(aut_order), "Möbius inversion")?;
    int_to_count(&quotient, "Möbius inversion")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::suzuki_orders;
    use crate::tables::mobius_rows;

    fn u(v: u64) -> Count {
        Count::from(v)
    }

    fn c2_data() -> ClassData {
        ClassData::new(vec![u(1), u(1)], vec![vec![char_value(1, 0), char_value(1, 0)], vec![char_value(1, 0), char_value(-1, 0)]], u(2))
            .unwrap()
    }

    fn s3_data() -> ClassData {
        // classes: identity, transpositions, 3-cycles
        let rows = vec![
            vec![char_value(1, 0), char_value(1, 0), char_value(1, 0)],
            vec![char_value(1, 0), char_value(-1, 0), char_value(1, 0)],
            vec![char_value(2, 0), char_value(0, 0), char_value(-1, 0)],
        ];
        ClassData::new(vec![u(1), u(3), u(2)], rows, u(6)).unwrap()
    }

    #[test]
    fn triangle_in_c2() {
        assert_eq!(triangle_solutions(&c2_data(), 1, 1, 1).unwrap(), u(0));
        assert_eq!(triangle_solutions(&c2_data(), 1, 1, 0).unwrap(), u(1));
    }

    #[test]
    fn triangle_in_s3_matches_enumeration() {
        // Brute force: tau1 tau2 = sigma^-1 has 6 solutions (ordered pairs of
        // distinct transpositions).
        assert_eq!(triangle_solutions(&s3_data(), 1, 1, 2).unwrap(), u(6));
        assert_eq!(triangle_solutions(&s3_data(), 1, 1, 1).unwrap(), u(0));
        assert_eq!(triangle_solutions(&s3_data(), 2, 2, 2).unwrap(), u(2));
    }

    #[test]
    fn bad_character_data_is_flagged() {
        let rows = vec![vec![char_value(1, 0), char_value(1, 0)], vec![char_value(1, 0), char_value(0, 1)]];
        let data = ClassData::new(vec![u(1), u(1)], rows, u(2)).unwrap();
        assert!(matches!(triangle_solutions(&data, 1, 1, 1), Err(Error::IntegralityViolation(_))));
        assert!(ClassData::new(vec![u(1), u(2)], vec![], u(2)).is_err());
    }

    #[test]
    fn surface_counts_small_groups() {
        let trivial = [(u(1), u(1))];
        for g in 0..5 {
            assert_eq!(surface_hom_count(&trivial, &u(1), g).unwrap(), u(1));
        }
        for g in 1..6u32 {
            assert_eq!(surface_hom_count(&[(u(1), u(2))], &u(2), g).unwrap(), u(1) << (2 * g));
        }
        // S3 at g = 1: commuting pairs = 6 * 3.
        let s3 = [(u(1), u(2)), (u(2), u(1))];
        assert_eq!(surface_hom_count(&s3, &u(6), 1).unwrap(), u(18));
        assert!(matches!(surface_hom_count(&s3, &u(7), 1), Err(Error::DegreeSumMismatch { .. })));
    }

    #[test]
    fn nonorientable_counts_small_groups() {
        let c2 = [RealityData { degree: u(1), indicator: 1, multiplicity: u(2) }];
        assert_eq!(nonorientable_hom_count(&c2, &u(2), 1).unwrap(), u(2));
        let s3 = [
            RealityData { degree: u(1), indicator: 1, multiplicity: u(2) },
            RealityData { degree: u(2), indicator: 1, multiplicity: u(1) },
        ];
        assert_eq!(nonorientable_hom_count(&s3, &u(6), 1).unwrap(), u(4));
        assert_eq!(nonorientable_hom_count(&s3, &u(6), 2).unwrap(), u(18));
        assert_eq!(nonorientable_hom_count(&s3, &u(6), 0), Err(Error::InvalidGenus(0)));
    }

    #[test]
    fn free_and_free_product_counts() {
        assert_eq!(hom_count_free(2, &u(29120)), u(29120 * 29120));
        assert_eq!(hom_count_free(2, &u(1)), u(1));
        assert_eq!(hom_count_free(1, &u(17)), u(17));
        assert_eq!(smooth_hom_c2_c2_c2(&u(455)), u(455 * 455 * 455));
        assert_eq!(smooth_hom_c2_c2_c2(&u(0)), u(0));
        assert_eq!(smooth_hom_cinf_c2(&u(29120), &u(455)), u(29120 * 455));
        assert_eq!(smooth_hom_ck_c2(&u(5824), &u(455)), u(5824 * 455));
    }

    #[test]
    fn inversion_of_constant_function_vanishes() {
        for e in (3..=15).step_by(2) {
            let rows = mobius_rows(e).unwrap();
            let aut = suzuki_orders(e).unwrap().group_order * e;
            assert_eq!(mobius_invert(&rows, |_| Ok(u(1)), &aut).unwrap(), u(0));
        }
    }

    #[test]
    fn inversion_flags_bad_inputs() {
        let rows = mobius_rows(3).unwrap();
        let aut = u(3 * 29120);
        // |H| is |Hom(Z, H)|, and Sz(8) is not cyclic.
        assert_eq!(mobius_invert(&rows, |r| Ok(r.order.clone()), &aut).unwrap(), u(0));
        // A function supported on the trivial subgroup alone is inconsistent.
        let only_identity = |r: &SubgroupClassRecord| Ok(if r.order == u(1) { u(1) } else { u(0) });
        assert!(matches!(mobius_invert(&rows, only_identity, &aut), Err(Error::IntegralityViolation(_))));
        let only_identity = |r: &SubgroupClassRecord| Ok(if r.order == u(1) { u(3) } else { u(0) });
        assert!(matches!(mobius_invert(&rows, only_identity, &aut), Err(Error::NegativeCount(_))));
    }
}
