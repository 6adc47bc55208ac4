//! Brute-force ground truth. Small matrix groups (G(1), Sz(8), S3) are
//! materialized element by element so that class structure, subgroup orders
//! and triple counts can be checked against the formula-driven layers.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use crate::arith::Count;
use crate::census::{count_orientable_coverings, regular_map_type_census, sz8_coverings_closed_form, TypeCensus};
use crate::counting::{
    char_value, nonorientable_hom_count, surface_hom_count, triangle_solutions, ClassData, RealityData,
};
use crate::error::{Error, Result};
use crate::field::{FieldContext, FieldElement};
use crate::group::{GroupMatrix, Suzuki};
use crate::tables::{character_degrees, element_counts, mobius_rows, ClassLabel};

/// Largest exponent whose Suzuki group is materialized.
pub const ORACLE_MAX_E: u32 = 3;

/// Groups above this order are not handed to the quadratic brute-force counts.
const BRUTE_FORCE_MAX_ORDER: usize = 5000;

/// A finite matrix group held as an explicit element list.
#[derive(Debug, Clone)]
pub struct ConcreteGroup {
    field: FieldContext,
    elements: Vec<GroupMatrix>,
    index: HashMap<u128, usize>,
    generators: Vec<usize>,
    orders: Vec<u64>,
    inverses: Vec<usize>,
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
    /// A subgroup with more elements than this is the whole group.
    generation_bound: usize,
}

/// Breadth-first closure of `generators` under right multiplication. Index 0
/// is the identity.
pub fn closure(field: &FieldContext, generators: &[GroupMatrix], limit: usize) -> Result<ConcreteGroup> {
    let degree = field.degree();
    let mut elements = vec![GroupMatrix::identity()];
    let mut index = HashMap::new();
    index.insert(GroupMatrix::identity().encode(degree)?, 0);
    let mut gens = Vec::new();
    for g in generators {
        if g.inverse(field).is_none() {
            return Err(Error::InvalidInput("generator is not invertible".into()));
        }
        gens.push(*g);
    }
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for g in &gens {
            let y = elements[i].mul(g, field);
            let key = y.encode(degree)?;
            if let std::collections::hash_map::Entry::Vacant(e) = index.entry(key) {
                if elements.len() == limit {
                    return Err(Error::LimitExceeded(limit));
                }
                e.insert(elements.len());
                queue.push_back(elements.len());
                elements.push(y);
            }
        }
    }
    let generators = gens.iter().map(|g| index[&g.encode(degree).unwrap()]).collect();
    let n = elements.len();
    let mut group = ConcreteGroup {
        field: field.clone(),
        elements,
        index,
        generators,
        orders: Vec::new(),
        inverses: Vec::new(),
        classes: Vec::new(),
        class_of: Vec::new(),
        generation_bound: n / 2,
    };
    group.fill_orders_and_inverses();
    group.fill_classes();
    Ok(group)
}

impl ConcreteGroup {
    /// Sz(2^e) from its standard generators, for `e <= ORACLE_MAX_E`. For
    /// `e = 1` this is G(1), of order 20.
    pub fn suzuki(e: u32) -> Result<ConcreteGroup> {
        if e > ORACLE_MAX_E {
            return Err(Error::UnsupportedExponent { e, max: ORACLE_MAX_E });
        }
        let sz = Suzuki::new(e)?;
        let order = sz.orders().group_order.to_usize().unwrap();
        let mut g = closure(sz.field(), &sz.generators(), order)?;
        if e > 1 {
            // The largest proper subgroup is a point stabiliser, of order q^2 (q - 1).
            let q = sz.q() as usize;
            g.generation_bound = q * q * (q - 1);
        }
        Ok(g)
    }

    /// S3 as 4x4 permutation matrices over GF(2) fixing the last point.
    pub fn symmetric3() -> ConcreteGroup {
        let f = FieldContext::binary(1).unwrap();
        let gens = [GroupMatrix::permutation([1, 0, 2, 3]), GroupMatrix::permutation([1, 2, 0, 3])];
        closure(&f, &gens, 6).unwrap()
    }

    fn fill_orders_and_inverses(&mut self) {
        let f = &self.field;
        let n = self.elements.len();
        let mut orders = Vec::with_capacity(n);
        let mut inverses = Vec::with_capacity(n);
        for x in &self.elements {
            let mut y = *x;
            let mut k = 1;
            while !y.is_identity() {
                y = y.mul(x, f);
                k += 1;
            }
            orders.push(k);
            let inv = x.inverse(f).expect("group elements are invertible");
            inverses.push(self.index[&inv.encode(f.degree()).unwrap()]);
        }
        self.orders = orders;
        self.inverses = inverses;
    }

    fn fill_classes(&mut self) {
        let n = self.elements.len();
        let mut class_of = vec![usize::MAX; n];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for start in 0..n {
            if class_of[start] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let mut members = vec![start];
            class_of[start] = id;
            let mut k = 0;
            while k < members.len() {
                let x = members[k];
                for &g in &self.generators {
                    let y = self.conjugate(g, x);
                    if class_of[y] == usize::MAX {
                        class_of[y] = id;
                        members.push(y);
                    }
                }
                k += 1;
            }
            members.sort_unstable();
            classes.push(members);
        }
        classes.sort_by_key(|c| (self.orders[c[0]], c.len(), c[0]));
        for (id, c) in classes.iter().enumerate() {
            for &x in c {
                class_of[x] = id;
            }
        }
        self.classes = classes;
        self.class_of = class_of;
    }

    pub fn field(&self) -> &FieldContext {
        &self.field
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn element(&self, i: usize) -> &GroupMatrix {
        &self.elements[i]
    }

    pub fn elements(&self) -> &[GroupMatrix] {
        &self.elements
    }

    pub fn index_of(&self, m: &GroupMatrix) -> Option<usize> {
        self.index.get(&m.encode(self.field.degree()).ok()?).copied()
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        let p = self.elements[i].mul(&self.elements[j], &self.field);
        self.index[&p.encode(self.field.degree()).unwrap()]
    }

    pub fn inverse(&self, i: usize) -> usize {
        self.inverses[i]
    }

    /// `g x g^-1`.
    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inverses[g])
    }

    pub fn order_of(&self, i: usize) -> u64 {
        self.orders[i]
    }

    /// Conjugacy classes sorted by (element order, size, smallest index).
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_of(&self, i: usize) -> usize {
        self.class_of[i]
    }

    pub fn generation_bound(&self) -> usize {
        self.generation_bound
    }

    pub fn order_histogram(&self) -> BTreeMap<u64, Count> {
        let mut h = BTreeMap::new();
        for &o in &self.orders {
            *h.entry(o).or_insert_with(Count::zero) += 1u32;
        }
        h
    }

    pub fn elements_of_order(&self, k: u64) -> Vec<usize> {
        (0..self.order()).filter(|&i| self.orders[i] == k).collect()
    }

    /// Indices of the classes whose elements have order `k`.
    pub fn classes_of_order(&self, k: u64) -> Vec<usize> {
        (0..self.classes.len()).filter(|&c| self.orders[self.classes[c][0]] == k).collect()
    }

    /// The subgroup generated by `gens`, as sorted indices.
    pub fn span(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = HashSet::from([0usize]);
        let mut out = vec![0usize];
        let mut k = 0;
        while k < out.len() {
            let x = out[k];
            for &g in gens {
                let y = self.mul(x, g);
                if seen.insert(y) {
                    out.push(y);
                }
            }
            k += 1;
        }
        out.sort_unstable();
        out
    }

    /// Whether `gens` generate the whole group. Stops as soon as the partial
    /// closure is larger than any proper subgroup.
    pub fn generates(&self, gens: &[usize]) -> bool {
        let mut seen = HashSet::from([0usize]);
        let mut queue = vec![0usize];
        let mut k = 0;
        while k < queue.len() {
            let x = queue[k];
            for &g in gens {
                let y = self.mul(x, g);
                if seen.insert(y) {
                    if seen.len() > self.generation_bound {
                        return true;
                    }
                    queue.push(y);
                }
            }
            k += 1;
        }
        seen.len() == self.order()
    }

    pub fn centralizer_order(&self, x: usize) -> usize {
        (0..self.order()).into_par_iter().filter(|&y| self.mul(x, y) == self.mul(y, x)).count()
    }

    /// Number of commuting ordered pairs, from a centraliser scan per class.
    pub fn commuting_pairs(&self) -> Count {
        self.classes
            .iter()
            .map(|c| Count::from(c.len()) * Count::from(self.centralizer_order(c[0])))
            .sum()
    }

    /// Elements normalising the subgroup generated by `gens`.
    pub fn normalizer(&self, gens: &[usize]) -> Vec<usize> {
        let h: HashSet<usize> = self.span(gens).into_iter().collect();
        (0..self.order())
            .into_par_iter()
            .filter(|&g| gens.iter().all(|&x| h.contains(&self.conjugate(g, x))))
            .collect()
    }

    /// Number of distinct conjugates of the subgroup generated by `gens`.
    pub fn count_conjugate_subgroups(&self, gens: &[usize]) -> usize {
        let h = self.span(gens);
        let conjugates: HashSet<Vec<usize>> = (0..self.order())
            .into_par_iter()
            .map(|g| {
                let mut c: Vec<usize> = h.iter().map(|&x| self.conjugate(g, x)).collect();
                c.sort_unstable();
                c
            })
            .collect();
        conjugates.len()
    }

    /// The subgroup generated by `gens` as a group in its own right.
    pub fn subgroup(&self, gens: &[usize]) -> Result<ConcreteGroup> {
        let mats: Vec<GroupMatrix> = gens.iter().map(|&i| self.elements[i]).collect();
        closure(&self.field, &mats, self.order())
    }

    fn check_brute_force_size(&self) -> Result<()> {
        if self.order() > BRUTE_FORCE_MAX_ORDER {
            return Err(Error::InvalidInput(format!(
                "group of order {} is too large for quadratic brute force",
                self.order()
            )));
        }
        Ok(())
    }

    /// Distribution of `x -> #{(a, b) : [a, b] = x}`.
    fn commutator_distribution(&self) -> Vec<Count> {
        let n = self.order();
        let mut d = vec![Count::zero(); n];
        for a in 0..n {
            for b in 0..n {
                let c = self.mul(self.mul(a, b), self.mul(self.inverses[a], self.inverses[b]));
                d[c] += 1u32;
            }
        }
        d
    }

    fn square_distribution(&self) -> Vec<Count> {
        let mut d = vec![Count::zero(); self.order()];
        for a in 0..self.order() {
            d[self.mul(a, a)] += 1u32;
        }
        d
    }

    /// Number of ways to reach the identity as a product of `k` factors drawn
    /// with weights `step`.
    fn walk_to_identity(&self, step: &[Count], k: u32) -> Count {
        let n = self.order();
        let mut dist = vec![Count::zero(); n];
        dist[0] = Count::from(1u32);
        for _ in 0..k {
            let mut next = vec![Count::zero(); n];
            for x in 0..n {
                if dist[x].is_zero() {
                    continue;
                }
                for s in 0..n {
                    if !step[s].is_zero() {
                        next[self.mul(x, s)] += &dist[x] * &step[s];
                    }
                }
            }
            dist = next;
        }
        dist[0].clone()
    }

    /// Brute-force `#{(a1, b1, ..., ag, bg) : prod [ai, bi] = 1}`.
    pub fn surface_relation_solutions(&self, g: u32) -> Result<Count> {
        self.check_brute_force_size()?;
        Ok(self.walk_to_identity(&self.commutator_distribution(), g))
    }

    /// Brute-force `#{(a1, ..., ag) : a1^2 ... ag^2 = 1}`.
    pub fn square_product_solutions(&self, g: u32) -> Result<Count> {
        self.check_brute_force_size()?;
        Ok(self.walk_to_identity(&self.square_distribution(), g))
    }
}

/// Solutions of `x1 x2 x3 = 1` with `xk` in class `ck`, by enumeration.
pub fn triangle_solutions_direct(g: &ConcreteGroup, c1: usize, c2: usize, c3: usize) -> Count {
    let (a, b) = (&g.classes[c1], &g.classes[c2]);
    let n: usize = a
        .par_iter()
        .map(|&x| b.iter().filter(|&&y| g.class_of(g.inverse(g.mul(x, y))) == c3).count())
        .sum();
    Count::from(n)
}

/// Triples with `x1 x2 x3 = 1` and `xk` of order `mk`, optionally only those
/// generating the group. One representative per class of `x1` is enumerated
/// and weighted by the class size.
pub fn triple_count_direct(g: &ConcreteGroup, orders: (u64, u64, u64), generating_only: bool) -> Count {
    let (m1, m2, m3) = orders;
    let second = g.elements_of_order(m2);
    g.classes_of_order(m1)
        .into_iter()
        .map(|c| {
            let x = g.classes[c][0];
            let hits = second
                .par_iter()
                .filter(|&&y| {
                    g.order_of(g.mul(x, y)) == m3 && (!generating_only || g.generates(&[x, y]))
                })
                .count();
            Count::from(g.classes[c].len()) * Count::from(hits)
        })
        .sum()
}

fn divide_cells(raw: BTreeMap<(u64, u64), Count>, axis: Vec<u64>, aut_order: &Count) -> Result<TypeCensus> {
    let mut census = TypeCensus::new(axis);
    for ((m, n), c) in raw {
        if !(&c % aut_order).is_zero() {
            return Err(Error::IntegralityViolation(format!(
                "{c} generating tuples of type {{{m},{n}}} are not a multiple of {aut_order}"
            )));
        }
        census.add(m, n, c / aut_order)?;
    }
    Ok(census)
}

fn type_axis_of(g: &ConcreteGroup) -> Vec<u64> {
    let mut axis: Vec<u64> = g.classes.iter().map(|c| g.order_of(c[0])).filter(|&o| o > 2).collect();
    axis.dedup();
    axis
}

/// Oriented regular maps by type `{m, n}`: generating pairs `(x, y)` with `x`
/// of order `m`, `y` an involution and `xy` of order `n`, counted up to
/// automorphisms.
pub fn oriented_type_census(g: &ConcreteGroup, aut_order: &Count) -> Result<TypeCensus> {
    let axis = type_axis_of(g);
    let involutions = g.elements_of_order(2);
    let mut raw: BTreeMap<(u64, u64), Count> = BTreeMap::new();
    for (c, class) in g.classes.iter().enumerate() {
        let m = g.order_of(class[0]);
        if !axis.contains(&m) {
            continue;
        }
        let x = class[0];
        let hits: Vec<u64> = involutions
            .par_iter()
            .filter(|&&y| g.generates(&[x, y]))
            .map(|&y| g.order_of(g.mul(x, y)))
            .collect();
        for n in hits {
            *raw.entry((m, n)).or_insert_with(Count::zero) += g.classes[c].len();
        }
    }
    divide_cells(raw, axis, aut_order)
}

/// Regular maps by type: generating triples of involutions `(r0, r1, r2)`
/// with `r0 != r2` commuting, typed by the orders of `r0 r1` and `r1 r2`.
pub fn regular_type_census_direct(g: &ConcreteGroup, aut_order: &Count) -> Result<TypeCensus> {
    let axis = type_axis_of(g);
    let involutions = g.elements_of_order(2);
    let mut raw: BTreeMap<(u64, u64), Count> = BTreeMap::new();
    for c in g.classes_of_order(2) {
        let r0 = g.classes[c][0];
        let partners: Vec<usize> =
            involutions.iter().copied().filter(|&r2| r2 != r0 && g.mul(r0, r2) == g.mul(r2, r0)).collect();
        let hits: Vec<(u64, u64)> = partners
            .iter()
            .flat_map(|&r2| involutions.iter().map(move |&r1| (r1, r2)))
            .collect::<Vec<_>>()
            .into_par_iter()
            .filter(|&(r1, r2)| g.generates(&[r0, r1, r2]))
            .map(|(r1, r2)| (g.order_of(g.mul(r0, r1)), g.order_of(g.mul(r1, r2))))
            .collect();
        for key in hits {
            *raw.entry(key).or_insert_with(Count::zero) += g.classes[c].len();
        }
    }
    divide_cells(raw, axis, aut_order)
}

/// Known counts of oriented regular maps of Sz(8) by type.
pub fn sz8_oriented_type_reference() -> TypeCensus {
    let axis = [4u64, 5, 7, 13];
    let rows: [[u64; 4]; 4] = [[0, 4, 8, 4], [4, 4, 13, 9], [8, 13, 26, 15], [4, 9, 15, 6]];
    let mut cells = Vec::new();
    for (i, &m) in axis.iter().enumerate() {
        for (j, &n) in axis.iter().enumerate() {
            if rows[i][j] > 0 {
                cells.push(((m, n), rows[i][j]));
            }
        }
    }
    TypeCensus::from_cells(axis.to_vec(), &cells).unwrap()
}

/// Known counts of regular maps of Sz(8) by type.
pub fn sz8_regular_type_reference() -> TypeCensus {
    let cells = [((5, 7), 1), ((7, 5), 1), ((5, 13), 1), ((13, 5), 1), ((7, 7), 2), ((7, 13), 3), ((13, 7), 3), ((13, 13), 2)];
    TypeCensus::from_cells(vec![4, 5, 7, 13], &cells).unwrap()
}

/// Character table of S3; classes ordered as in [`ConcreteGroup::symmetric3`].
pub fn s3_class_data() -> ClassData {
    let c = |v: i64| char_value(v, 0);
    let sizes = [1u32, 3, 2].map(Count::from).to_vec();
    let chars = vec![vec![c(1), c(1), c(1)], vec![c(1), c(-1), c(1)], vec![c(2), c(0), c(-1)]];
    ClassData::new(sizes, chars, Count::from(6u32)).unwrap()
}

pub fn s3_reality_data() -> Vec<RealityData> {
    [1u32, 1, 2]
        .into_iter()
        .map(|d| RealityData { degree: Count::from(d), indicator: 1, multiplicity: Count::from(1u32) })
        .collect()
}

/// Character table of G(1) = AGL1(5); classes ordered as in
/// `ConcreteGroup::suzuki(1)`: identity, involutions, the two classes of
/// order 4, order 5. Relabelling the order-4 classes conjugates the table.
pub fn agl15_class_data() -> ClassData {
    let c = char_value;
    let sizes = [1u32, 5, 5, 5, 4].map(Count::from).to_vec();
    let chars = vec![
        vec![c(1, 0), c(1, 0), c(1, 0), c(1, 0), c(1, 0)],
        vec![c(1, 0), c(-1, 0), c(0, 1), c(0, -1), c(1, 0)],
        vec![c(1, 0), c(1, 0), c(-1, 0), c(-1, 0), c(1, 0)],
        vec![c(1, 0), c(-1, 0), c(0, -1), c(0, 1), c(1, 0)],
        vec![c(4, 0), c(0, 0), c(0, 0), c(0, 0), c(-1, 0)],
    ];
    ClassData::new(sizes, chars, Count::from(20u32)).unwrap()
}

fn degree_pairs(data: &ClassData) -> Vec<(Count, Count)> {
    data.degrees.iter().map(|d| (d.clone(), Count::from(1u32))).collect()
}

/// Outcome of one named comparison.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub suite: Suite,
    pub e: u32,
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    fn new(suite: Suite, e: u32) -> Self {
        VerificationReport { suite, e, checks: Vec::new() }
    }

    fn check<T: ToString>(&mut self, name: impl Into<String>, expected: T, actual: T) {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        let passed = expected == actual;
        self.checks.push(CheckResult { name: name.into(), expected, actual, passed });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&CheckResult> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }

    /// `Err(VerificationFailure)` naming the first failing check.
    pub fn into_result(self) -> Result<Self> {
        if let Some(c) = self.checks.iter().find(|c| !c.passed) {
            return Err(Error::VerificationFailure(format!(
                "{}: expected {}, got {}",
                c.name, c.expected, c.actual
            )));
        }
        Ok(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Tables,
    Triples,
    TypeTable,
    CoveringsDegreeCheck,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::Tables, Suite::Triples, Suite::TypeTable, Suite::CoveringsDegreeCheck];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Tables => "tables",
            Suite::Triples => "triples",
            Suite::TypeTable => "type-table",
            Suite::CoveringsDegreeCheck => "coverings-degree-check",
        }
    }
}

/// Runs a verification suite at `e` (1 or 3).
pub fn run_suite(suite: Suite, e: u32) -> Result<VerificationReport> {
    if e != 1 && e != 3 {
        return Err(Error::UnsupportedExponent { e, max: ORACLE_MAX_E });
    }
    let g = ConcreteGroup::suzuki(e)?;
    match suite {
        Suite::Tables => verify_tables(&g, e),
        Suite::Triples => verify_triples(&g, e),
        Suite::TypeTable => verify_type_table(&g, e),
        Suite::CoveringsDegreeCheck => verify_coverings_degrees(&g, e),
    }
}

fn histogram_string(h: &BTreeMap<u64, Count>) -> String {
    h.iter().map(|(k, v)| format!("{k}:{v}")).collect::<Vec<_>>().join(",")
}

/// Checks on the inversion-split classes of order 4: exactly two, swapped by
/// inversion.
fn order4_split(g: &ConcreteGroup, r: &mut VerificationReport) {
    let classes = g.classes_of_order(4);
    r.check("classes of order 4", 2, classes.len());
    if classes.len() == 2 {
        let x = g.classes[classes[0]][0];
        r.check("inverse of an order-4 element lies in the other class", classes[1], g.class_of(g.inverse(x)));
    }
}

/// Structural checks of the materialized group against the table formulas.
pub fn verify_tables(g: &ConcreteGroup, e: u32) -> Result<VerificationReport> {
    let mut r = VerificationReport::new(Suite::Tables, e);
    let sz = Suzuki::new(e)?;
    r.check("group order", sz.orders().group_order.to_string(), g.order().to_string());
    r.check("involution classes", 1, g.classes_of_order(2).len());
    order4_split(g, &mut r);
    if e == 1 {
        r.check("order histogram", "1:1,2:5,4:10,5:4".to_string(), histogram_string(&g.order_histogram()));
        r.check("conjugacy classes", 5, g.classes().len());
        return Ok(r);
    }

    let rows = mobius_rows(e)?;
    let top = rows.iter().find(|row| row.label == ClassLabel::G && row.f == e).unwrap();
    let hist = g.order_histogram();
    for k in [2u32, 4, 5] {
        let actual = hist.get(&(k as u64)).cloned().unwrap_or_default();
        r.check(format!("elements of order {k}"), element_counts(top, k)?, actual);
    }
    let q = sz.q();
    let allowed: Vec<u64> = [4, q - 1, sz.orders().a1.to_u64().unwrap(), sz.orders().a2.to_u64().unwrap()].to_vec();
    let stray: Vec<u64> = hist.keys().copied().filter(|o| allowed.iter().all(|a| a % o != 0)).collect();
    r.check("orders outside divisors of 4, q-1, a1, a2", String::new(), format!("{stray:?}").replace("[]", ""));
    r.check("conjugacy classes", character_degrees(top).num_characters().to_string(), g.classes().len().to_string());
    let sum: usize = g.classes().iter().map(|c| c.len()).sum();
    r.check("class sizes sum", g.order(), sum);
    r.check("class sizes divide the group order", true, g.classes().iter().all(|c| g.order().is_multiple_of(c.len())));

    let idx = |m: &GroupMatrix| g.index_of(m).expect("element of the group");
    let qgens: Vec<usize> = sz.q_generators().iter().map(idx).collect();
    r.check("|Q|", q * q, g.span(&qgens).len() as u64);
    r.check("Sylow 2-subgroups", q * q + 1, g.count_conjugate_subgroups(&qgens) as u64);

    let torus = idx(&sz.torus_element(sz.field().primitive_element())?);
    r.check("|A0|", q - 1, g.span(&[torus]).len() as u64);
    r.check("|N(A0)|", 2 * (q - 1), g.normalizer(&[torus]).len() as u64);
    for (name, a) in [("a1", &sz.orders().a1), ("a2", &sz.orders().a2)] {
        let a = a.to_u64().unwrap();
        let x = g.elements_of_order(a)[0];
        r.check(format!("|N(cyclic of order {name})|"), 4 * a, g.normalizer(&[x]).len() as u64);
    }
    let mut fgens = qgens.clone();
    fgens.push(torus);
    r.check("|F|", q * q * (q - 1), g.span(&fgens).len() as u64);
    Ok(r)
}

/// Triple counts: character formula against enumeration on the small groups,
/// and the (5,5,5) census in Sz(8).
pub fn verify_triples(g: &ConcreteGroup, e: u32) -> Result<VerificationReport> {
    let mut r = VerificationReport::new(Suite::Triples, e);
    if e == 1 {
        let s3 = ConcreteGroup::symmetric3();
        for (name, group, data) in [("S3", &s3, s3_class_data()), ("G(1)", g, agl15_class_data())] {
            let n = data.num_classes();
            r.check(format!("{name} class count"), n, group.classes().len());
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        r.check(
                            format!("{name} triangle ({i},{j},{k})"),
                            triangle_solutions(&data, i, j, k)?,
                            triangle_solutions_direct(group, i, j, k),
                        );
                    }
                }
            }
        }
        return Ok(r);
    }
    let aut = Count::from(g.order()) * e;
    let all = triple_count_direct(g, (5, 5, 5), false);
    let generating = triple_count_direct(g, (5, 5, 5), true);
    r.check("(5,5,5) triples", Count::from(64u32 * 3 * 7 * 13 * 331), all.clone());
    r.check("(5,5,5) non-generating triples", Count::from(64u32 * 3 * 7 * 13), &all - &generating);
    r.check("(5,5,5) generating triples / |Aut G|", Count::from(66u32), generating / &aut);
    Ok(r)
}

/// The oriented and regular type tables of Sz(8) from enumeration, against
/// the reference tables and the field-parametrized census.
pub fn verify_type_table(g: &ConcreteGroup, e: u32) -> Result<VerificationReport> {
    if e != 3 {
        return Err(Error::InvalidInput("the type tables are only materialized for e = 3".into()));
    }
    let mut r = VerificationReport::new(Suite::TypeTable, e);
    let aut = Count::from(g.order()) * e;
    let oriented = oriented_type_census(g, &aut)?;
    let reference = sz8_oriented_type_reference();
    for &m in reference.axis() {
        for &n in reference.axis() {
            r.check(format!("oriented {{{m},{n}}}"), reference.get(m, n), oriented.get(m, n));
        }
    }
    r.check("oriented axis", format!("{:?}", reference.axis()), format!("{:?}", oriented.axis()));
    r.check("oriented symmetric", true, oriented.is_symmetric());

    let regular = regular_type_census_direct(g, &aut)?;
    let parametrized = regular_map_type_census(e)?;
    let reference = sz8_regular_type_reference();
    for &m in reference.axis() {
        for &n in reference.axis() {
            r.check(format!("regular {{{m},{n}}} by enumeration"), reference.get(m, n), regular.get(m, n));
            r.check(format!("regular {{{m},{n}}} by field parameters"), reference.get(m, n), parametrized.get(m, n));
        }
    }

    // Pairs (b0, b2) generate the field iff (0, b0), (0, b2), tau generate G.
    let sz = Suzuki::new(e)?;
    let f = sz.field();
    let tau = g.index_of(&sz.tau()).unwrap();
    let mut disagreements = 0;
    for b0 in f.units() {
        for b2 in f.units().filter(|&b| b != b0) {
            let r0 = g.index_of(&sz.q_element(FieldElement::ZERO, b0)).unwrap();
            let r2 = g.index_of(&sz.q_element(FieldElement::ZERO, b2)).unwrap();
            if g.generates(&[r0, tau, r2]) != (f.subfield_level([b0, b2]) == e) {
                disagreements += 1;
            }
        }
    }
    r.check("generation criterion disagreements", 0, disagreements);
    Ok(r)
}

/// Character-degree rows against concrete subgroups, and covering counts
/// against brute force and the Sz(8) closed form.
pub fn verify_coverings_degrees(g: &ConcreteGroup, e: u32) -> Result<VerificationReport> {
    let mut r = VerificationReport::new(Suite::CoveringsDegreeCheck, e);
    if e == 1 {
        let s3 = ConcreteGroup::symmetric3();
        for (name, group, data) in [("S3", &s3, s3_class_data()), ("G(1)", g, agl15_class_data())] {
            let order = Count::from(group.order());
            let pairs = degree_pairs(&data);
            for genus in 1..=2 {
                r.check(
                    format!("{name} surface relation solutions, genus {genus}"),
                    surface_hom_count(&pairs, &order, genus)?,
                    group.surface_relation_solutions(genus)?,
                );
            }
            r.check(format!("{name} commuting pairs"), &order * data.num_classes(), group.commuting_pairs());
        }
        for genus in 1..=2 {
            r.check(
                format!("S3 square products, {genus} factors"),
                nonorientable_hom_count(&s3_reality_data(), &Count::from(6u32), genus)?,
                s3.square_product_solutions(genus)?,
            );
        }
        return Ok(r);
    }

    let sz = Suzuki::new(e)?;
    let idx = |m: &GroupMatrix| g.index_of(m).expect("element of the group");
    let torus = idx(&sz.torus_element(sz.field().primitive_element())?);
    let tau = idx(&sz.tau());
    let mut fgens: Vec<usize> = sz.q_generators().iter().map(idx).collect();
    fgens.push(torus);
    let generators_for = |label: ClassLabel| -> Vec<usize> {
        match label {
            ClassLabel::G => g.generators().to_vec(),
            ClassLabel::F => fgens.clone(),
            ClassLabel::B0 => vec![torus, tau],
            ClassLabel::A0 => vec![torus],
            ClassLabel::B1 => g.normalizer(&[g.elements_of_order(sz.orders().a1.to_u64().unwrap())[0]]),
            ClassLabel::B2 => g.normalizer(&[g.elements_of_order(sz.orders().a2.to_u64().unwrap())[0]]),
            ClassLabel::B2One => vec![g.elements_of_order(4)[0]],
            ClassLabel::B0One => vec![g.elements_of_order(2)[0]],
            ClassLabel::Identity => vec![],
        }
    };
    for row in mobius_rows(e)? {
        let spec = character_degrees(&row);
        let h = g.subgroup(&generators_for(row.label))?;
        r.check(format!("{} order", row.name()), row.order.clone(), Count::from(h.order()));
        r.check(format!("{} classes = characters", row.name()), spec.num_characters(), Count::from(h.classes().len()));
        r.check(format!("{} sum of squared degrees", row.name()), row.order.clone(), spec.sum_of_squares());
    }
    let top = mobius_rows(e)?.into_iter().find(|row| row.label == ClassLabel::G && row.f == e).unwrap();
    let order = Count::from(g.order());
    r.check(
        "commuting pairs = surface count at genus 1",
        surface_hom_count(&character_degrees(&top).degrees, &order, 1)?,
        g.commuting_pairs(),
    );
    r.check("commuting pairs = |G| * classes", &order * g.classes().len(), g.commuting_pairs());
    for genus in 1..=5 {
        r.check(
            format!("coverings at genus {genus}: inversion vs closed form"),
            sz8_coverings_closed_form(genus)?,
            count_orientable_coverings(e, genus)?,
        );
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    fn u(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn closure_sizes() {
        let f = FieldContext::new(3).unwrap();
        assert_eq!(closure(&f, &[GroupMatrix::identity()], 10).unwrap().order(), 1);
        let sz = Suzuki::new(3).unwrap();
        assert_eq!(closure(&f, &sz.q_generators(), 100).unwrap().order(), 64);
        assert_eq!(closure(&f, &sz.generators(), 1000).unwrap_err(), Error::LimitExceeded(1000));
        assert_eq!(ConcreteGroup::suzuki(5).unwrap_err(), Error::UnsupportedExponent { e: 5, max: 3 });
    }

    #[test]
    fn g1_structure() {
        let g = ConcreteGroup::suzuki(1).unwrap();
        assert_eq!(g.order(), 20);
        let h: Vec<(u64, u64)> = g.order_histogram().into_iter().map(|(k, v)| (k, v.to_u64().unwrap())).collect();
        assert_eq!(h, vec![(1, 1), (2, 5), (4, 10), (5, 4)]);
        let sizes: Vec<usize> = g.classes().iter().map(|c| c.len()).collect();
        assert_eq!(sizes, vec![1, 5, 5, 5, 4]);
        assert!(verify_tables(&g, 1).unwrap().passed());
    }

    #[test]
    fn s3_structure() {
        let s3 = ConcreteGroup::symmetric3();
        let sizes: Vec<usize> = s3.classes().iter().map(|c| c.len()).collect();
        assert_eq!(sizes, vec![1, 3, 2]);
        assert_eq!(s3.square_product_solutions(1).unwrap(), u(4));
        assert_eq!(s3.square_product_solutions(2).unwrap(), u(18));
        assert_eq!(s3.surface_relation_solutions(2).unwrap(), u(486));
    }

    #[test]
    fn fixtures_are_orthogonal() {
        for data in [s3_class_data(), agl15_class_data()] {
            let n = data.num_classes();
            for a in 0..n {
                for b in 0..n {
                    let mut sum = char_value(0, 0);
                    for c in 0..n {
                        let size = crate::arith::count_to_int(&data.class_sizes[c]);
                        let y = &data.char_values[b][c];
                        let term = &data.char_values[a][c] * y.conj();
                        sum += term.scale(crate::Ratio::from_integer(size));
                    }
                    let expected = if a == b { data.group_order.to_i64().unwrap() } else { 0 };
                    assert_eq!(sum, char_value(expected, 0));
                }
            }
        }
    }

    #[test]
    fn abelian_classes_are_singletons() {
        let sz = Suzuki::new(3).unwrap();
        let a0 = closure(sz.field(), &[sz.torus_element(sz.field().primitive_element()).unwrap()], 10).unwrap();
        assert_eq!(a0.order(), 7);
        assert!(a0.classes().iter().all(|c| c.len() == 1));
    }

    #[test]
    fn suites_at_e1() {
        for suite in [Suite::Tables, Suite::Triples, Suite::CoveringsDegreeCheck] {
            let report = run_suite(suite, 1).unwrap();
            assert!(report.passed(), "{:?}", report.failures());
        }
        assert!(run_suite(Suite::TypeTable, 1).is_err());
        assert!(run_suite(Suite::Tables, 5).is_err());
    }

    #[test]
    fn report_failure() {
        let mut r = VerificationReport::new(Suite::Tables, 3);
        r.check("a", 1, 1);
        r.check("b", 1, 2);
        assert_eq!(r.failures().len(), 1);
        assert_eq!(r.into_result().unwrap_err(), Error::VerificationFailure("b: expected 1, got 2".into()));
    }
}
