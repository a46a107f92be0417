//! Validates the Schur-basis ring against linear algebra in the polynomial
//! model: Q[e_1..e_k] modulo the ideal of vanishing quotient classes.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use flag::{gr_mul, partitions_in_box, GrElement, Partition};

/// Monomial in e_1..e_k as an exponent vector; weighted degree of e_i is i.
type Mono = Vec<u32>;

#[derive(Clone, Debug, Default, PartialEq)]
struct Poly(BTreeMap<Mono, BigRational>);

impl Poly {
    fn zero() -> Self {
        Poly(BTreeMap::new())
    }

    fn one(k: usize) -> Self {
        let mut p = Poly::zero();
        p.add(vec![0; k], BigRational::one());
        p
    }

    fn variable(k: usize, i: usize) -> Self {
        let mut mono = vec![0; k];
        mono[i - 1] = 1;
        let mut p = Poly::zero();
        p.add(mono, BigRational::one());
        p
    }

    fn add(&mut self, mono: Mono, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.0.entry(mono) {
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
        }
    }

    fn add_poly(&mut self, other: &Poly) {
        for (m, c) in &other.0 {
            self.add(m.clone(), c.clone());
        }
    }

    fn scaled(&self, c: &BigRational) -> Poly {
        let mut out = Poly::zero();
        for (m, v) in &self.0 {
            out.add(m.clone(), v * c);
        }
        out
    }

    fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (m1, c1) in &self.0 {
            for (m2, c2) in &other.0 {
                let mono: Mono = m1.iter().zip(m2).map(|(a, b)| a + b).collect();
                out.add(mono, c1 * c2);
            }
        }
        out
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn leading(&self) -> Option<(&Mono, &BigRational)> {
        self.0.last_key_value()
    }
}

fn weighted_degree(mono: &Mono) -> u32 {
    mono.iter()
        .enumerate()
        .map(|(i, &e)| (i as u32 + 1) * e)
        .sum()
}

/// The class y_d written in the subbundle generators via the Whitney
/// recursion y_d = -(e_1 y_(d-1) + e_2 y_(d-2) + ...).
fn y_poly(k: usize, d: u32) -> Poly {
    let mut table = vec![Poly::one(k)];
    for deg in 1..=d {
        let mut next = Poly::zero();
        for i in 1..=(deg.min(k as u32)) {
            let contribution = Poly::variable(k, i as usize).mul(&table[(deg - i) as usize]);
            next.add_poly(&contribution.scaled(&-BigRational::one()));
        }
        table.push(next);
    }
    table.pop().expect("table populated")
}

/// The Schur polynomial as a determinant in the subbundle generators.
fn schur_poly(k: usize, shape: &Partition) -> Poly {
    if shape.is_empty() {
        return Poly::one(k);
    }
    let conj = shape.conjugate();
    let r = conj.len();
    let mut out = Poly::zero();
    permute(r, &mut |perm, sign| {
        let mut prod = Poly::one(k);
        for (i, &p) in perm.iter().enumerate() {
            let idx = conj.part(i + 1) as i64 - (i as i64 + 1) + (p as i64 + 1);
            if idx < 0 || idx as usize > k {
                prod = Poly::zero();
                break;
            }
            if idx > 0 {
                prod = prod.mul(&Poly::variable(k, idx as usize));
            }
        }
        out.add_poly(&prod.scaled(&BigRational::from_integer(BigInt::from(sign))));
    });
    out
}

fn permute(r: usize, f: &mut impl FnMut(&[usize], i64)) {
    fn rec(slots: &mut Vec<usize>, used: &mut Vec<bool>, inv: usize, f: &mut impl FnMut(&[usize], i64)) {
        if slots.len() == used.len() {
            f(slots, if inv % 2 == 0 { 1 } else { -1 });
            return;
        }
        for v in 0..used.len() {
            if used[v] {
                continue;
            }
            let added = slots.iter().filter(|&&s| s > v).count();
            used[v] = true;
            slots.push(v);
            rec(slots, used, inv + added, f);
            slots.pop();
            used[v] = false;
        }
    }
    rec(&mut Vec::new(), &mut vec![false; r], 0, f);
}

fn monomials_of_degree(k: usize, d: u32) -> Vec<Mono> {
    fn rec(var: usize, k: usize, left: u32, current: &mut Mono, out: &mut Vec<Mono>) {
        if var == k {
            if left == 0 {
                out.push(current.clone());
            }
            return;
        }
        let weight = var as u32 + 1;
        for e in 0..=(left / weight) {
            current[var] = e;
            rec(var + 1, k, left - e * weight, current, out);
        }
        current[var] = 0;
    }
    let mut out = Vec::new();
    rec(0, k, d, &mut vec![0; k], &mut out);
    out
}

/// Row reduction modulo the homogeneous ideal (y_(N-k+1), ..., y_N), with a
/// pivot table per degree built from all monomial multiples of the
/// generators.
struct Reducer {
    k: usize,
    n: usize,
    generators: Vec<(u32, Poly)>,
    pivots: BTreeMap<u32, BTreeMap<Mono, Poly>>,
}

impl Reducer {
    fn new(k: usize, n: usize) -> Self {
        let generators = ((n - k + 1) as u32..=n as u32)
            .map(|d| (d, y_poly(k, d)))
            .collect();
        Reducer {
            k,
            n,
            pivots: BTreeMap::new(),
            generators,
        }
    }

    fn pivots_for(&mut self, degree: u32) -> &BTreeMap<Mono, Poly> {
        if !self.pivots.contains_key(&degree) {
            let mut table: BTreeMap<Mono, Poly> = BTreeMap::new();
            let rows: Vec<Poly> = self
                .generators
                .iter()
                .filter(|(d, _)| *d <= degree)
                .flat_map(|(d, g)| {
                    monomials_of_degree(self.k, degree - d)
                        .into_iter()
                        .map(|m| {
                            let mut shifted = Poly::zero();
                            for (mono, c) in &g.0 {
                                let lifted: Mono =
                                    mono.iter().zip(&m).map(|(a, b)| a + b).collect();
                                shifted.add(lifted, c.clone());
                            }
                            shifted
                        })
                        .collect::<Vec<_>>()
                })
                .collect();
            for row in rows {
                let row = reduce_against(&table, row);
                if let Some((lead, c)) = row.leading() {
                    let lead = lead.clone();
                    let inv = BigRational::one() / c.clone();
                    table.insert(lead, row.scaled(&inv));
                }
            }
            self.pivots.insert(degree, table);
        }
        &self.pivots[&degree]
    }

    /// Canonical representative modulo the ideal, degree by degree.
    fn reduce(&mut self, p: &Poly) -> Poly {
        let mut by_degree: BTreeMap<u32, Poly> = BTreeMap::new();
        for (m, c) in &p.0 {
            by_degree
                .entry(weighted_degree(m))
                .or_insert_with(Poly::zero)
                .add(m.clone(), c.clone());
        }
        let mut out = Poly::zero();
        for (d, component) in by_degree {
            let reduced = reduce_against(self.pivots_for(d), component);
            out.add_poly(&reduced);
        }
        out
    }

    /// Number of box partitions of each size, from the pivot count.
    fn quotient_dim(&mut self, degree: u32) -> usize {
        let total = monomials_of_degree(self.k, degree).len();
        total - self.pivots_for(degree).len()
    }
}

fn reduce_against(table: &BTreeMap<Mono, Poly>, mut p: Poly) -> Poly {
    loop {
        let hit = p
            .0
            .iter()
            .rev()
            .find(|(m, _)| table.contains_key(*m))
            .map(|(m, c)| (m.clone(), c.clone()));
        match hit {
            None => return p,
            Some((mono, c)) => {
                p.add_poly(&table[&mono].scaled(&-c));
            }
        }
    }
}

fn schur_coefficients(e: &GrElement) -> BTreeMap<Partition, BigRational> {
    e.terms().map(|(s, c)| (s.clone(), c.clone())).collect()
}

#[test]
fn quotient_dimensions_match_box_counts() {
    for (k, n) in [(1u32, 2u32), (1, 3), (2, 3), (2, 4), (2, 5), (3, 6)] {
        let mut reducer = Reducer::new(k as usize, n as usize);
        let shapes = partitions_in_box(k, n - k);
        let top = k * (n - k);
        for d in 0..=(top + 2) {
            let expected = shapes.iter().filter(|s| s.size() == d).count();
            assert_eq!(
                reducer.quotient_dim(d),
                expected,
                "degree {d} in Gr({k},{n})"
            );
        }
    }
}

#[test]
fn schur_classes_reduce_independently() {
    // The reduced forms of the box Schur polynomials have full rank, so they
    // are a basis of the quotient and coefficient comparisons are faithful.
    for (k, n) in [(2u32, 4u32), (2, 5), (3, 6)] {
        let mut reducer = Reducer::new(k as usize, n as usize);
        let shapes = partitions_in_box(k, n - k);
        for d in 0..=k * (n - k) {
            let mut table: BTreeMap<Mono, Poly> = BTreeMap::new();
            let mut rank = 0usize;
            for shape in shapes.iter().filter(|s| s.size() == d) {
                let reduced = reducer.reduce(&schur_poly(k as usize, shape));
                let reduced = reduce_against(&table, reduced);
                let Some((lead, c)) = reduced.leading() else {
                    panic!("Schur class {shape} reduced to zero in Gr({k},{n})");
                };
                let lead = lead.clone();
                let inv = BigRational::one() / c.clone();
                table.insert(lead, reduced.scaled(&inv));
                rank += 1;
            }
            let expected = shapes.iter().filter(|s| s.size() == d).count();
            assert_eq!(rank, expected, "degree {d} in Gr({k},{n})");
        }
    }
}

#[test]
fn products_match_polynomial_arithmetic() {
    for (k, n) in [(1u32, 2u32), (2, 3), (2, 4), (3, 6)] {
        let mut reducer = Reducer::new(k as usize, n as usize);
        let shapes = partitions_in_box(k, n - k);
        for left in &shapes {
            for right in &shapes {
                let a = GrElement::schur(k, n, left.clone());
                let b = GrElement::schur(k, n, right.clone());
                let product = gr_mul(&a, &b);
                let mut rhs = Poly::zero();
                for (shape, c) in schur_coefficients(&product) {
                    rhs.add_poly(&schur_poly(k as usize, &shape).scaled(&c));
                }
                let lhs = schur_poly(k as usize, left).mul(&schur_poly(k as usize, right));
                let mut difference = lhs;
                difference.add_poly(&rhs.scaled(&-BigRational::one()));
                assert!(
                    reducer.reduce(&difference).is_zero(),
                    "{left} * {right} in Gr({k},{n})"
                );
            }
        }
    }
}

#[test]
fn census_counts_box_partitions() {
    for (k, n) in [(2u32, 4u32), (3, 6)] {
        let census = flag::graded_census(k, n);
        let shapes = partitions_in_box(k, n - k);
        for d in 0..=k * (n - k) {
            let expected = shapes.iter().filter(|s| s.size() == d).count();
            assert_eq!(
                census.coeff(2 * d as i64),
                num_bigint::BigInt::from(expected),
                "degree {d}"
            );
        }
    }
}
