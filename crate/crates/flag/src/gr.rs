//! The cohomology ring of the Grassmannian Gr(k, N) in its Schur basis.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use qring::LaurentPoly;

use crate::partition::{partitions_in_box, Partition};
use crate::FlagError;

/// A multiplicative generator of the ring: `X(j)` is the j-th Chern class of
/// the tautological subbundle, `Y(l)` the l-th class of the quotient bundle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Gen {
    X(u32),
    Y(u32),
}

/// An element of H*(Gr(k, N)) written in the Schur basis.
///
/// The basis is indexed by partitions inside the k x (N - k) box; products
/// are computed by Pieri rules with shapes leaving the box discarded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrElement {
    k: u32,
    n: u32,
    terms: BTreeMap<Partition, BigRational>,
}

impl GrElement {
    pub fn zero(k: u32, n: u32) -> Self {
        assert!(k <= n, "subspace dimension exceeds ambient dimension");
        GrElement {
            k,
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(k: u32, n: u32) -> Self {
        Self::schur(k, n, Partition::empty())
    }

    /// The Schur class of a partition, zero when it leaves the box.
    pub fn schur(k: u32, n: u32, shape: Partition) -> Self {
        let mut e = Self::zero(k, n);
        if shape.fits_in_box(k, n - k) {
            e.terms.insert(shape, BigRational::one());
        }
        e
    }

    pub fn from_terms<I>(k: u32, n: u32, terms: I) -> Self
    where
        I: IntoIterator<Item = (Partition, BigRational)>,
    {
        let mut e = Self::zero(k, n);
        for (shape, c) in terms {
            e.insert(shape, c);
        }
        e
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Ambient dimension N.
    pub fn ambient(&self) -> u32 {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Partition::empty())
                .is_some_and(|c| c.is_one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, shape: &Partition) -> BigRational {
        self.terms.get(shape).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn scaled(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.k, self.n);
        }
        let terms = self
            .terms
            .iter()
            .map(|(shape, v)| (shape.clone(), v * c))
            .collect();
        GrElement {
            k: self.k,
            n: self.n,
            terms,
        }
    }

    /// Cohomological degree when homogeneous (each box counts 2), `None` for
    /// the zero element or a mixed-degree sum.
    pub fn homogeneous_degree(&self) -> Option<i64> {
        let mut degrees = self.terms.keys().map(|shape| 2 * shape.size() as i64);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    fn insert(&mut self, shape: Partition, c: BigRational) {
        if c.is_zero() || !shape.fits_in_box(self.k, self.n - self.k) {
            return;
        }
        match self.terms.entry(shape) {
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

    /// Multiplies by a single generator via the Pieri rule: `X(j)` adds a
    /// vertical strip of j boxes, `Y(l)` adds a horizontal strip of l boxes
    /// with sign (-1)^l.
    pub fn mul_gen(&self, gen: Gen) -> Self {
        let (k, n) = (self.k, self.n);
        let cols = n - k;
        let mut out = Self::zero(k, n);
        match gen {
            Gen::X(0) | Gen::Y(0) => return self.clone(),
            Gen::X(j) => {
                for (shape, c) in &self.terms {
                    for grown in shape.add_vertical_strip(j, k, cols) {
                        out.insert(grown, c.clone());
                    }
                }
            }
            Gen::Y(l) => {
                let sign = if l % 2 == 0 {
                    BigRational::one()
                } else {
                    -BigRational::one()
                };
                for (shape, c) in &self.terms {
                    for grown in shape.add_horizontal_strip(l, k, cols) {
                        out.insert(grown, c * &sign);
                    }
                }
            }
        }
        out
    }

    pub fn mul_x(&self, j: u32) -> Self {
        self.mul_gen(Gen::X(j))
    }

    pub fn mul_y(&self, l: u32) -> Self {
        self.mul_gen(Gen::Y(l))
    }

    /// Multiplies by the Schur class of `shape`, expanding it as a signed sum
    /// of products of X-generators (determinantal expansion in the e-basis)
    /// and applying Pieri steps.
    fn mul_schur(&self, shape: &Partition) -> Self {
        let mut out = Self::zero(self.k, self.n);
        if shape.is_empty() {
            return self.clone();
        }
        let conj = shape.conjugate();
        let r = conj.len();
        for_each_permutation(r, &mut |perm, sign| {
            let mut prod = self.clone();
            for (i, &p) in perm.iter().enumerate() {
                let idx = conj.part(i + 1) as i64 - (i as i64 + 1) + (p as i64 + 1);
                if idx < 0 {
                    prod = Self::zero(self.k, self.n);
                    break;
                }
                if idx > 0 {
                    prod = prod.mul_x(idx as u32);
                }
                if prod.is_zero() {
                    break;
                }
            }
            if sign < 0 {
                prod = -prod;
            }
            out += prod;
        });
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: serde_json::Map<String, serde_json::Value> = self
            .terms
            .iter()
            .map(|(shape, c)| (shape.to_string(), serde_json::Value::String(c.to_string())))
            .collect();
        serde_json::json!({
            "k": self.k,
            "N": self.n,
            "terms": terms,
        })
    }
}

/// Product in H*(Gr(k, N)); both factors must live in the same ring.
pub fn gr_mul(u: &GrElement, v: &GrElement) -> GrElement {
    assert_eq!((u.k, u.n), (v.k, v.n), "elements of different rings");
    let mut out = GrElement::zero(u.k, u.n);
    for (shape, c) in &v.terms {
        out += u.mul_schur(shape).scaled(c);
    }
    out
}

/// Builds the element of H*(Gr(k, N)) given by a polynomial in the
/// generators, each monomial a coefficient times a product of generators.
pub fn gr_from_poly(k: u32, n: u32, monomials: &[(BigRational, Vec<Gen>)]) -> GrElement {
    let mut out = GrElement::zero(k, n);
    for (c, gens) in monomials {
        let mut term = GrElement::one(k, n).scaled(c);
        for &gen in gens {
            term = term.mul_gen(gen);
        }
        out += term;
    }
    out
}

/// Parses a polynomial in symbols `x1..xk`, `y1..y(N-k)` and integers, with
/// `^` powers, `*` or whitespace products, and `+`/`-` sums.
pub fn gr_from_poly_str(k: u32, n: u32, input: &str) -> Result<GrElement, FlagError> {
    let mut out = GrElement::zero(k, n);
    let mut rest = input.trim();
    if rest.is_empty() {
        return Err(FlagError::UnknownSymbol(String::from("<empty>")));
    }
    let mut sign = BigRational::one();
    let mut first = true;
    while !rest.is_empty() {
        let (summand, next, next_sign) = split_summand(rest);
        if summand.is_empty() && first {
            sign = next_sign.expect("leading sign");
            rest = next;
            first = false;
            continue;
        }
        let mut term = GrElement::one(k, n).scaled(&sign);
        for factor in summand.split(['*', ' ']).filter(|f| !f.is_empty()) {
            term = apply_factor(term, factor)?;
        }
        out += term;
        match next_sign {
            Some(s) => sign = s,
            None => break,
        }
        rest = next;
        first = false;
    }
    Ok(out)
}

fn split_summand(input: &str) -> (&str, &str, Option<BigRational>) {
    for (i, ch) in input.char_indices() {
        if i == 0 && (ch == '+' || ch == '-') {
            let sign = if ch == '-' {
                -BigRational::one()
            } else {
                BigRational::one()
            };
            return ("", &input[1..], Some(sign));
        }
        if (ch == '+' || ch == '-') && !input[..i].ends_with('^') {
            let sign = if ch == '-' {
                -BigRational::one()
            } else {
                BigRational::one()
            };
            return (input[..i].trim(), &input[i + 1..], Some(sign));
        }
    }
    (input.trim(), "", None)
}

fn apply_factor(term: GrElement, factor: &str) -> Result<GrElement, FlagError> {
    let (head, power) = match factor.split_once('^') {
        Some((h, p)) => {
            let power: u32 = p
                .parse()
                .map_err(|_| FlagError::UnknownSymbol(factor.to_string()))?;
            (h, power)
        }
        None => (factor, 1),
    };
    if let Ok(int) = head.parse::<BigInt>() {
        let c = BigRational::from_integer(int);
        let mut scale = BigRational::one();
        for _ in 0..power {
            scale *= &c;
        }
        return Ok(term.scaled(&scale));
    }
    let gen = if let Some(idx) = head.strip_prefix('x') {
        Gen::X(idx
            .parse()
            .map_err(|_| FlagError::UnknownSymbol(factor.to_string()))?)
    } else if let Some(idx) = head.strip_prefix('y') {
        Gen::Y(idx
            .parse()
            .map_err(|_| FlagError::UnknownSymbol(factor.to_string()))?)
    } else {
        return Err(FlagError::UnknownSymbol(factor.to_string()));
    };
    let mut out = term;
    for _ in 0..power {
        out = out.mul_gen(gen);
    }
    Ok(out)
}

/// Graded dimension of H*(Gr(k, N)) as a polynomial in q (box count at q^2).
pub fn graded_census(k: u32, n: u32) -> LaurentPoly {
    let mut total = LaurentPoly::zero();
    for shape in partitions_in_box(k, n - k) {
        total += &LaurentPoly::q(2 * shape.size() as i64);
    }
    total
}

fn for_each_permutation(r: usize, f: &mut impl FnMut(&[usize], i64)) {
    fn rec(
        slots: &mut Vec<usize>,
        used: &mut Vec<bool>,
        inversions: usize,
        f: &mut impl FnMut(&[usize], i64),
    ) {
        let r = used.len();
        if slots.len() == r {
            let sign = if inversions % 2 == 0 { 1 } else { -1 };
            f(slots, sign);
            return;
        }
        for v in 0..r {
            if used[v] {
                continue;
            }
            let added = slots.iter().filter(|&&s| s > v).count();
            used[v] = true;
            slots.push(v);
            rec(slots, used, inversions + added, f);
            slots.pop();
            used[v] = false;
        }
    }
    rec(&mut Vec::new(), &mut vec![false; r], 0, f);
}

impl AddAssign for GrElement {
    fn add_assign(&mut self, rhs: GrElement) {
        assert_eq!((self.k, self.n), (rhs.k, rhs.n), "elements of different rings");
        for (shape, c) in rhs.terms {
            self.insert(shape, c);
        }
    }
}

impl Add for GrElement {
    type Output = GrElement;
    fn add(mut self, rhs: GrElement) -> GrElement {
        self += rhs;
        self
    }
}

impl Sub for GrElement {
    type Output = GrElement;
    fn sub(self, rhs: GrElement) -> GrElement {
        self + (-rhs)
    }
}

impl Neg for GrElement {
    type Output = GrElement;
    fn neg(mut self) -> GrElement {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl fmt::Display for GrElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (shape, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if shape.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "s{shape}")?;
            } else {
                write!(f, "{abs} s{shape}")?;
            }
        }
        Ok(())
    }
}
