//! Sparse multivariate polynomials over ℤ in x_1..x_a, graded with deg x_i = 2.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u8>, BigInt>,
}

impl IntPoly {
    pub fn zero(nvars: usize) -> Self {
        IntPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, 1)
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        Self::monomial(nvars, vec![0; nvars], c)
    }

    /// x_i (1-based)
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= nvars);
        let mut e = vec![0; nvars];
        e[i - 1] = 1;
        Self::monomial(nvars, e, 1)
    }

    pub fn monomial(nvars: usize, exps: Vec<u8>, c: impl Into<BigInt>) -> Self {
        assert_eq!(exps.len(), nvars);
        let c: BigInt = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        IntPoly { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&vec![0; self.nvars])
                .is_some_and(|c| *c == BigInt::from(1))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u8>, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exps: &[u8]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_else(BigInt::zero)
    }

    fn insert_term(&mut self, exps: Vec<u8>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scaled(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        IntPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect(),
        }
    }

    /// Some(d) when every term has graded degree d (deg x_i = 2); None for
    /// the zero polynomial or mixed degrees.
    pub fn homogeneous_degree(&self) -> Option<i64> {
        let mut deg = None;
        for e in self.terms.keys() {
            let d = 2 * e.iter().map(|&k| k as i64).sum::<i64>();
            match deg {
                None => deg = Some(d),
                Some(d0) if d0 != d => return None,
                _ => {}
            }
        }
        deg
    }

    /// exchange x_i and x_{i+1} (1-based i)
    pub fn swap_vars(&self, i: usize) -> Self {
        assert!(i >= 1 && i < self.nvars);
        IntPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = e.clone();
                    e.swap(i - 1, i);
                    (e, c.clone())
                })
                .collect(),
        }
    }

    pub fn is_symmetric_in(&self, i: usize) -> bool {
        self.swap_vars(i) == *self
    }

    /// fully symmetric under all adjacent swaps
    pub fn is_symmetric(&self) -> bool {
        (1..self.nvars).all(|i| self.is_symmetric_in(i))
    }

    /// ∂_i = (1 − s_i)/(x_i − x_{i+1}); the division is exact term by term:
    /// ∂_i(x^p y^r) = Σ_{j=r}^{p−1} x^j y^{p+r−1−j} for p > r, antisymmetric.
    pub fn divided_difference(&self, i: usize) -> Self {
        assert!(i >= 1 && i < self.nvars);
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let p = e[i - 1];
            let r = e[i];
            if p == r {
                continue;
            }
            let (lo, hi, sign) = if p > r { (r, p, 1) } else { (p, r, -1) };
            for j in lo..hi {
                let mut ne = e.clone();
                ne[i - 1] = j;
                ne[i] = lo + hi - 1 - j;
                out.insert_term(ne, if sign > 0 { c.clone() } else { -c });
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn to_json(&self) -> serde_json::Value {
        let monomials: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let coeff = match i64::try_from(c.clone()) {
                    Ok(n) => serde_json::Value::from(n),
                    Err(_) => serde_json::Value::from(c.to_string()),
                };
                serde_json::json!({"exps": e, "coeff": coeff})
            })
            .collect();
        serde_json::Value::from(monomials)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert_term(e.clone(), -c);
        }
        out
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = IntPoly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Vec<u8> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.insert_term(e, c1 * c2);
            }
        }
        out
    }
}

macro_rules! forward_value_ops {
    ($($trait:ident :: $m:ident),*) => {$(
        impl $trait for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly { $trait::$m(&self, &rhs) }
        }
        impl $trait<&IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: &IntPoly) -> IntPoly { $trait::$m(&self, rhs) }
        }
        impl $trait<IntPoly> for &IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly { $trait::$m(self, &rhs) }
        }
    )*};
}
forward_value_ops!(Add::add, Sub::sub, Mul::mul);

impl AddAssign<&IntPoly> for IntPoly {
    fn add_assign(&mut self, rhs: &IntPoly) {
        assert_eq!(self.nvars, rhs.nvars);
        for (e, c) in &rhs.terms {
            self.insert_term(e.clone(), c.clone());
        }
    }
}

impl SubAssign<&IntPoly> for IntPoly {
    fn sub_assign(&mut self, rhs: &IntPoly) {
        assert_eq!(self.nvars, rhs.nvars);
        for (e, c) in &rhs.terms {
            self.insert_term(e.clone(), -c);
        }
    }
}

fn fmt_monomial(f: &mut fmt::Formatter<'_>, e: &[u8]) -> fmt::Result {
    let mut first = true;
    for (i, &k) in e.iter().enumerate() {
        if k == 0 {
            continue;
        }
        if !first {
            write!(f, " ")?;
        }
        first = false;
        if k == 1 {
            write!(f, "x{}", i + 1)?;
        } else {
            write!(f, "x{}^{}", i + 1, k)?;
        }
    }
    Ok(())
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // highest degree first, then lexicographic
        let mut keys: Vec<&Vec<u8>> = self.terms.keys().collect();
        keys.sort_by_key(|e| {
            (
                -(e.iter().map(|&k| k as i64).sum::<i64>()),
                (*e).clone(),
            )
        });
        let mut first = true;
        for e in keys {
            let c = &self.terms[e];
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let is_const = e.iter().all(|&k| k == 0);
            if mag != BigInt::from(1) || is_const {
                write!(f, "{}", mag)?;
                if !is_const {
                    write!(f, " ")?;
                }
            }
            fmt_monomial(f, e)?;
        }
        Ok(())
    }
}
