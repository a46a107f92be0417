//! Sparse Laurent polynomials over ℤ in one variable q.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

/// Element of ℤ[q,q⁻¹]: exponent → coefficient, zero coefficients never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    /// c·q^e
    pub fn monomial(exp: i64, coeff: impl Into<BigInt>) -> Self {
        let c: BigInt = coeff.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        LaurentPoly { terms }
    }

    /// q^e
    pub fn q(exp: i64) -> Self {
        Self::monomial(exp, 1)
    }

    pub fn from_int(c: impl Into<BigInt>) -> Self {
        Self::monomial(0, c)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coeff(0).is_one()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// true iff every coefficient is a nonnegative integer
    pub fn coeffs_nonneg(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Some((s, negative)) when the polynomial is a single term ±q^s.
    pub fn as_signed_q_power(&self) -> Option<(i64, bool)> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = self.terms.iter().next().unwrap();
        if c.abs().is_one() {
            Some((*e, c.is_negative()))
        } else {
            None
        }
    }

    /// The bar involution q ↦ q⁻¹.
    pub fn bar(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Multiplication by q^s.
    pub fn shifted(&self, s: i64) -> Self {
        if s == 0 {
            return self.clone();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (e + s, c.clone())).collect(),
        }
    }

    pub fn scaled(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(e, k)| (*e, k * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    fn insert_term(&mut self, exp: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
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

    /// gcd of all coefficients (nonnegative); zero for the zero polynomial
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Exact division in ℤ[q,q⁻¹]; None when `d` does not divide `self`.
    pub fn divide_exact(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let s = self.min_exp().unwrap() - d.min_exp().unwrap();
        let a = self.to_dense();
        let b = d.to_dense();
        if a.len() < b.len() {
            return None;
        }
        // long division over ℚ, then insist on an integral quotient and zero remainder
        let mut rem: Vec<BigRational> =
            a.iter().map(|c| BigRational::from(c.clone())).collect();
        let bq: Vec<BigRational> = b.iter().map(|c| BigRational::from(c.clone())).collect();
        let db = bq.len() - 1;
        let mut quot = vec![BigRational::zero(); a.len() - b.len() + 1];
        for k in (0..quot.len()).rev() {
            let qc = &rem[db + k] / &bq[db];
            if !qc.is_zero() {
                for (i, bc) in bq.iter().enumerate() {
                    let t = &qc * bc;
                    rem[i + k] = &rem[i + k] - t;
                }
            }
            quot[k] = qc;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        let mut out = LaurentPoly::zero();
        for (k, qc) in quot.iter().enumerate() {
            if qc.is_zero() {
                continue;
            }
            if !qc.is_integer() {
                return None;
            }
            out.insert_term(k as i64 + s, qc.to_integer());
        }
        Some(out)
    }

    /// dense ascending coefficients with the minimum exponent shifted to 0
    fn to_dense(&self) -> Vec<BigInt> {
        let lo = self.min_exp().unwrap();
        let hi = self.max_exp().unwrap();
        let mut v = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (e, c) in &self.terms {
            v[(e - lo) as usize] = c.clone();
        }
        v
    }

    fn from_dense(v: &[BigInt]) -> Self {
        let mut out = Self::zero();
        for (k, c) in v.iter().enumerate() {
            if !c.is_zero() {
                out.insert_term(k as i64, c.clone());
            }
        }
        out
    }

    /// Polynomial gcd up to units, as a primitive polynomial with minimum
    /// exponent 0 and positive leading coefficient (primitive-PRS Euclid).
    pub fn poly_gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
        if a.is_zero() {
            return normalize_unit(b);
        }
        if b.is_zero() {
            return normalize_unit(a);
        }
        let mut x = primitive_dense(&a.to_dense());
        let mut y = primitive_dense(&b.to_dense());
        if x.len() < y.len() {
            std::mem::swap(&mut x, &mut y);
        }
        while !y.is_empty() {
            let r = pseudo_rem(&x, &y);
            x = y;
            y = primitive_dense(&r);
        }
        let g = LaurentPoly::from_dense(&x);
        normalize_unit(&g)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut map = serde_json::Map::new();
        for (e, c) in &self.terms {
            let v = match i64::try_from(c.clone()) {
                Ok(n) => serde_json::Value::from(n),
                Err(_) => serde_json::Value::from(c.to_string()),
            };
            map.insert(e.to_string(), v);
        }
        serde_json::Value::Object(map)
    }
}

/// primitive part of the given poly, min exponent at 0, positive leading coeff
fn normalize_unit(p: &LaurentPoly) -> LaurentPoly {
    if p.is_zero() {
        return LaurentPoly::zero();
    }
    let c = p.content();
    let mut out = LaurentPoly::zero();
    let lo = p.min_exp().unwrap();
    for (e, k) in &p.terms {
        out.insert_term(e - lo, k / &c);
    }
    if out.terms.values().next_back().unwrap().is_negative() {
        out = -&out;
    }
    out
}

fn primitive_dense(v: &[BigInt]) -> Vec<BigInt> {
    let mut lo = 0;
    let mut hi = v.len();
    while lo < hi && v[lo].is_zero() {
        lo += 1;
    }
    while hi > lo && v[hi - 1].is_zero() {
        hi -= 1;
    }
    if lo == hi {
        return Vec::new();
    }
    let mut g = BigInt::zero();
    for c in &v[lo..hi] {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    v[lo..hi].iter().map(|c| c / &g).collect()
}

/// pseudo remainder of dense ascending polys, deg(a) ≥ deg(b), b nonzero
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lc_b = b[db].clone();
    let mut r: Vec<BigInt> = a.to_vec();
    while r.len() > db {
        let dr = r.len() - 1;
        if r[dr].is_zero() {
            r.pop();
            continue;
        }
        let lead = r[dr].clone();
        for c in r.iter_mut() {
            *c *= &lc_b;
        }
        for (i, bc) in b.iter().enumerate() {
            r[dr - db + i] -= &lead * bc;
        }
        while let Some(last) = r.last() {
            if last.is_zero() {
                r.pop();
            } else {
                break;
            }
        }
        if r.len() <= db {
            break;
        }
    }
    r
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert_term(*e, -c);
        }
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.insert_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

macro_rules! forward_value_ops {
    ($($trait:ident :: $m:ident),*) => {$(
        impl $trait for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly { $trait::$m(&self, &rhs) }
        }
        impl $trait<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly { $trait::$m(&self, rhs) }
        }
        impl $trait<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly { $trait::$m(self, &rhs) }
        }
    )*};
}
forward_value_ops!(Add::add, Sub::sub, Mul::mul);

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.insert_term(*e, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.insert_term(*e, -c);
        }
    }
}

impl MulAssign<&LaurentPoly> for LaurentPoly {
    fn mul_assign(&mut self, rhs: &LaurentPoly) {
        *self = &*self * rhs;
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
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
            let unit_coeff = mag.is_one() && *e != 0;
            if !unit_coeff {
                write!(f, "{}", mag)?;
            }
            match *e {
                0 => {}
                1 => write!(f, "q")?,
                k => write!(f, "q^{}", k)?,
            }
        }
        Ok(())
    }
}

/// Parse error for the `q^2 + 2 + q^-2` textual form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsePolyError(pub String);

impl fmt::Display for ParsePolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "bad Laurent polynomial: {}", self.0)
    }
}

impl std::error::Error for ParsePolyError {}

impl FromStr for LaurentPoly {
    type Err = ParsePolyError;

    /// Accepts sums of terms `c`, `q^k`, `c q^k`, `c*q^k` with integer c, k.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut out = LaurentPoly::zero();
        let mut rest = s.trim();
        if rest.is_empty() {
            return Err(ParsePolyError(s.into()));
        }
        let mut sign: i64 = 1;
        // leading sign
        if let Some(r) = rest.strip_prefix('-') {
            sign = -1;
            rest = r.trim_start();
        } else if let Some(r) = rest.strip_prefix('+') {
            rest = r.trim_start();
        }
        loop {
            let (term, next) = split_term(rest);
            let (exp, coeff) = parse_term(term).ok_or_else(|| ParsePolyError(s.into()))?;
            out.insert_term(exp, coeff * sign);
            match next {
                None => break,
                Some((sg, r)) => {
                    sign = sg;
                    rest = r;
                }
            }
        }
        Ok(out)
    }
}

/// Split off the first additive term; returns the following sign and remainder.
fn split_term(s: &str) -> (&str, Option<(i64, &str)>) {
    for (i, ch) in s.char_indices() {
        if ch == '+' || ch == '-' {
            // '-' directly after '^' or inside a number is part of an exponent
            let prev = s[..i].trim_end().chars().next_back();
            if matches!(prev, Some('^')) {
                continue;
            }
            let sign = if ch == '+' { 1 } else { -1 };
            return (s[..i].trim(), Some((sign, s[i + 1..].trim_start())));
        }
    }
    (s.trim(), None)
}

fn parse_term(t: &str) -> Option<(i64, BigInt)> {
    let t = t.trim().trim_end_matches('*').trim();
    if t.is_empty() {
        return None;
    }
    if let Some(pos) = t.find('q') {
        let coeff_str = t[..pos].trim().trim_end_matches('*').trim();
        let coeff: BigInt = if coeff_str.is_empty() {
            BigInt::one()
        } else {
            coeff_str.parse().ok()?
        };
        let exp_str = t[pos + 1..].trim();
        let exp: i64 = if exp_str.is_empty() {
            1
        } else {
            exp_str.strip_prefix('^')?.trim().parse().ok()?
        };
        Some((exp, coeff))
    } else {
        Some((0, t.parse().ok()?))
    }
}
