//! Rational functions over ℤ[q,q⁻¹], kept in a canonical reduced form so
//! that equality is structural.

use crate::LaurentPoly;
use num_integer::Integer;
use num_traits::{One, Signed};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// num/den with gcd removed, joint integer content 1, and the denominator
/// normalized to minimum exponent 0 with positive trailing coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFun {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        let mut r = RatFun { num, den };
        r.reduce();
        r
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        RatFun {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_poly(LaurentPoly::from_int(c))
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// q^s as a rational function
    pub fn q_power(s: i64) -> Self {
        Self::from_poly(LaurentPoly::q(s))
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    /// Whether the denominator is trivial, i.e. the value lies in ℤ[q,q⁻¹].
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The bar involution q ↦ q⁻¹ extended to the fraction field.
    pub fn bar(&self) -> Self {
        Self::new(self.num.bar(), self.den.bar())
    }

    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverting zero");
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, k: i32) -> Self {
        let base = if k < 0 { self.inv() } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..k.unsigned_abs() {
            acc = &acc * &base;
        }
        acc
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = LaurentPoly::one();
            return;
        }
        let g = LaurentPoly::poly_gcd(&self.num, &self.den);
        if !g.is_one() {
            self.num = self.num.divide_exact(&g).expect("gcd divides numerator");
            self.den = self.den.divide_exact(&g).expect("gcd divides denominator");
        }
        let c = self.num.content().gcd(&self.den.content());
        if !c.is_one() {
            let cinv = |p: &LaurentPoly, c: &num_bigint::BigInt| {
                p.divide_exact(&LaurentPoly::from_int(c.clone()))
                    .expect("content divides")
            };
            self.num = cinv(&self.num, &c);
            self.den = cinv(&self.den, &c);
        }
        // all q-power freedom lives in the numerator
        let s = self.den.min_exp().unwrap();
        if s != 0 {
            self.den = self.den.shifted(-s);
            self.num = self.num.shifted(-s);
        }
        if self.den.coeff(0).is_negative() {
            self.num = -&self.num;
            self.den = -&self.den;
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "num": self.num.to_json(),
            "den": self.den.to_json(),
        })
    }
}

impl From<LaurentPoly> for RatFun {
    fn from(p: LaurentPoly) -> Self {
        Self::from_poly(p)
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        -&self
    }
}

impl Add for &RatFun {
    type Output = RatFun;
    fn add(self, rhs: &RatFun) -> RatFun {
        RatFun::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RatFun {
    type Output = RatFun;
    fn sub(self, rhs: &RatFun) -> RatFun {
        self + &(-rhs)
    }
}

impl Mul for &RatFun {
    type Output = RatFun;
    fn mul(self, rhs: &RatFun) -> RatFun {
        RatFun::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &RatFun {
    type Output = RatFun;
    fn div(self, rhs: &RatFun) -> RatFun {
        assert!(!rhs.is_zero(), "division by zero");
        RatFun::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

macro_rules! forward_value_ops {
    ($($trait:ident :: $m:ident),*) => {$(
        impl $trait for RatFun {
            type Output = RatFun;
            fn $m(self, rhs: RatFun) -> RatFun { $trait::$m(&self, &rhs) }
        }
        impl $trait<&RatFun> for RatFun {
            type Output = RatFun;
            fn $m(self, rhs: &RatFun) -> RatFun { $trait::$m(&self, rhs) }
        }
        impl $trait<RatFun> for &RatFun {
            type Output = RatFun;
            fn $m(self, rhs: RatFun) -> RatFun { $trait::$m(self, &rhs) }
        }
    )*};
}
forward_value_ops!(Add::add, Sub::sub, Mul::mul, Div::div);

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if self.num.num_terms() > 1 {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        if self.den.num_terms() > 1 {
            write!(f, " / ({})", self.den)
        } else {
            write!(f, " / {}", self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn reduction_is_canonical() {
        // (q^2-1)/(q^3-q) = (q-q^-1)·q / ((q-q^-1)·q^2) = q^-1... as reduced fraction: q / q^2 → num q^-1? den 1
        let r = RatFun::new(qp("q^2 - 1"), qp("q^3 - q"));
        assert_eq!(r, RatFun::from_poly(qp("q^-1")));
        let s = RatFun::new(qp("2q + 2"), qp("4"));
        assert_eq!(s, RatFun::new(qp("q + 1"), qp("2")));
    }

    #[test]
    fn denominator_normalization() {
        // 1/(1-q^-2) = -q^2/(1-q^2)
        let r = RatFun::new(qp("1"), qp("1 - q^-2"));
        assert_eq!(r.num(), &qp("-q^2"));
        assert_eq!(r.den(), &qp("1 - q^2"));
    }

    #[test]
    fn field_ops() {
        let a = RatFun::new(qp("1"), qp("1 - q^2"));
        let b = RatFun::new(qp("1"), qp("1 + q"));
        let sum = &a + &b;
        let back = &sum - &b;
        assert_eq!(back, a);
        let prod = &a * &b;
        assert_eq!(&prod / &b, a);
        assert_eq!(&a - &a, RatFun::zero());
        assert!((&a * &RatFun::zero()).is_zero());
        assert_eq!(a.inv().inv(), a);
        assert_eq!(a.pow(-2), (&a * &a).inv());
    }

    #[test]
    fn bar_involution() {
        let a = RatFun::new(qp("q^3 + q"), qp("1 - q^4"));
        assert_eq!(a.bar().bar(), a);
    }
}
