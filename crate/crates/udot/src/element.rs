//! Weight-homogeneous elements, multiplication, and the canonical basis.

use crate::{BasisLabel, Form};
use qring::{qbin, LaurentPoly};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub};

/// An element of the weight space 1_dst · U̇ · 1_src, stored on the spanning
/// set of EF-ordered monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UdotElement {
    src: i64,
    dst: i64,
    terms: BTreeMap<BasisLabel, LaurentPoly>,
}

impl UdotElement {
    pub fn zero(src: i64, dst: i64) -> Self {
        UdotElement {
            src,
            dst,
            terms: BTreeMap::new(),
        }
    }

    pub fn idempotent(n: i64) -> Self {
        Self::basis(BasisLabel::idempotent(n))
    }

    /// E^(a)1_n
    pub fn e_pow(a: u32, n: i64) -> Self {
        Self::basis(BasisLabel::ef(a, 0, n))
    }

    /// F^(b)1_n
    pub fn f_pow(b: u32, n: i64) -> Self {
        Self::basis(BasisLabel::ef(0, b, n))
    }

    pub fn e(n: i64) -> Self {
        Self::e_pow(1, n)
    }

    pub fn f(n: i64) -> Self {
        Self::f_pow(1, n)
    }

    pub fn basis(label: BasisLabel) -> Self {
        Self::from_label(label, LaurentPoly::one())
    }

    /// The element coeff·label expanded over the internal EF-ordered basis;
    /// an FE-ordered label is rewritten by commuting every F past every E.
    pub fn from_label(label: BasisLabel, coeff: LaurentPoly) -> Self {
        let mut out = Self::zero(label.src_weight(), label.dst_weight());
        if coeff.is_zero() {
            return out;
        }
        let (a, b, n) = (label.a(), label.b(), label.n());
        match label.form() {
            Form::EF => out.insert_term(label, coeff),
            Form::FE => {
                // F^(b)E^(a)1_n = Σ_j [b−a−n choose j]·E^(a−j)F^(b−j)1_n
                for j in 0..=a.min(b) {
                    let c = qbin(b as i64 - a as i64 - n, j);
                    if c.is_zero() {
                        continue;
                    }
                    out.insert_term(BasisLabel::ef(a - j, b - j, n), &c * &coeff);
                }
            }
        }
        out
    }

    pub fn src_weight(&self) -> i64 {
        self.src
    }

    pub fn dst_weight(&self) -> i64 {
        self.dst
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms over the internal EF-ordered spanning set.
    pub fn terms(&self) -> impl Iterator<Item = (&BasisLabel, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn scaled(&self, c: &LaurentPoly) -> Self {
        if c.is_zero() {
            return Self::zero(self.src, self.dst);
        }
        UdotElement {
            src: self.src,
            dst: self.dst,
            terms: self.terms.iter().map(|(l, p)| (*l, p * c)).collect(),
        }
    }

    /// Applies the bar involution q ↦ q⁻¹ to every coefficient.
    pub fn bar_coeffs(&self) -> Self {
        UdotElement {
            src: self.src,
            dst: self.dst,
            terms: self.terms.iter().map(|(l, p)| (*l, p.bar())).collect(),
        }
    }

    fn insert_term(&mut self, label: BasisLabel, coeff: LaurentPoly) {
        debug_assert_eq!(label.form(), Form::EF);
        debug_assert_eq!(label.src_weight(), self.src);
        debug_assert_eq!(label.dst_weight(), self.dst);
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(label) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Expansion over the canonical basis: EF-ordered terms above the
    /// canonical window are reordered into FE-ordered ones.
    pub fn to_canonical(&self) -> BTreeMap<BasisLabel, LaurentPoly> {
        let mut out: BTreeMap<BasisLabel, LaurentPoly> = BTreeMap::new();
        let mut add = |label: BasisLabel, c: LaurentPoly| {
            if c.is_zero() {
                return;
            }
            let entry = out.entry(label).or_insert_with(LaurentPoly::zero);
            *entry += &c;
            if entry.is_zero() {
                out.remove(&label);
            }
        };
        for (label, p) in &self.terms {
            if label.is_canonical() {
                add(*label, p.clone());
                continue;
            }
            // E^(a)F^(b)1_n = Σ_j [a−b+n choose j]·F^(b−j)E^(a−j)1_n,
            // and n > b−a puts every term on the canonical side
            let (a, b, n) = (label.a(), label.b(), label.n());
            for j in 0..=a.min(b) {
                let c = qbin(a as i64 - b as i64 + n, j);
                if c.is_zero() {
                    continue;
                }
                add(BasisLabel::fe(a - j, b - j, n), &c * p);
            }
        }
        debug_assert!(out.keys().all(BasisLabel::is_canonical));
        out
    }
}

/// Rebuilds an element from a canonical (or any single-weight) expansion.
pub fn from_expansion(
    terms: impl IntoIterator<Item = (BasisLabel, LaurentPoly)>,
) -> Option<UdotElement> {
    let mut out: Option<UdotElement> = None;
    for (label, coeff) in terms {
        let piece = UdotElement::from_label(label, coeff);
        match &mut out {
            None => out = Some(piece),
            Some(acc) => {
                if (acc.src, acc.dst) != (piece.src, piece.dst) {
                    return None;
                }
                *acc += &piece;
            }
        }
    }
    out
}

/// Product x·y in U̇. Idempotents from mismatched weight spaces compose to
/// zero, so a mismatch returns the zero element of the composite space.
pub fn mul(x: &UdotElement, y: &UdotElement) -> UdotElement {
    let mut out = UdotElement::zero(y.src, x.dst);
    if x.src != y.dst {
        return out;
    }
    for (lx, p) in &x.terms {
        let (a, b) = (lx.a() as i64, lx.b() as i64);
        for (ly, r) in &y.terms {
            let (c, d, m) = (ly.a() as i64, ly.b() as i64, ly.n());
            let coeff = p * r;
            // commute the inner F^(b)E^(c) pair at weight m−2d, then merge
            // the outer divided powers
            for j in 0..=b.min(c) {
                let f = qbin(b - c - (m - 2 * d), j as u32);
                if f.is_zero() {
                    continue;
                }
                let merge =
                    &qbin(a + c - j, a as u32) * &qbin(b + d - j, d as u32);
                out.insert_term(
                    BasisLabel::ef((a + c - j) as u32, (b + d - j) as u32, m),
                    &(&f * &merge) * &coeff,
                );
            }
        }
    }
    out
}

/// Canonical expansion of a product of canonical basis elements, with a flag
/// reporting whether every coefficient lies in ℕ[q,q⁻¹].
pub fn structure_constants(
    b1: &BasisLabel,
    b2: &BasisLabel,
) -> (BTreeMap<BasisLabel, LaurentPoly>, bool) {
    let product = mul(&UdotElement::basis(*b1), &UdotElement::basis(*b2));
    let expansion = product.to_canonical();
    let positive = expansion.values().all(LaurentPoly::coeffs_nonneg);
    (expansion, positive)
}

impl AddAssign<&UdotElement> for UdotElement {
    fn add_assign(&mut self, rhs: &UdotElement) {
        assert_eq!(
            (self.src, self.dst),
            (rhs.src, rhs.dst),
            "weight spaces differ"
        );
        for (l, p) in &rhs.terms {
            self.insert_term(*l, p.clone());
        }
    }
}

impl Add for &UdotElement {
    type Output = UdotElement;
    fn add(self, rhs: &UdotElement) -> UdotElement {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &UdotElement {
    type Output = UdotElement;
    fn sub(self, rhs: &UdotElement) -> UdotElement {
        self + &-rhs
    }
}

impl Neg for &UdotElement {
    type Output = UdotElement;
    fn neg(self) -> UdotElement {
        UdotElement {
            src: self.src,
            dst: self.dst,
            terms: self.terms.iter().map(|(l, p)| (*l, -p)).collect(),
        }
    }
}

/// Writes a coefficient the way the element grammar reads it back: bare for
/// ±q^s, parenthesised otherwise. Returns (text, sign-handled-by-caller).
fn coeff_text(p: &LaurentPoly) -> (String, bool) {
    if let Some((e, neg)) = p.as_signed_q_power() {
        let body = match e {
            0 => String::new(),
            1 => "q ".to_string(),
            e => format!("q^{e} "),
        };
        return (body, neg);
    }
    (format!("({p}) "), false)
}

impl fmt::Display for UdotElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (label, p) in &self.terms {
            let (body, neg) = coeff_text(p);
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
            write!(f, "{body}{label}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use qring::qint;

    #[test]
    fn divided_power_merge() {
        // E^(2)1_{n+2} · E1_n = [3 choose 1]·E^(3)1_n
        let n = -1;
        let prod = mul(&UdotElement::e_pow(2, n + 2), &UdotElement::e(n));
        assert_eq!(prod, UdotElement::e_pow(3, n).scaled(&qbin(3, 1)));
        let prod = mul(&UdotElement::f_pow(2, 3 - 2), &UdotElement::f(3));
        assert_eq!(prod, UdotElement::f_pow(3, 3).scaled(&qbin(3, 1)));
    }

    #[test]
    fn idempotent_composition() {
        let one = UdotElement::idempotent(2);
        assert_eq!(mul(&one, &one), one);
        assert!(mul(&UdotElement::idempotent(2), &UdotElement::idempotent(0)).is_zero());
        assert!(mul(&UdotElement::e(0), &UdotElement::e(0)).is_zero());
    }

    #[test]
    fn ef_commutation() {
        // E1_{n−2}·F1_n = EF1_n, and FE1_n picks up the weight correction
        for n in -3..=3 {
            let ef = mul(&UdotElement::e(n - 2), &UdotElement::f(n));
            assert_eq!(ef, UdotElement::basis(BasisLabel::ef(1, 1, n)));
            let fe = mul(&UdotElement::f(n + 2), &UdotElement::e(n));
            let expect = &ef - &UdotElement::idempotent(n).scaled(&qint(n));
            assert_eq!(fe, expect);
        }
    }

    #[test]
    fn canonical_rewrite() {
        let low = UdotElement::basis(BasisLabel::ef(1, 1, -2));
        assert_eq!(
            low.to_canonical().into_iter().collect::<Vec<_>>(),
            vec![(BasisLabel::ef(1, 1, -2), LaurentPoly::one())]
        );
        let high = UdotElement::basis(BasisLabel::ef(1, 1, 2));
        let expansion = high.to_canonical();
        assert_eq!(expansion.len(), 2);
        assert_eq!(expansion[&BasisLabel::fe(1, 1, 2)], LaurentPoly::one());
        assert_eq!(expansion[&BasisLabel::idempotent(2)], qint(2));
        // rebuilding the element from its canonical expansion is lossless
        assert_eq!(from_expansion(expansion).unwrap(), high);
    }

    #[test]
    fn canonical_positivity_examples() {
        let (expansion, positive) =
            structure_constants(&BasisLabel::ef(1, 0, -2), &BasisLabel::ef(0, 1, 0));
        assert!(positive);
        assert_eq!(expansion[&BasisLabel::ef(1, 1, 0)], LaurentPoly::one());
        let (expansion, positive) =
            structure_constants(&BasisLabel::idempotent(3), &BasisLabel::idempotent(3));
        assert!(positive);
        assert_eq!(expansion.len(), 1);
        assert_eq!(expansion[&BasisLabel::idempotent(3)], LaurentPoly::one());
    }

    #[test]
    fn display_texture() {
        let x = &UdotElement::basis(BasisLabel::ef(1, 1, 2)).scaled(&LaurentPoly::q(3))
            + &UdotElement::basis(BasisLabel::ef(2, 2, 2)).scaled(&qint(2));
        assert_eq!(x.to_string(), "q^3 E F 1_{2} + (q + q^-1) E(2) F(2) 1_{2}");
    }
}
