//! The nilHecke ring: χ-monomial × nilCoxeter basis, multiplication by the
//! twisted-derivation rule, and the polynomial representation.

use crate::{IntPoly, Perm};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub};

/// Element of 𝒩ℋ_a in the basis χ^A·u_w; degree 2|A| − 2ℓ(w).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NHElement {
    rank: usize,
    terms: BTreeMap<(Vec<u8>, Perm), BigInt>,
}

impl NHElement {
    pub fn zero(rank: usize) -> Self {
        NHElement {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(rank: usize) -> Self {
        Self::basis_elem(vec![0; rank], Perm::identity(rank), 1)
    }

    /// χ_i (1-based)
    pub fn chi(rank: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= rank);
        let mut e = vec![0; rank];
        e[i - 1] = 1;
        Self::basis_elem(e, Perm::identity(rank), 1)
    }

    /// u_i (1-based, i < rank)
    pub fn u(rank: usize, i: usize) -> Self {
        assert!(i >= 1 && i < rank);
        Self::basis_elem(vec![0; rank], Perm::s(i, rank), 1)
    }

    pub fn u_w(rank: usize, w: &Perm) -> Self {
        assert_eq!(w.rank(), rank);
        Self::basis_elem(vec![0; rank], w.clone(), 1)
    }

    pub fn basis_elem(exps: Vec<u8>, w: Perm, c: impl Into<BigInt>) -> Self {
        let rank = exps.len();
        assert_eq!(w.rank(), rank);
        let c: BigInt = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((exps, w), c);
        }
        NHElement { rank, terms }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Vec<u8>, Perm), &BigInt)> {
        self.terms.iter()
    }

    pub fn scaled(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.rank);
        }
        NHElement {
            rank: self.rank,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    fn insert_term(&mut self, key: (Vec<u8>, Perm), c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
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

    /// Some(d) when homogeneous of degree d = 2|A| − 2ℓ(w); None otherwise.
    pub fn homogeneous_degree(&self) -> Option<i64> {
        let mut deg = None;
        for (e, w) in self.terms.keys() {
            let d = 2 * e.iter().map(|&k| k as i64).sum::<i64>() - 2 * w.len() as i64;
            match deg {
                None => deg = Some(d),
                Some(d0) if d0 != d => return None,
                _ => {}
            }
        }
        deg
    }
}

/// u_i·x on the normal basis: u_i·χ^B = ∂_i(χ^B) + s_i(χ^B)·u_i, and
/// u_i·u_v = u_{s_iv} when lengths add, zero otherwise.
fn u_left(i: usize, x: &NHElement) -> NHElement {
    let rank = x.rank;
    let mut out = NHElement::zero(rank);
    for ((b, v), d) in &x.terms {
        let bpoly = IntPoly::monomial(rank, b.clone(), 1);
        for (e, c) in bpoly.divided_difference(i).terms() {
            out.insert_term((e.clone(), v.clone()), c * d);
        }
        let sv = v.left_mul_s(i);
        if sv.len() == v.len() + 1 {
            let mut sb = b.clone();
            sb.swap(i - 1, i);
            out.insert_term((sb, sv), d.clone());
        }
    }
    out
}

/// Product in 𝒩ℋ_a, rewritten to the χ-before-u normal basis.
pub fn nh_mul(x: &NHElement, y: &NHElement) -> NHElement {
    assert_eq!(x.rank, y.rank, "rank mismatch");
    let mut out = NHElement::zero(x.rank);
    for ((a, w), c) in &x.terms {
        let mut acc = y.clone();
        for &i in w.reduced_word().iter().rev() {
            acc = u_left(i, &acc);
        }
        // multiply by χ^A on the left: χ's commute with each other
        let mut shifted = NHElement::zero(x.rank);
        for ((b, v), d) in &acc.terms {
            let e: Vec<u8> = a.iter().zip(b).map(|(p, r)| p + r).collect();
            shifted.insert_term((e, v.clone()), d * c);
        }
        out += &shifted;
    }
    out
}

/// Action on polynomials: χ_i by multiplication, u_i by ∂_i.
pub fn act(e: &NHElement, p: &IntPoly) -> IntPoly {
    assert_eq!(e.rank, p.nvars(), "rank mismatch");
    let mut out = IntPoly::zero(e.rank);
    for ((a, w), c) in &e.terms {
        let mut q = p.clone();
        for &i in w.reduced_word().iter().rev() {
            q = q.divided_difference(i);
        }
        q = &q * &IntPoly::monomial(e.rank, a.clone(), 1);
        out += &q.scaled(c);
    }
    out
}

/// ∂_w = ∂_{i1}∘⋯∘∂_{im} along any reduced word of w.
pub fn divided_difference_w(w: &Perm, p: &IntPoly) -> IntPoly {
    let mut q = p.clone();
    for &i in w.reduced_word().iter().rev() {
        q = q.divided_difference(i);
    }
    q
}

/// staircase monomial x_1^{a−1}x_2^{a−2}⋯x_{a−1}
pub fn staircase(a: usize) -> IntPoly {
    let exps: Vec<u8> = (0..a).map(|i| (a - 1 - i) as u8).collect();
    IntPoly::monomial(a, exps, 1)
}

/// Schubert polynomial 𝔖_w = ∂_{w⁻¹w₀}(x^δ); homogeneous of degree 2ℓ(w).
pub fn schubert(w: &Perm) -> IntPoly {
    let a = w.rank();
    let u = w.inverse().compose(&Perm::w0(a));
    divided_difference_w(&u, &staircase(a))
}

/// Decompose a polynomial over the Schubert basis with symmetric-polynomial
/// coefficients by peeling with ∂_w from the top length down.
///
/// Exactness of the peel (zero remainder, symmetric coefficients) is a
/// structural invariant; failure panics.
pub fn schubert_decompose(a: usize, p: &IntPoly) -> BTreeMap<Perm, IntPoly> {
    let mut rem = p.clone();
    let mut out = BTreeMap::new();
    let mut by_len: BTreeMap<usize, Vec<Perm>> = BTreeMap::new();
    for w in Perm::all(a) {
        by_len.entry(w.len()).or_default().push(w);
    }
    for (_, group) in by_len.into_iter().rev() {
        let mut layer = Vec::new();
        for w in group {
            let m = divided_difference_w(&w, &rem);
            assert!(m.is_symmetric(), "non-symmetric Schubert coefficient");
            layer.push((w, m));
        }
        for (w, m) in layer {
            if !m.is_zero() {
                rem -= &(&m * &schubert(&w));
                out.insert(w, m);
            }
        }
    }
    assert!(rem.is_zero(), "Schubert decomposition left a remainder");
    out
}

/// Matrix of an element acting on the Schubert basis (ordered by length),
/// with coefficients in the symmetric polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiMatrix {
    pub basis: Vec<Perm>,
    pub entries: Vec<Vec<IntPoly>>,
}

impl PhiMatrix {
    pub fn identity(a: usize) -> Self {
        phi_matrix(&NHElement::one(a))
    }

    pub fn mat_mul(&self, rhs: &PhiMatrix) -> PhiMatrix {
        assert_eq!(self.basis, rhs.basis);
        let n = self.basis.len();
        let a = self.basis[0].rank();
        let mut entries = vec![vec![IntPoly::zero(a); n]; n];
        for r in 0..n {
            for c in 0..n {
                let mut acc = IntPoly::zero(a);
                for k in 0..n {
                    if self.entries[r][k].is_zero() || rhs.entries[k][c].is_zero() {
                        continue;
                    }
                    acc += &(&self.entries[r][k] * &rhs.entries[k][c]);
                }
                entries[r][c] = acc;
            }
        }
        PhiMatrix {
            basis: self.basis.clone(),
            entries,
        }
    }
}

/// Image of an element under the a!×a! matrix isomorphism: column v holds
/// the Schubert coordinates of act(e, 𝔖_v).
pub fn phi_matrix(e: &NHElement) -> PhiMatrix {
    let a = e.rank();
    let basis = Perm::all(a);
    let n = basis.len();
    let mut entries = vec![vec![IntPoly::zero(a); n]; n];
    for (col, v) in basis.iter().enumerate() {
        let image = act(e, &schubert(v));
        let coords = schubert_decompose(a, &image);
        for (row, w) in basis.iter().enumerate() {
            if let Some(m) = coords.get(w) {
                entries[row][col] = m.clone();
            }
        }
    }
    PhiMatrix { basis, entries }
}

/// The minimal idempotent χ^δ·u_{w₀}.
pub fn e_w0(a: usize) -> NHElement {
    let exps: Vec<u8> = (0..a).map(|i| (a - 1 - i) as u8).collect();
    NHElement::basis_elem(exps, Perm::w0(a), 1)
}

pub fn is_idempotent(e: &NHElement) -> bool {
    nh_mul(e, e) == *e
}

/// Census checks: the nilCoxeter and Schubert degree generating functions
/// against q^{∓a(a−1)/2}[a]!, staircase bounds and homogeneity of 𝔖_w.
pub fn graded_rank_checks(a: usize) -> qring::IdentityReport {
    use qring::{qfact, LaurentPoly};
    let mut rep = qring::IdentityReport::default();
    let perms = Perm::all(a);
    let ai = a as i64;

    let mut nilcoxeter = LaurentPoly::zero();
    let mut schuberts = LaurentPoly::zero();
    for w in &perms {
        nilcoxeter += &LaurentPoly::q(-2 * (w.len() as i64));
        schuberts += &LaurentPoly::q(2 * (w.len() as i64));
    }
    rep.record(
        format!("nilCoxeter census rank {a}: Σ q^{{-2ℓ(w)}} = q^{{-a(a-1)/2}}[a]!"),
        nilcoxeter == qfact(a as u32).shifted(-ai * (ai - 1) / 2),
        None,
    );
    rep.record(
        format!("Schubert census rank {a}: Σ q^{{2ℓ(w)}} = q^{{a(a-1)/2}}[a]!"),
        schuberts == qfact(a as u32).shifted(ai * (ai - 1) / 2),
        None,
    );
    rep.check_all(
        &format!("Schubert homogeneity and staircase bound, rank {a}"),
        perms.iter().map(|w| {
            let s = schubert(w);
            let homog = s.homogeneous_degree() == Some(2 * w.len() as i64);
            let bounded = s
                .terms()
                .all(|(e, _)| e.iter().enumerate().all(|(i, &k)| (k as usize) + i < a));
            (format!("w={w}"), homog && bounded)
        }),
    );
    rep.check_all(
        &format!("∂_{{w0}} 𝔖_w = δ_{{w,w0}}, rank {a}"),
        perms.iter().map(|w| {
            let d = divided_difference_w(&Perm::w0(a), &schubert(w));
            let expect = if *w == Perm::w0(a) {
                IntPoly::one(a)
            } else {
                IntPoly::zero(a)
            };
            (format!("w={w}"), d == expect)
        }),
    );
    rep
}

impl Add for &NHElement {
    type Output = NHElement;
    fn add(self, rhs: &NHElement) -> NHElement {
        assert_eq!(self.rank, rhs.rank);
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.insert_term(k.clone(), c.clone());
        }
        out
    }
}

impl Sub for &NHElement {
    type Output = NHElement;
    fn sub(self, rhs: &NHElement) -> NHElement {
        assert_eq!(self.rank, rhs.rank);
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.insert_term(k.clone(), -c);
        }
        out
    }
}

impl Neg for &NHElement {
    type Output = NHElement;
    fn neg(self) -> NHElement {
        NHElement {
            rank: self.rank,
            terms: self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect(),
        }
    }
}

impl AddAssign<&NHElement> for NHElement {
    fn add_assign(&mut self, rhs: &NHElement) {
        assert_eq!(self.rank, rhs.rank);
        for (k, c) in &rhs.terms {
            self.insert_term(k.clone(), c.clone());
        }
    }
}

impl fmt::Display for NHElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((e, w), c) in &self.terms {
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
            let mut factors: Vec<String> = Vec::new();
            for (i, &k) in e.iter().enumerate() {
                if k == 1 {
                    factors.push(format!("x{}", i + 1));
                } else if k > 1 {
                    factors.push(format!("x{}^{}", i + 1, k));
                }
            }
            for i in w.reduced_word() {
                factors.push(format!("u{}", i));
            }
            if mag != BigInt::from(1) || factors.is_empty() {
                let mut head = vec![format!("{}", mag)];
                head.extend(factors);
                factors = head;
            }
            write!(f, "{}", factors.join(" "))?;
        }
        Ok(())
    }
}

/// Parse a sum of products of `x{i}`, `x{i}^{p}`, `u{i}` and integers,
/// e.g. `x1^2 u1 + 3 x2`. Rank is inferred from the largest index unless given.
pub fn parse_nh(s: &str, rank: Option<usize>) -> Result<NHElement, String> {
    let cleaned = s.replace('*', " ");
    let mut summands: Vec<(i64, Vec<String>)> = Vec::new();
    let mut sign = 1i64;
    let mut current: Vec<String> = Vec::new();
    let flush = |sign: i64, current: &mut Vec<String>, summands: &mut Vec<(i64, Vec<String>)>| {
        if !current.is_empty() {
            summands.push((sign, std::mem::take(current)));
        }
    };
    for raw in cleaned.split_whitespace() {
        let mut tok = raw;
        while let Some(rest) = tok.strip_prefix('+') {
            flush(sign, &mut current, &mut summands);
            sign = 1;
            tok = rest;
        }
        while let Some(rest) = tok.strip_prefix('-') {
            flush(sign, &mut current, &mut summands);
            sign = -1;
            tok = rest;
        }
        if !tok.is_empty() {
            current.push(tok.to_string());
        }
    }
    flush(sign, &mut current, &mut summands);
    if summands.is_empty() {
        return Err("empty element".into());
    }

    let mut max_idx = 1usize;
    for (_, toks) in &summands {
        for t in toks {
            if let Some(body) = t.strip_prefix('x').or_else(|| t.strip_prefix('u')) {
                let idx_part = body.split('^').next().unwrap_or("");
                let i: usize = idx_part.parse().map_err(|_| format!("bad token {t}"))?;
                // u_i involves strands i and i+1
                let need = if t.starts_with('u') { i + 1 } else { i };
                max_idx = max_idx.max(need);
            }
        }
    }
    let a = rank.unwrap_or(max_idx);

    let mut out = NHElement::zero(a);
    for (sign, toks) in summands {
        let mut elem = NHElement::one(a).scaled(&BigInt::from(sign));
        for t in toks {
            let factor = if let Some(body) = t.strip_prefix('x') {
                let (i, p) = match body.split_once('^') {
                    Some((i, p)) => (
                        i.parse::<usize>().map_err(|_| format!("bad token {t}"))?,
                        p.parse::<u32>().map_err(|_| format!("bad token {t}"))?,
                    ),
                    None => (body.parse::<usize>().map_err(|_| format!("bad token {t}"))?, 1),
                };
                if i == 0 || i > a {
                    return Err(format!("x{i} out of range for rank {a}"));
                }
                let mut e = vec![0u8; a];
                e[i - 1] = p as u8;
                NHElement::basis_elem(e, Perm::identity(a), 1)
            } else if let Some(body) = t.strip_prefix('u') {
                let i: usize = body.parse().map_err(|_| format!("bad token {t}"))?;
                if i == 0 || i >= a {
                    return Err(format!("u{i} out of range for rank {a}"));
                }
                NHElement::u(a, i)
            } else if let Ok(c) = t.parse::<i64>() {
                NHElement::one(a).scaled(&BigInt::from(c))
            } else {
                return Err(format!("bad token {t}"));
            };
            elem = nh_mul(&elem, &factor);
        }
        out += &elem;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defining_relations() {
        let a = 3;
        let u1 = NHElement::u(a, 1);
        let u2 = NHElement::u(a, 2);
        let x1 = NHElement::chi(a, 1);
        let x2 = NHElement::chi(a, 2);
        assert!(nh_mul(&u1, &u1).is_zero());
        assert_eq!(
            nh_mul(&nh_mul(&u1, &u2), &u1),
            nh_mul(&nh_mul(&u2, &u1), &u2)
        );
        // u1 x1 = 1 + x2 u1
        assert_eq!(
            nh_mul(&u1, &x1),
            &NHElement::one(a) + &nh_mul(&x2, &u1)
        );
        // x1 u1 = 1 + u1 x2 (as elements, both in the normal basis)
        assert_eq!(
            nh_mul(&x1, &u1),
            &NHElement::one(a) + &nh_mul(&u1, &x2)
        );
    }

    #[test]
    fn schubert_small() {
        assert_eq!(schubert(&Perm::identity(2)), IntPoly::one(2));
        assert_eq!(schubert(&Perm::w0(3)), staircase(3));
        // S_3 list: 𝔖_{s1} = x1, 𝔖_{s2} = x1 + x2
        assert_eq!(schubert(&Perm::from_line(vec![2, 1, 3]).unwrap()), IntPoly::var(3, 1));
        assert_eq!(
            schubert(&Perm::from_line(vec![1, 3, 2]).unwrap()),
            &IntPoly::var(3, 1) + &IntPoly::var(3, 2)
        );
    }

    #[test]
    fn idempotents() {
        assert!(is_idempotent(&e_w0(1)));
        assert!(is_idempotent(&e_w0(2)));
        assert!(is_idempotent(&e_w0(3)));
        assert_eq!(e_w0(2), nh_mul(&NHElement::chi(2, 1), &NHElement::u(2, 1)));
    }

    #[test]
    fn census() {
        for a in 1..=4 {
            let rep = graded_rank_checks(a);
            assert!(rep.all_pass(), "\n{rep}");
        }
    }

    #[test]
    fn phi_unit_example() {
        // rank 2: e_{w0} = x1 u1 maps to the elementary matrix E_{2,2}
        let m = phi_matrix(&e_w0(2));
        assert_eq!(m.basis.len(), 2);
        assert!(m.entries[0][0].is_zero());
        assert!(m.entries[0][1].is_zero());
        assert!(m.entries[1][0].is_zero());
        assert!(m.entries[1][1].is_one());
    }

    #[test]
    fn parse_round_trip() {
        let e = parse_nh("x1^2 u1 u2 + 3 x2 - u1", None).unwrap();
        let printed = e.to_string();
        assert_eq!(parse_nh(&printed, Some(e.rank())).unwrap(), e);
    }
}
