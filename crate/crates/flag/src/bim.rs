//! Bimodules over flag cohomology rings in dumbbell normal form.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::gr::{Gen, GrElement};
use crate::FlagError;

/// Orientation of a single strand: `E` raises the flag step, `F` lowers it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Strand {
    E,
    F,
}

/// The strand pair a cup creates or a cap consumes, named left-to-right.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairKind {
    /// E on the left, F on the right.
    EF,
    /// F on the left, E on the right.
    FE,
}

/// Circulation sense of a bubble.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Orientation {
    Clockwise,
    CounterClockwise,
}

/// The shape data of an iterated flag bimodule: ambient dimension, weight of
/// the rightmost region, strand orientations listed from the right, and a
/// formal grading shift.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BimSignature {
    n: u32,
    n0: i64,
    strands: Vec<Strand>,
    shift: i64,
}

impl BimSignature {
    /// Builds a signature; `strands[0]` is the strand next to region 0.
    ///
    /// Panics when the rightmost weight has the wrong parity for N.
    pub fn new(n: u32, n0: i64, strands: Vec<Strand>, shift: i64) -> Self {
        assert!(
            (n0 + n as i64) % 2 == 0,
            "weight parity does not match the ambient dimension"
        );
        BimSignature {
            n,
            n0,
            strands,
            shift,
        }
    }

    /// Builds a signature from a pattern string in visual order, leftmost
    /// strand first ("EF" has F as the rightmost strand).
    pub fn from_pattern(n: u32, pattern: &str, n0: i64, shift: i64) -> Self {
        let strands = pattern
            .chars()
            .rev()
            .map(|c| match c {
                'E' => Strand::E,
                'F' => Strand::F,
                _ => panic!("pattern characters must be E or F"),
            })
            .collect();
        Self::new(n, n0, strands, shift)
    }

    /// Ambient dimension N.
    pub fn ambient(&self) -> u32 {
        self.n
    }

    /// Weight of region 0, the rightmost region.
    pub fn weight0(&self) -> i64 {
        self.n0
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn with_shift(&self, shift: i64) -> Self {
        let mut sig = self.clone();
        sig.shift = shift;
        sig
    }

    pub fn num_strands(&self) -> usize {
        self.strands.len()
    }

    /// Orientation of the 1-based strand counted from the right.
    pub fn strand_kind(&self, strand: usize) -> Strand {
        self.strands[strand - 1]
    }

    /// Pattern string in visual order, leftmost strand first.
    pub fn pattern(&self) -> String {
        self.strands
            .iter()
            .rev()
            .map(|s| match s {
                Strand::E => 'E',
                Strand::F => 'F',
            })
            .collect()
    }

    /// Flag step at a region; region r sits left of strand r.  The value may
    /// leave [0, N], which marks the zero bimodule.
    pub fn region_value(&self, region: usize) -> i64 {
        let mut k = (self.n0 + self.n as i64) / 2;
        for strand in &self.strands[..region] {
            k += match strand {
                Strand::E => 1,
                Strand::F => -1,
            };
        }
        k
    }

    /// Weight 2k - N at a region.
    pub fn region_weight(&self, region: usize) -> i64 {
        2 * self.region_value(region) - self.n as i64
    }

    /// True when some region leaves the flag range, so the bimodule is zero.
    pub fn is_zero_object(&self) -> bool {
        (0..=self.strands.len()).any(|r| {
            let k = self.region_value(r);
            k < 0 || k > self.n as i64
        })
    }

    /// Largest reduced power of the dumbbell on a strand; negative exactly
    /// when an adjacent region leaves the flag range.
    pub fn cap(&self, strand: usize) -> i64 {
        let right = self.region_value(strand - 1);
        match self.strand_kind(strand) {
            Strand::E => self.n as i64 - right - 1,
            Strand::F => right - 1,
        }
    }

    /// Total grading shift of the bimodule: the formal shift plus the
    /// per-strand contributions of the flag construction.
    pub fn gamma_shift(&self) -> i64 {
        let mut total = self.shift;
        for strand in 1..=self.strands.len() {
            let right = self.region_value(strand - 1);
            total += match self.strand_kind(strand) {
                Strand::E => 1 - self.n as i64 + right,
                Strand::F => 1 - right,
            };
        }
        total
    }

    fn with_pair_removed(&self, pos: usize) -> Self {
        let mut strands = self.strands.clone();
        strands.remove(pos);
        strands.remove(pos);
        BimSignature {
            n: self.n,
            n0: self.n0,
            strands,
            shift: self.shift,
        }
    }

    fn with_pair_inserted(&self, pos: usize, kind: PairKind) -> Self {
        let (left, right) = match kind {
            PairKind::EF => (Strand::E, Strand::F),
            PairKind::FE => (Strand::F, Strand::E),
        };
        let mut strands = self.strands.clone();
        strands.insert(pos, right);
        strands.insert(pos + 1, left);
        BimSignature {
            n: self.n,
            n0: self.n0,
            strands,
            shift: self.shift,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "N": self.n,
            "n0": self.n0,
            "strands": self.pattern(),
            "shift": self.shift,
        })
    }
}

/// Reduced dumbbell power on a strand: N - k - 1 on an E strand and k - 1 on
/// an F strand, for k the value of the region to its right.
pub fn xi_cap(sig: &BimSignature, strand: usize) -> Result<u32, FlagError> {
    if sig.is_zero_object() {
        return Err(FlagError::ZeroObject);
    }
    Ok(sig.cap(strand) as u32)
}

/// Rewriting rule for the first unreduced dumbbell power on a strand:
/// the returned triples (power, sign, class) say that the power one past the
/// cap equals the signed sum of `class` (a ring generator of the region right
/// of the strand) times the lower dumbbell powers.
pub fn xi_reduce(sig: &BimSignature, strand: usize) -> Result<Vec<(u32, i64, Gen)>, FlagError> {
    let cap = xi_cap(sig, strand)?;
    let top = cap + 1;
    let rule = (1..=top)
        .map(|j| {
            let sign = if j % 2 == 1 { 1 } else { -1 };
            let class = match sig.strand_kind(strand) {
                Strand::E => Gen::Y(j),
                Strand::F => Gen::X(j),
            };
            (top - j, sign, class)
        })
        .collect();
    Ok(rule)
}

/// Expands a ring generator at a region into normal-form contributions:
/// dumbbell exponent additions on the strands to its right (index t is strand
/// t + 1) together with a sign and an optional generator of region 0.
fn expand_class(sig: &BimSignature, region: usize, class: Gen) -> Vec<(Vec<u32>, i64, Option<Gen>)> {
    match class {
        Gen::X(0) | Gen::Y(0) => return vec![(vec![0; region], 1, None)],
        Gen::X(j) => {
            if j as i64 > sig.region_value(region) {
                return Vec::new();
            }
        }
        Gen::Y(l) => {
            if l as i64 > sig.ambient() as i64 - sig.region_value(region) {
                return Vec::new();
            }
        }
    }
    if region == 0 {
        return vec![(Vec::new(), 1, Some(class))];
    }
    // Whitney relations across the strand between this region and the next
    // one to the right: the subbundle grows along an E strand and shrinks
    // along an F strand, giving a binomial rule one way and a geometric
    // alternating rule the other way.
    let pieces: Vec<(u32, i64, Gen)> = match (sig.strand_kind(region), class) {
        (Strand::E, Gen::X(j)) => vec![(0, 1, Gen::X(j)), (1, 1, Gen::X(j - 1))],
        (Strand::F, Gen::Y(l)) => vec![(0, 1, Gen::Y(l)), (1, 1, Gen::Y(l - 1))],
        (Strand::E, Gen::Y(l)) => (0..=l)
            .map(|i| (l - i, if (l - i) % 2 == 0 { 1 } else { -1 }, Gen::Y(i)))
            .collect(),
        (Strand::F, Gen::X(j)) => (0..=j)
            .map(|i| (j - i, if (j - i) % 2 == 0 { 1 } else { -1 }, Gen::X(i)))
            .collect(),
    };
    let mut out = Vec::new();
    for (power, sign, inner) in pieces {
        for (mut adds, inner_sign, gen) in expand_class(sig, region - 1, inner) {
            adds.push(power);
            out.push((adds, sign * inner_sign, gen));
        }
    }
    out
}

/// An element of an iterated flag bimodule, stored as a free module over the
/// rightmost ring: dumbbell exponents below their caps (rightmost strand
/// first) with coefficients in H*(Gr(k0, N)).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BimElement {
    sig: BimSignature,
    terms: BTreeMap<Vec<u32>, GrElement>,
}

impl BimElement {
    pub fn zero(sig: BimSignature) -> Self {
        BimElement {
            sig,
            terms: BTreeMap::new(),
        }
    }

    /// The generator 1 of the bimodule; zero for a zero-object signature.
    pub fn one(sig: BimSignature) -> Self {
        let exps = vec![0; sig.num_strands()];
        Self::monomial(sig, exps, None)
    }

    /// A single dumbbell monomial with an optional coefficient, normalized.
    pub fn monomial(sig: BimSignature, exps: Vec<u32>, coeff: Option<GrElement>) -> Self {
        assert_eq!(exps.len(), sig.num_strands(), "one exponent per strand");
        if sig.is_zero_object() {
            return Self::zero(sig);
        }
        let k0 = sig.region_value(0) as u32;
        let coeff = coeff.unwrap_or_else(|| GrElement::one(k0, sig.ambient()));
        assert_eq!(
            (coeff.k(), coeff.ambient()),
            (k0, sig.ambient()),
            "coefficient ring mismatch"
        );
        let terms = normalize_raw(&sig, vec![(exps, coeff)]);
        BimElement { sig, terms }
    }

    pub fn sig(&self) -> &BimSignature {
        &self.sig
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &GrElement)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[u32]) -> GrElement {
        let k0 = self.sig.region_value(0).max(0) as u32;
        self.terms
            .get(exps)
            .cloned()
            .unwrap_or_else(|| GrElement::zero(k0, self.sig.ambient()))
    }

    pub fn scaled(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.sig.clone());
        }
        let terms = self
            .terms
            .iter()
            .map(|(exps, v)| (exps.clone(), v.scaled(c)))
            .collect();
        BimElement {
            sig: self.sig.clone(),
            terms,
        }
    }

    /// Degree including the grading shift, `None` for zero or mixed terms.
    pub fn homogeneous_degree(&self) -> Option<i64> {
        let mut degrees = self.terms.iter().map(|(exps, coeff)| {
            coeff
                .homogeneous_degree()
                .map(|d| d + 2 * exps.iter().map(|&e| e as i64).sum::<i64>())
        });
        let first = degrees.next()??;
        degrees
            .all(|d| d == Some(first))
            .then_some(first + self.sig.gamma_shift())
    }

    /// Multiplies by a ring generator of the given region, pushing it into
    /// normal form.
    pub fn mul_region_class(&self, region: usize, class: Gen) -> Self {
        assert!(region <= self.sig.num_strands(), "region out of range");
        let mut raw = Vec::new();
        for (exps, coeff) in &self.terms {
            push_class_terms(&self.sig, exps, coeff, region, class, 1, &mut raw);
        }
        self.rebuilt(raw)
    }

    /// Multiplies by the dumbbell of a strand (1-based from the right).
    pub fn apply_dot(&self, strand: usize) -> Self {
        assert!(
            (1..=self.sig.num_strands()).contains(&strand),
            "strand out of range"
        );
        let raw = self
            .terms
            .iter()
            .map(|(exps, coeff)| {
                let mut exps = exps.clone();
                exps[strand - 1] += 1;
                (exps, coeff.clone())
            })
            .collect();
        self.rebuilt(raw)
    }

    /// Divided difference in the dumbbells of strands `strand` and
    /// `strand + 1`, negated on a pair of F strands.
    pub fn apply_cross(&self, strand: usize) -> Result<Self, FlagError> {
        assert!(
            strand >= 1 && strand + 1 <= self.sig.num_strands(),
            "strand out of range"
        );
        let kind = self.sig.strand_kind(strand);
        if kind != self.sig.strand_kind(strand + 1) {
            return Err(FlagError::OrientationMismatch);
        }
        let flip = kind == Strand::F;
        let mut raw = Vec::new();
        for (exps, coeff) in &self.terms {
            let right = exps[strand - 1];
            let left = exps[strand];
            let top = (left + right).max(1) - 1;
            let mut emit = |j: u32, negate: bool| {
                let mut exps = exps.clone();
                exps[strand - 1] = j;
                exps[strand] = top - j;
                let coeff = if negate != flip {
                    -coeff.clone()
                } else {
                    coeff.clone()
                };
                raw.push((exps, coeff));
            };
            for j in 0..left {
                emit(j, false);
            }
            for j in 0..right {
                emit(j, true);
            }
        }
        Ok(self.rebuilt(raw))
    }

    /// Closes strands `pos + 1` and `pos + 2` with a cap of the given kind,
    /// leaving `pos` strands to the right.
    pub fn apply_cap(&self, pos: usize, kind: PairKind) -> Result<Self, FlagError> {
        assert!(pos + 2 <= self.sig.num_strands(), "cap out of range");
        let (want_left, want_right) = match kind {
            PairKind::EF => (Strand::E, Strand::F),
            PairKind::FE => (Strand::F, Strand::E),
        };
        if self.sig.strand_kind(pos + 1) != want_right || self.sig.strand_kind(pos + 2) != want_left
        {
            return Err(FlagError::OrientationMismatch);
        }
        let new_sig = self.sig.with_pair_removed(pos);
        let k = self.sig.region_value(pos);
        let mut raw = Vec::new();
        if !new_sig.is_zero_object() {
            for (exps, coeff) in &self.terms {
                let dots = (exps[pos] + exps[pos + 1]) as i64;
                let idx = match kind {
                    PairKind::FE => dots + k - self.sig.ambient() as i64 + 1,
                    PairKind::EF => dots + 1 - k,
                };
                if idx < 0 {
                    continue;
                }
                let class = match kind {
                    PairKind::FE => Gen::X(idx as u32),
                    PairKind::EF => Gen::Y(idx as u32),
                };
                let sign = if idx % 2 == 0 { 1 } else { -1 };
                let mut exps = exps.clone();
                exps.remove(pos);
                exps.remove(pos);
                push_class_terms(&new_sig, &exps, coeff, pos, class, sign, &mut raw);
            }
        }
        let terms = normalize_raw(&new_sig, raw);
        Ok(BimElement {
            sig: new_sig,
            terms,
        })
    }

    /// Inserts a cup of the given kind leaving `pos` strands to its right.
    pub fn apply_cup(&self, pos: usize, kind: PairKind) -> Self {
        assert!(pos <= self.sig.num_strands(), "cup out of range");
        let new_sig = self.sig.with_pair_inserted(pos, kind);
        let n_amb = self.sig.ambient() as i64;
        let k = self.sig.region_value(pos);
        let mut raw = Vec::new();
        if !new_sig.is_zero_object() {
            for (exps, coeff) in &self.terms {
                let mut base = exps.clone();
                base.insert(pos, 0);
                base.insert(pos + 1, 0);
                match kind {
                    // Creates F (left, slot pos + 1) and E (right, slot pos):
                    // sum of x classes of the middle region spread over both
                    // dumbbells.
                    PairKind::FE => {
                        for l in 0..=k.max(0) as u32 {
                            for j in 0..=(k.max(0) as u32 - l) {
                                let mut exps = base.clone();
                                exps[pos] += j;
                                exps[pos + 1] += k.max(0) as u32 - l - j;
                                let sign = if l % 2 == 0 { 1 } else { -1 };
                                push_class_terms(
                                    &new_sig,
                                    &exps,
                                    coeff,
                                    pos + 1,
                                    Gen::X(l),
                                    sign,
                                    &mut raw,
                                );
                            }
                        }
                    }
                    // Creates E (left) and F (right): y classes of the middle
                    // region instead.
                    PairKind::EF => {
                        let cap = (n_amb - k).max(0) as u32;
                        for l in 0..=cap {
                            for j in 0..=(cap - l) {
                                let mut exps = base.clone();
                                exps[pos] += j;
                                exps[pos + 1] += cap - l - j;
                                let sign = if l % 2 == 0 { 1 } else { -1 };
                                push_class_terms(
                                    &new_sig,
                                    &exps,
                                    coeff,
                                    pos + 1,
                                    Gen::Y(l),
                                    sign,
                                    &mut raw,
                                );
                            }
                        }
                    }
                }
            }
        }
        let terms = normalize_raw(&new_sig, raw);
        BimElement {
            sig: new_sig,
            terms,
        }
    }

    /// The cup image in its one-sum form, with classes in the region to the
    /// right of the new pair; agrees with `apply_cup`.
    pub fn apply_cup_single_sum(&self, pos: usize, kind: PairKind) -> Self {
        assert!(pos <= self.sig.num_strands(), "cup out of range");
        let new_sig = self.sig.with_pair_inserted(pos, kind);
        let n_amb = self.sig.ambient() as i64;
        let k = self.sig.region_value(pos);
        let mut raw = Vec::new();
        if !new_sig.is_zero_object() {
            for (exps, coeff) in &self.terms {
                let mut base = exps.clone();
                base.insert(pos, 0);
                base.insert(pos + 1, 0);
                match kind {
                    PairKind::FE => {
                        for l in 0..=k.max(0) as u32 {
                            let mut exps = base.clone();
                            exps[pos + 1] += k.max(0) as u32 - l;
                            let sign = if l % 2 == 0 { 1 } else { -1 };
                            push_class_terms(&new_sig, &exps, coeff, pos, Gen::X(l), sign, &mut raw);
                        }
                    }
                    PairKind::EF => {
                        let cap = (n_amb - k).max(0) as u32;
                        for l in 0..=cap {
                            let mut exps = base.clone();
                            exps[pos + 1] += cap - l;
                            let sign = if l % 2 == 0 { 1 } else { -1 };
                            push_class_terms(&new_sig, &exps, coeff, pos, Gen::Y(l), sign, &mut raw);
                        }
                    }
                }
            }
        }
        let terms = normalize_raw(&new_sig, raw);
        BimElement {
            sig: new_sig,
            terms,
        }
    }

    fn rebuilt(&self, raw: Vec<(Vec<u32>, GrElement)>) -> Self {
        let terms = normalize_raw(&self.sig, raw);
        BimElement {
            sig: self.sig.clone(),
            terms,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(exps, coeff)| {
                let schur: serde_json::Map<String, serde_json::Value> = coeff
                    .terms()
                    .map(|(shape, c)| (shape.to_string(), serde_json::Value::String(c.to_string())))
                    .collect();
                serde_json::json!({ "xi": exps, "schur": schur })
            })
            .collect();
        serde_json::json!({
            "sig": self.sig.to_json(),
            "terms": terms,
        })
    }
}

/// Forms the normal-form contributions of `coeff * xi^exps * class(region)`,
/// scaled by `sign`, and appends them to `raw`.
fn push_class_terms(
    sig: &BimSignature,
    exps: &[u32],
    coeff: &GrElement,
    region: usize,
    class: Gen,
    sign: i64,
    raw: &mut Vec<(Vec<u32>, GrElement)>,
) {
    for (adds, s, gen) in expand_class(sig, region, class) {
        let mut exps = exps.to_vec();
        for (slot, add) in adds.iter().enumerate() {
            exps[slot] += add;
        }
        let mut coeff = coeff.scaled(&BigRational::from_integer(BigInt::from(sign * s)));
        if let Some(gen) = gen {
            coeff = coeff.mul_gen(gen);
        }
        if !coeff.is_zero() {
            raw.push((exps, coeff));
        }
    }
}

/// Reduces raw terms to the free-module normal form: every dumbbell exponent
/// strictly within its cap, rewriting overflow via the strand relations and
/// pushing the produced region classes to region 0.
fn normalize_raw(
    sig: &BimSignature,
    mut work: Vec<(Vec<u32>, GrElement)>,
) -> BTreeMap<Vec<u32>, GrElement> {
    let mut out = BTreeMap::new();
    if sig.is_zero_object() {
        return out;
    }
    let caps: Vec<u32> = (1..=sig.num_strands())
        .map(|s| sig.cap(s) as u32)
        .collect();
    while let Some((exps, coeff)) = work.pop() {
        if coeff.is_zero() {
            continue;
        }
        let overflow = (0..exps.len()).find(|&i| exps[i] > caps[i]);
        let Some(i) = overflow else {
            match out.entry(exps) {
                Entry::Occupied(mut slot) => {
                    let merged = slot.get().clone() + coeff;
                    if merged.is_zero() {
                        slot.remove();
                    } else {
                        *slot.get_mut() = merged;
                    }
                }
                Entry::Vacant(slot) => {
                    slot.insert(coeff);
                }
            }
            continue;
        };
        // One rewriting step on the lowest overflowing strand: the power one
        // past the cap turns into region classes of the region to its right,
        // which expand toward region 0 adding only inner exponents.
        let top = caps[i] + 1;
        for j in 1..=top {
            let sign = if j % 2 == 1 { 1 } else { -1 };
            let class = match sig.strand_kind(i + 1) {
                Strand::E => Gen::Y(j),
                Strand::F => Gen::X(j),
            };
            let mut lowered = exps.clone();
            lowered[i] -= j;
            push_class_terms(sig, &lowered, &coeff, i, class, sign, &mut work);
        }
    }
    out
}

/// The image in H*(Gr(k, N)) of a bubble of the given orientation with `dots`
/// dots in a region of the given weight; zero in negative degree.
pub fn bubble_class(n: u32, weight: i64, orientation: Orientation, dots: i64) -> GrElement {
    assert!(
        (weight + n as i64) % 2 == 0,
        "weight parity does not match the ambient dimension"
    );
    let k = (weight + n as i64) / 2;
    assert!((0..=n as i64).contains(&k), "weight outside the flag range");
    let k = k as u32;
    let alpha = match orientation {
        Orientation::Clockwise => dots - weight + 1,
        Orientation::CounterClockwise => dots + weight + 1,
    };
    if alpha < 0 {
        return GrElement::zero(k, n);
    }
    let alpha = alpha as u32;
    let mut total = GrElement::zero(k, n);
    for l in 0..=alpha {
        let term = match orientation {
            Orientation::Clockwise => GrElement::one(k, n).mul_y(l).mul_y(alpha - l),
            Orientation::CounterClockwise => GrElement::one(k, n).mul_x(l).mul_x(alpha - l),
        };
        total += term;
    }
    if alpha % 2 == 1 {
        total = -total;
    }
    total
}

impl AddAssign for BimElement {
    fn add_assign(&mut self, rhs: BimElement) {
        assert_eq!(self.sig, rhs.sig, "elements of different bimodules");
        for (exps, coeff) in rhs.terms {
            match self.terms.entry(exps) {
                Entry::Occupied(mut slot) => {
                    let merged = slot.get().clone() + coeff;
                    if merged.is_zero() {
                        slot.remove();
                    } else {
                        *slot.get_mut() = merged;
                    }
                }
                Entry::Vacant(slot) => {
                    slot.insert(coeff);
                }
            }
        }
    }
}

impl Add for BimElement {
    type Output = BimElement;
    fn add(mut self, rhs: BimElement) -> BimElement {
        self += rhs;
        self
    }
}

impl Sub for BimElement {
    type Output = BimElement;
    fn sub(self, rhs: BimElement) -> BimElement {
        self + (-rhs)
    }
}

impl Neg for BimElement {
    type Output = BimElement;
    fn neg(mut self) -> BimElement {
        for coeff in self.terms.values_mut() {
            *coeff = -coeff.clone();
        }
        self
    }
}

impl fmt::Display for BimElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (exps, coeff)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let trivial = exps.iter().all(|&e| e == 0);
            if trivial {
                write!(f, "({coeff})")?;
            } else {
                let powers: Vec<String> = exps.iter().map(|e| e.to_string()).collect();
                write!(f, "xi({}) ({coeff})", powers.join(","))?;
            }
        }
        Ok(())
    }
}
