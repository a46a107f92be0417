//! Evaluation of 2-morphisms as maps between iterated flag bimodules.

use flag::{BimElement, BimSignature, Gen, Orientation};
use itertools::Itertools;

use crate::mor::{Slice, Term2, TwoMor};
use crate::DiagramError;

/// Multiplication by a dotted bubble in a region. The image is a signed sum
/// of generator pairs of total degree twice the bubble degree; bubbles of
/// negative degree act as zero.
fn apply_bubble(e: &BimElement, orient: Orientation, dots: i64, pos: usize) -> BimElement {
    let w = e.sig().region_weight(pos);
    let alpha = match orient {
        Orientation::Clockwise => dots - w + 1,
        Orientation::CounterClockwise => dots + w + 1,
    };
    if alpha < 0 {
        return BimElement::zero(e.sig().clone());
    }
    let gen = |j: i64| match orient {
        Orientation::Clockwise => Gen::Y(j as u32),
        Orientation::CounterClockwise => Gen::X(j as u32),
    };
    let mut out = BimElement::zero(e.sig().clone());
    for l in 0..=alpha {
        out += e
            .mul_region_class(pos, gen(l))
            .mul_region_class(pos, gen(alpha - l));
    }
    if alpha % 2 != 0 {
        out = out.scaled(&(-num_rational::BigRational::from_integer(1.into())));
    }
    out
}

fn apply_slice(e: BimElement, slice: &Slice) -> Result<BimElement, DiagramError> {
    match *slice {
        Slice::Dot { strand } => Ok(e.apply_dot(strand)),
        Slice::Cross { strand } => Ok(e.apply_cross(strand)?),
        Slice::Cup { kind, pos } => Ok(e.apply_cup(pos, kind)),
        Slice::Cap { kind, pos } => Ok(e.apply_cap(pos, kind)?),
        Slice::Bubble { orient, dots, pos } => Ok(apply_bubble(&e, orient, dots, pos)),
    }
}

fn eval_term_on(term: &Term2, input: &BimElement) -> Result<BimElement, DiagramError> {
    let mut e = input.clone();
    for s in &term.slices {
        e = apply_slice(e, s)?;
    }
    Ok(e)
}

/// The bimodule map a 2-morphism evaluates to in a fixed ambient dimension.
/// Grading shifts only move degrees, so the map is taken between the
/// unshifted columns.
pub struct GammaMap {
    ambient: u32,
    terms: Vec<Term2>,
    source_sig: BimSignature,
    target_sig: BimSignature,
}

impl GammaMap {
    pub fn new(two: &TwoMor, ambient: u32) -> Result<Self, DiagramError> {
        let source_sig = two.source().with_shift(0).signature(ambient)?;
        let target_sig = two.target().with_shift(0).signature(ambient)?;
        Ok(GammaMap {
            ambient,
            terms: two.terms().to_vec(),
            source_sig,
            target_sig,
        })
    }

    pub fn ambient(&self) -> u32 {
        self.ambient
    }

    pub fn source_signature(&self) -> &BimSignature {
        &self.source_sig
    }

    pub fn target_signature(&self) -> &BimSignature {
        &self.target_sig
    }

    /// Applies the map to an element of the source bimodule.
    pub fn apply(&self, input: &BimElement) -> Result<BimElement, DiagramError> {
        if input.sig() != &self.source_sig {
            return Err(DiagramError::BoundaryMismatch(format!(
                "input lives in {}, the map starts at {}",
                input.sig().pattern(),
                self.source_sig.pattern()
            )));
        }
        let mut out = BimElement::zero(self.target_sig.clone());
        for t in &self.terms {
            out += eval_term_on(t, input)?.scaled(&t.coeff);
        }
        Ok(out)
    }

    /// Images of the dumbbell-monomial generators of the source.
    pub fn generator_images(&self) -> Result<Vec<(Vec<u32>, BimElement)>, DiagramError> {
        generator_exponents(&self.source_sig)
            .into_iter()
            .map(|exps| {
                let gen = BimElement::monomial(self.source_sig.clone(), exps.clone(), None);
                self.apply(&gen).map(|img| (exps, img))
            })
            .collect()
    }

    /// True when every generator maps to zero.
    pub fn is_zero_map(&self) -> Result<bool, DiagramError> {
        Ok(self
            .generator_images()?
            .iter()
            .all(|(_, img)| img.is_zero()))
    }
}

/// Evaluates a 2-morphism in ambient dimension `ambient`.
pub fn eval(two: &TwoMor, ambient: u32) -> Result<GammaMap, DiagramError> {
    GammaMap::new(two, ambient)
}

/// Dumbbell exponent vectors generating the bimodule of a signature over its
/// rightmost ring, in increasing total degree. Empty for a zero object.
pub fn generator_exponents(sig: &BimSignature) -> Vec<Vec<u32>> {
    if sig.is_zero_object() {
        return Vec::new();
    }
    if sig.num_strands() == 0 {
        return vec![Vec::new()];
    }
    let ranges: Vec<Vec<u32>> = (1..=sig.num_strands())
        .map(|s| (0..=(sig.cap(s) as u32)).collect())
        .collect();
    let mut exps: Vec<Vec<u32>> = ranges.into_iter().multi_cartesian_product().collect();
    exps.sort_by_key(|e| e.iter().map(|&x| x as u64).sum::<u64>());
    exps
}

/// Whether two 2-morphisms with the same boundary evaluate to the same
/// bimodule map, in the given ambient dimension or an automatic one.
pub fn equal_under_gamma(
    a: &TwoMor,
    b: &TwoMor,
    ambient: Option<u32>,
) -> Result<bool, DiagramError> {
    if !a.source().same_column(b.source()) || !a.target().same_column(b.target()) {
        return Err(DiagramError::BoundaryMismatch(format!(
            "comparing {} -> {} with {} -> {}",
            a.source(),
            a.target(),
            b.source(),
            b.target()
        )));
    }
    let ambient = match ambient {
        Some(n) => n,
        None => auto_ambient(&[a, b])?,
    };
    let ga = GammaMap::new(a, ambient)?;
    let gb = GammaMap::new(b, ambient)?;
    for exps in generator_exponents(ga.source_signature()) {
        let gen = BimElement::monomial(ga.source_signature().clone(), exps, None);
        if ga.apply(&gen)? != gb.apply(&gen)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Smallest faithful ambient dimension for a family of diagrams: the least N
/// of the right parity exceeding every term's positive degree total plus the
/// largest absolute region weight it passes through.
pub fn auto_ambient(mors: &[&TwoMor]) -> Result<u32, DiagramError> {
    let first = mors
        .first()
        .ok_or_else(|| DiagramError::Parse("automatic ambient dimension needs a diagram".into()))?;
    let n0 = first.source().right_weight();
    let mut bound: i64 = 0;
    for m in mors {
        let column_max = |strands: &[flag::Strand], n: i64| {
            (0..=strands.len())
                .map(|r| crate::mor::region_weight_of(strands, n, r).abs())
                .max()
                .unwrap_or(n.abs())
        };
        bound = bound.max(column_max(m.source().strands(), m.source().right_weight()));
        bound = bound.max(column_max(m.target().strands(), m.target().right_weight()));
        for t in m.terms() {
            let n = m.source().right_weight();
            let mut strands = m.source().strands().to_vec();
            let mut dsum: i64 = 0;
            let mut wmax = column_max(&strands, n);
            for s in &t.slices {
                dsum += s.degree_at(&strands, n).max(0);
                s.apply_to(&mut strands)?;
                wmax = wmax.max(column_max(&strands, n));
            }
            bound = bound.max(dsum + wmax);
        }
    }
    let mut ambient = bound + 1;
    if (ambient + n0).rem_euclid(2) != 0 {
        ambient += 1;
    }
    Ok(ambient as u32)
}
