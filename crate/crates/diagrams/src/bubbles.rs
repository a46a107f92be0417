//! The bubble algebra: formal low-degree bubbles and reduction of closed
//! diagrams to polynomials in the canonical bubble generators.

use std::collections::BTreeMap;
use std::fmt;

use flag::{bubble_class, gr_mul, partitions_in_box, BimElement, GrElement, Orientation, Partition};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::eval::GammaMap;
use crate::linalg::{solve_unique, SolveOutcome, SparseEchelon};
use crate::{DiagramError, TwoMor};

/// A polynomial in the canonical bubble generators v_1, v_2, ... with
/// rational coefficients; v_j has degree 2j.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BubblePoly {
    terms: BTreeMap<Vec<u32>, BigRational>,
}

impl BubblePoly {
    pub fn zero() -> Self {
        BubblePoly::default()
    }

    pub fn one() -> Self {
        BubblePoly::monomial(Vec::new())
    }

    /// The monomial with the given multiset of generator indices.
    pub fn monomial(parts: Vec<u32>) -> Self {
        BubblePoly::term(BigRational::one(), parts)
    }

    pub fn term(coeff: BigRational, mut parts: Vec<u32>) -> Self {
        assert!(parts.iter().all(|&p| p > 0), "generator indices start at 1");
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(parts, coeff);
        }
        BubblePoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, parts: &[u32]) -> BigRational {
        let mut key = parts.to_vec();
        key.sort_unstable_by(|a, b| b.cmp(a));
        self.terms.get(&key).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Degree of the highest term, or None for zero.
    pub fn max_degree(&self) -> Option<i64> {
        self.terms
            .keys()
            .map(|parts| 2 * parts.iter().map(|&p| p as i64).sum::<i64>())
            .max()
    }

    pub fn scaled(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return BubblePoly::zero();
        }
        BubblePoly {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.clone(), v * c))
                .collect(),
        }
    }

    pub fn plus(&self, other: &BubblePoly) -> Self {
        let mut terms = self.terms.clone();
        for (k, v) in &other.terms {
            let entry = terms.entry(k.clone()).or_insert_with(BigRational::zero);
            *entry = &*entry + v;
            if entry.is_zero() {
                terms.remove(k);
            }
        }
        BubblePoly { terms }
    }

    pub fn times(&self, other: &BubblePoly) -> Self {
        let mut out = BubblePoly::zero();
        for (ka, va) in &self.terms {
            for (kb, vb) in &other.terms {
                let mut parts = ka.clone();
                parts.extend(kb.iter().copied());
                out = out.plus(&BubblePoly::term(va * vb, parts));
            }
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(parts, coeff)| {
                serde_json::json!({
                    "coeff": coeff.to_string(),
                    "generators": parts,
                })
            })
            .collect();
        serde_json::json!({ "terms": terms })
    }
}

impl fmt::Display for BubblePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (parts, coeff)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if parts.is_empty() {
                write!(f, "{coeff}")?;
                continue;
            }
            if !coeff.is_one() {
                write!(f, "{coeff}*")?;
            }
            let mut run = 0;
            for (j, &p) in parts.iter().enumerate() {
                run += 1;
                let last_of_run = parts.get(j + 1) != Some(&p);
                if last_of_run {
                    if j + 1 > run {
                        write!(f, " ")?;
                    }
                    write!(f, "v{p}")?;
                    if run > 1 {
                        write!(f, "^{run}")?;
                    }
                    run = 0;
                }
            }
        }
        Ok(())
    }
}

/// The degree-2j formal bubble at weight n expanded as a polynomial in the
/// honest bubbles of the opposite orientation; defined for 0 <= j <= |n|.
pub fn fake_bubble_poly(n: i64, j: u32) -> Result<BubblePoly, DiagramError> {
    if (j as i64) > n.abs() {
        return Err(DiagramError::FakeBubbleRange { weight: n, j });
    }
    let mut layers: Vec<BubblePoly> = vec![BubblePoly::one()];
    for m in 1..=j {
        let mut f = BubblePoly::zero();
        for l in 1..=m {
            f = f.plus(&layers[(m - l) as usize].times(&BubblePoly::monomial(vec![l])));
        }
        layers.push(f.scaled(&-BigRational::one()));
    }
    Ok(layers.pop().expect("layer 0 exists"))
}

/// The canonical degree-2j bubble generator at weight n as a single slice:
/// counterclockwise for n >= 0 and clockwise for n < 0, in region `pos`.
pub fn v_bubble_slice(n: i64, j: u32, pos: usize) -> crate::Slice {
    if n >= 0 {
        crate::Slice::Bubble {
            orient: Orientation::CounterClockwise,
            dots: -n - 1 + j as i64,
            pos,
        }
    } else {
        crate::Slice::Bubble {
            orient: Orientation::Clockwise,
            dots: n - 1 + j as i64,
            pos,
        }
    }
}

/// Image of the canonical degree-2j bubble generator at weight n in the
/// cohomology of the single Grassmannian it encircles.
pub fn v_bubble_image(ambient: u32, n: i64, j: u32) -> GrElement {
    if n >= 0 {
        bubble_class(ambient, n, Orientation::CounterClockwise, -n - 1 + j as i64)
    } else {
        bubble_class(ambient, n, Orientation::Clockwise, n - 1 + j as i64)
    }
}

pub(crate) fn partitions_of(d: u32) -> Vec<Vec<u32>> {
    fn go(rest: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            prefix.push(part);
            go(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(d, d, &mut Vec::new(), &mut out);
    out
}

/// Per-degree rank of the span of bubble-monomial images inside the flag
/// cohomology, against the full dimension of that degree. Rows are
/// (degree, rank, dimension) for degrees up to min(k, N-k).
pub fn bubble_span_check(ambient: u32, k: u32) -> Vec<(u32, usize, usize)> {
    assert!(k <= ambient, "flag index exceeds the ambient dimension");
    let n = 2 * k as i64 - ambient as i64;
    let box_shapes = partitions_in_box(k, ambient - k);
    let mut rows = Vec::new();
    for d in 0..=k.min(ambient - k) {
        let mut echelon = SparseEchelon::new();
        let mut rank = 0;
        for parts in partitions_of(d) {
            let image = parts.iter().fold(GrElement::one(k, ambient), |acc, &p| {
                gr_mul(&acc, &v_bubble_image(ambient, n, p))
            });
            let row: BTreeMap<Vec<u32>, BigRational> = image
                .terms()
                .map(|(shape, c)| (shape.parts().to_vec(), c.clone()))
                .collect();
            if echelon.insert(row) {
                rank += 1;
            }
        }
        let dim = box_shapes.iter().filter(|s| s.size() == d).count();
        rows.push((d, rank, dim));
    }
    rows
}

/// Smallest ambient dimension whose flag box separates every bubble
/// monomial that can appear in the reduction of the diagram.
pub fn closed_auto_ambient(a: &TwoMor) -> Result<u32, DiagramError> {
    if !a.source().is_unit() || !a.target().is_unit() {
        return Err(DiagramError::NotClosed(format!(
            "boundary {} -> {}",
            a.source(),
            a.target()
        )));
    }
    let n = a.source().right_weight();
    let degree = a.term_degrees()?.into_iter().max().unwrap_or(0).max(0);
    let mut ambient = degree + n.abs();
    while ambient < 2 {
        ambient += 2;
    }
    Ok(ambient as u32)
}

/// Expresses a closed diagram as a polynomial in the canonical bubble
/// generators by matching its evaluation degree by degree.
pub fn closed_to_bubbles(a: &TwoMor, ambient: u32) -> Result<BubblePoly, DiagramError> {
    if !a.source().is_unit() || !a.target().is_unit() {
        return Err(DiagramError::NotClosed(format!(
            "boundary {} -> {}",
            a.source(),
            a.target()
        )));
    }
    let n = a.source().right_weight();
    let map = GammaMap::new(a, ambient)?;
    if map.source_signature().is_zero_object() {
        return Err(DiagramError::UnsolvableReduction {
            ambient,
            detail: format!("weight {n} lies outside the flag range"),
        });
    }
    let image = map.apply(&BimElement::one(map.source_signature().clone()))?;
    let h = image.coeff(&[]);

    let mut by_degree: BTreeMap<u32, Vec<(Partition, BigRational)>> = BTreeMap::new();
    for (shape, coeff) in h.terms() {
        by_degree
            .entry(shape.size())
            .or_default()
            .push((shape.clone(), coeff.clone()));
    }

    let mut out = BubblePoly::zero();
    for (&d, component) in &by_degree {
        if d == 0 {
            let c = component
                .iter()
                .fold(BigRational::zero(), |acc, (_, coeff)| &acc + coeff);
            out = out.plus(&BubblePoly::term(c, Vec::new()));
            continue;
        }
        let monomials = partitions_of(d);
        let images: Vec<GrElement> = monomials
            .iter()
            .map(|parts| {
                parts.iter().fold(
                    GrElement::one(h.k(), h.ambient()),
                    |acc, &part| gr_mul(&acc, &v_bubble_image(ambient, n, part)),
                )
            })
            .collect();
        let shapes: Vec<Partition> = {
            let mut shapes: Vec<Partition> = images
                .iter()
                .flat_map(|img| img.terms().map(|(s, _)| s.clone()))
                .chain(component.iter().map(|(s, _)| s.clone()))
                .collect();
            shapes.sort();
            shapes.dedup();
            shapes
        };
        let mat: Vec<Vec<BigRational>> = shapes
            .iter()
            .map(|shape| images.iter().map(|img| img.coeff(shape)).collect())
            .collect();
        let rhs: Vec<BigRational> = shapes
            .iter()
            .map(|shape| {
                component
                    .iter()
                    .find(|(s, _)| s == shape)
                    .map(|(_, c)| c.clone())
                    .unwrap_or_else(BigRational::zero)
            })
            .collect();
        match solve_unique(mat, rhs) {
            SolveOutcome::Unique(x) => {
                for (parts, coeff) in monomials.into_iter().zip(x) {
                    out = out.plus(&BubblePoly::term(coeff, parts));
                }
            }
            SolveOutcome::Inconsistent => {
                return Err(DiagramError::UnsolvableReduction {
                    ambient,
                    detail: format!("no degree-{} bubble polynomial has this evaluation", 2 * d),
                })
            }
            SolveOutcome::Underdetermined => {
                return Err(DiagramError::UnsolvableReduction {
                    ambient,
                    detail: format!(
                        "several degree-{} bubble polynomials share this evaluation",
                        2 * d
                    ),
                })
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    #[test]
    fn low_formal_bubbles() {
        assert_eq!(fake_bubble_poly(3, 0).unwrap(), BubblePoly::one());
        assert_eq!(
            fake_bubble_poly(3, 1).unwrap(),
            BubblePoly::term(r(-1), vec![1])
        );
        let f2 = fake_bubble_poly(3, 2).unwrap();
        assert_eq!(f2.coeff(&[1, 1]), r(1));
        assert_eq!(f2.coeff(&[2]), r(-1));
        let f3 = fake_bubble_poly(-3, 3).unwrap();
        assert_eq!(f3.coeff(&[1, 1, 1]), r(-1));
        assert_eq!(f3.coeff(&[2, 1]), r(2));
        assert_eq!(f3.coeff(&[3]), r(-1));
        assert!(fake_bubble_poly(2, 3).is_err());
    }

    #[test]
    fn bubble_poly_ring_ops() {
        let p = BubblePoly::monomial(vec![1]).plus(&BubblePoly::term(r(2), vec![2]));
        let q = BubblePoly::monomial(vec![1]);
        let pq = p.times(&q);
        assert_eq!(pq.coeff(&[1, 1]), r(1));
        assert_eq!(pq.coeff(&[2, 1]), r(2));
        assert_eq!(p.plus(&p.scaled(&r(-1))), BubblePoly::zero());
    }

    #[test]
    fn partitions_enumerator() {
        assert_eq!(partitions_of(4).len(), 5);
        assert_eq!(partitions_of(0), vec![Vec::<u32>::new()]);
    }

    #[test]
    fn single_bubble_reduces_to_its_generator() {
        let n = 2;
        let two = TwoMor::stack(crate::OneMor::unit(n), 1, vec![v_bubble_slice(n, 2, 0)]).unwrap();
        let poly = closed_to_bubbles(&two, 8).unwrap();
        assert_eq!(poly, BubblePoly::monomial(vec![2]));
    }

    #[test]
    fn bubble_images_span_small_grassmannians() {
        for (ambient, k) in [(4u32, 2u32), (5, 2), (6, 3)] {
            for (d, rank, dim) in bubble_span_check(ambient, k) {
                assert_eq!(rank, dim, "N={ambient} k={k} degree {d}");
            }
        }
    }
}
