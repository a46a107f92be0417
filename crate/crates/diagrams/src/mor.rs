//! 1-morphisms as strand patterns and 2-morphisms as vertical slice stacks.

use std::fmt;

use flag::{BimSignature, Orientation, PairKind, Strand};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::DiagramError;

/// Weight of the region with `region` strands to its right.
pub(crate) fn region_weight_of(strands: &[Strand], n: i64, region: usize) -> i64 {
    let delta: i64 = strands[..region]
        .iter()
        .map(|s| match s {
            Strand::E => 2,
            Strand::F => -2,
        })
        .sum();
    n + delta
}

/// A horizontal composite of E and F letters with a grading shift.
///
/// Strands are stored right to left: index 0 is the rightmost letter, and
/// `n` is the weight of the region to its right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OneMor {
    strands: Vec<Strand>,
    n: i64,
    shift: i64,
}

impl OneMor {
    pub fn new(strands: Vec<Strand>, n: i64, shift: i64) -> Self {
        OneMor { strands, n, shift }
    }

    /// Builds from a pattern in visual order, so "EF" has F as strand 1.
    pub fn from_pattern(pattern: &str, n: i64) -> Result<Self, DiagramError> {
        let mut strands = Vec::with_capacity(pattern.len());
        for c in pattern.chars().rev() {
            match c {
                'E' => strands.push(Strand::E),
                'F' => strands.push(Strand::F),
                _ => {
                    return Err(DiagramError::Parse(format!(
                        "pattern may contain only E and F, found {c:?}"
                    )))
                }
            }
        }
        Ok(OneMor::new(strands, n, 0))
    }

    /// The empty composite at weight `n`.
    pub fn unit(n: i64) -> Self {
        OneMor::new(Vec::new(), n, 0)
    }

    pub fn with_shift(&self, shift: i64) -> Self {
        OneMor { shift, ..self.clone() }
    }

    pub fn num_strands(&self) -> usize {
        self.strands.len()
    }

    pub fn is_unit(&self) -> bool {
        self.strands.is_empty()
    }

    /// Letter of the 1-based strand counted from the right.
    pub fn strand_kind(&self, strand: usize) -> Strand {
        self.strands[strand - 1]
    }

    pub(crate) fn strands(&self) -> &[Strand] {
        &self.strands
    }

    /// Pattern in visual order.
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

    pub fn right_weight(&self) -> i64 {
        self.n
    }

    pub fn left_weight(&self) -> i64 {
        region_weight_of(&self.strands, self.n, self.strands.len())
    }

    /// Weight of the region with `region` strands to its right.
    pub fn region_weight(&self, region: usize) -> i64 {
        region_weight_of(&self.strands, self.n, region)
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    /// Same pattern and weight, ignoring the shift.
    pub fn same_column(&self, other: &OneMor) -> bool {
        self.strands == other.strands && self.n == other.n
    }

    /// The cohomology bimodule column this picks out in ambient dimension `ambient`.
    pub fn signature(&self, ambient: u32) -> Result<BimSignature, DiagramError> {
        if (self.n + ambient as i64).rem_euclid(2) != 0 {
            return Err(DiagramError::ParityMismatch {
                weight: self.n,
                ambient,
            });
        }
        Ok(BimSignature::new(
            ambient,
            self.n,
            self.strands.clone(),
            self.shift,
        ))
    }
}

impl fmt::Display for OneMor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.strands.is_empty() {
            write!(f, "{}", self.pattern())?;
        }
        write!(f, "1_{{{}}}", self.n)?;
        if self.shift != 0 {
            write!(f, "{{{}}}", self.shift)?;
        }
        Ok(())
    }
}

/// One level of a diagram: a single generator at a definite position with
/// identity strands elsewhere. Strand and region positions count from the right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Slice {
    /// Dot on a strand.
    Dot { strand: usize },
    /// Crossing of a strand with its left neighbour; both must carry the same letter.
    Cross { strand: usize },
    /// Birth of an oriented strand pair with `pos` strands to its right.
    Cup { kind: PairKind, pos: usize },
    /// Death of the adjacent strand pair at positions `pos + 1`, `pos + 2`.
    Cap { kind: PairKind, pos: usize },
    /// Closed dotted circle in the region with `pos` strands to its right.
    /// Negative dot counts denote the formal bubbles of low degree.
    Bubble {
        orient: Orientation,
        dots: i64,
        pos: usize,
    },
}

/// Letters of a cup or cap pair in visual order (left member, right member).
pub(crate) fn pair_letters(kind: PairKind) -> (Strand, Strand) {
    match kind {
        PairKind::EF => (Strand::E, Strand::F),
        PairKind::FE => (Strand::F, Strand::E),
    }
}

impl Slice {
    /// Rewrites the strand column below this slice into the one above it.
    pub fn apply_to(&self, strands: &mut Vec<Strand>) -> Result<(), DiagramError> {
        let len = strands.len();
        let bad = |detail: String| Err(DiagramError::MalformedSlice(detail));
        match *self {
            Slice::Dot { strand } => {
                if strand == 0 || strand > len {
                    return bad(format!("dot on strand {strand} of {len}"));
                }
            }
            Slice::Cross { strand } => {
                if strand == 0 || strand + 1 > len {
                    return bad(format!("crossing at strand {strand} of {len}"));
                }
                if strands[strand - 1] != strands[strand] {
                    return bad(format!(
                        "crossing at strand {strand} joins strands of opposite orientation"
                    ));
                }
            }
            Slice::Cup { kind, pos } => {
                if pos > len {
                    return bad(format!("cup at position {pos} of {len}"));
                }
                let (left, right) = pair_letters(kind);
                strands.insert(pos, right);
                strands.insert(pos + 1, left);
            }
            Slice::Cap { kind, pos } => {
                if pos + 2 > len {
                    return bad(format!("cap at position {pos} of {len}"));
                }
                let (left, right) = pair_letters(kind);
                if strands[pos] != right || strands[pos + 1] != left {
                    return bad(format!(
                        "cap at position {pos} does not match the strand letters"
                    ));
                }
                strands.remove(pos + 1);
                strands.remove(pos);
            }
            Slice::Bubble { pos, .. } => {
                if pos > len {
                    return bad(format!("bubble in region {pos} of {len}"));
                }
            }
        }
        Ok(())
    }

    /// Degree contribution of this slice over the given strand column.
    pub fn degree_at(&self, strands: &[Strand], n: i64) -> i64 {
        match *self {
            Slice::Dot { .. } => 2,
            Slice::Cross { .. } => -2,
            Slice::Cup { kind, pos } | Slice::Cap { kind, pos } => {
                let w = region_weight_of(strands, n, pos);
                match kind {
                    PairKind::FE => 1 + w,
                    PairKind::EF => 1 - w,
                }
            }
            Slice::Bubble { orient, dots, pos } => {
                let w = region_weight_of(strands, n, pos);
                match orient {
                    Orientation::Clockwise => 2 * (dots - w + 1),
                    Orientation::CounterClockwise => 2 * (dots + w + 1),
                }
            }
        }
    }

    /// Same slice moved `by` strands to the left, for horizontal composition.
    pub(crate) fn shifted_left(&self, by: usize) -> Slice {
        match *self {
            Slice::Dot { strand } => Slice::Dot { strand: strand + by },
            Slice::Cross { strand } => Slice::Cross { strand: strand + by },
            Slice::Cup { kind, pos } => Slice::Cup { kind, pos: pos + by },
            Slice::Cap { kind, pos } => Slice::Cap { kind, pos: pos + by },
            Slice::Bubble { orient, dots, pos } => Slice::Bubble {
                orient,
                dots,
                pos: pos + by,
            },
        }
    }
}

/// One summand of a 2-morphism: a rational coefficient times a stack of
/// slices read bottom to top.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term2 {
    pub coeff: BigRational,
    pub slices: Vec<Slice>,
}

impl Term2 {
    pub fn new(coeff: BigRational, slices: Vec<Slice>) -> Self {
        Term2 { coeff, slices }
    }

    pub fn from_int(coeff: i64, slices: Vec<Slice>) -> Self {
        Term2::new(BigRational::from_integer(coeff.into()), slices)
    }
}

/// Pattern above a slice stack over the given source.
pub fn target_of_slices(source: &OneMor, slices: &[Slice]) -> Result<OneMor, DiagramError> {
    let mut strands = source.strands.clone();
    for s in slices {
        s.apply_to(&mut strands)?;
    }
    Ok(OneMor::new(strands, source.n, source.shift))
}

/// Degree of a single term over its source column.
pub fn term_degree(source: &OneMor, term: &Term2) -> Result<i64, DiagramError> {
    let mut strands = source.strands.clone();
    let mut deg = 0;
    for s in &term.slices {
        deg += s.degree_at(&strands, source.n);
        s.apply_to(&mut strands)?;
    }
    Ok(deg)
}

/// A 2-morphism: a formal rational combination of slice stacks sharing one
/// source and one target column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoMor {
    source: OneMor,
    target: OneMor,
    terms: Vec<Term2>,
}

impl TwoMor {
    /// Builds from terms, deriving the target from the first one. Zero
    /// coefficients are dropped; at least one term is required.
    pub fn new(source: OneMor, terms: Vec<Term2>) -> Result<Self, DiagramError> {
        let first = terms
            .first()
            .ok_or_else(|| DiagramError::Parse("no terms; use an explicit target".into()))?;
        let target = target_of_slices(&source, &first.slices)?;
        TwoMor::with_target(source, target, terms)
    }

    /// Builds with an explicit target; every term must reach its column.
    /// The target shift is taken as given, so source and target gradings
    /// may be shifted independently.
    pub fn with_target(
        source: OneMor,
        target: OneMor,
        terms: Vec<Term2>,
    ) -> Result<Self, DiagramError> {
        for t in &terms {
            let reached = target_of_slices(&source, &t.slices)?;
            if !reached.same_column(&target) {
                return Err(DiagramError::BoundaryMismatch(format!(
                    "term ends at {reached}, expected {target}"
                )));
            }
        }
        let terms = terms.into_iter().filter(|t| !t.coeff.is_zero()).collect();
        Ok(TwoMor {
            source,
            target,
            terms,
        })
    }

    /// The zero 2-morphism between the given columns.
    pub fn zero(source: OneMor, target: OneMor) -> Self {
        TwoMor {
            source,
            target,
            terms: Vec::new(),
        }
    }

    /// The identity stack on a column.
    pub fn identity(source: OneMor) -> Self {
        TwoMor {
            target: source.clone(),
            source,
            terms: vec![Term2::new(BigRational::one(), Vec::new())],
        }
    }

    /// A single slice stack with the given coefficient.
    pub fn single(
        source: OneMor,
        coeff: BigRational,
        slices: Vec<Slice>,
    ) -> Result<Self, DiagramError> {
        TwoMor::new(source, vec![Term2::new(coeff, slices)])
    }

    /// A single slice stack with an integer coefficient.
    pub fn stack(source: OneMor, coeff: i64, slices: Vec<Slice>) -> Result<Self, DiagramError> {
        TwoMor::new(source, vec![Term2::from_int(coeff, slices)])
    }

    pub fn source(&self) -> &OneMor {
        &self.source
    }

    pub fn target(&self) -> &OneMor {
        &self.target
    }

    pub fn terms(&self) -> &[Term2] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scaled(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return TwoMor::zero(self.source.clone(), self.target.clone());
        }
        TwoMor {
            source: self.source.clone(),
            target: self.target.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term2::new(&t.coeff * c, t.slices.clone()))
                .collect(),
        }
    }

    /// Formal sum; boundaries must agree.
    pub fn plus(&self, other: &TwoMor) -> Result<TwoMor, DiagramError> {
        if !self.source.same_column(&other.source) || !self.target.same_column(&other.target) {
            return Err(DiagramError::BoundaryMismatch(format!(
                "sum of maps {} -> {} and {} -> {}",
                self.source, self.target, other.source, other.target
            )));
        }
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        Ok(TwoMor {
            source: self.source.clone(),
            target: self.target.clone(),
            terms,
        })
    }

    pub fn minus(&self, other: &TwoMor) -> Result<TwoMor, DiagramError> {
        self.plus(&other.scaled(&-BigRational::one()))
    }

    /// Degrees of the terms in order.
    pub fn term_degrees(&self) -> Result<Vec<i64>, DiagramError> {
        self.terms
            .iter()
            .map(|t| term_degree(&self.source, t))
            .collect()
    }

    /// Term degrees as maps of shifted columns: the slice degree plus the
    /// target shift minus the source shift.
    pub fn net_degrees(&self) -> Result<Vec<i64>, DiagramError> {
        let offset = self.target.shift() - self.source.shift();
        Ok(self
            .term_degrees()?
            .into_iter()
            .map(|d| d + offset)
            .collect())
    }

    /// The common degree of all terms, or None if they disagree. The zero
    /// morphism is homogeneous of every degree and reports None as well.
    pub fn homogeneous_degree(&self) -> Result<Option<i64>, DiagramError> {
        let degs = self.term_degrees()?;
        match degs.split_first() {
            None => Ok(None),
            Some((d, rest)) if rest.iter().all(|e| e == d) => Ok(Some(*d)),
            _ => Ok(None),
        }
    }
}

impl fmt::Display for TwoMor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}: ", self.source, self.target)?;
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({})", t.coeff)?;
            if t.slices.is_empty() {
                write!(f, " id")?;
            }
            for s in &t.slices {
                match s {
                    Slice::Dot { strand } => write!(f, " dot({strand})")?,
                    Slice::Cross { strand } => write!(f, " cross({strand})")?,
                    Slice::Cup { kind, pos } => write!(f, " cup_{}({pos})", kind_str(*kind))?,
                    Slice::Cap { kind, pos } => write!(f, " cap_{}({pos})", kind_str(*kind))?,
                    Slice::Bubble { orient, dots, pos } => {
                        write!(f, " bubble_{}({dots};{pos})", orient_str(*orient))?
                    }
                }
            }
        }
        Ok(())
    }
}

fn kind_str(kind: PairKind) -> &'static str {
    match kind {
        PairKind::EF => "ef",
        PairKind::FE => "fe",
    }
}

fn orient_str(orient: Orientation) -> &'static str {
    match orient {
        Orientation::Clockwise => "cw",
        Orientation::CounterClockwise => "ccw",
    }
}

/// Vertical composite `top` after `bottom`.
pub fn compose_v(top: &TwoMor, bottom: &TwoMor) -> Result<TwoMor, DiagramError> {
    if !bottom.target.same_column(&top.source) {
        return Err(DiagramError::BoundaryMismatch(format!(
            "vertical composite of {} -> {} after {} -> {}",
            top.source, top.target, bottom.source, bottom.target
        )));
    }
    let mut terms = Vec::with_capacity(bottom.terms.len() * top.terms.len());
    for tb in &bottom.terms {
        for tt in &top.terms {
            let mut slices = tb.slices.clone();
            slices.extend(tt.slices.iter().cloned());
            terms.push(Term2::new(&tb.coeff * &tt.coeff, slices));
        }
    }
    Ok(TwoMor {
        source: bottom.source.clone(),
        target: top.target.clone(),
        terms,
    })
}

/// Horizontal composite with `left` drawn to the left of `right`; the right
/// weight of `left` must equal the left weight of `right`.
pub fn compose_h(left: &TwoMor, right: &TwoMor) -> Result<TwoMor, DiagramError> {
    if left.source.right_weight() != right.source.left_weight()
        || left.target.right_weight() != right.target.left_weight()
    {
        return Err(DiagramError::BoundaryMismatch(format!(
            "horizontal composite of {} -> {} beside {} -> {}",
            left.source, left.target, right.source, right.target
        )));
    }
    let glue = |l: &OneMor, r: &OneMor| {
        let mut strands = r.strands.clone();
        strands.extend(l.strands.iter().copied());
        OneMor::new(strands, r.n, l.shift + r.shift)
    };
    let source = glue(&left.source, &right.source);
    let target = glue(&left.target, &right.target);
    let offset = right.target.num_strands();
    let mut terms = Vec::with_capacity(left.terms.len() * right.terms.len());
    for tr in &right.terms {
        for tl in &left.terms {
            let mut slices = tr.slices.clone();
            slices.extend(tl.slices.iter().map(|s| s.shifted_left(offset)));
            terms.push(Term2::new(&tl.coeff * &tr.coeff, slices));
        }
    }
    TwoMor::with_target(source, target, terms)
}

/// Serializes to the diagram JSON dialect.
pub fn to_json(two: &TwoMor) -> serde_json::Value {
    let one_json = |m: &OneMor| {
        serde_json::json!({
            "pattern": m.pattern(),
            "n": m.n,
            "shift": m.shift,
        })
    };
    let slice_json = |s: &Slice| match s {
        Slice::Dot { strand } => serde_json::json!({"op": "dot", "strand": strand}),
        Slice::Cross { strand } => serde_json::json!({"op": "cross", "strand": strand}),
        Slice::Cup { kind, pos } => {
            serde_json::json!({"op": "cup", "kind": kind_str(*kind), "pos": pos})
        }
        Slice::Cap { kind, pos } => {
            serde_json::json!({"op": "cap", "kind": kind_str(*kind), "pos": pos})
        }
        Slice::Bubble { orient, dots, pos } => {
            serde_json::json!({"op": "bubble", "orient": orient_str(*orient), "dots": dots, "pos": pos})
        }
    };
    let terms: Vec<serde_json::Value> = two
        .terms
        .iter()
        .map(|t| {
            serde_json::json!({
                "coeff": t.coeff.to_string(),
                "slices": t.slices.iter().map(slice_json).collect::<Vec<_>>(),
            })
        })
        .collect();
    serde_json::json!({
        "source": one_json(&two.source),
        "target": one_json(&two.target),
        "terms": terms,
    })
}

fn one_from_json(v: &serde_json::Value) -> Result<OneMor, DiagramError> {
    let obj = v
        .as_object()
        .ok_or_else(|| DiagramError::Parse("1-morphism must be an object".into()))?;
    let pattern = obj
        .get("pattern")
        .and_then(|p| p.as_str())
        .ok_or_else(|| DiagramError::Parse("missing string field \"pattern\"".into()))?;
    let n = obj
        .get("n")
        .and_then(|p| p.as_i64())
        .ok_or_else(|| DiagramError::Parse("missing integer field \"n\"".into()))?;
    let shift = match obj.get("shift") {
        None => 0,
        Some(s) => s
            .as_i64()
            .ok_or_else(|| DiagramError::Parse("field \"shift\" must be an integer".into()))?,
    };
    Ok(OneMor::from_pattern(pattern, n)?.with_shift(shift))
}

fn usize_field(obj: &serde_json::Map<String, serde_json::Value>, key: &str) -> Result<usize, DiagramError> {
    obj.get(key)
        .and_then(|v| v.as_u64())
        .map(|v| v as usize)
        .ok_or_else(|| DiagramError::Parse(format!("missing non-negative integer field {key:?}")))
}

fn slice_from_json(v: &serde_json::Value) -> Result<Slice, DiagramError> {
    let obj = v
        .as_object()
        .ok_or_else(|| DiagramError::Parse("slice must be an object".into()))?;
    let op = obj
        .get("op")
        .and_then(|o| o.as_str())
        .ok_or_else(|| DiagramError::Parse("missing string field \"op\"".into()))?;
    let kind_of = |obj: &serde_json::Map<String, serde_json::Value>| match obj
        .get("kind")
        .and_then(|k| k.as_str())
    {
        Some("ef") => Ok(PairKind::EF),
        Some("fe") => Ok(PairKind::FE),
        _ => Err(DiagramError::Parse("field \"kind\" must be \"ef\" or \"fe\"".into())),
    };
    match op {
        "dot" => Ok(Slice::Dot {
            strand: usize_field(obj, "strand")?,
        }),
        "cross" => Ok(Slice::Cross {
            strand: usize_field(obj, "strand")?,
        }),
        "cup" => Ok(Slice::Cup {
            kind: kind_of(obj)?,
            pos: usize_field(obj, "pos")?,
        }),
        "cap" => Ok(Slice::Cap {
            kind: kind_of(obj)?,
            pos: usize_field(obj, "pos")?,
        }),
        "bubble" => {
            let orient = match obj.get("orient").and_then(|o| o.as_str()) {
                Some("cw") => Orientation::Clockwise,
                Some("ccw") => Orientation::CounterClockwise,
                _ => {
                    return Err(DiagramError::Parse(
                        "field \"orient\" must be \"cw\" or \"ccw\"".into(),
                    ))
                }
            };
            let dots = obj
                .get("dots")
                .and_then(|d| d.as_i64())
                .ok_or_else(|| DiagramError::Parse("missing integer field \"dots\"".into()))?;
            let pos = match obj.get("pos") {
                None => 0,
                Some(_) => usize_field(obj, "pos")?,
            };
            Ok(Slice::Bubble { orient, dots, pos })
        }
        other => Err(DiagramError::Parse(format!("unknown slice op {other:?}"))),
    }
}

/// Parses the diagram JSON dialect.
pub fn from_json(v: &serde_json::Value) -> Result<TwoMor, DiagramError> {
    let obj = v
        .as_object()
        .ok_or_else(|| DiagramError::Parse("2-morphism must be an object".into()))?;
    let source = one_from_json(
        obj.get("source")
            .ok_or_else(|| DiagramError::Parse("missing field \"source\"".into()))?,
    )?;
    let terms_json = obj
        .get("terms")
        .and_then(|t| t.as_array())
        .ok_or_else(|| DiagramError::Parse("missing array field \"terms\"".into()))?;
    let mut terms = Vec::with_capacity(terms_json.len());
    for t in terms_json {
        let tobj = t
            .as_object()
            .ok_or_else(|| DiagramError::Parse("term must be an object".into()))?;
        let coeff: BigRational = match tobj.get("coeff") {
            None => BigRational::one(),
            Some(serde_json::Value::String(s)) => s
                .parse()
                .map_err(|_| DiagramError::Parse(format!("bad coefficient {s:?}")))?,
            Some(serde_json::Value::Number(num)) => {
                let i = num
                    .as_i64()
                    .ok_or_else(|| DiagramError::Parse(format!("bad coefficient {num}")))?;
                BigRational::from_integer(i.into())
            }
            Some(other) => {
                return Err(DiagramError::Parse(format!("bad coefficient {other}")))
            }
        };
        let slices_json = tobj
            .get("slices")
            .and_then(|s| s.as_array())
            .ok_or_else(|| DiagramError::Parse("term is missing array field \"slices\"".into()))?;
        let slices = slices_json
            .iter()
            .map(slice_from_json)
            .collect::<Result<Vec<_>, _>>()?;
        terms.push(Term2::new(coeff, slices));
    }
    match obj.get("target") {
        Some(t) => {
            let target = one_from_json(t)?;
            TwoMor::with_target(source, target, terms)
        }
        None => TwoMor::new(source, terms),
    }
}

/// Parses a 2-morphism from JSON text.
pub fn from_json_str(text: &str) -> Result<TwoMor, DiagramError> {
    let v: serde_json::Value =
        serde_json::from_str(text).map_err(|e| DiagramError::Parse(e.to_string()))?;
    from_json(&v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mor(pattern: &str, n: i64) -> OneMor {
        OneMor::from_pattern(pattern, n).unwrap()
    }

    #[test]
    fn pattern_round_trip_and_weights() {
        let m = mor("EF", 2);
        assert_eq!(m.pattern(), "EF");
        assert_eq!(m.strand_kind(1), Strand::F);
        assert_eq!(m.strand_kind(2), Strand::E);
        assert_eq!(m.right_weight(), 2);
        assert_eq!(m.region_weight(1), 0);
        assert_eq!(m.left_weight(), 2);
    }

    #[test]
    fn dot_has_degree_two_and_zigzag_degree_zero() {
        let e = mor("E", 0);
        let dot = TwoMor::stack(e.clone(), 1, vec![Slice::Dot { strand: 1 }]).unwrap();
        assert_eq!(dot.term_degrees().unwrap(), vec![2]);

        let zig = TwoMor::stack(
            e.clone(),
            1,
            vec![
                Slice::Cup {
                    kind: PairKind::FE,
                    pos: 0,
                },
                Slice::Cap {
                    kind: PairKind::EF,
                    pos: 1,
                },
            ],
        )
        .unwrap();
        assert!(zig.target().same_column(&e));
        assert_eq!(zig.homogeneous_degree().unwrap(), Some(0));
    }

    #[test]
    fn degree_zero_bubble() {
        let n = 3;
        let u = OneMor::unit(n);
        let b = TwoMor::stack(
            u,
            1,
            vec![Slice::Bubble {
                orient: Orientation::Clockwise,
                dots: n - 1,
                pos: 0,
            }],
        )
        .unwrap();
        assert_eq!(b.homogeneous_degree().unwrap(), Some(0));
    }

    #[test]
    fn crossing_needs_parallel_strands() {
        let m = mor("EF", 0);
        let r = TwoMor::stack(m, 1, vec![Slice::Cross { strand: 1 }]);
        assert!(matches!(r, Err(DiagramError::MalformedSlice(_))));
    }

    #[test]
    fn cap_checks_letters() {
        let m = mor("EF", 0);
        let wrong = TwoMor::stack(
            m.clone(),
            1,
            vec![Slice::Cap {
                kind: PairKind::FE,
                pos: 0,
            }],
        );
        assert!(wrong.is_err());
        let right = TwoMor::stack(
            m,
            1,
            vec![Slice::Cap {
                kind: PairKind::EF,
                pos: 0,
            }],
        )
        .unwrap();
        assert!(right.target().is_unit());
    }

    #[test]
    fn vertical_composition_stacks_slices() {
        let e = mor("E", 0);
        let dot = TwoMor::stack(e.clone(), 2, vec![Slice::Dot { strand: 1 }]).unwrap();
        let sq = compose_v(&dot, &dot).unwrap();
        assert_eq!(sq.terms().len(), 1);
        assert_eq!(sq.terms()[0].slices.len(), 2);
        assert_eq!(
            sq.terms()[0].coeff,
            BigRational::from_integer(4.into())
        );
    }

    #[test]
    fn horizontal_composition_shifts_left_factor() {
        // E1_{-2} beside F1_0 gives EF1_0.
        let left = TwoMor::stack(mor("E", -2), 1, vec![Slice::Dot { strand: 1 }]).unwrap();
        let right = TwoMor::identity(mor("F", 0));
        let h = compose_h(&left, &right).unwrap();
        assert_eq!(h.source().pattern(), "EF");
        assert_eq!(h.source().right_weight(), 0);
        assert_eq!(h.terms()[0].slices, vec![Slice::Dot { strand: 2 }]);
    }

    #[test]
    fn horizontal_composition_checks_weights() {
        let left = TwoMor::identity(mor("E", 0));
        let right = TwoMor::identity(mor("F", 0));
        assert!(compose_h(&left, &right).is_err());
    }

    #[test]
    fn json_round_trip() {
        let m = mor("EF", 0);
        let two = TwoMor::new(
            m,
            vec![
                Term2::from_int(
                    -2,
                    vec![
                        Slice::Dot { strand: 1 },
                        Slice::Bubble {
                            orient: Orientation::CounterClockwise,
                            dots: -1,
                            pos: 2,
                        },
                    ],
                ),
                Term2::new(
                    BigRational::new(1.into(), 3.into()),
                    vec![Slice::Dot { strand: 2 }],
                ),
            ],
        )
        .unwrap();
        let back = from_json(&to_json(&two)).unwrap();
        assert_eq!(back, two);
    }

    #[test]
    fn json_accepts_dsl_text() {
        let text = r#"{
            "source": {"pattern": "EF", "n": 0},
            "terms": [
                {"coeff": "1", "slices": [
                    {"op": "cap", "kind": "ef", "pos": 0},
                    {"op": "bubble", "orient": "ccw", "dots": 1},
                    {"op": "cup", "kind": "ef", "pos": 0}
                ]}
            ]
        }"#;
        let two = from_json_str(text).unwrap();
        assert_eq!(two.source().pattern(), "EF");
        assert_eq!(two.target().pattern(), "EF");
    }
}
