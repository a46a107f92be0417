//! Builders for the defining local relations and the evaluation-backed
//! verification suite.

use std::fmt;
use std::str::FromStr;

use flag::{Orientation, PairKind};

use crate::bubbles::fake_bubble_poly;
use crate::eval::equal_under_gamma;
use crate::mor::{OneMor, Slice, Term2, TwoMor};
use crate::symmetry::{apply_symmetry, Symmetry};
use crate::DiagramError;

fn mor(pattern: &str, n: i64) -> OneMor {
    OneMor::from_pattern(pattern, n).expect("builder patterns are valid")
}

fn dot(strand: usize) -> Slice {
    Slice::Dot { strand }
}

fn cross(strand: usize) -> Slice {
    Slice::Cross { strand }
}

fn cup_ef(pos: usize) -> Slice {
    Slice::Cup {
        kind: PairKind::EF,
        pos,
    }
}

fn cup_fe(pos: usize) -> Slice {
    Slice::Cup {
        kind: PairKind::FE,
        pos,
    }
}

fn cap_ef(pos: usize) -> Slice {
    Slice::Cap {
        kind: PairKind::EF,
        pos,
    }
}

fn cap_fe(pos: usize) -> Slice {
    Slice::Cap {
        kind: PairKind::FE,
        pos,
    }
}

fn bub_cw(dots: i64, pos: usize) -> Slice {
    Slice::Bubble {
        orient: Orientation::Clockwise,
        dots,
        pos,
    }
}

fn bub_ccw(dots: i64, pos: usize) -> Slice {
    Slice::Bubble {
        orient: Orientation::CounterClockwise,
        dots,
        pos,
    }
}

fn dots(strand: usize, count: i64) -> Vec<Slice> {
    assert!(count >= 0, "dot counts are non-negative");
    vec![dot(strand); count as usize]
}

fn cat(parts: &[&[Slice]]) -> Vec<Slice> {
    parts.iter().flat_map(|p| p.iter().cloned()).collect()
}

/// Sideways crossing turning an adjacent EF pair into FE, with `pos` strands
/// to its right, smoothed through the left region.
pub fn sideways_ef_to_fe(pos: usize) -> Vec<Slice> {
    vec![cup_fe(pos + 2), cross(pos + 2), cap_ef(pos)]
}

/// The same sideways crossing smoothed through the right region.
pub fn sideways_ef_to_fe_alt(pos: usize) -> Vec<Slice> {
    vec![cup_fe(pos), cross(pos + 2), cap_ef(pos + 2)]
}

/// Sideways crossing turning an adjacent FE pair into EF, smoothed through
/// the left region.
pub fn sideways_fe_to_ef(pos: usize) -> Vec<Slice> {
    vec![cup_ef(pos + 2), cross(pos + 2), cap_fe(pos)]
}

/// The same sideways crossing smoothed through the right region.
pub fn sideways_fe_to_ef_alt(pos: usize) -> Vec<Slice> {
    vec![cup_ef(pos), cross(pos + 2), cap_fe(pos + 2)]
}

/// Result of one relation check at a fixed weight and ambient dimension.
#[derive(Clone, Debug)]
pub struct RelationCheck {
    pub name: String,
    pub weight: i64,
    pub ambient: u32,
    pub pass: bool,
}

impl fmt::Display for RelationCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} n={} N={} ... {}",
            self.name,
            self.weight,
            self.ambient,
            if self.pass { "ok" } else { "FAIL" }
        )
    }
}

/// A batch of relation checks.
#[derive(Clone, Debug, Default)]
pub struct SuiteReport {
    pub checks: Vec<RelationCheck>,
}

impl SuiteReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> Vec<&RelationCheck> {
        self.checks.iter().filter(|c| !c.pass).collect()
    }

    pub fn merge(&mut self, other: SuiteReport) {
        self.checks.extend(other.checks);
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        write!(
            f,
            "{} checks, {} failures",
            self.checks.len(),
            self.failures().len()
        )
    }
}

/// The relation families the suite can run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SuiteKind {
    Biadjoint,
    NilHecke,
    Bubbles,
    Slides,
    Decomp,
    Triangle,
    All,
}

impl FromStr for SuiteKind {
    type Err = DiagramError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "biadjoint" => Ok(SuiteKind::Biadjoint),
            "nilhecke" => Ok(SuiteKind::NilHecke),
            "bubbles" => Ok(SuiteKind::Bubbles),
            "slides" => Ok(SuiteKind::Slides),
            "decomp" => Ok(SuiteKind::Decomp),
            "triangle" => Ok(SuiteKind::Triangle),
            "all" => Ok(SuiteKind::All),
            other => Err(DiagramError::Parse(format!("unknown suite {other:?}"))),
        }
    }
}

impl fmt::Display for SuiteKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            SuiteKind::Biadjoint => "biadjoint",
            SuiteKind::NilHecke => "nilhecke",
            SuiteKind::Bubbles => "bubbles",
            SuiteKind::Slides => "slides",
            SuiteKind::Decomp => "decomp",
            SuiteKind::Triangle => "triangle",
            SuiteKind::All => "all",
        };
        write!(f, "{name}")
    }
}

struct Ctx<'a> {
    report: &'a mut SuiteReport,
    ambient: u32,
    weight: i64,
}

impl Ctx<'_> {
    fn check(&mut self, name: &str, lhs: &TwoMor, rhs: &TwoMor) -> Result<(), DiagramError> {
        let pass = equal_under_gamma(lhs, rhs, Some(self.ambient))?;
        self.report.checks.push(RelationCheck {
            name: name.to_string(),
            weight: self.weight,
            ambient: self.ambient,
            pass,
        });
        Ok(())
    }
}

fn stack(source: &OneMor, coeff: i64, slices: Vec<Slice>) -> TwoMor {
    TwoMor::stack(source.clone(), coeff, slices).expect("builder slices fit their source")
}

fn combine(source: &OneMor, terms: Vec<(i64, Vec<Slice>)>) -> TwoMor {
    let terms = terms
        .into_iter()
        .map(|(c, slices)| Term2::from_int(c, slices))
        .collect();
    TwoMor::new(source.clone(), terms).expect("builder slices fit their source")
}

fn biadjoint_checks(ctx: &mut Ctx) -> Result<(), DiagramError> {
    let n = ctx.weight;
    let e = mor("E", n);
    let f = mor("F", n);
    let unit = OneMor::unit(n);

    ctx.check(
        "zigzag-right-e",
        &stack(&e, 1, vec![cup_fe(0), cap_ef(1)]),
        &TwoMor::identity(e.clone()),
    )?;
    ctx.check(
        "zigzag-left-e",
        &stack(&e, 1, vec![cup_ef(1), cap_fe(0)]),
        &TwoMor::identity(e.clone()),
    )?;
    ctx.check(
        "zigzag-right-f",
        &stack(&f, 1, vec![cup_fe(1), cap_ef(0)]),
        &TwoMor::identity(f.clone()),
    )?;
    ctx.check(
        "zigzag-left-f",
        &stack(&f, 1, vec![cup_ef(0), cap_fe(1)]),
        &TwoMor::identity(f.clone()),
    )?;

    ctx.check(
        "dot-slide-over-cup-fe",
        &stack(&unit, 1, vec![cup_fe(0), dot(1)]),
        &stack(&unit, 1, vec![cup_fe(0), dot(2)]),
    )?;
    ctx.check(
        "dot-slide-over-cup-ef",
        &stack(&unit, 1, vec![cup_ef(0), dot(1)]),
        &stack(&unit, 1, vec![cup_ef(0), dot(2)]),
    )?;
    let fe = mor("FE", n);
    let ef = mor("EF", n);
    ctx.check(
        "dot-slide-under-cap-fe",
        &stack(&fe, 1, vec![dot(1), cap_fe(0)]),
        &stack(&fe, 1, vec![dot(2), cap_fe(0)]),
    )?;
    ctx.check(
        "dot-slide-under-cap-ef",
        &stack(&ef, 1, vec![dot(1), cap_ef(0)]),
        &stack(&ef, 1, vec![dot(2), cap_ef(0)]),
    )?;

    ctx.check(
        "sideways-smoothings-ef",
        &stack(&ef, 1, sideways_ef_to_fe(0)),
        &stack(&ef, 1, sideways_ef_to_fe_alt(0)),
    )?;
    ctx.check(
        "sideways-smoothings-fe",
        &stack(&fe, 1, sideways_fe_to_ef(0)),
        &stack(&fe, 1, sideways_fe_to_ef_alt(0)),
    )?;

    let ff = mor("FF", n);
    let ee = mor("EE", n);
    ctx.check(
        "rotate-cross-ff-left",
        &stack(
            &ff,
            1,
            vec![cup_fe(2), cup_fe(3), cross(3), cap_ef(1), cap_ef(0)],
        ),
        &stack(&ff, 1, vec![cross(1)]),
    )?;
    ctx.check(
        "rotate-cross-ff-right",
        &stack(
            &ff,
            1,
            vec![cup_ef(0), cup_ef(1), cross(3), cap_fe(3), cap_fe(2)],
        ),
        &stack(&ff, 1, vec![cross(1)]),
    )?;
    ctx.check(
        "rotate-cross-ee-left",
        &stack(
            &ee,
            1,
            vec![cup_ef(2), cup_ef(3), cross(3), cap_fe(1), cap_fe(0)],
        ),
        &stack(&ee, 1, vec![cross(1)]),
    )?;
    ctx.check(
        "rotate-cross-ee-right",
        &stack(
            &ee,
            1,
            vec![cup_fe(0), cup_fe(1), cross(3), cap_ef(3), cap_ef(2)],
        ),
        &stack(&ee, 1, vec![cross(1)]),
    )?;
    Ok(())
}

fn nilhecke_checks(ctx: &mut Ctx) -> Result<(), DiagramError> {
    let n = ctx.weight;
    let ee = mor("EE", n);
    let ff = mor("FF", n);

    for (tag, col) in [("ee", &ee), ("ff", &ff)] {
        ctx.check(
            &format!("cross-squares-to-zero-{tag}"),
            &stack(col, 1, vec![cross(1), cross(1)]),
            &TwoMor::zero(col.clone(), col.clone()),
        )?;
    }
    let eee = mor("EEE", n);
    let fff = mor("FFF", n);
    for (tag, col) in [("eee", &eee), ("fff", &fff)] {
        ctx.check(
            &format!("braid-{tag}"),
            &stack(col, 1, vec![cross(1), cross(2), cross(1)]),
            &stack(col, 1, vec![cross(2), cross(1), cross(2)]),
        )?;
    }

    // Dotted crossings differ from their slid forms by the identity; the
    // divided-difference sign puts the dot on opposite sides for EE and FF.
    let id_ee = TwoMor::identity(ee.clone());
    ctx.check(
        "dot-slide-ee-top",
        &combine(&ee, vec![(1, vec![dot(2), cross(1)]), (-1, vec![cross(1), dot(1)])]),
        &id_ee,
    )?;
    ctx.check(
        "dot-slide-ee-bottom",
        &combine(&ee, vec![(1, vec![cross(1), dot(2)]), (-1, vec![dot(1), cross(1)])]),
        &id_ee,
    )?;
    let id_ff = TwoMor::identity(ff.clone());
    ctx.check(
        "dot-slide-ff-top",
        &combine(&ff, vec![(1, vec![cross(1), dot(1)]), (-1, vec![dot(2), cross(1)])]),
        &id_ff,
    )?;
    ctx.check(
        "dot-slide-ff-bottom",
        &combine(&ff, vec![(1, vec![dot(1), cross(1)]), (-1, vec![cross(1), dot(2)])]),
        &id_ff,
    )?;

    // Symmetric forms of the slide relation.
    ctx.check(
        "dot-slide-ee-symmetric",
        &combine(
            &ee,
            vec![(1, vec![cross(1), dot(2)]), (1, vec![cross(1), dot(1)])],
        ),
        &combine(
            &ee,
            vec![(1, vec![dot(2), cross(1)]), (1, vec![dot(1), cross(1)])],
        ),
    )?;
    ctx.check(
        "dot-pair-slide-ee",
        &stack(&ee, 1, vec![cross(1), dot(1), dot(2)]),
        &stack(&ee, 1, vec![dot(1), dot(2), cross(1)]),
    )?;

    // Iterated slides: moving m dots across a crossing leaves a sum of
    // complementary dot placements.
    for m in 1..=3i64 {
        let spread: Vec<(i64, Vec<Slice>)> = (0..m)
            .map(|j| (1, cat(&[&dots(1, j), &dots(2, m - 1 - j)])))
            .collect();
        let rhs = combine(&ee, spread);
        ctx.check(
            &format!("iterated-slide-top-m{m}"),
            &combine(
                &ee,
                vec![
                    (1, cat(&[&[cross(1)], &dots(2, m)])),
                    (-1, cat(&[&dots(1, m), &[cross(1)]])),
                ],
            ),
            &rhs,
        )?;
        ctx.check(
            &format!("iterated-slide-bottom-m{m}"),
            &combine(
                &ee,
                vec![
                    (1, cat(&[&dots(2, m), &[cross(1)]])),
                    (-1, cat(&[&[cross(1)], &dots(1, m)])),
                ],
            ),
            &rhs,
        )?;
    }
    Ok(())
}

fn bubble_checks(ctx: &mut Ctx) -> Result<(), DiagramError> {
    let n = ctx.weight;
    let unit = OneMor::unit(n);
    let zero = TwoMor::zero(unit.clone(), unit.clone());
    let id = TwoMor::identity(unit.clone());

    for m in 0..(n - 1) {
        ctx.check(
            &format!("bubble-negative-cw-m{m}"),
            &stack(&unit, 1, vec![bub_cw(m, 0)]),
            &zero,
        )?;
    }
    for m in 0..(-n - 1) {
        ctx.check(
            &format!("bubble-negative-ccw-m{m}"),
            &stack(&unit, 1, vec![bub_ccw(m, 0)]),
            &zero,
        )?;
    }

    if n >= 0 {
        ctx.check(
            "bubble-degree-zero-cw",
            &stack(&unit, 1, vec![bub_cw(n - 1, 0)]),
            &id,
        )?;
    }
    if n <= 0 {
        ctx.check(
            "bubble-degree-zero-ccw",
            &stack(&unit, 1, vec![bub_ccw(-n - 1, 0)]),
            &id,
        )?;
    }

    // A formal bubble equals its expansion in honest bubbles of the
    // opposite orientation.
    for j in 1..=n.unsigned_abs().min(3) as u32 {
        let fake = if n >= 0 {
            bub_ccw(-n - 1 + j as i64, 0)
        } else {
            bub_cw(n - 1 + j as i64, 0)
        };
        let honest = |l: u32| {
            if n >= 0 {
                bub_cw(n - 1 + l as i64, 0)
            } else {
                bub_ccw(-n - 1 + l as i64, 0)
            }
        };
        let poly = fake_bubble_poly(n, j)?;
        let terms: Vec<Term2> = poly
            .terms()
            .map(|(parts, coeff)| {
                Term2::new(coeff.clone(), parts.iter().map(|&l| honest(l)).collect())
            })
            .collect();
        let rhs = if terms.is_empty() {
            zero.clone()
        } else {
            TwoMor::new(unit.clone(), terms).expect("bubble stacks are closed")
        };
        ctx.check(
            &format!("formal-bubble-expansion-j{j}"),
            &stack(&unit, 1, vec![fake]),
            &rhs,
        )?;
    }

    // Degree-d part of the product of the two full bubble series vanishes.
    for d in 1..=4i64 {
        let terms: Vec<(i64, Vec<Slice>)> = (0..=d)
            .map(|j| (1, vec![bub_cw(n - 1 + j, 0), bub_ccw(-n - 1 + d - j, 0)]))
            .collect();
        ctx.check(
            &format!("bubble-series-product-d{d}"),
            &combine(&unit, terms),
            &zero,
        )?;
    }

    // Curls reduce to dotted bubbles beside the strand.
    let e = mor("E", n);
    let zero_e = TwoMor::zero(e.clone(), e.clone());
    for m in 0..=3i64 {
        let lhs = stack(
            &e,
            1,
            cat(&[&[cup_ef(0)], &dots(1, m), &[cross(2), cap_ef(0)]]),
        );
        let rhs = if m - n < 0 {
            zero_e.clone()
        } else {
            combine(
                &e,
                (0..=(m - n))
                    .map(|l| (-1, cat(&[&dots(1, m - n - l), &[bub_cw(n - 1 + l, 0)]])))
                    .collect(),
            )
        };
        ctx.check(&format!("curl-right-m{m}"), &lhs, &rhs)?;
    }
    let nl = n + 2;
    for m in 0..=3i64 {
        let lhs = stack(
            &e,
            1,
            cat(&[&[cup_fe(1)], &dots(3, m), &[cross(1), cap_fe(1)]]),
        );
        let rhs = if m + nl < 0 {
            zero_e.clone()
        } else {
            combine(
                &e,
                (0..=(m + nl))
                    .map(|j| (1, cat(&[&dots(1, m + nl - j), &[bub_ccw(-nl - 1 + j, 1)]])))
                    .collect(),
            )
        };
        ctx.check(&format!("curl-left-m{m}"), &lhs, &rhs)?;
    }
    Ok(())
}

fn slide_checks(ctx: &mut Ctx) -> Result<(), DiagramError> {
    let n = ctx.weight;
    let e = mor("E", n);

    for alpha in 0..=3i64 {
        ctx.check(
            &format!("bubble-slide-ccw-geometric-a{alpha}"),
            &stack(&e, 1, vec![bub_ccw(-n - 1 + alpha, 0)]),
            &combine(
                &e,
                (0..=alpha)
                    .map(|l| {
                        (
                            alpha + 1 - l,
                            cat(&[&dots(1, alpha - l), &[bub_ccw(-n - 3 + l, 1)]]),
                        )
                    })
                    .collect(),
            ),
        )?;
        ctx.check(
            &format!("bubble-slide-cw-geometric-a{alpha}"),
            &stack(&e, 1, vec![bub_cw(n + 1 + alpha, 1)]),
            &combine(
                &e,
                (0..=alpha)
                    .map(|l| {
                        (
                            alpha + 1 - l,
                            cat(&[&[bub_cw(n - 1 + l, 0)], &dots(1, alpha - l)]),
                        )
                    })
                    .collect(),
            ),
        )?;
        ctx.check(
            &format!("bubble-slide-cw-quadratic-a{alpha}"),
            &stack(&e, 1, vec![bub_cw(n - 1 + alpha, 0)]),
            &combine(
                &e,
                vec![
                    (1, cat(&[&dots(1, 2), &[bub_cw(n - 1 + alpha, 1)]])),
                    (-2, cat(&[&dots(1, 1), &[bub_cw(n + alpha, 1)]])),
                    (1, vec![bub_cw(n + 1 + alpha, 1)]),
                ],
            ),
        )?;
        ctx.check(
            &format!("bubble-slide-ccw-quadratic-a{alpha}"),
            &stack(&e, 1, vec![bub_ccw(-n - 3 + alpha, 1)]),
            &combine(
                &e,
                vec![
                    (1, cat(&[&[bub_ccw(-n - 3 + alpha, 0)], &dots(1, 2)])),
                    (-2, cat(&[&[bub_ccw(-n - 2 + alpha, 0)], &dots(1, 1)])),
                    (1, vec![bub_ccw(-n - 1 + alpha, 0)]),
                ],
            ),
        )?;
    }
    Ok(())
}

/// The identity of the mixed column as the sum of both sideways-crossing
/// composites and the cup-bubble-cap correction terms.
pub fn identity_decomposition(n: i64, kind: PairKind) -> (TwoMor, TwoMor) {
    match kind {
        PairKind::EF => {
            let ef = mor("EF", n);
            let mut terms = vec![Term2::from_int(
                -1,
                cat(&[&sideways_ef_to_fe(0), &sideways_fe_to_ef(0)]),
            )];
            for l in 0..=(n - 1) {
                for j in 0..=l {
                    terms.push(Term2::from_int(
                        1,
                        cat(&[
                            &dots(1, l - j),
                            &[cap_ef(0), bub_ccw(-n - 1 + j, 0), cup_ef(0)],
                            &dots(1, n - 1 - l),
                        ]),
                    ));
                }
            }
            let rhs = TwoMor::new(ef.clone(), terms).expect("decomposition terms are endomorphisms");
            (TwoMor::identity(ef), rhs)
        }
        PairKind::FE => {
            let fe = mor("FE", n);
            let mut terms = vec![Term2::from_int(
                -1,
                cat(&[&sideways_fe_to_ef(0), &sideways_ef_to_fe(0)]),
            )];
            for l in 0..=(-n - 1) {
                for j in 0..=l {
                    terms.push(Term2::from_int(
                        1,
                        cat(&[
                            &dots(1, l - j),
                            &[cap_fe(0), bub_cw(n - 1 + j, 0), cup_fe(0)],
                            &dots(1, -n - 1 - l),
                        ]),
                    ));
                }
            }
            let rhs = TwoMor::new(fe.clone(), terms).expect("decomposition terms are endomorphisms");
            (TwoMor::identity(fe), rhs)
        }
    }
}

fn decomp_checks(ctx: &mut Ctx) -> Result<(), DiagramError> {
    let n = ctx.weight;
    for (tag, kind) in [("ef", PairKind::EF), ("fe", PairKind::FE)] {
        let (lhs, rhs) = identity_decomposition(n, kind);
        for d in rhs.term_degrees()? {
            debug_assert_eq!(d, 0, "decomposition terms are degree 0");
        }
        ctx.check(&format!("identity-decomposition-{tag}"), &lhs, &rhs)?;
    }
    let report = decomposition_idempotents(n, ctx.ambient)?;
    ctx.report.merge(SuiteReport {
        checks: report.checks,
    });
    Ok(())
}

fn triangle_checks(ctx: &mut Ctx) -> Result<(), DiagramError> {
    let n = ctx.weight;
    let fe = mor("FE", n);

    let mut lhs_terms = vec![Term2::from_int(
        1,
        cat(&[
            &sideways_fe_to_ef(0),
            &[cup_fe(1)],
            &sideways_ef_to_fe(0),
            &sideways_ef_to_fe(2),
        ]),
    )];
    for l in 0..=n {
        for j in 0..=l {
            for f in 0..=(l - j) {
                lhs_terms.push(Term2::from_int(
                    1,
                    cat(&[
                        &dots(2, l - j - f),
                        &dots(1, f),
                        &[bub_ccw(-n - 3 + j, 1), cup_ef(1)],
                        &dots(2, n - l),
                    ]),
                ));
            }
        }
    }
    let lhs = TwoMor::new(fe.clone(), lhs_terms).expect("triangle terms share the target");

    let mut rhs_terms = vec![Term2::from_int(
        1,
        vec![cup_fe(1), cross(1), cross(3), cup_ef(3), cross(3), cap_fe(1)],
    )];
    for l in 0..=(-n - 2) {
        for j in 0..=l {
            for f in 0..=(-n - 2 - l) {
                rhs_terms.push(Term2::from_int(
                    -1,
                    cat(&[
                        &dots(1, l - j),
                        &[cap_fe(0), bub_cw(n - 1 + j, 0), cup_fe(0)],
                        &dots(1, -n - 2 - l - f),
                        &[cup_fe(2)],
                        &dots(3, f),
                    ]),
                ));
            }
        }
    }
    let rhs = TwoMor::new(fe, rhs_terms).expect("triangle terms share the target");

    ctx.check("triangle", &lhs, &rhs)
}

/// Runs the chosen relation families at one ambient dimension over the
/// weights of matching parity.
pub fn relation_suite(
    ambient: u32,
    weights: impl IntoIterator<Item = i64>,
    suite: SuiteKind,
) -> Result<SuiteReport, DiagramError> {
    let mut report = SuiteReport::default();
    for n in weights {
        if (n + ambient as i64).rem_euclid(2) != 0 {
            continue;
        }
        let mut ctx = Ctx {
            report: &mut report,
            ambient,
            weight: n,
        };
        if matches!(suite, SuiteKind::Biadjoint | SuiteKind::All) {
            biadjoint_checks(&mut ctx)?;
        }
        if matches!(suite, SuiteKind::NilHecke | SuiteKind::All) {
            nilhecke_checks(&mut ctx)?;
        }
        if matches!(suite, SuiteKind::Bubbles | SuiteKind::All) {
            bubble_checks(&mut ctx)?;
        }
        if matches!(suite, SuiteKind::Slides | SuiteKind::All) {
            slide_checks(&mut ctx)?;
        }
        if matches!(suite, SuiteKind::Decomp | SuiteKind::All) {
            decomp_checks(&mut ctx)?;
        }
        if matches!(suite, SuiteKind::Triangle | SuiteKind::All) {
            triangle_checks(&mut ctx)?;
        }
    }
    Ok(report)
}

/// The projections and inclusions splitting the mixed column into the
/// opposite column and a tower of shifted units, with the checks that they
/// are orthogonal idempotent factors resolving the identity.
#[derive(Clone, Debug)]
pub struct DecompositionReport {
    pub weight: i64,
    pub ambient: u32,
    /// Pairs (projection, inclusion) indexed by summand.
    pub splittings: Vec<(TwoMor, TwoMor)>,
    pub checks: Vec<RelationCheck>,
}

impl DecompositionReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

fn decomposition_maps(n: i64) -> Vec<(TwoMor, TwoMor)> {
    assert!(n >= 0, "direct construction needs a non-negative weight");
    let ef = mor("EF", n);
    let fe = mor("FE", n);
    let mut pairs = Vec::new();
    for s in 0..=(n - 1) {
        let unit_shifted = OneMor::unit(n).with_shift(n - 1 - 2 * s);
        let sigma_terms: Vec<Term2> = (0..=s)
            .map(|j| {
                Term2::from_int(
                    1,
                    cat(&[&dots(1, s - j), &[cap_ef(0), bub_ccw(-n - 1 + j, 0)]]),
                )
            })
            .collect();
        let sigma = TwoMor::with_target(ef.clone(), unit_shifted.clone(), sigma_terms)
            .expect("projection terms end at the unit column");
        let lambda = TwoMor::with_target(
            unit_shifted,
            ef.clone(),
            vec![Term2::from_int(1, cat(&[&[cup_ef(0)], &dots(1, n - 1 - s)]))],
        )
        .expect("inclusion terms end at the mixed column");
        pairs.push((sigma, lambda));
    }
    let sigma_top = TwoMor::new(
        ef.clone(),
        vec![Term2::from_int(-1, sideways_ef_to_fe(0))],
    )
    .expect("sideways crossing is well formed");
    let lambda_top = TwoMor::new(fe, vec![Term2::from_int(1, sideways_fe_to_ef(0))])
        .expect("sideways crossing is well formed");
    pairs.push((sigma_top, lambda_top));
    pairs
}

/// Splits the mixed two-strand column at weight `n` into its indecomposable
/// summands and verifies the splitting under evaluation. For negative
/// weights the system is transported from `-n` by the E ↔ F flip.
pub fn decomposition_idempotents(
    n: i64,
    ambient: u32,
) -> Result<DecompositionReport, DiagramError> {
    let pairs = if n >= 0 {
        decomposition_maps(n)
    } else {
        decomposition_maps(-n)
            .into_iter()
            .map(|(sigma, lambda)| {
                (
                    apply_symmetry(Symmetry::Omega, &sigma),
                    apply_symmetry(Symmetry::Omega, &lambda),
                )
            })
            .collect()
    };

    for (sigma, lambda) in &pairs {
        for d in sigma.net_degrees()?.into_iter().chain(lambda.net_degrees()?) {
            debug_assert_eq!(d, 0, "splitting maps are degree 0 after shifting");
        }
    }

    let mut checks = Vec::new();
    let mut push = |name: String, pass: bool| {
        checks.push(RelationCheck {
            name,
            weight: n,
            ambient,
            pass,
        });
    };

    for (s, (sigma, _)) in pairs.iter().enumerate() {
        for (t, (_, lambda)) in pairs.iter().enumerate() {
            let product = crate::mor::compose_v(sigma, lambda)?;
            let expected = if s == t {
                TwoMor::identity(lambda.source().clone())
            } else {
                TwoMor::zero(lambda.source().clone(), sigma.target().clone())
            };
            let pass = equal_under_gamma(&product, &expected, Some(ambient))?;
            push(format!("split-product-s{s}-t{t}"), pass);
        }
    }

    let (first_sigma, first_lambda) = &pairs[0];
    let mut resolution = crate::mor::compose_v(first_lambda, first_sigma)?;
    for (sigma, lambda) in pairs.iter().skip(1) {
        resolution = resolution.plus(&crate::mor::compose_v(lambda, sigma)?)?;
    }
    let identity = TwoMor::identity(pairs[0].0.source().clone());
    let pass = equal_under_gamma(&resolution, &identity, Some(ambient))?;
    push("split-resolution".to_string(), pass);

    Ok(DecompositionReport {
        weight: n,
        ambient,
        splittings: pairs,
        checks,
    })
}
