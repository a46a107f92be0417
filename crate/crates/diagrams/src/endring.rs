//! Graded dimension checks for endomorphism rings of powers of the
//! positive generator.

use std::collections::BTreeMap;

use flag::BimElement;
use nilhecke::Perm;
use num_bigint::BigInt;
use qring::{qfact, LaurentPoly};

use crate::bubbles::{partitions_of, v_bubble_slice};
use crate::eval::{eval, generator_exponents, GammaMap};
use crate::linalg::SparseEchelon;
use crate::mor::{OneMor, Slice, TwoMor};
use crate::DiagramError;

/// Comparison of an enumerated spanning set against the graded dimension
/// series, with the evaluation rank as the independence witness.
#[derive(Clone, Debug)]
pub struct EndringReport {
    pub a: u32,
    pub weight: i64,
    pub degree: i64,
    pub ambient: u32,
    pub basis_count: usize,
    pub series_coeff: BigInt,
    pub rank: usize,
}

impl EndringReport {
    pub fn count_matches_series(&self) -> bool {
        BigInt::from(self.basis_count) == self.series_coeff
    }

    pub fn independent(&self) -> bool {
        self.rank == self.basis_count
    }

    pub fn pass(&self) -> bool {
        self.count_matches_series() && self.independent()
    }
}

fn compositions(total: i64, parts: usize) -> Vec<Vec<i64>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    (0..=total)
        .flat_map(|first| {
            compositions(total - first, parts - 1)
                .into_iter()
                .map(move |mut rest| {
                    rest.insert(0, first);
                    rest
                })
        })
        .collect()
}

/// The spanning set of the degree-`degree` part of the endomorphisms of the
/// `a`-fold positive column at weight `n`: a crossing pattern for each
/// permutation, dots on each strand, and a bubble monomial.
pub fn endring_basis(a: u32, n: i64, degree: i64) -> Result<Vec<TwoMor>, DiagramError> {
    let column = OneMor::from_pattern(&"E".repeat(a as usize), n)?;
    let mut basis = Vec::new();
    for w in Perm::all(a as usize) {
        let twice = degree + 2 * w.len() as i64;
        if twice < 0 || twice % 2 != 0 {
            continue;
        }
        let total = twice / 2;
        for dot_total in 0..=total {
            let bubble_total = (total - dot_total) as u32;
            for exps in compositions(dot_total, a as usize) {
                for shape in partitions_of(bubble_total) {
                    let mut slices: Vec<Slice> = w
                        .reduced_word()
                        .into_iter()
                        .map(|i| Slice::Cross {
                            strand: a as usize - i,
                        })
                        .collect();
                    for (i, &e) in exps.iter().enumerate() {
                        let strand = a as usize - i;
                        slices.extend(std::iter::repeat(Slice::Dot { strand }).take(e as usize));
                    }
                    slices.extend(shape.iter().map(|&j| v_bubble_slice(n, j, 0)));
                    basis.push(TwoMor::stack(column.clone(), 1, slices)?);
                }
            }
        }
    }
    Ok(basis)
}

/// Coefficient of q^degree in the graded dimension series of the
/// endomorphism ring: the quantum factorial shifted to its lowest term,
/// one geometric factor of step 2 per strand, and one of step 2j per
/// bubble generator.
pub fn endring_series_coeff(a: u32, degree: i64) -> BigInt {
    let bound = degree + (a as i64) * (a as i64 - 1);
    if bound < 0 {
        return BigInt::from(0);
    }
    let geom = |step: i64| {
        let mut g = LaurentPoly::zero();
        let mut e = 0;
        while e <= bound {
            g += &LaurentPoly::q(e);
            e += step;
        }
        g
    };
    let mut series = qfact(a).shifted(-((a as i64) * (a as i64 - 1)) / 2);
    for _ in 0..a {
        series *= &geom(2);
    }
    let mut j = 1;
    while 2 * j <= bound {
        series *= &geom(2 * j);
        j += 1;
    }
    series.coeff(degree)
}

fn image_row(
    imgs: &[BimElement],
    prefix: usize,
) -> BTreeMap<(usize, Vec<u32>, Vec<u32>), num_rational::BigRational> {
    let mut row = BTreeMap::new();
    for (gi, img) in imgs.iter().take(prefix).enumerate() {
        for (exps, gr) in img.terms() {
            for (shape, c) in gr.terms() {
                row.insert((gi, exps.clone(), shape.parts().to_vec()), c.clone());
            }
        }
    }
    row
}

/// Enumerates the spanning set, compares its size against the dimension
/// series, and certifies linear independence by the rank of the evaluated
/// maps on bimodule generators.
pub fn endring_dim_check(
    a: u32,
    n: i64,
    degree: i64,
    ambient: u32,
) -> Result<EndringReport, DiagramError> {
    let basis = endring_basis(a, n, degree)?;
    let series_coeff = endring_series_coeff(a, degree);
    let mut report = EndringReport {
        a,
        weight: n,
        degree,
        ambient,
        basis_count: basis.len(),
        series_coeff,
        rank: 0,
    };
    if basis.is_empty() {
        return Ok(report);
    }

    let maps: Vec<GammaMap> = basis
        .iter()
        .map(|b| eval(b, ambient))
        .collect::<Result<_, _>>()?;
    let source_sig = maps[0].source_signature().clone();
    let gens = generator_exponents(&source_sig);
    let mut images: Vec<Vec<BimElement>> = vec![Vec::new(); maps.len()];

    // Rank over a prefix of the generators is a lower bound for the full
    // rank, so stop as soon as a prefix already separates the whole set.
    let mut prefixes: Vec<usize> = [4usize, 16, 64]
        .into_iter()
        .filter(|&p| p < gens.len())
        .collect();
    prefixes.push(gens.len());
    for prefix in prefixes {
        for (map, cache) in maps.iter().zip(images.iter_mut()) {
            while cache.len() < prefix {
                let gen = BimElement::monomial(source_sig.clone(), gens[cache.len()].clone(), None);
                cache.push(map.apply(&gen)?);
            }
        }
        let mut echelon = SparseEchelon::new();
        for cache in &images {
            echelon.insert(image_row(cache, prefix));
        }
        report.rank = echelon.rank();
        if report.rank == report.basis_count {
            break;
        }
    }
    Ok(report)
}
