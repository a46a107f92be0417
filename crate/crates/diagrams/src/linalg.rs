//! Exact rational row reduction for the small linear systems used in
//! closed-diagram reduction and rank counting.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

pub(crate) enum SolveOutcome {
    Unique(Vec<BigRational>),
    Inconsistent,
    Underdetermined,
}

/// Solves `mat * x = rhs` exactly; `mat` is row major.
pub(crate) fn solve_unique(mut mat: Vec<Vec<BigRational>>, mut rhs: Vec<BigRational>) -> SolveOutcome {
    let rows = mat.len();
    let cols = mat.first().map_or(0, Vec::len);
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; cols];
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..rows).find(|&r| !mat[r][col].is_zero()) else {
            continue;
        };
        mat.swap(row, p);
        rhs.swap(row, p);
        let inv = mat[row][col].clone();
        for v in mat[row][col..].iter_mut() {
            *v = &*v / &inv;
        }
        rhs[row] = &rhs[row] / &inv;
        for r in 0..rows {
            if r != row && !mat[r][col].is_zero() {
                let factor = mat[r][col].clone();
                for c in col..cols {
                    let delta = &factor * &mat[row][c];
                    mat[r][c] = &mat[r][c] - &delta;
                }
                let delta = &factor * &rhs[row];
                rhs[r] = &rhs[r] - &delta;
            }
        }
        pivot_of_col[col] = Some(row);
        row += 1;
        if row == rows {
            break;
        }
    }
    if rhs.iter().enumerate().any(|(r, v)| r >= row && !v.is_zero()) {
        return SolveOutcome::Inconsistent;
    }
    if pivot_of_col.iter().any(Option::is_none) {
        return SolveOutcome::Underdetermined;
    }
    let x = pivot_of_col
        .into_iter()
        .map(|p| rhs[p.expect("pivot checked")].clone())
        .collect();
    SolveOutcome::Unique(x)
}

/// Incremental row echelon basis over sparse rows with ordered keys.
pub(crate) struct SparseEchelon<K: Ord + Clone> {
    rows: Vec<BTreeMap<K, BigRational>>,
}

impl<K: Ord + Clone> SparseEchelon<K> {
    pub(crate) fn new() -> Self {
        SparseEchelon { rows: Vec::new() }
    }

    pub(crate) fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces a row against the basis and inserts it when independent.
    /// Returns true exactly when the rank grew.
    pub(crate) fn insert(&mut self, mut row: BTreeMap<K, BigRational>) -> bool {
        loop {
            row.retain(|_, v| !v.is_zero());
            let Some((k0, c0)) = row.iter().next().map(|(k, v)| (k.clone(), v.clone())) else {
                return false;
            };
            let at = self
                .rows
                .binary_search_by(|r| r.keys().next().expect("rows are nonzero").cmp(&k0));
            match at {
                Ok(i) => {
                    let pivot = self.rows[i].clone();
                    for (k, v) in pivot {
                        let delta = &c0 * &v;
                        let entry = row.entry(k).or_insert_with(BigRational::zero);
                        *entry = &*entry - &delta;
                    }
                }
                Err(i) => {
                    if !c0.is_one() {
                        for v in row.values_mut() {
                            *v = &*v / &c0;
                        }
                    }
                    self.rows.insert(i, row);
                    return true;
                }
            }
        }
    }
}
