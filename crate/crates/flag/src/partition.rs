//! Integer partitions and the strip additions used by Pieri multiplication.

use std::fmt;

/// A partition with weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Builds a partition, dropping trailing zeros.
    ///
    /// Panics if the parts are not weakly decreasing.
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "parts must be weakly decreasing"
        );
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition(parts)
    }

    /// The empty partition.
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The single-row partition (d), or empty when d = 0.
    pub fn row(d: u32) -> Self {
        if d == 0 {
            Partition::empty()
        } else {
            Partition(vec![d])
        }
    }

    /// The single-column partition (1^d).
    pub fn column(d: u32) -> Self {
        Partition(vec![1; d as usize])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of boxes.
    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Part at 1-based row index, zero beyond the last row.
    pub fn part(&self, row: usize) -> u32 {
        if row == 0 || row > self.0.len() {
            0
        } else {
            self.0[row - 1]
        }
    }

    /// True when the diagram fits in a `rows` x `cols` box.
    pub fn fits_in_box(&self, rows: u32, cols: u32) -> bool {
        self.0.len() <= rows as usize && self.0.first().copied().unwrap_or(0) <= cols
    }

    /// The conjugate partition (rows and columns exchanged).
    pub fn conjugate(&self) -> Partition {
        let cols = self.0.first().copied().unwrap_or(0) as usize;
        let mut parts = vec![0u32; cols];
        for (i, slot) in parts.iter_mut().enumerate() {
            *slot = self.0.iter().filter(|&&p| p as usize > i).count() as u32;
        }
        Partition(parts)
    }

    /// Partitions obtained by adding a vertical strip of `strip` boxes
    /// (at most one box per row), truncated to the `rows` x `cols` box.
    pub fn add_vertical_strip(&self, strip: u32, rows: u32, cols: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(rows as usize);
        self.vertical_rec(1, strip, rows, cols, &mut current, &mut out);
        out
    }

    // Rows below `row` are untouched once `left` hits zero, which keeps the
    // result weakly decreasing because each chosen part dominates the
    // original part in its row.
    fn vertical_rec(
        &self,
        row: usize,
        left: u32,
        rows: u32,
        cols: u32,
        current: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if left == 0 {
            let mut parts = current.clone();
            if current.len() < self.len() {
                parts.extend_from_slice(&self.0[current.len()..]);
            }
            out.push(Partition::new(parts));
            return;
        }
        if row > rows as usize {
            return;
        }
        let base = self.part(row);
        let prev = current.last().copied().unwrap_or(u32::MAX);
        for add in 0..=left.min(1) {
            let new = base + add;
            if new > cols || new > prev {
                continue;
            }
            current.push(new);
            self.vertical_rec(row + 1, left - add, rows, cols, current, out);
            current.pop();
        }
    }

    /// Partitions obtained by adding a horizontal strip of `strip` boxes
    /// (at most one box per column), truncated to the `rows` x `cols` box.
    pub fn add_horizontal_strip(&self, strip: u32, rows: u32, cols: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        self.horizontal_rec(1, strip, rows, cols, &mut current, &mut out);
        out
    }

    // A horizontal strip addition is an interlacing: old part at `row - 1`
    // bounds the new part at `row` from above, so one box per column.
    fn horizontal_rec(
        &self,
        row: usize,
        left: u32,
        rows: u32,
        cols: u32,
        current: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if left == 0 {
            let mut parts = current.clone();
            if current.len() < self.len() {
                parts.extend_from_slice(&self.0[current.len()..]);
            }
            out.push(Partition::new(parts));
            return;
        }
        if row > rows as usize {
            return;
        }
        let lo = self.part(row);
        let upper = if row == 1 { cols } else { self.part(row - 1) };
        let hi = upper.min(cols).min(lo + left);
        for new in lo..=hi {
            current.push(new);
            self.horizontal_rec(row + 1, left - (new - lo), rows, cols, current, out);
            current.pop();
        }
    }
}

/// All partitions fitting in a `rows` x `cols` box, sorted by size.
pub fn partitions_in_box(rows: u32, cols: u32) -> Vec<Partition> {
    fn rec(rows_left: u32, cap: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        out.push(Partition(current.clone()));
        if rows_left == 0 {
            return;
        }
        for first in (1..=cap).rev() {
            current.push(first);
            rec(rows_left - 1, first, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    rec(rows, cols, &mut current, &mut out);
    out.sort_by_key(|p| (p.size(), p.0.clone()));
    out
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}
