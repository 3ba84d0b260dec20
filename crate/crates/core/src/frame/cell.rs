//! Sheared wrapping cells.
//!
//! A wedge's frequency support is folded into a `rows × cols` cell modulo the
//! integer lattice generated by `(rows, shear)` and `(0, cols)`, written in
//! coordinates `(a, b)` that are `(ξ1, ξ2)` for wedges near the horizontal
//! axis and `(ξ2, ξ1)` otherwise. Choosing `shear ≈ slope · rows` aligns the
//! first lattice vector with the wedge axis so that antipodal halves pack
//! along it. The fold is a bijection onto the cell as long as no two support
//! points share a lattice class, which [`CellLayout::fit`] guarantees.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CellLayout {
    pub rows: usize,
    pub cols: usize,
    pub shear: i64,
    pub transposed: bool,
}

impl CellLayout {
    /// Plain square wrap without shear.
    pub fn square(n: usize) -> Self {
        CellLayout {
            rows: n,
            cols: n,
            shear: 0,
            transposed: false,
        }
    }

    pub fn len(&self) -> usize {
        self.rows * self.cols
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn oriented(&self, xi: [i64; 2]) -> (i64, i64) {
        if self.transposed {
            (xi[1], xi[0])
        } else {
            (xi[0], xi[1])
        }
    }

    /// Cell coordinates `(a0, b0)` of an integer frequency.
    pub fn place(&self, xi: [i64; 2]) -> (usize, usize) {
        let (a, b) = self.oriented(xi);
        let rows = self.rows as i64;
        let m = a.div_euclid(rows);
        let a0 = a.rem_euclid(rows);
        let b0 = (b - m * self.shear).rem_euclid(self.cols as i64);
        (a0 as usize, b0 as usize)
    }

    /// Row-major flat index of [`CellLayout::place`].
    pub fn flat_index(&self, xi: [i64; 2]) -> usize {
        let (a0, b0) = self.place(xi);
        a0 * self.cols + b0
    }

    /// Spatial position on the unit torus, in `(x1, x2)` order, of the
    /// coefficient with cell index `(k1, k2)`.
    ///
    /// These are the points of the dual lattice: `x·ξ` is an integer for
    /// every lattice vector `ξ`, which is what makes the twisted cell DFT a
    /// set of characters of the folded support.
    pub fn position(&self, k1: usize, k2: usize) -> [f64; 2] {
        let (rows, cols) = (self.rows as f64, self.cols as f64);
        let xa = k1 as f64 / rows - (k2 as f64) * (self.shear as f64) / (rows * cols);
        let xb = k2 as f64 / cols;
        let (xa, xb) = (xa.rem_euclid(1.0), xb.rem_euclid(1.0));
        if self.transposed {
            [xb, xa]
        } else {
            [xa, xb]
        }
    }

    /// Checks that the support folds injectively.
    pub fn verify_injective(&self, support: &[[i64; 2]]) -> Result<()> {
        let mut seen = HashSet::with_capacity(support.len());
        for &xi in support {
            if !seen.insert(self.flat_index(xi)) {
                return Err(Error::Construction(format!(
                    "support point {xi:?} collides in {}x{} cell (shear {})",
                    self.rows, self.cols, self.shear
                )));
            }
        }
        Ok(())
    }

    /// Smallest cell (by area, then by rows) into which the support folds
    /// injectively.
    ///
    /// `axis_angle` is the direction of the wedge centre in the `(ξ1, ξ2)`
    /// plane. Row counts are searched among 5-smooth integers in
    /// `[min_rows, 4 min_rows]`; for each the minimal admissible column count
    /// is computed exactly from the gaps between runs of folded points.
    pub fn fit(
        support: &[[i64; 2]],
        axis_angle: f64,
        min_rows: usize,
        min_cols: usize,
    ) -> Result<Self> {
        if support.is_empty() {
            return Err(Error::Construction("empty wedge support".into()));
        }
        let (c, s) = (axis_angle.cos(), axis_angle.sin());
        let transposed = s.abs() > c.abs();
        let slope = if transposed { c / s } else { s / c };
        let oriented: Vec<(i64, i64)> = support
            .iter()
            .map(|xi| if transposed { (xi[1], xi[0]) } else { (xi[0], xi[1]) })
            .collect();

        let mut best: Option<CellLayout> = None;
        for rows in smooth_numbers(min_rows.max(1), 4 * min_rows.max(1)) {
            let shear = (slope * rows as f64).round() as i64;
            let Some(folded) = FoldedClasses::new(&oriented, rows, shear) else {
                continue;
            };
            let lower = min_cols.max(folded.longest_run);
            if let Some(b) = &best {
                if rows * lower >= b.len() {
                    continue;
                }
            }
            let cols = smooth_numbers(lower, usize::MAX)
                .find(|&cols| folded.admits(cols))
                .expect("a column count beyond every span is always admissible");
            let candidate = CellLayout {
                rows,
                cols,
                shear,
                transposed,
            };
            if best.is_none_or(|b| candidate.len() < b.len()) {
                best = Some(candidate);
            }
        }
        let layout = best.ok_or_else(|| {
            Error::Construction(format!(
                "no injective cell with rows in [{min_rows}, {}]",
                4 * min_rows
            ))
        })?;
        layout.verify_injective(support)?;
        Ok(layout)
    }
}

/// Support folded along the first lattice vector only: per residue class of
/// `a`, the sorted values `b - m·shear`, summarized by run structure.
struct FoldedClasses {
    longest_run: usize,
    /// Ranges `[lo, hi]` of positive differences between distinct runs of a
    /// class. A column count is admissible iff none of its multiples falls in
    /// any range.
    gaps: Vec<(i64, i64)>,
}

impl FoldedClasses {
    fn new(points: &[(i64, i64)], rows: usize, shear: i64) -> Option<Self> {
        let r = rows as i64;
        let mut classes: Vec<Vec<i64>> = vec![Vec::new(); rows];
        for &(a, b) in points {
            let m = a.div_euclid(r);
            classes[a.rem_euclid(r) as usize].push(b - m * shear);
        }
        let mut longest_run = 1;
        let mut gaps = Vec::new();
        for class in &mut classes {
            if class.is_empty() {
                continue;
            }
            class.sort_unstable();
            let mut runs: Vec<(i64, i64)> = Vec::new();
            for &v in class.iter() {
                match runs.last_mut() {
                    Some((_, hi)) if v == *hi => return None,
                    Some((_, hi)) if v == *hi + 1 => *hi = v,
                    _ => runs.push((v, v)),
                }
            }
            for (i, &(lo_i, hi_i)) in runs.iter().enumerate() {
                longest_run = longest_run.max((hi_i - lo_i + 1) as usize);
                for &(lo_k, hi_k) in &runs[i + 1..] {
                    gaps.push((lo_k - hi_i, hi_k - lo_i));
                }
            }
        }
        gaps.sort_unstable();
        gaps.dedup();
        Some(FoldedClasses { longest_run, gaps })
    }

    fn admits(&self, cols: usize) -> bool {
        let c = cols as i64;
        self.gaps.iter().all(|&(lo, hi)| (hi / c) * c < lo)
    }
}

/// 5-smooth integers (of the form 2^a 3^b 5^c) in `[lo, hi]`, ascending.
pub fn smooth_numbers(lo: usize, hi: usize) -> impl Iterator<Item = usize> {
    (lo..=hi).filter(|&n| {
        let mut n = n;
        if n == 0 {
            return false;
        }
        for p in [2, 3, 5] {
            while n % p == 0 {
                n /= p;
            }
        }
        n == 1
    })
}
