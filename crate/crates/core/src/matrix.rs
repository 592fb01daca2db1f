//! Dense matrices of polynomials and fraction-free determinants.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::poly::MultiPoly;

/// Up to this size determinants use memoized cofactor expansion; above it,
/// Bareiss elimination.
pub const COFACTOR_LIMIT: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    nvars: usize,
    entries: Vec<MultiPoly>,
}

impl PolyMatrix {
    /// Builds a matrix from row-major entries.
    pub fn new(rows: usize, cols: usize, entries: Vec<MultiPoly>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        let nvars = entries.first().map_or(0, MultiPoly::nvars);
        if entries.iter().any(|e| e.nvars() != nvars) {
            return Err(Error::Dimension(
                "matrix entries from different rings".into(),
            ));
        }
        Ok(PolyMatrix {
            rows,
            cols,
            nvars,
            entries,
        })
    }

    pub fn from_rows(rows: Vec<Vec<MultiPoly>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Self::new(nrows, ncols, rows.into_iter().flatten().collect())
    }

    pub fn identity(size: usize, nvars: usize) -> Self {
        let entries = (0..size * size)
            .map(|i| {
                if i / size == i % size {
                    MultiPoly::one(nvars)
                } else {
                    MultiPoly::zero(nvars)
                }
            })
            .collect();
        PolyMatrix {
            rows: size,
            cols: size,
            nvars,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn get(&self, row: usize, col: usize) -> &MultiPoly {
        &self.entries[row * self.cols + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: MultiPoly) {
        self.entries[row * self.cols + col] = value;
    }

    pub fn row(&self, row: usize) -> &[MultiPoly] {
        &self.entries[row * self.cols..(row + 1) * self.cols]
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Copy without the given row and column.
    pub fn minor(&self, row: usize, col: usize) -> PolyMatrix {
        let entries = (0..self.rows)
            .filter(|&r| r != row)
            .flat_map(|r| {
                (0..self.cols)
                    .filter(move |&c| c != col)
                    .map(move |c| self.get(r, c).clone())
            })
            .collect();
        PolyMatrix {
            rows: self.rows - 1,
            cols: self.cols - 1,
            nvars: self.nvars,
            entries,
        }
    }

    /// Copy without the given column.
    pub fn without_column(&self, col: usize) -> PolyMatrix {
        let entries = (0..self.rows)
            .flat_map(|r| {
                (0..self.cols)
                    .filter(move |&c| c != col)
                    .map(move |c| self.get(r, c).clone())
            })
            .collect();
        PolyMatrix {
            rows: self.rows,
            cols: self.cols - 1,
            nvars: self.nvars,
            entries,
        }
    }

    fn require_square(&self) -> Result<()> {
        if self.rows != self.cols {
            return Err(Error::Dimension(format!(
                "determinant of a non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        Ok(())
    }

    /// Exact determinant: memoized cofactor expansion for small sizes,
    /// Bareiss elimination otherwise.
    pub fn determinant(&self) -> Result<MultiPoly> {
        self.require_square()?;
        if self.rows <= COFACTOR_LIMIT {
            self.determinant_cofactor()
        } else {
            self.determinant_bareiss()
        }
    }

    /// Laplace expansion along rows with the minors memoized by column set.
    pub fn determinant_cofactor(&self) -> Result<MultiPoly> {
        self.require_square()?;
        if self.rows == 0 {
            return Ok(MultiPoly::one(self.nvars));
        }
        let full = (1u64 << self.cols) - 1;
        let mut table = top_minor_table(self, self.rows);
        Ok(table
            .remove(&full)
            .unwrap_or_else(|| MultiPoly::zero(self.nvars)))
    }

    /// Fraction-free Gaussian elimination; every division is exact in the
    /// polynomial ring.
    pub fn determinant_bareiss(&self) -> Result<MultiPoly> {
        self.require_square()?;
        let n = self.rows;
        if n == 0 {
            return Ok(MultiPoly::one(self.nvars));
        }
        let mut m = self.clone();
        let mut negate = false;
        let mut previous = MultiPoly::one(self.nvars);
        for k in 0..n - 1 {
            if m.get(k, k).is_zero() {
                // smallest nonzero pivot keeps the intermediate expressions short
                let pivot = (k + 1..n)
                    .filter(|&r| !m.get(r, k).is_zero())
                    .min_by_key(|&r| m.get(r, k).len());
                match pivot {
                    None => return Ok(MultiPoly::zero(self.nvars)),
                    Some(r) => {
                        m.swap_rows(k, r);
                        negate = !negate;
                    }
                }
            }
            let pivot = m.get(k, k).clone();
            for i in k + 1..n {
                let lead = m.get(i, k).clone();
                for j in k + 1..n {
                    let updated = &(m.get(i, j) * &pivot) - &(&lead * m.get(k, j));
                    let updated = if previous.is_one() {
                        updated
                    } else {
                        updated.div_exact(&previous)?
                    };
                    m.set(i, j, updated);
                }
                m.set(i, k, MultiPoly::zero(self.nvars));
            }
            previous = pivot;
        }
        let det = m.get(n - 1, n - 1).clone();
        Ok(if negate { -det } else { det })
    }

    /// Determinants of the square matrices obtained by deleting one column of
    /// an `r x (r+1)` matrix; entry `j` deletes column `j`.
    pub fn maximal_minors(&self) -> Result<Vec<MultiPoly>> {
        if self.cols != self.rows + 1 {
            return Err(Error::Dimension(format!(
                "maximal minors need an r x (r+1) matrix, got {}x{}",
                self.rows, self.cols
            )));
        }
        if self.rows <= COFACTOR_LIMIT {
            let full = (1u64 << self.cols) - 1;
            let table = top_minor_table(self, self.rows);
            Ok((0..self.cols)
                .map(|j| {
                    table
                        .get(&(full & !(1u64 << j)))
                        .cloned()
                        .unwrap_or_else(|| MultiPoly::zero(self.nvars))
                })
                .collect())
        } else {
            (0..self.cols)
                .map(|j| self.without_column(j).determinant_bareiss())
                .collect()
        }
    }
}

/// For every set `S` of `depth` columns (as a bitmask), the determinant of
/// the first `depth` rows restricted to `S`. Zero minors are omitted.
fn top_minor_table(m: &PolyMatrix, depth: usize) -> HashMap<u64, MultiPoly> {
    assert!(m.cols < 64);
    let mut level: HashMap<u64, MultiPoly> = HashMap::new();
    level.insert(0, MultiPoly::one(m.nvars));
    for r in 0..depth {
        let mut next: HashMap<u64, MultiPoly> = HashMap::new();
        for (&mask, sub) in &level {
            for c in 0..m.cols {
                if mask & (1 << c) != 0 {
                    continue;
                }
                let entry = m.get(r, c);
                if entry.is_zero() {
                    continue;
                }
                // expansion along the last row of the (r+1)x(r+1) block: the
                // sign depends on the position of c inside the new column set
                let position = (mask & ((1u64 << c) - 1)).count_ones() as usize;
                let term = entry * sub;
                let term = if (r + position) % 2 == 1 { -term } else { term };
                let target = mask | (1 << c);
                match next.get_mut(&target) {
                    Some(acc) => *acc = &*acc + &term,
                    None => {
                        next.insert(target, term);
                    }
                }
            }
        }
        next.retain(|_, p| !p.is_zero());
        level = next;
    }
    level
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn k(v: i64) -> MultiPoly {
        MultiPoly::constant(3, int(v))
    }

    fn x(i: usize) -> MultiPoly {
        MultiPoly::var(3, i - 1)
    }

    #[test]
    fn identity_has_unit_determinant() {
        let id = PolyMatrix::identity(2, 3);
        assert!(id.determinant().unwrap().is_one());
        assert!(id.determinant_bareiss().unwrap().is_one());
    }

    #[test]
    fn small_vandermonde() {
        let m = PolyMatrix::from_rows(vec![vec![k(1), k(1)], vec![k(1), k(2)]]).unwrap();
        assert!(m.determinant().unwrap().is_one());
    }

    #[test]
    fn three_point_q_matrix() {
        let m = PolyMatrix::from_rows(vec![
            vec![k(1), k(1), -x(1)],
            vec![k(1), k(2), -x(2)],
            vec![k(1), k(3), -x(3)],
        ])
        .unwrap();
        let expected = -x(1) + k(2) * x(2) - x(3);
        assert_eq!(m.determinant().unwrap(), expected);
        assert_eq!(m.determinant_bareiss().unwrap(), expected);
    }

    #[test]
    fn non_square_is_rejected() {
        let m = PolyMatrix::from_rows(vec![vec![k(1), k(2)]]).unwrap();
        assert!(matches!(m.determinant(), Err(Error::Dimension(_))));
        assert!(matches!(m.determinant_bareiss(), Err(Error::Dimension(_))));
    }

    #[test]
    fn bareiss_handles_zero_pivots() {
        let m = PolyMatrix::from_rows(vec![
            vec![k(0), x(1), k(1)],
            vec![x(2), k(0), k(0)],
            vec![k(1), k(1), x(3)],
        ])
        .unwrap();
        assert_eq!(
            m.determinant_bareiss().unwrap(),
            m.determinant_cofactor().unwrap()
        );
    }

    #[test]
    fn maximal_minors_match_column_deletion() {
        let m = PolyMatrix::from_rows(vec![
            vec![k(1), x(1), k(2), x(3)],
            vec![x(2), k(0), k(1), k(1)],
            vec![k(1), x(3), x(1), k(5)],
        ])
        .unwrap();
        let minors = m.maximal_minors().unwrap();
        for (j, minor) in minors.iter().enumerate() {
            assert_eq!(*minor, m.without_column(j).determinant_bareiss().unwrap());
        }
    }
}
