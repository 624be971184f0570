use super::{AlgebraError, Polynomial};
use itertools::Itertools;

/// Dense matrix of polynomials, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Polynomial>) -> Result<Self, AlgebraError> {
        if rows == 0 || cols == 0 || entries.len() != rows * cols {
            return Err(AlgebraError::Shape {
                rows,
                cols,
                entries: entries.len(),
            });
        }
        let n = entries[0].nvars();
        if let Some(bad) = entries.iter().find(|p| p.nvars() != n) {
            return Err(AlgebraError::RingMismatch {
                left: n,
                right: bad.nvars(),
            });
        }
        Ok(PolyMatrix {
            rows,
            cols,
            entries,
        })
    }

    /// Builds a matrix from its rows; all rows must have the same length.
    pub fn from_rows(rows: Vec<Vec<Polynomial>>) -> Result<Self, AlgebraError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(AlgebraError::Shape {
                rows: r,
                cols: c,
                entries: rows.iter().map(Vec::len).sum(),
            });
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Polynomial {
        &self.entries[r * self.cols + c]
    }

    pub fn transpose(&self) -> PolyMatrix {
        let mut entries = Vec::with_capacity(self.entries.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                entries.push(self.get(r, c).clone());
            }
        }
        PolyMatrix {
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    /// Determinant of the square submatrix on the given rows and columns,
    /// by cofactor expansion along the first selected row.
    pub fn sub_determinant(&self, rows: &[usize], cols: &[usize]) -> Polynomial {
        debug_assert_eq!(rows.len(), cols.len());
        let nvars = self.entries[0].nvars();
        match rows.len() {
            0 => Polynomial::one(nvars),
            1 => self.get(rows[0], cols[0]).clone(),
            _ => {
                let mut acc = Polynomial::zero(nvars);
                for (k, &c) in cols.iter().enumerate() {
                    let entry = self.get(rows[0], c);
                    if entry.is_zero() {
                        continue;
                    }
                    let rest: Vec<usize> = cols.iter().copied().filter(|&cc| cc != c).collect();
                    let term = entry * &self.sub_determinant(&rows[1..], &rest);
                    acc = if k % 2 == 0 { &acc + &term } else { &acc - &term };
                }
                acc
            }
        }
    }

    pub fn determinant(&self) -> Result<Polynomial, AlgebraError> {
        if self.rows != self.cols {
            return Err(AlgebraError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let idx: Vec<usize> = (0..self.rows).collect();
        Ok(self.sub_determinant(&idx, &idx))
    }

    /// All `k x k` minors, ordered lexicographically by row subset and then
    /// by column subset.
    pub fn minors(&self, k: usize) -> Result<Vec<Polynomial>, AlgebraError> {
        if k == 0 || k > self.rows.min(self.cols) {
            return Err(AlgebraError::MinorSize {
                k,
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut out = Vec::new();
        for rs in (0..self.rows).combinations(k) {
            for cs in (0..self.cols).combinations(k) {
                out.push(self.sub_determinant(&rs, &cs));
            }
        }
        Ok(out)
    }
}
