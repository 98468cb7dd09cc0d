//! Dense matrices over one of the supported rings, and diagonal reduction.

mod kaplansky;
mod snf;

pub use kaplansky::{
    complete_unimodular, kaplansky_pq, reduce_triangular_2x2, KaplanskyRow, ReductionTrace,
};
pub use snf::{smith_normal_form, verify_snf, SnfCertificate, SnfChecks};

use std::fmt;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::ring::{RingElement, RingId};

/// Row-major matrix with a uniform ring tag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixR {
    ring: RingId,
    rows: usize,
    cols: usize,
    entries: Vec<RingElement>,
}

/// A 2×2 block `[[m00, m01], [m10, m11]]` acting on a pair of rows or columns.
pub type Block = [[RingElement; 2]; 2];

impl MatrixR {
    pub fn new(ring: RingId, rows: usize, cols: usize, entries: Vec<RingElement>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        if let Some(e) = entries.iter().find(|e| e.ring() != ring) {
            return Err(Error::RingMismatch(ring, e.ring()));
        }
        Ok(MatrixR {
            ring,
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(ring: RingId, rows: Vec<Vec<RingElement>>) -> Result<Self> {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != n_cols) {
            return Err(Error::Shape("ragged rows".into()));
        }
        Self::new(ring, n_rows, n_cols, rows.into_iter().flatten().collect())
    }

    pub fn from_i64(ring: RingId, rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            ring,
            rows.iter()
                .map(|r| r.iter().map(|&n| RingElement::from_i64(ring, n)).collect())
                .collect(),
        )
    }

    pub fn zero(ring: RingId, rows: usize, cols: usize) -> Self {
        MatrixR {
            ring,
            rows,
            cols,
            entries: vec![RingElement::zero(ring); rows * cols],
        }
    }

    pub fn identity(ring: RingId, n: usize) -> Self {
        let mut m = Self::zero(ring, n, n);
        for i in 0..n {
            m.set(i, i, RingElement::one(ring));
        }
        m
    }

    pub fn diag(ring: RingId, rows: usize, cols: usize, diagonal: Vec<RingElement>) -> Self {
        let mut m = Self::zero(ring, rows, cols);
        for (i, e) in diagonal.into_iter().enumerate() {
            m.set(i, i, e);
        }
        m
    }

    pub fn ring(&self) -> RingId {
        self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn entries(&self) -> &[RingElement] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &RingElement {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, e: RingElement) {
        assert_eq!(e.ring(), self.ring, "ring mismatch");
        self.entries[i * self.cols + j] = e;
    }

    pub fn row(&self, i: usize) -> &[RingElement] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<RingElement>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn diagonal(&self) -> Vec<RingElement> {
        (0..self.rows.min(self.cols))
            .map(|i| self.get(i, i).clone())
            .collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(RingElement::is_zero)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zero(self.ring, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, rhs: &MatrixR) -> Result<MatrixR> {
        if self.ring != rhs.ring {
            return Err(Error::RingMismatch(self.ring, rhs.ring));
        }
        if self.cols != rhs.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zero(self.ring, self.rows, rhs.cols);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = RingElement::zero(self.ring);
                for k in 0..self.cols {
                    let (a, b) = (self.get(i, k), rhs.get(k, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    /// Left-multiplies rows `i` and `j` by `block`:
    /// `row_i <- m00*row_i + m01*row_j`, `row_j <- m10*row_i + m11*row_j`.
    pub fn apply_rows(&mut self, i: usize, j: usize, block: &Block) {
        for col in 0..self.cols {
            let (x, y) = (self.get(i, col).clone(), self.get(j, col).clone());
            let (nx, ny) = combine(&x, &y, block);
            self.set(i, col, nx);
            self.set(j, col, ny);
        }
    }

    /// Right-multiplies columns `i` and `j` by `block`:
    /// `col_i <- m00*col_i + m10*col_j`, `col_j <- m01*col_i + m11*col_j`.
    pub fn apply_cols(&mut self, i: usize, j: usize, block: &Block) {
        let t = transpose_block(block);
        for row in 0..self.rows {
            let (x, y) = (self.get(row, i).clone(), self.get(row, j).clone());
            let (nx, ny) = combine(&x, &y, &t);
            self.set(row, i, nx);
            self.set(row, j, ny);
        }
    }

    /// Multiplies row `i` by `w`.
    pub fn scale_row(&mut self, i: usize, w: &RingElement) {
        for col in 0..self.cols {
            let e = self.get(i, col) * w;
            self.set(i, col, e);
        }
    }

    /// SHA-256 over the canonical text of the matrix.
    pub fn digest(&self) -> String {
        let mut h = Sha256::new();
        h.update(format!("{}\n{}x{}\n", self.ring, self.rows, self.cols));
        for e in &self.entries {
            h.update(e.to_string());
            h.update("\n");
        }
        hex::encode(h.finalize())
    }
}

fn combine(x: &RingElement, y: &RingElement, b: &Block) -> (RingElement, RingElement) {
    (
        &(&b[0][0] * x) + &(&b[0][1] * y),
        &(&b[1][0] * x) + &(&b[1][1] * y),
    )
}

fn transpose_block(b: &Block) -> Block {
    [
        [b[0][0].clone(), b[1][0].clone()],
        [b[0][1].clone(), b[1][1].clone()],
    ]
}

pub(crate) fn block_det(b: &Block) -> RingElement {
    &(&b[0][0] * &b[1][1]) - &(&b[0][1] * &b[1][0])
}

pub(crate) fn block_to_matrix(ring: RingId, b: &Block) -> MatrixR {
    MatrixR::from_rows(ring, b.iter().map(|r| r.to_vec()).collect()).expect("2x2 block")
}

impl fmt::Display for MatrixR {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Determinant by cofactor expansion along the first row.
pub fn det(a: &MatrixR) -> Result<RingElement> {
    if !a.is_square() {
        return Err(Error::NonSquare {
            rows: a.rows,
            cols: a.cols,
        });
    }
    let idx: Vec<usize> = (0..a.rows).collect();
    Ok(minor_det(a, 0, &idx))
}

fn minor_det(a: &MatrixR, row: usize, cols: &[usize]) -> RingElement {
    match cols.len() {
        0 => RingElement::one(a.ring),
        1 => a.get(row, cols[0]).clone(),
        _ => {
            let mut acc = RingElement::zero(a.ring);
            for (k, &c) in cols.iter().enumerate() {
                let e = a.get(row, c);
                if e.is_zero() {
                    continue;
                }
                let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
                let term = e * &minor_det(a, row + 1, &rest);
                acc = if k % 2 == 0 {
                    &acc + &term
                } else {
                    &acc - &term
                };
            }
            acc
        }
    }
}
