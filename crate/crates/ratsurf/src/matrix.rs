//! Dense matrices over a finite field: row reduction, rank, kernel.
//!
//! Entries are raw element encodings; the owning [`FieldRef`] travels with
//! the matrix.  Reduction is plain Gauss–Jordan with leftmost-pivot
//! selection, which keeps every reduced form — and everything derived from
//! one, like kernel bases and generator matrices — deterministic.

use crate::field::FieldRef;

#[derive(Clone)]
#[derive(Debug)]
pub struct FqMatrix {
    field: FieldRef,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl FqMatrix {
    pub fn zero(field: &FieldRef, rows: usize, cols: usize) -> Self {
        FqMatrix { field: field.clone(), rows, cols, data: vec![0; rows * cols] }
    }

    /// Builds from row vectors, which must all have equal length.
    pub fn from_rows(field: &FieldRef, rows: Vec<Vec<u64>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let n = rows.len();
        let data = rows.into_iter().flatten().collect();
        FqMatrix { field: field.clone(), rows: n, cols, data }
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn rows_iter(&self) -> impl Iterator<Item = &[u64]> {
        self.data.chunks(self.cols.max(1)).take(self.rows)
    }

    /// Appends the rows of `other` (same width) below this matrix.
    pub fn stack(&mut self, other: &FqMatrix) {
        assert_eq!(self.cols, other.cols, "stack width mismatch");
        self.data.extend_from_slice(&other.data);
        self.rows += other.rows;
    }

    /// In-place reduced row echelon form.  Returns the pivot columns in
    /// increasing order; the rank is their count.
    pub fn rref(&mut self) -> Vec<usize> {
        let f = self.field.clone();
        let mut pivots = Vec::new();
        let mut target = 0usize;
        for col in 0..self.cols {
            let Some(src) = (target..self.rows).find(|&r| self.at(r, col) != 0) else {
                continue;
            };
            self.swap_rows(src, target);
            let scale = f.inv(self.at(target, col));
            if scale != 1 {
                for c in col..self.cols {
                    let v = self.at(target, c);
                    self.set(target, c, f.mul(v, scale));
                }
            }
            for r in 0..self.rows {
                if r == target {
                    continue;
                }
                let factor = self.at(r, col);
                if factor == 0 {
                    continue;
                }
                for c in col..self.cols {
                    let v = f.sub(self.at(r, c), f.mul(factor, self.at(target, c)));
                    self.set(r, c, v);
                }
            }
            pivots.push(col);
            target += 1;
            if target == self.rows {
                break;
            }
        }
        pivots
    }

    /// Drops all-zero rows (useful after [`FqMatrix::rref`]).
    pub fn drop_zero_rows(&mut self) {
        let cols = self.cols.max(1);
        let mut kept = 0usize;
        for r in 0..self.rows {
            if self.row(r).iter().any(|&v| v != 0) {
                if kept != r {
                    let (dst, src) = (kept * cols, r * cols);
                    for c in 0..self.cols {
                        self.data[dst + c] = self.data[src + c];
                    }
                }
                kept += 1;
            }
        }
        self.rows = kept;
        self.data.truncate(kept * self.cols);
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// A basis of the right kernel {v : M·v = 0}, one vector per free
    /// column, ordered by free column index.  Each vector has a 1 in its
    /// free column, so the basis is in "reduced" form and deterministic.
    pub fn kernel_basis(&self) -> Vec<Vec<u64>> {
        let f = self.field.clone();
        let mut reduced = self.clone();
        let pivots = reduced.rref();
        let pivot_of_col: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (i, &c) in pivots.iter().enumerate() {
                v[c] = Some(i);
            }
            v
        };
        let mut basis = Vec::with_capacity(self.cols - pivots.len());
        for free in 0..self.cols {
            if pivot_of_col[free].is_some() {
                continue;
            }
            let mut v = vec![0u64; self.cols];
            v[free] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(reduced.at(i, free));
            }
            basis.push(v);
        }
        basis
    }

    /// The product (row vector) · (this matrix).
    pub fn encode(&self, message: &[u64]) -> Vec<u64> {
        assert_eq!(message.len(), self.rows, "message length != row count");
        let f = &self.field;
        let mut out = vec![0u64; self.cols];
        for (r, &m) in message.iter().enumerate() {
            if m == 0 {
                continue;
            }
            for (c, slot) in out.iter_mut().enumerate() {
                *slot = f.add(*slot, f.mul(m, self.at(r, c)));
            }
        }
        out
    }

    /// The product (this matrix) · (column vector).
    pub fn apply(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.cols, "vector length != column count");
        let f = &self.field;
        (0..self.rows)
            .map(|r| {
                let mut acc = 0u64;
                for (c, &x) in v.iter().enumerate() {
                    acc = f.add(acc, f.mul(self.at(r, c), x));
                }
                acc
            })
            .collect()
    }

    /// Whether `v` lies in the row space.
    pub fn row_space_contains(&self, v: &[u64]) -> bool {
        assert_eq!(v.len(), self.cols);
        let f = self.field.clone();
        let mut reduced = self.clone();
        let pivots = reduced.rref();
        let mut rem = v.to_vec();
        for (i, &pc) in pivots.iter().enumerate() {
            let factor = rem[pc];
            if factor == 0 {
                continue;
            }
            for c in 0..self.cols {
                rem[c] = f.sub(rem[c], f.mul(factor, reduced.at(i, c)));
            }
        }
        rem.iter().all(|&x| x == 0)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    #[test]
    fn rref_of_known_matrix_over_f5() {
        let f5 = Field::new(5, 1).unwrap();
        let mut m = FqMatrix::from_rows(
            &f5,
            vec![vec![1, 2, 3, 4], vec![2, 1, 0, 1], vec![3, 3, 1, 2]],
        );
        let pivots = m.rref();
        assert_eq!(pivots, vec![0, 1, 2]);
        // Hand-reduced: x4 column ends up (0, 1, 4).
        assert_eq!(m.row(0), &[1, 0, 0, 0]);
        assert_eq!(m.row(1), &[0, 1, 0, 1]);
        assert_eq!(m.row(2), &[0, 0, 1, 4]);
        // Every pivot column is a standard basis vector.
        for (i, &c) in pivots.iter().enumerate() {
            for r in 0..3 {
                assert_eq!(m.at(r, c), if r == i { 1 } else { 0 });
            }
        }
    }

    #[test]
    fn kernel_vectors_annihilate() {
        let f7 = Field::new(7, 1).unwrap();
        let m = FqMatrix::from_rows(
            &f7,
            vec![vec![1, 2, 3, 4, 5], vec![2, 4, 6, 1, 3], vec![3, 6, 2, 5, 1]],
        );
        let kernel = m.kernel_basis();
        assert_eq!(kernel.len(), 5 - m.rank());
        for v in &kernel {
            assert!(m.apply(v).iter().all(|&x| x == 0), "kernel vector not annihilated");
        }
    }

    #[test]
    fn kernel_dimension_of_duplicated_rows() {
        let f4 = Field::new(2, 2).unwrap();
        // Note (2,3,1) would be 2·(1,2,3) in this field; (2,3,2) is not.
        let m = FqMatrix::from_rows(&f4, vec![vec![1, 2, 3], vec![1, 2, 3], vec![2, 3, 2]]);
        assert_eq!(m.rank(), 2);
        assert_eq!(m.kernel_basis().len(), 1);
    }

    #[test]
    fn encode_matches_apply_transpose() {
        let f9 = Field::new(3, 2).unwrap();
        let m = FqMatrix::from_rows(&f9, vec![vec![1, 3, 5], vec![2, 4, 8]]);
        assert_eq!(m.encode(&[1, 0]), vec![1, 3, 5]);
        let c = m.encode(&[3, 7]);
        assert!(m.row_space_contains(&c));
        assert!(!m.row_space_contains(&[1, 0, 0]));
    }

    #[test]
    fn stack_and_drop_zero_rows() {
        let f3 = Field::new(3, 1).unwrap();
        let mut m = FqMatrix::from_rows(&f3, vec![vec![1, 2], vec![1, 1]]);
        m.stack(&FqMatrix::from_rows(&f3, vec![vec![0, 0], vec![1, 2]]));
        assert_eq!(m.nrows(), 4);
        m.rref();
        m.drop_zero_rows();
        assert_eq!(m.nrows(), 2);
    }
}
