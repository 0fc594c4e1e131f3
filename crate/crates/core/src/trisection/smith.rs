//! Smith normal form over the integers, with the unimodular transforms.

use std::fmt;

/// Dense row-major integer matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        IntMatrix {
            rows: rows.len(),
            cols,
            data: rows.concat(),
        }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vec<i64>], height: usize) -> Self {
        let mut m = Self::zeros(height, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), height, "column length");
            for (i, &v) in c.iter().enumerate() {
                m[(i, j)] = v;
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[i64]) -> Vec<i64> {
        assert_eq!(self.cols, v.len(), "shape mismatch");
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// row[dst] += c * row[src]
    fn add_row(&mut self, dst: usize, src: usize, c: i64) {
        for j in 0..self.cols {
            let v = self[(src, j)];
            self[(dst, j)] = checked(self[(dst, j)], c, v);
        }
    }

    /// col[dst] += c * col[src]
    fn add_col(&mut self, dst: usize, src: usize, c: i64) {
        for i in 0..self.rows {
            let v = self[(i, src)];
            self[(i, dst)] = checked(self[(i, dst)], c, v);
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            self[(r, j)] = -self[(r, j)];
        }
    }
}

fn checked(a: i64, c: i64, v: i64) -> i64 {
    c.checked_mul(v)
        .and_then(|p| a.checked_add(p))
        .expect("integer overflow in Smith normal form")
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = i64;
    fn index(&self, (i, j): (usize, usize)) -> &i64 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i64 {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[i64]> = (0..self.rows).map(|i| self.row(i)).collect();
        f.debug_list().entries(rows).finish()
    }
}

/// `left · A · right = diag(diagonal)` with `left`, `right` unimodular,
/// diagonal entries non-negative and each dividing the next.
#[derive(Debug, Clone)]
pub struct SmithForm {
    pub diagonal: Vec<i64>,
    pub left: IntMatrix,
    pub right: IntMatrix,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.diagonal.iter().take_while(|&&d| d != 0).count()
    }
}

pub fn smith_normal_form(a: &IntMatrix) -> SmithForm {
    let (m, n) = (a.rows, a.cols);
    let mut d = a.clone();
    let mut left = IntMatrix::identity(m);
    let mut right = IntMatrix::identity(n);

    for t in 0..m.min(n) {
        // Smallest non-zero entry of the trailing block becomes the pivot.
        let Some((pi, pj)) = (t..m)
            .flat_map(|i| (t..n).map(move |j| (i, j)))
            .filter(|&(i, j)| d[(i, j)] != 0)
            .min_by_key(|&(i, j)| d[(i, j)].abs())
        else {
            break;
        };
        d.swap_rows(t, pi);
        left.swap_rows(t, pi);
        d.swap_cols(t, pj);
        right.swap_cols(t, pj);

        loop {
            let mut dirty = false;
            for i in t + 1..m {
                let q = d[(i, t)].div_euclid(d[(t, t)]);
                if q != 0 {
                    d.add_row(i, t, -q);
                    left.add_row(i, t, -q);
                }
                if d[(i, t)] != 0 {
                    d.swap_rows(t, i);
                    left.swap_rows(t, i);
                    dirty = true;
                }
            }
            for j in t + 1..n {
                let q = d[(t, j)].div_euclid(d[(t, t)]);
                if q != 0 {
                    d.add_col(j, t, -q);
                    right.add_col(j, t, -q);
                }
                if d[(t, j)] != 0 {
                    d.swap_cols(t, j);
                    right.swap_cols(t, j);
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            // Divisibility: fold any offending row into the pivot row.
            let pivot = d[(t, t)];
            let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| d[(i, j)] % pivot != 0));
            match bad {
                Some(i) => {
                    d.add_row(t, i, 1);
                    left.add_row(t, i, 1);
                }
                None => break,
            }
        }
        if d[(t, t)] < 0 {
            d.negate_row(t);
            left.negate_row(t);
        }
    }

    SmithForm {
        diagonal: (0..m.min(n)).map(|i| d[(i, i)]).collect(),
        left,
        right,
    }
}

/// Non-trivial invariant factors plus the free rank of `coker A`.
pub fn cokernel(a: &IntMatrix) -> (usize, Vec<i64>) {
    let snf = smith_normal_form(a);
    let rank = snf.rank();
    let free = a.rows - rank;
    let torsion = snf.diagonal[..rank].iter().copied().filter(|&d| d > 1).collect();
    (free, torsion)
}

/// An integer solution of `A x = b`, if one exists.
pub fn solve_integer(a: &IntMatrix, b: &[i64]) -> Option<Vec<i64>> {
    assert_eq!(a.rows, b.len(), "right-hand side length");
    let snf = smith_normal_form(a);
    let ub = snf.left.mul_vec(b);
    let rank = snf.rank();
    let mut y = vec![0; a.cols];
    for (i, &c) in ub.iter().enumerate() {
        if i < rank {
            let di = snf.diagonal[i];
            if c % di != 0 {
                return None;
            }
            y[i] = c / di;
        } else if c != 0 {
            return None;
        }
    }
    Some(snf.right.mul_vec(&y))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag_of(rows: &[Vec<i64>]) -> Vec<i64> {
        smith_normal_form(&IntMatrix::from_rows(rows)).diagonal
    }

    #[test]
    fn small_cases() {
        assert_eq!(diag_of(&[vec![0]]), vec![0]);
        assert_eq!(diag_of(&[vec![-1]]), vec![1]);
        assert_eq!(diag_of(&[vec![2]]), vec![2]);
        assert_eq!(diag_of(&[vec![2, 0], vec![0, 3]]), vec![1, 6]);
        assert_eq!(diag_of(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]), vec![2, 6, 12]);
    }

    #[test]
    fn transforms_reproduce_diagonal() {
        let a = IntMatrix::from_rows(&[vec![4, 6, 0], vec![2, 8, 10], vec![0, 2, 3], vec![1, 1, 1]]);
        let snf = smith_normal_form(&a);
        let d = snf.left.mul(&a).mul(&snf.right);
        for i in 0..d.rows() {
            for j in 0..d.cols() {
                let want = if i == j { snf.diagonal[i] } else { 0 };
                assert_eq!(d[(i, j)], want);
            }
        }
        for w in snf.diagonal.windows(2) {
            assert!(w[1] == 0 || w[1] % w[0] == 0);
        }
    }

    #[test]
    fn cokernel_of_lens_pairing() {
        assert_eq!(cokernel(&IntMatrix::from_rows(&[vec![2]])), (0, vec![2]));
        assert_eq!(cokernel(&IntMatrix::from_rows(&[vec![0]])), (1, vec![]));
        assert_eq!(cokernel(&IntMatrix::from_rows(&[vec![1]])), (0, vec![]));
    }

    #[test]
    fn integer_solve() {
        let a = IntMatrix::from_columns(&[vec![2, 0], vec![0, 3]], 2);
        assert_eq!(solve_integer(&a, &[4, 9]), Some(vec![2, 3]));
        assert_eq!(solve_integer(&a, &[1, 0]), None);
        let a = IntMatrix::from_columns(&[vec![1, 0]], 2);
        assert_eq!(solve_integer(&a, &[0, 1]), None);
        assert_eq!(solve_integer(&a, &[-5, 0]), Some(vec![-5]));
    }
}
