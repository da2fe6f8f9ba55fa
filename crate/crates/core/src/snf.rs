//! Smith normal form over the integers with arbitrary-precision entries.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense row-major integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Panics if the rows are ragged.
    pub fn from_rows<T: Into<BigInt> + Copy>(rows: &[Vec<T>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged matrix");
            for (j, &x) in row.iter().enumerate() {
                m[(i, j)] = x.into();
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

    /// row[dst] -= q * row[src]
    fn sub_row(&mut self, dst: usize, src: usize, q: &BigInt) {
        for j in 0..self.cols {
            let t = &self.data[src * self.cols + j] * q;
            self.data[dst * self.cols + j] -= t;
        }
    }

    /// col[dst] -= q * col[src]
    fn sub_col(&mut self, dst: usize, src: usize, q: &BigInt) {
        for i in 0..self.rows {
            let t = &self.data[i * self.cols + src] * q;
            self.data[i * self.cols + dst] -= t;
        }
    }

    fn negate_col(&mut self, j: usize) {
        for i in 0..self.rows {
            let x = &mut self.data[i * self.cols + j];
            *x = -std::mem::take(x);
        }
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let t = a * &other[(k, j)];
                    out[(i, j)] += t;
                }
            }
        }
        out
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    /// Invariant factors `d_1 | d_2 | ... | d_rank`, all positive.
    pub factors: Vec<BigInt>,
    pub rank: usize,
}

/// Smith form together with a unimodular `V` such that `U * M * V` is the
/// diagonal matrix of invariant factors for some unimodular `U`.
#[derive(Debug, Clone)]
pub struct SmithDecomposition {
    pub form: SmithForm,
    pub col_transform: IntMatrix,
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    reduce(m.clone(), None)
}

pub fn smith_decomposition(m: &IntMatrix) -> SmithDecomposition {
    let mut v = IntMatrix::identity(m.cols());
    let form = reduce(m.clone(), Some(&mut v));
    SmithDecomposition {
        form,
        col_transform: v,
    }
}

fn min_abs_entry(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..a.rows {
        for j in t..a.cols {
            let x = &a[(i, j)];
            if x.is_zero() {
                continue;
            }
            if best.map_or(true, |(bi, bj)| x.abs() < a[(bi, bj)].abs()) {
                best = Some((i, j));
                if x.abs().is_one() {
                    return best;
                }
            }
        }
    }
    best
}

fn reduce(mut a: IntMatrix, mut v: Option<&mut IntMatrix>) -> SmithForm {
    let mut factors = Vec::new();
    let diag = a.rows.min(a.cols);
    for t in 0..diag {
        let Some((pi, pj)) = min_abs_entry(&a, t) else {
            break;
        };
        a.swap_rows(t, pi);
        a.swap_cols(t, pj);
        if let Some(v) = v.as_deref_mut() {
            v.swap_cols(t, pj);
        }
        loop {
            // clear column t below and row t to the right, restarting with
            // a smaller pivot whenever a remainder survives
            let mut dirty = false;
            for i in t + 1..a.rows {
                if a[(i, t)].is_zero() {
                    continue;
                }
                let q = a[(i, t)].div_floor(&a[(t, t)]);
                a.sub_row(i, t, &q);
                if !a[(i, t)].is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..a.cols {
                if a[(t, j)].is_zero() {
                    continue;
                }
                let q = a[(t, j)].div_floor(&a[(t, t)]);
                a.sub_col(j, t, &q);
                if let Some(v) = v.as_deref_mut() {
                    v.sub_col(j, t, &q);
                }
                if !a[(t, j)].is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                let (pi, pj) = min_abs_in_cross(&a, t);
                a.swap_rows(t, pi);
                a.swap_cols(t, pj);
                if let Some(v) = v.as_deref_mut() {
                    v.swap_cols(t, pj);
                }
                continue;
            }
            // pivot must divide the remaining block
            let bad = (t + 1..a.rows)
                .find(|&i| (t + 1..a.cols).any(|j| !a[(i, j)].is_multiple_of(&a[(t, t)])));
            match bad {
                Some(i) => {
                    let one = BigInt::from(-1);
                    a.sub_row(t, i, &one);
                }
                None => break,
            }
        }
        if a[(t, t)].is_negative() {
            a.negate_col(t);
            if let Some(v) = v.as_deref_mut() {
                v.negate_col(t);
            }
        }
        factors.push(a[(t, t)].clone());
    }
    let rank = factors.len();
    SmithForm { factors, rank }
}

/// Smallest nonzero entry on row `t` or column `t` at or past the diagonal.
fn min_abs_in_cross(a: &IntMatrix, t: usize) -> (usize, usize) {
    let cells = (t..a.rows)
        .map(|i| (i, t))
        .chain((t + 1..a.cols).map(|j| (t, j)));
    cells
        .filter(|&c| !a[c].is_zero())
        .min_by(|&x, &y| a[x].abs().cmp(&a[y].abs()))
        .expect("cross has a nonzero entry")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factors(rows: &[Vec<i64>]) -> (Vec<i64>, usize) {
        let f = smith_normal_form(&IntMatrix::from_rows(rows));
        (
            f.factors.iter().map(|x| x.try_into().unwrap()).collect(),
            f.rank,
        )
    }

    #[test]
    fn identity() {
        assert_eq!(factors(&[vec![1, 0], vec![0, 1]]), (vec![1, 1], 2));
    }

    #[test]
    fn two_by_two() {
        assert_eq!(factors(&[vec![2, 4], vec![6, 8]]), (vec![2, 4], 2));
    }

    #[test]
    fn zero_matrix() {
        assert_eq!(factors(&[vec![0; 3], vec![0; 3], vec![0; 3]]), (vec![], 0));
    }

    #[test]
    fn empty_and_rectangular() {
        let f = smith_normal_form(&IntMatrix::zeros(0, 4));
        assert_eq!(f.rank, 0);
        assert_eq!(factors(&[vec![2, 0, 0], vec![0, 3, 0]]), (vec![1, 6], 2));
        assert_eq!(factors(&[vec![4], vec![6]]), (vec![2], 1));
    }

    #[test]
    fn pivot_must_divide_rest() {
        // diag(2, 3) has factors 1, 6
        assert_eq!(factors(&[vec![2, 0], vec![0, 3]]), (vec![1, 6], 2));
        assert_eq!(factors(&[vec![4, 0], vec![0, 6]]), (vec![2, 12], 2));
    }

    #[test]
    fn large_entries_do_not_overflow() {
        let big = i64::MAX;
        let (f, r) = factors(&[vec![big, big - 1], vec![big - 1, big - 2]]);
        // det = (2^63-1)(2^63-3) - (2^63-2)^2 = -1
        assert_eq!((f, r), (vec![1, 1], 2));
    }

    #[test]
    fn column_transform_diagonalizes_up_to_row_operations() {
        let m = IntMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
        let dec = smith_decomposition(&m);
        assert_eq!(
            dec.form.factors,
            vec![BigInt::from(2), BigInt::from(6), BigInt::from(12)]
        );
        let mv = m.mul(&dec.col_transform);
        // columns of M V span the same lattice as U^-1 D: column j is a
        // multiple of d_j
        for (j, d) in dec.form.factors.iter().enumerate() {
            for i in 0..3 {
                assert!(mv[(i, j)].is_multiple_of(d));
            }
        }
    }
}
