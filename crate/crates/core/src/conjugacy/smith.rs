//! Dense integer matrices and Smith normal form over `i64` with overflow
//! detection.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

fn overflow() -> Error {
    Error::Overflow("integer matrix arithmetic")
}

fn checked_axpy(a: i64, q: i64, b: i64) -> Result<i64> {
    // a - q * b
    q.checked_mul(b).and_then(|p| a.checked_sub(p)).ok_or_else(overflow)
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
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntMatrix {
            rows: r,
            cols: c,
            data: rows.concat(),
        }
    }

    /// Builds an `rows × columns.len()` matrix from its columns.
    pub fn from_columns(rows: usize, columns: &[Vec<i64>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, &x) in col.iter().enumerate() {
                m[(i, j)] = x;
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

    pub fn column(&self, j: usize) -> Vec<i64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn checked_mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc: i64 = 0;
                for k in 0..self.cols {
                    acc = checked_axpy(acc, -self[(i, k)], other[(k, j)])?;
                }
                out[(i, j)] = acc;
            }
        }
        Ok(out)
    }

    pub fn checked_mul_vec(&self, v: &[i64]) -> Result<Vec<i64>> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .try_fold(0i64, |acc, (&a, &b)| checked_axpy(acc, -a, b))
            })
            .collect()
    }

    pub fn checked_sub(&self, other: &IntMatrix) -> Result<IntMatrix> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.checked_sub(*b).ok_or_else(overflow))
            .collect::<Result<_>>()?;
        Ok(IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
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

    /// row[target] -= q * row[source]
    fn row_axpy(&mut self, target: usize, q: i64, source: usize) -> Result<()> {
        for j in 0..self.cols {
            self[(target, j)] = checked_axpy(self[(target, j)], q, self[(source, j)])?;
        }
        Ok(())
    }

    /// col[target] -= q * col[source]
    fn col_axpy(&mut self, target: usize, q: i64, source: usize) -> Result<()> {
        for i in 0..self.rows {
            self[(i, target)] = checked_axpy(self[(i, target)], q, self[(i, source)])?;
        }
        Ok(())
    }

    fn negate_row(&mut self, i: usize) -> Result<()> {
        for j in 0..self.cols {
            self[(i, j)] = self[(i, j)].checked_neg().ok_or_else(overflow)?;
        }
        Ok(())
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = i64;
    fn index(&self, (i, j): (usize, usize)) -> &i64 {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i64 {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.to_rows()).finish()
    }
}

/// `U · M · V = D` with `U`, `V` unimodular and `D` diagonal, nonnegative,
/// `d_1 | d_2 | …`; nonzero diagonal entries come first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SmithForm {
    pub fn diagonal(&self) -> Vec<i64> {
        (0..self.d.rows.min(self.d.cols)).map(|i| self.d[(i, i)]).collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().take_while(|&&x| x != 0).count()
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> Result<SmithForm> {
    let (r, c) = (m.rows, m.cols);
    let mut d = m.clone();
    let mut u = IntMatrix::identity(r);
    let mut v = IntMatrix::identity(c);

    for t in 0..r.min(c) {
        loop {
            // smallest nonzero entry of the trailing block becomes the pivot
            let mut best: Option<(usize, usize)> = None;
            for i in t..r {
                for j in t..c {
                    let x = d[(i, j)];
                    if x != 0 && best.is_none_or(|(bi, bj)| x.unsigned_abs() < d[(bi, bj)].unsigned_abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return finish(u, d, v);
            };
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let p = d[(t, t)];
            let mut dirty = false;
            for i in t + 1..r {
                let q = d[(i, t)] / p;
                if q != 0 {
                    d.row_axpy(i, q, t)?;
                    u.row_axpy(i, q, t)?;
                }
                dirty |= d[(i, t)] != 0;
            }
            for j in t + 1..c {
                let q = d[(t, j)] / p;
                if q != 0 {
                    d.col_axpy(j, q, t)?;
                    v.col_axpy(j, q, t)?;
                }
                dirty |= d[(t, j)] != 0;
            }
            if dirty {
                continue;
            }
            // pivot must divide the whole trailing block
            let offender = (t + 1..r).find(|&i| (t + 1..c).any(|j| d[(i, j)] % p != 0));
            if let Some(i) = offender {
                d.row_axpy(t, -1, i)?;
                u.row_axpy(t, -1, i)?;
                continue;
            }
            break;
        }
        if d[(t, t)] < 0 {
            d.negate_row(t)?;
            u.negate_row(t)?;
        }
    }
    finish(u, d, v)
}

fn finish(u: IntMatrix, d: IntMatrix, v: IntMatrix) -> Result<SmithForm> {
    Ok(SmithForm { u, d, v })
}

/// Integer solutions of `M x = b`: a particular solution and a basis of the
/// kernel lattice. `None` if there is no integer solution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineLattice {
    pub particular: Vec<i64>,
    pub kernel: Vec<Vec<i64>>,
}

impl AffineLattice {
    /// `particular + Σ t_k kernel_k`
    pub fn point(&self, t: &[i64]) -> Result<Vec<i64>> {
        assert_eq!(t.len(), self.kernel.len());
        let mut x = self.particular.clone();
        for (tk, col) in t.iter().zip(&self.kernel) {
            for (xi, &ci) in x.iter_mut().zip(col) {
                *xi = checked_axpy(*xi, -tk, ci)?;
            }
        }
        Ok(x)
    }
}

pub fn solve_integer_system(m: &IntMatrix, b: &[i64]) -> Result<Option<AffineLattice>> {
    assert_eq!(m.rows, b.len());
    let snf = smith_normal_form(m)?;
    let ub = snf.u.checked_mul_vec(b)?;
    let diag = snf.diagonal();
    let rank = snf.rank();
    let mut y = vec![0i64; m.cols];
    for (i, &rhs) in ub.iter().enumerate() {
        if i < rank {
            if rhs % diag[i] != 0 {
                return Ok(None);
            }
            y[i] = rhs / diag[i];
        } else if rhs != 0 {
            return Ok(None);
        }
    }
    let particular = snf.v.checked_mul_vec(&y)?;
    let kernel = (rank..m.cols).map(|j| snf.v.column(j)).collect();
    Ok(Some(AffineLattice { particular, kernel }))
}
