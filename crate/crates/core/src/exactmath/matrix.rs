use std::collections::HashMap;
use std::fmt;

use num_traits::{One, Zero};

use super::poly::Poly;
use super::rational::Rational;
use super::var::Var;

/// Dense matrix with polynomial entries, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Poly>,
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        PolyMatrix {
            rows,
            cols,
            data: vec![Poly::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = PolyMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Poly::one());
        }
        m
    }

    pub fn scalar(n: usize, c: Poly) -> Self {
        let mut m = PolyMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, c.clone());
        }
        m
    }

    /// Builds from nested rows; returns `None` if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<Poly>>) -> Option<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return None;
        }
        Some(PolyMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Poly {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, p: Poly) {
        self.data[r * self.cols + c] = p;
    }

    pub fn to_rows(&self) -> Vec<Vec<Poly>> {
        self.data
            .chunks(self.cols.max(1))
            .take(self.rows)
            .map(<[Poly]>::to_vec)
            .collect()
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Poly)> {
        self.data
            .iter()
            .enumerate()
            .map(move |(k, p)| (k / self.cols, k % self.cols, p))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Poly::is_zero)
    }

    pub fn map(&self, f: impl Fn(&Poly) -> Poly) -> PolyMatrix {
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn substitute(&self, assignments: &HashMap<Var, Poly>) -> PolyMatrix {
        self.map(|p| p.substitute(assignments))
    }

    pub fn mul(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.cols, other.rows, "matrix dimension mismatch");
        let mut out = PolyMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Poly::zero();
                for k in 0..self.cols {
                    let a = self.get(i, k);
                    let b = other.get(k, j);
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    pub fn add(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, c: &Poly) -> PolyMatrix {
        self.map(|p| p * c)
    }

    pub fn pow(&self, e: u32) -> PolyMatrix {
        assert!(self.is_square());
        let mut acc = PolyMatrix::identity(self.rows);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn block_diag(&self, other: &PolyMatrix) -> PolyMatrix {
        let mut out = PolyMatrix::zeros(self.rows + other.rows, self.cols + other.cols);
        for (i, j, p) in self.entries() {
            out.set(i, j, p.clone());
        }
        for (i, j, p) in other.entries() {
            out.set(self.rows + i, self.cols + j, p.clone());
        }
        out
    }

    /// Determinant by dynamic programming over column subsets; exact and
    /// division-free, `O(n 2^n)` polynomial products.
    pub fn det(&self) -> Poly {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Poly::one();
        }
        assert!(n <= 20, "determinant size limit exceeded");
        // dp[mask] = signed sum over assignments of the first popcount(mask) rows to `mask`
        let mut dp: Vec<Poly> = vec![Poly::zero(); 1 << n];
        dp[0] = Poly::one();
        for mask in 0usize..(1 << n) {
            if dp[mask].is_zero() {
                continue;
            }
            let row = mask.count_ones() as usize;
            if row == n {
                continue;
            }
            let cur = dp[mask].clone();
            for col in 0..n {
                if mask & (1 << col) != 0 {
                    continue;
                }
                let entry = self.get(row, col);
                if entry.is_zero() {
                    continue;
                }
                // sign: number of already-used columns greater than `col`
                let inversions = (mask >> (col + 1)).count_ones();
                let term = &cur * entry;
                let next = mask | (1 << col);
                if inversions % 2 == 0 {
                    dp[next] += &term;
                } else {
                    dp[next] -= &term;
                }
            }
        }
        dp[(1 << n) - 1].clone()
    }

    fn minor(&self, skip_r: usize, skip_c: usize) -> PolyMatrix {
        let rows = (0..self.rows)
            .filter(|&r| r != skip_r)
            .map(|r| {
                (0..self.cols)
                    .filter(|&c| c != skip_c)
                    .map(|c| self.get(r, c).clone())
                    .collect()
            })
            .collect();
        PolyMatrix::from_rows(rows).unwrap_or_else(|| PolyMatrix::zeros(0, 0))
    }

    /// Inverse over the polynomial ring. Exists exactly when the determinant
    /// is a nonzero rational constant.
    pub fn inverse(&self) -> Option<PolyMatrix> {
        let det = self.det().constant_value()?;
        if det.is_zero() {
            return None;
        }
        let n = self.rows;
        let inv_det = Rational::one() / det;
        let mut out = PolyMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let cof = if n == 1 { Poly::one() } else { self.minor(j, i).det() };
                let cof = if (i + j) % 2 == 0 { cof } else { -cof };
                out.set(i, j, cof.scale(&inv_det));
            }
        }
        Some(out)
    }

    /// Integer power; negative exponents require an invertible matrix.
    pub fn signed_pow(&self, e: i32) -> Option<PolyMatrix> {
        if e >= 0 {
            Some(self.pow(e as u32))
        } else {
            Some(self.inverse()?.pow(e.unsigned_abs()))
        }
    }
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.to_rows()).finish()
    }
}
