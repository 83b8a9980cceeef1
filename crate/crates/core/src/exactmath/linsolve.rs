use num_traits::{One, Zero};
use thiserror::Error;

use super::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("linear system is inconsistent")]
    NoSolution,
    #[error("ragged system: row {row} has {found} entries, expected {expected}")]
    Ragged { row: usize, found: usize, expected: usize },
    #[error("right-hand side has {found} entries, expected {expected}")]
    RhsLength { found: usize, expected: usize },
}

/// Solution set of `A x = b`: `particular + span(kernel)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub particular: Vec<Rational>,
    pub kernel: Vec<Vec<Rational>>,
}

/// Exact Gauss-Jordan elimination over the rationals.
///
/// `cols` is given explicitly so that systems with zero rows still know their
/// number of unknowns.
pub fn solve_linear(system: &[Vec<Rational>], rhs: &[Rational], cols: usize) -> Result<Solution, SolveError> {
    if rhs.len() != system.len() {
        return Err(SolveError::RhsLength {
            found: rhs.len(),
            expected: system.len(),
        });
    }
    let mut m: Vec<Vec<Rational>> = Vec::with_capacity(system.len());
    for (row, (r, b)) in system.iter().zip(rhs).enumerate() {
        if r.len() != cols {
            return Err(SolveError::Ragged {
                row,
                found: r.len(),
                expected: cols,
            });
        }
        let mut aug = r.clone();
        aug.push(b.clone());
        m.push(aug);
    }
    let pivots = reduce(&mut m, cols);

    // inconsistent if a zero row has a nonzero rhs
    for row in m.iter().skip(pivots.len()) {
        if !row[cols].is_zero() {
            return Err(SolveError::NoSolution);
        }
    }

    let mut particular = vec![Rational::zero(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        particular[c] = m[r][cols].clone();
    }
    let pivot_set: Vec<bool> = {
        let mut v = vec![false; cols];
        for &c in &pivots {
            v[c] = true;
        }
        v
    };
    let kernel = (0..cols)
        .filter(|&c| !pivot_set[c])
        .map(|free| {
            let mut v = vec![Rational::zero(); cols];
            v[free] = Rational::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[r][free].clone();
            }
            v
        })
        .collect();
    Ok(Solution { particular, kernel })
}

/// Kernel basis of a homogeneous system.
pub fn kernel(system: &[Vec<Rational>], cols: usize) -> Result<Vec<Vec<Rational>>, SolveError> {
    let rhs = vec![Rational::zero(); system.len()];
    solve_linear(system, &rhs, cols).map(|s| s.kernel)
}

/// Brings `m` (with `cols` coefficient columns, extra columns carried along)
/// to reduced row echelon form; returns the pivot columns.
fn reduce(m: &mut [Vec<Rational>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = Rational::one() / m[r][c].clone();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(c) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(system: &[Vec<Rational>], cols: usize) -> usize {
    let mut m = system.to_vec();
    reduce(&mut m, cols).len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::rational::int;

    fn row(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn one_dimensional_kernel() {
        let sol = solve_linear(&[row(&[1, 1]), row(&[0, 0])], &row(&[0, 0]), 2).unwrap();
        assert_eq!(sol.kernel, vec![row(&[-1, 1])]);
    }

    #[test]
    fn identity_system() {
        let b = row(&[3, -4, 5]);
        let id: Vec<_> = (0..3).map(|i| (0..3).map(|j| int((i == j) as i64)).collect()).collect();
        let sol = solve_linear(&id, &b, 3).unwrap();
        assert_eq!(sol.particular, b);
        assert!(sol.kernel.is_empty());
    }

    #[test]
    fn inconsistent_system() {
        assert_eq!(
            solve_linear(&[row(&[1]), row(&[1])], &row(&[1, 2]), 1),
            Err(SolveError::NoSolution)
        );
    }

    #[test]
    fn empty_system_has_full_kernel() {
        let k = kernel(&[], 3).unwrap();
        assert_eq!(k.len(), 3);
    }

    #[test]
    fn ragged_rejected() {
        assert!(matches!(
            solve_linear(&[row(&[1, 2]), row(&[1])], &row(&[0, 0]), 2),
            Err(SolveError::Ragged { row: 1, .. })
        ));
    }
}
