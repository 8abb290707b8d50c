//! Dense exact linear algebra over the rationals.

use super::Rational;

/// Row-major rational matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

/// Outcome of solving `A x = b` exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    Unique(Vec<Rational>),
    /// The columns of `A` are dependent.
    RankDeficient { rank: usize },
    /// No exact solution; `residual` is `b - A x` for the least-index pivot solution.
    Inconsistent { residual: Vec<Rational> },
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let n = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == m), "ragged matrix");
        Matrix {
            rows: n,
            cols: m,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn mul_vec(&self, x: &[Rational]) -> Vec<Rational> {
        assert_eq!(x.len(), self.cols);
        (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.get(r, c) * &x[c]).sum())
            .collect()
    }

    /// Reduced row echelon form, pivoting only in the first `pivot_cols`
    /// columns; returns the pivot columns.
    fn rref(&mut self, pivot_cols: usize) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..pivot_cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            if p != row {
                for c in 0..self.cols {
                    self.data.swap(p * self.cols + c, row * self.cols + c);
                }
            }
            let inv = self.get(row, col).recip().expect("pivot is nonzero");
            for c in 0..self.cols {
                let v = self.get(row, c) * &inv;
                self.set(row, c, v);
            }
            for r in 0..self.rows {
                if r == row || self.get(r, col).is_zero() {
                    continue;
                }
                let factor = self.get(r, col).clone();
                for c in 0..self.cols {
                    let v = self.get(r, c) - &(&factor * self.get(row, c));
                    self.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref(self.cols).len()
    }

    /// Solve `self * x = rhs`. Works for square and overdetermined systems.
    pub fn solve(&self, rhs: &[Rational]) -> Solution {
        assert_eq!(rhs.len(), self.rows);
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for (r, b) in rhs.iter().enumerate() {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, self.cols, b.clone());
        }
        let rank = aug.rref(self.cols).len();
        if rank < self.cols {
            return Solution::RankDeficient { rank };
        }
        let x: Vec<Rational> = (0..self.cols).map(|r| aug.get(r, self.cols).clone()).collect();
        if (self.cols..self.rows).any(|r| !aug.get(r, self.cols).is_zero()) {
            let ax = self.mul_vec(&x);
            let residual = rhs.iter().zip(ax).map(|(b, y)| b - y).collect();
            return Solution::Inconsistent { residual };
        }
        Solution::Unique(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from(x)).collect()
    }

    #[test]
    fn solves_square_system() {
        let a = Matrix::from_rows(vec![q(&[2, 1]), q(&[1, 3])]);
        match a.solve(&q(&[3, 5])) {
            Solution::Unique(x) => {
                assert_eq!(x, vec!["4/5".parse().unwrap(), "7/5".parse().unwrap()]);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn reports_rank_when_singular() {
        let a = Matrix::from_rows(vec![q(&[1, 2]), q(&[2, 4])]);
        assert_eq!(a.solve(&q(&[1, 2])), Solution::RankDeficient { rank: 1 });
        assert_eq!(a.rank(), 1);
    }

    #[test]
    fn overdetermined_consistency() {
        let a = Matrix::from_rows(vec![q(&[1, 0]), q(&[0, 1]), q(&[1, 1])]);
        assert_eq!(a.solve(&q(&[1, 2, 3])), Solution::Unique(q(&[1, 2])));
        match a.solve(&q(&[1, 2, 4])) {
            Solution::Inconsistent { residual } => assert_eq!(residual, q(&[0, 0, 1])),
            other => panic!("{other:?}"),
        }
    }
}
