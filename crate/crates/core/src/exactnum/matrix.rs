use std::fmt;

use super::{Field, Polynomial, Rational};
use crate::error::{Error, Result};

/// Dense row-major matrix over an exact field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

/// Reduced row-echelon form together with its rank and pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon<F: Field> {
    pub reduced: Matrix<F>,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, F::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<F>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    /// Builds from rows; all rows must have length `cols`.
    pub fn from_rows(rows: Vec<Vec<F>>, cols: usize) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row of length {} in a matrix with {cols} columns",
                    row.len()
                )));
            }
            data.extend(row);
        }
        Ok(Matrix { rows: n, cols, data })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| F::from_i64(v)).collect())
                .collect(),
            cols,
        )
        .expect("ragged literal")
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(cols: &[Vec<F>], rows: usize) -> Self {
        Matrix::from_fn(rows, cols.len(), |r, c| cols[c][r].clone())
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

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &F {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F) {
        self.data[r * self.cols + c] = v;
    }

    pub fn entries(&self) -> &[F] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[F] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<F> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(F::is_zero)
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Matrix<G> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn mul(&self, rhs: &Matrix<F>) -> Self {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out: Matrix<F> = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] = out.data[idx].plus(&a.times(b));
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(F::zero(), |acc, (a, b)| acc.plus(&a.times(b)))
            })
            .collect()
    }

    pub fn add(&self, rhs: &Matrix<F>) -> Self {
        assert_eq!(self.shape(), rhs.shape(), "matrix sum shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.plus(b)).collect(),
        }
    }

    pub fn sub(&self, rhs: &Matrix<F>) -> Self {
        assert_eq!(self.shape(), rhs.shape(), "matrix difference shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.minus(b)).collect(),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        self.map(|a| a.times(c))
    }

    pub fn neg(&self) -> Self {
        self.map(F::negate)
    }

    /// `[self | rhs]`
    pub fn hstack(&self, rhs: &Matrix<F>) -> Self {
        assert_eq!(self.rows, rhs.rows, "hstack row mismatch");
        Matrix::from_fn(self.rows, self.cols + rhs.cols, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                rhs.get(r, c - self.cols).clone()
            }
        })
    }

    /// `[self; rhs]`
    pub fn vstack(&self, rhs: &Matrix<F>) -> Self {
        assert_eq!(self.cols, rhs.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend(rhs.data.iter().cloned());
        Matrix {
            rows: self.rows + rhs.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn block_diag(blocks: &[&Matrix<F>]) -> Self {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Matrix::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            out.set_block(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Matrix<F>) {
        for r in 0..block.rows {
            for c in 0..block.cols {
                self.set(r0 + r, c0 + c, block.get(r, c).clone());
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        Matrix::from_fn(rows, cols, |r, c| self.get(r0 + r, c0 + c).clone())
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        Matrix::from_fn(idx.len(), self.cols, |r, c| self.get(idx[r], c).clone())
    }

    pub fn select_cols(&self, idx: &[usize]) -> Self {
        Matrix::from_fn(self.rows, idx.len(), |r, c| self.get(r, idx[c]).clone())
    }

    pub fn kronecker(&self, rhs: &Matrix<F>) -> Self {
        Matrix::from_fn(self.rows * rhs.rows, self.cols * rhs.cols, |r, c| {
            self.get(r / rhs.rows, c / rhs.cols)
                .times(rhs.get(r % rhs.rows, c % rhs.cols))
        })
    }

    pub fn trace(&self) -> F {
        (0..self.rows.min(self.cols)).fold(F::zero(), |acc, i| acc.plus(self.get(i, i)))
    }

    /// Reduced row-echelon form by Gauss-Jordan elimination.
    pub fn row_reduce(&self) -> Echelon<F> {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut prow = 0;
        for col in 0..m.cols {
            if prow == m.rows {
                break;
            }
            let Some(found) = (prow..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(prow, found);
            let inv = m.get(prow, col).inverse();
            for c in col..m.cols {
                let v = m.get(prow, c).times(&inv);
                m.set(prow, c, v);
            }
            for r in 0..m.rows {
                if r == prow {
                    continue;
                }
                let factor = m.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for c in col..m.cols {
                    let p = m.get(prow, c);
                    if p.is_zero() {
                        continue;
                    }
                    let v = m.get(r, c).minus(&factor.times(p));
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            prow += 1;
        }
        Echelon {
            rank: pivots.len(),
            reduced: m,
            pivots,
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.row_reduce().rank
    }

    /// Basis of the right null space together with the free column of each vector.
    ///
    /// The vector for free column `f` has a one at `f` and zeros at every
    /// other free column, so coordinates in this basis are read off the
    /// free positions.
    pub fn kernel_with_free(&self) -> (Vec<Vec<F>>, Vec<usize>) {
        let ech = self.row_reduce();
        let mut is_pivot = vec![false; self.cols];
        for &p in &ech.pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let basis = free
            .iter()
            .map(|&f| {
                let mut v = vec![F::zero(); self.cols];
                v[f] = F::one();
                for (i, &p) in ech.pivots.iter().enumerate() {
                    v[p] = ech.reduced.get(i, f).negate();
                }
                v
            })
            .collect();
        (basis, free)
    }

    pub fn kernel_basis(&self) -> Vec<Vec<F>> {
        self.kernel_with_free().0
    }

    /// A particular solution of `self * x = rhs`, or `None` if inconsistent.
    pub fn solve(&self, rhs: &[F]) -> Result<Option<Vec<F>>> {
        if rhs.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side of length {} for {} equations",
                rhs.len(),
                self.rows
            )));
        }
        let aug = self.hstack(&Matrix::from_columns(&[rhs.to_vec()], self.rows));
        let ech = aug.row_reduce();
        if ech.pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![F::zero(); self.cols];
        for (i, &p) in ech.pivots.iter().enumerate() {
            x[p] = ech.reduced.get(i, self.cols).clone();
        }
        Ok(Some(x))
    }

    /// Solves `self * X = rhs` column by column.
    pub fn solve_matrix(&self, rhs: &Matrix<F>) -> Result<Option<Matrix<F>>> {
        let aug = self.hstack(rhs);
        let ech = aug.row_reduce();
        if ech.pivots.iter().any(|&p| p >= self.cols) {
            return Ok(None);
        }
        let mut x = Matrix::zeros(self.cols, rhs.cols);
        for (i, &p) in ech.pivots.iter().enumerate() {
            for c in 0..rhs.cols {
                x.set(p, c, ech.reduced.get(i, self.cols + c).clone());
            }
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(Matrix::zeros(0, 0));
        }
        let ech = self.hstack(&Matrix::identity(n)).row_reduce();
        if ech.pivots.len() < n || ech.pivots[n - 1] != n - 1 {
            return None;
        }
        Some(ech.reduced.block(0, n, n, n))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Basis of the column space, as the pivot columns of `self`.
    pub fn column_space(&self) -> Matrix<F> {
        let ech = self.row_reduce();
        self.select_cols(&ech.pivots)
    }

    /// Columns extending the column space of `self` to the whole space,
    /// chosen among the standard basis vectors.
    pub fn complement_columns(&self) -> Matrix<F> {
        let n = self.rows;
        let ech = self.transpose().row_reduce();
        let mut is_pivot = vec![false; n];
        for &p in &ech.pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..n).filter(|&i| !is_pivot[i]).collect();
        Matrix::from_fn(n, free.len(), |r, c| if r == free[c] { F::one() } else { F::zero() })
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Matrix::identity(self.rows);
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }
}

impl Matrix<Rational> {
    /// Evaluates a polynomial at a square matrix by Horner's rule.
    pub fn eval_poly(&self, p: &Polynomial) -> Self {
        let n = self.rows;
        p.coeffs().iter().rev().fold(Matrix::zeros(n, n), |acc, c| {
            acc.mul(self).add(&Matrix::identity(n).scale(c))
        })
    }

    /// Minimal polynomial by searching for the first linear dependence
    /// among `I, M, M^2, ...`.
    pub fn minimal_polynomial(&self) -> Polynomial {
        assert!(self.is_square(), "minimal polynomial of a non-square matrix");
        let n = self.rows;
        let mut powers: Vec<Vec<Rational>> = vec![Matrix::<Rational>::identity(n).data];
        let mut current = Matrix::identity(n);
        loop {
            current = current.mul(self);
            let basis = Matrix::from_columns(&powers, n * n);
            if let Some(coeffs) = basis.solve(&current.data).expect("shapes agree") {
                let mut c: Vec<Rational> = coeffs.iter().map(|v| -v).collect();
                c.push(Rational::one());
                return Polynomial::new(c);
            }
            powers.push(current.data.clone());
        }
    }

    /// Companion matrix of a monic polynomial: multiplication by `x` on
    /// `ℚ[x]/(p)` in the basis `1, x, ..., x^{d-1}`.
    pub fn companion(p: &Polynomial) -> Self {
        let d = p.degree().expect("companion of zero polynomial");
        assert!(p.is_monic(), "companion matrix needs a monic polynomial");
        let mut m = Matrix::zeros(d, d);
        for i in 1..d {
            m.set(i, i - 1, Rational::one());
        }
        for i in 0..d {
            m.set(i, d - 1, -p.coeff(i));
        }
        m
    }
}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
        }
        write!(f, "]({}x{})", self.rows, self.cols)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::RationalFunction;

    type Q = Rational;

    #[test]
    fn identity_is_reduced() {
        let i = Matrix::<Q>::identity(3);
        let e = i.row_reduce();
        assert_eq!(e.reduced, i);
        assert_eq!(e.rank, 3);
        assert_eq!(e.pivots, vec![0, 1, 2]);
        assert!(i.kernel_basis().is_empty());
    }

    #[test]
    fn dependent_rows() {
        let m = Matrix::<Q>::from_i64_rows(&[&[1, 2], &[2, 4]]);
        let e = m.row_reduce();
        assert_eq!(e.reduced, Matrix::from_i64_rows(&[&[1, 2], &[0, 0]]));
        assert_eq!(e.rank, 1);
    }

    #[test]
    fn rank_over_rational_functions() {
        // second row is t times the first
        let t = RationalFunction::t();
        let t2 = t.mul(&t);
        let m = Matrix::from_rows(
            vec![vec![t.clone(), RationalFunction::one()], vec![t2, t.clone()]],
            2,
        )
        .unwrap();
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(Matrix::<Q>::zeros(2, 3).kernel_basis().len(), 3);
        let lambda = Q::new(5, 3).unwrap();
        let m = Matrix::from_rows(vec![vec![Q::one(), lambda.clone()]], 2).unwrap();
        assert_eq!(m.kernel_basis(), vec![vec![-lambda, Q::one()]]);
    }

    #[test]
    fn solve_examples() {
        let v = vec![Q::from(3), Q::from(-1)];
        assert_eq!(Matrix::<Q>::identity(2).solve(&v).unwrap(), Some(v.clone()));
        let m = Matrix::<Q>::from_i64_rows(&[&[1, 1]]);
        let x = m.solve(&[Q::zero()]).unwrap().unwrap();
        assert_eq!(m.mul_vec(&x), vec![Q::zero()]);
        let z = Matrix::<Q>::from_i64_rows(&[&[0]]);
        assert_eq!(z.solve(&[Q::one()]).unwrap(), None);
        assert!(z.solve(&[Q::one(), Q::one()]).is_err());
    }

    #[test]
    fn minimal_polynomial_and_companion() {
        let p = Polynomial::from_i64s(&[1, 0, 1]).pow(2);
        let c = Matrix::companion(&p);
        assert_eq!(c.minimal_polynomial(), p);
        assert!(c.eval_poly(&p).is_zero());
        let d = Matrix::<Q>::from_i64_rows(&[&[2, 0], &[0, 2]]);
        assert_eq!(d.minimal_polynomial(), Polynomial::from_i64s(&[-2, 1]));
    }

    #[test]
    fn inverse_and_complement() {
        let m = Matrix::<Q>::from_i64_rows(&[&[2, 1], &[1, 1]]);
        assert_eq!(m.mul(&m.inverse().unwrap()), Matrix::identity(2));
        assert!(Matrix::<Q>::from_i64_rows(&[&[1, 2], &[2, 4]]).inverse().is_none());
        let col = Matrix::<Q>::from_i64_rows(&[&[1], &[1], &[0]]);
        let comp = col.complement_columns();
        assert_eq!(col.hstack(&comp).rank(), 3);
    }
}
