use std::cmp::Ordering;
use std::fmt;

use crate::exactnum::{Field, Matrix};

/// A subspace of `F^n`, stored as the nonzero rows of a reduced
/// row-echelon basis, so equal subspaces compare equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace<F: Field> {
    ambient: usize,
    rows: Vec<Vec<F>>,
}

impl<F: Field> Subspace<F> {
    pub fn span(ambient: usize, vectors: &[Vec<F>]) -> Self {
        let m = Matrix::from_rows(vectors.to_vec(), ambient).expect("vectors of ambient length");
        let ech = m.row_reduce();
        let rows = (0..ech.rank).map(|r| ech.reduced.row(r).to_vec()).collect();
        Subspace { ambient, rows }
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, rows: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        let id: Vec<Vec<F>> = (0..ambient)
            .map(|i| (0..ambient).map(|j| if i == j { F::one() } else { F::zero() }).collect())
            .collect();
        Subspace { ambient, rows: id }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vec<F>] {
        &self.rows
    }

    pub fn contains(&self, v: &[F]) -> bool {
        let mut all = self.rows.clone();
        all.push(v.to_vec());
        Subspace::span(self.ambient, &all).dim() == self.dim()
    }

    pub fn is_subspace_of(&self, other: &Subspace<F>) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }

    pub fn sum(&self, other: &Subspace<F>) -> Subspace<F> {
        let mut all = self.rows.clone();
        all.extend(other.rows.iter().cloned());
        Subspace::span(self.ambient, &all)
    }

    /// `{y : ⟨y, u⟩ = 0 for all u}` under the standard pairing.
    pub fn annihilator(&self) -> Subspace<F> {
        if self.rows.is_empty() {
            return Subspace::full(self.ambient);
        }
        let m = Matrix::from_rows(self.rows.clone(), self.ambient).expect("row lengths");
        Subspace::span(self.ambient, &m.kernel_basis())
    }

    pub fn intersect(&self, other: &Subspace<F>) -> Subspace<F> {
        self.annihilator().sum(&other.annihilator()).annihilator()
    }
}

impl<F: Field> Ord for Subspace<F> {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.ambient, self.dim())
            .cmp(&(other.ambient, other.dim()))
            .then_with(|| self.to_string().cmp(&other.to_string()))
    }
}

impl<F: Field> PartialOrd for Subspace<F> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<F: Field> fmt::Display for Subspace<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("<")?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            let parts: Vec<String> = r.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", parts.join(","))?;
        }
        f.write_str(">")
    }
}

impl<F: Field> fmt::Debug for Subspace<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::Rational;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| Rational::from(x)).collect()
    }

    #[test]
    fn lattice_operations() {
        let a = Subspace::span(3, &[v(&[1, 0, 0]), v(&[0, 1, 0])]);
        let b = Subspace::span(3, &[v(&[0, 1, 1]), v(&[2, 2, 0])]);
        assert_eq!(a.intersect(&b), Subspace::span(3, &[v(&[1, 1, 0])]));
        assert_eq!(a.sum(&b), Subspace::full(3));
        assert_eq!(a.annihilator(), Subspace::span(3, &[v(&[0, 0, 5])]));
        assert!(Subspace::zero(3).is_subspace_of(&a));
        assert!(!b.is_subspace_of(&a));
        assert_eq!(Subspace::span(2, &[v(&[2, 4])]), Subspace::span(2, &[v(&[-1, -2])]));
    }
}
