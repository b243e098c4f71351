use super::{Rep, RepMap};
use crate::error::{Error, Result};
use crate::exactnum::{Field, Matrix};

/// The linear map `h ↦ (Y_a h_{s(a)} − h_{t(a)} X_a)_a` from vertex-indexed
/// matrices to arrow-indexed matrices, both flattened row-major.
///
/// Its kernel is `Hom(X, Y)` and its cokernel is `Ext¹(X, Y)`.
pub fn coboundary_matrix<F: Field>(x: &Rep<F>, y: &Rep<F>) -> Result<Matrix<F>> {
    x.check_same_quiver(y)?;
    let q = x.quiver();
    let mut var_off = Vec::with_capacity(q.vertex_count());
    let mut cols = 0;
    for v in 0..q.vertex_count() {
        var_off.push(cols);
        cols += y.dim(v) * x.dim(v);
    }
    let rows: usize = q.arrows().iter().map(|&(s, t)| y.dim(t) * x.dim(s)).sum();
    let mut m: Matrix<F> = Matrix::zeros(rows, cols);
    let mut row_off = 0;
    for (k, &(s, t)) in q.arrows().iter().enumerate() {
        let (xa, ya) = (x.arrow(k), y.arrow(k));
        let (xs, xt, yt) = (x.dim(s), x.dim(t), y.dim(t));
        let ys = y.dim(s);
        for r in 0..yt {
            for c in 0..xs {
                let row = row_off + r * xs + c;
                for j in 0..ys {
                    let coef = ya.get(r, j);
                    if !coef.is_zero() {
                        let col = var_off[s] + j * xs + c;
                        m.set(row, col, m.get(row, col).plus(coef));
                    }
                }
                for j in 0..xt {
                    let coef = xa.get(j, c);
                    if !coef.is_zero() {
                        let col = var_off[t] + r * xt + j;
                        m.set(row, col, m.get(row, col).minus(coef));
                    }
                }
            }
        }
        row_off += yt * xs;
    }
    Ok(m)
}

/// A basis of `Hom(X, Y)` together with the free positions of the solver:
/// basis element `i` has a one at `free[i]` and zero at the other free
/// positions, so coordinates are read off directly.
#[derive(Clone, Debug)]
pub struct HomSpace<F: Field> {
    pub basis: Vec<RepMap<F>>,
    pub free: Vec<usize>,
}

impl<F: Field> HomSpace<F> {
    pub fn new(x: &Rep<F>, y: &Rep<F>) -> Result<Self> {
        let delta = coboundary_matrix(x, y)?;
        let (vectors, free) = delta.kernel_with_free();
        let basis = vectors
            .iter()
            .map(|v| RepMap::from_vector(x, y, v))
            .collect::<Result<Vec<_>>>()?;
        Ok(HomSpace { basis, free })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of `f` in the basis.
    pub fn coordinates(&self, f: &RepMap<F>) -> Vec<F> {
        let v = f.to_vector();
        self.free.iter().map(|&i| v[i].clone()).collect()
    }

    pub fn combine(&self, coeffs: &[F]) -> Result<RepMap<F>> {
        let (Some(first), true) = (self.basis.first(), coeffs.len() == self.basis.len()) else {
            return Err(Error::DimensionMismatch("coefficient count".into()));
        };
        let mut acc = RepMap::zero(first.source(), first.target());
        for (c, b) in coeffs.iter().zip(&self.basis) {
            if !c.is_zero() {
                acc = acc.add(&b.scale(c))?;
            }
        }
        Ok(acc)
    }
}

pub fn hom_basis<F: Field>(x: &Rep<F>, y: &Rep<F>) -> Result<Vec<RepMap<F>>> {
    Ok(HomSpace::new(x, y)?.basis)
}

pub fn hom_dim<F: Field>(x: &Rep<F>, y: &Rep<F>) -> Result<usize> {
    let delta = coboundary_matrix(x, y)?;
    Ok(delta.cols() - delta.rank())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::Rational;
    use crate::quiver::Quiver;
    use crate::rep::projective;

    fn kr(a: i64, b: i64) -> Rep<Rational> {
        Rep::kronecker(Matrix::from_i64_rows(&[&[a]]), Matrix::from_i64_rows(&[&[b]])).unwrap()
    }

    #[test]
    fn hom_examples() {
        let q = Quiver::kronecker();
        let p0 = projective::<Rational>(&q, 0);
        let p1 = projective::<Rational>(&q, 1);
        assert_eq!(hom_basis(&p1, &p0).unwrap().len(), 2);
        let r0 = kr(1, 0);
        let basis = hom_basis(&r0, &r0).unwrap();
        assert_eq!(basis.len(), 1);
        assert_eq!(basis[0], RepMap::identity(&r0));
        assert!(hom_basis(&r0, &kr(0, 1)).unwrap().is_empty());
    }

    #[test]
    fn coordinates_recover_combination() {
        let q = Quiver::kronecker();
        let p0 = projective::<Rational>(&q, 0);
        let p1 = projective::<Rational>(&q, 1);
        let h = HomSpace::new(&p1, &p0).unwrap();
        let c = vec![Rational::from(3), Rational::new(-1, 2).unwrap()];
        let f = h.combine(&c).unwrap();
        assert_eq!(h.coordinates(&f), c);
    }
}
