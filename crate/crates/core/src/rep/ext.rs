use super::{coboundary_matrix, hom_dim, Rep, RepMap, ShortExact};
use crate::error::{Error, Result};
use crate::exactnum::{Field, Matrix};

/// Representative of a class in `Ext¹(X, Y)`: one matrix `Z_a` of shape
/// `dim Y_{t(a)} × dim X_{s(a)}` per arrow.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtCocycle<F: Field> {
    pub mats: Vec<Matrix<F>>,
}

impl<F: Field> ExtCocycle<F> {
    pub fn zero(x: &Rep<F>, y: &Rep<F>) -> Self {
        ExtCocycle {
            mats: x
                .quiver()
                .arrows()
                .iter()
                .map(|&(s, t)| Matrix::zeros(y.dim(t), x.dim(s)))
                .collect(),
        }
    }

    pub fn to_vector(&self) -> Vec<F> {
        self.mats.iter().flat_map(|m| m.entries().iter().cloned()).collect()
    }

    pub fn from_vector(x: &Rep<F>, y: &Rep<F>, v: &[F]) -> Result<Self> {
        let mut mats = Vec::new();
        let mut pos = 0;
        for &(s, t) in x.quiver().arrows() {
            let (r, c) = (y.dim(t), x.dim(s));
            if pos + r * c > v.len() {
                return Err(Error::DimensionMismatch("cocycle vector too short".into()));
            }
            mats.push(Matrix::from_vec(r, c, v[pos..pos + r * c].to_vec())?);
            pos += r * c;
        }
        Ok(ExtCocycle { mats })
    }

    pub fn is_zero(&self) -> bool {
        self.mats.iter().all(Matrix::is_zero)
    }

    /// Pullback along `h: X' → X`.
    pub fn pullback(&self, h: &RepMap<F>) -> Self {
        ExtCocycle {
            mats: h
                .source()
                .quiver()
                .arrows()
                .iter()
                .zip(&self.mats)
                .map(|(&(s, _), z)| z.mul(h.at(s)))
                .collect(),
        }
    }

    /// Pushout along `g: Y → Y'`.
    pub fn pushforward(&self, g: &RepMap<F>) -> Self {
        ExtCocycle {
            mats: g
                .source()
                .quiver()
                .arrows()
                .iter()
                .zip(&self.mats)
                .map(|(&(_, t), z)| g.at(t).mul(z))
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        ExtCocycle {
            mats: self.mats.iter().zip(&other.mats).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        ExtCocycle {
            mats: self.mats.iter().map(|m| m.scale(c)).collect(),
        }
    }
}

/// `Ext¹(X, Y)` as the cokernel of the coboundary map, with a complement of
/// the coboundaries spanned by standard cocycles.
#[derive(Clone, Debug)]
pub struct ExtSpace<F: Field> {
    x: Rep<F>,
    y: Rep<F>,
    delta: Matrix<F>,
    complement: Vec<usize>,
}

impl<F: Field> ExtSpace<F> {
    pub fn new(x: &Rep<F>, y: &Rep<F>) -> Result<Self> {
        let delta = coboundary_matrix(x, y)?;
        let ech = delta.transpose().row_reduce();
        let mut is_pivot = vec![false; delta.rows()];
        for &p in &ech.pivots {
            is_pivot[p] = true;
        }
        let complement = (0..delta.rows()).filter(|&i| !is_pivot[i]).collect();
        Ok(ExtSpace {
            x: x.clone(),
            y: y.clone(),
            delta,
            complement,
        })
    }

    pub fn dim(&self) -> usize {
        self.complement.len()
    }

    pub fn basis(&self) -> Vec<ExtCocycle<F>> {
        self.complement
            .iter()
            .map(|&i| {
                let mut v = vec![F::zero(); self.delta.rows()];
                v[i] = F::one();
                ExtCocycle::from_vector(&self.x, &self.y, &v).expect("sizes agree")
            })
            .collect()
    }

    /// Coordinates of the class of `z` in the basis.
    pub fn class_coordinates(&self, z: &ExtCocycle<F>) -> Result<Vec<F>> {
        let n = self.delta.rows();
        let units = Matrix::from_fn(n, self.complement.len(), |r, c| {
            if r == self.complement[c] {
                F::one()
            } else {
                F::zero()
            }
        });
        let sys = self.delta.hstack(&units);
        let sol = sys
            .solve(&z.to_vector())?
            .expect("coboundaries and the complement span all cocycles");
        Ok(sol[self.delta.cols()..].to_vec())
    }

    pub fn is_coboundary(&self, z: &ExtCocycle<F>) -> Result<bool> {
        Ok(self.delta.solve(&z.to_vector())?.is_some())
    }
}

/// Dimension of `Ext¹(X, Y)` as `dim Hom(X, Y) − ⟨dim X, dim Y⟩`.
pub fn ext_dim<F: Field>(x: &Rep<F>, y: &Rep<F>) -> Result<usize> {
    let euler = x.quiver().euler_form(&x.dim_vector(), &y.dim_vector())?;
    let h = hom_dim(x, y)? as i64;
    Ok(usize::try_from(h - euler).expect("Ext dimension is non-negative"))
}

/// Dimension of `Ext¹(X, Y)` as cocycles modulo coboundaries.
pub fn ext_dim_cocycle<F: Field>(x: &Rep<F>, y: &Rep<F>) -> Result<usize> {
    let delta = coboundary_matrix(x, y)?;
    Ok(delta.rows() - delta.rank())
}

pub fn ext_cocycle_basis<F: Field>(x: &Rep<F>, y: &Rep<F>) -> Result<Vec<ExtCocycle<F>>> {
    Ok(ExtSpace::new(x, y)?.basis())
}

/// The extension `0 → Y → E → X → 0` with `E_a = [[Y_a, Z_a], [0, X_a]]`.
pub fn extension_middle_term<F: Field>(
    x: &Rep<F>,
    y: &Rep<F>,
    z: &ExtCocycle<F>,
) -> Result<ShortExact<F>> {
    x.check_same_quiver(y)?;
    let q = x.quiver();
    if z.mats.len() != q.arrow_count() {
        return Err(Error::DimensionMismatch("cocycle arrow count".into()));
    }
    let mut arrows = Vec::with_capacity(q.arrow_count());
    for (k, &(s, t)) in q.arrows().iter().enumerate() {
        if z.mats[k].shape() != (y.dim(t), x.dim(s)) {
            return Err(Error::DimensionMismatch(format!("cocycle at arrow {k}")));
        }
        let top = y.arrow(k).hstack(&z.mats[k]);
        let bottom = Matrix::zeros(x.dim(t), y.dim(s)).hstack(x.arrow(k));
        arrows.push(top.vstack(&bottom));
    }
    let dims: Vec<usize> = (0..q.vertex_count()).map(|v| y.dim(v) + x.dim(v)).collect();
    let e = Rep::new(q.clone(), dims, arrows)?;
    let incl = (0..q.vertex_count())
        .map(|v| Matrix::identity(y.dim(v)).vstack(&Matrix::zeros(x.dim(v), y.dim(v))))
        .collect();
    let proj = (0..q.vertex_count())
        .map(|v| Matrix::zeros(x.dim(v), y.dim(v)).hstack(&Matrix::identity(x.dim(v))))
        .collect();
    let f = RepMap::new(y.clone(), e.clone(), incl)?;
    let g = RepMap::new(e, x.clone(), proj)?;
    let seq = ShortExact { f, g };
    debug_assert!(seq.is_exact());
    Ok(seq)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::Rational;
    use crate::quiver::Quiver;
    use crate::rep::{hom_basis, projective};

    type Q = Rational;

    fn kr(a: &[&[i64]], b: &[&[i64]]) -> Rep<Q> {
        Rep::kronecker(Matrix::from_i64_rows(a), Matrix::from_i64_rows(b)).unwrap()
    }

    fn simple_injective() -> Rep<Q> {
        Rep::kronecker(Matrix::zeros(0, 1), Matrix::zeros(0, 1)).unwrap()
    }

    #[test]
    fn ext_examples() {
        let q = Quiver::kronecker();
        let s1 = projective::<Q>(&q, 1);
        let s0 = simple_injective();
        assert_eq!(ext_dim(&s0, &s1).unwrap(), 2);
        assert_eq!(ext_dim_cocycle(&s0, &s1).unwrap(), 2);
        let basis = ext_cocycle_basis(&s0, &s1).unwrap();
        assert_eq!(basis.len(), 2);

        let r = kr(&[&[1]], &[&[3]]);
        assert_eq!(ext_dim(&r, &s1).unwrap(), 1);
        let p0 = projective::<Q>(&q, 0);
        assert_eq!(ext_dim(&p0, &r).unwrap(), 0);
        assert!(ext_cocycle_basis(&p0, &r).unwrap().is_empty());

        let r0 = kr(&[&[1]], &[&[0]]);
        assert_eq!(ext_cocycle_basis(&r0, &r0).unwrap().len(), 1);
    }

    #[test]
    fn middle_terms() {
        let q = Quiver::kronecker();
        let r0 = kr(&[&[1]], &[&[0]]);
        let s1 = projective::<Q>(&q, 1);

        let split = extension_middle_term(&r0, &s1, &ExtCocycle::zero(&r0, &s1)).unwrap();
        assert!(split.is_exact());
        assert_eq!(split.middle().dims(), &[1, 2]);

        let z = &ext_cocycle_basis(&r0, &s1).unwrap()[0];
        let seq = extension_middle_term(&r0, &s1, z).unwrap();
        assert!(seq.is_exact());
        assert_eq!(seq.middle().dims(), &[1, 2]);
        // non-split: no section of the projection
        assert!(hom_basis(&r0, seq.middle())
            .unwrap()
            .iter()
            .all(|s| seq.g.compose(s).unwrap().is_zero()));
    }

    #[test]
    fn coboundary_classes() {
        let r0 = kr(&[&[1]], &[&[0]]);
        let space = ExtSpace::new(&r0, &r0).unwrap();
        let b = &space.basis()[0];
        assert!(!space.is_coboundary(b).unwrap());
        assert_eq!(space.class_coordinates(b).unwrap(), vec![Q::one()]);
        let zero = ExtCocycle::zero(&r0, &r0);
        assert!(space.is_coboundary(&zero).unwrap());
    }
}
