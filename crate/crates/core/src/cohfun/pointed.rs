use crate::error::{Error, Result};
use crate::exactnum::{Field, Matrix};
use crate::rep::{hom_basis, tensor_relations, Rep, RepMap};
use crate::tame::tau::{kernel_tops, map_from_projectives, projective_sum_map, reverse_coefficients, summand_coefficients, top_generators};

use super::subspace::Subspace;

/// A module with a tuple of vertex-homogeneous elements `(v_i, e_i)`.
///
/// On a module `X` it defines the subgroup `{(f(e_i))_i : f ∈ Hom(C, X)}` of
/// `⊕_i X_{v_i}`; elementary duality exchanges it with the annihilator
/// `{ȳ : Σ y_i ⊗ e_i = 0 in Y ⊗ C}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pointed<F: Field> {
    pub module: Rep<F>,
    pub elements: Vec<(usize, Vec<F>)>,
}

fn split_total<F: Field>(x: &Rep<F>, total: &[F]) -> Result<Vec<(usize, Vec<F>)>> {
    if total.len() != x.total_dim() {
        return Err(Error::DimensionMismatch(format!(
            "element of length {} in a module of total dimension {}",
            total.len(),
            x.total_dim()
        )));
    }
    let offsets = x.offsets();
    Ok((0..x.quiver().vertex_count())
        .map(|v| (v, total[offsets[v]..offsets[v] + x.dim(v)].to_vec()))
        .collect())
}

fn ambient_dim<F: Field>(x: &Rep<F>, pattern: &[usize]) -> usize {
    pattern.iter().map(|&v| x.dim(v)).sum()
}

impl<F: Field> Pointed<F> {
    pub fn new(module: Rep<F>, elements: Vec<(usize, Vec<F>)>) -> Result<Self> {
        for (v, e) in &elements {
            if *v >= module.quiver().vertex_count() || e.len() != module.dim(*v) {
                return Err(Error::DimensionMismatch(format!("element at vertex {v}")));
            }
        }
        Ok(Pointed { module, elements })
    }

    /// One element `c` of the total space, read as its vertex components.
    pub fn from_total(module: Rep<F>, c: &[F]) -> Result<Self> {
        let elements = split_total(&module, c)?;
        Ok(Pointed { module, elements })
    }

    pub fn pattern(&self) -> Vec<usize> {
        self.elements.iter().map(|(v, _)| *v).collect()
    }

    fn image_of(&self, f: &RepMap<F>) -> Vec<F> {
        self.elements.iter().flat_map(|(v, e)| f.at(*v).mul_vec(e)).collect()
    }

    /// The subgroup of `⊕_i X_{v_i}` defined on `x`.
    pub fn realize(&self, x: &Rep<F>) -> Result<Subspace<F>> {
        let n = ambient_dim(x, &self.pattern());
        let images: Vec<Vec<F>> = hom_basis(&self.module, x)?.iter().map(|f| self.image_of(f)).collect();
        Ok(Subspace::span(n, &images))
    }

    /// `{ȳ ∈ ⊕_i Y_{v_i} : Σ y_i ⊗ e_i = 0 in Y ⊗ C}` for `y` over the opposite quiver.
    pub fn annihilator_in(&self, y: &Rep<F>) -> Result<Subspace<F>> {
        let rel = tensor_relations(y, &self.module)?;
        let c = &self.module;
        let mut offset = Vec::new();
        let mut total = 0;
        for v in 0..c.quiver().vertex_count() {
            offset.push(total);
            total += y.dim(v) * c.dim(v);
        }
        let mut cols: Vec<Vec<F>> = Vec::new();
        for (v, e) in &self.elements {
            for r in 0..y.dim(*v) {
                let mut col = vec![F::zero(); total];
                for (k, ek) in e.iter().enumerate() {
                    col[offset[*v] + r * c.dim(*v) + k] = ek.clone();
                }
                cols.push(col);
            }
        }
        let n = cols.len();
        let m = Matrix::from_columns(&cols, total).hstack(&rel);
        let kernel: Vec<Vec<F>> = m.kernel_basis().into_iter().map(|k| k[..n].to_vec()).collect();
        Ok(Subspace::span(n, &kernel))
    }

    /// The dual pointed module over the opposite quiver.
    ///
    /// With `g: ⊕P(v_i) ⊕ P₀ → C` sending the tops to the `e_i` and to top
    /// generators of `C`, and `K = ker g` projective, the dual module is the
    /// cokernel of the transpose `P₀* → K*`, pointed by the images of the `P(v_i)*`.
    pub fn dual(&self) -> Result<Pointed<F>> {
        let c = &self.module;
        let q = c.quiver();
        let op = q.opposite();
        let n = self.elements.len();
        let mut gens = self.elements.clone();
        gens.extend(top_generators(c));
        let tops: Vec<usize> = gens.iter().map(|(v, _)| *v).collect();
        let g = map_from_projectives(c, &gens)?;
        let (ktops, kelems) = kernel_tops(&g);
        let coeff = |j: usize, k: usize| {
            let orig = summand_coefficients(q, &tops, ktops[j], &kelems[j], k);
            reverse_coefficients(q, tops[k], ktops[j], &orig)
        };
        let relations = projective_sum_map(&op, &tops[n..], &ktops, |kk, j| coeff(j, n + kk))?;
        let (module, proj) = relations.cokernel();
        let elements = (0..n)
            .map(|i| {
                let v = tops[i];
                let lifted: Vec<F> = (0..ktops.len()).flat_map(|j| coeff(j, i)).collect();
                (v, proj.at(v).mul_vec(&lifted))
            })
            .collect();
        Ok(Pointed { module, elements })
    }

    fn check_pattern(&self, other: &Pointed<F>) -> Result<()> {
        self.module.check_same_quiver(&other.module)?;
        if self.pattern() != other.pattern() {
            return Err(Error::DimensionMismatch("pointed modules with different vertex patterns".into()));
        }
        Ok(())
    }

    /// Defines the sum of the two subgroups.
    pub fn join(&self, other: &Pointed<F>) -> Result<Pointed<F>> {
        self.check_pattern(other)?;
        let s = Rep::direct_sum(self.module.quiver(), &[self.module.clone(), other.module.clone()])?;
        let elements = self
            .elements
            .iter()
            .zip(&other.elements)
            .map(|((v, a), (_, b))| {
                let x = s.injections[0].at(*v).mul_vec(a);
                let y = s.injections[1].at(*v).mul_vec(b);
                (*v, x.iter().zip(&y).map(|(p, q)| p.plus(q)).collect())
            })
            .collect();
        Ok(Pointed { module: s.sum, elements })
    }

    /// Defines the intersection: the pushout identifying the two tuples.
    pub fn meet(&self, other: &Pointed<F>) -> Result<Pointed<F>> {
        self.check_pattern(other)?;
        let s = Rep::direct_sum(self.module.quiver(), &[self.module.clone(), other.module.clone()])?;
        let glue: Vec<(usize, Vec<F>)> = self
            .elements
            .iter()
            .zip(&other.elements)
            .map(|((v, a), (_, b))| {
                let x = s.injections[0].at(*v).mul_vec(a);
                let y = s.injections[1].at(*v).mul_vec(b);
                (*v, x.iter().zip(&y).map(|(p, q)| p.minus(q)).collect())
            })
            .collect();
        let (module, proj) = map_from_projectives(&s.sum, &glue)?.cokernel();
        let into = proj.compose(&s.injections[0])?;
        let elements = self.elements.iter().map(|(v, a)| (*v, into.at(*v).mul_vec(a))).collect();
        Ok(Pointed { module, elements })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::Rational;
    use crate::quiver::Quiver;
    use crate::rep::{dualize, injective, projective};
    use crate::tame::{kron_preinjective, kron_preprojective, kron_regular, TubePoint};

    fn q(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| Rational::from(x)).collect()
    }

    fn samples() -> Vec<Pointed<Rational>> {
        vec![
            Pointed::from_total(kron_preprojective(1), &q(&[1, 0, 1])).unwrap(),
            Pointed::from_total(kron_regular(&TubePoint::linear(0), 2).unwrap(), &q(&[0, 1, 1, 0])).unwrap(),
            Pointed::from_total(kron_preinjective(1), &q(&[1, 1, 2])).unwrap(),
            Pointed::from_total(kron_regular(&"x^2+1".parse().unwrap(), 1).unwrap(), &q(&[1, 0, 0, 0])).unwrap(),
            Pointed::from_total(projective::<Rational>(&Quiver::kronecker(), 1), &q(&[1])).unwrap(),
            Pointed::from_total(kron_preprojective(0), &q(&[0])).unwrap(),
        ]
    }

    fn targets() -> Vec<Rep<Rational>> {
        vec![
            kron_preprojective(2),
            kron_preinjective(0),
            kron_preinjective(2),
            kron_regular(&TubePoint::linear(0), 1).unwrap(),
            kron_regular(&TubePoint::Infinity, 2).unwrap(),
            kron_regular(&"x^2+1".parse().unwrap(), 1).unwrap(),
        ]
    }

    #[test]
    fn dual_pair_defines_the_annihilator() {
        for p in samples() {
            let d = p.dual().unwrap();
            assert_eq!(d.pattern(), p.pattern());
            for x in targets() {
                let y = dualize(&x);
                assert_eq!(d.realize(&y).unwrap(), p.annihilator_in(&y).unwrap(), "{:?}", x.dims());
                // and the annihilator is the orthogonal of the subgroup on X
                assert_eq!(d.realize(&y).unwrap(), p.realize(&x).unwrap().annihilator());
            }
        }
    }

    #[test]
    fn double_dual_defines_the_same_subgroup() {
        for p in samples() {
            let dd = p.dual().unwrap().dual().unwrap();
            for x in targets() {
                assert_eq!(dd.realize(&x).unwrap(), p.realize(&x).unwrap());
            }
        }
    }

    #[test]
    fn join_and_meet() {
        let s = samples();
        let x = kron_preinjective(2);
        for a in &s {
            for b in &s {
                let (ua, ub) = (a.realize(&x).unwrap(), b.realize(&x).unwrap());
                assert_eq!(a.join(b).unwrap().realize(&x).unwrap(), ua.sum(&ub));
                assert_eq!(a.meet(b).unwrap().realize(&x).unwrap(), ua.intersect(&ub));
            }
        }
    }

    #[test]
    fn free_module_defines_everything() {
        let kq = Quiver::kronecker();
        let lam = Rep::direct_sum(&kq, &[projective::<Rational>(&kq, 0), projective(&kq, 1)]).unwrap().sum;
        let top = q(&[1, 0, 0, 1]);
        let p = Pointed::from_total(lam, &top).unwrap();
        let x = injective::<Rational>(&kq, 0);
        assert_eq!(p.realize(&x).unwrap().dim(), x.total_dim());
        assert!(Pointed::from_total(kron_preprojective(0), &q(&[1, 0])).is_err());
    }
}
