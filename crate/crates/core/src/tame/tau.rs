use std::fmt;

use crate::decomp::is_indecomposable;
use crate::error::{Error, Result};
use crate::exactnum::{Field, Matrix, Rational};
use crate::quiver::Quiver;
use crate::rep::{dualize, projective, Rep, RepMap};

/// Generators of the top of `X`: at each vertex, standard vectors spanning a
/// complement of the images of the incoming arrows.
pub fn top_generators<F: Field>(x: &Rep<F>) -> Vec<(usize, Vec<F>)> {
    let q = x.quiver();
    let mut out = Vec::new();
    for v in 0..q.vertex_count() {
        let mut rad: Matrix<F> = Matrix::zeros(x.dim(v), 0);
        for (k, &(_, t)) in q.arrows().iter().enumerate() {
            if t == v {
                rad = rad.hstack(x.arrow(k));
            }
        }
        let comp = rad.complement_columns();
        out.extend((0..comp.cols()).map(|c| (v, comp.column(c))));
    }
    out
}

fn projective_sum<F: Field>(q: &Quiver, tops: &[usize]) -> Result<Rep<F>> {
    let parts: Vec<Rep<F>> = tops.iter().map(|&v| projective(q, v)).collect();
    Ok(Rep::direct_sum(q, &parts)?.sum)
}

/// The map `⊕ P(from_i) → ⊕ P(to_j)` whose `(i, j)` component is given by
/// an element of `P(to_j)` at `from_i`: coefficients over `q.paths(to_j, from_i)`.
/// A path `σ` out of `from_i` is sent to `Σ c_p (p then σ)`.
pub(crate) fn projective_sum_map<F: Field>(
    q: &Quiver,
    from: &[usize],
    to: &[usize],
    coeff: impl Fn(usize, usize) -> Vec<F>,
) -> Result<RepMap<F>> {
    let source = projective_sum::<F>(q, from)?;
    let target = projective_sum::<F>(q, to)?;
    let maps = (0..q.vertex_count())
        .map(|m| {
            let mut mat: Matrix<F> = Matrix::zeros(target.dim(m), source.dim(m));
            let mut col0 = 0;
            for (i, &u) in from.iter().enumerate() {
                let sigmas = q.paths(u, m);
                let mut row0 = 0;
                for (j, &v) in to.iter().enumerate() {
                    let index = q.path_index(v, m);
                    let c = coeff(i, j);
                    for (p, cp) in q.paths(v, u).iter().zip(&c) {
                        if cp.is_zero() {
                            continue;
                        }
                        for (col, sigma) in sigmas.iter().enumerate() {
                            let mut joined = p.clone();
                            joined.extend(sigma);
                            let row = row0 + index[&joined];
                            let cur = mat.get(row, col0 + col).plus(cp);
                            mat.set(row, col0 + col, cur);
                        }
                    }
                    row0 += index.len();
                }
                col0 += sigmas.len();
            }
            mat
        })
        .collect();
    RepMap::new(source, target, maps)
}

/// `⊕ P(v_i) → X` sending the top of the `i`-th summand to `g_i ∈ X_{v_i}`.
pub(crate) fn map_from_projectives<F: Field>(x: &Rep<F>, gens: &[(usize, Vec<F>)]) -> Result<RepMap<F>> {
    let q = x.quiver();
    let tops: Vec<usize> = gens.iter().map(|(v, _)| *v).collect();
    let source = projective_sum::<F>(q, &tops)?;
    let maps = (0..q.vertex_count())
        .map(|w| {
            let cols: Vec<Vec<F>> = gens
                .iter()
                .flat_map(|(v, g)| {
                    q.paths(*v, w)
                        .into_iter()
                        .map(move |p| x.path_matrix(*v, &p).mul_vec(g))
                })
                .collect();
            Matrix::from_columns(&cols, x.dim(w))
        })
        .collect();
    RepMap::new(source, x.clone(), maps)
}

/// Top vertices of the (projective) kernel of a map out of a sum of
/// projectives, with each top generator as an element of the source.
pub(crate) fn kernel_tops<F: Field>(f: &RepMap<F>) -> (Vec<usize>, Vec<Vec<F>>) {
    let (k, incl) = f.kernel();
    let kgens = top_generators(&k);
    let tops = kgens.iter().map(|(u, _)| *u).collect();
    let elements = kgens.iter().map(|(u, g)| incl.at(*u).mul_vec(g)).collect();
    (tops, elements)
}

/// Slice of an element of `⊕_j P(tops[j])` at vertex `u` belonging to summand `j`:
/// coefficients over `q.paths(tops[j], u)`.
pub(crate) fn summand_coefficients<F: Field>(q: &Quiver, tops: &[usize], u: usize, element: &[F], j: usize) -> Vec<F> {
    let offset: usize = tops[..j].iter().map(|&v| q.paths(v, u).len()).sum();
    let len = q.paths(tops[j], u).len();
    element[offset..offset + len].to_vec()
}

/// Rewrites coefficients over `q.paths(v, u)` as coefficients over
/// `q.opposite().paths(u, v)`.
pub(crate) fn reverse_coefficients<F: Field>(q: &Quiver, v: usize, u: usize, coeffs: &[F]) -> Vec<F> {
    let index = q.path_index(v, u);
    q.opposite()
        .paths(u, v)
        .iter()
        .map(|rho| {
            let rev: Vec<usize> = rho.iter().rev().copied().collect();
            coeffs[index[&rev]].clone()
        })
        .collect()
}

/// A minimal projective presentation `0 → P₁ → P₀ → X → 0`.
#[derive(Clone, Debug)]
pub struct Presentation<F: Field> {
    /// Top vertex of each summand of `P₁`.
    pub p1_tops: Vec<usize>,
    /// Top vertex of each summand of `P₀`.
    pub p0_tops: Vec<usize>,
    pub relations: RepMap<F>,
    pub cover: RepMap<F>,
    /// Image of the top of each summand of `P₁`, as a vector of `P₀` at that top.
    pub relation_tops: Vec<Vec<F>>,
}

impl<F: Field> Presentation<F> {
    /// Coefficients over `q.paths(p0_tops[j], p1_tops[i])` of the component
    /// `P(p1_tops[i]) → P(p0_tops[j])`.
    fn component(&self, q: &Quiver, i: usize, j: usize) -> Vec<F> {
        summand_coefficients(q, &self.p0_tops, self.p1_tops[i], &self.relation_tops[i], j)
    }
}

pub fn projective_presentation<F: Field>(x: &Rep<F>) -> Result<Presentation<F>> {
    let q = x.quiver();
    let gens = top_generators(x);
    let p0_tops: Vec<usize> = gens.iter().map(|(v, _)| *v).collect();
    let cover = map_from_projectives(x, &gens)?;
    let (p1_tops, elements) = kernel_tops(&cover);
    let mut pres = Presentation {
        relations: RepMap::zero(&projective_sum(q, &p1_tops)?, cover.source()),
        p1_tops,
        p0_tops,
        cover,
        relation_tops: elements,
    };
    pres.relations = projective_sum_map(q, &pres.p1_tops, &pres.p0_tops, |i, j| pres.component(q, i, j))?;
    Ok(pres)
}

/// Auslander–Reiten translate `τX = D Tr X`.
///
/// `Tr X` is the cokernel of `Hom(g, Λ)` for the minimal presentation `g`,
/// realized over the opposite quiver on its projectives.
pub fn transpose_dual_tau<F: Field>(x: &Rep<F>) -> Result<Rep<F>> {
    let q = x.quiver();
    let op = q.opposite();
    let pres = projective_presentation(x)?;
    let transposed = projective_sum_map(&op, &pres.p0_tops, &pres.p1_tops, |j, i| {
        reverse_coefficients(q, pres.p0_tops[j], pres.p1_tops[i], &pres.component(q, i, j))
    })?;
    let (tr, _) = transposed.cokernel();
    Ok(dualize(&tr))
}

/// `τ⁻X = D τ_{op}(DX)`.
pub fn tau_minus<F: Field>(x: &Rep<F>) -> Result<Rep<F>> {
    Ok(dualize(&transpose_dual_tau(&dualize(x))?))
}

/// Smallest `n ≤ bound` with `τⁿX = 0`.
pub fn tau_nilpotence<F: Field>(x: &Rep<F>, bound: usize) -> Result<Option<usize>> {
    iterate_to_zero(x, bound, transpose_dual_tau)
}

/// Smallest `n ≤ bound` with `τ⁻ⁿX = 0`.
pub fn tau_minus_nilpotence<F: Field>(x: &Rep<F>, bound: usize) -> Result<Option<usize>> {
    iterate_to_zero(x, bound, tau_minus)
}

fn iterate_to_zero<F: Field>(
    x: &Rep<F>,
    bound: usize,
    step: fn(&Rep<F>) -> Result<Rep<F>>,
) -> Result<Option<usize>> {
    let mut cur = x.clone();
    for n in 0..=bound {
        if cur.is_zero() {
            return Ok(Some(n));
        }
        cur = step(&cur)?;
    }
    Ok(None)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Class {
    Preprojective,
    Regular,
    Preinjective,
}

impl fmt::Display for Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Class::Preprojective => "preprojective",
            Class::Regular => "regular",
            Class::Preinjective => "preinjective",
        })
    }
}

pub fn class_of_defect(d: i64) -> Class {
    match d.signum() {
        -1 => Class::Preprojective,
        0 => Class::Regular,
        _ => Class::Preinjective,
    }
}

/// Class of an indecomposable by the sign of its defect.
pub fn classify(x: &Rep<Rational>) -> Result<Class> {
    if !is_indecomposable(x)? {
        return Err(Error::Precondition("classify needs an indecomposable module".into()));
    }
    let d = x.quiver().defect(&x.dim_vector())?;
    Ok(class_of_defect(d))
}

/// Class read off from τ- and τ⁻-nilpotence within `bound` steps; regular if neither.
pub fn classify_by_tau<F: Field>(x: &Rep<F>, bound: usize) -> Result<Class> {
    if tau_nilpotence(x, bound)?.is_some() {
        Ok(Class::Preprojective)
    } else if tau_minus_nilpotence(x, bound)?.is_some() {
        Ok(Class::Preinjective)
    } else {
        Ok(Class::Regular)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomp::iso_test;
    use crate::tame::catalog::{kron_preinjective, kron_preprojective, kron_regular, TubePoint};

    #[test]
    fn presentation_is_exact() {
        let x = kron_preinjective(2);
        let pres = projective_presentation(&x).unwrap();
        assert!(pres.relations.is_mono());
        assert!(pres.cover.is_epi());
        assert!(pres.cover.compose(&pres.relations).unwrap().is_zero());
        let total: usize = pres.cover.source().total_dim();
        assert_eq!(total, pres.relations.source().total_dim() + x.total_dim());
    }

    #[test]
    fn projectives_die() {
        assert!(transpose_dual_tau(&kron_preprojective(0)).unwrap().is_zero());
        assert!(transpose_dual_tau(&kron_preprojective(1)).unwrap().is_zero());
        assert!(tau_minus(&kron_preinjective(0)).unwrap().is_zero());
    }

    #[test]
    fn tau_matches_coxeter_on_preinjectives() {
        let q = Quiver::kronecker();
        for n in 0..5 {
            let x = kron_preinjective(n);
            let t = transpose_dual_tau(&x).unwrap();
            assert_eq!(t.dim_vector(), q.coxeter_transform(&x.dim_vector()).unwrap());
            assert!(iso_test(&t, &kron_preinjective(n + 2)).unwrap().is_some());
        }
        let simple = kron_preinjective(0);
        assert_eq!(transpose_dual_tau(&simple).unwrap().dims(), &[3, 2]);
    }

    #[test]
    fn tau_minus_inverts_tau() {
        for n in 2..6 {
            let x = kron_preprojective(n);
            let t = transpose_dual_tau(&x).unwrap();
            assert!(iso_test(&t, &kron_preprojective(n - 2)).unwrap().is_some());
            let back = tau_minus(&t).unwrap();
            assert!(iso_test(&back, &x).unwrap().is_some());
        }
    }

    #[test]
    fn regulars_are_fixed() {
        for p in [TubePoint::linear(0), TubePoint::Infinity, "x^2+1".parse().unwrap()] {
            for r in 1..3 {
                let x = kron_regular(&p, r).unwrap();
                let t = transpose_dual_tau(&x).unwrap();
                assert!(iso_test(&t, &x).unwrap().is_some(), "{p} {r}");
            }
        }
    }

    #[test]
    fn nilpotence_counts() {
        assert_eq!(tau_minus_nilpotence(&kron_preinjective(0), 10).unwrap(), Some(1));
        assert_eq!(tau_minus_nilpotence(&kron_preinjective(3), 10).unwrap(), Some(2));
        assert_eq!(tau_nilpotence(&kron_preprojective(4), 10).unwrap(), Some(3));
        let r = kron_regular(&TubePoint::linear(1), 1).unwrap();
        assert_eq!(tau_nilpotence(&r, 4).unwrap(), None);
    }

    #[test]
    fn classification_examples() {
        assert_eq!(classify(&kron_preprojective(2)).unwrap(), Class::Preprojective);
        assert_eq!(
            classify(&kron_regular(&TubePoint::linear(5), 3).unwrap()).unwrap(),
            Class::Regular
        );
        assert_eq!(classify(&kron_preinjective(0)).unwrap(), Class::Preinjective);
        let sum = Rep::direct_sum(
            &Quiver::kronecker(),
            &[kron_preinjective(0), kron_preprojective(0)],
        )
        .unwrap()
        .sum;
        assert!(classify(&sum).is_err());
    }
}
