use super::{dualize, Rep};
use crate::exactnum::{Field, Matrix};
use crate::quiver::Quiver;

/// The indecomposable projective at `v`: at `w` the span of paths `v → w`,
/// arrows acting by extending paths.
pub fn projective<F: Field>(q: &Quiver, v: usize) -> Rep<F> {
    let paths: Vec<Vec<Vec<usize>>> = (0..q.vertex_count()).map(|w| q.paths(v, w)).collect();
    let index: Vec<_> = (0..q.vertex_count()).map(|w| q.path_index(v, w)).collect();
    let arrows = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(k, &(s, t))| {
            let mut m = Matrix::zeros(paths[t].len(), paths[s].len());
            for (j, p) in paths[s].iter().enumerate() {
                let mut ext = p.clone();
                ext.push(k);
                m.set(index[t][&ext], j, F::one());
            }
            m
        })
        .collect();
    Rep::new(q.clone(), paths.iter().map(Vec::len).collect(), arrows).expect("consistent shapes")
}

/// The indecomposable injective at `v`, as the dual of a projective over the opposite quiver.
pub fn injective<F: Field>(q: &Quiver, v: usize) -> Rep<F> {
    dualize(&projective::<F>(&q.opposite(), v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::Rational;

    #[test]
    fn kronecker_projectives_and_injectives() {
        let q = Quiver::kronecker();
        let p0 = projective::<Rational>(&q, 0);
        assert_eq!(p0.dims(), &[1, 2]);
        assert_eq!(p0.arrow(0), &Matrix::from_i64_rows(&[&[1], &[0]]));
        assert_eq!(p0.arrow(1), &Matrix::from_i64_rows(&[&[0], &[1]]));
        assert_eq!(projective::<Rational>(&q, 1).dims(), &[0, 1]);
        let i1 = injective::<Rational>(&q, 1);
        assert_eq!(i1.dims(), &[2, 1]);
        assert_eq!(i1.quiver(), &q);
        assert_eq!(injective::<Rational>(&q, 0).dims(), &[1, 0]);
    }
}
