use super::{Rep, RepMap};
use crate::exactnum::{Field, Matrix};

/// Vertex-wise dual over the active field: a representation of the
/// opposite quiver with transposed matrices.
pub fn dualize<F: Field>(x: &Rep<F>) -> Rep<F> {
    Rep::new(
        x.quiver().opposite(),
        x.dims().to_vec(),
        x.arrows().iter().map(Matrix::transpose).collect(),
    )
    .expect("transposes have the opposite shapes")
}

/// `D f: DY → DX` for `f: X → Y`.
pub fn dualize_map<F: Field>(f: &RepMap<F>) -> RepMap<F> {
    RepMap::new_unchecked(
        dualize(f.target()),
        dualize(f.source()),
        f.maps().iter().map(Matrix::transpose).collect(),
    )
}

/// The canonical isomorphism `X → DDX`, identity matrices in dual bases.
pub fn double_dual_iso<F: Field>(x: &Rep<F>) -> RepMap<F> {
    let dd = dualize(&dualize(x));
    RepMap::new(
        x.clone(),
        dd,
        x.dims().iter().map(|&d| Matrix::identity(d)).collect(),
    )
    .expect("double dual agrees with the original")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::Rational;
    use crate::quiver::Quiver;
    use crate::rep::{hom_dim, projective};

    #[test]
    fn dual_examples() {
        let q = Quiver::kronecker();
        let s1 = projective::<Rational>(&q, 1);
        let d = dualize(&s1);
        assert_eq!(d.quiver(), &q.opposite());
        assert_eq!(d.dims(), &[0, 1]);
        // at the opposite quiver vertex 1 is the source, so this is the simple injective there
        assert_eq!(d.quiver().injective_dims(1), vec![0, 1]);

        let r = Rep::kronecker(
            Matrix::<Rational>::from_i64_rows(&[&[1]]),
            Matrix::from_i64_rows(&[&[4]]),
        )
        .unwrap();
        assert_eq!(dualize(&r).dims(), &[1, 1]);
        assert!(double_dual_iso(&r).is_iso());
    }

    #[test]
    fn adjunction_dimensions() {
        let q = Quiver::kronecker();
        let x = projective::<Rational>(&q, 0);
        // a representation of the opposite quiver, arrows 1 → 0
        let y = Rep::new(
            q.opposite(),
            vec![1, 2],
            vec![
                Matrix::<Rational>::from_i64_rows(&[&[1, 0]]),
                Matrix::from_i64_rows(&[&[0, 1]]),
            ],
        )
        .unwrap();
        assert_eq!(
            hom_dim(&x, &dualize(&y)).unwrap(),
            hom_dim(&y, &dualize(&x)).unwrap()
        );
    }
}
