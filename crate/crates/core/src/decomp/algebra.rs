use crate::error::Result;
use crate::exactnum::{Field, Matrix, Polynomial, Rational};
use crate::rep::{HomSpace, Rep, RepMap};

/// `End(X)` with its basis from the Hom solver and structure constants.
///
/// Elements are handled as coordinate vectors in the basis; `structure[i][j]`
/// holds the coordinates of `b_i ∘ b_j`.
#[derive(Clone, Debug)]
pub struct EndAlgebra<F: Field> {
    pub space: HomSpace<F>,
    pub structure: Vec<Vec<Vec<F>>>,
    identity: Vec<F>,
}

impl<F: Field> EndAlgebra<F> {
    pub fn new(x: &Rep<F>) -> Result<Self> {
        let space = HomSpace::new(x, x)?;
        let structure = space
            .basis
            .iter()
            .map(|bi| {
                space
                    .basis
                    .iter()
                    .map(|bj| Ok(space.coordinates(&bi.compose(bj)?)))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let identity = space.coordinates(&RepMap::identity(x));
        Ok(EndAlgebra {
            space,
            structure,
            identity,
        })
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn basis(&self) -> &[RepMap<F>] {
        &self.space.basis
    }

    pub fn identity(&self) -> &[F] {
        &self.identity
    }

    pub fn zero(&self) -> Vec<F> {
        vec![F::zero(); self.dim()]
    }

    pub fn add(&self, a: &[F], b: &[F]) -> Vec<F> {
        a.iter().zip(b).map(|(x, y)| x.plus(y)).collect()
    }

    pub fn scale(&self, c: &F, a: &[F]) -> Vec<F> {
        a.iter().map(|x| x.times(c)).collect()
    }

    pub fn mul(&self, a: &[F], b: &[F]) -> Vec<F> {
        let mut out = self.zero();
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                let c = ai.times(bj);
                for (k, s) in self.structure[i][j].iter().enumerate() {
                    if !s.is_zero() {
                        out[k] = out[k].plus(&c.times(s));
                    }
                }
            }
        }
        out
    }

    /// Matrix of `y ↦ a·y` on coordinates.
    pub fn left_mult(&self, a: &[F]) -> Matrix<F> {
        let n = self.dim();
        let cols: Vec<Vec<F>> = (0..n)
            .map(|j| {
                let mut e = self.zero();
                e[j] = F::one();
                self.mul(a, &e)
            })
            .collect();
        Matrix::from_columns(&cols, n)
    }

    pub fn element(&self, coords: &[F]) -> Result<RepMap<F>> {
        self.space.combine(coords)
    }

    /// Jacobson radical as the kernel of the trace form `(a, b) ↦ Tr(L_{ab})`.
    pub fn radical(&self) -> Vec<Vec<F>> {
        let n = self.dim();
        let traces: Vec<F> = (0..n)
            .map(|k| (0..n).fold(F::zero(), |acc, j| acc.plus(&self.structure[k][j][j])))
            .collect();
        let gram = Matrix::from_fn(n, n, |i, j| {
            self.structure[i][j]
                .iter()
                .zip(&traces)
                .fold(F::zero(), |acc, (c, t)| acc.plus(&c.times(t)))
        });
        gram.kernel_basis()
    }

    pub fn radical_basis(&self) -> Result<Vec<RepMap<F>>> {
        self.radical().iter().map(|c| self.element(c)).collect()
    }

    /// Dimension of `E / rad E`.
    pub fn semisimple_dim(&self) -> usize {
        self.dim() - self.radical().len()
    }
}

impl EndAlgebra<Rational> {
    pub fn eval_poly(&self, p: &Polynomial, a: &[Rational]) -> Vec<Rational> {
        p.coeffs().iter().rev().fold(self.zero(), |acc, c| {
            self.add(&self.mul(&acc, a), &self.scale(c, &self.identity))
        })
    }

    pub fn minimal_polynomial(&self, a: &[Rational]) -> Polynomial {
        self.left_mult(a).minimal_polynomial()
    }

    /// Iterates `e ← 3e² − 2e³` until `e` is idempotent.
    pub fn lift_idempotent(&self, e: &[Rational]) -> Vec<Rational> {
        let three = Rational::from(3);
        let minus_two = Rational::from(-2);
        let mut e = e.to_vec();
        loop {
            let e2 = self.mul(&e, &e);
            if e2 == e {
                return e;
            }
            let e3 = self.mul(&e2, &e);
            e = self.add(&self.scale(&three, &e2), &self.scale(&minus_two, &e3));
        }
    }
}
