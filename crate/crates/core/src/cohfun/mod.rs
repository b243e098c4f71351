//! Coherent functors on finite-dimensional modules, elementary duality, and
//! lattices of pp-definable subgroups.

mod pointed;
mod pp;
mod simple;
mod subspace;

pub use pointed::Pointed;
pub use pp::{lattice_anti_iso_check, pp_lattice, pp_subgroup, AntiIsoReport, PPLattice, PPSubgroup, LATTICE_CAP};
pub use simple::simple_functor_probe;
pub use subspace::Subspace;

use crate::error::{Error, Result};
use crate::exactnum::{Field, Matrix, Rational, RationalFunction};
use crate::rep::{hom_basis, tensor_dim, tensor_map_rank, Rep, RepMap};
use crate::tame::tau::{map_from_projectives, top_generators};

/// `F = Coker(Hom(C₁, −) → Hom(C₀, −))` for a map `φ: C₀ → C₁`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoherentFunctor<F: Field> {
    pub phi: RepMap<F>,
}

/// Value of a coherent functor: its dimension and maps `C₀ → X` whose
/// classes form a basis of the cokernel.
#[derive(Clone, Debug)]
pub struct Evaluation<F: Field> {
    pub dim: usize,
    pub complement: Vec<RepMap<F>>,
}

impl<F: Field> CoherentFunctor<F> {
    pub fn new(phi: RepMap<F>) -> Self {
        CoherentFunctor { phi }
    }

    pub fn c0(&self) -> &Rep<F> {
        self.phi.source()
    }

    pub fn c1(&self) -> &Rep<F> {
        self.phi.target()
    }
}

impl CoherentFunctor<Rational> {
    pub fn base_change(&self) -> CoherentFunctor<RationalFunction> {
        CoherentFunctor::new(self.phi.map_field(|q| RationalFunction::from_rational(q.clone())))
    }
}

pub fn eval_coherent<F: Field>(func: &CoherentFunctor<F>, x: &Rep<F>) -> Result<Evaluation<F>> {
    if x.quiver() != func.c0().quiver() {
        return Err(Error::QuiverMismatch);
    }
    let len: usize = func.c0().dims().iter().zip(x.dims()).map(|(a, b)| a * b).sum();
    let mut span: Vec<Vec<F>> = hom_basis(func.c1(), x)?
        .iter()
        .map(|g| g.compose(&func.phi).map(|h| h.to_vector()))
        .collect::<Result<_>>()?;
    let base = Matrix::from_rows(span.clone(), len)?.rank();
    let mut rank = base;
    let mut complement = Vec::new();
    for h in hom_basis(func.c0(), x)? {
        span.push(h.to_vector());
        let r = Matrix::from_rows(span.clone(), len)?.rank();
        if r > rank {
            rank = r;
            complement.push(h);
        } else {
            span.pop();
        }
    }
    Ok(Evaluation {
        dim: rank - base,
        complement,
    })
}

/// `F^∨(Y) = Ker(Y ⊗ C₀ → Y ⊗ C₁)` for `Y` over the opposite quiver.
pub fn eval_dual<F: Field>(func: &CoherentFunctor<F>, y: &Rep<F>) -> Result<usize> {
    if *y.quiver() != func.c0().quiver().opposite() {
        return Err(Error::QuiverMismatch);
    }
    Ok(tensor_dim(y, func.c0())? - tensor_map_rank(y, &func.phi)?)
}

/// A presentation of `F^∨` on the opposite side.
///
/// With `c̄` generating `C₀`, `F(X) = X_{C₀,c̄} / X_{C₁,φc̄}` and dually
/// `F^∨(Y) = Y_{C₁',d̄'} / Y_{C₀',c̄'}` for the dual pointed modules; the
/// quotient is presented by `C₁' → C₁' ⊔ C₀'`, the pushout identifying `d̄'`
/// with `c̄'`.
pub fn dual_coherent<F: Field>(func: &CoherentFunctor<F>) -> Result<CoherentFunctor<F>> {
    let gens = top_generators(func.c0());
    let moved: Vec<(usize, Vec<F>)> = gens.iter().map(|(v, g)| (*v, func.phi.at(*v).mul_vec(g))).collect();
    let c0 = Pointed::new(func.c0().clone(), gens)?.dual()?;
    let c1 = Pointed::new(func.c1().clone(), moved)?.dual()?;
    let s = Rep::direct_sum(c1.module.quiver(), &[c1.module.clone(), c0.module.clone()])?;
    let glue: Vec<(usize, Vec<F>)> = c1
        .elements
        .iter()
        .zip(&c0.elements)
        .map(|((v, a), (_, b))| {
            let x = s.injections[0].at(*v).mul_vec(a);
            let y = s.injections[1].at(*v).mul_vec(b);
            (*v, x.iter().zip(&y).map(|(p, q)| p.minus(q)).collect())
        })
        .collect();
    let (_, proj) = map_from_projectives(&s.sum, &glue)?.cokernel();
    Ok(CoherentFunctor::new(proj.compose(&s.injections[0])?))
}
