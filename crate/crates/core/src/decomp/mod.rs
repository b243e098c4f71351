//! Krull–Schmidt decomposition through the endomorphism algebra.

mod algebra;

pub use algebra::EndAlgebra;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exactnum::{Field, Matrix, Polynomial, Rational};
use crate::rep::{hom_basis, Rep, RepMap};

pub const DEFAULT_SEED: u64 = 0x6b72_6f6e;

#[derive(Clone, Copy, Debug)]
pub struct DecomposeOptions {
    pub seed: u64,
    /// Number of random elements tried after the systematic candidates.
    pub random_budget: usize,
}

impl Default for DecomposeOptions {
    fn default() -> Self {
        DecomposeOptions {
            seed: DEFAULT_SEED,
            random_budget: 400,
        }
    }
}

/// Why a summand is known to be indecomposable.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// `E / rad E` is one-dimensional.
    Local,
    /// `E / rad E` is generated by one element with irreducible minimal
    /// polynomial of this degree, hence a field.
    Field(usize),
}

#[derive(Clone, Debug)]
pub struct Summand<F: Field> {
    pub rep: Rep<F>,
    pub multiplicity: usize,
    /// One inclusion `rep → X` per copy.
    pub inclusions: Vec<RepMap<F>>,
    /// One projection `X → rep` per copy, matching `inclusions`.
    pub projections: Vec<RepMap<F>>,
    pub certificate: Certificate,
}

#[derive(Clone, Debug)]
pub struct Decomposition<F: Field> {
    pub source: Rep<F>,
    pub summands: Vec<Summand<F>>,
}

impl<F: Field> Decomposition<F> {
    pub fn summand_count(&self) -> usize {
        self.summands.iter().map(|s| s.multiplicity).sum()
    }

    pub fn is_indecomposable(&self) -> bool {
        self.summand_count() == 1
    }

    fn copies(&self) -> impl Iterator<Item = (&RepMap<F>, &RepMap<F>)> {
        self.summands
            .iter()
            .flat_map(|s| s.inclusions.iter().zip(&s.projections))
    }

    /// `Σ ι_i π_i = id` and `π_i ι_j = δ_ij`.
    pub fn verify(&self) -> bool {
        let mut total = RepMap::zero(&self.source, &self.source);
        for (i, p) in self.copies() {
            match i.compose(p).and_then(|c| total.add(&c)) {
                Ok(t) => total = t,
                Err(_) => return false,
            }
        }
        if total != RepMap::identity(&self.source) {
            return false;
        }
        let copies: Vec<_> = self.copies().collect();
        for (a, (_, p)) in copies.iter().enumerate() {
            for (b, (i, _)) in copies.iter().enumerate() {
                let Ok(c) = p.compose(i) else { return false };
                let ok = if a == b {
                    c == RepMap::identity(c.source())
                } else {
                    c.is_zero()
                };
                if !ok {
                    return false;
                }
            }
        }
        true
    }
}

struct Piece {
    rep: Rep<Rational>,
    incl: RepMap<Rational>,
    proj: RepMap<Rational>,
    certificate: Certificate,
}

enum Outcome {
    Indecomposable(Certificate),
    Split(Vec<Rational>),
}

pub fn end_algebra(x: &Rep<Rational>) -> Result<EndAlgebra<Rational>> {
    EndAlgebra::new(x)
}

pub fn decompose(x: &Rep<Rational>) -> Result<Decomposition<Rational>> {
    decompose_with(x, DecomposeOptions::default())
}

pub fn decompose_with(x: &Rep<Rational>, opts: DecomposeOptions) -> Result<Decomposition<Rational>> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut pieces = Vec::new();
    split_into(x, &RepMap::identity(x), &RepMap::identity(x), opts, &mut rng, &mut pieces)?;
    pieces.sort_by(|a, b| {
        (a.rep.dims(), a.rep.canonical_key()).cmp(&(b.rep.dims(), b.rep.canonical_key()))
    });

    let mut summands: Vec<Summand<Rational>> = Vec::new();
    'pieces: for piece in pieces {
        for s in summands.iter_mut() {
            if let Some(w) = iso_indecomposable(&s.rep, &piece.rep)? {
                let w_inv = w.inverse().expect("witness is invertible");
                s.inclusions.push(piece.incl.compose(&w)?);
                s.projections.push(w_inv.compose(&piece.proj)?);
                s.multiplicity += 1;
                continue 'pieces;
            }
        }
        summands.push(Summand {
            rep: piece.rep,
            multiplicity: 1,
            inclusions: vec![piece.incl],
            projections: vec![piece.proj],
            certificate: piece.certificate,
        });
    }
    Ok(Decomposition {
        source: x.clone(),
        summands,
    })
}

fn split_into(
    x: &Rep<Rational>,
    incl: &RepMap<Rational>,
    proj: &RepMap<Rational>,
    opts: DecomposeOptions,
    rng: &mut ChaCha8Rng,
    out: &mut Vec<Piece>,
) -> Result<()> {
    if x.is_zero() {
        return Ok(());
    }
    let e = EndAlgebra::new(x)?;
    match find_idempotent(&e, opts, rng)? {
        Outcome::Indecomposable(certificate) => {
            out.push(Piece {
                rep: x.clone(),
                incl: incl.clone(),
                proj: proj.clone(),
                certificate,
            });
        }
        Outcome::Split(idem) => {
            let idem = e.element(&idem)?;
            for (part, i, p) in split_along(x, &idem)? {
                split_into(&part, &incl.compose(&i)?, &p.compose(proj)?, opts, rng, out)?;
            }
        }
    }
    Ok(())
}

fn find_idempotent(
    e: &EndAlgebra<Rational>,
    opts: DecomposeOptions,
    rng: &mut ChaCha8Rng,
) -> Result<Outcome> {
    let n = e.dim();
    let semisimple = e.semisimple_dim();
    if semisimple == 1 {
        return Ok(Outcome::Indecomposable(Certificate::Local));
    }
    let unit = |i: usize| {
        let mut v = e.zero();
        v[i] = Rational::one();
        v
    };
    let mut candidates: Vec<Vec<Rational>> = (0..n).map(unit).collect();
    for i in 0..n {
        for j in i + 1..n {
            candidates.push(e.add(&unit(i), &unit(j)));
            candidates.push(e.add(&unit(i), &e.scale(&Rational::from(-1), &unit(j))));
        }
    }
    let mut tried = 0;
    let mut random_left = opts.random_budget;
    let mut next = candidates.into_iter();
    loop {
        let a = match next.next() {
            Some(a) => a,
            None if random_left > 0 => {
                random_left -= 1;
                (0..n).map(|_| Rational::from(rng.gen_range(-3i64..=3))).collect()
            }
            None => return Err(Error::SplitSearchExhausted(tried)),
        };
        tried += 1;
        let m = e.minimal_polynomial(&a);
        let s = m.squarefree_part()?;
        let factors = s.factor();
        if factors.len() >= 2 {
            let f = &factors[0].0;
            let g = s.exact_div(f)?;
            let (_, _, v) = f.ext_gcd(&g)?;
            let e0 = e.eval_poly(&(&v * &g).rem(&m)?, &a);
            return Ok(Outcome::Split(e.lift_idempotent(&e0)));
        }
        if let [(p, _)] = factors.as_slice() {
            if p.degree() == Some(semisimple) {
                return Ok(Outcome::Indecomposable(Certificate::Field(semisimple)));
            }
        }
    }
}

/// Splits `X = eX ⊕ (1−e)X` for an idempotent endomorphism `e`.
fn split_along(
    x: &Rep<Rational>,
    idem: &RepMap<Rational>,
) -> Result<Vec<(Rep<Rational>, RepMap<Rational>, RepMap<Rational>)>> {
    let q = x.quiver();
    let nv = q.vertex_count();
    let mut images = Vec::with_capacity(nv);
    let mut complements = Vec::with_capacity(nv);
    let mut inverses = Vec::with_capacity(nv);
    for v in 0..nv {
        let ev = idem.at(v);
        let u = ev.column_space();
        let w = Matrix::identity(x.dim(v)).sub(ev).column_space();
        let basis = u.hstack(&w);
        inverses.push(basis.inverse().ok_or_else(|| {
            Error::Precondition("endomorphism used for splitting is not idempotent".into())
        })?);
        images.push(u);
        complements.push(w);
    }
    let mut out = Vec::with_capacity(2);
    for first in [true, false] {
        let bases = if first { &images } else { &complements };
        let rows: Vec<Matrix<Rational>> = (0..nv)
            .map(|v| {
                let offset = if first { 0 } else { images[v].cols() };
                inverses[v].block(offset, 0, bases[v].cols(), x.dim(v))
            })
            .collect();
        let arrows = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(k, &(s, t))| rows[t].mul(x.arrow(k)).mul(&bases[s]))
            .collect();
        let dims = bases.iter().map(Matrix::cols).collect();
        let part = Rep::new(q.clone(), dims, arrows)?;
        let i = RepMap::new(part.clone(), x.clone(), bases.clone())?;
        let p = RepMap::new(x.clone(), part.clone(), rows)?;
        out.push((part, i, p));
    }
    Ok(out)
}

/// Isomorphism `X → Y` when `X` is indecomposable, or `None`.
///
/// With `End(X)` local, `X ≅ Y` exactly when some composite `g ∘ f` of basis
/// maps `f: X → Y`, `g: Y → X` is invertible; then `f` is an isomorphism.
pub fn iso_indecomposable<F: Field>(x: &Rep<F>, y: &Rep<F>) -> Result<Option<RepMap<F>>> {
    x.check_same_quiver(y)?;
    if x.dims() != y.dims() {
        return Ok(None);
    }
    if x == y {
        return Ok(Some(RepMap::identity(x)));
    }
    let forward = hom_basis(x, y)?;
    if let Some(f) = forward.iter().find(|f| f.is_iso()) {
        return Ok(Some(f.clone()));
    }
    let backward = hom_basis(y, x)?;
    for f in &forward {
        for g in &backward {
            if g.compose(f)?.is_iso() {
                return Ok(Some(f.clone()));
            }
        }
    }
    Ok(None)
}

/// Isomorphism test for arbitrary finite-dimensional representations over ℚ.
pub fn iso_test(x: &Rep<Rational>, y: &Rep<Rational>) -> Result<Option<RepMap<Rational>>> {
    x.check_same_quiver(y)?;
    if x.dims() != y.dims() {
        return Ok(None);
    }
    if x == y {
        return Ok(Some(RepMap::identity(x)));
    }
    let dx = decompose(x)?;
    let dy = decompose(y)?;
    if dx.summands.len() != dy.summands.len() {
        return Ok(None);
    }
    let mut used = vec![false; dy.summands.len()];
    let mut witness = RepMap::zero(x, y);
    for sx in &dx.summands {
        let mut matched = false;
        for (j, sy) in dy.summands.iter().enumerate() {
            if used[j] || sx.multiplicity != sy.multiplicity {
                continue;
            }
            if let Some(w) = iso_indecomposable(&sx.rep, &sy.rep)? {
                for (px, iy) in sx.projections.iter().zip(&sy.inclusions) {
                    witness = witness.add(&iy.compose(&w)?.compose(px)?)?;
                }
                used[j] = true;
                matched = true;
                break;
            }
        }
        if !matched {
            return Ok(None);
        }
    }
    debug_assert!(witness.is_iso());
    Ok(Some(witness))
}

pub fn is_indecomposable(x: &Rep<Rational>) -> Result<bool> {
    Ok(!x.is_zero() && decompose(x)?.is_indecomposable())
}

/// Squarefree part of a minimal polynomial, used by callers that recover tube points.
pub fn squarefree_minimal_polynomial(m: &Matrix<Rational>) -> Result<Polynomial> {
    m.minimal_polynomial().squarefree_part()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::Quiver;
    use crate::rep::projective;

    fn kr(a: &[&[i64]], b: &[&[i64]]) -> Rep<Rational> {
        Rep::kronecker(Matrix::from_i64_rows(a), Matrix::from_i64_rows(b)).unwrap()
    }

    fn shuffle(x: &Rep<Rational>) -> Rep<Rational> {
        let g: Vec<Matrix<Rational>> = x
            .dims()
            .iter()
            .map(|&d| {
                Matrix::from_fn(d, d, |r, c| {
                    Rational::from(if r == c { 1 } else if r < c { (r + 2 * c) as i64 } else { 0 })
                })
                .mul(&Matrix::from_fn(d, d, |r, c| {
                    Rational::from(if r >= c { 1 } else { 0 })
                }))
            })
            .collect();
        x.conjugate(&g).unwrap().0
    }

    #[test]
    fn projective_is_indecomposable() {
        let p = projective::<Rational>(&Quiver::kronecker(), 0);
        let d = decompose(&p).unwrap();
        assert_eq!(d.summands.len(), 1);
        assert_eq!(d.summands[0].multiplicity, 1);
        assert!(d.verify());
    }

    #[test]
    fn shuffled_double_regular() {
        let r0 = kr(&[&[1]], &[&[0]]);
        let x = Rep::direct_sum(&Quiver::kronecker(), &[r0.clone(), r0.clone()]).unwrap().sum;
        let y = shuffle(&x);
        let d = decompose(&y).unwrap();
        assert_eq!(d.summands.len(), 1);
        assert_eq!(d.summands[0].multiplicity, 2);
        assert!(d.verify());
        assert!(iso_indecomposable(&d.summands[0].rep, &r0).unwrap().is_some());
    }

    #[test]
    fn zero_has_empty_decomposition() {
        let z = Rep::<Rational>::zero(&Quiver::kronecker());
        assert!(decompose(&z).unwrap().summands.is_empty());
    }

    #[test]
    fn quadratic_point_certified_by_field() {
        // A = I, B = companion of x² + 1
        let r = kr(&[&[1, 0], &[0, 1]], &[&[0, -1], &[1, 0]]);
        let d = decompose(&r).unwrap();
        assert!(d.is_indecomposable());
        assert_eq!(d.summands[0].certificate, Certificate::Field(2));
    }

    #[test]
    fn iso_examples() {
        let r0 = kr(&[&[1]], &[&[0]]);
        let conj = r0.conjugate(&[Matrix::from_i64_rows(&[&[2]]), Matrix::from_i64_rows(&[&[5]])]).unwrap().0;
        let w = iso_test(&r0, &conj).unwrap().unwrap();
        assert!(w.is_iso());
        assert!(iso_test(&r0, &kr(&[&[0]], &[&[1]])).unwrap().is_none());
        assert_eq!(iso_test(&r0, &r0).unwrap().unwrap(), RepMap::identity(&r0));
    }

    #[test]
    fn mixed_sum_matches_parts() {
        let q = Quiver::kronecker();
        let parts = [
            kr(&[&[1]], &[&[0]]),
            projective::<Rational>(&q, 0),
            kr(&[&[0]], &[&[1]]),
            kr(&[&[1]], &[&[0]]),
        ];
        let x = shuffle(&Rep::direct_sum(&q, &parts).unwrap().sum);
        let d = decompose(&x).unwrap();
        assert!(d.verify());
        assert_eq!(d.summand_count(), 4);
        assert_eq!(d.summands.len(), 3);
        let reassembled = Rep::direct_sum(&q, &parts).unwrap().sum;
        assert!(iso_test(&x, &reassembled).unwrap().unwrap().is_iso());
    }
}
