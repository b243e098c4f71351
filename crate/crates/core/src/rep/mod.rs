//! Representations of quivers, their morphisms and the basic constructions.

mod dual;
mod ext;
mod hom;
mod paths;
mod tensor;

pub use dual::{double_dual_iso, dualize, dualize_map};
pub use ext::{
    ext_cocycle_basis, ext_dim, ext_dim_cocycle, extension_middle_term, ExtCocycle, ExtSpace,
};
pub use hom::{coboundary_matrix, hom_basis, hom_dim, HomSpace};
pub use paths::{injective, projective};
pub use tensor::{tensor_dim, tensor_map_rank, tensor_relations};

use std::fmt;

use crate::error::{Error, Result};
use crate::exactnum::{Field, Matrix, Rational, RationalFunction};
use crate::quiver::Quiver;

/// A finite-dimensional representation: one space per vertex, one matrix
/// per arrow of shape `dims[target] × dims[source]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rep<F: Field> {
    quiver: Quiver,
    dims: Vec<usize>,
    arrows: Vec<Matrix<F>>,
}

impl<F: Field> Rep<F> {
    pub fn new(quiver: Quiver, dims: Vec<usize>, arrows: Vec<Matrix<F>>) -> Result<Self> {
        if dims.len() != quiver.vertex_count() {
            return Err(Error::DimensionMismatch(format!(
                "{} dimensions for {} vertices",
                dims.len(),
                quiver.vertex_count()
            )));
        }
        if arrows.len() != quiver.arrow_count() {
            return Err(Error::DimensionMismatch(format!(
                "{} matrices for {} arrows",
                arrows.len(),
                quiver.arrow_count()
            )));
        }
        for (k, (&(s, t), m)) in quiver.arrows().iter().zip(&arrows).enumerate() {
            if m.shape() != (dims[t], dims[s]) {
                return Err(Error::DimensionMismatch(format!(
                    "arrow {k} has shape {:?}, expected {:?}",
                    m.shape(),
                    (dims[t], dims[s])
                )));
            }
        }
        Ok(Rep {
            quiver,
            dims,
            arrows,
        })
    }

    pub fn zero(quiver: &Quiver) -> Self {
        Rep {
            dims: vec![0; quiver.vertex_count()],
            arrows: vec![Matrix::zeros(0, 0); quiver.arrow_count()],
            quiver: quiver.clone(),
        }
    }

    /// Kronecker representation given by its two arrow matrices.
    pub fn kronecker(a: Matrix<F>, b: Matrix<F>) -> Result<Self> {
        let dims = vec![a.cols(), a.rows()];
        Rep::new(Quiver::kronecker(), dims, vec![a, b])
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, v: usize) -> usize {
        self.dims[v]
    }

    pub fn dim_vector(&self) -> Vec<i64> {
        self.dims.iter().map(|&d| d as i64).collect()
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn arrow(&self, k: usize) -> &Matrix<F> {
        &self.arrows[k]
    }

    pub fn arrows(&self) -> &[Matrix<F>] {
        &self.arrows
    }

    /// Offset of each vertex inside the total space.
    pub fn offsets(&self) -> Vec<usize> {
        let mut acc = 0;
        self.dims
            .iter()
            .map(|&d| {
                let o = acc;
                acc += d;
                o
            })
            .collect()
    }

    /// Matrix of a path given as arrows in traversal order.
    pub fn path_matrix(&self, from: usize, path: &[usize]) -> Matrix<F> {
        path.iter()
            .fold(Matrix::identity(self.dims[from]), |acc, &k| self.arrows[k].mul(&acc))
    }

    pub fn map_field<G: Field>(&self, f: impl Fn(&F) -> G + Copy) -> Rep<G> {
        Rep {
            quiver: self.quiver.clone(),
            dims: self.dims.clone(),
            arrows: self.arrows.iter().map(|m| m.map(f)).collect(),
        }
    }

    /// Transports the representation along vertex-wise invertible matrices
    /// `g_v`, returning the new representation and the isomorphism from `self`.
    pub fn conjugate(&self, g: &[Matrix<F>]) -> Result<(Rep<F>, RepMap<F>)> {
        let inverses = g
            .iter()
            .map(|m| {
                m.inverse()
                    .ok_or_else(|| Error::Precondition("conjugating matrix is singular".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        let arrows = self
            .quiver
            .arrows()
            .iter()
            .zip(&self.arrows)
            .map(|(&(s, t), m)| g[t].mul(m).mul(&inverses[s]))
            .collect();
        let target = Rep::new(self.quiver.clone(), self.dims.clone(), arrows)?;
        let iso = RepMap::new(self.clone(), target.clone(), g.to_vec())?;
        Ok((target, iso))
    }

    /// Text key used to order representations deterministically.
    pub fn canonical_key(&self) -> String {
        let mut s = format!("{:?}", self.dims);
        for m in &self.arrows {
            s.push('|');
            for x in m.entries() {
                s.push_str(&x.to_string());
                s.push(',');
            }
        }
        s
    }

    pub fn direct_sum(quiver: &Quiver, parts: &[Rep<F>]) -> Result<DirectSum<F>> {
        for p in parts {
            if p.quiver != *quiver {
                return Err(Error::QuiverMismatch);
            }
        }
        let n = quiver.vertex_count();
        let dims: Vec<usize> = (0..n).map(|v| parts.iter().map(|p| p.dims[v]).sum()).collect();
        let arrows = (0..quiver.arrow_count())
            .map(|k| Matrix::block_diag(&parts.iter().map(|p| &p.arrows[k]).collect::<Vec<_>>()))
            .collect();
        let sum = Rep::new(quiver.clone(), dims.clone(), arrows)?;
        let mut injections = Vec::with_capacity(parts.len());
        let mut projections = Vec::with_capacity(parts.len());
        let mut offset = vec![0usize; n];
        for p in parts {
            let inj: Vec<Matrix<F>> = (0..n)
                .map(|v| {
                    Matrix::from_fn(dims[v], p.dims[v], |r, c| {
                        if r == offset[v] + c {
                            F::one()
                        } else {
                            F::zero()
                        }
                    })
                })
                .collect();
            let proj = inj.iter().map(Matrix::transpose).collect();
            injections.push(RepMap::new(p.clone(), sum.clone(), inj)?);
            projections.push(RepMap::new(sum.clone(), p.clone(), proj)?);
            for v in 0..n {
                offset[v] += p.dims[v];
            }
        }
        Ok(DirectSum {
            sum,
            injections,
            projections,
        })
    }

    pub fn check_same_quiver(&self, other: &Rep<F>) -> Result<()> {
        if self.quiver != other.quiver {
            return Err(Error::QuiverMismatch);
        }
        Ok(())
    }
}

impl Rep<Rational> {
    /// Extension of scalars to ℚ(t).
    pub fn base_change(&self) -> Rep<RationalFunction> {
        self.map_field(|q| RationalFunction::from_rational(q.clone()))
    }
}

impl<F: Field> fmt::Debug for Rep<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Rep{:?}", self.dims)?;
        for m in &self.arrows {
            write!(f, " {m:?}")?;
        }
        Ok(())
    }
}

/// A direct sum with its structure maps.
#[derive(Clone, Debug)]
pub struct DirectSum<F: Field> {
    pub sum: Rep<F>,
    pub injections: Vec<RepMap<F>>,
    pub projections: Vec<RepMap<F>>,
}

/// A morphism of representations: one matrix per vertex.
#[derive(Clone, PartialEq, Eq)]
pub struct RepMap<F: Field> {
    source: Rep<F>,
    target: Rep<F>,
    maps: Vec<Matrix<F>>,
}

impl<F: Field> RepMap<F> {
    /// Checks shapes and the intertwining relation `Y_a f_s = f_t X_a`.
    pub fn new(source: Rep<F>, target: Rep<F>, maps: Vec<Matrix<F>>) -> Result<Self> {
        source.check_same_quiver(&target)?;
        if maps.len() != source.quiver.vertex_count() {
            return Err(Error::DimensionMismatch(format!(
                "{} vertex matrices for {} vertices",
                maps.len(),
                source.quiver.vertex_count()
            )));
        }
        for (v, m) in maps.iter().enumerate() {
            if m.shape() != (target.dims[v], source.dims[v]) {
                return Err(Error::DimensionMismatch(format!(
                    "vertex {v} matrix has shape {:?}, expected {:?}",
                    m.shape(),
                    (target.dims[v], source.dims[v])
                )));
            }
        }
        for (k, &(s, t)) in source.quiver.arrows().iter().enumerate() {
            if target.arrows[k].mul(&maps[s]) != maps[t].mul(&source.arrows[k]) {
                return Err(Error::NotIntertwining(k));
            }
        }
        Ok(RepMap {
            source,
            target,
            maps,
        })
    }

    pub(crate) fn new_unchecked(source: Rep<F>, target: Rep<F>, maps: Vec<Matrix<F>>) -> Self {
        debug_assert!(RepMap::new(source.clone(), target.clone(), maps.clone()).is_ok());
        RepMap {
            source,
            target,
            maps,
        }
    }

    pub fn identity(x: &Rep<F>) -> Self {
        RepMap {
            source: x.clone(),
            target: x.clone(),
            maps: x.dims.iter().map(|&d| Matrix::identity(d)).collect(),
        }
    }

    pub fn zero(source: &Rep<F>, target: &Rep<F>) -> Self {
        RepMap {
            source: source.clone(),
            target: target.clone(),
            maps: source
                .dims
                .iter()
                .zip(&target.dims)
                .map(|(&s, &t)| Matrix::zeros(t, s))
                .collect(),
        }
    }

    pub fn source(&self) -> &Rep<F> {
        &self.source
    }

    pub fn target(&self) -> &Rep<F> {
        &self.target
    }

    pub fn maps(&self) -> &[Matrix<F>] {
        &self.maps
    }

    pub fn at(&self, v: usize) -> &Matrix<F> {
        &self.maps[v]
    }

    /// `self ∘ inner`
    pub fn compose(&self, inner: &RepMap<F>) -> Result<RepMap<F>> {
        if inner.target != self.source {
            return Err(Error::DimensionMismatch(
                "composition of maps with unequal middle object".into(),
            ));
        }
        Ok(RepMap {
            source: inner.source.clone(),
            target: self.target.clone(),
            maps: self.maps.iter().zip(&inner.maps).map(|(a, b)| a.mul(b)).collect(),
        })
    }

    fn check_parallel(&self, other: &RepMap<F>) -> Result<()> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::DimensionMismatch("maps are not parallel".into()));
        }
        Ok(())
    }

    pub fn add(&self, other: &RepMap<F>) -> Result<RepMap<F>> {
        self.check_parallel(other)?;
        Ok(RepMap {
            source: self.source.clone(),
            target: self.target.clone(),
            maps: self.maps.iter().zip(&other.maps).map(|(a, b)| a.add(b)).collect(),
        })
    }

    pub fn sub(&self, other: &RepMap<F>) -> Result<RepMap<F>> {
        self.add(&other.scale(&F::one().negate()))
    }

    pub fn scale(&self, c: &F) -> RepMap<F> {
        RepMap {
            source: self.source.clone(),
            target: self.target.clone(),
            maps: self.maps.iter().map(|m| m.scale(c)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.maps.iter().all(Matrix::is_zero)
    }

    pub fn is_mono(&self) -> bool {
        self.maps.iter().all(|m| m.rank() == m.cols())
    }

    pub fn is_epi(&self) -> bool {
        self.maps.iter().all(|m| m.rank() == m.rows())
    }

    pub fn is_iso(&self) -> bool {
        self.maps.iter().all(Matrix::is_invertible)
    }

    pub fn inverse(&self) -> Option<RepMap<F>> {
        let maps = self
            .maps
            .iter()
            .map(Matrix::inverse)
            .collect::<Option<Vec<_>>>()?;
        Some(RepMap {
            source: self.target.clone(),
            target: self.source.clone(),
            maps,
        })
    }

    /// Vertex matrices flattened row-major, vertex by vertex.
    pub fn to_vector(&self) -> Vec<F> {
        self.maps.iter().flat_map(|m| m.entries().iter().cloned()).collect()
    }

    pub fn from_vector(source: &Rep<F>, target: &Rep<F>, v: &[F]) -> Result<RepMap<F>> {
        let mut maps = Vec::with_capacity(source.dims.len());
        let mut pos = 0;
        for (&s, &t) in source.dims.iter().zip(&target.dims) {
            let len = s * t;
            if pos + len > v.len() {
                return Err(Error::DimensionMismatch("vector too short for map".into()));
            }
            maps.push(Matrix::from_vec(t, s, v[pos..pos + len].to_vec())?);
            pos += len;
        }
        if pos != v.len() {
            return Err(Error::DimensionMismatch("vector too long for map".into()));
        }
        RepMap::new(source.clone(), target.clone(), maps)
    }

    /// Applies the map to a vector of the total space of the source.
    pub fn apply_total(&self, x: &[F]) -> Vec<F> {
        let so = self.source.offsets();
        let mut out = Vec::with_capacity(self.target.total_dim());
        for (v, m) in self.maps.iter().enumerate() {
            out.extend(m.mul_vec(&x[so[v]..so[v] + self.source.dims[v]]));
        }
        out
    }

    /// Block-diagonal matrix on total spaces.
    pub fn total_matrix(&self) -> Matrix<F> {
        Matrix::block_diag(&self.maps.iter().collect::<Vec<_>>())
    }

    pub fn map_field<G: Field>(&self, f: impl Fn(&F) -> G + Copy) -> RepMap<G> {
        RepMap {
            source: self.source.map_field(f),
            target: self.target.map_field(f),
            maps: self.maps.iter().map(|m| m.map(f)).collect(),
        }
    }

    /// Inclusion of the vertex-wise kernel.
    pub fn kernel(&self) -> (Rep<F>, RepMap<F>) {
        let q = &self.source.quiver;
        let bases: Vec<Matrix<F>> = self
            .maps
            .iter()
            .enumerate()
            .map(|(v, m)| Matrix::from_columns(&m.kernel_basis(), self.source.dims[v]))
            .collect();
        let arrows = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(k, &(s, t))| {
                let image = self.source.arrows[k].mul(&bases[s]);
                bases[t]
                    .solve_matrix(&image)
                    .expect("shapes agree")
                    .expect("kernel is a subrepresentation")
            })
            .collect();
        let dims = bases.iter().map(Matrix::cols).collect();
        let k = Rep::new(q.clone(), dims, arrows).expect("consistent shapes");
        let incl = RepMap::new_unchecked(k.clone(), self.source.clone(), bases);
        (k, incl)
    }

    /// Projection onto the vertex-wise cokernel.
    pub fn cokernel(&self) -> (Rep<F>, RepMap<F>) {
        let q = &self.source.quiver;
        let mut comps = Vec::with_capacity(self.maps.len());
        let mut projs = Vec::with_capacity(self.maps.len());
        for m in &self.maps {
            let image = m.column_space();
            let comp = image.complement_columns();
            let basis = image.hstack(&comp);
            let inv = basis.inverse().expect("image plus complement is a basis");
            projs.push(inv.block(image.cols(), 0, comp.cols(), m.rows()));
            comps.push(comp);
        }
        let arrows = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(k, &(s, t))| projs[t].mul(&self.target.arrows[k]).mul(&comps[s]))
            .collect();
        let dims = comps.iter().map(Matrix::cols).collect();
        let c = Rep::new(q.clone(), dims, arrows).expect("consistent shapes");
        let proj = RepMap::new_unchecked(self.target.clone(), c.clone(), projs);
        (c, proj)
    }

    /// Image factorization `self = mono ∘ epi`.
    pub fn image(&self) -> (Rep<F>, RepMap<F>, RepMap<F>) {
        let q = &self.source.quiver;
        let bases: Vec<Matrix<F>> = self.maps.iter().map(Matrix::column_space).collect();
        let epis: Vec<Matrix<F>> = bases
            .iter()
            .zip(&self.maps)
            .map(|(b, m)| b.solve_matrix(m).expect("shapes agree").expect("in image"))
            .collect();
        let arrows = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(k, &(s, t))| {
                let moved = self.target.arrows[k].mul(&bases[s]);
                bases[t]
                    .solve_matrix(&moved)
                    .expect("shapes agree")
                    .expect("image is a subrepresentation")
            })
            .collect();
        let dims = bases.iter().map(Matrix::cols).collect();
        let im = Rep::new(q.clone(), dims, arrows).expect("consistent shapes");
        let mono = RepMap::new_unchecked(im.clone(), self.target.clone(), bases);
        let epi = RepMap::new_unchecked(self.source.clone(), im.clone(), epis);
        (im, mono, epi)
    }
}

impl<F: Field> fmt::Debug for RepMap<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RepMap{:?}->{:?}", self.source.dims, self.target.dims)?;
        for m in &self.maps {
            write!(f, " {m:?}")?;
        }
        Ok(())
    }
}

/// Map out of a direct sum given by its components.
pub fn map_from_sum<F: Field>(sum: &DirectSum<F>, parts: &[RepMap<F>], target: &Rep<F>) -> Result<RepMap<F>> {
    let mut acc = RepMap::zero(&sum.sum, target);
    for (p, proj) in parts.iter().zip(&sum.projections) {
        acc = acc.add(&p.compose(proj)?)?;
    }
    Ok(acc)
}

/// Map into a direct sum given by its components.
pub fn map_into_sum<F: Field>(source: &Rep<F>, parts: &[RepMap<F>], sum: &DirectSum<F>) -> Result<RepMap<F>> {
    let mut acc = RepMap::zero(source, &sum.sum);
    for (p, inj) in parts.iter().zip(&sum.injections) {
        acc = acc.add(&inj.compose(p)?)?;
    }
    Ok(acc)
}

/// `0 → A --f--> B --g--> C → 0`
#[derive(Clone, Debug)]
pub struct ShortExact<F: Field> {
    pub f: RepMap<F>,
    pub g: RepMap<F>,
}

impl<F: Field> ShortExact<F> {
    pub fn left(&self) -> &Rep<F> {
        self.f.source()
    }

    pub fn middle(&self) -> &Rep<F> {
        self.f.target()
    }

    pub fn right(&self) -> &Rep<F> {
        self.g.target()
    }

    pub fn is_exact(&self) -> bool {
        self.f.target() == self.g.source()
            && self.f.is_mono()
            && self.g.is_epi()
            && self.g.compose(&self.f).map(|c| c.is_zero()).unwrap_or(false)
            && (0..self.middle().dims().len())
                .all(|v| self.left().dim(v) + self.right().dim(v) == self.middle().dim(v))
    }
}

/// Pushout of `f: A → B` and `g: A → C`, with the induced maps from `B` and `C`.
pub fn pushout<F: Field>(f: &RepMap<F>, g: &RepMap<F>) -> Result<(Rep<F>, RepMap<F>, RepMap<F>)> {
    if f.source() != g.source() {
        return Err(Error::DimensionMismatch("pushout of maps with different sources".into()));
    }
    let q = f.source().quiver().clone();
    let ds = Rep::direct_sum(&q, &[f.target().clone(), g.target().clone()])?;
    let h = map_into_sum(f.source(), &[f.clone(), g.scale(&F::one().negate())], &ds)?;
    let (p, proj) = h.cokernel();
    let from_b = proj.compose(&ds.injections[0])?;
    let from_c = proj.compose(&ds.injections[1])?;
    Ok((p, from_b, from_c))
}

/// Pullback of `f: B → D` and `g: C → D`, with the induced maps to `B` and `C`.
pub fn pullback<F: Field>(f: &RepMap<F>, g: &RepMap<F>) -> Result<(Rep<F>, RepMap<F>, RepMap<F>)> {
    if f.target() != g.target() {
        return Err(Error::DimensionMismatch("pullback of maps with different targets".into()));
    }
    let q = f.source().quiver().clone();
    let ds = Rep::direct_sum(&q, &[f.source().clone(), g.source().clone()])?;
    let h = map_from_sum(&ds, &[f.clone(), g.scale(&F::one().negate())], f.target())?;
    let (p, incl) = h.kernel();
    let to_b = ds.projections[0].compose(&incl)?;
    let to_c = ds.projections[1].compose(&incl)?;
    Ok((p, to_b, to_c))
}

#[cfg(test)]
mod tests {
    use super::*;

    type Q = Rational;

    fn kr(a: &[&[i64]], b: &[&[i64]]) -> Rep<Q> {
        Rep::kronecker(Matrix::from_i64_rows(a), Matrix::from_i64_rows(b)).unwrap()
    }

    fn r0() -> Rep<Q> {
        kr(&[&[1]], &[&[0]])
    }

    fn r_inf() -> Rep<Q> {
        kr(&[&[0]], &[&[1]])
    }

    #[test]
    fn direct_sum_examples() {
        let q = Quiver::kronecker();
        let empty = Rep::<Q>::direct_sum(&q, &[]).unwrap();
        assert!(empty.sum.is_zero());
        let ds = Rep::direct_sum(&q, &[r0(), r_inf()]).unwrap();
        assert_eq!(ds.sum.dims(), &[2, 2]);
        assert_eq!(ds.sum.arrow(0), &Matrix::from_i64_rows(&[&[1, 0], &[0, 0]]));
        assert_eq!(ds.sum.arrow(1), &Matrix::from_i64_rows(&[&[0, 0], &[0, 1]]));
        for i in 0..2 {
            for j in 0..2 {
                let c = ds.projections[i].compose(&ds.injections[j]).unwrap();
                if i == j {
                    assert_eq!(c, RepMap::identity(ds.injections[i].source()));
                } else {
                    assert!(c.is_zero());
                }
            }
        }
    }

    #[test]
    fn intertwining_is_enforced() {
        let bad = RepMap::new(r0(), r_inf(), vec![Matrix::identity(1), Matrix::identity(1)]);
        assert!(matches!(bad, Err(Error::NotIntertwining(_))));
    }

    #[test]
    fn kernel_cokernel_examples() {
        let x = r0();
        let id = RepMap::identity(&x);
        assert!(id.kernel().0.is_zero());
        assert!(id.cokernel().0.is_zero());
        let y = r_inf();
        let z = RepMap::zero(&x, &y);
        assert_eq!(z.kernel().0, x);
        assert_eq!(z.cokernel().0, y);

        // P(1) = (0,1) into P(0) = (1,2) along arrow a
        let p1 = projective::<Q>(&Quiver::kronecker(), 1);
        let p0 = projective::<Q>(&Quiver::kronecker(), 0);
        let maps = vec![Matrix::zeros(1, 0), p0.arrow(0).clone()];
        let f = RepMap::new(p1, p0, maps).unwrap();
        assert!(f.is_mono());
        let (c, proj) = f.cokernel();
        assert_eq!(c.dims(), &[1, 1]);
        assert!(proj.compose(&f).unwrap().is_zero());
    }

    #[test]
    fn image_factorizes() {
        let x = Rep::direct_sum(&Quiver::kronecker(), &[r0(), r_inf()]).unwrap();
        let f = x.projections[0].clone();
        let f = x.injections[0].compose(&f).unwrap();
        let (im, mono, epi) = f.image();
        assert_eq!(im.dims(), &[1, 1]);
        assert_eq!(mono.compose(&epi).unwrap(), f);
        assert!(mono.is_mono() && epi.is_epi());
    }

    #[test]
    fn pushout_examples() {
        let q = Quiver::kronecker();
        let a = r0();
        let id = RepMap::identity(&a);
        let (p, from_b, _) = pushout(&id, &id).unwrap();
        assert_eq!(p.dims(), a.dims());
        assert!(from_b.is_iso());

        let b = r_inf();
        let zero = Rep::zero(&q);
        let (p, fb, fc) = pushout(&RepMap::zero(&zero, &a), &RepMap::zero(&zero, &b)).unwrap();
        assert_eq!(p.dims(), &[2, 2]);
        assert!(fb.is_mono() && fc.is_mono());

        let (pb, _, _) = pullback(&RepMap::identity(&a), &RepMap::identity(&a)).unwrap();
        assert_eq!(pb.dims(), a.dims());
    }

    #[test]
    fn conjugation_gives_isomorphism() {
        let x = Rep::direct_sum(&Quiver::kronecker(), &[r0(), r0()]).unwrap().sum;
        let g = vec![
            Matrix::from_i64_rows(&[&[1, 2], &[0, 1]]),
            Matrix::from_i64_rows(&[&[3, 1], &[1, 1]]),
        ];
        let (y, iso) = x.conjugate(&g).unwrap();
        assert!(iso.is_iso());
        assert_eq!(iso.target(), &y);
    }
}
