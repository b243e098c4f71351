//! The generic Kronecker module over ℚ(t) and its constructions.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::decomp::{decompose, end_algebra, iso_indecomposable, iso_test, DEFAULT_SEED};
use crate::error::{Error, Result};
use crate::exactnum::{Matrix, Polynomial, Rational, RationalFunction};
use crate::rep::{
    ext_dim, ext_dim_cocycle, extension_middle_term, hom_basis, hom_dim, ExtCocycle, ExtSpace,
    Rep, RepMap, ShortExact,
};
use crate::check::CheckList;
use crate::tame::{kron_regular, prufer_tower, tau_nilpotence, transpose_dual_tau, tube_point, TubePoint};

pub type QtRep = Rep<RationalFunction>;

pub fn base_change(x: &Rep<Rational>) -> QtRep {
    x.base_change()
}

pub fn base_change_map(f: &RepMap<Rational>) -> RepMap<RationalFunction> {
    f.map_field(|q| RationalFunction::from_rational(q.clone()))
}

/// `Q = (ℚ(t), ℚ(t), 1, ·t)`.
pub fn generic_module() -> QtRep {
    Rep::kronecker(
        Matrix::identity(1),
        Matrix::from_rows(vec![vec![RationalFunction::t()]], 1).expect("1x1"),
    )
    .expect("shapes agree")
}

/// The pinned sample of tube points used for orthogonality checks:
/// eight rational points, infinity, and three points of degree two.
pub fn default_sample() -> Vec<TubePoint> {
    let mut out: Vec<TubePoint> = [0, 1, -1, 2, -2, 3, -3].into_iter().map(TubePoint::linear).collect();
    out.push(TubePoint::Finite(Polynomial::new(vec![Rational::new(-1, 2).unwrap(), Rational::one()])));
    out.push(TubePoint::Infinity);
    for p in ["x^2+1", "x^2-2", "x^2+x+1"] {
        out.push(p.parse().expect("irreducible"));
    }
    out
}

/// `f ↦ f'` on ℚ(t), a ℚ-linear but not ℚ(t)-linear map.
pub fn derivative(f: &RationalFunction) -> RationalFunction {
    let (n, d) = (f.num(), f.den());
    let top = &(&n.derivative() * d) - &(n * &d.derivative());
    RationalFunction::new(top, d * d).expect("nonzero denominator")
}

/// The ℚ-linear operator `f ↦ c·f' + m·f` on ℚ(t).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FirstOrderOperator {
    pub c: RationalFunction,
    pub m: RationalFunction,
}

impl FirstOrderOperator {
    pub fn apply(&self, f: &RationalFunction) -> RationalFunction {
        self.c.mul(&derivative(f)).add(&self.m.mul(f))
    }
}

/// A self-extension cocycle `(z_A, z_B)` of `Q` with ℚ-linear vertex maps
/// `h_0, h_1` such that `z_a = Q_a h_0 − h_1 Q_a` on all of ℚ(t).
#[derive(Clone, Debug)]
pub struct SelfExtensionSplitting {
    pub cocycle: ExtCocycle<RationalFunction>,
    pub h: [FirstOrderOperator; 2],
}

/// Over ℚ(t)-linear maps the class of `z` need not vanish; over Λ it does:
/// `h_0 = c·d/dt + z_A`, `h_1 = c·d/dt` with `c = t·z_A − z_B`.
pub fn split_self_extension(z: &ExtCocycle<RationalFunction>) -> Result<SelfExtensionSplitting> {
    if z.mats.len() != 2 || z.mats.iter().any(|m| m.shape() != (1, 1)) {
        return Err(Error::DimensionMismatch("self-extension cocycle of Q".into()));
    }
    let za = z.mats[0].get(0, 0).clone();
    let zb = z.mats[1].get(0, 0).clone();
    let c = RationalFunction::t().mul(&za).sub(&zb);
    Ok(SelfExtensionSplitting {
        cocycle: z.clone(),
        h: [
            FirstOrderOperator { c: c.clone(), m: za },
            FirstOrderOperator {
                c,
                m: RationalFunction::zero(),
            },
        ],
    })
}

impl SelfExtensionSplitting {
    /// Checks `z_a·f = x_a·h_0(f) − h_1(x_a·f)` on the given test functions,
    /// with `x_A = 1`, `x_B = t`.
    pub fn verify_on(&self, samples: &[RationalFunction]) -> bool {
        let x = [RationalFunction::one(), RationalFunction::t()];
        samples.iter().all(|f| {
            (0..2).all(|a| {
                let lhs = self.cocycle.mats[a].get(0, 0).mul(f);
                let rhs = x[a].mul(&self.h[0].apply(f)).sub(&self.h[1].apply(&x[a].mul(f)));
                lhs == rhs
            })
        })
    }
}

/// Test functions for operator identities on ℚ(t).
pub fn operator_samples() -> Vec<RationalFunction> {
    let mut out = vec![RationalFunction::one(), RationalFunction::t()];
    out.push(RationalFunction::from_polynomial(Polynomial::from_i64s(&[3, 0, -2, 1])));
    out.push(RationalFunction::new(Polynomial::one(), Polynomial::from_i64s(&[1, 1])).expect("nonzero"));
    out.push(RationalFunction::new(Polynomial::from_i64s(&[0, 2]), Polynomial::from_i64s(&[1, 0, 1])).expect("nonzero"));
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RperpReport {
    pub hom_dim: usize,
    /// Ext through the Euler form over ℚ(t).
    pub ext_dim: usize,
    /// Ext as cocycles modulo coboundaries over ℚ(t).
    pub ext_dim_cocycle: usize,
    /// Every summand of the input has defect zero.
    pub regular: bool,
}

impl RperpReport {
    pub fn is_orthogonal(&self) -> bool {
        self.hom_dim == 0 && self.ext_dim == 0 && self.ext_dim_cocycle == 0
    }
}

/// `Hom` and `Ext` from a regular module to the generic module.
pub fn rperp_check(r: &Rep<Rational>) -> Result<RperpReport> {
    let q = r.quiver();
    let mut regular = true;
    for s in &decompose(r)?.summands {
        regular &= q.defect(&s.rep.dim_vector())? == 0;
    }
    let rt = base_change(r);
    let g = generic_module();
    Ok(RperpReport {
        hom_dim: hom_dim(&rt, &g)?,
        ext_dim: ext_dim(&rt, &g)?,
        ext_dim_cocycle: ext_dim_cocycle(&rt, &g)?,
        regular,
    })
}

/// The rational functions are linearly independent over ℚ.
pub fn rationally_independent(fs: &[RationalFunction]) -> Result<bool> {
    let mut den = Polynomial::one();
    for f in fs {
        let g = den.gcd(f.den())?;
        den = (&den * f.den()).exact_div(&g)?;
    }
    let nums: Vec<Polynomial> = fs
        .iter()
        .map(|f| Ok(&den.exact_div(f.den())? * f.num()))
        .collect::<Result<_>>()?;
    let len = nums.iter().filter_map(Polynomial::degree).max().map_or(0, |d| d + 1);
    let cols: Vec<Vec<Rational>> = nums.iter().map(|p| (0..len).map(|i| p.coeff(i)).collect()).collect();
    Ok(Matrix::from_columns(&cols, len).rank() == fs.len())
}

/// `0 → P → E_r → S_r^n → 0` whose connecting map
/// `Hom(S_r, S_r^n) → Ext¹(S_r, P)` is an isomorphism.
#[derive(Clone, Debug)]
pub struct UniversalCoextension {
    pub r: usize,
    pub n: usize,
    pub s_r: Rep<Rational>,
    pub cocycle: ExtCocycle<Rational>,
    pub sequence: ShortExact<Rational>,
    pub hom_dim: usize,
    pub ext_dim: usize,
    pub connecting_rank: usize,
}

impl UniversalCoextension {
    pub fn middle(&self) -> &Rep<Rational> {
        self.sequence.middle()
    }

    pub fn is_universal(&self) -> bool {
        self.hom_dim == self.ext_dim && self.connecting_rank == self.hom_dim
    }
}

fn power(x: &Rep<Rational>, n: usize) -> Result<Rep<Rational>> {
    Ok(Rep::direct_sum(x.quiver(), &vec![x.clone(); n])?.sum)
}

/// Rank of `h ↦ [z ∘ h]` on `Hom(S, S^n)`.
fn connecting_rank(s: &Rep<Rational>, sn: &Rep<Rational>, p: &Rep<Rational>, z: &ExtCocycle<Rational>) -> Result<usize> {
    let space = ExtSpace::new(s, p)?;
    let cols: Vec<Vec<Rational>> = hom_basis(s, sn)?
        .iter()
        .map(|h| space.class_coordinates(&z.pullback(h)))
        .collect::<Result<_>>()?;
    Ok(Matrix::from_columns(&cols, space.dim()).rank())
}

fn check_coextension_input(p: &Rep<Rational>, s: &Rep<Rational>) -> Result<TubePoint> {
    let q = p.quiver();
    if !q.is_kronecker() || !s.quiver().is_kronecker() {
        return Err(Error::UnsupportedQuiver("coextensions are built over the Kronecker quiver".into()));
    }
    if q.defect(&p.dim_vector())? != -1 || !transpose_dual_tau(p)?.is_zero() || p.is_zero() {
        return Err(Error::Precondition("P must be projective of defect -1".into()));
    }
    let point = tube_point(s)?;
    if iso_test(s, &kron_regular(&point, 1)?)?.is_none() {
        return Err(Error::Precondition("S must be regular simple".into()));
    }
    Ok(point)
}

/// Multiplicity `n = dim Ext¹(S, P) / dim End(S)`.
fn multiplicity(p: &Rep<Rational>, s: &Rep<Rational>) -> Result<usize> {
    let e = ext_dim(s, p)?;
    let d = end_algebra(s)?.dim();
    if e % d != 0 {
        return Err(Error::Precondition("Ext(S, P) is not free over End(S)".into()));
    }
    Ok(e / d)
}

fn assemble(
    r: usize,
    n: usize,
    s_r: Rep<Rational>,
    p: &Rep<Rational>,
    parts: &[ExtCocycle<Rational>],
) -> Result<UniversalCoextension> {
    let sn = power(&s_r, n)?;
    let mats = (0..p.quiver().arrow_count())
        .map(|k| {
            let blocks: Vec<&Matrix<Rational>> = parts.iter().map(|z| &z.mats[k]).collect();
            blocks[1..].iter().fold(blocks[0].clone(), |acc, b| acc.hstack(b))
        })
        .collect();
    let cocycle = ExtCocycle { mats };
    let rank = connecting_rank(&s_r, &sn, p, &cocycle)?;
    let sequence = extension_middle_term(&sn, p, &cocycle)?;
    Ok(UniversalCoextension {
        r,
        n,
        hom_dim: hom_dim(&s_r, &sn)?,
        ext_dim: ext_dim(&s_r, p)?,
        connecting_rank: rank,
        s_r,
        cocycle,
        sequence,
    })
}

/// Searches for cocycles `(z_1, …, z_n)` making the connecting map bijective:
/// basis tuples first, then seeded random combinations.
pub fn universal_coextension(p: &Rep<Rational>, s: &Rep<Rational>, r: usize) -> Result<UniversalCoextension> {
    if r == 0 {
        return Err(Error::Precondition("r must be at least 1".into()));
    }
    let point = check_coextension_input(p, s)?;
    let n = multiplicity(p, s)?;
    let s_r = kron_regular(&point, r)?;
    let basis = ExtSpace::new(&s_r, p)?.basis();
    let combine = |coeffs: &[Rational]| {
        coeffs
            .iter()
            .zip(&basis)
            .fold(ExtCocycle::zero(&s_r, p), |acc, (c, b)| acc.add(&b.scale(c)))
    };
    let m = basis.len();
    let mut candidates: Vec<Vec<Vec<Rational>>> = Vec::new();
    if m >= n {
        for start in 0..m {
            candidates.push(
                (0..n)
                    .map(|i| (0..m).map(|j| Rational::from(i64::from(j == (start + i) % m))).collect())
                    .collect(),
            );
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    for _ in 0..64 {
        candidates.push(
            (0..n)
                .map(|_| (0..m).map(|_| Rational::from(rng.gen_range(-3i64..=3))).collect())
                .collect(),
        );
    }
    for cand in candidates {
        let parts: Vec<ExtCocycle<Rational>> = cand.iter().map(|c| combine(c)).collect();
        let u = assemble(r, n, s_r.clone(), p, &parts)?;
        if u.is_universal() {
            return Ok(u);
        }
    }
    Err(Error::Precondition("no universal cocycle found in the search budget".into()))
}

/// `E₁ ↣ E₂ ↣ … ↣ E_N` with every `E_r` a universal coextension of `S_r^n` by `P`.
#[derive(Clone, Debug)]
pub struct CoextensionTower {
    pub p: Rep<Rational>,
    pub point: TubePoint,
    pub n: usize,
    pub stages: Vec<UniversalCoextension>,
    /// `monos[k]: E_{k+1} → E_{k+2}`.
    pub monos: Vec<RepMap<Rational>>,
}

/// Chooses the universal class at the top stage and pulls it back along
/// `S_r ↣ S_N`, so the squares commute on the nose.
pub fn coextension_tower(p: &Rep<Rational>, point: &TubePoint, n_max: usize) -> Result<CoextensionTower> {
    if n_max == 0 {
        return Err(Error::Precondition("towers need at least one stage".into()));
    }
    let s = kron_regular(point, 1)?;
    let top = universal_coextension(p, &s, n_max)?;
    let n = top.n;
    let prufer = prufer_tower(point, n_max)?;
    let mut stages = vec![top];
    for r in (1..n_max).rev() {
        let iota = &prufer.monos[r - 1];
        let upper = &stages[0];
        let parts: Vec<ExtCocycle<Rational>> = (0..n)
            .map(|i| {
                let mats = upper
                    .cocycle
                    .mats
                    .iter()
                    .zip(p.quiver().arrows())
                    .map(|(z, &(src, _))| {
                        let w = upper.s_r.dim(src);
                        z.block(0, i * w, z.rows(), w).mul(iota.at(src))
                    })
                    .collect();
                ExtCocycle { mats }
            })
            .collect();
        let stage = assemble(r, n, prufer.stages[r - 1].clone(), p, &parts)?;
        stages.insert(0, stage);
    }
    let mut monos = Vec::new();
    for r in 1..n_max {
        let iota = &prufer.monos[r - 1];
        let (lo, hi) = (&stages[r - 1], &stages[r]);
        let maps = (0..2)
            .map(|v| {
                let iota_n = Matrix::block_diag(&vec![iota.at(v); n]);
                Matrix::block_diag(&[&Matrix::identity(p.dim(v)), &iota_n])
            })
            .collect();
        monos.push(RepMap::new(lo.middle().clone(), hi.middle().clone(), maps)?);
    }
    Ok(CoextensionTower {
        p: p.clone(),
        point: point.clone(),
        n,
        stages,
        monos,
    })
}

impl CoextensionTower {
    pub fn verify(&self) -> Result<CheckList> {
        let mut out = CheckList::new();
        let q = self.p.quiver();
        let d = self.point.degree();
        for u in &self.stages {
            let e = u.middle();
            let r = u.r;
            out.record(format!("E{r} universal"), u.is_universal());
            out.record(format!("E{r} exact"), u.sequence.is_exact());
            let expected: Vec<usize> = self.p.dims().iter().map(|&x| x + r * self.n * d).collect();
            out.record(format!("E{r} dimension"), e.dims() == expected.as_slice());
            out.record(format!("E{r} defect -1"), q.defect(&e.dim_vector())? == -1);
            out.record(format!("E{r} indecomposable"), decompose(e)?.is_indecomposable());
            out.record(format!("E{r} preprojective"), tau_nilpotence(e, r + 2)?.is_some());
        }
        for (k, m) in self.monos.iter().enumerate() {
            let (lo, hi) = (&self.stages[k], &self.stages[k + 1]);
            out.record(format!("E{} -> E{} mono", k + 1, k + 2), m.is_mono());
            let square = m.compose(&lo.sequence.f)? == hi.sequence.f;
            out.record(format!("E{} -> E{} fixes P", k + 1, k + 2), square);
        }
        Ok(out)
    }
}

/// Compatible ℚ-injective maps `E_r → Q`, one per stage.
#[derive(Clone, Debug)]
pub struct EmbeddingProbe {
    pub maps: Vec<RepMap<RationalFunction>>,
    /// `dim_{ℚ(t)} Hom(E_r ⊗ ℚ(t), Q)` per stage.
    pub hom_dims: Vec<usize>,
    pub injective: Vec<bool>,
    pub commuting: Vec<bool>,
}

impl EmbeddingProbe {
    pub fn passed(&self) -> bool {
        self.injective.iter().all(|&b| b) && self.commuting.iter().all(|&b| b) && !self.maps.is_empty()
    }
}

/// A `ℚ(t)`-linear map out of `E ⊗ ℚ(t)` restricts to a ℚ-injective map on
/// `E` exactly when the entries of each vertex row are ℚ-independent.
fn injective_on_rational_points(f: &RepMap<RationalFunction>) -> Result<bool> {
    for m in f.maps() {
        if m.rows() != 1 {
            return Err(Error::Precondition("target must be one-dimensional at each vertex".into()));
        }
        if !rationally_independent(m.row(0))? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn tower_embedding_probe(tower: &CoextensionTower) -> Result<EmbeddingProbe> {
    let g = generic_module();
    let stages: Vec<QtRep> = tower.stages.iter().map(|u| base_change(u.middle())).collect();
    let hom_dims = stages.iter().map(|e| hom_dim(e, &g)).collect::<Result<Vec<_>>>()?;
    let last = stages.last().ok_or_else(|| Error::Precondition("empty tower".into()))?;
    let top = hom_basis(last, &g)?
        .into_iter()
        .next()
        .ok_or_else(|| Error::Precondition("no map to the generic module".into()))?;
    let mut maps = vec![top];
    for m in tower.monos.iter().rev() {
        let next = maps[0].compose(&base_change_map(m))?;
        maps.insert(0, next);
    }
    let injective = maps.iter().map(injective_on_rational_points).collect::<Result<Vec<_>>>()?;
    let commuting = tower
        .monos
        .iter()
        .enumerate()
        .map(|(k, m)| Ok(maps[k + 1].compose(&base_change_map(m))? == maps[k]))
        .collect::<Result<Vec<_>>>()?;
    Ok(EmbeddingProbe {
        maps,
        hom_dims,
        injective,
        commuting,
    })
}

#[derive(Clone, Debug)]
pub struct UniquenessReport {
    /// Sample points where `Hom` or `Ext` from `R(p; 1) ⊗ ℚ(t)` is nonzero.
    pub sample_failures: Vec<TubePoint>,
    pub end_dim: usize,
    pub witness: Option<RepMap<RationalFunction>>,
    /// Human-readable reason when no witness exists.
    pub certificate: Option<String>,
}

/// Searches for a ℚ(t)-linear isomorphism `X → Q`.
pub fn uniqueness_probe(x: &QtRep, sample: &[TubePoint]) -> Result<UniquenessReport> {
    if !x.quiver().is_kronecker() || x.dims() != [1, 1] {
        return Err(Error::Precondition("uniqueness_probe needs dimension vector (1,1)".into()));
    }
    let g = generic_module();
    let mut sample_failures = Vec::new();
    for p in sample {
        let r = base_change(&kron_regular(p, 1)?);
        if hom_dim(&r, x)? != 0 || ext_dim(&r, x)? != 0 {
            sample_failures.push(p.clone());
        }
    }
    let end_dim = hom_dim(x, x)?;
    let witness = if end_dim == 1 { iso_indecomposable(x, &g)? } else { None };
    let certificate = if witness.is_some() {
        None
    } else if end_dim != 1 {
        Some(format!("End(X) has dimension {end_dim}, X is not a brick"))
    } else {
        let h = hom_dim(x, &g)?;
        Some(format!(
            "Hom(X, Q) has dimension {h} over Q(t) and no basis map is invertible; \
             X and Q differ by a field automorphism of Q(t) at most"
        ))
    };
    Ok(UniquenessReport {
        sample_failures,
        end_dim,
        witness,
        certificate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::Field;
    use crate::quiver::Quiver;
    use crate::rep::{ext_cocycle_basis, projective};
    use crate::tame::kron_preprojective;

    fn rf(num: &[i64]) -> RationalFunction {
        RationalFunction::from_polynomial(Polynomial::from_i64s(num))
    }

    #[test]
    fn generic_module_is_a_brick() {
        let g = generic_module();
        assert_eq!(hom_dim(&g, &g).unwrap(), 1);
        assert_eq!(g.quiver().defect(&g.dim_vector()).unwrap(), 0);
    }

    #[test]
    fn self_extensions_split_over_the_path_algebra() {
        let g = generic_module();
        // ℚ(t)-linearly there is one non-split class
        assert_eq!(ext_dim_cocycle(&g, &g).unwrap(), 1);
        let samples = operator_samples();
        let mut cocycles = ext_cocycle_basis(&g, &g).unwrap();
        cocycles.push(ExtCocycle {
            mats: vec![
                Matrix::from_rows(vec![vec![rf(&[1, 2])]], 1).unwrap(),
                Matrix::from_rows(vec![vec![RationalFunction::new(Polynomial::one(), Polynomial::from_i64s(&[-1, 1])).unwrap()]], 1).unwrap(),
            ],
        });
        for z in &cocycles {
            assert!(split_self_extension(z).unwrap().verify_on(&samples));
        }
        let wrong = SelfExtensionSplitting {
            cocycle: cocycles[0].clone(),
            h: std::array::from_fn(|_| FirstOrderOperator { c: RationalFunction::zero(), m: RationalFunction::zero() }),
        };
        assert!(!wrong.verify_on(&samples));
    }

    #[test]
    fn derivative_rules() {
        let f = RationalFunction::new(Polynomial::one(), Polynomial::x()).unwrap();
        let expected = RationalFunction::new(Polynomial::from_i64s(&[-1]), Polynomial::from_i64s(&[0, 0, 1])).unwrap();
        assert_eq!(derivative(&f), expected);
        assert_eq!(derivative(&RationalFunction::t()), RationalFunction::one());
    }

    #[test]
    fn base_change_preserves_hom() {
        let r0 = kron_regular(&TubePoint::linear(0), 1).unwrap();
        let bc = base_change(&r0);
        assert_eq!(bc.arrow(1).get(0, 0), &RationalFunction::zero());
        let p = kron_preprojective(2);
        assert_eq!(hom_dim(&p, &r0).unwrap(), hom_dim(&base_change(&p), &bc).unwrap());
    }

    #[test]
    fn rperp_examples() {
        for p in [TubePoint::linear(5), TubePoint::Infinity, "x^2+1".parse().unwrap()] {
            for r in 1..3 {
                let report = rperp_check(&kron_regular(&p, r).unwrap()).unwrap();
                assert!(report.is_orthogonal() && report.regular, "{p} {r}");
            }
        }
        let report = rperp_check(&kron_preprojective(1)).unwrap();
        assert!(!report.regular);
        assert_eq!(default_sample().len(), 12);
    }

    #[test]
    fn coextension_at_x() {
        let p = projective::<Rational>(&Quiver::kronecker(), 1);
        let s = kron_regular(&TubePoint::linear(0), 1).unwrap();
        let u = universal_coextension(&p, &s, 1).unwrap();
        assert_eq!(u.n, 1);
        assert_eq!(u.middle().dims(), &[1, 2]);
        assert!(u.is_universal());
        let u3 = universal_coextension(&p, &s, 3).unwrap();
        assert_eq!(u3.middle().dims(), &[3, 4]);
        assert_eq!((u3.hom_dim, u3.ext_dim, u3.connecting_rank), (3, 3, 3));
        assert!(universal_coextension(&kron_preprojective(2), &s, 1).is_err());
    }

    #[test]
    fn tower_and_embedding() {
        let p = projective::<Rational>(&Quiver::kronecker(), 1);
        let tower = coextension_tower(&p, &TubePoint::linear(0), 4).unwrap();
        let dims: Vec<_> = tower.stages.iter().map(|u| u.middle().dims().to_vec()).collect();
        assert_eq!(dims, vec![vec![1, 2], vec![2, 3], vec![3, 4], vec![4, 5]]);
        let checks = tower.verify().unwrap();
        assert!(checks.all_passed(), "{:?}", checks.failures().collect::<Vec<_>>());
        let probe = tower_embedding_probe(&tower).unwrap();
        assert!(probe.passed());
        assert_eq!(probe.hom_dims[0], 1);
    }

    #[test]
    fn uniqueness_examples() {
        let shifted = Rep::kronecker(Matrix::identity(1), Matrix::from_rows(vec![vec![rf(&[1, 1])]], 1).unwrap()).unwrap();
        let report = uniqueness_probe(&shifted, &default_sample()).unwrap();
        assert!(report.sample_failures.is_empty());
        assert!(report.witness.is_none() && report.certificate.is_some());

        let two = RationalFunction::from_i64(2);
        let scaled = Rep::kronecker(
            Matrix::from_rows(vec![vec![two.clone()]], 1).unwrap(),
            Matrix::from_rows(vec![vec![two.times(&RationalFunction::t())]], 1).unwrap(),
        )
        .unwrap();
        let report = uniqueness_probe(&scaled, &default_sample()).unwrap();
        assert!(report.witness.unwrap().is_iso());

        let report = uniqueness_probe(&generic_module(), &[]).unwrap();
        assert_eq!(report.witness.unwrap(), RepMap::identity(&generic_module()));
    }

    #[test]
    fn independence_over_q() {
        assert!(rationally_independent(&[rf(&[1]), rf(&[0, 1])]).unwrap());
        assert!(!rationally_independent(&[rf(&[1, 1]), rf(&[2, 2])]).unwrap());
        let inv = RationalFunction::new(Polynomial::one(), Polynomial::x()).unwrap();
        assert!(rationally_independent(&[inv, rf(&[1])]).unwrap());
    }
}
