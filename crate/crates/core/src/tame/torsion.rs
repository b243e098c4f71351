use crate::decomp::{decompose, Decomposition};
use crate::error::Result;
use crate::exactnum::Rational;
use crate::rep::{map_from_sum, map_into_sum, Rep, RepMap, ShortExact};

use super::tau::tau_minus_nilpotence;

/// A direct summand of `X` assembled from copies of indecomposable summands,
/// with its split inclusion and retraction.
#[derive(Clone, Debug)]
pub struct SplitPart {
    pub rep: Rep<Rational>,
    pub inclusion: RepMap<Rational>,
    pub retraction: RepMap<Rational>,
}

impl SplitPart {
    pub fn is_split(&self) -> bool {
        self.retraction
            .compose(&self.inclusion)
            .is_ok_and(|c| c == RepMap::identity(&self.rep))
    }
}

/// Sum of the summand copies selected by `keep`, with inclusion and retraction.
pub(crate) fn collect_copies(
    dec: &Decomposition<Rational>,
    keep: impl Fn(&Rep<Rational>) -> Result<bool>,
) -> Result<SplitPart> {
    let x = &dec.source;
    let mut parts = Vec::new();
    let mut incls = Vec::new();
    let mut projs = Vec::new();
    for s in &dec.summands {
        if !keep(&s.rep)? {
            continue;
        }
        for (i, p) in s.inclusions.iter().zip(&s.projections) {
            parts.push(s.rep.clone());
            incls.push(i.clone());
            projs.push(p.clone());
        }
    }
    let sum = Rep::direct_sum(x.quiver(), &parts)?;
    let inclusion = map_from_sum(&sum, &incls, x)?;
    let retraction = map_into_sum(x, &projs, &sum)?;
    Ok(SplitPart {
        rep: sum.sum,
        inclusion,
        retraction,
    })
}

/// `0 → tX → X → fX → 0` for the split torsion pair whose torsion class is
/// the modules without preprojective summands.
#[derive(Clone, Debug)]
pub struct TorsionSplit {
    pub torsion: SplitPart,
    pub torsionfree: SplitPart,
    pub sequence: ShortExact<Rational>,
}

impl TorsionSplit {
    /// Exactness, the retraction identity, and the defect signs of both parts.
    pub fn verify(&self) -> bool {
        let q = self.torsion.rep.quiver();
        let nonneg = q.defect(&self.torsion.rep.dim_vector()).map_or(false, |d| d >= 0);
        self.sequence.is_exact() && self.torsion.is_split() && self.torsionfree.is_split() && nonneg
    }
}

fn defect_of(x: &Rep<Rational>) -> Result<i64> {
    x.quiver().defect(&x.dim_vector())
}

pub fn torsion_split(x: &Rep<Rational>) -> Result<TorsionSplit> {
    let dec = decompose(x)?;
    let torsion = collect_copies(&dec, |s| Ok(defect_of(s)? >= 0))?;
    let torsionfree = collect_copies(&dec, |s| Ok(defect_of(s)? < 0))?;
    // the quotient map X → fX is the retraction onto the complement
    let sequence = ShortExact {
        f: torsion.inclusion.clone(),
        g: torsionfree.retraction.clone(),
    };
    Ok(TorsionSplit {
        torsion,
        torsionfree,
        sequence,
    })
}

/// The sum of the preinjective summands of `X`.
pub fn preinjective_part(x: &Rep<Rational>) -> Result<SplitPart> {
    collect_copies(&decompose(x)?, |s| Ok(defect_of(s)? > 0))
}

/// `i₀(X) ⊆ i₁(X) ⊆ … ⊆ i_N(X)`, `i_n(X)` the sum of the summands killed by `τ⁻ⁿ`.
pub fn preinjective_filtration(x: &Rep<Rational>, n_max: usize) -> Result<Vec<SplitPart>> {
    let dec = decompose(x)?;
    let mut killed_at = Vec::with_capacity(dec.summands.len());
    for s in &dec.summands {
        killed_at.push((s.rep.clone(), tau_minus_nilpotence(&s.rep, n_max)?));
    }
    (0..=n_max)
        .map(|n| {
            collect_copies(&dec, |r| {
                let k = killed_at.iter().find(|(s, _)| s == r).and_then(|(_, k)| *k);
                Ok(k.is_some_and(|k| k <= n))
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomp::iso_test;
    use crate::exactnum::Matrix;
    use crate::quiver::Quiver;
    use crate::tame::catalog::{kron_preinjective, kron_preprojective, kron_regular, TubePoint};

    fn sum(parts: &[Rep<Rational>]) -> Rep<Rational> {
        Rep::direct_sum(&Quiver::kronecker(), parts).unwrap().sum
    }

    #[test]
    fn shuffled_regular_plus_projective() {
        let r0 = kron_regular(&TubePoint::linear(0), 1).unwrap();
        let x = sum(&[r0, kron_preprojective(1)]);
        let g0 = Matrix::from_i64_rows(&[&[1, 1], &[0, 1]]);
        let g1 = Matrix::from_i64_rows(&[&[0, 1, 0], &[1, 0, 1], &[1, 1, 2]]);
        let (y, _) = x.conjugate(&[g0, g1]).unwrap();
        let split = torsion_split(&y).unwrap();
        assert_eq!(split.torsion.rep.dims(), &[1, 1]);
        assert_eq!(split.torsionfree.rep.dims(), &[1, 2]);
        assert!(split.verify());
    }

    #[test]
    fn degenerate_inputs() {
        let p = kron_preprojective(3);
        let split = torsion_split(&p).unwrap();
        assert!(split.torsion.rep.is_zero());
        assert!(split.verify());
        let zero = Rep::<Rational>::zero(&Quiver::kronecker());
        let split = torsion_split(&zero).unwrap();
        assert!(split.torsion.rep.is_zero() && split.torsionfree.rep.is_zero());
    }

    #[test]
    fn filtration_examples() {
        let r0 = kron_regular(&TubePoint::linear(0), 1).unwrap();
        let x = sum(&[kron_preinjective(0), r0.clone()]);
        let chain = preinjective_filtration(&x, 3).unwrap();
        assert!(chain[0].rep.is_zero());
        for step in &chain[1..] {
            assert!(iso_test(&step.rep, &kron_preinjective(0)).unwrap().is_some());
            assert!(step.is_split());
        }
        assert!(preinjective_filtration(&r0, 3).unwrap().iter().all(|s| s.rep.is_zero()));

        let y = sum(&[kron_preinjective(0), kron_preinjective(2), kron_preinjective(1)]);
        let chain = preinjective_filtration(&y, 3).unwrap();
        let dims: Vec<usize> = chain.iter().map(|s| s.rep.total_dim()).collect();
        assert_eq!(dims, vec![0, 4, 9, 9]);
        let part = preinjective_part(&y).unwrap();
        assert!(iso_test(&part.rep, &chain[3].rep).unwrap().is_some());
    }
}
