use crate::check::CheckList;
use crate::decomp::iso_test;
use crate::error::{Error, Result};
use crate::exactnum::{Matrix, Polynomial, Rational};
use crate::quiver::Quiver;
use crate::rep::{dualize, dualize_map, Rep, RepMap};

use super::catalog::{kron_regular, local_map, local_uniformizer, TubePoint};

/// Truncation `S₁ ↣ S₂ ↣ … ↣ S_N` of the Prüfer module at a point, with the
/// shift epimorphisms `φ_n: S_{n+1} → S_n`.
///
/// `monos[k]` is `ι_{k+1}: S_{k+1} → S_{k+2}` and `epis[k]` is `φ_{k+1}`.
#[derive(Clone, Debug)]
pub struct PrueferTower {
    pub point: TubePoint,
    pub stages: Vec<Rep<Rational>>,
    pub monos: Vec<RepMap<Rational>>,
    pub epis: Vec<RepMap<Rational>>,
}

/// Truncation of the adic module: the same stages read through the epis
/// `S_{n+1} → S_n` of the inverse system.
#[derive(Clone, Debug)]
pub struct AdicTower {
    pub point: TubePoint,
    pub stages: Vec<Rep<Rational>>,
    pub epis: Vec<RepMap<Rational>>,
    pub monos: Vec<RepMap<Rational>>,
}

/// Regular module of length `n` at `p` over any quiver with two vertices and
/// two parallel arrows, in the same bases as `kron_regular`.
fn regular_over(q: &Quiver, p: &TubePoint, n: usize) -> Result<Rep<Rational>> {
    let k = kron_regular(p, n)?;
    Rep::new(q.clone(), k.dims().to_vec(), k.arrows().to_vec())
}

fn build(q: &Quiver, p: &TubePoint, n_max: usize) -> Result<PrueferTower> {
    if n_max == 0 {
        return Err(Error::Precondition("towers need at least one stage".into()));
    }
    if q.vertex_count() != 2 || q.arrow_count() != 2 || q.arrows()[0] != q.arrows()[1] {
        return Err(Error::UnsupportedQuiver("towers need two parallel arrows".into()));
    }
    let stages = (1..=n_max)
        .map(|n| regular_over(q, p, n))
        .collect::<Result<Vec<_>>>()?;
    let mut monos = Vec::new();
    let mut epis = Vec::new();
    for n in 1..n_max {
        let (s, t) = (&stages[n - 1], &stages[n]);
        let up = local_map(p, n, n + 1, &local_uniformizer(p));
        let down = local_map(p, n + 1, n, &Polynomial::one());
        monos.push(RepMap::new(s.clone(), t.clone(), vec![up.clone(), up])?);
        epis.push(RepMap::new(t.clone(), s.clone(), vec![down.clone(), down])?);
    }
    Ok(PrueferTower {
        point: p.clone(),
        stages,
        monos,
        epis,
    })
}

pub fn prufer_tower(p: &TubePoint, n_max: usize) -> Result<PrueferTower> {
    build(&Quiver::kronecker(), p, n_max)
}

pub fn adic_tower(p: &TubePoint, n_max: usize) -> Result<AdicTower> {
    let t = prufer_tower(p, n_max)?;
    Ok(AdicTower {
        point: t.point,
        stages: t.stages,
        epis: t.epis,
        monos: t.monos,
    })
}

fn same_subspace(a: &Matrix<Rational>, b: &Matrix<Rational>) -> bool {
    let ra = a.rank();
    ra == b.rank() && a.hstack(b).rank() == ra
}

/// Composite `S_{hi} → S_{lo}` of the epis.
fn epi_composite(epis: &[RepMap<Rational>], hi: usize, lo: usize) -> Result<RepMap<Rational>> {
    let mut acc = epis[hi - 2].clone();
    for n in (lo..hi - 1).rev() {
        acc = epis[n - 1].compose(&acc)?;
    }
    Ok(acc)
}

/// Composite `S_{lo} → S_{hi}` of the monos.
fn mono_composite(monos: &[RepMap<Rational>], lo: usize, hi: usize) -> Result<RepMap<Rational>> {
    let mut acc = monos[lo - 1].clone();
    for n in lo + 1..hi {
        acc = monos[n - 1].compose(&acc)?;
    }
    Ok(acc)
}

fn check_range(lo: usize, hi: usize, len: usize) -> Result<()> {
    if lo == 0 || lo >= hi || hi > len {
        return Err(Error::Precondition(format!("no composite between stages {lo} and {hi} of {len}")));
    }
    Ok(())
}

impl PrueferTower {
    pub fn len(&self) -> usize {
        self.stages.len()
    }

    pub fn is_empty(&self) -> bool {
        self.stages.is_empty()
    }

    /// `S_lo → S_hi` (1-based, `lo < hi`).
    pub fn mono_between(&self, lo: usize, hi: usize) -> Result<RepMap<Rational>> {
        check_range(lo, hi, self.len())?;
        mono_composite(&self.monos, lo, hi)
    }

    /// `S_hi → S_lo` (1-based, `lo < hi`).
    pub fn epi_between(&self, hi: usize, lo: usize) -> Result<RepMap<Rational>> {
        check_range(lo, hi, self.len())?;
        epi_composite(&self.epis, hi, lo)
    }

    /// All structural invariants of the tower.
    pub fn verify(&self) -> Result<CheckList> {
        let mut out = CheckList::new();
        let d = self.point.degree();
        for (i, s) in self.stages.iter().enumerate() {
            let n = i + 1;
            out.record(format!("S{n} has dimension ({0},{0})", n * d), s.dims() == [n * d, n * d]);
        }
        for (k, (iota, phi)) in self.monos.iter().zip(&self.epis).enumerate() {
            let n = k + 1;
            out.record(format!("iota{n} mono"), iota.is_mono());
            out.record(format!("phi{n} epi"), phi.is_epi());
            if k > 0 {
                let lhs = phi.compose(iota)?;
                let rhs = self.monos[k - 1].compose(&self.epis[k - 1])?;
                out.record(format!("phi{n} iota{n} = iota{} phi{}", n - 1, n - 1), lhs == rhs);
            }
        }
        // kernel of S_{i+1} → S_1 is S_i, sitting as the image of iota_i
        for i in 1..self.stages.len() {
            let composite = epi_composite(&self.epis, i + 1, 1)?;
            let (kernel, incl) = composite.kernel();
            let iso = iso_test(&kernel, &self.stages[i - 1])?.is_some();
            out.record(format!("ker(S{} -> S1) iso S{i}", i + 1), iso);
            let image = &self.monos[i - 1];
            let same = (0..2).all(|v| same_subspace(incl.at(v), image.at(v)));
            out.record(format!("ker(S{} -> S1) = im iota{i}", i + 1), same);
        }
        Ok(out)
    }
}

impl AdicTower {
    /// The opposite-quiver Prüfer tower `D S₁ ↣ D S₂ ↣ …` with monos `Dφ_n`
    /// and epis `Dι_n`.
    pub fn dual_tower(&self) -> PrueferTower {
        PrueferTower {
            point: self.point.clone(),
            stages: self.stages.iter().map(dualize).collect(),
            monos: self.epis.iter().map(dualize_map).collect(),
            epis: self.monos.iter().map(dualize_map).collect(),
        }
    }

    pub fn verify(&self) -> Result<CheckList> {
        let mut out = CheckList::new();
        for (k, phi) in self.epis.iter().enumerate() {
            out.record(format!("phi{} epi", k + 1), phi.is_epi());
        }
        let dual = self.dual_tower();
        out.extend("dual tower: ", dual.verify()?);
        let op = Quiver::kronecker().opposite();
        let reference = build(&op, &self.point, self.stages.len())?;
        for (n, (a, b)) in dual.stages.iter().zip(&reference.stages).enumerate() {
            out.record(
                format!("D S{} iso opposite-quiver S{}", n + 1, n + 1),
                iso_test(a, b)?.is_some(),
            );
        }
        for (n, (s, ds)) in self.stages.iter().zip(&dual.stages).enumerate() {
            let back = dualize(ds);
            out.record(format!("stage {} is the transpose of its dual", n + 1), back == *s);
        }
        for (k, (phi, dphi)) in self.epis.iter().zip(&dual.monos).enumerate() {
            let back = dualize_map(dphi);
            out.record(format!("phi{} is the transpose of a dual mono", k + 1), back == *phi);
        }
        Ok(out)
    }
}
