//! Symbolic modules built from catalog labels, and Hom probes between
//! labels through finite truncations.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::Result;
use crate::exactnum::Rational;
use crate::generic::{base_change, generic_module};
use crate::rep::{dualize, hom_basis, hom_dim, tensor_dim, Rep, RepMap};

use super::catalog::{CatalogLabel, TubePoint};
use super::tower::{prufer_tower, PrueferTower};

/// Outcome of a Hom probe between two labels.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Probe {
    Zero,
    Nonzero,
    Unprobed,
}

impl Probe {
    fn from_bool(nonzero: bool) -> Self {
        if nonzero {
            Probe::Nonzero
        } else {
            Probe::Zero
        }
    }

    /// Aggregate over a block pair: any nonzero wins, then any unprobed.
    pub fn join(self, other: Probe) -> Probe {
        use Probe::*;
        match (self, other) {
            (Nonzero, _) | (_, Nonzero) => Nonzero,
            (Unprobed, _) | (_, Unprobed) => Unprobed,
            _ => Zero,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Multiplicity {
    Finite(usize),
    Infinite,
}

impl Multiplicity {
    pub fn add(self, other: Multiplicity) -> Multiplicity {
        match (self, other) {
            (Multiplicity::Finite(a), Multiplicity::Finite(b)) => Multiplicity::Finite(a + b),
            _ => Multiplicity::Infinite,
        }
    }
}

impl fmt::Display for Multiplicity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Multiplicity::Finite(n) => write!(f, "{n}"),
            Multiplicity::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Multiplicity {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Multiplicity::Finite(n) => s.serialize_u64(*n as u64),
            Multiplicity::Infinite => s.serialize_str("inf"),
        }
    }
}

/// A direct sum of catalog labels with multiplicities.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SymbolicModule {
    pub parts: Vec<(CatalogLabel, Multiplicity)>,
}

impl SymbolicModule {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, label: CatalogLabel, m: Multiplicity) -> Self {
        self.parts.push((label, m));
        self
    }

    pub fn once(labels: impl IntoIterator<Item = CatalogLabel>) -> Self {
        SymbolicModule {
            parts: labels.into_iter().map(|l| (l, Multiplicity::Finite(1))).collect(),
        }
    }
}

/// The four parts `E ⊕ Q^(α) ⊕ R ⊕ I`, in left-to-right order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Block {
    Reduced,
    Generic,
    Pruefer,
    Preinjective,
}

impl Block {
    pub const ALL: [Block; 4] = [Block::Reduced, Block::Generic, Block::Pruefer, Block::Preinjective];

    pub fn of(label: &CatalogLabel) -> Block {
        match label {
            CatalogLabel::Preprojective(_) | CatalogLabel::Regular(..) | CatalogLabel::Adic(_) => Block::Reduced,
            CatalogLabel::Generic => Block::Generic,
            CatalogLabel::Pruefer(_) => Block::Pruefer,
            CatalogLabel::Preinjective(_) => Block::Preinjective,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub source: CatalogLabel,
    pub target: CatalogLabel,
}

#[derive(Clone, Debug, Serialize)]
pub struct SymbolicReport {
    pub reduced: Vec<(CatalogLabel, Multiplicity)>,
    pub generic_power: Multiplicity,
    pub pruefer: Vec<(CatalogLabel, Multiplicity)>,
    pub preinjective: Vec<(CatalogLabel, Multiplicity)>,
    /// `hom_direction[i][j]` probes maps from block `j` into block `i`.
    pub hom_direction: [[Probe; 4]; 4],
    pub violations: Vec<Violation>,
}

impl SymbolicReport {
    /// No probed nonzero map from a block into an earlier one.
    pub fn is_lower_triangular(&self) -> bool {
        is_lower_triangular(&self.hom_direction)
    }
}

pub fn is_lower_triangular<const N: usize>(m: &[[Probe; N]; N]) -> bool {
    (0..N).all(|i| (i + 1..N).all(|j| m[i][j] != Probe::Nonzero))
}

/// Sorts labels into the four blocks and probes the direction of maps.
pub fn symbolic_decompose(module: &SymbolicModule, depth: usize) -> Result<SymbolicReport> {
    let mut merged: BTreeMap<CatalogLabel, Multiplicity> = BTreeMap::new();
    for (label, m) in &module.parts {
        if *m == Multiplicity::Finite(0) {
            continue;
        }
        merged
            .entry(label.clone())
            .and_modify(|old| *old = old.add(*m))
            .or_insert(*m);
    }
    let pick = |b: Block| -> Vec<(CatalogLabel, Multiplicity)> {
        merged
            .iter()
            .filter(|(l, _)| Block::of(l) == b)
            .map(|(l, m)| (l.clone(), *m))
            .collect()
    };
    let labels: Vec<CatalogLabel> = merged.keys().cloned().collect();
    let mut hom_direction = [[Probe::Zero; 4]; 4];
    let mut violations = Vec::new();
    for source in &labels {
        for target in &labels {
            let p = probe_hom(source, target, depth)?;
            let (j, i) = (Block::of(source) as usize, Block::of(target) as usize);
            hom_direction[i][j] = hom_direction[i][j].join(p);
            if j > i && p == Probe::Nonzero {
                violations.push(Violation {
                    source: source.clone(),
                    target: target.clone(),
                });
            }
        }
    }
    Ok(SymbolicReport {
        reduced: pick(Block::Reduced),
        generic_power: merged.get(&CatalogLabel::Generic).copied().unwrap_or(Multiplicity::Finite(0)),
        pruefer: pick(Block::Pruefer),
        preinjective: pick(Block::Preinjective),
        hom_direction,
        violations,
    })
}

/// Length of a finite-dimensional module measured in stages of the tube at `p`.
fn stages_for(y: &Rep<Rational>, p: &TubePoint) -> usize {
    y.dims().iter().copied().max().unwrap_or(0) / p.degree() + 1
}

fn any_nonzero(maps: impl IntoIterator<Item = Result<RepMap<Rational>>>) -> Result<bool> {
    for m in maps {
        if !m?.is_zero() {
            return Ok(true);
        }
    }
    Ok(false)
}

fn tower(p: &TubePoint, n: usize) -> Result<PrueferTower> {
    prufer_tower(p, n.max(2))
}

/// Probes `Hom(source, target) ≠ 0`.
///
/// Finite-length labels are built directly. A Prüfer module is the union of
/// the stages `S_n`, an adic module their inverse limit; a map out of a union
/// (into a limit) is detected by restricting to `S₁` (projecting to `S₁`)
/// from a stage deep enough for the other side. Maps involving the generic
/// module go through base change to ℚ(t) and, for maps out of it, through
/// the tensor formula `Hom(Q, Y) = D(DY ⊗ Q)`. `Q → Pruefer(p)` and
/// `Adic(p) → Q` are not probed.
pub fn probe_hom(source: &CatalogLabel, target: &CatalogLabel, depth: usize) -> Result<Probe> {
    use CatalogLabel::*;
    let depth = depth.max(1);
    let nonzero = match (source, target) {
        (x, y) if x.is_finite_length() && y.is_finite_length() => hom_dim(&x.build()?, &y.build()?)? > 0,
        (x, Pruefer(p)) if x.is_finite_length() => {
            let y = x.build()?;
            let t = tower(p, stages_for(&y, p))?;
            hom_dim(&y, t.stages.last().expect("stages"))? > 0
        }
        (Adic(p), y) if y.is_finite_length() => {
            let y = y.build()?;
            let t = tower(p, stages_for(&y, p))?;
            hom_dim(t.stages.last().expect("stages"), &y)? > 0
        }
        (Pruefer(p), y) if y.is_finite_length() => {
            let y = y.build()?;
            let t = tower(p, stages_for(&y, p) + 1)?;
            let up = t.mono_between(1, t.len())?;
            any_nonzero(hom_basis(t.stages.last().expect("stages"), &y)?.iter().map(|f| f.compose(&up)))?
        }
        (x, Adic(p)) if x.is_finite_length() => {
            let y = x.build()?;
            let t = tower(p, stages_for(&y, p) + 1)?;
            let down = t.epi_between(t.len(), 1)?;
            any_nonzero(hom_basis(&y, t.stages.last().expect("stages"))?.iter().map(|f| down.compose(f)))?
        }
        (x, Generic) if x.is_finite_length() => hom_dim(&base_change(&x.build()?), &generic_module())? > 0,
        (Generic, y) if y.is_finite_length() => {
            tensor_dim(&base_change(&dualize(&y.build()?)), &generic_module())? > 0
        }
        (Generic, Generic) => hom_dim(&generic_module(), &generic_module())? > 0,
        (Pruefer(p), Generic) => {
            let t = tower(p, depth)?;
            hom_dim(&base_change(t.stages.last().expect("stages")), &generic_module())? > 0
        }
        (Generic, Adic(p)) => {
            let t = tower(p, depth)?;
            tensor_dim(&base_change(&dualize(t.stages.last().expect("stages"))), &generic_module())? > 0
        }
        (Generic, Pruefer(_)) | (Adic(_), Generic) => return Ok(Probe::Unprobed),
        (Pruefer(p), Pruefer(q)) => {
            let (s, t) = (tower(p, depth + 1)?, tower(q, depth + 1)?);
            let up = s.mono_between(1, s.len())?;
            let basis = hom_basis(s.stages.last().expect("stages"), t.stages.last().expect("stages"))?;
            any_nonzero(basis.iter().map(|f| f.compose(&up)))?
        }
        (Adic(p), Adic(q)) => {
            let (s, t) = (tower(p, depth + 1)?, tower(q, depth + 1)?);
            let down = t.epi_between(t.len(), 1)?;
            let basis = hom_basis(s.stages.last().expect("stages"), t.stages.last().expect("stages"))?;
            any_nonzero(basis.iter().map(|f| down.compose(f)))?
        }
        (Adic(p), Pruefer(q)) => {
            let (s, t) = (tower(p, depth)?, tower(q, depth)?);
            hom_dim(s.stages.last().expect("stages"), t.stages.last().expect("stages"))? > 0
        }
        (Pruefer(p), Adic(q)) => {
            let (s, t) = (tower(p, depth + 1)?, tower(q, depth + 1)?);
            let up = s.mono_between(1, s.len())?;
            let down = t.epi_between(t.len(), 1)?;
            let basis = hom_basis(s.stages.last().expect("stages"), t.stages.last().expect("stages"))?;
            any_nonzero(basis.iter().map(|f| down.compose(f).and_then(|g| g.compose(&up))))?
        }
        _ => unreachable!("all label pairs are covered"),
    };
    Ok(Probe::from_bool(nonzero))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn label(s: &str) -> CatalogLabel {
        s.parse().unwrap()
    }

    #[test]
    fn sorting_into_blocks() {
        let m = SymbolicModule::once([label("P(2)"), label("Pruefer(x)"), label("Q")]);
        let r = symbolic_decompose(&m, 2).unwrap();
        assert_eq!(r.reduced, vec![(label("P(2)"), Multiplicity::Finite(1))]);
        assert_eq!(r.generic_power, Multiplicity::Finite(1));
        assert_eq!(r.pruefer, vec![(label("Pruefer(x)"), Multiplicity::Finite(1))]);
        assert!(r.preinjective.is_empty());
        assert!(r.violations.is_empty());
        assert!(r.is_lower_triangular());
    }

    #[test]
    fn multiplicities_merge() {
        let m = SymbolicModule::new()
            .with(label("Q"), Multiplicity::Finite(2))
            .with(label("Q"), Multiplicity::Infinite)
            .with(label("I(0)"), Multiplicity::Finite(0));
        let r = symbolic_decompose(&m, 2).unwrap();
        assert_eq!(r.generic_power, Multiplicity::Infinite);
        assert!(r.preinjective.is_empty());
    }

    #[test]
    fn torsion_to_torsionfree_vanishes() {
        let s3 = &prufer_tower(&TubePoint::linear(0), 3).unwrap().stages[2];
        assert_eq!(hom_dim(s3, &CatalogLabel::Preprojective(5).build().unwrap()).unwrap(), 0);
        assert_eq!(hom_dim(&CatalogLabel::Preinjective(1).build().unwrap(), s3).unwrap(), 0);
    }

    #[test]
    fn probes_follow_the_trisection() {
        let cases = [
            ("P(1)", "Pruefer(x)", Probe::Nonzero),
            ("Pruefer(x)", "P(1)", Probe::Zero),
            ("Pruefer(x)", "R(x; 2)", Probe::Zero),
            ("Pruefer(x)", "I(1)", Probe::Nonzero),
            ("R(x; 2)", "Pruefer(x)", Probe::Nonzero),
            ("R(x; 2)", "Pruefer(x-1)", Probe::Zero),
            ("Adic(x)", "R(x; 1)", Probe::Nonzero),
            ("R(x; 1)", "Adic(x)", Probe::Zero),
            ("P(0)", "Adic(inf)", Probe::Nonzero),
            ("I(0)", "Adic(x)", Probe::Zero),
            ("Adic(x)", "P(3)", Probe::Zero),
            ("P(2)", "Q", Probe::Nonzero),
            ("R(x^2+1; 1)", "Q", Probe::Zero),
            ("Q", "I(2)", Probe::Nonzero),
            ("Q", "R(x; 1)", Probe::Zero),
            ("Q", "P(0)", Probe::Zero),
            ("Pruefer(x)", "Q", Probe::Zero),
            ("Q", "Adic(x)", Probe::Zero),
            ("Q", "Pruefer(x)", Probe::Unprobed),
            ("Pruefer(x)", "Pruefer(x)", Probe::Nonzero),
            ("Pruefer(x)", "Pruefer(inf)", Probe::Zero),
            ("Adic(x^2+1)", "Adic(x^2+1)", Probe::Nonzero),
            ("Adic(x)", "Pruefer(x)", Probe::Nonzero),
            ("Pruefer(x)", "Adic(x)", Probe::Zero),
        ];
        for (s, t, expected) in cases {
            assert_eq!(probe_hom(&label(s), &label(t), 2).unwrap(), expected, "{s} -> {t}");
        }
    }

    #[test]
    fn join_table() {
        use Probe::*;
        assert_eq!(Zero.join(Zero), Zero);
        assert_eq!(Zero.join(Unprobed), Unprobed);
        assert_eq!(Unprobed.join(Nonzero), Nonzero);
        assert_eq!(Nonzero.join(Zero), Nonzero);
    }

    #[test]
    fn a_reversed_pair_is_flagged() {
        let m = SymbolicModule::once([label("I(0)"), label("I(1)"), label("P(0)")]);
        let r = symbolic_decompose(&m, 2).unwrap();
        assert!(r.violations.is_empty());
        assert_eq!(r.hom_direction[3][0], Probe::Nonzero);
        assert_eq!(r.hom_direction[0][3], Probe::Zero);
        let mut forged = r.hom_direction;
        forged[0][3] = Probe::Nonzero;
        assert!(!is_lower_triangular(&forged));
    }
}
