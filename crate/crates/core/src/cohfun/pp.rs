use std::collections::BTreeMap;
use std::fmt::Write;

use crate::decomp::EndAlgebra;
use crate::error::{Error, Result};
use crate::exactnum::Field;
use crate::rep::{dualize, projective, Rep};

use super::pointed::Pointed;
use super::subspace::Subspace;

/// Closure stops with `LatticeTooLarge` past this many nodes.
pub const LATTICE_CAP: usize = 512;

/// The subgroup `X_{C,c} = {f(c) : f ∈ Hom(C, X)}` of the total space of `X`.
#[derive(Clone, Debug)]
pub struct PPSubgroup<F: Field> {
    pub ambient: Rep<F>,
    pub pair: Pointed<F>,
    pub subspace: Subspace<F>,
}

impl<F: Field> PPSubgroup<F> {
    fn from_pair(x: &Rep<F>, pair: Pointed<F>) -> Result<Self> {
        let subspace = pair.realize(x)?;
        Ok(PPSubgroup {
            ambient: x.clone(),
            pair,
            subspace,
        })
    }

    pub fn dim(&self) -> usize {
        self.subspace.dim()
    }

    /// Closed under every endomorphism in a basis of `End(X)`.
    pub fn is_end_submodule(&self) -> Result<bool> {
        let end = EndAlgebra::new(&self.ambient)?;
        Ok(end.basis().iter().all(|e| {
            self.subspace
                .basis()
                .iter()
                .all(|u| self.subspace.contains(&e.apply_total(u)))
        }))
    }
}

pub fn pp_subgroup<F: Field>(c: &Rep<F>, element: &[F], x: &Rep<F>) -> Result<PPSubgroup<F>> {
    PPSubgroup::from_pair(x, Pointed::from_total(c.clone(), element)?)
}

/// The pair `(Λ, 1)` defining the whole module.
fn free_pair<F: Field>(x: &Rep<F>) -> Result<Pointed<F>> {
    let q = x.quiver();
    let parts: Vec<Rep<F>> = (0..q.vertex_count()).map(|v| projective(q, v)).collect();
    let lam = Rep::direct_sum(q, &parts)?;
    let elements = (0..q.vertex_count())
        .map(|v| {
            let mut top = vec![F::zero(); 1];
            top[0] = F::one();
            (v, lam.injections[v].at(v).mul_vec(&top))
        })
        .collect();
    Pointed::new(lam.sum, elements)
}

fn zero_pair<F: Field>(x: &Rep<F>) -> Result<Pointed<F>> {
    let zero = vec![F::zero(); x.total_dim()];
    Pointed::from_total(x.clone(), &zero)
}

/// Finite sublattice of `𝐋(X)` generated by the given pairs together with
/// `0` and `X`, sorted by dimension and then canonically.
#[derive(Clone, Debug)]
pub struct PPLattice<F: Field> {
    pub ambient: Rep<F>,
    pub nodes: Vec<PPSubgroup<F>>,
    /// `(i, j)` when node `j` covers node `i`.
    pub covers: Vec<(usize, usize)>,
}

pub fn pp_lattice<F: Field>(x: &Rep<F>, generators: &[(Rep<F>, Vec<F>)]) -> Result<PPLattice<F>> {
    let mut found: BTreeMap<Subspace<F>, Pointed<F>> = BTreeMap::new();
    let mut frontier = vec![zero_pair(x)?, free_pair(x)?];
    for (c, e) in generators {
        frontier.push(Pointed::from_total(c.clone(), e)?);
    }
    let mut pending: Vec<(Subspace<F>, Pointed<F>)> = Vec::new();
    for p in frontier {
        let u = p.realize(x)?;
        pending.push((u, p));
    }
    while let Some((u, p)) = pending.pop() {
        if found.contains_key(&u) {
            continue;
        }
        let known: Vec<(Subspace<F>, Pointed<F>)> = found.iter().map(|(a, b)| (a.clone(), b.clone())).collect();
        found.insert(u.clone(), p.clone());
        if found.len() > LATTICE_CAP {
            return Err(Error::LatticeTooLarge(LATTICE_CAP));
        }
        for (v, q) in known {
            let s = u.sum(&v);
            if !found.contains_key(&s) {
                pending.push((s, p.join(&q)?));
            }
            let m = u.intersect(&v);
            if !found.contains_key(&m) {
                pending.push((m, p.meet(&q)?));
            }
        }
    }
    let nodes: Vec<PPSubgroup<F>> = found
        .into_iter()
        .map(|(subspace, pair)| PPSubgroup {
            ambient: x.clone(),
            pair,
            subspace,
        })
        .collect();
    let covers = hasse(&nodes.iter().map(|n| &n.subspace).collect::<Vec<_>>());
    Ok(PPLattice {
        ambient: x.clone(),
        nodes,
        covers,
    })
}

fn hasse<F: Field>(nodes: &[&Subspace<F>]) -> Vec<(usize, usize)> {
    let below = |i: usize, j: usize| i != j && nodes[i].is_subspace_of(nodes[j]);
    let mut out = Vec::new();
    for i in 0..nodes.len() {
        for j in 0..nodes.len() {
            if below(i, j) && !(0..nodes.len()).any(|k| below(i, k) && below(k, j)) {
                out.push((i, j));
            }
        }
    }
    out
}

impl<F: Field> PPLattice<F> {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    fn index_of(&self, u: &Subspace<F>) -> Option<usize> {
        self.nodes.iter().position(|n| n.subspace == *u)
    }

    /// Closed under sums and intersections.
    pub fn is_closed(&self) -> bool {
        self.nodes.iter().all(|a| {
            self.nodes.iter().all(|b| {
                self.index_of(&a.subspace.sum(&b.subspace)).is_some()
                    && self.index_of(&a.subspace.intersect(&b.subspace)).is_some()
            })
        })
    }

    /// `a ≤ c ⇒ a + (b ∩ c) = (a + b) ∩ c` on all triples.
    pub fn is_modular(&self) -> bool {
        let s: Vec<&Subspace<F>> = self.nodes.iter().map(|n| &n.subspace).collect();
        s.iter().all(|a| {
            s.iter().all(|c| {
                !a.is_subspace_of(c) || s.iter().all(|b| a.sum(&b.intersect(c)) == a.sum(b).intersect(c))
            })
        })
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph pp_lattice {\n  rankdir=BT;\n  node [shape=box];\n");
        for (i, n) in self.nodes.iter().enumerate() {
            let _ = writeln!(out, "  n{i} [label=\"dim {} {}\"];", n.dim(), n.subspace);
        }
        for (i, j) in &self.covers {
            let _ = writeln!(out, "  n{i} -> n{j};");
        }
        out.push_str("}\n");
        out
    }
}

/// Outcome of checking `U ↦ U^⊥` as a lattice anti-isomorphism `𝐋(X)^op → 𝐋(DX)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, serde::Serialize)]
pub struct AntiIsoReport {
    pub nodes: usize,
    pub bounds_swap: bool,
    pub dimension_law: bool,
    pub order_reversed: bool,
    pub meets_to_joins: bool,
    pub joins_to_meets: bool,
    /// Every image is the subgroup of `DX` defined by the dual pair.
    pub realized: bool,
}

impl AntiIsoReport {
    pub fn passed(&self) -> bool {
        self.bounds_swap
            && self.dimension_law
            && self.order_reversed
            && self.meets_to_joins
            && self.joins_to_meets
            && self.realized
    }
}

pub fn lattice_anti_iso_check<F: Field>(x: &Rep<F>, generators: &[(Rep<F>, Vec<F>)]) -> Result<AntiIsoReport> {
    let lattice = pp_lattice(x, generators)?;
    let dx = dualize(x);
    let n = x.total_dim();
    let s: Vec<&Subspace<F>> = lattice.nodes.iter().map(|u| &u.subspace).collect();
    let images: Vec<Subspace<F>> = s.iter().map(|u| u.annihilator()).collect();
    let mut report = AntiIsoReport {
        nodes: s.len(),
        ..Default::default()
    };
    let zero = Subspace::zero(n);
    let full = Subspace::full(n);
    report.bounds_swap = s.iter().zip(&images).all(|(u, im)| {
        (**u != zero || *im == full) && (**u != full || *im == zero)
    });
    report.dimension_law = s.iter().zip(&images).all(|(u, im)| u.dim() + im.dim() == n);
    let pairs = || (0..s.len()).flat_map(|i| (0..s.len()).map(move |j| (i, j)));
    report.order_reversed =
        pairs().all(|(i, j)| s[i].is_subspace_of(s[j]) == images[j].is_subspace_of(&images[i]));
    report.meets_to_joins =
        pairs().all(|(i, j)| s[i].intersect(s[j]).annihilator() == images[i].sum(&images[j]));
    report.joins_to_meets =
        pairs().all(|(i, j)| s[i].sum(s[j]).annihilator() == images[i].intersect(&images[j]));
    let mut realized = true;
    for (node, im) in lattice.nodes.iter().zip(&images) {
        if node.pair.dual()?.realize(&dx)? != *im {
            realized = false;
            break;
        }
    }
    report.realized = realized;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::Rational;
    use crate::quiver::Quiver;
    use crate::tame::{kron_preinjective, kron_preprojective, kron_regular, TubePoint};

    fn q(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| Rational::from(x)).collect()
    }

    #[test]
    fn subgroup_examples() {
        let x = kron_preprojective(1);
        let p2 = projective::<Rational>(&Quiver::kronecker(), 1);
        let u = pp_subgroup(&p2, &q(&[1]), &x).unwrap();
        assert_eq!(u.dim(), 2);
        assert_eq!(u.subspace, Subspace::span(3, &[q(&[0, 1, 0]), q(&[0, 0, 1])]));
        assert!(u.is_end_submodule().unwrap());
        assert_eq!(pp_subgroup(&p2, &q(&[0]), &x).unwrap().dim(), 0);
        assert!(pp_subgroup(&p2, &q(&[1, 1]), &x).is_err());
        let whole = PPSubgroup::from_pair(&x, free_pair(&x).unwrap()).unwrap();
        assert_eq!(whole.dim(), 3);
    }

    #[test]
    fn lattice_of_the_projective() {
        let x = kron_preprojective(1);
        let p2 = projective::<Rational>(&Quiver::kronecker(), 1);
        let r0 = kron_regular(&TubePoint::linear(0), 1).unwrap();
        let gens = vec![(p2, q(&[1])), (r0, q(&[0, 1]))];
        let l = pp_lattice(&x, &gens).unwrap();
        assert!(l.len() <= 4);
        assert!(l.is_closed());
        assert!(l.is_modular());
        assert_eq!(l.nodes[0].dim(), 0);
        assert_eq!(l.nodes.last().unwrap().dim(), 3);
        let dot = l.to_dot();
        assert!(dot.starts_with("digraph pp_lattice"));
        assert_eq!(dot.matches("->").count(), l.covers.len());
        let report = lattice_anti_iso_check(&x, &gens).unwrap();
        assert!(report.passed(), "{report:?}");
    }

    #[test]
    fn empty_generators_give_the_bounds() {
        let x = kron_preinjective(1);
        let l = pp_lattice(&x, &[]).unwrap();
        assert_eq!(l.len(), 2);
        assert_eq!(l.covers, vec![(0, 1)]);
        assert_eq!(pp_lattice(&Rep::<Rational>::zero(&Quiver::kronecker()), &[]).unwrap().len(), 1);
    }

    #[test]
    fn generator_order_does_not_matter() {
        let x = kron_regular(&TubePoint::linear(0), 2).unwrap();
        let gens = vec![
            (kron_preprojective(1), q(&[1, 0, 0])),
            (kron_regular(&TubePoint::linear(0), 1).unwrap(), q(&[1, 0])),
            (kron_preinjective(0), q(&[1])),
        ];
        let a = pp_lattice(&x, &gens).unwrap();
        let rev: Vec<_> = gens.iter().rev().cloned().collect();
        let b = pp_lattice(&x, &rev).unwrap();
        let key = |l: &PPLattice<Rational>| l.nodes.iter().map(|n| n.subspace.clone()).collect::<Vec<_>>();
        assert_eq!(key(&a), key(&b));
        assert_eq!(a.covers, b.covers);
        assert!(a.nodes.iter().all(|n| n.is_end_submodule().unwrap()));
        assert!(lattice_anti_iso_check(&x, &gens).unwrap().passed());
    }
}
