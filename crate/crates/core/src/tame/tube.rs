use std::collections::BTreeMap;

use crate::decomp::{decompose, is_indecomposable};
use crate::error::{Error, Result};
use crate::exactnum::Rational;
use crate::rep::{hom_dim, Rep};

use super::catalog::{kron_regular, CatalogLabel, TubePoint};
use super::torsion::collect_copies;

fn check_kronecker(x: &Rep<Rational>) -> Result<()> {
    if !x.quiver().is_kronecker() {
        return Err(Error::UnsupportedQuiver("tubes are implemented for the Kronecker quiver".into()));
    }
    Ok(())
}

/// Tube of a regular indecomposable: the point `p` with
/// `Hom(R(p; 1), X) ≠ 0`. For `A` invertible it is the irreducible radical of
/// the minimal polynomial of `A⁻¹B`, otherwise `∞`.
pub fn tube_point(x: &Rep<Rational>) -> Result<TubePoint> {
    check_kronecker(x)?;
    if x.is_zero() || x.quiver().defect(&x.dim_vector())? != 0 {
        return Err(Error::Precondition("tube_point needs a nonzero regular module".into()));
    }
    let candidate = match x.arrow(0).inverse() {
        Some(inv) => {
            let radical = inv.mul(x.arrow(1)).minimal_polynomial().squarefree_part()?;
            if !radical.is_irreducible() {
                return Err(Error::Precondition("module meets several tubes".into()));
            }
            TubePoint::Finite(radical)
        }
        None => TubePoint::Infinity,
    };
    if hom_dim(&kron_regular(&candidate, 1)?, x)? == 0 {
        return Err(Error::Precondition("module is not regular".into()));
    }
    Ok(candidate)
}

/// Catalog label of an indecomposable Kronecker module, read off from its
/// dimension vector and, for regular modules, its tube.
pub fn catalog_label_of(x: &Rep<Rational>) -> Result<CatalogLabel> {
    check_kronecker(x)?;
    if !is_indecomposable(x)? {
        return Err(Error::Precondition("catalog_label_of needs an indecomposable module".into()));
    }
    let (a, b) = (x.dim(0), x.dim(1));
    Ok(match x.quiver().defect(&x.dim_vector())?.signum() {
        -1 => CatalogLabel::Preprojective(a),
        1 => CatalogLabel::Preinjective(b),
        _ => {
            let p = tube_point(x)?;
            let r = a / p.degree();
            CatalogLabel::Regular(p, r)
        }
    })
}

/// Groups the summands of a regular module by tube.
pub fn tube_group(x: &Rep<Rational>) -> Result<BTreeMap<TubePoint, Rep<Rational>>> {
    check_kronecker(x)?;
    let dec = decompose(x)?;
    let mut points = Vec::with_capacity(dec.summands.len());
    for s in &dec.summands {
        if x.quiver().defect(&s.rep.dim_vector())? != 0 {
            return Err(Error::Precondition(format!(
                "summand of dimension {:?} is not regular",
                s.rep.dims()
            )));
        }
        points.push((s.rep.clone(), tube_point(&s.rep)?));
    }
    let mut out = BTreeMap::new();
    for (_, p) in &points {
        if out.contains_key(p) {
            continue;
        }
        let part = collect_copies(&dec, |r| {
            Ok(points.iter().any(|(s, q)| s == r && q == p))
        })?;
        out.insert(p.clone(), part.rep);
    }
    Ok(out)
}
