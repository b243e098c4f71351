//! Seeded samplers shared by the suites.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use tamerep::error::Result;
use tamerep::exactnum::{Matrix, Rational};
use tamerep::quiver::Quiver;
use tamerep::rep::{hom_basis, Rep, RepMap};
use tamerep::tame::{kron_preinjective, kron_preprojective, kron_regular, CatalogLabel, TubePoint};

pub fn small(rng: &mut ChaCha8Rng) -> Rational {
    Rational::from(rng.gen_range(-2i64..=2))
}

/// Entries in `-2..=2`, each zero with probability `1 - density`.
pub fn matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize, density: f64) -> Matrix<Rational> {
    Matrix::from_fn(rows, cols, |_, _| {
        if rng.gen_bool(density) {
            small(rng)
        } else {
            Rational::zero()
        }
    })
}

pub fn vector(rng: &mut ChaCha8Rng, len: usize) -> Vec<Rational> {
    (0..len).map(|_| small(rng)).collect()
}

/// `L U P` with `L`, `U` unitriangular and `P` a permutation.
pub fn invertible(rng: &mut ChaCha8Rng, n: usize) -> Matrix<Rational> {
    let l = Matrix::from_fn(n, n, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Equal => Rational::one(),
        std::cmp::Ordering::Greater => small(rng),
        std::cmp::Ordering::Less => Rational::zero(),
    });
    let u = Matrix::from_fn(n, n, |i, j| match i.cmp(&j) {
        std::cmp::Ordering::Equal => Rational::one(),
        std::cmp::Ordering::Less => small(rng),
        std::cmp::Ordering::Greater => Rational::zero(),
    });
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let p = Matrix::from_fn(n, n, |i, j| if perm[i] == j { Rational::one() } else { Rational::zero() });
    l.mul(&u).mul(&p)
}

/// `X` transported along random vertex-wise base changes.
pub fn conjugate(rng: &mut ChaCha8Rng, x: &Rep<Rational>) -> Result<(Rep<Rational>, RepMap<Rational>)> {
    let g: Vec<Matrix<Rational>> = x.dims().iter().map(|&d| invertible(rng, d)).collect();
    x.conjugate(&g)
}

/// A Kronecker representation with random arrows and total dimension at most `max_total`.
pub fn kronecker(rng: &mut ChaCha8Rng, max_total: usize) -> Rep<Rational> {
    let total = rng.gen_range(1..=max_total);
    let d0 = rng.gen_range(0..=total);
    let d1 = total - d0;
    let density = [0.3, 0.6, 1.0][rng.gen_range(0..3)];
    let a = matrix(rng, d1, d0, density);
    let b = matrix(rng, d1, d0, density);
    Rep::new(Quiver::kronecker(), vec![d0, d1], vec![a, b]).expect("shapes agree")
}

/// Tube points used by the random catalog.
pub fn points() -> Vec<TubePoint> {
    vec![
        TubePoint::linear(0),
        TubePoint::linear(1),
        TubePoint::linear(-2),
        TubePoint::Infinity,
        "x^2+1".parse().expect("irreducible"),
    ]
}

/// Finite-length catalog labels whose module has total dimension at most `max_total`.
pub fn catalog_labels(max_total: usize) -> Vec<CatalogLabel> {
    let mut out = Vec::new();
    for n in 0..max_total {
        if 2 * n < max_total {
            out.push(CatalogLabel::Preprojective(n));
            out.push(CatalogLabel::Preinjective(n));
        }
    }
    for p in points() {
        for r in 1..=max_total {
            if 2 * r * p.degree() <= max_total {
                out.push(CatalogLabel::Regular(p.clone(), r));
            }
        }
    }
    out
}

pub fn catalog_module(label: &CatalogLabel) -> Rep<Rational> {
    match label {
        CatalogLabel::Preprojective(n) => kron_preprojective(*n),
        CatalogLabel::Preinjective(n) => kron_preinjective(*n),
        CatalogLabel::Regular(p, r) => kron_regular(p, *r).expect("finite point"),
        _ => unreachable!("finite-length labels only"),
    }
}

/// Random catalog pieces, their direct sum, and the sum after a random base change.
pub struct CatalogSum {
    pub labels: Vec<CatalogLabel>,
    pub module: Rep<Rational>,
}

pub fn catalog_sum(rng: &mut ChaCha8Rng, max_total: usize, max_parts: usize) -> Result<CatalogSum> {
    let pool = catalog_labels(max_total);
    let mut labels = Vec::new();
    let mut parts = Vec::new();
    let mut total = 0;
    for _ in 0..rng.gen_range(1..=max_parts) {
        let l = pool.choose(rng).expect("nonempty pool").clone();
        let m = catalog_module(&l);
        if total + m.total_dim() > max_total {
            continue;
        }
        total += m.total_dim();
        labels.push(l);
        parts.push(m);
    }
    let sum = Rep::direct_sum(&Quiver::kronecker(), &parts)?.sum;
    let (module, _) = conjugate(rng, &sum)?;
    Ok(CatalogSum { labels, module })
}

/// A random catalog sum or a random representation, about half each.
pub fn mixed(rng: &mut ChaCha8Rng, max_total: usize) -> Result<Rep<Rational>> {
    if rng.gen_bool(0.5) {
        Ok(kronecker(rng, max_total))
    } else {
        Ok(catalog_sum(rng, max_total, 3)?.module)
    }
}

/// A random element of `Hom(X, Y)`.
pub fn hom(rng: &mut ChaCha8Rng, x: &Rep<Rational>, y: &Rep<Rational>) -> Result<RepMap<Rational>> {
    let mut f = RepMap::zero(x, y);
    for b in hom_basis(x, y)? {
        f = f.add(&b.scale(&small(rng)))?;
    }
    Ok(f)
}
