use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::sample::{self, catalog_labels, catalog_module};
use crate::Tallies;
use tamerep::atlas::{build_atlas, family, AtlasOptions, Layer, FAMILIES};
use tamerep::cohfun::{dual_coherent, eval_coherent, eval_dual, lattice_anti_iso_check, simple_functor_probe, CoherentFunctor};
use tamerep::decomp::{decompose, end_algebra, iso_test};
use tamerep::error::Result;
use tamerep::exactnum::{Matrix, Rational, RationalFunction};
use tamerep::generic::{
    coextension_tower, default_sample, generic_module, operator_samples, rperp_check, split_self_extension,
    tower_embedding_probe,
};
use tamerep::io::to_canonical_string;
use tamerep::quiver::Quiver;
use tamerep::rep::{dualize, ext_cocycle_basis, ext_dim, ext_dim_cocycle, hom_dim, Rep};
use tamerep::tame::tau::{classify_by_tau, Class};
use tamerep::tame::{
    adic_tower, ar_sequence, is_brick, kron_preinjective, kron_preprojective, kron_regular, preinjective_filtration,
    preinjective_part, prufer_tower, tau_minus_nilpotence, torsion_split, transpose_dual_tau, CatalogLabel, TubePoint,
};

fn dims(x: &Rep<Rational>) -> String {
    format!("{:?}", x.dims())
}

pub(super) fn euler(rng: &mut ChaCha8Rng, t: &mut Tallies) -> Result<()> {
    let q = Quiver::kronecker();
    for _ in 0..200 {
        let x = sample::mixed(rng, 8)?;
        let y = sample::mixed(rng, 8)?;
        let h = hom_dim(&x, &y)? as i64;
        let e = ext_dim_cocycle(&x, &y)? as i64;
        let form = q.euler_form(&x.dim_vector(), &y.dim_vector())?;
        t.record("hom - ext = euler form", h - e == form, || {
            format!("X {} Y {}: hom {h}, ext {e}, form {form}", dims(&x), dims(&y))
        });
    }
    for _ in 0..60 {
        let x = sample::mixed(rng, 8)?;
        let y = sample::mixed(rng, 8)?;
        let a = ext_dim(&x, &y)?;
        let b = ext_dim_cocycle(&x, &y)?;
        t.record("cocycle ext = euler-defect ext", a == b, || {
            format!("X {} Y {}: euler-defect {a}, cocycle {b}", dims(&x), dims(&y))
        });
    }
    // Ext(X, Y) ≅ D Hom(Y, τX) on indecomposables
    let pool = catalog_labels(6);
    for _ in 0..40 {
        let lx = pool.choose(rng).expect("nonempty");
        let ly = pool.choose(rng).expect("nonempty");
        let (x, y) = (catalog_module(lx), catalog_module(ly));
        let tx = transpose_dual_tau(&x)?;
        let a = ext_dim(&x, &y)?;
        let b = hom_dim(&y, &tx)?;
        t.record("ext(X,Y) = hom(Y, tau X)", a == b, || format!("X {lx} Y {ly}: {a} vs {b}"));
    }
    Ok(())
}

/// Steps until the inverse Coxeter transformation leaves the positive cone.
fn coxeter_kill_count(d: &[i64]) -> usize {
    let phi = Quiver::kronecker().coxeter_matrix();
    let m = Matrix::from_fn(2, 2, |i, j| Rational::from(phi[i][j]));
    let inv = m.inverse().expect("unimodular");
    let mut v: Vec<Rational> = d.iter().map(|&x| Rational::from(x)).collect();
    let mut steps = 0;
    while v.iter().all(|x| !x.is_negative()) && v.iter().any(|x| !x.is_zero()) {
        v = inv.mul_vec(&v);
        steps += 1;
    }
    steps
}

pub(super) fn classification(t: &mut Tallies) -> Result<()> {
    let q = Quiver::kronecker();
    for n in 0..=10 {
        for (x, want, tag) in [(kron_preprojective(n), -1, "P"), (kron_preinjective(n), 1, "I")] {
            let indec = decompose(&x)?.is_indecomposable();
            t.record("certified indecomposable", indec, || format!("{tag}({n})"));
            let d = q.defect(&x.dim_vector())?;
            t.record("defect sign", d.signum() == want, || format!("{tag}({n}) has defect {d}"));
        }
        let i = kron_preinjective(n);
        let steps = tau_minus_nilpotence(&i, 2 * n + 4)?;
        t.record("tau^- kills I(n) in exactly n+1 steps", steps == Some(n + 1), || {
            format!("I({n}) is killed after {steps:?} steps")
        });
        let oracle = coxeter_kill_count(&i.dim_vector());
        t.record("tau^- kill count matches the Coxeter orbit", steps == Some(oracle), || {
            format!("I({n}): {steps:?} steps, Coxeter orbit leaves the cone after {oracle}")
        });
    }
    let points = [
        TubePoint::linear(0),
        TubePoint::linear(1),
        TubePoint::linear(-2),
        TubePoint::Infinity,
        "x^2+1".parse()?,
    ];
    for p in &points {
        for r in 1..=4 {
            let x = kron_regular(p, r)?;
            let label = format!("R({p}; {r})");
            t.record("certified indecomposable", decompose(&x)?.is_indecomposable(), || label.clone());
            let d = q.defect(&x.dim_vector())?;
            t.record("defect sign", d == 0, || format!("{label} has defect {d}"));
            let fixed = iso_test(&transpose_dual_tau(&x)?, &x)?.is_some();
            t.record("tau fixes regular modules", fixed, || label.clone());
        }
    }
    t.note("tau^- I(n) = I(n-2), so I(n) is killed after floor(n/2)+1 steps");
    Ok(())
}

pub(super) fn torsion(rng: &mut ChaCha8Rng, t: &mut Tallies) -> Result<()> {
    let q = Quiver::kronecker();
    for _ in 0..50 {
        let s = sample::catalog_sum(rng, 10, 4)?;
        let x = &s.module;
        let names = || s.labels.iter().map(ToString::to_string).collect::<Vec<_>>().join(" + ");
        let split = torsion_split(x)?;
        t.record("torsion split verifies", split.verify(), names);
        let expected_t: usize = s
            .labels
            .iter()
            .filter(|l| !matches!(l, CatalogLabel::Preprojective(_)))
            .map(|l| catalog_module(l).total_dim())
            .sum();
        t.record("torsion part is the non-preprojective summands", split.torsion.rep.total_dim() == expected_t, names);
        let free = &split.torsionfree.rep;
        let free_ok = free.is_zero() || q.defect(&free.dim_vector())? < 0;
        t.record("torsion-free part is preprojective", free_ok, names);

        let pre = preinjective_part(x)?;
        let filt = preinjective_filtration(x, 6)?;
        let monotone = filt.windows(2).all(|w| w[0].rep.total_dim() <= w[1].rep.total_dim());
        t.record("filtration increases", monotone, names);
        let last = &filt[filt.len() - 1].rep;
        let stable = filt[filt.len() - 2].rep.total_dim() == last.total_dim();
        t.record("filtration stabilizes", stable, names);
        let same = iso_test(last, &pre.rep)?.is_some();
        t.record("filtration limit is the preinjective part", same, names);
        let expected_i: usize = s
            .labels
            .iter()
            .filter(|l| matches!(l, CatalogLabel::Preinjective(_)))
            .map(|l| catalog_module(l).total_dim())
            .sum();
        t.record("preinjective part dimension", pre.rep.total_dim() == expected_i, names);
        t.record("filtration stages split", filt.iter().all(|p| p.is_split()), names);
    }
    Ok(())
}

pub(super) fn towers(t: &mut Tallies) -> Result<()> {
    let points = [
        TubePoint::linear(0),
        TubePoint::linear(1),
        TubePoint::linear(-2),
        TubePoint::Infinity,
        "x^2+1".parse()?,
        "x^2+x+1".parse()?,
    ];
    for p in &points {
        for q in &points {
            if p == q {
                continue;
            }
            for r in 1..=2 {
                for s in 1..=2 {
                    let h = hom_dim(&kron_regular(p, r)?, &kron_regular(q, s)?)?;
                    t.record("no maps between distinct tubes", h == 0, || format!("R({p}; {r}) -> R({q}; {s}): {h}"));
                }
            }
        }
    }
    for p in [TubePoint::linear(0), "x^2+1".parse()?] {
        let tower = prufer_tower(&p, 6)?;
        t.record_list("pruefer tower invariants", &tower.verify()?, &format!("Pruefer({p})"));
        let adic = adic_tower(&p, 6)?;
        t.record_list("adic tower is the dual of an opposite pruefer tower", &adic.verify()?, &format!("Adic({p})"));
    }
    Ok(())
}

fn ratfun(num: &[i64], den: &[i64]) -> RationalFunction {
    use tamerep::exactnum::Polynomial;
    RationalFunction::new(Polynomial::from_i64s(num), Polynomial::from_i64s(den)).expect("nonzero")
}

pub(super) fn generic(rng: &mut ChaCha8Rng, t: &mut Tallies) -> Result<()> {
    let g = generic_module();
    let end = hom_dim(&g, &g)?;
    t.record("End(Q) is one-dimensional", end == 1, || format!("dimension {end}"));
    let samples = operator_samples();
    let basis = ext_cocycle_basis(&g, &g)?;
    let scalars = [
        RationalFunction::one(),
        ratfun(&[2, 1], &[-1, 1]),
        ratfun(&[0, 0, 3], &[1, 0, 1]),
        ratfun(&[-5], &[1]),
    ];
    for z in &basis {
        for _ in 0..3 {
            let s = scalars.choose(rng).expect("nonempty");
            let w = z.scale(s);
            let ok = split_self_extension(&w)?.verify_on(&samples);
            t.record("self-extensions of Q split over the path algebra", ok, || format!("cocycle scaled by {s}"));
        }
    }
    t.note(format!(
        "Ext^1(Q, Q) computed with Q(t)-linear cocycles has dimension {}; every such cocycle is a coboundary of Q-linear maps",
        basis.len()
    ));
    for p in default_sample() {
        for r in 1..=3 {
            let rep = rperp_check(&kron_regular(&p, r)?)?;
            t.record("regular modules are left orthogonal to Q", rep.is_orthogonal() && rep.regular, || {
                format!("R({p}; {r}): hom {}, ext {}", rep.hom_dim, rep.ext_dim_cocycle)
            });
        }
    }
    Ok(())
}

pub(super) fn coextension(t: &mut Tallies) -> Result<()> {
    let p = kron_preprojective(0);
    let point = TubePoint::linear(0);
    let tower = coextension_tower(&p, &point, 5)?;
    t.record_list("coextension tower invariants", &tower.verify()?, "P(0) at x");
    for u in &tower.stages {
        let r = u.r;
        t.record("universal coextension", u.is_universal(), || format!("r = {r}"));
        let d = u.middle().dims().to_vec();
        t.record("E_r has dimension (r, r+1)", d == [r, r + 1], || format!("r = {r}: {d:?}"));
    }
    let probe = tower_embedding_probe(&tower)?;
    t.record("compatible embeddings into Q", probe.passed(), || {
        format!("injective {:?}, commuting {:?}", probe.injective, probe.commuting)
    });
    Ok(())
}

fn random_functor(rng: &mut ChaCha8Rng) -> Result<CoherentFunctor<Rational>> {
    let c0 = sample::mixed(rng, 4)?;
    let c1 = sample::mixed(rng, 4)?;
    Ok(CoherentFunctor::new(sample::hom(rng, &c0, &c1)?))
}

pub(super) fn duality(rng: &mut ChaCha8Rng, t: &mut Tallies) -> Result<()> {
    for _ in 0..50 {
        let f = random_functor(rng)?;
        let y = dualize(&sample::mixed(rng, 6)?);
        let lhs = eval_coherent(&f, &dualize(&y))?.dim;
        let rhs = eval_dual(&f, &y)?;
        let case = || format!("C0 {:?} C1 {:?} Y {:?}", f.c0().dims(), f.c1().dims(), y.dims());
        t.record("dim F(DY) = dim F^v(Y)", lhs == rhs, case);
        let dd = dual_coherent(&dual_coherent(&f)?)?;
        let x = sample::mixed(rng, 6)?;
        let a = eval_coherent(&f, &x)?.dim;
        let b = eval_coherent(&dd, &x)?.dim;
        t.record("double dual has the same dimensions", a == b, || format!("{} vs {b} at {:?}", a, x.dims()));
        let fv = dual_coherent(&f)?;
        let c = eval_coherent(&fv, &y)?.dim;
        t.record("dual presentation evaluates F^v", c == rhs, || format!("{c} vs {rhs} at {:?}", y.dims()));
    }
    for n in 0..=6 {
        let dp = classify_by_tau(&dualize(&kron_preprojective(n)), 8)?;
        t.record("D swaps preprojective and preinjective", dp == Class::Preinjective, || format!("D P({n}) is {dp}"));
        let di = classify_by_tau(&dualize(&kron_preinjective(n)), 8)?;
        t.record("D swaps preprojective and preinjective", di == Class::Preprojective, || format!("D I({n}) is {di}"));
    }
    let mut modules: Vec<Rep<Rational>> = catalog_labels(8).iter().map(catalog_module).collect();
    for _ in 0..30 {
        modules.push(sample::mixed(rng, 8)?);
    }
    let generators = catalog_labels(4);
    for x in &modules {
        let k = rng.gen_range(0..=4);
        let gens: Vec<(Rep<Rational>, Vec<Rational>)> = (0..k)
            .map(|_| {
                let c = catalog_module(generators.choose(rng).expect("nonempty"));
                let v = sample::vector(rng, c.total_dim());
                (c, v)
            })
            .collect();
        let report = lattice_anti_iso_check(x, &gens)?;
        t.record("annihilators give an anti-isomorphism onto L(DX)", report.passed(), || {
            format!("X {:?} with {k} generators: {report:?}", x.dims())
        });
    }
    Ok(())
}

pub(super) fn almost_split(t: &mut Tallies) -> Result<()> {
    let bricks = [
        kron_regular(&TubePoint::linear(0), 1)?,
        kron_regular(&TubePoint::Infinity, 1)?,
        kron_regular(&"x^2+1".parse()?, 1)?,
        kron_preinjective(0),
    ];
    let points = [TubePoint::linear(0), TubePoint::linear(1), TubePoint::Infinity, "x^2+1".parse()?];
    let mut range: Vec<(String, Rep<Rational>)> = Vec::new();
    for n in 0..=4 {
        range.push((format!("P({n})"), kron_preprojective(n)));
        range.push((format!("I({n})"), kron_preinjective(n)));
    }
    for p in &points {
        for r in 1..=3 {
            range.push((format!("R({p}; {r})"), kron_regular(p, r)?));
        }
    }
    let g = generic_module();
    for x in &bricks {
        let name = dims(x);
        t.record("is a brick", is_brick(x)?, || name.clone());
        let seq = ar_sequence(x)?;
        t.record("almost split sequence does not split", seq.is_non_split()?, || name.clone());
        let want = seq.tau.total_dim() + x.total_dim();
        t.record("middle term dimension", seq.middle().total_dim() == want, || name.clone());
        let f = simple_functor_probe(x)?;
        let top = end_algebra(&seq.tau)?.dim();
        for (label, z) in &range {
            let v = eval_coherent(&f, z)?.dim;
            let at_tau = iso_test(z, &seq.tau)?.is_some();
            let expected = if at_tau { top } else { 0 };
            t.record("simple functor is supported at tau X only", v == expected, || {
                format!("X {name}, at {label}: {v}, expected {expected}")
            });
        }
        let v = eval_coherent(&f.base_change(), &g)?.dim;
        t.record("simple functor vanishes on Q", v == 0, || format!("X {name}: {v}"));
    }
    Ok(())
}

pub(super) fn atlas(t: &mut Tallies) -> Result<()> {
    let opts = AtlasOptions::default();
    let a = build_atlas(&opts)?;
    let b = build_atlas(&opts)?;
    let mut seen: Vec<&str> = a.entries.iter().map(|e| family(&e.label)).collect();
    seen.sort();
    seen.dedup();
    let mut want = FAMILIES.to_vec();
    want.sort();
    t.record("exactly six label families", seen == want, || format!("{seen:?}"));
    let top = a.labels_in_layer(Layer::Generic);
    t.record("generic module alone in the top layer", top == [&CatalogLabel::Generic], || format!("{top:?}"));
    t.record("trisection hom directions are lower triangular", a.trisection.lower_triangular, || {
        format!("{:?}", a.trisection.matrix)
    });
    let (ja, jb) = (to_canonical_string(&a.to_json()), to_canonical_string(&b.to_json()));
    t.record("json output is deterministic", ja == jb, || "json differs".into());
    t.record("dot output is deterministic", a.to_dot() == b.to_dot(), || "dot differs".into());
    Ok(())
}
