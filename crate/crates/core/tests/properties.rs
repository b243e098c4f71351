use proptest::prelude::*;

use tamerep::cohfun::{eval_coherent, CoherentFunctor, Subspace};
use tamerep::io::{parse_rep, rep_to_json, to_canonical_string, AnyRep};
use tamerep::rep::{dualize, ext_dim, ext_dim_cocycle, hom_basis, hom_dim};
use tamerep::tame::{kron_preinjective, kron_preprojective, kron_regular, torsion_split, transpose_dual_tau, TubePoint};
use tamerep::{Matrix, Quiver, Rational, Rep, RepMap};

fn rat(x: i64) -> Rational {
    Rational::from(x)
}

prop_compose! {
    fn kronecker(max: usize)(d0 in 0..=max, d1 in 0..=max)
        (a in prop::collection::vec(-2i64..=2, d0 * d1),
         b in prop::collection::vec(-2i64..=2, d0 * d1),
         d0 in Just(d0), d1 in Just(d1)) -> Rep<Rational> {
        let m = |v: &[i64]| Matrix::from_vec(d1, d0, v.iter().map(|&x| rat(x)).collect()).unwrap();
        Rep::new(Quiver::kronecker(), vec![d0, d1], vec![m(&a), m(&b)]).unwrap()
    }
}

prop_compose! {
    fn vectors(len: usize, count: usize)(vs in prop::collection::vec(prop::collection::vec(-2i64..=2, len), 0..=count))
        -> Vec<Vec<Rational>> {
        vs.into_iter().map(|v| v.into_iter().map(rat).collect()).collect()
    }
}

fn subspace(vs: &[Vec<Rational>], n: usize) -> Subspace<Rational> {
    Subspace::span(n, vs)
}

fn indecomposables() -> Vec<Rep<Rational>> {
    let mut out = Vec::new();
    for n in 0..4 {
        out.push(kron_preprojective(n));
        out.push(kron_preinjective(n));
    }
    for p in [TubePoint::linear(0), TubePoint::Infinity, "x^2+1".parse().unwrap()] {
        out.push(kron_regular(&p, 1).unwrap());
        out.push(kron_regular(&p, 2).unwrap());
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn euler_identity(x in kronecker(3), y in kronecker(3)) {
        let q = Quiver::kronecker();
        let h = hom_dim(&x, &y).unwrap() as i64;
        let e = ext_dim_cocycle(&x, &y).unwrap() as i64;
        prop_assert_eq!(h - e, q.euler_form(&x.dim_vector(), &y.dim_vector()).unwrap());
        prop_assert_eq!(ext_dim(&x, &y).unwrap() as i64, e);
    }

    #[test]
    fn hom_of_sums_is_additive(x in kronecker(2), y in kronecker(2), z in kronecker(2)) {
        let q = Quiver::kronecker();
        let s = Rep::direct_sum(&q, &[y.clone(), z.clone()]).unwrap().sum;
        prop_assert_eq!(hom_dim(&x, &s).unwrap(), hom_dim(&x, &y).unwrap() + hom_dim(&x, &z).unwrap());
    }

    #[test]
    fn hom_is_invariant_under_base_change(x in kronecker(3), y in kronecker(3), shift in -2i64..=2) {
        let g: Vec<Matrix<Rational>> = x
            .dims()
            .iter()
            .map(|&d| Matrix::from_fn(d, d, |i, j| if i == j { rat(1) } else if j == i + 1 { rat(shift) } else { rat(0) }))
            .collect();
        let (x2, iso) = x.conjugate(&g).unwrap();
        prop_assert!(iso.is_iso());
        prop_assert_eq!(hom_dim(&x2, &y).unwrap(), hom_dim(&x, &y).unwrap());
        prop_assert_eq!(ext_dim_cocycle(&y, &x2).unwrap(), ext_dim_cocycle(&y, &x).unwrap());
    }

    #[test]
    fn duality_is_an_involution_reversing_hom(x in kronecker(3), y in kronecker(3)) {
        prop_assert_eq!(dualize(&dualize(&x)), x.clone());
        prop_assert_eq!(hom_dim(&dualize(&y), &dualize(&x)).unwrap(), hom_dim(&x, &y).unwrap());
    }

    #[test]
    fn files_round_trip(x in kronecker(3)) {
        let text = to_canonical_string(&rep_to_json(&x));
        let parsed = parse_rep(&text).unwrap();
        prop_assert_eq!(&parsed, &AnyRep::Q(x));
        prop_assert_eq!(to_canonical_string(&parsed.to_json()), text);
    }

    #[test]
    fn coherent_evaluation_is_additive(c0 in kronecker(2), c1 in kronecker(2), x in kronecker(2), y in kronecker(2), pick in 0usize..8) {
        let basis = hom_basis(&c0, &c1).unwrap();
        let phi = if basis.is_empty() { RepMap::zero(&c0, &c1) } else { basis[pick % basis.len()].clone() };
        let f = CoherentFunctor::new(phi);
        let s = Rep::direct_sum(&Quiver::kronecker(), &[x.clone(), y.clone()]).unwrap().sum;
        let lhs = eval_coherent(&f, &s).unwrap().dim;
        prop_assert_eq!(lhs, eval_coherent(&f, &x).unwrap().dim + eval_coherent(&f, &y).unwrap().dim);
    }

    #[test]
    fn subspace_lattice_laws(a in vectors(4, 3), b in vectors(4, 3), c in vectors(4, 3)) {
        let (u, v, w) = (subspace(&a, 4), subspace(&b, 4), subspace(&c, 4));
        prop_assert_eq!(u.sum(&v).dim() + u.intersect(&v).dim(), u.dim() + v.dim());
        prop_assert_eq!(u.annihilator().annihilator(), u.clone());
        prop_assert_eq!(u.sum(&v).annihilator(), u.annihilator().intersect(&v.annihilator()));
        if u.is_subspace_of(&w) {
            prop_assert_eq!(u.sum(&v.intersect(&w)), u.sum(&v).intersect(&w));
        }
    }

    #[test]
    fn torsion_part_admits_no_maps_to_the_torsionfree_part(x in kronecker(3)) {
        let s = torsion_split(&x).unwrap();
        prop_assert!(s.verify());
        prop_assert_eq!(hom_dim(&s.torsion.rep, &s.torsionfree.rep).unwrap(), 0);
        prop_assert_eq!(s.torsion.rep.total_dim() + s.torsionfree.rep.total_dim(), x.total_dim());
    }

    #[test]
    fn tau_acts_by_the_coxeter_matrix(i in 0usize..14) {
        let all = indecomposables();
        let x = &all[i % all.len()];
        let q = Quiver::kronecker();
        let t = transpose_dual_tau(x).unwrap();
        if !t.is_zero() {
            prop_assert_eq!(t.dim_vector(), q.coxeter_transform(&x.dim_vector()).unwrap());
        }
    }
}
