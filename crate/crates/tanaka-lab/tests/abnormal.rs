use tanaka_lab::abnormal::*;
use tanaka_lab::dist::{growth_vector, realize_flat, DistributionSpec, PolyVectorField};
use tanaka_lab::exactla::Rational;
use tanaka_lab::poly::MPoly;

fn zeros(n: usize) -> Vec<Rational> {
    vec![Rational::zero(); n]
}

fn first_sample(d: &DistributionSpec, seed: u64) -> CotangentPoint {
    sample_covectors(d, &zeros(d.ambient_dim), 4, seed).unwrap().remove(0)
}

#[test]
fn flat_20_flag() {
    let d = realize_flat(2, 0).unwrap().distribution;
    let lam = first_sample(&d, 1);
    let r = flag_at(&d, &lam, None).unwrap();
    assert_eq!(r.dims_j.get(&-1), Some(&2));
    assert_eq!(r.dims_j.get(&0), Some(&4));
    assert_eq!(r.dims_j.get(&1), Some(&6));
    assert_eq!(r.delta_dim, 6);
    assert_eq!(r.young, Some(YoungType { k: 2, l: 0 }));
    assert!(r.duality && r.euler_and_characteristic && r.jump_bounds);
}

#[test]
fn flat_21_flag() {
    let d = realize_flat(2, 1).unwrap().distribution;
    let lam = first_sample(&d, 2);
    let r = flag_at(&d, &lam, None).unwrap();
    assert_eq!(r.delta_dim, 8);
    assert_eq!(r.dims_j[&0], 5);
    assert_eq!(r.young, Some(YoungType { k: 2, l: 1 }));
}

#[test]
fn classify_flat_models() {
    for (k, l) in [(2, 0), (2, 1), (2, 2), (3, 0), (3, 1)] {
        let d = realize_flat(k, l).unwrap().distribution;
        let c = classify(&d, &zeros(d.ambient_dim), 3, 7).unwrap();
        match c {
            Classification::Classified { young, maximal_class, .. } => {
                assert_eq!(young, YoungType { k, l });
                assert!(maximal_class);
            }
            other => panic!("({k},{l}): {other:?}"),
        }
    }
}

#[test]
fn abelian_is_degenerate() {
    let d = DistributionSpec::new((0..3).map(|i| PolyVectorField::coordinate(3, i)).collect()).unwrap();
    let c = classify(&d, &zeros(3), 4, 0).unwrap();
    assert!(matches!(c, Classification::Degenerate { dim_d2: 3 }));
    assert_eq!(c.exit_code(), 2);
}

#[test]
fn heisenberg_times_line_is_reduced() {
    let n = 4;
    let v = |i| MPoly::var(n, 0, i);
    let z = || MPoly::zero(n, 0);
    let one = || MPoly::constant(n, 0, Rational::one());
    let x1 = PolyVectorField::new(vec![one(), z(), z(), z()]).unwrap();
    let x2 = PolyVectorField::new(vec![z(), one(), v(0), z()]).unwrap();
    let x3 = PolyVectorField::new(vec![z(), z(), z(), one()]).unwrap();
    let d = DistributionSpec::new(vec![x1, x2, x3]).unwrap();
    assert_eq!(growth_vector(&d, &zeros(n), 3).unwrap(), vec![3, 4]);
    match classify(&d, &zeros(n), 4, 0).unwrap() {
        Classification::Reduced { dim_d2, d_prime } => {
            assert_eq!(dim_d2, 4);
            assert_eq!(d_prime.dim(), 1);
            assert!(d_prime.contains_vector(&[0, 0, 0, 1].map(Rational::from_int)));
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn characteristic_field_tangent_for_flat_models() {
    for (k, l) in [(2, 0), (2, 1)] {
        let d = realize_flat(k, l).unwrap().distribution;
        let h = characteristic_field(&d).unwrap();
        let qi = quasi_impulses(&d).unwrap();
        for u in qi.u.iter().chain([&qi.u12, &qi.u13, &qi.u23]) {
            let n = d.ambient_dim;
            assert!(u.terms().all(|(m, _)| m.block_degree(n, 2 * n) == 1));
        }
        assert!(!qi.u12.is_zero() || !qi.u13.is_zero() || !qi.u23.is_zero());
        // π_*H(λ) ∈ D(q) at a sample.
        let lam = first_sample(&d, 3);
        let mut pt = lam.q.clone();
        pt.extend(lam.p.iter().cloned());
        let hv = h.eval(&pt);
        assert!(hv.iter().any(|x| !x.is_zero()));
        let dq = tanaka_lab::exactla::Subspace::span(d.ambient_dim, &d.generators.iter().map(|g| g.eval(&lam.q)).collect::<Vec<_>>());
        assert!(dq.contains_vector(&hv[..d.ambient_dim]));
    }
}

#[test]
fn homogeneity_and_offset_base_point() {
    let d = realize_flat(2, 1).unwrap().distribution;
    let q: Vec<Rational> = (0..d.ambient_dim).map(|i| Rational::new(i as i64 - 2, 3)).collect();
    let mut regular = 0;
    // Covectors killing the top-degree direction are not regular; the others are.
    for lam in sample_covectors(&d, &q, 6, 11).unwrap() {
        let r = flag_at(&d, &lam, None).unwrap();
        if r.regular {
            regular += 1;
            assert_eq!(r.young, Some(YoungType { k: 2, l: 1 }));
        }
        for c in [-1, 3] {
            let rc = flag_at(&d, &lam.scaled(&Rational::new(c, 2)), None).unwrap();
            assert_eq!(rc.dims_hat, r.dims_hat);
            assert_eq!(rc.young, r.young);
        }
    }
    assert!(regular >= 3);
    match classify(&d, &q, 6, 11).unwrap() {
        Classification::Classified { young, .. } => assert_eq!(young, YoungType { k: 2, l: 1 }),
        other => panic!("{other:?}"),
    }
}

#[test]
fn first_jump_is_two_over_36_models() {
    for (k, l) in [(2, 0), (2, 1), (2, 2), (3, 0)] {
        let d = realize_flat(k, l).unwrap().distribution;
        for lam in sample_covectors(&d, &zeros(d.ambient_dim), 3, 5).unwrap() {
            let r = flag_at(&d, &lam, Some(1)).unwrap();
            assert_eq!(r.dims_j[&1] - r.dims_j[&0], 2, "({k},{l})");
            assert!(r.jump_bounds && r.duality);
        }
    }
}

#[test]
fn non_annihilating_covector_rejected() {
    let d = realize_flat(2, 0).unwrap().distribution;
    let mut p = zeros(6);
    p[0] = Rational::one();
    let e = flag_at(&d, &CotangentPoint::new(zeros(6), p), None).unwrap_err();
    assert_eq!(e, AbnormalError::NotAnnihilating);
}
