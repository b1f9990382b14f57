//! Property tests for the exact core and the structural invariants.

use proptest::prelude::*;
use tanaka_lab::abnormal::{flag_at, sample_covectors};
use tanaka_lab::dist::{growth_vector, lie_bracket, realize_flat, DistributionSpec, PolyVectorField};
use tanaka_lab::exactla::{rref, MatQ, Rational, Subspace};
use tanaka_lab::liecore::standard_form;
use tanaka_lab::poly::{poisson, MPoly, Monomial};

fn rat() -> impl Strategy<Value = Rational> {
    prop_oneof![
        (-50i64..50, 1i64..20).prop_map(|(n, d)| Rational::new(n, d)),
        // near the i64 boundary, exercising the big-integer path
        (i64::MAX - 10..i64::MAX, 1i64..5).prop_map(|(n, d)| Rational::new(n, d)),
    ]
}

fn small_matrix(rows: usize, cols: usize) -> impl Strategy<Value = MatQ> {
    prop::collection::vec(-3i64..4, rows * cols).prop_map(move |v| MatQ::from_i64(rows, cols, &v))
}

fn poly(nvars: usize, num_p: usize, max_exp: u8) -> impl Strategy<Value = MPoly> {
    prop::collection::vec((prop::collection::vec(0..=max_exp, nvars), -4i64..5), 0..5).prop_map(move |terms| {
        MPoly::from_terms(
            nvars - num_p,
            num_p,
            terms
                .into_iter()
                .map(|(e, c)| (Monomial::from_exponents(&e), Rational::from_int(c))),
        )
    })
}

fn field(n: usize) -> impl Strategy<Value = PolyVectorField> {
    prop::collection::vec(poly(n, 0, 2), n).prop_map(|c| PolyVectorField::new(c).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rational_field_axioms(a in rat(), b in rat(), c in rat()) {
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        if !b.is_zero() {
            prop_assert_eq!(&(&a / &b) * &b, a.clone());
        }
        let s = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<Rational>(&s).unwrap(), a);
    }

    #[test]
    fn rref_is_idempotent(m in small_matrix(4, 5)) {
        let (r, piv, rank) = rref(&m);
        let (r2, piv2, rank2) = rref(&r);
        prop_assert_eq!(r, r2);
        prop_assert_eq!(piv, piv2);
        prop_assert_eq!(rank, rank2);
        prop_assert_eq!(rank, m.rank());
    }

    #[test]
    fn subspace_is_canonical(m in small_matrix(3, 5), g in small_matrix(3, 3)) {
        // A change of spanning set with an invertible matrix keeps the subspace.
        prop_assume!(!g.det().is_zero());
        let a = Subspace::span(5, &m.row_vecs());
        let b = Subspace::span(5, &g.mul(&m).row_vecs());
        prop_assert_eq!(a.basis(), b.basis());
    }

    #[test]
    fn skew_double_complement(m in small_matrix(3, 6)) {
        let om = standard_form(6);
        let u = Subspace::span(6, &m.row_vecs());
        let c = u.skew_complement(&om).unwrap();
        prop_assert_eq!(c.dim() + u.dim(), 6);
        prop_assert_eq!(c.skew_complement(&om).unwrap(), u);
    }

    #[test]
    fn poisson_jacobi(f in poly(6, 3, 2), g in poly(6, 3, 2), h in poly(6, 3, 1)) {
        let pb = |a: &MPoly, b: &MPoly| poisson(a, b).unwrap();
        let j = &(&pb(&f, &pb(&g, &h)) + &pb(&g, &pb(&h, &f))) + &pb(&h, &pb(&f, &g));
        prop_assert!(j.is_zero());
        prop_assert_eq!(pb(&f, &g), -&pb(&g, &f));
    }

    #[test]
    fn bracket_jacobi(a in field(3), b in field(3), c in field(3)) {
        let br = |x: &PolyVectorField, y: &PolyVectorField| lie_bracket(x, y).unwrap();
        let j = br(&a, &br(&b, &c)).add(&br(&b, &br(&c, &a))).add(&br(&c, &br(&a, &b)));
        prop_assert!(j.is_zero());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn growth_invariant_under_constant_frame_change(g in small_matrix(3, 3), which in 0usize..3) {
        prop_assume!(!g.det().is_zero());
        let (k, l) = [(2, 0), (2, 1), (3, 0)][which];
        let d = realize_flat(k, l).unwrap().distribution;
        let gens: Vec<PolyVectorField> = (0..3)
            .map(|i| {
                let mut f = PolyVectorField::zero(d.ambient_dim);
                for (j, x) in d.generators.iter().enumerate() {
                    f.add_scaled(x, &g[(i, j)]);
                }
                f
            })
            .collect();
        let e = DistributionSpec::new(gens).unwrap();
        let q = vec![Rational::zero(); d.ambient_dim];
        prop_assert_eq!(growth_vector(&d, &q, 8).unwrap(), growth_vector(&e, &q, 8).unwrap());
    }

    #[test]
    fn flag_dims_homogeneous(seed in 0u64..1000, num in -5i64..6, den in 1i64..4) {
        prop_assume!(num != 0);
        let d = realize_flat(2, 1).unwrap().distribution;
        let lam = sample_covectors(&d, &vec![Rational::zero(); 7], 1, seed).unwrap();
        prop_assume!(!lam.is_empty());
        let r = flag_at(&d, &lam[0], None).unwrap();
        let s = flag_at(&d, &lam[0].scaled(&Rational::new(num, den)), None).unwrap();
        prop_assert_eq!(r.dims_hat, s.dims_hat);
        prop_assert_eq!(r.young, s.young);
        prop_assert!(r.jump_bounds && r.duality);
    }
}
