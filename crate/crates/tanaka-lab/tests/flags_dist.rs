use tanaka_lab::dist::{growth_vector, realize_flat, verify_brackets};
use tanaka_lab::exactla::Rational;
use tanaka_lab::flags::{
    build_model, distinguished_frame, exp_shift, is_quasisymplectic, p_quadrics, rank_filter, RankVerdict,
};
use tanaka_lab::poly::{hankel_minors, vanishing_ideal_piece, Variety};

#[test]
fn p_has_no_rank_two_for_22() {
    let rep = rank_filter(&p_quadrics(2, 2).unwrap(), 2);
    assert_eq!(rep.verdict, RankVerdict::CertifiedEmpty);
    let cert = rep.certificate.unwrap();
    assert_eq!(cert.rank, cert.columns);
}

#[test]
fn secant_ideals_are_hankel_minors() {
    // Points on the curve (s = 1) and secant lines (s = 2): (s+1)-minors.
    for (r, s, alpha) in [(4, 1, 1), (5, 1, 2), (6, 2, 2), (6, 2, 3)] {
        let ideal = vanishing_ideal_piece(r, Variety::secant(s, 0), s as u32 + 1).unwrap();
        let minors = hankel_minors(r, alpha, s + 1).unwrap();
        assert_eq!(ideal, minors, "r={r} s={s} alpha={alpha}");
    }
}

#[test]
fn moved_frames_stay_quasisymplectic() {
    for (k, l) in [(2, 0), (2, 1), (3, 2)] {
        let m = build_model(k, l).unwrap();
        let frame = distinguished_frame(&m);
        assert!(is_quasisymplectic(&frame, k, l, &m.sigma).unwrap().pass);
        // exp(tX) preserves σ, so the moved frame passes as well.
        let g = exp_shift(&m, &Rational::new(2, 3));
        let moved: Vec<Vec<Rational>> = frame.iter().map(|v| g.mul_vec(v)).collect();
        assert!(is_quasisymplectic(&moved, k, l, &m.sigma).unwrap().pass, "({k},{l})");
        let scaled = m.sigma.scale(&Rational::from_int(-3));
        assert!(is_quasisymplectic(&frame, k, l, &scaled).unwrap().pass);
    }
}

#[test]
fn flat_models_at_offset_points() {
    for (k, l) in [(2, 1), (3, 1), (3, 2)] {
        let fr = realize_flat(k, l).unwrap();
        // Cumulative dimensions of the grading of the algebra.
        let mut want = Vec::new();
        let mut acc = 0;
        for (_, d) in fr.algebra.graded_dims().iter().rev() {
            acc += d;
            want.push(acc);
        }
        verify_brackets(&fr.algebra.alg, &fr.fields).unwrap();
        let n = fr.distribution.ambient_dim;
        let q: Vec<Rational> = (0..n).map(|i| Rational::new(3 - i as i64, 2)).collect();
        assert_eq!(growth_vector(&fr.distribution, &q, 8).unwrap(), want, "({k},{l})");
    }
}
