use tanaka_lab::exactla::MatQ;
use tanaka_lab::flags::{build_model, build_poisson_g, build_symbol, symbol_parts};
use tanaka_lab::liecore::{
    csp_algebra, default_anchor, heisenberg_extend, modified_prolongation, modified_tower,
    prolongations_agree, standard_form, standard_prolongation, tanaka_prolongation, LinMapSpace,
};

fn tanaka_for(k: usize, l: usize) -> tanaka_lab::liecore::TanakaProlongation {
    let m = build_model(k, l).unwrap();
    let s = build_symbol(k, l).unwrap();
    let h = heisenberg_extend(m.dim(), &m.sigma).unwrap();
    tanaka_prolongation(&h, &s, Some(m.r)).unwrap()
}

#[test]
fn so43_dimensions() {
    let t = tanaka_for(2, 0);
    assert_eq!(t.positive_dims(), vec![6, 1, 0]);
    assert_eq!(t.total(), 21);
}

#[test]
fn rectangular_rigid() {
    for k in [3, 4] {
        let t = tanaka_for(k, 0);
        assert_eq!(t.positive_dims(), vec![0]);
        assert_eq!(t.total(), 4 * k + 6);
        let m = build_model(k, 0).unwrap();
        let (u, v) = default_anchor(&m.sigma).unwrap();
        let s = build_symbol(k, 0).unwrap();
        assert_eq!(modified_prolongation(&s, &m.sigma, (&u, &v)).unwrap().dim(), 0);
    }
}

#[test]
fn poisson_totals_match_tanaka() {
    for (k, l) in [(2, 1), (2, 2)] {
        let t = tanaka_for(k, l);
        let p = build_poisson_g(k, l).unwrap();
        assert!(t.is_finite());
        assert_eq!(t.total(), p.dim(), "({k},{l}) tanaka {:?}", t.per_degree());
    }
}

#[test]
fn agreement_lemma() {
    for (k, l, depth) in [(2, 0, 3), (2, 1, 4)] {
        let m = build_model(k, l).unwrap();
        let s = build_symbol(k, l).unwrap();
        let rep = prolongations_agree(&s, &m.sigma, depth).unwrap();
        assert!(rep.all_equal, "{rep:?}");
    }
}

#[test]
fn modified_equals_standard_of_p() {
    for (k, l) in [(2, 1), (2, 2), (3, 1)] {
        let (m, parts) = symbol_parts(k, l).unwrap();
        let s = build_symbol(k, l).unwrap();
        let p = LinMapSpace::span(m.dim(), m.dim(), &parts.p);
        let (u, v) = default_anchor(&m.sigma).unwrap();
        let md = modified_prolongation(&s, &m.sigma, (&u, &v)).unwrap();
        // p-coordinates → s-coordinates
        let cols: Vec<Vec<_>> = p.basis().iter().map(|a| s.coordinates(a).unwrap()).collect();
        let emb = MatQ::from_cols(s.dim(), &cols);
        let st = standard_prolongation(&p).push_forward(&emb);
        assert_eq!(md, st, "({k},{l})");
    }
}

#[test]
fn csp4_tower_is_contact_algebra() {
    let om = standard_form(4);
    let w = csp_algebra(&om);
    let (u, v) = default_anchor(&om).unwrap();
    let tower = modified_tower(&w, &om, (&u, &v), 2).unwrap();
    let dims: Vec<usize> = tower.iter().map(|s| s.dim()).collect();
    let h = heisenberg_extend(4, &om).unwrap();
    let t = tanaka_prolongation(&h, &w, Some(2)).unwrap();
    assert_eq!(dims, vec![11, 24, 46]);
    assert_eq!(t.positive_dims(), vec![24, 46]);
}
