use super::matrix::{column_path, COLUMN_PATHS};
use super::relations::*;
use super::skein::SeededRandom;
use super::trace::markov_trace_with;
use super::*;
use crate::report::all_pass;
use crate::scalars::AlgebraParams;

fn bmw() -> AlgebraParams {
    AlgebraParams::bmw()
}

#[test]
fn two_strand_generators() {
    let p = bmw();
    let g = Generators::build(2, &p).unwrap();
    assert_eq!(g.e[0].get(0, 0), &p.tau);
    assert_eq!(g.t[0].get(0, 0), &p.a);
    assert!(g.sigma().get(0, 0).is_one());
}

#[test]
fn reference_matrices_n4() {
    let p = bmw();
    let g = Generators::build(4, &p).unwrap();
    let refs = reference_h4(&p);
    let find = |name: &str| &refs.iter().find(|r| r.0 == name).unwrap().1;
    assert!(matches_reference(&g.e[0], find("e1")), "e1 {:?}", g.e[0]);
    assert!(matches_reference(&g.e[2], find("e1")), "e3 {:?}", g.e[2]);
    assert!(matches_reference(&g.e[1], find("e2")), "e2 {:?}", g.e[1]);
    assert!(matches_reference(&g.t[0], find("t1")), "t1 {:?}", g.t[0]);
    assert!(matches_reference(&g.t[2], find("t1")), "t3 {:?}", g.t[2]);
    assert!(matches_reference(&g.t[1], find("t2")), "t2 {:?}", g.t[1]);
    assert!(matches_reference(&g.sigma(), find("sigma")), "sigma {:?}", g.sigma());
    let (t4, e4) = affine_generators(&g);
    assert!(matches_reference(&t4, find("t2")));
    assert!(matches_reference(&e4, find("e2")));
}

#[test]
fn both_column_paths_agree() {
    let p = bmw();
    for n in [4, 6] {
        for i in 1..n {
            for g in [Letter::T(i), Letter::TInv(i), Letter::E(i)] {
                let ms: Vec<_> = COLUMN_PATHS
                    .iter()
                    .map(|name| word_matrix(n, &[g], &p, column_path(name).unwrap().as_ref()).unwrap())
                    .collect();
                assert_eq!(ms[0], ms[1], "{g} at n={n}");
            }
        }
    }
}

#[test]
fn word_diagrams_reduce_to_their_matching() {
    let p = bmw();
    for n in [2, 4, 6] {
        let id = word_matrix(n, &[], &p, &matrix::StackedWord).unwrap();
        assert_eq!(id, OpMatrix::identity(n, enumerate_basis(n).unwrap()).with_label("1"));
    }
}

#[test]
fn relations_hold_n4() {
    let g = Generators::build(4, &bmw()).unwrap();
    all_pass(&relation_suite(&g)).unwrap();
    all_pass(&mirror_suite(&g)).unwrap();
    all_pass(&[sigma_shift_suite(&g), sigma_triangularity(&g), module_generation(&g)]).unwrap();
    for i in 1..4 {
        all_pass(&[block_structure(&g, i)]).unwrap();
    }
}

#[test]
fn rewrite_order_does_not_matter() {
    let p = bmw();
    let words = [
        "t1 t2 t1 t3^-1 e2",
        "t2 t1^-1 t2 t1",
        "e1 t2 t2 t3 t1^-1",
        "t1 t1 t2^-1 t2^-1",
    ];
    for w in words {
        let w = parse_word(w).unwrap();
        let reference = markov_trace(4, &w, &p).unwrap();
        for seed in 0..4 {
            let v = markov_trace_with(4, &w, &p, &mut SeededRandom::new(seed)).unwrap();
            assert_eq!(v, reference);
        }
    }
    let rho = Matching::maximally_crossed(6).unwrap();
    let d = TangleBuilder::arcs(&rho, true);
    let mut d = d.clone();
    d.apply_word(&parse_word("t2 t3^-1 t4 e1").unwrap()).unwrap();
    let d = d.finish();
    let reference = skein_reduce(&d, &p, &mut FirstBad);
    for seed in 0..4 {
        assert_eq!(skein_reduce(&d, &p, &mut SeededRandom::new(seed)), reference);
    }
}

#[test]
fn trace_values() {
    let p = bmw();
    let tau_a = &p.tau * &p.a;
    assert!(markov_trace(3, &[], &p).unwrap().is_one());
    assert_eq!(markov_trace(2, &[Letter::T(1)], &p).unwrap(), tau_a.inv().unwrap());
    assert_eq!(markov_trace(2, &[Letter::E(1)], &p).unwrap(), p.tau.inv().unwrap());
    assert_eq!(markov_trace(2, &[Letter::TInv(1)], &p).unwrap(), (&p.tau * &p.a.inv().unwrap()).inv().unwrap());
}

#[test]
fn scalar_products() {
    let p = bmw();
    let g2 = Generators::build(2, &p).unwrap();
    let w = ReducedWord::new(2, vec![]).unwrap();
    assert_eq!(scalar_product(&g2, &w, &w).unwrap(), p.tau);
    let g = Generators::build(4, &p).unwrap();
    let words = ReducedWord::all(4).unwrap();
    for w1 in &words {
        for w2 in &words {
            let x = scalar_product(&g, w1, w2).unwrap();
            let y = scalar_product(&g, w2, w1).unwrap();
            assert_eq!(x, y.invert_params());
        }
    }
}

#[test]
fn sigma_squared_inverse_fixes_alpha() {
    let g = Generators::build(4, &bmw()).unwrap();
    let si = sigma_inverse(&g);
    let alpha = AlgebraElement::basis(Matching::alpha(4).unwrap());
    assert_eq!(si.mul(&si).apply(&alpha), alpha);
}

#[test]
fn markov_properties() {
    for n in [2, 4, 6] {
        let out = markov_checks(n, &bmw(), 20, n as u64).unwrap();
        all_pass(&out).unwrap();
    }
    all_pass(&markov_checks(4, &AlgebraParams::brauer(), 20, 1).unwrap()).unwrap();
}
