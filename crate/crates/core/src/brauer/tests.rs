use super::*;
use crate::poly::Poly;
use crate::polyrep::{default_route, generate_basis, tbar_route, verify_duality, Flavor, TBAR_ROUTES};
use crate::Scalar;

#[test]
fn link_relations() {
    for n in [4, 6] {
        let g = link_generators(n).unwrap();
        for a in brauer_relation_suite(&g) {
            println!("n={n} {a}");
            assert!(a.passed(), "n={n} {a}");
        }
    }
}

#[test]
fn rho_and_property() {
    assert_eq!(brauer_rho_bar(2).unwrap(), Poly::one(2));
    let rho = brauer_rho_bar(4).unwrap();
    assert_eq!(rho, rho4_reference());
    assert!(brauer_property_p(&rho).passed());
    assert!(!brauer_property_p(&Poly::one(4)).passed());
    assert!(brauer_property_p(&Poly::one(2)).passed());
    assert_eq!(brauer_rho_bar(6).unwrap().homogeneous_degree(), None);
}

#[test]
fn basis_duality_and_top_forms() {
    let fl = Flavor::brauer();
    for n in [2, 4, 6] {
        let v = generate_basis(&fl, n, default_route().as_ref()).unwrap();
        for (m, f) in v.entries() {
            assert!(brauer_property_p(f).passed(), "{m}");
        }
        let a = brauer_highest_monomial_check(&v).unwrap();
        assert!(a.passed(), "n={n} {a}");
        if n >= 4 {
            let g = link_generators(n).unwrap();
            for a in verify_duality(&fl, &g, &v, default_route().as_ref()) {
                assert!(a.passed(), "n={n} {a}");
            }
        }
    }
}

#[test]
fn affine_relations_and_projector() {
    for name in TBAR_ROUTES {
        let a = degenerate_affine_check(tbar_route(name).unwrap().as_ref(), 4, 60, 7).unwrap();
        assert!(a.passed(), "{a}");
    }
    let a = ebar_projector_check(4, 50, 3).unwrap();
    assert!(a.passed(), "{a}");
}

#[test]
fn yang_baxter_rational() {
    let fl = Flavor::brauer();
    let g = link_generators(4).unwrap();
    for i in 1..4 {
        let a = brauer_unitarity_symbolic(&g, i);
        assert!(a.passed(), "{a}");
    }
    assert!(brauer_yang_baxter_matrix(&g, 1, &Scalar::zero()).unwrap().sub(&g.identity()).is_zero());
    let a = brauer_braid_check(&g, 20, 5).unwrap();
    assert!(a.passed(), "{a}");
    let v = generate_basis(&fl, 4, default_route().as_ref()).unwrap();
    let (a, opposite) = brauer_exchange_check(&g, &v, 20, 5).unwrap();
    println!("{a} opposite failures {opposite}");
    assert!(a.passed(), "{a}");
}

#[test]
fn sn_factorization_rational() {
    let fl = Flavor::brauer();
    for n in [4, 6] {
        for a in crate::polyrep::sn_factorization_check(&fl, default_route().as_ref(), n).unwrap() {
            println!("n={n} {a}");
            assert!(a.passed(), "n={n} {a}");
        }
    }
}
