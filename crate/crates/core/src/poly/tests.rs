use super::*;
use crate::scalars::Mode;
use num_bigint::BigInt;

fn z(n: usize, i: usize) -> Poly {
    Poly::var(n, i)
}

fn q() -> Scalar {
    Scalar::x()
}

#[test]
fn b_forms_expand() {
    let b12 = b_form(2, 1, 2, Mode::Bmw);
    let b21 = b_form(2, 2, 1, Mode::Bmw);
    // q^2 z1 z2 - z1^2 - z2^2 + q^-2 z1 z2
    let expect = poly_from(
        2,
        &[
            (q().pow(2) + q().pow(-2), &[1, 1]),
            (-Scalar::one(), &[2, 0]),
            (-Scalar::one(), &[0, 2]),
        ],
    );
    assert_eq!(&b12 * &b21, expect);
    let (z1, z2) = (z(2, 1), z(2, 2));
    assert_eq!(&(&z1 - &z2) * &(&z1 + &z2), &(&z1 * &z1) - &(&z2 * &z2));
    assert_eq!(&b12 + &Poly::zero(2), b12);
}

#[test]
fn cyclic_wrap() {
    // q z4 - q^-1 z5 with z5 = a^-2 z1 = p^2 q^4 z1
    let b45 = b_form(4, 4, 5, Mode::Bmw);
    let expect = &z(4, 4).scale(&q()) - &z(4, 1).scale(&Scalar::laurent(&[(1, 3, 2)]));
    assert_eq!(b45, expect);
    let u = b_form(4, 4, 5, Mode::Brauer);
    let expect = &(&z(4, 4) - &z(4, 1)) + &Poly::constant(4, -(Scalar::x() + Scalar::y()));
    assert_eq!(u, expect);
}

#[test]
fn linear_division() {
    let b12 = b_form(3, 1, 2, Mode::Bmw);
    let f = &b12 * &z(3, 3);
    assert_eq!(f.div_linear(&b12).unwrap(), z(3, 3));
    let g = &z(3, 1) + &z(3, 2);
    assert!(matches!(g.div_linear(&b12), Err(Error::NotDivisible { .. })));
    let h = &(&b12 * &b12) * &(&z(3, 1) - &z(3, 3).scale(&Scalar::y()));
    assert_eq!(h.div_linear(&b12).unwrap().div_linear(&b12).unwrap(), &z(3, 1) - &z(3, 3).scale(&Scalar::y()));
}

#[test]
fn substitutions() {
    let f = &(&z(3, 1) * &z(3, 2)) + &z(3, 3).pow(2);
    let g = f.substitute_scaled(2, 1, &q().pow(2));
    assert_eq!(g, &z(3, 1).pow(2).scale(&q().pow(2)) + &z(3, 3).pow(2));
    let s = f.substitute(3, &(&z(3, 1) + &Poly::constant(3, Scalar::x())));
    let expect = &(&(&z(3, 1) * &z(3, 2)) + &z(3, 1).pow(2))
        + &(&z(3, 1).scale(&(Scalar::x() * Scalar::integer(2))) + &Poly::constant(3, Scalar::x().pow(2)));
    assert_eq!(s, expect);
    assert_eq!(f.swap(1, 3), &(&z(3, 3) * &z(3, 2)) + &z(3, 1).pow(2));
    let r = z(3, 3).rename(1, &[0, 0, 1]).unwrap();
    assert_eq!(r, z(1, 1));
    assert!(z(3, 2).rename(1, &[0, 0, 1]).is_err());
}

#[test]
fn evaluation_and_degrees() {
    let f = &b_form(2, 1, 2, Mode::Bmw) * &z(2, 1);
    assert_eq!(f.homogeneous_degree(), Some(2));
    let r = |n: i64| num_rational::BigRational::from_integer(BigInt::from(n));
    // (2*3 - 5/2) * 3 = 21/2
    let v = f.eval(&r(2), &r(7), &[r(3), r(5)]).unwrap();
    assert_eq!(v, num_rational::BigRational::new(21.into(), 2.into()));
    assert_eq!(f.leading().unwrap().0[..2], [2, 0]);
    assert_eq!(f.to_string(), "q*z1^2 - q^-1*z1*z2");
}

#[test]
fn shifted_substitution_matches_sequential() {
    let n = 4;
    let f = &(&(&Poly::var(n, 2) * &Poly::var(n, 2)) * &Poly::var(n, 3)) + &(&Poly::var(n, 1) * &Poly::var(n, 4)).scale(&Scalar::x());
    let (s, t) = (Scalar::x(), &Scalar::y() + &Scalar::integer(2));
    let step = |g: &Poly, j: usize, c: &Scalar| g.substitute(j, &(&Poly::var(n, 1) + &Poly::constant(n, c.clone())));
    let sequential = step(&step(&f, 2, &s), 3, &t);
    assert_eq!(f.substitute_shifted(1, &[(2, s.clone()), (3, t.clone())]), sequential);
}
