use std::collections::HashMap;

use num_bigint::BigInt;
use proptest::prelude::*;

use surftutte::poly::{Image, Monomial, MultiPoly, PolyError, Rational, Style, Var};

const VARS: [Var; 5] = [Var::X, Var::Y, Var::A, Var::Xg(-1), Var::Yg(2)];

fn poly_strategy() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((-5i64..=5, prop::collection::vec(0u32..3, VARS.len())), 0..6).prop_map(
        |terms| {
            let mut p = MultiPoly::zero();
            for (c, exps) in terms {
                let m = Monomial::from_powers(VARS.iter().copied().zip(exps));
                p.add_term(m, BigInt::from(c));
            }
            p
        },
    )
}

fn values_strategy() -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((-4i64..=4, 1i64..=3), VARS.len())
}

fn assignment(values: &[(i64, i64)]) -> HashMap<Var, Rational> {
    VARS.iter()
        .zip(values)
        .map(|(&v, &(n, d))| (v, Rational::new(n.into(), d.into())))
        .collect()
}

proptest! {
    #[test]
    fn ring_laws(a in poly_strategy(), b in poly_strategy(), c in poly_strategy()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &MultiPoly::one(), a.clone());
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(-(-a.clone()), a.clone());
        prop_assert_eq!(a.pow(2), &a * &a);
    }

    #[test]
    fn evaluation_is_a_ring_map(a in poly_strategy(), b in poly_strategy(), vals in values_strategy()) {
        let asg = assignment(&vals);
        let zero = Rational::from_integer(0.into());
        let ev = |p: &MultiPoly| p.eval(&asg, &zero);
        prop_assert_eq!(ev(&(&a + &b)), ev(&a) + ev(&b));
        prop_assert_eq!(ev(&(&a * &b)), ev(&a) * ev(&b));
    }

    #[test]
    fn substitution_then_evaluation(a in poly_strategy(), image in poly_strategy(), vals in values_strategy()) {
        let asg = assignment(&vals);
        let zero = Rational::from_integer(0.into());
        let substituted = a
            .substitute(|v| (v == Var::Xg(-1)).then(|| Image::poly(image.clone())))
            .unwrap();
        let mut inner = asg.clone();
        inner.insert(Var::Xg(-1), image.eval(&asg, &zero));
        prop_assert_eq!(substituted.eval(&asg, &zero), a.eval(&inner, &zero));
    }

    #[test]
    fn linear_division_inverts_multiplication(a in poly_strategy(), c in -3i64..=3, times in 0u32..3) {
        let factor = (MultiPoly::var(Var::X) - MultiPoly::constant(c)).pow(times);
        let product = &a * &factor;
        prop_assert_eq!(product.div_linear(Var::X, &BigInt::from(c), times).unwrap(), a);
    }
}

#[test]
fn shifts_cancel_or_fail() {
    let x = MultiPoly::var(Var::X);
    let xg = MultiPoly::var(Var::Xg(1));
    let p = &x.pow(2) * &xg;
    let shifted = p
        .substitute(|v| {
            (v == Var::Xg(1)).then(|| Image {
                poly: MultiPoly::var(Var::Xg(1)),
                x_shift: -2,
                y_shift: 0,
            })
        })
        .unwrap();
    assert_eq!(shifted, MultiPoly::var(Var::Xg(1)));
    let err = xg
        .substitute(|v| {
            (v == Var::Xg(1)).then(|| Image {
                poly: MultiPoly::one(),
                x_shift: -1,
                y_shift: 0,
            })
        })
        .unwrap_err();
    assert_eq!(err, PolyError::NegativeExponentRemains(Var::X));
}

#[test]
fn division_reports_remainders() {
    let p = MultiPoly::var(Var::X) + MultiPoly::one();
    assert!(p.div_linear(Var::X, &BigInt::from(1), 1).is_err());
}

#[test]
fn text_forms() {
    let p = &MultiPoly::var(Var::Y) * &MultiPoly::var(Var::Yg(-1))
        + MultiPoly::var(Var::A)
        + MultiPoly::constant(-3);
    assert_eq!(p.to_string(), "-3 + a + y*yg(-1)");
    assert_eq!(p.fmt_with(Style::Upper), "-3 + alpha + Y*yg(-1)");
    assert_eq!(MultiPoly::zero().to_string(), "0");
    let q = MultiPoly::term(2, Monomial::from_powers([(Var::Xg(0), 2), (Var::X, 1)]));
    assert_eq!(q.to_string(), "2*x*x0^2");
}
