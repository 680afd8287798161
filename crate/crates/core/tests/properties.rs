//! Randomized laws: scalar ring axioms, associativity of the free product,
//! normal forms, parity and the text round trip.

use proptest::prelude::*;
use superrtt::cli::parser::parse_element;
use superrtt::hopf::TensorElement;
use superrtt::{
    presentations, AlgebraElement, GrassmannScalar, Letter, Parity, Presentation,
    Strategy as Rewrite, Word,
};

const CASES: u32 = 1024;

fn cfg() -> ProptestConfig {
    ProptestConfig {
        cases: CASES,
        ..ProptestConfig::default()
    }
}

/// Even building blocks: small integers times a polynomial or a simple pole.
fn even_atom() -> impl Strategy<Value = GrassmannScalar> {
    let base = prop_oneof![
        Just(GrassmannScalar::one()),
        Just(GrassmannScalar::p()),
        Just(GrassmannScalar::q()),
        Just(GrassmannScalar::p().mul(&GrassmannScalar::q())),
        Just(
            GrassmannScalar::p()
                .sub(&GrassmannScalar::from_int(2))
                .inverse()
                .unwrap()
        ),
        Just(
            GrassmannScalar::q()
                .add(&GrassmannScalar::one())
                .inverse()
                .unwrap()
        ),
    ];
    (base, -3i64..=3).prop_map(|(b, n)| b.mul(&GrassmannScalar::from_int(n)))
}

fn basis(k: u8) -> GrassmannScalar {
    match k {
        0 => GrassmannScalar::one(),
        1 => GrassmannScalar::h1(),
        2 => GrassmannScalar::h2(),
        _ => GrassmannScalar::h1().mul(&GrassmannScalar::h2()),
    }
}

fn scalar() -> impl Strategy<Value = GrassmannScalar> {
    prop::collection::vec((even_atom(), 0u8..4), 1..4).prop_map(|parts| {
        parts
            .into_iter()
            .fold(GrassmannScalar::zero(), |acc, (c, k)| {
                acc.add(&c.mul(&basis(k)))
            })
    })
}

fn homogeneous_scalar(odd: bool) -> impl Strategy<Value = GrassmannScalar> {
    let ks: Vec<u8> = if odd { vec![1, 2] } else { vec![0, 3] };
    prop::collection::vec((even_atom(), prop::sample::select(ks)), 1..3).prop_map(|parts| {
        parts
            .into_iter()
            .fold(GrassmannScalar::zero(), |acc, (c, k)| {
                acc.add(&c.mul(&basis(k)))
            })
    })
}

fn word(names: &'static [&'static str], max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(prop::sample::select(names), 0..=max_len)
        .prop_map(|ns| Word(ns.into_iter().map(Letter::named).collect()))
}

fn element(
    names: &'static [&'static str],
    max_len: usize,
) -> impl Strategy<Value = AlgebraElement> {
    prop::collection::vec((scalar(), word(names, max_len)), 0..4).prop_map(|ts| {
        ts.into_iter().fold(AlgebraElement::zero(), |acc, (s, w)| {
            acc.add(&AlgebraElement::term(s, w))
        })
    })
}

/// Terms whose word parity plus scalar parity is always `odd`.
fn homogeneous_element(
    names: &'static [&'static str],
    max_len: usize,
    odd: bool,
) -> impl Strategy<Value = AlgebraElement> {
    prop::collection::vec(word(names, max_len), 1..4).prop_flat_map(move |ws| {
        let scalars: Vec<_> = ws
            .iter()
            .map(|w| homogeneous_scalar(w.parity().is_odd() != odd))
            .collect();
        (Just(ws), scalars).prop_map(|(ws, ss)| {
            ws.into_iter()
                .zip(ss)
                .fold(AlgebraElement::zero(), |acc, (w, s)| {
                    acc.add(&AlgebraElement::term(s, w))
                })
        })
    })
}

const GL: &[&str] = &["a", "beta", "gamma", "d"];
const PLANE: &[&str] = &["x", "xi"];
const CALC: &[&str] = &["x", "xi", "dx", "dxi"];

fn total_parity(e: &AlgebraElement) -> Option<Parity> {
    e.parity()
}

thread_local! {
    static GL_H: Presentation = presentations::gl_h1h2();
    static A_H1: Presentation = presentations::a_h1();
    static CALC_P: Presentation = superrtt::calculus::calculus_presentation().unwrap();
}

proptest! {
    #![proptest_config(cfg())]

    #[test]
    fn scalar_addition_is_an_abelian_group(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.add(&GrassmannScalar::zero()), a.clone());
        prop_assert!(a.add(&a.neg()).is_zero());
    }

    #[test]
    fn scalar_multiplication_is_associative_and_distributes(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.add(&b).mul(&c), a.mul(&c).add(&b.mul(&c)));
        prop_assert_eq!(a.mul(&GrassmannScalar::one()), a.clone());
        prop_assert_eq!(GrassmannScalar::one().mul(&a), a);
    }

    #[test]
    fn scalar_product_is_supercommutative(a in homogeneous_scalar(true), b in homogeneous_scalar(true), c in homogeneous_scalar(false)) {
        prop_assert_eq!(a.mul(&b), b.mul(&a).neg());
        prop_assert_eq!(a.mul(&c), c.mul(&a));
        prop_assert!(a.mul(&a).is_zero());
    }

    #[test]
    fn scalars_with_invertible_body_are_units(a in scalar()) {
        match a.inverse() {
            Some(inv) => {
                prop_assert!(a.mul(&inv).is_one());
                prop_assert!(inv.mul(&a).is_one());
            }
            None => prop_assert!(a.body().is_zero()),
        }
    }

    #[test]
    fn free_product_is_associative(x in element(GL, 3), y in element(GL, 3), z in element(GL, 3)) {
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
        prop_assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
    }

    #[test]
    fn normal_forms_are_idempotent_in_gl(e in element(GL, 4)) {
        GL_H.with(|p| {
            let nf = p.normal_form(&e).unwrap();
            prop_assert_eq!(p.normal_form(&nf).unwrap(), nf.clone());
            prop_assert!(nf.terms().all(|(w, _)| p.is_irreducible(w)));
            // confluent: the order of rewriting does not matter
            prop_assert_eq!(p.normal_form_with(&e, Rewrite::Rightmost).unwrap(), nf);
            Ok(())
        })?;
    }

    #[test]
    fn normal_forms_are_idempotent_on_the_plane(e in element(PLANE, 5)) {
        A_H1.with(|p| {
            let nf = p.normal_form(&e).unwrap();
            prop_assert_eq!(p.normal_form(&nf).unwrap(), nf.clone());
            prop_assert_eq!(p.normal_form_with(&e, Rewrite::Rightmost).unwrap(), nf);
            Ok(())
        })?;
    }

    #[test]
    fn normal_forms_are_idempotent_in_the_calculus(e in element(CALC, 3)) {
        CALC_P.with(|p| {
            let nf = p.normal_form(&e).unwrap();
            prop_assert_eq!(p.normal_form(&nf).unwrap(), nf);
            Ok(())
        })?;
    }

    #[test]
    fn reduction_keeps_parity(odd in any::<bool>(), e in homogeneous_element(GL, 4, true), f in homogeneous_element(GL, 4, false)) {
        let e = if odd { e } else { f };
        let want = if odd { Parity::Odd } else { Parity::Even };
        prop_assume!(!e.is_zero());
        prop_assert_eq!(total_parity(&e), Some(want));
        GL_H.with(|p| {
            let nf = p.normal_form(&e).unwrap();
            prop_assert!(nf.is_zero() || total_parity(&nf) == Some(want), "{} -> {}", e, nf);
            Ok(())
        })?;
    }

    #[test]
    fn reduction_keeps_parity_in_the_calculus(e in homogeneous_element(CALC, 3, true)) {
        prop_assume!(!e.is_zero());
        CALC_P.with(|p| {
            let nf = p.normal_form(&e).unwrap();
            prop_assert!(nf.is_zero() || total_parity(&nf) == Some(Parity::Odd), "{} -> {}", e, nf);
            Ok(())
        })?;
    }

    #[test]
    fn printing_then_parsing_is_the_identity(e in element(GL, 4)) {
        let back = parse_element(&e.to_string(), None).unwrap();
        prop_assert_eq!(back, e);
    }

    #[test]
    fn graded_tensor_product_is_associative(
        a in element(GL, 2), b in element(GL, 2), c in element(GL, 2),
        d in element(GL, 2), e in element(GL, 2), f in element(GL, 2),
    ) {
        let x = TensorElement::of(&[a, b]);
        let y = TensorElement::of(&[c, d]);
        let z = TensorElement::of(&[e, f]);
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
    }

    #[test]
    fn koszul_sign_matches_a_transposition_count(items in prop::collection::vec(0usize..6, 1..7)) {
        // 0..4 generators (beta, gamma odd), 4 = h1, 5 = h2
        const NAMES: [&str; 4] = ["a", "beta", "gamma", "d"];
        let mut product = AlgebraElement::one();
        let mut letters = Vec::new();
        let mut hs = Vec::new();
        let mut sign = 1i64;
        let mut odd_seen = 0;
        for &i in &items {
            if i < 4 {
                product = product.mul(&AlgebraElement::named(NAMES[i]));
                letters.push(Letter::named(NAMES[i]));
                if i == 1 || i == 2 {
                    odd_seen += 1;
                }
            } else {
                let h = if i == 4 { GrassmannScalar::h1() } else { GrassmannScalar::h2() };
                product = product.mul(&AlgebraElement::scalar(h));
                if odd_seen % 2 == 1 {
                    sign = -sign;
                }
                hs.push(i);
            }
        }
        // order the odd parameters themselves: h2 before h1 costs a sign
        let mut coeff = GrassmannScalar::from_int(sign);
        let repeated = hs.iter().filter(|&&i| i == 4).count() > 1 || hs.iter().filter(|&&i| i == 5).count() > 1;
        if repeated {
            coeff = GrassmannScalar::zero();
        } else if hs == [5, 4] {
            coeff = coeff.neg().mul(&GrassmannScalar::h1().mul(&GrassmannScalar::h2()));
        } else {
            for &i in &hs {
                coeff = coeff.mul(&if i == 4 { GrassmannScalar::h1() } else { GrassmannScalar::h2() });
            }
        }
        prop_assert_eq!(product, AlgebraElement::term(coeff, Word(letters)));
    }
}
