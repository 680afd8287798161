//! Built-in presentations, stored in the presentation file format.
//!
//! Primed generators (`x'`, `a'`, ...) belong to the (p,q)-deformed objects,
//! unprimed ones to their h-deformed contractions.

use crate::algebra::Presentation;
use crate::cli::format::parse_presentation;
use crate::error::{Error, Result};
use crate::scalars::{GrassmannScalar, OddParam};

pub const A_P: &str = "\
presentation A_p
generators x':even xi':odd
relation x'*xi' = p*xi'*x'
relation xi'^2 = 0
";

pub const ASTAR_Q: &str = "\
presentation Astar_q
generators eta':odd y':even
relation eta'^2 = 0
relation eta'*y' = q^-1*y'*eta'
";

pub const LAMBDA_Q: &str = "\
presentation Lambda_q
generators phi':even u':odd
relation phi'^2 = 0
relation phi'*u' = -q^-1*u'*phi'
";

pub const GL_PQ: &str = "\
presentation GL_pq
generators a':even beta':odd gamma':odd d':even
relation a'*beta' = q*beta'*a'
relation a'*gamma' = p*gamma'*a'
relation beta'^2 = 0
relation d'*beta' = q*beta'*d'
relation d'*gamma' = p*gamma'*d'
relation gamma'^2 = 0
relation beta'*gamma' = -p/q*gamma'*beta'
relation a'*d' = d'*a' + (p - q^-1)*gamma'*beta'
";

pub const A_H1: &str = "\
presentation A_h1
generators x:even xi:odd
relation x*xi = xi*x + h1*x^2
relation xi^2 = -h1*x*xi
";

pub const ASTAR_H2: &str = "\
presentation Astar_h2
generators eta:odd y:even
relation eta^2 = -h2*eta*y
relation eta*y = y*eta - h2*y^2
";

pub const LAMBDA_H2: &str = "\
presentation Lambda_h2
generators phi:even u:odd
relation phi^2 = h2*phi*u
relation u*phi + phi*u = -h2*u^2
";

pub const GL_H1H2: &str = "\
presentation GL_h1h2
generators a:even beta:odd gamma:odd d:even
relation a*beta = beta*a - h2*(a^2 - beta*gamma - a*d)
relation d*beta = beta*d + h2*(d^2 + beta*gamma - d*a)
relation a*gamma = gamma*a + h1*(a^2 + gamma*beta - a*d)
relation d*gamma = gamma*d - h1*(d^2 - gamma*beta - d*a)
relation beta^2 = h2*beta*(a - d)
relation gamma^2 = h1*gamma*(d - a)
relation beta*gamma = -gamma*beta + (h1*beta - h2*gamma)*(d - a)
relation a*d = d*a + (h1*beta + h2*gamma)*(a - d) - h1*h2*(a^2 - 2*d*a + d^2)
";

/// The same algebra with the last relation written without `h1*h2`.
pub const GL_H1H2_ALT: &str = "\
presentation GL_h1h2_alt
generators a:even beta:odd gamma:odd d:even
relation a*beta = beta*a - h2*(a^2 - beta*gamma - a*d)
relation d*beta = beta*d + h2*(d^2 + beta*gamma - d*a)
relation a*gamma = gamma*a + h1*(a^2 + gamma*beta - a*d)
relation d*gamma = gamma*d - h1*(d^2 - gamma*beta - d*a)
relation beta^2 = h2*beta*(a - d)
relation gamma^2 = h1*gamma*(d - a)
relation beta*gamma = -gamma*beta + (h1*beta - h2*gamma)*(d - a)
relation a*d = d*a + h1*beta*(a - d) + h2*(a - d)*gamma
";

/// Names accepted by [`builtin`].
pub const NAMES: &[&str] = &[
    "A_p",
    "Astar_q",
    "Lambda_q",
    "GL_pq",
    "A_h1",
    "Astar_h2",
    "Lambda_h2",
    "GL_h1h2",
    "GL_h1h2_alt",
    "GL_h1",
    "GL_h1h2_loc",
    "Calc_h1h2",
];

fn text(name: &str) -> Option<&'static str> {
    Some(match name {
        "A_p" => A_P,
        "Astar_q" => ASTAR_Q,
        "Lambda_q" => LAMBDA_Q,
        "GL_pq" => GL_PQ,
        "A_h1" => A_H1,
        "Astar_h2" => ASTAR_H2,
        "Lambda_h2" => LAMBDA_H2,
        "GL_h1h2" => GL_H1H2,
        "GL_h1h2_alt" => GL_H1H2_ALT,
        _ => return None,
    })
}

/// Loads a built-in presentation by name.
pub fn builtin(name: &str) -> Result<Presentation> {
    if let Some(t) = text(name) {
        return parse_presentation(t);
    }
    match name {
        "GL_h1" => gl_h1(),
        "GL_h1h2_loc" => crate::hopf::localized(),
        "Calc_h1h2" => crate::calculus::calculus_presentation(),
        _ => Err(Error::UnknownPresentation(name.to_string())),
    }
}

pub fn a_p() -> Presentation {
    builtin("A_p").expect("built-in")
}

pub fn astar_q() -> Presentation {
    builtin("Astar_q").expect("built-in")
}

pub fn lambda_q() -> Presentation {
    builtin("Lambda_q").expect("built-in")
}

pub fn gl_pq() -> Presentation {
    builtin("GL_pq").expect("built-in")
}

pub fn a_h1() -> Presentation {
    builtin("A_h1").expect("built-in")
}

pub fn astar_h2() -> Presentation {
    builtin("Astar_h2").expect("built-in")
}

pub fn lambda_h2() -> Presentation {
    builtin("Lambda_h2").expect("built-in")
}

pub fn gl_h1h2() -> Presentation {
    builtin("GL_h1h2").expect("built-in")
}

pub fn gl_h1h2_alt() -> Presentation {
    builtin("GL_h1h2_alt").expect("built-in")
}

/// The one-parameter algebra: `h2 = 0` in the two-parameter relations.
pub fn gl_h1() -> Result<Presentation> {
    gl_h1h2().specialize("GL_h1", |s: &GrassmannScalar| s.kill(OddParam::H2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraElement;
    use crate::cli::parser::parse_element;

    fn reduce(p: &Presentation, text: &str) -> String {
        p.normal_form(&parse_element(text, None).unwrap())
            .unwrap()
            .to_string()
    }

    #[test]
    fn superplane_normal_forms() {
        let p = a_h1();
        assert_eq!(reduce(&p, "xi*x"), "x*xi - h1*x^2");
        assert_eq!(reduce(&p, "xi*xi"), "-h1*x*xi");
        assert_eq!(reduce(&p, "x*x"), "x^2");
    }

    #[test]
    fn supergroup_relations_reduce_to_zero() {
        let p = gl_h1h2();
        for rel in [
            "beta*gamma + gamma*beta - (h1*beta - h2*gamma)*(d - a)",
            "a*d - d*a - (h1*beta + h2*gamma)*(a - d) + h1*h2*(a^2 - 2*d*a + d^2)",
        ] {
            assert_eq!(reduce(&p, rel), "0", "{rel}");
        }
    }

    #[test]
    fn every_builtin_loads() {
        for name in NAMES {
            let p = builtin(name).unwrap_or_else(|e| panic!("{name}: {e}"));
            for r in p.relations() {
                assert!(p.normal_form(&r).unwrap().is_zero());
            }
        }
        assert!(matches!(
            builtin("nope"),
            Err(Error::UnknownPresentation(_))
        ));
    }

    #[test]
    fn rules_are_oriented_out_of_order() {
        let p = gl_h1h2();
        let lhs: Vec<String> = p.rules().iter().map(|r| r.lhs.to_string()).collect();
        for w in [
            "beta*a",
            "gamma*a",
            "d*a",
            "d*beta",
            "d*gamma",
            "gamma*beta",
            "beta^2",
            "gamma^2",
        ] {
            assert!(lhs.contains(&w.to_string()), "{w} missing from {lhs:?}");
        }
        assert!(
            p.normal_form(&AlgebraElement::monomial(&["a", "d"]))
                .unwrap()
                == AlgebraElement::monomial(&["a", "d"])
        );
    }
}
