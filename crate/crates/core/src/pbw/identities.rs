//! Named identities between normal forms in the built-in algebras.

use std::sync::Arc;

use serde::Serialize;

use super::checks::{hom_check, is_central, q_normality, quotient_check, AlgebraHom};
use super::{builtin_presentation, AlgebraElement, Presentation};
use crate::error::{Error, Result};
use crate::scalar::{BigInt, BigRat};

/// One registered identity.
pub struct Identity {
    pub name: &'static str,
    pub description: &'static str,
    check: fn() -> Result<bool>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdentityOutcome {
    pub name: String,
    pub description: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

fn alg(name: &str) -> Result<Arc<Presentation>> {
    builtin_presentation(name)
}

fn el(p: &Arc<Presentation>, text: &str) -> Result<AlgebraElement> {
    AlgebraElement::parse(p, text)
}

/// Both sides normalize to the same element.
fn same(algebra: &str, lhs: &str, rhs: &str) -> Result<bool> {
    let p = alg(algebra)?;
    Ok(el(&p, lhs)? == el(&p, rhs)?)
}

fn central(algebra: &str, text: &str) -> Result<bool> {
    let p = alg(algebra)?;
    is_central(&el(&p, text)?)
}

fn normal_with(algebra: &str, text: &str, lambdas: &[(&str, &str)]) -> Result<bool> {
    let p = alg(algebra)?;
    let r = q_normality(&el(&p, text)?)?;
    if !r.is_normal() {
        return Ok(false);
    }
    for (g, l) in lambdas {
        if r.lambda(g) != Some(&super::parse_scalar(l)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

const GRID: [(i64, i64); 5] = [(1, 1), (2, 1), (-3, 1), (1, 2), (-5, 3)];

fn rational((n, d): (i64, i64)) -> BigRat {
    BigRat::new(BigInt::from(n), BigInt::from(d))
}

fn coeff_text(r: &BigRat) -> String {
    format!("({})", r)
}

/// ψ_{α,β}: e1 ↦ αe1, e2 ↦ βe2 on b2 over a grid of nonzero rationals.
fn torus_action_b2() -> Result<bool> {
    let b2 = alg("b2")?;
    for &a in &GRID {
        for &b in &GRID {
            let (a, b) = (rational(a), rational(b));
            let h = AlgebraHom::new(
                &b2,
                &b2,
                &[("e1", &format!("{}*e1", coeff_text(&a))), ("e2", &format!("{}*e2", coeff_text(&b)))],
            )?;
            let rep = hom_check(&h)?;
            let ab = &a * &b;
            let abb = &ab * &b;
            let aabb = &ab * &ab;
            let e3 = el(&b2, &format!("{}*e3", coeff_text(&ab)))?;
            let z = el(&b2, &format!("{}*z", coeff_text(&abb)))?;
            let zp = el(&b2, "z'")?.scale(&aabb.into());
            if !rep.passed() || rep.images[1] != e3 || rep.images[0] != z {
                return Ok(false);
            }
            if h.apply(&el(&b2, "z'")?)? != zp {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// (α,β): e2 ↦ αe2, e3 ↦ βe3, w ↦ αβw on A_{s1s2s1}.
fn torus_action_a_s1s2s1() -> Result<bool> {
    let a = alg("a_s1s2s1")?;
    for &x in &GRID {
        for &y in &GRID {
            let (x, y) = (rational(x), rational(y));
            let h = AlgebraHom::new(
                &a,
                &a,
                &[
                    ("e2", &format!("{}*e2", coeff_text(&x))),
                    ("e3", &format!("{}*e3", coeff_text(&y))),
                    ("w", &format!("{}*w", coeff_text(&(&x * &y)))),
                ],
            )?;
            if !hom_check(&h)?.passed() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn omega_involution() -> Result<bool> {
    let h = alg("heisenberg")?;
    let omega = AlgebraHom::new(&h, &h, &[("E1", "E2"), ("E2", "E1")])?;
    let rep = hom_check(&omega)?;
    Ok(rep.passed() && rep.images[0] == el(&h, "-q^2*E3bar")?)
}

fn swap_breaks_serre() -> Result<bool> {
    let b2 = alg("b2")?;
    let swap = AlgebraHom::new(&b2, &b2, &[("e1", "e2"), ("e2", "e1")])?;
    let rep = hom_check(&swap)?;
    Ok(rep.violations.iter().any(|v| v == "S1" || v == "S2"))
}

fn serre_in_b2() -> Result<bool> {
    let b2 = alg("b2")?;
    for (_, rel) in b2.relations() {
        if !AlgebraElement::eval(&b2, rel)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(b2.relations().len() == 2)
}

fn powers_normal(algebra: &str, base: &str) -> Result<bool> {
    for n in 1..=3 {
        if !normal_with(algebra, &format!("{base}^{n}"), &[])? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub const IDENTITIES: &[Identity] = &[
    Identity {
        name: "serre_S1_S2_hold_in_b2",
        description: "the two quantum Serre relations normalize to 0 in U+(B2)",
        check: serre_in_b2,
    },
    Identity {
        name: "e3_definition",
        description: "e3 = e1 e2 - q^2 e2 e1 in U+(B2)",
        check: || same("b2", "e1*e2 - q^2*e2*e1", "e3"),
    },
    Identity {
        name: "z_definition",
        description: "z = e2 e3 - q^2 e3 e2 in U+(B2)",
        check: || same("b2", "e2*e3 - q^2*e3*e2", "z"),
    },
    Identity {
        name: "z_central",
        description: "z is central in U+(B2)",
        check: || central("b2", "z"),
    },
    Identity {
        name: "w_expansion",
        description: "w = e2 e3 - e3 e2 = z + (q^2-1) e3 e2",
        check: || same("b2", "w", "z + (q^2-1)*e3*e2"),
    },
    Identity {
        name: "w_commutations",
        description: "e1 w = w e1 + (1-q^-2) e3^2, e2 w = q^2 w e2, e3 w = q^-2 w e3",
        check: || {
            Ok(same("b2", "e1*w", "w*e1 + (1-q^-2)*e3^2")?
                && same("b2", "e2*w", "q^2*w*e2")?
                && same("b2", "e3*w", "q^-2*w*e3")?)
        },
    },
    Identity {
        name: "z_prime_constructions_agree",
        description: "z' = e1 w - q^-4 w e1 equals its PBW expansion",
        check: || same("b2", "e1*w - q^-4*w*e1", "(1-q^-4)*(1-q^-2)*e3*e1*e2 + q^-4*(1-q^-2)*e3^2 + (1-q^-4)*z*e1"),
    },
    Identity {
        name: "z_prime_split",
        description: "z' = s1 e2 + s0 with s1 = (1-q^-4)(q^2-1) e1 e3",
        check: || {
            same(
                "b2",
                "z'",
                "(1-q^-4)*(q^2-1)*e1*e3*e2 + q^-4*(1-q^-2)*e3^2 + (1-q^-4)*z*e1",
            )
        },
    },
    Identity {
        name: "z_prime_central",
        description: "z' commutes with e1 and e2, hence is central in U+(B2)",
        check: || central("b2", "z'"),
    },
    Identity {
        name: "e3bar_expansion",
        description: "e3bar = e1 e2 - q^-2 e2 e1 = (1-q^-4) e1 e2 + q^-4 e3",
        check: || same("b2", "e3bar", "(1-q^-4)*e1*e2 + q^-4*e3"),
    },
    Identity {
        name: "e3bar_commutations",
        description: "e1 e3bar = q^2 e3bar e1 and e2 e3bar - q^-2 e3bar e2 = q^-4 z",
        check: || {
            Ok(same("b2", "e1*e3bar", "q^2*e3bar*e1")?
                && same("b2", "e2*e3bar - q^-2*e3bar*e2", "q^-4*z")?)
        },
    },
    Identity {
        name: "e3_e3bar_product",
        description: "e3 e3bar = (1-q^-4) q^2 e1 e3 e2 + q^-4 e3^2",
        check: || same("b2", "e3*e3bar", "(1-q^-4)*q^2*e1*e3*e2 + q^-4*e3^2"),
    },
    Identity {
        name: "z_prime_via_e3bar",
        description: "z' = (1-q^-2)(e3 e3bar + (1+q^-2) z e1)",
        check: || same("b2", "z'", "(1-q^-2)*(e3*e3bar + (1+q^-2)*z*e1)"),
    },
    Identity {
        name: "torus_identity_1",
        description: "e2 = e3^-1 e1^-1 z'/((1-q^-4)(q^2-1)) + e3^-1 z/(q^4-1) - e1^-1 e3/(q^2-1) in the localization at e3, e1",
        check: || {
            same(
                "b2_localized",
                "e2",
                "1/((1-q^-4)*(q^2-1))*e3^-1*e1^-1*z' + 1/(q^4-1)*e3^-1*z - 1/(q^2-1)*e1^-1*e3",
            )
        },
    },
    Identity {
        name: "torus_identity_1_corrected",
        description: "e2 = s1^-1 z' - s1^-1 s0, i.e. e3^-1 e1^-1 z'/((1-q^-4)(q^2-1)) - e3^-1 z/(q^2-1) - e1^-1 e3/(q^4-1)",
        check: || {
            Ok(same(
                "b2_localized",
                "e2",
                "1/((1-q^-4)*(q^2-1))*e3^-1*e1^-1*z' - 1/(q^2-1)*e3^-1*z - 1/(q^4-1)*e1^-1*e3",
            )? && same(
                "b2_localized",
                "e2",
                "(e1*e3)^-1*z'/((1-q^-4)*(q^2-1)) - (e1*e3)^-1*(q^-4*(1-q^-2)*e3^2 + (1-q^-4)*z*e1)/((1-q^-4)*(q^2-1))",
            )?)
        },
    },
    Identity {
        name: "s_equals_minus_qm2_z",
        description: "s = e2^2 e1 - (q^2+q^-2) e2 e1 e2 + e1 e2^2 = -q^-2 z",
        check: || {
            Ok(same("b2", "s", "-q^-2*z")?
                && same("b2", "s", "-q^2*e2*e3bar + e3bar*e2")?)
        },
    },
    Identity {
        name: "omega_expansion",
        description: "Omega = (1-q^-4) E3 E1 E2 + q^-4 E3^2 = E3 E3bar in the A2 algebra",
        check: || {
            Ok(same("heisenberg", "Omega", "(1-q^-4)*E3*E1*E2 + q^-4*E3^2")?
                && same("heisenberg", "Omega", "E3*E3bar")?)
        },
    },
    Identity {
        name: "omega_central",
        description: "Omega is central in the A2 algebra",
        check: || central("heisenberg", "Omega"),
    },
    Identity {
        name: "heisenberg_serre",
        description: "the degree-3 Serre relations with coefficient q^2+q^-2 hold in the A2 algebra",
        check: || {
            let h = alg("heisenberg")?;
            for (_, rel) in h.relations() {
                if !AlgebraElement::eval(&h, rel)?.is_zero() {
                    return Ok(false);
                }
            }
            Ok(h.relations().len() == 2)
        },
    },
    Identity {
        name: "omega_involution",
        description: "E1 <-> E2 extends to an algebra map of the A2 algebra sending E3 to -q^2 E3bar",
        check: omega_involution,
    },
    Identity {
        name: "quotient_by_z",
        description: "e1 -> E1, e2 -> E2, z -> 0 is an algebra map with e3 -> E3 and z' -> (1-q^-2) Omega",
        check: || Ok(quotient_check()?.passed()),
    },
    Identity {
        name: "torus_action_b2",
        description: "e1 -> a e1, e2 -> b e2 is an algebra map, sending e3 -> ab e3, z -> ab^2 z, z' -> a^2b^2 z'",
        check: torus_action_b2,
    },
    Identity {
        name: "swap_not_a_map",
        description: "e1 <-> e2 does not preserve the Serre relations of U+(B2)",
        check: swap_breaks_serre,
    },
    Identity {
        name: "a_s1s2s1_z_central",
        description: "z = (1-q^2) e3 e2 + w is central in <e2, w, e3>",
        check: || central("a_s1s2s1", "z"),
    },
    Identity {
        name: "a_s1s2s1_torus_action",
        description: "e2 -> a e2, e3 -> b e3, w -> ab w is an algebra map of <e2, w, e3>",
        check: torus_action_a_s1s2s1,
    },
    Identity {
        name: "a_s1s2s1_w_normal",
        description: "w is normal in <e2, w, e3> with scalars q^-2, q^2, 1 at e2, e3, w",
        check: || normal_with("a_s1s2s1", "w", &[("e2", "q^-2"), ("e3", "q^2"), ("w", "1")]),
    },
    Identity {
        name: "a_s1s2s1_w_powers_normal",
        description: "w, w^2, w^3 are normal in <e2, w, e3>",
        check: || powers_normal("a_s1s2s1", "w"),
    },
    Identity {
        name: "a_s2s1s2_u_central",
        description: "u = (1-q^-4) e1 wbar + (q^2-1) e3bar^2 is central in <e1, e3bar, wbar>",
        check: || central("a_s2s1s2", "u"),
    },
    Identity {
        name: "a_s2s1s2_e3bar_powers_normal",
        description: "e3bar, e3bar^2, e3bar^3 are normal in <e1, e3bar, wbar>",
        check: || powers_normal("a_s2s1s2", "e3bar"),
    },
    Identity {
        name: "w_not_normal_in_b2",
        description: "w is not normal in U+(B2): e1 w - w e1 = (1-q^-2) e3^2",
        check: || {
            let b2 = alg("b2")?;
            let r = q_normality(&el(&b2, "w")?)?;
            Ok(!r.is_normal() && r.residual("e1") == Some(&el(&b2, "(1-q^-2)*e3^2")?))
        },
    },
];

pub fn identity_names() -> Vec<&'static str> {
    IDENTITIES.iter().map(|i| i.name).collect()
}

pub fn paper_identity(name: &str) -> Result<bool> {
    let id = IDENTITIES
        .iter()
        .find(|i| i.name == name)
        .ok_or_else(|| Error::UnknownName(name.to_string()))?;
    (id.check)()
}

/// Runs every registered identity; errors count as failures.
pub fn run_all() -> Vec<IdentityOutcome> {
    IDENTITIES
        .iter()
        .map(|i| {
            let r = (i.check)();
            IdentityOutcome {
                name: i.name.to_string(),
                description: i.description.to_string(),
                passed: matches!(r, Ok(true)),
                error: r.err().map(|e| e.to_string()),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_identity_but_the_printed_torus_one_passes() {
        for o in run_all() {
            if o.name == "torus_identity_1" {
                continue;
            }
            assert!(o.passed, "{} failed: {:?}", o.name, o.error);
        }
    }

    #[test]
    fn printed_torus_identity_is_off() {
        // the printed coefficients of e3^-1 z and e1^-1 e3 are exchanged (and one sign flipped)
        assert_eq!(paper_identity("torus_identity_1"), Ok(false));
        let p = alg("b2_localized").unwrap();
        let printed = el(&p, "1/((1-q^-4)*(q^2-1))*e3^-1*e1^-1*z' + 1/(q^4-1)*e3^-1*z - 1/(q^2-1)*e1^-1*e3").unwrap();
        let diff = printed.sub(&el(&p, "e2").unwrap()).unwrap();
        assert_eq!(diff, el(&p, "(q^2+2)/(q^4-1)*z*e3^-1 - q^4/(q^4-1)*e3*e1^-1").unwrap());
    }

    #[test]
    fn unknown_name() {
        assert!(matches!(paper_identity("nope"), Err(Error::UnknownName(_))));
        assert_eq!(paper_identity("torus_identity_1_corrected"), Ok(true));
    }

    #[test]
    fn names_are_unique() {
        let mut names = identity_names();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), IDENTITIES.len());
    }
}
