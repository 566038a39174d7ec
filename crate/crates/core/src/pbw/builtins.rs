//! The presentations shipped with the library.

use std::sync::Arc;

use super::presentation::{Generator, Presentation};
use crate::error::{Error, Result};

pub const BUILTIN_NAMES: [&str; 10] = [
    "heisenberg",
    "b2",
    "qplane",
    "qtorus",
    "b2_localized",
    "a_s1s2s1",
    "a_s2s1s2",
    "a_s1s2",
    "a_s2s1",
    "poly_zz'",
];

fn gen(name: &str, multidegree: [u32; 2], localized: bool) -> Generator {
    Generator {
        name: name.to_string(),
        degree: multidegree.iter().sum(),
        multidegree: multidegree.to_vec(),
        localized,
    }
}

const B2_RULES: [(&str, &str, &str); 6] = [
    ("e3", "z", "z*e3"),
    ("e1", "z", "z*e1"),
    ("e2", "z", "z*e2"),
    ("e1", "e3", "q^-2*e3*e1"),
    ("e2", "e3", "q^2*e3*e2 + z"),
    ("e2", "e1", "q^-2*e1*e2 - q^-2*e3"),
];

const B2_DEFINITIONS: [(&str, &str); 2] = [("e3", "e1*e2 - q^2*e2*e1"), ("z", "e2*e3 - q^2*e3*e2")];

const B2_RELATIONS: [(&str, &str); 2] = [
    ("S1", "e1^2*e2 - (q^2+q^-2)*e1*e2*e1 + e2*e1^2"),
    ("S2", "e2^3*e1 - (q^2+1+q^-2)*e2^2*e1*e2 + (q^2+1+q^-2)*e2*e1*e2^2 - e1*e2^3"),
];

const B2_NAMED: [(&str, &str); 4] = [
    ("w", "e2*e3 - e3*e2"),
    ("z'", "(1-q^-4)*(1-q^-2)*e3*e1*e2 + q^-4*(1-q^-2)*e3^2 + (1-q^-4)*z*e1"),
    ("e3bar", "e1*e2 - q^-2*e2*e1"),
    ("s", "e2^2*e1 - (q^2+q^-2)*e2*e1*e2 + e1*e2^2"),
];

fn b2_like(name: &str, localized: bool) -> Result<Presentation> {
    Presentation::build(
        name,
        vec![
            gen("z", [1, 2], false),
            gen("e3", [1, 1], localized),
            gen("e1", [1, 0], localized),
            gen("e2", [0, 1], false),
        ],
        &B2_RULES,
        &B2_DEFINITIONS,
        &B2_RELATIONS,
        &B2_NAMED,
    )
}

fn build(name: &str) -> Result<Presentation> {
    match name {
        "heisenberg" => Presentation::build(
            name,
            vec![gen("E3", [1, 1], false), gen("E1", [1, 0], false), gen("E2", [0, 1], false)],
            &[
                ("E1", "E3", "q^-2*E3*E1"),
                ("E2", "E3", "q^2*E3*E2"),
                ("E2", "E1", "q^-2*E1*E2 - q^-2*E3"),
            ],
            &[("E3", "E1*E2 - q^2*E2*E1")],
            &[
                ("serre_12", "E1^2*E2 - (q^2+q^-2)*E1*E2*E1 + E2*E1^2"),
                ("serre_21", "E2^2*E1 - (q^2+q^-2)*E2*E1*E2 + E1*E2^2"),
            ],
            &[
                ("E3bar", "E1*E2 - q^-2*E2*E1"),
                ("Omega", "(1-q^-4)*E3*E1*E2 + q^-4*E3^2"),
            ],
        ),
        "b2" => b2_like(name, false),
        "b2_localized" => b2_like(name, true),
        "qplane" | "qtorus" => {
            let loc = name == "qtorus";
            Presentation::build(
                name,
                vec![gen("e3", [1, 1], loc), gen("e1", [1, 0], loc)],
                &[("e1", "e3", "q^-2*e3*e1")],
                &[],
                &[],
                &[],
            )
        }
        "a_s1s2s1" => Presentation::build(
            name,
            vec![gen("w", [1, 2], false), gen("e2", [0, 1], false), gen("e3", [1, 1], false)],
            &[
                ("e2", "w", "q^2*w*e2"),
                ("e3", "w", "q^-2*w*e3"),
                ("e3", "e2", "e2*e3 - w"),
            ],
            &[],
            &[],
            &[("z", "(1-q^2)*e3*e2 + w")],
        ),
        "a_s1s2" => Presentation::build(
            name,
            vec![gen("w", [1, 2], false), gen("e2", [0, 1], false)],
            &[("e2", "w", "q^2*w*e2")],
            &[],
            &[],
            &[],
        ),
        "a_s2s1s2" => Presentation::build(
            name,
            vec![gen("e3bar", [1, 1], false), gen("e1", [1, 0], false), gen("wbar", [1, 2], false)],
            &[
                ("e1", "e3bar", "q^2*e3bar*e1"),
                ("wbar", "e3bar", "q^-2*e3bar*wbar"),
                ("wbar", "e1", "e1*wbar + (q^2-1)*e3bar^2"),
            ],
            &[],
            &[],
            &[("u", "(1-q^-4)*e1*wbar + (q^2-1)*e3bar^2")],
        ),
        "a_s2s1" => Presentation::build(
            name,
            vec![gen("e3bar", [1, 1], false), gen("e1", [1, 0], false)],
            &[("e1", "e3bar", "q^2*e3bar*e1")],
            &[],
            &[],
            &[],
        ),
        "poly_zz'" => Presentation::build(
            name,
            vec![gen("z", [1, 2], false), gen("z'", [2, 2], false)],
            &[("z'", "z", "z*z'")],
            &[],
            &[],
            &[],
        ),
        other => Err(Error::UnknownName(format!("algebra {other}"))),
    }
}

pub fn builtin_presentation(name: &str) -> Result<Arc<Presentation>> {
    build(name).map(Arc::new)
}

pub fn all_builtins() -> Vec<Arc<Presentation>> {
    BUILTIN_NAMES
        .iter()
        .map(|n| builtin_presentation(n).expect("built-in presentations are valid"))
        .collect()
}
