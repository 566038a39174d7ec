//! The Weyl group of type B2, its Bruhat order, and the poset of graded
//! prime ideals of U+(B2) matched against it.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::Result;
use crate::pbw::{builtin_presentation, AlgebraElement};

/// Integer matrix acting on the basis (ε1, ε2); column j is the image of ε_{j+1}.
pub type Action = [[i64; 2]; 2];

const S1: Action = [[0, 1], [1, 0]];
const S2: Action = [[1, 0], [0, -1]];
const ID: Action = [[1, 0], [0, 1]];

fn matmul(a: &Action, b: &Action) -> Action {
    let mut c = [[0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            c[i][j] = (0..2).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    c
}

fn action_of(word: &[u8]) -> Action {
    // the rightmost letter acts first
    word.iter().fold(ID, |acc, &s| matmul(&acc, if s == 1 { &S1 } else { &S2 }))
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    /// Lexicographically least reduced word, letters 1 and 2.
    pub word: Vec<u8>,
    pub action: Action,
}

impl WeylElement {
    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn name(&self) -> String {
        if self.word.is_empty() {
            "e".into()
        } else {
            self.word.iter().map(|s| format!("s{s}")).collect()
        }
    }

    /// Every word of minimal length representing this element.
    pub fn reduced_words(&self) -> Vec<Vec<u8>> {
        let l = self.length();
        (0..1u32 << l)
            .map(|bits| (0..l).map(|i| if bits >> i & 1 == 0 { 1 } else { 2 }).collect::<Vec<u8>>())
            .filter(|w| action_of(w) == self.action)
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect()
    }

    /// `ε1 ↦ ε2, ε2 ↦ -ε1`
    pub fn action_text(&self) -> String {
        let image = |j: usize| {
            let col = [self.action[0][j], self.action[1][j]];
            let (i, s) = if col[0] != 0 { (1, col[0]) } else { (2, col[1]) };
            format!("{}ε{i}", if s < 0 { "-" } else { "" })
        };
        format!("ε1 ↦ {}, ε2 ↦ {}", image(0), image(1))
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// The 8 elements, by length and then reduced word.
pub fn weyl_b2() -> Vec<WeylElement> {
    let mut seen: Vec<WeylElement> = vec![WeylElement { word: vec![], action: ID }];
    let mut frontier = seen.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for x in &frontier {
            for s in [1u8, 2] {
                let mut word = x.word.clone();
                word.push(s);
                let action = action_of(&word);
                if !seen.iter().chain(&next).any(|y: &WeylElement| y.action == action) {
                    next.push(WeylElement { word, action });
                }
            }
        }
        next.sort();
        seen.extend(next.iter().cloned());
        frontier = next;
    }
    seen
}

pub fn weyl_element(name: &str) -> Option<WeylElement> {
    weyl_b2().into_iter().find(|w| w.name() == name)
}

/// Subword criterion against the canonical reduced word of `y`.
pub fn bruhat_leq(x: &WeylElement, y: &WeylElement) -> bool {
    let (n, l) = (y.length(), x.length());
    (0..1u32 << n).any(|mask| {
        if mask.count_ones() as usize != l {
            return false;
        }
        let sub: Vec<u8> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| y.word[i]).collect();
        action_of(&sub) == x.action
    })
}

/// A finite poset stored by its covering relation; an edge `(a, b)` means `a` covers `b`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Poset {
    pub nodes: Vec<String>,
    pub covers: BTreeSet<(usize, usize)>,
}

impl Poset {
    /// Builds the Hasse diagram of the order `leq` on `nodes`.
    pub fn from_order(nodes: Vec<String>, leq: impl Fn(usize, usize) -> bool) -> Self {
        let n = nodes.len();
        let lt = |a: usize, b: usize| a != b && leq(a, b);
        let mut covers = BTreeSet::new();
        for a in 0..n {
            for b in 0..n {
                if lt(b, a) && !(0..n).any(|c| lt(b, c) && lt(c, a)) {
                    covers.insert((a, b));
                }
            }
        }
        Self { nodes, covers }
    }

    /// Poset generated by the given covering edges (named).
    pub fn from_edges(nodes: &[&str], edges: &[(&str, &str)]) -> Self {
        let idx = |s: &str| nodes.iter().position(|n| *n == s).expect("node of the figure");
        Self {
            nodes: nodes.iter().map(|s| s.to_string()).collect(),
            covers: edges.iter().map(|(a, b)| (idx(a), idx(b))).collect(),
        }
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.nodes.iter().position(|n| n == name)
    }

    /// Reflexive-transitive closure of the covers.
    pub fn leq(&self, a: usize, b: usize) -> bool {
        let mut stack = vec![b];
        let mut seen = BTreeSet::new();
        while let Some(x) = stack.pop() {
            if x == a {
                return true;
            }
            if seen.insert(x) {
                stack.extend(self.covers.iter().filter(|(u, _)| *u == x).map(|(_, v)| *v));
            }
        }
        false
    }

    pub fn named_edges(&self) -> BTreeSet<(String, String)> {
        self.covers.iter().map(|&(a, b)| (self.nodes[a].clone(), self.nodes[b].clone())).collect()
    }

    pub fn is_acyclic(&self) -> bool {
        self.covers.iter().all(|&(a, b)| !self.leq(a, b))
    }

    /// No stored edge is implied by the others.
    pub fn covers_irredundant(&self) -> bool {
        self.covers.iter().all(|&(a, b)| {
            !(0..self.nodes.len()).any(|c| c != a && c != b && self.leq(c, a) && self.leq(b, c))
        })
    }

    pub fn to_dot(&self, name: &str) -> String {
        let mut s = format!("digraph \"{name}\" {{\n  rankdir=BT;\n");
        for n in &self.nodes {
            s += &format!("  \"{n}\";\n");
        }
        for (a, b) in self.named_edges() {
            s += &format!("  \"{b}\" -> \"{a}\";\n");
        }
        s + "}\n"
    }

    pub fn to_json(&self) -> Value {
        json!({
            "nodes": self.nodes,
            "covers": self.named_edges().into_iter().map(|(a, b)| json!([a, b])).collect::<Vec<_>>(),
        })
    }
}

pub fn bruhat_poset() -> Poset {
    let w = weyl_b2();
    Poset::from_order(w.iter().map(|x| x.name()).collect(), |a, b| bruhat_leq(&w[a], &w[b]))
}

pub const BRUHAT_NODES: [&str; 8] = ["e", "s1", "s2", "s1s2", "s2s1", "s1s2s1", "s2s1s2", "s1s2s1s2"];

/// The left-hand figure, `(upper, lower)`.
pub const BRUHAT_FIGURE: [(&str, &str); 12] = [
    ("s1s2s1s2", "s1s2s1"),
    ("s1s2s1s2", "s2s1s2"),
    ("s1s2s1", "s1s2"),
    ("s1s2s1", "s2s1"),
    ("s2s1s2", "s2s1"),
    ("s2s1s2", "s1s2"),
    ("s1s2", "s1"),
    ("s1s2", "s2"),
    ("s2s1", "s2"),
    ("s2s1", "s1"),
    ("s1", "e"),
    ("s2", "e"),
];

pub const HSPEC_NODES: [&str; 8] = ["(0)", "(z)", "(z')", "(e3)", "(e3bar)", "(e1)", "(e2)", "(e1,e2)"];

/// The right-hand figure, as inclusions `(bigger, smaller)`.
pub const HSPEC_FIGURE: [(&str, &str); 12] = [
    ("(z)", "(0)"),
    ("(z')", "(0)"),
    ("(e3)", "(z)"),
    ("(e3bar)", "(z)"),
    ("(e3bar)", "(z')"),
    ("(e3)", "(z')"),
    ("(e1)", "(e3)"),
    ("(e2)", "(e3)"),
    ("(e2)", "(e3bar)"),
    ("(e1)", "(e3bar)"),
    ("(e1,e2)", "(e1)"),
    ("(e1,e2)", "(e2)"),
];

/// Positional reading of the two figures side by side.
pub const HSPEC_MAP: [(&str, &str); 8] = [
    ("s1s2s1s2", "(0)"),
    ("s1s2s1", "(z)"),
    ("s2s1s2", "(z')"),
    ("s1s2", "(e3)"),
    ("s2s1", "(e3bar)"),
    ("s1", "(e1)"),
    ("s2", "(e2)"),
    ("e", "(e1,e2)"),
];

pub const MAP_ASSUMPTION: &str =
    "elements and ideals are paired by their positions in the two figures, read left to right";

/// Generators of each ideal as elements of U+(B2).
pub fn ideal_generators(label: &str) -> Result<Vec<AlgebraElement>> {
    let b2 = builtin_presentation("b2")?;
    let names: &[&str] = match label {
        "(0)" => &[],
        "(z)" => &["z"],
        "(z')" => &["z'"],
        "(e3)" => &["e3"],
        "(e3bar)" => &["e3bar"],
        "(e1)" => &["e1"],
        "(e2)" => &["e2"],
        "(e1,e2)" => &["e1", "e2"],
        other => return Err(crate::Error::UnknownName(other.to_string())),
    };
    names.iter().map(|n| AlgebraElement::parse(&b2, n)).collect()
}

/// The ideal-containment poset together with the map from W.
#[derive(Debug, Clone)]
pub struct HSpec {
    pub poset: Poset,
    pub map: Vec<(String, String)>,
}

impl HSpec {
    pub fn image(&self, y: &str) -> Option<&str> {
        self.map.iter().find(|(w, _)| w == y).map(|(_, i)| i.as_str())
    }

    pub fn to_json(&self) -> Value {
        let mut v = self.poset.to_json();
        v["map"] = json!(self.map.iter().map(|(w, i)| json!({"weyl": w, "ideal": i})).collect::<Vec<_>>());
        v["assumption"] = json!(MAP_ASSUMPTION);
        v
    }
}

pub fn hspec_poset() -> HSpec {
    HSpec {
        poset: Poset::from_edges(&HSPEC_NODES, &HSPEC_FIGURE),
        map: HSPEC_MAP.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect(),
    }
}

/// `y' ≤ y` exactly when `Q(y) ⊆ Q(y')`, over all pairs.
pub fn is_order_reversing(bruhat: &Poset, hspec: &HSpec) -> bool {
    let n = bruhat.nodes.len();
    let q = |i: usize| {
        hspec
            .image(&bruhat.nodes[i])
            .and_then(|l| hspec.poset.index(l))
            .expect("every element is mapped")
    };
    let images: BTreeSet<usize> = (0..n).map(q).collect();
    images.len() == n
        && (0..n).all(|a| (0..n).all(|b| bruhat.leq(a, b) == hspec.poset.leq(q(b), q(a))))
}

/// Witness that each generator of a smaller ideal lies in a bigger one:
/// `target = Σ left·g·right` with `g` a generator of the bigger ideal.
#[derive(Debug, Clone, Serialize)]
pub struct Witness {
    pub smaller: String,
    pub bigger: String,
    pub target: String,
    /// `(left, generator, right)`; left carries the coefficient.
    pub terms: Vec<(String, String, String)>,
}

fn witness(smaller: &str, bigger: &str, target: &str, terms: &[(&str, &str, &str)]) -> Witness {
    Witness {
        smaller: smaller.into(),
        bigger: bigger.into(),
        target: target.into(),
        terms: terms.iter().map(|(a, g, b)| (a.to_string(), g.to_string(), b.to_string())).collect(),
    }
}

pub fn witnesses() -> Vec<Witness> {
    vec![
        witness("(0)", "(z)", "0", &[]),
        witness("(0)", "(z')", "0", &[]),
        witness("(z)", "(e3)", "z", &[("e2", "e3", "1"), ("-q^2", "e3", "e2")]),
        witness("(z)", "(e3bar)", "z", &[("q^4*e2", "e3bar", "1"), ("-q^2", "e3bar", "e2")]),
        witness(
            "(z')",
            "(e3)",
            "z'",
            &[
                ("(1-q^-2)", "e3", "e3bar"),
                ("(1-q^-4)*e2", "e3", "e1"),
                ("-(1-q^-4)*q^2", "e3", "e2*e1"),
            ],
        ),
        witness(
            "(z')",
            "(e3bar)",
            "z'",
            &[
                ("(1-q^-2)*e3", "e3bar", "1"),
                ("(1-q^-4)*q^4*e2", "e3bar", "e1"),
                ("-(1-q^-4)*q^2", "e3bar", "e2*e1"),
            ],
        ),
        witness("(e3)", "(e1)", "e3", &[("1", "e1", "e2"), ("-q^2*e2", "e1", "1")]),
        witness("(e3)", "(e2)", "e3", &[("e1", "e2", "1"), ("-q^2", "e2", "e1")]),
        witness("(e3bar)", "(e1)", "e3bar", &[("1", "e1", "e2"), ("-q^-2*e2", "e1", "1")]),
        witness("(e3bar)", "(e2)", "e3bar", &[("e1", "e2", "1"), ("-q^-2", "e2", "e1")]),
        witness("(e1)", "(e1,e2)", "e1", &[("1", "e1", "1")]),
        witness("(e2)", "(e1,e2)", "e2", &[("1", "e2", "1")]),
    ]
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessOutcome {
    pub smaller: String,
    pub bigger: String,
    pub target: String,
    pub passed: bool,
}

/// Checks every witness: its generators belong to the bigger ideal, its
/// sum normalizes to the target, and it covers a drawn edge.
pub fn containment_witnesses() -> Result<Vec<WitnessOutcome>> {
    let b2 = builtin_presentation("b2")?;
    let hs = hspec_poset();
    let mut out = Vec::new();
    for w in witnesses() {
        let gens = ideal_generators(&w.bigger)?;
        let mut sum = AlgebraElement::zero(&b2);
        let mut ok = true;
        for (l, g, r) in &w.terms {
            let g = AlgebraElement::parse(&b2, g)?;
            ok &= gens.contains(&g);
            let term = AlgebraElement::parse(&b2, l)?.mul(&g)?.mul(&AlgebraElement::parse(&b2, r)?)?;
            sum = sum.add(&term)?;
        }
        ok &= sum == AlgebraElement::parse(&b2, &w.target)?;
        ok &= ideal_generators(&w.smaller)?.iter().any(|g| g.to_string() == sum.to_string())
            || (w.target == "0" && ideal_generators(&w.smaller)?.is_empty());
        let edge = (hs.poset.index(&w.bigger), hs.poset.index(&w.smaller));
        ok &= matches!(edge, (Some(a), Some(b)) if hs.poset.covers.contains(&(a, b)));
        out.push(WitnessOutcome { smaller: w.smaller, bigger: w.bigger, target: w.target, passed: ok });
    }
    Ok(out)
}

/// Every drawn edge of the ideal figure, for every generator of the smaller
/// ideal, has a passing witness.
pub fn all_edges_witnessed(outcomes: &[WitnessOutcome]) -> Result<bool> {
    for (big, small) in HSPEC_FIGURE {
        for g in ideal_generators(small)? {
            let g = g.to_string();
            if !outcomes.iter().any(|o| {
                o.passed && o.bigger == big && o.smaller == small && {
                    let b2 = builtin_presentation("b2").expect("builtin");
                    AlgebraElement::parse(&b2, &o.target).map(|t| t.to_string() == g).unwrap_or(false)
                }
            }) {
                return Ok(false);
            }
        }
        if ideal_generators(small)?.is_empty()
            && !outcomes.iter().any(|o| o.passed && o.bigger == big && o.smaller == small)
        {
            return Ok(false);
        }
    }
    Ok(true)
}
