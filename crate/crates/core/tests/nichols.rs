use std::time::Instant;

use uqplus::braided::{braiding_from_cartan, CartanData};
use uqplus::nichols::{is_primitive, minimal_relations, nichols_hilbert_series, Method};

/// Number of solutions of Σ w_i·k_i = m in nonnegative integers.
fn lattice_points(weights: &[usize], m: usize) -> usize {
    match weights.split_first() {
        None => usize::from(m == 0),
        Some((&w, rest)) => (0..=m / w).map(|k| lattice_points(rest, m - k * w)).sum(),
    }
}

#[test]
fn b2_relations_up_to_degree_six() {
    let b = braiding_from_cartan(&CartanData::b2()).unwrap();
    let t = Instant::now();
    let rels = minimal_relations(&b, 6).unwrap();
    eprintln!("b2 relations in {:?}", t.elapsed());
    assert_eq!(rels.count(), 2);
    let s1 = rels.space(&[2, 1]).unwrap();
    assert_eq!(s1.degree, 3);
    assert_eq!(s1.relations[0].to_string(), "x1*x1*x2 - (q^2+q^-2)*x1*x2*x1 + x2*x1*x1");
    let s2 = rels.space(&[1, 3]).unwrap();
    assert_eq!(s2.degree, 4);
    assert_eq!(
        s2.relations[0].to_string(),
        "x1*x2*x2*x2 - (q^2+1+q^-2)*x2*x1*x2*x2 + (q^2+1+q^-2)*x2*x2*x1*x2 - x2*x2*x2*x1"
    );
    for (_, r) in rels.iter() {
        assert!(is_primitive(r, &b).unwrap());
    }
}

#[test]
fn hilbert_series_match_lattice_counts() {
    let t = Instant::now();
    let a2 = nichols_hilbert_series(&braiding_from_cartan(&CartanData::a2()).unwrap(), 8).unwrap();
    let b2 = nichols_hilbert_series(&braiding_from_cartan(&CartanData::b2()).unwrap(), 8).unwrap();
    eprintln!("hilbert series in {:?}", t.elapsed());
    for m in 0..=8 {
        assert_eq!(a2[m], lattice_points(&[2, 1, 1], m), "A2 degree {m}");
        assert_eq!(b2[m], lattice_points(&[3, 2, 1, 1], m), "B2 degree {m}");
    }
}

#[test]
fn exact_path_only_where_relations_appear() {
    let b = braiding_from_cartan(&CartanData::b2()).unwrap();
    let reports = uqplus::nichols::analyze(&b, 5).unwrap();
    for r in reports.iter().flatten() {
        let expect_exact = matches!(r.multidegree.as_slice(), [2, 1] | [1, 3]);
        assert_eq!(r.method == Method::Exact, expect_exact, "{:?}", r.multidegree);
        assert_eq!(r.rank + r.ideal_dim + r.new_relations.len(), r.dim);
    }
}
