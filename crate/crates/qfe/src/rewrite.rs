//! Rewrites that preserve the represented operator up to a scalar.

use mbqc_core::{Angle, FreshLabels};
use num_complex::Complex64;

use crate::expansion::QuadraticFormExpansion;

fn fresh_labels(q: &QuadraticFormExpansion) -> FreshLabels {
    FreshLabels::new(q.indices().iter().cloned())
}

/// Moves each output `v` with `θ_vv ≠ 0` behind two fresh indices joined by
/// π cross terms (an identity expansion), so every output is clean.
pub fn pad_outputs(q: &QuadraticFormExpansion) -> QuadraticFormExpansion {
    let dirty = q.dirty_outputs();
    if dirty.is_empty() {
        return q.clone();
    }
    let mut out = q.clone();
    let mut fresh = fresh_labels(q);
    let mut outputs = q.outputs().clone();
    for v in dirty {
        let (v1, v2) = (fresh.fresh(&v), fresh.fresh(&v));
        out.add_index(&v1);
        out.add_index(&v2);
        out.set_term(&v, &v1, Angle::pi()).expect("indices exist");
        out.set_term(&v1, &v2, Angle::pi()).expect("indices exist");
        outputs.remove(&v);
        outputs.insert(v2);
        out.scale_prefactor(Complex64::new(0.5, 0.0));
    }
    out.set_outputs(outputs).expect("indices exist");
    out
}

/// Replaces every cross term `φ ∉ {0, π}` by two fresh indices `a1, a2`
/// with π terms `u a1`, `v a1`, `a1 a2`, square `-φ/2` on `a2` and `+φ/2`
/// added to the squares of `u` and `v`, using
/// `φ x_u x_v = φ/2 (x_u + x_v) - φ/2 (x_u ⊕ x_v)`.
pub fn decross(q: &QuadraticFormExpansion) -> QuadraticFormExpansion {
    let fractional: Vec<(String, String, Angle)> = q
        .cross_terms()
        .filter(|(_, _, t)| *t != Angle::pi())
        .map(|(u, v, t)| (u.to_owned(), v.to_owned(), t))
        .collect();
    let mut out = q.clone();
    let mut fresh = fresh_labels(q);
    for (u, v, phi) in fractional {
        let half = phi.half();
        let (a1, a2) = (fresh.fresh("a"), fresh.fresh("a"));
        out.add_index(&a1);
        out.add_index(&a2);
        out.set_term(&u, &v, Angle::zero()).expect("indices exist");
        out.add_term(&u, &u, half).expect("indices exist");
        out.add_term(&v, &v, half).expect("indices exist");
        for (x, y) in [(&u, &a1), (&v, &a1), (&a1, &a2)] {
            out.set_term(x, y, Angle::pi()).expect("indices exist");
        }
        out.set_term(&a2, &a2, -half).expect("indices exist");
        out.scale_prefactor(Complex64::new(0.5, 0.0));
    }
    out
}

/// One contractible chain `a - b - c - v`: `v` a leaf, `b` and `c` of degree
/// two, unit cross terms, `θ_cc ∈ πZ`, none of the four in `I ∪ O`.
fn find_chain(q: &QuadraticFormExpansion) -> Option<[String; 4]> {
    let interior = |x: &str| !q.inputs().contains(x) && !q.outputs().contains(x);
    let unit = |x: &str, y: &str| q.term(x, y) == Angle::pi();
    for v in q.indices().iter().filter(|v| interior(v)) {
        let nv = q.neighbors(v);
        if nv.len() != 1 {
            continue;
        }
        let c = nv.into_iter().next().expect("one neighbour");
        let nc = q.neighbors(&c);
        if !interior(&c) || nc.len() != 2 || !q.square(&c).is_multiple_of_pi() || !unit(&c, v) {
            continue;
        }
        let b = nc.into_iter().find(|x| x != v).expect("two neighbours");
        let nb = q.neighbors(&b);
        if !interior(&b) || nb.len() != 2 || !unit(&b, &c) {
            continue;
        }
        let a = nb.into_iter().find(|x| *x != c).expect("two neighbours");
        if a == *v || !interior(&a) || !unit(&a, &b) {
            continue;
        }
        return Some([a, b, c, v.clone()]);
    }
    None
}

/// Contracts leaf chains two indices at a time until none remain.
pub fn telescope(q: &QuadraticFormExpansion) -> QuadraticFormExpansion {
    let mut out = q.clone();
    while let Some([a, b, c, v]) = find_chain(&out) {
        let (tb, tv) = (out.square(&b), out.square(&v));
        if out.square(&c).is_zero() {
            out.set_term(&v, &v, tb + tv).expect("index exists");
            out.scale_prefactor(Complex64::new(2.0, 0.0));
        } else {
            out.add_term(&a, &a, Angle::pi()).expect("index exists");
            out.set_term(&v, &v, tv - tb).expect("index exists");
            // x_b = 1 - x_v leaves the constant e^{iθ_bb}
            out.scale_prefactor(Complex64::from_polar(2.0, tb.radians()));
        }
        out.remove_index(&b);
        out.remove_index(&c);
        out.set_term(&a, &v, Angle::pi()).expect("indices exist");
    }
    out
}
