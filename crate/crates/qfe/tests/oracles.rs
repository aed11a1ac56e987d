use std::collections::{BTreeMap, BTreeSet};
use std::f64::consts::PI;

use mbqc_core::fixtures::{grid_geometry, no_flow_fixture};
use mbqc_core::{patterns_congruent, Angle, Geometry, Plane};
use mbqc_flow::{find_eflow, find_flow, lift_flow_to_gflow, odd_neighborhood, verify_gflow, GflowCertificate};
use mbqc_qfe::{
    circuit_qfe, compose_qfe, decross, evaluate, identity_qfe, induced_geometry, nonuniformity_gadget, pad_outputs,
    parity_gadget, qft_qfe, synth_circuit_via_flow, synth_pattern_via_eflow, synth_pattern_via_gflow, telescope,
    zz_many_pattern, zz_many_qfe, zz_many_yz_pattern, QfeError, QuadraticFormExpansion,
};
use mbqc_sim::{c64, circuit_unitary, equal_up_to_phase, pattern_unitary, pattern_unitary_on, DenseMatrix, SimOptions};
use mbqc_testkit::{random_angle, random_circuit, random_geometry, rng};
use num_complex::Complex64;
use num_rational::Ratio;
use proptest::prelude::*;
use rand::Rng;

const TOL: f64 = 1e-9;

fn close(a: &DenseMatrix, b: &DenseMatrix, tol: f64) -> bool {
    a.rows == b.rows && a.cols == b.cols && a.max_abs_diff(b) < tol
}

/// Bit of `label` in a row or column index laid out MSB first over `labels`.
fn bit(labels: &[String], index: usize, label: &str) -> usize {
    let p = labels.iter().position(|l| l == label).expect("label");
    index >> (labels.len() - 1 - p) & 1
}

/// `ω^{XY}/√N` with `X = Σ 2^j x_j`, `Y = Σ 2^h y_h`, `ω = e^{2πi/N}`.
fn dft(k: usize) -> DenseMatrix {
    let n = 1usize << k;
    let rows: Vec<String> = (0..k).map(|h| format!("y{h}")).collect();
    let cols: Vec<String> = (0..k).map(|j| format!("x{j}")).collect();
    let mut m = DenseMatrix::zeros(n, n).with_labels(rows.clone(), cols.clone());
    for r in 0..n {
        let y: usize = (0..k).map(|h| bit(&rows, r, &rows[h]) << h).sum();
        for c in 0..n {
            let x: usize = (0..k).map(|j| bit(&cols, c, &cols[j]) << j).sum();
            let t = 2.0 * PI * ((x * y) % n) as f64 / n as f64;
            m.set(r, c, Complex64::from_polar(1.0 / (n as f64).sqrt(), t));
        }
    }
    m
}

fn zz_target(k: usize, theta: Angle) -> DenseMatrix {
    let n = 1usize << k;
    let labels: Vec<String> = (1..=k).map(|j| format!("v{j}")).collect();
    let mut m = DenseMatrix::zeros(n, n).with_labels(labels.clone(), labels);
    for i in 0..n {
        let z = if i.count_ones() % 2 == 0 { 1.0 } else { -1.0 };
        m.set(i, i, Complex64::from_polar(1.0, -theta.radians() * z / 2.0));
    }
    m
}

#[test]
fn identity_expansion_is_the_identity() {
    let e = evaluate(&identity_qfe("v", "m", "w")).unwrap();
    let mut id = DenseMatrix::identity(2);
    id.set(0, 0, c64(1.0, 0.0));
    assert!(close(&e.matrix, &id, 1e-12));
    assert_eq!(e.matrix.row_labels, vec!["w"]);
    assert_eq!(e.matrix.col_labels, vec!["v"]);
}

#[test]
fn one_qubit_fourier_is_hadamard() {
    let q = qft_qfe(1);
    assert_eq!(q.cross_terms().count(), 1);
    assert_eq!(q.term("x0", "y0"), Angle::pi());
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let want = DenseMatrix::from_rows(&[vec![c64(h, 0.0), c64(h, 0.0)], vec![c64(h, 0.0), c64(-h, 0.0)]]);
    assert!(close(&evaluate(&q).unwrap().matrix, &want, 1e-12));
}

#[test]
fn fourier_expansion_matches_the_dft() {
    for k in 1..=4 {
        let e = evaluate(&qft_qfe(k)).unwrap();
        let d = dft(k);
        assert_eq!(e.matrix.row_labels, d.row_labels);
        assert!(close(&e.matrix, &d, TOL), "k = {k}");
        assert!(e.matrix.is_unitary(TOL));
    }
}

#[test]
fn two_qubit_fourier_geometry() {
    let g = induced_geometry(&qft_qfe(2));
    let mut w: Vec<(String, String, Ratio<i64>)> = g.edges().map(|(u, v, t)| (u.to_owned(), v.to_owned(), t)).collect();
    w.sort();
    let r = |n, d| Ratio::new(n, d);
    assert_eq!(
        w,
        vec![
            ("x0".into(), "y0".into(), r(1, 2)),
            ("x0".into(), "y1".into(), r(1, 1)),
            ("x1".into(), "y0".into(), r(1, 1)),
        ]
    );
}

#[test]
fn fourier_synthesis_through_flow() {
    for k in 1..=4 {
        let q = qft_qfe(k);
        let c = synth_circuit_via_flow(&q).unwrap().expect("flow exists");
        let mut js: Vec<(String, String)> = c
            .gates
            .iter()
            .filter_map(|g| match g {
                mbqc_core::Gate::J { input, output, .. } => Some((input.clone(), output.clone())),
                _ => None,
            })
            .collect();
        js.sort();
        let want: Vec<(String, String)> = (0..k).map(|j| (format!("x{j}"), format!("y{}", k - j - 1))).collect();
        assert_eq!(js, want);
        assert_eq!(c.has_fractional(), k > 1);
        let u = circuit_unitary(&c).unwrap();
        assert!(equal_up_to_phase(&u, &dft(k), TOL), "k = {k}");
    }
}

#[test]
fn identity_synthesizes_to_trivial_j_pair() {
    let c = synth_circuit_via_flow(&identity_qfe("v", "m", "w")).unwrap().unwrap();
    assert_eq!(c.gates.len(), 2);
    assert!(c.gates.iter().all(|g| matches!(g, mbqc_core::Gate::J { angle, .. } if angle.is_zero())));
    assert!(close(&circuit_unitary(&c).unwrap(), &DenseMatrix::identity(2), 1e-12));
}

fn unit_qfe(g: &Geometry, squares: &BTreeMap<String, Angle>) -> QuadraticFormExpansion {
    let mut q = QuadraticFormExpansion::new(g.vertices().clone(), g.inputs().clone(), g.outputs().clone()).unwrap();
    for (u, v, _) in g.edges() {
        q.set_term(u, v, Angle::pi()).unwrap();
    }
    for (v, a) in squares {
        q.set_term(v, v, *a).unwrap();
    }
    q
}

#[test]
fn no_flow_geometry_gives_none() {
    let g = no_flow_fixture();
    let q = unit_qfe(&g, &BTreeMap::new());
    assert_eq!(synth_circuit_via_flow(&q).unwrap(), None);
}

#[test]
fn fractional_flow_edge_gives_none() {
    let mut q = identity_qfe("v", "m", "w");
    q.set_term("v", "m", Angle::frac(1, 2)).unwrap();
    assert_eq!(synth_circuit_via_flow(&q).unwrap(), None);
}

#[test]
fn dirty_outputs_are_rejected() {
    let mut q = identity_qfe("v", "m", "w");
    q.set_term("w", "w", Angle::frac(1, 4)).unwrap();
    assert!(matches!(synth_circuit_via_flow(&q), Err(QfeError::DirtyOutputs(d)) if d == vec!["w".to_string()]));
    assert!(matches!(synth_pattern_via_eflow(&q), Err(QfeError::DirtyOutputs(_))));
    // padding cleans them without changing the operator
    let p = pad_outputs(&q);
    assert!(p.dirty_outputs().is_empty());
    assert!(close(&evaluate(&p).unwrap().matrix, &evaluate(&q).unwrap().matrix, 1e-12));
}

#[test]
fn nonuniform_gadget_entries() {
    let e = evaluate(&nonuniformity_gadget()).unwrap().matrix;
    for i in 0..4usize {
        for j in 0..4 {
            let want = if i != j {
                c64(0.0, 0.0)
            } else if i.count_ones() % 2 == 0 {
                c64(1.0, 1.0)
            } else {
                c64(0.0, 0.0)
            };
            assert!((e.get(i, j) - want).norm() < 1e-12, "({i},{j}) = {}", e.get(i, j));
        }
    }
    assert!(!e.is_unitary(1e-6));
}

#[test]
fn parity_gadget_with_zero_square_is_a_parity_phase() {
    for phi in [Angle::frac(1, 4), Angle::frac(1, 3), Angle::half_pi()] {
        let e = evaluate(&parity_gadget(Angle::zero(), phi)).unwrap().matrix;
        for i in 0..4usize {
            let want = Complex64::from_polar(1.0, phi.radians() * (i.count_ones() % 2) as f64);
            assert!((e.get(i, i) - want).norm() < 1e-12);
        }
    }
}

fn zz_angles() -> Vec<Angle> {
    vec![Angle::half_pi(), Angle::frac(1, 3), Angle::frac(1, 4)]
}

#[test]
fn zz_patterns_rotate_about_z_parity() {
    for k in 1..=3 {
        for theta in zz_angles() {
            let want = zz_target(k, theta);
            let u = pattern_unitary(&zz_many_pattern(k, theta)).unwrap();
            assert!(equal_up_to_phase(&u, &want, TOL), "xy k={k} θ={theta}");
            let u = pattern_unitary(&zz_many_yz_pattern(k, theta)).unwrap();
            assert!(equal_up_to_phase(&u, &want, TOL), "yz k={k} θ={theta}");
            let e = evaluate(&zz_many_qfe(k, theta)).unwrap().matrix;
            assert!(equal_up_to_phase(&e, &want, TOL));
        }
    }
}

#[test]
fn zz_geometries_have_extended_flow() {
    for k in 1..=3 {
        let theta = Angle::frac(1, 4);
        let g = mbqc_core::pattern_geometry(&zz_many_yz_pattern(k, theta)).unwrap();
        assert!(find_flow(&g).unwrap().is_none() || k == 1);
        let t = BTreeSet::from(["a".to_string()]);
        assert!(find_eflow(&g, &t).unwrap().is_some());

        let mut g = induced_geometry(&zz_many_qfe(k, theta));
        g.remove_vertex("a2");
        assert!(find_eflow(&g, &BTreeSet::from(["a1".to_string()])).unwrap().is_some());
    }
}

#[test]
fn eflow_synthesis_reproduces_zz_pattern() {
    for k in 1..=3 {
        for theta in zz_angles() {
            let q = zz_many_qfe(k, theta);
            let p = synth_pattern_via_eflow(&q).unwrap().expect("eflow exists");
            let reference = mbqc_dkp::standardize(&zz_many_pattern(k, theta)).unwrap();
            assert!(patterns_congruent(&p, &reference), "k={k}\n{p}\n{reference}");
            let u = pattern_unitary(&p).unwrap();
            assert!(equal_up_to_phase(&u, &zz_target(k, theta), TOL));
        }
    }
}

#[test]
fn eflow_synthesis_of_fractional_fourier() {
    for k in 1..=3 {
        let q = qft_qfe(k);
        let p = synth_pattern_via_eflow(&q).unwrap().expect("eflow exists");
        let u = pattern_unitary(&p).unwrap();
        let d = dft(k);
        // padded outputs carry fresh labels in the same sorted order
        assert_eq!(u.rows, d.rows);
        let mut u = u;
        u.row_labels = d.row_labels.clone();
        assert!(equal_up_to_phase(&u, &d, TOL), "k = {k}\n{p}");
    }
}

fn same_up_to_phase_unlabelled(a: &DenseMatrix, b: &DenseMatrix) -> bool {
    let mut a = a.clone();
    a.row_labels = b.row_labels.clone();
    a.col_labels = b.col_labels.clone();
    equal_up_to_phase(&a, b, TOL)
}

#[test]
fn eflow_and_flow_synthesis_agree_on_circuits() {
    let mut r = rng(300);
    let mut done = 0;
    while done < 30 {
        let (w, n) = (r.gen_range(1..=3), r.gen_range(1..=7));
        let c = random_circuit(&mut r, w, n);
        let c = c.without_idle_wires();
        if c.gates.is_empty() {
            continue;
        }
        let q = circuit_qfe(&c).unwrap();
        if !q.dirty_outputs().is_empty() || q.len() > 12 {
            continue;
        }
        let want = circuit_unitary(&c).unwrap();
        let e = evaluate(&q).unwrap().matrix;
        // the simulator uses the symmetric-phase form of J
        assert!(equal_up_to_phase(&e, &want, TOL), "{c}");
        let via_flow = synth_circuit_via_flow(&q).unwrap().expect("circuits have flow");
        assert!(equal_up_to_phase(&circuit_unitary(&via_flow).unwrap(), &want, TOL));
        let p = synth_pattern_via_eflow(&q).unwrap().expect("flow is an eflow");
        let idle: BTreeSet<String> = q.inputs().difference(&p.qubits()).cloned().collect();
        let u = pattern_unitary_on(&p, &idle, SimOptions::default()).unwrap();
        assert!(same_up_to_phase_unlabelled(&u, &want), "{c}\n{p}");
        done += 1;
    }
}

/// Layered search for a gflow with XY planes: each round adds every vertex
/// that some subset of the already-placed non-inputs corrects.
fn find_gflow_by_search(g: &Geometry) -> Option<GflowCertificate> {
    let mut placed: BTreeSet<String> = g.outputs().clone();
    let mut cert = GflowCertificate::default();
    for v in &placed {
        cert.layers.insert(v.clone(), 0);
    }
    let mut layer = 0;
    loop {
        layer += 1;
        let pool: Vec<String> = placed.iter().filter(|v| !g.inputs().contains(*v)).cloned().collect();
        let mut fresh = Vec::new();
        for v in g.vertices().iter().filter(|v| !placed.contains(*v)) {
            let mut best: Option<BTreeSet<String>> = None;
            for mask in 1u32..(1 << pool.len()) {
                let s: BTreeSet<String> = (0..pool.len()).filter(|i| mask >> i & 1 == 1).map(|i| pool[i].clone()).collect();
                let odd = odd_neighborhood(g, &s);
                if odd.contains(v) && odd.iter().all(|w| w == v || placed.contains(w)) {
                    if best.as_ref().map_or(true, |b| s.len() < b.len()) {
                        best = Some(s);
                    }
                }
            }
            if let Some(s) = best {
                fresh.push((v.clone(), s));
            }
        }
        if fresh.is_empty() {
            return (placed.len() == g.vertex_count()).then_some(cert);
        }
        for (v, s) in fresh {
            cert.g.insert(v.clone(), s);
            cert.layers.insert(v.clone(), layer);
            cert.planes.insert(v.clone(), Plane::XY);
            placed.insert(v);
        }
    }
}

fn random_squares(r: &mut mbqc_testkit::TestRng, g: &Geometry) -> BTreeMap<String, Angle> {
    g.vertices().iter().filter(|v| !g.outputs().contains(*v)).map(|v| (v.clone(), random_angle(r))).collect()
}

#[test]
fn gflow_synthesis_on_lifted_flows() {
    let mut r = rng(301);
    let mut done = 0;
    while done < 30 {
        let n = r.gen_range(3..=8);
        let k = r.gen_range(1..=n.min(3));
        let g = random_geometry(&mut r, n, 0.3, k);
        let Some(cert) = find_flow(&g).unwrap() else { continue };
        let q = unit_qfe(&g, &random_squares(&mut r, &g));
        let lifted = lift_flow_to_gflow(&g, &cert);
        assert!(verify_gflow(&g, &lifted));
        let p = synth_pattern_via_gflow(&q, &lifted).unwrap();
        let u = pattern_unitary(&p).unwrap();
        let e = evaluate(&q).unwrap();
        assert!(u.is_unitary(TOL));
        let want = e.matrix;
        assert!(equal_up_to_phase(&u, &want, TOL), "{p}");
        done += 1;
    }
}

#[test]
fn gflow_synthesis_beyond_flow() {
    let mut r = rng(302);
    let mut found = 0;
    let mut tries = 0;
    while found < 10 && tries < 20_000 {
        tries += 1;
        let n = r.gen_range(4..=7);
        let g = random_geometry(&mut r, n, 0.4, 2);
        if find_flow(&g).unwrap().is_some() {
            continue;
        }
        let Some(cert) = find_gflow_by_search(&g) else { continue };
        assert!(verify_gflow(&g, &cert));
        if cert.g.values().all(|s| s.len() < 2) {
            continue;
        }
        let q = unit_qfe(&g, &random_squares(&mut r, &g));
        let p = synth_pattern_via_gflow(&q, &cert).unwrap();
        let u = pattern_unitary(&p).unwrap();
        let e = evaluate(&q).unwrap();
        assert!(u.is_isometry(TOL), "{p}");
        assert!(equal_up_to_phase(&u, &e.matrix, TOL), "{p}");

        let mut broken = cert.clone();
        let v = cert.g.keys().next().unwrap().clone();
        broken.layers.insert(v, 0);
        if !verify_gflow(&g, &broken) {
            assert!(matches!(synth_pattern_via_gflow(&q, &broken), Err(QfeError::BadCertificate(_))));
        }
        found += 1;
    }
    assert_eq!(found, 10, "only {found} gflow-but-no-flow geometries in {tries} tries");
}

#[test]
fn gflow_synthesis_rejects_bad_input() {
    let g = grid_geometry(2, 2).unwrap();
    let cert = lift_flow_to_gflow(&g, &find_flow(&g).unwrap().unwrap());
    let q = unit_qfe(&g, &BTreeMap::new());
    let mut yz = cert.clone();
    let v = yz.planes.keys().next().unwrap().clone();
    yz.planes.insert(v, Plane::YZ);
    assert!(matches!(synth_pattern_via_gflow(&q, &yz), Err(QfeError::BadCertificate(_))));
    let mut frac = q.clone();
    let (u, w, _) = g.edges().next().map(|(a, b, t)| (a.to_owned(), b.to_owned(), t)).unwrap();
    frac.set_term(&u, &w, Angle::frac(1, 4)).unwrap();
    assert!(matches!(synth_pattern_via_gflow(&frac, &cert), Err(QfeError::Fractional(_))));
}

#[test]
fn single_cross_term_decrosses_to_the_zz_shape() {
    let mut q = QuadraticFormExpansion::new(["u", "v"], ["u", "v"], ["u", "v"]).unwrap().with_prefactor(c64(1.0, 0.0));
    q.set_term("u", "v", Angle::frac(1, 4)).unwrap();
    let d = decross(&q);
    assert_eq!(d.len(), 4);
    assert!(d.is_unit_weight());
    let fresh: Vec<String> = d.indices().iter().filter(|v| *v != "u" && *v != "v").cloned().collect();
    let hub = fresh.iter().find(|a| d.degree(a) == 3).expect("hub");
    let tail = fresh.iter().find(|a| d.degree(a) == 1).expect("tail");
    assert_eq!(d.neighbors(hub), BTreeSet::from(["u".to_string(), "v".to_string(), tail.clone()]));
    assert_eq!(d.square(tail), Angle::frac(-1, 8));
    assert_eq!(d.square("u"), Angle::frac(1, 8));
    assert!(close(&evaluate(&d).unwrap().matrix, &evaluate(&q).unwrap().matrix, 1e-12));
}

#[test]
fn telescoping_a_long_chain() {
    // u - c1 - c2 - ... - c6 - w with the chain interior
    let labels: Vec<String> = std::iter::once("u".to_string())
        .chain((1..=6).map(|i| format!("c{i}")))
        .chain(std::iter::once("w".to_string()))
        .collect();
    let mut q = QuadraticFormExpansion::new(labels.clone(), ["u"], ["u"]).unwrap().with_prefactor(c64(1.0, 0.0));
    // a dangling chain hanging off u
    q.remove_index("w");
    for pair in labels[..7].windows(2) {
        q.set_term(&pair[0], &pair[1], Angle::pi()).unwrap();
    }
    let squares = [Angle::frac(1, 4), Angle::zero(), Angle::pi(), Angle::frac(1, 3), Angle::zero(), Angle::frac(3, 4)];
    for (i, a) in squares.iter().enumerate() {
        q.set_term(&format!("c{}", i + 1), &format!("c{}", i + 1), *a).unwrap();
    }
    let t = telescope(&q);
    assert!(t.len() < q.len());
    assert!(close(&evaluate(&t).unwrap().matrix, &evaluate(&q).unwrap().matrix, 1e-9));
}

fn random_qfe(seed: u64, n: usize, fractional: bool) -> QuadraticFormExpansion {
    let mut r = rng(seed);
    let labels: Vec<String> = (0..n).map(|i| format!("q{i}")).collect();
    let k = r.gen_range(1..=n.min(3));
    let mut ins = labels.clone();
    let mut outs = labels.clone();
    use rand::seq::SliceRandom;
    ins.shuffle(&mut r);
    outs.shuffle(&mut r);
    let mut q = QuadraticFormExpansion::new(labels.clone(), ins[..k].to_vec(), outs[..k].to_vec())
        .unwrap()
        .with_prefactor(c64(1.0, 0.0));
    for i in 0..n {
        if r.gen_bool(0.6) {
            q.set_term(&labels[i], &labels[i], random_angle(&mut r)).unwrap();
        }
        for j in i + 1..n {
            if r.gen_bool(0.4) {
                let a = if fractional && r.gen_bool(0.5) { Angle::frac(r.gen_range(1..4), 4) } else { Angle::pi() };
                q.set_term(&labels[i], &labels[j], a).unwrap();
            }
        }
    }
    q
}

#[test]
fn expansion_json_round_trip() {
    for seed in 0..20 {
        let q = random_qfe(seed, 6, true);
        let back = mbqc_qfe::qfe_from_json(&mbqc_qfe::qfe_to_json(&q)).unwrap();
        assert_eq!(back, q);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rewrites_preserve_the_operator(seed in 0u64..10_000, n in 2usize..=6) {
        let q = random_qfe(seed, n, true);
        let e = evaluate(&q).unwrap().matrix;
        let d = decross(&q);
        prop_assert!(d.is_unit_weight());
        prop_assume!(d.len() <= 16);
        prop_assert!(close(&evaluate(&d).unwrap().matrix, &e, TOL));
        let p = pad_outputs(&d);
        prop_assert!(p.dirty_outputs().is_empty());
        if p.len() <= 16 {
            prop_assert!(close(&evaluate(&p).unwrap().matrix, &e, TOL));
            let t = telescope(&p);
            prop_assert!(close(&evaluate(&t).unwrap().matrix, &e, TOL));
        }
    }

    #[test]
    fn composition_multiplies_operators(seed in 0u64..10_000) {
        let mut r = rng(seed);
        let k = r.gen_range(1..=2);
        let n1 = r.gen_range(k..=5);
        let n2 = r.gen_range(k..=5);
        let mid: Vec<String> = (0..k).map(|i| format!("m{i}")).collect();
        let build = |r: &mut mbqc_testkit::TestRng, prefix: &str, n: usize, first: bool| {
            let own: Vec<String> = (0..n - k).map(|i| format!("{prefix}{i}")).collect();
            let all: Vec<String> = own.iter().chain(&mid).cloned().collect();
            let ends: Vec<String> = own.iter().take(k).cloned().collect();
            // when `n - k < k` the free end reuses the shared indices
            let ends = if ends.len() == k { ends } else { mid.clone() };
            let (ins, outs) = if first { (ends, mid.clone()) } else { (mid.clone(), ends) };
            let mut q = QuadraticFormExpansion::new(all.clone(), ins, outs).unwrap().with_prefactor(c64(0.5, 0.25));
            for i in 0..all.len() {
                if r.gen_bool(0.5) {
                    q.set_term(&all[i], &all[i], random_angle(r)).unwrap();
                }
                for j in i + 1..all.len() {
                    if r.gen_bool(0.4) {
                        q.set_term(&all[i], &all[j], Angle::frac(r.gen_range(1..=4), 4)).unwrap();
                    }
                }
            }
            q
        };
        let q1 = build(&mut r, "a", n1, true);
        let q2 = build(&mut r, "b", n2, false);
        prop_assume!(q1.len() + q2.len() - k <= 10);
        let c = compose_qfe(&q1, &q2).unwrap();
        let (e1, e2) = (evaluate(&q1).unwrap().matrix, evaluate(&q2).unwrap().matrix);
        let prod = e2.mul(&e1);
        let ec = evaluate(&c).unwrap().matrix;
        prop_assert_eq!(&ec.row_labels, &e2.row_labels);
        prop_assert_eq!(&ec.col_labels, &e1.col_labels);
        prop_assert!(close(&ec, &prod, TOL));
    }
}
