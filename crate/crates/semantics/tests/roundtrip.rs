use std::collections::{BTreeMap, BTreeSet};

use mbqc_core::fixtures::no_flow_fixture;
use mbqc_core::{
    interaction_graph, pattern_geometry, patterns_congruent, same_gate_multiset, Angle, Command, DepExpr, Geometry,
    MeasurementPattern,
};
use mbqc_dkp::{dkp_complete, test_dependencies};
use mbqc_flow::find_flow;
use mbqc_semantics::{semantic_dkp, star_decompose};
use mbqc_sim::{circuit_unitary, equal_up_to_phase, pattern_unitary};
use mbqc_testkit::{random_circuit, random_geometry, rng};
use proptest::prelude::*;
use rand::Rng;

#[test]
fn extract_after_compile_recovers_the_circuit() {
    let mut r = rng(200);
    for _ in 0..200 {
        let (wires, gates) = (r.gen_range(1..=6), r.gen_range(0..=20));
        let c = random_circuit(&mut r, wires, gates);
        let p = dkp_complete(&c).unwrap();
        let back = semantic_dkp(&p).unwrap().expect("compiled patterns have a flow");
        assert!(same_gate_multiset(&back, &c.without_idle_wires()), "{c}\n{back}");
    }
}

#[test]
fn compile_after_extract_is_congruent() {
    let mut r = rng(201);
    for _ in 0..200 {
        let (wires, gates) = (r.gen_range(1..=6), r.gen_range(0..=20));
        let p = dkp_complete(&random_circuit(&mut r, wires, gates)).unwrap();
        let c = semantic_dkp(&p).unwrap().unwrap();
        let q = dkp_complete(&c).unwrap();
        assert!(patterns_congruent(&p, &q), "{p}\n{q}");
    }
}

#[test]
fn extracted_unitary_matches_the_pattern() {
    let mut r = rng(202);
    let mut seen = 0;
    while seen < 40 {
        let (wires, gates) = (r.gen_range(1..=4), r.gen_range(1..=10));
        let p = dkp_complete(&random_circuit(&mut r, wires, gates)).unwrap();
        if p.qubits().len() > 10 {
            continue;
        }
        seen += 1;
        let c = semantic_dkp(&p).unwrap().unwrap();
        let u = circuit_unitary(&c).unwrap();
        let v = pattern_unitary(&p).unwrap();
        assert_eq!((&u.row_labels, &u.col_labels), (&v.row_labels, &v.col_labels));
        assert!(equal_up_to_phase(&u, &v, 1e-9), "{p}");
    }
}

fn no_flow_pattern() -> MeasurementPattern {
    let g = no_flow_fixture();
    let mut cmds: Vec<Command> = g.outputs().iter().map(|b| Command::Prepare(b.clone())).collect();
    for (a, b, _) in g.edges() {
        cmds.push(Command::Entangle(a.to_owned(), b.to_owned()));
    }
    for a in g.inputs() {
        cmds.push(Command::measure_xy(a, Angle::frac(1, 4)));
    }
    for (a, b) in g.inputs().iter().zip(g.outputs()) {
        cmds.push(Command::CorrectX(b.clone(), DepExpr::of(a)));
    }
    MeasurementPattern::new(cmds)
}

#[test]
fn no_flow_geometry_gives_none() {
    let p = no_flow_pattern();
    assert_eq!(pattern_geometry(&p).unwrap().edge_count(), 6);
    assert_eq!(semantic_dkp(&p).unwrap(), None);
}

#[test]
fn tampered_dependencies_give_none() {
    let mut r = rng(203);
    let mut checked = 0;
    while checked < 50 {
        let (wires, gates) = (r.gen_range(2..=4), r.gen_range(3..=10));
        let c = random_circuit(&mut r, wires, gates);
        let mut p = dkp_complete(&c).unwrap();
        let outs: Vec<String> = p.outputs().into_iter().collect();
        let measured: Vec<String> = p.discarded().into_iter().collect();
        if measured.is_empty() {
            continue;
        }
        let o = &outs[r.gen_range(0..outs.len())];
        let m = &measured[r.gen_range(0..measured.len())];
        p.commands.push(Command::CorrectZ(o.clone(), DepExpr::of(m)));
        let f = interaction_graph(&c).unwrap().1;
        assert!(!test_dependencies(&p, &f).unwrap());
        assert_eq!(semantic_dkp(&p).unwrap(), None, "{p}");
        checked += 1;
    }
}

fn check_recomposition(geo: &Geometry, f: &BTreeMap<String, String>) {
    let d = star_decompose(geo, f).unwrap();
    assert_eq!(&d.recompose().unwrap(), geo);
    let image: BTreeSet<String> = f.values().cloned().collect();
    let tilde: BTreeSet<String> = geo.vertices().difference(&image).cloned().collect();
    assert_eq!(d.residual.vertices(), &tilde);
    assert_eq!(d.residual.outputs(), &tilde);
    assert_eq!(d.residual.inputs(), geo.inputs());
    assert_eq!(d.stars.len(), f.len());
    for s in &d.stars {
        let g = &s.geometry;
        assert!(g.has_edge(&s.root, &s.center));
        assert!(s.leaves.iter().all(|l| g.outputs().contains(l)));
        assert!(!g.inputs().contains(&s.center) && g.inputs().len() + 1 == g.vertex_count());
        assert!(!g.outputs().contains(&s.root) && g.outputs().len() + 1 == g.vertex_count());
    }
}

#[test]
fn recomposition_on_circuit_geometries() {
    let mut r = rng(204);
    for _ in 0..100 {
        let (wires, gates) = (r.gen_range(1..=6), r.gen_range(0..=25));
        let (geo, f) = interaction_graph(&random_circuit(&mut r, wires, gates)).unwrap();
        check_recomposition(&geo, &f);
    }
}

#[test]
fn recomposition_on_random_flow_geometries() {
    let mut r = rng(205);
    let mut found = 0;
    while found < 100 {
        let n = r.gen_range(2..=12);
        let k = r.gen_range(1..=n);
        let p = r.gen_range(0.0..0.4);
        let geo = random_geometry(&mut r, n, p, k);
        if let Some(cert) = find_flow(&geo).unwrap() {
            check_recomposition(&geo, &cert.successor.f);
            found += 1;
        }
    }
}

proptest! {
    #[test]
    fn extraction_round_trips(seed in 0u64..10_000) {
        let mut r = rng(seed);
        let (wires, gates) = (r.gen_range(1..=5), r.gen_range(0..=15));
        let c = random_circuit(&mut r, wires, gates);
        let back = semantic_dkp(&dkp_complete(&c).unwrap()).unwrap().unwrap();
        prop_assert!(same_gate_multiset(&back, &c.without_idle_wires()));
        back.validate().unwrap();
    }
}
