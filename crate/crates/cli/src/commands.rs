use std::collections::BTreeSet;
use std::path::PathBuf;

use mbqc_core::fixtures::{grid_geometry, no_flow_fixture, qubit_reversal_fixture};
use mbqc_core::json::{circuit_to_json, geometry_to_json, pattern_to_json};
use mbqc_core::{dot::geometry_to_dot, interaction_graph, pattern_geometry, Angle, Geometry};
use mbqc_dkp::dkp_complete;
use mbqc_flow::{extremal_graph, find_eflow, find_flow, gflow_violations, lift_flow_to_gflow, FlowError};
use mbqc_qfe::{
    evaluate, induced_geometry, qfe_to_json, qft_qfe, synth_circuit_via_flow, synth_pattern_via_eflow,
    synth_pattern_via_gflow, zz_many_pattern, QfeError,
};
use mbqc_semantics::semantic_dkp;
use mbqc_sim::{circuit_unitary, equal_up_to_phase, pattern_unitary_on, DenseMatrix, SimError, SimOptions};
use serde_json::{json, Value};

use crate::cert::{flow_doc, gflow_from_json};
use crate::input::{self, any_payload, Inputs, Kind, Parsed};
use crate::report::{CliResult, Failure, RunReport, NEGATIVE, OK};
use crate::{Cmd, Gen, Via};

pub struct Ctx {
    pub tol: f64,
    pub parallel: bool,
    pub dot: Option<PathBuf>,
}

impl Ctx {
    fn sim(&self) -> SimOptions {
        SimOptions {
            tol: self.tol,
            parallel: self.parallel,
        }
    }

    fn write_dot(&self, text: &str) -> CliResult<()> {
        if let Some(p) = &self.dot {
            std::fs::write(p, text).map_err(|e| Failure::input(format!("{}: {e}", p.display())))?;
        }
        Ok(())
    }
}

pub fn name(c: &Cmd) -> &'static str {
    match c {
        Cmd::Compile { .. } => "compile",
        Cmd::Extract { .. } => "extract",
        Cmd::Flow { .. } => "flow",
        Cmd::VerifyGflow { .. } => "verify-gflow",
        Cmd::Verify { .. } => "verify",
        Cmd::Synth { .. } => "synth",
        Cmd::Gen { .. } => "gen",
        Cmd::ExportDot { .. } => "export-dot",
    }
}

type Outcome = CliResult<(RunReport, i32)>;

pub fn run(c: &Cmd, ctx: &Ctx, inputs: &mut Inputs) -> Outcome {
    let mut r = RunReport::new(name(c), String::new());
    let code = match c {
        Cmd::Compile { circuit } => {
            let c = input::circuit(&inputs.read(circuit)?)?;
            let p = dkp_complete(&c).map_err(Failure::input)?;
            r.verdict("compiled").put("pattern", pattern_to_json(&p));
            ctx.write_dot(&geometry_to_dot(&pattern_geometry(&p).map_err(Failure::input)?, None))?;
            OK
        }
        Cmd::Extract { pattern } => {
            let p = input::pattern(&inputs.read(pattern)?)?;
            match semantic_dkp(&p).map_err(Failure::input)? {
                Some(c) => {
                    r.verdict("extracted").put("circuit", circuit_to_json(&c));
                    OK
                }
                None => {
                    r.verdict("no circuit").note("no flow, or dependencies differ from the DKP construction");
                    NEGATIVE
                }
            }
        }
        Cmd::Flow { geometry, eflow } => flow(&mut r, ctx, &input::geometry(&inputs.read(geometry)?)?, eflow.as_deref())?,
        Cmd::VerifyGflow { geometry, certificate } => {
            let g = input::geometry(&inputs.read(geometry)?)?;
            let cert = gflow_from_json(&inputs.read(certificate)?)?;
            let v = gflow_violations(&g, &cert);
            if v.is_empty() {
                r.verdict("valid gflow");
                OK
            } else {
                r.verdict("invalid gflow");
                r.diagnostics.extend(v);
                NEGATIVE
            }
        }
        Cmd::Verify { input, reference } => {
            let doc = inputs.read(input)?;
            let refdoc = match reference {
                Some(p) => Some(inputs.read(p)?),
                None => None,
            };
            verify(&mut r, ctx, &doc, refdoc.as_ref())?
        }
        Cmd::Synth { qfe, via, cert } => {
            let doc = inputs.read(qfe)?;
            let q = input::qfe(&doc)?;
            r.put("qfe", qfe_to_json(&q));
            let qerr = |e: QfeError| Failure::input(e);
            let made = match via {
                Via::Flow => synth_circuit_via_flow(&q).map_err(qerr)?.map(|c| ("circuit", circuit_to_json(&c))),
                Via::Eflow => synth_pattern_via_eflow(&q).map_err(qerr)?.map(|p| ("pattern", pattern_to_json(&p))),
                Via::Gflow => {
                    let certificate = match cert {
                        Some(path) => Some(gflow_from_json(&inputs.read(path)?)?),
                        None => {
                            let g = induced_geometry(&q);
                            find_flow(&g).map_err(flow_input)?.map(|f| lift_flow_to_gflow(&g, &f))
                        }
                    };
                    match certificate {
                        Some(c) => match synth_pattern_via_gflow(&q, &c) {
                            Ok(p) => Some(("pattern", pattern_to_json(&p))),
                            Err(QfeError::BadCertificate(m)) => {
                                r.note(m);
                                None
                            }
                            Err(e) => return Err(qerr(e)),
                        },
                        None => None,
                    }
                }
            };
            match made {
                Some((k, v)) => {
                    r.verdict("synthesized").put(k, v);
                    OK
                }
                None => {
                    r.verdict("no certificate");
                    NEGATIVE
                }
            }
        }
        Cmd::Gen { what } => {
            generate(&mut r, what)?;
            OK
        }
        Cmd::ExportDot { input } => {
            let doc = inputs.read(input)?;
            let kinds = [Kind::Geometry, Kind::Pattern, Kind::Circuit, Kind::Qfe];
            let (k, v) = any_payload(&doc, &kinds).ok_or_else(|| Failure::input("no geometry, pattern, circuit or expansion"))?;
            let (g, f) = match input::parse_as(k, v)? {
                Parsed::Geometry(g) => (g, None),
                Parsed::Pattern(p) => (pattern_geometry(&p).map_err(Failure::input)?, None),
                Parsed::Circuit(c) => {
                    let (g, f) = interaction_graph(&c).map_err(Failure::input)?;
                    (g, Some(f))
                }
                Parsed::Qfe(q) => (induced_geometry(&q), None),
            };
            let f = f.or_else(|| {
                let s = doc.get("outcome")?.get("certificate")?.get("successor")?;
                serde_json::from_value(s.clone()).ok()
            });
            let text = geometry_to_dot(&g, f.as_ref());
            ctx.write_dot(&text)?;
            r.verdict("exported").put("dot_text", Value::String(text));
            OK
        }
    };
    Ok((r, code))
}

fn flow_input(e: FlowError) -> Failure {
    Failure::input(e)
}

fn flow(r: &mut RunReport, ctx: &Ctx, g: &Geometry, eflow: Option<&str>) -> CliResult<i32> {
    let found = match eflow {
        None => find_flow(g).map_err(flow_input)?,
        Some(spec) => {
            let list = spec.strip_prefix("T=").ok_or_else(|| Failure::input("--eflow expects T=a,b,..."))?;
            let t: BTreeSet<String> = list.split(',').map(str::trim).filter(|s| !s.is_empty()).map(str::to_owned).collect();
            find_eflow(g, &t).map_err(flow_input)?
        }
    };
    let label = if eflow.is_some() { "eflow" } else { "flow" };
    r.put("geometry", geometry_to_json(g));
    match found {
        Some(cert) => {
            r.verdict(label).put("certificate", serde_json::to_value(flow_doc(g, &cert)).expect("serializes"));
            ctx.write_dot(&geometry_to_dot(g, Some(&cert.successor.f)))?;
            Ok(OK)
        }
        None => {
            r.verdict(&format!("no {label}"));
            ctx.write_dot(&geometry_to_dot(g, None))?;
            Ok(NEGATIVE)
        }
    }
}

fn sim_failure(r: &mut RunReport, e: SimError) -> CliResult<i32> {
    match e {
        SimError::NotUnitary { .. } => {
            r.verdict("not unitary").note(e.to_string());
            Ok(NEGATIVE)
        }
        e => Err(Failure::input(e)),
    }
}

/// Relabels `a` to `b`'s labels when only the names differ.
fn aligned(a: &DenseMatrix, b: &DenseMatrix, r: &mut RunReport) -> DenseMatrix {
    let mut a = a.clone();
    if a.row_labels != b.row_labels || a.col_labels != b.col_labels {
        r.note(format!(
            "comparing positionally: {:?}->{:?} against {:?}->{:?}",
            a.col_labels, a.row_labels, b.col_labels, b.row_labels
        ));
        a.row_labels = b.row_labels.clone();
        a.col_labels = b.col_labels.clone();
    }
    a
}

fn verify(r: &mut RunReport, ctx: &Ctx, doc: &Value, refdoc: Option<&Value>) -> CliResult<i32> {
    let (k, v) = any_payload(doc, &[Kind::Pattern, Kind::Circuit]).ok_or_else(|| Failure::input("expected a pattern or circuit"))?;
    let subject = input::parse_as(k, v)?;
    // an explicit reference wins over one carried in the input report
    let reference = match refdoc {
        Some(d) => Some(any_payload(d, &[Kind::Circuit, Kind::Qfe]).ok_or_else(|| Failure::input("reference must be a circuit or expansion"))?),
        None => doc.get("outcome").and_then(|o| o.get("qfe")).map(|q| (Kind::Qfe, q)),
    };
    let want = match reference {
        Some((k, v)) => Some(match input::parse_as(k, v)? {
            Parsed::Circuit(c) => circuit_unitary(&c).map_err(Failure::input)?,
            Parsed::Qfe(q) => evaluate(&q).map_err(Failure::input)?.matrix,
            _ => unreachable!(),
        }),
        None => None,
    };
    let got = match subject {
        Parsed::Pattern(p) => {
            let idle: BTreeSet<String> = match &want {
                Some(w) => {
                    let wires: BTreeSet<String> = w.col_labels.iter().filter(|l| w.row_labels.contains(l)).cloned().collect();
                    wires.difference(&p.qubits()).cloned().collect()
                }
                None => BTreeSet::new(),
            };
            match pattern_unitary_on(&p, &idle, ctx.sim()) {
                Ok(u) => u,
                Err(e) => return sim_failure(r, e),
            }
        }
        Parsed::Circuit(c) => circuit_unitary(&c).map_err(Failure::input)?,
        _ => unreachable!(),
    };
    r.put("dimensions", json!([got.rows, got.cols]));
    let Some(want) = want else {
        r.verdict(if got.is_unitary(ctx.tol) { "unitary" } else { "isometry" });
        return Ok(OK);
    };
    let got = aligned(&got, &want, r);
    if equal_up_to_phase(&got, &want, ctx.tol) {
        r.verdict("equal up to phase");
        Ok(OK)
    } else {
        r.verdict("mismatch");
        Ok(NEGATIVE)
    }
}

/// `3/4`, `3pi/4`, `-pi/2`, `pi`: multiples of pi.
fn parse_angle(s: &str) -> CliResult<Angle> {
    let bad = || Failure::input(format!("bad angle {s}"));
    let (n, d) = s.trim().split_once('/').unwrap_or((s.trim(), "1"));
    let n = n.trim().trim_end_matches("pi").trim_end_matches('*');
    let n: i64 = match n {
        "" => 1,
        "-" => -1,
        n => n.parse().map_err(|_| bad())?,
    };
    let d: i64 = d.trim().parse().map_err(|_| bad())?;
    Angle::new(n, d).map_err(Failure::input)
}

fn generate(r: &mut RunReport, what: &Gen) -> CliResult<()> {
    let geometry = |r: &mut RunReport, g: Geometry| {
        r.verdict("generated").put("geometry", geometry_to_json(&g));
    };
    match what {
        Gen::Grid { rows, cols } => geometry(r, grid_geometry(*rows, *cols).map_err(Failure::input)?),
        Gen::Extremal { parts } => geometry(r, extremal_graph(parts).map_err(Failure::input)?),
        Gen::Noflow => geometry(r, no_flow_fixture()),
        Gen::Reversal { k } => geometry(r, qubit_reversal_fixture(*k).map_err(Failure::input)?),
        Gen::Qft { k } => {
            if !(1..=12).contains(k) {
                return Err(Failure::input("qft size must be in 1..=12"));
            }
            r.verdict("generated").put("qfe", qfe_to_json(&qft_qfe(*k)));
        }
        Gen::Zzmany { k, angle } => {
            if *k == 0 {
                return Err(Failure::input("k must be positive"));
            }
            r.verdict("generated").put("pattern", pattern_to_json(&zz_many_pattern(*k, parse_angle(angle)?)));
        }
    }
    Ok(())
}
