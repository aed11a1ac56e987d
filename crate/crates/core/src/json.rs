//! JSON documents for geometries, patterns and circuits.

use std::collections::BTreeMap;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::angle::Angle;
use crate::circuit::{CircuitIR, Gate};
use crate::dep::DepExpr;
use crate::error::{CoreError, CoreResult};
use crate::geometry::{Geometry, Plane};
use crate::pattern::{Command, MeasurementPattern};

fn one() -> i64 {
    1
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EdgeDoc {
    pub u: String,
    pub v: String,
    #[serde(default = "one")]
    pub weight_num: i64,
    #[serde(default = "one")]
    pub weight_den: i64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GeometryDoc {
    pub vertices: Vec<String>,
    #[serde(default)]
    pub edges: Vec<EdgeDoc>,
    #[serde(default)]
    pub inputs: Vec<String>,
    #[serde(default)]
    pub outputs: Vec<String>,
    #[serde(default)]
    pub planes: BTreeMap<String, String>,
}

impl From<&Geometry> for GeometryDoc {
    fn from(g: &Geometry) -> Self {
        GeometryDoc {
            vertices: g.vertices().iter().cloned().collect(),
            edges: g
                .edges()
                .map(|(u, v, w)| EdgeDoc {
                    u: u.into(),
                    v: v.into(),
                    weight_num: *w.numer(),
                    weight_den: *w.denom(),
                })
                .collect(),
            inputs: g.inputs().iter().cloned().collect(),
            outputs: g.outputs().iter().cloned().collect(),
            planes: g.planes().iter().map(|(v, p)| (v.clone(), p.to_string())).collect(),
        }
    }
}

impl TryFrom<GeometryDoc> for Geometry {
    type Error = CoreError;
    fn try_from(d: GeometryDoc) -> CoreResult<Geometry> {
        let mut g = Geometry::new();
        for v in &d.vertices {
            g.add_vertex(v);
        }
        for e in &d.edges {
            if e.weight_den == 0 {
                return Err(CoreError::ZeroDenominator);
            }
            g.add_weighted_edge(&e.u, &e.v, Ratio::new(e.weight_num, e.weight_den))?;
        }
        g.set_inputs(d.inputs)?;
        g.set_outputs(d.outputs)?;
        for (v, p) in &d.planes {
            let p = Plane::parse(p).ok_or_else(|| CoreError::Json(format!("unknown plane {p}")))?;
            g.set_plane(v, p)?;
        }
        Ok(g)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "op")]
pub enum CommandDoc {
    Prepare {
        qubit: String,
    },
    Entangle {
        qubits: [String; 2],
    },
    MeasureXY {
        qubit: String,
        angle_num: i64,
        angle_den: i64,
        #[serde(default)]
        sign_dep: Vec<String>,
        #[serde(default)]
        pi_dep: Vec<String>,
    },
    MeasureYZ {
        qubit: String,
        angle_num: i64,
        angle_den: i64,
        #[serde(default)]
        sign_dep: Vec<String>,
        #[serde(default)]
        pi_dep: Vec<String>,
    },
    MeasureZ {
        qubit: String,
    },
    CorrectX {
        qubit: String,
        #[serde(default)]
        dep: Vec<String>,
    },
    CorrectZ {
        qubit: String,
        #[serde(default)]
        dep: Vec<String>,
    },
    Shift {
        qubit: String,
        #[serde(default)]
        dep: Vec<String>,
    },
    TraceOut {
        qubit: String,
    },
}

fn bits(d: &DepExpr) -> Vec<String> {
    d.bits().iter().cloned().collect()
}

impl From<&Command> for CommandDoc {
    fn from(c: &Command) -> Self {
        match c {
            Command::Prepare(q) => CommandDoc::Prepare { qubit: q.clone() },
            Command::Entangle(a, b) => CommandDoc::Entangle {
                qubits: [a.clone(), b.clone()],
            },
            Command::MeasureXY { qubit, angle, sign, pi } => CommandDoc::MeasureXY {
                qubit: qubit.clone(),
                angle_num: angle.numerator(),
                angle_den: angle.denominator(),
                sign_dep: bits(sign),
                pi_dep: bits(pi),
            },
            Command::MeasureYZ { qubit, angle, sign, pi } => CommandDoc::MeasureYZ {
                qubit: qubit.clone(),
                angle_num: angle.numerator(),
                angle_den: angle.denominator(),
                sign_dep: bits(sign),
                pi_dep: bits(pi),
            },
            Command::MeasureZ(q) => CommandDoc::MeasureZ { qubit: q.clone() },
            Command::CorrectX(q, d) => CommandDoc::CorrectX {
                qubit: q.clone(),
                dep: bits(d),
            },
            Command::CorrectZ(q, d) => CommandDoc::CorrectZ {
                qubit: q.clone(),
                dep: bits(d),
            },
            Command::Shift(q, d) => CommandDoc::Shift {
                qubit: q.clone(),
                dep: bits(d),
            },
            Command::TraceOut(q) => CommandDoc::TraceOut { qubit: q.clone() },
        }
    }
}

impl TryFrom<CommandDoc> for Command {
    type Error = CoreError;
    fn try_from(d: CommandDoc) -> CoreResult<Command> {
        Ok(match d {
            CommandDoc::Prepare { qubit } => Command::Prepare(qubit),
            CommandDoc::Entangle { qubits: [a, b] } => Command::Entangle(a, b),
            CommandDoc::MeasureXY {
                qubit,
                angle_num,
                angle_den,
                sign_dep,
                pi_dep,
            } => Command::MeasureXY {
                qubit,
                angle: Angle::new(angle_num, angle_den)?,
                sign: DepExpr::from_bits(sign_dep),
                pi: DepExpr::from_bits(pi_dep),
            },
            CommandDoc::MeasureYZ {
                qubit,
                angle_num,
                angle_den,
                sign_dep,
                pi_dep,
            } => Command::MeasureYZ {
                qubit,
                angle: Angle::new(angle_num, angle_den)?,
                sign: DepExpr::from_bits(sign_dep),
                pi: DepExpr::from_bits(pi_dep),
            },
            CommandDoc::MeasureZ { qubit } => Command::MeasureZ(qubit),
            CommandDoc::CorrectX { qubit, dep } => Command::CorrectX(qubit, DepExpr::from_bits(dep)),
            CommandDoc::CorrectZ { qubit, dep } => Command::CorrectZ(qubit, DepExpr::from_bits(dep)),
            CommandDoc::Shift { qubit, dep } => Command::Shift(qubit, DepExpr::from_bits(dep)),
            CommandDoc::TraceOut { qubit } => Command::TraceOut(qubit),
        })
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PatternDoc {
    pub commands: Vec<CommandDoc>,
}

impl From<&MeasurementPattern> for PatternDoc {
    fn from(p: &MeasurementPattern) -> Self {
        PatternDoc {
            commands: p.commands.iter().map(CommandDoc::from).collect(),
        }
    }
}

impl TryFrom<PatternDoc> for MeasurementPattern {
    type Error = CoreError;
    fn try_from(d: PatternDoc) -> CoreResult<MeasurementPattern> {
        Ok(MeasurementPattern::new(
            d.commands.into_iter().map(Command::try_from).collect::<CoreResult<_>>()?,
        ))
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum GateDoc {
    J {
        input: String,
        output: String,
        angle_num: i64,
        angle_den: i64,
    },
    CZ {
        a: String,
        b: String,
    },
    CZPow {
        a: String,
        b: String,
        t_num: i64,
        t_den: i64,
    },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CircuitDoc {
    pub gates: Vec<GateDoc>,
    pub inputs: Vec<String>,
    #[serde(default)]
    pub outputs: Option<Vec<String>>,
}

impl From<&CircuitIR> for CircuitDoc {
    fn from(c: &CircuitIR) -> Self {
        CircuitDoc {
            gates: c
                .gates
                .iter()
                .map(|g| match g {
                    Gate::J { angle, input, output } => GateDoc::J {
                        input: input.clone(),
                        output: output.clone(),
                        angle_num: angle.numerator(),
                        angle_den: angle.denominator(),
                    },
                    Gate::CZ(a, b) => GateDoc::CZ { a: a.clone(), b: b.clone() },
                    Gate::CZPow(a, b, t) => GateDoc::CZPow {
                        a: a.clone(),
                        b: b.clone(),
                        t_num: *t.numer(),
                        t_den: *t.denom(),
                    },
                })
                .collect(),
            inputs: c.inputs.iter().cloned().collect(),
            outputs: Some(c.outputs.iter().cloned().collect()),
        }
    }
}

impl TryFrom<CircuitDoc> for CircuitIR {
    type Error = CoreError;
    fn try_from(d: CircuitDoc) -> CoreResult<CircuitIR> {
        let mut gates = Vec::with_capacity(d.gates.len());
        for g in d.gates {
            gates.push(match g {
                GateDoc::J {
                    input,
                    output,
                    angle_num,
                    angle_den,
                } => Gate::J {
                    angle: Angle::new(angle_num, angle_den)?,
                    input,
                    output,
                },
                GateDoc::CZ { a, b } => Gate::CZ(a, b),
                GateDoc::CZPow { a, b, t_num, t_den } => {
                    if t_den == 0 {
                        return Err(CoreError::ZeroDenominator);
                    }
                    Gate::CZPow(a, b, Ratio::new(t_num, t_den))
                }
            });
        }
        let c = CircuitIR::from_gates(d.inputs, gates)?;
        if let Some(o) = d.outputs {
            let o: std::collections::BTreeSet<String> = o.into_iter().collect();
            if o != c.outputs {
                return Err(CoreError::IllFormedCircuit("declared outputs differ from derived outputs".into()));
            }
        }
        Ok(c)
    }
}

fn parse<D: for<'de> Deserialize<'de>>(v: &serde_json::Value) -> CoreResult<D> {
    serde_json::from_value(v.clone()).map_err(|e| CoreError::Json(e.to_string()))
}

fn to_value<S: Serialize>(s: &S) -> serde_json::Value {
    serde_json::to_value(s).expect("document serialises")
}

pub fn geometry_to_json(g: &Geometry) -> serde_json::Value {
    to_value(&GeometryDoc::from(g))
}

pub fn geometry_from_json(v: &serde_json::Value) -> CoreResult<Geometry> {
    Geometry::try_from(parse::<GeometryDoc>(v)?)
}

pub fn pattern_to_json(p: &MeasurementPattern) -> serde_json::Value {
    to_value(&PatternDoc::from(p))
}

pub fn pattern_from_json(v: &serde_json::Value) -> CoreResult<MeasurementPattern> {
    MeasurementPattern::try_from(parse::<PatternDoc>(v)?)
}

pub fn circuit_to_json(c: &CircuitIR) -> serde_json::Value {
    to_value(&CircuitDoc::from(c))
}

pub fn circuit_from_json(v: &serde_json::Value) -> CoreResult<CircuitIR> {
    CircuitIR::try_from(parse::<CircuitDoc>(v)?)
}
