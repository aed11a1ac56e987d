//! Measurement patterns in execution order.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::angle::Angle;
use crate::dep::{result_bit, DepExpr};
use crate::error::{CoreError, CoreResult};
use crate::geometry::{Geometry, Plane};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Command {
    Prepare(String),
    Entangle(String, String),
    MeasureXY {
        qubit: String,
        angle: Angle,
        sign: DepExpr,
        pi: DepExpr,
    },
    MeasureYZ {
        qubit: String,
        angle: Angle,
        sign: DepExpr,
        pi: DepExpr,
    },
    MeasureZ(String),
    CorrectX(String, DepExpr),
    CorrectZ(String, DepExpr),
    Shift(String, DepExpr),
    TraceOut(String),
}

impl Command {
    pub fn measure_xy(q: &str, angle: Angle) -> Command {
        Command::MeasureXY {
            qubit: q.to_owned(),
            angle,
            sign: DepExpr::new(),
            pi: DepExpr::new(),
        }
    }

    pub fn measure_yz(q: &str, angle: Angle) -> Command {
        Command::MeasureYZ {
            qubit: q.to_owned(),
            angle,
            sign: DepExpr::new(),
            pi: DepExpr::new(),
        }
    }

    /// Qubits acted on (for Shift, the qubit whose result is shifted).
    pub fn qubits(&self) -> Vec<&str> {
        match self {
            Command::Entangle(a, b) => vec![a, b],
            Command::Prepare(q)
            | Command::MeasureZ(q)
            | Command::TraceOut(q)
            | Command::CorrectX(q, _)
            | Command::CorrectZ(q, _)
            | Command::Shift(q, _)
            | Command::MeasureXY { qubit: q, .. }
            | Command::MeasureYZ { qubit: q, .. } => vec![q],
        }
    }

    /// Dependency expressions read by this command.
    pub fn deps(&self) -> Vec<&DepExpr> {
        match self {
            Command::MeasureXY { sign, pi, .. } | Command::MeasureYZ { sign, pi, .. } => vec![sign, pi],
            Command::CorrectX(_, d) | Command::CorrectZ(_, d) | Command::Shift(_, d) => vec![d],
            _ => vec![],
        }
    }

    pub fn is_measurement(&self) -> bool {
        matches!(
            self,
            Command::MeasureXY { .. } | Command::MeasureYZ { .. } | Command::MeasureZ(_)
        )
    }

    pub fn is_correction(&self) -> bool {
        matches!(self, Command::CorrectX(..) | Command::CorrectZ(..))
    }

    /// Discards its qubit.
    pub fn is_destructive(&self) -> bool {
        self.is_measurement() || matches!(self, Command::TraceOut(_))
    }

    fn phase(&self) -> u8 {
        match self {
            Command::Prepare(_) => 0,
            Command::Entangle(..) => 1,
            Command::CorrectX(..) | Command::CorrectZ(..) => 3,
            _ => 2,
        }
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Command::Prepare(q) => write!(f, "N({q})"),
            Command::Entangle(a, b) => write!(f, "E({a},{b})"),
            Command::MeasureXY { qubit, angle, sign, pi } => write!(f, "M_xy({qubit},{angle};{sign};{pi})"),
            Command::MeasureYZ { qubit, angle, sign, pi } => write!(f, "M_yz({qubit},{angle};{sign};{pi})"),
            Command::MeasureZ(q) => write!(f, "M_z({q})"),
            Command::CorrectX(q, d) => write!(f, "X({q})^{d}"),
            Command::CorrectZ(q, d) => write!(f, "Z({q})^{d}"),
            Command::Shift(q, d) => write!(f, "S({q})^{d}"),
            Command::TraceOut(q) => write!(f, "Tr({q})"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MeasurementPattern {
    pub commands: Vec<Command>,
}

impl MeasurementPattern {
    pub fn new(commands: Vec<Command>) -> MeasurementPattern {
        MeasurementPattern { commands }
    }

    /// Prepare*, Entangle*, (measurement | shift | trace-out)*, correction*.
    pub fn is_standard(&self) -> bool {
        self.commands.windows(2).all(|w| w[0].phase() <= w[1].phase())
    }

    pub fn has_shift(&self) -> bool {
        self.commands.iter().any(|c| matches!(c, Command::Shift(..)))
    }

    pub fn qubits(&self) -> BTreeSet<String> {
        self.commands
            .iter()
            .flat_map(|c| c.qubits().into_iter().map(str::to_owned))
            .collect()
    }

    pub fn prepared(&self) -> BTreeSet<String> {
        self.commands
            .iter()
            .filter_map(|c| match c {
                Command::Prepare(q) => Some(q.clone()),
                _ => None,
            })
            .collect()
    }

    pub fn discarded(&self) -> BTreeSet<String> {
        self.commands
            .iter()
            .filter(|c| c.is_destructive())
            .map(|c| c.qubits()[0].to_owned())
            .collect()
    }

    pub fn inputs(&self) -> BTreeSet<String> {
        let prep = self.prepared();
        self.qubits().into_iter().filter(|q| !prep.contains(q)).collect()
    }

    pub fn outputs(&self) -> BTreeSet<String> {
        let gone = self.discarded();
        self.qubits().into_iter().filter(|q| !gone.contains(q)).collect()
    }

    /// XY/YZ measurement angles by qubit.
    pub fn angles(&self) -> BTreeMap<String, Angle> {
        self.commands
            .iter()
            .filter_map(|c| match c {
                Command::MeasureXY { qubit, angle, .. } | Command::MeasureYZ { qubit, angle, .. } => {
                    Some((qubit.clone(), *angle))
                }
                _ => None,
            })
            .collect()
    }
}

impl fmt::Display for MeasurementPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.commands.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    /// Prepare of a qubit that was measured or traced out.
    ReallocationAfterDiscard,
    /// Second Prepare of a live qubit.
    DoublePrepare,
    /// Prepare of an input qubit that was already used.
    PrepareAfterUse,
    /// Operation on a discarded qubit.
    UseAfterDiscard,
    /// Dependency on a bit not produced earlier.
    DanglingDependency,
    /// Entangle(v, v).
    SelfEntangle,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Rule::ReallocationAfterDiscard => "re-allocation after discard",
            Rule::DoublePrepare => "double prepare",
            Rule::PrepareAfterUse => "prepare after prior use",
            Rule::UseAfterDiscard => "use after discard",
            Rule::DanglingDependency => "dependency on unmeasured bit",
            Rule::SelfEntangle => "self-entangle",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostic {
    pub index: usize,
    pub rule: Rule,
    pub message: String,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at index {}: {}", self.rule, self.index, self.message)
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum QState {
    Live,
    Gone,
}

/// All well-formedness violations, in command order.
pub fn validate_pattern(p: &MeasurementPattern) -> Vec<Diagnostic> {
    let mut state: BTreeMap<&str, QState> = BTreeMap::new();
    let mut prepared: BTreeSet<&str> = BTreeSet::new();
    let mut bits: BTreeSet<String> = BTreeSet::new();
    let mut out = Vec::new();
    let mut diag = |index: usize, rule: Rule, message: String| out.push(Diagnostic { index, rule, message });

    for (i, c) in p.commands.iter().enumerate() {
        for d in c.deps() {
            for b in d.bits() {
                if !bits.contains(b) {
                    diag(i, Rule::DanglingDependency, format!("{b} is not produced earlier"));
                }
            }
        }
        match c {
            Command::Prepare(q) => {
                match state.get(q.as_str()) {
                    Some(QState::Gone) => diag(i, Rule::ReallocationAfterDiscard, format!("{q} was discarded")),
                    Some(QState::Live) if prepared.contains(q.as_str()) => {
                        diag(i, Rule::DoublePrepare, format!("{q} is already prepared"))
                    }
                    Some(QState::Live) => diag(i, Rule::PrepareAfterUse, format!("{q} was used as an input")),
                    None => {}
                }
                prepared.insert(q);
                state.insert(q, QState::Live);
            }
            Command::Shift(q, _) => {
                if !bits.contains(&result_bit(q)) {
                    diag(i, Rule::DanglingDependency, format!("shift of unmeasured {q}"));
                }
            }
            _ => {
                if let Command::Entangle(a, b) = c {
                    if a == b {
                        diag(i, Rule::SelfEntangle, format!("{a}"));
                    }
                }
                for q in c.qubits() {
                    match state.get(q) {
                        Some(QState::Gone) => diag(i, Rule::UseAfterDiscard, format!("{q} was discarded")),
                        _ => {
                            state.insert(q, QState::Live);
                        }
                    }
                }
                if c.is_destructive() {
                    let q = c.qubits()[0];
                    state.insert(q, QState::Gone);
                    if c.is_measurement() {
                        bits.insert(result_bit(q));
                    }
                }
            }
        }
    }
    out
}

/// Open graph of a well-formed pattern.
pub fn pattern_geometry(p: &MeasurementPattern) -> CoreResult<Geometry> {
    let diags = validate_pattern(p);
    if let Some(d) = diags.first() {
        return Err(CoreError::IllFormedPattern(d.to_string()));
    }
    let mut g = Geometry::new();
    for q in p.qubits() {
        g.add_vertex(&q);
    }
    for c in &p.commands {
        match c {
            Command::Entangle(a, b) => g.toggle_edge(a, b)?,
            Command::MeasureXY { qubit, .. } => g.set_plane(qubit, Plane::XY)?,
            Command::MeasureYZ { qubit, .. } => g.set_plane(qubit, Plane::YZ)?,
            Command::MeasureZ(q) => g.set_plane(q, Plane::XZ)?,
            _ => {}
        }
    }
    g.set_inputs(p.inputs())?;
    g.set_outputs(p.outputs())?;
    Ok(g)
}

/// Same multiset of commands (entangling pairs unordered), both well-formed and standard. Within standard
/// form the only legal reorderings of a fixed command multiset are
/// transpositions of commuting commands.
pub fn patterns_congruent(a: &MeasurementPattern, b: &MeasurementPattern) -> bool {
    fn canon(p: &MeasurementPattern) -> Vec<Command> {
        let mut v: Vec<Command> = p
            .commands
            .iter()
            .map(|c| match c {
                Command::Entangle(a, b) if a > b => Command::Entangle(b.clone(), a.clone()),
                other => other.clone(),
            })
            .collect();
        v.sort();
        v
    }
    let (x, y) = (canon(a), canon(b));
    x == y && a.is_standard() && b.is_standard() && validate_pattern(a).is_empty() && validate_pattern(b).is_empty()
}
