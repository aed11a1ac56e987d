//! The quadratic form expansion `C Σ_x e^{iQ(x)} |x_O⟩⟨x_I|`.

use std::collections::{BTreeMap, BTreeSet};

use mbqc_core::{Angle, Geometry};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{QfeError, QfeResult};

/// `Q(x) = Σ θ_uv x_u x_v` over unordered pairs, singletons included.
/// Absent pairs are zero; stored angles are never zero.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadraticFormExpansion {
    indices: BTreeSet<String>,
    inputs: BTreeSet<String>,
    outputs: BTreeSet<String>,
    terms: BTreeMap<(String, String), Angle>,
    /// `None` leaves the scalar symbolic.
    pub prefactor: Option<Complex64>,
}

fn key(u: &str, v: &str) -> (String, String) {
    if u <= v {
        (u.to_owned(), v.to_owned())
    } else {
        (v.to_owned(), u.to_owned())
    }
}

impl QuadraticFormExpansion {
    pub fn new<A, B, C, S, T, U>(indices: A, inputs: B, outputs: C) -> QfeResult<QuadraticFormExpansion>
    where
        A: IntoIterator<Item = S>,
        B: IntoIterator<Item = T>,
        C: IntoIterator<Item = U>,
        S: Into<String>,
        T: Into<String>,
        U: Into<String>,
    {
        let indices: BTreeSet<String> = indices.into_iter().map(Into::into).collect();
        let inputs: BTreeSet<String> = inputs.into_iter().map(Into::into).collect();
        let outputs: BTreeSet<String> = outputs.into_iter().map(Into::into).collect();
        if let Some(x) = inputs.iter().chain(&outputs).find(|x| !indices.contains(*x)) {
            return Err(QfeError::UnknownIndex(x.clone()));
        }
        Ok(QuadraticFormExpansion {
            indices,
            inputs,
            outputs,
            terms: BTreeMap::new(),
            prefactor: None,
        })
    }

    pub fn with_prefactor(mut self, c: Complex64) -> Self {
        self.prefactor = Some(c);
        self
    }

    pub fn indices(&self) -> &BTreeSet<String> {
        &self.indices
    }

    pub fn inputs(&self) -> &BTreeSet<String> {
        &self.inputs
    }

    pub fn outputs(&self) -> &BTreeSet<String> {
        &self.outputs
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn add_index(&mut self, v: &str) {
        self.indices.insert(v.to_owned());
    }

    /// Removes `v` and every term mentioning it.
    pub fn remove_index(&mut self, v: &str) {
        self.indices.remove(v);
        self.inputs.remove(v);
        self.outputs.remove(v);
        self.terms.retain(|(a, b), _| a != v && b != v);
    }

    pub fn set_outputs<I: IntoIterator<Item = String>>(&mut self, it: I) -> QfeResult<()> {
        let o: BTreeSet<String> = it.into_iter().collect();
        if let Some(x) = o.iter().find(|x| !self.indices.contains(*x)) {
            return Err(QfeError::UnknownIndex(x.clone()));
        }
        self.outputs = o;
        Ok(())
    }

    pub fn term(&self, u: &str, v: &str) -> Angle {
        self.terms.get(&key(u, v)).copied().unwrap_or_default()
    }

    pub fn square(&self, v: &str) -> Angle {
        self.term(v, v)
    }

    pub fn set_term(&mut self, u: &str, v: &str, a: Angle) -> QfeResult<()> {
        for x in [u, v] {
            if !self.indices.contains(x) {
                return Err(QfeError::UnknownIndex(x.to_owned()));
            }
        }
        if a.is_zero() {
            self.terms.remove(&key(u, v));
        } else {
            self.terms.insert(key(u, v), a);
        }
        Ok(())
    }

    pub fn add_term(&mut self, u: &str, v: &str, a: Angle) -> QfeResult<()> {
        let cur = self.term(u, v);
        self.set_term(u, v, cur + a)
    }

    /// All nonzero terms as `(u, v, θ)` with `u <= v`.
    pub fn terms(&self) -> impl Iterator<Item = (&str, &str, Angle)> {
        self.terms.iter().map(|((a, b), t)| (a.as_str(), b.as_str(), *t))
    }

    pub fn cross_terms(&self) -> impl Iterator<Item = (&str, &str, Angle)> {
        self.terms().filter(|(a, b, _)| a != b)
    }

    pub fn neighbors(&self, v: &str) -> BTreeSet<String> {
        self.cross_terms()
            .filter_map(|(a, b, _)| {
                if a == v {
                    Some(b.to_owned())
                } else if b == v {
                    Some(a.to_owned())
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn degree(&self, v: &str) -> usize {
        self.neighbors(v).len()
    }

    /// Outputs carrying a nonzero square term.
    pub fn dirty_outputs(&self) -> Vec<String> {
        self.outputs.iter().filter(|v| !self.square(v).is_zero()).cloned().collect()
    }

    pub fn require_clean_outputs(&self) -> QfeResult<()> {
        let d = self.dirty_outputs();
        if d.is_empty() {
            Ok(())
        } else {
            Err(QfeError::DirtyOutputs(d))
        }
    }

    pub fn is_unit_weight(&self) -> bool {
        self.cross_terms().all(|(_, _, t)| t == Angle::pi())
    }

    pub(crate) fn scale_prefactor(&mut self, s: Complex64) {
        if let Some(c) = &mut self.prefactor {
            *c *= s;
        }
    }
}

/// Vertices `V`, an edge of weight `θ_uv/π` per nonzero cross term, and the
/// same inputs and outputs.
pub fn induced_geometry(q: &QuadraticFormExpansion) -> Geometry {
    let mut g = Geometry::new();
    for v in q.indices() {
        g.add_vertex(v);
    }
    for (u, v, t) in q.cross_terms() {
        g.add_weighted_edge(u, v, t.to_ratio()).expect("indices are vertices");
    }
    g.set_inputs(q.inputs().iter().cloned()).expect("subset");
    g.set_outputs(q.outputs().iter().cloned()).expect("subset");
    g
}

/// Sequential composition: `q1` acts first. Requires `V1 ∩ V2 = O1 = I2`;
/// the forms add and the prefactors multiply.
pub fn compose_qfe(q1: &QuadraticFormExpansion, q2: &QuadraticFormExpansion) -> QfeResult<QuadraticFormExpansion> {
    let shared: BTreeSet<String> = q1.indices.intersection(&q2.indices).cloned().collect();
    if shared != q1.outputs || shared != q2.inputs {
        return Err(QfeError::Invalid("compose needs V1 ∩ V2 = O1 = I2".into()));
    }
    let mut out = QuadraticFormExpansion {
        indices: q1.indices.union(&q2.indices).cloned().collect(),
        inputs: q1.inputs.clone(),
        outputs: q2.outputs.clone(),
        terms: q1.terms.clone(),
        prefactor: match (q1.prefactor, q2.prefactor) {
            (Some(a), Some(b)) => Some(a * b),
            _ => None,
        },
    };
    for (u, v, t) in q2.terms() {
        out.add_term(u, v, t)?;
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TermDoc {
    pub u: String,
    pub v: String,
    pub theta_num: i64,
    pub theta_den: i64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct QfeDoc {
    pub indices: Vec<String>,
    #[serde(default)]
    pub inputs: Vec<String>,
    #[serde(default)]
    pub outputs: Vec<String>,
    #[serde(default)]
    pub terms: Vec<TermDoc>,
    /// `[re, im]`; absent means symbolic.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub prefactor: Option<[f64; 2]>,
}

impl From<&QuadraticFormExpansion> for QfeDoc {
    fn from(q: &QuadraticFormExpansion) -> Self {
        QfeDoc {
            indices: q.indices.iter().cloned().collect(),
            inputs: q.inputs.iter().cloned().collect(),
            outputs: q.outputs.iter().cloned().collect(),
            terms: q
                .terms()
                .map(|(u, v, t)| TermDoc {
                    u: u.into(),
                    v: v.into(),
                    theta_num: t.numerator(),
                    theta_den: t.denominator(),
                })
                .collect(),
            prefactor: q.prefactor.map(|c| [c.re, c.im]),
        }
    }
}

impl TryFrom<QfeDoc> for QuadraticFormExpansion {
    type Error = QfeError;

    fn try_from(d: QfeDoc) -> QfeResult<Self> {
        let mut q = QuadraticFormExpansion::new(d.indices, d.inputs, d.outputs)?;
        for t in d.terms {
            let a = Angle::new(t.theta_num, t.theta_den).map_err(|e| QfeError::Invalid(e.to_string()))?;
            q.add_term(&t.u, &t.v, a)?;
        }
        q.prefactor = d.prefactor.map(|[re, im]| Complex64::new(re, im));
        Ok(q)
    }
}

pub fn qfe_to_json(q: &QuadraticFormExpansion) -> serde_json::Value {
    serde_json::to_value(QfeDoc::from(q)).expect("plain data")
}

pub fn qfe_from_json(v: &serde_json::Value) -> QfeResult<QuadraticFormExpansion> {
    let d: QfeDoc = serde_json::from_value(v.clone()).map_err(|e| QfeError::Invalid(e.to_string()))?;
    d.try_into()
}
