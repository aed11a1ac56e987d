//! Open graphs: vertices, optionally weighted edges, inputs, outputs and
//! measurement planes.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_rational::Ratio;

use crate::error::{CoreError, CoreResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Plane {
    XY,
    YZ,
    XZ,
}

impl Plane {
    pub fn parse(s: &str) -> Option<Plane> {
        match s {
            "XY" => Some(Plane::XY),
            "YZ" => Some(Plane::YZ),
            "XZ" => Some(Plane::XZ),
            _ => None,
        }
    }
}

impl fmt::Display for Plane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Plane::XY => "XY",
            Plane::YZ => "YZ",
            Plane::XZ => "XZ",
        };
        f.write_str(s)
    }
}

fn key(u: &str, v: &str) -> (String, String) {
    if u <= v {
        (u.to_owned(), v.to_owned())
    } else {
        (v.to_owned(), u.to_owned())
    }
}

/// Reduces a weight into (-1, 1]; `None` for a zero weight.
pub fn normalize_weight(w: Ratio<i64>) -> Option<Ratio<i64>> {
    let two = Ratio::from_integer(2);
    let mut r = w % two;
    if r <= Ratio::from_integer(-1) {
        r += two;
    }
    if r > Ratio::from_integer(1) {
        r -= two;
    }
    if r == Ratio::from_integer(0) {
        None
    } else {
        Some(r)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Geometry {
    vertices: BTreeSet<String>,
    edges: BTreeMap<(String, String), Ratio<i64>>,
    inputs: BTreeSet<String>,
    outputs: BTreeSet<String>,
    planes: BTreeMap<String, Plane>,
}

impl Geometry {
    pub fn new() -> Geometry {
        Geometry::default()
    }

    /// Unit-weight geometry from label lists.
    pub fn from_parts<S: AsRef<str>>(
        vertices: &[S],
        edges: &[(S, S)],
        inputs: &[S],
        outputs: &[S],
    ) -> CoreResult<Geometry> {
        let mut g = Geometry::new();
        for v in vertices {
            g.add_vertex(v.as_ref());
        }
        for (u, v) in edges {
            g.add_edge(u.as_ref(), v.as_ref())?;
        }
        g.set_inputs(inputs.iter().map(|s| s.as_ref().to_owned()))?;
        g.set_outputs(outputs.iter().map(|s| s.as_ref().to_owned()))?;
        Ok(g)
    }

    pub fn add_vertex(&mut self, v: &str) {
        self.vertices.insert(v.to_owned());
    }

    fn check_pair(&self, u: &str, v: &str) -> CoreResult<()> {
        if u == v {
            return Err(CoreError::SelfLoop(u.to_owned()));
        }
        for x in [u, v] {
            if !self.vertices.contains(x) {
                return Err(CoreError::UnknownVertex(x.to_owned()));
            }
        }
        Ok(())
    }

    /// Inserts (or overwrites) a unit-weight edge.
    pub fn add_edge(&mut self, u: &str, v: &str) -> CoreResult<()> {
        self.add_weighted_edge(u, v, Ratio::from_integer(1))
    }

    pub fn add_weighted_edge(&mut self, u: &str, v: &str, w: Ratio<i64>) -> CoreResult<()> {
        self.check_pair(u, v)?;
        if w <= Ratio::from_integer(-1) || w > Ratio::from_integer(1) || w == Ratio::from_integer(0) {
            return Err(CoreError::BadWeight(w.to_string()));
        }
        self.edges.insert(key(u, v), w);
        Ok(())
    }

    /// Adds a unit edge if absent, removes it if present.
    pub fn toggle_edge(&mut self, u: &str, v: &str) -> CoreResult<()> {
        self.check_pair(u, v)?;
        let k = key(u, v);
        if self.edges.remove(&k).is_none() {
            self.edges.insert(k, Ratio::from_integer(1));
        }
        Ok(())
    }

    /// Adds `w` to the weight of uv modulo 2; a resulting zero removes the edge.
    pub fn accumulate_edge(&mut self, u: &str, v: &str, w: Ratio<i64>) -> CoreResult<()> {
        self.check_pair(u, v)?;
        let k = key(u, v);
        let cur = self.edges.remove(&k).unwrap_or_else(|| Ratio::from_integer(0));
        if let Some(n) = normalize_weight(cur + w) {
            self.edges.insert(k, n);
        }
        Ok(())
    }

    pub fn remove_edge(&mut self, u: &str, v: &str) -> bool {
        self.edges.remove(&key(u, v)).is_some()
    }

    pub fn set_inputs<I: IntoIterator<Item = String>>(&mut self, it: I) -> CoreResult<()> {
        let s: BTreeSet<String> = it.into_iter().collect();
        if let Some(x) = s.iter().find(|x| !self.vertices.contains(*x)) {
            return Err(CoreError::UnknownVertex(x.clone()));
        }
        self.inputs = s;
        Ok(())
    }

    pub fn set_outputs<I: IntoIterator<Item = String>>(&mut self, it: I) -> CoreResult<()> {
        let s: BTreeSet<String> = it.into_iter().collect();
        if let Some(x) = s.iter().find(|x| !self.vertices.contains(*x)) {
            return Err(CoreError::UnknownVertex(x.clone()));
        }
        self.outputs = s;
        Ok(())
    }

    pub fn set_plane(&mut self, v: &str, p: Plane) -> CoreResult<()> {
        if !self.vertices.contains(v) {
            return Err(CoreError::UnknownVertex(v.to_owned()));
        }
        self.planes.insert(v.to_owned(), p);
        Ok(())
    }

    pub fn clear_planes(&mut self) {
        self.planes.clear();
    }

    pub fn vertices(&self) -> &BTreeSet<String> {
        &self.vertices
    }

    pub fn inputs(&self) -> &BTreeSet<String> {
        &self.inputs
    }

    pub fn outputs(&self) -> &BTreeSet<String> {
        &self.outputs
    }

    pub fn planes(&self) -> &BTreeMap<String, Plane> {
        &self.planes
    }

    /// Plane of `v`, defaulting to XY.
    pub fn plane(&self, v: &str) -> Plane {
        self.planes.get(v).copied().unwrap_or(Plane::XY)
    }

    pub fn edges(&self) -> impl Iterator<Item = (&str, &str, Ratio<i64>)> {
        self.edges.iter().map(|((u, v), w)| (u.as_str(), v.as_str(), *w))
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn has_edge(&self, u: &str, v: &str) -> bool {
        self.edges.contains_key(&key(u, v))
    }

    pub fn weight(&self, u: &str, v: &str) -> Option<Ratio<i64>> {
        self.edges.get(&key(u, v)).copied()
    }

    pub fn unit_weight(&self) -> bool {
        self.edges.values().all(|w| *w == Ratio::from_integer(1))
    }

    /// Same graph with every weight set to 1.
    pub fn unweighted(&self) -> Geometry {
        let mut g = self.clone();
        for w in g.edges.values_mut() {
            *w = Ratio::from_integer(1);
        }
        g
    }

    /// Sorted neighbours of `v`.
    pub fn neighbors(&self, v: &str) -> BTreeSet<String> {
        self.edges
            .keys()
            .filter_map(|(a, b)| {
                if a == v {
                    Some(b.clone())
                } else if b == v {
                    Some(a.clone())
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn degree(&self, v: &str) -> usize {
        self.edges.keys().filter(|(a, b)| a == v || b == v).count()
    }

    /// Removes `v`, its edges and its I/O/plane tags.
    pub fn remove_vertex(&mut self, v: &str) {
        self.vertices.remove(v);
        self.inputs.remove(v);
        self.outputs.remove(v);
        self.planes.remove(v);
        self.edges.retain(|(a, b), _| a != v && b != v);
    }

    /// Induced subgraph on `keep`, with I and O intersected.
    pub fn induced(&self, keep: &BTreeSet<String>) -> Geometry {
        Geometry {
            vertices: self.vertices.intersection(keep).cloned().collect(),
            edges: self
                .edges
                .iter()
                .filter(|((a, b), _)| keep.contains(a) && keep.contains(b))
                .map(|(k, w)| (k.clone(), *w))
                .collect(),
            inputs: self.inputs.intersection(keep).cloned().collect(),
            outputs: self.outputs.intersection(keep).cloned().collect(),
            planes: self
                .planes
                .iter()
                .filter(|(v, _)| keep.contains(*v))
                .map(|(v, p)| (v.clone(), *p))
                .collect(),
        }
    }

    /// Index-based view with labels in sorted order.
    pub fn indexed(&self) -> IndexedGeometry {
        let labels: Vec<String> = self.vertices.iter().cloned().collect();
        let index: BTreeMap<String, usize> =
            labels.iter().enumerate().map(|(i, l)| (l.clone(), i)).collect();
        let lookup: HashMap<&str, usize> = labels.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
        let mut adj = vec![Vec::new(); labels.len()];
        for (a, b) in self.edges.keys() {
            let (i, j) = (lookup[a.as_str()], lookup[b.as_str()]);
            adj[i].push(j);
            adj[j].push(i);
        }
        for row in &mut adj {
            row.sort_unstable();
        }
        let is_input = labels.iter().map(|l| self.inputs.contains(l)).collect();
        let is_output = labels.iter().map(|l| self.outputs.contains(l)).collect();
        IndexedGeometry {
            labels,
            index,
            adj,
            is_input,
            is_output,
        }
    }
}

/// Adjacency-list view of a [`Geometry`]; vertex `i` is the i-th label in
/// sorted order.
#[derive(Clone, Debug)]
pub struct IndexedGeometry {
    pub labels: Vec<String>,
    pub index: BTreeMap<String, usize>,
    pub adj: Vec<Vec<usize>>,
    pub is_input: Vec<bool>,
    pub is_output: Vec<bool>,
}

impl IndexedGeometry {
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn input_count(&self) -> usize {
        self.is_input.iter().filter(|b| **b).count()
    }

    pub fn output_count(&self) -> usize {
        self.is_output.iter().filter(|b| **b).count()
    }
}

/// Sequential composition: `g1` acts first, then `g2`.
pub fn compose_geometries(g1: &Geometry, g2: &Geometry) -> CoreResult<Geometry> {
    for v in g1.vertices.intersection(&g2.vertices) {
        if !(g2.inputs.contains(v) && g1.outputs.contains(v)) {
            return Err(CoreError::NotComposable(format!(
                "shared vertex {v} is not an output of the first and an input of the second"
            )));
        }
    }
    let mut out = g1.clone();
    out.vertices.extend(g2.vertices.iter().cloned());
    for (k, w) in &g2.edges {
        if out.edges.remove(k).is_none() {
            out.edges.insert(k.clone(), *w);
        }
    }
    out.inputs = g1
        .inputs
        .iter()
        .cloned()
        .chain(g2.inputs.difference(&g1.outputs).cloned())
        .collect();
    out.outputs = g2
        .outputs
        .iter()
        .cloned()
        .chain(g1.outputs.difference(&g2.inputs).cloned())
        .collect();
    for (v, p) in &g2.planes {
        out.planes.insert(v.clone(), *p);
    }
    out.planes.retain(|v, _| !out.outputs.contains(v));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edge(u: &str, v: &str, i: &str, o: &str) -> Geometry {
        Geometry::from_parts(&[u, v], &[(u, v)], &[i], &[o]).unwrap()
    }

    #[test]
    fn chain_composition() {
        let g = compose_geometries(&edge("a", "b", "a", "b"), &edge("b", "c", "b", "c")).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.inputs().iter().collect::<Vec<_>>(), vec!["a"]);
        assert_eq!(g.outputs().iter().collect::<Vec<_>>(), vec!["c"]);
    }

    #[test]
    fn empty_is_identity() {
        let g = edge("a", "b", "a", "b");
        assert_eq!(compose_geometries(&g, &Geometry::new()).unwrap(), g);
        assert_eq!(compose_geometries(&Geometry::new(), &g).unwrap(), g);
    }

    #[test]
    fn shared_edge_cancels() {
        let g1 = Geometry::from_parts(&["a", "b"], &[("a", "b")], &["a", "b"], &["a", "b"]).unwrap();
        let g = compose_geometries(&g1, &g1).unwrap();
        assert_eq!(g.edge_count(), 0);
        assert_eq!(g.vertex_count(), 2);
    }

    #[test]
    fn not_composable() {
        let g1 = edge("a", "b", "a", "b");
        let g2 = edge("a", "c", "a", "c");
        assert!(matches!(compose_geometries(&g1, &g2), Err(CoreError::NotComposable(_))));
    }

    #[test]
    fn rejects_self_loops_and_bad_weights() {
        let mut g = Geometry::new();
        g.add_vertex("a");
        g.add_vertex("b");
        assert!(matches!(g.add_edge("a", "a"), Err(CoreError::SelfLoop(_))));
        assert!(matches!(g.add_edge("a", "z"), Err(CoreError::UnknownVertex(_))));
        assert!(g.add_weighted_edge("a", "b", Ratio::new(3, 2)).is_err());
        assert!(g.add_weighted_edge("a", "b", Ratio::new(-1, 1)).is_err());
        g.add_weighted_edge("a", "b", Ratio::new(1, 2)).unwrap();
        assert!(!g.unit_weight());
        g.accumulate_edge("a", "b", Ratio::new(3, 2)).unwrap();
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn weight_normalization() {
        assert_eq!(normalize_weight(Ratio::new(3, 2)), Some(Ratio::new(-1, 2)));
        assert_eq!(normalize_weight(Ratio::new(-1, 1)), Some(Ratio::new(1, 1)));
        assert_eq!(normalize_weight(Ratio::new(4, 1)), None);
    }
}
