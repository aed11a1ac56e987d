use std::collections::BTreeMap;

use mbqc_core::{Geometry, IndexedGeometry};

use crate::error::{FlowError, FlowResult};
use crate::successor::{check_path_cover, SuccessorMap};

/// Path labelling of the orbits of `f` with, for each vertex and path, the
/// largest distance of an ancestor on that path (or -1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SystemOfInfima {
    pub index: BTreeMap<String, usize>,
    pub dist: Vec<usize>,
    /// Path ids are 1-based, in the sorted order of the path end points.
    pub path: Vec<usize>,
    /// `inf[v][p - 1]`.
    pub inf: Vec<Vec<i64>>,
}

impl SystemOfInfima {
    /// `u ⪯ w`.
    pub fn preceq(&self, u: &str, w: &str) -> FlowResult<bool> {
        let ui = *self.index.get(u).ok_or_else(|| FlowError::UnknownVertex(u.to_owned()))?;
        let wi = *self.index.get(w).ok_or_else(|| FlowError::UnknownVertex(w.to_owned()))?;
        Ok(self.dist[ui] as i64 <= self.inf[wi][self.path[ui] - 1])
    }

    pub fn dist_of(&self, v: &str) -> Option<usize> {
        self.index.get(v).map(|&i| self.dist[i])
    }

    pub fn path_of(&self, v: &str) -> Option<usize> {
        self.index.get(v).map(|&i| self.path[i])
    }
}

pub fn preceq_query(inf: &SystemOfInfima, u: &str, v: &str) -> FlowResult<bool> {
    inf.preceq(u, v)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NaturalPreorder {
    Infima(SystemOfInfima),
    CircuitFound,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Status {
    Untouched,
    Incomplete,
    Complete,
}

struct Infima<'a> {
    ig: &'a IndexedGeometry,
    f: &'a [Option<usize>],
    g: &'a [Option<usize>],
    status: Vec<Status>,
    inf: Vec<Vec<i64>>,
    found_circuit: bool,
}

impl Infima<'_> {
    fn find(&mut self, w: usize) {
        if self.status[w] == Status::Incomplete {
            self.found_circuit = true;
        }
        if self.status[w] != Status::Untouched {
            return;
        }
        self.status[w] = Status::Incomplete;
        let ig = self.ig;
        for &z in &ig.adj[w] {
            if Some(z) == self.f[w] {
                continue;
            }
            let v = if Some(z) == self.g[w] {
                z
            } else if let Some(gz) = self.g[z] {
                gz
            } else {
                continue;
            };
            self.find(v);
            if self.found_circuit {
                return;
            }
            let (lo, hi) = if v < w { self.inf.split_at_mut(w) } else { self.inf.split_at_mut(v) };
            let (iv, iw) = if v < w { (&lo[v], &mut hi[0]) } else { (&hi[0], &mut lo[w]) };
            for (a, b) in iw.iter_mut().zip(iv.iter()) {
                if *a < *b {
                    *a = *b;
                }
            }
        }
        self.status[w] = Status::Complete;
    }
}

pub(crate) fn natural_preorder_indexed(ig: &IndexedGeometry, f: &[Option<usize>], g: &[Option<usize>]) -> NaturalPreorder {
    let n = ig.len();
    let outputs: Vec<usize> = (0..n).filter(|&v| ig.is_output[v]).collect();
    let k = outputs.len();
    let mut dist = vec![0usize; n];
    let mut path = vec![0usize; n];
    let mut inf = vec![vec![-1i64; k]; n];
    for (p, &o) in outputs.iter().enumerate() {
        let mut chain = vec![o];
        while let Some(prev) = g[*chain.last().expect("nonempty")] {
            chain.push(prev);
        }
        for (d, &v) in chain.iter().rev().enumerate() {
            dist[v] = d;
            path[v] = p + 1;
            inf[v][p] = d as i64;
        }
    }
    let mut s = Infima {
        ig,
        f,
        g,
        status: vec![Status::Untouched; n],
        inf,
        found_circuit: false,
    };
    for &o in &outputs {
        s.find(o);
        if s.found_circuit {
            return NaturalPreorder::CircuitFound;
        }
    }
    NaturalPreorder::Infima(SystemOfInfima {
        index: ig.index.clone(),
        dist,
        path,
        inf: s.inf,
    })
}

/// System of infima for the natural pre-order of `s`, or `CircuitFound` if
/// the influence digraph has a directed circuit.
pub fn natural_preorder(geo: &Geometry, s: &SuccessorMap) -> FlowResult<NaturalPreorder> {
    let ig = geo.indexed();
    let (f, g) = s.to_indexed(&ig)?;
    check_path_cover(&ig, &f, &g, &vec![false; ig.len()])?;
    Ok(natural_preorder_indexed(&ig, &f, &g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use mbqc_core::fixtures::no_flow_fixture;

    fn map(pairs: &[(&str, &str)]) -> SuccessorMap {
        SuccessorMap::from_f(pairs.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect()).unwrap()
    }

    #[test]
    fn chain_order() {
        let g = Geometry::from_parts(&["v0", "v1", "v2"], &[("v0", "v1"), ("v1", "v2")], &["v0"], &["v2"]).unwrap();
        let NaturalPreorder::Infima(s) = natural_preorder(&g, &map(&[("v0", "v1"), ("v1", "v2")])).unwrap() else {
            panic!("chain is acyclic");
        };
        assert_eq!(s.dist, vec![0, 1, 2]);
        assert_eq!(s.path, vec![1, 1, 1]);
        assert_eq!(s.inf, vec![vec![0], vec![1], vec![2]]);
        assert!(s.preceq("v0", "v2").unwrap());
        assert!(!s.preceq("v2", "v0").unwrap());
        assert!(s.preceq("v1", "v1").unwrap());
        assert!(matches!(s.preceq("v0", "zz"), Err(FlowError::UnknownVertex(_))));
    }

    #[test]
    fn no_flow_fixture_circuits() {
        let g = no_flow_fixture();
        let straight = map(&[("a0", "b0"), ("a1", "b1"), ("a2", "b2")]);
        let skew = map(&[("a0", "b2"), ("a1", "b0"), ("a2", "b1")]);
        assert_eq!(natural_preorder(&g, &straight).unwrap(), NaturalPreorder::CircuitFound);
        assert_eq!(natural_preorder(&g, &skew).unwrap(), NaturalPreorder::CircuitFound);
    }
}
