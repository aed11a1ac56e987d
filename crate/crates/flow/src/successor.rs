use std::collections::{BTreeMap, BTreeSet};

use mbqc_core::{Geometry, IndexedGeometry};

use crate::error::{FlowError, FlowResult};

/// Partial successor function `f` together with its inverse `g`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuccessorMap {
    pub f: BTreeMap<String, String>,
    pub g: BTreeMap<String, String>,
}

impl SuccessorMap {
    /// Builds `g` from an injective `f`. Fixed points `f(a) = a` are allowed.
    pub fn from_f(f: BTreeMap<String, String>) -> FlowResult<SuccessorMap> {
        let mut g = BTreeMap::new();
        for (v, w) in &f {
            if g.insert(w.clone(), v.clone()).is_some() {
                return Err(FlowError::NotPathCover(format!("{w} has two predecessors")));
            }
        }
        Ok(SuccessorMap { f, g })
    }

    pub(crate) fn from_indexed(ig: &IndexedGeometry, f: &[Option<usize>]) -> SuccessorMap {
        let mut m = BTreeMap::new();
        for (v, w) in f.iter().enumerate() {
            if let Some(w) = w {
                m.insert(ig.labels[v].clone(), ig.labels[*w].clone());
            }
        }
        SuccessorMap::from_f(m).expect("internal successor maps are injective")
    }

    pub fn succ(&self, v: &str) -> Option<&str> {
        self.f.get(v).map(String::as_str)
    }

    pub fn pred(&self, v: &str) -> Option<&str> {
        self.g.get(v).map(String::as_str)
    }

    /// `f` as an index array over `ig`, ignoring unknown labels.
    pub(crate) fn to_indexed(&self, ig: &IndexedGeometry) -> FlowResult<(Vec<Option<usize>>, Vec<Option<usize>>)> {
        let n = ig.len();
        let (mut f, mut g) = (vec![None; n], vec![None; n]);
        for (v, w) in &self.f {
            let vi = *ig.index.get(v).ok_or_else(|| FlowError::UnknownVertex(v.clone()))?;
            let wi = *ig.index.get(w).ok_or_else(|| FlowError::UnknownVertex(w.clone()))?;
            f[vi] = Some(wi);
            if g[wi].replace(vi).is_some() {
                return Err(FlowError::NotPathCover(format!("{w} has two predecessors")));
            }
        }
        Ok((f, g))
    }
}

/// Checks that the orbits of `f` form a path cover: `dom f = O^c`,
/// `img f` avoids `I`, every arc is an edge, and every vertex is reached by
/// walking back from an output. Fixed points are permitted for `yz`.
pub(crate) fn check_path_cover(
    ig: &IndexedGeometry,
    f: &[Option<usize>],
    g: &[Option<usize>],
    yz: &[bool],
) -> FlowResult<()> {
    let n = ig.len();
    let bad = |m: String| Err(FlowError::NotPathCover(m));
    for v in 0..n {
        match f[v] {
            Some(w) if ig.is_output[v] => return bad(format!("output {} has a successor {}", ig.labels[v], ig.labels[w])),
            None if !ig.is_output[v] => return bad(format!("{} has no successor", ig.labels[v])),
            Some(w) if w == v => {
                if !yz[v] {
                    return bad(format!("{} is its own successor", ig.labels[v]));
                }
            }
            Some(w) => {
                if !ig.has_edge(v, w) {
                    return bad(format!("{} -> {} is not an edge", ig.labels[v], ig.labels[w]));
                }
                if ig.is_input[w] {
                    return bad(format!("successor {} is an input", ig.labels[w]));
                }
            }
            None => {}
        }
    }
    let mut seen = vec![false; n];
    for o in (0..n).filter(|&o| ig.is_output[o]) {
        let mut x = Some(o);
        while let Some(v) = x {
            if seen[v] {
                return bad(format!("{} lies on two paths", ig.labels[v]));
            }
            seen[v] = true;
            x = g[v].filter(|&p| p != v);
        }
    }
    for v in 0..n {
        if !seen[v] && !(yz[v] && f[v] == Some(v)) {
            return bad(format!("{} is not on any path", ig.labels[v]));
        }
    }
    Ok(())
}

/// Directed graph over string labels.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Digraph {
    pub arcs: BTreeMap<String, BTreeSet<String>>,
}

impl Digraph {
    pub fn has_arc(&self, u: &str, v: &str) -> bool {
        self.arcs.get(u).is_some_and(|s| s.contains(v))
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.values().map(BTreeSet::len).sum()
    }

    /// A directed circuit if one exists.
    pub fn find_cycle(&self) -> Option<Vec<String>> {
        #[derive(Clone, Copy, PartialEq)]
        enum C {
            White,
            Grey,
            Black,
        }
        let mut col: BTreeMap<&str, C> = self.arcs.keys().map(|k| (k.as_str(), C::White)).collect();
        for start in self.arcs.keys() {
            if col[start.as_str()] != C::White {
                continue;
            }
            let mut stack: Vec<(&str, Vec<&str>)> = vec![(start, self.arcs[start].iter().map(String::as_str).collect())];
            col.insert(start, C::Grey);
            while let Some((v, rest)) = stack.last_mut() {
                let v = *v;
                match rest.pop() {
                    Some(w) => match col.get(w).copied().unwrap_or(C::Black) {
                        C::Grey => {
                            let mut cyc: Vec<String> = stack.iter().map(|(x, _)| x.to_string()).collect();
                            let pos = cyc.iter().position(|x| x == w).expect("grey vertex on stack");
                            return Some(cyc.split_off(pos));
                        }
                        C::White => {
                            col.insert(w, C::Grey);
                            let next = self.arcs.get(w).map(|s| s.iter().map(String::as_str).collect()).unwrap_or_default();
                            stack.push((w, next));
                        }
                        C::Black => {}
                    },
                    None => {
                        col.insert(v, C::Black);
                        stack.pop();
                    }
                }
            }
        }
        None
    }

    /// Reflexive-transitive closure: `reach[u]` holds every `w` with `u ->* w`.
    pub fn closure(&self) -> BTreeMap<String, BTreeSet<String>> {
        let mut out = BTreeMap::new();
        for u in self.arcs.keys() {
            let mut seen = BTreeSet::from([u.clone()]);
            let mut todo = vec![u.clone()];
            while let Some(x) = todo.pop() {
                for y in self.arcs.get(&x).into_iter().flatten() {
                    if seen.insert(y.clone()) {
                        todo.push(y.clone());
                    }
                }
            }
            out.insert(u.clone(), seen);
        }
        out
    }

    /// Longest-path depth to a sink; `None` if cyclic.
    pub fn sink_depths(&self) -> Option<BTreeMap<String, usize>> {
        if self.find_cycle().is_some() {
            return None;
        }
        fn depth<'a>(d: &'a Digraph, v: &'a str, memo: &mut BTreeMap<&'a str, usize>) -> usize {
            if let Some(x) = memo.get(v) {
                return *x;
            }
            let r = d
                .arcs
                .get(v)
                .into_iter()
                .flatten()
                .map(|w| depth(d, w, memo) + 1)
                .max()
                .unwrap_or(0);
            memo.insert(v, r);
            r
        }
        let mut memo = BTreeMap::new();
        for v in self.arcs.keys() {
            depth(self, v, &mut memo);
        }
        Some(memo.into_iter().map(|(k, v)| (k.to_owned(), v)).collect())
    }
}

/// Arcs `v -> f(v)` and `v -> w` for `w ~ f(v)`, `w != v`.
pub fn influence_digraph(geo: &Geometry, s: &SuccessorMap) -> FlowResult<Digraph> {
    influence_digraph_with_yz(geo, s, &BTreeSet::new())
}

pub(crate) fn influence_digraph_with_yz(geo: &Geometry, s: &SuccessorMap, yz: &BTreeSet<String>) -> FlowResult<Digraph> {
    let ig = geo.indexed();
    let (f, g) = s.to_indexed(&ig)?;
    let yzv: Vec<bool> = ig.labels.iter().map(|l| yz.contains(l)).collect();
    check_path_cover(&ig, &f, &g, &yzv)?;
    Ok(influence_arcs(&ig, &f))
}

pub(crate) fn influence_arcs(ig: &IndexedGeometry, f: &[Option<usize>]) -> Digraph {
    let mut arcs: BTreeMap<String, BTreeSet<String>> = ig.labels.iter().map(|l| (l.clone(), BTreeSet::new())).collect();
    for v in 0..ig.len() {
        if let Some(fv) = f[v] {
            let e = arcs.get_mut(&ig.labels[v]).expect("label");
            if fv != v {
                e.insert(ig.labels[fv].clone());
            }
            for &w in &ig.adj[fv] {
                if w != v {
                    e.insert(ig.labels[w].clone());
                }
            }
        }
    }
    Digraph { arcs }
}
