use mbqc_core::{Geometry, IndexedGeometry};

use crate::successor::SuccessorMap;

struct Search<'a> {
    ig: &'a IndexedGeometry,
    f: Vec<Option<usize>>,
    g: Vec<Option<usize>>,
    marked: Vec<usize>,
    iter: usize,
    found: bool,
}

impl Search<'_> {
    // Depth-first search for an alternating walk, traversed from an
    // uncovered output back towards the inputs. Entry points stay unmarked.
    fn altern(&mut self, v: usize) {
        self.marked[v] = self.iter;
        if self.ig.is_input[v] {
            self.found = true;
            return;
        }
        if let Some(w) = self.f[v] {
            if self.marked[w] < self.iter {
                self.altern(w);
                if self.found {
                    self.f[v] = None;
                    self.g[v] = None;
                    return;
                }
            }
        }
        let ig = self.ig;
        for &w in &ig.adj[v] {
            if ig.is_output[w] || self.marked[w] >= self.iter {
                continue;
            }
            match self.f[w] {
                None => {
                    self.altern(w);
                    if self.found {
                        self.f[w] = Some(v);
                        self.g[v] = Some(w);
                        return;
                    }
                }
                Some(next) => {
                    let x = w;
                    if self.marked[next] < self.iter {
                        self.altern(next);
                        if self.found {
                            self.f[x] = Some(v);
                            self.g[v] = Some(x);
                            return;
                        }
                    }
                }
            }
        }
    }
}

/// Maximum family of vertex-disjoint I-O paths as successor/predecessor
/// arrays. Neighbours are visited in the order of `ig.adj`.
pub fn max_path_family_indexed(ig: &IndexedGeometry) -> (Vec<Option<usize>>, Vec<Option<usize>>) {
    let n = ig.len();
    let mut s = Search {
        ig,
        f: vec![None; n],
        g: vec![None; n],
        marked: vec![0; n],
        iter: 0,
        found: false,
    };
    loop {
        s.iter += 1;
        s.found = false;
        for v in 0..n {
            if ig.is_output[v] && !ig.is_input[v] && s.g[v].is_none() {
                s.altern(v);
                if s.found {
                    break;
                }
            }
        }
        if !s.found {
            break;
        }
    }
    (s.f, s.g)
}

/// Maximum-size family of vertex-disjoint I-O paths, as the orbits of `f`.
pub fn max_path_family(geo: &Geometry) -> SuccessorMap {
    let ig = geo.indexed();
    let (f, _) = max_path_family_indexed(&ig);
    SuccessorMap::from_indexed(&ig, &f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use mbqc_core::fixtures::no_flow_fixture;

    #[test]
    fn three_path() {
        let g = Geometry::from_parts(&["v0", "v1", "v2"], &[("v0", "v1"), ("v1", "v2")], &["v0"], &["v2"]).unwrap();
        let s = max_path_family(&g);
        assert_eq!(s.succ("v0"), Some("v1"));
        assert_eq!(s.succ("v1"), Some("v2"));
        assert_eq!(s.f.len(), 2);
    }

    #[test]
    fn no_flow_fixture_has_three_paths() {
        let s = max_path_family(&no_flow_fixture());
        assert_eq!(s.f.len(), 3);
        for (a, b) in &s.f {
            assert!(a.starts_with('a') && b.starts_with('b'));
        }
    }
}
