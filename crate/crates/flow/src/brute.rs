use std::collections::BTreeSet;

use mbqc_core::{Geometry, IndexedGeometry};

use crate::cert::{FlowCertificate, FlowKind, Order};
use crate::error::{FlowError, FlowResult};
use crate::successor::{influence_arcs, SuccessorMap};

/// Largest vertex count accepted by [`brute_force_flow`].
pub const BRUTE_FORCE_LIMIT: usize = 16;

struct Enum<'a> {
    ig: &'a IndexedGeometry,
    domain: Vec<usize>,
    f: Vec<Option<usize>>,
    used: Vec<bool>,
}

impl Enum<'_> {
    // Assigns domain[i..] in order; returns the first acyclic assignment.
    fn go(&mut self, i: usize) -> bool {
        if i == self.domain.len() {
            return acyclic(self.ig, &self.f);
        }
        let v = self.domain[i];
        let ig = self.ig;
        for &w in &ig.adj[v] {
            if ig.is_input[w] || self.used[w] {
                continue;
            }
            // a successor chain that returns to v is a circuit already
            let mut x = Some(w);
            let mut closes = false;
            while let Some(y) = x {
                if y == v {
                    closes = true;
                    break;
                }
                x = self.f[y];
            }
            if closes {
                continue;
            }
            self.used[w] = true;
            self.f[v] = Some(w);
            if self.go(i + 1) {
                return true;
            }
            self.f[v] = None;
            self.used[w] = false;
        }
        false
    }
}

fn acyclic(ig: &IndexedGeometry, f: &[Option<usize>]) -> bool {
    let n = ig.len();
    let mut indeg = vec![0usize; n];
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
    for v in 0..n {
        if let Some(fv) = f[v] {
            let mut succ: Vec<usize> = ig.adj[fv].iter().copied().filter(|&w| w != v).collect();
            succ.push(fv);
            succ.sort_unstable();
            succ.dedup();
            for w in succ {
                out[v].push(w);
                indeg[w] += 1;
            }
        }
    }
    let mut stack: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut seen = 0;
    while let Some(v) = stack.pop() {
        seen += 1;
        for &w in &out[v] {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                stack.push(w);
            }
        }
    }
    seen == n
}

/// Exhaustive search over injective successor functions `O^c -> I^c` along
/// edges, accepting the first (in sorted-label order) whose influence
/// digraph is acyclic. The order returned is the closure of that digraph.
pub fn brute_force_flow(geo: &Geometry) -> FlowResult<Option<FlowCertificate>> {
    let n = geo.vertex_count();
    if n > BRUTE_FORCE_LIMIT {
        return Err(FlowError::TooLarge(n));
    }
    let ig = geo.indexed();
    let domain: Vec<usize> = (0..n).filter(|&v| !ig.is_output[v]).collect();
    if domain.len() > (0..n).filter(|&v| !ig.is_input[v]).count() {
        return Ok(None);
    }
    let mut e = Enum {
        ig: &ig,
        domain,
        f: vec![None; n],
        used: vec![false; n],
    };
    if !e.go(0) {
        return Ok(None);
    }
    let successor = SuccessorMap::from_indexed(&ig, &e.f);
    let closure = influence_arcs(&ig, &e.f).closure();
    Ok(Some(FlowCertificate {
        kind: FlowKind::Flow,
        successor,
        order: Order::Closure(closure),
        yz_set: BTreeSet::new(),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cert::check_flow_conditions;
    use mbqc_core::fixtures::no_flow_fixture;

    #[test]
    fn three_path() {
        let g = Geometry::from_parts(&["v0", "v1", "v2"], &[("v0", "v1"), ("v1", "v2")], &["v0"], &["v2"]).unwrap();
        let c = brute_force_flow(&g).unwrap().unwrap();
        assert_eq!(c.successor.succ("v0"), Some("v1"));
        assert!(check_flow_conditions(&g, &c));
    }

    #[test]
    fn no_flow() {
        assert!(brute_force_flow(&no_flow_fixture()).unwrap().is_none());
    }

    #[test]
    fn size_cap() {
        let g = mbqc_core::fixtures::grid_geometry(5, 4).unwrap();
        assert!(matches!(brute_force_flow(&g), Err(FlowError::TooLarge(20))));
    }
}
