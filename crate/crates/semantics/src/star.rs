use std::collections::{BTreeMap, BTreeSet};

use mbqc_core::{compose_geometries, Geometry};
use mbqc_dkp::is_flow_function;
use mbqc_flow::SuccessorMap;

use crate::error::{SemanticsError, SemanticsResult};

/// A single `J` on the edge `root - center` plus a fan of CZs from the
/// center to the leaves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarGeometry {
    pub root: String,
    pub center: String,
    pub leaves: BTreeSet<String>,
    /// Vertices `{root, center} ∪ leaves`, inputs all but the center,
    /// outputs all but the root.
    pub geometry: Geometry,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarDecomposition {
    /// `(G[Ĩ], I, Ĩ)` with `Ĩ = V \ img(f)`.
    pub residual: Geometry,
    /// In composition order: the residual acts first, then `stars[0]`, ...
    pub stars: Vec<StarGeometry>,
}

impl StarDecomposition {
    pub fn recompose(&self) -> SemanticsResult<Geometry> {
        let mut g = self.residual.clone();
        for s in &self.stars {
            g = compose_geometries(&g, &s.geometry).map_err(|e| SemanticsError::NotAFlow(e.to_string()))?;
        }
        Ok(g)
    }
}

/// A center `w ∈ W' ∩ O'` whose neighbours inside `V'` are all `g(w)` or in
/// `O'`; the smallest such label, or `None`.
pub fn maximal_star_vertex(
    geo: &Geometry,
    v_prime: &BTreeSet<String>,
    w_prime: &BTreeSet<String>,
    o_prime: &BTreeSet<String>,
    s: &SuccessorMap,
) -> Option<String> {
    w_prime
        .iter()
        .filter(|w| o_prime.contains(*w))
        .find(|w| {
            geo.neighbors(w)
                .iter()
                .all(|v| !v_prime.contains(v) || o_prime.contains(v) || s.succ(v) == Some(w.as_str()))
        })
        .cloned()
}

fn star_at(geo: &Geometry, v_prime: &BTreeSet<String>, root: &str, center: &str) -> StarGeometry {
    let leaves: BTreeSet<String> = geo
        .neighbors(center)
        .into_iter()
        .filter(|z| z != root && v_prime.contains(z))
        .collect();
    let mut g = Geometry::new();
    g.add_vertex(root);
    g.add_vertex(center);
    for z in &leaves {
        g.add_vertex(z);
    }
    for z in leaves.iter().map(String::as_str).chain([root]) {
        let w = geo.weight(center, z).expect("edge of the geometry");
        g.add_weighted_edge(center, z, w).expect("vertices added");
    }
    let vs: BTreeSet<String> = g.vertices().clone();
    g.set_inputs(vs.iter().filter(|x| *x != center).cloned()).expect("subset");
    g.set_outputs(vs.iter().filter(|x| *x != root).cloned()).expect("subset");
    if let Some(p) = geo.planes().get(root) {
        g.set_plane(root, *p).expect("root is measured");
    }
    StarGeometry {
        root: root.to_owned(),
        center: center.to_owned(),
        leaves,
        geometry: g,
    }
}

/// Repeatedly peels off a maximal star; the stars come back in composition
/// order, the reverse of the order in which they were extracted.
pub fn star_decompose(geo: &Geometry, f: &BTreeMap<String, String>) -> SemanticsResult<StarDecomposition> {
    if !is_flow_function(geo, f) {
        return Err(SemanticsError::NotAFlow(format!("{f:?}")));
    }
    let s = SuccessorMap::from_f(f.clone()).map_err(|e| SemanticsError::NotAFlow(e.to_string()))?;
    let mut v_prime = geo.vertices().clone();
    let mut w_prime: BTreeSet<String> = f.values().cloned().collect();
    let mut o_prime = geo.outputs().clone();
    let mut stars = Vec::with_capacity(w_prime.len());
    while !w_prime.is_empty() {
        let Some(w) = maximal_star_vertex(geo, &v_prime, &w_prime, &o_prime, &s) else {
            return Err(SemanticsError::NotAFlow("no maximal star".into()));
        };
        let v = s.pred(&w).expect("w is in the image").to_owned();
        stars.push(star_at(geo, &v_prime, &v, &w));
        v_prime.remove(&w);
        w_prime.remove(&w);
        o_prime.remove(&w);
        o_prime.insert(v);
    }
    stars.reverse();
    let mut residual = geo.induced(&v_prime);
    residual.set_outputs(v_prime.iter().cloned()).expect("subset");
    residual.clear_planes();
    Ok(StarDecomposition { residual, stars })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path3() -> (Geometry, BTreeMap<String, String>) {
        let g = Geometry::from_parts(&["v0", "v1", "v2"], &[("v0", "v1"), ("v1", "v2")], &["v0"], &["v2"]).unwrap();
        let f = [("v0", "v1"), ("v1", "v2")].iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
        (g, f)
    }

    fn set(xs: &[&str]) -> BTreeSet<String> {
        xs.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn chain_center_is_the_last_j() {
        let (g, f) = path3();
        let s = SuccessorMap::from_f(f).unwrap();
        let v = set(&["v0", "v1", "v2"]);
        assert_eq!(maximal_star_vertex(&g, &v, &set(&["v1", "v2"]), &set(&["v2"]), &s).as_deref(), Some("v2"));
        assert_eq!(maximal_star_vertex(&g, &v, &BTreeSet::new(), &set(&["v2"]), &s), None);
    }

    #[test]
    fn chain_decomposes_into_two_stars() {
        let (g, f) = path3();
        let d = star_decompose(&g, &f).unwrap();
        assert_eq!(d.stars.len(), 2);
        assert_eq!((d.stars[0].root.as_str(), d.stars[0].center.as_str()), ("v0", "v1"));
        assert_eq!((d.stars[1].root.as_str(), d.stars[1].center.as_str()), ("v1", "v2"));
        assert!(d.stars.iter().all(|s| s.leaves.is_empty()));
        assert_eq!(d.residual.vertices(), &set(&["v0"]));
        assert_eq!(d.residual.edge_count(), 0);
        assert_eq!(d.recompose().unwrap(), g);
    }

    #[test]
    fn star_shape() {
        // J[b/a] then CZ[b,c]
        let g = Geometry::from_parts(&["a", "b", "c"], &[("a", "b"), ("b", "c")], &["a", "c"], &["b", "c"]).unwrap();
        let f = [("a".to_string(), "b".to_string())].into_iter().collect();
        let d = star_decompose(&g, &f).unwrap();
        let s = &d.stars[0];
        assert_eq!(s.leaves, set(&["c"]));
        assert_eq!(s.geometry.inputs(), &set(&["a", "c"]));
        assert_eq!(s.geometry.outputs(), &set(&["b", "c"]));
        assert_eq!(d.recompose().unwrap(), g);
    }

    #[test]
    fn non_flow_rejected() {
        let (g, _) = path3();
        let f = [("v0".to_string(), "v2".to_string()), ("v1".to_string(), "v1".to_string())].into_iter().collect();
        assert!(matches!(star_decompose(&g, &f), Err(SemanticsError::NotAFlow(_))));
    }
}
