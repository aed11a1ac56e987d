//! Seeded instance generators for tests: exhaustive small graphs, random
//! open graphs and random stable-index circuits.

use std::collections::BTreeSet;

use mbqc_core::{Angle, CircuitIR, Gate, Geometry};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn vlabel(i: usize) -> String {
    format!("v{i}")
}

fn pair_index(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            out.push((i, j));
        }
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

pub fn is_connected(n: usize, edges: &[(usize, usize)]) -> bool {
    if n == 0 {
        return true;
    }
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// One representative edge list per isomorphism class of connected graphs on
/// `n` vertices.
pub fn connected_graphs(n: usize) -> Vec<Vec<(usize, usize)>> {
    assert!(n <= 7, "enumeration is exponential");
    let pairs = pair_index(n);
    let pos = |a: usize, b: usize| {
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        pairs.iter().position(|&p| p == (a, b)).expect("pair")
    };
    let perm_maps: Vec<Vec<usize>> = permutations(n)
        .into_iter()
        .map(|p| pairs.iter().map(|&(a, b)| pos(p[a], p[b])).collect())
        .collect();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << pairs.len()) {
        let canonical = perm_maps.iter().all(|pm| {
            let mut m = 0u64;
            for (i, &t) in pm.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    m |= 1 << t;
                }
            }
            m >= mask
        });
        if !canonical {
            continue;
        }
        let edges: Vec<(usize, usize)> = (0..pairs.len()).filter(|i| mask >> i & 1 == 1).map(|i| pairs[i]).collect();
        if is_connected(n, &edges) {
            out.push(edges);
        }
    }
    out
}

/// All subsets of `0..n` as bit masks, grouped by size.
pub fn subsets_of_size(n: usize, k: usize) -> Vec<u32> {
    (0u32..(1 << n)).filter(|m| m.count_ones() as usize == k).collect()
}

pub fn geometry_from(n: usize, edges: &[(usize, usize)], inputs: u32, outputs: u32) -> Geometry {
    let mut g = Geometry::new();
    for i in 0..n {
        g.add_vertex(&vlabel(i));
    }
    for &(a, b) in edges {
        g.add_edge(&vlabel(a), &vlabel(b)).expect("simple edge");
    }
    g.set_inputs((0..n).filter(|i| inputs >> i & 1 == 1).map(vlabel)).expect("inputs");
    g.set_outputs((0..n).filter(|i| outputs >> i & 1 == 1).map(vlabel)).expect("outputs");
    g
}

/// Connected random graph on `n` vertices: a random spanning tree plus each
/// remaining pair with probability `p`; `k` random inputs and outputs.
pub fn random_geometry(rng: &mut TestRng, n: usize, p: f64, k: usize) -> Geometry {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges = BTreeSet::new();
    for i in 1..n {
        let j = rng.gen_range(0..i);
        let (a, b) = (order[i].min(order[j]), order[i].max(order[j]));
        edges.insert((a, b));
    }
    for (a, b) in pair_index(n) {
        if !edges.contains(&(a, b)) && rng.gen_bool(p) {
            edges.insert((a, b));
        }
    }
    let mut idx: Vec<usize> = (0..n).collect();
    idx.shuffle(rng);
    let inputs = idx[..k].iter().fold(0u32, |m, &i| m | 1 << i);
    idx.shuffle(rng);
    let outputs = idx[..k].iter().fold(0u32, |m, &i| m | 1 << i);
    geometry_from(n, &edges.into_iter().collect::<Vec<_>>(), inputs, outputs)
}

pub fn random_angle(rng: &mut TestRng) -> Angle {
    Angle::frac(rng.gen_range(0..8), 4)
}

/// Random {J, CZ} circuit on `wires` wires with `gates` gates. Wire `w`
/// starts at index `q{w}` and its `s`-th J advances to `q{w}_{s}`. Angles are
/// multiples of pi/4. No pair of live indices receives two CZs.
pub fn random_circuit(rng: &mut TestRng, wires: usize, gates: usize) -> CircuitIR {
    let mut cur: Vec<String> = (0..wires).map(|w| format!("q{w}")).collect();
    let mut seg = vec![0usize; wires];
    let mut cz_done: BTreeSet<(String, String)> = BTreeSet::new();
    let mut out = Vec::new();
    for _ in 0..gates {
        let want_cz = wires >= 2 && rng.gen_bool(0.4);
        if want_cz {
            let a = rng.gen_range(0..wires);
            let mut b = rng.gen_range(0..wires - 1);
            if b >= a {
                b += 1;
            }
            let (x, y) = if cur[a] < cur[b] { (cur[a].clone(), cur[b].clone()) } else { (cur[b].clone(), cur[a].clone()) };
            if cz_done.insert((x.clone(), y.clone())) {
                out.push(Gate::CZ(x, y));
                continue;
            }
        }
        let w = rng.gen_range(0..wires);
        seg[w] += 1;
        let next = format!("q{w}_{}", seg[w]);
        out.push(Gate::J {
            angle: random_angle(rng),
            input: cur[w].clone(),
            output: next.clone(),
        });
        cur[w] = next;
    }
    CircuitIR::from_gates((0..wires).map(|w| format!("q{w}")), out).expect("generator emits valid circuits")
}
