use mbqc_core::Geometry;

use crate::error::{FlowError, FlowResult};

pub(crate) fn edge_bound_unchecked(n: usize, k: usize) -> i64 {
    let (n, k) = (n as i64, k as i64);
    k * n - k * (k + 1) / 2
}

/// Maximum edge count `kn - k(k+1)/2` of an n-vertex geometry with a flow
/// and k outputs.
pub fn edge_bound(n: usize, k: usize) -> FlowResult<i64> {
    if k == 0 || n < k {
        return Err(FlowError::BadArgs(format!("need n >= k >= 1, got n = {n}, k = {k}")));
    }
    Ok(edge_bound_unchecked(n, k))
}

/// Label of the `a`-th vertex (1-based) of path `j` (1-based).
pub fn extremal_label(j: usize, a: usize) -> String {
    format!("p{j}v{a}")
}

/// The edge-maximal geometry for path lengths `n1 <= ... <= nk`.
pub fn extremal_graph(partition: &[usize]) -> FlowResult<Geometry> {
    if partition.is_empty() || partition.contains(&0) || partition.windows(2).any(|w| w[0] > w[1]) {
        return Err(FlowError::BadPartition(format!("{partition:?}")));
    }
    let k = partition.len();
    let l = extremal_label;
    let mut g = Geometry::new();
    for (j, &nj) in partition.iter().enumerate() {
        for a in 1..=nj {
            g.add_vertex(&l(j + 1, a));
        }
        for a in 1..nj {
            g.add_edge(&l(j + 1, a), &l(j + 1, a + 1)).expect("path edge");
        }
    }
    for h in 1..=k {
        let nh = partition[h - 1];
        for j in h + 1..=k {
            let nj = partition[j - 1];
            for a in 1..nh {
                g.add_edge(&l(h, a), &l(j, a)).expect("type i");
                g.add_edge(&l(h, a + 1), &l(j, a)).expect("type ii");
            }
            for a in nh..=nj {
                g.add_edge(&l(h, nh), &l(j, a)).expect("type iii");
            }
        }
    }
    g.set_inputs((1..=k).map(|j| l(j, 1))).expect("inputs");
    g.set_outputs((1..=k).map(|j| l(j, partition[j - 1]))).expect("outputs");
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bounds() {
        assert_eq!(edge_bound(3, 1).unwrap(), 2);
        assert_eq!(edge_bound(4, 2).unwrap(), 5);
        for k in 1..6 {
            assert_eq!(edge_bound(k, k).unwrap(), (k * (k - 1) / 2) as i64);
        }
        assert!(edge_bound(2, 3).is_err());
        assert!(edge_bound(2, 0).is_err());
    }

    #[test]
    fn small_extremal_graphs() {
        assert_eq!(extremal_graph(&[3]).unwrap().edge_count(), 2);
        assert_eq!(extremal_graph(&[2, 2]).unwrap().edge_count(), 5);
        assert_eq!(extremal_graph(&[6, 8, 9]).unwrap().edge_count(), 63);
        assert!(extremal_graph(&[3, 2]).is_err());
        assert!(extremal_graph(&[]).is_err());
    }
}
