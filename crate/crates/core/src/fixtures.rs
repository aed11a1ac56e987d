//! Standard geometries used as test inputs.

use crate::error::{CoreError, CoreResult};
use crate::geometry::Geometry;

pub fn grid_label(row: usize, col: usize) -> String {
    format!("r{row}c{col}")
}

fn lattice(rows: usize, cols: usize) -> Geometry {
    let mut g = Geometry::new();
    for r in 0..rows {
        for c in 0..cols {
            g.add_vertex(&grid_label(r, c));
        }
    }
    for r in 0..rows {
        for c in 0..cols {
            if c + 1 < cols {
                g.add_edge(&grid_label(r, c), &grid_label(r, c + 1)).expect("grid edge");
            }
            if r + 1 < rows {
                g.add_edge(&grid_label(r, c), &grid_label(r + 1, c)).expect("grid edge");
            }
        }
    }
    g
}

/// `n` rows by `d` columns; inputs are the left column, outputs the right.
pub fn grid_geometry(n: usize, d: usize) -> CoreResult<Geometry> {
    if n == 0 || d == 0 {
        return Err(CoreError::BadParameters("grid dimensions must be positive".into()));
    }
    let mut g = lattice(n, d);
    g.set_inputs((0..n).map(|r| grid_label(r, 0)))?;
    g.set_outputs((0..n).map(|r| grid_label(r, d - 1)))?;
    Ok(g)
}

/// Six vertices a0..a2, b0..b2 with edges a_j b_j and a_j b_{j-1 mod 3}.
pub fn no_flow_fixture() -> Geometry {
    let mut g = Geometry::new();
    for j in 0..3 {
        g.add_vertex(&format!("a{j}"));
        g.add_vertex(&format!("b{j}"));
    }
    for j in 0..3 {
        g.add_edge(&format!("a{j}"), &format!("b{j}")).expect("edge");
        g.add_edge(&format!("a{j}"), &format!("b{}", (j + 2) % 3)).expect("edge");
    }
    g.set_inputs((0..3).map(|j| format!("a{j}"))).expect("inputs");
    g.set_outputs((0..3).map(|j| format!("b{j}"))).expect("outputs");
    g
}

/// A (2k-1) x (2k+1) lattice whose inputs and outputs are the left and right
/// ends of the even rows.
pub fn qubit_reversal_fixture(k: usize) -> CoreResult<Geometry> {
    if k == 0 {
        return Err(CoreError::BadParameters("k must be positive".into()));
    }
    let (rows, cols) = (2 * k - 1, 2 * k + 1);
    let mut g = lattice(rows, cols);
    g.set_inputs((0..rows).step_by(2).map(|r| grid_label(r, 0)))?;
    g.set_outputs((0..rows).step_by(2).map(|r| grid_label(r, cols - 1)))?;
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_counts() {
        let g = grid_geometry(2, 2).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 4);
        let g = grid_geometry(3, 4).unwrap();
        assert_eq!(g.edge_count(), 3 * 3 + 2 * 4);
        assert!(grid_geometry(0, 2).is_err());
    }

    #[test]
    fn no_flow_counts() {
        let g = no_flow_fixture();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edge_count(), 6);
        assert!(g.has_edge("a0", "b2"));
    }

    #[test]
    fn reversal_shape() {
        let g = qubit_reversal_fixture(2).unwrap();
        assert_eq!(g.vertex_count(), 15);
        assert_eq!(g.inputs().len(), 2);
        assert!(g.outputs().contains("r2c4"));
    }
}
