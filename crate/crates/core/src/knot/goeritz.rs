use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{SignedGraph, VertexId};

/// Signed Laplacian of a signed graph, rows and columns in vertex order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoeritzMatrix {
    pub vertices: Vec<VertexId>,
    pub unreduced: Vec<Vec<i64>>,
    pub dropped: VertexId,
    pub reduced: Vec<Vec<i64>>,
}

impl GoeritzMatrix {
    pub fn determinant(&self) -> i128 {
        determinant(&self.reduced)
    }
}

/// Entry `(i, j)`, `i ≠ j`, is minus the sum of the signs of the edges
/// joining `v_i` and `v_j`; diagonal entries make every row sum to zero.
/// Loops contribute nothing.
pub fn goeritz(sg: &SignedGraph, drop_vertex: VertexId) -> Result<GoeritzMatrix> {
    let g = &sg.graph;
    if !g.has_vertex(drop_vertex) {
        return Err(Error::UnknownVertex(drop_vertex));
    }
    let vertices: Vec<VertexId> = g.vertices().collect();
    let idx = |v: VertexId| vertices.binary_search(&v).unwrap();
    let n = vertices.len();
    let mut m = vec![vec![0i64; n]; n];
    for (e, a, b) in g.edges() {
        if a == b {
            continue;
        }
        let s = sg.signs[&e].to_i64();
        let (i, j) = (idx(a), idx(b));
        m[i][j] -= s;
        m[j][i] -= s;
        m[i][i] += s;
        m[j][j] += s;
    }
    let k = idx(drop_vertex);
    let reduced = m
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != k)
        .map(|(_, row)| row.iter().enumerate().filter(|(j, _)| *j != k).map(|(_, x)| *x).collect())
        .collect();
    Ok(GoeritzMatrix { vertices, unreduced: m, dropped: drop_vertex, reduced })
}

/// Exact integer determinant by fraction-free elimination. The empty matrix
/// has determinant 1.
pub fn determinant(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&i| a[i][k] != 0) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    if n == 0 {
        1
    } else {
        sign * a[n - 1][n - 1]
    }
}
