//! Simple undirected graphs on at most 64 vertices.
//!
//! Each vertex owns one machine word of adjacency bits, so neighbourhood
//! queries and the refinement steps of the canonical labeller are popcounts.

mod canon;
mod graph6;
mod recognize;

pub use canon::{canonical_form, canonical_graph, canonical_labeling, is_isomorphic, CanonicalForm};
pub(crate) use canon::packed_key;
pub use graph6::{graph6_decode, graph6_encode};
pub use recognize::{
    describe, is_complete_bipartite_plus_isolated, is_complete_multipartite_plus_isolated,
    MultipartiteShape,
};

use crate::error::{Error, Result};
use std::fmt;

/// Largest supported vertex count.
pub const MAX_ORDER: usize = 64;

/// Orders above this are flagged as large: exhaustive use becomes slow.
pub const LARGE_ORDER: usize = 11;

/// Immutable simple graph. Row `i` bit `j` is set iff `{i, j}` is an edge.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<u64>,
}

pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn check_order(n: usize) -> Result<()> {
    if n > MAX_ORDER {
        Err(Error::OrderTooLarge(n))
    } else {
        Ok(())
    }
}

impl Graph {
    /// Builds a graph from an edge list. Loops are rejected, duplicates collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        check_order(n)?;
        let mut rows = vec![0u64; n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::InvalidVertex { vertex: w, order: n });
                }
            }
            if u == v {
                return Err(Error::InvalidParameter(format!("loop at vertex {u}")));
            }
            rows[u] |= 1 << v;
            rows[v] |= 1 << u;
        }
        Ok(Graph { n, rows })
    }

    /// Builds a graph from raw adjacency rows, validating symmetry and the
    /// absence of loops.
    pub fn from_rows(rows: Vec<u64>) -> Result<Graph> {
        let n = rows.len();
        check_order(n)?;
        let mask = low_mask(n);
        for (i, &r) in rows.iter().enumerate() {
            if r & !mask != 0 {
                return Err(Error::InvalidParameter(format!("row {i} names a vertex >= {n}")));
            }
            if r >> i & 1 == 1 {
                return Err(Error::InvalidParameter(format!("loop at vertex {i}")));
            }
            for j in bits(r) {
                if rows[j] >> i & 1 == 0 {
                    return Err(Error::InvalidParameter(format!(
                        "adjacency is not symmetric at ({i}, {j})"
                    )));
                }
            }
        }
        Ok(Graph { n, rows })
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<u64>) -> Graph {
        debug_assert!(Graph::from_rows(rows.clone()).is_ok());
        Graph { n: rows.len(), rows }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn is_large(&self) -> bool {
        self.n >= LARGE_ORDER
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u] >> v & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> {
        bits(self.rows[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| bits(self.rows[u] & !low_mask(u + 1)).map(move |v| (u, v)))
    }

    /// Number of vertices of degree zero.
    pub fn isolated_count(&self) -> usize {
        self.rows.iter().filter(|&&r| r == 0).count()
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.rows.iter().any(|&r| r == 0)
    }

    /// Dense 0/1 adjacency matrix, row-major.
    pub fn adjacency_matrix(&self) -> Vec<f64> {
        let n = self.n;
        let mut a = vec![0.0; n * n];
        for i in 0..n {
            for j in bits(self.rows[i]) {
                a[i * n + j] = 1.0;
            }
        }
        a
    }

    /// Relabels so that new vertex `i` is old vertex `order[i]`.
    pub fn relabel(&self, order: &[usize]) -> Result<Graph> {
        if order.len() != self.n {
            return Err(Error::OrderMismatch(order.len(), self.n));
        }
        let mut position = vec![usize::MAX; self.n];
        for (i, &v) in order.iter().enumerate() {
            if v >= self.n || position[v] != usize::MAX {
                return Err(Error::InvalidParameter("relabeling is not a permutation".into()));
            }
            position[v] = i;
        }
        Ok(self.relabel_unchecked(order))
    }

    pub(crate) fn relabel_unchecked(&self, order: &[usize]) -> Graph {
        let mut position = vec![0usize; self.n];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i;
        }
        let rows = order
            .iter()
            .map(|&v| bits(self.rows[v]).fold(0u64, |acc, w| acc | 1 << position[w]))
            .collect();
        Graph { n: self.n, rows }
    }

    /// Subgraph induced on `vertices`, in the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        let mut seen = 0u64;
        for &v in vertices {
            if v >= self.n {
                return Err(Error::InvalidVertex { vertex: v, order: self.n });
            }
            if seen >> v & 1 == 1 {
                return Err(Error::InvalidParameter(format!("vertex {v} listed twice")));
            }
            seen |= 1 << v;
        }
        let rows = vertices
            .iter()
            .map(|&v| {
                vertices
                    .iter()
                    .enumerate()
                    .filter(|&(_, &w)| self.has_edge(v, w))
                    .fold(0u64, |acc, (j, _)| acc | 1 << j)
            })
            .collect();
        Ok(Graph { n: vertices.len(), rows })
    }

    /// Subgraph induced on the vertices of a bit mask, in ascending order.
    pub fn induced_by_mask(&self, mask: u64) -> Graph {
        let vertices: Vec<usize> = bits(mask & low_mask(self.n)).collect();
        self.induced_subgraph(&vertices).expect("mask vertices are in range")
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (k, (u, v)) in self.edges().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

/// The complete graph `K_n`.
///
/// # Panics
/// If `n` exceeds [`MAX_ORDER`].
pub fn complete(n: usize) -> Graph {
    assert!(n <= MAX_ORDER, "order {n} exceeds {MAX_ORDER}");
    let full = low_mask(n);
    Graph { n, rows: (0..n).map(|i| full & !(1 << i)).collect() }
}

/// The null graph `nK_1`.
///
/// # Panics
/// If `n` exceeds [`MAX_ORDER`].
pub fn empty(n: usize) -> Graph {
    assert!(n <= MAX_ORDER, "order {n} exceeds {MAX_ORDER}");
    Graph { n, rows: vec![0; n] }
}

/// The complete multipartite graph with the given part sizes.
pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    if parts.is_empty() {
        return Err(Error::InvalidParameter("complete multipartite graph needs a part".into()));
    }
    if parts.contains(&0) {
        return Err(Error::InvalidParameter("part sizes must be positive".into()));
    }
    let n: usize = parts.iter().sum();
    check_order(n)?;
    let full = low_mask(n);
    let mut rows = Vec::with_capacity(n);
    let mut start = 0;
    for &p in parts {
        let part = low_mask(p) << start;
        rows.extend(std::iter::repeat(full & !part).take(p));
        start += p;
    }
    Ok(Graph { n, rows })
}

/// The path `P_n`; `path(0)` is the null graph of order 0.
///
/// # Panics
/// If `n` exceeds [`MAX_ORDER`].
pub fn path(n: usize) -> Graph {
    assert!(n <= MAX_ORDER, "order {n} exceeds {MAX_ORDER}");
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges).expect("path edges are valid")
}

/// The cycle `C_n`, `n >= 3`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("cycle needs at least 3 vertices, got {n}")));
    }
    check_order(n)?;
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges)
}

/// `G + H`: vertices of `h` follow those of `g`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Result<Graph> {
    let n = g.n + h.n;
    check_order(n)?;
    let mut rows = g.rows.clone();
    rows.extend(h.rows.iter().map(|&r| r << g.n));
    Ok(Graph { n, rows })
}

/// `G ∇ H`: the disjoint union plus every edge between the two sides.
pub fn join(g: &Graph, h: &Graph) -> Result<Graph> {
    let n = g.n + h.n;
    check_order(n)?;
    let g_side = low_mask(g.n);
    let h_side = low_mask(h.n) << g.n;
    let mut rows: Vec<u64> = g.rows.iter().map(|&r| r | h_side).collect();
    rows.extend(h.rows.iter().map(|&r| r << g.n | g_side));
    Ok(Graph { n, rows })
}

pub fn complement(g: &Graph) -> Graph {
    let full = low_mask(g.n);
    Graph {
        n: g.n,
        rows: g.rows.iter().enumerate().map(|(i, &r)| !r & full & !(1 << i)).collect(),
    }
}

/// Removes the edge `{u, v}`, which must be present.
pub fn delete_edge(g: &Graph, u: usize, v: usize) -> Result<Graph> {
    for w in [u, v] {
        if w >= g.n {
            return Err(Error::InvalidVertex { vertex: w, order: g.n });
        }
    }
    if !g.has_edge(u, v) {
        return Err(Error::NotAnEdge(u, v));
    }
    let mut rows = g.rows.clone();
    rows[u] &= !(1 << v);
    rows[v] &= !(1 << u);
    Ok(Graph { n: g.n, rows })
}

/// `G + tK_1`.
pub fn add_isolated(g: &Graph, t: usize) -> Result<Graph> {
    let n = g.n + t;
    check_order(n)?;
    let mut rows = g.rows.clone();
    rows.resize(n, 0);
    Ok(Graph { n, rows })
}

/// `t` disjoint copies of `g`; zero copies give the order-0 graph.
pub fn copies(g: &Graph, t: usize) -> Result<Graph> {
    check_order(g.n.saturating_mul(t))?;
    let mut acc = empty(0);
    for _ in 0..t {
        acc = disjoint_union(&acc, g)?;
    }
    Ok(acc)
}

/// `K_n` minus one edge, `n >= 2`.
pub fn complete_minus_edge(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("K_n minus an edge needs n >= 2, got {n}")));
    }
    check_order(n)?;
    delete_edge(&complete(n), 0, 1)
}
