//! Canonical labelling by partition refinement and backtracking.
//!
//! The search tree starts from the degree partition refined to an equitable
//! ordered partition. Each node individualizes one vertex of the first
//! smallest non-singleton cell and refines again; leaves are discrete
//! partitions, i.e. labellings. The canonical labelling is the leaf whose
//! relabelled upper triangle, read column by column, is lexicographically
//! largest. Every step depends only on the ordered cells, never on vertex
//! names, so the set of leaf graphs (and its maximum) is an isomorphism
//! invariant.
//!
//! Two leaves with identical relabelled graphs give an automorphism. Those are
//! used to skip subtrees: a subtree whose leaf matches the first or the best
//! leaf is abandoned up to the level where the two paths diverge, and at each
//! node children in the same orbit as an explored child (under automorphisms
//! fixing the node's path) are skipped.

use super::{bits, graph6::graph6_any_order, Graph};
use std::cmp::Ordering;

/// The graph6 encoding of a graph's canonical relabelling.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn as_str(&self) -> &str {
        std::str::from_utf8(&self.0).expect("graph6 is ASCII")
    }

    pub fn into_bytes(self) -> Vec<u8> {
        self.0
    }

    /// Wraps bytes that are already the canonical graph6 of some graph.
    pub(crate) fn from_canonical_bytes(bytes: Vec<u8>) -> CanonicalForm {
        CanonicalForm(bytes)
    }
}

impl std::fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CanonicalForm({})", self.as_str())
    }
}

impl std::fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Vertex order of the canonical relabelling: canonical vertex `i` is
/// `labeling[i]` of the input.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let n = g.order();
    if n <= 1 {
        return (0..n).collect();
    }
    let mut search = Search::new(g);
    let mut cells = degree_partition(g);
    refine(g.rows(), &mut cells);
    let mut path = Vec::with_capacity(n);
    search.descend(cells, &mut path);
    search.best.expect("search reaches a leaf").perm
}

pub fn canonical_graph(g: &Graph) -> Graph {
    g.relabel_unchecked(&canonical_labeling(g))
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    CanonicalForm(graph6_any_order(&canonical_graph(g)))
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order()
        && g.edge_count() == h.edge_count()
        && canonical_graph(g) == canonical_graph(h)
}

/// Upper triangle in column order, first bit most significant, as one word.
/// Numeric order of keys equals graph6 byte order for graphs of one order.
///
/// # Panics
/// For orders above 11 (the triangle no longer fits in 64 bits).
pub(crate) fn packed_key(g: &Graph) -> u64 {
    let n = g.order();
    assert!(n <= 11, "packed keys cover orders up to 11");
    let rows = g.rows();
    let mut key = 0u64;
    for j in 1..n {
        let col = rows[j];
        for i in 0..j {
            key = key << 1 | (col >> i & 1);
        }
    }
    key
}

fn degree_partition(g: &Graph) -> Vec<u64> {
    let n = g.order();
    let mut by_degree = vec![0u64; n];
    for v in 0..n {
        by_degree[g.degree(v)] |= 1 << v;
    }
    by_degree.into_iter().filter(|&c| c != 0).collect()
}

/// Refines `cells` until equitable: every vertex of a cell has the same number
/// of neighbours in every cell. Split pieces stay in place, ordered by
/// descending neighbour count.
fn refine(adj: &[u64], cells: &mut Vec<u64>) {
    let mut next = Vec::with_capacity(cells.len());
    let mut s = 0;
    while s < cells.len() {
        let splitter = cells[s];
        let mut split = false;
        next.clear();
        for &cell in cells.iter() {
            if cell & (cell - 1) == 0 {
                next.push(cell);
                continue;
            }
            let (mut lo, mut hi) = (u32::MAX, 0);
            for v in bits(cell) {
                let c = (adj[v] & splitter).count_ones();
                lo = lo.min(c);
                hi = hi.max(c);
            }
            if lo == hi {
                next.push(cell);
                continue;
            }
            split = true;
            for c in (lo..=hi).rev() {
                let piece = bits(cell)
                    .filter(|&v| (adj[v] & splitter).count_ones() == c)
                    .fold(0u64, |acc, v| acc | 1 << v);
                if piece != 0 {
                    next.push(piece);
                }
            }
        }
        if split {
            std::mem::swap(cells, &mut next);
            s = 0;
        } else {
            s += 1;
        }
    }
}

#[derive(Clone)]
struct Leaf {
    perm: Vec<usize>,
    key: Vec<u64>,
    path: Vec<usize>,
}

struct Search<'a> {
    g: &'a Graph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    automorphisms: Vec<Vec<usize>>,
    key_buf: Vec<u64>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.order();
        let words = (n * (n - 1) / 2).div_ceil(64).max(1);
        Search { g, first: None, best: None, automorphisms: Vec::new(), key_buf: vec![0; words] }
    }

    /// Returns `Some(level)` when the search should unwind to the node at
    /// depth `level`.
    fn descend(&mut self, cells: Vec<u64>, path: &mut Vec<usize>) -> Option<usize> {
        let n = self.g.order();
        if cells.len() == n {
            return self.leaf(&cells, path);
        }
        let depth = path.len();
        let (target, cell) = cells
            .iter()
            .copied()
            .enumerate()
            .filter(|&(_, c)| c.count_ones() > 1)
            .min_by_key(|&(i, c)| (c.count_ones(), i))
            .expect("non-discrete partition has a non-singleton cell");
        let mut explored: Vec<usize> = Vec::new();
        for v in bits(cell) {
            if !explored.is_empty() && self.in_explored_orbit(v, &explored, path) {
                continue;
            }
            explored.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(1 << v);
            child.push(cell & !(1 << v));
            child.extend_from_slice(&cells[target + 1..]);
            refine(self.g.rows(), &mut child);
            path.push(v);
            let unwind = self.descend(child, path);
            path.pop();
            if let Some(level) = unwind {
                if level < depth {
                    return Some(level);
                }
            }
        }
        None
    }

    fn leaf(&mut self, cells: &[u64], path: &[usize]) -> Option<usize> {
        let perm: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        self.fill_key(&perm);
        let Some(first) = &self.first else {
            let leaf = Leaf { perm, key: self.key_buf.clone(), path: path.to_vec() };
            self.best = Some(leaf.clone());
            self.first = Some(leaf);
            return None;
        };
        if self.key_buf == first.key {
            let (auto, level) = (mapping(&perm, &first.perm), common_prefix(path, &first.path));
            self.automorphisms.push(auto);
            return Some(level);
        }
        let best = self.best.as_ref().expect("best is set with first");
        match self.key_buf.cmp(&best.key) {
            Ordering::Greater => {
                self.best = Some(Leaf { perm, key: self.key_buf.clone(), path: path.to_vec() });
                None
            }
            Ordering::Equal => {
                let (auto, level) = (mapping(&perm, &best.perm), common_prefix(path, &best.path));
                self.automorphisms.push(auto);
                Some(level)
            }
            Ordering::Less => None,
        }
    }

    fn fill_key(&mut self, perm: &[usize]) {
        let rows = self.g.rows();
        self.key_buf.iter_mut().for_each(|w| *w = 0);
        let mut k = 0;
        for j in 1..perm.len() {
            let col = rows[perm[j]];
            for &pi in &perm[..j] {
                if col >> pi & 1 == 1 {
                    self.key_buf[k / 64] |= 1 << (63 - k % 64);
                }
                k += 1;
            }
        }
    }

    fn in_explored_orbit(&self, v: usize, explored: &[usize], path: &[usize]) -> bool {
        let n = self.g.order();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut any = false;
        for auto in &self.automorphisms {
            if path.iter().any(|&p| auto[p] != p) {
                continue;
            }
            any = true;
            for (x, &y) in auto.iter().enumerate() {
                let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
                if rx != ry {
                    parent[rx] = ry;
                }
            }
        }
        if !any {
            return false;
        }
        let rv = find(&mut parent, v);
        explored.iter().any(|&u| find(&mut parent, u) == rv)
    }
}

/// The automorphism sending `from[i]` to `to[i]`.
fn mapping(from: &[usize], to: &[usize]) -> Vec<usize> {
    let mut auto = vec![0; from.len()];
    for (&f, &t) in from.iter().zip(to) {
        auto[f] = t;
    }
    auto
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}
