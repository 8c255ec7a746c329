//! Structural recognizers for the families the cospectrality results name.

use super::{bits, Graph};

/// `K_{parts} + t K_1`, parts sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultipartiteShape {
    pub parts: Vec<usize>,
    pub isolated: usize,
}

/// If the non-isolated vertices of `g` induce a complete multipartite graph,
/// returns its sorted part sizes and the number of isolated vertices.
///
/// On the non-isolated vertices, non-adjacency must be an equivalence
/// relation; its classes are the parts. A graph without edges yields no parts.
pub fn is_complete_multipartite_plus_isolated(g: &Graph) -> Option<MultipartiteShape> {
    let rows = g.rows();
    let active = rows
        .iter()
        .enumerate()
        .filter(|&(_, &r)| r != 0)
        .fold(0u64, |acc, (v, _)| acc | 1 << v);
    let mut unassigned = active;
    let mut parts = Vec::new();
    while unassigned != 0 {
        let u = unassigned.trailing_zeros() as usize;
        let class = active & !rows[u];
        if bits(class).any(|w| active & !rows[w] != class) {
            return None;
        }
        parts.push(class.count_ones() as usize);
        unassigned &= !class;
    }
    parts.sort_unstable();
    Some(MultipartiteShape { parts, isolated: g.order() - active.count_ones() as usize })
}

/// `K_{p,q} + t K_1` with at least one edge.
pub fn is_complete_bipartite_plus_isolated(g: &Graph) -> bool {
    is_complete_multipartite_plus_isolated(g).is_some_and(|s| s.parts.len() == 2)
}

fn components(g: &Graph) -> Vec<u64> {
    let rows = g.rows();
    let mut left = if g.order() == 64 { u64::MAX } else { (1u64 << g.order()) - 1 };
    let mut out = Vec::new();
    while left != 0 {
        let mut comp = 1u64 << left.trailing_zeros();
        loop {
            let grown = bits(comp).fold(comp, |acc, v| acc | rows[v]);
            if grown == comp {
                break;
            }
            comp = grown;
        }
        left &= !comp;
        out.push(comp);
    }
    out
}

fn is_path(h: &Graph) -> bool {
    let n = h.order();
    h.edge_count() == n - 1 && (0..n).all(|v| h.degree(v) <= 2)
}

fn is_cycle(h: &Graph) -> bool {
    h.edge_count() == h.order() && (0..h.order()).all(|v| h.degree(v) == 2)
}

fn describe_component(h: &Graph) -> Option<String> {
    let n = h.order();
    if n == 1 {
        return Some("K1".into());
    }
    let shape = is_complete_multipartite_plus_isolated(h);
    if let Some(s) = &shape {
        if s.parts.iter().all(|&p| p == 1) {
            return Some(format!("K{n}"));
        }
    }
    if is_path(h) {
        return Some(format!("P{n}"));
    }
    if let Some(s) = shape {
        let twos = s.parts.iter().filter(|&&p| p == 2).count();
        if twos == 1 && s.parts.iter().all(|&p| p <= 2) && s.parts.len() >= 3 {
            return Some(format!("K{n}-e"));
        }
        let list: Vec<String> = s.parts.iter().map(|p| p.to_string()).collect();
        return Some(format!("K{}", list.join(",")));
    }
    if is_cycle(h) {
        return Some(format!("C{n}"));
    }
    None
}

/// Best-effort family expression for `g`, e.g. `K2+2*K1` or `K4-e`.
///
/// Every connected component must be a complete multipartite graph, a path or
/// a cycle; otherwise `None`. Components are listed by decreasing order.
pub fn describe(g: &Graph) -> Option<String> {
    let n = g.order();
    if n == 0 {
        return None;
    }
    if n > 1 && g.edge_count() == 0 {
        return Some(format!("E{n}"));
    }
    let mut labels = Vec::new();
    for comp in components(g) {
        let h = g.induced_by_mask(comp);
        labels.push((h.order(), describe_component(&h)?));
    }
    labels.sort_by(|a, b| b.0.cmp(&a.0).then_with(|| a.1.cmp(&b.1)));
    let mut terms: Vec<String> = Vec::new();
    let mut i = 0;
    while i < labels.len() {
        let run = labels[i..].iter().take_while(|l| l.1 == labels[i].1).count();
        terms.push(if run == 1 { labels[i].1.clone() } else { format!("{run}*{}", labels[i].1) });
        i += run;
    }
    Some(terms.join("+"))
}
