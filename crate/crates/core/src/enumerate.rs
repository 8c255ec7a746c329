//! Streams of pairwise non-isomorphic graphs of one order.
//!
//! The internal generator grows graphs one vertex at a time: every graph of
//! order `k` is extended by a new vertex with each of the `2^k` possible
//! neighbourhoods, children are canonicalized, and duplicates are dropped
//! before the next level. Output is sorted by canonical form.

use crate::error::{Error, Result};
use crate::graph::{canonical_graph, graph6_decode, graph6_encode, packed_key, Graph};
use rayon::prelude::*;
use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Lines, Write};
use std::path::{Path, PathBuf};

/// Largest order the internal generator accepts.
pub const MAX_GENERATED_ORDER: usize = 10;

/// Inclusive edge-count bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeRange {
    pub min: usize,
    pub max: usize,
}

impl EdgeRange {
    pub fn exactly(m: usize) -> EdgeRange {
        EdgeRange { min: m, max: m }
    }

    pub fn contains(&self, g: &Graph) -> bool {
        (self.min..=self.max).contains(&g.edge_count())
    }
}

fn from_packed_key(n: usize, key: u64) -> Graph {
    let total = n * n.saturating_sub(1) / 2;
    let mut rows = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if key >> (total - 1 - k) & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            k += 1;
        }
    }
    Graph::from_rows_unchecked(rows)
}

fn next_level(parents: &[Graph]) -> Vec<Graph> {
    let k = parents.first().map_or(0, Graph::order);
    let mut keys: Vec<u64> = parents
        .par_iter()
        .flat_map_iter(|parent| {
            (0..1u64 << k).map(move |mask| {
                let mut rows: Vec<u64> = parent
                    .rows()
                    .iter()
                    .enumerate()
                    .map(|(i, &r)| r | (mask >> i & 1) << k)
                    .collect();
                rows.push(mask);
                packed_key(&canonical_graph(&Graph::from_rows_unchecked(rows)))
            })
        })
        .collect();
    keys.par_sort_unstable();
    keys.dedup();
    keys.into_iter().map(|key| from_packed_key(k + 1, key)).collect()
}

/// One canonical representative per isomorphism class of order `n`,
/// ascending by canonical form.
pub fn generate(n: usize) -> Result<Vec<Graph>> {
    if !(1..=MAX_GENERATED_ORDER).contains(&n) {
        return Err(Error::InvalidParameter(format!(
            "the generator supports orders 1..={MAX_GENERATED_ORDER}, got {n}"
        )));
    }
    let mut level = vec![Graph::from_rows_unchecked(vec![0])];
    for _ in 1..n {
        level = next_level(&level);
    }
    Ok(level)
}

enum Source {
    Generated(std::vec::IntoIter<Graph>),
    File {
        path: PathBuf,
        lines: Lines<BufReader<File>>,
        line_no: usize,
        pending: Option<Graph>,
    },
}

/// Graphs of a single order, optionally filtered by edge count.
pub struct GraphStream {
    order: usize,
    filter: Option<EdgeRange>,
    source: Source,
}

impl GraphStream {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn filter(&self) -> Option<EdgeRange> {
        self.filter
    }

    pub fn with_filter(mut self, filter: Option<EdgeRange>) -> GraphStream {
        self.filter = filter;
        self
    }

    /// Wraps an in-memory list; all graphs must have order `order`.
    pub fn from_graphs(order: usize, graphs: Vec<Graph>) -> Result<GraphStream> {
        if let Some(g) = graphs.iter().find(|g| g.order() != order) {
            return Err(Error::OrderMismatch(order, g.order()));
        }
        Ok(GraphStream { order, filter: None, source: Source::Generated(graphs.into_iter()) })
    }

    fn next_unfiltered(&mut self) -> Option<Result<Graph>> {
        match &mut self.source {
            Source::Generated(it) => it.next().map(Ok),
            Source::File { path, lines, line_no, pending } => {
                if let Some(g) = pending.take() {
                    return Some(Ok(g));
                }
                let line = lines.next()?;
                *line_no += 1;
                let at = |message: String| Error::StreamLine { path: path.clone(), line: *line_no, message };
                Some(match line {
                    Err(e) => Err(at(e.to_string())),
                    Ok(text) => match graph6_decode(text.trim_end_matches('\r').as_bytes()) {
                        Err(e) => Err(at(e.to_string())),
                        Ok(g) if g.order() != self.order => Err(at(format!(
                            "order {} differs from the stream order {}",
                            g.order(),
                            self.order
                        ))),
                        Ok(g) => Ok(g),
                    },
                })
            }
        }
    }
}

impl Iterator for GraphStream {
    type Item = Result<Graph>;

    fn next(&mut self) -> Option<Result<Graph>> {
        loop {
            match self.next_unfiltered()? {
                Ok(g) if self.filter.is_some_and(|f| !f.contains(&g)) => continue,
                other => return Some(other),
            }
        }
    }
}

/// All non-isomorphic graphs of order `n` (1..=10), in canonical-form order.
pub fn enumerate_graphs(n: usize, filter: Option<EdgeRange>) -> Result<GraphStream> {
    Ok(GraphStream::from_graphs(n, generate(n)?)?.with_filter(filter))
}

/// Opens a file of newline-separated graph6 lines, all of one order. An
/// optional `>>graph6<<` header on the first line is skipped.
pub fn read_graph6_stream(path: impl AsRef<Path>) -> Result<GraphStream> {
    let path = path.as_ref().to_path_buf();
    let mut lines = BufReader::new(File::open(&path)?).lines();
    let at = |line: usize, message: String| Error::StreamLine { path: path.clone(), line, message };
    let first = match lines.next() {
        None => return Err(at(1, "empty graph6 stream".into())),
        Some(line) => line.map_err(|e| at(1, e.to_string()))?,
    };
    let first = first.trim_end_matches('\r');
    let first = first.strip_prefix(">>graph6<<").unwrap_or(first);
    let g = graph6_decode(first.as_bytes()).map_err(|e| at(1, e.to_string()))?;
    Ok(GraphStream {
        order: g.order(),
        filter: None,
        source: Source::File { path, lines, line_no: 1, pending: Some(g) },
    })
}

/// Writes one graph6 line per graph, returning the count written.
pub fn write_graph6<W: Write>(graphs: impl IntoIterator<Item = Result<Graph>>, out: W) -> Result<usize> {
    let mut out = BufWriter::new(out);
    let mut count = 0;
    for g in graphs {
        out.write_all(&graph6_encode(&g?)?)?;
        out.write_all(b"\n")?;
        count += 1;
    }
    out.flush()?;
    Ok(count)
}

pub fn write_graph6_stream(stream: GraphStream, path: impl AsRef<Path>) -> Result<usize> {
    write_graph6(stream, File::create(path)?)
}
