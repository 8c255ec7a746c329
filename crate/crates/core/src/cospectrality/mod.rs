//! Brute-force cospectrality: the distance from a graph's spectrum to the
//! nearest spectrum of a non-isomorphic graph of the same order.

mod closed_form;
mod table;
mod verify;

pub use closed_form::{cs_closed_form, ClosedFormCs, CsFamily};
pub use table::{family_table, write_table_csv, write_table_json, TableRow};
pub use verify::{
    verify, Status, Theorem, VerificationReport, Verifier, Witness, DEFAULT_MAX_ORDER, ENERGY_EQUALITY_TOLERANCE,
};

use crate::distance::{cospectral, Norm, EXACT_ZERO_PROBE};
use crate::enumerate::{generate, GraphStream, MAX_GENERATED_ORDER};
use crate::error::{Error, Result};
use crate::graph::{canonical_form, canonical_graph, graph6_encode, CanonicalForm, Graph};
use crate::spectrum::SpectralGraph;
use rayon::prelude::*;
use std::sync::OnceLock;

/// Tolerance for distance and closed-form claims.
pub const CLAIM_TOLERANCE: f64 = 1e-8;

/// Candidates within this distance of the minimum are minimizers too.
pub const TIE_TOLERANCE: f64 = 1e-7;

/// Largest order for [`cs_max`] without the long-run flag.
pub const CS_MAX_ORDER: usize = 7;
/// Largest order for [`cs_max`] with the long-run flag.
pub const CS_MAX_LONG_ORDER: usize = 8;

#[derive(Debug)]
pub struct CatalogEntry {
    pub form: CanonicalForm,
    pub data: SpectralGraph,
}

impl CatalogEntry {
    pub fn graph(&self) -> &Graph {
        self.data.graph()
    }
}

/// Every isomorphism class of one order with its spectrum, sorted by
/// canonical form.
#[derive(Debug)]
pub struct Catalog {
    order: usize,
    entries: Vec<CatalogEntry>,
}

impl Catalog {
    /// All classes of order `n` from the internal generator.
    pub fn generate(n: usize) -> Result<Catalog> {
        let entries = generate(n)?
            .into_par_iter()
            .map(|g| {
                // generator output is already canonically labelled
                let form = CanonicalForm::from_canonical_bytes(graph6_encode(&g)?);
                Ok(CatalogEntry { form, data: SpectralGraph::new(g)? })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Catalog { order: n, entries })
    }

    /// Canonicalizes and deduplicates arbitrary input graphs of one order.
    pub fn from_graphs(order: usize, graphs: Vec<Graph>) -> Result<Catalog> {
        if let Some(g) = graphs.iter().find(|g| g.order() != order) {
            return Err(Error::OrderMismatch(order, g.order()));
        }
        let mut canon: Vec<(CanonicalForm, Graph)> = graphs
            .into_par_iter()
            .map(|g| {
                let c = canonical_graph(&g);
                (canonical_form(&c), c)
            })
            .collect();
        canon.par_sort_unstable_by(|a, b| a.0.cmp(&b.0));
        canon.dedup_by(|a, b| a.0 == b.0);
        let entries = canon
            .into_par_iter()
            .map(|(form, g)| Ok(CatalogEntry { form, data: SpectralGraph::new(g)? }))
            .collect::<Result<Vec<_>>>()?;
        Ok(Catalog { order, entries })
    }

    pub fn from_stream(stream: GraphStream) -> Result<Catalog> {
        let order = stream.order();
        let graphs = stream.collect::<Result<Vec<_>>>()?;
        Catalog::from_graphs(order, graphs)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn position(&self, form: &CanonicalForm) -> Option<usize> {
        self.entries.binary_search_by(|e| e.form.cmp(form)).ok()
    }

    /// Cospectrality of `g` against every other class in the catalog.
    pub fn cospectrality(&self, g: &Graph, norm: Norm) -> Result<CsResult> {
        if g.order() != self.order {
            return Err(Error::OrderMismatch(g.order(), self.order));
        }
        let query = SpectralGraph::new(g.clone())?;
        let form = canonical_form(g);
        let skip = self.position(&form);
        Ok(self.cs_of(&query, skip, norm)?)
    }

    fn cs_of(&self, query: &SpectralGraph, skip: Option<usize>, norm: Norm) -> Result<CsResult> {
        let scored: Vec<Option<(f64, bool)>> = self
            .entries
            .par_iter()
            .enumerate()
            .map(|(i, e)| (Some(i) != skip).then(|| score(norm, query, &e.data)))
            .collect();
        self.reduce(&scored)
    }

    /// Order-independent reduction: the minimum, then every candidate within
    /// the tie tolerance, in catalog order.
    fn reduce(&self, scored: &[Option<(f64, bool)>]) -> Result<CsResult> {
        let value = scored
            .iter()
            .flatten()
            .map(|&(d, _)| d)
            .min_by(f64::total_cmp)
            .ok_or(Error::NoCandidates(self.order))?;
        let minimizers = scored
            .iter()
            .zip(&self.entries)
            .filter_map(|(s, e)| s.filter(|&(d, _)| d <= value + TIE_TOLERANCE).map(|_| e.form.clone()))
            .collect();
        Ok(CsResult {
            value,
            minimizers,
            graphs_scanned: scored.iter().flatten().count(),
            exact_zero: scored.iter().flatten().any(|&(_, exact)| exact),
        })
    }
}

/// Distance and whether the pair is exactly cospectral.
fn score(norm: Norm, a: &SpectralGraph, b: &SpectralGraph) -> (f64, bool) {
    let d = norm.distance(a.spectrum(), b.spectrum());
    if d < EXACT_ZERO_PROBE && cospectral(a, b) {
        (0.0, true)
    } else {
        (d, false)
    }
}

/// Catalogs for the generator's orders, built on first use.
pub struct Catalogs {
    slots: Vec<OnceLock<Catalog>>,
}

impl Default for Catalogs {
    fn default() -> Self {
        Catalogs { slots: (0..=MAX_GENERATED_ORDER).map(|_| OnceLock::new()).collect() }
    }
}

impl Catalogs {
    pub fn new() -> Catalogs {
        Catalogs::default()
    }

    pub fn get(&self, n: usize) -> Result<&Catalog> {
        let slot = self.slots.get(n).filter(|_| n >= 1).ok_or_else(|| {
            Error::InvalidParameter(format!("the generator supports orders 1..={MAX_GENERATED_ORDER}, got {n}"))
        })?;
        if let Some(c) = slot.get() {
            return Ok(c);
        }
        let built = Catalog::generate(n)?;
        Ok(slot.get_or_init(|| built))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CsResult {
    /// `cs(G)` under the chosen norm.
    pub value: f64,
    /// Canonical forms of every class attaining the minimum, ascending.
    pub minimizers: Vec<CanonicalForm>,
    pub graphs_scanned: usize,
    /// A non-isomorphic graph with the same characteristic polynomial exists.
    pub exact_zero: bool,
}

/// `cs(G)` over the classes of `stream`. Streams from files may repeat
/// classes or use arbitrary labellings; they are canonicalized first.
pub fn cospectrality(g: &Graph, norm: Norm, stream: GraphStream) -> Result<CsResult> {
    if stream.order() != g.order() {
        return Err(Error::OrderMismatch(g.order(), stream.order()));
    }
    Catalog::from_stream(stream)?.cospectrality(g, norm)
}

#[derive(Debug, Clone, PartialEq)]
pub struct CsMax {
    pub value: f64,
    pub argmax: Vec<CanonicalForm>,
}

/// `cs_n`: the largest cospectrality over all classes of the catalog's order.
/// Quadratic in the class count; orders above 7 need `long_run`.
pub fn cs_max(catalog: &Catalog, norm: Norm, long_run: bool) -> Result<CsMax> {
    let n = catalog.order();
    let limit = if long_run { CS_MAX_LONG_ORDER } else { CS_MAX_ORDER };
    if !(2..=limit).contains(&n) {
        return Err(Error::InvalidParameter(format!(
            "cs_n is supported for orders 2..={limit}{}, got {n}",
            if long_run { "" } else { " without the long-run flag" }
        )));
    }
    let values: Vec<f64> = (0..catalog.len())
        .into_par_iter()
        .map(|i| {
            let query = &catalog.entries[i].data;
            catalog
                .entries
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, e)| score(norm, query, &e.data).0)
                .min_by(f64::total_cmp)
                .expect("order >= 2 has at least two classes")
        })
        .collect();
    let value = values.iter().copied().max_by(f64::total_cmp).expect("catalog is nonempty");
    let argmax = values
        .iter()
        .zip(&catalog.entries)
        .filter(|&(&v, _)| v >= value - TIE_TOLERANCE)
        .map(|(_, e)| e.form.clone())
        .collect();
    Ok(CsMax { value, argmax })
}

/// Whether `x + y` over positive `x y = m n` is minimized only at
/// `{x, y} = {m, n}`; then `K_{m,n}` has no cospectral mate.
pub fn kmn_positive(m: usize, n: usize) -> bool {
    assert!(m >= 1 && n >= 1, "parts must be positive");
    let product = m * n;
    (1..=product)
        .take_while(|x| x * x <= product)
        .filter(|x| product % x == 0)
        .all(|x| x + product / x >= m + n)
}
