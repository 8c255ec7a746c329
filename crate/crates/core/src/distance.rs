//! Spectral distances between graphs of equal order.
//!
//! Spectra are compared index by index after sorting descending. `L2Sq` is the
//! sum of squared differences, without a square root.

use crate::error::{Error, Result};
use crate::graph::{complete, Graph};
use crate::spectrum::{SpectralGraph, Spectrum};
use std::fmt;
use std::str::FromStr;

/// Distances below this are re-checked against the characteristic
/// polynomials; equal polynomials force an exact zero.
pub const EXACT_ZERO_PROBE: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Norm {
    L1,
    L2Sq,
}

impl Norm {
    pub fn distance(self, a: &Spectrum, b: &Spectrum) -> f64 {
        let diffs = a.values().iter().zip(b.values()).map(|(x, y)| (x - y).abs());
        match self {
            Norm::L1 => diffs.sum(),
            Norm::L2Sq => diffs.map(|d| d * d).sum(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Norm::L1 => "l1",
            Norm::L2Sq => "l2sq",
        }
    }
}

impl fmt::Display for Norm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Norm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Norm> {
        match s {
            "l1" => Ok(Norm::L1),
            "l2sq" => Ok(Norm::L2Sq),
            other => Err(Error::InvalidParameter(format!("unknown norm {other:?} (expected l1 or l2sq)"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DistanceReport {
    pub l1: f64,
    pub l2sq: f64,
    pub per_index: Vec<f64>,
}

/// Distance between two analysed graphs, exactly zero for cospectral pairs.
pub fn spectral_distance(norm: Norm, g: &SpectralGraph, h: &SpectralGraph) -> Result<f64> {
    check_orders(g.graph(), h.graph())?;
    let d = norm.distance(g.spectrum(), h.spectrum());
    Ok(if d < EXACT_ZERO_PROBE && cospectral(g, h) { 0.0 } else { d })
}

/// Equal characteristic polynomials; `false` when either is unavailable.
pub fn cospectral(g: &SpectralGraph, h: &SpectralGraph) -> bool {
    match (g.charpoly(), h.charpoly()) {
        (Some(p), Some(q)) => p == q,
        _ => false,
    }
}

fn check_orders(g: &Graph, h: &Graph) -> Result<()> {
    if g.order() != h.order() {
        Err(Error::OrderMismatch(g.order(), h.order()))
    } else {
        Ok(())
    }
}

/// `sigma(G, H) = sum |lambda_i - lambda'_i|`.
pub fn sigma(g: &Graph, h: &Graph) -> Result<f64> {
    check_orders(g, h)?;
    spectral_distance(Norm::L1, &SpectralGraph::new(g.clone())?, &SpectralGraph::new(h.clone())?)
}

/// `lambda(G, H) = sum (lambda_i - lambda'_i)^2`.
pub fn lambda_sq(g: &Graph, h: &Graph) -> Result<f64> {
    check_orders(g, h)?;
    spectral_distance(Norm::L2Sq, &SpectralGraph::new(g.clone())?, &SpectralGraph::new(h.clone())?)
}

pub fn distance_report(g: &Graph, h: &Graph) -> Result<DistanceReport> {
    check_orders(g, h)?;
    let (sg, sh) = (SpectralGraph::new(g.clone())?, SpectralGraph::new(h.clone())?);
    if cospectral(&sg, &sh) {
        let n = g.order();
        return Ok(DistanceReport { l1: 0.0, l2sq: 0.0, per_index: vec![0.0; n] });
    }
    let per_index: Vec<f64> = sg
        .spectrum()
        .values()
        .iter()
        .zip(sh.spectrum().values())
        .map(|(x, y)| (x - y).abs())
        .collect();
    Ok(DistanceReport {
        l1: per_index.iter().sum(),
        l2sq: per_index.iter().map(|d| d * d).sum(),
        per_index,
    })
}

/// `sigma(K_n, G)` from `G`'s spectrum alone:
/// `2 (n* - 1 + sum_{i=2}^{n*} lambda_i)`, `n*` the number of eigenvalues
/// `>= -1`.
pub fn sigma_to_complete(n: usize, g: &Graph) -> Result<f64> {
    if g.order() != n {
        return Err(Error::OrderMismatch(n, g.order()));
    }
    if n == 0 {
        return Err(Error::InvalidParameter("order must be at least 1".into()));
    }
    Ok(sigma_to_complete_of(&SpectralGraph::new(g.clone())?))
}

pub fn sigma_to_complete_of(g: &SpectralGraph) -> f64 {
    let n_star = g.count_at_least(-1.0);
    let tail: f64 = g.spectrum().values()[1..n_star].iter().sum();
    2.0 * ((n_star - 1) as f64 + tail)
}

/// `sigma(K_n, G)` computed directly, for comparison with the closed form.
pub fn sigma_from_complete(g: &Graph) -> Result<f64> {
    sigma(&complete(g.order()), g)
}
