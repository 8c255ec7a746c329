//! Adjacency spectra: numeric eigenvalues, exact characteristic polynomials,
//! energy, and the closed-form spectra of a few families.

mod charpoly;
mod jacobi;

pub use charpoly::{char_poly, CharPoly, EXACT_ORDER_LIMIT};
pub use jacobi::{symmetric_eigenvalues, MAX_SWEEPS};

use crate::error::{Error, Result};
use crate::graph::Graph;
use std::sync::OnceLock;

/// Numeric eigenvalues within this distance of an integer threshold are
/// decided through the characteristic polynomial.
pub const EXACT_BAND: f64 = 1e-7;

/// Adjacency eigenvalues sorted descending, with a per-eigenvalue absolute
/// error bound for the size class.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    values: Vec<f64>,
    abs_err: f64,
}

/// Conservative solver error bound for matrices of order `n`.
pub fn abs_err_bound(n: usize) -> f64 {
    if n <= 12 {
        1e-10
    } else {
        1e-9
    }
}

impl Spectrum {
    /// Sorts `values` descending. Negative zeros are normalized.
    pub fn from_values(mut values: Vec<f64>, abs_err: f64) -> Spectrum {
        for v in values.iter_mut() {
            if *v == 0.0 {
                *v = 0.0;
            }
        }
        values.sort_by(|a, b| b.total_cmp(a));
        Spectrum { values, abs_err }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn abs_err(&self) -> f64 {
        self.abs_err
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `lambda_i`, 1-based as in the usual notation.
    pub fn lambda(&self, i: usize) -> f64 {
        self.values[i - 1]
    }

    pub fn energy(&self) -> f64 {
        self.values.iter().map(|x| x.abs()).sum()
    }
}

/// All adjacency eigenvalues of `g`, descending. Order 0 gives an empty
/// spectrum.
pub fn eigenvalues(g: &Graph) -> Result<Spectrum> {
    let n = g.order();
    let values = symmetric_eigenvalues(g.adjacency_matrix(), n)?;
    Ok(Spectrum::from_values(values, abs_err_bound(n)))
}

/// Graph energy `sum |lambda_i|`.
pub fn energy(g: &Graph) -> Result<f64> {
    Ok(eigenvalues(g)?.energy())
}

/// Exact multiplicity of the integer `r` as a root of `p`.
pub fn integer_root_multiplicity(p: &CharPoly, r: i64) -> usize {
    p.integer_root_multiplicity(r)
}

/// A graph with its spectrum and a lazily computed characteristic polynomial.
#[derive(Debug)]
pub struct SpectralGraph {
    graph: Graph,
    spectrum: Spectrum,
    charpoly: OnceLock<Option<CharPoly>>,
}

impl SpectralGraph {
    pub fn new(graph: Graph) -> Result<SpectralGraph> {
        let spectrum = eigenvalues(&graph)?;
        Ok(SpectralGraph { graph, spectrum, charpoly: OnceLock::new() })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn spectrum(&self) -> &Spectrum {
        &self.spectrum
    }

    /// `None` above [`EXACT_ORDER_LIMIT`].
    pub fn charpoly(&self) -> Option<&CharPoly> {
        self.charpoly.get_or_init(|| char_poly(&self.graph).ok()).as_ref()
    }

    /// Number of eigenvalues `>= threshold`. Integer thresholds with an
    /// eigenvalue inside [`EXACT_BAND`] are resolved exactly.
    pub fn count_at_least(&self, threshold: f64) -> usize {
        let near = self.spectrum.values.iter().any(|v| (v - threshold).abs() <= EXACT_BAND);
        if near && threshold.fract() == 0.0 && threshold.abs() < i64::MAX as f64 {
            if let Some(p) = self.charpoly() {
                return p.roots_at_least(threshold as i64, 1);
            }
        }
        self.spectrum.values.iter().filter(|&&v| v >= threshold).count()
    }

    /// Number of eigenvalues strictly above `root`, a root of the irreducible
    /// `x^2 + b x + c`. Eigenvalues inside [`EXACT_BAND`] are matched against
    /// the multiplicity of that factor; the closest ones count as equal.
    pub fn count_above_quadratic_root(&self, root: f64, b: i64, c: i64) -> usize {
        let above = self.spectrum.values.iter().filter(|&&v| v > root + EXACT_BAND).count();
        let mut near: Vec<f64> =
            self.spectrum.values.iter().copied().filter(|v| (v - root).abs() <= EXACT_BAND).collect();
        if near.is_empty() {
            return above;
        }
        let Some(p) = self.charpoly() else {
            return above + near.iter().filter(|&&v| v > root).count();
        };
        near.sort_by(|x, y| (x - root).abs().total_cmp(&(y - root).abs()));
        let equal = p.quadratic_factor_multiplicity(b, c).min(near.len());
        above + near[equal..].iter().filter(|&&v| v > root).count()
    }
}

/// `n*`-style count of eigenvalues `>= threshold`, exact at integer
/// thresholds.
pub fn count_eigenvalues_at_least(g: &Graph, threshold: f64) -> Result<usize> {
    Ok(SpectralGraph::new(g.clone())?.count_at_least(threshold))
}

/// Families with known spectra.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpectrumFamily {
    Complete(usize),
    CompleteBipartite(usize, usize),
    CompleteMinusEdge(usize),
    Empty(usize),
}

impl SpectrumFamily {
    /// Builds the family member itself.
    pub fn graph(self) -> Result<Graph> {
        use crate::graph::*;
        match self {
            SpectrumFamily::Complete(n) => check(n).map(|_| complete(n)),
            SpectrumFamily::Empty(n) => check(n).map(|_| empty(n)),
            SpectrumFamily::CompleteBipartite(p, q) => complete_multipartite(&[p, q]),
            SpectrumFamily::CompleteMinusEdge(n) => complete_minus_edge(n),
        }
    }
}

fn check(n: usize) -> Result<()> {
    if n > crate::graph::MAX_ORDER {
        Err(Error::OrderTooLarge(n))
    } else {
        Ok(())
    }
}

/// The closed-form spectrum of a family member, descending.
pub fn closed_form_spectrum(family: SpectrumFamily) -> Result<Spectrum> {
    let values = match family {
        SpectrumFamily::Complete(n) => {
            check(n)?;
            if n == 0 {
                Vec::new()
            } else {
                let mut v = vec![(n - 1) as f64];
                v.extend(std::iter::repeat(-1.0).take(n - 1));
                v
            }
        }
        SpectrumFamily::Empty(n) => {
            check(n)?;
            vec![0.0; n]
        }
        SpectrumFamily::CompleteBipartite(p, q) => {
            if p == 0 || q == 0 {
                return Err(Error::InvalidParameter("bipartite parts must be positive".into()));
            }
            check(p + q)?;
            let r = ((p * q) as f64).sqrt();
            let mut v = vec![r];
            v.extend(std::iter::repeat(0.0).take(p + q - 2));
            v.push(-r);
            v
        }
        SpectrumFamily::CompleteMinusEdge(n) => {
            if n < 2 {
                return Err(Error::InvalidParameter(format!("K_n minus an edge needs n >= 2, got {n}")));
            }
            check(n)?;
            if n == 2 {
                vec![0.0, 0.0]
            } else {
                let nf = n as f64;
                let disc = (nf * nf + 2.0 * nf - 7.0).sqrt();
                let mut v = vec![(nf - 3.0 + disc) / 2.0, 0.0];
                v.extend(std::iter::repeat(-1.0).take(n - 3));
                v.push((nf - 3.0 - disc) / 2.0);
                v
            }
        }
    };
    let n = values.len();
    Ok(Spectrum::from_values(values, abs_err_bound(n)))
}
