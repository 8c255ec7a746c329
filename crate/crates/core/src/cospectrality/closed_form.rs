use crate::distance::Norm;
use crate::error::{Error, Result};
use crate::graph::*;
use std::fmt;

/// Families whose cospectrality is known in closed form. The parameter is the
/// order, except for the bipartite families where it is the smaller part.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CsFamily {
    /// `nK_1`.
    Empty(usize),
    /// `K_2 + (n-2)K_1`.
    SingleEdge(usize),
    /// `K_n`.
    Complete(usize),
    /// `K_{n,n}`.
    BalancedBipartite(usize),
    /// `K_{n,n+1}`.
    NearBalancedBipartite(usize),
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClosedFormCs {
    pub value: f64,
    /// Distinct minimizing classes, ascending by canonical form.
    pub minimizers: Vec<Graph>,
}

impl CsFamily {
    pub fn parameter(self) -> usize {
        match self {
            CsFamily::Empty(n)
            | CsFamily::SingleEdge(n)
            | CsFamily::Complete(n)
            | CsFamily::BalancedBipartite(n)
            | CsFamily::NearBalancedBipartite(n) => n,
        }
    }

    pub fn order(self) -> usize {
        match self {
            CsFamily::BalancedBipartite(n) => 2 * n,
            CsFamily::NearBalancedBipartite(n) => 2 * n + 1,
            other => other.parameter(),
        }
    }

    /// Smallest parameter for which the closed form applies.
    pub fn min_parameter(self) -> usize {
        2
    }

    /// The same family at another parameter.
    pub fn with_parameter(self, n: usize) -> CsFamily {
        match self {
            CsFamily::Empty(_) => CsFamily::Empty(n),
            CsFamily::SingleEdge(_) => CsFamily::SingleEdge(n),
            CsFamily::Complete(_) => CsFamily::Complete(n),
            CsFamily::BalancedBipartite(_) => CsFamily::BalancedBipartite(n),
            CsFamily::NearBalancedBipartite(_) => CsFamily::NearBalancedBipartite(n),
        }
    }

    /// Every family member with order in `2..=max_order`, grouped by family.
    pub fn all_up_to(max_order: usize) -> Vec<CsFamily> {
        let kinds = [
            CsFamily::Empty(0),
            CsFamily::SingleEdge(0),
            CsFamily::Complete(0),
            CsFamily::BalancedBipartite(0),
            CsFamily::NearBalancedBipartite(0),
        ];
        kinds
            .into_iter()
            .flat_map(|kind| {
                (kind.min_parameter()..)
                    .map(move |n| kind.with_parameter(n))
                    .take_while(move |f| f.order() <= max_order)
            })
            .collect()
    }

    pub fn graph(self) -> Result<Graph> {
        self.validate()?;
        match self {
            CsFamily::Empty(n) => Ok(empty(n)),
            CsFamily::SingleEdge(n) => add_isolated(&complete(2), n - 2),
            CsFamily::Complete(n) => Ok(complete(n)),
            CsFamily::BalancedBipartite(n) => complete_multipartite(&[n, n]),
            CsFamily::NearBalancedBipartite(n) => complete_multipartite(&[n, n + 1]),
        }
    }

    fn validate(self) -> Result<()> {
        if self.parameter() < self.min_parameter() {
            return Err(Error::InvalidParameter(format!("{self} needs a parameter of at least 2")));
        }
        if self.order() > MAX_ORDER {
            return Err(Error::OrderTooLarge(self.order()));
        }
        Ok(())
    }
}

impl fmt::Display for CsFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            CsFamily::Empty(n) => write!(f, "E{n}"),
            CsFamily::SingleEdge(2) => write!(f, "K2"),
            CsFamily::SingleEdge(3) => write!(f, "K2+K1"),
            CsFamily::SingleEdge(n) => write!(f, "K2+{}*K1", n.saturating_sub(2)),
            CsFamily::Complete(n) => write!(f, "K{n}"),
            CsFamily::BalancedBipartite(n) => write!(f, "K{n},{n}"),
            CsFamily::NearBalancedBipartite(n) => write!(f, "K{n},{}", n + 1),
        }
    }
}

fn dedup_by_form(graphs: Vec<Graph>) -> Vec<Graph> {
    let mut keyed: Vec<(CanonicalForm, Graph)> = graphs.into_iter().map(|g| (canonical_form(&g), g)).collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    keyed.dedup_by(|a, b| a.0 == b.0);
    keyed.into_iter().map(|(_, g)| g).collect()
}

/// Closed-form cospectrality and minimizers of a family member.
pub fn cs_closed_form(family: CsFamily, norm: Norm) -> Result<ClosedFormCs> {
    family.validate()?;
    let sq = |x: f64| match norm {
        Norm::L1 => x,
        Norm::L2Sq => x * x,
    };
    let (value, minimizers) = match family {
        CsFamily::Empty(n) => (2.0, vec![add_isolated(&complete(2), n - 2)?]),
        CsFamily::SingleEdge(2) => (2.0, vec![empty(2)]),
        CsFamily::SingleEdge(n) => {
            let r = std::f64::consts::SQRT_2 - 1.0;
            (2.0 * sq(r), vec![add_isolated(&path(3), n - 3)?])
        }
        CsFamily::Complete(n) => match norm {
            Norm::L1 => (2.0, vec![add_isolated(&complete(n - 1), 1)?, complete_minus_edge(n)?]),
            Norm::L2Sq => {
                let nf = n as f64;
                let value = nf * nf + nf - nf * (nf * nf + 2.0 * nf - 7.0).sqrt() - 2.0;
                (value, vec![complete_minus_edge(n)?])
            }
        },
        CsFamily::BalancedBipartite(n) => {
            let nf = n as f64;
            let gap = nf - (nf * nf - 1.0).sqrt();
            (2.0 * sq(gap), vec![complete_multipartite(&[n - 1, n + 1])?])
        }
        CsFamily::NearBalancedBipartite(n) => {
            let p = (n * n + n) as f64;
            let gap = p.sqrt() - (p - 2.0).sqrt();
            (2.0 * sq(gap), vec![complete_multipartite(&[n - 1, n + 2])?])
        }
    };
    Ok(ClosedFormCs { value, minimizers: dedup_by_form(minimizers) })
}
