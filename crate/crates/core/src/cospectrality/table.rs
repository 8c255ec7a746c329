use super::{cs_closed_form, Catalogs, CsFamily, CLAIM_TOLERANCE};
use crate::distance::Norm;
use crate::error::{Error, Result};
use crate::graph::{canonical_form, describe, graph6_decode, CanonicalForm};
use serde::Serialize;
use std::io::Write;

/// One family instance under one norm.
#[derive(Debug, Clone, PartialEq)]
pub struct TableRow {
    pub family: CsFamily,
    pub norm: Norm,
    pub cs_bruteforce: f64,
    pub cs_closed_form: f64,
    /// Brute-force minimizers, ascending by canonical form.
    pub minimizers: Vec<CanonicalForm>,
    pub closed_form_minimizers: Vec<CanonicalForm>,
}

impl TableRow {
    /// Values within `1e-8` and identical minimizer sets.
    pub fn agrees(&self) -> bool {
        (self.cs_bruteforce - self.cs_closed_form).abs() <= CLAIM_TOLERANCE
            && self.minimizers == self.closed_form_minimizers
    }

    /// Recognized family labels, or graph6 for anything else, joined by `;`.
    pub fn minimizer_labels(&self) -> String {
        self.minimizers
            .iter()
            .map(|f| {
                graph6_decode(f.as_bytes())
                    .ok()
                    .and_then(|g| describe(&g))
                    .unwrap_or_else(|| f.as_str().to_owned())
            })
            .collect::<Vec<_>>()
            .join(";")
    }
}

/// Every family instance of order `2..=max_n` under both norms, grouped by
/// family, then by parameter, then `l1` before `l2sq`.
pub fn family_table(max_n: usize, catalogs: &Catalogs) -> Result<Vec<TableRow>> {
    if max_n < 2 {
        return Err(Error::InvalidParameter(format!("the table needs a max order of at least 2, got {max_n}")));
    }
    let mut rows = Vec::new();
    for family in CsFamily::all_up_to(max_n) {
        let catalog = catalogs.get(family.order())?;
        let g = family.graph()?;
        for norm in [Norm::L1, Norm::L2Sq] {
            let brute = catalog.cospectrality(&g, norm)?;
            let closed = cs_closed_form(family, norm)?;
            let mut closed_forms: Vec<CanonicalForm> = closed.minimizers.iter().map(canonical_form).collect();
            closed_forms.sort();
            rows.push(TableRow {
                family,
                norm,
                cs_bruteforce: brute.value,
                cs_closed_form: closed.value,
                minimizers: brute.minimizers,
                closed_form_minimizers: closed_forms,
            });
        }
    }
    Ok(rows)
}

#[derive(Serialize)]
struct CsvRecord {
    graph: String,
    norm: &'static str,
    cs_bruteforce: String,
    cs_closed_form: String,
    minimizers: String,
}

#[derive(Serialize)]
struct JsonRecord {
    graph: String,
    norm: &'static str,
    cs_bruteforce: f64,
    cs_closed_form: f64,
    minimizers: Vec<String>,
}

/// CSV with header `graph,norm,cs_bruteforce,cs_closed_form,minimizers` and
/// values at 12 decimals.
pub fn write_table_csv<W: Write>(rows: &[TableRow], out: W) -> Result<()> {
    let mut writer = csv::Writer::from_writer(out);
    for row in rows {
        writer
            .serialize(CsvRecord {
                graph: row.family.to_string(),
                norm: row.norm.name(),
                cs_bruteforce: format!("{:.12}", row.cs_bruteforce),
                cs_closed_form: format!("{:.12}", row.cs_closed_form),
                minimizers: row.minimizer_labels(),
            })
            .map_err(std::io::Error::from)?;
    }
    writer.flush()?;
    Ok(())
}

/// JSON array of row objects with the CSV keys.
pub fn write_table_json<W: Write>(rows: &[TableRow], mut out: W) -> Result<()> {
    let records: Vec<JsonRecord> = rows
        .iter()
        .map(|row| JsonRecord {
            graph: row.family.to_string(),
            norm: row.norm.name(),
            cs_bruteforce: row.cs_bruteforce,
            cs_closed_form: row.cs_closed_form,
            minimizers: row.minimizer_labels().split(';').map(str::to_owned).collect(),
        })
        .collect();
    serde_json::to_writer_pretty(&mut out, &records).map_err(std::io::Error::from)?;
    out.write_all(b"\n")?;
    Ok(())
}
