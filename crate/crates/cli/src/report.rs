//! The machine-readable analysis report and its three output formats.
//!
//! JSON is the primary format: field names and order are stable, absent
//! optional fields are omitted, and Galois-ring elements appear as
//! integer lists with the constant term first. CSV flattens the same
//! fields in declaration order, quoting coefficient lists; the spectrum
//! embed is JSON-only.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub p: u64,
    pub q: u64,
    pub case: String,
    pub g: u64,
    pub h: u64,
    pub e: u64,
    pub ell: u64,
    pub ell_p: u64,
    pub ell_q: u64,
    pub two_class_index: u8,
    pub modulus: Vec<u8>,
    pub lc_spectrum: u64,
    pub lc_closed_form: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lc_oracle: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub zero_branch: Option<u8>,
    pub rho: Vec<u8>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace_verified: Option<bool>,
    pub closed_form_matches_dft: bool,
    pub elapsed_ms: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub spectrum: Option<Vec<Vec<u8>>>,
}

impl AnalysisReport {
    /// True when every cross-check that was computed agrees.
    pub fn consistent(&self) -> bool {
        self.closed_form_matches_dft
            && self.lc_spectrum == self.lc_closed_form
            && self.lc_oracle.is_none_or(|lc| lc == self.lc_spectrum)
            && self.trace_verified.is_none_or(|ok| ok)
    }
}

/// One line of batch output: either a full report or an error record for
/// a pair that could not be analyzed.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BatchRecord {
    Ok(AnalysisReport),
    Err { p: u64, q: u64, error: String },
}

fn quote_list(values: &[u8]) -> String {
    let inner: Vec<String> = values.iter().map(|v| v.to_string()).collect();
    format!("\"{}\"", inner.join(","))
}

pub fn csv_header() -> &'static str {
    "p,q,case,g,h,e,ell,ell_p,ell_q,two_class_index,modulus,lc_spectrum,lc_closed_form,\
     lc_oracle,zero_branch,rho,trace_verified,closed_form_matches_dft,elapsed_ms,error"
}

pub fn csv_row(record: &BatchRecord) -> String {
    match record {
        BatchRecord::Ok(r) => format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},",
            r.p,
            r.q,
            r.case,
            r.g,
            r.h,
            r.e,
            r.ell,
            r.ell_p,
            r.ell_q,
            r.two_class_index,
            quote_list(&r.modulus),
            r.lc_spectrum,
            r.lc_closed_form,
            r.lc_oracle.map_or(String::new(), |v| v.to_string()),
            r.zero_branch.map_or(String::new(), |v| v.to_string()),
            quote_list(&r.rho),
            r.trace_verified.map_or(String::new(), |v| v.to_string()),
            r.closed_form_matches_dft,
            r.elapsed_ms,
        ),
        BatchRecord::Err { p, q, error } => {
            format!("{p},{q},,,,,,,,,,,,,,,,,,\"{}\"", error.replace('"', "'"))
        }
    }
}

pub fn text_summary(record: &BatchRecord) -> String {
    match record {
        BatchRecord::Ok(r) => {
            let mut line = format!(
                "p={} q={} {}: lc={} (closed form {}",
                r.p, r.q, r.case, r.lc_spectrum, r.lc_closed_form
            );
            if let Some(lc) = r.lc_oracle {
                line.push_str(&format!(", oracle {lc}"));
            }
            line.push(')');
            if let Some(k) = r.zero_branch {
                line.push_str(&format!(", vanishing class {k}"));
            }
            if let Some(ok) = r.trace_verified {
                line.push_str(if ok { ", trace ok" } else { ", trace MISMATCH" });
            }
            line.push_str(if r.closed_form_matches_dft {
                ", spectrum ok"
            } else {
                ", spectrum MISMATCH"
            });
            line.push_str(&format!(" [ring degree {}, {} ms]", r.ell, r.elapsed_ms));
            line
        }
        BatchRecord::Err { p, q, error } => format!("p={p} q={q}: error: {error}"),
    }
}
