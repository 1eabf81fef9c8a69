//! File formats: the `.hgr` hypergraph text format and the JSON report.
//!
//! The `.hgr` format is line-oriented: comment lines start with `#`, the
//! first data line is the header `k n m`, and each of the next m data lines
//! lists the k distinct 1-based vertex indices of one edge. Serialization is
//! canonical (edges sorted, single spaces, trailing newline), so
//! parse ∘ serialize is the identity byte-for-byte.
//!
//! JSON reports use a fixed key order and render every real with 12
//! significant digits, making the output deterministic down to the byte for
//! a given input and tolerance configuration.

use thiserror::Error;

use crate::certify::{Analysis, BoundCheck, CertificateReport, CorpusSummary};
use crate::hypergraph::{Hypergraph, HypergraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("header declares {declared} edges but {found} edge lines follow")]
    HeaderMismatch { declared: usize, found: usize },
    #[error(transparent)]
    Invalid(#[from] HypergraphError),
}

/// Parses the `.hgr` text format. Vertex indices are 1-based in the file and
/// shifted to 0-based internally.
pub fn parse_hgr(text: &str) -> Result<Hypergraph, ParseError> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut edges: Vec<Vec<usize>> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Result<Vec<usize>, _> = line.split_whitespace().map(str::parse).collect();
        let fields = fields.map_err(|e| ParseError::Syntax {
            line: line_no,
            message: format!("expected decimal vertex indices: {e}"),
        })?;
        match header {
            None => {
                if fields.len() != 3 {
                    return Err(ParseError::Syntax {
                        line: line_no,
                        message: format!("header must be `k n m`, found {} fields", fields.len()),
                    });
                }
                header = Some((fields[0], fields[1], fields[2]));
            }
            Some((k, _, _)) => {
                if fields.len() != k {
                    return Err(ParseError::Syntax {
                        line: line_no,
                        message: format!("edge has {} vertices, expected k={k}", fields.len()),
                    });
                }
                let mut edge = Vec::with_capacity(k);
                for v in fields {
                    if v == 0 {
                        return Err(ParseError::Syntax {
                            line: line_no,
                            message: "vertex indices are 1-based; found 0".to_string(),
                        });
                    }
                    edge.push(v - 1);
                }
                edges.push(edge);
            }
        }
    }
    let (k, n, m) = header.ok_or(ParseError::Syntax {
        line: text.lines().count().max(1),
        message: "missing `k n m` header".to_string(),
    })?;
    if edges.len() != m {
        return Err(ParseError::HeaderMismatch { declared: m, found: edges.len() });
    }
    Ok(Hypergraph::new(n, k, edges)?)
}

/// Canonical `.hgr` serialization: header, then the lexicographically sorted
/// edges with 1-based indices, single spaces, one trailing newline.
pub fn serialize_hgr(h: &Hypergraph) -> String {
    let mut out = format!("{} {} {}\n", h.k(), h.n(), h.m());
    for edge in h.edges() {
        let mut first = true;
        for &v in edge {
            if !first {
                out.push(' ');
            }
            out.push_str(&(v + 1).to_string());
            first = false;
        }
        out.push('\n');
    }
    out
}

/// Renders a real with 12 significant digits, trimming trailing zeros but
/// keeping one fractional digit. Falls back to scientific notation outside
/// [1e−4, 1e16). Deterministic for every input.
pub fn format_real(value: f64) -> String {
    debug_assert!(value.is_finite(), "reports never contain non-finite reals");
    if value == 0.0 {
        return "0.0".to_string();
    }
    let formatted = format!("{:.11e}", value);
    let (mantissa, exponent) = formatted
        .split_once('e')
        .expect("{:e} always produces an exponent");
    let exponent: i32 = exponent.parse().expect("valid exponent");
    let negative = mantissa.starts_with('-');
    let digits: String = mantissa.chars().filter(|c| c.is_ascii_digit()).collect();
    debug_assert_eq!(digits.len(), 12);
    let body = if (-4..16).contains(&exponent) {
        if exponent >= 0 {
            let point = exponent as usize + 1;
            let (int_part, frac_part) = if point <= digits.len() {
                (digits[..point].to_string(), digits[point..].to_string())
            } else {
                (format!("{digits}{}", "0".repeat(point - digits.len())), String::new())
            };
            let frac_part = frac_part.trim_end_matches('0');
            if frac_part.is_empty() {
                format!("{int_part}.0")
            } else {
                format!("{int_part}.{frac_part}")
            }
        } else {
            let zeros = "0".repeat((-exponent - 1) as usize);
            let frac = format!("{zeros}{digits}");
            let frac = frac.trim_end_matches('0');
            format!("0.{frac}")
        }
    } else {
        let rest = digits[1..].trim_end_matches('0');
        if rest.is_empty() {
            format!("{}.0e{exponent}", &digits[..1])
        } else {
            format!("{}.{rest}e{exponent}", &digits[..1])
        }
    };
    if negative {
        format!("-{body}")
    } else {
        body
    }
}

// ---------------------------------------------------------------------------
// JSON emission (hand-rolled: key order and digit rendering are part of the
// output contract, so nothing here may depend on hash iteration order)
// ---------------------------------------------------------------------------

struct JsonWriter {
    out: String,
    needs_comma: Vec<bool>,
}

impl JsonWriter {
    fn new() -> Self {
        JsonWriter { out: String::new(), needs_comma: Vec::new() }
    }

    fn begin(&mut self, bracket: char) {
        self.separate();
        self.out.push(bracket);
        self.needs_comma.push(false);
    }

    fn end(&mut self, bracket: char) {
        self.needs_comma.pop();
        self.out.push(bracket);
        if let Some(last) = self.needs_comma.last_mut() {
            *last = true;
        }
    }

    fn separate(&mut self) {
        if let Some(last) = self.needs_comma.last_mut() {
            if *last {
                self.out.push(',');
            }
        }
    }

    fn key(&mut self, name: &str) {
        self.separate();
        self.out.push('"');
        self.out.push_str(name);
        self.out.push_str("\":");
        if let Some(last) = self.needs_comma.last_mut() {
            *last = false;
        }
    }

    fn raw(&mut self, value: &str) {
        self.separate();
        self.out.push_str(value);
        if let Some(last) = self.needs_comma.last_mut() {
            *last = true;
        }
    }

    fn string(&mut self, value: &str) {
        let mut escaped = String::with_capacity(value.len() + 2);
        escaped.push('"');
        for ch in value.chars() {
            match ch {
                '"' => escaped.push_str("\\\""),
                '\\' => escaped.push_str("\\\\"),
                '\n' => escaped.push_str("\\n"),
                c if (c as u32) < 0x20 => escaped.push_str(&format!("\\u{:04x}", c as u32)),
                c => escaped.push(c),
            }
        }
        escaped.push('"');
        self.raw(&escaped);
    }

    fn real(&mut self, value: f64) {
        self.raw(&format_real(value));
    }

    fn opt_real(&mut self, value: Option<f64>) {
        match value {
            Some(v) => self.real(v),
            None => self.raw("null"),
        }
    }

    fn bool(&mut self, value: bool) {
        self.raw(if value { "true" } else { "false" });
    }

    fn usize(&mut self, value: usize) {
        self.raw(&value.to_string());
    }
}

fn write_analysis_fields(w: &mut JsonWriter, a: &Analysis) {
    w.key("n");
    w.usize(a.hypergraph.n());
    w.key("k");
    w.usize(a.hypergraph.k());
    w.key("m");
    w.usize(a.hypergraph.m());
    w.key("connected");
    w.bool(a.connectivity.connected);
    w.key("diameter");
    match a.connectivity.diameter {
        Some(d) => w.usize(d as usize),
        None => w.raw("null"),
    }
    w.key("rho");
    w.real(a.spectral.rho);
    w.key("lambda2");
    w.opt_real(a.spectral.lambda2);
    w.key("residual");
    w.real(a.spectral.residual);
    w.key("x");
    w.begin('[');
    for &xi in &a.spectral.x {
        w.real(xi);
    }
    w.end(']');
    w.key("degrees");
    w.begin('[');
    for &d in &a.profile.degrees {
        w.usize(d);
    }
    w.end(']');
    w.key("zagreb");
    w.raw(&a.profile.zagreb.to_string());
    w.key("gamma");
    w.opt_real(a.vertex_extremes.as_ref().map(|v| v.gamma));
    w.key("Gamma");
    w.opt_real(a.edge_extremes.as_ref().map(|e| e.big_gamma));
    w.key("x_min");
    w.opt_real(a.vertex_extremes.as_ref().map(|v| v.x_min));
    w.key("x_max");
    w.opt_real(a.vertex_extremes.as_ref().map(|v| v.x_max));
    w.key("xe_min");
    w.opt_real(a.edge_extremes.as_ref().map(|e| e.xe_min));
    w.key("xe_max");
    w.opt_real(a.edge_extremes.as_ref().map(|e| e.xe_max));
    w.key("is_regular");
    w.bool(a.regularity.is_regular);
    w.key("is_edge_regular");
    w.bool(a.regularity.is_edge_regular);
    w.key("constant_D");
    match a.regularity.constant_degree_sum {
        Some(d) => w.raw(&d.to_string()),
        None => w.raw("null"),
    }
}

fn write_bound(w: &mut JsonWriter, b: &BoundCheck) {
    w.begin('{');
    w.key("id");
    w.string(b.id);
    w.key("lhs");
    w.opt_real(b.lhs);
    w.key("rhs");
    w.opt_real(b.rhs);
    w.key("relation");
    w.string(&b.relation.to_string());
    w.key("slack");
    w.opt_real(b.slack);
    w.key("holds");
    w.bool(b.holds);
    w.key("applicable");
    w.bool(b.applicable);
    w.key("reason");
    match b.reason {
        Some(r) => w.string(r),
        None => w.raw("null"),
    }
    w.key("equality_note");
    match &b.equality_note {
        Some(note) => {
            w.begin('{');
            w.key("condition");
            w.string(note.condition);
            w.key("condition_met");
            match note.condition_met {
                Some(v) => w.bool(v),
                None => w.raw("null"),
            }
            w.end('}');
        }
        None => w.raw("null"),
    }
    w.end('}');
}

/// JSON body for `analyze`: the summary fields without the bound list.
pub fn analysis_json(analysis: &Analysis) -> String {
    let mut w = JsonWriter::new();
    w.begin('{');
    write_analysis_fields(&mut w, analysis);
    w.end('}');
    w.out.push('\n');
    w.out
}

/// JSON body for `certify`: the summary fields plus one record per bound.
pub fn report_json(report: &CertificateReport) -> String {
    let mut w = JsonWriter::new();
    w.begin('{');
    write_analysis_fields(&mut w, &report.analysis);
    w.key("bounds");
    w.begin('[');
    for check in &report.checks {
        write_bound(&mut w, check);
    }
    w.end(']');
    w.end('}');
    w.out.push('\n');
    w.out
}

/// JSON body for a corpus run: counts, worst slacks, and the equality
/// inventory per bound id.
pub fn corpus_json(summary: &CorpusSummary) -> String {
    let mut w = JsonWriter::new();
    w.begin('{');
    w.key("count");
    w.usize(summary.total);
    w.key("violations");
    w.usize(summary.violations);
    w.key("ids");
    w.begin('[');
    for s in &summary.per_id {
        w.begin('{');
        w.key("id");
        w.string(s.id);
        w.key("applicable");
        w.usize(s.applicable);
        w.key("violations");
        w.usize(s.violations);
        w.key("worst_slack");
        w.opt_real(s.worst_slack);
        w.key("equalities");
        w.usize(s.equalities);
        w.key("equality_condition_met");
        w.usize(s.equality_condition_met);
        w.end('}');
    }
    w.end(']');
    w.end('}');
    w.out.push('\n');
    w.out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formats_reals_with_twelve_significant_digits() {
        assert_eq!(format_real(0.0), "0.0");
        assert_eq!(format_real(-0.0), "0.0");
        assert_eq!(format_real(4.0), "4.0");
        assert_eq!(format_real(-4.0), "-4.0");
        assert_eq!(format_real(9.0), "9.0");
        assert_eq!(format_real(1.0 / 6f64.sqrt()), "0.408248290464");
        assert_eq!(format_real(5.732050807568877), "5.73205080757");
        assert_eq!(format_real(1.8), "1.8");
        assert_eq!(format_real(0.00012345), "0.00012345");
        assert_eq!(format_real(1.5e-17), "1.5e-17");
        assert_eq!(format_real(2e20), "2.0e20");
        assert_eq!(format_real(123456789.0), "123456789.0");
    }

    #[test]
    fn format_real_is_positional_at_the_range_edges() {
        assert_eq!(format_real(1e-4), "0.0001");
        assert_eq!(format_real(1e15), "1000000000000000.0");
        assert_eq!(format_real(1e-5), "1.0e-5");
    }
}
