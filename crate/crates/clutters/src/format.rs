//! File formats.
//!
//! Text clutter format: optional `#` comment lines, a header `n=<int>
//! d=<int|?>`, then one circuit per line as space-separated ascending
//! integers. The JSON alternative is an object with keys `n`, `d` (null for
//! unknown), and `circuits`. Serialization is canonical and byte-stable:
//! parsing a serialized clutter and serializing again reproduces the bytes.
//!
//! Certificate format: one (d-1)-set per line in elimination order, then a
//! `# verdict: chordal|not-chordal` trailer.
//!
//! Both formats describe clutters on a contiguous ground set `{1..n}`;
//! in-memory minors with gaps in their labels have no file form.

use serde::{Deserialize, Serialize};

use crate::clutter::Clutter;
use crate::elimination::ChordalityVerdict;
use crate::error::{Error, Result};
use crate::set::VertexSet;

#[derive(Serialize, Deserialize)]
struct ClutterFile {
    n: u32,
    d: Option<u32>,
    circuits: Vec<Vec<u32>>,
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Parse the text or JSON clutter format (auto-detected).
pub fn parse_clutter(input: &str) -> Result<Clutter> {
    if input.trim_start().starts_with('{') {
        return parse_clutter_json(input);
    }
    parse_clutter_text(input)
}

fn parse_clutter_json(input: &str) -> Result<Clutter> {
    let file: ClutterFile = serde_json::from_str(input)
        .map_err(|e| parse_err(e.line(), format!("invalid JSON clutter: {e}")))?;
    build(file.n, file.d, file.circuits, 0)
}

fn parse_clutter_text(input: &str) -> Result<Clutter> {
    let mut header: Option<(u32, Option<u32>, usize)> = None;
    let mut circuits: Vec<Vec<u32>> = Vec::new();
    for (idx, raw) in input.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if header.is_none() {
            let mut n = None;
            let mut d = None;
            for field in line.split_whitespace() {
                if let Some(value) = field.strip_prefix("n=") {
                    n = Some(value.parse::<u32>().map_err(|_| {
                        parse_err(lineno, format!("invalid ground-set size `{value}`"))
                    })?);
                } else if let Some(value) = field.strip_prefix("d=") {
                    if value != "?" {
                        d = Some(Some(value.parse::<u32>().map_err(|_| {
                            parse_err(lineno, format!("invalid degree `{value}`"))
                        })?));
                    } else {
                        d = Some(None);
                    }
                } else {
                    return Err(parse_err(
                        lineno,
                        format!("expected header `n=<int> d=<int|?>`, found `{field}`"),
                    ));
                }
            }
            let n = n.ok_or_else(|| parse_err(lineno, "header is missing n=<int>"))?;
            let d = d.ok_or_else(|| parse_err(lineno, "header is missing d=<int|?>"))?;
            header = Some((n, d, lineno));
            continue;
        }
        let members = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<u32>()
                    .map_err(|_| parse_err(lineno, format!("invalid vertex `{tok}`")))
            })
            .collect::<Result<Vec<u32>>>()?;
        if members.is_empty() {
            continue;
        }
        if members.windows(2).any(|w| w[0] >= w[1]) {
            return Err(parse_err(
                lineno,
                "circuit vertices must be strictly ascending",
            ));
        }
        circuits.push(members);
    }
    let (n, d, header_line) = header.ok_or_else(|| parse_err(1, "missing header line"))?;
    build(n, d, circuits, header_line)
}

fn build(n: u32, d: Option<u32>, circuits: Vec<Vec<u32>>, line: usize) -> Result<Clutter> {
    if n > crate::set::MAX_VERTEX {
        return Err(parse_err(line, format!("n={n} exceeds the limit of 64")));
    }
    for c in &circuits {
        if let Some(&v) = c.iter().find(|&&v| v == 0 || v > n) {
            return Err(parse_err(line, format!("vertex {v} outside 1..={n}")));
        }
    }
    let sets: Vec<VertexSet> = circuits.into_iter().map(VertexSet::from_members).collect();
    match d {
        Some(d) => Clutter::uniform(n, d, sets),
        None => Clutter::new(n, sets),
    }
}

/// Canonical text serialization. The ground set must be contiguous `{1..n}`.
pub fn serialize_clutter(c: &Clutter) -> Result<String> {
    let n = c.ground().max().unwrap_or(0).max(c.num_vertices());
    if c.ground() != VertexSet::full(n) {
        return Err(Error::Unrepresentable(format!(
            "ground set {:?} is not contiguous 1..n and has no file form",
            c.ground()
        )));
    }
    let degree = match c.degree() {
        Some(d) => d.to_string(),
        None => "?".to_string(),
    };
    let mut out = format!("n={n} d={degree}\n");
    for circuit in c.circuits() {
        out.push_str(&circuit.to_string());
        out.push('\n');
    }
    Ok(out)
}

/// Canonical JSON serialization, subject to the same contiguity rule.
pub fn serialize_clutter_json(c: &Clutter) -> Result<String> {
    let n = c.ground().max().unwrap_or(0).max(c.num_vertices());
    if c.ground() != VertexSet::full(n) {
        return Err(Error::Unrepresentable(
            "non-contiguous ground set has no file form".into(),
        ));
    }
    let file = ClutterFile {
        n,
        d: c.degree(),
        circuits: c.circuits().iter().map(|f| f.to_vec()).collect(),
    };
    Ok(serde_json::to_string_pretty(&file).expect("clutter file serializes"))
}

/// Render a certificate file: the elimination order (if chordal) and the
/// verdict trailer.
pub fn render_certificate(verdict: &ChordalityVerdict) -> String {
    let mut out = String::new();
    match verdict {
        ChordalityVerdict::Chordal(cert) => {
            for step in &cert.steps {
                out.push_str(&step.to_string());
                out.push('\n');
            }
            out.push_str("# verdict: chordal\n");
        }
        ChordalityVerdict::NotChordal(_) => {
            out.push_str("# verdict: not-chordal\n");
        }
    }
    out
}

/// Parse a certificate file back into the elimination order; the trailer is
/// returned verbatim when present.
pub fn parse_certificate(input: &str) -> Result<(Vec<VertexSet>, Option<String>)> {
    let mut steps = Vec::new();
    let mut verdict = None;
    for (idx, raw) in input.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("# verdict:") {
            verdict = Some(rest.trim().to_string());
            continue;
        }
        if line.starts_with('#') {
            continue;
        }
        let members = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<u32>()
                    .map_err(|_| parse_err(idx + 1, format!("invalid vertex `{tok}`")))
            })
            .collect::<Result<Vec<u32>>>()?;
        steps.push(VertexSet::from_members(members));
    }
    Ok((steps, verdict))
}
