//! Text and JSON encodings of hypergraphs.
//!
//! Text layout:
//!
//! ```text
//! r n m [multi]
//! v v v
//! ...
//! ```
//!
//! Blank lines and lines starting with `#` are skipped.

use serde::{Deserialize, Serialize};

use super::{Hypergraph, Options};
use crate::error::{Error, Result};

#[derive(Serialize, Deserialize)]
struct HypergraphJson {
    r: usize,
    n: usize,
    edges: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    multi: bool,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    isolated: bool,
}

pub fn to_text(h: &Hypergraph) -> String {
    let mut out = format!("{} {} {}", h.rank(), h.vertex_count(), h.edge_count());
    if h.allow_multi() {
        out.push_str(" multi");
    }
    if h.allow_isolated() {
        out.push_str(" isolated");
    }
    out.push('\n');
    for e in h.edges() {
        let line: Vec<String> = e.iter().map(usize::to_string).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

fn parse_usize(tok: &str, line: usize) -> Result<usize> {
    tok.parse().map_err(|_| Error::Parse(format!("line {line}: expected an integer, found {tok:?}")))
}

pub fn from_text(text: &str) -> Result<Hypergraph> {
    let mut lines =
        text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or_else(|| Error::Parse("missing header line".into()))?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() < 3 {
        return Err(Error::Parse(format!("line {hline}: header must be `r n m`")));
    }
    let r = parse_usize(toks[0], hline)?;
    let n = parse_usize(toks[1], hline)?;
    let m = parse_usize(toks[2], hline)?;
    let mut options = Options::default();
    for flag in &toks[3..] {
        match *flag {
            "multi" => options.allow_multi = true,
            "isolated" => options.allow_isolated = true,
            other => return Err(Error::Parse(format!("line {hline}: unknown flag {other:?}"))),
        }
    }
    let mut edges = Vec::with_capacity(m);
    for (ln, l) in lines {
        let e = l.split_whitespace().map(|t| parse_usize(t, ln)).collect::<Result<Vec<_>>>()?;
        edges.push(e);
    }
    if edges.len() != m {
        return Err(Error::Parse(format!("header declares {m} edges, found {}", edges.len())));
    }
    Hypergraph::with_options(r, n, edges, options)
}

fn json_repr(h: &Hypergraph) -> HypergraphJson {
    HypergraphJson {
        r: h.rank(),
        n: h.vertex_count(),
        edges: h.edges().to_vec(),
        multi: h.allow_multi(),
        isolated: h.allow_isolated(),
    }
}

pub fn to_json(h: &Hypergraph) -> String {
    serde_json::to_string(&json_repr(h)).expect("serialisable")
}

pub fn to_json_value(h: &Hypergraph) -> serde_json::Value {
    serde_json::to_value(json_repr(h)).expect("serialisable")
}

pub fn from_json(text: &str) -> Result<Hypergraph> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    from_json_value(&value)
}

pub fn from_json_value(value: &serde_json::Value) -> Result<Hypergraph> {
    let j: HypergraphJson = serde_json::from_value(value.clone()).map_err(|e| Error::Parse(e.to_string()))?;
    let options = Options { allow_multi: j.multi, allow_isolated: j.isolated };
    Hypergraph::with_options(j.r, j.n, j.edges, options)
}

/// Parses JSON when the first non-blank character is `{`, text otherwise.
pub fn parse_auto(text: &str) -> Result<Hypergraph> {
    if text.trim_start().starts_with('{') {
        from_json(text)
    } else {
        from_text(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        let src = "3 4 2 multi\n0 1 2\n0 1 3\n";
        let h = from_text(src).unwrap();
        assert_eq!(to_text(&h), src);
        assert_eq!(from_text(&to_text(&h)).unwrap(), h);
    }

    #[test]
    fn json_round_trip() {
        let src = r#"{"r":3,"n":5,"edges":[[0,1,2],[2,3,4]]}"#;
        let h = from_json(src).unwrap();
        assert_eq!(to_json(&h), src);
        let m = Hypergraph::new_multi(2, 2, vec![vec![0, 1], vec![0, 1]]).unwrap();
        assert_eq!(to_json(&m), r#"{"r":2,"n":2,"edges":[[0,1],[0,1]],"multi":true}"#);
        assert_eq!(from_json(&to_json(&m)).unwrap(), m);
    }

    #[test]
    fn comments_and_errors() {
        let h = from_text("# path\n2 3 2\n0 1\n\n1 2\n").unwrap();
        assert_eq!(h.edge_count(), 2);
        assert!(matches!(from_text("2 3 3\n0 1\n1 2\n"), Err(Error::Parse(_))));
        assert!(matches!(from_text("2 x 1\n0 1\n"), Err(Error::Parse(_))));
        assert!(matches!(from_json("{\"r\":2}"), Err(Error::Parse(_))));
        assert!(parse_auto(" {\"r\":2,\"n\":2,\"edges\":[[0,1]]}").is_ok());
    }
}
