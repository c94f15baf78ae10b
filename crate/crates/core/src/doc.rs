//! The line-oriented description language for orbit spaces, orbit data,
//! matrices and fixed-point configurations.
//!
//! All documents have the shape `kind { items }` with `#` starting a
//! comment that runs to the end of the line. The four kinds:
//!
//! ```text
//! orbitspace4 { sphere a=<int> | point b=<+1|-1>
//!               | arc b'=<int> seifert=(a1,b1)[,(a2,b2)...] b''=<int>
//!               | circle seifert=(a1,b1),... }
//! seifert3 { b=<int> eps=<o|n> g=<int> hbar=<int> t=<int> [seifert=(a,b),...] }
//! matrix { n=<int> rows=<n lines of n ints> }
//! config { fix=<s2|s2+pt|s2+s2 omega=<int>|s2+2pt (signs=<+-1,+-1>|arc=[b';(a,b),...;b''])> }
//! ```
//!
//! Parsing never panics on malformed input; every failure carries a line
//! and column. Structural validity (coprime Seifert pairs, nonempty
//! collections) is checked here, legality is left to the validators.

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::classify3::OrbitSurface;
use crate::classify4::{FixedPointConfig, TwoPointData};
use crate::intform::IntSymMatrix;
use crate::orbit::{
    IsolatedFixedPoint, SeifertInvariant, Sign, WeightedArc, WeightedCircle, WeightedOrbitSpace,
    WeightedSphere,
};

/// Largest accepted matrix size; guards allocation on hostile input.
const MAX_MATRIX_SIZE: usize = 512;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, col {col}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl ParseError {
    fn at(line: usize, col: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            col,
            message: message.into(),
        }
    }
}

/// Raw orbit data fields of a `seifert3` document; range rules are applied
/// when the classifier builds its input from them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Seifert3Doc {
    pub b: i64,
    pub surface: OrbitSurface,
    pub genus: u32,
    pub fixed_circles: u32,
    pub special_circles: u32,
    pub exceptional: Vec<SeifertInvariant>,
}

/// A parsed document of one of the four kinds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Document {
    OrbitSpace4(WeightedOrbitSpace),
    Seifert3(Seifert3Doc),
    Matrix(IntSymMatrix),
    Config(FixedPointConfig),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::OrbitSpace4(_) => "orbitspace4",
            Document::Seifert3(_) => "seifert3",
            Document::Matrix(_) => "matrix",
            Document::Config(_) => "config",
        }
    }
}

/// Source lines of the items of an `orbitspace4` document, for annotating
/// legality violations.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ItemSpans {
    pub spheres: Vec<usize>,
    pub points: Vec<usize>,
    pub arcs: Vec<usize>,
    pub circles: Vec<usize>,
}

/// A document together with its source map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedDocument {
    pub document: Document,
    pub spans: ItemSpans,
}

#[derive(Debug, Clone)]
struct Tok {
    text: String,
    line: usize,
    col: usize,
}

fn tokenize(text: &str) -> Vec<Tok> {
    let mut toks = Vec::new();
    for (li, raw_line) in text.lines().enumerate() {
        let line = li + 1;
        let content = match raw_line.find('#') {
            Some(idx) => &raw_line[..idx],
            None => raw_line,
        };
        let mut word = String::new();
        let mut word_col = 0usize;
        let flush = |word: &mut String, word_col: usize, toks: &mut Vec<Tok>| {
            if !word.is_empty() {
                toks.push(Tok {
                    text: std::mem::take(word),
                    line,
                    col: word_col,
                });
            }
        };
        for (ci, ch) in content.char_indices() {
            let col = ci + 1;
            if ch.is_whitespace() {
                flush(&mut word, word_col, &mut toks);
            } else if ch == '{' || ch == '}' || ch == '/' {
                flush(&mut word, word_col, &mut toks);
                toks.push(Tok {
                    text: ch.to_string(),
                    line,
                    col,
                });
            } else {
                if word.is_empty() {
                    word_col = col;
                }
                word.push(ch);
            }
        }
        flush(&mut word, word_col, &mut toks);
    }
    toks
}

struct Cursor {
    toks: Vec<Tok>,
    pos: usize,
}

impl Cursor {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, text: &str) -> Result<Tok, ParseError> {
        match self.next() {
            Some(t) if t.text == text => Ok(t),
            Some(t) => Err(ParseError::at(
                t.line,
                t.col,
                format!("expected `{text}`, found `{}`", t.text),
            )),
            None => Err(self.eof(format!("expected `{text}`"))),
        }
    }

    fn eof(&self, message: impl Into<String>) -> ParseError {
        let (line, col) = self
            .toks
            .last()
            .map(|t| (t.line, t.col + t.text.chars().count()))
            .unwrap_or((1, 1));
        ParseError::at(line, col, format!("{}, found end of input", message.into()))
    }
}

fn parse_i64(tok: &Tok, value: &str, what: &str) -> Result<i64, ParseError> {
    value.parse::<i64>().map_err(|_| {
        ParseError::at(
            tok.line,
            tok.col,
            format!("invalid {what}: `{value}` is not an integer"),
        )
    })
}

fn parse_u32(tok: &Tok, value: &str, what: &str) -> Result<u32, ParseError> {
    value.parse::<u32>().map_err(|_| {
        ParseError::at(
            tok.line,
            tok.col,
            format!("invalid {what}: `{value}` is not a nonnegative integer"),
        )
    })
}

fn parse_sign(tok: &Tok, value: &str, what: &str) -> Result<Sign, ParseError> {
    match value {
        "+1" | "1" => Ok(Sign::Plus),
        "-1" => Ok(Sign::Minus),
        _ => Err(ParseError::at(
            tok.line,
            tok.col,
            format!("invalid {what}: expected +1 or -1, found `{value}`"),
        )),
    }
}

fn split_key_value<'a>(tok: &'a Tok, key: &str) -> Result<&'a str, ParseError> {
    match tok.text.split_once('=') {
        Some((k, v)) if k == key => Ok(v),
        _ => Err(ParseError::at(
            tok.line,
            tok.col,
            format!("expected `{key}=<value>`, found `{}`", tok.text),
        )),
    }
}

/// Parse `(a1,b1),(a2,b2),...` into Seifert invariants.
fn parse_seifert_list(tok: &Tok, value: &str) -> Result<Vec<SeifertInvariant>, ParseError> {
    let mut out = Vec::new();
    let mut rest = value;
    if rest.is_empty() {
        return Err(ParseError::at(
            tok.line,
            tok.col,
            "expected at least one (alpha,beta) pair",
        ));
    }
    loop {
        let Some(stripped) = rest.strip_prefix('(') else {
            return Err(ParseError::at(
                tok.line,
                tok.col,
                format!("expected `(` in Seifert list near `{rest}`"),
            ));
        };
        let Some((inside, after)) = stripped.split_once(')') else {
            return Err(ParseError::at(
                tok.line,
                tok.col,
                "unterminated `(` in Seifert list",
            ));
        };
        let Some((a, b)) = inside.split_once(',') else {
            return Err(ParseError::at(
                tok.line,
                tok.col,
                format!("expected `alpha,beta` inside `({inside})`"),
            ));
        };
        let alpha = parse_i64(tok, a.trim(), "alpha")?;
        let beta = parse_i64(tok, b.trim(), "beta")?;
        let inv = SeifertInvariant::new(alpha, beta)
            .map_err(|e| ParseError::at(tok.line, tok.col, e.to_string()))?;
        out.push(inv);
        if after.is_empty() {
            return Ok(out);
        }
        let Some(next) = after.strip_prefix(',') else {
            return Err(ParseError::at(
                tok.line,
                tok.col,
                format!("expected `,` between pairs, found `{after}`"),
            ));
        };
        rest = next;
    }
}

/// Parse an inline arc literal `[b';(a1,b1),...;b'']`.
fn parse_arc_literal(tok: &Tok, value: &str) -> Result<WeightedArc, ParseError> {
    let inner = value
        .strip_prefix('[')
        .and_then(|v| v.strip_suffix(']'))
        .ok_or_else(|| {
            ParseError::at(
                tok.line,
                tok.col,
                format!("expected `[b';pairs;b'']`, found `{value}`"),
            )
        })?;
    let parts: Vec<&str> = inner.split(';').collect();
    if parts.len() != 3 {
        return Err(ParseError::at(
            tok.line,
            tok.col,
            "arc literal needs three `;`-separated fields",
        ));
    }
    let b_start = parse_i64(tok, parts[0].trim(), "b'")?;
    let segments = parse_seifert_list(tok, parts[1].trim())?;
    let b_end = parse_i64(tok, parts[2].trim(), "b''")?;
    WeightedArc::new(b_start, segments, b_end)
        .map_err(|e| ParseError::at(tok.line, tok.col, e.to_string()))
}

/// Parse a document from raw bytes. Input must be UTF-8.
pub fn parse(bytes: &[u8]) -> Result<ParsedDocument, ParseError> {
    let text = std::str::from_utf8(bytes).map_err(|e| {
        let prefix = &bytes[..e.valid_up_to()];
        let line = prefix.iter().filter(|&&b| b == b'\n').count() + 1;
        let col = prefix.iter().rev().take_while(|&&b| b != b'\n').count() + 1;
        ParseError::at(line, col, "input is not valid UTF-8")
    })?;
    parse_str(text)
}

/// Parse a document from text.
pub fn parse_str(text: &str) -> Result<ParsedDocument, ParseError> {
    let mut cur = Cursor {
        toks: tokenize(text),
        pos: 0,
    };
    let kind = cur
        .next()
        .ok_or_else(|| ParseError::at(1, 1, "empty input"))?;
    let parsed = match kind.text.as_str() {
        "orbitspace4" => parse_orbitspace4(&mut cur)?,
        "seifert3" => parse_seifert3(&mut cur)?,
        "matrix" => parse_matrix(&mut cur)?,
        "config" => parse_config(&mut cur)?,
        // A bare matrix file: the size on the first line, then that many
        // lines of space-separated integers.
        text if text.parse::<usize>().is_ok() => parse_bare_matrix(&kind, &mut cur)?,
        other => {
            return Err(ParseError::at(
                kind.line,
                kind.col,
                format!("unknown document kind `{other}` (expected orbitspace4, seifert3, matrix or config)"),
            ))
        }
    };
    if let Some(t) = cur.peek() {
        return Err(ParseError::at(
            t.line,
            t.col,
            format!("unexpected trailing `{}`", t.text),
        ));
    }
    Ok(parsed)
}

fn parse_bare_matrix(size_tok: &Tok, cur: &mut Cursor) -> Result<ParsedDocument, ParseError> {
    let n: usize = size_tok.text.parse().expect("checked by caller");
    if n > MAX_MATRIX_SIZE {
        return Err(ParseError::at(
            size_tok.line,
            size_tok.col,
            format!("matrix size {n} exceeds the limit {MAX_MATRIX_SIZE}"),
        ));
    }
    let mut entries: Vec<BigInt> = Vec::with_capacity(n * n);
    while entries.len() < n * n {
        let Some(tok) = cur.next() else {
            return Err(cur.eof(format!(
                "expected {} more matrix entries",
                n * n - entries.len()
            )));
        };
        let value: BigInt = tok.text.parse().map_err(|_| {
            ParseError::at(
                tok.line,
                tok.col,
                format!("invalid matrix entry `{}`", tok.text),
            )
        })?;
        entries.push(value);
    }
    let rows: Vec<Vec<BigInt>> = if n == 0 {
        Vec::new()
    } else {
        entries.chunks(n).map(|c| c.to_vec()).collect()
    };
    let matrix = IntSymMatrix::from_rows(rows)
        .map_err(|e| ParseError::at(size_tok.line, size_tok.col, e.to_string()))?;
    Ok(ParsedDocument {
        document: Document::Matrix(matrix),
        spans: ItemSpans::default(),
    })
}

fn parse_orbitspace4(cur: &mut Cursor) -> Result<ParsedDocument, ParseError> {
    let open = cur.expect("{")?;
    let mut spheres = Vec::new();
    let mut points = Vec::new();
    let mut arcs = Vec::new();
    let mut circles = Vec::new();
    let mut spans = ItemSpans::default();
    loop {
        let Some(tok) = cur.next() else {
            return Err(cur.eof("expected item or `}`"));
        };
        match tok.text.as_str() {
            "}" => break,
            "sphere" => {
                let v = cur.next().ok_or_else(|| cur.eof("expected `a=<int>`"))?;
                let a = parse_i64(&v, split_key_value(&v, "a")?, "sphere weight")?;
                spheres.push(WeightedSphere::new(a));
                spans.spheres.push(tok.line);
            }
            "point" => {
                let v = cur.next().ok_or_else(|| cur.eof("expected `b=<+1|-1>`"))?;
                let s = parse_sign(&v, split_key_value(&v, "b")?, "point weight")?;
                points.push(IsolatedFixedPoint::new(s));
                spans.points.push(tok.line);
            }
            "arc" => {
                let v1 = cur.next().ok_or_else(|| cur.eof("expected `b'=<int>`"))?;
                let b_start = parse_i64(&v1, split_key_value(&v1, "b'")?, "arc start weight")?;
                let v2 = cur
                    .next()
                    .ok_or_else(|| cur.eof("expected `seifert=(a,b),...`"))?;
                let segments = parse_seifert_list(&v2, split_key_value(&v2, "seifert")?)?;
                let v3 = cur.next().ok_or_else(|| cur.eof("expected `b''=<int>`"))?;
                let b_end = parse_i64(&v3, split_key_value(&v3, "b''")?, "arc end weight")?;
                let arc = WeightedArc::new(b_start, segments, b_end)
                    .map_err(|e| ParseError::at(tok.line, tok.col, e.to_string()))?;
                arcs.push(arc);
                spans.arcs.push(tok.line);
            }
            "circle" => {
                let v = cur
                    .next()
                    .ok_or_else(|| cur.eof("expected `seifert=(a,b),...`"))?;
                let segments = parse_seifert_list(&v, split_key_value(&v, "seifert")?)?;
                let circle = WeightedCircle::new(segments)
                    .map_err(|e| ParseError::at(tok.line, tok.col, e.to_string()))?;
                circles.push(circle);
                spans.circles.push(tok.line);
            }
            other => {
                return Err(ParseError::at(
                    tok.line,
                    tok.col,
                    format!("expected sphere, point, arc, circle or `}}`, found `{other}`"),
                ))
            }
        }
    }
    let space = WeightedOrbitSpace::new(spheres, points, arcs, circles)
        .map_err(|e| ParseError::at(open.line, open.col, e.to_string()))?;
    Ok(ParsedDocument {
        document: Document::OrbitSpace4(space),
        spans,
    })
}

fn parse_seifert3(cur: &mut Cursor) -> Result<ParsedDocument, ParseError> {
    cur.expect("{")?;
    let mut b = None;
    let mut eps = None;
    let mut g = None;
    let mut hbar = None;
    let mut t = None;
    let mut exceptional = Vec::new();
    loop {
        let Some(tok) = cur.next() else {
            return Err(cur.eof("expected field or `}`"));
        };
        if tok.text == "}" {
            break;
        }
        let Some((key, value)) = tok.text.split_once('=') else {
            return Err(ParseError::at(
                tok.line,
                tok.col,
                format!("expected `key=value`, found `{}`", tok.text),
            ));
        };
        match key {
            "b" => b = Some(parse_i64(&tok, value, "b")?),
            "eps" => {
                eps = Some(match value {
                    "o" => OrbitSurface::Orientable,
                    "n" => OrbitSurface::NonOrientable,
                    other => {
                        return Err(ParseError::at(
                            tok.line,
                            tok.col,
                            format!("invalid eps: expected o or n, found `{other}`"),
                        ))
                    }
                })
            }
            "g" => g = Some(parse_u32(&tok, value, "g")?),
            "hbar" => hbar = Some(parse_u32(&tok, value, "hbar")?),
            "t" => t = Some(parse_u32(&tok, value, "t")?),
            "seifert" => exceptional = parse_seifert_list(&tok, value)?,
            other => {
                return Err(ParseError::at(
                    tok.line,
                    tok.col,
                    format!("unknown seifert3 field `{other}`"),
                ))
            }
        }
    }
    let missing = [
        ("b", b.is_none()),
        ("eps", eps.is_none()),
        ("g", g.is_none()),
        ("hbar", hbar.is_none()),
        ("t", t.is_none()),
    ]
    .iter()
    .filter(|(_, m)| *m)
    .map(|(n, _)| *n)
    .collect::<Vec<_>>();
    if !missing.is_empty() {
        let (line, col) = cur.toks.last().map(|t| (t.line, t.col)).unwrap_or((1, 1));
        return Err(ParseError::at(
            line,
            col,
            format!("missing seifert3 field(s): {}", missing.join(", ")),
        ));
    }
    Ok(ParsedDocument {
        document: Document::Seifert3(Seifert3Doc {
            b: b.unwrap(),
            surface: eps.unwrap(),
            genus: g.unwrap(),
            fixed_circles: hbar.unwrap(),
            special_circles: t.unwrap(),
            exceptional,
        }),
        spans: ItemSpans::default(),
    })
}

fn parse_matrix(cur: &mut Cursor) -> Result<ParsedDocument, ParseError> {
    cur.expect("{")?;
    let v = cur.next().ok_or_else(|| cur.eof("expected `n=<int>`"))?;
    let n_value = split_key_value(&v, "n")?;
    let n = n_value.parse::<usize>().map_err(|_| {
        ParseError::at(
            v.line,
            v.col,
            format!("invalid n: `{n_value}` is not a nonnegative integer"),
        )
    })?;
    if n > MAX_MATRIX_SIZE {
        return Err(ParseError::at(
            v.line,
            v.col,
            format!("matrix size {n} exceeds the limit {MAX_MATRIX_SIZE}"),
        ));
    }
    let rows_tok = cur.next().ok_or_else(|| cur.eof("expected `rows=`"))?;
    let first = split_key_value(&rows_tok, "rows")?;
    let mut entries: Vec<BigInt> = Vec::with_capacity(n * n);
    let push_entry = |tok: &Tok, text: &str, entries: &mut Vec<BigInt>| -> Result<(), ParseError> {
        let value: BigInt = text.parse().map_err(|_| {
            ParseError::at(tok.line, tok.col, format!("invalid matrix entry `{text}`"))
        })?;
        entries.push(value);
        Ok(())
    };
    if !first.is_empty() {
        push_entry(&rows_tok, first, &mut entries)?;
    }
    loop {
        if entries.len() == n * n {
            break;
        }
        let Some(tok) = cur.next() else {
            return Err(cur.eof(format!(
                "expected {} more matrix entries",
                n * n - entries.len()
            )));
        };
        match tok.text.as_str() {
            "/" => continue,
            "}" => {
                return Err(ParseError::at(
                    tok.line,
                    tok.col,
                    format!("matrix needs {} entries, found {}", n * n, entries.len()),
                ))
            }
            text => push_entry(&tok, text, &mut entries)?,
        }
    }
    let close = loop {
        let Some(tok) = cur.next() else {
            return Err(cur.eof("expected `}`"));
        };
        match tok.text.as_str() {
            "/" => continue,
            "}" => break tok,
            other => {
                return Err(ParseError::at(
                    tok.line,
                    tok.col,
                    format!("unexpected `{other}` after matrix rows"),
                ))
            }
        }
    };
    let rows: Vec<Vec<BigInt>> = entries.chunks(n.max(1)).map(|c| c.to_vec()).collect();
    let rows = if n == 0 { Vec::new() } else { rows };
    let matrix = IntSymMatrix::from_rows(rows)
        .map_err(|e| ParseError::at(close.line, close.col, e.to_string()))?;
    Ok(ParsedDocument {
        document: Document::Matrix(matrix),
        spans: ItemSpans::default(),
    })
}

fn parse_config(cur: &mut Cursor) -> Result<ParsedDocument, ParseError> {
    cur.expect("{")?;
    let fix_tok = cur.next().ok_or_else(|| cur.eof("expected `fix=<...>`"))?;
    let fix = split_key_value(&fix_tok, "fix")?.to_string();
    let config = match fix.as_str() {
        "s2" => FixedPointConfig::SphereOnly,
        "s2+pt" => FixedPointConfig::SpherePlusPoint,
        "s2+s2" => {
            let v = cur
                .next()
                .ok_or_else(|| cur.eof("expected `omega=<int>`"))?;
            let omega = parse_i64(&v, split_key_value(&v, "omega")?, "omega")?;
            FixedPointConfig::TwoSpheres { weight: omega }
        }
        "s2+2pt" => {
            let v = cur
                .next()
                .ok_or_else(|| cur.eof("expected `signs=...` or `arc=...`"))?;
            match v.text.split_once('=') {
                Some(("signs", value)) => {
                    let Some((s1, s2)) = value.split_once(',') else {
                        return Err(ParseError::at(v.line, v.col, "expected `signs=<+-1,+-1>`"));
                    };
                    FixedPointConfig::SpherePlusTwoPoints(TwoPointData::Signs(
                        parse_sign(&v, s1, "first sign")?,
                        parse_sign(&v, s2, "second sign")?,
                    ))
                }
                Some(("arc", value)) => FixedPointConfig::SpherePlusTwoPoints(TwoPointData::Arc(
                    parse_arc_literal(&v, value)?,
                )),
                _ => {
                    return Err(ParseError::at(
                        v.line,
                        v.col,
                        format!("expected `signs=` or `arc=`, found `{}`", v.text),
                    ))
                }
            }
        }
        other => {
            return Err(ParseError::at(
                fix_tok.line,
                fix_tok.col,
                format!("invalid fix value `{other}` (expected s2, s2+pt, s2+s2 or s2+2pt)"),
            ))
        }
    };
    cur.expect("}")?;
    Ok(ParsedDocument {
        document: Document::Config(config),
        spans: ItemSpans::default(),
    })
}

fn seifert_list_text(segments: &[SeifertInvariant]) -> String {
    segments
        .iter()
        .map(|s| s.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Canonical text form of a document; `parse(serialize(d))` returns `d`.
pub fn serialize(document: &Document) -> String {
    match document {
        Document::OrbitSpace4(space) => {
            let mut out = String::from("orbitspace4 {\n");
            for s in space.spheres() {
                out.push_str(&format!("sphere a={}\n", s.euler));
            }
            for p in space.points() {
                out.push_str(&format!("point b={}\n", p.weight));
            }
            for a in space.arcs() {
                out.push_str(&format!(
                    "arc b'={} seifert={} b''={}\n",
                    a.b_start(),
                    seifert_list_text(a.segments()),
                    a.b_end()
                ));
            }
            for c in space.circles() {
                out.push_str(&format!(
                    "circle seifert={}\n",
                    seifert_list_text(c.segments())
                ));
            }
            out.push_str("}\n");
            out
        }
        Document::Seifert3(d) => {
            let eps = match d.surface {
                OrbitSurface::Orientable => "o",
                OrbitSurface::NonOrientable => "n",
            };
            let mut out = format!(
                "seifert3 {{ b={} eps={eps} g={} hbar={} t={}",
                d.b, d.genus, d.fixed_circles, d.special_circles
            );
            if !d.exceptional.is_empty() {
                out.push_str(&format!(" seifert={}", seifert_list_text(&d.exceptional)));
            }
            out.push_str(" }\n");
            out
        }
        Document::Matrix(m) => {
            let mut out = format!("matrix {{\nn={}\nrows=\n", m.size());
            for row in m.rows() {
                let line = row
                    .iter()
                    .map(|e| e.to_string())
                    .collect::<Vec<_>>()
                    .join(" ");
                out.push_str(&line);
                out.push('\n');
            }
            out.push_str("}\n");
            out
        }
        Document::Config(c) => {
            let body = match c {
                FixedPointConfig::SphereOnly => "fix=s2".to_string(),
                FixedPointConfig::SpherePlusPoint => "fix=s2+pt".to_string(),
                FixedPointConfig::TwoSpheres { weight } => format!("fix=s2+s2 omega={weight}"),
                FixedPointConfig::SpherePlusTwoPoints(TwoPointData::Signs(a, b)) => {
                    format!("fix=s2+2pt signs={a},{b}")
                }
                FixedPointConfig::SpherePlusTwoPoints(TwoPointData::Arc(arc)) => {
                    format!(
                        "fix=s2+2pt arc=[{};{};{}]",
                        arc.b_start(),
                        seifert_list_text(arc.segments()),
                        arc.b_end()
                    )
                }
            };
            format!("config {{ {body} }}\n")
        }
    }
}

impl fmt::Display for Document {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", serialize(self))
    }
}
