//! Edge-list ingestion and CSV series output.
//!
//! Two input encodings are understood: whitespace-separated pairs
//! (`1 2`) and `|`-separated relationship triples (`1|2|-1`). Both treat a
//! line beginning with `#` as a comment. Readers stream one line at a time.

use std::io::{BufRead, Write};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeRecord {
    pub left: String,
    pub right: String,
}

impl EdgeRecord {
    pub fn new(left: impl Into<String>, right: impl Into<String>) -> Self {
        Self {
            left: left.into(),
            right: right.into(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputFormat {
    /// Two whitespace-separated tokens per line.
    Pairs,
    /// `src|dst|rel` per line; the relationship field is ignored.
    AsRel,
}

impl InputFormat {
    /// Guess the format from a file name: anything containing `.as-rel`
    /// is read as relationship triples, everything else as pairs.
    pub fn from_path(path: &std::path::Path) -> Self {
        let name = path.file_name().map(|n| n.to_string_lossy()).unwrap_or_default();
        if name.contains(".as-rel") {
            InputFormat::AsRel
        } else {
            InputFormat::Pairs
        }
    }
}

impl FromStr for InputFormat {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "pairs" | "txt" => Ok(InputFormat::Pairs),
            "as-rel" => Ok(InputFormat::AsRel),
            other => Err(format!("unknown input format `{other}` (expected pairs or as-rel)")),
        }
    }
}

/// Streaming reader over an edge-list text.
pub struct EdgeReader<R> {
    lines: std::io::Lines<R>,
    format: InputFormat,
    line_no: usize,
    extra_token_lines: usize,
}

impl<R: BufRead> EdgeReader<R> {
    pub fn new(reader: R, format: InputFormat) -> Self {
        Self {
            lines: reader.lines(),
            format,
            line_no: 0,
            extra_token_lines: 0,
        }
    }

    /// Lines in pairs format that carried more than two tokens.
    pub fn extra_token_lines(&self) -> usize {
        self.extra_token_lines
    }

    fn parse_line(&mut self, line: &str) -> Option<Result<EdgeRecord>> {
        let line = line.trim_end_matches('\r');
        if line.starts_with('#') || line.trim().is_empty() {
            return None;
        }
        let line_no = self.line_no;
        let record = match self.format {
            InputFormat::Pairs => {
                let mut tokens = line.split_whitespace();
                match (tokens.next(), tokens.next()) {
                    (Some(a), Some(b)) => {
                        if tokens.next().is_some() {
                            self.extra_token_lines += 1;
                        }
                        Ok(EdgeRecord::new(a, b))
                    }
                    _ => Err(Error::Parse {
                        line: line_no,
                        message: "expected two whitespace-separated node tokens".into(),
                    }),
                }
            }
            InputFormat::AsRel => {
                let mut fields = line.split('|').map(str::trim);
                match (fields.next(), fields.next()) {
                    (Some(a), Some(b)) if is_token(a) && is_token(b) => Ok(EdgeRecord::new(a, b)),
                    _ => Err(Error::Parse {
                        line: line_no,
                        message: "expected `src|dst|rel`".into(),
                    }),
                }
            }
        };
        Some(record)
    }
}

fn is_token(s: &str) -> bool {
    !s.is_empty() && !s.contains(char::is_whitespace)
}

impl<R: BufRead> Iterator for EdgeReader<R> {
    type Item = Result<EdgeRecord>;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            let line = match self.lines.next()? {
                Ok(line) => line,
                Err(e) => return Some(Err(e.into())),
            };
            self.line_no += 1;
            if let Some(record) = self.parse_line(&line) {
                return Some(record);
            }
        }
    }
}

pub fn parse_edge_list<R: BufRead>(reader: R) -> Result<Vec<EdgeRecord>> {
    collect_records(EdgeReader::new(reader, InputFormat::Pairs))
}

pub fn parse_as_rel<R: BufRead>(reader: R) -> Result<Vec<EdgeRecord>> {
    collect_records(EdgeReader::new(reader, InputFormat::AsRel))
}

fn collect_records<R: BufRead>(mut reader: EdgeReader<R>) -> Result<Vec<EdgeRecord>> {
    let records = reader.by_ref().collect::<Result<Vec<_>>>()?;
    warn_extra_tokens(&reader);
    Ok(records)
}

fn warn_extra_tokens<R>(reader: &EdgeReader<R>) {
    if reader.extra_token_lines > 0 {
        log::warn!("ignored extra tokens on {} line(s)", reader.extra_token_lines);
    }
}

/// Stream records straight into a graph without materialising the list.
pub fn read_graph<R: BufRead>(reader: R, format: InputFormat) -> Result<Graph> {
    let mut edges = EdgeReader::new(reader, format);
    let mut builder = GraphBuilder::new();
    for record in edges.by_ref() {
        let record = record?;
        builder.add_edge(&record.left, &record.right);
    }
    warn_extra_tokens(&edges);
    builder.finish().map(|(g, _)| g)
}

/// Canonical plain-pairs writer: `left right\n` per record.
pub fn write_edge_records<W: Write>(records: &[EdgeRecord], mut sink: W) -> Result<usize> {
    let mut bytes = 0;
    for r in records {
        let line = format!("{} {}\n", r.left, r.right);
        sink.write_all(line.as_bytes())?;
        bytes += line.len();
    }
    sink.flush()?;
    Ok(bytes)
}

/// Write every edge of `g` using node labels, in ascending id order.
pub fn write_graph_edges<W: Write>(g: &Graph, mut sink: W) -> Result<usize> {
    let mut bytes = 0;
    for (u, v) in g.edges() {
        let line = format!("{} {}\n", g.labels()[u], g.labels()[v]);
        sink.write_all(line.as_bytes())?;
        bytes += line.len();
    }
    sink.flush()?;
    Ok(bytes)
}

/// One CSV cell.
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(i64),
    Num(f64),
    Text(String),
    Na,
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<u64> for Cell {
    fn from(v: u64) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<u32> for Cell {
    fn from(v: u32) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Num(v)
    }
}

impl<T: Into<Cell>> From<Option<T>> for Cell {
    fn from(v: Option<T>) -> Self {
        v.map_or(Cell::Na, Into::into)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_owned())
    }
}

impl Cell {
    pub fn render(&self, significant: usize) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Num(v) => format_number(*v, significant),
            Cell::Text(s) => s.clone(),
            Cell::Na => "NA".to_owned(),
        }
    }
}

/// Named table of rows sharing one header.
#[derive(Debug, Clone, PartialEq)]
pub struct Series {
    pub name: String,
    pub headers: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Series {
    pub fn new(name: &str, headers: &[&str]) -> Self {
        Self {
            name: name.to_owned(),
            headers: headers.iter().map(|h| (*h).to_owned()).collect(),
            rows: Vec::new(),
        }
    }

    /// Panics if the row arity differs from the header arity.
    pub fn push(&mut self, row: Vec<Cell>) {
        assert_eq!(
            row.len(),
            self.headers.len(),
            "row arity must match headers of series `{}`",
            self.name
        );
        self.rows.push(row);
    }
}

/// Significant digits used for series values.
pub const SERIES_DIGITS: usize = 12;

pub fn write_series<W: Write>(series: &Series, sink: W) -> Result<usize> {
    write_series_with(series, sink, SERIES_DIGITS)
}

pub fn write_series_with<W: Write>(series: &Series, mut sink: W, significant: usize) -> Result<usize> {
    let mut out = series.headers.join(",");
    out.push('\n');
    for row in &series.rows {
        let cells: Vec<String> = row.iter().map(|c| c.render(significant)).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    sink.write_all(out.as_bytes())?;
    sink.flush()?;
    Ok(out.len())
}

/// Render `x` in positional notation with at most `significant` significant
/// digits, trailing zeros trimmed. Non-finite values render as `NA`.
pub fn format_number(x: f64, significant: usize) -> String {
    if !x.is_finite() {
        return "NA".to_owned();
    }
    if x == 0.0 {
        return "0".to_owned();
    }
    let significant = significant.max(1);
    // Round through scientific notation first so the digit budget is exact.
    let sci = format!("{:.*e}", significant - 1, x);
    let rounded: f64 = sci.parse().expect("formatted float parses back");
    let exponent: i32 = sci.rsplit('e').next().and_then(|e| e.parse().ok()).unwrap_or(0);
    let decimals = (significant as i32 - 1 - exponent).max(0) as usize;
    let mut s = format!("{:.*}", decimals, rounded);
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.pop();
        }
    }
    if s == "-0" {
        s = "0".to_owned();
    }
    s
}
