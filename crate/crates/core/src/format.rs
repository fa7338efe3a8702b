//! Line-oriented text format for ribbon graphs.
//!
//! ```text
//! # comment
//! graph <name>
//! vertex <vid>: <dart> <dart> ...    # rotation order
//! vertex <vid>:                      # isolated vertex
//! edge <eid>: <dartA> <dartB>        # dartA is the tail
//! weight <eid> <symbol>
//! tangle <eid> w1|w2|w3|w4
//! tensor <q>                         # graph is a subdivision F ⊗ C_q
//! ```
//!
//! Records belong to the most recent `graph` line. [`serialize`] writes the
//! canonical form, which [`parse`] reads back to an identical graph.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::ribbon::{RibbonError, RibbonGraph, RibbonGraphBuilder, TangleType};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("unknown record `{0}`")]
    UnknownRecord(String),
    #[error("`{0}` record before any `graph` line")]
    OutsideGraph(String),
    #[error("expected {0}")]
    Expected(&'static str),
    #[error("unexpected `{0}`")]
    Unexpected(String),
    #[error("unknown tangle type `{0}`")]
    BadTangle(String),
    #[error("cycle length `{0}` is not an integer of at least 2")]
    BadTensor(String),
    #[error("second `{0}` record for the same target")]
    Repeated(&'static str),
    #[error(transparent)]
    Ribbon(RibbonError),
}

/// An error at a 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

/// Every error found in a file, in line order.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseErrors(pub Vec<ParseError>);

impl fmt::Display for ParseErrors {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Pos {
    line: usize,
    column: usize,
}

struct Token<'a> {
    pos: Pos,
    text: &'a str,
}

/// Splits a line into whitespace-separated tokens, with `:` always a token
/// of its own and everything from `#` on dropped.
fn tokenize(line: &str, number: usize) -> Vec<Token<'_>> {
    let line = line.split('#').next().unwrap_or("");
    let mut out = Vec::new();
    let mut start: Option<usize> = None;
    let column = |byte: usize| line[..byte].chars().count() + 1;
    for (i, c) in line.char_indices() {
        if c.is_whitespace() || c == ':' {
            if let Some(s) = start.take() {
                out.push(Token {
                    pos: Pos {
                        line: number,
                        column: column(s),
                    },
                    text: &line[s..i],
                });
            }
            if c == ':' {
                out.push(Token {
                    pos: Pos {
                        line: number,
                        column: column(i),
                    },
                    text: ":",
                });
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push(Token {
            pos: Pos {
                line: number,
                column: column(s),
            },
            text: &line[s..],
        });
    }
    out
}

/// One graph block being read, with the positions needed to place
/// validation errors on the offending record.
struct Block {
    header: Pos,
    builder: RibbonGraphBuilder,
    vertex_defs: HashMap<String, Vec<Pos>>,
    edge_defs: HashMap<String, Vec<Pos>>,
    dart_in_vertex: HashMap<String, Vec<Pos>>,
    dart_in_edge: HashMap<String, Vec<Pos>>,
    edge_refs: HashMap<String, Vec<Pos>>,
    weighted: HashMap<String, Pos>,
    tangled: HashMap<String, Pos>,
    tensor: Option<Pos>,
}

impl Block {
    fn new(name: &str, header: Pos) -> Block {
        Block {
            header,
            builder: RibbonGraphBuilder::new(name),
            vertex_defs: HashMap::new(),
            edge_defs: HashMap::new(),
            dart_in_vertex: HashMap::new(),
            dart_in_edge: HashMap::new(),
            edge_refs: HashMap::new(),
            weighted: HashMap::new(),
            tangled: HashMap::new(),
            tensor: None,
        }
    }

    fn position_of(&self, e: &RibbonError) -> Pos {
        let nth = |map: &HashMap<String, Vec<Pos>>, key: &str, n: usize| {
            map.get(key).and_then(|v| v.get(n).copied())
        };
        let found = match e {
            RibbonError::DuplicateDart(d) => {
                nth(&self.dart_in_vertex, d, 1).or_else(|| nth(&self.dart_in_edge, d, 1))
            }
            RibbonError::UnpairedDart(d) => nth(&self.dart_in_vertex, d, 0),
            RibbonError::UnplacedDart(d) | RibbonError::SelfPairedDart(d) => {
                nth(&self.dart_in_edge, d, 0)
            }
            RibbonError::DuplicateVertex(v) => nth(&self.vertex_defs, v, 1),
            RibbonError::DuplicateEdge(e) => nth(&self.edge_defs, e, 1),
            RibbonError::UnknownEdge(e) => nth(&self.edge_refs, e, 0),
            RibbonError::DisconnectedGraph | RibbonError::BadCycleLength(_) => None,
        };
        found.unwrap_or(self.header)
    }

    fn finish(self) -> Result<RibbonGraph, ParseError> {
        self.builder.build().map_err(|e| {
            let pos = self.position_of(&e);
            ParseError {
                line: pos.line,
                column: pos.column,
                kind: ParseErrorKind::Ribbon(e),
            }
        })
    }

    /// `<name> : <item>*`, returning the name token and the items.
    fn named_list<'a, 't>(
        toks: &'t [Token<'a>],
        what: &'static str,
    ) -> Result<(&'t Token<'a>, &'t [Token<'a>]), ParseError> {
        let name = toks
            .get(1)
            .filter(|t| t.text != ":")
            .ok_or_else(|| missing(toks, 1, what))?;
        match toks.get(2) {
            Some(t) if t.text == ":" => {}
            _ => return Err(missing(toks, 2, "`:`")),
        }
        let items = &toks[3..];
        if let Some(t) = items.iter().find(|t| t.text == ":") {
            return Err(error(t.pos, ParseErrorKind::Unexpected(":".into())));
        }
        Ok((name, items))
    }

    fn record(&mut self, toks: &[Token<'_>]) -> Result<(), ParseError> {
        let keyword = &toks[0];
        match keyword.text {
            "vertex" => {
                let (name, darts) = Self::named_list(toks, "a vertex name")?;
                self.vertex_defs
                    .entry(name.text.into())
                    .or_default()
                    .push(name.pos);
                for d in darts {
                    self.dart_in_vertex
                        .entry(d.text.into())
                        .or_default()
                        .push(d.pos);
                }
                let names: Vec<&str> = darts.iter().map(|t| t.text).collect();
                self.builder.vertex(name.text, &names);
            }
            "edge" => {
                let (name, darts) = Self::named_list(toks, "an edge name")?;
                if darts.len() != 2 {
                    return Err(match darts.get(2) {
                        Some(t) => error(t.pos, ParseErrorKind::Unexpected(t.text.into())),
                        None => missing(toks, 3 + darts.len(), "two darts"),
                    });
                }
                self.edge_defs
                    .entry(name.text.into())
                    .or_default()
                    .push(name.pos);
                for d in darts {
                    self.dart_in_edge
                        .entry(d.text.into())
                        .or_default()
                        .push(d.pos);
                }
                self.builder.edge(name.text, darts[0].text, darts[1].text);
            }
            "weight" | "tangle" => {
                let [_, edge, value] = exact::<3>(toks, "an edge name and a value")?;
                self.edge_refs
                    .entry(edge.text.into())
                    .or_default()
                    .push(edge.pos);
                if keyword.text == "weight" {
                    if self.weighted.insert(edge.text.into(), edge.pos).is_some() {
                        return Err(error(keyword.pos, ParseErrorKind::Repeated("weight")));
                    }
                    self.builder.weight(edge.text, value.text);
                } else {
                    let t: TangleType = value.text.parse().map_err(|_| {
                        error(value.pos, ParseErrorKind::BadTangle(value.text.into()))
                    })?;
                    if self.tangled.insert(edge.text.into(), edge.pos).is_some() {
                        return Err(error(keyword.pos, ParseErrorKind::Repeated("tangle")));
                    }
                    self.builder.tangle(edge.text, t);
                }
            }
            "tensor" => {
                let [_, q] = exact::<2>(toks, "a cycle length")?;
                let value: u32 = q
                    .text
                    .parse()
                    .ok()
                    .filter(|&q| q >= 2)
                    .ok_or_else(|| error(q.pos, ParseErrorKind::BadTensor(q.text.into())))?;
                if self.tensor.replace(keyword.pos).is_some() {
                    return Err(error(keyword.pos, ParseErrorKind::Repeated("tensor")));
                }
                self.builder.tensor_of(Some(value));
            }
            other => {
                return Err(error(
                    keyword.pos,
                    ParseErrorKind::UnknownRecord(other.into()),
                ))
            }
        }
        Ok(())
    }
}

fn error(pos: Pos, kind: ParseErrorKind) -> ParseError {
    ParseError {
        line: pos.line,
        column: pos.column,
        kind,
    }
}

/// Error for a token missing at index `i`: placed just after the last token.
fn missing(toks: &[Token<'_>], i: usize, what: &'static str) -> ParseError {
    let pos = match toks.get(i) {
        Some(t) => t.pos,
        None => {
            let last = toks.last().expect("non-empty record");
            Pos {
                line: last.pos.line,
                column: last.pos.column + last.text.chars().count(),
            }
        }
    };
    error(pos, ParseErrorKind::Expected(what))
}

fn exact<'t, 'a, const N: usize>(
    toks: &'t [Token<'a>],
    what: &'static str,
) -> Result<[&'t Token<'a>; N], ParseError> {
    if let Some(t) = toks.get(N) {
        return Err(error(t.pos, ParseErrorKind::Unexpected(t.text.into())));
    }
    if let Some(t) = toks.iter().find(|t| t.text == ":") {
        return Err(error(t.pos, ParseErrorKind::Unexpected(":".into())));
    }
    if toks.len() < N {
        return Err(missing(toks, toks.len(), what));
    }
    Ok(std::array::from_fn(|i| &toks[i]))
}

/// Reads every graph in `text`. All syntax and validation errors are
/// collected; a graph with an error is not returned.
pub fn parse(text: &str) -> Result<Vec<RibbonGraph>, ParseErrors> {
    let mut graphs = Vec::new();
    let mut errors = Vec::new();
    let mut current: Option<Block> = None;
    let mut broken = false;
    let close = |block: Option<Block>,
                 broken: bool,
                 graphs: &mut Vec<RibbonGraph>,
                 errors: &mut Vec<ParseError>| {
        if let Some(b) = block {
            match b.finish() {
                Ok(g) if !broken => graphs.push(g),
                Ok(_) => {}
                Err(e) => errors.push(e),
            }
        }
    };
    for (i, line) in text.lines().enumerate() {
        let toks = tokenize(line, i + 1);
        let Some(first) = toks.first() else { continue };
        if first.text == "graph" {
            close(current.take(), broken, &mut graphs, &mut errors);
            broken = false;
            match exact::<2>(&toks, "a graph name") {
                Ok([_, name]) => current = Some(Block::new(name.text, first.pos)),
                Err(e) => {
                    errors.push(e);
                    current = Some(Block::new("", first.pos));
                    broken = true;
                }
            }
            continue;
        }
        let Some(block) = current.as_mut() else {
            errors.push(error(
                first.pos,
                ParseErrorKind::OutsideGraph(first.text.into()),
            ));
            continue;
        };
        if let Err(e) = block.record(&toks) {
            errors.push(e);
            broken = true;
        }
    }
    close(current.take(), broken, &mut graphs, &mut errors);
    if errors.is_empty() {
        Ok(graphs)
    } else {
        errors.sort_by_key(|e| (e.line, e.column));
        Err(ParseErrors(errors))
    }
}

/// Canonical text of one graph: vertices in order with their rotations,
/// isolated vertices, edges (tail dart first), then weights, tangles and
/// the subdivision marker.
pub fn serialize_graph(g: &RibbonGraph) -> String {
    let mut out = format!("graph {}\n", g.name());
    for v in g.vertices() {
        out.push_str(&format!("vertex {}:", v.name));
        for &d in &v.darts {
            out.push(' ');
            out.push_str(g.dart_name(d));
        }
        out.push('\n');
    }
    for name in g.isolated_names() {
        out.push_str(&format!("vertex {name}:\n"));
    }
    for e in g.edges() {
        out.push_str(&format!(
            "edge {}: {} {}\n",
            e.name,
            g.dart_name(e.darts[0]),
            g.dart_name(e.darts[1])
        ));
    }
    for e in g.edges() {
        if let Some(w) = &e.weight {
            out.push_str(&format!("weight {} {w}\n", e.name));
        }
    }
    for e in g.edges() {
        if let Some(t) = e.tangle {
            out.push_str(&format!("tangle {} {t}\n", e.name));
        }
    }
    if let Some(q) = g.tensor_of() {
        out.push_str(&format!("tensor {q}\n"));
    }
    out
}

/// Canonical text of several graphs, separated by blank lines.
pub fn serialize(graphs: &[RibbonGraph]) -> String {
    graphs
        .iter()
        .map(serialize_graph)
        .collect::<Vec<_>>()
        .join("\n")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ribbon::isomorphic;
    use crate::ribbon::samples::*;

    #[test]
    fn loop_from_text() {
        let gs = parse("graph loop\nvertex v1: a a'\nedge e1: a a'").unwrap();
        assert_eq!(gs.len(), 1);
        assert_eq!(gs[0].name(), "loop");
        assert!(isomorphic(&gs[0], &planar_loop()));
    }

    #[test]
    fn empty_and_comment_only_files() {
        assert_eq!(parse("").unwrap().len(), 0);
        assert_eq!(parse("# nothing\n\n   # here\n").unwrap().len(), 0);
    }

    #[test]
    fn duplicate_dart_is_placed() {
        let text = "graph g\nvertex v1: a b\nvertex v2: a c\nedge e1: a b\n";
        let err = parse(text).unwrap_err();
        assert_eq!(err.0.len(), 1);
        let e = &err.0[0];
        assert_eq!((e.line, e.column), (3, 12));
        assert_eq!(
            e.kind,
            ParseErrorKind::Ribbon(RibbonError::DuplicateDart("a".into()))
        );

        let text = "graph g\nvertex v1: a b c\nedge e1: a b\nedge e2: b c\n";
        let e = &parse(text).unwrap_err().0[0];
        assert_eq!((e.line, e.column), (4, 10));

        let text = "graph g\nvertex v1: a b\nedge e1: a b\nvertex v2: c\nedge e2: c a\n";
        let e = &parse(text).unwrap_err().0[0];
        assert_eq!(
            (e.line, e.kind.clone()),
            (
                5,
                ParseErrorKind::Ribbon(RibbonError::DuplicateDart("a".into()))
            )
        );
    }

    #[test]
    fn syntax_errors_are_positioned() {
        let err = parse("vertex v: a\ngraph g\nvertex v1 a a'\nedge e1: a\nfoo\n").unwrap_err();
        let places: Vec<_> = err.0.iter().map(|e| (e.line, e.column)).collect();
        assert_eq!(places, vec![(1, 1), (3, 11), (4, 11), (5, 1)]);
        assert!(matches!(err.0[3].kind, ParseErrorKind::UnknownRecord(_)));
        let err = parse("graph g\nvertex v: a a'\nedge e: a a'\ntangle e w5\n").unwrap_err();
        assert_eq!(err.0[0].kind, ParseErrorKind::BadTangle("w5".into()));
    }

    #[test]
    fn unknown_edge_in_weight() {
        let err = parse("graph g\nvertex v: a a'\nedge e: a a'\nweight f b\n").unwrap_err();
        assert_eq!((err.0[0].line, err.0[0].column), (4, 8));
    }

    #[test]
    fn round_trip_is_exact() {
        let mut b = RibbonGraphBuilder::new("decorated");
        b.vertex("u", &["p", "q", "r"])
            .vertex("w", &["s"])
            .vertex("lonely", &[] as &[&str])
            .edge("e1", "p", "s")
            .edge("e2", "r", "q")
            .weight("e1", "b1")
            .tangle("e2", TangleType::W4)
            .tensor_of(Some(3));
        let g = b.build().unwrap();
        let text = serialize_graph(&g);
        assert_eq!(
            text,
            "graph decorated\nvertex u: p q r\nvertex w: s\nvertex lonely:\nedge e1: p s\nedge e2: r q\n\
             weight e1 b1\ntangle e2 w4\ntensor 3\n"
        );
        let back = parse(&text).unwrap();
        assert_eq!(back, vec![g]);
        let many = serialize(&[bridge(), torus_loops()]);
        assert_eq!(serialize(&parse(&many).unwrap()), many);
    }
}
