//! Line-based instance and solution formats.
//!
//! ```text
//! c three isolated vertices
//! p dce 3 0 3 2 e+
//! t 1 2
//! t 2 0 2
//! t 3 0 2
//! ```
//!
//! Headers are `p dce n m k r [e+|e-|v-]`, `p dsc n m k <property>` with
//! `regular`, `anon <k>`, `hindex <l>` or `balanced <l>`, and `p edge n m`
//! for plain graphs. Edges are `e u v`, degree lists `t v d1 d2 ...` (a
//! vertex without a `t` line has an empty list), and `b d` sets the degree
//! bound of a `dsc` instance. Vertices are numbered from 1. Lines starting
//! with `c` and blank lines are ignored.

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::dce::{DceInstance, DegreeListFunction, Edit, EditSolution, OpKind};
use crate::dsc::{BuiltinProperty, DscInstance};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Instance {
    Dce(DceInstance),
    Dsc(DscInstance),
    Graph(Graph),
}

impl Instance {
    pub fn graph(&self) -> &Graph {
        match self {
            Instance::Dce(i) => &i.graph,
            Instance::Dsc(i) => &i.graph,
            Instance::Graph(g) => g,
        }
    }
}

enum Header {
    Dce { k: usize, r: usize, op: OpKind },
    Dsc { k: usize, property: BuiltinProperty },
    Edge,
}

fn number(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| Error::parse(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| Error::parse(line, format!("{what}: expected a nonnegative integer, found `{tok}`")))
}

fn vertex(tok: Option<&str>, line: usize, n: usize) -> Result<usize> {
    let v = number(tok, line, "vertex")?;
    if v == 0 || v > n {
        return Err(Error::parse(line, format!("vertex {v} out of range 1..={n}")));
    }
    Ok(v - 1)
}

fn no_trailing<'a>(mut toks: impl Iterator<Item = &'a str>, line: usize) -> Result<()> {
    match toks.next() {
        Some(t) => Err(Error::parse(line, format!("unexpected token `{t}`"))),
        None => Ok(()),
    }
}

fn parse_property<'a>(mut toks: impl Iterator<Item = &'a str>, line: usize) -> Result<BuiltinProperty> {
    let name = toks
        .next()
        .ok_or_else(|| Error::parse(line, "missing property"))?;
    let property = match name {
        "regular" => BuiltinProperty::Regular,
        "anon" => {
            let k = number(toks.next(), line, "anonymity level")?;
            if k == 0 {
                return Err(Error::parse(line, "anonymity level must be at least 1"));
            }
            BuiltinProperty::Anonymity(k)
        }
        "hindex" => BuiltinProperty::HIndex(number(toks.next(), line, "h-index")?),
        "balanced" => BuiltinProperty::Balanced(number(toks.next(), line, "class size")?),
        other => return Err(Error::parse(line, format!("unknown property `{other}`"))),
    };
    no_trailing(toks, line)?;
    Ok(property)
}

/// Parses any of the three instance kinds.
pub fn parse_instance(text: &str) -> Result<Instance> {
    let mut header: Option<(Header, usize, usize, usize)> = None;
    let mut edges: Vec<Edge> = Vec::new();
    let mut seen: HashSet<Edge> = HashSet::new();
    let mut lists: Vec<Option<Vec<usize>>> = Vec::new();
    let mut delta_prime = None;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let mut toks = raw.split_whitespace();
        let Some(tag) = toks.next() else { continue };
        match tag {
            "c" => continue,
            "p" => {
                if header.is_some() {
                    return Err(Error::parse(line, "second header line"));
                }
                let kind = toks.next().ok_or_else(|| Error::parse(line, "missing problem kind"))?;
                let n = number(toks.next(), line, "vertex count")?;
                let m = number(toks.next(), line, "edge count")?;
                let h = match kind {
                    "dce" => {
                        let k = number(toks.next(), line, "budget")?;
                        let r = number(toks.next(), line, "degree bound")?;
                        let op = match toks.next() {
                            None => OpKind::EdgeAddition,
                            Some(t) => OpKind::from_token(t).ok_or_else(|| {
                                Error::parse(line, format!("unknown operation `{t}`"))
                            })?,
                        };
                        no_trailing(toks, line)?;
                        Header::Dce { k, r, op }
                    }
                    "dsc" => {
                        let k = number(toks.next(), line, "budget")?;
                        Header::Dsc {
                            k,
                            property: parse_property(toks, line)?,
                        }
                    }
                    "edge" => {
                        no_trailing(toks, line)?;
                        Header::Edge
                    }
                    other => return Err(Error::parse(line, format!("unknown problem kind `{other}`"))),
                };
                lists = vec![None; n];
                header = Some((h, n, m, line));
            }
            _ => {
                let Some((h, n, _, _)) = &header else {
                    return Err(Error::parse(line, "data before the `p` header"));
                };
                let n = *n;
                match tag {
                    "e" => {
                        let u = vertex(toks.next(), line, n)?;
                        let v = vertex(toks.next(), line, n)?;
                        no_trailing(toks, line)?;
                        if u == v {
                            return Err(Error::parse(line, format!("self-loop at vertex {}", u + 1)));
                        }
                        let e = (u.min(v), u.max(v));
                        if !seen.insert(e) {
                            return Err(Error::parse(line, format!("duplicate edge {{{}, {}}}", u + 1, v + 1)));
                        }
                        edges.push(e);
                    }
                    "t" => {
                        let Header::Dce { r, .. } = h else {
                            return Err(Error::parse(line, "degree lists are only allowed in dce files"));
                        };
                        let v = vertex(toks.next(), line, n)?;
                        if lists[v].is_some() {
                            return Err(Error::parse(line, format!("second degree list for vertex {}", v + 1)));
                        }
                        let mut list = Vec::new();
                        for t in toks {
                            let d = number(Some(t), line, "degree")?;
                            if d > *r {
                                return Err(Error::parse(line, format!("degree {d} exceeds r = {r}")));
                            }
                            list.push(d);
                        }
                        lists[v] = Some(list);
                    }
                    "b" => {
                        if !matches!(h, Header::Dsc { .. }) {
                            return Err(Error::parse(line, "degree bounds are only allowed in dsc files"));
                        }
                        if delta_prime.is_some() {
                            return Err(Error::parse(line, "second degree bound"));
                        }
                        delta_prime = Some(number(toks.next(), line, "degree bound")?);
                        no_trailing(toks, line)?;
                    }
                    other => return Err(Error::parse(line, format!("unknown line type `{other}`"))),
                }
            }
        }
    }

    let Some((h, n, m, header_line)) = header else {
        return Err(Error::parse(text.lines().count().max(1), "missing `p` header"));
    };
    if edges.len() != m {
        return Err(Error::parse(
            header_line,
            format!("header declares {m} edges but {} were given", edges.len()),
        ));
    }
    let graph = Graph::from_edges(n, &edges).map_err(|e| Error::parse(header_line, e.to_string()))?;
    let at_header = |e: Error| Error::parse(header_line, e.to_string());
    Ok(match h {
        Header::Dce { k, r, op } => {
            let tau = DegreeListFunction::new(r, lists.into_iter().map(Option::unwrap_or_default).collect())
                .map_err(at_header)?;
            Instance::Dce(DceInstance::new(graph, k, tau, op).map_err(at_header)?)
        }
        Header::Dsc { k, property } => {
            Instance::Dsc(DscInstance::new(graph, k, property, delta_prime).map_err(at_header)?)
        }
        Header::Edge => Instance::Graph(graph),
    })
}

/// The graph of any instance file.
pub fn parse_graph(text: &str) -> Result<Graph> {
    parse_instance(text).map(|i| i.graph().clone())
}

fn write_edges(out: &mut String, g: &Graph) {
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
}

pub fn serialize_dce(inst: &DceInstance) -> String {
    let g = &inst.graph;
    let mut out = format!("p dce {} {} {} {} {}\n", g.n(), g.m(), inst.k, inst.r(), inst.op);
    write_edges(&mut out, g);
    for (v, list) in inst.tau.lists().iter().enumerate() {
        if !list.is_empty() {
            let _ = write!(out, "t {}", v + 1);
            for d in list {
                let _ = write!(out, " {d}");
            }
            out.push('\n');
        }
    }
    out
}

pub fn serialize_dsc(inst: &DscInstance) -> String {
    let g = &inst.graph;
    let mut out = format!("p dsc {} {} {} {}\n", g.n(), g.m(), inst.k, inst.property);
    if let Some(dp) = inst.delta_prime {
        let _ = writeln!(out, "b {dp}");
    }
    write_edges(&mut out, g);
    out
}

pub fn serialize_graph(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.m());
    write_edges(&mut out, g);
    out
}

pub fn serialize_instance(inst: &Instance) -> String {
    match inst {
        Instance::Dce(i) => serialize_dce(i),
        Instance::Dsc(i) => serialize_dsc(i),
        Instance::Graph(g) => serialize_graph(g),
    }
}

/// `YES <count>` and one edit per line, or `NO`.
pub fn serialize_solution(sol: Option<&EditSolution>) -> String {
    let Some(sol) = sol else {
        return "NO\n".to_string();
    };
    let mut out = format!("YES {}\n", sol.len());
    for e in &sol.edits {
        let _ = match *e {
            Edit::AddEdge(u, v) => writeln!(out, "add {} {}", u + 1, v + 1),
            Edit::DeleteEdge(u, v) => writeln!(out, "del {} {}", u + 1, v + 1),
            Edit::DeleteVertex(v) => writeln!(out, "rm {}", v + 1),
        };
    }
    out
}

/// Inverse of [`serialize_solution`]. Vertex indices are not range-checked
/// here; validation against an instance does that.
pub fn parse_solution(text: &str) -> Result<Option<EditSolution>> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('c'));
    let Some((line, first)) = lines.next() else {
        return Err(Error::parse(1, "empty solution"));
    };
    let mut toks = first.split_whitespace();
    match toks.next() {
        Some("NO") => {
            no_trailing(toks, line)?;
            if let Some((line, _)) = lines.next() {
                return Err(Error::parse(line, "content after NO"));
            }
            return Ok(None);
        }
        Some("YES") => {}
        _ => return Err(Error::parse(line, "expected `YES <count>` or `NO`")),
    }
    let count = number(toks.next(), line, "edit count")?;
    no_trailing(toks, line)?;
    let header_line = line;
    let endpoint = |t: Option<&str>, line: usize| -> Result<usize> {
        let v = number(t, line, "vertex")?;
        v.checked_sub(1)
            .ok_or_else(|| Error::parse(line, "vertices are numbered from 1"))
    };
    let mut edits = Vec::new();
    for (line, l) in lines {
        let mut toks = l.split_whitespace();
        let edit = match toks.next() {
            Some("add") => {
                let (u, v) = (endpoint(toks.next(), line)?, endpoint(toks.next(), line)?);
                Edit::AddEdge(u.min(v), u.max(v))
            }
            Some("del") => {
                let (u, v) = (endpoint(toks.next(), line)?, endpoint(toks.next(), line)?);
                Edit::DeleteEdge(u.min(v), u.max(v))
            }
            Some("rm") => Edit::DeleteVertex(endpoint(toks.next(), line)?),
            Some(t) => return Err(Error::parse(line, format!("unknown edit `{t}`"))),
            None => unreachable!("blank lines are filtered"),
        };
        no_trailing(toks, line)?;
        edits.push(edit);
    }
    if edits.len() != count {
        return Err(Error::parse(
            header_line,
            format!("header announces {count} edits but {} follow", edits.len()),
        ));
    }
    Ok(Some(EditSolution { edits }))
}
