//! Line-oriented diagram text format.
//!
//! ```text
//! ambient s3 | ambient thickened genus=<g> boundary=<b>
//! crossing <id>
//! vertex <id> <edge-id>...          # rotation, slot i is the i-th entry
//! edge <id> from <v>.<slot> to <w>.<slot>
//! edge <id> loop
//! edge <id> passes <crossing>:over|under ...
//! ```

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use super::{AmbientSpace, DiagramError, Edge, EdgeEnds, Endpoint, GraphDiagram, Passage, Role, Vertex};

struct Token<'a> {
    text: &'a str,
    col: usize,
}

fn tokens(line: &str) -> Vec<Token<'_>> {
    let body = line.split('#').next().unwrap_or("");
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in body.char_indices().chain(std::iter::once((body.len(), ' '))) {
        match (ch.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push(Token {
                    text: &body[s..i],
                    col: s + 1,
                });
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    out
}

#[derive(Default)]
struct PendingEdge {
    ends: Option<EdgeEnds>,
    passages: Option<Vec<Passage>>,
}

struct Parser {
    line: usize,
}

impl Parser {
    fn err(&self, col: usize, msg: impl Into<String>) -> DiagramError {
        DiagramError::Syntax {
            line: self.line,
            col,
            msg: msg.into(),
        }
    }

    fn id<'a>(&self, t: &Token<'a>) -> Result<&'a str, DiagramError> {
        let ok = !t.text.is_empty()
            && t.text
                .chars()
                .all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '-');
        if ok {
            Ok(t.text)
        } else {
            Err(self.err(t.col, format!("invalid identifier '{}'", t.text)))
        }
    }

    fn endpoint(&self, t: &Token<'_>) -> Result<Endpoint, DiagramError> {
        let (v, s) = t
            .text
            .rsplit_once('.')
            .ok_or_else(|| self.err(t.col, format!("expected <vertex>.<slot>, found '{}'", t.text)))?;
        let vertex = self.id(&Token { text: v, col: t.col })?.to_string();
        let slot = s
            .parse()
            .map_err(|_| self.err(t.col + v.len() + 1, format!("invalid slot '{s}'")))?;
        Ok(Endpoint { vertex, slot })
    }

    fn passage(&self, t: &Token<'_>) -> Result<Passage, DiagramError> {
        let (c, r) = t
            .text
            .split_once(':')
            .ok_or_else(|| self.err(t.col, format!("expected <crossing>:over|under, found '{}'", t.text)))?;
        let crossing = self.id(&Token { text: c, col: t.col })?.to_string();
        let role = match r {
            "over" => Role::Over,
            "under" => Role::Under,
            _ => return Err(self.err(t.col + c.len() + 1, format!("role must be over or under, found '{r}'"))),
        };
        Ok(Passage { crossing, role })
    }

    fn count(&self, t: &Token<'_>, key: &str) -> Result<u32, DiagramError> {
        let v = t
            .text
            .strip_prefix(key)
            .and_then(|s| s.strip_prefix('='))
            .ok_or_else(|| self.err(t.col, format!("expected {key}=<n>, found '{}'", t.text)))?;
        v.parse()
            .map_err(|_| self.err(t.col + key.len() + 1, format!("invalid count '{v}'")))
    }
}

pub fn parse(text: &str) -> Result<GraphDiagram, DiagramError> {
    let mut ambient = None;
    let mut vertices = Vec::new();
    let mut crossings = Vec::new();
    let mut edge_order: Vec<String> = Vec::new();
    let mut edges: BTreeMap<String, PendingEdge> = BTreeMap::new();
    let mut lines: HashMap<String, usize> = HashMap::new();
    let mut p = Parser { line: 0 };

    for (n, raw) in text.lines().enumerate() {
        p.line = n + 1;
        let toks = tokens(raw);
        let Some(head) = toks.first() else { continue };
        match head.text {
            "ambient" => {
                if ambient.is_some() {
                    return Err(p.err(head.col, "ambient declared twice"));
                }
                ambient = Some(match toks.get(1).map(|t| t.text) {
                    Some("s3") if toks.len() == 2 => AmbientSpace::S3,
                    Some("thickened") if toks.len() == 4 => AmbientSpace::Thickened {
                        genus: p.count(&toks[2], "genus")?,
                        boundary: p.count(&toks[3], "boundary")?,
                    },
                    _ => {
                        return Err(p.err(
                            head.col,
                            "expected `ambient s3` or `ambient thickened genus=<g> boundary=<b>`",
                        ))
                    }
                });
            }
            "crossing" => {
                if toks.len() != 2 {
                    return Err(p.err(head.col, "expected `crossing <id>`"));
                }
                let id = p.id(&toks[1])?.to_string();
                declare(&mut lines, &id, p.line)?;
                crossings.push(id);
            }
            "vertex" => {
                if toks.len() < 2 {
                    return Err(p.err(head.col, "expected `vertex <id> <edge>...`"));
                }
                let id = p.id(&toks[1])?.to_string();
                declare(&mut lines, &id, p.line)?;
                let rotation = toks[2..]
                    .iter()
                    .map(|t| p.id(t).map(str::to_string))
                    .collect::<Result<_, _>>()?;
                vertices.push(Vertex { id, rotation });
            }
            "edge" => {
                if toks.len() < 3 {
                    return Err(p.err(head.col, "expected `edge <id> from|loop|passes ...`"));
                }
                let id = p.id(&toks[1])?.to_string();
                if !edges.contains_key(&id) {
                    declare(&mut lines, &id, p.line)?;
                    edge_order.push(id.clone());
                }
                let pending = edges.entry(id.clone()).or_default();
                let kw = &toks[2];
                match kw.text {
                    "from" | "loop" if pending.ends.is_some() => {
                        return Err(p.err(kw.col, format!("endpoints of edge '{id}' given twice")))
                    }
                    "from" => {
                        if toks.len() != 6 || toks[4].text != "to" {
                            return Err(p.err(kw.col, "expected `edge <id> from <v>.<s> to <w>.<t>`"));
                        }
                        pending.ends = Some(EdgeEnds::Open {
                            from: p.endpoint(&toks[3])?,
                            to: p.endpoint(&toks[5])?,
                        });
                    }
                    "loop" => {
                        if toks.len() != 3 {
                            return Err(p.err(toks[3].col, "unexpected token after `loop`"));
                        }
                        pending.ends = Some(EdgeEnds::Loop);
                    }
                    "passes" => {
                        if pending.passages.is_some() {
                            return Err(p.err(kw.col, format!("passages of edge '{id}' given twice")));
                        }
                        lines.insert(format!("passes:{id}"), p.line);
                        pending.passages = Some(toks[3..].iter().map(|t| p.passage(t)).collect::<Result<_, _>>()?);
                    }
                    other => return Err(p.err(kw.col, format!("expected from, loop or passes, found '{other}'"))),
                }
            }
            other => return Err(p.err(head.col, format!("unknown directive '{other}'"))),
        }
    }

    let ambient = ambient.ok_or(DiagramError::MissingAmbient { line: None })?;
    let mut built = Vec::with_capacity(edge_order.len());
    for id in edge_order {
        let pending = edges.remove(&id).expect("edge recorded");
        let ends = pending.ends.ok_or_else(|| DiagramError::MissingEndpoints {
            line: lines.get(&id).copied(),
            edge: id.clone(),
        })?;
        built.push(Edge {
            id,
            ends,
            passages: pending.passages.unwrap_or_default(),
        });
    }
    GraphDiagram::build(ambient, vertices, built, crossings, &lines)
}

fn declare(lines: &mut HashMap<String, usize>, id: &str, line: usize) -> Result<(), DiagramError> {
    if lines.insert(id.to_string(), line).is_some() {
        return Err(DiagramError::Duplicate {
            line: Some(line),
            id: id.to_string(),
        });
    }
    Ok(())
}

/// Canonical text: ambient, then crossings, vertices and edges by id.
pub(super) fn serialize(d: &GraphDiagram) -> String {
    let mut out = format!("ambient {}\n", d.ambient);
    for c in &d.crossings {
        let _ = writeln!(out, "crossing {c}");
    }
    for v in d.vertices.values() {
        let _ = writeln!(out, "vertex {} {}", v.id, v.rotation.join(" "));
    }
    for e in d.edges.values() {
        match &e.ends {
            EdgeEnds::Loop => {
                let _ = writeln!(out, "edge {} loop", e.id);
            }
            EdgeEnds::Open { from, to } => {
                let _ = writeln!(
                    out,
                    "edge {} from {}.{} to {}.{}",
                    e.id, from.vertex, from.slot, to.vertex, to.slot
                );
            }
        }
        if !e.passages.is_empty() {
            let ps: Vec<String> = e
                .passages
                .iter()
                .map(|p| format!("{}:{}", p.crossing, p.role.as_str()))
                .collect();
            let _ = writeln!(out, "edge {} passes {}", e.id, ps.join(" "));
        }
    }
    out
}
