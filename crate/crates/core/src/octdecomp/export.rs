//! Line-oriented export of an [`OctComplex`].
//!
//! ```text
//! classes U=<t> D=<t>
//! strand <edge> passages=<k> open|loop type=<t>
//! oct <crossing> types=<t>,<t>,<t>,<t>,<t>,<t> over=<edge>:<i> under=<edge>:<j>
//! starfruit <vertex> fins=<r> types=<t>,<t>,<t> edges=<edge>:from|to,...
//! pair <face> <face> arc=<edge>:<i>
//! ```
//!
//! Type letters are `F` (finite), `I` (ideal), `H` (hyperideal). Faces are
//! `<crossing>.<U|D>-<over|under>-<in|out>` or `<vertex>.f<slot>-<U|D>`.

use std::fmt::Write as _;

use thiserror::Error;

use super::{EdgeEnd, End, FacePair, FaceRef, Fin, OctCell, OctComplex, Side, Starfruit, Strand, StrandRef};
use crate::diagram::{Role, VertexType};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {msg}")]
pub struct ExportError {
    pub line: usize,
    pub msg: String,
}

fn types(ts: &[VertexType]) -> String {
    ts.iter().map(|t| t.code().to_string()).collect::<Vec<_>>().join(",")
}

pub(super) fn export(c: &OctComplex) -> String {
    let mut out = format!("classes U={} D={}\n", c.u_type.code(), c.d_type.code());
    for s in &c.strands {
        let _ = writeln!(
            out,
            "strand {} passages={} {} type={}",
            s.edge,
            s.passages,
            if s.closed { "loop" } else { "open" },
            s.component_type.code()
        );
    }
    for o in &c.octahedra {
        let _ = writeln!(
            out,
            "oct {} types={} over={} under={}",
            o.crossing,
            types(&o.types),
            o.over,
            o.under
        );
    }
    for s in &c.starfruits {
        let edges: Vec<String> = s
            .fins
            .iter()
            .map(|f| format!("{}:{}", f.edge, if f.end == EdgeEnd::From { "from" } else { "to" }))
            .collect();
        let _ = writeln!(
            out,
            "starfruit {} fins={} types={} edges={}",
            s.vertex,
            s.fins.len(),
            types(&s.types),
            edges.join(",")
        );
    }
    for p in &c.pairs {
        let _ = writeln!(out, "pair {} {} arc={}", p.a, p.b, p.arc);
    }
    out
}

struct Line<'a> {
    n: usize,
    toks: Vec<&'a str>,
}

impl<'a> Line<'a> {
    fn err(&self, msg: impl Into<String>) -> ExportError {
        ExportError {
            line: self.n,
            msg: msg.into(),
        }
    }

    fn arity(&self, n: usize) -> Result<(), ExportError> {
        if self.toks.len() == n {
            Ok(())
        } else {
            Err(self.err(format!("expected {} fields, found {}", n, self.toks.len())))
        }
    }

    fn field(&self, i: usize, key: &str) -> Result<&'a str, ExportError> {
        self.toks[i]
            .strip_prefix(key)
            .and_then(|s| s.strip_prefix('='))
            .ok_or_else(|| self.err(format!("expected {key}=..., found '{}'", self.toks[i])))
    }

    fn count(&self, i: usize, key: &str) -> Result<usize, ExportError> {
        let v = self.field(i, key)?;
        v.parse().map_err(|_| self.err(format!("invalid {key} '{v}'")))
    }

    fn vtype(&self, s: &str) -> Result<VertexType, ExportError> {
        let mut cs = s.chars();
        match (cs.next().and_then(VertexType::from_code), cs.next()) {
            (Some(t), None) => Ok(t),
            _ => Err(self.err(format!("invalid vertex type '{s}'"))),
        }
    }

    fn vtypes<const N: usize>(&self, s: &str) -> Result<[VertexType; N], ExportError> {
        let ts = s.split(',').map(|t| self.vtype(t)).collect::<Result<Vec<_>, _>>()?;
        ts.try_into()
            .map_err(|_| self.err(format!("expected {N} vertex types in '{s}'")))
    }

    fn strand_ref(&self, s: &str) -> Result<StrandRef, ExportError> {
        let (e, i) = s
            .rsplit_once(':')
            .ok_or_else(|| self.err(format!("expected <edge>:<i>, found '{s}'")))?;
        let index = i.parse().map_err(|_| self.err(format!("invalid index '{i}'")))?;
        Ok(StrandRef {
            edge: e.to_string(),
            index,
        })
    }

    fn face(&self, s: &str) -> Result<FaceRef, ExportError> {
        let bad = || self.err(format!("invalid face reference '{s}'"));
        let (cell, label) = s.split_once('.').ok_or_else(bad)?;
        let side = |t: &str| match t {
            "U" => Ok(Side::U),
            "D" => Ok(Side::D),
            _ => Err(bad()),
        };
        if let Some(rest) = label.strip_prefix('f') {
            let (slot, sd) = rest.split_once('-').ok_or_else(bad)?;
            return Ok(FaceRef::Fin {
                vertex: cell.to_string(),
                slot: slot.parse().map_err(|_| bad())?,
                side: side(sd)?,
            });
        }
        let parts: Vec<&str> = label.split('-').collect();
        let [sd, role, end] = parts[..] else { return Err(bad()) };
        Ok(FaceRef::Oct {
            crossing: cell.to_string(),
            side: side(sd)?,
            role: match role {
                "over" => Role::Over,
                "under" => Role::Under,
                _ => return Err(bad()),
            },
            end: match end {
                "in" => End::In,
                "out" => End::Out,
                _ => return Err(bad()),
            },
        })
    }
}

/// Read back an [`OctComplex::export`]. The result is not validated.
pub fn parse_export(text: &str) -> Result<OctComplex, ExportError> {
    let mut classes = None;
    let mut strands = Vec::new();
    let mut octahedra = Vec::new();
    let mut starfruits = Vec::new();
    let mut pairs = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = Line {
            n: i + 1,
            toks: raw.split('#').next().unwrap_or("").split_whitespace().collect(),
        };
        let Some(&head) = line.toks.first() else { continue };
        match head {
            "classes" => {
                line.arity(3)?;
                if classes.is_some() {
                    return Err(line.err("classes given twice"));
                }
                classes = Some((line.vtype(line.field(1, "U")?)?, line.vtype(line.field(2, "D")?)?));
            }
            "strand" => {
                line.arity(5)?;
                let closed = match line.toks[3] {
                    "loop" => true,
                    "open" => false,
                    t => return Err(line.err(format!("expected open or loop, found '{t}'"))),
                };
                strands.push(Strand {
                    edge: line.toks[1].to_string(),
                    passages: line.count(2, "passages")?,
                    closed,
                    component_type: line.vtype(line.field(4, "type")?)?,
                });
            }
            "oct" => {
                line.arity(5)?;
                octahedra.push(OctCell {
                    crossing: line.toks[1].to_string(),
                    types: line.vtypes(line.field(2, "types")?)?,
                    over: line.strand_ref(line.field(3, "over")?)?,
                    under: line.strand_ref(line.field(4, "under")?)?,
                });
            }
            "starfruit" => {
                line.arity(5)?;
                let r = line.count(2, "fins")?;
                let fins = line
                    .field(4, "edges")?
                    .split(',')
                    .filter(|s| !s.is_empty())
                    .map(|f| {
                        let (edge, end) = f
                            .rsplit_once(':')
                            .ok_or_else(|| line.err(format!("invalid fin '{f}'")))?;
                        let end = match end {
                            "from" => EdgeEnd::From,
                            "to" => EdgeEnd::To,
                            _ => return Err(line.err(format!("invalid fin end '{end}'"))),
                        };
                        Ok(Fin {
                            edge: edge.to_string(),
                            end,
                        })
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                if fins.len() != r {
                    return Err(line.err(format!("fins={r} but {} edges listed", fins.len())));
                }
                starfruits.push(Starfruit {
                    vertex: line.toks[1].to_string(),
                    fins,
                    types: line.vtypes(line.field(3, "types")?)?,
                });
            }
            "pair" => {
                line.arity(4)?;
                pairs.push(FacePair {
                    a: line.face(line.toks[1])?,
                    b: line.face(line.toks[2])?,
                    arc: line.strand_ref(line.field(3, "arc")?)?,
                });
            }
            other => return Err(line.err(format!("unknown record '{other}'"))),
        }
    }
    let (u_type, d_type) = classes.ok_or(ExportError {
        line: 0,
        msg: "missing classes record".into(),
    })?;
    Ok(OctComplex {
        u_type,
        d_type,
        strands,
        octahedra,
        starfruits,
        pairs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn face_refs_round_trip() {
        let l = Line { n: 1, toks: vec![] };
        for s in ["c1.U-over-in", "c1.D-under-out", "v.f0-U", "v.f12-D"] {
            assert_eq!(l.face(s).unwrap().to_string(), s);
        }
        for s in ["c1", "c1.X-over-in", "c1.U-over", "v.f-U", "v.fx-U"] {
            assert!(l.face(s).is_err(), "{s}");
        }
    }

    #[test]
    fn rejects_malformed_records() {
        assert!(parse_export("strand e passages=1 open type=F\n").is_err());
        assert!(parse_export("classes U=F D=Q\n").is_err());
        assert!(parse_export("classes U=F D=F\nstarfruit v fins=2 types=F,F,H edges=e:from\n").is_err());
        assert!(parse_export("classes U=F D=F\noct c types=F,F over=e:0 under=e:1\n").is_err());
    }
}
