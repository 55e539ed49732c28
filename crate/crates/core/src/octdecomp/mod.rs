//! Generalized octahedral decomposition of a spatial-graph exterior.
//!
//! One octahedron sits at each crossing and one starfruit (a fin per
//! incident half-edge) at each graph vertex. Faces are glued by walking
//! every edge of the diagram through its sequence of sites.
//!
//! Face convention. An octahedron has 8 faces labelled by side of the
//! projection (`U` above, `D` below), strand (`over`, `under`) and end of
//! that strand (`in`, `out`, relative to the edge orientation). A fin has
//! two sides, `U` and `D`. Along each arc between consecutive sites on an
//! edge, the `out` face of the earlier site glues to the `in` face of the
//! later site, `U` to `U` and `D` to `D`. The identifications at a crossing
//! (the two `D`-equatorial edges to the under apex, the two `U`-equatorial
//! edges to the over apex) glue edges, not faces, so all `8·oct + 2·fins`
//! faces take part in the pairing. The labelling is combinatorial; it is
//! not claimed to match any particular figure of the geometric gluing.

mod export;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::diagram::{EdgeEnds, GraphDiagram, Role, VertexType};

pub use export::{parse_export, ExportError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    U,
    D,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum End {
    In,
    Out,
}

pub const SIDES: [Side; 2] = [Side::U, Side::D];

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FaceRef {
    Oct {
        crossing: String,
        side: Side,
        role: Role,
        end: End,
    },
    Fin {
        vertex: String,
        slot: usize,
        side: Side,
    },
}

impl fmt::Display for FaceRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |s: &Side| if *s == Side::U { "U" } else { "D" };
        match self {
            FaceRef::Oct {
                crossing,
                side: s,
                role,
                end,
            } => write!(
                f,
                "{crossing}.{}-{}-{}",
                side(s),
                role.as_str(),
                if *end == End::In { "in" } else { "out" }
            ),
            FaceRef::Fin { vertex, slot, side: s } => write!(f, "{vertex}.f{slot}-{}", side(s)),
        }
    }
}

/// A passage position: the `index`-th site along `edge`, or an arc index.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StrandRef {
    pub edge: String,
    pub index: usize,
}

impl fmt::Display for StrandRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.edge, self.index)
    }
}

/// Octahedron vertex slots.
pub const OVER_APEX: usize = 0;
pub const UNDER_APEX: usize = 1;
pub const U_EQUATORIAL: [usize; 2] = [2, 3];
pub const D_EQUATORIAL: [usize; 2] = [4, 5];

/// Edges of the octahedron (as slot pairs) identified by the construction:
/// the two `D`-equatorial edges to the under apex, and the two
/// `U`-equatorial edges to the over apex.
pub const INTERNAL_IDENTIFICATIONS: [[(usize, usize); 2]; 2] = [
    [(D_EQUATORIAL[0], UNDER_APEX), (D_EQUATORIAL[1], UNDER_APEX)],
    [(U_EQUATORIAL[0], OVER_APEX), (U_EQUATORIAL[1], OVER_APEX)],
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OctCell {
    pub crossing: String,
    /// Types of slots over apex, under apex, U-equatorial ×2, D-equatorial ×2.
    pub types: [VertexType; 6],
    pub over: StrandRef,
    pub under: StrandRef,
}

impl OctCell {
    pub fn faces(&self) -> impl Iterator<Item = FaceRef> + '_ {
        SIDES.into_iter().flat_map(move |side| {
            [Role::Over, Role::Under].into_iter().flat_map(move |role| {
                [End::In, End::Out].into_iter().map(move |end| FaceRef::Oct {
                    crossing: self.crossing.clone(),
                    side,
                    role,
                    end,
                })
            })
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EdgeEnd {
    From,
    To,
}

/// The half-edge a fin sits on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fin {
    pub edge: String,
    pub end: EdgeEnd,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Starfruit {
    pub vertex: String,
    /// Fin `i` sits at rotation slot `i`.
    pub fins: Vec<Fin>,
    /// Types of the classes U, D and the graph-boundary vertex.
    pub types: [VertexType; 3],
}

impl Starfruit {
    pub fn faces(&self) -> impl Iterator<Item = FaceRef> + '_ {
        (0..self.fins.len()).flat_map(move |slot| {
            SIDES.into_iter().map(move |side| FaceRef::Fin {
                vertex: self.vertex.clone(),
                slot,
                side,
            })
        })
    }
}

/// An edge of the diagram as seen by the decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Strand {
    pub edge: String,
    pub passages: usize,
    pub closed: bool,
    /// Type of the graph-boundary class for this edge's component.
    pub component_type: VertexType,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct FacePair {
    pub a: FaceRef,
    pub b: FaceRef,
    /// Arc `index` of `edge`: between site `index` and the next site.
    pub arc: StrandRef,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OctComplex {
    pub u_type: VertexType,
    pub d_type: VertexType,
    pub strands: Vec<Strand>,
    pub octahedra: Vec<OctCell>,
    pub starfruits: Vec<Starfruit>,
    pub pairs: Vec<FacePair>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecomposeError {
    #[error("crossing-free cycle {}: a cycle of the graph meeting no crossing leaves an exterior that is not hyperbolic", .edges.join(","))]
    CrossingFreeCycle { edges: Vec<String> },
    #[error("diagram is empty")]
    Empty,
    #[error("component '{edge}' is a closed curve with no crossings (unknotted circle), which has no decomposition")]
    UnknottedComponent { edge: String },
}

#[derive(Clone, Debug)]
enum Site {
    Fin { vertex: String, slot: usize },
    Pass { crossing: String, role: Role },
}

impl Site {
    fn face(&self, side: Side, end: End) -> FaceRef {
        match self {
            Site::Fin { vertex, slot } => FaceRef::Fin {
                vertex: vertex.clone(),
                slot: *slot,
                side,
            },
            Site::Pass { crossing, role } => FaceRef::Oct {
                crossing: crossing.clone(),
                side,
                role: *role,
                end,
            },
        }
    }
}

/// Pairs produced by walking one strand through its sites.
fn walk(edge: &str, sites: &[Site], closed: bool) -> Vec<FacePair> {
    let arcs = if closed {
        sites.len()
    } else {
        sites.len().saturating_sub(1)
    };
    let mut out = Vec::with_capacity(2 * arcs);
    for i in 0..arcs {
        let (s, t) = (&sites[i], &sites[(i + 1) % sites.len()]);
        for side in SIDES {
            out.push(FacePair {
                a: s.face(side, End::Out),
                b: t.face(side, End::In),
                arc: StrandRef {
                    edge: edge.to_string(),
                    index: i,
                },
            });
        }
    }
    out
}

pub fn decompose(d: &GraphDiagram) -> Result<OctComplex, DecomposeError> {
    if d.edge_count() == 0 {
        return Err(DecomposeError::Empty);
    }
    if let Some(edges) = d.find_crossing_free_cycle() {
        return Err(DecomposeError::CrossingFreeCycle { edges });
    }
    let classes = d.classify_vertices();
    let mut edge_type = BTreeMap::new();
    for (comp, t) in &classes.components {
        for e in &comp.edges {
            edge_type.insert(e.clone(), *t);
        }
    }
    let sites = d.passage_sites();
    let strand_ref = |c: &str, r: Role| {
        let (e, i) = sites[&(c, r)];
        StrandRef {
            edge: e.to_string(),
            index: i,
        }
    };
    let (u, dt) = (classes.u, classes.d);

    let octahedra = d
        .crossings()
        .map(|c| {
            let over = strand_ref(c, Role::Over);
            let under = strand_ref(c, Role::Under);
            OctCell {
                crossing: c.to_string(),
                types: [edge_type[&over.edge], edge_type[&under.edge], u, u, dt, dt],
                over,
                under,
            }
        })
        .collect();

    let mut starfruits = Vec::new();
    for v in d.vertices() {
        let fins = v
            .rotation
            .iter()
            .enumerate()
            .map(|(slot, e)| {
                let edge = d.edge(e).expect("validated rotation");
                let end = match &edge.ends {
                    EdgeEnds::Open { from, .. } if from.vertex == v.id && from.slot == slot => EdgeEnd::From,
                    _ => EdgeEnd::To,
                };
                Fin { edge: e.clone(), end }
            })
            .collect();
        starfruits.push(Starfruit {
            vertex: v.id.clone(),
            fins,
            types: [u, dt, edge_type[&v.rotation[0]]],
        });
    }

    let mut strands = Vec::new();
    let mut pairs = Vec::new();
    for e in d.edges() {
        let passes = e.passages.iter().map(|p| Site::Pass {
            crossing: p.crossing.clone(),
            role: p.role,
        });
        let closed = e.is_loop();
        let seq: Vec<Site> = match &e.ends {
            EdgeEnds::Loop => {
                if e.passages.is_empty() {
                    return Err(DecomposeError::UnknottedComponent { edge: e.id.clone() });
                }
                passes.collect()
            }
            EdgeEnds::Open { from, to } => std::iter::once(Site::Fin {
                vertex: from.vertex.clone(),
                slot: from.slot,
            })
            .chain(passes)
            .chain(std::iter::once(Site::Fin {
                vertex: to.vertex.clone(),
                slot: to.slot,
            }))
            .collect(),
        };
        pairs.extend(walk(&e.id, &seq, closed));
        strands.push(Strand {
            edge: e.id.clone(),
            passages: e.passages.len(),
            closed,
            component_type: edge_type[&e.id],
        });
    }

    Ok(OctComplex {
        u_type: u,
        d_type: dt,
        strands,
        octahedra,
        starfruits,
        pairs,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Finding {
    Empty,
    /// A glueable face in no pair, or in more than one.
    PairingNotInvolution {
        face: String,
        occurrences: usize,
    },
    /// A pair naming a face that no cell has.
    UnknownFace {
        face: String,
    },
    FixedPoint {
        face: String,
    },
    /// A pair not between the faces facing each other across its arc, or
    /// an arc left unglued.
    ArcMismatch {
        detail: String,
    },
    /// Cells and strands disagree about the sites along an edge.
    SiteMismatch {
        detail: String,
    },
    TypeMismatch {
        cell: String,
        detail: String,
    },
    /// Starfruits glued in a closed chain with no octahedron between.
    FinCycle {
        vertices: Vec<String>,
    },
}

impl fmt::Display for Finding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Finding::Empty => write!(f, "empty: complex has no cells"),
            Finding::PairingNotInvolution { face, occurrences } => {
                write!(f, "pairing-not-involution: face {face} appears in {occurrences} pairs")
            }
            Finding::UnknownFace { face } => write!(f, "unknown-face: {face}"),
            Finding::FixedPoint { face } => write!(f, "fixed-point: {face} paired with itself"),
            Finding::ArcMismatch { detail } => write!(f, "arc-mismatch: {detail}"),
            Finding::SiteMismatch { detail } => write!(f, "site-mismatch: {detail}"),
            Finding::TypeMismatch { cell, detail } => write!(f, "type-mismatch: {cell}: {detail}"),
            Finding::FinCycle { vertices } => {
                write!(
                    f,
                    "fin-cycle: fins glue in a closed chain through {}",
                    vertices.join(",")
                )
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub octahedra: usize,
    pub starfruits: usize,
    pub fins: usize,
    pub faces: usize,
    pub pairs: usize,
    pub findings: Vec<Finding>,
}

impl ValidationReport {
    pub fn pass(&self) -> bool {
        self.findings.is_empty()
    }
}

impl OctComplex {
    pub fn fin_count(&self) -> usize {
        self.starfruits.iter().map(|s| s.fins.len()).sum()
    }

    /// Every face taking part in the pairing, in cell order.
    pub fn glueable_faces(&self) -> Vec<FaceRef> {
        let octs = self.octahedra.iter().flat_map(OctCell::faces);
        let fins = self.starfruits.iter().flat_map(Starfruit::faces);
        octs.chain(fins).collect()
    }

    /// The face glued to `face`, if any.
    pub fn partner(&self, face: &FaceRef) -> Option<&FaceRef> {
        self.pairs.iter().find_map(|p| {
            if p.a == *face {
                Some(&p.b)
            } else if p.b == *face {
                Some(&p.a)
            } else {
                None
            }
        })
    }

    pub fn validate(&self) -> ValidationReport {
        let mut findings = Vec::new();
        let faces = self.glueable_faces();
        if self.octahedra.is_empty() && self.starfruits.is_empty() {
            findings.push(Finding::Empty);
        }

        // Perfect fixed-point-free matching.
        let mut seen: BTreeMap<&FaceRef, usize> = faces.iter().map(|f| (f, 0)).collect();
        for p in &self.pairs {
            if p.a == p.b {
                findings.push(Finding::FixedPoint { face: p.a.to_string() });
            }
            for f in [&p.a, &p.b] {
                match seen.get_mut(f) {
                    Some(n) => *n += 1,
                    None => findings.push(Finding::UnknownFace { face: f.to_string() }),
                }
            }
        }
        for (f, n) in &seen {
            if *n != 1 {
                findings.push(Finding::PairingNotInvolution {
                    face: f.to_string(),
                    occurrences: *n,
                });
            }
        }

        // Sites along each strand, recovered from the cells.
        let mut sites: BTreeMap<(String, usize), Site> = BTreeMap::new();
        let mut fin_sites: BTreeMap<(String, EdgeEnd), Site> = BTreeMap::new();
        for o in &self.octahedra {
            for (role, at) in [(Role::Over, &o.over), (Role::Under, &o.under)] {
                let site = Site::Pass {
                    crossing: o.crossing.clone(),
                    role,
                };
                if sites.insert((at.edge.clone(), at.index), site).is_some() {
                    findings.push(Finding::SiteMismatch {
                        detail: format!("two passages at {at}"),
                    });
                }
            }
        }
        for s in &self.starfruits {
            for (slot, fin) in s.fins.iter().enumerate() {
                let site = Site::Fin {
                    vertex: s.vertex.clone(),
                    slot,
                };
                if fin_sites.insert((fin.edge.clone(), fin.end), site).is_some() {
                    findings.push(Finding::SiteMismatch {
                        detail: format!("two fins on the same end of {}", fin.edge),
                    });
                }
            }
        }
        let strand_ids: BTreeSet<&str> = self.strands.iter().map(|s| s.edge.as_str()).collect();
        for (e, i) in sites.keys() {
            if !strand_ids.contains(e.as_str()) {
                findings.push(Finding::SiteMismatch {
                    detail: format!("passage on unknown strand {e}:{i}"),
                });
            }
        }
        for (e, _) in fin_sites.keys() {
            if !strand_ids.contains(e.as_str()) {
                findings.push(Finding::SiteMismatch {
                    detail: format!("fin on unknown strand {e}"),
                });
            }
        }

        let mut expected = Vec::new();
        for s in &self.strands {
            let mut seq = Vec::new();
            let ends = [EdgeEnd::From, EdgeEnd::To].map(|end| fin_sites.get(&(s.edge.clone(), end)));
            if s.closed {
                if ends.iter().any(Option::is_some) {
                    findings.push(Finding::SiteMismatch {
                        detail: format!("closed strand {} has fins", s.edge),
                    });
                }
                if s.passages == 0 {
                    findings.push(Finding::SiteMismatch {
                        detail: format!("closed strand {} has no passages", s.edge),
                    });
                }
            } else {
                match ends[0] {
                    Some(site) => seq.push(site.clone()),
                    None => findings.push(Finding::SiteMismatch {
                        detail: format!("strand {} has no start fin", s.edge),
                    }),
                }
            }
            for i in 0..s.passages {
                match sites.get(&(s.edge.clone(), i)) {
                    Some(site) => seq.push(site.clone()),
                    None => findings.push(Finding::SiteMismatch {
                        detail: format!("no passage at {}:{i}", s.edge),
                    }),
                }
            }
            let extra = sites
                .range((s.edge.clone(), s.passages)..)
                .take_while(|((e, _), _)| *e == s.edge)
                .count();
            if extra > 0 {
                findings.push(Finding::SiteMismatch {
                    detail: format!("strand {} has {extra} passages beyond its count", s.edge),
                });
            }
            if !s.closed {
                match ends[1] {
                    Some(site) => seq.push(site.clone()),
                    None => findings.push(Finding::SiteMismatch {
                        detail: format!("strand {} has no end fin", s.edge),
                    }),
                }
            }
            expected.extend(walk(&s.edge, &seq, s.closed));
        }
        let key = |p: &FacePair| {
            let (a, b) = if p.a <= p.b { (&p.a, &p.b) } else { (&p.b, &p.a) };
            (p.arc.clone(), a.clone(), b.clone())
        };
        let want: BTreeSet<_> = expected.iter().map(key).collect();
        let have: BTreeSet<_> = self.pairs.iter().map(key).collect();
        for (arc, a, b) in have.difference(&want) {
            findings.push(Finding::ArcMismatch {
                detail: format!("pair {a} {b} does not face across arc {arc}"),
            });
        }
        for (arc, a, b) in want.difference(&have) {
            findings.push(Finding::ArcMismatch {
                detail: format!("missing pair {a} {b} across arc {arc}"),
            });
        }

        // Vertex-type tags.
        let comp: BTreeMap<&str, VertexType> = self
            .strands
            .iter()
            .map(|s| (s.edge.as_str(), s.component_type))
            .collect();
        for o in &self.octahedra {
            let t = o.types;
            let apexes = [comp.get(o.over.edge.as_str()), comp.get(o.under.edge.as_str())];
            if apexes != [Some(&t[OVER_APEX]), Some(&t[UNDER_APEX])] {
                findings.push(Finding::TypeMismatch {
                    cell: o.crossing.clone(),
                    detail: "apex type differs from its strand's component".into(),
                });
            }
            if U_EQUATORIAL.iter().any(|&i| t[i] != self.u_type) || D_EQUATORIAL.iter().any(|&i| t[i] != self.d_type) {
                findings.push(Finding::TypeMismatch {
                    cell: o.crossing.clone(),
                    detail: "equatorial type differs from the U/D class".into(),
                });
            }
            for [(a0, b0), (a1, b1)] in INTERNAL_IDENTIFICATIONS {
                if t[a0] != t[a1] || t[b0] != t[b1] {
                    findings.push(Finding::TypeMismatch {
                        cell: o.crossing.clone(),
                        detail: "identified edges join slots of different types".into(),
                    });
                }
            }
        }
        for s in &self.starfruits {
            let graph = s.fins.first().and_then(|f| comp.get(f.edge.as_str()));
            if s.types[0] != self.u_type || s.types[1] != self.d_type || graph != Some(&s.types[2]) {
                findings.push(Finding::TypeMismatch {
                    cell: s.vertex.clone(),
                    detail: "starfruit types differ from the U/D/component classes".into(),
                });
            }
        }

        if let Some(vertices) = self.fin_cycle() {
            findings.push(Finding::FinCycle { vertices });
        }

        ValidationReport {
            octahedra: self.octahedra.len(),
            starfruits: self.starfruits.len(),
            fins: self.fin_count(),
            faces: faces.len(),
            pairs: self.pairs.len(),
            findings,
        }
    }

    /// Starfruits on a closed chain of fin-to-fin gluings, if one exists.
    fn fin_cycle(&self) -> Option<Vec<String>> {
        let mut parent: BTreeMap<&str, &str> = BTreeMap::new();
        fn root<'a>(parent: &BTreeMap<&'a str, &'a str>, mut x: &'a str) -> &'a str {
            while let Some(&p) = parent.get(x) {
                x = p;
            }
            x
        }
        let mut arcs = BTreeSet::new();
        for p in &self.pairs {
            let (FaceRef::Fin { vertex: a, .. }, FaceRef::Fin { vertex: b, .. }) = (&p.a, &p.b) else {
                continue;
            };
            // U and D pairs share an arc; one link per arc.
            if !arcs.insert(&p.arc) {
                continue;
            }
            let (ra, rb) = (root(&parent, a), root(&parent, b));
            if ra == rb {
                let mut vs: Vec<String> = parent
                    .keys()
                    .copied()
                    .chain([a.as_str(), b.as_str()])
                    .filter(|v| root(&parent, v) == ra)
                    .map(str::to_string)
                    .collect();
                vs.sort();
                vs.dedup();
                return Some(vs);
            }
            parent.insert(ra, rb);
        }
        None
    }

    pub fn export(&self) -> String {
        export::export(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse;

    const TREFOIL: &str = "ambient s3
crossing c1
crossing c2
crossing c3
edge k loop
edge k passes c1:over c2:under c3:over c1:under c2:over c3:under
";

    const THETA: &str = "ambient s3
crossing a
crossing b
crossing c
vertex p e1 e2 e3
vertex q e3 e2 e1
edge e1 from p.0 to q.2
edge e1 passes a:over c:under
edge e2 from p.1 to q.1
edge e2 passes a:under b:over
edge e3 from p.2 to q.0
edge e3 passes b:under c:over
";

    #[test]
    fn trefoil_complex() {
        let c = decompose(&parse(TREFOIL).unwrap()).unwrap();
        assert_eq!((c.octahedra.len(), c.starfruits.len()), (3, 0));
        let r = c.validate();
        assert!(r.pass(), "{:?}", r.findings);
        assert_eq!((r.faces, r.pairs), (24, 12));
        let face = FaceRef::Oct {
            crossing: "c3".into(),
            side: Side::U,
            role: Role::Under,
            end: End::Out,
        };
        assert_eq!(c.partner(&face).unwrap().to_string(), "c1.U-over-in");
        assert!(c.octahedra.iter().all(|o| o.types
            == [
                VertexType::Ideal,
                VertexType::Ideal,
                VertexType::Finite,
                VertexType::Finite,
                VertexType::Finite,
                VertexType::Finite
            ]));
    }

    #[test]
    fn theta_complex() {
        let c = decompose(&parse(THETA).unwrap()).unwrap();
        assert_eq!((c.octahedra.len(), c.starfruits.len(), c.fin_count()), (3, 2, 6));
        let r = c.validate();
        assert!(r.pass(), "{:?}", r.findings);
        assert_eq!(r.faces, 8 * 3 + 2 * 6);
        assert_eq!(r.faces, 2 * r.pairs);
        let fin = FaceRef::Fin {
            vertex: "q".into(),
            slot: 2,
            side: Side::D,
        };
        assert_eq!(c.partner(&fin).unwrap().to_string(), "c.D-under-out");
    }

    #[test]
    fn obstructions() {
        let flat = "ambient s3\nvertex p e1 e2 e3\nvertex q e3 e2 e1\n\
            edge e1 from p.0 to q.2\nedge e2 from p.1 to q.1\nedge e3 from p.2 to q.0\n";
        assert!(matches!(
            decompose(&parse(flat).unwrap()),
            Err(DecomposeError::CrossingFreeCycle { .. })
        ));
        let unknot = "ambient s3\nedge k loop\n";
        assert!(matches!(
            decompose(&parse(unknot).unwrap()),
            Err(DecomposeError::CrossingFreeCycle { .. })
        ));
    }

    #[test]
    fn dropped_pair_breaks_involution() {
        let mut c = decompose(&parse(TREFOIL).unwrap()).unwrap();
        c.pairs.pop();
        let r = c.validate();
        assert!(r
            .findings
            .iter()
            .any(|f| matches!(f, Finding::PairingNotInvolution { occurrences: 0, .. })));
    }

    #[test]
    fn internal_identifications_join_equatorials_to_apexes() {
        for [(a, x), (b, y)] in INTERNAL_IDENTIFICATIONS {
            assert_eq!(x, y);
            assert_ne!(a, b);
        }
    }
}
