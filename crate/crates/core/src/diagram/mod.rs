//! Spatial-graph diagrams in S³ or a thickened surface `F × I`.
//!
//! A diagram records combinatorics only: rotation systems at vertices, the
//! ordered crossing passages along each edge, and the over/under role of
//! each passage. Whether the rotation system actually embeds in the stated
//! surface is not checked; the diagram is taken as a faithful projection.
//! Crossing counts are those of the supplied diagram, an upper bound for
//! the crossing number of the graph.

mod parse;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use thiserror::Error;

pub use parse::parse;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AmbientSpace {
    S3,
    Thickened { genus: u32, boundary: u32 },
}

/// The reference surface `F`, as far as vertex classification cares.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SurfaceKind {
    Sphere,
    Disk,
    Annulus,
    Torus,
    /// Negative Euler characteristic.
    Hyperbolic,
}

impl AmbientSpace {
    /// `χ(F) = 2 - 2g - b`; `None` for S³.
    pub fn euler_characteristic(&self) -> Option<i64> {
        match *self {
            AmbientSpace::S3 => None,
            AmbientSpace::Thickened { genus, boundary } => Some(2 - 2 * i64::from(genus) - i64::from(boundary)),
        }
    }

    pub fn surface_kind(&self) -> SurfaceKind {
        match *self {
            AmbientSpace::S3 | AmbientSpace::Thickened { genus: 0, boundary: 0 } => SurfaceKind::Sphere,
            AmbientSpace::Thickened { genus: 0, boundary: 1 } => SurfaceKind::Disk,
            AmbientSpace::Thickened { genus: 0, boundary: 2 } => SurfaceKind::Annulus,
            AmbientSpace::Thickened { genus: 1, boundary: 0 } => SurfaceKind::Torus,
            AmbientSpace::Thickened { .. } => SurfaceKind::Hyperbolic,
        }
    }
}

impl fmt::Display for AmbientSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AmbientSpace::S3 => write!(f, "s3"),
            AmbientSpace::Thickened { genus, boundary } => {
                write!(f, "thickened genus={genus} boundary={boundary}")
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Role {
    Over,
    Under,
}

impl Role {
    pub fn as_str(self) -> &'static str {
        match self {
            Role::Over => "over",
            Role::Under => "under",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Passage {
    pub crossing: String,
    pub role: Role,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Endpoint {
    pub vertex: String,
    pub slot: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum EdgeEnds {
    Open {
        from: Endpoint,
        to: Endpoint,
    },
    /// A closed curve with no vertices: a link component.
    Loop,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub id: String,
    pub ends: EdgeEnds,
    /// Crossings met along the edge, in order from `from` to `to`.
    pub passages: Vec<Passage>,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        matches!(self.ends, EdgeEnds::Loop)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    pub id: String,
    /// Edge id at each slot, in cyclic order around the vertex.
    pub rotation: Vec<String>,
}

impl Vertex {
    pub fn degree(&self) -> usize {
        self.rotation.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("{}missing ambient declaration", at(*.line))]
    MissingAmbient { line: Option<usize> },
    #[error("{}id '{id}' declared more than once", at(*.line))]
    Duplicate { line: Option<usize>, id: String },
    #[error("{}reference to undeclared {kind} '{id}'", at(*.line))]
    Dangling {
        line: Option<usize>,
        kind: &'static str,
        id: String,
    },
    #[error("{}crossing '{crossing}' has {over} over and {under} under passages (need one of each)", at(*.line))]
    CrossingPassages {
        line: Option<usize>,
        crossing: String,
        over: usize,
        under: usize,
    },
    #[error("{}vertex '{vertex}' has degree {degree}; vertices need degree at least 3", at(*.line))]
    LowDegree {
        line: Option<usize>,
        vertex: String,
        degree: usize,
    },
    #[error("{}edge '{edge}' has no endpoints; use `from`/`to` or `loop`", at(*.line))]
    MissingEndpoints { line: Option<usize>, edge: String },
    #[error("{}rotation mismatch at {vertex}.{slot}: {msg}", at(*.line))]
    Rotation {
        line: Option<usize>,
        vertex: String,
        slot: usize,
        msg: String,
    },
}

fn at(line: Option<usize>) -> String {
    line.map(|l| format!("line {l}: ")).unwrap_or_default()
}

/// A validated diagram. Elements are keyed and iterated by id.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphDiagram {
    ambient: AmbientSpace,
    vertices: BTreeMap<String, Vertex>,
    edges: BTreeMap<String, Edge>,
    crossings: BTreeSet<String>,
}

impl GraphDiagram {
    /// Assemble and validate a diagram from its parts.
    pub fn new(
        ambient: AmbientSpace,
        vertices: Vec<Vertex>,
        edges: Vec<Edge>,
        crossings: Vec<String>,
    ) -> Result<Self, DiagramError> {
        Self::build(ambient, vertices, edges, crossings, &HashMap::new())
    }

    /// `lines` maps ids to the source line that declared them, for errors.
    pub(crate) fn build(
        ambient: AmbientSpace,
        vertices: Vec<Vertex>,
        edges: Vec<Edge>,
        crossings: Vec<String>,
        lines: &HashMap<String, usize>,
    ) -> Result<Self, DiagramError> {
        let line = |id: &str| lines.get(id).copied();
        let mut seen = BTreeSet::new();
        let ids = vertices
            .iter()
            .map(|v| &v.id)
            .chain(edges.iter().map(|e| &e.id))
            .chain(crossings.iter());
        for id in ids {
            if !seen.insert(id.clone()) {
                return Err(DiagramError::Duplicate {
                    line: line(id),
                    id: id.clone(),
                });
            }
        }
        let vertices: BTreeMap<String, Vertex> = vertices.into_iter().map(|v| (v.id.clone(), v)).collect();
        let edges: BTreeMap<String, Edge> = edges.into_iter().map(|e| (e.id.clone(), e)).collect();
        let crossings: BTreeSet<String> = crossings.into_iter().collect();

        for v in vertices.values() {
            for e in &v.rotation {
                if !edges.contains_key(e) {
                    return Err(DiagramError::Dangling {
                        line: line(&v.id),
                        kind: "edge",
                        id: e.clone(),
                    });
                }
            }
        }

        let mut claimed: BTreeSet<(&str, usize)> = BTreeSet::new();
        for e in edges.values() {
            let EdgeEnds::Open { from, to } = &e.ends else { continue };
            for end in [from, to] {
                let Some(v) = vertices.get(&end.vertex) else {
                    return Err(DiagramError::Dangling {
                        line: line(&e.id),
                        kind: "vertex",
                        id: end.vertex.clone(),
                    });
                };
                let rotation_error = |msg: String| DiagramError::Rotation {
                    line: line(&e.id),
                    vertex: v.id.clone(),
                    slot: end.slot,
                    msg,
                };
                match v.rotation.get(end.slot) {
                    None => return Err(rotation_error(format!("vertex has only {} slots", v.rotation.len()))),
                    Some(id) if *id != e.id => {
                        return Err(rotation_error(format!("slot lists edge '{id}', not '{}'", e.id)))
                    }
                    Some(_) => {}
                }
                if !claimed.insert((v.id.as_str(), end.slot)) {
                    return Err(rotation_error("slot used by two edge ends".into()));
                }
            }
        }
        for v in vertices.values() {
            for slot in 0..v.rotation.len() {
                if !claimed.contains(&(v.id.as_str(), slot)) {
                    return Err(DiagramError::Rotation {
                        line: line(&v.id),
                        vertex: v.id.clone(),
                        slot,
                        msg: format!("no edge end of '{}' attaches here", v.rotation[slot]),
                    });
                }
            }
            if v.degree() < 3 {
                return Err(DiagramError::LowDegree {
                    line: line(&v.id),
                    vertex: v.id.clone(),
                    degree: v.degree(),
                });
            }
        }

        let mut roles: BTreeMap<&str, (usize, usize)> = crossings.iter().map(|c| (c.as_str(), (0, 0))).collect();
        for e in edges.values() {
            for p in &e.passages {
                let Some(count) = roles.get_mut(p.crossing.as_str()) else {
                    return Err(DiagramError::Dangling {
                        line: line(&format!("passes:{}", e.id)).or(line(&e.id)),
                        kind: "crossing",
                        id: p.crossing.clone(),
                    });
                };
                match p.role {
                    Role::Over => count.0 += 1,
                    Role::Under => count.1 += 1,
                }
            }
        }
        for (c, &(over, under)) in &roles {
            if (over, under) != (1, 1) {
                return Err(DiagramError::CrossingPassages {
                    line: line(c),
                    crossing: (*c).to_string(),
                    over,
                    under,
                });
            }
        }

        Ok(GraphDiagram {
            ambient,
            vertices,
            edges,
            crossings,
        })
    }

    pub fn ambient(&self) -> AmbientSpace {
        self.ambient
    }

    pub fn vertices(&self) -> impl Iterator<Item = &Vertex> {
        self.vertices.values()
    }

    pub fn edges(&self) -> impl Iterator<Item = &Edge> {
        self.edges.values()
    }

    pub fn crossings(&self) -> impl Iterator<Item = &str> {
        self.crossings.iter().map(String::as_str)
    }

    pub fn vertex(&self, id: &str) -> Option<&Vertex> {
        self.vertices.get(id)
    }

    pub fn edge(&self, id: &str) -> Option<&Edge> {
        self.edges.get(id)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Crossings of this diagram (not minimised).
    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    /// Where each (crossing, role) passage sits: edge id and index along it.
    pub fn passage_sites(&self) -> BTreeMap<(&str, Role), (&str, usize)> {
        let mut out = BTreeMap::new();
        for e in self.edges.values() {
            for (i, p) in e.passages.iter().enumerate() {
                out.insert((p.crossing.as_str(), p.role), (e.id.as_str(), i));
            }
        }
        out
    }

    /// Connected components of the underlying graph, ordered by their
    /// smallest member id. A loop edge is a component of its own.
    pub fn components(&self) -> Vec<Component> {
        let mut uf: BTreeMap<&str, &str> = BTreeMap::new();
        fn find<'a>(uf: &mut BTreeMap<&'a str, &'a str>, x: &'a str) -> &'a str {
            let mut root = x;
            while let Some(&p) = uf.get(root) {
                if p == root {
                    break;
                }
                root = p;
            }
            uf.insert(x, root);
            root
        }
        for v in self.vertices.keys() {
            uf.insert(v, v);
        }
        for e in self.edges.values() {
            match &e.ends {
                EdgeEnds::Loop => {
                    uf.insert(&e.id, &e.id);
                }
                EdgeEnds::Open { from, to } => {
                    let (a, b) = (find(&mut uf, &from.vertex), find(&mut uf, &to.vertex));
                    if a != b {
                        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                        uf.insert(hi, lo);
                    }
                }
            }
        }
        let mut groups: BTreeMap<&str, Component> = BTreeMap::new();
        for v in self.vertices.keys() {
            let r = find(&mut uf, v);
            groups.entry(r).or_default().vertices.push(v.clone());
        }
        for e in self.edges.values() {
            let r = match &e.ends {
                EdgeEnds::Loop => find(&mut uf, &e.id),
                EdgeEnds::Open { from, .. } => find(&mut uf, &from.vertex),
            };
            groups.entry(r).or_default().edges.push(e.id.clone());
        }
        let mut comps: Vec<Component> = groups.into_values().collect();
        comps.sort_by(|a, b| a.first_id().cmp(b.first_id()));
        comps
    }

    /// Index into [`GraphDiagram::components`] of the component holding each edge.
    pub fn edge_components(&self) -> BTreeMap<String, usize> {
        let mut out = BTreeMap::new();
        for (i, c) in self.components().iter().enumerate() {
            for e in &c.edges {
                out.insert(e.clone(), i);
            }
        }
        out
    }

    /// A cycle of the underlying multigraph none of whose edges takes part
    /// in a crossing, as a list of edge ids in traversal order.
    pub fn find_crossing_free_cycle(&self) -> Option<Vec<String>> {
        let free = self.edges.values().filter(|e| e.passages.is_empty());
        let mut parent: BTreeMap<&str, &str> = BTreeMap::new();
        let mut forest: BTreeMap<&str, Vec<(&str, &str)>> = BTreeMap::new();
        fn root<'a>(parent: &BTreeMap<&'a str, &'a str>, mut x: &'a str) -> &'a str {
            while let Some(&p) = parent.get(x) {
                x = p;
            }
            x
        }
        for e in free {
            let (a, b) = match &e.ends {
                EdgeEnds::Loop => return Some(vec![e.id.clone()]),
                EdgeEnds::Open { from, to } => (from.vertex.as_str(), to.vertex.as_str()),
            };
            if a == b {
                return Some(vec![e.id.clone()]);
            }
            let (ra, rb) = (root(&parent, a), root(&parent, b));
            if ra == rb {
                let mut path = forest_path(&forest, a, b).expect("same tree");
                path.push(e.id.clone());
                return Some(path);
            }
            parent.insert(ra, rb);
            forest.entry(a).or_default().push((b, &e.id));
            forest.entry(b).or_default().push((a, &e.id));
        }
        None
    }

    /// Assign ideal/finite/hyperideal types to the decomposition's vertex
    /// classes: the points `U` above and `D` below the projection surface,
    /// and the boundary of each graph component's neighbourhood.
    pub fn classify_vertices(&self) -> Classification {
        let ud = match self.ambient.surface_kind() {
            SurfaceKind::Sphere | SurfaceKind::Disk => VertexType::Finite,
            SurfaceKind::Annulus | SurfaceKind::Torus => VertexType::Ideal,
            SurfaceKind::Hyperbolic => VertexType::Hyperideal,
        };
        let components = self
            .components()
            .into_iter()
            .map(|c| {
                let t = if c.is_link() {
                    VertexType::Ideal
                } else {
                    VertexType::Hyperideal
                };
                (c, t)
            })
            .collect();
        Classification {
            u: ud,
            d: ud,
            components,
        }
    }

    /// Validity summary with the crossing-free cycle obstruction, if any.
    pub fn report(&self) -> DiagramReport {
        let obstructions = self
            .find_crossing_free_cycle()
            .map(|edges| vec![Obstruction::CrossingFreeCycle { edges }])
            .unwrap_or_default();
        DiagramReport {
            valid: obstructions.is_empty(),
            crossing_count: self.crossing_count(),
            obstructions,
            components: self.components(),
        }
    }

    pub fn to_text(&self) -> String {
        parse::serialize(self)
    }
}

/// Tree path between two vertices in an acyclic edge set, as edge ids.
fn forest_path(forest: &BTreeMap<&str, Vec<(&str, &str)>>, from: &str, to: &str) -> Option<Vec<String>> {
    let mut stack = vec![(from, None::<&str>, Vec::<String>::new())];
    while let Some((v, came_by, path)) = stack.pop() {
        if v == to {
            return Some(path);
        }
        for &(u, e) in forest.get(v).map(Vec::as_slice).unwrap_or(&[]) {
            if Some(e) != came_by {
                let mut p = path.clone();
                p.push(e.to_string());
                stack.push((u, Some(e), p));
            }
        }
    }
    None
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Component {
    pub vertices: Vec<String>,
    pub edges: Vec<String>,
}

impl Component {
    /// A closed curve without vertices.
    pub fn is_link(&self) -> bool {
        self.vertices.is_empty()
    }

    fn first_id(&self) -> &str {
        let v = self.vertices.first().map(String::as_str);
        let e = self.edges.first().map(String::as_str);
        match (v, e) {
            (Some(a), Some(b)) => a.min(b),
            (a, b) => a.or(b).unwrap_or(""),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VertexType {
    Finite,
    Ideal,
    Hyperideal,
}

impl VertexType {
    pub fn code(self) -> char {
        match self {
            VertexType::Finite => 'F',
            VertexType::Ideal => 'I',
            VertexType::Hyperideal => 'H',
        }
    }

    pub fn from_code(c: char) -> Option<Self> {
        match c {
            'F' => Some(VertexType::Finite),
            'I' => Some(VertexType::Ideal),
            'H' => Some(VertexType::Hyperideal),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub u: VertexType,
    pub d: VertexType,
    pub components: Vec<(Component, VertexType)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Obstruction {
    /// Edges of a cycle meeting no crossing; such exteriors are not hyperbolic.
    CrossingFreeCycle { edges: Vec<String> },
}

impl fmt::Display for Obstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Obstruction::CrossingFreeCycle { edges } => write!(
                f,
                "crossing-free cycle {}: a cycle involved in no crossings makes the exterior non-hyperbolic",
                edges.join(",")
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramReport {
    pub valid: bool,
    pub crossing_count: usize,
    pub obstructions: Vec<Obstruction>,
    pub components: Vec<Component>,
}

#[cfg(test)]
mod tests {
    use super::*;

    const TREFOIL: &str = "ambient s3
crossing a
crossing b
crossing c
edge k loop
edge k passes a:over b:under c:over a:under b:over c:under
";

    const FLAT_THETA: &str = "ambient s3
vertex p e1 e2 e3
vertex q e3 e2 e1
edge e1 from p.0 to q.2
edge e2 from p.1 to q.1
edge e3 from p.2 to q.0
";

    #[test]
    fn trefoil_counts() {
        let d = parse(TREFOIL).unwrap();
        assert_eq!((d.vertex_count(), d.edge_count(), d.crossing_count()), (0, 1, 3));
        assert!(d.find_crossing_free_cycle().is_none());
        let c = d.classify_vertices();
        assert_eq!((c.u, c.d), (VertexType::Finite, VertexType::Finite));
        assert_eq!(c.components.len(), 1);
        assert_eq!(c.components[0].1, VertexType::Ideal);
    }

    #[test]
    fn flat_theta_has_free_cycle() {
        let d = parse(FLAT_THETA).unwrap();
        assert_eq!(d.crossing_count(), 0);
        let cyc = d.find_crossing_free_cycle().unwrap();
        assert_eq!(cyc.len(), 2);
        let r = d.report();
        assert!(!r.valid);
        assert_eq!(r.obstructions.len(), 1);
    }

    #[test]
    fn theta_with_one_crossed_edge() {
        // e1 crosses itself via a kink; e2, e3 are free and close a cycle.
        let text = "ambient s3
crossing c
vertex p e1 e2 e3
vertex q e3 e2 e1
edge e1 from p.0 to q.2
edge e1 passes c:over c:under
edge e2 from p.1 to q.1
edge e3 from p.2 to q.0
";
        let d = parse(text).unwrap();
        let mut cyc = d.find_crossing_free_cycle().unwrap();
        cyc.sort();
        assert_eq!(cyc, vec!["e2".to_string(), "e3".to_string()]);
    }

    #[test]
    fn thickened_classification() {
        let text = "ambient thickened genus=2 boundary=0
crossing a
crossing b
vertex p e1 e2 e3
vertex q e3 e2 e1
edge e1 from p.0 to q.2
edge e1 passes a:over
edge e2 from p.1 to q.1
edge e2 passes a:under b:over
edge e3 from p.2 to q.0
edge e3 passes b:under
";
        let d = parse(text).unwrap();
        let c = d.classify_vertices();
        assert_eq!((c.u, c.d), (VertexType::Hyperideal, VertexType::Hyperideal));
        assert!(c.components.iter().all(|(_, t)| *t == VertexType::Hyperideal));
        assert_eq!(d.ambient().euler_characteristic(), Some(-2));
    }

    #[test]
    fn surface_kinds() {
        let k = |g, b| AmbientSpace::Thickened { genus: g, boundary: b }.surface_kind();
        assert_eq!(k(0, 0), SurfaceKind::Sphere);
        assert_eq!(k(0, 1), SurfaceKind::Disk);
        assert_eq!(k(0, 2), SurfaceKind::Annulus);
        assert_eq!(k(1, 0), SurfaceKind::Torus);
        assert_eq!(k(0, 3), SurfaceKind::Hyperbolic);
        assert_eq!(k(1, 1), SurfaceKind::Hyperbolic);
        assert_eq!(AmbientSpace::S3.surface_kind(), SurfaceKind::Sphere);
    }

    #[test]
    fn validation_errors() {
        let bad_crossing = "ambient s3\ncrossing a\nedge k loop\nedge k passes a:over b:under\n";
        assert!(matches!(
            parse(bad_crossing),
            Err(DiagramError::Dangling {
                kind: "crossing",
                line: Some(4),
                ..
            })
        ));
        let one_passage = "ambient s3\ncrossing a\nedge k loop\nedge k passes a:over\n";
        assert!(matches!(parse(one_passage), Err(DiagramError::CrossingPassages { .. })));
        let two_over = "ambient s3\ncrossing a\nedge k loop\nedge k passes a:over a:over\n";
        assert!(matches!(
            parse(two_over),
            Err(DiagramError::CrossingPassages { over: 2, .. })
        ));
        let low = "ambient s3\nvertex p e1 e1\nedge e1 from p.0 to p.1\n";
        assert!(matches!(parse(low), Err(DiagramError::LowDegree { degree: 2, .. })));
        let wrong_slot = "ambient s3\nvertex p e1 e2 e3\nvertex q e3 e2 e1\n\
            edge e1 from p.1 to q.2\nedge e2 from p.0 to q.1\nedge e3 from p.2 to q.0\n";
        assert!(matches!(parse(wrong_slot), Err(DiagramError::Rotation { .. })));
        let dup = "ambient s3\ncrossing a\ncrossing a\n";
        assert!(matches!(parse(dup), Err(DiagramError::Duplicate { .. })));
        let shared = "ambient s3\ncrossing k\nedge k loop\n";
        assert!(matches!(parse(shared), Err(DiagramError::Duplicate { .. })));
        assert!(matches!(
            parse("crossing a\n"),
            Err(DiagramError::MissingAmbient { .. })
        ));
        let no_ends = "ambient s3\nedge e passes\n";
        assert!(matches!(parse(no_ends), Err(DiagramError::MissingEndpoints { .. })));
    }

    #[test]
    fn components_are_ordered_and_split() {
        let text = format!("{TREFOIL}edge j loop\nedge j passes x:over y:under z:over x:under y:over z:under\ncrossing x\ncrossing y\ncrossing z\n");
        let d = parse(&text).unwrap();
        let comps = d.components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].edges, vec!["j".to_string()]);
        assert_eq!(d.crossing_count(), 6);
    }
}
