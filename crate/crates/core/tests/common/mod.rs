#![allow(dead_code)]

pub mod decimal;
pub mod fg_oracle;

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;

use graphvol_core::diagram::{EdgeEnds, GraphDiagram};
use proptest::prelude::*;

type EdgeSlots = ((usize, usize), (usize, usize));

pub fn fixture_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

pub fn fixture(name: &str) -> String {
    std::fs::read_to_string(fixture_dir().join(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

pub fn graph_fixtures() -> Vec<(String, String)> {
    let mut out: Vec<(String, String)> = std::fs::read_dir(fixture_dir())
        .unwrap()
        .filter_map(|e| {
            let p = e.unwrap().path();
            (p.extension()? == "graph").then(|| {
                let name = p.file_name().unwrap().to_string_lossy().into_owned();
                (name, std::fs::read_to_string(&p).unwrap())
            })
        })
        .collect();
    out.sort();
    out
}

/// Raw material for a random diagram, turned into text by [`build`].
#[derive(Clone, Debug)]
pub struct DiagramSeed {
    pub ambient: (u32, u32, bool),
    pub vertices: usize,
    pub open: Vec<(usize, usize)>,
    pub loops: usize,
    pub crossings: Vec<(usize, usize, usize, usize)>,
}

pub fn seed() -> impl Strategy<Value = DiagramSeed> {
    (
        (0u32..3, 0u32..3, any::<bool>()),
        0usize..4,
        prop::collection::vec((0usize..8, 0usize..8), 0..6),
        0usize..3,
        prop::collection::vec((0usize..64, 0usize..64, 0usize..64, 0usize..64), 0..7),
    )
        .prop_map(|(ambient, vertices, open, loops, crossings)| DiagramSeed {
            ambient,
            vertices,
            open,
            loops,
            crossings,
        })
}

/// A valid diagram text: vertices are topped up to degree 3 with
/// self-loops, crossings drop passages into random edges and positions.
pub fn build(s: &DiagramSeed) -> String {
    let nv = s.vertices;
    let mut ends: Vec<(usize, usize)> = if nv == 0 {
        Vec::new()
    } else {
        s.open.iter().map(|&(a, b)| (a % nv, b % nv)).collect()
    };
    let mut degree = vec![0usize; nv];
    for &(a, b) in &ends {
        degree[a] += 1;
        degree[b] += 1;
    }
    for (v, deg) in degree.iter_mut().enumerate() {
        while *deg < 3 {
            ends.push((v, v));
            *deg += 2;
        }
    }
    let mut rotation: Vec<Vec<String>> = vec![Vec::new(); nv];
    let mut edges: Vec<(String, Option<EdgeSlots>)> = Vec::new();
    for (i, &(a, b)) in ends.iter().enumerate() {
        let id = format!("e{i}");
        let sa = rotation[a].len();
        rotation[a].push(id.clone());
        let sb = rotation[b].len();
        rotation[b].push(id.clone());
        edges.push((id, Some(((a, sa), (b, sb)))));
    }
    for i in 0..s.loops {
        edges.push((format!("k{i}"), None));
    }
    let mut passes: Vec<Vec<String>> = vec![Vec::new(); edges.len()];
    let mut text = match s.ambient {
        (_, _, true) => "ambient s3\n".to_string(),
        (g, b, false) => format!("ambient thickened genus={g} boundary={b}\n"),
    };
    if !edges.is_empty() {
        for (i, &(o, u, po, pu)) in s.crossings.iter().enumerate() {
            let id = format!("c{i}");
            let _ = writeln!(text, "crossing {id}");
            let (o, u) = (o % edges.len(), u % edges.len());
            let at = po % (passes[o].len() + 1);
            passes[o].insert(at, format!("{id}:over"));
            let at = pu % (passes[u].len() + 1);
            passes[u].insert(at, format!("{id}:under"));
        }
    }
    for (v, rot) in rotation.iter().enumerate() {
        let _ = writeln!(text, "vertex v{v} {}", rot.join(" "));
    }
    for ((id, ends), ps) in edges.iter().zip(&passes) {
        match ends {
            Some(((a, sa), (b, sb))) => {
                let _ = writeln!(text, "edge {id} from v{a}.{sa} to v{b}.{sb}");
            }
            None => {
                let _ = writeln!(text, "edge {id} loop");
            }
        }
        if !ps.is_empty() {
            let _ = writeln!(text, "edge {id} passes {}", ps.join(" "));
        }
    }
    text
}

/// Whether the edges `ids` form a single cycle.
pub fn is_cycle(d: &GraphDiagram, ids: &[&str]) -> bool {
    if ids.is_empty() {
        return false;
    }
    let mut degree: BTreeMap<&str, usize> = BTreeMap::new();
    let mut parent: BTreeMap<&str, &str> = BTreeMap::new();
    fn root<'a>(p: &BTreeMap<&'a str, &'a str>, mut x: &'a str) -> &'a str {
        while let Some(&y) = p.get(x) {
            x = y;
        }
        x
    }
    for id in ids {
        match &d.edge(id).unwrap().ends {
            EdgeEnds::Loop => return ids.len() == 1,
            EdgeEnds::Open { from, to } => {
                *degree.entry(&from.vertex).or_default() += 1;
                *degree.entry(&to.vertex).or_default() += 1;
                let (a, b) = (root(&parent, &from.vertex), root(&parent, &to.vertex));
                if a != b {
                    parent.insert(a, b);
                }
            }
        }
    }
    let roots: std::collections::BTreeSet<&str> = degree.keys().map(|v| root(&parent, v)).collect();
    degree.values().all(|&d| d == 2) && roots.len() == 1
}

/// Brute force: does some cycle avoid every crossing?
pub fn has_free_cycle_oracle(d: &GraphDiagram) -> bool {
    let free: Vec<&str> = d
        .edges()
        .filter(|e| e.passages.is_empty())
        .map(|e| e.id.as_str())
        .collect();
    assert!(free.len() <= 16, "oracle is exponential");
    (1u32..(1 << free.len())).any(|mask| {
        let ids: Vec<&str> = (0..free.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| free[i])
            .collect();
        is_cycle(d, &ids)
    })
}
