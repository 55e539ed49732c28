use std::collections::{BTreeMap, VecDeque};

use super::word::{Letter, Word};

/// A directed labelled edge of a subgroup graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabelledEdge {
    pub from: usize,
    pub label: char,
    pub to: usize,
}

/// Folded core graph of a finitely generated subgroup. Vertex `0` is the
/// base vertex; vertices are numbered breadth-first from it and edges are
/// sorted, so equal subgroups folded from the same input give equal graphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupGraph {
    vertex_count: usize,
    edges: Vec<LabelledEdge>,
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Dir {
    Out,
    In,
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Keeps the smaller root so the base vertex always stays its own root.
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

impl SubgroupGraph {
    /// Stallings folding of the bouquet of loops spelled by `generators`,
    /// processed in input order, followed by trimming of hanging trees.
    pub fn fold(generators: &[Word]) -> SubgroupGraph {
        let mut vertex_count = 1usize;
        let mut edges: Vec<LabelledEdge> = Vec::new();
        for w in generators.iter().filter(|w| !w.is_empty()) {
            let n = w.len();
            let mut cur = 0usize;
            for (i, &Letter { generator, inverse }) in w.letters().iter().enumerate() {
                let next = if i + 1 == n {
                    0
                } else {
                    vertex_count += 1;
                    vertex_count - 1
                };
                edges.push(if inverse {
                    LabelledEdge {
                        from: next,
                        label: generator,
                        to: cur,
                    }
                } else {
                    LabelledEdge {
                        from: cur,
                        label: generator,
                        to: next,
                    }
                });
                cur = next;
            }
        }

        let mut uf = UnionFind::new(vertex_count);
        loop {
            let mut canon: Vec<LabelledEdge> = edges
                .iter()
                .map(|e| LabelledEdge {
                    from: uf.find(e.from),
                    label: e.label,
                    to: uf.find(e.to),
                })
                .collect();
            canon.sort_unstable();
            canon.dedup();
            edges = canon;

            let mut seen: BTreeMap<(usize, char, Dir), usize> = BTreeMap::new();
            let mut merged = false;
            for e in &edges {
                for (key, target) in [((e.from, e.label, Dir::Out), e.to), ((e.to, e.label, Dir::In), e.from)] {
                    match seen.get(&key) {
                        Some(&t) if t != target => {
                            uf.union(t, target);
                            merged = true;
                        }
                        Some(_) => {}
                        None => {
                            seen.insert(key, target);
                        }
                    }
                }
            }
            if !merged {
                break;
            }
        }

        // Trim degree-one non-base vertices until none remain.
        loop {
            let mut degree: BTreeMap<usize, usize> = BTreeMap::new();
            for e in &edges {
                *degree.entry(e.from).or_default() += 1;
                *degree.entry(e.to).or_default() += 1;
            }
            let before = edges.len();
            edges.retain(|e| {
                let hanging = |v: usize| v != 0 && degree[&v] == 1;
                !hanging(e.from) && !hanging(e.to)
            });
            if edges.len() == before {
                break;
            }
        }

        canonicalize(&edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[LabelledEdge] {
        &self.edges
    }

    /// First Betti number `E - V + 1`, the rank of the subgroup.
    pub fn rank(&self) -> usize {
        self.edges.len() + 1 - self.vertex_count
    }

    /// Whether the graph reads `w` as a closed path at the base vertex,
    /// i.e. whether `w` lies in the subgroup.
    pub fn contains(&self, w: &Word) -> bool {
        let mut cur = 0usize;
        for l in w.letters() {
            let step = self
                .edges
                .iter()
                .find_map(|e| match (l.inverse, e.label == l.generator) {
                    (false, true) if e.from == cur => Some(e.to),
                    (true, true) if e.to == cur => Some(e.from),
                    _ => None,
                });
            match step {
                Some(v) => cur = v,
                None => return false,
            }
        }
        cur == 0
    }

    /// No vertex has two outgoing, or two incoming, edges with one label.
    pub fn is_folded(&self) -> bool {
        let mut seen = std::collections::BTreeSet::new();
        self.edges
            .iter()
            .all(|e| seen.insert((e.from, e.label, Dir::Out)) && seen.insert((e.to, e.label, Dir::In)))
    }

    /// Every non-base vertex has degree at least two.
    pub fn is_core(&self) -> bool {
        let mut degree = vec![0usize; self.vertex_count];
        for e in &self.edges {
            degree[e.from] += 1;
            degree[e.to] += 1;
        }
        degree.iter().skip(1).all(|&d| d >= 2)
    }
}

/// Renumber vertices breadth-first from the base, visiting neighbours in
/// (label, direction) order, then sort the edge list.
fn canonicalize(edges: &[LabelledEdge]) -> SubgroupGraph {
    let mut adj: BTreeMap<usize, Vec<(char, Dir, usize)>> = BTreeMap::new();
    for e in edges {
        adj.entry(e.from).or_default().push((e.label, Dir::Out, e.to));
        adj.entry(e.to).or_default().push((e.label, Dir::In, e.from));
    }
    for list in adj.values_mut() {
        list.sort_unstable();
    }
    let mut order: BTreeMap<usize, usize> = BTreeMap::new();
    order.insert(0, 0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(v) = queue.pop_front() {
        for &(_, _, u) in adj.get(&v).map(Vec::as_slice).unwrap_or(&[]) {
            if !order.contains_key(&u) {
                order.insert(u, order.len());
                queue.push_back(u);
            }
        }
    }
    let mut out: Vec<LabelledEdge> = edges
        .iter()
        .map(|e| LabelledEdge {
            from: order[&e.from],
            label: e.label,
            to: order[&e.to],
        })
        .collect();
    out.sort_unstable();
    SubgroupGraph {
        vertex_count: order.len(),
        edges: out,
    }
}
