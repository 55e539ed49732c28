//! Synthetic inputs for the benchmarks.

use std::fmt::Write as _;

/// A theta graph in S³ whose three edges together carry `n` crossings,
/// each edge crossing the next one in turn.
pub fn crossed_theta(n: usize) -> String {
    let mut text = String::from("ambient s3\nvertex p e0 e1 e2\nvertex q e2 e1 e0\n");
    let mut passes: [Vec<String>; 3] = Default::default();
    for i in 0..n.max(3) {
        let _ = writeln!(text, "crossing c{i}");
        passes[i % 3].push(format!("c{i}:over"));
        passes[(i + 1) % 3].push(format!("c{i}:under"));
    }
    for (e, ps) in passes.iter().enumerate() {
        let _ = writeln!(text, "edge e{e} from p.{e} to q.{}", 2 - e);
        let _ = writeln!(text, "edge e{e} passes {}", ps.join(" "));
    }
    text
}
