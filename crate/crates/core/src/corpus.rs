//! Test graphs: every small connected multigraph plus a handful of named
//! instances, and helpers for saturated and outerplanar graphs.

use std::collections::BTreeSet;

use crate::graph::{Graph, Sign};

#[derive(Debug, Clone)]
pub struct CorpusGraph {
    pub name: String,
    pub graph: Graph,
}

pub const SMALL_MAX_VERTICES: usize = 4;
pub const SMALL_MAX_EDGES: usize = 5;

/// Connected multigraphs (loops allowed) with at most 4 vertices and 5
/// edges, one per isomorphism class. Edges run from the smaller endpoint
/// and are listed in sorted order.
pub fn small_graphs() -> Vec<CorpusGraph> {
    let mut out = Vec::new();
    for n in 1..=SMALL_MAX_VERTICES {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a..n).map(move |b| (a, b))).collect();
        let mut seen = BTreeSet::new();
        for m in 0..=SMALL_MAX_EDGES {
            for choice in multisets(pairs.len(), m) {
                let edges: Vec<(usize, usize)> = choice.iter().map(|&i| pairs[i]).collect();
                let Ok(g) = Graph::new(n, edges.clone()) else {
                    continue;
                };
                if seen.insert(canonical_form(n, &edges)) {
                    out.push(CorpusGraph {
                        name: format!("n{n}-{}", edge_label(&edges)),
                        graph: g,
                    });
                }
            }
        }
    }
    out
}

fn edge_label(edges: &[(usize, usize)]) -> String {
    if edges.is_empty() {
        return "empty".into();
    }
    edges.iter().map(|(a, b)| format!("{a}{b}")).collect::<Vec<_>>().join(".")
}

/// Nondecreasing sequences of length `k` over `0..n`.
fn multisets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(n, k, i, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, k, 0, &mut Vec::new(), &mut out);
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    heap_permute(n, &mut cur, &mut out);
    out.sort();
    out
}

fn heap_permute(k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(cur.clone());
        return;
    }
    for i in 0..k {
        heap_permute(k - 1, cur, out);
        let j = if k.is_multiple_of(2) { i } else { 0 };
        cur.swap(j, k - 1);
    }
}

/// Lexicographically least sorted edge list over all vertex relabelings.
pub fn canonical_form(n: usize, edges: &[(usize, usize)]) -> Vec<(usize, usize)> {
    permutations(n)
        .into_iter()
        .map(|p| {
            let mut relabeled: Vec<(usize, usize)> = edges
                .iter()
                .map(|&(a, b)| (p[a].min(p[b]), p[a].max(p[b])))
                .collect();
            relabeled.sort();
            relabeled
        })
        .min()
        .unwrap_or_default()
}

pub fn triangle() -> Graph {
    Graph::new(3, vec![(0, 1), (0, 2), (1, 2)]).expect("valid")
}

/// Three vertices; the first two edges form the tree 0 -> 1 -> 2.
pub fn theta() -> Graph {
    Graph::new(3, vec![(0, 1), (1, 2), (0, 1), (0, 2), (1, 2)]).expect("valid")
}

/// Two vertices joined by `k` parallel edges.
pub fn banana(k: usize) -> Graph {
    Graph::new(2, vec![(0, 1); k]).expect("valid")
}

/// The `k`-cycle; a single loop for `k = 1`.
pub fn cycle(k: usize) -> Graph {
    Graph::new(k, (0..k).map(|i| (i, (i + 1) % k)).collect()).expect("valid")
}

/// Five vertices: a triangle with a path of length three across it.
pub fn five_vertex_example() -> Graph {
    Graph::new(5, vec![(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (0, 4)]).expect("valid")
}

/// Outerplanar graph with sink 0; edges 0..6 are its boundary tree.
pub fn outerplanar_figure() -> Graph {
    Graph::new(
        8,
        vec![
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 5),
            (3, 6),
            (0, 7),
            (0, 1),
            (5, 3),
            (6, 1),
            (6, 0),
            (0, 7),
        ],
    )
    .expect("valid")
}

/// Counterclockwise boundary walk of `outerplanar_figure` from the sink.
pub fn outerplanar_figure_walk() -> Vec<(usize, Sign)> {
    use Sign::{Minus, Plus};
    vec![
        (0, Plus),
        (1, Plus),
        (2, Plus),
        (3, Plus),
        (4, Plus),
        (8, Plus),
        (5, Plus),
        (10, Plus),
        (6, Plus),
        (11, Minus),
    ]
}

pub fn complete(n: usize) -> Graph {
    Graph::new(n, (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect()).expect("valid")
}

pub fn named_graphs() -> Vec<CorpusGraph> {
    let mut out = vec![
        CorpusGraph { name: "triangle".into(), graph: triangle() },
        CorpusGraph { name: "theta".into(), graph: theta() },
    ];
    for k in 1..=4 {
        out.push(CorpusGraph { name: format!("banana{k}"), graph: banana(k) });
    }
    for k in 1..=4 {
        out.push(CorpusGraph { name: format!("cycle{k}"), graph: cycle(k) });
    }
    out.push(CorpusGraph { name: "five-vertex".into(), graph: five_vertex_example() });
    out.push(CorpusGraph { name: "outerplanar".into(), graph: outerplanar_figure() });
    out.push(CorpusGraph { name: "k4".into(), graph: complete(4) });
    out
}

/// Named graphs first, then the small graphs.
pub fn default_corpus() -> Vec<CorpusGraph> {
    let mut out = named_graphs();
    out.extend(small_graphs());
    out
}

pub fn named(name: &str) -> Option<Graph> {
    named_graphs().into_iter().find(|c| c.name == name).map(|c| c.graph)
}

/// Some edge joins every pair of distinct vertices.
pub fn is_saturated(g: &Graph) -> bool {
    let n = g.vertex_count();
    (0..n).all(|a| (a + 1..n).all(|b| g.multiplicity(a, b) > 0))
}

/// Finds a cyclic vertex order, starting at `q`, in which no two edges
/// cross as chords of a circle. Loops and parallel edges are ignored.
pub fn outerplanar_order(g: &Graph, q: usize) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    if q >= n {
        return None;
    }
    let mut chords: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .filter(|&&(a, b)| a != b)
        .map(|&(a, b)| (a.min(b), a.max(b)))
        .collect();
    chords.sort();
    chords.dedup();
    let others: Vec<usize> = (0..n).filter(|&v| v != q).collect();
    permutations(others.len()).into_iter().find_map(|p| {
        let order: Vec<usize> = std::iter::once(q).chain(p.iter().map(|&i| others[i])).collect();
        let mut pos = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let spans: Vec<(usize, usize)> = chords
            .iter()
            .map(|&(a, b)| (pos[a].min(pos[b]), pos[a].max(pos[b])))
            .collect();
        let crossing = spans.iter().any(|&(a, b)| spans.iter().any(|&(c, d)| a < c && c < b && b < d));
        (!crossing).then_some(order)
    })
}

/// Walk around the outer face of the drawing with vertices placed on a
/// circle in `order`, starting at `order[0]`. At each vertex the walk
/// leaves along the next neighbor after the one it arrived from.
pub fn boundary_walk(g: &Graph, order: &[usize]) -> Vec<(usize, Sign)> {
    let n = g.vertex_count();
    if n == 1 {
        return Vec::new();
    }
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let offset = |v: usize, w: usize| (pos[w] + n - pos[v]) % n;
    let adj = g.neighbors();
    let rotation: Vec<Vec<usize>> = adj
        .iter()
        .enumerate()
        .map(|(v, list)| {
            let mut ws: Vec<usize> = list.iter().map(|&(w, _)| w).collect();
            ws.sort_by_key(|&w| offset(v, w));
            ws.dedup();
            ws
        })
        .collect();
    let dart = |a: usize, b: usize| {
        let e = adj[a].iter().filter(|&&(w, _)| w == b).map(|&(_, e)| e).min().expect("adjacent");
        (e, if g.edge(e) == (a, b) { Sign::Plus } else { Sign::Minus })
    };
    let q = order[0];
    let start = (q, rotation[q][0]);
    let mut walk = Vec::new();
    let (mut from, mut at) = start;
    loop {
        walk.push(dart(from, at));
        let back = offset(at, from);
        let next = rotation[at]
            .iter()
            .copied()
            .find(|&w| offset(at, w) > back)
            .unwrap_or(rotation[at][0]);
        (from, at) = (at, next);
        if (from, at) == start {
            return walk;
        }
    }
}

/// Boundary walk from `q` of some outerplanar drawing, if one exists.
pub fn outerplanar_walk(g: &Graph, q: usize) -> Option<Vec<(usize, Sign)>> {
    outerplanar_order(g, q).map(|order| boundary_walk(g, &order))
}
