//! Ordered, oriented multigraphs.
//!
//! An edge is identified by its position in the edge list, and that position
//! is also its rank in the total edge order. The pair `(tail, head)` is the
//! reference orientation `e^+`; `e^-` is the reverse.

use std::fmt;
use std::ops::Neg;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Vertex subsets are stored as bitmasks.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    // original edge index of each surviving edge, kept through minors
    origin: Vec<usize>,
}

impl Graph {
    /// Builds a connected graph. Edge order is the order of `edges`.
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Graph> {
        let g = Graph::new_unchecked(vertex_count, edges)?;
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(g)
    }

    /// Builds a graph without the connectivity check (minors, test fixtures).
    pub fn new_unchecked(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Graph> {
        if vertex_count == 0 {
            return Err(Error::NoVertices);
        }
        if vertex_count > MAX_VERTICES {
            return Err(Error::SizeLimit {
                what: "vertex count",
                actual: vertex_count,
                limit: MAX_VERTICES,
            });
        }
        for (i, &(t, h)) in edges.iter().enumerate() {
            for v in [t, h] {
                if v >= vertex_count {
                    return Err(Error::VertexOutOfRange {
                        edge: i,
                        vertex: v,
                        vertex_count,
                    });
                }
            }
        }
        let origin = (0..edges.len()).collect();
        Ok(Graph {
            vertex_count,
            edges,
            origin,
        })
    }

    /// Parses the text format: a header line `n m`, then `m` lines `tail head`.
    /// Lines starting with `#` and blank lines are skipped.
    pub fn parse(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("missing header line".into()))?;
        let nums = parse_numbers(header)?;
        if nums.len() != 2 {
            return Err(Error::Parse(format!("header must be 'n m', got '{header}'")));
        }
        let (n, m) = (nums[0], nums[1]);
        let mut edges = Vec::with_capacity(m);
        for _ in 0..m {
            let line = lines
                .next()
                .ok_or_else(|| Error::Parse(format!("expected {m} edge lines")))?;
            let e = parse_numbers(line)?;
            if e.len() != 2 {
                return Err(Error::Parse(format!("edge line must be 'tail head', got '{line}'")));
            }
            edges.push((e[0], e[1]));
        }
        if let Some(extra) = lines.next() {
            return Err(Error::Parse(format!("unexpected trailing line '{extra}'")));
        }
        Graph::new(n, edges)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.vertex_count, self.edges.len());
        for &(t, h) in &self.edges {
            s.push_str(&format!("{t} {h}\n"));
        }
        s
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    pub fn tail(&self, e: usize) -> usize {
        self.edges[e].0
    }

    pub fn head(&self, e: usize) -> usize {
        self.edges[e].1
    }

    /// Endpoints of `e^sign` as (from, to).
    pub fn arc(&self, e: usize, sign: Sign) -> (usize, usize) {
        let (t, h) = self.edges[e];
        match sign {
            Sign::Plus => (t, h),
            Sign::Minus => (h, t),
        }
    }

    /// Index of this edge in the graph the minor chain started from.
    pub fn origin(&self, e: usize) -> usize {
        self.origin[e]
    }

    pub fn origins(&self) -> &[usize] {
        &self.origin
    }

    pub fn is_loop(&self, e: usize) -> bool {
        let (t, h) = self.edges[e];
        t == h
    }

    pub fn has_loops(&self) -> bool {
        self.edges.iter().any(|&(t, h)| t == h)
    }

    /// Degree with loops counted twice.
    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .map(|&(t, h)| (t == v) as usize + (h == v) as usize)
            .sum()
    }

    /// Number of non-loop edges joining `u` and `v`.
    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(t, h)| t != h && ((t == u && h == v) || (t == v && h == u)))
            .count()
    }

    pub fn component_count(&self) -> usize {
        let mut uf = UnionFind::new(self.vertex_count);
        for &(t, h) in &self.edges {
            uf.union(t, h);
        }
        uf.count()
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    /// Cyclomatic number |E| - |V| + #components.
    pub fn cyclomatic_number(&self) -> usize {
        self.edges.len() + self.component_count() - self.vertex_count
    }

    /// Graphic-matroid rank of an edge subset given as a bitmask.
    pub fn rank(&self, mask: u64) -> usize {
        let mut uf = UnionFind::new(self.vertex_count);
        let mut r = 0;
        for (i, &(t, h)) in self.edges.iter().enumerate() {
            if mask >> i & 1 == 1 && uf.union(t, h) {
                r += 1;
            }
        }
        r
    }

    pub fn full_edge_mask(&self) -> u64 {
        low_bits(self.edges.len())
    }

    pub fn is_isthmus(&self, e: usize) -> Result<bool> {
        self.check_edge(e)?;
        if self.is_loop(e) {
            return Ok(false);
        }
        let mut uf = UnionFind::new(self.vertex_count);
        for (i, &(t, h)) in self.edges.iter().enumerate() {
            if i != e {
                uf.union(t, h);
            }
        }
        let (t, h) = self.edges[e];
        Ok(uf.find(t) != uf.find(h))
    }

    fn check_edge(&self, e: usize) -> Result<()> {
        if e >= self.edges.len() {
            Err(Error::InvalidEdge(e))
        } else {
            Ok(())
        }
    }

    pub fn delete(&self, e: usize) -> Result<Graph> {
        self.check_edge(e)?;
        let mut g = self.clone();
        g.edges.remove(e);
        g.origin.remove(e);
        Ok(g)
    }

    /// Contracts `e`, merging its head into its tail. The higher-numbered
    /// endpoint disappears and later vertices shift down by one. Contracting
    /// a loop deletes it.
    pub fn contract(&self, e: usize) -> Result<Graph> {
        self.check_edge(e)?;
        if self.is_loop(e) {
            return self.delete(e);
        }
        let (t, h) = self.edges[e];
        let (keep, gone) = (t.min(h), t.max(h));
        let relabel = |v: usize| {
            let v = if v == gone { keep } else { v };
            if v > gone {
                v - 1
            } else {
                v
            }
        };
        let mut edges = Vec::with_capacity(self.edges.len() - 1);
        let mut origin = Vec::with_capacity(self.edges.len() - 1);
        for (i, &(a, b)) in self.edges.iter().enumerate() {
            if i != e {
                edges.push((relabel(a), relabel(b)));
                origin.push(self.origin[i]);
            }
        }
        Ok(Graph {
            vertex_count: self.vertex_count - 1,
            edges,
            origin,
        })
    }

    /// Deletes every edge in `mask`.
    pub fn delete_set(&self, mask: u64) -> Graph {
        let mut g = self.clone();
        for e in (0..self.edges.len()).rev() {
            if mask >> e & 1 == 1 {
                g.edges.remove(e);
                g.origin.remove(e);
            }
        }
        g
    }

    /// Contracts every edge in `mask`.
    pub fn contract_set(&self, mask: u64) -> Graph {
        let mut uf = UnionFind::new(self.vertex_count);
        for (i, &(t, h)) in self.edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                uf.union(t, h);
            }
        }
        let mut label = vec![usize::MAX; self.vertex_count];
        let mut next = 0;
        for v in 0..self.vertex_count {
            let r = uf.find(v);
            if label[r] == usize::MAX {
                label[r] = next;
                next += 1;
            }
            label[v] = label[r];
        }
        let mut edges = Vec::new();
        let mut origin = Vec::new();
        for (i, &(t, h)) in self.edges.iter().enumerate() {
            if mask >> i & 1 == 0 {
                edges.push((label[t], label[h]));
                origin.push(self.origin[i]);
            }
        }
        Graph {
            vertex_count: next,
            edges,
            origin,
        }
    }

    /// Same graph with edges listed in the order `perm` (new position i holds
    /// old edge `perm[i]`), and the edges in `flip` reversed.
    pub fn reordered(&self, perm: &[usize], flip: u64) -> Graph {
        let edges = perm
            .iter()
            .map(|&old| {
                let (t, h) = self.edges[old];
                if flip >> old & 1 == 1 {
                    (h, t)
                } else {
                    (t, h)
                }
            })
            .collect();
        Graph {
            vertex_count: self.vertex_count,
            edges,
            origin: (0..perm.len()).collect(),
        }
    }

    /// All ordered bipartitions (U, U^c) with both sides nonempty.
    pub fn directed_cuts(&self) -> Vec<DirectedCut> {
        let n = self.vertex_count;
        if n < 2 {
            return Vec::new();
        }
        let full = low_bits(n);
        (1..full).map(|source| DirectedCut { source }).collect()
    }

    /// Every simple directed cycle, each listed once up to rotation. A loop
    /// gives two directed cycles and a pair of parallel edges gives two.
    pub fn simple_directed_cycles(&self) -> Vec<DirectedCycle> {
        let mut out = Vec::new();
        let mut incidence: Vec<Vec<(usize, Sign, usize)>> = vec![Vec::new(); self.vertex_count];
        for (e, &(t, h)) in self.edges.iter().enumerate() {
            if t == h {
                for s in [Sign::Plus, Sign::Minus] {
                    out.push(DirectedCycle::new(vec![t], vec![(e, s)]));
                }
            } else {
                incidence[t].push((e, Sign::Plus, h));
                incidence[h].push((e, Sign::Minus, t));
            }
        }
        // each cycle is found once from its smallest vertex
        for start in 0..self.vertex_count {
            let mut verts = vec![start];
            let mut trav = Vec::new();
            let mut on_path = vec![false; self.vertex_count];
            on_path[start] = true;
            self.extend_cycles(start, start, &incidence, &mut verts, &mut trav, &mut on_path, &mut out);
        }
        out.sort_by(|a, b| a.traversals.cmp(&b.traversals));
        out
    }

    #[allow(clippy::too_many_arguments)]
    fn extend_cycles(
        &self,
        start: usize,
        at: usize,
        incidence: &[Vec<(usize, Sign, usize)>],
        verts: &mut Vec<usize>,
        trav: &mut Vec<(usize, Sign)>,
        on_path: &mut [bool],
        out: &mut Vec<DirectedCycle>,
    ) {
        for &(e, s, to) in &incidence[at] {
            if trav.iter().any(|&(f, _)| f == e) {
                continue;
            }
            if to == start {
                let mut t = trav.clone();
                t.push((e, s));
                out.push(DirectedCycle::new(verts.clone(), t));
            } else if to > start && !on_path[to] {
                on_path[to] = true;
                verts.push(to);
                trav.push((e, s));
                self.extend_cycles(start, to, incidence, verts, trav, on_path, out);
                trav.pop();
                verts.pop();
                on_path[to] = false;
            }
        }
    }

    /// Adjacency lists of non-loop edges: (neighbor, edge).
    pub fn neighbors(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for (e, &(t, h)) in self.edges.iter().enumerate() {
            if t != h {
                adj[t].push((h, e));
                adj[h].push((t, e));
            }
        }
        adj
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} vertices, edges [", self.vertex_count)?;
        for (i, (t, h)) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{t}->{h}")?;
        }
        write!(f, "]")
    }
}

/// Ordered bipartition (U, U^c), oriented from U to U^c.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DirectedCut {
    pub source: u64,
}

impl DirectedCut {
    pub fn new(source: u64) -> DirectedCut {
        DirectedCut { source }
    }

    pub fn from_vertices(vertices: &[usize]) -> DirectedCut {
        DirectedCut {
            source: vertices.iter().fold(0, |m, &v| m | 1 << v),
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        self.source >> v & 1 == 1
    }

    pub fn reversed(&self, g: &Graph) -> DirectedCut {
        DirectedCut {
            source: !self.source & low_bits(g.vertex_count()),
        }
    }

    /// Crossing edges with the sign of the orientation pointing from U to U^c.
    pub fn arcs(&self, g: &Graph) -> Vec<(usize, Sign)> {
        g.edges()
            .iter()
            .enumerate()
            .filter_map(|(e, &(t, h))| match (self.contains(t), self.contains(h)) {
                (true, false) => Some((e, Sign::Plus)),
                (false, true) => Some((e, Sign::Minus)),
                _ => None,
            })
            .collect()
    }

    pub fn edge_mask(&self, g: &Graph) -> u64 {
        self.arcs(g).iter().fold(0, |m, &(e, _)| m | 1 << e)
    }

    /// A cut is simple when both sides induce connected subgraphs.
    pub fn is_simple(&self, g: &Graph) -> bool {
        let n = g.vertex_count();
        let side_connected = |side: u64| {
            let mut uf = UnionFind::new(n);
            for &(t, h) in g.edges() {
                if side >> t & 1 == 1 && side >> h & 1 == 1 {
                    uf.union(t, h);
                }
            }
            let members: Vec<usize> = (0..n).filter(|&v| side >> v & 1 == 1).collect();
            members.iter().all(|&v| uf.find(v) == uf.find(members[0]))
        };
        side_connected(self.source) && side_connected(!self.source & low_bits(n))
    }
}

/// Closed walk `v_1, e_1^{s_1}, v_2, ..., v_k, e_k^{s_k}` where `e_i^{s_i}`
/// goes from `v_i` to `v_{i+1}` (indices mod k). Rotated so the smallest
/// edge comes first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DirectedCycle {
    pub vertices: Vec<usize>,
    pub traversals: Vec<(usize, Sign)>,
}

impl DirectedCycle {
    pub fn new(vertices: Vec<usize>, traversals: Vec<(usize, Sign)>) -> DirectedCycle {
        let k = traversals.len();
        let shift = (0..k).min_by_key(|&i| traversals[i].0).unwrap_or(0);
        let mut v = vertices;
        let mut t = traversals;
        v.rotate_left(shift);
        t.rotate_left(shift);
        DirectedCycle {
            vertices: v,
            traversals: t,
        }
    }

    pub fn edge_mask(&self) -> u64 {
        self.traversals.iter().fold(0, |m, &(e, _)| m | 1 << e)
    }

    pub fn reversed(&self) -> DirectedCycle {
        let k = self.traversals.len();
        let mut vertices = Vec::with_capacity(k);
        let mut traversals = Vec::with_capacity(k);
        for i in (0..k).rev() {
            vertices.push(self.vertices[(i + 1) % k]);
            let (e, s) = self.traversals[i];
            traversals.push((e, -s));
        }
        DirectedCycle::new(vertices, traversals)
    }

    /// Checks that consecutive traversals chain head to tail in `g`.
    pub fn is_closed_walk(&self, g: &Graph) -> bool {
        let k = self.traversals.len();
        k > 0
            && self.vertices.len() == k
            && (0..k).all(|i| {
                let (e, s) = self.traversals[i];
                e < g.edge_count() && g.arc(e, s) == (self.vertices[i], self.vertices[(i + 1) % k])
            })
    }
}

pub(crate) fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn parse_numbers(line: &str) -> Result<Vec<usize>> {
    line.split_whitespace()
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| Error::Parse(format!("not a nonnegative integer: '{t}'")))
        })
        .collect()
}

#[derive(Debug, Clone)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
    sets: usize,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> UnionFind {
        UnionFind {
            parent: (0..n).collect(),
            sets: n,
        }
    }

    pub(crate) fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    /// Returns true when the call merged two sets.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        self.sets -= 1;
        true
    }

    pub(crate) fn count(&self) -> usize {
        self.sets
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Graph {
        Graph::new(3, vec![(0, 1), (0, 2), (1, 2)]).unwrap()
    }

    #[test]
    fn rejects_disconnected_and_out_of_range() {
        assert_eq!(Graph::new(2, vec![]), Err(Error::Disconnected));
        assert!(matches!(
            Graph::new(2, vec![(0, 2)]),
            Err(Error::VertexOutOfRange { .. })
        ));
        assert!(Graph::new(1, vec![]).is_ok());
    }

    #[test]
    fn parse_round_trip() {
        let text = "# triangle\n3 3\n0 1\n0 2\n\n1 2\n";
        let g = Graph::parse(text).unwrap();
        assert_eq!(g, triangle());
        assert_eq!(Graph::parse(&g.to_text()).unwrap(), g);
        assert!(Graph::parse("3 2\n0 1\n").is_err());
    }

    #[test]
    fn minors_of_triangle() {
        let g = triangle();
        let b2 = g.contract(2).unwrap();
        assert_eq!(b2.vertex_count(), 2);
        assert_eq!(b2.edges(), &[(0, 1), (0, 1)]);
        assert_eq!(b2.origins(), &[0, 1]);
        let path = g.delete(2).unwrap();
        assert_eq!(path.edge_count(), 2);
        assert!(path.is_isthmus(0).unwrap());
        let c1 = b2.contract(0).unwrap();
        assert_eq!(c1.vertex_count(), 1);
        assert!(c1.is_loop(0));
        assert_eq!(c1.origin(0), 1);
        // contracting a loop deletes it
        assert_eq!(c1.contract(0).unwrap().edge_count(), 0);
    }

    #[test]
    fn isthmus_and_loop_flags() {
        let g = triangle();
        for e in 0..3 {
            assert!(!g.is_isthmus(e).unwrap());
            assert!(!g.is_loop(e));
        }
        let c1 = Graph::new(1, vec![(0, 0)]).unwrap();
        assert!(c1.is_loop(0));
        assert!(!c1.is_isthmus(0).unwrap());
    }

    #[test]
    fn cut_and_cycle_counts() {
        let g = triangle();
        assert_eq!(g.directed_cuts().len(), 6);
        assert!(g.directed_cuts().iter().all(|c| c.is_simple(&g)));
        let cycles = g.simple_directed_cycles();
        assert_eq!(cycles.len(), 2);
        assert!(cycles.iter().all(|c| c.is_closed_walk(&g)));
        let c1 = Graph::new(1, vec![(0, 0)]).unwrap();
        assert_eq!(c1.simple_directed_cycles().len(), 2);
        let b2 = Graph::new(2, vec![(0, 1), (0, 1)]).unwrap();
        assert_eq!(b2.simple_directed_cycles().len(), 2);
        let k4 = Graph::new(4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(k4.simple_directed_cycles().len(), 14);
    }

    #[test]
    fn cycle_reversal_is_involution() {
        let g = triangle();
        for c in g.simple_directed_cycles() {
            let r = c.reversed();
            assert!(r.is_closed_walk(&g));
            assert_eq!(r.reversed(), c);
        }
    }

    #[test]
    fn contract_set_and_delete_set() {
        let g = triangle();
        let h = g.contract_set(0b011);
        assert_eq!(h.vertex_count(), 1);
        assert_eq!(h.edges(), &[(0, 0)]);
        assert_eq!(h.origins(), &[2]);
        let d = g.delete_set(0b101);
        assert_eq!(d.edges(), &[(0, 2)]);
        assert_eq!(d.origins(), &[1]);
    }
}
