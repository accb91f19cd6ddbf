//! Divisors of fourientations, edge pivots and reversal systems, linear
//! equivalence, parking and subparking functions, and rooted trees.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fourientation::{reachable_set, CutCycleIndex, EdgeState, Fourientation};
use crate::graph::{low_bits, DirectedCut, DirectedCycle, Graph, Sign, UnionFind};
use crate::minedge::{good_for_cut, good_for_cycle, CutProperty, CycleProperty};
use crate::poly::{Bivariate, Univariate};

/// Integer-valued function on vertices, indexed by vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Divisor(pub Vec<i64>);

impl Divisor {
    pub fn zero(n: usize) -> Divisor {
        Divisor(vec![0; n])
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn add(&self, other: &Divisor) -> Divisor {
        Divisor(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Divisor) -> Divisor {
        Divisor(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Display for Divisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", serde_json::to_string(&self.0).map_err(|_| fmt::Error)?)
    }
}

/// `indeg_O(v) - 1` at every vertex; a bioriented loop arrives twice.
pub fn divisor_of(g: &Graph, o: &Fourientation) -> Divisor {
    let mut d = vec![-1i64; g.vertex_count()];
    for (e, &(t, h)) in g.edges().iter().enumerate() {
        if o.contains(e, Sign::Plus) {
            d[h] += 1;
        }
        if o.contains(e, Sign::Minus) {
            d[t] += 1;
        }
    }
    Divisor(d)
}

/// `deg(v) - 2`, loops counted twice.
pub fn canonical_divisor(g: &Graph) -> Divisor {
    Divisor((0..g.vertex_count()).map(|v| g.degree(v) as i64 - 2).collect())
}

pub fn riemann_roch_complement_check(g: &Graph, o: &Fourientation) -> bool {
    canonical_divisor(g).sub(&divisor_of(g, o)) == divisor_of(g, &o.complement())
}

/// Replaces the arrival `from` (in `o`) by the arrival `to` (not in `o`) at
/// the same head vertex. The two may be the two orientations of one loop.
pub fn edge_pivot(g: &Graph, o: &Fourientation, from: (usize, Sign), to: (usize, Sign)) -> Result<Fourientation> {
    o.check_graph(g)?;
    for (e, _) in [from, to] {
        if e >= g.edge_count() {
            return Err(Error::InvalidEdge(e));
        }
    }
    if from == to {
        return Err(Error::Precondition("pivot needs two distinct directed edges".into()));
    }
    if !o.contains(from.0, from.1) || o.contains(to.0, to.1) {
        return Err(Error::Precondition("pivot must remove a present arc and add an absent one".into()));
    }
    if g.arc(from.0, from.1).1 != g.arc(to.0, to.1).1 {
        return Err(Error::Precondition("pivot arcs must share their head".into()));
    }
    let mut out = *o;
    out.remove(from.0, from.1);
    out.insert(to.0, to.1);
    Ok(out)
}

/// Every legal pivot of `o`.
pub fn pivots(g: &Graph, o: &Fourientation) -> Vec<Fourientation> {
    let mut arcs_into: Vec<Vec<(usize, Sign)>> = vec![Vec::new(); g.vertex_count()];
    for e in 0..g.edge_count() {
        for s in [Sign::Plus, Sign::Minus] {
            arcs_into[g.arc(e, s).1].push((e, s));
        }
    }
    let mut out = Vec::new();
    for arcs in &arcs_into {
        for &a in arcs {
            if !o.contains(a.0, a.1) {
                continue;
            }
            for &b in arcs {
                if b != a && !o.contains(b.0, b.1) {
                    let mut p = *o;
                    p.remove(a.0, a.1);
                    p.insert(b.0, b.1);
                    out.push(p);
                }
            }
        }
    }
    out
}

fn is_directed_cut_of(g: &Graph, o: &Fourientation, cut: &DirectedCut) -> bool {
    let arcs = cut.arcs(g);
    !arcs.is_empty() && arcs.iter().all(|&(e, s)| o.state(e) == EdgeState::oriented(s))
}

/// Reverses a cut all of whose edges are oriented from the source side out.
pub fn cut_reversal(g: &Graph, o: &Fourientation, cut: &DirectedCut) -> Result<Fourientation> {
    o.check_graph(g)?;
    if !is_directed_cut_of(g, o, cut) {
        return Err(Error::Precondition("cut is not fully oriented from its source side".into()));
    }
    let mut out = *o;
    for (e, s) in cut.arcs(g) {
        out.set(e, EdgeState::oriented(-s));
    }
    Ok(out)
}

pub fn cycle_reversal(g: &Graph, o: &Fourientation, cyc: &DirectedCycle) -> Result<Fourientation> {
    o.check_graph(g)?;
    if !cyc.is_closed_walk(g) || !cyc.traversals.iter().all(|&(e, s)| o.state(e) == EdgeState::oriented(s)) {
        return Err(Error::Precondition("cycle is not fully oriented along itself".into()));
    }
    let mut out = *o;
    for &(e, s) in &cyc.traversals {
        out.set(e, EdgeState::oriented(-s));
    }
    Ok(out)
}

/// The same reversal as a chain of pivots at `v_2, v_3, ..., v_1`.
pub fn cycle_reversal_by_pivots(g: &Graph, o: &Fourientation, cyc: &DirectedCycle) -> Result<Fourientation> {
    cycle_reversal(g, o, cyc)?;
    let k = cyc.traversals.len();
    let mut cur = *o;
    for i in 0..k {
        let (e, s) = cyc.traversals[i];
        let (f, t) = cyc.traversals[(i + 1) % k];
        cur = edge_pivot(g, &cur, (e, s), (f, -t))?;
    }
    Ok(cur)
}

/// Edge limit for the breadth-first reversal oracles.
pub const REVERSAL_EDGE_LIMIT: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ReversalMoves {
    PivotsOnly,
    PivotsAndCuts,
}

/// Component label of every fourientation (by packed index) under the moves.
pub fn reversal_classes(g: &Graph, moves: ReversalMoves) -> Result<Vec<usize>> {
    let m = g.edge_count();
    if m > REVERSAL_EDGE_LIMIT {
        return Err(Error::SizeLimit {
            what: "edge count for reversal search",
            actual: m,
            limit: REVERSAL_EDGE_LIMIT,
        });
    }
    let states = 1usize << (2 * m);
    let mut uf = UnionFind::new(states);
    let cuts = g.directed_cuts();
    for o in Fourientation::all(m) {
        let here = o.packed() as usize;
        for p in pivots(g, &o) {
            uf.union(here, p.packed() as usize);
        }
        if moves == ReversalMoves::PivotsAndCuts {
            for c in &cuts {
                if is_directed_cut_of(g, &o, c) {
                    uf.union(here, cut_reversal(g, &o, c)?.packed() as usize);
                }
            }
        }
    }
    Ok((0..states).map(|i| uf.find(i)).collect())
}

/// Breadth-first search in the move graph from `a` looking for `b`.
pub fn reversal_equivalent(g: &Graph, a: &Fourientation, b: &Fourientation, moves: ReversalMoves) -> Result<bool> {
    a.check_graph(g)?;
    b.check_graph(g)?;
    if g.edge_count() > REVERSAL_EDGE_LIMIT {
        return Err(Error::SizeLimit {
            what: "edge count for reversal search",
            actual: g.edge_count(),
            limit: REVERSAL_EDGE_LIMIT,
        });
    }
    let cuts = g.directed_cuts();
    let mut seen = BTreeSet::from([a.packed()]);
    let mut queue = VecDeque::from([*a]);
    while let Some(o) = queue.pop_front() {
        if o == *b {
            return Ok(true);
        }
        let mut next = pivots(g, &o);
        if moves == ReversalMoves::PivotsAndCuts {
            for c in &cuts {
                if is_directed_cut_of(g, &o, c) {
                    next.push(cut_reversal(g, &o, c)?);
                }
            }
        }
        for p in next {
            if seen.insert(p.packed()) {
                queue.push_back(p);
            }
        }
    }
    Ok(false)
}

/// Fires every vertex of `set` once.
pub fn fire_set(g: &Graph, d: &Divisor, set: u64) -> Divisor {
    let mut out = d.clone();
    for &(t, h) in g.edges() {
        let (a, b) = (set >> t & 1 == 1, set >> h & 1 == 1);
        if a && !b {
            out.0[t] -= 1;
            out.0[h] += 1;
        } else if b && !a {
            out.0[h] -= 1;
            out.0[t] += 1;
        }
    }
    out
}

/// `D + L x` for an integer firing vector `x`.
pub fn apply_laplacian(g: &Graph, d: &Divisor, x: &[i64]) -> Divisor {
    let mut out = d.clone();
    for &(t, h) in g.edges() {
        if t != h {
            let flow = x[t] - x[h];
            out.0[t] -= flow;
            out.0[h] += flow;
        }
    }
    out
}

/// The q-reduced divisor linearly equivalent to `d`: first push every
/// non-sink vertex to a nonnegative value by firing layers around `q`, then
/// fire unburnt sets until the burning process from `q` reaches everything.
pub fn q_reduced(g: &Graph, d: &Divisor, q: usize) -> Result<Divisor> {
    let n = g.vertex_count();
    if q >= n {
        return Err(Error::InvalidVertex(q));
    }
    let adj = g.neighbors();
    let mut dist = vec![usize::MAX; n];
    dist[q] = 0;
    let mut queue = VecDeque::from([q]);
    while let Some(v) = queue.pop_front() {
        for &(w, _) in &adj[v] {
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    let mut cur = d.clone();
    let far = dist.iter().copied().max().unwrap_or(0);
    for layer in (1..=far).rev() {
        let inner = (0..n).filter(|&v| dist[v] < layer).fold(0u64, |m, v| m | 1 << v);
        while (0..n).any(|v| dist[v] == layer && cur.0[v] < 0) {
            cur = fire_set(g, &cur, inner);
        }
    }
    loop {
        let burnt = burn(g, &cur, q);
        if burnt == low_bits(n) {
            return Ok(cur);
        }
        cur = fire_set(g, &cur, !burnt & low_bits(n));
    }
}

/// Dhar burning from `q`: a vertex burns once it has more burnt neighbors
/// (with multiplicity) than chips.
fn burn(g: &Graph, d: &Divisor, q: usize) -> u64 {
    let n = g.vertex_count();
    let mut burnt = 1u64 << q;
    loop {
        let mut grew = false;
        for v in 0..n {
            if burnt >> v & 1 == 1 {
                continue;
            }
            let fire = g
                .edges()
                .iter()
                .filter(|&&(t, h)| t != h && ((t == v && burnt >> h & 1 == 1) || (h == v && burnt >> t & 1 == 1)))
                .count() as i64;
            if fire > d.0[v] {
                burnt |= 1 << v;
                grew = true;
            }
        }
        if !grew {
            return burnt;
        }
    }
}

pub fn linearly_equivalent(g: &Graph, a: &Divisor, b: &Divisor) -> Result<bool> {
    if a.degree() != b.degree() {
        return Ok(false);
    }
    Ok(q_reduced(g, a, 0)? == q_reduced(g, b, 0)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TypeTarget {
    A,
    B,
}

/// An equivalent fourientation (pivots and cut reversals) with no
/// bioriented edge (target A) or no unoriented edge (target B).
pub fn type_reduce(g: &Graph, o: &Fourientation, target: TypeTarget) -> Result<Fourientation> {
    o.check_graph(g)?;
    match target {
        TypeTarget::A => reduce_to_a(g, o),
        TypeTarget::B => Ok(reduce_to_a(g, &o.complement())?.complement()),
    }
}

fn reduce_to_a(g: &Graph, o: &Fourientation) -> Result<Fourientation> {
    let degree = divisor_of(g, o).degree();
    let bound = g.cyclomatic_number() as i64 - 1;
    if degree > bound {
        return Err(Error::Unrepresentable { degree, bound });
    }
    let mut cur = *o;
    let mut guard = 0;
    while cur.mask_of(EdgeState::Bioriented) != 0 {
        guard += 1;
        if guard > 64 * (g.edge_count() + 1) * (g.vertex_count() + 1) {
            return Err(Error::Precondition("type reduction did not terminate".into()));
        }
        let ends = |mask: u64| {
            (0..g.edge_count())
                .filter(|&e| mask >> e & 1 == 1)
                .fold(0u64, |m, e| m | 1 << g.tail(e) | 1 << g.head(e))
        };
        let sources = ends(cur.mask_of(EdgeState::Bioriented));
        let targets = ends(cur.mask_of(EdgeState::Unoriented));
        let reach = reachable_set(g, &cur, sources);
        if reach & targets != 0 {
            cur = jacobs_ladder(g, &cur, targets)?;
        } else {
            let cut = DirectedCut::new(!reach & low_bits(g.vertex_count()));
            cur = cut_reversal(g, &cur, &cut)?;
        }
    }
    Ok(cur)
}

/// Shortest path along arcs of `o` from an endpoint of a bioriented edge to
/// a vertex touching an unoriented edge, then pivots down the path: the
/// bioriented edge loses an arrival, the path flips, the unoriented edge
/// gains an arrival.
fn jacobs_ladder(g: &Graph, o: &Fourientation, targets: u64) -> Result<Fourientation> {
    let n = g.vertex_count();
    // parent[v] = arc used to reach v
    let mut parent: Vec<Option<(usize, Sign)>> = vec![None; n];
    let mut start_arc: Vec<Option<(usize, Sign)>> = vec![None; n];
    let mut seen = 0u64;
    let mut queue = VecDeque::new();
    for e in 0..g.edge_count() {
        if o.state(e) == EdgeState::Bioriented {
            for s in [Sign::Plus, Sign::Minus] {
                let u = g.arc(e, s).1;
                if seen >> u & 1 == 0 {
                    seen |= 1 << u;
                    start_arc[u] = Some((e, s));
                    queue.push_back(u);
                }
            }
        }
    }
    let mut end = None;
    while let Some(v) = queue.pop_front() {
        if targets >> v & 1 == 1 {
            end = Some(v);
            break;
        }
        for e in 0..g.edge_count() {
            if let Some(s) = o.state(e).orientation() {
                let (a, b) = g.arc(e, s);
                if a == v && seen >> b & 1 == 0 {
                    seen |= 1 << b;
                    parent[b] = Some((e, s));
                    start_arc[b] = start_arc[v];
                    queue.push_back(b);
                }
            }
        }
    }
    let v = end.ok_or_else(|| Error::Precondition("no ladder path".into()))?;
    let mut path = Vec::new();
    let mut at = v;
    while let Some((e, s)) = parent[at] {
        path.push((e, s));
        at = g.arc(e, s).0;
    }
    path.reverse();
    let first = start_arc[v].expect("path starts at a bioriented edge");
    let unoriented = (0..g.edge_count())
        .find(|&e| o.state(e) == EdgeState::Unoriented && (g.tail(e) == v || g.head(e) == v))
        .expect("target vertex touches an unoriented edge");
    let gain = if g.head(unoriented) == v { Sign::Plus } else { Sign::Minus };
    let mut cur = *o;
    let mut arriving = first;
    for &(e, s) in &path {
        cur = edge_pivot(g, &cur, arriving, (e, -s))?;
        arriving = (e, s);
    }
    edge_pivot(g, &cur, arriving, (unoriented, gain))
}

fn require_loopless(g: &Graph) -> Result<()> {
    if g.has_loops() {
        Err(Error::LoopsPresent)
    } else {
        Ok(())
    }
}

/// Edges from `u` to vertices outside `set`.
fn out_degree(g: &Graph, u: usize, set: u64) -> i64 {
    g.edges()
        .iter()
        .filter(|&&(t, h)| (t == u && set >> h & 1 == 0) || (h == u && set >> t & 1 == 0))
        .count() as i64
}

/// Subset test: every nonempty set of non-sink vertices has a vertex `u`
/// with `0 <= c_u < d_U(u)`. `c` has length n with `c_q = 0`.
pub fn is_parking(g: &Graph, q: usize, c: &Divisor) -> Result<bool> {
    require_loopless(g)?;
    check_vector(g, q, c)?;
    let n = g.vertex_count();
    let others = low_bits(n) & !(1 << q);
    if (0..n).any(|v| v != q && c.0[v] < 0) || c.0[q] != 0 {
        return Ok(false);
    }
    Ok(subsets(others).all(|u| (0..n).any(|v| u >> v & 1 == 1 && c.0[v] < out_degree(g, v, u))))
}

fn check_vector(g: &Graph, q: usize, c: &Divisor) -> Result<()> {
    if q >= g.vertex_count() {
        return Err(Error::InvalidVertex(q));
    }
    if c.0.len() != g.vertex_count() {
        return Err(Error::Precondition(format!(
            "vector has {} entries, graph has {} vertices",
            c.0.len(),
            g.vertex_count()
        )));
    }
    Ok(())
}

/// Nonempty submasks of `mask`.
fn subsets(mask: u64) -> impl Iterator<Item = u64> {
    let mut sub = mask;
    let mut done = mask == 0;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let out = sub;
        sub = (sub - 1) & mask;
        if sub == 0 {
            done = true;
        }
        Some(out)
    })
}

/// Every vector in the box `0 <= c_v < bound[v]` with `c_q = 0`.
fn box_vectors(q: usize, bound: &[i64]) -> Vec<Divisor> {
    let n = bound.len();
    let mut out = Vec::new();
    let mut cur = vec![0i64; n];
    if (0..n).any(|v| v != q && bound[v] <= 0) {
        return if n == 1 { vec![Divisor(cur)] } else { out };
    }
    loop {
        out.push(Divisor(cur.clone()));
        let mut v = 0;
        loop {
            if v == n {
                return out;
            }
            if v != q {
                cur[v] += 1;
                if cur[v] < bound[v] {
                    break;
                }
                cur[v] = 0;
            }
            v += 1;
        }
    }
}

pub fn parking_functions(g: &Graph, q: usize) -> Result<Vec<Divisor>> {
    require_loopless(g)?;
    if q >= g.vertex_count() {
        return Err(Error::InvalidVertex(q));
    }
    let bound: Vec<i64> = (0..g.vertex_count()).map(|v| g.degree(v) as i64).collect();
    let mut out = Vec::new();
    for c in box_vectors(q, &bound) {
        if is_parking(g, q, &c)? {
            out.push(c);
        }
    }
    Ok(out)
}

/// Parking functions that stop being parking when any entry grows.
pub fn maximal_parking_functions(g: &Graph, q: usize) -> Result<Vec<Divisor>> {
    let all = parking_functions(g, q)?;
    let set: BTreeSet<&Divisor> = all.iter().collect();
    Ok(all
        .iter()
        .filter(|c| {
            (0..g.vertex_count()).filter(|&v| v != q).all(|v| {
                let mut up = (*c).clone();
                up.0[v] += 1;
                !set.contains(&up)
            })
        })
        .cloned()
        .collect())
}

/// `sum over parking functions of y^(g - deg c)`.
pub fn merino_polynomial(g: &Graph, q: usize) -> Result<Univariate> {
    let genus = g.cyclomatic_number() as i64;
    let mut coeffs = vec![BigInt::from(0); genus as usize + 1];
    for c in parking_functions(g, q)? {
        let k = genus - c.degree();
        if k < 0 {
            return Err(Error::Precondition("parking function of degree above g".into()));
        }
        coeffs[k as usize] += 1;
    }
    Ok(Univariate::new(coeffs))
}

/// Ordered spanning tree rooted at `root`; `arcs` lists the tree edges in
/// order, each oriented away from the root.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RootedTree {
    pub root: usize,
    pub arcs: Vec<(usize, Sign)>,
}

impl RootedTree {
    pub fn edge_mask(&self) -> u64 {
        self.arcs.iter().fold(0, |m, &(e, _)| m | 1 << e)
    }

    /// Star at `q`, using the smallest edge to each other vertex.
    pub fn star(g: &Graph, q: usize) -> Result<RootedTree> {
        let mut arcs = Vec::new();
        for v in 0..g.vertex_count() {
            if v == q {
                continue;
            }
            let e = (0..g.edge_count())
                .find(|&e| g.edge(e) == (q, v) || g.edge(e) == (v, q))
                .ok_or_else(|| Error::InvalidTree(format!("no edge between {q} and {v}")))?;
            arcs.push((e, if g.tail(e) == q { Sign::Plus } else { Sign::Minus }));
        }
        Ok(RootedTree { root: q, arcs })
    }

    /// Breadth-first tree, taking edges in order.
    pub fn breadth_first(g: &Graph, q: usize) -> RootedTree {
        let mut seen = 1u64 << q;
        let mut queue = VecDeque::from([q]);
        let mut arcs = Vec::new();
        while let Some(v) = queue.pop_front() {
            for e in 0..g.edge_count() {
                for s in [Sign::Plus, Sign::Minus] {
                    let (a, b) = g.arc(e, s);
                    if a == v && seen >> b & 1 == 0 {
                        seen |= 1 << b;
                        arcs.push((e, s));
                        queue.push_back(b);
                    }
                }
            }
        }
        RootedTree { root: q, arcs }
    }
}

/// Spans, points away from the root, and lists parents before children.
pub fn validate_tree(g: &Graph, t: &RootedTree) -> bool {
    let n = g.vertex_count();
    if t.root >= n || t.arcs.len() + 1 != n {
        return false;
    }
    let mut reached = 1u64 << t.root;
    for &(e, s) in &t.arcs {
        if e >= g.edge_count() {
            return false;
        }
        let (a, b) = g.arc(e, s);
        if reached >> a & 1 == 0 || reached >> b & 1 == 1 {
            return false;
        }
        reached |= 1 << b;
    }
    reached == low_bits(n)
}

/// Tree edges are the first edges, in tree order, in reference orientation.
pub fn is_qt_compatible(g: &Graph, t: &RootedTree) -> bool {
    validate_tree(g, t) && t.arcs.iter().enumerate().all(|(i, &(e, s))| e == i && s == Sign::Plus)
}

/// Reorders and reorients `g` so that `t` becomes compatible; returns the
/// new graph and the tree in its numbering.
pub fn make_compatible(g: &Graph, t: &RootedTree) -> Result<(Graph, RootedTree)> {
    if !validate_tree(g, t) {
        return Err(Error::InvalidTree("not an ordered rooted spanning tree".into()));
    }
    let mut perm: Vec<usize> = t.arcs.iter().map(|&(e, _)| e).collect();
    perm.extend((0..g.edge_count()).filter(|&e| t.edge_mask() >> e & 1 == 0));
    let flip = t.arcs.iter().filter(|&&(_, s)| s == Sign::Minus).fold(0, |m, &(e, _)| m | 1 << e);
    let h = g.reordered(&perm, flip);
    let tree = RootedTree {
        root: t.root,
        arcs: (0..t.arcs.len()).map(|i| (i, Sign::Plus)).collect(),
    };
    Ok((h, tree))
}

/// First-visit traversals of a closed walk from the root, in walk order.
pub fn boundary_tree(g: &Graph, q: usize, walk: &[(usize, Sign)]) -> Result<RootedTree> {
    if q >= g.vertex_count() {
        return Err(Error::InvalidVertex(q));
    }
    let mut at = q;
    let mut seen = 1u64 << q;
    let mut arcs = Vec::new();
    for (i, &(e, s)) in walk.iter().enumerate() {
        if e >= g.edge_count() {
            return Err(Error::InvalidWalk(format!("step {i} uses unknown edge {e}")));
        }
        let (a, b) = g.arc(e, s);
        if a != at {
            return Err(Error::InvalidWalk(format!("step {i} does not start where the walk is")));
        }
        if seen >> b & 1 == 0 {
            seen |= 1 << b;
            arcs.push((e, s));
        }
        at = b;
    }
    if at != q {
        return Err(Error::InvalidWalk("walk does not return to the root".into()));
    }
    if seen != low_bits(g.vertex_count()) {
        return Err(Error::InvalidWalk("walk misses a vertex".into()));
    }
    Ok(RootedTree { root: q, arcs })
}

/// `|{e in E(U,U^c) at u : e is not the minimum edge of E(U,U^c)}|`.
pub fn d_ut(g: &Graph, u: usize, set: u64) -> i64 {
    let crossing: Vec<usize> = (0..g.edge_count())
        .filter(|&e| {
            let (t, h) = g.edge(e);
            (set >> t & 1) != (set >> h & 1)
        })
        .collect();
    crossing
        .iter()
        .skip(1)
        .filter(|&&e| g.tail(e) == u || g.head(e) == u)
        .count() as i64
}

/// Graph with sink and ordered tree; the edge order carries the tree.
#[derive(Debug, Clone)]
pub struct SubparkingContext {
    pub graph: Graph,
    pub q: usize,
    pub tree: RootedTree,
}

impl SubparkingContext {
    pub fn new(graph: Graph, q: usize, tree: RootedTree) -> Result<SubparkingContext> {
        if !is_qt_compatible(&graph, &tree) || tree.root != q {
            return Err(Error::InvalidTree("reference data is not compatible with (q, T)".into()));
        }
        Ok(SubparkingContext { graph, q, tree })
    }

    /// Reorders `g` so that `tree` is compatible.
    pub fn from_tree(g: &Graph, tree: &RootedTree) -> Result<SubparkingContext> {
        let (h, t) = make_compatible(g, tree)?;
        SubparkingContext::new(h, tree.root, t)
    }

    pub fn is_subparking(&self, c: &Divisor) -> Result<bool> {
        let g = &self.graph;
        check_vector(g, self.q, c)?;
        let n = g.vertex_count();
        if (0..n).any(|v| v != self.q && c.0[v] < 0) || c.0[self.q] != 0 {
            return Ok(false);
        }
        let others = low_bits(n) & !(1 << self.q);
        Ok(subsets(others).all(|u| (0..n).any(|v| u >> v & 1 == 1 && c.0[v] < d_ut(g, v, u))))
    }

    pub fn subparking_functions(&self) -> Result<Vec<Divisor>> {
        let g = &self.graph;
        let bound: Vec<i64> = (0..g.vertex_count())
            .map(|v| (0..g.edge_count()).filter(|&e| !g.is_loop(e) && (g.tail(e) == v || g.head(e) == v)).count() as i64)
            .collect();
        let mut out = Vec::new();
        for c in box_vectors(self.q, &bound) {
            if self.is_subparking(&c)? {
                out.push(c);
            }
        }
        Ok(out)
    }

    /// `sum over subparking functions of y^deg(c)`.
    pub fn hilbert_numerator(&self) -> Result<Univariate> {
        let mut coeffs: Vec<BigInt> = Vec::new();
        for c in self.subparking_functions()? {
            let d = c.degree() as usize;
            if coeffs.len() <= d {
                coeffs.resize(d + 1, BigInt::from(0));
            }
            coeffs[d] += 1;
        }
        Ok(Univariate::new(coeffs))
    }

    /// Acyclic, cut internal partial orientations (Type A).
    pub fn aci_orientations(&self) -> Result<Vec<Fourientation>> {
        let g = &self.graph;
        if g.edge_count() > 16 {
            return Err(Error::SizeLimit {
                what: "edge count for partial orientation search",
                actual: g.edge_count(),
                limit: 16,
            });
        }
        let index = CutCycleIndex::new(g);
        let cut = CutProperty::named("internal")?;
        let cycle = CycleProperty::named("neutral")?;
        let mut out = Vec::new();
        for states in 0..3u64.pow(g.edge_count() as u32) {
            let mut o = Fourientation::empty(g.edge_count());
            let mut rest = states;
            for e in 0..g.edge_count() {
                o.set(e, [EdgeState::Unoriented, EdgeState::OnlyPlus, EdgeState::OnlyMinus][(rest % 3) as usize]);
                rest /= 3;
            }
            if good_for_cycle(&index, &o, cycle) && good_for_cut(&index, &o, cut) {
                out.push(o);
            }
        }
        Ok(out)
    }

    /// Checks (a) the numerator equals `y^g T(0, 1/y)` and (b) the
    /// subparking functions are the divisors of the ACI orientations.
    pub fn verify_conjecture(&self, t: &Bivariate) -> Result<ConjectureReport> {
        let genus = self.graph.cyclomatic_number();
        let numerator = self.hilbert_numerator()?;
        let mut expected = vec![BigInt::from(0); genus + 1];
        for (i, j, c) in t.terms() {
            if i == 0 {
                expected[genus - j] += c;
            }
        }
        let expected = Univariate::new(expected);
        let subparking: BTreeSet<Divisor> = self.subparking_functions()?.into_iter().collect();
        let aci = self.aci_orientations()?;
        let divisors: BTreeSet<Divisor> = aci
            .iter()
            .map(|o| {
                let mut d = divisor_of(&self.graph, o);
                d.0[self.q] = 0;
                d
            })
            .collect();
        Ok(ConjectureReport {
            numerator_ok: numerator == expected,
            numerator,
            expected,
            divisors_ok: subparking == divisors,
            subparking_count: subparking.len(),
            aci_count: aci.len(),
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConjectureReport {
    pub numerator: Univariate,
    pub expected: Univariate,
    pub numerator_ok: bool,
    pub divisors_ok: bool,
    pub subparking_count: usize,
    pub aci_count: usize,
}

impl ConjectureReport {
    pub fn ok(&self) -> bool {
        self.numerator_ok && self.divisors_ok
    }
}

pub const TREE_SEARCH_VERTEX_LIMIT: usize = 5;

/// Every ordered spanning tree rooted at `q` (parents listed before
/// children). Among parallel edges only the smallest is used.
pub fn ordered_rooted_trees(g: &Graph, q: usize) -> Result<Vec<RootedTree>> {
    let n = g.vertex_count();
    if n > TREE_SEARCH_VERTEX_LIMIT {
        return Err(Error::SizeLimit {
            what: "vertex count for tree search",
            actual: n,
            limit: TREE_SEARCH_VERTEX_LIMIT,
        });
    }
    if q >= n {
        return Err(Error::InvalidVertex(q));
    }
    let simple: Vec<usize> = (0..g.edge_count())
        .filter(|&e| !g.is_loop(e) && (0..e).all(|f| g.edge(f) != g.edge(e) && g.edge(f) != (g.head(e), g.tail(e))))
        .collect();
    let mut out = Vec::new();
    for mask in 0..1u64 << simple.len() {
        if mask.count_ones() as usize != n - 1 {
            continue;
        }
        let chosen: Vec<usize> = (0..simple.len()).filter(|&i| mask >> i & 1 == 1).map(|i| simple[i]).collect();
        let edge_mask = chosen.iter().fold(0u64, |m, &e| m | 1 << e);
        if g.rank(edge_mask) != n - 1 {
            continue;
        }
        extend_orders(g, &chosen, &mut RootedTree { root: q, arcs: Vec::new() }, 1 << q, &mut out);
    }
    Ok(out)
}

fn extend_orders(g: &Graph, edges: &[usize], cur: &mut RootedTree, reached: u64, out: &mut Vec<RootedTree>) {
    if cur.arcs.len() == edges.len() {
        out.push(cur.clone());
        return;
    }
    for &e in edges {
        if cur.arcs.iter().any(|&(f, _)| f == e) {
            continue;
        }
        for s in [Sign::Plus, Sign::Minus] {
            let (a, b) = g.arc(e, s);
            if reached >> a & 1 == 1 && reached >> b & 1 == 0 {
                cur.arcs.push((e, s));
                extend_orders(g, edges, cur, reached | 1 << b, out);
                cur.arcs.pop();
            }
        }
    }
}

/// First ordered tree (in enumeration order) for which both statements hold.
pub fn search_conjecture_tree(g: &Graph, q: usize, t: &Bivariate) -> Result<Option<RootedTree>> {
    for tree in ordered_rooted_trees(g, q)? {
        let ctx = SubparkingContext::from_tree(g, &tree)?;
        if ctx.verify_conjecture(t)?.ok() {
            return Ok(Some(tree));
        }
    }
    Ok(None)
}

/// Grows a burnt set from `q`, each step adding the largest arc leaving it,
/// until every vertex `v` has `c_v + 1` arrivals.
pub fn cori_le_borgne(g: &Graph, t: &RootedTree, c: &Divisor) -> Result<Fourientation> {
    if !is_qt_compatible(g, t) {
        return Err(Error::InvalidTree("reference data is not compatible with (q, T)".into()));
    }
    let q = t.root;
    check_vector(g, q, c)?;
    let n = g.vertex_count();
    let steps = c.degree() - c.0[q] + n as i64 - 1;
    let mut o = Fourientation::empty(g.edge_count());
    let mut indeg = vec![0i64; n];
    let full = |v: usize, indeg: &[i64]| v == q || indeg[v] - 1 == c.0[v];
    for _ in 0..steps {
        let burnt: Vec<bool> = (0..n).map(|v| full(v, &indeg)).collect();
        let arc = (0..g.edge_count())
            .rev()
            .flat_map(|e| [(e, Sign::Plus), (e, Sign::Minus)])
            .find(|&(e, s)| {
                let (a, b) = g.arc(e, s);
                burnt[a] && !burnt[b] && !o.contains(e, s)
            })
            .ok_or_else(|| Error::Precondition("burning stalled: not a parking function".into()))?;
        o.insert(arc.0, arc.1);
        indeg[g.arc(arc.0, arc.1).1] += 1;
    }
    Ok(o)
}

/// Every vertex is reachable from `q`.
pub fn is_q_connected(g: &Graph, o: &Fourientation, q: usize) -> bool {
    reachable_set(g, o, 1 << q) == low_bits(g.vertex_count())
}

/// No potential cycle in the fourientation sense, i.e. no directed cycle
/// of a partial orientation.
pub fn is_acyclic(g: &Graph, o: &Fourientation) -> bool {
    CutCycleIndex::new(g).potential_cycles(o).next().is_none()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Graph {
        Graph::new(3, vec![(0, 1), (0, 2), (1, 2)]).unwrap()
    }

    #[test]
    fn divisors_of_triangle() {
        let g = triangle();
        assert_eq!(divisor_of(&g, &Fourientation::full(3)), Divisor(vec![1, 1, 1]));
        assert_eq!(divisor_of(&g, &Fourientation::empty(3)), Divisor(vec![-1, -1, -1]));
        assert_eq!(canonical_divisor(&g), Divisor(vec![0, 0, 0]));
        assert!(Fourientation::all(3).all(|o| riemann_roch_complement_check(&g, &o)));
    }

    #[test]
    fn pivots_preserve_divisor() {
        let g = Graph::new(2, vec![(0, 1), (0, 1), (1, 1)]).unwrap();
        for o in Fourientation::all(3) {
            for p in pivots(&g, &o) {
                assert_eq!(divisor_of(&g, &p), divisor_of(&g, &o));
            }
        }
    }

    #[test]
    fn reversals() {
        let g = triangle();
        let cyc = g.simple_directed_cycles()[0].clone();
        let o = Fourientation::from_states(
            &cyc.traversals
                .iter()
                .fold(vec![EdgeState::Unoriented; 3], |mut v, &(e, s)| {
                    v[e] = EdgeState::oriented(s);
                    v
                }),
        );
        let r = cycle_reversal(&g, &o, &cyc).unwrap();
        assert_eq!(r, o.negate());
        assert_eq!(cycle_reversal_by_pivots(&g, &o, &cyc).unwrap(), r);
        let all_plus: Fourientation = "+++".parse().unwrap();
        let r = cut_reversal(&g, &all_plus, &DirectedCut::from_vertices(&[0])).unwrap();
        assert_eq!(r.to_string(), "--+");
        assert!(cut_reversal(&g, &all_plus, &DirectedCut::from_vertices(&[1])).is_err());
    }

    #[test]
    fn q_reduction_and_equivalence() {
        let g = triangle();
        let d = Divisor(vec![-1, 1, 0]);
        let e = Divisor(vec![-1, 0, 1]);
        let moved = apply_laplacian(&g, &d, &[3, -2, 5]);
        assert!(linearly_equivalent(&g, &d, &moved).unwrap());
        assert_eq!(linearly_equivalent(&g, &d, &e).unwrap(), q_reduced(&g, &d, 0).unwrap() == q_reduced(&g, &e, 0).unwrap());
        assert!(!linearly_equivalent(&g, &d, &Divisor(vec![0, 0, 1])).unwrap());
    }

    #[test]
    fn type_reduction_examples() {
        let g = triangle();
        let all_b = Fourientation::full(3);
        assert!(matches!(type_reduce(&g, &all_b, TypeTarget::A), Err(Error::Unrepresentable { .. })));
        let none = Fourientation::empty(3);
        assert_eq!(type_reduce(&g, &none, TypeTarget::A).unwrap(), none);
        assert!(type_reduce(&g, &none, TypeTarget::B).is_err());
    }

    #[test]
    fn parking_on_triangle() {
        let g = triangle();
        let pf = parking_functions(&g, 0).unwrap();
        assert_eq!(pf, vec![Divisor(vec![0, 0, 0]), Divisor(vec![0, 1, 0]), Divisor(vec![0, 0, 1])]);
        let max = maximal_parking_functions(&g, 0).unwrap();
        assert_eq!(max, vec![Divisor(vec![0, 1, 0]), Divisor(vec![0, 0, 1])]);
        assert_eq!(merino_polynomial(&g, 0).unwrap(), Univariate::from_i64(&[2, 1]));
        let looped = Graph::new(1, vec![(0, 0)]).unwrap();
        assert_eq!(parking_functions(&looped, 0), Err(Error::LoopsPresent));
    }

    #[test]
    fn trees() {
        let g = triangle();
        let star = RootedTree::star(&g, 0).unwrap();
        assert!(validate_tree(&g, &star));
        assert!(is_qt_compatible(&g, &star));
        let path = Graph::new(3, vec![(1, 2), (0, 1)]).unwrap();
        let bad = RootedTree { root: 0, arcs: vec![(0, Sign::Plus), (1, Sign::Plus)] };
        assert!(!validate_tree(&path, &bad));
    }
}
