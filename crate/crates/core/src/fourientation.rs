//! Fourientations: each edge carries any subset of its two orientations.
//!
//! Packed two bits per edge: bit `2e` is `e^+`, bit `2e+1` is `e^-`. Read as
//! a base-4 number this is also the sweep index of the fourientation.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{low_bits, DirectedCut, DirectedCycle, Graph, Sign};

/// Fourientations are packed into a `u64`.
pub const MAX_EDGES: usize = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeState {
    Unoriented = 0,
    OnlyPlus = 1,
    OnlyMinus = 2,
    Bioriented = 3,
}

impl EdgeState {
    pub const ALL: [EdgeState; 4] = [
        EdgeState::Unoriented,
        EdgeState::OnlyPlus,
        EdgeState::OnlyMinus,
        EdgeState::Bioriented,
    ];

    pub fn from_bits(b: u64) -> EdgeState {
        EdgeState::ALL[(b & 3) as usize]
    }

    pub fn bits(self) -> u64 {
        self as u64
    }

    pub fn has(self, s: Sign) -> bool {
        self.bits() >> sign_bit(s) & 1 == 1
    }

    pub fn is_oriented(self) -> bool {
        matches!(self, EdgeState::OnlyPlus | EdgeState::OnlyMinus)
    }

    /// The single orientation of an oriented edge.
    pub fn orientation(self) -> Option<Sign> {
        match self {
            EdgeState::OnlyPlus => Some(Sign::Plus),
            EdgeState::OnlyMinus => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn oriented(s: Sign) -> EdgeState {
        match s {
            Sign::Plus => EdgeState::OnlyPlus,
            Sign::Minus => EdgeState::OnlyMinus,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            EdgeState::Unoriented => 'u',
            EdgeState::OnlyPlus => '+',
            EdgeState::OnlyMinus => '-',
            EdgeState::Bioriented => 'b',
        }
    }
}

pub(crate) fn sign_bit(s: Sign) -> u32 {
    match s {
        Sign::Plus => 0,
        Sign::Minus => 1,
    }
}

/// Bit of `e^s` in the packed representation.
pub fn arc_bit(e: usize, s: Sign) -> u64 {
    1u64 << (2 * e as u32 + sign_bit(s))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fourientation {
    edge_count: usize,
    packed: u64,
}

impl Fourientation {
    /// All edges unoriented.
    pub fn empty(edge_count: usize) -> Fourientation {
        assert!(edge_count <= MAX_EDGES, "at most {MAX_EDGES} edges");
        Fourientation { edge_count, packed: 0 }
    }

    pub fn full(edge_count: usize) -> Fourientation {
        Fourientation::from_packed(edge_count, u64::MAX)
    }

    /// Extra high bits are masked off.
    pub fn from_packed(edge_count: usize, packed: u64) -> Fourientation {
        assert!(edge_count <= MAX_EDGES, "at most {MAX_EDGES} edges");
        Fourientation {
            edge_count,
            packed: packed & low_bits(2 * edge_count),
        }
    }

    pub fn from_states(states: &[EdgeState]) -> Fourientation {
        let mut o = Fourientation::empty(states.len());
        for (e, &s) in states.iter().enumerate() {
            o.set(e, s);
        }
        o
    }

    pub fn total(orientation: &[Sign]) -> Fourientation {
        let states: Vec<EdgeState> = orientation.iter().map(|&s| EdgeState::oriented(s)).collect();
        Fourientation::from_states(&states)
    }

    /// Every fourientation on `edge_count` edges, in base-4 order.
    pub fn all(edge_count: usize) -> impl Iterator<Item = Fourientation> {
        assert!(edge_count <= 31, "enumeration limited to 31 edges");
        (0..1u64 << (2 * edge_count)).map(move |p| Fourientation { edge_count, packed: p })
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn packed(&self) -> u64 {
        self.packed
    }

    pub fn state(&self, e: usize) -> EdgeState {
        EdgeState::from_bits(self.packed >> (2 * e))
    }

    pub fn states(&self) -> Vec<EdgeState> {
        (0..self.edge_count).map(|e| self.state(e)).collect()
    }

    pub fn set(&mut self, e: usize, s: EdgeState) {
        assert!(e < self.edge_count, "edge {e} out of range");
        self.packed = self.packed & !(3 << (2 * e)) | s.bits() << (2 * e);
    }

    pub fn with(mut self, e: usize, s: EdgeState) -> Fourientation {
        self.set(e, s);
        self
    }

    /// Whether `e^s` belongs to the fourientation.
    pub fn contains(&self, e: usize, s: Sign) -> bool {
        self.packed & arc_bit(e, s) != 0
    }

    pub fn insert(&mut self, e: usize, s: Sign) {
        self.packed |= arc_bit(e, s);
    }

    pub fn remove(&mut self, e: usize, s: Sign) {
        self.packed &= !arc_bit(e, s);
    }

    /// `(|O^o|, |O^u|, |O^b|)`
    pub fn counts(&self) -> (usize, usize, usize) {
        let evens = 0x5555_5555_5555_5555u64 & low_bits(2 * self.edge_count);
        let b = (self.packed & self.packed >> 1 & evens).count_ones() as usize;
        let any = ((self.packed | self.packed >> 1) & evens).count_ones() as usize;
        (any - b, self.edge_count - any, b)
    }

    /// `E(G)` minus `O`, as directed edges.
    pub fn complement(&self) -> Fourientation {
        Fourientation::from_packed(self.edge_count, !self.packed)
    }

    /// Every orientation replaced by its reverse.
    pub fn negate(&self) -> Fourientation {
        let evens = 0x5555_5555_5555_5555u64;
        let p = self.packed;
        Fourientation::from_packed(self.edge_count, (p & evens) << 1 | (p >> 1) & evens)
    }

    fn no_state(&self, s: EdgeState) -> bool {
        (0..self.edge_count).all(|e| self.state(e) != s)
    }

    pub fn is_type_a(&self) -> bool {
        self.no_state(EdgeState::Bioriented)
    }

    pub fn is_type_b(&self) -> bool {
        self.no_state(EdgeState::Unoriented)
    }

    pub fn is_total(&self) -> bool {
        (0..self.edge_count).all(|e| self.state(e).is_oriented())
    }

    pub fn is_subgraph(&self) -> bool {
        (0..self.edge_count).all(|e| !self.state(e).is_oriented())
    }

    /// Type A reading: unoriented edges are neutral.
    pub fn to_partial_orientation_a(&self) -> Result<PartialOrientation> {
        if !self.is_type_a() {
            return Err(Error::Precondition("fourientation has a bioriented edge".into()));
        }
        Ok(PartialOrientation(self.states().iter().map(|s| s.orientation()).collect()))
    }

    /// Type B reading: bioriented edges are neutral.
    pub fn to_partial_orientation_b(&self) -> Result<PartialOrientation> {
        if !self.is_type_b() {
            return Err(Error::Precondition("fourientation has an unoriented edge".into()));
        }
        Ok(PartialOrientation(self.states().iter().map(|s| s.orientation()).collect()))
    }

    /// Edge mask of the bioriented edges of a fourientation with no oriented edge.
    pub fn to_subgraph(&self) -> Result<u64> {
        if !self.is_subgraph() {
            return Err(Error::Precondition("fourientation has an oriented edge".into()));
        }
        Ok(self.mask_of(EdgeState::Bioriented))
    }

    pub fn from_subgraph(edge_count: usize, mask: u64) -> Fourientation {
        let mut o = Fourientation::empty(edge_count);
        for e in 0..edge_count {
            if mask >> e & 1 == 1 {
                o.set(e, EdgeState::Bioriented);
            }
        }
        o
    }

    pub fn mask_of(&self, s: EdgeState) -> u64 {
        (0..self.edge_count)
            .filter(|&e| self.state(e) == s)
            .fold(0, |m, e| m | 1 << e)
    }

    pub fn oriented_mask(&self) -> u64 {
        (0..self.edge_count)
            .filter(|&e| self.state(e).is_oriented())
            .fold(0, |m, e| m | 1 << e)
    }

    /// Restriction to the edges of a minor, which keeps edges in order.
    pub fn restrict(&self, kept: u64) -> Fourientation {
        let states: Vec<EdgeState> = (0..self.edge_count)
            .filter(|&e| kept >> e & 1 == 1)
            .map(|e| self.state(e))
            .collect();
        Fourientation::from_states(&states)
    }

    pub fn check_graph(&self, g: &Graph) -> Result<()> {
        if self.edge_count != g.edge_count() {
            return Err(Error::Precondition(format!(
                "fourientation has {} edges, graph has {}",
                self.edge_count,
                g.edge_count()
            )));
        }
        Ok(())
    }
}

impl fmt::Display for Fourientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in 0..self.edge_count {
            write!(f, "{}", self.state(e).symbol())?;
        }
        Ok(())
    }
}

/// Literal with one character per edge: `+`, `-`, `u`, `b`.
impl FromStr for Fourientation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Fourientation> {
        let states = s
            .trim()
            .chars()
            .map(|c| match c {
                '+' => Ok(EdgeState::OnlyPlus),
                '-' => Ok(EdgeState::OnlyMinus),
                'u' | 'U' => Ok(EdgeState::Unoriented),
                'b' | 'B' => Ok(EdgeState::Bioriented),
                _ => Err(Error::Parse(format!("bad fourientation character '{c}'"))),
            })
            .collect::<Result<Vec<_>>>()?;
        if states.len() > MAX_EDGES {
            return Err(Error::SizeLimit {
                what: "edge count",
                actual: states.len(),
                limit: MAX_EDGES,
            });
        }
        Ok(Fourientation::from_states(&states))
    }
}

/// Each edge oriented one way or left neutral (`None`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartialOrientation(pub Vec<Option<Sign>>);

impl PartialOrientation {
    pub fn to_type_a(&self) -> Fourientation {
        let states: Vec<EdgeState> = self
            .0
            .iter()
            .map(|s| s.map_or(EdgeState::Unoriented, EdgeState::oriented))
            .collect();
        Fourientation::from_states(&states)
    }

    pub fn to_type_b(&self) -> Fourientation {
        let states: Vec<EdgeState> = self
            .0
            .iter()
            .map(|s| s.map_or(EdgeState::Bioriented, EdgeState::oriented))
            .collect();
        Fourientation::from_states(&states)
    }
}

pub fn is_potential_cut(g: &Graph, o: &Fourientation, cut: &DirectedCut) -> bool {
    cut.arcs(g).iter().all(|&(e, s)| !o.contains(e, -s))
}

pub fn is_potential_cycle(o: &Fourientation, cyc: &DirectedCycle) -> bool {
    cyc.traversals.iter().all(|&(e, s)| o.contains(e, s))
}

/// Directed cuts and simple directed cycles of a graph with the bitmasks
/// needed to test them against packed fourientations.
#[derive(Debug, Clone)]
pub struct CutCycleIndex {
    pub cuts: Vec<IndexedCut>,
    pub cycles: Vec<IndexedCycle>,
}

#[derive(Debug, Clone)]
pub struct IndexedCut {
    pub cut: DirectedCut,
    /// Arcs pointing from U^c to U; a potential cut contains none of them.
    pub forbidden: u64,
    pub edges: u64,
    /// `edges` spread to the `2e` bit positions.
    pub edge_bits: u64,
    pub min_edge: usize,
    /// Orientation of the minimum edge pointing from U to U^c.
    pub min_sign: Sign,
}

#[derive(Debug, Clone)]
pub struct IndexedCycle {
    pub cycle: DirectedCycle,
    /// Arcs a potential cycle needs.
    pub required: u64,
    pub edges: u64,
    pub edge_bits: u64,
    pub min_edge: usize,
    /// Orientation in which the cycle traverses its minimum edge.
    pub min_sign: Sign,
}

impl CutCycleIndex {
    pub fn new(g: &Graph) -> CutCycleIndex {
        let cuts = g
            .directed_cuts()
            .into_iter()
            .filter_map(|cut| {
                let arcs = cut.arcs(g);
                let &(min_edge, min_sign) = arcs.first()?;
                let forbidden = arcs.iter().fold(0, |m, &(e, s)| m | arc_bit(e, -s));
                let edges = arcs.iter().fold(0, |m, &(e, _)| m | 1 << e);
                Some(IndexedCut {
                    cut,
                    forbidden,
                    edges,
                    edge_bits: spread(edges),
                    min_edge,
                    min_sign,
                })
            })
            .collect();
        let cycles = g
            .simple_directed_cycles()
            .into_iter()
            .map(|cycle| {
                let required = cycle.traversals.iter().fold(0, |m, &(e, s)| m | arc_bit(e, s));
                let (min_edge, min_sign) = cycle.traversals[0];
                IndexedCycle {
                    edges: cycle.edge_mask(),
                    edge_bits: spread(cycle.edge_mask()),
                    cycle,
                    required,
                    min_edge,
                    min_sign,
                }
            })
            .collect();
        CutCycleIndex { cuts, cycles }
    }

    pub fn potential_cuts<'a>(&'a self, o: &Fourientation) -> impl Iterator<Item = &'a IndexedCut> {
        let p = o.packed();
        self.cuts.iter().filter(move |c| p & c.forbidden == 0)
    }

    pub fn potential_cycles<'a>(&'a self, o: &Fourientation) -> impl Iterator<Item = &'a IndexedCycle> {
        let p = o.packed();
        self.cycles.iter().filter(move |c| p & c.required == c.required)
    }
}

/// Moves bit `e` to bit `2e`.
pub fn spread(mask: u64) -> u64 {
    (0..32).filter(|&e| mask >> e & 1 == 1).fold(0, |m, e| m | 1 << (2 * e))
}

/// Bits `2e` of the edges with exactly one orientation present.
pub fn oriented_bits(packed: u64) -> u64 {
    (packed ^ packed >> 1) & EVEN_BITS
}

pub const EVEN_BITS: u64 = 0x5555_5555_5555_5555;

/// Vertices reachable from `start` (a vertex mask) along arcs of `o`.
pub fn reachable_set(g: &Graph, o: &Fourientation, start: u64) -> u64 {
    let mut seen = start;
    loop {
        let mut next = seen;
        for (e, &(t, h)) in g.edges().iter().enumerate() {
            if o.contains(e, Sign::Plus) && seen >> t & 1 == 1 {
                next |= 1 << h;
            }
            if o.contains(e, Sign::Minus) && seen >> h & 1 == 1 {
                next |= 1 << t;
            }
        }
        if next == seen {
            return seen;
        }
        seen = next;
    }
}

pub fn reachable(g: &Graph, o: &Fourientation, u: usize, v: usize) -> bool {
    reachable_set(g, o, 1 << u) >> v & 1 == 1
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeType {
    Cut,
    Cycle,
}

/// Each oriented edge lies in a potential cut or a potential cycle, never
/// both. Non-oriented edges map to `None`.
pub fn classify_oriented_edges(g: &Graph, o: &Fourientation) -> Vec<Option<EdgeType>> {
    (0..g.edge_count())
        .map(|e| {
            let s = o.state(e).orientation()?;
            let (a, b) = g.arc(e, s);
            let from_head = reachable_set(g, o, 1 << b);
            Some(if from_head >> a & 1 == 1 {
                EdgeType::Cycle
            } else {
                EdgeType::Cut
            })
        })
        .collect()
}

/// Edges lying in some potential cut of `o`.
pub fn cut_edge_set(g: &Graph, o: &Fourientation) -> u64 {
    CutCycleIndex::new(g).potential_cuts(o).fold(0, |m, c| m | c.edges)
}

/// Edges lying in some potential cycle of `o`.
pub fn cycle_edge_set(g: &Graph, o: &Fourientation) -> u64 {
    CutCycleIndex::new(g).potential_cycles(o).fold(0, |m, c| m | c.edges)
}

/// A bipartition of the edges; `part` is the distinguished side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EdgeDecomposition {
    pub part: u64,
    pub edge_count: usize,
}

impl EdgeDecomposition {
    pub fn rest(&self) -> u64 {
        !self.part & low_bits(self.edge_count)
    }
}

/// `E_cu`: every edge of `part` lies in a potential cut of the minor that
/// contracts the rest, and no other edge lies in a potential cut of the
/// minor that deletes `part`.
pub fn cut_decomposition(g: &Graph, o: &Fourientation) -> EdgeDecomposition {
    EdgeDecomposition {
        part: cut_edge_set(g, o),
        edge_count: g.edge_count(),
    }
}

/// `E_cy`, dual to [`cut_decomposition`].
pub fn cycle_decomposition(g: &Graph, o: &Fourientation) -> EdgeDecomposition {
    EdgeDecomposition {
        part: cycle_edge_set(g, o),
        edge_count: g.edge_count(),
    }
}

/// Maps an edge set of the minor keeping `kept` back to `g`'s positions.
fn lift(mask: u64, kept: u64, m: usize) -> u64 {
    let positions: Vec<usize> = (0..m).filter(|&e| kept >> e & 1 == 1).collect();
    positions
        .iter()
        .enumerate()
        .filter(|&(i, _)| mask >> i & 1 == 1)
        .fold(0, |acc, (_, &e)| acc | 1 << e)
}

/// Conditions (a) and (b) for a proposed cut side `a`.
pub fn satisfies_cut_conditions(g: &Graph, o: &Fourientation, a: u64) -> bool {
    let m = g.edge_count();
    let full = low_bits(m);
    let rest = !a & full;
    let contracted = g.contract_set(rest);
    let in_cuts = lift(cut_edge_set(&contracted, &o.restrict(a)), a, m);
    let deleted = g.delete_set(a);
    let outside = lift(cut_edge_set(&deleted, &o.restrict(rest)), rest, m);
    in_cuts & a == a && outside & rest == 0
}

/// Conditions (a) and (b) for a proposed cycle side `a`.
pub fn satisfies_cycle_conditions(g: &Graph, o: &Fourientation, a: u64) -> bool {
    let m = g.edge_count();
    let full = low_bits(m);
    let rest = !a & full;
    let deleted = g.delete_set(rest);
    let in_cycles = lift(cycle_edge_set(&deleted, &o.restrict(a)), a, m);
    let contracted = g.contract_set(a);
    let outside = lift(cycle_edge_set(&contracted, &o.restrict(rest)), rest, m);
    in_cycles & a == a && outside & rest == 0
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Graph {
        Graph::new(3, vec![(0, 1), (0, 2), (1, 2)]).unwrap()
    }

    fn example_graph() -> Graph {
        Graph::new(5, vec![(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap()
    }

    #[test]
    fn literal_round_trip_and_counts() {
        let o: Fourientation = "ub+b+-".parse().unwrap();
        assert_eq!(o.to_string(), "ub+b+-");
        assert_eq!(o.counts(), (3, 1, 2));
        assert_eq!(o.complement().to_string(), "bu-u-+");
        assert_eq!(o.negate().to_string(), "ub-b-+");
        assert!("u+x".parse::<Fourientation>().is_err());
    }

    #[test]
    fn type_counts_on_triangle() {
        let all: Vec<_> = Fourientation::all(3).collect();
        assert_eq!(all.len(), 64);
        assert_eq!(all.iter().filter(|o| o.is_type_a()).count(), 27);
        assert_eq!(all.iter().filter(|o| o.is_type_b()).count(), 27);
        assert_eq!(all.iter().filter(|o| o.is_total()).count(), 8);
        assert_eq!(all.iter().filter(|o| o.is_subgraph()).count(), 8);
    }

    #[test]
    fn example_potential_cut_and_cycle() {
        let g = example_graph();
        let o: Fourientation = "ub+b+-".parse().unwrap();
        assert!(is_potential_cut(&g, &o, &DirectedCut::from_vertices(&[1])));
        let cyc = DirectedCycle::new(
            vec![0, 2, 3, 4],
            vec![(1, Sign::Plus), (3, Sign::Plus), (4, Sign::Plus), (5, Sign::Minus)],
        );
        assert!(cyc.is_closed_walk(&g));
        assert!(is_potential_cycle(&o, &cyc));
        let types = classify_oriented_edges(&g, &o);
        assert_eq!(types[2], Some(EdgeType::Cut));
        assert_eq!(types[4], Some(EdgeType::Cycle));
        assert_eq!(types[5], Some(EdgeType::Cycle));
    }

    #[test]
    fn extreme_fourientations() {
        let g = triangle();
        let idx = CutCycleIndex::new(&g);
        let none = Fourientation::empty(3);
        let all = Fourientation::full(3);
        assert_eq!(idx.potential_cuts(&none).count(), 6);
        assert_eq!(idx.potential_cycles(&none).count(), 0);
        assert_eq!(idx.potential_cuts(&all).count(), 0);
        assert_eq!(cut_decomposition(&g, &none).part, 0b111);
        assert_eq!(cycle_decomposition(&g, &all).part, 0b111);
    }

    #[test]
    fn reachability() {
        let g = triangle();
        let o = Fourientation::empty(3).with(0, EdgeState::OnlyPlus);
        assert!(reachable(&g, &o, 0, 1));
        assert!(!reachable(&g, &o, 1, 0));
        assert!(reachable(&g, &o, 2, 2));
        let b = Fourientation::empty(3).with(0, EdgeState::Bioriented);
        assert!(reachable(&g, &b, 1, 0));
    }

    #[test]
    fn decomposition_conditions_hold_and_are_unique() {
        let g = example_graph();
        let o: Fourientation = "ub+b+-".parse().unwrap();
        let cu = cut_decomposition(&g, &o).part;
        let cy = cycle_decomposition(&g, &o).part;
        let hits: Vec<u64> = (0..64).filter(|&a| satisfies_cut_conditions(&g, &o, a)).collect();
        assert_eq!(hits, vec![cu]);
        let hits: Vec<u64> = (0..64).filter(|&a| satisfies_cycle_conditions(&g, &o, a)).collect();
        assert_eq!(hits, vec![cy]);
    }
}
