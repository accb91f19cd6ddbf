//! Min-edge cut and cycle properties, plus the two exceptional cut classes.

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::fourientation::{
    oriented_bits, CutCycleIndex, EdgeState, Fourientation, IndexedCut, IndexedCycle,
};
use crate::graph::{Graph, Sign};
use crate::poly::Rational;

/// A set of edge states, stored as a 4-bit mask indexed by `EdgeState`.
/// The unoriented state plays the role of the empty orientation set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct StateSet(pub u8);

impl StateSet {
    pub const EMPTY: StateSet = StateSet(0);

    pub fn of(states: &[EdgeState]) -> StateSet {
        StateSet(states.iter().fold(0, |m, &s| m | 1 << s as u8))
    }

    pub fn contains(self, s: EdgeState) -> bool {
        self.0 >> s as u8 & 1 == 1
    }

    pub fn insert(&mut self, s: EdgeState) {
        self.0 |= 1 << s as u8;
    }

    pub fn is_subset(self, other: StateSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn states(self) -> Vec<EdgeState> {
        EdgeState::ALL.into_iter().filter(|&s| self.contains(s)).collect()
    }

    /// Swaps the two oriented states.
    pub fn negated(self) -> StateSet {
        StateSet::of(
            &self
                .states()
                .into_iter()
                .map(|s| match s {
                    EdgeState::OnlyPlus => EdgeState::OnlyMinus,
                    EdgeState::OnlyMinus => EdgeState::OnlyPlus,
                    other => other,
                })
                .collect::<Vec<_>>(),
        )
    }
}

impl fmt::Display for StateSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self
            .states()
            .into_iter()
            .map(|s| match s {
                EdgeState::Unoriented => "{}",
                EdgeState::OnlyPlus => "{+}",
                EdgeState::OnlyMinus => "{-}",
                EdgeState::Bioriented => "{+,-}",
            })
            .collect();
        write!(f, "{{{}}}", names.join(","))
    }
}

/// Trigger bits recording what a single potential cut or cycle looks like.
/// A class is violated exactly when a potential cut (cycle) raises one of
/// the class's bad bits.
pub mod trigger {
    /// Minimum edge neutral (unoriented in a cut, bioriented in a cycle)
    /// with `e_min^+` in the cut (cycle).
    pub const NEUTRAL_PLUS: u8 = 1;
    pub const NEUTRAL_MINUS: u8 = 2;
    /// Minimum edge oriented `+` only.
    pub const PLUS: u8 = 4;
    pub const MINUS: u8 = 8;
    /// No oriented edge at all.
    pub const NO_ORIENTED: u8 = 16;
    /// Smallest oriented edge carries `-` only.
    pub const FIRST_ORIENTED_MINUS: u8 = 32;
    pub const FIRST_ORIENTED_PLUS: u8 = 64;
    pub const BITS: u32 = 7;

    pub fn neutral(delta: crate::graph::Sign) -> u8 {
        match delta {
            crate::graph::Sign::Plus => NEUTRAL_PLUS,
            crate::graph::Sign::Minus => NEUTRAL_MINUS,
        }
    }
}

fn first_oriented_trigger(p: u64, edge_bits: u64) -> u8 {
    let hit = oriented_bits(p) & edge_bits;
    if hit == 0 {
        trigger::NO_ORIENTED
    } else if p >> hit.trailing_zeros() & 1 == 1 {
        trigger::FIRST_ORIENTED_PLUS
    } else {
        trigger::FIRST_ORIENTED_MINUS
    }
}

/// Triggers raised by one cut, assumed potential for `p`.
pub fn cut_trigger(c: &IndexedCut, p: u64) -> u8 {
    let head = match EdgeState::from_bits(p >> (2 * c.min_edge)) {
        EdgeState::Unoriented => trigger::neutral(c.min_sign),
        EdgeState::OnlyPlus => trigger::PLUS,
        EdgeState::OnlyMinus => trigger::MINUS,
        EdgeState::Bioriented => unreachable!("a potential cut has no bioriented edge"),
    };
    head | first_oriented_trigger(p, c.edge_bits)
}

/// Triggers raised by one cycle, assumed potential for `p`.
pub fn cycle_trigger(c: &IndexedCycle, p: u64) -> u8 {
    let head = match EdgeState::from_bits(p >> (2 * c.min_edge)) {
        EdgeState::Bioriented => trigger::neutral(c.min_sign),
        EdgeState::OnlyPlus => trigger::PLUS,
        EdgeState::OnlyMinus => trigger::MINUS,
        EdgeState::Unoriented => unreachable!("a potential cycle has no unoriented edge"),
    };
    head | first_oriented_trigger(p, c.edge_bits)
}

/// Union of triggers over all potential cuts and over all potential cycles.
pub fn triggers(index: &CutCycleIndex, p: u64) -> (u8, u8) {
    let mut cut = 0;
    for c in &index.cuts {
        if p & c.forbidden == 0 {
            cut |= cut_trigger(c, p);
        }
    }
    let mut cyc = 0;
    for c in &index.cycles {
        if p & c.required == c.required {
            cyc |= cycle_trigger(c, p);
        }
    }
    (cut, cyc)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CutProperty {
    /// Bad when the minimum edge has a state in `bad`; an unoriented
    /// minimum edge is only bad when `e_min^delta` points out of the source.
    MinEdge { bad: StateSet, delta: Sign },
    /// Every potential cut has an oriented edge and the smallest one is `+`.
    Weird,
    /// Every potential cut has an oriented edge and the smallest one is `-`.
    CoWeird,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CycleProperty {
    /// Bad when the minimum edge has a state in `bad`; a bioriented minimum
    /// edge is only bad when the cycle traverses it as `e_min^delta`.
    MinEdge { bad: StateSet, delta: Sign },
    /// Every potential cycle has an oriented edge and the smallest one is `+`.
    Weird,
    CoWeird,
}

const U: EdgeState = EdgeState::Unoriented;
const P: EdgeState = EdgeState::OnlyPlus;
const M: EdgeState = EdgeState::OnlyMinus;
const B: EdgeState = EdgeState::Bioriented;

pub const CUT_CLASS_NAMES: [&str; 8] = [
    "general",
    "directed",
    "negative",
    "positive",
    "connected",
    "co-connected",
    "neutral",
    "internal",
];

pub const CYCLE_CLASS_NAMES: [&str; 8] = [
    "general",
    "directed",
    "negative",
    "positive",
    "connected",
    "co-connected",
    "neutral",
    "external",
];

fn strip_prefix<'a>(name: &'a str, prefix: &str) -> &'a str {
    let lower = name.trim();
    lower.strip_prefix(prefix).unwrap_or(lower)
}

impl CutProperty {
    pub fn min_edge(bad: &[EdgeState]) -> CutProperty {
        CutProperty::MinEdge {
            bad: StateSet::of(bad),
            delta: Sign::Minus,
        }
    }

    /// Accepts the class names with or without a `cut-` prefix, plus the
    /// partial orientation aliases.
    pub fn named(name: &str) -> Result<CutProperty> {
        let key = strip_prefix(&name.to_ascii_lowercase(), "cut-").to_string();
        let bad: &[EdgeState] = match key.as_str() {
            "general" => &[],
            "directed" => &[U],
            "negative" | "minimal" => &[M],
            "positive" | "maximal" => &[P],
            "connected" => &[U, M],
            "co-connected" => &[U, P],
            "neutral" | "strongly-connected" => &[M, P],
            "internal" => &[U, M, P],
            "weird" => return Ok(CutProperty::Weird),
            "co-weird" => return Ok(CutProperty::CoWeird),
            _ => return Err(Error::UnknownClass(name.to_string())),
        };
        Ok(CutProperty::min_edge(bad))
    }

    /// The same property for the globally reversed fourientation.
    pub fn negated(self) -> CutProperty {
        match self {
            CutProperty::MinEdge { bad, delta } => CutProperty::MinEdge {
                bad: bad.negated(),
                delta: -delta,
            },
            CutProperty::Weird => CutProperty::CoWeird,
            CutProperty::CoWeird => CutProperty::Weird,
        }
    }

    pub fn bad_triggers(self) -> u8 {
        match self {
            CutProperty::MinEdge { bad, delta } => {
                let mut t = 0;
                if bad.contains(U) {
                    t |= trigger::neutral(delta);
                }
                if bad.contains(P) {
                    t |= trigger::PLUS;
                }
                if bad.contains(M) {
                    t |= trigger::MINUS;
                }
                t
            }
            CutProperty::Weird => trigger::NO_ORIENTED | trigger::FIRST_ORIENTED_MINUS,
            CutProperty::CoWeird => trigger::NO_ORIENTED | trigger::FIRST_ORIENTED_PLUS,
        }
    }

    /// Direct reading of the definition on one potential cut.
    pub fn is_bad(self, o: &Fourientation, cut: &IndexedCut) -> bool {
        match self {
            CutProperty::MinEdge { bad, delta } => {
                let s = o.state(cut.min_edge);
                bad.contains(s) && (s != U || cut.min_sign == delta)
            }
            CutProperty::Weird | CutProperty::CoWeird => {
                let first = (0..o.edge_count())
                    .filter(|&e| cut.edges >> e & 1 == 1)
                    .find(|&e| o.state(e).is_oriented());
                let wrong = if self == CutProperty::Weird { M } else { P };
                first.is_none_or(|e| o.state(e) == wrong)
            }
        }
    }
}

impl fmt::Display for CutProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CutProperty::MinEdge { bad, delta } => write!(f, "cut(X={bad}, delta={})", delta.symbol()),
            CutProperty::Weird => write!(f, "cut-weird"),
            CutProperty::CoWeird => write!(f, "cut-co-weird"),
        }
    }
}

impl CycleProperty {
    pub fn min_edge(bad: &[EdgeState]) -> CycleProperty {
        CycleProperty::MinEdge {
            bad: StateSet::of(bad),
            delta: Sign::Minus,
        }
    }

    /// Accepts the class names with or without a `cycle-` prefix, plus the
    /// partial orientation aliases.
    pub fn named(name: &str) -> Result<CycleProperty> {
        let key = strip_prefix(&name.to_ascii_lowercase(), "cycle-").to_string();
        let bad: &[EdgeState] = match key.as_str() {
            "general" => &[],
            "directed" => &[B],
            "negative" | "minimal" => &[M],
            "positive" | "maximal" => &[P],
            "connected" => &[B, M],
            "co-connected" => &[B, P],
            "neutral" | "acyclic" => &[M, P],
            "external" => &[B, M, P],
            "weird" => return Ok(CycleProperty::Weird),
            "co-weird" => return Ok(CycleProperty::CoWeird),
            _ => return Err(Error::UnknownClass(name.to_string())),
        };
        Ok(CycleProperty::min_edge(bad))
    }

    pub fn negated(self) -> CycleProperty {
        match self {
            CycleProperty::MinEdge { bad, delta } => CycleProperty::MinEdge {
                bad: bad.negated(),
                delta: -delta,
            },
            CycleProperty::Weird => CycleProperty::CoWeird,
            CycleProperty::CoWeird => CycleProperty::Weird,
        }
    }

    pub fn bad_triggers(self) -> u8 {
        match self {
            CycleProperty::MinEdge { bad, delta } => {
                let mut t = 0;
                if bad.contains(B) {
                    t |= trigger::neutral(delta);
                }
                if bad.contains(P) {
                    t |= trigger::PLUS;
                }
                if bad.contains(M) {
                    t |= trigger::MINUS;
                }
                t
            }
            CycleProperty::Weird => trigger::NO_ORIENTED | trigger::FIRST_ORIENTED_MINUS,
            CycleProperty::CoWeird => trigger::NO_ORIENTED | trigger::FIRST_ORIENTED_PLUS,
        }
    }

    pub fn is_bad(self, o: &Fourientation, cyc: &IndexedCycle) -> bool {
        match self {
            CycleProperty::MinEdge { bad, delta } => {
                let s = o.state(cyc.min_edge);
                bad.contains(s) && (s != B || cyc.min_sign == delta)
            }
            CycleProperty::Weird | CycleProperty::CoWeird => {
                let first = (0..o.edge_count())
                    .filter(|&e| cyc.edges >> e & 1 == 1)
                    .find(|&e| o.state(e).is_oriented());
                let wrong = if self == CycleProperty::Weird { M } else { P };
                first.is_none_or(|e| o.state(e) == wrong)
            }
        }
    }
}

impl fmt::Display for CycleProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CycleProperty::MinEdge { bad, delta } => {
                write!(f, "cycle(Y={bad}, delta={})", delta.symbol())
            }
            CycleProperty::Weird => write!(f, "cycle-weird"),
            CycleProperty::CoWeird => write!(f, "cycle-co-weird"),
        }
    }
}

pub fn good_for_cut(index: &CutCycleIndex, o: &Fourientation, spec: CutProperty) -> bool {
    index.potential_cuts(o).all(|c| !spec.is_bad(o, c))
}

pub fn good_for_cycle(index: &CutCycleIndex, o: &Fourientation, spec: CycleProperty) -> bool {
    index.potential_cycles(o).all(|c| !spec.is_bad(o, c))
}

/// Good for both properties, checked over every bipartition and every
/// simple directed cycle.
pub fn is_good(g: &Graph, o: &Fourientation, cut: CutProperty, cycle: CycleProperty) -> bool {
    let index = CutCycleIndex::new(g);
    good_for_cut(&index, o, cut) && good_for_cycle(&index, o, cycle)
}

/// States of a lone isthmus that the property rejects, read off the four
/// fourientations of a single edge between two vertices.
pub fn bad_isthmus_set(spec: CutProperty) -> StateSet {
    let g = Graph::new(2, vec![(0, 1)]).expect("single edge");
    let index = CutCycleIndex::new(&g);
    let mut out = StateSet::EMPTY;
    for s in EdgeState::ALL {
        if !good_for_cut(&index, &Fourientation::from_states(&[s]), spec) {
            out.insert(s);
        }
    }
    out
}

/// States of a lone loop that the property rejects.
pub fn bad_loop_set(spec: CycleProperty) -> StateSet {
    let g = Graph::new(1, vec![(0, 0)]).expect("single loop");
    let index = CutCycleIndex::new(&g);
    let mut out = StateSet::EMPTY;
    for s in EdgeState::ALL {
        if !good_for_cycle(&index, &Fourientation::from_states(&[s]), spec) {
            out.insert(s);
        }
    }
    out
}

/// Weights of an isthmus and of a loop in the Tutte recursion.
pub fn x0_y0(x: StateSet, y: StateSet, k: &Rational, l: &Rational, m: &Rational) -> (Rational, Rational) {
    let pick = |on: bool, v: &Rational| if on { v.clone() } else { Rational::zero() };
    let x0 = pick(!x.contains(P), k) + pick(!x.contains(M), k) + pick(!x.contains(U), l) + m;
    let y0 = pick(!y.contains(P), k) + pick(!y.contains(M), k) + l + pick(!y.contains(B), m);
    (x0, y0)
}

/// `x0` and `y0` as integer linear forms `(a, b, c)` meaning `a*k + b*l + c*m`.
pub fn x0_y0_coefficients(x: StateSet, y: StateSet) -> ((i64, i64, i64), (i64, i64, i64)) {
    let on = |b: bool| b as i64;
    (
        (on(!x.contains(P)) + on(!x.contains(M)), on(!x.contains(U)), 1),
        (on(!y.contains(P)) + on(!y.contains(M)), 1, on(!y.contains(B))),
    )
}
