//! Reliability, f- and h-polynomial identities, and admissibility scores
//! for bigraphical parameter lists.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::enumeration::{generating_polynomial, Histogram, SWEEP_EDGE_LIMIT};
use crate::error::{Error, Result};
use crate::fourientation::{CutCycleIndex, EdgeState, Fourientation, PartialOrientation};
use crate::graph::{DirectedCycle, Graph, Sign};
use crate::minedge::{good_for_cut, CutProperty, CycleProperty};
use crate::poly::{int, pow_rational, rat, rational_to_string, to_f64, Bivariate, Rational, Trivariate, Univariate};

/// `(1-p)^(n-1) p^g T(1, 1/p)` expanded in `p`.
pub fn reliability_polynomial(g: &Graph, t: &Bivariate) -> Univariate {
    let genus = g.cyclomatic_number();
    let mut sum = Univariate::zero();
    for (_, j, c) in t.terms() {
        sum = sum.add(&Univariate::monomial(c.clone(), genus - j));
    }
    Univariate::from_i64(&[1, -1]).pow(g.vertex_count() - 1).mul(&sum)
}

pub const SUBGRAPH_EDGE_LIMIT: usize = 20;

/// `sum over connected spanning H of p^(|E|-|H|) (1-p)^|H|`.
pub fn reliability_by_subgraphs(g: &Graph) -> Result<Univariate> {
    let m = g.edge_count();
    if m > SUBGRAPH_EDGE_LIMIT {
        return Err(Error::SizeLimit {
            what: "edge count for subgraph enumeration",
            actual: m,
            limit: SUBGRAPH_EDGE_LIMIT,
        });
    }
    let n1 = g.vertex_count() - 1;
    let mut by_size = vec![0u64; m + 1];
    for h in 0..1u64 << m {
        if g.rank(h) == n1 {
            by_size[h.count_ones() as usize] += 1;
        }
    }
    let p = Univariate::from_i64(&[0, 1]);
    let q = Univariate::from_i64(&[1, -1]);
    let mut out = Univariate::zero();
    for (size, &count) in by_size.iter().enumerate() {
        if count > 0 {
            out = out.add(&p.pow(m - size).mul(&q.pow(size)).scale(&BigInt::from(count)));
        }
    }
    Ok(out)
}

fn check_triple(k: &Rational, l: &Rational, m: &Rational) -> Result<()> {
    if k.is_negative() || l.is_negative() || m.is_negative() {
        return Err(Error::Precondition("k, l, m must be nonnegative".into()));
    }
    if int(2) * k + l + m != int(1) {
        return Err(Error::Precondition("k, l, m must satisfy 2k + l + m = 1".into()));
    }
    Ok(())
}

fn connected() -> CutProperty {
    CutProperty::named("connected").expect("known class")
}

/// Probability that a random fourientation (each edge oriented either way
/// with probability `k`, unoriented `l`, bioriented `m`) is cut connected.
pub fn cut_connected_probability(g: &Graph, k: &Rational, l: &Rational, m: &Rational) -> Result<Rational> {
    check_triple(k, l, m)?;
    let poly = generating_polynomial(g, connected(), CycleProperty::named("general")?)?;
    Ok(poly.eval(k, l, m))
}

pub type Triple = (Rational, Rational, Rational);

/// `(p(1-p), p^2, (1-p)^2)`, which has `k + l = p`.
pub fn directed_model(p: &Rational) -> Triple {
    let q = int(1) - p;
    (p * &q, p * p, &q * &q)
}

/// Five constraint-satisfying triples covering the three corollary
/// specializations, plus the directed model at 1/4, 1/3 and 1/2.
pub fn default_triples() -> Vec<Triple> {
    let mut out = vec![
        (rat(1, 4), rat(1, 4), rat(1, 4)),
        (int(0), rat(1, 3), rat(2, 3)),
        (rat(1, 3), rat(1, 3), int(0)),
        (rat(1, 3), int(0), rat(1, 3)),
        (rat(1, 8), rat(1, 2), rat(1, 4)),
    ];
    out.extend([rat(1, 4), rat(1, 3), rat(1, 2)].iter().map(directed_model));
    out
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReliabilityCheck {
    pub triple: Triple,
    pub probability: Rational,
    pub reliability: Rational,
    /// Specialization-specific count when the triple has a zero entry.
    pub corollary: Option<(&'static str, Rational)>,
}

impl ReliabilityCheck {
    pub fn ok(&self) -> bool {
        self.probability == self.reliability && self.corollary.as_ref().is_none_or(|(_, v)| *v == self.reliability)
    }

    pub fn to_json(&self) -> Value {
        let (k, l, m) = &self.triple;
        json!({
            "klm": [rational_to_string(k), rational_to_string(l), rational_to_string(m)],
            "probability": rational_to_string(&self.probability),
            "reliability": rational_to_string(&self.reliability),
            "corollary": self.corollary.as_ref().map(|(name, v)| json!({"name": name, "value": rational_to_string(v)})),
            "ok": self.ok(),
        })
    }
}

/// Compares the cut connected probability with `R(k + l)` at each triple.
/// Triples with `k = 0` are also checked against subgraph enumeration, and
/// triples with `l = 0` against the cut negative count of Type B
/// fourientations.
pub fn verify_reliability_theorem(g: &Graph, t: &Bivariate, hist: &Histogram, triples: &[Triple]) -> Result<Vec<ReliabilityCheck>> {
    let rel = reliability_polynomial(g, t);
    let general = CycleProperty::named("general")?;
    let cut_connected = hist.generating_polynomial(connected(), general);
    let cut_negative = hist.generating_polynomial(CutProperty::named("negative")?, general);
    let mut out = Vec::new();
    for (k, l, m) in triples {
        check_triple(k, l, m)?;
        let p = k + l;
        let corollary = if k.is_zero() {
            Some(("subgraph", reliability_by_subgraphs(g)?.eval(l)))
        } else if l.is_zero() {
            Some(("type-b-cut-negative", type_b_part(&cut_negative).eval(k, l, m)))
        } else if m.is_zero() {
            Some(("type-a-cut-connected", type_a_part(&cut_connected).eval(k, l, m)))
        } else {
            None
        };
        out.push(ReliabilityCheck {
            triple: (k.clone(), l.clone(), m.clone()),
            probability: cut_connected.eval(k, l, m),
            reliability: rel.eval(&p),
            corollary,
        });
    }
    Ok(out)
}

fn type_a_part(p: &Trivariate) -> Trivariate {
    filtered(p, |_, _, b| b == 0)
}

fn type_b_part(p: &Trivariate) -> Trivariate {
    filtered(p, |_, u, _| u == 0)
}

fn filtered(p: &Trivariate, keep: impl Fn(usize, usize, usize) -> bool) -> Trivariate {
    let mut out = Trivariate::zero();
    for ((o, u, b), c) in p.terms() {
        if keep(o, u, b) {
            out.add_term(o, u, b, c.clone());
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq)]
pub struct MonteCarloEstimate {
    pub trials: u64,
    pub hits: u64,
    pub estimate: f64,
    pub standard_error: f64,
}

impl MonteCarloEstimate {
    /// Within `sigmas` standard errors, with a floor of one trial's worth
    /// so degenerate estimates (all hits or none) are still comparable.
    pub fn agrees_with(&self, exact: f64, sigmas: f64) -> bool {
        let spread = self.standard_error.max(1.0 / self.trials as f64);
        (self.estimate - exact).abs() <= sigmas * spread
    }
}

/// Trial `i` draws from stream `i` of the seeded generator, so any subset
/// of trials can be reproduced on its own.
pub fn monte_carlo_cut_connected(
    g: &Graph,
    k: &Rational,
    l: &Rational,
    m: &Rational,
    trials: u64,
    seed: u64,
) -> Result<MonteCarloEstimate> {
    check_triple(k, l, m)?;
    if trials == 0 {
        return Err(Error::Precondition("at least one trial is needed".into()));
    }
    let (kf, lf) = (to_f64(k), to_f64(l));
    let index = CutCycleIndex::new(g);
    let target = connected();
    let mut hits = 0u64;
    for trial in 0..trials {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(trial);
        let mut o = Fourientation::empty(g.edge_count());
        for e in 0..g.edge_count() {
            let r: f64 = rng.random();
            let state = if r < kf {
                EdgeState::OnlyPlus
            } else if r < 2.0 * kf {
                EdgeState::OnlyMinus
            } else if r < 2.0 * kf + lf {
                EdgeState::Unoriented
            } else {
                EdgeState::Bioriented
            };
            o.set(e, state);
        }
        if good_for_cut(&index, &o, target) {
            hits += 1;
        }
    }
    let estimate = hits as f64 / trials as f64;
    Ok(MonteCarloEstimate {
        trials,
        hits,
        estimate,
        standard_error: (estimate * (1.0 - estimate) / trials as f64).sqrt(),
    })
}

/// One side of an f/h identity: the polynomial counted by a sweep and the
/// Tutte expression it should equal.
#[derive(Debug, Clone, PartialEq)]
pub struct Identity {
    pub name: &'static str,
    pub counted: Univariate,
    pub predicted: Univariate,
}

impl Identity {
    pub fn ok(&self) -> bool {
        self.counted == self.predicted
    }

    pub fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "counted": self.counted.to_json(),
            "predicted": self.predicted.to_json(),
            "ok": self.ok(),
        })
    }
}

pub const IDENTITY_EDGE_LIMIT: usize = 10;

/// Eight identities. On the cut side, with `F` the sum over cut connected
/// fourientations of `y^(top - |O^o| - 2|O^u|)`:
/// the size sum equals `(y+1)^(n-1) (y^2+y)^g T(1, 1+1/y)`,
/// `F = (1+y)^|E| T(1, 1+y)`, `F(y-1) = y^|E| T(1, y)`, and the cut
/// minimal partial orientations give `(1+y)^(n-1) T(1, 2+y)`.
/// The cycle side swaps the roles of `x` and `y` and of `n-1` and `g`.
pub fn f_polynomial_identities(g: &Graph, t: &Bivariate, hist: &Histogram) -> Result<Vec<Identity>> {
    if g.edge_count() > IDENTITY_EDGE_LIMIT {
        return Err(Error::SizeLimit {
            what: "edge count for f-polynomial identities",
            actual: g.edge_count(),
            limit: IDENTITY_EDGE_LIMIT,
        });
    }
    let edges = g.edge_count();
    let (n1, genus) = (g.vertex_count() - 1, g.cyclomatic_number());
    let general_cut = CutProperty::named("general")?;
    let general_cycle = CycleProperty::named("general")?;
    let cut_connected = hist.generating_polynomial(connected(), general_cycle);
    let cycle_connected = hist.generating_polynomial(general_cut, CycleProperty::named("connected")?);
    // a partial orientation's directed cuts see neutral edges as bioriented,
    // its directed cycles see them as unoriented
    let cut_minimal = type_b_part(&hist.generating_polynomial(CutProperty::named("negative")?, general_cycle));
    let cycle_minimal = type_a_part(&hist.generating_polynomial(general_cut, CycleProperty::named("negative")?));

    let y = Univariate::from_i64(&[0, 1]);
    let y1 = Univariate::shifted_variable(1);
    let y2 = Univariate::shifted_variable(2);
    let one = Univariate::one();
    // T evaluated with one argument fixed at 1 and the other a rational
    // function num/den, cleared by den^cap.
    let tx = |num: &Univariate, den: &Univariate| t.eval_cleared(num, den, n1, &one, &one, genus);
    let ty = |num: &Univariate, den: &Univariate| t.eval_cleared(&one, &one, n1, num, den, genus);

    let mut out = Vec::new();
    // cut side: faces are complements, of size |O^o| + 2|O^u|
    let cut_sizes = size_polynomial(&cut_connected, |o, u, _| o + 2 * u);
    out.push(Identity {
        name: "cut-face-count",
        counted: cut_sizes.clone(),
        predicted: y1.pow(n1 + genus).mul(&ty(&y1, &y)),
    });
    let cut_f = reverse(&cut_sizes, edges + genus);
    out.push(Identity {
        name: "cut-f-polynomial",
        counted: cut_f.clone(),
        predicted: y1.pow(edges).mul(&ty(&y1, &one)),
    });
    out.push(Identity {
        name: "cut-h-polynomial",
        counted: cut_f.shift(-1),
        predicted: y.pow(edges).mul(&ty(&y, &one)),
    });
    out.push(Identity {
        name: "cut-minimal-f-polynomial",
        counted: reverse(&size_polynomial(&cut_minimal, |o, _, _| o), edges),
        predicted: y1.pow(n1).mul(&ty(&y2, &one)),
    });
    // cycle side: faces are reversals, of size |O^o| + 2|O^b|
    let cycle_sizes = size_polynomial(&cycle_connected, |o, _, b| o + 2 * b);
    out.push(Identity {
        name: "cycle-face-count",
        counted: cycle_sizes.clone(),
        predicted: y1.pow(genus + n1).mul(&tx(&y1, &y)),
    });
    let cycle_f = reverse(&cycle_sizes, edges + n1);
    out.push(Identity {
        name: "cycle-f-polynomial",
        counted: cycle_f.clone(),
        predicted: y1.pow(edges).mul(&tx(&y1, &one)),
    });
    out.push(Identity {
        name: "cycle-h-polynomial",
        counted: cycle_f.shift(-1),
        predicted: y.pow(edges).mul(&tx(&y, &one)),
    });
    out.push(Identity {
        name: "cycle-minimal-f-polynomial",
        counted: reverse(&size_polynomial(&cycle_minimal, |o, _, _| o), edges),
        predicted: y1.pow(genus).mul(&tx(&y2, &one)),
    });
    Ok(out)
}

fn size_polynomial(p: &Trivariate, size: impl Fn(usize, usize, usize) -> usize) -> Univariate {
    let mut out = Univariate::zero();
    for ((o, u, b), c) in p.terms() {
        out = out.add(&Univariate::monomial(c.clone(), size(o, u, b)));
    }
    out
}

/// `y^top p(1/y)`.
fn reverse(p: &Univariate, top: usize) -> Univariate {
    let mut out = Univariate::zero();
    for (i, c) in p.coeffs().iter().enumerate() {
        out = out.add(&Univariate::monomial(c.clone(), top - i));
    }
    out
}

pub fn f_identities_for(g: &Graph, t: &Bivariate) -> Result<Vec<Identity>> {
    if g.edge_count() > SWEEP_EDGE_LIMIT.min(IDENTITY_EDGE_LIMIT) {
        return Err(Error::SizeLimit {
            what: "edge count for f-polynomial identities",
            actual: g.edge_count(),
            limit: IDENTITY_EDGE_LIMIT,
        });
    }
    f_polynomial_identities(g, t, &Histogram::sweep(g)?)
}

/// Positive weights `a(e^+)`, `a(e^-)` on the directed edges.
#[derive(Debug, Clone, PartialEq)]
pub struct ParameterList {
    weights: Vec<(Rational, Rational)>,
    /// Whether the arrangement these parameters define is known to be
    /// generic. Not checked; the exponential list is.
    pub generic: bool,
}

impl ParameterList {
    pub fn new(weights: Vec<(Rational, Rational)>, generic: bool) -> Result<ParameterList> {
        if weights.iter().any(|(a, b)| !a.is_positive() || !b.is_positive()) {
            return Err(Error::Precondition("parameters must be positive".into()));
        }
        Ok(ParameterList { weights, generic })
    }

    /// `a(e^+) = a(e^-) = 2^-(i+1)` for edge `i`.
    pub fn exponential(edge_count: usize) -> ParameterList {
        let half = rat(1, 2);
        ParameterList {
            weights: (0..edge_count)
                .map(|i| {
                    let w = pow_rational(&half, i + 1);
                    (w.clone(), w)
                })
                .collect(),
            generic: true,
        }
    }

    pub fn weight(&self, e: usize, s: Sign) -> &Rational {
        match s {
            Sign::Plus => &self.weights[e].0,
            Sign::Minus => &self.weights[e].1,
        }
    }

    pub fn edge_count(&self) -> usize {
        self.weights.len()
    }
}

/// Cycles of a partial orientation whose oriented edges all point along.
pub fn potential_cycles(g: &Graph, o: &PartialOrientation) -> Vec<DirectedCycle> {
    g.simple_directed_cycles().into_iter().filter(|c| is_potential(o, c)).collect()
}

fn is_potential(o: &PartialOrientation, c: &DirectedCycle) -> bool {
    c.traversals.iter().all(|&(e, s)| o.0[e].is_none_or(|d| d == s))
}

fn admissible_among(o: &PartialOrientation, cycles: &[DirectedCycle], a: &ParameterList) -> bool {
    cycles
        .iter()
        .filter(|c| is_potential(o, c))
        .all(|c| cycle_score(o, c, a).is_positive())
}

/// Neutral edges add the weight of the direction traversed; oriented edges
/// subtract the weight of the opposite direction.
pub fn cycle_score(o: &PartialOrientation, cyc: &DirectedCycle, a: &ParameterList) -> Rational {
    let mut score = Rational::zero();
    for &(e, s) in &cyc.traversals {
        match o.0[e] {
            None => score += a.weight(e, s),
            Some(d) => score -= a.weight(e, -d),
        }
    }
    score
}

pub fn is_admissible(g: &Graph, o: &PartialOrientation, a: &ParameterList) -> Result<bool> {
    if o.0.len() != g.edge_count() || a.edge_count() != g.edge_count() {
        return Err(Error::Precondition("orientation and parameters must cover every edge".into()));
    }
    Ok(admissible_among(o, &g.simple_directed_cycles(), a))
}

/// Counts Type A fourientations where exponential admissibility and the
/// neutral cycle class (applied to the image with neutral edges made
/// bioriented) disagree; zero is expected.
pub fn admissibility_mismatches(g: &Graph) -> Result<(u64, u64)> {
    let m = g.edge_count();
    let a = ParameterList::exponential(m);
    let index = CutCycleIndex::new(g);
    let neutral = CycleProperty::named("neutral")?;
    let cycles = g.simple_directed_cycles();
    let (mut admissible, mut mismatches) = (0u64, 0u64);
    for code in 0..3u64.pow(m as u32) {
        let mut rest = code;
        let po = PartialOrientation(
            (0..m)
                .map(|_| {
                    let s = [None, Some(Sign::Plus), Some(Sign::Minus)][(rest % 3) as usize];
                    rest /= 3;
                    s
                })
                .collect(),
        );
        let ok = admissible_among(&po, &cycles, &a);
        admissible += ok as u64;
        if ok != crate::minedge::good_for_cycle(&index, &po.to_type_b(), neutral) {
            mismatches += 1;
        }
    }
    Ok((admissible, mismatches))
}

/// `2^(n-1) T(3/2, 1)` computed from the Tutte polynomial.
pub fn predicted_admissible_count(g: &Graph, t: &Bivariate) -> Rational {
    pow_rational(&int(2), g.vertex_count() - 1) * t.eval(&rat(3, 2), &Rational::one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tutte::tutte_polynomial;

    fn triangle() -> Graph {
        Graph::new(3, vec![(0, 1), (0, 2), (1, 2)]).unwrap()
    }

    #[test]
    fn triangle_reliability() {
        let g = triangle();
        let t = tutte_polynomial(&g);
        let r = reliability_polynomial(&g, &t);
        assert_eq!(r, Univariate::from_i64(&[1, 0, -3, 2]));
        assert_eq!(r, reliability_by_subgraphs(&g).unwrap());
        assert_eq!(r.eval(&rat(1, 2)), rat(1, 2));
        let p = cut_connected_probability(&g, &rat(1, 4), &rat(1, 4), &rat(1, 4)).unwrap();
        assert_eq!(p, rat(1, 2));
        assert!(cut_connected_probability(&g, &rat(1, 2), &rat(1, 2), &int(0)).is_err());
    }

    #[test]
    fn triangle_admissibility() {
        let g = triangle();
        let a = ParameterList::exponential(3);
        assert!(is_admissible(&g, &PartialOrientation(vec![None; 3]), &a).unwrap());
        let cyclic = PartialOrientation(vec![Some(Sign::Plus), Some(Sign::Minus), Some(Sign::Plus)]);
        assert!(!is_admissible(&g, &cyclic, &a).unwrap());
        let (count, mismatches) = admissibility_mismatches(&g).unwrap();
        assert_eq!((count, mismatches), (19, 0));
        assert_eq!(predicted_admissible_count(&g, &tutte_polynomial(&g)), int(19));
        assert!(a.generic);
    }
}
