//! Tutte polynomial by deletion-contraction, an independent subset
//! expansion, and the generalized evaluation counting good fourientations.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::{pow_rational, Bivariate, Rational, Trivariate};

type Memo = BTreeMap<(usize, Vec<(usize, usize)>), Bivariate>;

/// Deletion-contraction on the largest edge.
pub fn tutte_polynomial(g: &Graph) -> Bivariate {
    let mut memo = BTreeMap::new();
    recurse(g.vertex_count(), g.edges(), &mut memo)
}

fn recurse(
    n: usize,
    edges: &[(usize, usize)],
    memo: &mut Memo,
) -> Bivariate {
    let Some(&(t, h)) = edges.last() else {
        return Bivariate::one();
    };
    let key = (n, edges.to_vec());
    if let Some(p) = memo.get(&key) {
        return p.clone();
    }
    let rest = &edges[..edges.len() - 1];
    let out = if t == h {
        Bivariate::y().mul(&recurse(n, rest, memo))
    } else {
        let contracted = contract(rest, t, h);
        if connects(n, rest, t, h) {
            recurse(n, rest, memo).add(&recurse(n - 1, &contracted, memo))
        } else {
            Bivariate::x().mul(&recurse(n - 1, &contracted, memo))
        }
    };
    memo.insert(key, out.clone());
    out
}

fn contract(edges: &[(usize, usize)], t: usize, h: usize) -> Vec<(usize, usize)> {
    let (keep, gone) = (t.min(h), t.max(h));
    let relabel = |v: usize| {
        let v = if v == gone { keep } else { v };
        if v > gone {
            v - 1
        } else {
            v
        }
    };
    edges.iter().map(|&(a, b)| (relabel(a), relabel(b))).collect()
}

fn connects(n: usize, edges: &[(usize, usize)], s: usize, t: usize) -> bool {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut seen = vec![false; n];
    let mut stack = vec![s];
    seen[s] = true;
    while let Some(v) = stack.pop() {
        if v == t {
            return true;
        }
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    false
}

pub const CORANK_NULLITY_EDGE_LIMIT: usize = 20;

/// `sum over S of (x-1)^(r(E)-r(S)) (y-1)^(|S|-r(S))`.
pub fn tutte_corank_nullity(g: &Graph) -> Result<Bivariate> {
    let m = g.edge_count();
    if m > CORANK_NULLITY_EDGE_LIMIT {
        return Err(Error::SizeLimit {
            what: "edge count",
            actual: m,
            limit: CORANK_NULLITY_EDGE_LIMIT,
        });
    }
    let full_rank = g.rank(g.full_edge_mask());
    let mut tally: BTreeMap<(usize, usize), u64> = BTreeMap::new();
    for s in 0..1u64 << m {
        let r = g.rank(s);
        *tally.entry((full_rank - r, s.count_ones() as usize - r)).or_default() += 1;
    }
    let x1 = Bivariate::from_terms(&[(1, 0, 1), (0, 0, -1)]);
    let y1 = Bivariate::from_terms(&[(0, 1, 1), (0, 0, -1)]);
    let mut out = Bivariate::zero();
    for ((a, b), count) in tally {
        let mut term = Bivariate::term(0, 0, BigInt::from(count));
        for _ in 0..a {
            term = term.mul(&x1);
        }
        for _ in 0..b {
            term = term.mul(&y1);
        }
        out = out.add(&term);
    }
    Ok(out)
}

/// `(k+m)^(n-1) (k+l)^g T(x0/(k+m), y0/(k+l))`, refusing to divide by zero
/// when the corresponding exponent is positive.
pub fn generalized_evaluation(
    g: &Graph,
    t: &Bivariate,
    k: &Rational,
    l: &Rational,
    m: &Rational,
    x0: &Rational,
    y0: &Rational,
) -> Result<Rational> {
    let n1 = g.vertex_count() - 1;
    let genus = g.cyclomatic_number();
    if n1 > 0 && (k + m).is_zero() {
        return Err(Error::DivisionByZero("k+m"));
    }
    if genus > 0 && (k + l).is_zero() {
        return Err(Error::DivisionByZero("k+l"));
    }
    Ok(generalized_evaluation_cleared(g, t, k, l, m, x0, y0))
}

/// The same quantity expanded term by term, which never divides.
pub fn generalized_evaluation_cleared(
    g: &Graph,
    t: &Bivariate,
    k: &Rational,
    l: &Rational,
    m: &Rational,
    x0: &Rational,
    y0: &Rational,
) -> Rational {
    let n1 = g.vertex_count() - 1;
    let genus = g.cyclomatic_number();
    let km = k + m;
    let kl = k + l;
    t.terms()
        .map(|(i, j, c)| {
            Rational::from_integer(c.clone())
                * pow_rational(x0, i)
                * pow_rational(&km, n1 - i)
                * pow_rational(y0, j)
                * pow_rational(&kl, genus - j)
        })
        .fold(Rational::zero(), |a, b| a + b)
}

/// The cleared evaluation as a polynomial in k, l, m, where `x0` and `y0`
/// are integer linear forms `(a, b, c)` meaning `a*k + b*l + c*m`.
pub fn generalized_polynomial(
    g: &Graph,
    t: &Bivariate,
    x0: (i64, i64, i64),
    y0: (i64, i64, i64),
) -> Trivariate {
    let n1 = g.vertex_count() - 1;
    let genus = g.cyclomatic_number();
    let x0 = Trivariate::linear(x0.0, x0.1, x0.2);
    let y0 = Trivariate::linear(y0.0, y0.1, y0.2);
    let km = Trivariate::linear(1, 0, 1);
    let kl = Trivariate::linear(1, 1, 0);
    let xp: Vec<Trivariate> = powers(&x0, n1);
    let kmp = powers(&km, n1);
    let yp = powers(&y0, genus);
    let klp = powers(&kl, genus);
    let mut out = Trivariate::zero();
    for (i, j, c) in t.terms() {
        let term = xp[i].mul(&kmp[n1 - i]).mul(&yp[j]).mul(&klp[genus - j]).scale(c);
        out = out.add(&term);
    }
    out
}

fn powers(p: &Trivariate, n: usize) -> Vec<Trivariate> {
    let mut out = vec![Trivariate::one()];
    for i in 0..n {
        let next = out[i].mul(p);
        out.push(next);
    }
    out
}

/// Number of spanning trees by direct enumeration of (n-1)-edge subsets.
pub fn spanning_tree_count(g: &Graph) -> BigInt {
    let n1 = g.vertex_count() - 1;
    let mut count = BigInt::zero();
    for s in 0..1u64 << g.edge_count() {
        if s.count_ones() as usize == n1 && g.rank(s) == n1 {
            count += BigInt::one();
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{int, rat};

    fn triangle() -> Graph {
        Graph::new(3, vec![(0, 1), (0, 2), (1, 2)]).unwrap()
    }

    #[test]
    fn small_polynomials() {
        let t = tutte_polynomial(&triangle());
        assert_eq!(t, Bivariate::from_terms(&[(2, 0, 1), (1, 0, 1), (0, 1, 1)]));
        assert_eq!(t.to_string(), "x^2 + x + y");
        let b2 = Graph::new(2, vec![(0, 1), (0, 1)]).unwrap();
        assert_eq!(tutte_polynomial(&b2).to_string(), "x + y");
        let c1 = Graph::new(1, vec![(0, 0)]).unwrap();
        assert_eq!(tutte_polynomial(&c1).to_string(), "y");
        let b1 = Graph::new(2, vec![(0, 1)]).unwrap();
        assert_eq!(tutte_polynomial(&b1).to_string(), "x");
        let point = Graph::new(1, vec![]).unwrap();
        assert_eq!(tutte_corank_nullity(&point).unwrap(), Bivariate::one());
    }

    #[test]
    fn theta_graph() {
        let g = Graph::new(3, vec![(0, 1), (1, 2), (0, 1), (0, 2), (1, 2)]).unwrap();
        let t = tutte_polynomial(&g);
        assert_eq!(t.to_string(), "y^3 + x^2 + 2xy + 2y^2 + x + y");
        assert_eq!(t, tutte_corank_nullity(&g).unwrap());
    }

    #[test]
    fn generalized_evaluations_on_triangle() {
        let g = triangle();
        let t = tutte_polynomial(&g);
        let one = int(1);
        let zero = int(0);
        let v = generalized_evaluation(&g, &t, &one, &one, &one, &int(4), &int(4)).unwrap();
        assert_eq!(v, int(64));
        let v = generalized_evaluation(&g, &t, &one, &one, &zero, &int(3), &int(3)).unwrap();
        assert_eq!(v, int(27));
        let v = generalized_evaluation(&g, &t, &one, &zero, &zero, &int(2), &zero).unwrap();
        assert_eq!(v, int(6));
        assert!(generalized_evaluation(&g, &t, &zero, &one, &zero, &one, &one).is_err());
        assert_eq!(t.eval(&int(3), &rat(1, 2)) * int(2), int(25));
    }

    #[test]
    fn spanning_trees_of_k4() {
        let k4 = Graph::new(4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let t = tutte_polynomial(&k4);
        assert_eq!(t.eval(&int(1), &int(1)), Rational::from_integer(spanning_tree_count(&k4)));
        assert_eq!(spanning_tree_count(&k4), BigInt::from(16));
    }
}
