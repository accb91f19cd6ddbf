//! One line per acceptance criterion; exits nonzero if any fails.

use std::collections::HashMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use fourient_core::applications::*;
use fourient_core::chipfiring::*;
use fourient_core::corpus::{self, default_corpus, is_saturated, outerplanar_walk, CorpusGraph};
use fourient_core::enumeration::*;
use fourient_core::fourientation::{
    classify_oriented_edges, cut_decomposition, cycle_decomposition, satisfies_cut_conditions,
    satisfies_cycle_conditions, EdgeType,
};
use fourient_core::poly::{int, rat, to_f64, Bivariate, Univariate};
use fourient_core::tutte::{tutte_corank_nullity, tutte_polynomial};
use fourient_core::{Fourientation, Graph};
use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn(&mut Data) -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

struct Data {
    corpus: Vec<CorpusGraph>,
    tutte: Vec<Bivariate>,
    hist: HashMap<usize, Histogram>,
}

impl Data {
    fn load() -> Data {
        let corpus = default_corpus();
        let tutte = corpus.iter().map(|c| tutte_polynomial(&c.graph)).collect();
        Data { corpus, tutte, hist: HashMap::new() }
    }

    fn histogram(&mut self, i: usize) -> &Histogram {
        let g = &self.corpus[i].graph;
        self.hist.entry(i).or_insert_with(|| Histogram::sweep(g).expect("within sweep limit"))
    }
}

fn tutte_oracles(d: &mut Data) -> Outcome {
    for (c, t) in d.corpus.iter().zip(&d.tutte) {
        let other = tutte_corank_nullity(&c.graph).map_err(|e| e.to_string())?;
        ensure(*t == other, || format!("{} disagrees", c.name))?;
    }
    let triangle = tutte_polynomial(&corpus::triangle());
    ensure(triangle.to_string() == "x^2 + x + y", || format!("triangle gave {triangle}"))?;
    let theta = Bivariate::from_terms(&[(0, 3, 1), (2, 0, 1), (1, 1, 2), (0, 2, 2), (1, 0, 1), (0, 1, 1)]);
    ensure(tutte_polynomial(&corpus::theta()) == theta, || "theta mismatch".into())?;
    Ok(format!("{} graphs", d.corpus.len()))
}

fn main_theorem(d: &mut Data) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut pairs = 0;
    for i in 0..d.corpus.len() {
        let g = d.corpus[i].graph.clone();
        let name = d.corpus[i].name.clone();
        let t = d.tutte[i].clone();
        let pts = default_points(g.edge_count());
        let hist = d.histogram(i).clone();
        let mut counted = Vec::new();
        for (_, cut) in cut_classes_with_weird() {
            for (_, cycle) in cycle_classes() {
                let check = check_main(&g, &t, &hist, cut, cycle, &pts);
                ensure(check.ok(), || format!("{name}: {}", check.pair_name()))?;
                counted.push(check.counted);
                pairs += 1;
            }
        }
        for round in 0..3 {
            let m = g.edge_count();
            let mut perm: Vec<usize> = (0..m).collect();
            perm.shuffle(&mut rng);
            let flip = rng.random::<u64>() & ((1u64 << m) - 1);
            let h = g.reordered(&perm, flip);
            let other = Histogram::sweep(&h).map_err(|e| e.to_string())?;
            let mut k = 0;
            for (_, cut) in cut_classes_with_weird() {
                for (_, cycle) in cycle_classes() {
                    let p = other.generating_polynomial(cut, cycle);
                    ensure(p == counted[k], || format!("{name}: relabeling {round} changed {cut} / {cycle}"))?;
                    k += 1;
                }
            }
        }
    }
    Ok(format!("{pairs} class pairs, 3 relabelings each"))
}

fn four_tables(d: &mut Data) -> Outcome {
    let mut entries = 0;
    for i in 0..d.corpus.len() {
        let g = d.corpus[i].graph.clone();
        let t = d.tutte[i].clone();
        for e in class_table_from(&g, &t, d.histogram(i)) {
            ensure(e.ok(), || format!("{}: {}", d.corpus[i].name, e.to_json()))?;
            entries += 1;
        }
    }
    let triangle = class_table(&corpus::triangle()).map_err(|e| e.to_string())?;
    let value = |cut: &str| {
        triangle
            .iter()
            .find(|e| e.table == TableKind::TypeB && e.cut == cut && e.cycle == "cycle-neutral")
            .map(|e| e.count.clone())
    };
    for (cut, want) in [("cut-general", 19), ("cut-negative", 12), ("cut-neutral", 7)] {
        ensure(value(cut) == Some(int(want)), || format!("triangle {cut} gave {:?}", value(cut)))?;
    }
    Ok(format!("{entries} entries; triangle 19, 12, 7"))
}

fn decompositions(d: &mut Data) -> Outcome {
    let mut checked = 0u64;
    for c in d.corpus.iter().filter(|c| c.graph.edge_count() <= 5) {
        let g = &c.graph;
        let m = g.edge_count();
        for o in Fourientation::all(m) {
            let cu = cut_decomposition(g, &o).part;
            let cy = cycle_decomposition(g, &o).part;
            ensure(cu & cy == 0, || format!("{} {o}: sides overlap", c.name))?;
            for (e, kind) in classify_oriented_edges(g, &o).into_iter().enumerate() {
                let side = match kind {
                    Some(EdgeType::Cut) => cu,
                    Some(EdgeType::Cycle) => cy,
                    None => continue,
                };
                ensure(side >> e & 1 == 1, || format!("{} {o}: edge {e} misplaced", c.name))?;
            }
            for a in 0..1u64 << m {
                ensure(satisfies_cut_conditions(g, &o, a) == (a == cu), || format!("{} {o}: cut side {a:b}", c.name))?;
                ensure(satisfies_cycle_conditions(g, &o, a) == (a == cy), || format!("{} {o}: cycle side {a:b}", c.name))?;
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} fourientations"))
}

fn activity_expansion(d: &mut Data) -> Outcome {
    let points = default_activity_points();
    let (x, w, y, z) = (rat(2, 3), rat(5, 2), rat(3, 1), rat(1, 4));
    let (ws, zs) = (rat(7, 3), rat(2, 5));
    let orientations = ActivityPoint::new([int(1), int(0), int(0), x.clone(), w.clone(), int(9), y.clone(), z.clone(), int(9)]);
    let subgraphs = ActivityPoint::new([int(0), int(1), int(1), int(9), int(9), ws.clone(), int(9), int(9), zs.clone()]);
    for (c, t) in d.corpus.iter().zip(&d.tutte) {
        let g = &c.graph;
        let hist = ActivityHistogram::sweep(g).map_err(|e| e.to_string())?;
        for a in &points {
            ensure(hist.evaluate(a) == activity_rhs(g, t, a), || format!("{} at {}", c.name, a.to_json()))?;
        }
        let lv = las_vergnas_sum(g, &x, &w, &y, &z);
        ensure(hist.evaluate(&orientations) == lv && activity_rhs(g, t, &orientations) == lv, || {
            format!("{}: orientation specialization", c.name)
        })?;
        let gt = gordon_traldi_sum(g, &int(1), &ws, &int(1), &zs);
        ensure(hist.evaluate(&subgraphs) == gt && activity_rhs(g, t, &subgraphs) == gt, || {
            format!("{}: subgraph specialization", c.name)
        })?;
    }
    Ok(format!("{} points plus both specializations", points.len()))
}

fn chip_firing(d: &mut Data) -> Outcome {
    let mut small = 0;
    for c in d.corpus.iter().filter(|c| c.graph.edge_count() <= 4) {
        let g = &c.graph;
        let all: Vec<Fourientation> = Fourientation::all(g.edge_count()).collect();
        let pivot = reversal_classes(g, ReversalMoves::PivotsOnly).map_err(|e| e.to_string())?;
        let cocycle = reversal_classes(g, ReversalMoves::PivotsAndCuts).map_err(|e| e.to_string())?;
        let divisors: Vec<Divisor> = all.iter().map(|o| divisor_of(g, o)).collect();
        let reduced: Vec<Divisor> = divisors.iter().map(|x| q_reduced(g, x, 0).expect("valid sink")).collect();
        for i in 0..all.len() {
            for j in 0..i {
                ensure((pivot[i] == pivot[j]) == (divisors[i] == divisors[j]), || format!("{}: pivot classes", c.name))?;
                let linear = divisors[i].degree() == divisors[j].degree() && reduced[i] == reduced[j];
                ensure((cocycle[i] == cocycle[j]) == linear, || format!("{}: cocycle classes", c.name))?;
            }
        }
        small += 1;
    }
    let mut total = 0u64;
    for c in &d.corpus {
        for o in Fourientation::all(c.graph.edge_count()) {
            ensure(riemann_roch_complement_check(&c.graph, &o), || format!("{} {o}: K - D_O", c.name))?;
            total += 1;
        }
    }
    Ok(format!("{small} graphs with |E| <= 4; K - D_O on {total} fourientations"))
}

fn cori_le_borgne_holds(g: &Graph, tree: &RootedTree) -> Result<usize, String> {
    let ctx = SubparkingContext::from_tree(g, tree).map_err(|e| e.to_string())?;
    let h = &ctx.graph;
    let pf = parking_functions(h, ctx.q).map_err(|e| e.to_string())?;
    for c in &pf {
        let o = cori_le_borgne(h, &ctx.tree, c).map_err(|e| e.to_string())?;
        let mut d = divisor_of(h, &o);
        d.0[ctx.q] = 0;
        ensure(o.is_type_a() && is_acyclic(h, &o) && is_q_connected(h, &o, ctx.q) && d == *c, || {
            format!("{h}: output {o} for {c}")
        })?;
    }
    Ok(pf.len())
}

fn parking(d: &mut Data) -> Outcome {
    let mut graphs = 0;
    let mut runs = 0;
    for (c, t) in d.corpus.iter().zip(&d.tutte).filter(|(c, _)| !c.graph.has_loops()) {
        let g = &c.graph;
        let pf = parking_functions(g, 0).map_err(|e| e.to_string())?;
        ensure(int(pf.len() as i64) == t.eval(&int(1), &int(1)), || format!("{}: |PF|", c.name))?;
        let max = maximal_parking_functions(g, 0).map_err(|e| e.to_string())?;
        ensure(int(max.len() as i64) == t.eval(&int(1), &int(0)), || format!("{}: |max PF|", c.name))?;
        let mut merino = vec![BigInt::from(0); g.cyclomatic_number() + 1];
        for (_, j, coeff) in t.terms() {
            merino[j] += coeff;
        }
        let counted = merino_polynomial(g, 0).map_err(|e| e.to_string())?;
        ensure(counted == Univariate::new(merino), || format!("{}: Merino", c.name))?;
        runs += cori_le_borgne_holds(g, &RootedTree::breadth_first(g, 0))?;
        graphs += 1;
    }
    let figure = corpus::outerplanar_figure();
    let tree = boundary_tree(&figure, 0, &corpus::outerplanar_figure_walk()).map_err(|e| e.to_string())?;
    runs += cori_le_borgne_holds(&figure, &tree)?;
    Ok(format!("{graphs} loopless graphs; {runs} Cori-Le Borgne runs"))
}

fn conjecture(d: &mut Data) -> Outcome {
    let (mut saturated, mut outerplanar) = (0, 0);
    for (c, t) in d.corpus.iter().zip(&d.tutte) {
        let g = &c.graph;
        if is_saturated(g) {
            let star = RootedTree::star(g, 0).map_err(|e| e.to_string())?;
            let ctx = SubparkingContext::from_tree(g, &star).map_err(|e| e.to_string())?;
            let report = ctx.verify_conjecture(t).map_err(|e| e.to_string())?;
            ensure(report.ok(), || format!("{}: star tree {report:?}", c.name))?;
            saturated += 1;
        }
        let walk = if c.name == "outerplanar" {
            Some(corpus::outerplanar_figure_walk())
        } else {
            outerplanar_walk(g, 0)
        };
        if let Some(walk) = walk {
            let tree = boundary_tree(g, 0, &walk).map_err(|e| e.to_string())?;
            let ctx = SubparkingContext::from_tree(g, &tree).map_err(|e| e.to_string())?;
            let report = ctx.verify_conjecture(t).map_err(|e| e.to_string())?;
            ensure(report.ok(), || format!("{}: boundary tree {report:?}", c.name))?;
            outerplanar += 1;
        }
    }
    let theta = corpus::theta();
    let tree = RootedTree { root: 0, arcs: vec![(0, fourient_core::Sign::Plus), (1, fourient_core::Sign::Plus)] };
    let ctx = SubparkingContext::new(theta, 0, tree).map_err(|e| e.to_string())?;
    let aci = ctx.aci_orientations().map_err(|e| e.to_string())?.len();
    ensure(aci == 9, || format!("theta has {aci} ACI orientations"))?;
    let numerator = ctx.hilbert_numerator().map_err(|e| e.to_string())?;
    ensure(numerator == Univariate::from_i64(&[1, 2, 1]), || format!("theta numerator {numerator}"))?;
    let mut sp: Vec<Vec<i64>> = ctx.subparking_functions().map_err(|e| e.to_string())?.into_iter().map(|x| x.0).collect();
    sp.sort();
    ensure(sp == vec![vec![0, 0, 0], vec![0, 0, 1], vec![0, 1, 0], vec![0, 2, 0]], || format!("theta subparking {sp:?}"))?;
    Ok(format!("{saturated} saturated, {outerplanar} outerplanar; theta goldens"))
}

fn f_and_h(d: &mut Data) -> Outcome {
    let mut graphs = 0;
    for i in 0..d.corpus.len() {
        if d.corpus[i].graph.edge_count() > 8 {
            continue;
        }
        let g = d.corpus[i].graph.clone();
        let t = d.tutte[i].clone();
        let ids = f_polynomial_identities(&g, &t, d.histogram(i)).map_err(|e| e.to_string())?;
        ensure(ids.len() == 8, || "expected eight identities".into())?;
        for id in ids {
            ensure(id.ok(), || format!("{}: {}", d.corpus[i].name, id.to_json()))?;
        }
        graphs += 1;
    }
    Ok(format!("8 identities on {graphs} graphs"))
}

fn reliability(d: &mut Data) -> Outcome {
    let triples = default_triples();
    for i in 0..d.corpus.len() {
        let g = d.corpus[i].graph.clone();
        let t = d.tutte[i].clone();
        for check in verify_reliability_theorem(&g, &t, d.histogram(i), &triples).map_err(|e| e.to_string())? {
            ensure(check.ok(), || format!("{}: {}", d.corpus[i].name, check.to_json()))?;
        }
    }
    let g = corpus::triangle();
    let r = reliability_polynomial(&g, &tutte_polynomial(&g));
    ensure(r.eval(&rat(1, 2)) == rat(1, 2), || "triangle R(1/2)".into())?;
    for p in [rat(1, 4), rat(1, 3), rat(1, 2)] {
        let (k, l, m) = directed_model(&p);
        let prob = cut_connected_probability(&g, &k, &l, &m).map_err(|e| e.to_string())?;
        ensure(prob == r.eval(&p), || format!("directed model at {p}"))?;
    }
    let (k, l, m) = directed_model(&rat(1, 3));
    let est = monte_carlo_cut_connected(&g, &k, &l, &m, 100_000, 7).map_err(|e| e.to_string())?;
    let exact = to_f64(&r.eval(&rat(1, 3)));
    ensure(est.agrees_with(exact, 5.0), || format!("Monte Carlo {est:?} vs {exact}"))?;
    Ok(format!(
        "{} triples per graph; Monte Carlo {:.4} vs {:.4} (se {:.4})",
        triples.len(),
        est.estimate,
        exact,
        est.standard_error
    ))
}

fn admissibility(d: &mut Data) -> Outcome {
    let mut total = 0;
    for (c, t) in d.corpus.iter().zip(&d.tutte) {
        let (count, mismatches) = admissibility_mismatches(&c.graph).map_err(|e| e.to_string())?;
        ensure(mismatches == 0, || format!("{}: {mismatches} mismatches", c.name))?;
        ensure(int(count as i64) == predicted_admissible_count(&c.graph, t), || format!("{}: count {count}", c.name))?;
        total += 3u64.pow(c.graph.edge_count() as u32);
    }
    Ok(format!("{total} partial orientations"))
}

fn main() -> ExitCode {
    let mut data = Data::load();
    let criteria: [Criterion; 11] = [
        ("Tutte oracles", tutte_oracles),
        ("main theorem", main_theorem),
        ("four tables", four_tables),
        ("decompositions", decompositions),
        ("activity", activity_expansion),
        ("chip-firing", chip_firing),
        ("parking", parking),
        ("subparking conjecture", conjecture),
        ("f/h identities", f_and_h),
        ("reliability", reliability),
        ("admissibility", admissibility),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(|| run(&mut data)))
            .unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} {name}: PASS ({detail}) [{secs:.1}s]", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} {name}: FAIL ({why}) [{secs:.1}s]", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
