//! Constructive builders: explicit representations for graph families under
//! each semantics, plus the named graphs used throughout the test suites.
//!
//! Every representation builder ends with a tie-removal pass, so emitted
//! representations always have distinct marked points; several of the
//! closed-form constructions place points on shared coordinates (for
//! example consecutive caterpillar spine intervals meet end-to-start).

use crate::graph::SimpleGraph;
use crate::model::{perturb_distinct, Flavor, FlavorSet, MarkedInterval, Representation};
use crate::scalar::Coord;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum FamilyError {
    #[error("unsupported family parameters: {0}")]
    UnsupportedFamily(String),
    #[error("bad parameters: {0}")]
    BadParameters(String),
}

fn require(cond: bool, msg: &str) -> Result<(), FamilyError> {
    if cond {
        Ok(())
    } else {
        Err(FamilyError::UnsupportedFamily(msg.to_string()))
    }
}

// ---------------------------------------------------------------------------
// Plain graph constructions (the targets the representations must match).
// ---------------------------------------------------------------------------

pub fn complete_graph(n: usize) -> SimpleGraph {
    let mut g = SimpleGraph::empty(n);
    for u in 0..n {
        for v in (u + 1)..n {
            g.add_edge(u, v);
        }
    }
    g
}

pub fn cycle_graph(n: usize) -> SimpleGraph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    let mut g = SimpleGraph::empty(n);
    for i in 0..n {
        g.add_edge(i, (i + 1) % n);
    }
    g
}

pub fn path_graph(n: usize) -> SimpleGraph {
    let mut g = SimpleGraph::empty(n);
    for i in 1..n {
        g.add_edge(i - 1, i);
    }
    g
}

/// Star `K_{1,n}`: center 0, leaves 1..=n.
pub fn star_graph(n: usize) -> SimpleGraph {
    let mut g = SimpleGraph::empty(n + 1);
    for i in 1..=n {
        g.add_edge(0, i);
    }
    g
}

/// Cycle 0..n-1 plus hub vertex n adjacent to the whole cycle.
pub fn wheel_graph(n: usize) -> SimpleGraph {
    let mut g = cycle_graph(n);
    g.n += 1;
    for i in 0..n {
        g.add_edge(i, n);
    }
    g
}

/// Parts are consecutive index blocks; edges join distinct parts.
pub fn complete_multipartite(parts: &[usize]) -> SimpleGraph {
    let n: usize = parts.iter().sum();
    let mut part_of = Vec::with_capacity(n);
    for (p, &size) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat(p).take(size));
    }
    let mut g = SimpleGraph::empty(n);
    for u in 0..n {
        for v in (u + 1)..n {
            if part_of[u] != part_of[v] {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// `K_{m,n}` with the first part on 0..m.
pub fn complete_bipartite_graph(m: usize, n: usize) -> SimpleGraph {
    complete_multipartite(&[m, n])
}

/// Tree from a parent array: vertex 0 is the root (`parent[0]` ignored),
/// and `parent[i] < i` for every other vertex.
pub fn tree_graph(parents: &[usize]) -> Result<SimpleGraph, FamilyError> {
    let n = parents.len();
    if n == 0 {
        return Err(FamilyError::BadParameters("empty parent array".into()));
    }
    let mut g = SimpleGraph::empty(n);
    for (i, &p) in parents.iter().enumerate().skip(1) {
        if p >= i {
            return Err(FamilyError::BadParameters(format!(
                "parent[{i}] = {p} must be smaller than {i}"
            )));
        }
        g.add_edge(p, i);
    }
    Ok(g)
}

/// Caterpillar: spine path `0..legs.len()`, then `legs[i]` extra leaves on
/// spine vertex `i`, appended in spine order.
pub fn caterpillar_graph(legs: &[usize]) -> Result<SimpleGraph, FamilyError> {
    let k = legs.len();
    if k == 0 {
        return Err(FamilyError::BadParameters("empty spine".into()));
    }
    let n = k + legs.iter().sum::<usize>();
    let mut g = SimpleGraph::empty(n);
    for i in 1..k {
        g.add_edge(i - 1, i);
    }
    let mut next = k;
    for (i, &count) in legs.iter().enumerate() {
        for _ in 0..count {
            g.add_edge(i, next);
            next += 1;
        }
    }
    Ok(g)
}

/// The Mycielskian of C_5: cycle 0-4, shadow of vertex i at 5+i (adjacent to
/// i's cycle neighbors), apex 10 adjacent to all shadows. 11 vertices,
/// 20 edges, triangle-free, chromatic number 4.
pub fn grotzsch() -> SimpleGraph {
    let mut g = SimpleGraph::empty(11);
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(5 + i, (i + 1) % 5);
        g.add_edge(5 + i, (i + 4) % 5);
        g.add_edge(5 + i, 10);
    }
    g
}

/// The star S_5 with every edge subdivided: center 0, middle vertices 1..=5,
/// leaves 6..=10.
pub fn lobster5() -> SimpleGraph {
    let mut g = SimpleGraph::empty(11);
    for i in 1..=5 {
        g.add_edge(0, i);
        g.add_edge(i, i + 5);
    }
    g
}

/// Hub 0 adjacent to spokes 1..=k, plus one degree-2 connector per spoke
/// pair. `1 + k + C(k,2)` vertices.
pub fn g_k(k: usize) -> Result<SimpleGraph, FamilyError> {
    if k == 0 {
        return Err(FamilyError::BadParameters("k must be positive".into()));
    }
    let n = 1 + k + k * (k - 1) / 2;
    let mut g = SimpleGraph::empty(n);
    for i in 1..=k {
        g.add_edge(0, i);
    }
    let mut next = k + 1;
    for i in 1..=k {
        for j in (i + 1)..=k {
            g.add_edge(i, next);
            g.add_edge(j, next);
            next += 1;
        }
    }
    Ok(g)
}

/// Circulant graph: vertices mod n, `i ~ i + s` for each `s` in the
/// connection set.
pub fn circulant(n: usize, jumps: &[usize]) -> Result<SimpleGraph, FamilyError> {
    if n == 0 {
        return Err(FamilyError::BadParameters("empty vertex set".into()));
    }
    let mut g = SimpleGraph::empty(n);
    for &s in jumps {
        if s == 0 || s >= n {
            return Err(FamilyError::BadParameters(format!(
                "jump {s} out of range 1..{n}"
            )));
        }
        for i in 0..n {
            let j = (i + s) % n;
            if i != j {
                g.add_edge(i, j);
            }
        }
    }
    Ok(g)
}

// ---------------------------------------------------------------------------
// Veto-interval representations.
// ---------------------------------------------------------------------------

fn finish<T: Coord>(mut rep: Representation<T>, flavor: FlavorSet) -> Representation<T> {
    rep.flavor = flavor;
    let rep = perturb_distinct(&rep);
    debug_assert!(crate::model::validate_representation(&rep).is_empty());
    rep
}

/// `K_{m,n}` as m shifted copies of (0,2,4) and n of (3,5,7); midpoint unit.
pub fn vi_complete_bipartite<T: Coord>(
    m: usize,
    n: usize,
) -> Result<Representation<T>, FamilyError> {
    require(m >= 1 && n >= 1, "complete bipartite needs m, n >= 1")?;
    let delta = T::ratio(1, 2 * (m + n) as i64);
    let mut intervals = Vec::with_capacity(m + n);
    for t in 0..(m + n) {
        let base: [i64; 3] = if t < m { [0, 2, 4] } else { [3, 5, 7] };
        let shift = delta.clone() * T::from_int(t as i64);
        intervals.push(MarkedInterval::new(
            T::from_int(base[0]) + shift.clone(),
            vec![T::from_int(base[1]) + shift.clone()],
            T::from_int(base[2]) + shift,
        ));
    }
    Ok(finish(
        Representation::new(1, intervals, FlavorSet::EMPTY),
        FlavorSet::of(&[Flavor::Unit, Flavor::Midpoint]),
    ))
}

/// Caterpillar: spine `(2i-1, 2i, 2i+1)` and each leg on spine vertex i at
/// `(2i-3+f, 2i-2+f, 2i-1+f)` with `f = i/(k+1)`; midpoint unit.
pub fn vi_caterpillar<T: Coord>(legs: &[usize]) -> Result<Representation<T>, FamilyError> {
    let k = legs.len();
    require(k >= 1, "caterpillar needs a nonempty spine")?;
    let mut intervals = Vec::new();
    for i in 1..=k as i64 {
        intervals.push(MarkedInterval::triple(2 * i - 1, 2 * i, 2 * i + 1));
    }
    for (idx, &count) in legs.iter().enumerate() {
        let i = idx as i64 + 1;
        let f = T::ratio(i, k as i64 + 1);
        for _ in 0..count {
            intervals.push(MarkedInterval::new(
                T::from_int(2 * i - 3) + f.clone(),
                vec![T::from_int(2 * i - 2) + f.clone()],
                T::from_int(2 * i - 1) + f.clone(),
            ));
        }
    }
    Ok(finish(
        Representation::new(1, intervals, FlavorSet::EMPTY),
        FlavorSet::of(&[Flavor::Unit, Flavor::Midpoint]),
    ))
}

/// Cycle C_n for n >= 4, midpoint unit, intervals of length 24. The two
/// closed forms (odd/even n) walk up and back down the line; the even form
/// produces one end-to-start coincidence which the final tie-removal pass
/// separates without changing the graph.
pub fn muvi_cycle<T: Coord>(n: usize) -> Result<Representation<T>, FamilyError> {
    require(n >= 4, "veto cycle needs n >= 4")?;
    let n_i = n as i64;
    let mut triples: Vec<(i64, i64, i64)> = vec![(0, 0, 0); n];
    let up = |k: i64| (20 * k - 18, 20 * k - 6, 20 * k + 6);
    let down = |i: i64| {
        (
            20 * (n_i - i) + 12,
            20 * (n_i - i) + 24,
            20 * (n_i - i) + 36,
        )
    };
    if n % 2 == 1 {
        for k in 1..=(n_i + 1) / 2 {
            triples[k as usize - 1] = up(k);
        }
        triples[((n_i + 3) / 2) as usize - 1] = (10 * n_i - 22, 10 * n_i - 10, 10 * n_i + 2);
        for i in (n_i + 5) / 2..=n_i - 1 {
            triples[i as usize - 1] = down(i);
        }
    } else {
        for k in 1..=n_i / 2 {
            triples[k as usize - 1] = up(k);
        }
        triples[((n_i + 2) / 2) as usize - 1] = (10 * n_i - 4, 10 * n_i + 8, 10 * n_i + 20);
        for i in (n_i + 4) / 2..=n_i - 1 {
            triples[i as usize - 1] = down(i);
        }
    }
    triples[n - 1] = (15, 27, 39);
    Ok(finish(
        Representation::from_triples(&triples),
        FlavorSet::of(&[Flavor::Unit, Flavor::Midpoint]),
    ))
}

/// Tree from a parent array by leaf insertion: each new interval nests
/// between the marked points flanking its parent's right endpoint.
pub fn vi_tree<T: Coord>(parents: &[usize]) -> Result<Representation<T>, FamilyError> {
    tree_graph(parents)?; // validates the array
    let mut intervals: Vec<MarkedInterval<T>> = vec![MarkedInterval::triple(0, 1, 2)];
    for (i, &p) in parents.iter().enumerate().skip(1) {
        debug_assert!(p < i);
        let parent_right = intervals[p].right.clone();
        let mut pred: Option<T> = None;
        let mut succ: Option<T> = None;
        for iv in &intervals {
            for point in iv.points() {
                if *point < parent_right && pred.as_ref().map_or(true, |x| point > x) {
                    pred = Some(point.clone());
                }
                if *point > parent_right && succ.as_ref().map_or(true, |x| point < x) {
                    succ = Some(point.clone());
                }
            }
        }
        let pred = pred.expect("parent interval has points left of its right endpoint");
        let succ = succ.unwrap_or_else(|| parent_right.clone() + T::one());
        let span = succ - parent_right.clone();
        intervals.push(MarkedInterval::new(
            (pred + parent_right.clone()).half(),
            vec![parent_right.clone() + span.clone() / T::from_int(3)],
            parent_right + span * T::from_int(2) / T::from_int(3),
        ));
    }
    Ok(finish(
        Representation::new(1, intervals, FlavorSet::EMPTY),
        FlavorSet::EMPTY,
    ))
}

// ---------------------------------------------------------------------------
// Single-approval representations.
// ---------------------------------------------------------------------------

/// `K_n`: vertex i gets `(-2i, -2i+1, 2i)`; every pairwise intersection
/// contains exactly the smaller vertex's mark.
pub fn sa_complete<T: Coord>(n: usize) -> Result<Representation<T>, FamilyError> {
    require(n >= 1, "complete graph needs n >= 1")?;
    let intervals = (1..=n as i64)
        .map(|i| MarkedInterval::triple(-2 * i, -2 * i + 1, 2 * i))
        .collect();
    Ok(finish(
        Representation::new(1, intervals, FlavorSet::EMPTY),
        FlavorSet::EMPTY,
    ))
}

/// Zig-zag labels used by the approval cycle construction: position j on the
/// cycle carries label 1,3,5,...,(top),...,6,4,2 (1-based).
fn zigzag_labels(n: usize) -> Vec<usize> {
    let mut labels: Vec<usize> = (1..=n).step_by(2).collect();
    let mut evens: Vec<usize> = (2..=n).step_by(2).collect();
    evens.reverse();
    labels.extend(evens);
    labels
}

fn sa_cycle_interval<T: Coord>(label: usize, n: usize) -> MarkedInterval<T> {
    let (i, n) = (label as i64, n as i64);
    if i == 1 {
        MarkedInterval::triple(2, 6, 7)
    } else if i == n {
        MarkedInterval::triple(2 * n, 2 * n + 6, 2 * n + 7)
    } else {
        MarkedInterval::triple(2 * i, 2 * i + 4, 2 * i + 7)
    }
}

/// C_n under single approval; the zig-zag construction relabeled so that
/// output index j is adjacent to j±1 mod n.
pub fn sa_cycle<T: Coord>(n: usize) -> Result<Representation<T>, FamilyError> {
    require(n >= 3, "approval cycle needs n >= 3")?;
    let intervals = zigzag_labels(n)
        .into_iter()
        .map(|label| sa_cycle_interval(label, n))
        .collect();
    Ok(finish(
        Representation::new(1, intervals, FlavorSet::EMPTY),
        FlavorSet::EMPTY,
    ))
}

/// W_n under single approval: the cycle plus a hub `(2, 2n+8, 2n+10)`
/// whose interval covers every cycle interval.
pub fn sa_wheel<T: Coord>(n: usize) -> Result<Representation<T>, FamilyError> {
    require(n >= 3, "wheel needs n >= 3")?;
    let mut rep = sa_cycle::<T>(n)?;
    let n_i = n as i64;
    rep.intervals
        .push(MarkedInterval::triple(2, 2 * n_i + 8, 2 * n_i + 10));
    Ok(finish(rep, FlavorSet::EMPTY))
}

/// Complete multipartite under single approval: vertex `a` (1-based), the
/// `b`-th vertex of a part of size `c`, gets `(a, n+2a-b, n+2a-b+c)`.
pub fn sa_k_partite<T: Coord>(parts: &[usize]) -> Result<Representation<T>, FamilyError> {
    require(
        !parts.is_empty() && parts.iter().all(|&p| p >= 1),
        "parts must be nonempty",
    )?;
    let n: usize = parts.iter().sum();
    let mut intervals = Vec::with_capacity(n);
    let mut a = 1i64;
    for &size in parts {
        for b in 1..=size as i64 {
            let c = size as i64;
            let m = n as i64 + 2 * a - b;
            intervals.push(MarkedInterval::triple(a, m, m + c));
            a += 1;
        }
    }
    Ok(finish(
        Representation::new(1, intervals, FlavorSet::EMPTY),
        FlavorSet::EMPTY,
    ))
}

/// Tree under single approval, by levels from root 0. A child's left
/// endpoint goes just left of its parent's mark, its mark just right of the
/// parent's right endpoint, and the right endpoints of one level share the
/// unit region above everything older, ordered like their marks.
pub fn sa_tree<T: Coord>(parents: &[usize]) -> Result<Representation<T>, FamilyError> {
    let g = tree_graph(parents)?;
    let n = g.n;
    let mut levels = vec![0usize; n];
    for i in 1..n {
        levels[i] = levels[parents[i]] + 1;
    }
    let max_level = *levels.iter().max().unwrap();

    let mut slots: Vec<Option<MarkedInterval<T>>> = vec![None; n];
    slots[0] = Some(MarkedInterval::triple(0, 1, 2));

    for level in 1..=max_level {
        let members: Vec<usize> = (0..n).filter(|&v| levels[v] == level).collect();
        // Region-3 floor: the largest right endpoint of strictly older levels.
        let floor = slots
            .iter()
            .flatten()
            .map(|iv| iv.right.clone())
            .max()
            .unwrap();

        let mut placed_marks: Vec<(T, usize)> = Vec::new();
        for &v in &members {
            let parent = slots[parents[v]].clone().expect("parent already placed");
            let points: Vec<T> = slots
                .iter()
                .flatten()
                .flat_map(|iv| iv.points().cloned().collect::<Vec<_>>())
                .chain(placed_marks.iter().map(|(m, _)| m.clone()))
                .collect();
            // Left endpoint: between the parent's mark and its predecessor.
            let mark_ref = &parent.marks[0];
            let pred = points
                .iter()
                .filter(|p| *p < mark_ref)
                .max()
                .expect("parent's left endpoint precedes its mark")
                .clone();
            let left = (pred + mark_ref.clone()).half();
            // Approval mark: between the parent's right endpoint and the next
            // marked point (or +1 when the parent ends the line so far).
            let right_ref = &parent.right;
            let succ = points
                .iter()
                .filter(|p| *p > right_ref)
                .min()
                .cloned()
                .unwrap_or_else(|| right_ref.clone() + T::one());
            let mark = (right_ref.clone() + succ).half();
            // Placeholder right endpoint; rewritten below in mark order.
            slots[v] = Some(MarkedInterval::new(
                left,
                vec![mark.clone()],
                floor.clone() + T::from_int(3),
            ));
            placed_marks.push((mark, v));
        }
        // Right endpoints in (floor + 1, floor + 2), ordered like the marks.
        placed_marks.sort();
        let count = placed_marks.len() as i64;
        for (idx, (_, v)) in placed_marks.iter().enumerate() {
            let offset = T::ratio(idx as i64 + 1, count + 1);
            slots[*v].as_mut().unwrap().right = floor.clone() + T::one() + offset;
        }
    }

    let intervals = slots.into_iter().map(Option::unwrap).collect();
    Ok(finish(
        Representation::new(1, intervals, FlavorSet::EMPTY),
        FlavorSet::EMPTY,
    ))
}

// ---------------------------------------------------------------------------
// Double-approval representations.
// ---------------------------------------------------------------------------

/// `K_n`: vertex i gets `(i, i+n, i+2n)`.
pub fn da_complete<T: Coord>(n: usize) -> Result<Representation<T>, FamilyError> {
    require(n >= 1, "complete graph needs n >= 1")?;
    let n_i = n as i64;
    let intervals = (1..=n_i)
        .map(|i| MarkedInterval::triple(i, i + n_i, i + 2 * n_i))
        .collect();
    Ok(finish(
        Representation::new(1, intervals, FlavorSet::EMPTY),
        FlavorSet::EMPTY,
    ))
}

/// C_n under double approval, standard labels. n = 3 falls back to K_3.
pub fn da_cycle<T: Coord>(n: usize) -> Result<Representation<T>, FamilyError> {
    require(n >= 3, "approval cycle needs n >= 3")?;
    if n == 3 {
        return da_complete(3);
    }
    let n_i = n as i64;
    let mut intervals: Vec<MarkedInterval<T>> = (1..=n_i - 3)
        .map(|i| MarkedInterval::triple(i, 2 * i + n_i, 2 * i + n_i + 3))
        .collect();
    intervals.push(MarkedInterval::triple(-2, 3 * n_i - 4, 3 * n_i - 2));
    intervals.push(MarkedInterval::triple(-1, 0, 3 * n_i - 1));
    intervals.push(MarkedInterval::triple(-3, n_i + 1, n_i + 3));
    Ok(finish(
        Representation::new(1, intervals, FlavorSet::EMPTY),
        FlavorSet::EMPTY,
    ))
}

/// W_n under double approval: cycle plus hub `(-4, n, 3n)`. W_3 = K_4.
pub fn da_wheel<T: Coord>(n: usize) -> Result<Representation<T>, FamilyError> {
    require(n >= 3, "wheel needs n >= 3")?;
    if n == 3 {
        return da_complete(4);
    }
    let mut rep = da_cycle::<T>(n)?;
    let n_i = n as i64;
    rep.intervals.push(MarkedInterval::triple(-4, n_i, 3 * n_i));
    Ok(finish(rep, FlavorSet::EMPTY))
}

/// `K_{m,n}` under double approval.
pub fn da_complete_bipartite<T: Coord>(
    m: usize,
    n: usize,
) -> Result<Representation<T>, FamilyError> {
    require(m >= 1 && n >= 1, "complete bipartite needs m, n >= 1")?;
    let (m_i, n_i) = (m as i64, n as i64);
    let mut intervals: Vec<MarkedInterval<T>> = (1..=m_i)
        .map(|i| {
            MarkedInterval::triple(
                2 * i,
                2 * m_i + 2 * n_i + 2 * i,
                2 * m_i + 2 * n_i + 2 * i + 1,
            )
        })
        .collect();
    intervals.extend((1..=n_i).map(|i| {
        MarkedInterval::triple(
            2 * m_i + 2 * i,
            2 * m_i + 2 * i + 1,
            4 * m_i + 2 * n_i + 2 * i,
        )
    }));
    Ok(finish(
        Representation::new(1, intervals, FlavorSet::EMPTY),
        FlavorSet::EMPTY,
    ))
}

/// `K_{1,b,c}` under double approval: the `K_{b,c}` representation plus one
/// spanning interval `(1, 2b+2c+3/2, 4b+4c+1)` for the singleton part,
/// appended as the last vertex.
pub fn da_k1bc<T: Coord>(b: usize, c: usize) -> Result<Representation<T>, FamilyError> {
    require(b >= 1 && c >= 1, "parts must be nonempty")?;
    let mut rep = da_complete_bipartite::<T>(b, c)?;
    let (m_i, n_i) = (b as i64, c as i64);
    rep.intervals.push(MarkedInterval::new(
        T::one(),
        vec![T::from_int(2 * m_i + 2 * n_i + 1) + T::ratio(1, 2)],
        T::from_int(4 * m_i + 4 * n_i + 1),
    ));
    Ok(finish(rep, FlavorSet::EMPTY))
}

/// Tree under double approval: root `(0,1,2)`, then each vertex's children
/// packed inside an empty neighborhood of its mark.
pub fn da_tree<T: Coord>(parents: &[usize]) -> Result<Representation<T>, FamilyError> {
    let g = tree_graph(parents)?;
    let n = g.n;
    let mut levels = vec![0usize; n];
    for i in 1..n {
        levels[i] = levels[parents[i]] + 1;
    }
    let max_level = *levels.iter().max().unwrap();

    let mut slots: Vec<Option<MarkedInterval<T>>> = vec![None; n];
    slots[0] = Some(MarkedInterval::triple(0, 1, 2));

    for level in 1..=max_level {
        // Group this level's vertices by parent; each group shares one
        // neighborhood around the parent's mark.
        let mut by_parent: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for v in (0..n).filter(|&v| levels[v] == level) {
            by_parent.entry(parents[v]).or_default().push(v);
        }
        let snapshot: Vec<T> = slots
            .iter()
            .flatten()
            .flat_map(|iv| iv.points().cloned().collect::<Vec<_>>())
            .collect();
        for (p, children) in by_parent {
            let mark = slots[p].as_ref().unwrap().marks[0].clone();
            let d = snapshot
                .iter()
                .filter(|x| **x != mark)
                .map(|x| {
                    let diff = x.clone() - mark.clone();
                    if diff < T::zero() {
                        -diff
                    } else {
                        diff
                    }
                })
                .min()
                .expect("other marked points exist")
                .half();
            let j = children.len() as i64;
            for (idx, &child) in children.iter().enumerate() {
                let i = idx as i64 + 1;
                slots[child] = Some(MarkedInterval::new(
                    mark.clone() - d.clone() + d.clone() * T::from_int(i) / T::from_int(2 * j),
                    vec![mark.clone() + d.clone() * T::from_int(i) / T::from_int(2 * j)],
                    mark.clone() + d.clone() * T::from_int(2 * i + 1) / T::from_int(4 * j),
                ));
            }
        }
    }

    let intervals = slots.into_iter().map(Option::unwrap).collect();
    Ok(finish(
        Representation::new(1, intervals, FlavorSet::EMPTY),
        FlavorSet::EMPTY,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{flavor_flags, validate_representation};
    use crate::semantics::{build_graph, SemanticsTag};
    use crate::Q;

    fn check_rep(rep: &Representation<Q>, tag: SemanticsTag, target: &SimpleGraph, required: FlavorSet) {
        assert!(validate_representation(rep).is_empty());
        assert!(rep.has_distinct_points());
        assert!(required.is_subset_of(flavor_flags(rep)));
        assert_eq!(&build_graph(rep, tag).unwrap(), target);
    }

    #[test]
    fn vi_complete_bipartite_family() {
        for m in 1..=5 {
            for n in 1..=5 {
                let rep = vi_complete_bipartite::<Q>(m, n).unwrap();
                check_rep(
                    &rep,
                    SemanticsTag::Veto,
                    &complete_bipartite_graph(m, n),
                    FlavorSet::of(&[Flavor::Unit, Flavor::Midpoint]),
                );
            }
        }
    }

    #[test]
    fn muvi_cycles() {
        for n in 4..=12 {
            let rep = muvi_cycle::<Q>(n).unwrap();
            check_rep(
                &rep,
                SemanticsTag::Veto,
                &cycle_graph(n),
                FlavorSet::of(&[Flavor::Unit, Flavor::Midpoint]),
            );
        }
        assert!(muvi_cycle::<Q>(3).is_err());
    }

    #[test]
    fn muvi_caterpillars() {
        let cases: Vec<Vec<usize>> = vec![
            vec![0, 1, 0],
            vec![2, 0, 1, 3],
            vec![1],
            vec![0, 0, 0, 0, 0],
            vec![3, 3],
        ];
        for legs in cases {
            let rep = vi_caterpillar::<Q>(&legs).unwrap();
            check_rep(
                &rep,
                SemanticsTag::Veto,
                &caterpillar_graph(&legs).unwrap(),
                FlavorSet::of(&[Flavor::Unit, Flavor::Midpoint]),
            );
        }
    }

    #[test]
    fn vi_trees() {
        let cases: Vec<Vec<usize>> = vec![
            vec![0],
            vec![0, 0, 1, 2],          // P4 below the root
            vec![0, 0, 0, 0, 0, 0],    // star
            vec![0, 0, 1, 1, 2, 2, 3], // bushy
            vec![0, 0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10],
        ];
        for parents in cases {
            let rep = vi_tree::<Q>(&parents).unwrap();
            check_rep(
                &rep,
                SemanticsTag::Veto,
                &tree_graph(&parents).unwrap(),
                FlavorSet::EMPTY,
            );
        }
    }

    #[test]
    fn sa_families() {
        for n in 1..=6 {
            let rep = sa_complete::<Q>(n).unwrap();
            check_rep(
                &rep,
                SemanticsTag::SingleApproval,
                &complete_graph(n),
                FlavorSet::EMPTY,
            );
        }
        for n in 3..=9 {
            let rep = sa_cycle::<Q>(n).unwrap();
            check_rep(
                &rep,
                SemanticsTag::SingleApproval,
                &cycle_graph(n),
                FlavorSet::EMPTY,
            );
            let rep = sa_wheel::<Q>(n).unwrap();
            check_rep(
                &rep,
                SemanticsTag::SingleApproval,
                &wheel_graph(n),
                FlavorSet::EMPTY,
            );
        }
        let rep = sa_k_partite::<Q>(&[3, 3, 3]).unwrap();
        check_rep(
            &rep,
            SemanticsTag::SingleApproval,
            &complete_multipartite(&[3, 3, 3]),
            FlavorSet::EMPTY,
        );
    }

    #[test]
    fn sa_trees() {
        let cases: Vec<Vec<usize>> = vec![
            vec![0],
            vec![0, 0, 0, 1, 1, 2],
            vec![0, 0, 1, 2, 3],
            vec![0, 0, 0, 1, 1, 2, 2, 3, 3],
            vec![0, 0, 1, 1, 3, 3, 5, 5],
        ];
        for parents in cases {
            let rep = sa_tree::<Q>(&parents).unwrap();
            check_rep(
                &rep,
                SemanticsTag::SingleApproval,
                &tree_graph(&parents).unwrap(),
                FlavorSet::EMPTY,
            );
        }
    }

    #[test]
    fn da_families() {
        for n in 1..=6 {
            let rep = da_complete::<Q>(n).unwrap();
            check_rep(
                &rep,
                SemanticsTag::DoubleApproval,
                &complete_graph(n),
                FlavorSet::EMPTY,
            );
        }
        for n in 3..=9 {
            let rep = da_cycle::<Q>(n).unwrap();
            check_rep(
                &rep,
                SemanticsTag::DoubleApproval,
                &cycle_graph(n),
                FlavorSet::EMPTY,
            );
            let rep = da_wheel::<Q>(n).unwrap();
            check_rep(
                &rep,
                SemanticsTag::DoubleApproval,
                &wheel_graph(n),
                FlavorSet::EMPTY,
            );
        }
        for m in 1..=6 {
            for n in 1..=6 {
                let rep = da_complete_bipartite::<Q>(m, n).unwrap();
                check_rep(
                    &rep,
                    SemanticsTag::DoubleApproval,
                    &complete_bipartite_graph(m, n),
                    FlavorSet::EMPTY,
                );
            }
        }
    }

    #[test]
    fn da_trees_and_k1bc() {
        let cases: Vec<Vec<usize>> = vec![
            vec![0],
            vec![0, 0, 0, 1, 1, 2],
            vec![0, 0, 1, 2, 3, 4],
            vec![0, 0, 0, 0, 2, 2, 5],
        ];
        for parents in cases {
            let rep = da_tree::<Q>(&parents).unwrap();
            check_rep(
                &rep,
                SemanticsTag::DoubleApproval,
                &tree_graph(&parents).unwrap(),
                FlavorSet::EMPTY,
            );
        }
        for b in 1..=3 {
            for c in 1..=3 {
                let rep = da_k1bc::<Q>(b, c).unwrap();
                // Parts: b vertices, then c, then the singleton hub last.
                let mut target = complete_bipartite_graph(b, c);
                target.n += 1;
                for v in 0..(b + c) {
                    target.add_edge(v, b + c);
                }
                check_rep(&rep, SemanticsTag::DoubleApproval, &target, FlavorSet::EMPTY);
            }
        }
        // K_{1,1,1} is the triangle.
        let rep = da_k1bc::<Q>(1, 1).unwrap();
        assert_eq!(
            build_graph(&rep, SemanticsTag::DoubleApproval).unwrap(),
            complete_graph(3)
        );
    }

    #[test]
    fn named_graphs() {
        let g = grotzsch();
        assert_eq!((g.n, g.edge_count()), (11, 20));
        let l = lobster5();
        assert_eq!((l.n, l.edge_count()), (11, 10));
        let gk = g_k(3).unwrap();
        assert_eq!((gk.n, gk.edge_count()), (7, 9));
        let c = circulant(13, &[1, 5]).unwrap();
        assert_eq!((c.n, c.edge_count()), (13, 26));
        // Rotation is an automorphism, so the circulant is vertex-transitive.
        let rotated = c.relabel(&(0..13).map(|v| (v + 1) % 13).collect::<Vec<_>>());
        assert_eq!(rotated, c);
        // G_10 bookkeeping: 1 + 10 + C(10,2) vertices.
        assert_eq!(g_k(10).unwrap().n, 56);
    }

    #[test]
    fn spec_literals() {
        let rep = vi_complete_bipartite::<Q>(2, 3).unwrap();
        assert_eq!(rep.len(), 5);
        let rep = sa_complete::<Q>(4).unwrap();
        assert_eq!(rep.intervals[0], MarkedInterval::triple(-2, -1, 2));
        assert_eq!(rep.intervals[3], MarkedInterval::triple(-8, -7, 8));
        let rep = da_complete::<Q>(5).unwrap();
        assert_eq!(rep.intervals[0], MarkedInterval::triple(1, 6, 11));
        assert_eq!(rep.intervals[4], MarkedInterval::triple(5, 10, 15));
    }
}
