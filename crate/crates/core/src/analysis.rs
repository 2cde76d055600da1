//! Coloring, chromatic-number certification, and the class transformations
//! (proper-to-unit, midpoint-unit double approval to unit intervals, and the
//! midpoint-proper order check).

use crate::graph::SimpleGraph;
use crate::model::{
    flavor_flags, ordering_word, FlavorSet, MarkedInterval, Representation,
};
use crate::scalar::Coord;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum AnalysisError {
    #[error("representation is not unit-flavored")]
    NotUnit,
    #[error("representation is not proper")]
    NotProper,
    #[error("representation is not midpoint-unit")]
    NotMidpointUnit,
    #[error("intervals are not all the same length")]
    NotUnitIntervals,
    #[error("operation needs single-mark intervals")]
    WrongArity,
    #[error("marked points must be distinct")]
    TiedPoints,
    #[error("graph has {n} vertices, above the cap {cap}")]
    TooLarge { n: usize, cap: usize },
}

/// A vertex coloring with its palette size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    pub colors: Vec<usize>,
    pub palette: usize,
}

impl Coloring {
    pub fn is_proper(&self, g: &SimpleGraph) -> bool {
        g.edges.iter().all(|&(u, v)| self.colors[u] != self.colors[v])
    }
}

/// Four-coloring of a unit veto representation by floor parities: the color
/// encodes (parity of floor(l), parity of floor(mark)) after normalizing the
/// common length to 1 and shifting all coordinates off the integers.
/// Index map: 0 (odd,odd), 1 (odd,even), 2 (even,even), 3 (even,odd).
pub fn uvi_four_color<T: Coord>(rep: &Representation<T>) -> Result<Coloring, AnalysisError> {
    if rep.mark_count != 1 {
        return Err(AnalysisError::WrongArity);
    }
    if !flavor_flags(rep).unit {
        return Err(AnalysisError::NotUnit);
    }
    if rep.is_empty() {
        return Ok(Coloring {
            colors: Vec::new(),
            palette: 4,
        });
    }
    let len = rep.intervals[0].length();
    let normalized = rep.scale(&(T::one() / len));

    // Integer floors are ambiguous parity anchors; translate by a value
    // distinct from every coordinate's distance-to-integer so no marked
    // point lands on an integer. A pure translation never changes the graph.
    let mut forbidden: Vec<T> = normalized
        .points()
        .into_iter()
        .map(|(c, _, _)| {
            let down = T::from_int(c.floor_i64());
            let frac = c - down;
            if frac == T::zero() {
                frac
            } else {
                T::one() - frac
            }
        })
        .collect();
    forbidden.sort();
    forbidden.dedup();
    let mut shift = T::zero();
    if forbidden.first() == Some(&T::zero()) {
        shift = forbidden
            .iter()
            .skip(1)
            .next()
            .map(|next| next.clone().half())
            .unwrap_or_else(|| T::ratio(1, 2));
    }
    let shifted = normalized.translate(&shift);
    debug_assert!(shifted.points().iter().all(|(c, _, _)| {
        c.clone() - T::from_int(c.floor_i64()) != T::zero()
    }));

    let colors = shifted
        .intervals
        .iter()
        .map(|iv| {
            let l_odd = iv.left.floor_i64().rem_euclid(2) == 1;
            let m_odd = iv.marks[0].floor_i64().rem_euclid(2) == 1;
            match (l_odd, m_odd) {
                (true, true) => 0,
                (true, false) => 1,
                (false, false) => 2,
                (false, true) => 3,
            }
        })
        .collect();
    Ok(Coloring { colors, palette: 4 })
}

/// How a chromatic lower bound was certified for `chi - 1` colors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Infeasibility {
    /// Backtracking exhausted every (chi-1)-coloring; node count recorded.
    ExhaustedSearch { colors: usize, nodes: u64 },
    /// A clique larger than chi - 1 makes the search unnecessary.
    Clique { vertices: Vec<usize> },
}

#[derive(Clone, Debug)]
pub struct ChromaticCertificate {
    pub chi: usize,
    pub coloring: Coloring,
    pub lower_bound: Infeasibility,
}

pub const CHROMATIC_CAP: usize = 20;

/// Exact chromatic number with a certificate pair: an optimal proper
/// coloring plus evidence that one fewer color is impossible. Saturation-
/// ordered backtracking with a greedy clique lower bound.
pub fn chromatic_number(g: &SimpleGraph, cap: usize) -> Result<ChromaticCertificate, AnalysisError> {
    if g.n > cap {
        return Err(AnalysisError::TooLarge { n: g.n, cap });
    }
    if g.n == 0 {
        return Ok(ChromaticCertificate {
            chi: 0,
            coloring: Coloring {
                colors: Vec::new(),
                palette: 0,
            },
            lower_bound: Infeasibility::Clique { vertices: Vec::new() },
        });
    }
    let adj = g.adjacency();
    let clique = greedy_clique(g, &adj);
    let mut k = clique.len().max(1);
    let mut exhausted: Option<(usize, u64)> = None;
    loop {
        let mut nodes = 0u64;
        match try_color(g, &adj, k, &mut nodes) {
            Some(colors) => {
                let coloring = Coloring { colors, palette: k };
                debug_assert!(coloring.is_proper(g));
                let lower_bound = match exhausted {
                    Some((colors, nodes)) => Infeasibility::ExhaustedSearch { colors, nodes },
                    None => Infeasibility::Clique {
                        vertices: clique.clone(),
                    },
                };
                return Ok(ChromaticCertificate {
                    chi: k,
                    coloring,
                    lower_bound,
                });
            }
            None => {
                exhausted = Some((k, nodes));
                k += 1;
            }
        }
    }
}

fn greedy_clique(g: &SimpleGraph, adj: &[Vec<bool>]) -> Vec<usize> {
    let mut best: Vec<usize> = Vec::new();
    for start in 0..g.n {
        let mut clique = vec![start];
        let mut order: Vec<usize> = (0..g.n).filter(|&v| v != start).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
        for v in order {
            if clique.iter().all(|&u| adj[u][v]) {
                clique.push(v);
            }
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best.sort_unstable();
    best
}

/// Backtracking k-coloring in saturation order (most distinctly-colored
/// neighbors first, degree as tie-break). New colors are introduced at most
/// one at a time, which prunes color-permutation symmetry.
fn try_color(g: &SimpleGraph, adj: &[Vec<bool>], k: usize, nodes: &mut u64) -> Option<Vec<usize>> {
    let n = g.n;
    let mut colors: Vec<Option<usize>> = vec![None; n];

    fn go(
        n: usize,
        adj: &[Vec<bool>],
        k: usize,
        colors: &mut Vec<Option<usize>>,
        used: usize,
        nodes: &mut u64,
    ) -> bool {
        *nodes += 1;
        // Pick the uncolored vertex with the most saturated neighborhood.
        let mut pick: Option<(usize, usize, usize)> = None;
        for v in 0..n {
            if colors[v].is_some() {
                continue;
            }
            let mut seen = vec![false; k];
            let mut sat = 0;
            let mut deg = 0;
            for u in 0..n {
                if adj[v][u] {
                    deg += 1;
                    if let Some(c) = colors[u] {
                        if !seen[c] {
                            seen[c] = true;
                            sat += 1;
                        }
                    }
                }
            }
            if pick.map_or(true, |(s, d, _)| (sat, deg) > (s, d)) {
                pick = Some((sat, deg, v));
            }
        }
        let Some((_, _, v)) = pick else { return true };
        let allowed = (used + 1).min(k);
        for c in 0..allowed {
            if (0..n).all(|u| !adj[v][u] || colors[u] != Some(c)) {
                colors[v] = Some(c);
                if go(n, adj, k, colors, used.max(c + 1), nodes) {
                    return true;
                }
                colors[v] = None;
            }
        }
        false
    }

    go(n, adj, k, &mut colors, 0, nodes)
        .then(|| colors.into_iter().map(Option::unwrap).collect())
}

pub fn is_triangle_free(g: &SimpleGraph) -> bool {
    let adj = g.adjacency();
    g.edges
        .iter()
        .all(|&(u, v)| (0..g.n).all(|w| w == u || w == v || !adj[u][w] || !adj[v][w]))
}

/// Rescales a proper representation to unit lengths without reordering any
/// marked point, processing intervals by left endpoint: the stretch zone
/// starts at the rightmost already-unit right endpoint inside the interval,
/// so earlier intervals are never touched.
pub fn proper_to_unit<T: Coord>(
    rep: &Representation<T>,
) -> Result<Representation<T>, AnalysisError> {
    if !flavor_flags(rep).proper {
        return Err(AnalysisError::NotProper);
    }
    if !rep.has_distinct_points() {
        return Err(AnalysisError::TiedPoints);
    }
    let n = rep.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| rep.intervals[a].left.cmp(&rep.intervals[b].left));

    let mut current = rep.clone();
    for (step, &i) in order.iter().enumerate() {
        let a = current.intervals[i].left.clone();
        let b = current.intervals[i].right.clone();
        // Rightmost right endpoint inside [a, b] among already-processed
        // intervals (all unit by now); fall back to a itself.
        let alpha = order[..step]
            .iter()
            .map(|&j| current.intervals[j].right.clone())
            .filter(|r| *r >= a && *r <= b)
            .max()
            .unwrap_or_else(|| a.clone());
        let target = a.clone() + T::one();
        let scale = (target.clone() - alpha.clone()) / (b.clone() - alpha.clone());
        let remap = |x: &T| -> T {
            if *x < alpha {
                x.clone()
            } else if *x <= b {
                alpha.clone() + (x.clone() - alpha.clone()) * scale.clone()
            } else {
                x.clone() + target.clone() - b.clone()
            }
        };
        for iv in &mut current.intervals {
            *iv = MarkedInterval::new(
                remap(&iv.left),
                iv.marks.iter().map(&remap).collect(),
                remap(&iv.right),
            );
        }
    }
    current.flavor = flavor_flags(&current);
    debug_assert!(current.flavor.unit);
    Ok(current)
}

/// Midpoint-unit representation (length 2c, centered marks) to plain unit
/// intervals: `(a, a+c, a+2c)` becomes `[a + c/2, a + 3c/2]`. The double
/// approval graph of the input equals the intersection graph of the output.
pub fn muda_to_unit_interval<T: Coord>(
    rep: &Representation<T>,
) -> Result<Vec<(T, T)>, AnalysisError> {
    if rep.mark_count != 1 {
        return Err(AnalysisError::WrongArity);
    }
    let flags = flavor_flags(rep);
    if !(flags.unit && flags.midpoint) {
        return Err(AnalysisError::NotMidpointUnit);
    }
    Ok(rep
        .intervals
        .iter()
        .map(|iv| {
            let c = iv.length().half();
            let half = c.half();
            (iv.left.clone() + half.clone(), iv.marks[0].clone() + half)
        })
        .collect())
}

/// Inverse of [`muda_to_unit_interval`]: equal-length plain intervals back
/// to a midpoint-unit representation; composing the two is the identity.
pub fn unit_intervals_to_muda<T: Coord>(
    intervals: &[(T, T)],
) -> Result<Representation<T>, AnalysisError> {
    if let Some((l0, r0)) = intervals.first() {
        let c = r0.clone() - l0.clone();
        if c <= T::zero() || intervals.iter().any(|(l, r)| r.clone() - l.clone() != c) {
            return Err(AnalysisError::NotUnitIntervals);
        }
        let half = c.half();
        let out = intervals
            .iter()
            .map(|(l, _)| {
                MarkedInterval::new(
                    l.clone() - half.clone(),
                    vec![l.clone() + half.clone()],
                    l.clone() + c.clone() + half.clone(),
                )
            })
            .collect();
        let mut rep = Representation::new(1, out, FlavorSet::EMPTY);
        rep.flavor = flavor_flags(&rep);
        Ok(rep)
    } else {
        Ok(Representation::new(1, Vec::new(), FlavorSet::EMPTY))
    }
}

/// Outcome of the midpoint-proper order check: left endpoints, marks, and
/// right endpoints must list the vertices in one common order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MpviOrder {
    Pass,
    /// Two vertices whose mark or right-endpoint order disagrees with their
    /// left-endpoint order, and which sequence disagreed.
    Violation {
        first: usize,
        second: usize,
        sequence: &'static str,
    },
}

pub fn mpvi_order_check<T: Coord>(rep: &Representation<T>) -> MpviOrder {
    let n = rep.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| rep.intervals[a].left.cmp(&rep.intervals[b].left));
    for w in order.windows(2) {
        let (a, b) = (w[0], w[1]);
        for j in 0..rep.mark_count {
            if rep.intervals[a].marks[j] >= rep.intervals[b].marks[j] {
                return MpviOrder::Violation {
                    first: a,
                    second: b,
                    sequence: "marks",
                };
            }
        }
        if rep.intervals[a].right >= rep.intervals[b].right {
            return MpviOrder::Violation {
                first: a,
                second: b,
                sequence: "right endpoints",
            };
        }
    }
    MpviOrder::Pass
}

/// Ordering-word equality helper used by the transformation suites.
pub fn same_ordering_word<T: Coord>(a: &Representation<T>, b: &Representation<T>) -> bool {
    match (ordering_word(a), ordering_word(b)) {
        (Ok(wa), Ok(wb)) => wa == wb,
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{circulant, complete_graph, cycle_graph, grotzsch, muvi_cycle};
    use crate::semantics::{build_graph, intersection_graph, SemanticsTag};
    use crate::Q;

    fn q(p: i64, q_: i64) -> Q {
        Q::ratio(p, q_)
    }

    #[test]
    fn four_color_parity_examples() {
        // (1.2, 1.5, 2.2) is red (odd floor, odd floor); (0.5, 1.1, 1.5)
        // is orange (even floor, odd floor). Unit lengths 1.
        let rep = Representation::new(
            1,
            vec![
                MarkedInterval::new(q(6, 5), vec![q(3, 2)], q(11, 5)),
                MarkedInterval::new(q(1, 2), vec![q(11, 10)], q(3, 2)),
            ],
            FlavorSet::EMPTY,
        );
        let coloring = uvi_four_color(&rep).unwrap();
        assert_eq!(coloring.colors, vec![0, 3]);
    }

    #[test]
    fn four_color_muvi_cycle() {
        let rep = muvi_cycle::<Q>(9).unwrap();
        let coloring = uvi_four_color(&rep).unwrap();
        assert!(coloring.palette <= 4);
        assert!(coloring.is_proper(&build_graph(&rep, SemanticsTag::Veto).unwrap()));
    }

    #[test]
    fn four_color_rejects_non_unit() {
        let rep = Representation::<Q>::from_triples(&[(0, 1, 2), (0, 2, 5)]);
        assert_eq!(uvi_four_color(&rep), Err(AnalysisError::NotUnit));
    }

    #[test]
    fn chromatic_examples() {
        assert_eq!(chromatic_number(&cycle_graph(5), CHROMATIC_CAP).unwrap().chi, 3);
        assert_eq!(chromatic_number(&complete_graph(4), CHROMATIC_CAP).unwrap().chi, 4);
        let cert = chromatic_number(&grotzsch(), CHROMATIC_CAP).unwrap();
        assert_eq!(cert.chi, 4);
        assert!(cert.coloring.is_proper(&grotzsch()));
        assert!(matches!(
            cert.lower_bound,
            Infeasibility::ExhaustedSearch { colors: 3, .. }
        ));
        let circ = circulant(13, &[1, 5]).unwrap();
        assert_eq!(chromatic_number(&circ, CHROMATIC_CAP).unwrap().chi, 4);
        assert!(matches!(
            chromatic_number(&complete_graph(21), CHROMATIC_CAP),
            Err(AnalysisError::TooLarge { .. })
        ));
    }

    #[test]
    fn triangle_free_examples() {
        assert!(!is_triangle_free(&complete_graph(3)));
        assert!(is_triangle_free(&grotzsch()));
        assert!(is_triangle_free(&cycle_graph(5)));
    }

    #[test]
    fn proper_to_unit_examples() {
        let rep = Representation::<Q>::from_triples(&[(0, 2, 4), (3, 5, 7)]);
        let unit = proper_to_unit(&rep).unwrap();
        assert!(flavor_flags(&unit).unit);
        assert!(same_ordering_word(&rep, &unit));

        let rep = Representation::<Q>::from_triples(&[(0, 1, 3), (2, 4, 6)]);
        let unit = proper_to_unit(&rep).unwrap();
        assert!(flavor_flags(&unit).unit);
        assert!(same_ordering_word(&rep, &unit));
        assert_eq!(
            build_graph(&rep, SemanticsTag::Veto).unwrap(),
            build_graph(&unit, SemanticsTag::Veto).unwrap()
        );

        let nested = Representation::<Q>::from_triples(&[(0, 4, 9), (1, 2, 3)]);
        assert_eq!(proper_to_unit(&nested), Err(AnalysisError::NotProper));
    }

    #[test]
    fn muda_round_trip() {
        let rep = Representation::<Q>::from_triples(&[(0, 1, 2)]);
        let plain = muda_to_unit_interval(&rep).unwrap();
        assert_eq!(plain, vec![(q(1, 2), q(3, 2))]);
        let back = unit_intervals_to_muda(&plain).unwrap();
        assert_eq!(back.intervals, rep.intervals);

        let rep = Representation::new(
            1,
            vec![
                MarkedInterval::triple(0, 1, 2),
                MarkedInterval::new(q(4, 5), vec![q(9, 5)], q(14, 5)),
            ],
            FlavorSet::EMPTY,
        );
        let plain = muda_to_unit_interval(&rep).unwrap();
        assert_eq!(
            build_graph(&rep, SemanticsTag::DoubleApproval).unwrap(),
            intersection_graph(&plain)
        );
        assert_eq!(unit_intervals_to_muda(&plain).unwrap().intervals, rep.intervals);
    }

    #[test]
    fn mpvi_order_examples() {
        let rep = Representation::new(
            1,
            vec![
                MarkedInterval::triple(0, 1, 2),
                MarkedInterval::new(Q::from_int(1), vec![q(5, 2)], Q::from_int(4)),
            ],
            FlavorSet::EMPTY,
        );
        assert_eq!(mpvi_order_check(&rep), MpviOrder::Pass);

        let bad = Representation::<Q>::from_triples(&[(0, 3, 4), (1, 2, 5)]);
        assert_eq!(
            mpvi_order_check(&bad),
            MpviOrder::Violation {
                first: 0,
                second: 1,
                sequence: "marks"
            }
        );
    }
}
