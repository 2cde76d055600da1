//! Adjacency predicates for every interval semantics, graph builders, and
//! the reductions between mark counts and classes.
//!
//! All predicates are set-based: the intersection `X = [max(l), min(r)]`
//! must be nonempty, and mark membership uses closed intervals. On
//! representations with distinct marked points this agrees with the strict
//! chain formulations (see [`adjacent_strict`] and the equivalence tests).

use crate::graph::{Digraph, SimpleGraph};
use crate::model::{FlavorSet, MarkedInterval, Representation};
use crate::scalar::Coord;

/// Which adjacency rule to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SemanticsTag {
    /// Closed intervals intersect; marks ignored.
    Interval,
    /// Intervals intersect and neither contains the other's single mark.
    Veto,
    /// Veto with arcs: `a -> b` when a's interval meets b's on b's left side.
    VetoDirected,
    /// Intervals intersect and contain none of each other's `k >= 2` marks.
    KVeto,
    /// Intersection contains at least one of the two marks.
    PointCore,
    /// Intersection contains exactly one of the two marks.
    SingleApproval,
    /// Intersection contains both marks.
    DoubleApproval,
}

impl SemanticsTag {
    pub const UNDIRECTED: [SemanticsTag; 6] = [
        SemanticsTag::Interval,
        SemanticsTag::Veto,
        SemanticsTag::KVeto,
        SemanticsTag::PointCore,
        SemanticsTag::SingleApproval,
        SemanticsTag::DoubleApproval,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SemanticsTag::Interval => "interval",
            SemanticsTag::Veto => "veto",
            SemanticsTag::VetoDirected => "veto-directed",
            SemanticsTag::KVeto => "k-veto",
            SemanticsTag::PointCore => "point-core",
            SemanticsTag::SingleApproval => "single-approval",
            SemanticsTag::DoubleApproval => "double-approval",
        }
    }

    /// Whether a representation with `k` marks per interval fits this tag.
    pub fn arity_ok(self, k: usize) -> bool {
        match self {
            SemanticsTag::Interval => true,
            SemanticsTag::KVeto => k >= 2,
            _ => k == 1,
        }
    }
}

impl std::fmt::Display for SemanticsTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for SemanticsTag {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "interval" => Ok(SemanticsTag::Interval),
            "veto" => Ok(SemanticsTag::Veto),
            "veto-directed" => Ok(SemanticsTag::VetoDirected),
            "k-veto" => Ok(SemanticsTag::KVeto),
            "point-core" => Ok(SemanticsTag::PointCore),
            "single-approval" => Ok(SemanticsTag::SingleApproval),
            "double-approval" => Ok(SemanticsTag::DoubleApproval),
            other => Err(format!("unknown semantics tag `{other}`")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum SemanticsError {
    #[error("semantics `{tag}` does not accept mark count {found}")]
    ArityMismatch { tag: &'static str, found: usize },
    #[error("tag is directed; use build_digraph")]
    DirectedTag,
    #[error("marked points must be distinct here; perturb first")]
    TiedPoints,
    #[error("interval {index} is malformed")]
    MalformedInterval { index: usize },
}

/// Set-based adjacency of two intervals under an undirected tag.
pub fn adjacent<T: Coord>(
    a: &MarkedInterval<T>,
    b: &MarkedInterval<T>,
    tag: SemanticsTag,
) -> Result<bool, SemanticsError> {
    if tag == SemanticsTag::VetoDirected {
        return Err(SemanticsError::DirectedTag);
    }
    if !tag.arity_ok(a.mark_count()) || a.mark_count() != b.mark_count() {
        return Err(SemanticsError::ArityMismatch {
            tag: tag.name(),
            found: a.mark_count(),
        });
    }
    let lo = a.left.clone().max(b.left.clone());
    let hi = a.right.clone().min(b.right.clone());
    let overlap = lo <= hi;
    Ok(match tag {
        SemanticsTag::Interval => overlap,
        SemanticsTag::Veto | SemanticsTag::KVeto => {
            overlap
                && a.marks.iter().all(|m| !b.contains(m))
                && b.marks.iter().all(|m| !a.contains(m))
        }
        SemanticsTag::PointCore | SemanticsTag::SingleApproval | SemanticsTag::DoubleApproval => {
            let in_x = |m: &T| &lo <= m && m <= &hi;
            let count = usize::from(in_x(&a.marks[0])) + usize::from(in_x(&b.marks[0]));
            match tag {
                SemanticsTag::PointCore => overlap && count >= 1,
                SemanticsTag::SingleApproval => overlap && count == 1,
                _ => overlap && count == 2,
            }
        }
        SemanticsTag::VetoDirected => unreachable!(),
    })
}

/// The strict chain formulation: `a_vk < b_l < a_r < b_v1` or symmetric.
/// Equivalent to [`adjacent`] under veto/k-veto on distinct points.
pub fn adjacent_strict<T: Coord>(a: &MarkedInterval<T>, b: &MarkedInterval<T>) -> bool {
    let forward = |x: &MarkedInterval<T>, y: &MarkedInterval<T>| {
        x.marks.last().unwrap() < &y.left
            && y.left < x.right
            && x.right < y.marks[0]
    };
    forward(a, b) || forward(b, a)
}

/// Builds the graph of a representation under an undirected tag.
pub fn build_graph<T: Coord>(
    rep: &Representation<T>,
    tag: SemanticsTag,
) -> Result<SimpleGraph, SemanticsError> {
    if !rep.is_empty() && !tag.arity_ok(rep.mark_count) {
        return Err(SemanticsError::ArityMismatch {
            tag: tag.name(),
            found: rep.mark_count,
        });
    }
    let n = rep.len();
    let mut g = SimpleGraph::empty(n);
    for u in 0..n {
        for v in (u + 1)..n {
            if adjacent(&rep.intervals[u], &rep.intervals[v], tag)? {
                g.add_edge(u, v);
            }
        }
    }
    Ok(g)
}

/// Builds the orientation: arc `a -> b` iff `a_v < b_l < a_r < b_v`.
/// Requires one mark per interval and distinct marked points; the
/// underlying undirected graph equals `build_graph(rep, Veto)`.
pub fn build_digraph<T: Coord>(rep: &Representation<T>) -> Result<Digraph, SemanticsError> {
    if !rep.is_empty() && rep.mark_count != 1 {
        return Err(SemanticsError::ArityMismatch {
            tag: SemanticsTag::VetoDirected.name(),
            found: rep.mark_count,
        });
    }
    if !rep.has_distinct_points() {
        return Err(SemanticsError::TiedPoints);
    }
    let n = rep.len();
    let mut d = Digraph::empty(n);
    for u in 0..n {
        for v in 0..n {
            if u == v {
                continue;
            }
            let (a, b) = (&rep.intervals[u], &rep.intervals[v]);
            if &a.marks[0] < &b.left && b.left < a.right && &a.right < &b.marks[0] {
                d.add_arc(u, v);
            }
        }
    }
    Ok(d)
}

/// Edge counts of one representation under the five undirected mark-aware
/// semantics, plus whether the two partition identities hold:
/// interval = veto ⊔ point-core and point-core = single ⊔ double approval.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionReport {
    pub interval_edges: usize,
    pub veto_edges: usize,
    pub pc_edges: usize,
    pub sa_edges: usize,
    pub da_edges: usize,
    pub holds: bool,
}

pub fn partition_check<T: Coord>(
    rep: &Representation<T>,
) -> Result<PartitionReport, SemanticsError> {
    if !rep.is_empty() && rep.mark_count != 1 {
        return Err(SemanticsError::ArityMismatch {
            tag: "partition",
            found: rep.mark_count,
        });
    }
    if !rep.has_distinct_points() {
        return Err(SemanticsError::TiedPoints);
    }
    let interval = build_graph(rep, SemanticsTag::Interval)?;
    let veto = build_graph(rep, SemanticsTag::Veto)?;
    let pc = build_graph(rep, SemanticsTag::PointCore)?;
    let sa = build_graph(rep, SemanticsTag::SingleApproval)?;
    let da = build_graph(rep, SemanticsTag::DoubleApproval)?;

    let disjoint_union = |whole: &SimpleGraph, p1: &SimpleGraph, p2: &SimpleGraph| {
        p1.edges.is_disjoint(&p2.edges)
            && whole.edges == p1.edges.union(&p2.edges).copied().collect()
    };
    let holds = disjoint_union(&interval, &veto, &pc) && disjoint_union(&pc, &sa, &da);
    Ok(PartitionReport {
        interval_edges: interval.edge_count(),
        veto_edges: veto.edge_count(),
        pc_edges: pc.edge_count(),
        sa_edges: sa.edge_count(),
        da_edges: da.edge_count(),
        holds,
    })
}

/// Splits the leftmost mark of every interval into enough marks to reach
/// `k_target`, placed inside an empty neighborhood of the original mark
/// (half the distance to its nearest other marked point, subdivided
/// evenly). The graph is unchanged: veto for single-mark input, k-veto
/// for multi-mark input and for the output.
pub fn split_to_k_veto<T: Coord>(
    rep: &Representation<T>,
    k_target: usize,
) -> Result<Representation<T>, SemanticsError> {
    if k_target < 2 || rep.mark_count > k_target {
        return Err(SemanticsError::ArityMismatch {
            tag: "k-veto split",
            found: rep.mark_count,
        });
    }
    if !rep.has_distinct_points() {
        return Err(SemanticsError::TiedPoints);
    }
    let mut all_points: Vec<T> = rep.points().into_iter().map(|(c, _, _)| c).collect();
    all_points.sort();

    let extra = k_target - rep.mark_count + 1;
    let mut intervals = Vec::with_capacity(rep.len());
    for iv in &rep.intervals {
        let m = iv.marks[0].clone();
        let nearest = all_points
            .iter()
            .filter(|p| **p != m)
            .map(|p| {
                let d = p.clone() - m.clone();
                if d < T::zero() {
                    -d
                } else {
                    d
                }
            })
            .min()
            .expect("at least the endpoints differ from the mark");
        let eps = nearest.half();
        // `extra` marks at m + (2j - (extra - 1)) * eps / extra, all within
        // the empty neighborhood (m - eps, m + eps).
        let mut marks: Vec<T> = (0..extra)
            .map(|j| {
                m.clone()
                    + eps.clone() * T::from_int(2 * j as i64 - (extra as i64 - 1))
                        / T::from_int(extra as i64)
            })
            .collect();
        marks.extend(iv.marks.iter().skip(1).cloned());
        intervals.push(MarkedInterval::new(iv.left.clone(), marks, iv.right.clone()));
    }
    Ok(Representation::new(k_target, intervals, rep.flavor))
}

/// Drops the interior marks, keeping the first and last of each interval.
/// Preserves the k-veto graph.
pub fn reduce_to_double<T: Coord>(
    rep: &Representation<T>,
) -> Result<Representation<T>, SemanticsError> {
    if rep.mark_count < 2 {
        return Err(SemanticsError::ArityMismatch {
            tag: "k-veto reduce",
            found: rep.mark_count,
        });
    }
    if rep.mark_count == 2 {
        return Ok(rep.clone());
    }
    let intervals = rep
        .intervals
        .iter()
        .map(|iv| {
            MarkedInterval::new(
                iv.left.clone(),
                vec![iv.marks[0].clone(), iv.marks[iv.marks.len() - 1].clone()],
                iv.right.clone(),
            )
        })
        .collect();
    Ok(Representation::new(2, intervals, rep.flavor))
}

/// Turns plain intervals into a single-approval representation of the same
/// intersection graph by placing each mark just right of its left endpoint
/// (closer than half the least endpoint gap).
pub fn interval_to_single_approval<T: Coord>(
    intervals: &[(T, T)],
) -> Result<Representation<T>, SemanticsError> {
    for (i, (l, r)) in intervals.iter().enumerate() {
        if l >= r {
            return Err(SemanticsError::MalformedInterval { index: i });
        }
    }
    let mut endpoints: Vec<T> = intervals
        .iter()
        .flat_map(|(l, r)| [l.clone(), r.clone()])
        .collect();
    endpoints.sort();
    if endpoints.windows(2).any(|w| w[0] == w[1]) {
        return Err(SemanticsError::TiedPoints);
    }
    let eps = match endpoints
        .windows(2)
        .map(|w| w[1].clone() - w[0].clone())
        .min()
    {
        Some(gap) => gap.half(),
        None => T::one(),
    };
    let out = intervals
        .iter()
        .map(|(l, r)| MarkedInterval::new(l.clone(), vec![l.clone() + eps.clone()], r.clone()))
        .collect();
    Ok(Representation::new(1, out, FlavorSet::EMPTY))
}

/// Intersection graph of plain closed intervals.
pub fn intersection_graph<T: Coord>(intervals: &[(T, T)]) -> SimpleGraph {
    let n = intervals.len();
    let mut g = SimpleGraph::empty(n);
    for u in 0..n {
        for v in (u + 1)..n {
            let lo = intervals[u].0.clone().max(intervals[v].0.clone());
            let hi = intervals[u].1.clone().min(intervals[v].1.clone());
            if lo <= hi {
                g.add_edge(u, v);
            }
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{perturb_distinct, Flavor};
    use crate::Q;

    fn iv(l: i64, m: i64, r: i64) -> MarkedInterval<Q> {
        MarkedInterval::triple(l, m, r)
    }

    fn rep(triples: &[(i64, i64, i64)]) -> Representation<Q> {
        Representation::from_triples(triples)
    }

    #[test]
    fn adjacency_examples() {
        assert!(adjacent(&iv(0, 2, 4), &iv(3, 5, 7), SemanticsTag::Veto).unwrap());
        // Contained interval: never veto-adjacent.
        let inner = MarkedInterval::new(Q::from_int(1), vec![Q::ratio(5, 2)], Q::from_int(3));
        assert!(!adjacent(&iv(0, 2, 4), &inner, SemanticsTag::Veto).unwrap());
        assert!(adjacent(&iv(-2, -1, 2), &iv(-4, -3, 4), SemanticsTag::SingleApproval).unwrap());
        assert!(adjacent(&iv(1, 6, 11), &iv(2, 7, 12), SemanticsTag::DoubleApproval).unwrap());
        for tag in SemanticsTag::UNDIRECTED {
            if tag.arity_ok(1) {
                assert!(!adjacent(&iv(0, 1, 2), &iv(3, 4, 5), tag).unwrap());
            }
        }
    }

    #[test]
    fn build_graph_examples() {
        let r = rep(&[(0, 2, 4), (3, 5, 7)]);
        let veto = build_graph(&r, SemanticsTag::Veto).unwrap();
        assert_eq!(veto.edge_count(), 1);
        let pc = build_graph(&r, SemanticsTag::PointCore).unwrap();
        assert_eq!(pc.edge_count(), 0);
        let single = rep(&[(0, 1, 2)]);
        for tag in SemanticsTag::UNDIRECTED {
            if tag.arity_ok(1) {
                assert_eq!(build_graph(&single, tag).unwrap().edge_count(), 0);
            }
        }
    }

    #[test]
    fn digraph_examples() {
        let d = build_digraph(&rep(&[(0, 2, 4), (3, 5, 7)])).unwrap();
        assert!(d.has_arc(0, 1) && !d.has_arc(1, 0));
        let d = build_digraph(&rep(&[(3, 5, 7), (0, 2, 4)])).unwrap();
        assert!(d.has_arc(1, 0));
        assert_eq!(
            build_digraph(&rep(&[(0, 2, 4), (0, 2, 4)])),
            Err(SemanticsError::TiedPoints)
        );
    }

    #[test]
    fn strict_and_set_based_agree_on_distinct_points() {
        let r = rep(&[(0, 2, 4), (3, 5, 7), (1, 6, 9), (-3, -1, 8)]);
        assert!(r.has_distinct_points());
        for u in 0..r.len() {
            for v in (u + 1)..r.len() {
                assert_eq!(
                    adjacent(&r.intervals[u], &r.intervals[v], SemanticsTag::Veto).unwrap(),
                    adjacent_strict(&r.intervals[u], &r.intervals[v]),
                );
            }
        }
    }

    #[test]
    fn partition_examples() {
        let report = partition_check(&rep(&[(0, 2, 4), (3, 5, 7)])).unwrap();
        assert!(report.holds);
        assert_eq!(
            (report.interval_edges, report.veto_edges, report.pc_edges),
            (1, 1, 0)
        );

        let empty = Representation::<Q>::new(1, vec![], FlavorSet::EMPTY);
        let report = partition_check(&empty).unwrap();
        assert!(report.holds);
        assert_eq!(report.interval_edges, 0);

        // Midpoint-unit representations have no single-approval edges.
        let mu = rep(&[(0, 2, 4), (3, 5, 7), (6, 8, 10)]);
        assert!(crate::model::flavor_flags(&mu).midpoint);
        let report = partition_check(&mu).unwrap();
        assert!(report.holds);
        assert_eq!(report.sa_edges, 0);
    }

    #[test]
    fn split_examples() {
        let r = rep(&[(0, 2, 4)]);
        let split = split_to_k_veto(&r, 2).unwrap();
        assert_eq!(split.mark_count, 2);
        assert_eq!(split.intervals[0].marks[0], Q::ratio(3, 2));
        assert_eq!(split.intervals[0].marks[1], Q::ratio(5, 2));
        assert!(split.has_distinct_points());

        let k11 = rep(&[(0, 2, 4), (3, 5, 7)]);
        let split = split_to_k_veto(&k11, 2).unwrap();
        let g = build_graph(&split, SemanticsTag::KVeto).unwrap();
        assert!(g.has_edge(0, 1));

        // k_target equal to the current arity leaves the graph alone.
        let again = split_to_k_veto(&split, 2).unwrap();
        assert_eq!(
            build_graph(&again, SemanticsTag::KVeto).unwrap(),
            g
        );
    }

    #[test]
    fn reduce_examples() {
        let r = rep(&[(0, 2, 4)]);
        let k4 = split_to_k_veto(&r, 4).unwrap();
        let reduced = reduce_to_double(&k4).unwrap();
        assert_eq!(reduced.mark_count, 2);

        let k3 = Representation::<Q>::new(
            3,
            vec![MarkedInterval::new(
                Q::from_int(0),
                vec![Q::from_int(1), Q::from_int(2), Q::from_int(3)],
                Q::from_int(4),
            )],
            FlavorSet::EMPTY,
        );
        let reduced = reduce_to_double(&k3).unwrap();
        assert_eq!(
            reduced.intervals[0].marks,
            vec![Q::from_int(1), Q::from_int(3)]
        );
    }

    #[test]
    fn interval_to_single_approval_examples() {
        let plain = vec![
            (Q::from_int(0), Q::from_int(2)),
            (Q::from_int(1), Q::from_int(3)),
        ];
        let sa = interval_to_single_approval(&plain).unwrap();
        let g = build_graph(&sa, SemanticsTag::SingleApproval).unwrap();
        assert!(g.has_edge(0, 1));

        let apart = vec![
            (Q::from_int(0), Q::from_int(1)),
            (Q::from_int(2), Q::from_int(3)),
        ];
        let sa = interval_to_single_approval(&apart).unwrap();
        let g = build_graph(&sa, SemanticsTag::SingleApproval).unwrap();
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn containment_implies_nonadjacent_and_deletion_commutes() {
        let r = rep(&[(0, 4, 9), (1, 2, 3), (2, 5, 8), (-2, 0, 10)]);
        let p = perturb_distinct(&r);
        for u in 0..p.len() {
            for v in 0..p.len() {
                if u != v && p.intervals[u].properly_contains(&p.intervals[v]) {
                    assert!(!adjacent(&p.intervals[u], &p.intervals[v], SemanticsTag::Veto)
                        .unwrap());
                }
            }
        }
        let g = build_graph(&p, SemanticsTag::Veto).unwrap();
        for v in 0..p.len() {
            assert_eq!(
                build_graph(&p.without(v), SemanticsTag::Veto).unwrap(),
                g.delete_vertex(v)
            );
        }
    }

    #[test]
    fn builders_invariant_under_translation_and_scaling() {
        let r = rep(&[(0, 2, 4), (3, 5, 7), (1, 6, 9)]);
        let moved = r.translate(&Q::ratio(-13, 7)).scale(&Q::ratio(3, 5));
        for tag in SemanticsTag::UNDIRECTED {
            if tag.arity_ok(1) {
                assert_eq!(
                    build_graph(&r, tag).unwrap(),
                    build_graph(&moved, tag).unwrap()
                );
            }
        }
    }

    #[test]
    fn flavor_set_strings() {
        let f = FlavorSet::of(&[Flavor::Unit, Flavor::Midpoint]);
        assert_eq!(f.to_string(), "unit,midpoint");
        assert_eq!("unit,midpoint".parse::<FlavorSet>().unwrap(), f);
        assert_eq!("none".parse::<FlavorSet>().unwrap(), FlavorSet::EMPTY);
    }
}
