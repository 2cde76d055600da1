//! Marked intervals, representations, validation, tie removal, and the
//! marked-point ordering word.

use std::fmt;

use crate::scalar::Coord;

/// A representation-level property: all lengths equal, no proper containment,
/// or every mark at its interval's midpoint.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Flavor {
    Unit,
    Proper,
    Midpoint,
}

impl Flavor {
    pub const ALL: [Flavor; 3] = [Flavor::Unit, Flavor::Proper, Flavor::Midpoint];

    pub fn name(self) -> &'static str {
        match self {
            Flavor::Unit => "unit",
            Flavor::Proper => "proper",
            Flavor::Midpoint => "midpoint",
        }
    }
}

/// A subset of the three flavors.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct FlavorSet {
    pub unit: bool,
    pub proper: bool,
    pub midpoint: bool,
}

impl FlavorSet {
    pub const EMPTY: FlavorSet = FlavorSet {
        unit: false,
        proper: false,
        midpoint: false,
    };

    pub fn of(flavors: &[Flavor]) -> Self {
        let mut set = Self::EMPTY;
        for &f in flavors {
            set.insert(f);
        }
        set
    }

    pub fn insert(&mut self, f: Flavor) {
        match f {
            Flavor::Unit => self.unit = true,
            Flavor::Proper => self.proper = true,
            Flavor::Midpoint => self.midpoint = true,
        }
    }

    pub fn contains(self, f: Flavor) -> bool {
        match f {
            Flavor::Unit => self.unit,
            Flavor::Proper => self.proper,
            Flavor::Midpoint => self.midpoint,
        }
    }

    pub fn is_subset_of(self, other: FlavorSet) -> bool {
        (!self.unit || other.unit)
            && (!self.proper || other.proper)
            && (!self.midpoint || other.midpoint)
    }

    pub fn is_empty(self) -> bool {
        self == Self::EMPTY
    }

    pub fn iter(self) -> impl Iterator<Item = Flavor> {
        Flavor::ALL.into_iter().filter(move |&f| self.contains(f))
    }
}

impl fmt::Display for FlavorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "none");
        }
        let names: Vec<&str> = self.iter().map(Flavor::name).collect();
        write!(f, "{}", names.join(","))
    }
}

impl std::str::FromStr for FlavorSet {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() || s == "none" {
            return Ok(Self::EMPTY);
        }
        let mut set = Self::EMPTY;
        for part in s.split(',') {
            match part.trim() {
                "unit" => set.unit = true,
                "proper" => set.proper = true,
                "midpoint" => set.midpoint = true,
                other => return Err(format!("unknown flavor `{other}`")),
            }
        }
        Ok(set)
    }
}

/// A closed interval with one or more interior marks, all coordinates exact.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MarkedInterval<T> {
    pub left: T,
    pub marks: Vec<T>,
    pub right: T,
}

impl<T: Coord> MarkedInterval<T> {
    pub fn new(left: T, marks: Vec<T>, right: T) -> Self {
        MarkedInterval { left, marks, right }
    }

    /// Convenience constructor for a single-mark interval from integers.
    pub fn triple(left: i64, mark: i64, right: i64) -> Self {
        MarkedInterval {
            left: T::from_int(left),
            marks: vec![T::from_int(mark)],
            right: T::from_int(right),
        }
    }

    pub fn mark_count(&self) -> usize {
        self.marks.len()
    }

    pub fn length(&self) -> T {
        self.right.clone() - self.left.clone()
    }

    /// Strict interior ordering `left < marks[0] < … < right`.
    pub fn is_well_formed(&self) -> bool {
        let mut prev = &self.left;
        for m in &self.marks {
            if prev >= m {
                return false;
            }
            prev = m;
        }
        prev < &self.right
    }

    /// Closed-interval membership.
    pub fn contains(&self, x: &T) -> bool {
        &self.left <= x && x <= &self.right
    }

    /// True when `self` is a strict superset of `other` as a point set.
    pub fn properly_contains(&self, other: &Self) -> bool {
        self.left <= other.left
            && other.right <= self.right
            && (self.left < other.left || other.right < self.right)
    }

    pub fn translate(&self, by: &T) -> Self {
        MarkedInterval {
            left: self.left.clone() + by.clone(),
            marks: self.marks.iter().map(|m| m.clone() + by.clone()).collect(),
            right: self.right.clone() + by.clone(),
        }
    }

    pub fn scale(&self, by: &T) -> Self {
        MarkedInterval {
            left: self.left.clone() * by.clone(),
            marks: self.marks.iter().map(|m| m.clone() * by.clone()).collect(),
            right: self.right.clone() * by.clone(),
        }
    }

    /// All marked points of this interval: left endpoint, marks, right endpoint.
    pub fn points(&self) -> impl Iterator<Item = &T> {
        std::iter::once(&self.left)
            .chain(self.marks.iter())
            .chain(std::iter::once(&self.right))
    }
}

/// An ordered list of marked intervals together with the declared flavors.
/// The list index is the vertex id.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation<T> {
    pub intervals: Vec<MarkedInterval<T>>,
    pub mark_count: usize,
    pub flavor: FlavorSet,
}

impl<T: Coord> Representation<T> {
    pub fn new(mark_count: usize, intervals: Vec<MarkedInterval<T>>, flavor: FlavorSet) -> Self {
        Representation {
            intervals,
            mark_count,
            flavor,
        }
    }

    /// Single-mark representation from integer triples, flavor empty.
    pub fn from_triples(triples: &[(i64, i64, i64)]) -> Self {
        Representation {
            intervals: triples
                .iter()
                .map(|&(l, m, r)| MarkedInterval::triple(l, m, r))
                .collect(),
            mark_count: 1,
            flavor: FlavorSet::EMPTY,
        }
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    /// Total number of marked points, `(mark_count + 2) * n`.
    pub fn point_count(&self) -> usize {
        (self.mark_count + 2) * self.intervals.len()
    }

    /// All marked points as `(coordinate, vertex, kind)`.
    pub fn points(&self) -> Vec<(T, usize, PointKind)> {
        let mut out = Vec::with_capacity(self.point_count());
        for (v, iv) in self.intervals.iter().enumerate() {
            out.push((iv.left.clone(), v, PointKind::Left));
            for (j, m) in iv.marks.iter().enumerate() {
                out.push((m.clone(), v, PointKind::Mark(j)));
            }
            out.push((iv.right.clone(), v, PointKind::Right));
        }
        out
    }

    /// True when all marked points are pairwise distinct.
    pub fn has_distinct_points(&self) -> bool {
        let mut coords: Vec<T> = self.points().into_iter().map(|(c, _, _)| c).collect();
        coords.sort();
        coords.windows(2).all(|w| w[0] != w[1])
    }

    /// The representation with interval `v` removed (for hereditary checks).
    pub fn without(&self, v: usize) -> Self {
        let mut intervals = self.intervals.clone();
        intervals.remove(v);
        Representation {
            intervals,
            mark_count: self.mark_count,
            flavor: self.flavor,
        }
    }

    pub fn translate(&self, by: &T) -> Self {
        Representation {
            intervals: self.intervals.iter().map(|iv| iv.translate(by)).collect(),
            mark_count: self.mark_count,
            flavor: self.flavor,
        }
    }

    pub fn scale(&self, by: &T) -> Self {
        Representation {
            intervals: self.intervals.iter().map(|iv| iv.scale(by)).collect(),
            mark_count: self.mark_count,
            flavor: self.flavor,
        }
    }
}

/// The kind of a marked point within its interval. The derived order
/// (left < mark < right) is the order tied points must take after
/// perturbation so that every set-based adjacency is preserved.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PointKind {
    Left,
    Mark(usize),
    Right,
}

impl PointKind {
    /// 0 for left endpoints, 1 for marks, 2 for right endpoints.
    pub fn rank(self) -> u8 {
        match self {
            PointKind::Left => 0,
            PointKind::Mark(_) => 1,
            PointKind::Right => 2,
        }
    }
}

/// One symbol of an ordering word: a specific marked point of a vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol {
    pub vertex: usize,
    pub kind: PointKind,
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            PointKind::Left => write!(f, "L{}", self.vertex),
            PointKind::Mark(0) => write!(f, "M{}", self.vertex),
            PointKind::Mark(j) => write!(f, "M{}.{}", self.vertex, j),
            PointKind::Right => write!(f, "R{}", self.vertex),
        }
    }
}

/// A total order of all `(mark_count + 2) * n` marked-point symbols.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderingWord {
    pub symbols: Vec<Symbol>,
    pub n: usize,
    pub mark_count: usize,
}

impl OrderingWord {
    /// Checks that every symbol occurs exactly once and per-interval
    /// precedence (L before marks in slot order before R) holds.
    pub fn is_valid(&self) -> bool {
        if self.symbols.len() != (self.mark_count + 2) * self.n {
            return false;
        }
        let mut next: Vec<usize> = vec![0; self.n];
        for sym in &self.symbols {
            if sym.vertex >= self.n {
                return false;
            }
            let expected = next[sym.vertex];
            let stage = match sym.kind {
                PointKind::Left => 0,
                PointKind::Mark(j) => 1 + j,
                PointKind::Right => 1 + self.mark_count,
            };
            if stage != expected {
                return false;
            }
            next[sym.vertex] += 1;
        }
        next.iter().all(|&s| s == self.mark_count + 2)
    }
}

impl fmt::Display for OrderingWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.symbols.iter().map(|s| s.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// A single invariant breach found by [`validate_representation`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    MarkCountMismatch {
        vertex: usize,
        expected: usize,
        found: usize,
    },
    NonStrictOrder {
        vertex: usize,
    },
    NotUnit {
        vertex: usize,
    },
    NotMidpoint {
        vertex: usize,
    },
    NotProper {
        outer: usize,
        inner: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::MarkCountMismatch {
                vertex,
                expected,
                found,
            } => write!(
                f,
                "interval {vertex}: {found} marks, representation declares {expected}"
            ),
            Violation::NonStrictOrder { vertex } => {
                write!(f, "interval {vertex}: points not strictly increasing")
            }
            Violation::NotUnit { vertex } => {
                write!(f, "interval {vertex}: length differs from interval 0")
            }
            Violation::NotMidpoint { vertex } => {
                write!(f, "interval {vertex}: mark not at midpoint")
            }
            Violation::NotProper { outer, inner } => {
                write!(f, "interval {outer} properly contains interval {inner}")
            }
        }
    }
}

/// Errors for operations that require distinct marked points.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ModelError {
    #[error("two marked points share a coordinate")]
    TiedPoints,
}

/// Reports every invariant breach; an empty list means the representation
/// is valid (well-formed intervals, uniform mark count, declared flavors hold).
pub fn validate_representation<T: Coord>(rep: &Representation<T>) -> Vec<Violation> {
    let mut out = Vec::new();
    for (v, iv) in rep.intervals.iter().enumerate() {
        if iv.mark_count() != rep.mark_count {
            out.push(Violation::MarkCountMismatch {
                vertex: v,
                expected: rep.mark_count,
                found: iv.mark_count(),
            });
        }
        if !iv.is_well_formed() {
            out.push(Violation::NonStrictOrder { vertex: v });
        }
    }
    if rep.flavor.unit {
        if let Some(first) = rep.intervals.first() {
            let len = first.length();
            for (v, iv) in rep.intervals.iter().enumerate().skip(1) {
                if iv.length() != len {
                    out.push(Violation::NotUnit { vertex: v });
                }
            }
        }
    }
    if rep.flavor.midpoint {
        for (v, iv) in rep.intervals.iter().enumerate() {
            let centered = iv.mark_count() == 1
                && iv.marks[0].clone() - iv.left.clone() == iv.right.clone() - iv.marks[0].clone();
            if !centered {
                out.push(Violation::NotMidpoint { vertex: v });
            }
        }
    }
    if rep.flavor.proper {
        for a in 0..rep.intervals.len() {
            for b in 0..rep.intervals.len() {
                if a != b && rep.intervals[a].properly_contains(&rep.intervals[b]) {
                    out.push(Violation::NotProper { outer: a, inner: b });
                }
            }
        }
    }
    out
}

/// Computes the exact set of flavors the representation satisfies.
/// Unit-length intervals cannot properly contain one another, so `unit`
/// in the output always comes with `proper`.
pub fn flavor_flags<T: Coord>(rep: &Representation<T>) -> FlavorSet {
    let n = rep.intervals.len();
    let unit = match rep.intervals.first() {
        None => true,
        Some(first) => {
            let len = first.length();
            rep.intervals.iter().all(|iv| iv.length() == len)
        }
    };
    let mut proper = true;
    'outer: for a in 0..n {
        for b in 0..n {
            if a != b && rep.intervals[a].properly_contains(&rep.intervals[b]) {
                proper = false;
                break 'outer;
            }
        }
    }
    let midpoint = rep.intervals.iter().all(|iv| {
        iv.mark_count() == 1
            && iv.marks[0].clone() - iv.left.clone() == iv.right.clone() - iv.marks[0].clone()
    });
    FlavorSet {
        unit,
        proper,
        midpoint,
    }
}

/// Returns an equivalent representation with pairwise-distinct marked points.
///
/// The output preserves every declared flavor of a valid input and the graph
/// under every set-based adjacency predicate. A representation that already
/// has distinct points is returned unchanged.
///
/// Only three kinds of cross-interval ties affect a set-based predicate:
/// left-vs-mark, left-vs-right, and mark-vs-right. In each, the closed
/// reading keeps the comparison true, so a tie must break with the
/// lower-rank point (left < mark < right) first. Ties between points of the
/// same kind never influence any predicate.
///
/// The preferred strategy shifts whole intervals (preserving unit and
/// midpoint exactly): the tie constraints form a digraph over intervals
/// which is acyclic for every single-mark representation and for every
/// uniform-length one, and a topological order gives the shift amounts.
/// Multi-mark non-unit inputs can make that digraph cyclic; those fall back
/// to a per-point spread in the required order.
pub fn perturb_distinct<T: Coord>(rep: &Representation<T>) -> Representation<T> {
    let n = rep.intervals.len();
    let points = rep.points();
    let total = points.len();
    if total == 0 {
        return rep.clone();
    }

    let mut sorted: Vec<(T, usize, PointKind)> = points;
    sorted.sort_by(|a, b| a.0.cmp(&b.0).then(a.2.cmp(&b.2)).then(a.1.cmp(&b.1)));
    if sorted.windows(2).all(|w| w[0].0 != w[1].0) {
        return rep.clone();
    }

    // Smallest positive gap between distinct coordinates; total shift stays
    // strictly below it so no untied comparison can flip.
    let mut min_gap: Option<T> = None;
    for w in sorted.windows(2) {
        if w[0].0 != w[1].0 {
            let gap = w[1].0.clone() - w[0].0.clone();
            if min_gap.as_ref().map_or(true, |g| &gap < g) {
                min_gap = Some(gap);
            }
        }
    }
    let eps = min_gap.expect("an interval has at least two distinct points")
        / T::from_int(total as i64 + 1);

    // Group ties and collect rank constraints: lower-rank interval must end
    // up shifted strictly less than higher-rank interval.
    let mut tie_groups: Vec<Vec<(usize, PointKind)>> = Vec::new();
    let mut i = 0;
    while i < sorted.len() {
        let mut j = i + 1;
        while j < sorted.len() && sorted[j].0 == sorted[i].0 {
            j += 1;
        }
        if j - i > 1 {
            tie_groups.push(sorted[i..j].iter().map(|(_, v, k)| (*v, *k)).collect());
        }
        i = j;
    }

    let mut tied = vec![false; n];
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for group in &tie_groups {
        for &(v, _) in group {
            tied[v] = true;
        }
        for &(u, ku) in group {
            for &(v, kv) in group {
                if ku.rank() < kv.rank() {
                    edges.push((u, v));
                }
            }
        }
    }

    if let Some(order) = topo_order(n, &tied, &edges) {
        let mut shifted = rep.clone();
        for (rank, &v) in order.iter().enumerate() {
            let delta = eps.clone() * T::from_int(rank as i64 + 1);
            shifted.intervals[v] = shifted.intervals[v].translate(&delta);
        }
        debug_assert!(shifted.has_distinct_points());
        return shifted;
    }

    // Cycle: only reachable with k >= 2 marks and non-uniform lengths, where
    // neither unit nor midpoint can validly be declared. Spread tied points
    // individually in (rank, vertex, slot) order; the consistent vertex
    // order within equal ranks keeps proper inputs proper.
    let mut adjusted = rep.clone();
    let mut i = 0;
    while i < sorted.len() {
        let mut j = i + 1;
        while j < sorted.len() && sorted[j].0 == sorted[i].0 {
            j += 1;
        }
        if j - i > 1 {
            for (offset, (coord, v, kind)) in sorted[i..j].iter().enumerate() {
                let new = coord.clone() + eps.clone() * T::from_int(offset as i64);
                let iv = &mut adjusted.intervals[*v];
                match kind {
                    PointKind::Left => iv.left = new,
                    PointKind::Mark(s) => iv.marks[*s] = new,
                    PointKind::Right => iv.right = new,
                }
            }
        }
        i = j;
    }
    debug_assert!(adjusted.has_distinct_points());
    adjusted
}

/// Kahn's algorithm over the tied intervals, smallest index first.
/// Returns the removal order, or `None` on a cycle.
fn topo_order(n: usize, tied: &[bool], edges: &[(usize, usize)]) -> Option<Vec<usize>> {
    let mut indeg = vec![0usize; n];
    let mut succ: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut seen = std::collections::BTreeSet::new();
    for &(u, v) in edges {
        if seen.insert((u, v)) {
            indeg[v] += 1;
            succ[u].push(v);
        }
    }
    let members: Vec<usize> = (0..n).filter(|&v| tied[v]).collect();
    let mut order = Vec::with_capacity(members.len());
    let mut ready: std::collections::BTreeSet<usize> =
        members.iter().copied().filter(|&v| indeg[v] == 0).collect();
    while let Some(&v) = ready.iter().next() {
        ready.remove(&v);
        order.push(v);
        for &w in &succ[v] {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                ready.insert(w);
            }
        }
    }
    (order.len() == members.len()).then_some(order)
}

/// Sorts the marked points by coordinate into an ordering word.
/// Fails with `TiedPoints` if two points coincide; perturb first.
pub fn ordering_word<T: Coord>(rep: &Representation<T>) -> Result<OrderingWord, ModelError> {
    let mut points = rep.points();
    points.sort_by(|a, b| a.0.cmp(&b.0));
    if points.windows(2).any(|w| w[0].0 == w[1].0) {
        return Err(ModelError::TiedPoints);
    }
    Ok(OrderingWord {
        symbols: points
            .into_iter()
            .map(|(_, vertex, kind)| Symbol { vertex, kind })
            .collect(),
        n: rep.intervals.len(),
        mark_count: rep.mark_count,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Q;

    fn rep(triples: &[(i64, i64, i64)]) -> Representation<Q> {
        Representation::from_triples(triples)
    }

    #[test]
    fn validate_examples() {
        let r = rep(&[(0, 2, 4)]);
        assert!(validate_representation(&r).is_empty());

        let mut r = rep(&[(0, 1, 4)]);
        r.flavor.midpoint = true;
        assert_eq!(
            validate_representation(&r),
            vec![Violation::NotMidpoint { vertex: 0 }]
        );

        let mut r = rep(&[(0, 2, 4), (3, 5, 7)]);
        r.flavor.unit = true;
        assert!(validate_representation(&r).is_empty());

        let r = Representation::<Q>::new(
            1,
            vec![MarkedInterval::triple(0, 5, 4)],
            FlavorSet::EMPTY,
        );
        assert_eq!(
            validate_representation(&r),
            vec![Violation::NonStrictOrder { vertex: 0 }]
        );
    }

    #[test]
    fn flavor_flag_examples() {
        let flags = flavor_flags(&rep(&[(0, 2, 4), (3, 5, 7)]));
        assert!(flags.unit && flags.proper && flags.midpoint);

        let flags = flavor_flags(&rep(&[(0, 1, 4), (2, 3, 6)]));
        assert!(flags.unit && flags.proper && !flags.midpoint);

        // Contained shorter interval: lengths differ and containment breaks
        // proper, so only midpoint survives when both marks are centered.
        let flags = flavor_flags(&rep(&[(0, 2, 4), (1, 2, 3)]));
        assert!(!flags.unit && !flags.proper && flags.midpoint);

        // Same shape with an off-center mark satisfies nothing.
        let mut r = rep(&[(0, 2, 4)]);
        r.intervals.push(MarkedInterval::new(
            Q::from_int(1),
            vec![Q::ratio(5, 2)],
            Q::from_int(3),
        ));
        let flags = flavor_flags(&r);
        assert!(!flags.unit && !flags.proper && !flags.midpoint);
    }

    #[test]
    fn flavor_flags_invariant_under_translation_and_scaling() {
        let r = rep(&[(0, 2, 4), (3, 5, 7), (1, 3, 6)]);
        let flags = flavor_flags(&r);
        let moved = r.translate(&Q::ratio(-7, 3)).scale(&Q::ratio(5, 2));
        assert_eq!(flavor_flags(&moved), flags);
    }

    #[test]
    fn ordering_word_examples() {
        let w = ordering_word(&rep(&[(0, 2, 4), (3, 5, 7)])).unwrap();
        assert_eq!(w.to_string(), "L0 M0 L1 R0 M1 R1");
        assert!(w.is_valid());

        let w = ordering_word(&rep(&[(0, 1, 2)])).unwrap();
        assert_eq!(w.to_string(), "L0 M0 R0");

        assert_eq!(
            ordering_word(&rep(&[(0, 2, 4), (0, 2, 4)])),
            Err(ModelError::TiedPoints)
        );
    }

    #[test]
    fn perturb_identical_intervals() {
        let r = rep(&[(0, 2, 4), (0, 2, 4)]);
        let p = perturb_distinct(&r);
        assert!(p.has_distinct_points());
        // Identical intervals veto each other; still no edge after the shift.
        let g = crate::semantics::build_graph(&p, crate::semantics::SemanticsTag::Veto).unwrap();
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn perturb_shared_endpoint_keeps_edge() {
        let r = rep(&[(0, 1, 2), (2, 3, 4)]);
        let before =
            crate::semantics::build_graph(&r, crate::semantics::SemanticsTag::Veto).unwrap();
        assert!(before.has_edge(0, 1));
        let p = perturb_distinct(&r);
        assert!(p.has_distinct_points());
        let after =
            crate::semantics::build_graph(&p, crate::semantics::SemanticsTag::Veto).unwrap();
        assert!(after.has_edge(0, 1));
    }

    #[test]
    fn perturb_distinct_input_unchanged() {
        let r = rep(&[(0, 2, 4), (3, 5, 7)]);
        assert_eq!(perturb_distinct(&r), r);
    }

    #[test]
    fn perturb_multi_mark_cycle_falls_back() {
        // Three double-mark intervals whose ties force a cyclic shift order:
        // whole-interval translation cannot break them, the per-point path must.
        let intervals = vec![
            MarkedInterval::new(
                Q::from_int(1),
                vec![Q::from_int(2), Q::ratio(5, 2)],
                Q::from_int(5),
            ),
            MarkedInterval::new(
                Q::from_int(0),
                vec![Q::from_int(1), Q::from_int(3)],
                Q::from_int(4),
            ),
            MarkedInterval::new(
                Q::from_int(2),
                vec![Q::ratio(11, 5), Q::ratio(12, 5)],
                Q::from_int(3),
            ),
        ];
        let r = Representation::new(2, intervals, FlavorSet::EMPTY);
        let p = perturb_distinct(&r);
        assert!(p.has_distinct_points());
        for tag in [
            crate::semantics::SemanticsTag::Interval,
            crate::semantics::SemanticsTag::KVeto,
        ] {
            assert_eq!(
                crate::semantics::build_graph(&r, tag).unwrap(),
                crate::semantics::build_graph(&p, tag).unwrap()
            );
        }
    }
}
