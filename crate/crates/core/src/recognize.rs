//! Decision procedures: exhaustive ordering-word search with pruning for
//! class membership, and the orientation necessary condition that rules
//! graphs out without any search over coordinates.
//!
//! The search walks prefixes of the marked-point ordering word (one symbol
//! per step, per-interval tracks in order). A vertex pair is pruned the
//! moment the prefix determines its adjacency and that contradicts the
//! input graph; determination uses three-valued comparisons, where a placed
//! symbol precedes every unplaced one. Flavor handling:
//!
//! * `proper` (and `unit`, which implies it) forces right endpoints to
//!   appear in left-endpoint order — enforced combinatorially.
//! * `midpoint` together with `proper` or `unit` also forces the marks into
//!   that order (a midpoint-proper representation keeps all three sequences
//!   aligned), enforced combinatorially as well.
//! * `unit` / `midpoint` geometry is decided exactly by the margin LP, at
//!   every leaf and at prefix checkpoints every `lp_stride` levels.

use std::time::{Duration, Instant};

use crate::graph::{
    automorphism_orbits, canonical_digraph_code, Digraph, SimpleGraph, CANONICAL_CAP,
};
use crate::linear::{prefix_feasible, word_coordinates};
use crate::model::{
    flavor_flags, validate_representation, FlavorSet, MarkedInterval, OrderingWord, PointKind,
    Representation, Symbol,
};
use crate::scalar::Coord;
use crate::semantics::{build_graph, SemanticsTag};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum RecognizeError {
    #[error("tag is directed; recognition works on undirected tags")]
    DirectedTag,
    #[error("midpoint flavor requires single-mark semantics")]
    MidpointArity,
    #[error("graph has {found} edges, above the orientation cap {cap}")]
    TooManyEdges { found: usize, cap: usize },
    #[error("internal error: {0}")]
    Internal(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Yes,
    No,
    Timeout,
}

#[derive(Clone, Debug)]
pub struct SearchStats {
    pub nodes: u64,
    pub elapsed: Duration,
}

#[derive(Clone, Debug)]
pub struct RecognitionResult<T> {
    pub verdict: Verdict,
    pub witness: Option<Representation<T>>,
    pub word: Option<OrderingWord>,
    pub stats: SearchStats,
}

#[derive(Clone, Debug)]
pub struct RecognizeConfig {
    pub time_limit: Option<Duration>,
    pub node_limit: Option<u64>,
    /// Prefix feasibility checks run every this many levels (unit/midpoint only).
    pub lp_stride: usize,
    /// Node budget for the automorphism-orbit symmetry reduction.
    pub orbit_budget: u64,
}

impl Default for RecognizeConfig {
    fn default() -> Self {
        RecognizeConfig {
            time_limit: Some(Duration::from_secs(600)),
            node_limit: None,
            lp_stride: 6,
            orbit_budget: 200_000,
        }
    }
}

/// Number of marks per interval used when searching a tag.
/// k-veto membership coincides with double veto, so two marks suffice.
pub fn search_arity(tag: SemanticsTag) -> usize {
    match tag {
        SemanticsTag::KVeto => 2,
        _ => 1,
    }
}

enum Flow {
    Found,
    Exhausted,
    Aborted,
}

struct Search<T> {
    adj: Vec<Vec<bool>>,
    tag: SemanticsTag,
    flavor: FlavorSet,
    n: usize,
    k: usize,
    total: usize,
    /// Placement index per symbol variable; usize::MAX = unplaced.
    pos: Vec<usize>,
    /// Next stage per vertex track (0 = L, 1..=k marks, k+1 = R).
    stage: Vec<usize>,
    placed: Vec<Symbol>,
    l_order: Vec<usize>,
    marks_done: usize,
    rights_done: usize,
    align_rights: bool,
    align_marks: bool,
    muvi_window: bool,
    use_lp: bool,
    lp_stride: usize,
    started: Instant,
    time_limit: Option<Duration>,
    node_limit: Option<u64>,
    nodes: u64,
    witness_coords: Option<Vec<T>>,
}

const UNPLACED: usize = usize::MAX;

impl<T: Coord> Search<T> {
    fn var(&self, s: Symbol) -> usize {
        let stage = match s.kind {
            PointKind::Left => 0,
            PointKind::Mark(j) => 1 + j,
            PointKind::Right => 1 + self.k,
        };
        s.vertex * (self.k + 2) + stage
    }

    fn sym(&self, vertex: usize, stage: usize) -> Symbol {
        let kind = match stage {
            0 => PointKind::Left,
            s if s == self.k + 1 => PointKind::Right,
            s => PointKind::Mark(s - 1),
        };
        Symbol { vertex, kind }
    }

    /// Three-valued `x < y`: placed symbols precede unplaced ones.
    fn lt(&self, x: Symbol, y: Symbol) -> Option<bool> {
        let (px, py) = (self.pos[self.var(x)], self.pos[self.var(y)]);
        match (px != UNPLACED, py != UNPLACED) {
            (true, true) => Some(px < py),
            (true, false) => Some(true),
            (false, true) => Some(false),
            (false, false) => None,
        }
    }

    /// Three-valued strict membership of `b`'s interval around a mark of `a`.
    fn mark_inside(&self, mark: Symbol, host: usize) -> Option<bool> {
        and3(
            self.lt(self.sym(host, 0), mark),
            self.lt(mark, self.sym(host, self.k + 1)),
        )
    }

    /// Three-valued adjacency of the pair under the search tag.
    fn pair_value(&self, a: usize, b: usize) -> Option<bool> {
        if self.muvi_window {
            // Unit length with centered marks: for l_a < l_b the pair is
            // adjacent iff l_b - l_a lies in (1/2, 1), i.e. the word reads
            // M_a .. L_b .. R_a. Placed symbols precede unplaced ones, so
            // this resolves as soon as the later left endpoint is placed.
            return match self.lt(self.sym(a, 0), self.sym(b, 0)) {
                Some(true) => and3(
                    self.lt(self.sym(a, 1), self.sym(b, 0)),
                    self.lt(self.sym(b, 0), self.sym(a, 2)),
                ),
                Some(false) => and3(
                    self.lt(self.sym(b, 1), self.sym(a, 0)),
                    self.lt(self.sym(a, 0), self.sym(b, 2)),
                ),
                None => None,
            };
        }
        let overlap = and3(
            self.lt(self.sym(b, 0), self.sym(a, self.k + 1)),
            self.lt(self.sym(a, 0), self.sym(b, self.k + 1)),
        );
        match self.tag {
            SemanticsTag::Interval => overlap,
            SemanticsTag::Veto | SemanticsTag::KVeto => {
                let mut acc = overlap;
                for j in 0..self.k {
                    acc = and3(acc, not3(self.mark_inside(self.sym(a, 1 + j), b)));
                    acc = and3(acc, not3(self.mark_inside(self.sym(b, 1 + j), a)));
                }
                acc
            }
            SemanticsTag::PointCore => or3(
                self.mark_inside(self.sym(a, 1), b),
                self.mark_inside(self.sym(b, 1), a),
            ),
            SemanticsTag::SingleApproval => xor3(
                self.mark_inside(self.sym(a, 1), b),
                self.mark_inside(self.sym(b, 1), a),
            ),
            SemanticsTag::DoubleApproval => and3(
                self.mark_inside(self.sym(a, 1), b),
                self.mark_inside(self.sym(b, 1), a),
            ),
            SemanticsTag::VetoDirected => unreachable!(),
        }
    }

    /// Every pair involving `v` must still be compatible with the graph.
    fn vertex_pairs_ok(&self, v: usize) -> bool {
        (0..self.n).all(|u| {
            u == v
                || match self.pair_value(v, u) {
                    Some(val) => val == self.adj[v][u],
                    None => true,
                }
        })
    }

    fn out_of_budget(&self) -> bool {
        if let Some(limit) = self.node_limit {
            if self.nodes >= limit {
                return true;
            }
        }
        if let Some(limit) = self.time_limit {
            if self.nodes % 256 == 0 && self.started.elapsed() >= limit {
                return true;
            }
        }
        false
    }

    fn candidates(&self) -> Vec<usize> {
        // One candidate symbol per vertex: the next stage of its track,
        // filtered by the stream-alignment constraints.
        (0..self.n)
            .filter(|&v| {
                let s = self.stage[v];
                if s == self.k + 2 {
                    return false;
                }
                if s == self.k + 1 && self.align_rights {
                    return self.l_order.get(self.rights_done) == Some(&v);
                }
                if (1..=self.k).contains(&s) && self.align_marks {
                    return self.l_order.get(self.marks_done) == Some(&v);
                }
                true
            })
            .collect()
    }

    fn place(&mut self, v: usize) -> Symbol {
        let s = self.sym(v, self.stage[v]);
        let var = self.var(s);
        self.pos[var] = self.placed.len();
        self.placed.push(s);
        match self.stage[v] {
            0 => self.l_order.push(v),
            st if st == self.k + 1 => self.rights_done += 1,
            _ => self.marks_done += 1,
        }
        self.stage[v] += 1;
        s
    }

    fn unplace(&mut self, v: usize) {
        self.stage[v] -= 1;
        let s = self.sym(v, self.stage[v]);
        let var = self.var(s);
        self.pos[var] = UNPLACED;
        self.placed.pop();
        match self.stage[v] {
            0 => {
                self.l_order.pop();
            }
            st if st == self.k + 1 => self.rights_done -= 1,
            _ => self.marks_done -= 1,
        }
    }

    fn current_word(&self) -> OrderingWord {
        OrderingWord {
            symbols: self.placed.clone(),
            n: self.n,
            mark_count: self.k,
        }
    }

    fn leaf(&mut self) -> Flow {
        let word = self.current_word();
        match word_coordinates::<T>(&word, self.flavor) {
            Some(coords) => {
                self.witness_coords = Some(coords);
                Flow::Found
            }
            None => Flow::Exhausted,
        }
    }

    fn dfs(&mut self, depth: usize, first_candidates: Option<&[usize]>) -> Flow {
        if depth == self.total {
            return self.leaf();
        }
        let cands = match first_candidates {
            Some(f) => f.to_vec(),
            None => self.candidates(),
        };
        for v in cands {
            self.nodes += 1;
            if self.out_of_budget() {
                return Flow::Aborted;
            }
            self.place(v);
            let ok = self.vertex_pairs_ok(v)
                && (!self.use_lp
                    || depth % self.lp_stride != self.lp_stride - 1
                    || prefix_feasible::<T>(&self.placed, self.n, self.k, self.flavor));
            if ok {
                match self.dfs(depth + 1, None) {
                    Flow::Exhausted => {}
                    other => return other,
                }
            }
            self.unplace(v);
        }
        Flow::Exhausted
    }
}

fn and3(a: Option<bool>, b: Option<bool>) -> Option<bool> {
    match (a, b) {
        (Some(false), _) | (_, Some(false)) => Some(false),
        (Some(true), Some(true)) => Some(true),
        _ => None,
    }
}

fn or3(a: Option<bool>, b: Option<bool>) -> Option<bool> {
    match (a, b) {
        (Some(true), _) | (_, Some(true)) => Some(true),
        (Some(false), Some(false)) => Some(false),
        _ => None,
    }
}

fn not3(a: Option<bool>) -> Option<bool> {
    a.map(|v| !v)
}

fn xor3(a: Option<bool>, b: Option<bool>) -> Option<bool> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x != y),
        _ => None,
    }
}

/// Decides whether `g` has a representation under `tag` with the requested
/// flavor set. Yes-verdicts carry a re-verified witness; no-verdicts mean
/// the reduced search space was exhausted; running out of budget yields
/// `Timeout`, never a wrong answer.
pub fn recognize<T: Coord>(
    g: &SimpleGraph,
    tag: SemanticsTag,
    flavor: FlavorSet,
    config: &RecognizeConfig,
) -> Result<RecognitionResult<T>, RecognizeError> {
    if tag == SemanticsTag::VetoDirected {
        return Err(RecognizeError::DirectedTag);
    }
    let k = search_arity(tag);
    if flavor.midpoint && k != 1 {
        return Err(RecognizeError::MidpointArity);
    }
    let started = Instant::now();
    let n = g.n;
    if n == 0 {
        return Ok(RecognitionResult {
            verdict: Verdict::Yes,
            witness: Some(Representation::new(k, Vec::new(), flavor)),
            word: Some(OrderingWord {
                symbols: Vec::new(),
                n: 0,
                mark_count: k,
            }),
            stats: SearchStats {
                nodes: 0,
                elapsed: started.elapsed(),
            },
        });
    }

    let align_rights = flavor.proper || flavor.unit;
    let align_marks = flavor.midpoint && align_rights && k == 1;
    let mut search = Search::<T> {
        adj: g.adjacency(),
        tag,
        flavor,
        n,
        k,
        total: (k + 2) * n,
        pos: vec![UNPLACED; (k + 2) * n],
        stage: vec![0; n],
        placed: Vec::with_capacity((k + 2) * n),
        l_order: Vec::with_capacity(n),
        marks_done: 0,
        rights_done: 0,
        align_rights,
        align_marks,
        muvi_window: tag == SemanticsTag::Veto && flavor.unit && flavor.midpoint,
        use_lp: flavor.unit || flavor.midpoint,
        lp_stride: config.lp_stride.max(1),
        started,
        time_limit: config.time_limit,
        node_limit: config.node_limit,
        nodes: 0,
        witness_coords: None,
    };

    // Symmetry reduction: the globally leftmost point is some vertex's left
    // endpoint, and relabeling along an automorphism maps witnesses to
    // witnesses, so the first vertex ranges over orbit minima only.
    let orbits = automorphism_orbits(g, config.orbit_budget);
    let mut first: Vec<usize> = (0..n).filter(|&v| orbits[v] == v).collect();
    first.sort_unstable();

    let flow = search.dfs(0, Some(&first));
    let stats = SearchStats {
        nodes: search.nodes,
        elapsed: started.elapsed(),
    };
    match flow {
        Flow::Aborted => Ok(RecognitionResult {
            verdict: Verdict::Timeout,
            witness: None,
            word: None,
            stats,
        }),
        Flow::Exhausted => Ok(RecognitionResult {
            verdict: Verdict::No,
            witness: None,
            word: None,
            stats,
        }),
        Flow::Found => {
            let word = search.current_word();
            let coords = search
                .witness_coords
                .take()
                .ok_or_else(|| RecognizeError::Internal("missing witness coordinates".into()))?;
            let mut intervals =
                vec![MarkedInterval::new(T::zero(), vec![T::zero(); k], T::one()); n];
            for (s, c) in word.symbols.iter().zip(coords) {
                let iv = &mut intervals[s.vertex];
                match s.kind {
                    PointKind::Left => iv.left = c,
                    PointKind::Mark(j) => iv.marks[j] = c,
                    PointKind::Right => iv.right = c,
                }
            }
            let mut witness = Representation::new(k, intervals, flavor);
            witness.flavor = flavor_flags(&witness);
            verify_witness(g, tag, flavor, &witness)?;
            Ok(RecognitionResult {
                verdict: Verdict::Yes,
                witness: Some(witness),
                word: Some(word),
                stats,
            })
        }
    }
}

fn verify_witness<T: Coord>(
    g: &SimpleGraph,
    tag: SemanticsTag,
    requested: FlavorSet,
    witness: &Representation<T>,
) -> Result<(), RecognizeError> {
    if !validate_representation(witness).is_empty()
        || !witness.has_distinct_points()
        || !requested.is_subset_of(flavor_flags(witness))
    {
        return Err(RecognizeError::Internal(
            "witness fails validation or requested flavors".into(),
        ));
    }
    match build_graph(witness, tag) {
        Ok(h) if &h == g => Ok(()),
        _ => Err(RecognizeError::Internal(
            "witness graph differs from input".into(),
        )),
    }
}

// ---------------------------------------------------------------------------
// Orientation feasibility.
// ---------------------------------------------------------------------------

/// Result of enumerating every orientation of a graph.
#[derive(Clone, Debug)]
pub struct OrientationReport {
    /// Orientations with no directed path on 3+ vertices joining adjacent
    /// endpoints (equivalently: acyclic with no arc shortcut).
    pub feasible: u64,
    /// One representative per digraph-isomorphism class of the survivors;
    /// empty when `classified` is false.
    pub classes: Vec<Digraph>,
    /// Whether class grouping ran (needs few enough vertices).
    pub classified: bool,
    pub orientations_checked: u64,
}

pub const DEFAULT_EDGE_CAP: usize = 24;

/// Enumerates all `2^m` orientations and counts the survivors of the
/// necessary condition for membership. Zero survivors certifies that the
/// graph has no veto representation at all.
pub fn orientation_feasible(
    g: &SimpleGraph,
    edge_cap: usize,
) -> Result<OrientationReport, RecognizeError> {
    let m = g.edge_count();
    if m > edge_cap {
        return Err(RecognizeError::TooManyEdges {
            found: m,
            cap: edge_cap,
        });
    }
    assert!(g.n <= 64, "bitset reachability limited to 64 vertices");
    let edges: Vec<(usize, usize)> = g.edges.iter().copied().collect();
    let n = g.n;
    let classify = n <= CANONICAL_CAP;

    let mut feasible = 0u64;
    let mut class_codes: std::collections::BTreeMap<Vec<u8>, Digraph> = Default::default();
    let mut out = vec![0u64; n];
    let mut indeg = vec![0usize; n];

    for mask in 0u64..(1u64 << m) {
        out.iter_mut().for_each(|x| *x = 0);
        indeg.iter_mut().for_each(|x| *x = 0);
        for (i, &(u, v)) in edges.iter().enumerate() {
            let (s, t) = if mask >> i & 1 == 0 { (u, v) } else { (v, u) };
            out[s] |= 1 << t;
            indeg[t] += 1;
        }
        if let Some(order) = topo(&out, &indeg) {
            // Reachability in reverse topological order.
            let mut reach = vec![0u64; n];
            for &v in order.iter().rev() {
                let mut bits = out[v];
                let mut acc = out[v];
                while bits != 0 {
                    let w = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    acc |= reach[w];
                }
                reach[v] = acc;
            }
            // Arc u->v is violated by any second path through another
            // out-neighbor of u.
            let mut ok = true;
            'arcs: for u in 0..n {
                let mut arcs = out[u];
                while arcs != 0 {
                    let v = arcs.trailing_zeros() as usize;
                    arcs &= arcs - 1;
                    let mut others = out[u] & !(1u64 << v);
                    while others != 0 {
                        let w = others.trailing_zeros() as usize;
                        others &= others - 1;
                        if reach[w] >> v & 1 == 1 {
                            ok = false;
                            break 'arcs;
                        }
                    }
                }
            }
            if ok {
                feasible += 1;
                if classify {
                    let mut d = Digraph::empty(n);
                    for (i, &(u, v)) in edges.iter().enumerate() {
                        let (s, t) = if mask >> i & 1 == 0 { (u, v) } else { (v, u) };
                        d.add_arc(s, t);
                    }
                    let code = canonical_digraph_code(&d, CANONICAL_CAP)
                        .expect("within canonical cap");
                    class_codes.entry(code).or_insert(d);
                }
            }
        }
    }
    Ok(OrientationReport {
        feasible,
        classes: class_codes.into_values().collect(),
        classified: classify,
        orientations_checked: 1u64 << m,
    })
}

/// Kahn topological order over bitset adjacency, or None on a cycle.
fn topo(out: &[u64], indeg: &[usize]) -> Option<Vec<usize>> {
    let n = out.len();
    let mut indeg = indeg.to_vec();
    let mut queue: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(v) = queue.pop() {
        order.push(v);
        let mut bits = out[v];
        while bits != 0 {
            let w = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            indeg[w] -= 1;
            if indeg[w] == 0 {
                queue.push(w);
            }
        }
    }
    (order.len() == n).then_some(order)
}
