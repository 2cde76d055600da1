//! Exact linear feasibility for flavored ordering words.
//!
//! A word plus flavor constraints becomes a system of strict difference
//! inequalities (consecutive symbols) and affine equalities (unit lengths,
//! centered marks). Strictness is handled by a single margin variable `t`
//! capped at 1: the system is realizable iff the maximum of `t` is positive.
//! Everything runs in exact rational arithmetic via a two-phase simplex
//! with Bland's rule.

use crate::model::{FlavorSet, OrderingWord, PointKind, Symbol};
use crate::scalar::Coord;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rel {
    Le,
    Eq,
    Ge,
}

/// A sparse row `sum coeff_i * x_i  rel  rhs`.
#[derive(Clone, Debug)]
pub struct Constraint<T> {
    pub coeffs: Vec<(usize, T)>,
    pub rel: Rel,
    pub rhs: T,
}

/// A feasibility system over symbol coordinates plus the margin variable,
/// which is always the last variable.
#[derive(Clone, Debug)]
pub struct LinearSystem<T> {
    pub num_vars: usize,
    pub constraints: Vec<Constraint<T>>,
    pub margin: usize,
}

impl<T: Coord> LinearSystem<T> {
    /// Maximizes the margin. Returns coordinates (margin excluded) when the
    /// optimum is strictly positive, `None` otherwise.
    pub fn solve(&self) -> Option<Vec<T>> {
        let mut c = vec![T::zero(); self.num_vars];
        c[self.margin] = T::one();
        let rows: Vec<(Vec<T>, Rel, T)> = self
            .constraints
            .iter()
            .map(|con| {
                let mut row = vec![T::zero(); self.num_vars];
                for (j, coeff) in &con.coeffs {
                    row[*j] = row[*j].clone() + coeff.clone();
                }
                (row, con.rel, con.rhs.clone())
            })
            .collect();
        match maximize(&c, &rows) {
            LpOutcome::Optimal { objective, mut solution } if objective > T::zero() => {
                solution.truncate(self.margin);
                Some(solution)
            }
            _ => None,
        }
    }

    pub fn feasible(&self) -> bool {
        self.solve().is_some()
    }
}

pub enum LpOutcome<T> {
    Infeasible,
    Unbounded,
    Optimal { objective: T, solution: Vec<T> },
}

/// Dense two-phase simplex: maximize `c . x` subject to the rows and `x >= 0`.
pub fn maximize<T: Coord>(c: &[T], rows: &[(Vec<T>, Rel, T)]) -> LpOutcome<T> {
    let n = c.len();
    let m = rows.len();

    // Normalize to nonnegative right-hand sides.
    let mut norm: Vec<(Vec<T>, Rel, T)> = Vec::with_capacity(m);
    for (coeffs, rel, rhs) in rows {
        if *rhs < T::zero() {
            let flipped = match rel {
                Rel::Le => Rel::Ge,
                Rel::Ge => Rel::Le,
                Rel::Eq => Rel::Eq,
            };
            norm.push((
                coeffs.iter().map(|x| -x.clone()).collect(),
                flipped,
                -rhs.clone(),
            ));
        } else {
            norm.push((coeffs.clone(), *rel, rhs.clone()));
        }
    }

    // Column layout: structural | slack/surplus | artificial.
    let mut n_slack = 0;
    for (_, rel, _) in &norm {
        if matches!(rel, Rel::Le | Rel::Ge) {
            n_slack += 1;
        }
    }
    let mut n_art = 0;
    for (_, rel, _) in &norm {
        if matches!(rel, Rel::Ge | Rel::Eq) {
            n_art += 1;
        }
    }
    let total = n + n_slack + n_art;
    let art_start = n + n_slack;

    let mut a: Vec<Vec<T>> = vec![vec![T::zero(); total]; m];
    let mut b: Vec<T> = Vec::with_capacity(m);
    let mut basis: Vec<usize> = Vec::with_capacity(m);
    let mut slack_idx = n;
    let mut art_idx = art_start;
    for (i, (coeffs, rel, rhs)) in norm.iter().enumerate() {
        for (j, v) in coeffs.iter().enumerate() {
            a[i][j] = v.clone();
        }
        b.push(rhs.clone());
        match rel {
            Rel::Le => {
                a[i][slack_idx] = T::one();
                basis.push(slack_idx);
                slack_idx += 1;
            }
            Rel::Ge => {
                a[i][slack_idx] = -T::one();
                slack_idx += 1;
                a[i][art_idx] = T::one();
                basis.push(art_idx);
                art_idx += 1;
            }
            Rel::Eq => {
                a[i][art_idx] = T::one();
                basis.push(art_idx);
                art_idx += 1;
            }
        }
    }

    // Phase 1: maximize -(sum of artificials).
    if n_art > 0 {
        let mut phase1 = vec![T::zero(); total];
        for j in art_start..total {
            phase1[j] = -T::one();
        }
        run_simplex(&mut a, &mut b, &mut basis, &phase1, total);
        let infeas: T = basis
            .iter()
            .zip(&b)
            .filter(|(v, _)| **v >= art_start)
            .fold(T::zero(), |acc, (_, val)| acc + val.clone());
        if infeas != T::zero() {
            return LpOutcome::Infeasible;
        }
        // Pivot remaining artificials out of the basis (rows are at zero).
        for i in 0..m {
            if basis[i] >= art_start {
                if let Some(j) = (0..art_start).find(|&j| a[i][j] != T::zero()) {
                    pivot(&mut a, &mut b, &mut basis, i, j);
                }
                // A fully zero row is redundant; the artificial stays basic
                // at zero and never moves because its column is excluded below.
            }
        }
    }

    // Phase 2 on the real objective; artificial columns may not enter.
    let mut obj = vec![T::zero(); total];
    obj[..n].clone_from_slice(c);
    if !run_simplex(&mut a, &mut b, &mut basis, &obj, art_start) {
        return LpOutcome::Unbounded;
    }

    let mut solution = vec![T::zero(); n];
    let mut objective = T::zero();
    for (i, &bv) in basis.iter().enumerate() {
        if bv < n {
            solution[bv] = b[i].clone();
        }
    }
    for (xj, cj) in solution.iter().zip(c) {
        objective = objective + xj.clone() * cj.clone();
    }
    LpOutcome::Optimal {
        objective,
        solution,
    }
}

/// Bland-rule simplex iterations; columns `>= col_limit` never enter.
/// Returns false when the objective is unbounded.
fn run_simplex<T: Coord>(
    a: &mut Vec<Vec<T>>,
    b: &mut Vec<T>,
    basis: &mut Vec<usize>,
    obj: &[T],
    col_limit: usize,
) -> bool {
    let m = a.len();
    loop {
        // Reduced costs: c_j - c_B . B^-1 A_j, recomputed directly.
        let mut entering = None;
        for j in 0..col_limit {
            if basis.contains(&j) {
                continue;
            }
            let mut reduced = obj[j].clone();
            for i in 0..m {
                reduced = reduced - obj[basis[i]].clone() * a[i][j].clone();
            }
            if reduced > T::zero() {
                entering = Some(j);
                break; // Bland: smallest improving index.
            }
        }
        let Some(j) = entering else { return true };

        let mut leaving: Option<usize> = None;
        let mut best: Option<T> = None;
        for i in 0..m {
            if a[i][j] > T::zero() {
                let ratio = b[i].clone() / a[i][j].clone();
                let better = match &best {
                    None => true,
                    Some(cur) => {
                        ratio < *cur || (ratio == *cur && basis[i] < basis[leaving.unwrap()])
                    }
                };
                if better {
                    best = Some(ratio);
                    leaving = Some(i);
                }
            }
        }
        let Some(i) = leaving else { return false };
        pivot(a, b, basis, i, j);
    }
}

fn pivot<T: Coord>(a: &mut Vec<Vec<T>>, b: &mut Vec<T>, basis: &mut Vec<usize>, row: usize, col: usize) {
    let p = a[row][col].clone();
    for v in a[row].iter_mut() {
        *v = v.clone() / p.clone();
    }
    b[row] = b[row].clone() / p;
    for i in 0..a.len() {
        if i != row {
            let factor = a[i][col].clone();
            if factor != T::zero() {
                for j in 0..a[i].len() {
                    a[i][j] = a[i][j].clone() - factor.clone() * a[row][j].clone();
                }
                b[i] = b[i].clone() - factor * b[row].clone();
            }
        }
    }
    basis[row] = col;
}

/// Variable index of a symbol: stage within its interval, tracks first.
fn var_of(sym: Symbol, k: usize) -> usize {
    let stage = match sym.kind {
        PointKind::Left => 0,
        PointKind::Mark(j) => 1 + j,
        PointKind::Right => 1 + k,
    };
    sym.vertex * (k + 2) + stage
}

fn push_flavor_equalities<T: Coord>(
    system: &mut LinearSystem<T>,
    n: usize,
    k: usize,
    flavor: FlavorSet,
) {
    for v in 0..n {
        let l = var_of(
            Symbol {
                vertex: v,
                kind: PointKind::Left,
            },
            k,
        );
        let r = var_of(
            Symbol {
                vertex: v,
                kind: PointKind::Right,
            },
            k,
        );
        if flavor.unit {
            // Unit length normalized to 1 (scale invariance).
            system.constraints.push(Constraint {
                coeffs: vec![(r, T::one()), (l, -T::one())],
                rel: Rel::Eq,
                rhs: T::one(),
            });
        }
        if flavor.midpoint {
            assert_eq!(k, 1, "midpoint flavor requires exactly one mark");
            let m = var_of(
                Symbol {
                    vertex: v,
                    kind: PointKind::Mark(0),
                },
                k,
            );
            system.constraints.push(Constraint {
                coeffs: vec![
                    (m, T::from_int(2)),
                    (l, -T::one()),
                    (r, -T::one()),
                ],
                rel: Rel::Eq,
                rhs: T::zero(),
            });
        }
    }
}

fn margin_cap<T: Coord>(system: &mut LinearSystem<T>) {
    let t = system.margin;
    system.constraints.push(Constraint {
        coeffs: vec![(t, T::one())],
        rel: Rel::Le,
        rhs: T::one(),
    });
}

/// Strict-order system of a complete word under the given flavor.
pub fn system_from_word<T: Coord>(word: &OrderingWord, flavor: FlavorSet) -> LinearSystem<T> {
    let (n, k) = (word.n, word.mark_count);
    let num_symbols = (k + 2) * n;
    let margin = num_symbols;
    let mut system = LinearSystem {
        num_vars: num_symbols + 1,
        constraints: Vec::new(),
        margin,
    };
    for w in word.symbols.windows(2) {
        system.constraints.push(Constraint {
            coeffs: vec![
                (var_of(w[1], k), T::one()),
                (var_of(w[0], k), -T::one()),
                (margin, -T::one()),
            ],
            rel: Rel::Ge,
            rhs: T::zero(),
        });
    }
    push_flavor_equalities(&mut system, n, k, flavor);
    margin_cap(&mut system);
    system
}

/// Relaxed system of a search prefix: the placed chain in order, every
/// not-yet-placed symbol after the chain (directly or through its own
/// interval's track), and the flavor equalities for all intervals. Any
/// completion of the prefix satisfies this system, so infeasibility here
/// soundly prunes the subtree.
pub fn system_from_prefix<T: Coord>(
    placed: &[Symbol],
    n: usize,
    k: usize,
    flavor: FlavorSet,
) -> LinearSystem<T> {
    let num_symbols = (k + 2) * n;
    let margin = num_symbols;
    let mut system = LinearSystem {
        num_vars: num_symbols + 1,
        constraints: Vec::new(),
        margin,
    };
    let diff = |hi: usize, lo: usize, sys: &mut LinearSystem<T>| {
        sys.constraints.push(Constraint {
            coeffs: vec![(hi, T::one()), (lo, -T::one()), (margin, -T::one())],
            rel: Rel::Ge,
            rhs: T::zero(),
        });
    };
    for w in placed.windows(2) {
        diff(var_of(w[1], k), var_of(w[0], k), &mut system);
    }
    let mut placed_stages = vec![0usize; n];
    for s in placed {
        placed_stages[s.vertex] += 1;
    }
    if let Some(last) = placed.last() {
        let last_var = var_of(*last, k);
        for v in 0..n {
            for stage in placed_stages[v]..(k + 2) {
                let kind = match stage {
                    0 => PointKind::Left,
                    s if s == k + 1 => PointKind::Right,
                    s => PointKind::Mark(s - 1),
                };
                let this = var_of(Symbol { vertex: v, kind }, k);
                if stage == placed_stages[v] {
                    // First unplaced symbol of the track comes after the chain.
                    diff(this, last_var, &mut system);
                } else {
                    let prev_kind = match stage - 1 {
                        0 => PointKind::Left,
                        s if s == k + 1 => PointKind::Right,
                        s => PointKind::Mark(s - 1),
                    };
                    diff(
                        this,
                        var_of(
                            Symbol {
                                vertex: v,
                                kind: prev_kind,
                            },
                            k,
                        ),
                        &mut system,
                    );
                }
            }
        }
    }
    push_flavor_equalities(&mut system, n, k, flavor);
    margin_cap(&mut system);
    system
}

// ---------------------------------------------------------------------------
// Difference-constraint fast path for unit-flavored systems.
//
// With lengths normalized to 1 the right endpoint is `l + 1`, and a centered
// mark is `l + 1/2`, so every symbol coordinate is one variable plus a
// constant and the strict order constraints become difference constraints.
// Strictness rides along as an infinitesimal count: weights are pairs
// (rational, epsilon-units) compared lexicographically, and feasibility is
// the absence of a negative cycle (Bellman-Ford).
// ---------------------------------------------------------------------------

#[derive(Clone, Debug)]
struct DiffSystem<T> {
    vars: usize,
    /// Edge (u, v, c, s): x_v <= x_u + c + s*eps.
    edges: Vec<(usize, usize, T, i64)>,
    infeasible_const: bool,
}

impl<T: Coord> DiffSystem<T> {
    fn new(vars: usize) -> Self {
        DiffSystem {
            vars,
            edges: Vec::new(),
            infeasible_const: false,
        }
    }

    /// Requires `(va, ca)` strictly greater than `(vb, cb)` as coordinates.
    fn require_lt(&mut self, below: (usize, T), above: (usize, T)) {
        let (vb, cb) = below;
        let (va, ca) = above;
        if va == vb {
            // Constant comparison; offsets within one interval track.
            if cb >= ca {
                self.infeasible_const = true;
            }
            return;
        }
        // x_vb + cb < x_va + ca  =>  x_vb <= x_va + (ca - cb) - eps
        self.edges.push((va, vb, ca - cb, -1));
    }

    /// Shortest-path potentials from a virtual source, or None on a
    /// negative cycle. Distances are (rational, epsilon-units) pairs.
    fn solve(&self) -> Option<Vec<(T, i64)>> {
        if self.infeasible_const {
            return None;
        }
        let mut dist: Vec<(T, i64)> = vec![(T::zero(), 0); self.vars];
        for round in 0..=self.vars {
            let mut changed = false;
            for (u, v, c, s) in &self.edges {
                let cand = (dist[*u].0.clone() + c.clone(), dist[*u].1 + s);
                if cand < dist[*v] {
                    if round == self.vars {
                        return None;
                    }
                    dist[*v] = cand;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        Some(dist)
    }

    fn feasible(&self) -> bool {
        self.solve().is_some()
    }

    /// Concrete rational potentials: pick an epsilon small enough that every
    /// strict constraint survives the substitution eps -> number.
    fn realize(&self) -> Option<Vec<T>> {
        let dist = self.solve()?;
        let mut eps = T::one();
        for (u, v, c, s) in &self.edges {
            let slack = dist[*u].0.clone() + c.clone() - dist[*v].0.clone();
            if slack > T::zero() {
                let k_gap = (dist[*v].1 - dist[*u].1 - s).abs() + 1;
                let cand = slack / T::from_int(k_gap);
                if cand < eps {
                    eps = cand;
                }
            }
        }
        eps = eps.half();
        Some(
            dist.into_iter()
                .map(|(q, k)| q + eps.clone() * T::from_int(k))
                .collect(),
        )
    }
}

/// Symbol coordinate as `x_var + offset` under unit substitution.
fn unit_expr<T: Coord>(sym: Symbol, k: usize, midpoint: bool) -> (usize, T) {
    let v = sym.vertex;
    if midpoint {
        debug_assert_eq!(k, 1);
        match sym.kind {
            PointKind::Left => (v, T::zero()),
            PointKind::Mark(_) => (v, T::ratio(1, 2)),
            PointKind::Right => (v, T::one()),
        }
    } else {
        // Variable layout per vertex: left endpoint, then the k marks.
        match sym.kind {
            PointKind::Left => (v * (k + 1), T::zero()),
            PointKind::Mark(j) => (v * (k + 1) + 1 + j, T::zero()),
            PointKind::Right => (v * (k + 1), T::one()),
        }
    }
}

fn unit_diff_vars(n: usize, k: usize, midpoint: bool) -> usize {
    if midpoint {
        n
    } else {
        n * (k + 1)
    }
}

/// Within-track order of one interval's symbols; only the constraints that
/// are not constant under the substitution.
fn push_track_order<T: Coord>(sys: &mut DiffSystem<T>, vertex: usize, k: usize, midpoint: bool) {
    if midpoint {
        return; // l < l + 1/2 < l + 1 holds identically
    }
    let mut prev = unit_expr::<T>(
        Symbol {
            vertex,
            kind: PointKind::Left,
        },
        k,
        midpoint,
    );
    for j in 0..k {
        let this = unit_expr::<T>(
            Symbol {
                vertex,
                kind: PointKind::Mark(j),
            },
            k,
            midpoint,
        );
        sys.require_lt(prev, this.clone());
        prev = this;
    }
    sys.require_lt(
        prev,
        unit_expr::<T>(
            Symbol {
                vertex,
                kind: PointKind::Right,
            },
            k,
            midpoint,
        ),
    );
}

fn unit_system_from_word<T: Coord>(word: &OrderingWord, midpoint: bool) -> DiffSystem<T> {
    let k = word.mark_count;
    let mut sys = DiffSystem::new(unit_diff_vars(word.n, k, midpoint));
    for w in word.symbols.windows(2) {
        sys.require_lt(unit_expr(w[0], k, midpoint), unit_expr(w[1], k, midpoint));
    }
    sys
}

fn unit_system_from_prefix<T: Coord>(
    placed: &[Symbol],
    n: usize,
    k: usize,
    midpoint: bool,
) -> DiffSystem<T> {
    let mut sys = DiffSystem::new(unit_diff_vars(n, k, midpoint));
    for w in placed.windows(2) {
        sys.require_lt(unit_expr(w[0], k, midpoint), unit_expr(w[1], k, midpoint));
    }
    let mut placed_stages = vec![0usize; n];
    for s in placed {
        placed_stages[s.vertex] += 1;
    }
    if let Some(last) = placed.last() {
        let last_expr = unit_expr::<T>(*last, k, midpoint);
        for v in 0..n {
            if placed_stages[v] < k + 2 {
                let kind = match placed_stages[v] {
                    0 => PointKind::Left,
                    s if s == k + 1 => PointKind::Right,
                    s => PointKind::Mark(s - 1),
                };
                sys.require_lt(
                    last_expr.clone(),
                    unit_expr(Symbol { vertex: v, kind }, k, midpoint),
                );
            }
            push_track_order(&mut sys, v, k, midpoint);
        }
    }
    sys
}

/// Feasibility of a search prefix under the flavor constraints. Sound for
/// pruning: every completion of the prefix satisfies the checked system.
pub fn prefix_feasible<T: Coord>(placed: &[Symbol], n: usize, k: usize, flavor: FlavorSet) -> bool {
    if flavor.unit {
        unit_system_from_prefix::<T>(placed, n, k, flavor.midpoint).feasible()
    } else if flavor.midpoint {
        system_from_prefix::<T>(placed, n, k, flavor).feasible()
    } else {
        true
    }
}

/// Coordinates (one per word symbol, in word order) realizing a complete
/// word under the flavor geometry, without the properness gate.
pub fn word_coordinates<T: Coord>(word: &OrderingWord, flavor: FlavorSet) -> Option<Vec<T>> {
    let k = word.mark_count;
    if flavor.unit {
        let sys = unit_system_from_word::<T>(word, flavor.midpoint);
        let values = sys.realize()?;
        Some(
            word.symbols
                .iter()
                .map(|&s| {
                    let (var, offset) = unit_expr::<T>(s, k, flavor.midpoint);
                    values[var].clone() + offset
                })
                .collect(),
        )
    } else if flavor.midpoint {
        let system: LinearSystem<T> = system_from_word(word, flavor);
        let values = system.solve()?;
        Some(
            word.symbols
                .iter()
                .map(|&s| values[var_of(s, k)].clone())
                .collect(),
        )
    } else {
        Some((1..=word.symbols.len() as i64).map(T::from_int).collect())
    }
}

/// Coordinates realizing a word under the flavor constraints, if any.
///
/// With no geometric flavor the symbol ranks themselves work. `proper` is a
/// property of the word alone (no containment pattern), so it gates the rank
/// assignment rather than entering the linear system.
pub fn realizable<T: Coord>(word: &OrderingWord, flavor: FlavorSet) -> Option<Vec<T>> {
    assert!(word.is_valid(), "word violates per-interval precedence");
    if flavor.proper && word_has_containment(word) {
        return None;
    }
    word_coordinates(word, flavor)
}

/// True when some interval strictly contains another according to the word:
/// `L_a .. L_b .. R_b .. R_a` with at least one strict side, which on a word
/// (all points distinct) is any nesting of the two endpoint pairs.
pub fn word_has_containment(word: &OrderingWord) -> bool {
    let n = word.n;
    let mut pos_l = vec![0usize; n];
    let mut pos_r = vec![0usize; n];
    for (p, s) in word.symbols.iter().enumerate() {
        match s.kind {
            PointKind::Left => pos_l[s.vertex] = p,
            PointKind::Right => pos_r[s.vertex] = p,
            PointKind::Mark(_) => {}
        }
    }
    for a in 0..n {
        for b in 0..n {
            if a != b && pos_l[a] < pos_l[b] && pos_r[b] < pos_r[a] {
                return true;
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{ordering_word, Flavor, Representation};
    use crate::Q;
    use num_traits::{One, Zero};

    fn word_of(text: &str, n: usize) -> OrderingWord {
        let symbols = text
            .split_whitespace()
            .map(|tok| {
                let kind = match &tok[..1] {
                    "L" => PointKind::Left,
                    "M" => PointKind::Mark(0),
                    "R" => PointKind::Right,
                    _ => panic!("bad token {tok}"),
                };
                Symbol {
                    vertex: tok[1..].parse().unwrap(),
                    kind,
                }
            })
            .collect();
        OrderingWord {
            symbols,
            n,
            mark_count: 1,
        }
    }

    #[test]
    fn simplex_basic() {
        // max x0 + x1 st x0 + x1 <= 4, x0 <= 3
        let c = vec![Q::one(), Q::one()];
        let rows = vec![
            (vec![Q::one(), Q::one()], Rel::Le, Q::from_int(4)),
            (vec![Q::one(), Q::zero()], Rel::Le, Q::from_int(3)),
        ];
        match maximize(&c, &rows) {
            LpOutcome::Optimal { objective, .. } => assert_eq!(objective, Q::from_int(4)),
            _ => panic!("expected optimum"),
        }
    }

    #[test]
    fn simplex_infeasible_and_equalities() {
        // x0 >= 3 and x0 <= 1 is infeasible.
        let c = vec![Q::one()];
        let rows = vec![
            (vec![Q::one()], Rel::Ge, Q::from_int(3)),
            (vec![Q::one()], Rel::Le, Q::from_int(1)),
        ];
        assert!(matches!(maximize(&c, &rows), LpOutcome::Infeasible));

        // x0 + x1 = 2, maximize x0 - x1 -> 2 at (2, 0).
        let c = vec![Q::one(), -Q::one()];
        let rows = vec![(vec![Q::one(), Q::one()], Rel::Eq, Q::from_int(2))];
        match maximize(&c, &rows) {
            LpOutcome::Optimal {
                objective,
                solution,
            } => {
                assert_eq!(objective, Q::from_int(2));
                assert_eq!(solution[0], Q::from_int(2));
            }
            _ => panic!("expected optimum"),
        }
    }

    #[test]
    fn realizable_unflavored_is_ranks() {
        let w = word_of("L0 M0 L1 R0 M1 R1", 2);
        let coords: Vec<Q> = realizable(&w, FlavorSet::EMPTY).unwrap();
        assert_eq!(coords, (1..=6).map(Q::from_int).collect::<Vec<_>>());
    }

    #[test]
    fn realizable_unit_midpoint_word() {
        // The (0,2,4),(3,5,7) pattern scaled: feasible with unit + midpoint.
        let w = word_of("L0 M0 L1 R0 M1 R1", 2);
        let flavor = FlavorSet::of(&[Flavor::Unit, Flavor::Midpoint]);
        let coords: Vec<Q> = realizable(&w, flavor).unwrap();
        let rep = Representation::new(
            1,
            vec![
                crate::model::MarkedInterval::new(coords[0].clone(), vec![coords[1].clone()], coords[3].clone()),
                crate::model::MarkedInterval::new(coords[2].clone(), vec![coords[4].clone()], coords[5].clone()),
            ],
            flavor,
        );
        assert!(crate::model::validate_representation(&rep).is_empty());
        assert_eq!(ordering_word(&rep).unwrap(), w);
    }

    #[test]
    fn unit_allows_interleaved_marks_but_midpoint_does_not() {
        // l0 < l1 < m0 < r0 < m1 < r1 has a unit realization, e.g.
        // (0, 9/10, 1) and (1/2, 6/5, 3/2). Centering the marks kills it:
        // l1 < m0 forces l1 - l0 < 1/2 while r0 < m1 forces l1 - l0 > 1/2.
        let w = word_of("L0 L1 M0 R0 M1 R1", 2);
        assert!(realizable::<Q>(&w, FlavorSet::of(&[Flavor::Unit])).is_some());
        assert!(realizable::<Q>(&w, FlavorSet::of(&[Flavor::Unit, Flavor::Midpoint])).is_none());
    }

    #[test]
    fn unit_rejects_nested_intervals() {
        let w = word_of("L0 L1 M1 R1 M0 R0", 2);
        assert!(realizable::<Q>(&w, FlavorSet::of(&[Flavor::Unit])).is_none());
        assert!(realizable::<Q>(&w, FlavorSet::of(&[Flavor::Proper])).is_none());
        assert!(realizable::<Q>(&w, FlavorSet::EMPTY).is_some());
    }

    #[test]
    fn realized_coordinates_reproduce_word() {
        let w = word_of("L0 L1 M0 M1 R0 R1", 2);
        for flavor in [
            FlavorSet::of(&[Flavor::Unit]),
            FlavorSet::of(&[Flavor::Midpoint]),
            FlavorSet::of(&[Flavor::Unit, Flavor::Midpoint]),
        ] {
            let coords: Vec<Q> = realizable(&w, flavor).expect("feasible");
            let mut sorted = coords.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted.len(), coords.len(), "margin keeps points distinct");
            assert_eq!(sorted, coords, "coordinates follow the word order");
        }
    }
}
