//! Linear-time ear selection.
//!
//! Both solvers repeatedly emit an ear that belongs to the optimal
//! triangulation, delete its apex from a cyclic ring of surviving points and
//! continue on the smaller polygon. The choice only looks at the few longest
//! ears of the current polygon, which are maintained in constant time: when
//! an apex is removed, three ears disappear and two new ones appear, so the
//! new leaders are found among the surviving old leaders and the two new
//! ears.
//!
//! Let `se0 ≥ se1 ≥ se2 ≥ se3` be the longest ears of the current polygon.
//!
//! - Distinct lengths ([`solve_simplified`]): if `se0` and `se1` do not cross
//!   emit `se1`, otherwise emit `se2`. A pentagon is finished by brute force.
//! - No symmetric quadruple ([`solve_extended`]), with four leaders:
//!   - `se0 = se1`: emit both;
//!   - `se0 > se1 = se2`: if `se0` crosses both, emit `se1` and `se2`,
//!     otherwise emit `se0`;
//!   - `se2 > se3`: as above;
//!   - `se2 = se3`: if `se0` and `se1` do not cross emit `se1`, otherwise
//!     tentatively remove each of `se2`, `se3` and compare the best ear pair
//!     of the resulting polygons; emit the one leading to the longer pair, or
//!     on a tie the one of `se0`, `se1` that realizes the tied length.
//!
//!   Polygons of at most eight points are finished by brute force.

use std::cmp::Ordering;

use crate::circle_model::{
    chord_compare, degeneracy_class, Arc, CirclePointSet, DegeneracyClass, Span,
};
use crate::error::{Error, Result};
use crate::oracle::enumerate_triangulations;
use crate::triangulation::{Diagonal, Triangulation};

/// Up to this many points the precondition is checked by classifying the
/// whole input; larger inputs are checked lazily on the ears compared.
pub const CLASSIFY_LIMIT: usize = 1024;

/// Largest ring finished by brute force in the extended solver.
pub const EXTENDED_BASE_SIZE: usize = 8;

const SIMPLIFIED_BASE_SIZE: usize = 5;

/// In debug builds the leader list is checked against a full scan while the
/// ring has at most this many points.
const DEBUG_SCAN_LIMIT: usize = 256;

/// Operation counts of one solve.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct OpStats {
    pub chord_comparisons: u64,
    pub arc_constructions: u64,
    /// Leader lists rebuilt by scanning the whole ring, including the first.
    pub full_scans: u64,
    /// Lookahead ties that needed full completions to resolve.
    pub lookahead_fallbacks: u64,
}

impl OpStats {
    /// Arithmetic operations: chord comparisons plus arc constructions.
    pub fn total(&self) -> u64 {
        self.chord_comparisons + self.arc_constructions
    }
}

/// The ear `[p_{apex-1} p_{apex+1}]` of the current ring.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EarRecord {
    pub apex: usize,
    pub arc: Arc,
    pub alive: bool,
}

const MAX_WIDTH: usize = 4;
/// Ears listed beyond the reported leaders, as a buffer against removals.
const SMALL_CAP: usize = 8;
/// Ear spans add up to two turns, so at most three exceed a half turn
/// (four with float rounding on a ring of four).
const MAX_BIG: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct List<const N: usize> {
    items: [usize; N],
    len: usize,
}

impl<const N: usize> List<N> {
    const EMPTY: Self = List { items: [0; N], len: 0 };

    fn as_slice(&self) -> &[usize] {
        &self.items[..self.len]
    }

    fn push(&mut self, x: usize) -> bool {
        if self.len == N {
            return false;
        }
        self.items[self.len] = x;
        self.len += 1;
        true
    }

    fn remove(&mut self, x: usize) {
        if let Some(k) = self.as_slice().iter().position(|&y| y == x) {
            self.items.copy_within(k + 1..self.len, k);
            self.len -= 1;
        }
    }
}

/// Leader bookkeeping. Ears spanning more than a half turn ("big") are all
/// listed; the others are listed longest first down to a floor. A new ear
/// of at most a half turn spans more than the ear it replaces, so it is
/// longer than the emitted ear and lands in the list.
#[derive(Clone, Copy, Debug)]
struct Leaders {
    small: List<SMALL_CAP>,
    /// No unlisted small ear is longer than this.
    floor: Option<Arc>,
    big: List<MAX_BIG>,
    /// Longest ears overall, longest first; ties by apex.
    top: List<MAX_WIDTH>,
}

impl Leaders {
    const EMPTY: Self = Leaders {
        small: List::EMPTY,
        floor: None,
        big: List::EMPTY,
        top: List::EMPTY,
    };
}

struct Undo {
    apex: usize,
    before: EarRecord,
    after: EarRecord,
    leaders: Leaders,
    head: usize,
}

/// Mutable state of a sweep: the ring of surviving points, their ears, the
/// leader list and the emitted diagonals.
#[derive(Clone)]
pub struct SolverState<'a> {
    points: &'a CirclePointSet,
    prev: Vec<usize>,
    next: Vec<usize>,
    ears: Vec<EarRecord>,
    leaders: Leaders,
    width: usize,
    head: usize,
    ring_len: usize,
    output: Vec<Diagonal>,
    stats: OpStats,
}

impl<'a> SolverState<'a> {
    /// Full ring over all points, tracking the `width` (3 or 4) longest ears.
    pub fn new(points: &'a CirclePointSet, width: usize) -> Self {
        assert!((1..=MAX_WIDTH).contains(&width));
        let n = points.len();
        let prev: Vec<usize> = (0..n).map(|i| (i + n - 1) % n).collect();
        let next: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        let ears = (0..n)
            .map(|i| EarRecord {
                apex: i,
                arc: points.arc(prev[i], next[i]),
                alive: true,
            })
            .collect();
        let mut s = SolverState {
            points,
            prev,
            next,
            ears,
            leaders: Leaders::EMPTY,
            width,
            head: 0,
            ring_len: n,
            output: Vec::with_capacity(n),
            stats: OpStats::default(),
        };
        s.stats.arc_constructions += n as u64;
        s.full_scan();
        s
    }

    pub fn ring_len(&self) -> usize {
        self.ring_len
    }

    /// Surviving points in counter-clockwise order from the smallest index
    /// reachable from the ring head.
    pub fn ring(&self) -> Vec<usize> {
        let mut v = Vec::with_capacity(self.ring_len);
        let mut x = self.head;
        for _ in 0..self.ring_len {
            v.push(x);
            x = self.next[x];
        }
        v.sort_unstable();
        v
    }

    pub fn ear(&self, apex: usize) -> &EarRecord {
        &self.ears[apex]
    }

    /// Apices of the longest live ears, longest first.
    pub fn top(&self) -> &[usize] {
        self.leaders.top.as_slice()
    }

    pub fn output(&self) -> &[Diagonal] {
        &self.output
    }

    pub fn stats(&self) -> OpStats {
        self.stats
    }

    fn cmp_arcs(&mut self, a: &Arc, b: &Arc) -> Ordering {
        self.stats.chord_comparisons += 1;
        chord_compare(a, b)
    }

    fn cmp_ears(&mut self, a: usize, b: usize) -> Ordering {
        let (x, y) = (self.ears[a].arc, self.ears[b].arc);
        self.cmp_arcs(&x, &y)
    }

    /// `Less` when `a` ranks before `b`.
    fn rank_order(&mut self, a: usize, b: usize) -> Ordering {
        self.cmp_ears(b, a).then(a.cmp(&b))
    }

    /// Inserts into a ranked list of at most `cap` entries and returns the
    /// entry that fell off, if any.
    fn insert<const N: usize>(&mut self, list: &mut List<N>, cap: usize, apex: usize) -> Option<usize> {
        let mut pos = list.len;
        while pos > 0 && self.rank_order(apex, list.items[pos - 1]) == Ordering::Less {
            pos -= 1;
        }
        if pos >= cap {
            return Some(apex);
        }
        let dropped = (list.len == cap).then(|| list.items[cap - 1]);
        let end = (list.len + 1).min(cap);
        list.items.copy_within(pos..end - 1, pos + 1);
        list.items[pos] = apex;
        list.len = end;
        dropped
    }

    fn raise_floor(&mut self, l: &mut Leaders, dropped: usize) {
        let arc = self.ears[dropped].arc;
        let higher = match l.floor {
            None => true,
            Some(f) => self.cmp_arcs(&arc, &f) == Ordering::Greater,
        };
        if higher {
            l.floor = Some(arc);
        }
    }

    /// Files the ear at `apex` as big or small.
    fn file(&mut self, l: &mut Leaders, apex: usize) {
        let arc = self.ears[apex].arc;
        if arc.span.exceeds_half_turn() && l.big.push(apex) {
            return;
        }
        if let Some(f) = l.floor {
            if self.cmp_arcs(&arc, &f) == Ordering::Less {
                return;
            }
        }
        if let Some(d) = self.insert(&mut l.small, SMALL_CAP, apex) {
            self.raise_floor(l, d);
        }
    }

    fn merge_top(&mut self, l: &mut Leaders) {
        let mut top = List::EMPTY;
        for &x in &l.small.as_slice()[..l.small.len.min(self.width)] {
            top.push(x);
        }
        for k in 0..l.big.len {
            self.insert(&mut top, self.width, l.big.items[k]);
        }
        l.top = top;
    }

    fn full_scan(&mut self) {
        self.stats.full_scans += 1;
        let mut l = Leaders::EMPTY;
        let mut x = self.head;
        for _ in 0..self.ring_len {
            self.file(&mut l, x);
            x = self.next[x];
        }
        self.merge_top(&mut l);
        self.leaders = l;
    }

    /// Ears at `a` and `b` cross iff the apices are ring neighbors.
    fn ears_cross(&self, a: usize, b: usize) -> bool {
        a != b && (self.next[a] == b || self.next[b] == a)
    }

    fn ear_diagonal(&self, apex: usize) -> Diagonal {
        Diagonal::new(self.prev[apex], self.next[apex])
    }

    /// Deletes `apex` from the ring and files the two new ears, rescanning
    /// only when the listed ears no longer cover the leaders.
    pub fn remove_apex(&mut self, apex: usize) {
        self.remove(apex);
    }

    fn remove(&mut self, apex: usize) -> Undo {
        debug_assert!(self.ears[apex].alive && self.ring_len >= 4);
        let (u, w) = (self.prev[apex], self.next[apex]);
        let undo = Undo {
            apex,
            before: self.ears[u],
            after: self.ears[w],
            leaders: self.leaders,
            head: self.head,
        };
        self.next[u] = w;
        self.prev[w] = u;
        self.ears[apex].alive = false;
        self.ring_len -= 1;
        if self.head == apex {
            self.head = w;
        }
        self.ears[u].arc = self.points.arc(self.prev[u], w);
        self.ears[w].arc = self.points.arc(u, self.next[w]);
        self.stats.arc_constructions += 2;

        let mut l = self.leaders;
        for x in [apex, u, w] {
            l.small.remove(x);
            l.big.remove(x);
        }
        self.file(&mut l, u);
        self.file(&mut l, w);
        let small_count = self.ring_len - l.big.len;
        if l.small.len < self.width.min(small_count) {
            self.full_scan();
        } else {
            self.merge_top(&mut l);
            self.leaders = l;
        }
        if cfg!(debug_assertions) && self.ring_len <= DEBUG_SCAN_LIMIT {
            self.check_leaders();
        }
        undo
    }

    fn restore(&mut self, undo: Undo) {
        let apex = undo.apex;
        let (u, w) = (undo.before.apex, undo.after.apex);
        self.next[u] = apex;
        self.prev[w] = apex;
        self.ears[u] = undo.before;
        self.ears[w] = undo.after;
        self.ears[apex].alive = true;
        self.ring_len += 1;
        self.leaders = undo.leaders;
        self.head = undo.head;
    }

    /// Emits the ear at `apex` and deletes the apex.
    fn emit(&mut self, apex: usize) {
        let d = self.ear_diagonal(apex);
        if cfg!(debug_assertions) && self.ring_len <= 64 && self.ring_len >= 5 {
            debug_assert!(
                self.in_maximal_pair(apex),
                "emitted ear {d} is not in a maximal pair"
            );
        }
        self.output.push(d);
        self.remove(apex);
    }

    fn check_leaders(&self) {
        let mut all: Vec<Arc> = (0..self.ears.len())
            .filter(|&i| self.ears[i].alive)
            .map(|i| self.ears[i].arc)
            .collect();
        all.sort_by(|a, b| chord_compare(b, a));
        let got: Vec<Arc> = self.leaders.top.as_slice().iter().map(|&a| self.ears[a].arc).collect();
        assert_eq!(got.len(), self.width.min(self.ring_len));
        for (g, e) in got.iter().zip(&all) {
            assert_eq!(chord_compare(g, e), Ordering::Equal, "leader list differs from full scan");
        }
    }

    /// Whether the ear at `apex` is in some non-crossing ear pair whose
    /// shorter ear is as long as possible. Quadratic; debug use only.
    fn in_maximal_pair(&self, apex: usize) -> bool {
        let live: Vec<usize> = (0..self.ears.len()).filter(|&i| self.ears[i].alive).collect();
        let min_of = |a: usize, b: usize| {
            let (x, y) = (self.ears[a].arc, self.ears[b].arc);
            if chord_compare(&x, &y) == Ordering::Less {
                x
            } else {
                y
            }
        };
        let mut best: Option<Arc> = None;
        for (k, &a) in live.iter().enumerate() {
            for &b in &live[k + 1..] {
                if !self.ears_cross(a, b) {
                    let m = min_of(a, b);
                    if best.is_none_or(|v| chord_compare(&m, &v) == Ordering::Greater) {
                        best = Some(m);
                    }
                }
            }
        }
        let Some(best) = best else { return true };
        live.iter().any(|&b| {
            b != apex
                && !self.ears_cross(apex, b)
                && chord_compare(&min_of(apex, b), &best) == Ordering::Equal
        })
    }

    /// Shorter ear of the best non-crossing pair among the leaders.
    fn best_leader_pair(&mut self) -> Option<Arc> {
        let top = self.leaders.top;
        let mut best: Option<Arc> = None;
        for i in 0..top.len {
            for j in i + 1..top.len {
                let (a, b) = (top.items[i], top.items[j]);
                if self.ears_cross(a, b) {
                    continue;
                }
                let v = self.ears[b].arc;
                let better = match best {
                    None => true,
                    Some(cur) => self.cmp_arcs(&v, &cur) == Ordering::Greater,
                };
                if better {
                    best = Some(v);
                }
            }
        }
        best
    }

    /// Finishes the remaining ring by brute force.
    fn finish(&mut self) {
        let ring = self.ring();
        let (diags, ops) = base_case_counted(self.points, &ring);
        self.stats.chord_comparisons += ops.chord_comparisons;
        self.stats.arc_constructions += ops.arc_constructions;
        self.output.extend(diags);
    }

    fn into_result(self) -> (Triangulation, OpStats) {
        let n = self.points.len();
        let t = Triangulation::from_diagonals(n, self.output);
        debug_assert!(t.validate());
        (t, self.stats)
    }

    fn leader(&self, k: usize) -> usize {
        self.leaders.top.items[k]
    }

    fn select_simplified(&mut self) -> Result<usize> {
        let (s0, s1, s2) = (self.leader(0), self.leader(1), self.leader(2));
        if self.cmp_ears(s0, s1) == Ordering::Equal || self.cmp_ears(s1, s2) == Ordering::Equal {
            return Err(Error::PreconditionViolated(
                "two ears have the same length".into(),
            ));
        }
        let chosen = if self.ears_cross(s0, s1) { s2 } else { s1 };
        // The chosen ear never spans more than a half turn.
        debug_assert!(
            !matches!(self.ears[chosen].arc.span, Span::Exact { num, den } if 2 * num > den),
            "chosen ear contains the center"
        );
        Ok(chosen)
    }

    fn symmetric_error(&self, a: usize, b: usize) -> Error {
        Error::PreconditionViolated(format!(
            "crossing ears {} and {} have the same length (symmetric quadruple)",
            self.ear_diagonal(a),
            self.ear_diagonal(b)
        ))
    }

    /// Apices to emit next; the ring has more than
    /// [`EXTENDED_BASE_SIZE`] points.
    fn select_extended(&mut self) -> Result<Vec<usize>> {
        let s = [self.leader(0), self.leader(1), self.leader(2), self.leader(3)];
        let eq = |st: &mut Self, a: usize, b: usize| st.cmp_ears(a, b) == Ordering::Equal;

        if eq(self, s[0], s[1]) {
            if self.ears_cross(s[0], s[1]) {
                return Err(self.symmetric_error(s[0], s[1]));
            }
            return Ok(vec![s[0], s[1]]);
        }
        if eq(self, s[1], s[2]) {
            if self.ears_cross(s[1], s[2]) {
                return Err(self.symmetric_error(s[1], s[2]));
            }
            if self.ears_cross(s[0], s[1]) && self.ears_cross(s[0], s[2]) {
                return Ok(vec![s[1], s[2]]);
            }
            return Ok(vec![s[0]]);
        }
        if !eq(self, s[2], s[3]) {
            return Ok(vec![if self.ears_cross(s[0], s[1]) { s[2] } else { s[1] }]);
        }
        if self.ears_cross(s[2], s[3]) {
            return Err(self.symmetric_error(s[2], s[3]));
        }
        if !self.ears_cross(s[0], s[1]) {
            return Ok(vec![s[1]]);
        }
        self.lookahead(s)
    }

    fn lookahead(&mut self, s: [usize; 4]) -> Result<Vec<usize>> {
        let mut value = [None, None];
        for (slot, &x) in value.iter_mut().zip(&s[2..]) {
            let undo = self.remove(x);
            *slot = self.best_leader_pair();
            self.restore(undo);
        }
        let (Some(v2), Some(v3)) = (value[0], value[1]) else {
            return self.lookahead_fallback(s[2], s[3]);
        };
        match self.cmp_arcs(&v2, &v3) {
            Ordering::Greater => Ok(vec![s[2]]),
            Ordering::Less => Ok(vec![s[3]]),
            Ordering::Equal => {
                let (a0, a1) = (self.ears[s[0]].arc, self.ears[s[1]].arc);
                if self.cmp_arcs(&v2, &a0) == Ordering::Equal {
                    Ok(vec![s[0]])
                } else if self.cmp_arcs(&v2, &a1) == Ordering::Equal {
                    Ok(vec![s[1]])
                } else {
                    self.lookahead_fallback(s[2], s[3])
                }
            }
        }
    }

    /// Completes both choices and keeps the better one. Linear; only used
    /// for ties the local rule does not settle.
    fn lookahead_fallback(&mut self, a: usize, b: usize) -> Result<Vec<usize>> {
        self.stats.lookahead_fallbacks += 1;
        let branch = |apex: usize| -> Result<(Vec<Arc>, OpStats)> {
            let mut st = self.clone();
            st.stats = OpStats::default();
            st.emit(apex);
            st.run_extended()?;
            let mut arcs: Vec<Arc> = st.output.iter().map(|d| self.points.arc(d.lo(), d.hi())).collect();
            arcs.sort_by(crate::circle_model::chord_compare_strict);
            Ok((arcs, st.stats))
        };
        let (va, oa) = branch(a)?;
        let (vb, ob) = branch(b)?;
        for o in [oa, ob] {
            self.stats.chord_comparisons += o.chord_comparisons;
            self.stats.arc_constructions += o.arc_constructions;
            self.stats.full_scans += o.full_scans;
            self.stats.lookahead_fallbacks += o.lookahead_fallbacks;
        }
        let ord = va
            .iter()
            .zip(&vb)
            .map(|(x, y)| chord_compare(x, y))
            .find(|o| *o != Ordering::Equal)
            .unwrap_or(Ordering::Equal);
        Ok(vec![if ord == Ordering::Less { b } else { a }])
    }

    fn run_extended(&mut self) -> Result<()> {
        while self.ring_len > EXTENDED_BASE_SIZE {
            for apex in self.select_extended()? {
                self.emit(apex);
            }
        }
        self.finish();
        Ok(())
    }
}

fn precondition(p: &CirclePointSet, allowed: &[DegeneracyClass]) -> Result<()> {
    if p.len() <= CLASSIFY_LIMIT {
        let class = degeneracy_class(p);
        if !allowed.contains(&class) {
            return Err(Error::PreconditionViolated(format!("input is {class}")));
        }
    }
    Ok(())
}

/// Optimal triangulation of an input whose diagonals have pairwise
/// distinct lengths.
pub fn solve_simplified(p: &CirclePointSet) -> Result<Triangulation> {
    solve_simplified_counted(p).map(|(t, _)| t)
}

pub fn solve_simplified_counted(p: &CirclePointSet) -> Result<(Triangulation, OpStats)> {
    precondition(p, &[DegeneracyClass::DistinctDiagonals])?;
    let n = p.len();
    if n == 4 {
        return solve_quad(p);
    }
    let mut st = SolverState::new(p, 3);
    while st.ring_len > SIMPLIFIED_BASE_SIZE {
        let apex = st.select_simplified()?;
        st.emit(apex);
    }
    st.finish();
    Ok(st.into_result())
}

/// Optimal triangulation of an input without symmetric quadruples.
pub fn solve_extended(p: &CirclePointSet) -> Result<Triangulation> {
    solve_extended_counted(p).map(|(t, _)| t)
}

pub fn solve_extended_counted(p: &CirclePointSet) -> Result<(Triangulation, OpStats)> {
    precondition(
        p,
        &[DegeneracyClass::DistinctDiagonals, DegeneracyClass::NoSymmetricQuadruple],
    )?;
    if p.len() == 4 {
        return solve_quad(p);
    }
    let mut st = SolverState::new(p, 4);
    st.run_extended()?;
    Ok(st.into_result())
}

fn solve_quad(p: &CirclePointSet) -> Result<(Triangulation, OpStats)> {
    let (a, b) = (p.arc(0, 2), p.arc(1, 3));
    let stats = OpStats {
        chord_comparisons: 1,
        arc_constructions: 2,
        ..OpStats::default()
    };
    let d = match chord_compare(&a, &b) {
        Ordering::Greater => (0, 2),
        Ordering::Less => (1, 3),
        Ordering::Equal => {
            return Err(Error::PreconditionViolated(
                "both diagonals have the same length".into(),
            ))
        }
    };
    Ok((Triangulation::new(4, [d]), stats))
}

/// Length-maximal triangulation of the sub-polygon on `ring` (sorted point
/// indices, 3 to 8 of them), by trying all of them. Ties keep the smallest
/// diagonal set.
pub fn base_case_small(p: &CirclePointSet, ring: &[usize]) -> Vec<Diagonal> {
    base_case_counted(p, ring).0
}

fn base_case_counted(p: &CirclePointSet, ring: &[usize]) -> (Vec<Diagonal>, OpStats) {
    let k = ring.len();
    let mut stats = OpStats::default();
    if k <= 3 {
        return (Vec::new(), stats);
    }
    assert!(k <= 16, "base case on {k} points");
    let mut it = enumerate_triangulations(k).expect("4 <= k <= 16");
    let mut best: Option<(Vec<Diagonal>, Vec<Arc>)> = None;
    let mut tie = false;
    while it.advance() {
        let mut diags: Vec<Diagonal> = it
            .current_diagonals()
            .iter()
            .map(|d| Diagonal::new(ring[d.lo()], ring[d.hi()]))
            .collect();
        diags.sort_unstable();
        let mut arcs: Vec<Arc> = diags.iter().map(|d| p.arc(d.lo(), d.hi())).collect();
        stats.arc_constructions += arcs.len() as u64;
        arcs.sort_by(|a, b| {
            stats.chord_comparisons += 1;
            crate::circle_model::chord_compare_strict(a, b)
        });
        let ord = match &best {
            None => Ordering::Greater,
            Some((bd, ba)) => {
                let mut o = Ordering::Equal;
                for (x, y) in arcs.iter().zip(ba) {
                    stats.chord_comparisons += 1;
                    o = chord_compare(x, y);
                    if o != Ordering::Equal {
                        break;
                    }
                }
                if o == Ordering::Equal {
                    tie = true;
                    diags.cmp(bd).reverse()
                } else {
                    o
                }
            }
        };
        if ord == Ordering::Greater {
            best = Some((diags, arcs));
        }
    }
    let _ = tie;
    (best.expect("at least one triangulation").0, stats)
}
