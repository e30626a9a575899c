//! Brute-force ground truth: every triangulation of the n-gon, scored.

use std::cmp::Ordering;

use crate::circle_model::{chord_compare, chord_compare_strict, Arc, CirclePointSet};
use crate::error::{Error, Result};
use crate::triangulation::{length_vector, Diagonal, ScoreVector, Triangulation};

/// Largest point count accepted by the brute-force operations.
pub const MAX_ORACLE_POINTS: usize = 16;

/// `C(m) = (2m)! / (m! (m+1)!)`.
pub fn catalan(m: u64) -> u64 {
    (0..m).fold(1u64, |c, k| c * 2 * (2 * k + 1) / (k + 2))
}

fn guard(n: usize) -> Result<()> {
    if n > MAX_ORACLE_POINTS {
        return Err(Error::TooLarge { n, limit: MAX_ORACLE_POINTS });
    }
    if n < 4 {
        return Err(Error::TooFewPoints(n));
    }
    Ok(())
}

/// Every triangulation of the convex n-gon, each exactly once.
pub fn enumerate_triangulations(n: usize) -> Result<Triangulations> {
    guard(n)?;
    Ok(Triangulations::new(n))
}

struct Frame {
    lo: usize,
    hi: usize,
    apex: usize,
    pushed_diagonals: usize,
    pushed_pending: usize,
}

/// Depth-first enumeration by splitting: the triangle on edge `(lo, hi)` has
/// some apex `lo < k < hi`, and both sides are triangulated recursively.
pub struct Triangulations {
    n: usize,
    diagonals: Vec<Diagonal>,
    triangles: Vec<[usize; 3]>,
    pending: Vec<(usize, usize)>,
    stack: Vec<Frame>,
    started: bool,
}

impl Triangulations {
    fn new(n: usize) -> Self {
        Triangulations {
            n,
            diagonals: Vec::with_capacity(n),
            triangles: Vec::with_capacity(n),
            pending: vec![(0, n - 1)],
            stack: Vec::with_capacity(n),
            started: false,
        }
    }

    fn apply(&mut self, f: &mut Frame) {
        let (lo, k, hi) = (f.lo, f.apex, f.hi);
        self.triangles.push([lo, k, hi]);
        f.pushed_diagonals = 0;
        f.pushed_pending = 0;
        for (a, b) in [(lo, k), (k, hi)] {
            if b - a >= 2 {
                self.diagonals.push(Diagonal::new(a, b));
                self.pending.push((a, b));
                f.pushed_diagonals += 1;
                f.pushed_pending += 1;
            }
        }
    }

    fn undo(&mut self, f: &Frame) {
        self.triangles.pop();
        self.diagonals.truncate(self.diagonals.len() - f.pushed_diagonals);
        self.pending.truncate(self.pending.len() - f.pushed_pending);
    }

    fn descend(&mut self) {
        while let Some((lo, hi)) = self.pending.pop() {
            let mut f = Frame { lo, hi, apex: lo + 1, pushed_diagonals: 0, pushed_pending: 0 };
            self.apply(&mut f);
            self.stack.push(f);
        }
    }

    /// Moves to the next triangulation; `false` once exhausted.
    pub fn advance(&mut self) -> bool {
        if !self.started {
            self.started = true;
            self.descend();
            return true;
        }
        while let Some(mut f) = self.stack.pop() {
            self.undo(&f);
            if f.apex + 1 < f.hi {
                f.apex += 1;
                self.apply(&mut f);
                self.stack.push(f);
                self.descend();
                return true;
            }
            self.pending.push((f.lo, f.hi));
        }
        false
    }

    /// Diagonals of the current triangulation (unsorted).
    pub fn current_diagonals(&self) -> &[Diagonal] {
        &self.diagonals
    }

    /// Triangles `[lo, apex, hi]` of the current triangulation.
    pub fn current_triangles(&self) -> &[[usize; 3]] {
        &self.triangles
    }
}

impl Iterator for Triangulations {
    type Item = Triangulation;

    fn next(&mut self) -> Option<Triangulation> {
        if self.advance() {
            Some(Triangulation::from_diagonals(self.n, self.diagonals.iter().copied()))
        } else {
            None
        }
    }
}

/// Dense ranks of a set of arcs under a comparison (equal arcs share a
/// rank, larger arcs get larger ranks).
fn dense_ranks(
    arcs: &[Arc],
    strict: impl Fn(&Arc, &Arc) -> Ordering,
    tolerant: impl Fn(&Arc, &Arc) -> Ordering,
) -> Vec<u32> {
    let mut order: Vec<usize> = (0..arcs.len()).collect();
    order.sort_by(|&a, &b| strict(&arcs[a], &arcs[b]));
    let mut ranks = vec![0u32; arcs.len()];
    let mut r = 0u32;
    for k in 1..order.len() {
        if tolerant(&arcs[order[k - 1]], &arcs[order[k]]) != Ordering::Equal {
            r += 1;
        }
        ranks[order[k]] = r;
    }
    ranks
}

/// Chord-length ranks of every segment and span ranks of every directed
/// arc, so scoring a triangulation is a sort of small integers.
struct RankTables {
    n: usize,
    length: Vec<u32>,
    angle: Vec<u32>,
}

impl RankTables {
    fn new(p: &CirclePointSet) -> Self {
        let n = p.len();
        let mut arcs = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                // Self-pairs get a dummy arc; they are never looked up.
                arcs.push(if i == j { p.arc(0, 1) } else { p.arc(i, j) });
            }
        }
        let length = dense_ranks(&arcs, chord_compare_strict, chord_compare);
        let angle = dense_ranks(
            &arcs,
            |a, b| a.span.compare_strict(b.span),
            |a, b| a.span.compare(b.span),
        );
        RankTables { n, length, angle }
    }

    fn length_score(&self, diagonals: &[Diagonal], out: &mut Vec<u32>) {
        out.clear();
        out.extend(diagonals.iter().map(|d| self.length[d.lo() * self.n + d.hi()]));
        out.sort_unstable();
    }

    fn angle_score(&self, triangles: &[[usize; 3]], out: &mut Vec<u32>) {
        out.clear();
        for t in triangles {
            let mut s = *t;
            s.sort_unstable();
            let [a, b, c] = s;
            out.push(self.angle[b * self.n + c]);
            out.push(self.angle[c * self.n + a]);
            out.push(self.angle[a * self.n + b]);
        }
        out.sort_unstable();
    }
}

/// All triangulations attaining the lexicographically maximal sorted
/// diagonal-length vector.
#[derive(Clone, Debug, PartialEq)]
pub struct OptimalSet {
    pub score: ScoreVector,
    /// Sorted by diagonal set.
    pub winners: Vec<Triangulation>,
}

struct Best {
    score: Vec<u32>,
    winners: Vec<Triangulation>,
}

impl Best {
    fn offer(&mut self, score: &[u32], n: usize, diagonals: &[Diagonal]) {
        match score.cmp(&self.score[..]) {
            Ordering::Less => {}
            Ordering::Equal => self
                .winners
                .push(Triangulation::from_diagonals(n, diagonals.iter().copied())),
            Ordering::Greater => {
                self.score.clear();
                self.score.extend_from_slice(score);
                self.winners.clear();
                self.winners
                    .push(Triangulation::from_diagonals(n, diagonals.iter().copied()));
            }
        }
    }
}

/// Scores every triangulation by length and by angle and returns the
/// length-maximal ones.
///
/// # Panics
///
/// If the angle-maximal set differs from the length-maximal set, which
/// would contradict the equivalence of the two criteria on a circle.
pub fn optimal_set(p: &CirclePointSet) -> Result<OptimalSet> {
    let n = p.len();
    let mut it = enumerate_triangulations(n)?;
    let ranks = RankTables::new(p);
    let mut by_length = Best { score: Vec::new(), winners: Vec::new() };
    let mut by_angle = Best { score: Vec::new(), winners: Vec::new() };
    let mut buf = Vec::with_capacity(3 * n);
    while it.advance() {
        ranks.length_score(it.current_diagonals(), &mut buf);
        by_length.offer(&buf, n, it.current_diagonals());
        ranks.angle_score(it.current_triangles(), &mut buf);
        by_angle.offer(&buf, n, it.current_diagonals());
    }
    by_length.winners.sort();
    by_angle.winners.sort();
    assert_eq!(
        by_length.winners, by_angle.winners,
        "angle-maximal and length-maximal triangulations differ"
    );
    let score = length_vector(&by_length.winners[0], p);
    Ok(OptimalSet { score, winners: by_length.winners })
}

pub fn is_unique_optimum(p: &CirclePointSet) -> Result<bool> {
    Ok(optimal_set(p)?.winners.len() == 1)
}
