//! Inputs with symmetric quadruples: every optimal triangulation, and a
//! deterministic choice among them.
//!
//! The search grows partial triangulations one ear at a time, layer by
//! layer. A ring of remaining points has a best ear pair (two non-crossing
//! ears whose shorter one is as long as possible); the shortest diagonal of
//! any optimal completion is the shorter ear of such a pair. Branches
//! therefore only emit those ears, emissions never decrease along a branch,
//! and at each layer only the branches emitting the longest value survive.
//! Every surviving leaf has the optimal score, and every optimal
//! triangulation is reached by emitting its diagonals shortest first.

use std::cmp::Ordering;
use std::collections::HashSet;

use crate::circle_model::{chord_compare, chord_compare_strict, Arc, CirclePointSet};
use crate::error::{Error, Result};
use crate::triangulation::{Diagonal, Triangulation};

pub const DEFAULT_LIMIT: usize = 4096;

/// Largest number of partial triangulations kept in one layer.
pub const MAX_FRONTIER: usize = 1 << 18;

#[derive(Clone, Debug, PartialEq)]
pub struct OptimalTriangulations {
    /// Sorted by diagonal set.
    pub triangulations: Vec<Triangulation>,
    /// Whether more optimal triangulations exist than were returned.
    pub truncated: bool,
}

/// All optimal triangulations, at most `limit` of them.
pub fn enumerate_optimal(p: &CirclePointSet, limit: usize) -> Result<OptimalTriangulations> {
    if limit == 0 {
        return Err(Error::LimitIsZero);
    }
    let leaves = ChoiceTree::new(p, Dedup::EmittedSet).search()?;
    let mut triangulations: Vec<Triangulation> = leaves
        .into_iter()
        .map(|node| Triangulation::from_diagonals(p.len(), node.emitted))
        .collect();
    triangulations.sort();
    let truncated = triangulations.len() > limit;
    triangulations.truncate(limit);
    Ok(OptimalTriangulations { triangulations, truncated })
}

/// Number of optimal triangulations of the regular n-gon, `n·2^(n−5)`.
pub fn regular_count(n: usize) -> Result<u64> {
    if n < 5 {
        return Err(Error::TooSmall { n, min: 5 });
    }
    (n as u64)
        .checked_mul(1u64.checked_shl(n as u32 - 5).unwrap_or(0))
        .filter(|&c| c > 0)
        .ok_or(Error::TooLarge { n, limit: 58 })
}

/// The leftmost optimal triangulation.
///
/// Points are relabeled counter-clockwise from the lexicographically
/// smallest one (by `x`, then `y`), tied choices are ordered by the
/// relabeled endpoints of the emitted diagonal, and the first leaf of the
/// full tied search is returned.
pub fn solve_canonical(p: &CirclePointSet) -> Result<Triangulation> {
    let leaves = ChoiceTree::new(p, Dedup::RemainingRing).search()?;
    let first = leaves.into_iter().next().expect("search always has a leaf");
    Ok(Triangulation::from_diagonals(p.len(), first.emitted))
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Dedup {
    EmittedSet,
    /// Keep the first node per remaining ring; siblings with the same ring
    /// have identical completions.
    RemainingRing,
}

#[derive(Clone, Debug)]
struct Node {
    /// Remaining points, increasing.
    ring: Vec<usize>,
    emitted: Vec<Diagonal>,
}

struct ChoiceTree<'a> {
    p: &'a CirclePointSet,
    first: usize,
    dedup: Dedup,
}

struct Choice {
    position: usize,
    diagonal: Diagonal,
}

impl<'a> ChoiceTree<'a> {
    fn new(p: &'a CirclePointSet, dedup: Dedup) -> Self {
        let first = (0..p.len())
            .min_by(|&a, &b| p.lexicographic_cmp(a, b))
            .unwrap_or(0);
        ChoiceTree { p, first, dedup }
    }

    fn relabel(&self, i: usize) -> usize {
        let n = self.p.len();
        (i + n - self.first) % n
    }

    fn label_key(&self, d: &Diagonal) -> (usize, usize) {
        let (a, b) = (self.relabel(d.lo()), self.relabel(d.hi()));
        (a.min(b), a.max(b))
    }

    fn search(&self) -> Result<Vec<Node>> {
        let n = self.p.len();
        let mut frontier = vec![Node { ring: (0..n).collect(), emitted: Vec::new() }];
        let mut last: Option<Arc> = None;
        for _ in 0..n.saturating_sub(3) {
            let mut best: Option<Arc> = None;
            let mut next: Vec<Node> = Vec::new();
            let mut seen_sets: HashSet<Vec<Diagonal>> = HashSet::new();
            let mut seen_rings: HashSet<Vec<usize>> = HashSet::new();
            for node in &frontier {
                let (value, mut choices) = self.choices(&node.ring);
                if last.is_some_and(|l| chord_compare(&value, &l) == Ordering::Less) {
                    continue;
                }
                match best.map(|b| chord_compare(&value, &b)) {
                    Some(Ordering::Less) => continue,
                    Some(Ordering::Greater) => {
                        next.clear();
                        seen_sets.clear();
                        seen_rings.clear();
                        best = Some(value);
                    }
                    Some(Ordering::Equal) => {}
                    None => best = Some(value),
                }
                choices.sort_by_key(|c| self.label_key(&c.diagonal));
                for c in choices {
                    let mut ring = node.ring.clone();
                    ring.remove(c.position);
                    let mut emitted = node.emitted.clone();
                    emitted.push(c.diagonal);
                    let fresh = match self.dedup {
                        Dedup::EmittedSet => {
                            let mut key = emitted.clone();
                            key.sort_unstable();
                            seen_sets.insert(key)
                        }
                        Dedup::RemainingRing => seen_rings.insert(ring.clone()),
                    };
                    if fresh {
                        next.push(Node { ring, emitted });
                    }
                }
                if next.len() > MAX_FRONTIER {
                    return Err(Error::SearchTooWide(MAX_FRONTIER));
                }
            }
            debug_assert!(!next.is_empty(), "every layer has an optimal branch");
            frontier = next;
            last = best;
        }
        Ok(frontier)
    }

    /// Best ear-pair value of the ring and the ears realizing it as the
    /// shorter member of a best pair.
    fn choices(&self, ring: &[usize]) -> (Arc, Vec<Choice>) {
        let k = ring.len();
        let p = self.p;
        if k == 4 {
            let a = p.arc(ring[0], ring[2]);
            let b = p.arc(ring[1], ring[3]);
            let value = if chord_compare(&a, &b) == Ordering::Less { b } else { a };
            let choices = [(1, a), (0, b)]
                .into_iter()
                .filter(|(_, arc)| chord_compare(arc, &value) == Ordering::Equal)
                .map(|(position, arc)| Choice {
                    position,
                    diagonal: Diagonal::new(arc.endpoints().0, arc.endpoints().1),
                })
                .collect();
            return (value, choices);
        }
        let ears: Vec<Arc> = (0..k)
            .map(|i| p.arc(ring[(i + k - 1) % k], ring[(i + 1) % k]))
            .collect();
        let mut order: Vec<usize> = (0..k).collect();
        order.sort_by(|&a, &b| chord_compare_strict(&ears[b], &ears[a]));
        let adjacent = |a: usize, b: usize| (a + 1) % k == b || (b + 1) % k == a;

        // The pair value is the first length, scanning longest first, at
        // which some ear has a non-adjacent partner at least as long.
        let mut added = vec![false; k];
        let mut value = None;
        for (count, &e) in order.iter().enumerate() {
            let near = [(e + k - 1) % k, (e + 1) % k].iter().filter(|&&x| added[x]).count();
            if count > near {
                value = Some(ears[e]);
                break;
            }
            added[e] = true;
        }
        let value = value.expect("a ring of five or more has non-crossing ears");

        let at_least: Vec<usize> = order
            .iter()
            .copied()
            .take_while(|&e| chord_compare(&ears[e], &value) != Ordering::Less)
            .collect();
        let mut choices = Vec::new();
        for &e in &at_least {
            if chord_compare(&ears[e], &value) != Ordering::Equal {
                continue;
            }
            if at_least.iter().any(|&f| f != e && !adjacent(e, f)) {
                let (a, b) = ears[e].endpoints();
                choices.push(Choice { position: e, diagonal: Diagonal::new(a, b) });
            }
        }
        (value, choices)
    }
}
