//! Triangulations of the convex polygon inscribed in the circle.
//!
//! Everything here is combinatorial on point indices `0..n` (counter-clockwise
//! order); geometry only enters through [`Arc`]s when scoring.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use crate::circle_model::{chord_compare, Arc, CirclePointSet};
use crate::error::{Error, Result};

/// Unordered pair of point indices, stored with the smaller index first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Diagonal(usize, usize);

impl Diagonal {
    pub fn new(a: usize, b: usize) -> Self {
        if a <= b {
            Diagonal(a, b)
        } else {
            Diagonal(b, a)
        }
    }

    pub fn lo(&self) -> usize {
        self.0
    }

    pub fn hi(&self) -> usize {
        self.1
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.0, self.1)
    }

    pub fn shares_endpoint(&self, other: &Diagonal) -> bool {
        self.0 == other.0 || self.0 == other.1 || self.1 == other.0 || self.1 == other.1
    }

    /// Proper crossing: exactly one endpoint of `other` lies strictly
    /// between the endpoints of `self`, and no endpoint is shared.
    pub fn crosses(&self, other: &Diagonal) -> bool {
        if self.shares_endpoint(other) {
            return false;
        }
        let inside = |x: usize| self.0 < x && x < self.1;
        inside(other.0) != inside(other.1)
    }

    /// True for segments `[p_i p_{i+1}]` of the polygon boundary.
    pub fn is_polygon_edge(&self, n: usize) -> bool {
        self.1 - self.0 == 1 || (self.0 == 0 && self.1 == n - 1)
    }

    /// Apex of the ear this diagonal forms, if it cuts off a single vertex.
    pub fn ear_apex(&self, n: usize) -> Option<usize> {
        if self.1 - self.0 == 2 {
            Some(self.0 + 1)
        } else if self.0 + n - self.1 == 2 {
            Some((self.1 + 1) % n)
        } else {
            None
        }
    }

    /// Ear `e_apex = [p_{apex-1} p_{apex+1}]`.
    pub fn ear(apex: usize, n: usize) -> Self {
        Diagonal::new((apex + n - 1) % n, (apex + 1) % n)
    }
}

impl fmt::Display for Diagonal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.0, self.1)
    }
}

/// A set of diagonals over `n` points. Construction does not validate; see
/// [`Triangulation::validate`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triangulation {
    n: usize,
    diagonals: Vec<Diagonal>,
}

impl Triangulation {
    pub fn new<I>(n: usize, diagonals: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::from_diagonals(n, diagonals.into_iter().map(|(a, b)| Diagonal::new(a, b)))
    }

    pub fn from_diagonals<I>(n: usize, diagonals: I) -> Self
    where
        I: IntoIterator<Item = Diagonal>,
    {
        let mut diagonals: Vec<Diagonal> = diagonals.into_iter().collect();
        diagonals.sort_unstable();
        Triangulation { n, diagonals }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Diagonals in sorted order.
    pub fn diagonals(&self) -> &[Diagonal] {
        &self.diagonals
    }

    pub fn contains(&self, d: &Diagonal) -> bool {
        self.diagonals.binary_search(d).is_ok()
    }

    pub fn validate(&self) -> bool {
        validate(self, self.n)
    }

    /// Diagonals of the form `[p_{i-1} p_{i+1}]`.
    pub fn ears(&self) -> Vec<Diagonal> {
        self.diagonals
            .iter()
            .copied()
            .filter(|d| d.ear_apex(self.n).is_some())
            .collect()
    }

    /// The `n - 2` triangles as sorted index triples, in sorted order.
    ///
    /// Around each vertex the neighbors sorted by counter-clockwise offset
    /// pair up into the triangles incident to it.
    pub fn triangles(&self) -> Vec<[usize; 3]> {
        let n = self.n;
        let mut adj: Vec<Vec<usize>> = (0..n).map(|v| vec![(v + 1) % n, (v + n - 1) % n]).collect();
        for d in &self.diagonals {
            adj[d.0].push(d.1);
            adj[d.1].push(d.0);
        }
        let mut tris = Vec::with_capacity(n.saturating_sub(2));
        for (v, nbrs) in adj.iter_mut().enumerate() {
            nbrs.sort_unstable_by_key(|&u| (u + n - v) % n);
            for w in nbrs.windows(2) {
                let (a, b) = (w[0], w[1]);
                if v < a && v < b {
                    tris.push([v, a.min(b), a.max(b)]);
                }
            }
        }
        tris.sort_unstable();
        tris
    }

    /// Orders the triangles along the dual graph when it is a path.
    pub fn dual_path(&self) -> DualStructure {
        let tris = self.triangles();
        let mut owners: HashMap<Diagonal, Vec<usize>> = HashMap::with_capacity(self.diagonals.len());
        for (t, tri) in tris.iter().enumerate() {
            for (a, b) in [(tri[0], tri[1]), (tri[1], tri[2]), (tri[0], tri[2])] {
                let d = Diagonal::new(a, b);
                if !d.is_polygon_edge(self.n) {
                    owners.entry(d).or_default().push(t);
                }
            }
        }
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); tris.len()];
        for ts in owners.values() {
            if let [a, b] = ts[..] {
                adj[a].push(b);
                adj[b].push(a);
            }
        }
        if let Some(t) = (0..tris.len()).find(|&t| adj[t].len() > 2) {
            return DualStructure::NotAPath { branching: tris[t] };
        }
        // `tris` is sorted, so the first leaf is the smallest one.
        let Some(start) = (0..tris.len()).find(|&t| adj[t].len() <= 1) else {
            return DualStructure::Path(DualPath { triangles: Vec::new() });
        };
        let mut order = Vec::with_capacity(tris.len());
        let (mut prev, mut cur) = (usize::MAX, start);
        loop {
            order.push(tris[cur]);
            match adj[cur].iter().find(|&&x| x != prev) {
                Some(&next) => {
                    prev = cur;
                    cur = next;
                }
                None => break,
            }
        }
        DualStructure::Path(DualPath { triangles: order })
    }
}

/// Checks the count, range, non-edge and non-crossing conditions.
///
/// Non-crossing is checked as laminarity of the intervals `[lo, hi]`.
pub fn validate(t: &Triangulation, n: usize) -> bool {
    if n < 3 || t.n != n || t.diagonals.len() != n - 3 {
        return false;
    }
    for d in &t.diagonals {
        if d.1 >= n || d.0 == d.1 || d.is_polygon_edge(n) {
            return false;
        }
    }
    if t.diagonals.windows(2).any(|w| w[0] == w[1]) {
        return false;
    }
    // Sorted by lo ascending, then hi descending: enclosing intervals first.
    let mut intervals = t.diagonals.clone();
    intervals.sort_unstable_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
    let mut stack: Vec<Diagonal> = Vec::new();
    for d in intervals {
        while stack.last().is_some_and(|top| top.1 <= d.0) {
            stack.pop();
        }
        if stack.last().is_some_and(|top| top.1 < d.1) {
            return false;
        }
        stack.push(d);
    }
    true
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualPath {
    /// Triangles in path order; consecutive ones share a diagonal.
    pub triangles: Vec<[usize; 3]>,
}

impl DualPath {
    /// Shared diagonals in path order.
    pub fn diagonals(&self) -> Vec<Diagonal> {
        self.triangles
            .windows(2)
            .map(|w| {
                let shared: Vec<usize> = w[0].iter().copied().filter(|v| w[1].contains(v)).collect();
                Diagonal::new(shared[0], shared[1])
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DualStructure {
    Path(DualPath),
    NotAPath { branching: [usize; 3] },
}

impl DualStructure {
    pub fn is_path(&self) -> bool {
        matches!(self, DualStructure::Path(_))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScoreKind {
    Angle,
    Length,
}

/// Sorted (ascending) multiset of angles or diagonal lengths.
///
/// Entries are arcs. For lengths the arc is the diagonal itself and ordering
/// is by chord length; for angles it is the arc subtended by the angle,
/// whose half is the angle, and ordering is by span.
#[derive(Clone, Debug, PartialEq)]
pub struct ScoreVector {
    kind: ScoreKind,
    entries: Vec<Arc>,
}

impl ScoreVector {
    pub fn kind(&self) -> ScoreKind {
        self.kind
    }

    pub fn entries(&self) -> &[Arc] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries as floats: chord lengths on the point set's circle, or
    /// angles in radians.
    pub fn values(&self, radius: f64) -> Vec<f64> {
        self.entries
            .iter()
            .map(|a| match self.kind {
                ScoreKind::Length => a.chord_length(radius),
                ScoreKind::Angle => a.span().radians() / 2.0,
            })
            .collect()
    }

    fn entry_cmp(kind: ScoreKind, a: &Arc, b: &Arc) -> Ordering {
        match kind {
            ScoreKind::Length => chord_compare(a, b),
            ScoreKind::Angle => a.span.compare(b.span),
        }
    }

    fn entry_cmp_strict(kind: ScoreKind, a: &Arc, b: &Arc) -> Ordering {
        match kind {
            ScoreKind::Length => crate::circle_model::chord_compare_strict(a, b),
            ScoreKind::Angle => a.span.compare_strict(b.span),
        }
    }

    pub(crate) fn from_arcs(kind: ScoreKind, mut entries: Vec<Arc>) -> Self {
        entries.sort_by(|a, b| Self::entry_cmp_strict(kind, a, b));
        ScoreVector { kind, entries }
    }
}

/// Sorted diagonal arcs of `t`.
pub fn length_vector(t: &Triangulation, p: &CirclePointSet) -> ScoreVector {
    let arcs = t.diagonals.iter().map(|d| p.arc(d.0, d.1)).collect();
    ScoreVector::from_arcs(ScoreKind::Length, arcs)
}

/// Sorted angles of all triangles of `t`, each as the arc it subtends.
///
/// For a triangle `a < b < c` the angle at `a` subtends the counter-clockwise
/// arc `b → c`, at `b` the arc `c → a`, and at `c` the arc `a → b`.
pub fn angle_vector(t: &Triangulation, p: &CirclePointSet) -> ScoreVector {
    let mut arcs = Vec::with_capacity(3 * t.n.saturating_sub(2));
    for [a, b, c] in t.triangles() {
        arcs.push(p.arc(b, c));
        arcs.push(p.arc(c, a));
        arcs.push(p.arc(a, b));
    }
    ScoreVector::from_arcs(ScoreKind::Angle, arcs)
}

/// Lexicographic comparison of two score vectors of the same kind and size.
pub fn compare_lex(a: &ScoreVector, b: &ScoreVector) -> Result<Ordering> {
    if a.kind != b.kind {
        return Err(Error::KindMismatch);
    }
    if a.len() != b.len() {
        return Err(Error::LengthMismatch(a.len(), b.len()));
    }
    for (x, y) in a.entries.iter().zip(&b.entries) {
        match ScoreVector::entry_cmp(a.kind, x, y) {
            Ordering::Equal => {}
            other => return Ok(other),
        }
    }
    Ok(Ordering::Equal)
}

/// The double fan containing the non-crossing ears `e_i` and `e_j`: a fan
/// from `p_{i-1}` covering `p_{i+1} … p_{j-1}` and one from `p_{j-1}`
/// covering `p_{j+1} … p_{i-1}`.
pub fn fan_pair_triangulation(p: &CirclePointSet, i: usize, j: usize) -> Result<Triangulation> {
    fan_pair(p.len(), i, j)
}

pub(crate) fn fan_pair(n: usize, i: usize, j: usize) -> Result<Triangulation> {
    for index in [i, j] {
        if index >= n {
            return Err(Error::IndexOutOfRange { index, n });
        }
    }
    if i == j {
        return Err(Error::SameApex(i));
    }
    if (i + 1) % n == j || (j + 1) % n == i {
        return Err(Error::CrossingEars(i.min(j), i.max(j)));
    }
    let mut diags = vec![Diagonal::ear(i, n), Diagonal::ear(j, n)];
    for (from, to) in [(i, j), (j, i)] {
        let hub = (from + n - 1) % n;
        // p_{from+2}, ..., p_{to-1}
        let mut m = (from + 2) % n;
        let stop = (to + n - 1) % n;
        if (to + n - from) % n >= 3 {
            loop {
                diags.push(Diagonal::new(hub, m));
                if m == stop {
                    break;
                }
                m = (m + 1) % n;
            }
        }
    }
    diags.retain(|d| !d.is_polygon_edge(n) && d.0 != d.1);
    diags.sort_unstable();
    diags.dedup();
    let t = Triangulation::from_diagonals(n, diags);
    debug_assert!(t.validate(), "fan pair {i},{j} on {n} points: {t:?}");
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circle_model::CirclePointSet;

    fn t(n: usize, d: &[(usize, usize)]) -> Triangulation {
        Triangulation::new(n, d.iter().copied())
    }

    fn quad() -> CirclePointSet {
        CirclePointSet::from_degrees_exact(&[0.0, 90.0, 180.0, 200.0]).unwrap()
    }

    fn regular(n: u64) -> CirclePointSet {
        let fr: Vec<(i64, u64)> = (0..n).map(|k| (k as i64, n)).collect();
        CirclePointSet::from_turns(&fr).unwrap()
    }

    fn degrees(v: &ScoreVector) -> Vec<f64> {
        v.values(1.0).iter().map(|r| (r.to_degrees() * 1e9).round() / 1e9).collect()
    }

    #[test]
    fn crossing_is_combinatorial() {
        assert!(Diagonal::new(0, 2).crosses(&Diagonal::new(1, 3)));
        assert!(!Diagonal::new(0, 3).crosses(&Diagonal::new(0, 2)));
        assert!(!Diagonal::new(0, 3).crosses(&Diagonal::new(3, 5)));
        assert!(!Diagonal::new(1, 2).crosses(&Diagonal::new(3, 5)));
        assert!(Diagonal::new(5, 2).crosses(&Diagonal::new(0, 3)));
    }

    #[test]
    fn validate_examples() {
        assert!(validate(&t(6, &[(1, 3), (0, 3), (3, 5)]), 6));
        assert!(!validate(&t(6, &[(0, 2), (1, 3), (0, 3)]), 6));
        assert!(!validate(&t(5, &[(0, 2)]), 5));
        assert!(!validate(&t(5, &[(0, 2), (0, 2)]), 5));
        assert!(!validate(&t(5, &[(0, 1), (0, 2)]), 5));
        assert!(!validate(&t(5, &[(0, 4), (0, 2)]), 5));
        assert!(!validate(&t(5, &[(0, 2), (2, 7)]), 5));
    }

    #[test]
    fn ears_examples() {
        let d = |a, b| Diagonal::new(a, b);
        assert_eq!(t(6, &[(1, 3), (0, 3), (3, 5)]).ears(), vec![d(1, 3), d(3, 5)]);
        assert_eq!(t(4, &[(0, 2)]).ears(), vec![d(0, 2)]);
        assert_eq!(t(6, &[(0, 2), (0, 3), (0, 4)]).ears(), vec![d(0, 2), d(0, 4)]);
        assert_eq!(d(0, 4).ear_apex(6), Some(5));
        assert_eq!(d(1, 5).ear_apex(6), Some(0));
    }

    #[test]
    fn dual_path_examples() {
        let path = t(6, &[(1, 3), (0, 3), (3, 5)]).dual_path();
        assert_eq!(
            path,
            DualStructure::Path(DualPath {
                triangles: vec![[1, 2, 3], [0, 1, 3], [0, 3, 5], [3, 4, 5]]
            })
        );
        if let DualStructure::Path(p) = path {
            assert_eq!(
                p.diagonals(),
                vec![Diagonal::new(1, 3), Diagonal::new(0, 3), Diagonal::new(3, 5)]
            );
        }
        assert_eq!(
            t(6, &[(0, 2), (2, 4), (4, 0)]).dual_path(),
            DualStructure::NotAPath { branching: [0, 2, 4] }
        );
        match t(4, &[(0, 2)]).dual_path() {
            DualStructure::Path(p) => assert_eq!(p.triangles.len(), 2),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn length_vector_examples() {
        let hex = regular(6);
        let fan = length_vector(&t(6, &[(0, 2), (0, 3), (0, 4)]), &hex);
        let s3 = 3f64.sqrt();
        let v = fan.values(1.0);
        assert!((v[0] - s3).abs() < 1e-12 && (v[1] - s3).abs() < 1e-12 && (v[2] - 2.0).abs() < 1e-12);
        let star = length_vector(&t(6, &[(0, 2), (2, 4), (0, 4)]), &hex);
        assert!(star.values(1.0).iter().all(|x| (x - s3).abs() < 1e-12));
        let q = length_vector(&t(4, &[(0, 2)]), &quad());
        assert_eq!(q.len(), 1);
        assert!((q.values(1.0)[0] - 2.0).abs() < 1e-12);
    }

    #[test]
    fn angle_vector_examples() {
        let a = angle_vector(&t(4, &[(0, 2)]), &quad());
        assert_eq!(degrees(&a), vec![10.0, 45.0, 45.0, 80.0, 90.0, 90.0]);
        let b = angle_vector(&t(4, &[(1, 3)]), &quad());
        assert_eq!(degrees(&b), vec![10.0, 45.0, 45.0, 55.0, 80.0, 125.0]);
        assert_eq!(compare_lex(&a, &b), Ok(Ordering::Greater));
    }

    #[test]
    fn compare_lex_examples() {
        let hex = regular(6);
        let star = length_vector(&t(6, &[(0, 2), (2, 4), (0, 4)]), &hex);
        let fan = length_vector(&t(6, &[(0, 2), (0, 3), (0, 4)]), &hex);
        assert_eq!(compare_lex(&star, &fan), Ok(Ordering::Less));
        assert_eq!(compare_lex(&fan, &fan), Ok(Ordering::Equal));
        let ang = angle_vector(&t(6, &[(0, 2), (0, 3), (0, 4)]), &hex);
        assert_eq!(compare_lex(&fan, &ang), Err(Error::KindMismatch));
        let short = length_vector(&t(4, &[(0, 2)]), &quad());
        assert_eq!(compare_lex(&fan, &short), Err(Error::LengthMismatch(3, 1)));
    }

    #[test]
    fn fan_pair_examples() {
        let p6 = regular(6);
        assert_eq!(fan_pair_triangulation(&p6, 1, 4).unwrap(), t(6, &[(0, 2), (0, 3), (3, 5)]));
        assert_eq!(fan_pair_triangulation(&regular(5), 1, 3).unwrap(), t(5, &[(0, 2), (2, 4)]));
        assert_eq!(fan_pair_triangulation(&p6, 1, 2), Err(Error::CrossingEars(1, 2)));
        assert_eq!(fan_pair_triangulation(&p6, 0, 5), Err(Error::CrossingEars(0, 5)));
        assert_eq!(fan_pair_triangulation(&p6, 3, 3), Err(Error::SameApex(3)));
    }

    #[test]
    fn fan_pair_has_exactly_the_two_ears() {
        for n in 4..=12 {
            for i in 0..n {
                for j in 0..n {
                    let Ok(tr) = fan_pair(n, i, j) else { continue };
                    assert!(tr.validate(), "{n} {i} {j}");
                    let mut want = vec![Diagonal::ear(i, n), Diagonal::ear(j, n)];
                    want.sort_unstable();
                    want.dedup();
                    assert_eq!(tr.ears(), want, "{n} {i} {j}");
                }
            }
        }
    }

    #[test]
    fn angle_sum_is_exact() {
        let p = CirclePointSet::from_degrees_exact(&[0.0, 47.0, 110.0, 162.0, 223.0, 300.0]).unwrap();
        let a = angle_vector(&t(6, &[(1, 3), (0, 3), (3, 5)]), &p);
        assert_eq!(a.len(), 12);
        let total: u64 = a
            .entries()
            .iter()
            .map(|e| match e.span {
                crate::circle_model::Span::Exact { num, den } => {
                    assert_eq!(den, 360_000_000);
                    num
                }
                _ => unreachable!(),
            })
            .sum();
        // subtended arcs add up to n - 2 turns, so angles add up to (n - 2)π
        assert_eq!(total, 4 * 360_000_000);
    }
}
