//! Concyclic point sets, arcs between their points, and chord-length
//! comparison.
//!
//! Every chord length on a circle is a monotone function of how close its
//! arc is to a half turn, so chords are never compared through `sin`: an arc
//! of span `s` (in turns) is as long as the arc `1 - s`, and longer than any
//! arc whose span is farther from `1/2`. In [`Mode::Exact`] positions are
//! rationals sharing one denominator and all comparisons are integer
//! comparisons; in [`Mode::Float`] positions are radians and comparisons
//! tolerate a relative error of [`FLOAT_EPS`].

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::f64::consts::{PI, TAU};
use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};

/// Relative tolerance of floating comparisons, measured against a half turn.
pub const FLOAT_EPS: f64 = 1e-9;

/// Largest common denominator accepted for exact positions.
pub const MAX_DENOMINATOR: u64 = 1 << 62;

const FLOAT_TOL: f64 = FLOAT_EPS * PI;

/// Numeric mode of a point set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Exact,
    Float,
}

/// A position (or span) on the circle.
///
/// `Exact` is a reduced fraction of a full turn in `[0, 1)`; `Float` is an
/// angle in radians in `[0, 2π)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum TurnFraction {
    Exact { num: u64, den: u64 },
    Float(f64),
}

impl TurnFraction {
    pub fn exact(num: u64, den: u64) -> Result<Self> {
        if den == 0 || num >= den {
            return Err(Error::InvalidAngle(format!("{num}/{den} is not in [0, 1)")));
        }
        let g = num.gcd(&den);
        Ok(TurnFraction::Exact {
            num: num / g,
            den: den / g,
        })
    }

    pub fn float(radians: f64) -> Result<Self> {
        if !radians.is_finite() || !(0.0..TAU).contains(&radians) {
            return Err(Error::InvalidAngle(format!("{radians} is not in [0, 2π)")));
        }
        Ok(TurnFraction::Float(radians))
    }

    pub fn mode(&self) -> Mode {
        match self {
            TurnFraction::Exact { .. } => Mode::Exact,
            TurnFraction::Float(_) => Mode::Float,
        }
    }

    pub fn turns(&self) -> f64 {
        match *self {
            TurnFraction::Exact { num, den } => num as f64 / den as f64,
            TurnFraction::Float(r) => r / TAU,
        }
    }

    pub fn radians(&self) -> f64 {
        match *self {
            TurnFraction::Exact { num, den } => TAU * num as f64 / den as f64,
            TurnFraction::Float(r) => r,
        }
    }

    pub fn degrees(&self) -> f64 {
        self.turns() * 360.0
    }
}

impl fmt::Display for TurnFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TurnFraction::Exact { num, den } => write!(f, "{num}/{den}"),
            TurnFraction::Float(r) => write!(f, "{r}rad"),
        }
    }
}

/// Unreduced span: exact spans keep the point set's common denominator.
#[derive(Clone, Copy, Debug, PartialEq)]
pub(crate) enum Span {
    Exact { num: u64, den: u64 },
    Float(f64),
}

impl Span {
    fn radians(self) -> f64 {
        match self {
            Span::Exact { num, den } => TAU * num as f64 / den as f64,
            Span::Float(r) => r,
        }
    }

    /// Distance to a half turn, as a float in radians.
    fn half_turn_distance(self) -> f64 {
        (PI - self.radians()).abs()
    }

    /// Compares spans by size.
    pub(crate) fn compare(self, other: Span) -> Ordering {
        match (self, other) {
            (Span::Exact { num: a, den: da }, Span::Exact { num: b, den: db }) => {
                (a as u128 * db as u128).cmp(&(b as u128 * da as u128))
            }
            _ => float_cmp(self.radians(), other.radians()),
        }
    }

    pub(crate) fn exceeds_half_turn(self) -> bool {
        match self {
            Span::Exact { num, den } => 2 * num > den,
            Span::Float(r) => r > PI,
        }
    }

    pub(crate) fn compare_strict(self, other: Span) -> Ordering {
        match (self, other) {
            (Span::Exact { .. }, Span::Exact { .. }) => self.compare(other),
            _ => self.radians().total_cmp(&other.radians()),
        }
    }
}

fn float_cmp(a: f64, b: f64) -> Ordering {
    if (a - b).abs() <= FLOAT_TOL {
        Ordering::Equal
    } else {
        a.total_cmp(&b)
    }
}

/// Counter-clockwise arc from one point of a set to another.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Arc {
    pub(crate) span: Span,
    from: usize,
    to: usize,
}

impl Arc {
    pub fn span(&self) -> TurnFraction {
        match self.span {
            Span::Exact { num, den } => {
                // Spans lie in (0, 1) so this cannot fail.
                TurnFraction::exact(num, den).expect("span in (0, 1)")
            }
            Span::Float(r) => TurnFraction::Float(r),
        }
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.from, self.to)
    }

    /// Chord length on a circle of radius `radius`.
    pub fn chord_length(&self, radius: f64) -> f64 {
        chord_length(self, radius)
    }
}

/// Orders two arcs by the length of their chords.
///
/// `Equal` holds exactly when the spans are equal or sum to a full turn.
pub fn chord_compare(a: &Arc, b: &Arc) -> Ordering {
    match (a.span, b.span) {
        (Span::Exact { num: na, den: da }, Span::Exact { num: nb, den: db }) => {
            // |1/2 - n/d| = |d - 2n| / 2d; a smaller distance is a longer chord.
            let ka = da.abs_diff(2 * na) as u128;
            let kb = db.abs_diff(2 * nb) as u128;
            (kb * da as u128).cmp(&(ka * db as u128))
        }
        _ => float_cmp(b.span.half_turn_distance(), a.span.half_turn_distance()),
    }
}

/// Like [`chord_compare`] but without tolerance, so it is a total order
/// suitable for sorting.
pub(crate) fn chord_compare_strict(a: &Arc, b: &Arc) -> Ordering {
    match (a.span, b.span) {
        (Span::Exact { .. }, Span::Exact { .. }) => chord_compare(a, b),
        _ => b
            .span
            .half_turn_distance()
            .total_cmp(&a.span.half_turn_distance()),
    }
}

/// `2·radius·sin(span/2)`; for reporting only.
pub fn chord_length(a: &Arc, radius: f64) -> f64 {
    2.0 * radius * (a.span.radians() / 2.0).sin()
}

#[derive(Clone, Debug, PartialEq)]
enum Positions {
    Exact { den: u64, nums: Vec<u64> },
    Float(Vec<f64>),
}

/// `n ≥ 4` distinct points on a circle, sorted counter-clockwise from the
/// smallest angle.
#[derive(Clone, Debug, PartialEq)]
pub struct CirclePointSet {
    center: [f64; 2],
    radius: f64,
    positions: Positions,
    labels: Vec<usize>,
    coords: Option<Vec<[f64; 2]>>,
}

impl CirclePointSet {
    /// Exact positions given as `(numerator, denominator)` fractions of a
    /// turn. Numerators are reduced modulo the denominator.
    pub fn from_turns(fracs: &[(i64, u64)]) -> Result<Self> {
        if fracs.len() < 4 {
            return Err(Error::TooFewPoints(fracs.len()));
        }
        let mut den: u64 = 1;
        for &(num, d) in fracs {
            if d == 0 {
                return Err(Error::InvalidAngle(format!("{num}/0")));
            }
            den = lcm_checked(den, d)?;
        }
        let nums: Vec<u64> = fracs
            .iter()
            .map(|&(num, d)| {
                let r = num.rem_euclid(d as i64) as u64;
                r * (den / d)
            })
            .collect();
        let mut order: Vec<usize> = (0..nums.len()).collect();
        order.sort_by_key(|&i| (nums[i], i));
        for w in order.windows(2) {
            if nums[w[0]] == nums[w[1]] {
                return Err(Error::DuplicatePoint(w[0].min(w[1]), w[0].max(w[1])));
            }
        }
        Ok(CirclePointSet {
            center: [0.0, 0.0],
            radius: 1.0,
            positions: Positions::Exact {
                den,
                nums: order.iter().map(|&i| nums[i]).collect(),
            },
            labels: order,
            coords: None,
        })
    }

    /// Exact positions given in whole or fractional degrees. Each value must
    /// be a multiple of 10⁻⁶ degree.
    pub fn from_degrees_exact(degrees: &[f64]) -> Result<Self> {
        const SCALE: f64 = 1e6;
        let den = 360 * 1_000_000u64;
        let fracs = degrees
            .iter()
            .map(|&d| {
                let scaled = d * SCALE;
                if !scaled.is_finite() || (scaled - scaled.round()).abs() > 1e-3 {
                    return Err(Error::InvalidAngle(format!(
                        "{d} degrees is not a multiple of 1e-6 degree"
                    )));
                }
                Ok((scaled.round() as i64, den))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_turns(&fracs)
    }

    /// Floating positions in radians (any real value, normalized mod 2π).
    pub fn from_radians(radians: &[f64]) -> Result<Self> {
        if radians.len() < 4 {
            return Err(Error::TooFewPoints(radians.len()));
        }
        let mut thetas = Vec::with_capacity(radians.len());
        for &r in radians {
            if !r.is_finite() {
                return Err(Error::InvalidAngle(format!("{r}")));
            }
            thetas.push(normalize_radians(r));
        }
        Self::from_float_thetas(thetas, [0.0, 0.0], 1.0, None)
    }

    /// Floating positions in degrees.
    pub fn from_degrees(degrees: &[f64]) -> Result<Self> {
        let radians: Vec<f64> = degrees.iter().map(|d| d.to_radians()).collect();
        Self::from_radians(&radians)
    }

    /// Fits the circle through the first three non-collinear points and
    /// checks that every other point lies on it within [`FLOAT_EPS`]·radius.
    pub fn fit_circle(points: &[[f64; 2]]) -> Result<Self> {
        let n = points.len();
        if n < 4 {
            return Err(Error::TooFewPoints(n));
        }
        if let Some(&p) = points.iter().find(|p| !p[0].is_finite() || !p[1].is_finite()) {
            return Err(Error::InvalidAngle(format!("non-finite point {p:?}")));
        }
        let mut sorted: Vec<usize> = (0..n).collect();
        sorted.sort_by(|&a, &b| {
            points[a][0]
                .total_cmp(&points[b][0])
                .then(points[a][1].total_cmp(&points[b][1]))
        });
        for w in sorted.windows(2) {
            if points[w[0]] == points[w[1]] {
                return Err(Error::DuplicatePoint(w[0].min(w[1]), w[0].max(w[1])));
            }
        }

        let p0 = points[0];
        let p1 = points[1];
        let (center, radius) = (2..n)
            .find_map(|k| circumcircle(p0, p1, points[k]))
            .ok_or(Error::CollinearInput)?;

        for (index, p) in points.iter().enumerate() {
            let d = ((p[0] - center[0]).powi(2) + (p[1] - center[1]).powi(2)).sqrt();
            let deviation = (d - radius).abs() / radius;
            if deviation > FLOAT_EPS {
                return Err(Error::NotConcyclic { index, deviation });
            }
        }

        let thetas = points
            .iter()
            .map(|p| normalize_radians((p[1] - center[1]).atan2(p[0] - center[0])))
            .collect();
        Self::from_float_thetas(thetas, center, radius, Some(points.to_vec()))
    }

    fn from_float_thetas(
        thetas: Vec<f64>,
        center: [f64; 2],
        radius: f64,
        coords: Option<Vec<[f64; 2]>>,
    ) -> Result<Self> {
        let mut order: Vec<usize> = (0..thetas.len()).collect();
        order.sort_by(|&a, &b| thetas[a].total_cmp(&thetas[b]).then(a.cmp(&b)));
        let sorted: Vec<f64> = order.iter().map(|&i| thetas[i]).collect();
        for k in 0..sorted.len() {
            let next = (k + 1) % sorted.len();
            let mut gap = sorted[next] - sorted[k];
            if next == 0 {
                gap += TAU;
            }
            if gap <= FLOAT_TOL {
                let (a, b) = (order[k], order[next]);
                return Err(Error::DuplicatePoint(a.min(b), a.max(b)));
            }
        }
        let coords = coords.map(|c| order.iter().map(|&i| c[i]).collect());
        Ok(CirclePointSet {
            center,
            radius,
            positions: Positions::Float(sorted),
            labels: order,
            coords,
        })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn mode(&self) -> Mode {
        match self.positions {
            Positions::Exact { .. } => Mode::Exact,
            Positions::Float(_) => Mode::Float,
        }
    }

    pub fn center(&self) -> [f64; 2] {
        self.center
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    /// Input index of every point, in counter-clockwise order.
    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    /// Original Cartesian coordinates, when the set was fitted from points.
    pub fn coords(&self) -> Option<&[[f64; 2]]> {
        self.coords.as_deref()
    }

    pub fn theta(&self, i: usize) -> TurnFraction {
        match &self.positions {
            Positions::Exact { den, nums } => {
                TurnFraction::exact(nums[i], *den).expect("position in [0, 1)")
            }
            Positions::Float(t) => TurnFraction::Float(t[i]),
        }
    }

    pub fn thetas(&self) -> Vec<TurnFraction> {
        (0..self.len()).map(|i| self.theta(i)).collect()
    }

    /// Cartesian position of point `i`: the input coordinates when known,
    /// otherwise reconstructed from center, radius and angle.
    pub fn point(&self, i: usize) -> [f64; 2] {
        if let Some(c) = &self.coords {
            return c[i];
        }
        let t = self.theta(i).radians();
        [
            self.center[0] + self.radius * t.cos(),
            self.center[1] + self.radius * t.sin(),
        ]
    }

    pub fn arc_between(&self, i: usize, j: usize) -> Result<Arc> {
        let n = self.len();
        for index in [i, j] {
            if index >= n {
                return Err(Error::IndexOutOfRange { index, n });
            }
        }
        if i == j {
            return Err(Error::EqualIndices(i));
        }
        Ok(self.arc(i, j))
    }

    /// Common denominator and numerators of exact positions.
    pub(crate) fn exact_positions(&self) -> Option<(u64, &[u64])> {
        match &self.positions {
            Positions::Exact { den, nums } => Some((*den, nums)),
            Positions::Float(_) => None,
        }
    }

    /// Unchecked [`arc_between`](Self::arc_between).
    pub(crate) fn arc(&self, i: usize, j: usize) -> Arc {
        let span = match &self.positions {
            Positions::Exact { den, nums } => Span::Exact {
                num: (nums[j] + den - nums[i]) % den,
                den: *den,
            },
            Positions::Float(t) => Span::Float((t[j] - t[i]).rem_euclid(TAU)),
        };
        Arc { span, from: i, to: j }
    }

    /// Key ordering points by Cartesian `x` then `y`, exact for exact
    /// positions: `x = cos θ` grows with the distance of `θ` from a half turn,
    /// and ties on `x` are split by the sign of `sin θ`.
    pub(crate) fn lexicographic_cmp(&self, a: usize, b: usize) -> Ordering {
        if let Some(c) = &self.coords {
            return c[a][0]
                .total_cmp(&c[b][0])
                .then(c[a][1].total_cmp(&c[b][1]));
        }
        // Both positions relative to the angle origin, i.e. spans from a
        // virtual point at θ = 0.
        let (sa, sb) = match &self.positions {
            Positions::Exact { den, nums } => (
                Span::Exact { num: nums[a], den: *den },
                Span::Exact { num: nums[b], den: *den },
            ),
            Positions::Float(t) => (Span::Float(t[a]), Span::Float(t[b])),
        };
        let below_axis = |s: Span| match s {
            Span::Exact { num, den } => 2 * num > den,
            Span::Float(r) => r > PI + FLOAT_TOL,
        };
        let dist_cmp = match (sa, sb) {
            (Span::Exact { num: na, den }, Span::Exact { num: nb, .. }) => {
                den.abs_diff(2 * na).cmp(&den.abs_diff(2 * nb))
            }
            _ => float_cmp(sa.half_turn_distance(), sb.half_turn_distance()),
        };
        // y ascending: points below the axis first.
        dist_cmp.then(below_axis(sb).cmp(&below_axis(sa)))
    }
}

fn lcm_checked(a: u64, b: u64) -> Result<u64> {
    let g = a.gcd(&b);
    (a / g)
        .checked_mul(b)
        .filter(|&l| l <= MAX_DENOMINATOR)
        .ok_or(Error::DenominatorOverflow)
}

fn normalize_radians(r: f64) -> f64 {
    let t = r.rem_euclid(TAU);
    if t >= TAU {
        0.0
    } else {
        t
    }
}

fn circumcircle(a: [f64; 2], b: [f64; 2], c: [f64; 2]) -> Option<([f64; 2], f64)> {
    let (bx, by) = (b[0] - a[0], b[1] - a[1]);
    let (cx, cy) = (c[0] - a[0], c[1] - a[1]);
    let d = 2.0 * (bx * cy - by * cx);
    let scale = (bx.hypot(by) * cx.hypot(cy)).max(f64::MIN_POSITIVE);
    if d.abs() <= 1e-12 * scale {
        return None;
    }
    let b2 = bx * bx + by * by;
    let c2 = cx * cx + cy * cy;
    let ux = (cy * b2 - by * c2) / d;
    let uy = (bx * c2 - cx * b2) / d;
    Some(([a[0] + ux, a[1] + uy], ux.hypot(uy)))
}

/// Degeneracy classes, from strongest to weakest guarantee.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DegeneracyClass {
    /// All diagonal lengths are pairwise distinct.
    DistinctDiagonals,
    /// Equal diagonal lengths occur only between diagonals sharing a vertex.
    NoSymmetricQuadruple,
    /// Some four points form a symmetric quadruple.
    Degenerate,
}

impl DegeneracyClass {
    pub fn name(&self) -> &'static str {
        match self {
            DegeneracyClass::DistinctDiagonals => "DistinctDiagonals",
            DegeneracyClass::NoSymmetricQuadruple => "NoSymmetricQuadruple",
            DegeneracyClass::Degenerate => "Degenerate",
        }
    }
}

impl fmt::Display for DegeneracyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Evidence for a degeneracy class.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Witness {
    /// `[p, q, r, s]` in cyclic order with `pr` and `qs` of equal length.
    Quadruple([usize; 4]),
    /// Two equal-length diagonals sharing a vertex.
    EqualPair([usize; 2], [usize; 2]),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Degeneracy {
    pub class: DegeneracyClass,
    pub witnesses: Vec<Witness>,
}

/// All diagonal arcs `(i, j)`, `i < j`, sorted by chord length.
fn sorted_diagonals(p: &CirclePointSet) -> Vec<Arc> {
    let n = p.len();
    let mut arcs = Vec::with_capacity(n * (n.saturating_sub(3)) / 2);
    for i in 0..n {
        for j in i + 2..n {
            if i == 0 && j == n - 1 {
                continue;
            }
            arcs.push(p.arc(i, j));
        }
    }
    arcs.sort_by(chord_compare_strict);
    arcs
}

/// Runs of consecutive arcs that compare `Equal`.
fn equal_groups(arcs: &[Arc]) -> Vec<&[Arc]> {
    let mut groups = Vec::new();
    let mut start = 0;
    for k in 1..=arcs.len() {
        if k == arcs.len() || chord_compare(&arcs[k - 1], &arcs[k]) != Ordering::Equal {
            if k - start > 1 {
                groups.push(&arcs[start..k]);
            }
            start = k;
        }
    }
    groups
}

fn quadruple_of(a: &Arc, b: &Arc) -> Option<[usize; 4]> {
    let (p, q) = a.endpoints();
    let (r, s) = b.endpoints();
    if p == r || p == s || q == r || q == s {
        return None;
    }
    // Equal disjoint chords either cross, or bound an isosceles trapezoid
    // whose crossing diagonals are then equal too; both are symmetric.
    let mut v = [p, q, r, s];
    v.sort_unstable();
    Some(v)
}

/// Every symmetric quadruple, each in cyclic order starting from its
/// smallest index.
pub fn find_symmetric_quadruples(p: &CirclePointSet) -> Vec<[usize; 4]> {
    let arcs = sorted_diagonals(p);
    let mut found = BTreeSet::new();
    for group in equal_groups(&arcs) {
        for (x, a) in group.iter().enumerate() {
            for b in &group[x + 1..] {
                if let Some(q) = quadruple_of(a, b) {
                    found.insert(q);
                }
            }
        }
    }
    found.into_iter().collect()
}

pub fn classify_degeneracy(p: &CirclePointSet) -> Degeneracy {
    let arcs = sorted_diagonals(p);
    let mut quads = BTreeSet::new();
    let mut pairs = Vec::new();
    for group in equal_groups(&arcs) {
        for (x, a) in group.iter().enumerate() {
            for b in &group[x + 1..] {
                match quadruple_of(a, b) {
                    Some(q) => {
                        quads.insert(q);
                    }
                    None => {
                        let (i, j) = a.endpoints();
                        let (k, l) = b.endpoints();
                        pairs.push(Witness::EqualPair([i, j], [k, l]));
                    }
                }
            }
        }
    }
    if !quads.is_empty() {
        Degeneracy {
            class: DegeneracyClass::Degenerate,
            witnesses: quads.into_iter().map(Witness::Quadruple).collect(),
        }
    } else if !pairs.is_empty() {
        pairs.sort();
        Degeneracy {
            class: DegeneracyClass::NoSymmetricQuadruple,
            witnesses: pairs,
        }
    } else {
        Degeneracy {
            class: DegeneracyClass::DistinctDiagonals,
            witnesses: Vec::new(),
        }
    }
}

/// Class only, stopping at the first symmetric quadruple.
pub fn degeneracy_class(p: &CirclePointSet) -> DegeneracyClass {
    let arcs = sorted_diagonals(p);
    let mut class = DegeneracyClass::DistinctDiagonals;
    for group in equal_groups(&arcs) {
        class = DegeneracyClass::NoSymmetricQuadruple;
        for (x, a) in group.iter().enumerate() {
            if group[x + 1..].iter().any(|b| quadruple_of(a, b).is_some()) {
                return DegeneracyClass::Degenerate;
            }
        }
    }
    class
}

#[cfg(test)]
mod tests {
    use super::*;

    fn degrees_exact(d: &[f64]) -> CirclePointSet {
        CirclePointSet::from_degrees_exact(d).unwrap()
    }

    fn square() -> CirclePointSet {
        CirclePointSet::fit_circle(&[[1.0, 0.0], [0.0, 1.0], [-1.0, 0.0], [0.0, -1.0]]).unwrap()
    }

    fn regular(n: u64) -> CirclePointSet {
        let fr: Vec<(i64, u64)> = (0..n).map(|k| (k as i64, n)).collect();
        CirclePointSet::from_turns(&fr).unwrap()
    }

    fn arc_deg(a: f64) -> Arc {
        // Arc from 0 to a on a 4-point exact set.
        let p = degrees_exact(&[0.0, a, (a + 360.0) / 2.0 + 0.5, 359.0]);
        p.arc(0, 1)
    }

    #[test]
    fn fit_unit_square() {
        let p = square();
        assert!((p.radius() - 1.0).abs() < 1e-12);
        assert!(p.center()[0].abs() < 1e-12 && p.center()[1].abs() < 1e-12);
        let turns: Vec<f64> = p.thetas().iter().map(|t| t.turns()).collect();
        for (t, e) in turns.iter().zip([0.0, 0.25, 0.5, 0.75]) {
            assert!((t - e).abs() < 1e-12, "{turns:?}");
        }
        assert_eq!(p.labels(), &[0, 1, 2, 3]);
    }

    #[test]
    fn fit_rejects_off_circle_point() {
        let err = CirclePointSet::fit_circle(&[[1.0, 0.0], [0.0, 1.0], [-1.0, 0.0], [0.5, 0.5]])
            .unwrap_err();
        assert!(matches!(err, Error::NotConcyclic { index: 3, .. }));
    }

    #[test]
    fn fit_recovers_shifted_circle() {
        let (cx, cy, r) = (2.0, -1.0, 3.0);
        let pts: Vec<[f64; 2]> = [0.0f64, 47.0, 110.0, 162.0]
            .iter()
            .map(|d| {
                let t = d.to_radians();
                [cx + r * t.cos(), cy + r * t.sin()]
            })
            .collect();
        let p = CirclePointSet::fit_circle(&pts).unwrap();
        assert!((p.radius() - 3.0).abs() / 3.0 < 1e-9);
        assert!((p.center()[0] - 2.0).abs() < 1e-9 && (p.center()[1] + 1.0).abs() < 1e-9);
        assert!((p.theta(1).degrees() - 47.0).abs() < 1e-9);
    }

    #[test]
    fn fit_errors() {
        let collinear = [[0.0, 0.0], [1.0, 1.0], [2.0, 2.0], [3.0, 3.0]];
        assert_eq!(CirclePointSet::fit_circle(&collinear), Err(Error::CollinearInput));
        let dup = [[1.0, 0.0], [0.0, 1.0], [1.0, 0.0], [0.0, -1.0]];
        assert_eq!(CirclePointSet::fit_circle(&dup), Err(Error::DuplicatePoint(0, 2)));
        assert_eq!(
            CirclePointSet::fit_circle(&[[1.0, 0.0], [0.0, 1.0], [-1.0, 0.0]]),
            Err(Error::TooFewPoints(3))
        );
    }

    #[test]
    fn fit_sorts_and_keeps_labels() {
        let p = CirclePointSet::fit_circle(&[[0.0, -1.0], [0.0, 1.0], [1.0, 0.0], [-1.0, 0.0]])
            .unwrap();
        assert_eq!(p.labels(), &[2, 1, 3, 0]);
        assert_eq!(p.point(0), [1.0, 0.0]);
    }

    #[test]
    fn exact_turns_reduce_and_sort() {
        let p = CirclePointSet::from_turns(&[(3, 4), (1, 2), (0, 1), (-3, 4)]).unwrap();
        assert_eq!(p.mode(), Mode::Exact);
        assert_eq!(p.labels(), &[2, 3, 1, 0]);
        assert_eq!(p.theta(1), TurnFraction::Exact { num: 1, den: 4 });
        assert_eq!(
            CirclePointSet::from_turns(&[(0, 4), (1, 4), (2, 4), (4, 8)]),
            Err(Error::DuplicatePoint(2, 3))
        );
        assert_eq!(
            CirclePointSet::from_turns(&[(0, 1), (1, 3), (1, 0), (2, 3)]),
            Err(Error::InvalidAngle("1/0".into()))
        );
    }

    #[test]
    fn denominator_overflow_is_reported() {
        let big = (1u64 << 61) + 1;
        let err = CirclePointSet::from_turns(&[(0, 1), (1, big), (1, big - 2), (1, 3)]);
        assert_eq!(err, Err(Error::DenominatorOverflow));
    }

    #[test]
    fn arc_between_examples() {
        let sq = regular(4);
        let a = sq.arc_between(0, 2).unwrap();
        assert_eq!(a.span(), TurnFraction::Exact { num: 1, den: 2 });
        assert_eq!(a.endpoints(), (0, 2));
        assert_eq!(sq.arc_between(2, 0).unwrap().span(), a.span());

        let p = degrees_exact(&[0.0, 47.0, 110.0, 162.0, 223.0, 300.0]);
        assert_eq!(p.arc_between(5, 1).unwrap().span().degrees(), 107.0);

        assert_eq!(sq.arc_between(1, 1), Err(Error::EqualIndices(1)));
        assert_eq!(sq.arc_between(0, 4), Err(Error::IndexOutOfRange { index: 4, n: 4 }));
    }

    #[test]
    fn chord_compare_examples() {
        assert_eq!(chord_compare(&arc_deg(60.0), &arc_deg(90.0)), Ordering::Less);
        assert_eq!(chord_compare(&arc_deg(90.0), &arc_deg(270.0)), Ordering::Equal);
        assert_eq!(chord_compare(&arc_deg(180.0), &arc_deg(174.0)), Ordering::Greater);
    }

    #[test]
    fn chord_compare_float_mode() {
        let p = CirclePointSet::from_degrees(&[0.0, 90.0, 180.0, 270.0]).unwrap();
        assert_eq!(chord_compare(&p.arc(0, 1), &p.arc(3, 0)), Ordering::Equal);
        assert_eq!(chord_compare(&p.arc(0, 1), &p.arc(1, 0)), Ordering::Equal);
        assert_eq!(chord_compare(&p.arc(0, 1), &p.arc(0, 2)), Ordering::Less);
    }

    #[test]
    fn chord_length_examples() {
        let sq = regular(4);
        assert!((sq.arc(0, 2).chord_length(1.0) - 2.0).abs() < 1e-12);
        let hex = regular(6);
        assert!((chord_length(&hex.arc(0, 1), 1.0) - 1.0).abs() < 1e-12);
        assert!((chord_length(&hex.arc(0, 2), 1.0) - 3f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn symmetric_quadruple_examples() {
        assert!(find_symmetric_quadruples(&square()).contains(&[0, 1, 2, 3]));
        let p = degrees_exact(&[0.0, 40.0, 180.0, 220.0]);
        assert!(find_symmetric_quadruples(&p).contains(&[0, 1, 2, 3]));
        let p = degrees_exact(&[0.0, 47.0, 110.0, 162.0]);
        assert!(find_symmetric_quadruples(&p).is_empty());
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify_degeneracy(&regular(6)).class, DegeneracyClass::Degenerate);
        let p = degrees_exact(&[0.0, 47.0, 110.0, 162.0, 223.0, 300.0]);
        assert_eq!(classify_degeneracy(&p), Degeneracy {
            class: DegeneracyClass::DistinctDiagonals,
            witnesses: vec![],
        });
        // arcs p0→p2 and p2→p4 are both 110°: equal diagonals sharing p2.
        let p = degrees_exact(&[0.0, 47.0, 110.0, 162.0, 220.0, 300.0]);
        let d = classify_degeneracy(&p);
        assert_eq!(d.class, DegeneracyClass::NoSymmetricQuadruple);
        assert_eq!(d.witnesses, vec![Witness::EqualPair([0, 2], [2, 4])]);
        assert_eq!(degeneracy_class(&p), DegeneracyClass::NoSymmetricQuadruple);
        let sq = classify_degeneracy(&square());
        assert_eq!(sq.witnesses, vec![Witness::Quadruple([0, 1, 2, 3])]);
    }

    #[test]
    fn lexicographic_order_of_angle_points() {
        // Regular pentagon: 144° and 216° share x; 216° has smaller y.
        let p = regular(5);
        let mut idx: Vec<usize> = (0..5).collect();
        idx.sort_by(|&a, &b| p.lexicographic_cmp(a, b));
        assert_eq!(idx, vec![3, 2, 4, 1, 0]);
    }
}
