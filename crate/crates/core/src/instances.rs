//! Seeded instance generators. All instances are exact.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::circle_model::{chord_compare, degeneracy_class, CirclePointSet, DegeneracyClass};
use crate::error::{Error, Result};
use crate::fast_solver::{SolverState, CLASSIFY_LIMIT};

/// Common denominator of [`random`] positions.
pub const RANDOM_DENOMINATOR: u64 = 1 << 60;

const MAX_ATTEMPTS: usize = 100_000;

fn check_n(n: usize, min: usize) -> Result<()> {
    if n < min {
        return Err(if min == 4 { Error::TooFewPoints(n) } else { Error::TooSmall { n, min } });
    }
    Ok(())
}

/// The regular n-gon, `p_k` at `k/n` turns.
pub fn regular(n: usize) -> Result<CirclePointSet> {
    check_n(n, 4)?;
    let fr: Vec<(i64, u64)> = (0..n).map(|k| (k as i64, n as u64)).collect();
    CirclePointSet::from_turns(&fr)
}

fn sample(rng: &mut ChaCha8Rng, n: usize, den: u64) -> Option<CirclePointSet> {
    let mut nums: Vec<u64> = (0..n).map(|_| rng.gen_range(0..den)).collect();
    nums.sort_unstable();
    nums.dedup();
    if nums.len() < n {
        return None;
    }
    let fr: Vec<(i64, u64)> = nums.iter().map(|&x| (x as i64, den)).collect();
    CirclePointSet::from_turns(&fr).ok()
}

/// Uniform random positions. Up to [`CLASSIFY_LIMIT`] points the result is
/// verified to have pairwise distinct diagonal lengths; beyond that this
/// holds with overwhelming probability.
pub fn random(n: usize, seed: u64) -> Result<CirclePointSet> {
    check_n(n, 4)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_ATTEMPTS {
        let Some(p) = sample(&mut rng, n, RANDOM_DENOMINATOR) else { continue };
        if n > CLASSIFY_LIMIT || degeneracy_class(&p) == DegeneracyClass::DistinctDiagonals {
            return Ok(p);
        }
    }
    Err(Error::PreconditionViolated("no distinct-diagonal sample found".into()))
}

/// Random positions on a grid of `grid` equal steps, so that equal chord
/// lengths are common.
pub fn random_on_grid(n: usize, grid: u64, seed: u64) -> Result<CirclePointSet> {
    check_n(n, 4)?;
    if grid < n as u64 {
        return Err(Error::TooSmall { n: grid as usize, min: n });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        if let Some(p) = sample(&mut rng, n, grid) {
            return Ok(p);
        }
    }
}

/// Random instance whose class is exactly
/// [`DegeneracyClass::NoSymmetricQuadruple`]: some diagonals share a
/// length, but no two of them cross.
pub fn random_no_symmetric(n: usize, seed: u64) -> Result<CirclePointSet> {
    check_n(n, 5)?;
    // About one equal pair per instance.
    let diagonals = (n * (n - 3) / 2) as u64;
    let grid = (diagonals * diagonals).max(2 * n as u64);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_ATTEMPTS {
        let Some(p) = sample(&mut rng, n, grid) else { continue };
        if degeneracy_class(&p) == DegeneracyClass::NoSymmetricQuadruple {
            return Ok(p);
        }
    }
    Err(Error::PreconditionViolated("no sample without symmetric quadruples found".into()))
}

/// Instance whose four longest ears satisfy `|se0| > |se1| > |se2| = |se3|`
/// with `se2`, `se3` sharing an endpoint, and which has no symmetric
/// quadruple.
///
/// A random instance is bent so that the ear two steps from the
/// third-longest ear gets the same span: moving `p_{a+3}` to
/// `p_{a+1} + arc(p_{a-1}, p_{a+1})` (or symmetrically `p_{a-3}`).
pub fn equal_ears(n: usize, seed: u64) -> Result<CirclePointSet> {
    check_n(n, 8)?;
    let den: u64 = 1 << 40;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_ATTEMPTS {
        let Some(p) = sample(&mut rng, n, den) else { continue };
        let a = SolverState::new(&p, 4).top()[2];
        let nums = p.exact_positions().expect("exact sample").1.to_vec();
        let at = |k: isize| nums[(a as isize + k).rem_euclid(n as isize) as usize];
        let ear = (at(1) + den - at(-1)) % den;
        let candidates = [(3isize, (at(1) + ear) % den), (-3, (at(-1) + den - ear) % den)];
        for (offset, pos) in candidates {
            let (lo, hi) = if offset > 0 { (at(2), at(4)) } else { (at(-4), at(-2)) };
            if !strictly_between(lo, pos, hi, den) {
                continue;
            }
            let mut moved = nums.clone();
            moved[(a as isize + offset).rem_euclid(n as isize) as usize] = pos;
            let fr: Vec<(i64, u64)> = moved.iter().map(|&x| (x as i64, den)).collect();
            let Ok(q) = CirclePointSet::from_turns(&fr) else { continue };
            if has_equal_ear_pattern(&q)
                && degeneracy_class(&q) == DegeneracyClass::NoSymmetricQuadruple
            {
                return Ok(q);
            }
        }
    }
    Err(Error::PreconditionViolated("no equal-ears instance found".into()))
}

fn strictly_between(lo: u64, x: u64, hi: u64, den: u64) -> bool {
    let span = |a: u64, b: u64| (b + den - a) % den;
    x != lo && x != hi && span(lo, x) < span(lo, hi)
}

/// `|se0| > |se1| > |se2| = |se3|` among the four longest ears.
pub fn has_equal_ear_pattern(p: &CirclePointSet) -> bool {
    let st = SolverState::new(p, 4);
    let t = st.top();
    if t.len() < 4 {
        return false;
    }
    let arc = |k: usize| st.ear(t[k]).arc;
    use std::cmp::Ordering::{Equal, Greater};
    chord_compare(&arc(0), &arc(1)) == Greater
        && chord_compare(&arc(1), &arc(2)) == Greater
        && chord_compare(&arc(2), &arc(3)) == Equal
}
