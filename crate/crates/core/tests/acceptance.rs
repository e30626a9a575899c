//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::cmp::Ordering;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use concyclic::circle_model::{degeneracy_class, CirclePointSet, DegeneracyClass, TurnFraction};
use concyclic::degenerate::{enumerate_optimal, regular_count, solve_canonical, DEFAULT_LIMIT};
use concyclic::fast_solver::{solve_extended, solve_simplified, solve_simplified_counted};
use concyclic::instances::{equal_ears, has_equal_ear_pattern, random, random_no_symmetric, regular};
use concyclic::oracle::{enumerate_triangulations, optimal_set};
use concyclic::triangulation::{angle_vector, compare_lex, length_vector, Diagonal, Triangulation};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn unique_winner(p: &CirclePointSet) -> Result<Triangulation, String> {
    let set = optimal_set(p).map_err(|e| e.to_string())?;
    check(set.winners.len() == 1, || format!("oracle found {} winners", set.winners.len()))?;
    Ok(set.winners.into_iter().next().unwrap())
}

fn criterion_1() -> Outcome {
    let mut total = 0;
    for n in 5..=12usize {
        for i in 0..500u64 {
            let seed = (n as u64) << 32 | i;
            let p = random_no_symmetric(n, seed).map_err(|e| e.to_string())?;
            check(degeneracy_class(&p) == DegeneracyClass::NoSymmetricQuadruple, || {
                format!("n={n} seed={seed}: wrong class")
            })?;
            let want = unique_winner(&p).map_err(|e| format!("n={n} seed={seed}: {e}"))?;
            let got = solve_extended(&p).map_err(|e| format!("n={n} seed={seed}: {e}"))?;
            check(got == want, || format!("n={n} seed={seed}: got {got:?}, oracle {want:?}"))?;
            total += 1;
        }
    }
    Ok(format!("{total} instances, n = 5..12"))
}

fn criterion_2() -> Outcome {
    let mut total = 0;
    for i in 0..500u64 {
        let n = 4 + (i % 9) as usize;
        let p = random(n, 1_000 + i).map_err(|e| e.to_string())?;
        check(degeneracy_class(&p) == DegeneracyClass::DistinctDiagonals, || {
            format!("n={n} seed={}: wrong class", 1_000 + i)
        })?;
        let want = unique_winner(&p)?;
        let s = solve_simplified(&p).map_err(|e| e.to_string())?;
        let e = solve_extended(&p).map_err(|e| e.to_string())?;
        check(s == want && e == want, || {
            format!("n={n} seed={}: simplified {s:?}, extended {e:?}, oracle {want:?}", 1_000 + i)
        })?;
        total += 1;
    }
    Ok(format!("{total} instances, n = 4..12"))
}

fn criterion_3() -> Outcome {
    let expected = [5u64, 12, 28, 64, 144, 320];
    let mut counts = Vec::new();
    for (n, &want) in (5..=10usize).zip(&expected) {
        let p = regular(n).unwrap();
        let got = enumerate_optimal(&p, DEFAULT_LIMIT).map_err(|e| e.to_string())?;
        check(!got.truncated, || format!("n={n}: truncated"))?;
        let count = got.triangulations.len() as u64;
        check(count == want && regular_count(n) == Ok(want), || {
            format!("n={n}: {count} winners, expected {want}")
        })?;
        let oracle = optimal_set(&p).unwrap().winners;
        check(got.triangulations == oracle, || format!("n={n}: winner set differs from oracle"))?;
        counts.push(count);
    }
    Ok(format!("counts {counts:?}"))
}

fn structural_instances(n: usize) -> Vec<CirclePointSet> {
    let mut v = vec![regular(n).unwrap()];
    for s in 0..3u64 {
        v.push(random(n, 77 + s).unwrap());
    }
    if n >= 5 {
        v.push(random_no_symmetric(n, 91).unwrap());
    }
    v
}

fn criterion_4() -> Outcome {
    let (mut winners, mut triangulations, mut pairs) = (0u64, 0u64, 0u64);
    for n in 4..=9usize {
        for p in structural_instances(n) {
            for t in optimal_set(&p).unwrap().winners {
                // Ears counted by the vertex they cut off; on a quad the one
                // diagonal cuts off two.
                let ears = (0..n).filter(|&a| t.contains(&Diagonal::ear(a, n))).count();
                check(t.dual_path().is_path() && ears == 2, || {
                    format!("n={n}: winner {t:?} has {ears} ears or a non-path dual")
                })?;
                winners += 1;
            }
            let all: Vec<Triangulation> = enumerate_triangulations(n).unwrap().collect();
            let lengths: Vec<_> = all.iter().map(|t| length_vector(t, &p)).collect();
            let angles: Vec<_> = all.iter().map(|t| angle_vector(t, &p)).collect();
            for (t, lv) in all.iter().zip(&lengths) {
                let shortest = lv.entries()[0];
                let (a, b) = shortest.endpoints();
                let ears = t.ears();
                let is_ear = ears.iter().any(|e| {
                    let ea = p.arc_between(e.lo(), e.hi()).unwrap();
                    concyclic::circle_model::chord_compare(&ea, &shortest) == Ordering::Equal
                });
                check(is_ear, || format!("n={n}: shortest diagonal ({a}, {b}) of {t:?} is not an ear"))?;
                triangulations += 1;
            }
            for i in 0..all.len() {
                for j in i + 1..all.len() {
                    let l = compare_lex(&lengths[i], &lengths[j]).unwrap();
                    let a = compare_lex(&angles[i], &angles[j]).unwrap();
                    check(l == a, || {
                        format!("n={n}: {:?} vs {:?}: length {l:?}, angle {a:?}", all[i], all[j])
                    })?;
                    pairs += 1;
                }
            }
        }
    }
    Ok(format!(
        "{winners} winners path-shaped, {triangulations} shortest-is-ear, {pairs} pairs agree"
    ))
}

fn criterion_5() -> Outcome {
    let mut rows = Vec::new();
    let mut big_time = 0.0;
    for e in 10..=18u32 {
        let n = 1usize << e;
        let p = random(n, 5_000 + e as u64).map_err(|e| e.to_string())?;
        let start = Instant::now();
        let (t, ops) = solve_simplified_counted(&p).map_err(|err| format!("n=2^{e}: {err}"))?;
        let secs = start.elapsed().as_secs_f64();
        check(t.diagonals().len() == n - 3, || format!("n=2^{e}: wrong diagonal count"))?;
        if e == 18 {
            big_time = secs;
        }
        rows.push((e, ops.chord_comparisons as f64 / n as f64, ops.total() as f64 / n as f64));
    }
    let ratio = |f: fn(&(u32, f64, f64)) -> f64| {
        let v: Vec<f64> = rows.iter().map(f).collect();
        v.iter().cloned().fold(f64::MIN, f64::max) / v.iter().cloned().fold(f64::MAX, f64::min)
    };
    let (rc, rt) = (ratio(|r| r.1), ratio(|r| r.2));
    for (e, c, t) in &rows {
        println!("    n=2^{e}: comparisons/n {c:.3}, ops/n {t:.3}");
    }
    check(rc <= 2.0 && rt <= 2.0, || format!("ops/n ratio {rc:.3} / {rt:.3} exceeds 2"))?;
    Ok(format!(
        "max/min comparisons/n {rc:.3}, ops/n {rt:.3}; n=2^18 solved in {big_time:.3}s (not asserted)"
    ))
}

fn criterion_6() -> Outcome {
    let mut total = 0;
    for i in 0..100u64 {
        let n = 9 + (i % 4) as usize;
        let p = equal_ears(n, 300 + i).map_err(|e| e.to_string())?;
        check(
            has_equal_ear_pattern(&p)
                && degeneracy_class(&p) == DegeneracyClass::NoSymmetricQuadruple,
            || format!("n={n} seed={}: not an equal-ears instance", 300 + i),
        )?;
        let want = unique_winner(&p)?;
        let got = solve_extended(&p).map_err(|e| e.to_string())?;
        check(got == want, || format!("n={n} seed={}: got {got:?}, oracle {want:?}", 300 + i))?;
        total += 1;
    }
    Ok(format!("{total} instances, n = 9..12"))
}

fn cartesian_regular(n: usize) -> Vec<[f64; 2]> {
    (0..n)
        .map(|k| {
            let t = std::f64::consts::TAU * k as f64 / n as f64;
            [3.0 + 2.0 * t.cos(), -1.0 + 2.0 * t.sin()]
        })
        .collect()
}

fn diagonal_coords(p: &CirclePointSet, t: &Triangulation) -> Vec<[[i64; 2]; 2]> {
    let key = |q: [f64; 2]| [(q[0] * 1e6).round() as i64, (q[1] * 1e6).round() as i64];
    let mut v: Vec<[[i64; 2]; 2]> = t
        .diagonals()
        .iter()
        .map(|d| {
            let mut e = [key(p.point(d.lo())), key(p.point(d.hi()))];
            e.sort();
            e
        })
        .collect();
    v.sort();
    v
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let square = vec![[1.0, 0.0], [0.0, 1.0], [-1.0, 0.0], [0.0, -1.0]];
    let mut cases = vec![square];
    cases.extend((5..=9).map(cartesian_regular));
    for pts in cases {
        let n = pts.len();
        let p = CirclePointSet::fit_circle(&pts).map_err(|e| e.to_string())?;
        let t = solve_canonical(&p).map_err(|e| e.to_string())?;
        let winners = optimal_set(&p).unwrap().winners;
        check(winners.contains(&t), || format!("n={n}: canonical answer is not optimal"))?;
        let reference = diagonal_coords(&p, &t);
        for _ in 0..10 {
            let again = solve_canonical(&p).unwrap();
            check(again == t, || format!("n={n}: answer changed between runs"))?;
        }
        for _ in 0..10 {
            let mut shuffled = pts.clone();
            shuffled.shuffle(&mut rng);
            let q = CirclePointSet::fit_circle(&shuffled).map_err(|e| e.to_string())?;
            let u = solve_canonical(&q).unwrap();
            check(diagonal_coords(&q, &u) == reference, || {
                format!("n={n}: answer depends on input order")
            })?;
        }
    }
    Ok("square and regular 5..9-gons, 10 runs and 10 permutations each".into())
}

/// Exact chord keys over a common denominator: a smaller key is a longer
/// chord.
fn brute_class(p: &CirclePointSet) -> DegeneracyClass {
    let n = p.len();
    let fr: Vec<(u64, u64)> = p
        .thetas()
        .iter()
        .map(|t| match *t {
            TurnFraction::Exact { num, den } => (num, den),
            TurnFraction::Float(_) => unreachable!("exact instances only"),
        })
        .collect();
    let gcd = |mut a: u64, mut b: u64| {
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a
    };
    let l = fr.iter().fold(1u64, |l, &(_, d)| l / gcd(l, d) * d) as i128;
    let pos: Vec<i128> = fr.iter().map(|&(num, d)| num as i128 * (l / d as i128)).collect();
    let key = |i: usize, j: usize| {
        let s = (pos[j] - pos[i]).rem_euclid(l);
        (l - 2 * s).abs()
    };
    let is_diag = |i: usize, j: usize| j >= i + 2 && !(i == 0 && j == n - 1);
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    if key(a, c) == key(b, d) {
                        return DegeneracyClass::Degenerate;
                    }
                }
            }
        }
    }
    let diags: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| is_diag(i, j))
        .collect();
    for (x, &(a, b)) in diags.iter().enumerate() {
        for &(c, d) in &diags[x + 1..] {
            if key(a, b) == key(c, d) {
                return DegeneracyClass::NoSymmetricQuadruple;
            }
        }
    }
    DegeneracyClass::DistinctDiagonals
}

fn criterion_8() -> Outcome {
    let mut cases: Vec<(CirclePointSet, DegeneracyClass)> = Vec::new();
    for n in 4..=10 {
        cases.push((regular(n).unwrap(), DegeneracyClass::Degenerate));
        for s in 0..10 {
            cases.push((random(n, 900 + s).unwrap(), DegeneracyClass::DistinctDiagonals));
        }
    }
    for n in 8..=10 {
        for s in 0..10 {
            cases.push((equal_ears(n, 700 + s).unwrap(), DegeneracyClass::NoSymmetricQuadruple));
        }
    }
    for n in 5..=10 {
        for s in 0..10 {
            cases.push((random_no_symmetric(n, 800 + s).unwrap(), DegeneracyClass::NoSymmetricQuadruple));
        }
    }
    for (p, want) in &cases {
        let got = degeneracy_class(p);
        let brute = brute_class(p);
        check(got == *want && brute == *want, || {
            format!("n={}: classifier {got}, brute force {brute}, expected {want}", p.len())
        })?;
    }
    Ok(format!("{} instances, n = 4..10", cases.len()))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("oracle equivalence (no symmetric quadruple)", criterion_1),
        ("simplified/extended/oracle agreement", criterion_2),
        ("regular-polygon counts", criterion_3),
        ("structural lemmas", criterion_4),
        ("linear operation count", criterion_5),
        ("equal-ear casework", criterion_6),
        ("canonical determinism", criterion_7),
        ("degeneracy classifier", criterion_8),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run))
            .unwrap_or_else(|_| Err("panicked".to_string()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {}: {name} ({detail}) [{secs:.1}s]", k + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {}: {name}: {why} [{secs:.1}s]", k + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
