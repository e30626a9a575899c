//! Input documents.

use std::f64::consts::TAU;
use std::io::Read;

use concyclic::circle_model::CirclePointSet;
use serde::Deserialize;
use serde_json::Value;

use crate::failure::Failure;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    pub points: Option<Vec<[f64; 2]>>,
    pub angles_deg: Option<Vec<f64>>,
    pub angles_turns: Option<Vec<String>>,
    pub mode: Option<NumberMode>,
    pub labels: Option<Vec<Value>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NumberMode {
    Exact,
    Float,
}

/// A parsed input: the point set plus how to name its points.
pub struct Input {
    pub points: CirclePointSet,
    /// Output label of each input point, by input position.
    pub labels: Vec<Value>,
    pub cartesian: bool,
}

impl Input {
    /// Output label of sorted point `i`.
    pub fn label(&self, i: usize) -> Value {
        self.labels[self.points.labels()[i]].clone()
    }

    pub fn pair(&self, a: usize, b: usize) -> Vec<Value> {
        vec![self.label(a), self.label(b)]
    }
}

pub fn read_source(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::io(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| Failure::io(format!("{path}: {e}")))
    }
}

pub fn parse_turn(s: &str) -> Result<(i64, u64), Failure> {
    let bad = || Failure::parse(format!("turn fraction {s:?} is not of the form num/den"));
    let (num, den) = s.trim().split_once('/').ok_or_else(bad)?;
    let num: i64 = num.trim().parse().map_err(|_| bad())?;
    let den: u64 = den.trim().parse().map_err(|_| bad())?;
    if den == 0 {
        return Err(Failure::parse(format!("turn fraction {s:?} has a zero denominator")));
    }
    Ok((num, den))
}

pub fn parse(text: &str, force_exact: bool) -> Result<Input, Failure> {
    let doc: InputDocument =
        serde_json::from_str(text).map_err(|e| Failure::parse(e.to_string()))?;
    let sources = [doc.points.is_some(), doc.angles_deg.is_some(), doc.angles_turns.is_some()];
    if sources.iter().filter(|&&s| s).count() != 1 {
        return Err(Failure::parse(
            "exactly one of points, angles_deg, angles_turns is required",
        ));
    }
    let exact = force_exact || doc.mode == Some(NumberMode::Exact);
    if force_exact && doc.mode == Some(NumberMode::Float) {
        return Err(Failure::parse("--exact conflicts with \"mode\": \"float\""));
    }
    let (points, cartesian) = if let Some(pts) = &doc.points {
        if exact {
            return Err(Failure::parse("Cartesian points are always processed in floating point"));
        }
        (CirclePointSet::fit_circle(pts), true)
    } else if let Some(deg) = &doc.angles_deg {
        let p = if exact {
            CirclePointSet::from_degrees_exact(deg)
        } else {
            CirclePointSet::from_degrees(deg)
        };
        (p, false)
    } else {
        let turns = doc
            .angles_turns
            .as_ref()
            .unwrap()
            .iter()
            .map(|s| parse_turn(s))
            .collect::<Result<Vec<_>, _>>()?;
        let p = if doc.mode == Some(NumberMode::Float) {
            let rad: Vec<f64> = turns.iter().map(|&(n, d)| TAU * n as f64 / d as f64).collect();
            CirclePointSet::from_radians(&rad)
        } else {
            CirclePointSet::from_turns(&turns)
        };
        (p, false)
    };
    let points = points.map_err(Failure::from)?;
    let n = points.len();
    let labels = match doc.labels {
        Some(l) if l.len() != n => {
            return Err(Failure::from(concyclic::Error::LengthMismatch(l.len(), n)))
        }
        Some(l) => l,
        None => (0..n).map(Value::from).collect(),
    };
    Ok(Input { points, labels, cartesian })
}
