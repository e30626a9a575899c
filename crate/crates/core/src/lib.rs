//! Canonical max-min angle (Delaunay) triangulations of concyclic points.
//!
//! For points on a common circle every triangulation is Delaunay, so the
//! Delaunay triangulation is ill-defined. Maximizing the sorted angle vector
//! lexicographically picks one out, and on a circle this is the same as
//! maximizing the sorted vector of diagonal lengths. The optimum is unique
//! unless four of the points form a symmetric quadruple (two crossing
//! diagonals of equal length).
//!
//! - [`circle_model`]: point sets, exact and floating chord comparison,
//!   degeneracy classification.
//! - [`triangulation`]: validity, ears, dual path, score vectors.
//! - [`oracle`]: brute-force enumeration and scoring (n ≤ 16).
//! - [`fast_solver`]: linear-time ear selection for inputs without
//!   symmetric quadruples.
//! - [`degenerate`]: all optimal triangulations, and a deterministic
//!   tie-break, for inputs with symmetric quadruples.
//! - [`instances`]: seeded instance generators.
//!
//! ```
//! use concyclic::{circle_model::CirclePointSet, fast_solver::solve_simplified};
//!
//! let p = CirclePointSet::from_degrees_exact(&[0.0, 47.0, 110.0, 162.0, 223.0, 300.0]).unwrap();
//! let t = solve_simplified(&p).unwrap();
//! let d: Vec<_> = t.diagonals().iter().map(|d| d.endpoints()).collect();
//! assert_eq!(d, vec![(0, 3), (1, 3), (3, 5)]);
//! ```

pub mod circle_model;
pub mod degenerate;
mod error;
pub mod fast_solver;
pub mod instances;
pub mod oracle;
pub mod triangulation;

pub use error::{Error, Result};
