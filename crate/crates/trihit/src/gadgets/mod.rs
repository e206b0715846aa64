//! Hardness-instance generators: k-polygons and the 3-SAT to 2-DIR
//! reduction, with crenellation and verification.

mod cnf;
mod crenellate;
mod layout;
mod polygon;
mod reduction;
mod verify;

pub use cnf::{brute_sat, dpll, preprocess_formula, unsat_standin, CnfFormula, Preprocessed, SAT_MAX_VARS};
pub use crenellate::crenellate;
pub use layout::{PolyCycle, PolygonIds};
pub use polygon::{figure_three_polygon, make_k_polygon};
pub use reduction::{base_eps, check_reduction, max_degree, sat_to_2dir, ReductionOutput};
pub use verify::{decode_assignment, th_at_k_structural, verify_reduction, VerifyReport, VERIFY_DP_MAX_N, VERIFY_MAX_CLAUSES, VERIFY_MAX_VARS};
