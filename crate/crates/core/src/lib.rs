//! Exact effective resistance on resistor graphs.
//!
//! Resistances are computed in exact rational arithmetic by four
//! independent routes:
//!
//! - Laplacian determinant ratios ([`resistance_det`]),
//! - grounded linear solves ([`resistance_solve`], [`resistance_matrix`]),
//! - circuit reduction by star-mesh elimination ([`reduce_to_pair`]),
//! - per-family closed formulas and linear recurrences ([`closed_form`],
//!   [`recursion_form`]) for paths, linear 2-trees, ladders, fans and wheels.
//!
//! ```
//! use ohmnet_core::{closed_form, resistance_det, Family, FamilySpec};
//!
//! let spec = FamilySpec::new(Family::Linear2Tree, 6).unwrap();
//! let g = spec.generate();
//! let r = resistance_det(&g, 1, 6).unwrap();
//! assert_eq!(r, closed_form(&spec, 1, 6).unwrap());
//! assert_eq!(r.to_string(), "15/11");
//! ```

pub mod closed_forms;
pub mod error;
pub mod families;
pub mod graph;
pub mod matrix;
pub mod rational;
pub mod recurrence;
pub mod resistance;
pub mod transform;

pub use closed_forms::{
    closed_form, conjecture_delta_scan, conjecture_delta_scan_with_target, covers,
    decreasing_with_lag, linear3tree_sequences, monotone_from, one_fourteenth, recursion_form,
    DeltaRow, Linear3TreeSequences,
};
pub use error::{Error, Result};
pub use families::{generate, Family, FamilySpec};
pub use graph::{parse_graph, Graph, Relabeled};
pub use matrix::{LuFactors, RatMatrix};
pub use rational::Rational;
pub use recurrence::{
    fib, ladder_h, lucas, verify_recurrence, IndexedSequence, RecurrenceSpec, Verdict,
};
pub use resistance::{
    metric_check, metric_check_matrix, resistance_det, resistance_matrix, resistance_solve, Method,
    MetricVerdict, ResistanceReport,
};
pub use transform::{
    delta_to_y, eliminate_vertex, eliminate_vertices, reduce_to_pair, y_to_delta, ReductionStep,
    ReductionTrace, Rule,
};
