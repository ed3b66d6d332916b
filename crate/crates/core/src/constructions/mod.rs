//! Extremal shape families, closed forms and constructive lemmas.

mod cs_fold;
mod parallelogram;
mod quad;
mod rectangle;

pub use cs_fold::{cs_fold_construction, CsFoldReport, FoldCase, RECTANGLE_RATIO};
pub use parallelogram::{
    folding_parallelogram_closed_form, parallelogram, parallelogram_grid, ParallelogramParam, PHI,
};
pub use quad::{
    appendix_b_table, case_a_max_angle, case_a_numeric, case_a_ratio, case_c_engine, case_c_m,
    case_c_max_angle, case_c_numeric, case_c_overlap, quad_area, quad_family, AppendixBRow,
    MAX_EPSILON, QUAD_LIMIT,
};
pub use rectangle::{
    inscribed_rectangle, is_centrally_symmetric, largest_cap_lower_bound, RectangleInBody,
    SWEEP_SAMPLES,
};
