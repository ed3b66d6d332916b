//! Exact and numeric certificates: `ℚ(√2)` arithmetic, the axial program's
//! dual certificate, the folding program evaluator and closed-form bounds.

pub mod axial;
pub mod bounds;
pub mod folding_program;
pub mod qsqrt2;

pub use axial::{
    axial_primal_feasible, dual_feasible_case3, dual_objective_case3, theorem11_lower_bound,
    theorem11_value, AxialProgramPoint, Check, DualPoint, Theorem11,
};
pub use bounds::{
    axial_upper_chain, bound_axlb, bound_fary_redei, bound_glb, bound_pyramid, bounds_table,
    separation_check, BoundsRow, ExactValue,
};
pub use folding_program::{
    folding_program_residuals, folding_program_search, FoldingProgramPoint, FoldingSearchResult,
    Variant,
};
pub use qsqrt2::QSqrt2;
