//! Exact linear programming and the systole and cogirth computations built on it.

mod bounds;
mod cogirth;
mod lp;
mod systole;
mod tables;

pub use bounds::{
    bound_decomposable, bound_large_girth, bound_small_cycle, c_table, embedding_systole_bound, large_girth_case,
    s_table,
};
pub use cogirth::{
    c_of_rep, cogirth, cogirth_masks, functional_weight, min_functional, CogirthResult, MAX_COGIRTH_RANK,
};
pub use lp::{lp_max, Constraint, LpSolution, LpStatus};
pub use systole::{systole, systole_bruteforce, systole_weighted, SystoleResult};
pub use tables::{exhaustive_max, verify_tables, CheckStatus, TableCheck, TablesReport, MAX_TABLE_RANK};
