//! Auxiliary primes and Frobenius data for the two witness curves, the
//! admissibility conditions they must meet, and the curve search over `F_q`.

mod admissible;
mod search;
mod select;

pub use admissible::{delta0, weil_admissible, WeilAdmissibility};
pub use search::{
    search_curve, LexicographicSearch, RandomSearch, SearchStrategy, SearchTarget,
};
pub use select::{check_selection, select_aux, AuxiliarySelection, SCAN_LIMIT};
