//! heunlab: an exact-arithmetic workbench for the Racah, Bannai-Ito,
//! Heun-Racah and Heun-Bannai-Ito algebras.
//!
//! The four algebras are realized as finite matrices of rationals on their
//! natural grids, and every defining relation, Casimir element,
//! specialization, embedding and parameter dictionary is verified at matrix
//! level with zero-tolerance equality. Claimed closed forms for structure
//! constants are never trusted: an exact linear-algebra fitter recomputes
//! them from the matrices and mismatches are reported with both values.
//!
//! Module map:
//! - [`exact`]: rationals, dense matrices, characteristic polynomials, exact solves
//! - [`relalg`]: a small relation DSL plus the structure-constant fitter
//! - [`grids`]: Racah and Bannai-Ito grids, difference/reflection operator builders
//! - [`racah`]: the Racah algebra in its difference realization
//! - [`heun_racah`]: the Heun-Racah operator and algebra
//! - [`bannai_ito`]: the Bannai-Ito algebra and the Racah embedding inside it
//! - [`heun_bi`]: the Heun-Bannai-Ito operator and algebra
//! - [`cli`]: configuration, verification suites, reports, exports

pub mod bannai_ito;
pub mod cli;
pub mod exact;
pub mod grids;
pub mod heun_bi;
pub mod heun_racah;
pub mod racah;
pub mod relalg;

pub use exact::{Rat, RatMatrix};
