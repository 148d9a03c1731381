//! Exact Seiberg-Witten polynomials of 3-manifolds built from knot
//! complements and surface bundles, their folds by the Euler class of a free
//! circle action, and the resulting symplectic obstructions.

pub mod alexander;
pub mod error;
pub mod fold;
pub mod laurent;
pub mod manifolds;
pub mod obstruction;

pub use alexander::{alexander_from_seifert, validate_alexander, KnotRecord, KnotTable, SeifertMatrix};
pub use error::{Error, ErrorKind, Result};
pub use fold::{
    circle_bundle_sw_closed_form, circle_bundle_sw_direct, equal_up_to_sign, fold,
    fold_bruteforce, fold_or_product, fold_polynomial, is_injective_fold, EulerClass,
    FoldOutcome, FoldedSW, QuotientLattice,
};
pub use laurent::{Basis, Exponent, LaurentPoly};
pub use manifolds::{
    fiber_sum_with_knot, surface_times_circle, theorem1_applicable, three_torus, ThreeManifold,
};
pub use obstruction::{euler_search, stabilization_note, taubes_report, ObstructionReport, SearchResult};
