//! Symbolic computation for degree-one generalized Weyl algebras
//! `A = R(sigma, f)` over `k[z]` or `k[z, z^-1]` with exact rational
//! coefficients.
//!
//! ```
//! use gwa_kit::{gwa_validate, normalize, BaseFlavor, FactoredPoly, Rational};
//!
//! let f = FactoredPoly::new(vec![
//!     (Rational::from_integer(0), 1),
//!     (Rational::from_integer(1), 2),
//!     (Rational::from_integer(3), 1),
//! ])?;
//! let a = gwa_validate(BaseFlavor::Additive, f, false)?;
//! let n = normalize(&a)?;
//! assert_eq!(n.canonical.f().to_string(), "z^4");
//! # Ok::<(), gwa_kit::Error>(())
//! ```

pub mod algebra;
pub mod bring;
pub mod error;
pub mod gwa;
pub mod orbit;
pub mod projectives;
pub mod simples;
pub mod translation;

pub use algebra::{
    apply_sigma, poly_gcd, sigma_point, BaseFlavor, FactoredPoly, LaurentPoly, Poly, RatFun, Rational,
    SigmaAction,
};
pub use bring::{
    b_mul, b_props, h_factor, h_product, minimal_primes, noeth_chain_check, oracle_dim_limit, presentation,
    standard_indices, BElement, BIndex, BPresentation, BProps, ChainCertificate, GammaDegree, MinimalPrime,
    MinimalPrimes, DEFAULT_MAX_ORACLE_DIM,
};
pub use error::{Error, Result};
pub use gwa::{embed_in_qgr, gwa_mul, gwa_validate, qgr_mul, BaseKind, Gwa, GwaElement, GwaSpec, QGrElement};
pub use orbit::{
    congruence, global_dimension, is_simple, orbit_decomposition, GlobalDimension, Orbit, OrbitClass,
    OrbitDecomposition, OrbitMember,
};
pub use projectives::{
    canonical_rep, check_sc, coverage, factor_profile, from_profile, involute, involution_factor,
    is_projective_sc, max_embedding, profile_iso, sc_iso, shift_sc, surjects, validate_sc, CoverageEntry,
    CoverageReport, FactorProfile, ProfileEntry, StructureConstants,
};
pub use simples::{
    classify_simples, graded_dim, indecomposable_support, support_point, DegreeRange,
    IndecomposableDescriptor, NondegenerateFamily, OrbitSimples, Presentation, Presented, Sign,
    SimpleDescriptor, SimpleKind, SimpleListing, SimpleModule, SupportPoint,
};
pub use translation::{
    apply_move, legal_moves, morita_context, normalize, replay_step, replay_trace, Direction,
    EquivalenceLevel, GeneratorCheck, MoritaReport, Move, MoveOutcome, MovePart, Normalization, TraceStep,
};
