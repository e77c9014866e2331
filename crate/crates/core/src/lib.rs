//! Quadrics through generic configurations of linear spaces.
//!
//! For a weight vector `(n; m_1, ..., m_s)` the [`formula`] module predicts
//! `dim (I_Λ)_2`, the number of independent quadrics containing a generic
//! union of linear spaces `Λ_i ≅ P^{m_i}` in `P^n`. The [`oracle`] module
//! computes the same number exactly for explicit configurations over a
//! prime field, so every prediction can be checked against random samples.
//! The [`apolarity`] module applies the count to writing quadratic forms as
//! sums of forms in prescribed families of linear forms.
//!
//! ```
//! use quadrica::{expected_dim_i2, generic_dim_i2, PrimeField, WeightVector};
//!
//! let w = WeightVector::new(9, vec![5, 5, 5]).unwrap();
//! assert_eq!(expected_dim_i2(&w).dim_i2, 1);
//! let report = generic_dim_i2(&w, 3, PrimeField::default(), 0).unwrap();
//! assert!(report.agree);
//! ```

pub mod apolarity;
pub mod arrangement;
pub mod cli;
pub mod error;
pub mod formula;
pub mod linalg;
pub mod oracle;
pub mod sweep;

pub use apolarity::{
    annihilator_configuration, annihilator_space, decompose_quadric, decompose_quadric_exact,
    star_holds_d2, star_holds_d2_exact, DecompositionWitness, FormFamily, StarReport,
};
pub use arrangement::{
    pairwise_vertex, project_from, random_configuration, Configuration, LinearSpace, WeightVector,
};
pub use error::{Error, Result};
pub use formula::{
    dim_dl, disjoint_dim, expected_dim_i2, fano_dim, fiber_deficiency, lemma_bound,
    max_plane_dim_on_rank_r, tau_v, CaseLabel, Expectation, FiberReport,
};
pub use linalg::{DenseMatrix, IntMatrix, PrimeField, DEFAULT_PRIME};
pub use oracle::{
    constraint_matrix, dim_i2_exact, generic_dim_i2, kernel_quadrics, OracleReport, QuadricCoeffs,
};
