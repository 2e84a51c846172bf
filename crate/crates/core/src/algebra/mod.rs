//! The quadratic algebra `K⟨x¹,…,xⁿ⟩/[∂_iα]` realized degree by degree.

pub mod checks;
pub mod graded;
pub mod hilbert;
pub mod koszul;
pub mod presentation;
pub mod tensor;

pub use checks::{
    bigrading_check, central_generators, centrality_check, congruent, derivation_descends, ideal_membership,
    matrix_identity_report, tensor_factorization_check, verify_matrix_identity_lemma, BigradingReport, Derivation,
    FactorizationReport, MatrixIdentityReport, TripleDerivation,
};
pub use graded::{GradedAlgebra, GradedComponentBasis};
pub use hilbert::{
    graded_dimension, graded_dimensions, hilbert_series, predicted_series, Certificate, CertificateField,
    HilbertReport, DEFAULT_HILBERT_DEGREE,
};
pub use koszul::{koszul_complex_check, KoszulExactnessReport, KoszulSlice, DEFAULT_KOSZUL_DEGREE};
pub use presentation::QuadraticPresentation;
pub use tensor::Tensor;
