//! Minimal linear codes over finite fields and the vectorial blocking sets
//! that define them.
//!
//! A code is given by a defining multiset `D = {g_1, ..., g_n}` of nonzero
//! vectors in `GF(q)^k`; its codewords are `(<v, g_i>)_i`. The crate decides
//! minimality both by exhaustive support containment and through the cutting
//! property of the projected defining set, builds the standard families of
//! defining sets, and audits the known bounds against measured parameters.
#![no_std]

extern crate alloc;

pub mod blocking;
pub mod bounds;
pub mod code;
pub mod constructions;
pub mod error;
pub mod gf;
pub mod linalg;
pub mod support;

pub use blocking::{
    fold_multiplicity, is_cutting_definition, is_cutting_span, is_minimal_cutting, BlockingReport,
    CuttingReport, CuttingWitness, SubspaceGuard,
};
pub use bounds::{audit, griesmer_lb, minimal_code_bounds, BoundAudit};
pub use code::{
    build_code, codeword_of, is_minimal_exhaustive, weight_distribution, EnumerationGuard,
    LinearCode, Method, MinimalityReport, MinimalityWitness, WeightDistribution,
};
pub use constructions::{ConstructionSpec, Family};
pub use error::{Error, Result};
pub use gf::{field_make, field_of_order, FieldElement, FieldSpec};
pub use linalg::{project_multiset, GFVector, VectorMultiset};
