pub mod algebra;
pub mod azumaya;
pub mod constructors;
pub mod enumerate;
pub mod error;
pub mod format;
pub mod graded;
pub mod group;
pub mod ktheory;
pub mod linalg;
pub mod matrix_ring;
pub mod poly;
pub mod scalar;
pub mod snf;
pub mod trace;
pub mod verdict;

pub use algebra::Algebra;
pub use error::{Error, Result};
pub use format::{parse_definition, serialize_definition, Definition, Structure};
pub use graded::{GradedAlgebra, GradedRing, Homogeneous, Scope, Support, TwistedGroupAlgebra};
pub use group::{Cardinal, GradeGroup, GroupElement, SubgroupSpec};
pub use ktheory::{FGAbelianGroup, KGroup};
pub use linalg::{Matrix, Subspace, Vector};
pub use matrix_ring::ShiftedMatrixAlgebra;
pub use poly::Poly;
pub use scalar::{FieldSpec, Scalar};
pub use verdict::{SearchConfig, Strategy, Verdict, VerdictReport};
