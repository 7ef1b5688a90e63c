//! Presentation of the Iwasawa algebra of the first congruence kernel of a
//! Chevalley group over the p-adic integers.

pub mod chevalley;
pub mod error;
pub mod group;
pub mod iwasawa;
pub mod padic;
pub mod presentation;
pub mod relations;
pub mod root_system;
pub mod series;
pub mod suite;

pub use error::{Error, Result};

pub use chevalley::{
    commutator_coeffs, coroot_coordinates, structure_constants, CommutatorCoeffs,
    StructureConstants,
};
pub use group::{GroupElement, GroupModel, LazardCoordinates, TriangularParams};
pub use iwasawa::{GeneratorWord, IwasawaModel, RelationInstance};
pub use padic::{constants_pq, PAdic, PadicConstants, Valuation};
pub use presentation::{emit_presentation, Presentation};
pub use relations::{relation_instances, Relation, RelationFamily};
pub use root_system::{CartanType, Family, GeneratorKind, GeneratorLabel, Root, RootSystem};
pub use series::{Monomial, OrderedSeries};
