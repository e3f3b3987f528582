//! Verma modules in the PBW basis: the Virasoro action, singular vectors, embedding
//! diagrams, characters and `C_1`-cofinite dimensions.

mod character;
mod cofinite;
mod diagram;
mod partition;
mod pbw;
mod singular;

pub use character::{
    characters, diagram_to_level, kac_quotient_character, simple_character, verma_character,
    Characters,
};
pub use cofinite::c1_cofinite_dimension;
pub use diagram::{embedding_diagram, embedding_diagram_for_weight, DiagramNode, EmbeddingDiagram};
pub use partition::{level_basis, partition_count, partition_numbers, IndexedBasis, Partition};
pub use pbw::{PBWVector, VermaModule};
pub use singular::{
    normalize, singular_scan, singular_vectors, singular_vectors_in, singular_vectors_in_quotient,
    submodule_span, SingularLevel,
};

/// `L_m v` in the Verma module determined by `v`.
pub fn act(m: i64, v: &PBWVector) -> PBWVector {
    VermaModule::new(&v.c, &v.h).act(m, v)
}
