//! Fusion with `K_{1,2}`, `K_{2,1}` and `K_{r,1} ⊠ K_{1,s}` at the level of composition
//! factors, with splitting, logarithmic and indecomposability flags, Zhu-algebra
//! constraints on lowest weights and the known rigidity of Kac modules.

mod classes;
mod consistency;
mod products;
mod zhu;

pub use classes::{add_characters, kac_character, kac_class, GrothendieckClass, SimpleLabel};
pub use consistency::{
    check_grothendieck_consistency, check_grothendieck_consistency_with, ConsistencyReport,
    IdentityCheck,
};
pub use products::{
    fuse_class, fuse_k12_kac, fuse_k12_simple, fuse_k21_kac, fuse_k21_simple, fuse_kac,
    fuse_kr1_k1s, fuse_simple, ExactSequence, FusionGenerator, FusionOutcome, KacProduct,
    ModuleKind,
};
pub use zhu::{rigidity_status, zhu_constraint, RigidityStatus, ZhuCase, ZhuConstraint};
