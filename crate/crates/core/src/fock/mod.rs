//! Fock modules of the Heisenberg algebra as Virasoro modules, Kac submodules and
//! their composition structures.

mod heisenberg;
mod kac;
mod structure;

pub use heisenberg::{heis_act, heis_monomial, vir_act_on_fock, FockModule, FockVector};
pub use kac::{dense, fock_monomial, kac_basis, KacModuleBasis};
pub use structure::{ff_structure, kac_structure, ModuleStructure, StructureKind};
