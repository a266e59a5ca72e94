//! Generator pairs for every family, special groups, coset enumeration
//! modulo translation lattices, and vertex cosets.

pub mod family;
pub mod quotient;
pub mod special;
pub mod translation;
pub mod vertices;

pub use family::{build_group, FamilyId, GroupPresentation, Letter, Word};
pub use quotient::{quotient_mod, word_bound, Coset, QuotientGroup, DEFAULT_WORD_BOUND, WORD_BOUND_VAR};
pub use special::{embeds_into, special_group_closure, SpecialGroup, SpecialName};
pub use translation::{
    claimed_translation_lattice, discover_translation_group, special_group, verify_translation_lattice,
    TranslationReport,
};
pub use vertices::{finite_fixed_point, vertex_classes, vertex_coset_reps};
