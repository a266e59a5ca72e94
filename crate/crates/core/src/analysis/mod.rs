//! Vertex-stars, classification, mirror images, face classes, coverings
//! and the twist-generated regular polyhedra.

pub mod covering;
pub mod faces;
pub mod mirror;
pub mod named;
pub mod regularity;
pub mod stars;

pub use covering::{covering_of, covering_quotient, expected_cover, rotation_axis, CoveringReport};
pub use faces::{class_key, face_class_words, face_classes_of, face_translation_classes, FaceClassReport};
pub use mirror::{affinely_equivalent, enantiomorph, handedness, AffineWitness, Handedness};
pub use named::{verify_named_regular, NamedRegularReport};
pub use regularity::{
    chirality_certificate, classify, classify_group, regular_name, regularity_witness, Classification, Verdict,
    WitnessCondition,
};
pub use stars::{
    catalog_words, star_planarity, vertex_star, vertex_star_catalog, vertex_star_in, StarCatalog, StarPlanarity,
    VertexStar,
};
