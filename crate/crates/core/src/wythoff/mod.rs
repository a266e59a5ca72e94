//! Wythoff's construction: vertex, edge and face orbits of the base vertex.

pub mod face;
pub mod patch;

pub use face::{base_face, face_walker, FaceKey, HelicalFace};
pub use patch::{
    base_star, construct_patch, construct_patch_with, detect_multiplicity, edge_graph, lattice_points_in_box, star_for,
    BaseFlag, MultiplicityReport, OrbitData, PatchVertex, PolyhedronPatch,
};
