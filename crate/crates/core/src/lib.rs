//! Exact invariants of braid closures and torus-covering T²-knots.
//!
//! From commuting basis braids `(a, b)` this crate builds the knot group
//! presentation, its Alexander matrix over `ℤ[t, t⁻¹]`, the knot determinant,
//! Fox colorings, and the conjugacy classes of irreducible metabelian
//! SU(2)-representations realized exactly in binary dihedral groups.

pub mod braid;
pub mod coloring;
pub mod error;
pub mod laurent;
pub mod linalg;
pub mod metabelian;
pub mod presentation;

pub use braid::{
    artin_act, artin_images, braids_commute, closure_component_count, closure_permutation,
    corollary_family, full_twist, is_knot_closure, parse_braid, BraidLetter, BraidWord, FreeLetter,
    FreeWord, Permutation,
};
pub use error::{Error, Result};
pub use laurent::{poly_gcd, LaurentMatrix, LaurentPoly};
pub use linalg::{
    determinantal_divisor, enumerate_solutions_mod, smith_normal_form, solution_count_mod,
    IntMatrix, SnfResult, DEFAULT_ENUM_CAP,
};
pub use metabelian::{
    bd_mul, build_representation, count_from_colorings, count_irreducible_metabelian,
    enumerate_rep_classes, is_irreducible, verify_representation, BinaryDihedralElt, RepClass,
};
pub use coloring::{
    colorability_profile, coloring_census, dihedral_op, dihedral_transport, generated_subgroup,
    is_p_colorable, surface_coloring_census, ColoringCensus,
};
pub use presentation::{
    alexander_matrix, burau_alexander, closure_diagram, closure_presentation, coloring_matrix,
    elementary_ideal_data, fox_derivative_abelianized, torus_covering_presentation,
    ClosureDiagram, Crossing, ElementaryIdealData, Presentation,
};
