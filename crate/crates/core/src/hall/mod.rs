//! Hall algebras of quivers with automorphism over finite fields and the
//! restriction map to torus-fixed points.

pub mod algebra;
pub mod frobenius;
pub mod model;
pub mod quiver;
pub mod word;

pub use algebra::{
    convolve, divided_power, flag_count, indicator_fn, m_form, n_form, serre_check, theta_normalized,
    twisted_mul, unit, HallFn, SerreReport,
};
pub use model::{ambient_field, ClassTable, EdgeOrbit, Key, RepModel, RepPoint, VertexOrbit};
pub use quiver::{cartan_from_quiver, preset, quiver_from_cartan, Automorphism, CartanDatum, Edge, QuiverWithAut, PRESETS};
pub use word::{contents_up_to, words_with_content, Word};
pub use frobenius::{
    check_q_homomorphism, check_q_pair, check_residue, frobenius_q, generic_lift_evidence, word_pairs_up_to,
    words_up_to, FrobeniusSetup, HomItem, HomReport, LiftEvidence, LiftRow, ResidueItem,
};
