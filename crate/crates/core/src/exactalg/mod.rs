//! Exact commutative arithmetic over `Z`, `Z[v, v^-1]` and its cyclotomic
//! quotients.

pub mod bareiss;
pub mod cyclo;
pub mod intpoly;
pub mod laurent;
pub mod ring;

pub use bareiss::{bareiss_det, bareiss_rank, ExactRing};
pub use cyclo::{
    check_binom_vanishing, check_phi_square_identity, cyclo_norm_zeta2_minus_q,
    cyclotomic_poly, gauss_binom, quantum_int, reduce_mod_cyclo, rho_twist, BinomCase,
    CycloElt, CycloRing,
};
pub use intpoly::IntPoly;
pub use laurent::LaurentPoly;
pub use ring::{Residue, ResidueRing, Scalar, SurdElt, Twist};
