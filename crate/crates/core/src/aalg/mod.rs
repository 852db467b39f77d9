//! The symbolic dg algebras carrying the tautological generators: twists,
//! coproducts and counits, higher coproducts and their A-infinity relations,
//! the cycle-collapse homomorphisms with corrections, and the stabilization
//! maps.

mod algebra;
mod coproduct;
mod homs;
mod superpoly;

pub use algebra::{decode_u, differential, is_zero_mod_symmetric, u_var, AlgebraSpec};
pub use coproduct::{
    ainfty_defect, coproduct, counit_left_identity, counit_right_identity, higher_coproduct,
    higher_on_element, AINFTY_SIGNS,
};
pub use homs::{alpha_beta, correction_pair, correction_table, phi_stabilize, HomTable};
pub use superpoly::{ExtMonomial, OddGen, OddKind, SuperPolynomial};
