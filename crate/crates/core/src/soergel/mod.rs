//! Soergel bimodules, Rouquier complexes and Koszul objects, as complexes of
//! free left modules with explicit right-action matrices.

mod atoms;
mod braid;
mod objects;
mod perm;

pub use atoms::{hom_word_maps, rouquier_soergel, simplify_soergel, word_bimodule, Atom, SoergelComplex};
pub use braid::BraidWord;
pub use objects::{
    bimodule_bi, koszul_object, rouquier_complex, rouquier_generator, standard_bimodule,
    Bimodule,
};
pub use perm::Perm;
