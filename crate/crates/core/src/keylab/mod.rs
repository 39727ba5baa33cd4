//! Edelman-Greene insertion, lifts, the fixed-cross diagram `D̃`, Demazure
//! crystals on tableaux, and the key-polynomial decomposition.

pub mod d_tilde;
pub mod decompose;
pub mod demazure;
pub mod lift;
pub mod tableau;

pub use d_tilde::{algorithm_d_tilde, lifted_insertion, pi_r, truncating_permutation};
pub use decompose::{decompose_schubert, decompose_unchecked, CrystalComponent, Decomposition};
pub use demazure::{demazure_tableau_crystal, demazure_tableau_crystal_along, DemazureCrystal};
pub use lift::{lift, KeyShapedFilling};
pub use tableau::{eg_insert, insertion_tableau, Tableau};
