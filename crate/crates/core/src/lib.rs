//! Reduced pipe dreams for a permutation, the crystal chute moves on them,
//! and the resulting expansion of Schubert polynomials into key polynomials.

pub mod crystal;
pub mod error;
pub mod keylab;
pub mod perm;
pub mod pipedream;
pub mod poly;
pub mod rfc;
pub mod verify;

pub use error::{Error, Result};
pub use perm::{push_action, shortest_sorting_perm, Composition, Permutation, Word};
pub use pipedream::{enumerate_rp, schubert_pipedreams, Cell, PipeDream};
pub use poly::{key_polynomial, schubert_divdiff, SparsePolynomial};
pub use rfc::{phi, phi_inverse, CompatibleSequence, Rfc};
