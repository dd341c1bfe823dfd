//! Reduced words, Edelman-Greene insertion, Little bumps, bumpless
//! pipedreams and the transition trees connecting them.
//!
//! Everything is 1-based: positions, values, letters, rows and columns.

pub mod bijection;
pub mod coeffs;
pub mod error;
pub mod perm;
pub mod pipedream;
pub mod poly;
pub mod schubert;
pub mod symmetric;
pub mod tableau;
pub mod trees;
pub mod words;

pub use bijection::{gamma, gamma_inverse, Bijection};
pub use coeffs::{eg_coeffs, Method};
pub use error::{Error, Result};
pub use perm::{Partition, Permutation, Side};
pub use pipedream::{BumplessPipedream, DroopError, Tile};
pub use poly::{Monomial, SparsePoly};
pub use tableau::{eg_insert, IncreasingTableau, StandardTableau};
pub use trees::{eg_tree, ls_tree, mls_tree, TransitionTree};
pub use words::{LineDiagram, Word};
