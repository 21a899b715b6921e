//! Exact computations with the winding invariant of lattice curves.
//!
//! Words in the free group on `x`, `y` that lie in the derived subgroup trace
//! closed curves in the integer grid. Their winding numbers around unit
//! squares form a Laurent polynomial, and colorings of the squares turn that
//! polynomial into residues modulo `n`. Those residues detect non-triviality
//! in the free metabelian group `M(2, n)` of exponent `n`, and integer
//! lattice quotients of the polynomial ring bound its order from above.
//!
//! Module map:
//!
//! * [`word`]: free-group words, a small parser, and the word families used
//!   throughout (Engel, basic commutators, Morse, relators).
//! * [`laurent`]: sparse integer Laurent polynomials and torus windows.
//! * [`winding`]: lattice curves and the winding invariant, with a ray-casting
//!   oracle.
//! * [`coloring`]: good and p-good colorings of `Z_n`.
//! * [`invariant`]: coloring invariants, the `Ω` family and word-problem
//!   deciders.
//! * [`subgroup`]: orders of subgroups of `(Z_n)^r`.
//! * [`quotient`]: relation lattices, normal forms and closed-form bounds.
//! * [`intmat`]: Hermite and Smith normal forms over `Z`.
//! * [`verify`]: the named check suites run by the CLI and the acceptance
//!   target.

pub mod coloring;
pub mod error;
pub mod intmat;
pub mod invariant;
pub mod laurent;
pub mod quotient;
pub mod subgroup;
pub mod verify;
pub mod winding;
pub mod word;

pub use coloring::{Color, PGoodColoring, TwoColoring};
pub use error::{Error, Result};
pub use invariant::{Coloring, InvariantSpec, OmegaVector};
pub use laurent::{LaurentPoly, TorusPiece};
pub use quotient::{QuotientSummary, RelationLattice};
pub use subgroup::ResidueVectorSet;
pub use winding::{winding_invariant, winding_oracle, LatticePath};
pub use word::{Generator, Letter, Symmetry, Word};
