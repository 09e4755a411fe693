//! Weakly separated set systems over the discrete Grassmannian.
//!
//! The crate implements the combinatorics of weak separation on r-element
//! subsets of `[n]`: cyclic dominance and the separation predicate
//! ([`cyclic`]), Grassmann necklaces with their permutations and alignments
//! ([`necklace`]), the interior/exterior regions cut out by a necklace
//! ([`regions`]), exhaustive enumeration of maximal separated collections
//! with purity and rank reports plus mutations ([`purity`]), the planar
//! bicolored tiling realization with geometric membership and fill-in tests
//! ([`plabic`]), and a verification battery that checks every structural
//! claim exhaustively at small `n` ([`verify`], [`conjecture`]).
//!
//! All types are immutable values and all operations are pure functions, so
//! everything here is safe to call concurrently.

pub mod conjecture;
pub mod cyclic;
pub mod error;
pub mod geom;
pub mod necklace;
pub mod plabic;
pub mod purity;
pub mod regions;
pub mod verify;

mod bits;

pub use cyclic::{Ground, Subset};
pub use error::{Error, Result};


