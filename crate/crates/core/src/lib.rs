//! Representation-theoretic combinatorics of the general linear Lie
//! superalgebra gl(m|n).
//!
//! The crate works entirely with integral weights and characters:
//!
//! - [`weights`]: the [`Weight`] type, ρ and ρ-translates, dominance.
//! - [`invariants`]: atypical roots, typical/atypical tuples, height vectors
//!   and the block order `⪯`.
//! - [`diagrams`]: weight diagrams and cup diagrams with text/SVG rendering.
//! - [`kl`]: generalized Kazhdan–Lusztig polynomials `K_{λ,μ}(q)`.
//! - [`kacfactors`]: composition factors `[K(λ) : L(μ)]` of Kac modules.
//! - [`grothendieck`]: g₀-characters of Kac and irreducible modules and the
//!   decomposition of arbitrary characters into irreducible ones.
//!
//! ```
//! use superalg::{invariants, kl, Weight};
//!
//! let lam: Weight = "7,6,5,5,3,3,2,2,0|1,2,3,4,4,5,7,7".parse()?;
//! let mu: Weight = "7,4,4,4,2,1,1,1,0|1,1,1,2,4,4,4,7".parse()?;
//! assert_eq!(invariants::block_coordinates(&lam)?.atyp, vec![4, 8, 11, 14]);
//! assert_eq!(kl::gen_kl(&lam, &mu)?.to_string(), "q^3 + q^5");
//! assert_eq!(kl::mult_kac_in_irrd(&lam, &mu)?, -2);
//! # Ok::<(), superalg::Error>(())
//! ```

pub mod diagrams;
pub mod error;
pub mod grothendieck;
pub mod invariants;
pub mod kacfactors;
pub mod kl;
pub mod weights;

pub use error::{Error, Result};
pub use weights::{one, rho, Weight, WeightJson};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/weights.md")]
    mod weights {}
    #[doc = include_str!("../../../book/src/invariants.md")]
    mod invariants {}
    #[doc = include_str!("../../../book/src/diagrams.md")]
    mod diagrams {}
    #[doc = include_str!("../../../book/src/kazhdan-lusztig.md")]
    mod kazhdan_lusztig {}
    #[doc = include_str!("../../../book/src/kac-modules.md")]
    mod kac_modules {}
    #[doc = include_str!("../../../book/src/grothendieck.md")]
    mod grothendieck {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
