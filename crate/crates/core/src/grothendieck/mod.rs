//! g₀-characters and the Grothendieck group of gl(m|n)-modules.
//!
//! As a g₀-module, `K(μ) = ⋀(V₀* ⊗ V₁) ⊗ L₀(μ)`, and the Cauchy expansion
//! of the exterior algebra reduces `ch K(μ)` to Littlewood–Richardson
//! products. Irreducible characters follow from
//! `ch L(λ) = Σ_μ K_{λ,μ}(−1) ch K(μ)`, and [`decompose`] peels irreducible
//! characters off an arbitrary g₀-character starting from its largest weight.

mod cache;
mod character;
mod lr;
mod partition;

pub use cache::{cache_load, cache_store, SupportCache, CACHE_VERSION};
pub use character::{
    decompose, decompose_with, g0_dimension, irr_g0_character, kac_g0_character, kac_support,
    DecomposeOptions, Decomposition, G0Character, Term,
};
pub use lr::{lr_coefficient, lr_product, tensor_expand, tensor_expand_within, weyl_dimension};
pub use partition::{cauchy_summands, partitions_in_box, Partition};
