//! Synthetic graph families: lattices and cliques, the top-subtree toy model,
//! Forest Fire, Chung-Lu power-law graphs, preferential attachment, copying,
//! and degree-preserving rewiring.

mod attachment;
mod chung_lu;
mod forest_fire;
mod lattice;
mod rewire;
mod toy_tree;

pub use attachment::{gen_copying, gen_preferential_attachment};
pub use chung_lu::{gen_chung_lu, gen_chung_lu_powerlaw, ChungLuParams};
pub use forest_fire::{gen_forest_fire, ForestFireParams};
pub use lattice::{gen_barbell, gen_clique, gen_cycle, gen_grid, gen_torus};
pub use rewire::{default_swap_attempts, rewire};
pub use toy_tree::{gen_toy_tree, ToyTree, ToyTreeParams};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// The RNG used by every randomized routine in the crate.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
