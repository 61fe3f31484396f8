//! Partition, bipartition and tableau combinatorics for level one and level two.

pub mod bricks;
pub mod charge;
pub mod partition;
pub mod perm;
pub mod regular;
pub mod tableau;

pub use bricks::{brick_down, brick_up, brick_word, BrickError, BrickShape};
pub use charge::{Bicharge, CartanData, ChargeError};
pub use partition::{hooks_of, Bipartition, Partition, ShapeError};
pub use perm::Perm;
pub use regular::{is_regular, signature_nodes, SignatureNodes};
pub use tableau::{binomial, std_count, Layout, Node};
