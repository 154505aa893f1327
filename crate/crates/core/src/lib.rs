pub mod arith;
pub mod error;
pub mod gf;
pub mod golden;
pub mod group;
pub mod lifting;
pub mod search;
pub mod tables;
pub mod theorems;

pub use arith::{Factorization, Modulus};
pub use error::{Error, Result};
pub use group::{CyclicFactor, GroupStructure};
pub use search::{ApDecomposition, Strength};
