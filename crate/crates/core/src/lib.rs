pub mod algebra;
pub mod error;
pub mod graph;
pub mod hochschild;
pub mod morphism;
pub mod operad;
pub mod perm;
pub mod pva;
pub mod report;
pub mod sample;
pub mod verify;

pub use error::{Error, Result};
