//! Exact arithmetic, the differential algebra `V` and the quotients `V_n`.

pub mod diffpoly;
pub mod expr;
pub mod lambda;
pub mod poly;
pub mod rat;

pub use diffpoly::{DiffPoly, GenNames, Monomial, Var};
pub use expr::{parse_diffpoly, Expr};
pub use lambda::{pair_substitute, LambdaPoly};
pub use poly::{Affine, RatPoly, VPoly};
pub use rat::{rat, ratio, Rat};
