//! Zeta functions of the Lie rings `L_{m,n}`: closed forms, their
//! combinatorial ingredients, and brute-force oracles.

pub mod combinat;
pub mod error;
pub mod exactalg;
pub mod igusa;
pub mod liering;
pub mod oracle;
pub mod render;
pub mod zetas;

pub use error::{Error, Result};
