//! Cosets of closed inverse subsemigroups: finite inverse semigroups given by
//! tables, the free inverse monoid via Munn trees, and inverse automata.

pub mod automata;
pub mod builtin;
pub mod closure;
pub mod cosets;
pub mod error;
pub mod f2ab;
pub mod families;
pub mod munn;
pub mod semigroup;
pub mod set;
pub mod word;
pub mod worked;

pub use error::{Error, Result};
