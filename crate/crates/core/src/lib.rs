//! Third Burnside groups of links.
//!
//! Computes `B_L(3)`, the fundamental group of the double branched cover of a
//! link modulo all cubes, from a braid word or a PD code; reports its order
//! and the Z/3 homology of the cover; and uses the two to certify that a link
//! cannot be turned into a trivial link by 3-moves.

pub mod burnside;
pub mod cli;
pub mod gf3;
pub mod invariants;
pub mod liering;
pub mod linkio;
pub mod words;
