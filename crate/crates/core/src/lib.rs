//! Finite posets, lattices, frames and topological spaces, with Stone and
//! Hochster duality, coherent-frame checks, and a finite model of the
//! support theory of stratified tensor triangulated categories.
//!
//! Everything is desk-scale and exact: carriers are capped at 64 elements,
//! all laws are checked by enumeration, and every duality is exhibited by an
//! explicit witness (a bijection, an isomorphism, a homeomorphism) that is
//! re-validated rather than assumed.

pub mod bits;
pub mod dot;
pub mod duality;
pub mod enumerate;
pub mod fixtures;
pub mod frame;
pub mod json;
pub mod lattice;
pub mod poset;
pub mod topology;
pub mod ttmodel;

pub use bits::Subset;
pub use frame::{Frame, FrameMorphism, Spectrum};
pub use lattice::{FiniteLattice, Ideal, IdealCompletion, LatticeError};
pub use poset::{Poset, PosetError};
pub use topology::{ContinuousMap, FiniteSpace, TopologyError};

/// Set notation for an index subset using the given point labels:
/// `{}`, `{a}`, `{a,b}`.
pub fn set_label(s: Subset, point_labels: &[String]) -> String {
    let mut out = String::from("{");
    for (k, i) in s.iter().enumerate() {
        if k > 0 {
            out.push(',');
        }
        out.push_str(&point_labels[i]);
    }
    out.push('}');
    out
}
