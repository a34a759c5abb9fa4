//! The Stone correspondence between distributive lattices with 0 and 1 and
//! spectral spaces, and its compatibility with Hochster duality.

use crate::frame::Frame;
use crate::lattice::FiniteLattice;
use crate::topology::FiniteSpace;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DualityError {
    #[error("lattice is not distributive")]
    NotDistributive,
    #[error("space is not spectral")]
    NotSpectral,
}

/// Distributive lattice with 0 and 1 to spectral space: the spectrum of the
/// ideal completion. The completion step is the identity up to isomorphism
/// for finite lattices but is kept on the code path deliberately.
pub fn lattice_to_space(d: &FiniteLattice) -> Result<FiniteSpace, DualityError> {
    if !d.is_distributive() {
        return Err(DualityError::NotDistributive);
    }
    let completion = d.ideal_completion();
    let frame = Frame::verify(completion.lattice).map_err(|_| DualityError::NotDistributive)?;
    let space = frame.spectrum().space;
    assert!(
        space.is_spectral(),
        "spectra of coherent frames are spectral"
    );
    Ok(space)
}

/// Spectral space to distributive lattice: quasi-compact opens under
/// inclusion.
pub fn space_to_lattice(x: &FiniteSpace) -> Result<FiniteLattice, DualityError> {
    if !x.is_spectral() {
        return Err(DualityError::NotSpectral);
    }
    let qc = x.quasi_compact_opens();
    let l = FiniteLattice::from_subset_family(&qc, x.points())
        .expect("quasi-compact opens of a spectral space form a lattice");
    assert!(l.is_distributive());
    Ok(l)
}

/// Both roundtrip witnesses of the Stone correspondence, re-validated.
#[derive(Clone, Debug)]
pub struct RoundtripReport {
    pub ok: bool,
    /// For a lattice roundtrip: the lattice isomorphism; for a space
    /// roundtrip: the homeomorphism. Index `i` maps to `witness[i]`.
    pub witness: Option<Vec<usize>>,
}

/// `space_to_lattice(lattice_to_space(d))` is isomorphic to `d`.
pub fn stone_roundtrip_lattice(d: &FiniteLattice) -> Result<RoundtripReport, DualityError> {
    let space = lattice_to_space(d)?;
    let back = space_to_lattice(&space)?;
    let witness = d.isomorphism(&back);
    let ok = witness.as_ref().is_some_and(|w| {
        (0..d.len()).all(|a| (0..d.len()).all(|b| d.leq(a, b) == back.leq(w[a], w[b])))
    });
    Ok(RoundtripReport { ok, witness })
}

/// `lattice_to_space(space_to_lattice(x))` is homeomorphic to `x`.
pub fn stone_roundtrip_space(x: &FiniteSpace) -> Result<RoundtripReport, DualityError> {
    let lattice = space_to_lattice(x)?;
    let back = lattice_to_space(&lattice)?;
    let witness = x.homeomorphism(&back);
    let ok = witness.as_ref().is_some_and(|w| {
        x.opens().iter().all(|o| {
            let image: crate::Subset = o.iter().map(|i| w[i]).collect();
            back.is_open(image)
        }) && x.opens().len() == back.opens().len()
    });
    Ok(RoundtripReport { ok, witness })
}

/// The spectral space of the opposite lattice is homeomorphic to the
/// Hochster dual of the spectral space of the lattice.
pub fn hochster_vs_opposite(d: &FiniteLattice) -> Result<bool, DualityError> {
    let opp = d.opposite().map_err(|_| DualityError::NotDistributive)?;
    let left = lattice_to_space(&opp)?;
    let right = lattice_to_space(d)?
        .hochster_dual()
        .map_err(|_| DualityError::NotSpectral)?;
    Ok(left.is_homeomorphic(&right))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::topology::{AlexandrovSide, FiniteSpace};

    #[test]
    fn lattice_to_space_examples() {
        let d = lattice_to_space(&fixtures::diamond_lattice()).unwrap();
        assert!(d.is_homeomorphic(&fixtures::discrete(&["x", "y"])));

        let s = lattice_to_space(&fixtures::chain_lattice(3)).unwrap();
        assert!(s.is_homeomorphic(&fixtures::sierpinski()));

        let pt = lattice_to_space(&fixtures::chain_lattice(2)).unwrap();
        assert_eq!(pt.len(), 1);

        assert!(matches!(
            lattice_to_space(&fixtures::m3()),
            Err(DualityError::NotDistributive)
        ));
    }

    #[test]
    fn space_to_lattice_examples() {
        let l = space_to_lattice(&fixtures::discrete(&["x", "y"])).unwrap();
        assert!(l.is_isomorphic(&fixtures::diamond_lattice()));

        let l = space_to_lattice(&fixtures::sierpinski()).unwrap();
        assert!(l.is_isomorphic(&fixtures::chain_lattice(3)));

        let l = space_to_lattice(&fixtures::empty_space()).unwrap();
        assert_eq!(l.len(), 1);
    }

    #[test]
    fn roundtrips() {
        assert!(
            stone_roundtrip_lattice(&fixtures::diamond_lattice())
                .unwrap()
                .ok
        );
        assert!(
            stone_roundtrip_space(&fixtures::empty_space()).unwrap().ok,
            "empty space corresponds to the one-element lattice"
        );
        for p in [fixtures::chain_poset(3), fixtures::diamond_poset()] {
            for side in [AlexandrovSide::Zariski, AlexandrovSide::Dual] {
                let x = FiniteSpace::alexandrov(&p, side);
                assert!(stone_roundtrip_space(&x).unwrap().ok);
            }
        }
    }

    #[test]
    fn hochster_against_opposite() {
        assert!(hochster_vs_opposite(&fixtures::chain_lattice(3)).unwrap());
        assert!(hochster_vs_opposite(&fixtures::boolean_lattice(&["a", "b"])).unwrap());
        let x = FiniteSpace::alexandrov(&fixtures::diamond_poset(), AlexandrovSide::Zariski);
        let qc = space_to_lattice(&x).unwrap();
        assert!(hochster_vs_opposite(&qc).unwrap());
    }
}
