//! Cross-module invariants checked exhaustively on the small corpus.

use framekit_core::enumerate;
use framekit_core::topology::{AlexandrovSide, ContinuousMap, FiniteSpace};
use framekit_core::ttmodel::{f_map, SupportSpace};
use framekit_core::Subset;

/// The unit point map `x -> join of opens missing x` lands in the spectrum
/// of the open-set frame; it is a homeomorphism exactly on sober spaces.
fn unit_map(x: &FiniteSpace) -> ContinuousMap {
    let frame = x.open_lattice();
    let sp = frame.spectrum();
    let opens = x.opens();
    let point_map: Vec<usize> = (0..x.len())
        .map(|pt| {
            let avoid: Subset = (0..frame.len())
                .filter(|&a| !opens[a].contains(pt))
                .collect();
            let prime = frame.lattice().join(avoid);
            sp.point_elements
                .iter()
                .position(|&e| e == prime)
                .expect("the largest open missing a point is prime")
        })
        .collect();
    ContinuousMap::new(x.clone(), sp.space, point_map).expect("the unit map is continuous")
}

#[test]
fn sober_iff_unit_homeomorphism() {
    for n in 0..=4 {
        for x in enumerate::spaces(n).unwrap() {
            if !x.is_t0() {
                continue;
            }
            assert_eq!(
                unit_map(&x).is_homeomorphism(),
                x.is_sober(),
                "points: {:?}, opens: {:?}",
                x.points(),
                x.opens()
            );
        }
    }
}

#[test]
fn dual_open_lattice_is_the_opposite() {
    for n in 0..=4 {
        for p in enumerate::posets(n).unwrap() {
            let x = FiniteSpace::alexandrov(&p, AlexandrovSide::Zariski);
            let dual = x.hochster_dual().unwrap();
            let o_dual = dual.open_lattice();
            let o_opp = x.open_lattice().lattice().opposite().unwrap();
            assert!(o_dual.lattice().is_isomorphic(&o_opp));
        }
    }
}

#[test]
fn alexandrov_fixes_spaces_and_posets() {
    for n in 0..=4 {
        for p in enumerate::posets(n).unwrap() {
            let x = FiniteSpace::alexandrov(&p, AlexandrovSide::Zariski);
            assert_eq!(x.specialization_order().unwrap(), p);
            let back = FiniteSpace::alexandrov(
                &x.specialization_order().unwrap(),
                AlexandrovSide::Zariski,
            );
            assert_eq!(back, x);
        }
    }
}

#[test]
fn comparison_map_injective_on_small_posets() {
    for n in 0..=4 {
        for p in enumerate::posets(n).unwrap() {
            assert!(f_map(&SupportSpace::new(p)).is_injective());
        }
    }
}

/// Class order is support inclusion: smaller support, smaller class.
#[test]
fn class_order_is_support_inclusion() {
    use framekit_core::ttmodel::{bousfield_lattice, powerset_members};
    let space = SupportSpace::new(framekit_core::fixtures::chain_poset(3));
    let b = bousfield_lattice(&space);
    let members = powerset_members(&space);
    for (i, &a) in members.iter().enumerate() {
        for (j, &c) in members.iter().enumerate() {
            assert_eq!(b.lattice().leq(i, j), a.is_subset_of(c));
        }
    }
}
