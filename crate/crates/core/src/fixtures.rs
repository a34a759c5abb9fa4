//! Standard small instances used across tests, demos and the CLI docs.

use crate::lattice::FiniteLattice;
use crate::poset::Poset;
use crate::topology::FiniteSpace;
use crate::Subset;

/// The chain `p0 < p1 < ... < p{n-1}`.
pub fn chain_poset(n: usize) -> Poset {
    let labels: Vec<String> = (0..n).map(|i| format!("p{i}")).collect();
    let pairs: Vec<(String, String)> = (1..n)
        .map(|i| (format!("p{}", i - 1), format!("p{i}")))
        .collect();
    Poset::from_pairs(&labels, &pairs).unwrap()
}

pub fn chain_lattice(n: usize) -> FiniteLattice {
    FiniteLattice::from_poset(chain_poset(n)).unwrap()
}

/// An antichain on the given labels.
pub fn antichain(labels: &[&str]) -> Poset {
    Poset::from_pairs(labels, &[] as &[(&str, &str)]).unwrap()
}

/// The four-element lattice `0 < a,b < 1`.
pub fn diamond_poset() -> Poset {
    Poset::from_pairs(
        &["0", "a", "b", "1"],
        &[("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")],
    )
    .unwrap()
}

pub fn diamond_lattice() -> FiniteLattice {
    FiniteLattice::from_poset(diamond_poset()).unwrap()
}

/// The pentagon: `0 < a < c < 1` and `0 < b < 1`. Not distributive.
pub fn n5() -> FiniteLattice {
    let p = Poset::from_pairs(
        &["0", "a", "b", "c", "1"],
        &[("0", "a"), ("a", "c"), ("c", "1"), ("0", "b"), ("b", "1")],
    )
    .unwrap();
    FiniteLattice::from_poset(p).unwrap()
}

/// Three incomparable atoms under a top over a bottom. Not distributive.
pub fn m3() -> FiniteLattice {
    let p = Poset::from_pairs(
        &["0", "x", "y", "z", "1"],
        &[
            ("0", "x"),
            ("0", "y"),
            ("0", "z"),
            ("x", "1"),
            ("y", "1"),
            ("z", "1"),
        ],
    )
    .unwrap();
    FiniteLattice::from_poset(p).unwrap()
}

/// The powerset lattice on the given labels.
pub fn boolean_lattice(labels: &[&str]) -> FiniteLattice {
    let labels: Vec<String> = labels.iter().map(|s| s.to_string()).collect();
    FiniteLattice::powerset(&labels)
}

/// Sierpinski space: points `x, y` with `{x}` open.
pub fn sierpinski() -> FiniteSpace {
    FiniteSpace::from_opens(
        vec!["x".to_string(), "y".to_string()],
        &[Subset::singleton(0)],
    )
}

/// The discrete space on the given labels.
pub fn discrete(labels: &[&str]) -> FiniteSpace {
    let points: Vec<String> = labels.iter().map(|s| s.to_string()).collect();
    let singletons: Vec<Subset> = (0..points.len()).map(Subset::singleton).collect();
    FiniteSpace::from_opens(points, &singletons)
}

/// Two points with only the trivial opens.
pub fn indiscrete_pair() -> FiniteSpace {
    FiniteSpace::from_opens(vec!["x".to_string(), "y".to_string()], &[])
}

/// The space with no points.
pub fn empty_space() -> FiniteSpace {
    FiniteSpace::from_opens(Vec::new(), &[])
}
