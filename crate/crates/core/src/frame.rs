//! Frames, prime elements, the Stone topology, spectra, frame morphisms and
//! coherence.
//!
//! A frame is a complete lattice where finite meets distribute over
//! arbitrary joins. At finite scale binary distributivity already implies
//! the subset law, but both are checked: binary exhaustively, the subset
//! law on an enumerated or sampled family, so refactors cannot silently
//! weaken the verification.

use crate::bits::Subset;
use crate::lattice::FiniteLattice;
use crate::topology::{ContinuousMap, FiniteSpace};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

/// Cap on enumerated/sampled subsets for the subset-distributivity law and
/// the arbitrary-join law of morphisms.
pub const SUBSET_SAMPLE_CAP: usize = 1 << 12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FrameError {
    #[error("not a frame: witness ({a},{b},{c}) violates distributivity")]
    NotAFrame { a: String, b: String, c: String },
    #[error("not a frame morphism")]
    NotAFrameMorphism,
    #[error("prime image expected, got non-prime {0}")]
    NotPrime(String),
    #[error("map is not continuous")]
    NotContinuous,
    #[error("mismatched duality input: {0}")]
    Mismatch(String),
}

/// A lattice verified to satisfy the frame law. Constructible only through
/// [`Frame::verify`], so holding a `Frame` is the verification flag.
#[derive(Clone, PartialEq, Eq)]
pub struct Frame {
    lattice: FiniteLattice,
}

impl std::fmt::Debug for Frame {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Frame({:?})", self.lattice)
    }
}

/// The spectrum of a frame: prime elements with the Stone topology.
/// `point_elements[k]` is the carrier index of the prime behind point `k`,
/// so primes are never re-labelled.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spectrum {
    pub space: FiniteSpace,
    pub point_elements: Vec<usize>,
}

/// Subsets of `{0..n-1}` used for subset-law checks: exhaustive when `2^n`
/// fits the cap, otherwise a fixed-seed sample of the same size.
fn law_check_subsets(n: usize) -> Vec<Subset> {
    if n < 63 && (1u64 << n) as usize <= SUBSET_SAMPLE_CAP {
        Subset::powerset(n).collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5u64);
        let full = Subset::full(n);
        (0..SUBSET_SAMPLE_CAP)
            .map(|_| Subset::from_bits(rng.gen::<u64>()) & full)
            .collect()
    }
}

impl Frame {
    /// Checks binary distributivity exhaustively and the subset law on an
    /// enumerated or sampled family of subsets.
    pub fn verify(lattice: FiniteLattice) -> Result<Frame, FrameError> {
        if let Some((a, b, c)) = lattice.distributivity_witness() {
            return Err(FrameError::NotAFrame {
                a: lattice.label(a).to_string(),
                b: lattice.label(b).to_string(),
                c: lattice.label(c).to_string(),
            });
        }
        let n = lattice.len();
        for bs in law_check_subsets(n) {
            let join_bs = lattice.join(bs);
            for a in 0..n {
                let lhs = lattice.meet_pair(a, join_bs);
                let rhs = lattice.join(bs.iter().map(|b| lattice.meet_pair(a, b)).collect());
                if lhs != rhs {
                    return Err(FrameError::NotAFrame {
                        a: lattice.label(a).to_string(),
                        b: lattice.label(join_bs).to_string(),
                        c: lattice.label(lhs).to_string(),
                    });
                }
            }
        }
        Ok(Frame { lattice })
    }

    /// The powerset frame on the given points.
    pub fn powerset(point_labels: &[String]) -> Frame {
        Frame::verify(FiniteLattice::powerset(point_labels))
            .expect("powerset lattices satisfy the frame law")
    }

    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    pub fn len(&self) -> usize {
        self.lattice.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Elements `p != 1` with `a /\ b <= p` implying `a <= p` or `b <= p`,
    /// by the definitional double loop.
    pub fn primes(&self) -> Vec<usize> {
        let l = &self.lattice;
        let n = l.len();
        (0..n)
            .filter(|&p| {
                p != l.top()
                    && (0..n).all(|a| {
                        (0..n).all(|b| !l.leq(l.meet_pair(a, b), p) || l.leq(a, p) || l.leq(b, p))
                    })
            })
            .collect()
    }

    /// The Stone open `U(a) = {p prime : a <= p fails}` as a subset of the
    /// prime list returned by [`Frame::primes`].
    pub fn stone_open(&self, a: usize) -> Subset {
        self.primes()
            .iter()
            .enumerate()
            .filter(|(_, &p)| !self.lattice.leq(a, p))
            .map(|(k, _)| k)
            .collect()
    }

    /// The spectrum: primes with opens `U(a)`. The `U`-family is checked to
    /// be closed under union and intersection before the space is built.
    pub fn spectrum(&self) -> Spectrum {
        let primes = self.primes();
        let mut opens: Vec<Subset> = (0..self.len()).map(|a| self.stone_open(a)).collect();
        opens.sort_by_key(|s| s.canonical_key());
        opens.dedup();
        for &a in &opens {
            for &b in &opens {
                assert!(
                    opens.contains(&(a | b)) && opens.contains(&(a & b)),
                    "Stone opens must be closed under union and intersection"
                );
            }
        }
        let points: Vec<String> = primes
            .iter()
            .map(|&p| self.lattice.label(p).to_string())
            .collect();
        let space = FiniteSpace::from_closed_family(points, opens);
        Spectrum {
            space,
            point_elements: primes,
        }
    }

    /// Whether `a -> U(a)` is injective.
    pub fn has_enough_points(&self) -> bool {
        let n = self.len();
        let opens: Vec<Subset> = (0..n).map(|a| self.stone_open(a)).collect();
        (0..n).all(|a| (a + 1..n).all(|b| opens[a] != opens[b]))
    }

    /// The adjunction morphism `a -> U(a)` into the open-set frame of the
    /// spectrum. It is an isomorphism exactly when the frame has enough
    /// points.
    pub fn adjunction_unit(&self) -> FrameMorphism {
        let sp = self.spectrum();
        let target = sp.space.open_lattice();
        let map: Vec<usize> = (0..self.len())
            .map(|a| {
                let u = self.stone_open(a);
                sp.space
                    .opens()
                    .iter()
                    .position(|&o| o == u)
                    .expect("U(a) is open in the spectrum")
            })
            .collect();
        FrameMorphism::new(self.clone(), target, map)
            .expect("the adjunction unit is a frame morphism")
    }

    /// Compactly generated with the compact elements forming a sublattice
    /// containing the top.
    pub fn is_coherent(&self) -> bool {
        self.lattice.is_compactly_generated() && compacts_sublattice_with_top(&self.lattice)
    }
}

fn compacts_sublattice_with_top(l: &FiniteLattice) -> bool {
    let compacts = l.compact_elements();
    compacts.contains(l.top())
        && compacts.iter().all(|a| {
            compacts.iter().all(|b| {
                compacts.contains(l.join_pair(a, b)) && compacts.contains(l.meet_pair(a, b))
            })
        })
}

/// The four equivalent descriptions of coherence, each evaluated by its own
/// independent checker.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CoherenceReport {
    /// Coherent frame: frame, compactly generated, compacts a sublattice with 1.
    pub coherent_frame: bool,
    /// Frame with enough points whose spectrum is a spectral space.
    pub frame_enough_points_spectral: bool,
    /// Isomorphic to the ideal completion of a distributive lattice with 0 and 1.
    pub ideal_completion_of_distributive: bool,
    /// Compactly generated, distributive, compacts a sublattice with 1.
    pub cg_distributive_sublattice: bool,
}

impl CoherenceReport {
    pub fn is_consistent(self) -> bool {
        let v = self.coherent_frame;
        self.frame_enough_points_spectral == v
            && self.ideal_completion_of_distributive == v
            && self.cg_distributive_sublattice == v
    }

    pub fn all(self) -> bool {
        self.coherent_frame && self.is_consistent()
    }
}

/// Evaluates all four coherence conditions independently. Agreement is a
/// theorem; callers (tests, the CLI) assert it per instance.
pub fn coherence_report(l: &FiniteLattice) -> CoherenceReport {
    let frame = Frame::verify(l.clone()).ok();

    let coherent_frame = frame.as_ref().is_some_and(|f| f.is_coherent());

    let frame_enough_points_spectral = frame
        .as_ref()
        .is_some_and(|f| f.has_enough_points() && f.spectrum().space.is_spectral());

    // Mirror the proof route: take the compact elements, demand they form a
    // distributive lattice with 0 and 1, and compare the ideal completion
    // with the original lattice.
    let ideal_completion_of_distributive = {
        let compacts: Vec<usize> = l.compact_elements().iter().collect();
        // Joins of the abstract sublattice must agree with the ambient ones
        // for the subposet completion to be its ideal completion.
        let join_closed = !compacts.is_empty()
            && compacts.iter().all(|&a| {
                compacts
                    .iter()
                    .all(|&b| compacts.contains(&l.join_pair(a, b)))
            });
        join_closed
            && induced_sublattice(l, &compacts).is_some_and(|g| g.is_distributive())
            && l.ideal_completion_of_subposet(&compacts)
                .lattice
                .is_isomorphic(l)
    };

    let cg_distributive_sublattice =
        l.is_compactly_generated() && l.is_distributive() && compacts_sublattice_with_top(l);

    CoherenceReport {
        coherent_frame,
        frame_enough_points_spectral,
        ideal_completion_of_distributive,
        cg_distributive_sublattice,
    }
}

/// The induced order on a subset of the carrier, as a lattice of its own if
/// it is one.
fn induced_sublattice(l: &FiniteLattice, elems: &[usize]) -> Option<FiniteLattice> {
    let labels: Vec<String> = elems.iter().map(|&e| l.label(e).to_string()).collect();
    let up = elems
        .iter()
        .map(|&a| {
            elems
                .iter()
                .enumerate()
                .filter(|(_, &b)| l.leq(a, b))
                .map(|(k, _)| k)
                .collect()
        })
        .collect();
    FiniteLattice::from_poset(crate::poset::Poset::from_up_rows(labels, up)).ok()
}

/// A verified frame morphism: preserves binary meets, the empty meet
/// (top to top), binary joins, the empty join (bottom to bottom), and the
/// subset join law on an enumerated or sampled family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrameMorphism {
    pub source: Frame,
    pub target: Frame,
    pub map: Vec<usize>,
}

impl FrameMorphism {
    pub fn new(source: Frame, target: Frame, map: Vec<usize>) -> Result<Self, FrameError> {
        let (s, t) = (&source.lattice, &target.lattice);
        let n = s.len();
        if map.len() != n || map.iter().any(|&i| i >= t.len()) {
            return Err(FrameError::NotAFrameMorphism);
        }
        let ok_tops = map[s.top()] == t.top() && map[s.bottom()] == t.bottom();
        let ok_pairs = (0..n).all(|a| {
            (0..n).all(|b| {
                map[s.meet_pair(a, b)] == t.meet_pair(map[a], map[b])
                    && map[s.join_pair(a, b)] == t.join_pair(map[a], map[b])
            })
        });
        let ok_subsets = law_check_subsets(n)
            .into_iter()
            .all(|bs| map[s.join(bs)] == t.join(bs.iter().map(|b| map[b]).collect()));
        if ok_tops && ok_pairs && ok_subsets {
            Ok(FrameMorphism {
                source,
                target,
                map,
            })
        } else {
            Err(FrameError::NotAFrameMorphism)
        }
    }

    pub fn identity(f: &Frame) -> FrameMorphism {
        FrameMorphism::new(f.clone(), f.clone(), (0..f.len()).collect())
            .expect("identity is a frame morphism")
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = std::collections::BTreeSet::new();
        self.map.iter().all(|&i| seen.insert(i))
    }

    /// Bijective; a bijective frame morphism is an isomorphism.
    pub fn is_isomorphism(&self) -> bool {
        self.source.len() == self.target.len() && self.is_injective()
    }

    pub fn compose(&self, then: &FrameMorphism) -> Result<FrameMorphism, FrameError> {
        if self.target != then.source {
            return Err(FrameError::Mismatch("composition endpoints".to_string()));
        }
        let map = self.map.iter().map(|&i| then.map[i]).collect();
        FrameMorphism::new(self.source.clone(), then.target.clone(), map)
    }

    /// The induced continuous map of spectra, contravariantly: a prime `p`
    /// of the target goes to the join of all `a` with `f(a) <= p`, which is
    /// checked to be prime; the pullback identity
    /// `U(f(a)) = Sp(f)^{-1}(U(a))` is then verified for every `a`.
    pub fn spectrum_map(&self) -> Result<ContinuousMap, FrameError> {
        let sp_source = self.source.spectrum();
        let sp_target = self.target.spectrum();
        let s = &self.source.lattice;
        let mut point_map = Vec::with_capacity(sp_target.point_elements.len());
        for &p in &sp_target.point_elements {
            let below: Subset = (0..s.len())
                .filter(|&a| self.target.lattice.leq(self.map[a], p))
                .collect();
            let e = s.join(below);
            let idx = sp_source
                .point_elements
                .iter()
                .position(|&q| q == e)
                .ok_or_else(|| FrameError::NotPrime(s.label(e).to_string()))?;
            point_map.push(idx);
        }
        let map = ContinuousMap::new(sp_target.space.clone(), sp_source.space.clone(), point_map)
            .map_err(|_| FrameError::NotContinuous)?;
        for a in 0..s.len() {
            let lhs = self.target.stone_open(self.map[a]);
            let rhs = map.preimage(self.source.stone_open(a));
            assert_eq!(lhs, rhs, "pullback identity for Stone opens failed");
        }
        Ok(map)
    }
}

/// One direction of the Stone adjunction: a continuous map
/// `g : X -> Sp(F)` becomes the frame morphism `F -> O(X)`,
/// `a -> g^{-1}(U(a))`.
pub fn map_to_morphism(g: &ContinuousMap, f: &Frame) -> Result<FrameMorphism, FrameError> {
    let sp = f.spectrum();
    if g.target != sp.space {
        return Err(FrameError::Mismatch(
            "map target is not the spectrum of the frame".to_string(),
        ));
    }
    let target = g.source.open_lattice();
    let map: Vec<usize> = (0..f.len())
        .map(|a| {
            let pre = g.preimage(f.stone_open(a));
            g.source
                .opens()
                .iter()
                .position(|&o| o == pre)
                .expect("preimage of a Stone open is open by continuity")
        })
        .collect();
    FrameMorphism::new(f.clone(), target, map)
}

/// The other direction: a frame morphism `h : F -> O(X)` becomes the
/// continuous map `X -> Sp(F)`, `x -> join { a : x not in h(a) }`.
pub fn morphism_to_map(h: &FrameMorphism, x: &FiniteSpace) -> Result<ContinuousMap, FrameError> {
    let open_lat = x.open_lattice();
    if h.target != open_lat {
        return Err(FrameError::Mismatch(
            "morphism target is not the open-set frame of the space".to_string(),
        ));
    }
    // Carrier order of `open_lattice` follows the canonical open order.
    let opens = x.opens();
    let f = &h.source;
    let sp = f.spectrum();
    let mut point_map = Vec::with_capacity(x.len());
    for pt in 0..x.len() {
        let avoid: Subset = (0..f.len())
            .filter(|&a| !opens[h.map[a]].contains(pt))
            .collect();
        let e = f.lattice.join(avoid);
        let idx = sp
            .point_elements
            .iter()
            .position(|&q| q == e)
            .ok_or_else(|| FrameError::NotPrime(f.lattice.label(e).to_string()))?;
        point_map.push(idx);
    }
    ContinuousMap::new(x.clone(), sp.space, point_map).map_err(|_| FrameError::NotContinuous)
}

/// All frame morphisms between two frames, by exhausting monotone maps.
/// Intended for small hom-set enumerations in checks.
pub fn frame_morphisms(source: &Frame, target: &Frame) -> Vec<FrameMorphism> {
    let n = source.len();
    let m = target.len();
    let total = (m as u64).pow(n as u32);
    (0..total)
        .filter_map(|mut code| {
            let map: Vec<usize> = (0..n)
                .map(|_| {
                    let d = (code % m as u64) as usize;
                    code /= m as u64;
                    d
                })
                .collect();
            FrameMorphism::new(source.clone(), target.clone(), map).ok()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::topology::continuous_maps;

    #[test]
    fn frame_verification() {
        assert!(Frame::verify(fixtures::boolean_lattice(&["a", "b"])).is_ok());
        assert!(Frame::verify(fixtures::chain_lattice(3)).is_ok());
        let err = Frame::verify(fixtures::m3()).unwrap_err();
        assert!(matches!(err, FrameError::NotAFrame { .. }));
    }

    #[test]
    fn primes_examples() {
        let f = Frame::powerset(&["a".to_string(), "b".to_string()]);
        let labels: Vec<&str> = f.primes().iter().map(|&p| f.lattice().label(p)).collect();
        assert_eq!(labels, vec!["{a}", "{b}"]);

        let c = Frame::verify(fixtures::chain_lattice(3)).unwrap();
        let labels: Vec<&str> = c.primes().iter().map(|&p| c.lattice().label(p)).collect();
        assert_eq!(labels, vec!["p0", "p1"]);

        // M3 is not a frame; primes are still well-defined on the lattice
        // level and there are none. Check through a frame-free scan.
        let m3 = fixtures::m3();
        let n = m3.len();
        let primes: Vec<usize> = (0..n)
            .filter(|&p| {
                p != m3.top()
                    && (0..n).all(|a| {
                        (0..n)
                            .all(|b| !m3.leq(m3.meet_pair(a, b), p) || m3.leq(a, p) || m3.leq(b, p))
                    })
            })
            .collect();
        assert!(primes.is_empty());
    }

    #[test]
    fn stone_opens() {
        let f = Frame::powerset(&["a".to_string(), "b".to_string()]);
        let a = f.lattice().index_of("{a}").unwrap();
        // U({a}) = the single prime not above {a}, namely {b}
        let u = f.stone_open(a);
        let primes = f.primes();
        let members: Vec<&str> = u.iter().map(|k| f.lattice().label(primes[k])).collect();
        assert_eq!(members, vec!["{b}"]);
        assert_eq!(f.stone_open(f.lattice().bottom()), Subset::EMPTY);
        assert_eq!(
            f.stone_open(f.lattice().top()),
            Subset::full(f.primes().len())
        );
    }

    #[test]
    fn spectra() {
        let f = Frame::powerset(&["a".to_string(), "b".to_string()]);
        let sp = f.spectrum();
        assert!(sp.space.is_homeomorphic(&fixtures::discrete(&["x", "y"])));

        let c = Frame::verify(fixtures::chain_lattice(3)).unwrap();
        assert!(c.spectrum().space.is_homeomorphic(&fixtures::sierpinski()));

        let m3_frame_err = Frame::verify(fixtures::m3());
        assert!(m3_frame_err.is_err());
    }

    #[test]
    fn enough_points() {
        assert!(Frame::powerset(&["a".to_string(), "b".to_string()]).has_enough_points());
        let c = Frame::verify(fixtures::chain_lattice(4)).unwrap();
        assert!(c.has_enough_points());
    }

    #[test]
    fn adjunction_unit_iso_iff_enough_points() {
        for l in [
            fixtures::boolean_lattice(&["a", "b"]),
            fixtures::chain_lattice(1),
            fixtures::chain_lattice(4),
            fixtures::diamond_lattice(),
        ] {
            let f = Frame::verify(l).unwrap();
            let unit = f.adjunction_unit();
            assert_eq!(unit.is_isomorphism(), f.has_enough_points());
            assert!(f.has_enough_points());
        }
    }

    #[test]
    fn spectrum_maps() {
        // identity morphism -> identity map
        let f = Frame::verify(fixtures::chain_lattice(3)).unwrap();
        let id = FrameMorphism::identity(&f);
        let m = id.spectrum_map().unwrap();
        assert_eq!(m.map, vec![0, 1]);

        // inclusion of the chain {{},{b},{a,b}} into 2^{a,b}
        let big = Frame::powerset(&["a".to_string(), "b".to_string()]);
        let sub: Vec<usize> = ["{}", "{b}", "{a,b}"]
            .iter()
            .map(|l| big.lattice().index_of(l).unwrap())
            .collect();
        let chain = Frame::verify(fixtures::chain_lattice(3)).unwrap();
        let incl = FrameMorphism::new(chain.clone(), big.clone(), sub).unwrap();
        let m = incl.spectrum_map().unwrap();
        // both primes of 2^{a,b} land on distinct primes of the chain
        let mut images = m.map.clone();
        images.sort_unstable();
        assert_eq!(images, vec![0, 1]);
    }

    #[test]
    fn duality_roundtrips() {
        // all continuous maps from Sierpinski to Sp(3-chain)
        let f = Frame::verify(fixtures::chain_lattice(3)).unwrap();
        let sp = f.spectrum();
        let x = fixtures::sierpinski();
        let maps = continuous_maps(&x, &sp.space);
        assert!(!maps.is_empty());
        for map in maps {
            let g = ContinuousMap::new(x.clone(), sp.space.clone(), map).unwrap();
            let h = map_to_morphism(&g, &f).unwrap();
            let g2 = morphism_to_map(&h, &x).unwrap();
            assert_eq!(g, g2);
        }

        // all frame morphisms 2^{a} -> O(point)
        let pa = Frame::powerset(&["a".to_string()]);
        let point = FiniteSpace::from_opens(vec!["x".to_string()], &[]);
        let target = point.open_lattice();
        for h in frame_morphisms(&pa, &target) {
            let g = morphism_to_map(&h, &point).unwrap();
            let h2 = map_to_morphism(&g, &pa).unwrap();
            assert_eq!(h.map, h2.map);
        }

        // identity on Sp(F) corresponds to the adjunction unit
        let sp_space = sp.space.clone();
        let id = ContinuousMap::new(sp_space.clone(), sp_space, (0..2).collect()).unwrap();
        let h = map_to_morphism(&id, &f).unwrap();
        assert_eq!(h.map, f.adjunction_unit().map);
    }

    #[test]
    fn sp_contravariant_on_composites() {
        let two = Frame::verify(fixtures::chain_lattice(2)).unwrap();
        let three = Frame::verify(fixtures::chain_lattice(3)).unwrap();
        for f in frame_morphisms(&two, &three) {
            for g in frame_morphisms(&three, &two) {
                let fg = f.compose(&g).unwrap();
                let lhs = fg.spectrum_map().unwrap();
                let sp_g = g.spectrum_map().unwrap();
                let sp_f = f.spectrum_map().unwrap();
                let rhs: Vec<usize> = sp_g.map.iter().map(|&i| sp_f.map[i]).collect();
                assert_eq!(lhs.map, rhs);
            }
        }
    }

    #[test]
    fn coherence_reports() {
        for l in [
            fixtures::diamond_lattice(),
            fixtures::chain_lattice(1),
            fixtures::chain_lattice(4),
            fixtures::boolean_lattice(&["a", "b", "c"]),
        ] {
            let r = coherence_report(&l);
            assert!(r.is_consistent() && r.all(), "{r:?}");
        }
        for l in [fixtures::m3(), fixtures::n5()] {
            let r = coherence_report(&l);
            assert!(r.is_consistent() && !r.coherent_frame, "{r:?}");
        }
    }
}
