//! Finite topological spaces: sobriety, spectrality, quasi-compact opens,
//! Hochster duality, and open-set frames.

use crate::bits::Subset;
use crate::frame::Frame;
use crate::poset::Poset;
use thiserror::Error;

/// Quasi-compactness is checked against every subfamily of opens up to this
/// family size; beyond it the finite-space shortcut (all opens are
/// quasi-compact) is used directly.
pub const COVER_ENUM_MAX: usize = 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TopologyError {
    #[error("space is not T0: points {0} and {1} have the same open neighbourhoods")]
    NotT0(String, String),
    #[error("space is not spectral")]
    NotSpectral,
    #[error("map is not continuous")]
    NotContinuous,
    #[error("unknown point label: {0}")]
    UnknownPoint(String),
}

/// Which Alexandrov topology to put on a poset.
///
/// With the convention `p <= q` meaning "p contained in q", Zariski-closed
/// subsets are the up-closed ones, so the Zariski side takes down-sets as
/// opens; the dual side takes up-sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlexandrovSide {
    Zariski,
    Dual,
}

/// A finite topological space. The open family always contains the empty
/// and full subsets and is closed under union and intersection; it is kept
/// sorted in canonical family order.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteSpace {
    points: Vec<String>,
    opens: Vec<Subset>,
}

impl std::fmt::Debug for FiniteSpace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "FiniteSpace({:?}, {} opens)",
            self.points,
            self.opens.len()
        )
    }
}

impl FiniteSpace {
    /// The topology generated by the given subsets: close under union and
    /// intersection and adjoin the empty and full sets.
    pub fn from_opens(points: Vec<String>, generators: &[Subset]) -> FiniteSpace {
        let n = points.len();
        let full = Subset::full(n);
        let mut opens: Vec<Subset> = vec![Subset::EMPTY, full];
        opens.extend(generators.iter().map(|&g| g & full));
        opens.sort_by_key(|s| s.canonical_key());
        opens.dedup();
        loop {
            let mut added = false;
            let current = opens.clone();
            for (k, &a) in current.iter().enumerate() {
                for &b in &current[k + 1..] {
                    for c in [a | b, a & b] {
                        if !opens.contains(&c) {
                            opens.push(c);
                            added = true;
                        }
                    }
                }
            }
            if !added {
                break;
            }
            opens.sort_by_key(|s| s.canonical_key());
            opens.dedup();
        }
        opens.sort_by_key(|s| s.canonical_key());
        opens.dedup();
        FiniteSpace { points, opens }
    }

    /// Builds from a family already closed under union and intersection;
    /// the closure properties are asserted rather than forced.
    pub(crate) fn from_closed_family(points: Vec<String>, mut opens: Vec<Subset>) -> FiniteSpace {
        let full = Subset::full(points.len());
        opens.sort_by_key(|s| s.canonical_key());
        opens.dedup();
        assert!(opens.contains(&Subset::EMPTY) && opens.contains(&full));
        for &a in &opens {
            for &b in &opens {
                assert!(opens.contains(&(a | b)) && opens.contains(&(a & b)));
            }
        }
        FiniteSpace { points, opens }
    }

    /// The Alexandrov topology of a poset.
    pub fn alexandrov(p: &Poset, side: AlexandrovSide) -> FiniteSpace {
        let opens = match side {
            AlexandrovSide::Zariski => p.down_closed_subsets(),
            AlexandrovSide::Dual => p.up_closed_subsets(),
        };
        FiniteSpace {
            points: p.labels().to_vec(),
            opens,
        }
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn opens(&self) -> &[Subset] {
        &self.opens
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.points[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.points.iter().position(|p| p == label)
    }

    pub fn is_open(&self, s: Subset) -> bool {
        self.opens.contains(&s)
    }

    pub fn is_closed(&self, s: Subset) -> bool {
        self.is_open(s.complement(self.len()))
    }

    pub fn closed_sets(&self) -> Vec<Subset> {
        let mut v: Vec<Subset> = self
            .opens
            .iter()
            .map(|o| o.complement(self.len()))
            .collect();
        v.sort_by_key(|s| s.canonical_key());
        v
    }

    /// Smallest closed superset.
    pub fn closure(&self, s: Subset) -> Subset {
        self.closed_sets()
            .into_iter()
            .filter(|c| s.is_subset_of(*c))
            .fold(Subset::full(self.len()), |acc, c| acc & c)
    }

    pub fn is_t0(&self) -> bool {
        self.t0_violation().is_none()
    }

    fn t0_violation(&self) -> Option<(usize, usize)> {
        let n = self.len();
        for i in 0..n {
            for j in i + 1..n {
                if self.opens.iter().all(|o| o.contains(i) == o.contains(j)) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// Specialization order: `p <= q` iff every open containing `q` also
    /// contains `p`, matching "p contained in q" on prime spectra.
    pub fn specialization_order(&self) -> Result<Poset, TopologyError> {
        if let Some((i, j)) = self.t0_violation() {
            return Err(TopologyError::NotT0(
                self.points[i].clone(),
                self.points[j].clone(),
            ));
        }
        let n = self.len();
        let up = (0..n)
            .map(|p| {
                (0..n)
                    .filter(|&q| self.opens.iter().all(|o| !o.contains(q) || o.contains(p)))
                    .collect()
            })
            .collect();
        Ok(Poset::from_up_rows(self.points.clone(), up))
    }

    /// Non-empty irreducible closed subsets: not a union of two proper
    /// closed subsets.
    pub fn irreducible_closed_sets(&self) -> Vec<Subset> {
        let closed = self.closed_sets();
        closed
            .iter()
            .copied()
            .filter(|&c| {
                !c.is_empty()
                    && !closed.iter().any(|&a| {
                        a.is_subset_of(c)
                            && a != c
                            && closed
                                .iter()
                                .any(|&b| b.is_subset_of(c) && b != c && a | b == c)
                    })
            })
            .collect()
    }

    /// Every non-empty irreducible closed subset has a unique generic point.
    pub fn is_sober(&self) -> bool {
        self.irreducible_closed_sets().into_iter().all(|c| {
            let generic: Vec<usize> = c
                .iter()
                .filter(|&x| self.closure(Subset::singleton(x)) == c)
                .collect();
            generic.len() == 1
        })
    }

    /// Opens `U` such that every open cover of `U` has a finite subcover.
    /// The cover scan runs when the open family is small enough and its
    /// outcome is checked against the finite-space shortcut (all opens).
    pub fn quasi_compact_opens(&self) -> Vec<Subset> {
        if self.opens.len() <= COVER_ENUM_MAX {
            let m = self.opens.len();
            let computed: Vec<Subset> = self
                .opens
                .iter()
                .copied()
                .filter(|&u| {
                    Subset::powerset(m).all(|family| {
                        let union = family
                            .iter()
                            .fold(Subset::EMPTY, |acc, k| acc | self.opens[k]);
                        if !u.is_subset_of(union) {
                            return true; // not a cover of u
                        }
                        // a finite subcover exists; the family itself is one
                        let sub: Vec<Subset> = family.iter().map(|k| self.opens[k]).collect();
                        u.is_subset_of(sub.iter().fold(Subset::EMPTY, |a, &o| a | o))
                    })
                })
                .collect();
            assert_eq!(
                computed, self.opens,
                "in a finite space every open is quasi-compact"
            );
            computed
        } else {
            self.opens.clone()
        }
    }

    /// T0, quasi-compact, quasi-compact opens closed under intersection and
    /// forming a basis, and sober. Each clause is checked definitionally.
    pub fn is_spectral(&self) -> bool {
        let qc = self.quasi_compact_opens();
        let full = Subset::full(self.len());
        self.is_t0()
            && qc.contains(&full)
            && qc
                .iter()
                .all(|&a| qc.iter().all(|&b| qc.contains(&(a & b))))
            && self.opens.iter().all(|&o| {
                let union = qc
                    .iter()
                    .filter(|&&q| q.is_subset_of(o))
                    .fold(Subset::EMPTY, |acc, &q| acc | q);
                union == o
            })
            && self.is_sober()
    }

    /// The Hochster dual: same points, opens generated by the complements
    /// of the quasi-compact opens.
    pub fn hochster_dual(&self) -> Result<FiniteSpace, TopologyError> {
        if !self.is_spectral() {
            return Err(TopologyError::NotSpectral);
        }
        let n = self.len();
        let generators: Vec<Subset> = self
            .quasi_compact_opens()
            .into_iter()
            .map(|q| q.complement(n))
            .collect();
        let dual = FiniteSpace::from_opens(self.points.clone(), &generators);
        assert!(dual.is_spectral(), "the Hochster dual must be spectral");
        Ok(dual)
    }

    /// The frame of open subsets, ordered by inclusion.
    pub fn open_lattice(&self) -> Frame {
        let lattice = crate::FiniteLattice::from_subset_family(&self.opens, &self.points)
            .expect("open families form lattices");
        Frame::verify(lattice).expect("open-set lattices satisfy the frame law")
    }

    /// Opens as a set, for order-insensitive comparisons.
    pub fn open_family(&self) -> std::collections::BTreeSet<Subset> {
        self.opens.iter().copied().collect()
    }

    /// Relabels points into lexicographic order, remapping opens.
    pub fn canonicalize(&self) -> FiniteSpace {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by(|&a, &b| self.points[a].cmp(&self.points[b]));
        let mut pos = vec![0usize; self.len()];
        for (new, &old) in order.iter().enumerate() {
            pos[old] = new;
        }
        let points = order.iter().map(|&o| self.points[o].clone()).collect();
        let mut opens: Vec<Subset> = self
            .opens
            .iter()
            .map(|o| o.iter().map(|i| pos[i]).collect())
            .collect();
        opens.sort_by_key(|s: &Subset| s.canonical_key());
        FiniteSpace { points, opens }
    }

    /// Searches for a homeomorphism onto `other`; `map[i]` is the image
    /// point index.
    pub fn homeomorphism(&self, other: &FiniteSpace) -> Option<Vec<usize>> {
        if self.len() != other.len() || self.opens.len() != other.opens.len() {
            return None;
        }
        let sizes = |s: &FiniteSpace| {
            let mut v: Vec<usize> = s.opens.iter().map(|o| o.len()).collect();
            v.sort_unstable();
            v
        };
        if sizes(self) != sizes(other) {
            return None;
        }
        let degree = |s: &FiniteSpace, i: usize| {
            let mut v: Vec<usize> = s
                .opens
                .iter()
                .filter(|o| o.contains(i))
                .map(|o| o.len())
                .collect();
            v.sort_unstable();
            v
        };
        let self_deg: Vec<_> = (0..self.len()).map(|i| degree(self, i)).collect();
        let other_deg: Vec<_> = (0..other.len()).map(|i| degree(other, i)).collect();
        let other_family = other.open_family();
        let mut map = vec![usize::MAX; self.len()];
        let mut used = vec![false; self.len()];
        fn assign(
            s: &FiniteSpace,
            depth: usize,
            map: &mut [usize],
            used: &mut [bool],
            sd: &[Vec<usize>],
            od: &[Vec<usize>],
            other_family: &std::collections::BTreeSet<Subset>,
        ) -> bool {
            if depth == s.len() {
                let ok = s
                    .opens
                    .iter()
                    .all(|o| other_family.contains(&o.iter().map(|i| map[i]).collect()));
                return ok;
            }
            for c in 0..s.len() {
                if used[c] || sd[depth] != od[c] {
                    continue;
                }
                map[depth] = c;
                used[c] = true;
                if assign(s, depth + 1, map, used, sd, od, other_family) {
                    return true;
                }
                used[c] = false;
                map[depth] = usize::MAX;
            }
            false
        }
        if self.is_empty()
            || assign(
                self,
                0,
                &mut map,
                &mut used,
                &self_deg,
                &other_deg,
                &other_family,
            )
        {
            Some(map)
        } else {
            None
        }
    }

    pub fn is_homeomorphic(&self, other: &FiniteSpace) -> bool {
        self.homeomorphism(other).is_some()
    }
}

/// A verified continuous map between finite spaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContinuousMap {
    pub source: FiniteSpace,
    pub target: FiniteSpace,
    pub map: Vec<usize>,
}

impl ContinuousMap {
    pub fn new(
        source: FiniteSpace,
        target: FiniteSpace,
        map: Vec<usize>,
    ) -> Result<ContinuousMap, TopologyError> {
        if map.len() != source.len()
            || map.iter().any(|&i| i >= target.len())
            || !is_continuous(&source, &target, &map)
        {
            return Err(TopologyError::NotContinuous);
        }
        Ok(ContinuousMap {
            source,
            target,
            map,
        })
    }

    pub fn preimage(&self, t: Subset) -> Subset {
        (0..self.source.len())
            .filter(|&x| t.contains(self.map[x]))
            .collect()
    }

    /// Bijective with open image family equal to the target's opens.
    pub fn is_homeomorphism(&self) -> bool {
        let n = self.source.len();
        if n != self.target.len() {
            return false;
        }
        let mut seen = vec![false; n];
        for &i in &self.map {
            seen[i] = true;
        }
        seen.into_iter().all(|s| s)
            && self
                .source
                .opens()
                .iter()
                .map(|o| o.iter().map(|i| self.map[i]).collect())
                .collect::<std::collections::BTreeSet<Subset>>()
                == self.target.open_family()
    }
}

pub fn is_continuous(source: &FiniteSpace, target: &FiniteSpace, map: &[usize]) -> bool {
    target.opens().iter().all(|&o| {
        let pre: Subset = (0..source.len()).filter(|&x| o.contains(map[x])).collect();
        source.is_open(pre)
    })
}

/// Every continuous map from `source` to `target`, by exhausting all
/// functions. Intended for small hom-set enumerations in checks.
pub fn continuous_maps(source: &FiniteSpace, target: &FiniteSpace) -> Vec<Vec<usize>> {
    let n = source.len();
    let m = target.len();
    if n == 0 {
        return vec![Vec::new()];
    }
    if m == 0 {
        return Vec::new();
    }
    let total = (m as u64).pow(n as u32);
    (0..total)
        .map(|mut code| {
            (0..n)
                .map(|_| {
                    let d = (code % m as u64) as usize;
                    code /= m as u64;
                    d
                })
                .collect::<Vec<usize>>()
        })
        .filter(|f| is_continuous(source, target, f))
        .collect()
}
