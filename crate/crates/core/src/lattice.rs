//! Finite complete lattices: joins, meets, distributivity, compact elements,
//! ideals and ideal completion.

use crate::bits::Subset;
use crate::poset::Poset;
use thiserror::Error;

/// Ideal enumeration by subset filtering is used up to this carrier size;
/// beyond it only the principal-ideal construction applies.
pub const IDEAL_ENUM_MAX: usize = 16;

/// Compactness is tested against all directed subsets up to this carrier
/// size. Beyond it the finite case is decided directly: a finite directed
/// set contains its own supremum, so every element is compact.
pub const COMPACT_ENUM_MAX: usize = 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("not a lattice: pair ({a},{b}) has no least upper bound or greatest lower bound")]
    NotALattice { a: String, b: String },
    #[error("empty carrier has no bottom or top")]
    EmptyCarrier,
}

/// A finite lattice over a verified poset, with cached join/meet tables.
///
/// Completeness is automatic: all pairs have bounds and a bottom exists, so
/// every subset has a supremum and an infimum.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteLattice {
    carrier: Poset,
    join_tab: Vec<usize>,
    meet_tab: Vec<usize>,
    bottom: usize,
    top: usize,
}

impl std::fmt::Debug for FiniteLattice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FiniteLattice({:?})", self.carrier)
    }
}

/// An ideal: non-empty, downward closed, closed under binary joins.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Ideal {
    pub members: Subset,
}

/// An ideal completion together with the membership set of each ideal,
/// indexed like the completion's carrier.
#[derive(Clone)]
pub struct IdealCompletion {
    pub lattice: FiniteLattice,
    pub ideal_members: Vec<Subset>,
}

impl FiniteLattice {
    /// Verifies that every pair has a least upper bound and a greatest lower
    /// bound and that a bottom exists, then caches the operation tables.
    pub fn from_poset(carrier: Poset) -> Result<FiniteLattice, LatticeError> {
        let n = carrier.len();
        if n == 0 {
            return Err(LatticeError::EmptyCarrier);
        }
        let witness = |i: usize, j: usize| LatticeError::NotALattice {
            a: carrier.label(i).to_string(),
            b: carrier.label(j).to_string(),
        };
        let mut join_tab = vec![0usize; n * n];
        let mut meet_tab = vec![0usize; n * n];
        for i in 0..n {
            for j in 0..n {
                join_tab[i * n + j] =
                    least_upper_bound(&carrier, i, j).ok_or_else(|| witness(i, j))?;
                meet_tab[i * n + j] =
                    greatest_lower_bound(&carrier, i, j).ok_or_else(|| witness(i, j))?;
            }
        }
        let bottom = carrier.bottom().ok_or(LatticeError::EmptyCarrier)?;
        let top = carrier.top().ok_or(LatticeError::EmptyCarrier)?;
        Ok(FiniteLattice {
            carrier,
            join_tab,
            meet_tab,
            bottom,
            top,
        })
    }

    /// The powerset lattice `2^labels`, elements labelled in set notation.
    pub fn powerset(point_labels: &[String]) -> FiniteLattice {
        let n = point_labels.len();
        let family: Vec<Subset> = Subset::powerset(n).collect();
        Self::from_subset_family(&family, point_labels)
            .expect("powerset family is always a lattice")
    }

    /// A lattice whose elements are the given subsets ordered by inclusion.
    /// Fails if the family is not a lattice under inclusion.
    pub fn from_subset_family(
        family: &[Subset],
        point_labels: &[String],
    ) -> Result<FiniteLattice, LatticeError> {
        let mut sorted: Vec<Subset> = family.to_vec();
        sorted.sort_by_key(|s| s.canonical_key());
        sorted.dedup();
        let labels: Vec<String> = sorted
            .iter()
            .map(|s| crate::set_label(*s, point_labels))
            .collect();
        let up = sorted
            .iter()
            .map(|&s| {
                sorted
                    .iter()
                    .enumerate()
                    .filter(|(_, &t)| s.is_subset_of(t))
                    .map(|(k, _)| k)
                    .collect()
            })
            .collect();
        FiniteLattice::from_poset(Poset::from_up_rows(labels, up))
    }

    pub fn carrier(&self) -> &Poset {
        &self.carrier
    }

    pub fn len(&self) -> usize {
        self.carrier.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction rejects empty carriers
    }

    pub fn label(&self, i: usize) -> &str {
        self.carrier.label(i)
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.carrier.index_of(label)
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.carrier.leq(i, j)
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn join_pair(&self, i: usize, j: usize) -> usize {
        self.join_tab[i * self.len() + j]
    }

    pub fn meet_pair(&self, i: usize, j: usize) -> usize {
        self.meet_tab[i * self.len() + j]
    }

    /// Supremum of a subset; `join({}) = bottom`.
    pub fn join(&self, a: Subset) -> usize {
        a.iter().fold(self.bottom, |acc, i| self.join_pair(acc, i))
    }

    /// Infimum of a subset; `meet({}) = top`.
    pub fn meet(&self, a: Subset) -> usize {
        a.iter().fold(self.top, |acc, i| self.meet_pair(acc, i))
    }

    /// Infimum computed without the tables, as the supremum of the set of
    /// lower bounds. Kept as an independent route for cross-checks.
    pub fn meet_via_lower_bounds(&self, a: Subset) -> Option<usize> {
        let lower: Subset = (0..self.len())
            .filter(|&b| a.iter().all(|x| self.leq(b, x)))
            .collect();
        // Least upper bound of `lower` by scanning the order directly.
        let uppers: Vec<usize> = (0..self.len())
            .filter(|&u| lower.iter().all(|b| self.leq(b, u)))
            .collect();
        uppers
            .iter()
            .copied()
            .find(|&u| uppers.iter().all(|&v| self.leq(u, v)))
    }

    /// A triple violating `a /\ (b \/ c) = (a /\ b) \/ (a /\ c)`, if any.
    pub fn distributivity_witness(&self) -> Option<(usize, usize, usize)> {
        let n = self.len();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let lhs = self.meet_pair(a, self.join_pair(b, c));
                    let rhs = self.join_pair(self.meet_pair(a, b), self.meet_pair(a, c));
                    if lhs != rhs {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    pub fn is_distributive(&self) -> bool {
        self.distributivity_witness().is_none()
    }

    /// Non-empty directed subsets (every pair bounded within the subset),
    /// available only below the enumeration cap.
    fn directed_subsets(&self) -> Option<Vec<Subset>> {
        let n = self.len();
        if n > COMPACT_ENUM_MAX {
            return None;
        }
        let mut out = Vec::new();
        for d in Subset::powerset(n) {
            if d.is_empty() {
                continue;
            }
            let directed = d.iter().all(|a| {
                d.iter()
                    .all(|b| d.iter().any(|u| self.leq(a, u) && self.leq(b, u)))
            });
            if directed {
                out.push(d);
            }
        }
        Some(out)
    }

    /// Whether `a <= join(D)` forces `a <= d` for some `d` in every directed
    /// subset `D`. Finite directed sets contain their own supremum, so above
    /// the enumeration cap the answer is `true` outright.
    pub fn is_compact_element(&self, a: usize) -> bool {
        match self.directed_subsets() {
            Some(ds) => ds
                .iter()
                .all(|&d| !self.leq(a, self.join(d)) || d.iter().any(|x| self.leq(a, x))),
            None => true,
        }
    }

    pub fn compact_elements(&self) -> Subset {
        match self.directed_subsets() {
            Some(ds) => (0..self.len())
                .filter(|&a| {
                    ds.iter()
                        .all(|&d| !self.leq(a, self.join(d)) || d.iter().any(|x| self.leq(a, x)))
                })
                .collect(),
            None => Subset::full(self.len()),
        }
    }

    /// Every element is the supremum of the compact elements below it, and
    /// compact elements are closed under binary joins.
    pub fn is_compactly_generated(&self) -> bool {
        let compacts = self.compact_elements();
        let generated = (0..self.len()).all(|a| {
            let below: Subset = compacts.iter().filter(|&c| self.leq(c, a)).collect();
            self.join(below) == a
        });
        let join_closed = compacts.iter().all(|a| {
            compacts
                .iter()
                .all(|b| compacts.contains(self.join_pair(a, b)))
        });
        generated && join_closed
    }

    pub fn is_ideal(&self, s: Subset) -> bool {
        !s.is_empty()
            && s.iter()
                .all(|b| (0..self.len()).all(|a| !self.leq(a, b) || s.contains(a)))
            && s.iter()
                .all(|a| s.iter().all(|b| s.contains(self.join_pair(a, b))))
    }

    /// All ideals, enumerated by subset filtering when the carrier is small
    /// enough, with the principal family asserted equal as a cross-check.
    /// Larger carriers use the principal family directly: a finite ideal
    /// contains its own join, hence is principal.
    pub fn ideals(&self) -> Vec<Ideal> {
        let principal: Vec<Subset> = {
            let mut v: Vec<Subset> = (0..self.len()).map(|a| self.carrier.down_of(a)).collect();
            v.sort_by_key(|s| s.canonical_key());
            v.dedup();
            v
        };
        let members = if self.len() <= IDEAL_ENUM_MAX {
            let mut found: Vec<Subset> = Subset::powerset(self.len())
                .filter(|&s| self.is_ideal(s))
                .collect();
            found.sort_by_key(|s| s.canonical_key());
            assert_eq!(
                found, principal,
                "ideal enumeration disagrees with the principal family"
            );
            found
        } else {
            principal
        };
        members
            .into_iter()
            .map(|members| Ideal { members })
            .collect()
    }

    /// The ideal completion, ordered by inclusion. For a finite lattice the
    /// principal-ideal map identifies it with the lattice itself.
    pub fn ideal_completion(&self) -> IdealCompletion {
        let all: Vec<usize> = (0..self.len()).collect();
        self.ideal_completion_of_subposet(&all)
    }

    /// Ideal completion of the induced order on `elems`, which must contain
    /// a least element and be closed under binary joins of the lattice.
    pub fn ideal_completion_of_subposet(&self, elems: &[usize]) -> IdealCompletion {
        assert!(
            self.sub_join_closed(elems),
            "subposet is not closed under binary joins"
        );
        let k = elems.len();
        let pos = |e: usize| elems.iter().position(|&x| x == e).unwrap();
        // Ideals of the subposet, as masks over positions in `elems`.
        let principal: Vec<Subset> = {
            let mut v: Vec<Subset> = elems
                .iter()
                .map(|&a| {
                    elems
                        .iter()
                        .enumerate()
                        .filter(|(_, &x)| self.leq(x, a))
                        .map(|(p, _)| p)
                        .collect()
                })
                .collect();
            v.sort_by_key(|s: &Subset| s.canonical_key());
            v.dedup();
            v
        };
        let is_sub_ideal = |s: Subset| -> bool {
            !s.is_empty()
                && s.iter()
                    .all(|bp| (0..k).all(|ap| !self.leq(elems[ap], elems[bp]) || s.contains(ap)))
                && s.iter().all(|ap| {
                    s.iter()
                        .all(|bp| s.contains(pos(self.join_pair(elems[ap], elems[bp]))))
                })
        };
        let ideal_masks: Vec<Subset> = if k <= IDEAL_ENUM_MAX {
            let mut found: Vec<Subset> = Subset::powerset(k).filter(|&s| is_sub_ideal(s)).collect();
            found.sort_by_key(|s| s.canonical_key());
            assert_eq!(
                found, principal,
                "subposet ideal enumeration disagrees with the principal family"
            );
            found
        } else {
            principal
        };
        // Each ideal here is principal; label it by its generator.
        let labels: Vec<String> = ideal_masks
            .iter()
            .map(|m| {
                let gen = self.join(m.iter().map(|p| elems[p]).collect());
                self.label(gen).to_string()
            })
            .collect();
        let up = ideal_masks
            .iter()
            .map(|&s| {
                ideal_masks
                    .iter()
                    .enumerate()
                    .filter(|(_, &t)| s.is_subset_of(t))
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect();
        let lattice = FiniteLattice::from_poset(Poset::from_up_rows(labels, up))
            .expect("ideal completion is a lattice");
        let ideal_members = ideal_masks
            .iter()
            .map(|m| m.iter().map(|p| elems[p]).collect())
            .collect();
        IdealCompletion {
            lattice,
            ideal_members,
        }
    }

    fn sub_join_closed(&self, elems: &[usize]) -> bool {
        elems
            .iter()
            .all(|&a| elems.iter().all(|&b| elems.contains(&self.join_pair(a, b))))
    }

    /// Verifies that `a -> I(a) /\ compacts` is an order isomorphism onto
    /// the ideal completion of the compact elements.
    pub fn le_compact_iso_check(&self) -> bool {
        let compacts: Vec<usize> = self.compact_elements().iter().collect();
        if compacts.is_empty() || !self.sub_join_closed(&compacts) {
            return false;
        }
        let completion = self.ideal_completion_of_subposet(&compacts);
        let image: Vec<Option<usize>> = (0..self.len())
            .map(|a| {
                let members: Subset = compacts
                    .iter()
                    .copied()
                    .filter(|&c| self.leq(c, a))
                    .collect();
                completion.ideal_members.iter().position(|&m| m == members)
            })
            .collect();
        if image.iter().any(|i| i.is_none()) {
            return false;
        }
        let image: Vec<usize> = image.into_iter().map(|i| i.unwrap()).collect();
        // Bijective?
        let mut seen = vec![false; completion.lattice.len()];
        for &i in &image {
            seen[i] = true;
        }
        if self.len() != completion.lattice.len() || seen.iter().any(|s| !s) {
            return false;
        }
        // Order preserved both ways?
        (0..self.len()).all(|a| {
            (0..self.len()).all(|b| self.leq(a, b) == completion.lattice.leq(image[a], image[b]))
        })
    }

    /// Componentwise product. The empty product is the one-point lattice.
    pub fn product(factors: &[&FiniteLattice]) -> FiniteLattice {
        let mut labels = vec![String::new()];
        let mut tuples: Vec<Vec<usize>> = vec![vec![]];
        for f in factors {
            let mut next_labels = Vec::new();
            let mut next_tuples = Vec::new();
            for (t, l) in tuples.iter().zip(&labels) {
                for i in 0..f.len() {
                    let mut t2 = t.clone();
                    t2.push(i);
                    next_tuples.push(t2);
                    next_labels.push(if l.is_empty() {
                        f.label(i).to_string()
                    } else {
                        format!("{l},{}", f.label(i))
                    });
                }
            }
            tuples = next_tuples;
            labels = next_labels;
        }
        let labels: Vec<String> = labels.into_iter().map(|l| format!("({l})")).collect();
        let leq = |a: &Vec<usize>, b: &Vec<usize>| {
            a.iter()
                .zip(b)
                .enumerate()
                .all(|(k, (&x, &y))| factors[k].leq(x, y))
        };
        let up = tuples
            .iter()
            .map(|a| {
                tuples
                    .iter()
                    .enumerate()
                    .filter(|(_, b)| leq(a, b))
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect();
        FiniteLattice::from_poset(Poset::from_up_rows(labels, up))
            .expect("product of lattices is a lattice")
    }

    /// Order isomorphism onto `other`; order isomorphisms of lattices
    /// automatically preserve joins and meets.
    pub fn isomorphism(&self, other: &FiniteLattice) -> Option<Vec<usize>> {
        self.carrier.isomorphism(&other.carrier)
    }

    pub fn is_isomorphic(&self, other: &FiniteLattice) -> bool {
        self.isomorphism(other).is_some()
    }

    /// The lattice with the opposite order.
    pub fn opposite(&self) -> Result<FiniteLattice, LatticeError> {
        FiniteLattice::from_poset(self.carrier.opposite())
    }
}

fn least_upper_bound(p: &Poset, i: usize, j: usize) -> Option<usize> {
    let uppers: Vec<usize> = (0..p.len())
        .filter(|&u| p.leq(i, u) && p.leq(j, u))
        .collect();
    uppers
        .iter()
        .copied()
        .find(|&u| uppers.iter().all(|&v| p.leq(u, v)))
}

fn greatest_lower_bound(p: &Poset, i: usize, j: usize) -> Option<usize> {
    let lowers: Vec<usize> = (0..p.len())
        .filter(|&l| p.leq(l, i) && p.leq(l, j))
        .collect();
    lowers
        .iter()
        .copied()
        .find(|&l| lowers.iter().all(|&v| p.leq(v, l)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn diamond_is_lattice() {
        let l = fixtures::diamond_lattice();
        assert_eq!(l.len(), 4);
        assert_eq!(l.label(l.bottom()), "0");
        assert_eq!(l.label(l.top()), "1");
    }

    #[test]
    fn antichain_is_not() {
        let p = Poset::from_pairs(&["a", "b"], &[] as &[(&str, &str)]).unwrap();
        let err = FiniteLattice::from_poset(p).unwrap_err();
        assert_eq!(
            err,
            LatticeError::NotALattice {
                a: "a".to_string(),
                b: "b".to_string()
            }
        );
    }

    #[test]
    fn powerset_is_boolean() {
        let l = fixtures::boolean_lattice(&["a", "b"]);
        assert_eq!(l.len(), 4);
        let a = l.index_of("{a}").unwrap();
        let b = l.index_of("{b}").unwrap();
        assert_eq!(l.label(l.join_pair(a, b)), "{a,b}");
        assert_eq!(l.label(l.meet_pair(a, b)), "{}");
    }

    #[test]
    fn empty_join_and_meet() {
        let l = fixtures::chain_lattice(3);
        assert_eq!(l.join(Subset::EMPTY), l.bottom());
        assert_eq!(l.meet(Subset::EMPTY), l.top());
    }

    #[test]
    fn meet_agrees_with_lower_bound_route() {
        for l in [
            fixtures::chain_lattice(4),
            fixtures::diamond_lattice(),
            fixtures::boolean_lattice(&["a", "b", "c"]),
            fixtures::n5(),
            fixtures::m3(),
        ] {
            for a in Subset::powerset(l.len()) {
                assert_eq!(Some(l.meet(a)), l.meet_via_lower_bounds(a));
            }
        }
    }

    #[test]
    fn distributivity() {
        assert!(fixtures::diamond_lattice().is_distributive());
        let w = fixtures::n5().distributivity_witness();
        assert!(w.is_some());
        let w = fixtures::m3().distributivity_witness();
        let (a, b, c) = w.expect("M3 must fail distributivity");
        let l = fixtures::m3();
        assert_ne!(
            l.meet_pair(a, l.join_pair(b, c)),
            l.join_pair(l.meet_pair(a, b), l.meet_pair(a, c))
        );
    }

    #[test]
    fn all_elements_compact_in_finite_lattices() {
        for l in [
            fixtures::chain_lattice(1),
            fixtures::boolean_lattice(&["a", "b", "c"]),
            fixtures::n5(),
        ] {
            assert_eq!(l.compact_elements(), Subset::full(l.len()));
            assert!(l.is_compactly_generated());
            assert!(l.is_compact_element(l.bottom()));
            assert!(l.is_compact_element(l.top()));
        }
    }

    #[test]
    fn ideals_of_small_lattices() {
        let two = fixtures::chain_lattice(2);
        let ideals = two.ideals();
        assert_eq!(ideals.len(), 2);
        assert_eq!(ideals[0].members, Subset::singleton(0));
        assert_eq!(ideals[1].members, Subset::full(2));

        let b = fixtures::boolean_lattice(&["a", "b"]);
        assert_eq!(b.ideals().len(), 4);

        let one = fixtures::chain_lattice(1);
        assert_eq!(one.ideals().len(), 1);
    }

    #[test]
    fn ideal_completion_is_identity_up_to_iso() {
        for l in [
            fixtures::chain_lattice(3),
            fixtures::diamond_lattice(),
            fixtures::n5(),
            fixtures::boolean_lattice(&["a", "b", "c"]),
        ] {
            let c = l.ideal_completion();
            assert!(l.is_isomorphic(&c.lattice));
        }
    }

    #[test]
    fn compact_ideal_isomorphism() {
        assert!(fixtures::boolean_lattice(&["a", "b", "c"]).le_compact_iso_check());
        assert!(fixtures::chain_lattice(4).le_compact_iso_check());
        assert!(fixtures::chain_lattice(1).le_compact_iso_check());
    }

    #[test]
    fn products() {
        let two = fixtures::chain_lattice(2);
        let prod = FiniteLattice::product(&[&two, &two]);
        assert!(prod.is_isomorphic(&fixtures::diamond_lattice()));

        let one = fixtures::chain_lattice(1);
        let l = fixtures::n5();
        assert!(FiniteLattice::product(&[&l, &one]).is_isomorphic(&l));

        let pa = fixtures::boolean_lattice(&["a"]);
        let pb = fixtures::boolean_lattice(&["b"]);
        let pab = fixtures::boolean_lattice(&["a", "b"]);
        assert!(FiniteLattice::product(&[&pa, &pb]).is_isomorphic(&pab));

        let empty = FiniteLattice::product(&[]);
        assert_eq!(empty.len(), 1);
    }

    #[test]
    fn product_of_distributive_is_distributive() {
        let d = fixtures::diamond_lattice();
        let c = fixtures::chain_lattice(3);
        assert!(FiniteLattice::product(&[&d, &c]).is_distributive());
    }
}
