//! Finite partially ordered sets.
//!
//! A [`Poset`] stores an explicit reflexive-transitive-antisymmetric relation
//! over a small labelled carrier. The convention for prime-spectrum-like
//! posets throughout the crate is `p <= q` meaning "p is contained in q", so
//! Zariski-closed subsets are up-closed and Zariski-open ones down-closed.

use crate::bits::{Subset, MAX_UNIVERSE};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PosetError {
    #[error("unknown label: {0}")]
    UnknownLabel(String),
    #[error("duplicate label: {0}")]
    DuplicateLabel(String),
    #[error("order cycle through {0} and {1}")]
    Cycle(String, String),
    #[error("carrier too large: {0} elements (max {MAX_UNIVERSE})")]
    TooLarge(usize),
}

/// A finite poset: labelled elements plus the full order relation.
///
/// `up[i]` is the principal up-set `{j : i <= j}` as an index subset; the
/// relation is kept closed, so `leq` is a single bit probe.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poset {
    labels: Vec<String>,
    up: Vec<Subset>,
}

impl std::fmt::Debug for Poset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Poset({:?}, covers: {:?})",
            self.labels,
            self.cover_pairs()
        )
    }
}

impl Poset {
    /// Builds a poset as the reflexive-transitive closure of generating pairs.
    pub fn from_pairs<S, T>(labels: &[S], pairs: &[(T, T)]) -> Result<Poset, PosetError>
    where
        S: AsRef<str>,
        T: AsRef<str>,
    {
        let labels: Vec<String> = labels.iter().map(|s| s.as_ref().to_string()).collect();
        let n = labels.len();
        if n > MAX_UNIVERSE {
            return Err(PosetError::TooLarge(n));
        }
        for (k, l) in labels.iter().enumerate() {
            if labels[..k].contains(l) {
                return Err(PosetError::DuplicateLabel(l.clone()));
            }
        }
        let index = |l: &str| -> Result<usize, PosetError> {
            labels
                .iter()
                .position(|x| x == l)
                .ok_or_else(|| PosetError::UnknownLabel(l.to_string()))
        };
        let mut up: Vec<Subset> = (0..n).map(Subset::singleton).collect();
        for (a, b) in pairs {
            let (i, j) = (index(a.as_ref())?, index(b.as_ref())?);
            up[i].insert(j);
        }
        // Warshall closure on bit rows.
        for k in 0..n {
            for i in 0..n {
                if up[i].contains(k) {
                    up[i] = up[i] | up[k];
                }
            }
        }
        for i in 0..n {
            for j in 0..i {
                if up[i].contains(j) && up[j].contains(i) {
                    return Err(PosetError::Cycle(labels[j].clone(), labels[i].clone()));
                }
            }
        }
        Ok(Poset { labels, up })
    }

    /// Builds directly from closed relation rows. Used internally by
    /// constructions that already have a verified order.
    pub(crate) fn from_up_rows(labels: Vec<String>, up: Vec<Subset>) -> Poset {
        let p = Poset { labels, up };
        debug_assert!(p.check_order_axioms().is_ok());
        p
    }

    /// Exhaustive reflexivity / antisymmetry / transitivity check.
    pub fn check_order_axioms(&self) -> Result<(), String> {
        let n = self.len();
        for i in 0..n {
            if !self.leq(i, i) {
                return Err(format!("not reflexive at {}", self.labels[i]));
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i != j && self.leq(i, j) && self.leq(j, i) {
                    return Err(format!(
                        "not antisymmetric at {},{}",
                        self.labels[i], self.labels[j]
                    ));
                }
                for k in 0..n {
                    if self.leq(i, j) && self.leq(j, k) && !self.leq(i, k) {
                        return Err(format!(
                            "not transitive at {},{},{}",
                            self.labels[i], self.labels[j], self.labels[k]
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.up[i].contains(j)
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq(i, j)
    }

    /// Principal up-set `{j : i <= j}`.
    pub fn up_of(&self, i: usize) -> Subset {
        self.up[i]
    }

    /// Principal down-set `{j : j <= i}`.
    pub fn down_of(&self, i: usize) -> Subset {
        (0..self.len()).filter(|&j| self.leq(j, i)).collect()
    }

    /// Smallest up-closed superset of `a`.
    pub fn up_set(&self, a: Subset) -> Subset {
        a.iter().fold(Subset::EMPTY, |acc, i| acc | self.up[i])
    }

    /// Smallest down-closed superset of `a`.
    pub fn down_set(&self, a: Subset) -> Subset {
        a.iter().fold(Subset::EMPTY, |acc, i| acc | self.down_of(i))
    }

    pub fn is_up_closed(&self, a: Subset) -> bool {
        self.up_set(a) == a
    }

    pub fn is_down_closed(&self, a: Subset) -> bool {
        self.down_set(a) == a
    }

    /// All up-closed subsets, in canonical family order.
    pub fn up_closed_subsets(&self) -> Vec<Subset> {
        let mut v: Vec<Subset> = Subset::powerset(self.len())
            .filter(|&s| self.is_up_closed(s))
            .collect();
        v.sort_by_key(|s| s.canonical_key());
        v
    }

    /// All down-closed subsets, in canonical family order.
    pub fn down_closed_subsets(&self) -> Vec<Subset> {
        let mut v: Vec<Subset> = Subset::powerset(self.len())
            .filter(|&s| self.is_down_closed(s))
            .collect();
        v.sort_by_key(|s| s.canonical_key());
        v
    }

    /// The same carrier with the transposed relation.
    pub fn opposite(&self) -> Poset {
        let n = self.len();
        let up = (0..n).map(|i| self.down_of(i)).collect();
        Poset {
            labels: self.labels.clone(),
            up,
        }
    }

    /// Maximal elements (no strictly larger element).
    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| (0..self.len()).all(|j| !self.lt(i, j)))
            .collect()
    }

    /// Minimal elements.
    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| (0..self.len()).all(|j| !self.lt(j, i)))
            .collect()
    }

    /// The unique top element, if one exists.
    pub fn top(&self) -> Option<usize> {
        (0..self.len()).find(|&i| (0..self.len()).all(|j| self.leq(j, i)))
    }

    /// The unique bottom element, if one exists.
    pub fn bottom(&self) -> Option<usize> {
        (0..self.len()).find(|&i| (0..self.len()).all(|j| self.leq(i, j)))
    }

    /// Cover pairs `(i, j)`: the transitive reduction of the strict order.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if self.lt(i, j) && !(0..n).any(|k| self.lt(i, k) && self.lt(k, j)) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Cover pairs as label pairs.
    pub fn cover_pairs(&self) -> Vec<(String, String)> {
        self.covers()
            .into_iter()
            .map(|(i, j)| (self.labels[i].clone(), self.labels[j].clone()))
            .collect()
    }

    /// Relabels and reorders elements so labels are sorted lexicographically.
    pub fn canonicalize(&self) -> Poset {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by(|&a, &b| self.labels[a].cmp(&self.labels[b]));
        self.permuted(&order)
    }

    /// New poset whose element `k` is old element `order[k]`.
    pub(crate) fn permuted(&self, order: &[usize]) -> Poset {
        let pos_of_old: Vec<usize> = {
            let mut v = vec![0; self.len()];
            for (new, &old) in order.iter().enumerate() {
                v[old] = new;
            }
            v
        };
        let labels = order.iter().map(|&o| self.labels[o].clone()).collect();
        let up = order
            .iter()
            .map(|&o| self.up[o].iter().map(|j| pos_of_old[j]).collect())
            .collect();
        Poset { labels, up }
    }

    /// Searches for an order isomorphism; returns `map` with `map[i]` the
    /// image in `other` of element `i`.
    pub fn isomorphism(&self, other: &Poset) -> Option<Vec<usize>> {
        if self.len() != other.len() {
            return None;
        }
        let n = self.len();
        // Invariant: (|down|, |up|) profile must match.
        let prof = |p: &Poset, i: usize| (p.down_of(i).len(), p.up_of(i).len());
        let mut self_prof: Vec<_> = (0..n).map(|i| prof(self, i)).collect();
        let mut other_prof: Vec<_> = (0..n).map(|i| prof(other, i)).collect();
        {
            let mut a = self_prof.clone();
            let mut b = other_prof.clone();
            a.sort_unstable();
            b.sort_unstable();
            if a != b {
                return None;
            }
        }
        // Most-constrained-first assignment order.
        let mut order: Vec<usize> = (0..n).collect();
        let count =
            |p: &Vec<(usize, usize)>, v: (usize, usize)| p.iter().filter(|&&x| x == v).count();
        order.sort_by_key(|&i| count(&self_prof, self_prof[i]));
        self_prof.shrink_to_fit();
        other_prof.shrink_to_fit();

        let search = IsoSearch {
            s: self,
            o: other,
            order: &order,
            sp: &self_prof,
            op: &other_prof,
        };
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        if search.assign(0, &mut map, &mut used) {
            Some(map)
        } else {
            None
        }
    }

    pub fn is_isomorphic(&self, other: &Poset) -> bool {
        self.isomorphism(other).is_some()
    }
}

struct IsoSearch<'a> {
    s: &'a Poset,
    o: &'a Poset,
    order: &'a [usize],
    sp: &'a [(usize, usize)],
    op: &'a [(usize, usize)],
}

impl IsoSearch<'_> {
    fn assign(&self, depth: usize, map: &mut [usize], used: &mut [bool]) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let i = self.order[depth];
        for c in 0..self.o.len() {
            if used[c] || self.sp[i] != self.op[c] {
                continue;
            }
            // Consistency with everything already placed.
            let ok = self.order[..depth].iter().all(|&j| {
                self.s.leq(i, j) == self.o.leq(c, map[j])
                    && self.s.leq(j, i) == self.o.leq(map[j], c)
            });
            if !ok {
                continue;
            }
            map[i] = c;
            used[c] = true;
            if self.assign(depth + 1, map, used) {
                return true;
            }
            used[c] = false;
            map[i] = usize::MAX;
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn chain(n: usize) -> Poset {
        let labels: Vec<String> = (0..n).map(|i| format!("p{i}")).collect();
        let pairs: Vec<(String, String)> = (1..n)
            .map(|i| (format!("p{}", i - 1), format!("p{i}")))
            .collect();
        Poset::from_pairs(&labels, &pairs).unwrap()
    }

    fn diamond() -> Poset {
        Poset::from_pairs(
            &["0", "a", "b", "1"],
            &[("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")],
        )
        .unwrap()
    }

    #[test]
    fn from_pairs_closure() {
        let p = chain(3);
        assert!(p.leq(0, 2), "closure must add p0 <= p2");
        assert!(p.check_order_axioms().is_ok());
    }

    #[test]
    fn singleton_and_cycle() {
        let s = Poset::from_pairs(&["a"], &[] as &[(&str, &str)]).unwrap();
        assert_eq!(s.len(), 1);
        let err = Poset::from_pairs(&["a", "b"], &[("a", "b"), ("b", "a")]).unwrap_err();
        assert!(matches!(err, PosetError::Cycle(..)));
        let err = Poset::from_pairs(&["a"], &[("a", "z")]).unwrap_err();
        assert!(matches!(err, PosetError::UnknownLabel(..)));
    }

    #[test]
    fn opposite_involution() {
        for p in [chain(2), chain(4), diamond()] {
            assert_eq!(p.opposite().opposite(), p);
        }
        let anti = Poset::from_pairs(&["a", "b"], &[] as &[(&str, &str)]).unwrap();
        assert_eq!(anti.opposite(), anti);
        let d = diamond().opposite();
        assert!(d.leq(3, 0) && d.leq(d.index_of("1").unwrap(), d.index_of("a").unwrap()));
    }

    #[test]
    fn up_down_sets() {
        let p = chain(2);
        assert_eq!(p.up_set(Subset::singleton(0)), Subset::full(2));
        assert_eq!(p.down_set(Subset::singleton(1)), Subset::full(2));
        assert_eq!(p.up_set(Subset::EMPTY), Subset::EMPTY);
    }

    #[test]
    fn covers_examples() {
        let p = chain(3);
        assert_eq!(
            p.cover_pairs(),
            vec![
                ("p0".to_string(), "p1".to_string()),
                ("p1".to_string(), "p2".to_string())
            ]
        );
        let d = diamond();
        assert_eq!(d.covers().len(), 4);
        let anti = Poset::from_pairs(&["a", "b"], &[] as &[(&str, &str)]).unwrap();
        assert!(anti.covers().is_empty());
    }

    #[test]
    fn covers_regenerate_order() {
        for p in [chain(4), diamond()] {
            let q = Poset::from_pairs(p.labels(), &p.cover_pairs()).unwrap();
            assert_eq!(p, q);
        }
    }

    #[test]
    fn isomorphism_search() {
        let p = Poset::from_pairs(&["x", "y", "z"], &[("x", "y"), ("y", "z")]).unwrap();
        let map = chain(3).isomorphism(&p).unwrap();
        assert_eq!(map, vec![0, 1, 2]);
        assert!(!chain(3).is_isomorphic(&diamond()));
    }
}
