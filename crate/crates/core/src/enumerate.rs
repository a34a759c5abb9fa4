//! Exhaustive enumeration of small instances up to isomorphism and a
//! seeded random-lattice corpus.
//!
//! Posets are generated by repeatedly adjoining a maximal element over
//! every down-closed subset and deduplicating by a canonical relation code.
//! Finite topologies are exactly the Alexandrov topologies of preorders,
//! and a preorder is a poset of equivalence classes with sizes, so spaces
//! are enumerated from the poset list.

use crate::bits::Subset;
use crate::lattice::FiniteLattice;
use crate::poset::Poset;
use crate::topology::FiniteSpace;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

/// Enumeration cap: the relation code of an instance must fit one word.
pub const ENUM_MAX: usize = 7;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnumerateError {
    #[error("enumeration capped at {ENUM_MAX} elements, requested {0}")]
    TooLarge(usize),
}

fn relation_code(rows: &[Subset], perm: &[usize]) -> u64 {
    let n = perm.len();
    let mut code = 0u64;
    for i in 0..n {
        for j in 0..n {
            if rows[perm[i]].contains(perm[j]) {
                code |= 1 << (i * n + j);
            }
        }
    }
    code
}

/// Canonical code of a reflexive relation: the minimal relation matrix over
/// all permutations consistent with an iteratively refined degree
/// invariant. Equal codes exactly characterize isomorphic relations.
pub fn canonical_relation_code(rows: &[Subset]) -> u64 {
    let n = rows.len();
    assert!(n * n <= 64, "relation code must fit one word");
    if n == 0 {
        return 0;
    }
    let col = |j: usize| (0..n).filter(|&i| rows[i].contains(j)).count();
    // Iterated refinement of (out-degree, in-degree) profiles.
    let mut rank: Vec<u64> = (0..n)
        .map(|i| (rows[i].len() * n + col(i)) as u64)
        .collect();
    for _ in 0..3 {
        let keys: Vec<(u64, Vec<u64>, Vec<u64>)> = (0..n)
            .map(|i| {
                let mut out: Vec<u64> = rows[i].iter().map(|j| rank[j]).collect();
                out.sort_unstable();
                let mut inn: Vec<u64> = (0..n)
                    .filter(|&j| rows[j].contains(i))
                    .map(|j| rank[j])
                    .collect();
                inn.sort_unstable();
                (rank[i], out, inn)
            })
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        sorted.dedup();
        rank = keys
            .iter()
            .map(|k| sorted.binary_search(k).unwrap() as u64)
            .collect();
    }
    // Group elements by final rank; the canonical order lists classes by
    // rank and minimizes over within-class permutations.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| rank[i]);
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for i in order {
        match classes.last_mut() {
            Some(c) if rank[c[0]] == rank[i] => c.push(i),
            _ => classes.push(vec![i]),
        }
    }
    let mut best = u64::MAX;
    let mut perm: Vec<usize> = Vec::with_capacity(n);
    minimize(rows, &classes, 0, &mut vec![false; n], &mut perm, &mut best);
    best
}

fn minimize(
    rows: &[Subset],
    classes: &[Vec<usize>],
    depth: usize,
    used: &mut Vec<bool>,
    perm: &mut Vec<usize>,
    best: &mut u64,
) {
    if depth == classes.len() {
        *best = (*best).min(relation_code(rows, perm));
        return;
    }
    let class = &classes[depth];
    let filled = perm.len() - classes[..depth].iter().map(|c| c.len()).sum::<usize>();
    if filled == class.len() {
        minimize(rows, classes, depth + 1, used, perm, best);
        return;
    }
    for &e in class {
        if !used[e] {
            used[e] = true;
            perm.push(e);
            minimize(rows, classes, depth, used, perm, best);
            perm.pop();
            used[e] = false;
        }
    }
}

fn poset_from_code(n: usize, code: u64) -> Poset {
    let labels: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
    let up: Vec<Subset> = (0..n)
        .map(|i| (0..n).filter(|&j| code >> (i * n + j) & 1 == 1).collect())
        .collect();
    Poset::from_up_rows(labels, up)
}

/// All posets with exactly `n` elements, one per isomorphism class, in
/// deterministic canonical-code order.
pub fn posets(n: usize) -> Result<Vec<Poset>, EnumerateError> {
    if n > ENUM_MAX {
        return Err(EnumerateError::TooLarge(n));
    }
    let mut level: Vec<u64> = vec![0]; // the empty poset
    for k in 1..=n {
        let mut next: Vec<u64> = Vec::new();
        for &code in &level {
            let p = poset_from_code(k - 1, code);
            let rows: Vec<Subset> = (0..k - 1).map(|i| p.up_of(i)).collect();
            for d in p.down_closed_subsets() {
                // adjoin a maximal element whose strict down-set is `d`
                let mut new_rows = rows.clone();
                for i in d.iter() {
                    new_rows[i].insert(k - 1);
                }
                new_rows.push(Subset::singleton(k - 1));
                let c = canonical_relation_code(&new_rows);
                if !next.contains(&c) {
                    next.push(c);
                }
            }
        }
        next.sort_unstable();
        level = next;
    }
    Ok(level.into_iter().map(|c| poset_from_code(n, c)).collect())
}

/// All lattices with exactly `n` elements, filtered from the poset list.
pub fn lattices(n: usize) -> Result<Vec<FiniteLattice>, EnumerateError> {
    Ok(posets(n)?
        .into_iter()
        .filter_map(|p| FiniteLattice::from_poset(p).ok())
        .collect())
}

/// All topological spaces with exactly `n` points, one per homeomorphism
/// class.
pub fn spaces(n: usize) -> Result<Vec<FiniteSpace>, EnumerateError> {
    if n > ENUM_MAX {
        return Err(EnumerateError::TooLarge(n));
    }
    if n == 0 {
        return Ok(vec![crate::fixtures::empty_space()]);
    }
    let mut seen: Vec<u64> = Vec::new();
    let mut found: Vec<(u64, Vec<Subset>)> = Vec::new();
    for k in 1..=n {
        for q in posets(k)? {
            for sizes in compositions(n, k) {
                // blow each poset element up into a block of equivalent points
                let mut block_of = Vec::with_capacity(n);
                for (b, &s) in sizes.iter().enumerate() {
                    block_of.extend(std::iter::repeat_n(b, s));
                }
                let rows: Vec<Subset> = (0..n)
                    .map(|x| {
                        (0..n)
                            .filter(|&y| q.leq(block_of[x], block_of[y]))
                            .collect()
                    })
                    .collect();
                let code = canonical_relation_code(&rows);
                if !seen.contains(&code) {
                    seen.push(code);
                    found.push((code, rows));
                }
            }
        }
    }
    found.sort_by_key(|(code, _)| *code);
    Ok(found
        .into_iter()
        .map(|(_, rows)| {
            let points: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
            let opens: Vec<Subset> = Subset::powerset(n)
                .filter(|&s| {
                    s.iter()
                        .all(|x| (0..n).all(|y| !rows[y].contains(x) || s.contains(y)))
                })
                .collect();
            FiniteSpace::from_opens(points, &opens)
        })
        .collect())
}

fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 1..=total + 1 - parts {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// A deterministic corpus of random lattices built as intersection-closed
/// set families, which are always lattices under inclusion.
pub fn random_lattices(count: usize, max_size: usize, seed: u64) -> Vec<FiniteLattice> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let universe = rng.gen_range(1..=5usize);
        let full = Subset::full(universe);
        let mut family = vec![full];
        for _ in 0..rng.gen_range(1..=6usize) {
            family.push(Subset::from_bits(rng.gen::<u64>()) & full);
        }
        loop {
            let mut added = false;
            let current = family.clone();
            for &a in &current {
                for &b in &current {
                    if !family.contains(&(a & b)) {
                        family.push(a & b);
                        added = true;
                    }
                }
            }
            if !added {
                break;
            }
        }
        if family.len() > max_size {
            continue;
        }
        let labels: Vec<String> = (0..universe).map(|i| format!("x{i}")).collect();
        out.push(
            FiniteLattice::from_subset_family(&family, &labels)
                .expect("closure systems are lattices"),
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    // Independent oracle: enumerate all reflexive relations directly and
    // count isomorphism classes.
    fn brute_count(n: usize, require_antisymmetric: bool) -> usize {
        let off_diag: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .collect();
        let mut codes = std::collections::BTreeSet::new();
        'outer: for mask in 0..1u64 << off_diag.len() {
            let mut rows: Vec<Subset> = (0..n).map(Subset::singleton).collect();
            for (k, &(i, j)) in off_diag.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    rows[i].insert(j);
                }
            }
            for i in 0..n {
                for j in 0..n {
                    if rows[i].contains(j) && i != j {
                        if require_antisymmetric && rows[j].contains(i) {
                            continue 'outer;
                        }
                        if !rows[j].is_subset_of(rows[i]) {
                            continue 'outer; // not transitive
                        }
                    }
                }
            }
            codes.insert(canonical_relation_code(&rows));
        }
        codes.len()
    }

    #[test]
    fn poset_counts_match_brute_force() {
        for n in 0..=4 {
            assert_eq!(posets(n).unwrap().len(), brute_count(n, true), "n={n}");
        }
    }

    #[test]
    fn poset_counts_frozen() {
        let counts: Vec<usize> = (0..=6).map(|n| posets(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 16, 63, 318]);
    }

    #[test]
    fn lattice_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| lattices(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 5, 15]);
    }

    #[test]
    fn space_counts_match_brute_force() {
        for n in 0..=3 {
            assert_eq!(spaces(n).unwrap().len(), brute_count(n, false), "n={n}");
        }
    }

    #[test]
    fn space_counts_frozen() {
        let counts: Vec<usize> = (0..=4).map(|n| spaces(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 3, 9, 33]);
    }

    #[test]
    fn enumerated_posets_are_pairwise_non_isomorphic() {
        let ps = posets(4).unwrap();
        for (i, p) in ps.iter().enumerate() {
            assert!(p.check_order_axioms().is_ok());
            for q in &ps[i + 1..] {
                assert!(!p.is_isomorphic(q));
            }
        }
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(posets(8), Err(EnumerateError::TooLarge(8))));
    }

    #[test]
    fn random_corpus_is_deterministic() {
        let a = random_lattices(25, 10, 7);
        let b = random_lattices(25, 10, 7);
        assert_eq!(a.len(), 25);
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.carrier().labels(), y.carrier().labels());
            assert!(x.len() <= 10 && !x.is_empty());
            assert_eq!(x.carrier().cover_pairs(), y.carrier().cover_pairs());
        }
        assert!(random_lattices(200, 10, 7)
            .iter()
            .any(|l| !l.is_distributive()));
    }
}
