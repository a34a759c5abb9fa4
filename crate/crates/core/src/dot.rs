//! DOT export: Hasse diagrams of posets and the recollement class diagram.

use crate::poset::Poset;
use crate::ttmodel::checks::RecollementReport;
use crate::ttmodel::SupportSpace;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('"', "\\\""))
}

/// Hasse diagram: cover edges drawn upward.
pub fn poset_dot(p: &Poset) -> String {
    let mut out = String::from("digraph hasse {\n  rankdir=BT;\n  node [shape=plaintext];\n");
    for l in p.labels() {
        out.push_str(&format!("  {};\n", quote(l)));
    }
    for (a, b) in p.cover_pairs() {
        out.push_str(&format!("  {} -> {};\n", quote(&a), quote(&b)));
    }
    out.push_str("}\n");
    out
}

/// The six-class diagram of a recollement decomposition, labelled with the
/// underlying prime subsets.
pub fn recollement_dot(space: &SupportSpace, r: &RecollementReport) -> String {
    let labels: Vec<String> = space.primes().labels().to_vec();
    let set = |s: crate::Subset| crate::set_label(s, &labels);
    let u1 = r.blocks[1] | r.blocks[3];
    let u2 = r.blocks[2] | r.blocks[3];
    let s = u1 | u2;
    let nodes = [
        ("top", format!("A(1) = {}", set(space.full()))),
        ("s", format!("A(Γ_S 1) = {}", set(s))),
        ("s1", format!("A(Γ_S1 1) = {}", set(u1))),
        ("s2", format!("A(Γ_S2 1) = {}", set(u2))),
        ("s12", format!("A(Γ_S1∩S2 1) = {}", set(r.blocks[3]))),
        ("bot", "A(0) = {}".to_string()),
    ];
    let mut out = String::from("digraph recollement {\n  rankdir=BT;\n  node [shape=plaintext];\n");
    for (id, label) in &nodes {
        out.push_str(&format!("  {} [label={}];\n", id, quote(label)));
    }
    for (a, b) in [
        ("bot", "s12"),
        ("s12", "s1"),
        ("s12", "s2"),
        ("s1", "s"),
        ("s2", "s"),
        ("s", "top"),
    ] {
        out.push_str(&format!("  {a} -> {b};\n"));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::ttmodel::checks::recollement_decompose;
    use crate::Subset;

    #[test]
    fn poset_dot_contains_covers() {
        let d = poset_dot(&fixtures::chain_poset(3));
        assert!(d.contains("\"p0\" -> \"p1\""));
        assert!(d.contains("\"p1\" -> \"p2\""));
        assert!(!d.contains("\"p0\" -> \"p2\""), "no transitive edges");
    }

    #[test]
    fn recollement_dot_has_six_nodes() {
        let space = SupportSpace::new(fixtures::antichain(&["a", "b"]));
        let r = recollement_decompose(&space, Subset::singleton(0), Subset::singleton(1));
        let d = recollement_dot(&space, &r);
        assert!(d.contains("A(1)") && d.contains("A(0)"));
        assert!(d.contains("A(Γ_S1 1) = {a}"));
    }
}
