//! Named object presets and ready-made scenarios.

use super::{
    injective_hull_object, kinj_compact_preset, koszul_object, ModelError, ModelObject, Scenario,
    SupportSpace,
};
use crate::bits::Subset;
use crate::poset::Poset;

/// Known preset names accepted in scenario files.
pub const PRESET_NAMES: &[&str] = &[
    "unit",
    "generators",
    "koszul-max",
    "injective-hulls",
    "kinj",
];

/// Appends the objects of each named preset, skipping names that already
/// exist so explicit declarations win over presets.
pub fn apply_presets(
    space: &SupportSpace,
    mut objects: Vec<ModelObject>,
    presets: &[String],
) -> Result<Vec<ModelObject>, ModelError> {
    let push = |obj: ModelObject, objects: &mut Vec<ModelObject>| {
        if !objects.iter().any(|x| x.name == obj.name) {
            objects.push(obj);
        }
    };
    for preset in presets {
        match preset.as_str() {
            "unit" => {
                let full = space.full();
                push(ModelObject::new("1", full, Some(full), true), &mut objects);
            }
            "generators" => {
                // Singleton-support generators; they carry the injective
                // hull's support/cosupport pair, the documented realization
                // of a singleton class.
                for p in 0..space.count() {
                    push(
                        ModelObject::new(
                            format!("g({})", space.primes().label(p)),
                            Subset::singleton(p),
                            Some(space.primes().down_set(Subset::singleton(p))),
                            false,
                        ),
                        &mut objects,
                    );
                }
            }
            "koszul-max" => {
                for p in space.primes().maximal_elements() {
                    push(koszul_object(space, p)?, &mut objects);
                }
            }
            "injective-hulls" => {
                for p in 0..space.count() {
                    push(injective_hull_object(space, p), &mut objects);
                }
            }
            "kinj" => {
                for obj in kinj_compact_preset(space)? {
                    push(obj, &mut objects);
                }
            }
            other => return Err(ModelError::UnknownPreset(other.to_string())),
        }
    }
    Ok(objects)
}

const DEFAULT_PRESETS: [&str; 4] = ["unit", "generators", "koszul-max", "injective-hulls"];

fn scenario_with_presets(poset: Poset, presets: &[&str], triangles: Vec<[String; 3]>) -> Scenario {
    let space = SupportSpace::new(poset);
    let presets: Vec<String> = presets.iter().map(|s| s.to_string()).collect();
    let objects = apply_presets(&space, Vec::new(), &presets).expect("presets apply");
    Scenario::new(space, objects, presets, triangles).expect("preset scenarios are valid")
}

/// The chain scenario `p0 < ... < p{n-1}`: a discrete-valuation-style
/// spectrum for `n = 2`. Declared triangles: the Koszul triangle at the top
/// and, for `n = 2`, the localization and injective-resolution triangles
/// whose members are all present.
pub fn chain_scenario(n: usize) -> Scenario {
    assert!(n >= 1, "chain scenarios need at least one prime");
    let labels: Vec<String> = (0..n).map(|i| format!("p{i}")).collect();
    let pairs: Vec<(String, String)> = (1..n)
        .map(|i| (format!("p{}", i - 1), format!("p{i}")))
        .collect();
    let poset = Poset::from_pairs(&labels, &pairs).expect("chains are posets");
    let top = format!("p{}", n - 1);
    let mut triangles = vec![["1".to_string(), "1".to_string(), format!("k({top})")]];
    if n == 2 {
        triangles.push(["g(p1)".to_string(), "1".to_string(), "g(p0)".to_string()]);
        triangles.push(["1".to_string(), "g(p0)".to_string(), "E(p1)".to_string()]);
    }
    scenario_with_presets(poset, &DEFAULT_PRESETS, triangles)
}

/// The diamond scenario: two incomparable primes between a bottom and a
/// top, the shape of a two-dimensional local spectrum fragment.
pub fn diamond_scenario() -> Scenario {
    let poset = Poset::from_pairs(
        &["p0", "pa", "pb", "pab"],
        &[("p0", "pa"), ("p0", "pb"), ("pa", "pab"), ("pb", "pab")],
    )
    .expect("diamond is a poset");
    scenario_with_presets(
        poset,
        &DEFAULT_PRESETS,
        vec![["1".to_string(), "1".to_string(), "k(pab)".to_string()]],
    )
}

/// A chain scenario enriched with the compacts whose cosupport sits only at
/// the top prime.
pub fn kinj_scenario(n: usize) -> Scenario {
    let base = chain_scenario(n);
    let presets: Vec<String> = DEFAULT_PRESETS
        .iter()
        .chain(["kinj"].iter())
        .map(|s| s.to_string())
        .collect();
    let objects =
        apply_presets(&base.space, base.objects, &["kinj".to_string()]).expect("kinj applies");
    Scenario::new(base.space, objects, presets, base.triangles).expect("kinj scenario is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_scenarios_validate() {
        for n in 1..=4 {
            let s = chain_scenario(n);
            assert_eq!(s.space.count(), n);
            assert!(s.maximal_koszul().is_some());
        }
    }

    #[test]
    fn chain2_contents() {
        let s = chain_scenario(2);
        let e1 = s.object("E(p1)").unwrap();
        assert_eq!(e1.supp, Subset::singleton(1));
        assert_eq!(e1.cosupp.unwrap(), Subset::full(2));
        assert_eq!(s.triangles.len(), 3);
    }

    #[test]
    fn diamond_contents() {
        let s = diamond_scenario();
        assert_eq!(s.space.count(), 4);
        assert_eq!(s.maximal_koszul().unwrap().name, "k(pab)");
    }

    #[test]
    fn kinj_strict_inclusion_witness() {
        let s = kinj_scenario(2);
        let x = s.object("kinj{p0,p1}").unwrap();
        assert!(x.cosupp.unwrap().is_subset_of(x.supp));
        assert_ne!(x.cosupp.unwrap(), x.supp);
    }

    #[test]
    fn unknown_preset_rejected() {
        let space = SupportSpace::new(crate::fixtures::chain_poset(1));
        let err = apply_presets(&space, Vec::new(), &["wat".to_string()]).unwrap_err();
        assert!(matches!(err, ModelError::UnknownPreset(_)));
    }
}
