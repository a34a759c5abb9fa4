//! JSON wire formats and canonical emission.
//!
//! Posets and lattices travel as `{"elements": [...], "le": [[a,b], ...]}`
//! with generating pairs; the closure is computed on load. Spaces travel
//! either as `{"points": [...], "opens": [[...], ...]}` (generators; the
//! topology they generate is taken) or as `{"poset": {...}, "side":
//! "zariski"|"dual"}`. Canonical emission sorts elements
//! lexicographically and opens by size then membership, so emitted files
//! are byte-stable.

use crate::bits::Subset;
use crate::lattice::{FiniteLattice, LatticeError};
use crate::poset::{Poset, PosetError};
use crate::topology::{AlexandrovSide, FiniteSpace};
use crate::ttmodel::presets::apply_presets;
use crate::ttmodel::{ModelError, ModelObject, Scenario, SupportSpace};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum JsonError {
    #[error("json parse error: {0}")]
    Parse(#[from] serde_json::Error),
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error("invalid input: {0}")]
    Invalid(String),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PosetJson {
    pub elements: Vec<String>,
    #[serde(default)]
    pub le: Vec<(String, String)>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SpacePointsJson {
    pub points: Vec<String>,
    #[serde(default)]
    pub opens: Vec<Vec<String>>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum SpaceJson {
    Points(SpacePointsJson),
    FromPoset { poset: PosetJson, side: String },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ObjectJson {
    pub name: String,
    pub supp: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cosupp: Option<Vec<String>>,
    #[serde(default)]
    pub compact: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ScenarioJson {
    pub poset: PosetJson,
    #[serde(default)]
    pub objects: Vec<ObjectJson>,
    #[serde(default)]
    pub presets: Vec<String>,
    #[serde(default)]
    pub triangles: Vec<[String; 3]>,
}

pub fn poset_from_json(j: &PosetJson) -> Result<Poset, JsonError> {
    Ok(Poset::from_pairs(&j.elements, &j.le)?)
}

/// Canonical form: elements sorted, relation given by cover pairs.
pub fn poset_to_json(p: &Poset) -> PosetJson {
    let c = p.canonicalize();
    PosetJson {
        elements: c.labels().to_vec(),
        le: c.cover_pairs(),
    }
}

pub fn lattice_from_json(j: &PosetJson) -> Result<FiniteLattice, JsonError> {
    Ok(FiniteLattice::from_poset(poset_from_json(j)?)?)
}

pub fn lattice_to_json(l: &FiniteLattice) -> PosetJson {
    poset_to_json(l.carrier())
}

fn parse_subset(x: &FiniteSpace, labels: &[String]) -> Result<Subset, JsonError> {
    labels
        .iter()
        .map(|l| {
            x.index_of(l)
                .ok_or_else(|| JsonError::Invalid(format!("unknown point: {l}")))
        })
        .collect()
}

pub fn space_from_json(j: &SpaceJson) -> Result<FiniteSpace, JsonError> {
    match j {
        SpaceJson::Points(sp) => {
            for (k, p) in sp.points.iter().enumerate() {
                if sp.points[..k].contains(p) {
                    return Err(JsonError::Invalid(format!("duplicate point: {p}")));
                }
            }
            let shell = FiniteSpace::from_opens(sp.points.clone(), &[]);
            let generators: Vec<Subset> = sp
                .opens
                .iter()
                .map(|o| parse_subset(&shell, o))
                .collect::<Result<_, _>>()?;
            Ok(FiniteSpace::from_opens(sp.points.clone(), &generators))
        }
        SpaceJson::FromPoset { poset, side } => {
            let p = poset_from_json(poset)?;
            let side = match side.as_str() {
                "zariski" => AlexandrovSide::Zariski,
                "dual" => AlexandrovSide::Dual,
                other => {
                    return Err(JsonError::Invalid(format!(
                        "side must be zariski or dual, got {other}"
                    )))
                }
            };
            Ok(FiniteSpace::alexandrov(&p, side))
        }
    }
}

/// Canonical form: points sorted, opens as sorted label lists in family
/// order (size, then membership).
pub fn space_to_json(x: &FiniteSpace) -> SpacePointsJson {
    let c = x.canonicalize();
    SpacePointsJson {
        points: c.points().to_vec(),
        opens: c
            .opens()
            .iter()
            .map(|o| o.iter().map(|i| c.label(i).to_string()).collect())
            .collect(),
    }
}

pub fn scenario_from_json(j: &ScenarioJson) -> Result<Scenario, JsonError> {
    let poset = poset_from_json(&j.poset)?;
    let space = SupportSpace::new(poset);
    let mut objects = Vec::new();
    for o in &j.objects {
        let supp = space.subset_of_labels(&o.supp)?;
        let cosupp = o
            .cosupp
            .as_ref()
            .map(|c| space.subset_of_labels(c))
            .transpose()?;
        objects.push(ModelObject::new(o.name.clone(), supp, cosupp, o.compact));
    }
    let objects = apply_presets(&space, objects, &j.presets)?;
    Ok(Scenario::new(
        space,
        objects,
        j.presets.clone(),
        j.triangles.clone(),
    )?)
}

pub fn to_pretty(v: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serialization cannot fail");
    s.push('\n');
    s
}
