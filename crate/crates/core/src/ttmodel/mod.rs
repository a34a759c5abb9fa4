//! A finite model of a compactly generated tensor triangulated category
//! stratified by a noetherian ring.
//!
//! The model keeps only the support-level shadow: a finite poset of primes
//! standing for the support of the category, and objects carrying support
//! and (optionally) cosupport subsets. Under stratification the Bousfield
//! class of an object is determined by its support, tensoring intersects
//! supports, coproducts unite them, and every class is idempotent.
//!
//! Two modelling axioms are in force and documented here because no code
//! can derive them:
//!
//! * Hom-vanishing is *defined* as `supp(X) /\ cosupp(Y) = {}`; the
//!   cosupport formula for function objects makes this the only reading
//!   compatible with the orthogonality lemma checked by [`checks::perp_check`].
//! * Cosupports of tensor products and coproducts are never computed (the
//!   theory provides no formula); such results carry an undeclared cosupport
//!   and operations that need one fail with [`ModelError::MissingCosupport`].

pub mod checks;
pub mod presets;

use crate::bits::Subset;
use crate::frame::{Frame, FrameMorphism};
use crate::lattice::FiniteLattice;
use crate::poset::Poset;
use crate::topology::{AlexandrovSide, ContinuousMap, FiniteSpace};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModelError {
    #[error("unknown prime label: {0}")]
    UnknownLabel(String),
    #[error("duplicate object name: {0}")]
    DuplicateObject(String),
    #[error("unknown object name: {0}")]
    UnknownObject(String),
    #[error("no generator with support {{{0}}} declared")]
    MissingGenerator(String),
    #[error("invalid object {name}: {reason}")]
    InvalidObject { name: String, reason: String },
    #[error("object {0} has no declared cosupport")]
    MissingCosupport(String),
    #[error("prime {0} is not maximal")]
    NotMaximal(String),
    #[error("support poset has no unique top element")]
    NoTopElement,
    #[error("no Koszul object at a maximal prime is declared")]
    NoMaximalKoszul,
    #[error("object {0} is not compact")]
    NotCompact(String),
    #[error("subset is not specialization closed")]
    NotSpecializationClosed,
    #[error("support assignment violates axiom ({0})")]
    AxiomViolated(u8),
    #[error("support assignment does not cover the target space")]
    SigmaUnitNotFull,
    #[error("no support value assigned for object {0}")]
    SigmaMissing(String),
    #[error("assigned support for {0} is not open in the target space")]
    SigmaNotOpen(String),
    #[error("unknown preset: {0}")]
    UnknownPreset(String),
}

/// The prime poset of the model together with its two Alexandrov
/// topologies. The Zariski side has down-sets open, the dual side up-sets;
/// the two are verified to be Hochster duals of each other at construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportSpace {
    primes: Poset,
    zariski: FiniteSpace,
    dual: FiniteSpace,
}

impl SupportSpace {
    pub fn new(primes: Poset) -> SupportSpace {
        // The Bousfield lattice is the powerset of the primes and must fit
        // a 64-element carrier.
        assert!(
            primes.len() <= 6,
            "support spaces are capped at 6 primes, got {}",
            primes.len()
        );
        let zariski = FiniteSpace::alexandrov(&primes, AlexandrovSide::Zariski);
        let dual = FiniteSpace::alexandrov(&primes, AlexandrovSide::Dual);
        assert_eq!(
            zariski
                .hochster_dual()
                .expect("Alexandrov spaces of posets are spectral"),
            dual,
            "the two Alexandrov sides must be Hochster dual"
        );
        SupportSpace {
            primes,
            zariski,
            dual,
        }
    }

    pub fn primes(&self) -> &Poset {
        &self.primes
    }

    pub fn zariski(&self) -> &FiniteSpace {
        &self.zariski
    }

    pub fn dual(&self) -> &FiniteSpace {
        &self.dual
    }

    pub fn count(&self) -> usize {
        self.primes.len()
    }

    pub fn full(&self) -> Subset {
        Subset::full(self.count())
    }

    /// Parses a list of prime labels into a subset.
    pub fn subset_of_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<Subset, ModelError> {
        labels
            .iter()
            .map(|l| {
                self.primes
                    .index_of(l.as_ref())
                    .ok_or_else(|| ModelError::UnknownLabel(l.as_ref().to_string()))
            })
            .collect()
    }

    pub fn label_set(&self, s: Subset) -> Vec<String> {
        s.iter().map(|i| self.primes.label(i).to_string()).collect()
    }
}

/// An object of the model: a support subset, an optional cosupport subset,
/// and a compactness flag.
///
/// The stratified hypothesis makes `supp = {}` equivalent to being the zero
/// object, and compact objects must have specialization-closed support with
/// declared cosupport inside it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModelObject {
    pub name: String,
    pub supp: Subset,
    pub cosupp: Option<Subset>,
    pub compact: bool,
}

impl ModelObject {
    pub fn new(
        name: impl Into<String>,
        supp: Subset,
        cosupp: Option<Subset>,
        compact: bool,
    ) -> Self {
        ModelObject {
            name: name.into(),
            supp,
            cosupp,
            compact,
        }
    }

    /// The unique zero object: empty support and cosupport.
    pub fn zero() -> ModelObject {
        ModelObject {
            name: "0".to_string(),
            supp: Subset::EMPTY,
            cosupp: Some(Subset::EMPTY),
            compact: true,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.supp.is_empty()
    }

    pub fn cosupp_or_err(&self) -> Result<Subset, ModelError> {
        self.cosupp
            .ok_or_else(|| ModelError::MissingCosupport(self.name.clone()))
    }

    pub fn validate(&self, space: &SupportSpace) -> Result<(), ModelError> {
        let full = space.full();
        let fail = |reason: &str| ModelError::InvalidObject {
            name: self.name.clone(),
            reason: reason.to_string(),
        };
        if !self.supp.is_subset_of(full) {
            return Err(fail("support outside the prime poset"));
        }
        if let Some(c) = self.cosupp {
            if !c.is_subset_of(full) {
                return Err(fail("cosupport outside the prime poset"));
            }
        }
        if self.supp.is_empty() && self.cosupp.is_some_and(|c| !c.is_empty()) {
            return Err(fail(
                "zero object (empty support) must have empty cosupport",
            ));
        }
        if self.compact {
            let c = self
                .cosupp
                .ok_or_else(|| ModelError::MissingCosupport(self.name.clone()))?;
            if !c.is_subset_of(self.supp) {
                return Err(fail("compact object needs cosupport inside support"));
            }
            if !space.primes.is_up_closed(self.supp) {
                return Err(fail("compact object needs specialization-closed support"));
            }
        }
        Ok(())
    }
}

/// A Bousfield class in the stratified model, represented by the common
/// support of its objects. The class order is subset inclusion: smaller
/// support means more acyclics.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct BousfieldClass(pub Subset);

/// A tensor-closed thick subcategory of the compacts, represented by the
/// specialization-closed union of the supports of its members.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ThickClass(pub Subset);

impl ThickClass {
    pub fn new(space: &SupportSpace, members: Subset) -> Result<ThickClass, ModelError> {
        if space.primes.is_up_closed(members) {
            Ok(ThickClass(members))
        } else {
            Err(ModelError::NotSpecializationClosed)
        }
    }
}

/// Tensoring intersects supports.
pub fn tensor_class(a: BousfieldClass, b: BousfieldClass) -> BousfieldClass {
    BousfieldClass(a.0 & b.0)
}

/// Coproducts unite supports.
pub fn coproduct_class(classes: &[BousfieldClass]) -> BousfieldClass {
    BousfieldClass(classes.iter().fold(Subset::EMPTY, |acc, c| acc | c.0))
}

/// The tensor product at object level. The cosupport of a tensor product
/// has no formula in the model and is left undeclared, except for the zero
/// object which is canonical.
pub fn tensor_objects(x: &ModelObject, y: &ModelObject) -> ModelObject {
    let supp = x.supp & y.supp;
    if supp.is_empty() {
        return ModelObject::zero();
    }
    ModelObject::new(format!("({})⊗({})", x.name, y.name), supp, None, false)
}

/// The coproduct at object level; cosupport undeclared, as for tensors.
pub fn coproduct_objects(xs: &[&ModelObject]) -> ModelObject {
    let supp = xs.iter().fold(Subset::EMPTY, |acc, x| acc | x.supp);
    if supp.is_empty() {
        return ModelObject::zero();
    }
    let name = xs
        .iter()
        .map(|x| x.name.as_str())
        .collect::<Vec<_>>()
        .join("∐");
    ModelObject::new(name, supp, None, false)
}

/// Whether `y` is `x`-acyclic: the supports are disjoint.
pub fn is_acyclic(y: &ModelObject, x: &ModelObject) -> bool {
    !y.supp.intersects(x.supp)
}

/// Whether `y` is `x`-local: the cosupport of `y` lies inside the support
/// of `x`. Needs a declared cosupport.
pub fn is_local(y: &ModelObject, x: &ModelObject) -> Result<bool, ModelError> {
    Ok(y.cosupp_or_err()?.is_subset_of(x.supp))
}

/// Cosupport of the function object `Hom(x, y)`.
pub fn hom_cosupp(x: &ModelObject, y: &ModelObject) -> Result<Subset, ModelError> {
    Ok(x.supp & y.cosupp_or_err()?)
}

/// The local-cohomology layer at a single prime: support cut down to `{p}`,
/// cosupport undeclared.
pub fn gamma(space: &SupportSpace, p: usize, x: &ModelObject) -> ModelObject {
    let supp = x.supp & Subset::singleton(p);
    if supp.is_empty() {
        return ModelObject::zero();
    }
    ModelObject::new(
        format!("Γ_{}({})", space.primes.label(p), x.name),
        supp,
        None,
        false,
    )
}

/// The Koszul object at a maximal prime: compact with support and
/// cosupport both `{p}`. Maximality is what makes `{p}` specialization
/// closed.
pub fn koszul_object(space: &SupportSpace, p: usize) -> Result<ModelObject, ModelError> {
    if !space.primes.maximal_elements().contains(&p) {
        return Err(ModelError::NotMaximal(space.primes.label(p).to_string()));
    }
    let s = Subset::singleton(p);
    Ok(ModelObject::new(
        format!("k({})", space.primes.label(p)),
        s,
        Some(s),
        true,
    ))
}

/// The injective-hull object at a prime: support `{p}`, cosupport the full
/// down-set of `p`, not compact.
pub fn injective_hull_object(space: &SupportSpace, p: usize) -> ModelObject {
    ModelObject::new(
        format!("E({})", space.primes.label(p)),
        Subset::singleton(p),
        Some(space.primes.down_set(Subset::singleton(p))),
        false,
    )
}

/// Compact objects in the style of homotopy categories of injectives: one
/// per non-empty specialization-closed support, all with cosupport at the
/// unique top prime. The inclusion `cosupp(X) <= supp(X)` is strict as soon
/// as the support has more than one point.
pub fn kinj_compact_preset(space: &SupportSpace) -> Result<Vec<ModelObject>, ModelError> {
    let top = space.primes.top().ok_or(ModelError::NoTopElement)?;
    let labels: Vec<String> = space.primes.labels().to_vec();
    Ok(space
        .primes
        .up_closed_subsets()
        .into_iter()
        .filter(|v| !v.is_empty())
        .map(|v| {
            ModelObject::new(
                format!("kinj{}", crate::set_label(v, &labels)),
                v,
                Some(Subset::singleton(top)),
                true,
            )
        })
        .collect())
}

/// The Bousfield lattice of the stratified model: the powerset frame on
/// the primes. Every object is Bousfield idempotent, so this is also the
/// distributive sublattice of idempotent classes.
pub fn bousfield_lattice(space: &SupportSpace) -> Frame {
    Frame::powerset(space.primes.labels())
}

/// Carrier elements of [`bousfield_lattice`], index-aligned subsets.
pub fn powerset_members(space: &SupportSpace) -> Vec<Subset> {
    let mut v: Vec<Subset> = Subset::powerset(space.count()).collect();
    v.sort_by_key(|s| s.canonical_key());
    v
}

/// The lattice of thick classes: specialization-closed subsets under
/// inclusion. Coherence and the isomorphism with the dual-side open frame
/// are verified separately by [`checks::verify_scenario`].
pub fn thick_lattice(space: &SupportSpace) -> Frame {
    let members = space.primes.up_closed_subsets();
    let lattice = FiniteLattice::from_subset_family(&members, space.primes.labels())
        .expect("up-closed families form lattices");
    Frame::verify(lattice).expect("thick-class lattices satisfy the frame law")
}

/// Carrier elements of [`thick_lattice`], index-aligned subsets.
pub fn thick_members(space: &SupportSpace) -> Vec<Subset> {
    space.primes.up_closed_subsets()
}

/// The subset-inclusion embedding of the thick-class frame into the
/// Bousfield frame. Injective, meet- and join-preserving.
pub fn f_map(space: &SupportSpace) -> FrameMorphism {
    let thick = thick_lattice(space);
    let bousfield = bousfield_lattice(space);
    let pow = powerset_members(space);
    let map: Vec<usize> = thick_members(space)
        .iter()
        .map(|m| pow.iter().position(|x| x == m).expect("subset present"))
        .collect();
    FrameMorphism::new(thick, bousfield, map).expect("inclusion is a frame morphism")
}

/// The continuous comparison map from the spectrum of the Bousfield frame
/// to the spectrum of the thick-class frame, induced by [`f_map`].
pub fn sp_f(space: &SupportSpace) -> ContinuousMap {
    f_map(space)
        .spectrum_map()
        .expect("the comparison morphism always induces a spectrum map")
}

/// Support of an object inside the spectrum of the Bousfield frame, by the
/// definitional prime test `A(X) <= A(P)` fails. The result is checked
/// against the discrete identification point-by-point.
pub fn supp_t(space: &SupportSpace, x: &ModelObject) -> Subset {
    let b = bousfield_lattice(space);
    let pow = powerset_members(space);
    let class_idx = pow
        .iter()
        .position(|&m| m == x.supp)
        .expect("class is a carrier element");
    let st = b.stone_open(class_idx);
    // Discrete identification: the point behind the prime `primes \ {q}`
    // corresponds to q, and must appear exactly when q is in the support.
    let primes = b.primes();
    let expected: Subset = primes
        .iter()
        .enumerate()
        .filter(|(_, &p)| {
            let missing = pow[p].complement(space.count());
            debug_assert_eq!(missing.len(), 1);
            x.supp.intersects(missing)
        })
        .map(|(k, _)| k)
        .collect();
    assert_eq!(
        st, expected,
        "support in Sp must match the discrete identification"
    );
    st
}

/// Support of a compact object inside the spectrum of the thick-class
/// frame: the primes (as thick classes) that do not contain it.
pub fn supp_tc(space: &SupportSpace, x: &ModelObject) -> Result<Subset, ModelError> {
    if !x.compact {
        return Err(ModelError::NotCompact(x.name.clone()));
    }
    let thick = thick_lattice(space);
    let members = thick_members(space);
    let sp = thick.spectrum();
    Ok(sp
        .point_elements
        .iter()
        .enumerate()
        .filter(|(_, &p)| !x.supp.is_subset_of(members[p]))
        .map(|(k, _)| k)
        .collect())
}

/// The Balmer-style prime at each support prime: the thick class of
/// everything avoiding it, built definitionally as the union of the
/// specialization-closed subsets missing `p`.
pub fn balmer_class(space: &SupportSpace, p: usize) -> ThickClass {
    let members = thick_members(space)
        .into_iter()
        .filter(|m| !m.contains(p))
        .fold(Subset::EMPTY, |acc, m| acc | m);
    ThickClass(members)
}

/// A scenario: a support space plus a universe of declared objects, with
/// the names of the presets that produced them and any declared exact
/// triangles (triples of object names).
#[derive(Clone, Debug)]
pub struct Scenario {
    pub space: SupportSpace,
    pub objects: Vec<ModelObject>,
    pub presets: Vec<String>,
    pub triangles: Vec<[String; 3]>,
}

impl Scenario {
    pub fn new(
        space: SupportSpace,
        objects: Vec<ModelObject>,
        presets: Vec<String>,
        triangles: Vec<[String; 3]>,
    ) -> Result<Scenario, ModelError> {
        let s = Scenario {
            space,
            objects,
            presets,
            triangles,
        };
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<(), ModelError> {
        for (k, x) in self.objects.iter().enumerate() {
            if self.objects[..k].iter().any(|y| y.name == x.name) {
                return Err(ModelError::DuplicateObject(x.name.clone()));
            }
            x.validate(&self.space)?;
        }
        // Every prime needs a singleton-support generator.
        for p in 0..self.space.count() {
            let s = Subset::singleton(p);
            if !self.objects.iter().any(|x| x.supp == s) {
                return Err(ModelError::MissingGenerator(
                    self.space.primes.label(p).to_string(),
                ));
            }
        }
        for t in &self.triangles {
            for name in t {
                if self.object(name).is_none() {
                    return Err(ModelError::UnknownObject(name.clone()));
                }
            }
        }
        Ok(())
    }

    pub fn object(&self, name: &str) -> Option<&ModelObject> {
        self.objects.iter().find(|x| x.name == name)
    }

    pub fn object_or_err(&self, name: &str) -> Result<&ModelObject, ModelError> {
        self.object(name)
            .ok_or_else(|| ModelError::UnknownObject(name.to_string()))
    }

    /// The singleton-support generator at `p` guaranteed by validation.
    pub fn generator(&self, p: usize) -> &ModelObject {
        let s = Subset::singleton(p);
        self.objects
            .iter()
            .find(|x| x.supp == s)
            .expect("validated scenarios have generators")
    }

    /// A declared Koszul-style object at a maximal prime, if any: compact
    /// with singleton support equal to its cosupport.
    pub fn maximal_koszul(&self) -> Option<&ModelObject> {
        let maximal = self.space.primes.maximal_elements();
        self.objects.iter().find(|x| {
            x.compact
                && x.supp.len() == 1
                && x.cosupp == Some(x.supp)
                && maximal.contains(&x.supp.iter().next().unwrap())
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn chain2() -> SupportSpace {
        SupportSpace::new(fixtures::chain_poset(2))
    }

    #[test]
    fn support_space_duality_holds() {
        let s = chain2();
        assert_eq!(s.zariski().opens().len(), 3);
        assert_eq!(s.dual().opens().len(), 3);
        SupportSpace::new(fixtures::diamond_poset());
        SupportSpace::new(fixtures::antichain(&["a", "b", "c"]));
    }

    #[test]
    fn class_operations() {
        let a = BousfieldClass(Subset::singleton(0));
        let b = BousfieldClass(Subset::singleton(1));
        assert_eq!(tensor_class(a, b).0, Subset::EMPTY);
        let full = BousfieldClass(Subset::full(2));
        assert_eq!(tensor_class(a, full), a);
        assert_eq!(coproduct_class(&[a, b]).0, Subset::full(2));
    }

    #[test]
    fn acyclicity_and_locality() {
        let s = chain2();
        let g0 = injective_hull_object(&s, 0); // supp {p0}, cosupp {p0}
        let e1 = injective_hull_object(&s, 1); // supp {p1}, cosupp {p0,p1}
        assert!(is_acyclic(&g0, &e1));
        assert!(is_acyclic(&g0, &ModelObject::zero()));
        assert!(!is_acyclic(&e1, &e1));

        // E at the top prime is not local over itself; at the bottom it is.
        assert!(!is_local(&e1, &e1).unwrap());
        assert!(is_local(&g0, &g0).unwrap());

        // Koszul objects at the maximal prime are local over anything
        // supported there.
        let k = koszul_object(&s, 1).unwrap();
        assert!(is_local(&k, &e1).unwrap());
        assert!(is_local(&k, &k).unwrap());

        let no_cosupp = ModelObject::new("t", Subset::singleton(0), None, false);
        assert!(matches!(
            is_local(&no_cosupp, &g0),
            Err(ModelError::MissingCosupport(_))
        ));
    }

    #[test]
    fn hom_cosupports() {
        let s = chain2();
        let e1 = injective_hull_object(&s, 1);
        let unit = ModelObject::new("1", s.full(), Some(s.full()), true);
        assert_eq!(hom_cosupp(&unit, &e1).unwrap(), e1.cosupp.unwrap());
        let g1 = koszul_object(&s, 1).unwrap();
        assert_eq!(hom_cosupp(&g1, &e1).unwrap(), Subset::singleton(1));
        let g0 = injective_hull_object(&s, 0);
        assert_eq!(hom_cosupp(&g1, &g0).unwrap(), Subset::EMPTY);
    }

    #[test]
    fn gamma_layers() {
        let s = chain2();
        let unit = ModelObject::new("1", s.full(), Some(s.full()), true);
        assert_eq!(gamma(&s, 0, &unit).supp, Subset::singleton(0));
        let nested = gamma(&s, 0, &gamma(&s, 1, &unit));
        assert!(nested.is_zero());
        assert!(gamma(&s, 0, &ModelObject::zero()).is_zero());
        // idempotence and orthogonality
        for p in 0..2 {
            for q in 0..2 {
                let twice = gamma(&s, p, &gamma(&s, q, &unit));
                if p == q {
                    assert_eq!(twice.supp, gamma(&s, p, &unit).supp);
                } else {
                    assert!(twice.is_zero());
                }
            }
        }
    }

    #[test]
    fn special_objects() {
        let s = chain2();
        let k = koszul_object(&s, 1).unwrap();
        assert_eq!(
            (k.supp, k.cosupp.unwrap()),
            (Subset::singleton(1), Subset::singleton(1))
        );
        assert!(k.compact && k.validate(&s).is_ok());
        assert!(matches!(
            koszul_object(&s, 0),
            Err(ModelError::NotMaximal(_))
        ));

        let e = injective_hull_object(&s, 1);
        assert_eq!(e.cosupp.unwrap(), Subset::full(2));
        assert!(e.validate(&s).is_ok());

        let kinj = kinj_compact_preset(&s).unwrap();
        assert_eq!(kinj.len(), 2); // {p1} and {p0,p1}
        let strict = kinj.iter().find(|x| x.supp == Subset::full(2)).unwrap();
        assert_eq!(strict.cosupp.unwrap(), Subset::singleton(1));
        assert!(strict.cosupp.unwrap() != strict.supp, "inclusion is strict");
        for x in &kinj {
            assert!(x.validate(&s).is_ok());
        }
        assert!(matches!(
            kinj_compact_preset(&SupportSpace::new(fixtures::antichain(&["a", "b"]))),
            Err(ModelError::NoTopElement)
        ));
    }

    #[test]
    fn lattices_of_the_model() {
        let s = chain2();
        let b = bousfield_lattice(&s);
        assert!(b
            .lattice()
            .is_isomorphic(&fixtures::boolean_lattice(&["a", "b"])));

        let t = thick_lattice(&s);
        assert!(t.lattice().is_isomorphic(&fixtures::chain_lattice(3)));

        let anti = SupportSpace::new(fixtures::antichain(&["a", "b"]));
        assert!(thick_lattice(&anti)
            .lattice()
            .is_isomorphic(&fixtures::boolean_lattice(&["a", "b"])));

        let empty = SupportSpace::new(fixtures::antichain(&[]));
        assert_eq!(bousfield_lattice(&empty).lattice().len(), 1);
        assert_eq!(thick_lattice(&empty).lattice().len(), 1);
    }

    #[test]
    fn comparison_morphism() {
        let s = chain2();
        let f = f_map(&s);
        assert!(f.is_injective());
        let m = sp_f(&s);
        // bijective on points
        let mut targets = m.map.clone();
        targets.sort_unstable();
        targets.dedup();
        assert_eq!(targets.len(), m.source.len());
        assert_eq!(m.source.len(), 2);
    }

    #[test]
    fn balmer_classes_on_chain() {
        let s = chain2();
        // P_{p0} = {p1}, P_{p1} = {}
        assert_eq!(balmer_class(&s, 0).0, Subset::singleton(1));
        assert_eq!(balmer_class(&s, 1).0, Subset::EMPTY);
        let anti = SupportSpace::new(fixtures::antichain(&["a", "b"]));
        assert_eq!(balmer_class(&anti, 0).0, Subset::singleton(1));
        assert_eq!(balmer_class(&anti, 1).0, Subset::singleton(0));
        let single = SupportSpace::new(fixtures::antichain(&["p"]));
        assert_eq!(balmer_class(&single, 0).0, Subset::EMPTY);
    }

    #[test]
    fn supports_in_spectra() {
        let s = chain2();
        let unit = ModelObject::new("1", s.full(), Some(s.full()), true);
        assert_eq!(supp_t(&s, &unit), Subset::full(2));
        assert_eq!(supp_t(&s, &ModelObject::zero()), Subset::EMPTY);

        let k1 = koszul_object(&s, 1).unwrap();
        let stc = supp_tc(&s, &k1).unwrap();
        assert_eq!(stc.len(), 1);
        // the point it hits is the Balmer prime P_{p1} = {}
        let sp = thick_lattice(&s).spectrum();
        let members = thick_members(&s);
        let pt = stc.iter().next().unwrap();
        assert_eq!(members[sp.point_elements[pt]], Subset::EMPTY);

        let e1 = injective_hull_object(&s, 1);
        assert!(matches!(supp_tc(&s, &e1), Err(ModelError::NotCompact(_))));
    }
}
