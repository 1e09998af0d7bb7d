//! Systems of sign vectors and the minor operations on them.

use std::collections::HashSet;
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::axioms::Classification;
use crate::error::{check_enumeration_cap, Error, Result, MAX_ELEMENTS};
use crate::sign::{all_sign_vectors, ElementSet, SignVector};

/// A ground set together with the sign vectors it carries.
///
/// Covectors are kept deduplicated and in canonical order. Every covector
/// vanishes outside `ground`; `labels` names every position of the universe,
/// including positions removed by earlier deletions.
#[derive(Clone)]
pub struct SignSystem {
    labels: Arc<[String]>,
    ground: ElementSet,
    covectors: Vec<SignVector>,
    lookup: Arc<HashSet<SignVector>>,
    class: Arc<OnceLock<Classification>>,
}

/// Vectors and circuits of an oriented matroid, computed by orthogonality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Circuits {
    pub vectors: Vec<SignVector>,
    pub circuits: Vec<SignVector>,
}

impl Circuits {
    /// True when no circuit support lies inside `d`.
    pub fn independent(&self, d: ElementSet) -> bool {
        !self.circuits.iter().any(|c| c.support().is_subset(d))
    }
}

impl SignSystem {
    /// Builds a system on a fresh universe named by `labels`.
    pub fn new(labels: Vec<String>, covectors: Vec<SignVector>) -> Result<Self> {
        if labels.len() > MAX_ELEMENTS {
            return Err(Error::input(format!(
                "ground set has {} elements, at most {MAX_ELEMENTS} supported",
                labels.len()
            )));
        }
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::input(format!("duplicate element label {l:?}")));
            }
        }
        for x in &covectors {
            if x.len() != labels.len() {
                return Err(Error::Dimension {
                    expected: labels.len(),
                    found: x.len(),
                });
            }
        }
        let ground = ElementSet::full(labels.len());
        Ok(Self::from_parts(labels.into(), ground, covectors))
    }

    /// Parses covectors given as sign strings in ground order.
    pub fn from_strings<S: AsRef<str>>(labels: &[&str], covectors: &[S]) -> Result<Self> {
        let vs = covectors
            .iter()
            .map(|c| SignVector::parse(c.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        SignSystem::new(labels.iter().map(|s| s.to_string()).collect(), vs)
    }

    /// Labels `1..=n` for a universe of size `n`.
    pub fn numbered_labels(n: usize) -> Vec<String> {
        (1..=n).map(|i| i.to_string()).collect()
    }

    pub(crate) fn from_parts(
        labels: Arc<[String]>,
        ground: ElementSet,
        mut covectors: Vec<SignVector>,
    ) -> Self {
        covectors.sort_unstable();
        covectors.dedup();
        let lookup = Arc::new(covectors.iter().copied().collect());
        SignSystem {
            labels,
            ground,
            covectors,
            lookup,
            class: Arc::new(OnceLock::new()),
        }
    }

    pub fn ground(&self) -> ElementSet {
        self.ground
    }

    /// Size of the universe the sign vectors live on.
    pub fn universe_len(&self) -> usize {
        self.labels.len()
    }

    pub fn universe_labels(&self) -> &[String] {
        &self.labels
    }

    pub(crate) fn shared_labels(&self) -> Arc<[String]> {
        Arc::clone(&self.labels)
    }

    pub fn label(&self, e: usize) -> &str {
        &self.labels[e]
    }

    pub fn ground_labels(&self) -> Vec<&str> {
        self.ground
            .iter()
            .map(|e| self.labels[e].as_str())
            .collect()
    }

    pub fn element_index(&self, label: &str) -> Option<usize> {
        self.ground.iter().find(|&e| self.labels[e] == label)
    }

    /// Resolves element labels of the ground set.
    pub fn element_set<S: AsRef<str>>(&self, labels: &[S]) -> Result<ElementSet> {
        labels
            .iter()
            .map(|l| {
                self.element_index(l.as_ref())
                    .ok_or_else(|| Error::input(format!("unknown element {:?}", l.as_ref())))
            })
            .collect()
    }

    pub fn covectors(&self) -> &[SignVector] {
        &self.covectors
    }

    pub fn contains(&self, x: &SignVector) -> bool {
        self.lookup.contains(x)
    }

    /// Parses a sign string written in ground order into a universe vector.
    pub fn parse_vector(&self, s: &str) -> Result<SignVector> {
        let raw = SignVector::parse(s)?;
        if raw.len() != self.ground.len() {
            return Err(Error::Dimension {
                expected: self.ground.len(),
                found: raw.len(),
            });
        }
        let mut v = SignVector::zero(self.universe_len());
        for (i, e) in self.ground.iter().enumerate() {
            v = v.with(e, raw.get(i));
        }
        Ok(v)
    }

    /// Renders a universe vector in ground order.
    pub fn format_vector(&self, x: &SignVector) -> String {
        x.format_on(self.ground)
    }

    pub(crate) fn format_set(&self, s: ElementSet) -> String {
        let names: Vec<&str> = s.iter().map(|e| self.labels[e].as_str()).collect();
        format!("{{{}}}", names.join(","))
    }

    pub(crate) fn check_vector(&self, x: &SignVector) -> Result<()> {
        if x.len() != self.universe_len() {
            return Err(Error::Dimension {
                expected: self.universe_len(),
                found: x.len(),
            });
        }
        if !x.support().is_subset(self.ground) {
            return Err(Error::input(format!(
                "sign vector {x} is nonzero outside the ground set"
            )));
        }
        Ok(())
    }

    pub(crate) fn check_subset(&self, a: ElementSet) -> Result<()> {
        if a.is_subset(self.ground) {
            Ok(())
        } else {
            Err(Error::input(format!(
                "element set {a:?} is not contained in the ground set"
            )))
        }
    }

    pub fn zero_vector(&self) -> SignVector {
        SignVector::zero(self.universe_len())
    }

    /// Covectors whose zero set inside the ground is empty.
    pub fn topes(&self) -> Vec<SignVector> {
        self.covectors
            .iter()
            .filter(|x| x.support() == self.ground)
            .copied()
            .collect()
    }

    /// `M \ A`: restricts every covector to `ground \ A`.
    pub fn delete(&self, a: ElementSet) -> Result<SignSystem> {
        self.check_subset(a)?;
        Ok(self.delete_unchecked(a))
    }

    pub(crate) fn delete_unchecked(&self, a: ElementSet) -> SignSystem {
        if a.is_empty() {
            return self.clone();
        }
        let keep = self.ground.difference(a);
        let covectors = self.covectors.iter().map(|x| x.restrict(keep)).collect();
        SignSystem::from_parts(self.shared_labels(), keep, covectors)
    }

    /// Restricts the system to `keep`, deleting everything else.
    pub fn restrict_to(&self, keep: ElementSet) -> Result<SignSystem> {
        self.check_subset(keep)?;
        Ok(self.delete_unchecked(self.ground.difference(keep)))
    }

    /// All covectors above `x`.
    pub fn face(&self, x: &SignVector) -> Result<Vec<SignVector>> {
        self.check_vector(x)?;
        if !self.contains(x) {
            return Err(Error::input(format!(
                "{} is not a covector",
                self.format_vector(x)
            )));
        }
        Ok(self.face_unchecked(x))
    }

    pub(crate) fn face_unchecked(&self, x: &SignVector) -> Vec<SignVector> {
        self.covectors
            .iter()
            .filter(|y| x.below(y))
            .copied()
            .collect()
    }

    /// `M(X)`: the face of `x` with the support of `x` deleted.
    pub fn simplify(&self, x: &SignVector) -> Result<SignSystem> {
        let face = self.face(x)?;
        let keep = self.ground.difference(x.support());
        let covectors = face.iter().map(|y| y.restrict(keep)).collect();
        Ok(SignSystem::from_parts(
            self.shared_labels(),
            keep,
            covectors,
        ))
    }

    /// Reverses the signs of the elements in `a` on every covector.
    pub fn reorient(&self, a: ElementSet) -> Result<SignSystem> {
        self.check_subset(a)?;
        let covectors = self.covectors.iter().map(|x| x.reorient(a)).collect();
        Ok(SignSystem::from_parts(
            self.shared_labels(),
            self.ground,
            covectors,
        ))
    }

    /// Minimal nonzero covectors under the product order.
    pub fn minimal_nonzero(&self) -> Vec<SignVector> {
        let nonzero: Vec<&SignVector> = self.covectors.iter().filter(|x| !x.is_zero()).collect();
        nonzero
            .iter()
            .filter(|x| !nonzero.iter().any(|y| y != *x && y.below(x)))
            .map(|x| **x)
            .collect()
    }

    /// Axiom check, computed once per system.
    pub fn classify(&self) -> &Classification {
        self.class.get_or_init(|| crate::axioms::classify(self))
    }

    pub(crate) fn require_om(&self, op: &str) -> Result<()> {
        if !self.classify().om {
            return Err(Error::precondition(format!(
                "{op} requires an oriented matroid"
            )));
        }
        Ok(())
    }

    pub(crate) fn require_simple_com(&self, op: &str) -> Result<()> {
        let c = self.classify();
        if !c.com || !c.simple {
            return Err(Error::precondition(format!("{op} requires a simple COM")));
        }
        Ok(())
    }

    /// The atoms of the covector poset of an oriented matroid.
    pub fn cocircuits(&self) -> Result<Vec<SignVector>> {
        self.require_om("cocircuits")?;
        Ok(self.minimal_nonzero())
    }

    /// Vectors (everything orthogonal to all cocircuits) and circuits (the
    /// minimal nonzero vectors), by exhaustive scan of `{-,0,+}^U`.
    pub fn circuits(&self) -> Result<Circuits> {
        check_enumeration_cap("ground set", self.ground.len())?;
        let cocircuits = self.cocircuits()?;
        Ok(circuits_from_cocircuits(
            self.universe_len(),
            self.ground,
            &cocircuits,
        ))
    }

    /// Ground labels and covector strings, the form used for equality.
    pub fn canonical_form(&self) -> (Vec<&str>, Vec<String>) {
        (
            self.ground_labels(),
            self.covectors
                .iter()
                .map(|x| self.format_vector(x))
                .collect(),
        )
    }
}

pub(crate) fn circuits_from_cocircuits(
    len: usize,
    ground: ElementSet,
    cocircuits: &[SignVector],
) -> Circuits {
    let vectors: Vec<SignVector> = all_sign_vectors(len, ground)
        .into_iter()
        .filter(|y| cocircuits.iter().all(|x| orthogonal(x, y)))
        .collect();
    let nonzero: Vec<&SignVector> = vectors.iter().filter(|y| !y.is_zero()).collect();
    let circuits = nonzero
        .iter()
        .filter(|y| !nonzero.iter().any(|z| z != *y && z.below(y)))
        .map(|y| **y)
        .collect();
    Circuits { vectors, circuits }
}

/// Disjoint supports, or two common elements with opposite sign products.
pub fn orthogonal(x: &SignVector, y: &SignVector) -> bool {
    let common = x.support().intersection(y.support());
    if common.is_empty() {
        return true;
    }
    let same = x
        .plus()
        .intersection(y.plus())
        .union(x.minus().intersection(y.minus()));
    let opposite = x.separator(y);
    !same.intersection(common).is_empty() && !opposite.is_empty()
}

impl PartialEq for SignSystem {
    fn eq(&self, other: &Self) -> bool {
        self.canonical_form() == other.canonical_form()
    }
}

impl Eq for SignSystem {}

impl fmt::Debug for SignSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (ground, covectors) = self.canonical_form();
        f.debug_struct("SignSystem")
            .field("ground", &ground)
            .field("covectors", &covectors)
            .finish()
    }
}
