//! The distinguishing function, the compressor `α`, the reconstructor `β`
//! and exhaustive verification of the resulting proper labeled sample
//! compression scheme.
//!
//! Every recursive call of the construction happens in a minor of the input
//! (a deletion or the face of a covector). [`Scheme`] interns those minors
//! so that tope lists, VC-dimensions and values of the distinguishing
//! function are computed once per minor and sample.

use std::collections::HashMap;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::samples::{lower_in, samples_below, vcd_after_deleting};
use crate::sign::{ElementSet, SignVector};
use crate::system::SignSystem;
use crate::vcdim::{h_d, maximally_shatters, vcd_of};

type NodeId = usize;

struct Node {
    sys: SignSystem,
    topes: Vec<SignVector>,
    tope_set: std::collections::HashSet<SignVector>,
    vcd: usize,
    minimal: Option<Arc<Vec<SignVector>>>,
    deleted_vcd: HashMap<ElementSet, usize>,
}

/// Full samples of a minor grouped by `(f(Q), Q restricted to f(Q))`.
type ClassMap = HashMap<(ElementSet, SignVector), Vec<SignVector>>;

/// A compressed label: a sign vector whose support is the selected set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CompressedLabel {
    pub value: SignVector,
}

impl CompressedLabel {
    pub fn support(&self) -> ElementSet {
        self.value.support()
    }
}

/// The class `Ω(C, D)` of full samples of `M(X)` sharing a label, and the
/// topes `R(C, D)` above all of them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealizerReport {
    pub anchor: SignVector,
    pub class: Vec<SignVector>,
    pub realizer: Vec<SignVector>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SchemeFailure {
    pub sample: String,
    pub label: Option<String>,
    pub reconstruction: Option<String>,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SchemeReport {
    pub samples: usize,
    pub vcd: usize,
    pub max_label_size: usize,
    pub failures: Vec<SchemeFailure>,
}

impl SchemeReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn summary(&self) -> String {
        if self.passed() {
            format!(
                "samples: {}, all proper, max label size {}",
                self.samples, self.max_label_size
            )
        } else {
            format!(
                "samples: {}, {} failures, first at {}",
                self.samples,
                self.failures.len(),
                self.failures[0].sample
            )
        }
    }
}

/// Counts of the alternatives tried by [`Scheme::robustness`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct RobustnessReport {
    pub samples: usize,
    pub cocircuit_offsets: usize,
    pub lower_choices: usize,
    pub anchor_choices: usize,
    pub tope_choices: usize,
    pub failures: Vec<SchemeFailure>,
}

pub struct Scheme {
    nodes: Vec<Node>,
    interned: HashMap<(ElementSet, Vec<SignVector>), NodeId>,
    deletions: HashMap<(NodeId, ElementSet), NodeId>,
    faces: HashMap<(NodeId, SignVector), NodeId>,
    f_memo: HashMap<(NodeId, SignVector), Result<ElementSet>>,
    classes: HashMap<NodeId, Arc<ClassMap>>,
    localizations: HashMap<ElementSet, Arc<Vec<SignVector>>>,
    /// Index into the admissible cocircuits at each tope step of `f`; zero
    /// is the lexicographic rule.
    cocircuit_offset: usize,
    most_cocircuit_choices: usize,
}

const ROOT: NodeId = 0;

impl Scheme {
    /// Prepares the scheme for a simple COM.
    pub fn new(m: &SignSystem) -> Result<Scheme> {
        m.require_simple_com("the compression scheme")?;
        let mut s = Scheme {
            nodes: Vec::new(),
            interned: HashMap::new(),
            deletions: HashMap::new(),
            faces: HashMap::new(),
            f_memo: HashMap::new(),
            classes: HashMap::new(),
            localizations: HashMap::new(),
            cocircuit_offset: 0,
            most_cocircuit_choices: 1,
        };
        s.intern(m.clone());
        Ok(s)
    }

    pub fn system(&self) -> &SignSystem {
        &self.nodes[ROOT].sys
    }

    pub fn vcd(&self) -> usize {
        self.nodes[ROOT].vcd
    }

    fn intern(&mut self, sys: SignSystem) -> NodeId {
        let key = (sys.ground(), sys.covectors().to_vec());
        if let Some(&id) = self.interned.get(&key) {
            return id;
        }
        let topes = sys.topes();
        let vcd = vcd_of(&topes, sys.ground());
        let id = self.nodes.len();
        self.nodes.push(Node {
            tope_set: topes.iter().copied().collect(),
            topes,
            sys,
            vcd,
            minimal: None,
            deleted_vcd: HashMap::new(),
        });
        self.interned.insert(key, id);
        id
    }

    fn delete(&mut self, id: NodeId, a: ElementSet) -> NodeId {
        if a.is_empty() {
            return id;
        }
        if let Some(&c) = self.deletions.get(&(id, a)) {
            return c;
        }
        let sys = self.nodes[id].sys.delete_unchecked(a);
        let c = self.intern(sys);
        self.deletions.insert((id, a), c);
        c
    }

    /// `M(X)` for a covector `x` of node `id`.
    fn face(&mut self, id: NodeId, x: &SignVector) -> NodeId {
        if let Some(&c) = self.faces.get(&(id, *x)) {
            return c;
        }
        let parent = &self.nodes[id].sys;
        let keep = parent.ground().difference(x.support());
        let covectors = parent
            .face_unchecked(x)
            .iter()
            .map(|y| y.restrict(keep))
            .collect();
        let sys = SignSystem::from_parts(parent.shared_labels(), keep, covectors);
        let c = self.intern(sys);
        self.faces.insert((id, *x), c);
        c
    }

    fn minimal(&mut self, id: NodeId) -> Arc<Vec<SignVector>> {
        let node = &mut self.nodes[id];
        Arc::clone(
            node.minimal
                .get_or_insert_with(|| Arc::new(node.sys.minimal_nonzero())),
        )
    }

    fn is_full_in(&mut self, id: NodeId, s: &SignVector) -> bool {
        let node = &mut self.nodes[id];
        let z = node.sys.ground().difference(s.support());
        let d = match node.deleted_vcd.get(&z) {
            Some(&d) => d,
            None => {
                let d = vcd_after_deleting(&node.sys, &node.topes, z);
                node.deleted_vcd.insert(z, d);
                d
            }
        };
        d == node.vcd
    }

    fn realizable_in(&self, id: NodeId, s: &SignVector) -> bool {
        self.nodes[id].topes.iter().any(|t| s.below(t))
    }

    fn check_sample(&self, s: &SignVector) -> Result<()> {
        let m = self.system();
        m.check_vector(s)?;
        if !self.realizable_in(ROOT, s) {
            return Err(Error::NotRealizable(m.format_vector(s)));
        }
        Ok(())
    }

    fn f(&mut self, id: NodeId, s: &SignVector) -> Result<ElementSet> {
        if let Some(r) = self.f_memo.get(&(id, *s)) {
            return r.clone();
        }
        let r = self.f_uncached(id, s);
        self.f_memo.insert((id, *s), r.clone());
        r
    }

    fn f_uncached(&mut self, id: NodeId, s: &SignVector) -> Result<ElementSet> {
        let node = &self.nodes[id];
        if node.vcd == 0 {
            return Ok(ElementSet::EMPTY);
        }
        let ground = node.sys.ground();
        let z = ground.difference(s.support());
        if !z.is_empty() {
            let child = self.delete(id, z);
            return self.f(child, s);
        }
        if !node.tope_set.contains(s) {
            return Err(Error::NotRealizable(node.sys.format_vector(s)));
        }
        // osc([T]) of a single tope: the classes of its incident edges.
        let Some(e_s) = ground.iter().find(|&e| node.tope_set.contains(&s.flip(e))) else {
            return Err(Error::precondition(format!(
                "tope {} has no neighbor",
                node.sys.format_vector(s)
            )));
        };
        let minimal = self.minimal(id);
        let admissible: Vec<SignVector> = minimal
            .iter()
            .filter(|x| x.below(s) && x.support().contains(e_s))
            .copied()
            .collect();
        self.most_cocircuit_choices = self.most_cocircuit_choices.max(admissible.len());
        let Some(x1) = admissible
            .get(self.cocircuit_offset % admissible.len().max(1))
            .copied()
        else {
            return Err(Error::precondition(format!(
                "no cocircuit below {} meets element {}",
                self.nodes[id].sys.format_vector(s),
                self.nodes[id].sys.label(e_s)
            )));
        };
        let child = self.face(id, &x1);
        let rest = self.f(child, &s.restrict(self.nodes[child].sys.ground()))?;
        Ok(rest.with(e_s))
    }

    /// Makes every tope step of `f` take the admissible cocircuit at
    /// `offset` (cyclically) instead of the lexicographically first one.
    /// Clears the cached values of `f` and the label classes built on them.
    pub fn set_cocircuit_offset(&mut self, offset: usize) {
        if offset != self.cocircuit_offset {
            self.cocircuit_offset = offset;
            self.f_memo.clear();
            self.classes.clear();
        }
    }

    /// `f(S)` for a full sample of an OM.
    pub fn distinguish(&mut self, s: &SignVector) -> Result<ElementSet> {
        if !self.system().classify().om {
            return Err(Error::precondition(
                "the distinguishing function requires an oriented matroid",
            ));
        }
        self.check_sample(s)?;
        if !self.is_full_in(ROOT, s) {
            return Err(Error::precondition(format!(
                "{} is not a full sample",
                self.system().format_vector(s)
            )));
        }
        self.f(ROOT, s)
    }

    /// Lower covectors of `s`, in canonical order.
    pub fn lower_covectors(&mut self, s: &SignVector) -> Result<Vec<SignVector>> {
        self.check_sample(s)?;
        let z = self.system().ground().difference(s.support());
        if z == self.system().ground() {
            return Ok(vec![self.system().zero_vector()]);
        }
        let child = self.delete(ROOT, z);
        Ok(lower_in(&self.minimal(child), s))
    }

    /// Minimal covectors of `M \ S⁰` below `S`, zero included: `{0}` when
    /// the minor is an OM, the lower covectors otherwise. These are the
    /// maximal faces containing the tope `S \ S⁰`.
    pub fn alpha_candidates(&mut self, s: &SignVector) -> Result<Vec<SignVector>> {
        self.check_sample(s)?;
        let z = self.system().ground().difference(s.support());
        let child = self.delete(ROOT, z);
        if self.nodes[child].sys.contains(&self.system().zero_vector()) {
            return Ok(vec![self.system().zero_vector()]);
        }
        Ok(lower_in(&self.minimal(child), s))
    }

    /// `α(S)` with the lexicographically minimal candidate.
    pub fn alpha(&mut self, s: &SignVector) -> Result<CompressedLabel> {
        let cands = self.alpha_candidates(s)?;
        self.alpha_unchecked(s, &cands[0])
    }

    /// `α(S)` with a caller-chosen candidate.
    pub fn alpha_with(&mut self, s: &SignVector, x1: &SignVector) -> Result<CompressedLabel> {
        let cands = self.alpha_candidates(s)?;
        if !cands.contains(x1) {
            return Err(Error::precondition(format!(
                "{} is not a minimal covector below the sample",
                self.system().format_vector(x1)
            )));
        }
        self.alpha_unchecked(s, x1)
    }

    fn alpha_unchecked(&mut self, s: &SignVector, x1: &SignVector) -> Result<CompressedLabel> {
        let z = self.system().ground().difference(s.support());
        let minor = self.delete(ROOT, z);
        let face = self.face(minor, x1);
        let t = s.restrict(self.nodes[face].sys.ground());
        let selected = self.f(face, &t)?;
        Ok(CompressedLabel {
            value: s.restrict(selected),
        })
    }

    /// `H_D` of the input system.
    pub fn shattering_covectors(&mut self, d: ElementSet) -> Arc<Vec<SignVector>> {
        if let Some(h) = self.localizations.get(&d) {
            return Arc::clone(h);
        }
        let h = Arc::new(h_d(self.system(), d));
        self.localizations.insert(d, Arc::clone(&h));
        h
    }

    fn class_map(&mut self, id: NodeId) -> Result<Arc<ClassMap>> {
        if let Some(c) = self.classes.get(&id) {
            return Ok(Arc::clone(c));
        }
        let mut map: ClassMap = HashMap::new();
        for q in samples_below(&self.nodes[id].topes) {
            if !self.is_full_in(id, &q) {
                continue;
            }
            let d = self.f(id, &q)?;
            map.entry((d, q.restrict(d))).or_default().push(q);
        }
        let map = Arc::new(map);
        self.classes.insert(id, Arc::clone(&map));
        Ok(map)
    }

    /// `Ω(C, D)` and `R(C, D)` inside `M(X)` for `X ∈ H_D`, `D = supp(C)`.
    pub fn realizer(&mut self, x: &SignVector, c: &SignVector) -> Result<RealizerReport> {
        let m = self.system();
        m.check_vector(x)?;
        m.check_vector(c)?;
        let d = c.support();
        if !m.contains(x) || !maximally_shatters(m, &self.nodes[ROOT].topes, x, d) {
            return Err(Error::precondition(format!(
                "{} does not localize {}",
                m.format_vector(x),
                m.format_set(d)
            )));
        }
        let face = self.face(ROOT, x);
        let classes = self.class_map(face)?;
        let Some(class) = classes.get(&(d, *c)) else {
            return Err(Error::EmptyClass(format!(
                "no full sample of the face of {} has label {}",
                self.system().format_vector(x),
                self.system().format_vector(c)
            )));
        };
        let realizer = self.nodes[face]
            .topes
            .iter()
            .filter(|t| class.iter().all(|q| q.below(t)))
            .copied()
            .collect();
        Ok(RealizerReport {
            anchor: *x,
            class: class.clone(),
            realizer,
        })
    }

    /// `β(C)`; labels outside the image of `α` give a reconstruction error.
    pub fn beta(&mut self, c: &SignVector) -> Result<SignVector> {
        self.system().check_vector(c)?;
        let d = c.support();
        let h = self.shattering_covectors(d);
        let Some(x) = h.first().copied() else {
            return Err(Error::Reconstruction(format!(
                "no face maximally shatters {}",
                self.system().format_set(d)
            )));
        };
        let report = match self.realizer(&x, c) {
            Ok(r) => r,
            Err(Error::EmptyClass(msg)) => return Err(Error::Reconstruction(msg)),
            Err(e) => return Err(e),
        };
        let Some(t) = report.realizer.first() else {
            return Err(Error::Reconstruction("empty realizer".into()));
        };
        Ok(x.compose(t))
    }

    fn judge(&self, s: &SignVector, c: &SignVector, t: &SignVector) -> Option<String> {
        if !c.below(s) {
            return Some("label is not below the sample".into());
        }
        if c.support().len() > self.vcd() {
            return Some(format!("label size exceeds {}", self.vcd()));
        }
        if !self.nodes[ROOT].tope_set.contains(t) {
            return Some("reconstruction is not a tope".into());
        }
        if !s.below(t) {
            return Some("reconstruction is not above the sample".into());
        }
        None
    }

    fn failure(
        &self,
        s: &SignVector,
        c: Option<&SignVector>,
        t: Option<&SignVector>,
        reason: String,
    ) -> SchemeFailure {
        let m = self.system();
        SchemeFailure {
            sample: m.format_vector(s),
            label: c.map(|c| m.format_vector(c)),
            reconstruction: t.map(|t| m.format_vector(t)),
            reason,
        }
    }

    /// Checks `α(S) ≤ S ≤ β(α(S))`, the label bound and properness for one
    /// sample.
    pub fn check(&mut self, s: &SignVector) -> Option<SchemeFailure> {
        let c = match self.alpha(s) {
            Ok(c) => c.value,
            Err(e) => return Some(self.failure(s, None, None, e.to_string())),
        };
        let t = match self.beta(&c) {
            Ok(t) => t,
            Err(e) => return Some(self.failure(s, Some(&c), None, e.to_string())),
        };
        self.judge(s, &c, &t)
            .map(|why| self.failure(s, Some(&c), Some(&t), why))
    }

    /// Runs [`Scheme::check`] over every realizable sample.
    pub fn verify(&mut self) -> Result<SchemeReport> {
        let samples = crate::samples::enumerate_samples(self.system())?;
        let mut failures = Vec::new();
        let mut max_label_size = 0;
        for s in &samples {
            if let Ok(c) = self.alpha(s) {
                max_label_size = max_label_size.max(c.support().len());
            }
            if let Some(f) = self.check(s) {
                failures.push(f);
            }
        }
        Ok(SchemeReport {
            samples: samples.len(),
            vcd: self.vcd(),
            max_label_size,
            failures,
        })
    }

    /// Replaces each lexicographic choice by every alternative and checks
    /// each reconstruction: the cocircuit taken at tope steps of `f` (one
    /// rotation offset at a time, shared by `α` and `β`), the minimal
    /// covector in `α`, the anchor in `H_D` and the tope of the realizer.
    pub fn robustness(&mut self) -> Result<RobustnessReport> {
        let samples = crate::samples::enumerate_samples(self.system())?;
        let mut rep = RobustnessReport {
            samples: samples.len(),
            ..RobustnessReport::default()
        };
        let saved = self.cocircuit_offset;
        let mut offset = 0;
        while offset < self.most_cocircuit_choices {
            self.set_cocircuit_offset(offset);
            rep.cocircuit_offsets += 1;
            self.sweep(&samples, &mut rep)?;
            offset += 1;
        }
        self.set_cocircuit_offset(saved);
        Ok(rep)
    }

    fn sweep(&mut self, samples: &[SignVector], rep: &mut RobustnessReport) -> Result<()> {
        for s in samples {
            for x1 in self.alpha_candidates(s)? {
                rep.lower_choices += 1;
                let c = match self.alpha_with(s, &x1) {
                    Ok(c) => c.value,
                    Err(e) => {
                        rep.failures
                            .push(self.failure(s, None, None, e.to_string()));
                        continue;
                    }
                };
                let h = self.shattering_covectors(c.support());
                if h.is_empty() {
                    rep.failures
                        .push(self.failure(s, Some(&c), None, "empty localization".into()));
                }
                for x in h.iter() {
                    rep.anchor_choices += 1;
                    let r = match self.realizer(x, &c) {
                        Ok(r) => r,
                        Err(e) => {
                            rep.failures
                                .push(self.failure(s, Some(&c), None, e.to_string()));
                            continue;
                        }
                    };
                    for t in &r.realizer {
                        rep.tope_choices += 1;
                        let g = x.compose(t);
                        if let Some(why) = self.judge(s, &c, &g) {
                            rep.failures.push(self.failure(s, Some(&c), Some(&g), why));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// `f(S)` of a full sample of an OM.
pub fn distinguish_f(m: &SignSystem, s: &SignVector) -> Result<ElementSet> {
    Scheme::new(m)?.distinguish(s)
}

pub fn alpha(m: &SignSystem, s: &SignVector) -> Result<CompressedLabel> {
    Scheme::new(m)?.alpha(s)
}

pub fn beta(m: &SignSystem, c: &SignVector) -> Result<SignVector> {
    Scheme::new(m)?.beta(c)
}

pub fn realizer(m: &SignSystem, x: &SignVector, c: &SignVector) -> Result<RealizerReport> {
    Scheme::new(m)?.realizer(x, c)
}

pub fn verify_scheme(m: &SignSystem) -> Result<SchemeReport> {
    Scheme::new(m)?.verify()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;

    fn v(m: &SignSystem, s: &str) -> SignVector {
        m.parse_vector(s).unwrap()
    }

    #[test]
    fn rank_one_base_case() {
        let m = SignSystem::from_strings(&["e"], &["0", "+", "-"]).unwrap();
        for t in ["+", "-"] {
            assert_eq!(
                distinguish_f(&m, &v(&m, t)).unwrap(),
                ElementSet::singleton(0)
            );
        }
    }

    #[test]
    fn distinguishing_in_small_oms() {
        let sq = catalog("om-square").unwrap();
        assert_eq!(
            distinguish_f(&sq, &v(&sq, "++")).unwrap(),
            ElementSet::full(2)
        );
        let hex = catalog("om-hexagon").unwrap();
        assert_eq!(
            distinguish_f(&hex, &v(&hex, "+++")).unwrap(),
            ElementSet::from_bits(0b011)
        );
    }

    #[test]
    fn distinguishing_requires_full_om_samples() {
        let p4 = catalog("com-p4").unwrap();
        assert!(matches!(
            distinguish_f(&p4, &v(&p4, "++++")),
            Err(Error::Precondition(_))
        ));
        let hex = catalog("om-hexagon").unwrap();
        assert!(matches!(
            distinguish_f(&hex, &v(&hex, "+00")),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn pendant_samples_share_a_label() {
        let m = catalog("com-p4").unwrap();
        let a = alpha(&m, &v(&m, "+++0")).unwrap();
        let b = alpha(&m, &v(&m, "++0+")).unwrap();
        assert_eq!(m.format_vector(&a.value), "++00");
        assert_eq!(a, b);
        assert_eq!(m.format_vector(&beta(&m, &a.value).unwrap()), "++++");
    }

    #[test]
    fn square_round_trip() {
        let m = catalog("om-square").unwrap();
        let c = alpha(&m, &v(&m, "++")).unwrap();
        assert_eq!(m.format_vector(&c.value), "++");
        assert_eq!(m.format_vector(&beta(&m, &c.value).unwrap()), "++");
        let z = alpha(&m, &m.zero_vector()).unwrap();
        assert!(z.value.is_zero());
        assert_eq!(beta(&m, &z.value).unwrap(), m.topes()[0]);
    }

    #[test]
    fn realizer_of_the_square_face() {
        let m = catalog("com-p4").unwrap();
        let r = realizer(&m, &v(&m, "00++"), &v(&m, "++00")).unwrap();
        assert_eq!(r.class, vec![v(&m, "++00")]);
        assert_eq!(r.realizer, vec![v(&m, "++00")]);

        let t = m.topes()[0];
        let r = realizer(&m, &t, &m.zero_vector()).unwrap();
        assert_eq!(r.class, vec![m.zero_vector()]);
        assert_eq!(r.realizer.len(), 1);
    }

    #[test]
    fn foreign_labels_fail_to_reconstruct() {
        let m = catalog("om-hexagon").unwrap();
        assert!(matches!(
            beta(&m, &v(&m, "++-")),
            Err(Error::Reconstruction(_))
        ));
        let p4 = catalog("com-p4").unwrap();
        let mut s = Scheme::new(&p4).unwrap();
        let labels: Vec<SignVector> = crate::samples::enumerate_samples(&p4)
            .unwrap()
            .iter()
            .map(|q| s.alpha(q).unwrap().value)
            .collect();
        let foreign = v(&p4, "--00");
        if !labels.contains(&foreign) {
            assert!(s.beta(&foreign).is_err());
        }
    }

    #[test]
    fn catalog_schemes_verify() {
        for name in crate::catalog::NAMES {
            let rep = verify_scheme(&catalog(name).unwrap()).unwrap();
            assert!(rep.passed(), "{name}: {:?}", rep.failures);
            assert_eq!(rep.max_label_size, rep.vcd);
        }
    }

    #[test]
    fn every_choice_reconstructs() {
        for name in ["om-square", "om-hexagon", "com-p4"] {
            let mut s = Scheme::new(&catalog(name).unwrap()).unwrap();
            let rep = s.robustness().unwrap();
            assert!(rep.failures.is_empty(), "{name}: {:?}", rep.failures);
            assert!(rep.tope_choices >= rep.samples);
        }
        let mut s = Scheme::new(&catalog("om-r3-planes4").unwrap()).unwrap();
        let rep = s.robustness().unwrap();
        assert!(rep.cocircuit_offsets > 1);
        assert!(rep.failures.is_empty(), "{:?}", rep.failures);
    }
}
