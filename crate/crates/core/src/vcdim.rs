//! Shattering, VC-dimension and the covectors whose faces maximally shatter
//! a given set.

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::sign::{ElementSet, SignVector};
use crate::system::SignSystem;
use crate::topegraph::TopeGraph;

/// Outcome of a shattering test on `subset`.
///
/// `witnesses` lists every pattern on `subset` (as a vector that is zero
/// elsewhere) in canonical order, paired with the first vertex in canonical
/// order realizing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShatterCertificate {
    pub subset: ElementSet,
    pub witnesses: Vec<(SignVector, Option<SignVector>)>,
}

impl ShatterCertificate {
    pub fn is_shattered(&self) -> bool {
        self.witnesses.iter().all(|(_, w)| w.is_some())
    }
}

/// True when all `2^|d|` patterns on `d` occur among `vertices`.
pub fn shattered_by(vertices: &[SignVector], d: ElementSet) -> bool {
    let need = 1usize << d.len();
    if vertices.len() < need {
        return false;
    }
    let mut seen = HashSet::with_capacity(need);
    for v in vertices {
        seen.insert(v.restrict(d));
        if seen.len() == need {
            return true;
        }
    }
    false
}

/// Largest size of a subset of `ground` shattered by `vertices`.
pub fn vcd_of(vertices: &[SignVector], ground: ElementSet) -> usize {
    if vertices.is_empty() {
        return 0;
    }
    let mut best = 0;
    for k in 1..=ground.len() {
        if (1usize << k) > vertices.len() {
            break;
        }
        if ground
            .subsets_of_size(k)
            .into_iter()
            .any(|d| shattered_by(vertices, d))
        {
            best = k;
        } else {
            break;
        }
    }
    best
}

/// All shattered subsets of size `k`, in scan order.
pub fn shattered_sets(vertices: &[SignVector], ground: ElementSet, k: usize) -> Vec<ElementSet> {
    ground
        .subsets_of_size(k)
        .into_iter()
        .filter(|&d| shattered_by(vertices, d))
        .collect()
}

pub fn shatters(g: &TopeGraph, d: ElementSet) -> Result<ShatterCertificate> {
    if !d.is_subset(g.ground()) {
        return Err(Error::input(format!(
            "element set {d:?} is not contained in the ground set"
        )));
    }
    let mut first: HashMap<SignVector, SignVector> = HashMap::new();
    for v in g.vertices() {
        first.entry(v.restrict(d)).or_insert(*v);
    }
    let witnesses = crate::sign::all_sign_vectors(g.universe_len(), d)
        .into_iter()
        .filter(|p| p.support() == d)
        .map(|p| {
            let w = first.get(&p).copied();
            (p, w)
        })
        .collect();
    Ok(ShatterCertificate {
        subset: d,
        witnesses,
    })
}

pub fn vc_dimension(g: &TopeGraph) -> usize {
    vcd_of(g.vertices(), g.ground())
}

/// No circuit support lies inside `d`.
pub fn independent(m: &SignSystem, d: ElementSet) -> Result<bool> {
    m.check_subset(d)?;
    Ok(m.circuits()?.independent(d))
}

/// Topes of `M(X)` as vectors on the universe, zero on `X̲`.
pub(crate) fn face_topes(m: &SignSystem, topes: &[SignVector], x: &SignVector) -> Vec<SignVector> {
    let keep = m.ground().difference(x.support());
    topes
        .iter()
        .filter(|t| x.below(t))
        .map(|t| t.restrict(keep))
        .collect()
}

/// `M(X)` shatters `d` and no `d ∪ {e}`.
pub(crate) fn maximally_shatters(
    m: &SignSystem,
    topes: &[SignVector],
    x: &SignVector,
    d: ElementSet,
) -> bool {
    if !d.intersection(x.support()).is_empty() {
        return false;
    }
    let ft = face_topes(m, topes, x);
    if !shattered_by(&ft, d) {
        return false;
    }
    let rest = m.ground().difference(x.support()).difference(d);
    !rest.iter().any(|e| shattered_by(&ft, d.with(e)))
}

/// `H_D`: covectors whose face shatters `d` but no proper superset of it.
/// Empty when `M` itself does not shatter `d`.
pub fn shattering_covectors(m: &SignSystem, d: ElementSet) -> Result<Vec<SignVector>> {
    m.require_simple_com("shattering covectors")?;
    m.check_subset(d)?;
    Ok(h_d(m, d))
}

pub(crate) fn h_d(m: &SignSystem, d: ElementSet) -> Vec<SignVector> {
    let topes = m.topes();
    if !shattered_by(&topes, d) {
        return Vec::new();
    }
    m.covectors()
        .iter()
        .filter(|x| maximally_shatters(m, &topes, x, d))
        .copied()
        .collect()
}
