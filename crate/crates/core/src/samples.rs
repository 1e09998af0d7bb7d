//! Realizable and full samples, the `Ŝ`/`S̋` pair, and lower and upper
//! covectors.
//!
//! Samples are sign vectors on the universe of the system that vanish
//! outside its ground set; `S⁰` always means the zero set inside the ground.

use std::collections::HashSet;

use crate::error::{check_enumeration_cap, Error, Result};
use crate::sign::{ElementSet, SignVector};
use crate::system::SignSystem;
use crate::vcdim::{face_topes, vcd_of};

/// Zero set of `s` inside the ground of `m`.
pub fn zero_set_in(m: &SignSystem, s: &SignVector) -> ElementSet {
    m.ground().difference(s.support())
}

pub fn is_realizable(m: &SignSystem, s: &SignVector) -> bool {
    m.covectors()
        .iter()
        .any(|t| t.support() == m.ground() && s.below(t))
}

/// All sign vectors on the ground below some tope, in canonical order.
pub fn enumerate_samples(m: &SignSystem) -> Result<Vec<SignVector>> {
    check_enumeration_cap("ground set", m.ground().len())?;
    Ok(samples_below(&m.topes()))
}

pub(crate) fn samples_below(topes: &[SignVector]) -> Vec<SignVector> {
    let mut seen = HashSet::new();
    for t in topes {
        for keep in t.support().power_set() {
            seen.insert(t.restrict(keep));
        }
    }
    let mut out: Vec<SignVector> = seen.into_iter().collect();
    out.sort_unstable();
    out
}

fn require_realizable(m: &SignSystem, s: &SignVector) -> Result<()> {
    m.check_vector(s)?;
    if is_realizable(m, s) {
        Ok(())
    } else {
        Err(Error::NotRealizable(m.format_vector(s)))
    }
}

/// VC-dimension of `M \ A` read off the restricted topes.
pub(crate) fn vcd_after_deleting(m: &SignSystem, topes: &[SignVector], a: ElementSet) -> usize {
    let keep = m.ground().difference(a);
    let restricted: Vec<SignVector> = topes.iter().map(|t| t.restrict(keep)).collect();
    vcd_of(&restricted, keep)
}

/// Contracting `S⁰` keeps the VC-dimension.
pub fn is_full(m: &SignSystem, s: &SignVector) -> Result<bool> {
    require_realizable(m, s)?;
    let topes = m.topes();
    Ok(vcd_after_deleting(m, &topes, zero_set_in(m, s)) == vcd_of(&topes, m.ground()))
}

/// `Ŝ = X∘S` and `S̋ = Ŝ \ X̲` for a covector `X` not separated from `S`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HatPair {
    pub anchor: SignVector,
    pub hat: SignVector,
    pub doublehat: SignVector,
}

impl HatPair {
    /// `[Ŝ] = [X] ∩ [S] ≠ ∅`.
    pub fn verify(&self, m: &SignSystem, s: &SignVector) -> bool {
        let topes = m.topes();
        let hat: HashSet<&SignVector> = topes.iter().filter(|t| self.hat.below(t)).collect();
        let meet: HashSet<&SignVector> = topes
            .iter()
            .filter(|t| self.anchor.below(t) && s.below(t))
            .collect();
        !hat.is_empty() && hat == meet
    }
}

pub fn hats(m: &SignSystem, x: &SignVector, s: &SignVector) -> Result<HatPair> {
    m.check_vector(x)?;
    if !m.contains(x) {
        return Err(Error::input(format!(
            "{} is not a covector",
            m.format_vector(x)
        )));
    }
    require_realizable(m, s)?;
    if !x.separator(s).is_empty() {
        return Err(Error::precondition(format!(
            "{} and {} are separated",
            m.format_vector(x),
            m.format_vector(s)
        )));
    }
    let hat = x.compose(s);
    Ok(HatPair {
        anchor: *x,
        hat,
        doublehat: hat.restrict(m.ground().difference(x.support())),
    })
}

/// Minimal nonzero covectors of `M \ S⁰` below `S`. When `S⁰` is the whole
/// ground the answer is the zero vector of the empty system.
pub fn lower_covectors(m: &SignSystem, s: &SignVector) -> Result<Vec<SignVector>> {
    require_realizable(m, s)?;
    let z = zero_set_in(m, s);
    if z == m.ground() {
        return Ok(vec![m.zero_vector()]);
    }
    Ok(lower_in(&m.delete_unchecked(z).minimal_nonzero(), s))
}

/// The members of `minimal` below `s`; `minimal` lists the minimal nonzero
/// covectors of `M \ S⁰`.
pub(crate) fn lower_in(minimal: &[SignVector], s: &SignVector) -> Vec<SignVector> {
    minimal.iter().filter(|x| x.below(s)).copied().collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UpperCovectors {
    pub all: Vec<SignVector>,
    /// `H_{S,X'}`: the upper covectors whose face keeps the dimension of
    /// the face of `X'` in `M \ S⁰`.
    pub localized: Vec<SignVector>,
}

pub fn upper_covectors(m: &SignSystem, s: &SignVector, x1: &SignVector) -> Result<UpperCovectors> {
    let lower = lower_covectors(m, s)?;
    if !lower.contains(x1) {
        return Err(Error::precondition(format!(
            "{} is not a lower covector of {}",
            m.format_vector(x1),
            m.format_vector(s)
        )));
    }
    let z = zero_set_in(m, s);
    let keep = m.ground().difference(z);
    let minor = m.delete_unchecked(z);
    let minor_topes = minor.topes();
    let target = vcd_of(
        &face_topes(&minor, &minor_topes, x1),
        keep.difference(x1.support()),
    );
    let topes = m.topes();
    let all: Vec<SignVector> = m
        .covectors()
        .iter()
        .filter(|x| x.restrict(keep) == *x1)
        .copied()
        .collect();
    let localized = all
        .iter()
        .filter(|x| {
            vcd_of(
                &face_topes(m, &topes, x),
                m.ground().difference(x.support()),
            ) == target
        })
        .copied()
        .collect();
    Ok(UpperCovectors { all, localized })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;

    fn v(m: &SignSystem, s: &str) -> SignVector {
        m.parse_vector(s).unwrap()
    }

    fn fmt(m: &SignSystem, xs: &[SignVector]) -> Vec<String> {
        xs.iter().map(|x| m.format_vector(x)).collect()
    }

    #[test]
    fn square_realizes_everything() {
        let m = catalog("om-square").unwrap();
        let s = enumerate_samples(&m).unwrap();
        assert_eq!(s.len(), 9);
        assert!(s.contains(&m.zero_vector()));
        for t in m.topes() {
            assert!(s.contains(&t));
        }
    }

    #[test]
    fn fullness_in_twin_squares() {
        let m = catalog("ample-e311").unwrap();
        assert!(is_full(&m, &v(&m, "00---")).unwrap());
        assert!(!is_full(&m, &v(&m, "00-00")).unwrap());
        for t in m.topes() {
            assert!(is_full(&m, &t).unwrap());
        }
        assert!(matches!(
            is_full(&m, &v(&m, "-++00")),
            Err(Error::NotRealizable(_))
        ));
    }

    #[test]
    fn hat_examples() {
        let m = catalog("ample-e311").unwrap();
        let x = v(&m, "+++00");
        let s = v(&m, "++++0");
        let h = hats(&m, &x, &s).unwrap();
        assert_eq!(m.format_vector(&h.hat), "++++0");
        assert_eq!(h.doublehat.format_on(ElementSet::from_bits(0b11000)), "+0");
        assert!(h.verify(&m, &s));

        let sq = catalog("om-square").unwrap();
        let s0 = v(&sq, "+0");
        let h0 = hats(&sq, &sq.zero_vector(), &s0).unwrap();
        assert_eq!((h0.hat, h0.doublehat), (s0, s0));
        assert!(hats(&m, &m.zero_vector(), &v(&m, "00---")).is_err());

        let t = v(&m, "+++-+");
        let h = hats(&m, &x, &t).unwrap();
        assert_eq!(h.hat, t);
        assert_eq!(h.doublehat, t.restrict(ElementSet::from_bits(0b11000)));

        assert!(matches!(
            hats(&m, &x, &v(&m, "-0000")),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn lower_covectors_of_pendant_sample() {
        let m = catalog("com-p4").unwrap();
        let low = lower_covectors(&m, &v(&m, "+++0")).unwrap();
        assert_eq!(fmt(&m, &low), ["00+0", "++00"]);
        let sq = catalog("om-square").unwrap();
        let low = lower_covectors(&sq, &v(&sq, "++")).unwrap();
        assert_eq!(fmt(&sq, &low), ["0+", "+0"]);
        let low = lower_covectors(&sq, &sq.zero_vector()).unwrap();
        assert_eq!(low, vec![sq.zero_vector()]);
    }

    #[test]
    fn upper_covectors_of_pendant_sample() {
        let m = catalog("com-p4").unwrap();
        let s = v(&m, "+++0");
        let up = upper_covectors(&m, &s, &v(&m, "00+0")).unwrap();
        assert_eq!(fmt(&m, &up.localized), ["00++"]);
        assert!(matches!(
            upper_covectors(&m, &s, &v(&m, "0+00")),
            Err(Error::Precondition(_))
        ));

        let t = m.topes()[0];
        for x1 in lower_covectors(&m, &t).unwrap() {
            let up = upper_covectors(&m, &t, &x1).unwrap();
            assert_eq!(up.all, vec![x1]);
            assert_eq!(up.localized, vec![x1]);
        }
    }
}
