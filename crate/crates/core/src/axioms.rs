//! Axiom checks for COMs, OMs and ample systems.

use serde::Serialize;

use crate::sign::{ElementSet, Sign, SignVector};
use crate::system::SignSystem;

/// Witnessed violations kept per axiom; the flags stay exact beyond it.
const VIOLATIONS_PER_AXIOM: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub axiom: &'static str,
    pub detail: String,
    pub witnesses: Vec<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub simple: bool,
    pub com: bool,
    pub om: bool,
    pub ample: bool,
    pub violations: Vec<Violation>,
}

struct Recorder<'a> {
    m: &'a SignSystem,
    out: Vec<Violation>,
    count: usize,
}

impl Recorder<'_> {
    fn push(&mut self, axiom: &'static str, detail: String, witnesses: &[SignVector]) {
        self.count += 1;
        if self.count <= VIOLATIONS_PER_AXIOM {
            self.out.push(Violation {
                axiom,
                detail,
                witnesses: witnesses.iter().map(|x| self.m.format_vector(x)).collect(),
            });
        }
    }

    fn finish_axiom(&mut self) -> bool {
        let ok = self.count == 0;
        self.count = 0;
        ok
    }
}

pub(crate) fn classify(m: &SignSystem) -> Classification {
    let mut rec = Recorder {
        m,
        out: Vec::new(),
        count: 0,
    };
    check_simple(m, &mut rec);
    let simple = rec.finish_axiom();
    if m.covectors().is_empty() {
        rec.push("nonempty", "system has no covectors".into(), &[]);
    }
    let nonempty = rec.finish_axiom();
    check_face_symmetry(m, &mut rec);
    let fs = rec.finish_axiom();
    check_strong_elimination(m, &mut rec);
    let se = rec.finish_axiom();
    let com = nonempty && fs && se;

    let zero = m.contains(&m.zero_vector());
    if com && !zero {
        rec.push("zero", "zero vector is not a covector".into(), &[]);
    }
    rec.finish_axiom();
    let om = com && zero;

    let ample = com && {
        check_ample(m, &mut rec);
        rec.finish_axiom()
    };

    Classification {
        simple,
        com,
        om,
        ample,
        violations: rec.out,
    }
}

fn check_simple(m: &SignSystem, rec: &mut Recorder) {
    let ground: Vec<usize> = m.ground().iter().collect();
    for &e in &ground {
        for s in [Sign::Zero, Sign::Plus, Sign::Minus] {
            if !m.covectors().iter().any(|x| x.get(e) == s) {
                rec.push(
                    "simple",
                    format!("element {} never takes sign {}", m.label(e), s.to_char()),
                    &[],
                );
            }
        }
    }
    for (i, &e) in ground.iter().enumerate() {
        for &f in &ground[i + 1..] {
            let mut agree = false;
            let mut oppose = false;
            for x in m.covectors() {
                match x.get(e).as_i8() * x.get(f).as_i8() {
                    1 => agree = true,
                    -1 => oppose = true,
                    _ => {}
                }
            }
            if !(agree && oppose) {
                rec.push(
                    "simple",
                    format!("elements {} and {} are parallel", m.label(e), m.label(f)),
                    &[],
                );
            }
        }
    }
}

fn check_face_symmetry(m: &SignSystem, rec: &mut Recorder) {
    for x in m.covectors() {
        for y in m.covectors() {
            let z = x.compose(&-*y);
            if !m.contains(&z) {
                rec.push(
                    "FS",
                    format!("X∘-Y = {} is missing", m.format_vector(&z)),
                    &[*x, *y],
                );
            }
        }
    }
}

/// Looks for Z with Z_e = 0 agreeing with X∘Y off the separator, either by
/// enumerating the free coordinates or by scanning, whichever is smaller.
fn se_has_witness(
    m: &SignSystem,
    x: &SignVector,
    y: &SignVector,
    sep: ElementSet,
    e: usize,
) -> bool {
    let xy = x.compose(y);
    let free = sep.without(e);
    let fixed = m.ground().difference(sep);
    let target = xy.restrict(fixed);
    let candidates = 3usize.saturating_pow(free.len() as u32);
    if candidates <= m.covectors().len() {
        let free: Vec<usize> = free.iter().collect();
        let mut z = target;
        let mut digits = vec![0u8; free.len()];
        loop {
            if m.contains(&z) {
                return true;
            }
            let mut i = 0;
            while i < digits.len() && digits[i] == 2 {
                digits[i] = 0;
                z = z.with(free[i], Sign::Zero);
                i += 1;
            }
            if i == digits.len() {
                return false;
            }
            digits[i] += 1;
            let s = if digits[i] == 1 {
                Sign::Plus
            } else {
                Sign::Minus
            };
            z = z.with(free[i], s);
        }
    } else {
        m.covectors()
            .iter()
            .any(|z| z.get(e) == Sign::Zero && z.restrict(fixed) == target)
    }
}

fn check_strong_elimination(m: &SignSystem, rec: &mut Recorder) {
    let cov = m.covectors();
    for (i, x) in cov.iter().enumerate() {
        for y in &cov[i + 1..] {
            let sep = x.separator(y);
            for e in sep.iter() {
                if !se_has_witness(m, x, y, sep, e) {
                    rec.push(
                        "SE",
                        format!("no eliminant at element {}", m.label(e)),
                        &[*x, *y],
                    );
                }
            }
        }
    }
}

fn check_ample(m: &SignSystem, rec: &mut Recorder) {
    let topes = m.topes();
    for x in m.covectors() {
        let above: Vec<&SignVector> = topes.iter().filter(|t| x.below(t)).collect();
        let Some(first) = above.first() else {
            rec.push("ample", "covector lies below no tope".into(), &[*x]);
            continue;
        };
        let mut differ = ElementSet::EMPTY;
        for t in &above {
            differ = differ.union(first.separator(t));
        }
        if above.len() == 1usize << differ.len() {
            continue;
        }
        rec.push(
            "ample",
            format!(
                "face has {} topes, not a cube on {}",
                above.len(),
                m.format_set(differ)
            ),
            &[*x],
        );
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;

    #[test]
    fn full_square_is_everything() {
        let c = catalog("om-square").unwrap().classify().clone();
        assert!(c.simple && c.com && c.om && c.ample, "{c:?}");
        assert!(c.violations.is_empty());
    }

    #[test]
    fn twin_squares_are_ample_but_not_om() {
        let c = catalog("ample-e311").unwrap().classify().clone();
        assert!(c.simple && c.com && c.ample && !c.om, "{c:?}");
    }

    #[test]
    fn hexagon_is_an_om_but_not_ample() {
        let c = catalog("om-hexagon").unwrap().classify().clone();
        assert!(c.om && !c.ample);
    }

    #[test]
    fn antipodal_pair_fails_elimination() {
        let m = SignSystem::from_strings(&["1", "2"], &["++", "--"]).unwrap();
        let c = m.classify();
        assert!(!c.com);
        let se: Vec<&Violation> = c.violations.iter().filter(|v| v.axiom == "SE").collect();
        assert_eq!(se[0].witnesses, ["++", "--"]);
        assert!(se[0].detail.contains("element 1"));
    }

    #[test]
    fn missing_face_symmetry_is_reported() {
        let m = SignSystem::from_strings(&["1"], &["0", "+"]).unwrap();
        let c = m.classify();
        assert!(!c.com && !c.simple);
        assert!(c.violations.iter().any(|v| v.axiom == "FS"));
    }

    #[test]
    fn parallel_elements_are_not_simple() {
        let m = SignSystem::from_strings(&["1", "2"], &["00", "++", "--"]).unwrap();
        let c = m.classify();
        assert!(c.com && c.om && !c.simple);
    }
}
