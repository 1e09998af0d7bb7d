//! Affine hyperplane arrangements inside an open polyhedral window, and the
//! COM of sign vectors of their cells.

use std::collections::HashSet;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::feasibility::{feasible, Constraint};
use super::rational::Rational;
use crate::error::{check_enumeration_cap, Error, Result};
use crate::io::parse_error;
use crate::sign::{Sign, SignVector};
use crate::system::SignSystem;

/// The hyperplane `a · x = b`; its positive side is `a · x - b > 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Hyperplane {
    pub a: Vec<Rational>,
    pub b: Rational,
    pub label: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Sense {
    #[serde(rename = "<")]
    Less,
    #[serde(rename = ">")]
    Greater,
}

/// The open halfspace `a · x < b` or `a · x > b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HalfSpace {
    pub a: Vec<Rational>,
    pub b: Rational,
    pub sense: Sense,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Arrangement {
    pub dim: usize,
    pub hyperplanes: Vec<Hyperplane>,
    #[serde(default)]
    pub window: Vec<HalfSpace>,
}

fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&n| Rational::from_int(n)).collect()
}

impl Arrangement {
    /// Central arrangement of integer normals labelled `1..=n`.
    pub fn central(dim: usize, normals: &[&[i64]]) -> Arrangement {
        Arrangement {
            dim,
            hyperplanes: normals
                .iter()
                .enumerate()
                .map(|(i, a)| Hyperplane {
                    a: ints(a),
                    b: Rational::zero(),
                    label: (i + 1).to_string(),
                })
                .collect(),
            window: Vec::new(),
        }
    }

    /// Adds the hyperplane `a · x = b` with the next numeric label.
    pub fn with_plane(mut self, a: &[i64], b: Rational) -> Arrangement {
        let label = (self.hyperplanes.len() + 1).to_string();
        self.hyperplanes.push(Hyperplane {
            a: ints(a),
            b,
            label,
        });
        self
    }

    pub fn with_window(mut self, a: &[i64], sense: Sense, b: Rational) -> Arrangement {
        self.window.push(HalfSpace {
            a: ints(a),
            b,
            sense,
        });
        self
    }

    pub fn from_json(text: &str) -> Result<Arrangement> {
        let arr: Arrangement = serde_json::from_str(text).map_err(parse_error)?;
        arr.validate()?;
        Ok(arr)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).unwrap_or_default()
    }

    pub fn validate(&self) -> Result<()> {
        let mut seen = HashSet::new();
        for h in &self.hyperplanes {
            if h.a.len() != self.dim {
                return Err(Error::Dimension {
                    expected: self.dim,
                    found: h.a.len(),
                });
            }
            if h.a.iter().all(Rational::is_zero) {
                return Err(Error::input(format!(
                    "hyperplane {} has zero normal",
                    h.label
                )));
            }
            if !seen.insert(h.label.as_str()) {
                return Err(Error::input(format!(
                    "duplicate hyperplane label {:?}",
                    h.label
                )));
            }
        }
        for w in &self.window {
            if w.a.len() != self.dim {
                return Err(Error::Dimension {
                    expected: self.dim,
                    found: w.a.len(),
                });
            }
        }
        check_enumeration_cap("hyperplane count", self.hyperplanes.len())
    }

    fn window_rows(&self) -> Vec<Constraint> {
        self.window
            .iter()
            .map(|w| {
                let a: Vec<BigRational> = w.a.iter().map(|c| c.0.clone()).collect();
                match w.sense {
                    Sense::Greater => Constraint::new(a, w.b.0.clone()),
                    Sense::Less => {
                        Constraint::new(a.into_iter().map(|c| -c).collect(), -w.b.0.clone())
                    }
                }
            })
            .collect()
    }

    fn plane_row(&self, e: usize, s: Sign) -> Constraint {
        let h = &self.hyperplanes[e];
        let a: Vec<BigRational> = h.a.iter().map(|c| c.0.clone()).collect();
        match s {
            Sign::Minus => Constraint::new(a.into_iter().map(|c| -c).collect(), -h.b.0.clone()),
            _ => Constraint::new(a, h.b.0.clone()),
        }
    }

    /// Sign vectors of all nonempty cells meeting the window, by a depth
    /// first search over partial sign patterns with feasibility pruning.
    pub fn cells(&self) -> Result<Vec<SignVector>> {
        self.validate()?;
        let mut out = Vec::new();
        let mut eqs = Vec::new();
        let mut strict = self.window_rows();
        let mut signs = Vec::with_capacity(self.hyperplanes.len());
        self.dfs(&mut signs, &mut eqs, &mut strict, &mut out)?;
        Ok(out)
    }

    fn dfs(
        &self,
        signs: &mut Vec<Sign>,
        eqs: &mut Vec<Constraint>,
        strict: &mut Vec<Constraint>,
        out: &mut Vec<SignVector>,
    ) -> Result<()> {
        if feasible(self.dim, eqs, strict)?.is_none() {
            return Ok(());
        }
        let e = signs.len();
        if e == self.hyperplanes.len() {
            out.push(SignVector::from_signs(signs));
            return Ok(());
        }
        for s in [Sign::Zero, Sign::Plus, Sign::Minus] {
            let row = self.plane_row(e, s);
            signs.push(s);
            if s == Sign::Zero {
                eqs.push(row);
                self.dfs(signs, eqs, strict, out)?;
                eqs.pop();
            } else {
                strict.push(row);
                self.dfs(signs, eqs, strict, out)?;
                strict.pop();
            }
            signs.pop();
        }
        Ok(())
    }
}

/// The realizable COM of the arrangement, checked to be simple and a COM.
pub fn com_from_arrangement(arr: &Arrangement) -> Result<SignSystem> {
    let cells = arr.cells()?;
    if cells.is_empty() {
        return Err(Error::Generation("the window is empty".into()));
    }
    let labels = arr.hyperplanes.iter().map(|h| h.label.clone()).collect();
    let m = SignSystem::new(labels, cells)?;
    let c = m.classify();
    if !c.simple {
        let why: Vec<&str> = c
            .violations
            .iter()
            .filter(|v| v.axiom == "simple")
            .map(|v| v.detail.as_str())
            .collect();
        return Err(Error::Generation(format!(
            "arrangement is not simple: {}",
            why.join("; ")
        )));
    }
    if !c.com {
        return Err(Error::Generation("cell system fails the COM axioms".into()));
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn half() -> Rational {
        Rational::new(1, 2).unwrap()
    }

    #[test]
    fn coordinate_lines_give_all_nine_vectors() {
        let m = com_from_arrangement(&Arrangement::central(2, &[&[1, 0], &[0, 1]])).unwrap();
        assert_eq!(m.covectors().len(), 9);
    }

    #[test]
    fn three_central_lines() {
        let m =
            com_from_arrangement(&Arrangement::central(2, &[&[1, 0], &[0, 1], &[1, 1]])).unwrap();
        assert_eq!(m.covectors().len(), 13);
        assert_eq!(m.topes().len(), 6);
        assert_eq!(m.cocircuits().unwrap().len(), 6);
        assert!(m.classify().om);
    }

    #[test]
    fn parallel_lines_are_rejected() {
        let arr = Arrangement::central(2, &[&[1, 0], &[2, 0]]);
        match com_from_arrangement(&arr) {
            Err(Error::Generation(msg)) => assert!(msg.contains("1 and 2"), "{msg}"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn empty_window_is_rejected() {
        let arr = Arrangement::central(1, &[&[1]])
            .with_window(&[1], Sense::Greater, Rational::from_int(1))
            .with_window(&[1], Sense::Less, Rational::from_int(0));
        assert!(matches!(
            com_from_arrangement(&arr),
            Err(Error::Generation(_))
        ));
    }

    #[test]
    fn window_cuts_a_strip() {
        // y = 0 and x = 0 inside -1/2 < y < 1/2: element 1 is simple
        let arr = Arrangement::central(2, &[&[1, 0], &[0, 1]])
            .with_window(&[0, 1], Sense::Less, half())
            .with_window(&[0, 1], Sense::Greater, -half());
        let m = com_from_arrangement(&arr).unwrap();
        assert_eq!(m.covectors().len(), 9);
    }

    #[test]
    fn json_round_trip() {
        let text = r#"{"dim": 2,
            "hyperplanes": [{"a": [2, -1], "b": -2, "label": "1"},
                            {"a": [0, 1], "b": "1/3", "label": "2"}],
            "window": [{"a": [0, 1], "b": "1/2", "sense": "<"}]}"#;
        let arr = Arrangement::from_json(text).unwrap();
        assert_eq!(arr.hyperplanes[1].b, Rational::new(1, 3).unwrap());
        assert_eq!(Arrangement::from_json(&arr.to_json()).unwrap(), arr);
    }

    #[test]
    fn json_errors_carry_positions() {
        let text = "{\"dim\": 1,\n \"hyperplanes\": [{\"a\": [0.5], \"b\": 0, \"label\": \"1\"}]}";
        match Arrangement::from_json(text) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("{other:?}"),
        }
        let zero = r#"{"dim": 1, "hyperplanes": [{"a": [0], "b": 0, "label": "1"}]}"#;
        assert!(matches!(Arrangement::from_json(zero), Err(Error::Input(_))));
        let dims = r#"{"dim": 2, "hyperplanes": [{"a": [1], "b": 0, "label": "1"}]}"#;
        assert!(matches!(
            Arrangement::from_json(dims),
            Err(Error::Dimension { .. })
        ));
    }
}
