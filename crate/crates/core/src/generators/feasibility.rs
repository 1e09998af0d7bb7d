//! Exact feasibility of `{x : A x = b, G x > h}` by Gaussian elimination of
//! the equalities followed by Fourier–Motzkin elimination on the strict
//! inequalities.

use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

type Q = BigRational;

/// `a · x` compared against `b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub a: Vec<Q>,
    pub b: Q,
}

impl Constraint {
    pub fn new(a: Vec<Q>, b: Q) -> Self {
        Constraint { a, b }
    }

    fn value(&self, x: &[Q]) -> Q {
        self.a.iter().zip(x).map(|(c, v)| c * v).sum()
    }
}

/// Strict system `a · x > b` normalized so the first nonzero coefficient has
/// absolute value one; for equal normals only the tightest `b` is kept.
fn normalize(rows: Vec<Constraint>) -> Vec<Constraint> {
    let mut best: HashMap<Vec<Q>, Q> = HashMap::new();
    let mut order = Vec::new();
    for mut r in rows {
        if let Some(p) = r.a.iter().find(|c| !c.is_zero()).map(|c| c.abs()) {
            for c in &mut r.a {
                *c /= &p;
            }
            r.b /= &p;
        }
        match best.get_mut(&r.a) {
            Some(b) => {
                if r.b > *b {
                    *b = r.b;
                }
            }
            None => {
                order.push(r.a.clone());
                best.insert(r.a, r.b);
            }
        }
    }
    order
        .into_iter()
        .map(|a| {
            let b = best.remove(&a).unwrap_or_else(Q::zero);
            Constraint { a, b }
        })
        .collect()
}

/// Solved equality `x_j = (b - Σ_{k≠j} a_k x_k) / a_j` for back-substitution.
struct Pivot {
    var: usize,
    row: Constraint,
}

/// Decides nonemptiness and returns a rational witness when nonempty.
pub fn feasible(
    dim: usize,
    equalities: &[Constraint],
    strict: &[Constraint],
) -> Result<Option<Vec<Q>>> {
    for c in equalities.iter().chain(strict) {
        if c.a.len() != dim {
            return Err(Error::input(format!(
                "constraint has {} coefficients in dimension {dim}",
                c.a.len()
            )));
        }
    }

    let mut eqs: Vec<Constraint> = equalities.to_vec();
    let mut ineqs: Vec<Constraint> = strict.to_vec();
    let mut pivots: Vec<Pivot> = Vec::new();
    while let Some(row) = eqs.pop() {
        let Some(j) = row.a.iter().position(|c| !c.is_zero()) else {
            if row.b.is_zero() {
                continue;
            }
            return Ok(None);
        };
        let pj = row.a[j].clone();
        let row = Constraint {
            a: row.a.iter().map(|c| c / &pj).collect(),
            b: &row.b / &pj,
        };
        for other in eqs.iter_mut().chain(ineqs.iter_mut()) {
            let f = other.a[j].clone();
            if f.is_zero() {
                continue;
            }
            for (c, r) in other.a.iter_mut().zip(&row.a) {
                *c -= &f * r;
            }
            other.b -= &f * &row.b;
        }
        pivots.push(Pivot { var: j, row });
    }

    // Levels of the elimination: levels[k] is the system before eliminating
    // variable `elim[k]`.
    let mut system = normalize(ineqs);
    let mut levels: Vec<Vec<Constraint>> = Vec::new();
    let mut elim: Vec<usize> = Vec::new();
    for j in (0..dim).rev() {
        if !system.iter().any(|r| !r.a[j].is_zero()) {
            continue;
        }
        let (mut lo, mut hi, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for r in &system {
            if r.a[j].is_positive() {
                lo.push(r);
            } else if r.a[j].is_negative() {
                hi.push(r);
            } else {
                rest.push(r.clone());
            }
        }
        for p in &lo {
            for n in &hi {
                let wp = -n.a[j].clone();
                let wn = p.a[j].clone();
                let a =
                    p.a.iter()
                        .zip(&n.a)
                        .map(|(x, y)| &wp * x + &wn * y)
                        .collect();
                let b = &wp * &p.b + &wn * &n.b;
                rest.push(Constraint { a, b });
            }
        }
        levels.push(std::mem::take(&mut system));
        elim.push(j);
        system = normalize(rest);
    }
    if system.iter().any(|r| !r.b.is_negative()) {
        return Ok(None);
    }

    let mut x = vec![Q::zero(); dim];
    for (k, &j) in elim.iter().enumerate().rev() {
        x[j] = Q::zero();
        let mut lower: Option<Q> = None;
        let mut upper: Option<Q> = None;
        for r in &levels[k] {
            let c = &r.a[j];
            if c.is_zero() {
                continue;
            }
            let bound = (&r.b - r.value(&x)) / c;
            if c.is_positive() {
                if lower.as_ref().is_none_or(|l| bound > *l) {
                    lower = Some(bound);
                }
            } else if upper.as_ref().is_none_or(|u| bound < *u) {
                upper = Some(bound);
            }
        }
        x[j] = match (lower, upper) {
            (Some(l), Some(u)) => (l + u) / Q::from_integer(2.into()),
            (Some(l), None) => l + Q::one(),
            (None, Some(u)) => u - Q::one(),
            (None, None) => Q::zero(),
        };
    }
    for p in pivots.iter().rev() {
        x[p.var] = Q::zero();
        x[p.var] = &p.row.b - p.row.value(&x);
    }
    debug_assert!(equalities.iter().all(|c| c.value(&x) == c.b));
    debug_assert!(strict.iter().all(|c| c.value(&x) > c.b));
    Ok(Some(x))
}
