//! Executable invariant suites. Each suite checks one family of structural
//! facts exhaustively on a simple COM and reports how many individual
//! checks ran, what failed and how long it took.
//!
//! Suites that only make sense for oriented matroids run on the input when
//! it is one, and otherwise on every maximal face `M(X)`, which is an OM.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::samples::{enumerate_samples, hats, is_full, lower_covectors, upper_covectors};
use crate::scheme::Scheme;
use crate::sign::{ElementSet, SignVector};
use crate::system::SignSystem;
use crate::topegraph::{DistanceTable, TopeGraph};
use crate::vcdim::{face_topes, h_d, maximally_shatters, shattered_by, vcd_of};

/// Failure messages kept per suite; the rest are only counted.
const KEPT_FAILURES: usize = 10;

pub const SUITES: [&str; 15] = [
    "composition",
    "deletion",
    "partial-cube",
    "gates",
    "projection",
    "regions",
    "osc-contraction",
    "shattering",
    "independence",
    "cocircuit-faces",
    "hats",
    "lower-upper",
    "localization",
    "distinguishing",
    "tope-count",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SuiteStatus {
    Passed,
    Failed,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub name: &'static str,
    pub status: SuiteStatus,
    pub checks: usize,
    pub failed: usize,
    pub failures: Vec<String>,
    pub note: Option<String>,
    pub millis: u64,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.status != SuiteStatus::Failed
    }
}

#[derive(Default)]
struct Tally {
    checks: usize,
    failed: usize,
    failures: Vec<String>,
    note: Option<String>,
    skipped: bool,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < KEPT_FAILURES {
                self.failures.push(what());
            }
        }
    }

    fn skip(&mut self, why: impl Into<String>) {
        self.skipped = true;
        self.note = Some(why.into());
    }
}

struct Ctx<'a> {
    m: &'a SignSystem,
    topes: Vec<SignVector>,
    graph: TopeGraph,
    vcd: usize,
    samples: Option<Vec<SignVector>>,
}

impl<'a> Ctx<'a> {
    fn new(m: &'a SignSystem) -> Ctx<'a> {
        let topes = m.topes();
        let vcd = vcd_of(&topes, m.ground());
        Ctx {
            graph: TopeGraph::of_system(m),
            topes,
            vcd,
            m,
            samples: None,
        }
    }

    fn samples(&mut self) -> Result<&[SignVector]> {
        if self.samples.is_none() {
            self.samples = Some(enumerate_samples(self.m)?);
        }
        Ok(self.samples.as_deref().unwrap_or_default())
    }

    fn f(&self, x: &SignVector) -> String {
        self.m.format_vector(x)
    }

    fn face_vcd(&self, x: &SignVector) -> usize {
        vcd_of(
            &face_topes(self.m, &self.topes, x),
            self.m.ground().difference(x.support()),
        )
    }
}

/// The OMs an OM-only suite runs on.
fn oriented_matroids(m: &SignSystem) -> Result<Vec<SignSystem>> {
    if m.classify().om {
        return Ok(vec![m.clone()]);
    }
    m.minimal_nonzero().iter().map(|x| m.simplify(x)).collect()
}

fn vertex_set(vs: &[SignVector]) -> HashSet<SignVector> {
    vs.iter().copied().collect()
}

/// Agrees with `vs` exactly on the coordinates where all of `vs` agree.
fn is_convex(g: &TopeGraph, vs: &[SignVector]) -> bool {
    let Some(first) = vs.first() else {
        return true;
    };
    let mut bound = *first;
    for v in vs {
        for e in g.ground().iter() {
            if v.get(e) != bound.get(e) {
                bound = bound.restrict(bound.support().without(e));
            }
        }
    }
    vertex_set(&g.region_vertices(&bound)) == vertex_set(vs)
}

/// Runs one suite by name.
pub fn run_suite(m: &SignSystem, name: &str) -> Result<SuiteReport> {
    m.require_simple_com("the invariant suites")?;
    let Some(&name) = SUITES.iter().find(|s| **s == name) else {
        return Err(Error::input(format!(
            "unknown suite {name:?}; known: {}",
            SUITES.join(", ")
        )));
    };
    let mut ctx = Ctx::new(m);
    run_in(&mut ctx, name)
}

/// Runs every suite in order.
pub fn run_all(m: &SignSystem) -> Result<Vec<SuiteReport>> {
    m.require_simple_com("the invariant suites")?;
    let mut ctx = Ctx::new(m);
    SUITES.iter().map(|name| run_in(&mut ctx, name)).collect()
}

fn run_in(ctx: &mut Ctx, name: &'static str) -> Result<SuiteReport> {
    let start = Instant::now();
    let mut t = Tally::default();
    match name {
        "composition" => composition(ctx, &mut t),
        "deletion" => deletion(ctx, &mut t)?,
        "partial-cube" => partial_cube(ctx, &mut t)?,
        "gates" => gates(ctx, &mut t)?,
        "projection" => projection(ctx, &mut t)?,
        "regions" => regions(ctx, &mut t)?,
        "osc-contraction" => osc_contraction(ctx, &mut t)?,
        "shattering" => shattering(ctx, &mut t),
        "independence" => independence(ctx, &mut t)?,
        "cocircuit-faces" => cocircuit_faces(ctx, &mut t)?,
        "hats" => hat_suite(ctx, &mut t)?,
        "lower-upper" => lower_upper(ctx, &mut t)?,
        "localization" => localization(ctx, &mut t)?,
        "distinguishing" => distinguishing(ctx, &mut t)?,
        "tope-count" => tope_count(ctx, &mut t),
        _ => unreachable!("suite names are checked by the caller"),
    }
    let status = if t.failed > 0 {
        SuiteStatus::Failed
    } else if t.skipped {
        SuiteStatus::Skipped
    } else {
        SuiteStatus::Passed
    };
    Ok(SuiteReport {
        name,
        status,
        checks: t.checks,
        failed: t.failed,
        failures: t.failures,
        note: t.note,
        millis: start.elapsed().as_millis() as u64,
    })
}

/// Composition laws and the closure under `X∘Y` and `X∘-Y`.
fn composition(ctx: &Ctx, t: &mut Tally) {
    let m = ctx.m;
    let l = m.covectors();
    let z = m.zero_vector();
    for x in l {
        t.check(x.compose(x) == *x, || {
            format!("{} is not idempotent", ctx.f(x))
        });
        t.check(x.compose(&z) == *x && z.compose(x) == *x, || {
            format!("0 is not neutral for {}", ctx.f(x))
        });
    }
    for x in l {
        for y in l {
            t.check(m.contains(&x.compose(y)), || {
                format!("{} o {} is missing", ctx.f(x), ctx.f(y))
            });
            t.check(m.contains(&x.compose(&-*y)), || {
                format!("{} o -{} is missing", ctx.f(x), ctx.f(y))
            });
        }
    }
    // associativity over all triples while that stays below a million
    let k = (1..=l.len())
        .take_while(|k| k * k * k <= 1_000_000)
        .last()
        .unwrap_or(0);
    for x in &l[..k] {
        for y in &l[..k] {
            let xy = x.compose(y);
            for w in &l[..k] {
                t.check(xy.compose(w) == x.compose(&y.compose(w)), || {
                    format!("({} o {}) o {} differs", ctx.f(x), ctx.f(y), ctx.f(w))
                });
            }
        }
    }
    if m.classify().om {
        t.check(m.contains(&z), || "0 is missing from an OM".into());
        for x in l {
            t.check(m.contains(&-*x), || format!("-{} is missing", ctx.f(x)));
        }
    }
}

/// Deletions commute and a face forgets nothing off the support of its
/// covector.
fn deletion(ctx: &Ctx, t: &mut Tally) -> Result<()> {
    let m = ctx.m;
    let ground: Vec<usize> = m.ground().iter().collect();
    for (i, &a) in ground.iter().enumerate() {
        for &b in &ground[i + 1..] {
            let (sa, sb) = (ElementSet::singleton(a), ElementSet::singleton(b));
            let both = m.delete(sa.union(sb))?;
            t.check(m.delete(sa)?.delete(sb)? == both, || {
                format!("deleting {} then {} differs", m.label(a), m.label(b))
            });
            t.check(m.delete(sb)?.delete(sa)? == both, || {
                format!("deleting {} then {} differs", m.label(b), m.label(a))
            });
        }
    }
    for x in m.covectors() {
        let keep = m.ground().difference(x.support());
        for y in m.covectors() {
            t.check(y.restrict(keep) == x.compose(y).restrict(keep), || {
                format!("{} o {} changes the face coordinates", ctx.f(x), ctx.f(y))
            });
        }
    }
    Ok(())
}

/// Isometric embedding, convex halfspaces, antipodality of OMs and
/// contraction against deletion.
fn partial_cube(ctx: &Ctx, t: &mut Tally) -> Result<()> {
    let (m, g) = (ctx.m, &ctx.graph);
    t.check(g.is_partial_cube(), || {
        "the tope graph is not isometric".into()
    });
    t.check(g.halfspaces_convex(), || "a halfspace is not convex".into());
    if m.classify().om {
        t.check(g.is_antipodal(), || {
            "the tope graph of an OM is not antipodal".into()
        });
    }
    let mut subsets: Vec<ElementSet> = m.ground().subsets_of_size(1);
    subsets.extend(m.ground().subsets_of_size(2));
    for a in subsets {
        let built = TopeGraph::of_system(&m.delete(a)?);
        t.check(g.contract(a)? == built, || {
            format!("contracting {} differs from deleting it", m.format_set(a))
        });
    }
    Ok(())
}

/// The gate of a tope in `[X]` is `X∘T`, at distance `|Sep(T, X∘T)|`.
fn gates(ctx: &Ctx, t: &mut Tally) -> Result<()> {
    let (m, g) = (ctx.m, &ctx.graph);
    let mut table = DistanceTable::new(g)?;
    for x in m.covectors() {
        for tope in &ctx.topes {
            let gate = g.gate(m, x, tope)?;
            t.check(gate == x.compose(tope), || {
                format!(
                    "gate of {} in [{}] is not a composition",
                    ctx.f(tope),
                    ctx.f(x)
                )
            });
            t.check(g.is_metric_gate(&mut table, x, tope, &gate), || {
                format!(
                    "{} is not the metric gate of {} in [{}]",
                    ctx.f(&gate),
                    ctx.f(tope),
                    ctx.f(x)
                )
            });
            let (Some(ti), Some(gi)) = (g.index_of(tope), g.index_of(&gate)) else {
                t.check(false, || format!("{} is not a vertex", ctx.f(&gate)));
                continue;
            };
            let d = table.distance(g, ti, gi);
            t.check(d == Some(tope.separator(&gate).len() as u32), || {
                format!(
                    "d({}, {}) is not the separator size",
                    ctx.f(tope),
                    ctx.f(&gate)
                )
            });
        }
    }
    Ok(())
}

/// `d([X],[Y]) = |Sep(X,Y)|`, the gates of `[Y]` in `[X]` form `[X∘Y]`,
/// and projections keep shattered sets.
fn projection(ctx: &Ctx, t: &mut Tally) -> Result<()> {
    let (m, g) = (ctx.m, &ctx.graph);
    let mut table = DistanceTable::new(g)?;
    let faces: Vec<Vec<usize>> = m
        .covectors()
        .iter()
        .map(|x| {
            (0..g.vertex_count())
                .filter(|&i| x.below(&g.vertices()[i]))
                .collect()
        })
        .collect();
    let l = m.covectors();
    for (i, x) in l.iter().enumerate() {
        for (j, y) in l.iter().enumerate() {
            let d = table.set_distance(g, &faces[i], &faces[j]);
            t.check(d == Some(x.separator(y).len() as u32), || {
                format!("d([{}], [{}]) is not |Sep|", ctx.f(x), ctx.f(y))
            });
            let gates: HashSet<SignVector> = faces[j]
                .iter()
                .map(|&v| x.compose(&g.vertices()[v]))
                .collect();
            let xy = x.compose(y);
            t.check(gates == vertex_set(&g.region_vertices(&xy)), || {
                format!(
                    "gates of [{}] in [{}] are not [{}]",
                    ctx.f(y),
                    ctx.f(x),
                    ctx.f(&xy)
                )
            });
            // shattered sets survive projection
            let yx = y.compose(x);
            let common = x
                .zero_set()
                .intersection(y.zero_set())
                .intersection(m.ground());
            if common.len() > 6 {
                continue;
            }
            let fx = face_topes(m, &ctx.topes, x);
            let fy = face_topes(m, &ctx.topes, y);
            let fxy = face_topes(m, &ctx.topes, &xy);
            let fyx = face_topes(m, &ctx.topes, &yx);
            for d in common.power_set() {
                if shattered_by(&fx, d) && shattered_by(&fy, d) {
                    t.check(shattered_by(&fxy, d) && shattered_by(&fyx, d), || {
                        format!(
                            "projections of [{}], [{}] lose {}",
                            ctx.f(x),
                            ctx.f(y),
                            m.format_set(d)
                        )
                    });
                }
            }
        }
    }
    Ok(())
}

/// Canonical bounds determine the region and so does everything between
/// them.
fn regions(ctx: &mut Ctx, t: &mut Tally) -> Result<()> {
    let samples = ctx.samples()?.to_vec();
    let g = &ctx.graph;
    for s in &samples {
        let r = g.region(s)?;
        t.check(r.lower.below(s) && s.below(&r.upper), || {
            format!("{} is outside its bounds", ctx.f(s))
        });
        t.check(is_convex(g, &r.vertices), || {
            format!("[{}] is not convex", ctx.f(s))
        });
        let free = r.upper.support().difference(r.lower.support());
        let vs = vertex_set(&r.vertices);
        for keep in free.power_set() {
            let mid = r.upper.restrict(r.lower.support().union(keep));
            t.check(vertex_set(&g.region_vertices(&mid)) == vs, || {
                format!(
                    "{} between the bounds of {} changes the region",
                    ctx.f(&mid),
                    ctx.f(s)
                )
            });
        }
    }
    Ok(())
}

/// Contracting a class that does not osculate keeps convexity and osc.
fn osc_contraction(ctx: &mut Ctx, t: &mut Tally) -> Result<()> {
    let samples = ctx.samples()?.to_vec();
    let g = &ctx.graph;
    let contracted: HashMap<usize, TopeGraph> = g
        .ground()
        .iter()
        .map(|e| Ok((e, g.contract(ElementSet::singleton(e))?)))
        .collect::<Result<_>>()?;
    for s in &samples {
        let h = g.region_vertices(s);
        let osc = g.osc_of(&h);
        for e in g.ground().difference(osc).iter() {
            let gc = &contracted[&e];
            let keep = gc.ground();
            let mut hc: Vec<SignVector> = h.iter().map(|v| v.restrict(keep)).collect();
            hc.sort_unstable();
            hc.dedup();
            t.check(gc.osc_of(&hc) == osc, || {
                format!("contracting {} changes osc([{}])", ctx.m.label(e), ctx.f(s))
            });
            t.check(is_convex(gc, &hc), || {
                format!(
                    "contracting {} breaks convexity of [{}]",
                    ctx.m.label(e),
                    ctx.f(s)
                )
            });
        }
    }
    Ok(())
}

/// Faces realize the VC-dimension, gated faces keep shattered sets, and
/// every shattering face lies below a maximally shattering one.
fn shattering(ctx: &Ctx, t: &mut Tally) {
    let m = ctx.m;
    let best = m.covectors().iter().map(|x| ctx.face_vcd(x)).max();
    t.check(best == Some(ctx.vcd), || {
        format!("largest face dimension {best:?} differs from {}", ctx.vcd)
    });
    for x in m.covectors() {
        let x0 = m.ground().difference(x.support());
        if x0.len() > 10 {
            continue;
        }
        let ft = face_topes(m, &ctx.topes, x);
        for d in x0.power_set() {
            let in_face = shattered_by(&ft, d);
            if shattered_by(&ctx.topes, d) {
                t.check(in_face, || {
                    format!("[{}] loses shattered {}", ctx.f(x), m.format_set(d))
                });
            }
            if in_face {
                let lifted = m
                    .covectors()
                    .iter()
                    .any(|y| x.below(y) && maximally_shatters(m, &ctx.topes, y, d));
                t.check(lifted, || {
                    format!(
                        "no face above [{}] maximally shatters {}",
                        ctx.f(x),
                        m.format_set(d)
                    )
                });
            }
        }
    }
}

/// In OMs a set is shattered exactly when it contains no circuit support.
fn independence(ctx: &Ctx, t: &mut Tally) -> Result<()> {
    for o in oriented_matroids(ctx.m)? {
        let topes = o.topes();
        let circuits = o.circuits()?;
        for d in o.ground().power_set() {
            t.check(shattered_by(&topes, d) == circuits.independent(d), || {
                format!(
                    "shattering and independence disagree on {}",
                    o.format_set(d)
                )
            });
        }
    }
    Ok(())
}

/// In OMs cocircuit faces drop the dimension by one, and every osculating
/// class of a tope is cut by such a cocircuit. Also: osc of a tope holds a
/// shattered set of full size.
fn cocircuit_faces(ctx: &Ctx, t: &mut Tally) -> Result<()> {
    for o in oriented_matroids(ctx.m)? {
        let topes = o.topes();
        let g = TopeGraph::of_system(&o);
        let d = vcd_of(&topes, o.ground());
        let cocircuits = o.cocircuits()?;
        let face_vcd = |x: &SignVector| {
            vcd_of(
                &face_topes(&o, &topes, x),
                o.ground().difference(x.support()),
            )
        };
        for x in &cocircuits {
            t.check(face_vcd(x) + 1 == d, || {
                format!(
                    "cocircuit {} has a face of the wrong dimension",
                    o.format_vector(x)
                )
            });
        }
        for tope in &topes {
            let osc = g.osc_of(std::slice::from_ref(tope));
            t.check(
                osc.subsets_of_size(d)
                    .iter()
                    .any(|s| shattered_by(&topes, *s)),
                || {
                    format!(
                        "osc of {} holds no shattered {d}-set",
                        o.format_vector(tope)
                    )
                },
            );
            for e in osc.iter() {
                let ok = cocircuits
                    .iter()
                    .any(|x| x.below(tope) && x.support().contains(e) && face_vcd(x) + 1 == d);
                t.check(ok, || {
                    format!(
                        "no cocircuit below {} cuts {}",
                        o.format_vector(tope),
                        o.label(e)
                    )
                });
            }
        }
    }
    Ok(())
}

/// `Ŝ = X∘S` and `S̋`: regions, zero sets and osculating classes.
fn hat_suite(ctx: &mut Ctx, t: &mut Tally) -> Result<()> {
    let samples = ctx.samples()?.to_vec();
    let m = ctx.m;
    let g = &ctx.graph;
    for x in m.covectors() {
        let keep = m.ground().difference(x.support());
        let face: Vec<SignVector> = g.region_vertices(x);
        let gx = TopeGraph::from_parts(m.shared_labels(), m.ground(), face.clone());
        let gmx = TopeGraph::from_parts(
            m.shared_labels(),
            keep,
            face.iter().map(|v| v.restrict(keep)).collect(),
        );
        for s in &samples {
            if !x.separator(s).is_empty() {
                continue;
            }
            let h = hats(m, x, s)?;
            let what = || format!("X = {}, S = {}", ctx.f(x), ctx.f(s));
            t.check(h.verify(m, s), || {
                format!("[S^] is not [X] meet [S] for {}", what())
            });
            let s0 = m.ground().difference(s.support());
            let hat0 = m.ground().difference(h.hat.support());
            let dh0 = keep.difference(h.doublehat.support());
            t.check(hat0 == s0.intersection(keep) && dh0 == hat0, || {
                format!("zero sets disagree for {}", what())
            });
            t.check(x.compose(&h.doublehat) == h.hat, || {
                format!("S^ is not S^^ with X on its support for {}", what())
            });
            let hat_region = gx.region_vertices(&h.hat);
            let dh_region = gmx.region_vertices(&h.doublehat);
            let restricted: HashSet<SignVector> =
                hat_region.iter().map(|v| v.restrict(keep)).collect();
            t.check(restricted == vertex_set(&dh_region), || {
                format!("[S^] and [S^^] are not isomorphic for {}", what())
            });
            let osc_s = g.osc_of(&g.region_vertices(s));
            let osc_h = gx.osc_of(&hat_region);
            let osc_dh = gmx.osc_of(&dh_region);
            t.check(osc_dh == osc_h && osc_h == osc_s.intersection(keep), || {
                format!("osculating classes disagree for {}", what())
            });
        }
    }
    Ok(())
}

/// Lower and upper covectors: no separation, monotone dimension, fullness
/// of `S̋` and `M'(X') = M(X) \ S̋⁰`.
fn lower_upper(ctx: &mut Ctx, t: &mut Tally) -> Result<()> {
    let samples = ctx.samples()?.to_vec();
    let m = ctx.m;
    let om = m.classify().om;
    for s in &samples {
        let s0 = m.ground().difference(s.support());
        if s0 == m.ground() {
            continue;
        }
        let minor = m.delete(s0)?;
        let minor_topes = minor.topes();
        let minor_vcd = vcd_of(&minor_topes, minor.ground());
        for x1 in lower_covectors(m, s)? {
            let face1 = minor.simplify(&x1)?;
            let vcd1 = vcd_of(&face1.topes(), face1.ground());
            if om {
                t.check(vcd1 + 1 == minor_vcd, || {
                    format!(
                        "lower covector {} of {} is not a cocircuit",
                        ctx.f(&x1),
                        ctx.f(s)
                    )
                });
            }
            let up = upper_covectors(m, s, &x1)?;
            t.check(!up.localized.is_empty(), || {
                format!(
                    "no localized upper covector for {} at {}",
                    ctx.f(s),
                    ctx.f(&x1)
                )
            });
            for x in &up.all {
                let what = || format!("S = {}, X' = {}, X = {}", ctx.f(s), ctx.f(&x1), ctx.f(x));
                t.check(s.separator(x).is_empty(), || {
                    format!("S and X are separated: {}", what())
                });
                let vcdx = ctx.face_vcd(x);
                t.check(vcdx >= vcd1, || format!("face dimension drops: {}", what()));
                let fx = m.simplify(x)?;
                let h = hats(m, x, s)?;
                if vcdx == vcd1 {
                    t.check(is_full(&fx, &h.doublehat)?, || {
                        format!("S^^ is not full: {}", what())
                    });
                }
                let dh0 = fx.ground().difference(h.doublehat.support());
                t.check(fx.delete(dh0)? == face1, || {
                    format!(
                        "M'(X') differs from M(X) minus the zeros of S^^: {}",
                        what()
                    )
                });
            }
        }
    }
    Ok(())
}

/// `H_{S,X'} = H_D ≠ ∅` for the minimal covectors `X'` used by `α` and
/// every `D` shattered by `M'(X')` of full size.
fn localization(ctx: &mut Ctx, t: &mut Tally) -> Result<()> {
    let samples = ctx.samples()?.to_vec();
    let m = ctx.m;
    let mut scheme = Scheme::new(m)?;
    let mut h_cache: HashMap<ElementSet, Vec<SignVector>> = HashMap::new();
    for s in &samples {
        let s0 = m.ground().difference(s.support());
        let minor = m.delete(s0)?;
        let minor_topes = minor.topes();
        for x1 in scheme.alpha_candidates(s)? {
            let ft = face_topes(&minor, &minor_topes, &x1);
            let rest = minor.ground().difference(x1.support());
            let vcd1 = vcd_of(&ft, rest);
            let mut hsx: Vec<SignVector> = m
                .covectors()
                .iter()
                .filter(|x| x.restrict(minor.ground()) == x1 && ctx.face_vcd(x) == vcd1)
                .copied()
                .collect();
            hsx.sort_unstable();
            t.check(!hsx.is_empty(), || {
                format!(
                    "H_(S,X') is empty for S = {}, X' = {}",
                    ctx.f(s),
                    ctx.f(&x1)
                )
            });
            for d in rest.subsets_of_size(vcd1) {
                if !shattered_by(&ft, d) {
                    continue;
                }
                let hd = h_cache.entry(d).or_insert_with(|| h_d(m, d));
                t.check(*hd == hsx, || {
                    format!(
                        "H_(S,X') differs from H_D for S = {}, X' = {}, D = {}",
                        ctx.f(s),
                        ctx.f(&x1),
                        m.format_set(d)
                    )
                });
            }
        }
    }
    Ok(())
}

/// The distinguishing function of an OM: size, osc, shattering, recursion
/// consistency and nonempty class realizers.
fn distinguishing(ctx: &Ctx, t: &mut Tally) -> Result<()> {
    for o in oriented_matroids(ctx.m)? {
        let topes = o.topes();
        let g = TopeGraph::of_system(&o);
        let d = vcd_of(&topes, o.ground());
        let mut scheme = Scheme::new(&o)?;
        let mut minors: HashMap<ElementSet, Scheme> = HashMap::new();
        let mut classes: BTreeMap<(ElementSet, SignVector), Vec<SignVector>> = BTreeMap::new();
        for s in enumerate_samples(&o)? {
            if !is_full(&o, &s)? {
                continue;
            }
            let f = scheme.distinguish(&s)?;
            let region = g.region_vertices(&s);
            let what = || o.format_vector(&s);
            t.check(f.len() == d, || format!("f({}) has the wrong size", what()));
            t.check(f.is_subset(g.osc_of(&region)), || {
                format!("f({}) leaves osc", what())
            });
            t.check(shattered_by(&topes, f), || {
                format!("f({}) is not shattered", what())
            });
            let s0 = o.ground().difference(s.support());
            if !s0.is_empty() {
                let minor = match minors.entry(s0) {
                    std::collections::hash_map::Entry::Occupied(e) => e.into_mut(),
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(Scheme::new(&o.delete(s0)?)?)
                    }
                };
                t.check(minor.distinguish(&s)? == f, || {
                    format!("f({}) differs after deleting its zeros", what())
                });
            }
            classes.entry((f, s.restrict(f))).or_default().push(s);
        }
        for ((f, c), members) in &classes {
            let meet = topes
                .iter()
                .any(|tope| members.iter().all(|q| q.below(tope)));
            t.check(meet, || {
                format!(
                    "class {} on {} has an empty realizer",
                    o.format_vector(c),
                    o.format_set(*f)
                )
            });
        }
    }
    Ok(())
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Uniform OMs have `2 Σ_{k<r} C(n-1, k)` topes; ample systems have as
/// many topes as shattered sets.
fn tope_count(ctx: &Ctx, t: &mut Tally) {
    let m = ctx.m;
    let c = m.classify();
    let n = m.ground().len();
    let r = ctx.vcd;
    let uniform = c.om
        && m.ground()
            .subsets_of_size(r)
            .iter()
            .all(|d| shattered_by(&ctx.topes, *d));
    if uniform {
        let want = 2 * (0..r).map(|k| binomial(n - 1, k)).sum::<usize>();
        t.check(ctx.topes.len() == want, || {
            format!("{} topes, the uniform count is {want}", ctx.topes.len())
        });
    }
    if c.ample && n <= 16 {
        let shattered = m
            .ground()
            .power_set()
            .filter(|d| shattered_by(&ctx.topes, *d))
            .count();
        t.check(ctx.topes.len() == shattered, || {
            format!("{} topes but {shattered} shattered sets", ctx.topes.len())
        });
    }
    if t.checks == 0 {
        t.skip("neither a uniform oriented matroid nor ample");
    }
}
