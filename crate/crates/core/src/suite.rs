//! The full verification campaign. Each criterion builds its own structures
//! and returns claims; criteria run in parallel and are reported in order.

use std::collections::BTreeSet;

use rand::Rng;
use rayon::prelude::*;

use crate::brace::{brace_from_truss, ideal_iff_normal_paragon, ideals, is_brace_ideal, socle, truss_from_brace};
use crate::catalog::{
    end_truss, group_ring, integer_paragon_probe, order_congruence_check, s3_left_brace, trunc_poly,
    trunc_poly_corpus, za_extension, za_power, za_power_iterated, za_truss, zn_ring, zn_truss,
};
use crate::check::CheckPolicy;
use crate::error::{AlgebraError, Result};
use crate::extension::{
    base_subtruss, ext_units, extend, fiber_paragon, ring_type_check, split_sequence_check, theta_iso,
};
use crate::groupid::{abelian_invariants, cyclic, d8_x_c2, identify, is_isomorphic, FiniteGroup};
use crate::heap::{AbGroup, Heap};
use crate::report::{Claim, Report, StructureSummary};
use crate::subset::Subset;
use crate::tmodule::{thm_cong_check, TModule};
use crate::truss::{find_truss_isomorphism, is_paragon, quotient_truss, units, units_paragon_report, ParagonKind, Truss};

/// Results for one acceptance criterion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Criterion {
    pub id: u8,
    pub title: &'static str,
    pub structures: Vec<StructureSummary>,
    pub claims: Vec<Claim>,
}

impl Criterion {
    fn new(id: u8, title: &'static str) -> Criterion {
        Criterion {
            id,
            title,
            structures: Vec::new(),
            claims: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        !self.claims.is_empty() && self.claims.iter().all(|c| c.passed)
    }

    fn structure(&mut self, name: impl Into<String>, kind: &str, order: usize, note: impl Into<String>) {
        self.structures.push(StructureSummary {
            name: name.into(),
            kind: kind.into(),
            order,
            note: note.into(),
        });
    }

    fn claim(&mut self, claim: Claim) {
        self.claims.push(claim);
    }

    /// Records a claim whose evaluation may error; errors fail the claim.
    fn attempt(&mut self, id: impl Into<String>, description: impl Into<String>, f: impl FnOnce() -> Result<Option<String>>) {
        let witness = match f() {
            Ok(w) => w,
            Err(e) => Some(format!("error: {e}")),
        };
        self.claims.push(Claim::from_witness(id, description, witness));
    }
}

type Runner = fn(&CheckPolicy) -> Criterion;

/// Criteria 1 to 11; criterion 12 compares two runs of these.
pub const CRITERIA: [Runner; 11] = [
    criterion_1,
    criterion_2,
    criterion_3,
    criterion_4,
    criterion_5,
    criterion_6,
    criterion_7,
    criterion_8,
    criterion_9,
    criterion_10,
    criterion_11,
];

fn members(s: &Subset) -> String {
    format!("{:?}", s.members())
}

fn labelled(t: &Truss, s: &Subset) -> String {
    let l: Vec<String> = s.members().iter().map(|&i| t.label(i)).collect();
    format!("{{{}}}", l.join(", "))
}

pub fn criterion_1(_policy: &CheckPolicy) -> Criterion {
    let mut c = Criterion::new(1, "units of Z_n form a paragon exactly when n is a power of two (n = 2..64)");
    let rows: Vec<(usize, Result<bool>)> = (2..=64usize)
        .into_par_iter()
        .map(|n| (n, units_paragon_report(&zn_truss(n)).map(|r| r.is_paragon)))
        .collect();
    let mut found = Vec::new();
    let mut witness = None;
    for (n, r) in rows {
        match r {
            Ok(p) => {
                if p {
                    found.push(n);
                }
                if p != n.is_power_of_two() && witness.is_none() {
                    witness = Some(format!("n={n}: paragon={p}"));
                }
            }
            Err(e) => {
                witness.get_or_insert(format!("n={n}: {e}"));
            }
        }
    }
    c.structure("T(Z_n), n=2..64", "truss", 64, "");
    c.claim(Claim::from_witness(
        "1.units-paragon",
        format!("U(Z_n) is a two-sided paragon for n in {found:?}, and only there"),
        witness,
    ));
    c
}

pub fn criterion_2(_policy: &CheckPolicy) -> Criterion {
    let mut c = Criterion::new(2, "U(Z4) = {1,3} is a paragon, shifts to the ideal {0,2}, and T(Z4)/U(Z4) = T(Z2)");
    let t = zn_truss(4);
    c.structure("T(Z4)", "truss", 4, "");
    let u = match units(&t) {
        Ok(u) => u,
        Err(e) => {
            c.claim(Claim::from_witness("2.units", "U(Z4) = {1,3}", Some(e.to_string())));
            return c;
        }
    };
    c.claim(Claim::from_witness(
        "2.units",
        "U(Z4) = {1,3}",
        (u.members() != [1, 3]).then(|| members(&u)),
    ));
    let kind = is_paragon(&t, &u).kind;
    c.claim(Claim::from_witness(
        "2.paragon",
        "{1,3} is a two-sided paragon and not an ideal",
        (kind != ParagonKind::TwoSided).then(|| format!("kind {kind:?}")),
    ));
    c.attempt("2.shift", "shifting {1,3} by e=1, x=0 gives {0,2}, an ideal", || {
        let s = TModule::regular(&t).shift_submodule(&u, 1, 0)?;
        let kind = is_paragon(&t, &s).kind;
        Ok((s.members() != [0, 2] || kind != ParagonKind::Ideal).then(|| format!("{} of kind {kind:?}", members(&s))))
    });
    c.attempt("2.quotient", "T(Z4)/U(Z4) is isomorphic to T(Z2)", || {
        let q = quotient_truss(&t, &u)?;
        Ok(match find_truss_isomorphism(&q.truss, &zn_truss(2))? {
            Some(_) => None,
            None => Some(format!("quotient of order {} is not T(Z2)", q.truss.order())),
        })
    });
    c
}

/// `(paragon and T/U = T(Z2)) == (every r has r or 1 - r a unit)` on each truss.
fn thm_z2_scan(corpus: Vec<(String, Result<Truss>)>) -> (usize, Option<String>) {
    let rows: Vec<(String, Result<(bool, bool, bool)>)> = corpus
        .into_par_iter()
        .map(|(name, t)| {
            let r = t.and_then(|t| units_paragon_report(&t));
            (name, r.map(|r| (r.is_paragon && r.quotient_is_z2, r.thm_z2_predicate, r.thm_z2_consistent)))
        })
        .collect();
    let count = rows.len();
    let witness = rows.into_iter().find_map(|(name, r)| match r {
        Ok((lhs, rhs, consistent)) => {
            (lhs != rhs || !consistent).then(|| format!("{name}: paragon with Z2 quotient = {lhs}, predicate = {rhs}"))
        }
        Err(e) => Some(format!("{name}: {e}")),
    });
    (count, witness)
}

pub fn criterion_3(_policy: &CheckPolicy) -> Criterion {
    let mut c = Criterion::new(3, "units are a paragon with quotient T(Z2) iff r or 1-r is a unit for every r");
    let zn: Vec<(String, Result<Truss>)> = (2..=64usize).map(|n| (format!("Z{n}"), Ok(zn_truss(n)))).collect();
    let (count, witness) = thm_z2_scan(zn);
    c.structure("T(Z_n), n=2..64", "truss", 64, "");
    c.claim(Claim::from_witness(
        "3.zn",
        format!("equivalence holds on all {count} rings Z_n"),
        witness,
    ));
    let polys: Vec<(String, Result<Truss>)> = trunc_poly_corpus()
        .into_iter()
        .map(|(k, n)| (format!("Z{}[x]/(x^{n})", 1u64 << k), trunc_poly(k, n).map(|p| p.ring.into_truss())))
        .collect();
    let (count, witness) = thm_z2_scan(polys);
    c.structure("Z_{2^k}[x]/(x^n), 2^{kn} <= 256", "truss", 256, "");
    c.claim(Claim::from_witness(
        "3.trunc-poly",
        format!("equivalence holds on all {count} truncated polynomial rings"),
        witness,
    ));
    c
}

pub fn criterion_4(_policy: &CheckPolicy) -> Criterion {
    let mut c = Criterion::new(4, "the closed-form inverse of a unit of Z_{2^k}[x]/(x^n) multiplies back to 1");
    let rows: Vec<Result<(String, usize, usize, Option<String>, Option<String>)>> = trunc_poly_corpus()
        .into_par_iter()
        .map(|(k, n)| {
            let tp = trunc_poly(k, n)?;
            let name = format!("Z{}[x]/(x^{n})", 1u64 << k);
            let one = tp.ring.one().ok_or(AlgebraError::NoIdentity)?;
            let us = units(tp.ring.truss())?;
            let (mut formula_bad, mut first_formula, mut first_series) = (0, None, None);
            for &p in us.members() {
                let label = tp.ring.additive().label(p);
                match tp.formula_inverse(p) {
                    Some(f) if tp.ring.mul(f, p) == one => {}
                    Some(f) => {
                        formula_bad += 1;
                        first_formula.get_or_insert_with(|| {
                            let prod = tp.ring.mul(f, p);
                            format!(
                                "{name}: p = {label}, formula gives {}, product {}",
                                tp.ring.additive().label(f),
                                tp.ring.additive().label(prod)
                            )
                        });
                    }
                    None => {
                        formula_bad += 1;
                        first_formula.get_or_insert_with(|| format!("{name}: unit {label} rejected"));
                    }
                }
                match tp.series_inverse(p) {
                    Some(f) if tp.ring.mul(f, p) == one && tp.ring.mul(p, f) == one => {}
                    _ => {
                        first_series.get_or_insert_with(|| format!("{name}: p = {label}"));
                    }
                }
            }
            Ok((name, us.len(), formula_bad, first_formula, first_series))
        })
        .collect();
    let (mut total, mut bad, mut wf, mut ws, mut failing) = (0, 0, None, None, Vec::new());
    for r in rows {
        match r {
            Ok((name, u, b, f, s)) => {
                total += u;
                bad += b;
                if b > 0 {
                    failing.push(name);
                }
                wf = wf.or(f);
                ws = ws.or(s);
            }
            Err(e) => {
                wf.get_or_insert(e.to_string());
            }
        }
    }
    c.structure("Z_{2^k}[x]/(x^n), 2^{kn} <= 256", "truss", 256, "");
    let witness = wf.map(|w| format!("{bad} of {total} units fail, in {}; first: {w}", failing.join(", ")));
    c.claim(Claim::from_witness(
        "4.inv-pol",
        format!("a^-1 - a^-2 (q + ... + q^(n-1)) inverts each of the {total} units"),
        witness,
    ));
    c.claim(Claim::from_witness(
        "4.series",
        format!("the alternating series sum (-1)^i a^-(i+1) q^i inverts each of the {total} units"),
        ws,
    ));
    c
}

pub fn criterion_5(_policy: &CheckPolicy) -> Criterion {
    let mut c = Criterion::new(5, "Z^(2)/2^(k+1)Z is brace-type with units C2 x C_{2^k}; the power formula holds");
    for k in 1..=4u32 {
        let modulus = 1usize << (k + 1);
        let t = za_truss(2, modulus);
        c.structure(format!("Z^(2)/{modulus}Z"), "truss", modulus, "");
        c.attempt(
            format!("5.k={k}"),
            format!("Z^(2)/{modulus}Z is brace-type, U has invariants [2, {}], 1 has order {}", 1 << k, 1 << k),
            || {
                let b = brace_from_truss(&t)?;
                let g = b.multiplicative();
                let inv = abelian_invariants(g)?;
                let ord = g.element_order(1);
                Ok((inv != [2, 1 << k] || ord != 1 << k).then(|| format!("invariants {inv:?}, order of 1 = {ord}")))
            },
        );
    }
    c.attempt("5.order-congruence", "m^(.2^k) = 0 mod 2^(k+1) for k <= 4, |m| <= 20", || {
        let r = order_congruence_check(4, 20)?;
        Ok((!r.congruence_holds || !r.one_order_maximal).then(|| format!("{:?} / {:?}", r.witness, r.one_orders)))
    });
    let mut witness = None;
    'outer: for a in 1..=4u64 {
        for m in -20..=20i64 {
            for k in 0..=12u32 {
                if za_power(a, m, k) != za_power_iterated(a, m, k) {
                    witness = Some(format!("a={a}, m={m}, k={k}"));
                    break 'outer;
                }
            }
        }
    }
    c.claim(Claim::from_witness(
        "5.power",
        "((am+1)^k - 1)/a equals the iterated product for a <= 4, |m| <= 20, k <= 12",
        witness,
    ));
    c
}

pub fn criterion_6(_policy: &CheckPolicy) -> Criterion {
    let mut c = Criterion::new(6, "Z^(2)/4Z[Z^(2)/4Z; 0] is an order-16 brace with units D8 x C2 and additive C4 x C4");
    let ext = za_extension();
    let t = ext.truss();
    c.structure("Z^(2)/4Z[Z^(2)/4Z;0]", "extension", t.order(), "");
    c.claim(Claim::from_witness(
        "6.order",
        "the extension has order 16",
        (t.order() != 16).then(|| t.order().to_string()),
    ));
    c.attempt("6.units", "every element is a unit", || {
        let u = units(t)?;
        Ok((u.len() != t.order()).then(|| format!("{} units", u.len())))
    });
    c.attempt("6.d8xc2", "the unit group is isomorphic to D8 x C2", || {
        let b = brace_from_truss(t)?;
        let id = identify(b.multiplicative())?;
        Ok(match is_isomorphic(b.multiplicative(), &d8_x_c2())? {
            Some(_) => None,
            None => Some(format!("identified as {:?}", id.named_match)),
        })
    });
    c.attempt("6.additive", "the additive retract at the identity has invariants [4, 4]", || {
        let one = t.identity().ok_or(AlgebraError::NoIdentity)?;
        let inv = abelian_invariants(&FiniteGroup::from_abelian(&t.heap().retract(one)?))?;
        Ok((inv != [4, 4]).then(|| format!("{inv:?}")))
    });
    c.attempt(
        "6.relations",
        "a=(0,1), x=(1,0), y=(2,0) satisfy a^4=x^2=y^2=1, xax=a^3, xy=yx, ay=ya",
        || {
            let one = t.identity().ok_or(AlgebraError::NoIdentity)?;
            let m = |p: usize, q: usize| t.mul(p, q);
            let (a, x, y) = (ext.pair(0, 1), ext.pair(1, 0), ext.pair(2, 0));
            let a2 = m(a, a);
            let a3 = m(a2, a);
            let checks = [
                ("a^4", m(a3, a) == one),
                ("x^2", m(x, x) == one),
                ("y^2", m(y, y) == one),
                ("xax", m(m(x, a), x) == a3),
                ("xy", m(x, y) == m(y, x)),
                ("ay", m(a, y) == m(y, a)),
            ];
            let bad: Vec<&str> = checks.iter().filter(|(_, ok)| !ok).map(|(n, _)| *n).collect();
            Ok((!bad.is_empty()).then(|| format!("fails: {}", bad.join(", "))))
        },
    );
    c
}

/// One `(base, module, anchor)` instance for the extension clause suite.
pub struct ExtInstance {
    pub name: String,
    pub module: TModule,
    pub anchor: usize,
}

pub fn extension_corpus() -> Result<Vec<ExtInstance>> {
    let inst = |name: &str, module: TModule, anchor: usize| ExtInstance {
        name: name.into(),
        module,
        anchor,
    };
    let z2 = zn_truss(2);
    let z4 = zn_truss(4);
    let reduction = TModule::new(z4.clone(), Heap::cyclic(2), (0..8).map(|i| (i / 2) * (i % 2) % 2).collect())?;
    let end2 = end_truss(&AbGroup::cyclic(2))?;
    let end3 = end_truss(&AbGroup::cyclic(3))?;
    let s3 = truss_from_brace(&s3_left_brace())?;
    Ok(vec![
        inst("T(Z2)[Z2;0]", TModule::regular(&z2), 0),
        inst("T(Z2)[Z2;1]", TModule::regular(&z2), 1),
        inst("T(Z2)[{e};e]", TModule::trivial(&z2, Heap::cyclic(1))?, 0),
        inst("T(Z2)[Z2xZ2 trivial;0]", TModule::trivial(&z2, Heap::from_group(AbGroup::cyclic_product(&[2, 2])))?, 0),
        inst("T(Z3)[Z3;0]", TModule::regular(&zn_truss(3)), 0),
        inst("T(Z4)[Z4;1]", TModule::regular(&z4), 1),
        inst("T(Z4)[Z2 by reduction;0]", reduction, 0),
        inst("Z^(2)/4Z[Z^(2)/4Z;0]", TModule::regular(&za_truss(2, 4)), 0),
        inst("Z^(2)/8Z[Z^(2)/8Z;3]", TModule::regular(&za_truss(2, 8)), 3),
        inst("T(End Z2)[Z2;0]", end2.module, 0),
        inst("T(End Z3)[Z3;0]", end3.module, 0),
        inst("T(S3 left brace)[regular;0]", TModule::regular(&s3), 0),
    ])
}

/// Names of the structural clauses checked on every extension.
pub const EXTENSION_CLAUSES: [&str; 6] = ["theta", "fibers", "base-copy", "split", "units", "ring-type"];

/// Runs every structural clause on `T[M;e]`: one entry per name in
/// [`EXTENSION_CLAUSES`], holding the failures of that clause if any.
pub fn extension_clauses(module: &TModule, e: usize) -> Result<Vec<(&'static str, Option<String>)>> {
    let ext = extend(module, e)?;
    let sided = ext.base().sided();
    let (n, m) = (ext.base().order(), module.order());
    let join = |v: Vec<String>| (!v.is_empty()).then(|| v.join("; "));
    let theta = (0..m)
        .filter_map(|e2| theta_iso(&ext, e2).err().map(|err| format!("anchor {e2}: {err}")))
        .collect();
    let mut fibers = Vec::new();
    for a in 0..n {
        let r = fiber_paragon(&ext, a)?;
        if !r.passed(sided) {
            fibers.push(format!("{r:?}"));
        }
    }
    let r = base_subtruss(&ext)?;
    let base_copy = (!r.passed()).then(|| format!("{r:?}"));
    let mut split = Vec::new();
    for a in 0..n {
        let r = split_sequence_check(&ext, a)?;
        if !r.passed() {
            split.push(format!("{r:?}"));
        }
    }
    let unital = ext.base().identity().is_some() && module.is_unital();
    let units = match ext_units(&ext) {
        Ok(r) if r.passed() => None,
        Ok(r) => Some(format!("{r:?}")),
        Err(AlgebraError::NotUnital) if !unital && ext.truss().identity().is_none() => None,
        Err(err) => Some(err.to_string()),
    };
    let r = ring_type_check(&ext);
    let ring_type = (!r.passed()).then(|| format!("{r:?}"));
    Ok(EXTENSION_CLAUSES
        .into_iter()
        .zip([join(theta), join(fibers), base_copy, join(split), units, ring_type])
        .collect())
}

pub fn criterion_7(_policy: &CheckPolicy) -> Criterion {
    let mut c = Criterion::new(7, "every clause on T[M;e] holds across the extension corpus");
    let corpus = match extension_corpus() {
        Ok(v) => v,
        Err(e) => {
            c.claim(Claim::from_witness("7.corpus", "extension corpus builds", Some(e.to_string())));
            return c;
        }
    };
    let big = corpus
        .iter()
        .find(|i| i.module.truss().order() * i.module.order() > 64)
        .map(|i| i.name.clone());
    c.claim(Claim::from_witness(
        "7.corpus",
        format!("{} instances, each of product order <= 64", corpus.len()),
        big.or_else(|| (corpus.len() < 6).then(|| "fewer than 6 instances".into())),
    ));
    let rows: Vec<(String, usize, Result<Vec<(&str, Option<String>)>>)> = corpus
        .par_iter()
        .map(|i| {
            let order = i.module.truss().order() * i.module.order();
            (i.name.clone(), order, extension_clauses(&i.module, i.anchor))
        })
        .collect();
    for (name, order, r) in rows {
        c.structure(name.clone(), "extension", order, "");
        let witness = match r {
            Ok(f) => {
                let bad: Vec<String> = f.into_iter().filter_map(|(k, w)| w.map(|w| format!("{k}: {w}"))).collect();
                (!bad.is_empty()).then(|| bad.join("; "))
            }
            Err(e) => Some(format!("error: {e}")),
        };
        c.claim(Claim::from_witness(
            format!("7.{name}"),
            "theta for every anchor, fiber paragons, base copy, split sequence, units, ring type",
            witness,
        ));
    }
    c
}

pub fn congruence_corpus() -> Result<Vec<(String, TModule)>> {
    let z2 = zn_truss(2);
    let z2c2 = group_ring(&zn_ring(2), &cyclic(2))?.ring.into_truss();
    Ok(vec![
        ("T(Z2) regular".into(), TModule::regular(&z2)),
        ("T(Z4) regular".into(), TModule::regular(&zn_truss(4))),
        ("Z2C2 regular".into(), TModule::regular(&z2c2)),
        ("Z^(2)/4Z regular".into(), TModule::regular(&za_truss(2, 4))),
        ("T(Z2) on Z1 trivial".into(), TModule::trivial(&z2, Heap::cyclic(1))?),
        (
            "T(Z2) on Z2xZ2 trivial".into(),
            TModule::trivial(&z2, Heap::from_group(AbGroup::cyclic_product(&[2, 2])))?,
        ),
        ("T(Z4) on Z3 trivial".into(), TModule::trivial(&zn_truss(4), Heap::cyclic(3))?),
        ("T(Z3) on Z8 trivial".into(), TModule::trivial(&zn_truss(3), Heap::cyclic(8))?),
        (
            "T(Z2) on Z2xZ2xZ2 trivial".into(),
            TModule::trivial(&z2, Heap::from_group(AbGroup::cyclic_product(&[2, 2, 2])))?,
        ),
    ])
}

pub fn criterion_8(_policy: &CheckPolicy) -> Criterion {
    let mut c = Criterion::new(8, "congruence classes coincide with induced submodules (modules of order <= 8)");
    let corpus = match congruence_corpus() {
        Ok(v) => v,
        Err(e) => {
            c.claim(Claim::from_witness("8.corpus", "module corpus builds", Some(e.to_string())));
            return c;
        }
    };
    let rows: Vec<_> = corpus
        .par_iter()
        .map(|(name, m)| (name.clone(), m.order(), thm_cong_check(m)))
        .collect();
    for (name, order, r) in rows {
        c.structure(name.clone(), "tmodule", order, "");
        match r {
            Ok(r) => c.claim(Claim::from_witness(
                format!("8.{name}"),
                format!(
                    "{} classes over {} congruences = {} induced submodules",
                    r.classes.len(),
                    r.congruences,
                    r.induced_submodules.len()
                ),
                (!r.passed()).then(|| format!("{:?}", r.witness)),
            )),
            Err(e) => c.claim(Claim::from_witness(format!("8.{name}"), "thm_cong check", Some(e.to_string()))),
        }
    }
    c
}

pub fn criterion_9(_policy: &CheckPolicy) -> Criterion {
    let mut c = Criterion::new(9, "augmentation fibres A_r of Z2C2 and Z3C2 are paragons with quotient T(R)");
    for (name, q) in [("Z2C2", 2usize), ("Z3C2", 3)] {
        let r = zn_ring(q);
        let gr = match group_ring(&r, &cyclic(2)) {
            Ok(g) => g,
            Err(e) => {
                c.claim(Claim::from_witness(format!("9.{name}"), "group ring builds", Some(e.to_string())));
                continue;
            }
        };
        c.structure(format!("T({name})"), "truss", gr.ring.order(), "");
        match crate::catalog::augmentation_fibers(&gr) {
            Ok(fibers) => {
                for f in fibers {
                    let t = gr.ring.truss();
                    let set = Subset::new(t.order(), f.members.iter().copied()).expect("in range");
                    c.claim(Claim::from_witness(
                        format!("9.{name}.A{}", f.r),
                        format!(
                            "A_{} = {} is a paragon; sub-truss ({}) iff idempotent ({}); quotient is T(Z{q})",
                            f.r,
                            labelled(t, &set),
                            f.subtruss,
                            f.idempotent
                        ),
                        (!f.passed()).then(|| format!("{f:?}")),
                    ));
                }
            }
            Err(e) => c.claim(Claim::from_witness(format!("9.{name}"), "fibres", Some(e.to_string()))),
        }
    }
    c
}

/// Subsets examined at order above 8: every singleton, every additive coset
/// of every multiplicative subgroup, and `samples` uniformly random subsets.
pub fn sampled_subsets(n: usize, b: &crate::brace::Brace, policy: &CheckPolicy) -> Vec<Subset> {
    let mut bits: BTreeSet<u64> = BTreeSet::new();
    let to_bits = |s: &Subset| s.members().iter().fold(0u64, |acc, &i| acc | 1 << i);
    for i in 0..n {
        bits.insert(1 << i);
    }
    for h in b.multiplicative().subgroups() {
        for x in 0..n {
            bits.insert(to_bits(&b.additive_coset(x, &h)));
        }
    }
    let mut rng = policy.rng();
    let full = if n >= 64 { u64::MAX } else { (1u64 << n) - 1 };
    for _ in 0..policy.samples {
        bits.insert(rng.gen_range(1..=full));
    }
    bits.into_iter().map(|x| Subset::from_bits(n, x)).collect()
}

pub fn criterion_10(policy: &CheckPolicy) -> Criterion {
    let mut c = Criterion::new(10, "socle is an ideal, socle cosets are paragons, ideals and classes are normal paragons");
    let cases = [("Z^(2)/4Z", za_truss(2, 4)), ("order-16 extension", za_extension().truss().clone())];
    for (name, truss) in cases {
        let (b, tb) = match brace_from_truss(&truss).and_then(|b| truss_from_brace(&b).map(|t| (b, t))) {
            Ok(x) => x,
            Err(e) => {
                c.claim(Claim::from_witness(format!("10.{name}"), "brace builds", Some(e.to_string())));
                continue;
            }
        };
        let n = b.order();
        let soc = socle(&b);
        c.structure(format!("B({name})"), "brace", n, format!("Soc = {}", labelled(&tb, &soc)));
        c.claim(Claim::from_witness(
            format!("10.{name}.socle-ideal"),
            format!("Soc(B) = {} is an ideal", labelled(&tb, &soc)),
            (!is_brace_ideal(&b, &soc)).then(|| members(&soc)),
        ));
        let bad_coset = (0..n)
            .map(|x| b.additive_coset(x, &soc))
            .find(|s| !is_paragon(&tb, s).kind.is_two_sided());
        c.claim(Claim::from_witness(
            format!("10.{name}.socle-cosets"),
            "every coset c + Soc(B) is a paragon of T(B)",
            bad_coset.map(|s| members(&s)),
        ));
        let ids = ideals(&b);
        let (subsets, scope) = if n <= 8 {
            ((1u64..1 << n).map(|x| Subset::from_bits(n, x)).collect::<Vec<_>>(), "all")
        } else {
            (sampled_subsets(n, &b, policy), "sampled")
        };
        let reports: Vec<_> = subsets
            .par_iter()
            .map(|s| ideal_iff_normal_paragon(&b, &tb, &ids, s))
            .collect();
        let count = reports.len();
        let first1 = reports.iter().find(|r| !r.ideal_equivalence());
        let bad2: Vec<_> = reports.iter().filter(|r| !r.quotient_equivalence()).collect();
        c.claim(Claim::from_witness(
            format!("10.{name}.brace1"),
            format!("S ideal iff S normal paragon containing 1, on {scope} {count} subsets"),
            first1.map(|r| {
                format!(
                    "S = {:?}: ideal = {}, normal paragon = {}, contains 1 = {}",
                    r.members, r.is_ideal, r.normal_paragon, r.contains_one
                )
            }),
        ));
        c.claim(Claim::from_witness(
            format!("10.{name}.brace2"),
            format!("S a class of some B/I iff S normal paragon, on {scope} {count} subsets"),
            bad2.first().map(|r| {
                format!(
                    "{} subsets disagree; first S = {:?}: class of B/I for I = {:?}, normal paragon = {}",
                    bad2.len(),
                    r.members,
                    r.quotient_class_of,
                    r.normal_paragon
                )
            }),
        ));
    }
    c
}

pub fn criterion_11(policy: &CheckPolicy) -> Criterion {
    let mut c = Criterion::new(11, "(nZ)_0^m is a paragon of T(Z) and T(Z)/(nZ)_0^m = T(Z/nZ), sampled on |x| <= 1000");
    let cases: Vec<(u64, i64)> = (1..=6u64).flat_map(|n| (0..n as i64).map(move |m| (n, m))).collect();
    let rows: Vec<_> = cases
        .par_iter()
        .map(|&(n, m)| {
            let p = CheckPolicy::with_seed(policy.seed.wrapping_add(n * 16 + m as u64), policy.samples);
            ((n, m), integer_paragon_probe(n, m, 1000, &p))
        })
        .collect();
    for n in 1..=6u64 {
        let mut witness = None;
        for ((k, m), r) in rows.iter().filter(|((k, _), _)| *k == n) {
            match r {
                Ok(r) if r.passed() => {}
                Ok(r) => {
                    witness.get_or_insert(format!("n={k}, m={m}: {:?}", r.witness));
                }
                Err(e) => {
                    witness.get_or_insert(format!("n={k}, m={m}: {e}"));
                }
            }
        }
        c.claim(Claim::from_witness(
            format!("11.n={n}"),
            format!("closures and residue isomorphism hold for every m < {n}"),
            witness,
        ));
    }
    c
}

/// Runs criteria 1 to 11 in parallel; results come back in order.
pub fn run_criteria(policy: &CheckPolicy) -> Vec<Criterion> {
    CRITERIA.par_iter().map(|f| f(policy)).collect()
}

pub fn run_full_suite(policy: &CheckPolicy) -> Report {
    let mut report = Report::new("suite", policy);
    for c in run_criteria(policy) {
        report.structures.extend(c.structures);
        report.claims.extend(c.claims);
    }
    report
}

/// Two full runs with the same seed must render byte-identical reports.
pub fn criterion_12(policy: &CheckPolicy) -> Criterion {
    let mut c = Criterion::new(12, "two runs of the full suite with one seed give byte-identical reports");
    let (a, b) = rayon::join(|| run_full_suite(policy).to_json(), || run_full_suite(policy).to_json());
    let witness = (a != b).then(|| {
        let at = a.bytes().zip(b.bytes()).position(|(x, y)| x != y).unwrap_or(a.len().min(b.len()));
        format!("reports differ at byte {at}")
    });
    c.claim(Claim::from_witness(
        "12.determinism",
        format!("{} bytes of JSON identical across two runs", a.len()),
        witness,
    ));
    c
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_criteria_pass() {
        let p = CheckPolicy::with_seed(0, 200);
        for c in [criterion_2(&p), criterion_6(&p), criterion_9(&p)] {
            assert!(c.passed(), "{:?}", c.claims);
        }
    }
}
