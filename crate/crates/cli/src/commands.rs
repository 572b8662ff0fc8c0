//! One function per subcommand. Each fills in the report; the caller
//! renders it and derives the exit code from the claims.

use std::fs;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use rayon::prelude::*;
use serde_json::{json, Value};
use truss_core::brace::{
    brace_from_truss, ideal_iff_normal_paragon, ideals, is_brace_ideal, socle, truss_from_brace, Brace,
};
use truss_core::catalog::{end_truss, group_ring, trunc_poly, za_extension, za_truss, zn_ring, zn_truss, augmentation_fibers};
use truss_core::check::CheckPolicy;
use truss_core::extension::extend_with;
use truss_core::groupid::{abelian_invariants, abelian_name, cyclic, group_from_units, identify as identify_group, FiniteGroup};
use truss_core::json::{brace_doc, ext_doc, heap_doc, module_doc, parse_document, parse_structure, to_pretty, truss_doc, Structure};
use truss_core::report::{Claim, Report};
use truss_core::suite::{criterion_12, extension_clauses, run_criteria, sampled_subsets};
use truss_core::tmodule::{module_morphism_violation, TModule};
use truss_core::truss::{
    find_truss_isomorphism, is_paragon, quotient_truss, truss_morphism_violation, units_paragon_report, Truss,
};
use truss_core::{AbGroup, Subset};

use crate::subset;

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load(path: &Path, policy: &CheckPolicy) -> Result<Structure> {
    parse_structure(&read(path)?, policy).map_err(|e| anyhow!("{}: {e}", path.display()))
}

fn file_name(path: &Path) -> String {
    path.file_name().map_or_else(|| path.display().to_string(), |s| s.to_string_lossy().into_owned())
}

/// Adds `value` to the report output and, if asked, writes it to `out`.
fn emit(report: &mut Report, value: Value, out: Option<&Path>) -> Result<()> {
    if let Some(path) = out {
        fs::write(path, to_pretty(&value)).with_context(|| format!("writing {}", path.display()))?;
    }
    report.output.push(value);
    Ok(())
}

fn truss_note(t: &Truss) -> String {
    let el = |x: Option<usize>| x.map_or_else(|| "none".into(), |i| t.label(i));
    format!("{}, identity {}, absorber {}", t.sided(), el(t.identity()), el(t.absorber()))
}

fn labelled(label: &dyn Fn(usize) -> String, s: &Subset) -> String {
    let l: Vec<String> = s.members().iter().map(|&i| label(i)).collect();
    format!("{{{}}}", l.join(", "))
}

/// Names a truss by comparison with `T(Z_k)` of the same order.
fn ring_name(t: &Truss) -> Result<Option<String>> {
    let k = t.order();
    Ok(find_truss_isomorphism(t, &zn_truss(k))?.map(|_| format!("T(Z{k})")))
}

pub fn validate(report: &mut Report, policy: &CheckPolicy, file: &Path) -> Result<()> {
    let text = read(file)?;
    let doc = parse_document(&text).map_err(|e| anyhow!("{}: {e}", file.display()))?;
    for r in doc.validate(policy)? {
        let id = format!("laws.{}", r.structure.replace(' ', "-"));
        report.laws(id, r);
    }
    if !report.passed() {
        report.structure(file_name(file), doc.kind(), 0, "invalid");
        return Ok(());
    }
    match doc.build(policy) {
        Ok(s) => {
            let note = match &s {
                Structure::Truss(t) => truss_note(t),
                Structure::Extension(x) => {
                    report.claim(Claim::new(
                        "extension-block",
                        format!("tables equal T[M;e] rebuilt from the extension block (anchor {})", x.anchor()),
                        true,
                    ));
                    truss_note(x.truss())
                }
                Structure::Module(m) => format!("over a truss of order {}, unital {}", m.truss().order(), m.is_unital()),
                Structure::Brace(b) => format!("{} brace", b.sided()),
                _ => String::new(),
            };
            report.structure(file_name(file), s.kind(), s.order(), note);
        }
        Err(e) => report.claim(Claim::from_witness("build", "structure builds from the document", Some(e.to_string()))),
    }
    Ok(())
}

pub fn scan_units(report: &mut Report, n_max: usize) -> Result<()> {
    if !(2..=64).contains(&n_max) {
        bail!("n_max must lie in 2..=64, got {n_max}");
    }
    report.structure(format!("T(Z_n), n=2..{n_max}"), "truss", n_max, "");
    let rows: Vec<_> = (2..=n_max)
        .into_par_iter()
        .map(|n| (n, units_paragon_report(&zn_truss(n))))
        .collect();
    for (n, r) in rows {
        let r = r?;
        let expected = n.is_power_of_two();
        let quotient = match r.quotient_order {
            Some(k) if r.quotient_is_z2 => format!("T/U = T(Z2) on {k} classes"),
            Some(k) => format!("T/U has {k} classes"),
            None => "no quotient".into(),
        };
        let description = format!(
            "|U| = {}, paragon = {} (expected {expected}), {quotient}, r or 1-r unit for all r = {}, equivalence consistent = {}",
            r.units.len(),
            r.is_paragon,
            r.thm_z2_predicate,
            r.thm_z2_consistent
        );
        let ok = r.is_paragon == expected;
        report.claim(Claim::new(format!("n={n}"), description, ok));
    }
    Ok(())
}

pub fn extend(
    report: &mut Report,
    policy: &CheckPolicy,
    base: &Path,
    module: &str,
    e: &str,
    out: Option<&Path>,
) -> Result<()> {
    let base_s = load(base, policy)?;
    let t = base_s
        .as_truss()
        .ok_or_else(|| anyhow!("{}: expected a truss, found {}", base.display(), base_s.kind()))?
        .clone();
    let m = if module == "regular" {
        TModule::regular(&t)
    } else {
        match load(Path::new(module), policy)? {
            Structure::Module(m) => m,
            other => bail!("{module}: expected a tmodule, found {}", other.kind()),
        }
    };
    if m.truss() != &t {
        bail!("the module is over a different truss than {}", base.display());
    }
    let e = subset::element(e, m.order(), &|i| m.heap().label(i))?;
    let ext = extend_with(&m, e, policy)?;
    report.structure("T", "truss", t.order(), truss_note(&t));
    report.structure("M", "tmodule", m.order(), format!("unital {}", m.is_unital()));
    report.structure(format!("T[M;{}]", m.heap().label(e)), "extension", ext.order(), truss_note(ext.truss()));
    for (clause, witness) in extension_clauses(&m, e)? {
        let description = match clause {
            "theta" => "(t,x) -> (t,[x,e,e']) is an isomorphism onto T[M;e'] for every anchor e'",
            "fibers" => "each fibre {a} x M is a paragon, an ideal iff a is an absorber, with quotient T",
            "base-copy" => "T x {e} is a sub-truss and left paragon with quotient M",
            "split" => "M -> T[M;e] -> T splits by t -> (t,e) with the right kernel",
            "units" => "U(T[M;e]) = U(T) x M with the stated inverses (when unital)",
            "ring-type" => "an absorber exists iff M = {e} and T is ring-type",
            other => other,
        };
        report.claim(Claim::from_witness(clause, description, witness));
    }
    emit(report, serde_json::to_value(ext_doc(&ext))?, out)?;
    if ext.truss().identity().is_some() && brace_from_truss(ext.truss()).is_ok() {
        let b = brace_from_truss(ext.truss())?;
        let id = identify_group(b.multiplicative())?;
        let add = abelian_name(&abelian_invariants(&FiniteGroup::from_abelian(b.additive()))?);
        let mul = id.named_match.clone().unwrap_or_else(|| "unnamed".into());
        report.structure("B(T[M;e])", "brace", b.order(), format!("multiplicative {mul}, additive {add}"));
        report.claim(Claim::new("brace", "the extension is brace-type", true));
        report.output.push(serde_json::to_value(brace_doc(&b))?);
        report.output.push(json!({ "fingerprint": id.fingerprint, "named_match": id.named_match, "additive": add }));
    }
    Ok(())
}

pub fn quotient(report: &mut Report, policy: &CheckPolicy, file: &Path, spec: &str, out: Option<&Path>) -> Result<()> {
    let s = load(file, policy)?;
    let label = |i: usize| s.label(i);
    let sub = subset::parse(spec, s.order(), &label)?;
    let shown = labelled(&label, &sub);
    match &s {
        Structure::Truss(_) | Structure::Extension(_) => {
            let t = s.as_truss().expect("truss");
            report.structure(file_name(file), s.kind(), t.order(), truss_note(t));
            let check = is_paragon(t, &sub);
            report.claim(Claim::from_witness(
                "paragon",
                format!("{shown} is a two-sided paragon ({:?})", check.kind),
                (!check.kind.is_two_sided()).then(|| format!("{:?}", check.violation)),
            ));
            if !check.kind.is_two_sided() {
                return Ok(());
            }
            let q = quotient_truss(t, &sub)?;
            report.claim(Claim::from_witness(
                "projection",
                "the projection onto the classes is a truss epimorphism",
                truss_morphism_violation(t, &q.truss, q.projection()),
            ));
            let classes: Vec<String> = q.classes.classes().iter().map(|c| labelled(&label, c)).collect();
            let name = ring_name(&q.truss)?;
            let note = match &name {
                Some(n) => format!("isomorphic to {n}; classes {}", classes.join(" ")),
                None => format!("classes {}", classes.join(" ")),
            };
            report.structure("quotient", "truss", q.truss.order(), note);
            emit(report, serde_json::to_value(truss_doc(&q.truss))?, out)?;
        }
        Structure::Module(m) => {
            report.structure(file_name(file), "tmodule", m.order(), "");
            let violation = m.induced_submodule_violation(&sub);
            report.claim(Claim::from_witness(
                "induced-submodule",
                format!("{shown} is an induced submodule"),
                violation.as_ref().map(|v| format!("{v:?}")),
            ));
            if violation.is_some() {
                return Ok(());
            }
            let q = m.quotient(&sub)?;
            report.claim(Claim::from_witness(
                "projection",
                "the projection onto the classes is a module epimorphism",
                module_morphism_violation(m, &q.module, q.projection()),
            ));
            report.structure("quotient", "tmodule", q.module.order(), "");
            emit(report, serde_json::to_value(module_doc(&q.module))?, out)?;
        }
        Structure::Heap(_) | Structure::AbGroup(_) => {
            let h = match &s {
                Structure::Heap(h) => h.clone(),
                Structure::AbGroup(g) => truss_core::Heap::from_group(g.clone()),
                _ => unreachable!(),
            };
            report.structure(file_name(file), "heap", h.order(), "");
            let violation = h.subheap_violation(&sub);
            report.claim(Claim::from_witness(
                "sub-heap",
                format!("{shown} is a sub-heap"),
                violation.map(|(a, b, c)| format!("[{a},{b},{c}] leaves it")),
            ));
            if violation.is_some() {
                return Ok(());
            }
            let q = h.quotient(&sub)?;
            report.claim(Claim::from_witness(
                "projection",
                "the projection onto the classes is a heap morphism",
                h.morphism_violation(&q.heap, q.projection()).map(|w| format!("{w:?}")),
            ));
            report.structure("quotient", "heap", q.heap.order(), "");
            emit(report, serde_json::to_value(heap_doc(&q.heap))?, out)?;
        }
        other => bail!("cannot take a quotient of a {}", other.kind()),
    }
    Ok(())
}

/// Exhaustive subset checks up to this order, sampled above.
const BRACE_EXHAUSTIVE: usize = 16;

pub fn brace(report: &mut Report, policy: &CheckPolicy, file: &Path, out: Option<&Path>) -> Result<()> {
    let s = load(file, policy)?;
    let b: Brace = match &s {
        Structure::Brace(b) => b.clone(),
        other => match other.as_truss() {
            Some(t) => brace_from_truss(t)?,
            None => bail!("{}: expected a brace or a brace-type truss, found {}", file.display(), other.kind()),
        },
    };
    let tb = truss_from_brace(&b)?;
    let n = b.order();
    let label = |i: usize| b.label(i);
    let id = identify_group(b.multiplicative())?;
    let add = abelian_name(&abelian_invariants(&FiniteGroup::from_abelian(b.additive()))?);
    let soc = socle(&b);
    let ids = ideals(&b);
    report.structure(
        file_name(file),
        "brace",
        n,
        format!(
            "{}, multiplicative {}, additive {add}",
            b.sided(),
            id.named_match.clone().unwrap_or_else(|| "unnamed".into())
        ),
    );
    report.laws("laws", b.validate(policy));
    report.claim(Claim::from_witness(
        "round-trip",
        "brace -> truss -> brace is the identity",
        (brace_from_truss(&tb).ok().as_ref() != Some(&b)).then(|| "tables differ".to_string()),
    ));
    report.claim(Claim::from_witness(
        "socle-ideal",
        format!("Soc(B) = {} is an ideal", labelled(&label, &soc)),
        (!is_brace_ideal(&b, &soc)).then(|| format!("{:?}", soc.members())),
    ));
    let bad = (0..n)
        .map(|c| b.additive_coset(c, &soc))
        .find(|c| !is_paragon(&tb, c).kind.is_two_sided());
    report.claim(Claim::from_witness(
        "socle-cosets",
        "every coset c + Soc(B) is a paragon of T(B)",
        bad.map(|c| labelled(&label, &c)),
    ));
    let shown: Vec<String> = ids.iter().map(|i| labelled(&label, i)).collect();
    report.structure("ideals", "subsets", ids.len(), shown.join(" "));
    let (subsets, scope) = if n <= BRACE_EXHAUSTIVE {
        ((1u64..1 << n).map(|x| Subset::from_bits(n, x)).collect::<Vec<_>>(), "all")
    } else {
        (sampled_subsets(n.min(63), &b, policy), "sampled")
    };
    let reports: Vec<_> = subsets.par_iter().map(|s| ideal_iff_normal_paragon(&b, &tb, &ids, s)).collect();
    let first1 = reports.iter().find(|r| !r.ideal_equivalence());
    let bad2: Vec<_> = reports.iter().filter(|r| !r.quotient_equivalence()).collect();
    report.claim(Claim::from_witness(
        "ideal-normal-paragon",
        format!("S ideal iff S normal paragon containing 1, over {scope} {} subsets", reports.len()),
        first1.map(|r| format!("S = {:?}: ideal {}, normal paragon {}", r.members, r.is_ideal, r.normal_paragon)),
    ));
    report.claim(Claim::from_witness(
        "class-normal-paragon",
        format!("S a class of some B/I iff S normal paragon, over {scope} {} subsets", reports.len()),
        bad2.first().map(|r| {
            format!(
                "{} subsets disagree; first S = {:?}: class of B/I for I = {:?}, normal paragon {}",
                bad2.len(),
                r.members,
                r.quotient_class_of,
                r.normal_paragon
            )
        }),
    ));
    emit(report, serde_json::to_value(brace_doc(&b))?, out)
}

pub fn identify(report: &mut Report, policy: &CheckPolicy, file: &Path) -> Result<()> {
    let s = load(file, policy)?;
    let (g, what) = match &s {
        Structure::Group(g) => (g.clone(), "group"),
        Structure::Brace(b) => (b.multiplicative().clone(), "multiplicative group of the brace"),
        Structure::AbGroup(g) => (FiniteGroup::from_abelian(g), "abelian group"),
        Structure::Heap(h) => (FiniteGroup::from_abelian(&h.retract(0)?), "retract of the heap at 0"),
        other => match other.as_truss() {
            Some(t) => (group_from_units(t)?.0, "unit group of the truss"),
            None => bail!("cannot identify a {}", other.kind()),
        },
    };
    let id = identify_group(&g)?;
    let name = id.named_match.clone().unwrap_or_else(|| "no named match".into());
    report.structure(file_name(file), s.kind(), s.order(), format!("{what}: {name}"));
    report.claim(Claim::new("group", format!("the {what} is a group of order {}", g.order()), true));
    report.output.push(json!({ "fingerprint": id.fingerprint, "named_match": id.named_match }));
    Ok(())
}

pub fn catalog(report: &mut Report, family: &str, params: &[usize], out: Option<&Path>) -> Result<()> {
    let want = |k: usize| -> Result<()> {
        if params.len() != k {
            bail!("catalog {family} takes {k} parameter(s), got {}", params.len());
        }
        Ok(())
    };
    let policy = CheckPolicy::with_seed(report.seed, report.samples);
    let (name, value, t): (String, Value, Truss) = match family {
        "zn" => {
            want(1)?;
            if params[0] == 0 {
                bail!("zn needs n >= 1");
            }
            let t = zn_truss(params[0]);
            (format!("T(Z{})", params[0]), serde_json::to_value(truss_doc(&t))?, t)
        }
        "za" => {
            want(2)?;
            if params[0] == 0 || params[1] == 0 {
                bail!("za needs a >= 1 and N >= 1");
            }
            let t = za_truss(params[0] as u64, params[1]);
            (format!("Z^({})/{}Z", params[0], params[1]), serde_json::to_value(truss_doc(&t))?, t)
        }
        "group-ring" => {
            want(2)?;
            if params[0] == 0 || params[1] == 0 {
                bail!("group-ring needs n >= 1 and |G| >= 1");
            }
            let gr = group_ring(&zn_ring(params[0]), &cyclic(params[1]))?;
            for f in augmentation_fibers(&gr)? {
                let set = Subset::new(gr.ring.order(), f.members.iter().copied()).expect("in range");
                let t = gr.ring.truss();
                report.claim(Claim::from_witness(
                    format!("A{}", f.r),
                    format!(
                        "A_{} = {} is a paragon, sub-truss {} iff idempotent {}, quotient T(Z{})",
                        f.r,
                        labelled(&|i| t.label(i), &set),
                        f.subtruss,
                        f.idempotent,
                        params[0]
                    ),
                    (!f.passed()).then(|| format!("{f:?}")),
                ));
            }
            let t = gr.ring.into_truss();
            (format!("Z{}C{}", params[0], params[1]), serde_json::to_value(truss_doc(&t))?, t)
        }
        "trunc-poly" => {
            want(2)?;
            let tp = trunc_poly(params[0] as u32, params[1])?;
            let t = tp.ring.into_truss();
            (format!("Z{}[x]/(x^{})", 1usize << params[0], params[1]), serde_json::to_value(truss_doc(&t))?, t)
        }
        "end" => {
            want(1)?;
            if params[0] == 0 {
                bail!("end needs |G| >= 1");
            }
            let et = end_truss(&AbGroup::cyclic(params[0]))?;
            report.claim(Claim::new("end-product", "the product is (f o f', g + f(g'))", true));
            let t = et.ext.truss().clone();
            (format!("T(End Z{})[Z{};0]", params[0], params[0]), serde_json::to_value(ext_doc(&et.ext))?, t)
        }
        "za-ext" => {
            want(0)?;
            let x = za_extension();
            ("Z^(2)/4Z[Z^(2)/4Z;0]".into(), serde_json::to_value(ext_doc(&x))?, x.truss().clone())
        }
        other => bail!("unknown family {other:?}; expected zn, za, group-ring, trunc-poly, end or za-ext"),
    };
    report.structure(name, "truss", t.order(), truss_note(&t));
    report.laws("laws", t.validate(&policy));
    emit(report, value, out)
}

pub fn suite(report: &mut Report, policy: &CheckPolicy) {
    for c in run_criteria(policy).into_iter().chain([criterion_12(policy)]) {
        report.structures.extend(c.structures);
        report.claims.extend(c.claims);
    }
}
