//! JSON interchange. Every structure is a tagged object with row-major
//! tables; nested structures use the same shapes.

use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::brace::{validate_brace, Brace};
use crate::check::{CheckPolicy, LawReport};
use crate::error::{AlgebraError, Law};
use crate::extension::{extend_with, ExtTruss};
use crate::groupid::FiniteGroup;
use crate::heap::{AbGroup, Heap};
use crate::tmodule::{validate_module, TModule};
use crate::truss::{validate_truss, Sided, Truss};

#[derive(Debug, Error)]
pub enum JsonError {
    #[error("parse error at byte {offset} (line {line}, column {column}): {message}")]
    Parse {
        offset: usize,
        line: usize,
        column: usize,
        message: String,
    },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

impl JsonError {
    pub fn offset(&self) -> Option<usize> {
        match self {
            JsonError::Parse { offset, .. } => Some(*offset),
            JsonError::Algebra(_) => None,
        }
    }
}

/// An abelian group, or a heap given by its retract at `zero` (or by a raw
/// `n x n x n` bracket table).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AbelianDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
    pub order: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub add: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub zero: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bracket: Option<Vec<Vec<Vec<usize>>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TrussDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
    pub order: usize,
    pub heap: AbelianDoc,
    pub mul: Vec<Vec<usize>>,
    #[serde(default = "two_sided")]
    pub sided: Sided,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub identity: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub absorber: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub extension: Option<Box<ExtensionDoc>>,
}

fn two_sided() -> Sided {
    Sided::TwoSided
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
    pub truss: TrussDoc,
    pub heap: AbelianDoc,
    pub action: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExtensionDoc {
    pub base: TrussDoc,
    pub module: ModuleDoc,
    pub anchor: usize,
    #[serde(default = "row_major")]
    pub pairing: String,
}

fn row_major() -> String {
    "row-major".into()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BraceDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
    pub order: usize,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
    #[serde(default = "two_sided")]
    pub sided: Sided,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
    pub order: usize,
    pub mul: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

/// A parsed but not yet validated document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Document {
    AbGroup(AbelianDoc),
    Heap(AbelianDoc),
    Truss(TrussDoc),
    Module(ModuleDoc),
    Brace(BraceDoc),
    Group(GroupDoc),
}

/// A validated structure.
#[derive(Debug, Clone)]
pub enum Structure {
    AbGroup(AbGroup),
    Heap(Heap),
    Truss(Truss),
    Extension(ExtTruss),
    Module(TModule),
    Brace(Brace),
    Group(FiniteGroup),
}

impl Structure {
    pub fn kind(&self) -> &'static str {
        match self {
            Structure::AbGroup(_) => "abgroup",
            Structure::Heap(_) => "heap",
            Structure::Truss(_) => "truss",
            Structure::Extension(_) => "extension",
            Structure::Module(_) => "tmodule",
            Structure::Brace(_) => "brace",
            Structure::Group(_) => "group",
        }
    }

    pub fn order(&self) -> usize {
        match self {
            Structure::AbGroup(g) => g.order(),
            Structure::Heap(h) => h.order(),
            Structure::Truss(t) => t.order(),
            Structure::Extension(x) => x.order(),
            Structure::Module(m) => m.order(),
            Structure::Brace(b) => b.order(),
            Structure::Group(g) => g.order(),
        }
    }

    pub fn label(&self, i: usize) -> String {
        match self {
            Structure::AbGroup(g) => g.label(i),
            Structure::Heap(h) => h.label(i),
            Structure::Truss(t) => t.label(i),
            Structure::Extension(x) => x.truss().label(i),
            Structure::Module(m) => m.heap().label(i),
            Structure::Brace(b) => b.label(i),
            Structure::Group(g) => g.label(i),
        }
    }

    /// The truss underlying a truss or extension document.
    pub fn as_truss(&self) -> Option<&Truss> {
        match self {
            Structure::Truss(t) => Some(t),
            Structure::Extension(x) => Some(x.truss()),
            _ => None,
        }
    }

    pub fn to_value(&self) -> Value {
        let v = match self {
            Structure::AbGroup(g) => serde_json::to_value(abgroup_doc(g)),
            Structure::Heap(h) => serde_json::to_value(heap_doc(h)),
            Structure::Truss(t) => serde_json::to_value(truss_doc(t)),
            Structure::Extension(x) => serde_json::to_value(ext_doc(x)),
            Structure::Module(m) => serde_json::to_value(module_doc(m)),
            Structure::Brace(b) => serde_json::to_value(brace_doc(b)),
            Structure::Group(g) => serde_json::to_value(group_doc(g)),
        };
        v.expect("documents serialize")
    }
}

fn parse_error(text: &str, e: &serde_json::Error) -> JsonError {
    let (line, column) = (e.line(), e.column());
    let line_start: usize = text
        .split_inclusive('\n')
        .take(line.saturating_sub(1))
        .map(str::len)
        .sum();
    let offset = (line_start + column.saturating_sub(1)).min(text.len());
    let message = e.to_string();
    let message = match message.rfind(" at line ") {
        Some(i) => message[..i].to_string(),
        None => message,
    };
    JsonError::Parse {
        offset,
        line,
        column,
        message,
    }
}

fn typed<'a, T: Deserialize<'a>>(text: &'a str) -> Result<T, JsonError> {
    serde_json::from_str(text).map_err(|e| parse_error(text, &e))
}

/// Parses any interchange document, dispatching on its `kind`.
pub fn parse_document(text: &str) -> Result<Document, JsonError> {
    let value: Value = typed(text)?;
    let at_start = text.len() - text.trim_start().len();
    let kind = value
        .get("kind")
        .and_then(Value::as_str)
        .ok_or_else(|| JsonError::Parse {
            offset: at_start,
            line: 1 + text[..at_start].matches('\n').count(),
            column: 1,
            message: "top-level object needs a string \"kind\"".into(),
        })?;
    Ok(match kind {
        "abgroup" => Document::AbGroup(typed(text)?),
        "heap" => Document::Heap(typed(text)?),
        "truss" => Document::Truss(typed(text)?),
        "tmodule" => Document::Module(typed(text)?),
        "brace" => Document::Brace(typed(text)?),
        "group" => Document::Group(typed(text)?),
        other => {
            let offset = text.find(&format!("\"{other}\"")).unwrap_or(at_start);
            return Err(JsonError::Parse {
                offset,
                line: 1 + text[..offset].matches('\n').count(),
                column: offset - text[..offset].rfind('\n').map_or(0, |i| i + 1) + 1,
                message: format!(
                    "unknown kind {other:?}; expected abgroup, heap, truss, tmodule, brace or group"
                ),
            });
        }
    })
}

/// Parses and validates in one step.
pub fn parse_structure(text: &str, policy: &CheckPolicy) -> Result<Structure, JsonError> {
    Ok(parse_document(text)?.build(policy)?)
}

fn square(rows: &[Vec<usize>], n: usize, what: &str) -> Result<Vec<usize>, AlgebraError> {
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(AlgebraError::Shape(format!("{what} must be {n}x{n}")));
    }
    Ok(rows.concat())
}

fn rect(rows: &[Vec<usize>], n: usize, m: usize, what: &str) -> Result<Vec<usize>, AlgebraError> {
    if rows.len() != n || rows.iter().any(|r| r.len() != m) {
        return Err(AlgebraError::Shape(format!("{what} must be {n}x{m}")));
    }
    Ok(rows.concat())
}

/// Turns a law violation into a failed report line; other errors propagate.
fn law_or_err(report: &mut LawReport, r: Result<(), AlgebraError>) -> Result<bool, AlgebraError> {
    match r {
        Ok(()) => Ok(true),
        Err(AlgebraError::Law(v)) => {
            report.record(v.law, Some(v.witness));
            Ok(false)
        }
        Err(e) => Err(e),
    }
}

impl AbelianDoc {
    pub fn group(&self, policy: &CheckPolicy) -> Result<AbGroup, AlgebraError> {
        let n = self.order;
        let (Some(add), Some(zero)) = (&self.add, self.zero) else {
            return Err(AlgebraError::Shape("abelian group needs \"add\" and \"zero\"".into()));
        };
        let g = AbGroup::from_flat_with(n, square(add, n, "add")?, zero, policy)?;
        match &self.labels {
            Some(l) => g.with_labels(l.clone()),
            None => Ok(g),
        }
    }

    pub fn heap(&self, policy: &CheckPolicy) -> Result<Heap, AlgebraError> {
        let h = match (&self.add, &self.bracket) {
            (Some(_), None) => Heap::from_group(self.group(policy)?),
            (None, Some(t)) => {
                let n = self.order;
                if t.len() != n || t.iter().any(|p| p.len() != n || p.iter().any(|r| r.len() != n)) {
                    return Err(AlgebraError::Shape(format!("bracket must be {n}x{n}x{n}")));
                }
                let flat: Vec<usize> = t.iter().flatten().flatten().copied().collect();
                let h = Heap::from_ternary_table_with(n, &flat, policy)?;
                match &self.labels {
                    Some(l) => h.with_labels(l.clone())?,
                    None => h,
                }
            }
            _ => return Err(AlgebraError::Shape("heap needs exactly one of \"add\" or \"bracket\"".into())),
        };
        if h.is_empty() {
            return Err(AlgebraError::EmptyHeap);
        }
        Ok(h)
    }

    fn report(&self, name: &str, policy: &CheckPolicy) -> Result<LawReport, AlgebraError> {
        let mut report = LawReport::new(name, self.order, policy.exhaustive(self.order));
        let r = if name == "heap" {
            self.heap(policy).map(|_| ())
        } else {
            self.group(policy).map(|_| ())
        };
        if law_or_err(&mut report, r)? {
            let laws: &[Law] = if name == "heap" {
                &[Law::HeapAssociativity, Law::MalcevLeft, Law::MalcevRight, Law::HeapCommutativity]
            } else {
                &[Law::Closure, Law::Identity, Law::Inverse, Law::Commutativity, Law::Associativity]
            };
            for &law in laws {
                report.record(law, None);
            }
        }
        Ok(report)
    }
}

impl TrussDoc {
    fn check_order(&self) -> Result<(), AlgebraError> {
        if self.heap.order != self.order {
            return Err(AlgebraError::Shape(format!(
                "truss order {} but heap order {}",
                self.order, self.heap.order
            )));
        }
        Ok(())
    }

    /// Law-by-law report, plus checks of any declared identity and absorber.
    pub fn report(&self, policy: &CheckPolicy) -> Result<LawReport, AlgebraError> {
        self.check_order()?;
        let heap = match self.heap.heap(policy) {
            Ok(h) => h,
            Err(AlgebraError::Law(v)) => {
                let mut r = LawReport::new(format!("{} truss", self.sided), self.order, policy.exhaustive(self.order));
                r.record(v.law, Some(v.witness));
                return Ok(r);
            }
            Err(e) => return Err(e),
        };
        let mul = square(&self.mul, self.order, "mul")?;
        let mut report = validate_truss(&heap, &mul, self.sided, policy);
        if report.passed() {
            let t = Truss::from_parts_unchecked(heap, mul, self.sided);
            if let Some(i) = self.identity {
                report.record(Law::Identity, (t.identity() != Some(i)).then(|| vec![i]));
            }
            if let Some(a) = self.absorber {
                report.record(Law::Absorber, (t.absorber() != Some(a)).then(|| vec![a]));
            }
        }
        Ok(report)
    }

    pub fn truss(&self, policy: &CheckPolicy) -> Result<Truss, AlgebraError> {
        self.check_order()?;
        let heap = self.heap.heap(policy)?;
        let t = Truss::new_with(heap, square(&self.mul, self.order, "mul")?, self.sided, policy)?;
        if self.identity.is_some() && t.identity() != self.identity {
            return Err(AlgebraError::Mismatch(format!(
                "declared identity {:?}, table has {:?}",
                self.identity,
                t.identity()
            )));
        }
        if self.absorber.is_some() && t.absorber() != self.absorber {
            return Err(AlgebraError::Mismatch(format!(
                "declared absorber {:?}, table has {:?}",
                self.absorber,
                t.absorber()
            )));
        }
        Ok(t)
    }

    /// Rebuilds `T[M;e]` from the extension block and checks that it is the
    /// truss given by the tables.
    pub fn extension(&self, policy: &CheckPolicy) -> Result<Option<ExtTruss>, AlgebraError> {
        let Some(x) = &self.extension else {
            return Ok(None);
        };
        if x.pairing != "row-major" {
            return Err(AlgebraError::Mismatch(format!("unsupported pairing {:?}", x.pairing)));
        }
        let module = x.module.module(policy)?;
        if &x.base.truss(policy)? != module.truss() {
            return Err(AlgebraError::Mismatch("extension base differs from the module's truss".into()));
        }
        let ext = extend_with(&module, x.anchor, policy)?;
        let t = self.truss(policy)?;
        if t.table() != ext.truss().table() || t.heap() != ext.truss().heap() || t.sided() != ext.truss().sided() {
            return Err(AlgebraError::Mismatch("tables differ from T[M;e] built from the extension block".into()));
        }
        Ok(Some(ext))
    }
}

impl ModuleDoc {
    pub fn report(&self, policy: &CheckPolicy) -> Result<LawReport, AlgebraError> {
        let truss = self.truss.truss(policy)?;
        let heap = self.heap.heap(policy)?;
        let action = rect(&self.action, truss.order(), heap.order(), "action")?;
        Ok(validate_module(&truss, &heap, &action, policy))
    }

    pub fn module(&self, policy: &CheckPolicy) -> Result<TModule, AlgebraError> {
        let truss = self.truss.truss(policy)?;
        let heap = self.heap.heap(policy)?;
        let action = rect(&self.action, truss.order(), heap.order(), "action")?;
        TModule::new_with(truss, heap, action, policy)
    }
}

impl BraceDoc {
    fn parts(&self, policy: &CheckPolicy) -> Result<(AbGroup, FiniteGroup), AlgebraError> {
        let n = self.order;
        let add = square(&self.add, n, "add")?;
        let mul = FiniteGroup::from_flat(n, square(&self.mul, n, "mul")?)?;
        // The additive zero must be the multiplicative identity; fall back to
        // the table's own neutral element so the shared-neutral law can fail visibly.
        let zero = (0..n)
            .find(|&z| (0..n).all(|a| add[z * n + a] == a))
            .unwrap_or(mul.identity());
        let g = AbGroup::from_flat_with(n, add, zero, policy)?;
        Ok(match &self.labels {
            Some(l) => (g.with_labels(l.clone())?, mul.with_labels(l.clone())),
            None => (g, mul),
        })
    }

    pub fn report(&self, policy: &CheckPolicy) -> Result<LawReport, AlgebraError> {
        let mut fallback = LawReport::new(format!("{} brace", self.sided), self.order, policy.exhaustive(self.order));
        match self.parts(policy) {
            Ok((add, mul)) => Ok(validate_brace(&add, &mul, self.sided, policy)),
            Err(AlgebraError::Law(v)) => {
                fallback.record(v.law, Some(v.witness));
                Ok(fallback)
            }
            Err(e) => Err(e),
        }
    }

    pub fn brace(&self, policy: &CheckPolicy) -> Result<Brace, AlgebraError> {
        let (add, mul) = self.parts(policy)?;
        if let Some(v) = validate_brace(&add, &mul, self.sided, policy).first_failure() {
            return Err(v.into());
        }
        Brace::new(add, mul, self.sided)
    }
}

impl GroupDoc {
    pub fn group(&self) -> Result<FiniteGroup, AlgebraError> {
        let g = FiniteGroup::from_flat(self.order, square(&self.mul, self.order, "mul")?)?;
        Ok(match &self.labels {
            Some(l) if l.len() == self.order => g.with_labels(l.clone()),
            Some(l) => return Err(AlgebraError::Shape(format!("{} labels for order {}", l.len(), self.order))),
            None => g,
        })
    }

    fn report(&self) -> Result<LawReport, AlgebraError> {
        let mut report = LawReport::new("group", self.order, true);
        if law_or_err(&mut report, self.group().map(|_| ()))? {
            for law in [Law::Closure, Law::Identity, Law::Inverse, Law::Associativity] {
                report.record(law, None);
            }
        }
        Ok(report)
    }
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::AbGroup(_) => "abgroup",
            Document::Heap(_) => "heap",
            Document::Truss(_) => "truss",
            Document::Module(_) => "tmodule",
            Document::Brace(_) => "brace",
            Document::Group(_) => "group",
        }
    }

    /// Law-by-law validation. Law failures land in the report; malformed
    /// tables (wrong shape, out-of-range indices) are errors.
    pub fn validate(&self, policy: &CheckPolicy) -> Result<Vec<LawReport>, AlgebraError> {
        match self {
            Document::AbGroup(d) => Ok(vec![d.report("abelian group", policy)?]),
            Document::Heap(d) => Ok(vec![d.report("heap", policy)?]),
            Document::Truss(d) => Ok(vec![d.report(policy)?]),
            Document::Module(d) => {
                let truss = d.truss.report(policy)?;
                if !truss.passed() {
                    return Ok(vec![truss]);
                }
                Ok(vec![truss, d.report(policy)?])
            }
            Document::Brace(d) => Ok(vec![d.report(policy)?]),
            Document::Group(d) => Ok(vec![d.report()?]),
        }
    }

    pub fn build(&self, policy: &CheckPolicy) -> Result<Structure, AlgebraError> {
        Ok(match self {
            Document::AbGroup(d) => Structure::AbGroup(d.group(policy)?),
            Document::Heap(d) => Structure::Heap(d.heap(policy)?),
            Document::Truss(d) => match d.extension(policy)? {
                Some(x) => Structure::Extension(x),
                None => Structure::Truss(d.truss(policy)?),
            },
            Document::Module(d) => Structure::Module(d.module(policy)?),
            Document::Brace(d) => Structure::Brace(d.brace(policy)?),
            Document::Group(d) => Structure::Group(d.group()?),
        })
    }
}

fn retract_doc(kind: &str, g: &AbGroup) -> AbelianDoc {
    AbelianDoc {
        kind: Some(kind.into()),
        order: g.order(),
        add: Some(g.rows()),
        zero: Some(g.zero()),
        bracket: None,
        labels: g.labels().map(<[String]>::to_vec),
    }
}

pub fn abgroup_doc(g: &AbGroup) -> AbelianDoc {
    retract_doc("abgroup", g)
}

pub fn heap_doc(h: &Heap) -> AbelianDoc {
    retract_doc("heap", h.stored_retract())
}

pub fn truss_doc(t: &Truss) -> TrussDoc {
    TrussDoc {
        kind: Some("truss".into()),
        order: t.order(),
        heap: heap_doc(t.heap()),
        mul: t.rows(),
        sided: t.sided(),
        identity: t.identity(),
        absorber: t.absorber(),
        extension: None,
    }
}

pub fn module_doc(m: &TModule) -> ModuleDoc {
    ModuleDoc {
        kind: Some("tmodule".into()),
        truss: truss_doc(m.truss()),
        heap: heap_doc(m.heap()),
        action: m.action_rows(),
    }
}

pub fn ext_doc(x: &ExtTruss) -> TrussDoc {
    let mut doc = truss_doc(x.truss());
    doc.heap.labels = Some(
        (0..x.order())
            .map(|i| {
                let (t, m) = x.unpair(i);
                format!("({},{})", x.base().label(t), x.module().heap().label(m))
            })
            .collect(),
    );
    doc.extension = Some(Box::new(ExtensionDoc {
        base: truss_doc(x.base()),
        module: module_doc(x.module()),
        anchor: x.anchor(),
        pairing: row_major(),
    }));
    doc
}

pub fn brace_doc(b: &Brace) -> BraceDoc {
    BraceDoc {
        kind: Some("brace".into()),
        order: b.order(),
        add: b.additive().rows(),
        mul: b.multiplicative().rows(),
        sided: b.sided(),
        labels: b.additive().labels().map(<[String]>::to_vec),
    }
}

pub fn group_doc(g: &FiniteGroup) -> GroupDoc {
    GroupDoc {
        kind: Some("group".into()),
        order: g.order(),
        mul: g.rows(),
        labels: g.labels().map(<[String]>::to_vec),
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_pretty<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{za_extension, za_truss, zn_truss};

    fn policy() -> CheckPolicy {
        CheckPolicy::default()
    }

    #[test]
    fn truss_round_trip() {
        let t = zn_truss(4);
        let text = to_pretty(&truss_doc(&t));
        let back = parse_structure(&text, &policy()).unwrap();
        assert_eq!(back.as_truss().unwrap(), &t);
        assert_eq!(back.label(3), "3");
    }

    #[test]
    fn extension_round_trip() {
        let x = za_extension();
        let text = to_pretty(&ext_doc(&x));
        match parse_structure(&text, &policy()).unwrap() {
            Structure::Extension(y) => {
                assert_eq!(y.truss().table(), x.truss().table());
                assert_eq!(y.anchor(), 0);
            }
            other => panic!("expected extension, got {}", other.kind()),
        }
    }

    #[test]
    fn syntax_error_has_offset() {
        let text = "{\"kind\": \"heap\",\n \"order\": 2,, }";
        let e = parse_document(text).unwrap_err();
        let off = e.offset().unwrap();
        assert_eq!(&text[off..off + 1], ",");
    }

    #[test]
    fn type_error_has_offset() {
        let text = r#"{"kind":"group","order":"two","mul":[[0]]}"#;
        let e = parse_document(text).unwrap_err();
        assert!(e.offset().unwrap() > 20, "{e}");
    }

    #[test]
    fn unknown_kind() {
        let e = parse_document(r#"{"kind":"ring"}"#).unwrap_err();
        assert_eq!(e.offset(), Some(8));
    }

    #[test]
    fn corrupted_truss_reports_witness() {
        let mut doc = truss_doc(&zn_truss(4));
        doc.mul[2][3] = 1;
        let reports = Document::Truss(doc).validate(&policy()).unwrap();
        assert!(!reports[0].passed());
        let v = reports[0].first_failure().unwrap();
        assert!(!v.witness.is_empty());
    }

    #[test]
    fn left_truss_skips_right_law() {
        let b = crate::catalog::s3_left_brace();
        let t = crate::brace::truss_from_brace(&b).unwrap();
        let reports = Document::Truss(truss_doc(&t)).validate(&policy()).unwrap();
        assert!(reports[0].passed());
        assert!(matches!(
            reports[0].status(Law::RightDistributivity),
            Some(crate::check::LawStatus::Skipped(_))
        ));
    }

    #[test]
    fn ternary_heap_input() {
        let n = 4;
        let bracket: Vec<Vec<Vec<usize>>> = (0..n)
            .map(|a| (0..n).map(|b| (0..n).map(|c| a ^ b ^ c).collect()).collect())
            .collect();
        let doc = AbelianDoc {
            kind: Some("heap".into()),
            order: n,
            add: None,
            zero: None,
            bracket: Some(bracket),
            labels: None,
        };
        assert!(Document::Heap(doc).validate(&policy()).unwrap()[0].passed());
    }

    #[test]
    fn brace_round_trip() {
        let b = crate::brace::brace_from_truss(&za_truss(2, 4)).unwrap();
        let text = to_pretty(&brace_doc(&b));
        match parse_structure(&text, &policy()).unwrap() {
            Structure::Brace(c) => assert_eq!(c, b),
            other => panic!("expected brace, got {}", other.kind()),
        }
    }
}
