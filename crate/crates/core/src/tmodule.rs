//! Left modules over trusses, induced actions, induced submodules and
//! module congruences.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::check::{find_tuple, CheckPolicy, LawReport};
use crate::error::{AlgebraError, Law, Result};
use crate::heap::{quotient_heap_on, AbGroup, Heap};
use crate::subset::{Partition, Subset};
use crate::truss::{Sided, Truss};

/// Partition enumeration is capped at this module order (Bell(8) = 4140).
pub const CONGRUENCE_LIMIT: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TModule {
    truss: Truss,
    heap: Heap,
    /// `n x m`, row-major: `action[t * m + x] = t . x`.
    action: Vec<usize>,
}

/// Law-by-law validation of an action table. Both distributive laws use the
/// affine reduction; distributivity over the truss heap is skipped for left
/// trusses, which need not act right-distributively even on themselves.
pub fn validate_module(truss: &Truss, heap: &Heap, action: &[usize], policy: &CheckPolicy) -> LawReport {
    let (n, m) = (truss.order(), heap.order());
    let big = n.max(m);
    let exhaustive = policy.exhaustive(big);
    let mut report = LawReport::new("module", m, exhaustive);
    if action.len() != n * m {
        report.record(Law::Closure, Some(vec![action.len()]));
        return report;
    }
    if let Some(pos) = action.iter().position(|&y| y >= m) {
        report.record(Law::Closure, Some(vec![pos / m, pos % m]));
        return report;
    }
    report.record(Law::Closure, None);
    let (Some(o), Some(p)) = (truss.heap().basepoint(), heap.basepoint()) else {
        return report;
    };
    let act = |t: usize, x: usize| action[t * m + x];
    let assoc = find_tuple::<3>(big, exhaustive, policy, |[t, u, x]| {
        t >= n || u >= n || x >= m || act(t, act(u, x)) == act(truss.mul(t, u), x)
    });
    report.record(Law::ActionAssociativity, assoc.map(Vec::from));
    match truss.sided() {
        Sided::TwoSided => {
            let d = find_tuple::<3>(big, exhaustive, policy, |[t, u, x]| {
                t >= n || u >= n || x >= m
                    || act(truss.bracket(t, o, u), x) == heap.bracket(act(t, x), act(o, x), act(u, x))
            });
            report.record(Law::ActionTrussDistributivity, d.map(|[t, u, x]| vec![t, o, u, x]));
        }
        Sided::Left => report.skip(Law::ActionTrussDistributivity, "left truss"),
    }
    let d = find_tuple::<3>(big, exhaustive, policy, |[t, x, y]| {
        t >= n || x >= m || y >= m
            || act(t, heap.bracket(x, p, y)) == heap.bracket(act(t, x), act(t, p), act(t, y))
    });
    report.record(Law::ActionModuleDistributivity, d.map(|[t, x, y]| vec![t, x, p, y]));
    report
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SubmoduleViolation {
    Empty,
    NotSubHeap { a: usize, b: usize, c: usize },
    /// `[t.e', t.e, e]` left the set.
    Induced { t: usize, e: usize, e2: usize },
}

impl TModule {
    pub fn new(truss: Truss, heap: Heap, action: Vec<usize>) -> Result<TModule> {
        Self::new_with(truss, heap, action, &CheckPolicy::default())
    }

    pub fn new_with(truss: Truss, heap: Heap, action: Vec<usize>, policy: &CheckPolicy) -> Result<TModule> {
        if heap.is_empty() {
            return Err(AlgebraError::EmptyHeap);
        }
        if let Some(v) = validate_module(&truss, &heap, &action, policy).first_failure() {
            return Err(v.into());
        }
        Ok(TModule { truss, heap, action })
    }

    pub fn from_rows(truss: Truss, heap: Heap, action: Vec<Vec<usize>>) -> Result<TModule> {
        let (n, m) = (truss.order(), heap.order());
        if action.len() != n || action.iter().any(|r| r.len() != m) {
            return Err(AlgebraError::Shape(format!("action table must be {n}x{m}")));
        }
        TModule::new(truss, heap, action.into_iter().flatten().collect())
    }

    pub(crate) fn from_parts_unchecked(truss: Truss, heap: Heap, action: Vec<usize>) -> TModule {
        TModule { truss, heap, action }
    }

    /// `T` acting on itself by left multiplication.
    pub fn regular(truss: &Truss) -> TModule {
        TModule::from_parts_unchecked(truss.clone(), truss.heap().clone(), truss.table().to_vec())
    }

    /// `T` acting on itself on the right, as a left module over the opposite truss.
    pub fn regular_right(truss: &Truss) -> Result<TModule> {
        Ok(TModule::regular(&truss.opposite()?))
    }

    /// Every `t` acts as the identity.
    pub fn trivial(truss: &Truss, heap: Heap) -> Result<TModule> {
        if heap.is_empty() {
            return Err(AlgebraError::EmptyHeap);
        }
        let m = heap.order();
        let action = (0..truss.order() * m).map(|i| i % m).collect();
        Ok(TModule::from_parts_unchecked(truss.clone(), heap, action))
    }

    /// `M x N` with the componentwise action; index `x * |N| + y`.
    pub fn product(&self, other: &TModule) -> Result<TModule> {
        if self.truss != other.truss {
            return Err(AlgebraError::Mismatch("modules over different trusses".into()));
        }
        let heap = self.heap.product(&other.heap)?;
        let (m, k) = (self.order(), other.order());
        let action = (0..self.truss.order() * m * k)
            .map(|i| {
                let (t, x, y) = (i / (m * k), (i / k) % m, i % k);
                self.act(t, x) * k + other.act(t, y)
            })
            .collect();
        Ok(TModule::from_parts_unchecked(self.truss.clone(), heap, action))
    }

    pub fn truss(&self) -> &Truss {
        &self.truss
    }

    pub fn heap(&self) -> &Heap {
        &self.heap
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.heap.order()
    }

    #[inline]
    pub fn act(&self, t: usize, x: usize) -> usize {
        self.action[t * self.heap.order() + x]
    }

    #[inline]
    pub fn bracket(&self, a: usize, b: usize, c: usize) -> usize {
        self.heap.bracket(a, b, c)
    }

    pub fn action_table(&self) -> &[usize] {
        &self.action
    }

    pub fn action_rows(&self) -> Vec<Vec<usize>> {
        self.action.chunks(self.order()).map(<[usize]>::to_vec).collect()
    }

    pub fn validate(&self, policy: &CheckPolicy) -> LawReport {
        validate_module(&self.truss, &self.heap, &self.action, policy)
    }

    /// The truss has an identity and it acts trivially.
    pub fn is_unital(&self) -> bool {
        self.truss
            .identity()
            .is_some_and(|one| (0..self.order()).all(|x| self.act(one, x) == x))
    }

    /// `t ._e x = [t.x, t.e, e]`
    #[inline]
    pub fn induced_action(&self, t: usize, e: usize, x: usize) -> usize {
        self.bracket(self.act(t, x), self.act(t, e), e)
    }

    /// The same heap with the action `._e`; `e` becomes an absorber.
    pub fn induced_module(&self, e: usize) -> Result<TModule> {
        let m = self.order();
        if e >= m {
            return Err(AlgebraError::OutOfRange(format!("anchor {e} not below {m}")));
        }
        let action = (0..self.truss.order() * m)
            .map(|i| self.induced_action(i / m, e, i % m))
            .collect();
        Ok(TModule::from_parts_unchecked(self.truss.clone(), self.heap.clone(), action))
    }

    /// Every `e` with `t.e = e` for all `t`.
    pub fn absorbers(&self) -> Subset {
        Subset::from_mask(
            (0..self.order())
                .map(|e| (0..self.truss.order()).all(|t| self.act(t, e) == e))
                .collect(),
        )
    }

    pub fn induced_submodule_violation(&self, s: &Subset) -> Option<SubmoduleViolation> {
        if s.is_empty() {
            return Some(SubmoduleViolation::Empty);
        }
        if let Some((a, b, c)) = self.heap.subheap_violation(s) {
            return Some(SubmoduleViolation::NotSubHeap { a, b, c });
        }
        for t in 0..self.truss.order() {
            for &e in s.members() {
                for &e2 in s.members() {
                    if !s.contains(self.induced_action(t, e, e2)) {
                        return Some(SubmoduleViolation::Induced { t, e, e2 });
                    }
                }
            }
        }
        None
    }

    pub fn is_induced_submodule(&self, s: &Subset) -> bool {
        self.induced_submodule_violation(s).is_none()
    }

    /// Sub-heap closed under the action itself.
    pub fn is_submodule(&self, s: &Subset) -> bool {
        !s.is_empty()
            && self.heap.is_subheap(s)
            && s.members()
                .iter()
                .all(|&x| (0..self.truss.order()).all(|t| s.contains(self.act(t, x))))
    }

    /// Compatible with the bracket in each argument and with every `t.-`.
    pub fn is_congruence(&self, p: &Partition) -> bool {
        let m = self.order();
        let cls = |x: usize| p.class_of(x);
        for a in 0..m {
            for a2 in a + 1..m {
                if cls(a) != cls(a2) {
                    continue;
                }
                for t in 0..self.truss.order() {
                    if cls(self.act(t, a)) != cls(self.act(t, a2)) {
                        return false;
                    }
                }
                for b in 0..m {
                    for c in 0..m {
                        let h = &self.heap;
                        if cls(h.bracket(a, b, c)) != cls(h.bracket(a2, b, c))
                            || cls(h.bracket(b, a, c)) != cls(h.bracket(b, a2, c))
                        {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Every module congruence, by restricted-growth strings with pruning on
    /// the already-labelled prefix.
    pub fn congruences(&self) -> Result<Vec<Partition>> {
        let m = self.order();
        if m > CONGRUENCE_LIMIT {
            return Err(AlgebraError::SizeBound(format!(
                "congruence enumeration needs order <= {CONGRUENCE_LIMIT}, got {m}; test single sets with is_induced_submodule"
            )));
        }
        let mut out = Vec::new();
        let mut labels = vec![0usize; m];
        self.rgs(&mut labels, 1, 1, &mut out);
        Ok(out)
    }

    fn prefix_consistent(&self, labels: &[usize], k: usize) -> bool {
        // Only constraints whose every element is labelled, involving `k - 1`.
        let last = k - 1;
        let h = &self.heap;
        for a in 0..k {
            for a2 in 0..k {
                if a == a2 || labels[a] != labels[a2] || (a != last && a2 != last) {
                    continue;
                }
                for t in 0..self.truss.order() {
                    let (x, y) = (self.act(t, a), self.act(t, a2));
                    if x < k && y < k && labels[x] != labels[y] {
                        return false;
                    }
                }
                for b in 0..k {
                    for c in 0..k {
                        let (x, y) = (h.bracket(a, b, c), h.bracket(a2, b, c));
                        if x < k && y < k && labels[x] != labels[y] {
                            return false;
                        }
                        let (x, y) = (h.bracket(b, a, c), h.bracket(b, a2, c));
                        if x < k && y < k && labels[x] != labels[y] {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    fn rgs(&self, labels: &mut [usize], k: usize, blocks: usize, out: &mut Vec<Partition>) {
        let m = labels.len();
        if k >= m {
            let p = Partition::from_labels(labels);
            if self.is_congruence(&p) {
                out.push(p);
            }
            return;
        }
        for l in 0..=blocks {
            labels[k] = l;
            if self.prefix_consistent(labels, k + 1) {
                self.rgs(labels, k + 1, blocks.max(l + 1), out);
            }
        }
    }

    /// `N_e^x = {[n, e, x] : n in N}`.
    pub fn shift_submodule(&self, s: &Subset, e: usize, x: usize) -> Result<Subset> {
        if !s.contains(e) {
            return Err(AlgebraError::Mismatch(format!("shift anchor {e} is not in the set")));
        }
        if x >= self.order() {
            return Err(AlgebraError::OutOfRange(format!("target {x}")));
        }
        Ok(s.map(self.order(), |n| self.bracket(n, e, x)))
    }

    /// `M/N` for an induced submodule `N`.
    pub fn quotient(&self, s: &Subset) -> Result<ModuleQuotient> {
        if let Some(v) = self.induced_submodule_violation(s) {
            return Err(match v {
                SubmoduleViolation::Empty => AlgebraError::EmptySubHeap,
                other => AlgebraError::NotParagon(format!("not an induced submodule: {other:?}")),
            });
        }
        let classes = self.heap.subheap_relation_classes(s)?;
        self.quotient_by_partition(&classes)
    }

    pub fn quotient_by_partition(&self, classes: &Partition) -> Result<ModuleQuotient> {
        let heap = quotient_heap_on(&self.heap, classes)?;
        let k = classes.len();
        let n = self.truss.order();
        let action: Vec<usize> = (0..n * k)
            .map(|i| classes.class_of(self.act(i / k, classes.representative(i % k))))
            .collect();
        for t in 0..n {
            for x in 0..self.order() {
                if classes.class_of(self.act(t, x)) != action[t * k + classes.class_of(x)] {
                    return Err(AlgebraError::Internal(format!(
                        "class action depends on representatives at ({t},{x})"
                    )));
                }
            }
        }
        Ok(ModuleQuotient {
            module: TModule::from_parts_unchecked(self.truss.clone(), heap, action),
            classes: classes.clone(),
        })
    }
}

#[derive(Debug, Clone)]
pub struct ModuleQuotient {
    pub module: TModule,
    pub classes: Partition,
}

impl ModuleQuotient {
    pub fn projection(&self) -> &[usize] {
        self.classes.projection()
    }
}

/// First failure of `f: a -> b` as a module morphism over a shared truss.
pub fn module_morphism_violation(a: &TModule, b: &TModule, f: &[usize]) -> Option<String> {
    if a.truss().order() != b.truss().order() {
        return Some("modules over trusses of different order".into());
    }
    if f.len() != a.order() || f.iter().any(|&y| y >= b.order()) {
        return Some("map has wrong length or leaves the codomain".into());
    }
    if let Some([x, y, z]) = a.heap().morphism_violation(b.heap(), f) {
        return Some(format!("bracket not preserved at [{x},{y},{z}]"));
    }
    for t in 0..a.truss().order() {
        for x in 0..a.order() {
            if f[a.act(t, x)] != b.act(t, f[x]) {
                return Some(format!("action not preserved at ({t},{x})"));
            }
        }
    }
    None
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ThmCongReport {
    pub order: usize,
    pub congruences: usize,
    /// Distinct classes over all congruences.
    pub classes: Vec<Vec<usize>>,
    /// Nonempty subsets closed under the induced action.
    pub induced_submodules: Vec<Vec<usize>>,
    pub classes_are_induced: bool,
    pub induced_are_classes: bool,
    /// Each induced submodule's sub-heap relation is a congruence with it as a class.
    pub projections_match: bool,
    pub witness: Option<Vec<usize>>,
}

impl ThmCongReport {
    pub fn passed(&self) -> bool {
        self.classes_are_induced && self.induced_are_classes && self.projections_match
    }
}

/// Compares congruence classes (partition enumeration) with induced
/// submodules (subset enumeration); the two searches share no code.
pub fn thm_cong_check(module: &TModule) -> Result<ThmCongReport> {
    let m = module.order();
    let congruences = module.congruences()?;
    let classes: BTreeSet<Vec<usize>> = congruences
        .iter()
        .flat_map(|p| p.classes().iter().map(|c| c.members().to_vec()))
        .collect();
    let induced: BTreeSet<Vec<usize>> = (1u64..(1u64 << m))
        .map(|bits| Subset::from_bits(m, bits))
        .filter(|s| module.is_induced_submodule(s))
        .map(|s| s.members().to_vec())
        .collect();
    let mut witness = classes.difference(&induced).next().cloned();
    let classes_are_induced = witness.is_none();
    let extra = induced.difference(&classes).next().cloned();
    let induced_are_classes = extra.is_none();
    witness = witness.or(extra);
    let mut projections_match = true;
    for members in &induced {
        let s = Subset::new(m, members.iter().copied()).expect("members in range");
        let rel = module.heap().subheap_relation_classes(&s)?;
        let is_class = rel.classes().iter().any(|c| c == &s);
        if !(is_class && congruences.contains(&rel)) {
            projections_match = false;
            witness = witness.or(Some(members.clone()));
            break;
        }
    }
    Ok(ThmCongReport {
        order: m,
        congruences: congruences.len(),
        classes: classes.into_iter().collect(),
        induced_submodules: induced.into_iter().collect(),
        classes_are_induced,
        induced_are_classes,
        projections_match,
        witness,
    })
}

/// Congruences of a module over a ring, in the classical sense: partitions
/// compatible with addition and with every `r.-`. `action` is `|R| x |M|`.
pub fn ring_module_congruences(add: &AbGroup, ring_order: usize, action: &[usize]) -> Result<Vec<Partition>> {
    let m = add.order();
    if m > CONGRUENCE_LIMIT {
        return Err(AlgebraError::SizeBound(format!("order {m} above {CONGRUENCE_LIMIT}")));
    }
    let mut out = Vec::new();
    let mut labels = vec![0usize; m];
    fn rec(add: &AbGroup, n: usize, action: &[usize], labels: &mut [usize], k: usize, blocks: usize, out: &mut Vec<Partition>) {
        let m = labels.len();
        if k == m {
            let p = Partition::from_labels(labels);
            let ok = (0..m).all(|a| {
                (0..m).all(|a2| {
                    !p.same_class(a, a2)
                        || ((0..m).all(|b| p.same_class(add.add(a, b), add.add(a2, b)))
                            && (0..n).all(|r| p.same_class(action[r * m + a], action[r * m + a2])))
                })
            });
            if ok {
                out.push(p);
            }
            return;
        }
        for l in 0..=blocks {
            labels[k] = l;
            rec(add, n, action, labels, k + 1, blocks.max(l + 1), out);
        }
    }
    if m > 0 {
        rec(add, ring_order, action, &mut labels, 1, 1, &mut out);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::zn_truss;

    fn set(n: usize, xs: &[usize]) -> Subset {
        Subset::new(n, xs.iter().copied()).unwrap()
    }

    #[test]
    fn regular_module_is_valid() {
        let m = TModule::regular(&zn_truss(4));
        assert!(m.validate(&CheckPolicy::default()).passed());
        assert!(m.is_unital());
        assert_eq!(m.absorbers().members(), &[0]);
    }

    #[test]
    fn induced_action_examples() {
        let m = TModule::regular(&zn_truss(4));
        assert_eq!(m.induced_action(3, 0, 2), 2);
        for t in 0..4 {
            assert_eq!(m.induced_action(t, 1, 1), 1);
        }
        let ind = m.induced_module(1).unwrap();
        assert!(ind.validate(&CheckPolicy::default()).passed());
        assert!(ind.absorbers().contains(1));
    }

    #[test]
    fn induced_submodules_of_z4() {
        let m = TModule::regular(&zn_truss(4));
        assert!(m.is_induced_submodule(&set(4, &[1, 3])));
        assert!(m.is_induced_submodule(&Subset::full(4)));
        assert!(!m.is_induced_submodule(&set(4, &[1, 2])));
        assert!(!m.is_submodule(&set(4, &[1, 3])));
        assert!(m.is_submodule(&set(4, &[0, 2])));
    }

    #[test]
    fn z4_congruences() {
        let m = TModule::regular(&zn_truss(4));
        let cs = m.congruences().unwrap();
        let shapes: Vec<Vec<Vec<usize>>> = cs
            .iter()
            .map(|p| p.classes().iter().map(|c| c.members().to_vec()).collect())
            .collect();
        assert_eq!(
            shapes,
            vec![
                vec![vec![0, 1, 2, 3]],
                vec![vec![0, 2], vec![1, 3]],
                vec![vec![0], vec![1], vec![2], vec![3]],
            ]
        );
    }

    #[test]
    fn thm_cong_on_z4() {
        let r = thm_cong_check(&TModule::regular(&zn_truss(4))).unwrap();
        assert!(r.passed());
        assert_eq!(r.classes.len(), 7);
    }

    #[test]
    fn shifts() {
        let m = TModule::regular(&zn_truss(4));
        assert_eq!(m.shift_submodule(&set(4, &[0, 2]), 0, 1).unwrap(), set(4, &[1, 3]));
        assert_eq!(m.shift_submodule(&set(4, &[1, 3]), 1, 0).unwrap(), set(4, &[0, 2]));
        assert_eq!(m.shift_submodule(&set(4, &[1, 3]), 3, 3).unwrap(), set(4, &[1, 3]));
        assert!(m.shift_submodule(&set(4, &[1, 3]), 0, 1).is_err());
    }

    #[test]
    fn quotients() {
        let m = TModule::regular(&zn_truss(4));
        let q = m.quotient(&set(4, &[1, 3])).unwrap();
        assert_eq!(q.module.order(), 2);
        assert!(q.module.validate(&CheckPolicy::default()).passed());
        assert_eq!(m.quotient(&Subset::full(4)).unwrap().module.order(), 1);
        assert_eq!(m.quotient(&set(4, &[0])).unwrap().module.order(), 4);
    }

    #[test]
    fn cong_limit() {
        let m = TModule::regular(&zn_truss(9));
        assert!(matches!(m.congruences(), Err(AlgebraError::SizeBound(_))));
    }

    #[test]
    fn trivial_action_absorbers() {
        let m = TModule::trivial(&zn_truss(3), Heap::cyclic(4)).unwrap();
        assert_eq!(m.absorbers().len(), 4);
        assert!(m.validate(&CheckPolicy::default()).passed());
    }

    #[test]
    fn ring_and_truss_congruences_agree() {
        let t = zn_truss(6);
        let m = TModule::regular(&t);
        let ring = ring_module_congruences(&AbGroup::cyclic(6), 6, t.table()).unwrap();
        assert_eq!(ring, m.congruences().unwrap());
    }
}
