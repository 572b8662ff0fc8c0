//! Finite abelian groups and abelian heaps.
//!
//! A heap is stored as one of its retracts: an abelian group whose zero is
//! the chosen basepoint. The bracket is then `[a,b,c] = a - b + c`, so the
//! heap axioms hold by construction. Raw ternary tables enter only through
//! [`Heap::from_ternary_table`], which checks the axioms first.

use crate::check::{find_tuple, CheckPolicy};
use crate::error::{AlgebraError, Law, LawViolation, Result};
use crate::subset::{Partition, Subset};

/// A finite abelian group on the indices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbGroup {
    n: usize,
    add: Vec<usize>,
    neg: Vec<usize>,
    zero: usize,
    labels: Option<Vec<String>>,
}

impl AbGroup {
    /// Validates a row-major addition table with the given zero.
    pub fn new(add: Vec<Vec<usize>>, zero: usize) -> Result<AbGroup> {
        let n = add.len();
        if add.iter().any(|row| row.len() != n) {
            return Err(AlgebraError::Shape(format!("addition table must be {n}x{n}")));
        }
        Self::from_flat(n, add.into_iter().flatten().collect(), zero)
    }

    pub fn from_flat(n: usize, add: Vec<usize>, zero: usize) -> Result<AbGroup> {
        Self::from_flat_with(n, add, zero, &CheckPolicy::default())
    }

    pub fn from_flat_with(
        n: usize,
        add: Vec<usize>,
        zero: usize,
        policy: &CheckPolicy,
    ) -> Result<AbGroup> {
        if n == 0 {
            return Err(AlgebraError::EmptyHeap);
        }
        if add.len() != n * n {
            return Err(AlgebraError::Shape(format!("addition table must have {} entries", n * n)));
        }
        if zero >= n {
            return Err(AlgebraError::OutOfRange(format!("zero {zero} >= order {n}")));
        }
        if let Some(pos) = add.iter().position(|&x| x >= n) {
            return Err(LawViolation::new(Law::Closure, [pos / n, pos % n]).into());
        }
        let op = |a: usize, b: usize| add[a * n + b];
        for a in 0..n {
            if op(zero, a) != a || op(a, zero) != a {
                return Err(LawViolation::new(Law::Identity, [a]).into());
            }
        }
        let mut neg = vec![usize::MAX; n];
        for a in 0..n {
            match (0..n).find(|&b| op(a, b) == zero) {
                Some(b) => neg[a] = b,
                None => return Err(LawViolation::new(Law::Inverse, [a]).into()),
            }
        }
        for a in 0..n {
            for b in a + 1..n {
                if op(a, b) != op(b, a) {
                    return Err(LawViolation::new(Law::Commutativity, [a, b]).into());
                }
            }
        }
        if let Some([a, b, c]) = find_tuple::<3>(n, policy.exhaustive(n), policy, |[a, b, c]| {
            op(op(a, b), c) == op(a, op(b, c))
        }) {
            return Err(LawViolation::new(Law::Associativity, [a, b, c]).into());
        }
        Ok(AbGroup {
            n,
            add,
            neg,
            zero,
            labels: None,
        })
    }

    /// Trusted constructor for tables produced by construction.
    pub(crate) fn from_parts_unchecked(n: usize, add: Vec<usize>, zero: usize) -> AbGroup {
        let mut neg = vec![0; n];
        for a in 0..n {
            neg[a] = (0..n).find(|&b| add[a * n + b] == zero).expect("inverse exists");
        }
        AbGroup {
            n,
            add,
            neg,
            zero,
            labels: None,
        }
    }

    /// The cyclic group Z/n with residue labels.
    pub fn cyclic(n: usize) -> AbGroup {
        assert!(n > 0, "cyclic group of order 0");
        let add = (0..n * n).map(|i| (i / n + i % n) % n).collect();
        AbGroup::from_parts_unchecked(n, add, 0).with_default_labels()
    }

    /// Direct product with index `a * other.order() + b` for the pair `(a, b)`.
    pub fn product(&self, other: &AbGroup) -> AbGroup {
        let (n, m) = (self.n, other.n);
        let nm = n * m;
        let mut add = vec![0; nm * nm];
        for x in 0..nm {
            for y in 0..nm {
                let (a, b) = (x / m, x % m);
                let (c, d) = (y / m, y % m);
                add[x * nm + y] = self.add(a, c) * m + other.add(b, d);
            }
        }
        let labels = (0..nm)
            .map(|x| format!("({},{})", self.label(x / m), other.label(x % m)))
            .collect();
        AbGroup {
            n: nm,
            neg: (0..nm)
                .map(|x| self.neg(x / m) * m + other.neg(x % m))
                .collect(),
            add,
            zero: self.zero * m + other.zero,
            labels: Some(labels),
        }
    }

    /// Product of cyclic groups of the given orders.
    pub fn cyclic_product(orders: &[usize]) -> AbGroup {
        orders
            .iter()
            .map(|&k| AbGroup::cyclic(k))
            .reduce(|a, b| a.product(&b))
            .unwrap_or_else(|| AbGroup::cyclic(1))
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<AbGroup> {
        if labels.len() != self.n {
            return Err(AlgebraError::Shape(format!(
                "{} labels for order {}",
                labels.len(),
                self.n
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    fn with_default_labels(mut self) -> AbGroup {
        self.labels = Some((0..self.n).map(|i| i.to_string()).collect());
        self
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i].clone(),
            None => i.to_string(),
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn zero(&self) -> usize {
        self.zero
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.n + b]
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a]
    }

    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg[b])
    }

    /// `j * a` for a signed multiplier.
    pub fn multiple(&self, j: i64, a: usize) -> usize {
        let base = if j < 0 { self.neg(a) } else { a };
        let mut acc = self.zero;
        for _ in 0..j.unsigned_abs() {
            acc = self.add(acc, base);
        }
        acc
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != self.zero {
            x = self.add(x, a);
            k += 1;
        }
        k
    }

    pub fn table(&self) -> &[usize] {
        &self.add
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.add.chunks(self.n).map(<[usize]>::to_vec).collect()
    }

    /// True when the two groups share zero and addition table.
    pub fn same_table(&self, other: &AbGroup) -> bool {
        self.n == other.n && self.zero == other.zero && self.add == other.add
    }
}

/// A finite abelian heap.
#[derive(Debug, Clone)]
pub struct Heap {
    group: AbGroup,
}

impl PartialEq for Heap {
    /// Heaps are equal when their brackets agree, whatever retract is stored.
    fn eq(&self, other: &Heap) -> bool {
        if self.order() != other.order() {
            return false;
        }
        if self.order() == 0 {
            return true;
        }
        let n = self.order();
        (0..n).all(|a| (0..n).all(|c| self.bracket(a, 0, c) == other.bracket(a, 0, c)))
    }
}

impl Eq for Heap {}

impl Heap {
    /// The heap `[a,b,c] = a - b + c` of an abelian group, based at its zero.
    pub fn from_group(g: AbGroup) -> Heap {
        Heap { group: g }
    }

    /// The empty heap. Any operation that needs an element rejects it.
    pub fn empty() -> Heap {
        Heap {
            group: AbGroup {
                n: 0,
                add: Vec::new(),
                neg: Vec::new(),
                zero: 0,
                labels: None,
            },
        }
    }

    pub fn cyclic(n: usize) -> Heap {
        Heap::from_group(AbGroup::cyclic(n))
    }

    /// Accepts a row-major `n x n x n` ternary table if it is an abelian heap,
    /// returning the heap with its retract at 0 (`a + b := t(a,0,b)`).
    pub fn from_ternary_table(n: usize, table: &[usize]) -> Result<Heap> {
        Self::from_ternary_table_with(n, table, &CheckPolicy::default())
    }

    pub fn from_ternary_table_with(n: usize, table: &[usize], policy: &CheckPolicy) -> Result<Heap> {
        if n == 0 {
            return if table.is_empty() {
                Ok(Heap::empty())
            } else {
                Err(AlgebraError::Shape("empty heap with nonempty table".into()))
            };
        }
        if table.len() != n * n * n {
            return Err(AlgebraError::Shape(format!("ternary table must have {} entries", n * n * n)));
        }
        if let Some(pos) = table.iter().position(|&x| x >= n) {
            return Err(LawViolation::new(Law::Closure, [pos / (n * n), pos / n % n, pos % n]).into());
        }
        let t = |a: usize, b: usize, c: usize| table[(a * n + b) * n + c];
        for a in 0..n {
            for b in 0..n {
                if t(b, b, a) != a {
                    return Err(LawViolation::new(Law::MalcevLeft, [b, b, a]).into());
                }
                if t(a, b, b) != a {
                    return Err(LawViolation::new(Law::MalcevRight, [a, b, b]).into());
                }
            }
        }
        let exhaustive = n <= policy.ternary_limit;
        if let Some([a, b, c]) = find_tuple::<3>(n, exhaustive, policy, |[a, b, c]| t(a, b, c) == t(c, b, a)) {
            return Err(LawViolation::new(Law::HeapCommutativity, [a, b, c]).into());
        }
        if let Some(w) = find_tuple::<5>(n, exhaustive, policy, |[a, b, c, d, e]| {
            t(t(a, b, c), d, e) == t(a, b, t(c, d, e))
        }) {
            return Err(LawViolation::new(Law::HeapAssociativity, w).into());
        }
        let add = (0..n * n).map(|i| t(i / n, 0, i % n)).collect();
        Ok(Heap::from_group(AbGroup::from_parts_unchecked(n, add, 0)))
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.group.n
    }

    pub fn is_empty(&self) -> bool {
        self.group.n == 0
    }

    /// The element stored as zero of the internal retract.
    pub fn basepoint(&self) -> Option<usize> {
        (!self.is_empty()).then_some(self.group.zero)
    }

    /// The stored retract. Panics on the empty heap.
    pub fn stored_retract(&self) -> &AbGroup {
        assert!(!self.is_empty(), "empty heap has no retract");
        &self.group
    }

    #[inline]
    pub fn bracket(&self, a: usize, b: usize, c: usize) -> usize {
        self.group.add(self.group.sub(a, b), c)
    }

    pub fn label(&self, i: usize) -> String {
        self.group.label(i)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.group.labels()
    }

    pub fn with_labels(self, labels: Vec<String>) -> Result<Heap> {
        Ok(Heap {
            group: self.group.with_labels(labels)?,
        })
    }

    fn check_element(&self, e: usize) -> Result<()> {
        if self.is_empty() {
            return Err(AlgebraError::EmptyHeap);
        }
        if e >= self.order() {
            return Err(AlgebraError::OutOfRange(format!("{e} >= order {}", self.order())));
        }
        Ok(())
    }

    /// The `e`-retract: `a + b = [a,e,b]` with zero `e`.
    pub fn retract(&self, e: usize) -> Result<AbGroup> {
        self.check_element(e)?;
        let n = self.order();
        let add = (0..n * n).map(|i| self.bracket(i / n, e, i % n)).collect();
        Ok(AbGroup {
            n,
            add,
            neg: (0..n).map(|a| self.bracket(e, a, e)).collect(),
            zero: e,
            labels: self.group.labels.clone(),
        })
    }

    /// `a -> [a,e,e2]`, an isomorphism from the `e`-retract to the `e2`-retract.
    pub fn translate(&self, e: usize, e2: usize) -> Result<Vec<usize>> {
        self.check_element(e)?;
        self.check_element(e2)?;
        Ok((0..self.order()).map(|a| self.bracket(a, e, e2)).collect())
    }

    /// Product heap; the pair `(a, b)` has index `a * other.order() + b`.
    pub fn product(&self, other: &Heap) -> Result<Heap> {
        if self.is_empty() || other.is_empty() {
            return Err(AlgebraError::EmptyHeap);
        }
        Ok(Heap::from_group(self.group.product(&other.group)))
    }

    /// Returns a triple leaving `s` when `s` is not closed under the bracket.
    pub fn subheap_violation(&self, s: &Subset) -> Option<(usize, usize, usize)> {
        for &a in s.members() {
            for &b in s.members() {
                for &c in s.members() {
                    if !s.contains(self.bracket(a, b, c)) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    pub fn is_subheap(&self, s: &Subset) -> bool {
        self.subheap_violation(s).is_none()
    }

    fn require_subheap(&self, s: &Subset) -> Result<()> {
        if s.universe() != self.order() {
            return Err(AlgebraError::Shape(format!(
                "subset of {} elements for heap of order {}",
                s.universe(),
                self.order()
            )));
        }
        if s.is_empty() {
            return Err(AlgebraError::EmptySubHeap);
        }
        if let Some((a, b, c)) = self.subheap_violation(s) {
            return Err(AlgebraError::NotSubHeap(a, b, c));
        }
        Ok(())
    }

    /// Classes of `x ~ y <=> [x,y,p] in s for some p in s`.
    pub fn subheap_relation_classes(&self, s: &Subset) -> Result<Partition> {
        self.require_subheap(s)?;
        let n = self.order();
        let mut label = vec![usize::MAX; n];
        let mut next = 0;
        for x in 0..n {
            if label[x] != usize::MAX {
                continue;
            }
            for y in x..n {
                if label[y] == usize::MAX
                    && s.members().iter().any(|&p| s.contains(self.bracket(x, y, p)))
                {
                    label[y] = next;
                }
            }
            next += 1;
        }
        Ok(Partition::from_labels(&label))
    }

    /// The quotient heap on the classes of the sub-heap relation.
    pub fn quotient(&self, s: &Subset) -> Result<HeapQuotient> {
        let classes = self.subheap_relation_classes(s)?;
        let heap = quotient_heap_on(self, &classes)?;
        Ok(HeapQuotient { heap, classes })
    }

    /// Checks that `f` is a heap morphism into `cod`. Returns a triple
    /// `[a, b, c]` with `f([a,b,c]) != [f a, f b, f c]` on failure.
    pub fn morphism_violation(&self, cod: &Heap, f: &[usize]) -> Option<[usize; 3]> {
        let Some(e) = self.basepoint() else {
            return None;
        };
        // f is affine iff it preserves brackets with the middle entry fixed.
        for a in 0..self.order() {
            for b in 0..self.order() {
                if f[self.bracket(a, e, b)] != cod.bracket(f[a], f[e], f[b]) {
                    return Some([a, e, b]);
                }
            }
        }
        None
    }
}

/// A quotient heap with the partition it was built from.
#[derive(Debug, Clone)]
pub struct HeapQuotient {
    pub heap: Heap,
    pub classes: Partition,
}

impl HeapQuotient {
    pub fn projection(&self) -> &[usize] {
        self.classes.projection()
    }
}

/// Builds the heap on the classes of `classes`, verifying that the class
/// bracket is independent of representatives.
pub(crate) fn quotient_heap_on(h: &Heap, classes: &Partition) -> Result<Heap> {
    let k = classes.len();
    let base = h.basepoint().ok_or(AlgebraError::EmptyHeap)?;
    let z = classes.class_of(base);
    let rep = |c: usize| classes.representative(c);
    let add: Vec<usize> = (0..k * k)
        .map(|i| classes.class_of(h.bracket(rep(i / k), rep(z), rep(i % k))))
        .collect();
    let group = AbGroup::from_flat(k, add, z)
        .map_err(|e| AlgebraError::Internal(format!("quotient bracket ill-defined: {e}")))?;
    let labels = classes
        .classes()
        .iter()
        .map(|c| {
            let names: Vec<String> = c.members().iter().map(|&i| h.label(i)).collect();
            format!("{{{}}}", names.join(","))
        })
        .collect();
    let q = Heap::from_group(group.with_labels(labels)?);
    if let Some(w) = h.morphism_violation(&q, classes.projection()) {
        return Err(AlgebraError::Internal(format!(
            "projection is not a heap morphism at {w:?}"
        )));
    }
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z4() -> Heap {
        Heap::cyclic(4)
    }

    fn klein() -> AbGroup {
        AbGroup::from_flat(4, (0..16).map(|i| (i / 4) ^ (i % 4)).collect(), 0).unwrap()
    }

    #[test]
    fn singleton_heap() {
        let h = Heap::cyclic(1);
        assert_eq!(h.bracket(0, 0, 0), 0);
    }

    #[test]
    fn z4_bracket() {
        assert_eq!(z4().bracket(1, 2, 3), 2);
    }

    #[test]
    fn klein_malcev() {
        let h = Heap::from_group(klein());
        for a in 0..4 {
            for c in 0..4 {
                assert_eq!(h.bracket(a, a, c), c);
            }
        }
    }

    #[test]
    fn invalid_group_reports_first_law() {
        // 0 is not an identity for row 1.
        let err = AbGroup::new(vec![vec![0, 1], vec![0, 1]], 0).unwrap_err();
        assert!(matches!(err, AlgebraError::Law(LawViolation { law: Law::Identity, .. })));
        let err = AbGroup::new(vec![vec![0, 2], vec![1, 0]], 0).unwrap_err();
        assert!(matches!(err, AlgebraError::Law(LawViolation { law: Law::Closure, .. })));
    }

    #[test]
    fn nonassociative_loop_rejected() {
        // A commutative loop of order 5 that is not a group.
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 3, 4, 0, 1],
            vec![3, 4, 0, 1, 2],
            vec![4, 2, 1, 2, 0],
        ];
        assert!(AbGroup::new(t, 0).is_err());
    }

    fn ternary(h: &Heap) -> Vec<usize> {
        let n = h.order();
        (0..n * n * n)
            .map(|i| h.bracket(i / (n * n), i / n % n, i % n))
            .collect()
    }

    #[test]
    fn ternary_z4_accepted() {
        let h = Heap::from_ternary_table(4, &ternary(&z4())).unwrap();
        assert_eq!(h, z4());
        assert!(h.retract(0).unwrap().same_table(&AbGroup::cyclic(4)));
    }

    #[test]
    fn ternary_malcev_violation() {
        let mut t = vec![0; 8];
        for a in 0..2 {
            for b in 0..2 {
                for c in 0..2 {
                    t[(a * 2 + b) * 2 + c] = a ^ b ^ c;
                }
            }
        }
        t[0] = 1;
        let err = Heap::from_ternary_table(2, &t).unwrap_err();
        assert_eq!(err, AlgebraError::Law(LawViolation::new(Law::MalcevLeft, [0, 0, 0])));
    }

    #[test]
    fn ternary_xor_is_klein() {
        let t: Vec<usize> = (0..64).map(|i| (i / 16) ^ (i / 4 % 4) ^ (i % 4)).collect();
        let h = Heap::from_ternary_table(4, &t).unwrap();
        assert_eq!(h, Heap::from_group(klein()));
    }

    #[test]
    fn ternary_noncommutative_rejected() {
        // S3 heap a b^-1 c is associative and Mal'cev but not commutative.
        let perms: Vec<[usize; 3]> = vec![
            [0, 1, 2],
            [1, 0, 2],
            [0, 2, 1],
            [2, 1, 0],
            [1, 2, 0],
            [2, 0, 1],
        ];
        let idx = |p: [usize; 3]| perms.iter().position(|&q| q == p).unwrap();
        let mul = |a: usize, b: usize| {
            let (p, q) = (perms[a], perms[b]);
            idx([p[q[0]], p[q[1]], p[q[2]]])
        };
        let inv = |a: usize| (0..6).find(|&b| mul(a, b) == 0).unwrap();
        let t: Vec<usize> = (0..216)
            .map(|i| mul(mul(i / 36, inv(i / 6 % 6)), i % 6))
            .collect();
        let err = Heap::from_ternary_table(6, &t).unwrap_err();
        assert!(matches!(
            err,
            AlgebraError::Law(LawViolation { law: Law::HeapCommutativity, .. })
        ));
    }

    #[test]
    fn retract_round_trip_and_shifted_zero() {
        let h = z4();
        assert!(h.retract(0).unwrap().same_table(&AbGroup::cyclic(4)));
        let r1 = h.retract(1).unwrap();
        assert_eq!(r1.zero(), 1);
        for x in 0..4 {
            assert_eq!(r1.add(1, x), x);
        }
    }

    #[test]
    fn retracts_are_isomorphic_via_translate() {
        let h = Heap::from_group(AbGroup::cyclic_product(&[2, 4]));
        for e in 0..8 {
            for e2 in 0..8 {
                let f = h.translate(e, e2).unwrap();
                let (g1, g2) = (h.retract(e).unwrap(), h.retract(e2).unwrap());
                for a in 0..8 {
                    for b in 0..8 {
                        assert_eq!(f[g1.add(a, b)], g2.add(f[a], f[b]));
                    }
                }
            }
        }
    }

    #[test]
    fn translate_examples() {
        let h = z4();
        assert_eq!(h.translate(0, 1).unwrap()[2], 3);
        assert_eq!(h.translate(2, 2).unwrap(), vec![0, 1, 2, 3]);
        let there = h.translate(1, 3).unwrap();
        let back = h.translate(3, 1).unwrap();
        for a in 0..4 {
            assert_eq!(back[there[a]], a);
        }
    }

    #[test]
    fn subheap_classes() {
        let h = z4();
        let p = h
            .subheap_relation_classes(&Subset::new(4, [0, 2]).unwrap())
            .unwrap();
        assert_eq!(p.classes()[0].members(), &[0, 2]);
        assert_eq!(p.classes()[1].members(), &[1, 3]);
        let p = h.subheap_relation_classes(&Subset::full(4)).unwrap();
        assert_eq!(p.len(), 1);
        let p = h.subheap_relation_classes(&Subset::singleton(4, 3)).unwrap();
        assert_eq!(p.len(), 4);
    }

    #[test]
    fn empty_subheap_rejected() {
        let err = z4().subheap_relation_classes(&Subset::new(4, []).unwrap()).unwrap_err();
        assert_eq!(err.to_string(), "quotient by empty sub-heap undefined");
    }

    #[test]
    fn empty_heap_rejects_element_operations() {
        let h = Heap::empty();
        assert_eq!(h.retract(0).unwrap_err(), AlgebraError::EmptyHeap);
        assert_eq!(h.basepoint(), None);
        assert_eq!(Heap::from_ternary_table(0, &[]).unwrap().order(), 0);
    }

    #[test]
    fn quotients() {
        let h = z4();
        let q = h.quotient(&Subset::new(4, [0, 2]).unwrap()).unwrap();
        assert_eq!(q.heap.order(), 2);
        assert_eq!(q.projection(), &[0, 1, 0, 1]);
        assert_eq!(h.quotient(&Subset::full(4)).unwrap().heap.order(), 1);
        let q = h.quotient(&Subset::singleton(4, 0)).unwrap();
        assert_eq!(q.heap, h);
    }

    #[test]
    fn product_heap_indices() {
        let p = Heap::cyclic(2).product(&Heap::cyclic(3)).unwrap();
        assert_eq!(p.order(), 6);
        // (1,2) - (0,1) + (1,2) = (0,0)
        assert_eq!(p.bracket(5, 1, 5), 0);
        assert_eq!(p.label(5), "(1,2)");
    }
}
