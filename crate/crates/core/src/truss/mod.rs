//! Trusses: an abelian heap with an associative multiplication that
//! distributes over the bracket (on the left only, for left trusses).

mod iso;
mod paragon;
mod units;

pub use iso::{find_truss_isomorphism, truss_morphism_violation};
pub use paragon::{
    is_normal_paragon, is_paragon, lambda_q, quotient_by_partition, quotient_truss, rho_q,
    ClosureViolation, Paragon, ParagonCheck, ParagonKind, TrussQuotient,
};
pub use units::{inverse_of, odd_multiple_check, units, units_paragon_report, UnitsParagonReport};

use serde::{Deserialize, Serialize};

use crate::check::{find_tuple, CheckPolicy, LawReport};
use crate::error::{AlgebraError, Law, Result};
use crate::heap::{AbGroup, Heap};
use crate::subset::Subset;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sided {
    #[serde(rename = "two-sided")]
    TwoSided,
    #[serde(rename = "left")]
    Left,
}

impl std::fmt::Display for Sided {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Sided::TwoSided => "two-sided",
            Sided::Left => "left",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Truss {
    heap: Heap,
    mul: Vec<usize>,
    sided: Sided,
    identity: Option<usize>,
    absorber: Option<usize>,
}

impl Truss {
    /// Validates the multiplication against the heap and records the
    /// identity and absorber when present.
    pub fn new(heap: Heap, mul: Vec<usize>, sided: Sided) -> Result<Truss> {
        Self::new_with(heap, mul, sided, &CheckPolicy::default())
    }

    pub fn new_with(heap: Heap, mul: Vec<usize>, sided: Sided, policy: &CheckPolicy) -> Result<Truss> {
        if heap.is_empty() {
            return Err(AlgebraError::EmptyHeap);
        }
        let report = validate_truss(&heap, &mul, sided, policy);
        if let Some(v) = report.first_failure() {
            return Err(v.into());
        }
        Ok(Self::from_parts_unchecked(heap, mul, sided))
    }

    pub fn from_rows(heap: Heap, mul: Vec<Vec<usize>>, sided: Sided) -> Result<Truss> {
        let n = heap.order();
        if mul.len() != n || mul.iter().any(|r| r.len() != n) {
            return Err(AlgebraError::Shape(format!("multiplication table must be {n}x{n}")));
        }
        Truss::new(heap, mul.into_iter().flatten().collect(), sided)
    }

    pub(crate) fn from_parts_unchecked(heap: Heap, mul: Vec<usize>, sided: Sided) -> Truss {
        let n = heap.order();
        let m = |a: usize, b: usize| mul[a * n + b];
        let identity = (0..n).find(|&e| (0..n).all(|a| m(e, a) == a && m(a, e) == a));
        let absorber = (0..n).find(|&z| (0..n).all(|a| m(z, a) == z && m(a, z) == z));
        Truss {
            heap,
            mul,
            sided,
            identity,
            absorber,
        }
    }

    /// `T(R)` for a ring given by its additive group and multiplication
    /// table. Ring laws are checked; the additive zero becomes the absorber.
    pub fn from_ring(add: AbGroup, mul: Vec<usize>) -> Result<Truss> {
        let n = add.order();
        if mul.len() != n * n {
            return Err(AlgebraError::Shape(format!("ring table must have {} entries", n * n)));
        }
        if let Some(pos) = mul.iter().position(|&x| x >= n) {
            return Err(AlgebraError::OutOfRange(format!(
                "product ({},{}) out of range",
                pos / n,
                pos % n
            )));
        }
        let policy = CheckPolicy::default();
        let ex = policy.exhaustive(n);
        let m = |a: usize, b: usize| mul[a * n + b];
        let checks: [(Law, &dyn Fn([usize; 3]) -> bool); 3] = [
            (Law::MulAssociativity, &|[a, b, c]| m(m(a, b), c) == m(a, m(b, c))),
            (Law::RingLeftDistributivity, &|[a, b, c]| {
                m(a, add.add(b, c)) == add.add(m(a, b), m(a, c))
            }),
            (Law::RingRightDistributivity, &|[a, b, c]| {
                m(add.add(b, c), a) == add.add(m(b, a), m(c, a))
            }),
        ];
        for (law, f) in checks {
            if let Some(w) = find_tuple::<3>(n, ex, &policy, f) {
                return Err(crate::error::LawViolation::new(law, w).into());
            }
        }
        let zero = add.zero();
        let t = Truss::from_parts_unchecked(Heap::from_group(add), mul, Sided::TwoSided);
        if t.absorber != Some(zero) {
            return Err(AlgebraError::Internal("ring zero is not an absorber".into()));
        }
        Ok(t)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.heap.order()
    }

    pub fn heap(&self) -> &Heap {
        &self.heap
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.heap.order() + b]
    }

    #[inline]
    pub fn bracket(&self, a: usize, b: usize, c: usize) -> usize {
        self.heap.bracket(a, b, c)
    }

    pub fn table(&self) -> &[usize] {
        &self.mul
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.mul.chunks(self.order()).map(<[usize]>::to_vec).collect()
    }

    pub fn sided(&self) -> Sided {
        self.sided
    }

    pub fn identity(&self) -> Option<usize> {
        self.identity
    }

    pub fn absorber(&self) -> Option<usize> {
        self.absorber
    }

    pub fn is_ring_type(&self) -> bool {
        self.absorber.is_some()
    }

    pub fn label(&self, i: usize) -> String {
        self.heap.label(i)
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (a + 1..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_idempotent(&self, a: usize) -> bool {
        self.mul(a, a) == a
    }

    pub fn validate(&self, policy: &CheckPolicy) -> LawReport {
        validate_truss(&self.heap, &self.mul, self.sided, policy)
    }

    /// Same heap, multiplication `a * b := b a`. Left trusses have no
    /// opposite in this representation.
    pub fn opposite(&self) -> Result<Truss> {
        if self.sided == Sided::Left {
            return Err(AlgebraError::LeftTruss("opposite of a left truss is a right truss"));
        }
        let n = self.order();
        let mul = (0..n * n).map(|i| self.mul(i % n, i / n)).collect();
        Ok(Truss::from_parts_unchecked(self.heap.clone(), mul, Sided::TwoSided))
    }

    /// Absorbs every product with one factor in `s`, on both sides.
    pub fn is_ideal_set(&self, s: &Subset) -> bool {
        self.heap.is_subheap(s)
            && s.members().iter().all(|&x| {
                (0..self.order()).all(|t| s.contains(self.mul(t, x)) && s.contains(self.mul(x, t)))
            })
    }

    /// Sub-heap closed under multiplication.
    pub fn is_subtruss(&self, s: &Subset) -> bool {
        self.heap.is_subheap(s)
            && s.members()
                .iter()
                .all(|&a| s.members().iter().all(|&b| s.contains(self.mul(a, b))))
    }
}

/// Law-by-law validation of a candidate truss. Distributivity is checked
/// through the affine characterization: `x -> a x` preserves brackets iff it
/// preserves every bracket `[b, o, d]` with the basepoint `o` in the middle.
/// Right distributivity is skipped for left trusses.
pub fn validate_truss(heap: &Heap, mul: &[usize], sided: Sided, policy: &CheckPolicy) -> LawReport {
    let n = heap.order();
    let exhaustive = policy.exhaustive(n);
    let mut report = LawReport::new(format!("{sided} truss"), n, exhaustive);
    if mul.len() != n * n {
        report.record(Law::Closure, Some(vec![mul.len()]));
        return report;
    }
    if let Some(pos) = mul.iter().position(|&x| x >= n) {
        report.record(Law::Closure, Some(vec![pos / n, pos % n]));
        return report;
    }
    report.record(Law::Closure, None);
    let Some(o) = heap.basepoint() else {
        return report;
    };
    let m = |a: usize, b: usize| mul[a * n + b];
    let assoc = find_tuple::<3>(n, exhaustive, policy, |[a, b, c]| m(m(a, b), c) == m(a, m(b, c)));
    report.record(Law::MulAssociativity, assoc.map(Vec::from));
    let left = find_tuple::<3>(n, exhaustive, policy, |[a, b, d]| {
        m(a, heap.bracket(b, o, d)) == heap.bracket(m(a, b), m(a, o), m(a, d))
    });
    report.record(Law::LeftDistributivity, left.map(|[a, b, d]| vec![a, b, o, d]));
    match sided {
        Sided::TwoSided => {
            let right = find_tuple::<3>(n, exhaustive, policy, |[a, b, d]| {
                m(heap.bracket(b, o, d), a) == heap.bracket(m(b, a), m(o, a), m(d, a))
            });
            report.record(Law::RightDistributivity, right.map(|[a, b, d]| vec![a, b, o, d]));
        }
        Sided::Left => report.skip(Law::RightDistributivity, "left truss"),
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::check::LawStatus;

    fn zn_mul(n: usize) -> Vec<usize> {
        (0..n * n).map(|i| (i / n) * (i % n) % n).collect()
    }

    #[test]
    fn z4_ring_truss() {
        let t = Truss::from_ring(AbGroup::cyclic(4), zn_mul(4)).unwrap();
        assert_eq!(t.absorber(), Some(0));
        assert_eq!(t.identity(), Some(1));
        assert!(t.validate(&CheckPolicy::default()).passed());
    }

    #[test]
    fn zero_ring_on_z2() {
        let t = Truss::from_ring(AbGroup::cyclic(2), vec![0; 4]).unwrap();
        assert_eq!(t.absorber(), Some(0));
        assert_eq!(t.identity(), None);
    }

    #[test]
    fn klein_ring() {
        // Z2 x Z2 with componentwise product.
        let g = AbGroup::cyclic_product(&[2, 2]);
        let mul = (0..16)
            .map(|i| {
                let (x, y) = (i / 4, i % 4);
                ((x / 2) * (y / 2)) * 2 + (x % 2) * (y % 2)
            })
            .collect();
        let t = Truss::from_ring(g, mul).unwrap();
        assert_eq!(t.order(), 4);
        assert_eq!(t.identity(), Some(3));
    }

    #[test]
    fn constant_multiplication_truss() {
        for c in 0..4 {
            let r = validate_truss(&Heap::cyclic(4), &[c; 16], Sided::TwoSided, &CheckPolicy::default());
            assert!(r.passed(), "constant {c}");
        }
    }

    #[test]
    fn subtraction_is_not_associative() {
        let mul: Vec<usize> = (0..16).map(|i| (i / 4 + 4 - i % 4) % 4).collect();
        let r = validate_truss(&Heap::cyclic(4), &mul, Sided::TwoSided, &CheckPolicy::default());
        assert!(matches!(r.status(Law::MulAssociativity), Some(LawStatus::Failed(_))));
        let err = Truss::new(Heap::cyclic(4), mul, Sided::TwoSided).unwrap_err();
        assert!(matches!(err, AlgebraError::Law(_)));
    }

    #[test]
    fn left_truss_skips_right_law() {
        // a * b = h(a) with h idempotent but not affine: left truss only.
        let h = [0usize, 0, 2];
        let mul: Vec<usize> = (0..9).map(|i| h[i / 3]).collect();
        let two = validate_truss(&Heap::cyclic(3), &mul, Sided::TwoSided, &CheckPolicy::default());
        assert!(matches!(two.status(Law::RightDistributivity), Some(LawStatus::Failed(_))));
        let left = validate_truss(&Heap::cyclic(3), &mul, Sided::Left, &CheckPolicy::default());
        assert!(left.passed());
        assert!(matches!(left.status(Law::RightDistributivity), Some(LawStatus::Skipped(_))));
    }

    #[test]
    fn ring_law_violation_reported() {
        // x*y = 1 everywhere is associative but not distributive over +.
        let err = Truss::from_ring(AbGroup::cyclic(3), vec![1; 9]).unwrap_err();
        assert!(matches!(
            err,
            AlgebraError::Law(crate::error::LawViolation { law: Law::RingLeftDistributivity, .. })
        ));
    }

    #[test]
    fn opposite_of_left_truss_rejected() {
        let t = Truss::new(Heap::cyclic(3), vec![0, 0, 0, 0, 0, 0, 2, 2, 2], Sided::Left).unwrap();
        assert!(t.opposite().is_err());
    }
}
