//! Braces: an abelian group and a group on one carrier, sharing the neutral
//! element, with `a(b + c) = ab - a + ac` (and its mirror when two-sided).

use serde::Serialize;

use crate::check::{find_tuple, CheckPolicy, LawReport};
use crate::error::{AlgebraError, Law, Result};
use crate::groupid::FiniteGroup;
use crate::heap::{AbGroup, Heap};
use crate::subset::Subset;
use crate::truss::{is_normal_paragon, units, Sided, Truss};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Brace {
    add: AbGroup,
    mul: FiniteGroup,
    sided: Sided,
}

pub fn validate_brace(add: &AbGroup, mul: &FiniteGroup, sided: Sided, policy: &CheckPolicy) -> LawReport {
    let n = add.order();
    let exhaustive = policy.exhaustive(n);
    let mut report = LawReport::new(format!("{sided} brace"), n, exhaustive);
    if mul.order() != n {
        report.record(Law::Closure, Some(vec![n, mul.order()]));
        return report;
    }
    report.record(Law::Closure, None);
    report.record(
        Law::SharedNeutral,
        (add.zero() != mul.identity()).then(|| vec![add.zero(), mul.identity()]),
    );
    let m = |a: usize, b: usize| mul.mul(a, b);
    let left = find_tuple::<3>(n, exhaustive, policy, |[a, b, c]| {
        m(a, add.add(b, c)) == add.add(add.sub(m(a, b), a), m(a, c))
    });
    report.record(Law::BraceLeftDistributivity, left.map(Vec::from));
    match sided {
        Sided::TwoSided => {
            let right = find_tuple::<3>(n, exhaustive, policy, |[a, b, c]| {
                m(add.add(b, c), a) == add.add(add.sub(m(b, a), a), m(c, a))
            });
            report.record(Law::BraceRightDistributivity, right.map(Vec::from));
        }
        Sided::Left => report.skip(Law::BraceRightDistributivity, "left brace"),
    }
    report
}

impl Brace {
    pub fn new(add: AbGroup, mul: FiniteGroup, sided: Sided) -> Result<Brace> {
        if let Some(v) = validate_brace(&add, &mul, sided, &CheckPolicy::default()).first_failure() {
            return Err(v.into());
        }
        Ok(Brace { add, mul, sided })
    }

    pub fn order(&self) -> usize {
        self.add.order()
    }

    pub fn additive(&self) -> &AbGroup {
        &self.add
    }

    pub fn multiplicative(&self) -> &FiniteGroup {
        &self.mul
    }

    pub fn sided(&self) -> Sided {
        self.sided
    }

    /// The shared neutral element.
    pub fn one(&self) -> usize {
        self.mul.identity()
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add.add(a, b)
    }

    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add.sub(a, b)
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul.mul(a, b)
    }

    pub fn label(&self, i: usize) -> String {
        self.add.label(i)
    }

    pub fn validate(&self, policy: &CheckPolicy) -> LawReport {
        validate_brace(&self.add, &self.mul, self.sided, policy)
    }

    /// The additive coset `c + S`.
    pub fn additive_coset(&self, c: usize, s: &Subset) -> Subset {
        s.map(self.order(), |a| self.add(c, a))
    }
}

/// `B = (T, [-,1,-], .)` for a truss whose multiplication is a group.
pub fn brace_from_truss(t: &Truss) -> Result<Brace> {
    let one = t.identity().ok_or(AlgebraError::NoIdentity)?;
    let u = units(t)?;
    if u.len() != t.order() {
        let missing = (0..t.order()).filter(|&x| !u.contains(x)).collect();
        return Err(AlgebraError::NotAGroup(missing));
    }
    let add = t.heap().retract(one)?;
    let mul = FiniteGroup::from_flat(t.order(), t.table().to_vec())?;
    let mul = match add.labels() {
        Some(l) => mul.with_labels(l.to_vec()),
        None => mul,
    };
    Brace::new(add, mul, t.sided())
}

/// `T(B)` with `[a,b,c] = a - b + c`.
pub fn truss_from_brace(b: &Brace) -> Result<Truss> {
    Truss::new(Heap::from_group(b.add.clone()), b.mul.table().to_vec(), b.sided)
        .map_err(|e| AlgebraError::Internal(format!("brace truss failed validation: {e}")))
}

/// `Soc(B) = {a : ab = a + b for all b}`.
pub fn socle(b: &Brace) -> Subset {
    let n = b.order();
    Subset::from_mask((0..n).map(|a| (0..n).all(|x| b.mul(a, x) == b.add(a, x))).collect())
}

/// A normal subgroup of `(B, .)` with `bs - b` in `S` for all `b` and `s in S`,
/// i.e. closed under `λ^1(b, s) = [bs, b, 1]`.
pub fn is_brace_ideal(b: &Brace, s: &Subset) -> bool {
    !s.is_empty()
        && b.mul.is_normal(s)
        && s.members()
            .iter()
            .all(|&x| (0..b.order()).all(|y| s.contains(b.sub(b.mul(y, x), y))))
}

/// Every ideal, found among the normal subgroups of `(B, .)`.
pub fn ideals(b: &Brace) -> Vec<Subset> {
    b.mul.subgroups().into_iter().filter(|s| is_brace_ideal(b, s)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdealParagonReport {
    pub members: Vec<usize>,
    pub is_ideal: bool,
    pub normal_paragon: bool,
    pub contains_one: bool,
    /// `S` is a class `c + I` of `B/I` for some ideal `I` (smallest such `I` listed).
    pub quotient_class_of: Option<Vec<usize>>,
}

impl IdealParagonReport {
    /// Ideal iff normal paragon containing 1.
    pub fn ideal_equivalence(&self) -> bool {
        self.is_ideal == (self.normal_paragon && self.contains_one)
    }

    /// Class of some `B/I` iff normal paragon.
    pub fn quotient_equivalence(&self) -> bool {
        self.quotient_class_of.is_some() == self.normal_paragon
    }
}

/// Evaluates both sides of both equivalences for `s`, with the ideals of `b`
/// precomputed by [`ideals`].
pub fn ideal_iff_normal_paragon(b: &Brace, truss: &Truss, ideals: &[Subset], s: &Subset) -> IdealParagonReport {
    let quotient_class_of = ideals
        .iter()
        .filter(|i| i.len() == s.len())
        .find(|i| s.first().is_some_and(|c| &b.additive_coset(c, i) == s))
        .map(|i| i.members().to_vec());
    IdealParagonReport {
        members: s.members().to_vec(),
        is_ideal: is_brace_ideal(b, s),
        normal_paragon: !s.is_empty() && is_normal_paragon(truss, s),
        contains_one: s.contains(b.one()),
        quotient_class_of,
    }
}

/// The brace on `U(T)` when the units form a sub-heap; element `i` of the
/// result is the `i`-th unit in increasing order.
pub fn units_brace(t: &Truss) -> Result<(Brace, Vec<usize>)> {
    let one = t.identity().ok_or(AlgebraError::NoIdentity)?;
    let u = units(t)?;
    if let Some((a, b, c)) = t.heap().subheap_violation(&u) {
        return Err(AlgebraError::NotSubHeap(a, b, c));
    }
    let members = u.members().to_vec();
    let k = members.len();
    let mut index = vec![usize::MAX; t.order()];
    for (i, &x) in members.iter().enumerate() {
        index[x] = i;
    }
    let sub = |f: &dyn Fn(usize, usize) -> usize| -> Vec<usize> {
        (0..k * k).map(|i| index[f(members[i / k], members[i % k])]).collect()
    };
    let add = sub(&|a, b| t.bracket(a, one, b));
    let mul = sub(&|a, b| t.mul(a, b));
    let labels: Vec<String> = members.iter().map(|&x| t.label(x)).collect();
    let add = AbGroup::from_flat(k, add, index[one])?.with_labels(labels.clone())?;
    let mul = FiniteGroup::from_flat(k, mul)?.with_labels(labels);
    Ok((Brace::new(add, mul, t.sided())?, members))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{s3_left_brace, za_truss, zn_truss};
    use crate::groupid::abelian_invariants;

    fn set(n: usize, xs: &[usize]) -> Subset {
        Subset::new(n, xs.iter().copied()).unwrap()
    }

    #[test]
    fn za4_brace() {
        let b = brace_from_truss(&za_truss(2, 4)).unwrap();
        assert_eq!(b.one(), 0);
        assert_eq!(abelian_invariants(&FiniteGroup::from_abelian(b.additive())).unwrap(), vec![4]);
        assert_eq!(abelian_invariants(b.multiplicative()).unwrap(), vec![2, 2]);
        assert_eq!(socle(&b), set(4, &[0, 2]));
        assert!(is_brace_ideal(&b, &socle(&b)));
        assert!(is_brace_ideal(&b, &set(4, &[0])));
    }

    #[test]
    fn round_trip() {
        let t = za_truss(2, 4);
        let b = brace_from_truss(&t).unwrap();
        let back = truss_from_brace(&b).unwrap();
        assert_eq!(back.table(), t.table());
        assert_eq!(back.heap(), t.heap());
        assert_eq!(brace_from_truss(&back).unwrap(), b);
    }

    #[test]
    fn trivial_brace() {
        let t = zn_truss(1);
        let b = brace_from_truss(&t).unwrap();
        assert_eq!(b.order(), 1);
        assert_eq!(socle(&b).len(), 1);
    }

    #[test]
    fn not_a_group() {
        assert!(matches!(brace_from_truss(&zn_truss(4)), Err(AlgebraError::NotAGroup(v)) if v == vec![0, 2]));
    }

    #[test]
    fn left_brace_gives_left_truss() {
        let b = s3_left_brace();
        assert_eq!(b.sided(), Sided::Left);
        let t = truss_from_brace(&b).unwrap();
        assert_eq!(t.sided(), Sided::Left);
        assert!(Brace::new(b.additive().clone(), b.multiplicative().clone(), Sided::TwoSided).is_err());
    }

    #[test]
    fn units_braces() {
        let (b, members) = units_brace(&zn_truss(4)).unwrap();
        assert_eq!(members, vec![1, 3]);
        assert_eq!(b.order(), 2);
        assert_eq!(socle(&b).len(), 2);
        assert!(matches!(units_brace(&zn_truss(6)), Err(AlgebraError::NotSubHeap(..))));
    }

    #[test]
    fn ideal_report_on_za4() {
        let t = za_truss(2, 4);
        let b = brace_from_truss(&t).unwrap();
        let ids = ideals(&b);
        let r = ideal_iff_normal_paragon(&b, &t, &ids, &socle(&b));
        assert!(r.is_ideal && r.normal_paragon && r.contains_one);
        assert!(r.ideal_equivalence() && r.quotient_equivalence());
        let coset = b.additive_coset(1, &socle(&b));
        let r = ideal_iff_normal_paragon(&b, &t, &ids, &coset);
        assert!(!r.is_ideal && r.normal_paragon && !r.contains_one);
        assert!(r.ideal_equivalence() && r.quotient_equivalence());
        let r = ideal_iff_normal_paragon(&b, &t, &ids, &set(4, &[0, 1]));
        assert!(!r.is_ideal && !r.normal_paragon);
    }
}
