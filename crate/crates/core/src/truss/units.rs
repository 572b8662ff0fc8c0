//! Units of a unital truss and the question of when they form a paragon.

use serde::Serialize;

use super::{find_truss_isomorphism, is_paragon, quotient_truss, ParagonKind, Truss};
use crate::catalog::zn_truss;
use crate::error::{AlgebraError, Result};
use crate::subset::Subset;

/// Two-sided inverse of `u`, if any.
pub fn inverse_of(t: &Truss, u: usize) -> Option<usize> {
    let one = t.identity()?;
    (0..t.order()).find(|&v| t.mul(u, v) == one && t.mul(v, u) == one)
}

pub fn units(t: &Truss) -> Result<Subset> {
    if t.identity().is_none() {
        return Err(AlgebraError::NoIdentity);
    }
    let n = t.order();
    Ok(Subset::from_mask((0..n).map(|u| inverse_of(t, u).is_some()).collect()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UnitsParagonReport {
    pub order: usize,
    pub units: Vec<usize>,
    pub is_subheap: bool,
    pub paragon_kind: ParagonKind,
    pub is_paragon: bool,
    /// Number of classes of `T/U` when `U` is a paragon.
    pub quotient_order: Option<usize>,
    /// `T/U` has two classes and is isomorphic to `T(Z2)`.
    pub quotient_is_z2: bool,
    /// Every `r` has `r` or `1 - r` a unit.
    pub thm_z2_predicate: bool,
    /// `(paragon and quotient_is_z2) == thm_z2_predicate`.
    pub thm_z2_consistent: bool,
    /// In the quotient, the class of 1 added to itself is the absorber class.
    pub char2: Option<bool>,
    /// Differences of units are never units.
    pub differences_avoid_units: Option<bool>,
}

/// Computes each part of the report independently: the predicate on
/// `r` and `1 - r` never consults the paragon classification.
pub fn units_paragon_report(t: &Truss) -> Result<UnitsParagonReport> {
    let one = t.identity().ok_or(AlgebraError::NoIdentity)?;
    let zero = t.absorber().ok_or(AlgebraError::NoAbsorber)?;
    let u = units(t)?;
    let check = is_paragon(t, &u);
    let is_subheap = t.heap().is_subheap(&u);
    let paragon = check.kind.is_two_sided();
    let (mut quotient_order, mut quotient_is_z2, mut char2, mut diffs) = (None, false, None, None);
    if paragon {
        let q = quotient_truss(t, &u)?;
        let k = q.truss.order();
        quotient_order = Some(k);
        quotient_is_z2 = k == 2 && find_truss_isomorphism(&q.truss, &zn_truss(2))?.is_some();
        let (c1, cz) = (q.classes.class_of(one), q.classes.class_of(zero));
        char2 = Some(q.truss.bracket(c1, cz, c1) == cz);
        diffs = Some(u.members().iter().all(|&a| {
            u.members()
                .iter()
                .all(|&b| !u.contains(t.bracket(a, b, zero)))
        }));
    }
    let predicate = (0..t.order()).all(|r| u.contains(r) || u.contains(t.bracket(one, r, zero)));
    Ok(UnitsParagonReport {
        order: t.order(),
        units: u.members().to_vec(),
        is_subheap,
        paragon_kind: check.kind,
        is_paragon: paragon,
        quotient_order,
        quotient_is_z2,
        thm_z2_predicate: predicate,
        thm_z2_consistent: (paragon && quotient_is_z2) == predicate,
        char2,
        differences_avoid_units: diffs,
    })
}

/// For every unit `u` and `1 <= j <= n`, the additive multiple `j u` (taken
/// in the retract at the absorber) is a unit iff `j` is odd.
pub fn odd_multiple_check(t: &Truss) -> Result<bool> {
    let zero = t.absorber().ok_or(AlgebraError::NoAbsorber)?;
    let u = units(t)?;
    if !is_paragon(t, &u).kind.is_two_sided() {
        return Err(AlgebraError::NotParagon("units".into()));
    }
    let g = t.heap().retract(zero)?;
    let n = t.order();
    Ok(u.members().iter().all(|&x| {
        (1..=n).all(|j| u.contains(g.multiple(j as i64, x)) == (j % 2 == 1))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_sets() {
        assert_eq!(units(&zn_truss(4)).unwrap().members(), &[1, 3]);
        assert_eq!(units(&zn_truss(2)).unwrap().members(), &[1]);
        assert_eq!(units(&zn_truss(12)).unwrap().members(), &[1, 5, 7, 11]);
        assert_eq!(inverse_of(&zn_truss(7), 3), Some(5));
    }

    #[test]
    fn z4_report() {
        let r = units_paragon_report(&zn_truss(4)).unwrap();
        assert!(r.is_paragon && r.thm_z2_predicate && r.quotient_is_z2);
        assert_eq!(r.char2, Some(true));
        assert_eq!(r.differences_avoid_units, Some(true));
    }

    #[test]
    fn z6_report() {
        let r = units_paragon_report(&zn_truss(6)).unwrap();
        assert!(!r.is_paragon);
        assert!(!r.is_subheap);
        assert!(!r.thm_z2_predicate);
        assert!(r.thm_z2_consistent);
    }

    #[test]
    fn odd_multiples() {
        assert!(odd_multiple_check(&zn_truss(4)).unwrap());
        assert!(odd_multiple_check(&zn_truss(8)).unwrap());
        assert!(odd_multiple_check(&zn_truss(6)).is_err());
    }
}
