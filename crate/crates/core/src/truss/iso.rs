//! Truss morphisms and isomorphism search.

use super::Truss;
use crate::error::Result;
use crate::groupid::{find_isomorphism_with, FiniteGroup};

/// First failure of `f` as a truss morphism `a -> b`, described in words.
pub fn truss_morphism_violation(a: &Truss, b: &Truss, f: &[usize]) -> Option<String> {
    if f.len() != a.order() || f.iter().any(|&y| y >= b.order()) {
        return Some("map has wrong length or leaves the codomain".into());
    }
    if let Some([x, y, z]) = a.heap().morphism_violation(b.heap(), f) {
        return Some(format!("bracket not preserved at [{x},{y},{z}]"));
    }
    for x in 0..a.order() {
        for y in 0..a.order() {
            if f[a.mul(x, y)] != b.mul(f[x], f[y]) {
                return Some(format!("product not preserved at ({x},{y})"));
            }
        }
    }
    None
}

/// Isomorphism-invariant data of one element, used to pair up basepoints.
fn signature(t: &Truss, x: usize) -> [usize; 4] {
    let n = t.order();
    [
        usize::from(t.mul(x, x) == x),
        (0..n).filter(|&y| t.mul(x, y) == y).count(),
        (0..n).filter(|&y| t.mul(y, x) == y).count(),
        (0..n).filter(|&y| t.mul(x, y) == x).count(),
    ]
}

/// A truss isomorphism `a -> b` as an index map. A heap isomorphism is a
/// group isomorphism of retracts at matched basepoints, so the search fixes
/// a basepoint of `a` with the rarest signature and runs the group search
/// once per candidate image, accepting only multiplicative maps.
pub fn find_truss_isomorphism(a: &Truss, b: &Truss) -> Result<Option<Vec<usize>>> {
    let n = a.order();
    if n != b.order() || a.sided() != b.sided() {
        return Ok(None);
    }
    if n == 0 {
        return Ok(Some(Vec::new()));
    }
    let sa: Vec<[usize; 4]> = (0..n).map(|x| signature(a, x)).collect();
    let sb: Vec<[usize; 4]> = (0..n).map(|x| signature(b, x)).collect();
    let (mut ka, mut kb) = (sa.clone(), sb.clone());
    ka.sort_unstable();
    kb.sort_unstable();
    if ka != kb {
        return Ok(None);
    }
    let count = |s: &[usize; 4]| sa.iter().filter(|t| *t == s).count();
    let pa = (0..n).min_by_key(|&x| (count(&sa[x]), x)).unwrap_or(0);
    let ga = FiniteGroup::from_abelian(&a.heap().retract(pa)?);
    for pb in (0..n).filter(|&y| sb[y] == sa[pa]) {
        let gb = FiniteGroup::from_abelian(&b.heap().retract(pb)?);
        let found = find_isomorphism_with(&ga, &gb, |f| {
            (0..n).all(|x| (0..n).all(|y| f[a.mul(x, y)] == b.mul(f[x], f[y])))
        })?;
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{za_truss, zn_truss};

    #[test]
    fn reflexive_and_distinguishing() {
        let t = zn_truss(6);
        let f = find_truss_isomorphism(&t, &t).unwrap().unwrap();
        assert!(truss_morphism_violation(&t, &t, &f).is_none());
        assert!(find_truss_isomorphism(&zn_truss(4), &za_truss(2, 4)).unwrap().is_none());
    }

    #[test]
    fn relabelled_truss_is_isomorphic() {
        // Z^(1)/3Z: m*n = mn + m + n is T(Z3) transported along m -> m + 1.
        let a = zn_truss(3);
        let b = za_truss(1, 3);
        let f = find_truss_isomorphism(&a, &b).unwrap().unwrap();
        assert!(truss_morphism_violation(&a, &b, &f).is_none());
        assert_eq!(f[1], 0);
    }
}
