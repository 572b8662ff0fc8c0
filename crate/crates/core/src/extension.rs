//! The extension truss `T[M;e]` on `T x M` with
//! `(t,x)(t',x') = (tt', [x, t.e, t.x'])`, and its structural properties.

use serde::Serialize;

use crate::check::CheckPolicy;
use crate::error::{AlgebraError, Result};
use crate::subset::{Partition, Subset};
use crate::tmodule::{module_morphism_violation, TModule};
use crate::truss::{
    find_truss_isomorphism, is_paragon, quotient_truss, truss_morphism_violation, units, validate_truss, ParagonKind,
    Sided, Truss,
};

#[derive(Debug, Clone)]
pub struct ExtTruss {
    module: TModule,
    anchor: usize,
    truss: Truss,
}

/// Builds `T[M;e]` and re-verifies every truss law on the result. Pairs
/// `(t, x)` are stored at index `t * |M| + x`.
pub fn extend(module: &TModule, e: usize) -> Result<ExtTruss> {
    extend_with(module, e, &CheckPolicy::default())
}

pub fn extend_with(module: &TModule, e: usize, policy: &CheckPolicy) -> Result<ExtTruss> {
    let base = module.truss();
    let (n, m) = (base.order(), module.order());
    if e >= m {
        return Err(AlgebraError::OutOfRange(format!("anchor {e} not below {m}")));
    }
    let heap = base.heap().product(module.heap())?;
    let k = n * m;
    let mul: Vec<usize> = (0..k * k)
        .map(|i| {
            let ((t, x), (t2, x2)) = ((i / k / m, i / k % m), (i % k / m, i % k % m));
            base.mul(t, t2) * m + module.bracket(x, module.act(t, e), module.act(t, x2))
        })
        .collect();
    let report = validate_truss(&heap, &mul, base.sided(), policy);
    if let Some(v) = report.first_failure() {
        return Err(AlgebraError::Internal(format!("extension violates {v}")));
    }
    Ok(ExtTruss {
        module: module.clone(),
        anchor: e,
        truss: Truss::from_parts_unchecked(heap, mul, base.sided()),
    })
}

impl ExtTruss {
    pub fn truss(&self) -> &Truss {
        &self.truss
    }

    pub fn base(&self) -> &Truss {
        self.module.truss()
    }

    pub fn module(&self) -> &TModule {
        &self.module
    }

    pub fn anchor(&self) -> usize {
        self.anchor
    }

    pub fn order(&self) -> usize {
        self.truss.order()
    }

    #[inline]
    pub fn pair(&self, t: usize, x: usize) -> usize {
        t * self.module.order() + x
    }

    #[inline]
    pub fn unpair(&self, i: usize) -> (usize, usize) {
        (i / self.module.order(), i % self.module.order())
    }

    /// `(t,x) . x' = [x, t.e, t.x']`
    pub fn action(&self, p: usize, x2: usize) -> usize {
        let (t, x) = self.unpair(p);
        let md = &self.module;
        md.bracket(x, md.act(t, self.anchor), md.act(t, x2))
    }

    /// `M` as a module over `T[M;e]`, validated.
    pub fn action_module(&self) -> Result<TModule> {
        let m = self.module.order();
        let action = (0..self.order() * m).map(|i| self.action(i / m, i % m)).collect();
        TModule::new(self.truss.clone(), self.module.heap().clone(), action)
    }

    /// `M_a = {a} x M`.
    pub fn fiber(&self, a: usize) -> Subset {
        let m = self.module.order();
        Subset::new(self.order(), (0..m).map(|x| self.pair(a, x))).expect("fiber in range")
    }

    /// `T_e = T x {e}`.
    pub fn base_copy(&self) -> Subset {
        let n = self.base().order();
        Subset::new(self.order(), (0..n).map(|t| self.pair(t, self.anchor))).expect("in range")
    }
}

/// `(t,x) -> (t, [x, e, e2])`, verified to be an isomorphism onto `T[M;e2]`.
pub fn theta_iso(ext: &ExtTruss, e2: usize) -> Result<(ExtTruss, Vec<usize>)> {
    let target = extend(&ext.module, e2)?;
    let map: Vec<usize> = (0..ext.order())
        .map(|i| {
            let (t, x) = ext.unpair(i);
            ext.pair(t, ext.module.bracket(x, ext.anchor, e2))
        })
        .collect();
    let mut seen = vec![false; map.len()];
    for &y in &map {
        if std::mem::replace(&mut seen[y], true) {
            return Err(AlgebraError::Internal("theta is not injective".into()));
        }
    }
    if let Some(v) = truss_morphism_violation(ext.truss(), target.truss(), &map) {
        return Err(AlgebraError::Internal(format!("theta: {v}")));
    }
    Ok((target, map))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiberReport {
    pub a: usize,
    pub kind: ParagonKind,
    pub is_ideal: bool,
    pub a_is_absorber: bool,
    /// Class of `(t,x)` depends only on `t`, and class -> `t` is a truss isomorphism onto the base.
    pub quotient_is_base: bool,
}

impl FiberReport {
    pub fn passed(&self, sided: Sided) -> bool {
        let paragon = match sided {
            Sided::TwoSided => self.kind.is_two_sided(),
            Sided::Left => self.kind.is_left(),
        };
        paragon && self.is_ideal == self.a_is_absorber && self.quotient_is_base
    }
}

pub fn fiber_paragon(ext: &ExtTruss, a: usize) -> Result<FiberReport> {
    let base = ext.base();
    if a >= base.order() {
        return Err(AlgebraError::OutOfRange(format!("base index {a}")));
    }
    let fiber = ext.fiber(a);
    let check = is_paragon(ext.truss(), &fiber);
    let a_is_absorber = base.absorber() == Some(a);
    let is_ideal = match base.sided() {
        Sided::TwoSided => check.ideal,
        Sided::Left => ext.truss().is_ideal_set(&fiber),
    };
    let quotient_is_base = if base.sided() == Sided::TwoSided && check.kind.is_two_sided() {
        let q = quotient_truss(ext.truss(), &fiber)?;
        fiber_quotient_matches(ext, &q.classes, &q.truss)
    } else {
        // Left trusses have no quotient truss here; compare the relation only.
        let rel = ext.truss().heap().subheap_relation_classes(&fiber)?;
        (0..ext.order()).all(|i| (0..ext.order()).all(|j| rel.same_class(i, j) == (ext.unpair(i).0 == ext.unpair(j).0)))
    };
    Ok(FiberReport {
        a,
        kind: check.kind,
        is_ideal,
        a_is_absorber,
        quotient_is_base,
    })
}

fn fiber_quotient_matches(ext: &ExtTruss, classes: &Partition, q: &Truss) -> bool {
    let n = ext.base().order();
    if q.order() != n {
        return false;
    }
    // psi: class of (t, x) -> t must be well defined and bijective.
    let mut psi = vec![usize::MAX; n];
    for i in 0..ext.order() {
        let (t, _) = ext.unpair(i);
        let c = classes.class_of(i);
        if psi[c] != usize::MAX && psi[c] != t {
            return false;
        }
        psi[c] = t;
    }
    let mut seen = vec![false; n];
    for &t in &psi {
        if t == usize::MAX || std::mem::replace(&mut seen[t], true) {
            return false;
        }
    }
    truss_morphism_violation(q, ext.base(), &psi).is_none()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BaseSubtrussReport {
    pub members: Vec<usize>,
    pub is_subtruss: bool,
    pub left_paragon: bool,
    /// `T[M;e] / T_e` is isomorphic to `M` via class of `(t,m)` -> `m`, as modules over `T[M;e]`.
    pub quotient_is_module: bool,
}

impl BaseSubtrussReport {
    pub fn passed(&self) -> bool {
        self.is_subtruss && self.left_paragon && self.quotient_is_module
    }
}

pub fn base_subtruss(ext: &ExtTruss) -> Result<BaseSubtrussReport> {
    let te = ext.base_copy();
    let is_subtruss = ext.truss().is_subtruss(&te);
    let left_paragon = is_paragon(ext.truss(), &te).left_closed;
    let regular = TModule::regular(ext.truss());
    let quotient_is_module = match regular.quotient(&te) {
        Ok(q) => {
            let acting = ext.action_module()?;
            let m = ext.module().order();
            let mut psi = vec![usize::MAX; q.module.order()];
            let mut ok = q.module.order() == m;
            for i in 0..ext.order() {
                let c = q.classes.class_of(i);
                let x = ext.unpair(i).1;
                if psi[c] != usize::MAX && psi[c] != x {
                    ok = false;
                }
                psi[c] = x;
            }
            ok && {
                let mut seen = vec![false; m];
                psi.iter().all(|&x| x < m && !std::mem::replace(&mut seen[x], true))
            } && module_morphism_violation(&q.module, &acting, &psi).is_none()
        }
        Err(_) => false,
    };
    Ok(BaseSubtrussReport {
        members: te.members().to_vec(),
        is_subtruss,
        left_paragon,
        quotient_is_module,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SplitReport {
    pub a: usize,
    pub iota_heap_embedding: bool,
    pub j_monomorphism: bool,
    pub pi_epimorphism: bool,
    pub pi_j_identity: bool,
    pub kernel_matches: bool,
}

impl SplitReport {
    pub fn passed(&self) -> bool {
        self.iota_heap_embedding && self.j_monomorphism && self.pi_epimorphism && self.pi_j_identity && self.kernel_matches
    }
}

/// `M --iota_a--> T[M;e] --pi--> T` with splitting `j: t -> (t, e)`.
pub fn split_sequence_check(ext: &ExtTruss, a: usize) -> Result<SplitReport> {
    let base = ext.base();
    let (n, m) = (base.order(), ext.module().order());
    if a >= n {
        return Err(AlgebraError::OutOfRange(format!("base index {a}")));
    }
    let injective = |f: &[usize], size: usize| {
        let mut seen = vec![false; size];
        f.iter().all(|&y| !std::mem::replace(&mut seen[y], true))
    };
    let iota: Vec<usize> = (0..m).map(|x| ext.pair(a, x)).collect();
    let j: Vec<usize> = (0..n).map(|t| ext.pair(t, ext.anchor())).collect();
    let pi: Vec<usize> = (0..ext.order()).map(|i| ext.unpair(i).0).collect();
    let iota_heap_embedding =
        injective(&iota, ext.order()) && ext.module().heap().morphism_violation(ext.truss().heap(), &iota).is_none();
    let j_monomorphism = injective(&j, ext.order()) && truss_morphism_violation(base, ext.truss(), &j).is_none();
    let mut hit = vec![false; n];
    pi.iter().for_each(|&t| hit[t] = true);
    let pi_epimorphism = hit.iter().all(|&h| h) && truss_morphism_violation(ext.truss(), base, &pi).is_none();
    let pi_j_identity = (0..n).all(|t| pi[j[t]] == t);
    let image = Subset::new(ext.order(), iota.iter().copied()).expect("in range");
    let rel = ext.truss().heap().subheap_relation_classes(&image)?;
    let kernel_matches = (0..ext.order()).all(|x| (0..ext.order()).all(|y| rel.same_class(x, y) == (pi[x] == pi[y])));
    Ok(SplitReport {
        a,
        iota_heap_embedding,
        j_monomorphism,
        pi_epimorphism,
        pi_j_identity,
        kernel_matches,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RingTypeReport {
    pub has_absorber: bool,
    pub predicted: bool,
}

impl RingTypeReport {
    pub fn passed(&self) -> bool {
        self.has_absorber == self.predicted
    }
}

/// Ring-type iff `M = {e}` and the base is ring-type.
pub fn ring_type_check(ext: &ExtTruss) -> RingTypeReport {
    RingTypeReport {
        has_absorber: ext.truss().absorber().is_some(),
        predicted: ext.module().order() == 1 && ext.base().is_ring_type(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtUnitsReport {
    pub units: Vec<usize>,
    /// Units equal `U(T) x M`.
    pub product_law: bool,
    /// `(u, m)^-1 = (u^-1, [e, u^-1.m, u^-1.e])` for every unit pair.
    pub inverse_formula: bool,
}

impl ExtUnitsReport {
    pub fn passed(&self) -> bool {
        self.product_law && self.inverse_formula
    }
}

/// Units of a unital extension. Unitality of the extension is compared with
/// unitality of base and module before anything else.
pub fn ext_units(ext: &ExtTruss) -> Result<ExtUnitsReport> {
    let base = ext.base();
    let predicted = base.identity().is_some() && ext.module().is_unital();
    let actual = ext.truss().identity().is_some();
    if predicted != actual {
        return Err(AlgebraError::Internal(format!(
            "extension unital = {actual}, base and module unital = {predicted}"
        )));
    }
    if !actual {
        return Err(AlgebraError::NotUnital);
    }
    let one = ext.truss().identity().expect("unital");
    let u = units(ext.truss())?;
    let ub = units(base)?;
    let m = ext.module().order();
    let expected = Subset::new(
        ext.order(),
        ub.members().iter().flat_map(|&t| (0..m).map(move |x| t * m + x)),
    )
    .expect("in range");
    let md = ext.module();
    let e = ext.anchor();
    let inverse_formula = ub.members().iter().all(|&t| {
        let tinv = crate::truss::inverse_of(base, t).expect("unit");
        (0..m).all(|x| {
            let inv = ext.pair(tinv, md.bracket(e, md.act(tinv, x), md.act(tinv, e)));
            let p = ext.pair(t, x);
            ext.truss().mul(p, inv) == one && ext.truss().mul(inv, p) == one
        })
    });
    Ok(ExtUnitsReport {
        units: u.members().to_vec(),
        product_law: u == expected,
        inverse_formula,
    })
}

/// Extends `T[M;e]` by `M` once more and compares with `T[M x M; (e,e)]`,
/// both through the natural map `((t,x),y) -> (t,(x,y))` and by search.
pub fn iterated_extension_check(module: &TModule, e: usize) -> Result<(bool, Option<Vec<usize>>)> {
    let once = extend(module, e)?;
    let twice = extend(&once.action_module()?, e)?;
    let square = module.product(module)?;
    let flat = extend(&square, e * module.order() + e)?;
    // Index of ((t,x),y) is (t*m + x)*m + y = t*m^2 + x*m + y, which is also
    // the index of (t,(x,y)), so the natural map is the identity.
    let identity: Vec<usize> = (0..twice.order()).collect();
    let natural = truss_morphism_violation(twice.truss(), flat.truss(), &identity).is_none();
    let searched = find_truss_isomorphism(twice.truss(), flat.truss())?;
    Ok((natural, searched))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{za_truss, zn_truss};
    use crate::heap::Heap;

    #[test]
    fn z2_regular_extension() {
        let ext = extend(&TModule::regular(&zn_truss(2)), 0).unwrap();
        assert_eq!(ext.order(), 4);
        for p in 0..4 {
            for q in 0..4 {
                let ((t, x), (t2, x2)) = (ext.unpair(p), ext.unpair(q));
                assert_eq!(ext.unpair(ext.truss().mul(p, q)), (t * t2, (x + t * x2) % 2));
            }
        }
    }

    #[test]
    fn za_extension_product() {
        let ext = extend(&TModule::regular(&za_truss(2, 4)), 0).unwrap();
        assert_eq!(ext.order(), 16);
        for p in 0..16 {
            for q in 0..16 {
                let ((m, s), (n, t)) = (ext.unpair(p), ext.unpair(q));
                let want = ((2 * m * n + m + n) % 4, (2 * m * t + s + t) % 4);
                assert_eq!(ext.unpair(ext.truss().mul(p, q)), want);
            }
        }
    }

    #[test]
    fn singleton_module_gives_base() {
        let t = zn_truss(3);
        let single = TModule::trivial(&t, Heap::cyclic(1)).unwrap();
        let ext = extend(&single, 0).unwrap();
        assert!(find_truss_isomorphism(ext.truss(), &t).unwrap().is_some());
        assert!(ring_type_check(&ext).has_absorber);
    }

    #[test]
    fn theta_identity_and_inverse() {
        let ext = extend(&TModule::regular(&zn_truss(3)), 0).unwrap();
        let (_, id) = theta_iso(&ext, 0).unwrap();
        assert_eq!(id, (0..9).collect::<Vec<_>>());
        let (there, f) = theta_iso(&ext, 2).unwrap();
        let (_, g) = theta_iso(&there, 0).unwrap();
        assert!((0..9).all(|i| g[f[i]] == i));
    }

    #[test]
    fn fibers_of_z2_extension() {
        let ext = extend(&TModule::regular(&zn_truss(2)), 0).unwrap();
        let f0 = fiber_paragon(&ext, 0).unwrap();
        assert!(f0.is_ideal && f0.passed(Sided::TwoSided));
        let f1 = fiber_paragon(&ext, 1).unwrap();
        assert!(!f1.is_ideal && f1.passed(Sided::TwoSided));
    }

    #[test]
    fn base_copy_and_split() {
        let ext = extend(&TModule::regular(&zn_truss(2)), 0).unwrap();
        let r = base_subtruss(&ext).unwrap();
        assert_eq!(r.members, vec![0, 2]);
        assert!(r.passed());
        assert!(split_sequence_check(&ext, 1).unwrap().passed());
        assert!(!ring_type_check(&ext).has_absorber);
    }

    #[test]
    fn units_of_z2_extension() {
        let ext = extend(&TModule::regular(&zn_truss(2)), 0).unwrap();
        let r = ext_units(&ext).unwrap();
        assert_eq!(r.units, vec![2, 3]);
        assert!(r.passed());
    }

    #[test]
    fn non_unital_module_rejected() {
        let t = zn_truss(2);
        let zero = TModule::new(t.clone(), Heap::cyclic(2), vec![0; 4]).unwrap();
        let ext = extend(&zero, 0).unwrap();
        assert!(matches!(ext_units(&ext), Err(AlgebraError::NotUnital)));
    }

    #[test]
    fn iteration_is_product_extension() {
        let (natural, found) = iterated_extension_check(&TModule::regular(&zn_truss(2)), 0).unwrap();
        assert!(natural);
        assert!(found.is_some());
    }
}
