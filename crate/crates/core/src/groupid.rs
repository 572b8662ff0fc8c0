//! Finite (possibly nonabelian) groups given by Cayley tables: invariants,
//! invariant-factor decomposition, isomorphism search and the handful of
//! named groups needed to identify unit groups.

use std::collections::{BTreeMap, HashSet, VecDeque};

use serde::Serialize;

use crate::check::{find_tuple, CheckPolicy};
use crate::error::{AlgebraError, Law, LawViolation, Result};
use crate::heap::AbGroup;
use crate::subset::{Partition, Subset};
use crate::truss::{units, Truss};

/// Node budget for generator-image backtracking.
pub const SEARCH_LIMIT: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    n: usize,
    mul: Vec<usize>,
    id: usize,
    inv: Vec<usize>,
    labels: Option<Vec<String>>,
}

impl FiniteGroup {
    pub fn new(mul: Vec<Vec<usize>>) -> Result<FiniteGroup> {
        let n = mul.len();
        if mul.iter().any(|r| r.len() != n) {
            return Err(AlgebraError::Shape(format!("multiplication table must be {n}x{n}")));
        }
        Self::from_flat(n, mul.into_iter().flatten().collect())
    }

    pub fn from_flat(n: usize, mul: Vec<usize>) -> Result<FiniteGroup> {
        if n == 0 {
            return Err(AlgebraError::EmptyHeap);
        }
        if mul.len() != n * n {
            return Err(AlgebraError::Shape(format!("table must have {} entries", n * n)));
        }
        if let Some(pos) = mul.iter().position(|&x| x >= n) {
            return Err(LawViolation::new(Law::Closure, [pos / n, pos % n]).into());
        }
        let op = |a: usize, b: usize| mul[a * n + b];
        let id = (0..n)
            .find(|&e| (0..n).all(|a| op(e, a) == a && op(a, e) == a))
            .ok_or_else(|| AlgebraError::Law(LawViolation::new(Law::Identity, [])))?;
        let mut inv = vec![0; n];
        for a in 0..n {
            inv[a] = (0..n)
                .find(|&b| op(a, b) == id && op(b, a) == id)
                .ok_or_else(|| AlgebraError::Law(LawViolation::new(Law::Inverse, [a])))?;
        }
        let policy = CheckPolicy::default();
        if let Some(w) = find_tuple::<3>(n, policy.exhaustive(n), &policy, |[a, b, c]| {
            op(op(a, b), c) == op(a, op(b, c))
        }) {
            return Err(LawViolation::new(Law::Associativity, w).into());
        }
        Ok(FiniteGroup {
            n,
            mul,
            id,
            inv,
            labels: None,
        })
    }

    pub(crate) fn from_parts_unchecked(n: usize, mul: Vec<usize>) -> FiniteGroup {
        let op = |a: usize, b: usize| mul[a * n + b];
        let id = (0..n)
            .find(|&e| (0..n).all(|a| op(e, a) == a))
            .expect("identity exists");
        let inv = (0..n)
            .map(|a| (0..n).find(|&b| op(a, b) == id).expect("inverse exists"))
            .collect();
        FiniteGroup {
            n,
            mul,
            id,
            inv,
            labels: None,
        }
    }

    pub fn from_abelian(g: &AbGroup) -> FiniteGroup {
        let n = g.order();
        FiniteGroup {
            n,
            mul: g.table().to_vec(),
            id: g.zero(),
            inv: (0..n).map(|a| g.neg(a)).collect(),
            labels: g.labels().map(<[String]>::to_vec),
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n);
        self.labels = Some(labels);
        self
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, i: usize) -> String {
        self.labels
            .as_ref()
            .map_or_else(|| i.to_string(), |l| l[i].clone())
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn identity(&self) -> usize {
        self.id
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        (0..k).fold(self.id, |acc, _| self.mul(acc, a))
    }

    pub fn table(&self) -> &[usize] {
        &self.mul
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.mul.chunks(self.n).map(<[usize]>::to_vec).collect()
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != self.id {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        self.noncommuting_pair().is_none()
    }

    fn noncommuting_pair(&self) -> Option<(usize, usize)> {
        (0..self.n)
            .flat_map(|a| (a + 1..self.n).map(move |b| (a, b)))
            .find(|&(a, b)| self.mul(a, b) != self.mul(b, a))
    }

    /// The subgroup generated by `gens`.
    pub fn generated(&self, gens: &[usize]) -> Subset {
        let mut mask = vec![false; self.n];
        mask[self.id] = true;
        let mut queue = VecDeque::from([self.id]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !mask[y] {
                    mask[y] = true;
                    queue.push_back(y);
                }
            }
        }
        Subset::from_mask(mask)
    }

    pub fn is_subgroup(&self, s: &Subset) -> bool {
        s.contains(self.id)
            && s.members()
                .iter()
                .all(|&a| s.members().iter().all(|&b| s.contains(self.mul(a, self.inv(b)))))
    }

    pub fn is_normal(&self, s: &Subset) -> bool {
        self.is_subgroup(s)
            && (0..self.n).all(|g| {
                s.members()
                    .iter()
                    .all(|&x| s.contains(self.mul(self.mul(g, x), self.inv(g))))
            })
    }

    /// Every subgroup, each listed once, ordered by size then members.
    pub fn subgroups(&self) -> Vec<Subset> {
        let mut seen: HashSet<Subset> = HashSet::new();
        let trivial = self.generated(&[]);
        let mut frontier = vec![trivial.clone()];
        seen.insert(trivial);
        while let Some(h) = frontier.pop() {
            for g in 0..self.n {
                if h.contains(g) {
                    continue;
                }
                let mut gens = h.members().to_vec();
                gens.push(g);
                let k = self.generated(&gens);
                if seen.insert(k.clone()) {
                    frontier.push(k);
                }
            }
        }
        let mut all: Vec<Subset> = seen.into_iter().collect();
        all.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.members().cmp(b.members())));
        all
    }

    pub fn center(&self) -> Subset {
        Subset::from_mask(
            (0..self.n)
                .map(|z| (0..self.n).all(|g| self.mul(z, g) == self.mul(g, z)))
                .collect(),
        )
    }

    pub fn derived_subgroup(&self) -> Subset {
        let mut comms = Vec::new();
        for a in 0..self.n {
            for b in 0..self.n {
                let c = self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b));
                comms.push(c);
            }
        }
        comms.sort_unstable();
        comms.dedup();
        self.generated(&comms)
    }

    /// Quotient by a normal subgroup, classes numbered by first appearance.
    pub fn quotient(&self, normal: &Subset) -> Result<(FiniteGroup, Partition)> {
        if !self.is_normal(normal) {
            return Err(AlgebraError::Mismatch("subgroup is not normal".into()));
        }
        let labels: Vec<usize> = (0..self.n)
            .map(|x| {
                normal
                    .members()
                    .iter()
                    .map(|&k| self.mul(x, k))
                    .min()
                    .expect("nonempty subgroup")
            })
            .collect();
        let p = Partition::from_labels(&labels);
        let k = p.len();
        let mul = (0..k * k)
            .map(|i| p.class_of(self.mul(p.representative(i / k), p.representative(i % k))))
            .collect();
        Ok((FiniteGroup::from_parts_unchecked(k, mul), p))
    }

    pub fn direct_product(&self, other: &FiniteGroup) -> FiniteGroup {
        let (n, m) = (self.n, other.n);
        let nm = n * m;
        let mul = (0..nm * nm)
            .map(|i| {
                let (x, y) = (i / nm, i % nm);
                self.mul(x / m, y / m) * m + other.mul(x % m, y % m)
            })
            .collect();
        let labels = (0..nm)
            .map(|x| format!("({},{})", self.label(x / m), other.label(x % m)))
            .collect();
        FiniteGroup::from_parts_unchecked(nm, mul).with_labels(labels)
    }

    pub fn order_profile(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for a in 0..self.n {
            *m.entry(self.element_order(a)).or_insert(0) += 1;
        }
        m
    }

    pub fn fingerprint(&self) -> GroupFingerprint {
        let derived = self.derived_subgroup();
        let (ab, _) = self.quotient(&derived).expect("derived subgroup is normal");
        GroupFingerprint {
            order: self.n,
            element_orders: self.order_profile(),
            center_size: self.center().len(),
            derived_order: derived.len(),
            abelianization: abelian_invariants(&ab).expect("abelianization is abelian"),
        }
    }

    /// Generators picked greedily by descending element order.
    pub fn greedy_generators(&self) -> Vec<usize> {
        let mut by_order: Vec<usize> = (0..self.n).collect();
        by_order.sort_by_key(|&a| (std::cmp::Reverse(self.element_order(a)), a));
        let mut gens = Vec::new();
        let mut span = self.generated(&[]);
        for a in by_order {
            if span.len() == self.n {
                break;
            }
            if !span.contains(a) {
                gens.push(a);
                span = self.generated(&gens);
            }
        }
        gens
    }
}

/// Isomorphism invariants of a finite group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupFingerprint {
    pub order: usize,
    pub element_orders: BTreeMap<usize, usize>,
    pub center_size: usize,
    pub derived_order: usize,
    pub abelianization: Vec<usize>,
}

fn prime_factors(mut n: usize) -> Vec<usize> {
    let mut ps = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            ps.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        ps.push(n);
    }
    ps
}

/// Invariant factors `d1 | d2 | ... | dr` with product equal to the order.
/// The trivial group has the empty list.
pub fn abelian_invariants(g: &FiniteGroup) -> Result<Vec<usize>> {
    if let Some((a, b)) = g.noncommuting_pair() {
        return Err(AlgebraError::NotAbelian(a, b));
    }
    let orders: Vec<usize> = (0..g.order()).map(|a| g.element_order(a)).collect();
    // For each prime p the p-torsion counts |G[p^k]| = p^(sum_i min(k, e_i))
    // determine the exponents e_i of the p-primary part.
    let mut primary: Vec<(usize, Vec<u32>)> = Vec::new();
    for p in prime_factors(g.order()) {
        let mut exps: Vec<u32> = Vec::new();
        let mut prev_log = 0u32;
        let mut k = 1u32;
        loop {
            let pk = p.pow(k);
            let count = orders.iter().filter(|&&o| pk % o == 0).count();
            let log = count.ilog(p);
            let at_least_k = (log - prev_log) as usize;
            if at_least_k == 0 {
                break;
            }
            // the cyclic factors with exponent >= k
            if exps.len() < at_least_k {
                exps.resize(at_least_k, 0);
            }
            for e in exps.iter_mut().take(at_least_k) {
                *e = k;
            }
            prev_log = log;
            k += 1;
        }
        exps.sort_unstable_by(|a, b| b.cmp(a));
        primary.push((p, exps));
    }
    let r = primary.iter().map(|(_, e)| e.len()).max().unwrap_or(0);
    let mut factors: Vec<usize> = (0..r)
        .map(|j| {
            primary
                .iter()
                .map(|(p, e)| e.get(j).map_or(1, |&x| p.pow(x)))
                .product()
        })
        .collect();
    factors.reverse();
    Ok(factors)
}

struct HomSearch<'a> {
    g: &'a FiniteGroup,
    h: &'a FiniteGroup,
    gens: Vec<usize>,
    injective: bool,
    nodes: usize,
}

impl HomSearch<'_> {
    /// Closes the partial map over the subgroup generated by `gens[..=upto]`.
    fn close(&self, map: &mut [usize], used: &mut [bool], upto: usize) -> bool {
        const NONE: usize = usize::MAX;
        let mut queue: VecDeque<usize> = (0..self.g.order()).filter(|&x| map[x] != NONE).collect();
        while let Some(x) = queue.pop_front() {
            for &s in &self.gens[..=upto] {
                let y = self.g.mul(x, s);
                let img = self.h.mul(map[x], map[s]);
                if map[y] == NONE {
                    if self.injective && used[img] {
                        return false;
                    }
                    map[y] = img;
                    used[img] = true;
                    queue.push_back(y);
                } else if map[y] != img {
                    return false;
                }
            }
        }
        true
    }

    fn run(
        &mut self,
        level: usize,
        map: Vec<usize>,
        used: Vec<bool>,
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> Result<bool> {
        if level == self.gens.len() {
            return Ok(visit(&map));
        }
        let s = self.gens[level];
        let order = self.g.element_order(s);
        for c in 0..self.h.order() {
            let oc = self.h.element_order(c);
            let ok = if self.injective { oc == order } else { order % oc == 0 };
            if !ok {
                continue;
            }
            self.nodes += 1;
            if self.nodes > SEARCH_LIMIT {
                return Err(AlgebraError::SearchLimit(SEARCH_LIMIT));
            }
            let mut m = map.clone();
            let mut u = used.clone();
            if m[s] != usize::MAX {
                // already determined by earlier generators
                if m[s] != c {
                    continue;
                }
            } else {
                if self.injective && u[c] {
                    continue;
                }
                m[s] = c;
                u[c] = true;
            }
            if !self.close(&mut m, &mut u, level) {
                continue;
            }
            if self.run(level + 1, m, u, visit)? {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

fn search_homs(
    g: &FiniteGroup,
    h: &FiniteGroup,
    injective: bool,
    visit: &mut dyn FnMut(&[usize]) -> bool,
) -> Result<bool> {
    let mut map = vec![usize::MAX; g.order()];
    let mut used = vec![false; h.order()];
    map[g.identity()] = h.identity();
    used[h.identity()] = true;
    let mut search = HomSearch {
        g,
        h,
        gens: g.greedy_generators(),
        injective,
        nodes: 0,
    };
    search.run(0, map, used, visit)
}

/// Searches for an isomorphism `g -> h` accepted by `accept`.
pub fn find_isomorphism_with(
    g: &FiniteGroup,
    h: &FiniteGroup,
    mut accept: impl FnMut(&[usize]) -> bool,
) -> Result<Option<Vec<usize>>> {
    if g.order() != h.order() {
        return Ok(None);
    }
    let mut found = None;
    search_homs(g, h, true, &mut |m| {
        if accept(m) {
            found = Some(m.to_vec());
            true
        } else {
            false
        }
    })?;
    Ok(found)
}

/// An isomorphism `g -> h` as an index map, or `None` if none exists.
pub fn is_isomorphic(g: &FiniteGroup, h: &FiniteGroup) -> Result<Option<Vec<usize>>> {
    if g.order() != h.order() || g.fingerprint() != h.fingerprint() {
        return Ok(None);
    }
    find_isomorphism_with(g, h, |_| true)
}

/// Every homomorphism `g -> h`, determined by generator images.
pub fn homomorphisms(g: &FiniteGroup, h: &FiniteGroup) -> Result<Vec<Vec<usize>>> {
    let mut all = Vec::new();
    search_homs(g, h, false, &mut |m| {
        all.push(m.to_vec());
        false
    })?;
    Ok(all)
}

pub fn is_homomorphism(g: &FiniteGroup, h: &FiniteGroup, f: &[usize]) -> bool {
    (0..g.order()).all(|a| (0..g.order()).all(|b| f[g.mul(a, b)] == h.mul(f[a], f[b])))
}

/// The cyclic group C_n.
pub fn cyclic(n: usize) -> FiniteGroup {
    FiniteGroup::from_abelian(&AbGroup::cyclic(n))
}

/// The dihedral group of the given order (D8 has order 8). Element
/// `r^i s^j` has index `i + (order/2) * j`.
pub fn dihedral(order: usize) -> Result<FiniteGroup> {
    if order < 2 || order % 2 != 0 {
        return Err(AlgebraError::Mismatch(format!("dihedral order {order} must be even")));
    }
    let k = order / 2;
    let mul = (0..order * order)
        .map(|idx| {
            let (x, y) = (idx / order, idx % order);
            let (i, a) = (x % k, x / k);
            let (j, b) = (y % k, y / k);
            let rot = if a == 0 { (i + j) % k } else { (i + k - j) % k };
            rot + k * ((a + b) % 2)
        })
        .collect();
    let labels = (0..order)
        .map(|x| {
            let (i, a) = (x % k, x / k);
            match (i, a) {
                (0, 0) => "1".to_string(),
                (0, 1) => "s".to_string(),
                (i, 0) => format!("r^{i}"),
                (i, _) => format!("r^{i}s"),
            }
        })
        .collect();
    Ok(FiniteGroup::from_parts_unchecked(order, mul).with_labels(labels))
}

/// The dicyclic group of the given order (Q8 for order 8):
/// `a^(2k) = 1, x^2 = a^k, x a x^-1 = a^-1`. Element `a^i x^j` has index
/// `i + 2k * j`.
pub fn quaternion(order: usize) -> Result<FiniteGroup> {
    if order < 8 || order % 4 != 0 {
        return Err(AlgebraError::Mismatch(format!(
            "dicyclic order {order} must be a multiple of 4, at least 8"
        )));
    }
    let m = order / 2;
    let k = m / 2;
    let mul = (0..order * order)
        .map(|idx| {
            let (u, v) = (idx / order, idx % order);
            let (i, j) = (u % m, u / m);
            let (l, t) = (v % m, v / m);
            if j == 0 {
                (i + l) % m + m * t
            } else {
                let base = (i + m - l) % m;
                if t == 0 {
                    base + m
                } else {
                    (base + k) % m
                }
            }
        })
        .collect();
    Ok(FiniteGroup::from_parts_unchecked(order, mul))
}

/// Builds a named group: `cyclic`, `dihedral`, `quaternion`, or
/// `direct-product` of the listed factors.
pub fn named_group(name: &str, params: &[usize]) -> Result<FiniteGroup> {
    let one = |what: &str| -> Result<usize> {
        match params {
            [n] => Ok(*n),
            _ => Err(AlgebraError::Mismatch(format!("{what} takes one parameter"))),
        }
    };
    match name {
        "cyclic" => Ok(cyclic(one("cyclic")?.max(1))),
        "dihedral" => dihedral(one("dihedral")?),
        "quaternion" => quaternion(one("quaternion")?),
        "direct-product" => Ok(params
            .iter()
            .map(|&n| cyclic(n))
            .reduce(|a, b| a.direct_product(&b))
            .unwrap_or_else(|| cyclic(1))),
        other => Err(AlgebraError::Mismatch(format!("unknown group family {other}"))),
    }
}

/// `U(T)` under the truss multiplication; element `i` is the `i`-th unit.
pub fn group_from_units(t: &Truss) -> Result<(FiniteGroup, Vec<usize>)> {
    let members = units(t)?.members().to_vec();
    let k = members.len();
    let mut index = vec![usize::MAX; t.order()];
    for (i, &u) in members.iter().enumerate() {
        index[u] = i;
    }
    let mul = (0..k * k).map(|i| index[t.mul(members[i / k], members[i % k])]).collect();
    let labels = members.iter().map(|&u| t.label(u)).collect();
    Ok((FiniteGroup::from_flat(k, mul)?.with_labels(labels), members))
}

/// D8 x C2, the multiplicative group of the order-16 extension brace.
pub fn d8_x_c2() -> FiniteGroup {
    dihedral(8).expect("valid order").direct_product(&cyclic(2))
}

/// Name for an abelian group from its invariant factors, e.g. `C2xC4`.
pub fn abelian_name(invariants: &[usize]) -> String {
    if invariants.is_empty() {
        return "C1".into();
    }
    invariants
        .iter()
        .map(|d| format!("C{d}"))
        .collect::<Vec<_>>()
        .join("x")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Identification {
    pub fingerprint: GroupFingerprint,
    pub named_match: Option<String>,
}

/// Identifies `g` against the abelian groups and the dihedral/dicyclic
/// families (and their products with C2) of the same order.
pub fn identify(g: &FiniteGroup) -> Result<Identification> {
    let fingerprint = g.fingerprint();
    if g.is_abelian() {
        return Ok(Identification {
            named_match: Some(abelian_name(&abelian_invariants(g)?)),
            fingerprint,
        });
    }
    let n = g.order();
    let mut candidates: Vec<(String, FiniteGroup)> = Vec::new();
    if n % 2 == 0 && n >= 6 {
        candidates.push((format!("D{n}"), dihedral(n)?));
    }
    if n % 4 == 0 && n >= 8 {
        candidates.push((format!("Q{n}"), quaternion(n)?));
    }
    if n % 4 == 0 && n / 2 >= 6 {
        candidates.push((format!("D{}xC2", n / 2), dihedral(n / 2)?.direct_product(&cyclic(2))));
    }
    if n % 8 == 0 && n / 2 >= 8 {
        candidates.push((format!("Q{}xC2", n / 2), quaternion(n / 2)?.direct_product(&cyclic(2))));
    }
    for (name, c) in candidates {
        if c.fingerprint() == fingerprint && is_isomorphic(g, &c)?.is_some() {
            return Ok(Identification {
                fingerprint,
                named_match: Some(name),
            });
        }
    }
    Ok(Identification {
        fingerprint,
        named_match: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dihedral_eight() {
        let d = dihedral(8).unwrap();
        assert_eq!(FiniteGroup::from_flat(8, d.table().to_vec()).unwrap().table(), d.table());
        let involutions = (0..8).filter(|&a| d.element_order(a) == 2).count();
        assert_eq!(involutions, 5);
        // s r s = r^3
        let (r, s) = (1, 4);
        assert_eq!(d.mul(d.mul(s, r), s), 3);
    }

    #[test]
    fn cyclic_one_is_trivial() {
        assert_eq!(named_group("cyclic", &[1]).unwrap().order(), 1);
        assert_eq!(abelian_invariants(&cyclic(1)).unwrap(), Vec::<usize>::new());
    }

    #[test]
    fn d8_x_c2_profile() {
        let g = d8_x_c2();
        assert_eq!(g.order(), 16);
        let profile: Vec<(usize, usize)> = g.order_profile().into_iter().collect();
        assert_eq!(profile, vec![(1, 1), (2, 11), (4, 4)]);
        assert_eq!(g.center().len(), 4);
    }

    #[test]
    fn quaternion_group() {
        let q = quaternion(8).unwrap();
        assert!(FiniteGroup::from_flat(8, q.table().to_vec()).is_ok());
        let profile: Vec<(usize, usize)> = q.order_profile().into_iter().collect();
        assert_eq!(profile, vec![(1, 1), (2, 1), (4, 6)]);
        assert!(is_isomorphic(&q, &dihedral(8).unwrap()).unwrap().is_none());
    }

    #[test]
    fn invariants_examples() {
        let g = cyclic(2).direct_product(&cyclic(4));
        assert_eq!(abelian_invariants(&g).unwrap(), vec![2, 4]);
        let g = cyclic(6).direct_product(&cyclic(4));
        assert_eq!(abelian_invariants(&g).unwrap(), vec![2, 12]);
        assert_eq!(abelian_invariants(&cyclic(4)).unwrap(), vec![4]);
        assert!(abelian_invariants(&dihedral(6).unwrap()).is_err());
    }

    #[test]
    fn c4_not_klein() {
        let v = cyclic(2).direct_product(&cyclic(2));
        assert!(is_isomorphic(&cyclic(4), &v).unwrap().is_none());
        let c6 = cyclic(2).direct_product(&cyclic(3));
        let f = is_isomorphic(&c6, &cyclic(6)).unwrap().unwrap();
        assert!(is_homomorphism(&c6, &cyclic(6), &f));
    }

    #[test]
    fn subgroup_counts() {
        // D8 has 10 subgroups, S3 has 6.
        assert_eq!(dihedral(8).unwrap().subgroups().len(), 10);
        assert_eq!(dihedral(6).unwrap().subgroups().len(), 6);
        assert_eq!(cyclic(12).subgroups().len(), 6);
    }

    #[test]
    fn homomorphism_count() {
        // Hom(C4, C4) has 4 elements, Hom(C2 x C2, C2) has 4.
        assert_eq!(homomorphisms(&cyclic(4), &cyclic(4)).unwrap().len(), 4);
        let v = cyclic(2).direct_product(&cyclic(2));
        assert_eq!(homomorphisms(&v, &cyclic(2)).unwrap().len(), 4);
        assert_eq!(homomorphisms(&v, &v).unwrap().len(), 16);
    }

    #[test]
    fn identification() {
        let id = identify(&d8_x_c2()).unwrap();
        assert_eq!(id.named_match.as_deref(), Some("D8xC2"));
        let id = identify(&cyclic(2).direct_product(&cyclic(4))).unwrap();
        assert_eq!(id.named_match.as_deref(), Some("C2xC4"));
    }

    #[test]
    fn rejects_non_group() {
        assert!(FiniteGroup::new(vec![vec![0, 0], vec![0, 1]]).is_err());
    }
}
