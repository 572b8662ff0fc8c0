//! Concrete families: modular rings, `Z^(a)` quotients, group rings,
//! truncated polynomial rings, endomorphism extensions, and integer probes.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::Rng;
use serde::Serialize;

use crate::brace::Brace;
use crate::check::CheckPolicy;
use crate::error::{AlgebraError, Result};
use crate::extension::{extend, ExtTruss};
use crate::groupid::{homomorphisms, FiniteGroup};
use crate::heap::{AbGroup, Heap};
use crate::subset::Subset;
use crate::tmodule::TModule;
use crate::truss::{find_truss_isomorphism, is_paragon, quotient_truss, ParagonKind, Sided, Truss};

/// Carriers of table-built families are capped at this many elements.
pub const CARRIER_LIMIT: usize = 256;

/// An associative ring as an additive group plus a validated product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ring {
    add: AbGroup,
    truss: Truss,
}

impl Ring {
    pub fn new(add: AbGroup, mul: Vec<usize>) -> Result<Ring> {
        let truss = Truss::from_ring(add.clone(), mul)?;
        Ok(Ring { add, truss })
    }

    pub fn order(&self) -> usize {
        self.add.order()
    }

    pub fn additive(&self) -> &AbGroup {
        &self.add
    }

    pub fn truss(&self) -> &Truss {
        &self.truss
    }

    pub fn into_truss(self) -> Truss {
        self.truss
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.truss.mul(a, b)
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add.add(a, b)
    }

    pub fn zero(&self) -> usize {
        self.add.zero()
    }

    pub fn one(&self) -> Option<usize> {
        self.truss.identity()
    }

    pub fn is_unital(&self) -> bool {
        self.one().is_some()
    }
}

/// `Z/nZ`; index `i` is the residue `i`.
pub fn zn_ring(n: usize) -> Ring {
    assert!(n >= 1, "Z/nZ needs n >= 1");
    let mul = (0..n * n).map(|i| (i / n) * (i % n) % n).collect();
    Ring::new(AbGroup::cyclic(n), mul).expect("Z/nZ is a ring")
}

pub fn zn_truss(n: usize) -> Truss {
    zn_ring(n).into_truss()
}

/// `Z^(a)/NZ`: the heap of `Z/NZ` with `m.n = amn + m + n mod N`. The
/// identity is 0; there is no absorber unless `N = 1`.
pub fn za_truss(a: u64, modulus: usize) -> Truss {
    assert!(modulus >= 1 && a >= 1, "Z^(a)/NZ needs a >= 1 and N >= 1");
    let n = modulus as u64;
    let amod = a % n;
    let mul = (0..modulus * modulus)
        .map(|i| {
            let (x, y) = ((i / modulus) as u64, (i % modulus) as u64);
            ((amod * x % n * y + x + y) % n) as usize
        })
        .collect();
    Truss::new(Heap::cyclic(modulus), mul, Sided::TwoSided).expect("Z^(a)/NZ is a truss")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZaIdealProbe {
    pub a: u64,
    pub modulus: u64,
    pub samples: usize,
    /// `m ._0 (kN) = (amk + k)N` and the λ/ρ closures of `NZ` held on every sample.
    pub holds: bool,
    pub witness: Option<(String, String)>,
}

/// Samples integers to check that `NZ` is a paragon of `Z^(a)`, the fact
/// that makes `Z^(a)/NZ` a well-defined truss.
pub fn za_ideal_probe(a: u64, modulus: u64, range: i64, policy: &CheckPolicy) -> ZaIdealProbe {
    let mut rng = policy.rng();
    let (ab, nb) = (BigInt::from(a), BigInt::from(modulus));
    let mul = |x: &BigInt, y: &BigInt| &ab * x * y + x + y;
    let mut witness = None;
    for _ in 0..policy.samples {
        let m = BigInt::from(rng.gen_range(-range..=range));
        let k = BigInt::from(rng.gen_range(-range..=range));
        let j = BigInt::from(rng.gen_range(-range..=range));
        let (p, q) = (&k * &nb, &j * &nb);
        // m ._0 p = [m.p, m.0, 0] with 0 the identity
        let induced = mul(&m, &p) - &m;
        let lambda = mul(&m, &p) - mul(&m, &q) + &q;
        let rho = mul(&p, &m) - mul(&q, &m) + &q;
        let closed = induced == (&ab * &m * &k + &k) * &nb
            && [lambda, rho].iter().all(|v| v.mod_floor(&nb).is_zero());
        if !closed {
            witness = Some((m.to_string(), k.to_string()));
            break;
        }
    }
    ZaIdealProbe {
        a,
        modulus,
        samples: policy.samples,
        holds: witness.is_none(),
        witness,
    }
}

/// `m^{.k}` in `Z^(a)` by the closed form `((am + 1)^k - 1) / a`.
pub fn za_power(a: u64, m: i64, k: u32) -> BigInt {
    let a = BigInt::from(a);
    let base = &a * BigInt::from(m) + BigInt::one();
    (num_traits::pow(base, k as usize) - BigInt::one()) / a
}

/// `m^{.k}` by repeated multiplication from the identity 0.
pub fn za_power_iterated(a: u64, m: i64, k: u32) -> BigInt {
    let (a, m) = (BigInt::from(a), BigInt::from(m));
    let mut x = BigInt::zero();
    for _ in 0..k {
        x = &a * &x * &m + &x + &m;
    }
    x
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrderCongruenceReport {
    pub kmax: u32,
    pub mrange: i64,
    /// `m^{.2^k} = 0 mod 2^{k+1}` in `Z^(2)` for every sampled pair.
    pub congruence_holds: bool,
    pub witness: Option<(u32, i64)>,
    /// Multiplicative order of 1 in `Z^(2)/2^{k+1}Z`, per `k`.
    pub one_orders: Vec<(u32, u64)>,
    pub one_order_maximal: bool,
}

pub fn order_congruence_check(kmax: u32, mrange: i64) -> Result<OrderCongruenceReport> {
    if kmax > 10 {
        return Err(AlgebraError::SizeBound(format!("kmax {kmax} above 10")));
    }
    let mut witness = None;
    'outer: for k in 1..=kmax {
        let modulus = BigInt::one() << (k + 1);
        for m in -mrange..=mrange {
            if !za_power(2, m, 1 << k).mod_floor(&modulus).is_zero() {
                witness = Some((k, m));
                break 'outer;
            }
        }
    }
    let one_orders: Vec<(u32, u64)> = (1..=kmax)
        .map(|k| {
            let n = 1u64 << (k + 1);
            let (mut x, mut steps) = (1u64, 1u64);
            while x != 0 {
                x = (2 * x + x + 1) % n;
                steps += 1;
            }
            (k, steps)
        })
        .collect();
    let one_order_maximal = one_orders.iter().all(|&(k, o)| o == 1 << k);
    Ok(OrderCongruenceReport {
        kmax,
        mrange,
        congruence_holds: witness.is_none(),
        witness,
        one_orders,
        one_order_maximal,
    })
}

/// Index of a coefficient vector over `base` symbols, first coordinate most significant.
fn lex_index(coeffs: &[usize], base: usize) -> usize {
    coeffs.iter().fold(0, |acc, &c| acc * base + c)
}

fn lex_coeffs(mut i: usize, base: usize, len: usize) -> Vec<usize> {
    let mut v = vec![0; len];
    for slot in v.iter_mut().rev() {
        *slot = i % base;
        i /= base;
    }
    v
}

fn checked_size(base: usize, len: usize) -> Result<usize> {
    let mut size = 1usize;
    for _ in 0..len {
        size = size.saturating_mul(base);
        if size > CARRIER_LIMIT {
            return Err(AlgebraError::SizeBound(format!(
                "carrier {base}^{len} exceeds {CARRIER_LIMIT}"
            )));
        }
    }
    Ok(size)
}

/// `RG` with its augmentation `sum r_g g -> sum r_g`.
#[derive(Debug, Clone)]
pub struct GroupRing {
    pub ring: Ring,
    pub base: Ring,
    pub group: FiniteGroup,
    pub augmentation: Vec<usize>,
}

impl GroupRing {
    /// Coefficient of each group element, as indices of `base`.
    pub fn coefficients(&self, x: usize) -> Vec<usize> {
        lex_coeffs(x, self.base.order(), self.group.order())
    }

    /// `A_r`, the fibre of the augmentation over `r`.
    pub fn fiber(&self, r: usize) -> Subset {
        Subset::from_mask(self.augmentation.iter().map(|&a| a == r).collect())
    }
}

pub fn group_ring(r: &Ring, g: &FiniteGroup) -> Result<GroupRing> {
    let (q, k) = (r.order(), g.order());
    let size = checked_size(q, k)?;
    let coeffs: Vec<Vec<usize>> = (0..size).map(|i| lex_coeffs(i, q, k)).collect();
    let ra = r.additive();
    let add: Vec<usize> = (0..size * size)
        .map(|i| {
            let (a, b) = (&coeffs[i / size], &coeffs[i % size]);
            let c: Vec<usize> = a.iter().zip(b).map(|(&x, &y)| ra.add(x, y)).collect();
            lex_index(&c, q)
        })
        .collect();
    let mul: Vec<usize> = (0..size * size)
        .map(|i| {
            let (a, b) = (&coeffs[i / size], &coeffs[i % size]);
            let mut c = vec![ra.zero(); k];
            for (gi, &x) in a.iter().enumerate() {
                for (hi, &y) in b.iter().enumerate() {
                    let slot = g.mul(gi, hi);
                    c[slot] = ra.add(c[slot], r.mul(x, y));
                }
            }
            lex_index(&c, q)
        })
        .collect();
    let labels = coeffs
        .iter()
        .map(|c| {
            let parts: Vec<String> = c.iter().map(|&x| ra.label(x)).collect();
            format!("({})", parts.join(","))
        })
        .collect();
    let zero = lex_index(&vec![ra.zero(); k], q);
    let group_add = AbGroup::from_flat(size, add, zero)?.with_labels(labels)?;
    let ring = Ring::new(group_add, mul)?;
    let augmentation: Vec<usize> = coeffs
        .iter()
        .map(|c| c.iter().fold(ra.zero(), |s, &x| ra.add(s, x)))
        .collect();
    for x in 0..size {
        for y in 0..size {
            if augmentation[ring.add(x, y)] != r.add(augmentation[x], augmentation[y])
                || augmentation[ring.mul(x, y)] != r.mul(augmentation[x], augmentation[y])
            {
                return Err(AlgebraError::Internal(format!("augmentation not a ring map at ({x},{y})")));
            }
        }
    }
    Ok(GroupRing {
        ring,
        base: r.clone(),
        group: g.clone(),
        augmentation,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AugmentationFiberCheck {
    pub r: usize,
    pub members: Vec<usize>,
    pub kind: ParagonKind,
    pub subtruss: bool,
    pub idempotent: bool,
    /// `T(RG)/A_r` is isomorphic to `T(R)`.
    pub quotient_is_base: bool,
}

impl AugmentationFiberCheck {
    pub fn passed(&self) -> bool {
        self.kind.is_two_sided() && self.subtruss == self.idempotent && self.quotient_is_base
    }
}

pub fn augmentation_fibers(gr: &GroupRing) -> Result<Vec<AugmentationFiberCheck>> {
    let t = gr.ring.truss();
    (0..gr.base.order())
        .map(|r| {
            let a = gr.fiber(r);
            let kind = is_paragon(t, &a).kind;
            let quotient_is_base = if kind.is_two_sided() {
                let q = quotient_truss(t, &a)?;
                find_truss_isomorphism(&q.truss, gr.base.truss())?.is_some()
            } else {
                false
            };
            Ok(AugmentationFiberCheck {
                r,
                members: a.members().to_vec(),
                kind,
                subtruss: t.is_subtruss(&a),
                idempotent: gr.base.mul(r, r) == r,
                quotient_is_base,
            })
        })
        .collect()
}

/// `Z_{2^k}[x]/(x^n)` on coefficient vectors `(c_0, ..., c_{n-1})`, `c_0` most significant.
#[derive(Debug, Clone)]
pub struct TruncPoly {
    pub k: u32,
    pub n: usize,
    pub ring: Ring,
}

impl TruncPoly {
    pub fn modulus(&self) -> u64 {
        1 << self.k
    }

    pub fn coeffs(&self, i: usize) -> Vec<u64> {
        lex_coeffs(i, self.modulus() as usize, self.n)
            .into_iter()
            .map(|c| c as u64)
            .collect()
    }

    pub fn index(&self, coeffs: &[u64]) -> usize {
        let q = self.modulus();
        let c: Vec<usize> = coeffs.iter().map(|&x| (x % q) as usize).collect();
        lex_index(&c, q as usize)
    }

    fn poly_mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let q = self.modulus();
        let mut c = vec![0u64; self.n];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate().take(self.n - i) {
                c[i + j] = (c[i + j] + x * y) % q;
            }
        }
        c
    }

    fn split(&self, p: usize) -> Option<(u64, u64, Vec<u64>)> {
        let q = self.modulus();
        let c = self.coeffs(p);
        let alpha = c[0];
        if alpha % 2 == 0 {
            return None;
        }
        let inv = (1..q).step_by(2).find(|&v| v * alpha % q == 1)?;
        let mut nil = c;
        nil[0] = 0;
        Some((alpha, inv, nil))
    }

    /// `α^{-1} - α^{-2}(q + q^2 + ... + q^{n-1})` for `p = α + q`, `α` odd.
    pub fn formula_inverse(&self, p: usize) -> Option<usize> {
        let m = self.modulus();
        let (_, inv, nil) = self.split(p)?;
        let inv2 = inv * inv % m;
        let mut sum = vec![0u64; self.n];
        let mut power = nil.clone();
        for _ in 1..self.n {
            for (s, &c) in sum.iter_mut().zip(&power) {
                *s = (*s + c) % m;
            }
            power = self.poly_mul(&power, &nil);
        }
        let mut out: Vec<u64> = sum.iter().map(|&c| (m - c * inv2 % m) % m).collect();
        out[0] = (out[0] + inv) % m;
        Some(self.index(&out))
    }

    /// `sum_i (-1)^i α^{-(i+1)} q^i`, the geometric series inverse.
    pub fn series_inverse(&self, p: usize) -> Option<usize> {
        let m = self.modulus();
        let (_, inv, nil) = self.split(p)?;
        let mut out = vec![0u64; self.n];
        let mut power = vec![0u64; self.n];
        power[0] = 1;
        let mut scale = inv;
        for i in 0..self.n {
            let sign = if i % 2 == 0 { 1 } else { m - 1 };
            for (o, &c) in out.iter_mut().zip(&power) {
                *o = (*o + c * scale % m * sign) % m;
            }
            power = self.poly_mul(&power, &nil);
            scale = scale * inv % m;
        }
        Some(self.index(&out))
    }
}

pub fn trunc_poly(k: u32, n: usize) -> Result<TruncPoly> {
    if k == 0 || n == 0 {
        return Err(AlgebraError::SizeBound("need k >= 1 and n >= 1".into()));
    }
    let q = 1usize
        .checked_shl(k)
        .filter(|&q| q <= CARRIER_LIMIT)
        .ok_or_else(|| AlgebraError::SizeBound(format!("2^{k} exceeds {CARRIER_LIMIT}")))?;
    let size = checked_size(q, n)?;
    let coeffs: Vec<Vec<usize>> = (0..size).map(|i| lex_coeffs(i, q, n)).collect();
    let add: Vec<usize> = (0..size * size)
        .map(|i| {
            let c: Vec<usize> = coeffs[i / size]
                .iter()
                .zip(&coeffs[i % size])
                .map(|(&x, &y)| (x + y) % q)
                .collect();
            lex_index(&c, q)
        })
        .collect();
    let mul: Vec<usize> = (0..size * size)
        .map(|i| {
            let (a, b) = (&coeffs[i / size], &coeffs[i % size]);
            let mut c = vec![0usize; n];
            for (x, &ca) in a.iter().enumerate() {
                for (y, &cb) in b.iter().enumerate().take(n - x) {
                    c[x + y] = (c[x + y] + ca * cb) % q;
                }
            }
            lex_index(&c, q)
        })
        .collect();
    let labels = coeffs.iter().map(|c| poly_label(c)).collect();
    let add = AbGroup::from_flat(size, add, 0)?.with_labels(labels)?;
    Ok(TruncPoly {
        k,
        n,
        ring: Ring::new(add, mul)?,
    })
}

fn poly_label(c: &[usize]) -> String {
    let terms: Vec<String> = c
        .iter()
        .enumerate()
        .filter(|(_, &x)| x != 0)
        .map(|(i, &x)| match (i, x) {
            (0, _) => x.to_string(),
            (1, 1) => "x".into(),
            (1, _) => format!("{x}x"),
            (_, 1) => format!("x^{i}"),
            _ => format!("{x}x^{i}"),
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

pub fn trunc_poly_truss(k: u32, n: usize) -> Result<Truss> {
    Ok(trunc_poly(k, n)?.ring.into_truss())
}

/// Every pair `(k, n)` with `2^{kn} <= 256`.
pub fn trunc_poly_corpus() -> Vec<(u32, usize)> {
    (1..=8u32)
        .flat_map(|k| (1..=8usize).filter(move |&n| k as usize * n <= 8).map(move |n| (k, n)))
        .collect()
}

/// Additive self-maps of `g`, by brute force over all `|g|^|g|` maps.
pub fn end_maps_bruteforce(g: &AbGroup) -> Result<Vec<Vec<usize>>> {
    let n = g.order();
    if n > 6 {
        return Err(AlgebraError::SizeBound(format!("brute force needs |G| <= 6, got {n}")));
    }
    let total = n.pow(n as u32);
    Ok((0..total)
        .map(|i| lex_coeffs(i, n, n))
        .filter(|f| (0..n).all(|a| (0..n).all(|b| f[g.add(a, b)] == g.add(f[a], f[b]))))
        .collect())
}

/// Additive self-maps of `g`, from generator images.
pub fn end_maps_generators(g: &AbGroup) -> Result<Vec<Vec<usize>>> {
    let fg = FiniteGroup::from_abelian(g);
    let mut maps = homomorphisms(&fg, &fg)?;
    maps.sort();
    Ok(maps)
}

/// `T(End(G))[G; 0]` with its product checked against `(f o f', g + f(g'))`.
#[derive(Debug, Clone)]
pub struct EndTruss {
    pub maps: Vec<Vec<usize>>,
    pub ring: Ring,
    pub module: TModule,
    pub ext: ExtTruss,
}

pub fn end_truss(g: &AbGroup) -> Result<EndTruss> {
    let n = g.order();
    let maps = if n <= 6 { end_maps_bruteforce(g)? } else { end_maps_generators(g)? };
    let e = maps.len();
    if e * n > CARRIER_LIMIT {
        return Err(AlgebraError::SizeBound(format!("|End(G)| x |G| = {} exceeds {CARRIER_LIMIT}", e * n)));
    }
    let index: HashMap<&Vec<usize>, usize> = maps.iter().enumerate().map(|(i, f)| (f, i)).collect();
    let lookup = |f: Vec<usize>| -> Result<usize> {
        index
            .get(&f)
            .copied()
            .ok_or_else(|| AlgebraError::Internal("End(G) not closed".into()))
    };
    let mut add = Vec::with_capacity(e * e);
    let mut mul = Vec::with_capacity(e * e);
    for f in &maps {
        for h in &maps {
            add.push(lookup((0..n).map(|x| g.add(f[x], h[x])).collect())?);
            mul.push(lookup((0..n).map(|x| f[h[x]]).collect())?);
        }
    }
    let zero = lookup(vec![g.zero(); n])?;
    let labels = maps.iter().map(|f| format!("{f:?}")).collect();
    let ring = Ring::new(AbGroup::from_flat(e, add, zero)?.with_labels(labels)?, mul)?;
    let action = maps.iter().flat_map(|f| f.iter().copied()).collect();
    let module = TModule::new(ring.truss().clone(), Heap::from_group(g.clone()), action)?;
    let ext = extend(&module, g.zero())?;
    for p in 0..ext.order() {
        for q in 0..ext.order() {
            let ((f, x), (h, y)) = (ext.unpair(p), ext.unpair(q));
            let want = ext.pair(ring.mul(f, h), g.add(x, maps[f][y]));
            if ext.truss().mul(p, q) != want {
                return Err(AlgebraError::Internal(format!("end product differs at ({p},{q})")));
            }
        }
    }
    Ok(EndTruss { maps, ring, module, ext })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntegerProbeReport {
    pub n: u64,
    pub m: i64,
    pub residue: u64,
    pub range: i64,
    pub samples: usize,
    pub subheap_closed: bool,
    pub lambda_closed: bool,
    pub rho_closed: bool,
    /// `[x, y, p]` lands in the set iff `x = y mod n`.
    pub relation_is_residue: bool,
    pub residue_map_multiplicative: bool,
    pub residue_map_bracket: bool,
    /// The set absorbed every sampled product, and whether it should (`n | m`).
    pub ideal_observed: bool,
    pub ideal_expected: bool,
    pub witness: Option<Vec<String>>,
}

impl IntegerProbeReport {
    pub fn passed(&self) -> bool {
        self.subheap_closed
            && self.lambda_closed
            && self.rho_closed
            && self.relation_is_residue
            && self.residue_map_multiplicative
            && self.residue_map_bracket
            && (!self.ideal_expected || self.ideal_observed)
    }
}

/// Samples `(nZ)_0^m = {kn + m}` inside `T(Z)` on `|x| <= range`. Elements
/// of the set are drawn as `kn + m` with `k` chosen to stay in range.
pub fn integer_paragon_probe(n: u64, m: i64, range: i64, policy: &CheckPolicy) -> Result<IntegerProbeReport> {
    if n == 0 || range <= 0 {
        return Err(AlgebraError::SizeBound("need n >= 1 and range >= 1".into()));
    }
    let nb = BigInt::from(n);
    let r = BigInt::from(m).mod_floor(&nb);
    let in_set = |x: &BigInt| x.mod_floor(&nb) == r;
    let residue = |x: &BigInt| x.mod_floor(&nb);
    let mut rng = policy.rng();
    let kmax = (range / n as i64).max(1);
    let member = |rng: &mut rand_chacha::ChaCha8Rng| BigInt::from(rng.gen_range(-kmax..=kmax)) * &nb + &r;
    let mut report = IntegerProbeReport {
        n,
        m,
        residue: r.to_u64().unwrap_or(0),
        range,
        samples: policy.samples,
        subheap_closed: true,
        lambda_closed: true,
        rho_closed: true,
        relation_is_residue: true,
        residue_map_multiplicative: true,
        residue_map_bracket: true,
        ideal_observed: true,
        ideal_expected: r.is_zero(),
        witness: None,
    };
    for _ in 0..policy.samples {
        let (p, q, s) = (member(&mut rng), member(&mut rng), member(&mut rng));
        let x = BigInt::from(rng.gen_range(-range..=range));
        let y = BigInt::from(rng.gen_range(-range..=range));
        let z = BigInt::from(rng.gen_range(-range..=range));
        let fail = |what: &str, vals: &[&BigInt]| {
            let mut w = vec![what.to_string()];
            w.extend(vals.iter().map(|v| v.to_string()));
            Some(w)
        };
        let mut witness = None;
        if !in_set(&(&p - &q + &s)) {
            report.subheap_closed = false;
            witness = fail("subheap", &[&p, &q, &s]);
        }
        if !in_set(&(&x * &p - &x * &q + &q)) {
            report.lambda_closed = false;
            witness = witness.or(fail("lambda", &[&q, &x, &p]));
        }
        if !in_set(&(&p * &x - &q * &x + &q)) {
            report.rho_closed = false;
            witness = witness.or(fail("rho", &[&q, &p, &x]));
        }
        if in_set(&(&x - &y + &p)) != (residue(&x) == residue(&y)) {
            report.relation_is_residue = false;
            witness = witness.or(fail("relation", &[&x, &y, &p]));
        }
        if residue(&(&x * &y)) != (residue(&x) * residue(&y)).mod_floor(&nb) {
            report.residue_map_multiplicative = false;
            witness = witness.or(fail("product", &[&x, &y]));
        }
        if residue(&(&x - &y + &z)) != (residue(&x) - residue(&y) + residue(&z)).mod_floor(&nb) {
            report.residue_map_bracket = false;
            witness = witness.or(fail("bracket", &[&x, &y, &z]));
        }
        if !(in_set(&(&x * &p)) && in_set(&(&p * &x))) {
            report.ideal_observed = false;
            if report.ideal_expected {
                witness = witness.or(fail("ideal", &[&x, &p]));
            }
        }
        if witness.is_some() && report.witness.is_none() {
            report.witness = witness;
        }
    }
    Ok(report)
}

/// The left brace on `Z3 x Z2` with `(a,b)(a',b') = (a + (-1)^b a', b + b')`.
/// Its multiplicative group is `S3`; it is not a right brace.
pub fn s3_left_brace() -> Brace {
    let add = AbGroup::cyclic_product(&[3, 2]);
    let idx = |a: usize, b: usize| a * 2 + b;
    let mul = (0..36)
        .map(|i| {
            let ((a, b), (a2, b2)) = ((i / 6 / 2, i / 6 % 2), (i % 6 / 2, i % 6 % 2));
            let a2 = if b == 1 { (3 - a2) % 3 } else { a2 };
            idx((a + a2) % 3, (b + b2) % 2)
        })
        .collect();
    let mul = FiniteGroup::from_flat(6, mul).expect("S3 table");
    Brace::new(add, mul, Sided::Left).expect("left brace laws")
}

/// The order-16 extension `Z^(2)/4Z [Z^(2)/4Z; 0]`.
pub fn za_extension() -> ExtTruss {
    extend(&TModule::regular(&za_truss(2, 4)), 0).expect("extension of Z^(2)/4Z")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::truss::{inverse_of, units};

    #[test]
    fn modular_rings() {
        let t = zn_truss(4);
        assert_eq!((t.identity(), t.absorber()), (Some(1), Some(0)));
        let t1 = zn_truss(1);
        assert_eq!(t1.order(), 1);
        assert_eq!(zn_truss(12).order(), 12);
    }

    #[test]
    fn za_basics() {
        let t = za_truss(2, 4);
        assert_eq!(t.identity(), Some(0));
        assert_eq!(t.absorber(), None);
        assert_eq!(za_truss(1, 2).order(), 2);
        assert!(za_ideal_probe(2, 4, 1000, &CheckPolicy::with_seed(0, 500)).holds);
    }

    #[test]
    fn za_powers() {
        assert_eq!(za_power(2, 1, 0), BigInt::zero());
        assert_eq!(za_power(2, 1, 2), BigInt::from(4));
        assert_eq!(za_power(2, 3, 2), BigInt::from(24));
        assert_eq!(za_power(3, -7, 5), za_power_iterated(3, -7, 5));
    }

    #[test]
    fn order_congruence() {
        let r = order_congruence_check(4, 10).unwrap();
        assert!(r.congruence_holds);
        assert_eq!(r.one_orders, vec![(1, 2), (2, 4), (3, 8), (4, 16)]);
        assert!(order_congruence_check(11, 1).is_err());
    }

    #[test]
    fn z2c2_group_ring() {
        let gr = group_ring(&zn_ring(2), &crate::groupid::cyclic(2)).unwrap();
        assert_eq!(gr.ring.order(), 4);
        // (c_e, c_g): index 3 is 1 + g, index 2 is 1, index 1 is g
        assert_eq!(gr.fiber(0).members(), &[0, 3]);
        assert_eq!(gr.fiber(1).members(), &[1, 2]);
        let checks = augmentation_fibers(&gr).unwrap();
        assert!(checks.iter().all(AugmentationFiberCheck::passed));
        assert!(checks[1].subtruss);
    }

    #[test]
    fn trivial_group_ring() {
        let gr = group_ring(&zn_ring(3), &crate::groupid::cyclic(1)).unwrap();
        assert_eq!(gr.ring.truss().table(), zn_truss(3).table());
    }

    #[test]
    fn group_ring_size_bound() {
        assert!(group_ring(&zn_ring(4), &crate::groupid::cyclic(5)).is_err());
    }

    #[test]
    fn truncated_polynomials() {
        let p = trunc_poly(1, 2).unwrap();
        let t = p.ring.truss();
        // index = 2*c0 + c1: 1 is 2, 1+x is 3
        assert_eq!(units(t).unwrap().members(), &[2, 3]);
        assert_eq!(inverse_of(t, 3), Some(3));
        assert_eq!(p.formula_inverse(3), Some(3));
        let p3 = trunc_poly(1, 3).unwrap();
        let one_x_x2 = p3.index(&[1, 1, 1]);
        assert_eq!(p3.formula_inverse(one_x_x2), Some(p3.index(&[1, 1, 0])));
        let z4 = trunc_poly_truss(2, 1).unwrap();
        assert_eq!(z4.table(), zn_truss(4).table());
    }

    #[test]
    fn series_inverse_is_correct() {
        for (k, n) in trunc_poly_corpus() {
            let p = trunc_poly(k, n).unwrap();
            let t = p.ring.truss();
            for u in units(t).unwrap().members() {
                assert_eq!(p.series_inverse(*u), inverse_of(t, *u), "k={k} n={n} u={u}");
            }
        }
    }

    #[test]
    fn endomorphism_extensions() {
        let e2 = end_truss(&AbGroup::cyclic(2)).unwrap();
        assert_eq!((e2.maps.len(), e2.ext.order()), (2, 4));
        let e3 = end_truss(&AbGroup::cyclic(3)).unwrap();
        assert_eq!(e3.ext.order(), 9);
        let klein = AbGroup::cyclic_product(&[2, 2]);
        assert_eq!(end_maps_bruteforce(&klein).unwrap(), end_maps_generators(&klein).unwrap());
        assert!(e3.maps.contains(&vec![0, 0, 0]) && e3.maps.contains(&vec![0, 1, 2]));
    }

    #[test]
    fn integer_probes() {
        let p = CheckPolicy::with_seed(0, 2000);
        let odd = integer_paragon_probe(2, 1, 1000, &p).unwrap();
        assert!(odd.passed() && !odd.ideal_expected && !odd.ideal_observed);
        let ideal = integer_paragon_probe(3, 0, 1000, &p).unwrap();
        assert!(ideal.passed() && ideal.ideal_observed);
        assert!(integer_paragon_probe(3, 2, 1000, &p).unwrap().passed());
    }

    #[test]
    fn left_brace_table() {
        let b = s3_left_brace();
        assert!(!b.multiplicative().is_abelian());
    }
}
