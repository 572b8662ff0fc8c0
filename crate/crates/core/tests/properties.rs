//! Structural invariants as property tests over small generated structures.

use proptest::prelude::*;
use truss_core::brace::{brace_from_truss, ideals, socle, truss_from_brace};
use truss_core::catalog::{
    augmentation_fibers, group_ring, trunc_poly_truss, za_power, za_power_iterated, za_truss, zn_ring, zn_truss,
};
use truss_core::check::CheckPolicy;
use truss_core::extension::{extend, theta_iso};
use truss_core::groupid::{abelian_invariants, cyclic, is_isomorphic, FiniteGroup};
use truss_core::suite::{congruence_corpus, extension_corpus};
use truss_core::tmodule::{thm_cong_check, TModule};
use truss_core::truss::{is_paragon, quotient_truss, truss_morphism_violation, units_paragon_report, ParagonKind};
use truss_core::{AbGroup, Heap, Subset, Truss};

fn policy() -> CheckPolicy {
    CheckPolicy::with_seed(0, 2_000)
}

/// Invariant factors of small abelian groups, product at most 16.
fn small_orders() -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(1usize..=4, 1..=3).prop_filter("order <= 16", |v| v.iter().product::<usize>() <= 16)
}

/// A small catalogue of two-sided trusses of order <= 16.
fn truss_strategy() -> impl Strategy<Value = Truss> {
    prop_oneof![
        (2usize..=12).prop_map(zn_truss),
        (1u64..=4, 2usize..=12).prop_map(|(a, n)| za_truss(a, n)),
        (1usize..=4).prop_map(|n| trunc_poly_truss(1, n).unwrap()),
        Just(trunc_poly_truss(2, 2).unwrap()),
        Just(group_ring(&zn_ring(2), &cyclic(2)).unwrap().ring.into_truss()),
        Just(group_ring(&zn_ring(2), &cyclic(3)).unwrap().ring.into_truss()),
        Just(group_ring(&zn_ring(3), &cyclic(2)).unwrap().ring.into_truss()),
    ]
}

fn bits_subset(n: usize, bits: u64) -> Subset {
    Subset::from_bits(n, bits & ((1u64 << n) - 1))
}

/// The sub-heap generated by `gens`: the coset `g0 + <g_i - g0>`.
fn generated_subheap(h: &Heap, gens: &[usize]) -> Subset {
    let n = h.order();
    let mut inside = vec![false; n];
    for &g in gens {
        inside[g % n] = true;
    }
    loop {
        let members: Vec<usize> = (0..n).filter(|&i| inside[i]).collect();
        let mut grew = false;
        for &a in &members {
            for &b in &members {
                for &c in &members {
                    let d = h.bracket(a, b, c);
                    if !inside[d] {
                        inside[d] = true;
                        grew = true;
                    }
                }
            }
        }
        if !grew {
            return Subset::from_mask(inside);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn heap_axioms(orders in small_orders(), xs in prop::collection::vec(0usize..64, 5)) {
        let h = Heap::from_group(AbGroup::cyclic_product(&orders));
        let n = h.order();
        let [a, b, c, d, e] = [xs[0] % n, xs[1] % n, xs[2] % n, xs[3] % n, xs[4] % n];
        prop_assert_eq!(h.bracket(h.bracket(a, b, c), d, e), h.bracket(a, b, h.bracket(c, d, e)));
        prop_assert_eq!(h.bracket(a, a, b), b);
        prop_assert_eq!(h.bracket(b, a, a), b);
        prop_assert_eq!(h.bracket(a, b, c), h.bracket(c, b, a));
    }

    #[test]
    fn retract_of_group_heap_is_the_group(orders in small_orders()) {
        let g = AbGroup::cyclic_product(&orders);
        let h = Heap::from_group(g.clone());
        prop_assert!(h.retract(g.zero()).unwrap().same_table(&g));
    }

    #[test]
    fn translate_is_a_retract_isomorphism(orders in small_orders(), e in 0usize..64, e2 in 0usize..64) {
        let h = Heap::from_group(AbGroup::cyclic_product(&orders));
        let n = h.order();
        let (e, e2) = (e % n, e2 % n);
        let f = h.translate(e, e2).unwrap();
        let mut image = f.clone();
        image.sort_unstable();
        image.dedup();
        prop_assert_eq!(image.len(), n);
        let (g1, g2) = (h.retract(e).unwrap(), h.retract(e2).unwrap());
        for a in 0..n {
            for b in 0..n {
                prop_assert_eq!(f[g1.add(a, b)], g2.add(f[a], f[b]));
            }
        }
    }

    #[test]
    fn subheap_classes_partition_evenly(orders in small_orders(), gens in prop::collection::vec(0usize..64, 1..=3)) {
        let h = Heap::from_group(AbGroup::cyclic_product(&orders));
        let s = generated_subheap(&h, &gens);
        let p = h.subheap_relation_classes(&s).unwrap();
        let mut seen = vec![0usize; h.order()];
        for c in p.classes() {
            prop_assert_eq!(c.len(), s.len());
            for &x in c.members() {
                seen[x] += 1;
            }
        }
        prop_assert!(seen.iter().all(|&k| k == 1));
    }

    #[test]
    fn paragon_closure_does_not_depend_on_the_witness(t in truss_strategy(), gens in prop::collection::vec(0usize..64, 1..=3)) {
        let s = generated_subheap(t.heap(), &gens);
        let closed = |q: usize| {
            (0..t.order()).all(|x| s.members().iter().all(|&p| {
                s.contains(t.bracket(t.mul(x, p), t.mul(x, q), q)) && s.contains(t.bracket(t.mul(p, x), t.mul(q, x), q))
            }))
        };
        let first = closed(s.members()[0]);
        for &q in s.members() {
            prop_assert_eq!(closed(q), first);
        }
        let check = is_paragon(&t, &s);
        prop_assert!(check.witness_independent);
        prop_assert_eq!(check.kind.is_two_sided(), first);
    }

    #[test]
    fn quotients_by_paragons_are_sound(t in truss_strategy(), gens in prop::collection::vec(0usize..64, 1..=3)) {
        let s = generated_subheap(t.heap(), &gens);
        let check = is_paragon(&t, &s);
        prop_assume!(check.kind.is_two_sided());
        let q = quotient_truss(&t, &s).unwrap();
        let pi = q.projection();
        prop_assert_eq!(truss_morphism_violation(&t, &q.truss, pi), None);
        for (k, class) in q.classes.classes().iter().enumerate() {
            prop_assert!(is_paragon(&t, class).kind.is_two_sided());
            prop_assert_eq!(t.is_subtruss(class), q.truss.is_idempotent(k));
        }
        if check.kind == ParagonKind::Ideal {
            prop_assert!(q.truss.absorber().is_some());
        }
    }

    #[test]
    fn induced_modules_validate(t in truss_strategy(), e in 0usize..64) {
        let m = TModule::regular(&t);
        let induced = m.induced_module(e % m.order()).unwrap();
        prop_assert!(induced.validate(&policy()).passed());
    }

    #[test]
    fn shifts_compose_to_the_identity(t in truss_strategy(), bits in any::<u64>(), x in 0usize..64) {
        let m = TModule::regular(&t);
        let n = m.order();
        let s = bits_subset(n, bits);
        prop_assume!(!s.is_empty());
        let e = s.members()[0];
        let x = x % n;
        let there = m.shift_submodule(&s, e, x).unwrap();
        prop_assert_eq!(there.len(), s.len());
        prop_assert_eq!(m.shift_submodule(&there, x, e).unwrap(), s.clone());
        if m.is_induced_submodule(&s) {
            prop_assert!(m.is_induced_submodule(&there));
        }
    }

    #[test]
    fn abelian_invariants_divide_and_multiply(orders in small_orders()) {
        let g = FiniteGroup::from_abelian(&AbGroup::cyclic_product(&orders));
        let inv = abelian_invariants(&g).unwrap();
        prop_assert_eq!(inv.iter().product::<usize>(), g.order());
        for w in inv.windows(2) {
            prop_assert_eq!(w[1] % w[0], 0);
        }
    }

    #[test]
    fn isomorphism_survives_relabelling(orders in small_orders(), seed in any::<u64>()) {
        let g = FiniteGroup::from_abelian(&AbGroup::cyclic_product(&orders));
        let n = g.order();
        // a permutation fixing the identity
        let mut perm: Vec<usize> = (0..n).collect();
        let mut state = seed;
        for i in (2..n).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let j = 1 + (state >> 33) as usize % i;
            perm.swap(i, j);
        }
        let mut inv = vec![0; n];
        for (i, &p) in perm.iter().enumerate() {
            inv[p] = i;
        }
        let table = (0..n * n).map(|k| perm[g.mul(inv[k / n], inv[k % n])]).collect();
        let h = FiniteGroup::from_flat(n, table).unwrap();
        prop_assert_eq!(g.fingerprint(), h.fingerprint());
        prop_assert!(is_isomorphic(&g, &h).unwrap().is_some());
        prop_assert!(is_isomorphic(&h, &g).unwrap().is_some());
        prop_assert!(is_isomorphic(&g, &g).unwrap().is_some());
    }

    #[test]
    fn za_power_closed_form(a in 1u64..=4, m in -20i64..=20, k in 0u32..=12) {
        prop_assert_eq!(za_power(a, m, k), za_power_iterated(a, m, k));
    }

    #[test]
    fn extensions_are_trusses_with_isomorphic_anchors(i in 0usize..12, e2 in 0usize..64) {
        let corpus = extension_corpus().unwrap();
        let inst = &corpus[i % corpus.len()];
        let ext = extend(&inst.module, inst.anchor).unwrap();
        prop_assert!(ext.truss().validate(&policy()).passed());
        let (other, theta) = theta_iso(&ext, e2 % inst.module.order()).unwrap();
        prop_assert_eq!(truss_morphism_violation(ext.truss(), other.truss(), &theta), None);
    }
}

#[test]
fn unit_differences_avoid_units_when_units_form_a_paragon() {
    for n in [2, 4, 8, 16, 32, 64] {
        let r = units_paragon_report(&zn_truss(n)).unwrap();
        assert!(r.is_paragon);
        assert_eq!(r.differences_avoid_units, Some(true), "Z{n}");
        assert_eq!(r.char2, Some(true), "Z{n}");
    }
}

#[test]
fn congruence_classes_are_induced_submodules_on_the_corpus() {
    for (name, m) in congruence_corpus().unwrap() {
        let r = thm_cong_check(&m).unwrap();
        assert!(r.passed(), "{name}: {r:?}");
    }
}

#[test]
fn augmentation_fibres_have_equal_size() {
    for (n, k) in [(2, 2), (2, 3), (3, 2), (2, 4)] {
        let gr = group_ring(&zn_ring(n), &cyclic(k)).unwrap();
        let fibres = augmentation_fibers(&gr).unwrap();
        assert_eq!(fibres.len(), n);
        for f in fibres {
            assert_eq!(f.members.len(), n.pow(k as u32 - 1));
        }
    }
}

#[test]
fn braces_round_trip_and_socle_cosets_are_paragons() {
    for k in 1..=4 {
        let t = za_truss(2, 1 << (k + 1));
        let b = brace_from_truss(&t).unwrap();
        assert!(b.validate(&policy()).passed());
        let back = truss_from_brace(&b).unwrap();
        assert_eq!(back.table(), t.table());
        assert_eq!(brace_from_truss(&back).unwrap(), b);
        let soc = socle(&b);
        for c in 0..b.order() {
            assert!(is_paragon(&back, &b.additive_coset(c, &soc)).kind.is_two_sided());
        }
        for i in ideals(&b) {
            assert!(is_paragon(&back, &i).kind.is_two_sided());
        }
    }
}
