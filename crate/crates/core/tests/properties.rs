mod common;

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::sync::Arc;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::{fan_sublattice_open, to_set, Oracle};
use wfspace::catalog::chain::{chain_omega_wf_select, RayFamily};
use wfspace::catalog::fan::{fan_is_scott_open, FanOpen};
use wfspace::catalog::ordinal::{Ordinal, Term};
use wfspace::catalog::random_ray_problem;
use wfspace::catalog::stream::{extract_chain, verify_chain, PermutedNatStream};
use wfspace::classify::{classify, way_below, OMEGA_WELL_FILTERED};
use wfspace::document::{read_space, write_space};
use wfspace::enumerate::{random_rudin_problem, random_space};
use wfspace::powerspace::compact_saturated;
use wfspace::reflection::{reflect_omega, reflection_lemmas};
use wfspace::rudin::{
    family_irreducible_in_smyth, family_irreducible_in_smyth_by_definition, rudin_search, FamilyChain,
};
use wfspace::topology::{irreducible_sets, sober_check};
use wfspace::{ContinuousMap, FiniteSpace, SetFamily};

fn space(seed: u64, n: usize) -> FiniteSpace {
    random_space(&mut ChaCha8Rng::seed_from_u64(seed), n)
}

fn arb_space(max: usize) -> impl Strategy<Value = FiniteSpace> {
    (any::<u64>(), 1..=max).prop_map(|(seed, n)| space(seed, n))
}

fn arb_ordinal() -> impl Strategy<Value = Ordinal> {
    prop_oneof![
        1 => Just(Ordinal::Omega1),
        8 => prop::collection::vec((0u32..6, 0u64..5), 0..4).prop_map(|pairs| Ordinal::from_pairs(&pairs)),
    ]
}

/// Coefficients by exponent, highest first.
fn dense(a: &Ordinal) -> Option<[u64; 8]> {
    let mut d = [0u64; 8];
    for t in a.terms()? {
        d[7 - t.exp as usize] += t.coef;
    }
    Some(d)
}

fn dense_cmp(a: &Ordinal, b: &Ordinal) -> Ordering {
    match (dense(a), dense(b)) {
        (None, None) => Ordering::Equal,
        (None, _) => Ordering::Greater,
        (_, None) => Ordering::Less,
        (Some(x), Some(y)) => x.cmp(&y),
    }
}

fn arb_fan_open() -> impl Strategy<Value = FanOpen> {
    let thr = prop_oneof![Just(None), (0u64..=5).prop_map(Some)];
    (any::<bool>(), any::<bool>(), thr.clone(), prop::collection::btree_map(0u64..=5, thr, 0..4))
        .prop_map(|(has_bottom, has_top, default, exceptions)| FanOpen { has_bottom, has_top, default, exceptions })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn irreducible_closed_sets_match_oracle(x in arb_space(6)) {
        let o = Oracle::of(&x);
        let lib: BTreeSet<u64> = irreducible_sets(&x).iter().map(|a| a.bits()).collect();
        prop_assert_eq!(&lib, &o.irreducible_closed());
        prop_assert_eq!(sober_check(&x).sober, o.is_sober());
        prop_assert_eq!(lib, o.point_closures());
    }

    #[test]
    fn compact_saturated_matches_oracle(x in arb_space(6)) {
        let o = Oracle::of(&x);
        let mut lib: Vec<u64> = compact_saturated(&x).iter().map(|a| a.bits()).collect();
        lib.sort_unstable();
        prop_assert_eq!(lib, o.compact_saturated());
    }

    #[test]
    fn omega_wf_verdict_matches_oracle(x in arb_space(4)) {
        let o = Oracle::of(&x);
        prop_assert_eq!(classify(&x).unwrap().holds(OMEGA_WELL_FILTERED), o.omega_well_filtered());
    }

    #[test]
    fn certificates_recheck(x in arb_space(5)) {
        let r = classify(&x).unwrap();
        for (property, c) in &r.certificates {
            prop_assert!(c.check().is_ok(), "{property}: {c:?}");
            prop_assert!(!r.holds(property));
        }
    }

    #[test]
    fn family_chain_inclusions(x in arb_space(6)) {
        let chain = FamilyChain::compute(&x).unwrap();
        prop_assert!(chain.inclusions_hold());
        prop_assert!(chain.all_equal());
    }

    #[test]
    fn way_below_matches_oracle(x in arb_space(4), i in any::<prop::sample::Index>(), j in any::<prop::sample::Index>()) {
        let o = Oracle::of(&x);
        prop_assume!(o.opens.len() <= 16);
        let (u, v) = (x.opens()[i.index(x.opens().len())], x.opens()[j.index(x.opens().len())]);
        prop_assert_eq!(way_below(&x, u, v), o.way_below(u.bits(), v.bits()));
    }

    #[test]
    fn rudin_search_matches_brute_force(seed in any::<u64>(), n in 1usize..=6) {
        let p = random_rudin_problem(&mut ChaCha8Rng::seed_from_u64(seed), n);
        let o = Oracle::of(&p.base);
        let family: Vec<u64> = p.family.iter().map(|k| k.bits()).collect();
        let sol = rudin_search(&p).unwrap();
        let mut got: Vec<u64> = sol.minimal_members.iter().map(|a| a.bits()).collect();
        got.sort_unstable();
        prop_assert_eq!(got, o.rudin_minimal(&family, p.closed.bits()));
        prop_assert!(sol.minimal_members.iter().zip(&sol.irreducible_flags).any(|(a, &f)| f && o.is_irreducible(a.bits())));
    }

    #[test]
    fn smyth_irreducibility_shortcut(x in arb_space(4), mask in any::<u64>()) {
        let ks = compact_saturated(&x);
        let members: Vec<_> = ks.iter().enumerate().filter(|(i, _)| mask >> (i % 64) & 1 == 1).map(|(_, k)| k).collect();
        prop_assume!(!members.is_empty());
        let fam = SetFamily::new(x.len(), members);
        prop_assert_eq!(
            family_irreducible_in_smyth(&x, &fam).unwrap(),
            family_irreducible_in_smyth_by_definition(&x, &fam).unwrap()
        );
    }

    #[test]
    fn document_round_trip(x in arb_space(6)) {
        let once = write_space(&x);
        let y = read_space(&once).unwrap();
        prop_assert_eq!(write_space(&y), once);
        prop_assert!(y.is_homeomorphic(&x));
    }

    #[test]
    fn reflection_lemmas_hold(x in arb_space(5)) {
        let x = Arc::new(x);
        prop_assert!(reflection_lemmas(&x).unwrap().all_pass());
        prop_assert!(reflect_omega(&x).unwrap().target.is_homeomorphic(&x));
    }

    #[test]
    fn continuous_maps_match_oracle(x in arb_space(3), y in arb_space(3)) {
        let (x, y) = (Arc::new(x), Arc::new(y));
        let mut lib: Vec<Vec<usize>> = ContinuousMap::enumerate(&x, &y).unwrap().iter().map(|f| f.table().to_vec()).collect();
        lib.sort();
        let mut oracle = Oracle::of(&x).continuous_maps(&Oracle::of(&y));
        oracle.sort();
        prop_assert_eq!(lib, oracle);
    }

    #[test]
    fn ordinal_order_matches_dense(a in arb_ordinal(), b in arb_ordinal()) {
        prop_assert_eq!(a.cmp(&b), dense_cmp(&a, &b));
    }

    #[test]
    fn ordinal_notation_round_trips(a in arb_ordinal()) {
        prop_assert_eq!(a.to_string().parse::<Ordinal>().unwrap(), a.clone());
        let json = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<Ordinal>(&json).unwrap(), a);
    }

    #[test]
    fn successor_and_fundamental_sequences(a in arb_ordinal(), n in 0u64..50) {
        if let Some(s) = a.succ() {
            prop_assert!(s > a);
            prop_assert!(!s.is_limit());
        }
        if a.is_limit() && !a.is_omega1() {
            let f = a.fundamental(n).unwrap();
            let g = a.fundamental(n + 1).unwrap();
            prop_assert!(f < g && g < a);
            prop_assert_eq!(a.fundamental_index_reaching(&g), Some(n + 1));
        }
    }

    #[test]
    fn chain_selection_is_least(seed in any::<u64>()) {
        let (family, u) = random_ray_problem(&mut ChaCha8Rng::seed_from_u64(seed));
        prop_assert!(family.validate().is_ok());
        let i = chain_omega_wf_select(&family, &u).unwrap();
        prop_assert!(family.member(i).is_subset(&u));
        for j in 0..i {
            prop_assert!(!family.member(j).is_subset(&u));
        }
        prop_assert!(family.intersection().is_subset(&u));
    }

    #[test]
    fn countable_sequences_never_reach_omega1(start in any::<u64>(), coef in 1u64..9) {
        let lo = Ordinal::from_terms(vec![Term { exp: 1, coef }]).unwrap();
        let fam = RayFamily::Sequence { prefix: vec![], limit: Ordinal::Omega1, start };
        prop_assert!(chain_omega_wf_select(&fam, &wfspace::catalog::chain::ChainRay::new(lo)).is_err());
    }

    #[test]
    fn fan_scott_open_matches_sublattice(u in arb_fan_open()) {
        prop_assert_eq!(fan_is_scott_open(&u), fan_sublattice_open(&u));
    }

    #[test]
    fn extracted_chains_dominate(seed in any::<u64>(), block in 1u64..10, k in 1usize..64) {
        let mut s = PermutedNatStream::new(seed, block);
        let c = extract_chain(&mut s, k).unwrap();
        prop_assert!(verify_chain(&s, &c));
        prop_assert!(c.chain.windows(2).all(|w| w[0] <= w[1]));
        prop_assert!(c.elements.iter().zip(&c.chain).all(|(d, c)| d <= c));
    }
}

#[test]
fn oracle_sanity() {
    let v = Oracle::of(&FiniteSpace::v_space());
    assert_eq!(v.irreducible_closed().len(), 3);
    assert_eq!(v.rudin_minimal(&[0b110], 0b111), vec![0b011, 0b101]);
    assert!(v.way_below(0b010, 0b010));
    assert!(to_set(0b11).contains(1));
}
