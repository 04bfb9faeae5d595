use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use t5free::constructions::random_semibipartite;
use t5free::detection::{
    contains_t5, has_independent_neighborhoods, is_semibipartite, optimal_partitions, semibipartite_core,
};
use t5free::hypergraph::{binom3, triple_unrank};
use t5free::{OrderedPartition, TripleSystem, VertexSet};

fn system(min_n: usize, max_n: usize) -> impl Strategy<Value = TripleSystem> {
    (min_n..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), binom3(n)).prop_map(move |bits| {
            TripleSystem::from_triples(n, bits.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| triple_unrank(i))).unwrap()
        })
    })
}

/// Minimum inconsistent-edge count over every ordered partition, via the
/// public edge classification.
fn brute_d(h: &TripleSystem) -> usize {
    (0u64..1 << h.n())
        .map(|x| h.classify_edges(&OrderedPartition::new(h.n(), VertexSet(x)).unwrap()).unwrap().d_p)
        .min()
        .unwrap()
}

#[test]
fn independence_iff_t5_free_up_to_five_vertices() {
    for n in 3..=5 {
        for mask in 0u64..1 << binom3(n) {
            let h = TripleSystem::from_mask(n, mask).unwrap();
            assert_eq!(has_independent_neighborhoods(&h), !contains_t5(&h), "{h}");
        }
    }
}

#[test]
fn optimal_value_matches_brute_force_up_to_five_vertices() {
    for n in 3..=5 {
        for mask in 0u64..1 << binom3(n) {
            let h = TripleSystem::from_mask(n, mask).unwrap();
            assert_eq!(optimal_partitions(&h, 4).unwrap().d_h, brute_d(&h), "{h}");
        }
    }
}

#[test]
fn semibipartite_samples_have_independent_neighborhoods() {
    let mut rng = ChaCha8Rng::seed_from_u64(606);
    for _ in 0..10_000 {
        let n = rng.gen_range(6..=16);
        let a = rng.gen_range(2..n);
        let h = random_semibipartite(n, a, rng.gen_range(0.05..1.0), rng.gen()).unwrap();
        assert!(has_independent_neighborhoods(&h), "{h}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn adding_an_edge_keeps_t5(h in system(5, 9), r in any::<prop::sample::Index>()) {
        let e = triple_unrank(r.index(binom3(h.n())));
        let mut g = h.clone();
        g.insert(e[0], e[1], e[2]).unwrap();
        prop_assert!(!contains_t5(&h) || contains_t5(&g));
    }

    #[test]
    fn semibipartite_iff_zero_optimum(h in system(3, 9)) {
        let sb = is_semibipartite(&h).unwrap();
        let opt = optimal_partitions(&h, 1).unwrap();
        prop_assert_eq!(sb.is_some(), opt.d_h == 0);
        if let Some(p) = sb {
            prop_assert_eq!(h.inconsistent_count(&p).unwrap(), 0);
        }
    }

    #[test]
    fn optimal_value_matches_brute_force(h in system(6, 8)) {
        prop_assert_eq!(optimal_partitions(&h, 1).unwrap().d_h, brute_d(&h));
    }

    #[test]
    fn core_is_an_idempotent_subsystem(h in system(5, 10), x in any::<u64>()) {
        let p = OrderedPartition::new(h.n(), VertexSet(x & ((1u64 << h.n()) - 1))).unwrap();
        let core = semibipartite_core(&h, &p).unwrap();
        prop_assert!(core.is_subsystem_of(&h));
        prop_assert_eq!(semibipartite_core(&core, &p).unwrap(), core);
    }

    #[test]
    fn witnesses_are_optimal(h in system(5, 8)) {
        let opt = optimal_partitions(&h, 8).unwrap();
        for p in &opt.witnesses {
            prop_assert_eq!(h.inconsistent_count(p).unwrap(), opt.d_h);
        }
        prop_assert!(opt.witnesses.len() as u64 <= opt.total_witnesses);
    }
}
