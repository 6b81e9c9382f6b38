//! Property tests: randomized structural invariants that must hold for
//! every input, checked against naive re-implementations where a second
//! route exists.

use proptest::prelude::*;
use quandle_topology::{
    dedup_orders, enumerate_orders, enumerate_quandles, enumerate_right_orders,
    is_crosspartite, is_left_continuous, is_right_continuous, order_to_topology,
    poset_isomorphic, topology_to_order, DedupMode, FiniteTopology, Permutation, Quandle,
    StrictOrder,
};

/// Naive axiom check, written independently of the constructor's.
fn is_quandle_table(rows: &[Vec<usize>]) -> bool {
    let n = rows.len();
    let in_range = rows.iter().all(|r| r.len() == n && r.iter().all(|&v| v < n));
    if n == 0 || !in_range {
        return false;
    }
    let op = |x: usize, y: usize| rows[x][y];
    let idem = (0..n).all(|x| op(x, x) == x);
    let bij = (0..n).all(|y| {
        let mut seen = vec![false; n];
        (0..n).for_each(|x| seen[op(x, y)] = true);
        seen.iter().all(|&s| s)
    });
    let dist = (0..n).all(|x| {
        (0..n).all(|y| (0..n).all(|z| op(op(x, y), z) == op(op(x, z), op(y, z))))
    });
    idem && bij && dist
}

fn small_table() -> impl Strategy<Value = Vec<Vec<usize>>> {
    (2usize..=4).prop_flat_map(|n| {
        proptest::collection::vec(proptest::collection::vec(0..n, n), n)
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just(n).prop_perturb(move |n, mut rng| {
        let mut image: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            let j = (rng.next_u64() as usize) % (i + 1);
            image.swap(i, j);
        }
        Permutation::new(image).expect("shuffle of 0..n is a permutation")
    })
}

/// Any quandle of order 3..=4, one strategy draw = one iso class rep.
fn small_quandle() -> impl Strategy<Value = Quandle> {
    let pool: Vec<Quandle> = (1..=4)
        .flat_map(|n| enumerate_quandles(n).unwrap())
        .collect();
    proptest::sample::select(pool)
}

fn random_order(n: usize) -> impl Strategy<Value = StrictOrder> {
    proptest::collection::vec((0..n, 0..n), 0..=n * 2).prop_filter_map(
        "edge set must be acyclic",
        move |edges| StrictOrder::from_edges(n, &edges).ok(),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn constructor_agrees_with_naive_axiom_check(rows in small_table()) {
        let ok = Quandle::from_rows(&rows).is_ok();
        prop_assert_eq!(ok, is_quandle_table(&rows));
    }

    #[test]
    fn closure_is_transitive_and_irreflexive(o in random_order(5)) {
        let n = o.point_count();
        for x in 0..n {
            prop_assert!(!o.lt(x, x));
            for y in 0..n {
                for z in 0..n {
                    if o.lt(x, y) && o.lt(y, z) {
                        prop_assert!(o.lt(x, z));
                    }
                }
            }
        }
    }

    #[test]
    fn reduction_regenerates_the_order(o in random_order(6)) {
        let back = StrictOrder::from_edges(6, &o.transitive_reduction().edges).unwrap();
        prop_assert_eq!(back, o);
    }

    #[test]
    fn relabeling_preserves_the_whole_story(q in small_quandle(), seed in any::<u64>()) {
        let n = q.order();
        let p = {
            let mut image: Vec<usize> = (0..n).collect();
            let mut state = seed | 1;
            for i in (1..n).rev() {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                image.swap(i, (state >> 33) as usize % (i + 1));
            }
            Permutation::new(image).unwrap()
        };
        let r = q.relabel(&p);
        prop_assert!(Quandle::from_rows(&r.rows()).is_ok());
        let mut orig_sizes: Vec<usize> = q.orbits().blocks().iter().map(|b| b.len()).collect();
        let mut new_sizes: Vec<usize> = r.orbits().blocks().iter().map(|b| b.len()).collect();
        orig_sizes.sort_unstable();
        new_sizes.sort_unstable();
        prop_assert_eq!(orig_sizes, new_sizes);
        let before = enumerate_right_orders(&q, DedupMode::None).unwrap().orders.len();
        let after = enumerate_right_orders(&r, DedupMode::None).unwrap().orders.len();
        prop_assert_eq!(before, after);
        prop_assert_eq!(q.canonical_table(), r.canonical_table());
    }

    #[test]
    fn engine_output_is_sound_and_reversal_closed(q in small_quandle()) {
        let found = enumerate_right_orders(&q, DedupMode::None).unwrap().orders;
        let parts = q.orbits();
        for o in &found {
            prop_assert!(is_right_continuous(&q, o));
            prop_assert!(is_crosspartite(o, &parts));
            prop_assert!(found.contains(&o.dual()));
        }
    }

    #[test]
    fn dedup_never_invents_and_only_shrinks(q in small_quandle()) {
        let found = enumerate_right_orders(&q, DedupMode::None).unwrap().orders;
        for mode in DedupMode::ALL {
            let classes = dedup_orders(&q, &found, mode);
            prop_assert!(classes.len() <= found.len());
            for c in &classes {
                prop_assert!(found.contains(c));
            }
            // A second pass is a no-op: representatives stay representatives.
            prop_assert_eq!(dedup_orders(&q, &classes, mode), classes);
        }
        let iso = dedup_orders(&q, &found, DedupMode::Iso).len();
        let iso_dual = dedup_orders(&q, &found, DedupMode::IsoDual).len();
        prop_assert!(iso_dual <= iso);
    }

    #[test]
    fn left_continuity_is_what_the_filter_says(q in small_quandle(), o in random_order(4)) {
        if o.point_count() == q.order() {
            let direct = (0..q.order()).all(|z| {
                o.pairs().iter().all(|&(x, y)| {
                    let (zx, zy) = (q.op(z, x), q.op(z, y));
                    zx == zy || o.lt(zx, zy)
                })
            });
            prop_assert_eq!(is_left_continuous(&q, &o), direct);
        }
    }

    #[test]
    fn order_topology_round_trip(o in random_order(5)) {
        let t = order_to_topology(&o);
        prop_assert!(t.is_t0());
        prop_assert_eq!(topology_to_order(&t).unwrap(), o);
    }

    #[test]
    fn minimal_opens_are_the_up_sets(o in random_order(4)) {
        let t = order_to_topology(&o);
        for x in 0..4 {
            let mut up = 1u64 << x;
            for w in 0..4 {
                if o.lt(x, w) {
                    up |= 1 << w;
                }
            }
            prop_assert_eq!(t.minimal_open(x), up);
        }
    }

    #[test]
    fn wire_round_trips(q in small_quandle(), o in random_order(5)) {
        let qj = serde_json::to_string(&q).unwrap();
        prop_assert_eq!(Quandle::parse_json(&qj).unwrap(), q.clone());
        let qt = q.to_text();
        prop_assert_eq!(Quandle::parse_text(&qt).unwrap(), q);
        let oj = serde_json::to_string(&o).unwrap();
        prop_assert_eq!(StrictOrder::parse_json(&oj).unwrap(), o.clone());
        let t = order_to_topology(&o);
        let tj = serde_json::to_string(&t).unwrap();
        prop_assert_eq!(FiniteTopology::parse_json(&tj).unwrap(), t);
    }

    #[test]
    fn iso_check_is_an_equivalence_witness(o in random_order(5), p in permutation(5)) {
        let relabeled = o.relabel(&p);
        let found = poset_isomorphic(&o, &relabeled).expect("relabeling is an isomorphism");
        for x in 0..5 {
            for y in 0..5 {
                prop_assert_eq!(o.lt(x, y), relabeled.lt(found.apply(x), found.apply(y)));
            }
        }
    }
}

/// Non-randomized bulk invariant: the census really is duplicate-free and
/// sorted, for every n the caps allow quickly.
#[test]
fn census_is_sorted_and_unique() {
    for n in 0..=4 {
        let orders = enumerate_orders(n).unwrap();
        let mut keys: Vec<Vec<(usize, usize)>> = orders.iter().map(|o| o.pairs()).collect();
        let sorted = keys.windows(2).all(|w| w[0] < w[1]);
        assert!(sorted, "census at n={n} out of order");
        keys.dedup();
        assert_eq!(keys.len(), orders.len());
    }
}
