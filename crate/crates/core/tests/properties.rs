mod common;

use std::collections::HashMap;

use common::*;
use lc_equiv_core::gf2::{rref, StreamingEliminator};
use lc_equiv_core::lc_equiv::{
    check_equivalence, count_admissible, find_admissible, find_admissible_exhaustive, solve_system,
    verify_witness,
};
use lc_equiv_core::oracle::{
    all_graphs, connected_graphs, orbit_bfs, orbit_index, partition_connected_graphs,
};
use lc_equiv_core::symplectic::{graph_generator, GeneratorMatrix, SingleQubitClass};
use lc_equiv_core::{formats, Graph};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

#[test]
fn streaming_elimination_matches_batch_up_to_200() {
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..40 {
        let rows = rng.random_range(1..=200);
        let cols = rng.random_range(1..=200);
        let mut m = random_matrix(&mut rng, rows, cols);
        // Force some dependent rows.
        if rows > 3 {
            let extra = m.row(0).xor(m.row(1));
            *m.row_mut(rows - 1) = extra;
        }
        let mut e = StreamingEliminator::new(cols);
        for r in m.row_iter() {
            e.feed(r.clone()).unwrap();
        }
        assert_eq!(e.echelon(), rref(&m));
        assert_eq!(e.rank(), m.rank());
    }
}

#[test]
fn graph_generators_are_valid_exhaustive() {
    for n in 1..=5 {
        for g in all_graphs(n) {
            assert!(GeneratorMatrix::new(graph_generator(&g).matrix().clone()).is_ok());
        }
    }
}

#[test]
fn orbit_partition_fixtures() {
    let mut sizes: Vec<usize> = partition_connected_graphs(4).unwrap().iter().map(|o| o.len()).collect();
    sizes.sort();
    assert_eq!(sizes, vec![5, 11, 11, 11]);
    assert_eq!(partition_connected_graphs(5).unwrap().len(), 27);
}

#[test]
fn same_orbit_iff_equivalent_small_n() {
    for n in 1..=4 {
        let orbits = partition_connected_graphs(n).unwrap();
        let index = orbit_index(&orbits);
        let graphs: Vec<Graph> = connected_graphs(n).collect();
        for g in &graphs {
            for h in &graphs {
                let same = index[&g.to_graph6()] == index[&h.to_graph6()];
                assert_eq!(check_equivalence(g, h).unwrap().equivalent, same, "{g:?} {h:?}");
            }
        }
    }
}

#[test]
fn disconnected_small_graphs_agree_with_componentwise_orbits() {
    // Every labeled graph on 4 vertices, connected or not.
    let graphs: Vec<Graph> = all_graphs(4).collect();
    let orbit_of: HashMap<String, usize> = {
        let mut map = HashMap::new();
        let mut next = 0;
        for g in &graphs {
            if map.contains_key(&g.to_graph6()) {
                continue;
            }
            for m in orbit_bfs(g, None).members {
                map.insert(m, next);
            }
            next += 1;
        }
        map
    };
    for g in &graphs {
        for h in &graphs {
            let same = orbit_of[&g.to_graph6()] == orbit_of[&h.to_graph6()];
            assert_eq!(check_equivalence(g, h).unwrap().equivalent, same);
        }
    }
}

#[test]
fn orbit_closure_spot_check() {
    let mut rng = StdRng::seed_from_u64(5);
    let orbit = orbit_bfs(&Graph::cycle(7), None);
    assert!(!orbit.truncated);
    let members: Vec<&String> = orbit.members.iter().collect();
    for _ in 0..100 {
        let m = Graph::from_graph6(members[rng.random_range(0..members.len())]).unwrap();
        for v in 0..m.n() {
            assert!(orbit.contains(&m.local_complement(v).unwrap()));
        }
    }
}

#[test]
fn scramble_recall_up_to_128() {
    let mut rng = StdRng::seed_from_u64(3);
    for n in [2usize, 5, 9, 17, 40, 128] {
        for _ in 0..3 {
            let p = rng.random_range(0.05..0.6);
            let g = random_graph(&mut rng, n, p);
            let h = g.apply_lc_sequence(&random_lc_sequence(&mut rng, n, 2 * n)).unwrap();
            let v = check_equivalence(&g, &h).unwrap();
            assert!(v.equivalent);
            assert_eq!(verify_witness(&g, &h, &v.witness.unwrap().op), Ok(()));
        }
    }
}

#[test]
fn verdicts_form_an_equivalence_relation() {
    let mut rng = StdRng::seed_from_u64(17);
    for _ in 0..200 {
        let n = rng.random_range(2..=9);
        let g = random_connected_graph(&mut rng, n);
        let h = g.apply_lc_sequence(&random_lc_sequence(&mut rng, n, n)).unwrap();
        let k = h.apply_lc_sequence(&random_lc_sequence(&mut rng, n, n)).unwrap();

        assert!(check_equivalence(&g, &g).unwrap().equivalent);
        let gh = check_equivalence(&g, &h).unwrap().witness.unwrap().op;
        let hk = check_equivalence(&h, &k).unwrap().witness.unwrap().op;
        assert!(check_equivalence(&h, &g).unwrap().equivalent);
        assert!(check_equivalence(&g, &k).unwrap().equivalent);
        assert_eq!(verify_witness(&g, &k, &gh.then(&hk).unwrap()), Ok(()));

        let other = random_connected_graph(&mut rng, n);
        let forward = check_equivalence(&g, &other).unwrap().equivalent;
        assert_eq!(check_equivalence(&other, &g).unwrap().equivalent, forward);
    }
}

#[test]
fn lemma_consistency_on_large_spaces() {
    for n in 4..=11 {
        for (g, h) in [
            (Graph::complete(n), Graph::complete(n)),
            (Graph::star(n, 0), Graph::star(n, 1)),
            (Graph::complete(n), Graph::cycle(n)),
        ] {
            let space = solve_system(&g, &h).unwrap();
            if space.dim() <= 4 || space.dim() > 12 {
                continue;
            }
            assert_eq!(
                find_admissible(&space).is_some(),
                find_admissible_exhaustive(&space).unwrap().is_some()
            );
        }
    }
    // Complete graph spaces: dim n + 1 with 2^(n-1) admissible elements.
    for n in 3..=9 {
        let space = solve_system(&Graph::complete(n), &Graph::complete(n)).unwrap();
        assert_eq!(space.dim(), n + 1);
        assert_eq!(count_admissible(&space).unwrap(), 1 << (n - 1));
    }
}

#[test]
fn bell_reduction_via_pauli_text() {
    let s = lc_equiv_core::parse_pauli_stabilizer("XX\nZZ\n").unwrap();
    let (g, q) = lc_equiv_core::stabilizer_to_graph(&s).unwrap();
    assert_eq!(g, Graph::complete(2));
    assert_eq!(q.classes()[0], SingleQubitClass::H);
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
            let mut g = Graph::empty(n);
            let mut k = 0;
            for v in 1..n {
                for u in 0..v {
                    if bits[k] {
                        g.toggle_edge(u, v);
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

proptest! {
    #[test]
    fn graph6_round_trip(g in arb_graph(70)) {
        let text = g.to_graph6();
        prop_assert!(text.bytes().all(|b| (63..=126).contains(&b)));
        prop_assert_eq!(Graph::from_graph6(&text).unwrap(), g);
    }

    #[test]
    fn edge_list_round_trip(g in arb_graph(30)) {
        prop_assert_eq!(formats::edge_list::decode(&formats::edge_list::encode(&g)).unwrap(), g);
    }
}
