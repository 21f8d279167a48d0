mod common;

use codecert::canon::{
    are_equivalent, canonical_form, canonical_search, code_automorphisms, code_label,
    code_to_graph, partition_classes, pre_invariant, ColoredGraph,
};
use codecert::golay::build_shortened;
use codecert::Code;
use common::{brute_force_canonical, random_code, random_equivalence};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_graph(rng: &mut impl Rng, n: usize, colors: u32, p: f64) -> ColoredGraph {
    let mut g = ColoredGraph::new((0..n).map(|_| rng.gen_range(0..colors)).collect());
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

#[test]
fn label_is_invariant_under_relabeling() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for k in 0..60 {
        let n = 5 + k % 25;
        let g = random_graph(&mut rng, n, 1 + (k % 3) as u32, 0.3);
        let mut perm: Vec<u32> = (0..n as u32).collect();
        perm.shuffle(&mut rng);
        let h = g.relabel(&perm).unwrap();
        assert_eq!(canonical_form(&g), canonical_form(&h));
        let s = canonical_search(&g);
        for gen in &s.generators {
            assert!(g.is_automorphism(gen));
        }
    }
}

#[test]
fn regular_graphs_are_told_apart() {
    // 6-cycle versus two triangles: same degrees, not isomorphic.
    let mut c6 = ColoredGraph::new(vec![0; 6]);
    let mut tt = ColoredGraph::new(vec![0; 6]);
    for i in 0..6 {
        c6.add_edge(i, (i + 1) % 6).unwrap();
    }
    for (u, v) in [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)] {
        tt.add_edge(u, v).unwrap();
    }
    assert_ne!(canonical_form(&c6), canonical_form(&tt));
    let s = canonical_search(&c6);
    assert!(!s.generators.is_empty());
}

#[test]
fn length_six_codes_match_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut pairs = 0;
    let mut equivalent = 0;
    while pairs < 240 {
        let size = rng.gen_range(2..=7);
        let a = random_code(&mut rng, 6, size);
        let b = if pairs % 2 == 0 {
            random_equivalence(&mut rng, 6).apply_code(&a).unwrap()
        } else {
            random_code(&mut rng, 6, size)
        };
        let truth = brute_force_canonical(&a) == brute_force_canonical(&b);
        assert_eq!(are_equivalent(&a, &b).unwrap(), truth, "{a:?} {b:?}");
        assert_eq!(code_label(&a).unwrap() == code_label(&b).unwrap(), truth);
        if truth {
            assert_eq!(pre_invariant(&a), pre_invariant(&b));
            equivalent += 1;
        }
        pairs += 1;
    }
    assert!(equivalent >= 120 && equivalent < pairs);
}

#[test]
fn partition_matches_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let codes: Vec<Code> = (0..60).map(|_| random_code(&mut rng, 5, 4)).collect();
    let classes = partition_classes(&codes).unwrap();
    let keys: Vec<Vec<u64>> = codes.iter().map(brute_force_canonical).collect();
    let mut distinct = keys.clone();
    distinct.sort();
    distinct.dedup();
    assert_eq!(classes.len(), distinct.len());
    for c in &classes {
        assert!(c.members.iter().all(|&i| keys[i] == keys[c.representative]));
        assert_eq!(c.count, c.members.len());
    }
    assert_eq!(classes.iter().map(|c| c.count).sum::<usize>(), codes.len());
}

#[test]
fn images_of_shortened_golay() {
    let b = build_shortened(4).unwrap().to_code().unwrap();
    let label = code_label(&b).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..40 {
        let image = random_equivalence(&mut rng, 20).apply_code(&b).unwrap();
        assert_eq!(pre_invariant(&image), pre_invariant(&b));
        assert_eq!(code_label(&image).unwrap(), label);
    }
    for e in code_automorphisms(&b).unwrap() {
        assert_eq!(e.apply_code(&b).unwrap(), b);
    }
}

#[test]
fn graph_reduction_shape() {
    let b = build_shortened(4).unwrap().to_code().unwrap();
    let g = code_to_graph(&b).unwrap();
    assert_eq!(g.vertex_count(), 256 + 40);
    assert_eq!(g.edge_count(), 256 * 20 + 20);
}
