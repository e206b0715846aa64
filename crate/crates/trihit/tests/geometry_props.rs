use proptest::prelude::*;
use trihit::geometry::{
    build_graph, build_graph_with, contact_max_clique, is_generic, perturb_squares, segments_intersect, slope_count,
    square_max_clique, squares_intersect, validate_contact, Scene,
};
use trihit::oracle::brute_max_clique;
use trihit::random::{random_2dir_scene, random_contact_scene, random_dir_scene, random_squares, rng};
use trihit::{Exec, Graph};

fn pairwise(scene: &Scene) -> Graph {
    let n = scene.len();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let hit = match scene {
                Scene::Segments(s) => segments_intersect(&s[i], &s[j]),
                Scene::Squares(q) => squares_intersect(&q[i], &q[j]),
            };
            if hit {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn sweep_matches_pairwise_segments(seed in any::<u64>(), n in 0usize..30, d in 1usize..=6) {
        let s = random_dir_scene(&mut rng(seed), n, d, 12);
        let g = build_graph(&s);
        prop_assert_eq!(&g, &pairwise(&s));
        prop_assert_eq!(&g, &build_graph_with(&s, Exec::Sequential));
        prop_assert!(slope_count(&s) <= d);
    }

    #[test]
    fn sweep_matches_pairwise_squares(seed in any::<u64>(), n in 0usize..30) {
        let s = random_squares(&mut rng(seed), n, 10, 4);
        prop_assert_eq!(build_graph(&s), pairwise(&s));
    }

    #[test]
    fn perturbation_keeps_graph(seed in any::<u64>(), n in 1usize..25) {
        let s = random_squares(&mut rng(seed), n, 8, 3);
        let p = perturb_squares(&s).unwrap();
        prop_assert!(is_generic(p.squares().unwrap()));
        prop_assert_eq!(build_graph(&p), build_graph(&s));
        prop_assert_eq!(perturb_squares(&p).unwrap(), p);
    }

    #[test]
    fn square_clique_is_maximum(seed in any::<u64>(), n in 1usize..13) {
        let s = random_squares(&mut rng(seed), n, 8, 4);
        let c = square_max_clique(&s).unwrap();
        let g = build_graph(&s);
        prop_assert!(g.is_clique(&c));
        prop_assert_eq!(c.len(), brute_max_clique(&g, 20).unwrap().len());
    }

    #[test]
    fn contact_scenes_are_contact(seed in any::<u64>(), n in 1usize..14) {
        let s = random_contact_scene(&mut rng(seed), n, 10);
        prop_assert!(validate_contact(&s));
        let g = build_graph(&s);
        let (c, _) = contact_max_clique(&s, &g).unwrap();
        prop_assert!(g.is_clique(&c));
        prop_assert_eq!(c.len(), brute_max_clique(&g, 20).unwrap().len());
    }

    #[test]
    fn two_dir_scenes_use_two_slopes(seed in any::<u64>(), n in 0usize..20) {
        let s = random_2dir_scene(&mut rng(seed), n, 8);
        prop_assert!(slope_count(&s) <= 2);
    }
}
