use proptest::prelude::*;
use trihit::gadgets::{brute_sat, crenellate, dpll, figure_three_polygon, make_k_polygon, preprocess_formula, sat_to_2dir, verify_reduction, CnfFormula};
use trihit::geometry::{build_graph, int, slope_count, Point};
use trihit::graph::list_triangles;
use trihit::oracle::enumerate_solutions;
use trihit::pipeline::{solve_pipeline, PipelineConfig};
use trihit::random::{random_3sat, rng};
use trihit::ProblemProfile;

#[test]
fn polygon_optimum_is_k() {
    for k in 2..=8 {
        let s = make_k_polygon(k, &Point::ints(3, -2), &int(2)).unwrap();
        let g = build_graph(&s);
        assert_eq!(g.n(), 4 * k);
        assert_eq!(list_triangles(&g).len(), 2 * k, "k = {k}");
        let cfg = PipelineConfig::default();
        let yes = solve_pipeline(&g, Some(&s), k, &ProblemProfile::th(), &cfg).unwrap();
        assert_eq!(yes.solution.map(|s| s.len()), Some(k));
        let no = solve_pipeline(&g, Some(&s), k - 1, &ProblemProfile::th(), &cfg).unwrap();
        assert_eq!(no.solution, None, "k = {k}");
    }
}

#[test]
fn polygon_has_two_minimum_solutions() {
    for k in 2..=5 {
        let g = build_graph(&make_k_polygon(k, &Point::ints(0, 0), &int(1)).unwrap());
        let mut min: Vec<Vec<usize>> = enumerate_solutions(&g, &ProblemProfile::th(), k, 20).unwrap().into_iter().filter(|s| s.len() == k).collect();
        min.sort();
        assert_eq!(min, vec![(0..k).collect::<Vec<_>>(), (k..2 * k).collect()], "k = {k}");
    }
    let g = build_graph(&figure_three_polygon());
    assert_eq!(g.n(), 12);
    assert_eq!(list_triangles(&g).len(), 6);
}

#[test]
fn small_reductions_agree() {
    let unsat = CnfFormula::new(3, vec![vec![1, 2], vec![1, -2], vec![-1, 3], vec![-1, -3], vec![2, 3, -1]]).unwrap();
    let (_, rep) = verify_reduction(&unsat, None).unwrap();
    assert!(!rep.sat && rep.agree);
    for seed in 0..4 {
        let f = random_3sat(&mut rng(seed), 4, 5);
        let (r, rep) = verify_reduction(&f, Some(2)).unwrap();
        assert!(rep.agree && rep.max_degree <= 6 && rep.slopes == 2, "seed {seed}");
        assert_eq!(rep.sat, rep.decoded_satisfies);
        assert_eq!(r.k, r.k_per_variable().iter().sum::<usize>());
    }
}

#[test]
fn crenellation_bounds_degree() {
    let f = random_3sat(&mut rng(11), 6, 12);
    let r = sat_to_2dir(&preprocess_formula(&f).unwrap().formula).unwrap();
    for t in [2, 3, 5] {
        let c = crenellate(&r, t).unwrap();
        let g = build_graph(&c.scene);
        assert!(g.max_degree() <= t + 4, "t = {t}");
        assert_eq!(slope_count(&c.scene), 2);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dpll_agrees_with_brute_force(seed in any::<u64>(), vars in 3usize..9, clauses in 0usize..30) {
        let f = random_3sat(&mut rng(seed), vars, clauses);
        let d = dpll(&f);
        prop_assert_eq!(d.is_some(), brute_sat(&f).unwrap().is_some());
        if let Some(a) = d {
            prop_assert!(f.is_satisfied_by(&a));
        }
    }

    #[test]
    fn preprocessing_keeps_satisfiability(seed in any::<u64>(), vars in 3usize..7, clauses in 0usize..20) {
        let f = random_3sat(&mut rng(seed), vars, clauses);
        let pre = preprocess_formula(&f).unwrap();
        let sat = brute_sat(&f).unwrap().is_some();
        prop_assert_eq!(sat, !pre.trivially_unsat && dpll(&pre.formula).is_some());
        if let Some(a) = dpll(&pre.formula).filter(|_| !pre.trivially_unsat) {
            let mut back = pre.restore(&a);
            back.truncate(f.num_vars);
            prop_assert!(f.is_satisfied_by(&back));
        }
    }
}
