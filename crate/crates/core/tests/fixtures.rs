//! Worked examples with hand-checked answers.

use wopow_core::*;

fn lim() -> Limits {
    Limits::default()
}

fn ideal(g: &WeightedOrientedGraph, text: &str) -> MonomialIdeal {
    MonomialIdeal::parse(g.universe().clone(), text).unwrap()
}

fn set(g: &WeightedOrientedGraph, names: &[&str]) -> VarSet {
    g.universe().var_set(names.iter().copied()).unwrap()
}

fn mono(g: &WeightedOrientedGraph, text: &str) -> Monomial {
    g.universe().parse_monomial(text).unwrap()
}

const FIVE_CYCLE_EDGES: [(&str, &str); 5] = [
    ("x1", "x2"),
    ("x1", "x5"),
    ("x3", "x2"),
    ("x3", "x4"),
    ("x5", "x4"),
];

fn five_cycle(weights: [u32; 5]) -> WeightedOrientedGraph {
    WeightedOrientedGraph::build(&["x1", "x2", "x3", "x4", "x5"], &weights, &FIVE_CYCLE_EDGES)
        .unwrap()
}

const SYMBOLIC_SQUARE: [&str; 14] = [
    "x1^2*x2^2",
    "x1*x2^2*x3",
    "x2^2*x3^2",
    "x1*x2*x3*x4",
    "x2*x3^2*x4",
    "x3^2*x4^2",
    "x1*x2*x4*x5",
    "x2*x3*x4*x5",
    "x3*x4^2*x5",
    "x1^2*x2*x5^2",
    "x1*x2*x3*x5^2",
    "x1*x4*x5^2",
    "x4^2*x5^2",
    "x1^2*x5^4",
];

/// The same list after `x2 -> x2^2`, `x4 -> x4^2`.
const LIFTED_SQUARE: [&str; 14] = [
    "x1^2*x2^4",
    "x1*x2^4*x3",
    "x2^4*x3^2",
    "x1*x2^2*x3*x4^2",
    "x2^2*x3^2*x4^2",
    "x3^2*x4^4",
    "x1*x2^2*x4^2*x5",
    "x2^2*x3*x4^2*x5",
    "x3*x4^4*x5",
    "x1^2*x2^2*x5^2",
    "x1*x2^2*x3*x5^2",
    "x1*x4^2*x5^2",
    "x4^4*x5^2",
    "x1^2*x5^4",
];

#[test]
fn five_cycle_symbolic_square_is_the_listed_ideal() {
    let d = five_cycle([1, 1, 1, 1, 2]);
    assert_eq!(
        d.edge_ideal(),
        ideal(&d, "(x1*x2, x2*x3, x3*x4, x4*x5, x1*x5^2)")
    );
    let expected = MonomialIdeal::new(
        d.universe().clone(),
        SYMBOLIC_SQUARE.iter().map(|m| mono(&d, m)).collect(),
    )
    .unwrap();
    assert_eq!(expected.len(), 14);
    let grouped = symbolic_power_grouped(&d, 2, &lim()).unwrap();
    assert_eq!(grouped, expected);
    assert_eq!(symbolic_power_localized(&d, 2, &lim()).unwrap(), expected);
}

#[test]
fn lifted_square_matches_weighted_graph() {
    let reduced = five_cycle([1, 1, 1, 1, 2]);
    let weighted = five_cycle([1, 2, 1, 2, 2]);
    let (d_prime, reset) = weighted.sink_weights_to_one();
    assert_eq!(d_prime, reduced);
    assert_eq!(reset, set(&weighted, &["x2", "x4"]));
    let weights = phi_weights(&weighted, reset);

    // generator by generator, without re-minimalizing
    let lifted: Vec<String> = SYMBOLIC_SQUARE
        .iter()
        .map(|m| {
            mono(&reduced, m)
                .phi_map(&weights)
                .unwrap()
                .display(reduced.universe())
                .to_string()
        })
        .collect();
    let mut expected: Vec<String> = LIFTED_SQUARE.iter().map(|s| s.to_string()).collect();
    assert_eq!(lifted, expected);

    let direct = symbolic_power_grouped(&weighted, 2, &lim()).unwrap();
    let mut direct_gens = direct.generator_strings();
    direct_gens.sort();
    expected.sort();
    assert_eq!(direct_gens, expected);
    assert!(phi_commutation_check(&weighted, 2, &lim()).unwrap().holds());
}

#[test]
fn five_cycle_edge_ideal_is_phi_image() {
    let reduced = five_cycle([1, 1, 1, 1, 2]);
    let weighted = five_cycle([1, 3, 1, 4, 2]);
    let weights = phi_weights(&weighted, set(&weighted, &["x2", "x4"]));
    assert_eq!(
        reduced.edge_ideal().phi_map(&weights).unwrap(),
        ideal(&weighted, "(x1*x2^3, x2^3*x3, x3*x4^4, x4^4*x5, x1*x5^2)")
    );
    assert_eq!(weighted.edge_ideal().to_text(), "(x1*x5^2, x1*x2^3, x2^3*x3, x3*x4^4, x4^4*x5)");
}

fn four_cycle(w2: u32) -> WeightedOrientedGraph {
    make_cycle(4, &[1, w2, 1, 1], &Orientation::Natural).unwrap()
}

#[test]
fn four_cycle_census_and_partitions() {
    for w2 in [2, 3] {
        let d = four_cycle(w2);
        let census = enumerate_strong_covers(&d, DEFAULT_COVER_CAP).unwrap();
        assert_eq!(
            census.cover_sets(),
            vec![
                set(&d, &["x1", "x3"]),
                set(&d, &["x2", "x4"]),
                set(&d, &["x2", "x3", "x4"]),
            ]
        );
        for bad in [
            &["x1", "x2", "x4"][..],
            &["x1", "x3", "x4"],
            &["x1", "x2", "x3"],
            &["x1", "x2", "x3", "x4"],
        ] {
            let p = partition_l(&d, set(&d, bad)).unwrap();
            assert!(!p.is_strong, "{bad:?} should not be strong");
        }
        let c3 = &census.strong_covers[2];
        assert_eq!((c3.l1, c3.l2, c3.l3), (set(&d, &["x4"]), set(&d, &["x2"]), set(&d, &["x3"])));
        let c1 = &census.strong_covers[0];
        assert_eq!(c1.l1, set(&d, &["x1", "x3"]));

        let parts = irreducible_decomposition(&d, DEFAULT_COVER_CAP).unwrap();
        let texts: Vec<String> = parts.iter().map(|(_, i)| i.to_text()).collect();
        assert_eq!(
            texts,
            vec![
                "(x1, x3)".to_string(),
                "(x2, x4)".to_string(),
                format!("(x3, x4, x2^{w2})"),
            ]
        );
        assert_eq!(parts[2].1.radical(), MonomialIdeal::prime(d.universe().clone(), c3.cover).unwrap());

        for s in [2, 3] {
            let r = compare_powers(&d, s, &lim()).unwrap();
            assert!(r.equal && r.methods_agree, "w2={w2}, s={s}");
            // grouped formula written out by hand
            let inner = ideal(&d, &format!("(x2^{w2}, x3, x4)"))
                .intersect(&ideal(&d, "(x2, x4)"))
                .unwrap();
            let by_hand = inner
                .power(s)
                .unwrap()
                .intersect(&ideal(&d, "(x1, x3)").power(s).unwrap())
                .unwrap();
            assert_eq!(symbolic_power_grouped(&d, s, &lim()).unwrap(), by_hand);
        }
    }
}

#[test]
fn four_cycle_neighbourhoods() {
    let d = four_cycle(2);
    assert_eq!(d.out_neighbors(3).unwrap(), set(&d, &["x1"]));
    assert_eq!(d.in_neighbors(1).unwrap(), set(&d, &["x1"]));
    assert_eq!(d.edge_ideal(), ideal(&d, "(x1*x2^2, x2*x3, x3*x4, x4*x1)"));
    assert!(!is_total_cover_strong(&d));
    assert!(!has_minimal_strong_property(&d, DEFAULT_COVER_CAP).unwrap());
}

#[test]
fn inner_intersection_example() {
    let d = four_cycle(2);
    assert_eq!(
        ideal(&d, "(x2^2, x3, x4)").intersect(&ideal(&d, "(x2, x4)")).unwrap(),
        ideal(&d, "(x2^2, x2*x3, x4)")
    );
    assert_eq!(
        ideal(&d, "(x1, x3)").intersect(&ideal(&d, "(x2, x4)")).unwrap(),
        ideal(&d, "(x1*x2, x1*x4, x2*x3, x3*x4)")
    );
    assert_eq!(
        ideal(&d, "(x1*x2^3, x2*x3, x3*x4)").localize_contract(set(&d, &["x1", "x3"])).unwrap(),
        ideal(&d, "(x1, x3)")
    );
    let i2 = d.edge_ideal().power(2).unwrap();
    assert_eq!(
        i2.localize_contract(set(&d, &["x1", "x3"])).unwrap(),
        ideal(&d, "(x1, x3)").power(2).unwrap()
    );
}

#[test]
fn weighted_path_counterexample() {
    let d = make_path(3, &[1, 2, 1, 1], &Orientation::Natural).unwrap();
    let i = d.edge_ideal();
    assert_eq!(i, ideal(&d, "(x1*x2^2, x2*x3, x3*x4)"));
    assert_eq!(d.v_plus(), set(&d, &["x2"]));
    assert!(!d.is_sink_only_vplus());
    let g = mono(&d, "x1*x2^2*x3");
    assert!(i.contains(&g).unwrap());
    assert!(!i.power(2).unwrap().contains(&g).unwrap());
    let cmp = compare_powers_detailed(&d, 2, &lim()).unwrap();
    assert!(cmp.symbolic.contains(&g).unwrap());
    assert_eq!(cmp.report.witness, Some(g));
    assert!(!cmp.report.equal);
}

#[test]
fn six_cycle_square_equal_cube_not() {
    let d = make_cycle(6, &[1, 2, 1, 1, 1, 1], &Orientation::Natural).unwrap();
    assert_eq!(
        d.edge_ideal(),
        ideal(&d, "(x1*x2^2, x2*x3, x3*x4, x4*x5, x5*x6, x6*x1)")
    );
    assert!(compare_powers(&d, 2, &lim()).unwrap().equal);
    let cmp = compare_powers_detailed(&d, 3, &lim()).unwrap();
    let g = mono(&d, "x1*x2^2*x3^2*x4");
    assert!(cmp.symbolic.contains(&g).unwrap());
    assert!(!cmp.ordinary.contains(&g).unwrap());
    assert_eq!(cmp.report.witness, Some(g));
}

#[test]
fn clamped_four_cycle() {
    // weights w2 = 3, w3 = 5 clamp to 2, 2
    let d = make_cycle(4, &[1, 3, 5, 1], &Orientation::Natural).unwrap();
    let c = d.clamp_weights_to_two();
    assert_eq!(c.edge_ideal(), ideal(&c, "(x1*x2^2, x2*x3^2, x3*x4, x4*x1)"));
    let check = clamp_structure_check(&d, 2, &lim()).unwrap();
    assert!(check.holds());
    for s in [1, 2, 3] {
        let by_hand = ideal(&d, "(x1, x3^5, x4)")
            .intersect(&ideal(&d, "(x1, x3)"))
            .unwrap()
            .power(s)
            .unwrap()
            .intersect(
                &ideal(&d, "(x2^3, x3^5, x4)")
                    .intersect(&ideal(&d, "(x2, x4)"))
                    .unwrap()
                    .power(s)
                    .unwrap(),
            )
            .unwrap();
        assert_eq!(symbolic_power_grouped(&d, s, &lim()).unwrap(), by_hand, "s={s}");
    }
}

#[test]
fn weighted_five_cycle_total_cover() {
    let d = make_cycle(5, &[2; 5], &Orientation::Natural).unwrap();
    assert!(is_total_cover_strong(&d));
    let census = enumerate_strong_covers(&d, DEFAULT_COVER_CAP).unwrap();
    assert!(census.cover_sets().contains(&d.vertices()));
    assert!(partition_l(&d, d.vertices()).unwrap().is_strong);
}

#[test]
fn star_census_with_weighted_leaves() {
    // weighted hub x0 receives from x1, x2 and points to the weighted leaf x3
    let d = WeightedOrientedGraph::build(
        &["x0", "x1", "x2", "x3"],
        &[2, 1, 1, 2],
        &[("x1", "x0"), ("x2", "x0"), ("x0", "x3")],
    )
    .unwrap();
    let census = enumerate_strong_covers(&d, DEFAULT_COVER_CAP).unwrap();
    assert_eq!(
        census.cover_sets(),
        vec![
            set(&d, &["x0"]),
            set(&d, &["x0", "x3"]),
            set(&d, &["x1", "x2", "x3"]),
        ]
    );
    let c2 = partition_l(&d, set(&d, &["x1", "x2", "x3"])).unwrap();
    assert_eq!(irreducible_ideal(&d, &c2), ideal(&d, "(x1, x2, x3^2)"));
}

#[test]
fn unweighted_graph_has_minimal_strong_property() {
    let d = make_cycle(4, &[1; 4], &Orientation::Natural).unwrap();
    assert!(has_minimal_strong_property(&d, DEFAULT_COVER_CAP).unwrap());
    let sinks = WeightedOrientedGraph::build(
        &["x1", "x2", "x3", "x4"],
        &[1, 3, 1, 2],
        &[("x1", "x2"), ("x3", "x2"), ("x3", "x4"), ("x1", "x4")],
    )
    .unwrap();
    assert!(sinks.is_sink_only_vplus());
    assert!(has_minimal_strong_property(&sinks, DEFAULT_COVER_CAP).unwrap());
}

#[test]
fn vertex_deletion_on_a_path() {
    let d = WeightedOrientedGraph::build(
        &["x0", "x1", "x2", "x3"],
        &[1, 2, 2, 3],
        &[("x0", "x1"), ("x1", "x2"), ("x2", "x3")],
    )
    .unwrap();
    let d1 = d.delete_vertices(set(&d, &["x0"])).unwrap();
    assert_eq!(d1.weights(), &[1, 2, 3]);
    let d2 = d.delete_vertices(set(&d, &["x0", "x1"])).unwrap();
    assert_eq!(d2.universe().names(), &["x2", "x3"]);
    assert_eq!(d2.weights(), &[1, 3]);
}
