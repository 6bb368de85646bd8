use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use shrubdepth::corpus::{random_bicograph, random_cograph};
use shrubdepth::cosplit::{
    complement_transfer, cosplit, merge_components, two_cosplit_bipartite, validate_cosplit,
    validate_two_cosplit, TwoCosplit,
};
use shrubdepth::graph::generate::*;
use shrubdepth::gyarfas::{self, bipartite_levels_check};
use shrubdepth::patterns::*;
use shrubdepth::sparsify::*;
use shrubdepth::tree_model::{bicotree_defines, build_bicotree, build_cotree};
use shrubdepth::{Bitset, Error, Graph};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn complement_is_an_involution(seed in any::<u64>(), n in 0usize..12, p in 0.0f64..1.0) {
        let g = random_graph_with(&mut rng(seed), n, p);
        prop_assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn bipartite_complement_is_an_involution(seed in any::<u64>(), l in 1usize..6, r in 1usize..6, p in 0.0f64..1.0) {
        let b = random_bipartite_with(&mut rng(seed), l, r, p);
        prop_assert_eq!(b.bipartite_complement().bipartite_complement(), b);
    }

    #[test]
    fn gyarfas_decompositions_validate(seed in any::<u64>(), n in 1usize..20, p in 0.0f64..0.6) {
        let g = random_connected_with(&mut rng(seed), n, p);
        let y = gyarfas::build(&g);
        prop_assert!(y.validate(&g).is_ok());
        // a root-to-bag hook path is an induced path
        let longest = y.bags().iter().map(|b| b.level + 1).max().unwrap_or(0);
        prop_assert!(find_induced(&g, &path(longest).unwrap()).unwrap().is_some());
    }

    #[test]
    fn bipartite_levels_respect_sides(seed in any::<u64>(), l in 1usize..8, r in 1usize..8, p in 0.0f64..0.6) {
        let b = random_connected_bipartite_with(&mut rng(seed), l, r, p);
        let y = gyarfas::build(b.graph());
        prop_assert!(bipartite_levels_check(&b, &y));
    }

    #[test]
    fn strong_index_is_complement_invariant(seed in any::<u64>(), n in 0usize..9, p in 0.0f64..1.0) {
        let g = random_graph_with(&mut rng(seed), n, p);
        let (k, w) = strong_index(&g).unwrap();
        prop_assert!(check_strong_index_witness(&g, &w).is_ok());
        prop_assert_eq!(w.order(), k);
        prop_assert_eq!(strong_index(&g.complement()).unwrap().0, k);
    }

    #[test]
    fn bipartite_index_is_complement_invariant(seed in any::<u64>(), l in 1usize..6, r in 1usize..6, p in 0.0f64..1.0) {
        let b = random_bipartite_with(&mut rng(seed), l, r, p);
        let (k, w) = bipartite_index(&b).unwrap();
        prop_assert!(check_bipartite_index_witness(&b, &w).is_ok());
        prop_assert_eq!(bipartite_index(&b.bipartite_complement()).unwrap().0, k);
        if k >= 3 {
            let m = (k - 1) / 2;
            let hw = half_graph_from_index(&b, &w, m).unwrap();
            prop_assert!(check_induced_witness(b.graph(), half_graph(m).unwrap().graph(), &hw).is_ok());
        }
    }

    #[test]
    fn cotree_recognition_matches_evaluation(seed in any::<u64>(), n in 1usize..12, h in 1usize..4) {
        let g = random_cograph(&mut rng(seed), n, h);
        let t = build_cotree(&g).unwrap();
        prop_assert!(t.defines_induced(&g));
        prop_assert!(find_induced(&g, &path(4).unwrap()).unwrap().is_none());
    }

    #[test]
    fn bicotree_recognition_matches_evaluation(seed in any::<u64>(), n in 1usize..11, h in 1usize..4) {
        let b = random_bicograph(&mut rng(seed), n, h);
        let t = build_bicotree(&b).unwrap();
        prop_assert!(bicotree_defines(&t, &b));
        prop_assert!(t.height() <= h.max(1));
    }

    #[test]
    fn merge_validates(seed in any::<u64>(), sizes in prop::collection::vec(1usize..5, 1..4)) {
        // components are random cographs placed side by side
        let mut r = rng(seed);
        let mut g = Graph::new(0);
        let mut splits = Vec::new();
        for &m in &sizes {
            let c = random_cograph(&mut r, m, 2);
            let offset = g.n();
            g = g.disjoint_union(&c);
            splits.push(offset);
        }
        let n = g.n();
        let splits: Vec<TwoCosplit> = splits
            .iter()
            .zip(&sizes)
            .map(|(&o, &m)| {
                let part = Bitset::from_iter(n, o..o + m);
                let cert = shrubdepth::tree_model::build_cotree_on(&g, &part).unwrap();
                TwoCosplit { n, parts: vec![part], part_certificates: vec![cert], pair_certificates: Default::default() }
            })
            .collect();
        let h = splits.iter().map(|s| s.height()).max().unwrap();
        let m = merge_components(&g, splits).unwrap();
        let report = validate_two_cosplit(&g, &m, None, None, Some(h + 1));
        prop_assert!(report.ok(), "{:?}", report.errors);
    }

    #[test]
    fn transfer_validates_on_complement(seed in any::<u64>(), l in 1usize..6, r in 1usize..6) {
        let b = random_bipartite_with(&mut rng(seed), l, r, 0.5);
        let s = match two_cosplit_bipartite(&b, 12, None) {
            Ok(s) => s,
            Err(Error::PatternFound { .. }) => return Ok(()),
            Err(e) => panic!("{e}"),
        };
        let t = complement_transfer(b.left(), &s);
        let co = b.bipartite_complement();
        let report = validate_two_cosplit(co.graph(), &t, Some(b.left()), None, Some(s.height()));
        prop_assert!(report.ok(), "{:?}", report.errors);
    }

    #[test]
    fn cosplit_validates(seed in any::<u64>(), n in 1usize..11, p in 0.0f64..1.0) {
        let g = random_graph_with(&mut rng(seed), n, p);
        match cosplit(&g, 10, None) {
            Ok(s) => {
                let k = strong_index(&g).unwrap().0;
                let report = validate_cosplit(&g, &s, None, Some(2 * k.max(1)));
                prop_assert!(report.ok(), "{:?}", report.errors);
            }
            Err(Error::PatternFound { .. }) => {}
            Err(e) => panic!("{e}"),
        }
    }

    #[test]
    fn cograph_encoding_round_trips(seed in any::<u64>(), n in 1usize..14, h in 1usize..4) {
        let g = random_cograph(&mut rng(seed), n, h);
        let levels = required_levels(&g).unwrap();
        prop_assert!(levels <= h + 1);
        let c = encode_cograph(&g, levels).unwrap();
        prop_assert_eq!(decode_cograph(&c).unwrap(), g);
        prop_assert!(treedepth(&c.graph).unwrap() <= levels.max(1));
        prop_assert_eq!(encode_cograph(&c.graph, 0).is_ok(), c.graph.n() <= 1);
    }

    #[test]
    fn bicograph_encoding_round_trips(seed in any::<u64>(), n in 1usize..14, h in 1usize..4) {
        let b = random_bicograph(&mut rng(seed), n, h);
        let levels = required_levels_bipartite(&b).unwrap();
        let c = encode_bicograph(&b, levels).unwrap();
        prop_assert_eq!(decode_bicograph(&c).unwrap(), b);
        prop_assert!(treedepth(&c.graph).unwrap() <= levels.max(1));
    }

    #[test]
    fn encoding_is_deterministic(seed in any::<u64>(), n in 1usize..10) {
        let g = random_cograph(&mut rng(seed), n, 2);
        let a = encode_cograph(&g, required_levels(&g).unwrap()).unwrap();
        let b = encode_cograph(&g, required_levels(&g).unwrap()).unwrap();
        prop_assert_eq!(a, b);
    }
}
