//! One test per acceptance criterion; each prints a single PASS/FAIL line.

use std::io::Write;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use shrubdepth::corpus::{bipartite_corpus, graph_corpus, random_bicograph, random_cograph, Exclusions};
use shrubdepth::cosplit::{
    bipartite_size_bound, cosplit, cosplit_size_bound, cosplit_size_statement_bound, two_cosplit,
    two_cosplit_bipartite, two_cosplit_size_bound, validate_cosplit, validate_two_cosplit,
};
use shrubdepth::graph::enumerate::{labelled_bipartite_graphs, nonisomorphic_connected_graphs, nonisomorphic_graphs};
use shrubdepth::graph::generate::*;
use shrubdepth::gyarfas::{self, bipartite_levels_check};
use shrubdepth::patterns::*;
use shrubdepth::sparsify::*;
use shrubdepth::tree_model::build_cotree;

/// Run a criterion, print its line, and fail the test if it failed.
fn criterion(id: usize, name: &str, f: impl FnOnce() -> (bool, String)) {
    let start = Instant::now();
    let (pass, detail) = f();
    let line = format!(
        "criterion {id:>2} {name}: {} ({detail}; {:.1}s)\n",
        if pass { "PASS" } else { "FAIL" },
        start.elapsed().as_secs_f64()
    );
    // written to the raw handle so the line shows even when output is captured
    let _ = std::io::stdout().write_all(line.as_bytes());
    assert!(pass, "{line}");
}

/// Counts failures of a list of checks, keeping the first message.
#[derive(Default)]
struct Tally {
    checked: usize,
    failed: usize,
    first: Option<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.first.is_none() {
                self.first = Some(msg());
            }
        }
    }

    fn finish(self, extra: String) -> (bool, String) {
        let mut detail = format!("{} checks, {} failed", self.checked, self.failed);
        if !extra.is_empty() {
            detail.push_str(", ");
            detail.push_str(&extra);
        }
        if let Some(m) = self.first {
            detail.push_str(&format!(", first failure: {m}"));
        }
        (self.failed == 0, detail)
    }
}

#[test]
fn criterion_01_gyarfas_validity_and_height() {
    criterion(1, "Gyarfas validity and height", || {
        let mut tally = Tally::default();
        let p5 = path(5).unwrap();
        let mut p5_free = 0;
        let mut check = |tally: &mut Tally, g: &shrubdepth::Graph| {
            let y = gyarfas::build(g);
            let v = y.validate(g);
            tally.check(v.is_ok(), || format!("{:?} on {g:?}", v.err()));
            if find_induced(g, &p5).unwrap().is_none() {
                p5_free += 1;
                tally.check(y.height() <= 3, || format!("height {} on P5-free {g:?}", y.height()));
            }
        };
        for n in 1..=9 {
            for g in nonisomorphic_connected_graphs(n) {
                check(&mut tally, &g);
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(101);
        for _ in 0..1000 {
            let n = rng.gen_range(1..=20);
            let p = rng.gen_range(0.0..0.5);
            let g = random_connected_with(&mut rng, n, p);
            check(&mut tally, &g);
        }
        tally.finish(format!("{p5_free} P5-free"))
    });
}

#[test]
fn criterion_02_bipartite_level_structure() {
    criterion(2, "bipartite level structure", || {
        let mut tally = Tally::default();
        let mut rng = ChaCha8Rng::seed_from_u64(102);
        for _ in 0..500 {
            let l = rng.gen_range(1..=10);
            let r = rng.gen_range(1..=10);
            let p = rng.gen_range(0.0..0.6);
            let b = random_connected_bipartite_with(&mut rng, l, r, p);
            let y = gyarfas::build(b.graph());
            tally.check(y.validate(b.graph()).is_ok() && bipartite_levels_check(&b, &y), || format!("{b:?}"));
        }
        tally.finish(String::new())
    });
}

#[test]
fn criterion_03_index_invariants() {
    criterion(3, "index invariants", || {
        let mut tally = Tally::default();
        for n in 0..=7 {
            for g in nonisomorphic_graphs(n) {
                let (s, w) = strong_index(&g).unwrap();
                tally.check(check_strong_index_witness(&g, &w).is_ok(), || format!("witness on {g:?}"));
                let sc = strong_index(&g.complement()).unwrap().0;
                tally.check(s == sc, || format!("sind {s} vs complement {sc} on {g:?}"));
                let r = max_induced_threshold(&g, s + 1).unwrap();
                tally.check(s / 2 <= r && r <= s, || format!("R_{r} with sind {s} on {g:?}"));
            }
        }
        let mut halves = 0;
        for l in 1..=4 {
            for r in 1..=4 {
                for b in labelled_bipartite_graphs(l, r) {
                    let (k, w) = bipartite_index(&b).unwrap();
                    let kc = bipartite_index(&b.bipartite_complement()).unwrap().0;
                    tally.check(k == kc, || format!("bind {k} vs complement {kc} on {b:?}"));
                    if k == 1 && b.graph().connected_components().len() == 1 {
                        tally.check(b.is_complete_bipartite(), || format!("bind 1 on {b:?}"));
                    }
                    let mut m = 1;
                    while 2 * m < k {
                        let hw = half_graph_from_index(&b, &w, m).unwrap();
                        let hk = half_graph(m).unwrap();
                        tally.check(check_induced_witness(b.graph(), hk.graph(), &hw).is_ok(), || {
                            format!("H_{m} from bind {k} on {b:?}")
                        });
                        halves += 1;
                        m += 1;
                    }
                }
            }
        }
        tally.finish(format!("{halves} half-graphs extracted"))
    });
}

fn induced_corpus(seed: u64, count: usize, n_max: usize) -> Vec<shrubdepth::Graph> {
    graph_corpus(seed, count, 4, n_max, &Exclusions::induced_class(5, 2).unwrap()).unwrap()
}

#[test]
fn criterion_04_cosplit_bounds() {
    criterion(4, "cosplit bounds", || {
        let (t, k) = (5, 4);
        let mut tally = Tally::default();
        let mut max_size = 0;
        for g in induced_corpus(104, 200, 12) {
            let s = cosplit(&g, t, None).unwrap();
            let sind = strong_index(&g).unwrap().0;
            tally.check(sind < k, || format!("sind {sind} on {g:?}"));
            let r = validate_cosplit(&g, &s, Some(cosplit_size_statement_bound(t, k)), Some(2 * k));
            tally.check(r.ok(), || format!("{:?} on {g:?}", r.errors));
            let sharp = validate_cosplit(&g, &s, Some(cosplit_size_bound(t, sind)), Some(2 * sind.max(1)));
            tally.check(sharp.ok(), || format!("sharp: {:?} on {g:?}", sharp.errors));
            max_size = max_size.max(s.size());
        }
        tally.finish(format!("bound {}, largest {max_size}", cosplit_size_statement_bound(t, k)))
    });
}

#[test]
fn criterion_05_chi_bound() {
    criterion(5, "chi bound", || {
        let mut tally = Tally::default();
        for g in induced_corpus(105, 200, 14) {
            let s = cosplit(&g, 5, None).unwrap();
            let chi = chromatic_number(&g).unwrap();
            let omega = clique_number(&g).unwrap();
            tally.check(chi <= s.size() * omega, || format!("chi {chi}, omega {omega}, size {} on {g:?}", s.size()));
        }
        tally.finish(String::new())
    });
}

#[test]
fn criterion_06_homogeneous_set() {
    criterion(6, "homogeneous set", || {
        let ex = Exclusions {
            induced: vec![universal_threshold(2).unwrap()],
            ..Exclusions::default()
        };
        let mut tally = Tally::default();
        for g in graph_corpus(106, 500, 1, 12, &ex).unwrap() {
            let h = homogeneous_set(&g).unwrap();
            let ok = g.is_clique(&h) || g.is_independent(&h);
            let bound = (g.n() as f64).powf(0.25) / 4.0;
            tally.check(ok && h.len() as f64 >= bound, || format!("{} < {bound} on {g:?}", h.len()));
        }
        tally.finish(String::new())
    });
}

#[test]
fn criterion_07_two_cosplit_bounds() {
    criterion(7, "2-cosplit bounds", || {
        let (t, k) = (5, 2);
        let mut tally = Tally::default();
        let ex = Exclusions::bipartite_class(t, k).unwrap();
        for b in bipartite_corpus(107, 200, 7, &ex).unwrap() {
            let s = two_cosplit_bipartite(&b, t, None).unwrap();
            let bind = bipartite_index(&b).unwrap().0;
            let r = validate_two_cosplit(b.graph(), &s, Some(b.left()), Some(bipartite_size_bound(t, bind)), Some(4 * k));
            tally.check(r.ok(), || format!("{:?} on {b:?}", r.errors));
            tally.check(s.height() <= 2 * bind.max(1), || format!("height {} with bind {bind}", s.height()));
        }
        let ex = Exclusions::semi_induced_class(t, k).unwrap();
        for g in graph_corpus(207, 200, 1, 12, &ex).unwrap() {
            let s = two_cosplit(&g, t, k).unwrap();
            let n0 = cosplit_size_bound(t, strong_index(&g).unwrap().0);
            let bound = two_cosplit_size_bound(n0, bipartite_size_bound(t, 2 * k));
            let r = validate_two_cosplit(&g, &s, None, Some(bound), Some(4 * k));
            tally.check(r.ok(), || format!("{:?} on {g:?}", r.errors));
        }
        tally.finish(String::new())
    });
}

#[test]
fn criterion_08_round_trip() {
    criterion(8, "sparsification round trip", || {
        let mut tally = Tally::default();
        let mut rng = ChaCha8Rng::seed_from_u64(108);
        for _ in 0..1000 {
            let n = rng.gen_range(1..=10);
            let h = rng.gen_range(1..=3);
            let g = random_cograph(&mut rng, n, h);
            let c = encode_cograph(&g, required_levels(&g).unwrap()).unwrap();
            tally.check(decode_cograph(&c).unwrap() == g, || format!("cograph {g:?}"));
        }
        for _ in 0..500 {
            let n = rng.gen_range(1..=12);
            let h = rng.gen_range(1..=3);
            let b = random_bicograph(&mut rng, n, h);
            let c = encode_bicograph(&b, required_levels_bipartite(&b).unwrap()).unwrap();
            tally.check(decode_bicograph(&c).unwrap() == b, || format!("bi-cograph {b:?}"));
        }
        let ex = Exclusions::semi_induced_class(5, 2).unwrap();
        for g in graph_corpus(208, 300, 1, 12, &ex).unwrap() {
            let (c, r) = sparsify_pipeline(&g, 5, 2).unwrap();
            tally.check(r.round_trip && decode(&c).unwrap() == g, || format!("pipeline {g:?}"));
        }
        tally.finish(String::new())
    });
}

#[test]
fn criterion_09_treedepth_and_degeneracy() {
    criterion(9, "treedepth and degeneracy of encodings", || {
        let mut tally = Tally::default();
        let mut rng = ChaCha8Rng::seed_from_u64(109);
        let mut worst = (0, 0);
        for _ in 0..500 {
            let n = rng.gen_range(1..=16);
            let h = rng.gen_range(1..=3);
            let g = random_cograph(&mut rng, n, h);
            let levels = required_levels(&g).unwrap();
            let td = treedepth(&encode_cograph(&g, levels).unwrap().graph).unwrap();
            tally.check(td <= levels.max(1), || format!("treedepth {td} > {levels} on {g:?}"));
            let b = random_bicograph(&mut rng, n, h);
            let levels = required_levels_bipartite(&b).unwrap();
            let td = treedepth(&encode_bicograph(&b, levels).unwrap().graph).unwrap();
            tally.check(td <= levels.max(1), || format!("treedepth {td} > {levels} on {b:?}"));
        }
        let ex = Exclusions::semi_induced_class(5, 2).unwrap();
        for g in graph_corpus(208, 300, 1, 12, &ex).unwrap() {
            let (_, r) = sparsify_pipeline(&g, 5, 2).unwrap();
            tally.check(r.degeneracy <= r.degeneracy_bound, || {
                format!("degeneracy {} > {} on {g:?}", r.degeneracy, r.degeneracy_bound)
            });
            if r.degeneracy > worst.0 {
                worst = (r.degeneracy, r.degeneracy_bound);
            }
        }
        tally.finish(format!("largest degeneracy {} (bound {})", worst.0, worst.1))
    });
}

#[test]
fn criterion_10_lower_bound_demonstration() {
    criterion(10, "lexicographic square of C5", || {
        let c5 = cycle(5).unwrap();
        let g = c5.lexicographic_product(&c5);
        let p5 = path(5).unwrap();
        let no_p5 = find_induced(&g, &p5).unwrap().is_none();
        let no_cop5 = find_induced(&g, &p5.complement()).unwrap().is_none();
        let omega = clique_number(&g).unwrap();
        let alpha = independence_number(&g).unwrap();
        let chi_lower = g.n().div_ceil(alpha);
        let pass = no_p5 && no_cop5 && omega == 4 && chi_lower >= 7;
        let detail = format!(
            "n {}, induced P5 absent {no_p5}, complement absent {no_cop5}, omega {omega}, alpha {alpha}, chi >= {chi_lower}",
            g.n()
        );
        (pass, detail)
    });
}

#[test]
fn cotree_heights_of_corpus_are_small() {
    // sanity check on the generator used by criteria 8 and 9
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..100 {
        let g = random_cograph(&mut rng, 10, 3);
        assert!(build_cotree(&g).unwrap().height() <= 3);
    }
}
