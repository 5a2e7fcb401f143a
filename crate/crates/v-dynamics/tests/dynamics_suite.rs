//! Randomized checks for tree-pair dynamics: augmentation invariance,
//! reveal correctness, report cross-validation by orbit census, and the
//! permutation/transposition factorizations.

use cantor_core::corpus_rng;
use nv_elements::{compose, random_element, random_pattern};
use rand::Rng;
use v_dynamics::{
    census_points, dynamics_report, extract_proper_transposition, iterated_augment, augment,
    orbit_size, permutation_factor, reveal, transposition, AugmentError, OrbitKind, RevealOrder,
    TreePair, compose_factors,
};

fn random_pair(rng: &mut impl Rng, max_splits: usize) -> TreePair {
    TreePair::from_element(&random_element(rng, 1, max_splits)).unwrap()
}

fn random_leaf_tree(rng: &mut impl Rng, max_splits: usize) -> Vec<cantor_core::Word> {
    let splits = rng.random_range(0..=max_splits);
    random_pattern(rng, 1, splits).bricks().iter().map(|b| b.word(0).clone()).collect()
}

#[test]
fn elements_and_pairs_round_trip() {
    let mut rng = corpus_rng(40);
    for _ in 0..200 {
        let f = random_element(&mut rng, 1, 8);
        let p = TreePair::from_element(&f).unwrap();
        assert!(p.to_element().equals(&f));
        assert_eq!(TreePair::from_element(&p.to_element()).unwrap(), p);
    }
}

#[test]
fn random_augmentations_preserve_the_map() {
    let mut rng = corpus_rng(41);
    for _ in 0..200 {
        let p = random_pair(&mut rng, 6);
        let u = p.d_leaves()[rng.random_range(0..p.d_leaves().len())].clone();
        let rel = random_leaf_tree(&mut rng, 3);
        let q = augment(&p, &u, &rel).unwrap();
        assert!(q.same_map(&p), "augmenting at {u} changed the map");
        assert_eq!(q.d_leaves().len(), p.d_leaves().len() + rel.len() - 1);
    }
}

#[test]
fn random_chain_augmentations_preserve_the_map() {
    let mut rng = corpus_rng(42);
    let mut valid = 0;
    let mut closed = 0;
    for _ in 0..200 {
        let p = random_pair(&mut rng, 6);
        let leaves = p.d_leaves();
        let mut chain = vec![leaves[rng.random_range(0..leaves.len())].clone()];
        let closes_up = loop {
            let img = p.sigma(chain.last().unwrap()).clone();
            if chain.contains(&img) {
                break true;
            }
            if chain.len() >= 4 || !leaves.contains(&img) {
                break false;
            }
            chain.push(img);
        };
        let rel = random_leaf_tree(&mut rng, 2);
        let result = iterated_augment(&p, &chain, &rel);
        if closes_up {
            closed += 1;
            assert!(matches!(result, Err(AugmentError::ChainClosesUp(_))));
        } else {
            valid += 1;
            let q = result.unwrap();
            assert!(q.same_map(&p), "chain augmentation changed the map");
            assert_eq!(
                q.d_leaves().len(),
                p.d_leaves().len() + chain.len() * (rel.len() - 1)
            );
        }
    }
    assert!(valid >= 100, "too few valid chains exercised: {valid}");
    assert!(valid + closed == 200);
}

#[test]
fn revealing_preserves_the_map_and_balances_leaf_classes() {
    let mut rng = corpus_rng(43);
    for _ in 0..100 {
        let p = random_pair(&mut rng, 8);
        let rev = reveal(&p, RevealOrder::Standard);
        assert!(rev.pair().same_map(&p), "revealing changed the map");
        assert_eq!(rev.source_count(), rev.imbalance());
        assert_eq!(rev.sink_count(), rev.imbalance());
        for comp in rev.repelling_components().iter().chain(rev.attracting_components()) {
            assert_eq!(comp.chain.first(), Some(&comp.lambda));
            assert!(comp.lambda.strip_prefix(&comp.root).is_some());
            assert!(comp.rel_leaves.len() >= 2);
        }
    }
}

#[test]
fn reports_are_independent_of_the_reveal_order() {
    let mut rng = corpus_rng(44);
    for _ in 0..60 {
        let p = random_pair(&mut rng, 8);
        let std = dynamics_report(&p, RevealOrder::Standard);
        let alt = dynamics_report(&p, RevealOrder::Alternate);
        assert_eq!(std, alt, "reveal orders disagree for {p}");
    }
}

#[test]
fn census_confirms_reported_orbits() {
    let mut rng = corpus_rng(45);
    let mut pairs: Vec<TreePair> = vec![
        TreePair::identity(),
        "D: 00 01 1 | R: 0 10 11 | sigma: 00->0 01->10 1->11".parse().unwrap(),
        "D: 00 01 1 | R: 0 10 11 | sigma: 00->10 01->11 1->0".parse().unwrap(),
    ];
    for _ in 0..25 {
        pairs.push(random_pair(&mut rng, 6));
    }
    let points = census_points(3, 6);
    for p in &pairs {
        let f = p.to_element();
        let report = dynamics_report(p, RevealOrder::Standard);
        let cap = report.n_f() + 40;
        for x in &points {
            if let Some(size) = orbit_size(&f, x, cap) {
                assert!(
                    size <= report.n_f(),
                    "census found an orbit of size {size} > reported max {} for {p} at {x}",
                    report.n_f()
                );
            }
        }
        for record in report.records() {
            assert_eq!(
                orbit_size(&f, &record.point, record.period),
                Some(record.period),
                "reported orbit of {p} at {} does not have exact period {}",
                record.point,
                record.period
            );
        }
    }
}

#[test]
fn factors_are_permutations_and_recompose() {
    let mut rng = corpus_rng(46);
    for _ in 0..100 {
        let p = random_pair(&mut rng, 8);
        let factors = permutation_factor(&p);
        for t in &factors {
            assert!(t.is_permutation());
        }
        assert!(compose_factors(&factors).equals(&p.to_element()));
    }
}

#[test]
fn extracted_transpositions_verify_their_certificates() {
    let mut rng = corpus_rng(47);
    let mut done = 0;
    while done < 50 {
        let p = random_pair(&mut rng, 6);
        let f = p.to_element();
        if f.is_identity() {
            continue;
        }
        let (k, cert) = extract_proper_transposition(&p).unwrap();
        assert!(cert.u.len() >= 3 && cert.v.len() >= 3);
        assert!(!cert.u.is_prefix_of(&cert.v) && !cert.v.is_prefix_of(&cert.u));
        // Recompute both commutators from the certificate alone.
        let g = cert.g.to_element();
        let h = compose(&compose(&compose(&g, &f), &g), &f.invert());
        let j = cert.j.to_element();
        let recomputed = compose(&compose(&compose(&j, &h), &j), &h.invert());
        assert!(recomputed.equals(&k.to_element()));
        assert!(k.to_element().equals(&transposition(&cert.u, &cert.v).unwrap().to_element()));
        done += 1;
    }
}

#[test]
fn neutral_interval_points_have_the_reported_exact_period() {
    let p: TreePair =
        "D: 00 01 1 | R: 0 10 11 | sigma: 00->10 01->11 1->0".parse().unwrap();
    let f = p.to_element();
    let report = dynamics_report(&p, RevealOrder::Standard);
    for record in report.records() {
        assert_eq!(record.kind, OrbitKind::NeutralInterval);
        // Not just the representative: several points inside the interval.
        for tail in ["0", "1", "01", "110"] {
            let brick = &record.cycle[0];
            let per: cantor_core::Word = tail.parse().unwrap();
            let x = cantor_core::Point::new(vec![cantor_core::PointCoord::new(
                brick.clone(),
                per,
            )]);
            assert_eq!(orbit_size(&f, &x, record.period), Some(record.period));
        }
    }
}
