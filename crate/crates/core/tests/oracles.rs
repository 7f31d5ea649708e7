//! Worked values checked against brute-force or closed-form oracles.

#![allow(clippy::needless_range_loop, clippy::neg_cmp_op_on_partial_ord)]

mod common;

use fmetric::conditions::{edelstein_check, kannan_check, PairSample, SampleSource};
use fmetric::corpus::{
    oscillating_orbit_space, random_fspace, random_metric, rect_b_family, sequence_space,
};
use fmetric::fspace::{
    alpha_divergence_profile, ball_base, check_identity_symmetry, hausdorff_witness, min_alpha,
    min_chain_sums, open_ball, verify_d3,
};
use fmetric::{AlteringDistance, Basis, FGenerator, FiniteSpace, Space, Witness};

fn gap_triangle() -> FiniteSpace {
    FiniteSpace::from_fn(vec!["a".into(), "b".into(), "c".into()], |i, j| {
        if i.min(j) == 0 && i.max(j) == 2 {
            5.0
        } else {
            1.0
        }
    })
}

#[test]
fn rect_b_chain_sum_through_one_generic_point() {
    let space = rect_b_family(10).unwrap();
    let oracle = common::chain_sums(&space, 5);
    let sp = min_chain_sums(&space).unwrap();
    assert_eq!(sp[0][1].to_bits(), oracle[0][1].to_bits());
    assert!((sp[0][1] - 0.06).abs() < 1e-15);
    for n in 2..=6 {
        let space = rect_b_family(n).unwrap();
        let oracle = common::chain_sums(&space, 5);
        assert_eq!(min_chain_sums(&space).unwrap(), oracle, "n = {n}");
    }
}

#[test]
fn gap_triangle_slack_is_ln_five_halves() {
    let space = gap_triangle();
    let ln = FGenerator::ln();
    let sp = common::exhaustive_chain_sums(&space);
    assert_eq!(sp[0][2], 2.0);
    let oracle = common::slack(&space, &sp, &ln);
    assert!((oracle - (2.5f64).ln()).abs() < 1e-15);
    let a = min_alpha(&space, &ln).unwrap();
    assert!((a - oracle).abs() <= f64::EPSILON);
    assert!(verify_d3(&space, &Witness::new(ln.clone(), a).unwrap()).unwrap().passed);
    let r = verify_d3(&space, &Witness::new(ln, 0.0).unwrap()).unwrap();
    assert_eq!(r.violations.len(), 1);
    assert_eq!(r.violations[0].labels, ("a".to_string(), "c".to_string()));
    assert_eq!(r.violations[0].lhs, 5f64.ln());
    assert_eq!(r.violations[0].rhs, 2f64.ln());
}

#[test]
fn min_alpha_agrees_with_chain_oracle_on_random_spaces() {
    for f in [FGenerator::ln(), FGenerator::neg_inv()] {
        for seed in 0..40 {
            let space = fmetric::corpus::random_symmetric(seed, 2 + (seed % 5) as usize).unwrap();
            let oracle = common::slack(&space, &common::exhaustive_chain_sums(&space), &f);
            let a = min_alpha(&space, &f).unwrap();
            assert!((a - oracle).abs() <= 4.0 * f64::EPSILON * oracle.max(1.0), "{} seed {seed}", f.name());
            assert!(common::d3_holds_on_all_chains(&space, &f, a));
        }
    }
}

#[test]
fn rect_b_neg_inv_slack_grows() {
    // f(15) - f(6/n²) = n²/6 - 1/15
    let profile = alpha_divergence_profile(rect_b_family, &FGenerator::neg_inv(), 2..=10).unwrap();
    for &(n, a) in &profile {
        let want = (n * n) as f64 / 6.0 - 1.0 / 15.0;
        assert!((a - want).abs() < 1e-12, "n = {n}: {a} vs {want}");
    }
    assert!(profile.windows(2).all(|w| w[1].1 > w[0].1));
}

#[test]
fn metric_point_clouds_need_no_slack() {
    for seed in 0..20 {
        let space = random_metric(seed, 6).unwrap();
        assert!(check_identity_symmetry(&space).passed);
        assert_eq!(min_chain_sums(&space).unwrap(), common::exhaustive_chain_sums(&space));
    }
}

#[test]
fn hausdorff_three_point_space_needs_two_halvings() {
    let space = FiniteSpace::from_fn(vec!["0".into(), "1".into(), "2".into()], |i, j| match (i.min(j), i.max(j)) {
        (0, 2) => 1.0,
        _ => 0.4,
    });
    // n = 1: radius 0.5, both balls hold point 1
    assert_eq!(common::ball(&space, 0, 0.5), vec![0, 1]);
    assert_eq!(common::ball(&space, 2, 0.5), vec![1, 2]);
    let h = hausdorff_witness(&space, 0, 2).unwrap();
    assert_eq!(h.n, 2);
    assert_eq!(h.radius, 0.25);
    assert_eq!(h.ball_x, common::ball(&space, 0, 0.25));
    assert_eq!(h.ball_y, common::ball(&space, 2, 0.25));
}

#[test]
fn hausdorff_balls_match_direct_scan() {
    for seed in 0..20 {
        let (space, _) = random_fspace(seed, 7, &FGenerator::ln()).unwrap();
        for y in 1..space.len() {
            let h = hausdorff_witness(&space, 0, y).unwrap();
            assert_eq!(h.ball_x, common::ball(&space, 0, h.radius));
            assert_eq!(h.ball_y, common::ball(&space, y, h.radius));
            // minimality: the previous radius gives overlapping balls
            if h.n > 1 {
                let r = (space.d(0, y) / (h.n - 1) as f64) / 2.0;
                let bx = common::ball(&space, 0, r);
                assert!(common::ball(&space, y, r).iter().any(|p| bx.contains(p)));
            }
        }
    }
}

#[test]
fn ball_base_on_scaled_line() {
    let space = FiniteSpace::from_fn(vec!["0".into(), "1".into(), "2".into()], |i, j| {
        0.1 * (i as f64 - j as f64).abs()
    });
    let base = ball_base(&space, 0).unwrap();
    let sets: Vec<Vec<usize>> = base.iter().map(|b| b.members.clone()).collect();
    assert_eq!(sets, vec![vec![0, 1, 2], vec![0, 1], vec![0]]);
    // strict balls: 1/5 = 0.2 = d(0, 2) already excludes 2
    let firsts: Vec<u64> = base.iter().map(|b| b.n).collect();
    assert_eq!(firsts, vec![1, 5, 10]);
    for b in &base {
        assert_eq!(b.members, common::ball(&space, 0, 1.0 / b.n as f64));
        if b.n > 1 {
            assert_ne!(b.members, common::ball(&space, 0, 1.0 / (b.n - 1) as f64));
        }
    }
}

#[test]
fn open_balls_on_unit_line() {
    let space = FiniteSpace::from_fn(vec!["0".into(), "1".into(), "2".into()], |i, j| (i as f64 - j as f64).abs());
    assert_eq!(open_ball(&space, &0, 1.0).unwrap(), vec![0]);
    assert_eq!(open_ball(&space, &0, 1.5).unwrap(), vec![0, 1]);
    assert_eq!(open_ball(&space, &1, 10.0).unwrap(), vec![0, 1, 2]);
    assert_eq!(ball_base(&space, 0).unwrap().len(), 1);
}

#[test]
fn sequence_space_values() {
    let ex = sequence_space(1000).unwrap();
    let s = &ex.space;
    assert!((s.distance(&Basis(1), &Basis(3)) - 5.0 / 3.0).abs() < 1e-15);
    assert!((s.distance(&Basis(3), &Basis(6)) - 7.0 / 6.0).abs() < 1e-15);
    assert_eq!(s.distance(&Basis(2), &Basis(2)), 0.0);
    // (e1, e2) -> (e3, e6): lhs 7/6, rhs (5/3 + 4/3)/2 = 3/2
    let sample = PairSample::new([(Basis(1), Basis(2))], SampleSource::Explicit);
    let r = kannan_check(s, ex.map(), &AlteringDistance::identity(), &sample).unwrap();
    assert!(r.passed);
    assert!((r.margin_min.unwrap() - (1.5 - 7.0 / 6.0)).abs() < 1e-15);
}

#[test]
fn oscillating_values_and_edelstein_failure() {
    let ex = oscillating_orbit_space(50).unwrap();
    let (s, t) = (&ex.space, ex.map());
    assert!((t.apply(&(7.0 / 3.0)).unwrap() + 9.0 / 4.0).abs() < 1e-15);
    assert!((t.apply(&(-9.0 / 4.0)).unwrap() - 13.0 / 6.0).abs() < 1e-15);
    // (7/3, -9/4) -> (-9/4, 13/6): 53/12 against 55/12
    let sample = PairSample::new([(7.0 / 3.0, -9.0 / 4.0)], SampleSource::Explicit);
    let r = edelstein_check(s, t, &AlteringDistance::identity(), &sample).unwrap();
    assert!(r.passed);
    assert!((r.margin_min.unwrap() - 1.0 / 6.0).abs() < 1e-14);
    // (2, 2 + 1/(3n)) -> (-2, -2 - 1/(3n+1)): 1/(3n+1) < 1/(3n) holds
    // (2, -2) -> (-2, 2): a tie, so the strict inequality fails
    let pairs: Vec<(f64, f64)> = (1..=10).map(|n| (2.0, 2.0 + 1.0 / (3 * n) as f64)).chain([(2.0, -2.0)]).collect();
    let expected_fail: Vec<bool> = pairs
        .iter()
        .map(|(x, y)| {
            let (tx, ty) = (t.apply(x).unwrap(), t.apply(y).unwrap());
            !((tx - ty).abs() < (x - y).abs())
        })
        .collect();
    let r = edelstein_check(s, t, &AlteringDistance::identity(), &PairSample::new(pairs, SampleSource::Explicit)).unwrap();
    let failed: Vec<usize> = r.violations.iter().map(|v| v.index).collect();
    let want: Vec<usize> = expected_fail.iter().enumerate().filter(|(_, f)| **f).map(|(k, _)| k).collect();
    assert_eq!(failed, want);
    assert_eq!(want, vec![10]);
}
