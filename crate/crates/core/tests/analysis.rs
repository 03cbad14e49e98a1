//! Analysis experiments against brute-force or hand-checked values.

use hnn_patterns::analysis::{convex, fftp, nonreg, strips};
use hnn_patterns::cayley::{BallLimits, DistanceMap};
use hnn_patterns::presentation::GroupPresentation;

#[test]
fn fftp_constant_and_counterexamples() {
    let cases = [("g11", ["c' a", "c' c^2"]), ("gw", ["d' c", "d' b^2"])];
    for (name, expected) in cases {
        let p = GroupPresentation::builtin(name).unwrap();
        let (k, tried) = fftp::fftp_constant(&p, 4, 6).unwrap();
        assert_eq!(k, Some(2), "{name}");
        let found: Vec<_> = tried.iter().filter_map(|r| r.counterexample.clone()).collect();
        assert_eq!(found, expected, "{name}");
    }
}

#[test]
fn fftp_counterexample_is_not_geodesic() {
    let p = GroupPresentation::g11();
    let w = p.parse_word("c' a").unwrap();
    let v = p.base_word_vector(&w).unwrap();
    assert!(p.base_word_metric(&v) < w.len() as u64);
    let r = fftp::fftp_base_check(&p, 2, 5, 50, 10, 3).unwrap();
    assert!(r.passed);
    assert_eq!(r.sampled, 50);
}

#[test]
fn convexity_pairs_match_direct_count() {
    for p in [GroupPresentation::g11(), GroupPresentation::gw()] {
        let ball = DistanceMap::build(&p, 3, BallLimits::default()).unwrap();
        let r = convex::almost_convex_audit(&p, &ball, 3, 2, 22).unwrap();
        let (one, two) = convex::sphere_pair_count_direct(&p, 3).unwrap();
        assert_eq!((r.pairs_distance_one, r.pairs_distance_two), (one, two), "{}", p.name);
        assert!(r.passed);
        assert!(r.min_connecting_length <= 22);
    }
}

#[test]
fn cut_points_for_small_n() {
    let r = nonreg::nonregularity_cutpoints(&GroupPresentation::g11(), 2, true).unwrap();
    let ks: Vec<u64> = r.iter().map(|x| x.max_geodesic_k).collect();
    assert_eq!(ks, [1, 3]);
    assert!(r.iter().all(|x| x.ball_confirmed == Some(true)));
    assert!(nonreg::strictly_increasing(&r));
}

#[test]
fn small_survey_is_clean() {
    let a = strips::strip_audit(&GroupPresentation::g11(), 6).unwrap();
    assert_eq!(a.census.violation_count(), 0);
    assert_eq!(a.moves.mismatch_count, 0);
    assert!(a.moves.compared() > 0);
    let gw = strips::initial_sequences(&GroupPresentation::gw(), 5).unwrap();
    assert!(gw.classes.keys().all(|c| c == "(-1)(0)(1)" || c == "(-1)(10)(1)"));
}
