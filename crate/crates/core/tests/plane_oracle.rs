//! The plane-tree distance oracle against brute-force breadth-first search.

use hnn_patterns::cayley::planes::{survey, PlaneOracle, SurveyOptions};
use hnn_patterns::cayley::{BallLimits, DistanceMap};
use hnn_patterns::presentation::GroupPresentation;

fn compare(name: &str, radius: u32) {
    let p = GroupPresentation::builtin(name).unwrap();
    let ball = DistanceMap::build(&p, radius, BallLimits::default()).unwrap();
    let mut opts = SurveyOptions::new(radius);
    opts.dedup = false;
    let mut checked = 0usize;
    survey(&p, opts, |plane, _, exit| {
        let anchor = exit.anchor(plane);
        let w = &p.rule(exit.rule).axis(exit.side).vector;
        let lo = exit.labels.start - 3;
        let hi = exit.labels.start + exit.labels.values.len() as i64 + 3;
        for k in lo..hi {
            let mut g = anchor.clone();
            g.mul_vector(&w.scale(k));
            let want = exit.labels.at(k);
            let got = ball.distance(&g);
            if want <= radius as u64 {
                assert_eq!(got, Some(want as u32), "{name}: near point {k} of strip at {:?}", anchor);
            } else {
                assert_eq!(got, None);
            }
            g.mul_letter(&p, exit.crossing_letter());
            let got = ball.distance(&g);
            if want < radius as u64 {
                assert_eq!(got, Some(want as u32 + 1), "{name}: far point {k}");
            }
            checked += 1;
        }
    })
    .unwrap();
    assert!(checked > 1000);
}

#[test]
fn g11_planes_match_bfs() {
    compare("g11", 6);
}

#[test]
fn gw_planes_match_bfs() {
    compare("gw", 6);
}

#[test]
fn every_ball_element_lies_on_a_surveyed_plane_with_matching_distance() {
    let p = GroupPresentation::g11();
    let radius = 5;
    let ball = DistanceMap::build(&p, radius, BallLimits::default()).unwrap();
    let mut fields = std::collections::HashMap::new();
    let mut opts = SurveyOptions::new(radius + 1);
    opts.dedup = false;
    survey(&p, opts, |plane, field, _| {
        fields.entry(plane.origin.clone()).or_insert_with(|| field.clone());
    })
    .unwrap();
    for (g, d) in ball.iter() {
        let found = fields.iter().find(|(o, _)| o.segments == g.segments);
        let (o, f) = found.unwrap_or_else(|| panic!("no plane for {g:?}"));
        let q = &g.tail - &o.tail;
        assert_eq!(f.value(p.metric(), &q), d as u64);
    }
}

#[test]
fn chain_oracle_matches_ball() {
    for p in [GroupPresentation::g11(), GroupPresentation::gw()] {
        let ball = DistanceMap::build(&p, 6, BallLimits::default()).unwrap();
        let mut oracle = PlaneOracle::new(&p).unwrap();
        for (g, d) in ball.iter() {
            assert_eq!(oracle.distance(&g), d as u64, "{}", p.display_word(&g.to_word(&p)));
        }
        for (g, _) in ball.iter().filter(|(_, d)| *d <= 4) {
            assert_eq!(oracle.geodesic_count(&g), ball.geodesic_count(&p, &g).unwrap());
        }
    }
}
