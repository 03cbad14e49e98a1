//! Acceptance suite: one line per criterion, nonzero exit if any fails.

use hnn_patterns::analysis::{convex, fellow, fftp, nonreg, strips};
use hnn_patterns::cayley::{BallLimits, DistanceMap};
use hnn_patterns::patterns::{
    apply_move, apply_move_pattern, enumerate_reachable, moves::m3_by_pairs, Cut, EnumerateMode, EnumerateOptions,
    Pattern, PatternMove, Reachable, Sequence, Symbol,
};
use hnn_patterns::presentation::{find_pinch, free_reduce, BaseVector, GroupPresentation, Letter, Word};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::{BTreeSet, HashMap, VecDeque};
use std::process::Command;
use std::time::Instant;

type Outcome = Result<String, String>;

fn ensure(ok: bool, pass: String, fail: String) -> Outcome {
    if ok {
        Ok(pass)
    } else {
        Err(fail)
    }
}

/// Grid BFS over the base generators, independent of the closed-form metric.
fn grid_distances(p: &GroupPresentation, bound: i64) -> HashMap<(i64, i64), u64> {
    let steps: Vec<(i64, i64)> =
        p.base_gens.iter().flat_map(|g| [(g.vector.0[0], g.vector.0[1]), (-g.vector.0[0], -g.vector.0[1])]).collect();
    let mut dist = HashMap::from([((0, 0), 0u64)]);
    let mut queue = VecDeque::from([(0i64, 0i64)]);
    while let Some((x, y)) = queue.pop_front() {
        let d = dist[&(x, y)];
        for (dx, dy) in &steps {
            let q = (x + dx, y + dy);
            if q.0.abs() <= bound && q.1.abs() <= bound && !dist.contains_key(&q) {
                dist.insert(q, d + 1);
                queue.push_back(q);
            }
        }
    }
    dist
}

fn crit1() -> Outcome {
    let t = Instant::now();
    let p = GroupPresentation::g11();
    // Geodesics to points with |x|, |y| <= 8 have at most 16 unit king steps.
    let grid = grid_distances(&p, 16);
    let mut bad = Vec::new();
    for x in -8..=8 {
        for y in -8..=8 {
            let v = BaseVector::from_slice(&[x, y]);
            if p.base_word_metric(&v) != grid[&(x, y)] {
                bad.push((x, y));
            }
        }
    }
    for i in 0..=4 {
        if p.base_word_metric(&BaseVector::from_slice(&[2 * i, 0])) != 2 * i as u64 {
            bad.push((2 * i, 0));
        }
    }
    let secs = t.elapsed().as_secs_f64();
    ensure(
        bad.is_empty() && secs < 1.0,
        format!("289 points agree with grid BFS, d((2i,0)) = 2i for i <= 4, {secs:.3}s"),
        format!("mismatches at {bad:?}, {secs:.3}s"),
    )
}

fn crit2() -> Outcome {
    let r = strips::initial_sequences(&GroupPresentation::g11(), 10).map_err(|e| e.to_string())?;
    let odd: Vec<&String> = r.sequences.keys().filter(|s| strips::initial_class(&parse(s)) != "(-1)(0)(1)").collect();
    ensure(
        odd.is_empty() && r.strips > 0,
        format!("{} initial strips, {} distinct sequences, all (-1)(0)^k(1)", r.strips, r.sequences.len()),
        format!("sequences outside (-1)(0)^k(1): {odd:?}"),
    )
}

fn parse(s: &str) -> Sequence {
    hnn_patterns::patterns::parse_sequence(s).expect("printed sequences parse")
}

fn crit3() -> Outcome {
    let r = strips::initial_sequences(&GroupPresentation::gw(), 8).map_err(|e| e.to_string())?;
    let classes: BTreeSet<&str> = r.classes.keys().map(|s| s.as_str()).collect();
    let want: BTreeSet<&str> = ["(-1)(0)(1)", "(-1)(10)(1)"].into();
    ensure(
        classes == want,
        format!("{} initial strips in exactly the classes {:?}", r.strips, r.classes),
        format!("classes {:?}", r.classes),
    )
}

fn crit4() -> Outcome {
    let mut p = Pattern::trivial();
    let mut got = Vec::new();
    for _ in 0..3 {
        let images = apply_move_pattern(&p, PatternMove::M2(Cut::Boundary(0))).map_err(|e| e.to_string())?;
        p = images.into_iter().next().ok_or("no image")?;
        got.push(p.to_string());
    }
    let want = ["(-1)(0)(10)(1)", "(-1)(0)(10)(1110)(1)", "(-1)(0)(10)(1110)(1^7 0)(1)"];
    ensure(got == want, format!("{}", got.join(" -> ")), format!("got {got:?}"))
}

fn crit5(audit: &strips::StripAudit) -> Outcome {
    let m = &audit.moves;
    ensure(
        m.mismatch_count == 0 && m.unpredicted == 0 && m.compared() > 0,
        format!("{} crossings (moves 1-4: {:?}), 0 mismatches", m.compared(), &m.by_move[1..]),
        format!("{} mismatches, {} unpredicted, e.g. {:?}", m.mismatch_count, m.unpredicted, m.mismatches.first()),
    )
}

fn crit6(audit: &strips::StripAudit) -> Outcome {
    let c = &audit.census;
    let reach = enumerate_reachable(EnumerateMode::Pattern, EnumerateOptions { depth: 8, inner_cuts: false });
    match reach {
        Err(e) => Err(e.to_string()),
        Ok(Reachable::Patterns(v)) => {
            let bad: Vec<String> = v.iter().filter(|x| !x.item.is_conjectured_form()).map(|x| x.item.to_string()).collect();
            ensure(
                c.violation_count() == 0 && bad.is_empty(),
                format!("{} strips in B(12) and {} patterns at depth 8, all in conjectured form", c.strips, v.len()),
                format!("{} strip violations {:?}, pattern violations {:?}", c.violation_count(), c.violations, bad),
            )
        }
        Ok(Reachable::Sequences(_)) => Err("wrong mode".into()),
    }
}

fn crit7() -> Outcome {
    let r = nonreg::nonregularity_cutpoints(&GroupPresentation::g11(), 3, true).map_err(|e| e.to_string())?;
    let ks: Vec<u64> = r.iter().map(|x| x.max_geodesic_k).collect();
    let confirmed = r.iter().all(|x| x.ball_confirmed == Some(true));
    ensure(
        ks == [1, 3, 7] && confirmed,
        format!("cut points {ks:?} for n = 1, 2, 3, confirmed by branch balls"),
        format!("cut points {ks:?}, ball confirmed {:?}", r.iter().map(|x| x.ball_confirmed).collect::<Vec<_>>()),
    )
}

fn crit8() -> Outcome {
    let p = GroupPresentation::g11();
    let r: Vec<_> = (1..=2).map(|n| fellow::fellow_traveler_audit(&p, n)).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
    let summary = r
        .iter()
        .map(|x| {
            format!(
                "n={}: geodesics {}/{}, endpoint distance {}, sync {}",
                x.n, x.w_geodesics, x.w_prime_geodesics, x.endpoint_distance, x.sync_constant
            )
        })
        .collect::<Vec<_>>()
        .join("; ");
    let ok = r.iter().all(|x| x.both_unique && x.endpoint_distance <= 1) && r[1].sync_constant > r[0].sync_constant;
    ensure(ok, summary.clone(), summary)
}

fn crit9() -> Outcome {
    let mut lines = Vec::new();
    let mut ok = true;
    for p in [GroupPresentation::g11(), GroupPresentation::gw()] {
        let (k, _) = fftp::fftp_constant(&p, 4, fftp::FFTP_EXHAUSTIVE_LENGTH).map_err(|e| e.to_string())?;
        let k = k.ok_or(format!("{}: no falsification constant up to 4", p.name))?;
        let cap = 10 * k + 2;
        let ball = DistanceMap::build(&p, 8, BallLimits::default()).map_err(|e| e.to_string())?;
        let mut worst = 0;
        let mut pairs = 0;
        for n in 1..=8 {
            let r = convex::almost_convex_audit(&p, &ball, n, k, cap).map_err(|e| e.to_string())?;
            ok &= r.passed;
            worst = worst.max(r.min_connecting_length);
            pairs += r.pairs_distance_one + r.pairs_distance_two;
        }
        lines.push(format!("{}: k = {k}, bound {cap}, {pairs} pairs, worst length {worst}", p.name));
    }
    ensure(ok, lines.join("; "), lines.join("; "))
}

fn random_word(rng: &mut ChaCha8Rng, letters: &[Letter], len: usize) -> Word {
    Word((0..len).map(|_| letters[rng.gen_range(0..letters.len())]).collect())
}

/// A cyclic permutation of a relator or its inverse.
fn random_relator(rng: &mut ChaCha8Rng, rels: &[Word]) -> Word {
    let mut r = rels[rng.gen_range(0..rels.len())].clone();
    if rng.gen_bool(0.5) {
        r = r.inverse();
    }
    let k = rng.gen_range(0..r.len());
    r.0.rotate_left(k);
    r
}

fn britton_soundness(rng: &mut ChaCha8Rng) -> Result<(), String> {
    for p in [GroupPresentation::g11(), GroupPresentation::gw()] {
        let letters = p.alphabet();
        let rels = p.relators();
        let mut done = 0;
        while done < 500 {
            let mut w = Word::empty();
            for _ in 0..rng.gen_range(1..5) {
                let len = rng.gen_range(0..7);
                let u = random_word(rng, &letters, len);
                w = w.concat(&u).concat(&random_relator(rng, &rels)).concat(&u.inverse());
            }
            let w = free_reduce(&w);
            if p.stable_letter_sequence(&w).is_empty() {
                continue;
            }
            if !p.is_identity(&w) {
                return Err(format!("not an identity word: {}", p.format_word(&w)));
            }
            if find_pinch(&p, &w).is_none() {
                return Err(format!("no pinch in {}", p.format_word(&w)));
            }
            done += 1;
        }
    }
    Ok(())
}

fn relator_insertion(rng: &mut ChaCha8Rng) -> Result<(), String> {
    for p in [GroupPresentation::g11(), GroupPresentation::gw()] {
        let letters = p.alphabet();
        let rels = p.relators();
        for _ in 0..500 {
            let len = rng.gen_range(0..14);
            let w = random_word(rng, &letters, len);
            let at = rng.gen_range(0..=w.len());
            let r = random_relator(rng, &rels);
            let mut v = Word(w.0[..at].to_vec());
            v = v.concat(&r).concat(&Word(w.0[at..].to_vec()));
            if p.normalize(&w) != p.normalize(&v) {
                return Err(format!("{} and {} differ", p.format_word(&w), p.format_word(&v)));
            }
        }
    }
    Ok(())
}

/// Move 3 on `(0) w` pairs `w` either from the end of the plateau or from
/// one step inside it; both must give the same sequence, which must match
/// the pair table.
fn m3_pairing(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let mut done = 0;
    while done < 1000 {
        let mut core = Vec::new();
        for _ in 0..rng.gen_range(0..8) {
            core.push(if rng.gen_bool(0.5) { Symbol::Minus } else { Symbol::Zero });
        }
        core.extend(std::iter::repeat(Symbol::Zero).take(rng.gen_range(1..5)));
        for _ in 0..rng.gen_range(0..8) {
            core.push(if rng.gen_bool(0.5) { Symbol::Plus } else { Symbol::Zero });
        }
        let s = Sequence::new(core);
        let (lo, hi) = s.plateau();
        if lo == hi {
            continue;
        }
        let a = apply_move(&s, hnn_patterns::patterns::MoveSpec::M3 { cut: hi });
        let b = apply_move(&s, hnn_patterns::patterns::MoveSpec::M3 { cut: hi - 1 });
        let t = m3_by_pairs(&s, hi).map_err(|e| e.to_string())?;
        if a != b || a != t {
            return Err(format!("{s:?}: {a:?} / {b:?} / {t:?}"));
        }
        done += 1;
    }
    Ok(())
}

fn deterministic_certificates() -> Result<(), String> {
    let runs: [&[&str]; 5] = [
        &["ball", "--radius", "4", "--no-cache"],
        &["sequences", "--radius", "6"],
        &["moves", "--depth", "4"],
        &["nonreg", "--n-max", "3"],
        &["fftp", "--samples", "200", "--seed", "11"],
    ];
    for args in runs {
        let mut outs = Vec::new();
        for _ in 0..3 {
            let out = Command::new(env!("CARGO_BIN_EXE_hnnpat"))
                .args(args)
                .args(["--format", "json"])
                .output()
                .map_err(|e| e.to_string())?;
            if !out.status.success() {
                return Err(format!("{args:?} exited with {}", out.status));
            }
            outs.push(out.stdout);
        }
        if outs.windows(2).any(|w| w[0] != w[1]) {
            return Err(format!("{args:?} output differs between runs"));
        }
    }
    Ok(())
}

fn crit10() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    britton_soundness(&mut rng).map_err(|e| format!("Britton soundness: {e}"))?;
    relator_insertion(&mut rng).map_err(|e| format!("relator insertion: {e}"))?;
    m3_pairing(&mut rng).map_err(|e| format!("move 3 pairing: {e}"))?;
    deterministic_certificates().map_err(|e| format!("certificates: {e}"))?;
    Ok("1000 identity words pinch, 1000 relator insertions keep the normal form, 1000 pairings agree, 5 commands x 3 runs byte-identical".into())
}

fn main() {
    let mut failed = 0;
    let mut report = |n: u32, name: &str, t: Instant, r: Outcome| {
        let secs = t.elapsed().as_secs_f64();
        match r {
            Ok(msg) => println!("PASS {n:>2} {name}: {msg} [{secs:.1}s]"),
            Err(msg) => {
                failed += 1;
                println!("FAIL {n:>2} {name}: {msg} [{secs:.1}s]");
            }
        }
    };
    let t = Instant::now();
    report(1, "base metric", t, crit1());
    let t = Instant::now();
    report(2, "initial sequences of g11", t, crit2());
    let t = Instant::now();
    report(3, "initial patterns of gw", t, crit3());
    let t = Instant::now();
    report(4, "chained move 2", t, crit4());
    let t = Instant::now();
    match strips::strip_audit(&GroupPresentation::g11(), 12) {
        Ok(audit) => {
            report(5, "labels match moves", t, crit5(&audit));
            let t = Instant::now();
            report(6, "conjectured form", t, crit6(&audit));
        }
        Err(e) => {
            report(5, "labels match moves", t, Err(e.to_string()));
            report(6, "conjectured form", t, Err(e.to_string()));
        }
    }
    let t = Instant::now();
    report(7, "nonregularity cut points", t, crit7());
    let t = Instant::now();
    report(8, "unique geodesics and divergence", t, crit8());
    let t = Instant::now();
    report(9, "almost convexity", t, crit9());
    let t = Instant::now();
    report(10, "property suites", t, crit10());
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
    println!("all criteria passed");
}
