//! Invariants of words, normal forms and sequence moves over random inputs.

use hnn_patterns::patterns::moves::{m1_by_insertion, m3_by_pairs};
use hnn_patterns::patterns::{apply_move, format_sequence, parse_sequence, MoveSpec, Sequence, Symbol};
use hnn_patterns::presentation::{find_pinch, free_reduce, GroupPresentation, Letter, Word};
use proptest::prelude::*;

fn presentation() -> impl Strategy<Value = GroupPresentation> {
    prop_oneof![Just(GroupPresentation::g11()), Just(GroupPresentation::gw())]
}

fn word(p: &GroupPresentation, max: usize) -> impl Strategy<Value = Word> {
    let letters = p.alphabet();
    prop::collection::vec(prop::sample::select(letters), 0..=max).prop_map(Word)
}

/// A cyclic permutation of a relator or its inverse.
fn relator(p: &GroupPresentation) -> impl Strategy<Value = Word> {
    (prop::sample::select(p.relators()), any::<bool>(), any::<prop::sample::Index>()).prop_map(|(r, inv, k)| {
        let mut r = if inv { r.inverse() } else { r };
        let k = k.index(r.len());
        r.0.rotate_left(k);
        r
    })
}

fn with_word<S: Strategy>(f: impl Fn(&GroupPresentation) -> S) -> impl Strategy<Value = (GroupPresentation, S::Value)> {
    presentation().prop_flat_map(move |p| {
        let s = f(&p);
        (Just(p), s)
    })
}

fn symbol() -> impl Strategy<Value = Symbol> {
    prop_oneof![Just(Symbol::Minus), Just(Symbol::Zero), Just(Symbol::Plus)]
}

fn sequence() -> impl Strategy<Value = Sequence> {
    prop::collection::vec(symbol(), 0..14).prop_map(Sequence::new)
}

/// Sequences with no `1` before a `-1`.
fn conjectured() -> impl Strategy<Value = Sequence> {
    let side = |s: Symbol| prop::collection::vec(prop_oneof![Just(s), Just(Symbol::Zero)], 0..7);
    (side(Symbol::Minus), 0usize..4, side(Symbol::Plus)).prop_map(|(l, z, r)| {
        let mut core = l;
        core.extend(std::iter::repeat(Symbol::Zero).take(z));
        core.extend(r);
        Sequence::new(core)
    })
}

proptest! {
    #[test]
    fn identity_words_contain_a_pinch(
        (p, parts) in with_word(|p| prop::collection::vec((word(p, 6), relator(p)), 1..4))
    ) {
        let mut w = Word::empty();
        for (u, r) in &parts {
            w = w.concat(u).concat(r).concat(&u.inverse());
        }
        let w = free_reduce(&w);
        prop_assert!(p.is_identity(&w));
        if !p.stable_letter_sequence(&w).is_empty() {
            prop_assert!(find_pinch(&p, &w).is_some(), "{}", p.format_word(&w));
        }
    }

    #[test]
    fn normal_form_ignores_relators(
        (p, (w, r, at)) in with_word(|p| (word(p, 12), relator(p), any::<prop::sample::Index>()))
    ) {
        let at = at.index(w.len() + 1);
        let v = Word(w.0[..at].to_vec()).concat(&r).concat(&Word(w.0[at..].to_vec()));
        prop_assert_eq!(p.normalize(&w), p.normalize(&v));
    }

    #[test]
    fn normal_form_word_represents_the_element((p, w) in with_word(|p| word(p, 12))) {
        let nf = p.normalize(&w);
        let back = nf.to_word(&p);
        prop_assert_eq!(p.normalize(&back), nf.clone());
        prop_assert!(p.is_identity(&w.concat(&back.inverse())));
    }

    #[test]
    fn free_reduction_is_idempotent((p, w) in with_word(|p| word(p, 16))) {
        let r = free_reduce(&w);
        prop_assert_eq!(free_reduce(&r), r.clone());
        prop_assert_eq!(p.normalize(&r), p.normalize(&w));
        let letters: &[Letter] = &r.0;
        prop_assert!(letters.windows(2).all(|x| x[0] != x[1].inverse()));
    }

    #[test]
    fn sequence_notation_roundtrips(s in sequence()) {
        prop_assert_eq!(parse_sequence(&format_sequence(&s)).unwrap(), s);
    }

    #[test]
    fn moves_commute_with_reversal(s in sequence(), widen in 1usize..3, cut in -3i64..16) {
        let n = s.len() as i64;
        let r = s.reversed();
        prop_assert_eq!(apply_move(&r, MoveSpec::M1 { widen }), apply_move(&s, MoveSpec::M1 { widen }).reversed());
        prop_assert_eq!(apply_move(&r, MoveSpec::M3 { cut: n - cut }), apply_move(&s, MoveSpec::M3 { cut }).reversed());
        prop_assert_eq!(apply_move(&r, MoveSpec::M2 { split: n - cut }), apply_move(&s, MoveSpec::M2 { split: cut }).reversed());
    }

    #[test]
    fn move_one_widens_the_plateau(s in conjectured(), widen in 1usize..4) {
        prop_assert_eq!(m1_by_insertion(&s, widen).unwrap(), apply_move(&s, MoveSpec::M1 { widen }));
    }

    #[test]
    fn move_three_pair_table_is_exact(s in conjectured(), which in any::<bool>()) {
        let (lo, hi) = s.plateau();
        let cut = if which { hi } else { lo };
        prop_assert_eq!(m3_by_pairs(&s, cut).unwrap(), apply_move(&s, MoveSpec::M3 { cut }));
    }

    #[test]
    fn moves_keep_conjectured_form(s in conjectured(), widen in 1usize..3, at in any::<prop::sample::Index>()) {
        // Move 2 splits and move 3 cuts at a minimum label.
        let (lo, hi) = s.plateau();
        let cut = lo + at.index((hi - lo + 1) as usize) as i64;
        let images = [
            apply_move(&s, MoveSpec::M1 { widen }),
            apply_move(&s, MoveSpec::M2 { split: cut }),
            apply_move(&s, MoveSpec::M3 { cut }),
        ];
        for t in &images {
            prop_assert!(t.is_conjectured_form(), "{}", format_sequence(t));
        }
    }
}
