use proptest::prelude::*;

use ltl_teach::characterization::{eval_monotone, merged_interleavings, Label, LabeledExample, Sample};
use ltl_teach::logic::{eval_finite, parse_formula, Alphabet, FiniteWord, Formula, Letter};
use ltl_teach::words::{embeds_word, WordExpr};

fn ap() -> Alphabet {
    Alphabet::parse("p,q").unwrap()
}

fn letter() -> impl Strategy<Value = Letter> {
    (0u32..4).prop_map(Letter)
}

fn word(max_len: usize) -> impl Strategy<Value = FiniteWord> {
    prop::collection::vec(letter(), 1..=max_len).prop_map(FiniteWord::new)
}

fn formula(monotone: bool) -> impl Strategy<Value = Formula> {
    let leaf = prop_oneof![Just(Formula::True), Just(Formula::False), (0usize..2).prop_map(Formula::Atom)];
    leaf.prop_recursive(4, 24, 2, move |inner| {
        let mut options = vec![
            inner.clone().prop_map(Formula::eventually).boxed(),
            inner.clone().prop_map(Formula::strict_eventually).boxed(),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)).boxed(),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::or(a, b)).boxed(),
        ];
        if !monotone {
            options.push(inner.clone().prop_map(Formula::not).boxed());
            options.push(inner.clone().prop_map(Formula::next).boxed());
            options.push((inner.clone(), inner).prop_map(|(a, b)| Formula::until(a, b)).boxed());
        }
        prop::strategy::Union::new(options)
    })
}

fn expr() -> impl Strategy<Value = WordExpr> {
    (word(3), prop::option::of(word(2))).prop_map(|(prefix, period)| {
        let head = WordExpr::from_word(&prefix).unwrap();
        match period {
            None => head,
            Some(p) => WordExpr::Concat(Box::new(head), Box::new(WordExpr::omega(WordExpr::from_word(&p).unwrap()))),
        }
    })
}

proptest! {
    #[test]
    fn formula_display_round_trips(f in formula(false)) {
        let ap = ap();
        let text = f.display(&ap).to_string();
        prop_assert_eq!(parse_formula(&text, &ap).unwrap(), f);
    }

    #[test]
    fn negation_is_complement(f in formula(false), w in word(6)) {
        prop_assert_eq!(eval_finite(&Formula::not(f.clone()), &w).unwrap(), !eval_finite(&f, &w).unwrap());
    }

    #[test]
    fn monotone_evaluation_agrees_on_finite_words(f in formula(true), w in word(5)) {
        prop_assert_eq!(eval_monotone(&f, &w).unwrap(), eval_finite(&f, &w).unwrap());
    }

    #[test]
    fn monotone_truth_is_upward_closed(f in formula(true), u in word(4), extra in word(4), seed in any::<u64>()) {
        let mut letters = u.letters().to_vec();
        let mut s = seed;
        for &l in extra.letters() {
            let at = 1 + (s as usize) % letters.len();
            letters.insert(at, l);
            s = s.rotate_left(7) ^ 0x9e37_79b9;
        }
        for (i, l) in letters.iter_mut().enumerate() {
            if (seed >> (i % 64)) & 1 == 1 {
                *l = l.union(Letter(1));
            }
        }
        let w = FiniteWord::new(letters);
        prop_assume!(embeds_word(&u, &w, true));
        if eval_finite(&f, &u).unwrap() {
            prop_assert!(eval_finite(&f, &w).unwrap());
        }
    }

    #[test]
    fn interleavings_embed_both_sides(u in word(3), v in word(3)) {
        let merged = merged_interleavings(&u, &v).unwrap();
        prop_assert!(!merged.is_empty());
        for w in &merged {
            prop_assert!(embeds_word(&u, w, true) && embeds_word(&v, w, true));
            prop_assert!(w.len() >= u.len().max(v.len()) && w.len() < u.len() + v.len());
        }
    }

    #[test]
    fn anchored_embedding_is_transitive(a in word(3), b in word(4), c in word(5)) {
        if embeds_word(&a, &b, true) && embeds_word(&b, &c, true) {
            prop_assert!(embeds_word(&a, &c, true));
        }
        prop_assert!(embeds_word(&a, &a, true));
    }

    #[test]
    fn complement_is_an_involution(w in word(6)) {
        let ap = ap();
        prop_assert_eq!(ap.complement_word(&ap.complement_word(&w)), w);
    }

    #[test]
    fn shortlex_orders_by_length_first(u in word(4), v in word(4)) {
        if u.len() < v.len() {
            prop_assert!(u < v);
        }
    }

    #[test]
    fn word_expressions_round_trip(e in expr()) {
        let ap = ap();
        let back = WordExpr::parse(&e.display(&ap), &ap).unwrap();
        prop_assert_eq!(back.display(&ap), e.display(&ap));
        prop_assert_eq!(back.to_flat().unwrap(), e.to_flat().unwrap());
    }

    #[test]
    fn samples_round_trip(words in prop::collection::vec((word(4), any::<bool>()), 0..6), e in expr()) {
        let ap = ap();
        let mut s = Sample::new(ap);
        for (w, b) in words {
            s.push(LabeledExample::word(w, Label::from_bool(b)));
        }
        s.push(LabeledExample::expr(e, Label::Negative));
        let text = s.to_string();
        let back = Sample::parse(&text).unwrap();
        prop_assert_eq!(back.len(), s.len());
        prop_assert_eq!(back.to_string(), text);
    }
}
