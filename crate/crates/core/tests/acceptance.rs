use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use ltl_teach::characterization::{
    characterize_monotone, classify_operator_set, dual, eval_monotone, maximal_positive_sets,
    merged_interleavings, size_report, ClassWitness, DualVariant, Label, LabeledExample, MonotoneOptions, Payload, Sample,
};
use ltl_teach::logic::{parse_formula, Alphabet, FiniteWord, Formula, FragmentSignature, Letter, Op};
use ltl_teach::verification::{
    adversary, decide_equivalence, enumerate_formulas, fits, gold_learn, gold_teach, oracle_upward_closure,
    until_bound_formula, verify_unique, verify_unique_with, CompiledFormula, EnumerationOrder, Family, FitOptions,
    OracleVerdict, SchemaMode, SearchBound, UniqueOptions,
};
use ltl_teach::logic::Equivalence;
use ltl_teach::schematic::characterize_schematic;
use ltl_teach::words::{embeds_flat, embeds_word, WordExpr};

type Outcome = Result<String, String>;

fn ap(list: &str) -> Alphabet {
    Alphabet::parse(list).unwrap()
}

fn monotone_sweep(max_size: usize) -> (Alphabet, Vec<Formula>) {
    let ap = ap("p,q");
    let order = EnumerationOrder::new(ap.clone(), FragmentSignature::monotone(), max_size);
    let all = enumerate_formulas(&order);
    (ap, all)
}

fn criterion_1() -> Outcome {
    let ap = ap("p,q,r");
    let f = parse_formula("F(p & q & F(r & F(p & q)))", &ap).map_err(|e| e.to_string())?;
    let r = characterize_monotone(&f, &ap, &MonotoneOptions::default()).map_err(|e| e.to_string())?;
    let got: BTreeSet<String> = r.sample.positives().map(|p| p.display(&ap)).collect();
    let expected: BTreeSet<String> = [
        "{p,q}.{r}.{p,q}",
        "{p,q}.{p,q,r}",
        "{p,q,r}",
        "{}.{p,q}.{r}.{p,q}",
        "{}.{p,q}.{p,q,r}",
        "{}.{p,q,r}",
    ]
    .map(String::from)
    .into();
    if got != expected {
        return Err(format!("positives {got:?}"));
    }
    for neg in r.sample.negatives() {
        let value = match neg {
            Payload::Word(w) => eval_monotone(&f, w),
            Payload::Expr(e) => eval_monotone(&f, e),
            Payload::Schema(_) => return Err("schema payload in a transfinite sample".into()),
        }
        .map_err(|e| e.to_string())?;
        if value {
            return Err(format!("negative {} satisfies the formula", neg.display(&ap)));
        }
    }
    for text in [
        "{p,q}^w . ({p,r}.{q,r})^w",
        "({p,r}.{q,r})^w . {p,q}^w . ({p,r}.{q,r})^w",
        "({q,r}.{p,r})^w . {p,q}^w . ({p,r}.{q,r})^w",
    ] {
        let e = WordExpr::parse(text, &ap).map_err(|e| e.to_string())?;
        if eval_monotone(&f, &e).map_err(|e| e.to_string())? {
            return Err(format!("hand-crafted negative {text} satisfies the formula"));
        }
    }
    Ok(format!("6 positives, {} negatives", r.negatives))
}

fn criterion_2_and_6() -> (Outcome, Outcome) {
    let (ap, all) = monotone_sweep(5);
    let results: Vec<Result<(usize, usize, bool), String>> = all
        .par_iter()
        .map(|f| {
            let r = characterize_monotone(f, &ap, &MonotoneOptions::default()).map_err(|e| e.to_string())?;
            let v = verify_unique(f, &r.sample, FragmentSignature::monotone(), 5).map_err(|e| e.to_string())?;
            if !v.is_confirmed() {
                return Err(format!("{}: {:?}", f.display(&ap), v.status));
            }
            let report = size_report(&r, f);
            Ok((f.size(), r.negatives, report.ok()))
        })
        .collect();
    let mut failures = Vec::new();
    let mut bound_violations = 0;
    let mut by_size: BTreeMap<usize, (usize, usize, usize)> = BTreeMap::new();
    for (f, r) in all.iter().zip(&results) {
        match r {
            Err(e) => failures.push(e.clone()),
            Ok((size, negs, ok)) => {
                if !ok {
                    bound_violations += 1;
                    failures.push(format!("{}: length bound violated", f.display(&ap)));
                }
                let entry = by_size.entry(*size).or_default();
                entry.0 += 1;
                entry.1 += negs;
                entry.2 = entry.2.max(*negs);
            }
        }
    }
    let c2 = if failures.iter().any(|e| !e.ends_with("length bound violated")) {
        Err(format!("{} failures, first: {}", failures.len(), failures[0]))
    } else {
        Ok(format!("{} formulas confirmed", all.len()))
    };
    let trend: Vec<String> = by_size
        .iter()
        .map(|(s, (n, total, max))| format!("|φ|={s}: mean |E⁻| {:.1}, max {max}", *total as f64 / *n as f64))
        .collect();
    let c6 = if bound_violations == 0 && results.iter().all(Result::is_ok) {
        Ok(trend.join("; "))
    } else {
        Err(format!("{bound_violations} length-bound violations; {}", trend.join("; ")))
    };
    (c2, c6)
}

fn criterion_3() -> Outcome {
    let (ap, all) = monotone_sweep(6);
    let bad: Vec<String> = all
        .par_iter()
        .filter_map(|f| match oracle_upward_closure(f, &ap, 4) {
            Ok(OracleVerdict::Confirmed { .. }) => None,
            Ok(OracleVerdict::Discrepancy(w)) => Some(format!("{} on {}", f.display(&ap), ap.fmt_word(&w))),
            Err(e) => Some(format!("{}: {e}", f.display(&ap))),
        })
        .collect();
    if bad.is_empty() {
        Ok(format!("{} formulas, zero discrepancies", all.len()))
    } else {
        Err(format!("{} discrepancies, first: {}", bad.len(), bad[0]))
    }
}

/// All sets of nonempty words whose lengths sum to at most `budget`.
fn word_sets(ap: &Alphabet, budget: usize) -> Vec<Vec<FiniteWord>> {
    let words = ap.words_up_to(budget);
    let mut out = Vec::new();
    fn go(words: &[FiniteWord], start: usize, left: usize, cur: &mut Vec<FiniteWord>, out: &mut Vec<Vec<FiniteWord>>) {
        out.push(cur.clone());
        for i in start..words.len() {
            if words[i].len() <= left {
                cur.push(words[i].clone());
                go(words, i + 1, left - words[i].len(), cur, out);
                cur.pop();
            }
        }
    }
    go(&words, 0, budget, &mut Vec::new(), &mut out);
    out
}

fn dual_violation(a: &[FiniteWord], ap: &Alphabet, probes: &[FiniteWord], variant: DualVariant) -> Option<String> {
    let d = dual(a, ap, variant);
    for w in a {
        if let Some(v) = d.iter().find(|v| embeds_flat(w, v, true).is_some()) {
            return Some(format!("unsound: {} embeds into {:?}", ap.fmt_word(w), v.to_expr().map(|e| e.display(ap))));
        }
    }
    for u in probes {
        let avoids = a.iter().all(|w| !embeds_word(w, u, true));
        if avoids && !d.iter().any(|v| embeds_flat(u, v, true).is_some()) {
            return Some(format!("incomplete: {} is not covered", ap.fmt_word(u)));
        }
    }
    None
}

fn criterion_4() -> Outcome {
    let ap2 = ap("p,q");
    let sets = word_sets(&ap2, 5);
    let probes = ap2.words_up_to(4);
    let bad: Vec<String> = sets
        .par_iter()
        .filter_map(|a| {
            dual_violation(a, &ap2, &probes, DualVariant::Corrected).map(|m| {
                let shown: Vec<String> = a.iter().map(|w| ap2.fmt_word(w)).collect();
                format!("A={shown:?}: {m}")
            })
        })
        .collect();
    if let Some(first) = bad.first() {
        return Err(format!("{} violating sets, first: {first}", bad.len()));
    }
    let ap1 = ap("p");
    let a = vec![ap1.parse_word("{p}").unwrap()];
    let u = ap1.parse_word("{}.{p}").unwrap();
    let paper = dual(&a, &ap1, DualVariant::Paper);
    if paper.iter().any(|v| embeds_flat(&u, v, true).is_some()) {
        return Err("paper variant unexpectedly covers {}.{p} for A={{p}}".into());
    }
    Ok(format!("{} sets sound and complete; paper variant misses {{}}.{{p}} for A={{{{p}}}}", sets.len()))
}

fn delannoy(a: usize, b: usize) -> u64 {
    if a == 0 || b == 0 {
        return 1;
    }
    delannoy(a - 1, b) + delannoy(a, b - 1) + delannoy(a - 1, b - 1)
}

fn criterion_5() -> Outcome {
    let ap8 = ap("a0,a1,a2,a3,b0,b1,b2,b3");
    for a in 1..=3 {
        for b in 1..=3 {
            let u = FiniteWord::new((0..=a).map(Letter::singleton).collect());
            let v = FiniteWord::new((0..=b).map(|i| Letter::singleton(4 + i)).collect());
            let n = merged_interleavings(&u, &v).map_err(|e| e.to_string())?.len() as u64;
            if n != delannoy(a, b) {
                return Err(format!("|{} ⋈ {}| = {n}, expected {}", ap8.fmt_word(&u), ap8.fmt_word(&v), delannoy(a, b)));
            }
        }
    }
    if (delannoy(1, 1), delannoy(2, 2)) != (3, 13) {
        return Err("lattice-path count disagrees with D(1,1)=3, D(2,2)=13".into());
    }
    let ap2 = ap("p,q");
    let words = ap2.words_up_to(4);
    let over: Option<String> = words.par_iter().find_map_any(|u| {
        words.iter().find_map(|v| {
            let n = merged_interleavings(u, v).map(|s| s.len()).unwrap_or(usize::MAX);
            (n as u64 > 3u64.pow((u.len() + v.len()) as u32)).then(|| format!("{} ⋈ {}", ap2.fmt_word(u), ap2.fmt_word(v)))
        })
    });
    match over {
        Some(pair) => Err(format!("bound 3^(|u|+|v|) exceeded by {pair}")),
        None => Ok(format!("Delannoy counts match for tails up to 3; bound holds on {} pairs", words.len() * words.len())),
    }
}

fn criterion_7() -> Outcome {
    let maximal = maximal_positive_sets();
    let mut checked = 0;
    for bits in 0u16..(1 << 9) {
        let ops = FragmentSignature::from_bits(bits);
        if !ops.has_temporal() {
            continue;
        }
        checked += 1;
        let expected = maximal.iter().any(|m| ops.is_subset(*m));
        match classify_operator_set(ops) {
            Ok(c) if c.admits == expected => {}
            Ok(c) => return Err(format!("{ops}: classified {c}, subset test says admits={expected}")),
            Err(e) => return Err(format!("{ops}: {e}")),
        }
    }
    let anchor = |ops: &[Op], admits: bool| -> Result<(), String> {
        let c = classify_operator_set(FragmentSignature::of(ops)).map_err(|e| e.to_string())?;
        if c.admits != admits {
            return Err(format!("anchor {c}"));
        }
        Ok(())
    };
    anchor(&[Op::StrictEventually, Op::Next, Op::And, Op::True], true)?;
    anchor(&[Op::Eventually, Op::And], false)?;
    anchor(&[Op::Until], false)?;
    let c = classify_operator_set(FragmentSignature::of(&[Op::Until])).map_err(|e| e.to_string())?;
    if !matches!(c.witness, ClassWitness::ViolatedFragment(_)) {
        return Err("{U} has no violated fragment".into());
    }
    Ok(format!("{checked} operator sets agree"))
}

fn criterion_8() -> Outcome {
    let (ap, all) = monotone_sweep(4);
    let bad: Vec<String> = all
        .par_iter()
        .filter_map(|f| {
            let check = || -> Result<(), String> {
                let s = characterize_schematic(f, &ap, &MonotoneOptions::default()).map_err(|e| e.to_string())?;
                if !fits(f, &s).map_err(|e| e.to_string())?.fits() {
                    return Err("does not fit its schematic sample".into());
                }
                for ex in s.examples() {
                    if let Payload::Schema(r) = &ex.payload {
                        if r.star_height() > 1 {
                            return Err(format!("star height {} in {}", r.star_height(), r.display(&ap)));
                        }
                    }
                }
                let mut opts = UniqueOptions::new(4);
                opts.fit = FitOptions { schema: SchemaMode::Instances(6), ..FitOptions::default() };
                let v = verify_unique_with(f, &s, FragmentSignature::monotone(), &opts).map_err(|e| e.to_string())?;
                if !v.is_confirmed() {
                    return Err(format!("{:?}", v.status));
                }
                Ok(())
            };
            check().err().map(|e| format!("{}: {e}", f.display(&ap)))
        })
        .collect();
    match bad.first() {
        None => Ok(format!("{} formulas", all.len())),
        Some(first) => Err(format!("{} violations, first: {first}", bad.len())),
    }
}

fn random_word(rng: &mut ChaCha8Rng, ap: &Alphabet, max_len: usize) -> FiniteWord {
    let len = rng.gen_range(1..=max_len);
    FiniteWord::new((0..len).map(|_| Letter(rng.gen_range(0..=ap.full().0))).collect())
}

/// Samples inside the domain the family's impossibility argument covers.
fn family_samples(family: Family, count: usize) -> Vec<Sample> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed + family as u64);
    let ap = match family {
        Family::XOr | Family::XAndNot => ap("p,q"),
        Family::FxAndOr => ap("p,q"),
        Family::FAndOmega | Family::Until => ap("p,q,r"),
    };
    let target = family.target(&ap).unwrap();
    let mut out = Vec::new();
    while out.len() < count {
        let mut s = Sample::new(ap.clone());
        let n = rng.gen_range(1..=6);
        while s.len() < n {
            let w = random_word(&mut rng, &ap, 6);
            let b = ltl_teach::logic::eval_finite(&target, &w).unwrap();
            if family == Family::Until && !b {
                let blocked = until_bound_formula(w.len(), &ap).unwrap();
                if ltl_teach::logic::eval_finite(&blocked, &w).unwrap() {
                    continue;
                }
            }
            s.push(LabeledExample::word(w, Label::from_bool(b)));
            if family == Family::FAndOmega && rng.gen_bool(0.5) {
                let prefix = random_word(&mut rng, &ap, 3);
                let period = random_word(&mut rng, &ap, 2);
                let e = WordExpr::Concat(
                    Box::new(WordExpr::from_word(&prefix).unwrap()),
                    Box::new(WordExpr::omega(WordExpr::from_word(&period).unwrap())),
                );
                let b = CompiledFormula::new(&target, &ap).eval_expr(&e).unwrap();
                s.push(LabeledExample::expr(e, Label::from_bool(b)));
            }
        }
        out.push(s.sorted());
    }
    out
}

fn criterion_9() -> Outcome {
    let mut total = 0;
    for family in Family::ALL {
        for s in family_samples(family, 20) {
            let target = family.target(&s.ap).unwrap();
            let out = adversary(family, &s, &target).map_err(|e| format!("{family}: {e}\n{s}"))?;
            if !fits(&out.psi, &s).map_err(|e| e.to_string())?.fits() {
                return Err(format!("{family}: {} does not fit\n{s}", out.psi.display(&s.ap)));
            }
            let value = |f: &Formula| -> Result<bool, String> {
                let c = CompiledFormula::new(f, &s.ap);
                match &out.witness {
                    Payload::Word(w) => c.eval_word(w),
                    Payload::Expr(e) => c.eval_expr(e),
                    Payload::Schema(_) => return Err("schema witness".into()),
                }
                .map_err(|e| e.to_string())
            };
            if value(&target)? == value(&out.psi)? {
                return Err(format!("{family}: witness {} does not distinguish", out.witness.display(&s.ap)));
            }
            total += 1;
        }
    }
    let ap3 = ap("p,q,r");
    let phi = Family::Until.target(&ap3).unwrap();
    for n in 0..=4 {
        let mut text = "{p}.{q}.".repeat(n + 1);
        text.push_str("{r}");
        let w = ap3.parse_word(&text).unwrap();
        let psi = until_bound_formula(n, &ap3).unwrap();
        if !ltl_teach::logic::eval_finite(&phi, &w).unwrap() || ltl_teach::logic::eval_finite(&psi, &w).unwrap() {
            return Err(format!("until anchor fails at n={n}"));
        }
    }
    Ok(format!("{total} adversary runs verified; until anchor holds for n ≤ 4"))
}

fn criterion_10() -> Outcome {
    let ap = ap("p,q");
    let ops = FragmentSignature::of(&[Op::StrictEventually, Op::And, Op::Or]);
    let order = EnumerationOrder::new(ap.clone(), ops, 4);
    let all = enumerate_formulas(&order);
    let probes = ap.words_up_to(5);
    let failures: Vec<String> = all
        .par_iter()
        .enumerate()
        .filter_map(|(i, f)| {
            let run = || -> Result<(), String> {
                let taught = gold_teach(f, &order).map_err(|e| e.to_string())?;
                let mut rng = ChaCha8Rng::seed_from_u64(1000 + i as u64);
                for _ in 0..50 {
                    let mut s = taught.clone();
                    for _ in 0..rng.gen_range(0..=6) {
                        let w = &probes[rng.gen_range(0..probes.len())];
                        let b = ltl_teach::logic::eval_finite(f, w).unwrap();
                        s.push(LabeledExample::word(w.clone(), Label::from_bool(b)));
                    }
                    let g = gold_learn(&s, &order).map_err(|e| e.to_string())?;
                    match decide_equivalence(f, &g, &ap, &SearchBound::default()) {
                        Equivalence::Equivalent => {}
                        other => return Err(format!("learned {} ({other:?})", g.display(&ap))),
                    }
                }
                Ok(())
            };
            run().err().map(|e| format!("{}: {e}", f.display(&ap)))
        })
        .collect();
    match failures.first() {
        None => Ok(format!("{} formulas × 50 extensions", all.len())),
        Some(first) => Err(format!("{} failures, first: {first}", failures.len())),
    }
}

fn report(n: usize, started: Instant, outcome: &Outcome) -> bool {
    let secs = started.elapsed().as_secs_f64();
    match outcome {
        Ok(detail) => println!("criterion {n}: PASS ({secs:.1}s) {detail}"),
        Err(detail) => println!("criterion {n}: FAIL ({secs:.1}s) {detail}"),
    }
    outcome.is_ok()
}

fn main() {
    let mut ok = true;
    let t = Instant::now();
    ok &= report(1, t, &criterion_1());
    let t = Instant::now();
    let (c2, c6) = criterion_2_and_6();
    ok &= report(2, t, &c2);
    let t = Instant::now();
    ok &= report(3, t, &criterion_3());
    let t = Instant::now();
    ok &= report(4, t, &criterion_4());
    let t = Instant::now();
    ok &= report(5, t, &criterion_5());
    ok &= report(6, Instant::now(), &c6);
    let t = Instant::now();
    ok &= report(7, t, &criterion_7());
    let t = Instant::now();
    ok &= report(8, t, &criterion_8());
    let t = Instant::now();
    ok &= report(9, t, &criterion_9());
    let t = Instant::now();
    ok &= report(10, t, &criterion_10());
    if !ok {
        std::process::exit(1);
    }
}
