use std::collections::{BTreeMap, BTreeSet};

use monster_strata::charts::{self, Chart, CoordinateName};
use monster_strata::codeword::{self, CodeWord, MultiplicityVector, SubscriptSet};
use monster_strata::counting;
use monster_strata::rvt::{self, RvtSymbol};
use monster_strata::strata;
use monster_strata::trees;
use num_bigint::BigUint;
use proptest::prelude::*;

fn words(k: usize, m: u32) -> Vec<CodeWord> {
    codeword::enumerate(k, m).unwrap().collect()
}

/// Validity via the block characterization: the positions holding `j`
/// form one run starting exactly at `j`, and no position holds `m` or more
/// subscripts.
fn block_characterization(symbols: &[SubscriptSet], m: u32) -> bool {
    let k = symbols.len();
    if symbols.iter().any(|s| s.len() >= m as usize) {
        return false;
    }
    let mut values: BTreeSet<u32> = BTreeSet::new();
    for s in symbols {
        values.extend(s.iter());
    }
    values.into_iter().all(|j| {
        let hits: Vec<usize> = (1..=k).filter(|&p| symbols[p - 1].contains(j)).collect();
        hits[0] == j as usize && hits.windows(2).all(|w| w[1] == w[0] + 1)
    })
}

fn all_subsets(universe: &[u32]) -> Vec<SubscriptSet> {
    (0..1u32 << universe.len())
        .map(|mask| {
            SubscriptSet::new(universe.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v))
                .unwrap()
        })
        .collect()
}

#[test]
fn validate_matches_block_characterization() {
    for k in 1..=4usize {
        let universe: Vec<u32> = (2..=k as u32 + 1).collect();
        let subsets = all_subsets(&universe);
        let total = subsets.len().pow(k as u32);
        for m in 2..=4 {
            let mut accepted = BTreeSet::new();
            for code in 0..total {
                let mut rest = code;
                let symbols: Vec<SubscriptSet> = (0..k)
                    .map(|_| {
                        let s = subsets[rest % subsets.len()].clone();
                        rest /= subsets.len();
                        s
                    })
                    .collect();
                let valid = codeword::validate(symbols.clone(), m).is_ok();
                assert_eq!(valid, block_characterization(&symbols, m), "{symbols:?} m={m}");
                if valid {
                    accepted.insert(codeword::format_symbols(&symbols));
                }
            }
            let streamed: BTreeSet<String> = words(k, m).iter().map(codeword::format).collect();
            assert_eq!(accepted, streamed, "k={k} m={m}");
        }
    }
}

#[test]
fn multiplicity_round_trip_is_exhaustive() {
    for k in 1..=7 {
        for m in 2..=5 {
            for w in words(k, m) {
                let v = codeword::multiplicities(&w);
                assert_eq!(codeword::from_multiplicities(&v, m).unwrap(), w);
                for (j, n) in v.iter() {
                    assert!(n <= k + 1 - j);
                    for p in 1..j {
                        assert!(!w.symbol(p).contains(j as u32), "{w}: {j} before position {j}");
                    }
                }
            }
        }
    }
}

#[test]
fn enumeration_is_sorted_unique_and_counted() {
    for k in 1..=7 {
        for m in 2..=5 {
            let all = words(k, m);
            for pair in all.windows(2) {
                assert!(pair[0].symbols() < pair[1].symbols(), "{} !< {}", pair[0], pair[1]);
            }
            assert_eq!(BigUint::from(all.len()), counting::count(k, m).unwrap());
        }
    }
}

#[test]
fn word_sets_grow_with_dimension() {
    for k in 1..=6 {
        for m in 2..=5 {
            let small: BTreeSet<Vec<SubscriptSet>> = words(k, m).into_iter().map(|w| w.symbols().to_vec()).collect();
            let large: BTreeSet<Vec<SubscriptSet>> =
                words(k, m + 1).into_iter().map(|w| w.symbols().to_vec()).collect();
            assert!(small.is_subset(&large));
            let (a, b) = (counting::count(k, m).unwrap(), counting::count(k, m + 1).unwrap());
            assert!(a <= b);
            if m as usize >= k {
                assert_eq!(a, b);
            }
        }
    }
}

#[test]
fn codimension_bounds_and_locus_weight() {
    for k in 1..=6 {
        for m in 2..=4 {
            for w in words(k, m) {
                let c = strata::codimension(&w);
                assert_eq!(c, strata::locus(&w).codimension());
                assert_eq!(c, w.multiplicities().total());
                assert!(c <= (m as usize - 1) * k);
                assert_eq!(c == 0, w.is_all_r());
                assert_eq!(strata::stratum_dimension(&w) + c, strata::ambient_dimension(k, m));
            }
        }
    }
}

#[test]
fn all_r_is_unique_maximum() {
    for k in 1..=5 {
        for m in 2..=4 {
            let p = strata::hasse(k, m).unwrap();
            let maxima = p.maxima();
            assert_eq!(maxima.len(), 1);
            assert!(p.nodes()[maxima[0]].is_all_r());
        }
    }
}

fn all_charts(k: usize, m: u32) -> Vec<Chart> {
    (0..(m as usize).pow(k as u32))
        .map(|mut code| {
            let levels = (0..k)
                .map(|_| {
                    let v = (code % m as usize) as u32 + 1;
                    code /= m as usize;
                    v
                })
                .collect();
            Chart::new(levels, m).unwrap()
        })
        .collect()
}

#[test]
fn equations_in_every_chart() {
    for k in 1..=4 {
        for m in 2..=3 {
            let ws = words(k, m);
            for chart in all_charts(k, m) {
                let distinct = charts::coordinate_table(&chart).distinct_coordinates();
                assert_eq!(distinct.len(), m as usize + k * (m as usize - 1));
                for w in &ws {
                    let Ok(eqs) = charts::equations(w, &chart) else {
                        assert!(!charts::meets(w, &chart).unwrap());
                        continue;
                    };
                    assert_eq!(eqs.len(), strata::codimension(w));
                    assert!(eqs.iter().all(CoordinateName::is_shortest));
                    assert!(eqs.iter().all(|n| distinct.contains(n)));
                    let unique: BTreeSet<_> = eqs.iter().collect();
                    assert_eq!(unique.len(), eqs.len());
                    for v in &ws {
                        if strata::contains(w, v).unwrap() {
                            if let Ok(more) = charts::equations(v, &chart) {
                                assert!(eqs.iter().all(|e| more.contains(e)), "{w} ⊇ {v} in {chart}");
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn every_locus_meets_some_chart() {
    for k in 1..=4 {
        let charts_k = all_charts(k, 3);
        for w in words(k, 3) {
            let meeting = charts_k.iter().filter(|c| charts::meets(&w, c).unwrap()).count();
            assert!(meeting > 0, "{w}");
            assert!(charts::meets(&w, &charts::witness_chart(&w)).unwrap());
        }
    }
}

#[test]
fn witness_property_for_wider_bases() {
    for m in 2..=5 {
        for w in words(5, m) {
            let chart = charts::witness_chart(&w);
            assert_eq!(chart.level(1), 1);
            assert_eq!(charts::equations(&w, &chart).unwrap().len(), strata::codimension(&w));
        }
    }
}

#[test]
fn rvt_letter_shapes() {
    for k in 1..=6 {
        for w in words(k, 3) {
            let r = rvt::subscript_to_rvt(&w).unwrap();
            for (set, tag) in w.symbols().iter().zip(r.symbols()) {
                let expected: &[RvtSymbol] = match set.len() {
                    0 => &[RvtSymbol::R],
                    1 => &[RvtSymbol::V, RvtSymbol::T1, RvtSymbol::T2],
                    _ => &[RvtSymbol::L1, RvtSymbol::L2, RvtSymbol::L3],
                };
                assert!(expected.contains(tag), "{w} / {r}");
            }
        }
    }
}

#[test]
fn trees_match_words_when_rule_three_is_slack() {
    for k in 1..=6 {
        let m = (k as u32).max(2);
        let from_words: BTreeSet<_> = words(k, m).iter().map(trees::word_to_tree).collect();
        let all: BTreeSet<_> = trees::enumerate_trees(k).unwrap().collect();
        assert_eq!(from_words, all);

        let mut by_degree: BTreeMap<usize, usize> = BTreeMap::new();
        for t in &all {
            *by_degree.entry(t.root_degree()).or_default() += 1;
        }
        let table = counting::count_table(k, m).unwrap();
        for r in 0..k {
            let n = by_degree.get(&(r + 1)).copied().unwrap_or(0);
            assert_eq!(BigUint::from(n), table.get(r));
            assert_eq!(BigUint::from(n), counting::stirling_first(k, r + 1));
        }
    }
}

#[test]
fn trees_for_small_dimension_are_partial() {
    for k in 2..=6 {
        for m in 2..(k as u32) {
            let survivors = trees::enumerate_trees(k)
                .unwrap()
                .filter_map(|t| trees::tree_to_word(&t, m).ok())
                .count();
            assert_eq!(BigUint::from(survivors), counting::count(k, m).unwrap());
            for w in words(k, m) {
                assert_eq!(trees::tree_to_word(&trees::word_to_tree(&w), m).unwrap(), w);
            }
        }
    }
}

fn word_strategy() -> impl Strategy<Value = CodeWord> {
    (1usize..=7, 2u32..=5).prop_flat_map(|(k, m)| {
        let count = codeword::enumerate(k, m).unwrap().count();
        (0..count).prop_map(move |idx| codeword::enumerate(k, m).unwrap().nth(idx).unwrap())
    })
}

fn triple_strategy() -> impl Strategy<Value = (CodeWord, CodeWord, CodeWord)> {
    (1usize..=6, 2u32..=4).prop_flat_map(|(k, m)| {
        let all = words(k, m);
        let n = all.len();
        (0..n, 0..n, 0..n).prop_map(move |(a, b, c)| (all[a].clone(), all[b].clone(), all[c].clone()))
    })
}

proptest! {
    #[test]
    fn text_and_json_round_trip(w in word_strategy()) {
        let text = codeword::format(&w);
        prop_assert_eq!(codeword::parse(&text, w.dimension()).unwrap(), w.clone());
        let dotted = text.replace(' ', ".");
        prop_assert_eq!(codeword::parse(&dotted, w.dimension()).unwrap(), w.clone());
        let json = serde_json::to_string(&w).unwrap();
        prop_assert_eq!(serde_json::from_str::<CodeWord>(&json).unwrap(), w);
    }

    #[test]
    fn parser_never_panics(text in "[RV{}0-9, .]{0,24}") {
        let _ = codeword::parse(&text, 3);
    }

    #[test]
    fn containment_is_a_partial_order((a, b, c) in triple_strategy()) {
        prop_assert!(strata::contains(&a, &a).unwrap());
        if strata::contains(&a, &b).unwrap() && strata::contains(&b, &a).unwrap() {
            prop_assert_eq!(&a, &b);
        }
        if strata::contains(&a, &b).unwrap() && strata::contains(&b, &c).unwrap() {
            prop_assert!(strata::contains(&a, &c).unwrap());
        }
    }

    #[test]
    fn excision_members_are_covers(w in word_strategy()) {
        let v = w.multiplicities();
        for smaller in strata::excision_set(&w) {
            prop_assert!(strata::contains(&w, &smaller).unwrap());
            prop_assert_eq!(strata::codimension(&smaller), strata::codimension(&w) + 1);
        }
        let possible = (2..=w.len())
            .filter(|&j| codeword::from_multiplicities(&v.incremented(j), w.dimension()).is_ok())
            .count();
        prop_assert_eq!(strata::excision_set(&w).len(), possible);
    }

    #[test]
    fn shortest_name_is_canonical(q in 1u32..=4, prefix in proptest::collection::vec(1u32..=4, 0..8)) {
        let name = CoordinateName::new(q, prefix);
        let short = charts::shortest_name(&name);
        prop_assert!(short.is_shortest());
        prop_assert_eq!(charts::shortest_name(&short), short.clone());
        let mut longer = name.clone();
        longer.prefix.push(q);
        prop_assert_eq!(charts::shortest_name(&longer), short.clone());
        let parsed: CoordinateName = short.to_string().parse().unwrap();
        prop_assert_eq!(parsed, short);
    }

    #[test]
    fn multiplicity_vectors_rebuild_or_explain(k in 1usize..=8, m in 2u32..=4, raw in proptest::collection::vec(0usize..=8, 7)) {
        let counts: Vec<usize> = raw.into_iter().take(k.saturating_sub(1)).collect();
        let v = MultiplicityVector::from_counts(k, &counts).unwrap();
        match codeword::from_multiplicities(&v, m) {
            Ok(w) => prop_assert_eq!(w.multiplicities(), v),
            Err(e) => {
                let explained = matches!(
                    e,
                    monster_strata::Error::MultiplicityOutOfRange { .. } | monster_strata::Error::Occupancy { .. }
                );
                prop_assert!(explained, "unexpected error {:?}", e);
            }
        }
    }
}
