//! Brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use chute_core::{push_action, Composition, Permutation, PipeDream, Word};

/// Every cross subset of the staircase, grouped by the permutation it
/// traces, keeping only reduced diagrams.
pub fn pipe_dreams_by_subsets(n: usize) -> BTreeMap<Permutation, BTreeSet<PipeDream>> {
    let cells: Vec<(usize, usize)> = (1..n)
        .flat_map(|i| (1..=n - i).map(move |j| (i, j)))
        .collect();
    let mut out: BTreeMap<Permutation, BTreeSet<PipeDream>> = BTreeMap::new();
    for mask in 0u64..(1 << cells.len()) {
        let chosen = cells
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &c)| c);
        let d = PipeDream::new(n, chosen).unwrap();
        if d.is_reduced() {
            out.entry(d.trace_pipes()).or_default().insert(d);
        }
    }
    out
}

/// All words of length `len(w)` over `1..n` whose product is `w`.
pub fn reduced_words_by_search(w: &Permutation) -> BTreeSet<Word> {
    let n = w.n();
    let len = w.length();
    let mut out = BTreeSet::new();
    let mut word = vec![1; len];
    if n < 2 && len > 0 {
        return out;
    }
    loop {
        let candidate = Word(word.clone());
        if Permutation::from_word(n, &candidate).unwrap() == *w {
            out.insert(candidate);
        }
        let mut k = 0;
        loop {
            if k == len {
                return out;
            }
            if word[k] < n - 1 {
                word[k] += 1;
                break;
            }
            word[k] = 1;
            k += 1;
        }
    }
}

/// Minimal-length `σ` with `σ(sort(a)) = a`, found by trying all of `S_n`.
pub fn shortest_sorter_by_search(a: &Composition) -> Permutation {
    let lambda = a.sorted_desc();
    Permutation::all(a.n())
        .filter(|s| push_action(s, &lambda) == *a)
        .min_by_key(|s| (s.length(), s.clone()))
        .unwrap()
}

/// Every composition with `n` parts, each at most `max`.
pub fn compositions(n: usize, max: u32) -> Vec<Composition> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v: Vec<u32>| {
                (0..=max).map(move |x| {
                    let mut v = v.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    out.into_iter().map(Composition).collect()
}

/// `S_[21543]` as a hand-written list of exponent vectors.
pub fn schubert_21543_terms() -> Vec<([u32; 5], i64)> {
    vec![
        ([2, 2, 0, 0, 0], 1),
        ([2, 1, 1, 0, 0], 2),
        ([2, 0, 2, 0, 0], 1),
        ([1, 1, 2, 0, 0], 1),
        ([3, 1, 0, 0, 0], 1),
        ([3, 0, 1, 0, 0], 1),
        ([3, 0, 0, 1, 0], 1),
        ([2, 1, 0, 1, 0], 1),
        ([2, 0, 1, 1, 0], 1),
        ([1, 2, 1, 0, 0], 1),
        ([1, 2, 0, 1, 0], 1),
        ([1, 1, 1, 1, 0], 1),
        ([1, 0, 2, 1, 0], 1),
    ]
}
