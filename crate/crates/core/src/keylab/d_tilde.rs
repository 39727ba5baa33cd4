//! The fixed-cross diagram `D̃` of a highest weight pipe dream and the
//! truncating permutation read off from it.

use std::collections::BTreeMap;

use crate::crystal::is_highest_weight;
use crate::error::{Error, Result};
use crate::keylab::lift::{lift, KeyShapedFilling};
use crate::keylab::tableau::insertion_tableau;
use crate::perm::{shortest_sorting_perm, Permutation};
use crate::pipedream::PipeDream;
use crate::rfc::Rfc;

/// Working grid: row -> column -> fixed?
type Grid = BTreeMap<usize, BTreeMap<usize, bool>>;

/// Runs the shift-and-drop procedure on a highest weight `D`.
///
/// 1. Cross `(i, j)` is shifted to `(i, j + i - 1)`.
/// 2. From the bottom row up, the leftmost cross of each row, at column
///    `c`, drops to `(c, c)` and is fixed.
/// 3. For `l = 2, 3, ...` and rows from the bottom up, the `l`-th cross of
///    the row, at column `c`, drops to the lowest row `t` reachable without
///    passing another cross in which it would be the `l`-th cross and
///    which has no fixed cross to its right; it is fixed there.
///
/// The result lists, for every row, the columns of its crosses.
pub fn algorithm_d_tilde(d: &PipeDream) -> Result<KeyShapedFilling> {
    if !is_highest_weight(d) {
        return Err(Error::NotHighestWeight);
    }
    let n = d.n();
    let original: Vec<Vec<usize>> = (1..=n)
        .map(|i| d.row(i).iter().map(|&j| j + i - 1).collect())
        .collect();

    let mut grid: Grid = BTreeMap::new();
    for (k, cols) in original.iter().enumerate() {
        for &c in cols {
            grid.entry(k + 1).or_default().insert(c, false);
        }
    }

    for i in (1..=n).rev() {
        let Some(&c) = original[i - 1].first() else {
            continue;
        };
        grid.get_mut(&i).unwrap().remove(&c);
        let slot = grid.entry(c).or_default();
        debug_assert!(!slot.contains_key(&c));
        slot.insert(c, true);
    }

    let rounds = original.iter().map(Vec::len).max().unwrap_or(0);
    for l in 2..=rounds {
        for i in (1..=n).rev() {
            let Some(&c) = original[i - 1].get(l - 1) else {
                continue;
            };
            let mut best = None;
            let mut t = i;
            loop {
                let row = grid.get(&t);
                if t > i && row.is_some_and(|r| r.contains_key(&c)) {
                    break;
                }
                let before = row.map_or(0, |r| r.range(..c).count());
                let fixed_right = row.is_some_and(|r| r.range(c + 1..).any(|(_, &f)| f));
                if before == l - 1 && !fixed_right {
                    best = Some(t);
                }
                if t >= n {
                    break;
                }
                t += 1;
            }
            let t = best.ok_or(Error::Unplaceable {
                row: i,
                col: c,
                round: l,
            })?;
            grid.get_mut(&i).unwrap().remove(&c);
            grid.entry(t).or_default().insert(c, true);
        }
    }

    let mut out = KeyShapedFilling::default();
    for (r, cols) in grid {
        if !cols.is_empty() {
            out.rows.insert(r, cols.into_keys().collect());
        }
    }
    Ok(out)
}

/// `π_D`: the shortest permutation carrying `wt(D)` to `wt(D̃)`.
pub fn truncating_permutation(d: &PipeDream) -> Result<Permutation> {
    let filling = algorithm_d_tilde(d)?;
    Ok(shortest_sorting_perm(&filling.weight(d.n())))
}

/// `lift(P(r))` for the reading word of `r`.
pub fn lifted_insertion(r: &Rfc) -> Result<KeyShapedFilling> {
    lift(&insertion_tableau(&r.reading_word()))
}

/// The shortest permutation sorting the weight of `lift(P(r))`.
pub fn pi_r(r: &Rfc) -> Result<Permutation> {
    Ok(shortest_sorting_perm(&lifted_insertion(r)?.weight(r.n())))
}
