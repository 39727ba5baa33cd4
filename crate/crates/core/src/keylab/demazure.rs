//! Demazure crystals inside the type A crystal of semistandard tableaux.

use std::collections::BTreeSet;

use crate::perm::{Composition, Permutation};
use crate::poly::{weight_generating_function, SparsePolynomial};

/// A semistandard tableau in English notation: `rows[0]` is the longest row.
pub type Ssyt = Vec<Vec<usize>>;

type Position = (usize, usize);

/// Row reading word: rows bottom to top, each left to right, as positions
/// `(row, column)`.
fn reading_positions(t: &Ssyt) -> Vec<(usize, usize)> {
    t.iter()
        .enumerate()
        .rev()
        .flat_map(|(r, row)| (0..row.len()).map(move |c| (r, c)))
        .collect()
}

/// Unmatched letters for the `i`-bracketing: `i + 1` opens, `i` closes.
/// Returns (unmatched `i` positions, unmatched `i + 1` positions) in
/// reading order.
fn unmatched(t: &Ssyt, i: usize) -> (Vec<Position>, Vec<Position>) {
    let mut closers = Vec::new();
    let mut openers: Vec<(usize, usize)> = Vec::new();
    for (r, c) in reading_positions(t) {
        let x = t[r][c];
        if x == i + 1 {
            openers.push((r, c));
        } else if x == i && openers.pop().is_none() {
            closers.push((r, c));
        }
    }
    (closers, openers)
}

/// `f_i`: the rightmost unmatched `i` becomes `i + 1`.
pub fn tableau_lower(t: &Ssyt, i: usize) -> Option<Ssyt> {
    let (closers, _) = unmatched(t, i);
    let &(r, c) = closers.last()?;
    let mut out = t.clone();
    out[r][c] = i + 1;
    Some(out)
}

/// `e_i`: the leftmost unmatched `i + 1` becomes `i`.
pub fn tableau_raise(t: &Ssyt, i: usize) -> Option<Ssyt> {
    let (_, openers) = unmatched(t, i);
    let &(r, c) = openers.first()?;
    let mut out = t.clone();
    out[r][c] = i;
    Some(out)
}

pub fn tableau_weight(t: &Ssyt, n: usize) -> Composition {
    let mut parts = vec![0u32; n];
    for &x in t.iter().flatten() {
        parts[x - 1] += 1;
    }
    Composition(parts)
}

/// `u_λ`: row `r` filled with `r`.
pub fn highest_tableau(lambda: &Composition) -> Ssyt {
    lambda
        .parts()
        .iter()
        .enumerate()
        .filter(|(_, &len)| len > 0)
        .map(|(r, &len)| vec![r + 1; len as usize])
        .collect()
}

/// `𝔇_i`: closure of a set under `f_i`.
fn demazure_closure(set: &BTreeSet<Ssyt>, i: usize) -> BTreeSet<Ssyt> {
    let mut out = set.clone();
    for t in set {
        let mut cur = t.clone();
        while let Some(next) = tableau_lower(&cur, i) {
            out.insert(next.clone());
            cur = next;
        }
    }
    out
}

/// The Demazure crystal `B_π(λ)` in `n` letters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DemazureCrystal {
    pub n: usize,
    pub tableaux: BTreeSet<Ssyt>,
}

impl DemazureCrystal {
    pub fn weights(&self) -> Vec<Composition> {
        self.tableaux
            .iter()
            .map(|t| tableau_weight(t, self.n))
            .collect()
    }

    pub fn character(&self) -> SparsePolynomial {
        weight_generating_function(self.n, &self.weights())
    }

    /// Number of `f_i` arrows with both ends in the crystal.
    pub fn edge_count(&self) -> usize {
        self.tableaux
            .iter()
            .map(|t| {
                (1..self.n)
                    .filter(|&i| tableau_lower(t, i).is_some_and(|s| self.tableaux.contains(&s)))
                    .count()
            })
            .sum()
    }
}

/// `𝔇_{i_1} ⋯ 𝔇_{i_p} {u_λ}` for the lexicographically smallest reduced
/// word `i_1 ⋯ i_p` of `π`, applied right to left.
pub fn demazure_tableau_crystal(
    lambda: &Composition,
    pi: &Permutation,
    n: usize,
) -> DemazureCrystal {
    demazure_tableau_crystal_along(lambda, pi.reduced_expression().letters(), n)
}

/// As [`demazure_tableau_crystal`], along an explicit word.
pub fn demazure_tableau_crystal_along(
    lambda: &Composition,
    word: &[usize],
    n: usize,
) -> DemazureCrystal {
    let mut set = BTreeSet::from([highest_tableau(lambda)]);
    for &i in word.iter().rev() {
        set = demazure_closure(&set, i);
    }
    DemazureCrystal { n, tableaux: set }
}
