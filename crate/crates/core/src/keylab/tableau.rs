//! Edelman-Greene insertion.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::perm::Word;

/// Rows of letters, `rows[0]` being the bottom row.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Tableau {
    pub rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Self {
        Tableau { rows }
    }

    pub fn is_empty(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }

    /// Row lengths, bottom row first.
    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(Vec::len).collect()
    }

    /// Entries of column `c` (1-indexed), bottom to top.
    pub fn column(&self, c: usize) -> Vec<usize> {
        self.rows
            .iter()
            .map_while(|row| row.get(c - 1).copied())
            .collect()
    }

    pub fn num_columns(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }
}

impl fmt::Display for Tableau {
    /// Top row first, one row per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lines: Vec<String> = self
            .rows
            .iter()
            .rev()
            .map(|r| {
                r.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        f.write_str(&lines.join("\n"))
    }
}

/// Inserts `x` into `p`, working upward from the bottom row:
/// if nothing in the row exceeds `x`, append it and stop; otherwise let `y`
/// be the smallest entry above `x`. When `y = x + 1` and `x` is already in
/// the row, the row is kept and `y` moves on; otherwise `y` is replaced by
/// `x` and bumped. A bumped letter with no row left starts a new one.
pub fn eg_insert(p: &Tableau, x: usize) -> Tableau {
    let mut rows = p.rows.clone();
    let mut x = x;
    for row in rows.iter_mut() {
        let Some(k) = row.iter().position(|&y| y > x) else {
            row.push(x);
            return Tableau { rows };
        };
        let y = row[k];
        if !(y == x + 1 && row.contains(&x)) {
            row[k] = x;
        }
        x = y;
    }
    rows.push(vec![x]);
    Tableau { rows }
}

/// `P(a)`: insert the letters of `a` left to right into the empty tableau.
pub fn insertion_tableau(word: &Word) -> Tableau {
    word.letters()
        .iter()
        .fold(Tableau::default(), |p, &x| eg_insert(&p, x))
}
