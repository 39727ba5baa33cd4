//! Key-shaped fillings and the column lift of an insertion tableau.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::keylab::tableau::Tableau;
use crate::perm::Composition;

/// Left-justified rows indexed from 1; absent rows are empty.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct KeyShapedFilling {
    pub rows: BTreeMap<usize, Vec<usize>>,
}

impl KeyShapedFilling {
    pub fn row(&self, r: usize) -> &[usize] {
        self.rows.get(&r).map_or(&[], Vec::as_slice)
    }

    /// Row lengths `1..=n`.
    pub fn weight(&self, n: usize) -> Composition {
        Composition((1..=n).map(|r| self.row(r).len() as u32).collect())
    }

    pub fn num_rows(&self) -> usize {
        self.rows.keys().next_back().copied().unwrap_or(0)
    }

    fn push(&mut self, r: usize, x: usize) {
        self.rows.entry(r).or_default().push(x);
    }
}

impl fmt::Display for KeyShapedFilling {
    /// Top row first; `r: entries` per non-empty row.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lines: Vec<String> = self
            .rows
            .iter()
            .rev()
            .filter(|(_, v)| !v.is_empty())
            .map(|(r, v)| {
                let entries: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                format!("{r}: {}", entries.join(" "))
            })
            .collect();
        f.write_str(&lines.join("\n"))
    }
}

/// Column 1 entries `v` go to row `v`. Each later column is processed from
/// its top entry down; an entry `x` goes to the highest row that is below
/// the previous placement in this column, currently ends in the preceding
/// column, and whose last entry is smaller than `x`.
pub fn lift(p: &Tableau) -> Result<KeyShapedFilling> {
    let mut out = KeyShapedFilling::default();
    for v in p.column(1) {
        if !out.row(v).is_empty() {
            return Err(Error::MalformedTableau(format!(
                "first column repeats the entry {v}"
            )));
        }
        out.push(v, v);
    }
    for c in 2..=p.num_columns() {
        let mut ceiling = usize::MAX;
        for &x in p.column(c).iter().rev() {
            let target = out
                .rows
                .iter()
                .rev()
                .find(|&(&r, row)| r < ceiling && row.len() == c - 1 && row[c - 2] < x)
                .map(|(&r, _)| r)
                .ok_or_else(|| {
                    Error::MalformedTableau(format!(
                        "entry {x} of column {c} has no row to rise into"
                    ))
                })?;
            out.push(target, x);
            ceiling = target;
        }
    }
    Ok(out)
}
