//! Pipe dreams on the staircase `i + j <= n`: pipe tracing, weights,
//! enumeration of the reduced pipe dreams `RP(w)`, and unrestricted
//! (non-crystal) chute moves.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{Composition, Permutation};
use crate::poly::{weight_generating_function, SparsePolynomial};
use crate::rfc::{compatible_sequences, phi1_inverse};

/// A box `(row, column)`, 1-indexed from the top-left corner.
pub type Cell = (usize, usize);

/// A pipe dream of size `n`, determined by its set of crosses.
///
/// Ordering and serialization use the canonical cross order: rows top to
/// bottom, right to left within a row.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PipeDream {
    n: usize,
    crosses: BTreeSet<Cell>,
}

impl PipeDream {
    pub fn new(n: usize, crosses: impl IntoIterator<Item = Cell>) -> Result<Self> {
        let crosses: BTreeSet<Cell> = crosses.into_iter().collect();
        for &(row, col) in &crosses {
            if row == 0 || col == 0 || row + col > n {
                return Err(Error::CrossOutOfBounds { row, col, n });
            }
        }
        Ok(PipeDream { n, crosses })
    }

    pub fn empty(n: usize) -> Self {
        PipeDream {
            n,
            crosses: BTreeSet::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn contains(&self, row: usize, col: usize) -> bool {
        self.crosses.contains(&(row, col))
    }

    pub fn num_crosses(&self) -> usize {
        self.crosses.len()
    }

    /// Crosses in row-major order (rows top to bottom, columns left to right).
    pub fn crosses(&self) -> impl Iterator<Item = Cell> + '_ {
        self.crosses.iter().copied()
    }

    /// Crosses in canonical order: rows top to bottom, right to left in a row.
    pub fn canonical_crosses(&self) -> Vec<Cell> {
        let mut cells: Vec<Cell> = self.crosses.iter().copied().collect();
        cells.sort_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
        cells
    }

    /// Columns of the crosses in `row`, left to right.
    pub fn row(&self, row: usize) -> Vec<usize> {
        self.crosses
            .range((row, 0)..(row + 1, 0))
            .map(|&(_, c)| c)
            .collect()
    }

    /// Number of crosses in each row.
    pub fn weight(&self) -> Composition {
        let mut parts = vec![0u32; self.n];
        for &(row, _) in &self.crosses {
            parts[row - 1] += 1;
        }
        Composition(parts)
    }

    /// The copy with `from` removed and `to` inserted.
    pub(crate) fn moved(&self, from: Cell, to: Cell) -> PipeDream {
        debug_assert!(self.crosses.contains(&from) && !self.crosses.contains(&to));
        debug_assert!(to.0 + to.1 <= self.n);
        let mut crosses = self.crosses.clone();
        crosses.remove(&from);
        crosses.insert(to);
        PipeDream { n: self.n, crosses }
    }

    /// Follows every pipe from the left edge to the top edge: the pipe
    /// entering row `i` leaves through column `w_i`.
    pub fn trace_pipes(&self) -> Permutation {
        #[derive(Clone, Copy, PartialEq)]
        enum Heading {
            East,
            North,
        }
        let window = (1..=self.n)
            .map(|start| {
                let (mut row, mut col, mut heading) = (start, 1, Heading::East);
                loop {
                    if !self.contains(row, col) {
                        heading = match heading {
                            Heading::East => Heading::North,
                            Heading::North => Heading::East,
                        };
                    }
                    match heading {
                        Heading::North if row == 1 => break col,
                        Heading::North => row -= 1,
                        Heading::East => col += 1,
                    }
                }
            })
            .collect();
        Permutation::new(window).expect("a pipe network always traces a bijection")
    }

    /// No two pipes cross twice, i.e. the cross count equals the length of
    /// the traced permutation.
    pub fn is_reduced(&self) -> bool {
        self.num_crosses() == self.trace_pipes().length()
    }

    /// All unrestricted chute moves: a cross `(i, j)` with an elbow below it
    /// jumps to `(i+1, j-m)` over a `2 x (m-1)` rectangle of crosses whose
    /// left border column `j-m` holds two elbows.
    pub fn general_chute_moves(&self) -> BTreeSet<PipeDream> {
        let mut out = BTreeSet::new();
        for &(i, j) in &self.crosses {
            if self.contains(i + 1, j) {
                continue;
            }
            for k in 1..j {
                match (self.contains(i, j - k), self.contains(i + 1, j - k)) {
                    (true, true) => continue,
                    (false, false) => {
                        out.insert(self.moved((i, j), (i + 1, j - k)));
                    }
                    _ => {}
                }
                break;
            }
        }
        out
    }

    /// Rows `1..n-1` of the staircase, `+` for a cross and `.` for an elbow.
    pub fn to_ascii(&self) -> String {
        (1..self.n)
            .map(|i| {
                (1..=self.n - i)
                    .map(|j| if self.contains(i, j) { '+' } else { '.' })
                    .collect::<String>()
            })
            .collect::<Vec<_>>()
            .join("\n")
    }

    /// Canonical cross list, e.g. `[[1,4],[1,1],[2,2],[3,2]]`.
    pub fn cross_list_string(&self) -> String {
        let inner: Vec<String> = self
            .canonical_crosses()
            .iter()
            .map(|(r, c)| format!("[{r},{c}]"))
            .collect();
        format!("[{}]", inner.join(","))
    }

    fn canonical_key(&self) -> (usize, Vec<Cell>) {
        (self.n, self.canonical_crosses())
    }
}

impl Ord for PipeDream {
    fn cmp(&self, other: &Self) -> Ordering {
        self.canonical_key().cmp(&other.canonical_key())
    }
}

impl PartialOrd for PipeDream {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PipeDream {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_ascii())
    }
}

#[derive(Serialize, Deserialize)]
struct PipeDreamJson {
    n: usize,
    crosses: Vec<[usize; 2]>,
}

impl Serialize for PipeDream {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PipeDreamJson {
            n: self.n,
            crosses: self
                .canonical_crosses()
                .iter()
                .map(|&(r, c)| [r, c])
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for PipeDream {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = PipeDreamJson::deserialize(d)?;
        PipeDream::new(raw.n, raw.crosses.iter().map(|&[r, c]| (r, c)))
            .map_err(serde::de::Error::custom)
    }
}

/// `RP(w)`: every reduced pipe dream for `w`, in canonical order.
///
/// Walks the staircase in canonical cross order and builds the reduced word
/// `a_k = i + j - 1` together with its compatible sequence `β_k = i`, so each
/// leaf is the rc-graph of a pair `(a, β)`. A cross is admissible only if its
/// letter is a left descent of what remains of `w`, and a row may only be
/// closed once the remainder fixes every index up to that row.
pub fn enumerate_rp(w: &Permutation) -> Vec<PipeDream> {
    let n = w.n();
    let mut search = RowSearch {
        n,
        remaining_inverse: w.inverse().window().to_vec(),
        remaining_length: w.length(),
        crosses: Vec::new(),
        out: Vec::new(),
    };
    if n <= 1 {
        return vec![PipeDream::empty(n)];
    }
    search.visit(1, n - 1);
    let mut out = search.out;
    out.sort();
    out
}

struct RowSearch {
    n: usize,
    /// Inverse window (0-indexed storage of 1-based values) of the part of
    /// `w` not yet produced by crosses.
    remaining_inverse: Vec<usize>,
    remaining_length: usize,
    crosses: Vec<Cell>,
    out: Vec<PipeDream>,
}

impl RowSearch {
    fn visit(&mut self, row: usize, col: usize) {
        if self.remaining_length == 0 {
            self.out.push(PipeDream {
                n: self.n,
                crosses: self.crosses.iter().copied().collect(),
            });
            return;
        }
        if row >= self.n {
            return;
        }
        if col == 0 {
            // Later rows only produce letters > row, which fix `row`.
            if self.remaining_inverse[row - 1] == row {
                self.visit(row + 1, self.n - row - 1);
            }
            return;
        }
        self.visit(row, col - 1);
        let a = row + col - 1;
        if self.remaining_inverse[a - 1] > self.remaining_inverse[a] {
            self.remaining_inverse.swap(a - 1, a);
            self.remaining_length -= 1;
            self.crosses.push((row, col));
            self.visit(row, col - 1);
            self.crosses.pop();
            self.remaining_length += 1;
            self.remaining_inverse.swap(a - 1, a);
        }
    }
}

/// `RP(w)` assembled literally: the rc-graph of every compatible sequence of
/// every reduced word. Exponential in the number of reduced words.
pub fn enumerate_rp_by_words(w: &Permutation) -> Vec<PipeDream> {
    let mut out = BTreeSet::new();
    for word in w.reduced_words() {
        for beta in compatible_sequences(&word) {
            out.insert(
                phi1_inverse(w.n(), &word, &beta)
                    .expect("compatible pairs give reduced pipe dreams"),
            );
        }
    }
    out.into_iter().collect()
}

/// `𝔖_w = Σ_{D ∈ RP(w)} x^{wt(D)}`.
pub fn schubert_pipedreams(w: &Permutation) -> SparsePolynomial {
    let weights: Vec<Composition> = enumerate_rp(w).iter().map(PipeDream::weight).collect();
    weight_generating_function(w.n(), &weights)
}
