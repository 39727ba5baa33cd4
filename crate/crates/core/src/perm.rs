//! Permutations of `{1..n}` in one-line notation, words in the simple
//! transpositions, and weak compositions.
//!
//! Composition of permutations is right-to-left as functions:
//! `(p.compose(q))(i) = p(q(i))`. A word `a_1 a_2 ... a_p` names the product
//! `s_{a_1} s_{a_2} ... s_{a_p}` under that composition, so multiplying by
//! `s_a` on the left swaps the *values* `a` and `a + 1` in the window while
//! multiplying on the right swaps the *positions* `a` and `a + 1`.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An element of the symmetric group `S_n`, stored as its window `[w_1 ... w_n]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    window: Vec<usize>,
}

impl Permutation {
    pub fn new(window: Vec<usize>) -> Result<Self> {
        let n = window.len();
        let mut seen = vec![false; n + 1];
        for &v in &window {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(window));
            }
            seen[v] = true;
        }
        Ok(Permutation { window })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            window: (1..=n).collect(),
        }
    }

    /// The longest element `w_0 = [n n-1 ... 1]`.
    pub fn longest(n: usize) -> Self {
        Permutation {
            window: (1..=n).rev().collect(),
        }
    }

    /// The simple transposition `s_i = (i, i+1)` in `S_n`.
    pub fn simple(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::IndexOutOfRange { index: i, n });
        }
        let mut window: Vec<usize> = (1..=n).collect();
        window.swap(i - 1, i);
        Ok(Permutation { window })
    }

    /// Every permutation of `S_n`, in lexicographic order of windows.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        (1..=n).permutations(n).map(|window| Permutation { window })
    }

    /// The product `s_{a_1} ... s_{a_p}` in `S_n`.
    pub fn from_word(n: usize, word: &Word) -> Result<Self> {
        let mut perm = Permutation::identity(n);
        for &a in word.letters().iter().rev() {
            perm = perm.left_multiply_simple(a)?;
        }
        Ok(perm)
    }

    pub fn n(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[usize] {
        &self.window
    }

    /// `w(i)` for `1 <= i <= n`.
    pub fn apply(&self, i: usize) -> usize {
        self.window[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.window.iter().enumerate().all(|(k, &v)| v == k + 1)
    }

    /// Number of inversions `#{i < j : w_i > w_j}`.
    pub fn length(&self) -> usize {
        let w = &self.window;
        (0..w.len())
            .map(|i| w[i + 1..].iter().filter(|&&v| v < w[i]).count())
            .sum()
    }

    /// Positions `i` with `w_i > w_{i+1}` (right descents).
    pub fn descents(&self) -> Vec<usize> {
        (1..self.n())
            .filter(|&i| self.window[i - 1] > self.window[i])
            .collect()
    }

    /// Indices `a` with `l(s_a w) < l(w)`, i.e. the value `a + 1` sits left of `a`.
    pub fn left_descents(&self) -> Vec<usize> {
        let inv = self.inverse();
        (1..self.n())
            .filter(|&a| inv.window[a - 1] > inv.window[a])
            .collect()
    }

    pub fn inverse(&self) -> Self {
        let mut window = vec![0; self.n()];
        for (k, &v) in self.window.iter().enumerate() {
            window[v - 1] = k + 1;
        }
        Permutation { window }
    }

    /// `self ∘ other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch {
                expected: self.n(),
                found: other.n(),
            });
        }
        Ok(Permutation {
            window: other.window.iter().map(|&v| self.window[v - 1]).collect(),
        })
    }

    /// `s_a ∘ self`: swap the values `a` and `a + 1`.
    pub fn left_multiply_simple(&self, a: usize) -> Result<Self> {
        let n = self.n();
        if a == 0 || a >= n {
            return Err(Error::IndexOutOfRange { index: a, n });
        }
        let window = self
            .window
            .iter()
            .map(|&v| match v {
                v if v == a => a + 1,
                v if v == a + 1 => a,
                v => v,
            })
            .collect();
        Ok(Permutation { window })
    }

    /// `self ∘ s_i`: swap the positions `i` and `i + 1`.
    pub fn right_multiply_simple(&self, i: usize) -> Result<Self> {
        let n = self.n();
        if i == 0 || i >= n {
            return Err(Error::IndexOutOfRange { index: i, n });
        }
        let mut window = self.window.clone();
        window.swap(i - 1, i);
        Ok(Permutation { window })
    }

    /// The set `R(w)` of all reduced words.
    ///
    /// Peels a left descent `a` off the front, recursing on `s_a w`; results for
    /// intermediate permutations are memoized.
    pub fn reduced_words(&self) -> BTreeSet<Word> {
        let mut memo: HashMap<Permutation, Vec<Vec<usize>>> = HashMap::new();
        reduced_words_memo(self, &mut memo)
            .iter()
            .map(|letters| Word(letters.clone()))
            .collect()
    }

    /// The lexicographically smallest reduced word.
    pub fn reduced_expression(&self) -> Word {
        let mut letters = Vec::with_capacity(self.length());
        let mut rest = self.clone();
        while let Some(&a) = rest.left_descents().first() {
            letters.push(a);
            rest = rest
                .left_multiply_simple(a)
                .expect("left descent is in range");
        }
        Word(letters)
    }

    /// Whether `word` is a reduced word for this permutation.
    pub fn has_reduced_word(&self, word: &Word) -> bool {
        word.len() == self.length()
            && Permutation::from_word(self.n(), word).is_ok_and(|p| &p == self)
    }

    /// `[21543]`-style rendering; falls back to comma separation beyond `n = 9`.
    pub fn one_line(&self) -> String {
        if self.n() <= 9 {
            format!("[{}]", self.window.iter().join(""))
        } else {
            format!("[{}]", self.window.iter().join(","))
        }
    }
}

fn reduced_words_memo<'m>(
    w: &Permutation,
    memo: &'m mut HashMap<Permutation, Vec<Vec<usize>>>,
) -> &'m Vec<Vec<usize>> {
    if !memo.contains_key(w) {
        let words = if w.is_identity() {
            vec![Vec::new()]
        } else {
            let mut words = Vec::new();
            for a in w.left_descents() {
                let rest = w.left_multiply_simple(a).expect("left descent is in range");
                for tail in reduced_words_memo(&rest, memo) {
                    let mut word = Vec::with_capacity(tail.len() + 1);
                    word.push(a);
                    word.extend_from_slice(tail);
                    words.push(word);
                }
            }
            words
        };
        memo.insert(w.clone(), words);
    }
    &memo[w]
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.window.iter().join(","))
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts `2,1,5,4,3`, optionally bracketed, or the digit string `21543`
    /// when `n <= 9`.
    fn from_str(s: &str) -> Result<Self> {
        let body = s
            .trim()
            .trim_start_matches('[')
            .trim_end_matches(']')
            .trim();
        let window: Vec<usize> = if body.contains(',') {
            body.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|e| Error::Parse(format!("bad entry {t:?}: {e}")))
                })
                .collect::<Result<_>>()?
        } else if !body.is_empty() && body.chars().all(|c| c.is_ascii_digit()) {
            if body.len() > 9 {
                return Err(Error::Parse(format!(
                    "digit-string window {body:?} is ambiguous beyond n = 9; use commas"
                )));
            }
            body.chars()
                .map(|c| c.to_digit(10).expect("ascii digit") as usize)
                .collect()
        } else {
            return Err(Error::Parse(format!("cannot read permutation from {s:?}")));
        };
        Permutation::new(window)
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;
    fn try_from(window: Vec<usize>) -> Result<Self> {
        Permutation::new(window)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.window
    }
}

/// A word over the alphabet `{1, ..., n-1}` of simple transpositions.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&a| a < 10) {
            write!(f, "{}", self.0.iter().join(""))
        } else {
            write!(f, "{}", self.0.iter().join(","))
        }
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Word::default());
        }
        let letters = if s.contains(',') {
            s.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|e| Error::Parse(format!("bad letter {t:?}: {e}")))
                })
                .collect::<Result<Vec<_>>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::Parse(format!("bad letter {c:?} in {s:?}")))
                })
                .collect::<Result<Vec<_>>>()?
        };
        Ok(Word(letters))
    }
}

/// A weak composition with exactly `n` parts (trailing zeros included).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition(pub Vec<u32>);

impl Composition {
    pub fn zero(n: usize) -> Self {
        Composition(vec![0; n])
    }

    /// Pads or validates to exactly `n` parts.
    pub fn padded(mut parts: Vec<u32>, n: usize) -> Result<Self> {
        if parts.len() > n {
            if parts[n..].iter().any(|&p| p != 0) {
                return Err(Error::SizeMismatch {
                    expected: n,
                    found: parts.len(),
                });
            }
            parts.truncate(n);
        }
        parts.resize(n, 0);
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// Sum of the parts.
    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Weakly decreasing parts.
    pub fn is_partition(&self) -> bool {
        self.0.windows(2).all(|p| p[0] >= p[1])
    }

    pub fn sorted_desc(&self) -> Composition {
        let mut parts = self.0.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Composition(parts)
    }

    /// `self - α_i` where `α_i = e_i - e_{i+1}`; `None` if a part would go negative.
    pub fn minus_simple_root(&self, i: usize) -> Option<Composition> {
        let mut parts = self.0.clone();
        parts[i - 1] = parts[i - 1].checked_sub(1)?;
        parts[i] += 1;
        Some(Composition(parts))
    }

    /// `self + α_i`; `None` if a part would go negative.
    pub fn plus_simple_root(&self, i: usize) -> Option<Composition> {
        let mut parts = self.0.clone();
        parts[i] = parts[i].checked_sub(1)?;
        parts[i - 1] += 1;
        Some(Composition(parts))
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(","))
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        body.split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|e| Error::Parse(format!("bad part {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Composition)
    }
}

/// The shortest `π` with `push_action(π, sort_desc(a)) = a`.
///
/// Stable descending sort of the parts: the `k`-th largest entry (ties broken
/// left to right) came from position `π(k)`.
pub fn shortest_sorting_perm(a: &Composition) -> Permutation {
    let mut order: Vec<usize> = (0..a.n()).collect();
    order.sort_by(|&x, &y| a.0[y].cmp(&a.0[x]));
    Permutation {
        window: order.into_iter().map(|k| k + 1).collect(),
    }
}

/// Coordinate action of `S_n`: `result_{π(i)} = v_i`.
pub fn push_action(pi: &Permutation, v: &Composition) -> Composition {
    assert_eq!(pi.n(), v.n(), "permutation and composition sizes differ");
    let mut out = vec![0; v.n()];
    for (i, &part) in v.0.iter().enumerate() {
        out[pi.window[i] - 1] = part;
    }
    Composition(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn words(list: &[&str]) -> BTreeSet<Word> {
        list.iter().map(|w| w.parse().unwrap()).collect()
    }

    #[test]
    fn lengths() {
        assert_eq!(perm("21543").length(), 4);
        assert_eq!(Permutation::identity(6).length(), 0);
        assert_eq!(perm("321").length(), 3);
    }

    #[test]
    fn reduced_words_of_21543() {
        assert_eq!(
            perm("21543").reduced_words(),
            words(&["3431", "4341", "3413", "3143", "1343", "4314", "4134", "1434"])
        );
    }

    #[test]
    fn reduced_words_small() {
        assert_eq!(Permutation::identity(4).reduced_words(), words(&[""]));
        // Brute force over {1,2}^3 gives exactly these two.
        assert_eq!(perm("321").reduced_words(), words(&["121", "212"]));
    }

    #[test]
    fn sorting_permutations() {
        let c = |s: &str| s.parse::<Composition>().unwrap();
        assert!(shortest_sorting_perm(&c("2,1,1,0")).is_identity());
        assert_eq!(shortest_sorting_perm(&c("1,0,2,1")), perm("3142"));
        assert_eq!(shortest_sorting_perm(&c("3,0,0,1")), perm("1423"));
        assert_eq!(perm("3142").reduced_expression(), "213".parse().unwrap());
        assert_eq!(perm("1423").reduced_expression(), "32".parse().unwrap());
    }

    #[test]
    fn push_action_examples() {
        let c = |s: &str| s.parse::<Composition>().unwrap();
        let s1 = Permutation::simple(3, 1).unwrap();
        assert_eq!(push_action(&s1, &c("2,1,0")), c("1,2,0"));
        assert_eq!(push_action(&perm("3142"), &c("2,1,1,0")), c("1,0,2,1"));
        assert_eq!(
            push_action(&Permutation::identity(3), &c("4,0,2")),
            c("4,0,2")
        );
    }

    #[test]
    fn reduced_expression_examples() {
        assert!(Permutation::identity(4).reduced_expression().is_empty());
        assert_eq!(perm("1324").reduced_expression(), Word(vec![2]));
        let min = perm("3142").reduced_words().into_iter().next().unwrap();
        assert_eq!(perm("3142").reduced_expression(), min);
    }

    #[test]
    fn parsing() {
        assert_eq!(perm("2,1,5,4,3"), perm("21543"));
        assert_eq!(perm("[2, 1, 5, 4, 3]"), perm("21543"));
        assert!("1,1,2".parse::<Permutation>().is_err());
        assert!("0,1".parse::<Permutation>().is_err());
        assert!("1234567891".parse::<Permutation>().is_err());
        let big: Permutation = "10,9,8,7,6,5,4,3,2,1".parse().unwrap();
        assert_eq!(big.n(), 10);
        assert_eq!(big.to_string().parse::<Permutation>().unwrap(), big);
    }

    #[test]
    fn products_follow_function_composition() {
        // s_2 s_1 s_3 = [3142]
        let w = Permutation::from_word(4, &"213".parse().unwrap()).unwrap();
        assert_eq!(w, perm("3142"));
        let a = perm("2314");
        let b = perm("1342");
        let ab = a.compose(&b).unwrap();
        for i in 1..=4 {
            assert_eq!(ab.apply(i), a.apply(b.apply(i)));
        }
        assert!(a.compose(&a.inverse()).unwrap().is_identity());
    }
}
