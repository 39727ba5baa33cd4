//! Compatible sequences, reduced factorizations with cutoff (RFCs), their
//! crystal operators, and the bijections between pipe dreams, compatible
//! pairs and RFCs.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{Composition, Permutation, Word};
use crate::pipedream::PipeDream;
use crate::poly::{weight_generating_function, SparsePolynomial};

/// A reduced word together with a compatible sequence `β`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CompatibleSequence {
    pub word: Word,
    pub beta: Vec<usize>,
}

impl CompatibleSequence {
    pub fn new(word: Word, beta: Vec<usize>) -> Result<Self> {
        if !is_compatible(&word, &beta) {
            return Err(Error::NotCompatible { word: word.0, beta });
        }
        Ok(CompatibleSequence { word, beta })
    }

    /// Multiplicities of `1, 2, ..., n` in `β`.
    pub fn weight(&self, n: usize) -> Composition {
        let mut parts = vec![0u32; n];
        for &b in &self.beta {
            parts[b - 1] += 1;
        }
        Composition(parts)
    }
}

/// Checks `β` weakly increasing, `β_j <= a_j`, and `β_j < β_{j+1}` when
/// `a_j < a_{j+1}`. Reducedness of the word is not checked.
pub fn is_compatible(word: &Word, beta: &[usize]) -> bool {
    let a = word.letters();
    if a.len() != beta.len() || beta.contains(&0) {
        return false;
    }
    if a.iter().zip(beta).any(|(&aj, &bj)| bj > aj) {
        return false;
    }
    (1..a.len()).all(|j| beta[j - 1] <= beta[j] && (a[j - 1] >= a[j] || beta[j - 1] < beta[j]))
}

/// `C(a)`, in lexicographic order of `β`.
pub fn compatible_sequences(word: &Word) -> Vec<Vec<usize>> {
    fn extend(a: &[usize], beta: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let j = beta.len();
        if j == a.len() {
            out.push(beta.clone());
            return;
        }
        let lo = match j {
            0 => 1,
            _ if a[j - 1] < a[j] => beta[j - 1] + 1,
            _ => beta[j - 1],
        };
        // Later entries are bounded by their letters, and β never decreases.
        let hi = a[j..].iter().copied().min().unwrap_or(0);
        for b in lo..=hi {
            beta.push(b);
            extend(a, beta, out);
            beta.pop();
        }
    }
    let mut out = Vec::new();
    extend(word.letters(), &mut Vec::new(), &mut out);
    out
}

/// `𝔖_w = Σ_{a ∈ R(w)} Σ_{β ∈ C(a)} x^{wt(β)}`.
///
/// Grows reduced words and compatible sequences together, one letter at a
/// time, so words admitting no compatible sequence are abandoned early:
/// `β_k` may not exceed any letter still to come, and every reduced word of
/// the remainder uses exactly the letters of its support.
pub fn schubert_compatible(w: &Permutation) -> SparsePolynomial {
    struct Walk {
        inverse: Vec<usize>,
        remaining: usize,
        weight: Vec<u32>,
        out: SparsePolynomial,
    }

    /// Smallest letter in any reduced word of the remainder.
    fn min_support(inverse: &[usize]) -> usize {
        let mut high = 0;
        for (k, &v) in inverse.iter().enumerate() {
            high = high.max(v);
            if high > k + 1 {
                return k + 1;
            }
        }
        usize::MAX
    }

    impl Walk {
        fn visit(&mut self, prev: Option<(usize, usize)>) {
            if self.remaining == 0 {
                self.out.add_term(self.weight.clone(), 1.into());
                return;
            }
            for a in 1..self.inverse.len() {
                if self.inverse[a - 1] < self.inverse[a] {
                    continue;
                }
                self.inverse.swap(a - 1, a);
                let hi = a.min(min_support(&self.inverse));
                let lo = match prev {
                    None => 1,
                    Some((pa, pb)) if pa < a => pb + 1,
                    Some((_, pb)) => pb,
                };
                self.remaining -= 1;
                for b in lo..=hi {
                    self.weight[b - 1] += 1;
                    self.visit(Some((a, b)));
                    self.weight[b - 1] -= 1;
                }
                self.remaining += 1;
                self.inverse.swap(a - 1, a);
            }
        }
    }

    let n = w.n();
    let mut walk = Walk {
        inverse: w.inverse().window().to_vec(),
        remaining: w.length(),
        weight: vec![0; n],
        out: SparsePolynomial::zero(n),
    };
    walk.visit(None);
    walk.out
}

/// The double sum taken literally over `R(w)` and each `C(a)`.
pub fn schubert_compatible_by_words(w: &Permutation) -> SparsePolynomial {
    let n = w.n();
    let mut weights = Vec::new();
    for word in w.reduced_words() {
        for beta in compatible_sequences(&word) {
            let mut parts = vec![0u32; n];
            for b in beta {
                parts[b - 1] += 1;
            }
            weights.push(Composition(parts));
        }
    }
    weight_generating_function(n, &weights)
}

/// A factorization of a word into `n - 1` strictly increasing blocks,
/// block `i` having smallest letter at least `i`.
///
/// `blocks[0]` is block 1. The word it factors reads the blocks from
/// `n - 1` down to `1`, which is also the display order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rfc {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl Rfc {
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let expected = n.saturating_sub(1);
        if blocks.len() != expected {
            return Err(Error::SizeMismatch {
                expected,
                found: blocks.len(),
            });
        }
        for (k, block) in blocks.iter().enumerate() {
            let i = k + 1;
            if block.windows(2).any(|p| p[0] >= p[1]) {
                return Err(Error::InvalidFactorization(format!(
                    "block {i} is not strictly increasing: {block:?}"
                )));
            }
            if let Some(&first) = block.first() {
                if first < i {
                    return Err(Error::InvalidFactorization(format!(
                        "block {i} starts with {first} < {i}"
                    )));
                }
            }
            if let Some(&last) = block.last() {
                if last >= n {
                    return Err(Error::IndexOutOfRange { index: last, n });
                }
            }
        }
        Ok(Rfc { n, blocks })
    }

    pub fn empty(n: usize) -> Self {
        Rfc {
            n,
            blocks: vec![Vec::new(); n.saturating_sub(1)],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Block `i`, 1-indexed.
    pub fn block(&self, i: usize) -> &[usize] {
        &self.blocks[i - 1]
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Blocks `n - 1, ..., 1` concatenated.
    pub fn reading_word(&self) -> Word {
        Word(self.blocks.iter().rev().flatten().copied().collect())
    }

    /// The permutation named by the reading word, if that word is reduced.
    pub fn permutation(&self) -> Option<Permutation> {
        let word = self.reading_word();
        let w = Permutation::from_word(self.n, &word).ok()?;
        (w.length() == word.len()).then_some(w)
    }

    /// Block sizes, padded with a trailing zero to length `n`.
    pub fn weight(&self) -> Composition {
        let mut parts: Vec<u32> = self.blocks.iter().map(|b| b.len() as u32).collect();
        parts.resize(self.n, 0);
        Composition(parts)
    }

    /// `"( 4 )( 3 )( )( 1 4 )"`: blocks right to left, empty ones as `( )`.
    pub fn to_text(&self) -> String {
        self.blocks
            .iter()
            .rev()
            .map(|b| {
                let letters: Vec<String> = b.iter().map(|z| z.to_string()).collect();
                if letters.is_empty() {
                    "( )".to_string()
                } else {
                    format!("( {} )", letters.join(" "))
                }
            })
            .collect()
    }
}

impl fmt::Display for Rfc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Accepts `( 4 )( 3 )( )( 1 4 )`, `(4)(3)()(14)` (single-digit letters run
/// together) and comma-separated letters such as `(10,11)`.
impl FromStr for Rfc {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("malformed factorization {s:?}"));
        let mut displayed = Vec::new();
        let mut rest = s.trim();
        while !rest.is_empty() {
            rest = rest.strip_prefix('(').ok_or_else(bad)?;
            let close = rest.find(')').ok_or_else(bad)?;
            let inner = rest[..close].trim();
            rest = rest[close + 1..].trim_start();
            let block: Vec<usize> = if inner.contains([',', ' ']) {
                inner
                    .split([',', ' '])
                    .filter(|t| !t.is_empty())
                    .map(|t| t.parse().map_err(|_| bad()))
                    .collect::<Result<_>>()?
            } else {
                inner
                    .chars()
                    .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
                    .collect::<Result<_>>()?
            };
            displayed.push(block);
        }
        displayed.reverse();
        Rfc::new(displayed.len() + 1, displayed)
    }
}

#[derive(Serialize, Deserialize)]
struct RfcJson {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl Serialize for Rfc {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RfcJson {
            n: self.n,
            blocks: self.blocks.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Rfc {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RfcJson::deserialize(d)?;
        Rfc::new(raw.n, raw.blocks).map_err(serde::de::Error::custom)
    }
}

/// `RFC(w)`, sorted.
///
/// Peels letters off the right end of the reading word, so block 1 is
/// filled first (largest letter first). Each peeled letter must be a right
/// descent of what is left of `w`, and block `k` may only be closed once the
/// remainder fixes `k`.
pub fn enumerate_rfc(w: &Permutation) -> Vec<Rfc> {
    let n = w.n();
    if n <= 1 {
        return vec![Rfc::empty(n)];
    }
    let mut search = BlockSearch {
        n,
        remaining: w.window().to_vec(),
        remaining_length: w.length(),
        blocks: vec![Vec::new(); n - 1],
        out: Vec::new(),
    };
    search.visit(1, n - 1);
    let mut out = search.out;
    out.sort();
    out
}

struct BlockSearch {
    n: usize,
    remaining: Vec<usize>,
    remaining_length: usize,
    /// Letters of each block, largest first while searching.
    blocks: Vec<Vec<usize>>,
    out: Vec<Rfc>,
}

impl BlockSearch {
    fn visit(&mut self, block: usize, top: usize) {
        if self.remaining_length == 0 {
            let blocks = self
                .blocks
                .iter()
                .map(|b| b.iter().rev().copied().collect())
                .collect();
            self.out.push(Rfc { n: self.n, blocks });
            return;
        }
        if block >= self.n {
            return;
        }
        if top < block {
            if self.remaining[block - 1] == block {
                self.visit(block + 1, self.n - 1);
            }
            return;
        }
        self.visit(block, top - 1);
        let a = top;
        if self.remaining[a - 1] > self.remaining[a] {
            self.remaining.swap(a - 1, a);
            self.remaining_length -= 1;
            self.blocks[block - 1].push(a);
            self.visit(block, top - 1);
            self.blocks[block - 1].pop();
            self.remaining_length += 1;
            self.remaining.swap(a - 1, a);
        }
    }
}

/// `RFC(w)` by cutting every reduced word of `w` into blocks.
pub fn enumerate_rfc_by_words(w: &Permutation) -> Vec<Rfc> {
    fn cut(
        n: usize,
        word: &[usize],
        block: usize,
        acc: &mut Vec<Vec<usize>>,
        out: &mut BTreeSet<Rfc>,
    ) {
        // `acc` holds blocks n-1, n-2, ... in reading order.
        if block == 0 {
            if word.is_empty() {
                let mut blocks = acc.clone();
                blocks.reverse();
                out.insert(Rfc { n, blocks });
            }
            return;
        }
        let mut len = 0;
        loop {
            let piece = &word[..len];
            acc.push(piece.to_vec());
            cut(n, &word[len..], block - 1, acc, out);
            acc.pop();
            if len == word.len() {
                break;
            }
            let next = word[len];
            let increasing = len == 0 || word[len - 1] < next;
            if !increasing || next < block {
                break;
            }
            len += 1;
        }
    }
    let n = w.n();
    let mut out = BTreeSet::new();
    for word in w.reduced_words() {
        cut(
            n,
            word.letters(),
            n.saturating_sub(1),
            &mut Vec::new(),
            &mut out,
        );
    }
    out.into_iter().collect()
}

/// `𝔖_w = Σ_{r ∈ RFC(w⁻¹)} x^{wt(r)}`.
pub fn schubert_rfc(w: &Permutation) -> SparsePolynomial {
    let weights: Vec<Composition> = enumerate_rfc(&w.inverse())
        .iter()
        .map(Rfc::weight)
        .collect();
    weight_generating_function(w.n(), &weights)
}

/// Outcome of pairing block `i` against block `i + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BlockPairing {
    pub block: usize,
    /// `(letter in block i, letter in block i+1)`.
    pub pairs: Vec<(usize, usize)>,
    pub unpaired_lower_block: Vec<usize>,
    pub unpaired_upper_block: Vec<usize>,
}

/// Pairs each letter `a` of block `i`, largest first, with the smallest
/// unpaired `b > a` of block `i + 1`. Unpaired lists are increasing.
pub fn pair_block(r: &Rfc, i: usize) -> BlockPairing {
    let lower = r
        .blocks
        .get(i.wrapping_sub(1))
        .map(Vec::as_slice)
        .unwrap_or(&[]);
    let upper = r.blocks.get(i).map(Vec::as_slice).unwrap_or(&[]);
    let mut taken = vec![false; upper.len()];
    let mut pairs = Vec::new();
    let mut unpaired_lower_block = Vec::new();
    for &a in lower.iter().rev() {
        match (0..upper.len()).find(|&k| !taken[k] && upper[k] > a) {
            Some(k) => {
                taken[k] = true;
                pairs.push((a, upper[k]));
            }
            None => unpaired_lower_block.push(a),
        }
    }
    unpaired_lower_block.reverse();
    let unpaired_upper_block = upper
        .iter()
        .zip(&taken)
        .filter(|(_, &t)| !t)
        .map(|(&b, _)| b)
        .collect();
    BlockPairing {
        block: i,
        pairs,
        unpaired_lower_block,
        unpaired_upper_block,
    }
}

impl Rfc {
    /// Moves `from` out of block `src` and `to` into block `dst`, returning
    /// `None` unless the result is again an RFC for the same permutation.
    fn transfer(&self, src: usize, from: usize, dst: usize, to: usize) -> Option<Rfc> {
        let mut blocks = self.blocks.clone();
        blocks[src - 1].retain(|&z| z != from);
        let target = &mut blocks[dst - 1];
        let at = target.binary_search(&to).err()?;
        target.insert(at, to);
        let out = Rfc::new(self.n, blocks).ok()?;
        (out.permutation()? == self.permutation()?).then_some(out)
    }
}

/// `f_i` on RFCs: the smallest unpaired `u` of block `i` leaves, and
/// `t = max{z <= u : z - 1 ∉ block i}` enters block `i + 1`.
pub fn lower_rfc(r: &Rfc, i: usize) -> Option<Rfc> {
    if i == 0 || i + 1 >= r.n {
        return None;
    }
    let pairing = pair_block(r, i);
    let &u = pairing.unpaired_lower_block.first()?;
    let block = r.block(i);
    let mut t = u;
    while t > 1 && block.contains(&(t - 1)) {
        t -= 1;
    }
    r.transfer(i, u, i + 1, t)
}

/// `e_i` on RFCs: the largest unpaired `v` of block `i + 1` leaves, and
/// `s = min{z >= v : z + 1 ∉ block i+1}` enters block `i`.
pub fn raise_rfc(r: &Rfc, i: usize) -> Option<Rfc> {
    if i == 0 || i + 1 >= r.n {
        return None;
    }
    let pairing = pair_block(r, i);
    let &v = pairing.unpaired_upper_block.last()?;
    let block = r.block(i + 1);
    let mut s = v;
    while block.contains(&(s + 1)) {
        s += 1;
    }
    r.transfer(i + 1, v, i, s)
}

/// Reads the crosses of `D` in canonical order as letters `i + j - 1` with
/// `β = i`.
pub fn phi1(d: &PipeDream) -> CompatibleSequence {
    let cells = d.canonical_crosses();
    CompatibleSequence {
        word: Word(cells.iter().map(|&(i, j)| i + j - 1).collect()),
        beta: cells.iter().map(|&(i, _)| i).collect(),
    }
}

/// The rc-graph of `(a, β)`: crosses at `(β_k, a_k - β_k + 1)`.
pub fn phi1_inverse(n: usize, word: &Word, beta: &[usize]) -> Result<PipeDream> {
    if !is_compatible(word, beta) {
        return Err(Error::NotCompatible {
            word: word.0.clone(),
            beta: beta.to_vec(),
        });
    }
    let d = PipeDream::new(
        n,
        word.letters()
            .iter()
            .zip(beta)
            .map(|(&a, &b)| (b, a - b + 1)),
    )?;
    if d.num_crosses() != word.len() || !d.is_reduced() {
        return Err(Error::NotReduced(word.0.clone()));
    }
    Ok(d)
}

/// Letter `a_j` goes to block `β_j`.
pub fn phi2(n: usize, word: &Word, beta: &[usize]) -> Result<Rfc> {
    if !is_compatible(word, beta) {
        return Err(Error::NotCompatible {
            word: word.0.clone(),
            beta: beta.to_vec(),
        });
    }
    let mut blocks = vec![Vec::new(); n.saturating_sub(1)];
    for (&a, &b) in word.letters().iter().zip(beta) {
        if b > blocks.len() {
            return Err(Error::IndexOutOfRange { index: b, n });
        }
        blocks[b - 1].push(a);
    }
    for block in &mut blocks {
        block.sort_unstable();
    }
    Rfc::new(n, blocks)
}

/// Cross `(i, j)` becomes letter `i + j - 1` of block `i`.
pub fn phi(d: &PipeDream) -> Rfc {
    let n = d.n();
    let mut blocks = vec![Vec::new(); n.saturating_sub(1)];
    for (i, j) in d.crosses() {
        blocks[i - 1].push(i + j - 1);
    }
    Rfc::new(n, blocks).expect("cross positions give valid blocks")
}

/// Letter `z` of block `i` becomes cross `(i, z - i + 1)`.
pub fn phi_inverse(r: &Rfc) -> PipeDream {
    let cells = r
        .blocks
        .iter()
        .enumerate()
        .flat_map(|(k, b)| b.iter().map(move |&z| (k + 1, z - k)));
    PipeDream::new(r.n, cells).expect("cutoff keeps letters inside the staircase")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pipedream::enumerate_rp;

    fn word(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn seq(s: &str) -> Vec<usize> {
        s.bytes().map(|b| (b - b'0') as usize).collect()
    }

    fn rfc(s: &str) -> Rfc {
        s.parse().unwrap()
    }

    fn pd(n: usize, cells: &[(usize, usize)]) -> PipeDream {
        PipeDream::new(n, cells.iter().copied()).unwrap()
    }

    #[test]
    fn compatible_sequence_examples() {
        assert_eq!(
            compatible_sequences(&word("3143")),
            vec![seq("1122"), seq("1123"), seq("1133")]
        );
        assert!(compatible_sequences(&word("3431")).is_empty());
        assert_eq!(compatible_sequences(&word("1")), vec![seq("1")]);
        assert_eq!(
            compatible_sequences(&Word(vec![])),
            vec![Vec::<usize>::new()]
        );
        let total: usize = "21543"
            .parse::<Permutation>()
            .unwrap()
            .reduced_words()
            .iter()
            .map(|a| compatible_sequences(a).len())
            .sum();
        assert_eq!(total, 14);
    }

    #[test]
    fn compatible_sum_matches_literal_sum() {
        for w in Permutation::all(4).chain(["21543".parse().unwrap()]) {
            assert_eq!(
                schubert_compatible(&w),
                schubert_compatible_by_words(&w),
                "{w}"
            );
        }
        assert_eq!(
            schubert_compatible(&Permutation::identity(3)),
            SparsePolynomial::one(3)
        );
    }

    #[test]
    fn compatibility_conditions() {
        assert!(is_compatible(&word("1434"), &seq("1224")));
        assert!(!is_compatible(&word("1434"), &seq("1124")));
        assert!(!is_compatible(&word("12"), &seq("13")));
        assert!(!is_compatible(&word("21"), &seq("21")));
    }

    #[test]
    fn rfc_text_round_trip() {
        let r = rfc("()(4)(3)(14)");
        assert_eq!(r.n(), 5);
        assert_eq!(r.block(1), &[1, 4]);
        assert_eq!(r.to_text(), "( )( 4 )( 3 )( 1 4 )");
        assert_eq!(rfc(&r.to_text()), r);
        assert_eq!(rfc("(  )( 4 )( 3 )( 1 4 )"), r);
        assert_eq!(r.reading_word(), word("4314"));
        assert_eq!(r.weight(), "2,1,1,0,0".parse().unwrap());
        assert!("(4)(12)".parse::<Rfc>().is_err());
        assert!("(21)()".parse::<Rfc>().is_err());
    }

    #[test]
    fn rfc_json() {
        let r = rfc("()(4)(3)(14)");
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(json, r#"{"n":5,"blocks":[[1,4],[3],[4],[]]}"#);
        assert_eq!(serde_json::from_str::<Rfc>(&json).unwrap(), r);
    }

    #[test]
    fn rfc_enumeration() {
        let w: Permutation = "21543".parse().unwrap();
        let all = enumerate_rfc(&w);
        assert_eq!(all.len(), 14);
        assert!(all.contains(&rfc("(4)(3)(4)(1)")));
        assert_eq!(all, enumerate_rfc_by_words(&w));
        assert_eq!(
            enumerate_rfc(&Permutation::identity(3)),
            vec![Rfc::empty(3)]
        );
    }

    #[test]
    fn block_pairing() {
        let p = pair_block(&rfc("()()(4)(134)"), 1);
        assert_eq!(p.pairs, vec![(3, 4)]);
        assert_eq!(p.unpaired_lower_block, vec![1, 4]);
        let p = pair_block(&rfc("()(4)(3)(14)"), 1);
        assert_eq!(p.pairs, vec![(1, 3)]);
        assert_eq!(p.unpaired_lower_block, vec![4]);
        let p = pair_block(&rfc("()(4)(3)()"), 1);
        assert!(p.pairs.is_empty());
    }

    #[test]
    fn rfc_operators() {
        assert_eq!(
            lower_rfc(&rfc("()(4)(3)(14)"), 1),
            Some(rfc("()(4)(34)(1)"))
        );
        assert_eq!(raise_rfc(&rfc("()(4)(3)(14)"), 1), None);
        assert_eq!(
            raise_rfc(&rfc("()(4)(34)(1)"), 1),
            Some(rfc("()(4)(3)(14)"))
        );
        assert_eq!(lower_rfc(&rfc("()(4)(34)()"), 1), None);
        let d = pd(5, &[(1, 1), (1, 3), (1, 4), (2, 3)]);
        assert_eq!(lower_rfc(&phi(&d), 1), None);
    }

    #[test]
    fn phi_examples() {
        let table1 = pd(5, &[(1, 1), (2, 2), (2, 3), (4, 1)]);
        let c = phi1(&table1);
        assert_eq!(
            (c.word.clone(), c.beta.clone()),
            (word("1434"), seq("1224"))
        );
        assert_eq!(phi1_inverse(5, &c.word, &c.beta).unwrap(), table1);

        let d = pd(5, &[(1, 1), (1, 4), (2, 2), (3, 2)]);
        let c = phi1(&d);
        assert_eq!(
            (c.word.clone(), c.beta.clone()),
            (word("4134"), seq("1123"))
        );
        assert_eq!(phi(&d), rfc("()(4)(3)(14)"));
        assert_eq!(phi_inverse(&phi(&d)), d);
        assert_eq!(
            phi2(5, &word("3143"), &seq("1122")).unwrap(),
            rfc("()()(34)(13)")
        );
        assert_eq!(
            phi2(5, &word("4134"), &seq("1123")).unwrap(),
            rfc("()(4)(3)(14)")
        );
        assert_eq!(phi(&PipeDream::empty(4)), Rfc::empty(4));
        assert!(phi1(&PipeDream::empty(3)).word.is_empty());
    }

    #[test]
    fn phi_factors_through_compatible_pairs() {
        let w: Permutation = "21543".parse().unwrap();
        for d in enumerate_rp(&w) {
            let c = phi1(&d);
            assert_eq!(phi2(5, &c.word, &c.beta).unwrap(), phi(&d));
            assert_eq!(phi(&d).permutation(), Some(w.inverse()));
            assert_eq!(phi(&d).weight(), d.weight());
        }
    }
}
