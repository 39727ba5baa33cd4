//! Exact sparse multivariate polynomials over the integers, with the divided
//! difference and Demazure (isobaric) operators, and three independent
//! constructions: Schubert polynomials by divided differences, key
//! polynomials by Demazure operators, and Schur polynomials by tableau
//! enumeration.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::perm::{push_action, shortest_sorting_perm, Composition, Permutation, Word};

/// Exponent vector, one entry per variable.
pub type Exponent = Vec<u32>;

/// A polynomial in `x_1, ..., x_n` with arbitrary-precision integer coefficients.
/// Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SparsePolynomial {
    nvars: usize,
    terms: BTreeMap<Exponent, BigInt>,
}

impl SparsePolynomial {
    pub fn zero(nvars: usize) -> Self {
        SparsePolynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(vec![0; nvars], BigInt::one())
    }

    pub fn monomial(exp: Exponent, coeff: BigInt) -> Self {
        let mut p = Self::zero(exp.len());
        p.add_term(exp, coeff);
        p
    }

    /// `x^v` for a composition `v`.
    pub fn x_pow(v: &Composition) -> Self {
        Self::monomial(v.parts().to_vec(), BigInt::one())
    }

    /// The variable `x_i` (1-indexed).
    pub fn variable(nvars: usize, i: usize) -> Self {
        let mut exp = vec![0; nvars];
        exp[i - 1] = 1;
        Self::monomial(exp, BigInt::one())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, exp: &[u32]) -> BigInt {
        self.terms.get(exp).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &BigInt)> {
        self.terms.iter()
    }

    /// Adds `coeff * x^exp` in place.
    pub fn add_term(&mut self, exp: Exponent, coeff: BigInt) {
        assert_eq!(exp.len(), self.nvars, "exponent length mismatch");
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// The common total degree of every term, or `None` if the polynomial is
    /// zero or not homogeneous.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(|e| e.iter().sum::<u32>());
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn all_coefficients_positive(&self) -> bool {
        self.terms.values().all(|c| c.is_positive())
    }

    /// Terms in graded lexicographic order, largest first.
    pub fn sorted_terms(&self) -> Vec<(&Exponent, &BigInt)> {
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| grlex(b, a));
        terms
    }

    /// Exchange `x_i` and `x_{i+1}`.
    pub fn swap_variables(&self, i: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (exp, c) in &self.terms {
            let mut e = exp.clone();
            e.swap(i - 1, i);
            out.add_term(e, c.clone());
        }
        out
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i >= self.nvars {
            return Err(Error::IndexOutOfRange {
                index: i,
                n: self.nvars,
            });
        }
        Ok(())
    }

    /// Exact quotient by `x_i - x_{i+1}`.
    ///
    /// Repeatedly cancels the term of highest `x_i`-degree; a surviving term
    /// free of `x_i` means the division was not exact.
    fn divide_by_root(&self, i: usize) -> Result<Self> {
        let (a, b) = (i - 1, i);
        let mut rem = self.clone();
        let mut quot = Self::zero(self.nvars);
        loop {
            let lead = rem
                .terms
                .iter()
                .max_by(|(x, _), (y, _)| x[a].cmp(&y[a]).then_with(|| x.cmp(y)))
                .map(|(e, c)| (e.clone(), c.clone()));
            let Some((exp, coeff)) = lead else { break };
            if exp[a] == 0 {
                return Err(Error::InexactDivision(i, i + 1));
            }
            let mut q = exp.clone();
            q[a] -= 1;
            quot.add_term(q.clone(), coeff.clone());
            // rem -= coeff * x^q * (x_a - x_b)
            rem.add_term(exp, -coeff.clone());
            let mut shifted = q;
            shifted[b] += 1;
            rem.add_term(shifted, coeff);
        }
        Ok(quot)
    }

    /// `∂_i p = (p - s_i p) / (x_i - x_{i+1})`.
    pub fn divided_difference(&self, i: usize) -> Result<Self> {
        self.check_index(i)?;
        (self - &self.swap_variables(i)).divide_by_root(i)
    }

    /// Isobaric divided difference `π_i p = ∂_i(x_i p)`.
    pub fn demazure_operator(&self, i: usize) -> Result<Self> {
        self.check_index(i)?;
        (&Self::variable(self.nvars, i) * self).divided_difference(i)
    }

    /// Terms in graded-lex order, e.g. `x1^2*x2^2 + 2*x1^2*x2*x3`.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (exp, coeff)) in self.sorted_terms().into_iter().enumerate() {
            let negative = coeff.is_negative();
            let magnitude = coeff.abs();
            match (k, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let vars: Vec<String> = exp
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(v, &e)| match e {
                    1 => format!("x{}", v + 1),
                    e => format!("x{}^{}", v + 1, e),
                })
                .collect();
            if vars.is_empty() {
                out.push_str(&magnitude.to_string());
            } else {
                if !magnitude.is_one() {
                    out.push_str(&format!("{magnitude}*"));
                }
                out.push_str(&vars.join("*"));
            }
        }
        out
    }

    /// `[{"coeff": c, "exp": [..]}, ...]` in graded-lex order. Coefficients
    /// that do not fit in an `i64` are emitted as decimal strings.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.sorted_terms()
                .into_iter()
                .map(|(exp, coeff)| {
                    let c = match coeff.to_i64() {
                        Some(v) => json!(v),
                        None => json!(coeff.to_string()),
                    };
                    json!({ "coeff": c, "exp": exp })
                })
                .collect(),
        )
    }
}

/// Graded lexicographic comparison of exponent vectors.
fn grlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

impl fmt::Display for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl Add for &SparsePolynomial {
    type Output = SparsePolynomial;
    fn add(self, rhs: &SparsePolynomial) -> SparsePolynomial {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &SparsePolynomial {
    type Output = SparsePolynomial;
    fn sub(self, rhs: &SparsePolynomial) -> SparsePolynomial {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &SparsePolynomial {
    type Output = SparsePolynomial;
    fn neg(self) -> SparsePolynomial {
        SparsePolynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Mul for &SparsePolynomial {
    type Output = SparsePolynomial;
    fn mul(self, rhs: &SparsePolynomial) -> SparsePolynomial {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = SparsePolynomial::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl SparsePolynomial {
    /// Sum of an iterator of polynomials in `nvars` variables.
    pub fn sum_of(nvars: usize, iter: impl IntoIterator<Item = SparsePolynomial>) -> Self {
        iter.into_iter()
            .fold(SparsePolynomial::zero(nvars), |acc, p| &acc + &p)
    }
}

/// Generating function `Σ x^v` over a multiset of weights.
pub fn weight_generating_function<'a>(
    nvars: usize,
    weights: impl IntoIterator<Item = &'a Composition>,
) -> SparsePolynomial {
    let mut p = SparsePolynomial::zero(nvars);
    for v in weights {
        p.add_term(v.parts().to_vec(), BigInt::one());
    }
    p
}

/// `𝔖_w` from `𝔖_{w_0} = x_1^{n-1} x_2^{n-2} ... x_{n-1}` and
/// `𝔖_{w s_i} = ∂_i 𝔖_w` whenever `w_i > w_{i+1}`.
pub fn schubert_divdiff(w: &Permutation) -> SparsePolynomial {
    let n = w.n();
    // Climb to w_0 by fixing ascents, then descend with divided differences.
    let mut path = Vec::new();
    let mut u = w.clone();
    while let Some(i) = (1..n).find(|&i| u.apply(i) < u.apply(i + 1)) {
        path.push(i);
        u = u.right_multiply_simple(i).expect("ascent is in range");
    }
    let staircase: Vec<u32> = (0..n).map(|k| (n - 1 - k) as u32).collect();
    let mut p = SparsePolynomial::monomial(staircase, BigInt::one());
    for &i in path.iter().rev() {
        p = p
            .divided_difference(i)
            .expect("divided differences of polynomials are exact");
    }
    p
}

/// `κ_a = π_{i_1} ... π_{i_p} x^λ` with `λ = sort_desc(a)` and
/// `s_{i_1} ... s_{i_p}` the lexicographically least reduced word of the
/// shortest permutation sorting `a`.
pub fn key_polynomial(a: &Composition) -> SparsePolynomial {
    let sigma = shortest_sorting_perm(a);
    key_polynomial_along(a, &sigma.reduced_expression())
        .expect("reduced expression of the sorting permutation is valid")
}

/// `κ_a` computed along a caller-chosen reduced word for the sorting permutation.
pub fn key_polynomial_along(a: &Composition, word: &Word) -> Result<SparsePolynomial> {
    let n = a.n();
    let lambda = a.sorted_desc();
    let sigma = Permutation::from_word(n, word)?;
    if !sigma.has_reduced_word(word) || push_action(&sigma, &lambda) != *a {
        return Err(Error::NotReduced(word.0.clone()));
    }
    let mut p = SparsePolynomial::x_pow(&lambda);
    for &i in word.letters().iter().rev() {
        p = p.demazure_operator(i)?;
    }
    Ok(p)
}

/// `s_λ(x_1, ..., x_n)` by enumerating semistandard tableaux of shape `λ`
/// with entries at most `n`.
pub fn schur_oracle(lambda: &Composition, n: usize) -> SparsePolynomial {
    let shape: Vec<usize> = lambda
        .parts()
        .iter()
        .map(|&p| p as usize)
        .filter(|&p| p > 0)
        .collect();
    let mut out = SparsePolynomial::zero(n);
    if shape.len() > n {
        return out;
    }
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let mut filling: Vec<Vec<u32>> = shape.iter().map(|&len| vec![0; len]).collect();
    fill_ssyt(&cells, 0, n as u32, &mut filling, &mut out);
    out
}

fn fill_ssyt(
    cells: &[(usize, usize)],
    k: usize,
    max: u32,
    filling: &mut Vec<Vec<u32>>,
    out: &mut SparsePolynomial,
) {
    if k == cells.len() {
        let mut exp = vec![0; max as usize];
        for v in filling.iter().flatten() {
            exp[*v as usize - 1] += 1;
        }
        out.add_term(exp, BigInt::one());
        return;
    }
    let (r, c) = cells[k];
    let lo_row = if c > 0 { filling[r][c - 1] } else { 1 };
    let lo_col = if r > 0 { filling[r - 1][c] + 1 } else { 1 };
    for v in lo_row.max(lo_col)..=max {
        filling[r][c] = v;
        fill_ssyt(cells, k + 1, max, filling, out);
    }
    filling[r][c] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: usize, i: usize) -> SparsePolynomial {
        SparsePolynomial::variable(n, i)
    }

    fn mono(exp: &[u32]) -> SparsePolynomial {
        SparsePolynomial::monomial(exp.to_vec(), BigInt::one())
    }

    fn sum(ps: &[SparsePolynomial]) -> SparsePolynomial {
        SparsePolynomial::sum_of(ps[0].nvars(), ps.iter().cloned())
    }

    fn comp(s: &str) -> Composition {
        s.parse().unwrap()
    }

    #[test]
    fn ring_arithmetic() {
        assert_eq!(&x(2, 1) + &x(2, 2), sum(&[mono(&[1, 0]), mono(&[0, 1])]));
        let diff = &x(2, 1) - &x(2, 2);
        let total = &x(2, 1) + &x(2, 2);
        assert_eq!(&diff * &total, &mono(&[2, 0]) - &mono(&[0, 2]));
        let p = &x(3, 1) * &x(3, 3);
        assert_eq!(&p + &SparsePolynomial::zero(3), p);
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn divided_differences() {
        assert_eq!(
            x(2, 1).divided_difference(1).unwrap(),
            SparsePolynomial::one(2)
        );
        assert!((&x(2, 1) * &x(2, 2))
            .divided_difference(1)
            .unwrap()
            .is_zero());
        // (x1^2 x2^2 - x1^2 x3^2) / (x2 - x3) = x1^2 x2 + x1^2 x3
        assert_eq!(
            mono(&[2, 2, 0]).divided_difference(2).unwrap(),
            sum(&[mono(&[2, 1, 0]), mono(&[2, 0, 1])])
        );
        assert!(mono(&[1, 0]).divided_difference(2).is_err());
        assert!(mono(&[1, 0]).divided_difference(0).is_err());
    }

    #[test]
    fn demazure_operators() {
        assert_eq!(x(2, 1).demazure_operator(1).unwrap(), &x(2, 1) + &x(2, 2));
        let sym = &x(3, 1) + &x(3, 2);
        assert_eq!(sym.demazure_operator(1).unwrap(), sym);
        assert_eq!(
            mono(&[2, 2, 0, 0]).demazure_operator(2).unwrap(),
            sum(&[
                mono(&[2, 2, 0, 0]),
                mono(&[2, 1, 1, 0]),
                mono(&[2, 0, 2, 0])
            ])
        );
    }

    #[test]
    fn schubert_small_cases() {
        let w0: Permutation = "321".parse().unwrap();
        assert_eq!(schubert_divdiff(&w0), mono(&[2, 1, 0]));
        assert_eq!(
            schubert_divdiff(&Permutation::identity(4)),
            SparsePolynomial::one(4)
        );
        assert_eq!(schubert_divdiff(&"312".parse().unwrap()), mono(&[2, 0, 0]));
        assert_eq!(schubert_divdiff(&"231".parse().unwrap()), mono(&[1, 1, 0]));
    }

    #[test]
    fn key_polynomial_examples() {
        assert_eq!(key_polynomial(&comp("3,1,1,0")), mono(&[3, 1, 1, 0]));
        assert_eq!(
            key_polynomial(&comp("2,0,2,0")),
            sum(&[
                mono(&[2, 2, 0, 0]),
                mono(&[2, 1, 1, 0]),
                mono(&[2, 0, 2, 0])
            ])
        );
        assert_eq!(
            key_polynomial(&comp("0,1,2")),
            schur_oracle(&comp("2,1,0"), 3)
        );
    }

    #[test]
    fn schur_examples() {
        assert_eq!(schur_oracle(&comp("1,1"), 2), mono(&[1, 1]));
        assert_eq!(
            schur_oracle(&comp("1,0,0,0"), 4),
            sum(&[x(4, 1), x(4, 2), x(4, 3), x(4, 4)])
        );
        let s21 = schur_oracle(&comp("2,1,0"), 3);
        assert_eq!(s21.num_terms(), 7);
        let total: BigInt = s21.terms().map(|(_, c)| c.clone()).sum();
        assert_eq!(total, BigInt::from(8));
        assert_eq!(s21.coefficient(&[1, 1, 1]), BigInt::from(2));
        assert!(schur_oracle(&comp("1,1,1"), 2).is_zero());
    }

    #[test]
    fn text_rendering() {
        let p = sum(&[mono(&[2, 1, 1]), mono(&[2, 1, 1]), mono(&[2, 2, 0])]);
        assert_eq!(p.to_text(), "x1^2*x2^2 + 2*x1^2*x2*x3");
        assert_eq!(SparsePolynomial::one(3).to_text(), "1");
        assert_eq!(SparsePolynomial::zero(3).to_text(), "0");
        assert_eq!((&x(2, 1) - &x(2, 2)).to_text(), "x1 - x2");
        assert_eq!((-&x(2, 2)).to_text(), "-x2");
        assert_eq!(
            p.to_json(),
            json!([{"coeff": 1, "exp": [2, 2, 0]}, {"coeff": 2, "exp": [2, 1, 1]}])
        );
    }
}
