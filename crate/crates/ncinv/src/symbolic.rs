//! Noncommutative polynomials in the letters `a_0, ..., a_d` and the
//! restitution map from bracket symbols to invariant `m`-linear forms.
//!
//! The letter `a_k` is the coordinate functional `Σ binom(d,j) ξ_j X^j Y^{d-j}
//! ↦ ξ_k`, so an η-monomial `∏ η_{i1}^{s_i} η_{i2}^{d-s_i}` restitutes to the
//! word `a_{s_1} ⋯ a_{s_m}` with no extra binomial factor.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::bracket::{BracketExpression, BracketMonomial};
use crate::error::{Error, Result};
use crate::partition::{chord_crossings, enumerate_m_partite_nc_pairings, PairPartition};
use crate::Rational;

/// Finite sequence of letter indices; `word[i] = k` stands for `a_k`.
pub type Word = Vec<usize>;

/// Homogeneous noncommutative polynomial of word length `m` over `a_0..=a_d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NcPolynomial {
    d: usize,
    m: usize,
    terms: BTreeMap<Word, Rational>,
}

impl NcPolynomial {
    pub fn zero(d: usize, m: usize) -> Self {
        Self {
            d,
            m,
            terms: BTreeMap::new(),
        }
    }

    /// The single word `w` with coefficient 1.
    pub fn word(d: usize, w: Word) -> Result<Self> {
        let mut p = Self::zero(d, w.len());
        p.add_term(w, Rational::one())?;
        Ok(p)
    }

    pub fn from_terms<I>(d: usize, m: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Word, Rational)>,
    {
        let mut p = Self::zero(d, m);
        for (w, c) in terms {
            p.add_term(w, c)?;
        }
        Ok(p)
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, w: &[usize]) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, w: Word, c: Rational) -> Result<()> {
        if w.len() != self.m {
            return Err(Error::WordLength {
                expected: self.m,
                got: w.len(),
            });
        }
        if let Some(&letter) = w.iter().find(|&&k| k > self.d) {
            return Err(Error::LetterOutOfRange { letter, d: self.d });
        }
        self.add_unchecked(w, c);
        Ok(())
    }

    pub(crate) fn add_unchecked(&mut self, w: Word, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn add(&mut self, other: &NcPolynomial) -> Result<()> {
        if (self.d, self.m) != (other.d, other.m) {
            return Err(Error::ShapeMismatch((self.m, self.d), (other.m, other.d)));
        }
        for (w, c) in &other.terms {
            self.add_unchecked(w.clone(), c.clone());
        }
        Ok(())
    }

    pub fn scaled(&self, c: &Rational) -> NcPolynomial {
        let mut out = NcPolynomial::zero(self.d, self.m);
        for (w, x) in &self.terms {
            out.add_unchecked(w.clone(), x * c);
        }
        out
    }

    /// Lexicographically greatest word with letter order `a_d > ... > a_0`.
    pub fn leading_term(&self) -> Result<(&Word, &Rational)> {
        self.terms.iter().next_back().ok_or(Error::ZeroPolynomial)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&PolynomialJson::from(self)).expect("serialisable")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: PolynomialJson = serde_json::from_str(text)?;
        raw.try_into()
    }
}

/// Leading word of a nonzero polynomial.
pub fn leading_term(p: &NcPolynomial) -> Result<Word> {
    p.leading_term().map(|(w, _)| w.clone())
}

impl fmt::Display for NcPolynomial {
    /// Terms in decreasing word order, e.g. `a2·a0 − 2·a1·a1 + a0·a2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => write!(f, "−")?,
                (0, false) => {}
                (_, true) => write!(f, " − ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs = c.abs();
            let word = if w.is_empty() {
                "1".to_string()
            } else {
                w.iter()
                    .map(|k| format!("a{k}"))
                    .collect::<Vec<_>>()
                    .join("·")
            };
            if abs.is_one() {
                write!(f, "{word}")?;
            } else if w.is_empty() {
                write!(f, "{abs}")?;
            } else {
                write!(f, "{abs}·{word}")?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct PolynomialJson {
    d: usize,
    m: usize,
    terms: Vec<PolyTermJson>,
}

#[derive(Serialize, Deserialize)]
struct PolyTermJson {
    word: Word,
    coeff: String,
}

impl From<&NcPolynomial> for PolynomialJson {
    fn from(p: &NcPolynomial) -> Self {
        PolynomialJson {
            d: p.d,
            m: p.m,
            terms: p
                .terms
                .iter()
                .rev()
                .map(|(w, c)| PolyTermJson {
                    word: w.clone(),
                    coeff: c.to_string(),
                })
                .collect(),
        }
    }
}

impl TryFrom<PolynomialJson> for NcPolynomial {
    type Error = Error;

    fn try_from(raw: PolynomialJson) -> Result<Self> {
        let mut p = NcPolynomial::zero(raw.d, raw.m);
        for t in raw.terms {
            let c: Rational = t
                .coeff
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad rational {:?}", t.coeff)))?;
            p.add_term(t.word, c)?;
        }
        Ok(p)
    }
}

/// Expands `∏ (η_{i1} η_{j2} − η_{i2} η_{j1})` over the chords and reads each
/// η-monomial `∏ η_{i1}^{s_i} η_{i2}^{d-s_i}` as the word `a_{s_1} ⋯ a_{s_m}`.
pub fn restitution(b: &BracketMonomial) -> NcPolynomial {
    let m = b.m();
    // η_{i1}-exponents per symbol; η_{i2} exponents are d - s_i
    let mut expansion: BTreeMap<Vec<usize>, BigInt> = BTreeMap::new();
    expansion.insert(vec![0; m], BigInt::from(b.sign()));
    for (i, j) in b.brackets() {
        let mut next: BTreeMap<Vec<usize>, BigInt> = BTreeMap::new();
        for (s, c) in expansion {
            let mut first = s.clone();
            first[i - 1] += 1;
            *next.entry(first).or_default() += &c;
            let mut second = s;
            second[j - 1] += 1;
            *next.entry(second).or_default() -= c;
        }
        next.retain(|_, c| !c.is_zero());
        expansion = next;
    }
    let mut p = NcPolynomial::zero(b.d(), m);
    for (s, c) in expansion {
        p.add_unchecked(s, Rational::from_integer(c));
    }
    p
}

/// Linear extension of [`restitution`].
pub fn restitute_expression(e: &BracketExpression) -> NcPolynomial {
    let mut p = NcPolynomial::zero(e.d(), e.m());
    for (b, c) in e.monomials() {
        p.add(&restitution(&b).scaled(c)).expect("same shape");
    }
    p
}

/// For a noncrossing diagram: the `k`-th letter is the number of chords
/// leaving interval `k` to the right.
pub fn predicted_leading_word(b: &BracketMonomial) -> Result<Word> {
    if b.crossing_count() != 0 {
        return Err(Error::Crossing);
    }
    let mut word = vec![0; b.m()];
    for (i, _) in b.brackets() {
        word[i - 1] += 1;
    }
    Ok(word)
}

/// Pairings whose first and last slot are joined (a single outer block).
pub fn is_irreducible(chords: &PairPartition) -> bool {
    let n = chords.n();
    n == 0 || chords.chords().any(|(p, q)| p == 1 && q == n)
}

/// Basis of the invariant `m`-linear forms, one element per `m`-partite
/// noncrossing pairing, paired with the pairing it came from.
pub fn noncrossing_basis_with_pairings(m: usize, d: usize) -> Vec<(PairPartition, NcPolynomial)> {
    enumerate_m_partite_nc_pairings(m, d)
        .into_iter()
        .map(|pairing| {
            let b = BracketMonomial::from_pairing(m, d, pairing.clone())
                .expect("enumerated pairings are m-partite");
            (pairing, restitution(&b))
        })
        .collect()
}

pub fn noncrossing_basis(m: usize, d: usize) -> Vec<NcPolynomial> {
    noncrossing_basis_with_pairings(m, d)
        .into_iter()
        .map(|(_, p)| p)
        .collect()
}

/// Symmetric multilinear form of a degree-`d` homogeneous map:
/// `(1/d!) Σ_{I ⊆ [d]} (−1)^{d−|I|} f(Σ_{i∈I} v_i)`.
pub fn polarize<F>(f: F, d: usize, vectors: &[Vec<Rational>]) -> Rational
where
    F: Fn(&[Rational]) -> Rational,
{
    assert_eq!(vectors.len(), d, "polarization takes exactly d vectors");
    let dim = vectors.first().map_or(0, Vec::len);
    let mut total = Rational::zero();
    for mask in 0u64..(1u64 << d) {
        let mut sum = vec![Rational::zero(); dim];
        for (i, v) in vectors.iter().enumerate() {
            if mask >> i & 1 == 1 {
                for (s, x) in sum.iter_mut().zip(v) {
                    *s += x;
                }
            }
        }
        let value = f(&sum);
        if (d - mask.count_ones() as usize).is_multiple_of(2) {
            total += value;
        } else {
            total -= value;
        }
    }
    let factorial: BigInt = (1..=d).map(BigInt::from).product();
    total / Rational::from_integer(factorial)
}

/// Crossing count of a diagram, exposed for callers that only hold pairings.
pub fn diagram_crossings(chords: &PairPartition) -> usize {
    chord_crossings(&chords.chords().collect::<Vec<_>>())
}
