//! Bracket monomials `∏ ⟨y_i y_j⟩` drawn as chord diagrams on `[md]`, and
//! their rewriting into noncrossing diagrams via the Plücker relation
//! `⟨13⟩⟨24⟩ = ⟨12⟩⟨34⟩ + ⟨14⟩⟨23⟩`.
//!
//! Slot `(i-1)d + k` is the `k`-th occurrence of symbol `y_i`. Chords are
//! stored with `p < q` and read as `⟨y_{sym(p)} y_{sym(q)}⟩`; orientation
//! signs live on the monomial, or on the coefficient inside an expression.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{chord_crossings, is_m_partite, PairPartition};
use crate::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BracketMonomial {
    m: usize,
    d: usize,
    chords: PairPartition,
    sign: i8,
}

fn check_m_partite(m: usize, d: usize, chords: &PairPartition) -> Result<()> {
    if chords.n() != m * d {
        return Err(Error::NotPerfectMatching(format!(
            "pairing on {} points, expected m*d = {}",
            chords.n(),
            m * d
        )));
    }
    if chords.n() == 0 {
        return Ok(());
    }
    if !is_m_partite(chords, d)? {
        let (p, q) = chords
            .chords()
            .find(|&(p, q)| (p - 1) / d == (q - 1) / d)
            .expect("a non-m-partite pairing has an inner chord");
        return Err(Error::VanishingBracket(p, q));
    }
    Ok(())
}

impl BracketMonomial {
    /// Builds a monomial from oriented slot pairs; each pair given as
    /// `(q, p)` with `q > p` contributes a factor `-1`.
    pub fn from_pairs(m: usize, d: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        for &(p, q) in pairs {
            if p != q && d > 0 && p >= 1 && q >= 1 && (p - 1) / d == (q - 1) / d {
                return Err(Error::VanishingBracket(p.min(q), p.max(q)));
            }
        }
        let chords = PairPartition::from_pairs(m * d, pairs)?;
        check_m_partite(m, d, &chords)?;
        let reversed = pairs.iter().filter(|(p, q)| p > q).count();
        let sign = if reversed % 2 == 0 { 1 } else { -1 };
        Ok(Self { m, d, chords, sign })
    }

    /// Positively oriented monomial of an `m`-partite pairing.
    pub fn from_pairing(m: usize, d: usize, chords: PairPartition) -> Result<Self> {
        check_m_partite(m, d, &chords)?;
        Ok(Self {
            m,
            d,
            chords,
            sign: 1,
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn chords(&self) -> &PairPartition {
        &self.chords
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    /// 1-based symbol index owning `slot`.
    pub fn symbol_of(&self, slot: usize) -> usize {
        (slot - 1) / self.d + 1
    }

    /// The bracket factors as symbol index pairs.
    pub fn brackets(&self) -> Vec<(usize, usize)> {
        self.chords
            .chords()
            .map(|(p, q)| (self.symbol_of(p), self.symbol_of(q)))
            .collect()
    }

    pub fn crossing_count(&self) -> usize {
        chord_crossings(&self.chord_list())
    }

    pub fn nesting_count(&self) -> usize {
        nestings(&self.chord_list()).len()
    }

    fn chord_list(&self) -> Vec<(usize, usize)> {
        self.chords.chords().collect()
    }
}

/// Signed rational combination of bracket monomials sharing `(m, d)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BracketExpression {
    m: usize,
    d: usize,
    terms: BTreeMap<PairPartition, Rational>,
}

impl BracketExpression {
    pub fn zero(m: usize, d: usize) -> Self {
        Self {
            m,
            d,
            terms: BTreeMap::new(),
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PairPartition, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, chords: &PairPartition) -> Rational {
        self.terms
            .get(chords)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Every term is a noncrossing diagram.
    pub fn is_noncrossing(&self) -> bool {
        self.terms
            .keys()
            .all(|c| chord_crossings(&c.chords().collect::<Vec<_>>()) == 0)
    }

    pub fn add_monomial(&mut self, b: &BracketMonomial, coeff: &Rational) -> Result<()> {
        if (b.m, b.d) != (self.m, self.d) {
            return Err(Error::ShapeMismatch((self.m, self.d), (b.m, b.d)));
        }
        let c = if b.sign < 0 { -coeff } else { coeff.clone() };
        self.add_raw(b.chords.clone(), c);
        Ok(())
    }

    pub fn add(&mut self, other: &BracketExpression) -> Result<()> {
        if (other.m, other.d) != (self.m, self.d) {
            return Err(Error::ShapeMismatch((self.m, self.d), (other.m, other.d)));
        }
        for (chords, c) in &other.terms {
            self.add_raw(chords.clone(), c.clone());
        }
        Ok(())
    }

    fn add_raw(&mut self, chords: PairPartition, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(chords) {
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// Monomials with their signs folded into the coefficient (all `+1`).
    pub fn monomials(&self) -> impl Iterator<Item = (BracketMonomial, &Rational)> {
        self.terms.iter().map(move |(chords, c)| {
            (
                BracketMonomial {
                    m: self.m,
                    d: self.d,
                    chords: chords.clone(),
                    sign: 1,
                },
                c,
            )
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&ExpressionJson::from(self)).expect("serialisable")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: ExpressionJson = serde_json::from_str(text)?;
        raw.try_into()
    }
}

impl From<&BracketMonomial> for BracketExpression {
    fn from(b: &BracketMonomial) -> Self {
        let mut e = BracketExpression::zero(b.m, b.d);
        e.add_monomial(b, &Rational::one()).expect("same shape");
        e
    }
}

#[derive(Serialize, Deserialize)]
struct ExpressionJson {
    m: usize,
    d: usize,
    terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    coeff: String,
    chords: Vec<[usize; 2]>,
    #[serde(default = "plus")]
    sign: i8,
}

fn plus() -> i8 {
    1
}

impl From<&BracketExpression> for ExpressionJson {
    fn from(e: &BracketExpression) -> Self {
        ExpressionJson {
            m: e.m,
            d: e.d,
            terms: e
                .terms
                .iter()
                .map(|(chords, c)| TermJson {
                    coeff: c.to_string(),
                    chords: chords.chords().map(|(p, q)| [p, q]).collect(),
                    sign: 1,
                })
                .collect(),
        }
    }
}

impl TryFrom<ExpressionJson> for BracketExpression {
    type Error = Error;

    fn try_from(raw: ExpressionJson) -> Result<Self> {
        let mut e = BracketExpression::zero(raw.m, raw.d);
        for term in raw.terms {
            let coeff: Rational = term
                .coeff
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad rational {:?}", term.coeff)))?;
            if term.sign != 1 && term.sign != -1 {
                return Err(Error::Parse(format!(
                    "sign must be 1 or -1, got {}",
                    term.sign
                )));
            }
            let pairs: Vec<(usize, usize)> = term.chords.iter().map(|c| (c[0], c[1])).collect();
            if 2 * pairs.len() != raw.m * raw.d {
                return Err(Error::ShapeMismatch(
                    (raw.m, raw.d),
                    (usize::MAX, 2 * pairs.len()),
                ));
            }
            let b = BracketMonomial::from_pairs(raw.m, raw.d, &pairs)?;
            let c = if term.sign < 0 { -coeff } else { coeff };
            e.add_monomial(&b, &c)?;
        }
        Ok(e)
    }
}

/// Crossing quadruples `(i, i', j, j')` with chords `{i, j}`, `{i', j'}`,
/// sorted lexicographically.
pub fn crossings(chords: &PairPartition) -> Vec<[usize; 4]> {
    let list: Vec<(usize, usize)> = chords.chords().collect();
    let mut out = Vec::new();
    for &(i, j) in &list {
        for &(ip, jp) in &list {
            if i < ip && ip < j && j < jp {
                out.push([i, ip, j, jp]);
            }
        }
    }
    out.sort_unstable();
    out
}

fn nestings(chords: &[(usize, usize)]) -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for &(a, b) in chords {
        for &(c, e) in chords {
            if a < c && e < b {
                out.push([a, c, e, b]);
            }
        }
    }
    out.sort_unstable();
    out
}

/// Replaces two chords of `b` by new ones, dropping the term if a new chord
/// joins two slots of the same symbol.
fn replace_pair(
    b: &BracketMonomial,
    old: [(usize, usize); 2],
    new: [(usize, usize); 2],
    coeff: i64,
    out: &mut BracketExpression,
) {
    if new.iter().any(|&(p, q)| b.symbol_of(p) == b.symbol_of(q)) {
        return;
    }
    let pairs: Vec<(usize, usize)> = b
        .chords
        .chords()
        .filter(|c| !old.contains(c))
        .chain(new)
        .collect();
    let chords = PairPartition::from_pairs(b.chords.n(), &pairs).expect("still a matching");
    out.add_raw(
        chords,
        Rational::from_integer((coeff * b.sign as i64).into()),
    );
}

/// Applies the Plücker relation at the given crossing `(i, i', j, j')`.
pub fn resolve_crossing(b: &BracketMonomial, quad: [usize; 4]) -> BracketExpression {
    let [i, ip, j, jp] = quad;
    let mut out = BracketExpression::zero(b.m, b.d);
    let old = [(i, j), (ip, jp)];
    replace_pair(b, old, [(i, ip), (j, jp)], 1, &mut out);
    replace_pair(b, old, [(i, jp), (ip, j)], 1, &mut out);
    let before = b.crossing_count();
    for (chords, _) in out.terms() {
        let after = chord_crossings(&chords.chords().collect::<Vec<_>>());
        assert!(
            after < before,
            "crossing removal did not decrease crossings ({before} -> {after})"
        );
    }
    out
}

/// One Plücker rewrite at the lexicographically smallest crossing, or `None`
/// if `b` is already noncrossing.
pub fn pluecker_step(b: &BracketMonomial) -> Option<BracketExpression> {
    crossings(&b.chords)
        .first()
        .map(|&quad| resolve_crossing(b, quad))
}

/// Rewrites `e` into a combination of noncrossing diagrams, always resolving
/// the lexicographically smallest crossing.
pub fn to_noncrossing(e: &BracketExpression) -> BracketExpression {
    to_noncrossing_with(e, |_| 0)
}

/// Like [`to_noncrossing`], with `choose` picking which of the (sorted)
/// crossings of a diagram to resolve.
pub fn to_noncrossing_with<F>(e: &BracketExpression, mut choose: F) -> BracketExpression
where
    F: FnMut(&[[usize; 4]]) -> usize,
{
    let mut result = BracketExpression::zero(e.m, e.d);
    // keyed by crossing count so every diagram is expanded at most once
    let mut pending: BTreeMap<(usize, PairPartition), Rational> = BTreeMap::new();
    for (chords, c) in &e.terms {
        let count = chord_crossings(&chords.chords().collect::<Vec<_>>());
        *pending
            .entry((count, chords.clone()))
            .or_insert_with(Rational::zero) += c;
    }
    while let Some(((count, chords), coeff)) = pending.pop_last() {
        if coeff.is_zero() {
            continue;
        }
        if count == 0 {
            result.add_raw(chords, coeff);
            continue;
        }
        let b = BracketMonomial {
            m: e.m,
            d: e.d,
            chords,
            sign: 1,
        };
        let options = crossings(&b.chords);
        let pick = choose(&options).min(options.len() - 1);
        for (new, c) in resolve_crossing(&b, options[pick]).terms {
            let k = chord_crossings(&new.chords().collect::<Vec<_>>());
            *pending.entry((k, new)).or_insert_with(Rational::zero) += &coeff * c;
        }
    }
    result
}

/// One straightening step `⟨14⟩⟨23⟩ = ⟨13⟩⟨24⟩ - ⟨12⟩⟨34⟩` at the
/// lexicographically smallest nesting `(a, c, e, b)` (chord `{c, e}` inside
/// `{a, b}`), or `None` if no chords are nested.
pub fn straighten_step(b: &BracketMonomial) -> Option<BracketExpression> {
    let chords: Vec<(usize, usize)> = b.chords.chords().collect();
    let [a, c, e, end] = *nestings(&chords).first()?;
    let mut out = BracketExpression::zero(b.m, b.d);
    let old = [(a, end), (c, e)];
    replace_pair(b, old, [(a, e), (c, end)], 1, &mut out);
    replace_pair(b, old, [(a, c), (e, end)], -1, &mut out);
    Some(out)
}

/// Sum of absolute coefficients; handy for reporting expression growth.
pub fn coefficient_mass(e: &BracketExpression) -> Rational {
    e.terms.values().map(|c| c.abs()).sum()
}
