//! Exact `SL(2, Q)` action on binary forms and on noncommutative polynomials.
//!
//! A binary form `Σ binom(d,k) ξ_k X^k Y^{d-k}` is stored as its coefficient
//! vector `(ξ_0, ..., ξ_d)`. `g` acts by `(g·F)(v) = F(g⁻¹ v)`, and on the
//! dual letters `a_k` through the transpose of `M_d(g⁻¹)`.

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::symbolic::NcPolynomial;
use crate::Rational;

/// The 2×2 matrix `[[a, b], [c, e]]` with determinant 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupElement {
    a: Rational,
    b: Rational,
    c: Rational,
    e: Rational,
}

fn int(k: i64) -> Rational {
    Rational::from_integer(BigInt::from(k))
}

impl GroupElement {
    pub fn new(a: Rational, b: Rational, c: Rational, e: Rational) -> Result<Self> {
        let det = &a * &e - &b * &c;
        if !det.is_one() {
            return Err(Error::Determinant(det));
        }
        Ok(Self { a, b, c, e })
    }

    /// Parses four rational strings such as `"1" "1/2" "0" "1"`.
    pub fn parse(entries: &[&str]) -> Result<Self> {
        let [a, b, c, e] = entries else {
            return Err(Error::Parse(format!(
                "expected 4 entries, got {}",
                entries.len()
            )));
        };
        let p = |s: &str| -> Result<Rational> {
            s.trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad rational {s:?}")))
        };
        Self::new(p(a)?, p(b)?, p(c)?, p(e)?)
    }

    pub fn identity() -> Self {
        Self::new(int(1), int(0), int(0), int(1)).unwrap()
    }

    /// `[[1, t], [0, 1]]`
    pub fn upper_shear(t: Rational) -> Self {
        Self::new(int(1), t, int(0), int(1)).unwrap()
    }

    /// `[[1, 0], [t, 1]]`
    pub fn lower_shear(t: Rational) -> Self {
        Self::new(int(1), int(0), t, int(1)).unwrap()
    }

    /// `[[t, 0], [0, 1/t]]`
    pub fn diagonal(t: Rational) -> Self {
        let inv = t.recip();
        Self::new(t, int(0), int(0), inv).unwrap()
    }

    pub fn entries(&self) -> [&Rational; 4] {
        [&self.a, &self.b, &self.c, &self.e]
    }

    pub fn mul(&self, other: &GroupElement) -> GroupElement {
        GroupElement {
            a: &self.a * &other.a + &self.b * &other.c,
            b: &self.a * &other.b + &self.b * &other.e,
            c: &self.c * &other.a + &self.e * &other.c,
            e: &self.c * &other.b + &self.e * &other.e,
        }
    }

    pub fn inverse(&self) -> GroupElement {
        GroupElement {
            a: self.e.clone(),
            b: -&self.b,
            c: -&self.c,
            e: self.a.clone(),
        }
    }

    /// Pseudorandom element with small rational entries: a product of two
    /// shears and a diagonal matrix.
    pub fn random<R: Rng>(rng: &mut R) -> GroupElement {
        let mut small = |nonzero: bool| loop {
            let num: i64 = rng.gen_range(-5..=5);
            let den: i64 = rng.gen_range(1..=4);
            if !(nonzero && num == 0) {
                return Rational::new(num.into(), den.into());
            }
        };
        let s = small(false);
        let t = small(false);
        let r = small(true);
        Self::upper_shear(s)
            .mul(&Self::lower_shear(t))
            .mul(&Self::diagonal(r))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&GroupElementJson {
            a: self.a.to_string(),
            b: self.b.to_string(),
            c: self.c.to_string(),
            e: self.e.to_string(),
        })
        .expect("serialisable")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: GroupElementJson = serde_json::from_str(text)?;
        Self::parse(&[&raw.a, &raw.b, &raw.c, &raw.e])
    }
}

#[derive(Serialize, Deserialize)]
struct GroupElementJson {
    a: String,
    b: String,
    c: String,
    e: String,
}

/// The matrix `M_d(g)` with `ξ' = M_d(g) ξ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymPowerMatrix {
    d: usize,
    entries: Vec<Vec<Rational>>,
}

impl SymPowerMatrix {
    pub fn identity(d: usize) -> Self {
        let entries = (0..=d)
            .map(|i| (0..=d).map(|j| int((i == j) as i64)).collect())
            .collect();
        Self { d, entries }
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn entry(&self, row: usize, col: usize) -> &Rational {
        &self.entries[row][col]
    }

    pub fn mul(&self, other: &SymPowerMatrix) -> SymPowerMatrix {
        assert_eq!(self.d, other.d);
        let n = self.d + 1;
        let entries = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        (0..n)
                            .map(|k| &self.entries[i][k] * &other.entries[k][j])
                            .sum()
                    })
                    .collect()
            })
            .collect();
        SymPowerMatrix { d: self.d, entries }
    }

    /// Applies the matrix to a coefficient vector.
    pub fn apply(&self, xi: &[Rational]) -> Vec<Rational> {
        self.entries
            .iter()
            .map(|row| row.iter().zip(xi).map(|(m, x)| m * x).sum())
            .collect()
    }

    /// Determinant by fraction-exact Gaussian elimination.
    pub fn determinant(&self) -> Rational {
        let mut a = self.entries.clone();
        let n = a.len();
        let mut det = int(1);
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
                return int(0);
            };
            if pivot != col {
                a.swap(pivot, col);
                det = -det;
            }
            det *= &a[col][col];
            for r in col + 1..n {
                let factor = &a[r][col] / &a[col][col];
                for k in col..n {
                    let sub = &factor * &a[col][k];
                    a[r][k] -= sub;
                }
            }
        }
        det
    }
}

/// Multiplies two polynomials in `x` given by ascending coefficient lists.
fn poly_mul(p: &[Rational], q: &[Rational]) -> Vec<Rational> {
    let mut out = vec![int(0); p.len() + q.len() - 1];
    for (i, a) in p.iter().enumerate() {
        for (j, b) in q.iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    out
}

/// `M_d(g)`: substitutes `g⁻¹ (x, y)` into each weighted basis form
/// `binom(d,k) X^k Y^{d-k}` and reads coefficients back in the same basis.
pub fn sym_power(g: &GroupElement, d: usize) -> SymPowerMatrix {
    let inv = g.inverse();
    // dehomogenised in x: αx + β and γx + δ
    let first = [inv.b.clone(), inv.a.clone()];
    let second = [inv.e.clone(), inv.c.clone()];
    let mut entries = vec![vec![int(0); d + 1]; d + 1];
    for k in 0..=d {
        let mut prod = vec![int(1)];
        for _ in 0..k {
            prod = poly_mul(&prod, &first);
        }
        for _ in k..d {
            prod = poly_mul(&prod, &second);
        }
        let weight_k = Rational::from_integer(binomial(BigInt::from(d), BigInt::from(k)));
        for (j, coeff) in prod.into_iter().enumerate() {
            let weight_j = Rational::from_integer(binomial(BigInt::from(d), BigInt::from(j)));
            entries[j][k] = coeff * &weight_k / weight_j;
        }
    }
    SymPowerMatrix { d, entries }
}

/// `g · P`: every letter `a_k` becomes `Σ_j M_d(g⁻¹)_{kj} a_j`, applied one
/// word position at a time.
pub fn act(g: &GroupElement, p: &NcPolynomial) -> NcPolynomial {
    let d = p.d();
    let subst = sym_power(&g.inverse(), d);
    let mut current: Vec<(Vec<usize>, Rational)> =
        p.terms().map(|(w, c)| (w.clone(), c.clone())).collect();
    for pos in 0..p.m() {
        let mut next = NcPolynomial::zero(d, p.m());
        for (w, c) in &current {
            let k = w[pos];
            for (j, coeff) in subst.entries[k].iter().enumerate() {
                if coeff.is_zero() {
                    continue;
                }
                let mut word = w.clone();
                word[pos] = j;
                next.add_unchecked(word, c * coeff);
            }
        }
        current = next.terms().map(|(w, c)| (w.clone(), c.clone())).collect();
    }
    NcPolynomial::from_terms(d, p.m(), current).expect("letters stay in range")
}

/// The two unit shears, `diag(2, 1/2)`, and `random` seeded pseudorandom
/// elements.
pub fn default_witnesses(random: usize, seed: u64) -> Vec<GroupElement> {
    let mut out = vec![
        GroupElement::upper_shear(int(1)),
        GroupElement::lower_shear(int(1)),
        GroupElement::diagonal(int(2)),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    out.extend((0..random).map(|_| GroupElement::random(&mut rng)));
    out
}

/// Whether `act(g, p) == p` exactly for every witness.
pub fn is_invariant(p: &NcPolynomial, witnesses: &[GroupElement]) -> Result<bool> {
    for g in witnesses {
        let det = &g.a * &g.e - &g.b * &g.c;
        if !det.is_one() {
            return Err(Error::Determinant(det));
        }
    }
    Ok(witnesses.iter().all(|g| act(g, p) == *p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbolic::noncrossing_basis;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn construction_checks_determinant() {
        assert!(matches!(
            GroupElement::new(int(1), int(1), int(1), int(1)),
            Err(Error::Determinant(_))
        ));
        let g = GroupElement::parse(&["2", "1/3", "3", "1"]).unwrap();
        assert_eq!(g.mul(&g.inverse()), GroupElement::identity());
        assert!(GroupElement::parse(&["1", "x", "0", "1"]).is_err());
        assert!(GroupElement::parse(&["1", "0", "1"]).is_err());
    }

    #[test]
    fn identity_acts_trivially() {
        for d in 0..=5 {
            assert_eq!(
                sym_power(&GroupElement::identity(), d),
                SymPowerMatrix::identity(d)
            );
        }
    }

    #[test]
    fn degree_one_is_inverse_transpose() {
        let g = GroupElement::parse(&["2", "3/5", "5", "2"]).unwrap();
        let m = sym_power(&g, 1);
        let inv = g.inverse();
        // (ξ_0, ξ_1) are the (y, x) coefficients; g⁻ᵀ acts on (x, y)
        assert_eq!(m.entry(1, 1), &inv.a);
        assert_eq!(m.entry(1, 0), &inv.c);
        assert_eq!(m.entry(0, 1), &inv.b);
        assert_eq!(m.entry(0, 0), &inv.e);
    }

    #[test]
    fn sym_power_matches_direct_evaluation() {
        // (g·F)(v) = F(g⁻¹ v) at a sample point
        let g = GroupElement::parse(&["1", "2", "1/2", "2"]).unwrap();
        let d = 3;
        let xi = vec![q(1, 1), q(-2, 3), q(5, 1), q(1, 7)];
        let eval = |xi: &[Rational], x: &Rational, y: &Rational| -> Rational {
            (0..=d)
                .map(|k| {
                    let w = Rational::from_integer(binomial(BigInt::from(d), BigInt::from(k)));
                    let mut t = w * &xi[k];
                    for _ in 0..k {
                        t *= x;
                    }
                    for _ in k..d {
                        t *= y;
                    }
                    t
                })
                .sum()
        };
        let moved = sym_power(&g, d).apply(&xi);
        let (x, y) = (q(3, 2), q(-1, 5));
        let inv = g.inverse();
        let (gx, gy) = (&inv.a * &x + &inv.b * &y, &inv.c * &x + &inv.e * &y);
        assert_eq!(eval(&moved, &x, &y), eval(&xi, &gx, &gy));
    }

    #[test]
    fn sym_power_is_a_representation() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for d in 0..=5 {
            for _ in 0..3 {
                let g = GroupElement::random(&mut rng);
                let h = GroupElement::random(&mut rng);
                assert_eq!(
                    sym_power(&g, d).mul(&sym_power(&h, d)),
                    sym_power(&g.mul(&h), d)
                );
                assert_eq!(
                    sym_power(&g, d).mul(&sym_power(&g.inverse(), d)),
                    SymPowerMatrix::identity(d)
                );
                assert_eq!(sym_power(&g, d).determinant(), int(1));
            }
        }
    }

    #[test]
    fn act_axioms() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let p = NcPolynomial::from_terms(
            2,
            3,
            [
                (vec![2, 0, 1], q(3, 2)),
                (vec![0, 0, 0], q(-1, 1)),
                (vec![1, 2, 2], q(1, 3)),
            ],
        )
        .unwrap();
        assert_eq!(act(&GroupElement::identity(), &p), p);
        let g = GroupElement::random(&mut rng);
        let h = GroupElement::random(&mut rng);
        let gp = act(&g, &p);
        assert_eq!(gp.m(), 3);
        assert_eq!(act(&g.mul(&h), &p), act(&g, &act(&h, &p)));
    }

    #[test]
    fn discriminant_is_invariant() {
        let disc = &noncrossing_basis(2, 2)[0];
        assert_eq!(act(&GroupElement::upper_shear(int(1)), disc), *disc);
        assert!(is_invariant(disc, &default_witnesses(5, 0)).unwrap());
    }

    #[test]
    fn non_invariants_are_rejected() {
        for d in 1..=4 {
            let p = NcPolynomial::word(d, vec![0]).unwrap();
            assert!(!is_invariant(&p, &default_witnesses(0, 0)).unwrap());
        }
        let constant = NcPolynomial::word(3, vec![]).unwrap();
        assert!(is_invariant(&constant, &default_witnesses(5, 1)).unwrap());
        let bad = GroupElement {
            a: int(2),
            b: int(0),
            c: int(0),
            e: int(2),
        };
        assert!(matches!(
            is_invariant(&constant, &[bad]),
            Err(Error::Determinant(_))
        ));
    }

    #[test]
    fn witnesses_are_reproducible() {
        assert_eq!(default_witnesses(5, 7), default_witnesses(5, 7));
        assert_ne!(default_witnesses(5, 7), default_witnesses(5, 8));
        assert_eq!(default_witnesses(5, 7).len(), 8);
    }

    #[test]
    fn json_form() {
        let g = GroupElement::parse(&["2", "1/3", "3", "1"]).unwrap();
        let text = g.to_json();
        assert_eq!(text, r#"{"a":"2","b":"1/3","c":"3","e":"1"}"#);
        assert_eq!(GroupElement::from_json(&text).unwrap(), g);
    }
}
