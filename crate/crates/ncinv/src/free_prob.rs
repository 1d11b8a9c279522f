//! Free cumulants and moments of a single noncommutative random variable,
//! summed explicitly over `NC(n)`.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::{for_each_nc, nc_moebius_to_top, SetPartition};
use crate::Rational;

/// Free cumulants `c_k`, `k ≥ 1`, given by rule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CumulantSequence {
    /// `c_2 = 1`, all others zero.
    Semicircle,
    /// All `c_k = 1`.
    FreePoisson,
    /// `c_1, c_2, ...` explicitly; cumulants past the end are zero.
    Table(Vec<Rational>),
}

impl CumulantSequence {
    pub fn get(&self, k: usize) -> Rational {
        match self {
            CumulantSequence::Semicircle => Rational::from_integer(((k == 2) as i64).into()),
            CumulantSequence::FreePoisson => Rational::one(),
            CumulantSequence::Table(values) => match k {
                0 => Rational::zero(),
                _ => values.get(k - 1).cloned().unwrap_or_else(Rational::zero),
            },
        }
    }

    /// `∏_{B ∈ σ} c_{|B|}`.
    pub fn product(&self, blocks: &[usize]) -> Rational {
        let mut acc = Rational::one();
        for &size in blocks {
            let c = self.get(size);
            if c.is_zero() {
                return c;
            }
            acc *= c;
        }
        acc
    }
}

impl FromStr for CumulantSequence {
    type Err = Error;

    /// `semicircle`, `free-poisson`, or `table:[c1,c2,...]` with rational
    /// entries (quotes optional).
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "semicircle" => Ok(CumulantSequence::Semicircle),
            "free-poisson" => Ok(CumulantSequence::FreePoisson),
            other => {
                let body = other
                    .strip_prefix("table:")
                    .ok_or_else(|| Error::Parse(format!("unknown cumulant rule {other:?}")))?;
                let inner = body
                    .trim()
                    .strip_prefix('[')
                    .and_then(|b| b.strip_suffix(']'))
                    .ok_or_else(|| Error::Parse(format!("expected [..] in {other:?}")))?;
                let values = inner
                    .split(',')
                    .map(str::trim)
                    .filter(|t| !t.is_empty())
                    .map(|t| {
                        t.trim_matches('"')
                            .parse::<Rational>()
                            .map_err(|_| Error::Parse(format!("bad rational {t:?}")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(CumulantSequence::Table(values))
            }
        }
    }
}

impl fmt::Display for CumulantSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CumulantSequence::Semicircle => write!(f, "semicircle"),
            CumulantSequence::FreePoisson => write!(f, "free-poisson"),
            CumulantSequence::Table(values) => {
                let items: Vec<String> = values.iter().map(|v| v.to_string()).collect();
                write!(f, "table:[{}]", items.join(","))
            }
        }
    }
}

/// Moments `m_0 = 1, m_1, ..., m_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MomentSequence {
    values: Vec<Rational>,
}

impl MomentSequence {
    pub fn new(values: Vec<Rational>) -> Result<Self> {
        if values.first().is_none_or(|m0| !m0.is_one()) {
            return Err(Error::MomentNormalization);
        }
        Ok(Self { values })
    }

    pub fn get(&self, k: usize) -> Result<&Rational> {
        self.values.get(k).ok_or(Error::MomentOutOfRange(k))
    }

    /// Highest available order.
    pub fn order(&self) -> usize {
        self.values.len() - 1
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }
}

fn block_sizes(labels: &[usize]) -> Vec<usize> {
    let mut sizes = Vec::new();
    for &l in labels {
        if l >= sizes.len() {
            sizes.resize(l + 1, 0);
        }
        sizes[l] += 1;
    }
    sizes
}

/// `m_k = Σ_{σ ∈ NC(k)} ∏_{B ∈ σ} c_{|B|}` for `k = 0..=n`.
pub fn moments_from_cumulants(c: &CumulantSequence, n: usize) -> MomentSequence {
    let values = (0..=n)
        .map(|k| {
            let mut total = Rational::zero();
            for_each_nc(k, |labels| total += c.product(&block_sizes(labels)));
            total
        })
        .collect();
    MomentSequence { values }
}

/// Möbius inversion `c_k = Σ_{σ ∈ NC(k)} μ(σ, 1̂_k) ∏_{B ∈ σ} m_{|B|}` for
/// `k = 1..=n`, returned as a table.
pub fn cumulants_from_moments(m: &MomentSequence, n: usize) -> Result<CumulantSequence> {
    if n > m.order() {
        return Err(Error::MomentOutOfRange(n));
    }
    let mut table = Vec::with_capacity(n);
    for k in 1..=n {
        let mut total = Rational::zero();
        for (sigma, mu) in nc_moebius_to_top(k) {
            total += partitioned_moment(&sigma, m)? * Rational::from_integer(mu.into());
        }
        table.push(total);
    }
    Ok(CumulantSequence::Table(table))
}

/// `φ_π(X, ..., X) = ∏_{B ∈ π} m_{|B|}`.
pub fn partitioned_moment(pi: &SetPartition, m: &MomentSequence) -> Result<Rational> {
    let mut acc = Rational::one();
    for block in pi.blocks() {
        acc *= m.get(block.len())?;
    }
    Ok(acc)
}

/// `Σ ∏ c_{|B|}` over `σ ∈ NC(k_1 + ... + k_m)` whose blocks meet each of
/// the consecutive intervals of lengths `k_i` at most once.
pub fn psi_mixed_moment(k: &[usize], c: &CumulantSequence) -> Rational {
    let n: usize = k.iter().sum();
    let mut interval = Vec::with_capacity(n);
    for (i, &len) in k.iter().enumerate() {
        interval.extend(std::iter::repeat_n(i, len));
    }
    let mut total = Rational::zero();
    for_each_nc(n, |labels| {
        // σ ∧ interval partition = 0̂ iff no block revisits an interval
        let mut seen = std::collections::HashSet::with_capacity(n);
        if labels
            .iter()
            .zip(&interval)
            .all(|(&b, &i)| seen.insert((b, i)))
        {
            total += c.product(&block_sizes(labels));
        }
    });
    total
}

/// `φ(ψ_m ψ_n)` for a centered variable; equals `δ_{mn} c_2^n`.
pub fn psi_orthogonality(m: usize, n: usize, c: &CumulantSequence) -> Result<Rational> {
    let c1 = c.get(1);
    if !c1.is_zero() {
        return Err(Error::NotCentered(c1));
    }
    let k: Vec<usize> = [m, n].into_iter().filter(|&x| x > 0).collect();
    Ok(psi_mixed_moment(&k, c))
}
