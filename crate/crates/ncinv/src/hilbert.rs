//! Coefficients of the Hilbert–Poincaré series `H_d(z) = Σ dim_m z^m`,
//! computed three ways:
//!
//! * counting `m`-partite noncrossing pairings of `[md]`;
//! * exact semicircle moments `φ(U_d(X)^m)` of the dilated Chebyshev
//!   polynomial `U_d`, with `φ(X^{2k}) = C_k`;
//! * trapezoidal quadrature of `(2/π) ∫_0^π (sin((d+1)x) / sin x)^m sin²x dx`.

use std::f64::consts::PI;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::partition::{catalan, count_m_partite_nc_pairings};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Enumeration,
    Chebyshev,
    Quadrature,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Method::Enumeration => "enumeration",
            Method::Chebyshev => "chebyshev",
            Method::Quadrature => "quadrature",
        };
        f.write_str(name)
    }
}

/// Exact dimensions `dims[m]` for `m = 0..=max_m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimensionSeries {
    pub d: usize,
    pub method: Method,
    pub dims: Vec<BigInt>,
}

/// Quadrature approximations with a node-doubling error estimate per entry.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QuadratureSeries {
    pub d: usize,
    pub nodes: usize,
    pub values: Vec<f64>,
    pub error_estimates: Vec<f64>,
}

impl QuadratureSeries {
    pub fn method(&self) -> Method {
        Method::Quadrature
    }
}

/// One-variable polynomial with integer coefficients, ascending powers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(BigInt::zero());
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }

    pub fn pow(&self, e: usize) -> IntPolynomial {
        let mut acc = IntPolynomial::from_i64(&[1]);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// `x · self − other`
    fn shift_sub(&self, other: &IntPolynomial) -> IntPolynomial {
        let mut out = vec![BigInt::zero(); self.coeffs.len().max(other.coeffs.len()) + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i + 1] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] -= c;
        }
        IntPolynomial::new(out)
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }
}

/// `U_0 = 1`, `U_1 = x`, `U_n = x U_{n−1} − U_{n−2}`, so that
/// `U_n(2 cos θ) = sin((n+1)θ) / sin θ`.
pub fn chebyshev_poly(n: usize) -> IntPolynomial {
    let mut prev = IntPolynomial::from_i64(&[1]);
    if n == 0 {
        return prev;
    }
    let mut cur = IntPolynomial::from_i64(&[0, 1]);
    for _ in 1..n {
        let next = cur.shift_sub(&prev);
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

pub fn dims_by_enumeration(d: usize, max_m: usize) -> DimensionSeries {
    DimensionSeries {
        d,
        method: Method::Enumeration,
        dims: (0..=max_m)
            .map(|m| BigInt::from(count_m_partite_nc_pairings(m, d)))
            .collect(),
    }
}

/// Semicircle functional on a polynomial: `Σ_j coeff_j · φ(X^j)`.
fn semicircle_expectation(p: &IntPolynomial) -> BigInt {
    p.coeffs()
        .iter()
        .enumerate()
        .filter(|(j, _)| j % 2 == 0)
        .map(|(j, c)| c * BigInt::from(catalan(j / 2)))
        .sum()
}

pub fn dims_by_chebyshev(d: usize, max_m: usize) -> DimensionSeries {
    let u = chebyshev_poly(d);
    let mut power = IntPolynomial::from_i64(&[1]);
    let mut dims = Vec::with_capacity(max_m + 1);
    for m in 0..=max_m {
        if m > 0 {
            power = power.mul(&u);
        }
        dims.push(semicircle_expectation(&power));
    }
    DimensionSeries {
        d,
        method: Method::Chebyshev,
        dims,
    }
}

/// Composite trapezoidal rule with `panels` panels on `[0, π]`. The
/// integrand vanishes at both endpoints because of the `sin²x` factor.
pub fn molien_trapezoid(d: usize, m: usize, panels: usize) -> f64 {
    let u = chebyshev_poly(d);
    let h = PI / panels as f64;
    let sum: f64 = (1..panels)
        .map(|i| {
            let x = i as f64 * h;
            let s = x.sin();
            u.eval(2.0 * x.cos()).powi(m as i32) * s * s
        })
        .sum();
    2.0 / PI * h * sum
}

/// Quadrature at `nodes` panels; the error estimate is the change from
/// `nodes / 2` panels.
pub fn dims_by_quadrature(d: usize, max_m: usize, nodes: usize) -> QuadratureSeries {
    assert!(nodes >= 2, "quadrature needs at least two panels");
    let mut values = Vec::with_capacity(max_m + 1);
    let mut error_estimates = Vec::with_capacity(max_m + 1);
    for m in 0..=max_m {
        let fine = molien_trapezoid(d, m, nodes);
        let coarse = molien_trapezoid(d, m, nodes / 2);
        values.push(fine);
        error_estimates.push((fine - coarse).abs());
    }
    QuadratureSeries {
        d,
        nodes,
        values,
        error_estimates,
    }
}

/// Absolute quadrature errors against `exact` at `start, 2·start, ...`
/// panels, `doublings + 1` levels in total.
pub fn convergence_profile(
    d: usize,
    m: usize,
    exact: f64,
    start: usize,
    doublings: usize,
) -> Vec<(usize, f64)> {
    (0..=doublings)
        .map(|k| {
            let nodes = start << k;
            (nodes, (molien_trapezoid(d, m, nodes) - exact).abs())
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct ComparisonRow {
    pub m: usize,
    pub enumeration: BigInt,
    pub chebyshev: BigInt,
    pub quadrature: f64,
    pub abs_err: f64,
    pub exact_mismatch: bool,
    pub quadrature_flag: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ComparisonReport {
    pub d: usize,
    pub nodes: usize,
    pub tolerance: f64,
    pub rows: Vec<ComparisonRow>,
}

impl ComparisonReport {
    pub fn exact_mismatches(&self) -> usize {
        self.rows.iter().filter(|r| r.exact_mismatch).count()
    }

    pub fn quadrature_flags(&self) -> usize {
        self.rows.iter().filter(|r| r.quadrature_flag).count()
    }

    pub fn is_clean(&self) -> bool {
        self.exact_mismatches() == 0 && self.quadrature_flags() == 0
    }

    /// Columns `m,enum,cheb,quad,abs_err`; quadrature values printed with
    /// `precision` decimals.
    pub fn to_csv(&self, precision: usize) -> String {
        let mut out = String::from("m,enum,cheb,quad,abs_err\n");
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{},{:.prec$},{:.3e}\n",
                r.m,
                r.enumeration,
                r.chebyshev,
                r.quadrature,
                r.abs_err,
                prec = precision
            ));
        }
        out
    }
}

pub const DEFAULT_NODES: usize = 256;
pub const QUADRATURE_TOLERANCE: f64 = 1e-8;

pub fn compare_methods(d: usize, max_m: usize, nodes: usize) -> ComparisonReport {
    let enumeration = dims_by_enumeration(d, max_m);
    let chebyshev = dims_by_chebyshev(d, max_m);
    let quadrature = dims_by_quadrature(d, max_m, nodes);
    let rows = (0..=max_m)
        .map(|m| {
            let exact = enumeration.dims[m].to_f64().unwrap_or(f64::INFINITY);
            let abs_err = (quadrature.values[m] - exact).abs();
            ComparisonRow {
                m,
                enumeration: enumeration.dims[m].clone(),
                chebyshev: chebyshev.dims[m].clone(),
                quadrature: quadrature.values[m],
                abs_err,
                exact_mismatch: enumeration.dims[m] != chebyshev.dims[m],
                quadrature_flag: abs_err > QUADRATURE_TOLERANCE,
            }
        })
        .collect();
    ComparisonReport {
        d,
        nodes,
        tolerance: QUADRATURE_TOLERANCE,
        rows,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn chebyshev_polynomials() {
        assert_eq!(chebyshev_poly(0), IntPolynomial::from_i64(&[1]));
        assert_eq!(chebyshev_poly(1), IntPolynomial::from_i64(&[0, 1]));
        assert_eq!(chebyshev_poly(2), IntPolynomial::from_i64(&[-1, 0, 1]));
        assert_eq!(chebyshev_poly(3), IntPolynomial::from_i64(&[0, -2, 0, 1]));
    }

    #[test]
    fn chebyshev_trig_identity() {
        for n in 0..=8 {
            let u = chebyshev_poly(n);
            for &theta in &[0.3, 1.1, 2.0, 2.9] {
                let lhs = u.eval(2.0 * f64::cos(theta));
                let rhs = ((n + 1) as f64 * theta).sin() / theta.sin();
                assert!((lhs - rhs).abs() < 1e-9, "n = {n}, θ = {theta}");
            }
        }
    }

    #[test]
    fn enumeration_rows() {
        assert_eq!(dims_by_enumeration(1, 6).dims, ints(&[1, 0, 1, 0, 2, 0, 5]));
        assert_eq!(
            dims_by_enumeration(2, 7).dims,
            ints(&[1, 0, 1, 1, 3, 6, 15, 36])
        );
    }

    #[test]
    fn chebyshev_examples() {
        assert_eq!(dims_by_chebyshev(2, 2).dims[2], BigInt::from(1));
        assert_eq!(dims_by_chebyshev(3, 2).dims[2], BigInt::from(1));
        assert_eq!(
            dims_by_chebyshev(1, 8).dims,
            ints(&[1, 0, 1, 0, 2, 0, 5, 0, 14])
        );
    }

    #[test]
    fn quadrature_examples() {
        let q = dims_by_quadrature(2, 2, DEFAULT_NODES);
        assert!((q.values[2] - 1.0).abs() < 1e-8);
        assert!((q.values[0] - 1.0).abs() < 1e-12);
        let q = dims_by_quadrature(4, 4, DEFAULT_NODES);
        let exact = dims_by_enumeration(4, 4).dims[4].to_f64().unwrap();
        assert!((q.values[4] - exact).abs() < 1e-6);
        assert!(q.error_estimates[4] < 1e-6);
    }

    #[test]
    fn comparison_reports() {
        let report = compare_methods(2, 7, DEFAULT_NODES);
        assert!(report.is_clean());
        for r in &report.rows {
            assert_eq!(r.enumeration, r.chebyshev);
        }
        let report = compare_methods(1, 8, DEFAULT_NODES);
        assert!(report.rows.iter().all(|r| r.abs_err < 1e-8));
        let report = compare_methods(3, 4, DEFAULT_NODES);
        for r in report.rows.iter().filter(|r| r.m % 2 == 1) {
            assert!(r.enumeration.is_zero() && r.chebyshev.is_zero());
            assert!(r.quadrature.abs() < 1e-8);
        }
        let csv = compare_methods(2, 2, 64).to_csv(6);
        assert!(csv.starts_with("m,enum,cheb,quad,abs_err\n0,1,1,1.000000,"));
    }
}
