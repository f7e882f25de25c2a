//! Closed-form hypergeometric moments and the per-distance deviation bound
//! whose prefix sums dominate the expected optimal change count.
//!
//! Two variance conventions are exposed. `Exact` is the textbook
//! hypergeometric variance `k r (n-r)(n-k) / (n^2 (n-1))`, which an
//! enumeration oracle confirms digit for digit. `Paper` substitutes the
//! looser normalisation `k r (n-r)(n-k) / (n (n-1)(n-2))`, kept for
//! comparison; it exceeds the exact variance by the factor `n/(n-2)`, so
//! bounds derived from it remain valid, just weaker.

use num_bigint::BigInt;
use num_integer::binomial;
use serde::Serialize;

use crate::averages::{rational, Rational};
use crate::error::Error;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum VarianceMode {
    Exact,
    Paper,
}

/// Mean and variance of the count of red directions among a uniform
/// k-subset of `n` directions of which `r` are red.
pub fn hypergeom_moments(
    n: u64,
    k: u64,
    r: u64,
    mode: VarianceMode,
) -> Result<(Rational, Rational), Error> {
    if n < 2 || k > n || r > n {
        return Err(Error::MomentsOutOfRange { n, k, r });
    }
    let (n, k, r) = (n as i128, k as i128, r as i128);
    let mean = rational(k * r, n);
    let variance = match mode {
        VarianceMode::Exact => rational(k * r * (n - r) * (n - k), n * n * (n - 1)),
        VarianceMode::Paper => {
            if n < 3 {
                return Err(Error::PaperModeNeedsN3(n as u64));
            }
            rational(k * r * (n - r) * (n - k), n * (n - 1) * (n - 2))
        }
    };
    Ok((mean, variance))
}

/// Upper bound on `E_k[S]` valid for every 2-colouring:
/// `(1/(n-k) + 1/k) * sqrt(max-variance)` with the red degree `r` replaced
/// by its worst case `r(n-r) <= n^2/4`.
pub fn s_bound(n: u64, k: u64, mode: VarianceMode) -> Result<f64, Error> {
    if n < 3 {
        return Err(Error::MomentsOutOfRange { n, k, r: 0 });
    }
    if k == 0 || k >= n {
        return Err(Error::KOutOfRange {
            k: k as u32,
            lo: 1,
            hi: (n - 1) as u32,
        });
    }
    let (nf, kf) = (n as f64, k as f64);
    let coeff = 1.0 / (nf - kf) + 1.0 / kf;
    let root = match mode {
        VarianceMode::Exact => (kf * (nf - kf) / (nf - 1.0)).sqrt(),
        VarianceMode::Paper => (kf * (nf - kf) * nf / ((nf - 1.0) * (nf - 2.0))).sqrt(),
    };
    Ok(coeff * 0.5 * root)
}

/// `B(n)`: the sum of [`s_bound`] over `k = 1..n-1`. Grows like
/// `(pi/2) sqrt(n)`.
pub fn master_bound(n: u64, mode: VarianceMode) -> Result<f64, Error> {
    if n < 3 {
        return Err(Error::MomentsOutOfRange { n, k: 0, r: 0 });
    }
    let mut total = 0.0;
    for k in 1..n {
        total += s_bound(n, k, mode)?;
    }
    Ok(total)
}

/// Exact mean of `|L - n/2|` where `L` is binomial(n, 1/2): the expected
/// distance from the middle layer of a uniform vertex, doubled relative to
/// its antipode. For even `n` this equals `2^-n * n * C(n-1, n/2)`.
pub fn layer_deviation_mean(n: u32) -> Rational {
    let big_n = BigInt::from(n);
    let two_n = BigInt::from(1u8) << n;
    let mut acc = Rational::new(BigInt::from(0u8), BigInt::from(1u8));
    for j in 0..=n {
        let weight = binomial(big_n.clone(), BigInt::from(j));
        // |j - n/2| without leaving integers: |2j - n| / 2.
        let dev = Rational::new(
            BigInt::from((2 * i64::from(j) - i64::from(n)).abs()),
            BigInt::from(2u8),
        );
        acc += dev * Rational::new(weight, two_n.clone());
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn moments_examples() {
        let (mean, var) = hypergeom_moments(4, 2, 2, VarianceMode::Exact).unwrap();
        assert_eq!(mean, rational(1, 1));
        assert_eq!(var, rational(1, 3));
        let (mean10, _) = hypergeom_moments(10, 5, 4, VarianceMode::Exact).unwrap();
        assert_eq!(mean10, rational(2, 1));
        let (_, var_paper) = hypergeom_moments(4, 2, 2, VarianceMode::Paper).unwrap();
        assert_eq!(var_paper, rational(2, 3));
        assert!(var_paper > var);
        assert!(hypergeom_moments(4, 5, 2, VarianceMode::Exact).is_err());
        assert!(hypergeom_moments(2, 1, 1, VarianceMode::Paper).is_err());
    }

    #[test]
    fn paper_variance_dominates_exact() {
        // Ratio is n/(n-2) > 1 for every n >= 3.
        for n in 3..=40u64 {
            for k in 0..=n {
                for r in 0..=n {
                    let (_, exact) = hypergeom_moments(n, k, r, VarianceMode::Exact).unwrap();
                    let (_, paper) = hypergeom_moments(n, k, r, VarianceMode::Paper).unwrap();
                    assert!(paper >= exact, "n={n} k={k} r={r}");
                }
            }
        }
    }

    #[test]
    fn bound_examples() {
        // B(4) = 2/3 + 1/sqrt(3) + 2/3.
        let b4 = master_bound(4, VarianceMode::Exact).unwrap();
        assert!((b4 - (4.0 / 3.0 + 1.0 / 3.0f64.sqrt())).abs() < 1e-12);
        assert!((b4 - 1.9106).abs() < 1e-4);
        // The looser variance at (4, 2): 2/sqrt(6).
        let p42 = s_bound(4, 2, VarianceMode::Paper).unwrap();
        assert!((p42 - 2.0 / 6.0f64.sqrt()).abs() < 1e-12);
        assert!((p42 - 0.8165).abs() < 1e-4);
        assert!(s_bound(4, 0, VarianceMode::Exact).is_err());
        assert!(s_bound(4, 4, VarianceMode::Exact).is_err());
    }

    #[test]
    fn master_bound_approaches_half_pi_times_sqrt_n() {
        let mut prev = 0.0;
        for exp in 1..=6u32 {
            let n = 10u64.pow(exp);
            let scaled = master_bound(n, VarianceMode::Exact).unwrap() / (n as f64).sqrt();
            assert!(scaled < PI / 2.0);
            assert!(scaled > prev, "not increasing at n={n}");
            prev = scaled;
        }
        assert!((prev - PI / 2.0).abs() < 0.01);
    }

    #[test]
    fn layer_deviation_examples() {
        // n = 4: sum C(4,j)|j-2| = 12, so 12/16 = 3/4 = 4*C(3,2)/16.
        assert_eq!(layer_deviation_mean(4), rational(3, 4));
        for n in (4..=20u32).step_by(2) {
            let closed = Rational::new(
                BigInt::from(n) * binomial(BigInt::from(n - 1), BigInt::from(n / 2)),
                BigInt::from(1u8) << n,
            );
            assert_eq!(layer_deviation_mean(n), closed, "n={n}");
        }
    }
}
