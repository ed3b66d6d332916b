//! Closed-form bounds on the symmetry constants `σ(n, k)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::{Error, Result};

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

fn binomial(n: u32, k: u32) -> BigInt {
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// General lower bound `max{k!, (n−k)!} / (2^{n−k} n!)` on `σ(n, k)`.
pub fn bound_glb(n: u32, k: u32) -> Result<BigRational> {
    if n < 1 || k >= n {
        return Err(Error::BadParam(format!(
            "need n >= 1 and 0 <= k < n, got n={n}, k={k}"
        )));
    }
    let num = factorial(k).max(factorial(n - k));
    let den = (BigInt::one() << (n - k) as usize) * factorial(n);
    Ok(BigRational::new(num, den))
}

/// Central symmetry of the regular `n`-simplex,
/// `(n+1)^{−n} Σ_{i ≤ n/2} (−1)^i C(n+1, i) (n+1−2i)^n`.
pub fn bound_fary_redei(n: u32) -> Result<BigRational> {
    if n < 1 {
        return Err(Error::BadParam("need n >= 1".into()));
    }
    let mut sum = BigInt::zero();
    for i in 0..=n / 2 {
        let term = binomial(n + 1, i) * BigInt::from(n + 1 - 2 * i).pow(n);
        if i % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    Ok(BigRational::new(sum, BigInt::from(n + 1).pow(n)))
}

/// Axial lower bound `1/(2n)`, the general bound at `k = n − 1`.
pub fn bound_axlb(n: u32) -> Result<BigRational> {
    if n < 2 {
        return Err(Error::BadParam("need n >= 2".into()));
    }
    Ok(BigRational::new(BigInt::one(), BigInt::from(2 * n)))
}

/// Upper bound `(2 − 2^{−1/n})^{−n}` from the pyramid over a simplex facet.
pub fn bound_pyramid(n: u32) -> Result<f64> {
    if n < 2 {
        return Err(Error::BadParam("need n >= 2".into()));
    }
    let nf = f64::from(n);
    Ok((2.0 - 2f64.powf(-1.0 / nf)).powf(-nf))
}

/// `1/(2n) > ` central symmetry of the `n`-simplex, compared exactly.
pub fn separation_check(n: u32) -> Result<bool> {
    Ok(bound_axlb(n)? > bound_fary_redei(n)?)
}

/// Best known upper bound on the planar axial constant.
pub fn planar_axial_upper() -> f64 {
    (1.0 + std::f64::consts::SQRT_2) / 3.0
}

/// Upper bounds `U(n) = max{pyramid(n), U(n−1)}` on `σ(n, n−1)` for
/// `n = 2..=n_max`, starting from `U(2) = (1+√2)/3`.
pub fn axial_upper_chain(n_max: u32) -> Result<Vec<(u32, f64)>> {
    if n_max < 2 {
        return Err(Error::BadParam("need n_max >= 2".into()));
    }
    let mut out = vec![(2, planar_axial_upper())];
    for n in 3..=n_max {
        let prev = out.last().map_or(0.0, |&(_, u)| u);
        out.push((n, bound_pyramid(n)?.max(prev)));
    }
    Ok(out)
}

/// An exact rational with its decimal rendering.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExactValue {
    pub fraction: String,
    pub decimal: f64,
}

impl From<&BigRational> for ExactValue {
    fn from(r: &BigRational) -> Self {
        use num_traits::ToPrimitive;
        ExactValue {
            fraction: r.to_string(),
            decimal: r.to_f64().unwrap_or(f64::NAN),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundsRow {
    pub n: u32,
    /// General bound at `k = n − 1`.
    pub glb: ExactValue,
    pub fary_redei: ExactValue,
    pub axlb: ExactValue,
    pub pyramid: f64,
    pub separation: bool,
}

/// One row per `n ∈ [2, n_max]`.
pub fn bounds_table(n_max: u32) -> Result<Vec<BoundsRow>> {
    if n_max < 2 {
        return Err(Error::BadParam("need n_max >= 2".into()));
    }
    (2..=n_max)
        .map(|n| {
            let fr = bound_fary_redei(n)?;
            let ax = bound_axlb(n)?;
            Ok(BoundsRow {
                n,
                glb: (&bound_glb(n, n - 1)?).into(),
                separation: ax > fr,
                fary_redei: (&fr).into(),
                axlb: (&ax).into(),
                pyramid: bound_pyramid(n)?,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn glb_examples() {
        assert_eq!(bound_glb(2, 1).unwrap(), r(1, 4));
        assert_eq!(bound_glb(2, 0).unwrap(), r(1, 4));
        assert_eq!(bound_glb(3, 2).unwrap(), r(1, 6));
        assert!(bound_glb(3, 3).is_err());
        for n in 2..=20 {
            assert_eq!(bound_glb(n, n - 1).unwrap(), bound_axlb(n).unwrap());
        }
    }

    #[test]
    fn fary_redei_examples() {
        assert_eq!(bound_fary_redei(2).unwrap(), r(2, 3));
        assert_eq!(bound_fary_redei(3).unwrap(), r(1, 2));
        assert!(bound_fary_redei(11).unwrap() < r(1, 22));
        assert!(bound_fary_redei(0).is_err());
    }

    #[test]
    fn fary_redei_is_decreasing() {
        let v: Vec<_> = (2..=32).map(|n| bound_fary_redei(n).unwrap()).collect();
        for w in v.windows(2) {
            assert!(w[0] > w[1]);
        }
    }

    #[test]
    fn separation_threshold() {
        for n in 2..=10 {
            assert!(!separation_check(n).unwrap(), "n={n}");
        }
        for n in 11..=32 {
            assert!(separation_check(n).unwrap(), "n={n}");
        }
        assert!(separation_check(1).is_err());
    }

    #[test]
    fn pyramid_values() {
        let direct = 1.0 / (2.0 - std::f64::consts::FRAC_1_SQRT_2).powi(2);
        assert!((bound_pyramid(2).unwrap() - direct).abs() < 1e-15);
        assert!((direct - 0.598_238_9).abs() < 1e-7);
        let v: Vec<_> = (2..=64).map(|n| bound_pyramid(n).unwrap()).collect();
        assert!(v.windows(2).all(|w| w[1] < w[0]));
        let chain = axial_upper_chain(6).unwrap();
        assert!(chain.iter().all(|&(_, u)| u == planar_axial_upper()));
    }

    #[test]
    fn table_shape() {
        let t = bounds_table(12).unwrap();
        assert_eq!(t.len(), 11);
        assert!(t.last().unwrap().separation);
        assert!(t[9].separation);
        assert!(!t[8].separation);
        assert_eq!(t[0].fary_redei.fraction, "2/3");
    }
}
