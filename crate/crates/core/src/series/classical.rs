//! Binomial factors, the Dedekind eta function and the odd Jacobi theta
//! function, the latter both as a theta series and as a triple product.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{int, Coeff, Exponent, JacobiExponent, JacobiSeries, Series, TruncationSpec};
use crate::arith::kronecker;
use crate::error::{Error, Result};

/// Truncated expansion of `(1 - X)^exponent` where `X` is the monomial with
/// exponent `base`.
///
/// Negative exponents expand as a geometric-type series and are only
/// allowed when `X` has positive `q`- or `s`-order, so that the window cuts
/// the expansion off. Pure `r`-powers may only be raised to `exponent >= 0`.
pub fn pow_binomial<E: Exponent>(
    base: E,
    exponent: i64,
    trunc: TruncationSpec,
) -> Result<Series<E>> {
    if base.q_part() < 0 || base.s_part() < 0 {
        return Err(Error::NegativeFactorOrder);
    }
    let grows = base.q_part() > 0 || base.s_part() > 0;
    if exponent < 0 && !grows {
        return Err(Error::InvalidFactor { exponent });
    }
    // c_k = (-1)^k binom(exponent, k), via c_k = c_{k-1} (k - 1 - exponent) / k
    let mut terms = vec![(E::ORIGIN, Coeff::one())];
    let mut c = BigInt::one();
    let mut k: i64 = 1;
    loop {
        c = c * BigInt::from(k - 1 - exponent) / BigInt::from(k);
        if c.is_zero() {
            break;
        }
        let e = base.scaled(k);
        if !trunc.admits(&e) {
            break;
        }
        terms.push((e, Coeff::from_integer(c.clone())));
        k += 1;
    }
    Ok(Series::from_terms(trunc, terms))
}

fn require(tq: i64, min: i64, what: &str) -> Result<()> {
    if tq < min {
        return Err(Error::TruncationTooSmall(format!(
            "{what} needs tq >= {min}, got {tq}"
        )));
    }
    Ok(())
}

/// `prod_{n >= 1} (1 - q^n)` truncated at `tq`.
fn euler_product(tq: i64) -> JacobiSeries {
    let trunc = TruncationSpec::jacobi(tq);
    let mut acc = JacobiSeries::one(trunc);
    let mut n = 1;
    while 24 * n <= tq {
        let factor =
            pow_binomial(JacobiExponent::new(24 * n, 0), 1, trunc).expect("q^n has positive order");
        acc = acc.mul(&factor);
        n += 1;
    }
    acc
}

/// Dedekind eta, `q^(1/24) prod_{n >= 1} (1 - q^n)`.
pub fn eta(trunc: TruncationSpec) -> Result<JacobiSeries> {
    require(trunc.tq, 1, "eta")?;
    Ok(euler_product(trunc.tq - 1).shift(JacobiExponent::new(1, 0)))
}

/// The odd theta function with characteristic `(1/2, 1/2)` as a sum:
/// `sum_n (-4/n) q^(n^2/8) r^(n/2)`, i.e. terms at `(3 n^2, 2 n)`.
pub fn theta_sum(trunc: TruncationSpec) -> Result<JacobiSeries> {
    require(trunc.tq, 3, "theta")?;
    let trunc = TruncationSpec::jacobi(trunc.tq);
    let mut terms = Vec::new();
    let mut n: i64 = 1;
    while 3 * n * n <= trunc.tq {
        for m in [n, -n] {
            terms.push((
                JacobiExponent::new(3 * m * m, 2 * m),
                kronecker(-4, m) as i64,
            ));
        }
        n += 2;
    }
    Ok(JacobiSeries::from_integer_terms(trunc, terms))
}

/// The same theta function from the triple product
/// `q^(1/8) (r^(1/2) - r^(-1/2)) prod_{n >= 1} (1 - q^n)(1 - q^n r)(1 - q^n r^-1)`.
pub fn theta_product(trunc: TruncationSpec) -> Result<JacobiSeries> {
    require(trunc.tq, 3, "theta")?;
    let inner = TruncationSpec::jacobi(trunc.tq - 3);
    let mut acc = JacobiSeries::one(inner);
    let mut n = 1;
    while 24 * n <= inner.tq {
        for b in [0, 4, -4] {
            let factor = pow_binomial(JacobiExponent::new(24 * n, b), 1, inner)?;
            acc = acc.mul(&factor);
        }
        n += 1;
    }
    let prefactor = JacobiSeries::from_terms(
        inner,
        [
            (JacobiExponent::new(0, 2), int(1)),
            (JacobiExponent::new(0, -2), int(-1)),
        ],
    );
    Ok(acc.mul(&prefactor).shift(JacobiExponent::new(3, 0)))
}

/// `z -> k z`: every term `(a, b)` moves to `(a, k b)`.
pub fn substitute_z_multiple(x: &JacobiSeries, k: i64) -> JacobiSeries {
    assert!(k >= 1, "substitution multiple must be positive");
    x.map_exponents(x.trunc(), |e| JacobiExponent::new(e.a, k * e.b))
}
