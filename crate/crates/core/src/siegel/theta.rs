//! Theta-constant constructions: `Delta_1/2` as a double theta sum and as a
//! sum of `theta(tau_1, m tau_2)`, and `Delta_5` as the product of the ten
//! even genus-2 theta constants.

use std::collections::BTreeMap;

use num_complex::Complex;
use num_traits::Zero;

use crate::arith::kronecker;
use crate::error::{Error, Result};
use crate::series::{
    int, substitute_z_multiple, theta_sum, Coeff, ExponentTriple, SiegelSeries, TruncationSpec,
};

fn require(trunc: TruncationSpec, tq: i64, ts: i64, what: &str) -> Result<()> {
    if trunc.tq < tq || trunc.ts < ts {
        return Err(Error::TruncationTooSmall(format!(
            "{what} needs tq >= {tq}, ts >= {ts}, got {trunc:?}"
        )));
    }
    Ok(())
}

fn odd_up_to(bound: impl Fn(i64) -> bool) -> impl Iterator<Item = i64> {
    (1..).step_by(2).take_while(move |&n| bound(n))
}

/// `(1/2) sum_{n, m} (-4/n)(-4/m) exp(pi i (n^2/4 tau_1 + n m tau_2 + m^2 tau_3))`,
/// whose terms sit at `(3 n^2, 2 n m, 12 m^2)`.
pub fn delta_half_sum(trunc: TruncationSpec) -> Result<SiegelSeries> {
    require(trunc, 3, 12, "delta_half")?;
    let half = Coeff::new(1.into(), 2.into());
    let mut terms = Vec::new();
    for n0 in odd_up_to(|n| 3 * n * n <= trunc.tq) {
        for m0 in odd_up_to(|m| 12 * m * m <= trunc.ts) {
            for (n, m) in [(n0, m0), (n0, -m0), (-n0, m0), (-n0, -m0)] {
                let sign = kronecker(-4, n) * kronecker(-4, m);
                terms.push((
                    ExponentTriple::new(3 * n * n, 2 * n * m, 12 * m * m),
                    &half * int(sign as i64),
                ));
            }
        }
    }
    let series = SiegelSeries::from_terms(trunc, terms);
    series.check_integral()?;
    Ok(series)
}

/// `sum_{m > 0} (-4/m) theta(tau_1, m tau_2) exp(pi i m^2 tau_3)`.
pub fn delta_half_theta_decomp(trunc: TruncationSpec) -> Result<SiegelSeries> {
    require(trunc, 3, 12, "delta_half")?;
    let theta = theta_sum(TruncationSpec::jacobi(trunc.tq))?;
    let mut acc = SiegelSeries::zero(trunc);
    for m in odd_up_to(|m| 12 * m * m <= trunc.ts) {
        let slice = substitute_z_multiple(&theta, m).promote(12 * m * m, trunc.ts);
        acc = acc.add(&slice.scale(&int(kronecker(-4, m) as i64)));
    }
    Ok(acc)
}

/// A genus-2 theta characteristic `(alpha, beta)` stored doubled, so each
/// entry is 0 or 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Characteristic {
    pub alpha: [i64; 2],
    pub beta: [i64; 2],
}

impl Characteristic {
    /// Even iff `4 alpha . beta` is even.
    pub fn is_even(&self) -> bool {
        (self.alpha[0] * self.beta[0] + self.alpha[1] * self.beta[1]) % 2 == 0
    }
}

/// The ten even characteristics, in lexicographic order.
pub fn even_characteristics() -> Vec<Characteristic> {
    let bits = [[0, 0], [0, 1], [1, 0], [1, 1]];
    let mut out = Vec::new();
    for alpha in bits {
        for beta in bits {
            let ch = Characteristic { alpha, beta };
            if ch.is_even() {
                out.push(ch);
            }
        }
    }
    out
}

/// The theta constant
/// `sum_{x in Z^2} exp(pi i ((x + alpha)^t tau (x + alpha) + 2 (x + alpha)^t beta))`.
///
/// With `u = 2 (x + alpha)` a term sits at `(3 u1^2, u1 u2, 3 u2^2)` and has
/// coefficient `i^(u . 2 beta)`. Coefficients are summed as Gaussian
/// integers; a nonzero imaginary part is reported as an error.
pub fn theta_constant(ch: Characteristic, trunc: TruncationSpec) -> Result<SiegelSeries> {
    let reach = |bound: i64, parity: i64| {
        let mut u = 0;
        while 3 * (u + 1) * (u + 1) <= bound {
            u += 1;
        }
        (-u..=u).filter(move |v| (v - parity).rem_euclid(2) == 0)
    };
    let mut acc: BTreeMap<ExponentTriple, Complex<i64>> = BTreeMap::new();
    for u1 in reach(trunc.tq, ch.alpha[0]) {
        for u2 in reach(trunc.ts, ch.alpha[1]) {
            let e = ExponentTriple::new(3 * u1 * u1, u1 * u2, 3 * u2 * u2);
            let phase = match (u1 * ch.beta[0] + u2 * ch.beta[1]).rem_euclid(4) {
                0 => Complex::new(1, 0),
                1 => Complex::new(0, 1),
                2 => Complex::new(-1, 0),
                _ => Complex::new(0, -1),
            };
            *acc.entry(e).or_insert_with(Complex::zero) += phase;
        }
    }
    let mut terms = Vec::with_capacity(acc.len());
    for (e, z) in acc {
        if z.im != 0 {
            return Err(Error::NonReal(format!("{e} in {ch:?}")));
        }
        terms.push((e, z.re));
    }
    Ok(SiegelSeries::from_integer_terms(trunc, terms))
}

/// The product of the ten even theta constants. No scalar normalization
/// is applied.
pub fn delta5_theta_product(trunc: TruncationSpec) -> Result<SiegelSeries> {
    require(trunc, 24, 24, "delta5")?;
    let mut acc = SiegelSeries::one(trunc);
    for ch in even_characteristics() {
        acc = acc.mul(&theta_constant(ch, trunc)?);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(a: i64, b: i64, c: i64) -> ExponentTriple {
        ExponentTriple::new(a, b, c)
    }

    #[test]
    fn delta_half_leading_terms() {
        let d = delta_half_sum(TruncationSpec::new(300, 300)).unwrap();
        assert_eq!(d.coefficient(e(3, 2, 12)).unwrap(), int(1));
        assert_eq!(d.coefficient(e(3, -2, 12)).unwrap(), int(-1));
        for b in -20..=20 {
            assert_eq!(d.coefficient(e(12, b, 12)).unwrap(), int(0));
        }
        assert!(d.is_integral());
    }

    #[test]
    fn delta_half_routes_agree() {
        let t = TruncationSpec::new(300, 300);
        assert_eq!(
            delta_half_sum(t).unwrap(),
            delta_half_theta_decomp(t).unwrap()
        );
    }

    #[test]
    fn first_theta_slice_is_c_12() {
        let t = TruncationSpec::new(300, 300);
        let d = delta_half_sum(t).unwrap();
        let theta = theta_sum(TruncationSpec::jacobi(300)).unwrap();
        let first = theta.promote(12, 300);
        let c12: Vec<_> = d
            .iter()
            .filter(|(k, _)| k.c == 12)
            .map(|(k, c)| (*k, c.clone()))
            .collect();
        assert_eq!(c12, first.support());
    }

    #[test]
    fn dropping_sign_breaks_agreement() {
        let t = TruncationSpec::new(300, 300);
        let theta = theta_sum(TruncationSpec::jacobi(300)).unwrap();
        let mut unsigned = SiegelSeries::zero(t);
        for m in [1i64, 3] {
            unsigned = unsigned.add(&substitute_z_multiple(&theta, m).promote(12 * m * m, 300));
        }
        assert_ne!(unsigned, delta_half_sum(t).unwrap());
    }

    #[test]
    fn ten_even_characteristics() {
        let chars = even_characteristics();
        assert_eq!(chars.len(), 10);
        let odd = 16 - chars.len();
        assert_eq!(odd, 6);
    }

    #[test]
    fn theta_constants_are_real_and_even() {
        let t = TruncationSpec::new(150, 150);
        for ch in even_characteristics() {
            let th = theta_constant(ch, t).unwrap();
            assert!(!th.is_zero());
            assert!(th.is_integral());
        }
    }

    #[test]
    fn odd_characteristic_theta_vanishes() {
        let t = TruncationSpec::new(150, 150);
        for alpha in [[0, 1], [1, 0], [1, 1]] {
            for beta in [[0, 1], [1, 0], [1, 1]] {
                let ch = Characteristic { alpha, beta };
                if !ch.is_even() {
                    assert!(theta_constant(ch, t).unwrap().is_zero(), "{ch:?}");
                }
            }
        }
    }

    #[test]
    fn delta5_leading_slice() {
        let d = delta5_theta_product(TruncationSpec::new(24, 24)).unwrap();
        assert!(d.is_integral());
        let lead: Vec<_> = d.iter().filter(|(k, _)| k.a == 12 && k.c == 12).collect();
        assert_eq!(d.q_valuation(), Some(12));
        assert_eq!(d.s_valuation(), Some(12));
        assert_eq!(lead.len(), 2);
        assert_eq!(lead[0].0.b, -2);
        assert_eq!(lead[1].0.b, 2);
        assert_eq!(lead[0].1, &-lead[1].1.clone());
    }
}
