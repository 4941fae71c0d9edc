//! The index-1/2 Jacobi forms `phi2 = eta * theta` (weight 1) and
//! `phi1 = eta^3 * theta` (weight 2), and the table of Borcherds exponents
//! `f(n, l)` defined by
//!
//! ```text
//! sum f(n, l) q^n r^l = (theta(tau, 2z) / theta(tau, z))^2
//!   = r^-1 ( prod_{n>=1} (1 + q^(n-1) r)(1 + q^n r^-1)(1 - q^(2n-1) r^2)(1 - q^(2n-1) r^-2) )^2
//! ```
//!
//! The table is built from the product and only checked against the quotient
//! by cross-multiplication, since dividing by `theta^2` has no Laurent
//! polynomial inverse per `q`-order.

use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::series::{
    eta, int, substitute_z_multiple, theta_sum, JacobiExponent, JacobiSeries, TruncationSpec,
    Q_UNIT, R_UNIT,
};

fn require(tq: i64, min: i64, what: &str) -> Result<()> {
    if tq < min {
        return Err(Error::TruncationTooSmall(format!(
            "{what} needs tq >= {min}, got {tq}"
        )));
    }
    Ok(())
}

/// `eta * theta`, weight 1, leading term `q^(1/6) r^(1/2)` at `(4, 2)`.
pub fn phi2(trunc: TruncationSpec) -> Result<JacobiSeries> {
    require(trunc.tq, 4, "phi2")?;
    let trunc = TruncationSpec::jacobi(trunc.tq);
    Ok(eta(trunc)?.mul(&theta_sum(trunc)?))
}

/// `eta^3 * theta`, weight 2, leading term `q^(1/4) r^(1/2)` at `(6, 2)`.
pub fn phi1(trunc: TruncationSpec) -> Result<JacobiSeries> {
    require(trunc.tq, 6, "phi1")?;
    let trunc = TruncationSpec::jacobi(trunc.tq);
    Ok(eta(trunc)?.pow(3).mul(&theta_sum(trunc)?))
}

/// Exact `f(n, l)` for `0 <= n <= max_n`, stored as a series on integer
/// powers of `q` and `r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FTable {
    series: JacobiSeries,
    max_n: i64,
}

impl FTable {
    pub fn max_n(&self) -> i64 {
        self.max_n
    }

    pub fn series(&self) -> &JacobiSeries {
        &self.series
    }

    fn check_n(&self, n: i64) -> Result<()> {
        if n < 0 || n > self.max_n {
            return Err(Error::InsufficientPrecision {
                needed: n,
                available: self.max_n,
            });
        }
        Ok(())
    }

    pub fn get(&self, n: i64, l: i64) -> Result<i64> {
        self.check_n(n)?;
        let c = self
            .series
            .get(&JacobiExponent::new(Q_UNIT * n, R_UNIT * l))
            .map(|c| c.to_integer().to_i64().expect("f(n, l) fits in i64"))
            .unwrap_or(0);
        Ok(c)
    }

    /// Nonzero `(l, f(n, l))`, ascending in `l`.
    pub fn row(&self, n: i64) -> Result<Vec<(i64, i64)>> {
        self.check_n(n)?;
        Ok(self
            .series
            .iter()
            .filter(|(e, _)| e.a == Q_UNIT * n)
            .map(|(e, c)| {
                (
                    e.b / R_UNIT,
                    c.to_integer().to_i64().expect("f fits in i64"),
                )
            })
            .collect())
    }

    /// Overwrite one entry. Used to probe the sensitivity of the checks
    /// that consume the table.
    pub fn set(&mut self, n: i64, l: i64, value: i64) -> Result<()> {
        self.check_n(n)?;
        let mut terms = self.series.support();
        let key = JacobiExponent::new(Q_UNIT * n, R_UNIT * l);
        terms.retain(|(e, _)| *e != key);
        terms.push((key, int(value)));
        self.series = JacobiSeries::from_terms(self.series.trunc(), terms);
        Ok(())
    }
}

fn one_plus(e: JacobiExponent, sign: i64, trunc: TruncationSpec) -> JacobiSeries {
    JacobiSeries::from_integer_terms(trunc, [(JacobiExponent::new(0, 0), 1), (e, sign)])
}

/// `f(n, l)` for `n <= max_n` from the quadruple product.
pub fn f_table(max_n: i64) -> Result<FTable> {
    if max_n < 0 {
        return Err(Error::NonPositive(max_n));
    }
    let trunc = TruncationSpec::jacobi(Q_UNIT * max_n);
    let q = |k: i64, l: i64| JacobiExponent::new(Q_UNIT * k, R_UNIT * l);
    let mut prod = JacobiSeries::one(trunc);
    for n in 1..=max_n + 1 {
        let mut factors = vec![one_plus(q(n - 1, 1), 1, trunc)];
        if n <= max_n {
            factors.push(one_plus(q(n, -1), 1, trunc));
        }
        if 2 * n - 1 <= max_n {
            factors.push(one_plus(q(2 * n - 1, 2), -1, trunc));
            factors.push(one_plus(q(2 * n - 1, -2), -1, trunc));
        }
        for f in &factors {
            prod = prod.mul(f);
        }
    }
    let series = prod.mul(&prod).shift(q(0, -1));
    let series = series.truncate(trunc);
    series.check_integral()?;
    for (e, c) in series.iter() {
        let mirrored = series.get(&JacobiExponent::new(e.a, -e.b));
        assert_eq!(Some(c), mirrored, "f(n, l) = f(n, -l) violated at {e}");
    }
    Ok(FTable { series, max_n })
}

/// Checks `table * theta(tau, z)^2 == theta(tau, 2z)^2` through `trunc.tq`.
pub fn f_verify_quotient(table: &FTable, trunc: TruncationSpec) -> Result<bool> {
    let tq = trunc.tq;
    // theta^2 starts at a = 6, so the table is needed through a = tq - 6.
    if Q_UNIT * table.max_n + 6 < tq {
        return Err(Error::InsufficientPrecision {
            needed: (tq - 6 + Q_UNIT - 1) / Q_UNIT,
            available: table.max_n,
        });
    }
    let window = TruncationSpec::jacobi(tq);
    let theta = theta_sum(TruncationSpec::jacobi(tq.max(3)))?;
    let theta_sq = theta.pow(2).truncate(window);
    let lhs = table
        .series
        .mul(&theta_sq.shift(JacobiExponent::new(-6, 0)))
        .shift(JacobiExponent::new(6, 0))
        .truncate(window);
    let doubled = substitute_z_multiple(&theta, 2);
    let rhs = doubled.pow(2).truncate(window);
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::Coeff;
    use num_traits::Zero;
    use std::collections::BTreeMap;

    fn je(a: i64, b: i64) -> JacobiExponent {
        JacobiExponent::new(a, b)
    }

    #[test]
    fn phi2_leading_terms() {
        let p = phi2(TruncationSpec::jacobi(240)).unwrap();
        assert_eq!(p.coefficient(je(4, 2)).unwrap(), int(1));
        assert_eq!(p.coefficient(je(4, -2)).unwrap(), int(-1));
        assert_eq!(p.q_valuation(), Some(4));
        assert!(p.is_integral());
    }

    #[test]
    fn phi1_leading_terms() {
        let p = phi1(TruncationSpec::jacobi(240)).unwrap();
        assert_eq!(p.coefficient(je(6, 2)).unwrap(), int(1));
        assert_eq!(p.coefficient(je(6, -2)).unwrap(), int(-1));
        assert_eq!(p.q_valuation(), Some(6));
        assert!(p.is_integral());
    }

    #[test]
    fn phi_b_marginals_vanish() {
        for p in [
            phi1(TruncationSpec::jacobi(480)).unwrap(),
            phi2(TruncationSpec::jacobi(480)).unwrap(),
        ] {
            let mut per_a: BTreeMap<i64, Coeff> = BTreeMap::new();
            for (e, c) in p.iter() {
                *per_a.entry(e.a).or_insert_with(Coeff::zero) += c;
            }
            assert!(per_a.values().all(|c| c.is_zero()));
        }
    }

    #[test]
    fn phi1_is_eta_squared_times_phi2() {
        let t = TruncationSpec::jacobi(600);
        let lhs = phi1(t).unwrap();
        let rhs = eta(t).unwrap().pow(2).mul(&phi2(t).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn phi_truncation_guards() {
        assert!(phi2(TruncationSpec::jacobi(3)).is_err());
        assert!(phi1(TruncationSpec::jacobi(5)).is_err());
    }

    #[test]
    fn f_table_low_rows() {
        let f = f_table(3).unwrap();
        assert_eq!(f.row(0).unwrap(), vec![(-1, 1), (0, 2), (1, 1)]);
        assert_eq!(
            f.row(1).unwrap(),
            vec![
                (-3, -2),
                (-2, -2),
                (-1, 2),
                (0, 4),
                (1, 2),
                (2, -2),
                (3, -2)
            ]
        );
        assert_eq!(f.get(0, 5).unwrap(), 0);
        assert!(f.get(4, 0).is_err());
    }

    #[test]
    fn f_table_symmetric_and_integral() {
        let f = f_table(20).unwrap();
        assert!(f.series().is_integral());
        for n in 0..=20 {
            for (l, v) in f.row(n).unwrap() {
                assert_eq!(f.get(n, -l).unwrap(), v);
                assert!(l.abs() <= 2 * (n + 1));
            }
        }
    }

    #[test]
    fn f_table_truncation_monotone() {
        let big = f_table(12).unwrap();
        let small = f_table(5).unwrap();
        for n in 0..=5 {
            assert_eq!(big.row(n).unwrap(), small.row(n).unwrap());
        }
    }

    #[test]
    fn quotient_identity_holds() {
        let f = f_table(10).unwrap();
        assert!(f_verify_quotient(&f, TruncationSpec::jacobi(240)).unwrap());
        assert!(f_verify_quotient(&f, TruncationSpec::jacobi(246)).unwrap());
    }

    #[test]
    fn quotient_lowest_slice() {
        let f = f_table(0).unwrap();
        assert!(f_verify_quotient(&f, TruncationSpec::jacobi(0)).unwrap());
        assert!(f_verify_quotient(&f, TruncationSpec::jacobi(6)).unwrap());
    }

    #[test]
    fn quotient_detects_corruption() {
        let mut f = f_table(10).unwrap();
        f.set(3, 2, f.get(3, 2).unwrap() + 1).unwrap();
        assert!(!f_verify_quotient(&f, TruncationSpec::jacobi(240)).unwrap());
    }

    #[test]
    fn quotient_needs_precision() {
        let f = f_table(2).unwrap();
        assert!(matches!(
            f_verify_quotient(&f, TruncationSpec::jacobi(240)),
            Err(Error::InsufficientPrecision { .. })
        ));
    }
}
