//! Closed Fourier-coefficient formulas for the arithmetic lifts of
//! `eta * theta` (giving `Delta_1`) and `eta^3 * theta` (giving `Delta_2`).

use num_integer::Roots;

use crate::arith::{divisors, gcd_triple, kronecker};
use crate::error::{Error, Result};
use crate::series::{ExponentTriple, SiegelSeries, TruncationSpec};

fn require(trunc: TruncationSpec, tq: i64, ts: i64, what: &str) -> Result<()> {
    if trunc.tq < tq || trunc.ts < ts {
        return Err(Error::TruncationTooSmall(format!(
            "{what} needs tq >= {tq}, ts >= {ts}"
        )));
    }
    Ok(())
}

/// `sum_{a | (n, l, m)} chi(a)`; `n, m > 0` so the gcd is positive.
fn divisor_character_sum(n: i64, l: i64, m: i64, chi: impl Fn(i64) -> i32) -> i64 {
    let g = gcd_triple(n, l, m);
    divisors(g)
        .expect("gcd of positive n, m is positive")
        .into_iter()
        .map(|a| chi(a as i64) as i64)
        .sum()
}

/// Exact square root of a positive perfect square.
fn exact_sqrt(d: i64) -> Option<i64> {
    if d <= 0 {
        return None;
    }
    let s = d.sqrt();
    (s * s == d).then_some(s)
}

/// `Delta_1`: the term `exp(pi i (n/3 tau_1 + l tau_2 + m tau_3))` sits at
/// `(4n, 2l, 12m)` and has coefficient
/// `(-4/l) (12/M) sum_{a | (n,l,m)} (-3/a)` when `4nm - 3l^2 = M^2`, `M >= 1`,
/// for `n, m = 1 mod 6` positive.
///
/// Every divisor `a` is prime to 6, and the `a`-term is just the `phi_2`
/// coefficient `c(nm/a^2, l/a) = (-4/(l/a)) (12/(M/a))` pulled back to the
/// outer symbols. That Hecke structure is what the Borcherds product
/// reproduces; a `(6/a)` weight instead cancels the terms at
/// `(n, l, m) = (p, p, p)` for `p = 7, 13` and disagrees with it.
pub fn delta1_lift(trunc: TruncationSpec) -> Result<SiegelSeries> {
    require(trunc, 4, 12, "delta1")?;
    let mut terms = Vec::new();
    for n in (1..).step_by(6).take_while(|n| 4 * n <= trunc.tq) {
        for m in (1..).step_by(6).take_while(|m| 12 * m <= trunc.ts) {
            let l_max = ((4 * n * m - 1) / 3).sqrt();
            for l in -l_max..=l_max {
                let chi_l = kronecker(-4, l);
                if chi_l == 0 {
                    continue;
                }
                let Some(big_m) = exact_sqrt(4 * n * m - 3 * l * l) else {
                    continue;
                };
                let coeff = chi_l as i64
                    * kronecker(12, big_m) as i64
                    * divisor_character_sum(n, l, m, |a| kronecker(-3, a));
                terms.push((ExponentTriple::new(4 * n, 2 * l, 12 * m), coeff));
            }
        }
    }
    Ok(SiegelSeries::from_integer_terms(trunc, terms))
}

/// `Delta_2`: the term `exp(pi i (n/2 tau_1 + l tau_2 + m tau_3))` sits at
/// `(6n, 2l, 12m)` and has coefficient
/// `N (-4/(N l)) sum_{a | (n,l,m)} (-4/a)` when `2nm - l^2 = N^2`, `N >= 1`,
/// for `n, m = 1 mod 4` positive.
pub fn delta2_lift(trunc: TruncationSpec) -> Result<SiegelSeries> {
    require(trunc, 6, 12, "delta2")?;
    let mut terms = Vec::new();
    for n in (1..).step_by(4).take_while(|n| 6 * n <= trunc.tq) {
        for m in (1..).step_by(4).take_while(|m| 12 * m <= trunc.ts) {
            let l_max = (2 * n * m - 1).sqrt();
            for l in -l_max..=l_max {
                let Some(big_n) = exact_sqrt(2 * n * m - l * l) else {
                    continue;
                };
                let chi = kronecker(-4, big_n * l);
                if chi == 0 {
                    continue;
                }
                let coeff =
                    big_n * chi as i64 * divisor_character_sum(n, l, m, |a| kronecker(-4, a));
                terms.push((ExponentTriple::new(6 * n, 2 * l, 12 * m), coeff));
            }
        }
    }
    Ok(SiegelSeries::from_integer_terms(trunc, terms))
}
