//! `Delta_1` as the Borcherds product
//! `q^(1/6) r^(1/2) s^(1/2) prod (1 - q^n r^l s^(3m))^f(nm, l)` over
//! `n, m >= 0`, `l` in `Z`, with `l < 0` when `n = m = 0`.

use crate::error::{Error, Result};
use crate::jacobi::{f_table, FTable};
use crate::series::{pow_binomial, ExponentTriple, SiegelSeries, TruncationSpec, Q_UNIT, R_UNIT};

/// Exponent of the prefactor `q^(1/6) r^(1/2) s^(1/2)`.
pub const DELTA1_LEADING: ExponentTriple = ExponentTriple::new(4, 2, 12);

/// Ranges of `n` and `m` whose factors reach into the window.
fn factor_ranges(trunc: TruncationSpec) -> (i64, i64) {
    let n_max = (trunc.tq - DELTA1_LEADING.a) / Q_UNIT;
    let m_max = (trunc.ts - DELTA1_LEADING.c) / (3 * Q_UNIT);
    (n_max, m_max)
}

/// Largest `n m` the product needs from the `f` table.
pub fn required_f_order(trunc: TruncationSpec) -> i64 {
    let (n_max, m_max) = factor_ranges(trunc);
    n_max * m_max
}

pub fn delta1_product(trunc: TruncationSpec) -> Result<SiegelSeries> {
    check(trunc)?;
    let table = f_table(required_f_order(trunc))?;
    delta1_product_with_table(trunc, &table)
}

fn check(trunc: TruncationSpec) -> Result<()> {
    if trunc.tq < DELTA1_LEADING.a || trunc.ts < DELTA1_LEADING.c {
        return Err(Error::TruncationTooSmall(format!(
            "delta1 product needs tq >= 4, ts >= 12, got {trunc:?}"
        )));
    }
    Ok(())
}

/// The product with exponents taken from `table`.
pub fn delta1_product_with_table(trunc: TruncationSpec, table: &FTable) -> Result<SiegelSeries> {
    check(trunc)?;
    let needed = required_f_order(trunc);
    if table.max_n() < needed {
        return Err(Error::InsufficientPrecision {
            needed,
            available: table.max_n(),
        });
    }
    let (n_max, m_max) = factor_ranges(trunc);
    let inner = TruncationSpec::new(trunc.tq - DELTA1_LEADING.a, trunc.ts - DELTA1_LEADING.c);
    let mut acc = SiegelSeries::one(inner);
    for n in 0..=n_max {
        for m in 0..=m_max {
            for (l, f) in table.row(n * m)? {
                if n == 0 && m == 0 && l >= 0 {
                    continue;
                }
                let base = ExponentTriple::new(Q_UNIT * n, R_UNIT * l, 3 * Q_UNIT * m);
                acc = acc.mul(&pow_binomial(base, f, inner)?);
            }
        }
    }
    Ok(acc.shift(DELTA1_LEADING))
}
