//! Coefficient-level structure checks: restriction to the diagonal
//! `tau_2 = 0`, its `tau_2`-derivatives, the hyperbolic norm of the support,
//! and the swap and `r -> r^-1` symmetries.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::series::{Coeff, ExponentTriple, SiegelSeries};

/// `sum_b b^k coeff(a, b, c)` for every `(a, c)` slice present in `x`.
///
/// The `k`-th `tau_2`-derivative at `tau_2 = 0` is a nonzero multiple of
/// this sum, so a form vanishes to order exactly `k` on the diagonal iff
/// the moments `0..k` vanish on every slice and moment `k` does not.
pub fn diagonal_moment(x: &SiegelSeries, k: u32) -> BTreeMap<(i64, i64), Coeff> {
    let mut out: BTreeMap<(i64, i64), Coeff> = BTreeMap::new();
    for (e, c) in x.iter() {
        let weight = Coeff::from_integer(BigInt::from(e.b).pow(k));
        *out.entry((e.a, e.c)).or_insert_with(Coeff::zero) += c * weight;
    }
    out
}

/// Restriction to `tau_2 = 0`: the `b`-marginal per `(a, c)`.
pub fn restrict_diagonal(x: &SiegelSeries) -> BTreeMap<(i64, i64), Coeff> {
    diagonal_moment(x, 0)
}

/// `sum_b b coeff(a, b, c)` per `(a, c)`.
pub fn diagonal_first_moment(x: &SiegelSeries) -> BTreeMap<(i64, i64), Coeff> {
    diagonal_moment(x, 1)
}

/// Vanishing order along the diagonal as witnessed by the computed window:
/// the least `k <= max_order` whose moment is nonzero on some slice.
pub fn diagonal_vanishing_order(x: &SiegelSeries, max_order: u32) -> Option<u32> {
    (0..=max_order).find(|&k| diagonal_moment(x, k).values().any(|v| !v.is_zero()))
}

/// `4 (a/24)(c/24) - (b/4)^2 = (a c - 9 b^2) / 144`.
pub fn hyperbolic_norm(e: &ExponentTriple) -> Coeff {
    Coeff::new(
        BigInt::from(e.a) * e.c - BigInt::from(9) * e.b * e.b,
        BigInt::from(144),
    )
}

/// Extremes of the hyperbolic norm over the support.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormClass {
    pub min_norm: Coeff,
    pub max_norm: Coeff,
    /// Exponents attaining `min_norm`, in canonical order.
    pub minimizers: Vec<ExponentTriple>,
}

impl NormClass {
    /// Every term strictly inside the positive cone.
    pub fn is_cusp_like(&self) -> bool {
        self.min_norm.is_positive()
    }

    /// Every term on the boundary of the cone.
    pub fn is_singular(&self) -> bool {
        self.min_norm.is_zero() && self.max_norm.is_zero()
    }
}

pub fn norm_classify(x: &SiegelSeries) -> Result<NormClass> {
    let mut iter = x.iter();
    let (first, _) = iter.next().ok_or(Error::ZeroSeries)?;
    let mut min_norm = hyperbolic_norm(first);
    let mut max_norm = min_norm.clone();
    let mut minimizers = vec![*first];
    for (e, _) in iter {
        let n = hyperbolic_norm(e);
        if n < min_norm {
            min_norm = n.clone();
            minimizers.clear();
            minimizers.push(*e);
        } else if n == min_norm {
            minimizers.push(*e);
        }
        if n > max_norm {
            max_norm = n;
        }
    }
    Ok(NormClass {
        min_norm,
        max_norm,
        minimizers,
    })
}

/// Coefficient symmetry under `(tau_1, tau_2, tau_3) -> (lambda tau_3, tau_2, tau_1 / lambda)`:
/// `coeff(a, b, c) == coeff(c / lambda, b, lambda a)`, checked wherever both
/// exponents lie in the window.
pub fn check_swap_symmetry(x: &SiegelSeries, lambda: i64) -> Result<bool> {
    if lambda < 1 {
        return Err(Error::NonPositive(lambda));
    }
    let trunc = x.trunc();
    for (e, c) in x.iter() {
        if e.c % lambda != 0 {
            return Err(Error::Divisibility(format!("{e} with lambda = {lambda}")));
        }
        let image = ExponentTriple::new(e.c / lambda, e.b, lambda * e.a);
        if trunc.admits(&image) && x.get(&image) != Some(c) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `coeff(a, b, c) == -coeff(a, -b, c)` on the whole window.
pub fn check_r_antisymmetry(x: &SiegelSeries) -> bool {
    x.iter().all(|(e, c)| {
        x.get(&ExponentTriple::new(e.a, -e.b, e.c))
            .is_some_and(|m| *m == -c.clone())
    })
}

/// True iff every exponent lies on `a in step_a Z`, `b in step_b Z`, `c in step_c Z`.
pub fn on_sublattice(x: &SiegelSeries, step_a: i64, step_b: i64, step_c: i64) -> bool {
    x.iter()
        .all(|(e, _)| e.a % step_a == 0 && e.b % step_b == 0 && e.c % step_c == 0)
}

/// A series whose coefficients are symmetric in `b`: for checks that need
/// an even-in-`r` input.
pub fn symmetrize_in_r(x: &SiegelSeries) -> SiegelSeries {
    let mirrored = SiegelSeries::from_terms(
        x.trunc(),
        x.iter()
            .map(|(e, c)| (ExponentTriple::new(e.a, -e.b, e.c), c.clone())),
    );
    x.add(&mirrored).scale(&Coeff::new(1.into(), 2.into()))
}
