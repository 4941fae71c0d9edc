//! Exact sparse truncated Laurent series on the fixed exponent lattice
//! `(1/24) Z x (1/4) Z x (1/24) Z` for `(tau_1, tau_2, tau_3)`.
//!
//! A term with exponent `(a, b, c)` stands for
//! `exp(2 pi i (a tau_1 / 24 + b tau_2 / 4 + c tau_3 / 24))`, so `q = (24, 0, 0)`,
//! `r = (0, 4, 0)` and `s = (0, 0, 24)`. Two-variable (Jacobi) series use the
//! same `a` and `b` scales and carry no `c`.
//!
//! Only the `q`- and `s`-directions are truncated. Every coefficient whose
//! exponent satisfies `a <= tq` and `c <= ts` is exact; nothing outside that
//! window is stored. The `r`-direction is never truncated, and every
//! constructor in the crate keeps each `(a, c)` slice finite.

mod classical;

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};

pub use classical::{eta, pow_binomial, substitute_z_multiple, theta_product, theta_sum};

/// Exact coefficient type.
pub type Coeff = BigRational;

/// Denominators of the global exponent lattice for `(tau_1, tau_2, tau_3)`.
pub const DENOMINATORS: [i64; 3] = [24, 4, 24];

/// Scaled units per natural power of `q` (and of `s`).
pub const Q_UNIT: i64 = 24;
/// Scaled units per natural power of `r`.
pub const R_UNIT: i64 = 4;

/// Upper bounds on the scaled `q`- and `s`-exponents.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TruncationSpec {
    pub tq: i64,
    pub ts: i64,
}

impl TruncationSpec {
    pub fn new(tq: i64, ts: i64) -> Self {
        Self { tq, ts }
    }

    /// Truncation for two-variable series (`ts` unused).
    pub fn jacobi(tq: i64) -> Self {
        Self { tq, ts: 0 }
    }

    /// From natural orders: exact through `q^q_order` and `s^s_order`.
    pub fn from_orders(q_order: i64, s_order: i64) -> Self {
        Self::new(q_order * Q_UNIT, s_order * Q_UNIT)
    }

    pub fn min(self, other: Self) -> Self {
        Self::new(self.tq.min(other.tq), self.ts.min(other.ts))
    }

    pub fn admits<E: Exponent>(&self, e: &E) -> bool {
        e.q_part() <= self.tq && e.s_part() <= self.ts
    }
}

/// A point of the exponent lattice.
pub trait Exponent:
    Copy + Ord + Hash + fmt::Debug + Send + Sync + Add<Output = Self> + 'static
{
    const ORIGIN: Self;
    /// Scaled `q`-exponent `a`.
    fn q_part(&self) -> i64;
    /// Scaled `r`-exponent `b`.
    fn r_part(&self) -> i64;
    /// Scaled `s`-exponent `c` (always 0 for two-variable series).
    fn s_part(&self) -> i64;
    /// The scaled triple `(a, b, c)`.
    fn triple(&self) -> [i64; 3] {
        [self.q_part(), self.r_part(), self.s_part()]
    }
    /// Multiply the exponent by a nonnegative integer.
    fn scaled(&self, k: i64) -> Self;
}

/// Exponent `(a, b)` of a two-variable series, ordered by `(a, b)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct JacobiExponent {
    pub a: i64,
    pub b: i64,
}

impl JacobiExponent {
    pub const fn new(a: i64, b: i64) -> Self {
        Self { a, b }
    }
}

impl Add for JacobiExponent {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl Exponent for JacobiExponent {
    const ORIGIN: Self = Self::new(0, 0);
    fn q_part(&self) -> i64 {
        self.a
    }
    fn r_part(&self) -> i64 {
        self.b
    }
    fn s_part(&self) -> i64 {
        0
    }
    fn scaled(&self, k: i64) -> Self {
        Self::new(self.a * k, self.b * k)
    }
}

/// Exponent `(a, b, c)` of a genus-2 Fourier series.
///
/// Ordered lexicographically by `(a, c, b)`, which is the canonical output
/// order of every table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ExponentTriple {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl ExponentTriple {
    pub const fn new(a: i64, b: i64, c: i64) -> Self {
        Self { a, b, c }
    }
}

impl Ord for ExponentTriple {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.a, self.c, self.b).cmp(&(other.a, other.c, other.b))
    }
}

impl PartialOrd for ExponentTriple {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for ExponentTriple {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.a + rhs.a, self.b + rhs.b, self.c + rhs.c)
    }
}

impl Exponent for ExponentTriple {
    const ORIGIN: Self = Self::new(0, 0, 0);
    fn q_part(&self) -> i64 {
        self.a
    }
    fn r_part(&self) -> i64 {
        self.b
    }
    fn s_part(&self) -> i64 {
        self.c
    }
    fn scaled(&self, k: i64) -> Self {
        Self::new(self.a * k, self.b * k, self.c * k)
    }
}

impl fmt::Display for ExponentTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

impl fmt::Display for JacobiExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

/// Truncated sparse series with exact rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series<E: Exponent> {
    trunc: TruncationSpec,
    terms: BTreeMap<E, Coeff>,
}

/// Two-variable `(q, r)` series.
pub type JacobiSeries = Series<JacobiExponent>;
/// Three-variable `(q, r, s)` series.
pub type SiegelSeries = Series<ExponentTriple>;

/// Below this many term pairs a product is accumulated on one thread.
const PARALLEL_THRESHOLD: usize = 1 << 14;

impl<E: Exponent> Series<E> {
    pub fn zero(trunc: TruncationSpec) -> Self {
        Self {
            trunc,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(trunc: TruncationSpec) -> Self {
        Self::monomial(E::ORIGIN, Coeff::one(), trunc)
    }

    pub fn monomial(e: E, coeff: Coeff, trunc: TruncationSpec) -> Self {
        Self::from_terms(trunc, [(e, coeff)])
    }

    /// Collects terms, summing repeated exponents and dropping zeros and
    /// anything outside the window.
    pub fn from_terms<I>(trunc: TruncationSpec, terms: I) -> Self
    where
        I: IntoIterator<Item = (E, Coeff)>,
    {
        let mut map: BTreeMap<E, Coeff> = BTreeMap::new();
        for (e, c) in terms {
            if !trunc.admits(&e) || c.is_zero() {
                continue;
            }
            *map.entry(e).or_insert_with(Coeff::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        Self { trunc, terms: map }
    }

    pub fn from_integer_terms<I>(trunc: TruncationSpec, terms: I) -> Self
    where
        I: IntoIterator<Item = (E, i64)>,
    {
        Self::from_terms(
            trunc,
            terms
                .into_iter()
                .map(|(e, c)| (e, Coeff::from_integer(BigInt::from(c)))),
        )
    }

    pub fn trunc(&self) -> TruncationSpec {
        self.trunc
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient at `e`, which must lie inside the truncation window.
    pub fn coefficient(&self, e: E) -> Result<Coeff> {
        if !self.trunc.admits(&e) {
            return Err(Error::OutOfBounds(format!("{e:?}")));
        }
        Ok(self.terms.get(&e).cloned().unwrap_or_else(Coeff::zero))
    }

    /// Stored coefficient, without the window check.
    pub fn get(&self, e: &E) -> Option<&Coeff> {
        self.terms.get(e)
    }

    /// Nonzero terms in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = (&E, &Coeff)> + '_ {
        self.terms.iter()
    }

    pub fn support(&self) -> Vec<(E, Coeff)> {
        self.terms.iter().map(|(e, c)| (*e, c.clone())).collect()
    }

    /// Smallest scaled `q`-exponent present.
    pub fn q_valuation(&self) -> Option<i64> {
        self.terms.keys().map(|e| e.q_part()).min()
    }

    /// Smallest scaled `s`-exponent present.
    pub fn s_valuation(&self) -> Option<i64> {
        self.terms.keys().map(|e| e.s_part()).min()
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// First coefficient that is not an integer, if any.
    pub fn check_integral(&self) -> Result<()> {
        match self.terms.iter().find(|(_, c)| !c.is_integer()) {
            None => Ok(()),
            Some((e, c)) => Err(Error::NonIntegral {
                at: format!("{e:?}"),
                coeff: c.to_string(),
            }),
        }
    }

    /// Restrict to a smaller window.
    pub fn truncate(&self, trunc: TruncationSpec) -> Self {
        let trunc = self.trunc.min(trunc);
        Self {
            trunc,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| trunc.admits(*e))
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        }
    }

    /// Multiply by the monomial with exponent `e`; the window moves with it.
    pub fn shift(&self, e: E) -> Self {
        Self {
            trunc: TruncationSpec::new(self.trunc.tq + e.q_part(), self.trunc.ts + e.s_part()),
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (*k + e, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, k: &Coeff) -> Self {
        if k.is_zero() {
            return Self::zero(self.trunc);
        }
        Self {
            trunc: self.trunc,
            terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect(),
        }
    }

    /// Re-key every term. `f` must be injective on the support.
    pub(crate) fn map_exponents<F: Fn(E) -> E>(&self, trunc: TruncationSpec, f: F) -> Self {
        Self::from_terms(trunc, self.terms.iter().map(|(e, c)| (f(*e), c.clone())))
    }

    /// Exact truncated Cauchy product.
    ///
    /// The result window is the componentwise minimum of the operands',
    /// lowered further when an operand has negative valuation in a truncated
    /// direction (otherwise unseen terms could contribute).
    pub fn mul(&self, other: &Self) -> Self {
        let trunc = product_window(self, other);
        if self.is_zero() || other.is_zero() {
            return Self::zero(trunc);
        }
        let (outer, inner) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let inner: Vec<(E, &Coeff)> = inner.terms.iter().map(|(e, c)| (*e, c)).collect();
        let inner_by_q = sorted_by_q(inner);
        let outer: Vec<(E, &Coeff)> = outer.terms.iter().map(|(e, c)| (*e, c)).collect();

        let accumulate = |chunk: &[(E, &Coeff)]| {
            let mut acc: HashMap<E, Coeff> = HashMap::new();
            for (ex, cx) in chunk {
                let room_q = trunc.tq - ex.q_part();
                let room_s = trunc.ts - ex.s_part();
                for (ey, cy) in &inner_by_q {
                    if ey.q_part() > room_q {
                        break;
                    }
                    if ey.s_part() > room_s {
                        continue;
                    }
                    let prod = *cx * *cy;
                    match acc.get_mut(&(*ex + *ey)) {
                        Some(v) => *v += prod,
                        None => {
                            acc.insert(*ex + *ey, prod);
                        }
                    }
                }
            }
            acc
        };

        let pairs = outer.len().saturating_mul(inner_by_q.len());
        let acc = if pairs < PARALLEL_THRESHOLD || rayon::current_num_threads() == 1 {
            accumulate(&outer)
        } else {
            let chunk = (outer.len() / (4 * rayon::current_num_threads())).max(1);
            outer
                .par_chunks(chunk)
                .map(accumulate)
                .reduce(HashMap::new, merge_maps)
        };
        let terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Self { trunc, terms }
    }

    /// `self^n` by repeated squaring.
    pub fn pow(&self, n: u32) -> Self {
        let mut result = Self::one(self.trunc);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = result.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    fn combine(&self, other: &Self, negate_other: bool) -> Self {
        let trunc = self.trunc.min(other.trunc);
        let mut terms: BTreeMap<E, Coeff> = self
            .terms
            .iter()
            .filter(|(e, _)| trunc.admits(*e))
            .map(|(e, c)| (*e, c.clone()))
            .collect();
        for (e, c) in other.terms.iter().filter(|(e, _)| trunc.admits(*e)) {
            let entry = terms.entry(*e).or_insert_with(Coeff::zero);
            if negate_other {
                *entry -= c;
            } else {
                *entry += c;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Self { trunc, terms }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, true)
    }

    pub fn neg(&self) -> Self {
        Self {
            trunc: self.trunc,
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    /// Largest absolute value among coefficients (0 for the zero series).
    pub fn max_abs_coeff(&self) -> Coeff {
        self.terms
            .values()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(Coeff::zero)
    }
}

impl JacobiSeries {
    /// Tensor with the pure `s`-power `c0`: `(a, b) -> (a, b, c0)`.
    pub fn promote(&self, c0: i64, ts: i64) -> SiegelSeries {
        let trunc = TruncationSpec::new(self.trunc.tq, ts);
        SiegelSeries::from_terms(
            trunc,
            self.terms
                .iter()
                .map(|(e, c)| (ExponentTriple::new(e.a, e.b, c0), c.clone())),
        )
    }
}

fn sorted_by_q<E: Exponent>(mut v: Vec<(E, &Coeff)>) -> Vec<(E, &Coeff)> {
    v.sort_by_key(|(e, _)| (e.q_part(), e.s_part()));
    v
}

fn merge_maps<E: Exponent>(a: HashMap<E, Coeff>, b: HashMap<E, Coeff>) -> HashMap<E, Coeff> {
    let (mut big, small) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    for (e, c) in small {
        *big.entry(e).or_insert_with(Coeff::zero) += c;
    }
    big
}

fn product_window<E: Exponent>(x: &Series<E>, y: &Series<E>) -> TruncationSpec {
    let neg = |v: Option<i64>| v.unwrap_or(0).min(0);
    TruncationSpec::new(
        (x.trunc.tq + neg(y.q_valuation())).min(y.trunc.tq + neg(x.q_valuation())),
        (x.trunc.ts + neg(y.s_valuation())).min(y.trunc.ts + neg(x.s_valuation())),
    )
}

impl<E: Exponent> Add for &Series<E> {
    type Output = Series<E>;
    fn add(self, rhs: Self) -> Series<E> {
        Series::add(self, rhs)
    }
}

impl<E: Exponent> Sub for &Series<E> {
    type Output = Series<E>;
    fn sub(self, rhs: Self) -> Series<E> {
        Series::sub(self, rhs)
    }
}

impl<E: Exponent> Mul for &Series<E> {
    type Output = Series<E>;
    fn mul(self, rhs: Self) -> Series<E> {
        Series::mul(self, rhs)
    }
}

impl<E: Exponent> Neg for &Series<E> {
    type Output = Series<E>;
    fn neg(self) -> Series<E> {
        Series::neg(self)
    }
}

/// Integer-valued coefficient, as used by tests and table writers.
pub fn int(c: i64) -> Coeff {
    Coeff::from_integer(BigInt::from(c))
}
