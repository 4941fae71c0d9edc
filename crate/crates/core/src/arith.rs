//! Elementary number theory used by the coefficient formulas and the
//! coset-index argument: Kronecker symbols, divisors, Euler products over
//! the primes dividing the polarization `t`, and brute-force enumerations
//! that check those products.

use num_integer::Integer;
use num_rational::Ratio;

use crate::error::{Error, Result};

/// Largest `t` accepted by the enumeration oracles (they walk `t^4` tuples).
pub const BRUTEFORCE_LIMIT: u64 = 64;

/// A positive integer together with its prime factorization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredInteger {
    value: u64,
    factors: Vec<(u64, u32)>,
}

impl FactoredInteger {
    /// Factor `n` by trial division.
    pub fn new(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::NonPositive(0));
        }
        let mut factors = Vec::new();
        let mut rest = n;
        let mut p = 2u64;
        while p * p <= rest {
            if rest.is_multiple_of(p) {
                let mut e = 0;
                while rest.is_multiple_of(p) {
                    rest /= p;
                    e += 1;
                }
                factors.push((p, e));
            }
            p += if p == 2 { 1 } else { 2 };
        }
        if rest > 1 {
            factors.push((rest, 1));
        }
        Ok(Self { value: n, factors })
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    /// `(prime, multiplicity)` pairs, primes strictly increasing.
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    /// `prod p^(k*e - k) * g(p)` over the factorization; this is how every
    /// `t^k prod_{p|t} (...)` product in this module is evaluated exactly.
    fn euler_product(&self, k: u32, local: impl Fn(u64) -> u64) -> u64 {
        self.factors
            .iter()
            .map(|&(p, e)| p.pow(k * (e - 1)) * local(p))
            .product()
    }
}

fn factored(t: u64) -> FactoredInteger {
    assert!(t >= 1, "argument must be a positive integer");
    FactoredInteger::new(t).expect("t >= 1")
}

/// The Kronecker symbol `(a/n)`, extended to all integers.
///
/// Conventions: `(a/0) = 1` iff `|a| = 1`, `(a/-1) = -1` for `a < 0` and
/// `+1` otherwise, `(a/2)` is `0` for even `a`, `+1` for `a = ±1 mod 8` and
/// `-1` for `a = ±3 mod 8`.
pub fn kronecker(a: i64, n: i64) -> i32 {
    let mut a = a as i128;
    let mut n = n as i128;
    if n == 0 {
        return i32::from(a.abs() == 1);
    }
    if a.is_even() && n.is_even() {
        return 0;
    }
    let mut k = 1i32;
    let twos = n.trailing_zeros();
    n >>= twos;
    if twos % 2 == 1 {
        k = match a.rem_euclid(8) {
            1 | 7 => k,
            _ => -k,
        };
    }
    if n < 0 {
        n = -n;
        if a < 0 {
            k = -k;
        }
    }
    // n is now odd and positive: plain Jacobi symbol.
    a = a.rem_euclid(n);
    while a != 0 {
        while a.is_even() {
            a /= 2;
            if matches!(n % 8, 3 | 5) {
                k = -k;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            k = -k;
        }
        a %= n;
    }
    if n == 1 {
        k
    } else {
        0
    }
}

/// Positive divisors of `n` in ascending order.
pub fn divisors(n: u64) -> Result<Vec<u64>> {
    if n == 0 {
        return Err(Error::NonPositive(0));
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Ok(small)
}

/// `gcd(|n|, |l|, |m|)`, with `gcd(0, 0, 0) = 0`.
pub fn gcd_triple(n: i64, l: i64, m: i64) -> u64 {
    n.unsigned_abs()
        .gcd(&l.unsigned_abs())
        .gcd(&m.unsigned_abs())
}

pub fn euler_phi(n: u64) -> u64 {
    factored(n).euler_product(1, |p| p - 1)
}

/// `t^3 prod_{p|t} (1 + 1/p)(1 + 1/p^2)`: the number of cosets of the
/// level-`t` subgroup in the full Siegel modular group.
pub fn coset_index(t: u64) -> u64 {
    factored(t).euler_product(3, |p| (p + 1) * (p * p + 1))
}

/// `2t prod_{p|t} (1 + 1/p)`: cosets whose last line is `(0,*,0,*)` or
/// `(*,0,*,0)` mod `t`, counting the two shapes separately.
pub fn diagonal_coset_count(t: u64) -> u64 {
    2 * factored(t).euler_product(1, |p| p + 1)
}

/// Number of distinct diagonal coset classes. Equal to
/// [`diagonal_coset_count`] for `t >= 2`; at `t = 1` both shapes describe
/// the single coset, so the count is 1.
pub fn diagonal_coset_classes(t: u64) -> u64 {
    if t == 1 {
        1
    } else {
        diagonal_coset_count(t)
    }
}

fn guard(t: u64) -> Result<()> {
    if t == 0 {
        return Err(Error::NonPositive(0));
    }
    if t > BRUTEFORCE_LIMIT {
        return Err(Error::GuardExceeded {
            value: t,
            limit: BRUTEFORCE_LIMIT,
        });
    }
    Ok(())
}

fn units_divide(count: u64, t: u64) -> u64 {
    let phi = euler_phi(t);
    assert_eq!(
        count % phi,
        0,
        "unit group must act freely on primitive tuples mod {t}"
    );
    count / phi
}

/// Counts primitive 4-tuples mod `t` and divides by `phi(t)`.
pub fn coset_index_bruteforce(t: u64) -> Result<u64> {
    guard(t)?;
    let mut count = 0u64;
    for a in 0..t {
        let ga = a.gcd(&t);
        for b in 0..t {
            let gab = ga.gcd(&b);
            for c in 0..t {
                let gabc = gab.gcd(&c);
                if gabc == 1 {
                    count += t;
                    continue;
                }
                count += (0..t).filter(|d| gabc.gcd(d) == 1).count() as u64;
            }
        }
    }
    Ok(units_divide(count, t))
}

/// Primitive 4-tuples mod `t` satisfying `shape`.
fn count_primitive_tuples(t: u64, shape: impl Fn([u64; 4]) -> bool) -> u64 {
    let mut count = 0;
    for a in 0..t {
        for b in 0..t {
            for c in 0..t {
                for d in 0..t {
                    if shape([a, b, c, d]) && a.gcd(&b).gcd(&c).gcd(&d).gcd(&t) == 1 {
                        count += 1;
                    }
                }
            }
        }
    }
    count
}

/// Unit classes of primitive tuples of shape `(0,*,0,*)` plus those of
/// shape `(*,0,*,0)`, each shape enumerated on its own.
pub fn diagonal_coset_count_bruteforce(t: u64) -> Result<u64> {
    guard(t)?;
    let first = count_primitive_tuples(t, |[a, _, c, _]| a == 0 && c == 0);
    let second = count_primitive_tuples(t, |[_, b, _, d]| b == 0 && d == 0);
    Ok(units_divide(first, t) + units_divide(second, t))
}

/// Solutions `(t, k)` of `k * index(t) = 5 m * classes(t)`
/// with `k` a positive multiple of 1/2.
///
/// For `t >= 2` this is `k t^2 prod_{p|t}(1 + p^-2) = 10 m`. Since
/// `k >= 1/2` forces `t^2 <= 20 m`, the search over that range is complete.
pub fn weight_equation_solutions(m: u64) -> Vec<(u64, Ratio<u64>)> {
    assert!(m >= 1, "m must be a positive integer");
    let mut out = Vec::new();
    let mut t = 1u64;
    while t * t <= 20 * m {
        let k = Ratio::new(5 * m * diagonal_coset_classes(t), coset_index(t));
        if (k * 2).is_integer() {
            out.push((t, k));
        }
        t += 1;
    }
    out
}
