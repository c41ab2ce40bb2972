//! Exact combinatorial primitives over all integer arguments.
//!
//! Binomials follow Kronenburg's extension to negative arguments. Stirling
//! numbers of the second kind are extended through the duality
//! `S(-n, -k) = c(k, n)` with the unsigned Stirling numbers of the first kind
//! and vanish when exactly one argument is negative.
//!
//! The recurrence-defined families are kept in per-thread triangle tables
//! that only grow to the largest row a caller has asked for.

use std::cell::RefCell;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type ExactInteger = BigInt;
pub type ExactRational = BigRational;

/// Lazily grown lower-triangular table; `rows[n][k]` for `0 <= k <= n`.
struct Triangle {
    rows: Vec<Vec<BigInt>>,
    next_row: fn(&[Vec<BigInt>], usize) -> Vec<BigInt>,
}

impl Triangle {
    fn new(next_row: fn(&[Vec<BigInt>], usize) -> Vec<BigInt>) -> Self {
        Triangle {
            rows: Vec::new(),
            next_row,
        }
    }

    fn get(&mut self, n: usize, k: usize) -> BigInt {
        if k > n {
            return BigInt::zero();
        }
        while self.rows.len() <= n {
            let row = (self.next_row)(&self.rows, self.rows.len());
            self.rows.push(row);
        }
        self.rows[n][k].clone()
    }
}

fn entry(rows: &[Vec<BigInt>], n: usize, k: i64) -> BigInt {
    if k < 0 || k as usize > n {
        BigInt::zero()
    } else {
        rows[n][k as usize].clone()
    }
}

fn stirling2_row(rows: &[Vec<BigInt>], n: usize) -> Vec<BigInt> {
    if n == 0 {
        return vec![BigInt::one()];
    }
    (0..=n as i64)
        .map(|k| BigInt::from(k) * entry(rows, n - 1, k) + entry(rows, n - 1, k - 1))
        .collect()
}

fn stirling1_row(rows: &[Vec<BigInt>], n: usize) -> Vec<BigInt> {
    if n == 0 {
        return vec![BigInt::one()];
    }
    let w = BigInt::from(n - 1);
    (0..=n as i64)
        .map(|k| &w * entry(rows, n - 1, k) + entry(rows, n - 1, k - 1))
        .collect()
}

fn assoc_stirling2_row(rows: &[Vec<BigInt>], m: usize) -> Vec<BigInt> {
    match m {
        0 => vec![BigInt::one()],
        1 => vec![BigInt::zero(); 2],
        _ => {
            let w = BigInt::from(m - 1);
            (0..=m as i64)
                .map(|k| {
                    if k == 0 {
                        return BigInt::zero();
                    }
                    BigInt::from(k) * entry(rows, m - 1, k) + &w * entry(rows, m - 2, k - 1)
                })
                .collect()
        }
    }
}

thread_local! {
    static STIRLING2: RefCell<Triangle> = RefCell::new(Triangle::new(stirling2_row));
    static STIRLING1: RefCell<Triangle> = RefCell::new(Triangle::new(stirling1_row));
    static ASSOC_STIRLING2: RefCell<Triangle> = RefCell::new(Triangle::new(assoc_stirling2_row));
}

/// Binomial coefficient extended to all integer pairs.
///
/// For `n >= 0` this is the usual value (zero outside `0..=n`). For `n < 0`:
/// `(-1)^k C(k-n-1, k)` when `k >= 0`, `(-1)^(n-k) C(-k-1, n-k)` when
/// `k <= n`, and zero in between. Pascal's rule holds everywhere except at
/// `(0, 0)`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n >= 0 {
        if k < 0 || k > n {
            BigInt::zero()
        } else {
            binomial_nonneg(n as u64, k as u64)
        }
    } else if k >= 0 {
        sign(k) * binomial_nonneg((k - n - 1) as u64, k as u64)
    } else if k <= n {
        sign(n - k) * binomial_nonneg((-k - 1) as u64, (n - k) as u64)
    } else {
        BigInt::zero()
    }
}

fn binomial_nonneg(n: u64, k: u64) -> BigInt {
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `(-1)^e` as an exact integer.
pub fn sign(e: i64) -> BigInt {
    if e.rem_euclid(2) == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// Stirling numbers of the second kind over all integer arguments.
pub fn stirling2(n: i64, k: i64) -> BigInt {
    if n >= 0 && k >= 0 {
        STIRLING2.with(|t| t.borrow_mut().get(n as usize, k as usize))
    } else if n < 0 && k < 0 {
        stirling1((-k) as usize, -n)
    } else {
        BigInt::zero()
    }
}

/// Unsigned Stirling numbers of the first kind `c(n, k)`, `n >= 0`.
pub fn stirling1(n: usize, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    STIRLING1.with(|t| t.borrow_mut().get(n, k as usize))
}

/// Associated Stirling numbers of the second kind (partitions of an
/// `m`-set into `k` blocks of size at least two). Zero for `k < 0`.
pub fn assoc_stirling2(m: usize, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    ASSOC_STIRLING2.with(|t| t.borrow_mut().get(m, k as usize))
}

/// `x (x-1) ... (x-k+1)`, with `(x)_0 = 1`.
pub fn falling_factorial(x: i64, k: usize) -> BigInt {
    (0..k as i64).fold(BigInt::one(), |acc, i| acc * (x - i))
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n as u64).fold(BigInt::one(), |acc, i| acc * i)
}

/// 1 if `m` is odd, 0 otherwise; correct for negative `m`.
pub fn parity(m: i64) -> i64 {
    m.rem_euclid(2)
}

pub fn ceil_half(m: i64) -> i64 {
    m.div_euclid(2) + parity(m)
}

pub fn floor_half(m: i64) -> i64 {
    m.div_euclid(2)
}

/// `base^exp` for a possibly zero base; `0^0 = 1`.
pub fn pow(base: i64, exp: u32) -> BigInt {
    num_traits::pow(BigInt::from(base), exp as usize)
}

/// Exact quotient, or an error naming the computation that produced it.
pub fn exact_div(
    numerator: BigInt,
    denominator: &BigInt,
    context: &'static str,
) -> crate::Result<BigInt> {
    use num_integer::Integer;
    let (q, r) = numerator.div_rem(denominator);
    if r.is_zero() {
        Ok(q)
    } else {
        Err(crate::Error::InexactDivision {
            context,
            numerator,
            denominator: denominator.clone(),
        })
    }
}

/// Converts an exact rational known to be integral.
pub fn to_integer(value: &BigRational) -> Option<BigInt> {
    value.is_integer().then(|| value.to_integer())
}

/// `x` in canonical form: reduced with a positive denominator.
pub fn is_canonical(x: &BigRational) -> bool {
    use num_integer::Integer;
    x.denom().is_positive() && x.numer().gcd(x.denom()).is_one()
}
