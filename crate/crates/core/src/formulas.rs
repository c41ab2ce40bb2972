//! Closed forms and recurrences for bishop, anassa and single-color rook
//! counts.
//!
//! Every sum uses its literal index bounds. Terms outside the combinatorial
//! range vanish through the extended binomials and Stirling numbers, which
//! keeps the closed forms meaningful at `m = -1`. Other negative board sizes
//! are accepted but carry no combinatorial meaning.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::kernel::{
    binomial, ceil_half, exact_div, factorial, falling_factorial, floor_half, parity, pow,
    stirling2,
};
use crate::{Piece, Result};

/// Rooks on the white board `W_m`.
pub fn rw_closed(m: i64, k: usize) -> BigInt {
    color_closed(m, k, ceil_half(m))
}

/// Rooks on the black board `K_m`.
pub fn rk_closed(m: i64, k: usize) -> BigInt {
    color_closed(m, k, floor_half(m))
}

fn color_closed(m: i64, k: usize, half: i64) -> BigInt {
    let k = k as i64;
    (0..=k)
        .map(|j| binomial(half, j) * stirling2(m - j, m - k))
        .sum()
}

/// Memoized first-order recurrence for a single-color rook board.
///
/// `R(m, k) = R(m-1, k) + (m - k + e(m)) R(m-1, k-1)` with `e(m) = π(m)` on
/// the white board and `1 - π(m)` on the black board.
#[derive(Debug, Default)]
pub struct ColorRecurrence {
    black: bool,
    memo: HashMap<(usize, usize), BigInt>,
}

impl ColorRecurrence {
    pub fn white() -> Self {
        ColorRecurrence {
            black: false,
            memo: HashMap::new(),
        }
    }

    pub fn black() -> Self {
        ColorRecurrence {
            black: true,
            memo: HashMap::new(),
        }
    }

    pub fn get(&mut self, m: usize, k: usize) -> BigInt {
        if k == 0 {
            return BigInt::one();
        }
        if m == 0 {
            return BigInt::zero();
        }
        if let Some(v) = self.memo.get(&(m, k)) {
            return v.clone();
        }
        let mi = m as i64;
        let extra = if self.black {
            1 - parity(mi)
        } else {
            parity(mi)
        };
        let factor = mi - k as i64 + extra;
        let v = self.get(m - 1, k) + BigInt::from(factor) * self.get(m - 1, k - 1);
        self.memo.insert((m, k), v.clone());
        v
    }
}

pub fn rw_recurrence(m: usize, k: usize) -> BigInt {
    ColorRecurrence::white().get(m, k)
}

pub fn rk_recurrence(m: usize, k: usize) -> BigInt {
    ColorRecurrence::black().get(m, k)
}

/// White-board rook count through the alternating power sum for
/// `R_W(m, m - k)`. Zero when `k > m`.
pub fn rw_arshon(m: usize, k: usize) -> Result<BigInt> {
    if k > m {
        return Ok(BigInt::zero());
    }
    let r = (m - k) as i64;
    let mi = m as i64;
    let up = ((mi + parity(mi)) / 2) as u32;
    let down = ((mi - parity(mi)) / 2) as u32;
    let sum: BigInt = (0..=r)
        .map(|j| binomial(r, j) * crate::kernel::sign(r - j) * pow(j + 1, up) * pow(j, down))
        .sum();
    exact_div(sum, &factorial(r as usize), "rw_arshon")
}

/// Bishops on `S_m` as the explicit triple sum over binomials and Stirling
/// numbers. Valid for every `m >= -1`.
pub fn bishops_closed(m: i64, k: usize) -> BigInt {
    let k = k as i64;
    let (lo, hi) = (floor_half(m), ceil_half(m));
    let mut total = BigInt::zero();
    for j in 0..=k {
        let black: BigInt = (0..=j)
            .map(|i| binomial(lo, i) * stirling2(m - i, m - j))
            .sum();
        if black.is_zero() {
            continue;
        }
        let white: BigInt = (0..=k - j)
            .map(|l| binomial(hi, l) * stirling2(m - l, m - k + j))
            .sum();
        total += black * white;
    }
    total
}

/// Bishops as the convolution of the two single-color rook counts.
pub fn bishops_convolution(m: i64, k: usize) -> BigInt {
    (0..=k).map(|j| rk_closed(m, j) * rw_closed(m, k - j)).sum()
}

/// The earlier bishop formula whose summation limits depend on `m`.
pub fn bishops_arshon_kotesovec(m: usize, k: usize) -> BigInt {
    let (mi, ki) = (m as i64, k as i64);
    let upper = (mi + 1) / 2;
    let lower = mi / 2;
    let mut total = BigInt::zero();
    for j in 0..=mi {
        let first: BigInt = (0..=upper)
            .map(|i| binomial(upper, i) * stirling2(i + lower, mi - j))
            .sum();
        if first.is_zero() {
            continue;
        }
        let second: BigInt = (0..=lower)
            .map(|l| binomial(lower, l) * stirling2(l + upper, mi - ki + j))
            .sum();
        total += first * second;
    }
    total
}

/// `12 C(m,4) + 14 C(m,3) + 4 C(m,2)`: two bishops.
pub fn bishops_pair(m: i64) -> BigInt {
    BigInt::from(12) * binomial(m, 4)
        + BigInt::from(14) * binomial(m, 3)
        + BigInt::from(4) * binomial(m, 2)
}

/// Anassas on `S_m` with exactly `p` strictly below the main diagonal.
pub fn anassa_pk_closed(m: i64, k: usize, p: usize) -> BigInt {
    let (k, p) = (k as i64, p as i64);
    (0..=p)
        .map(|j| {
            falling_factorial(m - k + j, j as usize)
                * binomial(k - p - 1, j)
                * binomial(k - j, k - p)
                * stirling2(m + 1, m - k + j + 1)
        })
        .sum()
}

/// Memoized four-term recurrence for the below-diagonal anassa split.
#[derive(Debug, Default)]
pub struct AnassaRecurrence {
    memo: HashMap<(usize, usize, usize), BigInt>,
}

impl AnassaRecurrence {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&mut self, m: usize, k: usize, p: usize) -> BigInt {
        self.eval(m as i64, k as i64, p as i64)
    }

    fn eval(&mut self, m: i64, k: i64, p: i64) -> BigInt {
        if k < 0 || p < 0 {
            return BigInt::zero();
        }
        let delta = |c: bool| if c { BigInt::one() } else { BigInt::zero() };
        if m == 0 {
            return delta(k == 0 && p == 0);
        }
        if k == 0 {
            return delta(p == 0);
        }
        if k == 1 {
            return match p {
                0 => stirling2(m + 1, m),
                1 => stirling2(m, m - 1),
                _ => BigInt::zero(),
            };
        }
        if p == 0 {
            return stirling2(m + 1, m - k + 1);
        }
        let key = (m as usize, k as usize, p as usize);
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let diag = BigInt::from(m - k + 1);
        let file = BigInt::from(m - p);
        let v = self.eval(m - 1, k, p)
            + &diag * self.eval(m - 1, k - 1, p)
            + &file * self.eval(m - 1, k - 1, p - 1)
            + &file * &diag * self.eval(m - 1, k - 2, p - 1);
        self.memo.insert(key, v.clone());
        v
    }
}

pub fn anassa_pk_recurrence(m: usize, k: usize, p: usize) -> BigInt {
    AnassaRecurrence::new().get(m, k, p)
}

/// `2^(k-2j) [C(k-j, j-1) + C(k-j+1, j)]`, doubled so that it stays integral
/// when `k` is odd and `j = (k+1)/2`.
pub(crate) fn anassa_weight_doubled(k: i64, j: i64) -> BigInt {
    pow(2, (k + 1 - 2 * j) as u32) * (binomial(k - j, j - 1) + binomial(k - j + 1, j))
}

/// Anassas on `S_m`. Valid for every `m >= -1`.
pub fn anassa_closed(m: i64, k: usize) -> BigInt {
    let k = k as i64;
    let doubled: BigInt = (0..=(k + 1) / 2)
        .map(|j| {
            falling_factorial(m - k + j, j as usize)
                * stirling2(m, m - k + j)
                * anassa_weight_doubled(k, j)
        })
        .sum();
    exact_div(doubled, &BigInt::from(2), "anassa_closed")
        .expect("anassa weights sum to an even number")
}

/// Anassas on `S_m` as the sum of the below-diagonal split over `p`.
pub fn anassa_total_by_sum(m: usize, k: usize) -> BigInt {
    (0..=k).map(|p| anassa_pk_closed(m as i64, k, p)).sum()
}

/// The two expressions for a full anassa diagonal (`k = m`):
/// `Σ C(m+1,j) S(m,j) j!/2^j` and `2^-(m+1) Σ C(m+1,j) j^m`.
pub fn kotesovec_diagonal(m: usize) -> Result<(BigInt, BigInt)> {
    let mi = m as i64;
    let first: BigInt = (0..=mi)
        .map(|j| {
            binomial(mi + 1, j) * stirling2(mi, j) * factorial(j as usize) * pow(2, (mi - j) as u32)
        })
        .sum();
    let first = exact_div(first, &pow(2, m as u32), "kotesovec_diagonal")?;
    let second: BigInt = (0..=mi + 1)
        .map(|j| binomial(mi + 1, j) * pow(j, m as u32))
        .sum();
    let second = exact_div(second, &pow(2, m as u32 + 1), "kotesovec_diagonal")?;
    Ok((first, second))
}

/// Closed-form count for any piece.
pub fn count(piece: Piece, m: i64, k: usize) -> BigInt {
    match piece {
        Piece::Bishop => bishops_closed(m, k),
        Piece::Anassa => anassa_closed(m, k),
        Piece::White => rw_closed(m, k),
        Piece::Black => rk_closed(m, k),
    }
}
