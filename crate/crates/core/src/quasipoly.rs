//! Explicit quasi-polynomial coefficients of the counting functions.
//!
//! Each count is first written in the binomial basis `C(m, i)` and then
//! converted to monomials with
//! `C(x, i) = Σ_d (-1)^(i-d) c(i, d) x^d / i!`.
//! Bishop-type counts carry one coefficient vector per parity of `m`;
//! anassa counts have a single vector.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::formulas::anassa_weight_doubled;
use crate::kernel::{
    assoc_stirling2, binomial, factorial, parity, pow, sign, stirling1, to_integer,
};
use crate::{Error, Piece, Result};

fn rat(v: BigInt) -> BigRational {
    BigRational::from_integer(v)
}

/// Coefficients `β_i(p, q, z)` of the basis change
/// `C(2x+z-q, p) C(x, q) = Σ_i β_i C(2x+z, i)`. Zero outside `0..=p+q`.
pub fn beta(p: usize, q: usize, z: i64, i: i64) -> BigRational {
    let (p, q) = (p as i64, q as i64);
    if i < 0 || i > p + q {
        return BigRational::zero();
    }
    let mut total = BigInt::zero();
    for b in (i - p).max(0)..=q {
        let inner: BigInt = (0..=b)
            .map(|a| {
                binomial(p + b - q - z, a) * binomial(q + z, b - a) * binomial(a - q, p + b - i)
            })
            .sum();
        total += pow(2, b as u32) * binomial(2 * q - b, q) * inner;
    }
    BigRational::new(total, pow(2, 2 * q as u32))
}

/// Converts binomial-basis weights `γ_i` (of `C(x, i)`) to monomial
/// coefficients of `x^d`.
pub fn binomial_to_monomial(gamma: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); gamma.len()];
    for (i, g) in gamma.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        let inv = BigRational::new(BigInt::one(), factorial(i));
        for (d, c) in out.iter_mut().enumerate().take(i + 1) {
            let s = sign((i - d) as i64) * stirling1(i, d as i64);
            *c += g * &inv * rat(s);
        }
    }
    out
}

fn color_coeffs(k: usize, z: i64) -> Vec<BigRational> {
    let gamma: Vec<BigRational> = (0..=2 * k)
        .map(|i| {
            let mut g = BigRational::zero();
            for p in i.saturating_sub(k)..=k {
                for j in p..=k {
                    let w = assoc_stirling2(p + j, p as i64);
                    if w.is_zero() {
                        continue;
                    }
                    g += rat(w) * beta(p + j, k - j, z, i as i64);
                }
            }
            g
        })
        .collect();
    binomial_to_monomial(&gamma)
}

/// `[m^d] R_W(m, k)` for `d = 0..=2k`, on board sizes of the given parity.
pub fn rw_coeffs(k: usize, m_parity: i64) -> Vec<BigRational> {
    color_coeffs(k, -parity(m_parity))
}

/// `[m^d] R_K(m, k)` for `d = 0..=2k`, on board sizes of the given parity.
pub fn rk_coeffs(k: usize, m_parity: i64) -> Vec<BigRational> {
    color_coeffs(k, parity(m_parity))
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// `[m^d] B_S(m, k)` as the Cauchy product of the single-color vectors.
pub fn bishop_coeffs(k: usize, m_parity: i64) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); 2 * k + 1];
    for j in 0..=k {
        let prod = poly_mul(&rw_coeffs(j, m_parity), &rk_coeffs(k - j, m_parity));
        for (d, c) in prod.into_iter().enumerate().take(2 * k + 1) {
            out[d] += c;
        }
    }
    out
}

/// `[m^d] A_S(m, k)`, valid for every `m`.
pub fn anassa_coeffs(k: usize) -> Vec<BigRational> {
    let ki = k as i64;
    let half = (ki + 1) / 2;
    let gamma: Vec<BigRational> = (0..=2 * ki)
        .map(|i| {
            let mut g = BigInt::zero();
            for j in 0..=half.min(2 * ki - i) {
                // twice α(k, j)
                let alpha = anassa_weight_doubled(ki, j) * factorial(j as usize);
                for p in (i - ki).max(0)..=ki - j {
                    let w = assoc_stirling2((p + ki - j) as usize, p);
                    if w.is_zero() {
                        continue;
                    }
                    let inner: BigInt = (0..=j)
                        .map(|b| binomial(p, b) * binomial(ki, j - b) * binomial(b, ki + p - i))
                        .sum();
                    g += &alpha * w * inner;
                }
            }
            BigRational::new(g, BigInt::from(2))
        })
        .collect();
    binomial_to_monomial(&gamma)
}

/// Divides `Σ c_d m^d` by `m (m-1) ... (m-k+1)`, one linear factor at a time.
/// The first nonzero remainder is reported.
pub fn divide_by_falling_factorial(coeffs: &[BigRational], k: usize) -> Result<Vec<BigRational>> {
    let mut current = coeffs.to_vec();
    for root in 0..k as i64 {
        if current.is_empty() {
            break;
        }
        let r = rat(BigInt::from(root));
        let n = current.len() - 1;
        let mut quotient = vec![BigRational::zero(); n];
        let mut carry = BigRational::zero();
        for d in (0..=n).rev() {
            let v = &current[d] + &carry * &r;
            if d == 0 {
                if !v.is_zero() {
                    return Err(Error::NonZeroRemainder { root, remainder: v });
                }
            } else {
                quotient[d - 1] = v.clone();
            }
            carry = v;
        }
        current = quotient;
    }
    Ok(current)
}

/// 1 when the two parity vectors coincide, 2 otherwise.
pub fn effective_period(even: &[BigRational], odd: &[BigRational]) -> Result<usize> {
    if even.len() != odd.len() {
        return Err(Error::LengthMismatch(even.len(), odd.len()));
    }
    Ok(if even == odd { 1 } else { 2 })
}

/// Counting function `Q(m, k) = Σ_d c_d(k) m^d` with coefficients chosen by
/// `m mod period`.
#[derive(Clone, Debug, PartialEq)]
pub struct QuasiPolynomial {
    pub piece: Piece,
    pub k: usize,
    /// `coeffs[r][d]` for residue `r` and degree `d`.
    pub coeffs: Vec<Vec<BigRational>>,
}

impl QuasiPolynomial {
    /// Per-parity (period 2) for bishop-type pieces, period 1 for anassas.
    pub fn for_piece(piece: Piece, k: usize) -> Self {
        let coeffs = match piece {
            Piece::Anassa => vec![anassa_coeffs(k)],
            Piece::Bishop => vec![bishop_coeffs(k, 0), bishop_coeffs(k, 1)],
            Piece::White => vec![rw_coeffs(k, 0), rw_coeffs(k, 1)],
            Piece::Black => vec![rk_coeffs(k, 0), rk_coeffs(k, 1)],
        };
        QuasiPolynomial { piece, k, coeffs }
    }

    pub fn degree(&self) -> usize {
        2 * self.k
    }

    pub fn period(&self) -> usize {
        self.coeffs.len()
    }

    /// Smallest period whose residue classes all carry equal vectors.
    pub fn effective_period(&self) -> usize {
        let t = self.period();
        (1..=t)
            .filter(|&d| t.is_multiple_of(d))
            .find(|&d| (0..t).all(|r| self.coeffs[r] == self.coeffs[r % d]))
            .unwrap_or(t)
    }

    /// Same function with the representation reduced to its effective period.
    pub fn collapsed(&self) -> Self {
        let t = self.effective_period();
        QuasiPolynomial {
            piece: self.piece,
            k: self.k,
            coeffs: self.coeffs[..t].to_vec(),
        }
    }

    pub fn residue(&self, m: i64) -> &[BigRational] {
        &self.coeffs[m.rem_euclid(self.period() as i64) as usize]
    }

    pub fn evaluate_rational(&self, m: i64) -> BigRational {
        let x = rat(BigInt::from(m));
        self.residue(m)
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * &x + c)
    }

    /// Exact integer value; a fractional result is a coefficient bug.
    pub fn evaluate(&self, m: i64) -> Result<BigInt> {
        let value = self.evaluate_rational(m);
        to_integer(&value).ok_or(Error::NonIntegerValue { m, value })
    }
}
