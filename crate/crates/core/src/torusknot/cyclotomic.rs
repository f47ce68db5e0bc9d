//! Cyclotomic polynomials over the integers, via the Möbius product
//! `Φ_N(x) = Π_{d | N} (x^d − 1)^{μ(N/d)}`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exactalg::IntPoly;

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

fn mobius(mut n: u64) -> i8 {
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

pub fn totient(mut n: u64) -> u64 {
    let mut out = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            out -= out / p;
        }
        p += 1;
    }
    if n > 1 {
        out -= out / n;
    }
    out
}

/// `f · (x^d − 1)`
fn mul_x_pow_minus_one(f: &[BigInt], d: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); f.len() + d];
    for (i, c) in f.iter().enumerate() {
        out[i + d] += c;
        out[i] -= c;
    }
    out
}

/// `f / (x^d − 1)`, assuming the division is exact.
fn div_x_pow_minus_one(f: &[BigInt], d: usize) -> Vec<BigInt> {
    // f = (x^d − 1)·g gives g_i = g_{i−d} − f_i, building g from the bottom.
    let len = f.len() - d;
    let mut g: Vec<BigInt> = Vec::with_capacity(len);
    for i in 0..len {
        let prev = if i >= d {
            g[i - d].clone()
        } else {
            BigInt::zero()
        };
        g.push(prev - &f[i]);
    }
    g
}

/// The `n`-th cyclotomic polynomial, `n ≥ 1`.
pub fn cyclotomic(n: u64) -> IntPoly {
    assert!(n >= 1, "cyclotomic index must be positive");
    let divs = divisors(n);
    let mut coeffs = vec![BigInt::one()];
    for &d in &divs {
        if mobius(n / d) == 1 {
            coeffs = mul_x_pow_minus_one(&coeffs, d as usize);
        }
    }
    for &d in &divs {
        if mobius(n / d) == -1 {
            coeffs = div_x_pow_minus_one(&coeffs, d as usize);
        }
    }
    IntPoly::new(coeffs)
}

/// True iff `Φ_n` divides `f` in `Z[x]`. Skips the division when the degree
/// already rules it out.
pub fn cyclotomic_divides(n: u64, f: &IntPoly) -> bool {
    match f.degree() {
        None => true,
        Some(deg) if (totient(n) as usize) > deg => false,
        Some(_) => cyclotomic(n).divides(f),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic(1), IntPoly::from_i64s(&[-1, 1]));
        assert_eq!(cyclotomic(2), IntPoly::from_i64s(&[1, 1]));
        assert_eq!(cyclotomic(6), IntPoly::from_i64s(&[1, -1, 1]));
        assert_eq!(cyclotomic(12), IntPoly::from_i64s(&[1, 0, -1, 0, 1]));
        // first cyclotomic with a coefficient outside {-1, 0, 1}
        assert!(cyclotomic(105)
            .coeffs()
            .iter()
            .any(|c| c == &BigInt::from(-2)));
    }

    #[test]
    fn product_over_divisors_is_x_n_minus_one() {
        for n in 1..=40u64 {
            let prod = divisors(n)
                .into_iter()
                .fold(IntPoly::one(), |acc, d| &acc * &cyclotomic(d));
            let x_n_minus_one = &IntPoly::monomial(n as usize, 1) - &IntPoly::one();
            assert_eq!(prod, x_n_minus_one, "n = {n}");
            assert_eq!(cyclotomic(n).degree(), Some(totient(n) as usize));
        }
    }
}
