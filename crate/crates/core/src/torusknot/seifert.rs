//! Seifert matrices of closed positive braids and signatures of symmetric
//! rational forms.
//!
//! Seifert's algorithm on the closure of a positive braid on `s` strands
//! gives `s` stacked disks joined by one half-twisted band per crossing.
//! Between two consecutive occurrences of the generator `σ_i` there is a
//! loop running through the bands of those two crossings; these loops form
//! a basis of `H_1` of the surface. With this basis the Seifert form is
//!
//! - `−1` on the diagonal,
//! - `+1` at `(x, y)` when `y` is the next loop after `x` on the same column,
//! - for `x` on column `i` spanning word positions `(s₁, t₁)` and `y` on
//!   column `i + 1` spanning `(s₂, t₂)`: `+1` at `(x, y)` when
//!   `s₁ < s₂ < t₁ < t₂`, and `−1` at `(y, x)` when `s₂ < s₁ < t₂ < t₁`,
//! - zero otherwise.
//!
//! `det(V − t·Vᵀ)` then equals the Alexander polynomial normalized to
//! constant term 1, which the tests check.

#![allow(clippy::needless_range_loop)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

#[derive(Clone, Copy, Debug)]
struct Loop {
    column: usize,
    index: usize,
    start: usize,
    end: usize,
}

/// Seifert matrix of the closure of the positive braid `word`, where each
/// letter `i` stands for the generator `σ_{i+1}`.
pub fn positive_braid_seifert_matrix(word: &[usize]) -> Vec<Vec<i64>> {
    let columns = word.iter().max().map_or(0, |m| m + 1);
    let mut loops = Vec::new();
    for column in 0..columns {
        let positions: Vec<usize> = word
            .iter()
            .enumerate()
            .filter(|(_, &g)| g == column)
            .map(|(k, _)| k)
            .collect();
        for (index, w) in positions.windows(2).enumerate() {
            loops.push(Loop {
                column,
                index,
                start: w[0],
                end: w[1],
            });
        }
    }

    let n = loops.len();
    let mut v = vec![vec![0i64; n]; n];
    for (x, lx) in loops.iter().enumerate() {
        v[x][x] = -1;
        for (y, ly) in loops.iter().enumerate() {
            if ly.column == lx.column && ly.index == lx.index + 1 {
                v[x][y] = 1;
            }
            if ly.column == lx.column + 1 {
                if lx.start < ly.start && ly.start < lx.end && lx.end < ly.end {
                    v[x][y] = 1;
                } else if ly.start < lx.start && lx.start < ly.end && ly.end < lx.end {
                    v[y][x] = -1;
                }
            }
        }
    }
    v
}

/// The braid word `(σ₁ σ₂ ⋯ σ_{strands−1})^twists`.
pub fn torus_braid_word(strands: usize, twists: usize) -> Vec<usize> {
    (0..twists)
        .flat_map(|_| 0..strands.saturating_sub(1))
        .collect()
}

pub fn symmetrize(v: &[Vec<i64>]) -> Vec<Vec<BigRational>> {
    let n = v.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| BigRational::from_integer(BigInt::from(v[i][j] + v[j][i])))
                .collect()
        })
        .collect()
}

/// Signature (positive minus negative inertia) of a symmetric rational
/// matrix, by congruence diagonalization.
pub fn symmetric_signature(mut m: Vec<Vec<BigRational>>) -> i64 {
    let n = m.len();
    let mut sig = 0i64;
    for k in 0..n {
        if m[k][k].is_zero() {
            if let Some(j) = (k + 1..n).find(|&j| !m[j][j].is_zero()) {
                m.swap(k, j);
                for row in m.iter_mut() {
                    row.swap(k, j);
                }
            } else if let Some(j) = (k + 1..n).find(|&j| !m[k][j].is_zero()) {
                // Adding row/column j to row/column k makes the pivot 2·m[k][j].
                for c in 0..n {
                    let add = m[j][c].clone();
                    m[k][c] += add;
                }
                for r in 0..n {
                    let add = m[r][j].clone();
                    m[r][k] += add;
                }
            } else {
                continue;
            }
        }
        let pivot = m[k][k].clone();
        sig += if pivot.is_positive() { 1 } else { -1 };
        for r in k + 1..n {
            if m[r][k].is_zero() {
                continue;
            }
            let factor = &m[r][k] / &pivot;
            for c in k..n {
                let sub = &factor * &m[k][c];
                m[r][c] -= sub;
            }
        }
        // Column operations mirror the row operations; by symmetry they only
        // clear column k below the pivot.
        for r in k + 1..n {
            m[k][r] = BigRational::zero();
            m[r][k] = BigRational::zero();
        }
    }
    sig
}

/// Determinant by fraction-valued Gaussian elimination.
pub fn determinant(mut m: Vec<Vec<BigRational>>) -> BigRational {
    let n = m.len();
    let mut det = BigRational::from_integer(1.into());
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !m[r][k].is_zero()) else {
            return BigRational::zero();
        };
        if p != k {
            m.swap(p, k);
            det = -det;
        }
        let pivot = m[k][k].clone();
        det *= &pivot;
        for r in k + 1..n {
            if m[r][k].is_zero() {
                continue;
            }
            let factor = &m[r][k] / &pivot;
            for c in k..n {
                let sub = &factor * &m[k][c];
                m[r][c] -= sub;
            }
        }
    }
    det
}
