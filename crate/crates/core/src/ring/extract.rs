//! Recovering the coefficients `c_λ` of `F = Σ c_λ t^{n-|λ|} p_λ`.
//!
//! The basis elements `t^{n-w} p_λ` with `|λ| = w` are the only ones that
//! reach monomials with t-exponent `n - w`, so the solve splits into one
//! square block per weight. Within a block the rows are the monomials
//! `x^μ t^{n-w}` with `μ` a partition of `w` (exponents weakly decreasing).
//! That matrix is the power-sum to monomial-symmetric transition, which is
//! invertible as soon as there are at least `w` variables. A full residual
//! check afterwards catches anything outside the span.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{power_sum_product, Monomial, MultiPoly, Partition};
use crate::error::{Error, Result};

/// Returns the unique `c_λ` (zeros omitted) with `f = Σ c_λ t^{n-|λ|} p_λ`.
pub fn extract_partition_coefficients(f: &MultiPoly, n: u32) -> Result<BTreeMap<Partition, BigInt>> {
    let nvars = f.nvars();
    if nvars < n as usize {
        return Err(Error::InsufficientVariables { needed: n as usize, have: nvars });
    }
    let mut out = BTreeMap::new();
    for w in 0..=n {
        let basis = Partition::all_of(w);
        let matrix: Vec<Vec<BigRational>> = basis
            .iter()
            .map(|mu| basis.iter().map(|lambda| BigRational::from_integer(dominant_coeff(lambda, mu))).collect())
            .collect();
        let rhs: Vec<BigRational> = basis
            .iter()
            .map(|mu| {
                let mut x = vec![0u32; nvars];
                x[..mu.len()].copy_from_slice(mu.parts());
                BigRational::from_integer(f.coeff(&Monomial::new(x, n - w)))
            })
            .collect();
        let sol = solve_square(matrix, rhs).ok_or(Error::NotInSpan)?;
        for (lambda, c) in basis.into_iter().zip(sol) {
            if !c.is_integer() {
                return Err(Error::NonIntegerCoefficient);
            }
            if !c.is_zero() {
                out.insert(lambda, c.to_integer());
            }
        }
    }

    let mut residual = f.clone();
    for (lambda, c) in &out {
        let scaled_t = MultiPoly::monomial(Monomial::new(vec![0; nvars], n - lambda.weight()), c.clone());
        residual = residual.try_sub(&power_sum_product(lambda, nvars).try_mul(&scaled_t)?)?;
    }
    if residual.is_zero() {
        Ok(out)
    } else {
        Err(Error::NotInSpan)
    }
}

/// Coefficient of `x1^μ1 x2^μ2 ...` in `p_λ`: the number of ways to send each
/// part of `λ` to a variable so that variable `j` receives total `μ_j`.
fn dominant_coeff(lambda: &Partition, mu: &Partition) -> BigInt {
    fn go(parts: &[u32], room: &mut [u32]) -> u64 {
        let Some((&p, rest)) = parts.split_first() else {
            return room.iter().all(|&r| r == 0) as u64;
        };
        let mut total = 0;
        for j in 0..room.len() {
            if room[j] >= p {
                room[j] -= p;
                total += go(rest, room);
                room[j] += p;
            }
        }
        total
    }
    let mut room = mu.parts().to_vec();
    BigInt::from(go(lambda.parts(), &mut room))
}

/// Gauss-Jordan over the rationals. `None` when the matrix is singular.
fn solve_square(mut a: Vec<Vec<BigRational>>, mut b: Vec<BigRational>) -> Option<Vec<BigRational>> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let inv = BigRational::one() / &a[col][col];
        for v in a[col].iter_mut() {
            *v *= &inv;
        }
        b[col] *= &inv;
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            let pivot_row = a[col].clone();
            for (cell, p) in a[r].iter_mut().zip(&pivot_row).skip(col) {
                *cell -= &factor * p;
            }
            let delta = &factor * &b[col];
            b[r] -= delta;
        }
    }
    Some(b)
}
