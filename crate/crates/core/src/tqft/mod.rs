//! SU(2) at level `k = r - 2`: twist factors, the first row of the
//! S-matrix and Hilbert-space dimensions of spheres with fundamental
//! marked points.
//!
//! Twist factors are exact cyclotomic integers; the S-row is only used in
//! numeric bounds and is kept in `f64`.

use std::f64::consts::PI;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use crate::evaluator::is_exceptional_root;
use crate::exactnum::{CycloInt, CyclotomicRing};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TqftError {
    #[error("r must be at least 3, got {0}")]
    RootTooSmall(usize),
    #[error("label {a} outside 0..={max}")]
    LabelOutOfRange { a: usize, max: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TqftParams {
    pub r: usize,
    pub level: usize,
    /// `q⁴ = 1` or `q⁶ = 1`.
    pub exceptional: bool,
}

impl TqftParams {
    pub fn new(r: usize) -> Result<Self, TqftError> {
        if r < 3 {
            return Err(TqftError::RootTooSmall(r));
        }
        Ok(TqftParams {
            r,
            level: r - 2,
            exceptional: is_exceptional_root(r),
        })
    }

    /// Labels `0..=r-2`.
    pub fn labels(&self) -> std::ops::RangeInclusive<usize> {
        0..=self.r - 2
    }

    pub fn label_count(&self) -> usize {
        self.r - 1
    }
}

/// Twist factor `θ(a) = ζ_{4r}^{a²+2a}`.
pub fn theta(a: usize, r: usize) -> Result<CycloInt, TqftError> {
    let p = TqftParams::new(r)?;
    if a > p.r - 2 {
        return Err(TqftError::LabelOutOfRange { a, max: p.r - 2 });
    }
    let ring = CyclotomicRing::get(4 * r).expect("4r is positive");
    Ok(CycloInt::zeta_pow(&ring, (a * a + 2 * a) as i64))
}

/// `S_{0,i} = √(2/r)·sin((i+1)π/r)` for `i = 0..=r-2`.
#[derive(Debug, Clone, PartialEq)]
pub struct SRow {
    pub r: usize,
    pub values: Vec<f64>,
}

impl SRow {
    /// The defining expression of entry `i`.
    pub fn formula(&self, i: usize) -> String {
        format!("sqrt(2/{r})*sin({}*pi/{r})", i + 1, r = self.r)
    }
}

impl fmt::Display for SRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.values.iter().enumerate() {
            writeln!(f, "S[0,{i}] = {v:.12}  # {}", self.formula(i))?;
        }
        Ok(())
    }
}

fn s_entry(row: usize, i: usize, r: usize) -> f64 {
    let r = r as f64;
    (2.0 / r).sqrt() * (((row + 1) * (i + 1)) as f64 * PI / r).sin()
}

pub fn s_row(r: usize) -> Result<SRow, TqftError> {
    TqftParams::new(r)?;
    Ok(SRow {
        r,
        values: (0..r - 1).map(|i| s_entry(0, i, r)).collect(),
    })
}

/// `Σ_i S_{0,i}^{-g}`.
pub fn verlinde_bound(r: usize, g: usize) -> Result<f64, TqftError> {
    let row = s_row(r)?;
    Ok(row.values.iter().map(|s| s.powi(-(g as i32))).sum())
}

/// Walks of length `n` from 0 back to 0 on the path `0 - 1 - … - (r-2)`.
pub fn fusion_dim(r: usize, n: usize) -> Result<BigUint, TqftError> {
    let p = TqftParams::new(r)?;
    let width = p.label_count();
    let mut cur = vec![BigUint::zero(); width];
    cur[0] = BigUint::from(1u8);
    for _ in 0..n {
        let mut next = vec![BigUint::zero(); width];
        for (a, c) in cur.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if a > 0 {
                next[a - 1] += c;
            }
            if a + 1 < width {
                next[a + 1] += c;
            }
        }
        cur = next;
    }
    Ok(cur.swap_remove(0))
}

/// The same dimension from the Verlinde formula
/// `Σ_i S_{0,i}²·(S_{1,i}/S_{0,i})^n`, before rounding.
pub fn fusion_dim_verlinde(r: usize, n: usize) -> Result<f64, TqftError> {
    TqftParams::new(r)?;
    Ok((0..r - 1)
        .map(|i| {
            let s0 = s_entry(0, i, r);
            s0 * s0 * (s_entry(1, i, r) / s0).powi(n as i32)
        })
        .sum())
}

/// `fusion_dim` as an `f64`, for comparisons with the numeric bounds.
pub fn fusion_dim_f64(r: usize, n: usize) -> Result<f64, TqftError> {
    Ok(fusion_dim(r, n)?.to_f64().unwrap_or(f64::INFINITY))
}
