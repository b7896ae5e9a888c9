use std::collections::HashMap;
use std::fmt;
use std::ops::{Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::ExactError;

/// A dense integer polynomial in `x`, lowest degree first, without trailing
/// zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly(Vec<BigInt>);

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly(coeffs)
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `c · x^k`
    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let mut v = vec![BigInt::zero(); k + 1];
        v[k] = c.into();
        Self::new(v)
    }

    pub fn zero() -> Self {
        IntPoly(Vec::new())
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.0
    }

    pub fn is_monic(&self) -> bool {
        self.0.last().is_some_and(One::is_one)
    }

    /// Division with remainder by a monic polynomial.
    pub fn div_rem_monic(&self, divisor: &IntPoly) -> (IntPoly, IntPoly) {
        assert!(divisor.is_monic(), "divisor must be monic");
        let dlen = divisor.0.len();
        let mut rem = self.0.clone();
        if rem.len() < dlen {
            return (IntPoly::zero(), self.clone());
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dlen + 1];
        for qi in (0..quot.len()).rev() {
            let top = rem[qi + dlen - 1].clone();
            if top.is_zero() {
                continue;
            }
            for (j, d) in divisor.0.iter().enumerate() {
                rem[qi + j] -= &top * d;
            }
            quot[qi] = top;
        }
        (IntPoly::new(quot), IntPoly::new(rem))
    }

    /// Numeric value at a complex point given as `(re, im)`.
    pub fn eval_complex(&self, z: (f64, f64)) -> (f64, f64) {
        let mut acc = (0.0, 0.0);
        for c in self.0.iter().rev() {
            let cf = c.to_f64().unwrap_or(f64::NAN);
            acc = (acc.0 * z.0 - acc.1 * z.1 + cf, acc.0 * z.1 + acc.1 * z.0);
        }
        acc
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("x")?,
                (1, false) => write!(f, "{mag}x")?,
                (_, true) => write!(f, "x^{k}")?,
                (_, false) => write!(f, "{mag}x^{k}")?,
            }
        }
        Ok(())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.0.len() + rhs.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.0.len().max(rhs.0.len());
        let mut out = vec![BigInt::zero(); n];
        for (i, c) in self.0.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in rhs.0.iter().enumerate() {
            out[i] -= c;
        }
        IntPoly::new(out)
    }
}

/// The `m`-th cyclotomic polynomial, by dividing `x^m - 1` by the
/// cyclotomic polynomials of all proper divisors of `m`.
pub fn cyclotomic_poly(m: usize) -> Result<IntPoly, ExactError> {
    if m == 0 {
        return Err(ExactError::ZeroOrder);
    }
    let mut memo = HashMap::new();
    Ok(cyclotomic_memo(m, &mut memo))
}

fn cyclotomic_memo(m: usize, memo: &mut HashMap<usize, IntPoly>) -> IntPoly {
    if let Some(p) = memo.get(&m) {
        return p.clone();
    }
    let mut num = IntPoly::monomial(1, m);
    num = &num - &IntPoly::one();
    for d in (1..m).filter(|d| m.is_multiple_of(*d)) {
        let phi_d = cyclotomic_memo(d, memo);
        let (q, r) = num.div_rem_monic(&phi_d);
        debug_assert!(r.is_zero());
        num = q;
    }
    memo.insert(m, num.clone());
    num
}

#[cfg(test)]
mod tests {
    use super::*;

    fn totient(m: usize) -> usize {
        (1..=m).filter(|k| num_integer::gcd(*k, m) == 1).count()
    }

    #[test]
    fn small_cases() {
        assert_eq!(cyclotomic_poly(1).unwrap(), IntPoly::from_i64(&[-1, 1]));
        assert_eq!(cyclotomic_poly(2).unwrap(), IntPoly::from_i64(&[1, 1]));
        assert_eq!(cyclotomic_poly(4).unwrap(), IntPoly::from_i64(&[1, 0, 1]));
        assert_eq!(cyclotomic_poly(0), Err(ExactError::ZeroOrder));
    }

    #[test]
    fn phi_20() {
        let expected = IntPoly::from_i64(&[1, 0, -1, 0, 1, 0, -1, 0, 1]);
        let phi = cyclotomic_poly(20).unwrap();
        assert_eq!(phi, expected);
        // Reconstitute x^20 - 1 from all divisors.
        let prod = [1, 2, 4, 5, 10, 20]
            .iter()
            .map(|&d| cyclotomic_poly(d).unwrap())
            .fold(IntPoly::one(), |acc, p| &acc * &p);
        assert_eq!(
            prod,
            IntPoly::from_i64(&{
                let mut v = vec![0i64; 21];
                v[0] = -1;
                v[20] = 1;
                v
            })
        );
    }

    #[test]
    fn divisor_product_identity_up_to_64() {
        for m in 1..=64usize {
            let phi = cyclotomic_poly(m).unwrap();
            assert!(phi.is_monic());
            assert_eq!(phi.degree(), Some(totient(m)), "degree of Phi_{m}");
            let prod = (1..=m)
                .filter(|d| m.is_multiple_of(*d))
                .map(|d| cyclotomic_poly(d).unwrap())
                .fold(IntPoly::one(), |acc, p| &acc * &p);
            let target = &IntPoly::monomial(1, m) - &IntPoly::one();
            assert_eq!(prod, target, "m = {m}");
        }
    }

    #[test]
    fn phi_105_has_a_two() {
        let phi = cyclotomic_poly(105).unwrap();
        assert!(phi.coeffs().iter().any(|c| c == &BigInt::from(-2)));
    }
}
