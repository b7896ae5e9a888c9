use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::ExactError;

/// A Laurent polynomial in `A` with arbitrary-precision integer coefficients.
///
/// Stored densely from the lowest exponent. The first and last stored
/// coefficients are always nonzero, so equal polynomials have equal
/// representations and the zero polynomial stores nothing.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentInt {
    low: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentInt {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `A`
    pub fn var() -> Self {
        Self::monomial(1, 1)
    }

    pub fn monomial(coeff: impl Into<BigInt>, exp: i64) -> Self {
        let c = coeff.into();
        if c.is_zero() {
            return Self::zero();
        }
        LaurentInt {
            low: exp,
            coeffs: vec![c],
        }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut out = Self::zero();
        for (e, c) in terms {
            out.add_scaled_shifted(&Self::monomial(c, 0), 1, e);
        }
        out
    }

    /// The loop value `δ = -A² - A⁻²`.
    pub fn delta() -> Self {
        Self::from_terms([(2, -1), (-2, -1)])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_exp(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    pub fn max_exp(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        let idx = exp - self.low;
        if idx < 0 || idx >= self.coeffs.len() as i64 {
            BigInt::zero()
        } else {
            self.coeffs[idx as usize].clone()
        }
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.low + i as i64, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// Multiplies by `A^k`.
    pub fn shift(&self, k: i64) -> Self {
        let mut out = self.clone();
        if !out.is_zero() {
            out.low += k;
        }
        out
    }

    /// Substitutes `A ↦ A⁻¹`.
    pub fn bar(&self) -> Self {
        match self.max_exp() {
            None => Self::zero(),
            Some(hi) => LaurentInt {
                low: -hi,
                coeffs: self.coeffs.iter().rev().cloned().collect(),
            },
        }
    }

    /// Substitutes `A ↦ A^k` for a nonzero integer `k`.
    pub fn substitute_power(&self, k: i64) -> Self {
        assert!(k != 0, "substitution exponent must be nonzero");
        Self::from_terms(self.terms().map(|(e, c)| (e * k, c.clone())))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// `self += sign · A^k · other`, with `sign` ±1.
    pub fn add_scaled_shifted(&mut self, other: &LaurentInt, sign: i8, k: i64) {
        if other.is_zero() {
            return;
        }
        let other_low = other.low + k;
        if self.is_zero() {
            self.low = other_low;
            self.coeffs = if sign < 0 {
                other.coeffs.iter().map(|c| -c).collect()
            } else {
                other.coeffs.clone()
            };
            return;
        }
        let other_high = other_low + other.coeffs.len() as i64;
        let self_high = self.low + self.coeffs.len() as i64;
        let new_low = self.low.min(other_low);
        let new_high = self_high.max(other_high);
        if new_low < self.low {
            let pad = (self.low - new_low) as usize;
            let mut fresh = vec![BigInt::zero(); pad];
            fresh.append(&mut self.coeffs);
            self.coeffs = fresh;
            self.low = new_low;
        }
        if new_high > self.low + self.coeffs.len() as i64 {
            self.coeffs
                .resize((new_high - self.low) as usize, BigInt::zero());
        }
        let offset = (other_low - self.low) as usize;
        for (i, c) in other.coeffs.iter().enumerate() {
            if sign < 0 {
                self.coeffs[offset + i] -= c;
            } else {
                self.coeffs[offset + i] += c;
            }
        }
        self.normalize();
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    /// Exact division; fails if the quotient is not a Laurent polynomial
    /// with integer coefficients.
    pub fn div_exact(&self, divisor: &LaurentInt) -> Result<LaurentInt, ExactError> {
        if divisor.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        // Both stored coefficient vectors are polynomials with nonzero
        // constant term, so the quotient is an ordinary polynomial.
        let den = &divisor.coeffs;
        let lead = den.last().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() < den.len() {
            return Err(ExactError::NonDivisible);
        }
        let qlen = rem.len() - den.len() + 1;
        let mut quot = vec![BigInt::zero(); qlen];
        for qi in (0..qlen).rev() {
            let top = &rem[qi + den.len() - 1];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(ExactError::NonDivisible);
            }
            for (j, d) in den.iter().enumerate() {
                rem[qi + j] -= &q * d;
            }
            quot[qi] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(ExactError::NonDivisible);
        }
        let mut out = LaurentInt {
            low: self.low - divisor.low,
            coeffs: quot,
        };
        out.normalize();
        Ok(out)
    }

    /// The gcd of all exponents with nonzero coefficient (0 for constants).
    pub fn exponent_gcd(&self) -> i64 {
        self.terms().fold(0, |g, (e, _)| g.gcd(&e))
    }

    /// Renders the polynomial in `t = A⁴`, lowest power first;
    /// exponents that are not multiples of 4 appear as fractions.
    pub fn to_t_string(&self) -> String {
        let terms: Vec<_> = self
            .terms()
            .map(|(e, c)| (frac::Frac::new(e, 4).to_string(), c))
            .collect();
        format_terms(terms.into_iter(), "t")
    }
}

// Tiny reduced fraction used only for display of t-exponents.
mod frac {
    use num_integer::Integer;
    use std::fmt;

    pub struct Frac(i64, i64);

    impl Frac {
        pub fn new(n: i64, d: i64) -> Self {
            let g = n.gcd(&d).max(1);
            Frac(n / g, d / g)
        }
    }

    impl fmt::Display for Frac {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            if self.1 == 1 {
                write!(f, "{}", self.0)
            } else {
                write!(f, "{}/{}", self.0, self.1)
            }
        }
    }
}

fn format_terms<'a, I>(terms: I, var: &str) -> String
where
    I: Iterator<Item = (String, &'a BigInt)>,
{
    let mut out = String::new();
    for (exp, c) in terms {
        let neg = c.is_negative();
        let mag = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let body = match exp.as_str() {
            "0" => mag.to_string(),
            "1" => var.to_string(),
            _ => format!("{var}^{exp}"),
        };
        if exp == "0" || mag.is_one() {
            out.push_str(&body);
        } else {
            out.push_str(&format!("{mag}{body}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for LaurentInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<_> = self.terms().map(|(e, c)| (e.to_string(), c)).collect();
        f.write_str(&format_terms(terms.into_iter().rev(), "A"))
    }
}

impl fmt::Debug for LaurentInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentInt({self})")
    }
}

impl Add for &LaurentInt {
    type Output = LaurentInt;
    fn add(self, rhs: &LaurentInt) -> LaurentInt {
        let mut out = self.clone();
        out.add_scaled_shifted(rhs, 1, 0);
        out
    }
}

impl Sub for &LaurentInt {
    type Output = LaurentInt;
    fn sub(self, rhs: &LaurentInt) -> LaurentInt {
        let mut out = self.clone();
        out.add_scaled_shifted(rhs, -1, 0);
        out
    }
}

impl Neg for &LaurentInt {
    type Output = LaurentInt;
    fn neg(self) -> LaurentInt {
        LaurentInt {
            low: self.low,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &LaurentInt {
    type Output = LaurentInt;
    fn mul(self, rhs: &LaurentInt) -> LaurentInt {
        if self.is_zero() || rhs.is_zero() {
            return LaurentInt::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        let mut out = LaurentInt {
            low: self.low + rhs.low,
            coeffs,
        };
        out.normalize();
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentInt {
            type Output = LaurentInt;
            fn $m(self, rhs: LaurentInt) -> LaurentInt {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentInt {
    type Output = LaurentInt;
    fn neg(self) -> LaurentInt {
        -&self
    }
}
