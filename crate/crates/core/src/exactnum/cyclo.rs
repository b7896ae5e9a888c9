use std::collections::HashMap;
use std::f64::consts::TAU;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::{cyclotomic_poly, ExactError, IntPoly, LaurentInt};

/// `Z[x]/Φ_m(x)`, the ring of integers of the `m`-th cyclotomic field in
/// the power basis `1, ζ, …, ζ^{φ(m)-1}`.
pub struct CyclotomicRing {
    order: usize,
    phi: IntPoly,
    // Canonical residues of ζ^j for 0 ≤ j < m.
    powers: Vec<Vec<BigInt>>,
}

impl CyclotomicRing {
    /// Shared ring of order `m`; rings are built once per order.
    pub fn get(m: usize) -> Result<Arc<CyclotomicRing>, ExactError> {
        static CACHE: OnceLock<Mutex<HashMap<usize, Arc<CyclotomicRing>>>> = OnceLock::new();
        if m == 0 {
            return Err(ExactError::ZeroOrder);
        }
        let cache = CACHE.get_or_init(Default::default);
        if let Some(ring) = cache.lock().unwrap().get(&m) {
            return Ok(ring.clone());
        }
        let ring = Arc::new(Self::build(m)?);
        Ok(cache.lock().unwrap().entry(m).or_insert(ring).clone())
    }

    fn build(m: usize) -> Result<Self, ExactError> {
        let phi = cyclotomic_poly(m)?;
        let deg = phi.degree().unwrap();
        let mut powers = Vec::with_capacity(m);
        for j in 0..m {
            let (_, r) = IntPoly::monomial(1, j).div_rem_monic(&phi);
            let mut rep = r.into_coeffs();
            rep.resize(deg, BigInt::zero());
            powers.push(rep);
        }
        Ok(CyclotomicRing {
            order: m,
            phi,
            powers,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn degree(&self) -> usize {
        self.phi.degree().unwrap()
    }

    pub fn modulus(&self) -> &IntPoly {
        &self.phi
    }

    /// Canonical residue of `Σ coeffs[j] x^j`.
    pub fn reduce_coeffs(&self, coeffs: &[BigInt]) -> Vec<BigInt> {
        let deg = self.degree();
        let (_, r) = IntPoly::new(coeffs.to_vec()).div_rem_monic(&self.phi);
        let mut rep = r.into_coeffs();
        rep.resize(deg, BigInt::zero());
        rep
    }

    /// Canonical residue of an element of `Z[x]/(x^m - 1)` given by its
    /// `m` coefficients, via the precomputed residues of `ζ^j`.
    pub fn reduce_group_ring(&self, coeffs: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(coeffs.len(), self.order);
        let mut rep = vec![BigInt::zero(); self.degree()];
        for (j, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (slot, p) in rep.iter_mut().zip(&self.powers[j]) {
                if !p.is_zero() {
                    *slot += c * p;
                }
            }
        }
        rep
    }

    fn power_rep(&self, k: i64) -> &[BigInt] {
        &self.powers[k.rem_euclid(self.order as i64) as usize]
    }
}

/// An exact element of `Z[ζ_m]`.
#[derive(Clone)]
pub struct CycloInt {
    ring: Arc<CyclotomicRing>,
    rep: Vec<BigInt>,
}

impl CycloInt {
    pub fn zero(ring: &Arc<CyclotomicRing>) -> Self {
        CycloInt {
            ring: ring.clone(),
            rep: vec![BigInt::zero(); ring.degree()],
        }
    }

    pub fn from_int(ring: &Arc<CyclotomicRing>, n: impl Into<BigInt>) -> Self {
        let mut out = Self::zero(ring);
        if let Some(slot) = out.rep.first_mut() {
            *slot = n.into();
        }
        out
    }

    pub fn one(ring: &Arc<CyclotomicRing>) -> Self {
        Self::from_int(ring, 1)
    }

    /// `ζ_m^k`; negative `k` allowed.
    pub fn zeta_pow(ring: &Arc<CyclotomicRing>, k: i64) -> Self {
        CycloInt {
            ring: ring.clone(),
            rep: ring.power_rep(k).to_vec(),
        }
    }

    pub(crate) fn from_rep(ring: &Arc<CyclotomicRing>, rep: Vec<BigInt>) -> Self {
        debug_assert_eq!(rep.len(), ring.degree());
        CycloInt {
            ring: ring.clone(),
            rep,
        }
    }

    pub fn order(&self) -> usize {
        self.ring.order
    }

    pub fn ring(&self) -> &Arc<CyclotomicRing> {
        &self.ring
    }

    /// Coefficients in the power basis; length is `φ(m)`.
    pub fn rep(&self) -> &[BigInt] {
        &self.rep
    }

    pub fn is_zero(&self) -> bool {
        self.rep.iter().all(Zero::is_zero)
    }

    pub fn pow(&self, n: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.ring);
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            n >>= 1;
        }
        acc
    }

    /// Image under `ζ_m ↦ e^{2πi/m}`. Diagnostics only.
    pub fn complex_approx(&self) -> (f64, f64) {
        let m = self.ring.order as f64;
        self.rep.iter().enumerate().fold((0.0, 0.0), |acc, (j, c)| {
            let cf = c.to_f64().unwrap_or(f64::NAN);
            let angle = TAU * j as f64 / m;
            (acc.0 + cf * angle.cos(), acc.1 + cf * angle.sin())
        })
    }

    fn check_same_ring(&self, other: &CycloInt) {
        assert_eq!(
            self.ring.order, other.ring.order,
            "cyclotomic orders differ"
        );
    }
}

impl PartialEq for CycloInt {
    fn eq(&self, other: &Self) -> bool {
        self.ring.order == other.ring.order && self.rep == other.rep
    }
}

impl Eq for CycloInt {}

impl fmt::Debug for CycloInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloInt(m={}, {})", self.ring.order, self)
    }
}

impl fmt::Display for CycloInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, c) in self.rep.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

impl Add for &CycloInt {
    type Output = CycloInt;
    fn add(self, rhs: &CycloInt) -> CycloInt {
        self.check_same_ring(rhs);
        let rep = self.rep.iter().zip(&rhs.rep).map(|(a, b)| a + b).collect();
        CycloInt::from_rep(&self.ring, rep)
    }
}

impl Sub for &CycloInt {
    type Output = CycloInt;
    fn sub(self, rhs: &CycloInt) -> CycloInt {
        self.check_same_ring(rhs);
        let rep = self.rep.iter().zip(&rhs.rep).map(|(a, b)| a - b).collect();
        CycloInt::from_rep(&self.ring, rep)
    }
}

impl Neg for &CycloInt {
    type Output = CycloInt;
    fn neg(self) -> CycloInt {
        CycloInt::from_rep(&self.ring, self.rep.iter().map(|c| -c).collect())
    }
}

impl Mul for &CycloInt {
    type Output = CycloInt;
    fn mul(self, rhs: &CycloInt) -> CycloInt {
        self.check_same_ring(rhs);
        let prod = &IntPoly::new(self.rep.clone()) * &IntPoly::new(rhs.rep.clone());
        CycloInt::from_rep(&self.ring, self.ring.reduce_coeffs(prod.coeffs()))
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for CycloInt {
            type Output = CycloInt;
            fn $m(self, rhs: CycloInt) -> CycloInt {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Canonical residue of `p` modulo `Φ_m`.
pub fn cyclo_reduce(p: &IntPoly, m: usize) -> Result<CycloInt, ExactError> {
    let ring = CyclotomicRing::get(m)?;
    let rep = ring.reduce_coeffs(p.coeffs());
    Ok(CycloInt::from_rep(&ring, rep))
}

/// Substitutes `A ↦ ζ_m^e` into a Laurent polynomial.
pub fn eval_at_root(f: &LaurentInt, m: usize, e: i64) -> Result<CycloInt, ExactError> {
    let ring = CyclotomicRing::get(m)?;
    let mut acc = vec![BigInt::zero(); m];
    for (k, c) in f.terms() {
        acc[(k * e).rem_euclid(m as i64) as usize] += c;
    }
    Ok(CycloInt::from_rep(&ring, ring.reduce_group_ring(&acc)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn close(a: (f64, f64), b: (f64, f64), tol: f64) -> bool {
        (a.0 - b.0).abs() < tol && (a.1 - b.1).abs() < tol
    }

    fn random_poly(rng: &mut ChaCha8Rng, max_len: usize) -> IntPoly {
        let len = rng.gen_range(0..=max_len);
        IntPoly::new(
            (0..len)
                .map(|_| BigInt::from(rng.gen_range(-9i64..=9)))
                .collect(),
        )
    }

    #[test]
    fn x_to_the_m_is_one() {
        for m in 1..=40 {
            let r = cyclo_reduce(&IntPoly::monomial(1, m), m).unwrap();
            assert_eq!(
                r,
                CycloInt::one(&CyclotomicRing::get(m).unwrap()),
                "m = {m}"
            );
        }
    }

    #[test]
    fn zero_reduces_to_zero_vector() {
        let r = cyclo_reduce(&IntPoly::zero(), 20).unwrap();
        assert_eq!(r.rep().len(), 8);
        assert!(r.is_zero());
    }

    #[test]
    fn phi_reduces_to_zero() {
        for m in 1..=64 {
            let phi = cyclotomic_poly(m).unwrap();
            assert!(cyclo_reduce(&phi, m).unwrap().is_zero(), "m = {m}");
        }
    }

    #[test]
    fn reduction_is_a_homomorphism_m20() {
        let mut rng = ChaCha8Rng::seed_from_u64(20);
        for _ in 0..1000 {
            let p = random_poly(&mut rng, 30);
            let q = random_poly(&mut rng, 30);
            let lhs = cyclo_reduce(&(&p * &q), 20).unwrap();
            let rhs = &cyclo_reduce(&p, 20).unwrap() * &cyclo_reduce(&q, 20).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn eval_full_period_and_constants() {
        for r in 3..=10 {
            let m = 4 * r;
            let f = LaurentInt::monomial(1, m as i64);
            let ring = CyclotomicRing::get(m).unwrap();
            assert_eq!(eval_at_root(&f, m, -1).unwrap(), CycloInt::one(&ring));
            assert_eq!(
                eval_at_root(&LaurentInt::one(), m, -1).unwrap(),
                CycloInt::one(&ring)
            );
        }
    }

    #[test]
    fn eval_delta_at_twentieth_root() {
        let v = eval_at_root(&LaurentInt::delta(), 20, -1).unwrap();
        let z = v.complex_approx();
        let golden = -2.0 * (std::f64::consts::PI / 5.0).cos();
        assert!(close(z, (golden, 0.0), 1e-12), "{z:?}");
        assert!((z.0 + 1.6180).abs() < 1e-4);
    }

    #[test]
    fn complex_images() {
        let r4 = CyclotomicRing::get(4).unwrap();
        assert!(close(
            CycloInt::zero(&r4).complex_approx(),
            (0.0, 0.0),
            1e-12
        ));
        assert!(close(
            CycloInt::zeta_pow(&r4, 1).complex_approx(),
            (0.0, 1.0),
            1e-12
        ));
        let r20 = CyclotomicRing::get(20).unwrap();
        let a = TAU * 3.0 / 20.0;
        assert!(close(
            CycloInt::zeta_pow(&r20, 3).complex_approx(),
            (a.cos(), a.sin()),
            1e-12
        ));
    }

    #[test]
    fn complex_approx_matches_unreduced_evaluation() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for m in [20usize, 28, 32, 36, 40] {
            let z = ((TAU / m as f64).cos(), (TAU / m as f64).sin());
            for _ in 0..50 {
                let p = random_poly(&mut rng, 60);
                let direct = p.eval_complex(z);
                let reduced = cyclo_reduce(&p, m).unwrap().complex_approx();
                assert!(close(direct, reduced, 1e-9), "m={m} {direct:?} {reduced:?}");
            }
        }
    }

    fn arb_laurent() -> impl Strategy<Value = LaurentInt> {
        prop::collection::vec((-30i64..30, -20i64..20), 0..8).prop_map(LaurentInt::from_terms)
    }

    fn arb_cyclo(m: usize) -> impl Strategy<Value = CycloInt> {
        prop::collection::vec(-9i64..=9, 0..(2 * m))
            .prop_map(move |v| cyclo_reduce(&IntPoly::from_i64(&v), m).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn eval_is_a_homomorphism(f in arb_laurent(), g in arb_laurent(), idx in 0usize..5) {
            let m = [20usize, 28, 32, 36, 40][idx];
            let lhs = eval_at_root(&(&f * &g), m, -1).unwrap();
            let rhs = &eval_at_root(&f, m, -1).unwrap() * &eval_at_root(&g, m, -1).unwrap();
            prop_assert_eq!(lhs, rhs);
            let sum = eval_at_root(&(&f + &g), m, -1).unwrap();
            prop_assert_eq!(sum, &eval_at_root(&f, m, -1).unwrap() + &eval_at_root(&g, m, -1).unwrap());
        }

        #[test]
        fn cyclo_ring_axioms(a in arb_cyclo(20), b in arb_cyclo(20), c in arb_cyclo(20)) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(a.rep().len(), 8);
            let prod = (&a * &b).complex_approx();
            let (x, y) = (a.complex_approx(), b.complex_approx());
            let expect = (x.0 * y.0 - x.1 * y.1, x.0 * y.1 + x.1 * y.0);
            prop_assert!(close(prod, expect, 1e-9));
        }
    }
}
