use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use super::matching::PlanarMatching;
use crate::diagram::{Event, EventKind, MorseDiagram};
use crate::exactnum::{CycloInt, CyclotomicRing, LaurentInt};

/// Coefficient ring for the sweep. Only two operations are needed: zero
/// and `acc += ±A^k · x`.
pub trait SkeinRing {
    type Elem: Clone;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, x: &Self::Elem) -> bool;
    fn add_monomial_multiple(&self, acc: &mut Self::Elem, x: &Self::Elem, sign: i8, k: i64);
}

/// Integer Laurent polynomials in `A`.
#[derive(Debug, Clone, Copy, Default)]
pub struct Symbolic;

impl SkeinRing for Symbolic {
    type Elem = LaurentInt;
    fn zero(&self) -> LaurentInt {
        LaurentInt::zero()
    }
    fn one(&self) -> LaurentInt {
        LaurentInt::one()
    }
    fn is_zero(&self, x: &LaurentInt) -> bool {
        x.is_zero()
    }
    fn add_monomial_multiple(&self, acc: &mut LaurentInt, x: &LaurentInt, sign: i8, k: i64) {
        acc.add_scaled_shifted(x, sign, k);
    }
}

/// `A ↦ ζ_m^e`, accumulated in `Z[x]/(x^m - 1)` where multiplying by a
/// power of `A` is a rotation; [`AtRoot::finish`] reduces to the canonical
/// cyclotomic residue.
#[derive(Clone)]
pub struct AtRoot {
    ring: Arc<CyclotomicRing>,
    exponent: i64,
}

impl AtRoot {
    pub fn new(ring: Arc<CyclotomicRing>, exponent: i64) -> Self {
        AtRoot { ring, exponent }
    }

    pub fn finish(&self, x: &[BigInt]) -> CycloInt {
        CycloInt::from_rep(&self.ring, self.ring.reduce_group_ring(x))
    }
}

impl SkeinRing for AtRoot {
    type Elem = Vec<BigInt>;
    fn zero(&self) -> Vec<BigInt> {
        vec![BigInt::zero(); self.ring.order()]
    }
    fn one(&self) -> Vec<BigInt> {
        let mut v = self.zero();
        v[0] = BigInt::from(1);
        v
    }
    fn is_zero(&self, x: &Vec<BigInt>) -> bool {
        x.iter().all(Zero::is_zero)
    }
    fn add_monomial_multiple(&self, acc: &mut Vec<BigInt>, x: &Vec<BigInt>, sign: i8, k: i64) {
        let m = x.len() as i64;
        let rot = (self.exponent * k).rem_euclid(m) as usize;
        for (j, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let slot = &mut acc[(j + rot) % x.len()];
            if sign < 0 {
                *slot -= c;
            } else {
                *slot += c;
            }
        }
    }
}

/// Counters collected during a sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SweepStats {
    /// Sum over events of the number of basis states processed.
    pub steps: u64,
    /// Largest number of basis states alive at any level.
    pub peak_support: usize,
    /// Coefficient updates performed.
    pub ops: u64,
}

/// A level of the sweep: coefficients on planar matchings of the strands
/// crossing that level. Zero coefficients are never stored.
#[derive(Clone)]
pub struct PlanarState<E> {
    terms: BTreeMap<PlanarMatching, E>,
}

impl<E: Clone> PlanarState<E> {
    pub fn support(&self) -> usize {
        self.terms.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&PlanarMatching, &E)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &PlanarMatching) -> Option<&E> {
        self.terms.get(m)
    }
}

impl<E: fmt::Display> PlanarState<E> {
    /// Debug dump, one `matching : coefficient` line per basis state,
    /// sorted by the parenthesis string.
    pub fn dump(&self) -> String {
        let mut rows: Vec<(String, String)> = self
            .terms
            .iter()
            .map(|(m, c)| (m.to_string(), c.to_string()))
            .collect();
        rows.sort();
        let mut out = String::new();
        for (m, c) in rows {
            let label = if m.is_empty() { "-".to_string() } else { m };
            let _ = writeln!(out, "{label} : {c}");
        }
        out
    }
}

/// Level-by-level contraction of a Morse diagram in the Temperley-Lieb
/// basis. `CrossPos` resolves as `A·id + A⁻¹·e_i`, `CrossNeg` with `A` and
/// `A⁻¹` exchanged, and every closed loop contributes `δ = -A² - A⁻²`.
pub struct Sweeper<'r, R: SkeinRing> {
    ring: &'r R,
    state: PlanarState<R::Elem>,
    strands: usize,
    stats: SweepStats,
}

impl<'r, R: SkeinRing> Sweeper<'r, R> {
    pub fn new(ring: &'r R) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(PlanarMatching::empty(), ring.one());
        Sweeper {
            ring,
            state: PlanarState { terms },
            strands: 0,
            stats: SweepStats {
                peak_support: 1,
                ..SweepStats::default()
            },
        }
    }

    pub fn state(&self) -> &PlanarState<R::Elem> {
        &self.state
    }

    pub fn stats(&self) -> SweepStats {
        self.stats
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    /// Applies one event. With `skip_loop_factor`, a loop closed by this
    /// event does not pick up its factor of `δ`.
    pub fn apply(&mut self, ev: Event, skip_loop_factor: bool) {
        assert!(
            ev.fits(self.strands),
            "event {ev} does not fit {} strands",
            self.strands
        );
        let ring = self.ring;
        let old = std::mem::take(&mut self.state.terms);
        self.stats.steps += old.len() as u64;
        let mut next: BTreeMap<PlanarMatching, R::Elem> = BTreeMap::new();
        let mut ops = 0u64;
        let mut add = |next: &mut BTreeMap<PlanarMatching, R::Elem>,
                       m: PlanarMatching,
                       c: &R::Elem,
                       sign: i8,
                       k: i64| {
            ops += 1;
            let slot = next.entry(m).or_insert_with(|| ring.zero());
            ring.add_monomial_multiple(slot, c, sign, k);
        };
        let i = ev.pos;
        match ev.kind {
            EventKind::Cup => {
                for (m, c) in old {
                    next.insert(m.cup(i), c);
                }
            }
            EventKind::Cap => {
                for (m, c) in &old {
                    let (joined, closes) = m.cap(i);
                    if closes && !skip_loop_factor {
                        add(&mut next, joined.clone(), c, -1, 2);
                        add(&mut next, joined, c, -1, -2);
                    } else {
                        add(&mut next, joined, c, 1, 0);
                    }
                }
            }
            EventKind::CrossPos | EventKind::CrossNeg => {
                let s = ev.kind.crossing_sign();
                for (m, c) in &old {
                    add(&mut next, m.clone(), c, 1, s);
                    let (hooked, closes) = m.hook(i);
                    if closes {
                        // δ·A^{-s} = -A^{2-s} - A^{-2-s}
                        add(&mut next, hooked.clone(), c, -1, 2 - s);
                        add(&mut next, hooked, c, -1, -2 - s);
                    } else {
                        add(&mut next, hooked, c, 1, -s);
                    }
                }
            }
        }
        next.retain(|_, c| !ring.is_zero(c));
        self.stats.ops += ops;
        self.strands = (self.strands as isize + ev.kind.strand_delta()) as usize;
        self.stats.peak_support = self.stats.peak_support.max(next.len());
        self.state.terms = next;
    }

    /// Coefficient of the empty matching once every strand is closed.
    pub fn finish(self) -> (R::Elem, SweepStats) {
        assert_eq!(self.strands, 0, "sweep finished with open strands");
        let value = self
            .state
            .terms
            .into_values()
            .next()
            .unwrap_or_else(|| self.ring.zero());
        (value, self.stats)
    }
}

/// Runs a full sweep. With `reduced`, the loop closed by the final event is
/// not counted, giving `⟨D⟩/δ` for nonempty `D`.
pub fn sweep<R: SkeinRing>(ring: &R, d: &MorseDiagram, reduced: bool) -> (R::Elem, SweepStats) {
    let mut sw = Sweeper::new(ring);
    let last = d.len().saturating_sub(1);
    for (idx, ev) in d.events().iter().enumerate() {
        sw.apply(*ev, reduced && idx == last);
    }
    sw.finish()
}
