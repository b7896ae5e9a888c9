//! Exact Kauffman bracket and Jones polynomial evaluation.
//!
//! The main path sweeps the diagram bottom to top through the
//! Temperley-Lieb basis of planar matchings; at a level crossed by `k`
//! strands at most `Catalan(k/2)` basis states are alive, so the cost is
//! exponential only in the girth. A `2^c` state expansion is kept as an
//! independent oracle.
//!
//! Conventions: the empty diagram has bracket 1, a closed loop is
//! `δ = -A² - A⁻²`, and the Jones polynomial is
//! `J = (-A)^{-3w}·⟨D⟩/δ`, normalized so the unknot gives 1, with
//! `q = t = A⁴`; the right-handed trefoil is `-t⁻⁴ + t⁻³ + t⁻¹`.
//! Evaluation at `q = e^{2πi/r}` substitutes `A = ζ_{4r}`.

mod bruteforce;
mod matching;
mod sweep;

pub use bruteforce::{bracket_bruteforce, bracket_bruteforce_counted, MAX_BRUTE_FORCE_CROSSINGS};
pub use matching::{all_matchings, catalan, PlanarMatching};
pub use sweep::{sweep, AtRoot, PlanarState, SkeinRing, SweepStats, Sweeper, Symbolic};

use thiserror::Error;

use crate::diagram::{writhe, DiagramError, MorseDiagram, Orientation};
use crate::exactnum::{eval_at_root, CycloInt, CyclotomicRing, ExactError, LaurentInt};

/// Exponent `e` in `A = ζ_{4r}^e`, i.e. `A = q^{1/4}`.
pub const ROOT_EXPONENT: i64 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("{crossings} crossings exceed the brute-force limit of {limit}")]
    TooManyCrossings { crossings: usize, limit: usize },
    #[error("bracket is not divisible by the loop value")]
    NonDivisible,
    #[error("the Jones polynomial of the empty diagram is undefined")]
    EmptyDiagram,
    #[error("root order r must be at least 3, got {0}")]
    RootTooSmall(usize),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

pub fn bracket_sweep(d: &MorseDiagram) -> LaurentInt {
    sweep(&Symbolic, d, false).0
}

pub fn bracket_sweep_with_stats(d: &MorseDiagram) -> (LaurentInt, SweepStats) {
    sweep(&Symbolic, d, false)
}

/// `(-A)^{-3w}` as a sign and an exponent of `A`.
fn writhe_factor(w: i64) -> (i8, i64) {
    (if w.rem_euclid(2) == 0 { 1 } else { -1 }, -3 * w)
}

/// Jones polynomial as a Laurent polynomial in `A` (`t = A⁴`).
pub fn jones_symbolic(d: &MorseDiagram, o: &Orientation) -> Result<LaurentInt, EvalError> {
    if d.is_empty() {
        return Err(EvalError::EmptyDiagram);
    }
    let w = writhe(d, o)?;
    let bracket = bracket_sweep(d);
    let reduced = bracket
        .div_exact(&LaurentInt::delta())
        .map_err(|_| EvalError::NonDivisible)?;
    let (sign, k) = writhe_factor(w);
    let mut out = LaurentInt::zero();
    out.add_scaled_shifted(&reduced, sign, k);
    Ok(out)
}

/// An evaluation `J(e^{2πi/r})` in `Z[ζ_{4r}]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootEvaluation {
    pub r: usize,
    pub value: CycloInt,
    /// Set when `q⁴ = 1` or `q⁶ = 1`, i.e. `r < 5` or `r = 6`.
    pub exceptional: bool,
}

pub fn is_exceptional_root(r: usize) -> bool {
    r < 5 || r == 6
}

/// `J(e^{2πi/r})` by sweeping directly over the cyclotomic integers. The
/// final loop's `δ` is skipped rather than divided out, since `δ` need not
/// be a unit at the root.
pub fn jones_at_root(
    d: &MorseDiagram,
    o: &Orientation,
    r: usize,
) -> Result<RootEvaluation, EvalError> {
    if r < 3 {
        return Err(EvalError::RootTooSmall(r));
    }
    if d.is_empty() {
        return Err(EvalError::EmptyDiagram);
    }
    let w = writhe(d, o)?;
    let ring = CyclotomicRing::get(4 * r)?;
    let at_root = AtRoot::new(ring, ROOT_EXPONENT);
    let (reduced, _) = sweep(&at_root, d, true);
    let (sign, k) = writhe_factor(w);
    let mut acc = at_root.zero();
    at_root.add_monomial_multiple(&mut acc, &reduced, sign, k);
    Ok(RootEvaluation {
        r,
        value: at_root.finish(&acc),
        exceptional: is_exceptional_root(r),
    })
}

/// `J(e^{2πi/r})` by substituting into the symbolic Jones polynomial.
pub fn jones_at_root_via_symbolic(
    d: &MorseDiagram,
    o: &Orientation,
    r: usize,
) -> Result<CycloInt, EvalError> {
    if r < 3 {
        return Err(EvalError::RootTooSmall(r));
    }
    let j = jones_symbolic(d, o)?;
    Ok(eval_at_root(&j, 4 * r, ROOT_EXPONENT)?)
}

/// Predicted sweep size: the state-space bound `Catalan(g/2)` and the
/// number of events.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CostModel {
    pub state_bound: u64,
    pub events: usize,
}

pub fn sweep_cost_model(d: &MorseDiagram) -> CostModel {
    CostModel {
        state_bound: catalan(d.girth() / 2),
        events: d.len(),
    }
}
