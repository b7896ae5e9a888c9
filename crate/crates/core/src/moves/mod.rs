//! Weighted rewrite moves on Morse diagrams.
//!
//! Every move is addressed by an event index `k` (equivalently the gap
//! below event `k`) and a strand index `i`. Local patterns, with `X_a` a
//! crossing of sign `a`:
//!
//! | kind    | forward (lhs → rhs)                                 |
//! |---------|-----------------------------------------------------|
//! | `r1`    | gap `k`, strand `i` → `Cup i+1, X_a i, Cap i+1`       |
//! | `r2`    | gap `k`, strands `i, i+1` → `X_a i, X_-a i`           |
//! | `r3`    | `X_a i, X_b i+1, X_c i` → `X_c i+1, X_b i, X_a i+1`   |
//! | `zigzag`| gap `k`, strand `i` → `Cup i+1, Cap i` (`+`) or `Cup i, Cap i+1` (`-`) |
//! | `slide` | `Cup i, X_a i+1` → `Cup i+1, X_-a i`; `X_a i, Cap i+1` → `X_-a i+1, Cap i` |
//! | `level` | swap events `k, k+1` acting on disjoint strands     |
//! | `twist` | gap `k`, strands `i..i+n` → `4r` full twists         |
//!
//! Reverse moves undo forward moves at the same locus. A `sign` defaults
//! to `+` when inserting and matches either sign when removing. For `r3`,
//! `a = c ≠ b` is not a braid relation and is rejected.
//!
//! For `level`, the strand index is the position of the right-hand event
//! of the pair, read where that event is the upper one. It separates the
//! two ways of exchanging a cap with a cup born where the cap was, and is
//! the same from both sides, so `fwd` and `rev` act alike.

mod certificate;

pub use certificate::{c_growth_check, verify_certificate, CertError, Certificate};

use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;
use thiserror::Error;

use crate::diagram::{trace_components, Event, EventKind, MorseDiagram, Orientation};
use crate::exactnum::HalfInt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MoveKind {
    R1,
    R2,
    R3,
    Zigzag,
    LevelExchange,
    Slide,
    Twist,
}

impl MoveKind {
    pub const ALL: [MoveKind; 7] = [
        MoveKind::R1,
        MoveKind::R2,
        MoveKind::R3,
        MoveKind::Zigzag,
        MoveKind::LevelExchange,
        MoveKind::Slide,
        MoveKind::Twist,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            MoveKind::R1 => "r1",
            MoveKind::R2 => "r2",
            MoveKind::R3 => "r3",
            MoveKind::Zigzag => "zigzag",
            MoveKind::LevelExchange => "level",
            MoveKind::Slide => "slide",
            MoveKind::Twist => "twist",
        }
    }

    pub fn from_tag(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.tag() == s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Forward,
    Reverse,
}

impl Direction {
    pub fn tag(self) -> &'static str {
        match self {
            Direction::Forward => "fwd",
            Direction::Reverse => "rev",
        }
    }

    pub fn inverse(self) -> Self {
        match self {
            Direction::Forward => Direction::Reverse,
            Direction::Reverse => Direction::Forward,
        }
    }
}

/// One rewrite step. `n` is only meaningful for twists; the level `r` of a
/// twist comes from the surrounding certificate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Move {
    pub kind: MoveKind,
    pub dir: Direction,
    pub event: usize,
    pub strand: usize,
    pub sign: Option<i8>,
    pub n: usize,
}

impl Move {
    pub fn new(kind: MoveKind, dir: Direction, event: usize, strand: usize) -> Self {
        Move {
            kind,
            dir,
            event,
            strand,
            sign: None,
            n: 1,
        }
    }

    pub fn with_sign(mut self, sign: i8) -> Self {
        self.sign = Some(if sign >= 0 { 1 } else { -1 });
        self
    }

    pub fn twist(dir: Direction, gap: usize, start: usize, n: usize, sign: i8) -> Self {
        Move {
            n,
            ..Move::new(MoveKind::Twist, dir, gap, start).with_sign(sign)
        }
    }

    /// The same locus, opposite direction.
    pub fn inverse(&self) -> Self {
        Move {
            dir: self.dir.inverse(),
            ..*self
        }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} at {} strand {}",
            self.kind.tag(),
            self.dir.tag(),
            self.event,
            self.strand
        )?;
        if self.kind == MoveKind::Twist {
            write!(f, " n={}", self.n)?;
        }
        match self.sign {
            Some(s) => write!(f, " sign={}", if s > 0 { '+' } else { '-' }),
            None => Ok(()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MoveError {
    #[error("pattern mismatch at event {event}: {reason}")]
    PatternMismatch { event: usize, reason: String },
    #[error("gap {gap} out of range for a diagram with {len} events")]
    BadGap { gap: usize, len: usize },
    #[error("strands {start}..{end} not present at a gap with {strands} strands")]
    BadStrandRange {
        start: usize,
        end: usize,
        strands: usize,
    },
    #[error("twist needs r >= 3, got {0}")]
    BadLevel(usize),
    #[error("twist is missing its sign")]
    MissingSign,
    #[error("orientation cannot be carried across the rewrite")]
    OrientationLost,
}

/// Weight of a move: 3/2 for R1, `2rn(n-1)` for a twist, 1 otherwise.
pub fn move_weight(m: &Move, r: usize) -> HalfInt {
    match m.kind {
        MoveKind::R1 => HalfInt::from_doubled(3),
        MoveKind::Twist => {
            let n = m.n as i64;
            HalfInt::from_int(2 * r as i64 * n * (n - 1))
        }
        _ => HalfInt::from_int(1),
    }
}

fn mismatch(event: usize, reason: impl Into<String>) -> MoveError {
    MoveError::PatternMismatch {
        event,
        reason: reason.into(),
    }
}

fn sign_of(kind: EventKind) -> i8 {
    kind.crossing_sign() as i8
}

fn sign_ok(wanted: Option<i8>, got: i8) -> bool {
    wanted.is_none_or(|s| s == got)
}

/// Applies `m` to `d`; `r` is the twist level.
pub fn apply_move(d: &MorseDiagram, m: &Move, r: usize) -> Result<MorseDiagram, MoveError> {
    let events = d.events();
    let k = m.event;
    let i = m.strand;
    let counts = d.strand_counts();
    let gap_strands = |need: usize| -> Result<usize, MoveError> {
        let s = *counts.get(k).ok_or(MoveError::BadGap {
            gap: k,
            len: d.len(),
        })?;
        if i + need > s {
            return Err(MoveError::BadStrandRange {
                start: i,
                end: i + need,
                strands: s,
            });
        }
        Ok(s)
    };
    let window = |len: usize| -> Result<&[Event], MoveError> {
        events.get(k..k + len).ok_or_else(|| {
            mismatch(
                k,
                format!("needs {len} events, diagram has {}", events.len()),
            )
        })
    };
    let ins = m.sign.unwrap_or(1);

    let (old_len, new): (usize, Vec<Event>) = match (m.kind, m.dir) {
        (MoveKind::R1, Direction::Forward) => {
            gap_strands(1)?;
            (0, r1_pattern(ins, i).to_vec())
        }
        (MoveKind::R1, Direction::Reverse) => {
            let w = window(3)?;
            let ok = [1, -1]
                .into_iter()
                .any(|s| sign_ok(m.sign, s) && w == r1_pattern(s, i));
            if !ok {
                return Err(mismatch(
                    k,
                    format!("expected a kink `cup {}, x {i}, cap {}`", i + 1, i + 1),
                ));
            }
            (3, vec![])
        }
        (MoveKind::R2, Direction::Forward) => {
            gap_strands(2)?;
            (0, vec![Event::crossing(ins, i), Event::crossing(-ins, i)])
        }
        (MoveKind::R2, Direction::Reverse) => {
            let w = window(2)?;
            let ok = w[0].kind.is_crossing()
                && w[0].pos == i
                && w[1] == Event::new(w[0].kind.mirrored(), i)
                && sign_ok(m.sign, sign_of(w[0].kind));
            if !ok {
                return Err(mismatch(
                    k,
                    format!("expected a cancelling crossing pair at strand {i}"),
                ));
            }
            (2, vec![])
        }
        (MoveKind::R3, dir) => {
            let w = window(3)?;
            let (lo, hi) = match dir {
                Direction::Forward => (i, i + 1),
                Direction::Reverse => (i + 1, i),
            };
            let crossings = w.iter().all(|e| e.kind.is_crossing());
            if !crossings || w[0].pos != lo || w[1].pos != hi || w[2].pos != lo {
                return Err(mismatch(
                    k,
                    format!("expected three crossings at strands {lo}, {hi}, {lo}"),
                ));
            }
            let (a, b, c) = (w[0].kind, w[1].kind, w[2].kind);
            if a == c && a != b {
                return Err(mismatch(
                    k,
                    "outer crossings agree but differ from the middle one",
                ));
            }
            (
                3,
                vec![Event::new(c, hi), Event::new(b, lo), Event::new(a, hi)],
            )
        }
        (MoveKind::Zigzag, Direction::Forward) => {
            gap_strands(1)?;
            (0, zigzag_pattern(ins, i).to_vec())
        }
        (MoveKind::Zigzag, Direction::Reverse) => {
            let w = window(2)?;
            let ok = [1, -1]
                .into_iter()
                .any(|s| sign_ok(m.sign, s) && w == zigzag_pattern(s, i));
            if !ok {
                return Err(mismatch(
                    k,
                    format!("expected a cancelling cup/cap pair on strand {i}"),
                ));
            }
            (2, vec![])
        }
        (MoveKind::Slide, dir) => {
            let w = window(2)?;
            let (near, far) = match dir {
                Direction::Forward => (i, i + 1),
                Direction::Reverse => (i + 1, i),
            };
            let new = if w[0] == Event::cup(near) && w[1].kind.is_crossing() && w[1].pos == far {
                vec![Event::cup(far), Event::new(w[1].kind.mirrored(), near)]
            } else if w[0].kind.is_crossing() && w[0].pos == near && w[1] == Event::cap(far) {
                vec![Event::new(w[0].kind.mirrored(), far), Event::cap(near)]
            } else {
                return Err(mismatch(
                    k,
                    format!("expected `cup {near}, x {far}` or `x {near}, cap {far}`"),
                ));
            };
            if !sign_ok(m.sign, sign_of(w[0].kind) + sign_of(w[1].kind)) {
                return Err(mismatch(k, "crossing sign differs from the declared one"));
            }
            (2, new)
        }
        (MoveKind::LevelExchange, _) => {
            let w = window(2)?;
            let swapped = exchange_candidates(w[0], w[1])
                .into_iter()
                .find(|&(_, _, key)| key == i)
                .ok_or_else(|| mismatch(k, format!("events do not exchange with strand {i}")))?;
            (2, vec![swapped.0, swapped.1])
        }
        (MoveKind::Twist, dir) => {
            let sign = m.sign.ok_or(MoveError::MissingSign)?;
            if r < 3 {
                return Err(MoveError::BadLevel(r));
            }
            if m.n == 0 {
                return Err(MoveError::BadStrandRange {
                    start: i,
                    end: i,
                    strands: counts.get(k).copied().unwrap_or(0),
                });
            }
            let block = twist_block(i, m.n, sign, r);
            match dir {
                Direction::Forward => {
                    gap_strands(m.n)?;
                    (0, block)
                }
                Direction::Reverse => {
                    gap_strands(m.n)?;
                    if window(block.len())? != block.as_slice() {
                        return Err(mismatch(
                            k,
                            format!("expected {} full twists on strands {i}..{}", 4 * r, i + m.n),
                        ));
                    }
                    (block.len(), vec![])
                }
            }
        }
    };

    if k > events.len() {
        return Err(MoveError::BadGap {
            gap: k,
            len: events.len(),
        });
    }
    let mut out = Vec::with_capacity(events.len() - old_len + new.len());
    out.extend_from_slice(&events[..k]);
    out.extend(new);
    out.extend_from_slice(&events[k + old_len..]);
    MorseDiagram::validate(out).map_err(|e| mismatch(k, e.to_string()))
}

fn r1_pattern(sign: i8, i: usize) -> [Event; 3] {
    [
        Event::cup(i + 1),
        Event::crossing(sign, i),
        Event::cap(i + 1),
    ]
}

fn zigzag_pattern(sign: i8, i: usize) -> [Event; 2] {
    if sign > 0 {
        [Event::cup(i + 1), Event::cap(i)]
    } else {
        [Event::cup(i), Event::cap(i + 1)]
    }
}

// (start, width) of the strands an event consumes below and produces above.
fn bottom_range(e: Event) -> (usize, usize) {
    (e.pos, if e.kind == EventKind::Cup { 0 } else { 2 })
}

fn top_range(e: Event) -> (usize, usize) {
    (e.pos, if e.kind == EventKind::Cap { 0 } else { 2 })
}

/// Ways to exchange `lower` and `upper` (adjacent, `lower` first), as the
/// new `(lower, upper)` pair plus the strand key naming the exchange: the
/// position of the right-hand event in whichever configuration has it on
/// top. The key is the same read from either side, so an exchange is its
/// own inverse.
fn exchange_candidates(lower: Event, upper: Event) -> Vec<(Event, Event, usize)> {
    let (t1, w1) = top_range(lower);
    let (b2, w2) = bottom_range(upper);
    let d1 = lower.kind.strand_delta();
    let d2 = upper.kind.strand_delta();
    let mut out = Vec::with_capacity(2);
    if b2 + w2 <= t1 {
        // `upper` is on the left; `lower` ends up on top.
        let pos = (lower.pos as isize + d2) as usize;
        out.push((upper, Event::new(lower.kind, pos), pos));
    }
    if b2 >= t1 + w1 {
        let pos = (upper.pos as isize - d1) as usize;
        out.push((Event::new(upper.kind, pos), lower, upper.pos));
    }
    out
}

/// `4r` full twists on strands `start..start+n`: the braid word
/// `((σ_start … σ_{start+n-2})^n)^{4r}`, all crossings of one sign.
pub fn twist_block(start: usize, n: usize, sign: i8, r: usize) -> Vec<Event> {
    let mut out = Vec::with_capacity(4 * r * n * n.saturating_sub(1));
    for _ in 0..4 * r * n {
        out.extend((start..start + n.saturating_sub(1)).map(|p| Event::crossing(sign, p)));
    }
    out
}

/// Inserts `4r` full twists on `n` adjacent strands at a gap.
pub fn insert_full_twists(
    d: &MorseDiagram,
    gap: usize,
    start: usize,
    n: usize,
    sign: i8,
    r: usize,
) -> Result<MorseDiagram, MoveError> {
    apply_move(d, &Move::twist(Direction::Forward, gap, start, n, sign), r)
}

/// Orientation of `after` that agrees with `o` on `before` away from the
/// rewritten window (the longest common prefix and suffix of events).
pub fn carry_orientation(
    before: &MorseDiagram,
    o: &Orientation,
    after: &MorseDiagram,
) -> Result<Orientation, MoveError> {
    let (a, b) = (before.events(), after.events());
    let max = a.len().min(b.len());
    let prefix = a.iter().zip(b).take_while(|(x, y)| x == y).count().min(max);
    let suffix = a
        .iter()
        .rev()
        .zip(b.iter().rev())
        .take(max - prefix)
        .take_while(|(x, y)| x == y)
        .count();
    let dirs_before = o
        .strand_directions(before)
        .map_err(|_| MoveError::OrientationLost)?;
    let comps = trace_components(after);
    let dirs_after = Orientation::default_for(after)
        .strand_directions(after)
        .map_err(|_| MoveError::OrientationLost)?;
    let shift = a.len() as isize - b.len() as isize;
    let mut flips: Vec<Option<bool>> = vec![None; comps.count];
    let gaps = (0..=prefix).chain(b.len() - suffix..=b.len());
    for g in gaps {
        let g_before = if g <= prefix {
            g
        } else {
            (g as isize + shift) as usize
        };
        for (p, &c) in comps.labels[g].iter().enumerate() {
            if flips[c].is_none() {
                flips[c] = Some(dirs_after[g][p] != dirs_before[g_before][p]);
            }
        }
    }
    flips
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .map(Orientation::with_flips)
        .ok_or(MoveError::OrientationLost)
}

fn sign_choices(kind: MoveKind) -> &'static [Option<i8>] {
    match kind {
        MoveKind::R1 | MoveKind::R2 | MoveKind::Zigzag | MoveKind::Twist => &[Some(1), Some(-1)],
        _ => &[None],
    }
}

/// Every move of the given kind and direction that applies to `d`. Twists
/// are tried with `n ∈ {1, 2, 3}`.
pub fn applicable_moves(d: &MorseDiagram, kind: MoveKind, dir: Direction, r: usize) -> Vec<Move> {
    let counts = d.strand_counts();
    let width = d.girth() + 2;
    let ns: &[usize] = if kind == MoveKind::Twist {
        &[1, 2, 3]
    } else {
        &[1]
    };
    let mut out = Vec::new();
    for k in 0..counts.len() {
        for i in 0..width {
            for &sign in sign_choices(kind) {
                for &n in ns {
                    let m = Move {
                        sign,
                        n,
                        ..Move::new(kind, dir, k, i)
                    };
                    if apply_move(d, &m, r).is_ok() {
                        out.push(m);
                    }
                }
            }
        }
    }
    out
}

/// A uniformly chosen applicable move, if any.
pub fn random_move<R: Rng + ?Sized>(
    rng: &mut R,
    d: &MorseDiagram,
    kind: MoveKind,
    dir: Direction,
    r: usize,
) -> Option<Move> {
    applicable_moves(d, kind, dir, r).choose(rng).copied()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{random_diagram, trefoil_plat, unlink, writhe};
    use crate::evaluator::{bracket_sweep, jones_symbolic};

    fn fwd(kind: MoveKind, k: usize, i: usize) -> Move {
        Move::new(kind, Direction::Forward, k, i)
    }

    #[test]
    fn weights() {
        assert_eq!(
            move_weight(&fwd(MoveKind::R2, 0, 0), 5),
            HalfInt::from_int(1)
        );
        assert_eq!(
            move_weight(&fwd(MoveKind::R1, 0, 0), 5),
            HalfInt::from_doubled(3)
        );
        let t = Move::twist(Direction::Forward, 0, 0, 3, 1);
        assert_eq!(move_weight(&t, 5), HalfInt::from_int(60));
        let t1 = Move::twist(Direction::Forward, 0, 0, 1, 1);
        assert_eq!(move_weight(&t1, 5), HalfInt::ZERO);
    }

    #[test]
    fn r1_on_unknot() {
        let u = unlink(1);
        for sign in [1, -1] {
            let m = fwd(MoveKind::R1, 1, 0).with_sign(sign);
            let d = apply_move(&u, &m, 5).unwrap();
            assert_eq!(d.len(), 5);
            assert_eq!(d.crossing_count(), 1);
            let o = Orientation::default_for(&d);
            assert_eq!(writhe(&d, &o).unwrap().abs(), 1);
            assert_eq!(
                jones_symbolic(&d, &o).unwrap(),
                jones_symbolic(&u, &Orientation::default_for(&u)).unwrap()
            );
            assert_eq!(apply_move(&d, &m.inverse(), 5).unwrap(), u);
        }
    }

    #[test]
    fn r2_round_trip_and_rejection() {
        let t = trefoil_plat();
        let m = fwd(MoveKind::R2, 2, 2).with_sign(-1);
        let d = apply_move(&t, &m, 5).unwrap();
        assert_eq!(d.crossing_count(), 5);
        assert_eq!(apply_move(&d, &m.inverse(), 5).unwrap(), t);
        // The trefoil's own crossings are not a cancelling pair.
        assert!(matches!(
            apply_move(&t, &Move::new(MoveKind::R2, Direction::Reverse, 2, 1), 5),
            Err(MoveError::PatternMismatch { event: 2, .. })
        ));
        assert!(matches!(
            apply_move(&t, &fwd(MoveKind::R2, 2, 3), 5),
            Err(MoveError::BadStrandRange {
                start: 3,
                end: 5,
                strands: 4
            })
        ));
        assert!(matches!(
            apply_move(&t, &fwd(MoveKind::R2, 9, 0), 5),
            Err(MoveError::BadGap { gap: 9, len: 7 })
        ));
    }

    #[test]
    fn r3_braid_relation() {
        // Three strands from two nested cups, braided then closed.
        let base = vec![
            Event::cup(0),
            Event::cup(2),
            Event::cross_pos(1),
            Event::cross_pos(2),
            Event::cross_pos(1),
            Event::cap(2),
            Event::cap(0),
        ];
        let d = MorseDiagram::validate(base).unwrap();
        let m = fwd(MoveKind::R3, 2, 1);
        let e = apply_move(&d, &m, 5).unwrap();
        assert_eq!(
            &e.events()[2..5],
            &[
                Event::cross_pos(2),
                Event::cross_pos(1),
                Event::cross_pos(2)
            ]
        );
        assert_eq!(bracket_sweep(&e), bracket_sweep(&d));
        assert_eq!(apply_move(&e, &m.inverse(), 5).unwrap(), d);

        let bad = MorseDiagram::validate(vec![
            Event::cup(0),
            Event::cup(2),
            Event::cross_pos(1),
            Event::cross_neg(2),
            Event::cross_pos(1),
            Event::cap(2),
            Event::cap(0),
        ])
        .unwrap();
        assert!(apply_move(&bad, &m, 5).is_err());
    }

    #[test]
    fn zigzag_both_sides() {
        let u = unlink(1);
        for sign in [1, -1] {
            let m = fwd(MoveKind::Zigzag, 1, 1).with_sign(sign);
            let d = apply_move(&u, &m, 5).unwrap();
            assert_eq!(d.len(), 4);
            assert_eq!(bracket_sweep(&d), bracket_sweep(&u));
            assert_eq!(apply_move(&d, &m.inverse(), 5).unwrap(), u);
            assert_eq!(
                apply_move(
                    &d,
                    &Move::new(MoveKind::Zigzag, Direction::Reverse, 1, 1),
                    5
                )
                .unwrap(),
                u
            );
        }
    }

    #[test]
    fn slide_cup_and_cap_forms() {
        // cup 0 | cup 0 x+ 1 ... : a crossing just above a cup.
        let d = MorseDiagram::validate(vec![
            Event::cup(0),
            Event::cup(0),
            Event::cross_pos(1),
            Event::cap(0),
            Event::cap(0),
        ])
        .unwrap();
        let m = fwd(MoveKind::Slide, 1, 0);
        let e = apply_move(&d, &m, 5).unwrap();
        assert_eq!(&e.events()[1..3], &[Event::cup(1), Event::cross_neg(0)]);
        assert_eq!(bracket_sweep(&e), bracket_sweep(&d));
        assert_eq!(apply_move(&e, &m.inverse(), 5).unwrap(), d);

        let c = MorseDiagram::validate(vec![
            Event::cup(0),
            Event::cup(0),
            Event::cross_neg(0),
            Event::cap(1),
            Event::cap(0),
        ])
        .unwrap();
        let m = fwd(MoveKind::Slide, 2, 0);
        let e = apply_move(&c, &m, 5).unwrap();
        assert_eq!(&e.events()[2..4], &[Event::cross_pos(1), Event::cap(0)]);
        assert_eq!(bracket_sweep(&e), bracket_sweep(&c));
        assert_eq!(apply_move(&e, &m.inverse(), 5).unwrap(), c);
    }

    #[test]
    fn level_exchange_of_separate_cups() {
        let d = MorseDiagram::validate(vec![
            Event::cup(0),
            Event::cup(2),
            Event::cross_pos(1),
            Event::cap(2),
            Event::cap(0),
        ])
        .unwrap();
        // The second cup lies right of the first one's legs, so it can be
        // born first, at 0; the first cup is then born left of it, also at 0.
        let m = fwd(MoveKind::LevelExchange, 0, 2);
        let e = apply_move(&d, &m, 5).unwrap();
        assert_eq!(&e.events()[..2], &[Event::cup(0), Event::cup(0)]);
        assert_eq!(bracket_sweep(&e), bracket_sweep(&d));
        assert_eq!(apply_move(&e, &m.inverse(), 5).unwrap(), d);
    }

    #[test]
    fn level_exchange_cap_then_cup_is_disambiguated() {
        // A cap joining the middle strands, then a cup born in the same spot.
        let d = MorseDiagram::validate(vec![
            Event::cup(0),
            Event::cup(0),
            Event::cap(1),
            Event::cup(1),
            Event::cap(1),
            Event::cap(0),
        ])
        .unwrap();
        let left = apply_move(&d, &fwd(MoveKind::LevelExchange, 2, 3), 5).unwrap();
        let right = apply_move(&d, &fwd(MoveKind::LevelExchange, 2, 1), 5).unwrap();
        assert_ne!(left, right);
        assert_eq!(&left.events()[2..4], &[Event::cup(1), Event::cap(3)]);
        assert_eq!(&right.events()[2..4], &[Event::cup(3), Event::cap(1)]);
        for (e, s) in [(left, 3), (right, 1)] {
            assert_eq!(bracket_sweep(&e), bracket_sweep(&d));
            let back = Move::new(MoveKind::LevelExchange, Direction::Reverse, 2, s);
            assert_eq!(apply_move(&e, &back, 5).unwrap(), d);
        }
        assert!(apply_move(&d, &fwd(MoveKind::LevelExchange, 2, 2), 5).is_err());
    }

    #[test]
    fn level_exchange_rejects_overlap() {
        let t = trefoil_plat();
        assert!(apply_move(&t, &fwd(MoveKind::LevelExchange, 2, 1), 5).is_err());
    }

    #[test]
    fn twist_counts() {
        let u = unlink(1);
        let d = insert_full_twists(&u, 1, 0, 1, 1, 5).unwrap();
        assert_eq!(d, u);
        let d = insert_full_twists(&u, 1, 0, 2, 1, 5).unwrap();
        assert_eq!(d.crossing_count(), 40);
        assert_eq!(d.girth(), u.girth());
        assert!(d.events()[1..41].iter().all(|e| *e == Event::cross_pos(0)));
        let back = Move::twist(Direction::Reverse, 1, 0, 2, 1);
        assert_eq!(apply_move(&d, &back, 5).unwrap(), u);
        assert!(apply_move(&d, &Move::twist(Direction::Reverse, 1, 0, 2, -1), 5).is_err());
        assert!(matches!(
            insert_full_twists(&u, 3, 0, 2, 1, 5),
            Err(MoveError::BadGap { gap: 3, len: 2 })
        ));
        assert!(matches!(
            insert_full_twists(&u, 1, 1, 2, 1, 5),
            Err(MoveError::BadStrandRange { .. })
        ));
        let t = trefoil_plat();
        let d = insert_full_twists(&t, 3, 0, 3, -1, 7).unwrap();
        assert_eq!(d.crossing_count(), 3 + 4 * 7 * 6);
    }

    #[test]
    fn twist_preserves_girth() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for seed in 0..100 {
            let d = random_diagram(seed, 8, 16);
            let m = random_move(&mut rng, &d, MoveKind::Twist, Direction::Forward, 3).unwrap();
            let e = apply_move(&d, &m, 3).unwrap();
            assert_eq!(e.girth(), d.girth());
            assert_eq!(
                e.crossing_count() - d.crossing_count(),
                12 * m.n * (m.n - 1)
            );
        }
    }

    #[test]
    fn forward_reverse_is_identity() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        for seed in 0..40 {
            let d = random_diagram(seed, 6, 14);
            for kind in MoveKind::ALL {
                for m in applicable_moves(&d, kind, Direction::Forward, 3) {
                    let e = apply_move(&d, &m, 3).unwrap();
                    assert_eq!(apply_move(&e, &m.inverse(), 3).unwrap(), d, "{m}");
                }
                if let Some(m) = random_move(&mut rng, &d, kind, Direction::Reverse, 3) {
                    let e = apply_move(&d, &m, 3).unwrap();
                    assert_eq!(apply_move(&e, &m.inverse(), 3).unwrap(), d, "{m}");
                }
            }
        }
    }

    #[test]
    fn orientation_follows_linked_components() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let hopf = crate::diagram::torus_closure(2, 2);
        let o = Orientation::with_flips(vec![false, true]);
        let j = jones_symbolic(&hopf, &o).unwrap();
        for kind in [
            MoveKind::R1,
            MoveKind::R2,
            MoveKind::Zigzag,
            MoveKind::LevelExchange,
            MoveKind::Slide,
        ] {
            for _ in 0..10 {
                let Some(m) = random_move(&mut rng, &hopf, kind, Direction::Forward, 5) else {
                    continue;
                };
                let e = apply_move(&hopf, &m, 5).unwrap();
                let o2 = carry_orientation(&hopf, &o, &e).unwrap();
                assert_eq!(jones_symbolic(&e, &o2).unwrap(), j, "{m}");
            }
        }
    }

    #[test]
    fn twists_fix_the_root_value() {
        use crate::evaluator::jones_at_root;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for r in [5, 7] {
            for seed in 0..8 {
                let d = random_diagram(seed, 6, 12);
                let o = Orientation::default_for(&d);
                let before = jones_at_root(&d, &o, r).unwrap().value;
                let m = random_move(&mut rng, &d, MoveKind::Twist, Direction::Forward, r).unwrap();
                let e = apply_move(&d, &m, r).unwrap();
                let o2 = carry_orientation(&d, &o, &e).unwrap();
                assert_eq!(
                    jones_at_root(&e, &o2, r).unwrap().value,
                    before,
                    "r={r} {m}"
                );
            }
        }
    }

    #[test]
    fn display_lines() {
        assert_eq!(fwd(MoveKind::R2, 3, 1).to_string(), "r2 fwd at 3 strand 1");
        assert_eq!(
            Move::twist(Direction::Reverse, 1, 0, 2, -1).to_string(),
            "twist rev at 1 strand 0 n=2 sign=-"
        );
        assert_eq!(
            fwd(MoveKind::Zigzag, 0, 0).with_sign(1).to_string(),
            "zigzag fwd at 0 strand 0 sign=+"
        );
    }
}
