//! Batch reports behind the `bench` and `lemma-report` commands.

use std::fmt::Write as _;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::diagram::{random_diagram, torus_closure, MorseDiagram, Orientation};
use crate::evaluator::{
    bracket_bruteforce_counted, bracket_sweep_with_stats, catalan, is_exceptional_root,
    jones_at_root, EvalError, MAX_BRUTE_FORCE_CROSSINGS,
};
use crate::exactnum::HalfInt;
use crate::moves::{
    apply_move, carry_orientation, verify_certificate, CertError, Certificate, Direction, Move,
    MoveError,
};
use crate::tqft::{s_row, TqftError};

pub fn exceptional_banner(r: usize) -> String {
    format!("WARNING: r={r} is an exceptional root (q^4 = 1 or q^6 = 1)")
}

pub const CSV_HEADER: &str = "id,girth,events,crossings,state_peak,steps,ms,bf_ok,bf_ms";

#[derive(Debug, Error)]
pub enum ReportError {
    #[error("sweep and brute force disagree on {0}")]
    OracleMismatch(String),
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error(transparent)]
    Move(#[from] MoveError),
    #[error(transparent)]
    Cert(#[from] CertError),
    #[error(transparent)]
    Tqft(#[from] TqftError),
}

/// One benchmarked diagram. Wall times are advisory; `sweep_ops` and
/// `bf_ops` are the deterministic cost measures.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchRecord {
    pub id: String,
    pub girth: usize,
    pub events: usize,
    pub crossings: usize,
    pub state_peak: usize,
    pub steps: u64,
    pub ms: f64,
    /// Brute force was feasible, ran, and agreed with the sweep.
    pub bf_ok: bool,
    pub bf_ms: Option<f64>,
    pub sweep_ops: u64,
    pub bf_ops: Option<u64>,
}

impl BenchRecord {
    fn fields(&self) -> [String; 9] {
        [
            self.id.clone(),
            self.girth.to_string(),
            self.events.to_string(),
            self.crossings.to_string(),
            self.state_peak.to_string(),
            self.steps.to_string(),
            format!("{:.3}", self.ms),
            self.bf_ok.to_string(),
            self.bf_ms.map(|t| format!("{t:.3}")).unwrap_or_default(),
        ]
    }
}

pub fn to_csv(records: &[BenchRecord]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER.split(','))
        .and_then(|_| records.iter().try_for_each(|r| w.write_record(r.fields())))
        .expect("writing to memory");
    String::from_utf8(w.into_inner().expect("writing to memory")).expect("ascii fields")
}

/// Sweeps `d`, and cross-checks with the state expansion when it has at
/// most `MAX_BRUTE_FORCE_CROSSINGS` crossings.
pub fn bench_diagram(id: impl Into<String>, d: &MorseDiagram) -> Result<BenchRecord, ReportError> {
    let id = id.into();
    let t0 = Instant::now();
    let (bracket, stats) = bracket_sweep_with_stats(d);
    let ms = t0.elapsed().as_secs_f64() * 1e3;
    let (mut bf_ok, mut bf_ms, mut bf_ops) = (false, None, None);
    if d.crossing_count() <= MAX_BRUTE_FORCE_CROSSINGS {
        let t1 = Instant::now();
        let (bf, ops) = bracket_bruteforce_counted(d)?;
        bf_ms = Some(t1.elapsed().as_secs_f64() * 1e3);
        if bf != bracket {
            return Err(ReportError::OracleMismatch(id));
        }
        bf_ok = true;
        bf_ops = Some(ops);
    }
    Ok(BenchRecord {
        id,
        girth: d.girth(),
        events: d.len(),
        crossings: d.crossing_count(),
        state_peak: stats.peak_support,
        steps: stats.steps,
        ms,
        bf_ok,
        bf_ms,
        sweep_ops: stats.ops,
        bf_ops,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    /// `torus_closure(p, q)` for each `q`.
    Torus { p: usize, qs: Vec<usize> },
    /// `random_diagram(seed + i, girth, length)` for `i < count`.
    Random {
        girth: usize,
        count: usize,
        length: usize,
        seed: u64,
    },
    /// Random girth-6 diagrams carrying one or two full-twist blocks.
    TwistEnriched { r: usize, count: usize, seed: u64 },
}

impl Family {
    /// The family's diagrams with their ids; ids sort in generation order.
    pub fn diagrams(&self) -> Result<Vec<(String, MorseDiagram)>, ReportError> {
        Ok(match self {
            Family::Torus { p, qs } => qs
                .iter()
                .map(|&q| (format!("torus-{p}-{q:06}"), torus_closure(*p, q)))
                .collect(),
            Family::Random {
                girth,
                count,
                length,
                seed,
            } => (0..*count)
                .map(|i| {
                    let d = random_diagram(seed.wrapping_add(i as u64), *girth, *length);
                    (format!("random-g{girth:02}-{i:05}"), d)
                })
                .collect(),
            Family::TwistEnriched { r, count, seed } => {
                let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                let mut out = Vec::with_capacity(*count);
                for i in 0..*count {
                    let mut d = random_diagram(rng.gen(), 6, 14);
                    let count = rng.gen_range(1..=2);
                    for m in random_twists(&mut rng, &d, *r, count) {
                        d = apply_move(&d, &m, *r)?;
                    }
                    out.push((format!("twist-r{r:02}-{i:05}"), d));
                }
                out
            }
        })
    }
}

/// Benchmarks a whole family; rows are sorted by id.
pub fn run_bench(family: &Family) -> Result<Vec<BenchRecord>, ReportError> {
    let mut rows = family
        .diagrams()?
        .into_iter()
        .map(|(id, d)| bench_diagram(id, &d))
        .collect::<Result<Vec<_>, _>>()?;
    rows.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(rows)
}

/// `count` twists applied one after another to `d`, each at a random gap on
/// `n ∈ {1, 2, 3}` adjacent strands with a random sign. With probability
/// 1/3 a twist reuses the previous locus, stacking directly on it. Returns
/// the moves in order.
pub fn random_twists<R: Rng + ?Sized>(
    rng: &mut R,
    d: &MorseDiagram,
    r: usize,
    count: usize,
) -> Vec<Move> {
    let mut cur = d.clone();
    let mut moves: Vec<Move> = Vec::with_capacity(count);
    while moves.len() < count {
        if let Some(&prev) = moves.last() {
            if rng.gen_ratio(1, 3) {
                let m = Move::twist(
                    Direction::Forward,
                    prev.event,
                    prev.strand,
                    prev.n,
                    if rng.gen_bool(0.5) { 1 } else { -1 },
                );
                cur = apply_move(&cur, &m, r).expect("previous locus is still valid");
                moves.push(m);
                continue;
            }
        }
        let counts = cur.strand_counts();
        let gap = rng.gen_range(0..counts.len());
        let strands = counts[gap];
        let n = rng.gen_range(1..=3usize);
        if strands < n {
            continue;
        }
        let start = rng.gen_range(0..=strands - n);
        let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
        let m = Move::twist(Direction::Forward, gap, start, n, sign);
        cur = apply_move(&cur, &m, r).expect("twist locus chosen in range");
        moves.push(m);
    }
    moves
}

/// Optional instantiation `b·ln c(D) + b'` of the exponent in the
/// dimension bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundConstants {
    pub b: f64,
    pub b_prime: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LemmaRow {
    pub r: usize,
    pub trials: usize,
    pub equal: usize,
    pub exceptional: bool,
    pub twists: usize,
    pub max_n: usize,
    pub signs_seen: (bool, bool),
    /// Trials where a twist sits directly on the previous one.
    pub stacked: usize,
    pub max_girth: usize,
    pub total_weight: HalfInt,
    /// `(exponent, Σ S_{0,i}^{-exponent})` at the largest `c(D')` seen.
    pub bound: Option<(f64, f64)>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LemmaReport {
    pub seed: u64,
    pub rows: Vec<LemmaRow>,
}

impl LemmaReport {
    pub fn all_equal(&self) -> bool {
        self.rows.iter().all(|r| r.equal == r.trials)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let trials = self.rows.first().map_or(0, |r| r.trials);
        let _ = writeln!(out, "lemma-report seed={} trials={trials}", self.seed);
        for row in &self.rows {
            if row.exceptional {
                let _ = writeln!(out, "{}", exceptional_banner(row.r));
            }
            let _ = write!(
                out,
                "r={} equal={}/{} twists={} max_n={} stacked={} max_girth={} weight={}",
                row.r,
                row.equal,
                row.trials,
                row.twists,
                row.max_n,
                row.stacked,
                row.max_girth,
                row.total_weight
            );
            if let Some((e, v)) = row.bound {
                let _ = write!(out, " bound_exponent={e:.4} bound={v:.6e}");
            }
            out.push('\n');
        }
        let verdict = if self.all_equal() { "PASS" } else { "FAIL" };
        let _ = writeln!(out, "{verdict}");
        out
    }
}

/// For each `r`, draws `trials` random diagrams, twists each by a random
/// certificate of one to three full-twist moves, verifies the certificate,
/// and compares `J(e^{2πi/r})` before and after exactly.
pub fn lemma_report(
    rs: &[usize],
    trials: usize,
    seed: u64,
    constants: Option<BoundConstants>,
) -> Result<LemmaReport, ReportError> {
    let mut rows = Vec::with_capacity(rs.len());
    for &r in rs {
        let mut rng =
            ChaCha8Rng::seed_from_u64(seed ^ (r as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
        let mut row = LemmaRow {
            r,
            trials,
            equal: 0,
            exceptional: is_exceptional_root(r),
            twists: 0,
            max_n: 0,
            signs_seen: (false, false),
            stacked: 0,
            max_girth: 0,
            total_weight: HalfInt::ZERO,
            bound: None,
        };
        let mut max_c = HalfInt::ZERO;
        for _ in 0..trials {
            let d = random_diagram(rng.gen(), 2 * rng.gen_range(1..=3), rng.gen_range(4..=14));
            let count = rng.gen_range(1..=3);
            let moves = random_twists(&mut rng, &d, r, count);
            let cert = Certificate::new(r, moves);
            let mut o = Orientation::default_for(&d);
            let mut cur = d.clone();
            for m in &cert.moves {
                let next = apply_move(&cur, m, r)?;
                o = carry_orientation(&cur, &o, &next)?;
                cur = next;
                row.max_n = row.max_n.max(m.n);
                match m.sign {
                    Some(1) => row.signs_seen.0 = true,
                    _ => row.signs_seen.1 = true,
                }
            }
            row.total_weight += verify_certificate(&d, &cur, &cert)?;
            row.twists += cert.moves.len();
            if cert
                .moves
                .windows(2)
                .any(|w| (w[0].event, w[0].strand, w[0].n) == (w[1].event, w[1].strand, w[1].n))
            {
                row.stacked += 1;
            }
            row.max_girth = row.max_girth.max(cur.girth());
            max_c = max_c.max(cur.complexity());
            let before = jones_at_root(&d, &Orientation::default_for(&d), r)?;
            let after = jones_at_root(&cur, &o, r)?;
            if before.value == after.value {
                row.equal += 1;
            }
        }
        if let Some(k) = constants {
            let e = k.b * max_c.to_f64().max(1.0).ln() + k.b_prime;
            let v = s_row(r)?.values.iter().map(|s| s.powf(-e)).sum();
            row.bound = Some((e, v));
        }
        rows.push(row);
    }
    Ok(LemmaReport { seed, rows })
}

/// Upper limit on the sweep's state count for a diagram of girth `g`.
pub fn state_bound(g: usize) -> u64 {
    catalan(g / 2)
}
