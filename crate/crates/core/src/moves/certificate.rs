use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use super::{apply_move, move_weight, Direction, Move, MoveError, MoveKind};
use crate::diagram::MorseDiagram;
use crate::exactnum::HalfInt;

pub const HEADER_PREFIX: &str = "cert v1 r=";

/// A move sequence with its level `r` and declared total weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub r: usize,
    pub moves: Vec<Move>,
    pub declared_weight: HalfInt,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("certificate level r={0} is below 3")]
    BadLevel(usize),
    /// `step` counts moves from 1.
    #[error("step {step}: {reason}")]
    MoveFailed { step: usize, reason: MoveError },
    #[error(
        "final diagram differs from the target (first difference at event {first_difference})"
    )]
    FinalMismatch { first_difference: usize },
    #[error("declared weight {declared} but the moves weigh {computed}")]
    WeightMismatch {
        declared: HalfInt,
        computed: HalfInt,
    },
    #[error("step {step}: complexity {complexity} exceeds the bound {bound}")]
    BoundViolated {
        step: usize,
        complexity: HalfInt,
        bound: HalfInt,
    },
}

impl Certificate {
    /// A certificate whose declared weight is the computed one.
    pub fn new(r: usize, moves: Vec<Move>) -> Self {
        let mut c = Certificate {
            r,
            moves,
            declared_weight: HalfInt::ZERO,
        };
        c.declared_weight = c.computed_weight();
        c
    }

    pub fn computed_weight(&self) -> HalfInt {
        self.moves.iter().map(|m| move_weight(m, self.r)).sum()
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }

    pub fn parse(text: &str) -> Result<Self, CertError> {
        let err = |line: usize, msg: String| CertError::Parse { line, msg };
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(n, l)| (n + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (n, head) = lines
            .next()
            .ok_or_else(|| err(1, "empty certificate".into()))?;
        let r = head
            .strip_prefix(HEADER_PREFIX)
            .and_then(|v| v.parse::<usize>().ok())
            .ok_or_else(|| err(n, format!("expected `{HEADER_PREFIX}<r>`, found `{head}`")))?;
        let mut moves = Vec::new();
        let mut declared = None;
        for (n, line) in lines {
            if declared.is_some() {
                return Err(err(n, "content after the weight line".into()));
            }
            if let Some(w) = line.strip_prefix("weight ") {
                let w = w
                    .trim()
                    .parse::<i64>()
                    .map_err(|_| err(n, format!("bad doubled weight `{w}`")))?;
                declared = Some(HalfInt::from_doubled(w));
            } else {
                moves.push(parse_move(line).map_err(|msg| err(n, msg))?);
            }
        }
        let declared_weight = declared
            .ok_or_else(|| err(text.lines().count().max(1), "missing weight line".into()))?;
        Ok(Certificate {
            r,
            moves,
            declared_weight,
        })
    }
}

fn parse_move(line: &str) -> Result<Move, String> {
    let tok: Vec<&str> = line.split_whitespace().collect();
    if tok.len() < 6 || tok[2] != "at" || tok[4] != "strand" {
        return Err(format!(
            "expected `<kind> <fwd|rev> at <k> strand <i>`, found `{line}`"
        ));
    }
    let kind =
        MoveKind::from_tag(tok[0]).ok_or_else(|| format!("unknown move kind `{}`", tok[0]))?;
    let dir = match tok[1] {
        "fwd" => Direction::Forward,
        "rev" => Direction::Reverse,
        other => return Err(format!("expected fwd or rev, found `{other}`")),
    };
    let index = |s: &str| s.parse::<usize>().map_err(|_| format!("bad index `{s}`"));
    let mut m = Move::new(kind, dir, index(tok[3])?, index(tok[5])?);
    let mut n = None;
    for opt in &tok[6..] {
        match opt.split_once('=') {
            Some(("n", v)) if kind == MoveKind::Twist && n.is_none() => n = Some(index(v)?),
            Some(("sign", "+")) if m.sign.is_none() => m.sign = Some(1),
            Some(("sign", "-")) if m.sign.is_none() => m.sign = Some(-1),
            _ => return Err(format!("unexpected option `{opt}`")),
        }
    }
    if kind == MoveKind::Twist {
        m.n = n.ok_or("twist needs n=<n>")?;
        if m.sign.is_none() {
            return Err("twist needs sign=<+|->".into());
        }
    }
    Ok(m)
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{HEADER_PREFIX}{}", self.r)?;
        for m in &self.moves {
            writeln!(f, "{m}")?;
        }
        writeln!(f, "weight {}", self.declared_weight.doubled())
    }
}

impl FromStr for Certificate {
    type Err = CertError;
    fn from_str(s: &str) -> Result<Self, CertError> {
        Certificate::parse(s)
    }
}

/// Runs the certificate from `d`, calling `visit(step, before, after, weight)`
/// after each move. Returns the final diagram and the total weight.
fn replay(
    d: &MorseDiagram,
    cert: &Certificate,
    mut visit: impl FnMut(usize, &MorseDiagram, &MorseDiagram, HalfInt) -> Result<(), CertError>,
) -> Result<(MorseDiagram, HalfInt), CertError> {
    if cert.r < 3 {
        return Err(CertError::BadLevel(cert.r));
    }
    let mut cur = d.clone();
    let mut total = HalfInt::ZERO;
    for (idx, m) in cert.moves.iter().enumerate() {
        let next = apply_move(&cur, m, cert.r).map_err(|reason| CertError::MoveFailed {
            step: idx + 1,
            reason,
        })?;
        let w = move_weight(m, cert.r);
        total += w;
        visit(idx + 1, &cur, &next, w)?;
        cur = next;
    }
    Ok((cur, total))
}

/// Checks that `cert` rewrites `d` into exactly `target` and that its
/// declared weight is right; returns the weight, an upper bound on the
/// distance between the two diagrams.
pub fn verify_certificate(
    d: &MorseDiagram,
    target: &MorseDiagram,
    cert: &Certificate,
) -> Result<HalfInt, CertError> {
    let (end, weight) = replay(d, cert, |_, _, _, _| Ok(()))?;
    if end != *target {
        let (a, b) = (end.events(), target.events());
        let first_difference = a
            .iter()
            .zip(b)
            .position(|(x, y)| x != y)
            .unwrap_or(a.len().min(b.len()));
        return Err(CertError::FinalMismatch { first_difference });
    }
    if weight != cert.declared_weight {
        return Err(CertError::WeightMismatch {
            declared: cert.declared_weight,
            computed: weight,
        });
    }
    Ok(weight)
}

/// Complexity bound `c(d) + 2·weight` for the end of the certificate,
/// checking along the way that no step adds more than two units of
/// complexity per unit of weight.
pub fn c_growth_check(d: &MorseDiagram, cert: &Certificate) -> Result<HalfInt, CertError> {
    let c0 = d.complexity();
    let mut spent = HalfInt::ZERO;
    let (_, weight) = replay(d, cert, |step, before, after, w| {
        spent += w;
        let grew = after.complexity() - before.complexity();
        let bound = c0 + spent * 2;
        if grew > w * 2 || after.complexity() > bound {
            return Err(CertError::BoundViolated {
                step,
                complexity: after.complexity(),
                bound,
            });
        }
        Ok(())
    })?;
    Ok(c0 + weight * 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{trefoil_plat, unlink};
    use crate::moves::insert_full_twists;

    fn twisted_unknot() -> MorseDiagram {
        insert_full_twists(&unlink(1), 1, 0, 2, 1, 5).unwrap()
    }

    #[test]
    fn empty_certificate() {
        let t = trefoil_plat();
        let c = Certificate::new(5, vec![]);
        assert_eq!(verify_certificate(&t, &t, &c), Ok(HalfInt::ZERO));
        assert_eq!(c_growth_check(&t, &c), Ok(t.complexity()));
    }

    #[test]
    fn single_twist_weighs_twenty() {
        let c = Certificate::new(5, vec![Move::twist(Direction::Forward, 1, 0, 2, 1)]);
        assert_eq!(c.declared_weight, HalfInt::from_int(20));
        let u = unlink(1);
        assert_eq!(
            verify_certificate(&u, &twisted_unknot(), &c),
            Ok(HalfInt::from_int(20))
        );
        assert_eq!(
            twisted_unknot().complexity() - u.complexity(),
            HalfInt::from_int(20)
        );
        assert_eq!(
            c_growth_check(&u, &c),
            Ok(u.complexity() + HalfInt::from_int(40))
        );
    }

    #[test]
    fn r2_grows_c_by_one() {
        let u = unlink(1);
        let c = Certificate::new(5, vec![Move::new(MoveKind::R2, Direction::Forward, 1, 0)]);
        let (end, w) = replay(&u, &c, |_, _, _, _| Ok(())).unwrap();
        assert_eq!(end.complexity() - u.complexity(), HalfInt::from_int(1));
        assert_eq!(w, HalfInt::from_int(1));
        assert_eq!(c_growth_check(&u, &c), Ok(HalfInt::from_int(3)));
    }

    #[test]
    fn rejections() {
        let u = unlink(1);
        let mut c = Certificate::new(5, vec![Move::twist(Direction::Forward, 1, 0, 2, 1)]);
        c.declared_weight = HalfInt::from_int(19);
        assert_eq!(
            verify_certificate(&u, &twisted_unknot(), &c),
            Err(CertError::WeightMismatch {
                declared: HalfInt::from_int(19),
                computed: HalfInt::from_int(20)
            })
        );
        let c = Certificate::new(5, vec![Move::twist(Direction::Forward, 1, 0, 2, -1)]);
        assert_eq!(
            verify_certificate(&u, &twisted_unknot(), &c),
            Err(CertError::FinalMismatch {
                first_difference: 1
            })
        );
        let c = Certificate::new(
            5,
            vec![
                Move::new(MoveKind::R2, Direction::Forward, 1, 0),
                Move::new(MoveKind::R2, Direction::Reverse, 2, 0),
            ],
        );
        let e = verify_certificate(&u, &u, &c).unwrap_err();
        assert!(matches!(e, CertError::MoveFailed { step: 2, .. }));
        assert!(e.to_string().starts_with("step 2: "));
        assert_eq!(
            verify_certificate(&u, &u, &Certificate::new(2, vec![])),
            Err(CertError::BadLevel(2))
        );
    }

    #[test]
    fn text_round_trip() {
        let c = Certificate::new(
            7,
            vec![
                Move::new(MoveKind::R2, Direction::Forward, 1, 0).with_sign(-1),
                Move::new(MoveKind::R1, Direction::Forward, 1, 0),
                Move::twist(Direction::Forward, 1, 0, 2, 1),
            ],
        );
        let text = c.to_text();
        assert_eq!(
            text,
            "cert v1 r=7\nr2 fwd at 1 strand 0 sign=-\nr1 fwd at 1 strand 0\n\
             twist fwd at 1 strand 0 n=2 sign=+\nweight 61\n"
        );
        assert_eq!(text.parse::<Certificate>().unwrap(), c);
    }

    #[test]
    fn parse_errors_name_the_line() {
        let bad = [
            ("cert v2 r=5\nweight 0\n", 1),
            ("cert v1 r=5\nr9 fwd at 0 strand 0\nweight 0\n", 2),
            ("cert v1 r=5\ntwist fwd at 0 strand 0 sign=+\nweight 0\n", 2),
            ("cert v1 r=5\nr2 fwd at 0 strand 0 n=2\nweight 0\n", 2),
            ("cert v1 r=5\nr2 up at 0 strand 0\nweight 0\n", 2),
            ("cert v1 r=5\nweight x\n", 2),
            ("cert v1 r=5\nweight 0\nr2 fwd at 0 strand 0\n", 3),
        ];
        for (text, line) in bad {
            match Certificate::parse(text) {
                Err(CertError::Parse { line: l, .. }) => assert_eq!(l, line, "{text}"),
                other => panic!("{text}: {other:?}"),
            }
        }
        assert!(matches!(
            Certificate::parse("cert v1 r=5\n"),
            Err(CertError::Parse { .. })
        ));
    }
}
