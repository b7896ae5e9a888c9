//! Morse-position link diagrams.
//!
//! A diagram is a word of elementary events read from the bottom of the
//! picture to the top. Between consecutive events a generic horizontal line
//! meets some number of strands, numbered from the left starting at 0.
//! Gap `g` is the level just below event `g`; gap `len` is above the last
//! event.

mod enumerate;
mod format;
mod generate;
mod orientation;

pub use enumerate::{enumerate_closed, ClosedDiagrams};
pub use generate::{random_diagram, torus_closure, trefoil_plat, unlink};
pub use orientation::{trace_components, writhe, Components, Orientation};

use std::fmt;

use thiserror::Error;

use crate::exactnum::HalfInt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EventKind {
    /// Local minimum: two new strands appear at `i, i+1`.
    Cup,
    /// Local maximum: strands `i, i+1` are joined.
    Cap,
    /// The strand entering at `i` passes over the strand entering at `i+1`.
    CrossPos,
    /// The strand entering at `i` passes under the strand entering at `i+1`.
    CrossNeg,
}

impl EventKind {
    pub fn is_crossing(self) -> bool {
        matches!(self, EventKind::CrossPos | EventKind::CrossNeg)
    }

    /// `+1` for `CrossPos`, `-1` for `CrossNeg`, 0 for extrema.
    pub fn crossing_sign(self) -> i64 {
        match self {
            EventKind::CrossPos => 1,
            EventKind::CrossNeg => -1,
            _ => 0,
        }
    }

    pub fn mirrored(self) -> EventKind {
        match self {
            EventKind::CrossPos => EventKind::CrossNeg,
            EventKind::CrossNeg => EventKind::CrossPos,
            other => other,
        }
    }

    /// Net change in strand count.
    pub fn strand_delta(self) -> isize {
        match self {
            EventKind::Cup => 2,
            EventKind::Cap => -2,
            _ => 0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Event {
    pub kind: EventKind,
    pub pos: usize,
}

impl Event {
    pub const fn new(kind: EventKind, pos: usize) -> Self {
        Event { kind, pos }
    }

    pub const fn cup(pos: usize) -> Self {
        Event::new(EventKind::Cup, pos)
    }

    pub const fn cap(pos: usize) -> Self {
        Event::new(EventKind::Cap, pos)
    }

    pub const fn cross_pos(pos: usize) -> Self {
        Event::new(EventKind::CrossPos, pos)
    }

    pub const fn cross_neg(pos: usize) -> Self {
        Event::new(EventKind::CrossNeg, pos)
    }

    /// Crossing of the given sign (`+1` or `-1`).
    pub fn crossing(sign: i8, pos: usize) -> Self {
        if sign >= 0 {
            Event::cross_pos(pos)
        } else {
            Event::cross_neg(pos)
        }
    }

    /// Whether the event can act on `strands` strands.
    pub fn fits(&self, strands: usize) -> bool {
        match self.kind {
            EventKind::Cup => self.pos <= strands,
            _ => self.pos + 1 < strands,
        }
    }
}

impl fmt::Display for Event {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.kind {
            EventKind::Cup => "cup",
            EventKind::Cap => "cap",
            EventKind::CrossPos => "x+",
            EventKind::CrossNeg => "x-",
        };
        write!(f, "{tag} {}", self.pos)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("event {event}: cap needs two strands but only {strands} present")]
    NegativeStrands { event: usize, strands: usize },
    #[error("event {event}: position {pos} out of range for {strands} strands")]
    IndexOutOfRange {
        event: usize,
        pos: usize,
        strands: usize,
    },
    #[error("diagram ends with {strands} open strands")]
    NonClosed { strands: usize },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("orientation has {given} flags but the diagram has {components} components")]
    InconsistentOrientation { given: usize, components: usize },
    #[error("enumeration limit exceeded: {0}")]
    LimitExceeded(String),
}

/// A validated closed Morse diagram.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct MorseDiagram {
    events: Vec<Event>,
}

impl MorseDiagram {
    /// Checks that every event fits the running strand count and that the
    /// diagram closes up.
    pub fn validate(events: Vec<Event>) -> Result<Self, DiagramError> {
        let mut strands = 0usize;
        for (idx, ev) in events.iter().enumerate() {
            strands = step_strands(idx, *ev, strands)?;
        }
        if strands != 0 {
            return Err(DiagramError::NonClosed { strands });
        }
        Ok(MorseDiagram { events })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn events(&self) -> &[Event] {
        &self.events
    }

    pub fn into_events(self) -> Vec<Event> {
        self.events
    }

    pub fn len(&self) -> usize {
        self.events.len()
    }

    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }

    /// Strand count at every gap; `len() + 1` entries, first and last 0.
    pub fn strand_counts(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.events.len() + 1);
        let mut n = 0usize;
        out.push(n);
        for ev in &self.events {
            n = (n as isize + ev.kind.strand_delta()) as usize;
            out.push(n);
        }
        out
    }

    /// Maximum strand count over generic horizontal lines.
    pub fn girth(&self) -> usize {
        self.strand_counts().into_iter().max().unwrap_or(0)
    }

    pub fn crossing_count(&self) -> usize {
        self.events.iter().filter(|e| e.kind.is_crossing()).count()
    }

    pub fn extremum_count(&self) -> usize {
        self.events.len() - self.crossing_count()
    }

    /// Half the number of crossings plus half the number of local extrema.
    pub fn complexity(&self) -> HalfInt {
        HalfInt::from_doubled(self.events.len() as i64)
    }

    pub fn mirror(&self) -> Self {
        MorseDiagram {
            events: self
                .events
                .iter()
                .map(|e| Event::new(e.kind.mirrored(), e.pos))
                .collect(),
        }
    }

    /// Split union: `other` stacked above `self`.
    pub fn concat(&self, other: &MorseDiagram) -> Self {
        let mut events = self.events.clone();
        events.extend_from_slice(&other.events);
        MorseDiagram { events }
    }

    pub(crate) fn from_events_unchecked(events: Vec<Event>) -> Self {
        debug_assert!(Self::validate(events.clone()).is_ok());
        MorseDiagram { events }
    }
}

pub(crate) fn step_strands(idx: usize, ev: Event, strands: usize) -> Result<usize, DiagramError> {
    match ev.kind {
        EventKind::Cap if strands < 2 => Err(DiagramError::NegativeStrands {
            event: idx,
            strands,
        }),
        _ if !ev.fits(strands) => Err(DiagramError::IndexOutOfRange {
            event: idx,
            pos: ev.pos,
            strands,
        }),
        _ => Ok((strands as isize + ev.kind.strand_delta()) as usize),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validate_examples() {
        assert!(MorseDiagram::validate(vec![Event::cup(0), Event::cap(0)]).is_ok());
        assert_eq!(
            MorseDiagram::validate(vec![Event::cap(0)]),
            Err(DiagramError::NegativeStrands {
                event: 0,
                strands: 0
            })
        );
        assert_eq!(
            MorseDiagram::validate(vec![Event::cup(0)]),
            Err(DiagramError::NonClosed { strands: 2 })
        );
        assert_eq!(
            MorseDiagram::validate(vec![Event::cup(0), Event::cross_pos(1), Event::cap(0)]),
            Err(DiagramError::IndexOutOfRange {
                event: 1,
                pos: 1,
                strands: 2
            })
        );
        assert_eq!(
            MorseDiagram::validate(vec![Event::cup(1)]),
            Err(DiagramError::IndexOutOfRange {
                event: 0,
                pos: 1,
                strands: 0
            })
        );
        assert!(MorseDiagram::validate(vec![]).is_ok());
    }

    #[test]
    fn girth_and_complexity() {
        let unknot = unlink(1);
        assert_eq!(unknot.girth(), 2);
        assert_eq!(unknot.complexity(), HalfInt::from_int(1));
        let t = trefoil_plat();
        assert_eq!(t.girth(), 4);
        assert_eq!(t.complexity(), HalfInt::from_doubled(7));
        assert_eq!(t.complexity().to_string(), "7/2");
        assert_eq!(torus_closure(3, 5).girth(), 6);
    }

    #[test]
    fn mirror_involution() {
        let t = trefoil_plat();
        assert_ne!(t.mirror(), t);
        assert_eq!(t.mirror().mirror(), t);
        assert_eq!(unlink(1).mirror(), unlink(1));
    }
}
