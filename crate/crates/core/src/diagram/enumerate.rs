use super::{DiagramError, Event, EventKind, MorseDiagram};

pub const MAX_ENUM_EVENTS: usize = 14;

/// Lexicographically ordered stream of every nonempty closed diagram with
/// at most `max_events` events and girth at most `max_girth`.
pub fn enumerate_closed(
    max_events: usize,
    max_girth: usize,
) -> Result<ClosedDiagrams, DiagramError> {
    if max_events > MAX_ENUM_EVENTS {
        return Err(DiagramError::LimitExceeded(format!(
            "max_events {max_events} exceeds {MAX_ENUM_EVENTS}"
        )));
    }
    if max_girth != 2 && max_girth != 4 {
        return Err(DiagramError::LimitExceeded(format!(
            "max_girth must be 2 or 4, got {max_girth}"
        )));
    }
    let mut it = ClosedDiagrams {
        max_events,
        max_girth,
        path: Vec::new(),
        strands: vec![0],
        frames: Vec::new(),
    };
    if max_events > 0 {
        let first = it.candidates(0, 0);
        it.frames.push((first, 0));
    }
    Ok(it)
}

pub struct ClosedDiagrams {
    max_events: usize,
    max_girth: usize,
    path: Vec<Event>,
    strands: Vec<usize>,
    frames: Vec<(Vec<Event>, usize)>,
}

impl ClosedDiagrams {
    // Legal next events in lexicographic order, keeping enough room to
    // close the diagram within the event budget.
    fn candidates(&self, n: usize, used: usize) -> Vec<Event> {
        let room = self.max_events - used;
        let fits = |after: usize| after / 2 < room;
        let mut out = Vec::new();
        if n + 2 <= self.max_girth && fits(n + 2) {
            out.extend((0..=n).map(Event::cup));
        }
        if n >= 2 {
            if fits(n - 2) {
                out.extend((0..n - 1).map(Event::cap));
            }
            if fits(n) {
                for kind in [EventKind::CrossPos, EventKind::CrossNeg] {
                    out.extend((0..n - 1).map(|i| Event::new(kind, i)));
                }
            }
        }
        out
    }
}

impl Iterator for ClosedDiagrams {
    type Item = MorseDiagram;

    fn next(&mut self) -> Option<MorseDiagram> {
        loop {
            let (cands, idx) = self.frames.last_mut()?;
            if *idx == cands.len() {
                self.frames.pop();
                self.path.pop();
                self.strands.pop();
                continue;
            }
            let ev = cands[*idx];
            *idx += 1;
            let n = (*self.strands.last().unwrap() as isize + ev.kind.strand_delta()) as usize;
            self.path.push(ev);
            self.strands.push(n);
            let next = self.candidates(n, self.path.len());
            self.frames.push((next, 0));
            if n == 0 {
                return Some(MorseDiagram::from_events_unchecked(self.path.clone()));
            }
        }
    }
}
