//! The `morse v1` text format: a header line, then one event per line
//! (`cup <i>`, `cap <i>`, `x+ <i>`, `x- <i>`). `#` starts a comment.

use std::fmt;
use std::str::FromStr;

use super::{DiagramError, Event, EventKind, MorseDiagram};

pub const HEADER: &str = "morse v1";

impl MorseDiagram {
    pub fn to_text(&self) -> String {
        let mut out = String::with_capacity(HEADER.len() + 1 + 7 * self.len());
        out.push_str(HEADER);
        out.push('\n');
        for ev in self.events() {
            out.push_str(&ev.to_string());
            out.push('\n');
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self, DiagramError> {
        let mut lines = text.split('\n').enumerate();
        match lines.next() {
            Some((_, HEADER)) => {}
            _ => {
                return Err(DiagramError::Parse {
                    line: 1,
                    msg: format!("expected header `{HEADER}`"),
                })
            }
        }
        let mut events = Vec::new();
        for (idx, raw) in lines {
            let body = raw
                .split('#')
                .next()
                .unwrap_or("")
                .trim_matches([' ', '\t']);
            if body.is_empty() {
                continue;
            }
            events
                .push(parse_event(body).map_err(|msg| DiagramError::Parse { line: idx + 1, msg })?);
        }
        MorseDiagram::validate(events)
    }
}

fn parse_event(body: &str) -> Result<Event, String> {
    let mut parts = body.split_whitespace();
    let tag = parts.next().ok_or("empty event")?;
    let kind = match tag {
        "cup" => EventKind::Cup,
        "cap" => EventKind::Cap,
        "x+" => EventKind::CrossPos,
        "x-" => EventKind::CrossNeg,
        other => return Err(format!("unknown event `{other}`")),
    };
    let pos = parts
        .next()
        .ok_or_else(|| format!("`{tag}` needs a strand index"))?
        .parse::<usize>()
        .map_err(|e| format!("bad strand index: {e}"))?;
    if let Some(extra) = parts.next() {
        return Err(format!("unexpected token `{extra}`"));
    }
    Ok(Event::new(kind, pos))
}

impl FromStr for MorseDiagram {
    type Err = DiagramError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        MorseDiagram::parse(s)
    }
}

impl fmt::Display for MorseDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}
