use super::{DiagramError, EventKind, MorseDiagram};

/// Component labels for every strand segment of a diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Components {
    pub count: usize,
    /// `labels[gap][pos]` is the component of the strand at `pos` in `gap`.
    pub labels: Vec<Vec<usize>>,
}

struct Segments {
    offsets: Vec<usize>,
    counts: Vec<usize>,
}

impl Segments {
    fn new(d: &MorseDiagram) -> Self {
        let counts = d.strand_counts();
        let mut offsets = Vec::with_capacity(counts.len() + 1);
        let mut acc = 0;
        for c in &counts {
            offsets.push(acc);
            acc += c;
        }
        offsets.push(acc);
        Segments { offsets, counts }
    }

    fn id(&self, gap: usize, pos: usize) -> usize {
        self.offsets[gap] + pos
    }

    fn total(&self) -> usize {
        *self.offsets.last().unwrap()
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra != rb {
        parent[ra.max(rb)] = ra.min(rb);
    }
}

/// Labels strands by link component. Components are numbered in order of
/// their lowest cup.
pub fn trace_components(d: &MorseDiagram) -> Components {
    let segs = Segments::new(d);
    let mut parent: Vec<usize> = (0..segs.total()).collect();
    for (g, ev) in d.events().iter().enumerate() {
        let below = segs.counts[g];
        let i = ev.pos;
        match ev.kind {
            EventKind::Cup => {
                for p in 0..below {
                    let up = if p < i { p } else { p + 2 };
                    union(&mut parent, segs.id(g, p), segs.id(g + 1, up));
                }
                union(&mut parent, segs.id(g + 1, i), segs.id(g + 1, i + 1));
            }
            EventKind::Cap => {
                for p in 0..below {
                    if p < i {
                        union(&mut parent, segs.id(g, p), segs.id(g + 1, p));
                    } else if p > i + 1 {
                        union(&mut parent, segs.id(g, p), segs.id(g + 1, p - 2));
                    }
                }
                union(&mut parent, segs.id(g, i), segs.id(g, i + 1));
            }
            EventKind::CrossPos | EventKind::CrossNeg => {
                for p in 0..below {
                    let up = if p == i {
                        i + 1
                    } else if p == i + 1 {
                        i
                    } else {
                        p
                    };
                    union(&mut parent, segs.id(g, p), segs.id(g + 1, up));
                }
            }
        }
    }
    let mut label_of_root = vec![usize::MAX; segs.total()];
    let mut count = 0;
    let mut labels = Vec::with_capacity(segs.counts.len());
    for (g, &n) in segs.counts.iter().enumerate() {
        let mut row = Vec::with_capacity(n);
        for p in 0..n {
            let root = find(&mut parent, segs.id(g, p));
            if label_of_root[root] == usize::MAX {
                label_of_root[root] = count;
                count += 1;
            }
            row.push(label_of_root[root]);
        }
        labels.push(row);
    }
    Components { count, labels }
}

/// Orientation of a diagram relative to the default one, in which every
/// component runs through its lowest cup from left to right.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Orientation {
    flips: Vec<bool>,
}

impl Orientation {
    pub fn default_for(d: &MorseDiagram) -> Self {
        Orientation {
            flips: vec![false; trace_components(d).count],
        }
    }

    pub fn with_flips(flips: Vec<bool>) -> Self {
        Orientation { flips }
    }

    pub fn flips(&self) -> &[bool] {
        &self.flips
    }

    /// Reverses every component.
    pub fn reversed(&self) -> Self {
        Orientation {
            flips: self.flips.iter().map(|f| !f).collect(),
        }
    }

    /// Vertical direction (`+1` up, `-1` down) of every strand segment,
    /// indexed `[gap][pos]`.
    pub fn strand_directions(&self, d: &MorseDiagram) -> Result<Vec<Vec<i8>>, DiagramError> {
        let comps = trace_components(d);
        if comps.count != self.flips.len() {
            return Err(DiagramError::InconsistentOrientation {
                given: self.flips.len(),
                components: comps.count,
            });
        }
        let events = d.events();
        let mut dirs: Vec<Vec<i8>> = comps.labels.iter().map(|row| vec![0; row.len()]).collect();
        let mut started = vec![false; comps.count];
        for (k, ev) in events.iter().enumerate() {
            if ev.kind != EventKind::Cup {
                continue;
            }
            let c = comps.labels[k + 1][ev.pos];
            if started[c] {
                continue;
            }
            started[c] = true;
            // Right leg of the lowest cup; default direction is upward.
            let start = (k + 1, ev.pos + 1, if self.flips[c] { -1i8 } else { 1 });
            let (mut g, mut p, mut dir) = start;
            loop {
                dirs[g][p] = dir;
                (g, p, dir) = walk(d, g, p, dir);
                if (g, p, dir) == start {
                    break;
                }
            }
        }
        Ok(dirs)
    }
}

// One step along a component from segment `(gap, pos)` travelling in `dir`.
fn walk(d: &MorseDiagram, g: usize, p: usize, dir: i8) -> (usize, usize, i8) {
    let events = d.events();
    if dir > 0 {
        let ev = events[g];
        let i = ev.pos;
        match ev.kind {
            EventKind::Cup => (g + 1, if p < i { p } else { p + 2 }, 1),
            EventKind::Cap if p == i => (g, i + 1, -1),
            EventKind::Cap if p == i + 1 => (g, i, -1),
            EventKind::Cap => (g + 1, if p < i { p } else { p - 2 }, 1),
            _ if p == i => (g + 1, i + 1, 1),
            _ if p == i + 1 => (g + 1, i, 1),
            _ => (g + 1, p, 1),
        }
    } else {
        let ev = events[g - 1];
        let i = ev.pos;
        match ev.kind {
            EventKind::Cup if p == i => (g, i + 1, 1),
            EventKind::Cup if p == i + 1 => (g, i, 1),
            EventKind::Cup => (g - 1, if p < i { p } else { p - 2 }, -1),
            EventKind::Cap => (g - 1, if p < i { p } else { p + 2 }, -1),
            _ if p == i => (g - 1, i + 1, -1),
            _ if p == i + 1 => (g - 1, i, -1),
            _ => (g - 1, p, -1),
        }
    }
}

/// Signed crossing count: each crossing contributes its kind sign times the
/// product of the vertical directions of its two strands.
pub fn writhe(d: &MorseDiagram, o: &Orientation) -> Result<i64, DiagramError> {
    let dirs = o.strand_directions(d)?;
    Ok(d.events()
        .iter()
        .enumerate()
        .filter(|(_, e)| e.kind.is_crossing())
        .map(|(g, e)| {
            e.kind.crossing_sign() * i64::from(dirs[g][e.pos]) * i64::from(dirs[g][e.pos + 1])
        })
        .sum())
}

#[cfg(test)]
mod tests {
    use super::super::{random_diagram, torus_closure, trefoil_plat, unlink};
    use super::*;

    #[test]
    fn component_counts() {
        assert_eq!(trace_components(&unlink(1)).count, 1);
        assert_eq!(trace_components(&unlink(3)).count, 3);
        assert_eq!(trace_components(&trefoil_plat()).count, 1);
        assert_eq!(trace_components(&torus_closure(2, 4)).count, 2);
        assert_eq!(trace_components(&torus_closure(3, 3)).count, 3);
        assert_eq!(trace_components(&torus_closure(3, 5)).count, 1);
    }

    #[test]
    fn trefoil_plat_hand_trace() {
        // cup0 legs a,a'; cup2 legs b,b'; three crossings swap a' and b,
        // then b' is capped to a' and a to b.
        let comps = trace_components(&trefoil_plat());
        assert!(comps.labels.iter().flatten().all(|&c| c == 0));
        let dirs = Orientation::default_for(&trefoil_plat())
            .strand_directions(&trefoil_plat())
            .unwrap();
        // Just above both cups: a down, a' up, b up, b' down.
        assert_eq!(dirs[2], vec![-1, 1, 1, -1]);
    }

    #[test]
    fn writhe_examples() {
        let u = unlink(1);
        assert_eq!(writhe(&u, &Orientation::default_for(&u)).unwrap(), 0);
        let t = trefoil_plat();
        assert_eq!(writhe(&t, &Orientation::default_for(&t)).unwrap(), 3);
        let braid = torus_closure(2, 3);
        assert_eq!(
            writhe(&braid, &Orientation::default_for(&braid)).unwrap(),
            3
        );
    }

    #[test]
    fn writhe_of_knot_is_orientation_free() {
        let t = torus_closure(2, 5);
        let o = Orientation::default_for(&t);
        assert_eq!(writhe(&t, &o).unwrap(), writhe(&t, &o.reversed()).unwrap());
    }

    #[test]
    fn linking_sign_flips_with_one_component() {
        let hopf = torus_closure(2, 2);
        assert_eq!(writhe(&hopf, &Orientation::default_for(&hopf)).unwrap(), 2);
        let flipped = Orientation::with_flips(vec![false, true]);
        assert_eq!(writhe(&hopf, &flipped).unwrap(), -2);
    }

    #[test]
    fn orientation_arity_checked() {
        let t = trefoil_plat();
        assert_eq!(
            writhe(&t, &Orientation::with_flips(vec![false, false])),
            Err(DiagramError::InconsistentOrientation {
                given: 2,
                components: 1
            })
        );
    }

    #[test]
    fn mirror_negates_writhe_and_keeps_components() {
        for seed in 0..100 {
            let d = random_diagram(seed, 6, 14);
            let m = d.mirror();
            let o = Orientation::default_for(&d);
            assert_eq!(writhe(&m, &o).unwrap(), -writhe(&d, &o).unwrap());
            assert_eq!(trace_components(&m), trace_components(&d));
        }
    }

    #[test]
    fn directions_are_consistent_through_events() {
        for seed in 0..50 {
            let d = random_diagram(seed, 8, 20);
            let dirs = Orientation::default_for(&d).strand_directions(&d).unwrap();
            for (g, ev) in d.events().iter().enumerate() {
                let i = ev.pos;
                match ev.kind {
                    EventKind::Cup => assert_eq!(dirs[g + 1][i], -dirs[g + 1][i + 1]),
                    EventKind::Cap => assert_eq!(dirs[g][i], -dirs[g][i + 1]),
                    _ => {
                        assert_eq!(dirs[g][i], dirs[g + 1][i + 1]);
                        assert_eq!(dirs[g][i + 1], dirs[g + 1][i]);
                    }
                }
                assert!(dirs[g].iter().all(|&x| x != 0));
            }
        }
    }
}
