//! Kauffman state expansion over all `2^c` crossing resolutions. Kept
//! independent of the sweep: loops are counted with a union-find over
//! strand segments rather than by tracking planar matchings.

use std::collections::HashMap;

use crate::diagram::{EventKind, MorseDiagram};
use crate::exactnum::LaurentInt;

use super::EvalError;

pub const MAX_BRUTE_FORCE_CROSSINGS: usize = 25;

struct RollbackUnionFind {
    parent: Vec<u32>,
    size: Vec<u32>,
    history: Vec<u32>,
    components: usize,
}

impl RollbackUnionFind {
    fn new(n: usize) -> Self {
        RollbackUnionFind {
            parent: (0..n as u32).collect(),
            size: vec![1; n],
            history: Vec::new(),
            components: n,
        }
    }

    fn find(&self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            x = self.parent[x as usize];
        }
        x
    }

    fn union(&mut self, a: u32, b: u32) {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            self.history.push(u32::MAX);
            return;
        }
        if self.size[ra as usize] < self.size[rb as usize] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb as usize] = ra;
        self.size[ra as usize] += self.size[rb as usize];
        self.components -= 1;
        self.history.push(rb);
    }

    fn undo(&mut self) {
        let rb = self.history.pop().expect("nothing to undo");
        if rb == u32::MAX {
            return;
        }
        let ra = self.parent[rb as usize];
        self.size[ra as usize] -= self.size[rb as usize];
        self.parent[rb as usize] = rb;
        self.components += 1;
    }
}

struct Crossing {
    // bottom-left, bottom-right, top-left, top-right
    ports: [u32; 4],
    positive: bool,
}

/// Kauffman bracket by full state expansion, returning the number of
/// union operations performed as a cost measure.
pub fn bracket_bruteforce_counted(d: &MorseDiagram) -> Result<(LaurentInt, u64), EvalError> {
    let c = d.crossing_count();
    if c > MAX_BRUTE_FORCE_CROSSINGS {
        return Err(EvalError::TooManyCrossings {
            crossings: c,
            limit: MAX_BRUTE_FORCE_CROSSINGS,
        });
    }

    // Segment ids: every strand at every level.
    let mut level_ids: Vec<Vec<usize>> = Vec::with_capacity(d.len() + 1);
    let mut next_id = 0usize;
    let mut n = 0usize;
    level_ids.push(Vec::new());
    for ev in d.events() {
        n = (n as isize + ev.kind.strand_delta()) as usize;
        level_ids.push((next_id..next_id + n).collect());
        next_id += n;
    }

    // Fixed connections: extrema and strands passing beside an event.
    let mut base: Vec<usize> = (0..next_id).collect();
    fn root(base: &mut [usize], mut x: usize) -> usize {
        while base[x] != x {
            base[x] = base[base[x]];
            x = base[x];
        }
        x
    }
    let join = |base: &mut Vec<usize>, a: usize, b: usize| {
        let (ra, rb) = (root(base, a), root(base, b));
        base[ra] = rb;
    };
    let mut raw_crossings = Vec::new();
    for (g, ev) in d.events().iter().enumerate() {
        let (below, above) = (&level_ids[g], &level_ids[g + 1]);
        let i = ev.pos;
        match ev.kind {
            EventKind::Cup => {
                for (p, &seg) in below.iter().enumerate() {
                    join(&mut base, seg, above[if p < i { p } else { p + 2 }]);
                }
                join(&mut base, above[i], above[i + 1]);
            }
            EventKind::Cap => {
                for (p, &seg) in below.iter().enumerate() {
                    if p < i {
                        join(&mut base, seg, above[p]);
                    } else if p > i + 1 {
                        join(&mut base, seg, above[p - 2]);
                    }
                }
                join(&mut base, below[i], below[i + 1]);
            }
            EventKind::CrossPos | EventKind::CrossNeg => {
                for (p, &seg) in below.iter().enumerate() {
                    if p != i && p != i + 1 {
                        join(&mut base, seg, above[p]);
                    }
                }
                raw_crossings.push((
                    [below[i], below[i + 1], above[i], above[i + 1]],
                    ev.kind == EventKind::CrossPos,
                ));
            }
        }
    }

    // Compress classes touching crossings to dense node ids.
    let mut node_of_root: HashMap<usize, u32> = HashMap::new();
    let mut crossings = Vec::with_capacity(raw_crossings.len());
    for (ports, positive) in raw_crossings {
        let mut mapped = [0u32; 4];
        for (slot, seg) in mapped.iter_mut().zip(ports) {
            let r = root(&mut base, seg);
            let len = node_of_root.len() as u32;
            *slot = *node_of_root.entry(r).or_insert(len);
        }
        crossings.push(Crossing {
            ports: mapped,
            positive,
        });
    }
    let mut all_roots = std::collections::HashSet::new();
    for seg in 0..next_id {
        all_roots.insert(root(&mut base, seg));
    }
    let free_loops = all_roots
        .iter()
        .filter(|r| !node_of_root.contains_key(r))
        .count();

    let mut uf = RollbackUnionFind::new(node_of_root.len());
    let mut tally: HashMap<(i64, usize), u64> = HashMap::new();
    let mut ops = 0u64;
    expand(&crossings, 0, 0, &mut uf, &mut tally, &mut ops);

    let delta = LaurentInt::delta();
    let max_loops = tally
        .keys()
        .map(|&(_, l)| l + free_loops)
        .max()
        .unwrap_or(free_loops);
    let mut delta_pow = vec![LaurentInt::one()];
    for k in 1..=max_loops {
        let prev = &delta_pow[k - 1];
        delta_pow.push(prev * &delta);
    }
    let mut keys: Vec<_> = tally.into_iter().collect();
    keys.sort();
    let mut total = LaurentInt::zero();
    for ((a_minus_b, loops), count) in keys {
        let term = &LaurentInt::monomial(count, a_minus_b) * &delta_pow[loops + free_loops];
        total = &total + &term;
    }
    Ok((total, ops))
}

fn expand(
    crossings: &[Crossing],
    idx: usize,
    a_minus_b: i64,
    uf: &mut RollbackUnionFind,
    tally: &mut HashMap<(i64, usize), u64>,
    ops: &mut u64,
) {
    let Some(x) = crossings.get(idx) else {
        *tally.entry((a_minus_b, uf.components)).or_insert(0) += 1;
        return;
    };
    let [bl, br, tl, tr] = x.ports;
    // Vertical smoothing is the A-smoothing of a positive crossing.
    let vertical = if x.positive { 1 } else { -1 };
    for (pairs, weight) in [
        ([(bl, tl), (br, tr)], vertical),
        ([(bl, br), (tl, tr)], -vertical),
    ] {
        for (a, b) in pairs {
            uf.union(a, b);
        }
        *ops += 2;
        expand(crossings, idx + 1, a_minus_b + weight, uf, tally, ops);
        uf.undo();
        uf.undo();
    }
}

pub fn bracket_bruteforce(d: &MorseDiagram) -> Result<LaurentInt, EvalError> {
    bracket_bruteforce_counted(d).map(|(v, _)| v)
}
