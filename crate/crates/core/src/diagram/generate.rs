use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Event, MorseDiagram};

/// Closure of the braid `(σ₁…σ_{p-1})^q` with `p` nested cups below and `p`
/// nested caps above. The arguments are swapped if needed so that the
/// braid has `min(p, q)` strands, giving girth `2·min(p, q)`.
pub fn torus_closure(p: usize, q: usize) -> MorseDiagram {
    assert!(p >= 1 && q >= 1, "torus parameters must be positive");
    let (p, q) = if p <= q { (p, q) } else { (q, p) };
    let mut events = Vec::with_capacity(2 * p + q * (p - 1));
    events.extend((0..p).map(Event::cup));
    for _ in 0..q {
        events.extend((0..p - 1).map(Event::cross_pos));
    }
    events.extend((0..p).rev().map(Event::cap));
    MorseDiagram::from_events_unchecked(events)
}

/// `m` unlinked round circles, one above the other.
pub fn unlink(m: usize) -> MorseDiagram {
    assert!(m >= 1, "unlink needs at least one component");
    let events = (0..m)
        .flat_map(|_| [Event::cup(0), Event::cap(0)])
        .collect();
    MorseDiagram::from_events_unchecked(events)
}

/// Right-handed trefoil as a 4-plat: two cups side by side, three positive
/// crossings between the middle strands, then caps on the outer pairs.
pub fn trefoil_plat() -> MorseDiagram {
    MorseDiagram::from_events_unchecked(vec![
        Event::cup(0),
        Event::cup(2),
        Event::cross_pos(1),
        Event::cross_pos(1),
        Event::cross_pos(1),
        Event::cap(2),
        Event::cap(0),
    ])
}

/// A seeded random closed diagram: `length` random legal events that keep
/// the strand count within `max_girth`, followed by random caps until the
/// diagram closes.
pub fn random_diagram(seed: u64, max_girth: usize, length: usize) -> MorseDiagram {
    assert!(
        max_girth >= 2 && max_girth.is_multiple_of(2),
        "max_girth must be even and at least 2"
    );
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut events = Vec::with_capacity(length + max_girth / 2);
    let mut n = 0usize;
    for _ in 0..length {
        let can_cup = n + 2 <= max_girth;
        let can_act = n >= 2;
        let choice = match (can_cup, can_act) {
            (true, false) => 0,
            (false, true) => rng.gen_range(1..3),
            _ => rng.gen_range(0..3),
        };
        let ev = match choice {
            0 => Event::cup(rng.gen_range(0..=n)),
            1 => Event::cap(rng.gen_range(0..n - 1)),
            _ => Event::crossing(
                if rng.gen_bool(0.5) { 1 } else { -1 },
                rng.gen_range(0..n - 1),
            ),
        };
        n = (n as isize + ev.kind.strand_delta()) as usize;
        events.push(ev);
    }
    while n > 0 {
        events.push(Event::cap(rng.gen_range(0..n - 1)));
        n -= 2;
    }
    MorseDiagram::from_events_unchecked(events)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::HalfInt;

    #[test]
    fn torus_shapes() {
        let t = torus_closure(2, 3);
        assert_eq!((t.girth(), t.crossing_count()), (4, 3));
        let t = torus_closure(3, 5);
        assert_eq!((t.girth(), t.crossing_count()), (6, 10));
        assert_eq!(torus_closure(5, 3), torus_closure(3, 5));
        for q in 1..6 {
            let t = torus_closure(1, q);
            assert_eq!((t.girth(), t.crossing_count()), (2, 0));
        }
    }

    #[test]
    fn torus_complexity_formula() {
        for p in 1..=5usize {
            for q in p..=7 {
                let t = torus_closure(p, q);
                let expected = HalfInt::from_doubled((q * (p - 1) + 2 * p) as i64);
                assert_eq!(t.complexity(), expected);
            }
        }
    }

    #[test]
    fn unlink_shapes() {
        assert_eq!(unlink(1).events(), &[Event::cup(0), Event::cap(0)]);
        assert_eq!(unlink(4).complexity(), HalfInt::from_int(4));
        assert_eq!(unlink(4).girth(), 2);
    }

    #[test]
    fn random_is_deterministic_and_bounded() {
        assert_eq!(random_diagram(42, 8, 30), random_diagram(42, 8, 30));
        assert_ne!(random_diagram(42, 8, 30), random_diagram(43, 8, 30));
        for seed in 0..10_000 {
            let g = 2 * (1 + (seed as usize % 4));
            let d = random_diagram(seed, g, 12);
            assert!(d.girth() <= g);
            assert!(MorseDiagram::validate(d.events().to_vec()).is_ok());
            let closing = d.len() - 12;
            assert!(d.events()[12..]
                .iter()
                .all(|e| e.kind == super::super::EventKind::Cap));
            assert!(closing <= g / 2);
        }
    }
}
