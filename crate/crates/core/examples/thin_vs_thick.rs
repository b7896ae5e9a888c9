//! Same crossing count, different girth: the sweep cost follows the width
//! of the diagram, the state expansion follows the crossings.

use morse_jones::diagram::{random_diagram, torus_closure};
use morse_jones::report::bench_diagram;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let thin = torus_closure(2, 20);
    let thick = (0..)
        .map(|s| random_diagram(s, 12, 44))
        .find(|d| d.girth() == 12 && (16..=20).contains(&d.crossing_count()))
        .expect("some seed gives a wide diagram");
    for (name, d) in [("thin", thin), ("thick", thick)] {
        let rec = bench_diagram(name, &d)?;
        println!(
            "{name:>5}: girth={:<2} crossings={} sweep ops={:<8} state-sum ops={:<10} ({:.2} ms vs {:.2} ms)",
            rec.girth,
            rec.crossings,
            rec.sweep_ops,
            rec.bf_ops.unwrap_or(0),
            rec.ms,
            rec.bf_ms.unwrap_or(f64::NAN)
        );
    }
    Ok(())
}
