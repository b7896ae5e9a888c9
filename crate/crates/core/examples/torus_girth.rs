//! Torus closures T(p, q): girth stays at 2·min(p, q) however long the
//! braid gets, and the sweep cost grows linearly in q.

use morse_jones::diagram::torus_closure;
use morse_jones::report::bench_diagram;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for p in 2..=4 {
        for q in [p + 1, 10, 100, 400] {
            let d = torus_closure(p, q);
            let rec = bench_diagram(format!("T({p},{q})"), &d)?;
            println!(
                "{:>10}  girth={:<2} crossings={:<5} peak={:<3} steps={:<6} {:.2} ms",
                rec.id, rec.girth, rec.crossings, rec.state_peak, rec.steps, rec.ms
            );
        }
    }
    Ok(())
}
