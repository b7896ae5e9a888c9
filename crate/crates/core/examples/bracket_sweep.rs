//! Kauffman bracket and Jones polynomial of a few small links, by the
//! level-by-level sweep and by the state expansion.

use morse_jones::diagram::{torus_closure, trefoil_plat, unlink, Orientation};
use morse_jones::evaluator::{bracket_bruteforce, bracket_sweep_with_stats, jones_symbolic};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cases = [
        ("unknot", unlink(1)),
        ("2-unlink", unlink(2)),
        ("trefoil", trefoil_plat()),
        ("hopf", torus_closure(2, 2)),
        ("T(2,5)", torus_closure(2, 5)),
        ("T(3,4)", torus_closure(3, 4)),
    ];
    for (name, d) in cases {
        let (bracket, stats) = bracket_sweep_with_stats(&d);
        assert_eq!(bracket, bracket_bruteforce(&d)?);
        let j = jones_symbolic(&d, &Orientation::default_for(&d))?;
        println!("{name:>8}: <D> = {bracket}");
        println!("{:>8}  J = {}   (peak states {})", "", j.to_t_string(), stats.peak_support);
    }
    Ok(())
}
