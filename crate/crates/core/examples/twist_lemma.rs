//! Inserting full twists (σ₁…σ_{n-1})^{n·4r} leaves the Jones polynomial
//! at t = e^{2πi/r} unchanged, even though the symbolic polynomial moves.

use morse_jones::diagram::{trefoil_plat, Orientation};
use morse_jones::evaluator::{jones_at_root, jones_symbolic};
use morse_jones::moves::{apply_move, carry_orientation, move_weight, Direction, Move};
use morse_jones::report::lemma_report;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let r = 5;
    let d = trefoil_plat();
    let o = Orientation::default_for(&d);
    // Gap 2 sits just above the two cups, where four strands are open.
    let m = Move::twist(Direction::Forward, 2, 1, 2, 1);
    let e = apply_move(&d, &m, r)?;
    let oe = carry_orientation(&d, &o, &e)?;
    println!("{m}: {} -> {} crossings, weight {}", d.crossing_count(), e.crossing_count(), move_weight(&m, r));

    let (before, after) = (jones_symbolic(&d, &o)?, jones_symbolic(&e, &oe)?);
    println!("symbolic before: {}", before.to_t_string());
    println!("symbolic after : {} terms, equal={}", after.num_terms(), before == after);

    let (vb, va) = (jones_at_root(&d, &o, r)?.value, jones_at_root(&e, &oe, r)?.value);
    println!("at root r={r}: equal={} value={:?}", vb == va, vb.complex_approx());

    print!("{}", lemma_report(&[5, 7, 8], 20, 1, None)?.to_text());
    Ok(())
}
