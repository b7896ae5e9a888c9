//! Every diagram of girth 2 is an unlink: its Jones polynomial is
//! (-t^{1/2} - t^{-1/2})^{m-1} for m components.

use morse_jones::diagram::{enumerate_closed, trace_components, Orientation};
use morse_jones::evaluator::jones_symbolic;
use morse_jones::exactnum::LaurentInt;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut by_components = std::collections::BTreeMap::new();
    for d in enumerate_closed(10, 2)? {
        let m = trace_components(&d).count;
        let j = jones_symbolic(&d, &Orientation::default_for(&d))?;
        assert_eq!(j, LaurentInt::delta().pow(m as u32 - 1));
        *by_components.entry(m).or_insert(0usize) += 1;
    }
    for (m, n) in by_components {
        println!("{n:>6} diagrams with {m} component(s)");
    }
    Ok(())
}
