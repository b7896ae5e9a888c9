//! SU(2) level r-2 data: twist factors, the S-matrix row, and sphere
//! dimensions against the Verlinde bound.

use morse_jones::tqft::{fusion_dim, s_row, theta, verlinde_bound, TqftParams};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for r in [5, 7] {
        let p = TqftParams::new(r)?;
        println!("r={r} level={} labels={}", p.level, p.label_count());
        for a in p.labels() {
            println!("  theta({a}) ~ {:?}", theta(a, r)?.complex_approx());
        }
        print!("{}", s_row(r)?);
        for n in [2, 4, 6, 8, 10] {
            println!(
                "  n={n:<2} dim={:<5} bound={:.2}",
                fusion_dim(r, n)?,
                verlinde_bound(r, n)?
            );
        }
    }
    Ok(())
}
