//! Writing, parsing and checking a move certificate, and what a rejected
//! one looks like.

use morse_jones::diagram::unlink;
use morse_jones::moves::{
    apply_move, c_growth_check, verify_certificate, Certificate, Direction, Move, MoveKind,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let r = 5;
    let start = unlink(1);
    let moves = vec![
        Move::new(MoveKind::R2, Direction::Forward, 1, 0),
        Move::new(MoveKind::R1, Direction::Forward, 1, 0),
        Move::twist(Direction::Forward, 1, 0, 2, -1),
    ];
    let mut end = start.clone();
    for m in &moves {
        end = apply_move(&end, m, r)?;
    }
    let cert = Certificate::new(r, moves);
    let text = cert.to_text();
    print!("{text}");

    let parsed: Certificate = text.parse()?;
    println!("verified weight: {}", verify_certificate(&start, &end, &parsed)?);
    println!("complexity bound: c <= {}", c_growth_check(&start, &parsed)?);

    let mut broken = parsed.clone();
    broken.moves[1].event = 4;
    match verify_certificate(&start, &end, &broken) {
        Ok(_) => println!("unexpectedly accepted"),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
