//! Characteristic polynomials of permutation matrices and averages of their
//! powers over the symmetric group.

use plethy::cycle_index::qnr_recursive;
use plethy::permutations::{average_power, char_poly, char_poly_det_oracle, AverageMode, DetFactor, Permutation};
use plethy::series::{Rational, SeriesRing};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ring = SeriesRing::of(&[("x", 8)])?;
    let sigma = Permutation::from_cycles(5, &[&[1, 2, 3], &[4, 5]])?;
    println!("cycles {:?}, type {:?}", sigma.cycles(), sigma.cycle_type().parts());
    println!(
        "det(I - xM)       = {}",
        char_poly(&sigma, &ring, 0, &Rational::from_integer(1.into()))?
    );
    println!("by expansion      = {}", char_poly_det_oracle(&sigma, &ring, 0)?);

    let half = Rational::new(1.into(), 2.into());
    let factors = [DetFactor::new(0, half.clone())];
    for n in 1..=5 {
        let brute = average_power(n, &ring, &factors, AverageMode::Permutations)?;
        let by_type = average_power(n, &ring, &factors, AverageMode::CycleTypes)?;
        let recursive = qnr_recursive(n, &ring, &[(0, half.clone())])?;
        assert!(brute == by_type && by_type == recursive);
        println!("Q_{n}^(1/2) = {recursive}");
    }
    Ok(())
}
