//! PE and PL, the multiplicative lift of a series and its inverse.

use plethy::plethystic::{harmonic, mobius, pe, pl};
use plethy::series::{Rational, Series, SeriesRing};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ring = SeriesRing::of(&[("x", 10)])?;
    let x = Series::variable(&ring, "x")?;

    // PE of x/(1-x) counts integer partitions.
    let parts = &x * &(&Series::one(&ring) - &x).inverse()?;
    let euler = pe(&parts)?;
    println!("PE(x/(1-x)) = {euler}");
    println!("PL of that  = {}", pl(&euler)?);

    // PE(2x) = 1/(1-x)^2
    println!("PE(2x)      = {}", pe(&x.scale(&Rational::from_integer(2.into())))?);
    println!("H(x)        = {}", harmonic(&x)?);

    let mu: Vec<i64> = (1..=12).map(mobius).collect();
    println!("mobius 1..12: {mu:?}");
    Ok(())
}
