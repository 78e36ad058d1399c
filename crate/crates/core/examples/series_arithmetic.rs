//! Exact truncated power series in several variables.

use num_rational::BigRational;
use plethy::series::{Series, SeriesRing};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ring = SeriesRing::of(&[("x", 6), ("y", 3)])?;
    let x = Series::variable(&ring, "x")?;
    let y = Series::variable(&ring, "y")?;
    let one = Series::one(&ring);

    let f = &one - &x;
    println!("1/(1 - x)       = {}", f.inverse()?);
    println!("(1 - x)^(-1/2)  = {}", f.pow(&BigRational::new((-1).into(), 2.into()))?);
    println!("(1 + x + y)^3   = {}", (&one + &(&x + &y)).pow_int(3)?);

    let e = x.exp()?;
    println!("exp(x)          = {e}");
    println!("log(exp(x))     = {}", e.log()?);
    println!("adams_2(x + xy) = {}", (&x + &(&x * &y)).adams(2));

    // Terms past a cap vanish, so products stay finite.
    let tail = Series::var_power(&ring, 0, 4);
    println!("x^4 * x^4       = {}", &tail * &tail);
    Ok(())
}
