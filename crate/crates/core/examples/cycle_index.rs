//! Cycle index polynomials of the symmetric groups and their evaluations.

use plethy::cycle_index::{cycle_index_sequence, zn};
use plethy::partitions::partitions_of;
use plethy::series::{Series, SeriesRing};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for n in 1..=4 {
        println!("Z_{n} = {}", zn(n));
    }
    println!("p(7) = {}", partitions_of(7).len());

    // Z_n(1 + x) is the sum of x^k for k <= n: multisets from two colours.
    let ring = SeriesRing::of(&[("x", 8)])?;
    let g = &Series::one(&ring) + &Series::variable(&ring, "x")?;
    for (n, s) in cycle_index_sequence(&g, 5).iter().enumerate() {
        println!("Z_{n}(1 + x) = {s}");
    }

    // Z_4(3) counts multisets of size 4 drawn from 3 kinds: C(6, 4) = 15.
    let three = Series::from_int(&ring, 3);
    println!("Z_4(3) = {}", zn(4).evaluate(&three)?);
    Ok(())
}
