//! PE(g y) computed three ways: directly, as an infinite product over the
//! terms of g, and as a sum over partitions.

use plethy::cycle_index::power_product;
use plethy::plethystic::{pe, pe_partition_sum, pe_product_form};
use plethy::series::{Rational, Series, SeriesRing};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ring = SeriesRing::of(&[("x", 8), ("y", 4)])?;
    let y = Series::variable(&ring, "y")?;
    for r in [-2i64, 1, 3] {
        let g = power_product(&ring, &[(0, Rational::from_integer(r.into()))])?;
        let direct = pe(&(&g * &y))?;
        let product = pe_product_form(&g, "y")?;
        let partitions = pe_partition_sum(&g, "y")?;
        println!("r = {r}: routes agree = {}", direct == product && product == partitions);
        println!("  {direct}");
    }
    Ok(())
}
