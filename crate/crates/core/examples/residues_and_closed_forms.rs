//! Residues at y = 1, coloured partition counts and closed forms for Q_n^r.

use plethy::cycle_index::qnr_recursive;
use plethy::identities::{low_exponent_closed_form, low_order_closed_form, residue_phi};
use plethy::partitions::colored_partition_series;
use plethy::series::{Rational, SeriesRing};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for r in -2..=2i64 {
        println!(
            "residue r = {r:>2}: {}",
            residue_phi(&Rational::from_integer(r.into()), 8)?
        );
    }
    for colors in 1..=3 {
        let counts: Vec<String> = colored_partition_series(colors, 9)
            .coefficients_along(0)
            .iter()
            .map(|c| c.to_string())
            .collect();
        println!("{colors}-coloured partitions: {}", counts.join(" "));
    }

    let ring = SeriesRing::of(&[("x", 12)])?;
    let r = Rational::new(2.into(), 3.into());
    for n in 1..=4 {
        let closed = low_order_closed_form(&ring, n, &r)?;
        assert_eq!(closed, qnr_recursive(n, &ring, &[(0, r.clone())])?);
        println!("Q_{n}^(2/3) = {closed}");
    }
    for n in 1..=4 {
        println!("Q_{n}^3 = {}", low_exponent_closed_form(&ring, n, 3)?);
    }
    Ok(())
}
