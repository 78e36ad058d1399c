//! Parsing, rendering and evaluating series expressions.

use plethy::expr::parse;
use plethy::plethystic::pe;
use plethy::series::{SeriesRing, VariableSet};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let vars = VariableSet::new(["x", "y"])?;
    let ring = SeriesRing::of(&[("x", 6), ("y", 2)])?;
    for text in [
        "x*(2-x)/(1-x)^2",
        "(1 - x)^-1/2",
        "1/(1-x*y) - 1",
        "x/3/4",
        "-(1/2)*y^2",
    ] {
        let e = parse(text, &vars)?;
        println!("{text:<18} -> {e:<22} = {}", e.eval(&ring)?);
    }

    let macmahon = parse("x*(1+x)/(1-x)^3", &vars)?.eval(&ring)?;
    println!("PE(x(1+x)/(1-x)^3) = {}", pe(&macmahon)?);

    for bad in ["1 +", "z + 1", "x^y"] {
        println!("{bad:<6} error: {}", parse(bad, &vars).unwrap_err());
    }
    if let Err(e) = parse("1/(x-x)", &vars)?.eval(&ring) {
        println!("1/(x-x) error: {e}");
    }
    Ok(())
}
