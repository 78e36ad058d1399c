//! Runs every built-in identity at default caps and prints a one-line verdict.

use std::collections::BTreeMap;

use plethy::identities::{parse_params, verify, IdentityCase, IdentityId};

fn sample_params(id: IdentityId) -> &'static str {
    match id {
        IdentityId::AveragePowerProduct | IdentityId::ResidueAtOne | IdentityId::LowOrderClosedForms => "r=-1/2",
        IdentityId::AveragePowerFiniteProduct => "r=2",
        IdentityId::DeterminantRatioProduct => "r=1,s=2",
        IdentityId::MultivariateExponential => "r1=1,r2=-1",
        IdentityId::QBinomial | IdentityId::Molien => "n=5",
        IdentityId::Heine => "",
        IdentityId::OddPowerSubstitution => "r1=1,r2=1",
        IdentityId::StructuralProperties => "r=4,n=5",
        IdentityId::LowExponentClosedForms => "r=3,n=6",
    }
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for id in IdentityId::ALL {
        let case = IdentityCase::new(id, parse_params(sample_params(id))?, &BTreeMap::new())?;
        let report = verify(&case)?;
        let verdict = if report.verdict.is_equal() { "equal" } else { "UNEQUAL" };
        println!(
            "{:<15} {:<12} {verdict:<8} {} ms",
            id.as_str(),
            sample_params(id),
            report.millis
        );
    }

    let case = IdentityCase::new(IdentityId::QBinomial, parse_params("n=3")?, &BTreeMap::new())?;
    println!("\n{}", verify(&case)?.to_json());
    Ok(())
}
