//! Acceptance criteria, run in order with one PASS/FAIL line each.
//! All comparisons are exact.

mod common;

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{ints, q, sparse_integer_series, sparse_pair, sparse_series, z};
use plethy::cycle_index::{power_product, qnr_recursive, zn_evaluate};
use plethy::identities::{
    low_exponent_closed_form, low_order_closed_form, parse_params, q3_binomial_variant, q3_fixed_form,
    q4_cubed_exponent_variant, residue_phi, verify, IdentityCase, IdentityId, Verdict,
};
use plethy::permutations::{
    average_power, average_power_bruteforce, char_poly, char_poly_det_oracle, enumerate_sn, AverageMode, DetFactor,
};
use plethy::plethystic::{pe, pl};
use plethy::series::{Rational, Series, SeriesRing};
use proptest::test_runner::{Config, TestRunner};

type Outcome = Result<String, String>;

fn verify_equal(id: IdentityId, params: &str, caps: &[(&str, u32)]) -> Result<(), String> {
    let caps: BTreeMap<String, u32> = caps.iter().map(|(k, v)| (k.to_string(), *v)).collect();
    let case = IdentityCase::new(id, parse_params(params).map_err(|e| e.to_string())?, &caps)
        .map_err(|e| format!("{id} {params}: {e}"))?;
    let report = verify(&case).map_err(|e| format!("{id} {params}: {e}"))?;
    match report.verdict {
        Verdict::Equal => Ok(()),
        Verdict::Unequal(w) => Err(format!(
            "{id} {params}: [{}] {} lhs {} rhs {}",
            w.check, w.monomial, w.lhs, w.rhs
        )),
    }
}

fn expect_eq(what: &str, got: &Series, want: &Series) -> Result<(), String> {
    match got.first_difference(want) {
        None => Ok(()),
        Some((m, a, b)) => Err(format!(
            "{what}: at {} got {a}, want {b}",
            got.ring().render_monomial(&m)
        )),
    }
}

fn x_ring(cap: u32) -> std::sync::Arc<SeriesRing> {
    SeriesRing::of(&[("x", cap)]).unwrap()
}

fn x_series(cap: u32, coeffs: &[i64]) -> Series {
    Series::from_coefficients(&x_ring(cap), 0, &ints(coeffs))
}

fn criterion_1() -> Outcome {
    for r in -3..=3 {
        verify_equal(
            IdentityId::AveragePowerProduct,
            &format!("r={r}"),
            &[("x", 10), ("y", 6)],
        )?;
    }
    Ok("r in -3..3 at x<=10, y<=6".into())
}

fn criterion_2() -> Outcome {
    for r in 0..=3 {
        verify_equal(
            IdentityId::AveragePowerFiniteProduct,
            &format!("r={r}"),
            &[("x", 10), ("y", 6)],
        )?;
    }
    Ok("r in 0..3 at x<=10, y<=6".into())
}

fn criterion_3() -> Outcome {
    for (r, s) in [(1, 1), (2, 1), (2, 2)] {
        let mut caps: Vec<(String, u32)> = (1..=r).map(|j| (format!("x{j}"), 5)).collect();
        caps.extend((1..=s).map(|k| (format!("q{k}"), 5)));
        caps.push(("y".into(), 5));
        let caps: Vec<(&str, u32)> = caps.iter().map(|(k, v)| (k.as_str(), *v)).collect();
        verify_equal(IdentityId::DeterminantRatioProduct, &format!("r={r},s={s}"), &caps)?;
    }
    Ok("(r,s) in {(1,1),(2,1),(2,2)}, every cap 5".into())
}

fn criterion_4() -> Outcome {
    for n in 1..=6 {
        verify_equal(IdentityId::QBinomial, &format!("n={n}"), &[("x", 10), ("q", 10)])?;
        verify_equal(IdentityId::Molien, &format!("n={n}"), &[("q", 10)])?;
    }
    Ok("n in 1..6 at x,q<=10, with the x=0 specialization".into())
}

fn criterion_5() -> Outcome {
    expect_eq("r=0", &residue_phi(&z(0), 10).unwrap(), &x_series(10, &[-1]))?;
    expect_eq(
        "r=-1",
        &residue_phi(&z(-1), 10).unwrap(),
        &x_series(10, &[-1, -1, -2, -3, -5, -7, -11, -15, -22, -30, -42]),
    )?;
    expect_eq(
        "r=-2",
        &residue_phi(&z(-2), 6).unwrap(),
        &x_series(6, &[-1, -2, -6, -14, -33, -70, -149]),
    )?;
    for r in -3..=3 {
        verify_equal(IdentityId::ResidueAtOne, &format!("r={r}"), &[("x", 10)])?;
    }
    Ok("r = 0, -1, -2 sequences; product and PE routes agree for r in -3..3".into())
}

fn criterion_6() -> Outcome {
    let ring = x_ring(5);
    let x = Series::variable(&ring, "x").unwrap();
    let one = Series::one(&ring);
    let geometric_tail = &x * &(&one - &x).inverse().unwrap();
    expect_eq(
        "PE(x/(1-x))",
        &pe(&geometric_tail).unwrap(),
        &x_series(5, &[1, 1, 2, 3, 5, 7]),
    )?;
    let ring12 = x_ring(12);
    for n in 1..=3u32 {
        let f = &Series::var_power(&ring12, 0, n) - &Series::var_power(&ring12, 0, 2 * n);
        let want = &Series::one(&ring12) + &Series::var_power(&ring12, 0, n);
        expect_eq(&format!("PE(x^{n} - x^{})", 2 * n), &pe(&f).unwrap(), &want)?;
    }
    let ring6 = x_ring(6);
    let x = Series::variable(&ring6, "x").unwrap();
    let one = Series::one(&ring6);
    let two_minus_x = &Series::from_int(&ring6, 2) - &x;
    let f = &(&x * &two_minus_x) * &(&one - &x).pow_int(-2).unwrap();
    expect_eq(
        "PE(x(2-x)/(1-x)^2)",
        &pe(&f).unwrap(),
        &x_series(6, &[1, 2, 6, 14, 33, 70, 149]),
    )?;
    Ok("Euler, 1 + x^n for n = 1..3, two-color partitions".into())
}

fn criterion_7() -> Outcome {
    let ring = x_ring(10);
    let mut perms = 0;
    for n in 1..=6 {
        for sigma in enumerate_sn(n).unwrap() {
            let oracle = char_poly_det_oracle(&sigma, &ring, 0).unwrap();
            let formula = char_poly(&sigma, &ring, 0, &z(1)).unwrap();
            expect_eq(&format!("det(I - x M) for {sigma}"), &oracle, &formula)?;
            perms += 1;
        }
    }
    for n in 0..=6 {
        for r in -2..=3 {
            let exps = [(0usize, z(r))];
            let brute = if n == 0 {
                Series::one(&ring)
            } else {
                average_power_bruteforce(n, &ring, &exps).unwrap()
            };
            let factors = [DetFactor::new(0, z(r))];
            let by_type = average_power(n, &ring, &factors, AverageMode::CycleTypes).unwrap();
            let cycle_index = zn_evaluate(n, &power_product(&ring, &exps).unwrap()).unwrap();
            let recursive = qnr_recursive(n, &ring, &exps).unwrap();
            let label = format!("Q_{n}^{r}");
            expect_eq(&format!("{label} cycle types"), &by_type, &brute)?;
            expect_eq(&format!("{label} cycle index"), &cycle_index, &brute)?;
            expect_eq(&format!("{label} recursion"), &recursive, &brute)?;
        }
    }
    Ok(format!(
        "{perms} determinants; Q_n^r for n <= 6, r in -2..3 by four routes"
    ))
}

fn criterion_8() -> Outcome {
    for r in 1..=4 {
        for n in 1..=6 {
            verify_equal(
                IdentityId::StructuralProperties,
                &format!("r={r},n={n}"),
                &[("x", n * r)],
            )?;
        }
    }
    Ok("r in 1..4, n in 1..6".into())
}

fn criterion_9() -> Outcome {
    let ring = x_ring(24);
    let brute = |n: u32, r: &Rational| average_power_bruteforce(n, &ring, &[(0, r.clone())]).unwrap();
    for r in [z(-2), z(-1), q(1, 2), z(1), z(2), z(3)] {
        for n in 1..=4 {
            let closed = low_order_closed_form(&ring, n, &r).unwrap();
            expect_eq(&format!("Q_{n}^{r} closed form"), &closed, &brute(n, &r))?;
        }
        verify_equal(IdentityId::LowOrderClosedForms, &format!("r={r}"), &[("x", 10)])?;
    }
    for r in 1..=3 {
        if q4_cubed_exponent_variant(&ring, &z(r)).unwrap() == brute(4, &z(r)) {
            return Err(format!("Q_4^{r}: the (1-x^3)^(3r) variant unexpectedly matches"));
        }
    }
    for n in 1..=6u32 {
        for r in 1..=3u32 {
            let closed = low_exponent_closed_form(&ring, n, r).unwrap();
            expect_eq(&format!("Q_{n}^{r} closed form"), &closed, &brute(n, &z(r.into())))?;
            verify_equal(
                IdentityId::LowExponentClosedForms,
                &format!("r={r},n={n}"),
                &[("x", n * r)],
            )?;
        }
        let oracle = brute(n, &z(3));
        if (q3_fixed_form(&ring).unwrap() == oracle) != (n == 2) {
            return Err(format!(
                "(1-x)^3 (1+3x^2) vs Q_{n}^3: expected a match exactly at n = 2"
            ));
        }
        if n >= 3 && q3_binomial_variant(&ring, n).unwrap() == oracle {
            return Err(format!("Q_{n}^3: the binomial variant unexpectedly matches"));
        }
    }
    for id in [IdentityId::LowOrderClosedForms, IdentityId::LowExponentClosedForms] {
        if id.notes().is_none() {
            return Err(format!("{id} has no catalog notes"));
        }
    }
    Ok("Q_1..Q_4 and r = 1, 2, 3 forms match brute force; flawed variants rejected".into())
}

fn criterion_10() -> Outcome {
    let mut runner = TestRunner::new(Config {
        cases: 128,
        failure_persistence: None,
        ..Config::default()
    });
    runner
        .run(&sparse_series(), |f| {
            let big_f = pe(&f).unwrap();
            proptest::prop_assert_eq!(pl(&big_f).unwrap(), f);
            Ok(())
        })
        .map_err(|e| format!("pl(pe(f)) = f: {e}"))?;
    runner
        .run(&sparse_pair(), |(f, g)| {
            let lhs = pe(&(&f + &g)).unwrap();
            proptest::prop_assert_eq!(lhs, &pe(&f).unwrap() * &pe(&g).unwrap());
            Ok(())
        })
        .map_err(|e| format!("pe(f+g) = pe(f) pe(g): {e}"))?;
    runner
        .run(&sparse_integer_series(), |f| {
            proptest::prop_assert!(pe(&f).unwrap().has_integer_coefficients());
            Ok(())
        })
        .map_err(|e| format!("integrality: {e}"))?;
    verify_equal(IdentityId::Heine, "", &[("x1", 4), ("x2", 4), ("q", 4), ("y", 4)])?;
    for params in ["r1=1,r2=0", "r1=1,r2=1"] {
        verify_equal(IdentityId::OddPowerSubstitution, params, &[("x", 10), ("y", 4)])?;
    }
    Ok("128 cases per property; Heine at caps 4; odd-power substitution at n <= 4".into())
}

/// Name, check and time budget in seconds.
type Criterion = (&'static str, fn() -> Outcome, u64);

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("average-power generating function equals its product", criterion_1, 10),
        ("finite product equals the infinite product", criterion_2, 1),
        (
            "determinant ratios: permutation average, product and PE",
            criterion_3,
            30,
        ),
        ("q-binomial and Molien", criterion_4, 30),
        ("residues at y = 1", criterion_5, 1),
        ("plethystic exponential golden values", criterion_6, 1),
        ("oracle equivalence", criterion_7, 60),
        ("structural properties of Q_n^r", criterion_8, 10),
        ("closed forms and their corrections", criterion_9, 30),
        (
            "round trips, homomorphism, integrality, Heine, odd powers",
            criterion_10,
            60,
        ),
    ];
    let mut failed = 0;
    for (i, (name, check, budget)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > Duration::from_secs(budget) => Err(format!(
                "{detail}; took {:.2}s, budget {budget}s",
                elapsed.as_secs_f64()
            )),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name} ({detail}) [{:.2}s]", i + 1, elapsed.as_secs_f64()),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why} [{:.2}s]", i + 1, elapsed.as_secs_f64());
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
