//! One PASS/FAIL line per acceptance criterion. Runs without the libtest
//! harness so the lines come out in order and unbuffered.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use ehk::hecke::CyclotomicPoly;
use ehk::par::Exec;
use ehk::qint;
use ehk::sym::{e_to_p, h_to_p, GenPartition, Side, Sym2};
use ehk::verify::{run_suite, SuiteParams};
use ehk::RatFunc;

fn params() -> SuiteParams {
    SuiteParams {
        exec: Exec::Parallel,
        ..Default::default()
    }
}

fn suite(name: &str, p: SuiteParams) -> Result<String, String> {
    let rep = run_suite(name, &p).map_err(|e| format!("{name}: {e}"))?;
    if rep.passed() {
        Ok(format!("{name}: {} checks", rep.checked))
    } else {
        let first = &rep.failures[0];
        Err(format!(
            "{name}: {} of {} failed, first {first:?}",
            rep.failures.len(),
            rep.checked
        ))
    }
}

fn partitions(n: i64, max: i64) -> Vec<Vec<i64>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in (1..=n.min(max)).rev() {
        for mut rest in partitions(n - p, p) {
            rest.insert(0, p);
            out.push(rest);
        }
    }
    out
}

/// h_n and e_n from `Σ ε_μ p_μ / z_μ`, independent of the recurrence in the library.
fn sym_oracle() -> Result<String, String> {
    let mut checked = 0;
    for side in [Side::Plus, Side::Minus] {
        for n in 0..=8 {
            let (mut h, mut e) = (Sym2::zero(), Sym2::zero());
            for mu in partitions(n, n) {
                let mut mult = BTreeMap::new();
                for &p in &mu {
                    *mult.entry(p).or_insert(0i64) += 1;
                }
                let z: i64 = mult
                    .iter()
                    .map(|(&i, &m)| i.pow(m as u32) * (1..=m).product::<i64>())
                    .product();
                let mut c = RatFunc::from_ratio(1, z);
                for &p in &mu {
                    c = c.mul(&qint(p).mul(&qint(p)));
                }
                let lam = GenPartition::new(mu.iter().map(|p| side.sign() * p).collect()).unwrap();
                let eps = if (n - mu.len() as i64) % 2 == 0 {
                    1
                } else {
                    -1
                };
                e.add_term(lam.clone(), c.scale_int(eps));
                h.add_term(lam, c);
            }
            if h_to_p(n, side) != h || e_to_p(n, side) != e {
                return Err(format!("h/e mismatch at degree {n}, {side:?}"));
            }
            checked += 2;
        }
    }
    Ok(format!("{checked} z-sum comparisons"))
}

type Check = Box<dyn Fn() -> Result<String, String>>;

fn main() -> ExitCode {
    let l2: CyclotomicPoly = "1,-(1+t^2),t^2".parse().unwrap();
    let criteria: Vec<(u32, &str, Check)> = vec![
        (
            1,
            "jacobi",
            Box::new(|| {
                suite(
                    "jacobi",
                    SuiteParams {
                        bound: Some(3),
                        ..params()
                    },
                )
            }),
        ),
        (
            2,
            "violet",
            Box::new(|| {
                suite(
                    "violet",
                    SuiteParams {
                        bound: Some(5),
                        ..params()
                    },
                )
            }),
        ),
        (
            3,
            "biangular",
            Box::new(|| {
                suite(
                    "biangular",
                    SuiteParams {
                        bound: Some(4),
                        ..params()
                    },
                )
            }),
        ),
        (
            4,
            "fock-relations",
            Box::new(|| {
                suite(
                    "fock-relations",
                    SuiteParams {
                        bound: Some(2),
                        ..params()
                    },
                )
            }),
        ),
        (5, "mouse", Box::new(|| suite("mouse", params()))),
        (
            6,
            "symmetric functions",
            Box::new(|| {
                let a = suite(
                    "sym",
                    SuiteParams {
                        bound: Some(8),
                        ..params()
                    },
                )?;
                Ok(format!("{a}; {}", sym_oracle()?))
            }),
        ),
        (7, "hecke", Box::new(|| suite("hecke", params()))),
        (
            8,
            "hoops",
            Box::new(move || {
                let a = suite(
                    "hoops",
                    SuiteParams {
                        f: Some("1,t^2".parse().unwrap()),
                        rmax: Some(3),
                        ..params()
                    },
                )?;
                let b = suite(
                    "hoops",
                    SuiteParams {
                        f: Some(l2.clone()),
                        rmax: Some(2),
                        ..params()
                    },
                )?;
                Ok(format!("{a}; {b}"))
            }),
        ),
        (
            9,
            "confluence",
            Box::new(|| {
                suite(
                    "confluence",
                    SuiteParams {
                        samples: Some(200),
                        ..params()
                    },
                )
            }),
        ),
    ];

    let mut ok = true;
    for (i, name, run) in criteria {
        let start = Instant::now();
        let res = run();
        let secs = start.elapsed().as_secs_f64();
        match res {
            Ok(msg) => println!("PASS {i} {name} ({msg}, {secs:.1}s)"),
            Err(msg) => {
                ok = false;
                println!("FAIL {i} {name} ({msg}, {secs:.1}s)");
            }
        }
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
