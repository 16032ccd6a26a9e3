//! Acceptance suite: every criterion is an exact check at full size, run
//! against a wall-clock budget. Prints one PASS/FAIL line per criterion.

use std::panic::{self, AssertUnwindSafe};
use std::path::PathBuf;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use vira_core::cohomology::{self, CocycleOracle, OneCochain};
use vira_core::extension::{self, BaseAlgebra};
use vira_core::fock::{self, FockVector, Terms};
use vira_core::verma::{self, VermaVector};
use vira_core::witt::{self, WittVector};
use vira_core::{Error, Partition, Scalar, VerificationReport};

type Outcome = Result<(), String>;

struct Criterion {
    id: u32,
    title: &'static str,
    budget: Duration,
    run: fn() -> Outcome,
}

fn q(p: i64, d: i64) -> Scalar {
    Scalar::ratio(p, d)
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn small_rational(rng: &mut ChaCha8Rng) -> Scalar {
    q(rng.gen_range(-12..=12), rng.gen_range(1..=6))
}

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn passed(report: VerificationReport) -> Outcome {
    ensure(report.passed(), || report.to_text().replace('\n', "; "))
}

fn random_witt(rng: &mut ChaCha8Rng) -> WittVector {
    let mut v = WittVector::zero();
    for _ in 0..rng.gen_range(1..=4) {
        v.add_term(rng.gen_range(-10..=10), small_rational(rng));
    }
    v
}

fn witt_axioms() -> Outcome {
    let report = witt::check_witt_axioms(8);
    ensure(report.checked_count >= 4913, || {
        format!("only {} cases", report.checked_count)
    })?;
    passed(report)?;
    let mut rng = rng(1);
    for i in 0..500 {
        let (x, y, z) = (
            random_witt(&mut rng),
            random_witt(&mut rng),
            random_witt(&mut rng),
        );
        ensure(witt::check_jacobi(&x, &y, &z), || {
            format!("Jacobi fails on random triple {i}")
        })?;
        ensure(witt::bracket(&x, &x).is_zero(), || {
            format!("[x, x] != 0 on random triple {i}")
        })?;
        ensure(witt::bracket(&x, &y) == -witt::bracket(&y, &x), || {
            format!("antisymmetry fails on random triple {i}")
        })?;
    }
    Ok(())
}

fn virasoro_cocycle_identity() -> Outcome {
    let report = cohomology::check_cocycle_identity(&CocycleOracle::virasoro(), 12);
    ensure(report.checked_count == 15625, || {
        format!("{} triples", report.checked_count)
    })?;
    passed(report)?;
    passed(cohomology::check_virasoro_polynomial_identity(50))
}

fn random_cochain(rng: &mut ChaCha8Rng, support: i64) -> OneCochain {
    let values: Vec<(i64, Scalar)> = (-support..=support)
        .map(|n| (n, small_rational(rng)))
        .collect();
    OneCochain::new(support as u64, values).expect("values inside the window")
}

fn nontriviality() -> Outcome {
    ensure(cohomology::virasoro_cocycle(3, -3) == q(2, 1), || {
        "omega(3,-3) != 2".into()
    })?;
    ensure(cohomology::virasoro_cocycle(6, -6) == q(35, 2), || {
        "omega(6,-6) != 35/2".into()
    })?;
    let w = cohomology::nontriviality_witness(&CocycleOracle::virasoro(), 6);
    ensure(w.is_some(), || "no witness for the Virasoro cocycle".into())?;
    let mut rng = rng(3);
    for i in 0..20 {
        let beta = random_cochain(&mut rng, 6);
        let w = cohomology::nontriviality_witness(&cohomology::coboundary(&beta), 6);
        ensure(w.is_none(), || format!("witness {w:?} for coboundary {i}"))?;
    }
    Ok(())
}

fn reduction_round_trip() -> Outcome {
    let mut rng = rng(4);
    for i in 0..100 {
        let r0 = if i % 10 == 0 {
            Scalar::zero()
        } else {
            small_rational(&mut rng)
        };
        let beta0 = random_cochain(&mut rng, 6);
        let omega = CocycleOracle::virasoro()
            .scaled(&r0)
            .plus(&cohomology::coboundary(&beta0));
        let red = cohomology::reduce_cocycle(&omega, 12).map_err(|e| e.to_string())?;
        ensure(red.r == r0, || {
            format!("case {i}: r = {}, expected {r0}", red.r)
        })?;
        passed(red.residual)?;
    }
    Ok(())
}

fn structure_constants() -> Outcome {
    passed(extension::check_virasoro_constants(8))?;
    passed(extension::check_heisenberg_constants(10))?;
    passed(extension::check_extension_predicate(
        &BaseAlgebra::witt(),
        &CocycleOracle::virasoro(),
        8,
    ))?;
    passed(extension::check_extension_predicate(
        &BaseAlgebra::abelian(),
        &extension::heisenberg_cocycle(),
        8,
    ))
}

fn heisenberg_and_truncation() -> Outcome {
    for alpha in [q(0, 1), q(2, 3)] {
        passed(fock::check_heisenberg_relations(8, 8, &alpha))?;
    }
    let mut rng = rng(6);
    let all = Partition::up_to_level(8);
    let alpha = q(2, 3);
    for i in 0..200 {
        let mut terms = Terms::zero();
        for _ in 0..rng.gen_range(1..=5) {
            terms.add_term(
                all[rng.gen_range(0..all.len())].clone(),
                small_rational(&mut rng),
            );
        }
        let v = FockVector::new(alpha.clone(), terms);
        let bound = fock::truncation_bound(&v);
        for l in bound..=bound + 10 {
            ensure(fock::j_action(l, &v).is_zero(), || {
                format!("random vector {i}: J({l}) v != 0 with bound {bound}")
            })?;
        }
    }
    Ok(())
}

fn normal_ordering() -> Outcome {
    let alpha = q(1, 2);
    passed(fock::check_normal_pair_symmetry(8, 6, &alpha))?;
    passed(fock::check_normal_pair_vanishing(8, 6, 5, &alpha))
}

fn primary_field() -> Outcome {
    passed(fock::check_primary_field(6, 6, &q(2, 3)))
}

fn normal_pair_commutator() -> Outcome {
    passed(fock::check_normal_pair_commutators(4, 6, 5, &q(1, 2)))
}

fn sugawara() -> Outcome {
    passed(fock::check_sugawara_commutator(6, 8, &q(1, 2)))
}

fn weighted_sums() -> Outcome {
    for n in 0..=100 {
        ensure(fock::weighted_sum_check(n), || format!("n = {n}"))?;
    }
    Ok(())
}

fn verma_relations() -> Outcome {
    let fixtures = [
        (q(0, 1), q(0, 1)),
        (q(1, 1), q(1, 2)),
        (q(1, 2), q(1, 16)),
        (q(-22, 5), q(-1, 5)),
    ];
    for (c, h) in fixtures {
        passed(verma::check_verma_relations(5, 6, &c, &h))?;
        passed(verma::check_verma_grading(6, &c, &h))?;
    }
    Ok(())
}

fn universal_map() -> Outcome {
    for alpha in [q(0, 1), q(1, 2), q(2, 1)] {
        let hw = VermaVector::highest_weight(Scalar::one(), verma::vacuum_weight(&alpha));
        let image = verma::universal_map(&alpha, &hw).map_err(|e| e.to_string())?;
        ensure(image == FockVector::vacuum(alpha.clone()), || {
            format!("alpha = {alpha}: {image}")
        })?;
        passed(verma::check_intertwining(&alpha, 4, 5))?;
    }
    let alpha = q(1, 2);
    for (c, h) in [(q(1, 1), q(1, 2)), (q(1, 2), q(1, 8)), (q(0, 1), q(0, 1))] {
        let v = VermaVector::highest_weight(c.clone(), h.clone());
        let rejected = matches!(
            verma::universal_map(&alpha, &v),
            Err(Error::UniversalMapPrecondition { .. })
        );
        ensure(rejected, || format!("(c, h) = ({c}, {h}) accepted"))?;
    }
    Ok(())
}

fn cli_dir(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join(name)
}

fn vira(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_vira"))
        .args(args)
        .env_remove("VIRA_FORMAT")
        .env_remove("VIRA_JOBS")
        .output()
        .expect("run vira")
}

fn cli_contract() -> Outcome {
    let not_a_cocycle = cli_dir("data").join("not_a_cocycle.tsv");
    let not_a_cocycle = not_a_cocycle.to_str().unwrap();
    let golden: [(&str, Vec<&str>); 3] = [
        (
            "witt_jacobi",
            vec!["verify", "witt-jacobi", "--max-index", "2"],
        ),
        (
            "nontrivial_virasoro",
            vec!["nontrivial", "--virasoro", "--window", "6"],
        ),
        (
            "not_a_cocycle",
            vec!["verify", "cocycle", "--input", not_a_cocycle],
        ),
    ];
    for (name, args) in golden {
        let args = [&args[..], &["--format", "json"]].concat();
        let (a, b) = (vira(&args), vira(&args));
        ensure(a.stdout == b.stdout, || format!("{name}: runs differ"))?;
        let expected = std::fs::read(cli_dir("golden").join(format!("{name}.ndjson")))
            .map_err(|e| e.to_string())?;
        ensure(a.stdout == expected, || {
            format!("{name}: differs from golden file")
        })?;
    }
    let contract: [(Vec<&str>, i32); 5] = [
        (vec!["verify", "cocycle", "--virasoro", "--window", "4"], 0),
        (vec!["verify", "cocycle", "--input", not_a_cocycle], 1),
        (vec!["verify", "sugawara", "--alpha", "1/0"], 2),
        (vec!["verify", "bogus"], 2),
        (vec!["reduce", "--input", not_a_cocycle], 2),
    ];
    for (args, code) in contract {
        let got = vira(&args).status.code();
        ensure(got == Some(code), || {
            format!("{args:?}: exit {got:?}, expected {code}")
        })?;
    }
    Ok(())
}

fn criteria() -> Vec<Criterion> {
    let s = Duration::from_secs;
    vec![
        Criterion {
            id: 1,
            title: "Witt bracket: Jacobi and alternation",
            budget: s(5),
            run: witt_axioms,
        },
        Criterion {
            id: 2,
            title: "Virasoro cocycle identity and polynomial identity",
            budget: s(5),
            run: virasoro_cocycle_identity,
        },
        Criterion {
            id: 3,
            title: "Virasoro cocycle values and nontriviality witness",
            budget: s(1),
            run: nontriviality,
        },
        Criterion {
            id: 4,
            title: "cocycle reduction round trip",
            budget: s(10),
            run: reduction_round_trip,
        },
        Criterion {
            id: 5,
            title: "structure constants and extension predicate",
            budget: s(2),
            run: structure_constants,
        },
        Criterion {
            id: 6,
            title: "Heisenberg relations and truncation on Fock space",
            budget: s(30),
            run: heisenberg_and_truncation,
        },
        Criterion {
            id: 7,
            title: "normal ordering symmetry and vanishing",
            budget: s(10),
            run: normal_ordering,
        },
        Criterion {
            id: 8,
            title: "currents are primary of weight one",
            budget: s(30),
            run: primary_field,
        },
        Criterion {
            id: 9,
            title: "Sugawara commutator with normal pairs",
            budget: s(60),
            run: normal_pair_commutator,
        },
        Criterion {
            id: 10,
            title: "Sugawara operators satisfy Virasoro with c = 1",
            budget: s(120),
            run: sugawara,
        },
        Criterion {
            id: 11,
            title: "weighted sum identity",
            budget: s(1),
            run: weighted_sums,
        },
        Criterion {
            id: 12,
            title: "Verma module relations and grading",
            budget: s(60),
            run: verma_relations,
        },
        Criterion {
            id: 13,
            title: "universal map into Fock space",
            budget: s(60),
            run: universal_map,
        },
        Criterion {
            id: 14,
            title: "CLI golden output and exit codes",
            budget: s(5),
            run: cli_contract,
        },
    ]
}

fn main() -> ExitCode {
    panic::set_hook(Box::new(|_| {}));
    let mut failures = 0;
    for c in criteria() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(c.run))
            .unwrap_or_else(|e| {
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                Err(format!("panicked: {msg}"))
            })
            .and_then(|()| {
                let took = start.elapsed();
                ensure(took <= c.budget, || {
                    format!("took {took:.2?}, budget {:?}", c.budget)
                })
            });
        let took = start.elapsed();
        match outcome {
            Ok(()) => println!(
                "[PASS] {:>2} {} ({took:.2?}, budget {:?})",
                c.id, c.title, c.budget
            ),
            Err(why) => {
                failures += 1;
                println!("[FAIL] {:>2} {} ({took:.2?}): {why}", c.id, c.title);
            }
        }
    }
    println!("acceptance: {} of 14 criteria passed", 14 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
