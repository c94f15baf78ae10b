//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line (visible with `--nocapture`). Every tolerance is exact; nothing
//! here is calibrated after the fact.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, resume_unwind, UnwindSafe};
use std::time::Instant;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use orbitcalc::classify3::{raymond_classify, OrbitSurface, SeifertOrbitData};
use orbitcalc::classify4::{
    build_orbit_space, classify_config, enumerate_arc_cases, euler_check, FixedPointConfig,
    TwoPointData,
};
use orbitcalc::doc;
use orbitcalc::intform::{ElemOp, IntSymMatrix};
use orbitcalc::manifold::{ManifoldExpr, Summand};
use orbitcalc::orbit::{
    SeifertInvariant, Sign, ViolationKind, WeightedArc, WeightedCircle, WeightedOrbitSpace,
    WeightedSphere,
};
use orbitcalc::plumbing::assemble_chain;
use orbitcalc::run::{execute, CommandKind, RunOptions};

fn criterion(number: u32, title: &str, body: impl FnOnce() + UnwindSafe) {
    let result = catch_unwind(body);
    match &result {
        Ok(()) => println!("criterion {number:2} [PASS] {title}"),
        Err(_) => println!("criterion {number:2} [FAIL] {title}"),
    }
    if let Err(e) = result {
        resume_unwind(e);
    }
}

fn seifert(a: i64, b: i64) -> SeifertInvariant {
    SeifertInvariant::new(a, b).unwrap()
}

fn arc(b1: i64, alpha: i64, beta: i64, b2: i64) -> WeightedArc {
    WeightedArc::single(b1, alpha, beta, b2).unwrap()
}

fn m2(rows: &[&[i64]]) -> IntSymMatrix {
    IntSymMatrix::from_rows_i64(rows).unwrap()
}

fn s2xs2() -> ManifoldExpr {
    ManifoldExpr::connected_sum4(vec![Summand::S2xS2])
}

fn cp2_mixed() -> ManifoldExpr {
    ManifoldExpr::connected_sum4(vec![Summand::Cp2, Summand::Cp2Rev])
}

fn cp2_pair() -> ManifoldExpr {
    ManifoldExpr::connected_sum4(vec![Summand::Cp2, Summand::Cp2])
}

/// All configurations the chain templates support, for criteria 8 and 9.
fn supported_configs() -> Vec<FixedPointConfig> {
    let mut configs = vec![
        FixedPointConfig::SphereOnly,
        FixedPointConfig::SpherePlusPoint,
    ];
    for w in -10..=10 {
        configs.push(FixedPointConfig::TwoSpheres { weight: w });
    }
    for s1 in [Sign::Plus, Sign::Minus] {
        for s2 in [Sign::Plus, Sign::Minus] {
            configs.push(FixedPointConfig::SpherePlusTwoPoints(TwoPointData::Signs(
                s1, s2,
            )));
        }
    }
    for k in 2..=12 {
        configs.push(FixedPointConfig::SpherePlusTwoPoints(TwoPointData::Arc(
            arc(0, k, 1, 0),
        )));
        configs.push(FixedPointConfig::SpherePlusTwoPoints(TwoPointData::Arc(
            arc(-1, k, k - 1, -1),
        )));
    }
    configs.push(FixedPointConfig::SpherePlusTwoPoints(TwoPointData::Arc(
        arc(0, 2, 1, -1),
    )));
    configs.push(FixedPointConfig::SpherePlusTwoPoints(TwoPointData::Arc(
        arc(-1, 2, 1, 0),
    )));
    configs
}

/// One table row as (b', b'', eps', eps'', omega1, alpha, beta, omega2).
type TableRow = (i64, i64, i64, i64, i64, i64, i64, i64);

#[test]
fn criterion_01_case_table_reproduction() {
    criterion(
        1,
        "single-segment arc case table reproduced exactly",
        || {
            let cases = enumerate_arc_cases(12);
            let got: Vec<TableRow> = cases
                .iter()
                .map(|c| {
                    (
                        c.family.0,
                        c.family.1,
                        c.eps_start,
                        c.eps_end,
                        c.omega1,
                        c.alpha,
                        c.beta,
                        c.omega2,
                    )
                })
                .collect();
            let mut expected = Vec::new();
            for k in 2..=12 {
                expected.push((0, 0, 1, -1, 0, k, k - 1, -k));
            }
            expected.push((0, -1, 1, 1, 1, 2, 1, 2));
            expected.push((-1, 0, -1, -1, -1, 2, 1, -2));
            for k in 2..=12 {
                expected.push((-1, -1, -1, 1, 0, k, k - 1, k));
            }
            assert_eq!(got, expected);
        },
    );
}

#[test]
fn criterion_02_manifold_identifications() {
    criterion(
        2,
        "fixed-point configurations identify the stated manifolds",
        || {
            assert_eq!(
                classify_config(&FixedPointConfig::SphereOnly)
                    .unwrap()
                    .manifold,
                ManifoldExpr::sphere4()
            );
            assert_eq!(
                classify_config(&FixedPointConfig::SpherePlusPoint)
                    .unwrap()
                    .manifold,
                ManifoldExpr::single(Summand::Cp2).with_either_orientation()
            );
            for w in -10..=10 {
                let got = classify_config(&FixedPointConfig::TwoSpheres { weight: w })
                    .unwrap()
                    .manifold;
                let expected = if w % 2 == 0 { s2xs2() } else { cp2_mixed() };
                assert_eq!(got, expected, "two spheres, weight {w}");
            }
            let z2 = classify_config(&FixedPointConfig::SpherePlusTwoPoints(TwoPointData::Arc(
                arc(0, 2, 1, -1),
            )))
            .unwrap()
            .manifold;
            assert!(z2 == cp2_pair() || z2 == cp2_pair().orientation_reverse());
            let z2_rev = classify_config(&FixedPointConfig::SpherePlusTwoPoints(
                TwoPointData::Arc(arc(-1, 2, 1, 0)),
            ))
            .unwrap()
            .manifold;
            assert_eq!(z2_rev, z2.orientation_reverse());
            for k in 2..=12 {
                for a in [arc(0, k, 1, 0), arc(-1, k, k - 1, -1)] {
                    let got = classify_config(&FixedPointConfig::SpherePlusTwoPoints(
                        TwoPointData::Arc(a.clone()),
                    ))
                    .unwrap()
                    .manifold;
                    let expected = if k % 2 == 0 { s2xs2() } else { cp2_mixed() };
                    assert_eq!(got, expected, "arc {a}");
                }
            }
        },
    );
}

#[test]
fn criterion_03_reduction_steps() {
    criterion(
        3,
        "elementary reduction traces are exact and replayable",
        || {
            let out = m2(&[&[1, 1], &[1, 2]]).reduce_trace().unwrap();
            assert_eq!(out.steps, vec![ElemOp { i: 1, j: 2, k: -1 }]);
            assert_eq!(out.matrix, m2(&[&[1, 0], &[0, 1]]));
            assert!(!out.exhausted);

            let out = m2(&[&[-1, 1], &[1, -2]]).reduce_trace().unwrap();
            assert_eq!(out.matrix, m2(&[&[-1, 0], &[0, -1]]));

            for seed in unimodular_2x2(5) {
                let out = seed.reduce_trace().unwrap();
                assert!(!out.exhausted, "search exhausted for {seed}");
                let replayed = seed.apply_steps(&out.steps).unwrap();
                assert_eq!(replayed, out.matrix, "replay mismatch for {seed}");
            }
        },
    );
}

/// Every symmetric 2x2 integer matrix with entries bounded by `range` and
/// determinant of absolute value 1.
fn unimodular_2x2(range: i64) -> Vec<IntSymMatrix> {
    let mut out = Vec::new();
    for a in -range..=range {
        for b in -range..=range {
            for c in -range..=range {
                if (a * c - b * b).abs() == 1 {
                    out.push(m2(&[&[a, b], &[b, c]]));
                }
            }
        }
    }
    out
}

#[test]
fn criterion_04_oracle_equivalence() {
    criterion(
        4,
        "classification agrees with the brute-force congruence oracle",
        || {
            let start = Instant::now();
            let mats = unimodular_2x2(5);
            assert!(!mats.is_empty());
            for (i, a) in mats.iter().enumerate() {
                let class_a = a.classify().unwrap();
                for b in &mats[i..] {
                    let same_class = class_a == b.classify().unwrap();
                    let congruent = a.congruent_brute_force(b, 6);
                    assert_eq!(
                        same_class, congruent,
                        "oracle disagreement: {a} vs {b} (same_class={same_class})"
                    );
                }
            }
            let elapsed = start.elapsed();
            assert!(elapsed.as_secs() < 60, "oracle sweep took {elapsed:?}");
            println!("  ({} matrices, {:?})", mats.len(), elapsed);
        },
    );
}

#[test]
fn criterion_05_elementary_op_invariance() {
    criterion(
        5,
        "elementary operations preserve all congruence invariants (1e4 cases)",
        || {
            let mut rng = ChaCha8Rng::seed_from_u64(0x0f2b_94d7);
            for _ in 0..10_000 {
                let n = rng.gen_range(1..=4usize);
                let mut matrix = IntSymMatrix::zeros(n);
                for i in 0..n {
                    for j in i..n {
                        matrix.set(i, j, BigInt::from(rng.gen_range(-5i64..=5)));
                    }
                }
                let before = matrix.invariants();
                let mut current = matrix.clone();
                let steps = rng.gen_range(0..=10usize);
                for _ in 0..steps {
                    if n < 2 {
                        break;
                    }
                    let i = rng.gen_range(1..=n);
                    let j = loop {
                        let j = rng.gen_range(1..=n);
                        if j != i {
                            break j;
                        }
                    };
                    let k = rng.gen_range(-5i64..=5);
                    current = current.elementary_op(i, j, k).unwrap();
                }
                let after = current.invariants();
                assert_eq!(
                    before.determinant, after.determinant,
                    "{matrix} vs {current}"
                );
                assert_eq!(before.rank, after.rank, "{matrix} vs {current}");
                assert_eq!(
                    before.signature(),
                    after.signature(),
                    "{matrix} vs {current}"
                );
                assert_eq!(before.parity, after.parity, "{matrix} vs {current}");
            }
        },
    );
}

#[test]
fn criterion_06_raymond_fixtures() {
    criterion(
        6,
        "orbit-data classification fixtures match exactly",
        || {
            let fixtures: Vec<(SeifertOrbitData, ManifoldExpr)> = vec![
                (
                    SeifertOrbitData::new(0, OrbitSurface::Orientable, 0, 2, 0, vec![]).unwrap(),
                    ManifoldExpr::connected_sum3(vec![Summand::S2xS1]),
                ),
                (
                    SeifertOrbitData::new(0, OrbitSurface::Orientable, 0, 1, 1, vec![]).unwrap(),
                    ManifoldExpr::connected_sum3(vec![Summand::Rp2xS1]),
                ),
                (
                    SeifertOrbitData::new(0, OrbitSurface::NonOrientable, 1, 1, 0, vec![]).unwrap(),
                    ManifoldExpr::connected_sum3(vec![Summand::S2xS1Twisted]),
                ),
                (
                    SeifertOrbitData::new(
                        0,
                        OrbitSurface::Orientable,
                        0,
                        1,
                        0,
                        vec![seifert(2, 1), seifert(2, 1)],
                    )
                    .unwrap(),
                    ManifoldExpr::connected_sum3(vec![Summand::lens(2, 1), Summand::lens(2, 1)]),
                ),
                (
                    SeifertOrbitData::new(0, OrbitSurface::Orientable, 0, 1, 0, vec![]).unwrap(),
                    ManifoldExpr::sphere3(),
                ),
            ];
            for (data, expected) in fixtures {
                assert_eq!(raymond_classify(&data).unwrap(), expected);
            }
        },
    );
}

#[test]
fn criterion_07_euler_cross_check() {
    criterion(
        7,
        "Euler characteristic matches on every pipeline output",
        || {
            for config in supported_configs() {
                let out = classify_config(&config).unwrap();
                assert!(
                    euler_check(&config, &out.manifold),
                    "euler mismatch for {config:?}"
                );
            }
            for case in enumerate_arc_cases(12) {
                let config =
                    FixedPointConfig::SpherePlusTwoPoints(TwoPointData::Arc(case.arc.clone()));
                assert!(
                    euler_check(&config, &case.manifold),
                    "euler mismatch for {:?}",
                    case.family
                );
            }
        },
    );
}

#[test]
fn criterion_08_legality_suite() {
    criterion(
        8,
        "built orbit spaces are legal; seeded mutants break one condition each",
        || {
            for config in supported_configs() {
                let space = build_orbit_space(&config).unwrap();
                let report = space.validate_legality();
                assert!(
                    report.is_legal(),
                    "config {config:?} produced violations {report:?}"
                );
            }

            let single = |space: WeightedOrbitSpace, expected: ViolationKind| {
                let report = space.validate_legality();
                let kinds: Vec<ViolationKind> =
                    report.violations.iter().map(|v| v.kind()).collect();
                assert_eq!(kinds, vec![expected], "wrong violations for {report:?}");
            };

            // Adjacent determinant broken, everything else holds.
            single(
                WeightedOrbitSpace::new(
                    vec![WeightedSphere::new(1)],
                    vec![],
                    vec![WeightedArc::new(0, vec![seifert(2, 1), seifert(7, 6)], -1).unwrap()],
                    vec![],
                )
                .unwrap(),
                ViolationKind::AdjacencyDeterminant,
            );
            // Endpoint equation broken at the start only.
            single(
                WeightedOrbitSpace::new(
                    vec![WeightedSphere::new(1)],
                    vec![],
                    vec![arc(0, 3, 2, -1)],
                    vec![],
                )
                .unwrap(),
                ViolationKind::EndpointCondition,
            );
            // Weight sum broken.
            single(
                WeightedOrbitSpace::new(
                    vec![WeightedSphere::new(0)],
                    vec![],
                    vec![arc(0, 2, 1, -1)],
                    vec![],
                )
                .unwrap(),
                ViolationKind::WeightSum,
            );
            // Weighted circle with the simply-connected flag set.
            single(
                WeightedOrbitSpace::new(
                    vec![WeightedSphere::new(0)],
                    vec![],
                    vec![],
                    vec![WeightedCircle::new(vec![seifert(2, 1)]).unwrap()],
                )
                .unwrap()
                .with_simply_connected_target(true),
                ViolationKind::CircleForbidden,
            );
        },
    );
}

#[test]
fn criterion_09_chain_shape_invariant() {
    criterion(
        9,
        "chain length and tridiagonal shape hold for all supported inputs",
        || {
            for config in supported_configs() {
                let space = build_orbit_space(&config).unwrap();
                let chain = assemble_chain(&space).unwrap();
                assert_eq!(
                    chain.t(),
                    2 * chain.sphere_count() + chain.point_count() - 1,
                    "shape violated for {config:?}"
                );
                assert!(chain.intersection_matrix().is_symmetric_tridiagonal_unit());
            }
            // Multi-segment arcs assemble to longer chains with the same shape.
            let multi = WeightedOrbitSpace::new(
                vec![WeightedSphere::new(1)],
                vec![],
                vec![WeightedArc::new(0, vec![seifert(2, 1), seifert(3, 2)], -1).unwrap()],
                vec![],
            )
            .unwrap();
            let chain = assemble_chain(&multi).unwrap();
            assert_eq!(
                chain.t(),
                2 * chain.sphere_count() + chain.point_count() - 1
            );
            assert_eq!(chain.t(), 4);
            assert!(chain.intersection_matrix().is_symmetric_tridiagonal_unit());
        },
    );
}

#[test]
fn criterion_10_cli_determinism_and_robustness() {
    criterion(
        10,
        "CLI output is byte-stable and malformed input never crashes",
        || {
            cli_determinism();
            fuzz_corpus();
            cli_exit_codes();
        },
    );
}

fn run_binary(args: &[&str], stdin: Option<&[u8]>) -> (Vec<u8>, Vec<u8>, i32) {
    use std::io::Write;
    use std::process::{Command, Stdio};
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_orbitcalc"));
    cmd.args(args).stdout(Stdio::piped()).stderr(Stdio::piped());
    if stdin.is_some() {
        cmd.stdin(Stdio::piped());
    }
    let mut child = cmd.spawn().expect("binary spawns");
    if let Some(bytes) = stdin {
        child
            .stdin
            .as_mut()
            .unwrap()
            .write_all(bytes)
            .expect("stdin writes");
    }
    let out = child.wait_with_output().expect("binary runs");
    (out.stdout, out.stderr, out.status.code().unwrap_or(-1))
}

fn cli_determinism() {
    let dir = std::env::temp_dir().join("orbitcalc-acceptance");
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("z2-arc.osp");
    std::fs::write(
        &file,
        "orbitspace4 { sphere a=1\narc b'=0 seifert=(2,1) b''=-1 }\n",
    )
    .unwrap();
    let path = file.to_str().unwrap();

    let (first, _, code1) = run_binary(&["classify4", path, "--format", "json", "--trace"], None);
    let (second, _, code2) = run_binary(&["classify4", path, "--format", "json", "--trace"], None);
    assert_eq!(code1, 0);
    assert_eq!(code2, 0);
    assert_eq!(first, second, "classify4 JSON output differs between runs");
    let text = String::from_utf8(first).unwrap();
    assert!(text.contains("\"manifold\": \"CP2 # CP2\""));
    assert!(text.contains("\"extendable\": true"));
    assert!(text.contains("\"euler_check\": true"));

    let (first, _, _) = run_binary(&["enumerate", "--k-max", "6", "--format", "json"], None);
    let (second, _, _) = run_binary(&["enumerate", "--k-max", "6", "--format", "json"], None);
    assert_eq!(first, second, "enumerate JSON output differs between runs");
}

fn cli_exit_codes() {
    let dir = std::env::temp_dir().join("orbitcalc-acceptance");
    std::fs::create_dir_all(&dir).unwrap();

    let bad = dir.join("bad.osp");
    std::fs::write(&bad, "orbitspace4 { sphere a=oops }\n").unwrap();
    let (_, stderr, code) = run_binary(&["validate", bad.to_str().unwrap()], None);
    assert_eq!(code, 2);
    assert!(String::from_utf8_lossy(&stderr).contains("E_PARSE"));

    let illegal = dir.join("illegal.osp");
    std::fs::write(
        &illegal,
        "orbitspace4 { sphere a=0\narc b'=0 seifert=(2,1) b''=-1 }\n",
    )
    .unwrap();
    let (_, stderr, code) = run_binary(&["classify4", illegal.to_str().unwrap()], None);
    assert_eq!(code, 3);
    assert!(String::from_utf8_lossy(&stderr).contains("E_LEGALITY"));

    let circles = dir.join("circles.osp");
    std::fs::write(
        &circles,
        "orbitspace4 { sphere a=0\ncircle seifert=(2,1) }\n",
    )
    .unwrap();
    let (_, stderr, code) = run_binary(&["plumb", circles.to_str().unwrap()], None);
    assert_eq!(code, 4);
    assert!(String::from_utf8_lossy(&stderr).contains("E_UNSUPPORTED"));

    // RP3 # RP3 through the real binary, reading standard input.
    let (stdout, _, code) = run_binary(
        &["classify3", "-"],
        Some(b"seifert3 { b=0 eps=o g=0 hbar=1 t=0 seifert=(2,1),(2,1) }\n"),
    );
    assert_eq!(code, 0);
    assert!(String::from_utf8_lossy(&stdout).contains("manifold: RP3 # RP3"));
}

fn fuzz_corpus() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_cafe);
    let valid_seeds: Vec<&str> = vec![
        "orbitspace4 { sphere a=1\narc b'=0 seifert=(2,1) b''=-1 }",
        "orbitspace4 { sphere a=0 point b=+1 point b=-1 }",
        "seifert3 { b=0 eps=o g=0 hbar=2 t=0 }",
        "matrix { n=2 rows=0 1 / 1 0 }",
        "config { fix=s2+2pt arc=[0;(2,1);-1] }",
        "config { fix=s2+s2 omega=4 }",
    ];
    let commands = [
        CommandKind::Validate,
        CommandKind::Classify3,
        CommandKind::Classify4,
        CommandKind::Plumb,
        CommandKind::Reduce,
    ];
    let mut parsed_ok = 0usize;
    let mut diagnostics = 0usize;
    for case in 0..1000 {
        let input: Vec<u8> = match case % 4 {
            // Random bytes, frequently invalid UTF-8.
            0 => {
                let len = rng.gen_range(0..200);
                (0..len).map(|_| rng.gen::<u8>()).collect()
            }
            // Random printable ASCII with grammar-ish characters.
            1 => {
                let alphabet: &[u8] =
                    b"orbitspace4seifert3matrixconfig{}()=+-,;'/ \n\t0123456789abz#";
                let len = rng.gen_range(0..300);
                (0..len)
                    .map(|_| alphabet[rng.gen_range(0..alphabet.len())])
                    .collect()
            }
            // Mutations of valid documents: deletions and substitutions.
            2 => {
                let seed = valid_seeds[rng.gen_range(0..valid_seeds.len())]
                    .as_bytes()
                    .to_vec();
                let mut bytes = seed;
                for _ in 0..rng.gen_range(1..6) {
                    if bytes.is_empty() {
                        break;
                    }
                    let at = rng.gen_range(0..bytes.len());
                    if rng.gen_bool(0.5) {
                        bytes.remove(at);
                    } else {
                        bytes[at] = rng.gen::<u8>();
                    }
                }
                bytes
            }
            // Truncations of valid documents.
            _ => {
                let seed = valid_seeds[rng.gen_range(0..valid_seeds.len())].as_bytes();
                let cut = rng.gen_range(0..=seed.len());
                seed[..cut].to_vec()
            }
        };
        match doc::parse(&input) {
            Ok(parsed) => {
                parsed_ok += 1;
                for command in commands {
                    match execute(command, Some(&parsed), &RunOptions::default()) {
                        Ok(_) => {}
                        Err(e) => {
                            diagnostics += 1;
                            assert!(!e.code.as_str().is_empty());
                            assert!(!e.message.is_empty());
                        }
                    }
                }
            }
            Err(e) => {
                diagnostics += 1;
                assert!(e.line >= 1, "diagnostic without a position");
                assert!(!e.message.is_empty());
            }
        }
    }
    println!("  (fuzz: 1000 inputs, {parsed_ok} parsed, {diagnostics} coded diagnostics)");
}

#[test]
fn cli_documented_examples() {
    // The worked examples the command-line interface documents.
    let parsed =
        doc::parse_str("orbitspace4 { sphere a=1\narc b'=0 seifert=(2,1) b''=-1 }").unwrap();
    let out = execute(
        CommandKind::Classify4,
        Some(&parsed),
        &RunOptions::default(),
    )
    .unwrap();
    assert_eq!(out.report.manifold.as_deref(), Some("CP2 # CP2"));
    assert_eq!(out.report.extendable, Some(true));
    assert_eq!(out.report.euler_check, Some(true));

    let parsed =
        doc::parse_str("seifert3 { b=0 eps=o g=0 hbar=1 t=0 seifert=(2,1),(2,1) }").unwrap();
    let out = execute(
        CommandKind::Classify3,
        Some(&parsed),
        &RunOptions::default(),
    )
    .unwrap();
    assert_eq!(out.report.manifold.as_deref(), Some("RP3 # RP3"));

    let out = execute(
        CommandKind::Enumerate,
        None,
        &RunOptions {
            k_max: 6,
            ..Default::default()
        },
    )
    .unwrap();
    let cases = out.report.cases.unwrap();
    let families: BTreeSet<(i64, i64)> = cases.iter().map(|c| (c.b_start, c.b_end)).collect();
    assert_eq!(
        families,
        BTreeSet::from([(0, 0), (0, -1), (-1, 0), (-1, -1)])
    );
    assert_eq!(cases.len(), 12);
}
