//! End-to-end tests of the `simplex` binary: formats, determinism, the
//! exit-code contract and the verification suite plumbing.

use std::process::{Command, Output};

fn simplex(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_simplex"))
        .args(args)
        .output()
        .expect("spawn the CLI")
}

fn stdout_of(args: &[&str]) -> String {
    let out = simplex(args);
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn sample_emits_valid_csv_rows() {
    let out = stdout_of(&["sample", "--n", "3", "--count", "2", "--seed", "7"]);
    let rows: Vec<&str> = out.lines().collect();
    assert_eq!(rows.len(), 2);
    for row in rows {
        let coords: Vec<f64> = row.split(',').map(|v| v.parse().unwrap()).collect();
        assert_eq!(coords.len(), 3);
        let sum: f64 = coords.iter().sum();
        assert!((sum - 1.0).abs() < 1e-12);
    }
}

#[test]
fn identical_invocations_are_byte_identical() {
    let args = ["sample", "--n", "4", "--count", "100", "--seed", "123"];
    assert_eq!(stdout_of(&args), stdout_of(&args));
}

#[test]
fn worker_count_does_not_change_the_output() {
    let serial = stdout_of(&[
        "sample", "--n", "5", "--count", "9000", "--seed", "3", "--jobs", "1",
    ]);
    let parallel = stdout_of(&[
        "sample", "--n", "5", "--count", "9000", "--seed", "3", "--jobs", "4",
    ]);
    assert_eq!(serial, parallel);
}

#[test]
fn csv_at_full_precision_round_trips_exactly() {
    use simplex_sampling::{generate_batch, MarginalModel, SamplerMethod};

    let out = stdout_of(&["sample", "--n", "5", "--count", "40", "--seed", "11"]);
    let expected = generate_batch(
        SamplerMethod::StickBreaking,
        MarginalModel::Corrected,
        5,
        40,
        11,
        1,
    )
    .unwrap();
    for (row, point) in out.lines().zip(&expected) {
        let parsed: Vec<f64> = row.split(',').map(|v| v.parse().unwrap()).collect();
        for (a, b) in parsed.iter().zip(point.coords()) {
            assert_eq!(a.to_bits(), b.to_bits(), "row `{row}` lost precision");
        }
    }
}

#[test]
fn header_and_reduced_precision() {
    let out = stdout_of(&[
        "sample",
        "--n",
        "3",
        "--count",
        "1",
        "--seed",
        "7",
        "--precision",
        "6",
        "--header",
    ]);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("x1,x2,x3"));
    let row = lines.next().unwrap();
    for field in row.split(',') {
        let digits = field
            .chars()
            .filter(|c| c.is_ascii_digit())
            .skip_while(|&c| c == '0')
            .count();
        assert!(digits <= 7, "field `{field}` has too many digits");
        let v: f64 = field.parse().unwrap();
        assert!((0.0..=1.0).contains(&v));
    }
}

#[test]
fn paper_literal_flag_changes_the_rows_beyond_the_first_step() {
    // exponent families differ for n >= 3 ...
    let corrected = stdout_of(&["sample", "--n", "3", "--count", "5", "--seed", "2"]);
    let literal = stdout_of(&[
        "sample", "--n", "3", "--count", "5", "--seed", "2", "--paper-literal",
    ]);
    assert_ne!(corrected, literal);
    for (a, b) in corrected.lines().zip(literal.lines()) {
        // ... but the first coordinate's law coincides
        assert_eq!(a.split(',').next(), b.split(',').next());
    }

    // ... and coincide entirely at n = 2
    let corrected = stdout_of(&["sample", "--n", "2", "--count", "5", "--seed", "2"]);
    let literal = stdout_of(&[
        "sample", "--n", "2", "--count", "5", "--seed", "2", "--paper-literal",
    ]);
    assert_eq!(corrected, literal);
}

#[test]
fn jsonl_rows_are_arrays() {
    let out = stdout_of(&[
        "sample", "--n", "4", "--count", "3", "--seed", "5", "--format", "jsonl",
    ]);
    for line in out.lines() {
        assert!(line.starts_with('[') && line.ends_with(']'));
        let inner = &line[1..line.len() - 1];
        let coords: Vec<f64> = inner.split(',').map(|v| v.parse().unwrap()).collect();
        assert_eq!(coords.len(), 4);
    }
}

#[test]
fn fig1b_emits_5000_rows_deterministically() {
    let a = stdout_of(&["fig1b"]);
    let b = stdout_of(&["fig1b"]);
    assert_eq!(a, b);
    assert_eq!(a.lines().count(), 5000);
    assert!(a.lines().all(|row| row.split(',').count() == 3));
    // a different seed changes the content but not the shape
    let c = stdout_of(&["fig1b", "--seed", "1"]);
    assert_eq!(c.lines().count(), 5000);
    assert_ne!(a, c);
}

#[test]
fn bench_rows_carry_the_exact_draw_counts() {
    let out = stdout_of(&[
        "bench", "--methods", "stick", "--n-list", "2,8,64", "--batch", "64", "--reps", "5",
    ]);
    let mut lines = out.lines();
    assert_eq!(
        lines.next().unwrap(),
        "method,n,batch,wall_ms,samples_per_s,draws_per_sample,powers_per_sample"
    );
    let draws: Vec<String> = lines
        .map(|l| {
            let fields: Vec<&str> = l.split(',').collect();
            assert_eq!(fields.len(), 7);
            assert_eq!(fields[0], "stick");
            format!("{},{}", fields[5], fields[6])
        })
        .collect();
    assert_eq!(draws, ["1,0", "7,6", "63,62"]);
}

#[test]
fn bench_draw_columns_are_reproducible() {
    let args = [
        "bench", "--methods", "rejection", "--n-list", "4", "--batch", "500", "--reps", "5",
    ];
    let pick = |s: &str| -> String {
        let row = s.lines().nth(1).unwrap().to_string();
        let fields: Vec<&str> = row.split(',').collect();
        format!("{},{}", fields[5], fields[6])
    };
    assert_eq!(pick(&stdout_of(&args)), pick(&stdout_of(&args)));
}

#[test]
fn bench_covers_method_by_dimension_grid() {
    let out = stdout_of(&[
        "bench", "--methods", "stick,spacings", "--n-list", "8", "--batch", "64",
    ]);
    assert_eq!(out.lines().count(), 1 + 2);
}

#[test]
fn verification_suite_passes_for_the_default_generator() {
    let out = simplex(&["test", "--n", "3", "--samples", "20000"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    for label in [
        "x1-vs-analytic",
        "x1-vs-oracle",
        "x2-vs-oracle",
        "x3-vs-oracle",
        "pit-uniform",
        "moments",
        "overall: PASS",
    ] {
        assert!(text.contains(label), "missing `{label}` in:\n{text}");
    }
}

#[test]
fn verification_suite_rejects_the_negative_control() {
    let out = simplex(&["test", "--n", "3", "--method", "rescaled", "--samples", "12000"]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("overall: FAIL"));
    assert!(text.contains("rerun x20"));
}

#[test]
fn verification_suite_rejects_the_constant_exponent_mode() {
    let out = simplex(&[
        "test",
        "--n",
        "3",
        "--paper-literal",
        "--samples",
        "12000",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("overall: FAIL"));
}

#[test]
fn exit_code_contract() {
    // usage errors -> 2
    assert_eq!(simplex(&["sample", "--n", "1"]).status.code(), Some(2));
    assert_eq!(
        simplex(&["sample", "--n", "3", "--method", "bogus"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        simplex(&["sample", "--n", "3", "--precision", "3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        simplex(&["test", "--n", "3", "--alpha", "0.2"]).status.code(),
        Some(2)
    );
    assert_eq!(simplex(&["bench", "--methods", "stick"]).status.code(), Some(2));
    assert_eq!(simplex(&["nonsense"]).status.code(), Some(2));

    // runtime failures -> 1
    assert_eq!(
        simplex(&["sample", "--n", "40", "--method", "rejection"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        simplex(&["sample", "--n", "3", "--out", "/nonexistent/dir/out.csv"])
            .status
            .code(),
        Some(1)
    );

    // success -> 0
    assert_eq!(simplex(&["sample", "--n", "3"]).status.code(), Some(0));
}
