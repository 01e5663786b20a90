use std::path::PathBuf;
use std::process::{Command, Output};

use recdet::hessenberg::MatrixJson;
use recdet::{det_hessenberg_fast, VerificationReport};

fn specs() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../specs")
}

fn spec(name: &str) -> String {
    specs().join(name).to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_recdet"))
        .args(args)
        .env("RECDET_COLOR", "0")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

#[test]
fn eval_examples() {
    let o = run(&["eval", &spec("fibonacci.rec"), "--n", "7"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "1: 1\n2: 1\n3: 2\n4: 3\n5: 5\n6: 8\n7: 13\n");

    let o = run(&["eval", &spec("fibonacci.rec"), "--n", "1"]);
    assert_eq!(stdout(&o), "1: 1\n");

    let o = run(&["eval", &spec("ode.rec"), "--n", "6"]);
    assert!(stdout(&o).ends_with("6: -1/10\n"), "{}", stdout(&o));

    let o = run(&["--format", "json", "eval", &spec("ode.rec"), "--n", "4"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["terms"], serde_json::json!(["1", "0", "0", "-1/6"]));

    let o = run(&["--format", "latex", "eval", &spec("legendre.rec"), "--n", "3"]);
    assert_eq!(stdout(&o).lines().nth(2).unwrap(), r"3: \frac{3}{2} x^{2} - \frac{1}{2}");
}

#[test]
fn matrix_examples() {
    let o = run(&["matrix", &spec("naturals.rec"), "--k", "3", "--format", "json"]);
    assert_eq!(code(&o), 0);
    assert_eq!(
        stdout(&o),
        "{\"size\":3,\"ring\":\"rational\",\"entries\":[[\"1\",\"1\",\"1\"],[\"-1\",\"1\",\"0\"],[\"0\",\"-1\",\"1\"]]}\n"
    );

    let o = run(&["matrix", &spec("naturals.rec"), "--k", "1", "--format", "json"]);
    assert_eq!(stdout(&o), "{\"size\":1,\"ring\":\"rational\",\"entries\":[[\"1\"]]}\n");

    let o = run(&["matrix", &spec("fibnum.rec"), "--k", "4", "--format", "latex"]);
    assert_eq!(
        stdout(&o),
        "\\left|\\begin{array}{rrrr}\n1 & 1 & 0 & 0 \\\\\n-1 & 1 & 1 & 0 \\\\\n0 & -1 & 1 & 1 \\\\\n0 & 0 & -1 & 1\n\\end{array}\\right|\n"
    );

    let o = run(&["matrix", &spec("fibnum.rec"), "--k", "2"]);
    assert_eq!(stdout(&o), " 1  1\n-1  1\n");
}

#[test]
fn matrix_json_round_trips_to_the_same_determinant() {
    for (file, k) in [("hermite.rec", 6), ("ode.rec", 9), ("laguerre.rec", 5)] {
        let o = run(&["matrix", &spec(file), "--k", &k.to_string(), "--format", "json"]);
        let m = MatrixJson::parse(&stdout(&o)).unwrap().to_matrix().unwrap();
        let det = det_hessenberg_fast(&m).unwrap();
        let terms = stdout(&run(&["eval", &spec(file), "--n", &(k + 1).to_string()]));
        let idx = if file == "ode.rec" { k } else { k + 1 };
        let want = terms.lines().nth(idx - 1).unwrap().split_once(": ").unwrap().1.to_string();
        assert_eq!(det.to_string(), want, "{file}");
    }
}

#[test]
fn ring_override() {
    let o = run(&["--ring", "poly", "matrix", &spec("naturals.rec"), "--k", "2", "--format", "json"]);
    assert!(stdout(&o).contains("\"ring\":\"poly\""));
    let o = run(&["--ring", "rational", "eval", &spec("hermite.rec"), "--n", "2"]);
    assert_eq!(code(&o), 2);
    let o = run(&["--ring", "complex", "eval", &spec("hermite.rec"), "--n", "2"]);
    assert_eq!(code(&o), 1);
}

#[test]
fn verify_examples() {
    let o = run(&["verify", &spec("hermite.rec"), "--max-n", "10"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).contains("PASS"));
    assert!(!stdout(&o).contains('\x1b'));

    let o = run(&["verify", &spec("legendre.rec"), "--max-n", "12", "--method", "bareiss"]);
    assert_eq!(code(&o), 0);

    let o = run(&["verify", &spec("fibonacci.rec"), "--max-n", "8", "--method", "laplace"]);
    assert_eq!(code(&o), 0);

    let o = run(&["verify", &spec("negative/corrupted.rec"), "--max-n", "6"]);
    assert_eq!(code(&o), 3);
    assert!(stdout(&o).contains("first mismatch at k = 3"), "{}", stdout(&o));

    let o = run(&["--format", "json", "verify", &spec("negative/corrupted.rec"), "--max-n", "6"]);
    assert_eq!(code(&o), 3);
    let report: VerificationReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(!report.pass);
    assert_eq!(report.first_failure(), Some(3));
    assert_eq!(report.checks.len(), 6);
}

#[test]
fn family_examples() {
    let o = run(&["family", "chebyshev-t", "--n", "3"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).ends_with("3: 4*x^3 - 3*x\n"));

    let o = run(&["family", "naturals", "--n", "5"]);
    assert_eq!(stdout(&o), "1: 1\n2: 2\n3: 3\n4: 4\n5: 5\n");

    let o = run(&["family", "continuant", "--params", "1,2,3", "--n", "3"]);
    assert!(stdout(&o).ends_with("3: 10\n"));

    let o = run(&["family", "horner", "--params", "1/2, x, -3", "--n", "3", "--no-check"]);
    assert_eq!(stdout(&o).lines().last().unwrap(), "3: 3/2*x^2 - 3");

    let o = run(&["--format", "json", "family", "hermite", "--n", "2"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v, serde_json::json!({"family": "hermite", "values": ["2*x", "4*x^2 - 2"]}));
}

#[test]
fn family_errors() {
    let o = run(&["family", "fibonaci", "--n", "3"]);
    assert_eq!(code(&o), 1);
    for name in ["naturals", "chebyshev-t", "ode-example", "continuant"] {
        assert!(stderr(&o).contains(name), "{}", stderr(&o));
    }
    assert_eq!(code(&run(&["family", "continuant", "--n", "3"])), 1);
    assert_eq!(code(&run(&["family", "continuant", "--params", "1,2", "--n", "3"])), 1);
    assert_eq!(code(&run(&["family", "hermite", "--params", "1", "--n", "3"])), 1);
    assert_eq!(code(&run(&["family", "hermite", "--n", "0"])), 1);
}

fn without_timing(csv: &str) -> Vec<String> {
    csv.lines()
        .map(|l| {
            let cells: Vec<&str> = l.split(',').collect();
            format!("{},{},{},{}", cells[0], cells[1], cells[2], cells[4])
        })
        .collect()
}

#[test]
fn bench_records() {
    let o = run(&["bench", "--sizes", "4", "--methods", "fast,bareiss,laplace"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert_eq!(out.lines().next().unwrap(), "method,size,ring_ops,ms,max_bits");
    assert_eq!(out.lines().count(), 4);
    let err = stderr(&o);
    let dets: Vec<&str> = err.lines().map(|l| l.split_once(": ").unwrap().1).collect();
    assert_eq!(dets.len(), 3);
    assert!(dets.iter().all(|d| *d == dets[0]));

    let o = run(&["bench", "--sizes", "10", "--methods", "laplace"]);
    assert_eq!(code(&o), 1);
    assert!(stderr(&o).contains("refused"));

    let o = run(&["bench", "--sizes", "10,4", "--methods", "laplace,fast"]);
    assert_eq!(code(&o), 1);
    assert_eq!(stdout(&o).lines().count(), 4);
}

#[test]
fn bench_is_deterministic_and_quadratic() {
    let args = ["bench", "--sizes", "50,100,200", "--methods", "fast", "--seed", "7"];
    let a = stdout(&run(&args));
    let b = stdout(&run(&args));
    assert_eq!(without_timing(&a), without_timing(&b));
    let ops: Vec<f64> = a.lines().skip(1).map(|l| l.split(',').nth(2).unwrap().parse().unwrap()).collect();
    for w in ops.windows(2) {
        let ratio = w[1] / w[0];
        assert!((3.5..=4.5).contains(&ratio), "{ratio}");
    }
    let other = stdout(&run(&["bench", "--sizes", "6", "--methods", "fast", "--seed", "8"]));
    let same = stdout(&run(&["bench", "--sizes", "6", "--methods", "fast", "--seed", "7"]));
    assert_ne!(without_timing(&other), without_timing(&same));
}

#[test]
fn exit_codes() {
    assert_eq!(code(&run(&["eval", &spec("negative/bad_syntax.rec"), "--n", "3"])), 1);
    assert_eq!(code(&run(&["eval", &spec("negative/below_validity.rec"), "--n", "4"])), 2);
    assert_eq!(code(&run(&["eval", &spec("negative/below_validity.rec"), "--n", "2"])), 0);
    assert_eq!(code(&run(&["verify", &spec("negative/below_validity.rec"), "--max-n", "4"])), 2);
    assert_eq!(code(&run(&["eval", &spec("missing.rec"), "--n", "3"])), 1);
    assert_eq!(code(&run(&["eval", &spec("fibonacci.rec")])), 1);
    assert_eq!(code(&run(&["verify", &spec("fibonacci.rec"), "--max-n", "3", "--method", "gauss"])), 1);
    assert_eq!(code(&run(&["verify", &spec("fibonacci.rec"), "--max-n", "9", "--method", "laplace"])), 1);
    assert_eq!(code(&run(&["frobnicate"])), 1);
    assert_eq!(code(&run(&["--help"])), 0);
    let o = run(&["eval", &spec("negative/bad_syntax.rec"), "--n", "3"]);
    assert!(stderr(&o).contains("line 5, column 21"), "{}", stderr(&o));
}
