use std::process::Command;

use codecert::cli::{dispatch, RunReport, EXIT_FAIL, EXIT_MALFORMED, EXIT_PASS, EXIT_USAGE};
use codecert::f2core::io;

fn run(args: &str) -> (RunReport, i32) {
    dispatch(std::iter::once("codecert").chain(args.split_whitespace()))
}

#[test]
fn johnson_bound_report() {
    let (r, code) = run("lp delsarte --scheme johnson --n 24 --w 12 --d 8");
    assert_eq!(code, EXIT_PASS);
    assert_eq!(r.get("optimum"), Some("2576"));
    assert_eq!(r.get("dual_objective"), Some("2576"));
    assert_eq!(r.get("a_14"), Some("0"));
    assert!(r.render().contains("\noptimum=2576\n"));
    let (r, _) = run("lp delsarte --scheme johnson --n 23 --w 11 --d 8");
    assert_eq!(r.get("optimum"), Some("58121/41"));
    assert_eq!(r.get("floor"), Some("1417"));
    assert_eq!(
        r.get("optimum_decimal"),
        Some("1417.585365853658536585365853658537")
    );
}

#[test]
fn side_constraints_and_objectives() {
    let base = "lp delsarte --scheme hamming --n 20 --d 8 --divisible-by 4 --bound total=256";
    let (r, code) = run(&format!("{base} --objective a_12"));
    assert_eq!(code, EXIT_PASS);
    assert_eq!(r.get("optimum"), Some("120"));
    let (r, _) = run(&format!("{base} --objective a_12 --minimize"));
    assert_eq!(r.get("optimum"), Some("120"));
    let (r, _) =
        run("lp delsarte --scheme hamming --n 20 --d 8 --force-zero 10,14,18 --bound a_20>=1/128");
    assert_eq!(r.get("input.constraints"), None);
    assert!(r
        .inputs
        .iter()
        .any(|(k, v)| k == "constraints" && v.contains("a_20>=1/128")));
    let (r, code) = run("lp delsarte --scheme hamming --n 12 --d 4 --bound total>=5000");
    assert_eq!(code, EXIT_FAIL);
    assert_eq!(r.get("status"), Some("infeasible"));
}

#[test]
fn forbidden_distance_report() {
    let (r, code) = run("lp forbidden --scheme johnson --n 24 --w 12 --d 8 --target 2576");
    assert_eq!(code, EXIT_PASS);
    assert_eq!(r.get("forbidden"), Some("10,14,18,20,22"));
    let (r, code) = run("lp forbidden --scheme hamming --n 20 --d 8 --divisible-by 4 --target 256");
    assert_eq!(code, EXIT_PASS);
    assert_eq!(r.get("forbidden"), Some("20"));
    assert_eq!(r.get("proof.a_20"), Some("511/2"));
    let (_, code) = run("lp forbidden --scheme johnson --n 24 --w 12 --d 8 --target 3000");
    assert_eq!(code, EXIT_FAIL);
}

#[test]
fn code_files() {
    let dir = tempfile::tempdir().unwrap();
    let p = |name: &str| dir.path().join(name).display().to_string();
    std::fs::write(p("one.code"), "n=7\n1010101\n").unwrap();
    let (r, code) = run(&format!("code stats {}", p("one.code")));
    assert_eq!(code, EXIT_PASS);
    assert_eq!(r.get("size"), Some("1"));
    assert_eq!(r.get("min_distance"), Some("inf"));
    assert!(r.table[0].contains('∞'));

    let (r, code) = run(&format!("golay build --shorten 4 --out {}", p("b.code")));
    assert_eq!(code, EXIT_PASS);
    assert_eq!(r.get("A_16"), Some("5"));
    let b = io::read_code(p("b.code")).unwrap();
    assert_eq!(b.size(), 256);
    let (r, _) = run(&format!("code stats {}", p("b.code")));
    assert_eq!(r.get("a_8"), Some("130"));
    assert_eq!(r.get("self_orthogonal"), Some("true"));

    let (r, code) = run(&format!("cw build 22 8 11 --out {}", p("cw.code")));
    assert_eq!(code, EXIT_PASS);
    assert_eq!(r.get("size"), Some("672"));
    assert_eq!(io::read_code(p("cw.code")).unwrap().size(), 672);

    let (r, _) = run(&format!("equiv {} {}", p("b.code"), p("b.code")));
    assert_eq!(r.get("verdict"), Some("equivalent"));
    assert_eq!(r.get("digest_a"), r.get("digest_b"));
    let (r, _) = run(&format!("equiv {} {}", p("b.code"), p("cw.code")));
    assert_eq!(r.get("verdict"), Some("inequivalent"));

    let (r, code) = run(&format!(
        "classify --list {} {} {}",
        p("b.code"),
        p("cw.code"),
        p("b.code")
    ));
    assert_eq!(code, EXIT_PASS);
    assert_eq!(r.get("classes"), Some("2"));
    assert_eq!(r.get("class.01.count"), Some("2"));
}

#[test]
fn exit_statuses() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.code");
    std::fs::write(&bad, "n=4\n0101\n011\n").unwrap();
    let (r, code) = run(&format!("code stats {}", bad.display()));
    assert_eq!(code, EXIT_MALFORMED);
    assert!(r.get("error").unwrap().contains("line 3"));
    let (_, code) = run("code stats /nonexistent/file.code");
    assert_eq!(code, EXIT_MALFORMED);
    assert_eq!(run("frobnicate").1, EXIT_USAGE);
    assert_eq!(run("lp delsarte --scheme hamming --n 20").1, EXIT_USAGE);
    assert_eq!(
        run("lp delsarte --scheme hamming --n 20 --d 8 --bound a_3~1").1,
        EXIT_USAGE
    );
    assert_eq!(run("--help").1, EXIT_PASS);
    assert_eq!(run("cw build 20 8 8").1, EXIT_FAIL);
}

const PROBLEM: &str = "PROBLEM
orbit y b=1 slot=nn
matrix F0
block m dim 2
1 1 1
2 2 1
matrix y
block m dim 2
1 2 -1
block nn dim 1
1 1 -1
";

#[test]
fn certificate_verification() {
    let dir = tempfile::tempdir().unwrap();
    let problem = dir.path().join("p.txt");
    let good = dir.path().join("good.txt");
    let skew = dir.path().join("skew.txt");
    let broken = dir.path().join("broken.txt");
    std::fs::write(&problem, PROBLEM).unwrap();
    std::fs::write(
        &good,
        "DUAL\nblock m dim 2\n1 1 0.5\n1 2 -0.5\n2 2 0.5\nblock nn dim 1\n1 1 0.25\n",
    )
    .unwrap();
    std::fs::write(&skew, "DUAL\nblock m dim 2\n1 1 0.5\n1 2 -0.75\n2 2 0.5\n").unwrap();
    std::fs::write(&broken, "DUAL\nblock m dim 2\n1 1 x\n").unwrap();
    let cmd = |dual: &std::path::Path, target: &str| {
        format!(
            "cert verify --problem {} --dual {} --target {target} --group 4",
            problem.display(),
            dual.display()
        )
    };
    let (r, code) = run(&cmd(&good, "1/2"));
    assert_eq!(code, EXIT_PASS);
    assert_eq!(r.get("orbit.y.epsilon"), Some("-1/4"));
    assert_eq!(r.get("orbit.y.x"), Some("1/4"));
    assert_eq!(r.get("orbit.y.c_signed"), Some("1/4"));
    assert_eq!(r.get("orbit.y.c_conservative"), Some("3/4"));
    assert_eq!(r.get("threshold"), Some("1/4"));
    assert_eq!(r.get("forbidden"), Some(""));
    let (r, code) = run(&cmd(&good, "7/8"));
    assert_eq!(code, EXIT_PASS);
    assert_eq!(r.get("forbidden"), Some("y"));
    assert_eq!(r.get("disagreements"), Some("y"));
    let (r, code) = run(&cmd(&skew, "1"));
    assert_eq!(code, EXIT_FAIL);
    assert_eq!(r.get("check.psd"), Some("false"));
    assert_eq!(run(&cmd(&broken, "1")).1, EXIT_MALFORMED);
    let (_, code) = run(&format!(
        "cert verify --problem {} --dual {} --target 1 --group 0",
        problem.display(),
        good.display()
    ));
    assert_eq!(code, EXIT_USAGE);
}

#[test]
fn output_is_deterministic() {
    let args = "lp forbidden --scheme johnson --n 24 --w 12 --d 8 --target 2576";
    assert_eq!(run(args).0.render(), run(args).0.render());
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_codecert");
    let out = Command::new(bin)
        .args([
            "lp", "delsarte", "--scheme", "johnson", "--n", "24", "--w", "12", "--d", "8",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("optimum=2576"));
    let out = Command::new(bin).arg("nope").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(bin)
        .args(["golay", "build", "--shorten", "9"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}
