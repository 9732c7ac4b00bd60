use std::path::PathBuf;

use leavitt_kmod::cli::{parse_records, run};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("quivers")
        .join(name)
        .display()
        .to_string()
}

fn lkmod(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("lkmod").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn kmod_rose_two_petals_vanishes() {
    let (code, out, _) = lkmod(&["kmod", &fixture("rose2.q"), "--mod", "8"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("hypothesis: k algebraically closed, l != char(k)\n"));
    let lines: Vec<&str> = out.lines().skip(1).collect();
    assert_eq!(lines.len(), 10);
    assert!(lines.iter().all(|l| l.ends_with("= 0")));
    assert_eq!(lines[0], "K_{-2}(L_Q; Z/8) = 0");
}

#[test]
fn kmod_rose_one_petal() {
    let (_, out, _) = lkmod(&["kmod", &fixture("rose1.q"), "--mod", "9"]);
    for n in -2..=7 {
        let expected = if n >= 0 { "Z/9" } else { "0" };
        assert!(
            out.contains(&format!("K_{{{n}}}(L_Q; Z/9) = {expected}\n")),
            "{out}"
        );
    }
}

#[test]
fn kmod_jacobson() {
    let (_, out, _) = lkmod(&[
        "kmod",
        &fixture("jacobson2.q"),
        "--mod",
        "5",
        "--from",
        "0",
        "--to",
        "3",
    ]);
    assert_eq!(
        out.lines().skip(1).collect::<Vec<_>>(),
        [
            "K_{0}(L_Q; Z/5) = Z/5",
            "K_{1}(L_Q; Z/5) = 0",
            "K_{2}(L_Q; Z/5) = Z/5",
            "K_{3}(L_Q; Z/5) = 0"
        ]
    );
}

#[test]
fn analyze_rose_three_petals() {
    let (code, out, _) = lkmod(&["analyze", &fixture("rose3.q"), "--primes", "5,2"]);
    assert_eq!(code, 0);
    assert!(out.contains("determinant of (0; id) - I_Q^t: -2"));
    assert!(out.contains("5^1: K_n(L_Q) uniquely 5^1-divisible for n >= 0"));
    assert!(out.contains("2^1: for every even and every odd n >= 0"));
    let (_, out, _) = lkmod(&["analyze", &fixture("rose1.q"), "--primes", "3"]);
    assert!(out.contains("3^1: for every even and every odd n >= 0"));
}

#[test]
fn algebra_normal_forms() {
    let eval = |file: &str, expr: &str| lkmod(&["algebra", &fixture(file), "--eval", expr]).1;
    assert_eq!(eval("rose2.q", "x* . x").lines().next(), Some("1"));
    assert_eq!(eval("rose2.q", "x . x*").lines().next(), Some("1 - y y*"));
    assert_eq!(
        eval("toeplitz.q", "(a* + b*).(a + b)").lines().next(),
        Some("1")
    );
    assert_eq!(
        eval("rose2.q", "x + y*"),
        "y* + x\ndegree -1: y*\ndegree 1: x\n"
    );
}

#[test]
fn filtration_tables() {
    let (code, out, _) = lkmod(&[
        "filtration",
        &fixture("toeplitz.q"),
        "--level",
        "2",
        "--format",
        "records",
    ]);
    assert_eq!(code, 0);
    let r = parse_records(&out).unwrap();
    assert_eq!(r.get("blocks"), Some("4"));
    assert_eq!(r.get("sum_of_squares"), Some("4"));
    assert_eq!(r.get("symbolic_dimension"), Some("4"));
    for key in [
        "dimension_match",
        "inclusion_match",
        "phi_match",
        "stabilization",
    ] {
        assert_eq!(r.get(key), Some("true"), "{key}");
    }
    let (_, out, _) = lkmod(&[
        "filtration",
        &fixture("rose3.q"),
        "--level",
        "1",
        "--format",
        "records",
    ]);
    let r = parse_records(&out).unwrap();
    assert_eq!(
        (
            r.get("blocks"),
            r.get("block(1,w)"),
            r.get("symbolic_dimension")
        ),
        (Some("1"), Some("3"), Some("9"))
    );
    let (_, out, _) = lkmod(&[
        "filtration",
        &fixture("jacobson1.q"),
        "--level",
        "0",
        "--format",
        "records",
    ]);
    let r = parse_records(&out).unwrap();
    assert_eq!(
        (r.get("blocks"), r.get("symbolic_dimension")),
        (Some("2"), Some("2"))
    );
}

#[test]
fn split_verdicts() {
    for (n, m) in [("6", "4"), ("8", "8"), ("15", "8")] {
        let (code, out, _) = lkmod(&["split", "--n", n, "--mod", m]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().last(), Some("EQUAL"), "n={n} m={m}");
    }
}

#[test]
fn exit_codes_and_clean_stdout() {
    let cases: [(&[&str], i32); 7] = [
        (&["kmod", "/nonexistent.q", "--mod", "2"], 1),
        (&["algebra", &fixture("rose2.q"), "--eval", "x + "], 1),
        (&["frobnicate"], 1),
        (&["kmod", &fixture("rose2.q"), "--mod", "1"], 3),
        (&["analyze", &fixture("rose2.q"), "--primes", "4"], 3),
        (&["split", "--n", "1", "--mod", "4"], 1),
        (&["kmod", &fixture("rose2.q"), "--mod", "x"], 3),
    ];
    for (args, expected) in cases {
        let (code, out, err) = lkmod(args);
        assert_eq!(code, expected, "{args:?}: {err}");
        assert!(out.is_empty(), "{args:?} wrote to stdout");
        assert!(!err.is_empty());
    }
    let dir = std::env::temp_dir().join(format!("lkmod-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("source.q");
    std::fs::write(&path, "vertices u v\narrow a u v\narrow b v v\n").unwrap();
    let p = path.display().to_string();
    for args in [
        &["kmod", p.as_str(), "--mod", "2"][..],
        &["filtration", p.as_str(), "--level", "1"][..],
    ] {
        let (code, out, err) = lkmod(args);
        assert_eq!(code, 2, "{err}");
        assert!(out.is_empty());
    }
    let (code, out, _) = lkmod(&["algebra", &p, "--eval", "a a*"]);
    assert_eq!((code, out.lines().next()), (0, Some("e(u)")));
}

#[test]
fn output_is_deterministic_and_records_round_trip() {
    let args = [
        "kmod",
        &fixture("jacobson3.q"),
        "--mod",
        "2^3",
        "--format",
        "records",
    ];
    let first = lkmod(&args).1;
    assert_eq!(first, lkmod(&args).1);
    let r = parse_records(&first).unwrap();
    assert_eq!(r.get("K_{4}"), Some("Z/8"));
    assert_eq!(leavitt_kmod::cli::render_records(&r), first);
    let (_, text, _) = lkmod(&["kmod", &fixture("rose2.q"), "--mod", "6"]);
    assert!(text.contains("warning: modulus 6 is not a prime power"));
}
