use std::fs;

use tzstream_cli::{dispatch, EXIT_DOMAIN, EXIT_OK, EXIT_USAGE};

fn status(args: &[&str]) -> i32 {
    dispatch(args.iter().copied()).status
}

#[test]
fn documented_examples() {
    let out = dispatch(["coeffs", "--expr", "1/sqrt(1-x)", "--order", "3"]);
    assert_eq!(out.stdout, "1, 1/2, 3/8, 5/16\n");
    let out = dispatch(["lowerbound", "--gf", "g_half", "--t", "3", "--I", "3"]);
    assert!(out.stdout.contains("rank=4"));
    let out = dispatch(["verify", "catalan", "--dmax", "12"]);
    assert_eq!(out.status, EXIT_OK);
    assert_eq!(out.stdout.matches("ok=true").count(), 13);
}

#[test]
fn expression_and_catalog_agree() {
    let a = dispatch(["coeffs", "--gf", "g_catalan", "--order", "20"]);
    let b = dispatch(["coeffs", "--expr", "(1-sqrt(1-4*x))/(2*x)", "--order", "20"]);
    assert_eq!(a, b);
}

#[test]
fn help_and_version() {
    let out = dispatch(["--help"]);
    assert_eq!(out.status, EXIT_OK);
    assert!(out.stdout.contains("sqrt"));
    assert_eq!(status(&["--version"]), EXIT_OK);
    assert_eq!(status(&["verify", "--help"]), EXIT_OK);
}

#[test]
fn usage_errors() {
    for args in [
        "",
        "frobnicate",
        "coeffs --order 3",
        "coeffs --gf g_half --expr x --order 3",
        "coeffs --gf g_half --order -1",
        "coeffs --gf g_half --order 999999999999",
        "coeffs --gf g_nope --order 3",
        "coeffs --gf g_lm(1, --order 3",
        "coeffs --expr 1/(1-x --order 3",
        "verify junod --b 1/0",
        "stream run --num 1 --den 1,-1",
        "stream run --num 1,a --den 1 --generator ones --length 2",
        "stream run --generator ones --length 2",
        "stream run --gf g_one --generator ones",
        "stream run --gf g_one --generator zigzag --length 2",
        "continual demo --length 3",
    ] {
        let out = dispatch(args.split_whitespace());
        assert_eq!(out.status, EXIT_USAGE, "{args:?}: {}", out.stderr);
        assert!(out.stdout.is_empty());
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn domain_errors() {
    for args in [
        "coeffs --gf g_lm(2,1) --order 3",
        "coeffs --expr 1/x --order 3",
        "coeffs --expr sqrt(x) --order 3",
        "coeffs --expr sqrt(2-x) --order 3",
        "hankel det --gf g_half --rows 2 --cols 3",
        "verify junod --b 2 --c 2",
        "verify corank --lambda 1/2 --mu 1",
        "stream run --num 1 --den 0,1 --generator ones --length 2",
        "continual demo --length 3 --approx-degree 0",
        "stream run --gf g_one --input /nonexistent/z.txt",
    ] {
        let out = dispatch(args.split_whitespace());
        assert_eq!(out.status, EXIT_DOMAIN, "{args:?}: {}", out.stderr);
        assert!(out.stderr.starts_with("error: "), "{args:?}");
    }
}

#[test]
fn empty_expression_is_usage() {
    let out = dispatch(["coeffs", "--expr", "", "--order", "3"]);
    assert_eq!(out.status, EXIT_USAGE);
}

#[test]
fn input_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("z.txt");
    fs::write(&path, "# two counts\n1\n1/2 # half\n\n-3\n").unwrap();
    let p = path.to_str().unwrap();

    let out = dispatch(["stream", "run", "--gf", "g_one", "--input", p]);
    assert_eq!(out.stdout, "1\n3/2\n-3/2\nmax_buffer=3\n");
    let out = dispatch(["stream", "run", "--num", "1", "--den", "1,-1", "--input", p]);
    assert_eq!(out.stdout, "1\n3/2\n-3/2\nmax_buffer=1\n");
    assert_eq!(
        status(&["stream", "run", "--gf", "g_one", "--input", p, "--length", "4"]),
        EXIT_DOMAIN
    );

    let out = dispatch([
        "continual",
        "demo",
        "--length",
        "3",
        "--approx-degree",
        "1",
        "--input",
        p,
    ]);
    assert_eq!(out.status, EXIT_OK);
    assert!(out.stdout.ends_with("max_buffer=2\ncoeff_error=1/8\n"));
    assert_eq!(
        status(&[
            "continual",
            "demo",
            "--length",
            "5",
            "--approx-degree",
            "1",
            "--input",
            p
        ]),
        EXIT_DOMAIN
    );
}

#[test]
fn json_is_one_object() {
    let out = dispatch(["--json", "verify", "catalan", "--dmax", "3"]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["lines"].as_array().unwrap().len(), 4);
    let out = dispatch(["coeffs", "--expr", "1/(1-x/2)", "--order", "2", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["coeffs"], serde_json::json!(["1", "1/2", "1/4"]));
}

#[test]
fn garbage_never_panics() {
    let words: Vec<&str> = "coeffs stream run hankel det rank degree lowerbound pade verify catalan junod comp continual demo --gf --expr --order --t --I --rows --cols --degree --dmax --b --c --lambda --mu --num --den --length --generator --json g_half x 0 1 -1 3 1/0 sqrt( (( 1/x ones junod_g(2,2) g_lm(1,1) 7/3"
        .split_whitespace()
        .chain([""])
        .collect();
    // deterministic walk over short argument lists
    let mut state: u64 = 0x9e37_79b9_7f4a_7c15;
    for _ in 0..3000 {
        let mut args = Vec::new();
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        let len = (state % 7) as usize;
        for k in 0..len {
            let idx = (state.rotate_left(9 * k as u32) % words.len() as u64) as usize;
            args.push(words[idx]);
        }
        let out = dispatch(args.iter().copied());
        assert!(
            [EXIT_OK, EXIT_DOMAIN, EXIT_USAGE].contains(&out.status),
            "{args:?}"
        );
        assert!(!out.stderr.contains("internal error"), "{args:?}");
    }
}
