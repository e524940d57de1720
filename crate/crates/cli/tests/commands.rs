use std::io::Write;
use std::process::{Command, Output, Stdio};

fn partmat(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_partmat"))
        .args(args)
        .env_remove("PARTMAT_MAX_N")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

#[test]
fn enumerate_ndpm_csv() {
    let out = partmat(
        &[
            "enumerate",
            "--family",
            "ndpm",
            "--n",
            "3",
            "--format",
            "csv",
        ],
        None,
    );
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let mut lines = text.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    let blk = header.iter().position(|h| *h == "blk").unwrap();
    // the matrix column is quoted and holds commas, so read fields from the right
    let values: Vec<String> = lines
        .map(|l| {
            let rest = l.rsplit_once('"').unwrap().1;
            rest.split(',').nth(blk).unwrap().to_string()
        })
        .collect();
    assert_eq!(values, ["1", "1", "2", "2", "3"]);
}

#[test]
fn enumerate_small_families() {
    let out = partmat(&["enumerate", "--family", "motzkin", "--n", "1"], None);
    assert_eq!(stdout(&out), "{\"word\":\"L\"}\n");
    let out = partmat(
        &[
            "enumerate",
            "--family",
            "ippm",
            "--n",
            "4",
            "--format",
            "json",
        ],
        None,
    );
    assert_eq!(stdout(&out).lines().count(), 10);
    let out = partmat(
        &["enumerate", "--family", "pm", "--n", "5", "--limit", "3"],
        None,
    );
    assert_eq!(stdout(&out).lines().count(), 3);
}

#[test]
fn counts() {
    for (family, n, expected) in [
        ("pm", "7", "5040"),
        ("fm", "6", "217"),
        ("ndippm", "6", "51"),
    ] {
        let out = partmat(&["count", "--family", family, "--n", n], None);
        assert_eq!(stdout(&out).trim(), expected, "{family}");
    }
    let out = partmat(
        &[
            "count",
            "--family",
            "pm",
            "--n",
            "6",
            "--strategy",
            "parallel",
        ],
        None,
    );
    assert_eq!(stdout(&out).trim(), "720");
    let out = partmat(
        &[
            "count",
            "--family",
            "ippm",
            "--n",
            "5",
            "--strategy",
            "doubling",
        ],
        None,
    );
    let filter = partmat(
        &[
            "count",
            "--family",
            "ippm",
            "--n",
            "5",
            "--strategy",
            "filter",
        ],
        None,
    );
    assert_eq!(stdout(&out), stdout(&filter));
}

#[test]
fn polynomials() {
    let cases = [
        ("s", "4", r#"{"var":"q","coeffs":["15","7","2"]}"#),
        ("eulerian", "2", r#"{"var":"x","coeffs":["1","1"]}"#),
        ("dist-rhs", "1", r#"{"var":"z","coeffs":["0","1"]}"#),
        ("v-dist", "3", r#"{"var":"z","coeffs":["0","0","3","1"]}"#),
    ];
    for (name, n, expected) in cases {
        let out = partmat(&["poly", "--name", name, "--n", n], None);
        assert_eq!(stdout(&out).trim(), expected, "{name}");
    }
}

#[test]
fn apply_maps() {
    let out = partmat(
        &["apply", "--map", "eta", "--input", "-"],
        Some("({1,2,3})\n"),
    );
    assert_eq!(stdout(&out).trim(), r#"{"e":[0,0,0]}"#);
    let out = partmat(&["apply", "--map", "phi"], Some("({1},{2,3};{4})"));
    assert_eq!(stdout(&out).trim(), r#"{"word":"ULLD"}"#);
    let out = partmat(&["apply", "--map", "phi-inv"], Some(r#"{"word":"ULLD"}"#));
    let back = partmat(&["apply", "--map", "phi"], Some(&stdout(&out)));
    assert_eq!(stdout(&back).trim(), r#"{"word":"ULLD"}"#);
    let out = partmat(&["apply", "--map", "double"], Some("({1},{2};{3})"));
    let images: Vec<serde_json::Value> = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(images.len(), 4);
    let out = partmat(&["apply", "--map", "parity-append"], Some("(0,1,2)"));
    assert_eq!(stdout(&out).trim(), r#"{"e":[0,1,2,2]}"#);
}

#[test]
fn theta_fixes_improper_matrices_byte_for_byte() {
    let listing = stdout(&partmat(
        &["enumerate", "--family", "ippm", "--n", "4"],
        None,
    ));
    let out = partmat(&["apply", "--map", "theta"], Some(&listing));
    assert_eq!(stdout(&out), listing);
}

#[test]
fn exit_codes() {
    let out = partmat(&["apply", "--map", "phi"], Some("({1},{2};{3})"));
    assert_eq!(code(&out), 4, "phi needs an improper matrix");
    let out = partmat(
        &["apply", "--map", "theta"],
        Some(r#"{"n":2,"dim":1,"cells":[]}"#),
    );
    assert_eq!(code(&out), 3);
    let out = partmat(&["apply", "--map", "theta"], Some(r#"{"word":"UD"}"#));
    assert_eq!(code(&out), 4);
    let out = partmat(&["count", "--family", "nope", "--n", "3"], None);
    assert_eq!(code(&out), 2);
    let out = partmat(&["poly", "--name", "nope", "--n", "3"], None);
    assert_eq!(code(&out), 2);
    let out = partmat(&["verify", "--check", "nope"], None);
    assert_eq!(code(&out), 2);
}

#[test]
fn series_reports() {
    let out = partmat(
        &[
            "series", "--name", "ndpm-gf", "--order", "5", "--format", "text",
        ],
        None,
    );
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("t^3: 2x+2x²+x³"));
    assert!(text
        .lines()
        .filter(|l| l.starts_with("residual"))
        .all(|l| l.ends_with(": zero")));
    let out = partmat(
        &[
            "series", "--name", "lemma31", "--order", "1", "--format", "text",
        ],
        None,
    );
    assert!(stdout(&out).starts_with("t^1: z\n"));
    let out = partmat(&["series", "--name", "motzkin-stats", "--order", "3"], None);
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let mut at_one = [0i64; 4];
    for term in report["series"]["terms"].as_array().unwrap() {
        let t = term["t"].as_u64().unwrap() as usize;
        at_one[t] += term["coeff"].as_str().unwrap().parse::<i64>().unwrap();
    }
    assert_eq!(at_one, [0, 1, 2, 4]);
}

#[test]
fn verify_reports() {
    let out = partmat(&["verify", "--check", "theorem-1-1", "--max-n", "8"], None);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("PASS theorem-1-1 (max-n 8)"));
    let out = partmat(
        &["verify", "--check", "phi-roundtrip", "--max-n", "10"],
        None,
    );
    assert!(stdout(&out).starts_with("PASS phi-roundtrip (max-n 10)"));
    let out = partmat(&["verify", "--check", "s-table"], None);
    assert!(stdout(&out).starts_with("PASS s-table (max-n 8)"));
}

#[test]
fn environment_caps_bounds() {
    let out = Command::new(env!("CARGO_BIN_EXE_partmat"))
        .args(["verify", "--check", "phi-roundtrip", "--max-n", "10"])
        .env("PARTMAT_MAX_N", "4")
        .output()
        .unwrap();
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .starts_with("PASS phi-roundtrip (max-n 4)"));
}

#[test]
fn output_is_deterministic() {
    let args = ["enumerate", "--family", "fm", "--n", "5", "--format", "csv"];
    assert_eq!(partmat(&args, None).stdout, partmat(&args, None).stdout);
}
