use std::io::Write;
use std::process::{Command, Output, Stdio};

use ascseq::enumerate::MapPair;
use ascseq::{phi, phi_inv, AscentSequence, Permutation};
use ascseq_cli::{parse_args, run_with_maps, EXIT_OK, EXIT_USAGE, EXIT_VERIFY_FAILED};

fn ascseq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ascseq"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn ascseq_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_ascseq"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn enumerate_listings() {
    let o = ascseq(&["enumerate", "ascent", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "0 0 0\n0 0 1\n0 1 0\n0 1 1\n0 1 2\n");

    let o = ascseq(&["enumerate", "perm", "3", "--avoid", "1 3 2"]);
    assert_eq!(stdout(&o), "1 2 3\n2 1 3\n2 3 1\n3 1 2\n3 2 1\n");

    assert_eq!(stdout(&ascseq(&["enumerate", "ascent", "0"])), "ε\n");
    assert_eq!(
        stdout(&ascseq(&["--format", "json", "enumerate", "ascent", "0"])),
        "[[]]\n"
    );
    assert_eq!(
        stdout(&ascseq(&["--format", "json", "enumerate", "perm", "2"])),
        "[[1,2],[2,1]]\n"
    );
    assert_eq!(
        stdout(&ascseq(&["--format", "csv", "enumerate", "ascent", "2"])),
        "n,object\n2,0 0\n2,0 1\n"
    );
}

#[test]
fn enumerated_objects_revalidate() {
    let o = ascseq(&["enumerate", "ascent", "6", "--avoid", "021"]);
    let lines: Vec<String> = stdout(&o).lines().map(String::from).collect();
    assert_eq!(lines.len(), 132);
    for l in &lines {
        l.parse::<AscentSequence>().unwrap();
    }
    let o = ascseq(&["enumerate", "perm", "6", "--avoid", "132"]);
    for l in stdout(&o).lines() {
        l.parse::<Permutation>().unwrap();
    }
}

#[test]
fn counts() {
    assert_eq!(
        stdout(&ascseq(&["count", "ascent", "5", "--avoid", "0 2 1"])),
        "42\n"
    );
    assert_eq!(stdout(&ascseq(&["count", "ascent", "5"])), "53\n");
    assert_eq!(stdout(&ascseq(&["count", "perm", "0"])), "1\n");
    assert_eq!(
        stdout(&ascseq(&[
            "--threads",
            "2",
            "count",
            "ascent",
            "12",
            "--avoid",
            "101"
        ])),
        "208012\n"
    );
    assert_eq!(
        stdout(&ascseq(&[
            "--format", "csv", "count", "perm", "4", "--avoid", "132", "--avoid", "123"
        ])),
        "kind,n,avoid,count\nperm,4,1 3 2;1 2 3,8\n"
    );
}

#[test]
fn stats_reports() {
    let o = ascseq(&["stats", "ascent", "0 1 0 1 2 2"]);
    let out = stdout(&o);
    assert!(out.contains("asc 3\n") && out.contains("rlm 3\n"), "{out}");

    let out = stdout(&ascseq(&["stats", "ascent", "0 1 0 1 3 3 1 2 4 3 4"]));
    assert!(out.contains("special_max 3\nrun 5..6\nrepeated\n"), "{out}");

    let out = stdout(&ascseq(&["stats", "perm", "3 2 1"]));
    assert_eq!(out, "object 3 2 1\nasc 0\nrlm 1\n");

    let out = stdout(&ascseq(&["--format", "json", "stats", "ascent", "000"]));
    assert_eq!(
        out,
        "{\"kind\":\"ascent\",\"object\":[0,0,0],\"asc\":0,\"rlm\":1,\"special_max\":{\"value\":0,\"run\":null,\"repeated\":false}}\n"
    );

    let o = ascseq(&["stats", "ascent", "010142"]);
    assert_eq!(o.status.code(), Some(EXIT_USAGE));
    assert!(stderr(&o).contains("index 5"), "{}", stderr(&o));
}

#[test]
fn map_both_directions() {
    assert_eq!(stdout(&ascseq(&["map", "forward", "0 1 0"])), "2 3 1\n");
    assert_eq!(stdout(&ascseq(&["map", "inverse", "2 3 1"])), "0 1 0\n");
    let o = ascseq(&["map", "forward", "0 2 1"]);
    assert_eq!(o.status.code(), Some(EXIT_USAGE));
    assert!(stderr(&o).contains("contains 021"), "{}", stderr(&o));

    let o = ascseq(&["map", "forward", "0 1 2 1"]);
    assert_eq!(o.status.code(), Some(EXIT_USAGE));
    assert!(stderr(&o).contains("contains 021"));
    let o = ascseq(&["map", "inverse", "1 3 2"]);
    assert_eq!(o.status.code(), Some(EXIT_USAGE));
    assert!(stderr(&o).contains("contains 132"));

    let o = ascseq_stdin(&["map", "forward"], "000\n001\n\n010\n011\n012\n");
    assert_eq!(stdout(&o), "3 2 1\n2 1 3\n2 3 1\n3 1 2\n1 2 3\n");
    let o = ascseq_stdin(&["--format", "json", "map", "inverse"], "1\n");
    assert_eq!(stdout(&o), "{\"input\":[1],\"output\":[0]}\n");
}

#[test]
fn distribution_tables() {
    let out = stdout(&ascseq(&["distribution", "3"]));
    assert!(
        out.contains("difference none") && out.contains("verdict pass"),
        "{out}"
    );
    let out = stdout(&ascseq(&["--format", "csv", "distribution", "1"]));
    assert_eq!(out, "n,family,asc,rlm,count\n1,A021,0,1,1\n1,S132,0,1,1\n");
    let out = stdout(&ascseq(&["--format", "json", "distribution", "8"]));
    assert!(out.contains("\"totals\":[1430,1430]"), "{out}");
    assert!(out.contains("\"difference\":[]"));
}

#[test]
fn verify_passes() {
    let o = ascseq(&["verify", "10"]);
    assert_eq!(o.status.code(), Some(EXIT_OK));
    assert!(stdout(&o).ends_with("verdict pass\n"));
    assert_eq!(stdout(&o).lines().count(), 11);
    let o = ascseq(&["verify", "1"]);
    assert_eq!(o.status.code(), Some(EXIT_OK));
}

#[test]
fn machine_output_is_deterministic() {
    for args in [
        &["--format", "json", "distribution", "9"][..],
        &["--format", "csv", "distribution", "9"],
        &["--format", "json", "verify", "7"],
        &[
            "--format",
            "csv",
            "enumerate",
            "perm",
            "5",
            "--avoid",
            "132",
        ],
    ] {
        let a = ascseq(args).stdout;
        let b = ascseq(args).stdout;
        assert_eq!(a, b);
    }
    let single = ascseq(&["--threads", "1", "--format", "json", "distribution", "10"]).stdout;
    let many = ascseq(&["--threads", "4", "--format", "json", "distribution", "10"]).stdout;
    assert_eq!(single, many);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["count", "ascent", "21"][..],
        &["count", "perm", "14"],
        &["enumerate", "ascent", "3", "--avoid", "0 2 2"],
        &["enumerate", "perm", "3", "--avoid", "1 1"],
        &["stats", "perm", "2 2 1"],
        &["map", "inverse", "x"],
        &["verify", "14"],
        &["--threads", "0", "count", "ascent", "3"],
        &["nonsense"],
        &["count", "ascent", "-1"],
    ] {
        let o = ascseq(args);
        assert_eq!(
            o.status.code(),
            Some(EXIT_USAGE),
            "{args:?}: {}",
            stderr(&o)
        );
    }
    let o = ascseq_stdin(&["map", "forward"], "");
    assert_eq!(o.status.code(), Some(EXIT_USAGE));
}

#[test]
fn verify_reports_broken_map() {
    // Swaps the images of 010 and 012, breaking statistic preservation at n = 3.
    let broken = |x: &AscentSequence| {
        let pi = phi(x)?;
        match pi.to_string().as_str() {
            "2 3 1" => "1 2 3".parse(),
            "1 2 3" => "2 3 1".parse(),
            _ => Ok(pi),
        }
    };
    let maps = MapPair {
        forward: &broken,
        inverse: &phi_inv,
    };
    let cli = parse_args(["ascseq", "verify", "5"]).unwrap();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run_with_maps(cli, &maps, &mut &b""[..], &mut out, &mut err);
    assert_eq!(code, EXIT_VERIFY_FAILED);
    let out = String::from_utf8(out).unwrap();
    assert!(out.contains("n 3 fail"), "{out}");
    assert!(
        out.contains(
            "counterexample: 0 1 0 has (asc, rlm) = (1, 1) but its image 1 2 3 has (2, 3)"
        ),
        "{out}"
    );
    assert!(!out.contains("n 4"));
}
