//! End-to-end runs of the `gridmatch` binary: stdout, stderr, and exit
//! codes as a caller sees them.

use std::process::{Command, Output};

fn gridmatch(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gridmatch"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("stdout is UTF-8")
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("stderr is UTF-8")
}

#[test]
fn count_prints_the_exact_number() {
    let out = gridmatch(&["count", "--family", "V", "--n", "4", "--backend", "layered"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "145\n");

    let out = gridmatch(&["count", "--family", "V", "--n", "4", "--backend", "oracle"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "145\n");

    // Big values print in full decimal.
    let out = gridmatch(&["count", "--family", "M", "--n", "40"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1130953470305555856877608601\n");
}

#[test]
fn tables_render_in_all_three_formats() {
    let out = gridmatch(&["table", "5"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("| n | f(n) | p(n) | V(n)"));
    assert!(text.contains("33490"));

    let out = gridmatch(&["--format", "csv", "table", "5"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("n,f(n),p(n),V(n)"));
    assert!(text.contains("8,34,985,33490"));

    let out = gridmatch(&["--format", "json", "table", "5"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("\"V(n)\": 33490"));
    assert!(text.contains("\"notes\""));
}

#[test]
fn verify_is_quiet_green() {
    let out = gridmatch(&["verify"]);
    assert!(out.status.success(), "verify must exit 0: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("as expected"));
    assert!(!text.contains("UNEXPECTED"));

    let out = gridmatch(&["verify", "--identity", "v-product", "--nmax", "12"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("v-product"));
}

#[test]
fn audit_shows_the_published_defects_and_exits_zero() {
    let out = gridmatch(&["audit"]);
    assert!(
        out.status.success(),
        "expected findings all match, so audit exits 0"
    );
    let text = stdout(&out);
    assert!(text.contains("form gives 1/2, recurrence gives 2"));
    assert!(text.contains("form gives 5/7, recurrence gives 1"));
    assert!(text.contains("irrational"));

    let out = gridmatch(&["audit", "--sequence", "V"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("first mismatch at n = 1"));
}

#[test]
fn pin_recounts_with_the_oracle() {
    let out = gridmatch(&["pin", "--family", "B"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("1, 4, 15, 56"));
    assert!(text.contains("agrees"));

    // The full batch reports the S deviation and the unresolved sequences
    // without failing.
    let out = gridmatch(&["pin"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("disagrees at n = 2"));
    assert!(text.contains("candidate promoted"));
    assert!(text.contains("Unresolved sequences"));
    for name in ["D", "E", "p", "h"] {
        assert!(text.contains(name));
    }
}

#[test]
fn oeis_checks_the_committed_fixtures() {
    let out = gridmatch(&["oeis"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert_eq!(text.matches("pass").count(), 17, "all 17 pairings pass");

    let out = gridmatch(&["oeis", "--id", "A004254"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("| t "));
    assert!(text.contains("| q "));
}

#[test]
fn listings_describe_the_registry_and_catalog() {
    let out = gridmatch(&["registry"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("s(n) = 4*s(n-1) - s(n-2)"));
    assert!(text.contains("corrected + published"));

    let out = gridmatch(&["catalog"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("established"));
    assert!(text.contains("candidate"));
    assert!(text.contains("(0, last)"));
}

#[test]
fn usage_errors_exit_two() {
    let out = gridmatch(&["count", "--family", "nope", "--n", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("nope"));

    let out = gridmatch(&["table", "9"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("1..=8"));

    let out = gridmatch(&["verify", "--identity", "nope"]);
    assert_eq!(out.status.code(), Some(2));

    let out = gridmatch(&["oeis", "--id", "A998877"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("A998877"));

    let out = gridmatch(&[] as &[&str]);
    assert_eq!(out.status.code(), Some(2), "bare invocation prints usage");
}

#[test]
fn domain_errors_exit_one() {
    // n below the family's minimum is a failed run, not a usage mistake.
    let out = gridmatch(&["count", "--family", "A", "--n", "0"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains('A'));
}
