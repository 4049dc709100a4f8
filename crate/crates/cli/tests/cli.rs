use std::process::{Command, Output};

fn chebfib(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chebfib")).args(args).output().expect("spawn chebfib")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn golden_verify_report() {
    let o = chebfib(&["verify", "--id", "ex5.1", "--profile", "quick"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), include_str!("golden/verify_ex5_1_quick.txt"));
}

#[test]
fn golden_cheb_coefficients() {
    assert_eq!(stdout(&chebfib(&["cheb", "--kind", "T", "--n", "6"])), include_str!("golden/cheb_t6.txt"));
    assert_eq!(stdout(&chebfib(&["cheb", "--kind", "U", "--n", "5"])), include_str!("golden/cheb_u5.txt"));
}

#[test]
fn cheb_value_at_rational() {
    // T_3(1/2) = 4/8 - 3/2 = -1, U_2(1/3) = 4/9 - 1 = -5/9
    assert_eq!(stdout(&chebfib(&["cheb", "--kind", "T", "--n", "3", "--at", "1/2"])), "-1\n");
    assert_eq!(stdout(&chebfib(&["cheb", "--kind", "U", "--n", "2", "--at", "1/3"])), "-5/9\n");
}

#[test]
fn sequences() {
    let o = chebfib(&["sequence", "--id", "a138573", "--count", "10"]);
    assert_eq!(stdout(&o), "0\n1\n2\n5\n16\n45\n130\n377\n1088\n3145\n");
    let o = chebfib(&["sequence", "--id", "lucas", "--count", "6"]);
    assert_eq!(stdout(&o), "2\n1\n3\n4\n7\n11\n");
}

#[test]
fn full_range_example_passes() {
    let o = chebfib(&["verify", "--id", "ex5.1", "--set", "n=1..30"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("summary\tverify\tid=ex5.1\tprofile=desk\tpass=30\tfail=0\tskipped=0\tverified_failures=0\n"));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["verify", "--id", "no.such.id"][..],
        &["verify", "--id", "ex5.1", "--set", "n=5..1"],
        &["verify", "--id", "ex5.1", "--set", "q=1..2"],
        &["verify", "--id", "ex5.1", "--set", "n"],
        &["verify-all", "--profile", "huge"],
        &["verify-all", "--jobs", "0"],
        &["cheb", "--kind", "V", "--n", "3"],
        &["cheb", "--kind", "T", "--n", "500"],
        &["sequence", "--id", "tribonacci", "--count", "3"],
        &["frobnicate"],
        &["list", "--bogus"],
    ] {
        let o = chebfib(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn typo_entry_does_not_fail_the_run() {
    let o = chebfib(&["verify", "--id", "lem5.3", "--profile", "quick"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.lines().any(|l| l.starts_with("outcome\tlem5.3\tprinted\t") && l.contains("\tfail\t")));
    assert!(text.lines().filter(|l| l.contains("\tcorrected\t")).all(|l| !l.contains("\tfail\t")));
}

#[test]
fn out_file_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.txt");
    let o = chebfib(&["verify-all", "--profile", "quick", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(std::fs::read(&path).unwrap(), o.stdout);
}

#[test]
fn quick_report_independent_of_jobs() {
    let a = chebfib(&["verify-all", "--profile", "quick", "--jobs", "1"]);
    let b = chebfib(&["verify-all", "--profile", "quick", "--jobs", "4"]);
    assert_eq!(a.stdout, b.stdout);
    let last = stdout(&a).lines().last().unwrap().to_string();
    assert!(last.starts_with("summary\tverify-all\tprofile=quick\t"));
    assert!(last.ends_with("\tverified_failures=0"));
}

#[test]
fn reported_values_parse() {
    let o = chebfib(&["verify", "--id", "thm2.T.sum.odd-s", "--profile", "quick"]);
    for line in stdout(&o).lines().filter(|l| l.starts_with("outcome\t")) {
        let f: Vec<&str> = line.split('\t').collect();
        for v in [f[5], f[6]] {
            if v != "-" {
                let e = chebfib::algebra::parse_elem(v).unwrap();
                assert_eq!(e.to_string(), v);
            }
        }
    }
}

#[test]
fn timings_fill_the_last_field() {
    let o = chebfib(&["verify", "--id", "ex5.1", "--set", "n=3..4", "--timings"]);
    for line in stdout(&o).lines().filter(|l| l.starts_with("outcome\t")) {
        assert!(line.rsplit('\t').next().unwrap().parse::<u64>().is_ok());
    }
}

#[test]
fn list_has_one_line_per_entry() {
    let o = chebfib(&["list"]);
    let text = stdout(&o);
    assert_eq!(text.lines().count(), chebfib::identities::catalog().len());
    assert!(text.lines().all(|l| l.split('\t').count() == 6));
}
