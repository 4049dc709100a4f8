//! Line-oriented report format.
//!
//! Every record is one line of tab-separated fields, tag first. Absent values
//! print as `-`. Elapsed times print only when timings were requested, so that
//! reports are byte-stable by default.

use std::fmt::Write;

use chebfib::combinatorial::Section5Summary;
use chebfib::identities::{Counts, EntrySummary, Summary, VerificationOutcome};

pub const OUTCOME_HEADER: &str = "#outcome\tid\tform\tpoint\tstatus\tlhs\trhs\treason\telapsed_us";
pub const ENTRY_HEADER: &str =
    "#entry\tid\tstatus\tprinted_pass\tprinted_fail\tprinted_skipped\tcorrected_pass\tcorrected_fail\tcorrected_skipped\telapsed_us";

fn opt(s: &Option<String>) -> &str {
    s.as_deref().unwrap_or("-")
}

fn elapsed(us: u64, timings: bool) -> String {
    if timings {
        us.to_string()
    } else {
        "-".to_string()
    }
}

fn counts(c: Option<&Counts>) -> String {
    match c {
        Some(c) => format!("{}\t{}\t{}", c.pass, c.fail, c.skipped),
        None => "-\t-\t-".to_string(),
    }
}

pub fn outcome_line(tag: &str, o: &VerificationOutcome, timings: bool) -> String {
    let point = o.point.to_string();
    format!(
        "{tag}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
        o.id,
        o.form,
        if point.is_empty() { "-" } else { &point },
        o.status,
        opt(&o.lhs),
        opt(&o.rhs),
        opt(&o.reason),
        elapsed(o.elapsed_us, timings)
    )
}

pub fn entry_line(tag: &str, e: &EntrySummary, timings: bool) -> String {
    format!(
        "{tag}\t{}\t{}\t{}\t{}\t{}",
        e.id,
        e.status,
        counts(Some(&e.printed)),
        counts(e.corrected.as_ref()),
        elapsed(e.elapsed_us, timings)
    )
}

/// Report for a single entry: every outcome in grid order, then the summary.
pub fn verify_report(id: &str, profile: &str, outcomes: &[VerificationOutcome], verified_failures: usize, timings: bool) -> String {
    let mut out = String::new();
    out.push_str(OUTCOME_HEADER);
    out.push('\n');
    let mut c = Counts::default();
    for o in outcomes {
        out.push_str(&outcome_line("outcome", o, timings));
        out.push('\n');
        match o.status {
            chebfib::identities::OutcomeStatus::Pass => c.pass += 1,
            chebfib::identities::OutcomeStatus::Fail => c.fail += 1,
            chebfib::identities::OutcomeStatus::SkippedConstraint => c.skipped += 1,
        }
    }
    let _ = writeln!(
        out,
        "summary\tverify\tid={id}\tprofile={profile}\tpass={}\tfail={}\tskipped={}\tverified_failures={verified_failures}",
        c.pass, c.fail, c.skipped
    );
    out
}

/// Report for the whole catalog. Sections appear in a fixed order: entries,
/// verified-family failures, typo-suspect entries with sample discrepancies,
/// then the summary record.
pub fn verify_all_report(s: &Summary, timings: bool) -> String {
    let mut out = String::new();
    out.push_str(ENTRY_HEADER);
    out.push('\n');
    for e in &s.entries {
        out.push_str(&entry_line("entry", e, timings));
        out.push('\n');
    }
    let _ = writeln!(out, "section\tfailures\t{}", s.failures.len());
    for o in &s.failures {
        out.push_str(&outcome_line("failure", o, timings));
        out.push('\n');
    }
    let typos: Vec<&EntrySummary> = s.typo_suspects().collect();
    let _ = writeln!(out, "section\ttypo-suspect\t{}", typos.len());
    for e in &typos {
        out.push_str(&entry_line("typo", e, timings));
        out.push('\n');
        for o in s.discrepancies.iter().filter(|o| o.id == e.id) {
            out.push_str(&outcome_line("discrepancy", o, timings));
            out.push('\n');
        }
    }
    let mut total = Counts::default();
    for e in &s.entries {
        total.pass += e.printed.pass;
        total.fail += e.printed.fail;
        total.skipped += e.printed.skipped;
    }
    let _ = writeln!(
        out,
        "summary\tverify-all\tprofile={}\tentries={}\tverified={}\ttypo_suspects={}\tprinted_pass={}\tprinted_fail={}\tprinted_skipped={}\tverified_failures={}",
        s.profile,
        s.entries.len(),
        s.entries.len() - typos.len(),
        typos.len(),
        total.pass,
        total.fail,
        total.skipped,
        s.verified_failures()
    );
    out
}

pub fn section5_report(s: &Section5Summary) -> String {
    let mut out = String::new();
    out.push_str("#family\tname\tchecked\tfailed\n");
    for f in s.counts() {
        let _ = writeln!(out, "family\t{}\t{}\t{}", f.family, f.checked, f.failed);
    }
    let failures: Vec<_> = s.failures().collect();
    for c in &failures {
        let _ = writeln!(
            out,
            "failure\t{}\tn={}\tm={}\t{}\t{}",
            c.family,
            c.n,
            c.m,
            chebfib::algebra::format_rational(&c.lhs),
            chebfib::algebra::format_rational(&c.rhs)
        );
    }
    let _ = writeln!(out, "summary\tsection5\tmax_total={}\tchecks={}\tfailures={}", s.max_total, s.checks.len(), failures.len());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use chebfib::identities::{verify, GridProfile, Var};

    #[test]
    fn outcome_fields_are_fixed() {
        let g = GridProfile::quick().with_range(Var::N, 2, 2);
        let o = verify("ex5.1", &g).unwrap();
        let line = outcome_line("outcome", &o[0], false);
        let fields: Vec<&str> = line.split('\t').collect();
        assert_eq!(fields.len(), OUTCOME_HEADER.split('\t').count());
        assert_eq!(fields[0], "outcome");
        assert_eq!(fields[1], "ex5.1");
        assert_eq!(fields[4], "pass");
        assert_eq!(fields[5], fields[6]);
        assert_eq!(*fields.last().unwrap(), "-");
    }

    #[test]
    fn timings_only_when_asked() {
        let g = GridProfile::quick().with_range(Var::N, 2, 2);
        let o = verify("ex5.1", &g).unwrap();
        let line = outcome_line("outcome", &o[0], true);
        assert!(line.rsplit('\t').next().unwrap().parse::<u64>().is_ok());
    }

    #[test]
    fn summary_is_last() {
        let g = GridProfile::quick().with_range(Var::N, 1, 3);
        let o = verify("ex5.1", &g).unwrap();
        let r = verify_report("ex5.1", "quick", &o, 0, false);
        assert!(r.lines().last().unwrap().starts_with("summary\tverify\t"));
        assert_eq!(r.lines().count(), o.len() + 2);
    }
}
