use std::process::ExitCode;
use std::time::{Duration, Instant};

use tiemonoid::battery::{HOMOMORPHISM_SAMPLES, ORACLE_SAMPLES, SEED};
use tiemonoid::verify::{
    self, froidure_pin, Carrier, VerificationReport, DEFAULT_MAX_ELEMENTS as CAP,
};
use tiemonoid::{Family, FamilyKind, Ground, GroupFamily, RangeMode, SetPartition};

type Criterion = (&'static str, Duration, fn() -> Outcome);

struct Outcome {
    ok: bool,
    detail: String,
}

fn summarize(reports: &[VerificationReport]) -> Outcome {
    let checks: usize = reports.iter().map(|r| r.records.len()).sum();
    let failures: Vec<String> = reports
        .iter()
        .flat_map(|r| r.failures())
        .take(5)
        .map(|f| {
            format!(
                "{} {} {:?} {}",
                f.suite,
                f.relation,
                f.indices,
                f.witness.as_deref().unwrap_or("")
            )
        })
        .collect();
    let failed: usize = reports.iter().map(|r| r.failures().count()).sum();
    Outcome {
        ok: failed == 0 && checks > 0,
        detail: if failed == 0 {
            format!("{checks} checks")
        } else {
            format!("{failed} of {checks} failed: {}", failures.join(" | "))
        },
    }
}

fn timed(limit: Duration, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let mut out = f();
    let took = start.elapsed();
    if took > limit {
        out.ok = false;
        out.detail
            .push_str(&format!("; took {took:?}, limit {limit:?}"));
    } else {
        out.detail.push_str(&format!("; {} ms", took.as_millis()));
    }
    out
}

fn presentation_relations() -> Outcome {
    let mut reps = Vec::new();
    for c in Carrier::ALL {
        let max = match c {
            Carrier::Pn => 5,
            Carrier::PnD => 4,
            _ => 3,
        };
        for n in 2..=max {
            reps.push(verify::check_monoid_relations(c, n).unwrap());
        }
    }
    let labels = ["P3", "SP4", "PB4", "PB5", "RP3", "RSP4", "RSP3d", "PD5"];
    let missing: Vec<&str> = labels
        .iter()
        .filter(|l| {
            !reps
                .iter()
                .flat_map(|r| &r.records)
                .any(|c| c.relation.starts_with(*l))
        })
        .copied()
        .collect();
    let mut out = summarize(&reps);
    if !missing.is_empty() {
        out.ok = false;
        out.detail
            .push_str(&format!("; no instances of {missing:?}"));
    }
    out
}

fn generation_counts() -> Outcome {
    let expected = [
        (Carrier::Pn, 2, 2),
        (Carrier::Pn, 3, 5),
        (Carrier::Pn, 4, 15),
        (Carrier::Pn, 5, 52),
        (Carrier::SPn, 2, 7),
        (Carrier::PnB, 2, 6),
        (Carrier::PnD, 2, 4),
        (Carrier::RSPn, 2, 4),
        (Carrier::SPn, 3, 31),
        (Carrier::RSPn, 3, 15),
        (Carrier::PnB, 3, 24),
        (Carrier::PnD, 3, 15),
    ];
    let mut bad = Vec::new();
    let mut reps = Vec::new();
    for (c, n, count) in expected {
        let g = c.ground(n).unwrap();
        let closed = froidure_pin(
            SetPartition::identity(g),
            &c.generators(n).unwrap(),
            |a, b| c.product(a, b),
            CAP,
        )
        .unwrap();
        if closed.len() != count {
            bad.push(format!("{c}({n}) = {}, expected {count}", closed.len()));
        }
        reps.push(verify::check_generating(c, n, CAP).unwrap());
    }
    let mut out = summarize(&reps);
    if !bad.is_empty() {
        out.ok = false;
        out.detail.push_str(&format!("; {}", bad.join(", ")));
    }
    out
}

fn rewriting() -> Outcome {
    let reps: Vec<_> = (2..=4)
        .map(|n| verify::check_rewrite(n, CAP).unwrap())
        .collect();
    let restricted = reps
        .iter()
        .filter(|r| {
            r.records
                .iter()
                .any(|c| c.relation.starts_with("restriction reproduces"))
        })
        .count();
    let mut out = summarize(&reps);
    if restricted != 2 {
        out.ok = false;
        out.detail
            .push_str("; restriction checked for the wrong sizes");
    }
    out
}

fn action_tables() -> Outcome {
    let mut reps = Vec::new();
    for n in 3..=5 {
        reps.push(verify::check_action_tables(n).unwrap());
        for g in [
            GroupFamily::SymA,
            GroupFamily::SignedB,
            GroupFamily::EvenSignedD,
        ] {
            reps.push(
                verify::check_action_homomorphism(g, n, HOMOMORPHISM_SAMPLES, SEED + n as u64)
                    .unwrap(),
            );
        }
    }
    summarize(&reps)
}

fn tied_suites() -> Outcome {
    let mut reps = Vec::new();
    for kind in FamilyKind::ALL {
        let sizes = match kind {
            FamilyKind::BraidB => 2..=4,
            FamilyKind::BraidD => 4..=5,
            _ => 2..=5,
        };
        for n in sizes {
            reps.push(
                verify::check_tied_suites(Family::new(kind, n).unwrap(), RangeMode::Strict)
                    .unwrap(),
            );
        }
    }
    reps.push(
        verify::check_tied_suites(
            Family::new(FamilyKind::BraidB, 3).unwrap(),
            RangeMode::Lenient,
        )
        .unwrap(),
    );
    let td6 = reps
        .iter()
        .flat_map(|r| &r.records)
        .any(|c| c.relation == "TD6");
    let mut out = summarize(&reps);
    if !td6 {
        out.ok = false;
        out.detail.push_str("; TD6 not checked");
    }
    out
}

fn tied_quotients() -> Outcome {
    let cases = [
        (FamilyKind::BraidA, 2, 4),
        (FamilyKind::BraidA, 3, 30),
        (FamilyKind::BraidA, 4, 15 * 24),
        (FamilyKind::BraidB, 2, 48),
        (FamilyKind::BraidB, 3, 24 * 48),
        (FamilyKind::BraidD, 4, 72 * 192),
    ];
    let mut reps = Vec::new();
    let mut bad = Vec::new();
    for (kind, n, size) in cases {
        let f = Family::new(kind, n).unwrap();
        let got = verify::enumerate_tied_quotient(f, CAP).unwrap().len();
        if got != size {
            bad.push(format!("{kind}({n}) = {got}, expected {size}"));
        }
        reps.push(verify::check_tied_quotient(f, RangeMode::Strict, CAP).unwrap());
    }
    let mut out = summarize(&reps);
    if !bad.is_empty() {
        out.ok = false;
        out.detail.push_str(&format!("; {}", bad.join(", ")));
    }
    out
}

fn oracle_agreement() -> Outcome {
    let mut reps = Vec::new();
    for n in 2..=4 {
        reps.push(verify::check_join_oracle(Ground::plain(n).unwrap(), None, CAP).unwrap());
    }
    reps.push(verify::check_join_oracle(Ground::signed(2).unwrap(), None, CAP).unwrap());
    reps.push(
        verify::check_join_oracle(
            Ground::signed(3).unwrap(),
            Some((ORACLE_SAMPLES, SEED)),
            CAP,
        )
        .unwrap(),
    );
    reps.push(verify::check_min_upper_bound(Carrier::PnB, 2, None, CAP).unwrap());
    reps.push(
        verify::check_min_upper_bound(Carrier::PnB, 3, Some((ORACLE_SAMPLES, SEED)), CAP).unwrap(),
    );
    reps.push(verify::check_min_upper_bound(Carrier::Pn, 3, None, CAP).unwrap());
    summarize(&reps)
}

fn main() -> ExitCode {
    let criteria: Vec<Criterion> = vec![
        (
            "presentation relations hold in every partition monoid",
            Duration::from_secs(60),
            presentation_relations,
        ),
        (
            "generator closures equal brute-force enumeration",
            Duration::from_secs(120),
            generation_counts,
        ),
        (
            "rewriting system is reduced, canonical and restricts correctly",
            Duration::from_secs(60),
            rewriting,
        ),
        (
            "action tables and the action homomorphism",
            Duration::from_secs(120),
            action_tables,
        ),
        (
            "tied relation suites and derived identities",
            Duration::from_secs(120),
            tied_suites,
        ),
        (
            "finite tied quotients have product size and satisfy the relations",
            Duration::from_secs(120),
            tied_quotients,
        ),
        (
            "union-find join and B-product agree with the oracles",
            Duration::from_secs(120),
            oracle_agreement,
        ),
    ];
    let mut failed = Vec::new();
    for (i, (name, limit, run)) in criteria.into_iter().enumerate() {
        let out = timed(limit, run);
        let tag = if out.ok { "[PASS]" } else { "[FAIL]" };
        println!("{tag} criterion {} {name}: {}", i + 1, out.detail);
        if !out.ok {
            failed.push(i + 1);
        }
    }
    if failed.is_empty() {
        ExitCode::SUCCESS
    } else {
        eprintln!("failed criteria: {failed:?}");
        ExitCode::FAILURE
    }
}
