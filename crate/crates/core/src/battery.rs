//! Named verification batteries and a parallel runner with ordered output.

use std::fmt;
use std::str::FromStr;
use std::thread;

use crate::coxeter::GroupFamily;
use crate::error::{Error, Result};
use crate::partition::Ground;
use crate::suites::RangeMode;
use crate::tied::{Family, FamilyKind};
use crate::verify::{self, Carrier, VerificationReport};

pub const HOMOMORPHISM_SAMPLES: usize = 10_000;
pub const ORACLE_SAMPLES: usize = 10_000;
pub const SEED: u64 = 0x7133_0b5e;

/// Which batteries `verify` runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Selector {
    All,
    PartitionMonoids,
    Actions,
    Tied(FamilyKind),
    Rewrite,
}

impl FromStr for Selector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Selector> {
        match s {
            "all" => Ok(Selector::All),
            "partition-monoids" => Ok(Selector::PartitionMonoids),
            "actions" => Ok(Selector::Actions),
            "rewrite" => Ok(Selector::Rewrite),
            _ => match s.strip_prefix("tied:") {
                Some(f) => Ok(Selector::Tied(f.parse()?)),
                None => Err(Error::Usage(format!(
                    "unknown suite '{s}' (expected all, partition-monoids, actions, rewrite or tied:<family>)"
                ))),
            },
        }
    }
}

impl fmt::Display for Selector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Selector::All => f.write_str("all"),
            Selector::PartitionMonoids => f.write_str("partition-monoids"),
            Selector::Actions => f.write_str("actions"),
            Selector::Tied(k) => write!(f, "tied:{k}"),
            Selector::Rewrite => f.write_str("rewrite"),
        }
    }
}

/// Largest `n` at which the relations of `carrier` are checked exhaustively.
pub fn carrier_max_n(carrier: Carrier) -> usize {
    match carrier {
        Carrier::Pn => 5,
        Carrier::PnD => 4,
        _ => 3,
    }
}

/// Largest `n` for the finite quotient check of a family.
pub fn quotient_max_n(kind: FamilyKind) -> usize {
    match kind {
        FamilyKind::BraidB => 3,
        _ => 4,
    }
}

type Task = Box<dyn FnOnce() -> Result<VerificationReport> + Send>;

/// One unit of work in a battery.
pub struct Job {
    pub name: String,
    task: Task,
}

impl Job {
    fn new(
        name: String,
        task: impl FnOnce() -> Result<VerificationReport> + Send + 'static,
    ) -> Job {
        Job {
            name,
            task: Box::new(task),
        }
    }

    pub fn run(self) -> Result<VerificationReport> {
        (self.task)()
    }
}

impl fmt::Debug for Job {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Job").field("name", &self.name).finish()
    }
}

fn partition_jobs(n: usize, cap: usize, out: &mut Vec<Job>) {
    for c in Carrier::ALL {
        if n > carrier_max_n(c) {
            continue;
        }
        out.push(Job::new(format!("relations:{c}:{n}"), move || {
            verify::check_monoid_relations(c, n)
        }));
        out.push(Job::new(format!("generating:{c}:{n}"), move || {
            verify::check_generating(c, n, cap)
        }));
        let sample = (n >= 3 && c != Carrier::Pn).then_some((ORACLE_SAMPLES, SEED + n as u64));
        if c == Carrier::Pn || n <= 3 {
            out.push(Job::new(format!("upper-bound:{c}:{n}"), move || {
                verify::check_min_upper_bound(c, n, sample, cap)
            }));
        }
    }
    if n <= 4 {
        out.push(Job::new(format!("oracle:join:plain:{n}"), move || {
            verify::check_join_oracle(Ground::plain(n)?, None, cap)
        }));
    }
    if n <= 3 {
        let sample = (n == 3).then_some((ORACLE_SAMPLES, SEED));
        out.push(Job::new(format!("oracle:join:signed:{n}"), move || {
            verify::check_join_oracle(Ground::signed(n)?, sample, cap)
        }));
    }
}

fn action_jobs(n: usize, out: &mut Vec<Job>) {
    out.push(Job::new(format!("action-tables:{n}"), move || {
        verify::check_action_tables(n)
    }));
    for g in [
        GroupFamily::SymA,
        GroupFamily::SignedB,
        GroupFamily::EvenSignedD,
    ] {
        out.push(Job::new(
            format!("action-homomorphism:{g}:{n}"),
            move || verify::check_action_homomorphism(g, n, HOMOMORPHISM_SAMPLES, SEED + n as u64),
        ));
    }
}

fn tied_jobs(kind: FamilyKind, n: usize, mode: RangeMode, cap: usize, out: &mut Vec<Job>) {
    out.push(Job::new(format!("tied:{kind}:{n}"), move || {
        verify::check_tied_suites(Family::new(kind, n)?, mode)
    }));
    if n <= quotient_max_n(kind) {
        out.push(Job::new(format!("quotient:{kind}:{n}"), move || {
            verify::check_tied_quotient(Family::new(kind, n)?, mode, cap)
        }));
    }
}

/// The jobs for `selector` at every `n` in `ns`, in report order.
pub fn battery(selector: Selector, ns: &[usize], mode: RangeMode, cap: usize) -> Vec<Job> {
    let mut out = Vec::new();
    for &n in ns {
        match selector {
            Selector::PartitionMonoids => partition_jobs(n, cap, &mut out),
            Selector::Actions => action_jobs(n, &mut out),
            Selector::Rewrite => out.push(Job::new(format!("rewrite:{n}"), move || {
                verify::check_rewrite(n, cap)
            })),
            Selector::Tied(kind) => tied_jobs(kind, n, mode, cap, &mut out),
            Selector::All => {
                partition_jobs(n, cap, &mut out);
                action_jobs(n, &mut out);
                out.push(Job::new(format!("rewrite:{n}"), move || {
                    verify::check_rewrite(n, cap)
                }));
                for kind in FamilyKind::ALL {
                    tied_jobs(kind, n, mode, cap, &mut out);
                }
            }
        }
    }
    out
}

/// Runs the jobs on a bounded pool of threads; results keep the job order.
pub fn run_parallel(jobs: Vec<Job>) -> Vec<(String, Result<VerificationReport>)> {
    let workers = thread::available_parallelism()
        .map_or(1, |p| p.get())
        .min(jobs.len().max(1));
    let names: Vec<String> = jobs.iter().map(|j| j.name.clone()).collect();
    let queue = std::sync::Mutex::new(jobs.into_iter().enumerate().collect::<Vec<_>>().into_iter());
    let mut results: Vec<Option<Result<VerificationReport>>> = names.iter().map(|_| None).collect();
    let done = std::sync::Mutex::new(Vec::new());
    thread::scope(|s| {
        for _ in 0..workers {
            s.spawn(|| loop {
                let next = queue.lock().expect("queue lock").next();
                let Some((i, job)) = next else { break };
                let r = job.run();
                done.lock().expect("result lock").push((i, r));
            });
        }
    });
    for (i, r) in done.into_inner().expect("result lock") {
        results[i] = Some(r);
    }
    names
        .into_iter()
        .zip(results)
        .map(|(n, r)| (n, r.expect("every job ran")))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn selectors_parse() {
        assert_eq!("all".parse::<Selector>().unwrap(), Selector::All);
        assert_eq!(
            "tied:braid-b".parse::<Selector>().unwrap(),
            Selector::Tied(FamilyKind::BraidB)
        );
        assert!("tied:braid-c".parse::<Selector>().is_err());
        assert!("everything".parse::<Selector>().is_err());
        assert_eq!(
            Selector::Tied(FamilyKind::VirtualA).to_string(),
            "tied:virtual-a"
        );
    }

    #[test]
    fn battery_respects_limits() {
        let jobs = battery(
            Selector::PartitionMonoids,
            &[4],
            RangeMode::Strict,
            verify::DEFAULT_MAX_ELEMENTS,
        );
        let names: Vec<&str> = jobs.iter().map(|j| j.name.as_str()).collect();
        assert!(names.contains(&"relations:pn:4"));
        assert!(names.contains(&"relations:pnd:4"));
        assert!(!names.contains(&"relations:spn:4"));
        let jobs = battery(
            Selector::Tied(FamilyKind::BraidB),
            &[3, 4],
            RangeMode::Strict,
            1000,
        );
        let names: Vec<&str> = jobs.iter().map(|j| j.name.as_str()).collect();
        assert_eq!(
            names,
            ["tied:braid-b:3", "quotient:braid-b:3", "tied:braid-b:4"]
        );
    }

    #[test]
    fn parallel_results_keep_order() {
        let jobs = battery(
            Selector::Rewrite,
            &[2, 3, 4],
            RangeMode::Strict,
            verify::DEFAULT_MAX_ELEMENTS,
        );
        let out = run_parallel(jobs);
        let names: Vec<&str> = out.iter().map(|(n, _)| n.as_str()).collect();
        assert_eq!(names, ["rewrite:2", "rewrite:3", "rewrite:4"]);
        assert!(out.iter().all(|(_, r)| r.as_ref().unwrap().passed()));
    }
}
