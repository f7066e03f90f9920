use std::fs;
use std::io::{self, Write};
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use tiemonoid::rewrite::{CommWord, RewriteSystem};
use tiemonoid::tied::{parse_word, MonoidWord};
use tiemonoid::verify::{self, enumerate_partitions, enumerate_tied_quotient};
use tiemonoid::{
    battery, run_parallel, Carrier, Error, Family, FamilyKind, Ground, RangeMode, Selector,
    SetPartition, TiedElement,
};

macro_rules! say {
    ($($arg:tt)*) => {{
        let _ = writeln!(io::stdout().lock(), $($arg)*);
    }};
}

#[derive(Parser, Debug)]
#[command(
    name = "tiemonoid",
    version,
    about = "Set-partition monoids, tied monoids and their verification"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Element cap for enumeration and closure.
    #[arg(long, global = true, env = "TIEMONOID_MAX_ELEMENTS", default_value_t = verify::DEFAULT_MAX_ELEMENTS)]
    max_elements: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
struct ModeArgs {
    /// Literal index ranges (default).
    #[arg(long, conflicts_with = "lenient")]
    strict: bool,
    /// Drop index 0 from the ranges of the type B relation that admits both readings.
    #[arg(long)]
    lenient: bool,
}

impl ModeArgs {
    fn mode(self) -> RangeMode {
        if self.lenient {
            RangeMode::Lenient
        } else {
            RangeMode::Strict
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Normal form of a tied word.
    Normalize {
        #[arg(long)]
        family: FamilyKind,
        #[arg(long)]
        n: usize,
        word: String,
    },
    /// Product of two tied words, or of two partitions with --monoid.
    Mul {
        #[arg(long, required_unless_present = "monoid", conflicts_with = "monoid")]
        family: Option<FamilyKind>,
        #[arg(long)]
        monoid: Option<Carrier>,
        #[arg(long)]
        n: usize,
        left: String,
        right: String,
    },
    /// Action of the Coxeter image of a monoid word on a partition.
    Act {
        #[arg(long)]
        family: FamilyKind,
        #[arg(long)]
        n: usize,
        word: String,
        partition: String,
    },
    /// Rewriting normal form of a commutative word in the m(i,j).
    Nf {
        #[arg(long)]
        n: usize,
        /// Use the alphabet over [±n].
        #[arg(long)]
        signed: bool,
        word: String,
    },
    /// List or count a partition monoid or a finite tied quotient (tied:<family>).
    Enumerate {
        #[arg(long)]
        monoid: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        count_only: bool,
    },
    /// Run verification batteries.
    Verify {
        /// all, partition-monoids, actions, rewrite or tied:<family>.
        #[arg(long, default_value = "all")]
        suite: Selector,
        /// A single size or an inclusive range such as 2..4.
        #[arg(long, value_parser = parse_range, default_value = "2..4")]
        n: RangeInclusive<usize>,
        #[command(flatten)]
        mode: ModeArgs,
        /// Also write the JSON report to this file.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Print every record, not only failures.
        #[arg(long)]
        verbose: bool,
    },
    /// List the relation instances of a family.
    Suites {
        #[arg(long)]
        family: FamilyKind,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        mode: ModeArgs,
        /// List the derived identities instead of the presentation.
        #[arg(long)]
        identities: bool,
    },
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let bad = || format!("expected N or A..B, found '{s}'");
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (
            a.parse().map_err(|_| bad())?,
            b.trim_start_matches('=').parse().map_err(|_| bad())?,
        ),
        None => {
            let v = s.parse().map_err(|_| bad())?;
            (v, v)
        }
    };
    if a > b {
        return Err(format!("empty range '{s}'"));
    }
    Ok(a..=b)
}

enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::SizeCap { .. } => Failure::Runtime(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn emit(json: bool, value: Value, text: String) {
    if json {
        say!(
            "{}",
            serde_json::to_string_pretty(&value).expect("json value")
        );
    } else {
        say!("{text}");
    }
}

fn element_json(e: &TiedElement) -> Value {
    json!({ "partition": e.partition.to_string(), "word": e.word.to_string() })
}

fn run(cli: Cli) -> Result<bool, Failure> {
    let cap = cli.max_elements;
    match cli.command {
        Command::Normalize { family, n, word } => {
            let f = Family::new(family, n)?;
            let e = TiedElement::normalize(f, &parse_word(&f, &word)?)?;
            emit(cli.json, element_json(&e), e.to_string());
        }
        Command::Mul {
            family,
            monoid,
            n,
            left,
            right,
        } => {
            if let Some(c) = monoid {
                let g = c.ground(n)?;
                let (p, q) = (
                    SetPartition::parse(g, &left)?,
                    SetPartition::parse(g, &right)?,
                );
                for x in [&p, &q] {
                    if !c.contains(x) {
                        return Err(Failure::Usage(format!("{x} is not in {c}")));
                    }
                }
                let r = c.product(&p, &q)?;
                emit(
                    cli.json,
                    json!({ "partition": r.to_string() }),
                    r.to_string(),
                );
            } else {
                let f = Family::new(family.expect("clap requires family or monoid"), n)?;
                let a = TiedElement::normalize(f, &parse_word(&f, &left)?)?;
                let b = TiedElement::normalize(f, &parse_word(&f, &right)?)?;
                let e = a.multiply(&b)?;
                emit(cli.json, element_json(&e), e.to_string());
            }
        }
        Command::Act {
            family,
            n,
            word,
            partition,
        } => {
            let f = Family::new(family, n)?;
            let letters = parse_word(&f, &word)?;
            if let Some(l) = letters.iter().find(|l| l.is_partition()) {
                return Err(Failure::Usage(format!("{l} is not a monoid letter")));
            }
            let g = MonoidWord(letters).coxeter_image(&f)?;
            let p = SetPartition::parse(f.ground(), &partition)?;
            let r = g.act(&p)?;
            emit(
                cli.json,
                json!({ "group_element": g.to_string(), "partition": r.to_string() }),
                r.to_string(),
            );
        }
        Command::Nf { n, signed, word } => {
            let ground = if signed {
                Ground::signed(n)?
            } else {
                Ground::plain(n)?
            };
            let (alpha, sys) = RewriteSystem::canonical(&ground.elements());
            let w = CommWord::parse(&alpha, &word)?;
            let nf = sys.normal_form(&w)?;
            let p = nf.evaluate(&alpha, ground)?;
            emit(
                cli.json,
                json!({ "normal_form": nf.display(&alpha), "partition": p.to_string() }),
                format!("{} = {}", nf.display(&alpha), p),
            );
        }
        Command::Enumerate {
            monoid,
            n,
            count_only,
        } => {
            let items: Vec<String> = match monoid.strip_prefix("tied:") {
                Some(f) => {
                    let f = Family::new(f.parse()?, n)?;
                    let mut v: Vec<_> = enumerate_tied_quotient(f, cap)?.elements;
                    v.sort();
                    v.into_iter().map(|(p, g)| format!("({p}, {g})")).collect()
                }
                None => {
                    let c: Carrier = monoid.parse()?;
                    enumerate_partitions(c, n, cap)?
                        .iter()
                        .map(|p| p.to_string())
                        .collect()
                }
            };
            if count_only {
                emit(
                    cli.json,
                    json!({ "monoid": monoid, "n": n, "count": items.len() }),
                    items.len().to_string(),
                );
            } else {
                emit(
                    cli.json,
                    json!({ "monoid": monoid, "n": n, "count": items.len(), "elements": items }),
                    items.join("\n"),
                );
            }
        }
        Command::Verify {
            suite,
            n,
            mode,
            out,
            verbose,
        } => return verify_cmd(suite, n, mode.mode(), cap, cli.json, out, verbose),
        Command::Suites {
            family,
            n,
            mode,
            identities,
        } => {
            let f = Family::new(family, n)?;
            let s = if identities {
                tiemonoid::lemma_identity_suites(f)
            } else {
                tiemonoid::relation_suite(f, mode.mode())
            };
            let rows: Vec<Value> = s
                .relations
                .iter()
                .map(|r| json!({ "id": r.id(), "lhs": MonoidWord(r.lhs.clone()).to_string(), "rhs": MonoidWord(r.rhs.clone()).to_string() }))
                .collect();
            let text: Vec<String> = s
                .relations
                .iter()
                .map(|r| {
                    format!(
                        "{}: {} = {}",
                        r.id(),
                        MonoidWord(r.lhs.clone()),
                        MonoidWord(r.rhs.clone())
                    )
                })
                .chain(s.notes.iter().map(|n| format!("note: {n}")))
                .collect();
            emit(
                cli.json,
                json!({ "suite": s.name, "relations": rows, "notes": s.notes }),
                text.join("\n"),
            );
        }
    }
    Ok(true)
}

fn verify_cmd(
    suite: Selector,
    ns: RangeInclusive<usize>,
    mode: RangeMode,
    cap: usize,
    json_out: bool,
    out: Option<PathBuf>,
    verbose: bool,
) -> Result<bool, Failure> {
    let ns: Vec<usize> = ns.collect();
    let jobs = battery(suite, &ns, mode, cap);
    let mut reports = Vec::new();
    for (name, r) in run_parallel(jobs) {
        match r {
            Ok(rep) => reports.push(rep),
            Err(e) => return Err(Failure::Runtime(format!("{name}: {e}"))),
        }
    }
    let passed = reports.iter().all(|r| r.passed());
    let doc = json!({ "passed": passed, "reports": reports });
    if let Some(path) = out {
        let text = serde_json::to_string_pretty(&doc).expect("json value");
        fs::write(&path, text)
            .map_err(|e| Failure::Runtime(format!("cannot write {}: {e}", path.display())))?;
    }
    if json_out {
        say!(
            "{}",
            serde_json::to_string_pretty(&doc).expect("json value")
        );
        return Ok(passed);
    }
    let (mut total, mut failed) = (0, 0);
    for rep in &reports {
        let fails = rep.failures().count();
        total += rep.records.len();
        failed += fails;
        say!(
            "{:<8} {:<28} {:>5}/{:<5} {:>6} ms",
            if fails == 0 { "PASS" } else { "FAIL" },
            rep.suite,
            rep.pass_count(),
            rep.records.len(),
            rep.elapsed_ms
        );
        for r in &rep.records {
            if verbose || r.status == verify::Status::Fail {
                let idx: Vec<String> = r.indices.iter().map(|(k, v)| format!("{k}={v}")).collect();
                say!("    {:?} {} [{}]", r.status, r.relation, idx.join(","));
                if let Some(w) = &r.witness {
                    say!("        {w}");
                }
            }
        }
        for n in &rep.notes {
            say!("    note: {n}");
        }
    }
    say!("{} checks, {} failed", total, failed);
    Ok(passed)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
    }
}
