//! Relation lists of the tied-monoid presentations and the conjugation and
//! action identities they are derived from, instantiated for a given `n`.

use serde::{Deserialize, Serialize};

use crate::tied::words;
use crate::tied::{Family, FamilyKind, Letter};

/// Range reading of quantifiers that admit two interpretations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum RangeMode {
    /// Every generator index is admissible, including `0` for (TB5).
    #[default]
    Strict,
    /// Only indices in `[n-1]`.
    Lenient,
}

/// One instantiated relation `lhs = rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub label: String,
    pub indices: Vec<(&'static str, i32)>,
    /// Position inside a split multi-term relation.
    pub part: Option<char>,
    pub lhs: Vec<Letter>,
    pub rhs: Vec<Letter>,
}

impl Relation {
    /// Unique identifier such as `T5[i=1,j=2](a)`.
    pub fn id(&self) -> String {
        let mut s = self.label.clone();
        if !self.indices.is_empty() {
            let idx: Vec<String> = self
                .indices
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect();
            s.push_str(&format!("[{}]", idx.join(",")));
        }
        if let Some(p) = self.part {
            s.push_str(&format!("({p})"));
        }
        s
    }

    /// A relation is tied when one of its sides contains a partition letter.
    pub fn is_tied(&self) -> bool {
        self.lhs.iter().chain(&self.rhs).any(Letter::is_partition)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationSuite {
    pub name: String,
    pub family: Family,
    pub relations: Vec<Relation>,
    pub notes: Vec<String>,
}

impl RelationSuite {
    fn new(name: String, family: Family) -> RelationSuite {
        RelationSuite {
            name,
            family,
            relations: Vec::new(),
            notes: Vec::new(),
        }
    }

    /// Adds `sides[0] = sides[1] = ...`, split into consecutive pairs.
    fn add(&mut self, label: &str, indices: &[(&'static str, i32)], sides: Vec<Vec<Letter>>) {
        let split = sides.len() > 2;
        for (k, w) in sides.windows(2).enumerate() {
            self.relations.push(Relation {
                label: label.to_string(),
                indices: indices.to_vec(),
                part: split.then(|| (b'a' + k as u8) as char),
                lhs: w[0].clone(),
                rhs: w[1].clone(),
            });
        }
    }

    /// Adds independent equalities sharing a label and index tuple, tagged `(a)`, `(b)`, ...
    fn add_each(
        &mut self,
        label: &str,
        indices: &[(&'static str, i32)],
        pairs: Vec<(Vec<Letter>, Vec<Letter>)>,
    ) {
        for (k, (lhs, rhs)) in pairs.into_iter().enumerate() {
            self.relations.push(Relation {
                label: label.to_string(),
                indices: indices.to_vec(),
                part: Some((b'a' + k as u8) as char),
                lhs,
                rhs,
            });
        }
    }

    pub fn labels(&self) -> Vec<String> {
        let mut out: Vec<String> = Vec::new();
        for r in &self.relations {
            if !out.contains(&r.label) {
                out.push(r.label.clone());
            }
        }
        out
    }

    pub fn count(&self, label: &str) -> usize {
        self.relations.iter().filter(|r| r.label == label).count()
    }
}

fn s(i: i32) -> Letter {
    Letter::sigma(i)
}
fn si(i: i32) -> Letter {
    Letter::sigma_inv(i)
}
fn t(i: i32) -> Letter {
    Letter::Tau(i)
}
fn v(i: i32) -> Letter {
    Letter::Nu(i)
}
fn e(i: i32) -> Letter {
    Letter::Eta(i)
}
fn m(i: i32, j: i32) -> Letter {
    Letter::Mu(i, j)
}
fn th(i: i32) -> Letter {
    Letter::Theta(i)
}
fn ep(i: i32, j: i32) -> Letter {
    Letter::Eps(i, j)
}
fn tb(i: i32) -> Letter {
    Letter::theta_bar(i)
}

// Builders are only called with indices satisfying 1 <= i < j.
fn a(i: i32, j: i32) -> Vec<Letter> {
    words::a(i, j).expect("valid indices")
}
fn abar(i: i32, j: i32) -> Vec<Letter> {
    words::abar(i, j).expect("valid indices")
}
fn b(i: i32, j: i32) -> Vec<Letter> {
    words::b(i, j).expect("valid indices")
}
fn bbar(i: i32, j: i32) -> Vec<Letter> {
    words::bbar(i, j).expect("valid indices")
}
fn d(k: i32) -> Vec<Letter> {
    words::d(k).expect("valid index")
}
fn dbar(k: i32) -> Vec<Letter> {
    words::dbar(k).expect("valid index")
}
fn cap(k: i32) -> Vec<Letter> {
    words::theta_cap(k).expect("valid index")
}
fn capbar(k: i32) -> Vec<Letter> {
    words::theta_cap_bar(k).expect("valid index")
}
fn inv(w: &[Letter]) -> Vec<Letter> {
    words::inv(w)
}

macro_rules! cat {
    ($($x:expr),* $(,)?) => {{
        let mut v: Vec<Letter> = Vec::new();
        $( v.extend_from_slice(&$x); )*
        v
    }};
}

fn adjacent(i: i32, j: i32) -> bool {
    (i - j).abs() == 1
}

/// `(k,k+1) = (i,j)` or `{k,k+1} ∩ {i,j} = ∅`.
fn fixes(k: i32, i: i32, j: i32) -> bool {
    (i, j) == (k, k + 1) || (i != k && i != k + 1 && j != k && j != k + 1)
}

/// Plain index pairs `1 <= i < j <= n`.
fn pairs(n: i32) -> impl Iterator<Item = (i32, i32)> {
    (1..=n).flat_map(move |i| (i + 1..=n).map(move |j| (i, j)))
}

/// Signed pairs `(i,j)` with `i != 0` and `|i| < j <= n`.
fn signed_pairs(n: i32) -> impl Iterator<Item = (i32, i32)> {
    (2..=n).flat_map(move |j| (-(j - 1)..j).filter(|&i| i != 0).map(move |i| (i, j)))
}

type Gen = (&'static str, fn(i32) -> Letter);

fn z_letters(kind: FamilyKind) -> Vec<Gen> {
    let mut z: Vec<Gen> = vec![("s", s)];
    if kind.has_tau() {
        z.push(("t", t));
    }
    if kind.has_nu() {
        z.push(("v", v));
    }
    z
}

fn y_letters(kind: FamilyKind) -> Vec<Gen> {
    z_letters(kind)
        .into_iter()
        .filter(|(name, _)| *name != "s")
        .collect()
}

/// Every relation of the presentation of `family`, instantiated over all
/// legal index tuples.
pub fn relation_suite(family: Family, mode: RangeMode) -> RelationSuite {
    let mut suite = RelationSuite::new(format!("tied:{}", family.kind), family);
    let n = family.n as i32;
    match family.kind {
        FamilyKind::BraidA => {
            braid_a(&mut suite, n);
            tied_a(&mut suite, n);
        }
        FamilyKind::SingularA => {
            braid_a(&mut suite, n);
            singular(&mut suite, n);
            tied_a(&mut suite, n);
            tied_singular(&mut suite, n);
        }
        FamilyKind::VirtualA => {
            braid_a(&mut suite, n);
            virtual_(&mut suite, n);
            tied_a(&mut suite, n);
            tied_virtual(&mut suite, n);
        }
        FamilyKind::VirtualSingularA => {
            braid_a(&mut suite, n);
            singular(&mut suite, n);
            virtual_(&mut suite, n);
            virtual_singular(&mut suite, n);
            tied_a(&mut suite, n);
            tied_singular(&mut suite, n);
            tied_virtual(&mut suite, n);
        }
        FamilyKind::BraidB => {
            braid_b(&mut suite, n);
            tied_b(&mut suite, n, mode);
        }
        FamilyKind::BraidD => {
            braid_d(&mut suite, n);
            tied_d(&mut suite, n);
        }
    }
    if family.kind.is_type_a() {
        suite
            .notes
            .push("the prose of the presentation names (T1) to (T5) but the displayed list ends with (T6); (T6) is included".into());
    }
    suite
}

fn braid_a(s_: &mut RelationSuite, n: i32) {
    for i in 1..n {
        s_.add(
            "B0",
            &[("i", i)],
            vec![vec![s(i), si(i)], vec![si(i), s(i)], vec![]],
        );
    }
    for i in 1..n {
        for j in i + 1..n {
            if adjacent(i, j) {
                s_.add(
                    "B1",
                    &[("i", i), ("j", j)],
                    vec![vec![s(i), s(j), s(i)], vec![s(j), s(i), s(j)]],
                );
            } else {
                s_.add(
                    "B2",
                    &[("i", i), ("j", j)],
                    vec![vec![s(i), s(j)], vec![s(j), s(i)]],
                );
            }
        }
    }
}

fn tied_a(s_: &mut RelationSuite, n: i32) {
    for i in 1..n {
        s_.add("T1", &[("i", i)], vec![vec![e(i), e(i)], vec![e(i)]]);
    }
    for i in 1..n {
        for j in i..n {
            s_.add(
                "T2",
                &[("i", i), ("j", j)],
                vec![vec![e(i), e(j)], vec![e(j), e(i)]],
            );
        }
    }
    for i in 1..n {
        for j in 1..n {
            if adjacent(i, j) {
                s_.add(
                    "T3",
                    &[("i", i), ("j", j)],
                    vec![vec![e(i), s(j), s(i)], vec![s(j), s(i), e(j)]],
                );
            }
        }
    }
    for i in 1..n {
        for j in 1..n {
            if !adjacent(i, j) {
                s_.add(
                    "T4",
                    &[("i", i), ("j", j)],
                    vec![vec![s(i), e(j)], vec![e(j), s(i)]],
                );
            }
        }
    }
    for i in 1..n {
        for j in 1..n {
            if adjacent(i, j) {
                let idx = [("i", i), ("j", j)];
                s_.add(
                    "T5",
                    &idx,
                    vec![
                        vec![e(i), e(j), s(i)],
                        vec![e(j), s(i), e(j)],
                        vec![s(i), e(i), e(j)],
                    ],
                );
                s_.add(
                    "T6",
                    &idx,
                    vec![vec![e(i), s(j), si(i)], vec![s(j), si(i), e(j)]],
                );
            }
        }
    }
}

fn singular(s_: &mut RelationSuite, n: i32) {
    for i in 1..n {
        for j in i + 2..n {
            s_.add(
                "S1",
                &[("i", i), ("j", j)],
                vec![vec![t(i), t(j)], vec![t(j), t(i)]],
            );
        }
    }
    for i in 1..n {
        for j in 1..n {
            let idx = [("i", i), ("j", j)];
            if adjacent(i, j) {
                s_.add(
                    "S3",
                    &idx,
                    vec![vec![t(i), s(j), s(i)], vec![s(j), s(i), t(j)]],
                );
            } else {
                s_.add("S2", &idx, vec![vec![t(i), s(j)], vec![s(j), t(i)]]);
            }
        }
    }
}

fn tied_singular(s_: &mut RelationSuite, n: i32) {
    for i in 1..n {
        for j in 1..n {
            let idx = [("i", i), ("j", j)];
            if !adjacent(i, j) {
                s_.add("TS1", &idx, vec![vec![t(i), e(j)], vec![e(j), t(i)]]);
                continue;
            }
            s_.add(
                "TS2",
                &idx,
                vec![vec![e(i), t(j), t(i)], vec![t(j), t(i), e(j)]],
            );
            s_.add(
                "TS3",
                &idx,
                vec![vec![e(i), t(j), s(i)], vec![t(j), s(i), e(j)]],
            );
            s_.add(
                "TS4",
                &idx,
                vec![vec![e(i), s(j), t(i)], vec![s(j), t(i), e(j)]],
            );
            s_.add(
                "TS5",
                &idx,
                vec![vec![t(i), e(j)], vec![s(i), e(j), si(i), t(i)]],
            );
            s_.add(
                "TS6",
                &idx,
                vec![
                    vec![e(i), e(j), t(i)],
                    vec![e(j), t(i), e(j)],
                    vec![t(i), e(i), e(j)],
                ],
            );
        }
    }
}

fn virtual_(s_: &mut RelationSuite, n: i32) {
    for i in 1..n {
        s_.add("V1", &[("i", i)], vec![vec![v(i), v(i)], vec![]]);
    }
    for i in 1..n {
        for j in i + 1..n {
            let idx = [("i", i), ("j", j)];
            if adjacent(i, j) {
                s_.add(
                    "V2",
                    &idx,
                    vec![vec![v(i), v(j), v(i)], vec![v(j), v(i), v(j)]],
                );
            } else {
                s_.add("V3", &idx, vec![vec![v(i), v(j)], vec![v(j), v(i)]]);
            }
        }
    }
    for i in 1..n {
        for j in 1..n {
            let idx = [("i", i), ("j", j)];
            if adjacent(i, j) {
                s_.add(
                    "V4",
                    &idx,
                    vec![vec![s(i), v(j), v(i)], vec![v(j), v(i), s(j)]],
                );
            } else if i != j {
                s_.add("V5", &idx, vec![vec![s(i), v(j)], vec![v(j), s(i)]]);
            }
        }
    }
}

fn tied_virtual(s_: &mut RelationSuite, n: i32) {
    for i in 1..n {
        for j in 1..n {
            let idx = [("i", i), ("j", j)];
            if !adjacent(i, j) {
                s_.add("TV5", &idx, vec![vec![e(i), v(j)], vec![v(j), e(i)]]);
                continue;
            }
            s_.add(
                "TV1",
                &idx,
                vec![vec![e(i), v(j), v(i)], vec![v(j), v(i), e(j)]],
            );
            s_.add(
                "TV2",
                &idx,
                vec![vec![e(i), v(j), s(i)], vec![v(j), s(i), e(j)]],
            );
            s_.add(
                "TV3",
                &idx,
                vec![vec![e(i), s(j), v(i)], vec![s(j), v(i), e(j)]],
            );
            s_.add(
                "TV4",
                &idx,
                vec![vec![v(i), e(j)], vec![s(i), e(j), si(i), v(i)]],
            );
            s_.add(
                "TV6",
                &idx,
                vec![
                    vec![e(i), e(j), v(i)],
                    vec![e(j), v(i), e(j)],
                    vec![v(i), e(i), e(j)],
                ],
            );
        }
    }
}

fn virtual_singular(s_: &mut RelationSuite, n: i32) {
    for i in 1..n {
        for j in 1..n {
            let idx = [("i", i), ("j", j)];
            if adjacent(i, j) {
                s_.add(
                    "VS1",
                    &idx,
                    vec![vec![v(i), v(j), t(i)], vec![t(j), v(i), v(j)]],
                );
            } else if (i - j).abs() >= 2 {
                s_.add("VS2", &idx, vec![vec![v(i), t(j)], vec![t(j), v(i)]]);
            }
        }
    }
}

fn braid_b(s_: &mut RelationSuite, n: i32) {
    for i in 0..n {
        s_.add(
            "BB0",
            &[("i", i)],
            vec![vec![s(i), si(i)], vec![si(i), s(i)], vec![]],
        );
    }
    s_.add(
        "BB1",
        &[],
        vec![vec![s(0), s(1), s(0), s(1)], vec![s(1), s(0), s(1), s(0)]],
    );
    for i in 1..n {
        for j in i + 1..n {
            let idx = [("i", i), ("j", j)];
            if adjacent(i, j) {
                s_.add(
                    "BB2",
                    &idx,
                    vec![vec![s(i), s(j), s(i)], vec![s(j), s(i), s(j)]],
                );
            } else {
                s_.add("BB3", &idx, vec![vec![s(i), s(j)], vec![s(j), s(i)]]);
            }
        }
    }
}

fn tied_b(s_: &mut RelationSuite, n: i32, mode: RangeMode) {
    for i in 0..n {
        s_.add("TB1", &[("i", i)], vec![vec![th(i), th(i)], vec![th(i)]]);
    }
    for i in 0..n {
        for j in i..n {
            s_.add(
                "TB2",
                &[("i", i), ("j", j)],
                vec![vec![th(i), th(j)], vec![th(j), th(i)]],
            );
        }
    }
    s_.add(
        "TB3",
        &[("r", 1)],
        vec![vec![th(0), s(1), s(0), s(1)], vec![s(1), s(0), s(1), th(0)]],
    );
    s_.add(
        "TB3",
        &[("r", 2)],
        vec![vec![th(1), s(0), s(1), s(0)], vec![s(0), s(1), s(0), th(1)]],
    );
    for i in 1..n {
        for j in 1..n {
            if adjacent(i, j) {
                let idx = [("i", i), ("j", j)];
                s_.add(
                    "TB4",
                    &idx,
                    vec![vec![s(i), s(j), th(i)], vec![th(j), s(i), s(j)]],
                );
            }
        }
    }
    let lo = match mode {
        RangeMode::Strict => 0,
        RangeMode::Lenient => 1,
    };
    for i in lo..n {
        for j in lo..n {
            if !adjacent(i, j) {
                s_.add(
                    "TB5",
                    &[("i", i), ("j", j)],
                    vec![vec![s(i), th(j)], vec![th(j), s(i)]],
                );
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            if adjacent(i, j) {
                let idx = [("i", i), ("j", j)];
                s_.add(
                    "TB6",
                    &idx,
                    vec![
                        vec![th(i), th(j), s(i)],
                        vec![th(j), s(i), th(j)],
                        vec![s(i), th(i), th(j)],
                    ],
                );
            }
        }
    }
    s_.add(
        "TB7",
        &[("r", 1)],
        vec![
            vec![th(1), s(0), th(1), s(0)],
            vec![s(0), th(1), s(0), th(1)],
        ],
    );
    s_.add(
        "TB7",
        &[("r", 2)],
        vec![
            vec![th(0), s(1), th(0), s(1)],
            vec![s(1), th(0), s(1), th(0)],
        ],
    );
    s_.add(
        "TB8",
        &[("r", 1)],
        vec![vec![s(1), s(1), th(0)], vec![th(0), s(1), s(1)]],
    );
    s_.add(
        "TB8",
        &[("r", 2)],
        vec![vec![s(0), s(0), th(1)], vec![th(1), s(0), s(0)]],
    );
    for i in 1..n {
        for j in 1..n {
            if adjacent(i, j) {
                let idx = [("i", i), ("j", j)];
                s_.add(
                    "TB9",
                    &idx,
                    vec![vec![s(i), si(j), th(i)], vec![th(j), s(i), si(j)]],
                );
            }
        }
    }
    s_.notes.push(match mode {
        RangeMode::Strict => "(TB5) instantiated over all generator indices including 0".into(),
        RangeMode::Lenient => "(TB5) instantiated over indices in [n-1] only".into(),
    });
}

fn d_indices(n: i32) -> Vec<i32> {
    std::iter::once(-1).chain(1..n).collect()
}

fn braid_d(s_: &mut RelationSuite, n: i32) {
    for i in d_indices(n) {
        s_.add(
            "DB0",
            &[("i", i)],
            vec![vec![s(i), si(i)], vec![si(i), s(i)], vec![]],
        );
    }
    if n >= 3 {
        s_.add(
            "DB1",
            &[],
            vec![vec![s(-1), s(2), s(-1)], vec![s(2), s(-1), s(2)]],
        );
    } else {
        s_.notes.push("(DB1) needs n >= 3; omitted".into());
    }
    for i in 1..n {
        if i != 2 {
            s_.add(
                "DB2",
                &[("i", i)],
                vec![vec![s(-1), s(i)], vec![s(i), s(-1)]],
            );
        }
    }
    for i in 1..n {
        for j in i + 1..n {
            let idx = [("i", i), ("j", j)];
            if adjacent(i, j) {
                s_.add(
                    "DB3",
                    &idx,
                    vec![vec![s(i), s(j), s(i)], vec![s(j), s(i), s(j)]],
                );
            } else {
                s_.add("DB4", &idx, vec![vec![s(i), s(j)], vec![s(j), s(i)]]);
            }
        }
    }
}

fn tied_d(s_: &mut RelationSuite, n: i32) {
    let ix = d_indices(n);
    let abs_adj = |i: i32, j: i32| (i.abs() - j.abs()).abs() == 1;
    for &i in &ix {
        s_.add("TD1", &[("i", i)], vec![vec![th(i), th(i)], vec![th(i)]]);
    }
    for &i in &ix {
        for &j in ix.iter().filter(|&&j| j >= i) {
            s_.add(
                "TD2",
                &[("i", i), ("j", j)],
                vec![vec![th(i), th(j)], vec![th(j), th(i)]],
            );
        }
    }
    for &i in &ix {
        for &j in &ix {
            let idx = [("i", i), ("j", j)];
            if abs_adj(i, j) {
                s_.add(
                    "TD3",
                    &idx,
                    vec![vec![s(i), s(j), th(i)], vec![th(j), s(i), s(j)]],
                );
            } else {
                s_.add("TD4", &idx, vec![vec![s(i), th(j)], vec![th(j), s(i)]]);
            }
        }
    }
    for &i in &ix {
        for &j in &ix {
            if abs_adj(i, j) {
                let idx = [("i", i), ("j", j)];
                s_.add(
                    "TD5",
                    &idx,
                    vec![
                        vec![th(i), th(j), s(i)],
                        vec![th(j), s(i), th(j)],
                        vec![s(i), th(i), th(j)],
                    ],
                );
            }
        }
    }
    if n >= 4 {
        s_.add(
            "TD6",
            &[],
            vec![
                vec![th(-1), th(1), th(3), s(2), s(-1), s(1), s(2), th(3)],
                vec![th(-1), th(1), th(2), th(3), s(2), s(-1), s(1), s(2)],
            ],
        );
    } else {
        s_.notes.push("(TD6) needs n >= 4; omitted".into());
    }
    for &i in &ix {
        for &j in &ix {
            if abs_adj(i, j) {
                let idx = [("i", i), ("j", j)];
                s_.add(
                    "TD7",
                    &idx,
                    vec![vec![s(i), si(j), th(i)], vec![th(j), s(i), si(j)]],
                );
            }
        }
    }
    s_.notes.push("the presentation declares (TD1) to (TD7) while its proof mentions (TD8); the seven displayed relations are checked".into());
}

/// Action, conjugation and reachability identities of `family`.
pub fn lemma_identity_suites(family: Family) -> RelationSuite {
    let mut suite = RelationSuite::new(format!("identities:{}", family.kind), family);
    let n = family.n as i32;
    match family.kind {
        FamilyKind::BraidB => identities_b(&mut suite, n),
        FamilyKind::BraidD => identities_d(&mut suite, n),
        kind => identities_a(&mut suite, n, kind),
    }
    suite
}

fn identities_a(s_: &mut RelationSuite, n: i32, kind: FamilyKind) {
    for (zn, z) in z_letters(kind) {
        let lab = |base: &str| format!("{base}.{zn}");
        for (i, j) in pairs(n) {
            let idx = [("i", i), ("j", j)];
            if i + 1 < j {
                s_.add(
                    &lab("mu-commute-1"),
                    &idx,
                    vec![vec![m(i, j), z(i)], vec![z(i), m(i + 1, j)]],
                );
                s_.add(
                    &lab("mu-commute-3"),
                    &idx,
                    vec![vec![m(i + 1, j), z(i)], vec![z(i), m(i, j)]],
                );
            }
            if j < n {
                s_.add(
                    &lab("mu-commute-2"),
                    &idx,
                    vec![vec![m(i, j + 1), z(j)], vec![z(j), m(i, j)]],
                );
                s_.add(
                    &lab("mu-commute-4"),
                    &idx,
                    vec![vec![m(i, j), z(j)], vec![z(j), m(i, j + 1)]],
                );
            }
            for k in 1..n {
                if fixes(k, i, j) {
                    let idx = [("i", i), ("j", j), ("k", k)];
                    s_.add(
                        &lab("mu-commute-5"),
                        &idx,
                        vec![vec![m(i, j), z(k)], vec![z(k), m(i, j)]],
                    );
                }
            }
        }
        for i in 1..=n - 2 {
            let (j, k) = (i + 1, i + 2);
            let idx = [("i", i)];
            s_.add(
                &lab("mu-triple-1"),
                &idx,
                vec![
                    vec![m(i, j), m(j, k), z(i)],
                    vec![m(j, k), m(i, k), z(i)],
                    vec![m(i, j), m(i, k), z(i)],
                ],
            );
            s_.add(
                &lab("mu-triple-2"),
                &idx,
                vec![
                    vec![m(i, j), m(j, k), z(j)],
                    vec![m(i, j), m(i, k), z(j)],
                    vec![m(j, k), m(i, k), z(j)],
                ],
            );
            s_.add(
                &lab("mu-triple-3"),
                &idx,
                vec![
                    vec![m(i, j), m(j, k), z(i)],
                    vec![m(j, k), z(i), m(j, k)],
                    vec![z(i), m(i, j), m(j, k)],
                ],
            );
            s_.add(
                &lab("mu-triple-4"),
                &idx,
                vec![
                    vec![m(i, j), m(j, k), z(j)],
                    vec![m(i, j), z(j), m(i, j)],
                    vec![z(j), m(j, k), m(i, j)],
                ],
            );
        }
        for i in 1..n {
            for j in 1..n {
                if adjacent(i, j) {
                    s_.add(
                        &lab("eta-pair"),
                        &[("i", i), ("j", j)],
                        vec![
                            vec![e(i), e(j), z(i)],
                            vec![e(j), z(i), e(j)],
                            vec![z(i), e(i), e(j)],
                        ],
                    );
                }
            }
        }
    }

    for (i, j) in pairs(n) {
        let idx = [("i", i), ("j", j)];
        if j < n {
            s_.add(
                "mu-conj-1",
                &idx,
                vec![
                    vec![m(i, j + 1)],
                    vec![s(j), m(i, j), si(j)],
                    vec![si(j), m(i, j), s(j)],
                ],
            );
        }
        if i + 1 < j {
            s_.add(
                "mu-conj-2",
                &idx,
                vec![
                    vec![m(i, j)],
                    vec![si(i), m(i + 1, j), s(i)],
                    vec![s(i), m(i + 1, j), si(i)],
                ],
            );
        }
        let (aw, abw, bw, bbw) = (a(i, j), abar(i, j), b(i, j), bbar(i, j));
        s_.add(
            "mu-from-eta",
            &idx,
            vec![
                vec![m(i, j)],
                cat!(inv(&abw), [e(j - 1)], abw),
                cat!(bw, [e(i)], inv(&bw)),
                cat!(aw, [e(j - 1)], inv(&aw)),
                cat!(inv(&bbw), [e(i)], bbw),
            ],
        );
        for k in 1..n {
            if fixes(k, i, j) {
                s_.add(
                    "mu-from-eta-commute",
                    &[("i", i), ("j", j), ("k", k)],
                    vec![
                        cat!(aw, [e(j - 1)], inv(&aw), [s(k)]),
                        cat!([s(k)], aw, [e(j - 1)], inv(&aw)),
                    ],
                );
            }
        }
        let g = cat!(abar(1, i + 1), b(1, j));
        s_.add(
            "mu-reach-eta1",
            &idx,
            vec![vec![m(i, j)], cat!(g, [e(1)], inv(&g))],
        );
    }

    for i in 1..n {
        for j in 1..n {
            let idx = [("i", i), ("j", j)];
            if adjacent(i, j) {
                s_.add(
                    "eta-conj-1",
                    &idx,
                    vec![vec![s(i), s(j), e(i)], vec![e(j), s(i), s(j)]],
                );
                s_.add(
                    "eta-conj-2",
                    &idx,
                    vec![vec![s(i), si(j), e(i)], vec![e(j), s(i), si(j)]],
                );
            } else {
                s_.add("eta-conj-3", &idx, vec![vec![s(i), e(j)], vec![e(j), s(i)]]);
            }
        }
    }

    for (yn, y) in y_letters(kind) {
        let lab = |base: &str| format!("{base}.{yn}");
        for (i, j) in pairs(n) {
            let idx = [("i", i), ("j", j)];
            if i + 1 < j {
                let (u, w) = (bbar(i, j), b(i + 1, j));
                s_.add(
                    &lab("eta-y-1"),
                    &idx,
                    vec![cat!([e(i)], u, [y(i)], w), cat!(u, [y(i)], w, [e(i + 1)])],
                );
                let (u, w) = (bbar(i + 1, j), b(i, j));
                s_.add(
                    &lab("eta-y-3"),
                    &idx,
                    vec![cat!([e(i + 1)], u, [y(i)], w), cat!(u, [y(i)], w, [e(i)])],
                );
            }
            if j < n {
                let (u, w) = (abar(i, j + 1), a(i, j));
                s_.add(
                    &lab("eta-y-2"),
                    &idx,
                    vec![cat!([e(j)], u, [y(j)], w), cat!(u, [y(j)], w, [e(j - 1)])],
                );
                let (u, w) = (abar(i, j), a(i, j + 1));
                s_.add(
                    &lab("eta-y-4"),
                    &idx,
                    vec![cat!([e(j - 1)], u, [y(j)], w), cat!(u, [y(j)], w, [e(j)])],
                );
            }
            for k in 1..n {
                if fixes(k, i, j) {
                    let (u, w) = (abar(i, j), a(i, j));
                    s_.add(
                        &lab("eta-y-5"),
                        &[("i", i), ("j", j), ("k", k)],
                        vec![
                            cat!([e(j - 1)], u, [y(k)], w),
                            cat!(u, [y(k)], w, [e(j - 1)]),
                        ],
                    );
                }
            }
        }
        for i in 1..n {
            for j in 1..n {
                let idx = [("i", i), ("j", j)];
                if adjacent(i, j) {
                    s_.add(
                        &lab("eta-y-short-1"),
                        &idx,
                        vec![vec![e(i), s(j), y(i)], vec![s(j), y(i), e(j)]],
                    );
                    s_.add(
                        &lab("eta-y-short-2"),
                        &idx,
                        vec![vec![e(i), y(j), s(i)], vec![y(j), s(i), e(j)]],
                    );
                } else {
                    s_.add(
                        &lab("eta-y-short-3"),
                        &idx,
                        vec![vec![e(i), y(j)], vec![y(j), e(i)]],
                    );
                }
            }
        }
    }

    chain_identities(s_, n);
}

/// `(μ_{r1,r2}⋯μ_{r(k-1),rk}) μ_{i,j}` for increasing chains `r`.
fn chain_identities(s_: &mut RelationSuite, n: i32) {
    if n > 9 {
        s_.notes
            .push("chain identities are instantiated for n <= 9 only".into());
        return;
    }
    for mask in 0u32..(1 << n) {
        let r: Vec<i32> = (0..n)
            .filter(|b| mask >> b & 1 == 1)
            .map(|b| b + 1)
            .collect();
        if r.len() < 2 {
            continue;
        }
        let chain: Vec<Letter> = r.windows(2).map(|w| m(w[0], w[1])).collect();
        let (r1, rk, r2, rk1) = (r[0], r[r.len() - 1], r[1], r[r.len() - 2]);
        let k = r.len();
        // The chain is encoded by its decimal digits, e.g. 134 for (1,3,4).
        let rid = r.iter().fold(0, |acc, x| acc * 10 + x);
        for (i, j) in pairs(n) {
            let idx = [("r", rid), ("i", i), ("j", j)];
            let lhs = cat!(chain, [m(i, j)]);
            if i == r1 && j == rk {
                s_.add("mu-chain-1", &idx, vec![lhs.clone(), chain.clone()]);
            }
            if i < r1 && j == rk {
                s_.add(
                    "mu-chain-2",
                    &idx,
                    vec![lhs.clone(), cat!([m(i, r1)], chain)],
                );
            }
            if i == r1 && j > rk {
                s_.add(
                    "mu-chain-3",
                    &idx,
                    vec![lhs.clone(), cat!(chain, [m(rk, j)])],
                );
            }
            if r1 < i && i < r2 && j == rk {
                s_.add(
                    "mu-chain-4",
                    &idx,
                    vec![lhs.clone(), cat!([m(r1, i), m(i, r2)], chain[1..])],
                );
            }
            if i == r1 && rk1 < j && j < rk {
                s_.add(
                    "mu-chain-5",
                    &idx,
                    vec![lhs, cat!(chain[..k - 2], [m(rk1, j), m(j, rk)])],
                );
            }
        }
    }
}

/// Identities describing the action of `σ_k` on `ε_{i,j}` shared by types B and D.
fn eps_shift_identities(s_: &mut RelationSuite, n: i32, prefix: &str) {
    let lab = |x: &str| format!("{prefix}-{x}");
    for k in 1..n {
        for j in k + 2..=n {
            let idx = [("k", k), ("j", j)];
            s_.add_each(
                &lab("commute-1"),
                &idx,
                vec![
                    (vec![ep(-k, j), s(k)], vec![s(k), ep(-(k + 1), j)]),
                    (vec![ep(-(k + 1), j), s(k)], vec![s(k), ep(-k, j)]),
                ],
            );
            s_.add_each(
                &lab("commute-2"),
                &idx,
                vec![
                    (vec![ep(k + 1, j), s(k)], vec![s(k), ep(k, j)]),
                    (vec![ep(k, j), s(k)], vec![s(k), ep(k + 1, j)]),
                ],
            );
            s_.add(
                &lab("conj-1"),
                &idx,
                vec![
                    vec![ep(-(k + 1), j)],
                    vec![s(k), ep(-k, j), si(k)],
                    vec![si(k), ep(-k, j), s(k)],
                ],
            );
            s_.add(
                &lab("conj-2"),
                &idx,
                vec![
                    vec![ep(k + 1, j)],
                    vec![s(k), ep(k, j), si(k)],
                    vec![si(k), ep(k, j), s(k)],
                ],
            );
        }
        for i in (-(k - 1)..k).filter(|&i| i != 0) {
            let idx = [("i", i), ("k", k)];
            s_.add_each(
                &lab("commute-3"),
                &idx,
                vec![
                    (vec![ep(i, k + 1), s(k)], vec![s(k), ep(i, k)]),
                    (vec![ep(i, k), s(k)], vec![s(k), ep(i, k + 1)]),
                ],
            );
            s_.add(
                &lab("conj-3"),
                &idx,
                vec![
                    vec![ep(i, k + 1)],
                    vec![s(k), ep(i, k), si(k)],
                    vec![si(k), ep(i, k), s(k)],
                ],
            );
        }
    }
}

fn identities_b(s_: &mut RelationSuite, n: i32) {
    eps_shift_identities(s_, n, "eps");
    for k in 1..n {
        let idx = [("k", k)];
        s_.add_each(
            "eps-commute-4",
            &idx,
            vec![
                (vec![ep(-k, k), s(k)], vec![s(k), ep(-(k + 1), k + 1)]),
                (vec![ep(-(k + 1), k + 1), s(k)], vec![s(k), ep(-k, k)]),
            ],
        );
        s_.add(
            "eps-conj-4",
            &idx,
            vec![
                vec![ep(-(k + 1), k + 1)],
                vec![s(k), ep(-k, k), si(k)],
                vec![si(k), ep(-k, k), s(k)],
            ],
        );
    }
    for j in 2..=n {
        let idx = [("j", j)];
        s_.add_each(
            "eps-commute-5",
            &idx,
            vec![
                (vec![ep(-1, j), s(0)], vec![s(0), ep(1, j)]),
                (vec![ep(1, j), s(0)], vec![s(0), ep(-1, j)]),
            ],
        );
        s_.add(
            "eps-conj-5",
            &idx,
            vec![
                vec![ep(-1, j)],
                vec![s(0), ep(1, j), si(0)],
                vec![si(0), ep(1, j), s(0)],
            ],
        );
    }
    for (i, j) in signed_pairs(n) {
        let idx = [("i", i), ("j", j)];
        if i.abs() > 1 {
            s_.add(
                "eps-commute-5",
                &idx,
                vec![vec![ep(i, j), s(0)], vec![s(0), ep(i, j)]],
            );
        }
        for k in 1..n {
            if fixes(k, i.abs(), j) {
                s_.add(
                    "eps-commute-6",
                    &[("i", i), ("j", j), ("k", k)],
                    vec![vec![ep(i, j), s(k)], vec![s(k), ep(i, j)]],
                );
            }
        }
    }
    for i in 1..=n {
        for k in 0..n {
            if k == 0 || (i != k && i != k + 1) {
                s_.add(
                    "eps-commute-7",
                    &[("i", i), ("k", k)],
                    vec![vec![ep(-i, i), s(k)], vec![s(k), ep(-i, i)]],
                );
            }
        }
    }

    for (i, j) in pairs(n) {
        let idx = [("i", i), ("j", j)];
        let (aw, abw, bw, bbw) = (a(i, j), abar(i, j), b(i, j), bbar(i, j));
        s_.add(
            "eps-from-theta-1",
            &idx,
            vec![
                vec![ep(i, j)],
                cat!(aw, [th(j - 1)], inv(&aw)),
                cat!(inv(&abw), [th(j - 1)], abw),
            ],
        );
        s_.add(
            "eps-from-theta-2",
            &idx,
            vec![
                vec![ep(i, j)],
                cat!(bw, [th(i)], inv(&bw)),
                cat!(inv(&bbw), [th(i)], bbw),
            ],
        );
        s_.add(
            "eps-from-theta-3",
            &idx,
            vec![
                vec![ep(-i, j)],
                cat!(aw, [tb(j - 1)], inv(&aw)),
                cat!(inv(&abw), [tb(j - 1)], abw),
            ],
        );
        s_.add(
            "eps-from-theta-4",
            &idx,
            vec![
                vec![ep(-i, j)],
                cat!(bw, [tb(i)], inv(&bw)),
                cat!(inv(&bbw), [tb(i)], bbw),
            ],
        );
        s_.add(
            "eps-theta-1",
            &idx,
            vec![
                vec![ep(i, j)],
                cat!(aw, [th(j - 1)], inv(&aw)),
                cat!(inv(&bbw), [th(i)], bbw),
                cat!(inv(&abw), [th(j - 1)], abw),
                cat!(bw, [th(i)], inv(&bw)),
            ],
        );
        let (cj, ci) = (cap(j - 2), cap(i - 1));
        s_.add(
            "eps-theta-2",
            &idx,
            vec![
                vec![ep(-i, j)],
                cat!(aw, inv(&cj), [th(j - 1)], cj, inv(&aw)),
                cat!(inv(&bbw), ci, [th(i)], inv(&ci), bbw),
                cat!(inv(&abw), cj, [th(j - 1)], inv(&cj), abw),
                cat!(bw, inv(&ci), [th(i)], ci, inv(&bw)),
            ],
        );
        for k in 0..n {
            if fixes(k, i, j) {
                let kidx = [("i", i), ("j", j), ("k", k)];
                s_.add(
                    "eps-theta-4",
                    &kidx,
                    vec![
                        cat!(inv(&abw), [th(j - 1)], abw, [s(k)]),
                        cat!([s(k)], aw, [th(j - 1)], inv(&aw)),
                    ],
                );
                s_.add(
                    "eps-theta-5",
                    &kidx,
                    vec![
                        cat!(inv(&abw), cj, [th(j - 1)], inv(&cj), abw, [s(k)]),
                        cat!([s(k)], aw, inv(&cj), [th(j - 1)], cj, inv(&aw)),
                    ],
                );
            }
        }
        let g = cat!(d(i), b(1, j));
        s_.add(
            "eps-reach-theta-1",
            &idx,
            vec![vec![ep(i, j)], cat!(g, [th(1)], inv(&g))],
        );
        s_.add(
            "eps-reach-theta-2",
            &idx,
            vec![vec![ep(-i, j)], cat!(g, [s(0), th(1), si(0)], inv(&g))],
        );
        s_.add_each(
            "zero-pair-conj",
            &idx,
            vec![
                (
                    vec![ep(-i, j), ep(i, j)],
                    cat!(g, [ep(-1, 2), ep(1, 2)], inv(&g)),
                ),
                (
                    vec![ep(-i, i), ep(-j, j)],
                    cat!(g, [ep(-1, 1), ep(-2, 2)], inv(&g)),
                ),
            ],
        );
    }

    for k in 1..=n {
        let idx = [("k", k)];
        let (dk, dbk) = (d(k), dbar(k));
        s_.add(
            "eps-from-theta-5",
            &idx,
            vec![
                vec![Letter::VarEps(-k, k)],
                cat!(dk, [th(0)], inv(&dk)),
                cat!(inv(&dbk), [th(0)], dbk),
            ],
        );
        s_.add(
            "eps-theta-3",
            &idx,
            vec![
                vec![ep(-k, k)],
                cat!(dk, [th(0)], inv(&dk)),
                cat!(inv(&dbk), [th(0)], dbk),
            ],
        );
        s_.add(
            "eps-reach-theta-3",
            &[("k", k)],
            vec![vec![ep(-k, k)], cat!(dk, [th(0)], inv(&dk))],
        );
        for kk in 0..n {
            if kk == 0 || (k != kk && k != kk + 1) {
                s_.add(
                    "eps-theta-6",
                    &[("i", k), ("k", kk)],
                    vec![
                        cat!(inv(&dbk), [th(0)], dbk, [s(kk)]),
                        cat!([s(kk)], dk, [th(0)], inv(&dk)),
                    ],
                );
            }
        }
    }

    for k in 1..n {
        let c = cap(k - 1);
        s_.add(
            "theta-bar-conj",
            &[("k", k)],
            vec![
                vec![tb(k)],
                cat!(c, [th(k)], inv(&c)),
                cat!(inv(&c), [th(k)], c),
            ],
        );
    }

    for i in 1..n {
        for j in 1..n {
            if adjacent(i, j) {
                let idx = [("i", i), ("j", j)];
                s_.add(
                    "theta-sigma-1",
                    &idx,
                    vec![vec![th(i), si(j), s(i)], vec![si(j), s(i), th(j)]],
                );
                s_.add(
                    "theta-sigma-2",
                    &idx,
                    vec![vec![s(i), s(i), th(j)], vec![th(j), s(i), s(i)]],
                );
            }
        }
    }

    s_.add(
        "zero-pair",
        &[],
        vec![
            vec![ep(-1, 1), ep(1, 2)],
            vec![ep(-1, 1), ep(-1, 2)],
            vec![ep(-1, 2), ep(1, 2)],
            vec![ep(-1, 2), ep(-2, 2)],
            vec![ep(1, 2), ep(-2, 2)],
            vec![ep(-1, 1), ep(-2, 2)],
        ],
    );
}

fn identities_d(s_: &mut RelationSuite, n: i32) {
    eps_shift_identities(s_, n, "eps-d");
    for j in 3..=n {
        let idx = [("j", j)];
        s_.add_each(
            "eps-d-commute-4",
            &idx,
            vec![
                (vec![ep(-1, j), s(-1)], vec![s(-1), ep(2, j)]),
                (vec![ep(1, j), s(-1)], vec![s(-1), ep(-2, j)]),
            ],
        );
        s_.add_each(
            "eps-d-commute-5",
            &idx,
            vec![
                (vec![ep(-2, j), s(-1)], vec![s(-1), ep(1, j)]),
                (vec![ep(2, j), s(-1)], vec![s(-1), ep(-1, j)]),
            ],
        );
        s_.add(
            "eps-d-conj-4",
            &idx,
            vec![
                vec![ep(-1, j)],
                vec![s(-1), ep(2, j), si(-1)],
                vec![si(-1), ep(2, j), s(-1)],
            ],
        );
        s_.add(
            "eps-d-conj-5",
            &idx,
            vec![
                vec![ep(-2, j)],
                vec![s(-1), ep(1, j), si(-1)],
                vec![si(-1), ep(1, j), s(-1)],
            ],
        );
    }
    let ks = d_indices(n);
    for (i, j) in signed_pairs(n) {
        for &k in &ks {
            if fixes(k.abs(), i.abs(), j) {
                s_.add(
                    "eps-d-commute-6",
                    &[("i", i), ("j", j), ("k", k)],
                    vec![vec![ep(i, j), s(k)], vec![s(k), ep(i, j)]],
                );
            }
        }
    }

    for (i, j) in pairs(n) {
        let idx = [("i", i), ("j", j)];
        let (aw, abw, bw, bbw) = (a(i, j), abar(i, j), b(i, j), bbar(i, j));
        s_.add(
            "eps-d-from-theta-1",
            &idx,
            vec![
                vec![ep(i, j)],
                cat!(aw, [th(j - 1)], inv(&aw)),
                cat!(inv(&abw), [th(j - 1)], abw),
            ],
        );
        s_.add(
            "eps-d-from-theta-2",
            &idx,
            vec![
                vec![ep(i, j)],
                cat!(bw, [th(i)], inv(&bw)),
                cat!(inv(&bbw), [th(i)], bbw),
            ],
        );
        s_.add(
            "eps-d-from-theta-3",
            &idx,
            vec![
                vec![ep(-i, j)],
                cat!(aw, [tb(j - 1)], inv(&aw)),
                cat!(inv(&abw), [tb(j - 1)], abw),
            ],
        );
        s_.add(
            "eps-d-from-theta-4",
            &idx,
            vec![
                vec![ep(-i, j)],
                cat!(bw, [tb(i)], inv(&bw)),
                cat!(inv(&bbw), [tb(i)], bbw),
            ],
        );
        s_.add(
            "eps-d-theta-1",
            &idx,
            vec![
                vec![ep(i, j)],
                cat!(aw, [th(j - 1)], inv(&aw)),
                cat!(inv(&bbw), [th(i)], bbw),
                cat!(inv(&abw), [th(j - 1)], abw),
                cat!(bw, [th(i)], inv(&bw)),
            ],
        );
        if i >= 2 {
            let (cj, ci) = (capbar(j - 2), capbar(i - 1));
            s_.add(
                "eps-d-theta-2",
                &idx,
                vec![
                    vec![ep(-i, j)],
                    cat!(aw, inv(&cj), [th(j - 1)], cj, inv(&aw)),
                    cat!(inv(&bbw), ci, [th(i)], inv(&ci), bbw),
                    cat!(inv(&abw), cj, [th(j - 1)], inv(&cj), abw),
                    cat!(bw, inv(&ci), [th(i)], ci, inv(&bw)),
                ],
            );
        }
        for &k in &ks {
            if fixes(k.abs(), i, j) {
                let kidx = [("i", i), ("j", j), ("k", k)];
                s_.add(
                    "eps-d-theta-4",
                    &kidx,
                    vec![
                        cat!(inv(&abw), [th(j - 1)], abw, [s(k)]),
                        cat!([s(k)], aw, [th(j - 1)], inv(&aw)),
                    ],
                );
                if j >= 3 {
                    let cj = capbar(j - 2);
                    s_.add(
                        "eps-d-theta-5",
                        &kidx,
                        vec![
                            cat!(inv(&abw), cj, [th(j - 1)], inv(&cj), abw, [s(k)]),
                            cat!([s(k)], aw, inv(&cj), [th(j - 1)], cj, inv(&aw)),
                        ],
                    );
                }
            }
        }
    }

    for j in 3..=n {
        let idx = [("j", j)];
        let (b2, ab2) = (b(2, j), abar(2, j));
        s_.add(
            "eps-d-from-theta-5",
            &idx,
            vec![
                vec![ep(-1, j)],
                cat!([s(-1)], b2, [th(2)], inv(&b2), [si(-1)]),
                cat!([si(-1)], inv(&ab2), [th(j - 1)], ab2, [s(-1)]),
            ],
        );
        let (b1, ab1) = (b(1, j), abar(1, j));
        s_.add(
            "eps-d-from-theta-6",
            &idx,
            vec![
                vec![ep(-2, j)],
                cat!([s(-1)], b1, [th(1)], inv(&b1), [si(-1)]),
                cat!([si(-1)], inv(&ab1), [th(j - 1)], ab1, [s(-1)]),
            ],
        );
        let (a1, bb1, cj) = (a(1, j), bbar(1, j), capbar(j - 2));
        s_.add(
            "eps-d-theta-3",
            &idx,
            vec![
                vec![ep(-1, j)],
                cat!(a1, inv(&cj), [th(j - 1)], cj, inv(&a1)),
                cat!(inv(&bb1), [th(-1)], bb1),
                cat!(inv(&ab1), cj, [th(j - 1)], inv(&cj), ab1),
                cat!(b1, [th(-1)], inv(&b1)),
            ],
        );
    }

    s_.add(
        "theta-bar-conj-d",
        &[("k", 1)],
        vec![vec![tb(1)], vec![th(-1)]],
    );
    for k in 2..n {
        let c = capbar(k - 1);
        s_.add(
            "theta-bar-conj-d",
            &[("k", k)],
            vec![
                vec![tb(k)],
                cat!(c, [th(k)], inv(&c)),
                cat!(inv(&c), [th(k)], c),
            ],
        );
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tied::{format_word, EqOutcome, TiedElement};
    use std::collections::HashSet;

    fn fam(kind: FamilyKind, n: usize) -> Family {
        Family::new(kind, n).unwrap()
    }

    fn outcome(f: Family, r: &Relation) -> EqOutcome {
        let l = TiedElement::normalize(f, &r.lhs).unwrap();
        let rr = TiedElement::normalize(f, &r.rhs).unwrap();
        l.eq_modulo(&rr).unwrap()
    }

    #[test]
    fn braid_a_three_counts() {
        let s = relation_suite(fam(FamilyKind::BraidA, 3), RangeMode::Strict);
        assert_eq!(s.count("T1"), 2);
        assert_eq!(s.count("T2"), 3);
        assert_eq!(s.count("T3"), 2);
        assert_eq!(s.count("T4"), 2);
        assert_eq!(s.count("T5"), 4);
        assert_eq!(s.count("T6"), 2);
        assert_eq!(s.count("B1"), 1);
        assert_eq!(s.count("B2"), 0);
        assert_eq!(s.labels(), ["B0", "B1", "T1", "T2", "T3", "T4", "T5", "T6"]);
    }

    #[test]
    fn braid_b_two_has_tb3_tb7_tb8() {
        let s = relation_suite(fam(FamilyKind::BraidB, 2), RangeMode::Strict);
        let tb3 = s.relations.iter().find(|r| r.label == "TB3").unwrap();
        assert_eq!(format_word(&tb3.lhs), "th0 s1 s0 s1");
        assert_eq!(format_word(&tb3.rhs), "s1 s0 s1 th0");
        assert_eq!(s.count("TB7"), 2);
        assert_eq!(s.count("TB8"), 2);
        let lenient = relation_suite(fam(FamilyKind::BraidB, 2), RangeMode::Lenient);
        assert!(lenient.count("TB5") < s.count("TB5"));
    }

    #[test]
    fn braid_d_td6_depends_on_n() {
        let s4 = relation_suite(fam(FamilyKind::BraidD, 4), RangeMode::Strict);
        assert_eq!(s4.count("TD6"), 1);
        let s3 = relation_suite(fam(FamilyKind::BraidD, 3), RangeMode::Strict);
        assert_eq!(s3.count("TD6"), 0);
        assert!(s3.notes.iter().any(|n| n.contains("TD6")));
    }

    #[test]
    fn ids_are_unique() {
        for kind in FamilyKind::ALL {
            let f = fam(kind, 4);
            for suite in [
                relation_suite(f, RangeMode::Strict),
                lemma_identity_suites(f),
            ] {
                let mut seen = HashSet::new();
                for r in &suite.relations {
                    assert!(
                        seen.insert(r.id()),
                        "duplicate {} in {}",
                        r.id(),
                        suite.name
                    );
                }
            }
        }
    }

    #[test]
    fn letters_are_legal() {
        for kind in FamilyKind::ALL {
            let f = fam(kind, 5);
            for suite in [
                relation_suite(f, RangeMode::Strict),
                lemma_identity_suites(f),
            ] {
                for r in &suite.relations {
                    for l in r.lhs.iter().chain(&r.rhs) {
                        f.check_letter(l)
                            .unwrap_or_else(|e| panic!("{} {}: {e}", suite.name, r.id()));
                    }
                }
            }
        }
    }

    #[test]
    fn documented_identity_examples() {
        let b = fam(FamilyKind::BraidB, 3);
        let ids = lemma_identity_suites(b);
        let r = ids
            .relations
            .iter()
            .find(|r| {
                r.label == "eps-from-theta-5" && r.indices == [("k", 2)] && r.part == Some('a')
            })
            .unwrap();
        assert_eq!(r.lhs, vec![Letter::VarEps(-2, 2)]);
        assert_eq!(r.rhs, vec![s(1), th(0), si(1)]);
        assert_eq!(outcome(b, r), EqOutcome::Equal);
        let r = ids
            .relations
            .iter()
            .find(|r| r.label == "theta-bar-conj" && r.indices == [("k", 1)])
            .unwrap();
        assert_eq!(format_word(&r.rhs), "s0 th1 s0'");
        let a = fam(FamilyKind::BraidA, 3);
        let ids = lemma_identity_suites(a);
        let r = ids
            .relations
            .iter()
            .find(|r| r.label == "mu-from-eta" && r.indices == [("i", 1), ("j", 2)])
            .unwrap();
        assert_eq!(r.rhs, vec![e(1)]);
        assert_eq!(outcome(a, r), EqOutcome::Equal);
    }

    #[test]
    fn chain_cases_are_instantiated() {
        let s = lemma_identity_suites(fam(FamilyKind::BraidA, 4));
        for c in 1..=5 {
            assert!(s.count(&format!("mu-chain-{c}")) > 0, "case {c}");
        }
    }
}
