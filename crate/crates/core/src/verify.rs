//! Brute-force oracles and exhaustive checks: enumeration of partition
//! monoids, Froidure–Pin closure, presentation relations, action tables,
//! tied relation suites and finite tied quotients.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::hash::Hash;
use std::str::FromStr;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::coxeter::{GroupElement, GroupFamily};
use crate::error::{Error, Result};
use crate::partition::{eps_pair, mu_pair, Ground, SetPartition};
use crate::rewrite::{words_up_to_degree, Alphabet, CommWord, RewriteSystem};
use crate::suites::{lemma_identity_suites, relation_suite, RangeMode, RelationSuite};
use crate::tied::{EqOutcome, Family, FamilyKind, Letter, TiedElement};

pub const DEFAULT_MAX_ELEMENTS: usize = 1_000_000;

/// The concrete partition monoids.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Carrier {
    Pn,
    SPn,
    RSPn,
    PnB,
    PnD,
}

impl Carrier {
    pub const ALL: [Carrier; 5] = [
        Carrier::Pn,
        Carrier::SPn,
        Carrier::RSPn,
        Carrier::PnB,
        Carrier::PnD,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Carrier::Pn => "pn",
            Carrier::SPn => "spn",
            Carrier::RSPn => "rspn",
            Carrier::PnB => "pnb",
            Carrier::PnD => "pnd",
        }
    }

    pub fn ground(self, n: usize) -> Result<Ground> {
        match self {
            Carrier::Pn => Ground::plain(n),
            _ => Ground::signed(n),
        }
    }

    pub fn contains(self, p: &SetPartition) -> bool {
        let f = p.classify();
        match self {
            Carrier::Pn => !p.ground().is_signed(),
            Carrier::SPn => f.signed,
            Carrier::RSPn => f.restricted,
            Carrier::PnB => f.b_partition,
            Carrier::PnD => f.d_partition,
        }
    }

    /// Join in `P_n`, `SP_n`, `RSP_n`; `·_B` in `P_n^B`, `P_n^D`.
    pub fn product(self, p: &SetPartition, q: &SetPartition) -> Result<SetPartition> {
        match self {
            Carrier::PnB | Carrier::PnD => p.b_product(q),
            _ => p.join(q),
        }
    }

    /// The standard generating set: `μ_{i,j}` for `P_n`, `E_n` for `SP_n` and
    /// `P_n^B`, `E_n^×` for `RSP_n` and `P_n^D`. Duplicates are removed.
    pub fn generators(self, n: usize) -> Result<Vec<(String, SetPartition)>> {
        let g = self.ground(n)?;
        let mut out: Vec<(String, SetPartition)> = Vec::new();
        let elems = g.elements();
        for (a, &i) in elems.iter().enumerate() {
            for &j in &elems[a + 1..] {
                let (name, p) = match self {
                    Carrier::Pn => (format!("m({i},{j})"), mu_pair(g, i, j)?),
                    Carrier::SPn | Carrier::PnB => (format!("E({i},{j})"), eps_pair(g, i, j)?),
                    Carrier::RSPn | Carrier::PnD if j != -i => {
                        (format!("E({i},{j})"), eps_pair(g, i, j)?)
                    }
                    _ => continue,
                };
                if !out.iter().any(|(_, q)| *q == p) {
                    out.push((name, p));
                }
            }
        }
        Ok(out)
    }
}

impl fmt::Display for Carrier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Carrier {
    type Err = Error;

    fn from_str(s: &str) -> Result<Carrier> {
        Carrier::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Usage(format!("unknown monoid '{s}'")))
    }
}

/// Bell number `B(m)`, saturating.
pub fn bell(m: usize) -> u128 {
    let mut row = vec![1u128];
    for _ in 0..m {
        let mut next = vec![*row.last().unwrap()];
        for x in &row {
            let v = next.last().unwrap().saturating_add(*x);
            next.push(v);
        }
        row = next;
    }
    row[0]
}

/// Every set partition of `ground`, via restricted growth strings.
pub fn all_set_partitions(ground: Ground, cap: usize) -> Result<Vec<SetPartition>> {
    let size = ground.size();
    if bell(size) > cap as u128 {
        return Err(Error::SizeCap { cap });
    }
    let mut out = Vec::new();
    let mut labels = vec![0usize; size];
    fn rec(
        k: usize,
        max: usize,
        labels: &mut Vec<usize>,
        ground: Ground,
        out: &mut Vec<SetPartition>,
    ) {
        if k == labels.len() {
            out.push(SetPartition::from_labels(ground, labels));
            return;
        }
        for l in 0..=max + 1 {
            labels[k] = l;
            rec(k + 1, max.max(l), labels, ground, out);
        }
    }
    if size > 0 {
        rec(1, 0, &mut labels, ground, &mut out);
    }
    Ok(out)
}

/// All elements of `carrier` for the given `n`, sorted.
pub fn enumerate_partitions(carrier: Carrier, n: usize, cap: usize) -> Result<Vec<SetPartition>> {
    let mut out: Vec<SetPartition> = all_set_partitions(carrier.ground(n)?, cap)?
        .into_iter()
        .filter(|p| carrier.contains(p))
        .collect();
    out.sort();
    Ok(out)
}

/// A finite monoid produced by closure, with its right Cayley graph.
#[derive(Debug, Clone)]
pub struct EnumeratedMonoid<T> {
    pub elements: Vec<T>,
    /// `cayley[e][g]` is the index of `elements[e] · generator g`.
    pub cayley: Vec<Vec<usize>>,
    pub gen_names: Vec<String>,
}

impl<T> EnumeratedMonoid<T> {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// Breadth-first closure of `{identity} ∪ generators` under right
/// multiplication by generators.
pub fn froidure_pin<T, F>(
    identity: T,
    generators: &[(String, T)],
    product: F,
    cap: usize,
) -> Result<EnumeratedMonoid<T>>
where
    T: Clone + Eq + Hash,
    F: Fn(&T, &T) -> Result<T>,
{
    let mut elements = vec![identity.clone()];
    let mut index: HashMap<T, usize> = HashMap::from([(identity, 0)]);
    let mut cayley: Vec<Vec<usize>> = Vec::new();
    let mut k = 0;
    while k < elements.len() {
        let mut row = Vec::with_capacity(generators.len());
        for (_, g) in generators {
            let p = product(&elements[k], g)?;
            let idx = match index.get(&p) {
                Some(&i) => i,
                None => {
                    if elements.len() >= cap {
                        return Err(Error::SizeCap { cap });
                    }
                    elements.push(p.clone());
                    index.insert(p, elements.len() - 1);
                    elements.len() - 1
                }
            };
            row.push(idx);
        }
        cayley.push(row);
        k += 1;
    }
    Ok(EnumeratedMonoid {
        elements,
        cayley,
        gen_names: generators.iter().map(|(n, _)| n.clone()).collect(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

fn ser_indices<S: Serializer>(idx: &[(String, i64)], s: S) -> std::result::Result<S::Ok, S::Error> {
    let mut m = s.serialize_map(Some(idx.len()))?;
    for (k, v) in idx {
        m.serialize_entry(k, v)?;
    }
    m.end()
}

/// Outcome of one relation instance or aggregate check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub suite: String,
    pub relation: String,
    #[serde(serialize_with = "ser_indices")]
    pub indices: Vec<(String, i64)>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub records: Vec<CheckRecord>,
    pub notes: Vec<String>,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    fn new(suite: impl Into<String>) -> VerificationReport {
        VerificationReport {
            suite: suite.into(),
            records: Vec::new(),
            notes: Vec::new(),
            elapsed_ms: 0,
        }
    }

    fn record(
        &mut self,
        relation: impl Into<String>,
        indices: &[(&str, i64)],
        witness: Option<String>,
    ) {
        self.records.push(CheckRecord {
            suite: self.suite.clone(),
            relation: relation.into(),
            indices: indices.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            status: if witness.is_none() {
                Status::Pass
            } else {
                Status::Fail
            },
            witness,
        });
    }

    fn count(&mut self, relation: &str, indices: &[(&str, i64)], expected: usize, found: usize) {
        let w = (expected != found).then(|| format!("expected {expected}, found {found}"));
        self.record(relation, indices, w);
    }

    fn finish(mut self, start: Instant) -> VerificationReport {
        self.elapsed_ms = start.elapsed().as_millis() as u64;
        self
    }

    pub fn passed(&self) -> bool {
        self.records.iter().all(|r| r.status == Status::Pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(|r| r.status == Status::Fail)
    }

    pub fn pass_count(&self) -> usize {
        self.records
            .iter()
            .filter(|r| r.status == Status::Pass)
            .count()
    }
}

/// Compares the closure of the standard generators with brute-force
/// enumeration, and checks the size of the generating set.
pub fn check_generating(carrier: Carrier, n: usize, cap: usize) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut rep = VerificationReport::new(format!("generating:{carrier}"));
    let ni = [("n", n as i64)];
    let listed = enumerate_partitions(carrier, n, cap)?;
    let gens = carrier.generators(n)?;
    let ground = carrier.ground(n)?;
    let m = froidure_pin(
        SetPartition::identity(ground),
        &gens,
        |a, b| carrier.product(a, b),
        cap,
    )?;
    rep.count(
        "closure size = enumeration size",
        &ni,
        listed.len(),
        m.len(),
    );
    let closed: HashSet<&SetPartition> = m.elements.iter().collect();
    let same = listed.len() == closed.len() && listed.iter().all(|p| closed.contains(p));
    rep.record(
        "closure = enumeration",
        &ni,
        (!same).then(|| "element sets differ".to_string()),
    );
    let expected = match carrier {
        Carrier::Pn => n * (n - 1) / 2,
        Carrier::SPn | Carrier::PnB => n * n,
        Carrier::RSPn | Carrier::PnD => n * n - n,
    };
    rep.count("generating set size", &ni, expected, gens.len());
    Ok(rep.finish(start))
}

/// One instance of a partition-monoid relation, sides given as generator index pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidRelation {
    pub label: &'static str,
    pub indices: Vec<(&'static str, i32)>,
    pub part: Option<char>,
    pub lhs: Vec<(i32, i32)>,
    pub rhs: Vec<(i32, i32)>,
}

impl MonoidRelation {
    pub fn id(&self) -> String {
        let idx: Vec<String> = self
            .indices
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        let mut s = format!("{}[{}]", self.label, idx.join(","));
        if let Some(p) = self.part {
            s.push_str(&format!("({p})"));
        }
        s
    }
}

/// Partition-monoid presentations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Presentation {
    P,
    SP,
    PB,
    RP,
    RSP,
    /// The variant of `RSP` with generators restricted to `|i| <= j`.
    RSPReduced,
    PD,
}

impl Presentation {
    pub fn name(self) -> &'static str {
        match self {
            Presentation::P => "P",
            Presentation::SP => "SP",
            Presentation::PB => "PB",
            Presentation::RP => "RP",
            Presentation::RSP => "RSP",
            Presentation::RSPReduced => "RSP3a-d",
            Presentation::PD => "PD",
        }
    }

    pub fn ground(self, n: usize) -> Result<Ground> {
        match self {
            Presentation::P => Ground::plain(n),
            _ => Ground::signed(n),
        }
    }

    /// Value of the generator indexed by `(i, j)`.
    pub fn generator(self, n: usize, (i, j): (i32, i32)) -> Result<SetPartition> {
        let g = self.ground(n)?;
        match self {
            Presentation::P | Presentation::RP => mu_pair(g, i, j),
            _ => eps_pair(g, i, j),
        }
    }

    pub fn product(self, p: &SetPartition, q: &SetPartition) -> Result<SetPartition> {
        match self {
            Presentation::PB | Presentation::PD => p.b_product(q),
            _ => p.join(q),
        }
    }

    pub fn evaluate(self, n: usize, word: &[(i32, i32)]) -> Result<SetPartition> {
        let mut acc = SetPartition::identity(self.ground(n)?);
        for &pair in word {
            acc = self.product(&acc, &self.generator(n, pair)?)?;
        }
        Ok(acc)
    }
}

fn push_rel(
    out: &mut Vec<MonoidRelation>,
    label: &'static str,
    idx: &[(&'static str, i32)],
    sides: Vec<Vec<(i32, i32)>>,
) {
    let split = sides.len() > 2;
    for (k, w) in sides.windows(2).enumerate() {
        out.push(MonoidRelation {
            label,
            indices: idx.to_vec(),
            part: split.then(|| (b'a' + k as u8) as char),
            lhs: w[0].clone(),
            rhs: w[1].clone(),
        });
    }
}

/// Every instance of the relations of `pres` for the given `n`.
pub fn monoid_relations(pres: Presentation, n: usize) -> Result<Vec<MonoidRelation>> {
    let ground = pres.ground(n)?;
    let elems = ground.elements();
    let restricted = matches!(
        pres,
        Presentation::RP | Presentation::RSP | Presentation::PD
    );
    let ok = |i: i32, j: i32| !restricted || j != -i;
    let mut gens: Vec<(i32, i32)> = Vec::new();
    for (a, &i) in elems.iter().enumerate() {
        for &j in &elems[a + 1..] {
            if ok(i, j) {
                gens.push((i, j));
            }
        }
    }
    let (l1, l2, l3, l4) = match pres {
        Presentation::P => ("P1", "P2", "P3", ""),
        Presentation::SP => ("SP1", "SP2", "SP3", "SP4"),
        Presentation::PB => ("PB1", "PB2", "PB3", "PB5"),
        Presentation::RP => ("RP1", "RP2", "RP3", ""),
        Presentation::RSP => ("RSP1", "RSP2", "RSP3", "RSP4"),
        Presentation::PD => ("PD1", "PD2", "PD3", "PD4"),
        Presentation::RSPReduced => return Ok(rsp_reduced(n as i32)),
    };
    let mut out = Vec::new();
    for &(i, j) in &gens {
        push_rel(
            &mut out,
            l1,
            &[("i", i), ("j", j)],
            vec![vec![(i, j), (i, j)], vec![(i, j)]],
        );
    }
    for &(i, j) in &gens {
        for &(r, s) in &gens {
            push_rel(
                &mut out,
                l2,
                &[("i", i), ("j", j), ("r", r), ("s", s)],
                vec![vec![(i, j), (r, s)], vec![(r, s), (i, j)]],
            );
        }
    }
    for (a, &i) in elems.iter().enumerate() {
        for (b, &j) in elems.iter().enumerate().skip(a + 1) {
            for &k in &elems[b + 1..] {
                if !(ok(i, j) && ok(j, k) && ok(i, k)) {
                    continue;
                }
                let sides = vec![
                    vec![(i, j), (j, k)],
                    vec![(i, j), (i, k)],
                    vec![(i, k), (j, k)],
                ];
                let sides = if pres == Presentation::P {
                    vec![sides[0].clone(), sides[1].clone(), vec![(j, k), (i, k)]]
                } else {
                    sides
                };
                push_rel(&mut out, l3, &[("i", i), ("j", j), ("k", k)], sides);
            }
        }
    }
    if !l4.is_empty() {
        for &(i, j) in &gens {
            push_rel(
                &mut out,
                l4,
                &[("i", i), ("j", j)],
                vec![vec![(i, j)], vec![(-j, -i)]],
            );
        }
    }
    let n = n as i32;
    if pres == Presentation::PB {
        for i in 1..=n {
            for j in i + 1..=n {
                push_rel(
                    &mut out,
                    "PB4",
                    &[("i", i), ("j", j)],
                    vec![vec![(-i, i), (-j, j)], vec![(-i, j), (i, j)]],
                );
            }
        }
    }
    if pres == Presentation::PD {
        for quad in abs_distinct_quadruples(&elems) {
            let [a, b, c, d] = quad;
            let rhs = vec![(-a, b), (a, b), (b, c), (c, d)];
            let splits = [((a, b), (c, d)), ((a, c), (b, d)), ((a, d), (b, c))];
            for (t, ((i, j), (r, s))) in splits.into_iter().enumerate() {
                let lhs = vec![(-i, j), (i, j), (-r, s), (r, s)];
                out.push(MonoidRelation {
                    label: "PD5",
                    indices: vec![("a", a), ("b", b), ("c", c), ("d", d)],
                    part: Some((b'a' + t as u8) as char),
                    lhs,
                    rhs: rhs.clone(),
                });
            }
        }
    }
    Ok(out)
}

fn abs_distinct_quadruples(elems: &[i32]) -> Vec<[i32; 4]> {
    let mut out = Vec::new();
    let m = elems.len();
    for a in 0..m {
        for b in a + 1..m {
            for c in b + 1..m {
                for d in c + 1..m {
                    let q = [elems[a], elems[b], elems[c], elems[d]];
                    let abs: BTreeSet<i32> = q.iter().map(|x| x.abs()).collect();
                    if abs.len() == 4 {
                        out.push(q);
                    }
                }
            }
        }
    }
    out
}

fn rsp_reduced(n: i32) -> Vec<MonoidRelation> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                let idx = [("i", i), ("j", j), ("k", k)];
                push_rel(
                    &mut out,
                    "RSP3a",
                    &idx,
                    vec![
                        vec![(i, j), (j, k)],
                        vec![(i, j), (i, k)],
                        vec![(i, k), (j, k)],
                    ],
                );
                push_rel(
                    &mut out,
                    "RSP3b",
                    &idx,
                    vec![
                        vec![(-i, j), (j, k)],
                        vec![(-i, j), (-i, k)],
                        vec![(-i, k), (j, k)],
                    ],
                );
                push_rel(
                    &mut out,
                    "RSP3c",
                    &idx,
                    vec![
                        vec![(-i, j), (i, k)],
                        vec![(-j, k), (i, k)],
                        vec![(-i, j), (-j, k)],
                    ],
                );
                push_rel(
                    &mut out,
                    "RSP3d",
                    &idx,
                    vec![
                        vec![(i, j), (-i, k)],
                        vec![(i, j), (-j, k)],
                        vec![(-j, k), (-i, k)],
                    ],
                );
            }
        }
    }
    out
}

/// The presentations whose relations hold in `carrier`.
pub fn presentations_of(carrier: Carrier) -> &'static [Presentation] {
    match carrier {
        Carrier::Pn => &[Presentation::P],
        Carrier::SPn => &[Presentation::SP],
        Carrier::RSPn => &[
            Presentation::RP,
            Presentation::RSP,
            Presentation::RSPReduced,
        ],
        Carrier::PnB => &[Presentation::PB],
        Carrier::PnD => &[Presentation::PD],
    }
}

/// Evaluates every relation instance of the presentations of `carrier`.
pub fn check_monoid_relations(carrier: Carrier, n: usize) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut rep = VerificationReport::new(format!("relations:{carrier}"));
    for &pres in presentations_of(carrier) {
        let mut cache: HashMap<Vec<(i32, i32)>, SetPartition> = HashMap::new();
        let mut eval = |w: &Vec<(i32, i32)>| -> Result<SetPartition> {
            if let Some(p) = cache.get(w) {
                return Ok(p.clone());
            }
            let p = pres.evaluate(n, w)?;
            cache.insert(w.clone(), p.clone());
            Ok(p)
        };
        for r in monoid_relations(pres, n)? {
            let (l, rr) = (eval(&r.lhs)?, eval(&r.rhs)?);
            let mut idx: Vec<(&str, i64)> = vec![("n", n as i64)];
            idx.extend(r.indices.iter().map(|(k, v)| (*k, *v as i64)));
            let label = match r.part {
                Some(p) => format!("{}({p})", r.label),
                None => r.label.to_string(),
            };
            rep.record(
                label,
                &idx,
                (l != rr).then(|| format!("lhs = {l}, rhs = {rr}")),
            );
        }
    }
    Ok(rep.finish(start))
}

/// `(I ∪ J)^m`: repeatedly replace each block by the union of all blocks
/// meeting it, until the family of blocks is stable.
pub fn literal_join(i: &SetPartition, j: &SetPartition) -> Result<SetPartition> {
    if i.ground() != j.ground() {
        return Err(Error::GroundMismatch);
    }
    let mut blocks: Vec<BTreeSet<i32>> = i
        .blocks()
        .iter()
        .chain(j.blocks())
        .map(|b| b.iter().copied().collect())
        .collect();
    blocks.sort();
    blocks.dedup();
    loop {
        let mut next: Vec<BTreeSet<i32>> = blocks
            .iter()
            .map(|x| {
                blocks
                    .iter()
                    .filter(|y| !x.is_disjoint(y))
                    .flatten()
                    .copied()
                    .collect()
            })
            .collect();
        next.sort();
        next.dedup();
        if next == blocks {
            break;
        }
        blocks = next;
    }
    let blocks: Vec<Vec<i32>> = blocks
        .into_iter()
        .map(|b| b.into_iter().collect())
        .collect();
    SetPartition::from_blocks(i.ground(), &blocks)
}

/// The ⪯-least element of `within` above both `i` and `j`, if it exists.
pub fn least_upper_bound<'a>(
    i: &SetPartition,
    j: &SetPartition,
    within: &'a [SetPartition],
) -> Result<Option<&'a SetPartition>> {
    let mut uppers = Vec::new();
    for k in within {
        if i.refines(k)? && j.refines(k)? {
            uppers.push(k);
        }
    }
    let Some(&cand) = uppers.iter().max_by_key(|k| k.block_count()) else {
        return Ok(None);
    };
    for k in &uppers {
        if !cand.refines(k)? {
            return Ok(None);
        }
    }
    Ok(Some(cand))
}

fn pair_indices(len: usize, sample: Option<(usize, u64)>) -> Vec<(usize, usize)> {
    match sample {
        None => (0..len)
            .flat_map(|a| (0..len).map(move |b| (a, b)))
            .collect(),
        Some((count, seed)) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..count)
                .map(|_| (rng.gen_range(0..len), rng.gen_range(0..len)))
                .collect()
        }
    }
}

/// Union-find join against the literal iteration oracle over all set
/// partitions of `ground` (all pairs, or `sample` random pairs).
pub fn check_join_oracle(
    ground: Ground,
    sample: Option<(usize, u64)>,
    cap: usize,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut rep = VerificationReport::new("oracle:join");
    let all = all_set_partitions(ground, cap)?;
    let pairs = pair_indices(all.len(), sample);
    let mut witness = None;
    for &(a, b) in &pairs {
        let (x, y) = (&all[a], &all[b]);
        let (fast, slow) = (x.join(y)?, literal_join(x, y)?);
        if fast != slow {
            witness = Some(format!("{x} v {y}: union-find {fast}, literal {slow}"));
            break;
        }
    }
    let idx = [
        ("n", ground.n() as i64),
        ("signed", ground.is_signed() as i64),
        ("pairs", pairs.len() as i64),
    ];
    rep.record("join = literal iteration", &idx, witness);
    Ok(rep.finish(start))
}

/// The carrier product against the ⪯-least upper bound found by scanning the
/// carrier; for join carriers also against the literal iteration oracle.
pub fn check_min_upper_bound(
    carrier: Carrier,
    n: usize,
    sample: Option<(usize, u64)>,
    cap: usize,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut rep = VerificationReport::new(format!("upper-bound:{carrier}"));
    let all = enumerate_partitions(carrier, n, cap)?;
    let pairs = pair_indices(all.len(), sample);
    let mut lub_w = None;
    let mut lit_w = None;
    for &(a, b) in &pairs {
        let (x, y) = (&all[a], &all[b]);
        let prod = carrier.product(x, y)?;
        if lub_w.is_none() {
            match least_upper_bound(x, y, &all)? {
                Some(k) if *k == prod => {}
                Some(k) => lub_w = Some(format!("{x} * {y} = {prod}, least upper bound {k}")),
                None => lub_w = Some(format!("{x} * {y}: no least upper bound in {carrier}")),
            }
        }
        if lit_w.is_none() && !matches!(carrier, Carrier::PnB | Carrier::PnD) {
            let lit = literal_join(x, y)?;
            if lit != prod {
                lit_w = Some(format!("{x} * {y} = {prod}, literal {lit}"));
            }
        }
    }
    let idx = [("n", n as i64), ("pairs", pairs.len() as i64)];
    rep.record("product = least upper bound", &idx, lub_w);
    if !matches!(carrier, Carrier::PnB | Carrier::PnD) {
        rep.record("product = literal iteration", &idx, lit_w);
    }
    Ok(rep.finish(start))
}

struct RowTally {
    checked: usize,
    witness: Option<String>,
}

fn tally(
    rows: &mut HashMap<String, RowTally>,
    order: &mut Vec<String>,
    row: String,
    ok: bool,
    w: impl FnOnce() -> String,
) {
    if !rows.contains_key(&row) {
        order.push(row.clone());
    }
    let t = rows.entry(row).or_insert(RowTally {
        checked: 0,
        witness: None,
    });
    t.checked += 1;
    if !ok && t.witness.is_none() {
        t.witness = Some(w());
    }
}

/// Every case row of the generator action tables on `μ_{i,j}` and `ε_{i,j}`,
/// checked against the computed action.
pub fn check_action_tables(n: usize) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut rep = VerificationReport::new("action-tables");
    let ni = n as i32;
    let mut rows: HashMap<String, RowTally> = HashMap::new();
    let mut order = Vec::new();

    let plain = Ground::plain(n)?;
    for k in 1..ni {
        let g = GroupElement::generator(GroupFamily::SymA, n, k)?;
        for i in 1..=ni {
            for j in i + 1..=ni {
                let claimed = if (i, j) == (k, k + 1)
                    || (![k, k + 1].contains(&i) && ![k, k + 1].contains(&j))
                {
                    (5, i, j)
                } else if i == k && k + 1 < j {
                    (1, i + 1, j)
                } else if i < k && j == k + 1 {
                    (2, i, j - 1)
                } else if i == k + 1 && k + 1 < j {
                    (3, i - 1, j)
                } else if i < k && j == k {
                    (4, i, j + 1)
                } else {
                    (0, 0, 0)
                };
                let actual = g.act(&mu_pair(plain, i, j)?)?;
                let (row, ok) = if claimed.0 == 0 {
                    ("s_k(m(i,j)) uncovered".to_string(), false)
                } else {
                    (
                        format!("s_k(m(i,j)) row {}", claimed.0),
                        actual == mu_pair(plain, claimed.1, claimed.2)?,
                    )
                };
                tally(&mut rows, &mut order, row, ok, || {
                    format!("k={k} i={i} j={j}: got {actual}")
                });
            }
        }
    }

    let signed = Ground::signed(n)?;
    let signed_pairs: Vec<(i32, i32)> = (1..=ni)
        .flat_map(|j| (-(j - 1)..j).filter(|&i| i != 0).map(move |i| (i, j)))
        .collect();
    for k in 1..ni {
        let g = GroupElement::generator(GroupFamily::SignedB, n, k)?;
        for &(i, j) in &signed_pairs {
            let mut claims: Vec<(u8, i32, i32)> = Vec::new();
            let kk = [k, k + 1];
            if (kk.contains(&i.abs()) && kk.contains(&j) && i.abs() != j)
                || (!kk.contains(&i.abs()) && !kk.contains(&j))
            {
                claims.push((5, i, j));
            } else {
                if (i == -k || i == k + 1) && i < j {
                    claims.push((1, i - 1, j));
                }
                if (i == -k - 1 || i == k) && i + 1 < j {
                    claims.push((2, i + 1, j));
                }
                if j == k + 1 && i + 1 < j {
                    claims.push((3, i, j - 1));
                }
                if j == k && i < j {
                    claims.push((4, i, j + 1));
                }
            }
            let actual = g.act(&eps_pair(signed, i, j)?)?;
            if claims.is_empty() {
                tally(
                    &mut rows,
                    &mut order,
                    "t_k(E(i,j)) uncovered".into(),
                    false,
                    || format!("k={k} i={i} j={j}"),
                );
            }
            for (row, a, b) in claims {
                let ok = actual == eps_pair(signed, a, b)?;
                tally(
                    &mut rows,
                    &mut order,
                    format!("t_k(E(i,j)) row {row}"),
                    ok,
                    || format!("k={k} i={i} j={j}: got {actual}"),
                );
            }
        }
        for i in 1..=ni {
            let (row, target) = if i == k {
                (1, i + 1)
            } else if i == k + 1 {
                (2, i - 1)
            } else {
                (3, i)
            };
            let actual = g.act(&eps_pair(signed, -i, i)?)?;
            let ok = actual == eps_pair(signed, -target, target)?;
            tally(
                &mut rows,
                &mut order,
                format!("t_k(E(-i,i)) row {row}"),
                ok,
                || format!("k={k} i={i}: got {actual}"),
            );
        }
    }

    let t0 = GroupElement::generator(GroupFamily::SignedB, n, 0)?;
    for &(i, j) in &signed_pairs {
        let actual = t0.act(&eps_pair(signed, i, j)?)?;
        let (row, target) = if i.abs() == 1 {
            (1, eps_pair(signed, -i, j)?)
        } else {
            (2, eps_pair(signed, i, j)?)
        };
        let ok = actual == target;
        tally(
            &mut rows,
            &mut order,
            format!("t_0(E(i,j)) row {row}"),
            ok,
            || format!("i={i} j={j}: got {actual}"),
        );
    }
    for i in 1..=ni {
        let p = eps_pair(signed, -i, i)?;
        let actual = t0.act(&p)?;
        tally(
            &mut rows,
            &mut order,
            "t_0(E(i,j)) row 3".into(),
            actual == p,
            || format!("i={i}: got {actual}"),
        );
    }

    if n >= 3 {
        let tm = GroupElement::generator(GroupFamily::EvenSignedD, n, -1)?;
        for &(i, j) in &signed_pairs {
            let actual = tm.act(&eps_pair(signed, i, j)?)?;
            let claim = if (i.abs() == 1 && j == 2) || (i.abs() > 2 && j > 2) {
                Some((3, i, j))
            } else if i.abs() == 1 && j > 2 {
                Some((1, -2 * i, j))
            } else if i.abs() == 2 && j > 2 {
                Some((2, -i / 2, j))
            } else {
                None
            };
            match claim {
                Some((row, a, b)) => {
                    let ok = actual == eps_pair(signed, a, b)?;
                    tally(
                        &mut rows,
                        &mut order,
                        format!("t_-1(E(i,j)) row {row}"),
                        ok,
                        || format!("i={i} j={j}: got {actual}"),
                    );
                }
                None => tally(
                    &mut rows,
                    &mut order,
                    "t_-1(E(i,j)) uncovered".into(),
                    false,
                    || format!("i={i} j={j}"),
                ),
            }
        }
    } else {
        rep.notes.push("t_-1 table needs n >= 3; skipped".into());
    }

    for row in order {
        let t = &rows[&row];
        rep.record(
            row.clone(),
            &[("n", n as i64), ("instances", t.checked as i64)],
            t.witness.clone(),
        );
    }
    Ok(rep.finish(start))
}

fn random_group_element(
    family: GroupFamily,
    n: usize,
    rng: &mut ChaCha8Rng,
) -> Result<GroupElement> {
    let gens = family.generator_indices(n);
    let len = rng.gen_range(0..12);
    let word: Vec<i32> = (0..len)
        .map(|_| *gens.choose(rng).expect("nonempty"))
        .collect();
    GroupElement::from_generators(family, n, &word)
}

/// `act(gh, I) = act(g, act(h, I))` on random triples.
pub fn check_action_homomorphism(
    family: GroupFamily,
    n: usize,
    samples: usize,
    seed: u64,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut rep = VerificationReport::new(format!("action-homomorphism:{family}"));
    let carrier = match family {
        GroupFamily::SymA => Carrier::Pn,
        GroupFamily::SignedB => Carrier::PnB,
        GroupFamily::EvenSignedD => Carrier::PnD,
    };
    let parts = enumerate_partitions(carrier, n, DEFAULT_MAX_ELEMENTS)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut witness = None;
    for _ in 0..samples {
        let g = random_group_element(family, n, &mut rng)?;
        let h = random_group_element(family, n, &mut rng)?;
        let p = parts.choose(&mut rng).expect("nonempty");
        let lhs = g.compose(&h)?.act(p)?;
        let rhs = g.act(&h.act(p)?)?;
        if lhs != rhs {
            witness = Some(format!("g={g} h={h} I={p}: {lhs} vs {rhs}"));
            break;
        }
    }
    rep.record(
        "act(gh,I) = act(g,act(h,I))",
        &[("n", n as i64), ("samples", samples as i64)],
        witness,
    );
    Ok(rep.finish(start))
}

fn suite_records(rep: &mut VerificationReport, suite: &RelationSuite) -> Result<()> {
    let f = suite.family;
    for r in &suite.relations {
        let l = TiedElement::normalize(f, &r.lhs)?;
        let rr = TiedElement::normalize(f, &r.rhs)?;
        let out = l.eq_modulo(&rr)?;
        let ok = match out {
            EqOutcome::Equal => true,
            EqOutcome::EqualUpToMWord => !r.is_tied(),
            EqOutcome::NotEqual => false,
        };
        let mut idx: Vec<(&str, i64)> = vec![("n", f.n as i64)];
        idx.extend(r.indices.iter().map(|(k, v)| (*k, *v as i64)));
        let label = match r.part {
            Some(p) => format!("{}({p})", r.label),
            None => r.label.clone(),
        };
        let w = (!ok).then(|| {
            format!(
                "{} => {} ; {} => {} ({:?})",
                crate::tied::format_word(&r.lhs),
                l,
                crate::tied::format_word(&r.rhs),
                rr,
                out
            )
        });
        rep.records.push(CheckRecord {
            suite: suite.name.clone(),
            relation: label,
            indices: idx.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            status: if ok { Status::Pass } else { Status::Fail },
            witness: w,
        });
    }
    rep.notes.extend(suite.notes.iter().cloned());
    Ok(())
}

/// The presentation relations and the derived identities of `family`.
/// Tied relations must be `Equal`; relations among monoid letters only need
/// equal Coxeter images.
pub fn check_tied_suites(family: Family, mode: RangeMode) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut rep = VerificationReport::new(format!("tied:{}", family.kind));
    suite_records(&mut rep, &relation_suite(family, mode))?;
    suite_records(&mut rep, &lemma_identity_suites(family))?;
    Ok(rep.finish(start))
}

/// The carrier of the idempotent factor of `family`.
pub fn idempotent_carrier(kind: FamilyKind) -> Carrier {
    match kind {
        FamilyKind::BraidB => Carrier::PnB,
        FamilyKind::BraidD => Carrier::PnD,
        _ => Carrier::Pn,
    }
}

type QuotientElement = (SetPartition, GroupElement);

fn quotient_product(
    family: &Family,
    x: &QuotientElement,
    y: &QuotientElement,
) -> Result<QuotientElement> {
    let p = family.product(&x.0, &x.1.act(&y.0)?)?;
    Ok((p, x.1.compose(&y.1)?))
}

fn quotient_letter(family: &Family, l: &Letter) -> Result<QuotientElement> {
    let id_g = GroupElement::identity(family.group_family(), family.n);
    if l.is_partition() {
        Ok((family.partition_value(l)?, id_g))
    } else {
        Ok((family.identity_partition(), family.coxeter_letter(l)?))
    }
}

fn monoid_letters(family: &Family) -> Vec<Letter> {
    let mut out: Vec<Letter> = family
        .sigma_indices()
        .into_iter()
        .map(Letter::sigma)
        .collect();
    for i in 1..family.n as i32 {
        if family.kind.has_tau() {
            out.push(Letter::Tau(i));
        }
        if family.kind.has_nu() {
            out.push(Letter::Nu(i));
        }
    }
    out
}

fn partition_letters(family: &Family) -> Vec<Letter> {
    if family.kind.is_type_a() {
        (1..family.n as i32).map(Letter::Eta).collect()
    } else {
        family
            .theta_indices()
            .into_iter()
            .map(Letter::Theta)
            .collect()
    }
}

/// Closure of the letter images in `P ⋊ W`, in breadth-first order.
pub fn enumerate_tied_quotient(
    family: Family,
    cap: usize,
) -> Result<EnumeratedMonoid<(SetPartition, GroupElement)>> {
    let letters: Vec<Letter> = monoid_letters(&family)
        .into_iter()
        .chain(partition_letters(&family))
        .collect();
    let gens: Vec<(String, QuotientElement)> = letters
        .iter()
        .map(|l| Ok((l.to_string(), quotient_letter(&family, l)?)))
        .collect::<Result<_>>()?;
    let identity = (
        family.identity_partition(),
        GroupElement::identity(family.group_family(), family.n),
    );
    froidure_pin(identity, &gens, |x, y| quotient_product(&family, x, y), cap)
}

/// The finite model `P ⋊ W` with the monoid replaced by its Coxeter image:
/// its size is `|P|·|W|`, and every relation of the family holds in it.
pub fn check_tied_quotient(
    family: Family,
    mode: RangeMode,
    cap: usize,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut rep = VerificationReport::new(format!("quotient:{}", family.kind));
    let identity = (
        family.identity_partition(),
        GroupElement::identity(family.group_family(), family.n),
    );
    let m = enumerate_tied_quotient(family, cap)?;
    let p_size = enumerate_partitions(idempotent_carrier(family.kind), family.n, cap)?.len();
    let w_size = family.group_family().order(family.n);
    rep.count(
        "|P x W| = |P| |W|",
        &[("n", family.n as i64)],
        p_size * w_size,
        m.len(),
    );

    let suite = relation_suite(family, mode);
    for r in &suite.relations {
        let eval = |w: &[Letter]| -> Result<QuotientElement> {
            let mut acc = identity.clone();
            for l in w {
                acc = quotient_product(&family, &acc, &quotient_letter(&family, l)?)?;
            }
            Ok(acc)
        };
        let (l, rr) = (eval(&r.lhs)?, eval(&r.rhs)?);
        let mut idx: Vec<(&str, i64)> = vec![("n", family.n as i64)];
        idx.extend(r.indices.iter().map(|(k, v)| (*k, *v as i64)));
        let label = match r.part {
            Some(p) => format!("{}({p})", r.label),
            None => r.label.clone(),
        };
        rep.record(
            label,
            &idx,
            (l != rr).then(|| format!("({}, {}) vs ({}, {})", l.0, l.1, rr.0, rr.1)),
        );
    }
    Ok(rep.finish(start))
}

/// Checks on the rewriting system `S` of `P_n`: reducedness, idempotence of
/// the normal form, the bijection between irreducible words and `P_n`,
/// canonicality on all words of degree at most 4, and, for `n <= 3`, that
/// restricting the system over `[±n]` yields (RP1)–(RP3).
pub fn check_rewrite(n: usize, cap: usize) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut rep = VerificationReport::new("rewrite");
    let ni = [("n", n as i64)];
    let ground = Ground::plain(n)?;
    let (alpha, sys) = RewriteSystem::canonical_plain(n);
    rep.record(
        "S is reduced",
        &ni,
        sys.reduced_violation().map(str::to_string),
    );
    if !sys.is_reduced() {
        return Ok(rep.finish(start));
    }

    let words = words_up_to_degree(alpha.len(), 4);
    let mut idem = None;
    for w in &words {
        let nf = sys.normal_form(w)?;
        if sys.normal_form(&nf)? != nf {
            idem = Some(format!("N(N({})) != N(..)", w.display(&alpha)));
            break;
        }
    }
    rep.record(
        "N is idempotent",
        &[("n", n as i64), ("words", words.len() as i64)],
        idem,
    );

    bijection_records(
        &mut rep,
        &sys,
        &alpha,
        ground,
        &enumerate_partitions(Carrier::Pn, n, cap)?,
        "P_n",
    )?;

    let cex = sys.canonical_counterexample(&words, |w| {
        w.evaluate(&alpha, ground).expect("alphabet over ground")
    })?;
    rep.record(
        "S is canonical on degree <= 4",
        &[("n", n as i64), ("words", words.len() as i64)],
        cex.map(|(a, b)| {
            format!(
                "{} and {} are congruent with different normal forms",
                a.display(&alpha),
                b.display(&alpha)
            )
        }),
    );

    if n <= 3 {
        restriction_records(&mut rep, n, cap)?;
    }
    Ok(rep.finish(start))
}

fn bijection_records(
    rep: &mut VerificationReport,
    sys: &RewriteSystem,
    alpha: &Alphabet,
    ground: Ground,
    target: &[SetPartition],
    what: &str,
) -> Result<()> {
    let ni = [("n", ground.n() as i64)];
    let irr = sys.irreducibles(alpha)?;
    rep.count(
        &format!("|irreducibles| = |{what}|"),
        &ni,
        target.len(),
        irr.len(),
    );
    let images: HashSet<SetPartition> = irr
        .iter()
        .map(|w| w.evaluate(alpha, ground))
        .collect::<Result<_>>()?;
    let bij = images.len() == irr.len()
        && target.iter().all(|p| images.contains(p))
        && images.len() == target.len();
    rep.record(
        format!("evaluation is a bijection onto {what}"),
        &ni,
        (!bij).then(|| {
            format!(
                "{} irreducibles, {} distinct images",
                irr.len(),
                images.len()
            )
        }),
    );
    Ok(())
}

fn restriction_records(rep: &mut VerificationReport, n: usize, cap: usize) -> Result<()> {
    let ground = Ground::signed(n)?;
    let ni = [("n", n as i64)];
    let (alpha, sys) = RewriteSystem::canonical(&ground.elements());
    let y = alpha.filter(|(i, j)| j != -i);
    let restricted = sys.restrict_to(&alpha, &y);
    rep.record(
        "restricted system is reduced",
        &ni,
        restricted.reduced_violation().map(str::to_string),
    );

    let w = |pairs: &[(i32, i32)]| CommWord::from_symbols(&y, pairs);
    let mut expected: BTreeSet<(Vec<u32>, Vec<u32>)> = BTreeSet::new();
    for r in monoid_relations(Presentation::RP, n)? {
        match r.label {
            "RP1" => {
                expected.insert((
                    w(&r.lhs)?.exponents().to_vec(),
                    w(&r.rhs)?.exponents().to_vec(),
                ));
            }
            "RP3" if r.part == Some('a') => {
                let (i, j) = r.lhs[0];
                let k = r.lhs[1].1;
                let chain = w(&[(i, j), (j, k)])?.exponents().to_vec();
                expected.insert((w(&[(i, j), (i, k)])?.exponents().to_vec(), chain.clone()));
                expected.insert((w(&[(i, k), (j, k)])?.exponents().to_vec(), chain));
            }
            _ => {}
        }
    }
    let got: BTreeSet<(Vec<u32>, Vec<u32>)> = restricted
        .rules()
        .iter()
        .map(|(a, b)| (a.exponents().to_vec(), b.exponents().to_vec()))
        .collect();
    rep.record(
        "restriction reproduces (RP1)-(RP3)",
        &ni,
        (got != expected).then(|| {
            format!(
                "{} rules, {} expected from (RP1)/(RP3)",
                got.len(),
                expected.len()
            )
        }),
    );

    let gens: Vec<(String, SetPartition)> = y
        .symbols()
        .iter()
        .map(|&(i, j)| Ok((format!("m({i},{j})"), mu_pair(ground, i, j)?)))
        .collect::<Result<_>>()?;
    let rp = froidure_pin(SetPartition::identity(ground), &gens, |a, b| a.join(b), cap)?;
    let (irr, images) = restricted_images(&restricted, &y, ground)?;
    rep.notes.push(format!(
        "n={n}: the restricted system has {irr} irreducible words with {images} distinct values; |RP_n| = {}. \
         (RP1)-(RP3) alone do not identify all words with equal values",
        rp.len()
    ));
    Ok(())
}

/// Number of irreducible words of `sys` over `alpha`, and of their distinct values.
pub fn restricted_images(
    sys: &RewriteSystem,
    alpha: &Alphabet,
    ground: Ground,
) -> Result<(usize, usize)> {
    let irr = sys.irreducibles(alpha)?;
    let images: HashSet<SetPartition> = irr
        .iter()
        .map(|w| w.evaluate(alpha, ground))
        .collect::<Result<_>>()?;
    Ok((irr.len(), images.len()))
}

#[cfg(test)]
mod tests {
    use super::*;

    const CAP: usize = DEFAULT_MAX_ELEMENTS;

    fn assert_pass(rep: &VerificationReport) {
        let f: Vec<_> = rep.failures().collect();
        assert!(f.is_empty(), "{}: {f:#?}", rep.suite);
        assert!(!rep.records.is_empty());
    }

    #[test]
    fn bell_numbers() {
        let b: Vec<u128> = (0..8).map(bell).collect();
        assert_eq!(b, [1, 1, 2, 5, 15, 52, 203, 877]);
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_partitions(Carrier::Pn, 3, CAP).unwrap().len(), 5);
        let b2 = enumerate_partitions(Carrier::PnB, 2, CAP).unwrap();
        assert_eq!(b2.len(), 6);
        let d2 = enumerate_partitions(Carrier::PnD, 2, CAP).unwrap();
        assert_eq!(d2.len(), 4);
        let two_zero: Vec<_> = b2.iter().filter(|p| !d2.contains(p)).collect();
        assert_eq!(two_zero.len(), 2);
        assert!(matches!(
            enumerate_partitions(Carrier::SPn, 4, 100),
            Err(Error::SizeCap { cap: 100 })
        ));
    }

    #[test]
    fn froidure_pin_examples() {
        let g = Ground::plain(2).unwrap();
        let m = froidure_pin(
            SetPartition::identity(g),
            &[("m".into(), mu_pair(g, 1, 2).unwrap())],
            |a, b| a.join(b),
            CAP,
        )
        .unwrap();
        assert_eq!(m.len(), 2);
        assert_eq!(m.cayley, vec![vec![1], vec![1]]);
        let s = Ground::signed(2).unwrap();
        let gens = Carrier::SPn.generators(2).unwrap();
        assert_eq!(gens.len(), 4);
        let m = froidure_pin(SetPartition::identity(s), &gens, |a, b| a.join(b), CAP).unwrap();
        assert_eq!(m.len(), 7);
        let gens = vec![
            ("a".to_string(), eps_pair(s, -1, 1).unwrap()),
            ("b".to_string(), eps_pair(s, 1, 2).unwrap()),
            ("c".to_string(), eps_pair(s, -1, 2).unwrap()),
            ("d".to_string(), eps_pair(s, -2, 2).unwrap()),
        ];
        let m = froidure_pin(SetPartition::identity(s), &gens, |a, b| a.b_product(b), CAP).unwrap();
        assert_eq!(m.len(), 6);
        assert!(froidure_pin(SetPartition::identity(s), &gens, |a, b| a.b_product(b), 3).is_err());
    }

    #[test]
    fn generating_examples() {
        assert_pass(&check_generating(Carrier::SPn, 2, CAP).unwrap());
        assert_pass(&check_generating(Carrier::Pn, 4, CAP).unwrap());
        assert_pass(&check_generating(Carrier::PnD, 3, CAP).unwrap());
    }

    #[test]
    fn relation_examples() {
        assert_pass(&check_monoid_relations(Carrier::Pn, 4).unwrap());
        let r = check_monoid_relations(Carrier::PnB, 3).unwrap();
        assert_pass(&r);
        assert!(r.records.iter().any(|c| c.relation == "PB4"));
        let r = check_monoid_relations(Carrier::PnD, 4).unwrap();
        assert_pass(&r);
        assert!(r.records.iter().any(|c| c.relation.starts_with("PD5")));
    }

    #[test]
    fn failing_count_has_witness() {
        let mut rep = VerificationReport::new("x");
        rep.count("size", &[("n", 2)], 3, 4);
        assert!(!rep.passed());
        assert_eq!(
            rep.records[0].witness.as_deref(),
            Some("expected 3, found 4")
        );
        let json = serde_json::to_value(&rep.records[0]).unwrap();
        assert_eq!(json["indices"]["n"], 2);
        assert_eq!(json["status"], "fail");
    }

    #[test]
    fn literal_join_examples() {
        let g = Ground::plain(4).unwrap();
        let a = SetPartition::parse(g, "{1,2;3,4}").unwrap();
        let b = SetPartition::parse(g, "{2,3}").unwrap();
        assert_eq!(literal_join(&a, &b).unwrap(), SetPartition::full(g));
        assert_eq!(literal_join(&a, &SetPartition::identity(g)).unwrap(), a);
    }

    #[test]
    fn upper_bound_examples() {
        let r = check_min_upper_bound(Carrier::Pn, 3, None, CAP).unwrap();
        assert_pass(&r);
        assert!(r.records[0].indices.contains(&("pairs".into(), 25)));
        let r = check_min_upper_bound(Carrier::PnB, 2, None, CAP).unwrap();
        assert_pass(&r);
        assert!(r.records[0].indices.contains(&("pairs".into(), 36)));
    }

    #[test]
    fn action_table_examples() {
        let r = check_action_tables(3).unwrap();
        assert_pass(&r);
        assert!(!r.records.iter().any(|c| c.relation.contains("uncovered")));
        let g = GroupElement::generator(GroupFamily::SymA, 3, 2).unwrap();
        let p = Ground::plain(3).unwrap();
        assert_eq!(
            g.act(&mu_pair(p, 1, 3).unwrap()).unwrap(),
            mu_pair(p, 1, 2).unwrap()
        );
    }

    #[test]
    fn tied_suite_examples() {
        assert_pass(
            &check_tied_suites(
                Family::new(FamilyKind::BraidA, 4).unwrap(),
                RangeMode::Strict,
            )
            .unwrap(),
        );
        assert_pass(
            &check_tied_suites(
                Family::new(FamilyKind::BraidB, 3).unwrap(),
                RangeMode::Strict,
            )
            .unwrap(),
        );
        let r = check_tied_suites(
            Family::new(FamilyKind::BraidD, 4).unwrap(),
            RangeMode::Strict,
        )
        .unwrap();
        assert_pass(&r);
        assert!(r.records.iter().any(|c| c.relation == "TD6"));
    }

    #[test]
    fn quotient_examples() {
        let r = check_tied_quotient(
            Family::new(FamilyKind::BraidA, 3).unwrap(),
            RangeMode::Strict,
            CAP,
        )
        .unwrap();
        assert_pass(&r);
        assert!(r.records.iter().any(|c| c.relation.starts_with("T5")));
        assert_pass(
            &check_tied_quotient(
                Family::new(FamilyKind::BraidB, 2).unwrap(),
                RangeMode::Strict,
                CAP,
            )
            .unwrap(),
        );
    }

    #[test]
    fn rewrite_checks() {
        let r = check_rewrite(3, CAP).unwrap();
        assert_pass(&r);
        assert!(r
            .records
            .iter()
            .any(|c| c.relation.starts_with("restriction reproduces")));
    }

    #[test]
    fn restricted_presentation_counts() {
        // Over [±2] no (RP3) instance exists, so the words are subsets of the four generators.
        let g = Ground::signed(2).unwrap();
        let (alpha, sys) = RewriteSystem::canonical(&g.elements());
        let y = alpha.filter(|(i, j)| j != -i);
        let restricted = sys.restrict_to(&alpha, &y);
        assert_eq!(restricted.rules().len(), 4);
        assert_eq!(restricted_images(&restricted, &y, g).unwrap(), (16, 12));
        let r = check_rewrite(3, CAP).unwrap();
        assert!(r
            .notes
            .iter()
            .any(|n| n.contains("253 irreducible words with 163 distinct values; |RP_n| = 163")));
    }
}
