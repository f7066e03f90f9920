//! Free commutative monoid words over `μ_{i,j}` alphabets, reduced rewrite
//! systems and their normal form.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::hash::Hash;

use crate::error::{parse_err, Error, Result};
use crate::partition::{mu_pair, Ground, SetPartition};

/// Order on pair symbols: `μ_{i,j} < μ_{r,s}` iff `j < s`, or `j = s` and `i > r`.
pub fn symbol_order(a: (i32, i32), b: (i32, i32)) -> Ordering {
    a.1.cmp(&b.1).then(b.0.cmp(&a.0))
}

/// An ordered alphabet of pair symbols `μ_{i,j}` with `i < j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    symbols: Vec<(i32, i32)>,
}

impl Alphabet {
    pub fn from_pairs(pairs: impl IntoIterator<Item = (i32, i32)>) -> Alphabet {
        let mut symbols: Vec<(i32, i32)> = pairs.into_iter().collect();
        symbols.sort_by(|&a, &b| symbol_order(a, b));
        symbols.dedup();
        Alphabet { symbols }
    }

    /// All pairs `i < j` drawn from `elements`.
    pub fn pairs_of(elements: &[i32]) -> Alphabet {
        let mut e = elements.to_vec();
        e.sort_unstable();
        e.dedup();
        let pairs = e
            .iter()
            .enumerate()
            .flat_map(|(a, &i)| e[a + 1..].iter().map(move |&j| (i, j)));
        Alphabet::from_pairs(pairs)
    }

    /// `U_n`, the generators of `P_n`.
    pub fn plain(n: usize) -> Alphabet {
        Alphabet::pairs_of(&Ground::Plain(n).elements())
    }

    /// `U_{±n}`, the generators of `P_{±n}`.
    pub fn signed(n: usize) -> Alphabet {
        Alphabet::pairs_of(&Ground::Signed(n).elements())
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Symbols in increasing order.
    pub fn symbols(&self) -> &[(i32, i32)] {
        &self.symbols
    }

    pub fn index_of(&self, pair: (i32, i32)) -> Option<usize> {
        self.symbols
            .binary_search_by(|&s| symbol_order(s, pair))
            .ok()
    }

    pub fn filter(&self, keep: impl Fn((i32, i32)) -> bool) -> Alphabet {
        Alphabet {
            symbols: self.symbols.iter().copied().filter(|&s| keep(s)).collect(),
        }
    }
}

/// An element of the free commutative monoid, stored as its exponent vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CommWord {
    exps: Vec<u32>,
}

impl CommWord {
    pub fn one(len: usize) -> CommWord {
        CommWord { exps: vec![0; len] }
    }

    pub fn from_exponents(exps: Vec<u32>) -> CommWord {
        CommWord { exps }
    }

    pub fn from_symbols(alphabet: &Alphabet, symbols: &[(i32, i32)]) -> Result<CommWord> {
        let mut w = CommWord::one(alphabet.len());
        for &s in symbols {
            let k = alphabet.index_of(s).ok_or_else(|| {
                Error::Usage(format!("m({},{}) is not in the alphabet", s.0, s.1))
            })?;
            w.exps[k] += 1;
        }
        Ok(w)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Indices of symbols with nonzero exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(k, _)| k)
    }

    fn check(&self, other: &CommWord) -> Result<()> {
        if self.exps.len() != other.exps.len() {
            return Err(Error::AlphabetMismatch);
        }
        Ok(())
    }

    pub fn mul(&self, other: &CommWord) -> Result<CommWord> {
        self.check(other)?;
        Ok(CommWord {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    /// True when `self` divides `g`.
    pub fn divides(&self, g: &CommWord) -> Result<bool> {
        self.check(g)?;
        Ok(self.exps.iter().zip(&g.exps).all(|(h, g)| h <= g))
    }

    /// `self · h⁻¹`, defined when `h` divides `self`.
    pub fn quotient(&self, h: &CommWord) -> Result<CommWord> {
        if !h.divides(self)? {
            return Err(Error::NotDivisible(format!("{:?}", h.exps)));
        }
        Ok(CommWord {
            exps: self.exps.iter().zip(&h.exps).map(|(g, h)| g - h).collect(),
        })
    }

    /// Right lexicographic comparison: the largest symbol with differing
    /// exponents decides.
    pub fn compare(&self, other: &CommWord) -> Result<Ordering> {
        self.check(other)?;
        for k in (0..self.exps.len()).rev() {
            match self.exps[k].cmp(&other.exps[k]) {
                Ordering::Equal => continue,
                o => return Ok(o),
            }
        }
        Ok(Ordering::Equal)
    }

    /// Renders as `m(1,2)^2 m(2,3)`; the empty word is `1`.
    pub fn display(&self, alphabet: &Alphabet) -> String {
        let parts: Vec<String> = self
            .support()
            .map(|k| {
                let (i, j) = alphabet.symbols()[k];
                match self.exps[k] {
                    1 => format!("m({i},{j})"),
                    e => format!("m({i},{j})^{e}"),
                }
            })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join(" ")
        }
    }

    /// Parses the text form produced by [`CommWord::display`]. Error positions
    /// are 1-based token indices.
    pub fn parse(alphabet: &Alphabet, text: &str) -> Result<CommWord> {
        let mut w = CommWord::one(alphabet.len());
        for (pos, tok) in text.split_whitespace().enumerate() {
            let pos = pos + 1;
            if tok == "1" {
                continue;
            }
            let (base, exp) = match tok.split_once('^') {
                Some((b, e)) => (
                    b,
                    e.parse::<u32>()
                        .map_err(|_| parse_err(pos, format!("bad exponent in '{tok}'")))?,
                ),
                None => (tok, 1),
            };
            let inner = base
                .strip_prefix("m(")
                .and_then(|s| s.strip_suffix(')'))
                .ok_or_else(|| parse_err(pos, format!("expected m(i,j), found '{tok}'")))?;
            let (i, j) = inner
                .split_once(',')
                .and_then(|(a, b)| {
                    Some((a.trim().parse::<i32>().ok()?, b.trim().parse::<i32>().ok()?))
                })
                .ok_or_else(|| parse_err(pos, format!("expected m(i,j), found '{tok}'")))?;
            let k = alphabet
                .index_of((i, j))
                .ok_or_else(|| parse_err(pos, format!("m({i},{j}) is not in the alphabet")))?;
            w.exps[k] += exp;
        }
        Ok(w)
    }

    /// Evaluates the word in the partition monoid by joining `μ` factors.
    pub fn evaluate(&self, alphabet: &Alphabet, ground: Ground) -> Result<SetPartition> {
        let mut p = SetPartition::identity(ground);
        for k in self.support() {
            let (i, j) = alphabet.symbols()[k];
            p = p.join(&mu_pair(ground, i, j)?)?;
        }
        Ok(p)
    }
}

/// All words of total degree at most `d` over `len` symbols.
pub fn words_up_to_degree(len: usize, d: u32) -> Vec<CommWord> {
    fn rec(k: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<CommWord>) {
        if k == cur.len() {
            out.push(CommWord::from_exponents(cur.clone()));
            return;
        }
        for e in 0..=left {
            cur[k] = e;
            rec(k + 1, left - e, cur, out);
        }
        cur[k] = 0;
    }
    let mut out = Vec::new();
    rec(0, d, &mut vec![0; len], &mut out);
    out
}

/// An ordered list of rules `(a_i, b_i)` read as `a_i → b_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RewriteSystem {
    rules: Vec<(CommWord, CommWord)>,
    violation: Option<String>,
}

impl RewriteSystem {
    pub fn new(rules: Vec<(CommWord, CommWord)>) -> RewriteSystem {
        let violation = reduced_violation(&rules);
        RewriteSystem { rules, violation }
    }

    pub fn rules(&self) -> &[(CommWord, CommWord)] {
        &self.rules
    }

    pub fn is_reduced(&self) -> bool {
        self.violation.is_none()
    }

    /// Description of the first violated reducedness condition, if any.
    pub fn reduced_violation(&self) -> Option<&str> {
        self.violation.as_deref()
    }

    /// The canonical system `S` on the ordered set `elements`: squaring rules
    /// first, then `(μ_{i,j}μ_{i,k}, μ_{i,j}μ_{j,k})`, then
    /// `(μ_{i,k}μ_{j,k}, μ_{i,j}μ_{j,k})`, each family in lexicographic order.
    pub fn canonical(elements: &[i32]) -> (Alphabet, RewriteSystem) {
        let alphabet = Alphabet::pairs_of(elements);
        let mut e = elements.to_vec();
        e.sort_unstable();
        e.dedup();
        let w = |pairs: &[(i32, i32)]| CommWord::from_symbols(&alphabet, pairs).unwrap();
        let mut rules = Vec::new();
        for (a, &i) in e.iter().enumerate() {
            for &j in &e[a + 1..] {
                rules.push((w(&[(i, j), (i, j)]), w(&[(i, j)])));
            }
        }
        let mut triples = Vec::new();
        for (a, &i) in e.iter().enumerate() {
            for (b, &j) in e.iter().enumerate().skip(a + 1) {
                for &k in &e[b + 1..] {
                    triples.push((i, j, k));
                }
            }
        }
        for &(i, j, k) in &triples {
            rules.push((w(&[(i, j), (i, k)]), w(&[(i, j), (j, k)])));
        }
        for &(i, j, k) in &triples {
            rules.push((w(&[(i, k), (j, k)]), w(&[(i, j), (j, k)])));
        }
        (alphabet, RewriteSystem::new(rules))
    }

    /// `S` for `P_n`.
    pub fn canonical_plain(n: usize) -> (Alphabet, RewriteSystem) {
        RewriteSystem::canonical(&Ground::Plain(n).elements())
    }

    /// The normal form `N(g)`, always rewriting with the lowest-index
    /// applicable rule.
    pub fn normal_form(&self, g: &CommWord) -> Result<CommWord> {
        if let Some(v) = &self.violation {
            return Err(Error::NotReduced(v.clone()));
        }
        let mut cur = g.clone();
        'outer: loop {
            for (a, b) in &self.rules {
                if a.divides(&cur)? {
                    cur = cur.quotient(a)?.mul(b)?;
                    continue 'outer;
                }
            }
            return Ok(cur);
        }
    }

    /// All words divisible by no left-hand side. Requires a squaring rule for
    /// every symbol so that the set is finite.
    pub fn irreducibles(&self, alphabet: &Alphabet) -> Result<Vec<CommWord>> {
        let len = alphabet.len();
        for k in 0..len {
            let mut sq = CommWord::one(len);
            sq.exps[k] = 2;
            let mut covered = false;
            for (a, _) in &self.rules {
                if a.divides(&sq)? {
                    covered = true;
                    break;
                }
            }
            if !covered {
                let (i, j) = alphabet.symbols()[k];
                return Err(Error::MissingSquaringRule(format!("m({i},{j})")));
            }
        }
        let mut out = Vec::new();
        let mut cur = CommWord::one(len);
        self.irreducible_dfs(0, &mut cur, &mut out)?;
        Ok(out)
    }

    fn irreducible_dfs(&self, k: usize, cur: &mut CommWord, out: &mut Vec<CommWord>) -> Result<()> {
        for (a, _) in &self.rules {
            if a.divides(cur)? {
                return Ok(());
            }
        }
        if k == cur.exps.len() {
            out.push(cur.clone());
            return Ok(());
        }
        self.irreducible_dfs(k + 1, cur, out)?;
        cur.exps[k] = 1;
        self.irreducible_dfs(k + 1, cur, out)?;
        cur.exps[k] = 0;
        Ok(())
    }

    /// A pair of words from `words` with equal evaluation but different normal
    /// forms, if one exists.
    pub fn canonical_counterexample<T, F>(
        &self,
        words: &[CommWord],
        eval: F,
    ) -> Result<Option<(CommWord, CommWord)>>
    where
        T: Hash + Eq,
        F: Fn(&CommWord) -> T,
    {
        let mut seen: HashMap<T, (CommWord, CommWord)> = HashMap::new();
        for w in words {
            let nf = self.normal_form(w)?;
            match seen.get(&eval(w)) {
                Some((first, first_nf)) if *first_nf != nf => {
                    return Ok(Some((first.clone(), w.clone())))
                }
                Some(_) => {}
                None => {
                    seen.insert(eval(w), (w.clone(), nf));
                }
            }
        }
        Ok(None)
    }

    /// Checks that congruent words in `words` share a normal form, using
    /// `eval` into a concrete monoid to decide congruence.
    pub fn is_canonical_on<T, F>(&self, words: &[CommWord], eval: F) -> Result<bool>
    where
        T: Hash + Eq,
        F: Fn(&CommWord) -> T,
    {
        Ok(self.canonical_counterexample(words, eval)?.is_none())
    }

    /// Keeps the rules whose two sides only involve symbols accepted by `keep`
    /// (given as indices into the alphabet).
    pub fn restrict(&self, keep: impl Fn(usize) -> bool) -> RewriteSystem {
        let supported = |w: &CommWord| w.support().all(&keep);
        RewriteSystem::new(
            self.rules
                .iter()
                .filter(|(a, b)| supported(a) && supported(b))
                .cloned()
                .collect(),
        )
    }

    /// Restriction to the sub-alphabet `y`, re-indexed over `y`.
    pub fn restrict_to(&self, alphabet: &Alphabet, y: &Alphabet) -> RewriteSystem {
        let kept = self.restrict(|k| y.index_of(alphabet.symbols()[k]).is_some());
        let reindex = |w: &CommWord| {
            let mut out = CommWord::one(y.len());
            for k in w.support() {
                out.exps[y.index_of(alphabet.symbols()[k]).unwrap()] = w.exps[k];
            }
            out
        };
        RewriteSystem::new(
            kept.rules
                .iter()
                .map(|(a, b)| (reindex(a), reindex(b)))
                .collect(),
        )
    }
}

fn reduced_violation(rules: &[(CommWord, CommWord)]) -> Option<String> {
    for (i, (a, b)) in rules.iter().enumerate() {
        match b.compare(a) {
            Ok(Ordering::Less) => {}
            Ok(_) => {
                return Some(format!(
                    "rule {i}: right side is not smaller than left side"
                ))
            }
            Err(_) => return Some(format!("rule {i}: sides over different alphabets")),
        }
    }
    for (i, (ai, _)) in rules.iter().enumerate() {
        for (j, (aj, bj)) in rules.iter().enumerate() {
            if i != j && ai.divides(aj).unwrap_or(false) {
                return Some(format!(
                    "left side of rule {i} divides left side of rule {j}"
                ));
            }
            if ai.divides(bj).unwrap_or(false) {
                return Some(format!(
                    "left side of rule {i} divides right side of rule {j}"
                ));
            }
        }
    }
    None
}
