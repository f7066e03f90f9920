//! Tied monoids `P ⋊ M`: letters of braid-like alphabets, free words with
//! formal inverses, and the normal form `(partition, word)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::coxeter::{GroupElement, GroupFamily};
use crate::error::{parse_err, Error, Result};
use crate::partition::{eps_pair, mu_pair, Ground, GroundLimits, SetPartition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FamilyKind {
    BraidA,
    SingularA,
    VirtualA,
    VirtualSingularA,
    BraidB,
    BraidD,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 6] = [
        FamilyKind::BraidA,
        FamilyKind::SingularA,
        FamilyKind::VirtualA,
        FamilyKind::VirtualSingularA,
        FamilyKind::BraidB,
        FamilyKind::BraidD,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::BraidA => "braid-a",
            FamilyKind::SingularA => "singular-a",
            FamilyKind::VirtualA => "virtual-a",
            FamilyKind::VirtualSingularA => "virtual-singular-a",
            FamilyKind::BraidB => "braid-b",
            FamilyKind::BraidD => "braid-d",
        }
    }

    pub fn group_family(self) -> GroupFamily {
        match self {
            FamilyKind::BraidB => GroupFamily::SignedB,
            FamilyKind::BraidD => GroupFamily::EvenSignedD,
            _ => GroupFamily::SymA,
        }
    }

    pub fn is_type_a(self) -> bool {
        self.group_family() == GroupFamily::SymA
    }

    pub fn has_tau(self) -> bool {
        matches!(self, FamilyKind::SingularA | FamilyKind::VirtualSingularA)
    }

    pub fn has_nu(self) -> bool {
        matches!(self, FamilyKind::VirtualA | FamilyKind::VirtualSingularA)
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<FamilyKind> {
        FamilyKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Usage(format!("unknown family '{s}'")))
    }
}

/// A tied-monoid family together with its strand count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Family {
    pub kind: FamilyKind,
    pub n: usize,
}

impl Family {
    pub fn new(kind: FamilyKind, n: usize) -> Result<Family> {
        Family::with_limits(kind, n, &GroundLimits::default())
    }

    pub fn with_limits(kind: FamilyKind, n: usize, limits: &GroundLimits) -> Result<Family> {
        match kind.group_family() {
            GroupFamily::SymA => Ground::plain_with(n, limits)?,
            _ => Ground::signed_with(n, limits)?,
        };
        Ok(Family { kind, n })
    }

    pub fn ground(&self) -> Ground {
        self.kind.group_family().ground(self.n)
    }

    pub fn group_family(&self) -> GroupFamily {
        self.kind.group_family()
    }

    /// Indices `i` for which `σ_i` is a generator.
    pub fn sigma_indices(&self) -> Vec<i32> {
        self.group_family().generator_indices(self.n)
    }

    /// Indices `i` for which `θ_i` is a generator (B and D only).
    pub fn theta_indices(&self) -> Vec<i32> {
        match self.kind {
            FamilyKind::BraidB | FamilyKind::BraidD => self.sigma_indices(),
            _ => Vec::new(),
        }
    }

    fn upper(&self) -> std::ops::Range<i32> {
        1..self.n as i32
    }

    pub fn identity_partition(&self) -> SetPartition {
        SetPartition::identity(self.ground())
    }

    /// Product of the idempotent factor: join in type A, `·_B` in types B, D.
    pub fn product(&self, p: &SetPartition, q: &SetPartition) -> Result<SetPartition> {
        if self.kind.is_type_a() {
            p.join(q)
        } else {
            p.b_product(q)
        }
    }

    fn illegal(&self, letter: &Letter) -> Error {
        Error::IllegalLetter {
            letter: letter.to_string(),
            family: format!("{} (n = {})", self.kind, self.n),
        }
    }

    /// Checks that `letter` belongs to this family's alphabet.
    pub fn check_letter(&self, letter: &Letter) -> Result<()> {
        let n = self.n as i32;
        let signed_pair =
            |i: i32, j: i32| i < j && i != 0 && j != 0 && i.abs() <= n && j.abs() <= n;
        let ok = match *letter {
            Letter::Sigma(i, _) => self.sigma_indices().contains(&i),
            Letter::Tau(i) => self.kind.has_tau() && self.upper().contains(&i),
            Letter::Nu(i) => self.kind.has_nu() && self.upper().contains(&i),
            Letter::Eta(i) => self.kind.is_type_a() && self.upper().contains(&i),
            Letter::Mu(i, j) => self.kind.is_type_a() && 1 <= i && i < j && j <= n,
            Letter::Theta(i) => self.theta_indices().contains(&i),
            Letter::Eps(i, j) | Letter::VarEps(i, j) => match self.kind {
                FamilyKind::BraidB => signed_pair(i, j),
                FamilyKind::BraidD => signed_pair(i, j) && j != -i,
                _ => false,
            },
        };
        if ok {
            Ok(())
        } else {
            Err(self.illegal(letter))
        }
    }

    /// The Coxeter generator a monoid letter maps to.
    pub fn coxeter_letter(&self, letter: &Letter) -> Result<GroupElement> {
        self.check_letter(letter)?;
        match *letter {
            Letter::Sigma(i, _) | Letter::Tau(i) | Letter::Nu(i) => {
                GroupElement::generator(self.group_family(), self.n, i)
            }
            _ => Err(self.illegal(letter)),
        }
    }

    /// Value of a partition letter in the idempotent factor.
    pub fn partition_value(&self, letter: &Letter) -> Result<SetPartition> {
        self.check_letter(letter)?;
        let g = self.ground();
        match *letter {
            Letter::Eta(i) => mu_pair(g, i, i + 1),
            Letter::Mu(i, j) => mu_pair(g, i, j),
            Letter::Theta(0) => eps_pair(g, -1, 1),
            Letter::Theta(-1) => eps_pair(g, -1, 2),
            Letter::Theta(i) => eps_pair(g, i, i + 1),
            Letter::Eps(i, j) | Letter::VarEps(i, j) => eps_pair(g, i, j),
            _ => Err(self.illegal(letter)),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.kind, self.n)
    }
}

/// A letter of a tied-monoid alphabet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Letter {
    /// `σ_i`, or `σ_i⁻¹` when the flag is set.
    Sigma(i32, bool),
    Tau(i32),
    Nu(i32),
    /// `η_i = μ_{i,i+1}`.
    Eta(i32),
    Mu(i32, i32),
    Eps(i32, i32),
    /// `θ_0 = ε_{-1,1}`, `θ_{-1} = ε_{-1,2}`, `θ_i = ε_{i,i+1}`.
    Theta(i32),
    /// The zero-closed `ε_{i,j}`; used for `θ̄_i = ε_{-i,i+1}`.
    VarEps(i32, i32),
}

impl Letter {
    pub fn sigma(i: i32) -> Letter {
        Letter::Sigma(i, false)
    }

    pub fn sigma_inv(i: i32) -> Letter {
        Letter::Sigma(i, true)
    }

    pub fn theta_bar(i: i32) -> Letter {
        Letter::VarEps(-i, i + 1)
    }

    pub fn is_partition(&self) -> bool {
        !matches!(self, Letter::Sigma(..) | Letter::Tau(_) | Letter::Nu(_))
    }

    /// Formal inverse of a monoid letter; only `σ` letters are invertible.
    pub fn inverse(&self) -> Result<Letter> {
        match *self {
            Letter::Sigma(i, inv) => Ok(Letter::Sigma(i, !inv)),
            other => Err(Error::Usage(format!("{other} has no formal inverse"))),
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Letter::Sigma(i, false) => write!(f, "s{i}"),
            Letter::Sigma(i, true) => write!(f, "s{i}'"),
            Letter::Tau(i) => write!(f, "t{i}"),
            Letter::Nu(i) => write!(f, "v{i}"),
            Letter::Eta(i) => write!(f, "e{i}"),
            Letter::Mu(i, j) => write!(f, "m({i},{j})"),
            Letter::Eps(i, j) => write!(f, "E({i},{j})"),
            Letter::Theta(i) => write!(f, "th{i}"),
            Letter::VarEps(i, j) => write!(f, "VE({i},{j})"),
        }
    }
}

fn parse_letter(tok: &str, pos: usize) -> Result<Letter> {
    let bad = || parse_err(pos, format!("unrecognized token '{tok}'"));
    let int = |s: &str| s.parse::<i32>().map_err(|_| bad());
    let pair = |s: &str| -> Result<(i32, i32)> {
        let inner = s
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(bad)?;
        let (a, b) = inner.split_once(',').ok_or_else(bad)?;
        Ok((int(a.trim())?, int(b.trim())?))
    };
    if let Some(rest) = tok.strip_prefix("VE") {
        let (i, j) = pair(rest)?;
        return Ok(Letter::VarEps(i, j));
    }
    if let Some(rest) = tok.strip_prefix('E') {
        let (i, j) = pair(rest)?;
        return Ok(Letter::Eps(i, j));
    }
    if let Some(rest) = tok.strip_prefix('m') {
        let (i, j) = pair(rest)?;
        return Ok(Letter::Mu(i, j));
    }
    if let Some(rest) = tok.strip_prefix("th") {
        return Ok(Letter::Theta(int(rest)?));
    }
    if let Some(rest) = tok.strip_prefix('s') {
        return match rest.strip_suffix('\'') {
            Some(r) => Ok(Letter::Sigma(int(r)?, true)),
            None => Ok(Letter::Sigma(int(rest)?, false)),
        };
    }
    if let Some(rest) = tok.strip_prefix('t') {
        return Ok(Letter::Tau(int(rest)?));
    }
    if let Some(rest) = tok.strip_prefix('v') {
        return Ok(Letter::Nu(int(rest)?));
    }
    if let Some(rest) = tok.strip_prefix('e') {
        return Ok(Letter::Eta(int(rest)?));
    }
    Err(bad())
}

/// Parses a whitespace-separated word in the token grammar. `1` denotes the
/// empty word. Error positions are 1-based token indices.
pub fn parse_word(family: &Family, text: &str) -> Result<Vec<Letter>> {
    let mut out = Vec::new();
    for (k, tok) in text.split_whitespace().enumerate() {
        if tok == "1" {
            continue;
        }
        let letter = parse_letter(tok, k + 1)?;
        family
            .check_letter(&letter)
            .map_err(|e| parse_err(k + 1, e.to_string()))?;
        out.push(letter);
    }
    Ok(out)
}

/// Renders letters in the token grammar; the empty word is `1`.
pub fn format_word(letters: &[Letter]) -> String {
    if letters.is_empty() {
        return "1".to_string();
    }
    letters
        .iter()
        .map(|l| l.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// A free word over monoid letters; no relation is applied implicitly.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct MonoidWord(pub Vec<Letter>);

impl MonoidWord {
    pub fn empty() -> MonoidWord {
        MonoidWord(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &MonoidWord) -> MonoidWord {
        MonoidWord(self.0.iter().chain(&other.0).copied().collect())
    }

    /// Reversed word with every letter inverted.
    pub fn inverse(&self) -> Result<MonoidWord> {
        self.0
            .iter()
            .rev()
            .map(|l| l.inverse())
            .collect::<Result<_>>()
            .map(MonoidWord)
    }

    /// Removes adjacent `σ_iσ_i⁻¹` and `σ_i⁻¹σ_i` pairs until none remain.
    pub fn free_cancel(&self) -> MonoidWord {
        let mut out: Vec<Letter> = Vec::with_capacity(self.0.len());
        for &l in &self.0 {
            match (out.last(), l) {
                (Some(&Letter::Sigma(i, a)), Letter::Sigma(j, b)) if i == j && a != b => {
                    out.pop();
                }
                _ => out.push(l),
            }
        }
        MonoidWord(out)
    }

    /// Image in the Coxeter group: product of generator images, left to right.
    pub fn coxeter_image(&self, family: &Family) -> Result<GroupElement> {
        let mut g = GroupElement::identity(family.group_family(), family.n);
        for l in &self.0 {
            g = g.compose(&family.coxeter_letter(l)?)?;
        }
        Ok(g)
    }
}

impl fmt::Display for MonoidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_word(&self.0))
    }
}

/// Outcome of comparing two tied elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EqOutcome {
    /// Same partition and identical words after free cancellation.
    Equal,
    /// Same partition and same Coxeter image, different words.
    EqualUpToMWord,
    NotEqual,
}

/// An element `(p, w)` of `P ⋊ M`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TiedElement {
    pub family: Family,
    pub partition: SetPartition,
    pub word: MonoidWord,
}

impl TiedElement {
    pub fn identity(family: Family) -> TiedElement {
        TiedElement {
            family,
            partition: family.identity_partition(),
            word: MonoidWord::empty(),
        }
    }

    /// Evaluates a raw letter sequence. Partition letters are moved to the
    /// front through the action of the monoid letters preceding them.
    pub fn normalize(family: Family, raw: &[Letter]) -> Result<TiedElement> {
        let mut p = family.identity_partition();
        let mut w = Vec::new();
        let mut g = GroupElement::identity(family.group_family(), family.n);
        for l in raw {
            if l.is_partition() {
                let q = family.partition_value(l)?;
                p = family.product(&p, &g.act(&q)?)?;
            } else {
                g = g.compose(&family.coxeter_letter(l)?)?;
                w.push(*l);
            }
        }
        Ok(TiedElement {
            family,
            partition: p,
            word: MonoidWord(w),
        })
    }

    /// `(p, a)(q, c) = (p · ρ_a(q), ac)`.
    pub fn multiply(&self, other: &TiedElement) -> Result<TiedElement> {
        if self.family != other.family {
            return Err(Error::FamilyMismatch);
        }
        let g = self.word.coxeter_image(&self.family)?;
        Ok(TiedElement {
            family: self.family,
            partition: self
                .family
                .product(&self.partition, &g.act(&other.partition)?)?,
            word: self.word.concat(&other.word),
        })
    }

    pub fn eq_modulo(&self, other: &TiedElement) -> Result<EqOutcome> {
        if self.family != other.family {
            return Err(Error::FamilyMismatch);
        }
        if self.partition != other.partition {
            return Ok(EqOutcome::NotEqual);
        }
        if self.word.free_cancel() == other.word.free_cancel() {
            return Ok(EqOutcome::Equal);
        }
        if self.word.coxeter_image(&self.family)? == other.word.coxeter_image(&other.family)? {
            Ok(EqOutcome::EqualUpToMWord)
        } else {
            Ok(EqOutcome::NotEqual)
        }
    }
}

impl fmt::Display for TiedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} | {}", self.partition, self.word)
    }
}

/// The auxiliary words built from a family of letters `x_i`.
pub mod words {
    use super::Letter;
    use crate::error::{Error, Result};

    fn check(i: i32, j: i32) -> Result<()> {
        if i < 1 || j <= i {
            return Err(Error::Usage(format!(
                "word builder needs 1 <= i < j, got ({i},{j})"
            )));
        }
        Ok(())
    }

    /// `a_{i,j} = x_i ⋯ x_{j-2}`.
    pub fn a_with(i: i32, j: i32, x: impl Fn(i32) -> Letter) -> Result<Vec<Letter>> {
        check(i, j)?;
        Ok((i..=j - 2).map(x).collect())
    }

    /// `b_{i,j} = x_{j-1} ⋯ x_{i+1}`.
    pub fn b_with(i: i32, j: i32, x: impl Fn(i32) -> Letter) -> Result<Vec<Letter>> {
        check(i, j)?;
        Ok((i + 1..=j - 1).rev().map(x).collect())
    }

    /// `ā_{i,j} = x_{j-2} ⋯ x_i`.
    pub fn abar_with(i: i32, j: i32, x: impl Fn(i32) -> Letter) -> Result<Vec<Letter>> {
        check(i, j)?;
        Ok((i..=j - 2).rev().map(x).collect())
    }

    /// `b̄_{i,j} = x_{i+1} ⋯ x_{j-1}`.
    pub fn bbar_with(i: i32, j: i32, x: impl Fn(i32) -> Letter) -> Result<Vec<Letter>> {
        check(i, j)?;
        Ok((i + 1..=j - 1).map(x).collect())
    }

    pub fn a(i: i32, j: i32) -> Result<Vec<Letter>> {
        a_with(i, j, Letter::sigma)
    }

    pub fn b(i: i32, j: i32) -> Result<Vec<Letter>> {
        b_with(i, j, Letter::sigma)
    }

    pub fn abar(i: i32, j: i32) -> Result<Vec<Letter>> {
        abar_with(i, j, Letter::sigma)
    }

    pub fn bbar(i: i32, j: i32) -> Result<Vec<Letter>> {
        bbar_with(i, j, Letter::sigma)
    }

    /// `d_k = σ_{k-1} ⋯ σ_1`.
    pub fn d(k: i32) -> Result<Vec<Letter>> {
        if k < 1 {
            return Err(Error::Usage(format!("d_k needs k >= 1, got {k}")));
        }
        Ok((1..k).rev().map(Letter::sigma).collect())
    }

    /// `d̄_k = σ_1 ⋯ σ_{k-1}`.
    pub fn dbar(k: i32) -> Result<Vec<Letter>> {
        if k < 1 {
            return Err(Error::Usage(format!("d̄_k needs k >= 1, got {k}")));
        }
        Ok((1..k).map(Letter::sigma).collect())
    }

    /// `Θ_0 = σ_0`, `Θ_k = σ_k Θ_{k-1} σ_k`.
    pub fn theta_cap(k: i32) -> Result<Vec<Letter>> {
        if k < 0 {
            return Err(Error::Usage(format!("Θ_k needs k >= 0, got {k}")));
        }
        let mut w = vec![Letter::sigma(0)];
        for m in 1..=k {
            w.insert(0, Letter::sigma(m));
            w.push(Letter::sigma(m));
        }
        Ok(w)
    }

    /// `Θ̄_1 = σ_{-1} σ_1`, `Θ̄_k = σ_k Θ̄_{k-1} σ_k`.
    pub fn theta_cap_bar(k: i32) -> Result<Vec<Letter>> {
        if k < 1 {
            return Err(Error::Usage(format!("Θ̄_k needs k >= 1, got {k}")));
        }
        let mut w = vec![Letter::sigma(-1), Letter::sigma(1)];
        for m in 2..=k {
            w.insert(0, Letter::sigma(m));
            w.push(Letter::sigma(m));
        }
        Ok(w)
    }

    /// Reversed word with every letter inverted.
    pub fn inv(w: &[Letter]) -> Vec<Letter> {
        w.iter()
            .rev()
            .map(|l| l.inverse().expect("invertible letters"))
            .collect()
    }
}
