//! Set partitions over `[n]` and `[±n]`, the block order, the join product,
//! zero closure and the type-B product.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{parse_err, Error, Result};

/// Default upper bound on `n` for a plain ground set.
pub const MAX_PLAIN: usize = 16;
/// Default upper bound on `n` for a signed ground set.
pub const MAX_SIGNED: usize = 8;

/// Size limits applied when constructing ground sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroundLimits {
    pub max_plain: usize,
    pub max_signed: usize,
}

impl Default for GroundLimits {
    fn default() -> Self {
        GroundLimits {
            max_plain: MAX_PLAIN,
            max_signed: MAX_SIGNED,
        }
    }
}

/// The ground set a partition lives on: `{1..n}` or `{±1..±n}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Ground {
    Plain(usize),
    Signed(usize),
}

impl Ground {
    pub fn plain(n: usize) -> Result<Ground> {
        Ground::plain_with(n, &GroundLimits::default())
    }

    pub fn signed(n: usize) -> Result<Ground> {
        Ground::signed_with(n, &GroundLimits::default())
    }

    pub fn plain_with(n: usize, limits: &GroundLimits) -> Result<Ground> {
        if n < 2 {
            return Err(Error::GroundSize {
                n,
                reason: "n must be at least 2",
            });
        }
        if n > limits.max_plain {
            return Err(Error::GroundSize {
                n,
                reason: "exceeds plain ground limit",
            });
        }
        Ok(Ground::Plain(n))
    }

    pub fn signed_with(n: usize, limits: &GroundLimits) -> Result<Ground> {
        if n < 2 {
            return Err(Error::GroundSize {
                n,
                reason: "n must be at least 2",
            });
        }
        if n > limits.max_signed {
            return Err(Error::GroundSize {
                n,
                reason: "exceeds signed ground limit",
            });
        }
        Ok(Ground::Signed(n))
    }

    pub fn n(&self) -> usize {
        match *self {
            Ground::Plain(n) | Ground::Signed(n) => n,
        }
    }

    pub fn is_signed(&self) -> bool {
        matches!(self, Ground::Signed(_))
    }

    /// Number of elements of the ground set.
    pub fn size(&self) -> usize {
        match *self {
            Ground::Plain(n) => n,
            Ground::Signed(n) => 2 * n,
        }
    }

    pub fn contains(&self, e: i32) -> bool {
        self.index_of(e).is_some()
    }

    /// Position of `e` in the increasing enumeration of the ground set.
    pub fn index_of(&self, e: i32) -> Option<usize> {
        let n = self.n() as i32;
        match self {
            Ground::Plain(_) => (1..=n).contains(&e).then(|| (e - 1) as usize),
            Ground::Signed(_) => {
                if e < 0 && e >= -n {
                    Some((e + n) as usize)
                } else if e > 0 && e <= n {
                    Some((e + n - 1) as usize)
                } else {
                    None
                }
            }
        }
    }

    pub(crate) fn idx(&self, e: i32) -> Result<usize> {
        self.index_of(e).ok_or(Error::ElementOutOfRange(e))
    }

    /// Element at position `idx`; panics when out of range.
    pub fn element(&self, idx: usize) -> i32 {
        let n = self.n() as i32;
        let i = idx as i32;
        match self {
            Ground::Plain(_) => i + 1,
            Ground::Signed(_) => {
                if i < n {
                    i - n
                } else {
                    i - n + 1
                }
            }
        }
    }

    pub fn elements(&self) -> Vec<i32> {
        (0..self.size()).map(|i| self.element(i)).collect()
    }
}

impl fmt::Display for Ground {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ground::Plain(n) => write!(f, "[{n}]"),
            Ground::Signed(n) => write!(f, "[±{n}]"),
        }
    }
}

/// Total order on subsets: smaller sets first; equal-sized sets are ordered by
/// the minimum of their symmetric differences.
pub fn compare_blocks(x: &[i32], y: &[i32]) -> Ordering {
    if x.len() != y.len() {
        return x.len().cmp(&y.len());
    }
    let min_x = x.iter().filter(|e| !y.contains(e)).min();
    let min_y = y.iter().filter(|e| !x.contains(e)).min();
    match (min_x, min_y) {
        (Some(a), Some(b)) => a.cmp(b),
        _ => Ordering::Equal,
    }
}

/// Flags describing which of the partition monoids a partition belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionClassFlags {
    pub signed: bool,
    pub zero_block_count: usize,
    pub restricted: bool,
    pub b_partition: bool,
    pub d_partition: bool,
}

/// A set partition in canonical form.
///
/// Blocks are stored in increasing block order with ascending elements, so
/// structural equality coincides with equality of partitions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    ground: Ground,
    blocks: Vec<Vec<i32>>,
    assign: Vec<u16>,
}

struct Dsu(Vec<usize>);

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu((0..n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

impl SetPartition {
    /// The partition into singletons, the identity of every partition monoid.
    pub fn identity(ground: Ground) -> SetPartition {
        let labels: Vec<usize> = (0..ground.size()).collect();
        SetPartition::from_labels(ground, &labels)
    }

    /// The partition with a single block.
    pub fn full(ground: Ground) -> SetPartition {
        SetPartition::from_labels(ground, &vec![0; ground.size()])
    }

    /// Builds a canonical partition from a block label per ground index.
    pub fn from_labels(ground: Ground, labels: &[usize]) -> SetPartition {
        debug_assert_eq!(labels.len(), ground.size());
        let mut slot: Vec<usize> = vec![usize::MAX; labels.iter().max().map_or(0, |m| m + 1)];
        let mut groups: Vec<Vec<i32>> = Vec::new();
        for (idx, &l) in labels.iter().enumerate() {
            if slot[l] == usize::MAX {
                slot[l] = groups.len();
                groups.push(Vec::new());
            }
            groups[slot[l]].push(ground.element(idx));
        }
        // Blocks are disjoint, so the block order reduces to (size, minimum).
        groups.sort_by(|a, b| a.len().cmp(&b.len()).then(a[0].cmp(&b[0])));
        let mut assign = vec![0u16; ground.size()];
        for (b, block) in groups.iter().enumerate() {
            for &e in block {
                assign[ground.index_of(e).unwrap()] = b as u16;
            }
        }
        SetPartition {
            ground,
            blocks: groups,
            assign,
        }
    }

    /// Builds a partition from explicit blocks; elements not mentioned become
    /// singletons.
    pub fn from_blocks(ground: Ground, blocks: &[Vec<i32>]) -> Result<SetPartition> {
        let mut labels: Vec<usize> = (0..ground.size()).map(|i| i + blocks.len()).collect();
        let mut seen = vec![false; ground.size()];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            for &e in block {
                let i = ground.idx(e)?;
                if seen[i] {
                    return Err(Error::InvalidPartition(format!(
                        "element {e} appears twice"
                    )));
                }
                seen[i] = true;
                labels[i] = b;
            }
        }
        Ok(SetPartition::from_labels(ground, &labels))
    }

    pub fn ground(&self) -> Ground {
        self.ground
    }

    pub fn blocks(&self) -> &[Vec<i32>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Index of the block containing `e`.
    pub fn block_index(&self, e: i32) -> Result<usize> {
        Ok(self.assign[self.ground.idx(e)?] as usize)
    }

    pub fn block_of(&self, e: i32) -> Result<&[i32]> {
        Ok(&self.blocks[self.block_index(e)?])
    }

    pub fn same_block(&self, a: i32, b: i32) -> Result<bool> {
        Ok(self.block_index(a)? == self.block_index(b)?)
    }

    pub fn is_identity(&self) -> bool {
        self.blocks.len() == self.ground.size()
    }

    pub(crate) fn labels(&self) -> Vec<usize> {
        self.assign.iter().map(|&a| a as usize).collect()
    }

    /// Image of the partition under an element map given on ground indices.
    pub(crate) fn map_indices(&self, image: &[usize]) -> SetPartition {
        let mut labels = vec![0usize; self.ground.size()];
        for (i, &b) in self.assign.iter().enumerate() {
            labels[image[i]] = b as usize;
        }
        SetPartition::from_labels(self.ground, &labels)
    }

    /// Image under `x ↦ -x`; requires a signed ground.
    pub fn negate(&self) -> Result<SetPartition> {
        if !self.ground.is_signed() {
            return Err(Error::WrongClass {
                op: "negate",
                required: "a signed ground",
            });
        }
        let image: Vec<usize> = (0..self.ground.size())
            .map(|i| self.ground.size() - 1 - i)
            .collect();
        Ok(self.map_indices(&image))
    }

    /// Least upper bound in the refinement order.
    pub fn join(&self, other: &SetPartition) -> Result<SetPartition> {
        if self.ground != other.ground {
            return Err(Error::GroundMismatch);
        }
        let mut dsu = Dsu::new(self.ground.size());
        for p in [self, other] {
            for block in &p.blocks {
                let first = self.ground.index_of(block[0]).unwrap();
                for &e in &block[1..] {
                    dsu.union(first, self.ground.index_of(e).unwrap());
                }
            }
        }
        let labels: Vec<usize> = (0..self.ground.size()).map(|i| dsu.find(i)).collect();
        Ok(SetPartition::from_labels(self.ground, &labels))
    }

    /// True when every block of `self` lies inside a block of `other`.
    pub fn refines(&self, other: &SetPartition) -> Result<bool> {
        if self.ground != other.ground {
            return Err(Error::GroundMismatch);
        }
        Ok(self.blocks.iter().all(|block| {
            let b = other.block_index(block[0]).unwrap();
            block.iter().all(|&e| other.block_index(e).unwrap() == b)
        }))
    }

    fn zero_blocks(&self) -> impl Iterator<Item = &Vec<i32>> {
        self.blocks
            .iter()
            .filter(|b| b.iter().all(|&e| b.binary_search(&-e).is_ok()))
    }

    pub fn classify(&self) -> PartitionClassFlags {
        let signed = self.ground.is_signed()
            && self.blocks.iter().all(|block| {
                let Ok(target) = self.block_index(-block[0]) else {
                    return false;
                };
                self.blocks[target].len() == block.len()
                    && block
                        .iter()
                        .all(|&e| self.block_index(-e).ok() == Some(target))
            });
        let zero_block_count = if self.ground.is_signed() {
            self.zero_blocks().count()
        } else {
            0
        };
        let restricted = signed && self.zero_blocks().all(|b| b.len() > 2);
        let b_partition = signed && zero_block_count <= 1;
        PartitionClassFlags {
            signed,
            zero_block_count,
            restricted,
            b_partition,
            d_partition: b_partition && restricted,
        }
    }

    /// Merges all zero blocks into one.
    pub fn zero_closure(&self) -> Result<SetPartition> {
        if !self.classify().signed {
            return Err(Error::WrongClass {
                op: "zero_closure",
                required: "a signed partition",
            });
        }
        let mut labels = self.labels();
        let mut zero_label = None;
        for (b, block) in self.blocks.iter().enumerate() {
            if block.iter().all(|&e| block.binary_search(&-e).is_ok()) {
                let z = *zero_label.get_or_insert(b);
                for &e in block {
                    labels[self.ground.index_of(e).unwrap()] = z;
                }
            }
        }
        Ok(SetPartition::from_labels(self.ground, &labels))
    }

    /// The product of the type-B partition monoid: zero closure of the join.
    pub fn b_product(&self, other: &SetPartition) -> Result<SetPartition> {
        if self.ground != other.ground {
            return Err(Error::GroundMismatch);
        }
        if !self.classify().b_partition || !other.classify().b_partition {
            return Err(Error::WrongClass {
                op: "b_product",
                required: "B-partitions",
            });
        }
        self.join(other)?.zero_closure()
    }

    /// Closure under the reversal `a_k ↦ a_{N+1-k}` of the ordered ground set.
    pub fn is_symmetric(&self) -> bool {
        let size = self.ground.size();
        let image: Vec<usize> = (0..size).map(|i| size - 1 - i).collect();
        self.map_indices(&image) == *self
    }

    /// Consecutive pairs of each sorted block, blocks taken in canonical order.
    pub fn normal_form_decomposition(&self) -> Vec<(i32, i32)> {
        self.blocks
            .iter()
            .flat_map(|b| b.windows(2).map(|w| (w[0], w[1])))
            .collect()
    }

    /// Parses a literal such as `{1,4;2,5,6;3;7}`. Omitted elements become
    /// singletons. Error positions are 1-based character offsets.
    pub fn parse(ground: Ground, text: &str) -> Result<SetPartition> {
        let t = text.trim();
        let offset = text.len() - text.trim_start().len();
        if !t.starts_with('{') {
            return Err(parse_err(
                offset + 1,
                "partition literal must start with '{'",
            ));
        }
        if !t.ends_with('}') || t.len() < 2 {
            return Err(parse_err(
                offset + t.len(),
                "partition literal must end with '}'",
            ));
        }
        let inner = &t[1..t.len() - 1];
        let mut blocks = Vec::new();
        let mut pos = offset + 2;
        if !inner.trim().is_empty() {
            for part in inner.split(';') {
                let mut block = Vec::new();
                let mut epos = pos;
                for item in part.split(',') {
                    let s = item.trim();
                    let here = epos + (item.len() - item.trim_start().len());
                    let e: i32 = s.parse().map_err(|_| {
                        parse_err(here, format!("expected an integer, found '{s}'"))
                    })?;
                    if !ground.contains(e) {
                        return Err(parse_err(here, format!("element {e} is not in {ground}")));
                    }
                    block.push(e);
                    epos += item.len() + 1;
                }
                blocks.push(block);
                pos += part.len() + 1;
            }
        }
        SetPartition::from_blocks(ground, &blocks)
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (b, block) in self.blocks.iter().enumerate() {
            if b > 0 {
                write!(f, ";")?;
            }
            for (k, e) in block.iter().enumerate() {
                if k > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{e}")?;
            }
        }
        write!(f, "}}")
    }
}

impl Serialize for SetPartition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// The partition `μ_X`: one block `X`, singletons elsewhere.
pub fn mu(ground: Ground, x: &[i32]) -> Result<SetPartition> {
    if x.is_empty() {
        return Err(Error::InvalidPartition("mu of the empty set".into()));
    }
    let mut block = x.to_vec();
    block.sort_unstable();
    block.dedup();
    SetPartition::from_blocks(ground, &[block])
}

/// `μ_{i,j}`.
pub fn mu_pair(ground: Ground, i: i32, j: i32) -> Result<SetPartition> {
    mu(ground, &[i, j])
}

/// `ϵ_X = μ_{-X} μ_X` on a signed ground.
pub fn epsilon(ground: Ground, x: &[i32]) -> Result<SetPartition> {
    if !ground.is_signed() {
        return Err(Error::WrongClass {
            op: "epsilon",
            required: "a signed ground",
        });
    }
    let neg: Vec<i32> = x.iter().map(|e| -e).collect();
    mu(ground, &neg)?.join(&mu(ground, x)?)
}

/// `ε_{i,j}`. For a pair this coincides with `ϵ_{i,j}`, which already has at
/// most one zero block.
pub fn eps_pair(ground: Ground, i: i32, j: i32) -> Result<SetPartition> {
    epsilon(ground, &[i, j])
}

/// Evaluates a list of `μ_{i,j}` pairs by joining them.
pub fn join_pairs(ground: Ground, pairs: &[(i32, i32)]) -> Result<SetPartition> {
    let mut p = SetPartition::identity(ground);
    for &(i, j) in pairs {
        p = p.join(&mu_pair(ground, i, j)?)?;
    }
    Ok(p)
}


#[cfg(test)]
mod tests {
    use super::strategies::*;
    use super::*;
    use proptest::prelude::*;

    fn p(n: usize, s: &str) -> SetPartition {
        SetPartition::parse(Ground::Plain(n), s).unwrap()
    }

    fn sp(n: usize, s: &str) -> SetPartition {
        SetPartition::parse(Ground::Signed(n), s).unwrap()
    }

    #[test]
    fn block_order_examples() {
        assert_eq!(compare_blocks(&[3], &[1, 2]), Ordering::Less);
        assert_eq!(compare_blocks(&[1, 4], &[1, 4]), Ordering::Equal);
        assert_eq!(compare_blocks(&[1, 4], &[2, 3]), Ordering::Less);
        assert_eq!(compare_blocks(&[1, 2, 5], &[1, 3, 4]), Ordering::Less);
        assert_eq!(compare_blocks(&[-2, 3], &[1, 2]), Ordering::Less);
    }

    #[test]
    fn ground_indexing_round_trips() {
        for g in [Ground::Plain(5), Ground::Signed(4)] {
            for (i, e) in g.elements().into_iter().enumerate() {
                assert_eq!(g.index_of(e), Some(i));
            }
        }
        assert_eq!(Ground::Signed(3).elements(), vec![-3, -2, -1, 1, 2, 3]);
        assert!(!Ground::Signed(3).contains(0));
        assert!(Ground::plain(1).is_err());
        assert!(Ground::plain(17).is_err());
        assert!(Ground::signed(9).is_err());
        let wide = GroundLimits {
            max_plain: 40,
            max_signed: 20,
        };
        assert!(Ground::plain_with(30, &wide).is_ok());
    }

    #[test]
    fn join_examples() {
        let g = Ground::Plain(3);
        let a = mu_pair(g, 1, 2).unwrap();
        let b = mu_pair(g, 2, 3).unwrap();
        assert_eq!(a.join(&b).unwrap(), SetPartition::full(g));
        assert_eq!(SetPartition::identity(g).join(&a).unwrap(), a);
        let g5 = Ground::Plain(5);
        let j = mu_pair(g5, 1, 4)
            .unwrap()
            .join(&mu_pair(g5, 2, 5).unwrap())
            .unwrap();
        assert_eq!(j, p(5, "{3;1,4;2,5}"));
        assert!(a.join(&SetPartition::identity(Ground::Plain(4))).is_err());
    }

    #[test]
    fn refines_examples() {
        let g = Ground::Plain(3);
        let one = SetPartition::identity(g);
        let full = SetPartition::full(g);
        assert!(one.refines(&full).unwrap());
        assert!(!full.refines(&one).unwrap());
        let a = mu_pair(g, 1, 2).unwrap();
        let j = a.join(&mu_pair(g, 2, 3).unwrap()).unwrap();
        assert!(a.refines(&j).unwrap());
    }

    #[test]
    fn mu_and_decomposition() {
        let g = Ground::Plain(7);
        assert_eq!(mu(g, &[1, 3, 7]).unwrap().blocks()[4], vec![1, 3, 7]);
        assert!(mu(g, &[4]).unwrap().is_identity());
        assert!(mu(g, &[]).is_err());
        assert!(mu(g, &[8]).is_err());
        let i = p(7, "{5;1,3,7;2,4,6}");
        assert_eq!(
            i.normal_form_decomposition(),
            vec![(1, 3), (3, 7), (2, 4), (4, 6)]
        );
        assert_eq!(join_pairs(g, &i.normal_form_decomposition()).unwrap(), i);
        assert!(SetPartition::identity(g)
            .normal_form_decomposition()
            .is_empty());
        assert_eq!(
            p(3, "{1,2,3}").normal_form_decomposition(),
            vec![(1, 2), (2, 3)]
        );
        let s = mu(Ground::Signed(3), &[-2, 3]).unwrap();
        assert_eq!(s.block_of(3).unwrap(), &[-2, 3]);
    }

    #[test]
    fn epsilon_examples() {
        let g = Ground::Signed(5);
        let e = epsilon(g, &[-2, 3, 5]).unwrap();
        assert_eq!(e.block_of(3).unwrap(), &[-2, 3, 5]);
        assert_eq!(e.block_of(2).unwrap(), &[-5, -3, 2]);
        assert_eq!(e.block_count(), 6);
        assert!(epsilon(g, &[4]).unwrap().is_identity());
        let z = epsilon(Ground::Signed(2), &[-1, 1]).unwrap();
        assert_eq!(z, sp(2, "{-1,1}"));
        assert!(epsilon(Ground::Plain(3), &[1, 2]).is_err());
    }

    #[test]
    fn zero_closure_and_b_product() {
        let g = Ground::Signed(2);
        let two = sp(2, "{1,-1;2,-2}");
        assert_eq!(two.zero_closure().unwrap(), SetPartition::full(g));
        let one = sp(2, "{-1,1}");
        assert_eq!(one.zero_closure().unwrap(), one);
        let a = eps_pair(g, -1, 1).unwrap();
        let b = eps_pair(g, -2, 2).unwrap();
        assert_eq!(a.b_product(&b).unwrap(), SetPartition::full(g));
        let c = eps_pair(g, 1, 2).unwrap();
        let d = eps_pair(g, -1, 2).unwrap();
        assert_eq!(c.b_product(&d).unwrap(), SetPartition::full(g));
        assert_eq!(SetPartition::identity(g).b_product(&c).unwrap(), c);
        assert!(two.b_product(&a).is_err());
        assert!(sp(2, "{1,2}").zero_closure().is_err());
    }

    #[test]
    fn classify_examples() {
        let f = sp(2, "{1,-1}").classify();
        assert!(f.signed && f.b_partition && !f.restricted && !f.d_partition);
        assert_eq!(f.zero_block_count, 1);
        let f = SetPartition::identity(Ground::Signed(3)).classify();
        assert!(f.signed && f.b_partition && f.d_partition && f.restricted);
        assert_eq!(f.zero_block_count, 0);
        let f = sp(2, "{1,-1;2,-2}").classify();
        assert!(f.signed && !f.b_partition);
        assert_eq!(f.zero_block_count, 2);
        assert!(!sp(2, "{1,2}").classify().signed);
        assert!(!p(3, "{1,2}").classify().signed);
        assert!(sp(3, "{1,-1,2,-2}").classify().d_partition);
    }

    #[test]
    fn symmetric_examples() {
        assert!(SetPartition::identity(Ground::Plain(4)).is_symmetric());
        assert!(!p(4, "{1,2}").is_symmetric());
        assert!(p(4, "{1,4;2,3}").is_symmetric());
    }

    #[test]
    fn parse_and_display() {
        let x = p(7, "{1,4;2,5,6;3;7}");
        assert_eq!(x.to_string(), "{3;7;1,4;2,5,6}");
        assert_eq!(
            SetPartition::parse(Ground::Plain(7), &x.to_string()).unwrap(),
            x
        );
        assert_eq!(p(3, "{}"), SetPartition::identity(Ground::Plain(3)));
        assert_eq!(sp(2, " { -1 , 1 } ").to_string(), "{-2;2;-1,1}");
        let err = SetPartition::parse(Ground::Plain(3), "{1,x}").unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                position: 4,
                message: "expected an integer, found 'x'".into()
            }
        );
        assert!(SetPartition::parse(Ground::Plain(3), "{1,2;2}").is_err());
        assert!(SetPartition::parse(Ground::Signed(3), "{0}").is_err());
        assert!(SetPartition::parse(Ground::Plain(3), "1,2").is_err());
    }

    #[test]
    fn mu_and_epsilon_products_over_signed_subsets() {
        let g = Ground::Signed(3);
        let elems = g.elements();
        for mask in 1u32..(1 << elems.len()) {
            let x: Vec<i32> = (0..elems.len())
                .filter(|b| mask >> b & 1 == 1)
                .map(|b| elems[b])
                .collect();
            let mut prod = SetPartition::identity(g);
            for w in x.windows(2) {
                prod = prod.join(&epsilon(g, w).unwrap()).unwrap();
            }
            assert_eq!(prod, epsilon(g, &x).unwrap(), "X = {x:?}");
            let mut sym: Vec<i32> = x.iter().flat_map(|&e| [e, -e]).collect();
            sym.sort_unstable();
            sym.dedup();
            let mut prod = epsilon(g, &[-x[0], x[0]]).unwrap();
            for w in x.windows(2) {
                prod = prod.join(&epsilon(g, w).unwrap()).unwrap();
            }
            assert_eq!(prod, epsilon(g, &sym).unwrap(), "X = {x:?}");
        }
    }

    proptest! {
        #[test]
        fn join_is_idempotent_commutative_associative(
            a in partition(Ground::Plain(5)),
            b in partition(Ground::Plain(5)),
            c in partition(Ground::Plain(5)),
        ) {
            prop_assert_eq!(a.join(&a).unwrap(), a.clone());
            prop_assert_eq!(a.join(&b).unwrap(), b.join(&a).unwrap());
            prop_assert_eq!(
                a.join(&b).unwrap().join(&c).unwrap(),
                a.join(&b.join(&c).unwrap()).unwrap()
            );
            let j = a.join(&b).unwrap();
            prop_assert!(a.refines(&j).unwrap() && b.refines(&j).unwrap());
        }

        #[test]
        fn join_of_signed_is_signed(a in signed_partition(3), b in signed_partition(3)) {
            prop_assert!(a.join(&b).unwrap().classify().signed);
        }

        #[test]
        fn b_product_laws(a in b_partition(3), b in b_partition(3), c in b_partition(3)) {
            prop_assert_eq!(a.b_product(&a).unwrap(), a.clone());
            prop_assert_eq!(a.b_product(&b).unwrap(), b.b_product(&a).unwrap());
            prop_assert_eq!(
                a.b_product(&b).unwrap().b_product(&c).unwrap(),
                a.b_product(&b.b_product(&c).unwrap()).unwrap()
            );
            prop_assert!(a.b_product(&b).unwrap().classify().b_partition);
        }

        #[test]
        fn zero_closure_is_a_homomorphism(a in signed_partition(3), b in signed_partition(3)) {
            let lhs = a.join(&b).unwrap().zero_closure().unwrap();
            let rhs = a.zero_closure().unwrap().b_product(&b.zero_closure().unwrap()).unwrap();
            prop_assert_eq!(lhs.zero_closure().unwrap(), lhs.clone());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn epsilon_symmetries(i in -4i32..=4, j in -4i32..=4) {
            prop_assume!(i != 0 && j != 0 && i != j);
            let g = Ground::Signed(4);
            prop_assert_eq!(epsilon(g, &[i, j]).unwrap(), epsilon(g, &[-i, -j]).unwrap());
            prop_assert_eq!(eps_pair(g, i, j).unwrap(), eps_pair(g, -j, -i).unwrap());
        }

        #[test]
        fn decomposition_round_trips(a in partition(Ground::Plain(6))) {
            prop_assert_eq!(join_pairs(a.ground(), &a.normal_form_decomposition()).unwrap(), a.clone());
        }

        #[test]
        fn literal_round_trips(a in partition(Ground::Signed(3))) {
            prop_assert_eq!(SetPartition::parse(a.ground(), &a.to_string()).unwrap(), a);
        }
    }
}
