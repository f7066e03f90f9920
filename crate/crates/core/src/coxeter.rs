//! Symmetric, signed and even-signed permutation groups acting on set
//! partitions.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{parse_err, Error, Result};
use crate::partition::{Ground, SetPartition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GroupFamily {
    /// `𝔖_n` acting on `[n]`.
    SymA,
    /// `𝔖_n^B` acting on `[±n]`.
    SignedB,
    /// `𝔖_n^D` acting on `[±n]`.
    EvenSignedD,
}

impl GroupFamily {
    pub fn ground(self, n: usize) -> Ground {
        match self {
            GroupFamily::SymA => Ground::Plain(n),
            _ => Ground::Signed(n),
        }
    }

    /// Legal Coxeter generator indices for rank `n`.
    pub fn generator_indices(self, n: usize) -> Vec<i32> {
        let upper = 1..n as i32;
        match self {
            GroupFamily::SymA => upper.collect(),
            GroupFamily::SignedB => std::iter::once(0).chain(upper).collect(),
            GroupFamily::EvenSignedD => std::iter::once(-1).chain(upper).collect(),
        }
    }

    /// Order of the group of rank `n`.
    pub fn order(self, n: usize) -> usize {
        let fact: usize = (1..=n).product();
        match self {
            GroupFamily::SymA => fact,
            GroupFamily::SignedB => fact << n,
            GroupFamily::EvenSignedD => fact << (n - 1),
        }
    }
}

impl fmt::Display for GroupFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GroupFamily::SymA => "A",
            GroupFamily::SignedB => "B",
            GroupFamily::EvenSignedD => "D",
        })
    }
}

/// A permutation of the ground set, stored densely by ground index.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    family: GroupFamily,
    ground: Ground,
    map: Vec<u8>,
}

impl GroupElement {
    pub fn identity(family: GroupFamily, n: usize) -> GroupElement {
        let ground = family.ground(n);
        GroupElement {
            family,
            ground,
            map: (0..ground.size() as u8).collect(),
        }
    }

    /// Coxeter generator: `s_i = (i i+1)` for type A; `t_0 = (-1 1)` and
    /// `t_i = (i i+1)(-i -i-1)` for type B; `t_{-1} = (-2 1)(-1 2)` and `t_i`
    /// for type D.
    pub fn generator(family: GroupFamily, n: usize, index: i32) -> Result<GroupElement> {
        if !family.generator_indices(n).contains(&index) {
            return Err(Error::GeneratorIndex {
                family: family.to_string(),
                index,
            });
        }
        let mut g = GroupElement::identity(family, n);
        let swaps: Vec<(i32, i32)> = match (family, index) {
            (GroupFamily::SymA, i) => vec![(i, i + 1)],
            (_, 0) => vec![(-1, 1)],
            (_, -1) => vec![(-2, 1), (-1, 2)],
            (_, i) => vec![(i, i + 1), (-i, -i - 1)],
        };
        for (a, b) in swaps {
            let (ia, ib) = (g.ground.idx(a)?, g.ground.idx(b)?);
            g.map.swap(ia, ib);
        }
        Ok(g)
    }

    /// Builds a group element from the images of `1..=n`. Signed families
    /// extend by `g(-k) = -g(k)`.
    pub fn from_images(family: GroupFamily, n: usize, images: &[i32]) -> Result<GroupElement> {
        if images.len() != n {
            return Err(Error::InvalidPermutation(format!(
                "expected {n} images, found {}",
                images.len()
            )));
        }
        let ground = family.ground(n);
        let mut map = vec![u8::MAX; ground.size()];
        for (k, &img) in images.iter().enumerate() {
            let x = k as i32 + 1;
            let ix = ground.idx(x)?;
            let iy = ground.index_of(img).ok_or_else(|| {
                Error::InvalidPermutation(format!("image {img} is outside {ground}"))
            })?;
            map[ix] = iy as u8;
            if ground.is_signed() {
                map[ground.idx(-x)?] = ground.idx(-img)? as u8;
            }
        }
        let mut seen = vec![false; ground.size()];
        for &m in &map {
            if m == u8::MAX || std::mem::replace(&mut seen[m as usize], true) {
                return Err(Error::InvalidPermutation(
                    "images are not a bijection".into(),
                ));
            }
        }
        let g = GroupElement {
            family,
            ground,
            map,
        };
        if family == GroupFamily::EvenSignedD && images.iter().filter(|&&x| x < 0).count() % 2 == 1
        {
            return Err(Error::InvalidPermutation(
                "odd number of sign changes in type D".into(),
            ));
        }
        Ok(g)
    }

    pub fn family(&self) -> GroupFamily {
        self.family
    }

    pub fn ground(&self) -> Ground {
        self.ground
    }

    pub fn n(&self) -> usize {
        self.ground.n()
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &m)| i == m as usize)
    }

    /// Image of a ground element.
    pub fn apply(&self, x: i32) -> Result<i32> {
        Ok(self.ground.element(self.map[self.ground.idx(x)?] as usize))
    }

    /// Images of `1..=n`.
    pub fn images(&self) -> Vec<i32> {
        (1..=self.n() as i32)
            .map(|x| self.apply(x).unwrap())
            .collect()
    }

    fn check(&self, other: &GroupElement) -> Result<()> {
        if self.family != other.family || self.ground != other.ground {
            return Err(Error::GroupMismatch);
        }
        Ok(())
    }

    /// `compose(g, h)(x) = g(h(x))`.
    pub fn compose(&self, other: &GroupElement) -> Result<GroupElement> {
        self.check(other)?;
        Ok(GroupElement {
            family: self.family,
            ground: self.ground,
            map: other.map.iter().map(|&h| self.map[h as usize]).collect(),
        })
    }

    pub fn inverse(&self) -> GroupElement {
        let mut map = vec![0u8; self.map.len()];
        for (i, &m) in self.map.iter().enumerate() {
            map[m as usize] = i as u8;
        }
        GroupElement {
            family: self.family,
            ground: self.ground,
            map,
        }
    }

    /// Blockwise image of a partition.
    pub fn act(&self, p: &SetPartition) -> Result<SetPartition> {
        if p.ground() != self.ground {
            return Err(Error::GroundMismatch);
        }
        let image: Vec<usize> = self.map.iter().map(|&m| m as usize).collect();
        Ok(p.map_indices(&image))
    }

    /// Product of generators read left to right.
    pub fn from_generators(family: GroupFamily, n: usize, word: &[i32]) -> Result<GroupElement> {
        let mut g = GroupElement::identity(family, n);
        for &i in word {
            g = g.compose(&GroupElement::generator(family, n, i)?)?;
        }
        Ok(g)
    }

    /// Parses a generator word (`s1 s2 s0 s-1`, `1` for the identity) or a
    /// one-line image list (`[2,1,3]`, `[-2,1,3]`).
    pub fn parse(family: GroupFamily, n: usize, text: &str) -> Result<GroupElement> {
        let t = text.trim();
        if let Some(inner) = t.strip_prefix('[') {
            let inner = inner
                .strip_suffix(']')
                .ok_or_else(|| parse_err(1, "image list must end with ']'"))?;
            let mut images = Vec::new();
            for (k, s) in inner.split(',').enumerate() {
                let v = i32::from_str(s.trim()).map_err(|_| {
                    parse_err(k + 1, format!("expected an integer, found '{}'", s.trim()))
                })?;
                images.push(v);
            }
            return GroupElement::from_images(family, n, &images);
        }
        let mut word = Vec::new();
        for (pos, tok) in t.split_whitespace().enumerate() {
            if tok == "1" {
                continue;
            }
            let idx = tok
                .strip_prefix('s')
                .or_else(|| tok.strip_prefix('t'))
                .and_then(|s| s.parse::<i32>().ok())
                .ok_or_else(|| {
                    parse_err(pos + 1, format!("expected a generator s<i>, found '{tok}'"))
                })?;
            if !family.generator_indices(n).contains(&idx) {
                return Err(parse_err(
                    pos + 1,
                    format!("generator index {idx} out of range for type {family}, n = {n}"),
                ));
            }
            word.push(idx);
        }
        GroupElement::from_generators(family, n, &word)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images().iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{eps_pair, mu_pair, strategies};
    use proptest::prelude::*;

    fn gen(f: GroupFamily, n: usize, i: i32) -> GroupElement {
        GroupElement::generator(f, n, i).unwrap()
    }

    fn word(f: GroupFamily, n: usize, w: &[i32]) -> GroupElement {
        GroupElement::from_generators(f, n, w).unwrap()
    }

    #[test]
    fn generator_examples() {
        assert_eq!(gen(GroupFamily::SymA, 3, 1).images(), vec![2, 1, 3]);
        let t0 = gen(GroupFamily::SignedB, 3, 0);
        assert_eq!(t0.images(), vec![-1, 2, 3]);
        assert_eq!(t0.apply(-1).unwrap(), 1);
        let tm = gen(GroupFamily::EvenSignedD, 3, -1);
        assert_eq!(tm.apply(-2).unwrap(), 1);
        assert_eq!(tm.apply(-1).unwrap(), 2);
        assert_eq!(tm.images(), vec![-2, -1, 3]);
        assert_eq!(gen(GroupFamily::SignedB, 3, 2).images(), vec![1, 3, 2]);
        assert!(GroupElement::generator(GroupFamily::SymA, 3, 0).is_err());
        assert!(GroupElement::generator(GroupFamily::SignedB, 3, -1).is_err());
        assert!(GroupElement::generator(GroupFamily::EvenSignedD, 3, 0).is_err());
        assert!(GroupElement::generator(GroupFamily::SymA, 3, 3).is_err());
    }

    #[test]
    fn compose_examples() {
        let f = GroupFamily::SymA;
        assert!(word(f, 3, &[1, 1]).is_identity());
        assert_eq!(word(f, 3, &[1, 2, 1]), word(f, 3, &[2, 1, 2]));
        assert_eq!(word(f, 3, &[1, 2, 1]).images(), vec![3, 2, 1]);
        let t0 = gen(GroupFamily::SignedB, 2, 0);
        assert_eq!(t0.inverse(), t0);
        let g = word(GroupFamily::SignedB, 3, &[0, 1, 2]);
        assert!(g.compose(&g.inverse()).unwrap().is_identity());
        assert!(g
            .compose(&GroupElement::identity(GroupFamily::SymA, 3))
            .is_err());
        // compose(g, h) applies h first.
        let s1 = gen(f, 3, 1);
        let s2 = gen(f, 3, 2);
        assert_eq!(s1.compose(&s2).unwrap().apply(3).unwrap(), 1);
    }

    #[test]
    fn action_examples() {
        let g = Ground::Plain(3);
        let s1 = gen(GroupFamily::SymA, 3, 1);
        assert_eq!(
            s1.act(&mu_pair(g, 1, 3).unwrap()).unwrap(),
            mu_pair(g, 2, 3).unwrap()
        );
        let p = mu_pair(g, 1, 2).unwrap();
        assert_eq!(
            GroupElement::identity(GroupFamily::SymA, 3)
                .act(&p)
                .unwrap(),
            p
        );
        let sg = Ground::Signed(3);
        let tm = gen(GroupFamily::EvenSignedD, 3, -1);
        assert_eq!(
            tm.act(&eps_pair(sg, 1, 3).unwrap()).unwrap(),
            eps_pair(sg, -2, 3).unwrap()
        );
        assert!(s1.act(&eps_pair(sg, 1, 3).unwrap()).is_err());
    }

    #[test]
    fn coxeter_relations_hold() {
        for n in 2..=6 {
            let f = GroupFamily::SymA;
            for i in 1..n as i32 {
                assert!(word(f, n, &[i, i]).is_identity());
                for j in 1..n as i32 {
                    match (i - j).abs() {
                        1 => assert_eq!(word(f, n, &[i, j, i]), word(f, n, &[j, i, j])),
                        d if d >= 2 => assert_eq!(word(f, n, &[i, j]), word(f, n, &[j, i])),
                        _ => {}
                    }
                }
            }
            let b = GroupFamily::SignedB;
            assert_eq!(word(b, n, &[0, 1, 0, 1]), word(b, n, &[1, 0, 1, 0]));
            for &i in &b.generator_indices(n) {
                assert!(word(b, n, &[i, i]).is_identity());
                for &j in &b.generator_indices(n) {
                    if i >= 1 && j >= 1 && (i - j).abs() == 1 {
                        assert_eq!(word(b, n, &[i, j, i]), word(b, n, &[j, i, j]));
                    }
                    if (i - j).abs() >= 2 {
                        assert_eq!(word(b, n, &[i, j]), word(b, n, &[j, i]));
                    }
                }
            }
            let d = GroupFamily::EvenSignedD;
            if n >= 3 {
                assert_eq!(word(d, n, &[-1, 2, -1]), word(d, n, &[2, -1, 2]));
            }
            for &i in &d.generator_indices(n) {
                assert!(word(d, n, &[i, i]).is_identity());
                if i >= 1 && i != 2 {
                    assert_eq!(word(d, n, &[-1, i]), word(d, n, &[i, -1]));
                }
                for &j in &d.generator_indices(n) {
                    if i >= 1 && j >= 1 && (i - j).abs() == 1 {
                        assert_eq!(word(d, n, &[i, j, i]), word(d, n, &[j, i, j]));
                    }
                    if i >= 1 && j >= 1 && (i - j).abs() >= 2 {
                        assert_eq!(word(d, n, &[i, j]), word(d, n, &[j, i]));
                    }
                }
            }
        }
    }

    #[test]
    fn parse_and_display() {
        let f = GroupFamily::SignedB;
        let g = GroupElement::parse(f, 3, "s1 s2 s0").unwrap();
        assert_eq!(g, word(f, 3, &[1, 2, 0]));
        assert_eq!(GroupElement::parse(f, 3, &g.to_string()).unwrap(), g);
        assert_eq!(
            GroupElement::parse(GroupFamily::SymA, 3, "[2,1,3]").unwrap(),
            gen(GroupFamily::SymA, 3, 1)
        );
        let d = GroupElement::parse(GroupFamily::EvenSignedD, 3, "s-1").unwrap();
        assert_eq!(d.to_string(), "[-2,-1,3]");
        assert!(GroupElement::parse(GroupFamily::EvenSignedD, 3, "[-1,2,3]").is_err());
        assert!(GroupElement::parse(GroupFamily::SymA, 3, "[1,1,3]").is_err());
        assert_eq!(
            GroupElement::parse(GroupFamily::SymA, 3, "s1 s0").unwrap_err(),
            parse_err(2, "generator index 0 out of range for type A, n = 3")
        );
        assert!(GroupElement::parse(GroupFamily::SymA, 3, "1")
            .unwrap()
            .is_identity());
    }

    #[test]
    fn group_orders() {
        assert_eq!(GroupFamily::SymA.order(4), 24);
        assert_eq!(GroupFamily::SignedB.order(2), 8);
        assert_eq!(GroupFamily::EvenSignedD.order(4), 192);
    }

    fn group_word(f: GroupFamily, n: usize) -> impl Strategy<Value = GroupElement> {
        let idx = f.generator_indices(n);
        prop::collection::vec(prop::sample::select(idx), 0..12).prop_map(move |w| word(f, n, &w))
    }

    proptest! {
        #[test]
        fn action_is_a_homomorphism(
            g in group_word(GroupFamily::SignedB, 3),
            h in group_word(GroupFamily::SignedB, 3),
            p in strategies::partition(Ground::Signed(3)),
        ) {
            let lhs = g.compose(&h).unwrap().act(&p).unwrap();
            let rhs = g.act(&h.act(&p).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn signed_actions_preserve_classes(
            g in group_word(GroupFamily::EvenSignedD, 3),
            h in group_word(GroupFamily::SignedB, 3),
            p in strategies::b_partition(3),
        ) {
            let fp = p.classify();
            let gp = g.act(&p).unwrap().classify();
            let hp = h.act(&p).unwrap().classify();
            prop_assert!(gp.signed && hp.signed);
            prop_assert_eq!(gp.b_partition, fp.b_partition);
            prop_assert_eq!(hp.d_partition, fp.d_partition);
            prop_assert_eq!(gp.d_partition, fp.d_partition);
        }

        #[test]
        fn generators_act_as_involutions(i in 1i32..4, p in strategies::partition(Ground::Plain(4))) {
            let s = gen(GroupFamily::SymA, 4, i);
            prop_assert_eq!(s.compose(&s).unwrap().act(&p).unwrap(), p);
        }

        #[test]
        fn d_words_stay_even(g in group_word(GroupFamily::EvenSignedD, 4)) {
            prop_assert_eq!(g.images().iter().filter(|&&x| x < 0).count() % 2, 0);
            prop_assert_eq!(GroupElement::from_images(GroupFamily::EvenSignedD, 4, &g.images()).unwrap(), g);
        }
    }
}
