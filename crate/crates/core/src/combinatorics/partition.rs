//! Partitions and bipartitions, the `λ`-string grammar, conjugation and dominance.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShapeError {
    #[error("parse error at column {pos}: {msg} (input {input:?})")]
    Parse { input: String, pos: usize, msg: String },
    #[error("parts must be weakly decreasing: {0:?}")]
    NotDecreasing(Vec<u32>),
    #[error("component {comp} of {shape} is not a hook")]
    NotHook { shape: String, comp: usize },
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("level mismatch: {0} vs {1}")]
    LevelMismatch(usize, usize),
}

/// A weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self, ShapeError> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(ShapeError::NotDecreasing(parts));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: vec![] }
    }

    /// The hook `(a, 1^b)`; `a = 0` gives the empty partition.
    pub fn hook(a: u32, b: u32) -> Self {
        if a == 0 {
            return Self::empty();
        }
        let mut parts = vec![a];
        parts.extend(std::iter::repeat_n(1, b as usize));
        Partition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (1-based), zero beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn is_hook(&self) -> bool {
        self.parts.iter().skip(1).all(|&p| p == 1)
    }

    /// Arm length `a` and leg length `b` of a hook `(a, 1^b)`.
    pub fn hook_params(&self) -> Option<(u32, u32)> {
        if !self.is_hook() {
            return None;
        }
        match self.parts.first() {
            None => Some((0, 0)),
            Some(&a) => Some((a, self.parts.len() as u32 - 1)),
        }
    }

    pub fn conjugate(&self) -> Partition {
        let mut out = Vec::new();
        if let Some(&first) = self.parts.first() {
            for c in 1..=first {
                out.push(self.parts.iter().filter(|&&p| p >= c).count() as u32);
            }
        }
        Partition { parts: out }
    }

    /// Sum of the first `k` parts.
    pub fn partial_sum(&self, k: usize) -> u64 {
        self.parts.iter().take(k).map(|&p| p as u64).sum()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "∅");
        }
        let mut chunks = Vec::new();
        let mut i = 0;
        while i < self.parts.len() {
            let p = self.parts[i];
            let mut j = i;
            while j < self.parts.len() && self.parts[j] == p {
                j += 1;
            }
            let m = j - i;
            if m == 1 {
                chunks.push(p.to_string());
            } else if p == 1 || m > 2 {
                chunks.push(format!("{p}^{m}"));
            } else {
                chunks.push(p.to_string());
                chunks.push(p.to_string());
            }
            i = j;
        }
        write!(f, "{}", chunks.join(","))
    }
}

/// A multipartition of level 1 or 2; `comps[0]` is `λ^(1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Bipartition {
    comps: Vec<Partition>,
}

impl Bipartition {
    pub fn new(first: Partition, second: Partition) -> Self {
        Bipartition {
            comps: vec![first, second],
        }
    }

    pub fn level_one(p: Partition) -> Self {
        Bipartition { comps: vec![p] }
    }

    /// `((a,1^b),(c,1^d))`.
    pub fn bihook(a: u32, b: u32, c: u32, d: u32) -> Self {
        Self::new(Partition::hook(a, b), Partition::hook(c, d))
    }

    pub fn level(&self) -> usize {
        self.comps.len()
    }

    /// Component `m` (1-based).
    pub fn comp(&self, m: usize) -> &Partition {
        &self.comps[m - 1]
    }

    pub fn comps(&self) -> &[Partition] {
        &self.comps
    }

    pub fn size(&self) -> usize {
        self.comps.iter().map(Partition::size).sum()
    }

    pub fn is_hook_shape(&self) -> bool {
        self.comps.iter().all(Partition::is_hook)
    }

    pub fn require_hooks(&self) -> Result<(), ShapeError> {
        for (i, c) in self.comps.iter().enumerate() {
            if !c.is_hook() {
                return Err(ShapeError::NotHook {
                    shape: self.to_string(),
                    comp: i + 1,
                });
            }
        }
        Ok(())
    }

    /// `λ' = (λ^(2)', λ^(1)')`.
    pub fn conjugate(&self) -> Bipartition {
        Bipartition {
            comps: self.comps.iter().rev().map(Partition::conjugate).collect(),
        }
    }

    pub fn swap(&self) -> Bipartition {
        Bipartition {
            comps: self.comps.iter().rev().cloned().collect(),
        }
    }

    /// Dominance: the partial sums of `λ^(1)`, then `|λ^(1)|` plus the partial sums of
    /// `λ^(2)`, dominate those of `μ`.
    pub fn dominates(&self, other: &Bipartition) -> Result<bool, ShapeError> {
        if self.size() != other.size() {
            return Err(ShapeError::SizeMismatch(self.size(), other.size()));
        }
        if self.level() != other.level() {
            return Err(ShapeError::LevelMismatch(self.level(), other.level()));
        }
        let n = self.size();
        let mut offset_l = 0u64;
        let mut offset_m = 0u64;
        for (cl, cm) in self.comps.iter().zip(other.comps.iter()) {
            for k in 1..=n {
                if offset_l + cl.partial_sum(k) < offset_m + cm.partial_sum(k) {
                    return Ok(false);
                }
            }
            offset_l += cl.size() as u64;
            offset_m += cm.size() as u64;
        }
        Ok(true)
    }

    pub fn parse(input: &str) -> Result<Bipartition, ShapeError> {
        let err = |pos: usize, msg: &str| ShapeError::Parse {
            input: input.to_string(),
            pos,
            msg: msg.to_string(),
        };
        let mut comps = Vec::new();
        let mut start = 0;
        let pieces: Vec<&str> = input.split('|').collect();
        if pieces.len() > 2 {
            let pos = input.match_indices('|').nth(1).map(|(i, _)| i + 1).unwrap_or(0);
            return Err(err(pos, "at most two components are supported"));
        }
        for piece in pieces {
            comps.push(parse_component(piece, start, &err)?);
            start += piece.len() + 1;
        }
        Ok(Bipartition { comps })
    }

    /// All bipartitions `((a,1^b),(c,1^d))` of `n` with both components nonempty.
    pub fn bihooks(n: usize) -> Vec<Bipartition> {
        let mut out = Vec::new();
        for m in 1..n {
            for h1 in hooks_of(m) {
                for h2 in hooks_of(n - m) {
                    out.push(Bipartition::new(h1.clone(), h2));
                }
            }
        }
        out
    }

    /// All hook partitions of `n` as level-one shapes.
    pub fn level_one_hooks(n: usize) -> Vec<Bipartition> {
        hooks_of(n).into_iter().map(Bipartition::level_one).collect()
    }
}

/// Hooks `(a,1^b)` of `m ≥ 1`, largest arm first.
pub fn hooks_of(m: usize) -> Vec<Partition> {
    (1..=m as u32).rev().map(|a| Partition::hook(a, m as u32 - a)).collect()
}

fn parse_component(
    piece: &str,
    offset: usize,
    err: &dyn Fn(usize, &str) -> ShapeError,
) -> Result<Partition, ShapeError> {
    let trimmed: String = piece.chars().filter(|c| !c.is_whitespace()).collect();
    if trimmed.is_empty() || trimmed == "∅" || trimmed == "-" {
        return Ok(Partition::empty());
    }
    let mut parts = Vec::new();
    let mut pos = offset;
    for chunk in piece.split(',') {
        let col = pos + 1 + chunk.len() - chunk.trim_start().len();
        let token: String = chunk.chars().filter(|c| !c.is_whitespace()).collect();
        if token.is_empty() {
            return Err(err(col, "empty part"));
        }
        let (base, exp) = match token.split_once('^') {
            Some((b, e)) => (b, Some(e)),
            None => (token.as_str(), None),
        };
        let base: u32 = base
            .parse()
            .map_err(|_| err(col, &format!("expected a positive integer, found {base:?}")))?;
        if base == 0 {
            return Err(err(col, "parts must be positive"));
        }
        let mult: usize = match exp {
            None => 1,
            Some(e) => e
                .parse()
                .map_err(|_| err(col, &format!("expected an exponent, found {e:?}")))?,
        };
        parts.extend(std::iter::repeat_n(base, mult));
        pos += chunk.len() + 1;
    }
    Partition::new(parts.clone()).map_err(|_| err(offset + 1, &format!("parts {parts:?} are not weakly decreasing")))
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self
            .comps
            .iter()
            .map(|c| if c.is_empty() { "∅".to_string() } else { c.to_string() })
            .collect();
        write!(f, "{}", s.join("|"))
    }
}

impl std::str::FromStr for Bipartition {
    type Err = ShapeError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Bipartition::parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bp(s: &str) -> Bipartition {
        s.parse().unwrap()
    }

    #[test]
    fn grammar_round_trip() {
        for s in ["9|9", "2,1^2|3", "1^4|2,1", "3", "∅|2", "2,2|1"] {
            let b = bp(s);
            assert_eq!(bp(&b.to_string()), b);
        }
        assert_eq!(bp(" 2 , 1^2 | 3 "), bp("2,1^2|3"));
        assert_eq!(bp("2,1^2|3").comp(1).parts(), &[2, 1, 1]);
    }

    #[test]
    fn grammar_errors_carry_positions() {
        match Bipartition::parse("2,x|3") {
            Err(ShapeError::Parse { pos, .. }) => assert_eq!(pos, 3),
            other => panic!("{other:?}"),
        }
        match Bipartition::parse("1|2,3") {
            Err(ShapeError::Parse { pos, .. }) => assert_eq!(pos, 3),
            other => panic!("{other:?}"),
        }
        assert!(Bipartition::parse("1|1|1").is_err());
        assert!(Bipartition::parse("2,,1").is_err());
    }

    #[test]
    fn conjugation() {
        assert_eq!(bp("2,1|3").conjugate(), bp("1^3|2,1"));
        assert_eq!(bp("∅|∅").conjugate(), bp("∅|∅"));
        assert_eq!(bp("6|3").conjugate(), bp("1^3|1^6"));
    }

    #[test]
    fn dominance_examples() {
        assert!(bp("2|∅").dominates(&bp("1|1")).unwrap());
        assert!(!bp("1|1").dominates(&bp("2|∅")).unwrap());
        assert!(bp("1|1").dominates(&bp("1|1")).unwrap());
        assert!(bp("1|1").dominates(&bp("∅|2")).unwrap());
        assert!(!bp("1|2").dominates(&bp("2|1")).unwrap());
        assert!(bp("1|1").dominates(&bp("2|1")).is_err());
    }

    fn partitions(n: u32, max: u32) -> Vec<Vec<u32>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for first in (1..=n.min(max)).rev() {
            for mut rest in partitions(n - first, first) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }

    fn bipartitions(n: u32) -> Vec<Bipartition> {
        let mut out = Vec::new();
        for m in 0..=n {
            for p in partitions(m, m) {
                for q in partitions(n - m, n - m) {
                    out.push(Bipartition::new(
                        Partition::new(p.clone()).unwrap(),
                        Partition::new(q).unwrap(),
                    ));
                }
            }
        }
        out
    }

    #[test]
    fn dominance_is_a_partial_order() {
        for n in 1..=8 {
            let all = bipartitions(n);
            let dom: Vec<Vec<bool>> = all
                .iter()
                .map(|x| all.iter().map(|y| x.dominates(y).unwrap()).collect())
                .collect();
            for i in 0..all.len() {
                assert!(dom[i][i]);
                for j in 0..all.len() {
                    if i != j && dom[i][j] {
                        assert!(!dom[j][i], "{} and {}", all[i], all[j]);
                    }
                    if dom[i][j] {
                        for k in 0..all.len() {
                            if dom[j][k] {
                                assert!(dom[i][k], "{} {} {}", all[i], all[j], all[k]);
                            }
                        }
                    }
                }
            }
        }
    }
}
