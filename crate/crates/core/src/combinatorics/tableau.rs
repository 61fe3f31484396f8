//! Nodes, the column-initial tableau `t_λ`, standard tableaux, residue sequences and degrees.
//!
//! Tableaux are stored as permutations: `entries[p]` is the entry of the node that holds
//! `p + 1` in `t_λ`. Thus `t = w_t · t_λ` with `w_t = entries` in one-line notation.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::charge::Bicharge;
use super::partition::{Bipartition, ShapeError};
use super::perm::{self, Perm};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Node {
    pub row: u32,
    pub col: u32,
    pub comp: usize,
}

impl Node {
    pub fn new(row: u32, col: u32, comp: usize) -> Self {
        Node { row, col, comp }
    }

    /// Strictly above: earlier component, or same component and higher row.
    pub fn is_above(&self, other: &Node) -> bool {
        (self.comp, self.row) < (other.comp, other.row)
    }
}

/// Geometry of `t_λ` together with residues for a fixed charge.
#[derive(Debug, Clone)]
pub struct Layout {
    pub shape: Bipartition,
    pub charge: Bicharge,
    pub n: usize,
    /// `cells[p]` holds `p + 1` in `t_λ`.
    pub cells: Vec<Node>,
    /// Residue of `cells[p]`.
    pub res: Vec<u8>,
    /// Pairs `(p, q)` of adjacent cells with `p` left of or above `q` in the same component.
    pub pairs: Vec<(usize, usize)>,
    /// Indices `r` such that `r` and `r + 1` share a row or a column of `t_λ`.
    pub killers: Vec<u8>,
    /// Garnir strings `ψ_p ψ_{p+1} ⋯ ψ_{p+b}` for components `(a,1^b)` with `a ≥ 2`, `b ≥ 1`.
    pub garnir: Vec<Vec<u8>>,
    index: HashMap<Node, usize>,
}

impl Layout {
    pub fn new(shape: &Bipartition, charge: &Bicharge) -> Result<Layout, ShapeError> {
        let level = shape.level();
        let order: Vec<usize> = if level == 2 { vec![2, 1] } else { vec![1] };
        let mut cells = Vec::new();
        for &m in &order {
            let p = shape.comp(m);
            for col in 1..=p.part(1) {
                let mut row = 1;
                while p.part(row as usize) >= col {
                    cells.push(Node::new(row, col, m));
                    row += 1;
                }
            }
        }
        let n = cells.len();
        assert!(n < 255, "shapes of size ≥ 255 are not supported");
        let res: Vec<u8> = cells.iter().map(|c| charge.residue(c.row, c.col, c.comp)).collect();
        let index: HashMap<Node, usize> = cells.iter().enumerate().map(|(i, c)| (*c, i)).collect();
        let mut pairs = Vec::new();
        for (p, c) in cells.iter().enumerate() {
            for nb in [Node::new(c.row, c.col + 1, c.comp), Node::new(c.row + 1, c.col, c.comp)] {
                if let Some(&q) = index.get(&nb) {
                    pairs.push((p, q));
                }
            }
        }
        let mut killers = Vec::new();
        for r in 1..n {
            let (a, b) = (cells[r - 1], cells[r]);
            if a.comp == b.comp && (a.row == b.row || a.col == b.col) {
                killers.push(r as u8);
            }
        }
        let mut garnir = Vec::new();
        for &m in &order {
            let p = shape.comp(m);
            if p.part(1) >= 2 && p.part(2) >= 1 {
                let leg = p.len() as u8 - 1;
                let start = index[&Node::new(1, 1, m)] as u8 + 1;
                if p.is_hook() {
                    garnir.push((start..=start + leg).collect());
                }
            }
        }
        Ok(Layout {
            shape: shape.clone(),
            charge: charge.clone(),
            n,
            cells,
            res,
            pairs,
            killers,
            garnir,
            index,
        })
    }

    pub fn position(&self, node: &Node) -> Option<usize> {
        self.index.get(node).copied()
    }

    pub fn is_standard(&self, w: &[u8]) -> bool {
        self.pairs.iter().all(|&(p, q)| w[p] < w[q])
    }

    /// Residue sequence `i_t` of the tableau `w · t_λ`.
    pub fn residue_sequence(&self, w: &[u8]) -> Vec<u8> {
        let mut seq = vec![0u8; self.n];
        for (p, &v) in w.iter().enumerate() {
            seq[v as usize - 1] = self.res[p];
        }
        seq
    }

    pub fn initial_residues(&self) -> Vec<u8> {
        self.res.clone()
    }

    /// All standard tableaux, sorted lexicographically by entries in `t_λ` reading order.
    pub fn standard_tableaux(&self) -> Vec<Perm> {
        let mut out = Vec::new();
        self.place(None, &mut vec![0u8; self.n], 1, &mut out);
        out.sort();
        out
    }

    /// Standard tableaux with residue sequence `target`, sorted.
    pub fn standard_with_residues(&self, target: &[u8]) -> Vec<Perm> {
        let mut out = Vec::new();
        self.place(Some(target), &mut vec![0u8; self.n], 1, &mut out);
        out.sort();
        out
    }

    fn place(&self, target: Option<&[u8]>, w: &mut Vec<u8>, k: u8, out: &mut Vec<Perm>) {
        if k as usize > self.n {
            out.push(w.clone());
            return;
        }
        for p in 0..self.n {
            if w[p] != 0 {
                continue;
            }
            if let Some(t) = target {
                if self.res[p] != t[k as usize - 1] {
                    continue;
                }
            }
            let c = self.cells[p];
            let left_ok = c.col == 1 || w[self.index[&Node::new(c.row, c.col - 1, c.comp)]] != 0;
            let up_ok = c.row == 1 || w[self.index[&Node::new(c.row - 1, c.col, c.comp)]] != 0;
            if left_ok && up_ok {
                w[p] = k;
                self.place(target, w, k + 1, out);
                w[p] = 0;
            }
        }
    }

    /// Degree of a standard tableau via the recursive addable/removable count.
    pub fn degree(&self, w: &[u8]) -> i32 {
        let level = self.shape.level();
        let mut rows: Vec<Vec<u32>> = (1..=level).map(|m| self.shape.comp(m).parts().to_vec()).collect();
        let inv = perm::inverse(w);
        let mut deg = 0i32;
        for k in (1..=self.n).rev() {
            let a = self.cells[inv[k - 1] as usize - 1];
            let i = self.charge.residue(a.row, a.col, a.comp);
            let (add, rem) = self.addable_removable(&rows);
            deg += add
                .iter()
                .filter(|b| b.is_above(&a) && self.charge.residue(b.row, b.col, b.comp) == i)
                .count() as i32;
            deg -= rem
                .iter()
                .filter(|b| b.is_above(&a) && self.charge.residue(b.row, b.col, b.comp) == i)
                .count() as i32;
            let comp_rows = &mut rows[a.comp - 1];
            comp_rows[a.row as usize - 1] -= 1;
            while comp_rows.last() == Some(&0) {
                comp_rows.pop();
            }
        }
        deg
    }

    fn addable_removable(&self, rows: &[Vec<u32>]) -> (Vec<Node>, Vec<Node>) {
        addable_removable(rows)
    }

    /// Graded dimension as a map degree → multiplicity.
    pub fn graded_dim(&self, tableaux: &[Perm]) -> std::collections::BTreeMap<i32, u64> {
        let mut out = std::collections::BTreeMap::new();
        for w in tableaux {
            *out.entry(self.degree(w)).or_insert(0) += 1;
        }
        out
    }

    pub fn tableau_string(&self, w: &[u8]) -> String {
        let level = self.shape.level();
        let mut comps = Vec::new();
        for m in 1..=level {
            let p = self.shape.comp(m);
            let mut rows = Vec::new();
            for r in 1..=p.len() as u32 {
                let row: Vec<String> = (1..=p.part(r as usize))
                    .map(|c| w[self.index[&Node::new(r, c, m)]].to_string())
                    .collect();
                rows.push(row.join(","));
            }
            comps.push(if rows.is_empty() {
                "∅".to_string()
            } else {
                rows.join("/")
            });
        }
        comps.join("|")
    }
}

/// Addable and removable nodes of a multipartition given by its row lengths.
pub fn addable_removable(rows: &[Vec<u32>]) -> (Vec<Node>, Vec<Node>) {
    let mut add = Vec::new();
    let mut rem = Vec::new();
    for (mi, comp) in rows.iter().enumerate() {
        let m = mi + 1;
        let len = comp.len();
        for r in 0..=len {
            let cur = comp.get(r).copied().unwrap_or(0);
            let prev = if r == 0 { u32::MAX } else { comp[r - 1] };
            if prev > cur {
                add.push(Node::new(r as u32 + 1, cur + 1, m));
            }
            if r < len {
                let next = comp.get(r + 1).copied().unwrap_or(0);
                if cur > next {
                    rem.push(Node::new(r as u32 + 1, cur, m));
                }
            }
        }
    }
    (add, rem)
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}

/// `|Std(λ)|` for hook components.
pub fn std_count(shape: &Bipartition) -> u64 {
    let mut total = 1u64;
    let mut placed = 0u64;
    for c in shape.comps() {
        let (a, b) = c.hook_params().expect("hook components");
        let size = c.size() as u64;
        let f = if size == 0 {
            1
        } else {
            binomial((a + b - 1) as u64, b as u64)
        };
        placed += size;
        total *= binomial(placed, size) * f;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    fn layout(s: &str, e: i64) -> Layout {
        let shape: Bipartition = s.parse().unwrap();
        let charge = Bicharge::zero(e as u8, shape.level());
        Layout::new(&shape, &charge).unwrap()
    }

    #[test]
    fn column_initial_residues() {
        let l = layout("6|6", 3);
        assert_eq!(l.res, vec![0, 1, 2, 0, 1, 2, 0, 1, 2, 0, 1, 2]);
        let l = layout("1|1", 3);
        assert_eq!(l.res, vec![0, 0]);
    }

    #[test]
    fn bihook_initial_residue_pattern() {
        for e in 3..=5u8 {
            for a in 1..=e as u32 {
                for b in 0..(e as u32) {
                    let l = layout(&Bipartition::bihook(a, b, a, b).to_string(), e as i64);
                    let mut one: Vec<u8> = vec![0];
                    one.extend((1..=b).map(|k| ((e as u32 - k) % e as u32) as u8));
                    one.extend((1..a).map(|k| (k % e as u32) as u8));
                    let mut both = one.clone();
                    both.extend(one);
                    assert_eq!(l.res, both);
                }
            }
        }
    }

    #[test]
    fn killers_and_garnir() {
        let l = layout("2,1^2|3,1", 3);
        // comp2 (3,1): 1,2 down column 1, then 3,4 along row 1; comp1: 5,6,7 down, 8.
        assert_eq!(l.killers, vec![1, 3, 5, 6]);
        assert_eq!(l.garnir, vec![vec![1, 2], vec![5, 6, 7]]);
        let l = layout("3|2", 3);
        assert_eq!(l.killers, vec![1, 3, 4]);
        assert!(l.garnir.is_empty());
    }

    #[test]
    fn standard_counts() {
        for (s, c) in [
            ("1|1", 2),
            ("6|6", 924),
            ("2|2", 6),
            ("2,1|2,1", 80),
            ("3", 1),
            ("2,1", 2),
        ] {
            let l = layout(s, 3);
            assert_eq!(l.standard_tableaux().len(), c, "{s}");
            assert_eq!(std_count(&l.shape), c as u64, "{s}");
        }
    }

    #[test]
    fn standard_tableaux_sorted_and_t_lambda_first() {
        let l = layout("2,1|2", 3);
        let all = l.standard_tableaux();
        assert_eq!(all[0], perm::identity(l.n));
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn single_node_degree() {
        let l = layout("1|∅", 3);
        assert_eq!(l.degree(&[1]), 0);
        let l = layout("∅|1", 3);
        // the node (1,1,2) has the addable 0-node (1,1,1) above it
        assert_eq!(l.degree(&[1]), 1);
    }
}
