//! `i`-signatures, normal and good nodes, and regular (conjugate-Kleshchev) bipartitions.

use std::collections::HashMap;

use super::charge::Bicharge;
use super::partition::Bipartition;
use super::tableau::{addable_removable, Node};

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SignatureNodes {
    pub normal: Vec<Node>,
    pub conormal: Vec<Node>,
    pub good: Option<Node>,
    pub cogood: Option<Node>,
}

fn rows_of(shape: &Bipartition) -> Vec<Vec<u32>> {
    shape.comps().iter().map(|c| c.parts().to_vec()).collect()
}

/// Reads addable (`+`) and removable (`−`) `i`-nodes from the top of the first component
/// down, cancels adjacent `+−` pairs and reports what survives.
pub fn signature_nodes(shape: &Bipartition, i: u8, charge: &Bicharge) -> SignatureNodes {
    signature_from_rows(&rows_of(shape), i, charge)
}

fn signature_from_rows(rows: &[Vec<u32>], i: u8, charge: &Bicharge) -> SignatureNodes {
    let (add, rem) = addable_removable(rows);
    let mut seq: Vec<(Node, bool)> = add
        .into_iter()
        .map(|a| (a, true))
        .chain(rem.into_iter().map(|r| (r, false)))
        .filter(|(nd, _)| charge.residue(nd.row, nd.col, nd.comp) == i)
        .collect();
    seq.sort_by_key(|(nd, _)| (nd.comp, nd.row));
    let mut stack: Vec<(Node, bool)> = Vec::new();
    for item in seq {
        if !item.1 && matches!(stack.last(), Some((_, true))) {
            stack.pop();
        } else {
            stack.push(item);
        }
    }
    let normal: Vec<Node> = stack.iter().filter(|x| !x.1).map(|x| x.0).collect();
    let conormal: Vec<Node> = stack.iter().filter(|x| x.1).map(|x| x.0).collect();
    SignatureNodes {
        good: normal.last().copied(),
        cogood: conormal.first().copied(),
        normal,
        conormal,
    }
}

/// True iff the empty bipartition is reached by successively removing good nodes.
pub fn is_regular(shape: &Bipartition, charge: &Bicharge) -> bool {
    let mut memo = HashMap::new();
    regular_rec(rows_of(shape), charge, &mut memo)
}

fn regular_rec(rows: Vec<Vec<u32>>, charge: &Bicharge, memo: &mut HashMap<Vec<Vec<u32>>, bool>) -> bool {
    if rows.iter().all(|c| c.is_empty()) {
        return true;
    }
    if let Some(&v) = memo.get(&rows) {
        return v;
    }
    let mut ok = false;
    for i in 0..charge.e {
        if let Some(g) = signature_from_rows(&rows, i, charge).good {
            let mut next = rows.clone();
            let comp = &mut next[g.comp - 1];
            comp[g.row as usize - 1] -= 1;
            while comp.last() == Some(&0) {
                comp.pop();
            }
            if regular_rec(next, charge, memo) {
                ok = true;
                break;
            }
        }
    }
    memo.insert(rows, ok);
    ok
}

/// Whether `shape` can be built from `∅` by adding cogood nodes (the dual description).
pub fn reachable_by_cogood(shape: &Bipartition, charge: &Bicharge) -> bool {
    let target = rows_of(shape);
    let mut frontier = vec![vec![vec![]; shape.level()]];
    let n = shape.size();
    for _ in 0..n {
        let mut next = Vec::new();
        for rows in frontier {
            for i in 0..charge.e {
                if let Some(c) = signature_from_rows(&rows, i, charge).cogood {
                    let mut r: Vec<Vec<u32>> = rows.clone();
                    let comp = &mut r[c.comp - 1];
                    if c.row as usize > comp.len() {
                        comp.push(1);
                    } else {
                        comp[c.row as usize - 1] += 1;
                    }
                    let fits = r
                        .iter()
                        .zip(target.iter())
                        .all(|(a, b)| a.len() <= b.len() && a.iter().zip(b.iter()).all(|(x, y)| x <= y));
                    if fits && !next.contains(&r) {
                        next.push(r);
                    }
                }
            }
        }
        frontier = next;
    }
    frontier.contains(&target)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(e: u8) -> Bicharge {
        Bicharge::zero(e, 2)
    }

    #[test]
    fn empty_signature() {
        let s: Bipartition = "∅|∅".parse().unwrap();
        let sig = signature_nodes(&s, 0, &z(3));
        assert!(sig.normal.is_empty() && sig.good.is_none());
        assert_eq!(sig.conormal, vec![Node::new(1, 1, 1), Node::new(1, 1, 2)]);
        assert_eq!(sig.cogood, Some(Node::new(1, 1, 1)));
        let sig = signature_nodes(&s, 1, &z(3));
        assert!(sig.conormal.is_empty());
    }

    #[test]
    fn small_repeated_hooks_are_regular() {
        for e in 3..=5u32 {
            for a in 1..=e {
                for b in 0..e {
                    let s = Bipartition::bihook(a, b, a, b);
                    let expect = a + b != e;
                    assert_eq!(is_regular(&s, &z(e as u8)), expect, "{s} e={e}");
                }
            }
        }
    }

    #[test]
    fn one_row_pairs_beyond_e_are_not_regular() {
        for e in 2..=4u32 {
            for k in e..=2 * e {
                let s = Bipartition::bihook(k, 0, k, 0);
                assert!(!is_regular(&s, &z(e as u8)), "{s}");
            }
        }
    }

    #[test]
    fn removal_and_addition_descriptions_agree() {
        for e in 2..=4u8 {
            for n in 1..=7 {
                for s in Bipartition::bihooks(n) {
                    assert_eq!(is_regular(&s, &z(e)), reachable_by_cogood(&s, &z(e)), "{s} e={e}");
                }
            }
        }
    }
}
