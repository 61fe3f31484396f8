//! Closed-form decomposability predictions for bihooks and level-one hooks.

use serde::Serialize;

use crate::combinatorics::{Bipartition, Partition};

/// `p ∤ m`, with characteristic 0 dividing nothing but 0.
pub fn char_not_dividing(p: u32, m: u32) -> bool {
    if p == 0 {
        m != 0
    } else {
        !m.is_multiple_of(p)
    }
}

fn hook(p: &Partition) -> Option<(u32, u32)> {
    if p.is_empty() {
        None
    } else {
        p.hook_params()
    }
}

fn hook_shape(a: u32, b: u32) -> Partition {
    if a == 0 {
        Partition::new(vec![1; b as usize]).expect("column")
    } else {
        Partition::hook(a, b)
    }
}

/// Small bihooks (`n ≤ 2e`). `None` when `n > 2e` or `λ` is not a bihook.
pub fn small_bihooks_expected(shape: &Bipartition, e: u8, p: u32) -> Option<bool> {
    let n = shape.size();
    let e = e as usize;
    if n > 2 * e || shape.level() != 2 || !shape.is_hook_shape() || shape.comps().iter().any(|c| c.is_empty()) {
        return None;
    }
    if e == 2 {
        let listed = ["2|2", "1^2|1^2", "2|1^2", "1^2|2"]
            .iter()
            .any(|s| s.parse::<Bipartition>().ok().as_ref() == Some(shape));
        return Some(p != 2 && listed);
    }
    Some(p != 2 && n == 2 * e && shape.comp(1) == shape.comp(2))
}

/// Parameters `(k, j, a, b)` of a shape `((ke+a,1^b),(je+a,1^b))` or its conjugate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FamilyMatch {
    pub k: u32,
    pub j: u32,
    pub a: u32,
    pub b: u32,
    pub conjugated: bool,
    /// Which of the listed shape patterns matched (0-based).
    pub pattern: u8,
}

impl FamilyMatch {
    /// `j, k > 1`: decomposable if `j+k` is odd or `p ≠ 2`, no prediction otherwise.
    /// `j = 1` or `k = 1`: decomposable iff `p ∤ j+k`.
    pub fn predicts(&self, p: u32) -> Option<bool> {
        if self.j > 1 && self.k > 1 {
            ((self.j + self.k) % 2 == 1 || p != 2).then_some(true)
        } else {
            Some(char_not_dividing(p, self.j + self.k))
        }
    }

    pub fn undecorated(&self) -> bool {
        self.a == 0 && self.b == 0
    }
}

fn allowed_decorations(e: u32) -> Vec<(u32, u32)> {
    let mut out = vec![(0, 0)];
    for a in 1..=e {
        for b in 0..e {
            if a + b != e {
                out.push((a, b));
            }
        }
    }
    out
}

fn split(x: u32, a: u32, e: u32) -> Option<u32> {
    (x >= a + e && (x - a).is_multiple_of(e)).then(|| (x - a) / e)
}

fn direct_matches(shape: &Bipartition, e: u32, conjugated: bool, with_e2_mixed: bool) -> Vec<FamilyMatch> {
    let mut out = Vec::new();
    if shape.level() != 2 {
        return out;
    }
    let (Some((x1, l1)), Some((x2, l2))) = (hook(shape.comp(1)), hook(shape.comp(2))) else {
        return out;
    };
    for (a, b) in allowed_decorations(e) {
        if l1 == b && l2 == b {
            if let (Some(k), Some(j)) = (split(x1, a, e), split(x2, a, e)) {
                out.push(FamilyMatch {
                    k,
                    j,
                    a,
                    b,
                    conjugated,
                    pattern: 0,
                });
            }
        }
        if !with_e2_mixed {
            continue;
        }
        // ((2k+a,1^b),(a,1^{2j+b})) and ((a,1^{2k+b}),(2j+a,1^b)), reading (0,1^m) as (1^m).
        let column_arm = |x: u32, l: u32| -> Option<u32> {
            let (x, l) = if a == 0 && x == 1 { (0, l + 1) } else { (x, l) };
            (x == a && l >= b + e && (l - b) % e == 0).then(|| (l - b) / e)
        };
        if l1 == b {
            if let (Some(k), Some(j)) = (split(x1, a, e), column_arm(x2, l2)) {
                out.push(FamilyMatch {
                    k,
                    j,
                    a,
                    b,
                    conjugated,
                    pattern: 2,
                });
            }
        }
        if l2 == b {
            if let (Some(k), Some(j)) = (column_arm(x1, l1), split(x2, a, e)) {
                out.push(FamilyMatch {
                    k,
                    j,
                    a,
                    b,
                    conjugated,
                    pattern: 3,
                });
            }
        }
    }
    out
}

/// All ways of writing `λ` in the main families, directly or through conjugation.
pub fn main_family_matches(shape: &Bipartition, e: u8) -> Vec<FamilyMatch> {
    let e = e as u32;
    let mut out = direct_matches(shape, e, false, false);
    out.extend(
        direct_matches(&shape.conjugate(), e, true, false)
            .into_iter()
            .map(|m| FamilyMatch { pattern: 1, ..m }),
    );
    out
}

/// The four `e = 2` families with `κ = (0,0)`.
pub fn e2_family_matches(shape: &Bipartition) -> Vec<FamilyMatch> {
    let mut out = direct_matches(shape, 2, false, true);
    out.extend(
        direct_matches(&shape.conjugate(), 2, true, false)
            .into_iter()
            .map(|m| FamilyMatch { pattern: 1, ..m }),
    );
    out
}

/// A prediction together with how it was reached.
#[derive(Debug, Clone, Serialize)]
pub struct FamilyPrediction {
    /// `None` when the family statement says nothing (`j, k > 1`, `j+k` even, `p = 2`).
    pub decomposable: Option<bool>,
    pub used: FamilyMatch,
    /// Other parameterizations of the same shape predicting the opposite.
    pub conflicting: Vec<FamilyMatch>,
}

/// Prediction from a list of matches. The undecorated reading `a = b = 0` is preferred, since it
/// follows from the eigenvalue argument directly rather than from induction.
pub fn predict(matches: &[FamilyMatch], p: u32) -> Option<FamilyPrediction> {
    let used = *matches.iter().find(|m| m.undecorated()).or_else(|| matches.first())?;
    let decomposable = used.predicts(p);
    let conflicting = matches
        .iter()
        .copied()
        .filter(|m| m.predicts(p).is_some() && decomposable.is_some() && m.predicts(p) != decomposable)
        .collect();
    Some(FamilyPrediction {
        decomposable,
        used,
        conflicting,
    })
}

/// Level-one hook `(a,1^b)` read as `(a,b)` with `a ≥ b` (or `a > b`), or through its conjugate.
fn level1_params(hook_part: &Partition, strict: bool) -> Option<(u32, u32)> {
    let (x, l) = hook(hook_part)?;
    let ok = |a: u32, b: u32| if strict { a > b } else { a >= b };
    if ok(x, l) {
        Some((x, l))
    } else if ok(l + 1, x - 1) {
        Some((l + 1, x - 1))
    } else {
        None
    }
}

/// `e = char = 2`: decomposable iff `a+b` odd and `a−1 ≢ b (mod 2^L)` with `2^{L−1} ≤ b < 2^L`.
pub fn level1_char2(a: u32, b: u32) -> bool {
    if b == 0 || (a + b).is_multiple_of(2) {
        return false;
    }
    let l = 32 - b.leading_zeros();
    let m = 1u64 << l;
    (a as u64 + m - 1) % m != b as u64 % m
}

/// `e = 2`, `char ≠ 2`, `a > b`: decomposable iff `a+b` odd and either `b ≥ 4`, or `b ∈ {2,3}`
/// and `char ∤ ⌈a/2⌉`.
pub fn level1_odd_char(a: u32, b: u32, p: u32) -> bool {
    if (a + b).is_multiple_of(2) || a <= b {
        return false;
    }
    b >= 4 || ((b == 2 || b == 3) && char_not_dividing(p, a.div_ceil(2)))
}

/// Both level-one criteria for the hook `(a,1^b)`: `(char2, odd)` where each applies.
pub fn level1_criteria(a: u32, b: u32, p: u32) -> (Option<bool>, Option<bool>) {
    let hook_part = Partition::hook(a, b);
    let char2 = (p == 2).then(|| {
        level1_params(&hook_part, false)
            .map(|(a, b)| level1_char2(a, b))
            .unwrap_or(false)
    });
    let odd = (p != 2).then(|| {
        level1_params(&hook_part, true)
            .map(|(a, b)| level1_odd_char(a, b, p))
            .unwrap_or(false)
    });
    (char2, odd)
}

/// Whether the level-one hook module at `e = 2` is decomposable over characteristic `p`.
pub fn level1_decomposable(hook_part: &Partition, p: u32) -> bool {
    let Some((a, b)) = hook(hook_part) else {
        return false;
    };
    let (m, s) = level1_criteria(a, b, p);
    m.or(s).unwrap_or(false)
}

/// A bihook with a component whose level-one module is decomposable (`e = 2`).
pub fn lev1tolev2(shape: &Bipartition, p: u32) -> bool {
    shape.level() == 2 && shape.comps().iter().any(|c| level1_decomposable(c, p))
}

const CHAR2_BASE: [(u32, u32); 6] = [(4, 2), (2, 4), (8, 2), (2, 8), (5, 3), (3, 5)];

/// Extra characteristic-2 decomposables listed for `e ≠ 2`: the base shapes `((ke),(je))`, their
/// decorated versions and their conjugates.
pub fn enot2_char2_extra(shape: &Bipartition, e: u8) -> bool {
    main_family_matches(shape, e)
        .iter()
        .any(|m| CHAR2_BASE.contains(&(m.k, m.j)))
}

/// Classification claimed for `e ≠ 2`, `char ≠ 2`: small bihooks and the main families.
pub fn enot2_expected(shape: &Bipartition, e: u8, p: u32) -> bool {
    if small_bihooks_expected(shape, e, p) == Some(true) {
        return true;
    }
    predict(&main_family_matches(shape, e), p)
        .and_then(|f| f.decomposable)
        .unwrap_or(false)
}

/// The extra `e = 2`, `κ_1 = κ_2` decomposables listed for small characteristics, closed under
/// conjugation and component swap.
pub fn e2_listed_extra(shape: &Bipartition, p: u32) -> bool {
    let base: &[&str] = match p {
        2 => &["3,1^2|3", "7,1^2|3", "5,1^4|3", "7|3,1^2", "5,1^4|5"],
        3 => &["5,1^2|3", "5,1^2|5", "5,1^2|7"],
        5 => &["9,1^2|3"],
        _ => &[],
    };
    base.iter().any(|s| {
        let b: Bipartition = s.parse().expect("listed shape");
        [b.clone(), b.conjugate(), b.swap(), b.conjugate().swap()].contains(shape)
    })
}

/// Classification claimed for `e = 2`.
pub fn e2_expected(shape: &Bipartition, equal_charges: bool, p: u32) -> bool {
    if lev1tolev2(shape, p) {
        return true;
    }
    if !equal_charges {
        return false;
    }
    small_bihooks_expected(shape, 2, p) == Some(true)
        || predict(&e2_family_matches(shape), p)
            .and_then(|f| f.decomposable)
            .unwrap_or(false)
}

/// `((ke+a,1^b),(je+a,1^b))` built from parameters.
pub fn family_shape(k: u32, j: u32, a: u32, b: u32, e: u8) -> Bipartition {
    let e = e as u32;
    Bipartition::new(hook_shape(k * e + a, b), hook_shape(j * e + a, b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bp(s: &str) -> Bipartition {
        s.parse().unwrap()
    }

    #[test]
    fn small_bihook_lists() {
        assert_eq!(small_bihooks_expected(&bp("2,1|2,1"), 3, 0), Some(true));
        assert_eq!(small_bihooks_expected(&bp("2,1|2,1"), 3, 2), Some(false));
        assert_eq!(small_bihooks_expected(&bp("3|2,1"), 3, 0), Some(false));
        assert_eq!(small_bihooks_expected(&bp("1^2|2"), 2, 3), Some(true));
        assert_eq!(small_bihooks_expected(&bp("4|4"), 3, 0), None);
    }

    #[test]
    fn main_family_parameters() {
        let m = main_family_matches(&bp("7,1|4,1"), 3);
        assert!(m.contains(&FamilyMatch {
            k: 2,
            j: 1,
            a: 1,
            b: 1,
            conjugated: false,
            pattern: 0
        }));
        assert_eq!(predict(&m, 3).unwrap().decomposable, Some(false));
        assert_eq!(predict(&m, 0).unwrap().decomposable, Some(true));
        assert_eq!(
            predict(&main_family_matches(&bp("6|9"), 3), 2).unwrap().decomposable,
            Some(true)
        );
        assert_eq!(
            predict(&main_family_matches(&bp("6|6"), 3), 2).unwrap().decomposable,
            None
        );
        assert!(
            predict(&main_family_matches(&bp("1^3|1^6"), 3), 0)
                .unwrap()
                .used
                .conjugated
        );
        assert!(main_family_matches(&bp("3,1^2|3,1^2"), 3).is_empty());
        // a = e needs b ≥ 1, so ((9),(6)) has only the undecorated reading.
        let p = predict(&main_family_matches(&bp("9|6"), 3), 3).unwrap();
        assert!(p.decomposable == Some(true) && p.used.undecorated() && p.conflicting.is_empty());
        assert_eq!(main_family_matches(&bp("9,1|6,1"), 3).len(), 1);
    }

    #[test]
    fn level_one_criteria() {
        assert!(level1_odd_char(5, 4, 0));
        assert!(level1_odd_char(3, 2, 0));
        assert!(!level1_odd_char(3, 2, 2));
        assert!(!level1_odd_char(5, 2, 3));
        assert!(level1_odd_char(7, 2, 3));
        assert!(!level1_odd_char(4, 2, 0));
        assert!(!level1_char2(3, 2));
        assert!(!level1_char2(4, 3));
        assert!(level1_char2(5, 2));
        assert!(!level1_char2(2, 1));
        assert!(level1_decomposable(&Partition::hook(3, 2), 0));
        assert!(level1_decomposable(&Partition::hook(3, 4), 0));
    }

    #[test]
    fn e2_families() {
        for s in ["2|4", "2|1^4", "3|3", "3|1^3", "3|5", "1|3,1^2", "4,1|2,1^3"] {
            assert!(e2_expected(&bp(s), true, 0), "{s}");
        }
        for s in ["1|1", "2|1", "3|1^2", "2,1|2,1"] {
            assert!(!e2_expected(&bp(s), true, 0), "{s}");
        }
        assert!(e2_listed_extra(&bp("3|3,1^2"), 2));
    }

    #[test]
    fn char2_extras() {
        assert!(enot2_char2_extra(&bp("12|6"), 3));
        assert!(enot2_char2_extra(&bp("1^6|1^12"), 3));
        assert!(!enot2_char2_extra(&bp("6|6"), 3));
    }
}
