//! Permutations of `{1..n}`, words in the simple transpositions, chain normal forms and
//! Bruhat order.
//!
//! A permutation is stored one-line: `w[k-1] = w(k)`. The word `a_1 a_2 … a_m` denotes the
//! product `s_{a_1} s_{a_2} ⋯ s_{a_m}`; left multiplication by `s_r` swaps the values `r`
//! and `r+1`.

pub type Perm = Vec<u8>;

pub fn identity(n: usize) -> Perm {
    (1..=n as u8).collect()
}

/// `s_r · w`.
pub fn left_mul(w: &mut [u8], r: u8) {
    for v in w.iter_mut() {
        if *v == r {
            *v = r + 1;
        } else if *v == r + 1 {
            *v = r;
        }
    }
}

/// `w · s_r`.
pub fn right_mul(w: &mut [u8], r: u8) {
    w.swap(r as usize - 1, r as usize);
}

pub fn inverse(w: &[u8]) -> Perm {
    let mut inv = vec![0u8; w.len()];
    for (k, &v) in w.iter().enumerate() {
        inv[v as usize - 1] = k as u8 + 1;
    }
    inv
}

pub fn compose(x: &[u8], y: &[u8]) -> Perm {
    y.iter().map(|&v| x[v as usize - 1]).collect()
}

pub fn from_word(n: usize, word: &[u8]) -> Perm {
    let mut w = identity(n);
    for &a in word.iter().rev() {
        left_mul(&mut w, a);
    }
    w
}

pub fn length(w: &[u8]) -> usize {
    let mut inv = 0;
    for a in 0..w.len() {
        for b in a + 1..w.len() {
            if w[a] > w[b] {
                inv += 1;
            }
        }
    }
    inv
}

/// Is `s_r` a left descent of `w`, i.e. `ℓ(s_r w) < ℓ(w)`?
pub fn is_left_descent(w: &[u8], r: u8) -> bool {
    let inv = inverse(w);
    inv[r as usize - 1] > inv[r as usize]
}

/// Is `s_r` a right descent of `w`, i.e. `w(r) > w(r+1)`?
pub fn is_right_descent(w: &[u8], r: u8) -> bool {
    w[r as usize - 1] > w[r as usize]
}

/// Chain code of `w`: `m[k-1] = m_k` with `w = c_1 c_2 ⋯ c_{n-1}` and
/// `c_k = s_{m_k} s_{m_k - 1} ⋯ s_k` (empty when `m_k = k - 1`).
pub fn chain_code(w: &[u8]) -> Vec<u8> {
    let n = w.len();
    let mut cur: Vec<u8> = w.to_vec();
    let mut code = Vec::with_capacity(n.saturating_sub(1));
    for k in 1..n as u8 {
        let v = cur[k as usize - 1];
        code.push(v - 1);
        for x in cur.iter_mut() {
            if *x == v {
                *x = k;
            } else if *x >= k && *x < v {
                *x += 1;
            }
        }
    }
    code
}

/// The permutation with chain code `code`.
pub fn from_chain_code(n: usize, code: &[u8]) -> Perm {
    from_word(n, &chain_word(code))
}

pub fn chain_word(code: &[u8]) -> Vec<u8> {
    let mut word = Vec::new();
    for (idx, &m) in code.iter().enumerate() {
        let k = idx as u8 + 1;
        let mut a = m;
        while a >= k {
            word.push(a);
            a -= 1;
        }
    }
    word
}

/// The reduced word `c_1 c_2 ⋯ c_{n-1}` of `w`.
pub fn normal_word(w: &[u8]) -> Vec<u8> {
    chain_word(&chain_code(w))
}

/// Bruhat order via the rank-matrix criterion.
pub fn bruhat_leq(x: &[u8], w: &[u8]) -> bool {
    assert_eq!(x.len(), w.len(), "bruhat_leq: rank mismatch");
    let n = x.len();
    for j in 1..=n as u8 {
        let mut cx = 0;
        let mut cw = 0;
        for i in 0..n {
            if x[i] >= j {
                cx += 1;
            }
            if w[i] >= j {
                cw += 1;
            }
            if cx > cw {
                return false;
            }
        }
    }
    true
}

/// `ψ↓^x_y = ψ_x ψ_{x-1} ⋯ ψ_y` as a word (empty if `x < y`).
pub fn down(x: u8, y: u8) -> Vec<u8> {
    if x < y {
        return vec![];
    }
    (y..=x).rev().collect()
}

/// `ψ↑_y^x = ψ_y ψ_{y+1} ⋯ ψ_x` as a word (empty if `x < y`).
pub fn up(y: u8, x: u8) -> Vec<u8> {
    if x < y {
        return vec![];
    }
    (y..=x).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_perms(n: usize) -> Vec<Perm> {
        fn rec(cur: &mut Vec<u8>, used: &mut Vec<bool>, n: usize, out: &mut Vec<Perm>) {
            if cur.len() == n {
                out.push(cur.clone());
                return;
            }
            for v in 1..=n as u8 {
                if !used[v as usize] {
                    used[v as usize] = true;
                    cur.push(v);
                    rec(cur, used, n, out);
                    cur.pop();
                    used[v as usize] = false;
                }
            }
        }
        let mut out = Vec::new();
        rec(&mut vec![], &mut vec![false; n + 1], n, &mut out);
        out
    }

    #[test]
    fn normal_form_is_reduced_and_faithful() {
        for n in 1..=6 {
            for w in all_perms(n) {
                let word = normal_word(&w);
                assert_eq!(word.len(), length(&w));
                assert_eq!(from_word(n, &word), w);
            }
        }
    }

    /// All subwords of a fixed reduced word, as permutations.
    fn subword_set(n: usize, word: &[u8]) -> std::collections::HashSet<Perm> {
        let mut out = std::collections::HashSet::new();
        for mask in 0u32..(1 << word.len()) {
            let sub: Vec<u8> = word
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &a)| a)
                .collect();
            out.insert(from_word(n, &sub));
        }
        out
    }

    #[test]
    fn bruhat_matches_subword_property_on_s4() {
        let perms = all_perms(4);
        for w in &perms {
            let below = subword_set(4, &normal_word(w));
            for x in &perms {
                assert_eq!(bruhat_leq(x, w), below.contains(x), "x={x:?} w={w:?}");
            }
        }
        let id = identity(4);
        for w in &perms {
            assert!(bruhat_leq(&id, w));
        }
        assert!(bruhat_leq(&from_word(3, &[1]), &from_word(3, &[1, 2])));
    }

    #[test]
    fn descents() {
        let w = from_word(4, &[2, 1, 3]);
        assert!(is_left_descent(&w, 2));
        assert!(!is_left_descent(&w, 3));
        assert!(is_right_descent(&w, 3));
    }

    #[test]
    fn paper_style_chains() {
        assert_eq!(down(3, 1), vec![3, 2, 1]);
        assert_eq!(up(2, 4), vec![2, 3, 4]);
        assert!(down(1, 2).is_empty());
    }
}
