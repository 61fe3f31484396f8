//! The rewriting engine: standard-basis expansions of `ψ_r v_t` and `y_r v_t`.
//!
//! Every basis vector is `v_t = ψ_{N_t} z_λ` where `N_t` is the chain normal form of `w_t`.
//! Expansions are computed over `ℤ` (or `F_p`) and memoized per `(r, t)`:
//!
//! * `y_r v_t` peels the first letter `a` of `N_t` and uses the `y/ψ` exchange relations.
//! * `ψ_r v_t` with `s_r t` standard and longer: insert `r` into `N_t`; each braid move
//!   spawns a shorter error word, evaluated recursively.
//! * `ψ_r v_t` with `r` a left descent: `ψ_r v_t = ψ_r² v_u − ψ_r(errors)` for `u = s_r t`.
//! * `ψ_r v_t` with `s_r t` non-standard: write `s_r w_t = x·g` where `ψ_g z_λ = 0` is a
//!   defining relation; straightening both words to the common normal form cancels it.
//!
//! Every recursive call has strictly smaller target length, so evaluation terminates.

use std::collections::HashMap;
use std::io::Write;
use std::sync::Arc;

use crate::combinatorics::perm::{self, Perm};
use crate::combinatorics::Layout;
use crate::linalg::FieldSpec;

use super::relations::{braid_error, psi_degree, quadratic, swap_residues, Conventions, YPoly};

/// A vector in the standard basis with ring coefficients (integers, or residues mod `p`).
pub type Vector = Vec<(u32, i64)>;

/// `coef · ψ_{left} · ypoly · ψ_{N(right)} z_λ`.
#[derive(Debug, Clone)]
struct ErrTerm {
    coef: i64,
    left: Vec<u8>,
    ypoly: YPoly,
    right: Perm,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct EngineStats {
    pub psi_entries: usize,
    pub y_entries: usize,
    pub garnir_steps: usize,
    pub error_terms: usize,
}

pub struct Engine {
    pub layout: Layout,
    pub field: FieldSpec,
    pub conventions: Conventions,
    e: u8,
    modulus: Option<i64>,
    perms: Vec<Perm>,
    ids: HashMap<Perm, u32>,
    codes: Vec<Vec<u8>>,
    residues: Vec<Vec<u8>>,
    degrees: Vec<i32>,
    pmemo: HashMap<(u8, u32), Arc<Vector>>,
    ymemo: HashMap<(u8, u32), Arc<Vector>>,
    nsmemo: HashMap<Perm, Arc<Vector>>,
    trace: Option<Box<dyn Write + Send>>,
    step: u64,
    stats: EngineStats,
}

impl Engine {
    pub fn new(layout: Layout, field: FieldSpec, conventions: Conventions) -> Engine {
        let e = layout.charge.e;
        let modulus = match field {
            FieldSpec::Rational => None,
            FieldSpec::Prime(p) => Some(p as i64),
        };
        let mut eng = Engine {
            layout,
            field,
            conventions,
            e,
            modulus,
            perms: Vec::new(),
            ids: HashMap::new(),
            codes: Vec::new(),
            residues: Vec::new(),
            degrees: Vec::new(),
            pmemo: HashMap::new(),
            ymemo: HashMap::new(),
            nsmemo: HashMap::new(),
            trace: None,
            step: 0,
            stats: EngineStats::default(),
        };
        let n = eng.layout.n;
        eng.id_of(&perm::identity(n));
        eng
    }

    /// Sends newline-delimited JSON rewrite records to `sink`.
    pub fn set_trace(&mut self, sink: Box<dyn Write + Send>) {
        self.trace = Some(sink);
    }

    pub fn n(&self) -> usize {
        self.layout.n
    }

    pub fn e(&self) -> u8 {
        self.e
    }

    pub fn stats(&self) -> EngineStats {
        EngineStats {
            psi_entries: self.pmemo.len(),
            y_entries: self.ymemo.len(),
            ..self.stats
        }
    }

    /// Id of `z_λ = v_{t_λ}`.
    pub fn z_id(&self) -> u32 {
        0
    }

    /// Interns a standard tableau (given as `w_t`).
    pub fn id_of(&mut self, w: &[u8]) -> u32 {
        if let Some(&id) = self.ids.get(w) {
            return id;
        }
        debug_assert!(self.layout.is_standard(w), "interning a non-standard tableau");
        let id = self.perms.len() as u32;
        self.perms.push(w.to_vec());
        self.codes.push(perm::chain_code(w));
        self.residues.push(self.layout.residue_sequence(w));
        self.degrees.push(self.layout.degree(w));
        self.ids.insert(w.to_vec(), id);
        id
    }

    pub fn lookup(&self, w: &[u8]) -> Option<u32> {
        self.ids.get(w).copied()
    }

    pub fn perm(&self, id: u32) -> &Perm {
        &self.perms[id as usize]
    }

    pub fn residues(&self, id: u32) -> &[u8] {
        &self.residues[id as usize]
    }

    pub fn degree(&self, id: u32) -> i32 {
        self.degrees[id as usize]
    }

    pub fn normal_word(&self, id: u32) -> Vec<u8> {
        perm::chain_word(&self.codes[id as usize])
    }

    pub fn interned(&self) -> usize {
        self.perms.len()
    }

    // ---------- ring arithmetic ----------

    fn rmul(&self, a: i64, b: i64) -> i64 {
        match self.modulus {
            Some(p) => ((a as i128 * b as i128).rem_euclid(p as i128)) as i64,
            None => a.checked_mul(b).expect("coefficient overflow in the rewriting engine"),
        }
    }

    fn radd(&self, a: i64, b: i64) -> i64 {
        match self.modulus {
            Some(p) => (a as i128 + b as i128).rem_euclid(p as i128) as i64,
            None => a.checked_add(b).expect("coefficient overflow in the rewriting engine"),
        }
    }

    pub fn reduce(&self, c: i64) -> i64 {
        match self.modulus {
            Some(p) => c.rem_euclid(p),
            None => c,
        }
    }

    fn axpy(&self, acc: &mut HashMap<u32, i64>, c: i64, v: &[(u32, i64)]) {
        let c = self.reduce(c);
        if c == 0 {
            return;
        }
        for &(t, x) in v {
            let term = self.rmul(c, x);
            let slot = acc.entry(t).or_insert(0);
            *slot = self.radd(*slot, term);
        }
    }

    fn finish(acc: HashMap<u32, i64>) -> Vector {
        let mut v: Vector = acc.into_iter().filter(|&(_, c)| c != 0).collect();
        v.sort_unstable();
        v
    }

    pub fn combine(&self, parts: &[(i64, &[(u32, i64)])]) -> Vector {
        let mut acc = HashMap::new();
        for (c, v) in parts {
            self.axpy(&mut acc, *c, v);
        }
        Engine::finish(acc)
    }

    // ---------- generator actions on vectors ----------

    pub fn psi_vec(&mut self, r: u8, v: &[(u32, i64)]) -> Vector {
        let mut acc = HashMap::new();
        for &(t, c) in v {
            let img = self.psi(r, t);
            self.axpy(&mut acc, c, &img);
        }
        Engine::finish(acc)
    }

    pub fn y_vec(&mut self, r: u8, v: &[(u32, i64)]) -> Vector {
        let mut acc = HashMap::new();
        for &(t, c) in v {
            let img = self.y(r, t);
            self.axpy(&mut acc, c, &img);
        }
        Engine::finish(acc)
    }

    pub fn apply_ypoly(&mut self, poly: &YPoly, v: &[(u32, i64)]) -> Vector {
        let mut acc = HashMap::new();
        for (c, mono) in poly {
            let mut cur = v.to_vec();
            for &r in mono {
                cur = self.y_vec(r, &cur);
            }
            self.axpy(&mut acc, *c, &cur);
        }
        Engine::finish(acc)
    }

    // ---------- y action ----------

    /// `y_r v_t`.
    pub fn y(&mut self, r: u8, t: u32) -> Arc<Vector> {
        if let Some(v) = self.ymemo.get(&(r, t)) {
            return v.clone();
        }
        let code = self.codes[t as usize].clone();
        let result = match first_letter(&code) {
            None => Vec::new(),
            Some((k, a)) => {
                let mut ucode = code;
                ucode[k] -= 1;
                let u = perm::from_chain_code(self.layout.n, &ucode);
                let uid = self.id_of(&u);
                let j = &self.residues[uid as usize];
                let delta = if j[a as usize - 1] == j[a as usize] { 1 } else { 0 };
                if r == a {
                    let inner = self.y(a + 1, uid);
                    let pv = self.psi_vec(a, &inner);
                    self.combine(&[(1, &pv), (-delta, &[(uid, 1)])])
                } else if r == a + 1 {
                    let inner = self.y(a, uid);
                    let pv = self.psi_vec(a, &inner);
                    self.combine(&[(1, &pv), (delta, &[(uid, 1)])])
                } else {
                    let inner = self.y(r, uid);
                    self.psi_vec(a, &inner)
                }
            }
        };
        self.check_terms(t, None, &result);
        let rc = Arc::new(result);
        self.ymemo.insert((r, t), rc.clone());
        rc
    }

    // ---------- ψ action ----------

    /// `ψ_r v_t`.
    pub fn psi(&mut self, r: u8, t: u32) -> Arc<Vector> {
        if let Some(v) = self.pmemo.get(&(r, t)) {
            return v.clone();
        }
        let w = self.perms[t as usize].clone();
        let (rule, result) = if perm::is_left_descent(&w, r) {
            ("down", self.psi_down(r, &w))
        } else {
            let mut w2 = w.clone();
            perm::left_mul(&mut w2, r);
            if self.layout.is_standard(&w2) {
                ("up", self.psi_up(r, t, &w2))
            } else {
                ("garnir", self.psi_garnir(r, t, &w2))
            }
        };
        self.trace_record(rule, &format!("ψ{r}·{}", word_string(&self.normal_word(t))), &result);
        self.check_terms(t, Some(r), &result);
        let rc = Arc::new(result);
        self.pmemo.insert((r, t), rc.clone());
        rc
    }

    fn psi_up(&mut self, r: u8, t: u32, w2: &Perm) -> Vector {
        let mut code = self.codes[t as usize].clone();
        let mut errs = Vec::new();
        self.insert(r, &mut code, &[], &mut errs);
        let target = self.id_of(w2);
        debug_assert_eq!(code, self.codes[target as usize]);
        let ev = self.eval_errors(&errs);
        self.combine(&[(1, &[(target, 1)]), (1, &ev)])
    }

    fn psi_down(&mut self, r: u8, w: &Perm) -> Vector {
        let mut u = w.clone();
        perm::left_mul(&mut u, r);
        let uid = self.id_of(&u);
        let mut code = self.codes[uid as usize].clone();
        let mut errs = Vec::new();
        self.insert(r, &mut code, &[], &mut errs);
        let quad = quadratic(self.e, self.conventions, r, &self.residues[uid as usize].clone());
        let q = self.apply_ypoly(&quad, &[(uid, 1)]);
        let ev = self.eval_errors(&errs);
        let pe = self.psi_vec(r, &ev);
        self.combine(&[(1, &q), (-1, &pe)])
    }

    fn psi_garnir(&mut self, r: u8, t: u32, w2: &Perm) -> Vector {
        self.stats.garnir_steps += 1;
        let mut code2 = self.codes[t as usize].clone();
        let mut errs2 = Vec::new();
        self.insert(r, &mut code2, &[], &mut errs2);
        let (x, g) = self.killer(w2);
        let n = self.layout.n;
        let mut code1 = perm::chain_code(&perm::from_word(n, &g));
        let nx = perm::normal_word(&x);
        let mut errs1 = Vec::new();
        for idx in (0..nx.len()).rev() {
            self.insert(nx[idx], &mut code1, &nx[..idx], &mut errs1);
        }
        assert_eq!(code1, code2, "straightening reached different normal forms");
        let e2 = self.eval_errors(&errs2);
        let e1 = self.eval_errors(&errs1);
        self.combine(&[(1, &e2), (-1, &e1)])
    }

    /// A factorization `w2 = x·g` with lengths adding and `ψ_g z_λ = 0` a defining relation.
    fn killer(&self, w2: &Perm) -> (Perm, Vec<u8>) {
        for &p in &self.layout.killers {
            if perm::is_right_descent(w2, p) {
                let mut x = w2.clone();
                perm::right_mul(&mut x, p);
                return (x, vec![p]);
            }
        }
        let len = perm::length(w2);
        for g in &self.layout.garnir {
            let mut x = w2.clone();
            for &a in g.iter().rev() {
                perm::right_mul(&mut x, a);
            }
            if perm::length(&x) + g.len() == len {
                return (x, g.clone());
            }
        }
        panic!(
            "no defining relation kills the non-standard tableau {}",
            self.layout.tableau_string(w2)
        );
    }

    /// Prepends `ψ_x` to the normal form with chain code `code` (which must stay reduced),
    /// updating `code` and recording braid error terms with left context `ctx`.
    fn insert(&mut self, x: u8, code: &mut [u8], ctx: &[u8], errs: &mut Vec<ErrTerm>) {
        let n = self.layout.n;
        let mut x = x;
        let mut prefix: Vec<u8> = ctx.to_vec();
        for k in 1..n as u8 {
            let m = code[k as usize - 1];
            if x >= m + 2 {
                prefix.extend((k..=m).rev());
                continue;
            }
            if x == m + 1 {
                code[k as usize - 1] = m + 1;
                return;
            }
            assert!(x != m && x >= k, "insertion of ψ{x} does not extend a reduced word");
            let mut rcode = code.to_vec();
            for (i, c) in rcode.iter_mut().enumerate().take(k as usize - 1) {
                *c = i as u8;
            }
            rcode[k as usize - 1] = x - 1;
            let right = perm::from_chain_code(n, &rcode);
            let j = self.layout.residue_sequence(&right);
            let err = braid_error(self.e, self.conventions, x, &j);
            if !err.is_empty() {
                let mut left = prefix.clone();
                left.extend((x + 2..=m).rev());
                self.stats.error_terms += 1;
                errs.push(ErrTerm {
                    coef: 1,
                    left,
                    ypoly: err,
                    right,
                });
            }
            prefix.extend((k..=m).rev());
            x += 1;
        }
        unreachable!("insertion ran past the last chain");
    }

    fn eval_errors(&mut self, errs: &[ErrTerm]) -> Vector {
        let mut acc = HashMap::new();
        for err in errs {
            let base = self.eval_perm(&err.right);
            let mut v = self.apply_ypoly(&err.ypoly, &base);
            for &a in err.left.iter().rev() {
                if v.is_empty() {
                    break;
                }
                v = self.psi_vec(a, &v);
            }
            if self.trace.is_some() {
                let word = format!(
                    "{}·E·{}",
                    word_string(&err.left),
                    word_string(&perm::normal_word(&err.right))
                );
                self.trace_record("braid-error", &word, &v);
            }
            self.axpy(&mut acc, err.coef, &v);
        }
        Engine::finish(acc)
    }

    /// `ψ_{N(w)} z_λ` for any permutation `w`.
    pub fn eval_perm(&mut self, w: &[u8]) -> Arc<Vector> {
        if self.layout.is_standard(w) {
            let id = self.id_of(w);
            return Arc::new(vec![(id, 1)]);
        }
        if let Some(v) = self.nsmemo.get(w) {
            return v.clone();
        }
        let mut code = perm::chain_code(w);
        let (k, a) = first_letter(&code).expect("identity is standard");
        code[k] -= 1;
        let u = perm::from_chain_code(self.layout.n, &code);
        let inner = self.eval_perm(&u);
        let rc = Arc::new(self.psi_vec(a, &inner));
        self.nsmemo.insert(w.to_vec(), rc.clone());
        rc
    }

    /// `ψ_{a_1} ⋯ ψ_{a_m} v` (letters applied right to left).
    pub fn psi_word(&mut self, word: &[u8], v: &[(u32, i64)]) -> Vector {
        let mut cur = v.to_vec();
        for &a in word.iter().rev() {
            if cur.is_empty() {
                break;
            }
            cur = self.psi_vec(a, &cur);
        }
        cur
    }

    fn check_terms(&self, t: u32, r: Option<u8>, result: &[(u32, i64)]) {
        let it = &self.residues[t as usize];
        let (want_res, want_deg) = match r {
            Some(r) => (
                swap_residues(it, r),
                self.degrees[t as usize] + psi_degree(self.e, r, it),
            ),
            None => (it.clone(), self.degrees[t as usize] + 2),
        };
        for &(s, _) in result {
            if self.residues[s as usize] != want_res || self.degrees[s as usize] != want_deg {
                let op = match r {
                    Some(r) => format!("ψ{r}"),
                    None => "y".to_string(),
                };
                panic!(
                    "homogeneity violated: {op} v[{}] produced v[{}] (degree {} vs expected {}, residues {:?} vs {:?})",
                    self.layout.tableau_string(&self.perms[t as usize]),
                    self.layout.tableau_string(&self.perms[s as usize]),
                    self.degrees[s as usize],
                    want_deg,
                    self.residues[s as usize],
                    want_res
                );
            }
        }
    }

    fn trace_record(&mut self, rule: &str, word: &str, result: &[(u32, i64)]) {
        if self.trace.is_none() {
            return;
        }
        self.step += 1;
        let coefficient: Vec<String> = result
            .iter()
            .map(|&(s, c)| format!("{}·v[{}]", c, self.layout.tableau_string(&self.perms[s as usize])))
            .collect();
        let rec = serde_json::json!({
            "step": self.step,
            "rule": rule,
            "word": word,
            "coefficient": coefficient.join(" + "),
        });
        if let Some(sink) = self.trace.as_mut() {
            let _ = writeln!(sink, "{rec}");
        }
    }
}

/// The first letter of a chain normal form: `(chain index, letter)`.
fn first_letter(code: &[u8]) -> Option<(usize, u8)> {
    code.iter()
        .enumerate()
        .find(|&(k, &m)| m as usize > k)
        .map(|(k, &m)| (k, m))
}

pub fn word_string(word: &[u8]) -> String {
    if word.is_empty() {
        return "1".to_string();
    }
    word.iter().map(|a| format!("ψ{a}")).collect::<Vec<_>>().join("")
}

/// Runs `f` on a thread with a large stack; deep straightening recursions need it.
pub fn with_big_stack<T: Send + 'static>(f: impl FnOnce() -> T + Send + 'static) -> T {
    std::thread::Builder::new()
        .stack_size(1 << 30)
        .spawn(f)
        .expect("spawn worker thread")
        .join()
        .unwrap_or_else(|e| std::panic::resume_unwind(e))
}
