//! The ψ-word identities behind the small switch endomorphism and brick cancellation, checked
//! as equalities of module elements.
//!
//! Two families are covered. For `λ = ((a,1^b),(a,1^b))` with `a+b = e` the identities are
//! products applied to `z_λ`, written in the notation of [`super::words`]. For
//! `λ = ((ke),(je))` they are statements about basis vectors `v(a_1,…,a_je)`, scanned over every
//! basis vector and every parameter value that meets the hypotheses.

use std::fmt;

use crate::combinatorics::{Bicharge, Bipartition, Partition};
use crate::klr::{Letter, ModuleElement};
use crate::linalg::FieldSpec;
use crate::specht::SpechtModule;

use super::words::{env, eval_on_z, subsets, v, Env};
use super::{par_rows, Instance, Report, Status, SuiteContext, SuiteError};

/// An identity `lhs = scale·rhs` (or `lhs = 0`) on `z_λ`.
struct Identity {
    name: &'static str,
    lhs: &'static str,
    rhs: Option<&'static str>,
    params: fn(a: i64, b: i64, e: i64) -> Vec<Env>,
    scale: fn(&Env) -> i64,
}

fn one(_: &Env) -> i64 {
    1
}

fn minus_one(_: &Env) -> i64 {
    -1
}

fn base(a: i64, b: i64, e: i64) -> Vec<(char, i64)> {
    vec![('a', a), ('b', b), ('e', e)]
}

fn grid(a: i64, b: i64, e: i64, ranges: &[(char, i64, i64)]) -> Vec<Env> {
    let mut out = vec![base(a, b, e)];
    for &(var, lo, hi) in ranges {
        out = out
            .into_iter()
            .flat_map(|fixed| {
                (lo..=hi).map(move |x| {
                    let mut f = fixed.clone();
                    f.push((var, x));
                    f
                })
            })
            .collect();
    }
    out.iter().map(|pairs| env(pairs)).collect()
}

fn no_params(a: i64, b: i64, e: i64) -> Vec<Env> {
    vec![env(&base(a, b, e))]
}

fn identities() -> Vec<Identity> {
    vec![
        Identity {
            name: "smallkeylemmas(i)",
            lhs: "P(2e-2r-s) C(2e-2r-s-1,e-r; 2e-r-s-1,e) z",
            rhs: None,
            params: |a, b, e| {
                let mut out = Vec::new();
                for r in 1..=a - 2 {
                    out.extend(grid(a, b, e, &[('r', r, r), ('s', 1, e - r - 1)]));
                }
                out
            },
            scale: one,
        },
        Identity {
            name: "smallkeylemmas(ii)",
            lhs: "D(2e-r-1,2e-2r+1) C(2e-2r+1,e-r+2; 2e-r-1,e) z",
            rhs: Some("C(2e-2r,e-r+2; 2e-r-2,e) z"),
            params: |a, b, e| grid(a, b, e, &[('r', 1, a - 1)]),
            scale: one,
        },
        Identity {
            name: "smallkeylemmas(iii)",
            lhs: "C(e+b+1,b+2; 2e-r-1,e-r) C(2e-2r,e-r+1; 2e-r-1,e) z",
            rhs: Some("C(2b+2,b+2; e+b,e) z"),
            params: |a, b, e| grid(a, b, e, &[('r', 1, a - 1)]),
            scale: one,
        },
        Identity {
            name: "smallkeylemmasctd(i)",
            lhs: "D(2b-r+s+2,2b-r+s+3-k) D(e+b-r,b-r+s+2) D(2b-r+s+3-k,b-r+s+3) C(2b-r+s+4,b-r+s+4; e+b,e) \
                  D(b-r+s+1,b-r+2) C(e-r,b-r+3; e-2,b+1) z",
            rhs: Some(
                "D(2b-r+s+2,2b-r+s+2-k) D(e+b-r,b-r+s+2) D(2b-r+s+2-k,b-r+s+3) C(2b-r+s+4,b-r+s+4; e+b,e) \
                 D(b-r+s+1,b-r+2) C(e-r,b-r+3; e-2,b+1) z",
            ),
            params: |a, b, e| grid(a, b, e, &[('r', 1, b), ('s', 0, a - 3), ('k', 0, b)]),
            scale: one,
        },
        Identity {
            name: "smallkeylemmasctd(ii)",
            lhs: "C(2b-r+2,b-r+2; 2b-r+s+1,b-r+s+1) D(e+b-r,b-r+s+2) C(2b-r+s+3,b-r+s+3; e+b,e) \
                  D(b-r+s+1,b-r+2) C(e-r,b-r+3; e-2,b+1) z",
            rhs: Some(
                "C(2b-r+2,b-r+2; 2b-r+s+2,b-r+s+2) D(e+b-r,b-r+s+3) C(2b-r+s+4,b-r+s+4; e+b,e) \
                 D(b-r+s+2,b-r+2) C(e-r,b-r+3; e-2,b+1) z",
            ),
            params: |a, b, e| grid(a, b, e, &[('r', 1, b), ('s', 0, a - 3)]),
            scale: one,
        },
        Identity {
            name: "smallkeylemmasctd(iii)",
            lhs: "D(e+b-r,b-r+2) C(2b-r+3,b-r+3; e+b,e) C(e-r,b-r+3; e-2,b+1) z",
            rhs: Some("C(2b-r+2,b-r+2; e+b,e) C(e-r-1,b-r+2; e-2,b+1) z"),
            params: |a, b, e| grid(a, b, e, &[('r', 1, b)]),
            scale: one,
        },
        Identity {
            name: "smallkeylemmasctd(iv)",
            lhs: "D(b+1,b+2-k) D(e-1,1) D(b+2-k,2) C(b+3,3; e+b,e) C(a-1,2; e-2,b+1) z",
            rhs: Some("D(b+1,b+1-k) D(e-1,1) D(b+1-k,2) C(b+3,3; e+b,e) C(a-1,2; e-2,b+1) z"),
            params: |a, b, e| grid(a, b, e, &[('k', 0, b - 1)]),
            scale: one,
        },
        Identity {
            name: "smallkeylemmasctd(v)",
            lhs: "C(e-1,1; e+b-1,b+1) C(2b+2,b+2; e+b,e) z",
            rhs: Some("D(b+1,2) D(e-1,1) P(2) C(b+3,3; e+b,e) C(a-1,2; e-2,b+1) z"),
            params: no_params,
            scale: one,
        },
        Identity {
            name: "nextreduction(i)",
            lhs: "D(e-1,b+x) C(b+1,2; b+x-1,x) C(b+x,x; e+b,e) C(a-1,2; e-2,b+1) z",
            rhs: Some("D(e-1,b+x+1) C(b+1,2; b+x,x+1) C(b+x+1,x+1; e+b,e) C(a-1,2; e-2,b+1) z"),
            params: |a, b, e| grid(a, b, e, &[('x', 3, a - 1)]),
            scale: one,
        },
        Identity {
            name: "nextreduction(ii)",
            lhs: "D(b+1,2) D(e-1,3) C(b+3,3; e+b,e) C(a-1,2; e-2,b+1) z",
            rhs: Some("C(b+1,2; e-1,a) C(e,a; e+b,e) C(a-1,2; e-2,b+1) z"),
            params: no_params,
            scale: one,
        },
        Identity {
            name: "nexttreduction",
            lhs: "P(a+2x+y) C(e+x+y,a+x+y; e+b,e) C(a-1,2; e-2,b+1) z",
            rhs: None,
            params: |a, b, e| {
                let mut out = Vec::new();
                for x in 0..=b - 1 {
                    out.extend(grid(a, b, e, &[('x', x, x), ('y', 1, b - x + 1)]));
                }
                out
            },
            scale: one,
        },
        Identity {
            name: "penulttreduction(i)",
            lhs: "U(a+x,a+2x-1) D(a+2x-1,a+x) C(e+x+1,a+x+1; e+b,e) C(a-1,2; e-2,b+1) z",
            rhs: Some("C(e+x+1,a+x+1; e+b,e) C(a-1,2; e-2,b+1) z"),
            params: penult_range,
            scale: one,
        },
        Identity {
            name: "penulttreduction(ii)",
            lhs: "C(b+1,2; e-2,a-1) C(e-1,a+x; e+x-1,a+2x) C(e+x,a+x; e+b,e) C(a-1,2; e-2,b+1) z",
            rhs: Some("C(b+1,2; e-2,a-1) C(e-1,a+x+1; e+x,a+2x+2) C(e+x+1,a+x+1; e+b,e) C(a-1,2; e-2,b+1) z"),
            params: penult_range,
            scale: minus_one,
        },
        Identity {
            name: "penultreduction",
            lhs: "U(x,a+x-3) C(a+x-3,x; e-2,b+1) z",
            rhs: Some("C(a+x-2,x+1; e-2,b+1) z"),
            params: |a, b, e| grid(a, b, e, &[('x', 2, b + 1)]),
            scale: one,
        },
        Identity {
            name: "finalreduction",
            lhs: "CU(b+1,e-2; 2,a-1) C(a-1,2; e-2,b+1) z",
            rhs: Some("z"),
            params: no_params,
            scale: one,
        },
        Identity {
            name: "smallphivt",
            lhs: "D(2e-1,e) C(e,1; 2e-1,e) z",
            rhs: Some("D(2e-1,e) z"),
            params: no_params,
            scale: |env| {
                let sign = |x: i64| if x % 2 == 0 { 1 } else { -1 };
                if env[&'a'] == 1 {
                    2 * sign(env[&'e'] - 1)
                } else {
                    2 * sign(env[&'b'] + 1)
                }
            },
        },
    ]
}

/// `0 ≤ x ≤ b−1` when `b−1 < e−2`, and `0 ≤ x ≤ b−2` when `b−2 = e−3`.
fn penult_range(a: i64, b: i64, e: i64) -> Vec<Env> {
    let hi = if b - 1 < e - 2 { b - 1 } else { b - 2 };
    grid(a, b, e, &[('x', 0, hi)])
}

fn env_string(env: &Env) -> String {
    env.iter()
        .filter(|(k, _)| !matches!(k, 'a' | 'b' | 'e'))
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Shape `((a,1^b),(a,1^b))` with `a+b = e`.
pub struct SmallShape {
    pub e: u8,
    pub a: u32,
}

impl SmallShape {
    fn shape(&self) -> Bipartition {
        let b = self.e as u32 - self.a;
        Bipartition::bihook(self.a, b, self.a, b)
    }
}

impl fmt::Display for SmallShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} e={}", self.shape(), self.e)
    }
}

fn small_rows(job: &SmallShape, field: FieldSpec) -> Vec<Instance> {
    let shape = job.shape();
    let (a, e) = (job.a as i64, job.e as i64);
    let b = e - a;
    let mut module = match SpechtModule::build(&shape, &Bicharge::zero(job.e, 2), field) {
        Ok(m) => m,
        Err(err) => return vec![Instance::failed(job.to_string(), "identity", err.to_string())],
    };
    let mut rows = Vec::new();
    for id in identities() {
        // The lemma words mention ψ_{a−1}⋯ψ_2, so they are read for e > 3 and a ≥ 3 only;
        // the switch scalar itself is checked for every a.
        if (e == 3 || a < 3) && id.name != "smallphivt" {
            continue;
        }
        for env in (id.params)(a, b, e) {
            let label = format!("{} {shape} e={e} {}", id.name, env_string(&env))
                .trim_end()
                .to_string();
            let lhs = eval_on_z(&mut module, id.lhs, &env);
            let rhs = match id.rhs {
                None => Ok(ModuleElement::new()),
                Some(text) => eval_on_z(&mut module, text, &env).map(|x| x.scale(&field.from_i64((id.scale)(&env)))),
            };
            rows.push(match (lhs, rhs) {
                (Ok(l), Ok(r)) => {
                    let ok = l == r;
                    let expected = if id.rhs.is_none() {
                        "0".to_string()
                    } else {
                        format!("{}·rhs", (id.scale)(&env))
                    };
                    let mut row = Instance::new(
                        label,
                        expected.clone(),
                        if ok { expected } else { "differs".into() },
                        Status::of(ok),
                        "word-evaluation",
                    );
                    if !ok {
                        row = row.with_note(format!("lhs = {}", module.engine.describe(&l)));
                    }
                    row
                }
                (Err(err), _) | (_, Err(err)) => Instance::failed(label, "word-evaluation", err.to_string()),
            });
        }
    }
    rows
}

/// Shape `((ke),(je))`.
pub struct BrickJob {
    pub e: u8,
    pub k: u32,
    pub j: u32,
}

impl BrickJob {
    fn shape(&self) -> Bipartition {
        let e = self.e as u32;
        Bipartition::new(Partition::hook(self.k * e, 0), Partition::hook(self.j * e, 0))
    }
}

impl fmt::Display for BrickJob {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} e={}", self.shape(), self.e)
    }
}

/// Tallies instances of one lemma part and keeps the first failure.
struct Tally {
    name: &'static str,
    checked: usize,
    failure: Option<String>,
}

impl Tally {
    fn new(name: &'static str) -> Tally {
        Tally {
            name,
            checked: 0,
            failure: None,
        }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(what());
        }
    }

    fn row(self, lam: &str) -> Instance {
        let label = format!("{} {lam}", self.name);
        if self.checked == 0 {
            return Instance::new(label, "holds", "no instances in range", Status::Pass, "exhaustive");
        }
        let computed = if self.failure.is_none() {
            "holds".to_string()
        } else {
            "fails".to_string()
        };
        let mut row =
            Instance::check(label, "holds", computed, "exhaustive").with_note(format!("{} instances", self.checked));
        if let Some(f) = self.failure {
            row = row.with_note(format!("{} instances; first failure: {f}", self.checked));
        }
        row
    }
}

fn residue_eq(x: i64, y: i64, e: i64) -> bool {
    (x - y).rem_euclid(e) == 0
}

fn psi_down(x: i64, y: i64) -> Vec<u8> {
    (y..=x).rev().map(|i| i as u8).collect()
}

fn psi_up(x: i64, y: i64) -> Vec<u8> {
    (x..=y).map(|i| i as u8).collect()
}

fn brick_rows(job: &BrickJob, field: FieldSpec) -> Vec<Instance> {
    let shape = job.shape();
    let lam = job.to_string();
    let mut module = match SpechtModule::build(&shape, &Bicharge::zero(job.e, 2), field) {
        Ok(m) => m,
        Err(err) => return vec![Instance::failed(lam, "exhaustive", err.to_string())],
    };
    let n = module.n() as i64;
    let e = job.e as i64;
    let je = (job.j * job.e as u32) as i64;
    let all = subsets(n as usize, je as usize);
    // 1-based access with a_0 = 0.
    let at = |a: &[u8], i: i64| -> i64 {
        if i <= 0 {
            0
        } else {
            a[(i - 1) as usize] as i64
        }
    };
    let contains = |a: &[u8], x: i64| a.iter().any(|&y| y as i64 == x);
    let mut t = [
        Tally::new("psiaction(i)"),
        Tally::new("psiaction(ii)"),
        Tally::new("cor:psiaction(i)"),
        Tally::new("cor:psiaction(ii)"),
        Tally::new("lem:psipsi"),
        Tally::new("cor:psidownaction"),
        Tally::new("newlem:up"),
        Tally::new("lem:newyaction(i)"),
        Tally::new("lem:newyaction(ii)"),
        Tally::new("lem:newyaction(iii)"),
    ];
    let zero = ModuleElement::new();
    let show = |a: &[u8]| format!("v{a:?}");
    for a in &all {
        let va = v(&mut module, a);
        for r in 1..n {
            for s in 1..je {
                if residue_eq(r, 2 * s, e) {
                    continue;
                }
                if at(a, s) == r && at(a, s + 1) == r + 1 {
                    let out = module.engine.apply_psi(r as u8, &va);
                    t[0].record(out == zero, || format!("r={r} s={s} {}", show(a)));
                }
                let s_max = a.iter().filter(|&&x| (x as i64) < r).count() as i64;
                if s == s_max && !contains(a, r) && !contains(a, r + 1) {
                    let out = module.engine.apply_psi(r as u8, &va);
                    t[1].record(out == zero, || format!("r={r} s={s} {}", show(a)));
                }
            }
            for s in 1..je {
                if !(r > s && residue_eq(r, 2 * s, e)) {
                    continue;
                }
                let prefix_ok = (1..=s).all(|i| at(a, i) == i);
                if prefix_ok && at(a, s + 1) == r + 2 {
                    let mut target = a.clone();
                    target[s as usize] = r as u8;
                    let want = v(&mut module, &target);
                    let out = module.engine.apply_psi(r as u8, &va);
                    t[2].record(out == want, || format!("r={r} s={s} {}", show(a)));
                }
                let prefix_ok = (1..s).all(|i| at(a, i) == i);
                if prefix_ok && at(a, s) == r && at(a, s + 1) == r + 1 {
                    let mut target = a.clone();
                    target[(s - 1) as usize] = (r - 1) as u8;
                    target[s as usize] = r as u8;
                    let want = v(&mut module, &target);
                    let out = module.engine.apply_psi(r as u8, &va);
                    t[3].record(out == want, || format!("r={r} s={s} {}", show(a)));
                }
            }
            for i in 1..=r {
                for s in 1..=i {
                    let len = r - i + 1;
                    // lem:psipsi: positions s..s+r−i hold i+1..r+1.
                    if s + r - i <= je
                        && at(a, s - 1) < i
                        && (2 * s - 2..=2 * s + r - i).all(|x| !residue_eq(i, x, e))
                        && (0..len).all(|m| at(a, s + m) == i + 1 + m)
                    {
                        let mut target = a.clone();
                        for m in 0..len {
                            target[(s - 1 + m) as usize] = (i + m) as u8;
                        }
                        let want = v(&mut module, &target);
                        let out = module.engine.act_psi_word(&psi_down(r, i), &va);
                        t[4].record(out == want, || format!("s={s} i={i} r={r} {}", show(a)));
                    }
                    // cor:psidownaction: positions s..s+r−i+1 hold i, i+1..r+1.
                    if s + r - i < je
                        && at(a, s - 1) <= i - 2
                        && residue_eq(i, 2 * s, e)
                        && r - i + 2 < e
                        && at(a, s) == i
                        && (0..len).all(|m| at(a, s + 1 + m) == i + 1 + m)
                    {
                        let mut target = a.clone();
                        for m in 0..=len {
                            target[(s - 1 + m) as usize] = (i - 1 + m) as u8;
                        }
                        let want = v(&mut module, &target);
                        let out = module.engine.act_psi_word(&psi_down(r, i), &va);
                        t[5].record(out == want, || format!("s={s} i={i} r={r} {}", show(a)));
                    }
                }
                // newlem:up: 1 ≤ s < i ≤ r, s < je.
                for s in 1..i.min(je) {
                    if residue_eq(r, 2 * s, e)
                        && r - i + 2 < e
                        && (1..=s).all(|m| at(a, m) == m)
                        && at(a, s + 1) == r + 2
                    {
                        let mut target = a.clone();
                        target[s as usize] = i as u8;
                        let want = v(&mut module, &target);
                        let out = module.engine.act_psi_word(&psi_up(i, r), &va);
                        t[6].record(out == want, || format!("s={s} i={i} r={r} {}", show(a)));
                    }
                }
            }
        }
        for s in 0..=je - e {
            let r = at(a, s + e);
            let free_above = (r + 1..=r + e - 2).all(|x| !contains(a, x));
            if !residue_eq(r, 2 * s, e) && !residue_eq(r, 2 * s + 1, e) && free_above {
                let out = module.engine.apply_y(r as u8, &va);
                t[8].record(out == zero, || format!("s={s} r={r} {}", show(a)));
                if r >= 2 && !contains(a, r - 1) {
                    let out = module.engine.apply_y((r - 1) as u8, &va);
                    t[7].record(out == zero, || format!("s={s} r={r} {}", show(a)));
                }
            }
            let r = at(a, s + e) - 1;
            if r >= 1
                && r < n
                && residue_eq(r, 2 * s, e)
                && (1..e).all(|i| at(a, s + i) == r - e + i)
                && a[(s + e) as usize..]
                    .iter()
                    .all(|&x| !(r + 2..=r + e).contains(&(x as i64)))
            {
                let out = module.engine.apply_psi(r as u8, &va);
                t[9].record(out == zero, || format!("s={s} r={r} {}", show(a)));
            }
        }
    }
    let mut rows: Vec<Instance> = t.into_iter().map(|x| x.row(&lam)).collect();
    // lem:strings: y_r ψ_r ψ_{r+1} ⋯ ψ_{je} z = 0 for r ≢ 1.
    let mut strings = Tally::new("lem:strings");
    let z = module.engine.z();
    for r in 1..=je {
        if residue_eq(r, 1, e) {
            continue;
        }
        let mut letters = vec![Letter::Y(r as u8)];
        letters.extend(psi_up(r, je).into_iter().map(Letter::Psi));
        let out = module.engine.act(&letters, &z);
        strings.record(out == zero, || format!("r={r}"));
    }
    rows.push(strings.row(&lam));
    rows
}

pub fn appendix_identities(ctx: &SuiteContext) -> Result<Report, SuiteError> {
    let p = ctx.params.char.unwrap_or(0);
    let field = FieldSpec::new(p as u64)?;
    let mut small = Vec::new();
    for e in ctx.es(&[3, 4, 5]) {
        if e >= 3 {
            for a in 1..=e as u32 {
                small.push(SmallShape { e, a });
            }
        }
    }
    let mut rows = par_rows(small, |job| small_rows(job, field));
    let max_n = ctx.max_n(12) as u32;
    let mut bricks = Vec::new();
    // The ψ-action lemmas use the braid relations for e ≥ 3.
    for e in ctx.es(&[3, 4]).into_iter().filter(|&e| e >= 3) {
        for k in 1..=max_n {
            for j in 1..=max_n {
                if (j + k) * e as u32 <= max_n {
                    bricks.push(BrickJob { e, k, j });
                }
            }
        }
    }
    rows.extend(par_rows(bricks, |job| brick_rows(job, field)));
    Ok(Report::new("appendix-identities", ctx.params.clone(), rows, false))
}
