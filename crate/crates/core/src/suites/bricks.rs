//! Suites on explicit endomorphisms: the small switch endomorphism, brick cancellation, and the
//! endomorphism of `((ke),(je))` with its eigenvalues.

use std::fmt;

use crate::combinatorics::{brick_down, brick_up, brick_word, Bicharge, Bipartition, BrickShape, Partition};
use crate::decomp::eigenvalues_of;
use crate::endo::{
    apply_endo, brick_combination, compute_endo_space, is_endomorphism, keje_endomorphism, stated_eigenvectors,
    BrickReading, SumRange,
};
use crate::klr::ModuleElement;
use crate::linalg::{FieldSpec, Scalar};
use crate::specht::SpechtModule;

use super::{par_rows, verdict_instance, Instance, Report, Status, SuiteContext, SuiteError};

/// `c` with `image = c·v`, if any.
fn scalar_multiple(image: &ModuleElement, v: &ModuleElement) -> Option<Scalar> {
    let (t, c) = v.first()?;
    let ratio = match image.get(*t) {
        Some(x) => x * &c.inv()?,
        None => c.field().zero(),
    };
    (v.scale(&ratio) == *image).then_some(ratio)
}

fn two_row(k: u32, j: u32, e: u8) -> Bipartition {
    Bipartition::new(Partition::hook(k * e as u32, 0), Partition::hook(j * e as u32, 0))
}

pub fn smallphivt(ctx: &SuiteContext) -> Result<Report, SuiteError> {
    let p = ctx.params.char.unwrap_or(0);
    let field = FieldSpec::new(p as u64)?;
    let mut todo = Vec::new();
    for e in ctx.es(&[3, 4]) {
        for a in 1..=e as u32 {
            todo.push((e, Bipartition::bihook(a, e as u32 - a, a, e as u32 - a)));
        }
    }
    let rows = par_rows(
        todo.into_iter().map(|(e, s)| Tagged(e, s)).collect(),
        |Tagged(e, shape)| {
            let e = *e;
            let lam = format!("{shape} e={e}");
            let (a, b) = shape.comp(1).hook_params().expect("hook");
            let sign = |x: u32| if x.is_multiple_of(2) { 1 } else { -1 };
            let expected = if a == 1 {
                sign(e as u32 - 1) * 2
            } else {
                sign(b + 1) * 2
            };
            let mut module = SpechtModule::build(shape, &Bicharge::zero(e, 2), field).expect("bihook");
            let z = module.engine.z_id();
            let weight = module.weight_space(&module.i_lambda());
            let others: Vec<u32> = weight.iter().copied().filter(|&t| t != z).collect();
            if others.len() != 1 {
                return vec![Instance::failed(
                    lam,
                    "switch-tableau",
                    format!("weight space has dimension {}", weight.len()),
                )];
            }
            let vt = module.engine.basis(others[0]);
            let mut rows = vec![Instance::check(
                lam.clone(),
                "endomorphism",
                if is_endomorphism(&mut module, &vt) {
                    "endomorphism"
                } else {
                    "not an endomorphism"
                },
                "annihilator",
            )
            .with_note(format!("φ(z) = v_t, t = {}", module.tableau_string(others[0])))];
            let image = apply_endo(&mut module.engine, &vt, &vt);
            let computed = scalar_multiple(&image, &vt)
                .map(|c| c.to_string())
                .unwrap_or_else(|| "not a multiple of v_t".into());
            rows.push(Instance::check(
                lam,
                field.from_i64(expected).to_string(),
                computed,
                "φ(v_t)/v_t",
            ));
            rows
        },
    );
    Ok(Report::new("smallphivt", ctx.params.clone(), rows, false))
}

/// A job tagged with `e`.
pub struct Tagged(pub u8, pub Bipartition);

impl fmt::Display for Tagged {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} e={}", self.1, self.0)
    }
}

fn jk_pairs(ctx: &SuiteContext, default: impl Fn(u8) -> Vec<(u32, u32)>, es: &[u8]) -> Vec<(u8, u32, u32)> {
    let mut out = Vec::new();
    for &e in es {
        match (ctx.params.j, ctx.params.k) {
            (Some(j), Some(k)) => out.push((e, j, k)),
            _ => out.extend(default(e).into_iter().map(|(j, k)| (e, j, k))),
        }
    }
    out
}

pub fn cancellation(ctx: &SuiteContext) -> Result<Report, SuiteError> {
    let p = ctx.params.char.unwrap_or(0);
    let field = FieldSpec::new(p as u64)?;
    let pairs = jk_pairs(
        ctx,
        |e| {
            let mut v = Vec::new();
            for s in 2..=5u32 {
                for j in 1..s {
                    if s * e as u32 <= 15 {
                        v.push((j, s - j));
                    }
                }
            }
            v
        },
        &ctx.es(&[2, 3]),
    );
    let todo: Vec<Tagged> = pairs.into_iter().map(|(e, j, k)| Tagged(e, two_row(k, j, e))).collect();
    let rows = par_rows(todo, |Tagged(e, shape)| {
        let e = *e;
        let bs = BrickShape::of(shape, e).expect("two-row shape");
        let total = bs.bricks();
        let mut module = SpechtModule::build(shape, &Bicharge::zero(e, 2), field).expect("bihook");
        let minus_two = field.from_i64(-2);
        let mut rows = Vec::new();
        for (bricks, w) in bs.all() {
            let t = module.engine.id_of(&w);
            let v = module.engine.basis(t);
            for r in 1..total {
                let re = (r * e as u32) as u8;
                let rhs = module.engine.apply_psi(re, &v);
                let mut check = |part: &str, word: Vec<u8>, scale: &Scalar| {
                    let mut full = vec![re];
                    full.extend(word);
                    let lhs = module.engine.act_psi_word(&full, &v);
                    let ok = lhs == rhs.scale(scale);
                    Instance::new(
                        format!("{shape} e={e} ({part}) r={r} v{bricks:?}"),
                        "equal",
                        if ok { "equal" } else { "differ" },
                        Status::of(ok),
                        "brick-basis",
                    )
                };
                rows.push(check("i", brick_word(r, e), &minus_two));
                if r + 1 < total {
                    let mut w2 = brick_word(r + 1, e);
                    w2.extend(brick_word(r, e));
                    rows.push(check("ii", w2, &field.one()));
                }
                if r > 1 {
                    let mut w3 = brick_word(r - 1, e);
                    w3.extend(brick_word(r, e));
                    rows.push(check("iii", w3, &field.one()));
                }
            }
        }
        rows
    });
    Ok(Report::new("cancellation", ctx.params.clone(), rows, false))
}

pub fn keje(ctx: &SuiteContext) -> Result<Report, SuiteError> {
    let p = ctx.params.char.unwrap_or(0);
    let field = FieldSpec::new(p as u64)?;
    let mut todo: Vec<Tagged> = Vec::new();
    if let Some(shape) = ctx.lambda()? {
        todo.push(Tagged(ctx.params.e.unwrap_or(3), shape));
    } else {
        let pairs = jk_pairs(
            ctx,
            |e| match e {
                2 => vec![(1, 1), (1, 2), (2, 1), (2, 2), (2, 3)],
                _ => vec![(1, 1), (1, 2), (2, 1), (2, 2), (3, 3)],
            },
            &ctx.es(&[3, 2]),
        );
        todo.extend(pairs.into_iter().map(|(e, j, k)| Tagged(e, two_row(k, j, e))));
    }
    let rows = par_rows(todo, |Tagged(e, shape)| {
        let e = *e;
        let lam = format!("{shape} e={e}");
        let mut module = match SpechtModule::build(shape, &Bicharge::zero(e, 2), field) {
            Ok(m) => m,
            Err(err) => return vec![Instance::failed(lam, "keje", err.to_string())],
        };
        let bs = match BrickShape::of(shape, e) {
            Ok(b) => b,
            Err(err) => return vec![Instance::failed(lam, "keje", err.to_string())],
        };
        let u = keje_endomorphism(&mut module).expect("brick shape");
        let (c1, c2) = (bs.k, bs.j);
        let z = module.engine.z();
        let mut expected = Vec::new();
        let mut computed = Vec::new();
        let mut single = true;
        for i in 0..c1 {
            for l in 0..c2 {
                expected.push(field.from_i64(((c2 - l) * (c1 - i)) as i64).to_string());
                let mut word = brick_up(c2 - l, c2 - 1, e);
                word.extend(brick_down(c2 + i, c2, e));
                let term = module.engine.act_psi_word(&word, &z);
                match term.first() {
                    Some((t, c)) if term.nnz() == 1 && c.is_one() => {
                        computed.push(u.get(*t).map(|x| x.to_string()).unwrap_or_else(|| "0".into()));
                    }
                    _ => {
                        single = false;
                        computed.push("?".into());
                    }
                }
            }
        }
        if shape == &two_row(3, 3, 3) && e == 3 && p == 0 {
            let printed = ["9", "6", "3", "6", "4", "2", "3", "2", "1"];
            expected = printed.iter().map(|s| s.to_string()).collect();
        }
        let mut rows = vec![Instance::new(
            lam.clone(),
            format!("({})", expected.join(",")),
            format!("({})", computed.join(",")),
            Status::of(single && expected == computed && u.nnz() == expected.iter().filter(|s| *s != "0").count()),
            "brick-coefficients",
        )];
        rows.push(Instance::check(
            lam.clone(),
            "annihilated",
            if is_endomorphism(&mut module, &u) {
                "annihilated"
            } else {
                "not annihilated"
            },
            "annihilator",
        ));
        let space = compute_endo_space(&mut module);
        rows.push(
            Instance::check(
                lam,
                "in End",
                if space.coords(&u).is_some() {
                    "in End"
                } else {
                    "not in End"
                },
                "endo-space",
            )
            .with_note(format!("dim End = {}", space.dim())),
        );
        rows
    });
    Ok(Report::new("keje", ctx.params.clone(), rows, false))
}

fn stated_eigenvalues(j: u32, k: u32) -> Vec<i64> {
    let (j, k) = (j as i64, k as i64);
    let mut out = vec![-j * (k + 1), -(j - 1) * (k + 2)];
    if k > j && j > 2 {
        out.push(-(j - 2) * (k + 3));
    }
    if k > j && j == 2 {
        out.push(0);
    }
    out
}

pub fn keje_eigen(ctx: &SuiteContext) -> Result<Report, SuiteError> {
    let chars = ctx.chars(&[0]);
    let mut jobs: Vec<(u8, u32, u32, u32)> = Vec::new();
    for &p in &chars {
        for (e, j, k) in jk_pairs(ctx, |_| vec![(2, 2), (2, 3), (3, 3)], &ctx.es(&[3])) {
            jobs.push((e, j.min(k), j.max(k), p));
        }
    }
    if ctx.params.e.is_none() && ctx.params.char.is_none() && ctx.params.j.is_none() {
        jobs.push((2, 2, 4, 3));
    }
    for &(_, _, _, p) in &jobs {
        FieldSpec::new(p as u64)?;
    }
    let mut todo = Vec::new();
    for (e, j, k, p) in jobs {
        todo.push(EigenJob {
            e,
            j,
            k,
            p,
            swapped: false,
        });
        if j != k {
            todo.push(EigenJob {
                e,
                j,
                k,
                p,
                swapped: true,
            });
        }
    }
    let rows = par_rows(todo, |job| eigen_rows(ctx, job));
    Ok(Report::new("keje-eigen", ctx.params.clone(), rows, false))
}

/// `((ke),(je))`, or `((je),(ke))` when swapped.
pub struct EigenJob {
    pub e: u8,
    pub j: u32,
    pub k: u32,
    pub p: u32,
    pub swapped: bool,
}

impl EigenJob {
    fn shape(&self) -> Bipartition {
        if self.swapped {
            two_row(self.j, self.k, self.e)
        } else {
            two_row(self.k, self.j, self.e)
        }
    }
}

impl fmt::Display for EigenJob {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} e={} char={}", self.shape(), self.e, self.p)
    }
}

fn eigen_rows(ctx: &SuiteContext, job: &EigenJob) -> Vec<Instance> {
    let field = FieldSpec::new(job.p as u64).expect("checked");
    let shape = job.shape();
    let lam = job.to_string();
    let mut module = SpechtModule::build(&shape, &Bicharge::zero(job.e, 2), field).expect("bihook");
    let u = keje_endomorphism(&mut module).expect("brick shape");
    let stated = stated_eigenvalues(job.j, job.k);
    let mut rows = Vec::new();
    let factors = eigenvalues_of(&mut module, &u);
    let present: Vec<String> = factors.iter().filter_map(|f| f.eigenvalue.clone()).collect();
    for &ev in &stated {
        let want = field.from_i64(ev).to_string();
        let ok = present.contains(&want);
        rows.push(
            Instance::new(
                lam.clone(),
                format!("eigenvalue {want}"),
                if ok {
                    format!("eigenvalue {want}")
                } else {
                    "absent".into()
                },
                Status::of(ok),
                "char-poly",
            )
            .with_note(format!("eigenvalues present: {}", present.join(", "))),
        );
    }
    if job.k >= job.j && job.j > 1 {
        let reading = if job.swapped {
            BrickReading::FirstReversed
        } else {
            BrickReading::Second
        };
        let literal = stated_eigenvectors(field, job.j, job.k, SumRange::Literal);
        for (n, s) in stated_eigenvectors(field, job.j, job.k, SumRange::FromZero)
            .into_iter()
            .enumerate()
        {
            let ev = field.from_i64(s.eigenvalue);
            let ok = match brick_combination(&mut module, &s.vector, reading) {
                Ok(v) => !v.is_zero() && apply_endo(&mut module.engine, &u, &v) == v.scale(&ev),
                Err(_) => false,
            };
            let mut row = Instance::new(
                lam.clone(),
                format!("eigenvector {} for {ev}", s.label),
                if ok {
                    format!("eigenvector {} for {ev}", s.label)
                } else {
                    "not an eigenvector".into()
                },
                Status::of(ok),
                "apply-endo",
            );
            if literal[n].vector != s.vector {
                let lit_ok = brick_combination(&mut module, &literal[n].vector, reading)
                    .map(|v| apply_endo(&mut module.engine, &u, &v) == v.scale(&ev))
                    .unwrap_or(false);
                row = row.with_note(format!(
                    "inner sum from i = 0; with the sum from i = 1 the vector is {}",
                    if lit_ok {
                        "also an eigenvector"
                    } else {
                        "not an eigenvector"
                    }
                ));
            }
            if job.swapped {
                let note = match row.note.take() {
                    Some(n) => format!("{n}; bricks of component 1 numbered from the last brick"),
                    None => "bricks of component 1 numbered from the last brick".to_string(),
                };
                row = row.with_note(note);
            }
            rows.push(row);
        }
    }
    if job.p != 0 {
        let mut residues: Vec<String> = stated.iter().map(|&x| field.from_i64(x).to_string()).collect();
        residues.sort();
        residues.dedup();
        if residues.len() >= 2 {
            let got = ctx.classify(&shape, &Bicharge::zero(job.e, 2), job.p);
            rows.push(verdict_instance(&lam, true, &got).with_note(format!(
                "stated eigenvalues mod {}: {}",
                job.p,
                residues.join(", ")
            )));
        }
    }
    rows
}
