//! Suites checking the engine itself: relations, the oracle, bases and the `e = 2` signs.

use std::collections::BTreeMap;
use std::fmt;
use std::panic::{catch_unwind, AssertUnwindSafe};

use crate::combinatorics::{binomial, hooks_of, std_count, Bicharge, Bipartition, BrickShape, Layout, Partition};
use crate::decomp::decomposability_verdict_with;
use crate::klr::Conventions;
use crate::linalg::FieldSpec;
use crate::specht::{check_shape, verify_relations, SpechtModule, VerifyMode};

use super::predicates::small_bihooks_expected;
use super::{par_rows, Instance, Report, Status, SuiteContext, SuiteError};

/// Every hook-component shape of size `n`: level one, bihooks, and bihooks with an empty component.
pub fn all_shapes(n: usize) -> Vec<Bipartition> {
    let mut out = Bipartition::level_one_hooks(n);
    out.extend(Bipartition::bihooks(n));
    for h in hooks_of(n) {
        out.push(Bipartition::new(h.clone(), Partition::empty()));
        out.push(Bipartition::new(Partition::empty(), h));
    }
    out
}

/// One module to build: shape, charge and field.
#[derive(Debug, Clone)]
pub struct Job {
    pub shape: Bipartition,
    pub charge: Bicharge,
    pub p: u32,
}

impl fmt::Display for Job {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} e={} κ={:?} char={}",
            self.shape, self.charge.e, self.charge.kappa, self.p
        )
    }
}

fn charges(ctx: &SuiteContext, shape: &Bipartition, e: u8) -> Result<Vec<Bicharge>, SuiteError> {
    if shape.level() == 1 {
        return Ok(vec![Bicharge::zero(e, 1)]);
    }
    if ctx.params.kappa.is_some() {
        return Ok(vec![ctx.charge(e)?]);
    }
    Ok(vec![Bicharge::zero(e, 2), Bicharge::new(e as i64, &[0, 1])?])
}

fn jobs(ctx: &SuiteContext, max_n: usize, es: &[u8], chars: &[u32]) -> Result<Vec<Job>, SuiteError> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for shape in all_shapes(n) {
            for &e in es {
                for charge in charges(ctx, &shape, e)? {
                    for &p in chars {
                        out.push(Job {
                            shape: shape.clone(),
                            charge: charge.clone(),
                            p,
                        });
                    }
                }
            }
        }
    }
    Ok(out)
}

fn label(job: &Job) -> String {
    job.to_string()
}

pub fn relations(ctx: &SuiteContext) -> Result<Report, SuiteError> {
    let max_n = ctx.max_n(8);
    let todo = jobs(ctx, max_n, &ctx.es(&[2, 3]), &ctx.chars(&[0, 2, 3]))?;
    for j in &todo {
        FieldSpec::new(j.p as u64)?;
    }
    let rows = par_rows(todo, |job| {
        let field = FieldSpec::new(job.p as u64).expect("checked");
        let mut module = match SpechtModule::build(&job.shape, &job.charge, field) {
            Ok(m) => m,
            Err(e) => return vec![Instance::failed(label(job), "exhaustive", e.to_string())],
        };
        let mode = if max_n <= 8 {
            VerifyMode::Exhaustive
        } else {
            VerifyMode::Sampled {
                count: 200,
                seed: ctx.policy.seed,
            }
        };
        let rep = verify_relations(&mut module, mode);
        let computed = if rep.passed() {
            "holds".to_string()
        } else {
            format!("{} failures", rep.failures.len())
        };
        let mut row = Instance::check(
            label(job),
            "holds",
            computed,
            if max_n <= 8 { "exhaustive" } else { "sampled" },
        )
        .with_note(format!(
            "{} relation instances on {} vectors",
            rep.instances, rep.vectors
        ));
        if let Some(f) = rep.failures.first() {
            row = row.with_note(format!(
                "first failure: {} at {}: {}",
                f.relation, f.tableau, f.residual
            ));
        }
        vec![row]
    });
    Ok(Report::new("relations", ctx.params.clone(), rows, false))
}

pub fn oracle(ctx: &SuiteContext) -> Result<Report, SuiteError> {
    let todo = jobs(ctx, ctx.max_n(8), &ctx.es(&[2, 3]), &ctx.chars(&[0]))?;
    for j in &todo {
        FieldSpec::new(j.p as u64)?;
    }
    let rows = par_rows(todo, |job| {
        let field = FieldSpec::new(job.p as u64).expect("checked");
        match check_shape(&job.shape, &job.charge, field, Conventions::PINNED) {
            Err(e) => vec![Instance::failed(label(job), "oracle", e.to_string())],
            Ok(c) => {
                let computed = if c.agrees() {
                    "agree".to_string()
                } else {
                    format!(
                        "oracle dim {} vs |Std| {}, image rank {}, {} relation mismatches",
                        c.oracle_dim, c.std_count, c.image_rank, c.relation_mismatches
                    )
                };
                vec![
                    Instance::check(label(job), "agree", computed, "oracle").with_note(format!(
                        "dim {}, {} oracle relations checked",
                        c.oracle_dim, c.relations_checked
                    )),
                ]
            }
        }
    });
    Ok(Report::new("oracle", ctx.params.clone(), rows, false))
}

fn graded_string(g: &BTreeMap<i32, u64>) -> String {
    g.iter()
        .map(|(d, m)| format!("{m}q^{d}"))
        .collect::<Vec<_>>()
        .join(" + ")
}

pub fn basis(ctx: &SuiteContext) -> Result<Report, SuiteError> {
    let es = ctx.es(&[2, 3]);
    let mut shapes = Vec::new();
    for n in 1..=8 {
        for s in all_shapes(n) {
            for &e in &es {
                shapes.push(Job {
                    charge: if s.level() == 1 {
                        Bicharge::zero(e, 1)
                    } else {
                        Bicharge::zero(e, 2)
                    },
                    shape: s.clone(),
                    p: 0,
                });
            }
        }
    }
    let mut rows = par_rows(shapes, |job| {
        let layout = match Layout::new(&job.shape, &job.charge) {
            Ok(l) => l,
            Err(e) => return vec![Instance::failed(label(job), "enumeration", e.to_string())],
        };
        let tabs = layout.standard_tableaux();
        let graded: u64 = layout.graded_dim(&tabs).values().sum();
        let expected = std_count(&job.shape);
        let ok = tabs.len() as u64 == expected && graded == expected;
        vec![Instance::new(
            label(job),
            format!("dim {expected}"),
            format!("dim {}, graded total {graded}", tabs.len()),
            Status::of(ok),
            "enumeration",
        )]
    });
    let bound = ctx.max_n(15);
    let mut brick = Vec::new();
    for &e in &ctx.es(&[2, 3, 4, 5]) {
        for k in 1..=bound as u32 {
            for j in 1..=bound as u32 {
                if ((j + k) * e as u32) as usize <= bound {
                    brick.push(Job {
                        shape: Bipartition::new(Partition::hook(k * e as u32, 0), Partition::hook(j * e as u32, 0)),
                        charge: Bicharge::zero(e, 2),
                        p: 0,
                    });
                }
            }
        }
    }
    rows.extend(par_rows(brick, |job| {
        let e = job.charge.e;
        let bs = BrickShape::of(&job.shape, e).expect("brick shape");
        let layout = Layout::new(&job.shape, &job.charge).expect("layout");
        let weight = layout.standard_with_residues(&layout.initial_residues());
        let graded = layout.graded_dim(&weight);
        let expected: BTreeMap<i32, u64> = [(bs.j as i32, binomial((bs.j + bs.k) as u64, bs.j as u64))].into();
        let mut bricks: Vec<_> = bs.all().into_iter().map(|(_, w)| w).collect();
        let mut got = weight.clone();
        bricks.sort();
        got.sort();
        let mut row = Instance::check(
            label(job),
            graded_string(&expected),
            graded_string(&graded),
            "weight-space",
        );
        if got != bricks {
            row.status = Status::Fail;
            row = row.with_note("weight-space tableaux differ from the brick tableaux");
        }
        vec![row]
    }));
    Ok(Report::new("basis", ctx.params.clone(), rows, false))
}

/// Decomposable bihooks with `n ≤ 4` at `e = 2`, `κ = (0,0)` under `conv`; `Err` if the
/// presentation is inconsistent or the engine breaks down.
fn e2_classification(conv: Conventions, p: u32) -> Result<Vec<String>, String> {
    let charge = Bicharge::zero(2, 2);
    let field = FieldSpec::new(p as u64).map_err(|e| e.to_string())?;
    let mut out = Vec::new();
    for n in 2..=4 {
        for shape in Bipartition::bihooks(n) {
            let cmp = check_shape(&shape, &charge, field, conv).map_err(|e| format!("{shape}: {e}"))?;
            if !cmp.agrees() {
                return Err(format!(
                    "{shape}: presentation has dimension {} not {}",
                    cmp.oracle_dim, cmp.std_count
                ));
            }
            let mut module = SpechtModule::build_with(&shape, &charge, field, conv).map_err(|e| e.to_string())?;
            let o = decomposability_verdict_with(&mut module, &Default::default(), None)
                .map_err(|e| format!("{shape}: {e}"))?;
            if !o.verdict.is_certified() {
                return Err(format!("{shape}: uncertified verdict"));
            }
            if o.verdict.is_decomposable() {
                out.push(shape.to_string());
            }
        }
    }
    Ok(out)
}

pub fn e2_pin(ctx: &SuiteContext) -> Result<Report, SuiteError> {
    let chars = ctx.chars(&[0, 2, 3]);
    let expected: BTreeMap<u32, Vec<String>> = chars
        .iter()
        .map(|&p| {
            let mut v = Vec::new();
            for n in 2..=4 {
                for s in Bipartition::bihooks(n) {
                    if small_bihooks_expected(&s, 2, p) == Some(true) {
                        v.push(s.to_string());
                    }
                }
            }
            (p, v)
        })
        .collect();
    let mut rows = Vec::new();
    let mut reproducing = Vec::new();
    for conv in Conventions::candidates() {
        let mut ok = true;
        let mut detail = Vec::new();
        for &p in &chars {
            let got = catch_unwind(AssertUnwindSafe(|| e2_classification(conv, p)))
                .unwrap_or_else(|_| Err("engine panicked".into()));
            match got {
                Ok(list) if list == expected[&p] => detail.push(format!("char {p}: {list:?}")),
                Ok(list) => {
                    ok = false;
                    detail.push(format!("char {p}: {list:?} (expected {:?})", expected[&p]));
                }
                Err(why) => {
                    ok = false;
                    detail.push(format!("char {p}: {why}"));
                }
            }
        }
        if ok {
            reproducing.push(conv.label());
        }
        let computed = if ok { "reproduces" } else { "does not reproduce" };
        let row = if conv == Conventions::PINNED {
            Instance::check(
                format!("pinned {}", conv.label()),
                "reproduces",
                computed,
                "classification",
            )
        } else {
            Instance::new(
                format!("candidate {}", conv.label()),
                "-",
                computed,
                Status::Pass,
                "informational",
            )
        };
        rows.push(row.with_note(detail.join("; ")));
    }
    rows.push(
        Instance::check(
            "exactly one convention",
            "1",
            reproducing.len().to_string(),
            "classification",
        )
        .with_note(format!("reproducing: {}", reproducing.join(", "))),
    );
    Ok(Report::new("e2-pin", ctx.params.clone(), rows, false))
}
