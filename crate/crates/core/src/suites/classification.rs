//! Classification suites: decomposability verdicts of bihooks against closed-form predictions,
//! conjecture scans and cross-checks between related shapes.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::combinatorics::{hooks_of, is_regular, Bicharge, Bipartition, Partition};
use crate::endo::{apply_endo, keje_endomorphism};
use crate::linalg::FieldSpec;
use crate::specht::{e2_row_column_identify, SpechtModule};

use super::predicates::{
    char_not_dividing, e2_expected, e2_family_matches, e2_listed_extra, enot2_char2_extra, enot2_expected,
    family_shape, level1_decomposable, main_family_matches, predict, small_bihooks_expected, FamilyMatch,
};
use super::{par_rows, verdict_instance, verdict_word, Classified, Instance, Report, Status, SuiteContext, SuiteError};

/// One classification to run.
#[derive(Debug, Clone)]
pub struct Case {
    pub shape: Bipartition,
    pub charge: Bicharge,
    pub p: u32,
}

impl Case {
    fn new(shape: Bipartition, charge: &Bicharge, p: u32) -> Case {
        Case {
            shape,
            charge: charge.clone(),
            p,
        }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} e={}", self.shape, self.charge.e)?;
        if self.charge.kappa.iter().any(|&k| k != self.charge.kappa[0]) {
            write!(f, " κ={:?}", self.charge.kappa)?;
        }
        write!(f, " char={}", self.p)
    }
}

fn check_fields(chars: &[u32]) -> Result<(), SuiteError> {
    for &p in chars {
        FieldSpec::new(p as u64)?;
    }
    Ok(())
}

/// Classifies every case in parallel; panics become errors.
fn classify_all(ctx: &SuiteContext, cases: &[Case]) -> Vec<Result<Classified, String>> {
    cases
        .par_iter()
        .map(|c| {
            std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| ctx.classify(&c.shape, &c.charge, c.p)))
                .unwrap_or_else(|_| Err(format!("{c}: engine panicked")))
        })
        .collect()
}

fn family_note(m: &FamilyMatch) -> String {
    format!(
        "k={} j={} a={} b={}{}",
        m.k,
        m.j,
        m.a,
        m.b,
        if m.conjugated { " (conjugate form)" } else { "" }
    )
}

pub fn small_bihooks(ctx: &SuiteContext) -> Result<Report, SuiteError> {
    let chars = ctx.chars(&[0, 2, 3]);
    check_fields(&chars)?;
    let mut cases = Vec::new();
    for e in ctx.es(&[3, 4]) {
        let charge = Bicharge::zero(e, 2);
        for n in 2..=2 * e as usize {
            for shape in Bipartition::bihooks(n) {
                for &p in &chars {
                    cases.push(Case::new(shape.clone(), &charge, p));
                }
            }
        }
    }
    let rows = par_rows(cases, |c| {
        let expected = small_bihooks_expected(&c.shape, c.charge.e, c.p).expect("small bihook");
        vec![verdict_instance(
            &c.to_string(),
            expected,
            &ctx.classify(&c.shape, &c.charge, c.p),
        )]
    });
    Ok(Report::new("small-bihooks", ctx.params.clone(), rows, false))
}

fn kee_rows(ctx: &SuiteContext, c: &Case, k: u32) -> Vec<Instance> {
    let label = c.to_string();
    let expected = char_not_dividing(c.p, k + 1);
    let mut rows = vec![verdict_instance(
        &label,
        expected,
        &ctx.classify(&c.shape, &c.charge, c.p),
    )];
    let field = FieldSpec::new(c.p as u64).expect("checked");
    let mut module = match SpechtModule::build(&c.shape, &c.charge, field) {
        Ok(m) => m,
        Err(err) => return vec![Instance::failed(label, "endomorphism", err.to_string())],
    };
    let phi = match keje_endomorphism(&mut module) {
        Ok(u) => u,
        Err(err) => return vec![Instance::failed(label, "endomorphism", err.to_string())],
    };
    let square = apply_endo(&mut module.engine, &phi, &phi);
    let minus = field.from_i64(-(k as i64 + 1));
    rows.push(Instance::check(
        label.clone(),
        format!("φ² = {minus}·φ"),
        if square == phi.scale(&minus) {
            format!("φ² = {minus}·φ")
        } else {
            "φ² differs".to_string()
        },
        "apply-endo",
    ));
    if expected {
        // ε = −φ/(k+1)
        let eps = phi.scale(&minus.inv().expect("p ∤ k+1"));
        let eps2 = apply_endo(&mut module.engine, &eps, &eps);
        rows.push(Instance::check(
            label,
            "ε² = ε",
            if eps2 == eps && !eps.is_zero() {
                "ε² = ε"
            } else {
                "not idempotent"
            },
            "idempotent",
        ));
    } else {
        rows.push(Instance::check(
            label,
            "φ² = 0, φ ≠ 0",
            if square.is_zero() && !phi.is_zero() {
                "φ² = 0, φ ≠ 0"
            } else {
                "φ² ≠ 0"
            },
            "nilpotent",
        ));
    }
    rows
}

pub fn kee(ctx: &SuiteContext) -> Result<Report, SuiteError> {
    let chars = ctx.chars(&[0, 2, 3, 5]);
    check_fields(&chars)?;
    let ks: Vec<u32> = ctx.params.k.map(|k| vec![k]).unwrap_or_else(|| vec![2, 3]);
    let mut cases = Vec::new();
    let mut corollary = Vec::new();
    let max_n = ctx.max_n(13);
    for e in ctx.es(&[3]) {
        let charge = Bicharge::zero(e, 2);
        let e32 = e as u32;
        for &k in &ks {
            for &p in &chars {
                let one = Partition::hook(e32, 0);
                let many = Partition::hook(k * e32, 0);
                cases.push((Case::new(Bipartition::new(one.clone(), many.clone()), &charge, p), k));
                cases.push((Case::new(Bipartition::new(many, one), &charge, p), k));
                for a in 1..e32 {
                    for b in 0..e32 - a {
                        let small = Partition::hook(e32 + a, b);
                        let big = Partition::hook(k * e32 + a, b);
                        if ((k + 1) * e32 + 2 * (a + b)) as usize <= max_n {
                            corollary.push((Case::new(Bipartition::new(small.clone(), big.clone()), &charge, p), k));
                            corollary.push((Case::new(Bipartition::new(big, small), &charge, p), k));
                        }
                    }
                }
            }
        }
    }
    let mut rows = par_rows(cases.into_iter().map(|(c, k)| KCase(c, k)).collect(), |KCase(c, k)| {
        kee_rows(ctx, c, *k)
    });
    rows.extend(par_rows(
        corollary.into_iter().map(|(c, k)| KCase(c, k)).collect(),
        |KCase(c, k)| {
            let expected = char_not_dividing(c.p, k + 1);
            vec![
                verdict_instance(&c.to_string(), expected, &ctx.classify(&c.shape, &c.charge, c.p))
                    .with_note(format!("k={k}, decorated")),
            ]
        },
    ));
    Ok(Report::new("kee", ctx.params.clone(), rows, false))
}

/// A case tagged with `k`.
pub struct KCase(pub Case, pub u32);

impl fmt::Display for KCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

pub fn mainresult(ctx: &SuiteContext) -> Result<Report, SuiteError> {
    let chars = ctx.chars(&[0, 2, 3]);
    check_fields(&chars)?;
    let mut cases = Vec::new();
    for e in ctx.es(&[3]) {
        let charge = ctx.charge(e)?;
        for n in 2..=ctx.max_n(12) {
            for shape in Bipartition::bihooks(n) {
                let matches = main_family_matches(&shape, e);
                for &p in &chars {
                    if let Some(pred) = predict(&matches, p) {
                        if pred.decomposable.is_some() {
                            cases.push((Case::new(shape.clone(), &charge, p), pred));
                        }
                    }
                }
            }
        }
    }
    let todo: Vec<PCase> = cases.into_iter().map(|(c, pred)| PCase(c, pred)).collect();
    let rows = par_rows(todo, |PCase(c, pred)| {
        let got = ctx.classify(&c.shape, &c.charge, c.p);
        let mut row = verdict_instance(&c.to_string(), pred.decomposable.expect("filtered"), &got)
            .with_note(family_note(&pred.used));
        if !pred.conflicting.is_empty() {
            let others: Vec<String> = pred.conflicting.iter().map(family_note).collect();
            row = row.with_note(format!(
                "{}; other readings predict the opposite: {}",
                family_note(&pred.used),
                others.join(", ")
            ));
        }
        vec![row]
    });
    Ok(Report::new("mainresult", ctx.params.clone(), rows, false))
}

/// A case with its family prediction.
pub struct PCase(pub Case, pub super::predicates::FamilyPrediction);

impl fmt::Display for PCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Status of one scanned shape: `expected` is the conjectured verdict, `listed` whether a
/// deviation is among the listed exceptions.
fn scan_row(c: &Case, expected: bool, listed: bool, got: &Result<Classified, String>) -> Instance {
    let label = c.to_string();
    match got {
        Err(why) => Instance::failed(label, "error", why.clone()),
        Ok(r) => {
            let status = if !r.certified() {
                Status::HeuristicUnresolved
            } else if r.decomposable() == expected {
                Status::MatchesConjecture
            } else if listed && r.decomposable() {
                Status::RemarkListed
            } else {
                Status::CounterexampleCandidate
            };
            Instance::new(label, verdict_word(expected), r.computed(), status, r.tier())
        }
    }
}

pub fn conjecture_scan(ctx: &SuiteContext) -> Result<Report, SuiteError> {
    let chars = ctx.chars(&[0]);
    check_fields(&chars)?;
    let plan: Vec<(u8, usize)> = match ctx.params.e {
        Some(e) => vec![(e, ctx.max_n(if e == 2 { 10 } else { 12 }))],
        None => vec![(3, ctx.max_n(12)), (2, ctx.max_n(10))],
    };
    let mut cases = Vec::new();
    for (e, max_n) in plan {
        let charge = ctx.charge(e)?;
        for n in 1..=max_n {
            for shape in Bipartition::bihooks(n) {
                for &p in &chars {
                    cases.push(Case::new(shape.clone(), &charge, p));
                }
            }
        }
    }
    let results = classify_all(ctx, &cases);
    let rows = cases
        .iter()
        .zip(&results)
        .map(|(c, got)| {
            let e = c.charge.e;
            let equal = c.charge.kappa.iter().all(|&k| k == c.charge.kappa[0]);
            let (expected, listed) = if e == 2 {
                let listed = e2_listed_extra(&c.shape, c.p) || (c.p == 2 && enot2_char2_extra(&c.shape, 2));
                (e2_expected(&c.shape, equal, c.p), listed)
            } else {
                let expected = equal && enot2_expected(&c.shape, e, c.p);
                (expected, equal && c.p == 2 && enot2_char2_extra(&c.shape, e))
            };
            scan_row(c, expected, listed, got)
        })
        .collect();
    Ok(Report::new("conjecture-scan", ctx.params.clone(), rows, true))
}

fn kappas(ctx: &SuiteContext, e: u8) -> Result<Vec<Bicharge>, SuiteError> {
    if ctx.params.kappa.is_some() {
        Ok(vec![ctx.charge(e)?])
    } else {
        Ok(vec![Bicharge::zero(e, 2), Bicharge::new(e as i64, &[0, 1])?])
    }
}

pub fn e2(ctx: &SuiteContext) -> Result<Report, SuiteError> {
    let chars = ctx.chars(&[0, 3]);
    check_fields(&chars)?;
    let max_n = ctx.max_n(9);
    let mut lifts = Vec::new();
    for charge in kappas(ctx, 2)? {
        for &p in &chars {
            for m in 1..max_n {
                for mu in hooks_of(m) {
                    if !level1_decomposable(&mu, p) {
                        continue;
                    }
                    for rest in 1..=max_n - m {
                        for nu in hooks_of(rest) {
                            lifts.push(Case::new(Bipartition::new(mu.clone(), nu.clone()), &charge, p));
                            lifts.push(Case::new(Bipartition::new(nu.clone(), mu.clone()), &charge, p));
                        }
                    }
                }
            }
        }
    }
    let mut rows = par_rows(lifts, |c| {
        vec![
            verdict_instance(&c.to_string(), true, &ctx.classify(&c.shape, &c.charge, c.p)).with_note("level-one lift"),
        ]
    });
    let charge = Bicharge::zero(2, 2);
    let mut families = Vec::new();
    for n in 2..=max_n {
        for shape in Bipartition::bihooks(n) {
            let matches = e2_family_matches(&shape);
            for &p in &chars {
                if let Some(pred) = predict(&matches, p) {
                    if pred.decomposable.is_some() {
                        families.push(PCase(Case::new(shape.clone(), &charge, p), pred));
                    }
                }
            }
        }
    }
    rows.extend(par_rows(families, |PCase(c, pred)| {
        let expected = pred.decomposable.expect("filtered") || e2_expected(&c.shape, true, c.p);
        vec![
            verdict_instance(&c.to_string(), expected, &ctx.classify(&c.shape, &c.charge, c.p))
                .with_note(family_note(&pred.used)),
        ]
    }));
    for k in 1..=max_n as u32 / 2 {
        for j in 1..=max_n as u32 / 2 - k {
            let shape = Bipartition::new(Partition::hook(2 * k, 0), Partition::hook(2 * j, 0));
            let label = format!("{shape} e=2 row/column");
            rows.push(match e2_row_column_identify(&shape, &charge) {
                Ok(w) => Instance::check(
                    label,
                    "identified",
                    if w.identified() { "identified" } else { "differ" },
                    "presentation",
                )
                .with_note(format!(
                    "{} ~ {}, grading shift {}",
                    w.row_shape, w.column_shape, w.grading_shift
                )),
                Err(err) => Instance::failed(label, "presentation", err.to_string()),
            });
        }
    }
    Ok(Report::new("e2", ctx.params.clone(), rows, false))
}

pub fn level1_criteria_suite(ctx: &SuiteContext) -> Result<Report, SuiteError> {
    let chars = ctx.chars(&[0, 2, 3]);
    check_fields(&chars)?;
    let charge = Bicharge::zero(2, 1);
    let mut cases = Vec::new();
    for n in 1..=ctx.max_n(9) {
        for shape in Bipartition::level_one_hooks(n) {
            for &p in &chars {
                cases.push(Case::new(shape.clone(), &charge, p));
            }
        }
    }
    let rows = par_rows(cases, |c| {
        let expected = level1_decomposable(c.shape.comp(1), c.p);
        vec![verdict_instance(
            &c.to_string(),
            expected,
            &ctx.classify(&c.shape, &c.charge, c.p),
        )]
    });
    Ok(Report::new("level1-criteria", ctx.params.clone(), rows, false))
}

pub fn consistency(ctx: &SuiteContext) -> Result<Report, SuiteError> {
    let chars = ctx.chars(&[0, 2, 3]);
    check_fields(&chars)?;
    let max_n = ctx.max_n(8);
    let mut cases = Vec::new();
    for e in ctx.es(&[2, 3]) {
        let charge = Bicharge::zero(e, 2);
        for n in 1..=max_n {
            for shape in Bipartition::bihooks(n) {
                for &p in &chars {
                    cases.push(Case::new(shape.clone(), &charge, p));
                }
            }
        }
    }
    let results = classify_all(ctx, &cases);
    let index: BTreeMap<String, usize> = cases.iter().enumerate().map(|(i, c)| (c.to_string(), i)).collect();
    let mut rows = Vec::new();
    for (i, c) in cases.iter().enumerate() {
        let conj = Case::new(c.shape.conjugate(), &c.charge, c.p);
        let Some(&j) = index.get(&conj.to_string()) else {
            continue;
        };
        if j < i {
            continue;
        }
        let label = format!("{c} vs {}", conj.shape);
        rows.push(match (&results[i], &results[j]) {
            (Ok(a), Ok(b)) => {
                let status = if !(a.certified() && b.certified()) {
                    Status::HeuristicUnresolved
                } else {
                    Status::of(a.decomposable() == b.decomposable())
                };
                Instance::new(label, a.computed(), b.computed(), status, "conjugation")
            }
            (Err(why), _) | (_, Err(why)) => Instance::failed(label, "conjugation", why.clone()),
        });
        if is_regular(&c.shape, &c.charge) {
            rows.push(verdict_instance(&format!("{c} regular"), false, &results[i]));
        }
    }
    let mut unequal = Vec::new();
    for e in ctx.es(&[3]).into_iter().filter(|&e| e != 2) {
        let charge = Bicharge::new(e as i64, &[0, 1])?;
        for n in 1..=max_n {
            for shape in Bipartition::bihooks(n) {
                for &p in &chars {
                    unequal.push(Case::new(shape.clone(), &charge, p));
                }
            }
        }
    }
    let results = classify_all(ctx, &unequal);
    rows.extend(
        unequal
            .iter()
            .zip(&results)
            .map(|(c, got)| verdict_instance(&c.to_string(), false, got)),
    );
    Ok(Report::new("consistency", ctx.params.clone(), rows, false))
}

pub fn induction_consistency(ctx: &SuiteContext) -> Result<Report, SuiteError> {
    let chars = ctx.chars(&[0, 2, 3]);
    check_fields(&chars)?;
    let max_n = ctx.max_n(12);
    let mut bases = Vec::new();
    let mut pairs: Vec<(usize, Case, String)> = Vec::new();
    for e in ctx.es(&[3]) {
        let charge = Bicharge::zero(e, 2);
        let e32 = e as u32;
        for k in 1..=max_n as u32 {
            for j in 1..=max_n as u32 {
                if ((k + j) * e32) as usize > max_n {
                    continue;
                }
                for &p in &chars {
                    let base = bases.len();
                    bases.push(Case::new(family_shape(k, j, 0, 0, e), &charge, p));
                    for a in 1..e32 {
                        let s = family_shape(k, j, a, 0, e);
                        if s.size() <= max_n {
                            pairs.push((base, Case::new(s, &charge, p), format!("translation a={a}")));
                        }
                    }
                    for a in 1..=e32 {
                        for b in 0..e32 {
                            if a + b == e32 || b == 0 && a < e32 {
                                continue;
                            }
                            let s = family_shape(k, j, a, b, e);
                            if s.size() <= max_n {
                                pairs.push((base, Case::new(s, &charge, p), format!("decoration a={a} b={b}")));
                            }
                        }
                    }
                }
            }
        }
    }
    let base_results = classify_all(ctx, &bases);
    let others: Vec<Case> = pairs.iter().map(|p| p.1.clone()).collect();
    let other_results = classify_all(ctx, &others);
    let rows = pairs
        .iter()
        .zip(&other_results)
        .map(|((b, c, how), got)| {
            let label = format!("{} vs {}", bases[*b], c.shape);
            match (&base_results[*b], got) {
                (Ok(x), Ok(y)) => {
                    let status = if !(x.certified() && y.certified()) {
                        Status::HeuristicUnresolved
                    } else {
                        Status::of(x.decomposable() == y.decomposable())
                    };
                    Instance::new(label, x.computed(), y.computed(), status, "induction").with_note(how.clone())
                }
                (Err(why), _) | (_, Err(why)) => Instance::failed(label, "induction", why.clone()),
            }
        })
        .collect();
    Ok(Report::new("induction-consistency", ctx.params.clone(), rows, false))
}
