//! `rwkl verify`: verification suites with a plain-text report.

use std::collections::BTreeSet;
use std::fmt::Write;
use std::path::PathBuf;

use anyhow::Result;
use clap::{Args, ValueEnum};
use rwkl_core::adversarial::{bad_set, greedy_homogeneous, measure_build, priority_build, verify_defeated};
use rwkl_core::gen::{random_oracle_adversaries, random_positive_tree, random_schedules, rng};
use rwkl_core::reductions::OrderFunction;
use rwkl_core::roundtrip::{
    check_chaincode, check_fixcolor, check_kary, check_localize, check_pack, check_sat2graph, check_tree2cnf, run_suite,
    SuiteConfig, Tally,
};
use rwkl_core::widgets::check_widget_lemmas;

use crate::io::{emit, read_tree};
use crate::Common;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Widgets,
    Reductions,
    Adversarial,
    Claims,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: Suite,
    /// Seeded instances (or families) per check.
    #[arg(long)]
    pub instances: Option<usize>,
    /// Run the tree-sourced round trips on this tree instead of the generated corpus.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Density exponent for `claims`.
    #[arg(long, default_value_t = 3)]
    pub c: u32,
}

/// Runs the suite, writes the report and returns whether every property held.
pub fn run(common: &Common, a: &VerifyArgs) -> Result<bool> {
    let mut report = String::new();
    let passed = match a.suite {
        Suite::Widgets => widgets(common, &mut report)?,
        Suite::Reductions => match &a.input {
            Some(path) => reductions_on(common, path, &mut report)?,
            None => reductions(common, a, &mut report)?,
        },
        Suite::Adversarial => adversarial(common, a, &mut report)?,
        Suite::Claims => claims(common, a, &mut report)?,
    };
    writeln!(report, "{}", if passed { "PASS" } else { "FAIL" })?;
    emit(common.out.as_ref(), &report)?;
    Ok(passed)
}

fn widgets(common: &Common, out: &mut String) -> Result<bool> {
    let rep = check_widget_lemmas(common.depth.unwrap_or(7), common.search())?;
    for (name, cases, failures) in rep.summary() {
        writeln!(out, "{name}: {cases} cases, {failures} failing checks")?;
    }
    for m in &rep.mutations {
        let by = m.detected_by.as_deref().unwrap_or("nothing");
        writeln!(out, "mutation {} minus {:?}: caught by {by}", m.gadget, m.removed)?;
    }
    Ok(rep.passed())
}

fn reductions(common: &Common, a: &VerifyArgs, out: &mut String) -> Result<bool> {
    let mut cfg = SuiteConfig { seed: common.seed, ..SuiteConfig::default() };
    if let Some(n) = a.instances {
        cfg.random_instances = n;
    }
    if let Some(d) = common.depth {
        cfg.random_depth = d;
    }
    let mut ok = true;
    for (red, tally) in run_suite(&cfg)? {
        writeln!(out, "{}: {tally}", red.name())?;
        for e in &tally.examples {
            writeln!(out, "  {e}")?;
        }
        ok &= tally.passed();
    }
    Ok(ok)
}

fn reductions_on(common: &Common, path: &PathBuf, out: &mut String) -> Result<bool> {
    let t = read_tree(path)?;
    let mut r = rng(common.seed);
    let mut rows: Vec<(&str, Tally)> = vec![("kary2bin", check_kary(&t)?)];
    if t.alphabet() == 2 {
        let x: Vec<usize> = (0..t.horizon()).step_by(2).collect();
        let len = 1 << (t.horizon() + 2);
        rows.push(("localize", check_localize(&t, &x)?));
        rows.push(("pack-floor-half", check_pack(&t, &OrderFunction::floor_half(len), 13, &mut r, 20)?));
        rows.push(("pack-identity", check_pack(&t, &OrderFunction::identity(len), 13, &mut r, 20)?));
        rows.push(("fixcolor", check_fixcolor(&t)?));
        rows.push(("chaincode", check_chaincode(&t)?));
        rows.push(("tree2cnf", check_tree2cnf(&t)?));
        rows.push(("sat2graph", check_sat2graph(&t, 6, &mut r, 16)?));
    }
    let mut ok = true;
    for (name, tally) in rows {
        writeln!(out, "{name}: {tally}")?;
        for e in &tally.examples {
            writeln!(out, "  {e}")?;
        }
        ok &= tally.passed();
    }
    Ok(ok)
}

fn adversarial(common: &Common, a: &VerifyArgs, out: &mut String) -> Result<bool> {
    let families = a.instances.unwrap_or(10);
    let mut r = rng(common.seed);
    let stages = common.horizon.unwrap_or(40);
    let (mut ok, mut attended, mut defeated) = (true, 0usize, 0usize);
    for _ in 0..families {
        let advs = random_schedules(&mut r, 4, stages);
        let run = priority_build(&advs, stages)?;
        ok &= run.bipartite_after.iter().all(|&b| b);
        let acted: BTreeSet<usize> = run.log.iter().map(|at| at.e).collect();
        for adv in advs.iter().filter(|adv| acted.contains(&adv.e)) {
            attended += 1;
            if verify_defeated(&run.graph, adv) {
                defeated += 1;
            }
        }
    }
    ok &= attended == defeated;
    writeln!(out, "priority: {families} families, {stages} stages, {defeated}/{attended} attended adversaries defeated")?;
    let prefix = common.depth.unwrap_or(10);
    let (mut type_two, mut strong, mut replayed) = (0usize, 0usize, 0usize);
    for _ in 0..families {
        let advs = random_oracle_adversaries(&mut r, 3, prefix);
        let run = measure_build(&advs, prefix + 2)?;
        if run.replays() {
            replayed += 1;
        }
        ok &= run.bipartite_after.iter().all(|&b| b);
        for req in run.requirements.iter().filter(|req| req.type_two.is_some()) {
            type_two += 1;
            if req.defeated.gt_ratio(2, 5) {
                strong += 1;
            }
            writeln!(out, "  requirement {}: defeated measure {}", req.e, req.defeated)?;
        }
    }
    ok &= replayed == families && strong == type_two;
    writeln!(
        out,
        "measure: {replayed}/{families} logs replay, {strong}/{type_two} type II requirements defeated above 2/5"
    )?;
    Ok(ok)
}

fn claims(common: &Common, a: &VerifyArgs, out: &mut String) -> Result<bool> {
    let trees = a.instances.unwrap_or(200);
    let depth = common.depth.unwrap_or(10);
    let mut r = rng(common.seed);
    let mut histogram = vec![0usize; 2 * a.c as usize + 1];
    let mut worst = 0;
    let mut certified = 0;
    for _ in 0..trees {
        let t = random_positive_tree(&mut r, depth, a.c)?;
        let bad = bad_set(&t, a.c, &BTreeSet::new())?;
        worst = worst.max(bad.len());
        if let Some(slot) = histogram.get_mut(bad.len()) {
            *slot += 1;
        }
        if greedy_homogeneous(&t, a.c, 3)?.certified() {
            certified += 1;
        }
    }
    writeln!(out, "c = {}: {trees} trees at depth {depth}, density at least 1/{}", a.c, 1u64 << a.c)?;
    for (size, count) in histogram.iter().enumerate().filter(|(_, &n)| n > 0) {
        writeln!(out, "  |Bad| = {size}: {count} trees")?;
    }
    writeln!(out, "largest |Bad| = {worst}, bound 2c = {}", 2 * a.c)?;
    writeln!(out, "greedy sets certified for 3 steps: {certified}/{trees}")?;
    Ok(worst < 2 * a.c as usize && certified == trees)
}
