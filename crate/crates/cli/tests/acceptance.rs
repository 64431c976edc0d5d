//! Acceptance suite: one pass/fail line per criterion, nonzero exit if any fails.
//!
//! Each criterion recomputes what it checks with a local oracle where the
//! library result could otherwise vouch for itself.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

use rwkl_core::adversarial::{
    avoidance_tree, bad_set, defeat_certificate, defeats, greedy_homogeneous, measure_build, priority_build,
    AdversarySchedule, OracleAdversary, Prediction, PriorityRun,
};
use rwkl_core::gen;
use rwkl_core::graph::{enumerate_colorings, is_k_homogeneous, Graph, SearchBudget};
use rwkl_core::reductions::{expand, OrderFunction, USequence};
use rwkl_core::roundtrip::{run_suite, SuiteConfig};
use rwkl_core::tree::{enumerate_homogeneous, format_word};
use rwkl_core::widgets::{build_r, check_widget_lemmas};
use rwkl_core::{ColorSet, FinTree};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

/// Side and component root of every vertex, or `None` on an odd cycle.
fn sides(g: &Graph) -> Option<BTreeMap<usize, (usize, u8)>> {
    let mut out: BTreeMap<usize, (usize, u8)> = BTreeMap::new();
    for s in g.vertices() {
        if out.contains_key(&s) {
            continue;
        }
        out.insert(s, (s, 0));
        let mut q = VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            let (root, p) = out[&u];
            for w in g.neighbors(u) {
                match out.get(&w) {
                    Some(&(_, pw)) if pw == p => return None,
                    Some(_) => {}
                    None => {
                        out.insert(w, (root, 1 - p));
                        q.push_back(w);
                    }
                }
            }
        }
    }
    Some(out)
}

/// For a bipartite graph: some two vertices of `set` lie in one component on opposite sides.
fn has_odd_pair(sides: &BTreeMap<usize, (usize, u8)>, set: &BTreeSet<usize>) -> bool {
    let mut seen: BTreeMap<usize, u8> = BTreeMap::new();
    set.iter().filter_map(|v| sides.get(v)).any(|&(root, p)| *seen.entry(root).or_insert(p) != p)
}

/// `H` with color `c` is homogeneous iff every level up to `d` has a word constant `c` on `H`.
fn homogeneous_by_definition(t: &FinTree, h: &ColorSet, d: usize) -> bool {
    (0..=d).all(|l| t.level(l).iter().any(|w| h.positions.iter().all(|&i| i >= w.len() || w[i] == h.color)))
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let rep = check_widget_lemmas(7, SearchBudget::default()).map_err(err)?;
    let elapsed = start.elapsed();
    let names: BTreeSet<String> = rep.summary().into_iter().map(|(n, _, _)| n).collect();
    let required = [
        "R(i)", "R(ii)", "R(iii) u", "R(iii) v", "U(i)", "U(ii)", "U(iii)", "U(iv)", "U-decode d", "U-decode lbar",
        "U-decode r", "U-decode u", "U-decode v", "D(i)", "D(ii)", "D-decode table", "D-decode resolved",
    ];
    for r in required {
        ensure(names.contains(r), || format!("no check named {r}"))?;
    }
    let d_sizes: BTreeSet<&str> = rep.checks.iter().map(|c| c.gadget.as_str()).collect();
    ensure((1..=7).all(|n| d_sizes.contains(format!("D{n}").as_str())), || format!("D gadgets covered: {d_sizes:?}"))?;
    let failing: Vec<_> = rep.summary().into_iter().filter(|(_, _, f)| *f > 0).collect();
    ensure(failing.is_empty(), || format!("failing clauses: {failing:?}"))?;
    ensure(rep.mutations.len() >= 3, || "fewer than three mutations".into())?;
    let missed: Vec<_> = rep.mutations.iter().filter(|m| m.detected_by.is_none()).collect();
    ensure(missed.is_empty(), || format!("undetected mutations: {missed:?}"))?;
    ensure(elapsed < Duration::from_secs(60), || format!("took {elapsed:?}"))?;
    let cases: u64 = rep.summary().iter().map(|(_, c, _)| c).sum();
    Ok(format!(
        "{} clauses, {cases} cases, 0 counterexamples; {} mutations caught; {} ms",
        names.len(),
        rep.mutations.len(),
        elapsed.as_millis()
    ))
}

fn criterion_2() -> Outcome {
    let r = build_r(0, 1, 2, 3, 4, 5).map_err(err)?;
    let pins: BTreeMap<usize, u32> = [("x", 0), ("y", 1), ("z", 2)]
        .into_iter()
        .map(|(n, c)| (r.vertex(n).expect("named vertex"), c))
        .collect();
    let count = enumerate_colorings(&r.graph, 3, &pins, SearchBudget::default()).map_err(err)?.len();
    let vs: Vec<usize> = r.graph.vertices().collect();
    let brute = (0..3u32.pow(vs.len() as u32))
        .filter(|&code| {
            let col: BTreeMap<usize, u32> = vs.iter().enumerate().map(|(i, &v)| (v, code / 3u32.pow(i as u32) % 3)).collect();
            pins.iter().all(|(v, c)| col[v] == *c) && r.graph.edges().iter().all(|(a, b)| col[a] != col[b])
        })
        .count();
    ensure(count == 2 && brute == 2, || format!("enumerator {count}, brute force {brute}"))?;
    Ok("2 colorings with (x,y,z) pinned to (0,1,2), brute force agrees".into())
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let mut cross = 0;
    for t in gen::all_trees(3).map_err(err)? {
        let d = t.horizon();
        let got: BTreeSet<ColorSet> = enumerate_homogeneous(&t, d, d, 20).map_err(err)?.into_iter().collect();
        let want: BTreeSet<ColorSet> = (0u32..1 << d)
            .flat_map(|m| (0..2).map(move |c| ColorSet::new((0..d).filter(|i| m >> i & 1 == 1), c)))
            .filter(|h| homogeneous_by_definition(&t, h, d))
            .collect();
        ensure(got == want, || format!("solution enumerator disagrees with the definition on {}", t.to_json()))?;
        cross += 1;
    }
    let mut lines = Vec::new();
    let mut failures = 0;
    for (red, tally) in run_suite(&SuiteConfig::default()).map_err(err)? {
        failures += tally.failures;
        ensure(tally.solutions > 0, || format!("{} checked no solutions", red.name()))?;
        lines.push(format!("{}={}/{}", red.name(), tally.solutions - tally.failures, tally.solutions));
        if !tally.passed() {
            lines.push(format!("{:?}", tally.examples));
        }
    }
    let elapsed = start.elapsed();
    ensure(failures == 0, || format!("{failures} failures: {}", lines.join(" ")))?;
    ensure(elapsed < Duration::from_secs(300), || format!("took {elapsed:?}"))?;
    Ok(format!("{cross} trees cross-checked; {}; {} s", lines.join(" "), elapsed.as_secs()))
}

fn criterion_4() -> Outcome {
    let seq = USequence::new(OrderFunction::floor_half(128), 6).map_err(err)?;
    ensure(seq.u[..5] == [0, 2, 6, 14, 30], || format!("u = {:?}", seq.u))?;
    let shown = format_word(&expand(&[1, 0, 1, 0, 1], &seq.u), 2);
    let expected = format!("11{}{}{}{}", "0".repeat(4), "1".repeat(8), "0".repeat(16), "1".repeat(32));
    ensure(shown == expected, || format!("expansion {shown}"))?;
    Ok(format!("u = {:?}, 10101 expands to {} symbols as displayed", &seq.u[..5], shown.len()))
}

fn count_zero_on(t: &FinTree, f: &BTreeSet<usize>) -> usize {
    t.level(t.horizon()).iter().filter(|w| f.iter().all(|&i| w[i] == 0)).count()
}

/// `count / 2^n ≥ 2^-k`.
fn at_least_pow2(count: usize, n: usize, k: u32) -> bool {
    let k = k as usize;
    if k >= n {
        count >= 1
    } else {
        count >= 1 << (n - k)
    }
}

fn criterion_5() -> Outcome {
    let mut r = gen::rng(55);
    let mut worst = BTreeMap::new();
    for c in 3..=5u32 {
        for _ in 0..200 {
            let t = gen::random_positive_tree(&mut r, 10, c).map_err(err)?;
            let n = t.horizon();
            ensure(at_least_pow2(count_zero_on(&t, &BTreeSet::new()), n, c), || "density certificate fails".into())?;
            let bad = bad_set(&t, c, &BTreeSet::new()).map_err(err)?;
            let recount: BTreeSet<usize> =
                (0..n).filter(|&i| !at_least_pow2(count_zero_on(&t, &[i].into()), n, 2 * c)).collect();
            ensure(bad == recount, || format!("bad set {bad:?} but recount {recount:?}"))?;
            ensure(bad.len() < 2 * c as usize, || format!("c={c}: |Bad|={}", bad.len()))?;
            let w = worst.entry(c).or_insert(0);
            *w = bad.len().max(*w);
        }
        for _ in 0..20 {
            let t = gen::random_positive_tree(&mut r, 12, c).map_err(err)?;
            let res = greedy_homogeneous(&t, c, 3).map_err(err)?;
            ensure(res.complete && res.steps.len() == 3, || format!("c={c}: greedy stopped early"))?;
            let mut h = BTreeSet::new();
            for step in &res.steps {
                h.insert(step.chosen);
                let ok = at_least_pow2(count_zero_on(&t, &h), t.horizon(), c << (step.step + 1));
                ensure(ok, || format!("c={c}: step {} below 2^-(c 2^(s+1))", step.step))?;
            }
        }
    }
    Ok(format!("600 trees, largest |Bad| by c: {worst:?}; 60 greedy runs hold for 3 steps"))
}

fn criterion_6() -> Outcome {
    let mut r = gen::rng(66);
    let horizon = 10;
    let mut sets = 0;
    for _ in 0..50 {
        let preds: Vec<Prediction> = gen::random_predictions(&mut r, 4, horizon);
        let t = avoidance_tree(&preds, horizon).map_err(err)?;
        ensure(2 * t.level(horizon).len() >= 1 << horizon, || format!("density {}", t.level_density(horizon)))?;
        for h in enumerate_homogeneous(&t, horizon, horizon, 20).map_err(err)? {
            ensure(homogeneous_by_definition(&t, &h, horizon), || format!("{h} is not homogeneous"))?;
            for p in &preds {
                let least: BTreeSet<usize> = h.positions.iter().take(p.index + 3).copied().collect();
                ensure(least != p.set && defeats(&h, p), || format!("{h} matches prediction {p:?}"))?;
            }
            sets += 1;
        }
    }
    Ok(format!("50 lists, {sets} homogeneous sets, each defeats every prediction"))
}

/// Replays the priority construction from its log with independent bookkeeping.
fn replay_priority(advs: &[AdversarySchedule], stages: usize, run: &PriorityRun) -> Result<usize, String> {
    let mut g = Graph::new();
    let mut attended = BTreeSet::new();
    let mut log = run.log.iter().peekable();
    let mut requiring_count: BTreeMap<usize, usize> = BTreeMap::new();
    for s in 0..stages {
        let sd = sides(&g).ok_or("odd cycle before a stage")?;
        let comp = |v: usize| sd.get(&v).map_or(v, |&(root, _)| root);
        let least_in = |v: usize| sd.iter().filter(|(_, &(root, _))| root == comp(v)).map(|(&w, _)| w).min().unwrap_or(v);
        let mut requiring = Vec::new();
        for a in advs.iter().filter(|a| !attended.contains(&a.e) && a.e < s) {
            let pair = a.pairs_by(s).into_iter().find(|&(x, y)| {
                a.e < x && x < y && y < s && comp(x) != comp(y) && least_in(x) > a.e && least_in(y) > a.e
            });
            if let Some(p) = pair {
                requiring.push((a.e, p));
            }
        }
        requiring.sort();
        let ids: Vec<usize> = requiring.iter().map(|(e, _)| *e).collect();
        ensure(ids == run.requiring[s], || format!("stage {s}: requiring {ids:?} but logged {:?}", run.requiring[s]))?;
        for e in &ids {
            *requiring_count.entry(*e).or_default() += 1;
        }
        match (requiring.first(), log.peek()) {
            (Some(&(e, (x, y))), Some(at)) if at.stage == s => {
                ensure(at.e == e && (at.x, at.y) == (x, y), || format!("stage {s}: wrong action {at:?}"))?;
                ensure(at.u > s && at.v > s && g.degree(at.u) == 0 && g.degree(at.v) == 0, || "path not fresh".into())?;
                for (a, b) in [(x, at.u), (at.u, at.v), (at.v, y)] {
                    g.add_edge(a, b).map_err(err)?;
                }
                attended.insert(e);
                log.next();
            }
            (None, Some(at)) if at.stage == s => return Err(format!("stage {s}: action without requirement")),
            (Some(_), _) => return Err(format!("stage {s}: requirement without action")),
            _ => {}
        }
        ensure(sides(&g).is_some() == run.bipartite_after[s] && run.bipartite_after[s], || format!("stage {s}: not bipartite"))?;
    }
    ensure(g == run.graph, || "replayed graph differs".into())?;
    let mut eligible = 0;
    for a in advs {
        let smaller = advs.iter().filter(|b| b.e < a.e).count();
        let count = requiring_count.get(&a.e).copied().unwrap_or(0);
        if attended.contains(&a.e) || count > smaller {
            eligible += 1;
            let cert = defeat_certificate(&run.graph, a).ok_or(format!("adversary {} not defeated", a.e))?;
            let p = &cert.path;
            let valid = p.len() % 2 == 0
                && p.first() == Some(&cert.x)
                && p.last() == Some(&cert.y)
                && p.windows(2).all(|w| run.graph.has_edge(w[0], w[1]))
                && a.pairs_by(usize::MAX).contains(&(cert.x, cert.y));
            ensure(valid, || format!("bad certificate {cert:?} for adversary {}", a.e))?;
        }
    }
    Ok(eligible)
}

fn criterion_7() -> Outcome {
    let mut r = gen::rng(77);
    let mut defeated = 0;
    for fam in 0..50 {
        let count = 1 + fam % 4;
        let stages = 20 + fam % 21;
        let advs = gen::random_schedules(&mut r, count, stages);
        let run = priority_build(&advs, stages).map_err(err)?;
        defeated += replay_priority(&advs, stages, &run).map_err(|e| format!("family {fam}: {e}"))?;
    }
    ensure(defeated > 0, || "no adversary was ever eligible".into())?;
    Ok(format!("50 families replayed; {defeated} eligible adversaries defeated with odd-path certificates"))
}

fn enumerated_at(a: &OracleAdversary, sigma: &[u32]) -> BTreeSet<usize> {
    (0..=sigma.len().min(a.prefix_len))
        .rev()
        .find_map(|l| a.table.get(&sigma[..l]))
        .cloned()
        .unwrap_or_default()
}

fn criterion_8() -> Outcome {
    let mut r = gen::rng(88);
    let (mut type_two, mut comparisons) = (0, 0);
    let allowed: BTreeSet<(u64, u64)> = [(9, 10), (4, 5), (2, 5)].into();
    for fam in 0..20 {
        let prefix = 6 + fam % 7;
        let stages = prefix + 2;
        let advs = gen::random_oracle_adversaries(&mut r, 3, prefix);
        let run = measure_build(&advs, stages).map_err(err)?;
        ensure(run == measure_build(&advs, stages).map_err(err)?, || "rerun differs".into())?;
        ensure(run.replays(), || format!("family {fam}: log does not replay"))?;
        for c in &run.log {
            ensure(allowed.contains(&(c.num, c.den)), || format!("unexpected threshold {}/{}", c.num, c.den))?;
            let p = c.measure.log2_denominator();
            let gt = c.measure.numerator() * c.den as u128 > (c.num as u128) << p;
            ensure(gt == c.outcome, || format!("family {fam}: comparison {c:?} replays differently"))?;
            comparisons += 1;
        }
        ensure(run.bipartite_after.iter().all(|&b| b), || format!("family {fam}: odd cycle"))?;
        let sd = sides(&run.graph).ok_or("final graph has an odd cycle")?;
        let len = advs.iter().map(|a| a.prefix_len).max().unwrap_or(0).min(stages);
        for req in &run.requirements {
            let a = advs.iter().find(|a| a.e == req.e).expect("reported adversary");
            let m = rwkl_core::adversarial::exact_measure(len, |s| has_odd_pair(&sd, &enumerated_at(a, s))).map_err(err)?;
            ensure(m == req.defeated, || format!("requirement {}: defeated {} but recount {m}", req.e, req.defeated))?;
            if req.type_two.is_some() {
                type_two += 1;
                ensure(m.gt_ratio(2, 5), || format!("requirement {}: defeated measure {m}", req.e))?;
            }
        }
    }
    ensure(type_two > 0, || "no requirement reached type II".into())?;
    Ok(format!("20 families, {comparisons} comparisons replay, {type_two} type II requirements above 2/5"))
}

/// Bit `h` is set iff every induced subgraph has a proper 2-coloring that is 0 on the part of `h` inside it.
fn induced_definition(n: usize, edges: &[(usize, usize)]) -> u64 {
    let full = (1u32 << n) - 1;
    let mut all = u64::MAX;
    for sub in 0u32..1 << n {
        let mut good = 0u64;
        for col in (0u32..1 << n).filter(|c| c & !sub == 0) {
            let proper = edges
                .iter()
                .all(|&(a, b)| sub >> a & 1 == 0 || sub >> b & 1 == 0 || (col >> a & 1) != (col >> b & 1));
            if proper {
                good |= 1 << (full & !col);
            }
        }
        for i in 0..n {
            for h in 0u32..1 << n {
                if h >> i & 1 == 1 && good >> h & 1 == 1 {
                    good |= 1 << (h ^ (1 << i));
                }
            }
        }
        all &= good;
    }
    all
}

fn criterion_9() -> Outcome {
    let mut checked = 0u64;
    for n in 0..=6usize {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        for mask in 0u32..1 << pairs.len() {
            let edges: Vec<(usize, usize)> =
                pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
            let g = Graph::from_edges(0..n, edges.iter().copied()).map_err(err)?;
            // Zero-color classes of proper 2-colorings; restricting one to any induced subgraph stays proper.
            let zero_sets: Vec<u32> =
                (0u32..1 << n).filter(|&col| edges.iter().all(|&(a, b)| (col >> a & 1) != (col >> b & 1))).map(|col| !col).collect();
            let good = induced_definition(n, &edges);
            for h in 0u32..1 << n {
                let by_def = good >> h & 1 == 1;
                ensure(by_def == zero_sets.iter().any(|z| h & !z == 0), || "local oracles disagree".into())?;
                let hset: BTreeSet<usize> = (0..n).filter(|i| h >> i & 1 == 1).collect();
                let got = is_k_homogeneous(&g, &hset, 2, SearchBudget::default()).map_err(err)?.is_homogeneous();
                ensure(got == by_def, || format!("graph {edges:?}, H {hset:?}: library {got}, definition {by_def}"))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} (graph, H) pairs on up to 6 vertices, 0 disagreements"))
}

fn rwkl(args: &[&str], dir: &Path) -> (i32, Vec<u8>, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_rwkl")).args(args).current_dir(dir).output().expect("rwkl runs");
    (out.status.code().unwrap_or(-1), out.stdout, out.stderr)
}

fn read_all(dir: &Path) -> BTreeMap<PathBuf, Vec<u8>> {
    let mut out = BTreeMap::new();
    for e in std::fs::read_dir(dir).expect("run directory") {
        let p = e.expect("entry").path();
        out.insert(p.file_name().expect("named").into(), std::fs::read(&p).expect("readable"));
    }
    out
}

fn cli_session(dir: &Path) -> Result<Vec<(String, i32, Vec<u8>, Vec<u8>)>, String> {
    let _ = std::fs::remove_dir_all(dir);
    std::fs::create_dir_all(dir).map_err(err)?;
    let script: &[&[&str]] = &[
        &["gen", "tree", "--depth", "4", "--seed", "7", "--out", "tree.json"],
        &["gen", "tree", "--depth", "3", "--seed", "7", "--out", "small.json"],
        &["gen", "tree", "--alphabet", "3", "--depth", "3", "--seed", "2", "--out", "ternary.json"],
        &["gen", "positive-measure-tree", "--c", "3", "--seed", "4", "--out", "pos.json"],
        &["gen", "clauses", "--seed", "5", "--out", "clauses.cnf"],
        &["gen", "graph", "--count", "6", "--seed", "6", "--out", "graph.dot"],
        &["gen", "graph", "--count", "5", "--seed", "6", "--format", "json"],
        &["gen", "tournament", "--seed", "8"],
        &["gen", "adversary", "--events", "5", "--seed", "9"],
        &["gen", "adversary", "--family", "measure", "--seed", "9"],
        &["reduce", "localize", "tree.json", "--positions", "0,2,3", "--out", "loc.json"],
        &["reduce", "kary2bin", "ternary.json", "--out", "kary.json"],
        &["reduce", "pack", "small.json", "--out", "pack.json"],
        &["reduce", "pack", "small.json", "--g", "identity", "--out", "packid.json"],
        &["reduce", "fixcolor", "small.json", "--out", "fix.json"],
        &["reduce", "chaincode", "small.json", "--out", "chain.json"],
        &["reduce", "tourney", "tree.json", "--out", "tour.json"],
        &["reduce", "tree2cnf", "tree.json", "--out", "t.cnf"],
        &["reduce", "cnf2tree", "t.cnf", "--horizon", "4", "--out", "back.json"],
        &["reduce", "sat2graph", "clauses.cnf", "--out", "widgets.dot"],
        &["reduce", "sat2graph", "t.cnf", "--format", "json"],
        &["reduce", "graph2tree", "graph.dot", "--k", "3", "--out", "coltree.json"],
        &["solve", "homogeneous", "tree.json"],
        &["solve", "colorings", "graph.dot", "--k", "2"],
        &["solve", "sat-homogeneous", "t.cnf"],
        &["verify", "widgets", "--depth", "4"],
        &["verify", "reductions", "--input", "small.json", "--seed", "3"],
        &["verify", "reductions", "--instances", "2", "--seed", "3"],
        &["verify", "adversarial", "--instances", "3", "--seed", "1"],
        &["verify", "claims", "--c", "3", "--instances", "20", "--seed", "1"],
    ];
    let mut out = Vec::new();
    for args in script {
        let (code, stdout, stderr) = rwkl(args, dir);
        ensure(code == 0, || format!("`rwkl {}` exited {code}: {}", args.join(" "), String::from_utf8_lossy(&stderr)))?;
        out.push((args.join(" "), code, stdout, stderr));
    }
    std::fs::write(dir.join("broken.json"), "{\"alphabet\": 2, \"horizon\": 1, \"nodes\": [\"1\"]}").map_err(err)?;
    for args in [&["verify", "reductions", "--input", "broken.json"][..], &["solve", "homogeneous", "missing.json"]] {
        let (code, ..) = rwkl(args, dir);
        ensure(code == 2, || format!("`rwkl {}` exited {code}, expected 2", args.join(" ")))?;
    }
    Ok(out)
}

fn criterion_10() -> Outcome {
    let base = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("acceptance-cli");
    let (a, b) = (base.join("first"), base.join("second"));
    let first = cli_session(&a)?;
    let second = cli_session(&b)?;
    ensure(first == second, || {
        let diff = first.iter().zip(&second).find(|(x, y)| x != y).map(|(x, _)| x.0.clone());
        format!("output of `{}` differs between runs", diff.unwrap_or_default())
    })?;
    let (fa, fb) = (read_all(&a), read_all(&b));
    ensure(fa == fb, || {
        let diff = fa.keys().find(|k| fa.get(*k) != fb.get(*k));
        format!("file {diff:?} differs between runs")
    })?;
    let decodes = fa.keys().filter(|k| k.to_string_lossy().ends_with(".decode.json")).count();
    ensure(decodes == 11, || format!("{decodes} decode tables written"))?;
    Ok(format!("{} commands and {} files byte-identical across two runs", first.len(), fa.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("widget lemmas and mutations", criterion_1),
        ("R-widget coloring count", criterion_2),
        ("reduction round trips", criterion_3),
        ("packed u-sequence", criterion_4),
        ("bad-set claim", criterion_5),
        ("avoidance tree", criterion_6),
        ("priority construction", criterion_7),
        ("measure construction", criterion_8),
        ("odd-path characterization", criterion_9),
        ("CLI determinism", criterion_10),
    ];
    let results: Vec<Outcome> = std::thread::scope(|s| {
        let handles: Vec<_> = criteria.iter().map(|(_, f)| s.spawn(f)).collect();
        handles.into_iter().map(|h| h.join().unwrap_or_else(|_| Err("panicked".into()))).collect()
    });
    let mut failed = 0;
    for (i, ((name, _), res)) in criteria.iter().zip(&results).enumerate() {
        match res {
            Ok(detail) => println!("criterion {:>2} PASS {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
