//! Verification campaigns over the identity catalog.
//!
//! A plan expands into independent (id, mode, n, sample) tasks. Tasks are
//! pure and run in parallel; results are merged in the fixed order
//! (id, mode, n, sample index), so a report is fully determined by the plan
//! and the seed. Recorded wall-clock times are the only non-deterministic
//! field and are excluded from textual output.

use std::collections::BTreeMap;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::element::RingElement;
use crate::identities::{
    catalog, lhs_value, lookup, rhs_value, Binding, Constraint, IdentityEntry, Kind,
};
use crate::poly::{MultiPoly, PolyLift, Var};
use crate::ring::Integer;
use crate::tree::Tree;

/// Hard cap on symbolic dimensions a plan may request explicitly.
pub const SYMBOLIC_HARD_CAP: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("unknown identity id: {0}")]
    UnknownId(String),
    #[error("symbolic n = {0} exceeds the resource guard of {SYMBOLIC_HARD_CAP}")]
    ResourceGuard(usize),
    #[error("internal error: {0}")]
    Internal(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Numeric,
    Symbolic,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Numeric => "numeric",
            Mode::Symbolic => "symbolic",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Verified,
    Refuted,
    OutOfRange,
    Skipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Verified => "verified",
            Status::Refuted => "refuted",
            Status::OutOfRange => "out_of_range",
            Status::Skipped => "skipped",
        }
    }
}

/// One evaluated (id, mode, n, sample) cell.
#[derive(Debug, Clone, Serialize)]
pub struct Record {
    pub id: String,
    pub mode: Mode,
    pub n: usize,
    #[serde(skip)]
    pub sample: usize,
    pub params: BTreeMap<String, String>,
    pub lhs: String,
    pub rhs: String,
    pub status: Status,
    pub elapsed_us: u64,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Summary {
    pub verified: usize,
    pub refuted: usize,
    pub out_of_range: usize,
    pub skipped: usize,
    pub records: usize,
    pub entries_requested: usize,
    pub entries_evaluated: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub records: Vec<Record>,
    pub summary: Summary,
}

impl VerifyReport {
    fn from_records(records: Vec<Record>, entries_requested: usize) -> Self {
        let mut summary = Summary {
            records: records.len(),
            entries_requested,
            ..Summary::default()
        };
        let mut seen: Vec<&str> = Vec::new();
        for r in &records {
            match r.status {
                Status::Verified => summary.verified += 1,
                Status::Refuted => summary.refuted += 1,
                Status::OutOfRange => summary.out_of_range += 1,
                Status::Skipped => summary.skipped += 1,
            }
            if matches!(r.status, Status::Verified | Status::Refuted)
                && !seen.contains(&r.id.as_str())
            {
                seen.push(&r.id);
            }
        }
        summary.entries_evaluated = seen.len();
        VerifyReport { records, summary }
    }

    pub fn any_refuted(&self) -> bool {
        self.summary.refuted > 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Human-readable table: one line per (id, mode) with per-status counts,
    /// a witness block for every refutation, and a trailing summary line.
    /// Timing is deliberately omitted so output is reproducible.
    pub fn render_text(&self) -> String {
        let mut rows: Vec<(String, Mode, [usize; 4])> = Vec::new();
        for r in &self.records {
            let slot = match rows
                .iter_mut()
                .find(|(id, mode, _)| *id == r.id && *mode == r.mode)
            {
                Some(s) => s,
                None => {
                    rows.push((r.id.clone(), r.mode, [0; 4]));
                    rows.last_mut().unwrap()
                }
            };
            let bucket = match r.status {
                Status::Verified => 0,
                Status::Refuted => 1,
                Status::OutOfRange => 2,
                Status::Skipped => 3,
            };
            slot.2[bucket] += 1;
        }
        let mut out = String::new();
        out.push_str(&format!(
            "{:<24} {:<9} {:>9} {:>8} {:>13} {:>8}\n",
            "id", "mode", "verified", "refuted", "out_of_range", "skipped"
        ));
        for (id, mode, counts) in &rows {
            out.push_str(&format!(
                "{:<24} {:<9} {:>9} {:>8} {:>13} {:>8}\n",
                id,
                mode.as_str(),
                counts[0],
                counts[1],
                counts[2],
                counts[3]
            ));
        }
        for r in &self.records {
            if r.status == Status::Refuted {
                out.push_str(&format!(
                    "refuted: {} {} n={} sample={}\n",
                    r.id,
                    r.mode.as_str(),
                    r.n,
                    r.sample
                ));
                for (k, v) in &r.params {
                    out.push_str(&format!("  {k} = {v}\n"));
                }
                out.push_str(&format!("  lhs = {}\n  rhs = {}\n", r.lhs, r.rhs));
            }
        }
        let s = &self.summary;
        out.push_str(&format!(
            "summary: verified={} refuted={} out_of_range={} skipped={} records={} entries={}/{}\n",
            s.verified,
            s.refuted,
            s.out_of_range,
            s.skipped,
            s.records,
            s.entries_evaluated,
            s.entries_requested
        ));
        out
    }
}

/// Requested identities: everything or an explicit id list.
#[derive(Debug, Clone)]
pub enum IdSelection {
    All,
    Ids(Vec<String>),
}

#[derive(Debug, Clone)]
pub struct VerifyPlan {
    pub ids: IdSelection,
    pub modes: Vec<Mode>,
    /// Explicit n values; `None` uses each entry's stated range intersected
    /// with `[1, max_n]` (numeric) or `[1, symbolic cap]` (symbolic).
    pub ns: Option<Vec<usize>>,
    pub samples: usize,
    /// Random trees evaluated per n for tree-based identities.
    pub tree_samples: usize,
    pub max_n: usize,
    /// Inclusive range numeric parameters are drawn from.
    pub param_range: (i64, i64),
    pub seed: u64,
    pub jobs: Option<usize>,
}

impl Default for VerifyPlan {
    fn default() -> Self {
        VerifyPlan {
            ids: IdSelection::All,
            modes: vec![Mode::Numeric, Mode::Symbolic],
            ns: None,
            samples: 10,
            tree_samples: 10,
            max_n: 20,
            param_range: (-9, 9),
            seed: 0,
            jobs: None,
        }
    }
}

struct Task {
    entry: &'static IdentityEntry,
    mode: Mode,
    n: usize,
    sample: usize,
    /// Pre-classified status for cells that are not evaluated.
    fixed: Option<Status>,
}

/// Stable 64-bit mix of the plan seed and task coordinates, so parameter
/// sampling is reproducible across platforms and runs.
fn mix_seed(seed: u64, id: &str, mode: &str, n: usize, sample: usize) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325;
    let mut eat = |bytes: &[u8]| {
        for &b in bytes {
            h ^= b as u64;
            h = h.wrapping_mul(0x100000001b3);
        }
    };
    eat(&seed.to_le_bytes());
    eat(id.as_bytes());
    eat(mode.as_bytes());
    eat(&(n as u64).to_le_bytes());
    eat(&(sample as u64).to_le_bytes());
    h
}

fn has_eps(entry: &IdentityEntry) -> bool {
    entry
        .params
        .iter()
        .any(|p| p.constraint == Constraint::PlusMinusOne)
}

fn resolve_ids(selection: &IdSelection) -> Result<Vec<&'static IdentityEntry>, VerifyError> {
    let mut entries = match selection {
        IdSelection::All => catalog().iter().collect::<Vec<_>>(),
        IdSelection::Ids(ids) => {
            let mut out = Vec::with_capacity(ids.len());
            for id in ids {
                out.push(lookup(id).ok_or_else(|| VerifyError::UnknownId(id.clone()))?);
            }
            out
        }
    };
    entries.sort_by_key(|e| e.id);
    entries.dedup_by_key(|e| e.id);
    Ok(entries)
}

fn expand_tasks(
    entries: &[&'static IdentityEntry],
    plan: &VerifyPlan,
) -> Result<Vec<Task>, VerifyError> {
    let mut tasks = Vec::new();
    for &entry in entries {
        for &mode in &plan.modes {
            let ns: Vec<usize> = match &plan.ns {
                Some(explicit) => {
                    if mode == Mode::Symbolic {
                        if let Some(&big) = explicit.iter().find(|&&n| n > SYMBOLIC_HARD_CAP) {
                            return Err(VerifyError::ResourceGuard(big));
                        }
                    }
                    explicit.clone()
                }
                None => {
                    let hi = match mode {
                        Mode::Numeric => plan.max_n,
                        Mode::Symbolic => entry.symbolic_cap.min(plan.max_n),
                    };
                    let lo = 1;
                    (lo..=hi.max(lo)).collect()
                }
            };
            for n in ns {
                // classification mirrors the entry's stated hypothesis:
                // below/above the range is out_of_range, a parity miss is
                // silently filtered as skipped
                let fixed = if !entry.n_range.parity_ok(n)
                    && n >= entry.n_range.min
                    && entry.n_range.max.is_none_or(|m| n <= m)
                {
                    Some(Status::Skipped)
                } else if !entry.n_range.contains(n) {
                    Some(Status::OutOfRange)
                } else if mode == Mode::Symbolic && n > entry.symbolic_cap {
                    Some(Status::Skipped)
                } else if mode == Mode::Symbolic
                    && matches!(entry.kind, Kind::Conjecture | Kind::Remark)
                    && !entry
                        .params
                        .iter()
                        .any(|p| p.constraint != Constraint::PlusMinusOne)
                {
                    // an integer-only conjecture has no symbolic content
                    Some(Status::Skipped)
                } else {
                    None
                };
                if fixed.is_some() {
                    tasks.push(Task {
                        entry,
                        mode,
                        n,
                        sample: 0,
                        fixed,
                    });
                    continue;
                }
                let sampled = entry
                    .params
                    .iter()
                    .any(|p| p.constraint != Constraint::PlusMinusOne);
                let base = if entry.tree_based {
                    plan.tree_samples
                } else {
                    match mode {
                        // an entry with no sampled parameters is exhausted
                        // by a single evaluation per n
                        Mode::Numeric if sampled => plan.samples,
                        _ => 1,
                    }
                };
                let count = if has_eps(entry) { base * 2 } else { base };
                for sample in 0..count.max(1) {
                    tasks.push(Task {
                        entry,
                        mode,
                        n,
                        sample,
                        fixed: None,
                    });
                }
            }
        }
    }
    Ok(tasks)
}

fn numeric_binding(
    entry: &IdentityEntry,
    plan: &VerifyPlan,
    n: usize,
    sample: usize,
) -> (Binding<Integer>, BTreeMap<String, String>) {
    let plan_seed = plan.seed;
    let (lo, hi) = plan.param_range;
    let draw = if has_eps(entry) { sample / 2 } else { sample };
    let mut rng = ChaCha8Rng::seed_from_u64(mix_seed(plan_seed, entry.id, "numeric", n, draw));
    let mut binding = Binding::new();
    let mut params = BTreeMap::new();
    for p in entry.params {
        match p.constraint {
            Constraint::PlusMinusOne => {
                let eps = if sample % 2 == 0 { 1 } else { -1 };
                binding.eps = Some(eps);
                params.insert("eps".to_string(), eps.to_string());
            }
            Constraint::Any | Constraint::Nonzero => {
                let mut v: i64 = rng.gen_range(lo..=hi);
                while p.constraint == Constraint::Nonzero && v == 0 {
                    v = rng.gen_range(lo..=hi);
                }
                binding.set(p.name, Integer::from(v));
                params.insert(p.name.to_string(), v.to_string());
            }
        }
    }
    if entry.tree_based {
        let tree = Tree::random(n, mix_seed(plan_seed, entry.id, "tree", n, draw));
        params.insert("tree".to_string(), tree.render_edges());
        binding.tree = Some(tree);
    }
    (binding, params)
}

fn symbolic_binding(
    entry: &IdentityEntry,
    plan_seed: u64,
    n: usize,
    sample: usize,
) -> (Binding<MultiPoly>, BTreeMap<String, String>) {
    let mut binding = Binding::symbolic(entry);
    let mut params = BTreeMap::new();
    for p in entry.params {
        if p.constraint == Constraint::PlusMinusOne {
            let eps = if sample % 2 == 0 { 1 } else { -1 };
            binding.eps = Some(eps);
            params.insert("eps".to_string(), eps.to_string());
        } else {
            params.insert(p.name.to_string(), p.name.to_string());
        }
    }
    if entry.tree_based {
        let draw = if has_eps(entry) { sample / 2 } else { sample };
        let tree = Tree::random(n, mix_seed(plan_seed, entry.id, "tree", n, draw));
        params.insert("tree".to_string(), tree.render_edges());
        binding.tree = Some(tree);
    }
    (binding, params)
}

fn compare<R: PolyLift>(
    entry: &IdentityEntry,
    binding: &Binding<R>,
    n: usize,
    oracle: bool,
) -> Result<(Status, String, String), VerifyError> {
    let lhs = lhs_value(entry, binding, n, oracle)
        .map_err(|e| VerifyError::Internal(format!("{}: {e}", entry.id)))?;
    let rhs = rhs_value(entry, binding, n)
        .map_err(|e| VerifyError::Internal(format!("{}: {e}", entry.id)))?;
    let status = if lhs == rhs {
        Status::Verified
    } else {
        Status::Refuted
    };
    Ok((status, lhs.to_string(), rhs.to_string()))
}

fn run_task(task: &Task, plan: &VerifyPlan) -> Result<Record, VerifyError> {
    let start = Instant::now();
    if let Some(status) = task.fixed {
        return Ok(Record {
            id: task.entry.id.to_string(),
            mode: task.mode,
            n: task.n,
            sample: task.sample,
            params: BTreeMap::new(),
            lhs: String::new(),
            rhs: String::new(),
            status,
            elapsed_us: start.elapsed().as_micros() as u64,
        });
    }
    let (status, lhs, rhs, params) = match task.mode {
        Mode::Numeric => {
            let (binding, params) = numeric_binding(task.entry, plan, task.n, task.sample);
            let (status, lhs, rhs) = compare(task.entry, &binding, task.n, true)?;
            (status, lhs, rhs, params)
        }
        Mode::Symbolic => {
            let (binding, params) = symbolic_binding(task.entry, plan.seed, task.n, task.sample);
            let (status, lhs, rhs) = compare(task.entry, &binding, task.n, false)?;
            (status, lhs, rhs, params)
        }
    };
    Ok(Record {
        id: task.entry.id.to_string(),
        mode: task.mode,
        n: task.n,
        sample: task.sample,
        params,
        lhs,
        rhs,
        status,
        elapsed_us: start.elapsed().as_micros() as u64,
    })
}

fn run_tasks(tasks: &[Task], plan: &VerifyPlan) -> Result<Vec<Record>, VerifyError> {
    let work = || {
        tasks
            .par_iter()
            .map(|t| run_task(t, plan))
            .collect::<Result<Vec<_>, _>>()
    };
    match plan.jobs {
        Some(jobs) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs)
                .build()
                .map_err(|e| VerifyError::Internal(e.to_string()))?;
            pool.install(work)
        }
        None => work(),
    }
}

/// Run a verification plan over the catalog.
pub fn run(plan: &VerifyPlan) -> Result<VerifyReport, VerifyError> {
    let entries = resolve_ids(&plan.ids)?;
    let tasks = expand_tasks(&entries, plan)?;
    let records = run_tasks(&tasks, plan)?;
    Ok(VerifyReport::from_records(records, entries.len()))
}

/// Verify the three tree identities on seeded random trees of each size up
/// to `max_n` (plus the path and the star), and the fixed K_{1,3} star
/// counterexample.
///
/// When `q` is `None` the bracket and power identities run with symbolic q
/// up to n = 6 and with q in {2, 3, 5} beyond; an explicit `q` is used for
/// all sizes instead.
pub fn check_trees(
    count: usize,
    max_n: usize,
    seed: u64,
    q: Option<RingElement>,
) -> Result<VerifyReport, VerifyError> {
    let gp = lookup("graham_pollak").expect("catalog id");
    let bracket = lookup("q_tree_bracket").expect("catalog id");
    let power = lookup("q_tree_power").expect("catalog id");
    let mut records = Vec::new();

    let mut record_tree = |entry: &'static IdentityEntry,
                           tree: &Tree,
                           sample: usize,
                           q_value: &TreeQ|
     -> Result<(), VerifyError> {
        let n = tree.vertex_count();
        let start = Instant::now();
        let mut params = BTreeMap::new();
        params.insert("tree".to_string(), tree.render_edges());
        if !entry.n_range.contains(n) {
            records.push(Record {
                id: entry.id.to_string(),
                mode: q_value.mode(),
                n,
                sample,
                params,
                lhs: String::new(),
                rhs: String::new(),
                status: Status::OutOfRange,
                elapsed_us: start.elapsed().as_micros() as u64,
            });
            return Ok(());
        }
        let (status, lhs, rhs) = match q_value {
            TreeQ::None => {
                let mut binding: Binding<Integer> = Binding::new();
                binding.tree = Some(tree.clone());
                compare(entry, &binding, n, true)?
            }
            TreeQ::Int(v) => {
                params.insert("q".to_string(), v.to_string());
                let mut binding: Binding<Integer> = Binding::new();
                binding.q = Some(v.clone());
                binding.tree = Some(tree.clone());
                compare(entry, &binding, n, true)?
            }
            TreeQ::Sym(p) => {
                params.insert("q".to_string(), p.to_string());
                let mut binding: Binding<MultiPoly> = Binding::new();
                binding.q = Some(p.clone());
                binding.tree = Some(tree.clone());
                compare(entry, &binding, n, false)?
            }
        };
        records.push(Record {
            id: entry.id.to_string(),
            mode: q_value.mode(),
            n,
            sample,
            params,
            lhs,
            rhs,
            status,
            elapsed_us: start.elapsed().as_micros() as u64,
        });
        Ok(())
    };

    enum TreeQ {
        None,
        Int(Integer),
        Sym(MultiPoly),
    }

    impl TreeQ {
        fn mode(&self) -> Mode {
            match self {
                TreeQ::Sym(_) => Mode::Symbolic,
                _ => Mode::Numeric,
            }
        }
    }

    let q_choices = |n: usize| -> Vec<TreeQ> {
        match &q {
            Some(RingElement::Int(v)) => vec![TreeQ::Int(v.clone())],
            Some(RingElement::Poly(p)) => vec![TreeQ::Sym(p.clone())],
            Some(RingElement::Rat(_)) => vec![TreeQ::Sym(MultiPoly::var(Var::Q))],
            None if n <= 6 => vec![TreeQ::Sym(MultiPoly::var(Var::Q))],
            None => [2i64, 3, 5]
                .iter()
                .map(|&v| TreeQ::Int(Integer::from(v)))
                .collect(),
        }
    };

    for n in 1..=max_n.max(1) {
        let mut trees: Vec<Tree> = (0..count)
            .map(|i| Tree::random(n, mix_seed(seed, "tree_suite", "tree", n, i)))
            .collect();
        trees.push(Tree::path(n));
        trees.push(Tree::star(n));
        for (sample, tree) in trees.iter().enumerate() {
            record_tree(gp, tree, sample, &TreeQ::None)?;
            for qv in q_choices(n) {
                record_tree(bracket, tree, sample, &qv)?;
                record_tree(power, tree, sample, &qv)?;
            }
        }
    }

    // the fixed star counterexample, symbolically in A and B
    let star = lookup("star_counterexample").expect("catalog id");
    let start = Instant::now();
    let binding = Binding::<MultiPoly>::symbolic(star);
    let (status, lhs, rhs) = compare(star, &binding, 4, false)?;
    let mut params = BTreeMap::new();
    params.insert("A".to_string(), "A".to_string());
    params.insert("B".to_string(), "B".to_string());
    params.insert("tree".to_string(), Tree::star_k13().render_edges());
    records.push(Record {
        id: star.id.to_string(),
        mode: Mode::Symbolic,
        n: 4,
        sample: 0,
        params,
        lhs,
        rhs,
        status,
        elapsed_us: start.elapsed().as_micros() as u64,
    });

    Ok(VerifyReport::from_records(records, 4))
}

/// Sweep the conjectures and the two remark baselines up to `max_n`.
///
/// Parameterless entries are checked once per n; the two parameterized
/// conjectures run symbolically up to n = 6 and integer-sampled beyond.
pub fn conjecture_sweep(
    max_n: usize,
    seed: u64,
    jobs: Option<usize>,
) -> Result<VerifyReport, VerifyError> {
    let ids = [
        "conj_4_1",
        "conj_4_2a",
        "conj_4_2a_alt",
        "conj_4_2b",
        "conj_4_2c",
        "conj_4_3",
        "conj_4_4",
        "remark_ws_pow",
        "remark_ws_fib",
    ];
    let mut records = Vec::new();
    for id in ids {
        let entry = lookup(id).expect("catalog id");
        let parameterized = !entry.params.is_empty();
        let plan = VerifyPlan {
            ids: IdSelection::Ids(vec![id.to_string()]),
            modes: if parameterized {
                vec![Mode::Numeric, Mode::Symbolic]
            } else {
                vec![Mode::Numeric]
            },
            ns: None,
            samples: if parameterized { 10 } else { 1 },
            tree_samples: 1,
            max_n,
            param_range: (-9, 9),
            seed,
            jobs,
        };
        let mut report = run(&plan)?;
        // for parameterized conjectures the symbolic pass covers n <= 6, so
        // drop the redundant numeric samples there
        if parameterized {
            report
                .records
                .retain(|r| !(r.mode == Mode::Numeric && r.n <= entry.symbolic_cap));
        }
        records.extend(report.records);
    }
    records.sort_by(|a, b| (&a.id, a.mode, a.n, a.sample).cmp(&(&b.id, b.mode, b.n, b.sample)));
    Ok(VerifyReport::from_records(records, ids.len()))
}
