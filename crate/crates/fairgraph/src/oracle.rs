//! Exhaustive-search ground truth for small instances.
//!
//! Every operation here enumerates an explicit finite state space — either
//! all complete allocations (`n^m` states) or all orientations (`2^m`
//! states) — and refuses to start when the space exceeds the configured
//! budget. Results are deterministic: a reported witness is always the
//! lexicographically smallest owner vector that attains the result (items in
//! index order, owners in agent-index order), and the worker count never
//! changes any answer, only the wall-clock time.

use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::instance::{Allocation, GraphicalInstance};

/// Default cap on the number of states an oracle call may enumerate.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Which space an oracle query ranges over. The instance itself is passed
/// alongside; orientations restrict each item to its two endpoints.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchSpace {
    Allocations,
    Orientations,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fairness {
    EnvyFree,
    Efx,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WelfareKind {
    Utilitarian,
    Egalitarian,
    Nash,
}

/// Fairness filter applied before a welfare optimum is taken.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Constraint {
    Unconstrained,
    EnvyFree,
    Efx,
}

#[derive(Debug, Clone)]
pub struct OracleConfig {
    /// Maximum number of states a single query may visit.
    pub budget: u64,
    /// Worker threads for the scan. Results are identical for any value.
    pub workers: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            budget: DEFAULT_BUDGET,
            workers: 1,
        }
    }
}

/// An exact welfare optimum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WelfareValue {
    /// Utilitarian or egalitarian value.
    Scalar(u64),
    /// Nash outcome: how many agents end up with positive utility, and the
    /// exact product over all agents (zero whenever any agent has zero).
    Nash {
        positive_support: usize,
        product: BigUint,
    },
}

impl WelfareValue {
    pub fn scalar(&self) -> Option<u64> {
        match self {
            WelfareValue::Scalar(v) => Some(*v),
            WelfareValue::Nash { .. } => None,
        }
    }

    pub fn nash_product(&self) -> Option<&BigUint> {
        match self {
            WelfareValue::Scalar(_) => None,
            WelfareValue::Nash { product, .. } => Some(product),
        }
    }
}

/// Price of fairness as an exact integer ratio.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PofRatio {
    /// Unconstrained optimum welfare.
    pub numerator: BigUint,
    /// Best welfare over the fairness-constrained space.
    pub denominator: BigUint,
    /// Set when the constrained optimum is zero but the unconstrained one
    /// is positive: fairness costs everything.
    pub infinite: bool,
}

impl PofRatio {
    pub fn new(numerator: BigUint, denominator: BigUint) -> Self {
        let zero = BigUint::from(0u32);
        let infinite = denominator == zero && numerator > zero;
        PofRatio {
            numerator,
            denominator,
            infinite,
        }
    }
}

impl fmt::Display for PofRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.infinite {
            write!(f, "inf")
        } else {
            write!(f, "{}/{}", self.numerator, self.denominator)
        }
    }
}

// ---------------------------------------------------------------------------
// State spaces
// ---------------------------------------------------------------------------

/// Explicit per-item owner candidates, each list in ascending agent order.
struct StateSpace {
    candidates: Vec<Vec<usize>>,
}

impl StateSpace {
    fn allocations(inst: &GraphicalInstance) -> Self {
        let everyone: Vec<usize> = (0..inst.n_agents()).collect();
        StateSpace {
            candidates: vec![everyone; inst.n_items()],
        }
    }

    fn orientations(inst: &GraphicalInstance) -> Self {
        let candidates = inst
            .edges()
            .iter()
            .map(|e| vec![e.a.min(e.b), e.a.max(e.b)])
            .collect();
        StateSpace { candidates }
    }

    /// Owner candidates that keep every item at a maximum-value endpoint:
    /// exactly the allocations whose utilitarian welfare is the upper bound
    /// `max_total_value`. Worthless items may go anywhere.
    fn max_value_placements(inst: &GraphicalInstance) -> Self {
        let candidates = inst
            .edges()
            .iter()
            .map(|e| {
                let top = e.max_value();
                if top == 0 {
                    (0..inst.n_agents()).collect()
                } else {
                    let mut owners: Vec<usize> = [e.a, e.b]
                        .into_iter()
                        .filter(|&x| e.value_for(x) == top)
                        .collect();
                    owners.sort_unstable();
                    owners
                }
            })
            .collect();
        StateSpace { candidates }
    }

    /// Number of states, saturating at `u128::MAX`.
    fn count(&self) -> u128 {
        self.candidates.iter().fold(1u128, |acc, c| {
            acc.saturating_mul(c.len() as u128)
        })
    }

    fn check_budget(&self, budget: u64) -> Result<u64> {
        let states = self.count();
        if states > budget as u128 {
            return Err(Error::BudgetExceeded { states, budget });
        }
        Ok(states as u64)
    }

    fn decode(&self, mut index: u64, digits: &mut [usize]) {
        for i in (0..self.candidates.len()).rev() {
            let len = self.candidates[i].len() as u64;
            digits[i] = (index % len) as usize;
            index /= len;
        }
    }

    /// Odometer step; returns the first changed position, or `None` when the
    /// space is exhausted.
    fn advance(&self, digits: &mut [usize]) -> Option<usize> {
        for i in (0..self.candidates.len()).rev() {
            digits[i] += 1;
            if digits[i] < self.candidates[i].len() {
                return Some(i);
            }
            digits[i] = 0;
        }
        None
    }

    fn materialize(&self, digits: &[usize], owners: &mut [usize], from: usize) {
        for i in from..digits.len() {
            owners[i] = self.candidates[i][digits[i]];
        }
    }
}

/// Public count of the plain spaces, mostly for reporting.
pub fn state_count(inst: &GraphicalInstance, space: SearchSpace) -> u128 {
    match space {
        SearchSpace::Allocations => StateSpace::allocations(inst).count(),
        SearchSpace::Orientations => StateSpace::orientations(inst).count(),
    }
}

// ---------------------------------------------------------------------------
// Per-state evaluation scratch
// ---------------------------------------------------------------------------

/// Above this many agents the pairwise envy accumulators switch from dense
/// `n x n` arrays to a hash map. Oracle-sized instances stay dense.
const DENSE_AGENT_LIMIT: usize = 128;

/// Reusable buffers for evaluating one owner vector. Versioned arrays avoid
/// clearing between states.
struct Scratch {
    n: usize,
    epoch: u64,
    util: Vec<u64>,
    bundle_len: Vec<u32>,
    agent_ver: Vec<u64>,
    touched_agents: Vec<usize>,
    utilitarian: u64,
    pairs: PairAcc,
}

/// Accumulators for the ordered pairs (valuer, owner) that an item under
/// evaluation can make envious: sum of the valuer's values over the owner's
/// bundle, the least such value, and how many bundle items are incident to
/// the valuer.
enum PairAcc {
    Dense {
        sum: Vec<u64>,
        min: Vec<u64>,
        incident: Vec<u32>,
        ver: Vec<u64>,
        touched: Vec<usize>,
    },
    Sparse {
        map: std::collections::HashMap<(usize, usize), (u64, u64, u32)>,
    },
}

impl Scratch {
    fn new(n: usize) -> Self {
        let pairs = if n <= DENSE_AGENT_LIMIT {
            PairAcc::Dense {
                sum: vec![0; n * n],
                min: vec![0; n * n],
                incident: vec![0; n * n],
                ver: vec![0; n * n],
                touched: Vec::new(),
            }
        } else {
            PairAcc::Sparse {
                map: std::collections::HashMap::new(),
            }
        };
        Scratch {
            n,
            epoch: 0,
            util: vec![0; n],
            bundle_len: vec![0; n],
            agent_ver: vec![0; n],
            touched_agents: Vec::new(),
            utilitarian: 0,
            pairs,
        }
    }

    /// Load own-bundle utilities and bundle sizes for one owner vector.
    fn load(&mut self, inst: &GraphicalInstance, owners: &[usize]) {
        self.epoch += 1;
        self.touched_agents.clear();
        self.utilitarian = 0;
        for (item, &owner) in owners.iter().enumerate() {
            if self.agent_ver[owner] != self.epoch {
                self.agent_ver[owner] = self.epoch;
                self.util[owner] = 0;
                self.bundle_len[owner] = 0;
                self.touched_agents.push(owner);
            }
            let value = inst.value_of(owner, item);
            self.util[owner] += value;
            self.bundle_len[owner] += 1;
            self.utilitarian += value;
        }
    }

    /// Envy check over the loaded state. With `efx` false this is plain
    /// envy-freeness; with `efx` true it is the strong single-item-removal
    /// form, counting zero-valued items in envied bundles.
    fn envy_ok(&mut self, inst: &GraphicalInstance, owners: &[usize], efx: bool) -> bool {
        let epoch = self.epoch;
        let n = self.n;
        match &mut self.pairs {
            PairAcc::Dense {
                sum,
                min,
                incident,
                ver,
                touched,
            } => {
                touched.clear();
                for (item, &owner) in owners.iter().enumerate() {
                    let e = inst.edge(item);
                    for valuer in [e.a, e.b] {
                        if valuer == owner {
                            continue;
                        }
                        let key = valuer * n + owner;
                        if ver[key] != epoch {
                            ver[key] = epoch;
                            sum[key] = 0;
                            min[key] = u64::MAX;
                            incident[key] = 0;
                            touched.push(key);
                        }
                        let value = e.value_for(valuer);
                        sum[key] += value;
                        min[key] = min[key].min(value);
                        incident[key] += 1;
                    }
                }
                for &key in touched.iter() {
                    let valuer = key / n;
                    let owner = key % n;
                    let own = if self.agent_ver[valuer] == epoch {
                        self.util[valuer]
                    } else {
                        0
                    };
                    if sum[key] <= own {
                        continue;
                    }
                    if !efx {
                        return false;
                    }
                    // Least value the valuer loses when one item leaves the
                    // envied bundle: zero if the bundle holds anything not
                    // incident to the valuer.
                    let removal = if self.bundle_len[owner] > incident[key] {
                        0
                    } else {
                        min[key]
                    };
                    if sum[key] - removal > own {
                        return false;
                    }
                }
                true
            }
            PairAcc::Sparse { map } => {
                map.clear();
                for (item, &owner) in owners.iter().enumerate() {
                    let e = inst.edge(item);
                    for valuer in [e.a, e.b] {
                        if valuer == owner {
                            continue;
                        }
                        let value = e.value_for(valuer);
                        let entry = map.entry((valuer, owner)).or_insert((0, u64::MAX, 0));
                        entry.0 += value;
                        entry.1 = entry.1.min(value);
                        entry.2 += 1;
                    }
                }
                for (&(valuer, owner), &(pair_sum, pair_min, pair_incident)) in map.iter() {
                    let own = if self.agent_ver[valuer] == epoch {
                        self.util[valuer]
                    } else {
                        0
                    };
                    if pair_sum <= own {
                        continue;
                    }
                    if !efx {
                        return false;
                    }
                    let removal = if self.bundle_len[owner] > pair_incident {
                        0
                    } else {
                        pair_min
                    };
                    if pair_sum - removal > own {
                        return false;
                    }
                }
                true
            }
        }
    }

    fn egalitarian(&self) -> u64 {
        if self.touched_agents.len() < self.n {
            return 0;
        }
        self.touched_agents
            .iter()
            .map(|&a| self.util[a])
            .min()
            .unwrap_or(0)
    }

    fn nash(&self) -> NashScore {
        let positive = self
            .touched_agents
            .iter()
            .filter(|&&a| self.util[a] > 0)
            .count();
        if positive < self.n {
            return (positive, Product::Small(0));
        }
        let mut product = Product::Small(1);
        for &a in &self.touched_agents {
            product = product.mul(self.util[a]);
        }
        (positive, product)
    }
}

/// Exact product that stays in `u128` until it no longer fits. The `Big`
/// variant is only ever created by overflow, so every `Big` exceeds every
/// `Small` and the derived variant ordering is the numeric one.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
enum Product {
    Small(u128),
    Big(BigUint),
}

impl Product {
    fn mul(self, factor: u64) -> Product {
        match self {
            Product::Small(value) => match value.checked_mul(factor as u128) {
                Some(next) => Product::Small(next),
                None => Product::Big(BigUint::from(value) * BigUint::from(factor)),
            },
            Product::Big(value) => Product::Big(value * BigUint::from(factor)),
        }
    }

    fn into_biguint(self) -> BigUint {
        match self {
            Product::Small(value) => BigUint::from(value),
            Product::Big(value) => value,
        }
    }
}

type NashScore = (usize, Product);

// ---------------------------------------------------------------------------
// Scan drivers
// ---------------------------------------------------------------------------

/// Sequential fallback threshold: tiny spaces are not worth threads.
const PARALLEL_THRESHOLD: u64 = 1 << 14;

fn worker_ranges(total: u64, workers: usize) -> Vec<(u64, u64)> {
    let workers = workers.max(1).min(total.max(1) as usize);
    let chunk = total / workers as u64;
    let remainder = total % workers as u64;
    let mut ranges = Vec::with_capacity(workers);
    let mut start = 0;
    for w in 0..workers as u64 {
        let len = chunk + if w < remainder { 1 } else { 0 };
        ranges.push((start, start + len));
        start += len;
    }
    ranges
}

/// Lexicographically first state satisfying `pred`, with its global index.
fn find_first<F>(
    inst: &GraphicalInstance,
    space: &StateSpace,
    cfg: &OracleConfig,
    pred: F,
) -> Result<Option<Vec<usize>>>
where
    F: Fn(&GraphicalInstance, &[usize], &mut Scratch) -> bool + Sync,
{
    let total = space.check_budget(cfg.budget)?;
    let m = space.candidates.len();
    if m == 0 {
        let mut scratch = Scratch::new(inst.n_agents());
        return Ok(pred(inst, &[], &mut scratch).then(Vec::new));
    }

    let scan_range = |start: u64, end: u64, abort: &dyn Fn() -> bool| -> Option<(u64, Vec<usize>)> {
        let mut scratch = Scratch::new(inst.n_agents());
        let mut digits = vec![0usize; m];
        let mut owners = vec![0usize; m];
        space.decode(start, &mut digits);
        space.materialize(&digits, &mut owners, 0);
        for index in start..end {
            if index % 8192 == 0 && abort() {
                return None;
            }
            if pred(inst, &owners, &mut scratch) {
                return Some((index, owners));
            }
            if index + 1 < end {
                let changed = space.advance(&mut digits).expect("within range");
                space.materialize(&digits, &mut owners, changed);
            }
        }
        None
    };

    if cfg.workers <= 1 || total < PARALLEL_THRESHOLD {
        return Ok(scan_range(0, total, &|| false).map(|(_, owners)| owners));
    }

    let ranges = worker_ranges(total, cfg.workers);
    let found_chunk = AtomicUsize::new(usize::MAX);
    let results = std::thread::scope(|scope| {
        let handles: Vec<_> = ranges
            .iter()
            .enumerate()
            .map(|(chunk_index, &(start, end))| {
                let found_chunk = &found_chunk;
                let scan_range = &scan_range;
                scope.spawn(move || {
                    let hit = scan_range(start, end, &|| {
                        // A witness in an earlier chunk beats anything here.
                        found_chunk.load(Ordering::Relaxed) < chunk_index
                    });
                    if hit.is_some() {
                        found_chunk.fetch_min(chunk_index, Ordering::Relaxed);
                    }
                    hit
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("oracle worker panicked"))
            .collect::<Vec<_>>()
    });

    // The earliest chunk that found anything holds the lexicographically
    // smallest witness: chunks partition the index space in order.
    Ok(results
        .into_iter()
        .flatten()
        .min_by_key(|&(index, _)| index)
        .map(|(_, owners)| owners))
}

/// Maximum of `eval` over the space; ties go to the lexicographically first
/// state. `None` from `eval` excludes a state (constraint filtering).
fn optimize<V, F>(
    inst: &GraphicalInstance,
    space: &StateSpace,
    cfg: &OracleConfig,
    eval: F,
) -> Result<Option<(V, Vec<usize>)>>
where
    V: Ord + Send,
    F: Fn(&GraphicalInstance, &[usize], &mut Scratch) -> Option<V> + Sync,
{
    let total = space.check_budget(cfg.budget)?;
    let m = space.candidates.len();
    if m == 0 {
        let mut scratch = Scratch::new(inst.n_agents());
        return Ok(eval(inst, &[], &mut scratch).map(|v| (v, Vec::new())));
    }

    let scan_range = |start: u64, end: u64| -> Option<(V, u64, Vec<usize>)> {
        let mut scratch = Scratch::new(inst.n_agents());
        let mut digits = vec![0usize; m];
        let mut owners = vec![0usize; m];
        space.decode(start, &mut digits);
        space.materialize(&digits, &mut owners, 0);
        let mut best: Option<(V, u64, Vec<usize>)> = None;
        for index in start..end {
            if let Some(value) = eval(inst, &owners, &mut scratch) {
                let better = match &best {
                    None => true,
                    // Strict improvement only: earlier states win ties.
                    Some((best_value, _, _)) => value > *best_value,
                };
                if better {
                    best = Some((value, index, owners.clone()));
                }
            }
            if index + 1 < end {
                let changed = space.advance(&mut digits).expect("within range");
                space.materialize(&digits, &mut owners, changed);
            }
        }
        best
    };

    let candidates: Vec<Option<(V, u64, Vec<usize>)>> =
        if cfg.workers <= 1 || total < PARALLEL_THRESHOLD {
            vec![scan_range(0, total)]
        } else {
            let ranges = worker_ranges(total, cfg.workers);
            std::thread::scope(|scope| {
                let handles: Vec<_> = ranges
                    .iter()
                    .map(|&(start, end)| {
                        let scan_range = &scan_range;
                        scope.spawn(move || scan_range(start, end))
                    })
                    .collect();
                handles
                    .into_iter()
                    .map(|h| h.join().expect("oracle worker panicked"))
                    .collect()
            })
        };

    // Merge: larger value wins; on equal values the smaller global index —
    // the same rule each worker applied within its own range.
    let mut best: Option<(V, u64, Vec<usize>)> = None;
    for candidate in candidates.into_iter().flatten() {
        let better = match &best {
            None => true,
            Some((best_value, best_index, _)) => {
                candidate.0 > *best_value
                    || (candidate.0 == *best_value && candidate.1 < *best_index)
            }
        };
        if better {
            best = Some(candidate);
        }
    }
    Ok(best.map(|(value, _, owners)| (value, owners)))
}

fn space_for(inst: &GraphicalInstance, space: SearchSpace) -> StateSpace {
    match space {
        SearchSpace::Allocations => StateSpace::allocations(inst),
        SearchSpace::Orientations => StateSpace::orientations(inst),
    }
}

fn passes(constraint: Constraint, inst: &GraphicalInstance, owners: &[usize], scratch: &mut Scratch) -> bool {
    match constraint {
        Constraint::Unconstrained => true,
        Constraint::EnvyFree => scratch.envy_ok(inst, owners, false),
        Constraint::Efx => scratch.envy_ok(inst, owners, true),
    }
}

// ---------------------------------------------------------------------------
// Public queries
// ---------------------------------------------------------------------------

/// Lexicographically smallest allocation in the space satisfying the
/// fairness notion, if any.
pub fn exists_fair(
    inst: &GraphicalInstance,
    fairness: Fairness,
    space: SearchSpace,
    cfg: &OracleConfig,
) -> Result<Option<Allocation>> {
    let efx = matches!(fairness, Fairness::Efx);
    let state_space = space_for(inst, space);
    let witness = find_first(inst, &state_space, cfg, |inst, owners, scratch| {
        scratch.load(inst, owners);
        scratch.envy_ok(inst, owners, efx)
    })?;
    Ok(witness.map(Allocation::new))
}

/// Exact welfare optimum over the (possibly constrained) space, with the
/// lexicographically smallest witness attaining it. `None` means the
/// constraint admits no state at all — distinct from an optimum of zero.
pub fn max_welfare(
    inst: &GraphicalInstance,
    kind: WelfareKind,
    constraint: Constraint,
    space: SearchSpace,
    cfg: &OracleConfig,
) -> Result<Option<(WelfareValue, Allocation)>> {
    let state_space = space_for(inst, space);
    match kind {
        WelfareKind::Utilitarian | WelfareKind::Egalitarian => {
            let egal = matches!(kind, WelfareKind::Egalitarian);
            let best = optimize(inst, &state_space, cfg, |inst, owners, scratch| {
                scratch.load(inst, owners);
                if !passes(constraint, inst, owners, scratch) {
                    return None;
                }
                Some(if egal {
                    scratch.egalitarian()
                } else {
                    scratch.utilitarian
                })
            })?;
            Ok(best.map(|(value, owners)| (WelfareValue::Scalar(value), Allocation::new(owners))))
        }
        WelfareKind::Nash => {
            let best = optimize(inst, &state_space, cfg, |inst, owners, scratch| {
                scratch.load(inst, owners);
                if !passes(constraint, inst, owners, scratch) {
                    return None;
                }
                Some(scratch.nash())
            })?;
            Ok(best.map(|((support, product), owners)| {
                (
                    WelfareValue::Nash {
                        positive_support: support,
                        product: product.into_biguint(),
                    },
                    Allocation::new(owners),
                )
            }))
        }
    }
}

/// Ratio of the unconstrained welfare optimum to the EFX-constrained one,
/// both taken over complete allocations.
pub fn price_of_efx(
    inst: &GraphicalInstance,
    kind: WelfareKind,
    cfg: &OracleConfig,
) -> Result<PofRatio> {
    let value_of = |outcome: Option<(WelfareValue, Allocation)>| -> Result<BigUint> {
        match outcome {
            None => Err(Error::Precondition(
                "welfare optimum over an empty constraint set".into(),
            )),
            Some((WelfareValue::Scalar(v), _)) => Ok(BigUint::from(v)),
            Some((WelfareValue::Nash { product, .. }, _)) => Ok(product),
        }
    };
    let numerator = value_of(max_welfare(
        inst,
        kind,
        Constraint::Unconstrained,
        SearchSpace::Allocations,
        cfg,
    )?)?;
    let denominator = value_of(max_welfare(
        inst,
        kind,
        Constraint::Efx,
        SearchSpace::Allocations,
        cfg,
    )?)?;
    Ok(PofRatio::new(numerator, denominator))
}

/// Does some EFX allocation attain the utilitarian upper bound (every item
/// at a maximum-value endpoint)?
///
/// Only placements that keep every item at a maximum-value endpoint can
/// reach the bound, so the scan ranges over exactly those states; the budget
/// applies to their count.
pub fn decide_um_plus_efx(inst: &GraphicalInstance, cfg: &OracleConfig) -> Result<bool> {
    Ok(find_um_plus_efx(inst, cfg)?.is_some())
}

/// Lexicographically smallest allocation that is simultaneously EFX and
/// utilitarian-optimal, if any; the witness behind [`decide_um_plus_efx`].
pub fn find_um_plus_efx(
    inst: &GraphicalInstance,
    cfg: &OracleConfig,
) -> Result<Option<Allocation>> {
    let space = StateSpace::max_value_placements(inst);
    let witness = find_first(inst, &space, cfg, |inst, owners, scratch| {
        scratch.load(inst, owners);
        debug_assert_eq!(scratch.utilitarian, inst.max_total_value());
        scratch.envy_ok(inst, owners, true)
    })?;
    Ok(witness.map(Allocation::new))
}

/// Does some EFX allocation give every agent utility at least `threshold`?
pub fn decide_em_efx_threshold(
    inst: &GraphicalInstance,
    threshold: u64,
    cfg: &OracleConfig,
) -> Result<bool> {
    let space = StateSpace::allocations(inst);
    let witness = find_first(inst, &space, cfg, |inst, owners, scratch| {
        scratch.load(inst, owners);
        scratch.egalitarian() >= threshold && scratch.envy_ok(inst, owners, true)
    })?;
    Ok(witness.is_some())
}
