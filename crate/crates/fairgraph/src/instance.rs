//! Valuation instances over graphs, allocations of their edge items, and the
//! fairness and welfare predicates defined on them.
//!
//! Agents are the vertices of a simple graph and items are its edges. Each
//! item is valued only by its two endpoints (possibly asymmetrically); every
//! other agent values it at zero. Utilities are additive over bundles.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigUint;

use crate::error::{Error, Result};

/// Largest single utility value an instance accepts.
///
/// Bounding single values by 2^32 and item counts by [`MAX_ITEMS`] keeps
/// every bundle utility (and the utilitarian total) below 2^53, so plain
/// `u64` arithmetic cannot overflow anywhere in the enumeration loops.
pub const MAX_UTILITY: u64 = 1 << 32;

/// Largest number of items an instance accepts.
pub const MAX_ITEMS: usize = 1 << 20;

/// One item: an edge between two distinct agents, valued only by them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EdgeItem {
    pub a: usize,
    pub b: usize,
    pub value_a: u64,
    pub value_b: u64,
}

impl EdgeItem {
    pub fn new(a: usize, b: usize, value_a: u64, value_b: u64) -> Self {
        EdgeItem {
            a,
            b,
            value_a,
            value_b,
        }
    }

    /// The value `agent` assigns to this edge; zero for non-endpoints.
    pub fn value_for(&self, agent: usize) -> u64 {
        if agent == self.a {
            self.value_a
        } else if agent == self.b {
            self.value_b
        } else {
            0
        }
    }

    pub fn is_endpoint(&self, agent: usize) -> bool {
        agent == self.a || agent == self.b
    }

    /// The endpoint opposite `agent`. Panics if `agent` is not an endpoint.
    pub fn other_endpoint(&self, agent: usize) -> usize {
        if agent == self.a {
            self.b
        } else {
            debug_assert_eq!(agent, self.b);
            self.a
        }
    }

    /// The larger of the two endpoint values.
    pub fn max_value(&self) -> u64 {
        self.value_a.max(self.value_b)
    }

    /// The lower-indexed endpoint.
    pub fn min_endpoint(&self) -> usize {
        self.a.min(self.b)
    }
}

/// A complete allocation: `owners[item]` is the agent holding that item.
///
/// Completeness (every item owned by exactly one agent) is structural; the
/// vector is validated against a particular instance by the predicates that
/// consume it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Allocation {
    owners: Vec<usize>,
}

impl Allocation {
    pub fn new(owners: Vec<usize>) -> Self {
        Allocation { owners }
    }

    pub fn owner(&self, item: usize) -> usize {
        self.owners[item]
    }

    pub fn owners(&self) -> &[usize] {
        &self.owners
    }

    pub fn n_items(&self) -> usize {
        self.owners.len()
    }

    /// The set of items held by `agent`, in ascending item order.
    pub fn bundle_of(&self, agent: usize) -> Vec<usize> {
        self.owners
            .iter()
            .enumerate()
            .filter(|&(_, &o)| o == agent)
            .map(|(item, _)| item)
            .collect()
    }
}

/// Welfare figures of one allocation. All values are exact integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WelfareReport {
    /// Sum of all agents' utilities.
    pub utilitarian: u64,
    /// Minimum utility over all agents.
    pub egalitarian: u64,
    /// Product of all agents' utilities (zero if any agent has zero).
    pub nash_product: BigUint,
    /// Number of agents with positive utility.
    pub nash_positive_support: usize,
}

/// A valuation instance: `n_agents` vertices and a list of edge items.
///
/// Invariants enforced at construction: endpoints are distinct, in-range
/// agents; no two items connect the same pair; values are at most
/// [`MAX_UTILITY`]; at most [`MAX_ITEMS`] items.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphicalInstance {
    n_agents: usize,
    edges: Vec<EdgeItem>,
    /// Per agent, the incident item indices in ascending order.
    incident: Vec<Vec<usize>>,
}

impl GraphicalInstance {
    pub fn new(n_agents: usize, edges: Vec<EdgeItem>) -> Result<Self> {
        if edges.len() > MAX_ITEMS {
            return Err(Error::InvalidInstance(format!(
                "{} items exceed the supported maximum of {}",
                edges.len(),
                MAX_ITEMS
            )));
        }
        let mut seen: HashMap<(usize, usize), usize> = HashMap::new();
        for (item, e) in edges.iter().enumerate() {
            for endpoint in [e.a, e.b] {
                if endpoint >= n_agents {
                    return Err(Error::AgentOutOfRange {
                        agent: endpoint,
                        n_agents,
                    });
                }
            }
            if e.a == e.b {
                return Err(Error::InvalidInstance(format!(
                    "item {item} is a self-loop on agent {}",
                    e.a
                )));
            }
            for value in [e.value_a, e.value_b] {
                if value > MAX_UTILITY {
                    return Err(Error::InvalidInstance(format!(
                        "item {item} carries value {value}, above the supported maximum {MAX_UTILITY}"
                    )));
                }
            }
            let key = (e.a.min(e.b), e.a.max(e.b));
            if let Some(first) = seen.insert(key, item) {
                return Err(Error::InvalidInstance(format!(
                    "items {first} and {item} both connect agents {} and {}",
                    key.0, key.1
                )));
            }
        }
        let mut incident = vec![Vec::new(); n_agents];
        for (item, e) in edges.iter().enumerate() {
            incident[e.a].push(item);
            incident[e.b].push(item);
        }
        Ok(GraphicalInstance {
            n_agents,
            edges,
            incident,
        })
    }

    pub fn n_agents(&self) -> usize {
        self.n_agents
    }

    pub fn n_items(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[EdgeItem] {
        &self.edges
    }

    pub fn edge(&self, item: usize) -> &EdgeItem {
        &self.edges[item]
    }

    /// Items incident to `agent`, ascending.
    pub fn incident_items(&self, agent: usize) -> &[usize] {
        &self.incident[agent]
    }

    /// The value `agent` assigns to `item` (zero unless an endpoint).
    pub fn value_of(&self, agent: usize, item: usize) -> u64 {
        self.edges[item].value_for(agent)
    }

    /// Every utility value appearing in the instance, plus zero.
    pub fn distinct_values(&self) -> BTreeSet<u64> {
        let mut values: BTreeSet<u64> = BTreeSet::new();
        values.insert(0);
        for e in &self.edges {
            values.insert(e.value_a);
            values.insert(e.value_b);
        }
        values
    }

    /// True when every value is 0 or 1.
    pub fn is_binary(&self) -> bool {
        self.edges
            .iter()
            .all(|e| e.value_a <= 1 && e.value_b <= 1)
    }

    fn check_agent(&self, agent: usize) -> Result<()> {
        if agent >= self.n_agents {
            return Err(Error::AgentOutOfRange {
                agent,
                n_agents: self.n_agents,
            });
        }
        Ok(())
    }

    fn check_allocation(&self, allocation: &Allocation) -> Result<()> {
        if allocation.n_items() != self.n_items() {
            return Err(Error::InvalidAllocation(format!(
                "allocation covers {} items but the instance has {}",
                allocation.n_items(),
                self.n_items()
            )));
        }
        for (item, &owner) in allocation.owners().iter().enumerate() {
            if owner >= self.n_agents {
                return Err(Error::InvalidAllocation(format!(
                    "item {item} is assigned to agent {owner}, out of range ({} agents)",
                    self.n_agents
                )));
            }
        }
        Ok(())
    }

    /// Additive utility `agent` derives from the given items.
    ///
    /// The bundle is read as a set: callers pass each item at most once.
    pub fn bundle_utility(&self, agent: usize, bundle: &[usize]) -> Result<u64> {
        self.check_agent(agent)?;
        let mut total = 0u64;
        for &item in bundle {
            if item >= self.n_items() {
                return Err(Error::ItemOutOfRange {
                    item,
                    n_items: self.n_items(),
                });
            }
            total += self.value_of(agent, item);
        }
        Ok(total)
    }

    /// The largest value `agent` assigns to any single item; zero when the
    /// agent is incident to nothing.
    pub fn v_max(&self, agent: usize) -> Result<u64> {
        self.check_agent(agent)?;
        Ok(self.incident[agent]
            .iter()
            .map(|&item| self.value_of(agent, item))
            .max()
            .unwrap_or(0))
    }

    /// Each agent's utility for its own bundle.
    pub fn own_utilities(&self, allocation: &Allocation) -> Result<Vec<u64>> {
        self.check_allocation(allocation)?;
        Ok(self.own_utilities_unchecked(allocation.owners()))
    }

    pub(crate) fn own_utilities_unchecked(&self, owners: &[usize]) -> Vec<u64> {
        let mut utilities = vec![0u64; self.n_agents];
        for (item, &owner) in owners.iter().enumerate() {
            utilities[owner] += self.value_of(owner, item);
        }
        utilities
    }

    /// True when every item sits with one of its two endpoints.
    pub fn is_orientation(&self, allocation: &Allocation) -> Result<bool> {
        self.check_allocation(allocation)?;
        Ok(allocation
            .owners()
            .iter()
            .enumerate()
            .all(|(item, &owner)| self.edges[item].is_endpoint(owner)))
    }

    /// True when no item sits with an agent that values it at zero.
    ///
    /// Items valued zero by both endpoints are exempt: nobody can derive
    /// value from them, so they are non-wasteful wherever they land.
    pub fn is_non_wasteful(&self, allocation: &Allocation) -> Result<bool> {
        self.check_allocation(allocation)?;
        Ok(allocation
            .owners()
            .iter()
            .enumerate()
            .all(|(item, &owner)| {
                let e = &self.edges[item];
                e.max_value() == 0 || e.value_for(owner) > 0
            }))
    }

    /// Cross utilities that can be positive: for each ordered pair
    /// `(valuer, owner)` with `valuer != owner`, the utility `valuer`
    /// assigns to `owner`'s bundle, listed only when nonzero-capable
    /// (i.e. the bundle holds an edge incident to `valuer`).
    fn cross_utilities(&self, owners: &[usize]) -> BTreeMap<(usize, usize), u64> {
        let mut cross: BTreeMap<(usize, usize), u64> = BTreeMap::new();
        for (item, &owner) in owners.iter().enumerate() {
            let e = &self.edges[item];
            for endpoint in [e.a, e.b] {
                if endpoint != owner {
                    *cross.entry((endpoint, owner)).or_insert(0) += e.value_for(endpoint);
                }
            }
        }
        cross
    }

    /// Envy-freeness: no agent values another's bundle above its own.
    pub fn is_envy_free(&self, allocation: &Allocation) -> Result<bool> {
        self.check_allocation(allocation)?;
        let owners = allocation.owners();
        let utilities = self.own_utilities_unchecked(owners);
        Ok(self
            .cross_utilities(owners)
            .iter()
            .all(|(&(valuer, _), &value)| value <= utilities[valuer]))
    }

    /// EFX in the strong form: for every pair of agents and **every** item in
    /// the envied bundle — zero-valued items included — removing that single
    /// item must eliminate the envy.
    pub fn is_efx(&self, allocation: &Allocation) -> Result<bool> {
        self.check_allocation(allocation)?;
        let owners = allocation.owners();
        let utilities = self.own_utilities_unchecked(owners);
        let mut bundles: HashMap<usize, Vec<usize>> = HashMap::new();
        for (item, &owner) in owners.iter().enumerate() {
            bundles.entry(owner).or_default().push(item);
        }
        for (&(valuer, owner), &value) in self.cross_utilities(owners).iter() {
            if value <= utilities[valuer] {
                continue;
            }
            // `valuer` envies `owner`; the envy must vanish when the least
            // valuable item of the bundle is dropped.
            let min_item_value = bundles[&owner]
                .iter()
                .map(|&item| self.value_of(valuer, item))
                .min()
                .expect("envied bundle is nonempty");
            if value - min_item_value > utilities[valuer] {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Exact welfare figures for one allocation.
    pub fn welfare(&self, allocation: &Allocation) -> Result<WelfareReport> {
        let utilities = self.own_utilities(allocation)?;
        Ok(welfare_of_utilities(&utilities))
    }

    /// Upper bound on utilitarian welfare: every item at its best endpoint.
    pub fn max_total_value(&self) -> u64 {
        self.edges.iter().map(|e| e.max_value()).sum()
    }
}

/// Welfare figures of a utility vector.
pub(crate) fn welfare_of_utilities(utilities: &[u64]) -> WelfareReport {
    let utilitarian = utilities.iter().sum();
    let egalitarian = utilities.iter().copied().min().unwrap_or(0);
    let nash_positive_support = utilities.iter().filter(|&&u| u > 0).count();
    let mut nash_product = BigUint::from(1u32);
    for &u in utilities {
        nash_product *= BigUint::from(u);
    }
    WelfareReport {
        utilitarian,
        egalitarian,
        nash_product,
        nash_positive_support,
    }
}
