//! Constructive solvers for binary instances, where every value is 0 or 1.
//!
//! `solve_ef_binary` decides envy-freeness exactly: it returns an envy-free
//! orientation whenever the instance admits any envy-free allocation and
//! `None` otherwise. `solve_efx_binary` always returns an EFX allocation,
//! and a strong one: it attains the utilitarian optimum over *all*
//! allocations and the egalitarian and Nash optima over all EFX allocations.
//!
//! Both start the same way. Items valued by exactly one endpoint go to that
//! endpoint; an agent that receives one this way is *covered* — it already
//! has as much as any single item is worth to it. The edges both endpoints
//! value (symmetric edges) are then handled per connected component of the
//! graph they span. A component with a cycle can feed every one of its
//! vertices: orient one cycle cyclically, grow a spanning forest outward
//! from it with each newly reached vertex taking its discovery edge, and
//! park the remaining edges at their lowest endpoint. A tree component is
//! one edge short, so it is rooted and every non-root takes the edge toward
//! its parent: envy-freeness demands a covered root (no covered vertex in a
//! tree component proves no envy-free allocation exists, by pigeonhole),
//! while the EFX solver settles for a lowest-indexed minimum-degree root
//! and leaves it empty-handed.
//!
//! The EFX solver then rebalances: while some chain of symmetric-edge
//! handovers can move one unit of utility from an agent to another agent
//! poorer by at least two, it applies the chain. The sum of squared
//! utilities strictly drops each time, so this terminates, and a profile
//! with no such chain is leximin-optimal among all ways of placing every
//! item at a valuing endpoint — which no allocation at all can beat, since
//! moving a wasted item to an endpoint never lowers anyone's utility.
//! Finally, items worth nothing to anybody go to the lowest-indexed agent
//! nobody envies; such an agent always exists at this point, and extra
//! worthless items never create new envy.

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::instance::{Allocation, GraphicalInstance};

fn ensure_binary(inst: &GraphicalInstance) -> Result<()> {
    for (item, e) in inst.edges().iter().enumerate() {
        if e.value_a > 1 || e.value_b > 1 {
            return Err(Error::NonBinary {
                item,
                value_a: e.value_a,
                value_b: e.value_b,
            });
        }
    }
    Ok(())
}

/// Adjacency and connected components of the subgraph of symmetric edges
/// (value 1 to both endpoints). Adjacency lists are in item order; the
/// component list is ordered by lowest contained vertex.
struct SymmetricGraph {
    adj: Vec<Vec<(usize, usize)>>,
    components: Vec<Component>,
}

struct Component {
    vertices: Vec<usize>,
    items: Vec<usize>,
}

impl Component {
    fn is_tree(&self) -> bool {
        self.items.len() == self.vertices.len() - 1
    }
}

fn symmetric_structure(inst: &GraphicalInstance) -> SymmetricGraph {
    let n = inst.n_agents();
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (item, e) in inst.edges().iter().enumerate() {
        if e.value_a == 1 && e.value_b == 1 {
            adj[e.a].push((item, e.b));
            adj[e.b].push((item, e.a));
        }
    }
    let mut comp_of = vec![usize::MAX; n];
    let mut components = Vec::new();
    for start in 0..n {
        if adj[start].is_empty() || comp_of[start] != usize::MAX {
            continue;
        }
        let id = components.len();
        comp_of[start] = id;
        let mut vertices = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &(_, w) in &adj[v] {
                if comp_of[w] == usize::MAX {
                    comp_of[w] = id;
                    vertices.push(w);
                    queue.push_back(w);
                }
            }
        }
        components.push(Component {
            vertices,
            items: Vec::new(),
        });
    }
    for (item, e) in inst.edges().iter().enumerate() {
        if e.value_a == 1 && e.value_b == 1 {
            components[comp_of[e.a]].items.push(item);
        }
    }
    SymmetricGraph { adj, components }
}

/// Multi-source BFS: every vertex first reached from the sources takes the
/// edge it was reached through.
fn assign_discovery_edges(
    sources: &[usize],
    adj: &[Vec<(usize, usize)>],
    n: usize,
    owners: &mut [Option<usize>],
) {
    let mut discovered = vec![false; n];
    let mut queue = VecDeque::new();
    for &s in sources {
        discovered[s] = true;
        queue.push_back(s);
    }
    while let Some(v) = queue.pop_front() {
        for &(item, w) in &adj[v] {
            if !discovered[w] {
                discovered[w] = true;
                owners[item] = Some(w);
                queue.push_back(w);
            }
        }
    }
}

/// First cycle reached by a depth-first search from `start`, as the vertex
/// sequence `v_0, …, v_{c-1}` and the items joining consecutive vertices
/// (the last item closes the cycle back to `v_0`). The caller guarantees a
/// cycle exists in `start`'s component.
fn find_cycle(
    start: usize,
    adj: &[Vec<(usize, usize)>],
    n: usize,
) -> (Vec<usize>, Vec<usize>) {
    let mut visited = vec![false; n];
    let mut on_stack = vec![false; n];
    let mut parent = vec![usize::MAX; n];
    let mut parent_item = vec![usize::MAX; n];
    let mut stack: Vec<(usize, usize)> = vec![(start, 0)];
    visited[start] = true;
    on_stack[start] = true;
    while let Some(&mut (v, ref mut next)) = stack.last_mut() {
        if *next == adj[v].len() {
            on_stack[v] = false;
            stack.pop();
            continue;
        }
        let (item, w) = adj[v][*next];
        *next += 1;
        if item == parent_item[v] {
            continue;
        }
        if !visited[w] {
            visited[w] = true;
            on_stack[w] = true;
            parent[w] = v;
            parent_item[w] = item;
            stack.push((w, 0));
        } else if on_stack[w] {
            // Back edge: the cycle is w … v along tree edges, closed by
            // `item`.
            let mut chain = vec![v];
            let mut cur = v;
            while cur != w {
                cur = parent[cur];
                chain.push(cur);
            }
            chain.reverse();
            let mut items: Vec<usize> =
                (1..chain.len()).map(|i| parent_item[chain[i]]).collect();
            items.push(item);
            return (chain, items);
        }
    }
    unreachable!("caller promised the component contains a cycle");
}

/// Orient a non-tree component: one cycle fed cyclically, a spanning forest
/// grown from it, leftovers parked at their lowest endpoint. Every vertex
/// of the component ends up with utility at least 1.
fn orient_cyclic_component(
    inst: &GraphicalInstance,
    comp: &Component,
    adj: &[Vec<(usize, usize)>],
    owners: &mut [Option<usize>],
) {
    let n = inst.n_agents();
    let (cycle_vertices, cycle_items) = find_cycle(comp.vertices[0], adj, n);
    for (i, &item) in cycle_items.iter().enumerate() {
        owners[item] = Some(cycle_vertices[i]);
    }
    let mut sources = cycle_vertices;
    sources.sort_unstable();
    assign_discovery_edges(&sources, adj, n, owners);
    for &item in &comp.items {
        if owners[item].is_none() {
            owners[item] = Some(inst.edge(item).min_endpoint());
        }
    }
}

/// Exact envy-freeness for binary instances: an envy-free orientation, or
/// `None` when the instance has no envy-free allocation at all.
pub fn solve_ef_binary(inst: &GraphicalInstance) -> Result<Option<Allocation>> {
    ensure_binary(inst)?;
    let n = inst.n_agents();
    let mut owners: Vec<Option<usize>> = vec![None; inst.n_items()];
    let mut covered = vec![false; n];
    for (item, e) in inst.edges().iter().enumerate() {
        match (e.value_a, e.value_b) {
            (1, 0) => {
                owners[item] = Some(e.a);
                covered[e.a] = true;
            }
            (0, 1) => {
                owners[item] = Some(e.b);
                covered[e.b] = true;
            }
            _ => {}
        }
    }
    let sym = symmetric_structure(inst);
    for comp in &sym.components {
        if comp.is_tree() {
            // A tree is one edge short of feeding all its vertices: the
            // root must already be covered, or envy is unavoidable.
            let Some(root) = comp.vertices.iter().copied().filter(|&v| covered[v]).min()
            else {
                return Ok(None);
            };
            assign_discovery_edges(&[root], &sym.adj, n, &mut owners);
        } else {
            orient_cyclic_component(inst, comp, &sym.adj, &mut owners);
        }
    }
    // Only items nobody values are left; their placement is irrelevant.
    for (item, owner) in owners.iter_mut().enumerate() {
        if owner.is_none() {
            *owner = Some(inst.edge(item).min_endpoint());
        }
    }
    let allocation = Allocation::new(owners.into_iter().map(Option::unwrap).collect());
    debug_assert!(inst.is_envy_free(&allocation).unwrap_or(false));
    Ok(Some(allocation))
}

/// While some chain of symmetric-edge handovers moves a unit of utility
/// from an agent to one poorer by at least two, apply it. Terminates
/// because the sum of squared utilities strictly decreases.
fn rebalance_symmetric_edges(inst: &GraphicalInstance, owners: &mut [Option<usize>]) {
    let n = inst.n_agents();
    loop {
        let mut util = vec![0u64; n];
        // Handover arcs: the owner of a symmetric edge can pass it to the
        // other endpoint. In item order for determinism.
        let mut arcs: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        for (item, owner) in owners.iter().enumerate() {
            let Some(o) = *owner else { continue };
            util[o] += inst.value_of(o, item);
            let e = inst.edge(item);
            if e.value_a == 1 && e.value_b == 1 {
                arcs[o].push((item, e.other_endpoint(o)));
            }
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(util[v]), v));

        let mut improved = false;
        for &rich in &order {
            if util[rich] < 2 {
                break;
            }
            let mut parent_item = vec![usize::MAX; n];
            let mut parent = vec![usize::MAX; n];
            let mut seen = vec![false; n];
            seen[rich] = true;
            let mut queue = VecDeque::from([rich]);
            let mut reachable = Vec::new();
            while let Some(v) = queue.pop_front() {
                for &(item, w) in &arcs[v] {
                    if !seen[w] {
                        seen[w] = true;
                        parent[w] = v;
                        parent_item[w] = item;
                        reachable.push(w);
                        queue.push_back(w);
                    }
                }
            }
            let target = reachable
                .into_iter()
                .filter(|&w| util[w] + 2 <= util[rich])
                .min_by_key(|&w| (util[w], w));
            let Some(target) = target else { continue };
            // Walk the chain back, handing each arc's edge to the far side:
            // the endpoints of the chain change by one unit, the interior
            // breaks even.
            let mut cur = target;
            while cur != rich {
                owners[parent_item[cur]] = Some(cur);
                cur = parent[cur];
            }
            improved = true;
            break;
        }
        if !improved {
            return;
        }
    }
}

/// Lowest-indexed agent no other agent envies under the items assigned so
/// far.
fn lowest_unenvied(inst: &GraphicalInstance, owners: &[Option<usize>]) -> usize {
    let n = inst.n_agents();
    let mut util = vec![0u64; n];
    for (item, owner) in owners.iter().enumerate() {
        if let Some(o) = *owner {
            util[o] += inst.value_of(o, item);
        }
    }
    let mut cross: HashMap<(usize, usize), u64> = HashMap::new();
    for (item, owner) in owners.iter().enumerate() {
        let Some(o) = *owner else { continue };
        let e = inst.edge(item);
        for valuer in [e.a, e.b] {
            if valuer != o {
                *cross.entry((valuer, o)).or_insert(0) += e.value_for(valuer);
            }
        }
    }
    let mut envied = vec![false; n];
    for (&(valuer, owner), &sum) in &cross {
        if sum > util[valuer] {
            envied[owner] = true;
        }
    }
    (0..n)
        .find(|&a| !envied[a])
        .expect("a rebalanced placement always leaves someone unenvied")
}

/// An EFX allocation for a binary instance — one always exists. The result
/// places every item somebody values at a valuing endpoint, so it attains
/// the utilitarian optimum outright, and its rebalanced utility profile
/// attains the egalitarian and Nash optima over all EFX allocations.
pub fn solve_efx_binary(inst: &GraphicalInstance) -> Result<Allocation> {
    ensure_binary(inst)?;
    let n = inst.n_agents();
    let mut owners: Vec<Option<usize>> = vec![None; inst.n_items()];
    let mut covered = vec![false; n];
    for (item, e) in inst.edges().iter().enumerate() {
        match (e.value_a, e.value_b) {
            (1, 0) => {
                owners[item] = Some(e.a);
                covered[e.a] = true;
            }
            (0, 1) => {
                owners[item] = Some(e.b);
                covered[e.b] = true;
            }
            _ => {}
        }
    }
    let sym = symmetric_structure(inst);
    for comp in &sym.components {
        if comp.is_tree() {
            let root = comp
                .vertices
                .iter()
                .copied()
                .filter(|&v| covered[v])
                .min()
                .unwrap_or_else(|| {
                    // Nobody is covered: leave a lowest-indexed
                    // minimum-degree vertex empty-handed instead.
                    let min_degree = comp
                        .vertices
                        .iter()
                        .map(|&v| sym.adj[v].len())
                        .min()
                        .expect("component is nonempty");
                    comp.vertices
                        .iter()
                        .copied()
                        .filter(|&v| sym.adj[v].len() == min_degree)
                        .min()
                        .expect("some vertex attains the minimum degree")
                });
            assign_discovery_edges(&[root], &sym.adj, n, &mut owners);
        } else {
            orient_cyclic_component(inst, comp, &sym.adj, &mut owners);
        }
    }
    rebalance_symmetric_edges(inst, &mut owners);
    if owners.iter().any(Option::is_none) {
        let target = lowest_unenvied(inst, &owners);
        for owner in owners.iter_mut() {
            if owner.is_none() {
                *owner = Some(target);
            }
        }
    }
    let allocation = Allocation::new(owners.into_iter().map(Option::unwrap).collect());
    debug_assert!(inst.is_efx(&allocation).unwrap_or(false));
    Ok(allocation)
}
