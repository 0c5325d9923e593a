//! Constructors tying fair-allocation questions to the multicolored
//! independent set problem (MCIS), plus a small exact MCIS solver and the
//! reverse extraction.
//!
//! Each constructor turns an MCIS instance — a d-regular graph with
//! vertices split into color classes — into a valuation instance whose
//! fairness question has the same answer: envy-freeness for the basic
//! gadget, welfare-maximization combined with EFX for the path gadget,
//! and an egalitarian threshold for the basic gadget paired with the
//! degree. The solver and extractor exist so the equivalences can be
//! checked outright on desk-scale inputs rather than taken on faith.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::instance::{Allocation, EdgeItem, GraphicalInstance};

/// A d-regular simple graph whose vertices are partitioned into color
/// classes, asking whether one vertex per class can be chosen with no two
/// choices adjacent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct McisInstance {
    /// Color classes, each ascending; together they partition `0..n`.
    classes: Vec<Vec<usize>>,
    /// Simple undirected edges on the vertex set.
    edges: Vec<(usize, usize)>,
    /// Degree of every vertex.
    degree: usize,
}

impl McisInstance {
    /// Validates and canonicalizes: classes must be nonempty and together
    /// partition `0..n` (each is sorted ascending here); edges must form a
    /// simple graph in which every vertex has degree exactly `degree`.
    pub fn new(
        classes: Vec<Vec<usize>>,
        edges: Vec<(usize, usize)>,
        degree: usize,
    ) -> Result<Self> {
        let n: usize = classes.iter().map(|c| c.len()).sum();
        let mut seen = vec![false; n];
        for (i, class) in classes.iter().enumerate() {
            if class.is_empty() {
                return Err(Error::InvalidInstance(format!("class {i} is empty")));
            }
            for &v in class {
                if v >= n {
                    return Err(Error::InvalidInstance(format!(
                        "class {i} names vertex {v}, but the classes only account for {n} vertices"
                    )));
                }
                if seen[v] {
                    return Err(Error::InvalidInstance(format!(
                        "vertex {v} appears in more than one class"
                    )));
                }
                seen[v] = true;
            }
        }
        let mut classes = classes;
        for class in &mut classes {
            class.sort_unstable();
        }

        let mut deg = vec![0usize; n];
        let mut pairs: HashSet<(usize, usize)> = HashSet::new();
        for &(a, b) in &edges {
            if a >= n || b >= n {
                return Err(Error::InvalidInstance(format!(
                    "edge ({a}, {b}) leaves the vertex set of size {n}"
                )));
            }
            if a == b {
                return Err(Error::InvalidInstance(format!(
                    "edge ({a}, {b}) is a self-loop"
                )));
            }
            if !pairs.insert((a.min(b), a.max(b))) {
                return Err(Error::InvalidInstance(format!(
                    "edge ({a}, {b}) appears twice"
                )));
            }
            deg[a] += 1;
            deg[b] += 1;
        }
        if let Some(v) = (0..n).find(|&v| deg[v] != degree) {
            return Err(Error::InvalidInstance(format!(
                "vertex {v} has degree {}, but the graph is declared {degree}-regular",
                deg[v]
            )));
        }

        Ok(McisInstance {
            classes,
            edges,
            degree,
        })
    }

    pub fn n_vertices(&self) -> usize {
        self.classes.iter().map(|c| c.len()).sum()
    }

    pub fn n_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    fn adjacency(&self) -> HashSet<(usize, usize)> {
        self.edges
            .iter()
            .map(|&(a, b)| (a.min(b), a.max(b)))
            .collect()
    }
}

/// The basic gadget: every original edge becomes a symmetric unit item,
/// and each class `i` gains a collector agent joined to all its members by
/// symmetric degree-valued items. The result admits an envy-free
/// allocation exactly when the MCIS instance has a solution.
///
/// Agent layout: original vertices keep their indices; collector `i` is
/// agent `n + i`. Item layout: original edges first, in input order, then
/// each class's collector edges in ascending member order.
pub fn reduce_mcis_to_ef(mcis: &McisInstance) -> Result<GraphicalInstance> {
    if mcis.degree() == 0 {
        return Err(Error::InvalidInput(
            "the collector gadget needs degree at least 1; an edgeless graph has nothing to encode"
                .to_string(),
        ));
    }
    let n = mcis.n_vertices();
    let d = mcis.degree() as u64;
    let mut edges: Vec<EdgeItem> = mcis
        .edges()
        .iter()
        .map(|&(a, b)| EdgeItem::new(a, b, 1, 1))
        .collect();
    for (i, class) in mcis.classes().iter().enumerate() {
        let collector = n + i;
        for &v in class {
            edges.push(EdgeItem::new(v, collector, d, d));
        }
    }
    GraphicalInstance::new(n + mcis.n_classes(), edges)
}

/// The path gadget: original edges become symmetric unit items; each class
/// `i` gains a four-agent path `p1 — p2 — p3 — p4` whose second agent `p2`
/// is joined to all class members by symmetric degree-valued items. Path
/// edge values: (p1, p2) is worth 0 to p1 and 1 to p2; (p2, p3) is worth
/// the degree to both; (p3, p4) is worth 1 to p3 and nothing to p4. Some
/// welfare-maximizing allocation is EFX exactly when the MCIS instance has
/// a solution.
///
/// The (p3, p4) value of 1 is what makes the equivalence exact: welfare
/// maximization pins (p1, p2) to p2 and (p3, p4) to p3, and if the
/// degree-valued tie (p2, p3) went to p2, p3 would sit at utility 1 while
/// seeing degree-worth of value in p2's multi-item bundle — an EFX
/// violation no removal fixes. So under EFX the tie resolves to p3, which
/// leaves p2 needing a class edge, which in turn forces one class member
/// to collect all its unit edges; those members form the independent set.
/// (Were (p3, p4) worth the full degree to p3, handing the tie to p2 would
/// leave everyone content and the no-direction would collapse.)
///
/// Agent layout: original vertices keep their indices; class `i`'s path
/// agents are `n + 4i` through `n + 4i + 3`. Item layout: original edges
/// first, in input order, then per class its collector edges in ascending
/// member order followed by the three path edges.
pub fn reduce_mcis_to_um_efx(mcis: &McisInstance) -> Result<GraphicalInstance> {
    if mcis.degree() < 2 {
        return Err(Error::InvalidInput(format!(
            "the path gadget needs degree at least 2 so collector envy outweighs the unit edge; got {}",
            mcis.degree()
        )));
    }
    let n = mcis.n_vertices();
    let d = mcis.degree() as u64;
    let mut edges: Vec<EdgeItem> = mcis
        .edges()
        .iter()
        .map(|&(a, b)| EdgeItem::new(a, b, 1, 1))
        .collect();
    for (i, class) in mcis.classes().iter().enumerate() {
        let p1 = n + 4 * i;
        let (p2, p3, p4) = (p1 + 1, p1 + 2, p1 + 3);
        for &v in class {
            edges.push(EdgeItem::new(v, p2, d, d));
        }
        edges.push(EdgeItem::new(p1, p2, 0, 1));
        edges.push(EdgeItem::new(p2, p3, d, d));
        edges.push(EdgeItem::new(p3, p4, 1, 0));
    }
    GraphicalInstance::new(n + 4 * mcis.n_classes(), edges)
}

/// The basic gadget paired with the egalitarian threshold it encodes: the
/// MCIS instance has a solution exactly when the reduced instance admits
/// an EFX allocation giving every agent utility at least the threshold,
/// which is the degree.
pub fn reduce_mcis_to_em_efx(mcis: &McisInstance) -> Result<(GraphicalInstance, u64)> {
    Ok((reduce_mcis_to_ef(mcis)?, mcis.degree() as u64))
}

/// Exhaustive MCIS solver: the lexicographically smallest choice of one
/// vertex per class with no two adjacent, or `None` when no such choice
/// exists. Refuses to start when the selection space exceeds `budget`.
pub fn solve_mcis_bruteforce(mcis: &McisInstance, budget: u64) -> Result<Option<Vec<usize>>> {
    let states = mcis
        .classes()
        .iter()
        .fold(1u128, |acc, c| acc.saturating_mul(c.len() as u128));
    if states > budget as u128 {
        return Err(Error::BudgetExceeded { states, budget });
    }
    let adjacency = mcis.adjacency();
    let mut picked = Vec::with_capacity(mcis.n_classes());
    if pick_from_next_class(mcis, &adjacency, &mut picked) {
        Ok(Some(picked))
    } else {
        Ok(None)
    }
}

fn pick_from_next_class(
    mcis: &McisInstance,
    adjacency: &HashSet<(usize, usize)>,
    picked: &mut Vec<usize>,
) -> bool {
    let Some(class) = mcis.classes().get(picked.len()) else {
        return true;
    };
    for &v in class {
        let independent = picked
            .iter()
            .all(|&u| !adjacency.contains(&(u.min(v), u.max(v))));
        if independent {
            picked.push(v);
            if pick_from_next_class(mcis, adjacency, picked) {
                return true;
            }
            picked.pop();
        }
    }
    false
}

/// Reads an MCIS solution back out of an envy-free allocation on the basic
/// gadget: per class, the lowest member holding none of its degree-valued
/// collector edge yet all of its original unit edges. The returned set is
/// re-verified to be colorful and independent; for envy-free input the
/// verification cannot fail, so `None` would witness a broken reduction.
pub fn extract_independent_set(
    mcis: &McisInstance,
    allocation: &Allocation,
) -> Result<Option<Vec<usize>>> {
    let reduced = reduce_mcis_to_ef(mcis)?;
    if !reduced.is_envy_free(allocation)? {
        return Err(Error::Precondition(
            "independent-set extraction needs an envy-free allocation on the reduced instance"
                .to_string(),
        ));
    }
    let owners = allocation.owners();
    let n_original_edges = mcis.edges().len();

    let mut chosen = Vec::with_capacity(mcis.n_classes());
    let mut class_block = n_original_edges;
    for class in mcis.classes() {
        let mut found = None;
        for (position, &v) in class.iter().enumerate() {
            if owners[class_block + position] == v {
                continue; // holds its collector edge; not a candidate
            }
            let keeps_all_unit_edges = (0..n_original_edges)
                .filter(|&item| {
                    let e = reduced.edge(item);
                    e.a == v || e.b == v
                })
                .all(|item| owners[item] == v);
            if keeps_all_unit_edges {
                found = Some(v);
                break;
            }
        }
        match found {
            Some(v) => chosen.push(v),
            None => return Ok(None),
        }
        class_block += class.len();
    }

    let adjacency = mcis.adjacency();
    for (i, &u) in chosen.iter().enumerate() {
        for &v in &chosen[i + 1..] {
            if adjacency.contains(&(u.min(v), u.max(v))) {
                return Ok(None);
            }
        }
    }
    Ok(Some(chosen))
}
