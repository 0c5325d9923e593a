//! Envy-freeness decided exactly for instances with few distinct values,
//! parameterized by the size of a minimum vertex cover of the graph.
//!
//! The pipeline: compute an exact minimum vertex cover `S`; group the
//! remaining (independent) agents into classes that look identical from
//! `S`; enumerate, per class, the ways a member's edges can be split
//! between it and its cover neighbors without leaving the member short of
//! its best single item; assemble an integer model counting how many
//! members of each class use each split, plus a 0/1 choice of endpoint for
//! every edge inside `S`; and search the model exhaustively. A feasible
//! assignment lifts to an envy-free orientation — every agent ends up with
//! at least the value of its best single item, which for an orientation is
//! exactly envy-freeness — and infeasibility proves no envy-free
//! allocation exists at all.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::ilp::{ilp_feasible, Cmp, IlpModel};
use crate::instance::{Allocation, GraphicalInstance};

/// Default cap on the number of distinct values (zero included) an
/// instance may use.
pub const DEFAULT_VALUE_CAP: usize = 8;

/// A vertex cover and its complement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexCoverDecomposition {
    /// Cover agents, ascending. Every edge touches one of them.
    pub cover: Vec<usize>,
    /// The other agents, ascending; no edge joins two of them.
    pub independent: Vec<usize>,
    /// Cover size.
    pub k: usize,
}

/// Independent agents that are interchangeable: same cover neighbors, and
/// for each neighbor the same value on both sides of the shared edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeClass {
    /// Cover neighbors of every member, ascending.
    pub neighborhood: Vec<usize>,
    /// Per neighbor: (member's value for the shared edge, neighbor's
    /// value for it). Both sides matter — they decide what the member
    /// keeps and what the neighbor receives under any split.
    pub signature: Vec<(u64, u64)>,
    /// The members, ascending.
    pub members: Vec<usize>,
}

impl TypeClass {
    pub fn n_members(&self) -> usize {
        self.members.len()
    }
}

/// One way to split a class member's edges between the member and its
/// cover neighbors, keeping the member at or above its best single item.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientationPattern {
    /// Aligned with the class neighborhood: `true` keeps that edge with
    /// the member, `false` hands it to the neighbor.
    pub toward_vertex: Vec<bool>,
    /// What the member keeps under this split.
    pub vertex_utility: u64,
    /// Aligned with the neighborhood: what each neighbor receives.
    pub cover_utilities: Vec<u64>,
}

// ---------------------------------------------------------------------------
// Minimum vertex cover
// ---------------------------------------------------------------------------

/// Can the edges not already covered by `chosen` be covered with at most
/// `budget` more vertices, all of index ≥ `min_allowed`? Classic bounded
/// branching on an uncovered edge; `chosen` is restored before returning.
fn can_cover(
    edges: &[(usize, usize)],
    chosen: &mut [bool],
    min_allowed: usize,
    budget: usize,
) -> bool {
    let uncovered = edges.iter().find(|&&(a, b)| !chosen[a] && !chosen[b]);
    let Some(&(a, b)) = uncovered else {
        return true;
    };
    if budget == 0 {
        return false;
    }
    for v in [a.min(b), a.max(b)] {
        if v >= min_allowed {
            chosen[v] = true;
            let ok = can_cover(edges, chosen, min_allowed, budget - 1);
            chosen[v] = false;
            if ok {
                return true;
            }
        }
    }
    false
}

/// Exact minimum vertex cover; among all minimum covers, the
/// lexicographically smallest. Runs in time exponential only in the cover
/// size.
pub fn min_vertex_cover(inst: &GraphicalInstance) -> VertexCoverDecomposition {
    let n = inst.n_agents();
    let edges: Vec<(usize, usize)> = inst.edges().iter().map(|e| (e.a, e.b)).collect();
    let mut chosen = vec![false; n];

    let mut k = 0;
    while !can_cover(&edges, &mut chosen, 0, k) {
        k += 1;
    }

    // Build the lexicographically smallest size-k cover prefix by prefix:
    // fix the smallest vertex that still extends to a full cover using
    // only larger vertices.
    let mut cover = Vec::with_capacity(k);
    while cover.len() < k {
        let start = cover.last().map_or(0, |&last| last + 1);
        let budget = k - cover.len() - 1;
        let mut extended = false;
        for v in start..n {
            chosen[v] = true;
            if can_cover(&edges, &mut chosen, v + 1, budget) {
                cover.push(v);
                extended = true;
                break;
            }
            chosen[v] = false;
        }
        assert!(extended, "a feasible prefix always extends to a full cover");
    }

    let independent = (0..n).filter(|&v| !chosen[v]).collect();
    VertexCoverDecomposition {
        cover,
        independent,
        k,
    }
}

fn validate_decomposition(
    inst: &GraphicalInstance,
    decomp: &VertexCoverDecomposition,
) -> Result<()> {
    let n = inst.n_agents();
    let mut role = vec![0u8; n];
    for &v in &decomp.cover {
        if v >= n || role[v] != 0 {
            return Err(Error::InvalidInput(format!(
                "cover agent {v} is out of range or repeated"
            )));
        }
        role[v] = 1;
    }
    for &v in &decomp.independent {
        if v >= n || role[v] != 0 {
            return Err(Error::InvalidInput(format!(
                "independent agent {v} is out of range or already in the cover"
            )));
        }
        role[v] = 2;
    }
    if let Some(missing) = role.iter().position(|&r| r == 0) {
        return Err(Error::InvalidInput(format!(
            "agent {missing} is in neither the cover nor the independent set"
        )));
    }
    if decomp.k != decomp.cover.len() {
        return Err(Error::InvalidInput(format!(
            "stated cover size {} does not match the cover's {} agents",
            decomp.k,
            decomp.cover.len()
        )));
    }
    for e in inst.edges() {
        if role[e.a] == 2 && role[e.b] == 2 {
            return Err(Error::InvalidInput(format!(
                "edge between {} and {} has no endpoint in the cover",
                e.a, e.b
            )));
        }
    }
    Ok(())
}

/// Partition of the independent agents into classes with identical cover
/// neighborhoods and identical per-neighbor value pairs, in order of first
/// member.
pub fn classify_types(
    inst: &GraphicalInstance,
    decomp: &VertexCoverDecomposition,
) -> Result<Vec<TypeClass>> {
    validate_decomposition(inst, decomp)?;
    let mut index: HashMap<Vec<(usize, u64, u64)>, usize> = HashMap::new();
    let mut types: Vec<TypeClass> = Vec::new();
    for &v in &decomp.independent {
        let mut profile: Vec<(usize, u64, u64)> = inst
            .incident_items(v)
            .iter()
            .map(|&item| {
                let e = inst.edge(item);
                let other = e.other_endpoint(v);
                (other, e.value_for(v), e.value_for(other))
            })
            .collect();
        profile.sort_unstable();
        match index.get(&profile) {
            Some(&t) => types[t].members.push(v),
            None => {
                index.insert(profile.clone(), types.len());
                types.push(TypeClass {
                    neighborhood: profile.iter().map(|&(other, _, _)| other).collect(),
                    signature: profile.iter().map(|&(_, own, cover)| (own, cover)).collect(),
                    members: vec![v],
                });
            }
        }
    }
    Ok(types)
}

/// All splits of a class member's edges that leave the member with at
/// least its best single item, sorted for the feasibility search: most
/// value handed to the cover first.
pub fn good_orientations(inst: &GraphicalInstance, class: &TypeClass) -> Vec<OrientationPattern> {
    let deg = class.neighborhood.len();
    assert!(
        deg < 60,
        "pattern enumeration over 2^{deg} splits cannot be completed"
    );
    let v_max = class
        .signature
        .iter()
        .map(|&(own, _)| own)
        .max()
        .unwrap_or(0);
    debug_assert!(
        class
            .members
            .iter()
            .all(|&v| inst.v_max(v).unwrap() == v_max),
        "a class signature carries every member's full edge set"
    );
    let mut patterns: Vec<(u64, OrientationPattern)> = Vec::new();
    for mask in 0u64..(1u64 << deg) {
        let mut vertex_utility = 0;
        let mut cover_utilities = vec![0u64; deg];
        for (j, slot) in cover_utilities.iter_mut().enumerate() {
            let (own, cover) = class.signature[j];
            if mask & (1 << j) != 0 {
                vertex_utility += own;
            } else {
                *slot = cover;
            }
        }
        if vertex_utility < v_max {
            continue;
        }
        let toward_vertex = (0..deg).map(|j| mask & (1 << j) != 0).collect();
        patterns.push((
            mask,
            OrientationPattern {
                toward_vertex,
                vertex_utility,
                cover_utilities,
            },
        ));
    }
    patterns.sort_by_key(|(mask, p)| {
        let handed_over: u64 = p.cover_utilities.iter().sum();
        (std::cmp::Reverse(handed_over), *mask)
    });
    patterns.into_iter().map(|(_, p)| p).collect()
}

// ---------------------------------------------------------------------------
// Model assembly
// ---------------------------------------------------------------------------

/// Where each model variable lives, for lifting a solution back out.
struct ModelLayout {
    /// Per class (empty for edgeless classes): one count variable per
    /// pattern, in pattern order.
    type_vars: Vec<Vec<usize>>,
    /// Items with both endpoints in the cover, ascending.
    cover_items: Vec<usize>,
    /// Per cover item: one 0/1 variable per cover agent, in cover order.
    item_vars: Vec<Vec<usize>>,
}

fn assemble(
    inst: &GraphicalInstance,
    decomp: &VertexCoverDecomposition,
    types: &[TypeClass],
    patterns: &[Vec<OrientationPattern>],
) -> Result<(IlpModel, ModelLayout)> {
    let mut model = IlpModel::new();
    let in_cover = {
        let mut flags = vec![false; inst.n_agents()];
        for &v in &decomp.cover {
            flags[v] = true;
        }
        flags
    };

    // Count variables: how many members of each class use each pattern.
    // Edgeless classes have nothing to orient and stay out of the model.
    let mut type_vars: Vec<Vec<usize>> = Vec::with_capacity(types.len());
    for (t, class) in types.iter().enumerate() {
        if class.neighborhood.is_empty() {
            type_vars.push(Vec::new());
            continue;
        }
        let n_members = class.n_members() as u64;
        let vars: Vec<usize> = patterns[t]
            .iter()
            .map(|_| model.add_var(0, n_members))
            .collect::<Result<_>>()?;
        // Every member uses exactly one pattern.
        model.add_constraint(vars.iter().map(|&v| (v, 1)).collect(), Cmp::Eq, n_members)?;
        type_vars.push(vars);
    }

    // Endpoint choices for edges inside the cover. A variable exists for
    // every cover agent, but the non-endpoints are pinned to zero: giving
    // such an agent the edge adds nothing to its required utility, and any
    // feasible placement of that kind stays feasible with the edge moved
    // to an endpoint — pinning keeps the lifted result an orientation.
    let mut cover_items = Vec::new();
    let mut item_vars: Vec<Vec<usize>> = Vec::new();
    for (item, e) in inst.edges().iter().enumerate() {
        if !(in_cover[e.a] && in_cover[e.b]) {
            continue;
        }
        cover_items.push(item);
        let vars: Vec<usize> = decomp
            .cover
            .iter()
            .map(|&i| {
                let hi = if e.is_endpoint(i) { 1 } else { 0 };
                model.add_var(0, hi)
            })
            .collect::<Result<_>>()?;
        // Each such item goes to exactly one cover agent.
        model.add_constraint(vars.iter().map(|&v| (v, 1)).collect(), Cmp::Eq, 1)?;
        item_vars.push(vars);
    }
    // Redundant with the per-item constraints, kept as a model-level
    // checksum: all cover items are placed.
    if !cover_items.is_empty() {
        let all: Vec<(usize, u64)> = item_vars
            .iter()
            .flatten()
            .map(|&v| (v, 1))
            .collect();
        model.add_constraint(all, Cmp::Eq, cover_items.len() as u64)?;
    }

    // Every cover agent must reach its best single item's value.
    for (ci, &agent) in decomp.cover.iter().enumerate() {
        let mut terms: Vec<(usize, u64)> = Vec::new();
        for (e_idx, &item) in cover_items.iter().enumerate() {
            terms.push((item_vars[e_idx][ci], inst.value_of(agent, item)));
        }
        for (t, class) in types.iter().enumerate() {
            let Ok(j) = class.neighborhood.binary_search(&agent) else {
                continue;
            };
            for (p, pattern) in patterns[t].iter().enumerate() {
                terms.push((type_vars[t][p], pattern.cover_utilities[j]));
            }
        }
        model.add_constraint(terms, Cmp::Ge, inst.v_max(agent)?)?;
    }

    Ok((
        model,
        ModelLayout {
            type_vars,
            cover_items,
            item_vars,
        },
    ))
}

/// The integer model whose feasibility is exactly the existence of an
/// envy-free allocation: per-class pattern counts, per-cover-item endpoint
/// choices, and the per-cover-agent utility floors.
pub fn build_ilp(
    inst: &GraphicalInstance,
    decomp: &VertexCoverDecomposition,
    types: &[TypeClass],
    patterns: &[Vec<OrientationPattern>],
) -> Result<IlpModel> {
    Ok(assemble(inst, decomp, types, patterns)?.0)
}

fn lift(
    inst: &GraphicalInstance,
    decomp: &VertexCoverDecomposition,
    types: &[TypeClass],
    patterns: &[Vec<OrientationPattern>],
    layout: &ModelLayout,
    assignment: &[u64],
) -> Allocation {
    let mut owners = vec![usize::MAX; inst.n_items()];
    for (t, class) in types.iter().enumerate() {
        let mut next_member = 0;
        for (p, &var) in layout.type_vars[t].iter().enumerate() {
            for _ in 0..assignment[var] {
                let v = class.members[next_member];
                next_member += 1;
                for &item in inst.incident_items(v) {
                    let other = inst.edge(item).other_endpoint(v);
                    let j = class
                        .neighborhood
                        .binary_search(&other)
                        .expect("every neighbor of a member is in the class neighborhood");
                    owners[item] = if patterns[t][p].toward_vertex[j] {
                        v
                    } else {
                        other
                    };
                }
            }
        }
        if !class.neighborhood.is_empty() {
            debug_assert_eq!(next_member, class.members.len());
        }
    }
    for (e_idx, &item) in layout.cover_items.iter().enumerate() {
        for (ci, &var) in layout.item_vars[e_idx].iter().enumerate() {
            if assignment[var] == 1 {
                owners[item] = decomp.cover[ci];
            }
        }
    }
    Allocation::new(owners)
}

/// Decides envy-freeness exactly and produces an envy-free orientation
/// when one exists. Runtime is exponential in the cover size and the
/// number of distinct values, not in the number of agents; instances with
/// more than [`DEFAULT_VALUE_CAP`] distinct values are rejected.
pub fn solve_ef_fpt(inst: &GraphicalInstance) -> Result<Option<Allocation>> {
    solve_ef_fpt_capped(inst, DEFAULT_VALUE_CAP)
}

/// [`solve_ef_fpt`] with an explicit cap on the number of distinct values.
pub fn solve_ef_fpt_capped(inst: &GraphicalInstance, cap: usize) -> Result<Option<Allocation>> {
    let distinct = inst.distinct_values().len();
    if distinct > cap {
        return Err(Error::TooManyValues { distinct, cap });
    }
    let decomp = min_vertex_cover(inst);
    let types = classify_types(inst, &decomp)?;
    let patterns: Vec<Vec<OrientationPattern>> = types
        .iter()
        .map(|class| good_orientations(inst, class))
        .collect();
    let (model, layout) = assemble(inst, &decomp, &types, &patterns)?;
    let Some(assignment) = ilp_feasible(&model) else {
        return Ok(None);
    };
    let allocation = lift(inst, &decomp, &types, &patterns, &layout, &assignment);
    debug_assert!(inst.is_orientation(&allocation).unwrap_or(false));
    debug_assert!(inst.is_envy_free(&allocation).unwrap_or(false));
    Ok(Some(allocation))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binary::solve_ef_binary;
    use crate::fixtures;
    use crate::instance::EdgeItem;

    #[test]
    fn minimum_covers_are_exact_and_lexicographically_smallest() {
        let triangle = fixtures::triangle_symmetric_unit();
        let d = min_vertex_cover(&triangle);
        assert_eq!(d.cover, vec![0, 1]);
        assert_eq!(d.independent, vec![2]);
        assert_eq!(d.k, 2);

        let star = fixtures::star(3);
        let d = min_vertex_cover(&star);
        assert_eq!(d.cover, vec![0]);
        assert_eq!(d.independent, vec![1, 2, 3]);

        let path = fixtures::path3_symmetric_unit();
        assert_eq!(min_vertex_cover(&path).cover, vec![1]);

        let edgeless = GraphicalInstance::new(3, vec![]).unwrap();
        let d = min_vertex_cover(&edgeless);
        assert_eq!(d.cover, Vec::<usize>::new());
        assert_eq!(d.independent, vec![0, 1, 2]);

        let matching = GraphicalInstance::new(
            4,
            vec![EdgeItem::new(0, 1, 1, 1), EdgeItem::new(2, 3, 1, 1)],
        )
        .unwrap();
        assert_eq!(min_vertex_cover(&matching).cover, vec![0, 2]);
    }

    #[test]
    fn classification_groups_by_neighborhood_and_both_value_sides() {
        let star = fixtures::star(3);
        let types = classify_types(&star, &min_vertex_cover(&star)).unwrap();
        assert_eq!(types.len(), 1);
        assert_eq!(types[0].members, vec![1, 2, 3]);
        assert_eq!(types[0].neighborhood, vec![0]);
        assert_eq!(types[0].signature, vec![(1, 3)]);

        let path = fixtures::path3_symmetric_unit();
        let types = classify_types(&path, &min_vertex_cover(&path)).unwrap();
        assert_eq!(types.len(), 1);
        assert_eq!(types[0].members, vec![0, 2]);

        // Same neighborhood and same own-side values, but the cover agent
        // values the two edges differently: the leaves are not
        // interchangeable and must split into two classes.
        let lopsided = GraphicalInstance::new(
            3,
            vec![EdgeItem::new(0, 1, 5, 1), EdgeItem::new(0, 2, 7, 1)],
        )
        .unwrap();
        let types = classify_types(&lopsided, &min_vertex_cover(&lopsided)).unwrap();
        assert_eq!(types.len(), 2);
        assert_eq!(types[0].signature, vec![(1, 5)]);
        assert_eq!(types[1].signature, vec![(1, 7)]);
    }

    #[test]
    fn invalid_decompositions_are_rejected() {
        let triangle = fixtures::triangle_symmetric_unit();
        let bogus = VertexCoverDecomposition {
            cover: vec![0],
            independent: vec![1, 2],
            k: 1,
        };
        assert!(classify_types(&triangle, &bogus).is_err());
    }

    #[test]
    fn pattern_enumeration_applies_the_best_item_floor() {
        let triangle = fixtures::triangle_symmetric_unit();
        let decomp = min_vertex_cover(&triangle);
        let types = classify_types(&triangle, &decomp).unwrap();
        // Degree 2, both edges worth 1: only the split keeping nothing is
        // excluded.
        assert_eq!(good_orientations(&triangle, &types[0]).len(), 3);

        let star = fixtures::star(3);
        let types = classify_types(&star, &min_vertex_cover(&star)).unwrap();
        let patterns = good_orientations(&star, &types[0]);
        assert_eq!(patterns.len(), 1);
        assert_eq!(patterns[0].toward_vertex, vec![true]);

        // A member that values nothing can split any way at all.
        let indifferent = GraphicalInstance::new(
            3,
            vec![EdgeItem::new(0, 1, 0, 0), EdgeItem::new(0, 2, 1, 1)],
        )
        .unwrap();
        let types = classify_types(&indifferent, &min_vertex_cover(&indifferent)).unwrap();
        let zero_class = types
            .iter()
            .find(|c| c.members == vec![1])
            .expect("agent 1 forms its own class");
        assert_eq!(good_orientations(&indifferent, zero_class).len(), 2);
    }

    #[test]
    fn model_shapes_match_the_construction() {
        let star = fixtures::star(3);
        let decomp = min_vertex_cover(&star);
        let types = classify_types(&star, &decomp).unwrap();
        let patterns: Vec<_> = types
            .iter()
            .map(|c| good_orientations(&star, c))
            .collect();
        let model = build_ilp(&star, &decomp, &types, &patterns).unwrap();
        // One admissible pattern, no cover-internal edges.
        assert_eq!(model.n_vars(), 1);
        assert!(crate::ilp::ilp_feasible(&model).is_none());

        let triangle = fixtures::triangle_symmetric_unit();
        let decomp = min_vertex_cover(&triangle);
        let types = classify_types(&triangle, &decomp).unwrap();
        let patterns: Vec<_> = types
            .iter()
            .map(|c| good_orientations(&triangle, c))
            .collect();
        let model = build_ilp(&triangle, &decomp, &types, &patterns).unwrap();
        // Three pattern counters plus one 0/1 variable per cover agent for
        // the cover-internal edge.
        assert_eq!(model.n_vars(), 5);
        assert!(crate::ilp::ilp_feasible(&model).is_some());
    }

    #[test]
    fn solver_agrees_with_the_binary_solver_on_binary_instances() {
        let instances = vec![
            fixtures::path3_symmetric_unit(),
            fixtures::triangle_symmetric_unit(),
            fixtures::single_edge(1, 1),
            fixtures::single_edge(1, 0),
            fixtures::single_edge(0, 0),
            GraphicalInstance::new(
                4,
                vec![
                    EdgeItem::new(0, 1, 1, 1),
                    EdgeItem::new(1, 2, 1, 1),
                    EdgeItem::new(2, 3, 1, 1),
                    EdgeItem::new(3, 0, 1, 1),
                ],
            )
            .unwrap(),
        ];
        for inst in &instances {
            let via_cover = solve_ef_fpt(inst).unwrap();
            let via_structure = solve_ef_binary(inst).unwrap();
            assert_eq!(via_cover.is_some(), via_structure.is_some());
            if let Some(allocation) = via_cover {
                assert!(inst.is_envy_free(&allocation).unwrap());
                assert!(inst.is_orientation(&allocation).unwrap());
            }
        }
    }

    #[test]
    fn named_examples_resolve_correctly() {
        assert!(solve_ef_fpt(&fixtures::path3_symmetric_unit())
            .unwrap()
            .is_none());
        assert!(solve_ef_fpt(&fixtures::star(3)).unwrap().is_none());

        let cycle4 = GraphicalInstance::new(
            4,
            vec![
                EdgeItem::new(0, 1, 1, 1),
                EdgeItem::new(1, 2, 1, 1),
                EdgeItem::new(2, 3, 1, 1),
                EdgeItem::new(3, 0, 1, 1),
            ],
        )
        .unwrap();
        let allocation = solve_ef_fpt(&cycle4).unwrap().unwrap();
        assert_eq!(allocation.owners(), &[1, 2, 3, 0]);

        // Two agents both needing the same heavy edge cannot both be
        // served.
        let contested = GraphicalInstance::new(
            3,
            vec![
                EdgeItem::new(0, 1, 3, 3),
                EdgeItem::new(1, 2, 1, 1),
                EdgeItem::new(2, 0, 1, 1),
            ],
        )
        .unwrap();
        assert!(solve_ef_fpt(&contested).unwrap().is_none());
    }

    #[test]
    fn utilities_in_lifted_solutions_reach_every_best_item() {
        let triangle = fixtures::triangle_symmetric_unit();
        let allocation = solve_ef_fpt(&triangle).unwrap().unwrap();
        let utilities = triangle.own_utilities(&allocation).unwrap();
        for (agent, &utility) in utilities.iter().enumerate() {
            assert!(utility >= triangle.v_max(agent).unwrap());
        }
    }

    #[test]
    fn value_cap_is_enforced_by_distinct_value_count() {
        let edges = (1..=9)
            .map(|i| EdgeItem::new(0, i, i as u64, 1))
            .collect();
        let many = GraphicalInstance::new(10, edges).unwrap();
        let err = solve_ef_fpt(&many).unwrap_err();
        assert!(matches!(
            err,
            Error::TooManyValues {
                distinct: 10,
                cap: 8
            }
        ));
        // A wider cap lets the same instance through (to a verdict).
        assert!(solve_ef_fpt_capped(&many, 10).is_ok());
    }

    #[test]
    fn worthless_edges_are_oriented_too() {
        let inst = GraphicalInstance::new(
            3,
            vec![EdgeItem::new(0, 1, 1, 1), EdgeItem::new(1, 2, 0, 0)],
        )
        .unwrap();
        // Agents 0 and 1 both need the only valued edge: no envy-free
        // allocation exists.
        assert!(solve_ef_fpt(&inst).unwrap().is_none());

        let solvable = GraphicalInstance::new(
            3,
            vec![EdgeItem::new(0, 1, 1, 0), EdgeItem::new(1, 2, 0, 0)],
        )
        .unwrap();
        let allocation = solve_ef_fpt(&solvable).unwrap().unwrap();
        assert!(solvable.is_orientation(&allocation).unwrap());
        assert!(solvable.is_envy_free(&allocation).unwrap());
    }
}
