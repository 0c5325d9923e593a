//! Moving envy-free allocations onto the graph, and the threshold test for
//! envy-freeness of non-wasteful allocations.
//!
//! An *orientation* holds every item at one of its two endpoints. Whenever an
//! envy-free allocation exists at all, an envy-free orientation does too:
//! relocating every item held by a non-endpoint to an endpoint preserves
//! envy-freeness, provided all such items move at once. The holders lose
//! nothing (a non-endpoint values its item at zero), so no agent's utility
//! drops; and after the sweep an agent `x` can value at most one item in any
//! other bundle — the single edge between the two agents — whose value was
//! already covered by `x`'s utility in the input allocation.

use crate::error::{Error, Result};
use crate::instance::{Allocation, GraphicalInstance};

/// Rewrites an envy-free allocation into an envy-free orientation by moving
/// every item held away from the graph to its lowest-indexed endpoint.
/// Items already held by an endpoint stay put, even when that endpoint
/// values them at zero. Fails with [`Error::Precondition`] when the input is
/// not envy-free.
pub fn to_orientation(inst: &GraphicalInstance, allocation: &Allocation) -> Result<Allocation> {
    if !inst.is_envy_free(allocation)? {
        return Err(Error::Precondition(
            "orientation extraction needs an envy-free allocation".into(),
        ));
    }
    let owners = allocation
        .owners()
        .iter()
        .enumerate()
        .map(|(item, &owner)| {
            let e = inst.edge(item);
            if e.is_endpoint(owner) {
                owner
            } else {
                e.min_endpoint()
            }
        })
        .collect();
    Ok(Allocation::new(owners))
}

/// Envy-freeness test for non-wasteful allocations: such an allocation is
/// envy-free exactly when every agent's utility reaches the value of its
/// single best item. Fails with [`Error::Precondition`] when the allocation
/// is wasteful, where the equivalence does not hold.
pub fn ef_via_vmax(inst: &GraphicalInstance, allocation: &Allocation) -> Result<bool> {
    if !inst.is_non_wasteful(allocation)? {
        return Err(Error::Precondition(
            "the single-item envy threshold only applies to non-wasteful allocations".into(),
        ));
    }
    let utilities = inst.own_utilities(allocation)?;
    for (agent, &utility) in utilities.iter().enumerate() {
        if utility < inst.v_max(agent)? {
            return Ok(false);
        }
    }
    Ok(true)
}
