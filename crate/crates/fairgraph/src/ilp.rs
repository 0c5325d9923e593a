//! A small exact integer feasibility engine.
//!
//! Models are bounded-domain integer variables under linear constraints
//! with nonnegative coefficients. `ilp_feasible` decides feasibility by
//! backtracking over the variable domains, interleaved with interval
//! propagation that shrinks domains until a fixpoint; the search is
//! exhaustive, so absence of a solution is a proof of infeasibility. It is
//! built for the small models the cover-parameterized solver produces, not
//! for general-purpose optimization.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cmp {
    Eq,
    Ge,
    Le,
}

/// `Σ coefficient·variable  cmp  rhs`, coefficients nonnegative.
#[derive(Debug, Clone)]
pub struct LinearConstraint {
    pub terms: Vec<(usize, u64)>,
    pub cmp: Cmp,
    pub rhs: u64,
}

#[derive(Debug, Clone)]
pub struct IlpModel {
    /// Inclusive domain per variable.
    bounds: Vec<(u64, u64)>,
    constraints: Vec<LinearConstraint>,
}

impl IlpModel {
    pub fn new() -> Self {
        IlpModel {
            bounds: Vec::new(),
            constraints: Vec::new(),
        }
    }

    /// Adds a variable with inclusive domain `[lo, hi]`; returns its index.
    pub fn add_var(&mut self, lo: u64, hi: u64) -> Result<usize> {
        if lo > hi {
            return Err(Error::InvalidInput(format!(
                "variable domain [{lo}, {hi}] is empty"
            )));
        }
        self.bounds.push((lo, hi));
        Ok(self.bounds.len() - 1)
    }

    /// Adds `Σ coefficient·variable cmp rhs`. Zero-coefficient terms are
    /// dropped, repeated variables merged; variable indices must exist.
    pub fn add_constraint(
        &mut self,
        terms: Vec<(usize, u64)>,
        cmp: Cmp,
        rhs: u64,
    ) -> Result<()> {
        for &(var, _) in &terms {
            if var >= self.bounds.len() {
                return Err(Error::InvalidInput(format!(
                    "constraint references unknown variable {var}"
                )));
            }
        }
        let mut terms: Vec<(usize, u64)> = terms.into_iter().filter(|&(_, c)| c != 0).collect();
        terms.sort_unstable_by_key(|&(var, _)| var);
        terms.dedup_by(|later, earlier| {
            if later.0 == earlier.0 {
                earlier.1 += later.1;
                true
            } else {
                false
            }
        });
        self.constraints.push(LinearConstraint { terms, cmp, rhs });
        Ok(())
    }

    pub fn n_vars(&self) -> usize {
        self.bounds.len()
    }

    pub fn constraints(&self) -> &[LinearConstraint] {
        &self.constraints
    }
}

impl Default for IlpModel {
    fn default() -> Self {
        Self::new()
    }
}

/// Tightens every domain against every constraint until nothing changes.
/// Returns `false` when some domain empties or a constraint can no longer
/// be met.
fn propagate(model: &IlpModel, bounds: &mut [(u64, u64)]) -> bool {
    loop {
        let mut changed = false;
        for c in &model.constraints {
            let sum_min: u128 = c
                .terms
                .iter()
                .map(|&(v, coef)| coef as u128 * bounds[v].0 as u128)
                .sum();
            let sum_max: u128 = c
                .terms
                .iter()
                .map(|&(v, coef)| coef as u128 * bounds[v].1 as u128)
                .sum();
            let rhs = c.rhs as u128;
            let need_lower = matches!(c.cmp, Cmp::Eq | Cmp::Ge);
            let need_upper = matches!(c.cmp, Cmp::Eq | Cmp::Le);
            if need_lower && sum_max < rhs {
                return false;
            }
            if need_upper && sum_min > rhs {
                return false;
            }
            for &(v, coef) in &c.terms {
                let coef = coef as u128;
                let (lo, hi) = bounds[v];
                // The rest of the constraint, with this variable removed.
                let others_min = sum_min - coef * lo as u128;
                let others_max = sum_max - coef * hi as u128;
                if need_upper {
                    // coef·x ≤ rhs − others_min
                    let cap = rhs.saturating_sub(others_min) / coef;
                    if cap < hi as u128 {
                        let cap = cap as u64;
                        if cap < lo {
                            return false;
                        }
                        bounds[v].1 = cap;
                        changed = true;
                    }
                }
                if need_lower && others_max < rhs {
                    // coef·x ≥ rhs − others_max
                    let need = rhs - others_max;
                    let floor = need.div_ceil(coef);
                    if floor > hi as u128 {
                        return false;
                    }
                    let floor = floor as u64;
                    if floor > bounds[v].0 {
                        bounds[v].0 = floor;
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            return true;
        }
    }
}

fn search(model: &IlpModel, bounds: &[(u64, u64)]) -> Option<Vec<u64>> {
    let mut bounds = bounds.to_vec();
    if !propagate(model, &mut bounds) {
        return None;
    }
    let branch_var = bounds.iter().position(|&(lo, hi)| lo < hi);
    let Some(var) = branch_var else {
        // Every domain is a single value; propagation kept all constraints
        // satisfiable, but equalities need a final exact check.
        let assignment: Vec<u64> = bounds.iter().map(|&(lo, _)| lo).collect();
        let ok = model.constraints.iter().all(|c| {
            let lhs: u128 = c
                .terms
                .iter()
                .map(|&(v, coef)| coef as u128 * assignment[v] as u128)
                .sum();
            match c.cmp {
                Cmp::Eq => lhs == c.rhs as u128,
                Cmp::Ge => lhs >= c.rhs as u128,
                Cmp::Le => lhs <= c.rhs as u128,
            }
        });
        return ok.then_some(assignment);
    };
    // Large values first: the models this engine serves mostly need sums
    // pushed up past lower bounds, so this tends to hit feasibility early.
    let (lo, hi) = bounds[var];
    let mut value = hi;
    loop {
        let mut child = bounds.clone();
        child[var] = (value, value);
        if let Some(solution) = search(model, &child) {
            return Some(solution);
        }
        if value == lo {
            return None;
        }
        value -= 1;
    }
}

/// An assignment satisfying every constraint, or `None` when the model is
/// infeasible. Exhaustive: `None` is a proof.
pub fn ilp_feasible(model: &IlpModel) -> Option<Vec<u64>> {
    search(model, &model.bounds)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_model_is_feasible_with_empty_assignment() {
        let model = IlpModel::new();
        assert_eq!(ilp_feasible(&model), Some(vec![]));
    }

    #[test]
    fn contradictory_single_variable_is_infeasible() {
        let mut model = IlpModel::new();
        let x = model.add_var(0, 1).unwrap();
        model.add_constraint(vec![(x, 1)], Cmp::Ge, 1).unwrap();
        model.add_constraint(vec![(x, 1)], Cmp::Le, 0).unwrap();
        assert_eq!(ilp_feasible(&model), None);
    }

    #[test]
    fn equalities_are_exact_not_interval_approximate() {
        // 2x = 3 has interval-consistent bounds (x ∈ [1,1] fails, x ∈ [0,2]
        // looks fine) but no integer solution.
        let mut model = IlpModel::new();
        let x = model.add_var(0, 2).unwrap();
        model.add_constraint(vec![(x, 2)], Cmp::Eq, 3).unwrap();
        assert_eq!(ilp_feasible(&model), None);
    }

    #[test]
    fn small_system_with_interplay_is_solved() {
        // x + y = 5, 2x + y ≥ 8, y ≥ 1  →  x = 4, y = 1 is the only
        // solution with x ≤ 4.
        let mut model = IlpModel::new();
        let x = model.add_var(0, 4).unwrap();
        let y = model.add_var(0, 10).unwrap();
        model
            .add_constraint(vec![(x, 1), (y, 1)], Cmp::Eq, 5)
            .unwrap();
        model
            .add_constraint(vec![(x, 2), (y, 1)], Cmp::Ge, 8)
            .unwrap();
        model.add_constraint(vec![(y, 1)], Cmp::Ge, 1).unwrap();
        assert_eq!(ilp_feasible(&model), Some(vec![4, 1]));
    }

    #[test]
    fn propagation_tightens_before_branching() {
        // x ∈ [0, 100], y ∈ [0, 100], x + y ≤ 1, x + y ≥ 1: solved without
        // visiting anything like 100 branches; also checks Ge/Le interplay.
        let mut model = IlpModel::new();
        let x = model.add_var(0, 100).unwrap();
        let y = model.add_var(0, 100).unwrap();
        model
            .add_constraint(vec![(x, 1), (y, 1)], Cmp::Le, 1)
            .unwrap();
        model
            .add_constraint(vec![(x, 1), (y, 1)], Cmp::Ge, 1)
            .unwrap();
        let solution = ilp_feasible(&model).unwrap();
        assert_eq!(solution[0] + solution[1], 1);
    }

    #[test]
    fn zero_coefficients_are_ignored() {
        let mut model = IlpModel::new();
        let x = model.add_var(0, 0).unwrap();
        model.add_constraint(vec![(x, 0)], Cmp::Ge, 5).unwrap();
        // The constraint reduces to 0 ≥ 5 with no terms: infeasible.
        assert_eq!(ilp_feasible(&model), None);
    }

    #[test]
    fn bad_inputs_are_rejected() {
        let mut model = IlpModel::new();
        assert!(model.add_var(3, 2).is_err());
        assert!(model.add_constraint(vec![(7, 1)], Cmp::Eq, 0).is_err());
    }
}
